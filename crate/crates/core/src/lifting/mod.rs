//! Pushout-products, lifting problems and truncated right-lifting checks.

pub mod lift;
pub mod product;

pub use lift::{
    check_rlp, equivalence_report, family_members, lift_through_decomposition, solve_lift, EquivalenceReport,
    EquivalenceRow, Family, LiftingProblem, MemberVerdict, RlpReport, Witness,
};
pub use product::{boundary_inclusion, class_a, point_into_j, pushout_product};
