//! Finite, dimension-truncated simplicial sets with widenings, iso-horns and
//! brute-force lifting-property checks.
//!
//! Every object carries a dimension cap `D` and all answers are statements
//! about dimensions `0..=D`.

pub mod corpus;
pub mod diagram;
pub mod error;
pub mod isohorn;
pub mod kernel;
pub mod lifting;
pub mod verify;
pub mod widening;

pub use error::{Error, Result};
pub use kernel::category::{CategoryDoc, FiniteCategory, MorphismDoc};
pub use kernel::iso::{are_isomorphic, find_isomorphism};
pub use kernel::label::Label;
pub use kernel::map::{Inclusion, MapDoc, SimplicialMap};
pub use kernel::ops::{
    coproduct, full_subcomplex, nondegenerate_simplices, pairing, product, projections, pushout, skeleton, Pushout,
};
pub use kernel::sset::{SSet, SSetDoc};
pub use kernel::standard::{make_standard, StandardKind};
pub use kernel::subcomplex::Subcomplex;
pub use kernel::validate::{validate_map, validate_sset, ValidationReport, Violation};
pub use isohorn::{
    decompose_single_narrow, isohorn, isoplex, isoplex_face, verify_decomposition, CellDecomposition, FaceKind,
    IsoHorn, Isoplex,
};
pub use lifting::{
    check_rlp, class_a, equivalence_report, pushout_product, solve_lift, EquivalenceReport, Family, LiftingProblem,
    RlpReport,
};
pub use verify::{run_suite, Suite, SuiteReport};
pub use widening::{
    decompose_to_single, factor_widened, is_narrow, partial_projection, retract_witness, retraction, widen,
    widened_inclusion, widening_iso, WidenedInclusion, Widening,
};
