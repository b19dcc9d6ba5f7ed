//! Pushout-products of inclusions and the generating class 𝒜.

use std::sync::Arc;

use crate::error::Result;
use crate::kernel::map::{Inclusion, SimplicialMap};
use crate::kernel::ops::product;
use crate::kernel::standard::{boundary, delta, interval_nerve, terminal};
use crate::kernel::subcomplex::Subcomplex;

/// For `f : A ↪ B` and `g : W ↪ Z`, the inclusion `(A×Z) ∪ (B×W) ↪ B×Z`.
///
/// The first factor comes from `f`, so `({0}↪J) □ (X↪Y)` lives in `J×Y`
/// with the same pair labels as the widenings of `Y`.
pub fn pushout_product(f: &Inclusion, g: &Inclusion) -> Result<Inclusion> {
    let prod = Arc::new(product(f.codomain(), g.codomain())?);
    let (in_a, in_w) = (f.image_mask(), g.image_mask());
    let cz = g.codomain().counts();
    Subcomplex::from_fn(prod, |n, k| in_a[n][k / cz[n]] || in_w[n][k % cz[n]]).to_inclusion()
}

/// The vertex inclusion `{0} ↪ J`.
pub fn point_into_j(dim: usize) -> Inclusion {
    let j = Arc::new(interval_nerve(dim));
    let pt = Arc::new(terminal(dim));
    Inclusion::new(SimplicialMap::from_vertex_map(pt, j, &[0]).expect("J is vertex determined"))
        .expect("a point includes")
}

/// `∂Δ[n] ↪ Δ[n]`.
pub fn boundary_inclusion(n: usize, dim: usize) -> Result<Inclusion> {
    Inclusion::by_labels(Arc::new(boundary(n, dim)?), Arc::new(delta(n, dim)))
}

/// `({0} ↪ J) □ (∂Δ[n] ↪ Δ[n])`.
pub fn class_a(n: usize, dim: usize) -> Result<Inclusion> {
    pushout_product(&point_into_j(dim), &boundary_inclusion(n, dim)?)
}
