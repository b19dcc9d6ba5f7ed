//! Standard simplices, their boundaries and horns, and J.

use std::sync::Arc;

use super::label::Label;
use super::sset::SSet;
use super::subcomplex::Subcomplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Simplex,
    Boundary,
    IntervalGroupoidNerve,
}

/// Builds Δ[n], ∂Δ[n] or J truncated at `dim`. `n` is ignored for J.
pub fn make_standard(kind: StandardKind, n: Option<usize>, dim: usize) -> Result<SSet> {
    match kind {
        StandardKind::IntervalGroupoidNerve => Ok(interval_nerve(dim)),
        StandardKind::Simplex | StandardKind::Boundary => {
            let n = n.ok_or_else(|| Error::InvalidArgument("a simplex dimension is required".into()))?;
            if kind == StandardKind::Simplex {
                Ok(delta(n, dim))
            } else {
                boundary(n, dim)
            }
        }
    }
}

/// Monotone sequences of length `len` with entries in `0..=n`.
fn monotone_sequences(n: usize, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(n: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=n {
            cur.push(v);
            rec(n, len, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, len, &mut cur, &mut out);
    out
}

fn delete_at<T: Clone>(xs: &[T], i: usize) -> Vec<T> {
    let mut v = xs.to_vec();
    v.remove(i);
    v
}

fn repeat_at<T: Clone>(xs: &[T], i: usize) -> Vec<T> {
    let mut v = xs.to_vec();
    v.insert(i, xs[i].clone());
    v
}

/// The standard `n`-simplex; its `m`-simplices are monotone sequences.
pub fn delta(n: usize, dim: usize) -> SSet {
    let labels = (0..=dim)
        .map(|m| monotone_sequences(n, m + 1).into_iter().map(Label::Tuple).collect())
        .collect();
    let face = |_: usize, i: usize, l: &Label| match l {
        Label::Tuple(vs) => Label::Tuple(delete_at(vs, i)),
        _ => unreachable!(),
    };
    let degen = |_: usize, i: usize, l: &Label| match l {
        Label::Tuple(vs) => Label::Tuple(repeat_at(vs, i)),
        _ => unreachable!(),
    };
    SSet::from_fns(dim, labels, face, degen).expect("standard simplex tables are closed")
}

fn delta_subcomplex(n: usize, dim: usize, keep: impl Fn(&[u32]) -> bool) -> Result<SSet> {
    let d = Arc::new(delta(n, dim));
    let a = d.clone();
    let sub = Subcomplex::from_fn(d, |m, k| match a.label(m, k) {
        Label::Tuple(vs) => keep(vs),
        _ => false,
    });
    Ok(Arc::unwrap_or_clone(sub.to_sset()?))
}

fn missing_vertices(n: usize, vs: &[u32]) -> impl Iterator<Item = u32> + '_ {
    (0..=n as u32).filter(move |v| !vs.contains(v))
}

/// ∂Δ[n]: simplices missing at least one vertex. ∂Δ[0] is empty.
pub fn boundary(n: usize, dim: usize) -> Result<SSet> {
    delta_subcomplex(n, dim, |vs| missing_vertices(n, vs).next().is_some())
}

/// The horn Λ^n_k: the union of the faces of Δ[n] other than the k-th.
pub fn horn(n: usize, k: usize, dim: usize) -> Result<SSet> {
    if n == 0 || k > n {
        return Err(Error::InvalidArgument(format!("no horn Λ^{n}_{k}")));
    }
    delta_subcomplex(n, dim, |vs| missing_vertices(n, vs).any(|v| v as usize != k))
}

/// J, the nerve of the free-living isomorphism, with bit-vector labels.
pub fn interval_nerve(dim: usize) -> SSet {
    let labels = (0..=dim)
        .map(|n| (0..1u64 << (n + 1)).map(|m| Label::bits_from_mask(m, n + 1)).collect())
        .collect();
    let face = |_: usize, i: usize, l: &Label| match l {
        Label::Bits(bs) => Label::Bits(delete_at(bs, i)),
        _ => unreachable!(),
    };
    let degen = |_: usize, i: usize, l: &Label| match l {
        Label::Bits(bs) => Label::Bits(repeat_at(bs, i)),
        _ => unreachable!(),
    };
    SSet::from_fns(dim, labels, face, degen).expect("J tables are closed")
}

/// The terminal object: one simplex in each dimension.
pub fn terminal(dim: usize) -> SSet {
    delta(0, dim)
}

/// Index of a bit vector in J's label order.
pub fn bits_index(bits: &[u8]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
}
