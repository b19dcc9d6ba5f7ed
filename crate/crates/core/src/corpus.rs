//! Built-in objects and widened inclusions used by the verify suites.

use std::sync::Arc;

use crate::error::Result;
use crate::isohorn::{isohorn, isoplex};
use crate::kernel::category::FiniteCategory;
use crate::kernel::label::Label;
use crate::kernel::map::{Inclusion, SimplicialMap};
use crate::kernel::ops::skeleton;
use crate::kernel::sset::SSet;
use crate::kernel::standard::{boundary, delta, horn, interval_nerve};
use crate::lifting::product::boundary_inclusion;
use crate::widening::WidenedInclusion;

pub type Named<T> = (String, T);

/// `Δ[n]`, `∂Δ[n]` for `n ≤ 3`, the horns of `Δ[2]`, `J`, `sk₁J`, `V₀[2]`,
/// `∇₀[2]` and the nerves of `[2]`, `𝕀` and `ℤ/2`.
pub fn objects(dim: usize) -> Result<Vec<Named<Arc<SSet>>>> {
    let mut out: Vec<Named<Arc<SSet>>> = Vec::new();
    for n in 0..=3 {
        out.push((format!("delta({n})"), Arc::new(delta(n, dim))));
    }
    for n in 0..=3 {
        out.push((format!("boundary({n})"), Arc::new(boundary(n, dim)?)));
    }
    for k in 0..=2 {
        out.push((format!("horn(2,{k})"), Arc::new(horn(2, k, dim)?)));
    }
    let j = Arc::new(interval_nerve(dim));
    out.push(("J".into(), j.clone()));
    out.push(("sk1(J)".into(), skeleton(&j, 1.min(dim))?.domain().clone()));
    out.push(("isohorn(2,0)".into(), isohorn(2, 0, dim)?.body().clone()));
    out.push(("isoplex(2,0)".into(), isoplex(2, 0, dim)?.body().clone()));
    out.push(("nerve([2])".into(), Arc::new(FiniteCategory::chain(2).nerve(dim))));
    out.push(("nerve(I)".into(), Arc::new(FiniteCategory::interval_groupoid().nerve(dim))));
    out.push(("nerve(Z/2)".into(), Arc::new(FiniteCategory::cyclic_group(2)?.nerve(dim))));
    Ok(out)
}

fn tuple(vs: &[u32]) -> Label {
    Label::Tuple(vs.to_vec())
}

fn widened(inner: Inclusion, marked: &[u32]) -> Result<WidenedInclusion> {
    let nu: Vec<Label> = marked.iter().map(|&v| tuple(&[v])).collect();
    crate::widening::widened_inclusion(&inner, &nu)
}

fn sub(x: SSet, y: SSet) -> Result<Inclusion> {
    Inclusion::by_labels(Arc::new(x), Arc::new(y))
}

/// Twenty widened inclusions: every iso-horn inclusion with `n ≤ 3`, the
/// members `𝒜(0..=2)` and assorted subcomplexes of small simplices.
pub fn widened_inclusions(dim: usize) -> Result<Vec<Named<WidenedInclusion>>> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for i in 0..n {
            out.push((format!("isohorn({n},{i})"), isohorn(n, i, dim)?.widened().clone()));
        }
    }
    for n in 0..=2u32 {
        let all: Vec<u32> = (0..=n).collect();
        out.push((format!("class_A({n})"), widened(boundary_inclusion(n as usize, dim)?, &all)?));
    }
    let point_at_0 = {
        let y = Arc::new(delta(1, dim));
        let x = Arc::new(delta(0, dim));
        Inclusion::new(SimplicialMap::from_vertex_map(x, y, &[0])?)?
    };
    let cases: Vec<(&str, Inclusion, Vec<u32>)> = vec![
        ("boundary(2)->delta(2) at {0,2}", boundary_inclusion(2, dim)?, vec![0, 2]),
        ("boundary(2)->delta(2) at {0,1}", boundary_inclusion(2, dim)?, vec![0, 1]),
        ("horn(2,0)->delta(2) at {0}", sub(horn(2, 0, dim)?, delta(2, dim))?, vec![0]),
        ("horn(2,0)->delta(2) at {1,2}", sub(horn(2, 0, dim)?, delta(2, dim))?, vec![1, 2]),
        ("horn(2,1)->delta(2) at {1}", sub(horn(2, 1, dim)?, delta(2, dim))?, vec![1]),
        ("horn(2,2)->delta(2) at {0,1,2}", sub(horn(2, 2, dim)?, delta(2, dim))?, vec![0, 1, 2]),
        ("delta(0)->delta(1) at {1}", point_at_0.clone(), vec![1]),
        ("delta(0)->delta(1) at {0,1}", point_at_0, vec![0, 1]),
        ("delta(1)->delta(1) at {0}", Inclusion::identity(Arc::new(delta(1, dim))), vec![0]),
        ("boundary(1)->boundary(2) at {2}", sub(boundary(1, dim)?, boundary(2, dim)?)?, vec![2]),
        ("boundary(3)->delta(3) at {1,2}", boundary_inclusion(3, dim)?, vec![1, 2]),
    ];
    for (name, inc, marked) in cases {
        out.push((name.to_string(), widened(inc, &marked)?));
    }
    Ok(out)
}

/// Inclusions with a narrow vertex, for cell decompositions.
pub fn single_narrow_cases(dim: usize) -> Result<Vec<(String, Inclusion, Label)>> {
    let point_at_0 = {
        let y = Arc::new(delta(1, dim));
        let x = Arc::new(delta(0, dim));
        Inclusion::new(SimplicialMap::from_vertex_map(x, y, &[0])?)?
    };
    Ok(vec![
        ("boundary(1)->delta(1) at 0".into(), boundary_inclusion(1, dim)?, tuple(&[0])),
        ("delta(0)->delta(1) at 0".into(), point_at_0.clone(), tuple(&[0])),
        ("delta(0)->delta(1) at 1".into(), point_at_0, tuple(&[1])),
        ("boundary(2)->delta(2) at 1".into(), boundary_inclusion(2, dim)?, tuple(&[1])),
        ("boundary(2)->delta(2) at 2".into(), boundary_inclusion(2, dim)?, tuple(&[2])),
        ("horn(2,0)->delta(2) at 0".into(), sub(horn(2, 0, dim)?, delta(2, dim))?, tuple(&[0])),
        ("delta(2)->delta(2) at 1".into(), Inclusion::identity(Arc::new(delta(2, dim))), tuple(&[1])),
        ("boundary(0)->delta(1) at 1".into(), sub(boundary(0, dim)?, delta(1, dim))?, tuple(&[1])),
    ])
}
