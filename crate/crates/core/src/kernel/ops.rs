//! Products, coproducts, full subcomplexes, skeleta and pushouts.

use std::sync::Arc;

use super::label::Label;
use super::map::{Inclusion, SimplicialMap};
use super::sset::SSet;
use super::subcomplex::Subcomplex;
use crate::error::{Error, Result};

/// `X × Y` with pair labels; simplex `(i, j)` sits at index `i·|Yₙ| + j`.
pub fn product(x: &SSet, y: &SSet) -> Result<SSet> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    let d = x.dim();
    let (cx, cy) = (x.counts(), y.counts());
    let labels = (0..=d)
        .map(|n| {
            let mut ls = Vec::with_capacity(cx[n] * cy[n]);
            for a in x.labels(n) {
                for b in y.labels(n) {
                    ls.push(Label::pair(a.clone(), b.clone()));
                }
            }
            ls
        })
        .collect();
    let table = |n: usize, target: usize, fx: &dyn Fn(usize, usize) -> usize, fy: &dyn Fn(usize, usize) -> usize| {
        let mut t = Vec::with_capacity(cx[n] * cy[n] * (n + 1));
        for a in 0..cx[n] {
            for b in 0..cy[n] {
                for i in 0..=n {
                    t.push(fx(a, i) * cy[target] + fy(b, i));
                }
            }
        }
        t
    };
    let face = (0..=d)
        .map(|n| {
            if n == 0 {
                Vec::new()
            } else {
                table(n, n - 1, &|a, i| x.face(n, i, a), &|b, i| y.face(n, i, b))
            }
        })
        .collect();
    let degen = (0..=d)
        .map(|n| {
            if n == d {
                Vec::new()
            } else {
                table(n, n + 1, &|a, i| x.degen(n, i, a), &|b, i| y.degen(n, i, b))
            }
        })
        .collect();
    SSet::from_tables(d, labels, face, degen)
}

/// The two projections out of a product built by [`product`].
pub fn projections(x: &Arc<SSet>, y: &Arc<SSet>, prod: &Arc<SSet>) -> Result<(SimplicialMap, SimplicialMap)> {
    let part = |first: bool| {
        move |_: usize, l: &Label| {
            let (a, b) = l.as_pair().expect("product label");
            if first { a.clone() } else { b.clone() }
        }
    };
    Ok((
        SimplicialMap::from_label_fn(prod.clone(), x.clone(), part(true))?,
        SimplicialMap::from_label_fn(prod.clone(), y.clone(), part(false))?,
    ))
}

/// `⟨f, g⟩ : A → X × Y` for maps `f : A → X`, `g : A → Y`.
pub fn pairing(f: &SimplicialMap, g: &SimplicialMap, prod: &Arc<SSet>) -> Result<SimplicialMap> {
    if f.domain() != g.domain() {
        return Err(Error::NotComposable);
    }
    let cy = g.codomain().counts();
    let components = (0..=f.dim())
        .map(|n| {
            f.components()[n]
                .iter()
                .zip(&g.components()[n])
                .map(|(&a, &b)| a * cy[n] + b)
                .collect()
        })
        .collect();
    SimplicialMap::new(f.domain().clone(), prod.clone(), components)
}

/// Disjoint union; the `k`-th summand's labels are tagged `#k:`.
pub fn coproduct(parts: &[Arc<SSet>], dim: usize) -> Result<(Arc<SSet>, Vec<SimplicialMap>)> {
    if let Some(p) = parts.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch(p.dim(), dim));
    }
    let mut labels = vec![Vec::new(); dim + 1];
    let mut face = vec![Vec::new(); dim + 1];
    let mut degen = vec![Vec::new(); dim + 1];
    let mut offsets = Vec::with_capacity(parts.len());
    let mut running = vec![0; dim + 1];
    for (tag, p) in parts.iter().enumerate() {
        offsets.push(running.clone());
        for n in 0..=dim {
            labels[n].extend(p.labels(n).iter().map(|l| Label::tagged(tag as u32, l.clone())));
            for k in 0..p.count(n) {
                if n > 0 {
                    face[n].extend(p.faces_of(n, k).iter().map(|&f| f + running[n - 1]));
                }
                if n < dim {
                    degen[n].extend(p.degens_of(n, k).iter().map(|&s| s + running[n + 1]));
                }
            }
        }
        for n in 0..=dim {
            running[n] += p.count(n);
        }
    }
    let sum = Arc::new(SSet::from_tables(dim, labels, face, degen)?);
    let injections = parts
        .iter()
        .zip(offsets)
        .map(|(p, off)| {
            let components = (0..=dim).map(|n| (0..p.count(n)).map(|k| k + off[n]).collect()).collect();
            SimplicialMap::new(p.clone(), sum.clone(), components)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((sum, injections))
}

/// The copairing `[f₀, f₁, …]` out of a coproduct built by [`coproduct`].
pub fn copairing(sum: &Arc<SSet>, maps: &[SimplicialMap]) -> Result<SimplicialMap> {
    let target = maps
        .first()
        .map(|m| m.codomain().clone())
        .ok_or_else(|| Error::InvalidArgument("copairing of no maps needs a target".into()))?;
    SimplicialMap::from_label_fn(sum.clone(), target.clone(), |n, l| {
        let Label::Tagged(tag, inner) = l else { unreachable!() };
        maps[*tag as usize].apply_label(n, inner).expect("summand simplex").clone()
    })
}

/// Vertex mask from vertex labels.
pub fn vertex_mask(x: &SSet, vertices: &[Label]) -> Result<Vec<bool>> {
    let mut mask = vec![false; x.count(0)];
    for v in vertices {
        mask[x.require(0, v)?] = true;
    }
    Ok(mask)
}

/// Inclusion of the full subcomplex on the given vertices.
pub fn full_subcomplex(x: &Arc<SSet>, vertices: &[Label]) -> Result<Inclusion> {
    let mask = vertex_mask(x, vertices)?;
    Subcomplex::full_on(x.clone(), &mask).to_inclusion()
}

/// The `k`-skeleton: generated by the nondegenerate simplices of dimension ≤ k.
pub fn skeleton(x: &Arc<SSet>, k: usize) -> Result<Inclusion> {
    if k > x.dim() {
        return Err(Error::BeyondTruncation { requested: k, truncation: x.dim() });
    }
    let seeds = (0..=k).flat_map(|n| x.nondegenerate(n).map(move |s| (n, s)));
    Subcomplex::generated_by(x.clone(), seeds.collect::<Vec<_>>()).to_inclusion()
}

pub fn nondegenerate_simplices(x: &SSet, n: usize) -> Result<Vec<Label>> {
    if n > x.dim() {
        return Err(Error::BeyondTruncation { requested: n, truncation: x.dim() });
    }
    Ok(x.nondegenerate(n).map(|k| x.label(n, k).clone()).collect())
}

/// A pushout of `C ← A ↪ B`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Arc<SSet>,
    pub from_b: SimplicialMap,
    pub from_c: Inclusion,
}

/// Dimensionwise pushout of an inclusion `f : A ↪ B` along `g : A → C`.
///
/// `Pₙ` is `(Bₙ ⊔ Cₙ)/(f(a) ~ g(a))`. Simplices of `C` are tagged `#0:`, the
/// remaining simplices of `B` are tagged `#1:`; every class is named by its
/// label-order minimum, which is the `C` simplex when there is one.
pub fn pushout(f: &Inclusion, g: &SimplicialMap) -> Result<Pushout> {
    if !(Arc::ptr_eq(f.domain(), g.domain()) || f.domain() == g.domain()) {
        return Err(Error::NotComposable);
    }
    let (b, c) = (f.codomain().clone(), g.codomain().clone());
    let d = b.dim();
    if c.dim() != d {
        return Err(Error::DimensionMismatch(d, c.dim()));
    }
    // class[n][k] for a simplex of B: index in P
    let mut class: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    let mut fresh: Vec<Vec<usize>> = Vec::with_capacity(d + 1);
    for n in 0..=d {
        let mut cl = vec![usize::MAX; b.count(n)];
        for (a, &fa) in f.map().components()[n].iter().enumerate() {
            cl[fa] = g.apply(n, a);
        }
        let mut fr = Vec::new();
        for k in 0..b.count(n) {
            if cl[k] == usize::MAX {
                cl[k] = c.count(n) + fr.len();
                fr.push(k);
            }
        }
        class.push(cl);
        fresh.push(fr);
    }
    let labels = (0..=d)
        .map(|n| {
            let mut ls: Vec<Label> = c.labels(n).iter().map(|l| Label::tagged(0, l.clone())).collect();
            ls.extend(fresh[n].iter().map(|&k| Label::tagged(1, b.label(n, k).clone())));
            ls
        })
        .collect();
    let face = (0..=d)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            let mut t: Vec<usize> = (0..c.count(n)).flat_map(|k| c.faces_of(n, k).to_vec()).collect();
            for &k in &fresh[n] {
                t.extend(b.faces_of(n, k).iter().map(|&f| class[n - 1][f]));
            }
            t
        })
        .collect();
    let degen = (0..=d)
        .map(|n| {
            if n == d {
                return Vec::new();
            }
            let mut t: Vec<usize> = (0..c.count(n)).flat_map(|k| c.degens_of(n, k).to_vec()).collect();
            for &k in &fresh[n] {
                t.extend(b.degens_of(n, k).iter().map(|&s| class[n + 1][s]));
            }
            t
        })
        .collect();
    let object = Arc::new(SSet::from_tables(d, labels, face, degen)?);
    let from_b = SimplicialMap::from_label_fn(b.clone(), object.clone(), |n, l| {
        let k = b.find(n, l).expect("simplex of B");
        let p = class[n][k];
        if p < c.count(n) {
            Label::tagged(0, c.label(n, p).clone())
        } else {
            Label::tagged(1, l.clone())
        }
    })?;
    let from_c = Inclusion::new(SimplicialMap::from_label_fn(c.clone(), object.clone(), |_, l| {
        Label::tagged(0, l.clone())
    })?)?;
    Ok(Pushout { object, from_b, from_c })
}

impl Pushout {
    /// The map out of the pushout induced by a cocone `(u : B → Z, v : C → Z)`.
    /// Fails if the cocone does not agree on the identified simplices.
    pub fn induced(&self, u: &SimplicialMap, v: &SimplicialMap) -> Result<SimplicialMap> {
        let z = u.codomain().clone();
        let d = self.object.dim();
        let mut components: Vec<Vec<Option<usize>>> = (0..=d).map(|n| vec![None; self.object.count(n)]).collect();
        let mut assign = |n: usize, p: usize, t: usize| -> Result<()> {
            match components[n][p] {
                Some(old) if old != t => Err(Error::NonCommutingSquare {
                    dim: n,
                    label: self.object.label(n, p).to_string(),
                }),
                _ => {
                    components[n][p] = Some(t);
                    Ok(())
                }
            }
        };
        for n in 0..=d {
            for k in 0..v.domain().count(n) {
                assign(n, self.from_c.map().apply(n, k), v.apply(n, k))?;
            }
            for k in 0..u.domain().count(n) {
                assign(n, self.from_b.apply(n, k), u.apply(n, k))?;
            }
        }
        let components = components
            .into_iter()
            .map(|c| c.into_iter().map(|t| t.expect("pushout is jointly surjective")).collect())
            .collect();
        SimplicialMap::new(self.object.clone(), z, components)
    }
}
