//! Widenings `W_ν(X) ⊆ J×X`, partial projections, widened inclusions and
//! their factorizations.
//!
//! Everything lives inside a product `J×X` with pair labels `<bits, σ>`.
//! Vertices of a widening are `<b0, y>` and `<b1, y>`; when a widening is
//! widened again, its marked vertices are the copies `<b0, y>`.

use std::sync::Arc;

use serde::Serialize;

use crate::diagram::{all_pass, Check, DiagramDoc};
use crate::error::{Error, Result};
use crate::kernel::label::Label;
use crate::kernel::map::{Inclusion, SimplicialMap};
use crate::kernel::ops::{product, pushout, vertex_mask, Pushout};
use crate::kernel::sset::SSet;
use crate::kernel::standard::{bits_index, interval_nerve};
use crate::kernel::subcomplex::Subcomplex;
use crate::kernel::validate::validate_map;
use crate::lifting::product::{point_into_j, pushout_product};

/// Index of `r_ν(a, σ)` in `J`, given the index of `a` in `Jₙ` and the
/// vertices of `σ`.
fn restrict_index(a: usize, vertices: &[usize], marked: &[bool]) -> usize {
    let n = vertices.len() - 1;
    let mut out = 0;
    for (p, &v) in vertices.iter().enumerate() {
        let bit = (a >> (n - p)) & 1;
        out = (out << 1) | if marked[v] { bit } else { 0 };
    }
    out
}

/// `r_ν` on labels.
fn restrict_label(x: &SSet, marked: &[bool], n: usize, l: &Label) -> Label {
    let (a, s) = l.as_pair().expect("pair label");
    let a = bits_index(a.as_bits().expect("bit label"));
    let k = x.find(n, s).expect("simplex of the base");
    Label::bits_from_mask(restrict_index(a, x.vertices_of(n, k), marked) as u64, n + 1)
}

fn pair_vertex(bit: u8, y: &Label) -> Label {
    Label::pair(Label::Bits(vec![bit]), y.clone())
}

/// `W_ν(X)`, the full subcomplex of `J×X` on `({0}×X₀) ∪ ({1}×ν)`.
#[derive(Clone, Debug)]
pub struct Widening {
    base: Arc<SSet>,
    marked: Vec<bool>,
    ambient: Arc<SSet>,
    sub: Subcomplex,
    result: Inclusion,
}

impl Widening {
    pub fn new(base: &Arc<SSet>, marked: &[bool]) -> Result<Widening> {
        let ambient = Arc::new(product(&interval_nerve(base.dim()), base)?);
        Widening::within(base, marked, ambient)
    }

    /// As [`new`](Self::new), reusing an already built `J×X`.
    fn within(base: &Arc<SSet>, marked: &[bool], ambient: Arc<SSet>) -> Result<Widening> {
        if marked.len() != base.count(0) {
            return Err(Error::InvalidArgument("vertex mask has the wrong length".into()));
        }
        let c0 = base.count(0);
        let vmask: Vec<bool> = (0..ambient.count(0)).map(|k| k < c0 || marked[k - c0]).collect();
        let sub = Subcomplex::full_on(ambient.clone(), &vmask);
        let result = sub.to_inclusion()?;
        Ok(Widening { base: base.clone(), marked: marked.to_vec(), ambient, sub, result })
    }

    pub fn base(&self) -> &Arc<SSet> {
        &self.base
    }

    pub fn marked(&self) -> &[bool] {
        &self.marked
    }

    pub fn marked_labels(&self) -> Vec<Label> {
        (0..self.base.count(0)).filter(|&v| self.marked[v]).map(|v| self.base.label(0, v).clone()).collect()
    }

    /// `J×X`.
    pub fn ambient(&self) -> &Arc<SSet> {
        &self.ambient
    }

    pub fn subcomplex(&self) -> &Subcomplex {
        &self.sub
    }

    /// `W_ν(X) ↪ J×X`.
    pub fn result(&self) -> &Inclusion {
        &self.result
    }

    /// `W_ν(X)` itself.
    pub fn object(&self) -> &Arc<SSet> {
        self.result.domain()
    }

    /// The partial projection `r_ν : J×X → J`.
    pub fn partial_projection(&self) -> Result<SimplicialMap> {
        let j = Arc::new(interval_nerve(self.base.dim()));
        let components = (0..=self.base.dim())
            .map(|n| {
                let cx = self.base.count(n);
                (0..self.ambient.count(n))
                    .map(|k| restrict_index(k / cx, self.base.vertices_of(n, k % cx), &self.marked))
                    .collect()
            })
            .collect();
        SimplicialMap::new(self.ambient.clone(), j, components)
    }

    /// `R_{ν,X} = (r_ν, p_X) : J×X → W_ν(X)`.
    pub fn retraction(&self) -> Result<SimplicialMap> {
        let components = (0..=self.base.dim())
            .map(|n| {
                let cx = self.base.count(n);
                let mut local = vec![usize::MAX; self.ambient.count(n)];
                for (j, &k) in self.result.map().components()[n].iter().enumerate() {
                    local[k] = j;
                }
                (0..self.ambient.count(n))
                    .map(|k| {
                        let s = k % cx;
                        let r = restrict_index(k / cx, self.base.vertices_of(n, s), &self.marked);
                        match local[r * cx + s] {
                            usize::MAX => Err(Error::Internal(format!(
                                "retraction leaves the widening at {}",
                                self.ambient.label(n, k)
                            ))),
                            j => Ok(j),
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(self.ambient.clone(), self.object().clone(), components)
    }

    /// Vertex mask on `W_ν(X)` selecting the copies `<b0, y>` of `y ∈ mask`.
    pub fn lower_copies(&self, mask: &[bool]) -> Vec<bool> {
        let w = self.object();
        (0..w.count(0))
            .map(|k| {
                let (a, y) = w.label(0, k).as_pair().expect("pair label");
                a.as_bits() == Some(&[0][..]) && mask[self.base.find(0, y).expect("base vertex")]
            })
            .collect()
    }
}

/// `W_ν(X)` for a set of vertex labels `ν`.
pub fn widen(x: &Arc<SSet>, nu: &[Label]) -> Result<Widening> {
    Widening::new(x, &vertex_mask(x, nu)?)
}

pub fn partial_projection(x: &Arc<SSet>, nu: &[Label]) -> Result<SimplicialMap> {
    widen(x, nu)?.partial_projection()
}

pub fn retraction(x: &Arc<SSet>, nu: &[Label]) -> Result<SimplicialMap> {
    widen(x, nu)?.retraction()
}

/// The first nondegenerate simplex, in (dimension, label) order, having `v`
/// as two of its vertices.
pub fn narrow_witness(x: &SSet, v: usize) -> Option<(usize, usize)> {
    (1..=x.dim()).find_map(|n| {
        x.nondegenerate(n)
            .find(|&k| x.vertices_of(n, k).iter().filter(|&&u| u == v).count() > 1)
            .map(|k| (n, k))
    })
}

/// Whether `v` occurs at most once in every nondegenerate simplex of
/// dimension ≤ D.
pub fn is_narrow(x: &SSet, v: &Label) -> Result<bool> {
    Ok(narrow_witness(x, x.require(0, v)?).is_none())
}

/// Fails with the witness simplex when `v` is not narrow.
pub fn require_narrow(x: &SSet, v: usize) -> Result<()> {
    match narrow_witness(x, v) {
        None => Ok(()),
        Some((n, k)) => Err(Error::NotNarrow {
            vertex: x.label(0, v).to_string(),
            dim: n,
            witness: x.label(n, k).to_string(),
        }),
    }
}

/// `({0}×Y) ∪ W_{ν∩X₀}(X) ↪ W_ν(Y)` for an inclusion `X ↪ Y`.
#[derive(Clone, Debug)]
pub struct WidenedInclusion {
    inner: Inclusion,
    widening: Widening,
    domain: Subcomplex,
    map: Inclusion,
}

impl WidenedInclusion {
    fn from_widening(inner: &Inclusion, widening: Widening) -> Result<WidenedInclusion> {
        let y = widening.base().clone();
        if !(Arc::ptr_eq(inner.codomain(), &y) || **inner.codomain() == *y) {
            return Err(Error::NotComposable);
        }
        let in_x = inner.image_mask();
        let counts = y.counts();
        let w_sub = widening.subcomplex().clone();
        let domain = Subcomplex::from_fn(widening.ambient().clone(), |n, k| {
            w_sub.contains(n, k) && (k < counts[n] || in_x[n][k % counts[n]])
        });
        let map = Inclusion::new(domain.to_inclusion()?.into_map().corestrict(widening.object().clone())?)?;
        Ok(WidenedInclusion { inner: inner.clone(), widening, domain, map })
    }

    pub fn new(inner: &Inclusion, marked: &[bool]) -> Result<WidenedInclusion> {
        WidenedInclusion::from_widening(inner, Widening::new(inner.codomain(), marked)?)
    }

    /// `X ↪ Y`.
    pub fn inner(&self) -> &Inclusion {
        &self.inner
    }

    pub fn marked(&self) -> &[bool] {
        self.widening.marked()
    }

    pub fn marked_labels(&self) -> Vec<Label> {
        self.widening.marked_labels()
    }

    /// `W_ν(Y)` inside `J×Y`.
    pub fn widening(&self) -> &Widening {
        &self.widening
    }

    /// `J×Y`.
    pub fn ambient(&self) -> &Arc<SSet> {
        self.widening.ambient()
    }

    pub fn domain_subcomplex(&self) -> &Subcomplex {
        &self.domain
    }

    pub fn map(&self) -> &Inclusion {
        &self.map
    }

    /// `ν ∩ X₀` as a mask on `X₀`.
    pub fn inner_marked(&self) -> Vec<bool> {
        let x = self.inner.domain();
        (0..x.count(0)).map(|v| self.marked()[self.inner.map().apply(0, v)]).collect()
    }
}

pub fn widened_inclusion(inner: &Inclusion, nu: &[Label]) -> Result<WidenedInclusion> {
    WidenedInclusion::new(inner, &vertex_mask(inner.codomain(), nu)?)
}

/// The isomorphism `φ′ : W_μ(X) → W_{μ∖ν}(W_ν(X))`,
/// `(a, σ) ↦ (r_{μ∖ν}(a, σ), (r_ν(a, σ), σ))`.
#[derive(Clone, Debug)]
pub struct WideningIso {
    /// `W_μ(X)`.
    pub source: Widening,
    /// `W_ν(X)`.
    pub inner: Widening,
    /// `W_{μ∖ν}(W_ν(X))`, marked at the copies `<b0, y>`, `y ∈ μ∖ν`.
    pub target: Widening,
    pub map: SimplicialMap,
}

pub fn widening_iso_masks(x: &Arc<SSet>, nu: &[bool], mu: &[bool]) -> Result<WideningIso> {
    if nu.iter().zip(mu).any(|(&a, &b)| a && !b) {
        return Err(Error::InvalidArgument("ν must be contained in μ".into()));
    }
    let ambient = Arc::new(product(&interval_nerve(x.dim()), x)?);
    let source = Widening::within(x, mu, ambient.clone())?;
    let inner = Widening::within(x, nu, ambient)?;
    let rest: Vec<bool> = mu.iter().zip(nu).map(|(&m, &n)| m && !n).collect();
    let target = Widening::new(inner.object(), &inner.lower_copies(&rest))?;
    let map = SimplicialMap::from_label_fn(source.object().clone(), target.object().clone(), |n, l| {
        let (_, s) = l.as_pair().expect("pair label");
        let outer = restrict_label(x, &rest, n, l);
        let inner_bits = restrict_label(x, nu, n, l);
        Label::pair(outer, Label::pair(inner_bits, s.clone()))
    })?;
    Ok(WideningIso { source, inner, target, map })
}

pub fn widening_iso(x: &Arc<SSet>, nu: &[Label], mu: &[Label]) -> Result<WideningIso> {
    widening_iso_masks(x, &vertex_mask(x, nu)?, &vertex_mask(x, mu)?)
}

/// The factorization of an inclusion widened at `μ` through `ν ⊆ μ`.
///
/// Stage (a), `({0}×Y) ∪ W_{μ'}(X) ↪ W_ν(Y) ∪ W_{μ'}(X)`, is realized as the
/// pushout of the inclusion widened at `ν`. Stage (b),
/// `W_ν(Y) ∪ W_{μ'}(X) ↪ W_μ(Y)`, is carried by `φ′` onto the inclusion
/// `W_{ν'}(X) ↪ W_ν(Y)` widened at `μ∖ν`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub nu: Vec<bool>,
    pub widened_at_nu: WidenedInclusion,
    /// `({0}×Y) ∪ W_{ν'}(X) ↪ ({0}×Y) ∪ W_{μ'}(X)`.
    pub along: SimplicialMap,
    pub pushout: Pushout,
    /// `P → W_ν(Y) ∪ W_{μ'}(X)`.
    pub comparison: SimplicialMap,
    /// `W_ν(Y) ↪ W_ν(Y) ∪ W_{μ'}(X)`.
    pub widened_side: SimplicialMap,
    /// Stage (a).
    pub first: Inclusion,
    /// Stage (b).
    pub second: Inclusion,
    pub iso: WideningIso,
    /// The inclusion widened at `μ∖ν` that stage (b) is isomorphic to.
    pub rest: WidenedInclusion,
    /// `φ′` restricted to the middle object, onto the domain of `rest`.
    pub rest_domain_iso: SimplicialMap,
    pub checks: Vec<Check>,
}

pub fn factor_widened(w: &WidenedInclusion, nu: &[bool]) -> Result<Factorization> {
    let mu = w.marked();
    if nu.len() != mu.len() || nu.iter().zip(mu).any(|(&a, &b)| a && !b) {
        return Err(Error::InvalidArgument("ν must be contained in μ".into()));
    }
    let y = w.inner().codomain().clone();
    let ambient = w.ambient().clone();
    let widened_at_nu = WidenedInclusion::from_widening(w.inner(), Widening::within(&y, nu, ambient)?)?;
    let w_nu = widened_at_nu.widening();

    let middle_sub = w_nu.subcomplex().union(w.domain_subcomplex())?;
    let middle = middle_sub.to_sset()?;
    let d_mu = w.map().domain().clone();
    let along = SimplicialMap::by_labels(widened_at_nu.map().domain().clone(), d_mu.clone())?;
    let po = pushout(widened_at_nu.map(), &along)?;
    let widened_side = SimplicialMap::by_labels(w_nu.object().clone(), middle.clone())?;
    let first = Inclusion::by_labels(d_mu, middle.clone())?;
    let comparison = po.induced(&widened_side, first.map())?;
    let second = Inclusion::by_labels(middle.clone(), w.widening().object().clone())?;

    let iso = widening_iso_masks(&y, nu, mu)?;
    let x_in_wnu = Subcomplex::from_fn(w_nu.object().clone(), {
        let in_x = w.inner().image_mask();
        let wn = w_nu.object().clone();
        move |n, k| {
            let (_, s) = wn.label(n, k).as_pair().expect("pair label");
            in_x[n][y.find(n, s).expect("simplex of Y")]
        }
    })
    .to_inclusion()?;
    let rest = WidenedInclusion::from_widening(&x_in_wnu, iso.target.clone())?;
    let rest_domain_iso = SimplicialMap::from_label_fn(middle.clone(), rest.map().domain().clone(), |n, l| {
        iso.map.apply_label(n, l).expect("middle lies in W_μ(Y)").clone()
    })?;

    let checks = vec![
        Check::new("φ′ is bijective", iso.map.is_bijective()),
        Check::new("φ′ is simplicial", validate_map(&iso.map).is_ok()),
        Check::new("pushout comparison is bijective", comparison.is_bijective()),
        Check::new("pushout comparison is simplicial", validate_map(&comparison).is_ok()),
        Check::new("comparison ∘ (C ↪ P) = (a)", po.from_c.map().then(&comparison)? == *first.map()),
        Check::new(
            "square (a) commutes",
            along.then(first.map())? == widened_at_nu.map().map().then(&widened_side)?,
        ),
        Check::new("φ′ restricts to an isomorphism onto the domain of the rest", rest_domain_iso.is_bijective()),
        Check::new(
            "φ′ ∘ (b) = rest ∘ φ′|",
            second.map().then(&iso.map)? == rest_domain_iso.then(rest.map().map())?,
        ),
        Check::new("(b) ∘ (a) = w", first.then(&second)? == *w.map()),
    ];
    Ok(Factorization {
        nu: nu.to_vec(),
        widened_at_nu,
        along,
        pushout: po,
        comparison,
        widened_side,
        first,
        second,
        iso,
        rest,
        rest_domain_iso,
        checks,
    })
}

/// One single-vertex step of [`decompose_to_single`].
#[derive(Clone, Debug)]
pub struct SingleStage {
    /// The vertex of the original `Y` widened at this stage.
    pub vertex: Label,
    /// Its name in this stage's frame.
    pub frame_vertex: Label,
    /// The inclusion widened at the single vertex.
    pub widened: WidenedInclusion,
    pub narrow: bool,
    /// Isomorphism from this frame's `W_{μ_ℓ}(Y_ℓ)` back to the original `W_μ(Y)`.
    pub transport: SimplicialMap,
    /// How the frame's map splits; absent for the last stage.
    pub factorization: Option<Factorization>,
}

#[derive(Clone, Debug)]
pub struct SingleChain {
    pub stages: Vec<SingleStage>,
    pub checks: Vec<Check>,
}

impl SingleChain {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks) && self.stages.iter().all(|s| s.factorization.as_ref().is_none_or(|f| all_pass(&f.checks)))
    }
}

/// Peels the marked vertices one at a time, in label order, into a chain of
/// inclusions each widened at a single vertex.
pub fn decompose_to_single(w: &WidenedInclusion) -> Result<SingleChain> {
    let top = w.widening().object().clone();
    let mut stages = Vec::new();
    let mut checks = Vec::new();
    let order: Vec<usize> = (0..w.marked().len()).filter(|&v| w.marked()[v]).collect();
    if order.is_empty() {
        checks.push(Check::new("w is an isomorphism onto {0}×Y", w.map().is_iso()));
        return Ok(SingleChain { stages, checks });
    }
    let y = w.inner().codomain();
    let mut cur = w.clone();
    let mut transport = SimplicialMap::identity(top.clone());
    // subcomplexes of W_μ(Y): the domain and codomain of each stage, transported
    let mut spans: Vec<(Subcomplex, Subcomplex)> = Vec::new();
    for (step, &v) in order.iter().enumerate() {
        let vertex = y.label(0, v).clone();
        let frame_vertex = (0..step).fold(vertex.clone(), |l, _| pair_vertex(0, &l));
        let frame_y = cur.inner().codomain().clone();
        let fv = frame_y.require(0, &frame_vertex)?;
        let narrow = narrow_witness(&frame_y, fv).is_none();
        let dom_in_frame = cur.map().map().then(&transport)?;
        if step + 1 == order.len() {
            spans.push((Subcomplex::image_of(&dom_in_frame), Subcomplex::full(top.clone())));
            stages.push(SingleStage {
                vertex,
                frame_vertex,
                widened: cur.clone(),
                narrow,
                transport: transport.clone(),
                factorization: None,
            });
            break;
        }
        let mut nu = vec![false; frame_y.count(0)];
        nu[fv] = true;
        let f = factor_widened(&cur, &nu)?;
        let middle_in_frame = f.second.map().then(&transport)?;
        spans.push((Subcomplex::image_of(&dom_in_frame), Subcomplex::image_of(&middle_in_frame)));
        let next_transport = f.iso.map.inverse()?.then(&transport)?;
        let next = f.rest.clone();
        stages.push(SingleStage {
            vertex,
            frame_vertex,
            widened: f.widened_at_nu.clone(),
            narrow,
            transport: transport.clone(),
            factorization: Some(f),
        });
        cur = next;
        transport = next_transport;
    }
    checks.push(Check::new(
        "first stage starts at the domain of w",
        spans[0].0 == Subcomplex::image_of(w.map().map()),
    ));
    for l in 1..spans.len() {
        checks.push(Check::new(format!("stage {l} ends where stage {} starts", l + 1), spans[l - 1].1 == spans[l].0));
    }
    checks.push(Check::new("last stage ends at W_μ(Y)", spans.last().unwrap().1.is_full()));
    for (l, s) in stages.iter().enumerate() {
        checks.push(Check::new(format!("transport {} is bijective", l + 1), s.transport.is_bijective()));
        checks.push(Check::new(
            format!("stage {} is widened at a single vertex", l + 1),
            s.widened.marked().iter().filter(|&&m| m).count() == 1,
        ));
    }
    Ok(SingleChain { stages, checks })
}

/// The retract diagram exhibiting a widened inclusion as a retract of the
/// pushout-product `({0}↪J) □ (X↪Y)`:
///
/// ```text
/// ({0}×Y) ∪ W_ν'(X) ──→ ({0}×Y) ∪ (J×X) ──id∪R_ν',X──→ ({0}×Y) ∪ W_ν'(X)
///        │                      │                              │
///        ↓                      ↓                              ↓
///      W_ν(Y)      ──────→     J×Y        ────R_ν,Y────→     W_ν(Y)
/// ```
#[derive(Clone, Debug)]
pub struct RetractWitness {
    pub top_in: SimplicialMap,
    pub top_out: SimplicialMap,
    pub bottom_in: SimplicialMap,
    pub bottom_out: SimplicialMap,
    pub left: SimplicialMap,
    pub middle: SimplicialMap,
    pub right: SimplicialMap,
    pub checks: Vec<Check>,
}

impl RetractWitness {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn to_doc(&self) -> DiagramDoc {
        let mut d = DiagramDoc::default();
        d.edge("top_in", "TL", "TM", &self.top_in);
        d.edge("top_out", "TM", "TR", &self.top_out);
        d.edge("bottom_in", "BL", "BM", &self.bottom_in);
        d.edge("bottom_out", "BM", "BR", &self.bottom_out);
        d.edge("left", "TL", "BL", &self.left);
        d.edge("middle", "TM", "BM", &self.middle);
        d.edge("right", "TR", "BR", &self.right);
        d.checks = self.checks.clone();
        d
    }
}

pub fn retract_witness(w: &WidenedInclusion) -> Result<RetractWitness> {
    let x = w.inner().domain().clone();
    let y = w.inner().codomain().clone();
    let ambient = w.ambient().clone();
    let in_x = w.inner().image_mask();
    let counts = y.counts();
    let pp_sub = Subcomplex::from_fn(ambient.clone(), |n, k| k < counts[n] || in_x[n][k % counts[n]]);
    let pp = pp_sub.to_inclusion()?;
    let middle = pp.map().clone();
    let top_in = SimplicialMap::by_labels(w.map().domain().clone(), pp.domain().clone())?;

    // id on {0}×Y, R_{ν',X} on J×X, computed through X's own vertices
    let nu_x = w.inner_marked();
    let inner = w.inner().map();
    let mut preimage: Vec<Vec<usize>> = counts.iter().map(|&c| vec![usize::MAX; c]).collect();
    for n in 0..=x.dim() {
        for (k, &t) in inner.components()[n].iter().enumerate() {
            preimage[n][t] = k;
        }
    }
    let top_out = SimplicialMap::from_label_fn(pp.domain().clone(), w.map().domain().clone(), |n, l| {
        let (a, s) = l.as_pair().expect("pair label");
        let sy = y.find(n, s).expect("simplex of Y");
        match preimage[n][sy] {
            usize::MAX => l.clone(),
            sx => {
                let ai = bits_index(a.as_bits().expect("bits"));
                let r = restrict_index(ai, x.vertices_of(n, sx), &nu_x);
                Label::pair(Label::bits_from_mask(r as u64, n + 1), s.clone())
            }
        }
    })?;
    let bottom_in = w.widening().result().map().clone();
    let bottom_out = w.widening().retraction()?;
    let left = w.map().map().clone();
    let right = left.clone();

    let pp_direct = pushout_product(&point_into_j(y.dim()), w.inner())?;
    let mut checks = vec![
        Check::new("middle is ({0}↪J) □ (X↪Y)", *pp_direct.map() == middle),
        Check::new("left square commutes", top_in.then(&middle)? == left.then(&bottom_in)?),
        Check::new("right square commutes", top_out.then(&right)? == middle.then(&bottom_out)?),
        Check::new("top composite is the identity", top_in.then(&top_out)? == SimplicialMap::identity(top_in.domain().clone())),
        Check::new(
            "bottom composite is the identity",
            bottom_in.then(&bottom_out)? == SimplicialMap::identity(bottom_in.domain().clone()),
        ),
    ];
    for (name, m) in [
        ("top_in", &top_in),
        ("top_out", &top_out),
        ("bottom_in", &bottom_in),
        ("bottom_out", &bottom_out),
        ("left", &left),
        ("middle", &middle),
    ] {
        checks.push(Check::new(format!("{name} is simplicial"), validate_map(m).is_ok()));
    }
    Ok(RetractWitness { top_in, top_out, bottom_in, bottom_out, left, middle, right, checks })
}

/// JSON summary of a factorization chain.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingleChainDoc {
    pub stages: Vec<SingleStageDoc>,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingleStageDoc {
    pub vertex: Label,
    pub frame_vertex: Label,
    pub narrow: bool,
    pub checks: Vec<Check>,
}

impl SingleChain {
    pub fn to_doc(&self) -> SingleChainDoc {
        SingleChainDoc {
            stages: self
                .stages
                .iter()
                .map(|s| SingleStageDoc {
                    vertex: s.vertex.clone(),
                    frame_vertex: s.frame_vertex.clone(),
                    narrow: s.narrow,
                    checks: s.factorization.as_ref().map(|f| f.checks.clone()).unwrap_or_default(),
                })
                .collect(),
            checks: self.checks.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::category::FiniteCategory;
    use crate::kernel::iso::are_isomorphic;
    use crate::kernel::standard::{boundary, delta};
    use crate::lifting::product::{boundary_inclusion, class_a};

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    #[test]
    fn widening_at_all_vertices_is_the_product() {
        let x = Arc::new(delta(1, 3));
        let w = widen(&x, &[l("(0)"), l("(1)")]).unwrap();
        assert!(w.result().is_iso());
    }

    #[test]
    fn widening_at_nothing_is_the_base() {
        let x = Arc::new(delta(2, 3));
        let w = widen(&x, &[]).unwrap();
        assert_eq!(w.object().counts(), x.counts());
    }

    #[test]
    fn widening_of_triangle_at_last_vertex() {
        let x = Arc::new(delta(2, 4));
        let w = widen(&x, &[l("(2)")]).unwrap();
        assert_eq!(w.object().count(0), 4);
        assert_eq!(w.object().nondegenerate_count(1), 7);
        let objects: Vec<String> = (0..4).map(|k| k.to_string()).collect();
        let c = FiniteCategory::preorder(&objects, |a, b| a <= b || (a == 3 && b == 2)).unwrap();
        assert!(are_isomorphic(w.object(), &Arc::new(c.nerve(4))));
    }

    #[test]
    fn partial_projection_zeroes_unmarked_entries() {
        let x = Arc::new(delta(2, 3));
        let r = partial_projection(&x, &[l("(2)")]).unwrap();
        assert_eq!(r.apply_label(2, &l("<b101,(0,1,2)>")).unwrap(), &l("b001"));
        let all = partial_projection(&x, &[l("(0)"), l("(1)"), l("(2)")]).unwrap();
        assert_eq!(all.apply_label(2, &l("<b101,(0,1,2)>")).unwrap(), &l("b101"));
        let none = partial_projection(&x, &[]).unwrap();
        assert_eq!(none.apply_label(2, &l("<b111,(0,1,2)>")).unwrap(), &l("b000"));
    }

    #[test]
    fn retraction_splits_the_inclusion() {
        let x = Arc::new(delta(1, 3));
        let w = widen(&x, &[l("(0)")]).unwrap();
        let r = w.retraction().unwrap();
        assert_eq!(w.result().map().then(&r).unwrap(), SimplicialMap::identity(w.object().clone()));
        assert!(validate_map(&r).is_ok());
    }

    #[test]
    fn narrowness() {
        let d = delta(3, 4);
        assert!((0..4).all(|v| narrow_witness(&d, v).is_none()));
        let j = interval_nerve(3);
        assert!(!is_narrow(&j, &l("b0")).unwrap());
        assert_eq!(narrow_witness(&j, 0).map(|(n, _)| n), Some(2));
    }

    #[test]
    fn widened_boundary_of_edge_is_an_isohorn() {
        let inner = boundary_inclusion(1, 3).unwrap();
        let w = widened_inclusion(&inner, &[l("(0)")]).unwrap();
        let nerve = Arc::new(FiniteCategory::chain_with_iso(2, Some(0)).nerve(3));
        assert!(are_isomorphic(w.widening().object(), &nerve));
        assert_eq!(w.map().domain().count(0), 3);
    }

    #[test]
    fn widened_at_everything_is_the_pushout_product() {
        let w = widened_inclusion(&boundary_inclusion(2, 3).unwrap(), &[l("(0)"), l("(1)"), l("(2)")]).unwrap();
        assert_eq!(*w.map().domain(), *class_a(2, 3).unwrap().domain());
    }

    #[test]
    fn widened_identity_is_identity() {
        let y = Arc::new(delta(2, 3));
        let w = widened_inclusion(&Inclusion::identity(y), &[l("(1)")]).unwrap();
        assert!(w.map().is_iso());
    }

    #[test]
    fn phi_is_an_isomorphism() {
        let x = Arc::new(delta(2, 4));
        let iso = widening_iso(&x, &[l("(0)")], &[l("(0)"), l("(2)")]).unwrap();
        assert!(iso.map.is_bijective());
        assert!(validate_map(&iso.map).is_ok());
        assert!(widening_iso(&x, &[l("(1)")], &[l("(2)")]).is_err());
    }

    #[test]
    fn factorization_of_boundary_inclusion() {
        let w = widened_inclusion(&boundary_inclusion(2, 3).unwrap(), &[l("(0)"), l("(1)"), l("(2)")]).unwrap();
        let f = factor_widened(&w, &[true, false, false]).unwrap();
        assert!(all_pass(&f.checks), "{:?}", f.checks);
    }

    #[test]
    fn chain_of_single_widenings() {
        let w = widened_inclusion(&boundary_inclusion(2, 3).unwrap(), &[l("(0)"), l("(1)"), l("(2)")]).unwrap();
        let chain = decompose_to_single(&w).unwrap();
        assert_eq!(chain.stages.len(), 3);
        assert!(chain.passed(), "{:?}", chain.checks);
        assert!(chain.stages.iter().all(|s| s.narrow));
    }

    #[test]
    fn retract_of_isohorn() {
        let w = widened_inclusion(&boundary_inclusion(1, 3).unwrap(), &[l("(0)")]).unwrap();
        let r = retract_witness(&w).unwrap();
        assert!(r.passed(), "{:?}", r.checks);
        let e = Inclusion::by_labels(Arc::new(boundary(0, 3).unwrap()), Arc::new(delta(0, 3))).unwrap();
        let r = retract_witness(&widened_inclusion(&e, &[l("(0)")]).unwrap()).unwrap();
        assert!(r.passed());
    }
}
