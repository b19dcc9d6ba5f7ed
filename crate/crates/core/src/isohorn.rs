//! Isoplexes `∇ᵢ[n] = W_i(Δ[n−1])`, iso-horns `Vᵢ[n]`, and the
//! decomposition of an inclusion widened at one narrow vertex into pushouts
//! of coproducts of iso-horn inclusions.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::diagram::{Check, Status};
use crate::error::{Error, Result};
use crate::kernel::category::FiniteCategory;
use crate::kernel::iso::are_isomorphic;
use crate::kernel::label::Label;
use crate::kernel::map::{Inclusion, SimplicialMap};
use crate::kernel::ops::{copairing, coproduct, pushout};
use crate::kernel::sset::SSet;
use crate::kernel::standard::delta;
use crate::kernel::subcomplex::Subcomplex;
use crate::kernel::validate::validate_map;
use crate::lifting::product::boundary_inclusion;
use crate::widening::{require_narrow, WidenedInclusion, Widening};

fn check_indices(n: usize, i: usize) -> Result<()> {
    if n == 0 || i >= n {
        return Err(Error::InvalidArgument(format!("no isoplex with n = {n}, i = {i}")));
    }
    Ok(())
}

/// `∇ᵢ[n]`, with its isomorphism to the nerve of `[n]ᵢ`.
#[derive(Clone, Debug)]
pub struct Isoplex {
    pub n: usize,
    pub i: usize,
    widening: Widening,
    nerve: Arc<SSet>,
    to_nerve: SimplicialMap,
}

impl Isoplex {
    fn from_widening(n: usize, i: usize, widening: Widening) -> Result<Isoplex> {
        let body = widening.object().clone();
        let nerve = Arc::new(FiniteCategory::chain_with_iso(n, Some(i)).nerve(body.dim()));
        let vmap = (0..body.count(0))
            .map(|k| {
                let object = object_of_vertex(i, body.label(0, k));
                nerve.require(0, &Label::Object(object.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let to_nerve = SimplicialMap::from_vertex_map(body, nerve.clone(), &vmap)?;
        Ok(Isoplex { n, i, widening, nerve, to_nerve })
    }

    /// The body, with widening labels `<bits, (v…)>`.
    pub fn body(&self) -> &Arc<SSet> {
        self.widening.object()
    }

    pub fn widening(&self) -> &Widening {
        &self.widening
    }

    /// The nerve of `[n]ᵢ`, with object and morphism-string labels.
    pub fn nerve(&self) -> &Arc<SSet> {
        &self.nerve
    }

    pub fn to_nerve(&self) -> &SimplicialMap {
        &self.to_nerve
    }

    /// The vertex of the body corresponding to object `j` of `[n]ᵢ`.
    pub fn vertex_of_object(&self, j: usize) -> Label {
        let (bit, v) = if j <= self.i {
            (0, j)
        } else if j == self.i + 1 {
            (1, self.i)
        } else {
            (0, j - 1)
        };
        Label::pair(Label::Bits(vec![bit]), Label::Tuple(vec![v as u32]))
    }
}

/// Object of `[n]ᵢ` for a vertex `<b, (v)>` of `W_i(Δ[n−1])`.
fn object_of_vertex(i: usize, l: &Label) -> usize {
    let (a, v) = l.as_pair().expect("pair label");
    let Label::Tuple(v) = v else { unreachable!() };
    let v = v[0] as usize;
    match a.as_bits() {
        Some([1]) => i + 1,
        _ if v <= i => v,
        _ => v + 1,
    }
}

pub fn isoplex(n: usize, i: usize, dim: usize) -> Result<Isoplex> {
    check_indices(n, i)?;
    let base = Arc::new(delta(n - 1, dim));
    let mut mask = vec![false; n];
    mask[i] = true;
    Isoplex::from_widening(n, i, Widening::new(&base, &mask)?)
}

/// `Vᵢ[n] = W_i(∂Δ[n−1]) ∪ Δ[n−1] ↪ ∇ᵢ[n]`.
#[derive(Clone, Debug)]
pub struct IsoHorn {
    pub n: usize,
    pub i: usize,
    widened: WidenedInclusion,
    isoplex: Isoplex,
}

impl IsoHorn {
    pub fn body(&self) -> &Arc<SSet> {
        self.widened.map().domain()
    }

    pub fn inclusion(&self) -> &Inclusion {
        self.widened.map()
    }

    pub fn isoplex(&self) -> &Isoplex {
        &self.isoplex
    }

    /// The same inclusion as `∂Δ[n−1] ↪ Δ[n−1]` widened at `{i}`.
    pub fn widened(&self) -> &WidenedInclusion {
        &self.widened
    }
}

pub fn isohorn(n: usize, i: usize, dim: usize) -> Result<IsoHorn> {
    check_indices(n, i)?;
    let mut mask = vec![false; n];
    mask[i] = true;
    let widened = WidenedInclusion::new(&boundary_inclusion(n - 1, dim)?, &mask)?;
    let isoplex = Isoplex::from_widening(n, i, widened.widening().clone())?;
    Ok(IsoHorn { n, i, widened, isoplex })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FaceKind {
    /// An `(n−1)`-simplex; happens for `j = i` and `j = i+1`.
    Simplex,
    /// An `(n−1)`-isoplex `∇_{i'}[n−1]`, with `i'` found by search.
    Isoplex { i: usize },
}

#[derive(Clone, Debug)]
pub struct IsoplexFace {
    pub j: usize,
    pub kind: FaceKind,
    pub inclusion: Inclusion,
}

/// `d_j ∇ᵢ[n]`: the full subcomplex on every vertex but the one of object `j`.
pub fn isoplex_face(n: usize, i: usize, j: usize, dim: usize) -> Result<IsoplexFace> {
    check_indices(n, i)?;
    if j > n {
        return Err(Error::InvalidArgument(format!("face index {j} exceeds {n}")));
    }
    let plex = isoplex(n, i, dim)?;
    face_of(&plex, j)
}

fn face_of(plex: &Isoplex, j: usize) -> Result<IsoplexFace> {
    let body = plex.body();
    let drop = body.require(0, &plex.vertex_of_object(j))?;
    let mask: Vec<bool> = (0..body.count(0)).map(|v| v != drop).collect();
    let inclusion = Subcomplex::full_on(body.clone(), &mask).to_inclusion()?;
    let face = inclusion.domain().clone();
    let (n, i, dim) = (plex.n, plex.i, body.dim());
    let kind = if j == i || j == i + 1 {
        if !are_isomorphic(&face, &Arc::new(delta(n - 1, dim))) {
            return Err(Error::Internal(format!("face {j} of ∇_{i}[{n}] is not a simplex")));
        }
        FaceKind::Simplex
    } else {
        let found = (0..n - 1).find(|&ip| {
            isoplex(n - 1, ip, dim).is_ok_and(|p| are_isomorphic(&face, p.body()))
        });
        match found {
            Some(ip) => FaceKind::Isoplex { i: ip },
            None => return Err(Error::Internal(format!("face {j} of ∇_{i}[{n}] is not an isoplex"))),
        }
    };
    Ok(IsoplexFace { j, kind, inclusion })
}

/// One attached cell `W_y(σ) : ∇_{i_σ}[k+1] → W_y(Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub sigma: Label,
    pub i_sigma: usize,
}

/// The pushout attaching all cells of one dimension.
#[derive(Clone, Debug)]
pub struct CellStage {
    pub k: usize,
    pub cells: Vec<Cell>,
    /// `⊔ V_{i_σ}[k+1] ↪ ⊔ ∇_{i_σ}[k+1]`.
    pub left: Inclusion,
    /// `σ ∪ W_y(∂σ)` on each summand.
    pub attaching: SimplicialMap,
    /// `W_y(σ)` on each summand.
    pub cell_map: SimplicialMap,
    /// The previous object into this stage's object.
    pub inclusion: SimplicialMap,
    /// Subcomplex of `J×Y` this stage produces.
    pub result: Subcomplex,
}

impl CellStage {
    pub fn source(&self) -> &Arc<SSet> {
        self.inclusion.domain()
    }

    pub fn target(&self) -> &Arc<SSet> {
        self.inclusion.codomain()
    }
}

/// A chain of cell attachments from `({0}×Y) ∪ W_y(X)` to `W_y(Y)`.
#[derive(Clone, Debug)]
pub struct CellDecomposition {
    pub vertex: Label,
    pub truncation: usize,
    /// Whether some attached cell `∇[k+1]` has `k+1` beyond the truncation.
    pub truncated: bool,
    /// `X ↪ Y` widened at `{y}`.
    pub target: WidenedInclusion,
    pub stages: Vec<CellStage>,
}

impl CellDecomposition {
    pub fn start(&self) -> &Arc<SSet> {
        self.target.map().domain()
    }

    /// `|𝒩ₖ|` for each recorded stage.
    pub fn cell_counts(&self) -> Vec<(usize, usize)> {
        self.stages.iter().map(|s| (s.k, s.cells.len())).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.stages.iter().map(|s| s.cells.len()).sum()
    }
}

/// The cells `𝒩ₖ`: nondegenerate `k`-simplices of `Y` containing `y` and not
/// in `X`, with the position of `y`.
pub fn attached_cells(inner: &Inclusion, y: usize, k: usize) -> Vec<(usize, usize)> {
    let ys = inner.codomain();
    let in_x = inner.image_mask();
    ys.nondegenerate(k)
        .filter(|&s| !in_x[k][s])
        .filter_map(|s| ys.vertices_of(k, s).iter().position(|&v| v == y).map(|p| (s, p)))
        .collect()
}

pub fn decompose_single_narrow(inner: &Inclusion, y: &Label, dim: usize) -> Result<CellDecomposition> {
    let ys = inner.codomain().clone();
    if ys.dim() != dim {
        return Err(Error::DimensionMismatch(ys.dim(), dim));
    }
    let yv = ys.require(0, y)?;
    require_narrow(&ys, yv)?;
    let mut mask = vec![false; ys.count(0)];
    mask[yv] = true;
    let target = WidenedInclusion::new(inner, &mask)?;
    let ambient = target.ambient().clone();
    let top = ys.top_nondegenerate_dim().unwrap_or(0).min(dim);

    let mut horns: BTreeMap<(usize, usize), IsoHorn> = BTreeMap::new();
    let mut current = target.domain_subcomplex().clone();
    let mut current_obj = target.map().domain().clone();
    let mut stages = Vec::new();
    let mut truncated = false;
    for k in 0..=top {
        let cells = attached_cells(inner, yv, k);
        if cells.is_empty() {
            continue;
        }
        truncated |= k + 1 > dim;
        let mut horn_bodies = Vec::new();
        let mut plex_bodies = Vec::new();
        let mut into_ambient = Vec::new();
        let mut next = current.clone();
        for &(s, p) in &cells {
            let h = match horns.get(&(k + 1, p)) {
                Some(h) => h.clone(),
                None => {
                    let h = isohorn(k + 1, p, dim)?;
                    horns.insert((k + 1, p), h.clone());
                    h
                }
            };
            let plex = h.isoplex().body().clone();
            let m = SimplicialMap::from_label_fn(plex, ambient.clone(), |n, l| {
                let (a, tau) = l.as_pair().expect("pair label");
                let Label::Tuple(seq) = tau else { unreachable!() };
                let seq: Vec<usize> = seq.iter().map(|&v| v as usize).collect();
                let image = ys.apply_operator(k, s, &seq).expect("operator within truncation");
                Label::pair(a.clone(), ys.label(n, image).clone())
            })?;
            next = next.union(&Subcomplex::image_of(&m))?;
            horn_bodies.push(h.body().clone());
            plex_bodies.push(h.isoplex().body().clone());
            into_ambient.push(m);
        }
        let next_obj = next.to_sset()?;
        let (horn_sum, _) = coproduct(&horn_bodies, dim)?;
        let (plex_sum, _) = coproduct(&plex_bodies, dim)?;
        let left = Inclusion::by_labels(horn_sum.clone(), plex_sum.clone())?;
        let per_cell = into_ambient
            .iter()
            .map(|m| m.corestrict(next_obj.clone()))
            .collect::<Result<Vec<_>>>()?;
        let cell_map = copairing(&plex_sum, &per_cell)?;
        let attaching = left
            .map()
            .then(&cell_map)?
            .corestrict(current_obj.clone())
            .map_err(|e| Error::Internal(format!("attaching map leaves the previous stage: {e}")))?;
        let inclusion = SimplicialMap::by_labels(current_obj.clone(), next_obj.clone())?;
        stages.push(CellStage {
            k,
            cells: cells.iter().map(|&(s, p)| Cell { sigma: ys.label(k, s).clone(), i_sigma: p }).collect(),
            left,
            attaching,
            cell_map,
            inclusion,
            result: next.clone(),
        });
        current = next;
        current_obj = next_obj;
    }
    Ok(CellDecomposition { vertex: y.clone(), truncation: dim, truncated, target, stages })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCheck {
    /// Index into the stage list; absent for checks on the whole chain.
    pub stage: Option<usize>,
    pub identity: String,
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub checks: Vec<StageCheck>,
}

impl DecompositionReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failed_stages(&self) -> Vec<Option<usize>> {
        let mut v: Vec<_> = self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.stage).collect();
        v.dedup();
        v
    }

    fn push(&mut self, stage: Option<usize>, c: Check) {
        self.checks.push(StageCheck { stage, identity: c.identity, status: c.status });
    }
}

/// Re-checks every square, the pushout property of every stage, the chain of
/// inclusions and the final comparison with `W_y(Y)`.
pub fn verify_decomposition(d: &CellDecomposition) -> DecompositionReport {
    let mut r = DecompositionReport::default();
    let inner = d.target.inner();
    let ys = inner.codomain();
    let mut prev = d.start().clone();
    for (idx, s) in d.stages.iter().enumerate() {
        let at = Some(idx);
        r.push(at, Check::new("stage starts where the previous one ends", **s.source() == *prev));
        r.push(at, Check::new("attaching map is simplicial", validate_map(&s.attaching).is_ok()));
        r.push(at, Check::new("cell map is simplicial", validate_map(&s.cell_map).is_ok()));
        r.push(at, Check::new("stage inclusion is injective", s.inclusion.is_injective()));
        let commutes = match (s.left.map().then(&s.cell_map), s.attaching.then(&s.inclusion)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        r.push(at, Check::new("square commutes", commutes));
        let is_pushout = pushout(&s.left, &s.attaching)
            .and_then(|po| po.induced(&s.cell_map, &s.inclusion))
            .is_ok_and(|c| c.is_bijective() && validate_map(&c).is_ok());
        r.push(at, Check::new("square is a pushout", is_pushout));
        let expected: Vec<Cell> = ys
            .find(0, &d.vertex)
            .map(|yv| attached_cells(inner, yv, s.k))
            .unwrap_or_default()
            .into_iter()
            .map(|(t, p)| Cell { sigma: ys.label(s.k, t).clone(), i_sigma: p })
            .collect();
        r.push(at, Check::new("cells are the nondegenerate simplices through y outside X", expected == s.cells));
        prev = s.target().clone();
    }
    let reaches = Inclusion::by_labels(prev, d.target.widening().object().clone()).is_ok_and(|i| i.is_iso());
    r.push(None, Check::new("final object is W_y(Y)", reaches));
    r
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellStageDoc {
    pub k: usize,
    pub cells: Vec<Cell>,
    pub counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellDecompositionDoc {
    pub vertex: Label,
    pub truncation: usize,
    pub truncated: bool,
    pub stages: Vec<CellStageDoc>,
    pub checks: Vec<StageCheck>,
}

impl CellDecomposition {
    pub fn to_doc(&self) -> CellDecompositionDoc {
        CellDecompositionDoc {
            vertex: self.vertex.clone(),
            truncation: self.truncation,
            truncated: self.truncated,
            stages: self
                .stages
                .iter()
                .map(|s| CellStageDoc { k: s.k, cells: s.cells.clone(), counts: s.target().counts() })
                .collect(),
            checks: verify_decomposition(self).checks,
        }
    }
}
