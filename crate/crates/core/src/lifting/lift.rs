//! Lifting problems, a backtracking lift solver and truncated right-lifting
//! checks of `X → ∗` against the iso-horn inclusions and the class `𝒜`.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::Status;
use crate::error::{Error, Result};
use crate::isohorn::{isohorn, CellDecomposition};
use crate::kernel::map::{Inclusion, MapDoc, SimplicialMap};
use crate::kernel::ops::pushout;
use crate::kernel::search::{MapSearch, Over, TargetIndex};
use crate::kernel::sset::SSet;
use crate::kernel::standard::terminal;
use crate::lifting::product::class_a;

/// Witnesses kept per report; the failure count is always exact.
pub const WITNESS_CAP: usize = 64;

/// A commutative square
///
/// ```text
///   A --top--> X
///   |          |
/// left       right
///   v          v
///   B -bottom-> Y
/// ```
#[derive(Clone, Debug)]
pub struct LiftingProblem {
    pub left: Inclusion,
    pub right: SimplicialMap,
    pub top: SimplicialMap,
    pub bottom: SimplicialMap,
}

impl LiftingProblem {
    pub fn new(left: Inclusion, right: SimplicialMap, top: SimplicialMap, bottom: SimplicialMap) -> Result<Self> {
        let p = LiftingProblem { left, right, top, bottom };
        p.check()?;
        Ok(p)
    }

    /// The square of `left` against `X → ∗`.
    pub fn into_point(left: Inclusion, top: SimplicialMap) -> Result<Self> {
        let dim = top.dim();
        let pt = Arc::new(terminal(dim));
        let right = SimplicialMap::to_terminal(top.codomain().clone(), pt.clone())?;
        let bottom = SimplicialMap::to_terminal(left.codomain().clone(), pt)?;
        LiftingProblem::new(left, right, top, bottom)
    }

    pub fn check(&self) -> Result<()> {
        let upper = self.top.then(&self.right)?;
        let lower = self.left.map().then(&self.bottom)?;
        for n in 0..=upper.dim() {
            for k in 0..upper.domain().count(n) {
                if upper.apply(n, k) != lower.apply(n, k) {
                    return Err(Error::NonCommutingSquare {
                        dim: n,
                        label: upper.domain().label(n, k).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Whether `l : B → X` is a lift: `l ∘ left = top` and `right ∘ l = bottom`.
    pub fn is_lift(&self, l: &SimplicialMap) -> bool {
        self.left.map().then(l).is_ok_and(|m| m == self.top) && l.then(&self.right).is_ok_and(|m| m == self.bottom)
    }
}

/// The first lift in search order, or `None` when none exists up to the
/// truncation.
pub fn solve_lift(p: &LiftingProblem) -> Result<Option<SimplicialMap>> {
    p.check()?;
    let index = TargetIndex::new(p.top.codomain());
    Ok(solve_with_index(p, &index))
}

fn solve_with_index(p: &LiftingProblem, index: &TargetIndex) -> Option<SimplicialMap> {
    let (b, x) = (p.left.codomain(), p.top.codomain());
    let mut search = MapSearch::new(b, x, index).over(Over { right: &p.right, bottom: &p.bottom });
    search.fix_along(p.left.map(), &p.top);
    let (found, _) = search.first();
    found.map(|c| SimplicialMap::new(b.clone(), x.clone(), c).expect("search yields total maps"))
}

/// Every map `A → X`, in search order.
pub fn all_maps(a: &Arc<SSet>, x: &Arc<SSet>) -> Vec<SimplicialMap> {
    let index = TargetIndex::new(x);
    let mut out = Vec::new();
    MapSearch::new(a, x, &index).run(|c| {
        out.push(SimplicialMap::new(a.clone(), x.clone(), c.to_vec()).expect("search yields total maps"));
        ControlFlow::Continue(())
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "iso_horns")]
    IsoHorns,
    #[serde(rename = "class_A")]
    ClassA,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::IsoHorns => "iso_horns",
            Family::ClassA => "class_A",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "iso_horns" | "iso-horns" | "isohorns" => Ok(Family::IsoHorns),
            "class_A" | "class_a" | "A" => Ok(Family::ClassA),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub name: String,
    pub inclusion: Inclusion,
}

/// `Vᵢ[n] ↪ ∇ᵢ[n]` for `1 ≤ n ≤ N`, or `𝒜(n)` for `0 ≤ n ≤ N`.
pub fn family_members(family: Family, max_index: usize, dim: usize) -> Result<Vec<FamilyMember>> {
    let mut out = Vec::new();
    match family {
        Family::IsoHorns => {
            for n in 1..=max_index {
                for i in 0..n {
                    out.push(FamilyMember {
                        name: format!("V_{i}[{n}]"),
                        inclusion: isohorn(n, i, dim)?.inclusion().clone(),
                    });
                }
            }
        }
        Family::ClassA => {
            for n in 0..=max_index {
                out.push(FamilyMember { name: format!("A({n})"), inclusion: class_a(n, dim)? });
            }
        }
    }
    Ok(out)
}

/// How far a verdict reaches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationInfo {
    pub max_index: usize,
    pub dim: usize,
    /// A pass only rules out obstructions in dimensions `≤ dim`.
    pub pass_is_truncated: bool,
    /// A fail exhibits a square with no lift at all.
    pub fail_is_exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberVerdict {
    pub member: String,
    pub squares: usize,
    pub failures: usize,
    pub status: Status,
}

/// A square with no lift, stored so that it can be replayed from file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub member: String,
    pub left: MapDoc,
    pub top: MapDoc,
}

impl Witness {
    pub fn problem(&self) -> Result<LiftingProblem> {
        let left = Inclusion::new(SimplicialMap::from_doc(&self.left)?)?;
        let top = SimplicialMap::from_doc(&self.top)?;
        let top = SimplicialMap::new(left.domain().clone(), top.codomain().clone(), top.components().to_vec())?;
        LiftingProblem::into_point(left, top)
    }

    /// Re-solves the square; `true` means it is still unliftable.
    pub fn replay(&self) -> Result<bool> {
        Ok(solve_lift(&self.problem()?)?.is_none())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RlpReport {
    pub target: String,
    pub target_counts: Vec<usize>,
    pub family: Family,
    pub truncation: TruncationInfo,
    pub members: Vec<MemberVerdict>,
    pub total_failures: usize,
    pub witnesses: Vec<Witness>,
    pub status: Status,
}

impl RlpReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_target_name(mut self, name: &str) -> RlpReport {
        self.target = name.into();
        self
    }
}

/// All squares from `family` (indices `≤ max_index`) into `X → ∗`, each
/// solved by exhaustive search.
pub fn check_rlp(x: &Arc<SSet>, family: Family, max_index: usize) -> Result<RlpReport> {
    let dim = x.dim();
    if max_index > dim {
        return Err(Error::BeyondTruncation { requested: max_index, truncation: dim });
    }
    let members = family_members(family, max_index, dim)?;
    let index = TargetIndex::new(x);
    let pt = Arc::new(terminal(dim));
    let right = SimplicialMap::to_terminal(x.clone(), pt.clone())?;

    let mut problems = Vec::new();
    for (m, member) in members.iter().enumerate() {
        let bottom = SimplicialMap::to_terminal(member.inclusion.codomain().clone(), pt.clone())?;
        for top in all_maps(member.inclusion.domain(), x) {
            let p = LiftingProblem { left: member.inclusion.clone(), right: right.clone(), top, bottom: bottom.clone() };
            problems.push((m, p));
        }
    }
    let lifted: Vec<bool> = problems.par_iter().map(|(_, p)| solve_with_index(p, &index).is_some()).collect();

    let mut verdicts: Vec<MemberVerdict> = members
        .iter()
        .map(|m| MemberVerdict { member: m.name.clone(), squares: 0, failures: 0, status: Status::Pass })
        .collect();
    let mut witnesses = Vec::new();
    for ((m, p), ok) in problems.iter().zip(&lifted) {
        let v = &mut verdicts[*m];
        v.squares += 1;
        if !ok {
            v.failures += 1;
            v.status = Status::Fail;
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(Witness { member: v.member.clone(), left: p.left.map().to_doc(), top: p.top.to_doc() });
            }
        }
    }
    let total_failures = verdicts.iter().map(|v| v.failures).sum();
    Ok(RlpReport {
        target: "X".into(),
        target_counts: x.counts(),
        family,
        truncation: TruncationInfo { max_index, dim, pass_is_truncated: true, fail_is_exact: true },
        members: verdicts,
        total_failures,
        witnesses,
        status: if total_failures == 0 { Status::Pass } else { Status::Fail },
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceRow {
    pub name: String,
    pub iso_horns: Status,
    pub class_a: Status,
    pub agree: bool,
    /// Both reports, kept in full when the verdicts disagree.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reports: Option<Box<(RlpReport, RlpReport)>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub max_index: usize,
    pub rows: Vec<EquivalenceRow>,
    pub all_agree: bool,
}

/// Checks both families on every object and compares the verdicts.
pub fn equivalence_report(corpus: &[(String, Arc<SSet>)], max_index: usize) -> Result<EquivalenceReport> {
    let rows = corpus
        .iter()
        .map(|(name, x)| {
            let h = check_rlp(x, Family::IsoHorns, max_index)?.with_target_name(name);
            let a = check_rlp(x, Family::ClassA, max_index)?.with_target_name(name);
            let agree = h.status == a.status;
            Ok(EquivalenceRow {
                name: name.clone(),
                iso_horns: h.status,
                class_a: a.status,
                agree,
                reports: (!agree).then(|| Box::new((h, a))),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_agree = rows.iter().all(|r| r.agree);
    Ok(EquivalenceReport { max_index, rows, all_agree })
}

/// Extends `top : start → X` across a cell decomposition one stage at a time,
/// lifting each coproduct of iso-horn inclusions and gluing along the pushout.
///
/// The result is a map out of the final object `W_y(Y)`, or `None` at the
/// first stage whose cells do not lift.
pub fn lift_through_decomposition(d: &CellDecomposition, top: &SimplicialMap) -> Result<Option<SimplicialMap>> {
    if top.domain() != d.start() {
        return Err(Error::NotComposable);
    }
    let mut current = top.clone();
    for s in &d.stages {
        let cell_top = s.attaching.then(&current)?;
        let Some(l) = solve_lift(&LiftingProblem::into_point(s.left.clone(), cell_top)?)? else {
            return Ok(None);
        };
        let po = pushout(&s.left, &s.attaching)?;
        let comparison = po.induced(&s.cell_map, &s.inclusion)?;
        let glued = po.induced(&l, &current)?;
        current = comparison.inverse()?.then(&glued)?;
    }
    let last = current.domain().clone();
    let to_final = SimplicialMap::by_labels(last, d.target.widening().object().clone())?;
    Ok(Some(to_final.inverse()?.then(&current)?))
}
