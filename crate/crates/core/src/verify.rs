//! Replayable check suites over the built-in corpus.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::corpus;
use crate::diagram::{Check, Status};
use crate::error::{Error, Result};
use crate::isohorn::{
    decompose_single_narrow, isohorn, isoplex, isoplex_face, verify_decomposition, CellDecomposition, FaceKind,
};
use crate::kernel::iso::are_isomorphic;
use crate::kernel::standard::{boundary, delta, interval_nerve};
use crate::kernel::subcomplex::Subcomplex;
use crate::kernel::validate::{validate_map, validate_sset};
use crate::lifting::lift::{equivalence_report, EquivalenceReport};
use crate::widening::{decompose_to_single, retract_witness, widening_iso_masks, SingleChain, WidenedInclusion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sec4,
    Sec5,
    Theorem,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Sec4 => "sec4",
            Suite::Sec5 => "sec5",
            Suite::Theorem => "theorem",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        match s {
            "sec4" => Ok(Suite::Sec4),
            "sec5" => Ok(Suite::Sec5),
            "theorem" => Ok(Suite::Theorem),
            _ => Err(Error::Parse(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub subject: String,
    pub identity: String,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_index: Option<usize>,
    pub checks: Vec<SuiteCheck>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub equivalence: Option<EquivalenceReport>,
    pub passed: bool,
}

#[derive(Default)]
struct Collector(Vec<SuiteCheck>);

impl Collector {
    fn add(&mut self, subject: &str, c: Check) {
        self.0.push(SuiteCheck { subject: subject.into(), identity: c.identity, status: c.status });
    }

    fn check(&mut self, subject: &str, identity: &str, ok: bool) {
        self.add(subject, Check::new(identity, ok));
    }

    /// Records an error as a failed check instead of aborting the suite.
    fn attempt<T>(&mut self, subject: &str, identity: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(subject, &format!("{identity}: {e}"), false);
                None
            }
        }
    }
}

pub fn run_suite(suite: Suite, dim: usize, max_index: usize) -> Result<SuiteReport> {
    let mut c = Collector::default();
    let mut equivalence = None;
    match suite {
        Suite::Sec4 => sec4(&mut c, dim),
        Suite::Sec5 => sec5(&mut c, dim)?,
        Suite::Theorem => {
            let e = equivalence_report(&corpus::objects(dim)?, max_index)?;
            for row in &e.rows {
                c.check(&row.name, "iso-horn and class_A verdicts agree", row.agree);
            }
            equivalence = Some(e);
        }
    }
    let passed = c.0.iter().all(|k| k.status == Status::Pass);
    Ok(SuiteReport {
        suite,
        dim,
        max_index: (suite == Suite::Theorem).then_some(max_index),
        checks: c.0,
        equivalence,
        passed,
    })
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<bool>> {
    (0..1u32 << n).map(move |m| (0..n).map(|v| m >> v & 1 == 1).collect())
}

fn sec4(c: &mut Collector, dim: usize) {
    let j = interval_nerve(dim);
    c.check("J", "|J_n| = 2^(n+1)", (0..=dim).all(|n| j.count(n) == 1 << (n + 1)));
    c.check("J", "two nondegenerate simplices in each positive dimension", (1..=dim).all(|n| j.nondegenerate_count(n) == 2));

    let bases: Vec<(&str, Result<_>)> =
        vec![("delta(1)", Ok(delta(1, dim))), ("delta(2)", Ok(delta(2, dim))), ("boundary(2)", boundary(2, dim))];
    for (name, x) in bases {
        let Some(x) = c.attempt(name, "build", x) else { continue };
        let x = Arc::new(x);
        let v = x.count(0);
        for mu in subsets(v) {
            for nu in subsets(v).filter(|nu| nu.iter().zip(&mu).all(|(&a, &b)| !a || b)) {
                let subject = format!("{name} nu={} mu={}", mask_str(&nu), mask_str(&mu));
                if let Some(iso) = c.attempt(&subject, "phi'", widening_iso_masks(&x, &nu, &mu)) {
                    c.check(&subject, "phi' is bijective", iso.map.is_bijective());
                    c.check(&subject, "phi' is simplicial", validate_map(&iso.map).is_ok());
                }
            }
        }
    }

    let cases = match corpus::widened_inclusions(dim) {
        Ok(cs) => cs,
        Err(e) => {
            c.check("widened corpus", &format!("build: {e}"), false);
            return;
        }
    };
    for (name, w) in &cases {
        if let Some(r) = c.attempt(name, "retract witness", retract_witness(w)) {
            for k in r.checks {
                c.add(name, k);
            }
        }
        if let Some(chain) = c.attempt(name, "single-vertex chain", decompose_to_single(w)) {
            c.check(name, "single-vertex chain", chain.passed());
        }
    }
}

fn mask_str(m: &[bool]) -> String {
    m.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Faces of `∇ᵢ[n]` other than the `i`-th, as subcomplexes of the body.
fn union_of_other_faces(n: usize, i: usize, dim: usize) -> Result<Subcomplex> {
    let body = isoplex(n, i, dim)?.body().clone();
    let mut acc = Subcomplex::empty(body);
    for j in (0..=n).filter(|&j| j != i) {
        acc = acc.union(&Subcomplex::image_of(isoplex_face(n, i, j, dim)?.inclusion.map()))?;
    }
    Ok(acc)
}

fn sec5(c: &mut Collector, dim: usize) -> Result<()> {
    for n in 1..=4 {
        for i in 0..n {
            let subject = format!("isoplex({n},{i})");
            if let Some(p) = c.attempt(&subject, "build", isoplex(n, i, dim)) {
                c.check(&subject, "isomorphic to the nerve of [n]_i", p.to_nerve().is_bijective() && validate_map(p.to_nerve()).is_ok());
                c.check(&subject, "n+1 vertices", p.body().count(0) == n + 1);
            }
            let subject = format!("isohorn({n},{i})");
            let Some(h) = c.attempt(&subject, "build", isohorn(n, i, dim)) else { continue };
            c.check(&subject, "inclusion is simplicial", validate_map(h.inclusion().map()).is_ok());
            c.check(&subject, "proper subcomplex", !h.inclusion().is_iso());
            if let Some(u) = c.attempt(&subject, "union of faces", union_of_other_faces(n, i, dim)) {
                c.check(&subject, "body is the union of all faces but the i-th", u == Subcomplex::image_of(h.inclusion().map()));
            }
            for j in 0..=n {
                if let Some(f) = c.attempt(&subject, &format!("face {j}"), isoplex_face(n, i, j, dim)) {
                    let expect_simplex = j == i || j == i + 1;
                    let ok = (f.kind == FaceKind::Simplex) == expect_simplex;
                    c.check(&subject, &format!("face {j} is a {}", if expect_simplex { "simplex" } else { "isoplex" }), ok);
                }
            }
        }
    }

    for (name, inner, y) in corpus::single_narrow_cases(dim)? {
        if let Some(d) = c.attempt(&name, "decompose", decompose_single_narrow(&inner, &y, dim)) {
            for k in verify_decomposition(&d).checks {
                let subject = match k.stage {
                    Some(s) => format!("{name} stage {s}"),
                    None => name.clone(),
                };
                c.add(&subject, Check { identity: k.identity, status: k.status });
            }
        }
    }

    for (name, w) in corpus::widened_inclusions(dim)?.into_iter().filter(|(n, _)| n.starts_with("class_A")) {
        if let Some(d) = c.attempt(&name, "chain of cell decompositions", decompose_widened(&w)) {
            for k in d.checks() {
                c.add(&name, k);
            }
        }
    }
    Ok(())
}

/// A widened inclusion split into single-vertex stages, each decomposed into
/// cell attachments.
#[derive(Clone, Debug)]
pub struct WidenedDecomposition {
    pub chain: SingleChain,
    pub cells: Vec<CellDecomposition>,
    target: WidenedInclusion,
}

pub fn decompose_widened(w: &WidenedInclusion) -> Result<WidenedDecomposition> {
    let chain = decompose_to_single(w)?;
    let dim = w.map().dim();
    let cells = chain
        .stages
        .iter()
        .map(|s| decompose_single_narrow(s.widened.inner(), &s.frame_vertex, dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(WidenedDecomposition { chain, cells, target: w.clone() })
}

impl WidenedDecomposition {
    pub fn checks(&self) -> Vec<Check> {
        let mut out = self.chain.checks.clone();
        for (l, (s, d)) in self.chain.stages.iter().zip(&self.cells).enumerate() {
            let report = verify_decomposition(d);
            out.push(Check::new(format!("stage {} cells replay", l + 1), report.is_ok()));
            out.push(Check::new(
                format!("stage {} cells start at the stage domain", l + 1),
                **d.start() == **s.widened.map().domain(),
            ));
            out.push(Check::new(
                format!("stage {} cells end at the stage codomain", l + 1),
                **d.target.widening().object() == **s.widened.map().codomain(),
            ));
        }
        if let Some(last) = self.cells.last() {
            let reaches = are_isomorphic(last.target.widening().object(), self.target.map().codomain());
            out.push(Check::new("last stage reaches the codomain up to isomorphism", reaches));
        }
        let valid = self.cells.iter().all(|d| d.stages.iter().all(|s| validate_sset(s.target()).is_ok()));
        out.push(Check::new("every intermediate object is a simplicial set", valid));
        out
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(Check::passed)
    }

    /// `|𝒩ₖ|` per single-vertex stage.
    pub fn cell_counts(&self) -> Vec<Vec<(usize, usize)>> {
        self.cells.iter().map(CellDecomposition::cell_counts).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in [Suite::Sec4, Suite::Sec5, Suite::Theorem] {
            assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn class_a_two_decomposes() {
        let w = corpus::widened_inclusions(3).unwrap().into_iter().find(|(n, _)| n == "class_A(2)").unwrap().1;
        let d = decompose_widened(&w).unwrap();
        assert!(d.passed(), "{:?}", d.checks().iter().filter(|c| !c.passed()).collect::<Vec<_>>());
        assert_eq!(d.cells.len(), 3);
    }
}
