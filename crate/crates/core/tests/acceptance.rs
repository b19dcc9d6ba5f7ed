//! Acceptance criteria 1–8. Prints one line per criterion and exits non-zero
//! if any fails.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use common::{oracle, random};
use fibrancy::corpus;
use fibrancy::kernel::standard::{boundary, delta, interval_nerve};
use fibrancy::lifting::lift::{all_maps, family_members};
use fibrancy::verify::decompose_widened;
use fibrancy::{
    check_rlp, equivalence_report, retract_witness, solve_lift, validate_map, validate_sset, widening_iso, Family,
    Label, LiftingProblem, SSet, SimplicialMap,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const D: usize = 4;
const N: usize = 2;

struct Outcome {
    ok: bool,
    detail: String,
    report: Value,
}

fn outcome(ok: bool, detail: impl Into<String>, report: Value) -> Outcome {
    Outcome { ok, detail: detail.into(), report }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut ok = true;
    let mut record = |name: &str, x: &SSet, maps: &[SimplicialMap]| {
        let v = validate_sset(x).violations.len();
        let mv: usize = maps.iter().map(|m| validate_map(m).violations.len()).sum();
        ok &= v == 0 && mv == 0;
        rows.push(json!({"name": name, "counts": x.counts(), "sset_violations": v, "map_violations": mv}));
    };
    for (name, x) in corpus::objects(D).unwrap() {
        record(&name, &x, &[]);
    }
    for (name, w) in corpus::widened_inclusions(D).unwrap() {
        record(&name, w.map().codomain(), &[w.map().map().clone(), w.widening().retraction().unwrap()]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..200 {
        let b = random::random_object(&mut rng, D, 3);
        record(&format!("random {k}: {}", b.name), &b.object, &b.maps);
    }
    let elapsed = start.elapsed();
    let ok = ok && elapsed < Duration::from_secs(10);
    outcome(ok, format!("{} objects, {elapsed:.2?}", rows.len()), json!(rows))
}

fn criterion_2() -> Outcome {
    let dim = 6;
    let j = interval_nerve(dim);
    let counts: Vec<usize> = (0..=dim).map(|n| j.count(n)).collect();
    let nondeg: Vec<usize> = (1..=dim).map(|n| j.nondegenerate_count(n)).collect();
    let ok = (0..=dim).all(|n| counts[n] == 1 << (n + 1)) && nondeg.iter().all(|&c| c == 2);
    outcome(ok, format!("|J_n| = {counts:?}"), json!({"counts": counts, "nondegenerate": nondeg}))
}

fn criterion_3() -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, x) in [("delta(1)", delta(1, D)), ("delta(2)", delta(2, D)), ("boundary(2)", boundary(2, D).unwrap())] {
        let x = Arc::new(x);
        let v = x.count(0);
        for mu in 0..1u32 << v {
            for nu in (0..1u32 << v).filter(|nu| nu & !mu == 0) {
                let labels = |m: u32| -> Vec<Label> { (0..v).filter(|&k| m >> k & 1 == 1).map(|k| x.label(0, k).clone()).collect() };
                let iso = widening_iso(&x, &labels(nu), &labels(mu)).unwrap();
                let good = iso.map.is_bijective() && validate_map(&iso.map).is_ok();
                ok &= good;
                rows.push(json!({"x": name, "nu": nu, "mu": mu, "ok": good}));
            }
        }
    }
    outcome(ok, format!("{} pairs", rows.len()), json!(rows))
}

fn criterion_4() -> Outcome {
    let cases = corpus::widened_inclusions(D).unwrap();
    let mut ok = cases.len() == 20;
    for n in 1..=3 {
        for i in 0..n {
            ok &= cases.iter().any(|(name, _)| *name == format!("isohorn({n},{i})"));
        }
    }
    let mut rows = Vec::new();
    for (name, w) in &cases {
        let r = retract_witness(w).unwrap();
        ok &= r.passed();
        rows.push(json!({"name": name, "checks": r.checks}));
    }
    outcome(ok, format!("{} widened inclusions", cases.len()), json!(rows))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let w = corpus::widened_inclusions(D).unwrap().into_iter().find(|(n, _)| n == "class_A(2)").unwrap().1;
    let d = decompose_widened(&w).unwrap();
    let mut ok = d.passed() && d.cells.len() == 3;
    let mut rows = Vec::new();
    for (stage, cells) in d.chain.stages.iter().zip(&d.cells) {
        let inner = stage.widened.inner();
        let y = inner.codomain().find(0, &stage.frame_vertex).unwrap();
        let expected = oracle::cells_through(inner, y);
        let got: Vec<usize> = (0..=D)
            .map(|k| cells.stages.iter().filter(|s| s.k == k).map(|s| s.cells.len()).sum())
            .collect();
        ok &= expected == got;
        rows.push(json!({
            "vertex": stage.vertex,
            "frame_vertex": stage.frame_vertex,
            "cells_by_dim": got,
            "oracle_by_dim": expected,
            "truncated": cells.truncated,
        }));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(60);
    let totals: Vec<usize> = d.cells.iter().map(|c| c.total_cells()).collect();
    outcome(ok, format!("cells per stage {totals:?}, {elapsed:.2?}"), json!({"stages": rows, "checks": d.checks()}))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let objects = corpus::objects(D).unwrap();
    let e = equivalence_report(&objects, N).unwrap();
    let status = |name: &str| e.rows.iter().find(|r| r.name == name).map(|r| (r.iso_horns, r.class_a));
    let pass = (fibrancy::diagram::Status::Pass, fibrancy::diagram::Status::Pass);
    let fail = (fibrancy::diagram::Status::Fail, fibrancy::diagram::Status::Fail);
    let mut ok = e.all_agree;
    ok &= status("isohorn(2,0)") == Some(fail);
    for name in ["delta(0)", "delta(1)", "boundary(1)", "J", "nerve(Z/2)"] {
        ok &= status(name) == Some(pass);
    }
    let v = objects.iter().find(|(n, _)| n == "isohorn(2,0)").unwrap().1.clone();
    let r = check_rlp(&v, Family::IsoHorns, N).unwrap();
    let id = SimplicialMap::identity(v.clone()).to_doc();
    let witness = r.witnesses.iter().find(|w| w.member == "V_0[2]" && w.top == id);
    let confirmed = witness.is_some_and(|w| !oracle::lift_exists(&w.problem().unwrap()));
    ok &= confirmed;
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(600);
    outcome(
        ok,
        format!("{} objects, agreement {}, identity witness confirmed {confirmed}, {elapsed:.2?}", e.rows.len(), e.all_agree),
        serde_json::to_value(&e).unwrap(),
    )
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    let mut disagreements = Vec::new();
    for (name, x) in corpus::objects(D).unwrap() {
        for family in [Family::IsoHorns, Family::ClassA] {
            let reported = check_rlp(&x, family, N).unwrap().total_failures;
            let mut found = 0;
            for m in family_members(family, N, D).unwrap() {
                for top in all_maps(m.inclusion.domain(), &x) {
                    let p = LiftingProblem::into_point(m.inclusion.clone(), top).unwrap();
                    if solve_lift(&p).unwrap().is_none() {
                        found += 1;
                        checked += 1;
                        if oracle::lift_exists(&p) {
                            disagreements.push(json!({"object": name, "member": m.name}));
                        }
                    }
                }
            }
            if found != reported {
                disagreements.push(json!({"object": name, "family": family, "reported": reported, "found": found}));
            }
        }
    }
    let ok = disagreements.is_empty() && checked > 0;
    outcome(ok, format!("{checked} unliftable squares confirmed"), json!({"checked": checked, "disagreements": disagreements}))
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 7] = [
        ("kernel soundness", criterion_1),
        ("J structure", criterion_2),
        ("composition of widenings", criterion_3),
        ("widened inclusions are retracts", criterion_4),
        ("factorization chain", criterion_5),
        ("iso-horn and class_A verdicts agree", criterion_6),
        ("solver agrees with exhaustive oracle", criterion_7),
    ];
    let mut all = true;
    let mut first_run = Vec::new();
    for (k, (title, run)) in criteria.iter().enumerate() {
        let o = run();
        all &= o.ok;
        println!("criterion {}: {} {title} ({})", k + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
        if k < 6 {
            first_run.push(serde_json::to_string(&o.report).unwrap());
        }
    }
    let second_run: Vec<String> =
        criteria[..6].iter().map(|(_, run)| serde_json::to_string(&run().report).unwrap()).collect();
    let same = first_run == second_run;
    all &= same;
    let bytes: usize = first_run.iter().map(String::len).sum();
    println!("criterion 8: {} determinism ({bytes} bytes of JSON compared)", if same { "PASS" } else { "FAIL" });
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
