mod common;

use std::sync::Arc;

use common::oracle;
use fibrancy::kernel::standard::{boundary, delta, interval_nerve, terminal};
use fibrancy::lifting::lift::{all_maps, lift_through_decomposition};
use fibrancy::{
    check_rlp, class_a, decompose_single_narrow, equivalence_report, isohorn, pushout, retract_witness, solve_lift,
    validate_map, Family, FiniteCategory, Inclusion, LiftingProblem, SSet, SimplicialMap,
};

fn named(xs: Vec<(&str, SSet)>) -> Vec<(String, Arc<SSet>)> {
    xs.into_iter().map(|(n, x)| (n.to_string(), Arc::new(x))).collect()
}

#[test]
fn class_a_maps_are_valid_inclusions() {
    for n in 0..=3 {
        let a = class_a(n, 4).unwrap();
        assert!(validate_map(a.map()).is_ok());
        assert!(a.map().is_injective());
    }
    for n in 1..=3 {
        for i in 0..n {
            let h = isohorn(n, i, 4).unwrap();
            assert!(validate_map(h.inclusion().map()).is_ok());
        }
    }
}

#[test]
fn class_a_two_is_the_widened_boundary() {
    let w = fibrancy::corpus::widened_inclusions(4).unwrap().into_iter().find(|(n, _)| n == "class_A(2)").unwrap().1;
    assert_eq!(*w.map(), class_a(2, 4).unwrap());
}

#[test]
fn isohorn_lifts_into_an_edge() {
    let x = Arc::new(delta(1, 3));
    let h = isohorn(2, 0, 3).unwrap();
    let tops = all_maps(h.body(), &x);
    assert!(!tops.is_empty());
    for top in tops {
        let p = LiftingProblem::into_point(h.inclusion().clone(), top).unwrap();
        let l = solve_lift(&p).unwrap().expect("an edge lifts against iso-horns");
        assert!(p.is_lift(&l));
    }
}

#[test]
fn identity_square_of_v02_is_confirmed_by_the_oracle() {
    let h = isohorn(2, 0, 4).unwrap();
    let p = LiftingProblem::into_point(h.inclusion().clone(), SimplicialMap::identity(h.body().clone())).unwrap();
    assert!(solve_lift(&p).unwrap().is_none());
    assert!(!oracle::lift_exists(&p));
}

#[test]
fn kan_complexes_pass_both_families() {
    let z2 = FiniteCategory::cyclic_group(2).unwrap().nerve(4);
    let corpus = named(vec![("delta(0)", delta(0, 4)), ("delta(1)", delta(1, 4)), ("boundary(1)", boundary(1, 4).unwrap()), ("J", interval_nerve(4)), ("nerve(Z/2)", z2)]);
    let e = equivalence_report(&corpus, 2).unwrap();
    assert!(e.all_agree);
    assert!(e.rows.iter().all(|r| r.iso_horns == fibrancy::diagram::Status::Pass));
}

#[test]
fn v02_fails_both_families() {
    let v = isohorn(2, 0, 4).unwrap().body().clone();
    let e = equivalence_report(&[("V_0[2]".into(), v)], 2).unwrap();
    assert!(e.all_agree);
    assert_eq!(e.rows[0].class_a, fibrancy::diagram::Status::Fail);
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let x = Arc::new(FiniteCategory::cyclic_group(2).unwrap().nerve(4));
    let v = isohorn(2, 0, 4).unwrap().body().clone();
    for y in [x, v] {
        let many = serde_json::to_string(&check_rlp(&y, Family::ClassA, 2).unwrap()).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let one = pool.install(|| serde_json::to_string(&check_rlp(&y, Family::ClassA, 2).unwrap()).unwrap());
        assert_eq!(many, one);
    }
}

#[test]
fn witnesses_replay_from_json() {
    let v = isohorn(2, 0, 3).unwrap().body().clone();
    let r = check_rlp(&v, Family::ClassA, 2).unwrap();
    assert!(!r.witnesses.is_empty());
    let json = serde_json::to_string(&r).unwrap();
    let back: fibrancy::RlpReport = serde_json::from_str(&json).unwrap();
    for w in &back.witnesses {
        assert!(w.replay().unwrap());
    }
}

/// Lifts against an iso-horn square by going through the pushout-product it is
/// a retract of.
#[test]
fn lifts_transport_along_retracts() {
    let d = 4;
    let objects: Vec<Arc<SSet>> = vec![
        Arc::new(delta(2, d)),
        Arc::new(interval_nerve(d)),
        Arc::new(FiniteCategory::cyclic_group(2).unwrap().nerve(d)),
        Arc::new(FiniteCategory::chain_with_iso(2, Some(1)).nerve(d)),
    ];
    for n in 1..=2 {
        for i in 0..n {
            let h = isohorn(n, i, d).unwrap();
            let r = retract_witness(h.widened()).unwrap();
            let middle = Inclusion::new(r.middle.clone()).unwrap();
            for x in &objects {
                for top in all_maps(h.body(), x) {
                    let through = r.top_out.then(&top).unwrap();
                    let p = LiftingProblem::into_point(middle.clone(), through).unwrap();
                    let Some(big) = solve_lift(&p).unwrap() else { continue };
                    let small = r.bottom_in.then(&big).unwrap();
                    let q = LiftingProblem::into_point(h.inclusion().clone(), top).unwrap();
                    assert!(q.is_lift(&small));
                }
            }
        }
    }
}

#[test]
fn lifts_transport_through_cell_decompositions() {
    let d = 3;
    let kan: Vec<Arc<SSet>> = vec![
        Arc::new(terminal(d)),
        Arc::new(interval_nerve(d)),
        Arc::new(FiniteCategory::cyclic_group(2).unwrap().nerve(d)),
    ];
    let others: Vec<Arc<SSet>> = vec![Arc::new(delta(2, d)), isohorn(2, 0, d).unwrap().body().clone()];
    for (name, inner, y) in fibrancy::corpus::single_narrow_cases(d).unwrap() {
        let dec = decompose_single_narrow(&inner, &y, d).unwrap();
        for (x, always) in kan.iter().map(|x| (x, true)).chain(others.iter().map(|x| (x, false))) {
            for top in all_maps(dec.start(), x).into_iter().take(40) {
                let direct = LiftingProblem::into_point(dec.target.map().clone(), top.clone()).unwrap();
                match lift_through_decomposition(&dec, &top).unwrap() {
                    Some(l) => assert!(direct.is_lift(&l), "{name}"),
                    None => assert!(!always, "{name}: a Kan complex failed to lift"),
                }
            }
        }
    }
}

#[test]
fn pushout_cocone_map_is_unique() {
    let d = 1;
    let f = fibrancy::lifting::boundary_inclusion(1, d).unwrap();
    let targets = [delta(1, d), interval_nerve(d), boundary(1, d).unwrap()];
    for c in targets.iter().map(|t| Arc::new(t.clone())) {
        for g in all_maps(f.domain(), &c) {
            let po = pushout(&f, &g).unwrap();
            assert_eq!(f.map().then(&po.from_b).unwrap(), g.then(po.from_c.map()).unwrap());
            assert!(po.object.total_count() <= 30);
            for z in targets.iter().map(|t| Arc::new(t.clone())) {
                for u in all_maps(f.codomain(), &z) {
                    for v in all_maps(&c, &z) {
                        if f.map().then(&u).unwrap() != g.then(&v).unwrap() {
                            continue;
                        }
                        let through: Vec<_> = oracle::all_maps(&po.object, &z)
                            .into_iter()
                            .filter(|m| po.from_b.then(m).unwrap() == u && po.from_c.map().then(m).unwrap() == v)
                            .collect();
                        assert_eq!(through.len(), 1);
                        assert_eq!(through[0], po.induced(&u, &v).unwrap());
                    }
                }
            }
        }
    }
}
