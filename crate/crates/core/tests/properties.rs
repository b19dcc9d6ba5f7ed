mod common;

use std::sync::Arc;

use common::{oracle, random};
use fibrancy::kernel::standard::{boundary, delta, horn, interval_nerve};
use fibrancy::lifting::lift::{all_maps, family_members};
use fibrancy::lifting::point_into_j;
use fibrancy::widening::{factor_widened, is_narrow, WidenedInclusion};
use fibrancy::{
    full_subcomplex, pairing, product, projections, pushout_product, solve_lift, validate_map, validate_sset,
    widening_iso, Family, Inclusion, Label, LiftingProblem, SSet, SimplicialMap, Subcomplex, Widening,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn small_bases(dim: usize) -> Vec<SSet> {
    vec![
        delta(0, dim),
        delta(1, dim),
        delta(2, dim),
        boundary(2, dim).unwrap(),
        horn(2, 0, dim).unwrap(),
        horn(2, 1, dim).unwrap(),
        interval_nerve(dim),
    ]
}

fn mask_from(bits: u32, n: usize) -> Vec<bool> {
    (0..n).map(|v| bits >> v & 1 == 1).collect()
}

fn labels_of(x: &SSet, mask: &[bool]) -> Vec<Label> {
    (0..x.count(0)).filter(|&v| mask[v]).map(|v| x.label(0, v).clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_compositions_are_valid(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random::random_object(&mut rng, 3, 2);
        prop_assert!(validate_sset(&b.object).is_ok(), "{}", b.name);
        for m in &b.maps {
            prop_assert!(validate_map(m).is_ok(), "{}", b.name);
        }
        let json = b.object.to_json();
        let back = SSet::from_json(&json).unwrap();
        prop_assert_eq!(&back, &*b.object);
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn nerve_commutes_with_full_subcomplexes(seed in any::<u64>(), keep_bits in any::<u32>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random::random_preorder(&mut rng, 4);
        let keep = mask_from(keep_bits, c.objects().len());
        let nerve = Arc::new(c.nerve(3));
        let kept: Vec<Label> = c.objects().iter().zip(&keep).filter(|(_, &k)| k).map(|(o, _)| Label::Object(o.clone())).collect();
        let sub = full_subcomplex(&nerve, &kept).unwrap();
        let direct = c.full_subcategory(&keep).unwrap().nerve(3);
        prop_assert_eq!(&**sub.domain(), &direct);
    }

    #[test]
    fn projections_are_jointly_injective(a in 0usize..7, b in 0usize..7) {
        let bases = small_bases(3);
        let (x, y) = (Arc::new(bases[a].clone()), Arc::new(bases[b].clone()));
        let p = Arc::new(product(&x, &y).unwrap());
        let (p1, p2) = projections(&x, &y, &p).unwrap();
        prop_assert!(validate_map(&p1).is_ok() && validate_map(&p2).is_ok());
        let paired = pairing(&p1, &p2, &p).unwrap();
        prop_assert_eq!(paired, SimplicialMap::identity(p.clone()));
    }

    #[test]
    fn retraction_splits_the_widening(base in 0usize..7, bits in any::<u32>()) {
        let x = Arc::new(small_bases(3)[base].clone());
        let w = Widening::new(&x, &mask_from(bits, x.count(0))).unwrap();
        let r = w.retraction().unwrap();
        prop_assert_eq!(w.result().map().then(&r).unwrap(), SimplicialMap::identity(w.object().clone()));
        // (r_ν, p_X) has image exactly W_ν(X)
        let p_x = projections(&Arc::new(interval_nerve(3)), &x, w.ambient()).unwrap().1;
        let rp = pairing(&w.partial_projection().unwrap(), &p_x, w.ambient()).unwrap();
        prop_assert_eq!(&Subcomplex::image_of(&rp), w.subcomplex());
    }

    #[test]
    fn widening_iso_is_bijective(base in 0usize..7, nu_bits in any::<u32>(), extra in any::<u32>()) {
        let x = Arc::new(small_bases(3)[base].clone());
        let v = x.count(0);
        let nu = mask_from(nu_bits, v);
        let mu: Vec<bool> = nu.iter().zip(mask_from(extra, v)).map(|(&a, b)| a || b).collect();
        let iso = widening_iso(&x, &labels_of(&x, &nu), &labels_of(&x, &mu)).unwrap();
        prop_assert!(iso.map.is_bijective());
        prop_assert!(validate_map(&iso.map).is_ok());
    }

    #[test]
    fn narrowness_passes_to_subcomplexes(base in 0usize..7, v in 0usize..3, bits in any::<u32>()) {
        let y = Arc::new(small_bases(3)[base].clone());
        prop_assume!(v < y.count(0));
        let mut mask = mask_from(bits, y.count(0));
        mask[v] = true;
        let sub = Subcomplex::full_on(y.clone(), &mask).to_sset().unwrap();
        let label = y.label(0, v).clone();
        if is_narrow(&y, &label).unwrap() {
            prop_assert!(is_narrow(&sub, &label).unwrap());
        }
    }

    #[test]
    fn factorization_composes_back(case in 0usize..20, bits in any::<u32>()) {
        let (_, w) = fibrancy::corpus::widened_inclusions(3).unwrap().swap_remove(case);
        let nu: Vec<bool> = w.marked().iter().zip(mask_from(bits, w.marked().len())).map(|(&m, b)| m && b).collect();
        let f = factor_widened(&w, &nu).unwrap();
        for c in &f.checks {
            prop_assert!(c.passed(), "{}", c.identity);
        }
        prop_assert_eq!(f.first.then(&f.second).unwrap(), w.map().clone());
    }

    #[test]
    fn no_lift_is_sound(obj in 0usize..7, member in 0usize..6, pick in any::<usize>()) {
        let dim = 3;
        let x = Arc::new(small_bases(dim)[obj].clone());
        let mut members = family_members(Family::IsoHorns, 2, dim).unwrap();
        members.extend(family_members(Family::ClassA, 2, dim).unwrap());
        let m = &members[member % members.len()];
        let tops = all_maps(m.inclusion.domain(), &x);
        prop_assume!(!tops.is_empty());
        let top = tops[pick % tops.len()].clone();
        let p = LiftingProblem::into_point(m.inclusion.clone(), top).unwrap();
        let engine = solve_lift(&p).unwrap();
        if let Some(l) = &engine {
            prop_assert!(p.is_lift(l));
        }
        prop_assert_eq!(engine.is_some(), oracle::lift_exists(&p));
    }
}

#[test]
fn random_compositions_are_not_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let built: Vec<_> = (0..200).map(|_| random::random_object(&mut rng, 4, 3)).collect();
    let large = built.iter().filter(|b| b.object.total_count() > 100).count();
    let with_maps = built.iter().filter(|b| !b.maps.is_empty()).count();
    assert!(large >= 40, "{large}");
    assert!(with_maps >= 80, "{with_maps}");
}

#[test]
fn map_enumeration_matches_oracle() {
    let dim = 3;
    for a in small_bases(dim) {
        for x in small_bases(dim) {
            let (a, x) = (Arc::new(a.clone()), Arc::new(x));
            if a.count(0) > 3 || x.count(0) > 3 {
                continue;
            }
            assert_eq!(all_maps(&a, &x), oracle::all_maps(&a, &x));
        }
    }
}

#[test]
fn widened_inclusion_at_all_vertices_is_the_pushout_product() {
    let dim = 3;
    let cases: Vec<Inclusion> = vec![
        fibrancy::lifting::boundary_inclusion(1, dim).unwrap(),
        fibrancy::lifting::boundary_inclusion(2, dim).unwrap(),
        Inclusion::by_labels(Arc::new(horn(2, 1, dim).unwrap()), Arc::new(delta(2, dim))).unwrap(),
        Inclusion::identity(Arc::new(delta(1, dim))),
    ];
    for inner in cases {
        let all = vec![true; inner.codomain().count(0)];
        let w = WidenedInclusion::new(&inner, &all).unwrap();
        assert_eq!(*w.map(), pushout_product(&point_into_j(dim), &inner).unwrap());
    }
}

#[test]
fn pushout_product_is_symmetric_up_to_swap() {
    let dim = 2;
    let f = point_into_j(dim);
    for g in [fibrancy::lifting::boundary_inclusion(1, dim).unwrap(), fibrancy::lifting::boundary_inclusion(2, dim).unwrap()] {
        let fg = pushout_product(&f, &g).unwrap();
        let gf = pushout_product(&g, &f).unwrap();
        let swap = |m: &Arc<SSet>, to: &Arc<SSet>| {
            SimplicialMap::from_label_fn(m.clone(), to.clone(), |_, l| {
                let (a, b) = l.as_pair().unwrap();
                Label::pair(b.clone(), a.clone())
            })
            .unwrap()
        };
        let s = swap(fg.codomain(), gf.codomain());
        assert!(s.is_bijective());
        assert_eq!(Subcomplex::image_of(&fg.map().then(&s).unwrap()), Subcomplex::image_of(gf.map()));
    }
}
