//! Seeded random compositions of constructors.

use std::sync::Arc;

use fibrancy::kernel::standard::{boundary, delta, horn, interval_nerve};
use fibrancy::lifting::boundary_inclusion;
use fibrancy::{
    coproduct, full_subcomplex, isohorn, isoplex, product, projections, pushout, skeleton, FiniteCategory, Label,
    SSet, SimplicialMap, Widening,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct Built {
    pub name: String,
    pub object: Arc<SSet>,
    pub maps: Vec<SimplicialMap>,
}

fn leaf(rng: &mut ChaCha8Rng, dim: usize) -> Built {
    let (name, object): (String, SSet) = match rng.gen_range(0..9) {
        0 => {
            let n = rng.gen_range(0..=2);
            (format!("delta({n})"), delta(n, dim))
        }
        1 => {
            let n = rng.gen_range(0..=3);
            (format!("boundary({n})"), boundary(n, dim).unwrap())
        }
        2 => {
            let n = rng.gen_range(2..=3);
            let k = rng.gen_range(0..=n);
            (format!("horn({n},{k})"), horn(n, k, dim).unwrap())
        }
        3 => ("J".into(), interval_nerve(dim)),
        4 => {
            let c = random_preorder(rng, 3);
            ("nerve(preorder)".into(), c.nerve(dim))
        }
        5 => {
            let order = rng.gen_range(2..=3);
            (format!("nerve(Z/{order})"), FiniteCategory::cyclic_group(order).unwrap().nerve(dim))
        }
        6 => {
            let n = rng.gen_range(1..=3);
            let i = rng.gen_range(0..n);
            (format!("isoplex({n},{i})"), (**isoplex(n, i, dim).unwrap().body()).clone())
        }
        7 => {
            let n = rng.gen_range(1..=3);
            let i = rng.gen_range(0..n);
            (format!("isohorn({n},{i})"), (**isohorn(n, i, dim).unwrap().body()).clone())
        }
        _ => ("nerve(I)".into(), FiniteCategory::interval_groupoid().nerve(dim)),
    };
    Built { name, object: Arc::new(object), maps: Vec::new() }
}

/// A random preorder on at most `max` objects, as the transitive closure of a
/// random relation.
pub fn random_preorder(rng: &mut ChaCha8Rng, max: usize) -> FiniteCategory {
    let n = rng.gen_range(1..=max);
    let mut le = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            le[a][b] = a == b || rng.gen_bool(0.3);
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if le[a][k] && le[k][b] {
                    le[a][b] = true;
                }
            }
        }
    }
    let objects: Vec<String> = (0..n).map(|k| format!("o{k}")).collect();
    FiniteCategory::preorder(&objects, |a, b| le[a][b]).unwrap()
}

fn random_mask(rng: &mut ChaCha8Rng, n: usize) -> Vec<bool> {
    (0..n).map(|_| rng.gen_bool(0.5)).collect()
}

fn total(x: &SSet) -> usize {
    x.total_count()
}

pub fn random_object(rng: &mut ChaCha8Rng, dim: usize, depth: usize) -> Built {
    if depth == 0 || rng.gen_bool(0.25) {
        return leaf(rng, dim);
    }
    let a = random_object(rng, dim, depth - 1);
    let mut maps = a.maps;
    let x = a.object;
    let v = x.count(0);
    match rng.gen_range(0..6) {
        0 => {
            let b = random_object(rng, dim, depth - 1);
            maps.extend(b.maps);
            if total(&x) * total(&b.object) > 6000 {
                return Built { name: a.name, object: x, maps };
            }
            let p = Arc::new(product(&x, &b.object).unwrap());
            let (p1, p2) = projections(&x, &b.object, &p).unwrap();
            maps.extend([p1, p2]);
            Built { name: format!("product({},{})", a.name, b.name), object: p, maps }
        }
        1 => {
            let keep: Vec<Label> =
                random_mask(rng, v).iter().enumerate().filter(|(_, &m)| m).map(|(k, _)| x.label(0, k).clone()).collect();
            let inc = full_subcomplex(&x, &keep).unwrap();
            let object = inc.domain().clone();
            maps.push(inc.into_map());
            Built { name: format!("fullsub({})", a.name), object, maps }
        }
        2 => {
            let k = rng.gen_range(0..=dim);
            let inc = skeleton(&x, k).unwrap();
            let object = inc.domain().clone();
            maps.push(inc.into_map());
            Built { name: format!("skeleton({},{k})", a.name), object, maps }
        }
        3 if total(&x) <= 400 => {
            let w = Widening::new(&x, &random_mask(rng, v)).unwrap();
            maps.push(w.result().map().clone());
            maps.push(w.retraction().unwrap());
            maps.push(w.partial_projection().unwrap());
            Built { name: format!("widen({})", a.name), object: w.object().clone(), maps }
        }
        4 => {
            let b = random_object(rng, dim, depth - 1);
            maps.extend(b.maps);
            let (sum, inj) = coproduct(&[x, b.object], dim).unwrap();
            maps.extend(inj);
            Built { name: format!("coproduct({},{})", a.name, b.name), object: sum, maps }
        }
        _ if v > 0 => {
            let f = boundary_inclusion(1, dim).unwrap();
            let ends = [rng.gen_range(0..v), rng.gen_range(0..v)];
            let pts = f.domain().clone();
            let comps = (0..=dim)
                .map(|n| {
                    (0..pts.count(n))
                        .map(|k| x.apply_operator(0, ends[pts.vertices_of(n, k)[0]], &vec![0; n + 1]).unwrap())
                        .collect()
                })
                .collect();
            let g = SimplicialMap::new(pts, x.clone(), comps).unwrap();
            let po = pushout(&f, &g).unwrap();
            maps.extend([po.from_b.clone(), po.from_c.map().clone()]);
            Built { name: format!("attach_edge({})", a.name), object: po.object, maps }
        }
        _ => Built { name: a.name, object: x, maps },
    }
}
