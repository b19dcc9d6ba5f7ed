use std::sync::Arc;

use fibrancy::kernel::standard::{boundary, delta, interval_nerve};
use fibrancy::widening::WidenedInclusion;
use fibrancy::{
    are_isomorphic, full_subcomplex, isohorn, product, pushout, validate_sset, widen, Inclusion, Label, SSet,
    SimplicialMap,
};

fn l(s: &str) -> Label {
    s.parse().unwrap()
}

#[test]
fn full_subcomplex_of_j_times_triangle_is_the_widening() {
    let d = 3;
    let j = Arc::new(interval_nerve(d));
    let tri = Arc::new(delta(2, d));
    let jx = Arc::new(product(&j, &tri).unwrap());
    let vs: Vec<Label> = ["<b0,(0)>", "<b0,(1)>", "<b0,(2)>", "<b1,(2)>"].into_iter().map(l).collect();
    let sub = full_subcomplex(&jx, &vs).unwrap();
    assert_eq!(sub.domain().nondegenerate_count(1), 7);
    let w = widen(&tri, &[l("(2)")]).unwrap();
    assert_eq!(**sub.domain(), **w.object());
}

/// Gluing `∇₀[1]` to `Y` along `V₀[1]` at `y` gives `({0}×Y) ∪ W_y({y})`.
#[test]
fn gluing_an_isoplex_at_a_vertex() {
    let d = 3;
    let h = isohorn(1, 0, d).unwrap();
    let ys: Vec<(SSet, &str)> = vec![(delta(2, d), "(1)"), (boundary(2, d).unwrap(), "(0)"), (delta(1, d), "(1)")];
    for (y, v) in ys {
        let y = Arc::new(y);
        let yv = y.find(0, &l(v)).unwrap();
        let at_y = SimplicialMap::from_vertex_map(h.body().clone(), y.clone(), &[yv]).unwrap();
        let p = pushout(h.inclusion(), &at_y).unwrap();
        assert!(validate_sset(&p.object).is_ok());

        let point = Arc::new(delta(0, d));
        let inner = Inclusion::new(SimplicialMap::from_vertex_map(point, y.clone(), &[yv]).unwrap()).unwrap();
        let mut mask = vec![false; y.count(0)];
        mask[yv] = true;
        let w = WidenedInclusion::new(&inner, &mask).unwrap();
        let expected = w.map().domain();
        assert_eq!(p.object.count(0), y.count(0) + 1);
        assert!(are_isomorphic(&p.object, expected), "{v}");
    }
}

#[test]
fn json_documents_use_the_documented_field_names() {
    let x = delta(1, 1);
    let v: serde_json::Value = serde_json::from_str(&x.to_json()).unwrap();
    assert_eq!(v["truncation_dim"], 1);
    assert_eq!(v["simplices"][1], serde_json::json!(["(0,0)", "(0,1)", "(1,1)"]));
    assert_eq!(v["face"]["1"]["(0,1)"], serde_json::json!(["(1)", "(0)"]));
    assert_eq!(v["degeneracy"]["0"]["(0)"], serde_json::json!(["(0,0)"]));
    let m = SimplicialMap::identity(Arc::new(x)).to_doc();
    let v = serde_json::to_value(m).unwrap();
    assert_eq!(v["components"]["0"]["(1)"], "(1)");
}
