//! Slow reference computations, deliberately independent of the search
//! engine: candidates are found by scanning every simplex of the target and
//! comparing faces directly, and every complete candidate map is revalidated.

use std::sync::Arc;

use fibrancy::{validate_map, Inclusion, LiftingProblem, SSet, SimplicialMap};

/// For each degenerate simplex, one way of writing it as `s_i(t)`.
fn degeneracy_sources(b: &SSet) -> Vec<Vec<Option<(usize, usize)>>> {
    let mut src: Vec<Vec<Option<(usize, usize)>>> = (0..=b.dim()).map(|n| vec![None; b.count(n)]).collect();
    for n in 0..b.dim() {
        for t in 0..b.count(n) {
            for i in 0..=n {
                let s = b.degen(n, i, t);
                src[n + 1][s].get_or_insert((i, t));
            }
        }
    }
    src
}

struct Ext<'a> {
    b: &'a Arc<SSet>,
    x: &'a Arc<SSet>,
    over: Option<(&'a SimplicialMap, &'a SimplicialMap)>,
    src: Vec<Vec<Option<(usize, usize)>>>,
    unknowns: Vec<(usize, usize)>,
    limit: usize,
}

impl Ext<'_> {
    fn resolve(&self, img: &[Vec<Option<usize>>], n: usize, k: usize) -> Option<usize> {
        if let Some(v) = img[n][k] {
            return Some(v);
        }
        let (i, t) = self.src[n][k]?;
        self.resolve(img, n - 1, t).map(|v| self.x.degen(n - 1, i, v))
    }

    fn complete(&self, img: &[Vec<Option<usize>>]) -> Option<SimplicialMap> {
        let comps: Option<Vec<Vec<usize>>> = (0..=self.b.dim())
            .map(|n| (0..self.b.count(n)).map(|k| self.resolve(img, n, k)).collect())
            .collect();
        let m = SimplicialMap::new(self.b.clone(), self.x.clone(), comps?).ok()?;
        if !validate_map(&m).is_ok() {
            return None;
        }
        if let Some((right, bottom)) = self.over {
            if m.then(right).ok()? != *bottom {
                return None;
            }
        }
        Some(m)
    }

    fn go(&self, idx: usize, img: &mut Vec<Vec<Option<usize>>>, out: &mut Vec<SimplicialMap>) {
        if out.len() >= self.limit {
            return;
        }
        if idx == self.unknowns.len() {
            if let Some(m) = self.complete(img) {
                out.push(m);
            }
            return;
        }
        let (n, k) = self.unknowns[idx];
        for cand in 0..self.x.count(n) {
            if let Some((right, bottom)) = self.over {
                if right.apply(n, cand) != bottom.apply(n, k) {
                    continue;
                }
            }
            let faces_ok = n == 0
                || (0..=n).all(|i| match self.resolve(img, n - 1, self.b.face(n, i, k)) {
                    Some(v) => self.x.face(n, i, cand) == v,
                    None => true,
                });
            if !faces_ok {
                continue;
            }
            img[n][k] = Some(cand);
            self.go(idx + 1, img, out);
            img[n][k] = None;
        }
    }
}

/// All maps `B → X` extending `fixed` (and over `right`/`bottom` when given),
/// up to `limit` of them.
pub fn extensions(
    b: &Arc<SSet>,
    x: &Arc<SSet>,
    fixed: Option<(&SimplicialMap, &SimplicialMap)>,
    over: Option<(&SimplicialMap, &SimplicialMap)>,
    limit: usize,
) -> Vec<SimplicialMap> {
    let mut img: Vec<Vec<Option<usize>>> = (0..=b.dim()).map(|n| vec![None; b.count(n)]).collect();
    if let Some((inc, top)) = fixed {
        for n in 0..=inc.dim() {
            for a in 0..inc.domain().count(n) {
                img[n][inc.apply(n, a)] = Some(top.apply(n, a));
            }
        }
    }
    let src = degeneracy_sources(b);
    let unknowns = (0..=b.dim())
        .flat_map(|n| (0..b.count(n)).map(move |k| (n, k)))
        .filter(|&(n, k)| img[n][k].is_none() && src[n][k].is_none())
        .collect();
    let ext = Ext { b, x, over, src, unknowns, limit };
    let mut out = Vec::new();
    ext.go(0, &mut img, &mut out);
    out
}

pub fn lift_exists(p: &LiftingProblem) -> bool {
    let b = p.left.codomain();
    let x = p.top.codomain();
    let found = extensions(b, x, Some((p.left.map(), &p.top)), Some((&p.right, &p.bottom)), 1);
    found.first().is_some_and(|l| p.is_lift(l))
}

pub fn all_maps(a: &Arc<SSet>, x: &Arc<SSet>) -> Vec<SimplicialMap> {
    extensions(a, x, None, None, usize::MAX)
}

/// Vertex `j` of an `n`-simplex, by applying faces directly.
pub fn vertex(x: &SSet, n: usize, k: usize, j: usize) -> usize {
    let (mut m, mut s) = (n, k);
    while m > j {
        s = x.face(m, m, s);
        m -= 1;
    }
    while m > 0 {
        s = x.face(m, 0, s);
        m -= 1;
    }
    s
}

/// Whether the simplex is the image of some degeneracy.
pub fn is_degenerate(x: &SSet, n: usize, k: usize) -> bool {
    n > 0 && (0..x.count(n - 1)).any(|t| (0..n).any(|i| x.degen(n - 1, i, t) == k))
}

/// Per dimension, nondegenerate simplices of `Y` through `y` and outside `X`.
pub fn cells_through(inner: &Inclusion, y: usize) -> Vec<usize> {
    let ys = inner.codomain();
    (0..=ys.dim())
        .map(|n| {
            (0..ys.count(n))
                .filter(|&k| !is_degenerate(ys, n, k))
                .filter(|&k| (0..=n).any(|j| vertex(ys, n, k, j) == y))
                .filter(|&k| (0..inner.domain().count(n)).all(|a| inner.map().apply(n, a) != k))
                .count()
        })
        .collect()
}
