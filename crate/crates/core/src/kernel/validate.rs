//! Checks of the simplicial identities and of map commutation.

use serde::{Deserialize, Serialize};

use super::label::Label;
use super::map::SimplicialMap;
use super::sset::SSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// The identity that fails, e.g. `d0d2 = d1d0`.
    pub identity: String,
    pub dim: usize,
    /// The simplex at which both sides were evaluated.
    pub simplex: Label,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn flag(&mut self, ok: bool, identity: impl FnOnce() -> String, dim: usize, simplex: &Label) {
        if !ok {
            self.violations.push(Violation { identity: identity(), dim, simplex: simplex.clone() });
        }
    }
}

/// Checks every simplicial identity within the truncation, and that every
/// degeneracy map is injective.
pub fn validate_sset(x: &SSet) -> ValidationReport {
    let mut r = ValidationReport::default();
    let d = x.dim();
    for n in 0..=d {
        for k in 0..x.count(n) {
            let l = x.label(n, k);
            if n >= 2 {
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = x.face(n - 1, i, x.face(n, j, k));
                        let rhs = x.face(n - 1, j - 1, x.face(n, i, k));
                        r.flag(lhs == rhs, || format!("d{i}d{j} = d{}d{i}", j - 1), n, l);
                    }
                }
            }
            if n + 2 <= d {
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = x.degen(n + 1, i, x.degen(n, j, k));
                        let rhs = x.degen(n + 1, j + 1, x.degen(n, i, k));
                        r.flag(lhs == rhs, || format!("s{i}s{j} = s{}s{i}", j + 1), n, l);
                    }
                }
            }
            if n < d {
                for j in 0..=n {
                    let sj = x.degen(n, j, k);
                    for i in 0..=n + 1 {
                        let lhs = x.face(n + 1, i, sj);
                        let (rhs, name) = if i < j {
                            (x.degen(n - 1, j - 1, x.face(n, i, k)), format!("d{i}s{j} = s{}d{i}", j - 1))
                        } else if i == j || i == j + 1 {
                            (k, format!("d{i}s{j} = id"))
                        } else {
                            (x.degen(n - 1, j, x.face(n, i - 1, k)), format!("d{i}s{j} = s{j}d{}", i - 1))
                        };
                        r.flag(lhs == rhs, || name, n, l);
                    }
                }
            }
        }
        if n < d {
            for i in 0..=n {
                let mut seen = vec![usize::MAX; x.count(n + 1)];
                for k in 0..x.count(n) {
                    let t = x.degen(n, i, k);
                    if seen[t] != usize::MAX {
                        let other = x.label(n, seen[t]).clone();
                        r.flag(false, || format!("s{i} injective (collides with {other})"), n, x.label(n, k));
                    } else {
                        seen[t] = k;
                    }
                }
            }
        }
    }
    r
}

/// Checks that a map commutes with every face and degeneracy within the
/// truncation.
pub fn validate_map(f: &SimplicialMap) -> ValidationReport {
    let mut r = ValidationReport::default();
    let (x, y) = (f.domain(), f.codomain());
    let d = x.dim();
    if y.dim() != d {
        r.flag(false, || format!("truncations agree ({d} vs {})", y.dim()), 0, &Label::Int(0));
        return r;
    }
    for n in 0..=d {
        for k in 0..x.count(n) {
            let l = x.label(n, k);
            let fk = f.apply(n, k);
            for i in 0..=n {
                if n > 0 {
                    let ok = f.apply(n - 1, x.face(n, i, k)) == y.face(n, i, fk);
                    r.flag(ok, || format!("f d{i} = d{i} f"), n, l);
                }
                if n < d {
                    let ok = f.apply(n + 1, x.degen(n, i, k)) == y.degen(n, i, fk);
                    r.flag(ok, || format!("f s{i} = s{i} f"), n, l);
                }
            }
        }
    }
    r
}
