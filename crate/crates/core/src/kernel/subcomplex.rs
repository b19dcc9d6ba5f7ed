//! Subcomplexes of a fixed ambient simplicial set.
//!
//! Unions and intersections of subobjects are computed here by membership
//! masks; [`Subcomplex::to_inclusion`] materializes a subcomplex as its own
//! simplicial set carrying the ambient labels.

use std::sync::Arc;

use super::map::{Inclusion, SimplicialMap};
use super::sset::SSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Subcomplex {
    ambient: Arc<SSet>,
    member: Vec<Vec<bool>>,
}

impl PartialEq for Subcomplex {
    fn eq(&self, other: &Self) -> bool {
        self.member == other.member
            && (Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient)
    }
}

impl Subcomplex {
    pub fn empty(ambient: Arc<SSet>) -> Subcomplex {
        let member = ambient.counts().into_iter().map(|c| vec![false; c]).collect();
        Subcomplex { ambient, member }
    }

    pub fn full(ambient: Arc<SSet>) -> Subcomplex {
        let member = ambient.counts().into_iter().map(|c| vec![true; c]).collect();
        Subcomplex { ambient, member }
    }

    /// Membership by predicate. The caller is responsible for closure; see
    /// [`is_closed`](Self::is_closed).
    pub fn from_fn(ambient: Arc<SSet>, mut pred: impl FnMut(usize, usize) -> bool) -> Subcomplex {
        let member = (0..=ambient.dim())
            .map(|n| (0..ambient.count(n)).map(|k| pred(n, k)).collect())
            .collect();
        Subcomplex { ambient, member }
    }

    /// The full subcomplex on a set of vertices (given as a mask).
    pub fn full_on(ambient: Arc<SSet>, vertex_mask: &[bool]) -> Subcomplex {
        let a = ambient.clone();
        Subcomplex::from_fn(ambient, |n, k| a.vertices_of(n, k).iter().all(|&v| vertex_mask[v]))
    }

    /// The smallest subcomplex containing the given simplices.
    pub fn generated_by(ambient: Arc<SSet>, seeds: impl IntoIterator<Item = (usize, usize)>) -> Subcomplex {
        let mut sub = Subcomplex::empty(ambient);
        for (n, k) in seeds {
            sub.member[n][k] = true;
        }
        sub.close();
        sub
    }

    /// The image of a map into the ambient.
    pub fn image_of(map: &SimplicialMap) -> Subcomplex {
        let mut sub = Subcomplex::empty(map.codomain().clone());
        for (n, comp) in map.components().iter().enumerate() {
            for &t in comp {
                sub.member[n][t] = true;
            }
        }
        sub
    }

    /// Closes under faces (downwards) and then degeneracies (upwards).
    fn close(&mut self) {
        let x = self.ambient.clone();
        for n in (1..=x.dim()).rev() {
            for k in 0..x.count(n) {
                if self.member[n][k] {
                    for &f in x.faces_of(n, k) {
                        self.member[n - 1][f] = true;
                    }
                }
            }
        }
        for n in 0..x.dim() {
            for k in 0..x.count(n) {
                if self.member[n][k] {
                    for &d in x.degens_of(n, k) {
                        self.member[n + 1][d] = true;
                    }
                }
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        let x = &self.ambient;
        (0..=x.dim()).all(|n| {
            (0..x.count(n)).filter(|&k| self.member[n][k]).all(|k| {
                (n == 0 || x.faces_of(n, k).iter().all(|&f| self.member[n - 1][f]))
                    && (n == x.dim() || x.degens_of(n, k).iter().all(|&d| self.member[n + 1][d]))
            })
        })
    }

    pub fn ambient(&self) -> &Arc<SSet> {
        &self.ambient
    }

    pub fn contains(&self, n: usize, k: usize) -> bool {
        self.member[n][k]
    }

    pub fn mask(&self, n: usize) -> &[bool] {
        &self.member[n]
    }

    pub fn count(&self, n: usize) -> usize {
        self.member[n].iter().filter(|&&b| b).count()
    }

    pub fn is_full(&self) -> bool {
        self.member.iter().all(|m| m.iter().all(|&b| b))
    }

    fn check_same(&self, other: &Subcomplex) -> Result<()> {
        if Arc::ptr_eq(&self.ambient, &other.ambient) || self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::InvalidArgument("subcomplexes of different ambients".into()))
        }
    }

    pub fn union(&self, other: &Subcomplex) -> Result<Subcomplex> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a || b))
    }

    pub fn intersection(&self, other: &Subcomplex) -> Result<Subcomplex> {
        self.check_same(other)?;
        Ok(self.zip(other, |a, b| a && b))
    }

    fn zip(&self, other: &Subcomplex, op: impl Fn(bool, bool) -> bool) -> Subcomplex {
        let member = self
            .member
            .iter()
            .zip(&other.member)
            .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| op(x, y)).collect())
            .collect();
        Subcomplex { ambient: self.ambient.clone(), member }
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> bool {
        self.member
            .iter()
            .zip(&other.member)
            .all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| !x || y))
    }

    /// Materializes the subcomplex as a simplicial set with the ambient
    /// labels, together with its inclusion.
    pub fn to_inclusion(&self) -> Result<Inclusion> {
        if !self.is_closed() {
            return Err(Error::Internal("subcomplex is not closed under faces and degeneracies".into()));
        }
        let x = &self.ambient;
        let d = x.dim();
        let members: Vec<Vec<usize>> = (0..=d)
            .map(|n| (0..x.count(n)).filter(|&k| self.member[n][k]).collect())
            .collect();
        let mut local = vec![Vec::new(); d + 1];
        for n in 0..=d {
            local[n] = vec![usize::MAX; x.count(n)];
            for (j, &k) in members[n].iter().enumerate() {
                local[n][k] = j;
            }
        }
        let labels = members
            .iter()
            .enumerate()
            .map(|(n, ks)| ks.iter().map(|&k| x.label(n, k).clone()).collect())
            .collect();
        let face = (0..=d)
            .map(|n| {
                if n == 0 {
                    return Vec::new();
                }
                members[n]
                    .iter()
                    .flat_map(|&k| x.faces_of(n, k).iter().map(|&f| local[n - 1][f]))
                    .collect()
            })
            .collect();
        let degen = (0..=d)
            .map(|n| {
                if n == d {
                    return Vec::new();
                }
                members[n]
                    .iter()
                    .flat_map(|&k| x.degens_of(n, k).iter().map(|&s| local[n + 1][s]))
                    .collect()
            })
            .collect();
        let sub = Arc::new(SSet::from_tables(d, labels, face, degen)?);
        Inclusion::new(SimplicialMap::new(sub, x.clone(), members)?)
    }

    /// Materialized simplicial set only.
    pub fn to_sset(&self) -> Result<Arc<SSet>> {
        Ok(self.to_inclusion()?.domain().clone())
    }
}
