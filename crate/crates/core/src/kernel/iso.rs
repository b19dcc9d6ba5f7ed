//! Isomorphism search between simplicial sets.

use std::sync::Arc;

use super::map::SimplicialMap;
use super::search::{MapSearch, Mode, TargetIndex};
use super::sset::SSet;

/// Some isomorphism `X → Y`, the first in search order, if one exists.
pub fn find_isomorphism(x: &Arc<SSet>, y: &Arc<SSet>) -> Option<SimplicialMap> {
    if x.dim() != y.dim() || x.counts() != y.counts() {
        return None;
    }
    let index = TargetIndex::new(y);
    let (found, _) = MapSearch::new(x, y, &index).mode(Mode::Bijective).first();
    found.map(|c| SimplicialMap::new(x.clone(), y.clone(), c).expect("search yields total maps"))
}

pub fn are_isomorphic(x: &Arc<SSet>, y: &Arc<SSet>) -> bool {
    find_isomorphism(x, y).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::category::FiniteCategory;
    use crate::kernel::standard::{boundary, delta, horn, interval_nerve};
    use crate::kernel::validate::validate_map;

    #[test]
    fn nerve_of_chain_is_simplex() {
        let n = Arc::new(FiniteCategory::chain(2).nerve(3));
        let d = Arc::new(delta(2, 3));
        let iso = find_isomorphism(&n, &d).unwrap();
        assert!(validate_map(&iso).is_ok());
        assert!(iso.is_bijective());
    }

    #[test]
    fn nerve_of_interval_groupoid_is_j() {
        let n = Arc::new(FiniteCategory::interval_groupoid().nerve(2));
        assert!(are_isomorphic(&n, &Arc::new(interval_nerve(2))));
    }

    #[test]
    fn horns_are_not_boundaries() {
        let h = Arc::new(horn(2, 0, 2).unwrap());
        let b = Arc::new(boundary(2, 2).unwrap());
        assert!(!are_isomorphic(&h, &b));
        // two edges out of a vertex, a path, two edges into a vertex
        assert!(!are_isomorphic(&h, &Arc::new(horn(2, 1, 2).unwrap())));
        assert!(!are_isomorphic(&h, &Arc::new(horn(2, 2, 2).unwrap())));
        assert!(are_isomorphic(&h, &h.clone()));
    }
}
