//! Simplicial maps and inclusions.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::label::Label;
use super::sset::{SSet, SSetDoc};
use crate::error::{Error, Result};

/// A dimensionwise function between two simplicial sets of equal truncation.
///
/// Construction only checks that the component tables are total and in
/// range; commutation with the structure maps is checked by
/// [`validate_map`](crate::validate_map).
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    domain: Arc<SSet>,
    codomain: Arc<SSet>,
    components: Vec<Vec<usize>>,
}

impl PartialEq for SimplicialMap {
    fn eq(&self, other: &Self) -> bool {
        self.components == other.components
            && (Arc::ptr_eq(&self.domain, &other.domain) || self.domain == other.domain)
            && (Arc::ptr_eq(&self.codomain, &other.codomain) || self.codomain == other.codomain)
    }
}

impl SimplicialMap {
    pub fn new(domain: Arc<SSet>, codomain: Arc<SSet>, components: Vec<Vec<usize>>) -> Result<Self> {
        if domain.dim() != codomain.dim() {
            return Err(Error::DimensionMismatch(domain.dim(), codomain.dim()));
        }
        if components.len() != domain.dim() + 1 {
            return Err(Error::MalformedTable("map must have one component per dimension".into()));
        }
        for (n, comp) in components.iter().enumerate() {
            if comp.len() != domain.count(n) || comp.iter().any(|&t| t >= codomain.count(n)) {
                return Err(Error::MalformedTable(format!("map component {n} is not total")));
            }
        }
        Ok(SimplicialMap { domain, codomain, components })
    }

    /// Builds a map from a label-level function.
    pub fn from_label_fn<F>(domain: Arc<SSet>, codomain: Arc<SSet>, f: F) -> Result<Self>
    where
        F: Fn(usize, &Label) -> Label,
    {
        let components = (0..=domain.dim())
            .map(|n| {
                domain
                    .labels(n)
                    .iter()
                    .map(|l| codomain.require(n, &f(n, l)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(domain, codomain, components)
    }

    /// The map that keeps labels unchanged, for a domain whose labels all
    /// occur in the codomain.
    pub fn by_labels(domain: Arc<SSet>, codomain: Arc<SSet>) -> Result<Self> {
        SimplicialMap::from_label_fn(domain, codomain, |_, l| l.clone())
    }

    /// Extends a vertex assignment to a map into a codomain whose simplices
    /// are determined by their vertices.
    pub fn from_vertex_map(domain: Arc<SSet>, codomain: Arc<SSet>, vertex_map: &[usize]) -> Result<Self> {
        if vertex_map.len() != domain.count(0) {
            return Err(Error::InvalidArgument("vertex map must cover every vertex".into()));
        }
        let mut components = Vec::with_capacity(domain.dim() + 1);
        for n in 0..=domain.dim() {
            let mut by_vertices: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for k in 0..codomain.count(n) {
                if by_vertices.insert(codomain.vertices_of(n, k).to_vec(), k).is_some() {
                    return Err(Error::InvalidArgument(
                        "codomain simplices are not determined by their vertices".into(),
                    ));
                }
            }
            let comp = (0..domain.count(n))
                .map(|k| {
                    let vs: Vec<usize> = domain.vertices_of(n, k).iter().map(|&v| vertex_map[v]).collect();
                    by_vertices.get(&vs).copied().ok_or_else(|| Error::UnknownSimplex {
                        dim: n,
                        label: format!("with vertices {vs:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            components.push(comp);
        }
        SimplicialMap::new(domain, codomain, components)
    }

    pub fn identity(x: Arc<SSet>) -> Self {
        let components = (0..=x.dim()).map(|n| (0..x.count(n)).collect()).collect();
        SimplicialMap { domain: x.clone(), codomain: x, components }
    }

    /// The unique map to the terminal object.
    pub fn to_terminal(x: Arc<SSet>, terminal: Arc<SSet>) -> Result<Self> {
        if (0..=terminal.dim()).any(|n| terminal.count(n) != 1) {
            return Err(Error::InvalidArgument("target is not terminal".into()));
        }
        let components = (0..=x.dim()).map(|n| vec![0; x.count(n)]).collect();
        SimplicialMap::new(x, terminal, components)
    }

    pub fn domain(&self) -> &Arc<SSet> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SSet> {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn apply(&self, n: usize, k: usize) -> usize {
        self.components[n][k]
    }

    pub fn apply_label(&self, n: usize, label: &Label) -> Option<&Label> {
        let k = self.domain.find(n, label)?;
        Some(self.codomain.label(n, self.components[n][k]))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if !(Arc::ptr_eq(&self.codomain, &other.domain) || *self.codomain == *other.domain) {
            return Err(Error::NotComposable);
        }
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(n, comp)| comp.iter().map(|&k| other.components[n][k]).collect())
            .collect();
        Ok(SimplicialMap {
            domain: self.domain.clone(),
            codomain: other.codomain.clone(),
            components,
        })
    }

    pub fn is_injective(&self) -> bool {
        self.first_non_injective_dim().is_none()
    }

    fn first_non_injective_dim(&self) -> Option<usize> {
        self.components.iter().enumerate().find_map(|(n, comp)| {
            let mut seen = vec![false; self.codomain.count(n)];
            comp.iter().any(|&t| std::mem::replace(&mut seen[t], true)).then_some(n)
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && (0..=self.dim()).all(|n| self.domain.count(n) == self.codomain.count(n))
    }

    /// Inverse of a bijective map.
    pub fn inverse(&self) -> Result<SimplicialMap> {
        if !self.is_bijective() {
            return Err(Error::InvalidArgument("map is not bijective".into()));
        }
        let components = self
            .components
            .iter()
            .map(|comp| {
                let mut inv = vec![0; comp.len()];
                for (k, &t) in comp.iter().enumerate() {
                    inv[t] = k;
                }
                inv
            })
            .collect();
        Ok(SimplicialMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            components,
        })
    }

    /// The same map with a different codomain containing the image, matched
    /// by label.
    pub fn corestrict(&self, codomain: Arc<SSet>) -> Result<SimplicialMap> {
        let components = self
            .components
            .iter()
            .enumerate()
            .map(|(n, comp)| {
                comp.iter()
                    .map(|&t| codomain.require(n, self.codomain.label(n, t)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialMap::new(self.domain.clone(), codomain, components)
    }

    /// Copy with one component entry overwritten; used to exercise validators.
    pub fn with_entry(&self, n: usize, k: usize, target: usize) -> Result<SimplicialMap> {
        if n > self.dim() || k >= self.domain.count(n) || target >= self.codomain.count(n) {
            return Err(Error::InvalidArgument("map entry out of range".into()));
        }
        let mut components = self.components.clone();
        components[n][k] = target;
        Ok(SimplicialMap { components, ..self.clone() })
    }

    pub fn component_table(&self) -> BTreeMap<String, BTreeMap<String, Label>> {
        (0..=self.dim())
            .map(|n| {
                let table = (0..self.domain.count(n))
                    .map(|k| {
                        (
                            self.domain.label(n, k).to_string(),
                            self.codomain.label(n, self.components[n][k]).clone(),
                        )
                    })
                    .collect();
                (n.to_string(), table)
            })
            .collect()
    }

    pub fn to_doc(&self) -> MapDoc {
        MapDoc {
            domain: self.domain.to_doc(),
            codomain: self.codomain.to_doc(),
            components: self.component_table(),
        }
    }

    pub fn from_doc(doc: &MapDoc) -> Result<SimplicialMap> {
        let domain = Arc::new(SSet::from_doc(&doc.domain)?);
        let codomain = Arc::new(SSet::from_doc(&doc.codomain)?);
        SimplicialMap::from_label_fn(domain, codomain, |n, l| {
            doc.components
                .get(&n.to_string())
                .and_then(|t| t.get(&l.to_string()))
                .cloned()
                // an absent entry maps to an unmatched label and is reported
                .unwrap_or(Label::Object("<missing>".into()))
        })
    }
}

/// JSON form of a map: both objects plus per-dimension label tables.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapDoc {
    pub domain: SSetDoc,
    pub codomain: SSetDoc,
    pub components: BTreeMap<String, BTreeMap<String, Label>>,
}

/// A simplicial map that is injective in every dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Inclusion(SimplicialMap);

impl Inclusion {
    pub fn new(map: SimplicialMap) -> Result<Inclusion> {
        if let Some(n) = map.first_non_injective_dim() {
            return Err(Error::NotInjective(n));
        }
        Ok(Inclusion(map))
    }

    pub fn identity(x: Arc<SSet>) -> Inclusion {
        Inclusion(SimplicialMap::identity(x))
    }

    /// Inclusion of a simplicial set whose labels all occur in `codomain`.
    pub fn by_labels(domain: Arc<SSet>, codomain: Arc<SSet>) -> Result<Inclusion> {
        Inclusion::new(SimplicialMap::by_labels(domain, codomain)?)
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.0
    }

    pub fn into_map(self) -> SimplicialMap {
        self.0
    }

    pub fn domain(&self) -> &Arc<SSet> {
        self.0.domain()
    }

    pub fn codomain(&self) -> &Arc<SSet> {
        self.0.codomain()
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Composite of inclusions, `other ∘ self`.
    pub fn then(&self, other: &Inclusion) -> Result<Inclusion> {
        Ok(Inclusion(self.0.then(&other.0)?))
    }

    /// Whether the image is everything.
    pub fn is_iso(&self) -> bool {
        self.0.is_bijective()
    }

    /// Membership mask of the image, per dimension.
    pub fn image_mask(&self) -> Vec<Vec<bool>> {
        (0..=self.dim())
            .map(|n| {
                let mut mask = vec![false; self.codomain().count(n)];
                for &t in &self.0.components()[n] {
                    mask[t] = true;
                }
                mask
            })
            .collect()
    }
}
