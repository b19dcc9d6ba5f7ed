//! Finite simplicial sets truncated at a dimension cap.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::label::Label;
use crate::error::{Error, Result};

/// A finite simplicial set presented by explicit simplex tables in
/// dimensions `0..=dim`.
///
/// Simplices of each dimension are stored sorted by label; a simplex is
/// addressed by `(n, k)` where `k` is its position in that order. Faces and
/// degeneracies are stored as flat tables, `face[n][k * (n + 1) + i]` being
/// the index of `d_i` of the `k`-th `n`-simplex. The tables are not checked
/// against the simplicial identities on construction; see
/// [`validate_sset`](crate::validate_sset).
#[derive(Clone, Debug)]
pub struct SSet {
    dim: usize,
    labels: Vec<Vec<Label>>,
    face: Vec<Vec<usize>>,
    degen: Vec<Vec<usize>>,
    vertices: Vec<Vec<usize>>,
    degenerate: Vec<Vec<bool>>,
}

impl PartialEq for SSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.labels == other.labels
            && self.face == other.face
            && self.degen == other.degen
    }
}

impl Eq for SSet {}

impl SSet {
    /// The empty simplicial set.
    pub fn empty(dim: usize) -> SSet {
        SSet {
            dim,
            labels: vec![Vec::new(); dim + 1],
            face: vec![Vec::new(); dim + 1],
            degen: vec![Vec::new(); dim + 1],
            vertices: vec![Vec::new(); dim + 1],
            degenerate: vec![Vec::new(); dim + 1],
        }
    }

    /// Builds a simplicial set from index tables. Labels may come in any
    /// order; the result is re-sorted by label and the tables permuted.
    pub fn from_tables(
        dim: usize,
        labels: Vec<Vec<Label>>,
        face: Vec<Vec<usize>>,
        degen: Vec<Vec<usize>>,
    ) -> Result<SSet> {
        if labels.len() != dim + 1 || face.len() != dim + 1 || degen.len() != dim + 1 {
            return Err(Error::MalformedTable(format!(
                "expected {} dimensions of tables",
                dim + 1
            )));
        }
        let counts: Vec<usize> = labels.iter().map(Vec::len).collect();
        for n in 0..=dim {
            let want_face = if n == 0 { 0 } else { counts[n] * (n + 1) };
            if face[n].len() != want_face {
                return Err(Error::MalformedTable(format!("face table size in dimension {n}")));
            }
            if n > 0 && face[n].iter().any(|&t| t >= counts[n - 1]) {
                return Err(Error::MalformedTable(format!("face index out of range in dimension {n}")));
            }
            let want_degen = if n == dim { 0 } else { counts[n] * (n + 1) };
            if degen[n].len() != want_degen {
                return Err(Error::MalformedTable(format!("degeneracy table size in dimension {n}")));
            }
            if n < dim && degen[n].iter().any(|&t| t >= counts[n + 1]) {
                return Err(Error::MalformedTable(format!(
                    "degeneracy index out of range in dimension {n}"
                )));
            }
        }

        // new_of[n][old] = sorted position
        let mut new_of = Vec::with_capacity(dim + 1);
        let mut sorted_labels = Vec::with_capacity(dim + 1);
        for (n, ls) in labels.into_iter().enumerate() {
            let mut order: Vec<usize> = (0..ls.len()).collect();
            order.sort_by(|&a, &b| ls[a].cmp(&ls[b]));
            for w in order.windows(2) {
                if ls[w[0]] == ls[w[1]] {
                    return Err(Error::DuplicateLabel { dim: n, label: ls[w[0]].to_string() });
                }
            }
            let mut inv = vec![0; ls.len()];
            for (new, &old) in order.iter().enumerate() {
                inv[old] = new;
            }
            let mut slots: Vec<Option<Label>> = ls.into_iter().map(Some).collect();
            sorted_labels.push(order.iter().map(|&old| slots[old].take().unwrap()).collect::<Vec<_>>());
            new_of.push(inv);
        }

        let permute = |n: usize, table: &[usize], target_dim: usize| -> Vec<usize> {
            let arity = n + 1;
            let mut out = vec![0; table.len()];
            for old in 0..counts[n] {
                let new = new_of[n][old];
                for i in 0..arity {
                    out[new * arity + i] = new_of[target_dim][table[old * arity + i]];
                }
            }
            out
        };
        let face: Vec<Vec<usize>> = (0..=dim)
            .map(|n| if n == 0 { Vec::new() } else { permute(n, &face[n], n - 1) })
            .collect();
        let degen: Vec<Vec<usize>> = (0..=dim)
            .map(|n| if n == dim { Vec::new() } else { permute(n, &degen[n], n + 1) })
            .collect();
        Ok(SSet::assemble(dim, sorted_labels, face, degen))
    }

    /// Builds a simplicial set from label lists and label-level structure maps.
    pub fn from_fns<F, G>(dim: usize, labels: Vec<Vec<Label>>, face: F, degen: G) -> Result<SSet>
    where
        F: Fn(usize, usize, &Label) -> Label,
        G: Fn(usize, usize, &Label) -> Label,
    {
        if labels.len() != dim + 1 {
            return Err(Error::MalformedTable(format!("expected {} dimensions", dim + 1)));
        }
        let mut sorted = labels;
        for (n, ls) in sorted.iter_mut().enumerate() {
            ls.sort();
            for w in ls.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::DuplicateLabel { dim: n, label: w[0].to_string() });
                }
            }
        }
        let find = |n: usize, l: &Label| -> Result<usize> {
            sorted[n]
                .binary_search(l)
                .map_err(|_| Error::UnknownSimplex { dim: n, label: l.to_string() })
        };
        let mut face_t = vec![Vec::new(); dim + 1];
        let mut degen_t = vec![Vec::new(); dim + 1];
        for n in 0..=dim {
            for l in &sorted[n] {
                if n > 0 {
                    for i in 0..=n {
                        face_t[n].push(find(n - 1, &face(n, i, l))?);
                    }
                }
                if n < dim {
                    for i in 0..=n {
                        degen_t[n].push(find(n + 1, &degen(n, i, l))?);
                    }
                }
            }
        }
        Ok(SSet::assemble(dim, sorted, face_t, degen_t))
    }

    fn assemble(
        dim: usize,
        labels: Vec<Vec<Label>>,
        face: Vec<Vec<usize>>,
        degen: Vec<Vec<usize>>,
    ) -> SSet {
        let mut vertices: Vec<Vec<usize>> = Vec::with_capacity(dim + 1);
        vertices.push((0..labels[0].len()).collect());
        for n in 1..=dim {
            let mut vs = Vec::with_capacity(labels[n].len() * (n + 1));
            for k in 0..labels[n].len() {
                let last = face[n][k * (n + 1) + n];
                let first = face[n][k * (n + 1)];
                // vertices 0..n-1 come from d_n, vertex n is the last vertex of d_0
                vs.extend_from_slice(&vertices[n - 1][last * n..last * n + n]);
                vs.push(vertices[n - 1][first * n + n - 1]);
            }
            vertices.push(vs);
        }
        let mut degenerate: Vec<Vec<bool>> = labels.iter().map(|ls| vec![false; ls.len()]).collect();
        for n in 0..dim {
            for &t in &degen[n] {
                degenerate[n + 1][t] = true;
            }
        }
        SSet { dim, labels, face, degen, vertices, degenerate }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn total_count(&self) -> usize {
        self.labels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.labels[0].is_empty()
    }

    pub fn labels(&self, n: usize) -> &[Label] {
        &self.labels[n]
    }

    pub fn label(&self, n: usize, k: usize) -> &Label {
        &self.labels[n][k]
    }

    pub fn find(&self, n: usize, label: &Label) -> Option<usize> {
        self.labels.get(n)?.binary_search(label).ok()
    }

    pub fn require(&self, n: usize, label: &Label) -> Result<usize> {
        self.find(n, label)
            .ok_or_else(|| Error::UnknownSimplex { dim: n, label: label.to_string() })
    }

    /// `d_i` of the `k`-th `n`-simplex.
    pub fn face(&self, n: usize, i: usize, k: usize) -> usize {
        self.face[n][k * (n + 1) + i]
    }

    pub fn faces_of(&self, n: usize, k: usize) -> &[usize] {
        &self.face[n][k * (n + 1)..(k + 1) * (n + 1)]
    }

    /// `s_i` of the `k`-th `n`-simplex; requires `n < dim`.
    pub fn degen(&self, n: usize, i: usize, k: usize) -> usize {
        self.degen[n][k * (n + 1) + i]
    }

    pub fn degens_of(&self, n: usize, k: usize) -> &[usize] {
        &self.degen[n][k * (n + 1)..(k + 1) * (n + 1)]
    }

    /// Vertex indices of an `n`-simplex, in order.
    pub fn vertices_of(&self, n: usize, k: usize) -> &[usize] {
        &self.vertices[n][k * (n + 1)..(k + 1) * (n + 1)]
    }

    pub fn is_degenerate(&self, n: usize, k: usize) -> bool {
        self.degenerate[n][k]
    }

    /// Indices of the nondegenerate `n`-simplices, in label order.
    pub fn nondegenerate(&self, n: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.count(n)).filter(move |&k| !self.degenerate[n][k])
    }

    pub fn nondegenerate_count(&self, n: usize) -> usize {
        self.nondegenerate(n).count()
    }

    /// Largest dimension holding a nondegenerate simplex, if any.
    pub fn top_nondegenerate_dim(&self) -> Option<usize> {
        (0..=self.dim).rev().find(|&n| self.nondegenerate(n).next().is_some())
    }

    /// Whether every simplex is determined by its vertex sequence.
    pub fn vertex_determined(&self) -> bool {
        (0..=self.dim).all(|n| {
            let mut seen: Vec<&[usize]> = (0..self.count(n)).map(|k| self.vertices_of(n, k)).collect();
            seen.sort();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }

    /// Looks up the simplex with a given vertex sequence, assuming
    /// [`vertex_determined`](Self::vertex_determined).
    pub fn simplex_with_vertices(&self, vs: &[usize]) -> Option<usize> {
        let n = vs.len().checked_sub(1)?;
        if n > self.dim {
            return None;
        }
        (0..self.count(n)).find(|&k| self.vertices_of(n, k) == vs)
    }

    /// Applies the simplicial operator of a monotone map `[m] -> [n]`,
    /// written as its value sequence, to the `k`-th `n`-simplex.
    pub fn apply_operator(&self, n: usize, k: usize, seq: &[usize]) -> Result<usize> {
        let m = seq.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty operator".into()))?;
        if m > self.dim {
            return Err(Error::BeyondTruncation { requested: m, truncation: self.dim });
        }
        if seq.windows(2).any(|w| w[0] > w[1]) || seq.iter().any(|&v| v > n) {
            return Err(Error::InvalidArgument(format!("{seq:?} is not a monotone map into [{n}]")));
        }
        // restrict to the image by deleting missing vertices, highest first
        let mut image: Vec<usize> = seq.to_vec();
        image.dedup();
        let (mut dim, mut cur) = (n, k);
        for v in (0..=n).rev() {
            if image.binary_search(&v).is_err() {
                cur = self.face(dim, v, cur);
                dim -= 1;
            }
        }
        // then repeat entries, left to right
        for p in 1..=m {
            if seq[p] == seq[p - 1] {
                cur = self.degen(dim, p - 1, cur);
                dim += 1;
            }
        }
        Ok(cur)
    }

    /// The same simplicial set cut down to a smaller truncation.
    pub fn truncate(&self, dim: usize) -> Result<SSet> {
        if dim > self.dim {
            return Err(Error::BeyondTruncation { requested: dim, truncation: self.dim });
        }
        let mut degen = self.degen[..=dim].to_vec();
        degen[dim].clear();
        Ok(SSet::assemble(
            dim,
            self.labels[..=dim].to_vec(),
            self.face[..=dim].to_vec(),
            degen,
        ))
    }

    /// Copy with one face entry overwritten; used to exercise the validators.
    pub fn with_face_entry(&self, n: usize, i: usize, k: usize, target: usize) -> Result<SSet> {
        if n == 0 || n > self.dim || i > n || k >= self.count(n) || target >= self.count(n - 1) {
            return Err(Error::InvalidArgument("face entry out of range".into()));
        }
        let mut face = self.face.clone();
        face[n][k * (n + 1) + i] = target;
        Ok(SSet::assemble(self.dim, self.labels.clone(), face, self.degen.clone()))
    }

    pub fn to_doc(&self) -> SSetDoc {
        let mut face = BTreeMap::new();
        let mut degeneracy = BTreeMap::new();
        for n in 0..=self.dim {
            if n > 0 {
                let table: BTreeMap<String, Vec<Label>> = (0..self.count(n))
                    .map(|k| {
                        let fs = self.faces_of(n, k).iter().map(|&f| self.label(n - 1, f).clone());
                        (self.label(n, k).to_string(), fs.collect())
                    })
                    .collect();
                face.insert(n.to_string(), table);
            }
            if n < self.dim {
                let table: BTreeMap<String, Vec<Label>> = (0..self.count(n))
                    .map(|k| {
                        let ds = self.degens_of(n, k).iter().map(|&d| self.label(n + 1, d).clone());
                        (self.label(n, k).to_string(), ds.collect())
                    })
                    .collect();
                degeneracy.insert(n.to_string(), table);
            }
        }
        SSetDoc {
            truncation_dim: self.dim,
            simplices: self.labels.clone(),
            face,
            degeneracy,
        }
    }

    pub fn from_doc(doc: &SSetDoc) -> Result<SSet> {
        let dim = doc.truncation_dim;
        if doc.simplices.len() != dim + 1 {
            return Err(Error::MalformedTable("simplices must list every dimension".into()));
        }
        let lookup = |kind: &str, n: usize, l: &Label, arity: usize, table: &BTreeMap<String, BTreeMap<String, Vec<Label>>>| {
            let entry = table
                .get(&n.to_string())
                .and_then(|t| t.get(&l.to_string()))
                .ok_or_else(|| Error::MalformedTable(format!("missing {kind} entry for {n}-simplex {l}")))?;
            if entry.len() != arity {
                return Err(Error::MalformedTable(format!("{kind} entry for {l} has wrong arity")));
            }
            Ok(entry.clone())
        };
        let face_tab = doc.face.clone();
        let degen_tab = doc.degeneracy.clone();
        let mut faces: BTreeMap<(usize, Label), Vec<Label>> = BTreeMap::new();
        let mut degens: BTreeMap<(usize, Label), Vec<Label>> = BTreeMap::new();
        for n in 0..=dim {
            for l in &doc.simplices[n] {
                if n > 0 {
                    faces.insert((n, l.clone()), lookup("face", n, l, n + 1, &face_tab)?);
                }
                if n < dim {
                    degens.insert((n, l.clone()), lookup("degeneracy", n, l, n + 1, &degen_tab)?);
                }
            }
        }
        // unknown targets surface as UnknownSimplex from from_fns; the closures
        // only see labels already checked above
        let x = SSet::from_fns(
            dim,
            doc.simplices.clone(),
            |n, i, l| faces[&(n, l.clone())][i].clone(),
            |n, i, l| degens[&(n, l.clone())][i].clone(),
        )?;
        Ok(x)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<SSet> {
        SSet::from_doc(&serde_json::from_str(s)?)
    }
}

/// JSON document form of a [`SSet`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SSetDoc {
    pub truncation_dim: usize,
    pub simplices: Vec<Vec<Label>>,
    /// dimension -> simplex -> `[d_0, ..., d_n]`
    pub face: BTreeMap<String, BTreeMap<String, Vec<Label>>>,
    /// dimension -> simplex -> `[s_0, ..., s_n]`
    pub degeneracy: BTreeMap<String, BTreeMap<String, Vec<Label>>>,
}
