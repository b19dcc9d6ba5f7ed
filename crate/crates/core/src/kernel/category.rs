//! Finite categories and their nerves.
//!
//! A category is presented by objects, non-identity morphisms and a
//! composition table. Identities are implicit and named `id_<object>`.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::label::{is_name_char, Label};
use super::sset::SSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub name: String,
    pub src: String,
    pub tgt: String,
}

/// JSON presentation: `{"objects", "morphisms", "compose": [["g","f","gf"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    names: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    /// `compose[g][f]` is `g ∘ f` when `tgt(f) = src(g)`.
    compose: Vec<Vec<Option<usize>>>,
}

pub fn identity_name(object: &str) -> String {
    format!("id_{object}")
}

fn check_name(kind: &str, s: &str) -> Result<()> {
    if s.is_empty() || !s.chars().all(is_name_char) {
        return Err(Error::InvalidCategory(format!("{kind} name {s:?} has unsupported characters")));
    }
    Ok(())
}

impl FiniteCategory {
    pub fn from_doc(doc: &CategoryDoc) -> Result<FiniteCategory> {
        let mut obj_index = HashMap::new();
        for (k, o) in doc.objects.iter().enumerate() {
            check_name("object", o)?;
            if obj_index.insert(o.clone(), k).is_some() {
                return Err(Error::InvalidCategory(format!("duplicate object {o}")));
            }
        }
        let lookup_obj = |o: &str| {
            obj_index
                .get(o)
                .copied()
                .ok_or_else(|| Error::InvalidCategory(format!("unknown object {o}")))
        };

        let mut names: Vec<String> = doc.objects.iter().map(|o| identity_name(o)).collect();
        let mut src: Vec<usize> = (0..doc.objects.len()).collect();
        let mut tgt = src.clone();
        let identity = src.clone();
        let mut mor_index: HashMap<String, usize> =
            names.iter().enumerate().map(|(k, n)| (n.clone(), k)).collect();
        for m in &doc.morphisms {
            check_name("morphism", &m.name)?;
            let (s, t) = (lookup_obj(&m.src)?, lookup_obj(&m.tgt)?);
            if let Some(&k) = mor_index.get(&m.name) {
                // an identity may be listed explicitly
                if k < identity.len() && src[k] == s && tgt[k] == t {
                    continue;
                }
                return Err(Error::InvalidCategory(format!("duplicate morphism {}", m.name)));
            }
            mor_index.insert(m.name.clone(), names.len());
            names.push(m.name.clone());
            src.push(s);
            tgt.push(t);
        }

        let count = names.len();
        let mut compose = vec![vec![None; count]; count];
        for f in 0..count {
            compose[tgt[f]][f] = Some(f);
            compose[f][src[f]] = Some(f);
        }
        let lookup_mor = |m: &str| {
            mor_index
                .get(m)
                .copied()
                .ok_or_else(|| Error::InvalidCategory(format!("unknown morphism {m}")))
        };
        for [g, f, gf] in &doc.compose {
            let (g, f, gf) = (lookup_mor(g)?, lookup_mor(f)?, lookup_mor(gf)?);
            if tgt[f] != src[g] {
                return Err(Error::InvalidCategory(format!(
                    "{} and {} are not composable",
                    names[g], names[f]
                )));
            }
            if src[gf] != src[f] || tgt[gf] != tgt[g] {
                return Err(Error::InvalidCategory(format!(
                    "{} has the wrong endpoints to be {} ∘ {}",
                    names[gf], names[g], names[f]
                )));
            }
            match compose[g][f] {
                Some(old) if old != gf => {
                    return Err(Error::InvalidCategory(format!(
                        "conflicting composites for {} ∘ {}",
                        names[g], names[f]
                    )))
                }
                _ => compose[g][f] = Some(gf),
            }
        }
        let cat = FiniteCategory { objects: doc.objects.clone(), names, src, tgt, identity, compose };
        cat.check()?;
        Ok(cat)
    }

    fn check(&self) -> Result<()> {
        let count = self.names.len();
        for g in 0..count {
            for f in 0..count {
                if (self.tgt[f] == self.src[g]) != self.compose[g][f].is_some() {
                    return Err(Error::InvalidCategory(format!(
                        "composite {} ∘ {} is missing",
                        self.names[g], self.names[f]
                    )));
                }
            }
        }
        for h in 0..count {
            for g in 0..count {
                let Some(hg) = self.compose[h][g] else { continue };
                for f in 0..count {
                    let Some(gf) = self.compose[g][f] else { continue };
                    if self.compose[hg][f] != self.compose[h][gf] {
                        return Err(Error::InvalidCategory(format!(
                            "composition is not associative at ({}, {}, {})",
                            self.names[h], self.names[g], self.names[f]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_doc(&self) -> CategoryDoc {
        let ids = self.objects.len();
        let morphisms = (ids..self.names.len())
            .map(|k| MorphismDoc {
                name: self.names[k].clone(),
                src: self.objects[self.src[k]].clone(),
                tgt: self.objects[self.tgt[k]].clone(),
            })
            .collect();
        let mut compose = Vec::new();
        for g in ids..self.names.len() {
            for f in ids..self.names.len() {
                if let Some(gf) = self.compose[g][f] {
                    compose.push([self.names[g].clone(), self.names[f].clone(), self.names[gf].clone()]);
                }
            }
        }
        CategoryDoc { objects: self.objects.clone(), morphisms, compose }
    }

    pub fn from_json(s: &str) -> Result<FiniteCategory> {
        FiniteCategory::from_doc(&serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("serializable")
    }

    /// A thin category on `objects` with an arrow `a -> b` exactly when
    /// `le(a, b)`. The relation must be a preorder.
    pub fn preorder(objects: &[String], le: impl Fn(usize, usize) -> bool) -> Result<FiniteCategory> {
        let n = objects.len();
        for a in 0..n {
            if !le(a, a) {
                return Err(Error::InvalidCategory("preorder must be reflexive".into()));
            }
        }
        let arrow = |a: usize, b: usize| {
            if a == b {
                identity_name(&objects[a])
            } else {
                format!("{}_{}", objects[a], objects[b])
            }
        };
        let mut morphisms = Vec::new();
        let mut compose = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && le(a, b) {
                    morphisms.push(MorphismDoc { name: arrow(a, b), src: objects[a].clone(), tgt: objects[b].clone() });
                    for c in 0..n {
                        if c != b && le(b, c) {
                            if !le(a, c) {
                                return Err(Error::InvalidCategory("preorder must be transitive".into()));
                            }
                            compose.push([arrow(b, c), arrow(a, b), arrow(a, c)]);
                        }
                    }
                }
            }
        }
        FiniteCategory::from_doc(&CategoryDoc { objects: objects.to_vec(), morphisms, compose })
    }

    /// The poset `[n] = 0 -> 1 -> ... -> n`.
    pub fn chain(n: usize) -> FiniteCategory {
        FiniteCategory::chain_with_iso(n, None)
    }

    /// `[n]` with the arrow `i -> i+1` made invertible, written `[n]_i`.
    pub fn chain_with_iso(n: usize, i: Option<usize>) -> FiniteCategory {
        let objects: Vec<String> = (0..=n).map(|k| k.to_string()).collect();
        FiniteCategory::preorder(&objects, |a, b| a <= b || i.is_some_and(|i| a == i + 1 && b == i))
            .expect("chains are preorders")
    }

    /// The free-living isomorphism `0 ≅ 1`.
    pub fn interval_groupoid() -> FiniteCategory {
        FiniteCategory::chain_with_iso(1, Some(0))
    }

    /// The cyclic group of the given order as a one-object category on `*`.
    pub fn cyclic_group(order: usize) -> Result<FiniteCategory> {
        if order == 0 {
            return Err(Error::InvalidCategory("a group has positive order".into()));
        }
        let name = |k: usize| if k == 0 { identity_name("*") } else { format!("g{k}") };
        let morphisms = (1..order)
            .map(|k| MorphismDoc { name: name(k), src: "*".into(), tgt: "*".into() })
            .collect();
        let mut compose = Vec::new();
        for a in 1..order {
            for b in 1..order {
                compose.push([name(a), name(b), name((a + b) % order)]);
            }
        }
        FiniteCategory::from_doc(&CategoryDoc { objects: vec!["*".into()], morphisms, compose })
    }

    /// The full subcategory on the given objects.
    pub fn full_subcategory(&self, keep: &[bool]) -> Result<FiniteCategory> {
        let ids = self.objects.len();
        let objects = (0..ids).filter(|&o| keep[o]).map(|o| self.objects[o].clone()).collect();
        let inside = |m: usize| keep[self.src[m]] && keep[self.tgt[m]];
        let morphisms = (ids..self.names.len())
            .filter(|&m| inside(m))
            .map(|m| MorphismDoc {
                name: self.names[m].clone(),
                src: self.objects[self.src[m]].clone(),
                tgt: self.objects[self.tgt[m]].clone(),
            })
            .collect();
        let mut compose = Vec::new();
        for g in ids..self.names.len() {
            for f in ids..self.names.len() {
                if let (true, true, Some(gf)) = (inside(g), inside(f), self.compose[g][f]) {
                    compose.push([self.names[g].clone(), self.names[f].clone(), self.names[gf].clone()]);
                }
            }
        }
        FiniteCategory::from_doc(&CategoryDoc { objects, morphisms, compose })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_identity(&self, m: usize) -> bool {
        m < self.identity.len()
    }

    /// The nerve truncated at `dim`.
    pub fn nerve(&self, dim: usize) -> SSet {
        // composable strings, grown one morphism at a time
        let mut strings: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
        if dim >= 1 {
            strings[1] = (0..self.names.len()).map(|m| vec![m]).collect();
        }
        for n in 2..=dim {
            let mut next = Vec::new();
            for s in &strings[n - 1] {
                let last = *s.last().unwrap();
                for m in 0..self.names.len() {
                    if self.src[m] == self.tgt[last] {
                        let mut t = s.clone();
                        t.push(m);
                        next.push(t);
                    }
                }
            }
            strings[n] = next;
        }

        let mut labels: Vec<Vec<Label>> = vec![self.objects.iter().map(|o| Label::Object(o.clone())).collect()];
        let mut by_label: BTreeMap<Label, Vec<usize>> = BTreeMap::new();
        for ss in strings.iter().skip(1) {
            let mut ls = Vec::with_capacity(ss.len());
            for s in ss {
                let l = Label::Path(s.iter().map(|&m| self.names[m].clone()).collect());
                by_label.insert(l.clone(), s.clone());
                ls.push(l);
            }
            labels.push(ls);
        }
        let obj_of: HashMap<&str, usize> = self.objects.iter().enumerate().map(|(k, o)| (o.as_str(), k)).collect();
        let to_label = |s: Vec<usize>| Label::Path(s.iter().map(|&m| self.names[m].clone()).collect());
        let vertex = |s: &[usize], i: usize| if i == 0 { self.src[s[0]] } else { self.tgt[s[i - 1]] };

        let face = |n: usize, i: usize, l: &Label| -> Label {
            let s = &by_label[l];
            if n == 1 {
                let o = if i == 0 { self.tgt[s[0]] } else { self.src[s[0]] };
                return Label::Object(self.objects[o].clone());
            }
            let mut t = s.clone();
            if i == 0 {
                t.remove(0);
            } else if i == n {
                t.pop();
            } else {
                let gf = self.compose[t[i]][t[i - 1]].expect("composable");
                t.splice(i - 1..=i, [gf]);
            }
            to_label(t)
        };
        let degen = |n: usize, i: usize, l: &Label| -> Label {
            if n == 0 {
                let Label::Object(o) = l else { unreachable!() };
                return to_label(vec![self.identity[obj_of[o.as_str()]]]);
            }
            let s = &by_label[l];
            let mut t = s.clone();
            t.insert(i, self.identity[vertex(s, i)]);
            to_label(t)
        };
        SSet::from_fns(dim, labels, face, degen).expect("nerve tables are closed")
    }
}
