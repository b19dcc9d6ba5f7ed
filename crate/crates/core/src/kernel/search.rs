//! Backtracking search for simplicial maps.
//!
//! A map out of `B` is determined by the images of its nondegenerate
//! simplices: degenerate ones are forced by the degeneracies. The search
//! assigns the nondegenerate simplices that are not already fixed in order of
//! (dimension, label). A cell's candidates are exactly the simplices of the
//! target with the required face tuple, looked up in a [`TargetIndex`], in
//! label order. After each assignment, cells one dimension up whose faces are
//! now all known are checked to have at least one candidate.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::map::SimplicialMap;
use super::sset::SSet;

const UNSET: usize = usize::MAX;

/// Simplices of a target grouped by face tuple.
#[derive(Debug)]
pub struct TargetIndex {
    by_faces: Vec<HashMap<Vec<usize>, Vec<usize>>>,
}

impl TargetIndex {
    pub fn new(x: &SSet) -> TargetIndex {
        let by_faces = (0..=x.dim())
            .map(|n| {
                let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                if n > 0 {
                    for k in 0..x.count(n) {
                        m.entry(x.faces_of(n, k).to_vec()).or_default().push(k);
                    }
                }
                m
            })
            .collect();
        TargetIndex { by_faces }
    }

    fn with_faces(&self, n: usize, faces: &[usize]) -> &[usize] {
        self.by_faces[n].get(faces).map_or(&[], Vec::as_slice)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Any,
    /// Injective in every dimension.
    Injective,
    /// Bijective in every dimension, i.e. an isomorphism.
    Bijective,
}

/// Constraint `p ∘ f = q` for `p : X → Y` and `q : B → Y`.
#[derive(Clone, Copy, Debug)]
pub struct Over<'a> {
    pub right: &'a SimplicialMap,
    pub bottom: &'a SimplicialMap,
}

pub struct MapSearch<'a> {
    source: &'a SSet,
    target: &'a SSet,
    index: &'a TargetIndex,
    fixed: Vec<Vec<usize>>,
    over: Option<Over<'a>>,
    mode: Mode,
    node_budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub exhausted_budget: bool,
}

enum Step {
    FillDegenerate(usize),
    Assign(usize, usize),
}

impl<'a> MapSearch<'a> {
    pub fn new(source: &'a SSet, target: &'a SSet, index: &'a TargetIndex) -> MapSearch<'a> {
        let fixed = (0..=source.dim()).map(|n| vec![UNSET; source.count(n)]).collect();
        MapSearch { source, target, index, fixed, over: None, mode: Mode::Any, node_budget: None }
    }

    /// Fixes the image of one simplex of the source.
    pub fn fix(&mut self, n: usize, k: usize, image: usize) {
        self.fixed[n][k] = image;
    }

    /// Fixes images along a subcomplex: `inc` includes `A` into the source and
    /// `top` maps `A` to the target.
    pub fn fix_along(&mut self, inc: &SimplicialMap, top: &SimplicialMap) {
        for n in 0..=inc.dim() {
            for (a, &b) in inc.components()[n].iter().enumerate() {
                self.fixed[n][b] = top.apply(n, a);
            }
        }
    }

    pub fn over(mut self, over: Over<'a>) -> Self {
        self.over = Some(over);
        self
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    /// Gives up after visiting this many search nodes.
    pub fn budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    /// Calls `visit` on every solution in search order until it breaks.
    pub fn run<F>(&self, mut visit: F) -> SearchStats
    where
        F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
    {
        let (b, x) = (self.source, self.target);
        let d = b.dim();
        let mut stats = SearchStats::default();
        if x.dim() != d {
            return stats;
        }
        if self.mode == Mode::Bijective && b.counts() != x.counts() {
            return stats;
        }

        // how to rebuild each degenerate simplex: (i, u) with s_i(u) = it
        let mut degen_of: Vec<Vec<(usize, usize)>> = (0..=d).map(|n| vec![(UNSET, UNSET); b.count(n)]).collect();
        for n in 0..d {
            for u in 0..b.count(n) {
                for i in 0..=n {
                    let t = b.degen(n, i, u);
                    if degen_of[n + 1][t].0 == UNSET {
                        degen_of[n + 1][t] = (i, u);
                    }
                }
            }
        }
        let mut steps = Vec::new();
        let mut is_var: Vec<Vec<bool>> = (0..=d).map(|n| vec![false; b.count(n)]).collect();
        for n in 0..=d {
            steps.push(Step::FillDegenerate(n));
            for k in b.nondegenerate(n) {
                if self.fixed[n][k] == UNSET {
                    steps.push(Step::Assign(n, k));
                    is_var[n][k] = true;
                }
            }
        }
        // variable cofaces, for forward checking
        let mut cofaces: Vec<Vec<Vec<usize>>> = (0..=d).map(|n| vec![Vec::new(); b.count(n)]).collect();
        for n in 1..=d {
            for e in 0..b.count(n) {
                if is_var[n][e] {
                    for &f in b.faces_of(n, e) {
                        if !cofaces[n - 1][f].contains(&e) {
                            cofaces[n - 1][f].push(e);
                        }
                    }
                }
            }
        }
        let signatures = (self.mode == Mode::Bijective).then(|| (vertex_signatures(b), vertex_signatures(x)));

        let mut state = State {
            img: self.fixed.clone(),
            used: (0..=d).map(|n| vec![false; x.count(n)]).collect(),
            faces_buf: Vec::new(),
        };
        if self.mode != Mode::Any {
            for n in 0..=d {
                for k in 0..b.count(n) {
                    let t = state.img[n][k];
                    if t != UNSET {
                        if state.used[n][t] {
                            return stats;
                        }
                        state.used[n][t] = true;
                    }
                }
            }
        }
        let ctx = Ctx {
            search: self,
            steps: &steps,
            degen_of: &degen_of,
            cofaces: &cofaces,
            signatures: signatures.as_ref(),
        };
        let _ = ctx.go(0, &mut state, &mut stats, &mut visit);
        stats
    }

    /// The first solution in search order.
    pub fn first(&self) -> (Option<Vec<Vec<usize>>>, SearchStats) {
        let mut found = None;
        let stats = self.run(|img| {
            found = Some(img.to_vec());
            ControlFlow::Break(())
        });
        (found, stats)
    }
}

/// Per vertex, the number of nondegenerate simplices of each dimension
/// containing it.
fn vertex_signatures(x: &SSet) -> Vec<Vec<usize>> {
    let mut sig = vec![vec![0; x.dim() + 1]; x.count(0)];
    for n in 0..=x.dim() {
        for k in x.nondegenerate(n) {
            let mut vs = x.vertices_of(n, k).to_vec();
            vs.dedup();
            for v in vs {
                sig[v][n] += 1;
            }
        }
    }
    sig
}

struct State {
    img: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    faces_buf: Vec<usize>,
}

struct Ctx<'s, 'a> {
    search: &'s MapSearch<'a>,
    steps: &'s [Step],
    degen_of: &'s [Vec<(usize, usize)>],
    cofaces: &'s [Vec<Vec<usize>>],
    signatures: Option<&'s (Vec<Vec<usize>>, Vec<Vec<usize>>)>,
}

impl Ctx<'_, '_> {
    fn go<F>(&self, pos: usize, st: &mut State, stats: &mut SearchStats, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
    {
        stats.nodes += 1;
        if let Some(budget) = self.search.node_budget {
            if stats.nodes > budget {
                stats.exhausted_budget = true;
                return ControlFlow::Break(());
            }
        }
        let Some(step) = self.steps.get(pos) else {
            return visit(&st.img);
        };
        let (b, x) = (self.search.source, self.search.target);
        let injective = self.search.mode != Mode::Any;
        match *step {
            Step::FillDegenerate(n) => {
                let mut filled = Vec::new();
                let mut ok = true;
                for t in 0..b.count(n) {
                    if !b.is_degenerate(n, t) || st.img[n][t] != UNSET {
                        continue;
                    }
                    let (i, u) = self.degen_of[n][t];
                    let image = x.degen(n - 1, i, st.img[n - 1][u]);
                    if injective {
                        if st.used[n][image] {
                            ok = false;
                            break;
                        }
                        st.used[n][image] = true;
                    }
                    st.img[n][t] = image;
                    filled.push(t);
                }
                let flow = if ok { self.go(pos + 1, st, stats, visit) } else { ControlFlow::Continue(()) };
                for t in filled {
                    if injective {
                        st.used[n][st.img[n][t]] = false;
                    }
                    st.img[n][t] = UNSET;
                }
                flow
            }
            Step::Assign(n, k) => {
                let candidates: Vec<usize> = if n == 0 {
                    (0..x.count(0)).collect()
                } else {
                    st.faces_buf.clear();
                    st.faces_buf.extend(b.faces_of(n, k).iter().map(|&f| st.img[n - 1][f]));
                    self.search.index.with_faces(n, &st.faces_buf).to_vec()
                };
                for c in candidates {
                    if injective && (st.used[n][c] || x.is_degenerate(n, c)) {
                        continue;
                    }
                    if let Some((sb, sx)) = self.signatures {
                        if n == 0 && sb[k] != sx[c] {
                            continue;
                        }
                    }
                    if let Some(over) = self.search.over {
                        if over.right.apply(n, c) != over.bottom.apply(n, k) {
                            continue;
                        }
                    }
                    st.img[n][k] = c;
                    if self.forward_ok(n, k, st) {
                        if injective {
                            st.used[n][c] = true;
                        }
                        let flow = self.go(pos + 1, st, stats, visit);
                        if injective {
                            st.used[n][c] = false;
                        }
                        if flow.is_break() {
                            st.img[n][k] = UNSET;
                            return flow;
                        }
                    }
                    st.img[n][k] = UNSET;
                }
                ControlFlow::Continue(())
            }
        }
    }

    /// Every variable coface of the just-assigned cell whose faces are all
    /// known must still have a candidate.
    fn forward_ok(&self, n: usize, k: usize, st: &mut State) -> bool {
        let b = self.search.source;
        for &e in &self.cofaces[n][k] {
            st.faces_buf.clear();
            let mut complete = true;
            for &f in b.faces_of(n + 1, e) {
                let t = st.img[n][f];
                if t == UNSET {
                    complete = false;
                    break;
                }
                st.faces_buf.push(t);
            }
            if complete && self.search.index.with_faces(n + 1, &st.faces_buf).is_empty() {
                return false;
            }
        }
        true
    }
}
