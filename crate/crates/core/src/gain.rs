//! Gain graphs, their lifts (covering graphs) and spanning-tree
//! normalization.
//!
//! A gain is stored once per undirected edge, for the orientation
//! `min(u, v) -> max(u, v)`; the reverse gain is the group inverse, so the
//! symmetric arc condition holds by construction.
//!
//! The lift puts vertex `(v, j)` at index `v * r + j` and joins `(v, j)` to
//! `(u, k)` whenever `{u, v}` is a base edge and `f(u, v)` sends sheet `j`
//! to sheet `k` (a left action).

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{parse_num, strip_comment, Graph};
use crate::group::{GroupElement, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GainGraph {
    base: Graph,
    group: GroupSpec,
    /// Aligned with `base.edges()`.
    gains: Vec<GroupElement>,
}

impl GainGraph {
    pub fn new(base: Graph, group: GroupSpec, gains: Vec<GroupElement>) -> Result<Self> {
        if gains.len() != base.edge_count() {
            return Err(Error::Parameter(format!(
                "{} gains for {} edges",
                gains.len(),
                base.edge_count()
            )));
        }
        for g in &gains {
            group.validate(g)?;
        }
        Ok(GainGraph { base, group, gains })
    }

    /// Every edge carries the identity.
    pub fn trivial(base: Graph, group: GroupSpec) -> Self {
        let gains = vec![group.identity(); base.edge_count()];
        GainGraph { base, group, gains }
    }

    /// Gains given per oriented edge `(u, v, f(u, v))`; edges of `base`
    /// that are not listed get the identity.
    pub fn from_oriented(
        base: Graph,
        group: GroupSpec,
        oriented: impl IntoIterator<Item = (usize, usize, GroupElement)>,
    ) -> Result<Self> {
        let mut f = GainGraph::trivial(base, group);
        for (u, v, g) in oriented {
            f.set_gain(u, v, g)?;
        }
        Ok(f)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    /// Stored gains, one per entry of `base().edges()`.
    pub fn gains(&self) -> &[GroupElement] {
        &self.gains
    }

    /// `f(u, v)`; `None` when `{u, v}` is not an edge.
    pub fn gain(&self, u: usize, v: usize) -> Option<GroupElement> {
        let i = self.base.edge_index(u, v)?;
        let g = &self.gains[i];
        Some(if u < v { g.clone() } else { self.group.inverse(g) })
    }

    pub fn set_gain(&mut self, u: usize, v: usize, g: GroupElement) -> Result<()> {
        self.group.validate(&g)?;
        let i = self
            .base
            .edge_index(u, v)
            .ok_or_else(|| Error::InvalidEdge(u, v, "not an edge of the base".into()))?;
        self.gains[i] = if u < v { g } else { self.group.inverse(&g) };
        Ok(())
    }

    pub fn sheets(&self) -> usize {
        self.group.sheets()
    }

    pub fn lift(&self) -> CoverGraph {
        let r = self.sheets();
        let n = self.base.n();
        let mut edges = Vec::with_capacity(self.base.edge_count() * r);
        for (&(a, b), g) in self.base.edges().iter().zip(&self.gains) {
            // (a, j) ~ (b, f(b, a) j) and f(b, a) = g^-1
            let back = self.group.inverse(g);
            for j in 0..r {
                let k = self.group.act(&back, j);
                edges.push((a * r + j, b * r + k));
            }
        }
        let graph = Graph::from_edges(n * r, edges).expect("lift of a simple graph is simple");
        CoverGraph {
            graph,
            base_n: n,
            sheets: r,
        }
    }

    /// Equivalent gain graph that is the identity on every tree edge.
    ///
    /// With `sigma(root) = id` and `sigma(c) = f(p, c)^-1 sigma(p)` along tree
    /// edges, the new gain is `sigma(u)^-1 f(u, v) sigma(v)`.
    pub fn normalize(&self, tree: &SpanningTree) -> Result<GainGraph> {
        tree.check_spans(&self.base)?;
        let grp = &self.group;
        let mut sigma: Vec<Option<GroupElement>> = vec![None; self.base.n()];
        sigma[tree.root] = Some(grp.identity());
        for &c in &tree.order {
            if let Some(p) = tree.parent[c] {
                let f_pc = self.gain(p, c).expect("tree edge is a base edge");
                let s = grp.compose(&grp.inverse(&f_pc), sigma[p].as_ref().unwrap());
                sigma[c] = Some(s);
            }
        }
        let gains = self
            .base
            .edges()
            .iter()
            .zip(&self.gains)
            .map(|(&(u, v), g)| {
                let su = sigma[u].as_ref().unwrap();
                let sv = sigma[v].as_ref().unwrap();
                grp.compose(&grp.compose(&grp.inverse(su), g), sv)
            })
            .collect();
        Ok(GainGraph {
            base: self.base.clone(),
            group: grp.clone(),
            gains,
        })
    }

    /// True iff every cycle has identity net gain, checked after
    /// normalizing on a BFS tree.
    pub fn is_balanced(&self) -> Result<bool> {
        let tree = SpanningTree::bfs(&self.base, 0)?;
        let norm = self.normalize(&tree)?;
        Ok(norm.gains.iter().all(|g| self.group.is_identity(g)))
    }

    /// Canonical gain-file text.
    pub fn to_gain_file(&self) -> String {
        let mut s = String::from("gainfile 1\n");
        let _ = writeln!(s, "group {}", self.group);
        let _ = writeln!(s, "vertices {}", self.base.n());
        for (&(u, v), g) in self.base.edges().iter().zip(&self.gains) {
            let _ = writeln!(s, "edge {u} {v} {g}");
        }
        s
    }

    /// Parses the gain-file format. A gain written on `edge u v` is read as
    /// `f(u, v)`, so a line with `u > v` is stored inverted.
    pub fn parse_gain_file(text: &str) -> Result<Self> {
        let mut seen_magic = false;
        let mut group: Option<GroupSpec> = None;
        let mut n: Option<usize> = None;
        let mut edges: Vec<(usize, usize, GroupElement, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let toks: Vec<&str> = strip_comment(raw).split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line, msg };
            if !seen_magic {
                if toks != ["gainfile", "1"] {
                    return Err(perr("expected `gainfile 1`".into()));
                }
                seen_magic = true;
                continue;
            }
            match toks[0] {
                "group" if group.is_none() => {
                    group = Some(GroupSpec::parse_header(&toks[1..]).map_err(|e| perr(e.to_string()))?);
                }
                "vertices" if n.is_none() => {
                    if toks.len() != 2 {
                        return Err(perr("expected `vertices <n>`".into()));
                    }
                    n = Some(parse_num(toks[1], line)?);
                }
                "edge" => {
                    let grp = group.as_ref().ok_or_else(|| perr("`edge` before `group`".into()))?;
                    if n.is_none() {
                        return Err(perr("`edge` before `vertices`".into()));
                    }
                    if toks.len() < 4 {
                        return Err(perr("expected `edge <u> <v> <gain>`".into()));
                    }
                    let u = parse_num(toks[1], line)?;
                    let v = parse_num(toks[2], line)?;
                    let g = grp.parse_element(&toks[3..]).map_err(|e| perr(e.to_string()))?;
                    edges.push((u, v, g, line));
                }
                other => return Err(perr(format!("unexpected token `{other}`"))),
            }
        }
        if !seen_magic {
            return Err(Error::Parse { line: 0, msg: "empty gain file".into() });
        }
        let group = group.ok_or(Error::Parse { line: 0, msg: "missing `group` line".into() })?;
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing `vertices` line".into() })?;
        let mut seen = std::collections::HashSet::new();
        for &(u, v, _, line) in &edges {
            let msg = if u == v {
                "self-loop"
            } else if u >= n || v >= n {
                "vertex out of range"
            } else if !seen.insert((u.min(v), u.max(v))) {
                "repeated edge"
            } else {
                continue;
            };
            return Err(Error::Parse { line, msg: format!("edge {u} {v}: {msg}") });
        }
        let base = Graph::from_edges(n, edges.iter().map(|e| (e.0, e.1)))?;
        GainGraph::from_oriented(base, group, edges.into_iter().map(|(u, v, g, _)| (u, v, g)))
    }
}

/// A lifted graph together with its covering map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    graph: Graph,
    base_n: usize,
    sheets: usize,
}

impl CoverGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sheets(&self) -> usize {
        self.sheets
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    /// The covering map.
    pub fn fiber_of(&self, x: usize) -> usize {
        x / self.sheets
    }

    pub fn sheet_of(&self, x: usize) -> usize {
        x % self.sheets
    }

    pub fn vertex(&self, base_vertex: usize, sheet: usize) -> usize {
        base_vertex * self.sheets + sheet
    }

    pub fn fiber(&self, v: usize) -> std::ops::Range<usize> {
        v * self.sheets..(v + 1) * self.sheets
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.graph.components()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Checks the covering structure against `base`: fibers are cocliques
    /// and each base edge lifts to a perfect matching between its fibers.
    pub fn is_cover_of(&self, base: &Graph) -> bool {
        if base.n() != self.base_n || self.graph.n() != self.base_n * self.sheets {
            return false;
        }
        if self.graph.edge_count() != base.edge_count() * self.sheets {
            return false;
        }
        for x in 0..self.graph.n() {
            let v = self.fiber_of(x);
            let mut hit = vec![0usize; base.n()];
            for &y in self.graph.neighbors(x) {
                hit[self.fiber_of(y)] += 1;
            }
            for (u, &h) in hit.iter().enumerate() {
                let want = usize::from(base.has_edge(u, v));
                if h != want {
                    return false;
                }
            }
        }
        true
    }
}

/// Rooted spanning tree stored as a parent array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    parent: Vec<Option<usize>>,
    /// Vertices in an order where every parent precedes its children.
    order: Vec<usize>,
}

impl SpanningTree {
    /// BFS tree of a connected graph.
    pub fn bfs(g: &Graph, root: usize) -> Result<Self> {
        if root >= g.n() {
            return Err(Error::Parameter(format!("root {root} out of range")));
        }
        let mut parent = vec![None; g.n()];
        let mut seen = vec![false; g.n()];
        let mut order = vec![root];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    order.push(w);
                    queue.push_back(w);
                }
            }
        }
        if order.len() != g.n() {
            return Err(Error::Disconnected);
        }
        Ok(SpanningTree { root, parent, order })
    }

    /// Tree given by its edge list, rooted at `root`.
    pub fn from_edges(g: &Graph, root: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let tree = Graph::from_edges(g.n(), edges.iter().copied())?;
        if tree.edge_count() + 1 != g.n() || !tree.is_connected() {
            return Err(Error::Parameter("edges do not form a spanning tree".into()));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::InvalidEdge(u, v, "tree edge not in graph".into()));
        }
        Self::bfs(&tree, root)
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.parent[u] == Some(v) || self.parent[v] == Some(u)
    }

    /// Tree edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .parent
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (p.min(c), p.max(c))))
            .collect();
        e.sort_unstable();
        e
    }

    fn check_spans(&self, g: &Graph) -> Result<()> {
        if self.parent.len() != g.n() {
            return Err(Error::Parameter("tree does not span the base".into()));
        }
        for (c, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                if !g.has_edge(*p, c) {
                    return Err(Error::InvalidEdge(*p, c, "tree edge not in base".into()));
                }
            }
        }
        Ok(())
    }
}
