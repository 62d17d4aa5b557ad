//! Undirected simple graphs, the standard generators used throughout the
//! crate, and the purely combinatorial queries (distances, girth,
//! connectivity).

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Undirected simple graph on the vertices `0..n`.
///
/// Edges are kept sorted as `(u, v)` with `u < v`; adjacency lists are
/// sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Rejects loops, out-of-range
    /// endpoints and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdge(u, v, "self-loop".into()));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidEdge(u, v, format!("vertex out of range 0..{n}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidEdge(w[0].0, w[0].1, "repeated edge".into()));
        }
        Ok(Self::from_sorted_unique(n, list))
    }

    fn from_sorted_unique(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Like [`Graph::from_edges`] but silently drops duplicates.
    fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Self::from_sorted_unique(n, list)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Common valency if the graph is regular. The empty graph on zero
    /// vertices has no valency.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// BFS hop distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceTable {
        let mut dist = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            dist.extend(self.bfs(v));
        }
        DistanceTable { n: self.n, dist }
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Length of a shortest cycle, `None` for forests.
    ///
    /// BFS from every vertex; a non-tree edge `{x, y}` closes a closed walk
    /// of length `d(x) + d(y) + 1` through the root, and the minimum over
    /// all roots is attained by a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // No shorter cycle can be closed from deeper levels.
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// 2-colouring test.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        stack.push(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Line graph; vertex `i` is the `i`-th entry of [`Graph::edges`].
    pub fn line_graph(&self) -> Graph {
        let mut out = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (j, &(c, d)) in self.edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    out.push((i, j));
                }
            }
        }
        Graph::from_sorted_unique(self.edges.len(), out)
    }

    /// Writes the plain edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("graph {}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "edge {u} {v}");
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let perr = |msg: String| Error::Parse { line: line_no, msg };
            match toks[0] {
                "graph" if n.is_none() => {
                    if toks.len() != 2 {
                        return Err(perr("expected `graph <n>`".into()));
                    }
                    n = Some(parse_num(toks[1], line_no)?);
                }
                "edge" => {
                    if n.is_none() {
                        return Err(perr("`edge` before `graph` header".into()));
                    }
                    if toks.len() != 3 {
                        return Err(perr("expected `edge <u> <v>`".into()));
                    }
                    let (u, v) = (parse_num(toks[1], line_no)?, parse_num(toks[2], line_no)?);
                    let size = n.unwrap_or(0);
                    if u == v {
                        return Err(perr(format!("loop at vertex {u}")));
                    }
                    if u >= size || v >= size {
                        return Err(perr(format!("edge {u} {v} out of range for {size} vertices")));
                    }
                    let key = (u.min(v), u.max(v));
                    if !seen.insert(key) {
                        return Err(perr(format!("duplicate edge {} {}", key.0, key.1)));
                    }
                    edges.push(key);
                }
                other => return Err(perr(format!("unexpected token `{other}`"))),
            }
        }
        let n = n.ok_or(Error::Parse {
            line: 0,
            msg: "missing `graph <n>` header".into(),
        })?;
        Graph::from_edges(n, edges)
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub(crate) fn parse_num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected non-negative integer, found `{tok}`"),
    })
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.dist[u * self.n + v]
    }

    pub fn has_unreachable(&self) -> bool {
        self.dist.iter().any(Option::is_none)
    }

    /// Largest finite distance.
    pub fn max_finite(&self) -> usize {
        self.dist.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Diameter of a connected graph.
    pub fn diameter(&self) -> Option<usize> {
        if self.has_unreachable() {
            None
        } else {
            Some(self.max_finite())
        }
    }
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Graph::from_sorted_unique(n, (1..n).map(|v| (v - 1, v)).collect()))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Parameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `Q_n`; vertex labels are the bitstrings read as integers.
pub fn hypercube(n: usize) -> Result<Graph> {
    if n > 24 {
        return Err(Error::Parameter(format!("hypercube dimension {n} too large")));
    }
    let size = 1usize << n;
    let mut edges = Vec::with_capacity(size * n / 2);
    for v in 0..size {
        for b in 0..n {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_unique(size, edges))
}

/// `Q_{n-1}` plus the matching joining each vertex to its complement.
pub fn folded_cube(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Parameter(format!("folded cube needs n >= 2, got {n}")));
    }
    let base = hypercube(n - 1)?;
    let mask = (1usize << (n - 1)) - 1;
    let extra = (0..=mask).map(|v| (v, v ^ mask));
    Ok(Graph::from_edges_dedup(
        base.n(),
        base.edges().iter().copied().chain(extra),
    ))
}

/// `K_{m,n}` with the left side `0..m` and the right side `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    complete_multipartite(&[m, n])
}

/// Complete multipartite graph; parts are consecutive blocks of vertices.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Parameter("every part must be non-empty".into()));
    }
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let n = part_of.len();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Ok(Graph::from_sorted_unique(n, edges))
}

/// All `k`-subsets of `0..n` in lexicographic order, as bitmasks.
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        out.push(comb.iter().fold(0u64, |m, &i| m | (1 << i)));
        // rightmost position that can still advance
        let mut i = k;
        while i > 0 && comb[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        comb[i - 1] += 1;
        for j in i..k {
            comb[j] = comb[j - 1] + 1;
        }
    }
}

fn subset_graph(n: usize, k: usize, adjacent: impl Fn(u32) -> bool) -> Graph {
    let subsets = k_subsets(n, k);
    let mut edges = Vec::new();
    for (i, a) in subsets.iter().enumerate() {
        for (j, b) in subsets.iter().enumerate().skip(i + 1) {
            if adjacent((a & b).count_ones()) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_sorted_unique(subsets.len(), edges)
}

/// Kneser graph: `k`-subsets of an `n`-set, adjacent when disjoint.
/// Vertices are the subsets in lexicographic order.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k || n > 40 {
        return Err(Error::Parameter(format!("kneser({n},{k}) needs 1 <= k and n >= 2k")));
    }
    Ok(subset_graph(n, k, |common| common == 0))
}

/// Johnson graph: `k`-subsets adjacent when they share `k - 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < k || n > 40 {
        return Err(Error::Parameter(format!("johnson({n},{k}) needs n >= k >= 1")));
    }
    Ok(subset_graph(n, k, |common| common as usize + 1 == k))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters")
}
