//! Finite simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so most local
//! queries are a mask operation. Graphs are values: every operation that
//! changes the graph returns a new one.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{RaagError, Result};
use crate::limits::{ensure, Limits};

/// Hard bound imposed by the bitset representation.
pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    adj: Vec<u64>,
    labels: Option<Vec<String>>,
}

/// Serialized form: `{ "n": 4, "edges": [[0,1], ...], "labels": [...]? }`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.vertex_count(),
            edges: g.edges(),
            labels: g.labels,
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = RaagError;
    fn try_from(r: GraphRepr) -> Result<Graph> {
        let g = Graph::build(r.n, &r.edges)?;
        match r.labels {
            Some(l) => g.with_labels(l),
            None => Ok(g),
        }
    }
}

// Labels are display-only; they never affect equality.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}
impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

pub(crate) fn vec_to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(RaagError::capacity("vertex count", n, MAX_VERTICES));
        }
        Ok(Graph {
            adj: vec![0; n],
            labels: None,
        })
    }

    /// Build a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        for &(u, w) in edges {
            g.check_vertex(u)?;
            g.check_vertex(w)?;
            if u == w {
                return Err(RaagError::SelfLoop(u));
            }
            if g.has_edge(u, w) {
                return Err(RaagError::DuplicateEdge(u.min(w), u.max(w)));
            }
            g.adj[u] |= bit(w);
            g.adj[w] |= bit(u);
        }
        Ok(g)
    }

    pub fn named(tag: NamedGraph) -> Result<Graph> {
        tag.build()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(RaagError::InvalidInput(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.vertex_count())
    }

    /// Edges as `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for w in mask_to_vec(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, w));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(RaagError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            })
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.adj.len() && self.adj[u] & bit(w) != 0
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(mask_to_vec(self.adj[v]))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|m| m.count_ones() as usize).collect()
    }

    /// Vertices adjacent to every member of `set` and not in `set`.
    pub fn link(&self, set: &[usize]) -> Result<Vec<usize>> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(mask_to_vec(self.link_mask(vec_to_mask(set))))
    }

    pub(crate) fn link_mask(&self, set: u64) -> u64 {
        let mut m = self.vertex_mask() & !set;
        for v in mask_to_vec(set) {
            m &= self.adj[v];
        }
        m
    }

    /// `{v}` together with its neighbors.
    pub fn star(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(mask_to_vec(self.adj[v] | bit(v)))
    }

    /// Subgraph induced on `keep`; vertex `keep[i]` becomes vertex `i`.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        for &v in keep {
            self.check_vertex(v)?;
        }
        let mut g = Graph::edgeless(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate() {
                if i != j && self.has_edge(u, w) {
                    g.adj[i] |= bit(j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| l[v].clone()).collect());
        }
        Ok(g)
    }

    /// Remove `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    pub fn delete_edge(&self, u: usize, w: usize) -> Result<Graph> {
        self.require_edge(u, w)?;
        let mut g = self.clone();
        g.adj[u] &= !bit(w);
        g.adj[w] &= !bit(u);
        Ok(g)
    }

    /// Add the edge `{u, w}` (which must be absent).
    pub fn add_edge(&self, u: usize, w: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(RaagError::SelfLoop(u));
        }
        if self.has_edge(u, w) {
            return Err(RaagError::DuplicateEdge(u.min(w), u.max(w)));
        }
        let mut g = self.clone();
        g.adj[u] |= bit(w);
        g.adj[w] |= bit(u);
        Ok(g)
    }

    /// Add a fresh vertex (id `n`) adjacent to the vertices in `nbrs`.
    pub fn add_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if n + 1 > MAX_VERTICES {
            return Err(RaagError::capacity("vertex count", n + 1, MAX_VERTICES));
        }
        let mut g = self.clone();
        g.adj.push(0);
        if let Some(l) = &mut g.labels {
            l.push(format!("v{n}"));
        }
        for &w in nbrs {
            self.check_vertex(w)?;
            g.adj[n] |= bit(w);
            g.adj[w] |= bit(n);
        }
        Ok(g)
    }

    /// Simple-graph contraction: the merged vertex keeps the smaller id,
    /// the larger id is removed and higher ids shift down.
    pub fn contract_edge(&self, u: usize, w: usize) -> Result<Graph> {
        self.require_edge(u, w)?;
        let (keep, gone) = (u.min(w), u.max(w));
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[gone]) & !bit(keep) & !bit(gone);
        for x in mask_to_vec(g.adj[gone]) {
            g.adj[x] &= !bit(gone);
        }
        g.adj[gone] = 0;
        g.adj[keep] = merged;
        for x in mask_to_vec(merged) {
            g.adj[x] |= bit(keep);
        }
        g.delete_vertex(gone)
    }

    /// Replace `{u, w}` by a path through a fresh vertex with id `n`.
    pub fn subdivide_edge(&self, u: usize, w: usize) -> Result<Graph> {
        self.delete_edge(u, w)?.add_vertex(&[u, w])
    }

    /// Remove a degree-2 vertex and join its two neighbors (a no-op on the
    /// edge set if they are already adjacent).
    pub fn smooth_vertex(&self, v: usize) -> Result<Graph> {
        let d = self.degree(v)?;
        if d != 2 {
            return Err(RaagError::precondition(format!(
                "smoothing needs a degree-2 vertex, v{v} has degree {d}"
            )));
        }
        let nb = mask_to_vec(self.adj[v]);
        let mut g = self.clone();
        g.adj[nb[0]] |= bit(nb[1]);
        g.adj[nb[1]] |= bit(nb[0]);
        g.delete_vertex(v)
    }

    fn require_edge(&self, u: usize, w: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(w)?;
        if self.has_edge(u, w) {
            Ok(())
        } else {
            Err(RaagError::precondition(format!(
                "{{{u}, {w}}} is not an edge"
            )))
        }
    }

    /// Vertex set reachable from the lowest vertex of `within`, inside `within`.
    pub(crate) fn reach(&self, within: u64) -> u64 {
        if within == 0 {
            return 0;
        }
        let mut seen = within & within.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[v] & within & !seen;
            seen |= new;
            frontier |= new;
        }
        seen
    }

    pub(crate) fn mask_connected(&self, within: u64) -> bool {
        within != 0 && self.reach(within) == within
    }

    /// Connected. The graph with no vertices counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.mask_connected(self.vertex_mask())
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks(self.vertex_mask())
            .into_iter()
            .map(mask_to_vec)
            .collect()
    }

    pub(crate) fn component_masks(&self, mut within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while within != 0 {
            let c = self.reach(within);
            out.push(c);
            within &= !c;
        }
        out
    }

    /// Largest k such that deleting fewer than k vertices never
    /// disconnects the graph; `K_n` gives `n - 1` and a disconnected
    /// graph gives 0. Exhaustive over vertex subsets.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        let n = self.vertex_count();
        ensure(
            "vertex count for connectivity",
            n,
            Limits::current().connectivity,
        )?;
        if n <= 1 {
            return Ok(0);
        }
        let all = self.vertex_mask();
        for k in 0..n.saturating_sub(1) {
            let mut found = false;
            for_each_subset_of_size(all, k, &mut |s| {
                if !self.mask_connected(all & !s) {
                    found = true;
                    return false;
                }
                true
            });
            if found {
                return Ok(k);
            }
        }
        Ok(n - 1)
    }

    /// Minimum number of edges whose removal disconnects the graph
    /// (0 for fewer than two vertices). Exhaustive over vertex bipartitions.
    pub fn edge_connectivity(&self) -> Result<usize> {
        let n = self.vertex_count();
        ensure(
            "vertex count for connectivity",
            n,
            Limits::current().connectivity,
        )?;
        if n <= 1 {
            return Ok(0);
        }
        let rest = self.vertex_mask() & !1;
        let mut best = usize::MAX;
        // Side containing vertex 0 is {0} ∪ s for every proper s.
        let mut s: u64 = 0;
        loop {
            if s != rest {
                let side = s | 1;
                let cut: usize = mask_to_vec(side)
                    .into_iter()
                    .map(|v| (self.adj[v] & !side).count_ones() as usize)
                    .sum();
                best = best.min(cut);
            }
            if s == rest {
                break;
            }
            s = (s.wrapping_sub(rest)) & rest;
        }
        Ok(best)
    }

    /// Join-indecomposable factors of the induced subgraph on `set`: the
    /// connected components of its complement.
    pub fn join_decomposition(&self, set: &[usize]) -> Result<Vec<Vec<usize>>> {
        if set.is_empty() {
            return Err(RaagError::InvalidInput(
                "join decomposition of the empty set".into(),
            ));
        }
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(self
            .join_factor_masks(vec_to_mask(set))
            .into_iter()
            .map(mask_to_vec)
            .collect())
    }

    pub(crate) fn join_factor_masks(&self, set: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut left = set;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = set & !self.adj[v] & !bit(v) & !comp;
                comp |= new;
                frontier |= new;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_path(&self) -> bool {
        let n = self.vertex_count();
        n >= 1
            && self.is_connected()
            && self.edge_count() == n - 1
            && self.degrees().iter().all(|&d| d <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.is_connected() && self.degrees().iter().all(|&d| d == 2)
    }

    /// Vertices of a path or cycle in walk order. Paths start at their
    /// lower-numbered end; cycles start at 0 and continue to the lower
    /// neighbor.
    pub fn ear_order(&self) -> Option<Vec<usize>> {
        let start = if self.is_path() {
            if self.vertex_count() == 1 {
                return Some(vec![0]);
            }
            self.vertices().find(|&v| self.adj[v].count_ones() == 1)?
        } else if self.is_cycle() {
            0
        } else {
            return None;
        };
        let mut order = vec![start];
        let mut seen = bit(start);
        let mut cur = start;
        loop {
            let next = self.adj[cur] & !seen;
            if next == 0 {
                break;
            }
            cur = next.trailing_zeros() as usize;
            seen |= bit(cur);
            order.push(cur);
        }
        Some(order)
    }

    pub fn is_forest_by_traversal(&self) -> bool {
        self.edge_count() + self.components().len() == self.vertex_count()
    }

    /// Apply a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(RaagError::InvalidInput("not a permutation".into()));
        }
        let mut g = Graph::edgeless(n)?;
        for (u, w) in self.edges() {
            g.adj[perm[u]] |= bit(perm[w]);
            g.adj[perm[w]] |= bit(perm[u]);
        }
        Ok(g)
    }

    /// A bijection `f` with `{u,w} ∈ E(self)` iff `{f(u),f(w)} ∈ E(other)`.
    pub fn are_isomorphic(&self, other: &Graph) -> Result<Option<Vec<usize>>> {
        let limit = Limits::current().isomorphism;
        ensure("vertex count for isomorphism", self.vertex_count(), limit)?;
        ensure("vertex count for isomorphism", other.vertex_count(), limit)?;
        Ok(crate::iso::isomorphism(self, other))
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        Ok(self.are_isomorphic(other)?.is_some())
    }

    /// A relabeling-invariant key: equal iff the graphs are isomorphic.
    pub fn canonical_form(&self) -> Result<Graph> {
        ensure(
            "vertex count for canonical form",
            self.vertex_count(),
            Limits::current().isomorphism,
        )?;
        Ok(crate::iso::canonical_form(self))
    }

    /// Graphviz DOT rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in self.vertices() {
            match &self.labels {
                Some(l) => s.push_str(&format!("  {v} [label=\"{}\"];\n", l[v])),
                None => s.push_str(&format!("  {v};\n")),
            }
        }
        for (u, w) in self.edges() {
            s.push_str(&format!("  {u} -- {w};\n"));
        }
        s.push_str("}\n");
        s
    }

    /// Edge-list text: a header `n m`, then one `u w` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, w) in self.edges() {
            s.push_str(&format!("{u} {w}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| RaagError::Parse("empty edge list".into()))?;
        let nums = parse_pair(header)?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(RaagError::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::build(n, &edges)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(RaagError::Parse(format!(
            "expected two integers, got {line:?}"
        )));
    }
    let p = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| RaagError::Parse(format!("not a vertex id: {s:?}")))
    };
    Ok((p(parts[0])?, p(parts[1])?))
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} edges=[", self.vertex_count())?;
        for (i, (u, w)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{w}")?;
        }
        write!(f, "]")
    }
}

/// Calls `f` on every `k`-subset of `set` until it returns false.
pub(crate) fn for_each_subset_of_size(set: u64, k: usize, f: &mut dyn FnMut(u64) -> bool) {
    let elems = mask_to_vec(set);
    if k > elems.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m = idx.iter().fold(0u64, |m, &i| m | bit(elems[i]));
        if !f(m) {
            return;
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < elems.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Graphs addressable by tag. Numbering:
/// - `Path(n)`: 0-1-…-(n-1).
/// - `Cycle(n)`: 0-1-…-(n-1)-0.
/// - `CompleteBipartite(a, b)`: sides `0..a` and `a..a+b`.
/// - `Petersen`: outer cycle 0..5, spokes i ~ i+5, inner 5+i ~ 5+(i+2)%5.
/// - `Wheel(k)`: hub 0, rim 1..=k as a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Edgeless(usize),
    Petersen,
    Wheel(usize),
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        let mut edges = Vec::new();
        let n = match self {
            NamedGraph::Path(n) => {
                if n == 0 {
                    return Err(RaagError::InvalidInput("P0 has no vertices".into()));
                }
                edges.extend((1..n).map(|i| (i - 1, i)));
                n
            }
            NamedGraph::Cycle(n) => {
                if n < 3 {
                    return Err(RaagError::InvalidInput(format!("C{n}: cycles need n >= 3")));
                }
                edges.extend((1..n).map(|i| (i - 1, i)));
                edges.push((0, n - 1));
                n
            }
            NamedGraph::Complete(n) => {
                for u in 0..n {
                    edges.extend((u + 1..n).map(|w| (u, w)));
                }
                n
            }
            NamedGraph::CompleteBipartite(a, b) => {
                for u in 0..a {
                    edges.extend((a..a + b).map(|w| (u, w)));
                }
                a + b
            }
            NamedGraph::Edgeless(n) => n,
            NamedGraph::Petersen => {
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                10
            }
            NamedGraph::Wheel(k) => {
                if k < 3 {
                    return Err(RaagError::InvalidInput(format!("W{k}: wheels need k >= 3")));
                }
                edges.extend((1..=k).map(|i| (0, i)));
                edges.extend((1..k).map(|i| (i, i + 1)));
                edges.push((1, k));
                k + 1
            }
        };
        if n > MAX_VERTICES {
            return Err(RaagError::capacity("vertex count", n, MAX_VERTICES));
        }
        Graph::build(n, &edges)
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            NamedGraph::Edgeless(n) => write!(f, "E{n}"),
            NamedGraph::Petersen => write!(f, "petersen"),
            NamedGraph::Wheel(k) => write!(f, "W{k}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = RaagError;

    /// Tags: `P4`, `C5`, `K5`, `K3,3`, `E3` (edgeless), `W5` (hub plus C5),
    /// `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("petersen") {
            return Ok(NamedGraph::Petersen);
        }
        let bad = || RaagError::Parse(format!("unknown graph tag {s:?}"));
        let mut chars = t.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rest = chars.as_str();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        match head {
            'P' => Ok(NamedGraph::Path(num(rest)?)),
            'C' => Ok(NamedGraph::Cycle(num(rest)?)),
            'E' => Ok(NamedGraph::Edgeless(num(rest)?)),
            'W' => Ok(NamedGraph::Wheel(num(rest)?)),
            'K' => match rest.split_once(',') {
                Some((a, b)) => Ok(NamedGraph::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(NamedGraph::Complete(num(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}

/// Every simple graph on `n` labeled vertices, once each, ordered by the
/// bitmask over lexicographically ordered vertex pairs.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    ensure(
        "vertex count for enumeration",
        n,
        Limits::current().enumeration,
    )?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .collect();
    let total: u64 = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut adj = vec![0u64; n];
        for (i, &(u, w)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                adj[u] |= bit(w);
                adj[w] |= bit(u);
            }
        }
        Graph { adj, labels: None }
    }))
}

/// One representative per isomorphism class among graphs on `n` vertices.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for g in enumerate_graphs(n)? {
        let key = crate::iso::canonical_form(&g).edges();
        if seen.insert(key) {
            reps.push(g);
        }
    }
    Ok(reps)
}
