//! Ear decompositions: representation, verification, and searches for the
//! loose, standard, proper, nested and odd kinds, plus the ear-count
//! formula, ear capacities and the 3-connectivity certificate.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{RaagError, Result};
use crate::graph::{bit, full_mask, mask_to_vec, Graph};
use crate::limits::{ensure, Limits};

/// A path or cycle given as a vertex walk. Closed walks repeat their start
/// (the cycle's end point) at the end; the repetition may be omitted on
/// input.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ear {
    pub walk: Vec<usize>,
    #[serde(default)]
    pub closed: bool,
}

impl Ear {
    pub fn path(walk: Vec<usize>) -> Ear {
        Ear {
            walk,
            closed: false,
        }
    }

    /// `cycle` lists each vertex once, starting at the end point.
    pub fn cycle(mut cycle: Vec<usize>) -> Ear {
        if let Some(&s) = cycle.first() {
            cycle.push(s);
        }
        Ear {
            walk: cycle,
            closed: true,
        }
    }

    /// Distinct vertices in walk order.
    pub fn vertices(&self) -> &[usize] {
        if self.closed && self.walk.len() > 1 && self.walk.first() == self.walk.last() {
            &self.walk[..self.walk.len() - 1]
        } else {
            &self.walk
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices().len()
    }

    pub fn edge_count(&self) -> usize {
        if self.closed {
            self.vertex_count()
        } else {
            self.vertex_count().saturating_sub(1)
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        let vs = self.vertices();
        if self.closed {
            (vs[0], vs[0])
        } else {
            (vs[0], vs[vs.len() - 1])
        }
    }

    pub fn inner(&self) -> &[usize] {
        let vs = self.vertices();
        if self.closed {
            &vs[1..]
        } else if vs.len() >= 2 {
            &vs[1..vs.len() - 1]
        } else {
            &[]
        }
    }

    /// Edges as ordered pairs `(min, max)` in walk order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let vs = self.vertices();
        let mut out: Vec<(usize, usize)> = vs
            .windows(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if self.closed && vs.len() >= 3 {
            let (a, b) = (vs[vs.len() - 1], vs[0]);
            out.push((a.min(b), a.max(b)));
        }
        out
    }

    fn vertex_mask(&self) -> u64 {
        self.vertices().iter().fold(0, |m, &v| m | bit(v))
    }

    /// ⌊k/2⌋ for a cycle on k vertices, ⌊(k−1)/2⌋ for a path on k.
    pub fn capacity(&self) -> usize {
        ear_capacity(self)
    }
}

pub fn ear_capacity(e: &Ear) -> usize {
    let k = e.vertex_count();
    if e.closed {
        k / 2
    } else {
        k.saturating_sub(1) / 2
    }
}

impl fmt::Display for Ear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.walk.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "{}{}",
            if self.closed { "cycle " } else { "path " },
            vs.join("-")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Loose,
    Standard,
    Proper,
    Nested,
    Odd,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Loose => "loose",
            Kind::Standard => "standard",
            Kind::Proper => "proper",
            Kind::Nested => "nested",
            Kind::Odd => "odd",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = RaagError;

    fn from_str(s: &str) -> Result<Kind> {
        match s {
            "loose" => Ok(Kind::Loose),
            "standard" => Ok(Kind::Standard),
            "proper" => Ok(Kind::Proper),
            "nested" => Ok(Kind::Nested),
            "odd" => Ok(Kind::Odd),
            _ => Err(RaagError::Parse(format!(
                "unknown decomposition kind {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    pub kind: Kind,
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    pub fn ear_count(&self) -> usize {
        self.ears.len()
    }

    pub fn total_capacity(&self) -> usize {
        self.ears.iter().map(ear_capacity).sum()
    }

    pub fn verify(&self, g: &Graph) -> std::result::Result<(), Violation> {
        verify(g, self)
    }
}

/// The first violated condition of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub ear: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ear {
            Some(i) => write!(f, "ear {i}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

fn violation<T>(
    ear: Option<usize>,
    message: impl Into<String>,
) -> std::result::Result<T, Violation> {
    Err(Violation {
        ear,
        message: message.into(),
    })
}

/// Check every condition of the declared kind.
pub fn verify(g: &Graph, d: &EarDecomposition) -> std::result::Result<(), Violation> {
    let n = g.vertex_count();
    // Shape of each ear.
    for (i, e) in d.ears.iter().enumerate() {
        let at = Some(i);
        if e.closed && e.walk.len() >= 2 && e.walk.first() != e.walk.last() && e.walk.len() < 3 {
            return violation(at, "closed ear needs at least 3 vertices");
        }
        let vs = e.vertices();
        if let Some(&v) = vs.iter().find(|&&v| v >= n) {
            return violation(at, format!("vertex {v} out of range"));
        }
        if vs.len() < 2 {
            return violation(at, "an ear has at least two vertices");
        }
        if e.closed && vs.len() < 3 {
            return violation(at, "a cycle ear has at least three vertices");
        }
        if e.vertex_mask().count_ones() as usize != vs.len() {
            return violation(at, "walk repeats a vertex");
        }
        if let Some(&(a, b)) = e.edges().iter().find(|&&(a, b)| !g.has_edge(a, b)) {
            return violation(at, format!("{{{a}, {b}}} is not an edge"));
        }
    }
    // Edge-disjoint cover with fresh inner vertices.
    let mut seen_edges: HashSet<(usize, usize)> = HashSet::new();
    let mut covered = 0u64;
    for (i, e) in d.ears.iter().enumerate() {
        let at = Some(i);
        for ed in e.edges() {
            if !seen_edges.insert(ed) {
                return violation(at, format!("edge {{{}, {}}} already used", ed.0, ed.1));
            }
        }
        if let Some(&v) = e.inner().iter().find(|&&v| covered & bit(v) != 0) {
            return violation(at, format!("inner vertex {v} lies on an earlier ear"));
        }
        if i > 0 && d.kind != Kind::Loose {
            let (a, b) = e.endpoints();
            if covered & bit(a) == 0 || covered & bit(b) == 0 {
                return violation(at, "endpoints must lie on earlier ears");
            }
        }
        covered |= e.vertex_mask();
    }
    let k1_odd = d.kind == Kind::Odd && n == 1 && d.ears.is_empty();
    if covered != g.vertex_mask() && !k1_odd {
        let v = (g.vertex_mask() & !covered).trailing_zeros();
        return violation(None, format!("vertex {v} is not covered"));
    }
    if let Some(&(a, b)) = g.edges().iter().find(|ed| !seen_edges.contains(ed)) {
        return violation(None, format!("edge {{{a}, {b}}} is not covered"));
    }
    match d.kind {
        Kind::Loose => Ok(()),
        Kind::Standard | Kind::Proper | Kind::Odd => {
            if k1_odd {
                return Ok(());
            }
            if !d.ears.first().is_some_and(|e| e.closed) {
                return violation(Some(0), "the first ear must be a cycle");
            }
            for (i, e) in d.ears.iter().enumerate() {
                if d.kind == Kind::Proper && i > 0 && e.closed {
                    return violation(
                        Some(i),
                        "proper decompositions use paths after the first ear",
                    );
                }
                if d.kind == Kind::Odd {
                    let k = e.vertex_count();
                    if e.closed && k % 2 == 0 {
                        return violation(
                            Some(i),
                            "cycle ears must have an odd number of vertices",
                        );
                    }
                    if !e.closed && k % 2 == 1 {
                        return violation(
                            Some(i),
                            "path ears must have an even number of vertices",
                        );
                    }
                }
            }
            Ok(())
        }
        Kind::Nested => verify_nesting(d),
    }
}

/// Nested: every ear a path hosted by one earlier ear containing both its
/// endpoints, with the intervals cut out on each host pairwise nested or
/// meeting in at most one vertex. Hosts are searched by backtracking.
fn verify_nesting(d: &EarDecomposition) -> std::result::Result<(), Violation> {
    if d.ears.is_empty() {
        return violation(None, "a nested decomposition has at least one ear");
    }
    if let Some(i) = d.ears.iter().position(|e| e.closed) {
        return violation(Some(i), "nested decompositions consist of paths");
    }
    // Candidate (host, interval) choices per ear.
    let mut options: Vec<Vec<(usize, (usize, usize))>> = vec![Vec::new()];
    for (i, e) in d.ears.iter().enumerate().skip(1) {
        let (a, b) = e.endpoints();
        let opts: Vec<_> = (0..i)
            .filter_map(|h| {
                let vs = d.ears[h].vertices();
                let pa = vs.iter().position(|&v| v == a)?;
                let pb = vs.iter().position(|&v| v == b)?;
                Some((h, (pa.min(pb), pa.max(pb))))
            })
            .collect();
        if opts.is_empty() {
            return violation(Some(i), "no earlier ear contains both endpoints");
        }
        options.push(opts);
    }
    let mut chosen: Vec<(usize, (usize, usize))> = vec![(usize::MAX, (0, 0))];
    if assign_hosts(&options, 1, &mut chosen) {
        Ok(())
    } else {
        violation(None, "no choice of host ears makes the intervals laminar")
    }
}

fn laminar(x: (usize, usize), y: (usize, usize)) -> bool {
    (x.0 <= y.0 && y.1 <= x.1) || (y.0 <= x.0 && x.1 <= y.1) || x.1 <= y.0 || y.1 <= x.0
}

fn assign_hosts(
    options: &[Vec<(usize, (usize, usize))>],
    i: usize,
    chosen: &mut Vec<(usize, (usize, usize))>,
) -> bool {
    if i == options.len() {
        return true;
    }
    for &(h, iv) in &options[i] {
        let ok = chosen.iter().all(|&(h2, iv2)| h2 != h || laminar(iv, iv2));
        if ok {
            chosen.push((h, iv));
            if assign_hosts(options, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Each edge as its own path ear; exists iff there is no isolated vertex.
pub fn find_loose(g: &Graph) -> Option<EarDecomposition> {
    if g.degrees().contains(&0) {
        return None;
    }
    Some(EarDecomposition {
        kind: Kind::Loose,
        ears: g
            .edges()
            .into_iter()
            .map(|(a, b)| Ear::path(vec![a, b]))
            .collect(),
    })
}

pub fn find_standard(g: &Graph) -> Option<EarDecomposition> {
    peel(g, true).map(|ears| EarDecomposition {
        kind: Kind::Standard,
        ears,
    })
}

pub fn find_proper(g: &Graph) -> Option<EarDecomposition> {
    peel(g, false).map(|ears| EarDecomposition {
        kind: Kind::Proper,
        ears,
    })
}

/// Grow a cycle, then keep attaching ears through an uncovered edge at a
/// covered vertex. In a 2-edge-connected (resp. 2-connected, with
/// `allow_closed` false) graph every attachment succeeds, and any failure
/// exhibits a bridge (resp. a cut vertex).
fn peel(g: &Graph, allow_closed: bool) -> Option<Vec<Ear>> {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() {
        return None;
    }
    let first = shortest_cycle_through(g, 0)?;
    let mut covered = first.iter().fold(0u64, |m, &v| m | bit(v));
    let mut used: HashSet<(usize, usize)> = Ear::cycle(first.clone()).edges().into_iter().collect();
    let mut ears = vec![Ear::cycle(first)];
    loop {
        // Uncovered edge with a covered endpoint: long ears first.
        let next = g
            .edges()
            .into_iter()
            .filter(|e| !used.contains(e))
            .filter_map(
                |(a, b)| match (covered & bit(a) != 0, covered & bit(b) != 0) {
                    (true, false) => Some((a, b)),
                    (false, true) => Some((b, a)),
                    _ => None,
                },
            )
            .next();
        let Some((u, w)) = next else { break };
        let walk = ear_from(g, covered, u, w, allow_closed)?;
        let ear = if walk.first() == walk.last() {
            Ear { walk, closed: true }
        } else {
            Ear::path(walk)
        };
        used.extend(ear.edges());
        covered |= ear.vertex_mask();
        ears.push(ear);
    }
    if covered != g.vertex_mask() {
        return None;
    }
    for e in g.edges() {
        if !used.contains(&e) {
            ears.push(Ear::path(vec![e.0, e.1]));
        }
    }
    Some(ears)
}

/// BFS from `w` through uncovered vertices back to the covered set,
/// avoiding the edge `u–w`; returning to `u` itself only if allowed.
fn ear_from(g: &Graph, covered: u64, u: usize, w: usize, allow_closed: bool) -> Option<Vec<usize>> {
    let mut prev: HashMap<usize, usize> = HashMap::from([(w, u)]);
    let mut queue = std::collections::VecDeque::from([w]);
    while let Some(x) = queue.pop_front() {
        for y in mask_to_vec(g.neighbor_mask(x)) {
            if covered & bit(y) != 0 {
                let ok = if y == u { allow_closed && x != w } else { true };
                if ok {
                    let mut walk = vec![y, x];
                    let mut c = x;
                    while c != w {
                        c = prev[&c];
                        walk.push(c);
                    }
                    walk.push(u);
                    walk.reverse();
                    return Some(walk);
                }
            } else if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(y) {
                e.insert(x);
                queue.push_back(y);
            }
        }
    }
    None
}

/// A shortest cycle through `v`, else a shortest cycle anywhere.
fn shortest_cycle_through(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let through = |s: usize| -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for w in mask_to_vec(g.neighbor_mask(s)) {
            if let Some(walk) = ear_from(g, bit(s), s, w, true) {
                let cyc = walk[..walk.len() - 1].to_vec();
                if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
                    best = Some(cyc);
                }
            }
        }
        best
    };
    through(v).or_else(|| g.vertices().find_map(through))
}

/// Edge-mask subgraphs for the nested search; at most 128 edges.
struct EdgeIndex {
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl EdgeIndex {
    fn new(g: &Graph) -> Result<EdgeIndex> {
        let edges = g.edges();
        ensure("edges in nested-ear search", edges.len(), 128)?;
        let index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(EdgeIndex { edges, index })
    }

    fn id(&self, a: usize, b: usize) -> usize {
        self.index[&(a.min(b), a.max(b))]
    }

    fn mask_neighbors(&self, set: u128, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.edges.len())
            .filter(|&i| set >> i & 1 == 1)
            .filter_map(|i| {
                let (a, b) = self.edges[i];
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn vertices(&self, set: u128) -> u64 {
        (0..self.edges.len())
            .filter(|&i| set >> i & 1 == 1)
            .fold(0, |m, i| m | bit(self.edges[i].0) | bit(self.edges[i].1))
    }
}

type NestedMemo = HashMap<(u128, usize, usize), Option<Vec<Vec<usize>>>>;

/// Nested ear decomposition of the edge set `set` whose first ear runs
/// from `s` to `t`. The first ear `P` splits the rest into bridges; each
/// bridge must attach to `P` at exactly two vertices, the attachment
/// intervals must be laminar, and each bridge recursively needs a nested
/// decomposition between its attachments.
fn nested_between(
    ix: &EdgeIndex,
    set: u128,
    s: usize,
    t: usize,
    memo: &mut NestedMemo,
) -> Option<Vec<Vec<usize>>> {
    if let Some(r) = memo.get(&(set, s, t)) {
        return r.clone();
    }
    let mut result = None;
    let mut path = vec![s];
    let mut found = |p: &[usize], memo: &mut NestedMemo| -> bool {
        match try_first_ear(ix, set, p, memo) {
            Some(ears) => {
                result = Some(ears);
                true
            }
            None => false,
        }
    };
    simple_paths(ix, set, t, &mut path, bit(s), memo, &mut found);
    memo.insert((set, s, t), result.clone());
    result
}

fn simple_paths(
    ix: &EdgeIndex,
    set: u128,
    t: usize,
    path: &mut Vec<usize>,
    seen: u64,
    memo: &mut NestedMemo,
    f: &mut dyn FnMut(&[usize], &mut NestedMemo) -> bool,
) -> bool {
    let cur = *path.last().expect("nonempty path");
    if cur == t {
        return f(path, memo);
    }
    for y in ix.mask_neighbors(set, cur) {
        if seen & bit(y) != 0 {
            continue;
        }
        path.push(y);
        if simple_paths(ix, set, t, path, seen | bit(y), memo, f) {
            return true;
        }
        path.pop();
    }
    false
}

fn try_first_ear(
    ix: &EdgeIndex,
    set: u128,
    p: &[usize],
    memo: &mut NestedMemo,
) -> Option<Vec<Vec<usize>>> {
    let mut rest = set;
    for w in p.windows(2) {
        rest &= !(1u128 << ix.id(w[0], w[1]));
    }
    let on_p = p.iter().fold(0u64, |m, &v| m | bit(v));
    let pos = |v: usize| p.iter().position(|&x| x == v).expect("on path");
    // Bridges: chords, and components off P with their attaching edges.
    let mut bridges: Vec<(u128, u64)> = Vec::new();
    let mut seen_off = 0u64;
    for i in 0..ix.edges.len() {
        if rest >> i & 1 == 0 {
            continue;
        }
        let (a, b) = ix.edges[i];
        if on_p & bit(a) != 0 && on_p & bit(b) != 0 {
            bridges.push((1u128 << i, bit(a) | bit(b)));
            continue;
        }
        let start = if on_p & bit(a) == 0 { a } else { b };
        if seen_off & bit(start) != 0 {
            continue;
        }
        let mut comp = bit(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in ix.mask_neighbors(rest, x) {
                if on_p & bit(y) == 0 && comp & bit(y) == 0 {
                    comp |= bit(y);
                    stack.push(y);
                }
            }
        }
        seen_off |= comp;
        let mut edges = 0u128;
        let mut attach = 0u64;
        for j in 0..ix.edges.len() {
            if rest >> j & 1 == 1 {
                let (c, d) = ix.edges[j];
                if comp & (bit(c) | bit(d)) != 0 {
                    edges |= 1u128 << j;
                    attach |= (bit(c) | bit(d)) & on_p;
                }
            }
        }
        bridges.push((edges, attach));
    }
    let mut intervals = Vec::new();
    for &(_, attach) in &bridges {
        if attach.count_ones() != 2 {
            return None;
        }
        let av = mask_to_vec(attach);
        let (pa, pb) = (pos(av[0]), pos(av[1]));
        intervals.push((pa.min(pb), pa.max(pb)));
    }
    for i in 0..intervals.len() {
        for j in 0..i {
            if !laminar(intervals[i], intervals[j]) {
                return None;
            }
        }
    }
    let mut ears = vec![p.to_vec()];
    for (&(edges, _), &(pa, pb)) in bridges.iter().zip(&intervals) {
        ears.extend(nested_between(ix, edges, p[pa], p[pb], memo)?);
    }
    Some(ears)
}

/// Nested decomposition; the first ear's endpoints are the terminals.
pub fn find_nested(g: &Graph) -> Result<Option<EarDecomposition>> {
    let n = g.vertex_count();
    ensure(
        "vertices in nested-ear search",
        n,
        Limits::current().ear_search,
    )?;
    if n < 2 || !g.is_connected() {
        return Ok(None);
    }
    let ix = EdgeIndex::new(g)?;
    let all = if ix.edges.len() == 128 {
        u128::MAX
    } else {
        (1u128 << ix.edges.len()) - 1
    };
    debug_assert_eq!(ix.vertices(all), g.vertex_mask());
    let mut memo = NestedMemo::new();
    for s in 0..n {
        for t in s + 1..n {
            if let Some(ears) = nested_between(&ix, all, s, t, &mut memo) {
                return Ok(Some(EarDecomposition {
                    kind: Kind::Nested,
                    ears: ears.into_iter().map(Ear::path).collect(),
                }));
            }
        }
    }
    Ok(None)
}

/// Long ears (at least one inner vertex) attachable to `covered`: paths
/// between two covered vertices and, if `closed_ok`, cycles through one,
/// with all inner vertices uncovered. Each ear is produced once.
fn for_each_long_ear(
    g: &Graph,
    covered: u64,
    closed_ok: bool,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(
        g: &Graph,
        covered: u64,
        closed_ok: bool,
        walk: &mut Vec<usize>,
        seen: u64,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let x = walk[0];
        let cur = *walk.last().expect("nonempty");
        for y in mask_to_vec(g.neighbor_mask(cur)) {
            if covered & bit(y) != 0 {
                if walk.len() < 2 {
                    continue;
                }
                let emit = if y == x {
                    // Closed: at least two inner vertices, one direction only.
                    closed_ok && walk.len() >= 3 && walk[1] < cur
                } else {
                    x < y
                };
                if emit {
                    walk.push(y);
                    let stop = f(walk);
                    walk.pop();
                    if stop {
                        return true;
                    }
                }
            } else if seen & bit(y) == 0 {
                walk.push(y);
                if go(g, covered, closed_ok, walk, seen | bit(y), f) {
                    return true;
                }
                walk.pop();
            }
        }
        false
    }
    for x in mask_to_vec(covered) {
        let mut walk = vec![x];
        if go(g, covered, closed_ok, &mut walk, 0, f) {
            return true;
        }
    }
    false
}

fn walk_to_ear(walk: &[usize]) -> Ear {
    Ear {
        walk: walk.to_vec(),
        closed: walk.len() > 1 && walk.first() == walk.last(),
    }
}

/// All cycles, each once, rooted at their least vertex.
fn for_each_cycle(g: &Graph, f: &mut dyn FnMut(&[usize]) -> bool) {
    for x in g.vertices() {
        let allowed_inner = g.vertex_mask() & !full_mask(x + 1);
        // Cover everything at or below x except x so those are never inner.
        let blocked = g.vertex_mask() & !allowed_inner & !bit(x);
        let sub = g.clone();
        let mut wrapped = |walk: &[usize]| -> bool {
            if walk[1..walk.len() - 1]
                .iter()
                .any(|&v| blocked & bit(v) != 0)
            {
                return false;
            }
            f(walk)
        };
        if for_each_long_ear(&sub, bit(x), true, &mut wrapped) {
            return;
        }
    }
}

fn short_ears(g: &Graph, ears: &[Ear]) -> Vec<Ear> {
    let used: HashSet<(usize, usize)> = ears.iter().flat_map(|e| e.edges()).collect();
    g.edges()
        .into_iter()
        .filter(|e| !used.contains(e))
        .map(|(a, b)| Ear::path(vec![a, b]))
        .collect()
}

/// Odd ear decomposition (odd cycle ears, even path ears). Searches over
/// sets of covered vertices: single-edge ears are always admissible, so
/// only long ears are branched on and chords are appended at the end.
pub fn find_odd(g: &Graph) -> Result<Option<EarDecomposition>> {
    let n = g.vertex_count();
    ensure(
        "vertices in odd-ear search",
        n,
        Limits::current().ear_search,
    )?;
    if n == 1 {
        return Ok(Some(EarDecomposition {
            kind: Kind::Odd,
            ears: Vec::new(),
        }));
    }
    if n < 3 || !g.is_connected() {
        return Ok(None);
    }
    let mut dead: HashSet<u64> = HashSet::new();
    let mut found = None;
    for_each_cycle(g, &mut |walk| {
        if (walk.len() - 1) % 2 == 0 {
            return false;
        }
        let mut ears = vec![walk_to_ear(walk)];
        let covered = walk.iter().fold(0u64, |m, &v| m | bit(v));
        if odd_rec(g, covered, &mut ears, &mut dead) {
            found = Some(ears);
            true
        } else {
            false
        }
    });
    Ok(found.map(|mut ears| {
        let chords = short_ears(g, &ears);
        ears.extend(chords);
        EarDecomposition {
            kind: Kind::Odd,
            ears,
        }
    }))
}

fn odd_rec(g: &Graph, covered: u64, ears: &mut Vec<Ear>, dead: &mut HashSet<u64>) -> bool {
    if covered == g.vertex_mask() {
        return true;
    }
    if dead.contains(&covered) {
        return false;
    }
    let ok = for_each_long_ear(g, covered, true, &mut |walk| {
        let e = walk_to_ear(walk);
        let k = e.vertex_count();
        if (e.closed && k % 2 == 0) || (!e.closed && k % 2 == 1) {
            return false;
        }
        let next = covered | e.vertex_mask();
        ears.push(e);
        if odd_rec(g, next, ears, dead) {
            return true;
        }
        ears.pop();
        false
    });
    if !ok {
        dead.insert(covered);
    }
    ok
}

/// Minimum total ear capacity over standard decompositions, with a
/// decomposition attaining it. Requires a 2-vertex-connected graph.
pub fn min_capacity_over_decompositions(g: &Graph) -> Result<(usize, EarDecomposition)> {
    let n = g.vertex_count();
    ensure(
        "vertices in ear-capacity search",
        n,
        Limits::current().ear_search,
    )?;
    if n < 3 || g.vertex_connectivity()? < 2 {
        return Err(RaagError::precondition(
            "the graph must be 2-vertex-connected",
        ));
    }
    let mut memo: HashMap<u64, Option<(usize, Vec<usize>)>> = HashMap::new();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for_each_cycle(g, &mut |walk| {
        let e = walk_to_ear(walk);
        if let Some((rest, _)) = cap_rec(g, e.vertex_mask(), &mut memo) {
            let total = e.capacity() + rest;
            if best.as_ref().is_none_or(|(b, _)| total < *b) {
                best = Some((total, walk.to_vec()));
            }
        }
        false
    });
    let (total, first) =
        best.ok_or_else(|| RaagError::precondition("no standard ear decomposition"))?;
    let mut ears = vec![walk_to_ear(&first)];
    let mut covered = ears[0].vertex_mask();
    while covered != g.vertex_mask() {
        let (_, walk) = memo[&covered]
            .clone()
            .expect("reachable state has a completion");
        let e = walk_to_ear(&walk);
        covered |= e.vertex_mask();
        ears.push(e);
    }
    let chords = short_ears(g, &ears);
    ears.extend(chords);
    Ok((
        total,
        EarDecomposition {
            kind: Kind::Standard,
            ears,
        },
    ))
}

/// Least capacity needed to finish from `covered`, and the next long ear.
fn cap_rec(
    g: &Graph,
    covered: u64,
    memo: &mut HashMap<u64, Option<(usize, Vec<usize>)>>,
) -> Option<(usize, Vec<usize>)> {
    if covered == g.vertex_mask() {
        return Some((0, Vec::new()));
    }
    if let Some(r) = memo.get(&covered) {
        return r.clone();
    }
    let mut cands: Vec<Vec<usize>> = Vec::new();
    for_each_long_ear(g, covered, true, &mut |walk| {
        cands.push(walk.to_vec());
        false
    });
    let mut best: Option<(usize, Vec<usize>)> = None;
    for walk in cands {
        let e = walk_to_ear(&walk);
        if let Some((rest, _)) = cap_rec(g, covered | e.vertex_mask(), memo) {
            let total = e.capacity() + rest;
            if best.as_ref().is_none_or(|(b, _)| total < *b) {
                best = Some((total, walk));
            }
        }
    }
    memo.insert(covered, best.clone());
    best
}

/// `|E| − |V| + 1`, with whether the 2-vertex-connectivity hypothesis holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EarCount {
    pub value: i64,
    pub hypothesis_holds: bool,
}

pub fn ear_count_formula(g: &Graph) -> Result<EarCount> {
    let value = g.edge_count() as i64 - g.vertex_count() as i64 + 1;
    let hypothesis_holds = g.vertex_count() >= 3 && g.vertex_connectivity()? >= 2;
    Ok(EarCount {
        value,
        hypothesis_holds,
    })
}

/// Pearls named by the 3-connectivity conditions: `r, t` are consecutive
/// on the first ear (positions `k`, `k+1` of its walk) and `u` is the
/// second vertex of ear `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeConnCertificate {
    pub decomposition: EarDecomposition,
    pub k: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
}

impl ConditionReport {
    fn push(&mut self, name: &str, holds: bool, detail: impl Into<String>) {
        self.conditions.push(Condition {
            name: name.into(),
            holds,
            detail: detail.into(),
        });
    }

    /// All conditions hold, except the purely diagnostic ones.
    pub fn holds(&self) -> bool {
        self.conditions
            .iter()
            .filter(|c| !c.name.starts_with("diagnostic"))
            .all(|c| c.holds)
    }
}

/// Conditions certifying 3-vertex-connectivity: a proper decomposition
/// with `m > 1`; ear `j` is where `u` is born, it is the last ear with
/// inner vertices and `u` is its only one; the edge `t–u` lies on an ear
/// other than the first and `j`; and every earlier long ear is
/// non-separating (the uncovered vertices stay connected, and each inner
/// vertex, counting every vertex of the first ear, has a neighbor among
/// them). Whether every pearl of an earlier ear
/// reappears on a later ear is reported as a diagnostic.
pub fn check_3conn_conditions(g: &Graph, cert: &ThreeConnCertificate) -> ConditionReport {
    let mut rep = ConditionReport::default();
    let d = &cert.decomposition;
    let as_proper = EarDecomposition {
        kind: Kind::Proper,
        ears: d.ears.clone(),
    };
    let base = verify(g, &as_proper);
    rep.push(
        "proper decomposition with m > 1",
        base.is_ok() && d.ears.len() > 1,
        match &base {
            Ok(()) => format!("m = {}", d.ears.len()),
            Err(v) => v.to_string(),
        },
    );
    if base.is_err() || d.ears.len() < 2 || cert.j == 0 || cert.j >= d.ears.len() {
        rep.push("indices", false, "j must index a later ear");
        return rep;
    }
    let first = d.ears[0].vertices();
    let (k, j) = (cert.k, cert.j);
    if k >= first.len() {
        rep.push("indices", false, "k must index the first ear");
        return rep;
    }
    let r = first[k];
    let t = first[(k + 1) % first.len()];
    let ej = &d.ears[j];
    let u = ej.vertices()[1.min(ej.vertex_count() - 1)];

    let birth = d.ears.iter().position(|e| e.vertices().contains(&u));
    rep.push(
        "1: ear j is the first containing u",
        birth == Some(j) && ej.inner().contains(&u),
        format!("r = {r}, t = {t}, u = {u}"),
    );
    let last_long = d.ears.iter().rposition(|e| !e.inner().is_empty());
    rep.push(
        "2: ear j is the last long ear, u its only inner vertex",
        last_long == Some(j) && ej.inner() == [u],
        format!("last long ear is {last_long:?}"),
    );
    let tu = (t.min(u), t.max(u));
    let host = d.ears.iter().position(|e| e.edges().contains(&tu));
    rep.push(
        "3: t and u adjacent on an ear other than the first and j",
        g.has_edge(t, u) && host.is_some_and(|h| h != 0 && h != j),
        format!("edge t-u lies on ear {host:?}"),
    );
    let mut covered = 0u64;
    let mut bad = Vec::new();
    for (i, e) in d.ears.iter().enumerate().take(j) {
        covered |= e.vertex_mask();
        let checked: &[usize] = if i == 0 { e.vertices() } else { e.inner() };
        for &v in checked {
            if g.neighbor_mask(v) & !covered == 0 {
                bad.push(format!("{v} (ear {i})"));
            }
        }
        if !g.mask_connected(g.vertex_mask() & !covered) {
            bad.push(format!("uncovered vertices disconnected after ear {i}"));
        }
    }
    rep.push(
        "4: earlier long ears are non-separating",
        bad.is_empty(),
        if bad.is_empty() {
            "every such vertex has an uncovered neighbor".to_string()
        } else {
            format!("no uncovered neighbor: {}", bad.join(", "))
        },
    );
    let last = d.ears.len() - 1;
    let mut stranded = Vec::new();
    for (a, e) in d.ears.iter().enumerate().take(last) {
        for &v in e.vertices() {
            if !d.ears[a + 1..].iter().any(|l| l.vertices().contains(&v)) {
                stranded.push(format!("{v} (ear {a})"));
            }
        }
    }
    rep.push(
        "diagnostic: every pearl of an earlier ear reappears later",
        stranded.is_empty(),
        stranded.join(", "),
    );
    rep
}

impl ThreeConnCertificate {
    /// The named pearls `(r, t, u)`.
    pub fn triple(&self) -> Option<(usize, usize, usize)> {
        let first = self.decomposition.ears.first()?.vertices();
        let ej = self.decomposition.ears.get(self.j)?.vertices();
        let r = *first.get(self.k)?;
        Some((r, first[(self.k + 1) % first.len()], *ej.get(1)?))
    }
}

/// One certificate per oriented edge `r → t` of the graph.
///
/// A single non-separating sequence does not rule out 2-cuts: the graph
/// with edges 02 03 04 05 12 13 14 15 25 34 has one for `r, t, u = 2, 0, 3`
/// yet `{0, 1}` separates it. Asking for one on every oriented edge agrees
/// with vertex connectivity on every connected graph up to 7 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeConnBundle {
    pub certificates: Vec<ThreeConnCertificate>,
}

impl ThreeConnBundle {
    pub fn verify(&self, g: &Graph) -> std::result::Result<(), String> {
        let mut seen = HashSet::new();
        for (i, c) in self.certificates.iter().enumerate() {
            let rep = check_3conn_conditions(g, c);
            if !rep.holds() {
                let failed: Vec<&str> = rep
                    .conditions
                    .iter()
                    .filter(|c| !c.holds)
                    .map(|c| c.name.as_str())
                    .collect();
                return Err(format!("certificate {i} fails: {}", failed.join("; ")));
            }
            if let Some((r, t, _)) = c.triple() {
                seen.insert((r, t));
            }
        }
        for (a, b) in g.edges() {
            for (r, t) in [(a, b), (b, a)] {
                if !seen.contains(&(r, t)) {
                    return Err(format!("no certificate for the edge {r} -> {t}"));
                }
            }
        }
        if g.edge_count() == 0 {
            return Err("no edges".into());
        }
        Ok(())
    }
}

/// Search for one certificate: any triple `r–t–u` and any sequence of
/// long ears, memoizing dead covered sets per triple.
pub fn find_3conn_certificate(g: &Graph) -> Result<Option<ThreeConnCertificate>> {
    if !searchable(g)? {
        return Ok(None);
    }
    for (a, b) in g.edges() {
        for (r, t) in [(a, b), (b, a)] {
            if let Some(cert) = certificate_on_edge(g, r, t) {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// A certificate on every oriented edge, or `None` as soon as one edge has none.
pub fn find_3conn_bundle(g: &Graph) -> Result<Option<ThreeConnBundle>> {
    if !searchable(g)? {
        return Ok(None);
    }
    let mut certificates = Vec::new();
    for (a, b) in g.edges() {
        for (r, t) in [(a, b), (b, a)] {
            match certificate_on_edge(g, r, t) {
                Some(c) => certificates.push(c),
                None => return Ok(None),
            }
        }
    }
    Ok(Some(ThreeConnBundle { certificates }))
}

fn searchable(g: &Graph) -> Result<bool> {
    ensure(
        "vertices in 3-connectivity search",
        g.vertex_count(),
        Limits::current().ear_search,
    )?;
    Ok(g.vertex_count() >= 4 && g.is_connected())
}

fn certificate_on_edge(g: &Graph, r: usize, t: usize) -> Option<ThreeConnCertificate> {
    mask_to_vec(g.neighbor_mask(t) & !bit(r))
        .into_iter()
        .find_map(|u| search_triple(g, r, t, u))
}

fn search_triple(g: &Graph, r: usize, t: usize, u: usize) -> Option<ThreeConnCertificate> {
    let mut dead: HashSet<u64> = HashSet::new();
    let mut out = None;
    for_each_cycle(g, &mut |walk| {
        let cyc = &walk[..walk.len() - 1];
        if cyc.contains(&u) {
            return false;
        }
        let Some(pr) = cyc.iter().position(|&v| v == r) else {
            return false;
        };
        let len = cyc.len();
        // Orient so that t follows r.
        let ordered: Vec<usize> = if cyc[(pr + 1) % len] == t {
            (0..len).map(|i| cyc[(pr + i) % len]).collect()
        } else if cyc[(pr + len - 1) % len] == t {
            (0..len).map(|i| cyc[(pr + len - i) % len]).collect()
        } else {
            return false;
        };
        let first = Ear::cycle(ordered);
        let covered = first.vertex_mask();
        if !non_separating(g, first.vertices(), covered) {
            return false;
        }
        let mut ears = vec![first];
        if nonseparating_rec(g, t, u, covered, &mut ears, &mut dead) {
            let j = ears.len() - 1;
            let chords = short_ears(g, &ears);
            ears.extend(chords);
            out = Some(ThreeConnCertificate {
                decomposition: EarDecomposition {
                    kind: Kind::Proper,
                    ears,
                },
                k: 0,
                j,
            });
            true
        } else {
            false
        }
    });
    out
}

fn non_separating(g: &Graph, checked: &[usize], covered: u64) -> bool {
    let rest = g.vertex_mask() & !covered;
    checked.iter().all(|&v| g.neighbor_mask(v) & rest != 0) && g.mask_connected(rest)
}

fn nonseparating_rec(
    g: &Graph,
    t: usize,
    u: usize,
    covered: u64,
    ears: &mut Vec<Ear>,
    dead: &mut HashSet<u64>,
) -> bool {
    if dead.contains(&covered) {
        return false;
    }
    let ok = for_each_long_ear(g, covered, false, &mut |walk| {
        let e = walk_to_ear(walk);
        let next = covered | e.vertex_mask();
        if e.inner().contains(&u) {
            // The last long ear: x–u–y avoiding the edge t–u, covering all.
            let ok = e.inner() == [u] && !e.vertices().contains(&t) && next == g.vertex_mask();
            if ok {
                ears.push(e);
            }
            return ok;
        }
        if !non_separating(g, e.inner(), next) {
            return false;
        }
        ears.push(e);
        if nonseparating_rec(g, t, u, next, ears, dead) {
            return true;
        }
        ears.pop();
        false
    });
    if !ok {
        dead.insert(covered);
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn g(tag: &str) -> Graph {
        Graph::named(tag.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn verify_examples() {
        let c5 = EarDecomposition {
            kind: Kind::Standard,
            ears: vec![Ear::cycle(vec![0, 1, 2, 3, 4])],
        };
        assert!(verify(&g("C5"), &c5).is_ok());
        let k4 = EarDecomposition {
            kind: Kind::Standard,
            ears: vec![
                Ear::cycle(vec![0, 1, 2]),
                Ear::path(vec![0, 3, 1]),
                Ear::path(vec![3, 2]),
            ],
        };
        assert!(verify(&g("K4"), &k4).is_ok());
        let mut missing = k4.clone();
        missing.ears.pop();
        let err = verify(&g("K4"), &missing).unwrap_err();
        assert!(err.message.contains("not covered"), "{err}");
        // Inner vertex reused.
        let bad = EarDecomposition {
            kind: Kind::Loose,
            ears: vec![Ear::path(vec![0, 1, 2]), Ear::path(vec![3, 1, 0])],
        };
        assert!(verify(&g("K4"), &bad).is_err());
    }

    #[test]
    fn searches_on_examples() {
        assert_eq!(find_standard(&g("C4")).unwrap().ear_count(), 1);
        assert!(find_standard(&bowtie()).is_some());
        assert!(find_proper(&bowtie()).is_none());
        assert!(find_standard(&g("P3")).is_none() && find_proper(&g("P3")).is_none());
        let two_triangles =
            Graph::build(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let loose = find_loose(&two_triangles).unwrap();
        assert!(verify(&two_triangles, &loose).is_ok());
        assert!(find_loose(&Graph::edgeless(2).unwrap()).is_none());
        for d in [
            find_standard(&g("petersen")).unwrap(),
            find_proper(&g("K4")).unwrap(),
        ] {
            let host = if d.ears.len() == 6 {
                g("petersen")
            } else {
                g("K4")
            };
            assert!(verify(&host, &d).is_ok());
        }
        assert_eq!(find_standard(&g("petersen")).unwrap().ear_count(), 6);
    }

    #[test]
    fn nested_examples() {
        let c4 = find_nested(&g("C4")).unwrap().unwrap();
        assert_eq!(c4.ear_count(), 2);
        assert!(verify(&g("C4"), &c4).is_ok());
        assert!(find_nested(&g("K4")).unwrap().is_none());
        assert_eq!(find_nested(&g("P2")).unwrap().unwrap().ear_count(), 1);
        // K1,3 has no K4 minor but is not series-parallel.
        let claw = g("K1,3");
        assert!(find_nested(&claw).unwrap().is_none());
        let k23 = g("K2,3");
        assert!(verify(&k23, &find_nested(&k23).unwrap().unwrap()).is_ok());
        // Crossing chords are rejected by verification.
        let bad = EarDecomposition {
            kind: Kind::Nested,
            ears: vec![
                Ear::path(vec![0, 1, 2, 3]),
                Ear::path(vec![0, 2]),
                Ear::path(vec![1, 3]),
                Ear::path(vec![0, 3]),
            ],
        };
        assert!(verify(&g("K4"), &bad).is_err());
    }

    #[test]
    fn odd_examples() {
        let c5 = find_odd(&g("C5")).unwrap().unwrap();
        assert_eq!(c5.ears, vec![Ear::cycle(vec![0, 1, 2, 3, 4])]);
        assert!(find_odd(&g("C4")).unwrap().is_none());
        let bt = find_odd(&bowtie()).unwrap().unwrap();
        assert!(verify(&bowtie(), &bt).is_ok());
        assert!(find_odd(&g("K4")).unwrap().is_none());
        assert!(find_odd(&g("K5")).unwrap().is_some());
    }

    #[test]
    fn capacities() {
        assert_eq!(ear_capacity(&Ear::cycle(vec![0, 1, 2, 3, 4])), 2);
        assert_eq!(ear_capacity(&Ear::path(vec![0, 1])), 0);
        assert_eq!(ear_capacity(&Ear::path(vec![0, 1, 2, 3])), 1);
        assert_eq!(min_capacity_over_decompositions(&g("C5")).unwrap().0, 2);
        assert_eq!(min_capacity_over_decompositions(&g("C4")).unwrap().0, 2);
        let (v, d) = min_capacity_over_decompositions(&g("K4")).unwrap();
        assert_eq!(v, 2);
        assert_eq!(d.total_capacity(), 2);
        assert!(verify(&g("K4"), &d).is_ok());
        assert!(min_capacity_over_decompositions(&bowtie()).is_err());
    }

    #[test]
    fn ear_counts() {
        assert_eq!(ear_count_formula(&g("C5")).unwrap().value, 1);
        assert_eq!(ear_count_formula(&g("K4")).unwrap().value, 3);
        assert_eq!(ear_count_formula(&g("petersen")).unwrap().value, 6);
        assert!(!ear_count_formula(&bowtie()).unwrap().hypothesis_holds);
    }

    #[test]
    fn three_connectivity() {
        for tag in ["K4", "W5", "K5", "K3,3", "petersen"] {
            let host = g(tag);
            let cert = find_3conn_certificate(&host)
                .unwrap()
                .unwrap_or_else(|| panic!("{tag}"));
            let rep = check_3conn_conditions(&host, &cert);
            assert!(rep.holds(), "{tag}: {rep:?}");
        }
        for tag in ["C5", "K2,3", "P4"] {
            assert!(find_3conn_certificate(&g(tag)).unwrap().is_none(), "{tag}");
        }
        let b = find_3conn_bundle(&g("petersen")).unwrap().unwrap();
        assert_eq!(b.certificates.len(), 30);
        assert!(b.verify(&g("petersen")).is_ok());
        // One sequence exists here, but {0, 1} is a 2-cut.
        let cut = Graph::build(
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 5),
                (3, 4),
            ],
        )
        .unwrap();
        assert!(find_3conn_certificate(&cut).unwrap().is_some());
        assert!(find_3conn_bundle(&cut).unwrap().is_none());
        let single = ThreeConnCertificate {
            decomposition: EarDecomposition {
                kind: Kind::Proper,
                ears: vec![Ear::cycle(vec![0, 1, 2, 3, 4])],
            },
            k: 0,
            j: 0,
        };
        assert!(!check_3conn_conditions(&g("C5"), &single).holds());
    }
}
