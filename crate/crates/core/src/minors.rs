//! Minor containment with branch-set witnesses, the three-phase
//! homomorphism sequences a witness induces, and topological-minor
//! (subdivision) search for Kuratowski graphs.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::assembly::{
    abelianising_step, identification_step, pearl_deletion_step, HomomorphismStep,
};
use crate::error::{RaagError, Result};
use crate::graph::{bit, mask_to_vec, vec_to_mask, Graph};
use crate::limits::{ensure, Limits};

/// Branch sets keyed `x0, x1, …` by pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: BTreeMap<String, Vec<usize>>,
}

impl MinorWitness {
    pub fn from_sets(sets: Vec<Vec<usize>>) -> MinorWitness {
        MinorWitness {
            branch_sets: sets
                .into_iter()
                .enumerate()
                .map(|(i, mut s)| {
                    s.sort_unstable();
                    (format!("x{i}"), s)
                })
                .collect(),
        }
    }

    /// Branch sets in pattern-vertex order.
    pub fn sets(&self, pattern_size: usize) -> Result<Vec<Vec<usize>>> {
        (0..pattern_size)
            .map(|i| {
                self.branch_sets
                    .get(&format!("x{i}"))
                    .cloned()
                    .ok_or_else(|| RaagError::InvalidInput(format!("no branch set for x{i}")))
            })
            .collect()
    }

    /// Nonempty, disjoint, connected branch sets realizing every pattern edge.
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> Result<()> {
        let k = pattern.vertex_count();
        if self.branch_sets.len() != k {
            return Err(RaagError::InvalidInput(format!(
                "{} branch sets for a pattern on {k} vertices",
                self.branch_sets.len()
            )));
        }
        let sets = self.sets(k)?;
        let mut used = 0u64;
        let mut masks = Vec::with_capacity(k);
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(RaagError::InvalidInput(format!("branch set x{i} is empty")));
            }
            for &v in s {
                host.check_vertex(v)?;
            }
            let m = vec_to_mask(s);
            if m.count_ones() as usize != s.len() || used & m != 0 {
                return Err(RaagError::InvalidInput(format!(
                    "branch set x{i} overlaps another"
                )));
            }
            if !host.mask_connected(m) {
                return Err(RaagError::InvalidInput(format!(
                    "branch set x{i} is not connected"
                )));
            }
            used |= m;
            masks.push(m);
        }
        for (a, b) in pattern.edges() {
            let touch = mask_to_vec(masks[a])
                .iter()
                .any(|&v| host.neighbor_mask(v) & masks[b] != 0);
            if !touch {
                return Err(RaagError::InvalidInput(format!(
                    "no host edge between x{a} and x{b}"
                )));
            }
        }
        Ok(())
    }
}

/// Search contraction/deletion sequences of the host down to the
/// pattern's size, then look for the pattern as a spanning subgraph.
/// Dead intermediate graphs are memoized up to isomorphism. The first
/// witness found is shrunk greedily so no branch vertex is redundant.
pub fn find_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorWitness>> {
    let lim = Limits::current();
    ensure(
        "host vertices in minor search",
        host.vertex_count(),
        lim.minor_host,
    )?;
    ensure(
        "pattern vertices in minor search",
        pattern.vertex_count(),
        lim.minor_pattern,
    )?;
    let k = pattern.vertex_count();
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let sets: Vec<u64> = host.vertices().map(bit).collect();
    let mut dead: HashSet<Graph> = HashSet::new();
    let found = minor_rec(host, &sets, pattern, &mut dead)?;
    Ok(found.map(|sets| shrink(host, pattern, sets)))
}

fn minor_rec(
    g: &Graph,
    sets: &[u64],
    pattern: &Graph,
    dead: &mut HashSet<Graph>,
) -> Result<Option<Vec<u64>>> {
    if g.edge_count() < pattern.edge_count() || g.vertex_count() < pattern.vertex_count() {
        return Ok(None);
    }
    if g.vertex_count() == pattern.vertex_count() {
        return Ok(spanning_embedding(g, pattern).map(|f| f.iter().map(|&v| sets[v]).collect()));
    }
    let canon = g.canonical_form()?;
    if dead.contains(&canon) {
        return Ok(None);
    }
    for (a, b) in g.edges() {
        let next = g.contract_edge(a, b)?;
        let mut s = sets.to_vec();
        s[a] |= s[b];
        s.remove(b);
        if let Some(r) = minor_rec(&next, &s, pattern, dead)? {
            return Ok(Some(r));
        }
    }
    for v in g.vertices() {
        let next = g.delete_vertex(v)?;
        let mut s = sets.to_vec();
        s.remove(v);
        if let Some(r) = minor_rec(&next, &s, pattern, dead)? {
            return Ok(Some(r));
        }
    }
    dead.insert(canon);
    Ok(None)
}

/// Injective `f: V(pattern) → V(g)` mapping edges to edges, with
/// `|V(g)| = |V(pattern)|`.
fn spanning_embedding(g: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    fn go(g: &Graph, p: &Graph, f: &mut Vec<usize>, used: u64) -> bool {
        let i = f.len();
        if i == p.vertex_count() {
            return true;
        }
        for v in g.vertices() {
            if used & bit(v) != 0 || g.degree(v).unwrap_or(0) < p.degree(i).unwrap_or(0) {
                continue;
            }
            if (0..i).all(|j| !p.has_edge(i, j) || g.has_edge(v, f[j])) {
                f.push(v);
                if go(g, p, f, used | bit(v)) {
                    return true;
                }
                f.pop();
            }
        }
        false
    }
    let mut f = Vec::new();
    go(g, pattern, &mut f, 0).then_some(f)
}

fn witness_ok(host: &Graph, pattern: &Graph, sets: &[u64]) -> bool {
    sets.iter().all(|&m| m != 0 && host.mask_connected(m))
        && pattern.edges().iter().all(|&(a, b)| {
            mask_to_vec(sets[a])
                .iter()
                .any(|&v| host.neighbor_mask(v) & sets[b] != 0)
        })
}

fn shrink(host: &Graph, pattern: &Graph, mut sets: Vec<u64>) -> MinorWitness {
    for i in 0..sets.len() {
        for v in mask_to_vec(sets[i]) {
            let before = sets[i];
            sets[i] &= !bit(v);
            if !witness_ok(host, pattern, &sets) {
                sets[i] = before;
            }
        }
    }
    MinorWitness::from_sets(sets.into_iter().map(mask_to_vec).collect())
}

/// Deletions, then contractions (host → contracted graph), then the
/// abelianising steps from the pattern up to the contracted graph: read
/// backwards they are the surplus edge deletions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorSequences {
    pub deletions: Vec<HomomorphismStep>,
    pub identifications: Vec<HomomorphismStep>,
    pub abelianisings: Vec<HomomorphismStep>,
    /// Contracted-graph vertex standing for each pattern vertex.
    pub pattern_map: Vec<usize>,
}

pub fn witness_to_sequences(
    host: &Graph,
    pattern: &Graph,
    witness: &MinorWitness,
) -> Result<MinorSequences> {
    witness.validate(host, pattern)?;
    let k = pattern.vertex_count();
    let sets = witness.sets(k)?;
    // owner[v]: pattern vertex whose branch set holds v, tracked through
    // the renumbering of each step.
    let mut owner: Vec<Option<usize>> = vec![None; host.vertex_count()];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            owner[v] = Some(i);
        }
    }
    let mut cur = host.clone();
    let mut deletions = Vec::new();
    while let Some(v) = owner.iter().rposition(|o| o.is_none()) {
        let step = pearl_deletion_step(&cur, v)?;
        cur = step.target.clone();
        owner.remove(v);
        deletions.push(step);
    }
    let mut identifications = Vec::new();
    loop {
        // Any edge inside one branch set; branch sets are connected, so
        // contracting such edges collapses each to a point.
        let inner = cur
            .edges()
            .into_iter()
            .find(|&(a, b)| owner[a].is_some() && owner[a] == owner[b]);
        let Some((a, b)) = inner else { break };
        let step = identification_step(&cur, a, b)?;
        cur = step.target.clone();
        owner.remove(b.max(a));
        identifications.push(step);
    }
    let pattern_map: Vec<usize> = (0..k)
        .map(|i| {
            owner
                .iter()
                .position(|&o| o == Some(i))
                .expect("branch set survives")
        })
        .collect();
    // Edges of the contracted graph not used by the pattern.
    let used: HashSet<(usize, usize)> = pattern
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (pattern_map[a], pattern_map[b]);
            (x.min(y), x.max(y))
        })
        .collect();
    let surplus: Vec<(usize, usize)> = cur
        .edges()
        .into_iter()
        .filter(|e| !used.contains(e))
        .collect();
    let mut low = cur.clone();
    for &(a, b) in &surplus {
        low = low.delete_edge(a, b)?;
    }
    let mut abelianisings = Vec::new();
    for &(a, b) in surplus.iter().rev() {
        let step = abelianising_step(&low, a, b)?;
        low = step.target.clone();
        abelianisings.push(step);
    }
    Ok(MinorSequences {
        deletions,
        identifications,
        abelianisings,
        pattern_map,
    })
}

/// Replay the sequences on the host: the contracted graph must match the
/// end of the abelianising chain, and its start must be isomorphic to the
/// pattern.
pub fn replay(host: &Graph, pattern: &Graph, seq: &MinorSequences) -> Result<bool> {
    let mut cur = host.clone();
    for s in seq.deletions.iter().chain(&seq.identifications) {
        if s.source != cur {
            return Ok(false);
        }
        cur = match s.kind {
            crate::assembly::StepKind::PearlDeletion { vertex } => cur.delete_vertex(vertex)?,
            crate::assembly::StepKind::Identification { edge } => {
                cur.contract_edge(edge.0, edge.1)?
            }
            _ => return Ok(false),
        };
        if cur != s.target {
            return Ok(false);
        }
    }
    let mut low = cur.clone();
    for s in seq.abelianisings.iter().rev() {
        if s.target != low {
            return Ok(false);
        }
        let crate::assembly::StepKind::Abelianising { pair } = s.kind else {
            return Ok(false);
        };
        low = low.delete_edge(pair.0, pair.1)?;
    }
    low.is_isomorphic(pattern)
}

/// A subgraph of the host homeomorphic to the pattern: branch vertices
/// and one path per pattern edge (in `pattern.edges()` order), internally
/// disjoint and avoiding other branch vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologicalWitness {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl TopologicalWitness {
    pub fn validate(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.vertex_count();
        let pe = pattern.edges();
        if self.branch.len() != k || self.paths.len() != pe.len() {
            return false;
        }
        let bmask = vec_to_mask(&self.branch);
        if bmask.count_ones() as usize != k || self.branch.iter().any(|&v| v >= host.vertex_count())
        {
            return false;
        }
        let mut used = 0u64;
        for (p, &(a, b)) in self.paths.iter().zip(&pe) {
            if p.len() < 2 || p[0] != self.branch[a] || p[p.len() - 1] != self.branch[b] {
                return false;
            }
            if !p.windows(2).all(|w| host.has_edge(w[0], w[1])) {
                return false;
            }
            for &v in &p[1..p.len() - 1] {
                if bmask & bit(v) != 0 || used & bit(v) != 0 {
                    return false;
                }
                used |= bit(v);
            }
        }
        true
    }
}

/// Kuratowski-style search: choose branch vertices, then route internally
/// disjoint paths by backtracking.
pub fn find_topological_minor(host: &Graph, pattern: &Graph) -> Result<Option<TopologicalWitness>> {
    ensure(
        "host vertices in subdivision search",
        host.vertex_count(),
        Limits::current().subdivision,
    )?;
    let k = pattern.vertex_count();
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(None);
    }
    let pe = pattern.edges();
    let mut branch = Vec::new();
    let mut out = None;
    choose_branch(host, pattern, &pe, &mut branch, 0, &mut out);
    Ok(out)
}

fn choose_branch(
    host: &Graph,
    pattern: &Graph,
    pe: &[(usize, usize)],
    branch: &mut Vec<usize>,
    used: u64,
    out: &mut Option<TopologicalWitness>,
) -> bool {
    let i = branch.len();
    if i == pattern.vertex_count() {
        let mut paths = Vec::new();
        let bmask = vec_to_mask(branch);
        if route(host, pe, branch, bmask, 0, &mut paths) {
            *out = Some(TopologicalWitness {
                branch: branch.clone(),
                paths,
            });
            return true;
        }
        return false;
    }
    let need = pattern.degree(i).unwrap_or(0);
    for v in host.vertices() {
        if used & bit(v) != 0 || host.degree(v).unwrap_or(0) < need {
            continue;
        }
        // Pattern vertices with identical neighborhoods are interchangeable:
        // keep their images increasing.
        let twin_below = (0..i)
            .rev()
            .find(|&j| pattern.neighbor_mask(j) & !bit(i) == pattern.neighbor_mask(i) & !bit(j));
        if let Some(j) = twin_below {
            if branch[j] > v {
                continue;
            }
        }
        branch.push(v);
        if choose_branch(host, pattern, pe, branch, used | bit(v), out) {
            return true;
        }
        branch.pop();
    }
    false
}

fn route(
    host: &Graph,
    pe: &[(usize, usize)],
    branch: &[usize],
    bmask: u64,
    used: u64,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let i = paths.len();
    if i == pe.len() {
        return true;
    }
    let (a, b) = (branch[pe[i].0], branch[pe[i].1]);
    let mut path = vec![a];
    fn dfs(
        host: &Graph,
        target: usize,
        blocked: u64,
        path: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let cur = *path.last().expect("nonempty");
        for y in mask_to_vec(host.neighbor_mask(cur)) {
            if y == target {
                path.push(y);
                let stop = f(path);
                path.pop();
                if stop {
                    return true;
                }
            } else if blocked & bit(y) == 0 && !path.contains(&y) {
                path.push(y);
                if dfs(host, target, blocked, path, f) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let blocked = bmask | used;
    let mut found = false;
    dfs(host, b, blocked, &mut path, &mut |p| {
        let inner = vec_to_mask(&p[1..p.len() - 1]);
        paths.push(p.to_vec());
        if route(host, pe, branch, bmask, used | inner, paths) {
            found = true;
            return true;
        }
        paths.pop();
        false
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    fn g(tag: &str) -> Graph {
        Graph::named(tag.parse::<NamedGraph>().unwrap()).unwrap()
    }

    #[test]
    fn minor_examples() {
        let w = find_minor(&g("K4"), &g("C3")).unwrap().unwrap();
        assert!(w.validate(&g("K4"), &g("C3")).is_ok());
        let p = g("petersen");
        let w = find_minor(&p, &g("K5")).unwrap().unwrap();
        assert!(w.validate(&p, &g("K5")).is_ok());
        assert!(find_minor(&g("C6"), &g("K4")).unwrap().is_none());
        assert!(find_minor(&g("K5"), &g("K3,3")).unwrap().is_none());
    }

    #[test]
    fn sequences() {
        let k4 = g("K4");
        let id = MinorWitness::from_sets((0..4).map(|v| vec![v]).collect());
        let s = witness_to_sequences(&k4, &k4, &id).unwrap();
        assert!(
            s.deletions.is_empty() && s.identifications.is_empty() && s.abelianisings.is_empty()
        );
        let w = find_minor(&k4, &g("C3")).unwrap().unwrap();
        let s = witness_to_sequences(&k4, &g("C3"), &w).unwrap();
        assert_eq!(
            (
                s.deletions.len(),
                s.identifications.len(),
                s.abelianisings.len()
            ),
            (1, 0, 0)
        );
        let p = g("petersen");
        let w = find_minor(&p, &g("K5")).unwrap().unwrap();
        let s = witness_to_sequences(&p, &g("K5"), &w).unwrap();
        assert_eq!(
            (
                s.deletions.len(),
                s.identifications.len(),
                s.abelianisings.len()
            ),
            (0, 5, 0)
        );
        assert!(replay(&p, &g("K5"), &s).unwrap());
        // Surplus edges: C4 inside K4.
        let w = find_minor(&k4, &g("C4")).unwrap().unwrap();
        let s = witness_to_sequences(&k4, &g("C4"), &w).unwrap();
        assert_eq!(s.abelianisings.len(), 2);
        assert!(replay(&k4, &g("C4"), &s).unwrap());
    }

    #[test]
    fn invalid_witnesses() {
        let k4 = g("K4");
        let c3 = g("C3");
        let disconnected = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let w = MinorWitness::from_sets(vec![vec![0], vec![1], vec![2, 3]]);
        assert!(w.validate(&k4, &c3).is_ok());
        assert!(w.validate(&disconnected, &c3).is_err());
        let overlap = MinorWitness::from_sets(vec![vec![0], vec![0], vec![2]]);
        assert!(overlap.validate(&k4, &c3).is_err());
        assert!(witness_to_sequences(&k4, &c3, &overlap).is_err());
    }

    #[test]
    fn kuratowski_subdivisions() {
        let p = g("petersen");
        let w = find_topological_minor(&p, &g("K3,3")).unwrap().unwrap();
        assert!(w.validate(&p, &g("K3,3")));
        assert!(find_topological_minor(&p, &g("K5")).unwrap().is_none());
        assert!(find_topological_minor(&g("K4"), &g("K5"))
            .unwrap()
            .is_none());
        let mut k5 = g("K5");
        k5 = k5.subdivide_edge(0, 1).unwrap();
        assert!(find_topological_minor(&k5, &g("K5")).unwrap().is_some());
    }
}
