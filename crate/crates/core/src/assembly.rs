//! Iterated gluing of decorated ears along pearls, the homomorphisms
//! induced by graph operations, and subdivision testing by smoothing.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::ears::{verify, Ear, EarDecomposition, Kind};
use crate::error::{RaagError, Result};
use crate::graph::{mask_to_vec, Graph, NamedGraph};
use crate::limits::{ensure, Limits};
use crate::pearls::{ear_shape, DecoratedEar, EarShape};
use crate::words::{Letter, Raag, Word};

/// A pearl of an earlier step: its position along that step's ear.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PearlRef {
    pub step: usize,
    pub pearl: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    First,
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Gluing {
    None,
    One { end: End, target: PearlRef },
    Two { first: PearlRef, last: PearlRef },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssemblyStep {
    pub ear: DecoratedEar,
    #[serde(default = "no_gluing")]
    pub gluing: Gluing,
}

fn no_gluing() -> Gluing {
    Gluing::None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssemblyPlan {
    pub steps: Vec<AssemblyStep>,
}

/// Result of gluing: the graph, where each step's pearls landed, and the
/// loose ear decomposition the gluing induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assembled {
    pub graph: Graph,
    pub pearl_maps: Vec<Vec<usize>>,
    pub decomposition: EarDecomposition,
}

/// Pearls of a decorated ear in walk order; cycles start at the marked end.
fn walk_order(de: &DecoratedEar) -> Result<(EarShape, Vec<usize>)> {
    let shape = ear_shape(&de.ear)?;
    let mut order = de.ear.ear_order().expect("ear");
    if shape == EarShape::Cycle {
        let m = de.marked_end.unwrap_or(0);
        de.ear.check_vertex(m)?;
        let p = order.iter().position(|&v| v == m).expect("vertex on cycle");
        order.rotate_left(p);
    }
    Ok((shape, order))
}

/// Amalgamate the steps in order. Gluing identifies the new ear's first
/// and/or last pearl with earlier pearls; all other pearls are fresh.
pub fn assemble(plan: &AssemblyPlan) -> Result<Assembled> {
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut count = 0usize;
    let mut pearl_maps: Vec<Vec<usize>> = Vec::new();
    let mut ears = Vec::new();
    for (k, step) in plan.steps.iter().enumerate() {
        let (shape, order) = walk_order(&step.ear)?;
        let len = order.len();
        if len < 2 {
            return Err(RaagError::InvalidInput(format!(
                "step {k}: an ear has at least two vertices"
            )));
        }
        if !step.ear.chain.is_empty() && step.ear.chain.len() != len {
            return Err(RaagError::InvalidInput(format!(
                "step {k}: chain length differs from ear size"
            )));
        }
        let resolve = |r: PearlRef| -> Result<usize> {
            pearl_maps
                .get(r.step)
                .filter(|_| r.step < k)
                .and_then(|m| m.get(r.pearl).copied())
                .ok_or_else(|| {
                    RaagError::InvalidInput(format!(
                        "step {k}: no earlier pearl {}:{}",
                        r.step, r.pearl
                    ))
                })
        };
        let mut fixed: Vec<Option<usize>> = vec![None; len];
        match step.gluing {
            Gluing::None => {}
            Gluing::One { end, target } => {
                let pos = match (shape, end) {
                    (EarShape::Cycle, _) | (_, End::First) => 0,
                    (_, End::Last) => len - 1,
                };
                fixed[pos] = Some(resolve(target)?);
            }
            Gluing::Two { first, last } => {
                if shape == EarShape::Cycle || len < 2 {
                    return Err(RaagError::InvalidInput(format!(
                        "step {k}: two-point gluing needs a path ear"
                    )));
                }
                let (a, b) = (resolve(first)?, resolve(last)?);
                if a == b {
                    return Err(RaagError::InvalidInput(format!(
                        "step {k}: gluing would merge two vertices of the same ear"
                    )));
                }
                fixed[0] = Some(a);
                fixed[len - 1] = Some(b);
            }
        }
        if k == 0 && step.gluing != Gluing::None {
            return Err(RaagError::InvalidInput(
                "the first step cannot be glued".into(),
            ));
        }
        // Pearl positions in walk order → global vertices.
        let by_pos: Vec<usize> = fixed
            .iter()
            .map(|f| {
                f.unwrap_or_else(|| {
                    count += 1;
                    count - 1
                })
            })
            .collect();
        let mut map = vec![0; len];
        for (pos, &v) in order.iter().enumerate() {
            map[v] = by_pos[pos];
        }
        for (a, b) in step.ear.ear.edges() {
            let e = (map[a].min(map[b]), map[a].max(map[b]));
            if !edges.insert(e) {
                return Err(RaagError::InvalidInput(format!(
                    "step {k}: pearls {} and {} are already adjacent",
                    e.0, e.1
                )));
            }
        }
        ears.push(match shape {
            EarShape::Cycle => Ear::cycle(by_pos.clone()),
            EarShape::Path => Ear::path(by_pos.clone()),
        });
        // Indexed by walk position, like PearlRef::pearl.
        pearl_maps.push(by_pos);
    }
    let mut graph = Graph::edgeless(count)?;
    let mut sorted: Vec<_> = edges.into_iter().collect();
    sorted.sort_unstable();
    for (a, b) in sorted {
        graph = graph.add_edge(a, b)?;
    }
    let decomposition = EarDecomposition {
        kind: Kind::Loose,
        ears,
    };
    Ok(Assembled {
        graph,
        pearl_maps,
        decomposition,
    })
}

/// The gluing script realizing a loose ear decomposition of `g`: each ear
/// becomes a standard decorated ear, glued wherever its endpoints already
/// occur.
pub fn plan_from_decomposition(g: &Graph, d: &EarDecomposition) -> Result<AssemblyPlan> {
    let as_loose = EarDecomposition {
        kind: Kind::Loose,
        ears: d.ears.clone(),
    };
    verify(g, &as_loose)
        .map_err(|v| RaagError::InvalidInput(format!("invalid decomposition: {v}")))?;
    verify(g, d)
        .map_err(|v| RaagError::InvalidInput(format!("invalid {} decomposition: {v}", d.kind)))?;
    let mut first_seen: Vec<Option<PearlRef>> = vec![None; g.vertex_count()];
    let mut steps = Vec::new();
    for (i, e) in d.ears.iter().enumerate() {
        let vs = e.vertices();
        let k = vs.len();
        let (graph, marked) = if e.closed {
            (Graph::named(NamedGraph::Cycle(k))?, Some(0))
        } else {
            (Graph::named(NamedGraph::Path(k))?, None)
        };
        let (a, b) = e.endpoints();
        let gluing = if e.closed {
            match first_seen[a] {
                Some(t) => Gluing::One {
                    end: End::First,
                    target: t,
                },
                None => Gluing::None,
            }
        } else {
            match (first_seen[a], first_seen[b]) {
                (Some(f), Some(l)) => Gluing::Two { first: f, last: l },
                (Some(t), None) => Gluing::One {
                    end: End::First,
                    target: t,
                },
                (None, Some(t)) => Gluing::One {
                    end: End::Last,
                    target: t,
                },
                (None, None) => Gluing::None,
            }
        };
        for (pos, &v) in vs.iter().enumerate() {
            first_seen[v].get_or_insert(PearlRef {
                step: i,
                pearl: pos,
            });
        }
        steps.push(AssemblyStep {
            ear: DecoratedEar {
                ear: graph,
                marked_end: marked,
                chain: (0..k).map(Word::gen).collect(),
            },
            gluing,
        });
    }
    Ok(AssemblyPlan { steps })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StepKind {
    PearlDeletion { vertex: usize },
    Identification { edge: (usize, usize) },
    Abelianising { pair: (usize, usize) },
    Smoothing { vertex: usize },
}

/// A homomorphism `A(source) → A(target)` induced by a graph operation.
/// `vertex_map[v]` is the target generator for `v`, `None` if killed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomomorphismStep {
    pub kind: StepKind,
    pub source: Graph,
    pub target: Graph,
    pub vertex_map: Vec<Option<usize>>,
}

fn shift_out(n: usize, gone: usize) -> Vec<Option<usize>> {
    (0..n)
        .map(|v| match v.cmp(&gone) {
            std::cmp::Ordering::Less => Some(v),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(v - 1),
        })
        .collect()
}

pub fn pearl_deletion_step(g: &Graph, v: usize) -> Result<HomomorphismStep> {
    Ok(HomomorphismStep {
        kind: StepKind::PearlDeletion { vertex: v },
        target: g.delete_vertex(v)?,
        source: g.clone(),
        vertex_map: shift_out(g.vertex_count(), v),
    })
}

pub fn smoothing_step(g: &Graph, v: usize) -> Result<HomomorphismStep> {
    Ok(HomomorphismStep {
        kind: StepKind::Smoothing { vertex: v },
        target: g.smooth_vertex(v)?,
        source: g.clone(),
        vertex_map: shift_out(g.vertex_count(), v),
    })
}

pub fn identification_step(g: &Graph, u: usize, w: usize) -> Result<HomomorphismStep> {
    let target = g.contract_edge(u, w)?;
    let (keep, gone) = (u.min(w), u.max(w));
    let mut vertex_map = shift_out(g.vertex_count(), gone);
    vertex_map[gone] = Some(keep);
    Ok(HomomorphismStep {
        kind: StepKind::Identification { edge: (keep, gone) },
        source: g.clone(),
        target,
        vertex_map,
    })
}

pub fn abelianising_step(g: &Graph, a: usize, b: usize) -> Result<HomomorphismStep> {
    if a == b || g.has_edge(a, b) {
        return Err(RaagError::precondition(format!(
            "v{a}, v{b} must be distinct and non-adjacent"
        )));
    }
    Ok(HomomorphismStep {
        kind: StepKind::Abelianising {
            pair: (a.min(b), a.max(b)),
        },
        target: g.add_edge(a, b)?,
        source: g.clone(),
        vertex_map: (0..g.vertex_count()).map(Some).collect(),
    })
}

/// Image of `w` under the step, in normal form over the target.
pub fn apply_word_map(step: &HomomorphismStep, w: &Word) -> Result<Word> {
    Raag::new(step.source.clone()).check(w)?;
    let letters: Vec<Letter> = w
        .letters()
        .iter()
        .filter_map(|l| step.vertex_map[l.gen].map(|g| Letter::new(g, l.inverse)))
        .collect();
    Ok(Raag::new(step.target.clone())
        .normalize(&Word(letters))?
        .into_word())
}

fn smoothable(g: &Graph, v: usize) -> bool {
    let nb = mask_to_vec(g.neighbor_mask(v));
    nb.len() == 2 && !g.has_edge(nb[0], nb[1])
}

/// Smoothing steps turning `big` into a graph isomorphic to `small`.
/// Only vertices with non-adjacent neighbors are smoothed: those are the
/// inverses of subdivisions.
pub fn is_subdivision_of(big: &Graph, small: &Graph) -> Result<Option<Vec<HomomorphismStep>>> {
    let lim = Limits::current();
    ensure(
        "vertices in subdivision search",
        big.vertex_count(),
        lim.subdivision,
    )?;
    ensure(
        "vertices in subdivision search",
        small.vertex_count(),
        lim.isomorphism,
    )?;
    let excess = |g: &Graph| g.edge_count() as i64 - g.vertex_count() as i64;
    if excess(big) != excess(small) || big.vertex_count() < small.vertex_count() {
        return Ok(None);
    }
    let target = small.canonical_form()?;
    let mut dead: HashSet<Graph> = HashSet::new();
    let mut steps = Vec::new();
    if subdivision_rec(big, &target, small.vertex_count(), &mut dead, &mut steps)? {
        Ok(Some(steps))
    } else {
        Ok(None)
    }
}

fn subdivision_rec(
    g: &Graph,
    target: &Graph,
    n_target: usize,
    dead: &mut HashSet<Graph>,
    steps: &mut Vec<HomomorphismStep>,
) -> Result<bool> {
    let canon = g.canonical_form()?;
    if g.vertex_count() == n_target {
        return Ok(canon == *target);
    }
    if dead.contains(&canon) {
        return Ok(false);
    }
    for v in g.vertices() {
        if smoothable(g, v) {
            let step = smoothing_step(g, v)?;
            let next = step.target.clone();
            steps.push(step);
            if subdivision_rec(&next, target, n_target, dead, steps)? {
                return Ok(true);
            }
            steps.pop();
        }
    }
    dead.insert(canon);
    Ok(false)
}

/// Smooth vertices with non-adjacent neighbors, lowest id first, until
/// none is left.
pub fn fully_smoothed(g: &Graph) -> Result<Graph> {
    let mut cur = g.clone();
    while let Some(v) = cur.vertices().find(|&v| smoothable(&cur, v)) {
        cur = cur.smooth_vertex(v)?;
    }
    Ok(cur)
}

/// Every end result of smoothing in every order, up to isomorphism.
pub fn all_full_smoothings(g: &Graph) -> Result<Vec<Graph>> {
    ensure(
        "vertices in smoothing enumeration",
        g.vertex_count(),
        Limits::current().subdivision,
    )?;
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut results: HashSet<Graph> = HashSet::new();
    let mut stack = vec![g.canonical_form()?];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let vs: Vec<usize> = cur.vertices().filter(|&v| smoothable(&cur, v)).collect();
        if vs.is_empty() {
            results.insert(cur);
            continue;
        }
        for v in vs {
            stack.push(cur.smooth_vertex(v)?.canonical_form()?);
        }
    }
    let mut out: Vec<Graph> = results.into_iter().collect();
    out.sort_by_key(|h| h.edges());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ears::{find_loose, find_standard};

    fn g(tag: &str) -> Graph {
        Graph::named(tag.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn step(tag: &str, marked: Option<usize>, gluing: Gluing) -> AssemblyStep {
        AssemblyStep {
            ear: DecoratedEar {
                ear: g(tag),
                marked_end: marked,
                chain: Vec::new(),
            },
            gluing,
        }
    }

    #[test]
    fn assemble_examples() {
        let c5 = assemble(&AssemblyPlan {
            steps: vec![step("C5", Some(0), Gluing::None)],
        })
        .unwrap();
        assert!(c5.graph.is_isomorphic(&g("C5")).unwrap());
        let diamond = assemble(&AssemblyPlan {
            steps: vec![
                step("C3", Some(0), Gluing::None),
                step(
                    "P3",
                    None,
                    Gluing::Two {
                        first: PearlRef { step: 0, pearl: 0 },
                        last: PearlRef { step: 0, pearl: 1 },
                    },
                ),
            ],
        })
        .unwrap();
        let expect = Graph::build(4, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)]).unwrap();
        assert!(diamond.graph.is_isomorphic(&expect).unwrap());
        assert!(verify(&diamond.graph, &diamond.decomposition).is_ok());
        let p3 = assemble(&AssemblyPlan {
            steps: vec![
                step("P2", None, Gluing::None),
                step(
                    "P2",
                    None,
                    Gluing::One {
                        end: End::First,
                        target: PearlRef { step: 0, pearl: 1 },
                    },
                ),
            ],
        })
        .unwrap();
        assert!(p3.graph.is_isomorphic(&g("P3")).unwrap());
    }

    #[test]
    fn degenerate_gluings_rejected() {
        let same = PearlRef { step: 0, pearl: 0 };
        let plan = AssemblyPlan {
            steps: vec![
                step("C3", Some(0), Gluing::None),
                step(
                    "P3",
                    None,
                    Gluing::Two {
                        first: same,
                        last: same,
                    },
                ),
            ],
        };
        assert!(assemble(&plan).is_err());
        // A single edge between already adjacent pearls.
        let plan = AssemblyPlan {
            steps: vec![
                step("C3", Some(0), Gluing::None),
                step(
                    "P2",
                    None,
                    Gluing::Two {
                        first: same,
                        last: PearlRef { step: 0, pearl: 1 },
                    },
                ),
            ],
        };
        assert!(assemble(&plan).is_err());
    }

    #[test]
    fn round_trips() {
        let two_triangles =
            Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        for host in [g("C5"), g("K4"), two_triangles] {
            for d in [find_standard(&host).unwrap(), find_loose(&host).unwrap()] {
                let plan = plan_from_decomposition(&host, &d).unwrap();
                assert_eq!(plan.steps.len(), d.ears.len());
                let out = assemble(&plan).unwrap();
                assert!(out.graph.is_isomorphic(&host).unwrap());
            }
        }
    }

    #[test]
    fn word_maps() {
        let sm = smoothing_step(&g("P3"), 1).unwrap();
        assert_eq!(
            apply_word_map(&sm, &"v0 v1 v2".parse().unwrap())
                .unwrap()
                .to_string(),
            "v0 v1"
        );
        assert!(sm.target.is_isomorphic(&g("P2")).unwrap());
        let id = identification_step(&g("C4"), 0, 1).unwrap();
        assert!(id.target.is_isomorphic(&g("C3")).unwrap());
        let img = apply_word_map(&id, &"v0 v1 v2 v3".parse().unwrap()).unwrap();
        assert!(img.generators().iter().all(|&v| v < 3));
        let ab = abelianising_step(&g("P3"), 0, 2).unwrap();
        assert!(ab.target.is_isomorphic(&g("C3")).unwrap());
        assert!(abelianising_step(&g("P3"), 0, 1).is_err());
    }

    #[test]
    fn subdivisions() {
        assert_eq!(
            is_subdivision_of(&g("C6"), &g("C3"))
                .unwrap()
                .unwrap()
                .len(),
            3
        );
        assert!(is_subdivision_of(&g("C6"), &g("C4")).unwrap().is_some());
        assert!(is_subdivision_of(&g("K4"), &g("C4")).unwrap().is_none());
        assert!(fully_smoothed(&g("C8"))
            .unwrap()
            .is_isomorphic(&g("C3"))
            .unwrap());
        let mut k4 = g("K4");
        for (a, b) in g("K4").edges() {
            k4 = k4.subdivide_edge(a, b).unwrap();
        }
        assert!(fully_smoothed(&k4)
            .unwrap()
            .is_isomorphic(&g("K4"))
            .unwrap());
        assert_eq!(fully_smoothed(&g("K3,3")).unwrap(), g("K3,3"));
    }
}
