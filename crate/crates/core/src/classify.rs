//! Graph-property classifiers, each computed by a group-theoretic route
//! (minors, ear decompositions, the word problem) and by an independent
//! classical oracle. Asking for both routes turns any disagreement into
//! [`RaagError::RouteDisagreement`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::assembly::fully_smoothed;
use crate::ears::{
    find_3conn_bundle, find_nested, find_odd, find_proper, find_standard,
    min_capacity_over_decompositions, EarDecomposition, ThreeConnBundle,
};
use crate::error::{RaagError, Result};
use crate::graph::{bit, Graph, NamedGraph};
use crate::limits::{ensure, Limits};
use crate::minors::{find_minor, find_topological_minor, MinorWitness, TopologicalWitness};
use crate::words::{Raag, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "forest")]
    Forest,
    #[serde(rename = "planar")]
    Planar,
    #[serde(rename = "outerplanar")]
    Outerplanar,
    #[serde(rename = "2ec")]
    TwoEdgeConnected,
    #[serde(rename = "2vc")]
    TwoVertexConnected,
    #[serde(rename = "3vc")]
    ThreeVertexConnected,
    #[serde(rename = "series-parallel")]
    SeriesParallel,
    #[serde(rename = "factor-critical")]
    FactorCritical,
    #[serde(rename = "max-join")]
    MaxJoin,
    #[serde(rename = "cohomology")]
    Cohomology,
}

impl Property {
    pub const ALL: [Property; 10] = [
        Property::Forest,
        Property::Planar,
        Property::Outerplanar,
        Property::TwoEdgeConnected,
        Property::TwoVertexConnected,
        Property::ThreeVertexConnected,
        Property::SeriesParallel,
        Property::FactorCritical,
        Property::MaxJoin,
        Property::Cohomology,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Forest => "forest",
            Property::Planar => "planar",
            Property::Outerplanar => "outerplanar",
            Property::TwoEdgeConnected => "2ec",
            Property::TwoVertexConnected => "2vc",
            Property::ThreeVertexConnected => "3vc",
            Property::SeriesParallel => "series-parallel",
            Property::FactorCritical => "factor-critical",
            Property::MaxJoin => "max-join",
            Property::Cohomology => "cohomology",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = RaagError;
    fn from_str(s: &str) -> Result<Property> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| RaagError::Parse(format!("unknown property {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Paper,
    Oracle,
    Both,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Paper => "paper",
            Route::Oracle => "oracle",
            Route::Both => "both",
        })
    }
}

impl FromStr for Route {
    type Err = RaagError;
    fn from_str(s: &str) -> Result<Route> {
        match s {
            "paper" => Ok(Route::Paper),
            "oracle" => Ok(Route::Oracle),
            "both" => Ok(Route::Both),
            _ => Err(RaagError::Parse(format!("unknown route {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Int(usize),
    Pair(usize, usize),
}

impl Value {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(b),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(k) => write!(f, "{k}"),
            Value::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

/// Certificates for positive answers and exhausted-search bounds for
/// negative ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    MinorFound {
        pattern: String,
        witness: MinorWitness,
    },
    /// Witness paths live in `host`, the fully smoothed graph searched.
    SubdivisionFound {
        pattern: String,
        host: Graph,
        witness: TopologicalWitness,
    },
    Decomposition {
        decomposition: EarDecomposition,
    },
    /// One non-separating sequence per oriented edge.
    ThreeConnBundle {
        bundle: ThreeConnBundle,
    },
    /// Two-terminal series-parallel reduction succeeded between these terminals.
    Terminals {
        s: usize,
        t: usize,
    },
    /// One perfect matching of `G − v` for each v.
    NearPerfectMatchings {
        matchings: Vec<Vec<(usize, usize)>>,
    },
    NoPerfectMatching {
        removed: usize,
    },
    Join {
        edges: Vec<(usize, usize)>,
    },
    Measure {
        name: String,
        value: usize,
    },
    Exhausted {
        search: String,
    },
}

fn exhausted(search: impl Into<String>) -> Evidence {
    Evidence::Exhausted {
        search: search.into(),
    }
}

fn measure(name: &str, value: usize) -> Evidence {
    Evidence::Measure {
        name: name.into(),
        value,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RouteOutcome {
    pub route: Route,
    pub value: Value,
    pub evidence: Vec<Evidence>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub property: Property,
    pub value: Value,
    pub outcomes: Vec<RouteOutcome>,
    pub flags: Vec<String>,
}

pub fn classify(g: &Graph, property: Property, route: Route) -> Result<Classification> {
    let mut flags = Vec::new();
    let mut outcomes = Vec::new();
    let mut route = route;
    if property == Property::MaxJoin && route == Route::Both && !is_2vc_oracle(g)? {
        flags.push("not 2-vertex-connected: ear formula does not apply, oracle only".to_string());
        route = Route::Oracle;
    }
    if matches!(route, Route::Paper | Route::Both) {
        outcomes.push(paper_route(g, property)?);
    }
    if matches!(route, Route::Oracle | Route::Both) {
        outcomes.push(oracle_route(g, property)?);
    }
    if let [p, o] = outcomes.as_slice() {
        if p.value != o.value {
            return Err(RaagError::RouteDisagreement {
                property: property.to_string(),
                paper: p.value.to_string(),
                oracle: o.value.to_string(),
            });
        }
    }
    Ok(Classification {
        property,
        value: outcomes[0].value,
        outcomes,
        flags,
    })
}

fn pattern(tag: NamedGraph) -> Graph {
    Graph::named(tag).expect("named pattern")
}

/// No minor among `patterns`; evidence is the first witness found or the
/// list of exhausted searches.
fn excludes_minors(g: &Graph, patterns: &[(&str, NamedGraph)]) -> Result<(bool, Vec<Evidence>)> {
    let mut ev = Vec::new();
    for &(name, tag) in patterns {
        match find_minor(g, &pattern(tag))? {
            Some(witness) => {
                return Ok((
                    false,
                    vec![Evidence::MinorFound {
                        pattern: name.into(),
                        witness,
                    }],
                ))
            }
            None => ev.push(exhausted(format!("{name} minor"))),
        }
    }
    Ok((true, ev))
}

const KURATOWSKI: [(&str, NamedGraph); 2] = [
    ("K5", NamedGraph::Complete(5)),
    ("K3,3", NamedGraph::CompleteBipartite(3, 3)),
];

/// Kuratowski: no subdivision of K5 or K3,3. Smoothing preserves
/// topological minors, so the search runs on the fully smoothed graph.
fn planar_by_subdivisions(g: &Graph) -> Result<(bool, Vec<Evidence>)> {
    let host = fully_smoothed(g)?;
    let mut ev = vec![measure("smoothed vertices", host.vertex_count())];
    for (name, tag) in KURATOWSKI {
        match find_topological_minor(&host, &pattern(tag))? {
            Some(witness) => {
                return Ok((
                    false,
                    vec![Evidence::SubdivisionFound {
                        pattern: name.into(),
                        host,
                        witness,
                    }],
                ))
            }
            None => ev.push(exhausted(format!("{name} subdivision"))),
        }
    }
    Ok((true, ev))
}

fn decided(route: Route, holds: bool, evidence: Vec<Evidence>) -> RouteOutcome {
    RouteOutcome {
        route,
        value: Value::Bool(holds),
        evidence,
    }
}

fn from_decomposition(d: Option<EarDecomposition>, kind: &str) -> RouteOutcome {
    match d {
        Some(decomposition) => decided(
            Route::Paper,
            true,
            vec![Evidence::Decomposition { decomposition }],
        ),
        None => decided(
            Route::Paper,
            false,
            vec![exhausted(format!("{kind} ear decomposition"))],
        ),
    }
}

fn paper_route(g: &Graph, property: Property) -> Result<RouteOutcome> {
    Ok(match property {
        Property::Forest => {
            let (holds, ev) = excludes_minors(g, &[("C3", NamedGraph::Cycle(3))])?;
            decided(Route::Paper, holds, ev)
        }
        Property::Planar => {
            let (holds, ev) = excludes_minors(g, &KURATOWSKI)?;
            decided(Route::Paper, holds, ev)
        }
        Property::Outerplanar => {
            let (holds, ev) = excludes_minors(
                g,
                &[
                    ("K4", NamedGraph::Complete(4)),
                    ("K2,3", NamedGraph::CompleteBipartite(2, 3)),
                ],
            )?;
            decided(Route::Paper, holds, ev)
        }
        Property::TwoEdgeConnected => from_decomposition(find_standard(g), "standard"),
        Property::TwoVertexConnected => from_decomposition(find_proper(g), "proper"),
        Property::SeriesParallel => from_decomposition(find_nested(g)?, "nested"),
        Property::FactorCritical => from_decomposition(find_odd(g)?, "odd"),
        Property::ThreeVertexConnected => match find_3conn_bundle(g)? {
            Some(bundle) => decided(
                Route::Paper,
                true,
                vec![Evidence::ThreeConnBundle { bundle }],
            ),
            None => decided(
                Route::Paper,
                false,
                vec![exhausted("3-connectivity certificate on every edge")],
            ),
        },
        Property::MaxJoin => {
            let (cap, decomposition) = min_capacity_over_decompositions(g)?;
            RouteOutcome {
                route: Route::Paper,
                value: Value::Int(cap),
                evidence: vec![Evidence::Decomposition { decomposition }],
            }
        }
        Property::Cohomology => {
            // Generators and commuting generator pairs, read off the group
            // through the word problem rather than the graph.
            let raag = Raag::new(g.clone());
            let rank = raag.rank();
            let mut pairs = 0;
            for a in 0..rank {
                for b in a + 1..rank {
                    if raag.commutes(&Word::gen(a), &Word::gen(b))? {
                        pairs += 1;
                    }
                }
            }
            RouteOutcome {
                route: Route::Paper,
                value: Value::Pair(rank, pairs),
                evidence: vec![
                    measure("generators", rank),
                    measure("commuting generator pairs", pairs),
                ],
            }
        }
    })
}

fn is_2vc_oracle(g: &Graph) -> Result<bool> {
    Ok(g.vertex_count() >= 3 && g.vertex_connectivity()? >= 2)
}

fn oracle_route(g: &Graph, property: Property) -> Result<RouteOutcome> {
    let o = |holds: bool, evidence: Vec<Evidence>| decided(Route::Oracle, holds, evidence);
    Ok(match property {
        Property::Forest => o(
            g.is_forest_by_traversal(),
            vec![measure(
                "cycle rank",
                g.edge_count() + g.components().len() - g.vertex_count(),
            )],
        ),
        Property::Planar => {
            let (holds, ev) = planar_by_subdivisions(g)?;
            o(holds, ev)
        }
        Property::Outerplanar => {
            // Outerplanar iff adding a vertex adjacent to everything keeps
            // the graph planar.
            let all: Vec<usize> = g.vertices().collect();
            let (holds, ev) = planar_by_subdivisions(&g.add_vertex(&all)?)?;
            o(holds, ev)
        }
        Property::TwoEdgeConnected => {
            let l = g.edge_connectivity()?;
            o(
                g.vertex_count() >= 2 && l >= 2,
                vec![measure("edge connectivity", l)],
            )
        }
        Property::TwoVertexConnected => {
            let k = g.vertex_connectivity()?;
            o(
                g.vertex_count() >= 3 && k >= 2,
                vec![measure("vertex connectivity", k)],
            )
        }
        Property::ThreeVertexConnected => {
            let k = g.vertex_connectivity()?;
            o(
                g.vertex_count() >= 4 && k >= 3,
                vec![measure("vertex connectivity", k)],
            )
        }
        Property::SeriesParallel => match series_parallel_terminals(g)? {
            Some((s, t)) => o(true, vec![Evidence::Terminals { s, t }]),
            None => o(
                false,
                vec![exhausted(
                    "series-parallel reduction over all terminal pairs",
                )],
            ),
        },
        Property::FactorCritical => match near_perfect_matchings(g)? {
            Ok(matchings) => o(true, vec![Evidence::NearPerfectMatchings { matchings }]),
            Err(removed) => o(false, vec![Evidence::NoPerfectMatching { removed }]),
        },
        Property::MaxJoin => {
            let edges = max_join(g)?;
            RouteOutcome {
                route: Route::Oracle,
                value: Value::Int(edges.len()),
                evidence: vec![Evidence::Join { edges }],
            }
        }
        Property::Cohomology => RouteOutcome {
            route: Route::Oracle,
            value: Value::Pair(g.vertex_count(), g.edge_count()),
            evidence: vec![],
        },
    })
}

/// Terminals `s < t` between which the graph reduces to the single edge
/// `st` by series and parallel reductions, if any.
pub fn series_parallel_terminals(g: &Graph) -> Result<Option<(usize, usize)>> {
    ensure(
        "vertex count for series-parallel reduction",
        g.vertex_count(),
        Limits::current().oracle,
    )?;
    if !g.is_connected() {
        return Ok(None);
    }
    for s in g.vertices() {
        for t in s + 1..g.vertex_count() {
            if reduces_to_edge(g, s, t) {
                return Ok(Some((s, t)));
            }
        }
    }
    Ok(None)
}

fn reduces_to_edge(g: &Graph, s: usize, t: usize) -> bool {
    // Multigraph as edge multiplicities; parallel reduction is implicit
    // in keeping multiplicities at most one.
    let mut edges: BTreeMap<(usize, usize), usize> =
        g.edges().into_iter().map(|e| (e, 1)).collect();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    loop {
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(a, b) in edges.keys() {
            incident.entry(a).or_default().push(b);
            incident.entry(b).or_default().push(a);
        }
        let series = incident
            .iter()
            .find(|(&v, nb)| v != s && v != t && nb.len() == 2)
            .map(|(&v, nb)| (v, nb[0], nb[1]));
        match series {
            Some((v, a, b)) => {
                edges.remove(&key(v, a));
                edges.remove(&key(v, b));
                *edges.entry(key(a, b)).or_insert(0) += 1;
                edges.values_mut().for_each(|m| *m = 1);
            }
            None => {
                return edges.len() == 1 && edges.contains_key(&(s, t)) && incident.len() == 2;
            }
        }
    }
}

/// A perfect matching of `G − v` for every v, or the first v without one.
pub fn near_perfect_matchings(
    g: &Graph,
) -> Result<std::result::Result<Vec<Vec<(usize, usize)>>, usize>> {
    ensure(
        "vertex count for matching oracle",
        g.vertex_count(),
        Limits::current().oracle,
    )?;
    let mut out = Vec::new();
    for v in g.vertices() {
        let mut m = Vec::new();
        if !perfect_matching(g, g.vertex_mask() & !bit(v), &mut m) {
            return Ok(Err(v));
        }
        out.push(m);
    }
    Ok(Ok(out))
}

fn perfect_matching(g: &Graph, free: u64, m: &mut Vec<(usize, usize)>) -> bool {
    if free == 0 {
        return true;
    }
    let v = free.trailing_zeros() as usize;
    let mut cand = g.neighbor_mask(v) & free;
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        m.push((v, u));
        if perfect_matching(g, free & !bit(v) & !bit(u), m) {
            return true;
        }
        m.pop();
    }
    false
}

/// Every cycle as a bitmask over `g.edges()` indices.
pub fn cycle_edge_masks(g: &Graph) -> Vec<u128> {
    let edges = g.edges();
    let index = |a: usize, b: usize| {
        edges
            .iter()
            .position(|&e| e == (a.min(b), a.max(b)))
            .expect("edge")
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for start in g.vertices() {
        let mut path = vec![start];
        fn go(
            g: &Graph,
            start: usize,
            path: &mut Vec<usize>,
            index: &dyn Fn(usize, usize) -> usize,
            seen: &mut HashSet<u128>,
            out: &mut Vec<u128>,
        ) {
            let cur = *path.last().expect("nonempty");
            for y in g.neighbors(cur).expect("vertex") {
                if y == start && path.len() >= 3 {
                    let mut m = 1u128 << index(cur, start);
                    for w in path.windows(2) {
                        m |= 1u128 << index(w[0], w[1]);
                    }
                    if seen.insert(m) {
                        out.push(m);
                    }
                } else if y > start && !path.contains(&y) {
                    path.push(y);
                    go(g, start, path, index, seen, out);
                    path.pop();
                }
            }
        }
        go(g, start, &mut path, &index, &mut seen, &mut out);
    }
    out
}

/// Largest edge set meeting every cycle C in at most ⌊|C|/2⌋ edges,
/// by branch and bound over the edges.
pub fn max_join(g: &Graph) -> Result<Vec<(usize, usize)>> {
    ensure(
        "vertex count for join oracle",
        g.vertex_count(),
        Limits::current().oracle,
    )?;
    let edges = g.edges();
    if edges.len() > 128 {
        return Err(RaagError::capacity(
            "edges for join oracle",
            edges.len(),
            128,
        ));
    }
    let cycles = cycle_edge_masks(g);
    let room: Vec<u32> = cycles.iter().map(|c| c.count_ones() / 2).collect();
    struct S<'a> {
        cycles: &'a [u128],
        m: usize,
        best: u128,
        best_len: u32,
    }
    fn go(s: &mut S, i: usize, chosen: u128, len: u32, room: &mut Vec<u32>) {
        if len + (s.m - i) as u32 <= s.best_len {
            return;
        }
        if i == s.m {
            s.best = chosen;
            s.best_len = len;
            return;
        }
        let e = 1u128 << i;
        let hits: Vec<usize> = (0..s.cycles.len())
            .filter(|&c| s.cycles[c] & e != 0)
            .collect();
        if hits.iter().all(|&c| room[c] > 0) {
            hits.iter().for_each(|&c| room[c] -= 1);
            go(s, i + 1, chosen | e, len + 1, room);
            hits.iter().for_each(|&c| room[c] += 1);
        }
        go(s, i + 1, chosen, len, room);
    }
    let mut s = S {
        cycles: &cycles,
        m: edges.len(),
        best: 0,
        best_len: 0,
    };
    let mut room = room;
    go(&mut s, 0, 0, 0, &mut room);
    Ok((0..edges.len())
        .filter(|&i| s.best & (1u128 << i) != 0)
        .map(|i| edges[i])
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(tag: &str) -> Graph {
        Graph::named(tag.parse::<NamedGraph>().unwrap()).unwrap()
    }

    fn both(tag: &str, p: Property) -> Value {
        classify(&g(tag), p, Route::Both).unwrap().value
    }

    fn bowtie() -> Graph {
        Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn forests_and_planarity() {
        assert_eq!(both("P5", Property::Forest), Value::Bool(true));
        assert_eq!(both("C3", Property::Forest), Value::Bool(false));
        assert_eq!(both("K1,4", Property::Forest), Value::Bool(true));
        assert_eq!(both("K4", Property::Planar), Value::Bool(true));
        assert_eq!(both("K5", Property::Planar), Value::Bool(false));
        assert_eq!(both("K3,3", Property::Planar), Value::Bool(false));
        assert_eq!(both("petersen", Property::Planar), Value::Bool(false));
        assert_eq!(both("C5", Property::Outerplanar), Value::Bool(true));
        assert_eq!(both("C6", Property::Outerplanar), Value::Bool(true));
        assert_eq!(both("K4", Property::Outerplanar), Value::Bool(false));
        assert_eq!(both("K2,3", Property::Outerplanar), Value::Bool(false));
    }

    #[test]
    fn connectivity_family() {
        let triple = |g: &Graph| {
            [
                Property::TwoEdgeConnected,
                Property::TwoVertexConnected,
                Property::ThreeVertexConnected,
            ]
            .map(|p| classify(g, p, Route::Both).unwrap().value)
        };
        let b = Value::Bool;
        assert_eq!(triple(&g("C4")), [b(true), b(true), b(false)]);
        assert_eq!(triple(&g("K4")), [b(true), b(true), b(true)]);
        assert_eq!(triple(&bowtie()), [b(true), b(false), b(false)]);
    }

    #[test]
    fn series_parallel_and_factor_critical() {
        assert_eq!(both("C4", Property::SeriesParallel), Value::Bool(true));
        assert_eq!(both("K4", Property::SeriesParallel), Value::Bool(false));
        let diamond = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert_eq!(
            classify(&diamond, Property::SeriesParallel, Route::Both)
                .unwrap()
                .value,
            Value::Bool(true)
        );
        // A tree with a degree-3 vertex has no K4 minor yet is not series-parallel.
        assert_eq!(both("K1,3", Property::SeriesParallel), Value::Bool(false));
        assert_eq!(both("C5", Property::FactorCritical), Value::Bool(true));
        assert_eq!(both("C4", Property::FactorCritical), Value::Bool(false));
        assert_eq!(
            classify(&bowtie(), Property::FactorCritical, Route::Both)
                .unwrap()
                .value,
            Value::Bool(true)
        );
    }

    #[test]
    fn joins_and_cohomology() {
        assert_eq!(both("C5", Property::MaxJoin), Value::Int(2));
        assert_eq!(both("C4", Property::MaxJoin), Value::Int(2));
        assert_eq!(both("K4", Property::MaxJoin), Value::Int(2));
        let c = classify(&bowtie(), Property::MaxJoin, Route::Both).unwrap();
        assert_eq!(c.outcomes.len(), 1);
        assert!(!c.flags.is_empty());
        assert!(classify(&bowtie(), Property::MaxJoin, Route::Paper).is_err());
        assert_eq!(both("K4", Property::Cohomology), Value::Pair(4, 6));
        assert_eq!(both("C5", Property::Cohomology), Value::Pair(5, 5));
        assert_eq!(both("petersen", Property::Cohomology), Value::Pair(10, 15));
    }

    #[test]
    fn evidence_shapes() {
        let c = classify(&g("K5"), Property::Planar, Route::Both).unwrap();
        assert!(matches!(
            c.outcomes[0].evidence[0],
            Evidence::MinorFound { .. }
        ));
        assert!(matches!(
            c.outcomes[1].evidence[0],
            Evidence::SubdivisionFound { .. }
        ));
        let c = classify(&g("K4"), Property::Planar, Route::Paper).unwrap();
        assert_eq!(c.outcomes[0].evidence.len(), 2);
        assert_eq!(
            "series-parallel".parse::<Property>().unwrap(),
            Property::SeriesParallel
        );
        assert!("treewidth".parse::<Property>().is_err());
        assert_eq!(cycle_edge_masks(&g("K4")).len(), 7);
    }
}
