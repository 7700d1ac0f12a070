mod common;

use common::named;
use raag_core::{enumerate_graphs, isomorphism_classes, Graph};

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| isomorphism_classes(k).unwrap())
        .collect()
}

#[test]
fn subdivide_then_smooth_is_identity() {
    for g in graphs_up_to(6) {
        for (a, b) in g.edges() {
            let s = g.subdivide_edge(a, b).unwrap();
            let fresh = s.vertex_count() - 1;
            assert!(s.smooth_vertex(fresh).unwrap().is_isomorphic(&g).unwrap());
        }
    }
}

#[test]
fn join_factors_are_complete_to_each_other_and_indecomposable() {
    for g in graphs_up_to(6) {
        let all: Vec<usize> = g.vertices().collect();
        let factors = g.join_decomposition(&all).unwrap();
        assert_eq!(
            factors.iter().map(Vec::len).sum::<usize>(),
            g.vertex_count()
        );
        for (i, f) in factors.iter().enumerate() {
            for h in &factors[i + 1..] {
                assert!(f.iter().all(|&a| h.iter().all(|&b| g.has_edge(a, b))));
            }
            assert_eq!(g.join_decomposition(f).unwrap().len(), 1, "{:?} splits", f);
        }
    }
}

#[test]
fn connectivity_bounds() {
    for n in 1..=8 {
        let k = named(&format!("K{n}"));
        assert_eq!(k.vertex_connectivity().unwrap(), n - 1);
    }
    for n in 1..=5 {
        for g in enumerate_graphs(n).unwrap() {
            let min_deg = g.degrees().into_iter().min().unwrap();
            let lambda = g.edge_connectivity().unwrap();
            let kappa = g.vertex_connectivity().unwrap();
            assert!(lambda <= min_deg || n == 1);
            assert!(kappa <= lambda);
        }
    }
}

#[test]
fn isomorphism_is_an_equivalence_on_five_vertices() {
    let graphs: Vec<Graph> = enumerate_graphs(5).unwrap().collect();
    let classes = isomorphism_classes(5).unwrap();
    assert_eq!(classes.len(), 34);
    // Every labeled graph falls in exactly one class; the class
    // representative relation is then reflexive, symmetric and transitive.
    for g in graphs.iter().step_by(7) {
        let hits: Vec<&Graph> = classes
            .iter()
            .filter(|c| g.is_isomorphic(c).unwrap())
            .collect();
        assert_eq!(hits.len(), 1);
        assert!(g.is_isomorphic(g).unwrap());
        assert!(hits[0].is_isomorphic(g).unwrap());
        assert_eq!(
            g.canonical_form().unwrap(),
            hits[0].canonical_form().unwrap()
        );
    }
    for a in &classes {
        for b in &classes {
            assert_eq!(a.is_isomorphic(b).unwrap(), a == b);
        }
    }
}

#[test]
fn isomorphism_witness_is_an_isomorphism() {
    let p = named("petersen");
    let perm: Vec<usize> = vec![3, 7, 1, 9, 0, 2, 8, 5, 6, 4];
    let q = p.relabel(&perm).unwrap();
    let f = p.are_isomorphic(&q).unwrap().unwrap();
    for (a, b) in p.edges() {
        assert!(q.has_edge(f[a], f[b]));
    }
    assert!(named("K3,3")
        .are_isomorphic(&named("W5").delete_vertex(0).unwrap())
        .unwrap()
        .is_none());
}
