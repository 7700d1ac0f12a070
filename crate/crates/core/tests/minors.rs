mod common;

use common::random_graph;
use proptest::prelude::*;
use raag_core::{
    abelianising_step, apply_word_map, assemble, find_loose, find_minor, fully_smoothed,
    identification_step, is_subdivision_of, isomorphism_classes, pearl_deletion_step,
    plan_from_decomposition, replay, smoothing_step, witness_to_sequences, Graph, HomomorphismStep,
    Letter, Raag, Word,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn classes_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| isomorphism_classes(k).unwrap())
        .collect()
}

#[test]
fn minor_relation_is_reflexive_and_transitive() {
    let graphs: Vec<Graph> = classes_up_to(5)
        .into_iter()
        .filter(|g| g.edge_count() > 0)
        .collect();
    let n = graphs.len();
    let mut rel = vec![vec![false; n]; n];
    for (i, h) in graphs.iter().enumerate() {
        for (k, p) in graphs.iter().enumerate() {
            if let Some(wit) = find_minor(h, p).unwrap() {
                wit.validate(h, p).unwrap();
                rel[i][k] = true;
            }
        }
        assert!(rel[i][i]);
    }
    for a in 0..n {
        for b in 0..n {
            if !rel[a][b] {
                continue;
            }
            for c in 0..n {
                assert!(
                    !rel[b][c] || rel[a][c],
                    "{:?} > {:?} > {:?}",
                    graphs[a].edges(),
                    graphs[b].edges(),
                    graphs[c].edges()
                );
            }
        }
    }
}

#[test]
fn replayed_sequences_reach_the_pattern() {
    let hosts: Vec<Graph> = classes_up_to(6)
        .into_iter()
        .filter(Graph::is_connected)
        .step_by(3)
        .collect();
    let patterns = ["K3", "C4", "K4", "K1,3", "K2,3"].map(|t| common::named(t));
    let mut replayed = 0;
    for h in &hosts {
        for p in &patterns {
            if let Some(wit) = find_minor(h, p).unwrap() {
                let seq = witness_to_sequences(h, p, &wit).unwrap();
                assert!(
                    replay(h, p, &seq).unwrap(),
                    "{:?} ⊇ {:?}",
                    h.edges(),
                    p.edges()
                );
                let last = seq.abelianisings.last().map(|s| &s.target);
                let contracted = seq
                    .identifications
                    .last()
                    .or(seq.deletions.last())
                    .map(|s| s.target.clone())
                    .unwrap_or_else(|| h.clone());
                assert_eq!(last.unwrap_or(&contracted), &contracted);
                replayed += 1;
            }
        }
    }
    assert!(replayed > 50);
}

/// Adding an edge or a vertex never destroys a minor.
#[test]
fn minors_are_monotone_under_supergraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let patterns = ["K3", "C4", "K4", "K2,3"].map(|t| common::named(t));
    for _ in 0..60 {
        let g = random_graph(&mut rng, 6, 0.5);
        let missing: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        let mut supers = vec![g.add_vertex(&[0, 3]).unwrap()];
        if let Some(&(a, b)) = missing.first() {
            supers.push(g.add_edge(a, b).unwrap());
        }
        for p in &patterns {
            if find_minor(&g, p).unwrap().is_some() {
                for s in &supers {
                    assert!(
                        find_minor(s, p).unwrap().is_some(),
                        "{:?} ⊇ {:?}",
                        s.edges(),
                        p.edges()
                    );
                }
            }
        }
    }
}

#[test]
fn graphs_subdivide_their_full_smoothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..80 {
        let g = random_graph(&mut rng, 7, 0.3);
        let s = fully_smoothed(&g).unwrap();
        let steps = is_subdivision_of(&g, &s)
            .unwrap()
            .unwrap_or_else(|| panic!("{:?}", g.edges()));
        assert_eq!(steps.len(), g.vertex_count() - s.vertex_count());
        if let Some(last) = steps.last() {
            assert!(last.target.is_isomorphic(&s).unwrap());
        }
    }
}

#[test]
fn loose_decompositions_reassemble_their_graph() {
    for g in classes_up_to(6)
        .into_iter()
        .filter(|g| g.is_connected() && g.vertex_count() > 1)
    {
        let d = find_loose(&g).unwrap_or_else(|| panic!("{:?}", g.edges()));
        let plan = plan_from_decomposition(&g, &d).unwrap();
        let out = assemble(&plan).unwrap();
        assert!(out.graph.is_isomorphic(&g).unwrap(), "{:?}", g.edges());
        assert_eq!(out.decomposition.ear_count(), d.ear_count());
    }
}

fn steps_on(g: &Graph) -> Vec<HomomorphismStep> {
    let mut out = Vec::new();
    for v in g.vertices() {
        out.push(pearl_deletion_step(g, v).unwrap());
        if let Ok(s) = smoothing_step(g, v) {
            out.push(s);
        }
    }
    for (a, b) in g.edges() {
        out.push(identification_step(g, a, b).unwrap());
    }
    for a in g.vertices() {
        for b in a + 1..g.vertex_count() {
            if !g.has_edge(a, b) {
                out.push(abelianising_step(g, a, b).unwrap());
            }
        }
    }
    out
}

fn step_and_words() -> impl Strategy<Value = (HomomorphismStep, Word, Word)> {
    let steps: Vec<HomomorphismStep> = classes_up_to(5)
        .iter()
        .filter(|g| g.vertex_count() >= 2)
        .flat_map(steps_on)
        .collect();
    (0..steps.len()).prop_flat_map(move |i| {
        let s = steps[i].clone();
        let n = s.source.vertex_count();
        let word = prop::collection::vec((0..n, any::<bool>()), 0..=6)
            .prop_map(|v| Word(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()));
        (Just(s), word.clone(), word)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    #[test]
    fn word_maps_are_homomorphisms((step, a, b) in step_and_words()) {
        let src = Raag::new(step.source.clone());
        let tgt = Raag::new(step.target.clone());
        let fa = apply_word_map(&step, &a).unwrap();
        let fb = apply_word_map(&step, &b).unwrap();
        let fab = apply_word_map(&step, &a.concat(&b)).unwrap();
        prop_assert!(tgt.equal(&fab, &fa.concat(&fb)).unwrap());
        let na = src.normalize(&a).unwrap().into_word();
        prop_assert_eq!(apply_word_map(&step, &na).unwrap(), fa);
    }
}
