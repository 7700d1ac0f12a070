mod common;

use common::{gallery, named, random_graph};
use raag_core::ears::verify;
use raag_core::{
    check_3conn_conditions, ear_count_formula, find_3conn_bundle, find_3conn_certificate,
    find_loose, find_nested, find_odd, find_proper, isomorphism_classes,
    min_capacity_over_decompositions, Graph,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn connected_up_to(n: usize) -> Vec<Graph> {
    (1..=n)
        .flat_map(|k| isomorphism_classes(k).unwrap())
        .filter(Graph::is_connected)
        .collect()
}

#[test]
fn three_connectivity_certificates_match_vertex_connectivity() {
    let mut graphs = connected_up_to(6);
    graphs.extend(gallery().into_iter().map(|(_, g)| g));
    let mut certified = 0;
    for g in &graphs {
        let three = g.vertex_count() >= 4 && g.vertex_connectivity().unwrap() >= 3;
        let bundle = find_3conn_bundle(g).unwrap();
        assert_eq!(bundle.is_some(), three, "{:?}", g.edges());
        if three {
            assert!(find_3conn_certificate(g).unwrap().is_some());
        }
        if let Some(b) = bundle {
            certified += 1;
            assert!(b.verify(g).is_ok(), "{:?}", g.edges());
            for c in &b.certificates {
                let report = check_3conn_conditions(g, c);
                assert!(report.holds(), "{:?}: {report:?}", g.edges());
                assert!(verify(g, &c.decomposition).is_ok());
            }
        }
    }
    assert!(certified >= 10);
}

#[test]
fn three_connectivity_certificates_on_random_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut three = 0;
    for trial in 0..300 {
        let n = 7 + trial % 2;
        let g = random_graph(&mut rng, n, 0.55);
        if !g.is_connected() {
            continue;
        }
        let want = g.vertex_connectivity().unwrap() >= 3;
        three += want as usize;
        let bundle = find_3conn_bundle(&g).unwrap();
        assert_eq!(bundle.is_some(), want, "{:?}", g.edges());
        if let Some(b) = bundle {
            assert!(b.verify(&g).is_ok());
        }
    }
    assert!(three > 20);
}

#[test]
fn certificates_are_refused_on_wrong_graphs() {
    let k4 = named("K4");
    let c = find_3conn_certificate(&k4).unwrap().unwrap();
    // Same decomposition presented for a graph with one more vertex.
    let bigger = k4.add_vertex(&[0, 1, 2]).unwrap();
    assert!(!check_3conn_conditions(&bigger, &c).holds());
    let b = find_3conn_bundle(&k4).unwrap().unwrap();
    assert!(b.verify(&bigger).is_err());
    let mut short = b.clone();
    short.certificates.pop();
    assert!(short.verify(&k4).is_err());
}

#[test]
fn decompositions_verify_for_their_kind() {
    for g in connected_up_to(6) {
        let found = [
            find_loose(&g),
            find_proper(&g),
            find_nested(&g).unwrap(),
            find_odd(&g).unwrap(),
        ];
        for d in found.into_iter().flatten() {
            assert!(verify(&g, &d).is_ok(), "{} on {:?}", d.kind, g.edges());
        }
    }
}

/// Minimum capacity against the even-ear count of the optimal
/// decomposition: ⌊k/2⌋ summed over ears telescopes to (|V| − 1 + #even)/2.
#[test]
fn minimum_capacity_matches_even_ear_count() {
    for g in connected_up_to(6) {
        if g.vertex_count() < 3 || g.vertex_connectivity().unwrap() < 2 {
            assert!(min_capacity_over_decompositions(&g).is_err());
            continue;
        }
        let (cap, d) = min_capacity_over_decompositions(&g).unwrap();
        assert!(verify(&g, &d).is_ok());
        assert_eq!(d.total_capacity(), cap);
        let even = d.ears.iter().filter(|e| e.edge_count() % 2 == 0).count();
        assert_eq!(2 * cap, g.vertex_count() - 1 + even, "{:?}", g.edges());
    }
}

#[test]
fn ear_count_formula_on_gallery() {
    for (tag, g) in gallery() {
        let ec = ear_count_formula(&g).unwrap();
        assert_eq!(
            ec.value,
            g.edge_count() as i64 - g.vertex_count() as i64 + 1,
            "{tag}"
        );
        assert!(ec.hypothesis_holds, "{tag}");
    }
    let bowtie = Graph::build(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
    assert!(!ear_count_formula(&bowtie).unwrap().hypothesis_holds);
}

#[test]
fn decompositions_round_trip_through_json() {
    let d = find_proper(&named("petersen")).unwrap();
    let s = serde_json::to_string(&d).unwrap();
    let back: raag_core::EarDecomposition = serde_json::from_str(&s).unwrap();
    assert_eq!(back, d);
    assert_eq!(back.ear_count(), 6);
}
