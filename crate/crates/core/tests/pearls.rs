mod common;

use common::{named, short_elements, w};
use proptest::prelude::*;
use raag_core::pearls::DEFAULT_BUDGET;
use raag_core::{
    are_adjacent_pearls, check_deg2_conditions, classify_pearl, verify_pearl_chain, DecoratedEar,
    Graph, Letter, Raag, WitnessBundle, Word,
};

fn ears(max: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=max).map(|k| named(&format!("P{k}"))).collect();
    out.extend((4..=max).map(|k| named(&format!("C{k}"))));
    out
}

#[test]
fn conjugated_generators_classify_to_their_vertex() {
    for g in ears(7) {
        let raag = Raag::new(g.clone());
        let marked = g.is_cycle().then_some(0);
        for c in short_elements(&raag, 3) {
            for v in g.vertices() {
                for sign in [1, -1] {
                    let x = Word::power_of_gen(v, sign).conjugate_by(&c);
                    let pc = classify_pearl(&g, marked, &x).unwrap();
                    assert_eq!(pc.vertex(), Some(v), "{x} on {:?}", g.edges());
                }
            }
        }
    }
}

fn ear_and_core() -> impl Strategy<Value = (Graph, Word, Word)> {
    let all = ears(7);
    (0..all.len()).prop_flat_map(move |i| {
        let g = all[i].clone();
        let n = g.vertex_count();
        let letter = (0..n, any::<bool>()).prop_map(|(v, s)| Letter::new(v, s));
        (
            Just(g),
            prop::collection::vec(letter.clone(), 2..=6).prop_map(Word),
            prop::collection::vec(letter, 0..=3).prop_map(Word),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1500))]

    /// A conjugate of a cyclically reduced word of length at least 2 is
    /// never a pearl.
    #[test]
    fn longer_cores_are_not_pearls((g, core, c) in ear_and_core()) {
        let raag = Raag::new(g.clone());
        let core = raag.cyclically_reduce(&core).unwrap().core.into_word();
        prop_assume!(core.len() >= 2);
        let x = core.conjugate_by(&c);
        let marked = g.is_cycle().then_some(0);
        prop_assert!(!classify_pearl(&g, marked, &x).unwrap().is_pearl());
    }
}

/// Whenever the degree-2 conditions pass on canonical witnesses, the
/// element is a pearl.
#[test]
fn degree_two_conditions_imply_pearl() {
    for g in ears(6) {
        let raag = Raag::new(g.clone());
        for c in short_elements(&raag, 2) {
            for v in g.vertices() {
                let x = Word::gen(v).conjugate_by(&c);
                if let Some(wb) = WitnessBundle::canonical_deg2(&g, &x, DEFAULT_BUDGET).unwrap() {
                    if check_deg2_conditions(&g, &x, &wb).unwrap().passed() {
                        assert!(classify_pearl(&g, None, &x).unwrap().is_pearl());
                    }
                }
            }
        }
    }
}

#[test]
fn pearl_adjacency_is_symmetric() {
    for g in ears(6) {
        let raag = Raag::new(g.clone());
        let conj = short_elements(&raag, 1);
        let pearls: Vec<Word> = g
            .vertices()
            .flat_map(|v| conj.iter().map(move |c| Word::gen(v).conjugate_by(c)))
            .collect();
        let mut adjacent = 0;
        for x in &pearls {
            for y in &pearls {
                let xy = are_adjacent_pearls(&g, x, y).unwrap();
                assert_eq!(
                    xy,
                    are_adjacent_pearls(&g, y, x).unwrap(),
                    "{x} / {y} on {:?}",
                    g.edges()
                );
                adjacent += xy as usize;
            }
        }
        assert!(adjacent > 0);
    }
}

/// Apply the automorphism sending each letter `l` to `image(l)`.
fn apply(x: &Word, image: &dyn Fn(Letter) -> Word) -> Word {
    x.0.iter()
        .fold(Word::identity(), |acc, &l| acc.concat(&image(l)))
}

fn standard_chain(g: &Graph) -> DecoratedEar {
    let order = g.ear_order().unwrap();
    DecoratedEar {
        ear: g.clone(),
        marked_end: g.is_cycle().then_some(order[0]),
        chain: order.into_iter().map(Word::gen).collect(),
    }
}

fn moves(g: &Graph) -> Vec<Box<dyn Fn(Letter) -> Word>> {
    let mut out: Vec<Box<dyn Fn(Letter) -> Word>> = Vec::new();
    for v in g.vertices() {
        // Vertex inversion.
        out.push(Box::new(move |l: Letter| {
            if l.gen == v {
                Word(vec![l.inv()])
            } else {
                Word(vec![l])
            }
        }));
        // Partial conjugation by v on one component of Γ − star(v).
        let star = g.star(v).unwrap();
        let rest: Vec<usize> = g.vertices().filter(|u| !star.contains(u)).collect();
        if rest.is_empty() {
            continue;
        }
        let sub = g.induced(&rest).unwrap();
        let comp: Vec<usize> = sub.components()[0].iter().map(|&i| rest[i]).collect();
        out.push(Box::new(move |l: Letter| {
            if comp.contains(&l.gen) {
                Word(vec![l]).conjugate_by(&Word::gen(v))
            } else {
                Word(vec![l])
            }
        }));
    }
    out
}

#[test]
fn chain_acceptance_is_invariant_under_moves() {
    for tag in ["P2", "P3", "P4", "P5", "P6", "C4", "C5", "C6"] {
        let g = named(tag);
        let good = standard_chain(&g);
        let mut bad = good.clone();
        bad.chain.swap(0, 1);
        let good_ok = verify_pearl_chain(&good, DEFAULT_BUDGET).unwrap().accepted;
        let bad_ok = verify_pearl_chain(&bad, DEFAULT_BUDGET).unwrap().accepted;
        assert!(good_ok, "{tag}");
        if tag != "P2" {
            assert!(!bad_ok, "{tag}");
        }
        for m in moves(&g) {
            for (de, want) in [(&good, good_ok), (&bad, bad_ok)] {
                let moved = DecoratedEar {
                    chain: de.chain.iter().map(|x| apply(x, &*m)).collect(),
                    ..de.clone()
                };
                assert_eq!(
                    verify_pearl_chain(&moved, DEFAULT_BUDGET).unwrap().accepted,
                    want,
                    "{tag}: {:?}",
                    moved
                        .chain
                        .iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                );
            }
        }
    }
}

#[test]
fn four_cycle_counterexample_is_rejected() {
    let de = DecoratedEar {
        ear: named("C4"),
        marked_end: Some(0),
        chain: vec![w("v0"), w("v3 v1 v3^-1"), w("v2"), w("v1 v3 v1^-1")],
    };
    let report = verify_pearl_chain(&de, DEFAULT_BUDGET).unwrap();
    assert!(!report.accepted);
    assert!(report.steps.iter().any(|s| !s.ok));
    let json = serde_json::to_string(&de).unwrap();
    let back: DecoratedEar = serde_json::from_str(&json).unwrap();
    assert_eq!(back, de);
}
