mod common;

use common::{bfs_key, named, short_elements, w};
use proptest::prelude::*;
use raag_core::free::generates_free_group;
use raag_core::words::{is_primitive_vector, is_unimodular_pair};
use raag_core::{
    isomorphism_classes, AbelianVector, CentralizerOutcome, Graph, Letter, Raag, Word,
};

fn small_graphs() -> Vec<Graph> {
    (1..=5)
        .flat_map(|n| isomorphism_classes(n).unwrap())
        .collect()
}

fn word_over(n: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n, any::<bool>()), 0..=max_len)
        .prop_map(|v| Word(v.into_iter().map(|(g, i)| Letter::new(g, i)).collect()))
}

fn graph_and_words() -> impl Strategy<Value = (Graph, Word, Word)> {
    let graphs = small_graphs();
    (0..graphs.len()).prop_flat_map(move |i| {
        let g = graphs[i].clone();
        let n = g.vertex_count();
        (Just(g), word_over(n, 6), word_over(n, 6))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn equality_matches_rewriting_oracle((g, a, b) in graph_and_words()) {
        let raag = Raag::new(g.clone());
        // Make half the pairs equal: b' = a with b·b⁻¹ spliced in.
        let mid = a.len() / 2;
        let mut spliced = a.0[..mid].to_vec();
        spliced.extend(b.concat(&b.inverse()).0);
        spliced.extend_from_slice(&a.0[mid..]);
        let spliced = Word(spliced);
        prop_assert_eq!(raag.equal(&a, &b).unwrap(), bfs_key(&g, &a.0) == bfs_key(&g, &b.0));
        prop_assert!(raag.equal(&a, &spliced).unwrap());
    }

    #[test]
    fn normal_forms_are_stable((g, a, _b) in graph_and_words()) {
        let raag = Raag::new(g);
        let nf = raag.normalize(&a).unwrap();
        prop_assert_eq!(raag.normalize(&nf.to_word()).unwrap(), nf.clone());
        prop_assert!(nf.len() <= a.len());
        prop_assert_eq!(raag.abelianize(&a).unwrap(), raag.abelianize(&nf.to_word()).unwrap());
    }

    #[test]
    fn cyclic_reduction_round_trip((g, a, _b) in graph_and_words()) {
        let raag = Raag::new(g);
        let cr = raag.cyclically_reduce(&a).unwrap();
        let back = cr.core.to_word().conjugate_by(&cr.conjugator);
        prop_assert!(raag.equal(&back, &a).unwrap());
        prop_assert!(raag.is_cyclically_reduced(&cr.core.to_word()).unwrap());
    }

    #[test]
    fn multiplication_is_associative((g, a, b) in graph_and_words()) {
        let raag = Raag::new(g);
        let ab = raag.multiply(&a, &b).unwrap().into_word();
        let ab_a = raag.multiply(&ab, &a).unwrap();
        let ba = raag.multiply(&b, &a).unwrap().into_word();
        prop_assert_eq!(ab_a, raag.multiply(&a, &ba).unwrap());
        prop_assert!(raag.is_identity(&a.concat(&a.inverse())).unwrap());
    }
}

/// Unimodular completion: (a, b) extends to a basis of ℤ² iff some (c, d)
/// has ad − bc = ±1; entries in [−3, 3] need partners in the same range.
#[test]
fn primitive_vectors_match_completion_oracle() {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let completes = (-3i64..=3).any(|c| (-3i64..=3).any(|d| (a * d - b * c).abs() == 1));
            assert_eq!(
                is_primitive_vector(&AbelianVector(vec![a, b])),
                completes,
                "({a}, {b})"
            );
            let partner = AbelianVector(vec![0, 1]);
            assert_eq!(
                is_unimodular_pair(&AbelianVector(vec![a, b]), &partner).unwrap(),
                a.abs() == 1
            );
        }
    }
}

/// Primitivity in F(v0, v2) ≤ A(P3), against a search for a partner that
/// completes a basis (checked by Stallings folding). Short primitives
/// have short partners.
#[test]
fn free_primitivity_matches_partner_search() {
    let raag = Raag::new(named("P3"));
    let sub = Raag::new(Graph::build(3, &[]).unwrap());
    let words: Vec<Word> = short_elements(&sub, 4)
        .into_iter()
        .filter(|x| x.0.iter().all(|l| l.gen != 1))
        .collect();
    let mut primitive = 0;
    for x in &words {
        let claimed = raag.is_primitive_rank2(x, (0, 2)).unwrap();
        let witnessed = words
            .iter()
            .any(|u| generates_free_group(&[x.0.clone(), u.0.clone()], &[0, 2]));
        assert_eq!(claimed, witnessed, "{x}");
        primitive += claimed as usize;
    }
    assert!(primitive > 10);
}

#[test]
fn centralizer_descriptions_on_ears() {
    for tag in ["P3", "P4", "P5", "P6", "C4", "C5", "C6"] {
        let g = named(tag);
        let raag = Raag::new(g);
        let ball = short_elements(&raag, 3);
        for x in ball.iter().filter(|x| !x.is_empty() && x.len() <= 2) {
            // Conjugated inputs exercise the conjugator bookkeeping.
            let y = x.conjugate_by(&w("v1 v0^-1"));
            let CentralizerOutcome::Described(d) = raag.centralizer_ear(&y).unwrap() else {
                panic!("{tag}: {y}")
            };
            for h in d.generators() {
                assert!(raag.commutes(&h, &y).unwrap(), "{tag}: {h} vs {y}");
            }
            for h in &ball {
                let hc = h.conjugate_by(&w("v1 v0^-1"));
                if raag.commutes(&hc, &y).unwrap() {
                    assert!(
                        d.contains(&raag, &hc).unwrap(),
                        "{tag}: {hc} commutes with {y}"
                    );
                }
            }
        }
        assert_eq!(
            raag.centralizer_ear(&Word::identity()).unwrap(),
            CentralizerOutcome::WholeGroup
        );
    }
}

#[test]
fn word_literals_round_trip_through_json() {
    let x = w("v0 v2^-1 v1");
    let s = serde_json::to_string(&x).unwrap();
    assert_eq!(s, "\"v0 v2^-1 v1\"");
    assert_eq!(serde_json::from_str::<Word>(&s).unwrap(), x);
}
