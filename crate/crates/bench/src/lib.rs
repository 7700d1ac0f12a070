//! Inputs shared by the benchmarks in `benches/`.

use raag_core::{Graph, NamedGraph, Word};

pub fn named(tag: &str) -> Graph {
    Graph::named(tag.parse::<NamedGraph>().expect("tag")).expect("graph")
}

/// A word of length `len` cycling through the generators of an `n`-vertex
/// graph with alternating signs, so both cancellations and commutations occur.
pub fn churn_word(n: usize, len: usize) -> Word {
    let text: Vec<String> = (0..len)
        .map(|i| {
            let v = (i * 7 + i / 3) % n;
            if i % 3 == 1 {
                format!("v{v}^-1")
            } else {
                format!("v{v}")
            }
        })
        .collect();
    text.join(" ").parse().expect("word")
}
