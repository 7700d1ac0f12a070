#![allow(dead_code)]

use std::collections::HashSet;

use raag_core::{Ear, EarDecomposition, Graph, Kind, Letter, NamedGraph, Raag, Word};
use rand::Rng;

pub fn named(tag: &str) -> Graph {
    Graph::named(tag.parse::<NamedGraph>().unwrap()).unwrap()
}

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn gallery() -> Vec<(&'static str, Graph)> {
    ["K5", "K3,3", "K4", "K2,3", "petersen", "W4", "W5", "W6"]
        .into_iter()
        .map(|t| (t, named(t)))
        .collect()
}

/// Word-problem oracle independent of the normal form: close the word
/// under free cancellations of adjacent inverse letters and swaps of
/// adjacent commuting letters, and return the least shortest word
/// reached. All reduced spellings of an element are related by swaps and
/// every spelling reaches one, so this is a complete invariant.
pub fn bfs_key(g: &Graph, word: &[Letter]) -> Vec<Letter> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut stack = vec![word.to_vec()];
    seen.insert(word.to_vec());
    let mut best = word.to_vec();
    while let Some(cur) = stack.pop() {
        if cur.len() < best.len() || (cur.len() == best.len() && cur < best) {
            best = cur.clone();
        }
        for i in 0..cur.len().saturating_sub(1) {
            let (a, b) = (cur[i], cur[i + 1]);
            let next = if a.gen == b.gen && a.inverse != b.inverse {
                let mut n = cur.clone();
                n.drain(i..i + 2);
                n
            } else if a.gen != b.gen && g.has_edge(a.gen, b.gen) {
                let mut n = cur.clone();
                n.swap(i, i + 1);
                n
            } else {
                continue;
            };
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    best
}

pub fn letters(n: usize) -> Vec<Letter> {
    (0..n)
        .flat_map(|v| [Letter::new(v, false), Letter::new(v, true)])
        .collect()
}

/// Every word of length exactly `len` over the generators of an
/// `n`-vertex graph.
pub fn all_words(n: usize, len: usize) -> Vec<Word> {
    let ls = letters(n);
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                ls.iter().map(move |&l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
    }
    out.into_iter().map(Word).collect()
}

pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word(
        (0..len)
            .map(|_| Letter::new(rng.gen_range(0..n), rng.gen_bool(0.5)))
            .collect(),
    )
}

/// Distinct normal forms of length at most `radius`.
pub fn short_elements(raag: &Raag, radius: usize) -> Vec<Word> {
    let gens: Vec<Word> = (0..raag.rank()).map(Word::gen).collect();
    let mut v: Vec<Word> = raag
        .ball(&gens, radius)
        .unwrap()
        .into_keys()
        .map(|nf| nf.into_word())
        .collect();
    v.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
    v
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

/// A random loose ear decomposition on at most `max_vertices` vertices,
/// together with the graph it decomposes. Later ears attach at zero, one
/// or two existing vertices.
pub fn random_loose_decomposition(
    rng: &mut impl Rng,
    max_vertices: usize,
) -> (Graph, EarDecomposition) {
    let mut next = 0usize;
    let fresh = |k: usize, next: &mut usize| -> Vec<usize> {
        let v: Vec<usize> = (*next..*next + k).collect();
        *next += k;
        v
    };
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut ears = Vec::new();
    let push = |ear: Ear, edges: &mut HashSet<(usize, usize)>, ears: &mut Vec<Ear>| {
        edges.extend(ear.edges());
        ears.push(ear);
    };
    // First ear.
    if max_vertices >= 3 && rng.gen_bool(0.5) {
        let k = rng.gen_range(3..=max_vertices.min(5));
        let vs = fresh(k, &mut next);
        push(Ear::cycle(vs), &mut edges, &mut ears);
    } else {
        let k = rng.gen_range(2..=max_vertices.min(4));
        let vs = fresh(k, &mut next);
        push(Ear::path(vs), &mut edges, &mut ears);
    }
    for _ in 0..rng.gen_range(0..5) {
        let room = max_vertices - next;
        if rng.gen_bool(0.25) && room >= 2 {
            let start = if room >= 3 && rng.gen_bool(0.3) {
                fresh(1, &mut next)[0]
            } else {
                rng.gen_range(0..next)
            };
            let inner = rng.gen_range(2..=(max_vertices - next).min(3));
            let mut vs = vec![start];
            vs.extend(fresh(inner, &mut next));
            push(Ear::cycle(vs), &mut edges, &mut ears);
            continue;
        }
        let a_fresh = room >= 1 && rng.gen_bool(0.3);
        let b_fresh = room >= 1 + a_fresh as usize && rng.gen_bool(0.3);
        if !a_fresh && !b_fresh && next < 2 {
            continue;
        }
        let spare = room - a_fresh as usize - b_fresh as usize;
        let inner = rng.gen_range(0..=spare.min(2));
        let (a, b) = match (a_fresh, b_fresh) {
            (false, false) => {
                let a = rng.gen_range(0..next);
                let b = (a + rng.gen_range(1..next)) % next;
                if inner == 0 && edges.contains(&(a.min(b), a.max(b))) {
                    continue;
                }
                (a, b)
            }
            (true, false) => (rng.gen_range(0..next), fresh(1, &mut next)[0]),
            (false, true) => (rng.gen_range(0..next), fresh(1, &mut next)[0]),
            (true, true) => {
                let v = fresh(2, &mut next);
                (v[0], v[1])
            }
        };
        let mut vs = vec![a];
        vs.extend(fresh(inner, &mut next));
        vs.push(b);
        push(Ear::path(vs), &mut edges, &mut ears);
    }
    let edge_list: Vec<(usize, usize)> = edges.into_iter().collect();
    let g = Graph::build(next, &edge_list).unwrap();
    (
        g,
        EarDecomposition {
            kind: Kind::Loose,
            ears,
        },
    )
}
