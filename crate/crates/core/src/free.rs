//! Free-group helpers for rank-2 subgroups: Stallings folding and the
//! Christoffel-word test for primitive elements.
//!
//! These operate on letter sequences over generators that are assumed
//! pairwise non-commuting, i.e. inside a free special subgroup.

use std::collections::HashMap;

use crate::error::{RaagError, Result};
use crate::words::{gcd, Letter, Raag, Word};

/// Free reduction.
pub fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free cyclic reduction (strip `x … x⁻¹` pairs from both ends).
pub fn free_cyclic_core(letters: &[Letter]) -> Vec<Letter> {
    let r = free_reduce(letters);
    let (mut i, mut j) = (0, r.len());
    while j - i >= 2 && r[i] == r[j - 1].inv() {
        i += 1;
        j -= 1;
    }
    r[i..j].to_vec()
}

/// Folded core graph of a finitely generated subgroup, based at vertex 0.
#[derive(Debug, Clone)]
pub struct FoldedGraph {
    fwd: HashMap<(usize, usize), usize>,
    bwd: HashMap<(usize, usize), usize>,
}

impl FoldedGraph {
    /// Fold the bouquet of petals spelled by `gens`.
    pub fn new(gens: &[Vec<Letter>]) -> FoldedGraph {
        // Raw labeled edges (from, gen, to), vertex 0 the base.
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut count = 1;
        for g in gens {
            let g = free_reduce(g);
            if g.is_empty() {
                continue;
            }
            let mut cur = 0;
            for (k, l) in g.iter().enumerate() {
                let next = if k + 1 == g.len() {
                    0
                } else {
                    count += 1;
                    count - 1
                };
                if l.inverse {
                    edges.push((next, l.gen, cur));
                } else {
                    edges.push((cur, l.gen, next));
                }
                cur = next;
            }
        }
        let mut parent: Vec<usize> = (0..count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        // Fold until no vertex has two equally labeled edges in one direction.
        loop {
            let mut fwd: HashMap<(usize, usize), usize> = HashMap::new();
            let mut bwd: HashMap<(usize, usize), usize> = HashMap::new();
            let mut merge = None;
            for &(a, g, b) in &edges {
                let (a, b) = (find(&mut parent, a), find(&mut parent, b));
                if let Some(&t) = fwd.get(&(a, g)) {
                    if t != b {
                        merge = Some((t, b));
                        break;
                    }
                }
                if let Some(&s) = bwd.get(&(b, g)) {
                    if s != a {
                        merge = Some((s, a));
                        break;
                    }
                }
                fwd.insert((a, g), b);
                bwd.insert((b, g), a);
            }
            match merge {
                Some((x, y)) => {
                    let (x, y) = (find(&mut parent, x), find(&mut parent, y));
                    // Keep the base as its own representative.
                    let (keep, gone) = if y == find(&mut parent, 0) {
                        (y, x)
                    } else {
                        (x, y)
                    };
                    parent[gone] = keep;
                }
                None => {
                    let base = find(&mut parent, 0);
                    let relabel = |v: usize| {
                        if v == base {
                            0
                        } else if v == 0 {
                            base
                        } else {
                            v
                        }
                    };
                    return FoldedGraph {
                        fwd: fwd
                            .into_iter()
                            .map(|((a, g), b)| ((relabel(a), g), relabel(b)))
                            .collect(),
                        bwd: bwd
                            .into_iter()
                            .map(|((b, g), a)| ((relabel(b), g), relabel(a)))
                            .collect(),
                    };
                }
            }
        }
    }

    /// Membership: the word reads a closed path at the base.
    pub fn accepts(&self, letters: &[Letter]) -> bool {
        let mut v = 0;
        for l in letters {
            let next = if l.inverse {
                self.bwd.get(&(v, l.gen))
            } else {
                self.fwd.get(&(v, l.gen))
            };
            match next {
                Some(&n) => v = n,
                None => return false,
            }
        }
        v == 0
    }
}

/// Do `gens` generate the whole free group on `alphabet`?
pub fn generates_free_group(gens: &[Vec<Letter>], alphabet: &[usize]) -> bool {
    let fg = FoldedGraph::new(gens);
    alphabet
        .iter()
        .all(|&a| fg.accepts(&[Letter::new(a, false)]))
}

/// Lower Christoffel word with `p` copies of `a` and `q` copies of `b`.
fn christoffel(p: usize, q: usize, a: Letter, b: Letter) -> Vec<Letter> {
    let n = p + q;
    (1..=n)
        .map(|i| {
            if (i * q) / n > ((i - 1) * q) / n {
                b
            } else {
                a
            }
        })
        .collect()
}

/// Exact primitivity in the free group on `{a, b}`: the abelian image must
/// be a primitive vector and the cyclic core must be a rotation of the
/// Christoffel word for that vector (primitives with a given image form a
/// single conjugacy class).
pub fn is_primitive_in_pair(letters: &[Letter], a: usize, b: usize) -> bool {
    let core = free_cyclic_core(letters);
    let (mut p, mut q) = (0i64, 0i64);
    for l in &core {
        if l.gen == a {
            p += l.exponent();
        } else if l.gen == b {
            q += l.exponent();
        } else {
            return false;
        }
    }
    if gcd(p, q) != 1 {
        return false;
    }
    let la = Letter::new(a, p < 0);
    let lb = Letter::new(b, q < 0);
    let target = christoffel(p.unsigned_abs() as usize, q.unsigned_abs() as usize, la, lb);
    if target.len() != core.len() {
        return false;
    }
    let doubled: Vec<Letter> = core.iter().chain(core.iter()).copied().collect();
    doubled
        .windows(target.len())
        .any(|w| w == target.as_slice())
}

impl Raag {
    /// Primitivity of `w` in the free special subgroup on the non-adjacent
    /// pair `pair`.
    pub fn is_primitive_rank2(&self, w: &Word, pair: (usize, usize)) -> Result<bool> {
        let (a, b) = pair;
        self.graph().check_vertex(a)?;
        self.graph().check_vertex(b)?;
        if a == b || self.graph().has_edge(a, b) {
            return Err(RaagError::InvalidInput(format!(
                "v{a}, v{b} do not generate a free group of rank 2"
            )));
        }
        let nf = self.normalize(w)?;
        if nf.letters().iter().any(|l| l.gen != a && l.gen != b) {
            return Err(RaagError::InvalidInput(format!(
                "{w} is not a word in v{a}, v{b}"
            )));
        }
        Ok(is_primitive_in_pair(nf.letters(), a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Vec<Letter> {
        s.parse::<Word>().unwrap().0
    }

    #[test]
    fn folding_detects_bases() {
        assert!(generates_free_group(&[l("v0"), l("v1")], &[0, 1]));
        assert!(generates_free_group(&[l("v0 v1"), l("v1")], &[0, 1]));
        assert!(generates_free_group(&[l("v1"), l("v1 v0 v1^-1")], &[0, 1]));
        // ⟨aba⁻¹, bab⁻¹⟩ is a proper subgroup.
        assert!(!generates_free_group(
            &[l("v0 v1 v0^-1"), l("v1 v0 v1^-1")],
            &[0, 1]
        ));
        assert!(!generates_free_group(&[l("v0^2"), l("v1")], &[0, 1]));
    }

    #[test]
    fn folding_membership() {
        let fg = FoldedGraph::new(&[l("v0 v1 v0^-1")]);
        assert!(fg.accepts(&l("v0 v1^3 v0^-1")));
        assert!(!fg.accepts(&l("v1")));
    }

    #[test]
    fn christoffel_primitives() {
        assert!(is_primitive_in_pair(&l("v0 v1"), 0, 1));
        assert!(is_primitive_in_pair(&l("v1 v0 v1^-1"), 0, 1));
        assert!(is_primitive_in_pair(&l("v0 v0 v1"), 0, 1));
        assert!(is_primitive_in_pair(&l("v0^-1 v1 v0^-1"), 0, 1));
        assert!(!is_primitive_in_pair(&l("v0^2 v1^2"), 0, 1));
        // Exponent vector (2,1) but not primitive.
        assert!(!is_primitive_in_pair(&l("v0 v1^2 v0 v1^-1"), 0, 1));
        assert!(!is_primitive_in_pair(&l("v0 v1 v0 v1^-1"), 0, 1));
        assert!(!is_primitive_in_pair(&[], 0, 1));
    }
}
