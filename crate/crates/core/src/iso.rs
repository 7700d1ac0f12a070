//! Backtracking isomorphism and canonical labeling for small graphs.
//!
//! Both searches start from a color refinement (iterated degree
//! signatures) so that only vertices with matching colors are tried
//! against each other.

use std::collections::BTreeMap;

use crate::graph::{bit, mask_to_vec, Graph};

/// Stable refined colors. Color ids are assigned by sorting signatures, so
/// isomorphic graphs receive identical color multisets.
fn refine(graphs: &[&Graph]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = graphs.iter().map(|g| g.degrees()).collect();
    let mut classes = count_classes(&colors);
    loop {
        let sigs: Vec<Vec<(usize, Vec<usize>)>> = graphs
            .iter()
            .zip(&colors)
            .map(|(g, c)| {
                g.vertices()
                    .map(|v| {
                        let mut nb: Vec<usize> = mask_to_vec(g.neighbor_mask(v))
                            .into_iter()
                            .map(|w| c[w])
                            .collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut ids: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sigs.iter().flatten() {
            ids.insert(s, 0);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i;
        }
        let next: Vec<Vec<usize>> = sigs
            .iter()
            .map(|gs| gs.iter().map(|s| ids[s]).collect())
            .collect();
        let nc = count_classes(&next);
        colors = next;
        if nc == classes {
            return colors;
        }
        classes = nc;
    }
}

fn count_classes(colors: &[Vec<usize>]) -> usize {
    let mut all: Vec<usize> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

pub(crate) fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let colors = refine(&[a, b]);
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return None;
    }
    // Map rarest colors first, then follow adjacency to keep pruning tight.
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in ca {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (a.neighbor_mask(v) & placed).count_ones(),
                    std::cmp::Reverse(freq[&ca[v]]),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= bit(next);
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(a, b, ca, cb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    k: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    for w in 0..b.vertex_count() {
        if *used & bit(w) != 0 || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..k]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= bit(w);
        if extend(a, b, ca, cb, order, k + 1, map, used) {
            return true;
        }
        *used &= !bit(w);
        map[v] = usize::MAX;
    }
    false
}

/// The relabeling maximizing the adjacency string (pairs in column order)
/// among orderings that list refined color classes in increasing color.
pub(crate) fn canonical_form(g: &Graph) -> Graph {
    let n = g.vertex_count();
    if n == 0 {
        return g.clone();
    }
    let colors = refine(&[g]).pop().expect("one graph");
    let mut slots: Vec<usize> = colors.clone();
    slots.sort_unstable();
    let mut st = Canon {
        g,
        colors: &colors,
        slots: &slots,
        best: None,
        cur_bits: Vec::with_capacity(n * n / 2),
        order: Vec::with_capacity(n),
    };
    st.search(0);
    let (_, best_order) = st.best.expect("at least one ordering");
    let mut perm = vec![0; n];
    for (pos, &v) in best_order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm).expect("valid permutation")
}

struct Canon<'a> {
    g: &'a Graph,
    colors: &'a [usize],
    slots: &'a [usize],
    best: Option<(Vec<bool>, Vec<usize>)>,
    cur_bits: Vec<bool>,
    order: Vec<usize>,
}

impl Canon<'_> {
    fn search(&mut self, pos: usize) {
        let n = self.g.vertex_count();
        if pos == n {
            self.best = Some((self.cur_bits.clone(), self.order.clone()));
            return;
        }
        let placed = self.order.iter().fold(0u64, |m, &v| m | bit(v));
        for v in 0..n {
            if placed & bit(v) != 0 || self.colors[v] != self.slots[pos] {
                continue;
            }
            let start = self.cur_bits.len();
            for i in 0..pos {
                let e = self.g.has_edge(self.order[i], v);
                self.cur_bits.push(e);
            }
            // The best string may have changed in an earlier sibling, so
            // compare the whole prefix every time.
            let behind = match &self.best {
                Some((best, _)) => self.cur_bits[..] < best[..self.cur_bits.len()],
                None => false,
            };
            if !behind {
                self.order.push(v);
                self.search(pos + 1);
                self.order.pop();
            }
            self.cur_bits.truncate(start);
        }
    }
}
