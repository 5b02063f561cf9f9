//! Exact clique number, chromatic number, vertex-criticality and coloring
//! enumeration.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, Bits};
use crate::graph::{Graph, MAX_VERTICES};

/// A proper vertex coloring with colors numbered in first-use order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<u8>,
    k: usize,
}

impl Coloring {
    /// Relabels arbitrary color indices into first-use order.
    pub fn from_colors(raw: &[u8]) -> Self {
        let mut relabel = [u8::MAX; 256];
        let mut next = 0u8;
        let colors = raw
            .iter()
            .map(|&c| {
                if relabel[c as usize] == u8::MAX {
                    relabel[c as usize] = next;
                    next += 1;
                }
                relabel[c as usize]
            })
            .collect();
        Coloring {
            colors,
            k: next as usize,
        }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        self.k
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Color `i + 1` first appears after color `i` when scanning vertices in
    /// order.
    pub fn is_canonical(&self) -> bool {
        let mut next = 0u8;
        for &c in &self.colors {
            if c > next {
                return false;
            }
            if c == next {
                next += 1;
            }
        }
        next as usize == self.k
    }
}

/// Size of a largest clique (0 for the graph with no vertices).
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).count_ones() as usize
}

/// A maximum clique as a vertex mask, by Bron–Kerbosch with pivoting and a
/// size bound.
pub fn max_clique(g: &Graph) -> u32 {
    let mut best = 0u32;
    bron_kerbosch(g, 0, g.vertex_mask(), 0, &mut best);
    best
}

fn bron_kerbosch(g: &Graph, r: u32, mut p: u32, mut x: u32, best: &mut u32) {
    if p == 0 {
        if x == 0 && r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = Bits(p | x)
        .max_by_key(|&u| ((g.neighbors(u) & p).count_ones(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in Bits(p & !g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r | 1 << v, p & nv, x & nv, best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// DSATUR greedy coloring; an upper bound on the chromatic number.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.order();
    let mut colors = [u8::MAX; MAX_VERTICES];
    let mut seen = [0u32; MAX_VERTICES];
    let mut uncolored = g.vertex_mask();
    while uncolored != 0 {
        let v = pick_dsatur(g, uncolored, &seen);
        let c = (!seen[v]).trailing_zeros() as u8;
        colors[v] = c;
        uncolored &= !(1 << v);
        for w in Bits(g.neighbors(v) & uncolored) {
            seen[w] |= 1 << c;
        }
    }
    Coloring::from_colors(&colors[..n])
}

/// Max saturation, then max degree, then lowest index.
fn pick_dsatur(g: &Graph, uncolored: u32, seen: &[u32; MAX_VERTICES]) -> usize {
    let mut best = usize::MAX;
    let mut key = (0u32, 0u32);
    for v in Bits(uncolored) {
        let k = (seen[v].count_ones(), g.neighbors(v).count_ones());
        if best == usize::MAX || k > key {
            best = v;
            key = k;
        }
    }
    best
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    let n = g.order();
    if n == 0 {
        return Some(Coloring::from_colors(&[]));
    }
    if k == 0 {
        return None;
    }
    let k = k.min(n);
    let mut colors = [u8::MAX; MAX_VERTICES];
    let seen = [0u32; MAX_VERTICES];
    if dsatur_search(g, k, g.vertex_mask(), &seen, 0, &mut colors) {
        Some(Coloring::from_colors(&colors[..n]))
    } else {
        None
    }
}

pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    k_coloring(g, k).is_some()
}

fn dsatur_search(
    g: &Graph,
    k: usize,
    uncolored: u32,
    seen: &[u32; MAX_VERTICES],
    used: usize,
    colors: &mut [u8; MAX_VERTICES],
) -> bool {
    if uncolored == 0 {
        return true;
    }
    let v = pick_dsatur(g, uncolored, seen);
    let allowed = low_mask(k.min(used + 1)) & !seen[v];
    let rest = uncolored & !(1 << v);
    for c in Bits(allowed) {
        colors[v] = c as u8;
        let mut next = *seen;
        for w in Bits(g.neighbors(v) & rest) {
            next[w] |= 1 << c;
        }
        if dsatur_search(g, k, rest, &next, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = u8::MAX;
    false
}

/// Chromatic number with an optimal coloring.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let greedy = greedy_coloring(g);
    let lower = clique_number(g);
    for k in lower..greedy.num_colors() {
        if let Some(c) = k_coloring(g, k) {
            return c;
        }
    }
    greedy
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).num_colors()
}

/// Every vertex deletion lowers the chromatic number.
pub fn is_vertex_critical(g: &Graph) -> bool {
    let chi = chromatic_number(g);
    chi > 0 && (0..g.order()).all(|v| is_k_colorable(&g.remove_vertex(v), chi - 1))
}

/// Visits every proper coloring with at most `k` colors exactly once up to
/// color permutation, as first-use-ordered color vectors in lexicographic
/// order.
pub fn for_each_coloring<F>(g: &Graph, k: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    let n = g.order();
    let mut colors = [0u8; MAX_VERTICES];
    if n == 0 {
        return visit(&[]);
    }
    if k == 0 {
        return ControlFlow::Continue(());
    }
    colorings_from(g, k, 0, 0, &mut colors, &mut visit)
}

fn colorings_from<F>(
    g: &Graph,
    k: usize,
    i: usize,
    used: usize,
    colors: &mut [u8; MAX_VERTICES],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    let n = g.order();
    if i == n {
        return visit(&colors[..n]);
    }
    let mut forbidden = 0u32;
    for j in Bits(g.neighbors(i) & low_mask(i)) {
        forbidden |= 1 << colors[j];
    }
    for c in Bits(low_mask(k.min(used + 1)) & !forbidden) {
        colors[i] = c as u8;
        colorings_from(g, k, i + 1, used.max(c + 1), colors, visit)?;
    }
    ControlFlow::Continue(())
}

pub fn enumerate_colorings(g: &Graph, k: usize) -> Vec<Coloring> {
    let mut out = Vec::new();
    let _ = for_each_coloring(g, k, |c| {
        out.push(Coloring::from_colors(c));
        ControlFlow::Continue(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, empty, join, mycielski, path};
    use crate::pattern::Pattern;

    fn c5_join(m: usize) -> Graph {
        let c5 = cycle(5).unwrap();
        (1..m).fold(c5, |acc, _| join(&acc, &c5).unwrap())
    }

    #[test]
    fn clique_numbers() {
        assert_eq!(clique_number(&cycle(5).unwrap()), 2);
        for m in 1..=3 {
            assert_eq!(clique_number(&c5_join(m)), 2 * m);
        }
        assert_eq!(clique_number(&mycielski(&cycle(5).unwrap()).unwrap()), 2);
        assert_eq!(clique_number(&empty(0).unwrap()), 0);
        assert_eq!(clique_number(&empty(4).unwrap()), 1);
    }

    #[test]
    fn k_colorability() {
        let c5 = cycle(5).unwrap();
        assert!(!is_k_colorable(&c5, 2));
        let c = k_coloring(&c5, 3).unwrap();
        assert!(c.is_proper(&c5) && c.is_canonical());
        assert!(!is_k_colorable(&mycielski(&c5).unwrap(), 3));
        assert!(is_k_colorable(&empty(5).unwrap(), 1));
        assert!(!is_k_colorable(&empty(1).unwrap(), 0));
    }

    #[test]
    fn chromatic_numbers() {
        for m in 1..=3 {
            assert_eq!(chromatic_number(&c5_join(m)), 3 * m);
        }
        assert_eq!(chromatic_number(&mycielski(&cycle(5).unwrap()).unwrap()), 4);
        assert_eq!(chromatic_number(&Pattern::K5minusE.graph()), 4);
        let w5 = join(&cycle(5).unwrap(), &complete(1).unwrap()).unwrap();
        assert_eq!(chromatic_number(&w5), 4);
        assert_eq!(chromatic_number(&empty(0).unwrap()), 0);
    }

    #[test]
    fn criticality() {
        assert!(is_vertex_critical(&cycle(5).unwrap()));
        assert!(is_vertex_critical(&complete(4).unwrap()));
        assert!(is_vertex_critical(&complete(1).unwrap()));
        assert!(!is_vertex_critical(&path(4).unwrap()));
        assert!(!is_vertex_critical(&cycle(6).unwrap()));
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(enumerate_colorings(&path(4).unwrap(), 2).len(), 1);
        assert_eq!(enumerate_colorings(&complete(3).unwrap(), 3).len(), 1);
        assert_eq!(enumerate_colorings(&cycle(5).unwrap(), 3).len(), 5);
        assert_eq!(enumerate_colorings(&cycle(5).unwrap(), 2).len(), 0);
        // at most 2 colors on 2 isolated vertices: {00, 01}
        assert_eq!(enumerate_colorings(&empty(2).unwrap(), 2).len(), 2);
    }

    #[test]
    fn from_colors_relabels() {
        let c = Coloring::from_colors(&[4, 2, 4, 7]);
        assert_eq!(c.colors(), &[0, 1, 0, 2]);
        assert_eq!(c.num_colors(), 3);
        assert!(c.is_canonical());
    }
}
