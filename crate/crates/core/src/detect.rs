//! Induced-subgraph detection for small patterns.

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::graph::Graph;
use crate::pattern::Pattern;

/// Injective map from pattern vertices to host vertices that preserves both
/// adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        for a in 0..k {
            for b in a + 1..k {
                let (x, y) = (self.map[a], self.map[b]);
                if x == y || pattern.has_edge(a, b) != host.has_edge(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Host vertices covered by the embedding.
    pub fn image(&self) -> u32 {
        self.map.iter().fold(0, |m, &v| m | 1 << v)
    }
}

/// Finds the induced embedding of `pattern` into `host` whose image tuple
/// `(map[0], map[1], ...)` is lexicographically least, if any exists.
///
/// Pattern vertices are placed in index order; the candidates for the next
/// vertex are the unused host vertices adjacent to the images of its earlier
/// pattern neighbours and non-adjacent to the images of its earlier pattern
/// non-neighbours, filtered by degree and co-degree.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(Embedding { map: Vec::new() });
    }
    let all = host.vertex_mask();
    let mut fits = [0u32; 32];
    for (i, f) in fits.iter_mut().enumerate().take(k) {
        let pd = pattern.degree(i);
        let pnd = k - 1 - pd;
        *f = (0..n)
            .filter(|&v| {
                let d = host.degree(v);
                d >= pd && n - 1 - d >= pnd
            })
            .fold(0, |m, v| m | 1 << v);
    }
    let mut map = vec![0usize; k];
    if place(host, pattern, all, &fits, &mut map, 0, 0) {
        Some(Embedding { map })
    } else {
        None
    }
}

fn place(
    host: &Graph,
    pattern: &Graph,
    all: u32,
    fits: &[u32; 32],
    map: &mut [usize],
    i: usize,
    used: u32,
) -> bool {
    if i == map.len() {
        return true;
    }
    let mut cand = all & !used & fits[i];
    let prow = pattern.neighbors(i);
    for (j, &m) in map[..i].iter().enumerate() {
        if prow >> j & 1 == 1 {
            cand &= host.neighbors(m);
        } else {
            cand &= !host.neighbors(m);
        }
    }
    for v in Bits(cand) {
        map[i] = v;
        if place(host, pattern, all, fits, map, i + 1, used | 1 << v) {
            return true;
        }
    }
    false
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

pub fn find_pattern(host: &Graph, pattern: Pattern) -> Option<Embedding> {
    find_induced(host, &pattern.graph())
}

/// True when `host` contains none of `patterns` as an induced subgraph.
pub fn is_free(host: &Graph, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|&p| find_pattern(host, p).is_none())
}
