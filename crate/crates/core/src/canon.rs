//! Canonical labelling by partition refinement and an individualisation
//! search tree with automorphism pruning.
//!
//! The refined partition depends only on the graph structure and the
//! sequence of individualised vertices, so the smallest leaf code over the
//! search tree is a relabelling-invariant. Siblings that lie in one orbit of
//! the automorphisms found so far (restricted to those fixing the current
//! prefix pointwise) produce the same set of leaf codes and are skipped.

use crate::bits::Bits;
use crate::graph::{Graph, MAX_VERTICES};
use crate::graph6::to_graph6;

type Code = [u32; MAX_VERTICES];
type Perm = [u8; MAX_VERTICES];

/// A canonical labelling of a graph.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// `labeling[i]` is the original vertex placed at canonical position `i`.
    pub labeling: Vec<usize>,
    /// The graph relabelled by `labeling`.
    pub graph: Graph,
}

pub fn canonical_labeling(g: &Graph) -> Canonical {
    let n = g.order();
    if n == 0 {
        return Canonical {
            labeling: Vec::new(),
            graph: *g,
        };
    }
    let mut search = Search {
        g,
        n,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    let all = g.vertex_mask();
    let mut cells = vec![all];
    refine(g, &mut cells, vec![all]);
    search.descend(cells, 0);
    let (code, perm) = search.best.expect("search visits at least one leaf");
    let mut graph = Graph::new(n).expect("same order as input");
    for (i, &row) in code[..n].iter().enumerate() {
        for j in Bits(row) {
            graph.set_edge(i, j);
        }
    }
    Canonical {
        labeling: perm[..n].iter().map(|&v| v as usize).collect(),
        graph,
    }
}

/// The canonically relabelled graph; equal for isomorphic inputs.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

/// graph6 string of the canonical form.
pub fn canonical_label(g: &Graph) -> String {
    to_graph6(&canonical_form(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && {
            let mut a = g.degrees();
            let mut b = h.degrees();
            a.sort_unstable();
            b.sort_unstable();
            a == b
        }
        && canonical_form(g) == canonical_form(h)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<(Code, Perm)>,
    first: Option<(Code, Perm)>,
    autos: Vec<Perm>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u32>, fixed: u32) {
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let target = cells[t];
        let mut explored = 0u32;
        for v in Bits(target) {
            if explored != 0 && self.orbit_closure(explored, fixed) >> v & 1 == 1 {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child, vec![1 << v]);
            self.descend(child, fixed | 1 << v);
        }
    }

    /// Closure of `set` under the stored automorphisms that fix `fixed`
    /// pointwise.
    fn orbit_closure(&self, set: u32, fixed: u32) -> u32 {
        let gens: Vec<&Perm> = self
            .autos
            .iter()
            .filter(|p| Bits(fixed).all(|v| p[v] as usize == v))
            .collect();
        let mut closure = set;
        loop {
            let mut next = closure;
            for p in &gens {
                for v in Bits(closure) {
                    next |= 1 << p[v];
                }
            }
            if next == closure {
                return closure;
            }
            closure = next;
        }
    }

    fn leaf(&mut self, cells: &[u32]) {
        let n = self.n;
        let mut perm: Perm = [0; MAX_VERTICES];
        let mut pos = [0u8; MAX_VERTICES];
        for (i, c) in cells.iter().enumerate() {
            let v = c.trailing_zeros() as u8;
            perm[i] = v;
            pos[v as usize] = i as u8;
        }
        let mut code: Code = [0; MAX_VERTICES];
        for i in 0..n {
            let mut row = 0u32;
            for w in Bits(self.g.neighbors(perm[i] as usize)) {
                row |= 1 << pos[w];
            }
            code[i] = row;
        }
        match &self.first {
            None => {
                self.first = Some((code, perm));
                self.best = Some((code, perm));
                return;
            }
            Some((fcode, fperm)) if fcode[..n] == code[..n] => {
                let auto = compose(fperm, &perm, n);
                self.autos.push(auto);
                return;
            }
            _ => {}
        }
        let (bcode, bperm) = self.best.as_ref().expect("set with first");
        match code[..n].cmp(&bcode[..n]) {
            std::cmp::Ordering::Less => self.best = Some((code, perm)),
            std::cmp::Ordering::Equal => {
                let auto = compose(bperm, &perm, n);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Greater => {}
        }
    }
}

/// Automorphism sending the vertex at each position of `from` to the vertex
/// at the same position of `to`.
fn compose(from: &Perm, to: &Perm, n: usize) -> Perm {
    let mut out: Perm = std::array::from_fn(|i| i as u8);
    for i in 0..n {
        out[from[i] as usize] = to[i];
    }
    out
}

/// Refines `cells` to the coarsest equitable partition finer than it,
/// starting from the splitters in `queue`. Cells split in place, with the
/// fragments ordered by neighbour count into the splitter.
fn refine(g: &Graph, cells: &mut Vec<u32>, mut queue: Vec<u32>) {
    let mut head = 0;
    let mut buckets = [0u32; MAX_VERTICES + 1];
    while head < queue.len() {
        let w = queue[head];
        head += 1;
        let mut i = 0;
        while i < cells.len() {
            let x = cells[i];
            if x & x.wrapping_sub(1) == 0 {
                i += 1;
                continue;
            }
            let (mut lo, mut hi) = (usize::MAX, 0);
            for v in Bits(x) {
                let c = (g.neighbors(v) & w).count_ones() as usize;
                buckets[c] |= 1 << v;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                buckets[lo] = 0;
                i += 1;
                continue;
            }
            let mut parts = Vec::with_capacity(hi - lo + 1);
            for b in &mut buckets[lo..=hi] {
                if *b != 0 {
                    parts.push(*b);
                    *b = 0;
                }
            }
            let k = parts.len();
            queue.extend_from_slice(&parts);
            cells.splice(i..=i, parts);
            i += k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, complete, cycle, disjoint_union, empty, join, mycielski, path};
    use crate::pattern::Pattern;

    fn relabel(g: &Graph, seed: u64) -> Graph {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        g.permute(&perm).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let c5 = cycle(5).unwrap();
        let graphs = [
            c5,
            mycielski(&c5).unwrap(),
            join(&c5, &c5).unwrap(),
            join(&join(&c5, &c5).unwrap(), &c5).unwrap(),
            empty(12).unwrap(),
            complete(12).unwrap(),
            Pattern::Hvn.graph(),
        ];
        for g in graphs {
            let cf = canonical_form(&g);
            for seed in 0..20 {
                assert_eq!(canonical_form(&relabel(&g, seed)), cf);
            }
        }
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = mycielski(&cycle(5).unwrap()).unwrap();
        let c = canonical_labeling(&g);
        assert_eq!(g.permute(&c.labeling).unwrap(), c.graph);
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = cycle(5).unwrap();
        assert!(is_isomorphic(&complement(&c5), &c5));
        let k13_k1 = disjoint_union(&Pattern::K1_3.graph(), &complete(1).unwrap()).unwrap();
        assert!(!is_isomorphic(&Pattern::Chair.graph(), &k13_k1));
        assert!(!is_isomorphic(&path(4).unwrap(), &Pattern::K1_3.graph()));
        assert!(is_isomorphic(
            &mycielski(&complete(2).unwrap()).unwrap(),
            &c5
        ));
    }

    #[test]
    fn regular_graphs_with_equal_refinement_are_separated() {
        // C6 and 2C3 are both 2-regular on six vertices
        let c6 = cycle(6).unwrap();
        let two_triangles = disjoint_union(&complete(3).unwrap(), &complete(3).unwrap()).unwrap();
        assert!(!is_isomorphic(&c6, &two_triangles));
        // Petersen graph vs. the prism over C5 (both 3-regular on ten vertices)
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let prism = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        assert!(!is_isomorphic(&petersen, &prism));
        assert!(is_isomorphic(&petersen, &relabel(&petersen, 7)));
    }
}
