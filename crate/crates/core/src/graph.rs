//! Simple undirected graphs on at most 32 vertices, one `u32` adjacency row
//! per vertex, and the constructions the verifier needs.

use std::fmt;

use thiserror::Error;

use crate::bits::{low_mask, Bits};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph on {0} vertices exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex set {mask:#x} is not contained in 0..{n}")]
    VertexSetOutOfRange { mask: u32, n: usize },
    #[error("permutation of length {len} does not match {n} vertices or is not a bijection")]
    BadPermutation { len: usize, n: usize },
}

/// Undirected simple graph with bitset adjacency rows.
///
/// Row `v` holds the neighbourhood of `v`; adjacency is symmetric, the
/// diagonal is empty and bits at or above `n` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    /// Graph on `n` vertices with exactly the listed edges (duplicates are
    /// harmless).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows are symmetrised and masked to
    /// `0..n`; the diagonal is cleared.
    pub fn from_rows(rows: &[u32]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::new(n)?;
        let all = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in Bits(row & all & !(1 << u)) {
                g.set_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.set_edge(u, v);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
        Ok(())
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(GraphError::EndpointOutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Adjacency rows `0..n`.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .collect()
    }

    /// The set of all vertices as a mask.
    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        low_mask(self.order())
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing
    /// vertex order.
    pub fn induced(&self, mask: u32) -> Result<Graph, GraphError> {
        if mask & !self.vertex_mask() != 0 {
            return Err(GraphError::VertexSetOutOfRange {
                mask,
                n: self.order(),
            });
        }
        Ok(self.induced_unchecked(mask))
    }

    pub(crate) fn induced_unchecked(&self, mask: u32) -> Graph {
        let verts: Vec<usize> = Bits(mask).collect();
        let mut h = Graph {
            n: verts.len() as u8,
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in verts.iter().enumerate() {
            let row = self.adj[u] & mask;
            let mut out = 0u32;
            for (j, &v) in verts.iter().enumerate() {
                if row >> v & 1 == 1 {
                    out |= 1 << j;
                }
            }
            h.adj[i] = out;
        }
        h
    }

    /// `G - v`, with the remaining vertices relabelled in order.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        debug_assert!(v < self.order());
        self.induced_unchecked(self.vertex_mask() & !(1 << v))
    }

    /// Relabels vertices: new vertex `i` is old vertex `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut seen = 0u32;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(GraphError::BadPermutation { len: perm.len(), n });
            }
            seen |= 1 << p;
        }
        if perm.len() != n {
            return Err(GraphError::BadPermutation { len: perm.len(), n });
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &p) in perm.iter().enumerate() {
            pos[p] = i;
        }
        let mut h = Graph {
            n: self.n,
            adj: [0; MAX_VERTICES],
        };
        for (i, &p) in perm.iter().enumerate().take(n) {
            let mut out = 0u32;
            for w in Bits(self.adj[p]) {
                out |= 1 << pos[w];
            }
            h.adj[i] = out;
        }
        h
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n)?;
    let all = g.vertex_mask();
    for v in 0..n {
        g.adj[v] = all & !(1 << v);
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(n)?;
    for v in 1..n {
        g.set_edge(v - 1, v);
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    let mut g = path(n)?;
    g.set_edge(n - 1, 0);
    Ok(g)
}

/// Disjoint union; vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (a, b) = (g.order(), h.order());
    let mut out = Graph::new(a + b)?;
    out.adj[..a].copy_from_slice(g.rows());
    for (i, &row) in h.rows().iter().enumerate() {
        out.adj[a + i] = row << a;
    }
    Ok(out)
}

/// Join `g + h`: disjoint union plus every edge between the two parts.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (a, b) = (g.order(), h.order());
    let mut out = disjoint_union(g, h)?;
    let left = low_mask(a);
    let right = low_mask(a + b) & !left;
    for v in 0..a {
        out.adj[v] |= right;
    }
    for v in a..a + b {
        out.adj[v] |= left;
    }
    Ok(out)
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertex_mask();
    let mut out = *g;
    for v in 0..g.order() {
        out.adj[v] = !g.adj[v] & all & !(1 << v);
    }
    out
}

/// Mycielskian: vertices `0..n` are the original graph, `n..2n` the shadow
/// copies (shadow `n + i` is adjacent to the neighbours of `i`), and `2n` is
/// the apex adjacent to every shadow.
pub fn mycielski(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    let mut out = Graph::new(2 * n + 1)?;
    for u in 0..n {
        for v in Bits(g.adj[u]) {
            out.set_edge(u, v);
            out.set_edge(n + u, v);
        }
        out.set_edge(n + u, 2 * n);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_triangle_and_cycle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.size(), 3);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.size(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert_eq!(c5, cycle(5).unwrap());
        let e2 = Graph::from_edges(2, &[]).unwrap();
        assert_eq!((e2.order(), e2.size()), (2, 0));
    }

    #[test]
    fn make_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(Graph::new(33), Err(GraphError::TooManyVertices(33)));
        assert_eq!(cycle(2), Err(GraphError::CycleTooShort(2)));
    }

    #[test]
    fn standard_families() {
        let c5 = cycle(5).unwrap();
        assert_eq!(c5.size(), 5);
        let mut k5e = complete(5).unwrap();
        k5e.remove_edge(0, 1).unwrap();
        assert_eq!(k5e.size(), 9);
        assert_eq!(path(4).unwrap().degrees(), vec![1, 2, 2, 1]);
        assert_eq!(complete(32).unwrap().size(), 32 * 31 / 2);
        assert_eq!(empty(0).unwrap().size(), 0);
    }

    #[test]
    fn join_and_union_counts() {
        let c5 = cycle(5).unwrap();
        let j = join(&c5, &c5).unwrap();
        assert_eq!((j.order(), j.size()), (10, 35));
        let k1 = complete(1).unwrap();
        assert_eq!(join(&k1, &k1).unwrap(), complete(2).unwrap());
        let w5 = join(&c5, &k1).unwrap();
        assert_eq!(w5.degree(5), 5);
        assert!(join(&complete(20).unwrap(), &complete(13).unwrap()).is_err());
        let u = disjoint_union(&path(3).unwrap(), &k1).unwrap();
        assert_eq!(u.degrees(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn complement_and_induced() {
        let c5 = cycle(5).unwrap();
        assert_eq!(complement(&complement(&c5)), c5);
        assert_eq!(complement(&c5).size(), 5);
        assert_eq!(c5.induced(c5.vertex_mask()).unwrap(), c5);
        assert_eq!(c5.induced(0b00111).unwrap(), path(3).unwrap());
        assert!(c5.induced(0b100000).is_err());
        assert_eq!(c5.remove_vertex(2).size(), 3);
    }

    #[test]
    fn mycielski_of_c5_has_20_edges() {
        let g = mycielski(&cycle(5).unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (11, 20));
        assert!(mycielski(&empty(16).unwrap()).is_err());
    }

    #[test]
    fn permute_checks_bijection() {
        let p4 = path(4).unwrap();
        let q = p4.permute(&[1, 0, 2, 3]).unwrap();
        assert_eq!(q.degrees(), vec![2, 1, 2, 1]);
        assert!(p4.permute(&[0, 0, 1, 2]).is_err());
        assert!(p4.permute(&[0, 1, 2]).is_err());
    }

    #[test]
    fn from_rows_symmetrises() {
        let g = Graph::from_rows(&[0b010, 0b000, 0b110]).unwrap();
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
        assert!(!g.has_edge(2, 2));
    }
}
