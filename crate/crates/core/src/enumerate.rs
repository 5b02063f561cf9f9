//! Isomorph-free generation of all graphs on `n` vertices by canonical
//! augmentation.
//!
//! Every graph is generated from canonical parents on one vertex fewer by
//! adding a vertex with every possible neighbourhood. A child `G` is kept
//! only when
//!
//! * the new vertex has maximum degree in `G`, and
//! * deleting the canonical deletion vertex of `G` (the maximum-degree
//!   vertex with the largest canonical position) leaves a graph isomorphic
//!   to the generating parent.
//!
//! The canonical deletion vertex makes the parent class of each child class
//! unique, so each isomorphism class is produced by exactly one parent;
//! duplicates from one parent are removed locally.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, canonical_labeling};
use crate::detect::is_free;
use crate::graph::Graph;
use crate::pattern::Pattern;

/// Largest `n` the internal generator accepts.
pub const MAX_GENERATED_ORDER: usize = 10;

const CHUNK: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("graph generation supports 1 <= n <= {MAX_GENERATED_ORDER}, got {0}")]
    OrderOutOfRange(usize),
}

/// Canonical children of canonical `parent` that `parent` is responsible
/// for, in order of first discovery over neighbourhood masks.
pub fn children(parent: &Graph) -> Vec<Graph> {
    let m = parent.order();
    let n = m + 1;
    let pdeg: Vec<u32> = parent.rows().iter().map(|r| r.count_ones()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let new_deg = mask.count_ones();
        let max_old = (0..m).map(|v| pdeg[v] + (mask >> v & 1)).max().unwrap_or(0);
        if new_deg < max_old {
            continue;
        }
        let mut rows = [0u32; 32];
        rows[..m].copy_from_slice(parent.rows());
        rows[m] = mask;
        let child = Graph::from_rows(&rows[..n]).expect("n <= 32");
        let canon = canonical_labeling(&child);
        let deletion = *canon
            .labeling
            .iter()
            .rev()
            .find(|&&v| child.degree(v) as u32 == new_deg)
            .expect("the new vertex has maximum degree");
        if deletion != m && canonical_form(&child.remove_vertex(deletion)) != *parent {
            continue;
        }
        if seen.insert(canon.graph) {
            out.push(canon.graph);
        }
    }
    out
}

/// All canonical graphs on exactly `n` vertices, materialised.
pub fn graphs_of_order(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(all_graphs(n)?.collect())
}

fn level(n: usize) -> Vec<Graph> {
    let mut current = vec![Graph::new(0).expect("empty graph")];
    for _ in 0..n {
        current = current.par_iter().flat_map_iter(children).collect();
    }
    current
}

/// Stream of one canonical representative per isomorphism class on `n`
/// vertices, in a fixed order independent of the thread count.
///
/// The parents (graphs on `n - 1` vertices) are held in memory; the final
/// level is expanded chunk by chunk.
pub struct GraphStream {
    n: usize,
    parents: Vec<Graph>,
    next_parent: usize,
    buffer: VecDeque<Graph>,
}

pub fn all_graphs(n: usize) -> Result<GraphStream, EnumerateError> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(EnumerateError::OrderOutOfRange(n));
    }
    Ok(GraphStream {
        n,
        parents: level(n - 1),
        next_parent: 0,
        buffer: VecDeque::new(),
    })
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.n
    }

    /// The next batch of graphs, expanded in parallel.
    pub fn next_chunk(&mut self) -> Option<Vec<Graph>> {
        if !self.buffer.is_empty() {
            return Some(self.buffer.drain(..).collect());
        }
        if self.next_parent >= self.parents.len() {
            return None;
        }
        let end = (self.next_parent + CHUNK).min(self.parents.len());
        let batch = &self.parents[self.next_parent..end];
        self.next_parent = end;
        Some(batch.par_iter().flat_map_iter(children).collect())
    }
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some(g) = self.buffer.pop_front() {
                return Some(g);
            }
            let chunk = self.next_chunk()?;
            self.buffer.extend(chunk);
        }
    }
}

/// Where a verifier pass takes its graphs from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Every isomorphism class on `1..=max_n` vertices.
    Generated { max_n: usize },
    /// An explicit list, e.g. read from a graph6 file.
    Graphs(Vec<Graph>),
}

impl GraphSource {
    /// Generated graphs are already in canonical form.
    pub fn is_canonical(&self) -> bool {
        matches!(self, GraphSource::Generated { .. })
    }

    /// Feeds the graphs to `f` in batches, in a deterministic order.
    pub fn for_each_chunk<F>(&self, mut f: F) -> Result<(), EnumerateError>
    where
        F: FnMut(&[Graph]),
    {
        match self {
            GraphSource::Generated { max_n } => {
                if *max_n > MAX_GENERATED_ORDER {
                    return Err(EnumerateError::OrderOutOfRange(*max_n));
                }
                for n in 1..=*max_n {
                    let mut stream = all_graphs(n)?;
                    while let Some(chunk) = stream.next_chunk() {
                        f(&chunk);
                    }
                }
            }
            GraphSource::Graphs(graphs) => {
                for chunk in graphs.chunks(CHUNK * 8) {
                    f(chunk);
                }
            }
        }
        Ok(())
    }
}

/// Graphs from `stream` that contain none of `patterns` induced.
pub fn filter_free<'a, I>(stream: I, patterns: &'a [Pattern]) -> impl Iterator<Item = Graph> + 'a
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: 'a,
{
    stream.into_iter().filter(move |g| is_free(g, patterns))
}

/// Parallel, order-preserving variant of [`filter_free`].
pub fn filter_free_par(graphs: &[Graph], patterns: &[Pattern]) -> Vec<Graph> {
    graphs
        .par_iter()
        .filter(|g| is_free(g, patterns))
        .copied()
        .collect()
}
