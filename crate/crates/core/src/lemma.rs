//! Checker for the extremal-coloring lemma on vertex-critical Chair-free
//! graphs.
//!
//! For a vertex `u` and a `(chi - 1)`-coloring `C` of `G - u`, the colors on
//! `N(u)` split into *unique* colors (exactly one vertex of `N(u)` has them,
//! these vertices form `R`) and *repeat* colors. A choice `(u, C)` is
//! extremal when `|R|` is maximum and, among those, the ascending vector of
//! repeat-color counts `(N_1, N_2, ...)` is lexicographically minimum. For
//! every extremal choice the lemma asserts:
//!
//! * **A**: every `x` in `R` has a neighbour inside `N(u)` of every repeat
//!   color;
//! * **B**: every vertex of `N(u) - R` colored `α_i` has a neighbour inside
//!   `N(u)` colored `α_k` for every `k > i`.
//!
//! Repeat colors are indexed by ascending count, ties broken by the smaller
//! color index ([`LemmaOrder::Sorted`]). [`LemmaOrder::All`] additionally
//! requires clause B under every reordering of tied colors.

use std::cmp::{Ordering, Reverse};
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bits::Bits;
use crate::canon::canonical_label;
use crate::detect::is_free;
use crate::enumerate::{EnumerateError, GraphSource};
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::solve::{chromatic_number, for_each_coloring, is_vertex_critical};

/// Largest order accepted by [`critical_chair_free_stream`].
pub const MAX_LEMMA_ORDER: usize = 9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaOrder {
    #[default]
    Sorted,
    All,
}

impl FromStr for LemmaOrder {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sorted" => Ok(LemmaOrder::Sorted),
            "all" => Ok(LemmaOrder::All),
            other => Err(format!(
                "unknown lemma order `{other}` (expected sorted or all)"
            )),
        }
    }
}

impl fmt::Display for LemmaOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaOrder::Sorted => "sorted",
            LemmaOrder::All => "all",
        })
    }
}

#[derive(Debug, Error)]
pub enum LemmaError {
    #[error("graph is not vertex-critical")]
    NotCritical,
    #[error("graph contains an induced Chair")]
    NotChairFree,
    #[error("lemma stream supports n_max <= {MAX_LEMMA_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
}

/// Selection score: larger `unique` is better, then smaller `counts`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Score {
    pub unique: usize,
    pub counts: Vec<usize>,
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.unique, Reverse(&self.counts)).cmp(&(other.unique, Reverse(&other.counts)))
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One extremal `(u, C)` choice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaContext {
    pub u: usize,
    /// Color of each vertex of `G`; `None` at `u`.
    pub coloring: Vec<Option<u8>>,
    /// `R`: neighbours of `u` whose color is unique within `N(u)`, ascending.
    pub unique: Vec<usize>,
    /// Repeat colors `α_1, α_2, ...` in selection order.
    pub repeat_colors: Vec<u8>,
    /// `N_i`: occurrences of `α_i` in `N(u)`; ascending.
    pub counts: Vec<usize>,
}

impl LemmaContext {
    /// Builds the context for `u` from a coloring of `G - u` (indexed by the
    /// vertices of `G - u`).
    pub fn new(g: &Graph, u: usize, colors_without_u: &[u8]) -> Self {
        let n = g.order();
        let coloring: Vec<Option<u8>> = (0..n)
            .map(|v| match v.cmp(&u) {
                Ordering::Less => Some(colors_without_u[v]),
                Ordering::Equal => None,
                Ordering::Greater => Some(colors_without_u[v - 1]),
            })
            .collect();
        let nbrs = g.neighbors(u);
        let mut count = [0usize; 32];
        for v in Bits(nbrs) {
            count[coloring[v].expect("u is not its own neighbour") as usize] += 1;
        }
        let unique = Bits(nbrs)
            .filter(|&v| count[coloring[v].unwrap() as usize] == 1)
            .collect();
        let mut repeat: Vec<(usize, u8)> = (0..32u8)
            .filter(|&c| count[c as usize] >= 2)
            .map(|c| (count[c as usize], c))
            .collect();
        repeat.sort_unstable();
        LemmaContext {
            u,
            coloring,
            unique,
            repeat_colors: repeat.iter().map(|&(_, c)| c).collect(),
            counts: repeat.iter().map(|&(n, _)| n).collect(),
        }
    }

    pub fn score(&self) -> Score {
        Score {
            unique: self.unique.len(),
            counts: self.counts.clone(),
        }
    }

    /// Colors that occur on `N(u)`, as a mask.
    pub fn neighbourhood_colors(&self, g: &Graph) -> u32 {
        Bits(g.neighbors(self.u)).fold(0, |m, v| m | 1 << self.coloring[v].unwrap())
    }

    /// Colors on the neighbours of `v` that lie inside `N(u)`.
    fn colors_seen_in_nu(&self, g: &Graph, v: usize) -> u32 {
        Bits(g.neighbors(v) & g.neighbors(self.u))
            .fold(0, |m, w| m | 1 << self.coloring[w].unwrap())
    }
}

/// Score of `(u, coloring of G - u)` without building the full context.
fn score_of(g: &Graph, u: usize, colors_without_u: &[u8]) -> Score {
    let mut count = [0usize; 32];
    for v in Bits(g.neighbors(u)) {
        let c = if v < u {
            colors_without_u[v]
        } else {
            colors_without_u[v - 1]
        };
        count[c as usize] += 1;
    }
    let unique = count.iter().filter(|&&c| c == 1).count();
    let mut counts: Vec<usize> = count.iter().copied().filter(|&c| c >= 2).collect();
    counts.sort_unstable();
    Score { unique, counts }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Clause {
    A,
    B,
}

/// A failed clause, with enough detail to replay it on its context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub clause: Clause,
    pub u: usize,
    /// The vertex of `N(u)` lacking the required neighbour.
    pub vertex: usize,
    /// 1-based index `i` of the missing repeat color `α_i`.
    pub alpha: usize,
    /// The missing color itself.
    pub missing_color: u8,
}

/// Every extremal `(u, C)` over all vertices `u` and all `(chi - 1)`
/// colorings of `G - u` up to color permutation.
pub fn lemma_select(g: &Graph) -> Result<Vec<LemmaContext>, LemmaError> {
    if !is_free(g, &[Pattern::Chair]) {
        return Err(LemmaError::NotChairFree);
    }
    if !is_vertex_critical(g) {
        return Err(LemmaError::NotCritical);
    }
    Ok(select_unchecked(g, chromatic_number(g) - 1))
}

fn select_unchecked(g: &Graph, k: usize) -> Vec<LemmaContext> {
    let mut best: Option<Score> = None;
    let mut contexts = Vec::new();
    for u in 0..g.order() {
        let h = g.remove_vertex(u);
        let _ = for_each_coloring(&h, k, |colors| {
            let s = score_of(g, u, colors);
            let ord = best.as_ref().map_or(Ordering::Greater, |b| s.cmp(b));
            match ord {
                Ordering::Greater => {
                    best = Some(s);
                    contexts.clear();
                    contexts.push(LemmaContext::new(g, u, colors));
                }
                Ordering::Equal => contexts.push(LemmaContext::new(g, u, colors)),
                Ordering::Less => {}
            }
            ControlFlow::Continue(())
        });
    }
    contexts
}

pub fn check_clause_a(g: &Graph, ctx: &LemmaContext) -> Result<(), LemmaViolation> {
    for &x in &ctx.unique {
        let seen = ctx.colors_seen_in_nu(g, x);
        for (i, &alpha) in ctx.repeat_colors.iter().enumerate() {
            if seen >> alpha & 1 == 0 {
                return Err(LemmaViolation {
                    clause: Clause::A,
                    u: ctx.u,
                    vertex: x,
                    alpha: i + 1,
                    missing_color: alpha,
                });
            }
        }
    }
    Ok(())
}

pub fn check_clause_b(
    g: &Graph,
    ctx: &LemmaContext,
    order: LemmaOrder,
) -> Result<(), LemmaViolation> {
    let unique: u32 = ctx.unique.iter().fold(0, |m, &v| m | 1 << v);
    for y in Bits(g.neighbors(ctx.u) & !unique) {
        let cy = ctx.coloring[y].unwrap();
        let i = ctx
            .repeat_colors
            .iter()
            .position(|&c| c == cy)
            .expect("non-unique neighbours carry repeat colors");
        let seen = ctx.colors_seen_in_nu(g, y);
        for (k, &alpha) in ctx.repeat_colors.iter().enumerate() {
            let required = match order {
                LemmaOrder::Sorted => k > i,
                LemmaOrder::All => k != i && ctx.counts[k] >= ctx.counts[i],
            };
            if required && seen >> alpha & 1 == 0 {
                return Err(LemmaViolation {
                    clause: Clause::B,
                    u: ctx.u,
                    vertex: y,
                    alpha: k + 1,
                    missing_color: alpha,
                });
            }
        }
    }
    Ok(())
}

/// Per-graph lemma outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaGraphReport {
    pub graph6: String,
    pub chi: usize,
    pub optimal_contexts: usize,
    /// `|R|` at the optimum.
    pub unique_colors: usize,
    /// Ascending repeat-color counts at the optimum.
    pub repeat_counts: Vec<usize>,
    pub order: LemmaOrder,
    pub clause_a_ok: bool,
    pub clause_b_ok: bool,
    pub violations: Vec<LemmaViolation>,
}

impl LemmaGraphReport {
    pub fn ok(&self) -> bool {
        self.clause_a_ok && self.clause_b_ok
    }
}

/// Selects every extremal context of `g` and checks both clauses on each.
pub fn check_graph(g: &Graph, order: LemmaOrder) -> Result<LemmaGraphReport, LemmaError> {
    let contexts = lemma_select(g)?;
    let mut violations = Vec::new();
    let (mut a_ok, mut b_ok) = (true, true);
    for ctx in &contexts {
        if let Err(v) = check_clause_a(g, ctx) {
            a_ok = false;
            violations.push(v);
        }
        if let Err(v) = check_clause_b(g, ctx, order) {
            b_ok = false;
            violations.push(v);
        }
    }
    let best = contexts.first().map(|c| c.score());
    Ok(LemmaGraphReport {
        graph6: canonical_label(g),
        chi: chromatic_number(g),
        optimal_contexts: contexts.len(),
        unique_colors: best.as_ref().map_or(0, |s| s.unique),
        repeat_counts: best.map(|s| s.counts).unwrap_or_default(),
        order,
        clause_a_ok: a_ok,
        clause_b_ok: b_ok,
        violations,
    })
}

fn sort_key(g6: &str) -> (usize, &str) {
    (g6.as_bytes().first().map_or(0, |&b| (b - 63) as usize), g6)
}

/// Checks every graph in parallel; reports sorted by `(n, canonical graph6)`.
pub fn check_all(graphs: &[Graph], order: LemmaOrder) -> Result<Vec<LemmaGraphReport>, LemmaError> {
    let mut reports = graphs
        .par_iter()
        .map(|g| check_graph(g, order))
        .collect::<Result<Vec<_>, _>>()?;
    reports.sort_by(|a, b| sort_key(&a.graph6).cmp(&sort_key(&b.graph6)));
    Ok(reports)
}

/// Vertex-critical Chair-free graphs among `graphs`, in input order.
pub fn critical_chair_free(graphs: &[Graph]) -> Vec<Graph> {
    graphs
        .par_iter()
        .filter(|g| is_free(g, &[Pattern::Chair]) && is_vertex_critical(g))
        .copied()
        .collect()
}

/// All vertex-critical Chair-free graphs on `1..=n_max` vertices, one per
/// isomorphism class, sorted by `(n, canonical graph6)`.
pub fn critical_chair_free_stream(n_max: usize) -> Result<Vec<Graph>, LemmaError> {
    if n_max > MAX_LEMMA_ORDER {
        return Err(LemmaError::OrderOutOfRange(n_max));
    }
    let mut out: Vec<(String, Graph)> = Vec::new();
    GraphSource::Generated { max_n: n_max }.for_each_chunk(|chunk| {
        out.extend(
            critical_chair_free(chunk)
                .into_iter()
                .map(|g| (canonical_label(&g), g)),
        );
    })?;
    out.sort_by(|a, b| sort_key(&a.0).cmp(&sort_key(&b.0)));
    Ok(out.into_iter().map(|(_, g)| g).collect())
}
