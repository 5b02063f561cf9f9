//! Registry of chi-bounded classes and the exhaustive bound verifier.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::canonical_label;
use crate::detect::is_free;
use crate::enumerate::{EnumerateError, GraphSource, MAX_GENERATED_ORDER};
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::solve::{chromatic_number, clique_number};

/// A linear chi-binding function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundFn {
    /// `chi <= 2 omega - 1`
    TwoOmegaMinus1,
    /// `chi <= 3 omega / 2`, evaluated as `2 chi <= 3 omega`
    ThreeHalvesOmega,
    /// `chi <= omega + 1`
    OmegaPlus1,
}

impl BoundFn {
    /// `floor(f(omega))`, the largest chromatic number the bound allows.
    pub fn value(self, omega: usize) -> i64 {
        let w = omega as i64;
        match self {
            BoundFn::TwoOmegaMinus1 => 2 * w - 1,
            BoundFn::ThreeHalvesOmega => 3 * w / 2,
            BoundFn::OmegaPlus1 => w + 1,
        }
    }

    pub fn holds(self, omega: usize, chi: usize) -> bool {
        let (w, c) = (omega as i64, chi as i64);
        match self {
            BoundFn::TwoOmegaMinus1 => c < 2 * w,
            BoundFn::ThreeHalvesOmega => 2 * c <= 3 * w,
            BoundFn::OmegaPlus1 => c <= w + 1,
        }
    }
}

impl fmt::Display for BoundFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundFn::TwoOmegaMinus1 => "2w-1",
            BoundFn::ThreeHalvesOmega => "3w/2",
            BoundFn::OmegaPlus1 => "w+1",
        })
    }
}

/// Outcome of comparing `chi` with a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub bound_value: i64,
    pub ok: bool,
    pub tight: bool,
}

pub fn bound_check(bound: BoundFn, omega: usize, chi: usize) -> BoundCheck {
    let bound_value = bound.value(omega);
    BoundCheck {
        bound_value,
        ok: bound.holds(omega, chi),
        tight: chi as i64 == bound_value,
    }
}

/// Where a registry entry comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// One of the eleven classes this tool was written to check.
    Primary,
    /// Kierstead and Schmerl, "The chromatic number of graphs which induce
    /// neither K1,3 nor K5-e", Discrete Math. 58 (1986).
    KiersteadSchmerl,
}

/// A hereditary class given by forbidden induced subgraphs, with its bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub index: usize,
    pub id: &'static str,
    pub forbidden: &'static [Pattern],
    pub bound: BoundFn,
    pub source: Source,
}

use BoundFn::*;
use Pattern::*;

macro_rules! class {
    ($index:expr, $id:expr, [$($p:expr),*], $bound:expr, $source:expr) => {
        GraphClass { index: $index, id: $id, forbidden: &[$($p),*], bound: $bound, source: $source }
    };
}

pub const REGISTRY: [GraphClass; 12] = [
    class!(
        1,
        "chair_p4k1",
        [Chair, P4plusK1],
        TwoOmegaMinus1,
        Source::Primary
    ),
    class!(
        2,
        "k13_p4k1",
        [K1_3, P4plusK1],
        TwoOmegaMinus1,
        Source::Primary
    ),
    class!(
        3,
        "p4k1_p3k1",
        [P4plusK1, P3unionK1],
        ThreeHalvesOmega,
        Source::Primary
    ),
    class!(
        4,
        "p4k1_k2u2k1",
        [P4plusK1, K2union2K1],
        ThreeHalvesOmega,
        Source::Primary
    ),
    class!(
        5,
        "chair_hvn",
        [Chair, Hvn],
        ThreeHalvesOmega,
        Source::Primary
    ),
    class!(6, "k13_hvn", [K1_3, Hvn], ThreeHalvesOmega, Source::Primary),
    class!(7, "hvn_p3k1", [Hvn, P3unionK1], OmegaPlus1, Source::Primary),
    class!(
        8,
        "hvn_k2u2k1",
        [Hvn, K2union2K1],
        OmegaPlus1,
        Source::Primary
    ),
    class!(9, "chair_k4", [Chair, K4], OmegaPlus1, Source::Primary),
    class!(
        10,
        "k5e_p3k1",
        [K5minusE, P3unionK1],
        OmegaPlus1,
        Source::Primary
    ),
    class!(
        11,
        "k5e_k2u2k1",
        [K5minusE, K2union2K1],
        OmegaPlus1,
        Source::Primary
    ),
    class!(
        12,
        "k13_k5e",
        [K1_3, K5minusE],
        OmegaPlus1,
        Source::KiersteadSchmerl
    ),
];

/// Looks a class up by id (`chair_p4k1`) or registry index (`1`).
pub fn class_by_id(key: &str) -> Option<&'static GraphClass> {
    REGISTRY
        .iter()
        .find(|c| c.id == key || key.parse::<usize>().is_ok_and(|i| i == c.index))
}

pub fn membership(g: &Graph, class: &GraphClass) -> bool {
    is_free(g, class.forbidden)
}

/// One checked graph. `graph6` is the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub graph6: String,
    pub omega: usize,
    pub chi: usize,
    pub bound_value: i64,
    pub ok: bool,
    pub tight: bool,
}

impl VerificationRecord {
    pub fn compute(g: &Graph, bound: BoundFn) -> Self {
        Self::with_label(g, canonical_label(g), bound)
    }

    fn with_label(g: &Graph, graph6: String, bound: BoundFn) -> Self {
        let omega = clique_number(g);
        let chi = chromatic_number(g);
        let check = bound_check(bound, omega, chi);
        VerificationRecord {
            graph6,
            omega,
            chi,
            bound_value: check.bound_value,
            ok: check.ok,
            tight: check.tight,
        }
    }

    /// Vertex count, read back from the graph6 header.
    pub fn order(&self) -> usize {
        self.graph6
            .as_bytes()
            .first()
            .map_or(0, |&b| (b - 63) as usize)
    }

    fn sort_key(&self) -> (usize, &str) {
        (self.order(), &self.graph6)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub class: String,
    pub checked: usize,
    pub records: Vec<VerificationRecord>,
    pub violations: Vec<VerificationRecord>,
    pub tight_examples: Vec<VerificationRecord>,
}

impl VerifyReport {
    fn from_records(class: &GraphClass, mut records: Vec<VerificationRecord>) -> Self {
        records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        VerifyReport {
            class: class.id.to_string(),
            checked: records.len(),
            violations: records.iter().filter(|r| !r.ok).cloned().collect(),
            tight_examples: records.iter().filter(|r| r.tight).cloned().collect(),
            records,
        }
    }

    pub fn summary_line(&self) -> String {
        format!(
            "class={} checked={} violations={} tight={}",
            self.class,
            self.checked,
            self.violations.len(),
            self.tight_examples.len()
        )
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("tight search supports n_max <= {MAX_GENERATED_ORDER}, got {0}")]
    TightRange(usize),
}

/// Records for the members of `class` among `graphs`, computed in parallel.
fn member_records(
    class: &GraphClass,
    graphs: &[Graph],
    canonical: bool,
) -> Vec<VerificationRecord> {
    graphs
        .par_iter()
        .filter(|g| membership(g, class))
        .map(|g| {
            if canonical {
                VerificationRecord::with_label(g, crate::graph6::to_graph6(g), class.bound)
            } else {
                VerificationRecord::compute(g, class.bound)
            }
        })
        .collect()
}

/// Checks the class bound on every member of `graphs`. Violations are data;
/// records are sorted by `(n, canonical graph6)`.
pub fn verify_class(class: &GraphClass, graphs: &[Graph]) -> VerifyReport {
    VerifyReport::from_records(class, member_records(class, graphs, false))
}

/// [`verify_class`] over a generated or supplied source.
pub fn verify_source(
    class: &GraphClass,
    source: &GraphSource,
) -> Result<VerifyReport, VerifyError> {
    let mut records = Vec::new();
    let canonical = source.is_canonical();
    source.for_each_chunk(|chunk| records.extend(member_records(class, chunk, canonical)))?;
    Ok(VerifyReport::from_records(class, records))
}

/// Canonical graph6 strings of all class members on at most `n_max`
/// vertices whose chromatic number equals `floor(f(omega))`, sorted by
/// `(n, canonical form)`.
pub fn find_tight(class: &GraphClass, n_max: usize) -> Result<Vec<String>, VerifyError> {
    Ok(tight_records(class, n_max)?
        .into_iter()
        .map(|r| r.graph6)
        .collect())
}

pub fn tight_records(
    class: &GraphClass,
    n_max: usize,
) -> Result<Vec<VerificationRecord>, VerifyError> {
    if n_max > MAX_GENERATED_ORDER {
        return Err(VerifyError::TightRange(n_max));
    }
    let report = verify_source(class, &GraphSource::Generated { max_n: n_max })?;
    Ok(report.tight_examples)
}
