//! Catalog of the named forbidden induced subgraphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A named forbidden graph.
///
/// `P4plusK1` is the join of `P4` and `K1` (the gem): a path on four vertices
/// plus a fifth vertex adjacent to all of them. The `union` patterns are
/// disjoint unions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    Chair,
    P4plusK1,
    Hvn,
    K5minusE,
    P3unionK1,
    K2union2K1,
    K1_3,
    K4,
}

impl Pattern {
    pub const ALL: [Pattern; 8] = [
        Pattern::Chair,
        Pattern::P4plusK1,
        Pattern::Hvn,
        Pattern::K5minusE,
        Pattern::P3unionK1,
        Pattern::K2union2K1,
        Pattern::K1_3,
        Pattern::K4,
    ];

    /// Vertex count and edge list. Vertices are numbered so that each one
    /// after the first of its component is adjacent to an earlier one, which
    /// keeps the detector's candidate sets narrow.
    fn shape(self) -> (usize, &'static [(usize, usize)]) {
        match self {
            // centre 0 with leaves 1, 2 and the subdivided arm 0-3-4
            Pattern::Chair => (5, &[(0, 1), (0, 2), (0, 3), (3, 4)]),
            // apex 0 over the path 1-2-3-4
            Pattern::P4plusK1 => (5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]),
            // K4 on 0..4, vertex 4 sees 0 and 1
            Pattern::Hvn => (
                5,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (1, 2),
                    (1, 3),
                    (2, 3),
                    (0, 4),
                    (1, 4),
                ],
            ),
            // K5 without the edge 3-4
            Pattern::K5minusE => (
                5,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (2, 3),
                    (2, 4),
                ],
            ),
            Pattern::P3unionK1 => (4, &[(0, 1), (1, 2)]),
            Pattern::K2union2K1 => (4, &[(0, 1)]),
            Pattern::K1_3 => (4, &[(0, 1), (0, 2), (0, 3)]),
            Pattern::K4 => (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        }
    }

    pub fn graph(self) -> Graph {
        let (n, edges) = self.shape();
        Graph::from_edges(n, edges).expect("catalog patterns are well formed")
    }

    /// Short machine identifier, used in class ids and reports.
    pub fn key(self) -> &'static str {
        match self {
            Pattern::Chair => "chair",
            Pattern::P4plusK1 => "p4k1",
            Pattern::Hvn => "hvn",
            Pattern::K5minusE => "k5e",
            Pattern::P3unionK1 => "p3k1",
            Pattern::K2union2K1 => "k2u2k1",
            Pattern::K1_3 => "k13",
            Pattern::K4 => "k4",
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Chair => "Chair",
            Pattern::P4plusK1 => "P4+K1",
            Pattern::Hvn => "HVN",
            Pattern::K5minusE => "K5-e",
            Pattern::P3unionK1 => "P3uK1",
            Pattern::K2union2K1 => "K2u2K1",
            Pattern::K1_3 => "K1,3",
            Pattern::K4 => "K4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown pattern `{0}`")]
pub struct UnknownPattern(pub String);

impl FromStr for Pattern {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.key().eq_ignore_ascii_case(s) || p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownPattern(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_and_edge_counts() {
        let expected = [
            (Pattern::Chair, 5, 4),
            (Pattern::P4plusK1, 5, 7),
            (Pattern::Hvn, 5, 8),
            (Pattern::K5minusE, 5, 9),
            (Pattern::P3unionK1, 4, 2),
            (Pattern::K2union2K1, 4, 1),
            (Pattern::K1_3, 4, 3),
            (Pattern::K4, 4, 6),
        ];
        for (p, n, m) in expected {
            let g = p.graph();
            assert_eq!((g.order(), g.size()), (n, m), "{p}");
        }
    }

    #[test]
    fn degree_sequences() {
        let sorted = |p: Pattern| {
            let mut d = p.graph().degrees();
            d.sort_unstable();
            d
        };
        assert_eq!(sorted(Pattern::Chair), vec![1, 1, 1, 2, 3]);
        assert_eq!(sorted(Pattern::P4plusK1), vec![2, 2, 3, 3, 4]);
        assert_eq!(sorted(Pattern::Hvn), vec![2, 3, 3, 4, 4]);
        assert_eq!(sorted(Pattern::K5minusE), vec![3, 3, 4, 4, 4]);
    }

    #[test]
    fn parse_round_trip() {
        for p in Pattern::ALL {
            assert_eq!(p.key().parse::<Pattern>().unwrap(), p);
            assert_eq!(p.to_string().parse::<Pattern>().unwrap(), p);
        }
        assert!("fork".parse::<Pattern>().is_err());
    }
}
