//! Necessity witnesses: graphs showing that dropping a forbidden pattern
//! breaks the corresponding bound, checked against their claimed properties.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::detect::find_pattern;
use crate::graph::{cycle, join, mycielski, Graph};
use crate::graph6::to_graph6;
use crate::pattern::Pattern;
use crate::solve::{chromatic_number, clique_number};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("C5 join supports 1 <= m <= 3, got {0}")]
    JoinRange(usize),
    #[error("unknown witness `{0}` (expected c5_join_2, c5_join_3 or grotzsch)")]
    UnknownName(String),
}

/// The `m`-fold join `C5 + C5 + ... + C5`.
pub fn c5_join(m: usize) -> Result<Graph, WitnessError> {
    if !(1..=3).contains(&m) {
        return Err(WitnessError::JoinRange(m));
    }
    let c5 = cycle(5).expect("C5");
    Ok((1..m).fold(c5, |acc, _| join(&acc, &c5).expect("at most 15 vertices")))
}

/// The Grötzsch graph, as the Mycielskian of `C5`.
pub fn grotzsch() -> Graph {
    mycielski(&cycle(5).expect("C5")).expect("11 vertices")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessName {
    C5Join2,
    C5Join3,
    Grotzsch,
}

impl WitnessName {
    pub const ALL: [WitnessName; 3] = [
        WitnessName::C5Join2,
        WitnessName::C5Join3,
        WitnessName::Grotzsch,
    ];

    pub fn graph(self) -> Graph {
        match self {
            WitnessName::C5Join2 => c5_join(2).expect("in range"),
            WitnessName::C5Join3 => c5_join(3).expect("in range"),
            WitnessName::Grotzsch => grotzsch(),
        }
    }

    fn claims(self) -> Claims {
        match self {
            WitnessName::C5Join2 => Claims::c5_join(2),
            WitnessName::C5Join3 => Claims::c5_join(3),
            WitnessName::Grotzsch => Claims {
                omega: 2,
                chi: 4,
                absent: &[Pattern::P4plusK1, Pattern::Hvn, Pattern::K5minusE],
                present: &[Pattern::Chair],
                exceeds: Exceeds::ThreeHalvesOmega,
            },
        }
    }
}

impl fmt::Display for WitnessName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessName::C5Join2 => "c5_join_2",
            WitnessName::C5Join3 => "c5_join_3",
            WitnessName::Grotzsch => "grotzsch",
        })
    }
}

impl FromStr for WitnessName {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        WitnessName::ALL
            .into_iter()
            .find(|w| w.to_string() == s)
            .ok_or_else(|| WitnessError::UnknownName(s.to_string()))
    }
}

/// Which bound the witness must exceed.
#[derive(Clone, Copy, Debug)]
enum Exceeds {
    /// `chi > omega + 1`
    OmegaPlus1,
    /// `chi > 3 omega / 2`, i.e. `2 chi > 3 omega`
    ThreeHalvesOmega,
}

/// Expected values for a witness.
struct Claims {
    omega: usize,
    chi: usize,
    absent: &'static [Pattern],
    present: &'static [Pattern],
    exceeds: Exceeds,
}

impl Claims {
    fn c5_join(m: usize) -> Self {
        Claims {
            omega: 2 * m,
            chi: 3 * m,
            absent: &[Pattern::P3unionK1, Pattern::K2union2K1],
            present: &[Pattern::Hvn, Pattern::K5minusE],
            exceeds: Exceeds::OmegaPlus1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub name: String,
    pub graph6: String,
    pub omega: usize,
    pub chi: usize,
    /// Induced occurrence of every catalog pattern, keyed by pattern name.
    pub pattern_presence: BTreeMap<String, bool>,
    pub claims_ok: bool,
    /// One line per expected value that did not match.
    pub mismatches: Vec<String>,
}

impl WitnessReport {
    pub fn summary_line(&self) -> String {
        format!(
            "{}: ω={} χ={} claims_ok={}",
            self.name, self.omega, self.chi, self.claims_ok
        )
    }
}

pub fn witness_report(name: &str) -> Result<WitnessReport, WitnessError> {
    Ok(report_for(name.parse()?))
}

pub fn report_for(name: WitnessName) -> WitnessReport {
    let g = name.graph();
    let claims = name.claims();
    let omega = clique_number(&g);
    let chi = chromatic_number(&g);
    let presence: BTreeMap<Pattern, bool> = Pattern::ALL
        .into_iter()
        .map(|p| (p, find_pattern(&g, p).is_some()))
        .collect();

    let mut mismatches = Vec::new();
    if omega != claims.omega {
        mismatches.push(format!(
            "omega: expected {}, computed {omega}",
            claims.omega
        ));
    }
    if chi != claims.chi {
        mismatches.push(format!("chi: expected {}, computed {chi}", claims.chi));
    }
    for p in claims.absent {
        if presence[p] {
            mismatches.push(format!("{p}: expected absent, found induced"));
        }
    }
    for p in claims.present {
        if !presence[p] {
            mismatches.push(format!("{p}: expected induced, not found"));
        }
    }
    let exceeds = match claims.exceeds {
        Exceeds::OmegaPlus1 => chi > omega + 1,
        Exceeds::ThreeHalvesOmega => 2 * chi > 3 * omega,
    };
    if !exceeds {
        mismatches.push(format!(
            "chi = {chi} does not exceed the {:?} bound at omega = {omega}",
            claims.exceeds
        ));
    }

    WitnessReport {
        name: name.to_string(),
        graph6: to_graph6(&g),
        omega,
        chi,
        pattern_presence: presence
            .into_iter()
            .map(|(p, b)| (p.to_string(), b))
            .collect(),
        claims_ok: mismatches.is_empty(),
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn join_sizes() {
        assert!(is_isomorphic(&c5_join(1).unwrap(), &cycle(5).unwrap()));
        assert_eq!(c5_join(2).unwrap().order(), 10);
        assert_eq!(c5_join(3).unwrap().order(), 15);
        assert_eq!(c5_join(0), Err(WitnessError::JoinRange(0)));
        assert_eq!(c5_join(4), Err(WitnessError::JoinRange(4)));
    }

    #[test]
    fn grotzsch_shape() {
        let g = grotzsch();
        assert_eq!((g.order(), g.size()), (11, 20));
    }

    #[test]
    fn reports() {
        let g = witness_report("grotzsch").unwrap();
        assert!(g.claims_ok, "{:?}", g.mismatches);
        assert_eq!((g.omega, g.chi), (2, 4));
        assert_eq!(g.summary_line(), "grotzsch: ω=2 χ=4 claims_ok=true");
        let j2 = witness_report("c5_join_2").unwrap();
        assert!(j2.claims_ok, "{:?}", j2.mismatches);
        assert_eq!(witness_report("c5_join_3").unwrap().chi, 9);
        assert!(matches!(
            witness_report("petersen"),
            Err(WitnessError::UnknownName(_))
        ));
    }

    #[test]
    fn presence_map_covers_catalog() {
        let r = report_for(WitnessName::Grotzsch);
        assert_eq!(r.pattern_presence.len(), Pattern::ALL.len());
        assert!(r.pattern_presence["Chair"]);
        assert!(!r.pattern_presence["K4"]);
    }
}
