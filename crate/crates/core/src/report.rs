//! JSON-lines and TSV report writers.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::Serialize;

use crate::lemma::LemmaGraphReport;
use crate::verify::VerificationRecord;
use crate::witnesses::WitnessReport;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Jsonl,
    Tsv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "tsv" => Ok(Format::Tsv),
            other => Err(format!("unknown format `{other}` (expected jsonl or tsv)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Jsonl => "jsonl",
            Format::Tsv => "tsv",
        })
    }
}

/// A record that also has a flat tab-separated form.
pub trait TsvRow {
    fn header() -> &'static str;
    fn row(&self) -> String;
}

impl TsvRow for VerificationRecord {
    fn header() -> &'static str {
        "graph6\tomega\tchi\tbound_value\tok\ttight"
    }

    fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.graph6, self.omega, self.chi, self.bound_value, self.ok, self.tight
        )
    }
}

impl TsvRow for LemmaGraphReport {
    fn header() -> &'static str {
        "graph6\tchi\toptimal_contexts\tunique_colors\tclause_a_ok\tclause_b_ok\tviolations"
    }

    fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.graph6,
            self.chi,
            self.optimal_contexts,
            self.unique_colors,
            self.clause_a_ok,
            self.clause_b_ok,
            self.violations.len()
        )
    }
}

impl TsvRow for WitnessReport {
    fn header() -> &'static str {
        "name\tgraph6\tomega\tchi\tclaims_ok\tmismatches"
    }

    fn row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            self.graph6,
            self.omega,
            self.chi,
            self.claims_ok,
            self.mismatches.join("; ")
        )
    }
}

pub fn write_records<'a, T, W>(
    mut out: W,
    format: Format,
    records: impl IntoIterator<Item = &'a T>,
) -> io::Result<()>
where
    T: Serialize + TsvRow + 'a,
    W: Write,
{
    if format == Format::Tsv {
        writeln!(out, "{}", T::header())?;
    }
    for r in records {
        match format {
            Format::Jsonl => {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
            Format::Tsv => writeln!(out, "{}", r.row())?,
        }
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> VerificationRecord {
        VerificationRecord {
            graph6: "Dhc".into(),
            omega: 2,
            chi: 3,
            bound_value: 3,
            ok: true,
            tight: true,
        }
    }

    #[test]
    fn jsonl_field_order() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Jsonl, [&record()]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"graph6\":\"Dhc\",\"omega\":2,\"chi\":3,\"bound_value\":3,\"ok\":true,\"tight\":true}\n"
        );
    }

    #[test]
    fn tsv_has_header() {
        let mut buf = Vec::new();
        write_records(&mut buf, Format::Tsv, [&record()]).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "graph6\tomega\tchi\tbound_value\tok\ttight\nDhc\t2\t3\t3\ttrue\ttrue\n"
        );
    }

    #[test]
    fn parse_format() {
        assert_eq!("tsv".parse::<Format>(), Ok(Format::Tsv));
        assert!("csv".parse::<Format>().is_err());
    }
}
