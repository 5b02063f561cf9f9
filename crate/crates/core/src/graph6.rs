//! graph6 encoding (McKay's format) for graphs on at most 32 vertices, and
//! newline-delimited graph6 streams.
//!
//! The header is the single byte `63 + n`. The upper triangle is written
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte,
//! most significant bit first, each byte offset by 63, with the final byte
//! zero-padded.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("graph6 vertex count {0} exceeds the {MAX_VERTICES}-vertex limit")]
    TooLarge(usize),
    #[error("graph6 body has {got} bytes, expected {expected} for {n} vertices")]
    BadLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("graph6 padding bits are not zero")]
    BadPadding,
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s
        .strip_prefix(HEADER)
        .unwrap_or(s)
        .trim_end_matches(['\n', '\r']);
    let bytes = s.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, offset });
        }
    }
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if head == 126 {
        // multi-byte headers only occur for n >= 63
        return Err(Graph6Error::TooLarge(63));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            got: body.len(),
        });
    }
    let mut g = Graph::new(n).expect("n checked above");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::BadPadding);
        }
    }
    Ok(g)
}

/// Reads a newline-delimited graph6 stream. Blank lines are skipped.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph, Graph6Error>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e.into())),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(from_graph6(l.trim()).map_err(|e| Graph6Error::Line {
                line: i + 1,
                source: Box::new(e),
            })),
        })
}

pub fn write_graph6<'a, W: Write>(
    mut out: W,
    graphs: impl IntoIterator<Item = &'a Graph>,
) -> io::Result<()> {
    for g in graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    Ok(())
}
