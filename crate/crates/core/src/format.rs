//! Text formats for colourings and hypergraphs.
//!
//! Colouring file (LF-terminated):
//!
//! ```text
//! gallai-colouring v1
//! n=<int> r=<int> k=<int>
//! <v_1> ... <v_r> <colour>        (exactly C(n,r) lines, any order)
//! ```
//!
//! Vertices on a data line are strictly increasing. The encoder writes the
//! edges in colex order, one line at a time, so arbitrarily large
//! colourings stream straight to the writer.
//!
//! Hypergraph file:
//!
//! ```text
//! gallai-hypergraph v1
//! n=<int> r=<int> m=<int>
//! <v_1> ... <v_r>                  (exactly m lines)
//! ```

use std::io::{self, BufRead, Write};

use crate::colouring::{Colour, EdgeColouring};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::subset::{binomial, check_subset, BinomialTable};

pub const COLOURING_MAGIC: &str = "gallai-colouring v1";
pub const HYPERGRAPH_MAGIC: &str = "gallai-hypergraph v1";

/// Writes `c` in the colouring file format.
pub fn encode<W: Write>(c: &EdgeColouring, out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "{COLOURING_MAGIC}")?;
    writeln!(out, "n={} r={} k={}", c.n(), c.r(), c.k())?;
    let mut line = String::new();
    for (edge, colour) in c.edges() {
        line.clear();
        for v in edge {
            line.push_str(&v.to_string());
            line.push(' ');
        }
        line.push_str(&colour.to_string());
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()
}

pub fn encode_to_string(c: &EdgeColouring) -> String {
    let mut buf = Vec::new();
    encode(c, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("encoder emits ASCII")
}

fn parse_header(line: &str, lineno: usize, keys: [&str; 3]) -> Result<[usize; 3]> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::parse(
            lineno,
            format!("header mismatch: expected `{}=.. {}=.. {}=..`", keys[0], keys[1], keys[2]),
        ));
    }
    let mut out = [0usize; 3];
    for (slot, (field, key)) in out.iter_mut().zip(fields.iter().zip(keys)) {
        let value = field
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| Error::parse(lineno, format!("header mismatch: expected `{key}=`")))?;
        *slot = value
            .parse()
            .map_err(|_| Error::parse(lineno, format!("header mismatch: bad value for {key}")))?;
    }
    Ok(out)
}

fn parse_vertices(fields: &[&str], n: usize, r: usize, lineno: usize) -> Result<Vec<usize>> {
    let mut edge = Vec::with_capacity(r);
    for f in fields {
        edge.push(
            f.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("bad vertex `{f}`")))?,
        );
    }
    check_subset(&edge, n, r).map_err(|e| Error::parse(lineno, e.to_string()))?;
    Ok(edge)
}

/// Reads and fully validates a colouring file.
pub fn decode<R: BufRead>(input: R) -> Result<EdgeColouring> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next_line = |what: &str| -> Result<(usize, String)> {
        match lines.next() {
            Some((no, Ok(l))) => Ok((no, l)),
            Some((no, Err(e))) => Err(Error::parse(no, e.to_string())),
            None => Err(Error::parse(0, format!("missing {what}"))),
        }
    };
    let (no, magic) = next_line("magic line")?;
    if magic.trim_end() != COLOURING_MAGIC {
        return Err(Error::parse(no, format!("header mismatch: expected `{COLOURING_MAGIC}`")));
    }
    let (no, header) = next_line("size header")?;
    let [n, r, k] = parse_header(&header, no, ["n", "r", "k"])?;
    if r == 0 || n < r {
        return Err(Error::parse(no, format!("header mismatch: need n >= r >= 1 (n={n} r={r})")));
    }
    let total = binomial(n, r);
    if total > (1u64 << 32) {
        return Err(Error::parse(no, "colouring too large"));
    }
    let binom = BinomialTable::new(n, r);
    let mut colours: Vec<Colour> = vec![0; total as usize];
    let mut seen = 0u64;
    let mut last = no;
    for (no, line) in lines {
        let line = line.map_err(|e| Error::parse(no, e.to_string()))?;
        last = no;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != r + 1 {
            return Err(Error::parse(no, format!("expected {r} vertices and a colour")));
        }
        let edge = parse_vertices(&fields[..r], n, r, no)?;
        let colour: usize = fields[r]
            .parse()
            .map_err(|_| Error::parse(no, format!("bad colour `{}`", fields[r])))?;
        if colour == 0 || colour > k {
            return Err(Error::parse(no, format!("colour {colour} outside 1..={k}")));
        }
        let slot = &mut colours[binom.rank_sorted(&edge) as usize];
        if *slot != 0 {
            return Err(Error::parse(no, format!("duplicate edge {edge:?}")));
        }
        *slot = colour as Colour;
        seen += 1;
    }
    if seen != total {
        return Err(Error::parse(
            last,
            format!("incomplete colouring: {seen} of {total} edges present"),
        ));
    }
    EdgeColouring::from_ranked(n, r, k, colours).map_err(|e| Error::parse(last, e.to_string()))
}

pub fn decode_str(s: &str) -> Result<EdgeColouring> {
    decode(s.as_bytes())
}

pub fn encode_hypergraph<W: Write>(h: &Hypergraph, out: W) -> io::Result<()> {
    let mut out = io::BufWriter::new(out);
    writeln!(out, "{HYPERGRAPH_MAGIC}")?;
    writeln!(out, "n={} r={} m={}", h.n(), h.r(), h.edge_count())?;
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(u32::to_string).collect();
        writeln!(out, "{}", words.join(" "))?;
    }
    out.flush()
}

pub fn decode_hypergraph<R: BufRead>(input: R) -> Result<Hypergraph> {
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (no, magic) = match lines.next() {
        Some((no, Ok(l))) => (no, l),
        _ => return Err(Error::parse(1, "missing magic line")),
    };
    if magic.trim_end() != HYPERGRAPH_MAGIC {
        return Err(Error::parse(no, format!("header mismatch: expected `{HYPERGRAPH_MAGIC}`")));
    }
    let (no, header) = match lines.next() {
        Some((no, Ok(l))) => (no, l),
        _ => return Err(Error::parse(2, "missing size header")),
    };
    let [n, r, m] = parse_header(&header, no, ["n", "r", "m"])?;
    let mut edges = Vec::with_capacity(m);
    let mut last = no;
    for (no, line) in lines {
        let line = line.map_err(|e| Error::parse(no, e.to_string()))?;
        last = no;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields.len() != r {
            return Err(Error::parse(no, format!("expected {r} vertices")));
        }
        edges.push(parse_vertices(&fields, n, r, no)?);
    }
    if edges.len() != m {
        return Err(Error::parse(last, format!("header says m={m}, found {} edges", edges.len())));
    }
    Hypergraph::new(n, r, edges).map_err(|e| Error::parse(last, e.to_string()))
}
