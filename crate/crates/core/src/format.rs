//! The SHG (single family) and SHGM (multi-family) text formats.
//!
//! ```text
//! SHG 1
//! n=4 k=2
//! # comment
//! 1 2
//! 3 4
//! ```
//!
//! ```text
//! SHGM 1
//! n=4 t=2
//! family k=2
//! 1 2
//! family k=1
//! 3
//! ```
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Vertices
//! are 1-based and must be strictly increasing within a line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::{ColoredFamilies, Edge, SetFamily};

/// Either kind of file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Single(SetFamily),
    Multi(ColoredFamilies),
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }
}

/// Parses `key=value` pairs in the given order.
fn parse_keys(line_no: usize, line: &str, keys: &[&str]) -> Result<Vec<usize>> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != keys.len() {
        return Err(perr(
            line_no,
            format!("expected `{}`", keys.join("=<int> ") + "=<int>"),
        ));
    }
    parts
        .iter()
        .zip(keys)
        .map(|(part, key)| {
            let value = part
                .strip_prefix(key)
                .and_then(|rest| rest.strip_prefix('='))
                .ok_or_else(|| perr(line_no, format!("expected `{key}=<int>`, found `{part}`")))?;
            value
                .parse::<usize>()
                .map_err(|_| perr(line_no, format!("invalid integer `{value}` for {key}")))
        })
        .collect()
}

fn parse_edge(line_no: usize, line: &str, n: usize, k: usize) -> Result<Edge> {
    let mut prev = 0usize;
    let mut vs = Vec::with_capacity(k);
    for tok in line.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| perr(line_no, format!("invalid vertex `{tok}`")))?;
        if v == 0 {
            return Err(perr(line_no, "vertex 0: vertices are 1-based"));
        }
        if v > n {
            return Err(perr(line_no, format!("vertex {v} > n={n}")));
        }
        if v <= prev {
            return Err(perr(line_no, "vertices must be strictly increasing"));
        }
        prev = v;
        vs.push(v);
    }
    if vs.len() != k {
        return Err(perr(
            line_no,
            format!("edge has {} vertices, expected k={k}", vs.len()),
        ));
    }
    Edge::from_vertices(vs).map_err(|e| perr(line_no, e.to_string()))
}

fn header<'a>(lines: &mut Lines<'a>, magic: &str) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l.split_whitespace().collect::<Vec<_>>() == [magic, "1"] => Ok(()),
        Some((no, l)) => Err(perr(
            no,
            format!("expected `{magic} 1` header, found `{l}`"),
        )),
        None => Err(perr(1, format!("missing `{magic} 1` header"))),
    }
}

fn check_dims(line_no: usize, n: usize, k: usize) -> Result<()> {
    if n > crate::family::MAX_N {
        return Err(perr(
            line_no,
            format!("n={n} exceeds {}", crate::family::MAX_N),
        ));
    }
    if k < 1 || k > n {
        return Err(perr(line_no, format!("k={k} must satisfy 1 <= k <= n={n}")));
    }
    Ok(())
}

/// Parses an SHG document.
pub fn parse_shg(text: &str) -> Result<SetFamily> {
    let mut lines = Lines::new(text);
    header(&mut lines, "SHG")?;
    let (dim_line, dims) = lines
        .next()
        .ok_or_else(|| perr(2, "missing `n=<int> k=<int>` line"))?;
    let nk = parse_keys(dim_line, dims, &["n", "k"])?;
    let (n, k) = (nk[0], nk[1]);
    check_dims(dim_line, n, k)?;
    let edges = lines
        .map(|(no, l)| parse_edge(no, l, n, k))
        .collect::<Result<Vec<_>>>()?;
    SetFamily::from_edges(n, k, edges)
}

/// Parses an SHGM document.
pub fn parse_shgm(text: &str) -> Result<ColoredFamilies> {
    let mut lines = Lines::new(text);
    header(&mut lines, "SHGM")?;
    let mut lines = lines.peekable();
    let (dim_line, dims) = lines
        .next()
        .ok_or_else(|| perr(2, "missing `n=<int> t=<int>` line"))?;
    let nt = parse_keys(dim_line, dims, &["n", "t"])?;
    let (n, t) = (nt[0], nt[1]);
    if t < 1 {
        return Err(perr(dim_line, "t must be at least 1"));
    }
    let mut families = Vec::with_capacity(t);
    let mut last_line = dim_line;
    while let Some((no, l)) = lines.next() {
        last_line = no;
        let rest = l
            .strip_prefix("family")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| perr(no, format!("expected `family k=<int>`, found `{l}`")))?;
        let k = parse_keys(no, rest.trim(), &["k"])?[0];
        check_dims(no, n, k)?;
        if families.len() == t {
            return Err(perr(no, format!("more than t={t} family blocks")));
        }
        let mut edges = Vec::new();
        while let Some(&(eno, el)) = lines.peek() {
            if el.starts_with("family") {
                break;
            }
            edges.push(parse_edge(eno, el, n, k)?);
            last_line = eno;
            lines.next();
        }
        families.push(SetFamily::from_edges(n, k, edges)?);
    }
    if families.len() != t {
        return Err(perr(
            last_line,
            format!("expected {t} family blocks, found {}", families.len()),
        ));
    }
    ColoredFamilies::new(families)
}

/// Parses either format, dispatching on the header.
pub fn parse_document(text: &str) -> Result<Document> {
    match Lines::new(text).next() {
        Some((_, l)) if l.starts_with("SHGM") => parse_shgm(text).map(Document::Multi),
        Some((_, l)) if l.starts_with("SHG") => parse_shg(text).map(Document::Single),
        Some((no, l)) => Err(perr(no, format!("unknown header `{l}`"))),
        None => Err(perr(1, "empty input")),
    }
}

fn write_edges(out: &mut String, f: &SetFamily) {
    for e in f.iter() {
        let line: Vec<String> = e.vertices().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

pub fn to_shg(f: &SetFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "SHG 1\nn={} k={}", f.n(), f.k());
    write_edges(&mut out, f);
    out
}

pub fn to_shgm(fams: &ColoredFamilies) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "SHGM 1\nn={} t={}", fams.n(), fams.t());
    for f in fams.families() {
        let _ = writeln!(out, "family k={}", f.k());
        write_edges(&mut out, f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_with_comments() {
        let text = "# K4\nSHG 1\nn=4 k=2\n1 2\n# mid\n3 4\n\n1 2\n";
        let f = parse_shg(text).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(to_shg(&f), "SHG 1\nn=4 k=2\n1 2\n3 4\n");
    }

    #[test]
    fn parses_multi() {
        let text = "SHGM 1\nn=4 t=2\nfamily k=2\n1 2\nfamily k=1\n# singleton\n3\n4\n";
        let fams = parse_shgm(text).unwrap();
        assert_eq!(fams.t(), 2);
        assert_eq!(fams.uniformities(), vec![2, 1]);
        assert_eq!(fams.family(1).len(), 2);
        assert_eq!(parse_shgm(&to_shgm(&fams)).unwrap(), fams);
    }

    #[test]
    fn empty_family_block() {
        let text = "SHGM 1\nn=3 t=2\nfamily k=2\nfamily k=2\n1 3\n";
        let fams = parse_shgm(text).unwrap();
        assert!(fams.family(0).is_empty());
        assert_eq!(fams.family(1).len(), 1);
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other}"),
        }
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(line_of(parse_shg("SHG 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_shg("SHG 1\nn=4 q=2\n").unwrap_err()), 2);
        assert_eq!(
            line_of(parse_shg("SHG 1\nn=4 k=2\n1 2\n2 1\n").unwrap_err()),
            4
        );
        assert_eq!(
            line_of(parse_shg("SHG 1\nn=4 k=2\n# c\n1 5\n").unwrap_err()),
            4
        );
        assert_eq!(
            line_of(parse_shg("SHG 1\nn=4 k=2\n1 2 3\n").unwrap_err()),
            3
        );
        assert_eq!(
            line_of(parse_shgm("SHGM 1\nn=4 t=2\nfamily k=2\n1 2\n").unwrap_err()),
            4
        );
        assert_eq!(
            line_of(parse_shgm("SHGM 1\nn=4 t=1\n1 2\n").unwrap_err()),
            3
        );
    }

    #[test]
    fn dispatches_on_header() {
        assert!(matches!(
            parse_document("SHG 1\nn=2 k=1\n1\n"),
            Ok(Document::Single(_))
        ));
        assert!(matches!(
            parse_document("SHGM 1\nn=2 t=1\nfamily k=1\n2\n"),
            Ok(Document::Multi(_))
        ));
        assert!(parse_document("XYZ\n").is_err());
    }
}
