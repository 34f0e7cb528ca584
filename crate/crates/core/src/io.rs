//! Text and JSON formats for complexes, matrices and sign vectors.
//!
//! Complex text: one facet per line as whitespace-separated 0-based vertex
//! indices, `#` comment lines, and an optional `m=<int>` header. JSON:
//! `{"m": int, "facets": [[int]]}`. Matrix text: one line of comma-separated
//! column codes, or one line of bits per row.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::simplicial::SimplicialComplex;

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    #[serde(default)]
    m: Option<usize>,
    facets: Vec<Vec<usize>>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    parse_complex_checked(text).map(|(k, _)| k)
}

/// Parses a complex and reports facets that were dropped during normalization.
pub fn parse_complex_checked(text: &str) -> Result<(SimplicialComplex, Vec<String>)> {
    let (m, facets) = if text.trim_start().starts_with('{') {
        let j: ComplexJson = serde_json::from_str(text)?;
        (j.m, j.facets)
    } else {
        parse_facet_lines(text)?
    };
    let top = facets.iter().flatten().max().map_or(0, |v| v + 1);
    let m = match m {
        Some(m) if m < top => {
            return Err(parse_err(0, format!("vertex {} exceeds header m={m}", top - 1)))
        }
        Some(m) => m,
        None => top,
    };
    let k = SimplicialComplex::from_facets(m, &facets)?;
    let mut warnings = Vec::new();
    let mut seen: Vec<Vec<usize>> = Vec::new();
    for f in &facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        if seen.contains(&f) {
            warnings.push(format!("duplicate facet {f:?} dropped"));
        } else if facets.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v))) {
            warnings.push(format!("facet {f:?} is contained in another facet and was dropped"));
        }
        seen.push(f);
    }
    Ok((k, warnings))
}

fn parse_facet_lines(text: &str) -> Result<(Option<usize>, Vec<Vec<usize>>)> {
    let mut m = None;
    let mut facets = Vec::new();
    for (line, l) in content_lines(text) {
        if let Some(v) = l.strip_prefix("m=") {
            let v = v
                .trim()
                .parse()
                .map_err(|_| parse_err(line, format!("bad header `{l}`")))?;
            m = Some(v);
            continue;
        }
        let facet = l
            .split(|c: char| c.is_whitespace() || c == ',' || c == '(' || c == ')')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(line, format!("`{t}` is not a vertex index")))
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(&v) = facet.iter().find(|&&v| v >= 64) {
            return Err(parse_err(line, format!("vertex {v} exceeds the 64-vertex limit")));
        }
        facets.push(facet);
    }
    Ok((m, facets))
}

/// Canonical text form: `m=` header then one facet per line.
pub fn complex_to_text(k: &SimplicialComplex) -> String {
    let mut out = format!("m={}\n", k.m());
    for f in k.facet_lists() {
        let s: Vec<String> = f.iter().map(ToString::to_string).collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
    out
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexJson {
        m: Some(k.m()),
        facets: k.facet_lists(),
    })
    .expect("plain data serializes")
}

pub fn parse_matrix(text: &str, n: usize) -> Result<Gf2Matrix> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    let Some(&(first, l)) = lines.first() else {
        return Err(parse_err(0, "no matrix data"));
    };
    let is_codes = lines.len() == 1 && (l.contains(',') || n != 1);
    if is_codes {
        let codes = l
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| parse_err(first, format!("`{t}` is not a column code")))
            })
            .collect::<Result<Vec<_>>>()?;
        return Gf2Matrix::from_column_codes(&codes, n).map_err(|e| parse_err(first, e.to_string()));
    }
    if lines.len() != n {
        return Err(parse_err(
            lines.last().map_or(0, |l| l.0),
            format!("expected {n} rows of bits, found {}", lines.len()),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    let mut ncols = None;
    for &(line, l) in &lines {
        let row = parse_bits(l).map_err(|msg| parse_err(line, msg))?;
        if *ncols.get_or_insert(row.len()) != row.len() {
            return Err(parse_err(line, "rows have different lengths"));
        }
        rows.push(row);
    }
    let m = ncols.unwrap_or(0);
    let rows = rows
        .into_iter()
        .map(|r| Gf2Vector::from_support(m, r.iter().enumerate().filter(|e| *e.1).map(|e| e.0)))
        .collect::<Result<Vec<_>>>()?;
    Gf2Matrix::new(rows, m)
}

fn parse_bits(s: &str) -> std::result::Result<Vec<bool>, String> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(format!("`{other}` is not a bit")),
        })
        .collect()
}

/// Column codes for at most four rows, a bit grid otherwise.
pub fn matrix_to_text(mat: &Gf2Matrix) -> String {
    if mat.nrows() <= 4 {
        let codes: Vec<String> = mat.column_codes().iter().map(ToString::to_string).collect();
        format!("{}\n", codes.join(","))
    } else {
        let mut out = String::new();
        for r in mat.rows() {
            let bits: Vec<&str> = (0..mat.ncols()).map(|j| if r.get(j) { "1" } else { "0" }).collect();
            out.push_str(&bits.join(" "));
            out.push('\n');
        }
        out
    }
}

/// A bit string such as `0100001000`, optionally with spaces or commas.
pub fn parse_vector(text: &str) -> Result<Gf2Vector> {
    let bits = parse_bits(text.trim()).map_err(|msg| parse_err(1, msg))?;
    if bits.is_empty() {
        return Err(parse_err(1, "empty bit string"));
    }
    Gf2Vector::from_support(bits.len(), bits.iter().enumerate().filter(|e| *e.1).map(|e| e.0))
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

pub fn read_matrix(path: &Path, n: usize) -> Result<Gf2Matrix> {
    parse_matrix(&std::fs::read_to_string(path)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn simplex_boundary_text() {
        let k = parse_complex("0 1 2 3\n0 1 2 4\n0 1 3 4\n0 2 3 4\n1 2 3 4\n").unwrap();
        assert_eq!(k, SimplicialComplex::boundary_of_simplex(4).unwrap());
    }

    #[test]
    fn comments_and_header() {
        let k = parse_complex("# a path\nm=5\n0 1\n\n1 2\n").unwrap();
        assert_eq!(k.m(), 5);
        assert!(parse_complex("m=2\n0 5\n").is_err());
        match parse_complex("0 1\n0 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn normalization_warnings() {
        let (k, w) = parse_complex_checked("0 1 2\n0 1\n0 1 2\n").unwrap();
        assert_eq!(k.facets().len(), 1);
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn json_mirror() {
        let k = catalog::complex("L-fig1").unwrap();
        let j = complex_to_json(&k);
        assert_eq!(parse_complex(&j).unwrap(), k);
        let k2 = parse_complex(r#"{"facets": [[0,1],[1,2],[0,2]]}"#).unwrap();
        assert_eq!(k2.is_induced_cycle(), Some(3));
    }

    #[test]
    fn round_trips() {
        for e in catalog::list() {
            if let catalog::CatalogItem::Complex(k) = e.item {
                let text = complex_to_text(&k);
                let back = parse_complex(&text).unwrap();
                assert_eq!(back, k, "{}", e.id);
                assert_eq!(complex_to_text(&back), text);
            }
        }
        for id in ["example-5.5", "mu-sec6", "lambda-A.2"] {
            let m = catalog::matrix(id).unwrap();
            let text = matrix_to_text(&m);
            assert_eq!(parse_matrix(&text, m.nrows()).unwrap(), m);
        }
        let big = Gf2Matrix::identity(6);
        assert_eq!(parse_matrix(&matrix_to_text(&big), 6).unwrap(), big);
    }

    #[test]
    fn matrix_formats() {
        let m = parse_matrix("1,2,1,2,7,4,8,4,8", 4).unwrap();
        assert_eq!(m, catalog::matrix("example-5.5").unwrap());
        let g = parse_matrix("1 0 1\n0 1 1\n", 2).unwrap();
        assert_eq!(g.column_codes(), vec![1, 2, 3]);
        assert!(parse_matrix("1,2,16", 4).is_err());
        assert!(parse_matrix("1 0\n0 1\n", 3).is_err());
    }

    #[test]
    fn vectors() {
        let v = parse_vector("0100001000").unwrap();
        assert_eq!(v, catalog::vector("epsilon-sec6").unwrap());
        assert!(parse_vector("01a").is_err());
    }
}
