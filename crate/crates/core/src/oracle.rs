//! Tabulated expansions shipped as data files, parsed at run time.
//!
//! `appendix_a.txt`: `k l r p | lhs | rhs`, one product of entries of `V` per line.
//! `appendix_b.txt`: `i j | entry | expansion`, one coproduct of `v_{i,j}` per line.
//! Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::braided::BraidedElement;
use crate::coproduct::{delta, SS};
use crate::expr::ParseError;
use crate::repmat::{big_v_entry, v_entry};
use crate::report::{expect_eq, ReportRecord};
use crate::suq2::Suq2Element;

/// Environment variable naming the default oracle directory.
pub const ORACLE_DIR_ENV: &str = "BSUQ2_ORACLE_DIR";
pub const APPENDIX_A_FILE: &str = "appendix_a.txt";
pub const APPENDIX_B_FILE: &str = "appendix_b.txt";

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {msg}")]
    Format { path: PathBuf, line: usize, msg: String },
}

pub fn default_dir() -> PathBuf {
    match std::env::var_os(ORACLE_DIR_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("data"),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProductLine {
    pub line: usize,
    pub k: i64,
    pub l: i64,
    pub r: i64,
    pub p: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoproductLine {
    pub line: usize,
    pub i: i64,
    pub j: i64,
    pub entry: String,
    pub expansion: String,
}

fn read_lines(path: &Path) -> Result<Vec<(usize, String)>, OracleError> {
    let text = fs::read_to_string(path).map_err(|source| OracleError::Io { path: path.to_path_buf(), source })?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect())
}

fn split_fields<const N: usize>(
    path: &Path,
    line: usize,
    text: &str,
) -> Result<([i64; N], String, String), OracleError> {
    let bad = |msg: String| OracleError::Format { path: path.to_path_buf(), line, msg };
    let parts: Vec<&str> = text.split('|').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad(format!("expected 3 '|'-separated fields, found {}", parts.len())));
    }
    let idx: Vec<i64> = parts[0]
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|e| bad(format!("index {t:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let idx: [i64; N] =
        idx.try_into().map_err(|v: Vec<i64>| bad(format!("expected {N} indices, found {}", v.len())))?;
    if idx.iter().any(|i| !(-1..=1).contains(i)) {
        return Err(bad(format!("indices {idx:?} outside -1..=1")));
    }
    Ok((idx, parts[1].to_string(), parts[2].to_string()))
}

pub fn load_products(dir: &Path) -> Result<Vec<ProductLine>, OracleError> {
    let path = dir.join(APPENDIX_A_FILE);
    read_lines(&path)?
        .into_iter()
        .map(|(line, t)| {
            let ([k, l, r, p], lhs, rhs) = split_fields::<4>(&path, line, &t)?;
            Ok(ProductLine { line, k, l, r, p, lhs, rhs })
        })
        .collect()
}

pub fn load_coproducts(dir: &Path) -> Result<Vec<CoproductLine>, OracleError> {
    let path = dir.join(APPENDIX_B_FILE);
    read_lines(&path)?
        .into_iter()
        .map(|(line, t)| {
            let ([i, j], entry, expansion) = split_fields::<2>(&path, line, &t)?;
            Ok(CoproductLine { line, i, j, entry, expansion })
        })
        .collect()
}

fn parse_suq2(src: &str) -> Result<Suq2Element, String> {
    src.parse::<Suq2Element>().map_err(|e: ParseError| format!("cannot parse {src:?}: {e}"))
}

/// Parsed `(lhs, rhs)` of a product line.
pub fn product_sides(p: &ProductLine) -> Result<(Suq2Element, Suq2Element), String> {
    Ok((parse_suq2(&p.lhs)?, parse_suq2(&p.rhs)?))
}

/// Parsed `(Δ(entry), expansion)` of a coproduct line.
pub fn coproduct_sides(c: &CoproductLine) -> Result<(BraidedElement, BraidedElement), String> {
    let entry = parse_suq2(&c.entry)?;
    let exp = BraidedElement::parse(&SS, &c.expansion).map_err(|e| format!("cannot parse expansion: {e}"))?;
    Ok((delta(&entry), exp))
}

/// One record per product line: the tabulated left side is the `((k,l),(r,p))` entry of the
/// 9×9 matrix, and its normal form equals the tabulated right side.
pub fn check_products(lines: &[ProductLine]) -> Vec<ReportRecord> {
    lines
        .par_iter()
        .map(|p| {
            ReportRecord::run(
                format!("appendix-a/({},{}),({},{})", p.k, p.l, p.r, p.p),
                format!("{APPENDIX_A_FILE}:{}", p.line),
                || {
                    let (lhs, rhs) = product_sides(p)?;
                    let entry = big_v_entry(p.k, p.l, p.r, p.p);
                    if entry != lhs {
                        return Err(format!("tabulated product {} is not the matrix entry {entry}", p.lhs));
                    }
                    expect_eq(&lhs, &rhs, || lhs.minus(&rhs).to_string()).map(|_| format!("{lhs}"))
                },
            )
        })
        .collect()
}

/// One record per coproduct line: the tabulated entry is `v_{i,j}` and `Δ(v_{i,j})` equals the expansion.
pub fn check_coproducts(lines: &[CoproductLine]) -> Vec<ReportRecord> {
    lines
        .par_iter()
        .map(|c| {
            ReportRecord::run(format!("appendix-b/({},{})", c.i, c.j), format!("{APPENDIX_B_FILE}:{}", c.line), || {
                let entry = parse_suq2(&c.entry)?;
                if entry != v_entry(c.i, c.j) {
                    return Err(format!("tabulated entry {entry} is not v[{},{}]", c.i, c.j));
                }
                let (lhs, rhs) = coproduct_sides(c)?;
                expect_eq(&lhs, &rhs, || lhs.minus(&rhs).to_string()).map(|_| format!("{} terms", lhs.len()))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data() -> PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data")
    }

    #[test]
    fn shipped_files_have_expected_shape() {
        let a = load_products(&data()).unwrap();
        assert_eq!(a.len(), 81);
        let b = load_coproducts(&data()).unwrap();
        assert_eq!(b.len(), 9);
    }

    #[test]
    fn spot_products() {
        let a = load_products(&data()).unwrap();
        let find = |k, l, r, p| a.iter().find(|x| (x.k, x.l, x.r, x.p) == (k, l, r, p)).unwrap();
        let (l, _) = product_sides(find(-1, -1, 0, 1)).unwrap();
        assert_eq!(l, v_entry(-1, 0).times(&v_entry(-1, 1)));
        let (_, r) = product_sides(find(1, 1, 1, 1)).unwrap();
        assert_eq!(r, crate::suq2::a(-4, 0, 0));
    }

    #[test]
    fn malformed_lines_are_reported() {
        let dir = std::env::temp_dir().join(format!("bsuq2-oracle-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        fs::write(dir.join(APPENDIX_B_FILE), "# header\n0 0 | 1 \n").unwrap();
        let err = load_coproducts(&dir).unwrap_err();
        assert!(matches!(err, OracleError::Format { line: 2, .. }), "{err}");
        fs::write(dir.join(APPENDIX_B_FILE), "0 2 | 1 | 1\n").unwrap();
        assert!(load_coproducts(&dir).is_err());
        assert!(matches!(load_products(&dir), Err(OracleError::Io { .. })));
        fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn altered_expansion_fails() {
        let mut b = load_coproducts(&data()).unwrap();
        b[0].expansion = b[0].expansion.replacen("-q*zeta", "q*zeta", 1);
        let rs = check_coproducts(&b[..1]);
        assert!(!rs[0].passed());
    }
}
