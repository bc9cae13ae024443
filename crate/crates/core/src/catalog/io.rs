//! Line-oriented modular data files.
//!
//! ```text
//! # comment
//! rank 2
//! label 0 1
//! label 1 tau
//! S 0 0 5.257311121191336e-1 0.0
//! ...
//! T 1 -8.090169943749475e-1 5.877852522924731e-1
//! ```
//!
//! Loading checks shape and completeness only; the axioms are left to
//! `verify_verlinde`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modular::ModularData;
use crate::numeric::CMatrix;

pub fn load_modular_file(path: impl AsRef<Path>) -> Result<ModularData> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_modular(&text, path)
}

pub fn save_modular_file(data: &ModularData, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, write_modular(data))
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// Serializes with 17 significant digits, enough to round-trip every `f64`.
pub fn write_modular(data: &ModularData) -> String {
    let r = data.rank();
    let mut out = String::new();
    writeln!(out, "rank {r}").unwrap();
    for l in data.labels() {
        writeln!(out, "label {} {}", l.index, l.name).unwrap();
    }
    for i in 0..r {
        for j in 0..r {
            let z = data.s()[(i, j)];
            writeln!(out, "S {i} {j} {:.16e} {:.16e}", z.re, z.im).unwrap();
        }
    }
    for (i, z) in data.t().iter().enumerate() {
        writeln!(out, "T {i} {:.16e} {:.16e}", z.re, z.im).unwrap();
    }
    out
}

/// Parses the text format; `origin` only labels error messages.
pub fn parse_modular(text: &str, origin: impl AsRef<Path>) -> Result<ModularData> {
    let origin: PathBuf = origin.as_ref().to_path_buf();
    let err = |line: usize, msg: String| Error::Parse { path: origin.clone(), line, msg };

    let mut rank: Option<usize> = None;
    let mut s: Vec<Option<Complex64>> = Vec::new();
    let mut t: Vec<Option<Complex64>> = Vec::new();
    let mut names: Vec<Option<String>> = Vec::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(r) = rank else {
            match fields.as_slice() {
                ["rank", v] => {
                    let r: usize = v.parse().map_err(|_| err(lineno, format!("bad rank '{v}'")))?;
                    if r == 0 {
                        return Err(err(lineno, "rank must be positive".into()));
                    }
                    rank = Some(r);
                    s = vec![None; r * r];
                    t = vec![None; r];
                    names = vec![None; r];
                    continue;
                }
                _ => return Err(err(lineno, "expected 'rank <n>' first".into())),
            }
        };
        let index = |v: &str| -> Result<usize> {
            let i: usize = v.parse().map_err(|_| err(lineno, format!("bad index '{v}'")))?;
            if i >= r {
                return Err(err(lineno, format!("index {i} out of range for rank {r}")));
            }
            Ok(i)
        };
        let number = |v: &str| -> Result<f64> {
            v.parse().map_err(|_| err(lineno, format!("bad number '{v}'")))
        };
        match fields.as_slice() {
            ["label", i, name] => {
                let i = index(i)?;
                names[i] = Some((*name).to_string());
            }
            ["S", i, j, re, im] => {
                let (i, j) = (index(i)?, index(j)?);
                let slot = &mut s[i * r + j];
                if slot.is_some() {
                    return Err(err(lineno, format!("duplicate entry S {i} {j}")));
                }
                *slot = Some(Complex64::new(number(re)?, number(im)?));
            }
            ["T", i, re, im] => {
                let i = index(i)?;
                if t[i].is_some() {
                    return Err(err(lineno, format!("duplicate entry T {i}")));
                }
                t[i] = Some(Complex64::new(number(re)?, number(im)?));
            }
            ["rank", ..] => return Err(err(lineno, "rank given twice".into())),
            _ => return Err(err(lineno, format!("unrecognised line '{line}'"))),
        }
    }

    let r = rank.ok_or_else(|| err(last_line.max(1), "missing 'rank' line".into()))?;
    if let Some(pos) = s.iter().position(Option::is_none) {
        return Err(err(last_line, format!("missing entry S {} {}", pos / r, pos % r)));
    }
    if let Some(pos) = t.iter().position(Option::is_none) {
        return Err(err(last_line, format!("missing entry T {pos}")));
    }
    let s = CMatrix::from_fn(r, r, |i, j| s[i * r + j].expect("checked"));
    let t = t.into_iter().map(|z| z.expect("checked")).collect();
    let data = ModularData::new(s, t)?;
    let names: Vec<String> =
        names.into_iter().enumerate().map(|(i, n)| n.unwrap_or_else(|| i.to_string())).collect();
    Ok(data.with_names(names))
}
