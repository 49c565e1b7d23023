//! Plain-text code files.
//!
//! ```text
//! circforge-code 1
//! p 3
//! e 2
//! modulus 1,0,1
//! n 4
//! k 1
//! row 1,2,0,4
//! ```
//!
//! `modulus` is the defining polynomial of the first extension over `GF(p)`,
//! little-endian and monic (`0,1` for a prime field). A field built as a
//! tower carries one further `ext` line per level, each over the level
//! below. Rows hold canonical element encodings in `[0, q)`.

use std::fmt::Write as _;

use circforge_core::{ExtensionTower, Field, LinearCode};

use crate::CliError;

const MAGIC: &str = "circforge-code 1";

#[derive(Clone, Debug, PartialEq)]
pub struct CodeFile {
    pub field: Field,
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

/// Fields from `GF(p)` up to `field`, bottom first.
fn chain(field: &Field) -> Vec<Field> {
    let mut levels = vec![field.clone()];
    while let Some(b) = levels.last().unwrap().base() {
        levels.push(b.clone());
    }
    levels.reverse();
    levels
}

fn join(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl CodeFile {
    /// File for `code`, rows taken from its reduced basis.
    pub fn from_code(code: &LinearCode) -> CodeFile {
        CodeFile {
            field: code.field().clone(),
            n: code.n(),
            rows: code.basis().to_vec(),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode, CliError> {
        Ok(LinearCode::new(&self.field, self.n, self.rows.clone())?)
    }

    pub fn serialize(&self) -> String {
        let levels = chain(&self.field);
        let mut out = String::new();
        writeln!(out, "{MAGIC}").unwrap();
        writeln!(out, "p {}", self.field.p()).unwrap();
        writeln!(out, "e {}", self.field.degree()).unwrap();
        match levels.get(1) {
            Some(first) => writeln!(out, "modulus {}", join(first.modulus())).unwrap(),
            None => writeln!(out, "modulus 0,1").unwrap(),
        }
        for level in levels.iter().skip(2) {
            writeln!(out, "ext {}", join(level.modulus())).unwrap();
        }
        writeln!(out, "n {}", self.n).unwrap();
        writeln!(out, "k {}", self.rows.len()).unwrap();
        for row in &self.rows {
            writeln!(out, "row {}", join(row)).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<CodeFile, CliError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let mut next = |key: &str| -> Result<(usize, String), CliError> {
            let (no, line) = lines
                .next()
                .ok_or_else(|| CliError::parse(0, format!("unexpected end of file, expected `{key}`")))?;
            if key.is_empty() {
                return Ok((no, line.to_string()));
            }
            match line.split_once(' ') {
                Some((k, v)) if k == key => Ok((no, v.to_string())),
                _ => Err(CliError::parse(no, format!("expected `{key} ...`, found `{line}`"))),
            }
        };

        let (no, magic) = next("")?;
        if magic != MAGIC {
            return Err(CliError::parse(no, format!("missing `{MAGIC}` header")));
        }
        let (no, p) = next("p")?;
        let p: u64 = number(no, &p)?;
        let (no, e) = next("e")?;
        let e: u32 = number(no, &e)?;
        let (no, m) = next("modulus")?;
        let first = list(no, &m)?;

        let mut field = Field::prime(p)?;
        if first != [0, 1] {
            field = extend(&field, &first, no)?;
        }
        let mut pending = next("")?;
        while let Some(rest) = pending.1.strip_prefix("ext ") {
            field = extend(&field, &list(pending.0, rest)?, pending.0)?;
            pending = next("")?;
        }
        if field.degree() != e {
            return Err(CliError::parse(
                no,
                format!("modulus chain has degree {}, header says e = {e}", field.degree()),
            ));
        }

        let n = match pending.1.strip_prefix("n ") {
            Some(v) => number(pending.0, v)?,
            None => {
                return Err(CliError::parse(
                    pending.0,
                    format!("expected `n ...`, found `{}`", pending.1),
                ))
            }
        };
        let (no, k) = next("k")?;
        let k: usize = number(no, &k)?;
        if k == 0 {
            return Err(CliError::parse(no, "code has dimension 0".to_string()));
        }
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let (no, r) = next("row")?;
            let row = list(no, &r)?;
            if row.len() != n {
                return Err(CliError::parse(
                    no,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            if let Some(&bad) = row.iter().find(|&&c| c >= field.order()) {
                return Err(CliError::parse(
                    no,
                    format!("encoding {bad} out of range for GF({})", field.order()),
                ));
            }
            rows.push(row);
        }
        if let Ok((no, extra)) = next("") {
            if !extra.trim().is_empty() {
                return Err(CliError::parse(no, format!("trailing content `{extra}`")));
            }
        }
        Ok(CodeFile { field, n, rows })
    }
}

/// Degree `len - 1` extension over `base`, checked against the stored modulus.
fn extend(base: &Field, modulus: &[u32], line: usize) -> Result<Field, CliError> {
    if modulus.len() < 3 || *modulus.last().unwrap() != 1 {
        return Err(CliError::parse(
            line,
            "modulus must be monic of degree at least 2".to_string(),
        ));
    }
    let tower = ExtensionTower::new(base, modulus.len() - 1)?;
    if tower.modulus() != modulus {
        return Err(CliError::parse(
            line,
            format!(
                "unsupported modulus {}, expected the canonical {}",
                join(modulus),
                join(tower.modulus())
            ),
        ));
    }
    Ok(tower.top().clone())
}

fn number<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::parse(line, format!("`{s}` is not a number")))
}

fn list(line: usize, s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',').map(|t| number(line, t)).collect()
}
