//! File formats and JSON report construction.
//!
//! Biracks are stored as `{"n": int, "circ": [[int]], "bullet": [[int]]}`
//! and solutions as `{"n": int, "sigma": [[int]], "tau": [[int]]}`; all
//! tables are 0-indexed, row-major, integer-only.

use std::fs;
use std::path::Path;

use biracks::{Birack, GroupFingerprint, PropertyReport, Solution};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Serialize, Deserialize)]
pub struct BirackFile {
    pub n: usize,
    pub circ: Vec<Vec<usize>>,
    pub bullet: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SolutionFile {
    pub n: usize,
    pub sigma: Vec<Vec<usize>>,
    pub tau: Vec<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum InputFile {
    Birack(BirackFile),
    Solution(SolutionFile),
}

/// A loaded input: always a birack, plus the solution tables when the
/// file used the solution form.
pub struct LoadedInput {
    pub birack: Birack,
    pub solution: Option<Solution>,
}

pub enum LoadError {
    /// Unreadable or unparsable input: usage error (exit 2).
    Io(String),
    /// Structurally readable but not a valid birack/solution (exit 1).
    Invalid(String),
}

pub fn load_input(path: &Path) -> Result<LoadedInput, LoadError> {
    let text = fs::read_to_string(path)
        .map_err(|e| LoadError::Io(format!("cannot read {}: {e}", path.display())))?;
    let parsed: InputFile = serde_json::from_str(&text)
        .map_err(|e| LoadError::Io(format!("cannot parse {}: {e}", path.display())))?;
    match parsed {
        InputFile::Birack(f) => {
            let birack = Birack::validate(f.n, flatten(&f.circ, f.n)?, flatten(&f.bullet, f.n)?)
                .map_err(|e| LoadError::Invalid(e.to_string()))?;
            Ok(LoadedInput {
                birack,
                solution: None,
            })
        }
        InputFile::Solution(f) => {
            let solution = Solution::new(f.n, flatten(&f.sigma, f.n)?, flatten(&f.tau, f.n)?)
                .map_err(|e| LoadError::Invalid(e.to_string()))?;
            let birack = solution
                .to_birack()
                .map_err(|e| LoadError::Invalid(e.to_string()))?;
            Ok(LoadedInput {
                birack,
                solution: Some(solution),
            })
        }
    }
}

fn flatten(table: &[Vec<usize>], n: usize) -> Result<Vec<usize>, LoadError> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(LoadError::Invalid(format!("table is not {n}×{n}")));
    }
    Ok(table.iter().flatten().copied().collect())
}

pub fn rows(table: &[usize], n: usize) -> Vec<Vec<usize>> {
    table.chunks(n).map(|r| r.to_vec()).collect()
}

pub fn birack_json(b: &Birack) -> Value {
    json!({
        "n": b.n(),
        "circ": rows(b.circ_table(), b.n()),
        "bullet": rows(b.bullet_table(), b.n()),
    })
}

pub fn fingerprint_json(f: &GroupFingerprint) -> Value {
    json!({
        "order": f.order,
        "abelian": f.abelian,
        "nilpotency_class": f.nilpotency_class,
    })
}

pub fn report_json(r: &PropertyReport) -> Value {
    json!({
        "involutive": r.involutive,
        "idempotent": r.idempotent,
        "square_free": r.square_free,
        "left_distributive": r.left_distributive,
        "right_distributive": r.right_distributive,
        "distributive": r.distributive,
        "permutational": r.permutational,
        "projection": r.projection,
        "left_derived": r.left_derived,
        "right_derived": r.right_derived,
        "lmlt": fingerprint_json(&r.lmlt),
        "rmlt": fingerprint_json(&r.rmlt),
        "mlt": fingerprint_json(&r.mlt),
    })
}
