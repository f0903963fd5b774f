//! JSON file formats for matroids, matrices and Chow classes.
//!
//! Matroid: `{"n": 4, "r": 2, "bases": [[1,2],[1,3]]}`.
//! Matrix: `{"rows": 2, "cols": 3, "entries": [[1, "1/2", 0], [0, 1, -3]]}`.
//! Writers emit compact JSON followed by a newline, so reading a written file
//! and writing it again reproduces the same bytes.

use std::fs;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{from_rational_matrix, Matroid, RationalMatrix};
use crate::schubert::ChowClass;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidFile {
    n: usize,
    r: usize,
    bases: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(IntNumber),
    Text(String),
}

/// An integer written as a bare JSON number.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntNumber {
    Signed(i64),
    Unsigned(u64),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Entry>>,
}

fn malformed(e: impl std::fmt::Display) -> Error {
    Error::MalformedInput(e.to_string())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

pub fn matroid_from_json(text: &str) -> Result<Matroid> {
    let file: MatroidFile = serde_json::from_str(text).map_err(malformed)?;
    Matroid::from_bases(file.n, file.r, file.bases)
}

pub fn matroid_to_json(m: &Matroid) -> String {
    let file = MatroidFile {
        n: m.ground_set_size(),
        r: m.rank(),
        bases: m.bases(),
    };
    serde_json::to_string(&file).expect("matroid serializes") + "\n"
}

pub fn read_matroid(path: &Path) -> Result<Matroid> {
    matroid_from_json(&read(path)?)
}

pub fn write_matroid(path: &Path, m: &Matroid) -> Result<()> {
    write(path, &matroid_to_json(m))
}

pub fn matrix_from_json(text: &str) -> Result<RationalMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(malformed)?;
    if file.entries.len() != file.rows || file.entries.iter().any(|row| row.len() != file.cols) {
        return Err(Error::InvalidDimensions(format!(
            "entries do not form a {}x{} matrix",
            file.rows, file.cols
        )));
    }
    let strings: Vec<Vec<String>> = file
        .entries
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|e| match e {
                    Entry::Int(IntNumber::Signed(x)) => x.to_string(),
                    Entry::Int(IntNumber::Unsigned(x)) => x.to_string(),
                    Entry::Text(s) => s,
                })
                .collect()
        })
        .collect();
    RationalMatrix::parse(&strings)
}

fn entry_of(x: &BigRational) -> Entry {
    if !x.is_integer() {
        return Entry::Text(format!("{}/{}", x.numer(), x.denom()));
    }
    match i64::try_from(x.to_integer()) {
        Ok(v) => Entry::Int(IntNumber::Signed(v)),
        Err(_) => Entry::Text(x.numer().to_string()),
    }
}

pub fn matrix_to_json(a: &RationalMatrix) -> String {
    let file = MatrixFile {
        rows: a.rows(),
        cols: a.cols(),
        entries: a
            .entries()
            .iter()
            .map(|row| row.iter().map(entry_of).collect())
            .collect(),
    };
    serde_json::to_string(&file).expect("matrix serializes") + "\n"
}

pub fn read_matrix(path: &Path) -> Result<RationalMatrix> {
    matrix_from_json(&read(path)?)
}

pub fn write_matrix(path: &Path, a: &RationalMatrix) -> Result<()> {
    write(path, &matrix_to_json(a))
}

/// The column matroid of a matrix file; the rank is the number of rows.
pub fn read_matrix_matroid(path: &Path) -> Result<Matroid> {
    let a = read_matrix(path)?;
    from_rational_matrix(&a, a.rows())
}

pub fn class_from_json(text: &str) -> Result<ChowClass> {
    serde_json::from_str(text).map_err(malformed)
}

pub fn class_to_json(c: &ChowClass) -> String {
    serde_json::to_string(c).expect("class serializes") + "\n"
}

pub fn read_class(path: &Path) -> Result<ChowClass> {
    class_from_json(&read(path)?)
}
