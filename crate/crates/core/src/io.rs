//! JSON files for objects and morphisms.
//!
//! An object file is `{"n": 3, "pairs": [[0, 1], [1, 2]], "mode": "close"}`;
//! pairs are off-diagonal, and `mode` says whether the pairs must already
//! form a preorder (`strict`) or are closed into one (`close`). A morphism
//! file is `{"map": [0, 0, 1]}`, read against separately supplied endpoints.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::category::{BuildMode, Morph, PreObj};
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid input: {0}")]
    Invalid(#[from] Error),
    #[error("invalid input: pair ({0}, {0}) is on the diagonal")]
    DiagonalPair(usize),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Strict,
    Close,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectFile {
    n: usize,
    pairs: Vec<(usize, usize)>,
    mode: Mode,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismFile {
    map: Vec<usize>,
}

fn parse<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, LoadError> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: match e.to_string().rsplit_once(" at line ") {
            Some((head, _)) => head.to_string(),
            None => e.to_string(),
        },
    })
}

pub fn load_object(text: &str) -> Result<PreObj, LoadError> {
    let file: ObjectFile = parse(text)?;
    if let Some(&(i, _)) = file.pairs.iter().find(|(i, j)| i == j) {
        return Err(LoadError::DiagonalPair(i));
    }
    let mode = match file.mode {
        Mode::Strict => BuildMode::Strict,
        Mode::Close => BuildMode::Close,
    };
    Ok(PreObj::make(file.n, &file.pairs, mode)?)
}

/// Canonical text: every off-diagonal pair in row-major order, strict mode.
pub fn save_object(a: &PreObj) -> String {
    let file = ObjectFile { n: a.n(), pairs: a.rel().off_diagonal_pairs().collect(), mode: Mode::Strict };
    serde_json::to_string(&file).expect("plain data serializes")
}

pub fn load_morphism(text: &str, dom: &PreObj, cod: &PreObj) -> Result<Morph, LoadError> {
    let file: MorphismFile = parse(text)?;
    Ok(Morph::new(dom.clone(), cod.clone(), file.map)?)
}

pub fn save_morphism(f: &Morph) -> String {
    serde_json::to_string(&MorphismFile { map: f.map().to_vec() }).expect("plain data serializes")
}
