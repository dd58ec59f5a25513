//! Instance files: one JSON object with a `kind` tag.
//!
//! ```json
//! {"kind": "matrix_set", "dim": 2, "matrices": [[[1, 1], [0, 1]]]}
//! {"kind": "linrep", "alphabet": 2, "dim": 2, "row": [1, 0], "matrices": [...], "col": [0, 1]}
//! {"kind": "dfao", "alphabet": 2, "states": 2, "initial": 0,
//!  "transitions": [[0, 1], [1, 0]], "output": [0, 1]}
//! ```
//!
//! Entries are integers or `"p/q"` strings. Output always uses strings.

use serde::{Deserialize, Serialize};

use semigrowth::growth::GeneratorSet;
use semigrowth::linalg::{parse_rational, Matrix, Rational};
use semigrowth::regseq::{from_dfao, Dfao, LinRep};

use crate::CliError;

/// A rational entry as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Entry::Int(n) => Ok(Rational::from_integer((*n).into())),
            Entry::Text(s) => parse_rational(s).ok_or_else(|| CliError::Input(format!("`{s}` is not a rational number"))),
        }
    }
}

impl From<&Rational> for Entry {
    fn from(r: &Rational) -> Self {
        Entry::Text(r.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Instance {
    MatrixSet {
        dim: usize,
        matrices: Vec<Vec<Vec<Entry>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Linrep {
        alphabet: usize,
        dim: usize,
        row: Vec<Entry>,
        matrices: Vec<Vec<Vec<Entry>>>,
        col: Vec<Entry>,
    },
    Dfao {
        alphabet: usize,
        states: usize,
        initial: usize,
        transitions: Vec<Vec<usize>>,
        output: Vec<Entry>,
    },
}

impl Instance {
    /// Parses JSON text; syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Instance::MatrixSet { .. } => "matrix_set",
            Instance::Linrep { .. } => "linrep",
            Instance::Dfao { .. } => "dfao",
        }
    }

    pub fn to_generators(&self) -> Result<GeneratorSet, CliError> {
        let Instance::MatrixSet { dim, matrices, labels } = self else {
            return Err(CliError::Input(format!("expected a matrix_set instance, got {}", self.kind())));
        };
        let ms = matrices
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(m, *dim, &format!("matrix {}", i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        let gens = GeneratorSet::new(ms).map_err(|e| CliError::Input(e.to_string()))?;
        match labels {
            Some(l) => gens.with_labels(l.clone()).map_err(|e| CliError::Input(e.to_string())),
            None => Ok(gens),
        }
    }

    /// Linear representations directly; DFAOs through the state-indicator
    /// construction.
    pub fn to_linrep(&self) -> Result<LinRep, CliError> {
        match self {
            Instance::Linrep {
                alphabet,
                dim,
                row,
                matrices,
                col,
            } => {
                if matrices.len() != *alphabet {
                    return Err(CliError::Input(format!(
                        "alphabet is {alphabet} but {} matrices are given",
                        matrices.len()
                    )));
                }
                let row = vector(row, *dim, "row")?;
                let col = vector(col, *dim, "col")?;
                let ms = matrices
                    .iter()
                    .enumerate()
                    .map(|(i, m)| matrix(m, *dim, &format!("matrix {}", i + 1)))
                    .collect::<Result<Vec<_>, _>>()?;
                LinRep::new(row, ms, col).map_err(|e| CliError::Input(e.to_string()))
            }
            Instance::Dfao { .. } => Ok(from_dfao(&self.to_dfao()?)),
            Instance::MatrixSet { .. } => Err(CliError::Input("expected a linrep or dfao instance, got matrix_set".into())),
        }
    }

    pub fn to_dfao(&self) -> Result<Dfao, CliError> {
        let Instance::Dfao {
            alphabet,
            states,
            initial,
            transitions,
            output,
        } = self
        else {
            return Err(CliError::Input(format!("expected a dfao instance, got {}", self.kind())));
        };
        if transitions.len() != *alphabet {
            return Err(CliError::Input(format!(
                "alphabet is {alphabet} but {} transition maps are given",
                transitions.len()
            )));
        }
        let outputs = vector(output, *states, "output")?;
        Dfao::new(*states, *initial, transitions.clone(), outputs).map_err(|e| CliError::Input(e.to_string()))
    }

    pub fn from_linrep(rep: &LinRep) -> Self {
        Instance::Linrep {
            alphabet: rep.alphabet(),
            dim: rep.dim(),
            row: rep.row().iter().map(Entry::from).collect(),
            matrices: rep.matrices().iter().map(matrix_entries).collect(),
            col: rep.col().iter().map(Entry::from).collect(),
        }
    }

    pub fn from_generators(gens: &GeneratorSet) -> Self {
        Instance::MatrixSet {
            dim: gens.dim(),
            matrices: gens.matrices().iter().map(matrix_entries).collect(),
            labels: gens.labels().map(<[String]>::to_vec),
        }
    }
}

pub fn matrix_entries(m: &Matrix) -> Vec<Vec<Entry>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(Entry::from).collect())
        .collect()
}

fn vector(entries: &[Entry], dim: usize, what: &str) -> Result<Vec<Rational>, CliError> {
    if entries.len() != dim {
        return Err(CliError::Input(format!("{what} has {} entries, expected {dim}", entries.len())));
    }
    entries.iter().map(Entry::to_rational).collect()
}

fn matrix(rows: &[Vec<Entry>], dim: usize, what: &str) -> Result<Matrix, CliError> {
    if rows.len() != dim {
        return Err(CliError::Input(format!("{what} has {} rows, expected {dim}", rows.len())));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, dim, &format!("{what}, row {}", i + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).map_err(|e| CliError::Input(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_set_round_trip() {
        let text = r#"{"kind": "matrix_set", "dim": 2, "matrices": [[[1, "2/4"], [0, -1]]]}"#;
        let inst = Instance::parse(text).unwrap();
        let err = inst.to_generators().unwrap_err();
        assert!(err.to_string().contains("non-integer"));
        let back = Instance::parse(&serde_json::to_string(&inst).unwrap()).unwrap();
        assert_eq!(back, inst);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = Instance::parse("{\n  \"kind\": \"matrix_set\",\n  \"dim\": 2,,\n}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn shape_errors() {
        let text = r#"{"kind": "matrix_set", "dim": 2, "matrices": [[[1, 2]]]}"#;
        assert!(Instance::parse(text).unwrap().to_generators().is_err());
        let text = r#"{"kind": "linrep", "alphabet": 2, "dim": 1, "row": [1], "matrices": [[[1]]], "col": [1]}"#;
        assert!(Instance::parse(text).unwrap().to_linrep().is_err());
        let text = r#"{"kind": "dfao", "alphabet": 1, "states": 2, "initial": 0, "transitions": [[0, 3]], "output": [0, 1]}"#;
        assert!(Instance::parse(text).unwrap().to_linrep().is_err());
    }

    #[test]
    fn unknown_kind_is_rejected() {
        assert!(Instance::parse(r#"{"kind": "graph"}"#).is_err());
    }
}
