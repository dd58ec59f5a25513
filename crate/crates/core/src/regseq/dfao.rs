use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

use super::LinRep;

/// A deterministic finite automaton with output over `{1, …, m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfao {
    states: usize,
    initial: usize,
    /// `transitions[i][p]` is the state reached from `p` on symbol `i + 1`.
    transitions: Vec<Vec<usize>>,
    outputs: Vec<Rational>,
}

impl Dfao {
    /// States are 0-based. Every symbol needs a total transition map.
    pub fn new(states: usize, initial: usize, transitions: Vec<Vec<usize>>, outputs: Vec<Rational>) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidArgument("a DFAO needs at least one state".into()));
        }
        if transitions.is_empty() {
            return Err(Error::InvalidArgument("alphabet must have at least one symbol".into()));
        }
        if initial >= states {
            return Err(Error::InvalidArgument(format!("initial state {initial} out of range")));
        }
        if outputs.len() != states {
            return Err(Error::InvalidArgument(format!(
                "{} outputs for {states} states",
                outputs.len()
            )));
        }
        for (i, map) in transitions.iter().enumerate() {
            if map.len() != states {
                return Err(Error::InvalidArgument(format!(
                    "transition map for symbol {} has {} entries, expected {states}",
                    i + 1,
                    map.len()
                )));
            }
            if let Some(q) = map.iter().find(|&&q| q >= states) {
                return Err(Error::InvalidArgument(format!(
                    "transition on symbol {} targets missing state {q}",
                    i + 1
                )));
            }
        }
        Ok(Self {
            states,
            initial,
            transitions,
            outputs,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn alphabet(&self) -> usize {
        self.transitions.len()
    }

    pub fn transitions(&self) -> &[Vec<usize>] {
        &self.transitions
    }

    pub fn outputs(&self) -> &[Rational] {
        &self.outputs
    }

    /// `δ*(initial, word)`, reading left to right.
    pub fn run(&self, word: &crate::word::Word) -> Result<usize> {
        word.check_alphabet(self.alphabet())?;
        Ok(word
            .symbols()
            .iter()
            .fold(self.initial, |p, &s| self.transitions[s - 1][p]))
    }
}

/// State-indicator representation: `(A_i)[p][q] = 1` iff `δ(p, i) = q`,
/// `row = e_initial`, `col = outputs`.
pub fn from_dfao(a: &Dfao) -> LinRep {
    let n = a.states;
    let matrices = a
        .transitions
        .iter()
        .map(|map| {
            let mut m = Matrix::zeros(n, n);
            for (p, &q) in map.iter().enumerate() {
                m.set(p, q, Rational::from_integer(1.into()));
            }
            m
        })
        .collect();
    let mut row = vec![Rational::from_integer(0.into()); n];
    row[a.initial] = Rational::from_integer(1.into());
    LinRep::new(row, matrices, a.outputs.clone()).expect("a valid DFAO has consistent shapes")
}
