use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word over the alphabet `{1, …, m}`. Symbols are 1-based.
///
/// The product attached to `w = i₁ i₂ … i_s` is `A_{i₁} A_{i₂} ⋯ A_{i_s}`,
/// leftmost symbol outermost.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn new(symbols: Vec<usize>) -> Self {
        Self(symbols)
    }

    /// Reads a string of base-`m` digits `0…9`, mapping digit `c` to symbol
    /// `c + 1`. The binary string `"10"` becomes the word `21`.
    pub fn from_digits(digits: &str) -> Result<Self> {
        digits
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize + 1)
                    .ok_or_else(|| Error::InvalidArgument(format!("`{c}` is not a digit")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `symbol · self`.
    pub fn prepend(&self, symbol: usize) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(symbol);
        v.extend_from_slice(&self.0);
        Self(v)
    }

    pub fn push(&mut self, symbol: usize) {
        self.0.push(symbol);
    }

    pub fn check_alphabet(&self, alphabet: usize) -> Result<()> {
        match self.0.iter().find(|&&s| s == 0 || s > alphabet) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, alphabet }),
            None => Ok(()),
        }
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word(self.0[start..].to_vec())
    }

    /// Every word of length `len` over `{1, …, alphabet}` in lexicographic order.
    pub fn all_of_length(alphabet: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| {
                    (1..=alphabet).map(move |s| {
                        let mut w = w.clone();
                        w.push(s);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// Every word of length at most `max_len`, shortest first.
    pub fn all_up_to(alphabet: usize, max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(|n| Word::all_of_length(alphabet, n))
            .collect()
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// Words print as concatenated digits when every symbol is below 10, and
/// comma-separated otherwise. The empty word prints as `ε`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        if self.0.iter().all(|&s| s < 10) {
            for s in &self.0 {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `""`, `"ε"`, `"eps"`, a digit string such as `"112"`, or a
    /// comma-separated list such as `"1,12,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "eps" {
            return Ok(Word::empty());
        }
        let parse_err = || Error::InvalidArgument(format!("cannot parse word `{s}`"));
        if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| parse_err()))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<Vec<_>>>()
                .map(Word)
        }
    }
}
