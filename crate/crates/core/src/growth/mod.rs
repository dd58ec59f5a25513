//! Growth of `m_n(A)`, the maximal norm over products of length `n`.
//!
//! The classification pipeline is:
//!
//! 1. all products of length `d` vanish → degenerate;
//! 2. some product is not tame → exponential (for integer matrices a
//!    non-tame product has an eigenvalue of modulus > 1 by Kronecker's
//!    theorem);
//! 3. otherwise the invariant filtration of length `k` gives
//!    `m_n ≍ n^{k−1}`.
//!
//! The brute-force `m_n` table is attached as evidence only; it never
//! decides a verdict.

mod filtration;
mod identities;
mod products;

use std::collections::HashSet;

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{char_poly, Matrix, NormKind, Polynomial, Rational};
use crate::tameness::{cyclo_exponent, is_tame_matrix};
use crate::word::Word;

pub use filtration::{filtration, Filtration, FiltrationBudgets, FiltrationOutcome};
pub use identities::{finite_differences, poly_progression_check, progression_value, verify_telescoping, ProgressionFactor};
pub(crate) use products::product_levels;
pub use products::{detect_degenerate, mn_bruteforce, semigroup_closure, Closure, MnTable, Product};

/// A finite set `{A_1, …, A_m}` of `d × d` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    dim: usize,
    matrices: Vec<Matrix>,
    labels: Option<Vec<String>>,
}

impl GeneratorSet {
    /// Integer generators. Rejects empty sets, non-square or mismatched
    /// shapes, and non-integer entries.
    pub fn new(matrices: Vec<Matrix>) -> Result<Self> {
        let set = Self::from_rational(matrices)?;
        if let Some(i) = set.matrices.iter().position(|m| !m.is_integer()) {
            return Err(Error::InvalidGenerators(format!("generator {} has non-integer entries", i + 1)));
        }
        Ok(set)
    }

    /// Generators with arbitrary rational entries.
    ///
    /// Used for the actions induced on subspaces and quotients of an integer
    /// representation (minimized linear representations, for instance). The
    /// characteristic polynomials of such products divide those of integer
    /// products, so non-tame witnesses remain valid certificates of
    /// exponential growth.
    pub fn from_rational(matrices: Vec<Matrix>) -> Result<Self> {
        let first = matrices
            .first()
            .ok_or_else(|| Error::InvalidGenerators("need at least one generator".into()))?;
        let dim = first.rows();
        if dim == 0 {
            return Err(Error::InvalidGenerators("generators must have dimension at least 1".into()));
        }
        if let Some(i) = matrices.iter().position(|m| m.shape() != (dim, dim)) {
            return Err(Error::InvalidGenerators(format!(
                "generator {} is {}x{}, expected {dim}x{dim}",
                i + 1,
                matrices[i].rows(),
                matrices[i].cols()
            )));
        }
        Ok(Self {
            dim,
            matrices,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.matrices.len() {
            return Err(Error::InvalidGenerators(format!(
                "{} labels for {} generators",
                labels.len(),
                self.matrices.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alphabet(&self) -> usize {
        self.matrices.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_integer(&self) -> bool {
        self.matrices.iter().all(Matrix::is_integer)
    }

    /// `A_w = A_{i₁} ⋯ A_{i_s}`.
    pub fn product(&self, word: &Word) -> Result<Matrix> {
        word.check_alphabet(self.alphabet())?;
        Ok(word
            .symbols()
            .iter()
            .fold(Matrix::identity(self.dim), |acc, &s| acc.mul_unchecked(&self.matrices[s - 1])))
    }

    /// `U⁻¹ A_i U` for every generator.
    pub fn conjugate(&self, u: &Matrix) -> Result<GeneratorSet> {
        let inv = u.inverse()?;
        let matrices = self
            .matrices
            .iter()
            .map(|a| inv.mul(a)?.mul(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            dim: self.dim,
            matrices,
            labels: self.labels.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialWitness {
    pub word: Word,
    pub matrix: Matrix,
    pub charpoly: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExponentialSearch {
    Witness(ExponentialWitness),
    NotFound {
        searched_len: usize,
        /// The frontier budget stopped the search before `max_word_len`.
        exhausted: bool,
    },
}

/// Searches distinct products of length `1..=max_word_len`, in canonical
/// order, for one that is not tame.
pub fn detect_exponential(gens: &GeneratorSet, max_word_len: usize, frontier_budget: usize) -> Result<ExponentialSearch> {
    let d = gens.dim();
    let mut checked: HashSet<Matrix> = HashSet::new();
    let mut frontier = vec![Product::identity(d)];
    for len in 1..=max_word_len {
        if frontier.len() > frontier_budget {
            return Ok(ExponentialSearch::NotFound {
                searched_len: len - 1,
                exhausted: true,
            });
        }
        frontier = products::expand(&frontier, gens.matrices());
        let fresh: Vec<&Product> = frontier.iter().filter(|p| !checked.contains(&p.matrix)).collect();
        let verdicts = fresh
            .par_iter()
            .map(|p| is_tame_matrix(&p.matrix, d).map(|v| v.tame))
            .collect::<Result<Vec<_>>>()?;
        if let Some(idx) = verdicts.iter().position(|tame| !tame) {
            let p = fresh[idx];
            return Ok(ExponentialSearch::Witness(ExponentialWitness {
                word: p.word.clone(),
                matrix: p.matrix.clone(),
                charpoly: char_poly(&p.matrix)?,
            }));
        }
        checked.extend(fresh.into_iter().map(|p| p.matrix.clone()));
    }
    Ok(ExponentialSearch::NotFound {
        searched_len: max_word_len,
        exhausted: false,
    })
}

/// Budgets for [`growth_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Length of the attached `m_n` table.
    pub max_n: usize,
    /// Word length for witness search and filtration seeds; `None` means `2d`.
    pub word_budget: Option<usize>,
    pub closure_cap: usize,
    /// Maximum number of distinct products kept per length.
    pub frontier_budget: usize,
    pub norm: NormKind,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            max_n: 32,
            word_budget: None,
            closure_cap: 1_000_000,
            frontier_budget: 200_000,
            norm: NormKind::InfOperator,
        }
    }
}

impl Budgets {
    pub fn word_budget_for(&self, dim: usize) -> usize {
        self.word_budget.unwrap_or(2 * dim)
    }

    fn filtration(&self) -> FiltrationBudgets {
        FiltrationBudgets {
            word_budget: self.word_budget,
            closure_cap: self.closure_cap,
            frontier_budget: self.frontier_budget,
        }
    }
}

/// Least-squares slope of `ln m_n` against `ln n` over `from..=to`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlopeFit {
    pub slope: f64,
    pub from: usize,
    pub to: usize,
}

/// Fits `ln y` against `ln n` over the points with `n ≥ 1` and `y > 0`.
pub fn fit_log_slope(points: &[(usize, Rational)]) -> Option<SlopeFit> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(n, y)| *n >= 1 && *y > Rational::zero())
        .map(|(n, y)| ((*n as f64).ln(), ratio_ln(y)))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let from = points.iter().map(|p| p.0).filter(|&n| n >= 1).min()?;
    let to = points.iter().map(|p| p.0).max()?;
    Some(SlopeFit {
        slope: sxy / sxx,
        from,
        to,
    })
}

/// Natural log of a positive rational, computed from the integer bit
/// lengths so huge values do not overflow `f64`.
fn ratio_ln(x: &Rational) -> f64 {
    fn big_ln(n: &num_bigint::BigInt) -> f64 {
        let bits = n.bits();
        if bits <= 1000 {
            return n.to_f64().unwrap_or(f64::INFINITY).ln();
        }
        let shift = bits - 64;
        let top = (n >> shift).to_f64().unwrap();
        top.ln() + shift as f64 * std::f64::consts::LN_2
    }
    big_ln(x.numer()) - big_ln(x.denom())
}

/// Fit over the top half `[N/2, N]` of the exact part of the table.
pub fn empirical_slope(table: &MnTable) -> Option<SlopeFit> {
    let top = table.reliable_max_n();
    let from = (top / 2).max(1);
    let points: Vec<(usize, Rational)> = (from..=top).map(|n| (n, table.values[n].clone())).collect();
    fit_log_slope(&points)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCertificate {
    /// `k − 1`, where `k` is the filtration length.
    pub degree: usize,
    pub filtration: Filtration,
    /// `min m_n / n^{h(k−1)}` over the exact range `1..=N`, with `h` the
    /// norm's homogeneity.
    pub c1: Rational,
    /// `max m_n / n^{h(k−1)}` over the same range.
    pub c2: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Degenerate,
    Polynomial(PolynomialCertificate),
    Exponential(ExponentialWitness),
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Degenerate => "Degenerate",
            Verdict::Polynomial(_) => "Polynomial",
            Verdict::Exponential(_) => "Exponential",
            Verdict::Inconclusive { .. } => "Inconclusive",
        }
    }

    /// Growth degree when polynomial.
    pub fn degree(&self) -> Option<usize> {
        match self {
            Verdict::Polynomial(c) => Some(c.degree),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthReport {
    pub verdict: Verdict,
    pub mn: MnTable,
    pub slope: Option<SlopeFit>,
    /// `a = B(d)`.
    pub exponent: u64,
    pub budgets: Budgets,
}

/// `min` and `max` of `m_n / n^p` over `1..=N` of the exact range.
fn sandwich_constants(table: &MnTable, power: u32) -> Option<(Rational, Rational)> {
    let top = table.reliable_max_n();
    let ratios: Vec<Rational> = (1..=top)
        .map(|n| &table.values[n] / Rational::from_integer(num_bigint::BigInt::from(n).pow(power)))
        .collect();
    Some((ratios.iter().min()?.clone(), ratios.iter().max()?.clone()))
}

/// Classifies the growth of `m_n` for `gens`.
///
/// Budget exhaustion never produces a wrong verdict: it degrades to
/// [`Verdict::Inconclusive`]. Errors are reserved for internal invariant
/// violations.
pub fn growth_degree(gens: &GeneratorSet, budgets: &Budgets) -> Result<GrowthReport> {
    let d = gens.dim();
    let exponent = cyclo_exponent(d).exponent;
    let mn = mn_bruteforce(gens, budgets.max_n, budgets.norm, budgets.frontier_budget);
    let slope = empirical_slope(&mn);
    let report = |verdict| GrowthReport {
        verdict,
        mn: mn.clone(),
        slope,
        exponent,
        budgets: *budgets,
    };

    if detect_degenerate(gens) {
        return Ok(report(Verdict::Degenerate));
    }
    if gens.is_integer() {
        // non-degenerate integer sets have a nonzero integer product at every length
        if let Some(n) = (0..=mn.reliable_max_n()).find(|&n| mn.values[n] < Rational::one()) {
            return Err(Error::Invariant(format!("m_{n} < 1 for a non-degenerate integer set")));
        }
    }

    let word_budget = budgets.word_budget_for(d);
    if let ExponentialSearch::Witness(w) = detect_exponential(gens, word_budget, budgets.frontier_budget)? {
        return Ok(report(Verdict::Exponential(w)));
    }

    // a non-tame generator would have been reported as a witness of length 1
    let outcome = filtration(gens, &budgets.filtration())?;
    let filt = match outcome {
        FiltrationOutcome::Complete(f) => f,
        FiltrationOutcome::Inconclusive { reason, .. } => {
            return Ok(report(Verdict::Inconclusive { reason }));
        }
    };
    if !filt.is_well_formed(d) {
        return Err(Error::Invariant(format!("malformed filtration {:?}", filt.dims())));
    }
    let degree = filt.degree();
    let power = budgets.norm.homogeneity() * degree as u32;
    let (c1, c2) = sandwich_constants(&mn, power).unwrap_or_else(|| (mn.values[0].clone(), mn.values[0].clone()));
    if c1 <= Rational::zero() {
        return Err(Error::Invariant("non-degenerate set with a vanishing m_n".into()));
    }
    Ok(report(Verdict::Polynomial(PolynomialCertificate {
        degree,
        filtration: filt,
        c1,
        c2,
    })))
}
