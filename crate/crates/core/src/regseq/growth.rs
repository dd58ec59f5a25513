use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::growth::{fit_log_slope, growth_degree, Budgets, GeneratorSet, GrowthReport, SlopeFit, Verdict};
use crate::linalg::{dot, Rational};

use super::{minimize, LinRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeqBudgets {
    pub growth: Budgets,
    /// Longest word length in the empirical `max |f(w)|` scan.
    pub scan_len: usize,
}

impl Default for SeqBudgets {
    fn default() -> Self {
        Self {
            growth: Budgets::default(),
            scan_len: 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqVerdict {
    /// `f(w) = 0` for every sufficiently long `w`.
    Degenerate,
    FiniteDegree(usize),
    Infinite,
    Inconclusive { reason: String },
}

impl SeqVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            SeqVerdict::Degenerate => "Degenerate",
            SeqVerdict::FiniteDegree(_) => "FiniteDegree",
            SeqVerdict::Infinite => "Infinite",
            SeqVerdict::Inconclusive { .. } => "Inconclusive",
        }
    }
}

/// Membership in the class of sequences of finite growth degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InR0 {
    Yes,
    No,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeqGrowthReport {
    pub verdict: SeqVerdict,
    pub in_r0: InR0,
    pub minimized: LinRep,
    pub minimized_dim: usize,
    /// `None` when the minimized representation has dimension 0.
    pub growth: Option<GrowthReport>,
    /// `max_{|w| = n} |f(w)|` for `n = 0, 1, …` up to the scan length, or
    /// fewer lengths if the frontier budget stopped the scan.
    pub max_abs: Vec<Rational>,
    /// Log-log slope of `max_abs` over the top half of the scan.
    pub slope: Option<SlopeFit>,
    /// `max_{1 ≤ n} max_abs[n] / n^GrDeg` for finite degrees.
    pub bound_constant: Option<Rational>,
}

/// `max_{|w| = n} |f(w)|` for `n = 0..=max_len`.
///
/// Distinct row vectors `rowᵀ A_w` are kept per length, so repeated states
/// are evaluated once. Stops early if a length has more than
/// `frontier_budget` distinct vectors.
pub fn max_abs_by_length(rep: &LinRep, max_len: usize, frontier_budget: usize) -> Result<Vec<Rational>> {
    let value = |frontier: &BTreeSet<Vec<Rational>>| {
        frontier
            .iter()
            .map(|r| dot(r, rep.col()).abs())
            .max()
            .unwrap_or_else(Rational::zero)
    };
    let mut frontier: BTreeSet<Vec<Rational>> = BTreeSet::from([rep.row().to_vec()]);
    let mut out = vec![value(&frontier)];
    for _ in 1..=max_len {
        let mut next = BTreeSet::new();
        for r in &frontier {
            for a in rep.matrices() {
                next.insert(a.vec_mul(r)?);
            }
        }
        if next.len() > frontier_budget {
            break;
        }
        out.push(value(&next));
        frontier = next;
    }
    Ok(out)
}

/// Growth degree of the sequence, read off the minimized representation.
///
/// The degree comes from the algebraic pipeline; the `max |f(w)|` scan is
/// attached as corroborating evidence.
pub fn growth_degree_seq(rep: &LinRep, budgets: &SeqBudgets) -> Result<SeqGrowthReport> {
    let minimized = minimize(rep)?;
    let minimized_dim = minimized.dim();
    let max_abs = max_abs_by_length(rep, budgets.scan_len, budgets.growth.frontier_budget)?;
    let top = max_abs.len() - 1;
    let points: Vec<(usize, Rational)> = ((top / 2).max(1)..=top).map(|n| (n, max_abs[n].clone())).collect();
    let slope = fit_log_slope(&points);

    let (verdict, growth) = if minimized_dim == 0 {
        (SeqVerdict::Degenerate, None)
    } else {
        let gens = GeneratorSet::from_rational(minimized.matrices().to_vec())?;
        let report = growth_degree(&gens, &budgets.growth)?;
        let verdict = match &report.verdict {
            Verdict::Degenerate => SeqVerdict::Degenerate,
            Verdict::Polynomial(c) => SeqVerdict::FiniteDegree(c.degree),
            Verdict::Exponential(_) => SeqVerdict::Infinite,
            Verdict::Inconclusive { reason } => SeqVerdict::Inconclusive { reason: reason.clone() },
        };
        (verdict, Some(report))
    };
    let in_r0 = match verdict {
        SeqVerdict::Degenerate | SeqVerdict::FiniteDegree(_) => InR0::Yes,
        SeqVerdict::Infinite => InR0::No,
        SeqVerdict::Inconclusive { .. } => InR0::Inconclusive,
    };
    let bound_constant = match verdict {
        SeqVerdict::FiniteDegree(k) => (1..=top)
            .map(|n| &max_abs[n] / Rational::from_integer(BigInt::from(n).pow(k as u32)))
            .max(),
        _ => None,
    };
    Ok(SeqGrowthReport {
        verdict,
        in_r0,
        minimized,
        minimized_dim,
        growth,
        max_abs,
        slope,
        bound_constant,
    })
}
