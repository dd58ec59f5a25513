//! Report files. Every field is plain data so a report can be re-read and
//! checked without rerunning the analysis.

use serde::{Deserialize, Serialize};

use semigrowth::growth::{Budgets, GrowthReport, MnTable, SlopeFit, Verdict};
use semigrowth::linalg::Rational;
use semigrowth::regseq::{InR0, SeqGrowthReport, SeqVerdict};

use crate::instance::{matrix_entries, Entry};

/// `k` for finite degrees, the string `"inf"` for exponential growth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Finite(usize),
    Infinite(Inf),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inf {
    #[serde(rename = "inf")]
    Inf,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCert {
    pub word: String,
    pub matrix: Vec<Vec<Entry>>,
    /// Ascending coefficients.
    pub charpoly: Vec<Entry>,
    pub charpoly_text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationCert {
    pub dims: Vec<usize>,
    /// Number of strict steps; the degree is `k − 1`.
    pub k: usize,
    pub quotient_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    /// The exponent `a = B(d)`.
    pub a: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessCert>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<FiltrationCert>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MnSection {
    pub norm: String,
    pub values: Vec<Entry>,
    pub frontier: Vec<usize>,
    pub truncated_from: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlopeSection {
    pub value: f64,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetSection {
    pub norm: String,
    pub max_n: usize,
    pub word_budget: usize,
    pub closure_cap: usize,
    pub frontier_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub tool: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub verdict: String,
    pub degree: Option<Degree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub certificates: Certificates,
    pub mn: MnSection,
    pub slope: Option<SlopeSection>,
    pub c1: Option<Entry>,
    pub c2: Option<Entry>,
    pub budgets: BudgetSection,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub tool: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub verdict: String,
    pub degree: Option<Degree>,
    /// `yes`, `no` or `inconclusive`.
    pub in_r0: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub minimized_dim: usize,
    pub max_abs: Vec<Entry>,
    pub slope: Option<SlopeSection>,
    pub bound_constant: Option<Entry>,
    /// Analysis of the minimized matrices; absent for dimension 0.
    pub matrices: Option<AnalysisReport>,
}

fn slope(s: &Option<SlopeFit>) -> Option<SlopeSection> {
    s.map(|s| SlopeSection {
        value: s.slope,
        from: s.from,
        to: s.to,
    })
}

fn mn(t: &MnTable) -> MnSection {
    MnSection {
        norm: t.norm.as_str().into(),
        values: t.values.iter().map(Entry::from).collect(),
        frontier: t.frontier_sizes.clone(),
        truncated_from: t.truncated_from,
    }
}

fn budgets(b: &Budgets, dim: usize) -> BudgetSection {
    BudgetSection {
        norm: b.norm.as_str().into(),
        max_n: b.max_n,
        word_budget: b.word_budget_for(dim),
        closure_cap: b.closure_cap,
        frontier_budget: b.frontier_budget,
    }
}

fn entry(r: &Rational) -> Entry {
    Entry::from(r)
}

impl AnalysisReport {
    pub fn new(r: &GrowthReport, dim: usize, timestamp: Option<u64>) -> Self {
        let mut certificates = Certificates {
            a: r.exponent,
            witness: None,
            filtration: None,
        };
        let (mut degree, mut reason, mut c1, mut c2) = (None, None, None, None);
        match &r.verdict {
            Verdict::Degenerate => {}
            Verdict::Polynomial(c) => {
                degree = Some(Degree::Finite(c.degree));
                certificates.filtration = Some(FiltrationCert {
                    dims: c.filtration.dims(),
                    k: c.filtration.length(),
                    quotient_sizes: c.filtration.quotient_sizes.clone(),
                });
                c1 = Some(entry(&c.c1));
                c2 = Some(entry(&c.c2));
            }
            Verdict::Exponential(w) => {
                degree = Some(Degree::Infinite(Inf::Inf));
                certificates.witness = Some(WitnessCert {
                    word: w.word.to_string(),
                    matrix: matrix_entries(&w.matrix),
                    charpoly: w.charpoly.coeffs().iter().map(entry).collect(),
                    charpoly_text: w.charpoly.to_string(),
                });
            }
            Verdict::Inconclusive { reason: why } => reason = Some(why.clone()),
        }
        Self {
            tool: "semigrowth".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            timestamp,
            verdict: r.verdict.name().into(),
            degree,
            reason,
            certificates,
            mn: mn(&r.mn),
            slope: slope(&r.slope),
            c1,
            c2,
            budgets: budgets(&r.budgets, dim),
        }
    }
}

impl SequenceReport {
    pub fn new(r: &SeqGrowthReport, timestamp: Option<u64>) -> Self {
        let (degree, reason) = match &r.verdict {
            SeqVerdict::Degenerate => (None, None),
            SeqVerdict::FiniteDegree(k) => (Some(Degree::Finite(*k)), None),
            SeqVerdict::Infinite => (Some(Degree::Infinite(Inf::Inf)), None),
            SeqVerdict::Inconclusive { reason } => (None, Some(reason.clone())),
        };
        Self {
            tool: "semigrowth".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            timestamp,
            verdict: r.verdict.name().into(),
            degree,
            in_r0: match r.in_r0 {
                InR0::Yes => "yes",
                InR0::No => "no",
                InR0::Inconclusive => "inconclusive",
            }
            .into(),
            reason,
            minimized_dim: r.minimized_dim,
            max_abs: r.max_abs.iter().map(entry).collect(),
            slope: slope(&r.slope),
            bound_constant: r.bound_constant.as_ref().map(entry),
            matrices: r
                .growth
                .as_ref()
                .map(|g| AnalysisReport::new(g, r.minimized_dim, None)),
        }
    }
}
