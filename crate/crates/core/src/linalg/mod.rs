//! Exact dense linear algebra over the rationals.
//!
//! Nothing in this module touches floating point: matrices, echelon bases,
//! characteristic polynomials and norms are all exact.

mod matrix;
mod poly;
mod subspace;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

pub use matrix::{dot, mat_mul, mat_pow, Matrix};
pub use poly::{char_poly, Polynomial};
pub use subspace::{block_decompose, quotient, restrict, span_closure, BlockDecomposition, Subspace};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Which quantity `m_n` maximizes over products.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NormKind {
    /// Maximum absolute row sum. Integer-valued on integer matrices.
    #[default]
    InfOperator,
    /// `Tr(A Aᵀ)`, the sum of squared entries. This is the square of the
    /// Frobenius norm and is not itself homogeneous of degree one, so its
    /// growth exponent is twice that of a true norm.
    FrobeniusSq,
}

impl NormKind {
    /// Exponent relating this quantity to a degree-one norm: a set with
    /// `m_n ≍ n^k` under a norm has `n^(k · homogeneity)` here.
    pub fn homogeneity(self) -> u32 {
        match self {
            NormKind::InfOperator => 1,
            NormKind::FrobeniusSq => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NormKind::InfOperator => "inf_operator",
            NormKind::FrobeniusSq => "frobenius_sq",
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf_operator" | "inf" => Ok(NormKind::InfOperator),
            "frobenius_sq" | "frobenius" => Ok(NormKind::FrobeniusSq),
            other => Err(format!("unknown norm kind `{other}` (expected inf_operator or frobenius_sq)")),
        }
    }
}

pub fn norm(a: &Matrix, kind: NormKind) -> Rational {
    match kind {
        NormKind::InfOperator => (0..a.rows())
            .map(|i| a.row(i).iter().map(|x| x.abs()).sum::<Rational>())
            .max()
            .unwrap_or_else(|| rat(0)),
        NormKind::FrobeniusSq => a.entries().iter().map(|x| x * x).sum(),
    }
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (q != BigInt::from(0)).then(|| Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
