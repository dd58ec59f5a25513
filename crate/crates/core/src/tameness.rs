//! Tameness: every eigenvalue is zero or a root of unity.
//!
//! A rational polynomial of degree `d` can only vanish at roots of unity of
//! order `m` with `φ(m) ≤ d`, so `B(d) = lcm{m : φ(m) ≤ d}` is a uniform
//! exponent: `x` of size at most `d` is tame iff every eigenvalue of `x^B`
//! lies in `{0, 1}`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::growth::{product_levels, GeneratorSet};
use crate::linalg::{block_decompose, char_poly, span_closure, BlockDecomposition, Matrix, Polynomial, Subspace};

/// The cyclotomic exponent `B(d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycloBound {
    pub dim: usize,
    pub exponent: u64,
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `B(d) = lcm{m ≥ 1 : φ(m) ≤ d}`. Panics if `d = 0` or the lcm overflows
/// `u64` (around `d ≈ 40`).
pub fn cyclo_exponent(d: usize) -> CycloBound {
    assert!(d >= 1, "cyclotomic exponent needs d >= 1");
    let d = d as u64;
    // φ(m) ≥ sqrt(m/2), so every admissible m is at most 2d².
    let limit = 2 * d * d + 2;
    let exponent = (1..=limit)
        .filter(|&m| euler_phi(m) <= d)
        .fold(1u64, |acc, m| {
            let g = acc.gcd(&m);
            (acc / g).checked_mul(m).expect("cyclotomic exponent overflows u64")
        });
    CycloBound {
        dim: d as usize,
        exponent,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamenessWitness {
    pub matrix: Matrix,
    pub charpoly: Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TamenessVerdict {
    pub tame: bool,
    /// Present exactly when `tame` is false.
    pub witness: Option<TamenessWitness>,
}

/// Decides tameness by nilpotency: `x` is tame iff `(x^{2B} − x^B)^d = 0`
/// with `B = B(d)`.
pub fn is_tame_matrix(x: &Matrix, d: usize) -> Result<TamenessVerdict> {
    x.require_square()?;
    if x.rows() > d {
        return Err(Error::InvalidArgument(format!(
            "{}x{} matrix exceeds the declared dimension {d}",
            x.rows(),
            x.cols()
        )));
    }
    if x.rows() == 0 {
        return Ok(TamenessVerdict { tame: true, witness: None });
    }
    let b = cyclo_exponent(d).exponent;
    let xb = x.pow(b)?;
    let diff = xb.mul_unchecked(&xb).checked_sub(&xb)?;
    let tame = diff.pow(d as u64)?.is_zero();
    let witness = if tame {
        None
    } else {
        Some(TamenessWitness {
            matrix: x.clone(),
            charpoly: char_poly(x)?,
        })
    };
    Ok(TamenessVerdict { tame, witness })
}

/// Polynomial cross-check: a monic `p` of degree at most `d` has only roots
/// in `{0} ∪ μ_B` iff its squarefree part divides `x(x^B − 1)`.
pub fn is_tame_charpoly(p: &Polynomial, d: usize) -> Result<bool> {
    if !p.is_monic() {
        return Err(Error::NonMonic);
    }
    let deg = p.degree().unwrap_or(0);
    if deg > d {
        return Err(Error::InvalidArgument(format!(
            "degree {deg} exceeds the declared dimension {d}"
        )));
    }
    let b = cyclo_exponent(d.max(1)).exponent as usize;
    let annihilator = Polynomial::monomial(b + 1).sub(&Polynomial::monomial(1));
    Ok(p.squarefree_part().divides(&annihilator))
}

/// A change of basis that puts every generator in block upper-triangular
/// form `[[B_i, D_i], [0, C_i]]` with a split at `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTriangularization {
    pub change_of_basis: Matrix,
    pub split: usize,
    pub invariant_subspace: Subspace,
    pub blocks: Vec<BlockDecomposition>,
}

impl BlockTriangularization {
    /// Checks `U⁻¹ A_i U` against the assembled blocks for every generator.
    pub fn verify(&self, gens: &GeneratorSet) -> Result<bool> {
        let inv = self.change_of_basis.inverse()?;
        for (a, block) in gens.matrices().iter().zip(&self.blocks) {
            let conj = inv.mul(a)?.mul(&self.change_of_basis)?;
            if conj != block.assembled() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Triangularization {
    Found(BlockTriangularization),
    /// No proper invariant subspace was produced within budget. This is
    /// evidence that the semigroup is finite, not a proof.
    NotFound,
}

pub(crate) fn require_tame_generators(gens: &GeneratorSet) -> Result<()> {
    for (index, g) in gens.matrices().iter().enumerate() {
        let verdict = is_tame_matrix(g, gens.dim())?;
        if !verdict.tame {
            return Err(Error::NonTame {
                index,
                verdict: Box::new(verdict),
            });
        }
    }
    Ok(())
}

/// Columns of `X^{2a} − X^a`.
pub(crate) fn idempotent_defect(x: &Matrix, a: u64) -> Matrix {
    let xa = x.pow(a).expect("square");
    &xa.mul_unchecked(&xa) - &xa
}

/// Looks for a proper nonzero common invariant subspace seeded by the
/// images of `X^{2a} − X^a`, `a = B(d)`, over distinct products `X` of length
/// at most `word_budget` (default `2d`), closed under the generators.
pub fn block_triangularize(gens: &GeneratorSet, word_budget: Option<usize>) -> Result<Triangularization> {
    require_tame_generators(gens)?;
    let d = gens.dim();
    if d < 2 {
        return Ok(Triangularization::NotFound);
    }
    let a = cyclo_exponent(d).exponent;
    let budget = word_budget.unwrap_or(2 * d);
    let (levels, _) = product_levels(gens.matrices(), d, budget, usize::MAX);
    let seed: Vec<_> = levels
        .iter()
        .flatten()
        .flat_map(|p| idempotent_defect(&p.matrix, a).columns())
        .collect();
    let w = span_closure(d, &seed, gens.matrices())?;
    if w.is_zero() {
        return Ok(Triangularization::NotFound);
    }
    if w.is_full() {
        return Err(Error::InvalidGenerators(
            "generators are tame but the semigroup they generate is not".into(),
        ));
    }
    let blocks = gens
        .matrices()
        .iter()
        .map(|g| block_decompose(g, &w))
        .collect::<Result<Vec<_>>>()?;
    Ok(Triangularization::Found(BlockTriangularization {
        change_of_basis: w.extended_basis(),
        split: w.dim(),
        invariant_subspace: w,
        blocks,
    }))
}
