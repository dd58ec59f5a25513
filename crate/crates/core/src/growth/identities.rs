use crate::error::{Error, Result};
use crate::linalg::{dot, rat, Matrix, Rational};

/// Checks, exactly, the telescoping identity for `n ≥ 4`:
///
/// ```text
/// X^{na} − X^a = (X^{2a} − X^a)² Σ_{i=0}^{n−4} (n−3−i) X^{ai}
///              + n (X^{3a} − X^{2a}) − (X^{2a} − X^a)(2X^a − I)
/// ```
pub fn verify_telescoping(x: &Matrix, a: u64, n: u64) -> Result<bool> {
    x.require_square()?;
    if n < 4 {
        return Err(Error::InvalidArgument(format!("telescoping identity needs n >= 4, got {n}")));
    }
    let d = x.rows();
    let id = Matrix::identity(d);
    let xa = x.pow(a)?;
    let x2a = xa.mul_unchecked(&xa);
    let x3a = x2a.mul_unchecked(&xa);

    let lhs = &x.pow(n * a)? - &xa;

    let defect = &x2a - &xa;
    let mut weighted = Matrix::zeros(d, d);
    let mut power = id.clone();
    for i in 0..=n - 4 {
        weighted = &weighted + &power.scale(&rat((n - 3 - i) as i64));
        power = power.mul_unchecked(&xa);
    }
    let quadratic = defect.mul_unchecked(&defect).mul_unchecked(&weighted);
    let linear = (&x3a - &x2a).scale(&rat(n as i64));
    let correction = defect.mul_unchecked(&(&xa.scale(&rat(2)) - &id));
    let rhs = &(&quadratic + &linear) - &correction;
    Ok(lhs == rhs)
}

/// One factor `X^n Z` of `g(n) = wᵀ (Π X_iⁿ Z_i) v`.
#[derive(Clone, Debug)]
pub struct ProgressionFactor {
    pub base: Matrix,
    pub tail: Matrix,
}

/// `g(n) = wᵀ (Π X_iⁿ Z_i) v`.
pub fn progression_value(factors: &[ProgressionFactor], w: &[Rational], v: &[Rational], n: u64) -> Result<Rational> {
    let mut vec = v.to_vec();
    for f in factors.iter().rev() {
        vec = f.tail.mul_vec(&vec)?;
        vec = f.base.pow(n)?.mul_vec(&vec)?;
    }
    if w.len() != vec.len() {
        return Err(Error::DimensionMismatch {
            op: "progression_value",
            left: (1, w.len()),
            right: (vec.len(), 1),
        });
    }
    Ok(dot(w, &vec))
}

/// `order`-th forward differences of `values`.
pub fn finite_differences(values: &[Rational], order: usize) -> Vec<Rational> {
    let mut cur = values.to_vec();
    for _ in 0..order {
        cur = cur.windows(2).map(|p| &p[1] - &p[0]).collect();
    }
    cur
}

/// For every residue `ℓ ∈ {0, …, s−1}`, checks that `n ↦ g(sn + ℓ)` agrees
/// with a polynomial of degree at most `D = d · (number of factors)` by
/// sampling `n = d, …, d + D + 2` and requiring the `(D+1)`-th differences to
/// vanish.
pub fn poly_progression_check(
    factors: &[ProgressionFactor],
    v: &[Rational],
    w: &[Rational],
    step: u64,
    d: usize,
) -> Result<bool> {
    if step == 0 {
        return Err(Error::InvalidArgument("progression step must be positive".into()));
    }
    let degree_bound = d * factors.len();
    let start = d as u64;
    for ell in 0..step {
        let values = (start..=start + degree_bound as u64 + 2)
            .map(|n| progression_value(factors, w, v, step * n + ell))
            .collect::<Result<Vec<_>>>()?;
        if finite_differences(&values, degree_bound + 1).iter().any(|x| *x != rat(0)) {
            return Ok(false);
        }
    }
    Ok(true)
}
