//! Linear representations `f(w) = rowᵀ A_w col` of regular sequences on
//! words over `{1, …, m}`.

mod dfao;
mod growth;
mod minimize;
pub mod zoo;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, rat, Matrix, Rational};
use crate::word::Word;

pub use dfao::{from_dfao, Dfao};
pub use growth::{growth_degree_seq, max_abs_by_length, InR0, SeqBudgets, SeqGrowthReport, SeqVerdict};
pub use minimize::minimize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRep {
    row: Vec<Rational>,
    matrices: Vec<Matrix>,
    col: Vec<Rational>,
}

impl LinRep {
    /// Validates `m ≥ 1`, `d ≥ 1`, and consistent shapes.
    pub fn new(row: Vec<Rational>, matrices: Vec<Matrix>, col: Vec<Rational>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::InvalidArgument("representation dimension must be at least 1".into()));
        }
        Self::new_allow_empty(row, matrices, col)
    }

    /// Like [`LinRep::new`] but accepts dimension 0, which only arises as the
    /// minimal representation of the zero sequence.
    pub(crate) fn new_allow_empty(row: Vec<Rational>, matrices: Vec<Matrix>, col: Vec<Rational>) -> Result<Self> {
        let d = row.len();
        if matrices.is_empty() {
            return Err(Error::InvalidArgument("alphabet must have at least one symbol".into()));
        }
        if col.len() != d {
            return Err(Error::DimensionMismatch {
                op: "linrep",
                left: (1, d),
                right: (col.len(), 1),
            });
        }
        if let Some(m) = matrices.iter().find(|m| m.shape() != (d, d)) {
            return Err(Error::DimensionMismatch {
                op: "linrep",
                left: (d, d),
                right: m.shape(),
            });
        }
        Ok(Self { row, matrices, col })
    }

    pub fn from_i64(row: &[i64], matrices: Vec<Matrix>, col: &[i64]) -> Result<Self> {
        Self::new(
            row.iter().map(|&x| rat(x)).collect(),
            matrices,
            col.iter().map(|&x| rat(x)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.row.len()
    }

    pub fn alphabet(&self) -> usize {
        self.matrices.len()
    }

    pub fn row(&self) -> &[Rational] {
        &self.row
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn col(&self) -> &[Rational] {
        &self.col
    }

    fn check_alphabet(&self, other: &LinRep) -> Result<()> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet(),
                right: other.alphabet(),
            });
        }
        Ok(())
    }
}

/// `f(w) = rowᵀ A_{i₁} ⋯ A_{i_s} col`; `f(ε) = rowᵀ col`.
pub fn eval(rep: &LinRep, word: &Word) -> Result<Rational> {
    word.check_alphabet(rep.alphabet())?;
    let mut r = rep.row.clone();
    for &s in word.symbols() {
        r = rep.matrices[s - 1].vec_mul(&r)?;
    }
    Ok(dot(&r, &rep.col))
}

/// Block-diagonal representation of `f + λ g`.
pub fn add(f: &LinRep, g: &LinRep, scale: &Rational) -> Result<LinRep> {
    f.check_alphabet(g)?;
    let (df, dg) = (f.dim(), g.dim());
    let matrices = f
        .matrices
        .iter()
        .zip(&g.matrices)
        .map(|(a, b)| Matrix::from_blocks(a, &Matrix::zeros(df, dg), &Matrix::zeros(dg, df), b))
        .collect::<Result<Vec<_>>>()?;
    let row = f.row.iter().chain(&g.row).cloned().collect();
    let col = f
        .col
        .iter()
        .cloned()
        .chain(g.col.iter().map(|x| x * scale))
        .collect();
    LinRep::new_allow_empty(row, matrices, col)
}

/// Outer product `u vᵀ`.
fn outer(u: &[Rational], v: &[Rational]) -> Matrix {
    let mut m = Matrix::zeros(u.len(), v.len());
    for (i, a) in u.iter().enumerate() {
        for (j, b) in v.iter().enumerate() {
            m.set(i, j, a * b);
        }
    }
    m
}

/// Convolution `(f ⋆ g)(w) = Σ_{uv = w} f(u) g(v)` as a single
/// representation of dimension `f.d + g.d`:
///
/// ```text
/// M_i = [[A_i, col_f row_gᵀ B_i], [0, B_i]],  row = [row_f; 0],  col = [g(ε) col_f; col_g]
/// ```
///
/// The upper-right block of `M_w` collects every split with a nonempty
/// right factor; the `g(ε)` term adds the split with an empty one.
pub fn convolve(f: &LinRep, g: &LinRep) -> Result<LinRep> {
    f.check_alphabet(g)?;
    let (df, dg) = (f.dim(), g.dim());
    let link = outer(&f.col, &g.row);
    let matrices = f
        .matrices
        .iter()
        .zip(&g.matrices)
        .map(|(a, b)| Matrix::from_blocks(a, &link.mul(b)?, &Matrix::zeros(dg, df), b))
        .collect::<Result<Vec<_>>>()?;
    let g_empty = dot(&g.row, &g.col);
    let row = f
        .row
        .iter()
        .cloned()
        .chain(std::iter::repeat_n(Rational::zero(), dg))
        .collect();
    let col = f
        .col
        .iter()
        .map(|x| x * &g_empty)
        .chain(g.col.iter().cloned())
        .collect();
    LinRep::new_allow_empty(row, matrices, col)
}

/// Direct convolution sum over all `|w| + 1` splittings of `word`.
pub fn conv_oracle<F, G>(f: F, g: G, word: &Word) -> Rational
where
    F: Fn(&Word) -> Rational,
    G: Fn(&Word) -> Rational,
{
    (0..=word.len())
        .map(|j| f(&word.prefix(j)) * g(&word.suffix_from(j)))
        .sum()
}

/// The convolution identity: `1` on `ε`, `0` elsewhere.
pub fn epsilon_indicator(alphabet: usize) -> LinRep {
    LinRep::new(
        vec![Rational::one()],
        vec![Matrix::zeros(1, 1); alphabet],
        vec![Rational::one()],
    )
    .expect("valid shapes")
}
