//! Exact growth classification for finitely generated semigroups of integer
//! matrices, and for regular sequences given by linear representations.
//!
//! For a finite set `A` of `d × d` integer matrices let `m_n(A)` be the
//! largest norm of a product of `n` of them. Exactly one of the following
//! holds:
//!
//! * every product of length `d` is zero (degenerate);
//! * `m_n` grows exponentially, witnessed by a product with an eigenvalue
//!   that is not zero or a root of unity;
//! * `C₁ n^k ≤ m_n ≤ C₂ n^k` for an integer `k ≥ 0`.
//!
//! All decisions are made with exact rational arithmetic.
//!
//! ```
//! use semigrowth::growth::{growth_degree, Budgets, GeneratorSet};
//! use semigrowth::linalg::Matrix;
//!
//! let gens = GeneratorSet::new(vec![Matrix::from_i64(&[&[1, 1], &[0, 1]])]).unwrap();
//! let report = growth_degree(&gens, &Budgets::default()).unwrap();
//! assert_eq!(report.verdict.degree(), Some(1));
//! ```

pub mod error;
pub mod growth;
pub mod linalg;
pub mod regseq;
pub mod tameness;
pub mod word;

pub use error::{Error, Result};
pub use linalg::{Matrix, NormKind, Polynomial, Rational};
pub use word::Word;
