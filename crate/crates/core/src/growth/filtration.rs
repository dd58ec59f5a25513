use crate::error::Result;
use crate::linalg::{block_decompose, span_closure, Matrix, Subspace};
use crate::tameness::{cyclo_exponent, idempotent_defect, require_tame_generators};

use super::products::{expand, semigroup_closure, Closure, Product};
use super::GeneratorSet;

/// The chain `V = V⁽⁰⁾ ⊋ V⁽¹⁾ ⊋ … ⊋ V⁽ᵏ⁾ = 0` where each term is the
/// invariant span of `Y (X^{2a} − X^a) V⁽ʲ⁾` over the semigroup acting on the
/// previous term. Its length `k` gives `m_n ≍ n^{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    /// The exponent `a = B(d)` used throughout.
    pub exponent: u64,
    /// All terms in ambient coordinates, from the full space down to zero.
    pub chain: Vec<Subspace>,
    /// Size of the finite semigroup induced on each successive quotient.
    pub quotient_sizes: Vec<usize>,
}

impl Filtration {
    /// Number of strict steps, `k`.
    pub fn length(&self) -> usize {
        self.chain.len().saturating_sub(1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }

    /// Degree of polynomial growth, `k − 1`.
    pub fn degree(&self) -> usize {
        self.length().saturating_sub(1)
    }

    /// Dimensions start at the ambient dimension, strictly decrease, and end
    /// at zero, with one quotient size per step.
    pub fn is_well_formed(&self, ambient_dim: usize) -> bool {
        let dims = self.dims();
        dims.first() == Some(&ambient_dim)
            && dims.last() == Some(&0)
            && dims.windows(2).all(|w| w[0] > w[1])
            && self.quotient_sizes.len() == self.length()
            && self.chain.windows(2).all(|w| w[1].is_subspace_of(&w[0]))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiltrationBudgets {
    /// Word length used for the `X` products; `None` means `2d`.
    pub word_budget: Option<usize>,
    pub closure_cap: usize,
    pub frontier_budget: usize,
}

impl Default for FiltrationBudgets {
    fn default() -> Self {
        Self {
            word_budget: None,
            closure_cap: 1_000_000,
            frontier_budget: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationOutcome {
    Complete(Filtration),
    /// A safety net tripped. `partial` holds the levels accepted so far.
    Inconclusive { reason: String, partial: Filtration },
}

/// The next term inside the current space, in the current coordinates.
///
/// Products are enumerated level by level; the level is accepted once the
/// word length is at least `budget + 2` and the subspace has not changed over
/// the last two lengths.
fn next_term(action: &[Matrix], dim: usize, exponent: u64, budget: usize, frontier_budget: usize) -> Result<Subspace> {
    let max_len = 2 * budget + 2;
    let mut frontier = vec![Product::identity(dim)];
    let mut term = Subspace::zero(dim);
    let mut unchanged = 0;
    for len in 0.. {
        let mut seed: Vec<_> = term.basis().to_vec();
        for p in &frontier {
            seed.extend(idempotent_defect(&p.matrix, exponent).columns());
        }
        let next = span_closure(dim, &seed, action)?;
        if next == term {
            unchanged += 1;
        } else {
            unchanged = 0;
            term = next;
        }
        let settled = len >= budget + 2 && unchanged >= 2;
        if settled || len >= max_len || term.is_full() || frontier.len() > frontier_budget {
            break;
        }
        frontier = expand(&frontier, action);
    }
    Ok(term)
}

/// Builds the filtration for a set of tame generators.
///
/// Each accepted level is certified: the semigroup induced on
/// `V⁽ʲ⁾ / V⁽ʲ⁺¹⁾` is enumerated and must be finite. A finite quotient forces
/// `X^{2a} = X^a` there for every semigroup element `X`, so the computed term
/// already contains every `Y (X^{2a} − X^a) V⁽ʲ⁾`, and the chain is exact
/// even though only finitely many `X` were tried.
pub fn filtration(gens: &GeneratorSet, budgets: &FiltrationBudgets) -> Result<FiltrationOutcome> {
    require_tame_generators(gens)?;
    let d = gens.dim();
    let exponent = cyclo_exponent(d).exponent;
    let budget = budgets.word_budget.unwrap_or(2 * d);

    let mut result = Filtration {
        exponent,
        chain: vec![Subspace::full(d)],
        quotient_sizes: Vec::new(),
    };
    let mut action: Vec<Matrix> = gens.matrices().to_vec();
    let mut basis = Matrix::identity(d);
    let mut dim = d;

    while dim > 0 {
        let term = next_term(&action, dim, exponent, budget, budgets.frontier_budget)?;
        if term.is_full() {
            return Ok(FiltrationOutcome::Inconclusive {
                reason: format!(
                    "level {} did not shrink: the generated semigroup is not tame",
                    result.length()
                ),
                partial: result,
            });
        }
        let blocks = action
            .iter()
            .map(|g| block_decompose(g, &term))
            .collect::<Result<Vec<_>>>()?;
        let quotients: Vec<Matrix> = blocks.iter().map(|b| b.quotient.clone()).collect();
        match semigroup_closure(dim - term.dim(), &quotients, budgets.closure_cap) {
            Closure::Finite(elements) => result.quotient_sizes.push(elements.len()),
            Closure::ExceededCap { explored } => {
                return Ok(FiltrationOutcome::Inconclusive {
                    reason: format!(
                        "quotient semigroup at level {} exceeded the closure cap ({explored} elements)",
                        result.length()
                    ),
                    partial: result,
                });
            }
        }
        basis = basis.mul(&term.basis_matrix())?;
        result.chain.push(Subspace::column_space(&basis));
        action = blocks.into_iter().map(|b| b.restricted).collect();
        dim = term.dim();
    }
    Ok(FiltrationOutcome::Complete(result))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::rat;

    fn complete(gens: &GeneratorSet) -> Filtration {
        match filtration(gens, &FiltrationBudgets::default()).unwrap() {
            FiltrationOutcome::Complete(f) => f,
            other => panic!("expected a complete filtration, got {other:?}"),
        }
    }

    #[test]
    fn unipotent_chain() {
        let gens = GeneratorSet::new(vec![Matrix::from_i64(&[&[1, 1], &[0, 1]])]).unwrap();
        let f = complete(&gens);
        assert_eq!(f.dims(), vec![2, 1, 0]);
        assert_eq!(f.chain[1], Subspace::span(2, [vec![rat(1), rat(0)]]).unwrap());
        assert_eq!(f.length(), 2);
        assert_eq!(f.exponent, 12);
        assert!(f.is_well_formed(2));
    }

    #[test]
    fn identity_chain() {
        let gens = GeneratorSet::new(vec![Matrix::identity(2)]).unwrap();
        let f = complete(&gens);
        assert_eq!(f.dims(), vec![2, 0]);
        assert_eq!(f.quotient_sizes, vec![1]);
    }

    #[test]
    fn heisenberg_chain() {
        let i3 = Matrix::identity(3);
        let gens = GeneratorSet::new(vec![&i3 + &Matrix::unit(3, 0, 1), &i3 + &Matrix::unit(3, 1, 2)]).unwrap();
        let f = complete(&gens);
        assert_eq!(f.dims(), vec![3, 2, 1, 0]);
        assert_eq!(f.chain[1], Subspace::span(3, [i3.column(0), i3.column(1)]).unwrap());
        assert_eq!(f.chain[2], Subspace::span(3, [i3.column(0)]).unwrap());
        assert!(f.is_well_formed(3));
    }

    #[test]
    fn finite_group_has_length_one() {
        let gens = GeneratorSet::new(vec![Matrix::from_i64(&[&[0, 1], &[1, 0]])]).unwrap();
        let f = complete(&gens);
        assert_eq!(f.dims(), vec![2, 0]);
        assert_eq!(f.quotient_sizes, vec![2]);
    }

    #[test]
    fn tiny_closure_cap_is_inconclusive() {
        let gens = GeneratorSet::new(vec![Matrix::from_i64(&[&[0, 1], &[1, 0]])]).unwrap();
        let budgets = FiltrationBudgets {
            closure_cap: 1,
            ..Default::default()
        };
        assert!(matches!(
            filtration(&gens, &budgets).unwrap(),
            FiltrationOutcome::Inconclusive { .. }
        ));
    }

    #[test]
    fn non_tame_generator_is_an_error() {
        let gens = GeneratorSet::new(vec![Matrix::from_i64(&[&[2]])]).unwrap();
        assert!(matches!(
            filtration(&gens, &FiltrationBudgets::default()),
            Err(Error::NonTame { .. })
        ));
    }

    #[test]
    fn tame_generators_with_non_tame_product() {
        // both generators are unipotent but their product has trace 3
        let gens = GeneratorSet::new(vec![
            Matrix::from_i64(&[&[1, 1], &[0, 1]]),
            Matrix::from_i64(&[&[1, 0], &[1, 1]]),
        ])
        .unwrap();
        assert!(matches!(
            filtration(&gens, &FiltrationBudgets::default()).unwrap(),
            FiltrationOutcome::Inconclusive { .. }
        ));
    }
}
