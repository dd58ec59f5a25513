use std::collections::HashSet;

use rayon::prelude::*;

use crate::linalg::{norm, Matrix, NormKind, Rational};
use crate::word::Word;

use super::GeneratorSet;

/// A semigroup element together with the shortlex-least word found for it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Product {
    pub matrix: Matrix,
    pub word: Word,
}

impl Product {
    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: Matrix::identity(dim),
            word: Word::empty(),
        }
    }
}

/// `{A_i · P}` over all generators and frontier elements, deduplicated by
/// matrix and sorted. The result does not depend on the thread schedule.
pub(crate) fn expand(frontier: &[Product], generators: &[Matrix]) -> Vec<Product> {
    let mut next: Vec<Product> = frontier
        .par_iter()
        .flat_map_iter(|p| {
            generators.iter().enumerate().map(move |(i, g)| Product {
                matrix: g.mul_unchecked(&p.matrix),
                word: p.word.prepend(i + 1),
            })
        })
        .collect();
    next.par_sort_unstable();
    next.dedup_by(|cur, kept| cur.matrix == kept.matrix);
    next
}

/// Distinct products grouped by word length `0..=max_len`. If a level grows
/// past `frontier_budget` it is kept but enumeration stops there; the second
/// component reports whether that happened.
pub(crate) fn product_levels(
    generators: &[Matrix],
    dim: usize,
    max_len: usize,
    frontier_budget: usize,
) -> (Vec<Vec<Product>>, bool) {
    let mut levels = vec![vec![Product::identity(dim)]];
    for _ in 0..max_len {
        let last = levels.last().unwrap();
        if last.len() > frontier_budget {
            return (levels, true);
        }
        let next = expand(last, generators);
        levels.push(next);
    }
    (levels, false)
}

/// Exact table of `m_n` for `n = 0..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MnTable {
    pub norm: NormKind,
    pub values: Vec<Rational>,
    pub frontier_sizes: Vec<usize>,
    /// Index of the first entry computed from a pruned frontier, if any.
    /// Entries from there on are lower bounds, not exact maxima.
    pub truncated_from: Option<usize>,
}

impl MnTable {
    pub fn max_n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn truncated(&self) -> bool {
        self.truncated_from.is_some()
    }

    pub fn is_reliable(&self, n: usize) -> bool {
        n < self.values.len() && self.truncated_from.is_none_or(|t| n < t)
    }

    /// Largest `n` whose value is exact.
    pub fn reliable_max_n(&self) -> usize {
        match self.truncated_from {
            Some(t) => t.saturating_sub(1).min(self.max_n()),
            None => self.max_n(),
        }
    }

    /// First violation of `m_{i+j} ≤ m_i · m_j` over the reliable range.
    pub fn submultiplicativity_violation(&self) -> Option<(usize, usize)> {
        let top = self.reliable_max_n();
        for i in 0..=top {
            for j in 0..=top - i {
                if self.values[i + j] > &self.values[i] * &self.values[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// `m_n` by breadth-first enumeration of distinct products.
///
/// `S_0 = {I}`, `S_{n+1} = {A_i P : P ∈ S_n}` deduplicated, and
/// `m_n = max_{P ∈ S_n} ‖P‖`. When `|S_n|` exceeds `frontier_budget` the
/// frontier is pruned to the `frontier_budget` largest-norm products (ties
/// broken by matrix order) and all later values are flagged as lower bounds.
///
/// Integer generators run on machine integers with overflow checks; the
/// first overflow hands the frontier over to exact rationals.
pub fn mn_bruteforce(gens: &GeneratorSet, max_n: usize, kind: NormKind, frontier_budget: usize) -> MnTable {
    let mut table = MnTable {
        norm: kind,
        values: Vec::with_capacity(max_n + 1),
        frontier_sizes: Vec::with_capacity(max_n + 1),
        truncated_from: None,
    };
    let d = gens.dim();
    let mut frontier = vec![Matrix::identity(d)];
    let mut start = 0;
    let mut expanded = false;
    if let Some(small) = gens
        .matrices()
        .iter()
        .map(SmallMat::from_matrix)
        .collect::<Option<Vec<_>>>()
    {
        let mut cur = vec![SmallMat::identity(d)];
        loop {
            if start > 0 {
                match expand_small(&cur, &small, d) {
                    Some(next) => cur = next,
                    None => break,
                }
            }
            let Some(norms) = cur.par_iter().map(|m| m.norm(d, kind)).collect::<Option<Vec<i128>>>() else {
                expanded = true;
                break;
            };
            table.values.push(Rational::from_integer(norms.iter().copied().max().unwrap_or(0).into()));
            table.frontier_sizes.push(cur.len());
            if cur.len() > frontier_budget && start < max_n {
                table.truncated_from.get_or_insert(start + 1);
                let mut ranked: Vec<(i128, SmallMat)> = norms.into_iter().zip(cur).collect();
                ranked.par_sort_unstable_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
                ranked.truncate(frontier_budget);
                cur = ranked.into_iter().map(|(_, m)| m).collect();
                cur.par_sort_unstable();
            }
            start += 1;
            if start > max_n {
                return table;
            }
        }
        // overflow at level `start`: `cur` holds that level if only its norms
        // overflowed, and the previous level otherwise
        frontier = cur.iter().map(|m| m.to_matrix(d)).collect();
    }
    for n in start..=max_n {
        if n > 0 && !(n == start && expanded) {
            let mut next: Vec<Matrix> = frontier
                .par_iter()
                .flat_map_iter(|p| gens.matrices().iter().map(move |g| g.mul_unchecked(p)))
                .collect();
            next.par_sort_unstable();
            next.dedup();
            frontier = next;
        }
        let norms: Vec<Rational> = frontier.par_iter().map(|p| norm(p, kind)).collect();
        table.values.push(norms.iter().max().cloned().unwrap_or_default());
        table.frontier_sizes.push(frontier.len());
        if frontier.len() > frontier_budget && n < max_n {
            table.truncated_from.get_or_insert(n + 1);
            let mut ranked: Vec<(Rational, Matrix)> = norms.into_iter().zip(frontier).collect();
            ranked.par_sort_unstable_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
            ranked.truncate(frontier_budget);
            frontier = ranked.into_iter().map(|(_, p)| p).collect();
            frontier.par_sort_unstable();
        }
    }
    table
}

/// Row-major integer matrix used by the fast path of [`mn_bruteforce`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct SmallMat(Box<[i64]>);

impl SmallMat {
    fn identity(d: usize) -> Self {
        let mut v = vec![0; d * d];
        for i in 0..d {
            v[i * d + i] = 1;
        }
        Self(v.into())
    }

    fn from_matrix(m: &Matrix) -> Option<Self> {
        m.integer_entries()?
            .iter()
            .map(i64::try_from)
            .collect::<std::result::Result<Vec<_>, _>>()
            .ok()
            .map(|v| Self(v.into()))
    }

    fn to_matrix(&self, d: usize) -> Matrix {
        Matrix::new(d, d, self.0.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .expect("d*d entries")
    }

    fn mul(&self, rhs: &Self, d: usize) -> Option<Self> {
        let mut out = vec![0i64; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc: i128 = 0;
                for k in 0..d {
                    acc = acc.checked_add(self.0[i * d + k] as i128 * rhs.0[k * d + j] as i128)?;
                }
                out[i * d + j] = i64::try_from(acc).ok()?;
            }
        }
        Some(Self(out.into()))
    }

    fn norm(&self, d: usize, kind: NormKind) -> Option<i128> {
        match kind {
            NormKind::InfOperator => self
                .0
                .chunks(d.max(1))
                .map(|row| row.iter().try_fold(0i128, |s, &x| s.checked_add((x as i128).abs())))
                .try_fold(0i128, |m, r| Some(m.max(r?))),
            NormKind::FrobeniusSq => self
                .0
                .iter()
                .try_fold(0i128, |s, &x| s.checked_add((x as i128).checked_mul(x as i128)?)),
        }
    }
}

fn expand_small(frontier: &[SmallMat], generators: &[SmallMat], d: usize) -> Option<Vec<SmallMat>> {
    let mut next = frontier
        .par_iter()
        .flat_map_iter(|p| generators.iter().map(move |g| g.mul(p, d)))
        .collect::<Option<Vec<_>>>()?;
    next.par_sort_unstable();
    next.dedup();
    Some(next)
}

/// Outcome of a semigroup closure attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Every element, identity included, in sorted order.
    Finite(Vec<Matrix>),
    ExceededCap { explored: usize },
}

impl Closure {
    pub fn len(&self) -> Option<usize> {
        match self {
            Closure::Finite(v) => Some(v.len()),
            Closure::ExceededCap { .. } => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Closure::Finite(_))
    }
}

/// Breadth-first closure of the monoid generated by `generators` (the
/// identity counts as an element). Gives up once more than `cap` elements
/// have been found.
pub fn semigroup_closure(dim: usize, generators: &[Matrix], cap: usize) -> Closure {
    let identity = Matrix::identity(dim);
    let mut seen: HashSet<Matrix> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut images: Vec<Matrix> = frontier
            .par_iter()
            .flat_map_iter(|p| generators.iter().map(move |g| g.mul_unchecked(p)))
            .collect();
        images.par_sort_unstable();
        images.dedup();
        frontier = images.into_iter().filter(|m| seen.insert(m.clone())).collect();
        if seen.len() > cap {
            return Closure::ExceededCap { explored: seen.len() };
        }
    }
    let mut elements: Vec<Matrix> = seen.into_iter().collect();
    elements.sort_unstable();
    Closure::Finite(elements)
}

/// True iff every product of length `dim` vanishes.
///
/// If all products of some length vanish, every semigroup element is
/// nilpotent, so by Levitzki's theorem the generators are simultaneously
/// strictly upper triangularizable and all products of length `dim` are
/// zero; conversely zero products at length `dim` stay zero at every longer
/// length. The check tracks the linear span of the length-`n` products,
/// which has dimension at most `dim²`, rather than the products themselves.
pub fn detect_degenerate(gens: &GeneratorSet) -> bool {
    let d = gens.dim();
    let flatten = |m: &Matrix| m.entries().to_vec();
    let unflatten = |v: &[Rational]| Matrix::new(d, d, v.to_vec()).expect("d*d entries");
    let mut span = crate::linalg::Subspace::span(d * d, [flatten(&Matrix::identity(d))])
        .expect("d*d entries");
    for _ in 0..d {
        let images = span
            .basis()
            .iter()
            .flat_map(|b| {
                let p = unflatten(b);
                gens.matrices()
                    .iter()
                    .map(move |g| flatten(&g.mul_unchecked(&p)))
            })
            .collect::<Vec<_>>();
        span = crate::linalg::Subspace::span(d * d, images).expect("d*d entries");
        if span.is_zero() {
            return true;
        }
    }
    span.is_zero()
}
