use num_traits::{One, Zero};

use super::{Matrix, Rational};
use crate::error::{Error, Result};

/// Reduced row echelon form of `rows`, returning only the nonzero rows.
/// Each returned row has a leading 1 and zeros in every other row's pivot
/// column; pivots strictly increase.
pub(crate) fn row_reduce(mut rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Rational::one() / &rows[rank][col];
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

fn pivot(v: &[Rational]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// A subspace of `Q^n` stored by its canonical reduced echelon basis, so two
/// equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim).to_rows(),
        }
    }

    /// The span of `vectors`, each of length `ambient_dim`.
    pub fn span<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<_> = vectors.into_iter().collect();
        if let Some(bad) = rows.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                op: "span",
                left: (ambient_dim, 1),
                right: (bad.len(), 1),
            });
        }
        Ok(Self {
            ambient_dim,
            basis: row_reduce(rows),
        })
    }

    pub fn column_space(a: &Matrix) -> Self {
        Self {
            ambient_dim: a.rows(),
            basis: row_reduce(a.columns()),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Pivot positions of the basis vectors, strictly increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().filter_map(|b| pivot(b)).collect()
    }

    /// `ambient_dim × dim` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient_dim, &self.basis).expect("basis vectors have ambient length")
    }

    /// Residual of `v` after eliminating the basis pivots; zero iff `v` lies
    /// in the subspace.
    fn residual(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for b in &self.basis {
            let p = pivot(b).expect("basis vectors are nonzero");
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && self.residual(v).iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Coordinates of `v` in the basis, or `None` if `v` is outside.
    ///
    /// With a reduced echelon basis the coordinates are just the entries of
    /// `v` at the pivot positions.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.contains(v)
            .then(|| self.pivots().into_iter().map(|p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Self::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    /// Basis of the whole space: this subspace's basis followed by the unit
    /// vectors at the non-pivot positions.
    pub fn extended_basis(&self) -> Matrix {
        let pivots = self.pivots();
        let mut cols = self.basis.clone();
        for j in (0..self.ambient_dim).filter(|j| !pivots.contains(j)) {
            let mut e = vec![Rational::zero(); self.ambient_dim];
            e[j] = Rational::one();
            cols.push(e);
        }
        Matrix::from_columns(self.ambient_dim, &cols).expect("unit vectors have ambient length")
    }

    /// Image of this subspace under `a`.
    pub fn image(&self, a: &Matrix) -> Result<Subspace> {
        let imgs = self
            .basis
            .iter()
            .map(|b| a.mul_vec(b))
            .collect::<Result<Vec<_>>>()?;
        Self::span(a.rows(), imgs)
    }

    pub fn is_invariant_under(&self, a: &Matrix) -> bool {
        self.invariance_witness(a).is_none()
    }

    fn invariance_witness(&self, a: &Matrix) -> Option<Vec<Rational>> {
        self.basis.iter().find_map(|b| {
            let img = a.mul_vec(b).ok()?;
            (!self.contains(&img)).then_some(img)
        })
    }
}

/// Smallest subspace containing `seed` and closed under left multiplication
/// by every generator.
pub fn span_closure(ambient_dim: usize, seed: &[Vec<Rational>], generators: &[Matrix]) -> Result<Subspace> {
    if let Some(g) = generators.iter().find(|g| g.shape() != (ambient_dim, ambient_dim)) {
        return Err(Error::DimensionMismatch {
            op: "span_closure",
            left: (ambient_dim, ambient_dim),
            right: g.shape(),
        });
    }
    let mut current = Subspace::span(ambient_dim, seed.iter().cloned())?;
    // each round either grows the dimension or stops: at most ambient_dim rounds
    loop {
        let mut images = Vec::with_capacity(current.dim() * generators.len());
        for g in generators {
            for v in &current.basis {
                images.push(g.mul_vec(v)?);
            }
        }
        let next = Subspace::span(ambient_dim, current.basis.iter().cloned().chain(images))?;
        if next.dim() == current.dim() {
            break;
        }
        current = next;
    }
    Ok(current)
}

/// Change of basis adapted to an invariant subspace `w` of `a`:
/// `U⁻¹ a U = [[B, D], [0, C]]` with `U` = [`Subspace::extended_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub change_of_basis: Matrix,
    pub restricted: Matrix,
    pub off_diagonal: Matrix,
    pub quotient: Matrix,
}

impl BlockDecomposition {
    /// Reassembles `[[B, D], [0, C]]`.
    pub fn assembled(&self) -> Matrix {
        let e = self.restricted.rows();
        let q = self.quotient.rows();
        Matrix::from_blocks(
            &self.restricted,
            &self.off_diagonal,
            &Matrix::zeros(q, e),
            &self.quotient,
        )
        .expect("block shapes are consistent")
    }
}

fn check_invariant(a: &Matrix, w: &Subspace) -> Result<()> {
    a.require_square()?;
    if a.rows() != w.ambient_dim() {
        return Err(Error::DimensionMismatch {
            op: "restrict",
            left: a.shape(),
            right: (w.ambient_dim(), w.dim()),
        });
    }
    if let Some(img) = w.invariance_witness(a) {
        return Err(Error::NotInvariant {
            witness: img.iter().map(ToString::to_string).collect(),
        });
    }
    Ok(())
}

pub fn block_decompose(a: &Matrix, w: &Subspace) -> Result<BlockDecomposition> {
    check_invariant(a, w)?;
    let u = w.extended_basis();
    let conj = u.inverse()?.mul(a)?.mul(&u)?;
    let e = w.dim();
    let d = a.rows();
    if !conj.block(e, 0, d - e, e).is_zero() {
        return Err(Error::Invariant("lower-left block of an invariant split is nonzero".into()));
    }
    Ok(BlockDecomposition {
        restricted: conj.block(0, 0, e, e),
        off_diagonal: conj.block(0, e, e, d - e),
        quotient: conj.block(e, e, d - e, d - e),
        change_of_basis: u,
    })
}

/// The action of `a` on the invariant subspace `w`, in `w`'s basis.
pub fn restrict(a: &Matrix, w: &Subspace) -> Result<Matrix> {
    check_invariant(a, w)?;
    let cols = w
        .basis()
        .iter()
        .map(|b| {
            let img = a.mul_vec(b)?;
            w.coordinates(&img)
                .ok_or_else(|| Error::Invariant("image escaped an invariant subspace".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(w.dim(), &cols)
}

/// The induced action of `a` on `Q^d / w`, in the basis given by the unit
/// vectors completing `w`'s basis.
pub fn quotient(a: &Matrix, w: &Subspace) -> Result<Matrix> {
    Ok(block_decompose(a, w)?.quotient)
}
