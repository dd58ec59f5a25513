use crate::error::Result;
use crate::linalg::{dot, restrict, span_closure, Matrix, Rational, Subspace};

use super::LinRep;

/// Forward/backward reduction over the rationals.
///
/// The column step restricts to `span{A_w col}`, the row step to
/// `span{rowᵀ A_w}` of the result. Both spaces are full for the output, which
/// is therefore of minimal dimension. Bases are reduced echelon forms, so the
/// output is canonical for a given input.
pub fn minimize(rep: &LinRep) -> Result<LinRep> {
    let d = rep.dim();

    let forward = span_closure(d, &[rep.col().to_vec()], rep.matrices())?;
    let (row, matrices, col) = if forward.is_full() {
        (rep.row().to_vec(), rep.matrices().to_vec(), rep.col().to_vec())
    } else {
        let matrices = rep
            .matrices()
            .iter()
            .map(|a| restrict(a, &forward))
            .collect::<Result<Vec<_>>>()?;
        let col = coords(&forward, rep.col());
        let row = forward.basis().iter().map(|b| dot(rep.row(), b)).collect();
        (row, matrices, col)
    };

    let e = row.len();
    let transposed: Vec<Matrix> = matrices.iter().map(Matrix::transpose).collect();
    let backward = span_closure(e, std::slice::from_ref(&row), &transposed)?;
    if backward.is_full() {
        return LinRep::new_allow_empty(row, matrices, col);
    }
    let reduced = transposed
        .iter()
        .map(|t| restrict(t, &backward).map(|m| m.transpose()))
        .collect::<Result<Vec<_>>>()?;
    let new_row = coords(&backward, &row);
    let new_col = backward.basis().iter().map(|b| dot(b, &col)).collect();
    LinRep::new_allow_empty(new_row, reduced, new_col)
}

fn coords(space: &Subspace, v: &[Rational]) -> Vec<Rational> {
    space
        .coordinates(v)
        .expect("the seed vector lies in its own closure")
}
