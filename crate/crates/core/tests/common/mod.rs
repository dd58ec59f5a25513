#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use semigrowth::linalg::{rat, Matrix};

pub fn int_matrix(d: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(lo..=hi, d * d).prop_map(move |v| {
        let rows: Vec<&[i64]> = v.chunks(d).collect();
        Matrix::from_i64(&rows)
    })
}

/// A product of elementary integer matrices, so `det = ±1`.
pub fn unimodular(d: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((0..d, 0..d, -2i64..=2, any::<bool>()), 1..6).prop_map(move |ops| {
        let mut u = Matrix::identity(d);
        for (i, j, c, flip) in ops {
            let mut e = Matrix::identity(d);
            if i != j {
                e.set(i, j, rat(c));
            } else if flip {
                e.set(i, i, rat(-1));
            }
            u = u.mul(&e).unwrap();
        }
        u
    })
}

pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> Matrix {
    let v: Vec<i64> = (0..d * d).map(|_| rng.gen_range(lo..=hi)).collect();
    let rows: Vec<&[i64]> = v.chunks(d).collect();
    Matrix::from_i64(&rows)
}

pub fn heisenberg() -> Vec<Matrix> {
    let i3 = Matrix::identity(3);
    vec![&i3 + &Matrix::unit(3, 0, 1), &i3 + &Matrix::unit(3, 1, 2)]
}

pub fn curated() -> Vec<(&'static str, Vec<Matrix>)> {
    vec![
        ("unipotent", vec![Matrix::from_i64(&[&[1, 1], &[0, 1]])]),
        ("heisenberg", heisenberg()),
        ("scalar-two", vec![Matrix::from_i64(&[&[2]])]),
        ("fibonacci", vec![Matrix::from_i64(&[&[1, 1], &[1, 0]])]),
        ("nilpotent", vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])]),
        ("swap", vec![Matrix::from_i64(&[&[0, 1], &[1, 0]])]),
    ]
}
