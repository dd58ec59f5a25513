mod common;

use common::{int_matrix, random_matrix, unimodular};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semigrowth::growth::{verify_telescoping, GeneratorSet};
use semigrowth::linalg::{char_poly, Matrix};
use semigrowth::tameness::{block_triangularize, cyclo_exponent, is_tame_charpoly, is_tame_matrix, Triangularization};

#[test]
fn matrix_and_charpoly_tests_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut tame = 0;
    for i in 0..400 {
        let d = 1 + i % 4;
        // sparse draws make tame matrices common enough to matter
        let x = if i % 2 == 0 {
            random_matrix(&mut rng, d, -3, 3)
        } else {
            random_matrix(&mut rng, d, -1, 1)
        };
        let by_matrix = is_tame_matrix(&x, d).unwrap().tame;
        let by_poly = is_tame_charpoly(&char_poly(&x).unwrap(), d).unwrap();
        assert_eq!(by_matrix, by_poly, "{x}");
        tame += by_matrix as usize;
    }
    assert!(tame > 20, "only {tame} tame samples");
}

#[test]
fn telescoping_identity_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..60 {
        let d = 1 + i % 4;
        let x = random_matrix(&mut rng, d, -2, 2);
        let a = cyclo_exponent(d).exponent;
        let n = rng.gen_range(4..=12);
        assert!(verify_telescoping(&x, a, n).unwrap(), "{x} a={a} n={n}");
    }
}

#[test]
fn exponent_divisibility_chain() {
    for d in 1..8 {
        assert_eq!(cyclo_exponent(d + 1).exponent % cyclo_exponent(d).exponent, 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tameness_is_a_conjugation_invariant(x in int_matrix(3, -2, 2), u in unimodular(3)) {
        let conj = u.inverse().unwrap().mul(&x).unwrap().mul(&u).unwrap();
        prop_assert_eq!(is_tame_matrix(&conj, 3).unwrap().tame, is_tame_matrix(&x, 3).unwrap().tame);
    }

    #[test]
    fn tame_defect_is_nilpotent(x in int_matrix(3, -1, 1)) {
        let b = cyclo_exponent(3).exponent;
        if is_tame_matrix(&x, 3).unwrap().tame {
            let xb = x.pow(b).unwrap();
            let defect = &xb.pow(2).unwrap() - &xb;
            prop_assert!(defect.pow(3).unwrap().is_zero());
        }
    }

    #[test]
    fn triangularization_reassembles_exactly(a in int_matrix(3, -1, 1), b in int_matrix(3, -1, 1)) {
        let Ok(gens) = GeneratorSet::new(vec![a, b]) else { return Ok(()) };
        if let Ok(Triangularization::Found(t)) = block_triangularize(&gens, None) {
            prop_assert!(t.verify(&gens).unwrap());
        }
    }
}

#[test]
fn unipotent_triangularization() {
    let gens = GeneratorSet::new(vec![Matrix::from_i64(&[&[1, 1], &[0, 1]])]).unwrap();
    match block_triangularize(&gens, None).unwrap() {
        Triangularization::Found(t) => assert!(t.verify(&gens).unwrap()),
        Triangularization::NotFound => panic!("expected a split"),
    }
}
