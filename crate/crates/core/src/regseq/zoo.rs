//! Small named sequences used in examples and tests.

use crate::linalg::{rat, Matrix};

use super::{from_dfao, Dfao, LinRep};

/// The constant sequence `𝟙` over `{1, …, m}`.
pub fn one(m: usize) -> LinRep {
    LinRep::from_i64(&[1], vec![Matrix::identity(1); m], &[1]).expect("valid shapes")
}

/// Number of occurrences of `symbol` in the word. With `m = 2` and
/// `symbol = 2` this is the binary digit sum `s₂` (bits `0 → 1`, `1 → 2`).
pub fn digit_count(m: usize, symbol: usize) -> LinRep {
    assert!((1..=m).contains(&symbol), "symbol out of range");
    let matrices = (1..=m)
        .map(|i| {
            if i == symbol {
                Matrix::from_i64(&[&[1, 1], &[0, 1]])
            } else {
                Matrix::identity(2)
            }
        })
        .collect();
    LinRep::from_i64(&[1, 0], matrices, &[0, 1]).expect("valid shapes")
}

/// Parity of the number of `2`s.
pub fn thue_morse_dfao() -> Dfao {
    Dfao::new(2, 0, vec![vec![0, 1], vec![1, 0]], vec![rat(0), rat(1)]).expect("valid DFAO")
}

pub fn thue_morse() -> LinRep {
    from_dfao(&thue_morse_dfao())
}

/// `f(1ⁿ) = F_n` over the one-letter alphabet.
pub fn fibonacci() -> LinRep {
    LinRep::from_i64(&[1, 0], vec![Matrix::from_i64(&[&[1, 1], &[1, 0]])], &[0, 1]).expect("valid shapes")
}

#[cfg(test)]
mod tests {
    use super::super::eval;
    use super::*;
    use crate::word::Word;

    #[test]
    fn oracles() {
        for u in Word::all_up_to(2, 8) {
            let twos = u.symbols().iter().filter(|&&s| s == 2).count() as i64;
            assert_eq!(eval(&digit_count(2, 2), &u).unwrap(), rat(twos));
            assert_eq!(eval(&thue_morse(), &u).unwrap(), rat(twos % 2));
        }
        let (mut a, mut b) = (0i64, 1i64);
        for n in 0..20 {
            assert_eq!(eval(&fibonacci(), &Word::new(vec![1; n])).unwrap(), rat(a));
            (a, b) = (b, a + b);
        }
    }
}
