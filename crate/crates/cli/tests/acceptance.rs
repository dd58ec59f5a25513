//! The acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semigrowth::growth::{
    detect_degenerate, growth_degree, mn_bruteforce, semigroup_closure, verify_telescoping, Budgets, Closure,
    GeneratorSet, Verdict,
};
use semigrowth::linalg::{char_poly, norm, rat, Matrix, NormKind, Rational};
use semigrowth::regseq::zoo::{digit_count, one, thue_morse};
use semigrowth::regseq::{
    add, conv_oracle, convolve, eval, growth_degree_seq, minimize, LinRep, SeqBudgets, SeqVerdict,
};
use semigrowth::tameness::{cyclo_exponent, is_tame_charpoly, is_tame_matrix};
use semigrowth::Word;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn gens(ms: Vec<Matrix>) -> GeneratorSet {
    GeneratorSet::new(ms).unwrap()
}

fn unipotent() -> GeneratorSet {
    gens(vec![Matrix::from_i64(&[&[1, 1], &[0, 1]])])
}

fn heisenberg() -> GeneratorSet {
    let i3 = Matrix::identity(3);
    gens(vec![&i3 + &Matrix::unit(3, 0, 1), &i3 + &Matrix::unit(3, 1, 2)])
}

fn scalar_two() -> GeneratorSet {
    gens(vec![Matrix::from_i64(&[&[2]])])
}

fn fibonacci() -> GeneratorSet {
    gens(vec![Matrix::from_i64(&[&[1, 1], &[1, 0]])])
}

fn nilpotent() -> GeneratorSet {
    gens(vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])])
}

fn swap() -> GeneratorSet {
    gens(vec![Matrix::from_i64(&[&[0, 1], &[1, 0]])])
}

fn budgets(norm: NormKind) -> Budgets {
    Budgets { norm, ..Default::default() }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    if t < limit {
        Ok(t)
    } else {
        Err(format!("took {t:.2?}, limit {limit:?}"))
    }
}

fn filtration_dims(v: &Verdict) -> Option<Vec<usize>> {
    match v {
        Verdict::Polynomial(c) => Some(c.filtration.dims()),
        _ => None,
    }
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let g = unipotent();
    let r = growth_degree(&g, &Budgets::default()).map_err(|e| e.to_string())?;
    ensure!(r.verdict.degree() == Some(1), "verdict {:?}", r.verdict.name());
    let t = mn_bruteforce(&g, 64, NormKind::InfOperator, 200_000);
    ensure!(
        (0..=64).all(|n| t.values[n] == rat(n as i64 + 1)),
        "m_n differs from n+1"
    );
    let dims = filtration_dims(&r.verdict);
    ensure!(dims == Some(vec![2, 1, 0]), "dims {dims:?}");
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("degree 1, m_n = n+1 for n <= 64, dims (2,1,0), {t:.2?}"))
}

/// Independent oracle: multiply out all `2^n` words.
fn mn_all_words(g: &GeneratorSet, n: usize) -> Rational {
    Word::all_of_length(g.alphabet(), n)
        .iter()
        .map(|w| norm(&g.product(w).unwrap(), NormKind::InfOperator))
        .max()
        .unwrap()
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let g = heisenberg();
    let r = growth_degree(&g, &Budgets::default()).map_err(|e| e.to_string())?;
    ensure!(r.verdict.degree() == Some(2), "verdict {}", r.verdict.name());
    ensure!(r.mn.values[8] == rat(21), "m_8 = {}", r.mn.values[8]);
    ensure!(mn_all_words(&g, 8) == rat(21), "exhaustive m_8 = {}", mn_all_words(&g, 8));
    ensure!(r.mn.reliable_max_n() >= 32, "table is exact only up to {}", r.mn.reliable_max_n());
    let slope = r.slope.ok_or("no slope")?;
    ensure!((slope.from, slope.to) == (16, 32), "fit range {}..{}", slope.from, slope.to);
    ensure!((slope.slope - 2.0).abs() <= 0.25, "slope {}", slope.slope);
    let dims = filtration_dims(&r.verdict);
    ensure!(dims == Some(vec![3, 2, 1, 0]), "dims {dims:?}");
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("degree 2, m_8 = 21, slope {:.3} on [16,32], dims (3,2,1,0), {t:.2?}", slope.slope))
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (name, g) in [("[[2]]", scalar_two()), ("[[1,1],[1,0]]", fibonacci())] {
        let r = growth_degree(&g, &Budgets::default()).map_err(|e| e.to_string())?;
        let Verdict::Exponential(w) = &r.verdict else {
            return Err(format!("{name}: verdict {}", r.verdict.name()));
        };
        ensure!(w.word.len() == 1, "{name}: witness length {}", w.word.len());
        let p = char_poly(&g.product(&w.word).unwrap()).unwrap();
        ensure!(!is_tame_charpoly(&p, g.dim()).unwrap(), "{name}: witness char poly is tame");
        notes.push(format!("{name} witness {} ({p})", w.word));
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("{}, {t:.2?}", notes.join(", ")))
}

fn criterion_4() -> Check {
    let g = nilpotent();
    ensure!(detect_degenerate(&g), "length-d products do not vanish");
    let r = growth_degree(&g, &Budgets::default()).map_err(|e| e.to_string())?;
    ensure!(r.verdict == Verdict::Degenerate, "verdict {}", r.verdict.name());
    Ok("Degenerate".into())
}

fn criterion_5() -> Check {
    let g = swap();
    let r = growth_degree(&g, &Budgets::default()).map_err(|e| e.to_string())?;
    ensure!(r.verdict.degree() == Some(0), "verdict {}", r.verdict.name());
    let c = semigroup_closure(2, g.matrices(), 1_000_000);
    ensure!(matches!(&c, Closure::Finite(v) if v.len() == 2), "closure {:?}", c.len());
    Ok("degree 0, closure has 2 elements".into())
}

fn random_matrix(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> Matrix {
    let v: Vec<i64> = (0..d * d).map(|_| rng.gen_range(lo..=hi)).collect();
    let rows: Vec<&[i64]> = v.chunks(d).collect();
    Matrix::from_i64(&rows)
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut total, mut tame) = (0, 0);
    for i in 0..400 {
        let d = 1 + i % 4;
        let x = random_matrix(&mut rng, d, -3, 3);
        let a = is_tame_matrix(&x, d).map_err(|e| e.to_string())?.tame;
        let b = is_tame_charpoly(&char_poly(&x).unwrap(), d).map_err(|e| e.to_string())?;
        ensure!(a == b, "disagreement on {x}");
        total += 1;
        tame += a as usize;
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{total}/{total} agree ({tame} tame), {t:.2?}"))
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let count = 60;
    for i in 0..count {
        let d = 1 + i % 4;
        let x = random_matrix(&mut rng, d, -3, 3);
        let a = cyclo_exponent(d).exponent;
        let n = rng.gen_range(4..=12);
        ensure!(verify_telescoping(&x, a, n).map_err(|e| e.to_string())?, "fails for {x}, a = {a}, n = {n}");
    }
    Ok(format!("{count} random matrices, exact"))
}

fn zoo() -> Vec<(&'static str, LinRep)> {
    vec![("1", one(2)), ("thue-morse", thue_morse()), ("s2", digit_count(2, 2))]
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let words = Word::all_up_to(2, 8);
    let mut checked = 0;
    for (a, f) in zoo() {
        for (b, g) in zoo() {
            let c = convolve(&f, &g).map_err(|e| e.to_string())?;
            for u in &words {
                let oracle = conv_oracle(|w| eval(&f, w).unwrap(), |w| eval(&g, w).unwrap(), u);
                ensure!(eval(&c, u).unwrap() == oracle, "{a} * {b} differs on {u}");
                checked += 1;
            }
        }
    }
    let t = within(start, Duration::from_secs(30))?;
    Ok(format!("{checked} evaluations over 9 pairs, {t:.2?}"))
}

fn criterion_9() -> Check {
    let mut reps: Vec<(String, LinRep)> = zoo().into_iter().map(|(n, r)| (n.to_string(), r)).collect();
    for (a, f) in zoo() {
        for (b, g) in zoo() {
            reps.push((format!("{a} + {b}"), add(&f, &g, &rat(1)).unwrap()));
            reps.push((format!("{a} - {b}"), add(&f, &g, &rat(-1)).unwrap()));
            reps.push((format!("{a} * {b}"), convolve(&f, &g).unwrap()));
        }
    }
    let words = Word::all_up_to(2, 8);
    for (name, r) in &reps {
        let m = minimize(r).map_err(|e| e.to_string())?;
        ensure!(m.dim() <= r.dim(), "{name}: dimension grew");
        for u in &words {
            ensure!(eval(&m, u).unwrap() == eval(r, u).unwrap(), "{name} differs on {u}");
        }
    }
    Ok(format!("{} representations, words up to length 8", reps.len()))
}

fn criterion_10() -> Check {
    let s2 = digit_count(2, 2);
    let b = SeqBudgets::default();
    let mut notes = Vec::new();
    let cases = [
        ("thue-morse", thue_morse(), Some(0)),
        ("s2", s2.clone(), Some(1)),
        ("s2 * s2", convolve(&s2, &s2).unwrap(), None),
    ];
    for (name, rep, expected) in cases {
        let r = growth_degree_seq(&rep, &b).map_err(|e| e.to_string())?;
        let SeqVerdict::FiniteDegree(k) = r.verdict else {
            return Err(format!("{name}: verdict {}", r.verdict.name()));
        };
        if let Some(e) = expected {
            ensure!(k == e, "{name}: degree {k}, expected {e}");
        }
        ensure!(r.max_abs.len() == 17, "{name}: scan stopped at {}", r.max_abs.len() - 1);
        let slope = r.slope.ok_or(format!("{name}: no slope"))?.slope;
        ensure!((slope - k as f64).abs() <= 0.3, "{name}: slope {slope} vs degree {k}");
        notes.push(format!("{name} {k} (slope {slope:.3})"));
    }
    Ok(notes.join(", "))
}

fn criterion_11() -> Check {
    let sets = [unipotent(), heisenberg(), scalar_two(), fibonacci(), nilpotent(), swap()];
    for g in &sets {
        let a = growth_degree(g, &budgets(NormKind::InfOperator)).map_err(|e| e.to_string())?;
        let b = growth_degree(g, &budgets(NormKind::FrobeniusSq)).map_err(|e| e.to_string())?;
        ensure!(
            a.verdict.name() == b.verdict.name() && a.verdict.degree() == b.verdict.degree(),
            "{} vs {}",
            a.verdict.name(),
            b.verdict.name()
        );
    }
    Ok(format!("{} instances agree under inf_operator and frobenius_sq", sets.len()))
}

fn criterion_12() -> Check {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances/heisenberg.json");
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_semigrowth"))
            .args(["analyze", path.to_str().unwrap(), "--reproducible"])
            .env(semigrowth_cli::THREADS_ENV, threads)
            .output()
            .map_err(|e| e.to_string())
    };
    let one = run("1")?;
    let four = run("4")?;
    ensure!(one.status.success() && four.status.success(), "non-zero exit");
    ensure!(one.stdout == four.stdout, "reports differ");
    Ok(format!("{} identical bytes with 1 and 4 threads", one.stdout.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("unipotent instance", criterion_1),
        ("Heisenberg pair", criterion_2),
        ("exponential witnesses", criterion_3),
        ("degenerate instance", criterion_4),
        ("finite semigroup", criterion_5),
        ("tameness cross-check", criterion_6),
        ("telescoping identity", criterion_7),
        ("convolution oracle", criterion_8),
        ("minimization soundness", criterion_9),
        ("sequence growth degrees", criterion_10),
        ("norm independence", criterion_11),
        ("determinism", criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
