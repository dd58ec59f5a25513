//! Command-line front end for `semigrowth`.
//!
//! Exit codes: 0 success, 2 input error, 3 internal invariant violation,
//! 4 inconclusive under the given budgets.

pub mod instance;
pub mod report;

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};

use semigrowth::growth::{growth_degree, mn_bruteforce, Budgets, Verdict};
use semigrowth::linalg::{parse_rational, NormKind};
use semigrowth::regseq::{self, growth_degree_seq, LinRep, SeqBudgets, SeqVerdict};
use semigrowth::{Error, Word};

use instance::Instance;
use report::{AnalysisReport, SequenceReport};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "SEMIGROWTH_THREADS";

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Invariant(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Invariant(m) => write!(f, "internal invariant violated: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::AlphabetMismatch { left, right } => {
                CliError::Input(format!("alphabet mismatch: first has {left} symbols, second has {right}"))
            }
            Error::SymbolOutOfRange { .. } | Error::InvalidArgument(_) | Error::InvalidGenerators(_) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Invariant(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "semigrowth", version, about = "Growth classification for integer matrix semigroups and regular sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the growth of m_n for a matrix_set instance.
    Analyze {
        /// Instance file, or `-` for stdin.
        path: PathBuf,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the exact m_n table as CSV.
    Mn {
        path: PathBuf,
        #[arg(long, default_value_t = 32)]
        max_n: usize,
        #[arg(long, default_value = "inf_operator")]
        norm: NormKind,
        #[arg(long, default_value_t = 200_000)]
        frontier_budget: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Operations on linear representations (dfao instances are converted).
    Regseq {
        #[command(subcommand)]
        op: RegseqOp,
    },
    /// Convert a dfao instance to a linrep instance.
    ImportDfao {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RegseqOp {
    /// Evaluate f on a word.
    Eval {
        path: PathBuf,
        /// Symbols 1..m as digits (`112`) or comma-separated (`1,12`); empty for ε.
        word: String,
        /// Read the word as base-m digits 0..m-1, so `10` is the word `21`.
        #[arg(long)]
        digits: bool,
    },
    /// f + λ g.
    Add {
        f: PathBuf,
        g: PathBuf,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        scale: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convolution f ⋆ g.
    Conv {
        f: PathBuf,
        g: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Minimize {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Growth degree of the sequence.
    Growth {
        path: PathBuf,
        /// Longest word length in the empirical max |f(w)| scan.
        #[arg(long, default_value_t = 16)]
        scan_len: usize,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value = "inf_operator")]
    pub norm: NormKind,
    #[arg(long, default_value_t = 32)]
    pub max_n: usize,
    /// Defaults to 2d.
    #[arg(long)]
    pub word_budget: Option<usize>,
    #[arg(long, default_value_t = 1_000_000)]
    pub closure_cap: usize,
    #[arg(long, default_value_t = 200_000)]
    pub frontier_budget: usize,
}

impl BudgetArgs {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            max_n: self.max_n,
            word_budget: self.word_budget,
            closure_cap: self.closure_cap,
            frontier_budget: self.frontier_budget,
            norm: self.norm,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Omit the timestamp so identical runs give identical bytes.
    #[arg(long)]
    pub reproducible: bool,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub out: Option<PathBuf>,
    /// Budgets ran out before a verdict was certified.
    pub inconclusive: bool,
}

impl Outcome {
    fn stdout(text: String) -> Self {
        Self {
            text,
            out: None,
            inconclusive: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.inconclusive {
            4
        } else {
            0
        }
    }

    /// Writes the text to `--out` or stdout.
    pub fn emit(&self) -> Result<(), CliError> {
        match &self.out {
            Some(p) => std::fs::write(p, &self.text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
            None => {
                print!("{}", self.text);
                Ok(())
            }
        }
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    Instance::parse(&text).map_err(|e| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn read_linrep(path: &Path) -> Result<LinRep, CliError> {
    read_instance(path)?.to_linrep()
}

fn timestamp(reproducible: bool) -> Option<u64> {
    (!reproducible).then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Invariant(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn linrep_json(rep: &LinRep) -> Result<String, CliError> {
    to_json(&Instance::from_linrep(rep))
}

pub fn parse_word(text: &str, digits: bool) -> Result<Word, CliError> {
    let parsed = if digits { Word::from_digits(text) } else { text.parse() };
    parsed.map_err(CliError::from)
}

/// `n,m_n,frontier,truncated` rows, then a comment row if the frontier was
/// pruned.
pub fn mn_csv(table: &semigrowth::growth::MnTable) -> String {
    let mut s = String::from("n,m_n,frontier,truncated\n");
    for (n, (v, f)) in table.values.iter().zip(&table.frontier_sizes).enumerate() {
        let _ = writeln!(s, "{n},{v},{f},{}", !table.is_reliable(n));
    }
    if let Some(t) = table.truncated_from {
        let _ = writeln!(s, "# frontier budget exceeded at n={}: rows from n={t} are lower bounds", t - 1);
    }
    s
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze { path, budgets, output } => {
            let gens = read_instance(&path)?.to_generators()?;
            let r = growth_degree(&gens, &budgets.budgets())?;
            let report = AnalysisReport::new(&r, gens.dim(), timestamp(output.reproducible));
            Ok(Outcome {
                text: to_json(&report)?,
                out: output.out,
                inconclusive: matches!(r.verdict, Verdict::Inconclusive { .. }),
            })
        }
        Command::Mn {
            path,
            max_n,
            norm,
            frontier_budget,
            out,
        } => {
            let gens = read_instance(&path)?.to_generators()?;
            let table = mn_bruteforce(&gens, max_n, norm, frontier_budget);
            Ok(Outcome {
                text: mn_csv(&table),
                out,
                inconclusive: false,
            })
        }
        Command::ImportDfao { path, out } => {
            let dfao = read_instance(&path)?.to_dfao()?;
            Ok(Outcome {
                text: linrep_json(&regseq::from_dfao(&dfao))?,
                out,
                inconclusive: false,
            })
        }
        Command::Regseq { op } => run_regseq(op),
    }
}

fn run_regseq(op: RegseqOp) -> Result<Outcome, CliError> {
    match op {
        RegseqOp::Eval { path, word, digits } => {
            let rep = read_linrep(&path)?;
            let w = parse_word(&word, digits)?;
            Ok(Outcome::stdout(format!("{}\n", regseq::eval(&rep, &w)?)))
        }
        RegseqOp::Add { f, g, scale, out } => {
            let lambda = parse_rational(&scale).ok_or_else(|| CliError::Input(format!("`{scale}` is not a rational number")))?;
            let rep = regseq::add(&read_linrep(&f)?, &read_linrep(&g)?, &lambda)?;
            Ok(Outcome {
                text: linrep_json(&rep)?,
                out,
                inconclusive: false,
            })
        }
        RegseqOp::Conv { f, g, out } => {
            let rep = regseq::convolve(&read_linrep(&f)?, &read_linrep(&g)?)?;
            Ok(Outcome {
                text: linrep_json(&rep)?,
                out,
                inconclusive: false,
            })
        }
        RegseqOp::Minimize { path, out } => {
            let rep = regseq::minimize(&read_linrep(&path)?)?;
            if rep.dim() == 0 {
                // instance files need d >= 1, so the zero sequence is written in dimension 1
                let zero = LinRep::from_i64(
                    &[0],
                    vec![semigrowth::Matrix::zeros(1, 1); rep.alphabet()],
                    &[0],
                )?;
                return Ok(Outcome {
                    text: linrep_json(&zero)?,
                    out,
                    inconclusive: false,
                });
            }
            Ok(Outcome {
                text: linrep_json(&rep)?,
                out,
                inconclusive: false,
            })
        }
        RegseqOp::Growth {
            path,
            scan_len,
            budgets,
            output,
        } => {
            let rep = read_linrep(&path)?;
            let r = growth_degree_seq(
                &rep,
                &SeqBudgets {
                    growth: budgets.budgets(),
                    scan_len,
                },
            )?;
            let report = SequenceReport::new(&r, timestamp(output.reproducible));
            Ok(Outcome {
                text: to_json(&report)?,
                out: output.out,
                inconclusive: matches!(r.verdict, SeqVerdict::Inconclusive { .. }),
            })
        }
    }
}

/// Sizes the global thread pool from [`THREADS_ENV`], if set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{THREADS_ENV}={value} is not a thread count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Invariant(e.to_string()))
}
