//! The `qp` command-line tool.
//!
//! Exit codes: 0 for success or an affirmative answer, 1 for a negative
//! answer (an axiom fails, a classification is refused, a theorem has a
//! counterexample), 2 for usage, input and internal errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::axioms::{self, AxiomChecker, AxiomId};
use crate::chain::{ChainTuple, Elem};
use crate::classify::{self, Factorization, QuasiCheck};
use crate::error::Error;
use crate::func::DiscreteFunction;
use crate::io::{self, TableFile};
use crate::poly::{self, PolynomialCheck};
use crate::rng::{self, Constraint};
use crate::verify::{self, Mode, TheoremId, Universe, PORCELAIN_HEADER};

#[derive(Debug, Parser)]
#[command(name = "qp", version, about = "Lattice polynomial and quasi-polynomial functions over finite chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct UniverseArgs {
    /// Chain size
    #[arg(long)]
    m: usize,
    /// Arity
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    /// Number of functions in the sample modes
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest exhaustive universe accepted
    #[arg(long, default_value_t = verify::DEFAULT_BUDGET)]
    budget: u64,
    /// Stable machine-readable output
    #[arg(long)]
    porcelain: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FactorKindArg {
    Canonical,
    All,
    Sugeno,
    Term,
    WeightedMax,
    WeightedMin,
    Maxitive,
    Minitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstraintArg {
    Any,
    Nondecreasing,
    QuasiPolynomial,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a table, a DNF (.qsf) or a unary map at a tuple
    Eval {
        #[arg(short = 'f', value_name = "PATH")]
        file: PathBuf,
        /// Comma-separated chain elements, e.g. 2,0
        #[arg(short = 'x', value_name = "TUPLE")]
        x: String,
    },
    /// Check one axiom, or list all of them
    Axioms {
        #[arg(short = 'f', value_name = "PATH")]
        file: PathBuf,
        #[arg(long)]
        axiom: Option<String>,
    },
    /// Polynomial and quasi-polynomial class membership
    Classify {
        #[arg(short = 'f', value_name = "PATH")]
        file: PathBuf,
    },
    /// Factorizations f = p∘φ and slot decompositions
    Factor {
        #[arg(short = 'f', value_name = "PATH")]
        file: PathBuf,
        #[arg(long, value_enum, default_value = "canonical")]
        kind: FactorKindArg,
    },
    /// Check a theorem over a universe of functions
    Verify {
        /// Theorem name, or `all`
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Class sizes over an exhaustive universe
    Count {
        #[command(flatten)]
        universe: UniverseArgs,
    },
    /// Print a seeded random table, or write a corpus with --out
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "any")]
        constraint: ConstraintArg,
        /// Corpus size; sample i uses the i-th seed of the master stream
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

/// Failure that ends the command with exit code 2. `None` is a closed
/// output pipe, which ends the command silently.
struct Fatal(Option<String>);

impl Fatal {
    fn msg(text: String) -> Self {
        Fatal(Some(text))
    }
}

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        Fatal(Some(e.to_string()))
    }
}

impl From<std::io::Error> for Fatal {
    fn from(e: std::io::Error) -> Self {
        Fatal((e.kind() != std::io::ErrorKind::BrokenPipe).then(|| e.to_string()))
    }
}

type CmdResult = Result<i32, Fatal>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Fatal(Some(msg))) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Fatal(None)) => 0,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Eval { file, x } => eval(&file, &x, out),
        Command::Axioms { file, axiom } => axioms_cmd(&file, axiom.as_deref(), out),
        Command::Classify { file } => classify_cmd(&file, out),
        Command::Factor { file, kind } => factor(&file, kind, out),
        Command::Verify { theorem, universe } => verify_cmd(&theorem, &universe, out),
        Command::Count { universe } => count(&universe, out),
        Command::Random { m, n, seed, constraint, samples, out: dir } => {
            random(m, n, seed, constraint, samples, dir.as_deref(), out)
        }
    }
}

fn read_table(path: &Path) -> Result<TableFile, Fatal> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Fatal::msg(format!("cannot read {}: {e}", path.display())))?;
    io::parse_any(&text).map_err(|e| Fatal::msg(format!("{}: {e}", path.display())))
}

fn read_function(path: &Path) -> Result<DiscreteFunction, Fatal> {
    match read_table(path)? {
        TableFile::Function(f) => Ok(f),
        TableFile::UnaryMap(phi) => Ok(phi.as_function()),
        TableFile::SetFunction(_) => Err(Fatal::msg(format!("{}: expected a function table (qpf)", path.display()))),
    }
}

fn parse_tuple(text: &str) -> Result<Vec<Elem>, Fatal> {
    text.split(',')
        .map(|t| t.trim().parse::<Elem>().map_err(|_| Fatal::msg(format!("`{t}` is not a chain element"))))
        .collect()
}

fn eval(path: &Path, x: &str, out: &mut dyn Write) -> CmdResult {
    let comps = parse_tuple(x)?;
    let value = match read_table(path)? {
        TableFile::Function(f) => f.eval(&ChainTuple::new(f.chain(), comps)?)?,
        TableFile::UnaryMap(phi) => {
            let f = phi.as_function();
            f.eval(&ChainTuple::new(f.chain(), comps)?)?
        }
        TableFile::SetFunction(alpha) => poly::dnf_eval(&alpha, &ChainTuple::new(alpha.chain(), comps)?)?,
    };
    writeln!(out, "{value}")?;
    Ok(0)
}

fn axioms_cmd(path: &Path, axiom: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let axiom: Option<AxiomId> = axiom.map(str::parse).transpose()?;
    let f = read_function(path)?;
    match axiom {
        Some(a) => {
            let r = axioms::check(&f, &a)?;
            writeln!(out, "{a}: {}", r.describe(&f))?;
            Ok(if r.holds() { 0 } else { 1 })
        }
        None => {
            let checker = AxiomChecker::new(&f);
            for a in AxiomId::all() {
                let r = checker.check(&a)?;
                writeln!(out, "{a}: {}", r.describe(&f))?;
            }
            Ok(0)
        }
    }
}

fn yes_no(out: &mut dyn Write, name: &str, fac: &Option<Factorization>, refusal: Option<String>) -> std::io::Result<()> {
    match (fac, refusal) {
        (Some(fac), _) => writeln!(out, "{name}: yes ({fac})"),
        (None, Some(why)) => writeln!(out, "{name}: no ({why})"),
        (None, None) => writeln!(out, "{name}: no"),
    }
}

fn classify_cmd(path: &Path, out: &mut dyn Write) -> CmdResult {
    let f = read_function(path)?;
    let report = classify::classify(&f)?;
    match &report.polynomial {
        PolynomialCheck::Polynomial(alpha) => writeln!(out, "polynomial: yes (α={alpha})")?,
        PolynomialCheck::NotPolynomial { witness, dnf_value, actual } => {
            writeln!(out, "polynomial: no (witness x={witness}: DNF(α_f)={dnf_value}, f={actual})")?
        }
    }
    match &report.quasi {
        QuasiCheck::Quasi(fac) => writeln!(out, "quasi_polynomial: yes ({fac})")?,
        QuasiCheck::NotQuasi(r) => writeln!(out, "quasi_polynomial: no ({r})")?,
    }
    let refusal_for = |axiom: AxiomId| -> Option<String> {
        report
            .refusals
            .iter()
            .find(|r| r.axiom == axiom)
            .map(|r| format!("{} {}", r.axiom, r.describe(&f)))
    };
    let not_quasi = (!report.is_quasi_polynomial()).then(|| "not quasi-polynomial".to_string());
    yes_no(out, "quasi_sugeno", &report.sugeno, not_quasi.clone())?;
    yes_no(out, "quasi_term", &report.term, not_quasi.clone().or_else(|| refusal_for(AxiomId::QuasiConservative)))?;
    yes_no(out, "quasi_weighted_max", &report.weighted_max, not_quasi.clone().or_else(|| refusal_for(AxiomId::Maxitive)))?;
    yes_no(out, "quasi_weighted_min", &report.weighted_min, not_quasi.or_else(|| refusal_for(AxiomId::Minitive)))?;
    Ok(if report.is_quasi_polynomial() { 0 } else { 1 })
}

/// Prints a refusal and returns exit code 1; other errors are fatal.
fn refusal(e: Error, f: &DiscreteFunction, out: &mut dyn Write) -> CmdResult {
    match e {
        Error::Refused(r) => {
            writeln!(out, "refused: {} {}", r.axiom, r.describe(f))?;
            Ok(1)
        }
        Error::NotQuasiPolynomial(r) => {
            writeln!(out, "refused: not quasi-polynomial ({r})")?;
            Ok(1)
        }
        other => Err(other.into()),
    }
}

fn factor(path: &Path, kind: FactorKindArg, out: &mut dyn Write) -> CmdResult {
    let f = read_function(path)?;
    let single = |r: Result<Factorization, Error>, out: &mut dyn Write| -> CmdResult {
        match r {
            Ok(fac) => {
                writeln!(out, "{fac}")?;
                Ok(0)
            }
            Err(e) => refusal(e, &f, out),
        }
    };
    match kind {
        FactorKindArg::Canonical => match classify::quasi_polynomial(&f)? {
            QuasiCheck::Quasi(fac) => single(Ok(fac), out),
            QuasiCheck::NotQuasi(r) => refusal(Error::NotQuasiPolynomial(r), &f, out),
        },
        FactorKindArg::All => match classify::factorizations(&f) {
            Ok(all) => {
                writeln!(out, "factorizations: {}", all.len())?;
                for fac in all {
                    writeln!(out, "{fac}")?;
                }
                Ok(0)
            }
            Err(e) => refusal(e, &f, out),
        },
        FactorKindArg::Sugeno => single(classify::as_quasi_sugeno(&f), out),
        FactorKindArg::Term => single(classify::as_quasi_term(&f), out),
        FactorKindArg::WeightedMax => single(classify::as_quasi_weighted_max(&f), out),
        FactorKindArg::WeightedMin => single(classify::as_quasi_weighted_min(&f), out),
        FactorKindArg::Maxitive | FactorKindArg::Minitive => {
            let r = if kind == FactorKindArg::Maxitive {
                classify::maxitive_decomposition(&f)
            } else {
                classify::minitive_decomposition(&f)
            };
            match r {
                Ok(slots) => {
                    for (i, s) in slots.iter().enumerate() {
                        writeln!(out, "f_{}={s}", i + 1)?;
                    }
                    Ok(0)
                }
                Err(e) => refusal(e, &f, out),
            }
        }
    }
}

fn universe(args: &UniverseArgs) -> Result<Universe, Fatal> {
    let mode: Mode = args.mode.parse()?;
    let u = Universe { m: args.m, n: args.n, mode, samples: args.samples, seed: args.seed, budget: args.budget };
    u.size()?;
    Ok(u)
}

fn verify_cmd(theorem: &str, args: &UniverseArgs, out: &mut dyn Write) -> CmdResult {
    let theorems: Vec<TheoremId> = if theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL
            .iter()
            .copied()
            .filter(|&t| t != TheoremId::BooleanHorizontal || args.m == 2)
            .collect()
    } else {
        vec![theorem.parse()?]
    };
    let u = universe(args)?;
    if args.porcelain {
        writeln!(out, "{PORCELAIN_HEADER}")?;
    }
    let mut code = 0;
    for t in theorems {
        let report = verify::verify_with_jobs(t, &u, args.jobs)?;
        if args.porcelain {
            writeln!(out, "{}", report.porcelain())?;
        } else if theorem.eq_ignore_ascii_case("all") {
            writeln!(out, "{t}: {}", report.summary())?;
        } else {
            writeln!(out, "{}", report.summary())?;
        }
        if !report.holds() {
            code = 1;
        }
    }
    Ok(code)
}

fn count(args: &UniverseArgs, out: &mut dyn Write) -> CmdResult {
    let u = universe(args)?;
    let counts = verify::count_classes_with_jobs(&u, args.jobs)?;
    if args.porcelain {
        writeln!(out, "{PORCELAIN_HEADER}")?;
        for (name, c) in counts {
            writeln!(out, "class={name}\tm={}\tn={}\tmode={}\tcount={c}", u.m, u.n, u.mode)?;
        }
    } else {
        for (name, c) in counts {
            writeln!(out, "{name}: {c}")?;
        }
    }
    Ok(0)
}

fn generate(m: usize, n: usize, seed: u64, constraint: ConstraintArg) -> Result<DiscreteFunction, Error> {
    match constraint {
        ConstraintArg::Any => rng::random_function(m, n, seed, Constraint::Any),
        ConstraintArg::Nondecreasing => rng::random_function(m, n, seed, Constraint::Nondecreasing),
        ConstraintArg::QuasiPolynomial => rng::random_quasi_polynomial(m, n, seed),
    }
}

fn random(
    m: usize,
    n: usize,
    seed: u64,
    constraint: ConstraintArg,
    samples: Option<u64>,
    dir: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    match (samples, dir) {
        (None, None) => {
            out.write_all(io::format_function(&generate(m, n, seed, constraint)?).as_bytes())?;
        }
        (samples, Some(dir)) => {
            let count = samples.unwrap_or(1);
            let width = count.saturating_sub(1).to_string().len().max(4);
            std::fs::create_dir_all(dir)?;
            for i in 0..count {
                let f = generate(m, n, rng::sample_seed(seed, i), constraint)?;
                let path = dir.join(format!("f{i:0width$}.qpf"));
                std::fs::write(&path, io::format_function(&f))?;
            }
            writeln!(out, "wrote {count} tables to {}", dir.display())?;
        }
        (Some(_), None) => return Err(Fatal::msg("--samples needs --out".into())),
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::tuple_string;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run_args(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());
        let (code, _, _) = run_args(&["verify", "--theorem", "T-QUASIPOL", "--m", "3"]);
        assert_eq!(code, 2);
        let (code, _, err) = run_args(&["verify", "--theorem", "T-NOPE", "--m", "3", "--n", "2"]);
        assert_eq!((code, err.as_str()), (2, "error: unknown theorem `T-NOPE`\n"));
    }

    #[test]
    fn validation_precedes_file_reads() {
        let (code, _, err) = run_args(&["axioms", "-f", "/nonexistent.qpf", "--axiom", "BOGUS"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown axiom"), "{err}");
    }

    #[test]
    fn budget_is_enforced() {
        let (code, _, err) = run_args(&["verify", "--theorem", "T-QUASIPOL", "--m", "3", "--n", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("3^27"), "{err}");
    }

    #[test]
    fn tuple_parsing() {
        assert_eq!(parse_tuple("2, 0").ok(), Some(vec![2, 0]));
        assert!(parse_tuple("2,x").is_err());
        assert!(parse_tuple("300").is_err());
        assert_eq!(tuple_string(&[1, 2]), "(1,2)");
    }
}
