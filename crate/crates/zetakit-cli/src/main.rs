//! Command-line front end: one binary exposing the exact tables, the
//! high-precision evaluators, and every verification suite, with JSON,
//! CSV, and plain-text rendering, a single named seed for all randomized
//! checks, and a fixed exit-code contract (0 pass, 1 verification
//! failure, 2 usage error, 3 precision insufficient).

mod emit;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Float, Rational};

use zetakit::hpnum::{self, HPComplex};
use zetakit::report::VerificationReport;
use zetakit::suites::{self, RunConfig};
use zetakit::zetafam::{self, Family, PathFilter};
use zetakit::{bernoulli, li, mcl, pseudochar, ramanujan};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Lib(#[from] zetakit::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Lib(zetakit::Error::PrecisionTooLow { .. }) => 3,
        CliError::Lib(zetakit::Error::Parse { .. })
        | CliError::Lib(zetakit::Error::LengthShortfall { .. })
        | CliError::Lib(zetakit::Error::OrderTooLarge { .. })
        | CliError::Usage(_) => 2,
        _ => 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct Globals {
    /// Output format for reports and tables
    #[arg(long, global = true, value_enum, env = "ZETAKIT_FORMAT", default_value = "text")]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long, global = true, env = "ZETAKIT_OUT")]
    out: Option<PathBuf>,
    /// Working precision in bits; raises a command's documented floor,
    /// never lowers it
    #[arg(long, global = true, env = "ZETAKIT_PRECISION")]
    precision: Option<u32>,
    /// Seed for every randomized suite; fixed default keeps runs
    /// reproducible
    #[arg(long, global = true, env = "ZETAKIT_SEED", default_value_t = suites::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for suite execution; 0 keeps the library default
    #[arg(long, global = true, env = "ZETAKIT_WORKERS", default_value_t = 0)]
    workers: usize,
}

impl Globals {
    fn floor(&self, default: u32) -> u32 {
        self.precision.map_or(default, |p| p.max(default))
    }

    fn run_config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            precision: self.precision,
            workers: self.workers,
        }
    }
}

/// Exact and high-precision verification workbench for Bernoulli,
/// Ramanujan-polynomial, and zeta-family identities.
#[derive(Parser, Debug)]
#[command(name = "zetakit", version, propagate_version = true)]
struct Cli {
    #[command(flatten)]
    globals: Globals,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bernoulli-family tables and their verification suites
    Bernoulli(BernoulliCmd),
    /// Ramanujan polynomials: coefficients, invariants, root atlas
    Ramanujan {
        #[command(subcommand)]
        action: RamanujanAction,
    },
    /// Layered corner determinants on rational vectors
    Mcl {
        #[command(subcommand)]
        action: MclAction,
    },
    /// Exact even-argument zeta-family values and identities
    Zeta {
        #[command(subcommand)]
        action: ZetaAction,
    },
    /// High-precision floating evaluators
    Hp {
        #[command(subcommand)]
        action: HpAction,
    },
    /// Li coefficients and the Baez-Duarte sequence
    Li {
        #[command(subcommand)]
        action: LiAction,
    },
    /// Pseudo-characteristic polynomial inequality scans
    Pseudo {
        #[command(subcommand)]
        action: PseudoAction,
    },
    /// Run verification suites and aggregate their reports
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Args, Debug)]
struct BernoulliCmd {
    #[command(subcommand)]
    action: Option<BernoulliAction>,
    /// Which sequence the table lists
    #[arg(long, value_enum, default_value = "B")]
    kind: BernoulliKind,
    /// Largest index in the table
    #[arg(long, default_value_t = 12)]
    max_s: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BernoulliKind {
    /// Classical numbers
    #[value(name = "B")]
    B,
    /// Modified sequence with the odd-index closed form
    #[value(name = "Bstar")]
    BStar,
    /// Primed variant scaled by a power of two
    #[value(name = "Bprime")]
    BPrime,
}

#[derive(Subcommand, Debug)]
enum BernoulliAction {
    /// Trio clauses, even-index recurrence, and the reference table
    Verify {
        /// Largest trio index (the series product runs to twice this)
        #[arg(long, default_value_t = 100)]
        max_s: usize,
    },
}

#[derive(Subcommand, Debug)]
enum RamanujanAction {
    /// Emit the coefficients of the index-r polynomial
    Poly {
        #[arg(long)]
        r: usize,
    },
    /// Structural suites: palindrome, special values, two-point identity
    Verify {
        #[arg(long, default_value_t = 50)]
        max_s: usize,
    },
    /// All roots of the index-r polynomial with moduli and residuals
    Roots {
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand, Debug)]
enum MclAction {
    /// One-vector determinant
    Delta {
        #[arg(long)]
        s: usize,
        /// Comma-separated rationals, e.g. "1/2,3,-5/7"
        #[arg(long)]
        h: String,
    },
    /// Determinant with a weighted first column
    Psi {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        h: String,
        /// Weight vector
        #[arg(long = "H")]
        weights: String,
    },
    /// Determinant with weighted first column and last row
    Lambda {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        h: String,
        #[arg(long = "H")]
        weights: String,
        /// Last-row vector
        #[arg(long = "G")]
        bottom: String,
    },
    /// Seeded random equivalence of recurrence, naive, and composition
    /// routes, plus monomial counts
    Verify {
        #[arg(long, default_value_t = 16)]
        max_s: usize,
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ZetaAction {
    /// Closed-form value of a family member at an even argument
    Value {
        #[arg(long)]
        family: String,
        /// Even argument (2, 4, 6, ...)
        #[arg(long)]
        arg: usize,
    },
    /// Values, recurrences, quadratic identities, and the value ladder
    Verify {
        #[arg(long, default_value_t = 40)]
        max_s: usize,
        /// Restrict multi-route identities to one evaluation path
        #[arg(long, value_enum, default_value = "all")]
        paths: PathChoice,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PathChoice {
    All,
    Recurrence,
    Determinant,
    Composition,
}

impl From<PathChoice> for PathFilter {
    fn from(p: PathChoice) -> Self {
        match p {
            PathChoice::All => PathFilter::All,
            PathChoice::Recurrence => PathFilter::Recurrence,
            PathChoice::Determinant => PathFilter::Determinant,
            PathChoice::Composition => PathFilter::Composition,
        }
    }
}

#[derive(Subcommand, Debug)]
enum HpAction {
    /// Evaluate zeta at a complex point, given as "RE" or "RE,IM"
    Zeta {
        #[arg(long)]
        s: String,
    },
    /// Evaluate the Grosswald series F_s at a point on the upper
    /// half-plane, given as "RE,IM"
    Grosswald {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        z: String,
    },
    /// Modular-shift identities, route agreement, and positivity sums
    #[command(name = "verify-grosswald")]
    VerifyGrosswald {
        #[arg(long, default_value_t = 6)]
        max_s: u32,
    },
}

#[derive(Subcommand, Debug)]
enum LiAction {
    /// Lambda coefficients with all routes and their spread
    Compute {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
    },
    /// The binomial zeta-reciprocal sequence and its scaled form
    #[command(name = "baez-duarte")]
    BaezDuarte {
        #[arg(long, default_value_t = 20)]
        t_max: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PseudoAction {
    /// Run one of the inequality scans
    Verify {
        #[arg(long, value_enum)]
        which: PseudoWhich,
        #[arg(long, default_value_t = 2)]
        s_min: usize,
        /// Largest order; defaults per scan (134 sandwich, 40 sine,
        /// 64 bounds)
        #[arg(long)]
        s_max: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PseudoWhich {
    Thm15,
    Lemma41,
    Lemma42,
    Bounds,
}

#[derive(Subcommand, Debug)]
enum VerifyWhat {
    /// Every registered suite at its default scale
    All,
    /// List the registered suites without running them
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let g = &cli.globals;
    match cli.command {
        Command::Bernoulli(cmd) => match cmd.action {
            Some(BernoulliAction::Verify { max_s }) => emit_reports(
                vec![
                    bernoulli::verify_trio(max_s),
                    bernoulli::verify_even_recurrence(max_s),
                    bernoulli::verify_reference_table(),
                ],
                g,
            ),
            None => {
                let rows = emit::bernoulli_table(cmd.kind, cmd.max_s);
                emit_value(rows, g)
            }
        },
        Command::Ramanujan { action } => match action {
            RamanujanAction::Poly { r } => {
                if r < 2 {
                    return Err(CliError::Usage(
                        "polynomial indices start at r = 2".into(),
                    ));
                }
                emit_value(emit::ramanujan_poly(&ramanujan::ramanujan_poly(r)), g)
            }
            RamanujanAction::Verify { max_s } => emit_reports(
                vec![
                    ramanujan::verify_reciprocal(max_s),
                    ramanujan::verify_special(max_s),
                    ramanujan::verify_two_point(max_s),
                ],
                g,
            ),
            RamanujanAction::Roots { r } => {
                if r < 2 {
                    return Err(CliError::Usage(
                        "polynomial indices start at r = 2".into(),
                    ));
                }
                let entry = ramanujan::root_atlas(r, g.floor(256))?;
                emit_value(emit::root_rows(&entry), g)
            }
        },
        Command::Mcl { action } => match action {
            MclAction::Delta { s, h } => {
                let h = parse_rationals(&h)?;
                emit_value(emit::rational_value(&mcl::delta(&h, s)?), g)
            }
            MclAction::Psi { s, h, weights } => {
                let h = parse_rationals(&h)?;
                let w = parse_rationals(&weights)?;
                emit_value(emit::rational_value(&mcl::psi(&h, &w, s)?), g)
            }
            MclAction::Lambda {
                s,
                h,
                weights,
                bottom,
            } => {
                let h = parse_rationals(&h)?;
                let w = parse_rationals(&weights)?;
                let b = parse_rationals(&bottom)?;
                emit_value(emit::rational_value(&mcl::lambda3(&h, &w, &b, s)?), g)
            }
            MclAction::Verify { max_s, trials } => {
                let mut rng = seeded_rng(g.seed, "mcl-routes");
                emit_reports(
                    vec![
                        mcl::verify_random(max_s, trials, &mut rng),
                        mcl::verify_counts(max_s),
                        mcl::verify_bernoulli_bridge(max_s),
                    ],
                    g,
                )
            }
        },
        Command::Zeta { action } => match action {
            ZetaAction::Value { family, arg } => {
                let family = Family::from_str(&family)?;
                if arg < 2 || arg % 2 != 0 {
                    return Err(CliError::Usage(format!(
                        "closed forms exist at even arguments >= 2, got {arg}"
                    )));
                }
                emit_value(emit::pi_scaled(&zetafam::value(family, arg / 2)), g)
            }
            ZetaAction::Verify { max_s, paths } => {
                let paths = PathFilter::from(paths);
                emit_reports(
                    vec![
                        zetafam::verify_values(max_s),
                        zetafam::verify_recurrences(max_s),
                        zetafam::verify_quadratic(max_s, max_s.min(16), paths),
                        zetafam::verify_fourway(max_s, paths),
                        zetafam::verify_classic_residual(max_s),
                        zetafam::zeta14_worked_examples(),
                    ],
                    g,
                )
            }
        },
        Command::Hp { action } => match action {
            HpAction::Zeta { s } => {
                let prec = g.floor(192);
                let point = parse_complex(&s, prec)?;
                let value = hpnum::zeta_hp(&point, prec)?;
                emit_value(emit::complex_value("zeta", &s, &value, prec), g)
            }
            HpAction::Grosswald { s, z } => {
                let prec = g.floor(192);
                let point = parse_complex(&z, prec)?;
                let value = hpnum::grosswald_f(s, &point, prec)?;
                emit_value(emit::grosswald_value(&value, prec), g)
            }
            HpAction::VerifyGrosswald { max_s } => {
                let prec = g.floor(192);
                let mut reports = hpnum::verify_grosswald_upto(max_s, prec)?;
                reports.extend(hpnum::verify_ramanujan_examples(prec)?);
                emit_reports(reports, g)
            }
        },
        Command::Li { action } => match action {
            LiAction::Compute { n_max } => {
                let (coeffs, _) = li::li_report(n_max, g.floor(256))?;
                let rows = li::route_table(&coeffs)?;
                emit_value(emit::li_rows(&rows), g)
            }
            LiAction::BaezDuarte { t_max } => {
                let rows = li::baez_duarte_c(t_max, g.floor(256))?;
                emit_value(emit::baez_duarte_rows(&rows), g)
            }
        },
        Command::Pseudo { action } => match action {
            PseudoAction::Verify { which, s_min, s_max } => {
                let report = match which {
                    PseudoWhich::Thm15 => {
                        let s_max = s_max.unwrap_or(134);
                        let prec = g.floor(8 * s_max as u32 + 64);
                        pseudochar::verify_thm15(s_min, s_max, prec)?
                    }
                    PseudoWhich::Lemma41 => pseudochar::verify_lemma41(g.floor(1216))?,
                    PseudoWhich::Lemma42 => {
                        let s_max = s_max.unwrap_or(40);
                        if !(1..=40).contains(&s_max) {
                            return Err(CliError::Usage(format!(
                                "the sine expansion scan covers orders 1..=40, got {s_max}"
                            )));
                        }
                        pseudochar::verify_lemma42(s_max, &pseudochar::default_grid(), g.floor(256))?
                    }
                    PseudoWhich::Bounds => {
                        let s_max = s_max.unwrap_or(64);
                        if s_max < 2 {
                            return Err(CliError::Usage(format!(
                                "elementary bounds start at order 2, got {s_max}"
                            )));
                        }
                        pseudochar::elementary_bounds(s_max, g.floor(192))?
                    }
                };
                emit_reports(vec![report], g)
            }
        },
        Command::Verify { what } => match what {
            VerifyWhat::All => {
                let reports = suites::run_all(&g.run_config())?;
                emit_reports(reports, g)
            }
            VerifyWhat::List => emit_value(emit::suite_listing(), g),
        },
    }
}

fn seeded_rng(seed: u64, suite: &str) -> rand_chacha::ChaCha12Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha12Rng::seed_from_u64(suites::suite_seed(seed, suite))
}

fn parse_rationals(text: &str) -> CliResult<Vec<Rational>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            Rational::from_str(part).map_err(|_| {
                CliError::Lib(zetakit::Error::Parse {
                    kind: "rational",
                    text: part.to_string(),
                })
            })
        })
        .collect()
}

fn parse_float(text: &str, prec: u32) -> CliResult<Float> {
    let incomplete = Float::parse(text).map_err(|_| {
        CliError::Lib(zetakit::Error::Parse {
            kind: "decimal number",
            text: text.to_string(),
        })
    })?;
    Ok(Float::with_val(prec, incomplete))
}

/// "RE" or "RE,IM" at the given precision.
fn parse_complex(text: &str, prec: u32) -> CliResult<HPComplex> {
    let mut parts = text.splitn(2, ',');
    let re = parse_float(parts.next().unwrap_or("").trim(), prec)?;
    let im = match parts.next() {
        Some(im) => parse_float(im.trim(), prec)?,
        None => Float::new(prec),
    };
    Ok(HPComplex::new(re, im))
}

fn write_out(g: &Globals, rendered: &str) -> CliResult<()> {
    let mut text = rendered.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &g.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_reports(reports: Vec<VerificationReport>, g: &Globals) -> CliResult<ExitCode> {
    let reports = VerificationReport::merge(reports);
    let rendered = match g.format {
        Format::Json => VerificationReport::to_json(&reports),
        Format::Csv => VerificationReport::to_csv(&reports),
        Format::Text => VerificationReport::to_text(&reports),
    };
    write_out(g, &rendered)?;
    if reports.iter().all(|r| r.passed()) {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn emit_value(table: emit::Table, g: &Globals) -> CliResult<ExitCode> {
    let rendered = match g.format {
        Format::Json => table.to_json(),
        Format::Csv => table.to_csv(),
        Format::Text => table.to_text(),
    };
    write_out(g, &rendered)?;
    Ok(ExitCode::SUCCESS)
}
