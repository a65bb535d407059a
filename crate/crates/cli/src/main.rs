mod cache;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ospchar::verify::{self, SuiteOptions};
use ospchar::{Algebra, Family, HalfInt, Suite, Weight};

use crate::render::Format;

#[derive(Parser)]
#[command(
    name = "ospchar",
    version,
    about = "Characters of osp(2m|2) and osp(2m+1|2) irreducibles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// B for osp(2m+1|2), D for osp(2m|2)
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    m: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots and ρ.
    Roots {
        #[command(flatten)]
        common: Common,
    },
    /// ch L_λ as a combination of generalized Verma characters.
    Expand {
        #[command(flatten)]
        common: Common,
        /// Highest weight "λ0;λ1,…,λm"
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, env = "OSPCHAR_CACHE")]
        cache_dir: Option<PathBuf>,
    },
    /// The formal character, in full or above a δ cutoff.
    Char {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Smallest δ-coordinate to report; omit for the whole character
        #[arg(long, allow_hyphen_values = true)]
        min_delta: Option<String>,
    },
    /// dim L_λ.
    Dim {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Composition factors of L_λ ⊗ L_δ.
    Tensor {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Block of an integral weight, or whether two weights share one.
    Block {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, allow_hyphen_values = true)]
        other: Option<String>,
    },
    /// Run verification suites. Exits 1 if anything fails.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Check a single weight (per-weight suites)
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long)]
        max_height: Option<i64>,
        #[arg(long)]
        q_max: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        min_delta: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Telescoping,
    Natural,
    Typical,
    Tensor,
    Cohomology,
    Blocks,
    Mirror,
    Reflected,
    Peel,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        let one = match self {
            SuiteArg::All => return Suite::ALL.to_vec(),
            SuiteArg::Telescoping => Suite::Telescoping,
            SuiteArg::Natural => Suite::Natural,
            SuiteArg::Typical => Suite::Typical,
            SuiteArg::Tensor => Suite::Tensor,
            SuiteArg::Cohomology => Suite::Cohomology,
            SuiteArg::Blocks => Suite::Blocks,
            SuiteArg::Mirror => Suite::Mirror,
            SuiteArg::Reflected => Suite::Reflected,
            SuiteArg::Peel => Suite::Peel,
        };
        vec![one]
    }
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: ospchar::Error| e.to_string())
}

fn algebra(c: &Common) -> Result<Algebra> {
    Ok(Algebra::new(c.family, c.m)?)
}

fn weight(alg: Algebra, s: &str) -> Result<Weight> {
    alg.parse_weight(s)
        .with_context(|| format!("bad weight {s:?}"))
}

fn half(s: &str) -> Result<HalfInt> {
    s.parse::<HalfInt>()
        .map_err(anyhow::Error::from)
        .with_context(|| format!("bad --min-delta {s:?}"))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = match cli.command {
        Command::Roots { common } => render::roots(algebra(&common)?, common.format)?,
        Command::Expand {
            common,
            weight: w,
            cache_dir,
        } => {
            let alg = algebra(&common)?;
            let lambda = weight(alg, &w)?;
            let e = cache::expansion(cache_dir.as_deref(), alg, &lambda)?;
            render::expansion(&e, common.format)?
        }
        Command::Char {
            common,
            weight: w,
            min_delta,
        } => {
            let alg = algebra(&common)?;
            let lambda = weight(alg, &w)?;
            let c = match min_delta.as_deref().map(half).transpose()? {
                Some(cut) => ospchar::irreducible_character(alg, &lambda, cut)?,
                None => ospchar::finite_character(alg, &lambda)?,
            };
            render::character(&lambda, &c, common.format)?
        }
        Command::Dim { common, weight: w } => {
            let alg = algebra(&common)?;
            let lambda = weight(alg, &w)?;
            render::dimension(
                alg,
                &lambda,
                ospchar::dimension(alg, &lambda)?,
                common.format,
            )?
        }
        Command::Tensor { common, weight: w } => {
            let alg = algebra(&common)?;
            let lambda = weight(alg, &w)?;
            render::tensor(&ospchar::tensor_decompose(alg, &lambda)?, common.format)?
        }
        Command::Block {
            common,
            weight: w,
            other,
        } => {
            let alg = algebra(&common)?;
            let lambda = weight(alg, &w)?;
            let other = other.map(|o| weight(alg, &o)).transpose()?;
            render::block(alg, &lambda, other.as_ref(), common.format)?
        }
        Command::Verify {
            common,
            suite,
            weight: w,
            max_height,
            q_max,
            min_delta,
        } => {
            let alg = algebra(&common)?;
            let opts = SuiteOptions {
                weight: w.map(|s| weight(alg, &s)).transpose()?,
                max_height,
                q_max,
                min_delta: min_delta.as_deref().map(half).transpose()?,
            };
            let reports = suite
                .suites()
                .into_iter()
                .map(|s| verify::run_suite(alg, s, &opts))
                .collect::<ospchar::Result<Vec<_>>>()?;
            print!("{}", render::reports(&reports, common.format)?);
            let ok = reports.iter().all(|r| r.passed());
            return Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

/// 2 for malformed input, 3 for valid input outside the mathematical domain.
fn exit_code(err: &anyhow::Error) -> u8 {
    use ospchar::Error as E;
    match err.downcast_ref::<E>() {
        Some(E::Parse { .. } | E::RankMismatch { .. }) => 2,
        Some(E::Internal(_)) | None => 1,
        Some(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
