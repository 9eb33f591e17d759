//! `apnkit`: reproducible reports for APN exponents, the curves `g_t`,
//! their singular points, intersection audits and the t = 205 factor.

mod commands;
mod config;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Format, RunConfig, CONFIG_ENV};
use report::Outcome;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_CEILING: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "apnkit", version, about = "Exact checks on APN power maps, the curves g_t and their singularities")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// key=value configuration file (default: $APNKIT_CONFIG).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the report here; stdout then carries only a summary.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Ceiling on scan field degrees; also caps the acceptance grids.
    #[arg(long, global = true)]
    pub max_n: Option<u32>,
    #[arg(long, global = true)]
    pub max_root_field: Option<u32>,
    #[arg(long, global = true)]
    pub max_trial_degree: Option<u32>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Finite field parameters and roots of unity.
    Field {
        #[command(subcommand)]
        action: commands::FieldCmd,
    },
    /// The curves f_t = w g_t and their point counts.
    Curves {
        #[command(subcommand)]
        action: commands::CurvesCmd,
    },
    /// Differential spectra and the three-way APN cross-check.
    Apn {
        #[command(subcommand)]
        action: commands::ApnCmd,
    },
    /// Singular points of f_t with multiplicities.
    Singular {
        #[command(subcommand)]
        action: commands::SingularCmd,
    },
    /// Exact inequality audits and intersection-number checks.
    Bezout {
        #[command(subcommand)]
        action: commands::BezoutCmd,
    },
    /// Divisibility certificates and bounded factor searches.
    Factor {
        #[command(subcommand)]
        action: commands::FactorCmd,
    },
    /// Gold and Kasami-Welch exponents up to a limit.
    Sequence {
        #[arg(long, default_value_t = 1025)]
        limit: u64,
    },
    /// Run every acceptance criterion and emit a manifest.
    VerifyAll,
}

fn resolve_config(g: &GlobalArgs) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    let path = g.config.clone().or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    if let Some(p) = path {
        cfg.apply_file(&p)?;
    }
    if let Some(v) = g.max_n {
        cfg.set("max_n", &v.to_string())?;
    }
    if let Some(v) = g.max_root_field {
        cfg.set("max_root_field", &v.to_string())?;
    }
    if let Some(v) = g.max_trial_degree {
        cfg.set("max_trial_degree", &v.to_string())?;
    }
    if let Some(v) = g.seed {
        cfg.seed = v;
    }
    if let Some(v) = g.workers {
        cfg.workers = v;
    }
    if let Some(f) = g.format {
        cfg.format = f;
    }
    if let Some(o) = &g.out {
        cfg.out = Some(o.clone());
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match resolve_config(&cli.global) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if cfg.workers > 0 {
        // ignore a second initialisation
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build_global();
    }
    let report = match commands::dispatch(&cli.cmd, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.message);
            return ExitCode::from(e.code);
        }
    };
    let rendered = report.render(&cfg);
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
            println!("{}", report.summary);
        }
        None => {
            let _ = std::io::stdout().write_all(rendered.as_bytes());
        }
    }
    match report.outcome {
        Outcome::Pass => ExitCode::from(EXIT_PASS),
        Outcome::Fail => ExitCode::from(EXIT_FAIL),
    }
}
