use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ordwalk::cli::{self, CliConfig, CohenCommand, Format, ProviderChoice};
use ordwalk::forcing::DEFAULT_SEARCH_BOUND;
use ordwalk::tree::TreeVariant;
use ordwalk::verify::SampleSpec;
use ordwalk::Ordinal;

/// Minimal walks on ordinals below epsilon_0.
#[derive(Parser)]
#[command(name = "ordwalk", version)]
struct Cli {
    /// `canonical` or `override:<file>`
    #[arg(long, global = true, default_value = "canonical")]
    provider: ProviderChoice,
    /// text, json or dot
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// e.g. `below:w^3:4;cap=500`, `list:1,w,w+1`
    #[arg(long, global = true)]
    sample: Option<SampleSpec>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Walk from the larger ordinal down to the smaller one.
    Walk { from: Ordinal, to: Ordinal },
    /// Build a sampled fragment of T(o) / T(osc).
    Tree {
        /// Comma-separated builders.
        #[arg(long)]
        builders: String,
        /// Comma-separated heights; defaults to the builders.
        #[arg(long, default_value = "")]
        heights: String,
        #[arg(long, value_enum, default_value = "o")]
        variant: Variant,
        /// Also check that both value families give the same verdicts.
        #[arg(long)]
        iso: bool,
    },
    /// Cohen conditions and modified ladders.
    #[command(subcommand)]
    Cohen(Cohen),
    /// Run a verification suite (`facts`, `weights`, `oscillation`, `iso`,
    /// `forcing` or `all`).
    Verify {
        suite: String,
        /// Pin file; written on first use.
        #[arg(long)]
        pins: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Osc,
    O,
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    alpha: Ordinal,
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Condition as inline JSON or a file; empty by default.
    #[arg(long)]
    condition: Option<String>,
}

#[derive(Subcommand)]
enum Cohen {
    /// Print C^x_alpha for a real given inline or as a file.
    Modify {
        #[arg(long)]
        alpha: Ordinal,
        #[arg(long)]
        real: Option<String>,
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// Exit 0 iff the condition lies in d_(alpha,n).
    DensityCheck(Target),
    /// Extend the condition into d_(alpha,n).
    Extend {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        bound: usize,
    },
    /// Meet every listed dense set, e.g. `--targets w:0,w:5,w^2:1`.
    Generic {
        #[arg(long)]
        targets: String,
    },
    /// Run an initial-agreement scenario file.
    Scenario {
        path: PathBuf,
        /// Drop h(gamma+1) from x(m) first; the run should then fail.
        #[arg(long)]
        mutate: bool,
    },
}

fn run(cli: Cli) -> ordwalk::Result<cli::Output> {
    let cfg = CliConfig {
        provider: cli.provider,
        format: cli.format,
        sample: cli.sample.unwrap_or_default(),
        seed: cli.seed,
    };
    match cli.command {
        Command::Walk { from, to } => cli::cmd_walk(&from, &to, &cfg),
        Command::Tree {
            builders,
            heights,
            variant,
            iso,
        } => {
            let variant = match variant {
                Variant::Osc => TreeVariant::Osc,
                Variant::O => TreeVariant::O,
            };
            cli::cmd_tree(&cli::parse_list(&builders)?, &cli::parse_list(&heights)?, variant, iso, &cfg)
        }
        Command::Cohen(c) => {
            let command = match c {
                Cohen::Modify { alpha, real, count } => CohenCommand::Modify {
                    real: cli::parse_real(real.as_deref())?,
                    alpha,
                    count,
                },
                Cohen::DensityCheck(t) => CohenCommand::DensityCheck {
                    condition: cli::parse_condition(t.condition.as_deref())?,
                    alpha: t.alpha,
                    n: t.n,
                },
                Cohen::Extend { target: t, bound } => CohenCommand::Extend {
                    condition: cli::parse_condition(t.condition.as_deref())?,
                    alpha: t.alpha,
                    n: t.n,
                    bound,
                },
                Cohen::Generic { targets } => CohenCommand::Generic {
                    targets: cli::parse_targets(&targets)?,
                },
                Cohen::Scenario { path, mutate } => CohenCommand::Scenario { path, mutate },
            };
            cli::cmd_cohen(&command, &cfg)
        }
        Command::Verify { suite, pins } => cli::cmd_verify(&suite, pins.as_deref(), &cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    let output = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &out {
        Some(path) => std::fs::write(path, &output.body),
        None => {
            print!("{}", output.body);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if output.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
