use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiabelian::engine::Minimality;
use semiabelian::epi::{Conjugation, TowerKind};
use semiabelian::group::VerifyConfig;

use sgl::commands::{run_command, Command, RunConfig, CHECK_FAILURE_EXIT};
use sgl::eval::DEFAULT_MAX_ORDER;
use sgl::report::render_text;

/// Semiabelian p-group analysis.
#[derive(Parser)]
#[command(name = "sgl", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, rank, Frattini subgroup, semiabelian test and decomposition chain.
    Analyze(Common),
    /// A minimal decomposition G = AH.
    Decompose(Common),
    /// The full decomposition chain and a rank-graded chain.
    Chain(Common),
    /// Builds an iterated semidirect or wreath tower mapping onto G.
    Tower {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Kind::Wreath)]
        kind: Kind,
    },
    /// Cross-checks every computation against independent methods.
    Verify(Common),
    /// Summarizes the built-in catalog of small p-groups.
    Census(Options),
}

#[derive(Args)]
struct Common {
    /// Group expression such as "C4 x C2", "C4 : C2 [inv]" or "C2 wr C2".
    expr: String,
    #[command(flatten)]
    options: Options,
}

#[derive(Args)]
struct Options {
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Largest group order that may be constructed.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: u64,
    /// Homomorphisms on domains up to this order are checked on all pairs.
    #[arg(long, default_value_t = VerifyConfig::default().exhaustive_limit)]
    max_verify: usize,
    /// Seed for sampled homomorphism checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Ordering::Inclusion)]
    ordering: Ordering,
    #[arg(long, value_enum, default_value_t = Conj::Right)]
    conjugation: Conj,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Wreath,
    Semidirect,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ordering {
    Inclusion,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum Conj {
    Right,
    Left,
}

impl Options {
    fn config(&self) -> RunConfig {
        RunConfig {
            max_order: self.max_order,
            verify: VerifyConfig {
                exhaustive_limit: self.max_verify,
                seed: self.seed,
                ..VerifyConfig::default()
            },
            ordering: match self.ordering {
                Ordering::Inclusion => Minimality::Inclusion,
                Ordering::Order => Minimality::Order,
            },
            conjugation: match self.conjugation {
                Conj::Right => Conjugation::Right,
                Conj::Left => Conjugation::Left,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, expr, options) = match &cli.command {
        Cmd::Analyze(c) => (Command::Analyze, c.expr.as_str(), &c.options),
        Cmd::Decompose(c) => (Command::Decompose, c.expr.as_str(), &c.options),
        Cmd::Chain(c) => (Command::Chain, c.expr.as_str(), &c.options),
        Cmd::Tower { common, kind } => {
            let kind = match kind {
                Kind::Wreath => TowerKind::Wreath,
                Kind::Semidirect => TowerKind::Semidirect,
            };
            (Command::Tower(kind), common.expr.as_str(), &common.options)
        }
        Cmd::Verify(c) => (Command::Verify, c.expr.as_str(), &c.options),
        Cmd::Census(o) => (Command::Census, "", o),
    };
    match run_command(cmd, expr, &options.config()) {
        Ok(report) => {
            if options.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", render_text(&report));
            }
            if report.has_failures() {
                ExitCode::from(CHECK_FAILURE_EXIT as u8)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
