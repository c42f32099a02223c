use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use csgoppa::cli::{self, CliError, CodeSpec, FamilyArg, Format, MindistMode, Settings};
use csgoppa::distance::ExactOptions;

#[derive(Parser)]
#[command(
    name = "csgoppa",
    version,
    about = "Cumulative-separable Goppa codes: construction, dimensions, distances and chains"
)]
struct Cli {
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: Format,
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Largest q^k enumerated by exact search.
    #[arg(long, global = true, default_value_t = ExactOptions::default().cap)]
    cap: u64,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the extension-field parity matrix here.
    #[arg(long, global = true)]
    dump_h: Option<PathBuf>,
    /// Write the ordered support here, one element per line.
    #[arg(long, global = true)]
    dump_support: Option<PathBuf>,
    /// Also compute the largest table rows.
    #[arg(long, global = true)]
    include_extended: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeArgs {
    /// gamma1, gamma1star, gamma2, gamma3, c3star, gamma4star, gamma5, gamma6, gamma6minus
    #[arg(long, value_parser = parse_family)]
    family: FamilyArg,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    l: u32,
    /// Cumulativity order i.
    #[arg(long)]
    order: u32,
    /// Multiply the Goppa polynomial by (x - 1)^e.
    #[arg(long, default_value_t = 0)]
    extra_power: u32,
}

impl CodeArgs {
    fn spec(&self) -> CodeSpec {
        CodeSpec { family: self.family, q: self.q, l: self.l, order: self.order, extra_power: self.extra_power }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Recompute a published table (2 to 8).
    Table {
        #[arg(long)]
        id: u32,
    },
    /// Build a code and report its parameters.
    Build(CodeArgs),
    /// Dimension of a code.
    Dim(CodeArgs),
    /// Minimum distance of a code.
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value = "exact", value_parser = parse_mode)]
        mode: MindistMode,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
    /// Check the equivalence chain for one order, or all orders 1..=q.
    VerifyChain {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        order: Option<u32>,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyArg, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

fn parse_mode(s: &str) -> Result<MindistMode, String> {
    s.parse().map_err(|e: CliError| e.to_string())
}

fn run(cli: Cli) -> Result<cli::Output, CliError> {
    let s = Settings {
        format: cli.format,
        threads: cli.threads.max(1),
        cap: cli.cap,
        seed: cli.seed,
        dump_h: cli.dump_h,
        dump_support: cli.dump_support,
        include_extended: cli.include_extended,
    };
    match cli.command {
        Command::Table { id } => cli::cmd_table(id, &s),
        Command::Build(a) => cli::cmd_build(&a.spec(), &s),
        Command::Dim(a) => cli::cmd_dim(&a.spec(), &s),
        Command::Mindist { code, mode, samples } => cli::cmd_mindist(&code.spec(), mode, samples, &s),
        Command::VerifyChain { q, l, order } => cli::cmd_verify_chain(q, l, order, &s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
