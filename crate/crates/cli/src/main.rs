use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use l2dim_cli::{run, Command, Input, JobSpec, Options, Reduce};

/// Exact von Neumann dimensions, L²-Betti numbers and localization
/// witnesses over group rings.
#[derive(Parser, Debug)]
#[command(name = "l2dim", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Input file; `-` reads standard input.
    #[arg(conflicts_with = "inline")]
    input: Option<PathBuf>,
    /// Inline payload with `;` separating lines.
    #[arg(long)]
    inline: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Ball radius for certify-ore-failure.
    #[arg(long, default_value_t = 4)]
    radius: usize,
    /// Emit `key=value` records.
    #[arg(long)]
    machine: bool,
    /// Matrix sizes for the free-group evaluation oracle.
    #[arg(long, value_delimiter = ',', default_value = "2,4,6,8")]
    ladder: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Reduce::None)]
    reduce: Reduce,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let input = match (args.input, args.inline) {
        (Some(p), _) => Input::Path(p),
        (None, Some(s)) => Input::Inline(s),
        (None, None) => Input::None,
    };
    let spec = JobSpec {
        command: args.command,
        input,
        options: Options {
            seed: args.seed,
            radius: args.radius,
            machine: args.machine,
            ladder: args.ladder,
            reduce: args.reduce,
        },
    };
    let outcome = run(&spec);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.exit_code as u8)
}
