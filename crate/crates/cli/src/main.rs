use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use extq_cli::{render, run, Command, Format, RunConfig};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

/// Extended quotients, Springer data, the parameter bijection and L-packets
/// for a Bernstein point of a small split group.
#[derive(Parser, Debug)]
#[command(name = "extq", version)]
struct Args {
    /// Root datum, e.g. SL2, GL3, Sp4, G2, A2:sc, A1*A1.
    datum: String,
    /// Generator of the image of c^s as a torsion vector, e.g. 1/2,0. Repeatable; none means Iwahori.
    #[arg(long = "gens", value_name = "VEC")]
    gens: Vec<String>,
    /// extquot, unipotents, springer, bijection, lpackets or check-cc. Repeatable or comma separated.
    #[arg(long = "cmd", value_name = "CMD", value_delimiter = ',', required = true)]
    cmd: Vec<String>,
    /// Evaluate torsion points of order at most this.
    #[arg(long = "torsion-bound", default_value_t = 4)]
    torsion_bound: u32,
    /// Residual characteristic for check-cc.
    #[arg(long)]
    p: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let commands = match args.cmd.iter().map(|c| Command::parse(c.trim())).collect::<Result<Vec<_>, _>>() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let config = RunConfig {
        datum: args.datum,
        gens: args.gens,
        commands,
        torsion_bound: args.torsion_bound,
        p: args.p,
        format: match args.format {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
        },
    };
    let report = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let text = render(&report, config.format);
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    for v in &report.violations {
        eprintln!("violation: {v}");
    }
    ExitCode::from(report.exit_code() as u8)
}
