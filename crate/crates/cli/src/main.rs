//! `qsl2`: exact computations in U_t(sl(2)) from the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{CliError, Format, Status};

#[derive(Parser, Debug)]
#[command(name = "qsl2", version, about = "Exact computer algebra for U_t(sl(2))")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Evaluate every scalar at this positive rational point, e.g. `2`, `3/2` or `1.000001`
    #[arg(long, global = true, value_name = "T0")]
    numeric: Option<String>,
    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (the default)
    #[arg(long, global = true)]
    text: bool,
    /// Write the result to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rewrite an expression into PBW normal form `e^a f^b k^c`
    NormalForm { expr: String },
    /// Matrix of an element in the spin-`l` irreducible representation
    Rep { l: String, expr: String },
    /// Clebsch-Gordan table of `V^k ⊗ V^l`, grouped by `j` then `m`
    Cg {
        k: String,
        l: String,
        /// Emit `j,m,p,n,value` rows instead of the grouped layout
        #[arg(long)]
        csv: bool,
    },
    /// Reduced matrix element of the adjoint-orbit operator of spin `l` acting on `V^j`
    WignerEckart { l: String, j: String },
    /// Central element built from the spin-`j` adjoint orbit, with centrality checks
    Center { j: String },
    /// Spin-`l` basis of the adjoint representation and its relation checks
    AdjointBasis {
        l: String,
        /// Print the vectors of the explicit double-sum formula
        #[arg(long)]
        closed_form: bool,
    },
}

fn run(cli: Cli) -> Result<Status, CliError> {
    let numeric = cli.global.numeric.as_deref().map(output::parse_point).transpose()?;
    let max_spin = output::max_spin()?;
    let ctx = commands::Context { numeric, max_spin };
    let format = if cli.global.json { Format::Json } else { Format::Text };
    let report = match &cli.command {
        Command::NormalForm { expr } => commands::normal_form(&ctx, expr)?,
        Command::Rep { l, expr } => commands::rep(&ctx, l, expr)?,
        Command::Cg { k, l, csv } => {
            let format = if *csv { Format::Csv } else { format };
            let r = commands::cg(&ctx, k, l)?;
            return output::emit(&r, format, cli.global.output.as_deref());
        }
        Command::WignerEckart { l, j } => commands::wigner_eckart(&ctx, l, j)?,
        Command::Center { j } => commands::center(&ctx, j)?,
        Command::AdjointBasis { l, closed_form } => commands::adjoint_basis(&ctx, l, *closed_form)?,
    };
    output::emit(&report, format, cli.global.output.as_deref())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
