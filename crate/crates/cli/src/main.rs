use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hessdd::{CartanType, Error, RootSystem};

mod commands;
mod render;

#[derive(Parser)]
#[command(
    name = "hessdd",
    version,
    about = "Flow-up classes and divided differences on highest-root Hessenberg varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots and the highest root.
    Roots {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The Hessenberg graph of a Hessenberg set.
    Graph {
        #[arg(long = "type")]
        ty: CartanType,
        /// full, highest-root, or ideal=<root>;<root>;... (roots as (1,0,1))
        #[arg(long, default_value = "highest-root")]
        hessenberg: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The highest-root family of flow-up classes.
    Classes {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long, value_enum, default_value_t = Basis::Alpha)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Print values as products of roots where possible.
        #[arg(long)]
        factor: bool,
    },
    /// Run verification suites; exits 1 if any check fails.
    Check {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long, default_value = "all")]
        suite: hessdd::Suite,
        /// Skip the character computation on groups with more than 100 elements.
        #[arg(long)]
        quick: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Fiber character of the family and its multiplicities.
    Character {
        #[arg(long = "type")]
        ty: CartanType,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Expands the product P^u P^v in the family.
    Expand {
        #[arg(long = "type")]
        ty: CartanType,
        /// Element as dot-separated simple indices, or e.
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Alpha,
    T,
}

/// Failure modes mapped to exit codes.
pub enum Failure {
    Usage(String),
    /// Report text for a run with failing checks.
    Checks(String),
    Integrity(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_integrity_failure() {
            Failure::Integrity(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Roots { ty, format } => system(ty).and_then(|rs| commands::roots(&rs, format)),
        Command::Graph {
            ty,
            hessenberg,
            format,
        } => system(ty).and_then(|rs| commands::graph(rs, &hessenberg, format)),
        Command::Classes {
            ty,
            basis,
            format,
            factor,
        } => system(ty).and_then(|rs| commands::classes(rs, basis, format, factor)),
        Command::Check {
            ty,
            suite,
            quick,
            format,
        } => system(ty).and_then(|rs| commands::check(rs, suite, quick, format)),
        Command::Character { ty, format } => {
            system(ty).and_then(|rs| commands::character(rs, format))
        }
        Command::Expand { ty, u, v, format } => {
            system(ty).and_then(|rs| commands::expand(rs, &u, &v, format))
        }
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Integrity(e)) => {
            eprintln!("integrity failure: {e}");
            ExitCode::from(3)
        }
    }
}

fn system(ty: CartanType) -> Result<RootSystem, Failure> {
    Ok(RootSystem::new(ty)?)
}
