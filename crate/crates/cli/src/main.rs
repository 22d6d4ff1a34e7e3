//! Command-line surface for exact spectral bounds on regular graphs.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spectral_bound::expr::parse_scalar;
use spectral_bound::{lpbound, Error};

#[derive(Parser)]
#[command(
    name = "spectral-bound",
    version,
    about = "Exact bounds on the order of regular graphs with bounded second eigenvalue",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Upper bound v(k, lambda) with its matching certificate
    Bound(BoundArgs),
}

#[derive(Args)]
struct BoundArgs {
    /// Valency of the graphs in question, at least 2
    #[arg(long)]
    k: u64,
    /// Ceiling on the second eigenvalue: an exact expression such as
    /// "19/10", "sqrt(6)", or "(1+sqrt(5))/2"
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Emit the certificate as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Bound(args) => cmd_bound(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_bound(args: &BoundArgs) -> Result<ExitCode, Error> {
    let lambda = parse_scalar(&args.lambda)?;
    let cert = lpbound::bound_for_lambda(args.k, &lambda)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&cert).expect("certificate serializes")
        );
    } else {
        println!("k = {}", cert.params.k());
        println!("lambda = {}", cert.lambda2);
        println!("t = {}", cert.params.t());
        println!("c = {}", cert.params.c());
        println!("M = {}", cert.m_value);
        println!("v_ub = {}", cert.v_ub);
        if cert.parity_applied {
            println!("note: odd order impossible at odd valency, bound lowered to even");
        }
    }
    Ok(ExitCode::SUCCESS)
}
