mod args;
mod commands;
mod config;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Build(a) => commands::build(a),
        Command::Switch(a) => commands::switch(a),
        Command::Verify(a) => commands::verify(a),
        Command::Witness(a) => commands::witness(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Explore(a) => commands::explore(a),
        Command::Export(a) => commands::export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("srgswitch: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
