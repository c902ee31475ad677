//! Command-line front end: file formats, commands and the verify driver.

pub mod args;
pub mod commands;
mod error;
pub mod pgm;
pub mod report;
pub mod sinogram;
pub mod verify;

pub use args::Cli;
pub use error::CliError;

use args::Command;

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Forward(a) => commands::forward(&a),
        Command::Inverse(a) => commands::inverse(&a),
        Command::Simulate(a) => commands::simulate(&a),
        Command::Cost(a) => commands::cost(&a),
        Command::Pareto(a) => commands::pareto(&a),
        Command::Verify(a) => verify::verify(&a),
    }
}
