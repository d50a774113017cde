//! Command-line front end for the `polymetric` algebra kernel.

pub mod bench;
pub mod config;
pub mod output;
pub mod session;

pub use bench::{generate_inputs, run_bench, BenchError, BenchInputs, BenchParams, BenchReport};
pub use config::{load_config, parse_config, ConfigError, SessionConfig};
pub use output::{parse_basis, render, Format, OutputRecord, RecordError};
pub use session::{run_repl, run_script, Outcome, Session, SessionError};
