//! File formats, claim registry and command-line plumbing over
//! `pfrees-core`.

pub mod budget;
pub mod certificate;
pub mod claims;
pub mod config;
pub mod error;
pub mod family;
pub mod formats;
pub mod properties;
pub mod report;
pub mod runner;

pub use budget::Deadline;
pub use claims::{registry, ClaimRecord, Outcome};
pub use error::CliError;
pub use report::{ClaimReport, Status};
