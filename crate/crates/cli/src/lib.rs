//! Command-line front end for `knotcover`: compute groups, print tables,
//! run verification sweeps and manage knot catalogs.

pub mod args;
pub mod catalog;
pub mod commands;
pub mod record;

pub use args::Cli;
pub use commands::{run, Output};
