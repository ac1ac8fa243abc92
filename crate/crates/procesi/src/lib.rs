//! Command-line and file-format layer over `procesi-core`: an on-disk fiber
//! cache, JSON/TSV reports and the `procesi` binary's subcommands.

pub mod cache;
pub mod cli;
pub mod report;

pub use procesi_core;
