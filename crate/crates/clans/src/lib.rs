//! Std front end for `clans-core`: file formats, verification sweeps and the
//! `clans` command line.

pub mod cli;
pub mod formats;
pub mod verify;

pub use clans_core as core;
