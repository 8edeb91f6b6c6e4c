//! Finite set-theoretic solutions of the braid equation.

pub mod biracks;
pub mod cli;
pub mod coloring;
pub mod enveloping;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod io;
pub mod racks;
pub mod search;
pub mod skew_braces;
pub mod snf;
pub mod tables;
pub mod twisting;

pub use error::{Error, Result};
