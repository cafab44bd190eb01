pub mod cli;
pub mod covers;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod pebbling;
pub mod reductions;
pub mod solver;

pub use error::{Error, Result};
