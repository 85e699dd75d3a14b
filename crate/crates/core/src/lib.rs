//! Two-pile invariant subtraction games.

pub mod board;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod sequences;
pub mod solver;
pub mod star;

pub use board::{add, enumerate_moves, format_positions, leq, sub, GameSpec, MoveGenerator, Position};
pub use error::{Error, Result};
