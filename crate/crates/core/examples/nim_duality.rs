//! Nim and the empty game are each other's duals.
//!
//! ```text
//! cargo run --example nim_duality
//! ```

use invariant_games::catalog;
use invariant_games::{enumerate_moves, format_positions};
use invariant_games::solver::solve;
use invariant_games::star::{iterate_star, same_moves, star};

fn main() -> invariant_games::Result<()> {
    let bound = 12;
    let nim = catalog::nim2();
    let nim_star = star(&nim, bound)?;
    println!("P(nim2)        = {}", format_positions(&solve(&nim, 4)?.p_positions()));
    println!("moves of nim2* = {} ...", format_positions(&enumerate_moves(&nim_star, bound)?[..4]));
    println!("P(nim2*)       = {} ...", format_positions(&solve(&nim_star, bound)?.p_positions()[..6]));
    let back = iterate_star(&nim, 2, bound)?;
    println!("nim2** = nim2 on [0,{bound}]^2: {}", same_moves(&back, &nim, bound)?);

    let empty = catalog::get("empty")?.spec(bound)?;
    let full = star(&empty, 3)?;
    let moves = enumerate_moves(&full, 3)?.len();
    println!("empty* has {moves} moves on [0,3]^2, P = {}", format_positions(&solve(&full, 3)?.p_positions()));
    Ok(())
}
