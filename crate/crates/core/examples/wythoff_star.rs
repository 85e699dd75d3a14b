//! The dual of Wythoff Nim, and why a second star does not return Wythoff Nim.

use invariant_games::catalog;
use invariant_games::solver::solve;
use invariant_games::star::{iterate_star, same_moves, star};
use invariant_games::{format_positions, Position};

fn main() -> invariant_games::Result<()> {
    let wythoff = catalog::wythoff();
    let ws = star(&wythoff, 12)?;
    let off_axis: Vec<Position> = solve(&ws, 12)?
        .p_positions()
        .into_iter()
        .filter(|p| p.min_coord() >= 1 && p.x <= p.y)
        .collect();
    println!("first off-axis P-positions of wythoff*: {}", format_positions(&off_axis));

    let bound = 200;
    let once = star(&wythoff, bound)?;
    let twice = iterate_star(&wythoff, 2, bound)?;
    let thrice = iterate_star(&wythoff, 3, bound)?;
    println!("wythoff** = wythoff:   {}", same_moves(&twice, &wythoff, bound)?);
    println!("wythoff*** = wythoff*: {}", same_moves(&thrice, &once, bound)?);
    Ok(())
}
