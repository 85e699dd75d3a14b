//! The Mouse trap: an invariant game with P-positions {⌊3n/2⌋, 3n − 1}.

use invariant_games::{catalog, format_positions};
use invariant_games::sequences::{check_sac, TParam};
use invariant_games::solver::solve;
use invariant_games::star::{sequence_game, star, verify_duality};

fn main() -> invariant_games::Result<()> {
    let entry = catalog::get("mouse-trap")?;
    println!("{}", check_sac(&entry.pair(1000)?, TParam::Fixed(2)));

    let pairs = entry.pair_covering(300)?;
    println!("{}", verify_duality(&pairs, 300)?);

    // the trap itself: moves are the P-positions of the dual
    let h = star(&sequence_game(&pairs, "mouse*"), 30)?;
    let p: Vec<_> = solve(&h, 30)?.p_positions().into_iter().filter(|p| p.x <= p.y).collect();
    println!("P(trap) on [0,30]^2: {}", format_positions(&p));
    Ok(())
}
