//! (1,2)-GDWN: its P-set does not come back under a double star.

use invariant_games::catalog;
use invariant_games::solver::solve;
use invariant_games::star::{star, verify_duality};
use invariant_games::{sub, Position};

fn main() -> invariant_games::Result<()> {
    let g = catalog::gdwn12();
    let table = solve(&g, 258)?;
    let (p, q) = (Position::new(115, 258), Position::new(104, 235));
    println!("{p} and {q} are P in gdwn12: {}", table.is_p(p) && table.is_p(q));
    let r = sub(p, q)?;
    let dual = solve(&star(&g, 258)?, 258)?;
    println!("{p} ⊖ {q} = {r}, P in gdwn12*: {}", dual.is_p(r));

    let pairs = catalog::get("table3-extended")?.pair_covering(300)?;
    println!("{}", verify_duality(&pairs, 300)?);
    Ok(())
}
