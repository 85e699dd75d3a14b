//! Superadditivity and complementarity checks on sequence prefixes.

use invariant_games::catalog;
use invariant_games::sequences::{check_prop21, check_relaxed_growth, check_sac, TParam};

fn main() -> invariant_games::Result<()> {
    for key in ["table1", "table2", "mouse-trap", "beatty:phi"] {
        let pair = catalog::get(key)?.pair(1000)?;
        println!("== {key}\n{}\n", check_sac(&pair, TParam::Auto));
    }
    let wythoff = catalog::get("beatty:phi")?.pair(300)?;
    println!("relaxed growth on wythoff: {}", check_relaxed_growth(&wythoff));
    println!("{}", check_prop21(&wythoff));
    Ok(())
}
