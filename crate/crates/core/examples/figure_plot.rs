//! Writes the P-set of wythoff* as plain PBM bitmaps.
//!
//! ```text
//! cargo run --release --example figure_plot -- /tmp
//! ```

use std::path::PathBuf;

use invariant_games::catalog;
use invariant_games::cli::render;
use invariant_games::solver::solve;

fn main() -> invariant_games::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;
    let game = catalog::get("wythoff-star")?;
    for bound in [100, 400] {
        let table = solve(&game.spec(bound)?, bound)?;
        let path = dir.join(format!("wythoff-star-{bound}.pbm"));
        std::fs::write(&path, render::pbm(&table))?;
        println!("{}: {} P-positions", path.display(), table.p_positions().len());
    }
    Ok(())
}
