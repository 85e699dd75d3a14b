//! Exact and interval floors of Beatty sequences.

use invariant_games::catalog;
use invariant_games::sequences::{beatty_pair, check_complementary, floor_affine, AffineFloor, BeattyParams, Precision, Real};

fn main() -> invariant_games::Result<()> {
    let phi = Real::golden_ratio();
    let wythoff = beatty_pair(&BeattyParams::homogeneous(phi.clone())?, 10)?;
    println!("a = {:?}", wythoff.a());
    println!("b = {:?}", wythoff.b());

    // 10^12 φ, computed with integer square roots
    let n = 1_000_000_000_000;
    println!("floor(n·φ) for n = 10^12: {}", floor_affine(&phi, n, &Real::zero(), &Precision::default())?);

    // the same value through dyadic intervals
    let mut interval = AffineFloor::interval_only(&phi, &Real::zero(), Precision::default());
    println!("interval path agrees: {}", interval.floor(n)? == floor_affine(&phi, n, &Real::zero(), &Precision::default())?);

    let sqrt3 = beatty_pair(&BeattyParams::homogeneous(Real::sqrt(3))?, 2000)?;
    println!("sqrt3 pair complementary to N = 2000: {}", check_complementary(&sqrt3));

    // an inhomogeneous pair mixing Q(√2) and Q(√5)
    let entry = catalog::get("table2-beatty")?;
    let p = entry.pair(7)?;
    println!("table2-beatty: a = {:?}, b = {:?}", p.a(), p.b());
    Ok(())
}
