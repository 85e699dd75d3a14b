//! Certificates that a claimed P-set is realised by no invariant game.

use invariant_games::catalog;
use invariant_games::feasibility::{certify_infeasible, lemma23_certificates};
use invariant_games::solver::{solve, Class};

fn main() -> invariant_games::Result<()> {
    for (key, bound) in [("table1", 13), ("table2", 7), ("wythoff", 50)] {
        let claimed = catalog::get(key)?.claimed_set(bound)?;
        println!("== {key}\n{}\n", certify_infeasible(&claimed, bound)?);
    }

    let entry = catalog::get("beatty:phi")?;
    let bound = 60;
    let pair = entry.pair_covering(bound)?;
    let table = solve(&entry.spec(bound)?, bound)?;
    let certs = lemma23_certificates(&pair, bound)?;
    let agree = certs.iter().all(|c| (table.is_p(c.position)) == (c.class == Class::P));
    println!("{} rule certificates on [0,{bound}]^2, all agree with the solver: {agree}", certs.len());
    Ok(())
}
