//! Game spec files: write one, read it back, solve it.

use invariant_games::cli::format::{parse_spec, spec_to_string};
use invariant_games::format_positions;
use invariant_games::solver::solve;

const SPEC: &str = r#"{
  "format": 1,
  "name": "sqrt2-beatty",
  "symmetric": true,
  "generators": [
    {"kind": "beatty", "alpha": {"sqrt": 2}},
    {"kind": "linear", "p": 0, "q": 1}
  ]
}"#;

fn main() -> invariant_games::Result<()> {
    let spec = parse_spec(SPEC)?;
    print!("{}", spec_to_string(&spec));
    let p = solve(&spec, 20)?.p_positions();
    println!("P-positions on [0,20]^2: {}", format_positions(&p));

    let rejected = parse_spec(&SPEC.replace(r#"{"sqrt": 2}"#, "1.4142"));
    println!("float literal: {}", rejected.unwrap_err());
    Ok(())
}
