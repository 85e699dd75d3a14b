use std::collections::BTreeSet;

use invariant_games::catalog;
use invariant_games::feasibility::{certify_infeasible, FeasibilityVerdict};
use invariant_games::sequences::{
    beatty_pair, check_complementary, check_prop21, check_sac, BeattyParams, QuadraticIrrational, Real, TParam,
};
use invariant_games::solver::{oracle_solve, solve, solve_with};
use invariant_games::star::star;
use invariant_games::{add, enumerate_moves, leq, sub, GameSpec, MoveGenerator, Position};
use proptest::prelude::*;

fn pos() -> impl Strategy<Value = Position> {
    (0u64..60, 0u64..60).prop_map(|(x, y)| Position::new(x, y))
}

fn random_game() -> impl Strategy<Value = GameSpec> {
    (
        prop::collection::vec((0u64..12, 0u64..12), 0..=12),
        any::<bool>(),
    )
        .prop_map(|(moves, symmetric)| {
            let moves = moves.into_iter().map(Position::from).filter(|m| !m.is_origin());
            let g = GameSpec::new("random", vec![MoveGenerator::explicit(moves)]);
            if symmetric {
                g
            } else {
                g.asymmetric()
            }
        })
}

/// `(m - s + √d)/m` with `s = ⌊√d⌋` lies in (1, 2).
fn quadratic_alpha() -> impl Strategy<Value = Real> {
    (prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 11, 13, 14, 15]), 1i64..6).prop_map(|(d, m)| {
        let s = (d as f64).sqrt() as i64;
        Real::Quadratic(QuadraticIrrational::new(m - s, 1, d, m).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn solver_matches_oracle(g in random_game(), bound in 0u64..=40) {
        let fast = solve(&g, bound).unwrap();
        let slow = oracle_solve(&g, bound).unwrap();
        prop_assert_eq!(fast.p_positions(), slow.p_positions());
        prop_assert!(fast.verify().is_ok());
    }

    #[test]
    fn truncation_is_exact(g in random_game(), bound in 0u64..=30) {
        let small = solve(&g, bound).unwrap();
        let big = solve(&g, 2 * bound).unwrap().restrict(bound);
        prop_assert_eq!(small.p_positions(), big.p_positions());
    }

    #[test]
    fn parallel_matches_sequential(g in random_game(), bound in 0u64..=80) {
        prop_assert_eq!(solve_with(&g, bound, 1).unwrap().p_positions(), solve_with(&g, bound, 4).unwrap().p_positions());
    }

    #[test]
    fn symmetric_games_have_symmetric_tables(g in random_game(), bound in 0u64..=30) {
        let t = solve(&g, bound).unwrap();
        if g.symmetric {
            prop_assert!(t.is_symmetric());
        }
        prop_assert!(t.is_p(Position::ORIGIN));
    }

    #[test]
    fn no_move_is_p(g in random_game(), bound in 1u64..=30) {
        let t = solve(&g, bound).unwrap();
        for m in enumerate_moves(&g, bound).unwrap() {
            prop_assert!(!t.is_p(m), "move {} classified P", m);
        }
    }

    #[test]
    fn star_is_window_monotone(g in random_game(), bound in 1u64..=20) {
        let small = enumerate_moves(&star(&g, bound).unwrap(), bound).unwrap();
        let big = enumerate_moves(&star(&g, 2 * bound).unwrap(), bound).unwrap();
        prop_assert_eq!(small, big);
    }

    #[test]
    fn star_moves_are_never_star_p(g in random_game(), bound in 1u64..=20) {
        let s = star(&g, bound).unwrap();
        let p: BTreeSet<_> = solve(&s, bound).unwrap().p_positions().into_iter().collect();
        prop_assert!(enumerate_moves(&s, bound).unwrap().iter().all(|m| !p.contains(m)));
    }

    #[test]
    fn true_p_sets_have_no_obstruction(g in random_game(), bound in 1u64..=20) {
        let g = GameSpec { symmetric: true, ..g };
        let claimed: BTreeSet<_> = solve(&g, bound).unwrap().p_positions().into_iter().collect();
        let r = certify_infeasible(&claimed, bound).unwrap();
        prop_assert_eq!(r.verdict, FeasibilityVerdict::NoObstructionFound);
    }

    #[test]
    fn blockers_recheck(extra in prop::collection::vec((1u64..10, 1u64..10), 1..6)) {
        let mut claimed: BTreeSet<Position> = [Position::ORIGIN].into();
        for (a, b) in extra {
            claimed.insert(Position::new(a, b));
            claimed.insert(Position::new(b, a));
        }
        let r = certify_infeasible(&claimed, 12).unwrap();
        for b in &r.blockers {
            prop_assert!(b.recheck(&claimed));
        }
    }

    #[test]
    fn add_sub_inverse(p in pos(), q in pos()) {
        let s = add(p, q).unwrap();
        prop_assert_eq!(sub(s, q).unwrap(), p);
        prop_assert!(leq(q, s) && leq(p, s));
    }

    #[test]
    fn leq_is_a_partial_order(p in pos(), q in pos(), r in pos()) {
        prop_assert!(leq(p, p));
        if leq(p, q) && leq(q, p) {
            prop_assert_eq!(p, q);
        }
        if leq(p, q) && leq(q, r) {
            prop_assert!(leq(p, r));
        }
        prop_assert_eq!(sub(p, q).is_ok(), leq(q, p));
    }

    #[test]
    fn enumeration_grows_with_bound(g in random_game(), bound in 0u64..=20) {
        let small: BTreeSet<_> = enumerate_moves(&g, bound).unwrap().into_iter().collect();
        let big = enumerate_moves(&g, bound + 5).unwrap();
        let restricted: BTreeSet<_> = big.into_iter().filter(|m| m.fits(bound)).collect();
        prop_assert_eq!(small, restricted);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn homogeneous_beatty_pairs_are_complementary_and_2_sac(alpha in quadratic_alpha()) {
        let pair = beatty_pair(&BeattyParams::homogeneous(alpha).unwrap(), 10_000).unwrap();
        prop_assert!(check_complementary(&pair).holds());
        let sac = check_sac(&pair.truncate(2000), TParam::Fixed(2));
        prop_assert!(sac.overall, "{}", sac);
    }

    #[test]
    fn sac_pairs_satisfy_prop21(alpha in quadratic_alpha()) {
        let pair = beatty_pair(&BeattyParams::homogeneous(alpha).unwrap(), 1500).unwrap();
        if check_sac(&pair, TParam::Auto).overall {
            let r = check_prop21(&pair);
            prop_assert!(r.all_hold(), "{}", r);
        }
    }
}

#[test]
fn mouse_trap_is_2_sac() {
    let pair = catalog::get("mouse-trap").unwrap().pair(1000).unwrap();
    assert!(check_sac(&pair, TParam::Fixed(2)).overall);
}
