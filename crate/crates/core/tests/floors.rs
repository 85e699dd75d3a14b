use invariant_games::catalog;
use invariant_games::sequences::{floor_affine, AffineFloor, Precision, QuadraticIrrational, Real};
use num_bigint::BigInt;

/// φ to 200 decimal places, from an arbitrary-precision library.
const PHI_200: &str = "1.61803398874989484820458683436563811772030917980576286213544862270526046281890244970720720418939113748475408807538689175212663386222353693179318006076672635443338908659593958290563832266131992829026788";

fn phi_digits() -> (BigInt, BigInt) {
    let digits = PHI_200.replace('.', "");
    let frac = PHI_200.split('.').nth(1).unwrap().len() as u32;
    (digits.parse().unwrap(), BigInt::from(10u8).pow(frac))
}

fn decimal_floor(n: u64, plus: u64) -> BigInt {
    let (num, den) = phi_digits();
    // the truncation error of n·φ is below n·10^-200, far from any integer
    (BigInt::from(n) * num) / den + BigInt::from(n * plus)
}

fn sample() -> Vec<u64> {
    let mut ns: Vec<u64> = (1..=200).collect();
    let mut v = 7u64;
    while v < 1_000_000_000_000_000_000 {
        ns.push(v);
        ns.push(v + 1);
        v = v * 13 + 5;
    }
    ns.push(999_999_999_999_999_999);
    ns
}

#[test]
fn golden_ratio_floors_match_200_digit_oracle() {
    let phi = Real::golden_ratio();
    let p = Precision::default();
    for n in sample() {
        let got = floor_affine(&phi, n, &Real::zero(), &p).unwrap();
        assert_eq!(BigInt::from(got), decimal_floor(n, 0), "n = {n}");
    }
}

#[test]
fn golden_ratio_squared_floors_match_oracle() {
    let phi2 = (Real::golden_ratio() + Real::int(1)).simplify();
    assert!(phi2.is_exact());
    let p = Precision::default();
    for n in sample().into_iter().filter(|&n| n < 1 << 62) {
        let got = floor_affine(&phi2, n, &Real::zero(), &p).unwrap();
        assert_eq!(BigInt::from(got), decimal_floor(n, 1), "n = {n}");
    }
}

#[test]
fn exact_and_interval_paths_agree() {
    let cases = [
        (Real::golden_ratio(), Real::zero()),
        (Real::sqrt(2), Real::zero()),
        (Real::sqrt(3), Real::ratio(-1, 7).unwrap()),
        (Real::Quadratic(QuadraticIrrational::new(1, 1, 3, 2).unwrap()), Real::ratio(1, 3).unwrap()),
        (Real::Quadratic(QuadraticIrrational::new(3, 1, 2, 3).unwrap()), Real::zero()),
    ];
    for (alpha, gamma) in cases {
        let mut exact = AffineFloor::new(&alpha, &gamma, Precision::default());
        let mut interval = AffineFloor::interval_only(&alpha, &gamma, Precision::default());
        assert!(exact.is_exact() && !interval.is_exact());
        for n in 1..=10_000 {
            assert_eq!(exact.floor(n).unwrap(), interval.floor(n).unwrap(), "α = {alpha}, n = {n}");
        }
    }
}

#[test]
fn shifted_floors_match_oracle() {
    // ⌊n(1 + √3)/2 + 1/3⌋ from an 80-digit evaluation
    let alpha = Real::Quadratic(QuadraticIrrational::new(1, 1, 3, 2).unwrap());
    let gamma = Real::ratio(1, 3).unwrap();
    let expect = [(1, 1), (2, 3), (3, 4), (10, 13), (100, 136), (1000, 1366), (9999, 13659)];
    for (n, v) in expect {
        assert_eq!(floor_affine(&alpha, n, &gamma, &Precision::default()).unwrap(), v);
    }
}

#[test]
fn mixed_field_pair_matches_oracle() {
    // 80-digit evaluation of the pinned parameters
    let a = [
        1, 2, 3, 5, 6, 8, 9, 11, 12, 13, 15, 16, 18, 19, 20, 22, 23, 25, 26, 28, 29, 30, 32, 33, 35, 36, 37, 39, 40, 42,
        43, 45, 46, 47, 49, 50, 52, 53, 54, 56,
    ];
    let b = [
        4, 7, 10, 14, 17, 21, 24, 27, 31, 34, 38, 41, 44, 48, 51, 55, 58, 62, 65, 68, 72, 75, 79, 82, 85, 89, 92, 96, 99,
        103, 106, 109, 113, 116, 120, 123, 126, 130, 133, 137,
    ];
    let pair = catalog::get("table2-beatty").unwrap().pair(40).unwrap();
    assert_eq!(&pair.a()[1..], &a);
    assert_eq!(&pair.b()[1..], &b);
}

#[test]
fn precision_exhaustion_is_reported() {
    // an enclosure as wide as a unit interval cannot settle ⌊n·α⌋
    let alpha = Real::decimal("1.5", 0).unwrap();
    let err = floor_affine(&alpha, 2, &Real::zero(), &Precision { start_bits: 8, max_doublings: 2 }).unwrap_err();
    assert_eq!(err.code(), "precision");
}
