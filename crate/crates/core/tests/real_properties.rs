mod common;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use centralbound::real::{
    certainly_less, decimal_to_rational, last_place_unit, pi, render_significant, IntervalReal, Verdict,
};
use common::oracle::{self, q, Q};

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    let num: i64 = rng.gen_range(-1_000_000_000..=1_000_000_000);
    let den: i64 = rng.gen_range(1..=1_000_000_000);
    q(num, den)
}

fn contains(x: &IntervalReal, v: &Q) -> bool {
    x.contains_rational(v)
}

fn overlaps_oracle(x: &IntervalReal, (lo, hi): &(Q, Q)) -> bool {
    &x.lo().to_rational() <= hi && lo <= &x.hi().to_rational()
}

#[test]
fn arithmetic_contains_exact_result() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..100_000 {
        let prec = rng.gen_range(2..=200);
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let (x, y) = (IntervalReal::from_rational(&a, prec).unwrap(), IntervalReal::from_rational(&b, prec).unwrap());
        assert!(contains(&x, &a), "#{i}: from_rational({a}) at {prec}");
        assert!(contains(&(&x + &y), &(&a + &b)), "#{i}: {a} + {b}");
        assert!(contains(&(&x - &y), &(&a - &b)), "#{i}: {a} - {b}");
        assert!(contains(&(&x * &y), &(&a * &b)), "#{i}: {a} * {b}");
        if !b.is_zero() && y.excludes_zero() {
            assert!(contains(&x.div(&y).unwrap(), &(&a / &b)), "#{i}: {a} / {b}");
        }
        assert!(contains(&(-&x), &-a.clone()));
    }
}

#[test]
fn transcendental_results_overlap_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..2_000 {
        let prec = rng.gen_range(8..=160);
        let a = q(rng.gen_range(-2_000..=2_000), rng.gen_range(1..=100));
        let x = IntervalReal::from_rational(&a, prec).unwrap();
        let e = x.exp().unwrap();
        assert!(overlaps_oracle(&e, &oracle::exp(&a, 90)), "#{i}: exp({a}) at {prec}");
        let r = a.abs();
        let s = IntervalReal::from_rational(&r, prec).unwrap().sqrt().unwrap();
        assert!(overlaps_oracle(&s, &oracle::sqrt(&r, 200)), "#{i}: sqrt({r}) at {prec}");
    }
}

#[test]
fn exp_of_integers_contains_oracle_enclosure() {
    for k in [-40i64, -3, -1, 0, 1, 2, 10, 50] {
        let e = IntervalReal::from_i64(k, 128).exp().unwrap();
        let (lo, hi) = oracle::exp(&q(k, 1), 120);
        // The oracle is far tighter than 128 bits, so it must sit inside.
        assert!(e.lo().to_rational() <= lo && hi <= e.hi().to_rational(), "exp({k})");
    }
}

#[test]
fn refinement_is_monotone() {
    let third = q(1, 3);
    let mut prev: Option<(IntervalReal, IntervalReal, IntervalReal)> = None;
    for prec in [16u32, 32, 64, 128, 256, 512] {
        let x = IntervalReal::from_rational(&third, prec).unwrap();
        let cur = (x.exp().unwrap(), x.sqrt().unwrap(), pi(prec).unwrap());
        if let Some((e, s, p)) = &prev {
            assert!(e.overlaps(&cur.0) && s.overlaps(&cur.1) && p.overlaps(&cur.2), "at {prec}");
            assert!(cur.0.width() <= e.width(), "exp width grew at {prec}");
            assert!(cur.1.width() <= s.width(), "sqrt width grew at {prec}");
            assert!(cur.2.width() <= p.width(), "pi width grew at {prec}");
        }
        prev = Some(cur);
    }
}

#[test]
fn pi_agrees_with_euler_series() {
    for prec in [4u32, 24, 53, 100, 256, 400] {
        let p = pi(prec).unwrap();
        assert!(overlaps_oracle(&p, &oracle::pi(prec + 8)), "pi at {prec}");
    }
}

#[test]
fn rendering_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..2_000 {
        let a = q(rng.gen_range(1..=10_000_000), rng.gen_range(1..=100_000));
        let x = IntervalReal::from_rational(&a, 200).unwrap().sqrt().unwrap();
        let digits = rng.gen_range(1..=20);
        let Ok(s) = render_significant(&x, digits) else { continue };
        let shown = decimal_to_rational(&s).unwrap();
        let ulp = last_place_unit(&s, digits).unwrap();
        let half = ulp / q(2, 1);
        // Every point of the enclosure lies within half a unit of the last place.
        assert!((x.lo().to_rational() - &shown).abs() <= half, "{s}");
        assert!((x.hi().to_rational() - &shown).abs() <= half, "{s}");
        assert_eq!(Some(s), oracle::decimal_enclosure(&oracle::sqrt(&a, 400), digits));
    }
}

#[test]
fn certainly_less_is_three_valued() {
    let one = IntervalReal::from_i64(1, 64);
    let two = IntervalReal::from_i64(2, 64);
    assert_eq!(certainly_less(&one, &two), Verdict::Yes);
    assert_eq!(certainly_less(&two, &one), Verdict::No);
    let wide = one.hull(&two);
    assert_eq!(certainly_less(&wide, &two), Verdict::Unknown);
}

proptest! {
    #[test]
    fn exp_inverse_pair_overlaps_one(num in -5_000i64..5_000, den in 1i64..500, prec in 16u32..200) {
        let x = IntervalReal::from_rational(&q(num, den), prec).unwrap();
        let prod = &x.exp().unwrap() * &(-&x).exp().unwrap();
        prop_assert!(prod.contains_rational(&Q::one()));
    }

    #[test]
    fn sqrt_squared_encloses_input(num in 0i64..1_000_000_000, den in 1i64..1_000_000, prec in 8u32..200) {
        let a = q(num, den);
        let x = IntervalReal::from_rational(&a, prec).unwrap();
        let r = x.sqrt().unwrap();
        prop_assert!((&r * &r).contains_rational(&a));
    }

    #[test]
    fn integers_are_exact(n in any::<i64>(), prec in 2u32..100) {
        let x = IntervalReal::from_i64(n, prec);
        prop_assert!(x.width().is_zero());
        prop_assert!(x.contains_rational(&Q::from_integer(BigInt::from(n))));
    }

    #[test]
    fn dyadic_rationals_are_exact(m in any::<i32>(), k in 0u32..60, prec in 2u32..100) {
        let a = Q::new(BigInt::from(m), BigInt::one() << k);
        prop_assert!(IntervalReal::from_rational(&a, prec).unwrap().width().is_zero());
    }
}
