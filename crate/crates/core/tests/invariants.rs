mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use polygcd::constructions::certify_with;
use polygcd::harness::random_pair;
use polygcd::range::{gcd_value_range_with, valuation_profile_with};
use polygcd::{
    construct_small, resultant, smith_normal_form, sylvester_matrix, Error, Execution,
    IntPolynomial, Prime,
};
use proptest::prelude::*;
use rand::SeedableRng;

use common::{as_u64, enumerate_profile};

fn monic(max_deg: usize) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-10i64..=10, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        IntPolynomial::from_i64s(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_swaps_with_sign(f in monic(4), g in monic(4)) {
        let k = f.degree().unwrap();
        let l = g.degree().unwrap();
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        if (k * l) % 2 == 0 {
            prop_assert_eq!(fg, gf);
        } else {
            prop_assert_eq!(fg, -gf);
        }
    }

    #[test]
    fn resultant_is_translation_invariant(f in monic(4), g in monic(4), c in -3i64..=3) {
        let c = BigInt::from(c);
        prop_assert_eq!(resultant(&f.shift(&c), &g.shift(&c)).unwrap(), resultant(&f, &g).unwrap());
    }

    #[test]
    fn resultant_is_multiplicative(f1 in monic(3), f2 in monic(3), g in monic(3)) {
        let lhs = resultant(&(&f1 * &f2), &g).unwrap();
        prop_assert_eq!(lhs, resultant(&f1, &g).unwrap() * resultant(&f2, &g).unwrap());
    }

    #[test]
    fn smith_form_is_a_divisibility_chain(f in monic(4), g in monic(4)) {
        let m = sylvester_matrix(&f, &g).unwrap();
        let snf = smith_normal_form(&m);
        for w in snf.invariant_factors.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(snf.invariant_factors.iter().all(|d| d.is_positive()));
        let r = resultant(&f, &g).unwrap();
        if r == BigInt::from(0) {
            prop_assert!(snf.rank < m.rows());
        } else {
            prop_assert_eq!(snf.product(), r.abs());
        }
    }

    #[test]
    fn profile_never_exceeds_resultant_valuation(f in monic(3), g in monic(3), pi in 0usize..3) {
        let p = Prime::new([2, 3, 5][pi]).unwrap();
        match valuation_profile_with(&f, &g, p, Execution::Sequential) {
            Ok(prof) => {
                let r = resultant(&f, &g).unwrap();
                let v_r = polygcd::vp(&r, p).finite().unwrap();
                prop_assert!(prof.s_max <= v_r);
                for (&v, n) in &prof.witnesses {
                    let vf = common::naive_vp(&f.evaluate(n), p.get());
                    let vg = common::naive_vp(&g.evaluate(n), p.get());
                    let got = match (vf, vg) {
                        (Some(a), Some(b)) => a.min(b),
                        (Some(a), None) | (None, Some(a)) => a,
                        (None, None) => unreachable!(),
                    };
                    prop_assert_eq!(got, v);
                }
            }
            Err(e) => prop_assert_eq!(e, Error::ZeroResultant),
        }
    }
}

#[test]
fn profiles_do_not_depend_on_scheduling() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for _ in 0..40 {
        let (f, g, _) = random_pair(&mut rng, 3, 8);
        let a = gcd_value_range_with(&f, &g, Execution::Sequential).unwrap();
        let b = gcd_value_range_with(&f, &g, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn gcd_range_matches_direct_gcds() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 30 {
        let (f, g, r) = random_pair(&mut rng, 2, 5);
        let abs_r = as_u64(&r.abs());
        if abs_r > 2000 {
            continue;
        }
        // gcd(f(n), g(n)) depends only on n mod |r|
        let direct: BTreeSet<BigInt> = (0..abs_r)
            .map(|n| f.evaluate_i64(n as i64).gcd(&g.evaluate_i64(n as i64)))
            .collect();
        let range = gcd_value_range_with(&f, &g, Execution::default()).unwrap();
        assert_eq!(range.values, direct, "({f}, {g})");
        checked += 1;
    }
}

#[test]
fn small_constructions_certify_on_a_grid() {
    for p in [2u64, 3, 5] {
        let prime = Prime::new(p).unwrap();
        for s in 0..=p.min(3) {
            for big_s in s..=s + 4 {
                match construct_small(prime, s, big_s) {
                    Ok(c) => {
                        let cert = certify_with(&c, Execution::default()).unwrap();
                        assert!(cert.certified, "({p},{s},{big_s}): {:?}", cert.mismatches);
                    }
                    Err(Error::UnsupportedCase(_)) => {
                        assert!(p == 2 && s >= 2 && big_s < 2 * s + 1)
                    }
                    Err(e) => panic!("({p},{s},{big_s}): {e}"),
                }
            }
        }
    }
}

#[test]
fn small_construction_profiles_match_enumeration() {
    for (p, s, big_s) in [(2, 1, 3), (3, 1, 2), (3, 2, 3), (2, 2, 5)] {
        let prime = Prime::new(p).unwrap();
        let c = construct_small(prime, s, big_s).unwrap();
        let prof = valuation_profile_with(&c.f, &c.g, prime, Execution::default()).unwrap();
        let v_r = p * s * s - s + big_s;
        let period = p.pow(v_r as u32 + 1);
        if period > 2_000_000 {
            continue;
        }
        assert_eq!(prof.witnesses, enumerate_profile(&c.f, &c.g, prime, period));
    }
}
