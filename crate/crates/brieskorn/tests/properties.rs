//! Cross-cutting invariants checked over exhaustive ranges, plus randomized
//! property tests. Oracles here are deliberately independent of the code
//! paths they check (naive double-loop enumeration, rational re-evaluation
//! of continued fractions, the full-lattice sweep including negative `a`).

use brieskorn::arith::{gcd, neg_cont_frac, Rational};
use brieskorn::dinv::{big_d, big_f_eval, d_even, d_full, d_refined, f_eval};
use brieskorn::plumbing::{almost_simple_linear_graph, star_graph, GraphShape, PlumbingGraph};
use brieskorn::triples::{enumerate, Triple};
use proptest::prelude::*;

/// Independent enumeration oracle: scan every q and test r for integrality.
fn naive_enumerate(p_max: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for p in 2..=p_max {
        for q in (p + 1)..=(2 * p - 1) {
            if (p * q - 1) % (q - p) != 0 {
                continue;
            }
            let r = (p * q - 1) / (q - p);
            if r <= q {
                continue;
            }
            if gcd(p, q) == 1 && gcd(q, r) == 1 && gcd(r, p) == 1 {
                assert_eq!(
                    p as i128 * q as i128 + p as i128 * r as i128 - q as i128 * r as i128,
                    1
                );
                out.push((p, q, r));
            }
        }
    }
    out
}

#[test]
fn enumeration_is_exhaustive_and_duplicate_free_up_to_500() {
    let fast: Vec<(i64, i64, i64)> = enumerate(500, None)
        .iter()
        .map(|t| (t.p(), t.q(), t.r()))
        .collect();
    let naive = naive_enumerate(500);
    assert_eq!(fast, naive);
    let mut dedup = fast.clone();
    dedup.dedup();
    assert_eq!(dedup.len(), fast.len());
}

#[test]
fn enumerated_triples_satisfy_all_invariants() {
    for t in enumerate(500, None) {
        let (p, q, r) = (t.p(), t.q(), t.r());
        assert!(1 < p && p < q && q < r);
        assert!(gcd(p, q) == 1 && gcd(q, r) == 1 && gcd(r, p) == 1);
        assert_eq!(
            p as i128 * q as i128 + p as i128 * r as i128 - q as i128 * r as i128,
            1
        );
        assert!(p < q && q < 2 * p); // p+1 <= q <= 2p-1
        assert_eq!((p as i128 * q as i128 - 1) % (q as i128 - p as i128), 0);
        if let Ok(dec) = t.decompose() {
            let s = dec.s();
            assert!(s > Rational::from_int(0) && s <= Rational::from_int(2));
            assert_eq!(dec.n_p, dec.t * dec.l + dec.alpha);
            assert!(0 <= dec.alpha && dec.alpha < dec.l);
        }
    }
}

#[test]
fn hj_round_trip_exhaustive_to_500() {
    for num in 2..=500i64 {
        for den in 1..num {
            if gcd(num, den) != 1 {
                continue;
            }
            let e = neg_cont_frac(num, den).unwrap();
            assert!(e.coefficients().iter().all(|&c| c <= -2), "{num}/{den}");
            assert_eq!(
                e.eval().unwrap(),
                Rational::new(-(num as i128), den as i128).unwrap(),
                "{num}/{den}"
            );
        }
    }
}

#[test]
fn negative_a_is_never_needed_up_to_100() {
    // max of F over the full lattice (negative odd a included, m from 0)
    // intersected with R equals the max over the positive quadrant
    for t in enumerate(100, None) {
        let Ok(dec) = t.decompose() else { continue };
        let f11 = big_f_eval(&t, 1, 1).unwrap();
        let mut full_max: Option<Rational> = None;
        let mut a = -t.p();
        while a <= t.p() {
            for m in 0..=dec.n_p {
                let v = big_f_eval(&t, a, m).unwrap();
                if v >= f11 && full_max.is_none_or(|b| v > b) {
                    full_max = Some(v);
                }
            }
            a += 2;
        }
        let full_max = full_max.unwrap();
        let positive = d_full(&t).unwrap().value;
        assert_eq!(full_max, Rational::from_int(positive), "{t}");
    }
}

#[test]
fn column_one_maximum_matches_closed_form_up_to_200() {
    // max over 1 <= m <= n_p of F(1, m) is (t+1)(n_p + alpha), attained at
    // m = t + min(alpha, 1); for alpha = 0 the two adjacent values agree
    for t in enumerate(200, None) {
        let Ok(dec) = t.decompose() else { continue };
        let expect = Rational::from_int((dec.t as i128 + 1) * (dec.n_p + dec.alpha) as i128);
        let mut best = big_f_eval(&t, 1, 1).unwrap();
        for m in 2..=dec.n_p {
            best = best.max(big_f_eval(&t, 1, m).unwrap());
        }
        assert_eq!(best, expect, "{t}");
        let at = dec.t + if dec.alpha == 0 { 0 } else { 1 };
        assert_eq!(big_f_eval(&t, 1, at).unwrap(), expect, "{t}");
        if dec.alpha == 0 {
            assert_eq!(
                big_f_eval(&t, 1, dec.t).unwrap(),
                big_f_eval(&t, 1, dec.t + 1).unwrap(),
                "{t}"
            );
        }
    }
}

#[test]
fn refined_equals_full_up_to_200() {
    for t in enumerate(200, None) {
        if !t.has_odd_p() {
            continue;
        }
        assert_eq!(
            d_refined(&t).unwrap().value,
            d_full(&t).unwrap().value,
            "{t}"
        );
    }
}

#[test]
fn d_parity_and_lower_bound_up_to_200() {
    for t in enumerate(200, None) {
        let dval = if t.has_odd_p() {
            d_refined(&t).unwrap().value
        } else {
            d_even(&t).unwrap().value
        };
        let big = big_d(&t).unwrap();
        assert_eq!(dval % 2, 0, "{t}");
        assert_eq!(big % 2, 0, "{t}");
        assert!(dval >= big, "{t}");
    }
}

#[test]
fn plumbing_json_round_trip() {
    for t in enumerate(20, None) {
        for g in [
            almost_simple_linear_graph(&t).unwrap(),
            star_graph(&(&t).into()).unwrap(),
        ] {
            let v: serde_json::Value = serde_json::from_str(&g.to_json()).unwrap();
            let vertices: Vec<i64> = v["vertices"]
                .as_array()
                .unwrap()
                .iter()
                .map(|w| w.as_i64().unwrap())
                .collect();
            let edges: Vec<(usize, usize)> = v["edges"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| {
                    let pair = e.as_array().unwrap();
                    (
                        pair[0].as_u64().unwrap() as usize,
                        pair[1].as_u64().unwrap() as usize,
                    )
                })
                .collect();
            let shape = match v["shape"].as_str().unwrap() {
                "star" => GraphShape::Star,
                "almost-simple-linear" => GraphShape::AlmostSimpleLinear,
                other => panic!("unexpected shape {other}"),
            };
            let rebuilt = PlumbingGraph::new(vertices, edges, shape).unwrap();
            assert_eq!(rebuilt, g, "{t}");
        }
    }
}

proptest! {
    #[test]
    fn hj_round_trip_random(a in 2i64..2_000_000, b in 1i64..2_000_000) {
        let g = gcd(a.max(b), a.min(b).max(1));
        let (num, den) = (a.max(b) / g, a.min(b).max(1) / g);
        prop_assume!(den >= 1 && num > den);
        let e = neg_cont_frac(num, den).unwrap();
        prop_assert!(e.coefficients().iter().all(|&c| c <= -2));
        prop_assert_eq!(e.eval().unwrap(), Rational::new(-(num as i128), den as i128).unwrap());
    }

    #[test]
    fn quadratic_form_two_definitions_agree_everywhere(
        idx in 0usize..64,
        x in -2000i64..2000,
        y in -2000i64..2000,
    ) {
        // polynomial identity, so it holds at arbitrary integer points, not
        // just on the lattice
        let pool: Vec<Triple> = enumerate(40, None).into_iter().filter(|t| t.has_odd_p()).collect();
        let t = pool[idx % pool.len()];
        let (p, q, r) = (t.p() as i128, t.q() as i128, t.r() as i128);
        let l = q - p;
        let f = f_eval(&t, x, y).unwrap();
        let u = 2 * l * (y as i128) - (x as i128) * q + 1;
        let scaled = (q - x as i128) * (q - x as i128) - u * u;
        prop_assert_eq!(l * (f + q + r), scaled);
    }
}

#[test]
fn exact_family_predictions_match_the_oracle_on_default_grids() {
    use brieskorn::families::{default_grid, verify_family};
    for name in [
        "ks20-1",
        "ks20-2",
        "ks20-3",
        "ks20-4",
        "ks20-5",
        "alpha0",
        "su",
        "pretzel-a",
        "pretzel-b",
        "fib",
    ] {
        let rep = verify_family(name, &default_grid(name).unwrap(), 500).unwrap();
        assert!(rep.all_pass(), "{name}: {:?}", rep.counterexamples);
        assert!(!rep.truncated, "{name} hit the sweep budget");
    }
}

#[test]
fn strict_rows_of_exm2_hold() {
    use brieskorn::families::{verify_family, GridSpec};
    // rows with t >= 4 (and even t*k) keep the strict claim; the excluded
    // boundary pair (4,1) is skipped by the domain guard
    let rep = verify_family(
        "exm2",
        &GridSpec::new(vec![("t".into(), 4, 8), ("k".into(), 1, 6)]),
        2000,
    )
    .unwrap();
    assert!(rep.all_pass(), "{:?}", rep.counterexamples);
    assert!(rep.pass_count >= 15);
}
