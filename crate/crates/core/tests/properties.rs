//! Property tests over randomized graphs, cycles and Seifert data.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use plumbline_core::graph::{IntCycle, RatCycle, ResolutionGraph};
use plumbline_core::lattice::laufer_reduce;
use plumbline_core::rat::{rat, Rat};
use plumbline_core::seifert::{cf_eval, cont_frac};
use plumbline_core::zeta;

/// Random tree graph: vertex `i > 0` hangs off some earlier vertex.
fn arb_graph(max_n: usize, min_euler: i64) -> impl Strategy<Value = ResolutionGraph> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            let eulers = prop::collection::vec(min_euler..=-2i64, n);
            let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
            (eulers, parents)
        })
        .prop_map(|(eulers, parents)| {
            let vertices: Vec<(String, i64)> = eulers
                .iter()
                .enumerate()
                .map(|(i, &e)| (format!("v{i}"), e))
                .collect();
            let edges: Vec<(String, String)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (format!("v{p}"), format!("v{}", i + 1)))
                .collect();
            // all Euler numbers <= -2 on a tree: always negative definite
            ResolutionGraph::new(vertices, edges).expect("valid by construction")
        })
}

fn arb_rat_cycle(n: usize) -> impl Strategy<Value = RatCycle> {
    prop::collection::vec((-8i64..=8, 1i64..=4), n)
        .prop_map(|cs| RatCycle(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

fn arb_int_cycle(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = IntCycle> {
    prop::collection::vec(lo..=hi, n).prop_map(|cs| IntCycle::from_i64(&cs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dual_base_pairing_and_positivity(g in arb_graph(6, -7)) {
        let dual = g.dual_base();
        let n = g.n();
        for v in 0..n {
            prop_assert!(dual[v].0.iter().all(|x| x.is_positive()));
            for w in 0..n {
                let mut ew = RatCycle::zero(n);
                ew.0[w] = Rat::one();
                let want = if v == w { -Rat::one() } else { Rat::zero() };
                prop_assert_eq!(g.pairing(&dual[v], &ew), want);
            }
        }
        // discriminant clears all denominators of the dual base
        let d = Rat::from_integer(g.discriminant());
        for dv in &dual {
            prop_assert!(dv.scale(&d).is_integral());
        }
    }

    #[test]
    fn chi_is_quadratic((g, seed) in arb_graph(6, -7).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), (arb_rat_cycle(n), arb_rat_cycle(n)))
    })) {
        let (a, b) = seed;
        let lhs = g.chi(&a.add(&b));
        let rhs = g.chi(&a) + g.chi(&b) - g.pairing(&a, &b);
        prop_assert_eq!(lhs, rhs);
        let zk = g.canonical_cycle();
        prop_assert_eq!(g.chi(&zk.sub(&a)), g.chi(&a));
    }

    #[test]
    fn class_rep_is_cube_representative((g, l) in arb_graph(5, -6).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_int_cycle(n, -5, 5))
    })) {
        // integral cycles are in L', their reps lie in [0,1) and differ by L
        let x = l.to_rat();
        let rep = g.class_rep(&x).unwrap();
        prop_assert!(rep.0.iter().all(|c| !c.is_negative() && *c < Rat::one()));
        prop_assert!(rep.sub(&x).is_integral());
        // dual-base elements too
        for dv in g.dual_base() {
            let rep = g.class_rep(&dv).unwrap();
            prop_assert!(rep.0.iter().all(|c| !c.is_negative() && *c < Rat::one()));
            prop_assert!(rep.sub(&dv).is_integral());
        }
    }

    #[test]
    fn laufer_reduce_lands_in_cone((g, l) in arb_graph(5, -6).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_int_cycle(n, -4, 4))
    })) {
        let x = l.to_rat();
        let r = laufer_reduce(&g, &x).unwrap();
        prop_assert!(g.in_lipman_cone(&r.s_x));
        prop_assert!(r.l.is_effective());
        prop_assert!(g.chi(&r.s_x) <= g.chi(&x));
        prop_assert!(!r.chi_drop.is_positive());
    }

    #[test]
    fn continued_fraction_round_trip(a in 2i64..200, w in 1i64..199) {
        prop_assume!(w < a && num_integer::gcd(a, w) == 1);
        let bs = cont_frac(a, w).unwrap();
        prop_assert!(bs.iter().all(|&b| b >= 2));
        prop_assert_eq!(cf_eval(&bs).unwrap(), (a, w));
    }

    #[test]
    fn counting_recursion_matches_term_sum((g, t) in arb_graph(4, -4).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), arb_int_cycle(n, 0, 2))
    })) {
        // the closed-form counting equals the literal sum over the
        // materialized truncated series, for any comparison target
        let bound = zeta::coverage_bound(&g, &t);
        prop_assume!(bound.iter().map(|b| *b as u64 + 1).product::<u64>() <= 50_000);
        let series = zeta::expand_z(&g, &bound);
        let got = zeta::counting_sigma(&g, &series, &t).unwrap();
        let dual = g.dual_base();
        let mut want = BigInt::zero();
        for (tuple, coeff) in &series.terms {
            let mut l = RatCycle::zero(g.n());
            for (v, &a) in tuple.iter().enumerate() {
                if a != 0 {
                    l = l.add(&dual[v].scale(&Rat::from_integer(BigInt::from(a))));
                }
            }
            if l.is_integral() && !l.ge(&t.to_rat()) {
                want += coeff;
            }
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn pruned_equals_plain_minimization((g, data) in arb_graph(4, -5).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), (arb_rat_cycle(n), arb_int_cycle(n, 1, 3)))
    })) {
        use plumbline_core::lattice::{min_chi_box, min_chi_box_plain, min_chi_orthant};
        let (lp, z) = data;
        let a = min_chi_box(&g, &lp, &z).unwrap();
        let b = min_chi_box_plain(&g, &lp, &z).unwrap();
        prop_assert_eq!(&a.min_value, &b.min_value);
        prop_assert_eq!(a.minimizer_count, b.minimizer_count);
        prop_assert_eq!(&a.minimal_minimizer, &b.minimal_minimizer);
        // orthant soundness: the reported minimum is attained and no point
        // of a strictly larger box goes below it
        let r = min_chi_orthant(&g, &lp);
        prop_assert_eq!(g.chi(&lp.neg().add_int(&r.minimal_minimizer)), r.min_value.clone());
        let caps: Vec<i64> = r
            .search_bound
            .0
            .iter()
            .map(|c| num_traits::ToPrimitive::to_i64(c).unwrap() + 2)
            .collect();
        let mut l = vec![0i64; g.n()];
        'outer: loop {
            let cand = IntCycle::from_i64(&l);
            prop_assert!(g.chi(&lp.neg().add_int(&cand)) >= r.min_value);
            let mut i = 0;
            loop {
                if i == g.n() {
                    break 'outer;
                }
                if l[i] < caps[i].min(4) {
                    l[i] += 1;
                    break;
                }
                l[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn dim_v_full_set_is_pg((g,) in (arb_graph(5, -5),)) {
        // I = V: every complement component is empty, dim V = p_g input
        let all: Vec<usize> = (0..g.n()).collect();
        let pg = BigInt::from(7);
        let out = plumbline_core::lattice::dim_v(&g, &all, &pg, &BTreeMap::new()).unwrap();
        prop_assert_eq!(out, pg);
    }
}
