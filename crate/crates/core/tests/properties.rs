use std::collections::HashMap;

use battery_syt::battery_count::{count_general, count_hyper, count_k2};
use battery_syt::exact_arith::{binomial, factorize, pochhammer, Integer, Natural, Rational};
use battery_syt::hypergeom::{eval_pfq, pfq_terms, PFQParams};
use battery_syt::oracle_dp::{count_linear_extensions, count_with_stats, enumerate_syt, Diagram};
use battery_syt::shapes::{
    partitions_in_rectangle, partitions_of, rect_minus_ratio, rotated_complement, syt_count_straight, BatteryShape,
    Partition,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int(x: i64) -> Integer {
    Integer::from(x)
}

/// Standardness checked from scratch: entries are 1..N once each, rows
/// increase, and every cell exceeds the cell directly above it.
fn is_standard(intervals: &[(usize, usize)], rows: &[Vec<usize>]) -> bool {
    let mut at: HashMap<(usize, usize), usize> = HashMap::new();
    for (r, (&(start, end), row)) in intervals.iter().zip(rows).enumerate() {
        if row.len() != end - start {
            return false;
        }
        for (j, &v) in row.iter().enumerate() {
            at.insert((r, start + j), v);
        }
    }
    let n = at.len();
    let mut seen: Vec<usize> = at.values().copied().collect();
    seen.sort_unstable();
    if seen != (1..=n).collect::<Vec<_>>() {
        return false;
    }
    at.iter().all(|(&(r, c), &v)| {
        let left_ok = c == 0 || at.get(&(r, c - 1)).is_none_or(|&u| u < v);
        let up_ok = r == 0 || at.get(&(r - 1, c)).is_none_or(|&u| u < v);
        left_ok && up_ok
    })
}

proptest! {
    #[test]
    fn pochhammer_step(x in -10i64..=10, n in 0usize..=10) {
        prop_assert_eq!(pochhammer(&int(x), n + 1), pochhammer(&int(x), n) * int(x + n as i64));
    }

    #[test]
    fn pochhammer_difference(t in 1i64..=12, n in 1usize..=10) {
        prop_assert_eq!(
            pochhammer(&int(t), n) - pochhammer(&int(t - 1), n),
            int(n as i64) * pochhammer(&int(t), n - 1)
        );
    }

    #[test]
    fn pochhammer_telescopes(a in 1i64..=12, n in 1usize..=8) {
        let sum: Integer = (1..=a).map(|t| pochhammer(&int(t), n - 1)).sum();
        prop_assert_eq!(pochhammer(&int(a), n), int(n as i64) * sum);
    }

    #[test]
    fn binomial_reflection(z in -8i64..=8, n in 0usize..=8) {
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(binomial(&int(-z + n as i64 - 1), n), sign * binomial(&int(z), n));
    }

    #[test]
    fn rationals_stay_reduced(p in -50i64..50, q in 1i64..50, r in -50i64..50, s in 1i64..50) {
        let x = Rational::new(int(p), int(q)) * Rational::new(int(r), int(s))
            + Rational::new(int(r), int(q));
        prop_assert!(x.denom() > &Integer::zero());
        prop_assert_eq!(num_integer::Integer::gcd(x.numer(), x.denom()), if x.is_zero() { x.denom().clone() } else { Integer::one() });
    }

    #[test]
    fn term_recurrence_matches_pochhammer_products(
        neg in 1i64..=8,
        nums in proptest::collection::vec(1i64..=9, 0..3),
        dens in proptest::collection::vec(1i64..=9, 1..3),
        zn in -3i64..=3,
        zd in 1i64..=3,
    ) {
        let mut numerators = vec![int(-neg)];
        numerators.extend(nums.iter().map(|&x| int(x)));
        let denominators: Vec<Integer> = dens.iter().map(|&x| int(x)).collect();
        let z = Rational::new(int(zn), int(zd));
        let params = PFQParams::new(numerators.clone(), denominators.clone(), z.clone()).unwrap();
        let terms = pfq_terms(&params).unwrap();
        prop_assert_eq!(terms.len(), neg as usize + 1);
        for (j, term) in terms.iter().enumerate() {
            let top: Integer = numerators.iter().map(|a| pochhammer(a, j)).product();
            let bottom: Integer = denominators.iter().map(|b| pochhammer(b, j)).product::<Integer>()
                * Integer::from(battery_syt::exact_arith::factorial(j));
            let expected = Rational::new(top, bottom) * num_traits::pow(z.clone(), j);
            prop_assert_eq!(term, &expected);
        }
    }
}

#[test]
fn factorize_round_trips() {
    for n in 1u32..=10_000 {
        let f = factorize(&Natural::from(n)).unwrap();
        assert_eq!(f.product(), Natural::from(n));
        let primes: Vec<&Natural> = f.factors().iter().map(|(p, _)| p).collect();
        assert!(primes.windows(2).all(|w| w[0] < w[1]), "{n}");
    }
}

#[test]
fn partition_invariants_up_to_12() {
    for size in 0..=12 {
        for p in partitions_of(size) {
            let c = p.conjugate();
            assert_eq!(c.conjugate(), p);
            assert_eq!(p.hook_lengths(), c.hook_lengths());
            let f = syt_count_straight(&p);
            assert_eq!(f, syt_count_straight(&c));
            let dp = count_linear_extensions(&BatteryShape::straight(p.clone()), 120).unwrap();
            assert_eq!(f, dp, "{p}");
        }
    }
}

#[test]
fn rect_minus_ratio_matches_hook_lengths() {
    for m in 1..=6 {
        for n in 1..=6 {
            let full = Rational::from(Integer::from(syt_count_straight(&Partition::rectangle(m, n))));
            for t in 0..=n {
                let mut rows = vec![m; n - t];
                rows.extend(std::iter::repeat_n(m - 1, t));
                let smaller = Partition::new(rows).unwrap();
                let expected = Rational::from(Integer::from(syt_count_straight(&smaller)));
                assert_eq!(rect_minus_ratio(m, n, t).unwrap() * &full, expected, "m={m} n={n} t={t}");
            }
        }
    }
}

#[test]
fn rotated_complement_is_an_involution() {
    for m in 0..=5 {
        for n in 0..=5 {
            for mu in partitions_in_rectangle(m, n) {
                let once = rotated_complement(m, n, &mu).unwrap();
                assert_eq!(once.size() + mu.size(), m * n);
                assert_eq!(rotated_complement(m, n, &once).unwrap(), mu);
            }
        }
    }
}

#[test]
fn terminating_series_ignores_numerator_order() {
    let a = PFQParams::at_one(&[3, -4, 2], &[5, -7]).unwrap();
    let b = PFQParams::at_one(&[-4, 2, 3], &[-7, 5]).unwrap();
    assert_eq!(eval_pfq(&a).unwrap(), eval_pfq(&b).unwrap());
}

#[test]
fn counts_grow_with_the_battery() {
    for m in 1..=4 {
        for n in 1..=4 {
            for k in 1..=m {
                for a in 0..4 {
                    let here = count_general(m, n, a, k).unwrap();
                    let next = count_general(m, n, a + 1, k).unwrap();
                    if k == 1 {
                        assert_eq!(next, here, "[({m}^{n}),{a},1]");
                    } else {
                        assert!(next > here, "[({m}^{n}),{a},{k}]");
                    }
                }
            }
        }
    }
}

#[test]
fn k2_hypergeometric_matches_bullet_sum() {
    for m in 2..=5 {
        for n in 1..=5 {
            for a in 0..=4 {
                assert_eq!(count_k2(m, n, a).unwrap(), count_general(m, n, a, 2).unwrap());
                assert_eq!(count_hyper(m, n, a, 2).unwrap(), count_general(m, n, a, 2).unwrap());
            }
        }
    }
}

#[test]
fn k1_battery_precedes_everything() {
    // The battery sits above the corner cell, so its entries are forced to be 1..a.
    for m in 1..=4 {
        for n in 1..=4 {
            let f = syt_count_straight(&Partition::rectangle(m, n));
            for a in 0..=3 {
                assert_eq!(count_general(m, n, a, 1).unwrap(), f);
            }
        }
    }
}

#[test]
fn enumeration_matches_dp_and_is_standard() {
    let mut checked = 0;
    for size in 0..=10 {
        for lambda in partitions_of(size) {
            for a in 0..=(10 - size).min(3) {
                let ks = if lambda.is_empty() { 0..=0 } else { 1..=lambda.width() };
                for k in ks {
                    let Ok(shape) = BatteryShape::new(lambda.clone(), a, k.max(1)) else { continue };
                    if shape.size() > 10 {
                        continue;
                    }
                    let all = enumerate_syt(&shape, 12).unwrap();
                    let dp = count_linear_extensions(&shape, 120).unwrap();
                    assert_eq!(Natural::from(all.len()), dp, "{shape}");
                    let intervals = shape.row_intervals();
                    for t in &all {
                        assert!(is_standard(&intervals, t.rows()), "{shape}\n{t}");
                    }
                    let mut distinct: Vec<_> = all.iter().map(|t| t.rows().to_vec()).collect();
                    distinct.sort();
                    distinct.dedup();
                    assert_eq!(distinct.len(), all.len());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn checker_accepts_worked_example_and_rejects_swaps() {
    let shape = BatteryShape::over_rectangle(4, 3, 3, 2).unwrap();
    let intervals = shape.row_intervals();
    let good = vec![vec![2], vec![4], vec![6], vec![1, 7, 9, 10], vec![3, 8, 11, 13], vec![5, 12, 14, 15]];
    assert!(is_standard(&intervals, &good));
    let mut bad = good.clone();
    bad[2][0] = 7;
    bad[3][1] = 6;
    assert!(!is_standard(&intervals, &bad));
    assert!(Diagram::new(intervals).is_ok());
}

#[test]
fn state_count_bound() {
    for m in 1..=5 {
        for n in 1..=5 {
            for a in 0..=3 {
                for k in 1..=m {
                    let shape = BatteryShape::over_rectangle(m, n, a, k).unwrap();
                    let (_, stats) = count_with_stats(&shape, 120).unwrap();
                    let bound = (a + 1) * num_integer::binomial(m + n, n);
                    assert!(stats.widest_level <= stats.states);
                    assert!(stats.states <= bound, "{shape}: {} > {bound}", stats.states);
                }
            }
        }
    }
}

#[test]
fn dp_is_deterministic() {
    let shape = BatteryShape::over_rectangle(5, 4, 2, 3).unwrap();
    let first = count_linear_extensions(&shape, 120).unwrap();
    for _ in 0..3 {
        assert_eq!(count_linear_extensions(&shape, 120).unwrap(), first);
    }
}
