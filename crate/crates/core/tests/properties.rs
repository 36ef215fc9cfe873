mod common;

use chebelim_core::elimination::{pair_at, pair_position, pairs};
use chebelim_core::{
    backward_eliminate, box_bounds, chebyshev_residual, eliminate_step, solve, solve_location,
    solve_one_param, solve_two_param, EliminationOptions, EliminationStage, Matrix, ParamRange,
    ProblemInstance, Rational, Selector,
};
use common::{instance, nonzero_rational, q, r};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn selectors() -> [Selector<Rational>; 3] {
    [Selector::Lower, Selector::Midpoint, Selector::Upper]
}

fn scale_column(
    p: &ProblemInstance<Rational>,
    j: usize,
    c: &Rational,
) -> ProblemInstance<Rational> {
    let rows = p
        .x()
        .iter_rows()
        .map(|row| {
            row.iter()
                .enumerate()
                .map(|(k, v)| if k == j { v * c } else { v.clone() })
                .collect()
        })
        .collect();
    ProblemInstance::from_rows(rows, p.y().to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn residual_certificate(p in instance(3, 6)) {
        for sel in selectors() {
            let s = solve(&p, &sel).unwrap();
            prop_assert_eq!(chebyshev_residual(&p, &s.theta).unwrap(), s.mu);
        }
    }

    #[test]
    fn interior_samples_stay_optimal(
        p in instance(3, 6),
        weights in proptest::collection::vec((0i64..=8, 1i64..=8), 3),
    ) {
        let s = solve(&p, &Selector::Midpoint).unwrap();
        let mut theta: Vec<Rational> = Vec::new();
        for (spec, (num, den)) in s.boxes.iter().zip(&weights) {
            let t = q((*num).min(*den), *den);
            let value = match box_bounds(spec, &theta, 0.0).unwrap() {
                ParamRange::Interval { lower, upper } => lower.clone() + (upper - lower) * t,
                ParamRange::Unbounded => q(*num, *den),
            };
            theta.push(value);
        }
        prop_assert_eq!(chebyshev_residual(&p, &theta).unwrap(), s.mu);
    }

    #[test]
    fn exterior_first_parameter_is_worse(
        p in instance(3, 6),
        delta in (1i64..=9, 1i64..=9),
        above in any::<bool>(),
        rest in proptest::collection::vec(-4i64..=4, 2),
    ) {
        let s = solve(&p, &Selector::Midpoint).unwrap();
        if let ParamRange::Interval { lower, upper } = &s.ranges[0] {
            let d = q(delta.0, delta.1);
            let first = if above { upper + d } else { lower - d };
            let mut theta = vec![first];
            theta.extend(rest.iter().take(p.params() - 1).map(|&v| r(v)));
            prop_assert!(chebyshev_residual(&p, &theta).unwrap() > s.mu);
        }
    }

    #[test]
    fn row_permutation_invariance(p in instance(3, 6), seed in any::<u64>()) {
        let m = p.rows();
        let mut order: Vec<usize> = (0..m).collect();
        let mut state = seed;
        for i in (1..m).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        let a = solve(&p, &Selector::Midpoint).unwrap();
        let b = solve(&p.permute_rows(&order), &Selector::Midpoint).unwrap();
        prop_assert_eq!(&a.mu, &b.mu);
        prop_assert_eq!(&a.ranges[0], &b.ranges[0]);
    }

    #[test]
    fn output_scaling(p in instance(3, 6), c in nonzero_rational()) {
        let scaled = ProblemInstance::new(p.x().clone(), p.y().iter().map(|v| v * &c).collect()).unwrap();
        let a = solve(&p, &Selector::Midpoint).unwrap();
        let b = solve(&scaled, &Selector::Midpoint).unwrap();
        prop_assert_eq!(&b.mu, &(a.mu.clone() * c.abs()));
        let expected: Vec<Rational> = a.theta.iter().map(|v| v * &c).collect();
        prop_assert_eq!(b.theta, expected);
    }

    #[test]
    fn column_scaling(p in instance(3, 6), c in nonzero_rational(), j in 0usize..3) {
        let j = j % p.params();
        let scaled = scale_column(&p, j, &c);
        let a = solve(&p, &Selector::Midpoint).unwrap();
        let b = solve(&scaled, &Selector::Midpoint).unwrap();
        prop_assert_eq!(&a.mu, &b.mu);
        for (k, (ra, rb)) in a.ranges.iter().zip(&b.ranges).enumerate() {
            if k != j {
                prop_assert_eq!(ra, rb);
                continue;
            }
            let expected = match ra {
                ParamRange::Interval { lower, upper } => {
                    let (lo, hi) = (lower / &c, upper / &c);
                    if c.is_negative() {
                        ParamRange::Interval { lower: hi, upper: lo }
                    } else {
                        ParamRange::Interval { lower: lo, upper: hi }
                    }
                }
                ParamRange::Unbounded => ParamRange::Unbounded,
            };
            prop_assert_eq!(rb, &expected);
        }
    }

    #[test]
    fn row_count_bound(p in instance(3, 6)) {
        let e = backward_eliminate(&p, &EliminationOptions::default()).unwrap();
        for n in 1..=p.params() {
            let upper = e.stage(n);
            let lower = e.stage(n - 1);
            let m = upper.rows();
            if upper.last_column_vanishes(0.0) {
                prop_assert_eq!(lower.rows(), m);
            } else {
                prop_assert!(lower.rows() <= m * (m - 1) / 2);
            }
        }
    }

    #[test]
    fn one_param_agrees(
        x in proptest::collection::vec(-5i64..=5, 2..=6),
        y in proptest::collection::vec(-5i64..=5, 6),
    ) {
        prop_assume!(x.iter().any(|&v| v != 0));
        let xs: Vec<Rational> = x.iter().map(|&v| r(v)).collect();
        let ys: Vec<Rational> = y[..x.len()].iter().map(|&v| r(v)).collect();
        let closed = solve_one_param(&xs, &ys).unwrap();
        let p = ProblemInstance::from_rows(xs.iter().map(|v| vec![v.clone()]).collect(), ys).unwrap();
        let s = solve(&p, &Selector::Midpoint).unwrap();
        prop_assert_eq!(&closed.mu, &s.mu);
        prop_assert_eq!(&s.ranges[0], &ParamRange::Interval { lower: closed.lower, upper: closed.upper });
    }

    #[test]
    fn location_agrees(y in proptest::collection::vec(-9i64..=9, 1..=7)) {
        let ys: Vec<Rational> = y.iter().map(|&v| r(v)).collect();
        let (mu, theta) = solve_location(&ys).unwrap();
        let p = ProblemInstance::from_rows(vec![vec![r(1)]; ys.len()], ys).unwrap();
        let s = solve(&p, &Selector::Lower).unwrap();
        prop_assert_eq!(mu, s.mu);
        prop_assert_eq!(vec![theta], s.theta);
    }

    #[test]
    fn two_param_agrees(
        x in proptest::collection::vec(-4i64..=4, 2..=6),
        y in proptest::collection::vec(-5i64..=5, 6),
    ) {
        prop_assume!(x.iter().any(|&v| v != x[0]));
        let xs: Vec<Rational> = x.iter().map(|&v| r(v)).collect();
        let ys: Vec<Rational> = y[..x.len()].iter().map(|&v| r(v)).collect();
        let closed = solve_two_param(&xs, &ys).unwrap();
        let p = ProblemInstance::from_rows(xs.iter().map(|v| vec![r(1), v.clone()]).collect(), ys).unwrap();
        let s = solve(&p, &Selector::Midpoint).unwrap();
        prop_assert_eq!(&closed.mu, &s.mu);
        prop_assert_eq!(
            &s.ranges[0],
            &ParamRange::Interval { lower: closed.intercept_lower.clone(), upper: closed.intercept_upper.clone() }
        );
        let (lo, hi) = closed.slope_bounds(&s.theta[0]);
        prop_assert_eq!(&s.ranges[1], &ParamRange::Interval { lower: lo, upper: hi });
    }
}

#[test]
fn pair_positions_exhaustive() {
    for m in 2..=30 {
        let mut previous_slot = 0;
        for (p, (i, k)) in pairs(m).enumerate() {
            assert_eq!(pair_position(m, i, k), p);
            assert_eq!(pair_at(m, p), (i, k));
            // 1-based slot M(i-1) - i(i-1)/2 + k - 1 is increasing along the enumeration
            let (i1, k1) = (i + 1, k + 1);
            let slot = m * (i1 - 1) - i1 * (i1 - 1) / 2 + k1 - 1;
            assert!(slot > previous_slot);
            previous_slot = slot;
        }
    }
}

#[test]
fn elimination_uses_pair_order() {
    // Rows (e_1, 1) .. (e_m, 1): pair (i, k) yields the row (e_i - e_k) / 2.
    let m = 5;
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            (0..=m)
                .map(|j| if j == i || j == m { r(1) } else { r(0) })
                .collect()
        })
        .collect();
    let y: Vec<Rational> = (0..m).map(|i| r(i as i64)).collect();
    let stage = EliminationStage::new(Matrix::from_rows(rows).unwrap(), y).unwrap();
    let next = eliminate_step(&stage, &EliminationOptions::default()).unwrap();
    for (p, (i, k)) in pairs(m).enumerate() {
        let row = next.x().row(p);
        assert_eq!(row[i], q(1, 2));
        assert_eq!(row[k], q(-1, 2));
        assert!(row
            .iter()
            .enumerate()
            .all(|(j, v)| j == i || j == k || v.is_zero()));
    }
}
