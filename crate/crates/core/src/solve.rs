use crate::boxes::{box_bounds, box_spec, BoxSpec, ParamRange};
use crate::elimination::{backward_eliminate, count_entries, Elimination, EliminationOptions};
use crate::error::{Error, Result};
use crate::problem::{chebyshev_residual, ProblemInstance};
use crate::scalar::{Scalar, DEFAULT_FLOAT_TOLERANCE};

/// How a value is picked inside each parameter's box.
///
/// Free parameters (no bounding row) take zero unless a custom value is given.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Selector<T> {
    Lower,
    #[default]
    Midpoint,
    Upper,
    /// One value per parameter, in the problem's column order.
    Custom(Vec<T>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveOptions {
    pub dedupe: bool,
    /// Eliminate columns with many zeros first.
    pub reorder_columns: bool,
    pub zero_tol: f64,
    pub parallel: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            dedupe: false,
            reorder_columns: false,
            zero_tol: DEFAULT_FLOAT_TOLERANCE,
            parallel: true,
        }
    }
}

impl SolveOptions {
    pub fn elimination(&self) -> EliminationOptions {
        EliminationOptions {
            dedupe: self.dedupe,
            zero_tol: self.zero_tol,
            parallel: self.parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution<T> {
    pub mu: T,
    /// Selected point, in the problem's column order.
    pub theta: Vec<T>,
    /// Box of each elimination level `1..=N`. Level `n` bounds the parameter
    /// `column_order[n - 1]`.
    pub boxes: Vec<BoxSpec<T>>,
    /// Range of each parameter at the selected point, in column order.
    pub ranges: Vec<ParamRange<T>>,
    pub column_order: Vec<usize>,
    pub selector: Selector<T>,
    /// Entries computed by the backward pass.
    pub entries: u64,
}

/// Picks `theta_1..theta_N` level by level inside the boxes of `elimination`.
///
/// Works in elimination order; `selector` values, if custom, must be given in
/// that order as well.
pub fn forward_substitute<T: Scalar>(
    elimination: &Elimination<T>,
    selector: &Selector<T>,
    zero_tol: f64,
) -> Result<Solution<T>> {
    let n_params = elimination.params();
    if let Selector::Custom(values) = selector {
        if values.len() != n_params {
            return Err(Error::DimensionMismatch(format!(
                "custom selector has {} values for {n_params} parameters",
                values.len()
            )));
        }
    }
    let mu = elimination.mu().clone();
    let mut theta: Vec<T> = Vec::with_capacity(n_params);
    let mut boxes = Vec::with_capacity(n_params);
    let mut ranges = Vec::with_capacity(n_params);
    for n in 1..=n_params {
        let spec = box_spec(elimination.stage(n), &mu, zero_tol)?;
        let range = box_bounds(&spec, &theta, zero_tol)?;
        let value = pick(&range, selector, n, zero_tol)?;
        theta.push(value);
        boxes.push(spec);
        ranges.push(range);
    }
    Ok(Solution {
        mu,
        theta,
        boxes,
        ranges,
        column_order: (0..n_params).collect(),
        selector: selector.clone(),
        entries: count_entries(elimination),
    })
}

fn pick<T: Scalar>(
    range: &ParamRange<T>,
    selector: &Selector<T>,
    level: usize,
    zero_tol: f64,
) -> Result<T> {
    let value = match (selector, range) {
        (Selector::Custom(values), _) => values[level - 1].clone(),
        (_, ParamRange::Unbounded) => T::zero(),
        (Selector::Lower, ParamRange::Interval { lower, .. }) => lower.clone(),
        (Selector::Upper, ParamRange::Interval { upper, .. }) => upper.clone(),
        (Selector::Midpoint, ParamRange::Interval { lower, upper }) => {
            (lower.clone() + upper).half()
        }
    };
    if !range.contains(&value, zero_tol) {
        let (lower, upper) = match range {
            ParamRange::Interval { lower, upper } => (lower.to_string(), upper.to_string()),
            ParamRange::Unbounded => unreachable!("unbounded range contains every value"),
        };
        return Err(Error::OutsideBox {
            level,
            value: value.to_string(),
            lower,
            upper,
        });
    }
    Ok(value)
}

/// Column order that places the columns with the most zeros last, so that
/// they are eliminated first. Ties keep their original order.
pub fn sparse_last_order<T: Scalar>(problem: &ProblemInstance<T>, zero_tol: f64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..problem.params()).collect();
    let zeros: Vec<usize> = order
        .iter()
        .map(|&j| {
            problem
                .x()
                .column(j)
                .filter(|v| v.is_zero_within(zero_tol))
                .count()
        })
        .collect();
    order.sort_by_key(|&j| zeros[j]);
    order
}

pub fn solve<T: Scalar>(
    problem: &ProblemInstance<T>,
    selector: &Selector<T>,
) -> Result<Solution<T>> {
    solve_with(problem, selector, &SolveOptions::default())
}

/// Backward elimination followed by forward substitution. The returned point
/// is checked to attain the minimum before it is handed back.
pub fn solve_with<T: Scalar>(
    problem: &ProblemInstance<T>,
    selector: &Selector<T>,
    options: &SolveOptions,
) -> Result<Solution<T>> {
    let order = if options.reorder_columns {
        sparse_last_order(problem, options.zero_tol)
    } else {
        (0..problem.params()).collect()
    };
    let identity = order.iter().enumerate().all(|(a, &b)| a == b);

    let mut solution = if identity {
        let elimination = backward_eliminate(problem, &options.elimination())?;
        forward_substitute(&elimination, selector, options.zero_tol)?
    } else {
        let permuted = problem.permute_columns(&order);
        let permuted_selector = match selector {
            Selector::Custom(values) if values.len() == order.len() => {
                Selector::Custom(order.iter().map(|&j| values[j].clone()).collect())
            }
            other => other.clone(),
        };
        let elimination = backward_eliminate(&permuted, &options.elimination())?;
        let mut s = forward_substitute(&elimination, &permuted_selector, options.zero_tol)?;
        let mut theta = vec![T::zero(); order.len()];
        let mut ranges = vec![ParamRange::Unbounded; order.len()];
        for (level, &column) in order.iter().enumerate() {
            theta[column] = s.theta[level].clone();
            ranges[column] = s.ranges[level].clone();
        }
        s.theta = theta;
        s.ranges = ranges;
        s.column_order = order;
        s.selector = selector.clone();
        s
    };

    let residual = chebyshev_residual(problem, &solution.theta)?;
    if !same_value(&residual, &solution.mu, options.zero_tol) {
        return Err(Error::CertificateFailed {
            residual: residual.to_string(),
            mu: solution.mu.to_string(),
        });
    }
    if !T::EXACT {
        solution.mu = residual;
    }
    Ok(solution)
}

pub(crate) fn same_value<T: Scalar>(a: &T, b: &T, zero_tol: f64) -> bool {
    if T::EXACT {
        a == b
    } else {
        let scale = 1.0 + a.to_f64().abs().max(b.to_f64().abs());
        (a.clone() - b).is_zero_within(zero_tol * scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{datasets, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn r(n: i64) -> Rational {
        q(n, 1)
    }

    #[test]
    fn example_one_every_selector() {
        let p = datasets::example_one();
        for sel in [Selector::Lower, Selector::Midpoint, Selector::Upper] {
            let s = solve(&p, &sel).unwrap();
            assert_eq!(s.mu, q(2, 7));
            assert_eq!(s.theta, vec![q(1, 3), q(5, 21), q(16, 21)]);
            assert!(s.ranges.iter().all(ParamRange::is_point));
        }
    }

    #[test]
    fn location_problem() {
        let p = ProblemInstance::from_rows(vec![vec![r(1)], vec![r(1)]], vec![r(1), r(3)]).unwrap();
        for sel in [Selector::Lower, Selector::Midpoint, Selector::Upper] {
            let s = solve(&p, &sel).unwrap();
            assert_eq!((s.mu.clone(), s.theta.clone()), (r(1), vec![r(2)]));
        }
    }

    #[test]
    fn opposite_signs() {
        let p =
            ProblemInstance::from_rows(vec![vec![r(1)], vec![r(-1)]], vec![r(1), r(1)]).unwrap();
        let s = solve(&p, &Selector::Midpoint).unwrap();
        assert_eq!(s.mu, r(1));
        assert_eq!(s.theta, vec![r(0)]);
    }

    #[test]
    fn custom_selector_is_checked() {
        let p = datasets::example_one();
        let good = Selector::Custom(vec![q(1, 3), q(5, 21), q(16, 21)]);
        assert!(solve(&p, &good).is_ok());
        let bad = Selector::Custom(vec![q(4, 3), q(5, 21), q(16, 21)]);
        assert!(matches!(
            solve(&p, &bad),
            Err(Error::OutsideBox { level: 1, .. })
        ));
        let short = Selector::Custom(vec![r(0)]);
        assert!(matches!(
            solve(&p, &short),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn free_parameter_takes_zero() {
        let p =
            ProblemInstance::from_rows(vec![vec![r(1), r(1)], vec![r(1), r(1)]], vec![r(0), r(2)])
                .unwrap();
        let s = solve(&p, &Selector::Midpoint).unwrap();
        assert_eq!(s.mu, r(1));
        assert_eq!(s.ranges[0], ParamRange::Unbounded);
        assert_eq!(s.theta, vec![r(0), r(1)]);
    }

    #[test]
    fn reordering_preserves_the_answer() {
        let p = ProblemInstance::from_rows(
            vec![
                vec![r(0), r(1), r(2)],
                vec![r(0), r(-1), r(1)],
                vec![r(1), r(0), r(1)],
                vec![r(0), r(2), r(-1)],
                vec![r(2), r(0), r(1)],
            ],
            vec![r(1), r(0), r(2), r(-1), r(3)],
        )
        .unwrap();
        assert_eq!(sparse_last_order(&p, 0.0), vec![2, 1, 0]);
        let plain = solve(&p, &Selector::Midpoint).unwrap();
        let opts = SolveOptions {
            reorder_columns: true,
            ..Default::default()
        };
        let reordered = solve_with(&p, &Selector::Midpoint, &opts).unwrap();
        assert_eq!(plain.mu, reordered.mu);
        assert_eq!(reordered.column_order, vec![2, 1, 0]);
        assert_eq!(
            chebyshev_residual(&p, &reordered.theta).unwrap(),
            reordered.mu
        );
        assert!(reordered.entries <= plain.entries);
    }

    #[test]
    fn float_backend_example_one() {
        let p = datasets::example_one_f64();
        let s = solve(&p, &Selector::Midpoint).unwrap();
        assert!((s.mu - 2.0 / 7.0).abs() < 1e-9);
        for (got, want) in s.theta.iter().zip([1.0 / 3.0, 5.0 / 21.0, 16.0 / 21.0]) {
            assert!((got - want).abs() < 1e-9);
        }
    }
}
