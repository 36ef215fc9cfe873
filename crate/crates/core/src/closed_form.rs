//! Direct formulas for one- and two-parameter problems.

use crate::error::{Error, Result};
use crate::scalar::{max_of, min_of, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct OneParamSolution<T> {
    pub mu: T,
    pub lower: T,
    pub upper: T,
}

/// `min_theta max_i |x_i theta - y_i|`.
pub fn solve_one_param<T: Scalar>(x: &[T], y: &[T]) -> Result<OneParamSolution<T>> {
    check_lengths(x, y)?;
    if x.iter().all(|v| v.is_zero()) {
        return Err(Error::ClosedForm("all coefficients are zero"));
    }
    let mut mu = T::zero();
    for (i, k) in index_pairs(x.len()) {
        let denom = x[i].abs() + x[k].abs();
        if denom.is_zero() {
            continue;
        }
        let term = (y[i].clone() * &x[k] - y[k].clone() * &x[i]).abs() / denom;
        if term > mu {
            mu = term;
        }
    }
    let (lows, highs): (Vec<T>, Vec<T>) = x
        .iter()
        .zip(y)
        .filter(|(xi, _)| !xi.is_zero())
        .map(|(xi, yi)| {
            let centre = yi.clone() / xi;
            let half = mu.clone() / xi.abs();
            (centre.clone() - &half, centre + half)
        })
        .unzip();
    Ok(OneParamSolution {
        lower: max_of(&lows).expect("some nonzero coefficient"),
        upper: min_of(&highs).expect("some nonzero coefficient"),
        mu,
    })
}

/// Location problem `min_theta max_i |theta - y_i|`: returns `(mu, theta)`.
pub fn solve_location<T: Scalar>(y: &[T]) -> Result<(T, T)> {
    let hi = max_of(y).ok_or(Error::EmptyProblem)?;
    let lo = min_of(y).ok_or(Error::EmptyProblem)?;
    Ok(((hi.clone() - &lo).half(), (hi + lo).half()))
}

/// Straight-line fit `min max_i |theta_1 + x_i theta_2 - y_i|`.
///
/// `intercept_lower..=intercept_upper` is the set of optimal intercepts; the
/// slope range for a fixed intercept comes from [`TwoParamSolution::slope_bounds`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoParamSolution<T> {
    pub mu: T,
    pub intercept_lower: T,
    pub intercept_upper: T,
    x: Vec<T>,
    y: Vec<T>,
}

impl<T: Scalar> TwoParamSolution<T> {
    pub fn slope_bounds(&self, intercept: &T) -> (T, T) {
        let (lows, highs): (Vec<T>, Vec<T>) = self
            .x
            .iter()
            .zip(&self.y)
            .filter(|(xi, _)| !xi.is_zero())
            .map(|(xi, yi)| {
                let centre = (yi.clone() - intercept) / xi;
                let half = self.mu.clone() / xi.abs();
                (centre.clone() - &half, centre + half)
            })
            .unzip();
        (
            max_of(&lows).expect("checked at construction"),
            min_of(&highs).expect("checked at construction"),
        )
    }
}

pub fn solve_two_param<T: Scalar>(x: &[T], y: &[T]) -> Result<TwoParamSolution<T>> {
    check_lengths(x, y)?;
    if x.iter().all(|v| v.is_zero()) {
        return Err(Error::ClosedForm("slope column is identically zero"));
    }
    if x.iter().all(|v| *v == x[0]) {
        return Err(Error::ClosedForm("need at least two distinct abscissae"));
    }
    let m = x.len();
    // cross_ik = y_i x_k - y_k x_i
    let cross = |i: usize, k: usize| y[i].clone() * &x[k] - y[k].clone() * &x[i];

    let mut mu = T::zero();
    for (i, k) in index_pairs(m) {
        let weight_ik = x[i].abs() + x[k].abs();
        if weight_ik.is_zero() {
            continue;
        }
        let cross_ik = cross(i, k);
        let dx_ik = x[k].clone() - &x[i];
        for (p, r) in index_pairs(m) {
            let dx_pr = x[r].clone() - &x[p];
            if dx_pr.is_zero() {
                continue;
            }
            let numer = (cross_ik.clone() * &dx_pr - cross(p, r) * &dx_ik).abs();
            let denom = weight_ik.clone() * dx_pr.abs() + (x[p].abs() + x[r].abs()) * dx_ik.abs();
            let term = numer / denom;
            if term > mu {
                mu = term;
            }
        }
    }

    let mut lows = Vec::new();
    let mut highs = Vec::new();
    for (i, k) in index_pairs(m) {
        let dx = x[k].clone() - &x[i];
        if dx.is_zero() {
            continue;
        }
        let centre = cross(i, k) / &dx;
        let half = (x[i].abs() + x[k].abs()) / dx.abs() * &mu;
        lows.push(centre.clone() - &half);
        highs.push(centre + half);
    }
    Ok(TwoParamSolution {
        intercept_lower: max_of(&lows).expect("two distinct abscissae"),
        intercept_upper: min_of(&highs).expect("two distinct abscissae"),
        mu,
        x: x.to_vec(),
        y: y.to_vec(),
    })
}

fn check_lengths<T>(x: &[T], y: &[T]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients but {} observations",
            x.len(),
            y.len()
        )));
    }
    if x.is_empty() {
        return Err(Error::EmptyProblem);
    }
    Ok(())
}

fn index_pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |k| (i, k)))
}
