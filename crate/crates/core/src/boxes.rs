//! Forward-pass box constraints.
//!
//! At level `n` every row with `X_in != 0` bounds the eliminated parameter:
//!
//! ```text
//! L_i + T_i . theta_{<n}  <=  theta_n  <=  U_i + T_i . theta_{<n}
//! T_ij = -X_ij / X_in,  L_i = Y_i / X_in - mu / |X_in|,  U_i = Y_i / X_in + mu / |X_in|
//! ```
//!
//! `T` is stored with the sign that makes it the slope of both bounds.

use crate::elimination::EliminationStage;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::problem::dot;
use crate::scalar::{le_within, max_of, min_of, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct BoxSpec<T> {
    level: usize,
    t: Matrix<T>,
    lower: Vec<T>,
    upper: Vec<T>,
}

impl<T: Scalar> BoxSpec<T> {
    pub fn level(&self) -> usize {
        self.level
    }

    /// Slopes of the bounds in the preceding parameters, one row per bounding row.
    pub fn t(&self) -> &Matrix<T> {
        &self.t
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    pub fn rows(&self) -> usize {
        self.lower.len()
    }

    /// No row bounds this parameter: its column vanished at this level.
    pub fn is_free(&self) -> bool {
        self.lower.is_empty()
    }
}

pub fn box_spec<T: Scalar>(
    stage: &EliminationStage<T>,
    mu: &T,
    zero_tol: f64,
) -> Result<BoxSpec<T>> {
    let n = stage.level();
    if n == 0 {
        return Err(Error::Internal(
            "level-0 stage has no parameter to bound".into(),
        ));
    }
    let last = n - 1;
    let mut t = Vec::new();
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (row, y) in stage.x().iter_rows().zip(stage.y()) {
        let pivot = &row[last];
        if pivot.is_zero_within(zero_tol) {
            continue;
        }
        t.extend(row[..last].iter().map(|v| -(v.clone() / pivot)));
        let centre = y.clone() / pivot;
        let half_width = mu.clone() / pivot.abs();
        lower.push(centre.clone() - &half_width);
        upper.push(centre + half_width);
    }
    Ok(BoxSpec {
        level: n,
        t: Matrix::from_vec(lower.len(), last, t)?,
        lower,
        upper,
    })
}

/// Admissible values of one parameter once its predecessors are fixed.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamRange<T> {
    Interval {
        lower: T,
        upper: T,
    },
    /// The parameter does not influence the objective at its level.
    Unbounded,
}

impl<T: Scalar> ParamRange<T> {
    pub fn lower(&self) -> Option<&T> {
        match self {
            Self::Interval { lower, .. } => Some(lower),
            Self::Unbounded => None,
        }
    }

    pub fn upper(&self) -> Option<&T> {
        match self {
            Self::Interval { upper, .. } => Some(upper),
            Self::Unbounded => None,
        }
    }

    pub fn midpoint(&self) -> Option<T> {
        match self {
            Self::Interval { lower, upper } => Some((lower.clone() + upper).half()),
            Self::Unbounded => None,
        }
    }

    pub fn contains(&self, value: &T, zero_tol: f64) -> bool {
        match self {
            Self::Interval { lower, upper } => {
                le_within(lower, value, zero_tol) && le_within(value, upper, zero_tol)
            }
            Self::Unbounded => true,
        }
    }

    pub fn is_point(&self) -> bool {
        matches!(self, Self::Interval { lower, upper } if lower == upper)
    }
}

/// Bounds on `theta_n` given `theta_1..theta_{n-1}`.
pub fn box_bounds<T: Scalar>(
    spec: &BoxSpec<T>,
    prefix: &[T],
    zero_tol: f64,
) -> Result<ParamRange<T>> {
    if prefix.len() + 1 != spec.level {
        return Err(Error::DimensionMismatch(format!(
            "box for parameter {} needs {} fixed predecessors, got {}",
            spec.level,
            spec.level - 1,
            prefix.len()
        )));
    }
    if spec.is_free() {
        return Ok(ParamRange::Unbounded);
    }
    let shifts: Vec<T> = spec.t.iter_rows().map(|row| dot(row, prefix)).collect();
    let lows: Vec<T> = spec
        .lower
        .iter()
        .zip(&shifts)
        .map(|(l, s)| l.clone() + s)
        .collect();
    let highs: Vec<T> = spec
        .upper
        .iter()
        .zip(&shifts)
        .map(|(u, s)| u.clone() + s)
        .collect();
    let lower = max_of(&lows).expect("nonempty box");
    let upper = min_of(&highs).expect("nonempty box");
    if !le_within(&lower, &upper, zero_tol) {
        return Err(Error::EmptyBox {
            level: spec.level,
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    Ok(ParamRange::Interval { lower, upper })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elimination::{backward_eliminate, EliminationOptions};
    use crate::{datasets, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn r(n: i64) -> Rational {
        q(n, 1)
    }

    #[test]
    fn zero_mu_gives_degenerate_boxes() {
        let e =
            backward_eliminate(&datasets::example_one(), &EliminationOptions::default()).unwrap();
        let spec = box_spec(e.stage(3), &r(0), 0.0).unwrap();
        assert_eq!(spec.lower(), spec.upper());
    }

    #[test]
    fn box_width_matches_pivot() {
        let e =
            backward_eliminate(&datasets::example_two(), &EliminationOptions::default()).unwrap();
        let mu = e.mu().clone();
        for n in 1..=3 {
            let stage = e.stage(n);
            let spec = box_spec(stage, &mu, 0.0).unwrap();
            let pivots: Vec<Rational> = stage
                .x()
                .column(n - 1)
                .filter(|v| !num_traits::Zero::is_zero(*v))
                .cloned()
                .collect();
            assert_eq!(pivots.len(), spec.rows());
            for ((l, u), p) in spec.lower().iter().zip(spec.upper()).zip(&pivots) {
                assert_eq!(u - l, r(2) * &mu / num_traits::Signed::abs(p));
            }
        }
    }

    #[test]
    fn free_box_is_unbounded() {
        let stage = EliminationStage::new(Matrix::from_rows(vec![vec![r(0)]]).unwrap(), vec![r(1)])
            .unwrap();
        let spec = box_spec(&stage, &r(1), 0.0).unwrap();
        assert!(spec.is_free());
        assert_eq!(box_bounds(&spec, &[], 0.0).unwrap(), ParamRange::Unbounded);
    }

    #[test]
    fn out_of_box_prefix_is_reported() {
        let e =
            backward_eliminate(&datasets::example_one(), &EliminationOptions::default()).unwrap();
        let spec = box_spec(e.stage(2), e.mu(), 0.0).unwrap();
        let err = box_bounds(&spec, &[r(5)], 0.0).unwrap_err();
        assert!(matches!(err, Error::EmptyBox { level: 2, .. }));
        assert!(box_bounds(&spec, &[], 0.0).is_err());
    }

    #[test]
    fn range_helpers() {
        let range = ParamRange::Interval {
            lower: q(1, 3),
            upper: q(2, 3),
        };
        assert_eq!(range.midpoint(), Some(q(1, 2)));
        assert!(range.contains(&q(1, 3), 0.0));
        assert!(!range.contains(&q(0, 1), 0.0));
        assert!(!range.is_point());
        assert!(ParamRange::<Rational>::Unbounded.contains(&r(100), 0.0));
    }
}
