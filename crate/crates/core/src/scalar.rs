use std::fmt::{Debug, Display};

use num_traits::{NumAssignRef, NumRef, Signed, ToPrimitive};

use crate::Rational;

/// Default zero tolerance used by the floating-point backend.
pub const DEFAULT_FLOAT_TOLERANCE: f64 = 1e-9;

/// Field element the solver runs over.
///
/// Exact rationals are the primary backend. `f64` is available for scaling
/// experiments; there every zero test uses an absolute tolerance.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Signed + NumRef + NumAssignRef + Send + Sync + 'static
{
    /// True when arithmetic is exact and tolerances are ignored.
    const EXACT: bool;

    /// Zero test. Exact backends ignore `tol`.
    fn is_zero_within(&self, tol: f64) -> bool;

    fn from_rational(r: &Rational) -> Self;

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn half(&self) -> Self {
        self.clone() / (Self::one() + Self::one())
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn is_zero_within(&self, _tol: f64) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn is_zero_within(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

/// `a <= b`, allowing `a` to exceed `b` by at most `tol` on inexact backends.
pub(crate) fn le_within<T: Scalar>(a: &T, b: &T, tol: f64) -> bool {
    a <= b || (!T::EXACT && (a.clone() - b).is_zero_within(tol))
}

pub(crate) fn max_of<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> Option<T> {
    let mut best: Option<&T> = None;
    for v in values {
        if best.is_none_or(|b| v > b) {
            best = Some(v);
        }
    }
    best.cloned()
}

pub(crate) fn min_of<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> Option<T> {
    let mut best: Option<&T> = None;
    for v in values {
        if best.is_none_or(|b| v < b) {
            best = Some(v);
        }
    }
    best.cloned()
}
