use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// Largest `N` for which the bound is materialized exactly when `M > 2`;
/// beyond it the leading power has more than a few million digits.
pub const MAX_BOUND_PARAMS: usize = 24;

/// A priori bound on the number of entries the backward pass computes:
///
/// ```text
/// C(N, M) = sum_{l=1}^{N} 2 (N - l + 1) (M/2)^(2^l)
/// ```
///
/// Integral for even `M`, a dyadic rational otherwise.
pub fn complexity_bound(n: usize, m: usize) -> Result<Rational> {
    if n < 1 {
        return Err(Error::Bound("need at least one parameter".into()));
    }
    if m < 2 {
        return Err(Error::Bound("need at least two rows".into()));
    }
    if m > 2 && n > MAX_BOUND_PARAMS {
        return Err(Error::Bound(format!(
            "C({n}, {m}) is too large to evaluate exactly (N > {MAX_BOUND_PARAMS})"
        )));
    }
    let base = Rational::new(BigInt::from(m), BigInt::from(2));
    let mut power = base; // (M/2)^(2^l), squared once per term
    let mut total = Rational::zero();
    for l in 1..=n {
        power = if power.is_one() {
            power
        } else {
            &power * &power
        };
        let weight = BigInt::from(2 * (n - l + 1));
        total += Rational::from_integer(weight) * &power;
    }
    Ok(total)
}

/// True when `C(N, M)` exceeds `budget`, decided without materializing huge bounds.
pub fn bound_exceeds(n: usize, m: usize, budget: u64) -> bool {
    match complexity_bound(n, m) {
        Ok(bound) => bound > Rational::from_integer(BigInt::from(budget)),
        Err(_) => m > 2,
    }
}
