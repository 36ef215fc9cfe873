use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Data of the minimax problem `min_theta max_i |x_i . theta - y_i|`.
///
/// Construction validates the instance: dimensions agree, there is at least
/// one row and one parameter, and every column of `X` has a nonzero entry.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance<T> {
    x: Matrix<T>,
    y: Vec<T>,
}

impl<T: Scalar> ProblemInstance<T> {
    pub fn new(x: Matrix<T>, y: Vec<T>) -> Result<Self> {
        validate(&x, &y)?;
        Ok(Self { x, y })
    }

    pub fn from_rows(rows: Vec<Vec<T>>, y: Vec<T>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?, y)
    }

    pub fn x(&self) -> &Matrix<T> {
        &self.x
    }

    pub fn y(&self) -> &[T] {
        &self.y
    }

    /// Number of observations `M`.
    pub fn rows(&self) -> usize {
        self.x.rows()
    }

    /// Number of parameters `N`.
    pub fn params(&self) -> usize {
        self.x.cols()
    }

    /// Same data with columns reordered; `order[j]` is the source column of new column `j`.
    pub fn permute_columns(&self, order: &[usize]) -> Self {
        Self {
            x: self.x.select_columns(order),
            y: self.y.clone(),
        }
    }

    /// Same data with rows reordered.
    pub fn permute_rows(&self, order: &[usize]) -> Self {
        Self {
            x: self.x.select_rows(order),
            y: order.iter().map(|&i| self.y[i].clone()).collect(),
        }
    }

    pub fn into_parts(self) -> (Matrix<T>, Vec<T>) {
        (self.x, self.y)
    }
}

/// Checks the standing assumptions on `(X, Y)`. Exact zero tests are used
/// for every backend: a column must be structurally nonzero.
pub fn validate<T: Scalar>(x: &Matrix<T>, y: &[T]) -> Result<()> {
    if x.rows() != y.len() {
        return Err(Error::DimensionMismatch(format!(
            "X has {} rows but Y has {} entries",
            x.rows(),
            y.len()
        )));
    }
    if x.rows() == 0 || x.cols() == 0 {
        return Err(Error::EmptyProblem);
    }
    for j in 0..x.cols() {
        if x.column(j).all(|v| v.is_zero()) {
            return Err(Error::ZeroColumn { column: j + 1 });
        }
    }
    Ok(())
}

/// `max_i |x_i . theta - y_i|`.
pub fn chebyshev_residual<T: Scalar>(problem: &ProblemInstance<T>, theta: &[T]) -> Result<T> {
    if theta.len() != problem.params() {
        return Err(Error::DimensionMismatch(format!(
            "theta has {} entries, problem has {} parameters",
            theta.len(),
            problem.params()
        )));
    }
    let mut worst = T::zero();
    for (row, y) in problem.x().iter_rows().zip(problem.y()) {
        let r = (dot(row, theta) - y).abs();
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    let mut acc = T::zero();
    for (u, v) in a.iter().zip(b) {
        if !u.is_zero() && !v.is_zero() {
            acc += u.clone() * v;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{datasets, Rational};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn accepts_example_one() {
        let p = datasets::example_one();
        assert_eq!((p.rows(), p.params()), (4, 3));
    }

    #[test]
    fn rejects_zero_column() {
        let err =
            ProblemInstance::from_rows(vec![vec![r(1), r(0)], vec![r(2), r(0)]], vec![r(1), r(2)])
                .unwrap_err();
        assert_eq!(err, Error::ZeroColumn { column: 2 });
    }

    #[test]
    fn rejects_dimension_mismatch() {
        let err = ProblemInstance::from_rows(vec![vec![r(1)]], vec![r(1), r(2)]).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
        let err = ProblemInstance::<Rational>::from_rows(vec![], vec![]).unwrap_err();
        assert_eq!(err, Error::EmptyProblem);
    }

    #[test]
    fn accepts_one_by_one() {
        assert!(ProblemInstance::from_rows(vec![vec![r(2)]], vec![r(4)]).is_ok());
    }

    #[test]
    fn residual_examples() {
        let p = datasets::example_one();
        let theta = vec![q(1, 3), q(5, 21), q(16, 21)];
        assert_eq!(chebyshev_residual(&p, &theta).unwrap(), q(2, 7));
        assert_eq!(chebyshev_residual(&p, &[r(0), r(0), r(0)]).unwrap(), r(2));
        assert!(chebyshev_residual(&p, &[r(0)]).is_err());

        // exact fit
        let p =
            ProblemInstance::from_rows(vec![vec![r(1), r(1)], vec![r(1), r(-1)]], vec![r(3), r(1)])
                .unwrap();
        assert_eq!(chebyshev_residual(&p, &[r(2), r(1)]).unwrap(), r(0));
    }
}
