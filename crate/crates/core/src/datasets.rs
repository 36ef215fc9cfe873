//! The two worked instances used throughout the tests and by `demo`, with
//! their published results.

use crate::matrix::Matrix;
use crate::problem::ProblemInstance;
use crate::scalar::Scalar;
use crate::Rational;

const EXAMPLE_ONE_X: [[i64; 3]; 4] = [[3, -1, 2], [-1, -2, 2], [-2, 3, -1], [0, 2, -1]];
const EXAMPLE_ONE_Y: [i64; 4] = [2, 1, -1, 0];

const EXAMPLE_TWO_X: [[i64; 3]; 10] = [
    [3, -1, 2],
    [-1, -2, 2],
    [-2, 3, -1],
    [0, 2, -1],
    [1, 2, -1],
    [3, 1, 0],
    [1, 1, -1],
    [-1, -1, 2],
    [0, 3, 1],
    [2, 1, 0],
];
const EXAMPLE_TWO_Y: [i64; 10] = [2, 1, -1, 0, 1, -1, 2, 0, 1, 3];

/// Published results of a worked instance.
#[derive(Debug, Clone)]
pub struct Expected {
    pub name: &'static str,
    pub mu: Option<Rational>,
    pub theta: Vec<Rational>,
    pub entries: u64,
}

fn build<T: Scalar, const M: usize>(x: &[[i64; 3]; M], y: &[i64; M]) -> ProblemInstance<T> {
    let data = x.iter().flatten().map(|&v| T::from_i64(v)).collect();
    let x = Matrix::from_vec(M, 3, data).expect("static data");
    ProblemInstance::new(x, y.iter().map(|&v| T::from_i64(v)).collect()).expect("static data")
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `N = 3, M = 4`.
pub fn example_one() -> ProblemInstance<Rational> {
    build(&EXAMPLE_ONE_X, &EXAMPLE_ONE_Y)
}

pub fn example_one_f64() -> ProblemInstance<f64> {
    build(&EXAMPLE_ONE_X, &EXAMPLE_ONE_Y)
}

/// `N = 3, M = 10`; the first four rows repeat [`example_one`].
pub fn example_two() -> ProblemInstance<Rational> {
    build(&EXAMPLE_TWO_X, &EXAMPLE_TWO_Y)
}

pub fn example_two_f64() -> ProblemInstance<f64> {
    build(&EXAMPLE_TWO_X, &EXAMPLE_TWO_Y)
}

pub fn example_one_expected() -> Expected {
    Expected {
        name: "example 1 (N=3, M=4)",
        mu: Some(q(2, 7)),
        theta: vec![q(1, 3), q(5, 21), q(16, 21)],
        entries: 153,
    }
}

/// The minimum itself is not published for this instance.
pub fn example_two_expected() -> Expected {
    Expected {
        name: "example 2 (N=3, M=10)",
        mu: None,
        theta: vec![q(1, 9), q(13, 18), q(8, 9)],
        entries: 444_280,
    }
}
