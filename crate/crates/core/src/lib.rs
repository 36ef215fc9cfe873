//! Exact discrete linear Chebyshev (minimax) approximation by parameter
//! elimination.
//!
//! Given `X` (`M x N`) and `Y` (`M`), find `theta` minimizing
//! `max_i |x_i . theta - y_i|`. The backward pass eliminates the parameters
//! one at a time down to a constant, the minimum `mu`; the forward pass then
//! rebuilds the parameters from box constraints whose bounds are affine in
//! the parameters already fixed. The boxes describe the whole solution set.
//!
//! All algorithms are generic over [`Scalar`]. [`Rational`] gives exact
//! results and is the default; `f64` trades exactness for speed.
//!
//! ```
//! use chebelim_core::{datasets, solve, Rational, Selector};
//!
//! let problem = datasets::example_one();
//! let solution = solve(&problem, &Selector::Midpoint).unwrap();
//! assert_eq!(solution.mu, Rational::new(2.into(), 7.into()));
//! ```

pub mod boxes;
pub mod closed_form;
pub mod complexity;
pub mod datasets;
pub mod elimination;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod problem;
pub mod rational;
pub mod scalar;
pub mod solve;

pub use boxes::{box_bounds, box_spec, BoxSpec, ParamRange};
pub use closed_form::{
    solve_location, solve_one_param, solve_two_param, OneParamSolution, TwoParamSolution,
};
pub use complexity::{bound_exceeds, complexity_bound};
pub use elimination::{
    backward_eliminate, count_entries, eliminate_step, Elimination, EliminationOptions,
    EliminationStage,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use oracle::{
    build_epigraph, oracle_minimax, verify, EpigraphLP, OracleSolution, VerificationReport,
};
pub use problem::{chebyshev_residual, validate, ProblemInstance};
pub use rational::{parse_rational, render_rational, ParseRationalError};
pub use scalar::{Scalar, DEFAULT_FLOAT_TOLERANCE};
pub use solve::{forward_substitute, solve, solve_with, Selector, Solution, SolveOptions};

/// Exact arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
pub type RMatrix = Matrix<Rational>;
pub type RVector = Vec<Rational>;
pub type Problem = ProblemInstance<Rational>;
pub type FloatProblem = ProblemInstance<f64>;
pub type ExactSolution = Solution<Rational>;
pub type FloatSolution = Solution<f64>;
