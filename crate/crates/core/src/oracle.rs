//! Brute-force cross-check by vertex enumeration.
//!
//! The minimax problem is the linear program
//!
//! ```text
//! minimize lambda  subject to  lambda + x_i . theta >= y_i,  lambda - x_i . theta >= -y_i
//! ```
//!
//! whose optimum is attained at a vertex when the columns of `X` are linearly
//! independent. Dependent columns are fixed at zero first, which leaves the
//! optimum unchanged. Every choice of `r + 1` constraints (`r` the column
//! rank) is solved exactly, and the best feasible point wins. This module
//! shares nothing with the elimination code apart from the number type.

use num_traits::{One, Zero};

use crate::boxes::box_bounds;
use crate::error::{Error, Result};
use crate::problem::{chebyshev_residual, ProblemInstance};
use crate::solve::Solution;
use crate::Rational;

pub const ORACLE_MAX_VARIABLES: usize = 5;
pub const ORACLE_MAX_ROWS: usize = 10;

/// `coefficients . (theta, lambda) >= rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfSpace {
    pub coefficients: Vec<Rational>,
    pub rhs: Rational,
}

impl HalfSpace {
    fn satisfied_by(&self, point: &[Rational]) -> bool {
        let lhs: Rational = self
            .coefficients
            .iter()
            .zip(point)
            .map(|(a, v)| a * v)
            .sum();
        lhs >= self.rhs
    }
}

/// Epigraph program of the minimax problem; the last variable is `lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpigraphLP {
    pub constraints: Vec<HalfSpace>,
}

impl EpigraphLP {
    pub fn variables(&self) -> usize {
        self.constraints.first().map_or(0, |c| c.coefficients.len())
    }
}

pub fn build_epigraph(problem: &ProblemInstance<Rational>) -> EpigraphLP {
    let mut constraints = Vec::with_capacity(2 * problem.rows());
    for (row, y) in problem.x().iter_rows().zip(problem.y()) {
        let mut plus: Vec<Rational> = row.to_vec();
        plus.push(Rational::one());
        let mut minus: Vec<Rational> = row.iter().map(|v| -v).collect();
        minus.push(Rational::one());
        constraints.push(HalfSpace {
            coefficients: plus,
            rhs: y.clone(),
        });
        constraints.push(HalfSpace {
            coefficients: minus,
            rhs: -y,
        });
    }
    EpigraphLP { constraints }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub mu: Rational,
    pub theta: Vec<Rational>,
}

pub fn oracle_minimax(problem: &ProblemInstance<Rational>) -> Result<OracleSolution> {
    let n = problem.params();
    let m = problem.rows();
    if n + 1 > ORACLE_MAX_VARIABLES || m > ORACLE_MAX_ROWS {
        return Err(Error::GuardExceeded {
            parameters: n,
            rows: m,
        });
    }

    let basis = independent_columns(&problem.x().to_rows(), n);
    let reduced = problem.permute_columns(&basis);
    let lp = build_epigraph(&reduced);
    let dim = basis.len() + 1;

    let mut best: Option<OracleSolution> = None;
    for subset in Combinations::new(lp.constraints.len(), dim) {
        let system: Vec<&HalfSpace> = subset.iter().map(|&c| &lp.constraints[c]).collect();
        let Some(point) = solve_square(&system) else {
            continue;
        };
        if !lp.constraints.iter().all(|c| c.satisfied_by(&point)) {
            continue;
        }
        let lambda = point[dim - 1].clone();
        let mut theta = vec![Rational::zero(); n];
        for (value, &column) in point.iter().zip(&basis) {
            theta[column] = value.clone();
        }
        let better = match &best {
            None => true,
            Some(b) => lambda < b.mu || (lambda == b.mu && theta < b.theta),
        };
        if better {
            best = Some(OracleSolution { mu: lambda, theta });
        }
    }
    best.ok_or(Error::NoFeasibleVertex)
}

/// Greedy maximal set of linearly independent columns, lowest indices first.
fn independent_columns(rows: &[Vec<Rational>], n: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    // Echelon rows of the chosen columns, stored as column vectors.
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    for j in 0..n {
        let mut v: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
        for (pivot, e) in &echelon {
            if !v[*pivot].is_zero() {
                let factor = &v[*pivot] / &e[*pivot];
                for (vi, ei) in v.iter_mut().zip(e) {
                    *vi -= &factor * ei;
                }
            }
        }
        if let Some(pivot) = v.iter().position(|x| !x.is_zero()) {
            echelon.push((pivot, v));
            chosen.push(j);
        }
    }
    chosen
}

/// Solves `a_c . v = b_c` for the given constraints, `None` if singular.
fn solve_square(system: &[&HalfSpace]) -> Option<Vec<Rational>> {
    let dim = system.len();
    let mut aug: Vec<Vec<Rational>> = system
        .iter()
        .map(|c| {
            let mut row = c.coefficients.clone();
            row.push(c.rhs.clone());
            row
        })
        .collect();
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..dim {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                let pivot_row = aug[col].clone();
                for (v, p) in aug[r].iter_mut().zip(&pivot_row) {
                    *v -= &factor * p;
                }
            }
        }
    }
    Some(
        aug.into_iter()
            .map(|mut row| row.pop().expect("augmented"))
            .collect(),
    )
}

struct Combinations {
    n: usize,
    indices: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            indices: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.indices.clone();
        let k = self.indices.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.indices[i] < self.n - k + i {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// True when no executed check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn verify(
    problem: &ProblemInstance<Rational>,
    solution: &Solution<Rational>,
) -> VerificationReport {
    let mut checks = Vec::with_capacity(3);

    checks.push(match chebyshev_residual(problem, &solution.theta) {
        Ok(residual) if residual == solution.mu => Check {
            name: "residual",
            status: CheckStatus::Pass,
            detail: format!("residual {residual} equals mu"),
        },
        Ok(residual) => Check {
            name: "residual",
            status: CheckStatus::Fail,
            detail: format!("residual {residual} differs from mu {}", solution.mu),
        },
        Err(e) => Check {
            name: "residual",
            status: CheckStatus::Fail,
            detail: e.to_string(),
        },
    });

    checks.push(match oracle_minimax(problem) {
        Ok(o) if o.mu == solution.mu => Check {
            name: "oracle",
            status: CheckStatus::Pass,
            detail: format!("vertex enumeration gives mu {}", o.mu),
        },
        Ok(o) => Check {
            name: "oracle",
            status: CheckStatus::Fail,
            detail: format!(
                "vertex enumeration gives mu {}, solver {}",
                o.mu, solution.mu
            ),
        },
        Err(Error::GuardExceeded { parameters, rows }) => Check {
            name: "oracle",
            status: CheckStatus::Skipped,
            detail: format!(
                "oracle skipped: {parameters} parameters, {rows} rows exceed the enumeration guard"
            ),
        },
        Err(e) => Check {
            name: "oracle",
            status: CheckStatus::Fail,
            detail: e.to_string(),
        },
    });

    checks.push(box_membership(solution));
    VerificationReport { checks }
}

fn box_membership(solution: &Solution<Rational>) -> Check {
    let fail = |detail: String| Check {
        name: "box",
        status: CheckStatus::Fail,
        detail,
    };
    if solution.theta.len() != solution.boxes.len()
        || solution.column_order.len() != solution.boxes.len()
    {
        return fail("solution shape does not match its boxes".into());
    }
    let ordered: Vec<Rational> = solution
        .column_order
        .iter()
        .map(|&j| solution.theta[j].clone())
        .collect();
    for (level, spec) in solution.boxes.iter().enumerate() {
        match box_bounds(spec, &ordered[..level], 0.0) {
            Ok(range) if range.contains(&ordered[level], 0.0) => {}
            Ok(_) => {
                return fail(format!(
                    "parameter at level {} lies outside its box",
                    level + 1
                ))
            }
            Err(e) => return fail(e.to_string()),
        }
    }
    Check {
        name: "box",
        status: CheckStatus::Pass,
        detail: format!("all {} parameters inside their boxes", solution.boxes.len()),
    }
}
