//! Backward pass: repeated elimination of the last parameter.
//!
//! Level `n` holds a problem in `n` parameters. Eliminating parameter `n`
//! replaces every row pair `(i, k)`, `i < k`, by the combination
//!
//! ```text
//! (x_i * X_kn - x_k * X_in) / (|X_in| + |X_kn|)
//! ```
//!
//! (the same for `y`), where the last column drops out. Pairs whose
//! denominator vanishes are discarded and the survivors keep the pair
//! enumeration order `(1,2), (1,3), .., (1,M), (2,3), ..`. Level 0 carries
//! only the right-hand side, and the minimum error is its largest magnitude.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::problem::ProblemInstance;
use crate::scalar::{Scalar, DEFAULT_FLOAT_TOLERANCE};

/// Pairs per stage above which rows are computed on the rayon pool.
const PARALLEL_PAIR_THRESHOLD: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct EliminationOptions {
    /// Drop rows that repeat an earlier row up to sign. Changes entry counts,
    /// never the minimum.
    pub dedupe: bool,
    /// Zero tolerance for inexact backends.
    pub zero_tol: f64,
    /// Compute large stages in parallel. The output is identical either way.
    pub parallel: bool,
}

impl Default for EliminationOptions {
    fn default() -> Self {
        Self {
            dedupe: false,
            zero_tol: DEFAULT_FLOAT_TOLERANCE,
            parallel: true,
        }
    }
}

/// Snapshot `(X_n, Y_n)` of the reduced problem in `n` parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationStage<T> {
    level: usize,
    x: Matrix<T>,
    y: Vec<T>,
}

impl<T: Scalar> EliminationStage<T> {
    pub fn new(x: Matrix<T>, y: Vec<T>) -> Result<Self> {
        if x.rows() != y.len() {
            return Err(Error::DimensionMismatch(format!(
                "stage has {} rows of X but {} entries of Y",
                x.rows(),
                y.len()
            )));
        }
        Ok(Self {
            level: x.cols(),
            x,
            y,
        })
    }

    pub fn from_problem(problem: &ProblemInstance<T>) -> Self {
        Self {
            level: problem.params(),
            x: problem.x().clone(),
            y: problem.y().to_vec(),
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn x(&self) -> &Matrix<T> {
        &self.x
    }

    pub fn y(&self) -> &[T] {
        &self.y
    }

    /// Row count `M_n`.
    pub fn rows(&self) -> usize {
        self.y.len()
    }

    /// Stored entries of `X_n` and `Y_n` together.
    pub fn entries(&self) -> u64 {
        (self.rows() * (self.level + 1)) as u64
    }

    /// True when the last column is zero within `tol` (vacuously so for an
    /// empty stage). Such a parameter does not influence the reduced problem.
    pub fn last_column_vanishes(&self, tol: f64) -> bool {
        self.level > 0 && self.x.column(self.level - 1).all(|v| v.is_zero_within(tol))
    }
}

/// 0-based position of the 0-based pair `(i, k)`, `i < k < m`, in the
/// enumeration `(0,1), .., (0,m-1), (1,2), ..`.
pub fn pair_position(m: usize, i: usize, k: usize) -> usize {
    debug_assert!(i < k && k < m);
    i * m - i * (i + 1) / 2 + (k - i - 1)
}

/// Inverse of [`pair_position`].
pub fn pair_at(m: usize, position: usize) -> (usize, usize) {
    let mut start = 0;
    for i in 0..m.saturating_sub(1) {
        let block = m - i - 1;
        if position < start + block {
            return (i, i + 1 + position - start);
        }
        start += block;
    }
    panic!("pair position {position} out of range for {m} rows");
}

/// All pairs `i < k < m` in enumeration order.
pub fn pairs(m: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |k| (i, k)))
}

/// Eliminates the last parameter of `stage`, producing level `n - 1`.
///
/// If the last column vanishes the parameter is free at this level: the
/// column is dropped and the rows are kept unchanged.
pub fn eliminate_step<T: Scalar>(
    stage: &EliminationStage<T>,
    options: &EliminationOptions,
) -> Result<EliminationStage<T>> {
    let n = stage.level;
    if n == 0 {
        return Err(Error::Internal(
            "cannot eliminate from a level-0 stage".into(),
        ));
    }
    let last = n - 1;
    let keep: Vec<usize> = (0..last).collect();

    if stage.last_column_vanishes(options.zero_tol) {
        let next = EliminationStage {
            level: last,
            x: stage.x.select_columns(&keep),
            y: stage.y.clone(),
        };
        return Ok(if options.dedupe {
            dedupe_rows(next)
        } else {
            next
        });
    }

    let m = stage.rows();
    let block = |i: usize| -> Vec<(Vec<T>, T)> {
        let row_i = stage.x.row(i);
        let a = &row_i[last];
        let mut out = Vec::with_capacity(m - i - 1);
        for k in i + 1..m {
            let row_k = stage.x.row(k);
            let b = &row_k[last];
            let denom = a.abs() + b.abs();
            if denom.is_zero_within(options.zero_tol) {
                continue;
            }
            let combine = |u: &T, v: &T| -> T {
                let mut value = T::zero();
                if !u.is_zero() && !b.is_zero() {
                    value += u.clone() * b;
                }
                if !v.is_zero() && !a.is_zero() {
                    value -= v.clone() * a;
                }
                if value.is_zero() {
                    value
                } else {
                    value / &denom
                }
            };
            let x_row: Vec<T> = (0..last).map(|j| combine(&row_i[j], &row_k[j])).collect();
            let y = combine(&stage.y[i], &stage.y[k]);
            out.push((x_row, y));
        }
        out
    };

    let pair_count = m * m.saturating_sub(1) / 2;
    let blocks: Vec<Vec<(Vec<T>, T)>> = if options.parallel && pair_count >= PARALLEL_PAIR_THRESHOLD
    {
        (0..m).into_par_iter().map(block).collect()
    } else {
        (0..m).map(block).collect()
    };

    let rows: usize = blocks.iter().map(Vec::len).sum();
    let mut data = Vec::with_capacity(rows * last);
    let mut y = Vec::with_capacity(rows);
    for (x_row, y_val) in blocks.into_iter().flatten() {
        data.extend(x_row);
        y.push(y_val);
    }
    let next = EliminationStage {
        level: last,
        x: Matrix::from_vec(rows, last, data)?,
        y,
    };
    Ok(if options.dedupe {
        dedupe_rows(next)
    } else {
        next
    })
}

/// Keeps the first of every group of rows equal up to sign.
fn dedupe_rows<T: Scalar>(stage: EliminationStage<T>) -> EliminationStage<T> {
    let mut seen = HashSet::new();
    let mut order = Vec::new();
    for (i, (row, y)) in stage.x.iter_rows().zip(&stage.y).enumerate() {
        let leading_negative = row.iter().chain(std::iter::once(y)).find(|v| !v.is_zero());
        let flip = leading_negative.is_some_and(|v| v.is_negative());
        let key: Vec<String> = row
            .iter()
            .chain(std::iter::once(y))
            .map(|v| match (v.is_zero(), flip) {
                (true, _) => "0".to_string(),
                (false, true) => (-v.clone()).to_string(),
                (false, false) => v.to_string(),
            })
            .collect();
        if seen.insert(key) {
            order.push(i);
        }
    }
    if order.len() == stage.rows() {
        return stage;
    }
    EliminationStage {
        level: stage.level,
        x: stage.x.select_rows(&order),
        y: order.iter().map(|&i| stage.y[i].clone()).collect(),
    }
}

/// Result of the backward pass: every stage from level `N` down to level 0.
#[derive(Debug, Clone)]
pub struct Elimination<T> {
    stages: Vec<EliminationStage<T>>,
    mu: T,
}

impl<T: Scalar> Elimination<T> {
    /// Number of parameters `N`.
    pub fn params(&self) -> usize {
        self.stages.len() - 1
    }

    /// Stage at level `n`, `0 <= n <= N`.
    pub fn stage(&self, n: usize) -> &EliminationStage<T> {
        &self.stages[n]
    }

    /// Stages ordered by level, index 0 being the `Y_0` stage.
    pub fn stages(&self) -> &[EliminationStage<T>] {
        &self.stages
    }

    pub fn y0(&self) -> &[T] {
        self.stages[0].y()
    }

    /// Minimum of the objective, `max_i |Y0_i|` (zero if `Y_0` is empty).
    pub fn mu(&self) -> &T {
        &self.mu
    }
}

pub fn backward_eliminate<T: Scalar>(
    problem: &ProblemInstance<T>,
    options: &EliminationOptions,
) -> Result<Elimination<T>> {
    let n = problem.params();
    let mut stages = Vec::with_capacity(n + 1);
    stages.push(EliminationStage::from_problem(problem));
    for _ in 0..n {
        let next = eliminate_step(stages.last().expect("nonempty"), options)?;
        stages.push(next);
    }
    stages.reverse();
    let mu = stages[0]
        .y()
        .iter()
        .map(|v| v.abs())
        .fold(T::zero(), |acc, v| if v > acc { v } else { acc });
    Ok(Elimination { stages, mu })
}

/// Entries computed by the backward pass: `X_n, Y_n` for `n = N-1..1` plus `Y_0`.
pub fn count_entries<T: Scalar>(elimination: &Elimination<T>) -> u64 {
    let top = elimination.params();
    elimination.stages()[..top]
        .iter()
        .map(EliminationStage::entries)
        .sum()
}
