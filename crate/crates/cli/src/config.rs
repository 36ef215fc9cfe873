use std::path::PathBuf;

use chebelim_core::{parse_rational, ParseRationalError, Rational, Scalar, Selector, SolveOptions};
use thiserror::Error;

use crate::args::{CommonArgs, Format, SolveArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumericMode {
    Exact,
    Float,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SelectorSpec {
    Lower,
    Midpoint,
    Upper,
    Custom(Vec<Rational>),
}

impl SelectorSpec {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        match text.trim() {
            "lower" => Ok(Self::Lower),
            "midpoint" | "mid" => Ok(Self::Midpoint),
            "upper" => Ok(Self::Upper),
            other => other
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()
                .map(Self::Custom)
                .map_err(|e| ConfigError::Selector(other.to_string(), e)),
        }
    }

    /// Concrete selector for an `n`-parameter problem.
    pub fn resolve<T: Scalar>(&self, n: usize) -> Result<Selector<T>, ConfigError> {
        Ok(match self {
            Self::Lower => Selector::Lower,
            Self::Midpoint => Selector::Midpoint,
            Self::Upper => Selector::Upper,
            Self::Custom(values) if values.len() == n => {
                Selector::Custom(values.iter().map(T::from_rational).collect())
            }
            Self::Custom(values) => {
                return Err(ConfigError::SelectorLength {
                    expected: n,
                    found: values.len(),
                })
            }
        })
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid selector {0:?}: {1}")]
    Selector(String, ParseRationalError),
    #[error("custom selector has {found} values, the problem has {expected} parameters")]
    SelectorLength { expected: usize, found: usize },
    #[error("tolerance must be a finite non-negative number")]
    Tolerance,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub input: PathBuf,
    pub selector: SelectorSpec,
    pub dedupe: bool,
    pub reorder_columns: bool,
    pub mode: NumericMode,
    pub tolerance: f64,
    /// `None` when the budget check is disabled.
    pub budget: Option<u64>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_common(args: &CommonArgs) -> Result<Self, ConfigError> {
        Ok(Self {
            input: args.input.clone(),
            selector: SelectorSpec::parse(&args.selector)?,
            dedupe: args.dedupe,
            reorder_columns: args.reorder_columns,
            mode: NumericMode::Exact,
            tolerance: chebelim_core::DEFAULT_FLOAT_TOLERANCE,
            budget: (!args.force).then_some(args.budget),
            format: args.format,
        })
    }

    pub fn from_solve(args: &SolveArgs) -> Result<Self, ConfigError> {
        if !args.tolerance.is_finite() || args.tolerance < 0.0 {
            return Err(ConfigError::Tolerance);
        }
        let mut config = Self::from_common(&args.common)?;
        if args.float {
            config.mode = NumericMode::Float;
            config.tolerance = args.tolerance;
        }
        Ok(config)
    }

    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            dedupe: self.dedupe,
            reorder_columns: self.reorder_columns,
            zero_tol: self.tolerance,
            parallel: true,
        }
    }
}
