use std::io::Write;
use std::time::Instant;

use chebelim_core::oracle::CheckStatus;
use chebelim_core::{
    bound_exceeds, complexity_bound, datasets, oracle_minimax, solve_with, verify, Matrix,
    ParamRange, ProblemInstance, Rational, Scalar, Solution,
};
use serde::Serialize;

use crate::args::Format;
use crate::config::{NumericMode, RunConfig};
use crate::ingest::ingest_csv;

/// Process exit status. The numeric values are a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Failure = 1,
    BudgetRefused = 2,
}

pub type Io<'a> = (&'a mut dyn Write, &'a mut dyn Write);

macro_rules! fail {
    ($err:expr, $($arg:tt)*) => {{
        let _ = writeln!($err, $($arg)*);
        return Status::Failure;
    }};
}

#[derive(Debug, Serialize)]
struct BoxReport {
    lower: Option<String>,
    upper: Option<String>,
}

#[derive(Debug, Serialize)]
struct SolveReport {
    mu: String,
    theta: Vec<String>,
    boxes: Vec<BoxReport>,
    entries: u64,
    elapsed_ms: u64,
}

impl SolveReport {
    fn new<T: Scalar>(solution: &Solution<T>, elapsed_ms: u64) -> Self {
        Self {
            mu: solution.mu.to_string(),
            theta: solution.theta.iter().map(ToString::to_string).collect(),
            boxes: solution
                .ranges
                .iter()
                .map(|r| BoxReport {
                    lower: r.lower().map(ToString::to_string),
                    upper: r.upper().map(ToString::to_string),
                })
                .collect(),
            entries: solution.entries,
            elapsed_ms,
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "mu = {}", self.mu)?;
        for (j, (theta, b)) in self.theta.iter().zip(&self.boxes).enumerate() {
            match (&b.lower, &b.upper) {
                (Some(lo), Some(hi)) => {
                    writeln!(out, "theta[{}] = {theta}  in [{lo}, {hi}]", j + 1)?
                }
                _ => writeln!(out, "theta[{}] = {theta}  (free)", j + 1)?,
            }
        }
        writeln!(out, "entries = {}", self.entries)?;
        writeln!(out, "elapsed_ms = {}", self.elapsed_ms)
    }
}

/// Refuses before any allocation when `C(N, M)` exceeds the budget.
fn check_budget(
    problem: &ProblemInstance<Rational>,
    config: &RunConfig,
    err: &mut dyn Write,
) -> Option<Status> {
    let budget = config.budget?;
    let (n, m) = (problem.params(), problem.rows());
    if m < 2 || !bound_exceeds(n, m, budget) {
        return None;
    }
    let bound = complexity_bound(n, m)
        .map(|b| b.to_string())
        .unwrap_or_else(|_| "too large to evaluate".to_string());
    let _ = writeln!(
        err,
        "refusing to solve: entry bound C({n},{m}) = {bound} exceeds the budget of {budget} entries (use --budget or --force)"
    );
    Some(Status::BudgetRefused)
}

fn to_float(
    problem: &ProblemInstance<Rational>,
) -> Result<ProblemInstance<f64>, chebelim_core::Error> {
    let x: Matrix<f64> = problem.x().map(f64::from_rational);
    ProblemInstance::new(x, problem.y().iter().map(f64::from_rational).collect())
}

fn run_solve<T: Scalar>(
    problem: &ProblemInstance<T>,
    config: &RunConfig,
    (out, err): Io<'_>,
) -> Status {
    let selector = match config.selector.resolve::<T>(problem.params()) {
        Ok(s) => s,
        Err(e) => fail!(err, "error: {e}"),
    };
    let start = Instant::now();
    let solution = match solve_with(problem, &selector, &config.solve_options()) {
        Ok(s) => s,
        Err(e) => fail!(err, "error: {e}"),
    };
    let report = SolveReport::new(&solution, start.elapsed().as_millis() as u64);
    let written = match config.format {
        Format::Json => serde_json::to_string_pretty(&report)
            .map_err(std::io::Error::other)
            .and_then(|s| writeln!(out, "{s}")),
        Format::Text => report.write_text(out),
    };
    if let Err(e) = written {
        fail!(err, "error: {e}");
    }
    Status::Success
}

pub fn cmd_solve(config: &RunConfig, (out, err): Io<'_>) -> Status {
    let problem = match ingest_csv(&config.input) {
        Ok(p) => p,
        Err(e) => fail!(err, "error: {e}"),
    };
    if let Some(status) = check_budget(&problem, config, err) {
        return status;
    }
    match config.mode {
        NumericMode::Exact => run_solve(&problem, config, (out, err)),
        NumericMode::Float => match to_float(&problem) {
            Ok(p) => run_solve(&p, config, (out, err)),
            Err(e) => fail!(err, "error: {e}"),
        },
    }
}

#[derive(Debug, Serialize)]
struct CheckReport {
    name: &'static str,
    status: &'static str,
    detail: String,
}

fn status_label(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Skipped => "SKIPPED",
    }
}

pub fn cmd_verify(config: &RunConfig, (out, err): Io<'_>) -> Status {
    let problem = match ingest_csv(&config.input) {
        Ok(p) => p,
        Err(e) => fail!(err, "error: {e}"),
    };
    if let Some(status) = check_budget(&problem, config, err) {
        return status;
    }
    let selector = match config.selector.resolve::<Rational>(problem.params()) {
        Ok(s) => s,
        Err(e) => fail!(err, "error: {e}"),
    };
    let solution = match solve_with(&problem, &selector, &config.solve_options()) {
        Ok(s) => s,
        Err(e) => fail!(err, "error: {e}"),
    };
    let report = verify(&problem, &solution);
    let checks: Vec<CheckReport> = report
        .checks
        .iter()
        .map(|c| CheckReport {
            name: c.name,
            status: status_label(c.status),
            detail: c.detail.clone(),
        })
        .collect();
    let written = match config.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "mu": solution.mu.to_string(),
            "checks": checks,
            "passed": report.passed(),
        }))
        .map_err(std::io::Error::other)
        .and_then(|s| writeln!(out, "{s}")),
        Format::Text => checks
            .iter()
            .try_for_each(|c| writeln!(out, "{:<8} {:<7} {}", c.name, c.status, c.detail)),
    };
    if let Err(e) = written {
        fail!(err, "error: {e}");
    }
    if report.passed() {
        Status::Success
    } else {
        Status::Failure
    }
}

pub fn cmd_bound(n: usize, m: usize, (out, err): Io<'_>) -> Status {
    match complexity_bound(n, m) {
        Ok(bound) => {
            let _ = writeln!(out, "{bound}");
            Status::Success
        }
        Err(e) => fail!(err, "error: {e}"),
    }
}

#[derive(Debug, Serialize)]
struct DemoRow {
    name: &'static str,
    mu_expected: Option<String>,
    mu: String,
    theta_expected: Vec<String>,
    theta: Vec<String>,
    entries_expected: u64,
    entries: u64,
    /// Set when entry counts are informational (dedupe on).
    entries_informational: bool,
    oracle_mu: Option<String>,
    pass: bool,
}

fn demo_row(
    problem: &ProblemInstance<Rational>,
    expected: &datasets::Expected,
    dedupe: bool,
) -> Result<DemoRow, chebelim_core::Error> {
    let options = chebelim_core::SolveOptions {
        dedupe,
        ..Default::default()
    };
    let solution = solve_with(problem, &chebelim_core::Selector::Midpoint, &options)?;
    let unique = solution.ranges.iter().all(ParamRange::is_point);
    let oracle_mu = if dedupe {
        Some(oracle_minimax(problem)?.mu)
    } else {
        None
    };
    let pass = unique
        && solution.theta == expected.theta
        && expected.mu.as_ref().is_none_or(|mu| *mu == solution.mu)
        && (dedupe || solution.entries == expected.entries)
        && oracle_mu.as_ref().is_none_or(|mu| *mu == solution.mu);
    Ok(DemoRow {
        name: expected.name,
        mu_expected: expected.mu.as_ref().map(ToString::to_string),
        mu: solution.mu.to_string(),
        theta_expected: expected.theta.iter().map(ToString::to_string).collect(),
        theta: solution.theta.iter().map(ToString::to_string).collect(),
        entries_expected: expected.entries,
        entries: solution.entries,
        entries_informational: dedupe,
        oracle_mu: oracle_mu.map(|m| m.to_string()),
        pass,
    })
}

pub fn cmd_demo(dedupe: bool, format: Format, (out, err): Io<'_>) -> Status {
    let cases = [
        (datasets::example_one(), datasets::example_one_expected()),
        (datasets::example_two(), datasets::example_two_expected()),
    ];
    let mut rows = Vec::with_capacity(cases.len());
    for (problem, expected) in &cases {
        match demo_row(problem, expected, dedupe) {
            Ok(row) => rows.push(row),
            Err(e) => fail!(err, "error in {}: {e}", expected.name),
        }
    }
    let all_pass = rows.iter().all(|r| r.pass);
    let written = match format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "dedupe": dedupe,
            "examples": rows,
            "pass": all_pass,
        }))
        .map_err(std::io::Error::other)
        .and_then(|s| writeln!(out, "{s}")),
        Format::Text => write_demo_table(&rows, out),
    };
    if let Err(e) = written {
        fail!(err, "error: {e}");
    }
    if all_pass {
        Status::Success
    } else {
        Status::Failure
    }
}

fn write_demo_table(rows: &[DemoRow], out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<24} {:<9} {:<28} {:<28}",
        "example", "quantity", "expected", "computed"
    )?;
    for row in rows {
        let mu_expected = row.mu_expected.clone().unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<24} {:<9} {:<28} {:<28}",
            row.name, "mu", mu_expected, row.mu
        )?;
        writeln!(
            out,
            "{:<24} {:<9} {:<28} {:<28}",
            "",
            "theta",
            row.theta_expected.join(", "),
            row.theta.join(", ")
        )?;
        let entries_note = if row.entries_informational {
            " (informational)"
        } else {
            ""
        };
        writeln!(
            out,
            "{:<24} {:<9} {:<28} {}{entries_note}",
            "", "entries", row.entries_expected, row.entries
        )?;
        if let Some(mu) = &row.oracle_mu {
            writeln!(out, "{:<24} {:<9} {:<28} {mu}", "", "oracle mu", row.mu)?;
        }
    }
    for row in rows {
        writeln!(
            out,
            "{} {}",
            if row.pass { "PASS" } else { "FAIL" },
            row.name
        )?;
    }
    Ok(())
}
