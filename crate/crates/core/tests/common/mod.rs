#![allow(dead_code)]

use chebelim_core::{ProblemInstance, Rational};
use proptest::prelude::*;

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer data in [-5, 5]; a zero column gets a 1 in row `(j * 7) % m`.
pub fn repaired_instance(
    n: usize,
    m: usize,
    cells: &[i64],
    y: &[i64],
) -> ProblemInstance<Rational> {
    let mut rows: Vec<Vec<i64>> = (0..m).map(|i| cells[i * n..(i + 1) * n].to_vec()).collect();
    for j in 0..n {
        if rows.iter().all(|row| row[j] == 0) {
            rows[(j * 7) % m][j] = 1;
        }
    }
    ProblemInstance::from_rows(
        rows.into_iter()
            .map(|row| row.into_iter().map(r).collect())
            .collect(),
        y.iter().map(|&v| r(v)).collect(),
    )
    .unwrap()
}

pub fn instance(
    max_params: usize,
    max_rows: usize,
) -> impl Strategy<Value = ProblemInstance<Rational>> {
    (1..=max_params, 2..=max_rows).prop_flat_map(|(n, m)| {
        (
            proptest::collection::vec(-5i64..=5, n * m),
            proptest::collection::vec(-5i64..=5, m),
        )
            .prop_map(move |(cells, y)| repaired_instance(n, m, &cells, &y))
    })
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-7i64..=-1, 1i64..=7], 1i64..=5).prop_map(|(n, d)| q(n, d))
}
