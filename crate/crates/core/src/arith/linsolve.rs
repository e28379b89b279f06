//! Exact linear systems over `Q(t)`.
//!
//! Each row is scaled to `Q[t]` by the lcm of its denominators and reduced to
//! echelon form with fraction-free (Bareiss) elimination, so every division
//! during elimination is exact in `Q[t]`. Back substitution happens in `Q(t)`
//! with free unknowns set to zero.

use super::tfrac::TFrac;
use super::tpoly::TPoly;
use crate::error::ArithError;

/// Returns some solution of `matrix * u = rhs`, or `None` if the system is
/// inconsistent.
pub fn solve_linear_tfrac(
    matrix: &[Vec<TFrac>],
    rhs: &[TFrac],
) -> Result<Option<Vec<TFrac>>, ArithError> {
    if matrix.len() != rhs.len() {
        return Err(ArithError::DimensionMismatch(format!(
            "{} rows but {} right-hand sides",
            matrix.len(),
            rhs.len()
        )));
    }
    let cols = matrix.first().map_or(0, Vec::len);
    if let Some(bad) = matrix.iter().position(|r| r.len() != cols) {
        return Err(ArithError::DimensionMismatch(format!(
            "row {bad} has {} entries, expected {cols}",
            matrix[bad].len()
        )));
    }

    let mut m: Vec<Vec<TPoly>> = matrix
        .iter()
        .zip(rhs)
        .filter(|(row, b)| !(b.is_zero() && row.iter().all(TFrac::is_zero)))
        .map(|(row, b)| clear_row(row.iter().chain(std::iter::once(b))))
        .collect();
    let rows = m.len();

    let mut pivots = Vec::new();
    let mut prev = TPoly::one();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // smallest-degree nonzero pivot keeps entries small
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| m[i][col].degree())
        else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in col + 1..=cols {
                let mut v = &m[r][col] * &m[i][j];
                if !m[i][col].is_zero() {
                    v = &v - &(&m[i][col] * &m[r][j]);
                }
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][col] = TPoly::zero();
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }

    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }

    let mut sol = vec![TFrac::zero(); cols];
    for (k, &col) in pivots.iter().enumerate().rev() {
        let row = &m[k];
        let mut acc = TFrac::from_poly(row[cols].clone());
        for j in col + 1..cols {
            if !row[j].is_zero() && !sol[j].is_zero() {
                acc = &acc - &(&TFrac::from_poly(row[j].clone()) * &sol[j]);
            }
        }
        sol[col] = acc.checked_div(&TFrac::from_poly(row[col].clone()))?;
    }
    Ok(Some(sol))
}

fn clear_row<'a>(entries: impl Iterator<Item = &'a TFrac> + Clone) -> Vec<TPoly> {
    let l = entries.clone().fold(TPoly::one(), |acc, e| {
        if e.den().is_one() {
            acc
        } else {
            acc.lcm(e.den())
        }
    });
    entries
        .map(|e| {
            if e.den().is_one() {
                e.num() * &l
            } else {
                e.num() * &l.exact_div(e.den()).unwrap()
            }
        })
        .collect()
}
