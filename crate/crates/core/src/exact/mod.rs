//! Exact rational arithmetic and the small dense linear algebra the rest of
//! the crate relies on.

mod matrix;
mod scalar;

pub use matrix::{congruence_diagonalize, congruence_diagonalize_with, Congruence, Matrix, PivotOrder};
pub use scalar::Scalar;

/// Counts of (zero, positive, negative) entries.
pub fn sign_counts(values: &[Scalar]) -> (usize, usize, usize) {
    values.iter().fold((0, 0, 0), |(z, p, n), v| match v.signum() {
        0 => (z + 1, p, n),
        1 => (z, p + 1, n),
        _ => (z, p, n + 1),
    })
}
