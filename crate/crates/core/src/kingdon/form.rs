use crate::error::{Error, Result};
use crate::exact::{congruence_diagonalize, sign_counts, Congruence, Matrix, Scalar};

/// Largest formed-space dimension with a known Kingdon construction.
pub const MAX_FORM_DIM: usize = 3;

/// A symmetric bilinear form `B` on `Q^n`, `n <= 3`, with an orthogonal basis.
///
/// The columns of `change_of_basis` are the orthogonal basis vectors written
/// in input coordinates, so `pᵀ·gram·p = diag`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormedSpace {
    gram: Matrix,
    diag: Vec<Scalar>,
    change_of_basis: Matrix,
    inverse: Matrix,
}

impl FormedSpace {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch {
                expected: gram.rows(),
                found: gram.cols(),
            });
        }
        if gram.rows() > MAX_FORM_DIM {
            return Err(Error::DimensionTooLarge(gram.rows()));
        }
        let Congruence { d, p } = congruence_diagonalize(&gram)?;
        let inverse = p.inverse()?;
        Ok(FormedSpace {
            diag: d.diagonal(),
            gram,
            change_of_basis: p,
            inverse,
        })
    }

    /// The form with the given values `B(e_h, e_h)` on an orthogonal basis.
    pub fn diagonal(values: &[Scalar]) -> Result<Self> {
        Self::new(Matrix::from_diagonal(values))
    }

    pub fn diagonal_ints(values: &[i64]) -> Result<Self> {
        let v: Vec<Scalar> = values.iter().map(|&x| Scalar::from_int(x)).collect();
        Self::diagonal(&v)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `B(f_h, f_h)` on the orthogonal basis.
    pub fn diag(&self) -> &[Scalar] {
        &self.diag
    }

    pub fn change_of_basis(&self) -> &Matrix {
        &self.change_of_basis
    }

    /// `Q(f_h) = B(f_h, f_h) / 2`.
    pub fn q_values(&self) -> Vec<Scalar> {
        let half = Scalar::new(1, 2);
        self.diag.iter().map(|d| d * &half).collect()
    }

    /// `B(x, y)` for vectors in input coordinates.
    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Result<Scalar> {
        let gy = self.gram.mul_vec(y)?;
        if x.len() != gy.len() {
            return Err(Error::DimensionMismatch {
                expected: gy.len(),
                found: x.len(),
            });
        }
        Ok(x.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    /// Coordinates of an input vector with respect to the orthogonal basis.
    pub fn to_orthogonal(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.inverse.mul_vec(x)
    }

    /// Counts of zero, positive and negative diagonal entries.
    pub fn sign_counts(&self) -> (usize, usize, usize) {
        sign_counts(&self.diag)
    }

    pub fn is_degenerate(&self) -> bool {
        self.diag.iter().any(Scalar::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input_is_kept() {
        let fs = FormedSpace::diagonal_ints(&[-2, -2, 2]).unwrap();
        assert_eq!(fs.change_of_basis(), &Matrix::identity(3));
        assert_eq!(fs.q_values(), vec![Scalar::from_int(-1), Scalar::from_int(-1), Scalar::one()]);
    }

    #[test]
    fn hyperbolic_input_is_diagonalized() {
        let g = Matrix::from_ints(&[[0, 1, 0], [1, 0, 0], [0, 0, 0]]);
        let fs = FormedSpace::new(g.clone()).unwrap();
        let p = fs.change_of_basis();
        assert_eq!(p.transpose().mul(&g).unwrap().mul(p).unwrap(), Matrix::from_diagonal(fs.diag()));
        assert_eq!(fs.sign_counts(), (1, 1, 1));
        let e0 = [Scalar::one(), Scalar::zero(), Scalar::zero()];
        let e1 = [Scalar::zero(), Scalar::one(), Scalar::zero()];
        assert_eq!(fs.bilinear(&e0, &e1).unwrap(), Scalar::one());
    }

    #[test]
    fn rejects_large_and_asymmetric() {
        assert!(matches!(
            FormedSpace::new(Matrix::identity(4)),
            Err(Error::DimensionTooLarge(4))
        ));
        assert!(matches!(
            FormedSpace::new(Matrix::from_ints(&[[0, 1], [0, 0]])),
            Err(Error::NonSymmetric)
        ));
    }
}
