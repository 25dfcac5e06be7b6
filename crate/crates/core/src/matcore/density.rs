use super::matrix::ComplexMatrix;
use super::spectral::hermitian_spectrum;
use crate::error::{Error, Result};
use crate::tol;

/// Positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity at the default
    /// structural tolerance.
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        Self::with_tolerance(m, tol::STRUCTURAL)
    }

    pub fn with_tolerance(m: ComplexMatrix, tol: f64) -> Result<Self> {
        let d = m.square_dim()?;
        let defect = m.hermiticity_defect();
        if defect > tol {
            return Err(Error::Domain(format!(
                "state is not Hermitian (defect {defect:.3e})"
            )));
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(Error::Domain(format!(
                "state trace is {:.6}{:+.6}i, expected 1",
                tr.re, tr.im
            )));
        }
        let min = hermitian_spectrum(&m)?[0];
        if min < -tol {
            return Err(Error::Domain(format!(
                "state has negative eigenvalue {min:.3e} (dimension {d})"
            )));
        }
        Ok(Self(m))
    }

    pub(crate) fn new_unchecked(m: ComplexMatrix) -> Self {
        Self(m)
    }

    /// `|ψ⟩⟨ψ|` for a unit vector.
    pub fn pure(psi: &[num_complex::Complex64]) -> Result<Self> {
        let n: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if psi.is_empty() {
            return Err(Error::InvalidDimension("empty state vector".into()));
        }
        if (n - 1.0).abs() > tol::STRUCTURAL {
            return Err(Error::Domain(format!("state vector has norm {n}")));
        }
        Ok(Self(ComplexMatrix::outer(psi, psi)))
    }

    /// `1_d / d`.
    pub fn maximally_mixed(d: usize) -> Self {
        Self(ComplexMatrix::identity(d).scale_real(1.0 / d as f64))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn rejects_non_states() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 0.0]]).unwrap();
        assert!(matches!(DensityMatrix::new(m), Err(Error::Domain(_))));
        let m = ComplexMatrix::identity(2);
        assert!(matches!(DensityMatrix::new(m), Err(Error::Domain(_))));
        let m = ComplexMatrix::from_real_rows(&[&[1.5, 0.0], &[0.0, -0.5]]).unwrap();
        assert!(matches!(DensityMatrix::new(m), Err(Error::Domain(_))));
    }

    #[test]
    fn pure_state() {
        let s = 0.5f64.sqrt();
        let plus = [Complex64::new(s, 0.0), Complex64::new(s, 0.0)];
        let rho = DensityMatrix::pure(&plus).unwrap();
        assert!((rho.matrix()[(0, 1)].re - 0.5).abs() < 1e-15);
        assert!(DensityMatrix::new(rho.into_matrix()).is_ok());
    }
}
