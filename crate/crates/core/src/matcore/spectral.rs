//! Eigensolvers, backed by nalgebra.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::tol;

fn to_nalgebra(x: &ComplexMatrix) -> DMatrix<Complex64> {
    DMatrix::from_row_slice(x.rows(), x.cols(), x.data())
}

fn hermitian_gate(x: &ComplexMatrix) -> Result<usize> {
    let d = x.square_dim()?;
    let defect = x.hermiticity_defect();
    let limit = tol::HERMITIAN_GATE * (1.0 + x.max_norm());
    if defect > limit {
        return Err(Error::Domain(format!(
            "matrix is not Hermitian: ‖X − X†‖_max = {defect:.3e} exceeds {limit:.3e}"
        )));
    }
    Ok(d)
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input must pass `‖X − X†‖_max ≤ 1e-10 · (1 + ‖X‖_max)`; it is then
/// symmetrized before solving.
pub fn hermitian_spectrum(x: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigh(x)?.0)
}

/// Eigenpairs of a Hermitian matrix: ascending eigenvalues and the matching
/// orthonormal eigenvectors as columns.
pub fn hermitian_eigh(x: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let d = hermitian_gate(x)?;
    let a = to_nalgebra(x);
    let sym = (&a + a.adjoint()).scale(0.5);
    let eig = SymmetricEigen::new(sym);
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = ComplexMatrix::from_fn(d, d, |r, c| eig.eigenvectors[(r, order[c])]);
    Ok((values, vectors))
}

/// Eigenvalues of a general square matrix, sorted by (re, im).
pub fn eigenvalues(x: &ComplexMatrix) -> Result<Vec<Complex64>> {
    x.square_dim()?;
    let mut ev: Vec<Complex64> = if x.data().iter().all(|z| z.im == 0.0) {
        let real = DMatrix::from_row_slice(
            x.rows(),
            x.cols(),
            &x.data().iter().map(|z| z.re).collect::<Vec<_>>(),
        );
        real.complex_eigenvalues().iter().copied().collect()
    } else {
        to_nalgebra(x)
            .schur()
            .eigenvalues()
            .ok_or_else(|| Error::Domain("Schur decomposition did not triangularize".into()))?
            .iter()
            .copied()
            .collect()
    };
    ev.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::random::{random_hermitian, random_matrix, seeded};

    #[test]
    fn identity_and_pauli_x() {
        assert_eq!(
            hermitian_spectrum(&ComplexMatrix::identity(3)).unwrap(),
            vec![1.0, 1.0, 1.0]
        );
        let sx = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let ev = hermitian_spectrum(&sx).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn trace_identity_on_random_hermitian() {
        let mut rng = seeded(21);
        for d in 1..=10 {
            let h = random_hermitian(d, &mut rng);
            let ev = hermitian_spectrum(&h).unwrap();
            assert!(ev.windows(2).all(|w| w[0] <= w[1]));
            let s: f64 = ev.iter().sum();
            assert!((s - h.trace().re).abs() <= 1e-10, "d={d}");
        }
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let mut rng = seeded(4);
        let h = random_hermitian(5, &mut rng);
        let (vals, vecs) = hermitian_eigh(&h).unwrap();
        let diag: Vec<Complex64> = vals.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let rebuilt = ComplexMatrix::from_diagonal(&diag).conjugate_by(&vecs);
        assert!(rebuilt.approx_eq(&h, 1e-12));
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = ComplexMatrix::from_real_rows(&[&[1.0, 2.0], &[3.0, 1.0]]).unwrap();
        assert!(matches!(hermitian_spectrum(&m), Err(Error::Domain(_))));
        assert!(matches!(
            hermitian_spectrum(&ComplexMatrix::zeros(2, 3)),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn general_eigenvalues_of_shift() {
        // the d-cycle has the d-th roots of unity as eigenvalues
        let d = 5;
        let p = ComplexMatrix::from_fn(d, d, |i, j| {
            if j == (i + 1) % d {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let ev = eigenvalues(&p).unwrap();
        assert_eq!(ev.len(), d);
        for z in &ev {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.powu(d as u32) - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn general_eigenvalues_complex_input() {
        let mut rng = seeded(8);
        let m = random_matrix(4, 4, &mut rng);
        let ev = eigenvalues(&m).unwrap();
        let s: Complex64 = ev.iter().sum();
        assert!((s - m.trace()).norm() < 1e-10);
    }
}
