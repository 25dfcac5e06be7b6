//! Bipartite operators with partial trace and partial transpose.

use serde::{Deserialize, Serialize};

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// Operator on `C^dA ⊗ C^dB`. Composite index `(i, p) ↦ i · dB + p`.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteOperator {
    d_a: usize,
    d_b: usize,
    matrix: ComplexMatrix,
}

impl BipartiteOperator {
    pub fn new(d_a: usize, d_b: usize, matrix: ComplexMatrix) -> Result<Self> {
        if d_a == 0 || d_b == 0 {
            return Err(Error::InvalidDimension(format!(
                "subsystem dimensions ({d_a}, {d_b}) must be positive"
            )));
        }
        if matrix.shape() != (d_a * d_b, d_a * d_b) {
            return Err(Error::Shape(format!(
                "a {}x{} matrix does not act on {d_a}⊗{d_b}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { d_a, d_b, matrix })
    }

    /// `A ⊗ B`.
    pub fn product(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Self> {
        let d_a = a.square_dim()?;
        let d_b = b.square_dim()?;
        Self::new(d_a, d_b, a.kron(b))
    }

    pub fn d_a(&self) -> usize {
        self.d_a
    }

    pub fn d_b(&self) -> usize {
        self.d_b
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d_a, self.d_b)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// Entry `⟨i p| X |j q⟩`.
    pub fn entry(&self, i: usize, p: usize, j: usize, q: usize) -> num_complex::Complex64 {
        self.matrix[(i * self.d_b + p, j * self.d_b + q)]
    }

    /// The `dB × dB` block `⟨i|X|j⟩` (A-indices fixed).
    pub fn block(&self, i: usize, j: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.d_b, self.d_b, |p, q| self.entry(i, p, j, q))
    }

    pub fn partial_trace(&self, over: Subsystem) -> ComplexMatrix {
        partial_trace(self, over)
    }

    pub fn partial_transpose(&self, on: Subsystem) -> BipartiteOperator {
        partial_transpose(self, on)
    }
}

/// `Tr_A` gives a `dB × dB` matrix, `Tr_B` a `dA × dA` one.
pub fn partial_trace(x: &BipartiteOperator, over: Subsystem) -> ComplexMatrix {
    let (da, db) = x.dims();
    match over {
        Subsystem::A => ComplexMatrix::from_fn(db, db, |p, q| {
            (0..da).map(|i| x.entry(i, p, i, q)).sum()
        }),
        Subsystem::B => ComplexMatrix::from_fn(da, da, |i, j| {
            (0..db).map(|p| x.entry(i, p, j, p)).sum()
        }),
    }
}

/// `(X^{Γ_B})[(i,p),(j,q)] = X[(i,q),(j,p)]`, and symmetrically for `Γ_A`.
pub fn partial_transpose(x: &BipartiteOperator, on: Subsystem) -> BipartiteOperator {
    let (da, db) = x.dims();
    let n = da * db;
    let m = match on {
        Subsystem::B => ComplexMatrix::from_fn(n, n, |r, c| {
            let (i, p) = (r / db, r % db);
            let (j, q) = (c / db, c % db);
            x.entry(i, q, j, p)
        }),
        Subsystem::A => ComplexMatrix::from_fn(n, n, |r, c| {
            let (i, p) = (r / db, r % db);
            let (j, q) = (c / db, c % db);
            x.entry(j, p, i, q)
        }),
    };
    BipartiteOperator {
        d_a: da,
        d_b: db,
        matrix: m,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::random::{random_density_with, random_matrix, seeded};
    use crate::matcore::spectral::hermitian_spectrum;
    use num_complex::Complex64;

    fn vec_identity(d: usize) -> Vec<Complex64> {
        ComplexMatrix::identity(d).vec()
    }

    #[test]
    fn trace_of_product_state() {
        let mut rng = seeded(1);
        let ra = random_density_with(3, &mut rng).into_matrix();
        let rb = random_density_with(4, &mut rng).into_matrix();
        let x = BipartiteOperator::product(&ra, &rb).unwrap();
        assert!(partial_trace(&x, Subsystem::A).approx_eq(&rb, 1e-14));
        assert!(partial_trace(&x, Subsystem::B).approx_eq(&ra, 1e-14));
    }

    #[test]
    fn trace_of_identity() {
        let x = BipartiteOperator::new(2, 3, ComplexMatrix::identity(6)).unwrap();
        assert!(partial_trace(&x, Subsystem::A).approx_eq(&ComplexMatrix::identity(3).scale_real(2.0), 0.0));
    }

    #[test]
    fn maximally_entangled_marginal() {
        let v = vec_identity(2);
        let x = BipartiteOperator::new(2, 2, ComplexMatrix::outer(&v, &v)).unwrap();
        assert!(partial_trace(&x, Subsystem::A).approx_eq(&ComplexMatrix::identity(2), 0.0));
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let mut rng = seeded(2);
        let m = random_matrix(6, 6, &mut rng);
        let x = BipartiteOperator::new(3, 2, m.clone()).unwrap();
        for s in [Subsystem::A, Subsystem::B] {
            assert!((partial_trace(&x, s).trace() - m.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn transpose_product_rule() {
        let mut rng = seeded(3);
        let a = random_matrix(2, 2, &mut rng);
        let b = random_matrix(3, 3, &mut rng);
        let x = BipartiteOperator::product(&a, &b).unwrap();
        let tb = partial_transpose(&x, Subsystem::B);
        assert!(tb.matrix().approx_eq(&a.kron(&b.transpose()), 1e-15));
        let ta = partial_transpose(&x, Subsystem::A);
        assert!(ta.matrix().approx_eq(&a.transpose().kron(&b), 1e-15));
    }

    #[test]
    fn transpose_involution_and_full_transpose() {
        let mut rng = seeded(4);
        let x = BipartiteOperator::new(2, 3, random_matrix(6, 6, &mut rng)).unwrap();
        for s in [Subsystem::A, Subsystem::B] {
            assert_eq!(partial_transpose(&partial_transpose(&x, s), s), x);
        }
        let full_t = BipartiteOperator::new(2, 3, x.matrix().transpose()).unwrap();
        assert_eq!(
            partial_transpose(&x, Subsystem::A),
            partial_transpose(&full_t, Subsystem::B)
        );
    }

    #[test]
    fn swap_spectrum_of_bell_projector() {
        let v = vec_identity(2);
        let x = BipartiteOperator::new(2, 2, ComplexMatrix::outer(&v, &v).scale_real(0.5)).unwrap();
        let ev = hermitian_spectrum(partial_transpose(&x, Subsystem::B).matrix()).unwrap();
        let want = [-0.5, 0.5, 0.5, 0.5];
        for (a, b) in ev.iter().zip(want) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn agrees_with_index_loops() {
        // brute force over explicit (i, p, j, q) tuples on a 2⊗3 operator
        let mut rng = seeded(5);
        let (da, db) = (2, 3);
        let m = random_matrix(6, 6, &mut rng);
        let x = BipartiteOperator::new(da, db, m.clone()).unwrap();
        let mut tr_a = ComplexMatrix::zeros(db, db);
        let mut tr_b = ComplexMatrix::zeros(da, da);
        let mut pt_b = ComplexMatrix::zeros(6, 6);
        for i in 0..da {
            for p in 0..db {
                for j in 0..da {
                    for q in 0..db {
                        let v = m[(i * db + p, j * db + q)];
                        if i == j {
                            tr_a[(p, q)] += v;
                        }
                        if p == q {
                            tr_b[(i, j)] += v;
                        }
                        pt_b[(i * db + q, j * db + p)] = v;
                    }
                }
            }
        }
        assert!(partial_trace(&x, Subsystem::A).approx_eq(&tr_a, 1e-14));
        assert!(partial_trace(&x, Subsystem::B).approx_eq(&tr_b, 1e-14));
        assert!(partial_transpose(&x, Subsystem::B).matrix().approx_eq(&pt_b, 1e-14));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            BipartiteOperator::new(2, 3, ComplexMatrix::identity(5)),
            Err(Error::Shape(_))
        ));
        assert!(matches!(
            BipartiteOperator::new(0, 3, ComplexMatrix::identity(3)),
            Err(Error::InvalidDimension(_))
        ));
    }
}
