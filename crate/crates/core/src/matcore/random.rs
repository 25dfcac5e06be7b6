//! Seeded generators for test inputs: Ginibre matrices, density matrices,
//! unit vectors, Haar-ish unitaries and probability vectors.
//!
//! All generators take a caller-owned RNG; [`seeded`] builds the standard one.
//! The same seed always yields bit-identical output.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use super::density::DensityMatrix;
use super::matrix::ComplexMatrix;

pub type SeededRng = ChaCha20Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = StandardNormal.sample(rng);
    let im: f64 = StandardNormal.sample(rng);
    Complex64::new(re, im)
}

/// Matrix of independent standard complex Gaussians.
pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

pub fn random_hermitian<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_matrix(d, d, rng);
    (&g + &g.adjoint()).scale_real(0.5)
}

/// `G G† / Tr(G G†)` for a Ginibre `G`.
pub fn random_density_with<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DensityMatrix {
    let g = random_matrix(d, d, rng);
    let mut w = &g * &g.adjoint();
    // exact Hermitian symmetrization so downstream checks see no rounding skew
    for i in 0..d {
        w[(i, i)].im = 0.0;
        for j in i + 1..d {
            w[(j, i)] = w[(i, j)].conj();
        }
    }
    let t = w.trace().re;
    DensityMatrix::new_unchecked(w.scale_real(1.0 / t))
}

/// Ginibre density matrix of dimension `d` from a fixed seed.
pub fn random_density_matrix(d: usize, seed: u64) -> DensityMatrix {
    random_density_with(d, &mut seeded(seed))
}

pub fn random_unit_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..d).map(|_| complex_gaussian(rng)).collect();
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / n).collect()
}

/// Unitary from Gram–Schmidt on the columns of a Ginibre matrix.
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    let g = random_matrix(d, d, rng);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    for j in 0..d {
        let mut v: Vec<Complex64> = (0..d).map(|i| g[(i, j)]).collect();
        // two passes keep the basis orthogonal to rounding
        for _ in 0..2 {
            for q in &cols {
                let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= proj * qi;
                }
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        cols.push(v.into_iter().map(|z| z / n).collect());
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Probability vector drawn uniformly from the simplex.
pub fn random_probability_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<f64> {
    let e: Vec<f64> = (0..d).map(|_| Exp1.sample(rng)).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|x| x / s).collect()
}
