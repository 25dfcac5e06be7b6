//! The cyclic shift `P`, its powers, circulant matrices and the DFT that
//! diagonalizes them.
//!
//! `P^k = Σ_i |i⟩⟨i ⊕ k|` with 0-based indices and `⊕` the addition mod `d`,
//! so `P^k[i, (i + k) mod d] = 1`. A circulant matrix `Σ_k c_k P^k` therefore
//! has first row `(c_0, …, c_{d−1})`, and row `r` is row 0 shifted right by `r`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

/// Residue mod `d`, with `⊕` and `⊖`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicIndex {
    d: usize,
    value: usize,
}

impl CyclicIndex {
    pub fn new(d: usize, value: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension("cyclic index with d = 0".into()));
        }
        Ok(Self {
            d,
            value: reduce(value, d),
        })
    }

    /// From a 1-based label in `1..=d`.
    pub fn from_label(d: usize, label: usize) -> Result<Self> {
        if label == 0 || label > d {
            return Err(Error::Domain(format!("label {label} outside 1..={d}")));
        }
        Self::new(d, label as i64 - 1)
    }

    pub fn value(self) -> usize {
        self.value
    }

    pub fn label(self) -> usize {
        self.value + 1
    }

    pub fn dim(self) -> usize {
        self.d
    }

    /// `self ⊕ k`.
    pub fn plus(self, k: i64) -> Self {
        Self {
            d: self.d,
            value: reduce(self.value as i64 + k, self.d),
        }
    }

    /// `self ⊖ k`.
    pub fn minus(self, k: i64) -> Self {
        self.plus(-k)
    }
}

/// `k mod d` in `0..d`.
pub fn reduce(k: i64, d: usize) -> usize {
    k.rem_euclid(d as i64) as usize
}

fn check_dim(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::InvalidDimension("dimension must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `P^k` in dimension `d`; `k` is reduced mod `d`.
pub fn cyclic_shift_power(d: usize, k: i64) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let k = reduce(k, d);
    let mut p = ComplexMatrix::zeros(d, d);
    for i in 0..d {
        p[(i, (i + k) % d)] = Complex64::new(1.0, 0.0);
    }
    Ok(p)
}

/// First row `(c_0, …, c_{d−1})` of a circulant matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CirculantCoefficients(Vec<Complex64>);

impl CirculantCoefficients {
    pub fn new(c: Vec<Complex64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidDimension("empty coefficient vector".into()));
        }
        Ok(Self(c))
    }

    pub fn from_real(c: &[f64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> Complex64 {
        self.0[k]
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        circulant_from_coeffs(self)
    }
}

/// `Σ_k c_k P^k`.
pub fn circulant_from_coeffs(c: &CirculantCoefficients) -> ComplexMatrix {
    let d = c.dim();
    ComplexMatrix::from_fn(d, d, |i, j| c.0[reduce(j as i64 - i as i64, d)])
}

/// True iff `max_{i,k} |X[i, i⊕k] − X[0, k]| ≤ tol`.
pub fn is_circulant(x: &ComplexMatrix, tol: f64) -> Result<bool> {
    let d = x.square_dim()?;
    for k in 0..d {
        let first = x[(0, k)];
        for i in 1..d {
            if (x[(i, (i + k) % d)] - first).norm() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `ω = exp(2πi / d)`.
pub fn omega(d: usize) -> Complex64 {
    root_of_unity(1, d)
}

/// `ω^m` evaluated directly from the reduced exponent, which keeps the
/// phase accurate for large `m`.
pub fn root_of_unity(m: i64, d: usize) -> Complex64 {
    let m = reduce(m, d);
    Complex64::from_polar(1.0, 2.0 * PI * m as f64 / d as f64)
}

/// Unitary DFT matrix `F[j, k] = ω^{jk} / √d`, satisfying `P = F Ω F†`.
pub fn dft_matrix(d: usize) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let s = 1.0 / (d as f64).sqrt();
    Ok(ComplexMatrix::from_fn(d, d, |j, k| {
        root_of_unity((j * k) as i64, d) * s
    }))
}

/// `Ω^k = diag(ω^{0·k}, …, ω^{(d−1)k})`.
pub fn omega_power_diag(d: usize, k: i64) -> Result<ComplexMatrix> {
    check_dim(d)?;
    let diag: Vec<Complex64> = (0..d)
        .map(|j| root_of_unity(j as i64 * reduce(k, d) as i64, d))
        .collect();
    Ok(ComplexMatrix::from_diagonal(&diag))
}
