//! Qutrit states in the Gell-Mann parameterization
//! `ρ = (1/3)(1 + √3 r·G)`, `r_a = (√3/2) Tr(ρ G_a)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, DensityMatrix};
use crate::tol;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Real coefficients `(r_1, …, r_8)` stored 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GellMannVector(pub [f64; 8]);

impl GellMannVector {
    pub fn zero() -> Self {
        Self([0.0; 8])
    }

    /// Component `r_label` with `label` in `1..=8`.
    pub fn r(&self, label: usize) -> f64 {
        assert!((1..=8).contains(&label), "Gell-Mann label {label} out of range");
        self.0[label - 1]
    }

    pub fn components(&self) -> &[f64; 8] {
        &self.0
    }

    /// `s = r_1 + r_4 + r_6`.
    pub fn s(&self) -> f64 {
        self.r(1) + self.r(4) + self.r(6)
    }

    /// `t = r_2 − r_5 + r_7`.
    pub fn t(&self) -> f64 {
        self.r(2) - self.r(5) + self.r(7)
    }

    /// Builds the density matrix, rejecting vectors outside the state space.
    pub fn to_density(&self) -> Result<DensityMatrix> {
        DensityMatrix::with_tolerance(qutrit_from_bloch(self), tol::STRUCTURAL)
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `G_1 … G_8` in the usual order: symmetric and antisymmetric pairs on
/// (0,1), (0,2), (1,2) interleaved with `G_3` and `G_8` on the diagonal.
pub fn gell_mann_basis() -> Vec<ComplexMatrix> {
    let sym = |a: usize, b: usize| {
        let mut m = ComplexMatrix::zeros(3, 3);
        m[(a, b)] = c(1.0, 0.0);
        m[(b, a)] = c(1.0, 0.0);
        m
    };
    let asym = |a: usize, b: usize| {
        let mut m = ComplexMatrix::zeros(3, 3);
        m[(a, b)] = c(0.0, -1.0);
        m[(b, a)] = c(0.0, 1.0);
        m
    };
    let g3 = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)]);
    let g8 = ComplexMatrix::from_diagonal(&[c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0)])
        .scale_real(1.0 / SQRT3);
    vec![sym(0, 1), asym(0, 1), g3, sym(0, 2), asym(0, 2), sym(1, 2), asym(1, 2), g8]
}

/// `(1/3)(1 + √3 r·G)`. Unit trace and Hermitian; positivity is not checked.
pub fn qutrit_from_bloch(r: &GellMannVector) -> ComplexMatrix {
    let mut m = ComplexMatrix::identity(3);
    for (g, &ra) in gell_mann_basis().iter().zip(r.components()) {
        m.add_scaled(c(SQRT3 * ra, 0.0), g);
    }
    m.scale_real(1.0 / 3.0)
}

/// `r_a = (√3/2) Tr(ρ G_a)` for a Hermitian 3×3 input.
pub fn bloch_from_qutrit(rho: &ComplexMatrix) -> Result<GellMannVector> {
    if rho.square_dim()? != 3 {
        return Err(Error::Shape(format!(
            "expected a 3x3 matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let limit = tol::HERMITIAN_GATE * (1.0 + rho.max_norm());
    if rho.hermiticity_defect() > limit {
        return Err(Error::Domain("Gell-Mann coefficients need a Hermitian matrix".into()));
    }
    let mut r = [0.0; 8];
    for (slot, g) in r.iter_mut().zip(gell_mann_basis()) {
        *slot = 0.5 * SQRT3 * (rho * &g).trace().re;
    }
    Ok(GellMannVector(r))
}

/// Coefficients of `Φ(ρ)` for the uniform qutrit channel:
/// `(s, t, 0, s, −t, s, t, 0) / 3`.
pub fn circulant_image_bloch(r: &GellMannVector) -> GellMannVector {
    let (s, t) = (r.s() / 3.0, r.t() / 3.0);
    GellMannVector([s, t, 0.0, s, -t, s, t, 0.0])
}

/// `cos θ |0⟩ + (sin θ/√2) e^{iφ} |1⟩ + (sin θ/√2) |2⟩`.
pub fn example_state(theta: f64, phi: f64) -> Vec<Complex64> {
    let a = theta.sin() / std::f64::consts::SQRT_2;
    vec![
        c(theta.cos(), 0.0),
        Complex64::from_polar(a, phi),
        c(a, 0.0),
    ]
}
