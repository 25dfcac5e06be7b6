//! ℓ₁ and ℓ₂ coherence in the computational basis, and the chain
//! `C(ρ) ≥ C(Φ(ρ)) ≥ C(Δ(ρ))` for the uniform circulant channel `Φ` and the
//! mixed-permutation channel `Δ`.
//!
//! `C_ℓ2` is the plain sum of squared off-diagonal magnitudes, without a
//! square root.

mod gell_mann;
mod sweep;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, DensityMatrix};

pub use gell_mann::{
    bloch_from_qutrit, circulant_image_bloch, example_state, gell_mann_basis, qutrit_from_bloch,
    GellMannVector,
};
pub use sweep::{
    coherence_sweep, theta_grid, write_csv, write_json, ClosedFormCoherence, SweepRow, SweepTable,
};

/// Which coherence measure to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum NormP {
    L1,
    L2,
}

impl NormP {
    pub fn from_index(p: u8) -> Result<Self> {
        match p {
            1 => Ok(NormP::L1),
            2 => Ok(NormP::L2),
            other => Err(Error::Domain(format!("norm selector must be 1 or 2, got {other}"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            NormP::L1 => 1,
            NormP::L2 => 2,
        }
    }
}

impl TryFrom<u8> for NormP {
    type Error = Error;

    fn try_from(p: u8) -> Result<Self> {
        Self::from_index(p)
    }
}

impl From<NormP> for u8 {
    fn from(p: NormP) -> Self {
        p.index()
    }
}

impl FromStr for NormP {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(NormP::L1),
            "2" => Ok(NormP::L2),
            other => Err(Error::Domain(format!("norm selector must be 1 or 2, got {other:?}"))),
        }
    }
}

impl fmt::Display for NormP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

fn off_diagonal(x: &ComplexMatrix) -> impl Iterator<Item = Complex64> + '_ {
    let d = x.rows();
    (0..d).flat_map(move |i| (0..d).filter(move |&j| j != i).map(move |j| x[(i, j)]))
}

fn l1_of(x: &ComplexMatrix) -> f64 {
    off_diagonal(x).map(|z| z.norm()).sum()
}

fn l2_of(x: &ComplexMatrix) -> f64 {
    off_diagonal(x).map(|z| z.norm_sqr()).sum()
}

/// `Σ_{i≠j} |ρ_ij|`.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    l1_of(rho.matrix())
}

/// `Σ_{i≠j} |ρ_ij|²`.
pub fn l2_coherence(rho: &DensityMatrix) -> f64 {
    l2_of(rho.matrix())
}

pub fn coherence(rho: &DensityMatrix, p: NormP) -> f64 {
    match p {
        NormP::L1 => l1_coherence(rho),
        NormP::L2 => l2_coherence(rho),
    }
}

/// Every off-diagonal magnitude is at most `tol`.
pub fn is_incoherent(rho: &DensityMatrix, tol: f64) -> bool {
    off_diagonal(rho.matrix()).all(|z| z.norm() <= tol)
}

/// `C(ρ)`, `C(Φ(ρ))` and `C(Δ(ρ))` for one measure.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub p: NormP,
    pub c_rho: f64,
    pub c_phi: f64,
    pub c_delta: f64,
}

impl CoherenceReport {
    /// `c_rho ≥ c_phi ≥ c_delta`, each step allowed to fail by `slack`.
    pub fn chain_holds(&self, slack: f64) -> bool {
        self.c_rho - self.c_phi >= -slack && self.c_phi - self.c_delta >= -slack
    }
}

/// Sums along the cyclic off-diagonals, `S_k = Σ_i ρ_{i, i⊕k}` for `k = 1..d−1`.
fn cyclic_diagonal_sums(x: &ComplexMatrix) -> Vec<Complex64> {
    let d = x.rows();
    (1..d).map(|k| (0..d).map(|i| x[(i, (i + k) % d)]).sum()).collect()
}

/// Evaluates the three coherences using the closed forms for the images:
///
/// * `C_ℓ1(Φ(ρ)) = Σ_k |S_k|`, `C_ℓ2(Φ(ρ)) = (1/d) Σ_k |S_k|²`
/// * `C_ℓ1(Δ(ρ)) = |Σ_{i≠j} ρ_ij|`, `C_ℓ2(Δ(ρ)) = |Σ_{i≠j} ρ_ij|² / (d(d−1))`
pub fn coherence_report(rho: &DensityMatrix, p: NormP) -> CoherenceReport {
    let x = rho.matrix();
    let d = rho.dim();
    let sums = cyclic_diagonal_sums(x);
    let total: Complex64 = off_diagonal(x).sum();
    let (c_phi, c_delta) = match p {
        NormP::L1 => (sums.iter().map(|z| z.norm()).sum(), total.norm()),
        NormP::L2 => {
            let phi = sums.iter().map(|z| z.norm_sqr()).sum::<f64>() / d as f64;
            let delta = if d > 1 {
                total.norm_sqr() / (d * (d - 1)) as f64
            } else {
                0.0
            };
            (phi, delta)
        }
    };
    CoherenceReport {
        p,
        c_rho: coherence(rho, p),
        c_phi,
        c_delta,
    }
}

/// Same three values, computed by applying the channels and measuring the
/// resulting matrices directly.
pub fn coherence_report_by_channels(rho: &DensityMatrix, p: NormP) -> Result<CoherenceReport> {
    let measure = |m: &ComplexMatrix| match p {
        NormP::L1 => l1_of(m),
        NormP::L2 => l2_of(m),
    };
    let phi = crate::channels::apply_uniform(rho.matrix())?;
    let delta = crate::channels::mixed_permutation_apply(rho.matrix())?;
    Ok(CoherenceReport {
        p,
        c_rho: measure(rho.matrix()),
        c_phi: measure(&phi),
        c_delta: measure(&delta),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::apply_uniform;
    use crate::matcore::random::{random_density_with, random_unit_vector, seeded};

    fn plus(d: usize) -> DensityMatrix {
        let s = 1.0 / (d as f64).sqrt();
        DensityMatrix::pure(&vec![Complex64::new(s, 0.0); d]).unwrap()
    }

    #[test]
    fn diagonal_states_are_incoherent() {
        let diag = [0.5, 0.3, 0.2].map(|x| Complex64::new(x, 0.0));
        let rho = DensityMatrix::new(ComplexMatrix::from_diagonal(&diag)).unwrap();
        assert_eq!(l1_coherence(&rho), 0.0);
        assert_eq!(l2_coherence(&rho), 0.0);
        assert!(is_incoherent(&rho, 1e-12));
        assert!(is_incoherent(&DensityMatrix::maximally_mixed(4), 0.0));
        for p in [NormP::L1, NormP::L2] {
            let r = coherence_report(&rho, p);
            assert_eq!((r.c_rho, r.c_phi, r.c_delta), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn plus_state_values() {
        let rho = plus(2);
        assert!((l1_coherence(&rho) - 1.0).abs() < 1e-15);
        assert!((l2_coherence(&rho) - 0.5).abs() < 1e-15);
        assert!(!is_incoherent(&rho, 1e-12));
        for d in 2..8 {
            assert!((l1_coherence(&plus(d)) - (d - 1) as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn l2_of_pure_state_from_purity() {
        let mut rng = seeded(1);
        for d in 2..7 {
            let psi = random_unit_vector(d, &mut rng);
            let rho = DensityMatrix::pure(&psi).unwrap();
            let want = 1.0 - psi.iter().map(|z| z.norm_sqr().powi(2)).sum::<f64>();
            assert!((l2_coherence(&rho) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn incoherent_collapse_to_maximally_mixed() {
        let mut rng = seeded(2);
        for d in 1..7 {
            let rho = random_density_with(d, &mut rng).into_matrix();
            let diag = ComplexMatrix::from_diagonal(&rho.diagonal());
            let out = apply_uniform(&diag).unwrap();
            assert!(out.approx_eq(&ComplexMatrix::identity(d).scale_real(1.0 / d as f64), 1e-12));
        }
    }

    #[test]
    fn closed_forms_match_channel_images() {
        let mut rng = seeded(3);
        for t in 0..200 {
            let d = 3 + t % 4;
            let rho = random_density_with(d, &mut rng);
            for p in [NormP::L1, NormP::L2] {
                let a = coherence_report(&rho, p);
                let b = coherence_report_by_channels(&rho, p).unwrap();
                assert!((a.c_phi - b.c_phi).abs() <= 1e-12);
                assert!((a.c_delta - b.c_delta).abs() <= 1e-12);
                assert!(a.chain_holds(1e-10));
            }
        }
    }

    #[test]
    fn one_dimensional_state() {
        let rho = DensityMatrix::maximally_mixed(1);
        for p in [NormP::L1, NormP::L2] {
            let r = coherence_report(&rho, p);
            assert_eq!((r.c_rho, r.c_phi, r.c_delta), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn norm_selector_parsing() {
        assert_eq!("1".parse::<NormP>().unwrap(), NormP::L1);
        assert_eq!(NormP::from_index(2).unwrap(), NormP::L2);
        assert!(matches!("3".parse::<NormP>(), Err(Error::Domain(_))));
        assert!(NormP::from_index(0).is_err());
        assert_eq!(serde_json::to_string(&NormP::L2).unwrap(), "2");
    }
}
