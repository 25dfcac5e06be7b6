//! Local action of circulant channels on `C^dA ⊗ C^dB`, PPT checks and
//! the entanglement-erasure demo.
//!
//! Composite indices are A-major: `|i p⟩ ↦ i · dB + p`.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::channels::ChannelWeights;
use crate::error::{Error, Result};
use crate::matcore::random::{random_density_with, seeded};
use crate::matcore::{
    cyclic_shift_power, hermitian_spectrum, is_circulant, partial_trace, partial_transpose,
    reduce, BipartiteOperator, ComplexMatrix, CyclicIndex, Subsystem,
};
use crate::tol;

/// Rejection sampling gives up after this many candidates.
pub const MAX_SAMPLING_TRIES: usize = 10_000;

/// `Φ(|i⟩⟨j|) = P^{j⊖i} / d` for 1-based labels `i, j ∈ 1..=d`.
pub fn basis_image(i: usize, j: usize, d: usize) -> Result<ComplexMatrix> {
    let i = CyclicIndex::from_label(d, i)?;
    let j = CyclicIndex::from_label(d, j)?;
    let r = j.minus(i.value() as i64).value();
    Ok(cyclic_shift_power(d, r as i64)?.scale_real(1.0 / d as f64))
}

/// `(Φ_A ⊗ id_B)(X) = (1/dA) Σ_k P^k ⊗ Tr_A[X (P^{−k} ⊗ 1_B)]`.
pub fn apply_a_identity_b(x: &BipartiteOperator) -> Result<BipartiteOperator> {
    let (da, db) = x.dims();
    let id_b = ComplexMatrix::identity(db);
    let mut out = ComplexMatrix::zeros(da * db, da * db);
    for k in 0..da as i64 {
        let right = cyclic_shift_power(da, -k)?.kron(&id_b);
        let prod = BipartiteOperator::new(da, db, x.matrix().matmul(&right)?)?;
        let reduced = partial_trace(&prod, Subsystem::A);
        out.add_scaled(
            Complex64::new(1.0 / da as f64, 0.0),
            &cyclic_shift_power(da, k)?.kron(&reduced),
        );
    }
    BipartiteOperator::new(da, db, out)
}

/// `(Φ_A ⊗ Φ_B)(X) = (1/(dA dB)) Σ_{rA, rB} Tr[X (P^{−rA} ⊗ P^{−rB})] P^{rA} ⊗ P^{rB}`.
pub fn apply_a_and_b(x: &BipartiteOperator) -> Result<BipartiteOperator> {
    let (da, db) = x.dims();
    let scale = 1.0 / (da * db) as f64;
    let mut out = ComplexMatrix::zeros(da * db, da * db);
    for ra in 0..da as i64 {
        let pa = cyclic_shift_power(da, ra)?;
        let pa_inv = cyclic_shift_power(da, -ra)?;
        for rb in 0..db as i64 {
            let pb = cyclic_shift_power(db, rb)?;
            let pb_inv = cyclic_shift_power(db, -rb)?;
            let t = x.matrix().matmul(&pa_inv.kron(&pb_inv))?.trace();
            out.add_scaled(t * scale, &pa.kron(&pb));
        }
    }
    BipartiteOperator::new(da, db, out)
}

/// A channel acting on one tensor factor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum LocalChannel {
    Identity,
    Circulant(ChannelWeights),
}

impl LocalChannel {
    pub fn uniform(d: usize) -> Result<Self> {
        Ok(Self::Circulant(ChannelWeights::uniform(d)?))
    }

    /// Weighted Kraus operators `(λ_k, P^k)`, or `(1, 1_d)` for the identity.
    fn kraus(&self, d: usize) -> Result<Vec<(f64, ComplexMatrix)>> {
        match self {
            Self::Identity => Ok(vec![(1.0, ComplexMatrix::identity(d))]),
            Self::Circulant(w) => {
                if w.dim() != d {
                    return Err(Error::Shape(format!(
                        "weights of length {} on a {d}-dimensional factor",
                        w.dim()
                    )));
                }
                w.lambda()
                    .iter()
                    .enumerate()
                    .filter(|(_, &l)| l != 0.0)
                    .map(|(k, &l)| Ok((l, cyclic_shift_power(d, k as i64)?)))
                    .collect()
            }
        }
    }
}

/// `Σ_{k,l} λ_k μ_l (K_k ⊗ L_l) X (K_k ⊗ L_l)†` by explicit conjugation.
pub fn apply_weighted_local(
    a: &LocalChannel,
    b: &LocalChannel,
    x: &BipartiteOperator,
) -> Result<BipartiteOperator> {
    let (da, db) = x.dims();
    let ka = a.kraus(da)?;
    let kb = b.kraus(db)?;
    let mut out = ComplexMatrix::zeros(da * db, da * db);
    for (la, pa) in &ka {
        for (lb, pb) in &kb {
            let k = pa.kron(pb);
            out.add_scaled(Complex64::new(la * lb, 0.0), &x.matrix().conjugate_by(&k));
        }
    }
    BipartiteOperator::new(da, db, out)
}

/// Block `(i, j)` (a `dB × dB` matrix) depends only on `j ⊖ i`.
pub fn is_block_circulant(x: &BipartiteOperator, tol: f64) -> bool {
    let da = x.d_a();
    (0..da).all(|i| {
        (0..da).all(|j| {
            let r = reduce(j as i64 - i as i64, da);
            x.block(i, j).max_abs_diff(&x.block(0, r)) <= tol
        })
    })
}

/// Every `dB × dB` block is itself circulant.
pub fn has_circulant_blocks(x: &BipartiteOperator, tol: f64) -> bool {
    let da = x.d_a();
    (0..da).all(|i| (0..da).all(|j| is_circulant(&x.block(i, j), tol).unwrap_or(false)))
}

/// Spectrum of a partial transpose.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PptReport {
    pub transposed: Subsystem,
    pub min_eigenvalue: f64,
    pub is_ppt: bool,
    pub spectrum: Vec<f64>,
}

/// PPT test with the transpose on subsystem A.
pub fn ppt_check(x: &BipartiteOperator, tol: f64) -> Result<PptReport> {
    ppt_check_on(x, Subsystem::A, tol)
}

pub fn ppt_check_on(x: &BipartiteOperator, side: Subsystem, tol: f64) -> Result<PptReport> {
    let spectrum = hermitian_spectrum(partial_transpose(x, side).matrix())?;
    let min_eigenvalue = spectrum[0];
    Ok(PptReport {
        transposed: side,
        min_eigenvalue,
        is_ppt: min_eigenvalue >= -tol,
        spectrum,
    })
}

/// For `dA = 2`, `(Φ_A ⊗ id_B)(X)` equals its own partial transpose on A.
pub fn pt_invariance_check(x: &BipartiteOperator) -> Result<bool> {
    if x.d_a() != 2 {
        return Err(Error::Domain(format!(
            "partial-transpose invariance needs dA = 2, got {}",
            x.d_a()
        )));
    }
    let y = apply_a_identity_b(x)?;
    let yt = partial_transpose(&y, Subsystem::A);
    Ok(yt.matrix().max_abs_diff(y.matrix()) <= tol::WEIGHTS)
}

/// Rejection-samples Ginibre states on `C^dA ⊗ C^dB` until the partial
/// transpose has an eigenvalue below `−1e-10`. Returns the state and the
/// number of candidates drawn.
pub fn random_entangled_state<R: Rng + ?Sized>(
    d_a: usize,
    d_b: usize,
    rng: &mut R,
) -> Result<(BipartiteOperator, usize)> {
    if d_a < 2 || d_b < 2 {
        return Err(Error::InvalidDimension(format!(
            "entangled states need dA, dB ≥ 2, got ({d_a}, {d_b})"
        )));
    }
    for tries in 1..=MAX_SAMPLING_TRIES {
        let rho = random_density_with(d_a * d_b, rng).into_matrix();
        let x = BipartiteOperator::new(d_a, d_b, rho)?;
        if ppt_check(&x, tol::STRUCTURAL)?.min_eigenvalue < -tol::STRUCTURAL {
            return Ok((x, tries));
        }
    }
    Err(Error::Sampling {
        what: format!("no NPT state found on {d_a}⊗{d_b}"),
        tries: MAX_SAMPLING_TRIES,
    })
}

/// Input and output of `Φ_A ⊗ id_B` on a sampled entangled state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteDemoReport {
    #[serde(rename = "dA")]
    pub d_a: usize,
    #[serde(rename = "dB")]
    pub d_b: usize,
    pub seed: u64,
    pub tries: usize,
    pub input_min_pt_eigenvalue: f64,
    pub input_is_ppt: bool,
    pub output_min_pt_eigenvalue: f64,
    pub output_is_ppt: bool,
}

pub fn bipartite_demo(d_a: usize, d_b: usize, seed: u64) -> Result<BipartiteDemoReport> {
    let mut rng = seeded(seed);
    let (x, tries) = random_entangled_state(d_a, d_b, &mut rng)?;
    let before = ppt_check(&x, tol::STRUCTURAL)?;
    let after = ppt_check(&apply_a_identity_b(&x)?, tol::STRUCTURAL)?;
    Ok(BipartiteDemoReport {
        d_a,
        d_b,
        seed,
        tries,
        input_min_pt_eigenvalue: before.min_eigenvalue,
        input_is_ppt: before.is_ppt,
        output_min_pt_eigenvalue: after.min_eigenvalue,
        output_is_ppt: after.is_ppt,
    })
}
