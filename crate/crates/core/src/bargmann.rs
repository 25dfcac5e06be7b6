//! Gram matrices and Bargmann invariants `Tr(ψ_1 ψ_2 ⋯ ψ_n)` of pure-state
//! tuples, and canonicalization to a tuple whose Gram matrix is circulant.
//!
//! Canonicalization runs in two steps. Phase alignment multiplies each vector
//! by `e^{iα_k}` so that every consecutive inner product has argument `θ/n`,
//! `θ = arg Tr(ψ_1 ⋯ ψ_n) ∈ [0, 2π)`. The uniform circulant channel then maps
//! the Gram matrix to a circulant one, which is factored back into vectors.
//! The resulting tuple has the same invariant argument and, by AM-GM, a
//! modulus at least as large.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::channels::apply_uniform;
use crate::error::{Error, Result};
use crate::matcore::{hermitian_eigh, hermitian_spectrum, ComplexMatrix};
use crate::tol;

/// Unit vectors recovered from a Gram matrix must have norm within this of 1
/// before they are renormalized.
const RECOVERED_NORM: f64 = 1e-8;
/// Invariants at or below this modulus count as zero.
const ZERO_INVARIANT: f64 = 1e-12;
/// Argument and equal-consecutive checks in the report.
const ARG_TOL: f64 = 1e-8;
const MODULUS_SLACK: f64 = 1e-10;

fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// `n ≥ 1` unit vectors in a common `C^d`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<JsonVector>", into = "Vec<JsonVector>")]
pub struct StateTuple {
    vectors: Vec<Vec<Complex64>>,
}

#[derive(Serialize, Deserialize)]
struct JsonVector {
    re: Vec<f64>,
    im: Vec<f64>,
}

impl TryFrom<Vec<JsonVector>> for StateTuple {
    type Error = Error;

    fn try_from(v: Vec<JsonVector>) -> Result<Self> {
        let vectors = v
            .into_iter()
            .enumerate()
            .map(|(k, jv)| {
                if jv.re.len() != jv.im.len() {
                    return Err(Error::Shape(format!(
                        "vector {}: {} real parts but {} imaginary parts",
                        k + 1,
                        jv.re.len(),
                        jv.im.len()
                    )));
                }
                Ok(jv.re.iter().zip(&jv.im).map(|(&a, &b)| Complex64::new(a, b)).collect())
            })
            .collect::<Result<_>>()?;
        Self::new(vectors)
    }
}

impl From<StateTuple> for Vec<JsonVector> {
    fn from(t: StateTuple) -> Self {
        t.vectors
            .into_iter()
            .map(|v| JsonVector {
                re: v.iter().map(|z| z.re).collect(),
                im: v.iter().map(|z| z.im).collect(),
            })
            .collect()
    }
}

impl StateTuple {
    pub fn new(vectors: Vec<Vec<Complex64>>) -> Result<Self> {
        Self::with_tolerance(vectors, tol::UNIT_NORM)
    }

    pub fn with_tolerance(vectors: Vec<Vec<Complex64>>, norm_tol: f64) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::InvalidDimension("a tuple needs at least one vector".into()));
        };
        let d = first.len();
        if d == 0 {
            return Err(Error::InvalidDimension("vectors must be nonempty".into()));
        }
        for (k, v) in vectors.iter().enumerate() {
            if v.len() != d {
                return Err(Error::Shape(format!(
                    "vector {} has length {}, expected {d}",
                    k + 1,
                    v.len()
                )));
            }
            if v.iter().any(|z| !z.is_finite()) {
                return Err(Error::Domain(format!("vector {} has non-finite entries", k + 1)));
            }
            let norm = inner(v, v).re.sqrt();
            if (norm - 1.0).abs() > norm_tol {
                return Err(Error::Domain(format!(
                    "vector {} has norm {norm}, expected 1",
                    k + 1
                )));
            }
        }
        Ok(Self { vectors })
    }

    /// Normalizes each vector first; zero vectors are rejected.
    pub fn normalized(vectors: Vec<Vec<Complex64>>) -> Result<Self> {
        let vectors = vectors
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                let n = inner(&v, &v).re.sqrt();
                if n <= tol::VANISHING || !n.is_finite() {
                    return Err(Error::Domain(format!("vector {} cannot be normalized", k + 1)));
                }
                Ok(v.into_iter().map(|z| z / n).collect())
            })
            .collect::<Result<_>>()?;
        Self::new(vectors)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vectors[0].len()
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    /// `⟨ψ_k|ψ_{k⊕1}⟩` for `k = 0..n`.
    pub fn consecutive_inner_products(&self) -> Vec<Complex64> {
        let n = self.len();
        (0..n)
            .map(|k| inner(&self.vectors[k], &self.vectors[(k + 1) % n]))
            .collect()
    }

    /// `(Uψ_1, …, Uψ_n)`.
    pub fn transformed(&self, u: &ComplexMatrix) -> Result<Self> {
        let vectors = self
            .vectors
            .iter()
            .map(|v| u.apply(v))
            .collect::<Result<_>>()?;
        Self::with_tolerance(vectors, 1e-10)
    }
}

/// Hermitian, positive semidefinite, unit diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct GramMatrix(ComplexMatrix);

impl GramMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        let n = m.square_dim()?;
        let defect = m.hermiticity_defect();
        if defect > tol::UNIT_NORM {
            return Err(Error::Domain(format!("Gram matrix is not Hermitian (defect {defect:.3e})")));
        }
        for i in 0..n {
            if (m[(i, i)] - Complex64::new(1.0, 0.0)).norm() > tol::UNIT_NORM {
                return Err(Error::Domain(format!(
                    "Gram diagonal entry {} is {}, expected 1",
                    i + 1,
                    m[(i, i)]
                )));
            }
        }
        let min = hermitian_spectrum(&m)?[0];
        if min < -tol::RANK {
            return Err(Error::Domain(format!(
                "Gram matrix is not positive semidefinite (min eigenvalue {min:.3e})"
            )));
        }
        Ok(Self(m))
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

/// `G[i, j] = ⟨ψ_i|ψ_j⟩`.
pub fn gram(psi: &StateTuple) -> GramMatrix {
    let n = psi.len();
    let v = psi.vectors();
    let mut g = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        g[(i, i)] = Complex64::new(1.0, 0.0);
        for j in i + 1..n {
            let z = inner(&v[i], &v[j]);
            g[(i, j)] = z;
            g[(j, i)] = z.conj();
        }
    }
    GramMatrix(g)
}

/// `Π_k ⟨ψ_k|ψ_{k⊕1}⟩`.
pub fn bargmann_invariant(psi: &StateTuple) -> Complex64 {
    psi.consecutive_inner_products().into_iter().product()
}

/// `Tr(ρ_1 ρ_2 ⋯ ρ_n)` with `ρ_k = |ψ_k⟩⟨ψ_k|`, by explicit matrix products.
pub fn bargmann_invariant_by_projectors(psi: &StateTuple) -> Complex64 {
    let mut acc = ComplexMatrix::identity(psi.dim());
    for v in psi.vectors() {
        acc = &acc * &ComplexMatrix::outer(v, v);
    }
    acc.trace()
}

/// `Π_k G[k, k⊕1]`.
pub fn bargmann_from_gram(g: &GramMatrix) -> Complex64 {
    let n = g.dim();
    (0..n).map(|k| g.matrix()[(k, (k + 1) % n)]).product()
}

/// Argument mapped to `[0, 2π)`.
fn arg_2pi(z: Complex64) -> f64 {
    let a = z.arg();
    if a < 0.0 {
        (a + TAU).min(TAU.next_down())
    } else {
        a
    }
}

fn require_nonzero(psi: &StateTuple) -> Result<(Complex64, Vec<Complex64>)> {
    let products = psi.consecutive_inner_products();
    let z: Complex64 = products.iter().product();
    if z.norm() <= ZERO_INVARIANT {
        let n = psi.len();
        let (k, _) = products
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .expect("tuple is nonempty");
        return Err(Error::Degenerate(format!(
            "Bargmann invariant vanishes: ⟨ψ_{}|ψ_{}⟩ = {:.3e}",
            k + 1,
            (k + 1) % n + 1,
            products[k].norm()
        )));
    }
    Ok((z, products))
}

/// Multiplies `ψ_k` by `e^{iα_k}`, `α_0 = 0`, `α_{k+1} = α_k + θ/n − θ_k`,
/// where `θ_k = arg⟨ψ_k|ψ_{k⊕1}⟩` and `θ` is the argument of the invariant,
/// both in `[0, 2π)`.
pub fn phase_align(psi: &StateTuple) -> Result<StateTuple> {
    let (z, products) = require_nonzero(psi)?;
    let n = psi.len();
    let theta = arg_2pi(z);
    let mut alpha = 0.0;
    let mut vectors = Vec::with_capacity(n);
    for (k, v) in psi.vectors().iter().enumerate() {
        let phase = Complex64::from_polar(1.0, alpha);
        vectors.push(v.iter().map(|x| x * phase).collect());
        alpha += theta / n as f64 - arg_2pi(products[k]);
    }
    Ok(StateTuple { vectors })
}

/// `Φ(G)` for the uniform circulant channel on `C^n`.
pub fn circulantize_gram(g: &GramMatrix) -> Result<GramMatrix> {
    let mut m = apply_uniform(g.matrix())?;
    let n = m.rows();
    // the diagonal is the mean of ones; pin it exactly
    for i in 0..n {
        m[(i, i)] = Complex64::new(1.0, 0.0);
    }
    GramMatrix::new(m)
}

/// Unit vectors in `C^r`, `r` the numerical rank, whose Gram matrix is `G`.
///
/// With `G = U Λ U†`, the vectors are the columns of `√Λ U†` restricted to
/// eigenvalues above `1e-10`.
pub fn vectors_from_gram(g: &GramMatrix) -> Result<StateTuple> {
    let n = g.dim();
    let (vals, u) = hermitian_eigh(g.matrix())?;
    let keep: Vec<usize> = (0..n).filter(|&i| vals[i] > tol::RANK).collect();
    if keep.is_empty() {
        return Err(Error::Domain("Gram matrix has rank zero".into()));
    }
    let mut vectors = Vec::with_capacity(n);
    for j in 0..n {
        let v: Vec<Complex64> = keep
            .iter()
            .map(|&i| u[(j, i)].conj() * vals[i].sqrt())
            .collect();
        let norm = inner(&v, &v).re.sqrt();
        if (norm - 1.0).abs() > RECOVERED_NORM {
            return Err(Error::Domain(format!(
                "recovered vector {} has norm {norm}",
                j + 1
            )));
        }
        vectors.push(v.into_iter().map(|z| z / norm).collect());
    }
    StateTuple::new(vectors)
}

/// Outcome of [`canonicalize`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalizationReport {
    pub n: usize,
    pub original_invariant: Complex64,
    pub canonical_invariant: Complex64,
    /// `⟨ψ̃_1|ψ̃_2⟩` of the canonical tuple.
    pub common_inner_product: Complex64,
    /// `((1/n) Σ_k r_k) e^{iθ/n}` with `r_k = |⟨ψ_k|ψ_{k⊕1}⟩|`.
    pub predicted_common_inner_product: Complex64,
    /// Largest `|⟨ψ̃_k|ψ̃_{k⊕1}⟩ − ⟨ψ̃_1|ψ̃_2⟩|`.
    pub consecutive_spread: f64,
    pub consecutive_equal: bool,
    pub arg_match: bool,
    pub modulus_bound_holds: bool,
    /// `Π r_k / ((1/n) Σ r_k)^n`.
    pub rescale_ratio: f64,
}

fn arg_distance(a: Complex64, b: Complex64) -> f64 {
    let d = (a.arg() - b.arg()).rem_euclid(TAU);
    d.min(TAU - d)
}

/// `(Π r_k, (1/n) Σ r_k)`.
fn moduli_stats(products: &[Complex64]) -> (f64, f64) {
    let prod = products.iter().map(|z| z.norm()).product();
    let mean = products.iter().map(|z| z.norm()).sum::<f64>() / products.len() as f64;
    (prod, mean)
}

pub fn canonicalize(psi: &StateTuple) -> Result<(StateTuple, CanonicalizationReport)> {
    let (z, products) = require_nonzero(psi)?;
    let n = psi.len();
    let aligned = phase_align(psi)?;
    let circ = circulantize_gram(&gram(&aligned))?;
    let canon = vectors_from_gram(&circ)?;

    let canon_products = canon.consecutive_inner_products();
    let z_canon: Complex64 = canon_products.iter().product();
    let common = canon_products[0];
    let spread = canon_products
        .iter()
        .map(|w| (w - common).norm())
        .fold(0.0, f64::max);
    let (prod, mean) = moduli_stats(&products);
    let predicted = Complex64::from_polar(mean, arg_2pi(z) / n as f64);

    let report = CanonicalizationReport {
        n,
        original_invariant: z,
        canonical_invariant: z_canon,
        common_inner_product: common,
        predicted_common_inner_product: predicted,
        consecutive_spread: spread,
        consecutive_equal: spread <= ARG_TOL,
        arg_match: arg_distance(z, z_canon) <= ARG_TOL,
        modulus_bound_holds: z.norm() <= z_canon.norm() + MODULUS_SLACK,
        rescale_ratio: prod / mean.powi(n as i32),
    };
    Ok((canon, report))
}

/// `Π r_k / ((1/n) Σ r_k)^n ∈ (0, 1]`, the factor taking the canonical
/// invariant of `psi` back to `z = Tr(ψ_1 ⋯ ψ_n)`.
///
/// `z` must be the invariant of `psi` (checked to `1e-10`). The zero
/// invariant needs no rescaling and is rejected here.
pub fn rescale_to_set_membership(z: Complex64, psi: &StateTuple) -> Result<f64> {
    let (actual, products) = require_nonzero(psi)?;
    if (z - actual).norm() > 1e-10 * (1.0 + actual.norm()) {
        return Err(Error::Domain(format!(
            "{z} is not the invariant of the tuple ({actual})"
        )));
    }
    let (prod, mean) = moduli_stats(&products);
    Ok(prod / mean.powi(psi.len() as i32))
}
