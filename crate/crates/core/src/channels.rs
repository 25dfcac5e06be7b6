//! The circulant channel family `Φ_λ(X) = Σ_k λ_k P^k X P^{−k}`.
//!
//! Two independent evaluation routes are provided: [`apply_kraus`] conjugates
//! by the permutation matrices, [`apply_closed_form`] evaluates the trace
//! formula `Φ_λ(X)[i, j] = Tr(P^{−j} Λ P^{i} X)` with `Λ = diag(λ)`. For
//! uniform weights the image is the circulant matrix with coefficients
//! `c_k(X) = Tr(P^{−k} X) / d`, see [`apply_uniform`].
//!
//! The rest of the module covers the natural representation
//! `K = Σ_k λ_k P^k ⊗ P^k`, the Choi matrix
//! `J = Σ_k λ_k vec(P^k) vec(P^k)†`, its partial-transpose spectrum through
//! the Fourier coefficients `α_μ = (1/d) Σ_k λ_k ω^{kμ}`, and the
//! mixed-permutation channel `Δ` used as a coarser reference.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{
    circulant_from_coeffs, cyclic_shift_power, dft_matrix, eigenvalues, hermitian_spectrum,
    partial_transpose, reduce, root_of_unity, BipartiteOperator, CirculantCoefficients,
    ComplexMatrix, Subsystem,
};
use crate::tol;

/// Probability vector `(λ_0, …, λ_{d−1})` selecting the channel `Φ_λ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct ChannelWeights {
    lambda: Vec<f64>,
}

impl ChannelWeights {
    /// Accepts entries that are nonnegative and sum to one within `1e-12`,
    /// then clamps tiny negatives to zero and renormalizes.
    pub fn new(lambda: Vec<f64>) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::InvalidDimension("empty weight vector".into()));
        }
        if let Some(bad) = lambda.iter().find(|x| !x.is_finite()) {
            return Err(Error::Domain(format!("non-finite weight {bad}")));
        }
        if let Some((k, &x)) = lambda.iter().enumerate().find(|(_, &x)| x < -tol::WEIGHTS) {
            return Err(Error::Domain(format!("weight λ_{k} = {x} is negative")));
        }
        let sum: f64 = lambda.iter().sum();
        if (sum - 1.0).abs() > tol::WEIGHTS {
            return Err(Error::Domain(format!("weights sum to {sum}, expected 1")));
        }
        Ok(Self::renormalized(lambda))
    }

    /// Normalizes arbitrary nonnegative weights with a positive sum.
    pub fn from_unnormalized(raw: Vec<f64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidDimension("empty weight vector".into()));
        }
        if raw.iter().any(|x| !x.is_finite() || *x < 0.0) {
            return Err(Error::Domain("weights must be finite and nonnegative".into()));
        }
        let sum: f64 = raw.iter().sum();
        if sum <= 0.0 {
            return Err(Error::Domain("weights sum to zero".into()));
        }
        Ok(Self::renormalized(raw))
    }

    fn renormalized(raw: Vec<f64>) -> Self {
        let clamped: Vec<f64> = raw.into_iter().map(|x| x.max(0.0)).collect();
        let sum: f64 = clamped.iter().sum();
        Self {
            lambda: clamped.into_iter().map(|x| x / sum).collect(),
        }
    }

    /// `λ_k = 1/d`.
    pub fn uniform(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension("dimension must be at least 1".into()));
        }
        Ok(Self {
            lambda: vec![1.0 / d as f64; d],
        })
    }

    /// `λ = (1, 0, …, 0)`, the identity channel.
    pub fn identity(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDimension("dimension must be at least 1".into()));
        }
        let mut lambda = vec![0.0; d];
        lambda[0] = 1.0;
        Ok(Self { lambda })
    }

    pub fn dim(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[f64] {
        &self.lambda
    }

    pub fn is_uniform(&self, tol: f64) -> bool {
        let u = 1.0 / self.dim() as f64;
        self.lambda.iter().all(|x| (x - u).abs() <= tol)
    }

    /// `λ_k = λ_{d−k}` for all `k`, the condition for `Φ_λ` to be self-adjoint.
    pub fn is_reflection_symmetric(&self, tol: f64) -> bool {
        let d = self.dim();
        (1..d).all(|k| (self.lambda[k] - self.lambda[d - k]).abs() <= tol)
    }

    fn check_operand(&self, x: &ComplexMatrix) -> Result<usize> {
        let d = x.square_dim()?;
        if d != self.dim() {
            return Err(Error::Shape(format!(
                "weights have length {} but the operand is {d}x{d}",
                self.dim()
            )));
        }
        Ok(d)
    }
}

impl TryFrom<Vec<f64>> for ChannelWeights {
    type Error = Error;

    fn try_from(v: Vec<f64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ChannelWeights> for Vec<f64> {
    fn from(w: ChannelWeights) -> Self {
        w.lambda
    }
}

/// `Σ_k λ_k P^k X P^{−k}`, by explicit conjugation with the shift powers.
pub fn apply_kraus(w: &ChannelWeights, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = w.check_operand(x)?;
    let mut out = ComplexMatrix::zeros(d, d);
    for (k, &l) in w.lambda().iter().enumerate() {
        if l == 0.0 {
            continue;
        }
        let p = cyclic_shift_power(d, k as i64)?;
        out.add_scaled(Complex64::new(l, 0.0), &x.conjugate_by(&p));
    }
    Ok(out)
}

/// `Φ_λ(X)[i, j] = Tr(P^{−j} Λ P^{i} X)` (0-based `i`, `j`).
///
/// `(P^{−j} Λ P^{i})[a, b]` is `λ_{a⊖j}` when `b = a ⊖ j ⊕ i` and zero
/// otherwise, so each trace is a single sum over `a`.
pub fn apply_closed_form(w: &ChannelWeights, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = w.check_operand(x)?;
    let lambda = w.lambda();
    Ok(ComplexMatrix::from_fn(d, d, |i, j| {
        (0..d)
            .map(|a| {
                let m = reduce(a as i64 - j as i64, d);
                let b = (m + i) % d;
                x[(b, a)] * lambda[m]
            })
            .sum()
    }))
}

/// Hilbert–Schmidt adjoint `Σ_k λ_k P^{−k} X P^{k}`.
pub fn apply_adjoint(w: &ChannelWeights, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = w.check_operand(x)?;
    let mut out = ComplexMatrix::zeros(d, d);
    for (k, &l) in w.lambda().iter().enumerate() {
        if l == 0.0 {
            continue;
        }
        let p = cyclic_shift_power(d, -(k as i64))?;
        out.add_scaled(Complex64::new(l, 0.0), &x.conjugate_by(&p));
    }
    Ok(out)
}

/// `c_k(X) = Tr(P^{−k} X) / d = (1/d) Σ_i X[i, i⊕k]`.
pub fn circulant_coeffs_of_image(x: &ComplexMatrix) -> Result<CirculantCoefficients> {
    let d = x.square_dim()?;
    let scale = 1.0 / d as f64;
    let c = (0..d)
        .map(|k| (0..d).map(|i| x[(i, (i + k) % d)]).sum::<Complex64>() * scale)
        .collect();
    CirculantCoefficients::new(c)
}

/// The uniform channel `Φ`, whose image is always circulant.
pub fn apply_uniform(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(circulant_from_coeffs(&circulant_coeffs_of_image(x)?))
}

/// `K(Φ_λ) = Σ_k λ_k P^k ⊗ P^k`, so that `K vec(X) = vec(Φ_λ(X))`.
pub fn natural_representation(w: &ChannelWeights) -> Result<ComplexMatrix> {
    let d = w.dim();
    let mut k_mat = ComplexMatrix::zeros(d * d, d * d);
    for (k, &l) in w.lambda().iter().enumerate() {
        let p = cyclic_shift_power(d, k as i64)?;
        k_mat.add_scaled(Complex64::new(l, 0.0), &p.kron(&p));
    }
    Ok(k_mat)
}

/// Eigenvalues of the natural representation.
///
/// For uniform weights the eigenvalues are classified into ones and zeros;
/// for other weights the multiplicities are left as `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelSpectrumReport {
    pub eigenvalues: Vec<Complex64>,
    pub multiplicity_of_one: Option<usize>,
    pub multiplicity_of_zero: Option<usize>,
}

pub fn channel_spectrum(w: &ChannelWeights) -> Result<ChannelSpectrumReport> {
    channel_spectrum_with_tolerance(w, tol::SPECTRAL)
}

pub fn channel_spectrum_with_tolerance(w: &ChannelWeights, tol: f64) -> Result<ChannelSpectrumReport> {
    let ev = eigenvalues(&natural_representation(w)?)?;
    let (ones, zeros) = if w.is_uniform(tol::WEIGHTS) {
        let one = Complex64::new(1.0, 0.0);
        (
            Some(ev.iter().filter(|z| (*z - one).norm() <= tol).count()),
            Some(ev.iter().filter(|z| z.norm() <= tol).count()),
        )
    } else {
        (None, None)
    };
    Ok(ChannelSpectrumReport {
        eigenvalues: ev,
        multiplicity_of_one: ones,
        multiplicity_of_zero: zeros,
    })
}

/// Choi matrix `J(Φ_λ) = Σ_k λ_k vec(P^k) vec(P^k)†` on `C^d ⊗ C^d`.
pub fn choi(w: &ChannelWeights) -> Result<BipartiteOperator> {
    let d = w.dim();
    let mut j = ComplexMatrix::zeros(d * d, d * d);
    for (k, &l) in w.lambda().iter().enumerate() {
        let v = cyclic_shift_power(d, k as i64)?.vec();
        j.add_scaled(Complex64::new(l, 0.0), &ComplexMatrix::outer(&v, &v));
    }
    BipartiteOperator::new(d, d, j)
}

/// Fourier coefficients `α_μ = (1/d) Σ_k λ_k ω^{kμ}` of the weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaCoefficients {
    pub alpha: Vec<Complex64>,
}

impl AlphaCoefficients {
    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    /// `max_{μ≠0} |α_μ|`; zero when `d = 1`.
    pub fn max_nontrivial_modulus(&self) -> f64 {
        self.alpha.iter().skip(1).map(|a| a.norm()).fold(0.0, f64::max)
    }
}

pub fn alpha_coefficients(w: &ChannelWeights) -> AlphaCoefficients {
    let d = w.dim();
    let scale = 1.0 / d as f64;
    let alpha = (0..d)
        .map(|mu| {
            w.lambda()
                .iter()
                .enumerate()
                .map(|(k, &l)| root_of_unity((k * mu) as i64, d) * l)
                .sum::<Complex64>()
                * scale
        })
        .collect();
    AlphaCoefficients { alpha }
}

/// Eigenvalues of `J(Φ_λ)^{Γ_B}` from a direct eigensolve, ascending.
pub fn choi_pt_spectrum(w: &ChannelWeights) -> Result<Vec<f64>> {
    let j = choi(w)?;
    hermitian_spectrum(partial_transpose(&j, Subsystem::B).matrix())
}

/// Eigenvalues of `J(Φ_λ)^{Γ_B}` predicted from the `α_μ`, ascending.
///
/// In the Fourier basis the partial transpose is `d Σ_{i,j} α_{i−j} |ij⟩⟨ji|`:
/// the `d` states `|ii⟩` carry `d α_0 = 1`, and each unordered pair `{i, j}`
/// with `i ≠ j` spans a 2×2 block with eigenvalues `±d |α_{i−j}|`. Counted
/// per `μ ≠ 0` that is `d/2` copies of each sign, `d²` eigenvalues in total.
/// Dividing by `d` gives the spectrum of the unit-trace Choi state `J/d`.
pub fn predicted_choi_pt_spectrum(w: &ChannelWeights) -> Vec<f64> {
    let alpha = alpha_coefficients(w);
    let d = w.dim();
    let scale = d as f64;
    let mut ev = Vec::with_capacity(d * d);
    ev.extend(std::iter::repeat_n(scale * alpha.alpha[0].re, d));
    for i in 0..d {
        for j in i + 1..d {
            let m = scale * alpha.alpha[reduce(i as i64 - j as i64, d)].norm();
            ev.push(m);
            ev.push(-m);
        }
    }
    ev.sort_by(f64::total_cmp);
    ev
}

/// `Φ_λ` is entanglement-breaking iff every `α_μ` with `μ ≠ 0` vanishes,
/// i.e. iff the weights are uniform.
pub fn is_entanglement_breaking(w: &ChannelWeights, tol: f64) -> bool {
    alpha_coefficients(w).max_nontrivial_modulus() <= tol
}

/// Local unitary `F ⊗ F̄` and the product-diagonal core `Σ_i |ii⟩⟨ii|` with
/// `(F ⊗ F̄) core (F ⊗ F̄)† = J(Φ)` for the uniform channel.
pub fn choi_separable_form(d: usize) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let f = dft_matrix(d)?;
    let local = f.kron(&f.conj());
    let mut core = ComplexMatrix::zeros(d * d, d * d);
    for i in 0..d {
        core[(i * d + i, i * d + i)] = Complex64::new(1.0, 0.0);
    }
    Ok((local, core))
}

/// The mixed-permutation channel `Δ(X) = (1/d!) Σ_{π∈S_d} P_π X P_π†`.
///
/// Evaluated in closed form: the image has `Tr(X)/d` on the diagonal and
/// `Σ_{i≠j} X_ij / (d(d−1))` everywhere else.
pub fn mixed_permutation_apply(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let d = x.square_dim()?;
    if d == 1 {
        return Ok(x.clone());
    }
    let diag = x.trace() / d as f64;
    let off: Complex64 = (0..d)
        .flat_map(|i| (0..d).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| x[(i, j)])
        .sum::<Complex64>()
        / (d * (d - 1)) as f64;
    Ok(ComplexMatrix::from_fn(d, d, |i, j| if i == j { diag } else { off }))
}
