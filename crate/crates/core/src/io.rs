//! JSON formats.
//!
//! * matrix: `{"rows": n, "cols": m, "re": [...], "im": [...]}`, row-major
//! * bipartite operator: the matrix record plus `"dA"` and `"dB"`
//! * state tuple: `[{"re": [...], "im": [...]}, ...]`
//! * channel weights: a plain array of reals
//!
//! Reports are flat records; complex scalars appear as `<name>_re` and
//! `<name>_im`, complex vectors as parallel `re` / `im` arrays.

use num_complex::Complex64;
use serde::{de::DeserializeOwned, Deserialize, Serialize};

use crate::bargmann::{CanonicalizationReport, StateTuple};
use crate::channels::{
    alpha_coefficients, channel_spectrum_with_tolerance, choi_pt_spectrum,
    is_entanglement_breaking, predicted_choi_pt_spectrum, ChannelWeights,
};
use crate::error::{Error, Result};
use crate::matcore::{BipartiteOperator, ComplexMatrix};

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("record serializes")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<&ComplexMatrix> for MatrixRecord {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            re: m.data().iter().map(|z| z.re).collect(),
            im: m.data().iter().map(|z| z.im).collect(),
        }
    }
}

impl TryFrom<MatrixRecord> for ComplexMatrix {
    type Error = Error;

    fn try_from(r: MatrixRecord) -> Result<Self> {
        if r.re.len() != r.im.len() {
            return Err(Error::Shape(format!(
                "{} real parts but {} imaginary parts",
                r.re.len(),
                r.im.len()
            )));
        }
        let data = r.re.iter().zip(&r.im).map(|(&a, &b)| Complex64::new(a, b)).collect();
        ComplexMatrix::from_vec(r.rows, r.cols, data)
    }
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    emit(&MatrixRecord::from(m))
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    parse::<MatrixRecord>(text)?.try_into()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BipartiteRecord {
    #[serde(rename = "dA")]
    pub d_a: usize,
    #[serde(rename = "dB")]
    pub d_b: usize,
    #[serde(flatten)]
    pub matrix: MatrixRecord,
}

pub fn bipartite_to_json(x: &BipartiteOperator) -> String {
    emit(&BipartiteRecord {
        d_a: x.d_a(),
        d_b: x.d_b(),
        matrix: x.matrix().into(),
    })
}

pub fn bipartite_from_json(text: &str) -> Result<BipartiteOperator> {
    let r: BipartiteRecord = parse(text)?;
    BipartiteOperator::new(r.d_a, r.d_b, r.matrix.try_into()?)
}

pub fn tuple_to_json(t: &StateTuple) -> String {
    emit(t)
}

pub fn tuple_from_json(text: &str) -> Result<StateTuple> {
    parse(text)
}

pub fn weights_to_json(w: &ChannelWeights) -> String {
    emit(w)
}

/// Strict: the array must already be a probability vector.
pub fn weights_from_json(text: &str) -> Result<ChannelWeights> {
    let raw: Vec<f64> = parse(text)?;
    ChannelWeights::new(raw)
}

/// Flat form of [`CanonicalizationReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalizationRecord {
    pub n: usize,
    pub original_invariant_re: f64,
    pub original_invariant_im: f64,
    pub canonical_invariant_re: f64,
    pub canonical_invariant_im: f64,
    pub common_inner_product_re: f64,
    pub common_inner_product_im: f64,
    pub predicted_common_inner_product_re: f64,
    pub predicted_common_inner_product_im: f64,
    pub consecutive_spread: f64,
    pub consecutive_equal: bool,
    pub arg_match: bool,
    pub modulus_bound_holds: bool,
    pub rescale_ratio: f64,
}

impl From<&CanonicalizationReport> for CanonicalizationRecord {
    fn from(r: &CanonicalizationReport) -> Self {
        Self {
            n: r.n,
            original_invariant_re: r.original_invariant.re,
            original_invariant_im: r.original_invariant.im,
            canonical_invariant_re: r.canonical_invariant.re,
            canonical_invariant_im: r.canonical_invariant.im,
            common_inner_product_re: r.common_inner_product.re,
            common_inner_product_im: r.common_inner_product.im,
            predicted_common_inner_product_re: r.predicted_common_inner_product.re,
            predicted_common_inner_product_im: r.predicted_common_inner_product.im,
            consecutive_spread: r.consecutive_spread,
            consecutive_equal: r.consecutive_equal,
            arg_match: r.arg_match,
            modulus_bound_holds: r.modulus_bound_holds,
            rescale_ratio: r.rescale_ratio,
        }
    }
}

impl From<CanonicalizationRecord> for CanonicalizationReport {
    fn from(r: CanonicalizationRecord) -> Self {
        Self {
            n: r.n,
            original_invariant: Complex64::new(r.original_invariant_re, r.original_invariant_im),
            canonical_invariant: Complex64::new(r.canonical_invariant_re, r.canonical_invariant_im),
            common_inner_product: Complex64::new(r.common_inner_product_re, r.common_inner_product_im),
            predicted_common_inner_product: Complex64::new(
                r.predicted_common_inner_product_re,
                r.predicted_common_inner_product_im,
            ),
            consecutive_spread: r.consecutive_spread,
            consecutive_equal: r.consecutive_equal,
            arg_match: r.arg_match,
            modulus_bound_holds: r.modulus_bound_holds,
            rescale_ratio: r.rescale_ratio,
        }
    }
}

/// Report plus the canonical tuple, as emitted by `bargmann canon`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalizationOutput {
    pub report: CanonicalizationRecord,
    pub canonical_tuple: StateTuple,
}

pub fn canonicalization_to_json(report: &CanonicalizationReport, tuple: &StateTuple) -> String {
    emit(&CanonicalizationOutput {
        report: report.into(),
        canonical_tuple: tuple.clone(),
    })
}

pub fn canonicalization_from_json(text: &str) -> Result<(CanonicalizationReport, StateTuple)> {
    let out: CanonicalizationOutput = parse(text)?;
    Ok((out.report.into(), out.canonical_tuple))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexArrays {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl ComplexArrays {
    pub fn from_slice(z: &[Complex64]) -> Self {
        Self {
            re: z.iter().map(|w| w.re).collect(),
            im: z.iter().map(|w| w.im).collect(),
        }
    }

    pub fn to_vec(&self) -> Result<Vec<Complex64>> {
        if self.re.len() != self.im.len() {
            return Err(Error::Shape("re and im arrays differ in length".into()));
        }
        Ok(self.re.iter().zip(&self.im).map(|(&a, &b)| Complex64::new(a, b)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChannelSpectrumRecord {
    pub eigenvalues: ComplexArrays,
    pub multiplicity_of_one: Option<usize>,
    pub multiplicity_of_zero: Option<usize>,
}

/// Spectral summary of one channel, as emitted by `channel spectrum`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub dim: usize,
    pub weights: Vec<f64>,
    pub channel_spectrum: ChannelSpectrumRecord,
    pub alpha: ComplexArrays,
    pub choi_pt_spectrum: Vec<f64>,
    pub predicted_choi_pt_spectrum: Vec<f64>,
    pub is_entanglement_breaking: bool,
}

impl SpectrumRecord {
    /// `tol` classifies eigenvalues as 0 or 1 and decides the
    /// entanglement-breaking verdict from `max_{μ≠0} |α_μ|`.
    pub fn compute(w: &ChannelWeights, tol: f64) -> Result<Self> {
        let spec = channel_spectrum_with_tolerance(w, tol)?;
        Ok(Self {
            dim: w.dim(),
            weights: w.lambda().to_vec(),
            channel_spectrum: ChannelSpectrumRecord {
                eigenvalues: ComplexArrays::from_slice(&spec.eigenvalues),
                multiplicity_of_one: spec.multiplicity_of_one,
                multiplicity_of_zero: spec.multiplicity_of_zero,
            },
            alpha: ComplexArrays::from_slice(&alpha_coefficients(w).alpha),
            choi_pt_spectrum: choi_pt_spectrum(w)?,
            predicted_choi_pt_spectrum: predicted_choi_pt_spectrum(w),
            is_entanglement_breaking: is_entanglement_breaking(w, tol),
        })
    }

    pub fn to_json(&self) -> String {
        emit(self)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        parse(text)
    }
}
