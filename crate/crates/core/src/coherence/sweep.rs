//! Coherence of the pure qutrit family `example_state(θ, φ)` along a θ grid.
//!
//! Primary values come from the Bloch-vector closed forms; every row is
//! cross-checked against [`coherence_report`](super::coherence_report).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::gell_mann::{bloch_from_qutrit, example_state, GellMannVector};
use super::{coherence_report, NormP};
use crate::error::{Error, Result};
use crate::matcore::{ComplexMatrix, DensityMatrix};
use crate::tol;

const TWO_OVER_SQRT3: f64 = 1.154_700_538_379_251_5;

/// Closed-form coherences of a qutrit from its Gell-Mann coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormCoherence {
    pub c_rho: f64,
    pub c_phi: f64,
    pub c_delta: f64,
}

impl ClosedFormCoherence {
    pub fn from_bloch(r: &GellMannVector, p: NormP) -> Self {
        let (s, t) = (r.s(), r.t());
        match p {
            NormP::L1 => Self {
                c_rho: TWO_OVER_SQRT3
                    * (r.r(1).hypot(r.r(2)) + r.r(4).hypot(r.r(5)) + r.r(6).hypot(r.r(7))),
                c_phi: TWO_OVER_SQRT3 * s.hypot(t),
                c_delta: TWO_OVER_SQRT3 * s.abs(),
            },
            NormP::L2 => {
                let off: f64 = [1, 2, 4, 5, 6, 7].iter().map(|&a| r.r(a).powi(2)).sum();
                Self {
                    c_rho: 2.0 / 3.0 * off,
                    c_phi: 2.0 / 9.0 * (s * s + t * t),
                    c_delta: 2.0 / 9.0 * s * s,
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta: f64,
    pub c_rho: f64,
    pub c_phi: f64,
    pub c_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub phi: f64,
    pub p: NormP,
    pub rows: Vec<SweepRow>,
    /// Largest |closed form − generic| over all rows and columns.
    pub max_deviation: f64,
}

impl SweepTable {
    pub fn chain_holds(&self, slack: f64) -> bool {
        self.rows
            .iter()
            .all(|r| r.c_rho - r.c_phi >= -slack && r.c_phi - r.c_delta >= -slack)
    }
}

/// `steps` evenly spaced points on `[0, π]`, both ends included.
pub fn theta_grid(steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::Domain(format!("a sweep needs at least 2 steps, got {steps}")));
    }
    let h = std::f64::consts::PI / (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| if k == steps - 1 { std::f64::consts::PI } else { k as f64 * h })
        .collect())
}

pub fn coherence_sweep(phi: f64, thetas: &[f64], p: NormP) -> Result<SweepTable> {
    if thetas.is_empty() {
        return Err(Error::Domain("empty θ grid".into()));
    }
    if !phi.is_finite() || thetas.iter().any(|t| !t.is_finite()) {
        return Err(Error::Domain("sweep angles must be finite".into()));
    }
    let mut rows = Vec::with_capacity(thetas.len());
    let mut max_deviation = 0.0f64;
    for &theta in thetas {
        let psi = example_state(theta, phi);
        let m = ComplexMatrix::outer(&psi, &psi);
        let closed = ClosedFormCoherence::from_bloch(&bloch_from_qutrit(&m)?, p);
        let generic = coherence_report(&DensityMatrix::with_tolerance(m, tol::STRUCTURAL)?, p);
        max_deviation = max_deviation
            .max((closed.c_rho - generic.c_rho).abs())
            .max((closed.c_phi - generic.c_phi).abs())
            .max((closed.c_delta - generic.c_delta).abs());
        rows.push(SweepRow {
            theta,
            c_rho: closed.c_rho,
            c_phi: closed.c_phi,
            c_delta: closed.c_delta,
        });
    }
    Ok(SweepTable {
        phi,
        p,
        rows,
        max_deviation,
    })
}

/// Shortest round-trip text, or `digits` significant digits when given.
fn format_number(x: f64, digits: Option<usize>) -> String {
    match digits {
        None => format!("{x}"),
        Some(n) => {
            let rounded: f64 = format!("{:.*e}", n.max(1) - 1, x)
                .parse()
                .expect("formatted float parses");
            format!("{rounded}")
        }
    }
}

/// CSV with header `theta,c_rho,c_phi,c_delta`.
pub fn write_csv(rows: &[SweepRow], digits: Option<usize>) -> String {
    let mut out = String::from("theta,c_rho,c_phi,c_delta\n");
    for r in rows {
        let cells = [r.theta, r.c_rho, r.c_phi, r.c_delta].map(|x| format_number(x, digits));
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn write_json(table: &SweepTable) -> String {
    serde_json::to_string_pretty(table).expect("sweep table serializes")
}
