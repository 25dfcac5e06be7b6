//! Circulant quantum channels.
//!
//! The channel family `Φ_λ(X) = Σ_k λ_k P^k X P^{-k}` built from powers of the
//! cyclic shift `P`, together with the machinery around it: the closed-form
//! image, natural and Choi representations, the entanglement-breaking
//! classification, ℓ₁/ℓ₂ coherence bounds, Bargmann-invariant
//! canonicalization and the local action on bipartite operators.
//!
//! Indices are 0-based throughout. Where a formula is usually written with
//! 1-based labels the mapping is `i_label = i + 1`; the only public function
//! that takes 1-based labels is [`bipartite::basis_image`].
//!
//! Matrices are [`ComplexMatrix`] values, row-major, and operators are
//! vectorized row-major so that `vec(A X B) = (A ⊗ Bᵀ) vec(X)`.

pub mod bargmann;
pub mod bipartite;
pub mod channels;
pub mod coherence;
mod error;
pub mod io;
pub mod matcore;
pub mod tol;

pub use crate::bargmann::{CanonicalizationReport, GramMatrix, StateTuple};
pub use crate::bipartite::{LocalChannel, PptReport};
pub use crate::channels::{AlphaCoefficients, ChannelSpectrumReport, ChannelWeights};
pub use crate::coherence::{CoherenceReport, GellMannVector, NormP, SweepRow};
pub use crate::error::{Error, Result};
pub use crate::matcore::{
    BipartiteOperator, CirculantCoefficients, ComplexMatrix, CyclicIndex, DensityMatrix,
    Subsystem,
};

pub use num_complex::Complex64;
