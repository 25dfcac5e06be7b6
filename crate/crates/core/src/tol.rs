//! Default tolerances. Every predicate that uses one also accepts an override.

/// Structural predicates: circulant checks, Hermiticity, unit trace.
pub const STRUCTURAL: f64 = 1e-10;

/// Eigenvalue comparisons.
pub const SPECTRAL: f64 = 1e-8;

/// Nonnegativity and normalization of probability vectors.
pub const WEIGHTS: f64 = 1e-12;

/// Unit-norm check on state vectors.
pub const UNIT_NORM: f64 = 1e-12;

/// Eigenvalues below this are treated as zero when factoring a Gram matrix.
pub const RANK: f64 = 1e-10;

/// Bargmann invariants with modulus at or below this are treated as zero.
pub const VANISHING: f64 = 1e-12;

/// Relative Hermiticity gate used before a real eigensolve:
/// `‖X − X†‖_max ≤ HERMITIAN_GATE · (1 + ‖X‖_max)`.
pub const HERMITIAN_GATE: f64 = 1e-10;
