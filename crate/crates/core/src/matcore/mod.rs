//! Dense complex matrices and the structural objects built on them: cyclic
//! shifts, circulant matrices, the DFT, Kronecker products, partial traces
//! and transposes, eigensolvers and seeded random inputs.

mod cyclic;
mod density;
mod matrix;
mod partial;
pub mod random;
mod spectral;

pub use cyclic::{
    circulant_from_coeffs, cyclic_shift_power, dft_matrix, is_circulant, omega, omega_power_diag,
    reduce, root_of_unity, CirculantCoefficients, CyclicIndex,
};
pub use density::DensityMatrix;
pub use matrix::{kron, vec, ComplexMatrix};
pub use partial::{partial_trace, partial_transpose, BipartiteOperator, Subsystem};
pub use random::random_density_matrix;
pub use spectral::{eigenvalues, hermitian_eigh, hermitian_spectrum};
