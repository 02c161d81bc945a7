//! Dense quantum mechanics on a handful of qubits (smoke test scaffold).

use nalgebra::DMatrix;
use num_complex::Complex64;

pub struct StateVector;
pub struct Projector;
pub struct DensityOperator;

pub fn smoke() -> f64 {
    // Hermitian eigendecomposition of a complex matrix: the workhorse below.
    let m = DMatrix::<Complex64>::from_row_slice(
        2,
        2,
        &[
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, -0.5),
            Complex64::new(0.0, 0.5),
            Complex64::new(2.0, 0.0),
        ],
    );
    let eig = m.symmetric_eigen();
    eig.eigenvalues.iter().sum()
}
