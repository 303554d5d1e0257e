//! Exact linear algebra over the rationals or a prime field.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Fp, Rational, SUPPORTED_PRIMES};
pub use matrix::{Matrix, NoSolution};
pub use subspace::{Quotient, Subspace};

pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    m.rref()
}

pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.kernel_basis()
}

pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Vec<F>, NoSolution> {
    m.solve(b)
}
