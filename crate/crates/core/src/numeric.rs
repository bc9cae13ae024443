//! Tolerances and deterministic summation.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Default comparison tolerance for modular data entries.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Distance from an integer still accepted as that integer for fusion coefficients.
pub const INTEGER_TOLERANCE: f64 = 1e-6;

pub type CMatrix = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `exp(2πi·x)`.
pub fn root_of_unity(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * x)
}

/// Relative comparison for magnitudes above one, absolute below.
pub fn approx_eq(a: Complex64, b: Complex64, tol: f64) -> bool {
    let scale = 1f64.max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

/// Pairwise (cascade) summation in slice order.
///
/// The split points depend only on the length, so the result is
/// bit-identical however the terms were produced.
pub fn pairwise_sum(terms: &[Complex64]) -> Complex64 {
    const LEAF: usize = 8;
    if terms.len() <= LEAF {
        return terms.iter().fold(ZERO, |acc, &z| acc + z);
    }
    let mid = terms.len() / 2;
    pairwise_sum(&terms[..mid]) + pairwise_sum(&terms[mid..])
}

/// Largest entry modulus of `a - b`.
pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Integer power of a complex number; negative exponents invert.
pub fn cpow(z: Complex64, n: i64) -> Complex64 {
    let i = i32::try_from(n).expect("exponent fits in i32");
    z.powi(i)
}
