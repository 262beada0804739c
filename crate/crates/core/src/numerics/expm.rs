use super::complex::ComplexMatrix;
use crate::error::{Error, Result};

const TAYLOR_DEGREE: usize = 12;
const SCALED_NORM_BOUND: f64 = 0.5;

/// Matrix exponential by scaling and squaring around a degree-12 Taylor
/// polynomial. The input is scaled by `2^-k` so its Frobenius norm is at
/// most 0.5, the polynomial is evaluated by Horner's rule, and the result is
/// squared `k` times.
pub fn matrix_exp(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let norm = a.frobenius_norm();
    let mut squarings = 0u32;
    if norm > SCALED_NORM_BOUND {
        squarings = (norm / SCALED_NORM_BOUND).log2().ceil().max(0.0) as u32;
    }
    let scaled = a.scale_real(0.5f64.powi(squarings as i32));

    // I + A(I + A/2(I + A/3(...)))
    let identity = ComplexMatrix::identity(n);
    let mut acc = identity.clone();
    for k in (1..=TAYLOR_DEGREE).rev() {
        acc = &identity + &(&scaled * &acc).scale_real(1.0 / k as f64);
    }
    for _ in 0..squarings {
        acc = &acc * &acc;
    }
    if !acc.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(acc)
}
