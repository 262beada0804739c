//! Built-in matrix algebras `u(n)`, `su(n)` and `so(n)`.
//!
//! Bases, in order:
//! - `u(n)`: `i·E_kk` for each `k`, then `E_jk − E_kj` for `j < k`, then
//!   `i·(E_jk + E_kj)` for `j < k`.
//! - `su(n)`, `n ≥ 3`: `i·(E_kk − E_{k+1,k+1})` for `k < n`, then the same
//!   off-diagonal elements as `u(n)`.
//! - `su(2)`: `e_k = −(i/2)·σ_k` with the Pauli matrices, so that
//!   `[eᵢ, eⱼ] = ε_ijk e_k`.
//! - `so(n)`: `E_jk − E_kj` for `j < k`.

use std::sync::Arc;

use num_complex::Complex64;

use super::algebra::{AlgebraKind, LieAlgebra};
use crate::error::{Error, Result};
use crate::numerics::ComplexMatrix;
use crate::registry::{Named, Registry};

pub trait AlgebraPreset: Named + Send + Sync {
    fn kind(&self) -> AlgebraKind;

    /// Smallest supported matrix size.
    fn min_n(&self) -> usize {
        1
    }

    fn basis(&self, n: usize) -> Vec<ComplexMatrix>;

    fn build(&self, n: usize) -> Result<Arc<LieAlgebra>> {
        if n < self.min_n() {
            return Err(Error::BadDimension {
                name: self.name().into(),
                reason: format!("n must be at least {}, got {n}", self.min_n()),
            });
        }
        LieAlgebra::from_basis(format!("{}({n})", self.name()), self.kind(), n, self.basis(n))
    }
}

pub struct Unitary;
pub struct SpecialUnitary;
pub struct SpecialOrthogonal;

impl Named for Unitary {
    fn name(&self) -> &'static str {
        "u"
    }
}

impl AlgebraPreset for Unitary {
    fn kind(&self) -> AlgebraKind {
        AlgebraKind::Unitary
    }

    fn basis(&self, n: usize) -> Vec<ComplexMatrix> {
        let mut basis: Vec<ComplexMatrix> = (0..n).map(|k| unit(n, k, k, I)).collect();
        basis.extend(off_diagonal(n));
        basis
    }
}

impl Named for SpecialUnitary {
    fn name(&self) -> &'static str {
        "su"
    }
}

impl AlgebraPreset for SpecialUnitary {
    fn kind(&self) -> AlgebraKind {
        AlgebraKind::SpecialUnitary
    }

    fn basis(&self, n: usize) -> Vec<ComplexMatrix> {
        if n == 2 {
            return pauli_basis();
        }
        let mut basis: Vec<ComplexMatrix> = (0..n.saturating_sub(1))
            .map(|k| &unit(n, k, k, I) - &unit(n, k + 1, k + 1, I))
            .collect();
        basis.extend(off_diagonal(n));
        basis
    }
}

impl Named for SpecialOrthogonal {
    fn name(&self) -> &'static str {
        "so"
    }
}

impl AlgebraPreset for SpecialOrthogonal {
    fn kind(&self) -> AlgebraKind {
        AlgebraKind::SpecialOrthogonal
    }

    fn min_n(&self) -> usize {
        2
    }

    fn basis(&self, n: usize) -> Vec<ComplexMatrix> {
        pairs(n)
            .map(|(j, k)| &unit(n, j, k, ONE) - &unit(n, k, j, ONE))
            .collect()
    }
}

/// Registry holding `u`, `su` and `so`.
pub fn preset_registry() -> Registry<dyn AlgebraPreset> {
    let mut reg: Registry<dyn AlgebraPreset> = Registry::new();
    reg.register(Box::new(SpecialUnitary))
        .register(Box::new(Unitary))
        .register(Box::new(SpecialOrthogonal));
    reg
}

/// Looks up a preset by name and builds it at size `n`.
pub fn preset(name: &str, n: usize) -> Result<Arc<LieAlgebra>> {
    preset_registry()
        .get(name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))?
        .build(n)
}

/// Parses `NAME:N`, e.g. `su:3`.
pub fn parse_preset_spec(spec: &str) -> Result<(String, usize)> {
    let (name, n) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("preset `{spec}` is not of the form NAME:N")))?;
    let n = n
        .trim()
        .parse::<usize>()
        .map_err(|_| Error::Parse(format!("preset size `{n}` is not a non-negative integer")))?;
    Ok((name.trim().to_string(), n))
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

fn unit(n: usize, j: usize, k: usize, value: Complex64) -> ComplexMatrix {
    let mut m = ComplexMatrix::zeros(n, n);
    m[(j, k)] = value;
    m
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |j| ((j + 1)..n).map(move |k| (j, k)))
}

fn off_diagonal(n: usize) -> Vec<ComplexMatrix> {
    let real = pairs(n).map(|(j, k)| &unit(n, j, k, ONE) - &unit(n, k, j, ONE));
    let imag = pairs(n).map(|(j, k)| &unit(n, j, k, I) + &unit(n, k, j, I));
    real.chain(imag).collect()
}

fn pauli_basis() -> Vec<ComplexMatrix> {
    let z = Complex64::new(0.0, 0.0);
    let half_i = Complex64::new(0.0, -0.5);
    let sigma = [[[z, ONE], [ONE, z]], [[z, -I], [I, z]], [[ONE, z], [z, -ONE]]];
    sigma
        .iter()
        .map(|s| ComplexMatrix::from_fn(2, 2, |i, j| s[i][j] * half_i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(preset("u", 2).unwrap().dim(), 4);
        assert_eq!(preset("su", 2).unwrap().dim(), 3);
        assert_eq!(preset("su", 3).unwrap().dim(), 8);
        assert_eq!(preset("so", 3).unwrap().dim(), 3);
        assert_eq!(preset("u", 1).unwrap().dim(), 1);
    }

    #[test]
    fn unknown_and_bad_sizes() {
        assert!(matches!(preset("sp", 2), Err(Error::UnknownPreset(_))));
        assert!(matches!(preset("so", 1), Err(Error::BadDimension { .. })));
        assert!(matches!(preset("u", 0), Err(Error::BadDimension { .. })));
    }

    #[test]
    fn preset_spec_parsing() {
        assert_eq!(parse_preset_spec("su:3").unwrap(), ("su".to_string(), 3));
        assert!(parse_preset_spec("su3").is_err());
        assert!(parse_preset_spec("su:x").is_err());
    }

    #[test]
    fn unitary_bases_are_skew_hermitian() {
        for (name, n) in [("u", 3), ("su", 2), ("su", 4), ("so", 4)] {
            for e in preset(name, n).unwrap().basis() {
                assert_eq!(e.skew_hermitian_defect(), 0.0, "{name}({n})");
            }
        }
    }
}
