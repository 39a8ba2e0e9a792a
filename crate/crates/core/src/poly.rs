//! Exact integer polynomials and truncated power series in one variable.
//!
//! Just enough arithmetic for the generating functions in [`crate::formulas`]:
//! coefficients are exact [`BigInt`]s, a value is either a finite polynomial
//! or a series known up to a recorded truncation order, and an optional power
//! offset lets a series carry an isolated low-order term without storing
//! leading zeros.

use num_bigint::BigInt;
use num_traits::Zero;

/// Coefficients of `x^offset, x^(offset+1), ...`; either an exact polynomial
/// (`truncation == None`, trailing zeros trimmed) or a series whose
/// coefficients are only known for powers below `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    coeffs: Vec<BigInt>,
    offset: usize,
    truncation: Option<usize>,
}

impl PolySeries {
    /// An exact polynomial with the given coefficients of `x^0, x^1, ...`.
    pub fn polynomial(mut coeffs: Vec<BigInt>) -> PolySeries {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolySeries {
            coeffs,
            offset: 0,
            truncation: None,
        }
    }

    /// A series whose coefficients of `x^offset .. x^(truncation-1)` are
    /// given; higher powers are unknown rather than zero.
    pub fn series(coeffs: Vec<BigInt>, offset: usize, truncation: usize) -> PolySeries {
        assert!(
            offset + coeffs.len() <= truncation,
            "series stores {} coefficients from x^{offset} but is truncated at x^{truncation}",
            coeffs.len(),
        );
        PolySeries {
            coeffs,
            offset,
            truncation: Some(truncation),
        }
    }

    /// Coefficient of `x^power`. For a series, `power` must lie below the
    /// truncation order.
    pub fn coeff(&self, power: usize) -> BigInt {
        if let Some(t) = self.truncation {
            assert!(
                power < t,
                "coefficient of x^{power} beyond truncation order {t}"
            );
        }
        if power < self.offset {
            return BigInt::zero();
        }
        self.coeffs
            .get(power - self.offset)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The stored coefficients, starting at `x^offset`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Truncation order of a series; `None` for exact polynomials.
    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    /// Degree of an exact polynomial; `None` for the zero polynomial or for
    /// truncated series.
    pub fn degree(&self) -> Option<usize> {
        if self.truncation.is_some() || self.coeffs.is_empty() {
            None
        } else {
            Some(self.offset + self.coeffs.len() - 1)
        }
    }
}

/// `a * b` on raw coefficient slices.
pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `a - b` on raw coefficient slices.
pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, bj) in out.iter_mut().zip(b.iter()) {
        *o -= bj;
    }
    out
}

/// Substitutes `x -> x^2`: coefficient `c_i` moves to power `2i`.
pub(crate) fn spread_square(a: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().saturating_mul(2).saturating_sub(1).max(a.len())];
    for (i, ai) in a.iter().enumerate() {
        out[2 * i] = ai.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn polynomial_normalizes_trailing_zeros() {
        let p = PolySeries::polynomial(ints(&[1, 2, 0, 0]));
        assert_eq!(p.coeffs(), &ints(&[1, 2])[..]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeff(0), BigInt::from(1));
        assert_eq!(p.coeff(5), BigInt::zero());
        assert_eq!(PolySeries::polynomial(ints(&[0])).degree(), None);
    }

    #[test]
    fn series_respects_offset_and_truncation() {
        let s = PolySeries::series(ints(&[7, 8]), 1, 4);
        assert_eq!(s.coeff(0), BigInt::zero());
        assert_eq!(s.coeff(1), BigInt::from(7));
        assert_eq!(s.coeff(2), BigInt::from(8));
        assert_eq!(s.coeff(3), BigInt::zero());
        assert_eq!(s.truncation(), Some(4));
        assert_eq!(s.degree(), None);
    }

    #[test]
    #[should_panic(expected = "beyond truncation")]
    fn series_coefficient_beyond_truncation_panics() {
        let s = PolySeries::series(ints(&[1]), 0, 1);
        let _ = s.coeff(1);
    }

    #[test]
    fn raw_arithmetic() {
        // (1 + x)(1 - x) = 1 - x^2
        assert_eq!(mul(&ints(&[1, 1]), &ints(&[1, -1])), ints(&[1, 0, -1]));
        assert_eq!(sub(&ints(&[1, 1]), &ints(&[1, -1, 2])), ints(&[0, 2, -2]));
        assert_eq!(spread_square(&ints(&[1, 3, 1])), ints(&[1, 0, 3, 0, 1]));
        assert!(mul(&[], &ints(&[1])).is_empty());
    }
}
