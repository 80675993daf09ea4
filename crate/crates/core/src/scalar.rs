//! Eigenvalue scalars that keep an exact rational coefficient of the unit
//! `|rho|` alongside a floating remainder.
//!
//! Eigenvalues of the analytic models are exact rational multiples of the
//! soliton constant; eigenvalues ingested from external data are plain
//! floating-point numbers. A `ScalarValue` is the sum of both kinds, so
//! sums of analytic and ingested lines keep whatever exactness they have.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Result, SpectraError};

/// Relative tolerance of the equality predicate for inexact values.
pub const COINCIDENCE_TOL: f64 = 1e-9;

/// A real scalar of the form `exact_part * |rho| + numeric_part`.
///
/// `exact_part` is an arbitrary-precision rational, `numeric_part` is a
/// float in absolute units. Two values are the same spectral line exactly
/// when both are exact and the rationals match; otherwise coincidence is
/// decided by a relative tolerance on the assembled float values.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarValue {
    exact_part: BigRational,
    numeric_part: f64,
    unit: f64,
}

impl ScalarValue {
    /// Exact rational multiple of the unit `|rho|`.
    pub fn exact_ratio(numer: i64, denom: i64, unit: f64) -> Result<Self> {
        if denom == 0 {
            return Err(SpectraError::InvalidInput("zero denominator".into()));
        }
        Self::validated(
            BigRational::new(BigInt::from(numer), BigInt::from(denom)),
            0.0,
            unit,
        )
    }

    /// Exact integer multiple of the unit `|rho|`.
    pub fn exact_int(coeff: i64, unit: f64) -> Result<Self> {
        Self::validated(BigRational::from_integer(BigInt::from(coeff)), 0.0, unit)
    }

    pub fn exact(coeff: BigRational, unit: f64) -> Result<Self> {
        Self::validated(coeff, 0.0, unit)
    }

    /// Plain floating value in absolute units (exact part zero).
    pub fn numeric(value: f64, unit: f64) -> Result<Self> {
        Self::validated(BigRational::zero(), value, unit)
    }

    fn validated(exact_part: BigRational, numeric_part: f64, unit: f64) -> Result<Self> {
        if !numeric_part.is_finite() || !unit.is_finite() || unit < 0.0 {
            return Err(SpectraError::InvalidInput(format!(
                "non-finite scalar (numeric part {numeric_part}, unit {unit})"
            )));
        }
        let value = Self {
            exact_part,
            numeric_part,
            unit,
        };
        if !value.value().is_finite() {
            return Err(SpectraError::InvalidInput(
                "scalar value overflows f64".into(),
            ));
        }
        Ok(value)
    }

    /// Assembled float value `exact_part * unit + numeric_part`.
    pub fn value(&self) -> f64 {
        let coeff = self.exact_part.to_f64().unwrap_or(f64::NAN);
        coeff * self.unit + self.numeric_part
    }

    /// True when the value carries no floating remainder.
    pub fn is_exact(&self) -> bool {
        self.numeric_part == 0.0
    }

    pub fn exact_part(&self) -> &BigRational {
        &self.exact_part
    }

    pub fn numeric_part(&self) -> f64 {
        self.numeric_part
    }

    /// The unit `|rho|` this scalar is expressed against.
    pub fn unit(&self) -> f64 {
        self.unit
    }

    /// Sum of two scalars sharing the same unit.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.units_match(other) {
            return Err(SpectraError::InvalidInput(format!(
                "unit mismatch: {} vs {}",
                self.unit, other.unit
            )));
        }
        // An all-numeric operand may carry unit 0 (no analytic content);
        // keep the nonzero unit of the other side.
        let unit = if self.unit != 0.0 { self.unit } else { other.unit };
        Self::validated(
            &self.exact_part + &other.exact_part,
            self.numeric_part + other.numeric_part,
            unit,
        )
    }

    fn units_match(&self, other: &Self) -> bool {
        self.unit == other.unit
            || (self.unit == 0.0 && self.exact_part.is_zero())
            || (other.unit == 0.0 && other.exact_part.is_zero())
    }

    /// Equality predicate for spectral lines: exact values compare by
    /// their rationals, anything else by relative tolerance on the floats.
    pub fn coincides_with(&self, other: &Self) -> bool {
        if self.is_exact() && other.is_exact() && self.units_match(other) {
            return self.exact_part == other.exact_part
                || (self.exact_part.is_zero() && other.exact_part.is_zero());
        }
        let (x, y) = (self.value(), other.value());
        (x - y).abs() <= COINCIDENCE_TOL * 1.0_f64.max(x.abs()).max(y.abs())
    }

    /// Total order on assembled values; exact values win ties so output
    /// order is deterministic.
    pub fn order(&self, other: &Self) -> Ordering {
        self.value()
            .total_cmp(&other.value())
            .then_with(|| other.is_exact().cmp(&self.is_exact()))
            .then_with(|| {
                if self.is_exact() && other.is_exact() {
                    self.exact_part.cmp(&other.exact_part)
                } else {
                    Ordering::Equal
                }
            })
    }
}

impl fmt::Display for ScalarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact_part.is_zero() {
            return write!(f, "{}", self.numeric_part);
        }
        let coeff = if self.exact_part.is_integer() {
            format!("{}", self.exact_part.numer())
        } else {
            format!("{}/{}", self.exact_part.numer(), self.exact_part.denom())
        };
        if self.numeric_part == 0.0 {
            write!(f, "{coeff}|rho|")
        } else if self.numeric_part.is_sign_negative() {
            write!(f, "{coeff}|rho| - {}", -self.numeric_part)
        } else {
            write!(f, "{coeff}|rho| + {}", self.numeric_part)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values_compare_by_rational() {
        let a = ScalarValue::exact_ratio(1, 3, 1.0).unwrap();
        let b = ScalarValue::exact_ratio(2, 6, 1.0).unwrap();
        let c = ScalarValue::exact_ratio(1, 3 + 1, 1.0).unwrap();
        assert!(a.coincides_with(&b));
        assert!(!a.coincides_with(&c));
    }

    #[test]
    fn inexact_values_compare_by_tolerance() {
        let a = ScalarValue::numeric(2.0, 1.0).unwrap();
        let b = ScalarValue::numeric(2.0 + 1e-12, 1.0).unwrap();
        let c = ScalarValue::numeric(2.0 + 1e-6, 1.0).unwrap();
        assert!(a.coincides_with(&b));
        assert!(!a.coincides_with(&c));
    }

    #[test]
    fn mixed_sum_keeps_both_parts() {
        let mu = ScalarValue::numeric(3.8, 1.0).unwrap();
        let gauss = ScalarValue::exact_int(2, 1.0).unwrap();
        let sum = mu.add(&gauss).unwrap();
        assert!(!sum.is_exact());
        assert!((sum.value() - 5.8).abs() < 1e-15);
        assert_eq!(sum.exact_part(), gauss.exact_part());
    }

    #[test]
    fn numeric_zero_is_exact_zero() {
        let z = ScalarValue::numeric(0.0, 1.0).unwrap();
        assert!(z.is_exact());
        assert!(z.coincides_with(&ScalarValue::exact_int(0, 1.0).unwrap()));
    }

    #[test]
    fn unit_mismatch_rejected() {
        let a = ScalarValue::exact_int(1, 1.0).unwrap();
        let b = ScalarValue::exact_int(1, 2.0).unwrap();
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn non_finite_rejected() {
        assert!(ScalarValue::numeric(f64::INFINITY, 1.0).is_err());
        assert!(ScalarValue::numeric(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            ScalarValue::exact_int(2, 1.0).unwrap().to_string(),
            "2|rho|"
        );
        assert_eq!(ScalarValue::numeric(3.8, 1.0).unwrap().to_string(), "3.8");
        let mixed = ScalarValue::numeric(3.8, 1.0)
            .unwrap()
            .add(&ScalarValue::exact_int(2, 1.0).unwrap())
            .unwrap();
        assert_eq!(mixed.to_string(), "2|rho| + 3.8");
    }
}
