//! Residual test for the conjugation identity
//! `exp(-H) Delta_F (exp(H) u) = Delta_{F-2H} u + (Delta H + <grad(H - F), grad H>) u`
//! on quadratic profiles, with every derivative taken analytically.
//!
//! Test functions are polynomials times Gaussians; multiplying by
//! `exp(H)` with a quadratic `H` stays inside that family, so both sides
//! of the identity are evaluated without any numerical differentiation.

use crate::error::{Result, SpectraError};
use crate::hermite::SampleGrid;

/// Quadratic profile `a y^2 / 2`.
#[derive(Debug, Clone, Copy)]
pub struct QuadraticProfile {
    pub coefficient: f64,
}

impl QuadraticProfile {
    pub fn new(coefficient: f64) -> Self {
        Self { coefficient }
    }

    pub fn eval(&self, y: f64) -> f64 {
        0.5 * self.coefficient * y * y
    }

    /// First derivative `a y`.
    pub fn grad(&self, y: f64) -> f64 {
        self.coefficient * y
    }

    /// Second derivative `a`.
    pub fn laplacian(&self) -> f64 {
        self.coefficient
    }
}

/// `P(y) exp(b y^2 / 2)` with polynomial coefficients in ascending order.
#[derive(Debug, Clone)]
pub struct PolyGaussian {
    coeffs: Vec<f64>,
    exponent: f64,
}

impl PolyGaussian {
    pub fn new(coeffs: Vec<f64>, exponent: f64) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > 7 {
            return Err(SpectraError::InvalidInput(
                "test polynomials must have degree at most 6".into(),
            ));
        }
        Ok(Self { coeffs, exponent })
    }

    fn poly(&self, y: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * y + c)
    }

    fn poly_deriv(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (k, &c)| acc * y + k as f64 * c)
    }

    fn poly_deriv2(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(2)
            .rev()
            .fold(0.0, |acc, (k, &c)| acc * y + (k * (k - 1)) as f64 * c)
    }

    /// Value, first and second derivative of `P exp(b y^2 / 2)`.
    pub fn eval_with_derivatives(&self, y: f64) -> (f64, f64, f64) {
        let g = (0.5 * self.exponent * y * y).exp();
        let p = self.poly(y);
        let dp = self.poly_deriv(y);
        let ddp = self.poly_deriv2(y);
        let b = self.exponent;
        let u = p * g;
        let du = (dp + b * y * p) * g;
        let ddu = (ddp + 2.0 * b * y * dp + (b + b * b * y * y) * p) * g;
        (u, du, ddu)
    }

    /// Multiplication by `exp(a y^2 / 2)` shifts the exponent.
    fn shifted(&self, profile: &QuadraticProfile) -> PolyGaussian {
        PolyGaussian {
            coeffs: self.coeffs.clone(),
            exponent: self.exponent + profile.coefficient,
        }
    }
}

/// Default battery of polynomial-times-Gaussian test functions.
pub fn standard_test_functions() -> Vec<PolyGaussian> {
    let polys: Vec<Vec<f64>> = vec![
        vec![1.0],
        vec![0.0, 1.0],
        vec![-1.0, 0.0, 1.0],
        vec![0.0, -3.0, 0.0, 1.0],
        vec![3.0, 0.0, -6.0, 0.0, 1.0],
        vec![1.0, 2.0, 0.5, -0.25, 0.125, 0.0, 0.0625],
    ];
    let mut out = Vec::new();
    for coeffs in polys {
        for &b in &[0.0, -0.5, -1.0] {
            out.push(PolyGaussian::new(coeffs.clone(), b).unwrap());
        }
    }
    out
}

/// The two profile pairs used to conjugate the drift Laplacian into its
/// equivalent forms for a given soliton constant, plus a generic pair.
pub fn standard_profile_pairs(rho: f64) -> Vec<(QuadraticProfile, QuadraticProfile)> {
    vec![
        (QuadraticProfile::new(rho), QuadraticProfile::new(0.5 * rho)),
        (QuadraticProfile::new(rho), QuadraticProfile::new(rho)),
        (QuadraticProfile::new(0.0), QuadraticProfile::new(0.0)),
        (QuadraticProfile::new(rho), QuadraticProfile::new(-0.5 * rho)),
    ]
}

/// Max over grid and test set of the relative defect between the two
/// sides of the conjugation identity.
pub fn conjugation_residual(
    f_profile: &QuadraticProfile,
    h_profile: &QuadraticProfile,
    tests: &[PolyGaussian],
    grid: &SampleGrid,
) -> Result<f64> {
    if tests.is_empty() {
        return Err(SpectraError::InvalidInput(
            "conjugation residual needs at least one test function".into(),
        ));
    }
    let max_coeff = f_profile
        .coefficient
        .abs()
        .max(h_profile.coefficient.abs())
        .max(1.0);
    if 0.5 * max_coeff * grid.radius() * grid.radius() > 200.0 {
        return Err(SpectraError::InvalidInput(
            "profile exponents overflow on this grid".into(),
        ));
    }

    let mut worst = 0.0f64;
    for u in tests {
        let conjugated = u.shifted(h_profile);
        let mut max_defect = 0.0f64;
        let mut scale = 0.0f64;
        for &y in grid.points() {
            // Left side: exp(-H) Delta_F (exp(H) u), computed on the
            // shifted poly-Gaussian.
            let (_, dv, ddv) = conjugated.eval_with_derivatives(y);
            let damp = (-h_profile.eval(y)).exp();
            let lhs = damp * (ddv - f_profile.grad(y) * dv);

            // Right side: Delta_{F-2H} u + (Delta H + <grad(H-F), grad H>) u.
            let (u0, du, ddu) = u.eval_with_derivatives(y);
            let drift_coeff = f_profile.grad(y) - 2.0 * h_profile.grad(y);
            let zero_order = h_profile.laplacian()
                + (h_profile.grad(y) - f_profile.grad(y)) * h_profile.grad(y);
            let rhs = ddu - drift_coeff * du + zero_order * u0;

            max_defect = max_defect.max((lhs - rhs).abs());
            // Both sides can cancel to zero identically; measure the
            // defect against the terms that were combined.
            let term_scale = (damp * ddv).abs().max((damp * f_profile.grad(y) * dv).abs());
            let term_scale = term_scale
                .max(ddu.abs())
                .max((drift_coeff * du).abs())
                .max((zero_order * u0).abs());
            scale = scale.max(term_scale);
        }
        if scale > 0.0 {
            worst = worst.max(max_defect / scale);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> SampleGrid {
        SampleGrid::new(6.0, 601).unwrap()
    }

    #[test]
    fn trivial_profiles_give_zero_residual() {
        let zero = QuadraticProfile::new(0.0);
        let r = conjugation_residual(&zero, &zero, &standard_test_functions(), &grid()).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn half_profile_substitution() {
        // F = f, H = f/2 is the conjugation onto the Schroedinger form.
        for &rho in &[-2.0, -1.0, -0.5, 0.5, 1.0, 2.0] {
            let f = QuadraticProfile::new(rho);
            let h = QuadraticProfile::new(0.5 * rho);
            let r = conjugation_residual(&f, &h, &standard_test_functions(), &grid()).unwrap();
            assert!(r <= 1e-9, "rho {rho}: residual {r}");
        }
    }

    #[test]
    fn full_profile_substitution() {
        // F = H = f is the conjugation onto the sign-flipped drift form.
        for &rho in &[-2.0, -1.0, 1.0, 2.0] {
            let f = QuadraticProfile::new(rho);
            let r = conjugation_residual(&f, &f, &standard_test_functions(), &grid()).unwrap();
            assert!(r <= 1e-9, "rho {rho}: residual {r}");
        }
    }

    #[test]
    fn full_profile_matrix() {
        for (f, h) in standard_profile_pairs(-1.0) {
            let r = conjugation_residual(&f, &h, &standard_test_functions(), &grid()).unwrap();
            assert!(r <= 1e-9, "residual {r}");
        }
    }

    #[test]
    fn poly_gaussian_derivatives_match_finite_differences() {
        let u = PolyGaussian::new(vec![1.0, -0.5, 2.0, 0.0, 0.25], -0.7).unwrap();
        for &y in &[-2.3, 0.1, 1.9] {
            let eps = 1e-6;
            let (v, dv, ddv) = u.eval_with_derivatives(y);
            let (vp, _, _) = u.eval_with_derivatives(y + eps);
            let (vm, _, _) = u.eval_with_derivatives(y - eps);
            assert!((dv - (vp - vm) / (2.0 * eps)).abs() < 1e-6 * dv.abs().max(1.0));
            // A wider step for the second difference keeps its own
            // rounding noise below the comparison tolerance.
            let eps = 1e-4;
            let (vp, _, _) = u.eval_with_derivatives(y + eps);
            let (vm, _, _) = u.eval_with_derivatives(y - eps);
            assert!((ddv - (vp - 2.0 * v + vm) / (eps * eps)).abs() < 1e-5 * ddv.abs().max(1.0));
        }
    }

    #[test]
    fn degree_cap_enforced() {
        assert!(PolyGaussian::new(vec![1.0; 8], 0.0).is_err());
        assert!(PolyGaussian::new(vec![], 0.0).is_err());
    }

    #[test]
    fn overflow_guard() {
        let f = QuadraticProfile::new(50.0);
        let h = QuadraticProfile::new(0.0);
        let wide = SampleGrid::new(10.0, 11).unwrap();
        assert!(conjugation_residual(&f, &h, &standard_test_functions(), &wide).is_err());
    }
}
