//! Probabilists' Hermite polynomials, Gaussian-factor eigenfunctions and
//! Gaussian-weighted inner products.
//!
//! On the line with potential `f(y) = (rho/2) y^2` the drift Laplacian
//! `u'' - f' u'` has eigenfunctions `He_p(sqrt(rho) y)` with eigenvalue
//! `rho p` when `rho > 0`, and
//! `exp((rho/2) y^2) He_p(sqrt(-rho) y)` with eigenvalue `-rho (1 + p)`
//! when `rho < 0`. Both facts are checked here by an analytic residual
//! built from the identities `He_{p+1} = x He_p - p He_{p-1}` and
//! `He_p' = p He_{p-1}`.

use crate::error::{Result, SpectraError};
use crate::tridiag;

/// Degree cap: beyond this the forward recurrence can overflow doubles on
/// the grids used for residual checks.
pub const MAX_HERMITE_DEGREE: u32 = 60;

const SQRT_TWO_PI: f64 = 2.5066282746310002;

/// Probabilists' Hermite polynomial by forward recurrence.
pub fn he_eval(degree: u32, x: f64) -> Result<f64> {
    if degree > MAX_HERMITE_DEGREE {
        return Err(SpectraError::DegreeLimit {
            degree,
            limit: MAX_HERMITE_DEGREE,
        });
    }
    Ok(he_eval_unchecked(degree, x))
}

fn he_eval_unchecked(degree: u32, x: f64) -> f64 {
    match degree {
        0 => 1.0,
        1 => x,
        _ => {
            let mut prev = 1.0;
            let mut cur = x;
            for p in 1..degree {
                let next = x * cur - p as f64 * prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// Shrinking or expanding Gaussian factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussianMode {
    Shrinker,
    Expander,
}

/// One-dimensional eigenfunction of the Gaussian-factor drift Laplacian.
#[derive(Debug, Clone, Copy)]
pub struct GaussianEigenfunction {
    mode: GaussianMode,
    rho: f64,
    degree: u32,
}

impl GaussianEigenfunction {
    pub fn new(mode: GaussianMode, rho: f64, degree: u32) -> Result<Self> {
        match mode {
            GaussianMode::Shrinker if rho <= 0.0 => {
                return Err(SpectraError::SignMismatch(format!(
                    "shrinker mode needs rho > 0, got {rho}"
                )))
            }
            GaussianMode::Expander if rho >= 0.0 => {
                return Err(SpectraError::SignMismatch(format!(
                    "expander mode needs rho < 0, got {rho}"
                )))
            }
            _ => {}
        }
        if degree > MAX_HERMITE_DEGREE {
            return Err(SpectraError::DegreeLimit {
                degree,
                limit: MAX_HERMITE_DEGREE,
            });
        }
        Ok(Self { mode, rho, degree })
    }

    pub fn mode(&self) -> GaussianMode {
        self.mode
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Eigenvalue of `-Delta_f` for this eigenfunction.
    pub fn eigenvalue(&self) -> f64 {
        match self.mode {
            GaussianMode::Shrinker => self.rho * self.degree as f64,
            GaussianMode::Expander => -self.rho * (1.0 + self.degree as f64),
        }
    }

    /// Pointwise value.
    pub fn eval(&self, y: f64) -> f64 {
        let p = self.degree;
        match self.mode {
            GaussianMode::Shrinker => he_eval_unchecked(p, self.rho.sqrt() * y),
            GaussianMode::Expander => {
                let s = (-self.rho).sqrt() * y;
                (0.5 * self.rho * y * y).exp() * he_eval_unchecked(p, s)
            }
        }
    }

    /// Value together with the first two derivatives, all from Hermite
    /// identities rather than finite differences.
    fn eval_with_derivatives(&self, y: f64) -> (f64, f64, f64) {
        let p = self.degree;
        let pf = p as f64;
        match self.mode {
            GaussianMode::Shrinker => {
                let sq = self.rho.sqrt();
                let s = sq * y;
                let h0 = he_eval_unchecked(p, s);
                let h1 = if p >= 1 {
                    he_eval_unchecked(p - 1, s)
                } else {
                    0.0
                };
                let h2 = if p >= 2 {
                    he_eval_unchecked(p - 2, s)
                } else {
                    0.0
                };
                let u = h0;
                let du = sq * pf * h1;
                let ddu = self.rho * pf * (pf - 1.0) * h2;
                (u, du, ddu)
            }
            GaussianMode::Expander => {
                let a = -self.rho;
                let sq = a.sqrt();
                let s = sq * y;
                let h0 = he_eval_unchecked(p, s);
                let h1 = if p >= 1 {
                    sq * pf * he_eval_unchecked(p - 1, s)
                } else {
                    0.0
                };
                let h2 = if p >= 2 {
                    a * pf * (pf - 1.0) * he_eval_unchecked(p - 2, s)
                } else {
                    0.0
                };
                let g = (0.5 * self.rho * y * y).exp();
                let u = g * h0;
                let du = g * (self.rho * y * h0 + h1);
                let ddu = g
                    * ((self.rho + self.rho * self.rho * y * y) * h0
                        + 2.0 * self.rho * y * h1
                        + h2);
                (u, du, ddu)
            }
        }
    }

    /// Grid half-width covering the classically allowed region of the mode
    /// with margin.
    pub fn required_radius(&self) -> f64 {
        required_radius(self.rho, self.degree)
    }
}

pub fn required_radius(rho: f64, degree: u32) -> f64 {
    let r = 2.0 * ((2.0 * degree as f64 + 1.0) / rho.abs()).sqrt();
    r.max(8.0)
}

/// Uniform inclusive sample grid on `[-radius, radius]`.
#[derive(Debug, Clone)]
pub struct SampleGrid {
    radius: f64,
    points: Vec<f64>,
}

impl SampleGrid {
    pub fn new(radius: f64, count: usize) -> Result<Self> {
        if !(radius > 0.0) || count < 2 {
            return Err(SpectraError::InvalidInput(format!(
                "sample grid needs radius > 0 and at least 2 points, got {radius}, {count}"
            )));
        }
        let step = 2.0 * radius / (count - 1) as f64;
        let points = (0..count).map(|i| -radius + step * i as f64).collect();
        Ok(Self { radius, points })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }
}

/// Max over the grid of `|Delta_f u + nu u| / max |u|`, with all
/// derivatives analytic.
pub fn drift_residual(e: &GaussianEigenfunction, grid: &SampleGrid) -> Result<f64> {
    let needed = e.required_radius();
    if grid.radius() + 1e-12 < needed {
        return Err(SpectraError::InvalidInput(format!(
            "grid radius {} is below the required half-width {needed}",
            grid.radius()
        )));
    }
    let nu = e.eigenvalue();
    let mut max_res = 0.0f64;
    let mut max_u = 0.0f64;
    for &y in grid.points() {
        let (u, du, ddu) = e.eval_with_derivatives(y);
        let drift = ddu - e.rho * y * du;
        max_res = max_res.max((drift + nu * u).abs());
        max_u = max_u.max(u.abs());
    }
    if max_u == 0.0 {
        return Err(SpectraError::InvalidInput(
            "eigenfunction vanished on the entire grid".into(),
        ));
    }
    Ok(max_res / max_u)
}

/// Gauss-Hermite rule for the probabilists' weight `exp(-x^2/2)`.
///
/// Nodes and weights come from the eigen-decomposition of the Jacobi
/// matrix (zero diagonal, off-diagonal `sqrt(i)`); weights are
/// `sqrt(2 pi)` times the squared first eigenvector component. The rule
/// is symmetrized so paired nodes are exact negatives.
#[derive(Debug, Clone)]
pub struct GaussHermiteRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussHermiteRule {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(SpectraError::InvalidInput(
                "quadrature order must be positive".into(),
            ));
        }
        if order == 1 {
            return Ok(Self {
                nodes: vec![0.0],
                weights: vec![SQRT_TWO_PI],
            });
        }
        if order > 90 {
            return Err(SpectraError::InvalidInput(format!(
                "quadrature order {order} overflows the weight formula"
            )));
        }
        // Eigenvalues of the Jacobi matrix seed the nodes; a Newton polish
        // on He_n (derivative n He_{n-1}) brings each root to the last ulp,
        // which the tail weights need.
        let diag = vec![0.0; order];
        let off: Vec<f64> = (1..order).map(|i| (i as f64).sqrt()).collect();
        let mut nodes = tridiag::smallest_eigenvalues(&diag, &off, order);
        let p = order as u32;
        for x in nodes.iter_mut() {
            for _ in 0..4 {
                let value = he_eval_unchecked(p, *x);
                let slope = p as f64 * he_eval_unchecked(p - 1, *x);
                if slope == 0.0 {
                    break;
                }
                let step = value / slope;
                *x -= step;
                if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
                    break;
                }
            }
        }

        // w_i = n! sqrt(2 pi) / (n^2 He_{n-1}(x_i)^2).
        let mut factorial = 1.0f64;
        for i in 2..=order {
            factorial *= i as f64;
        }
        let scale = factorial * SQRT_TWO_PI / (order * order) as f64;
        let mut weights: Vec<f64> = nodes
            .iter()
            .map(|&x| {
                let h = he_eval_unchecked(p - 1, x);
                scale / (h * h)
            })
            .collect();

        // Enforce the +/- node symmetry bit-exactly.
        let n = order;
        for k in 0..n / 2 {
            let m = 0.5 * (nodes[n - 1 - k] - nodes[k]);
            nodes[k] = -m;
            nodes[n - 1 - k] = m;
            let w = 0.5 * (weights[k] + weights[n - 1 - k]);
            weights[k] = w;
            weights[n - 1 - k] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `integral f(x) exp(-x^2/2) dx`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `L^2_f` inner product of two Gaussian-factor eigenfunctions.
///
/// In both modes the integrand reduces, after `x = sqrt(|rho|) y`, to a
/// product of Hermite polynomials against the probabilists' weight, so a
/// rule with `p1 + p2 + 2` nodes integrates it exactly.
pub fn weighted_inner_product(
    e1: &GaussianEigenfunction,
    e2: &GaussianEigenfunction,
) -> Result<f64> {
    if e1.mode != e2.mode || e1.rho != e2.rho {
        return Err(SpectraError::InvalidInput(format!(
            "inner product needs matching mode and rho: ({:?}, {}) vs ({:?}, {})",
            e1.mode, e1.rho, e2.mode, e2.rho
        )));
    }
    let order = (e1.degree + e2.degree + 2) as usize;
    let rule = GaussHermiteRule::new(order)?;
    let (p1, p2) = (e1.degree, e2.degree);
    let sum = rule.integrate(|x| he_eval_unchecked(p1, x) * he_eval_unchecked(p2, x));
    Ok(sum / e1.rho.abs().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn he_low_degrees() {
        assert_eq!(he_eval(0, 3.7).unwrap(), 1.0);
        assert_eq!(he_eval(1, -2.5).unwrap(), -2.5);
        // He_2 = x^2 - 1, He_3 = x^3 - 3x, He_4 = x^4 - 6x^2 + 3.
        assert_eq!(he_eval(2, 2.0).unwrap(), 3.0);
        assert_eq!(he_eval(3, 1.0).unwrap(), -2.0);
        assert_eq!(he_eval(4, 2.0).unwrap(), -5.0);
    }

    #[test]
    fn he_degree_limit() {
        assert!(he_eval(60, 1.0).is_ok());
        assert!(matches!(
            he_eval(61, 1.0),
            Err(SpectraError::DegreeLimit { .. })
        ));
    }

    #[test]
    fn recurrence_consistency_random_points() {
        let mut x = -5.0;
        while x <= 5.0 {
            for p in 1..=40u32 {
                let lhs = he_eval_unchecked(p + 1, x);
                let rhs = x * he_eval_unchecked(p, x) - p as f64 * he_eval_unchecked(p - 1, x);
                let scale = lhs.abs().max(rhs.abs()).max(1.0);
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * scale,
                    "recurrence violated at p={p}, x={x}"
                );
            }
            x += 0.317;
        }
    }

    #[test]
    fn derivative_matches_central_difference() {
        let h = 1e-5;
        for p in 1..=20u32 {
            for &x in &[-3.2, -1.0, 0.4, 2.7] {
                let numeric =
                    (he_eval_unchecked(p, x + h) - he_eval_unchecked(p, x - h)) / (2.0 * h);
                let analytic = p as f64 * he_eval_unchecked(p - 1, x);
                let scale = analytic.abs().max(1.0);
                assert!(
                    (numeric - analytic).abs() <= 1e-6 * scale,
                    "derivative identity failed at p={p}, x={x}"
                );
            }
        }
    }

    #[test]
    fn eigenfunction_values() {
        let e = GaussianEigenfunction::new(GaussianMode::Expander, -1.0, 0).unwrap();
        assert_eq!(e.eval(0.0), 1.0);

        let e = GaussianEigenfunction::new(GaussianMode::Expander, -1.0, 1).unwrap();
        let want = 2.0 * (-2.0f64).exp();
        assert!((e.eval(2.0) - want).abs() < 1e-15);

        let e = GaussianEigenfunction::new(GaussianMode::Shrinker, 1.0, 2).unwrap();
        assert_eq!(e.eval(1.0), 0.0);
    }

    #[test]
    fn sign_mismatch_rejected() {
        assert!(GaussianEigenfunction::new(GaussianMode::Shrinker, -1.0, 0).is_err());
        assert!(GaussianEigenfunction::new(GaussianMode::Expander, 1.0, 0).is_err());
    }

    #[test]
    fn residual_constant_shrinker_mode() {
        let e = GaussianEigenfunction::new(GaussianMode::Shrinker, 1.0, 0).unwrap();
        let grid = SampleGrid::new(e.required_radius(), 1001).unwrap();
        assert_eq!(drift_residual(&e, &grid).unwrap(), 0.0);
    }

    #[test]
    fn residual_pure_gaussian_expander() {
        // u = exp(-y^2/2): u'' + y u' = -u, eigenvalue 1.
        let e = GaussianEigenfunction::new(GaussianMode::Expander, -1.0, 0).unwrap();
        assert_eq!(e.eigenvalue(), 1.0);
        let grid = SampleGrid::new(e.required_radius(), 1001).unwrap();
        assert!(drift_residual(&e, &grid).unwrap() <= 1e-12);
    }

    #[test]
    fn residual_higher_degree_expander() {
        let e = GaussianEigenfunction::new(GaussianMode::Expander, -2.0, 3).unwrap();
        assert_eq!(e.eigenvalue(), 8.0);
        let grid = SampleGrid::new(e.required_radius(), 2001).unwrap();
        assert!(drift_residual(&e, &grid).unwrap() <= 1e-8);
    }

    #[test]
    fn residual_sweep_both_modes() {
        for &rho in &[0.5, 1.0, 2.0] {
            for p in 0..=20u32 {
                let shr = GaussianEigenfunction::new(GaussianMode::Shrinker, rho, p).unwrap();
                let grid = SampleGrid::new(shr.required_radius(), 801).unwrap();
                let r = drift_residual(&shr, &grid).unwrap();
                assert!(r <= 1e-8, "shrinker rho={rho} p={p}: residual {r}");

                let exp = GaussianEigenfunction::new(GaussianMode::Expander, -rho, p).unwrap();
                let grid = SampleGrid::new(exp.required_radius(), 801).unwrap();
                let r = drift_residual(&exp, &grid).unwrap();
                assert!(r <= 1e-8, "expander rho={} p={p}: residual {r}", -rho);
            }
        }
    }

    #[test]
    fn residual_refuses_small_grid() {
        let e = GaussianEigenfunction::new(GaussianMode::Shrinker, 1.0, 20).unwrap();
        let grid = SampleGrid::new(4.0, 101).unwrap();
        assert!(drift_residual(&e, &grid).is_err());
    }

    #[test]
    fn quadrature_moments() {
        let rule = GaussHermiteRule::new(8).unwrap();
        // Moments of the standard Gaussian measure (unnormalized).
        assert!((rule.integrate(|_| 1.0) - SQRT_TWO_PI).abs() < 1e-13);
        assert!(rule.integrate(|x| x).abs() < 1e-13);
        assert!((rule.integrate(|x| x * x) - SQRT_TWO_PI).abs() < 1e-12);
        assert!((rule.integrate(|x| x * x * x * x) - 3.0 * SQRT_TWO_PI).abs() < 1e-12);
    }

    #[test]
    fn hermite_norm_against_factorial() {
        // integral He_p^2 exp(-x^2/2) dx = p! sqrt(2 pi).
        let mut factorial = 1.0f64;
        for p in 0..=10u32 {
            if p > 0 {
                factorial *= p as f64;
            }
            let rule = GaussHermiteRule::new((p + p + 2) as usize).unwrap();
            let got = rule.integrate(|x| {
                let h = he_eval_unchecked(p, x);
                h * h
            });
            let want = factorial * SQRT_TWO_PI;
            assert!(
                ((got - want) / want).abs() < 1e-12,
                "norm mismatch at p={p}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn inner_product_scaling_with_rho() {
        // <u_p, u_p> = p! sqrt(2 pi) / sqrt(rho) for shrinkers.
        let rho = 2.0;
        let e = GaussianEigenfunction::new(GaussianMode::Shrinker, rho, 3).unwrap();
        let got = weighted_inner_product(&e, &e).unwrap();
        let want = 6.0 * SQRT_TWO_PI / rho.sqrt();
        assert!(((got - want) / want).abs() < 1e-12);
    }

    #[test]
    fn inner_product_odd_pair_vanishes() {
        for (mode, rho) in [(GaussianMode::Shrinker, 1.0), (GaussianMode::Expander, -1.0)] {
            let a = GaussianEigenfunction::new(mode, rho, 0).unwrap();
            let b = GaussianEigenfunction::new(mode, rho, 1).unwrap();
            assert!(weighted_inner_product(&a, &b).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn inner_product_orthogonality_expander() {
        let a = GaussianEigenfunction::new(GaussianMode::Expander, -1.0, 2).unwrap();
        let b = GaussianEigenfunction::new(GaussianMode::Expander, -1.0, 4).unwrap();
        let na = weighted_inner_product(&a, &a).unwrap().sqrt();
        let nb = weighted_inner_product(&b, &b).unwrap().sqrt();
        let cross = weighted_inner_product(&a, &b).unwrap();
        assert!(cross.abs() <= 1e-10 * na * nb);
    }

    #[test]
    fn orthogonality_sweep() {
        for (mode, rho) in [(GaussianMode::Shrinker, 1.0), (GaussianMode::Expander, -1.0)] {
            let mut norms = Vec::new();
            for p in 0..=20u32 {
                let e = GaussianEigenfunction::new(mode, rho, p).unwrap();
                norms.push(weighted_inner_product(&e, &e).unwrap().sqrt());
            }
            for p in 0..=20u32 {
                for q in (p + 1)..=20u32 {
                    let a = GaussianEigenfunction::new(mode, rho, p).unwrap();
                    let b = GaussianEigenfunction::new(mode, rho, q).unwrap();
                    let cross = weighted_inner_product(&a, &b).unwrap();
                    let bound = 1e-10 * norms[p as usize] * norms[q as usize];
                    assert!(
                        cross.abs() <= bound,
                        "mode {mode:?}: <u_{p}, u_{q}> = {cross} exceeds {bound}"
                    );
                }
            }
        }
    }

    #[test]
    fn inner_product_mode_mismatch_rejected() {
        let a = GaussianEigenfunction::new(GaussianMode::Shrinker, 1.0, 0).unwrap();
        let b = GaussianEigenfunction::new(GaussianMode::Expander, -1.0, 0).unwrap();
        assert!(weighted_inner_product(&a, &b).is_err());
    }
}
