//! Drift-Laplacian spectra of rigid solitons `N^k x R^(n-k)` with
//! potential `f(y) = (rho/2) |y|^2`.
//!
//! Every eigenvalue is `mu_j + rho P` on shrinkers and
//! `mu_j + |rho| (n - k + P)` on expanders, where `mu_j` runs over the
//! factor spectrum and `P` over total Gaussian degrees; the multiplicity
//! of the `(j, P)` block is `mult(mu_j) C(P + m - 1, m - 1)` with
//! `m = n - k`. The enumeration is certified complete below a cutoff
//! derived from the factor's own certification.

use std::fmt;

use crate::comb::binomial;
use crate::error::{Result, SpectraError};
use crate::factor::FactorSpectrum;
use crate::scalar::ScalarValue;
use crate::spectrum::{DiscreteSpectrum, Provenance, SpectralLine};

/// A rigid soliton model: compact Einstein factor times a Gaussian factor.
#[derive(Debug, Clone)]
pub struct SolitonModel {
    factor: FactorSpectrum,
    total_dim: u32,
    rho: f64,
}

impl SolitonModel {
    pub fn new(factor: FactorSpectrum, total_dim: u32, rho: f64) -> Result<Self> {
        if factor.rho() != rho {
            return Err(SpectraError::InvalidInput(format!(
                "factor Einstein constant {} differs from soliton constant {rho}",
                factor.rho()
            )));
        }
        if rho == 0.0 || !rho.is_finite() {
            return Err(SpectraError::InvalidInput(format!(
                "soliton constant must be finite and nonzero, got {rho}"
            )));
        }
        if total_dim <= factor.dim() {
            return Err(SpectraError::InvalidInput(format!(
                "total dimension {total_dim} must exceed factor dimension {}",
                factor.dim()
            )));
        }
        Ok(Self {
            factor,
            total_dim,
            rho,
        })
    }

    pub fn factor(&self) -> &FactorSpectrum {
        &self.factor
    }

    /// Total dimension `n`.
    pub fn total_dim(&self) -> u32 {
        self.total_dim
    }

    /// Factor dimension `k`.
    pub fn factor_dim(&self) -> u32 {
        self.factor.dim()
    }

    /// Gaussian dimension `m = n - k`.
    pub fn gaussian_dim(&self) -> u32 {
        self.total_dim - self.factor.dim()
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn is_expander(&self) -> bool {
        self.rho < 0.0
    }

    /// Largest cutoff for which the enumeration is certified complete:
    /// the factor certification shifted by the expander ground offset.
    pub fn certified_cutoff_bound(&self) -> f64 {
        let offset = if self.is_expander() {
            self.rho.abs() * self.gaussian_dim() as f64
        } else {
            0.0
        };
        self.factor.complete_below() + offset
    }

    /// One representative eigenfunction for a `(j, P)` block.
    pub fn eigenfunction_descriptor(&self, provenance: Provenance) -> EigenfunctionDescriptor {
        let m = self.gaussian_dim() as usize;
        let mut multi_index = vec![0u32; m];
        multi_index[0] = provenance.gaussian_degree;
        EigenfunctionDescriptor {
            factor_index: provenance.factor_index,
            total_degree: provenance.gaussian_degree,
            multi_index,
        }
    }
}

/// Representative eigenfunction data: factor eigenvalue index plus one
/// multi-index of Hermite degrees summing to the block degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenfunctionDescriptor {
    pub factor_index: u32,
    pub total_degree: u32,
    pub multi_index: Vec<u32>,
}

impl EigenfunctionDescriptor {
    pub fn degree_sum(&self) -> u32 {
        self.multi_index.iter().sum()
    }
}

/// Full drift-Laplacian spectrum of the model below `cutoff`.
pub fn rigid_spectrum(model: &SolitonModel, cutoff: f64) -> Result<DiscreteSpectrum> {
    let bound = model.certified_cutoff_bound();
    if !(cutoff.is_finite() && cutoff <= bound) {
        return Err(SpectraError::IncompleteSpectrum {
            cutoff: bound,
            detail: format!("requested cutoff {cutoff} exceeds the certified bound {bound}"),
        });
    }
    let unit = model.rho.abs();
    let m = model.gaussian_dim() as u64;
    let base = if model.is_expander() { m } else { 0 };

    let mut lines = Vec::new();
    for (j, factor_line) in model.factor.spectrum().lines().iter().enumerate() {
        let mut p: u64 = 0;
        loop {
            let shift = ScalarValue::exact_int((base + p) as i64, unit)?;
            let value = factor_line.value().add(&shift)?;
            if value.value() >= cutoff {
                if p == 0 {
                    // Every later factor eigenvalue starts even higher.
                    return DiscreteSpectrum::merge_lines(lines, cutoff);
                }
                break;
            }
            let block = binomial(p + m - 1, m - 1)?;
            let mult = factor_line.multiplicity().checked_mul(block).ok_or(
                SpectraError::MultiplicityOverflow(format!("line (j={j}, P={p})")),
            )?;
            lines.push(SpectralLine::with_provenance(
                value,
                mult,
                vec![Provenance {
                    factor_index: j as u32,
                    gaussian_degree: p as u32,
                }],
            )?);
            p += 1;
        }
    }
    DiscreteSpectrum::merge_lines(lines, cutoff)
}

/// Which block realizes the second eigenvalue of an expander.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondEigenvalueCase {
    /// The factor gap exceeds `-rho`: the degree-one Gaussian block wins.
    Gaussian,
    /// The factor gap equals `-rho`: both blocks coincide.
    Mixed,
    /// The factor gap is below `-rho`: the factor block wins.
    Factor,
}

impl fmt::Display for SecondEigenvalueCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            SecondEigenvalueCase::Gaussian => "gaussian",
            SecondEigenvalueCase::Mixed => "mixed",
            SecondEigenvalueCase::Factor => "factor",
        };
        f.write_str(tag)
    }
}

/// Second eigenvalue of a rigid expander with value, multiplicity and the
/// case of the trichotomy it falls in.
#[derive(Debug, Clone)]
pub struct SecondEigenvalue {
    pub value: ScalarValue,
    pub multiplicity: u64,
    pub case: SecondEigenvalueCase,
}

/// Trichotomy for the second eigenvalue of a rigid expander:
/// `lambda_2 = min(-rho (m + 1), lambda_2(N) - rho m)` with the
/// multiplicity of whichever blocks attain the minimum.
pub fn second_eigenvalue_case(model: &SolitonModel) -> Result<SecondEigenvalue> {
    if !model.is_expander() {
        return Err(SpectraError::InvalidInput(
            "second-eigenvalue trichotomy applies to expanders (rho < 0)".into(),
        ));
    }
    let second = model
        .factor
        .second_line()
        .ok_or(SpectraError::IncompleteSpectrum {
            cutoff: model.factor.complete_below(),
            detail: "factor spectrum certifies no second eigenvalue".into(),
        })?;
    let unit = model.rho.abs();
    let m = model.gaussian_dim() as u64;
    let lambda2_factor = second.value();
    let minus_rho = ScalarValue::exact_int(1, unit)?;

    let (value, multiplicity, case) = if lambda2_factor.coincides_with(&minus_rho) {
        (
            ScalarValue::exact_int((m + 1) as i64, unit)?,
            m + second.multiplicity(),
            SecondEigenvalueCase::Mixed,
        )
    } else if lambda2_factor.value() > minus_rho.value() {
        (
            ScalarValue::exact_int((m + 1) as i64, unit)?,
            m,
            SecondEigenvalueCase::Gaussian,
        )
    } else {
        (
            lambda2_factor.add(&ScalarValue::exact_int(m as i64, unit)?)?,
            second.multiplicity(),
            SecondEigenvalueCase::Factor,
        )
    };
    Ok(SecondEigenvalue {
        value,
        multiplicity,
        case,
    })
}

/// Result of checking `S + |grad f|^2 - 2 rho f = C` on a sample grid.
#[derive(Debug, Clone)]
pub struct NormalizationCheck {
    /// The constant `C = k rho`.
    pub constant: f64,
    /// Largest pointwise deviation of the combination from the constant.
    pub max_deviation: f64,
    /// Largest magnitude among the combined terms, for scaling the
    /// machine-precision claim.
    pub term_scale: f64,
    pub samples: usize,
}

/// Evaluate the normalization identity on the model: symbolically
/// `S = k rho`, `|grad f|^2 = rho^2 r^2` and `2 rho f = rho^2 r^2`, so the
/// constant is `k rho`; the grid check recomputes each term separately.
pub fn normalization_constant(
    model: &SolitonModel,
    radius: f64,
    samples: usize,
) -> Result<NormalizationCheck> {
    if !(radius > 0.0) || samples < 2 {
        return Err(SpectraError::InvalidInput(format!(
            "normalization check needs radius > 0 and at least 2 samples, got {radius}, {samples}"
        )));
    }
    let rho = model.rho;
    let k = model.factor_dim() as f64;
    let scalar_curvature = k * rho;
    let constant = k * rho;

    let mut max_deviation = 0.0f64;
    let mut term_scale = scalar_curvature.abs();
    let step = radius / (samples - 1) as f64;
    for i in 0..samples {
        let r = step * i as f64;
        let grad_sq = (rho * r) * (rho * r);
        let two_rho_f = 2.0 * rho * (0.5 * rho * r * r);
        let combined = scalar_curvature + grad_sq - two_rho_f;
        max_deviation = max_deviation.max((combined - constant).abs());
        term_scale = term_scale.max(grad_sq.abs()).max(two_rho_f.abs());
    }
    Ok(NormalizationCheck {
        constant,
        max_deviation,
        term_scale,
        samples,
    })
}

/// Profile of the potential `V = (1/4)(2 n rho - S - C) - (1/2) rho f`
/// along the Gaussian radius.
#[derive(Debug, Clone)]
pub struct PotentialProfile {
    pub v_at_zero: f64,
    pub v_at_radius: f64,
    /// True when the profile is monotone decreasing in the radius and has
    /// dropped by more than one unit at the boundary.
    pub diverges: bool,
    pub values: Vec<(f64, f64)>,
}

pub fn schrodinger_potential(
    model: &SolitonModel,
    y_radius: f64,
    samples: usize,
) -> Result<PotentialProfile> {
    if samples < 2 {
        return Err(SpectraError::InvalidInput(
            "potential profile needs at least 2 samples".into(),
        ));
    }
    if !(y_radius > 0.0) {
        return Err(SpectraError::InvalidInput(format!(
            "potential profile needs a positive radius, got {y_radius}"
        )));
    }
    let rho = model.rho;
    let n = model.total_dim() as f64;
    let k = model.factor_dim() as f64;
    let s = k * rho;
    let c = k * rho;
    let potential = |r: f64| 0.25 * (2.0 * n * rho - s - c) - 0.5 * rho * (0.5 * rho * r * r);

    let step = y_radius / (samples - 1) as f64;
    let values: Vec<(f64, f64)> = (0..samples)
        .map(|i| {
            let r = step * i as f64;
            (r, potential(r))
        })
        .collect();
    let monotone = values.windows(2).all(|w| w[1].1 <= w[0].1);
    let v_at_zero = values[0].1;
    let v_at_radius = values[samples - 1].1;
    Ok(PotentialProfile {
        v_at_zero,
        v_at_radius,
        diverges: monotone && v_at_radius < v_at_zero - 1.0,
        values,
    })
}

/// Status of the quadratic lower bound on `-f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LowerBoundStatus {
    /// Two-sided quadratic bound holds with both constants zero.
    HoldsExactly,
    /// The leading coefficient is negative, so the bound carries no
    /// information on this model.
    Vacuous { coefficient: f64 },
}

/// Growth of the potential along the Euclidean factor, where the distance
/// from the axis is exactly the Gaussian radius.
#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub ratio_sup: f64,
    pub ratio_inf: f64,
    /// The exact value `-rho / 2` both extremes must equal.
    pub expected_ratio: f64,
    pub ratio_exact: bool,
    pub upper_bound_holds: bool,
    pub lower_bound: LowerBoundStatus,
}

const GROWTH_SAMPLES: usize = 1024;

pub fn potential_growth_check(model: &SolitonModel, radius: f64) -> Result<GrowthReport> {
    if !(radius > 0.0) {
        return Err(SpectraError::InvalidInput(format!(
            "growth check needs a positive radius, got {radius}"
        )));
    }
    let rho = model.rho;
    let expected = -0.5 * rho;
    let mut sup = f64::MIN;
    let mut inf = f64::MAX;
    let step = radius / GROWTH_SAMPLES as f64;
    for i in 1..=GROWTH_SAMPLES {
        let r = step * i as f64;
        let rr = r * r;
        let neg_f = -(0.5 * rho * rr);
        let ratio = neg_f / rr;
        sup = sup.max(ratio);
        inf = inf.min(ratio);
    }
    let ratio_exact = sup == expected && inf == expected;
    // Upper bound -f <= (-rho/2)(r + c2)^2 with c2 = 0.
    let upper_bound_holds = sup <= expected;
    // Lower bound coefficient eta - rho/2: the Ricci lower bound of the
    // product is eta = min(rho, 0).
    let lower_bound = if model.is_expander() {
        let coefficient = rho - 0.5 * rho;
        if coefficient > 0.0 {
            LowerBoundStatus::HoldsExactly
        } else {
            LowerBoundStatus::Vacuous { coefficient }
        }
    } else {
        LowerBoundStatus::HoldsExactly
    };
    Ok(GrowthReport {
        ratio_sup: sup,
        ratio_inf: inf,
        expected_ratio: expected,
        ratio_exact,
        upper_bound_holds,
        lower_bound,
    })
}
