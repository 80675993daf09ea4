//! Spectra of compact Einstein factors: round spheres analytically,
//! anything else (hyperbolic surfaces, synthetic data) ingested from a
//! JSON document and validated.

use serde::{Deserialize, Serialize};

use crate::comb::binomial;
use crate::error::{Result, SpectraError};
use crate::scalar::ScalarValue;
use crate::spectrum::{DiscreteSpectrum, SpectralLine};

/// Slack for the Lichnerowicz validation of ingested spectra.
const LICHNEROWICZ_SLACK: f64 = 1e-9;

/// Eigenvalue/multiplicity list of a compact factor's Laplacian together
/// with the Einstein constant `rho` (`Ric_N = rho g_N`) and dimension.
#[derive(Debug, Clone)]
pub struct FactorSpectrum {
    name: String,
    dim: u32,
    rho: f64,
    spectrum: DiscreteSpectrum,
}

impl FactorSpectrum {
    /// Validate and wrap an already-merged spectrum.
    pub fn new(name: String, dim: u32, rho: f64, spectrum: DiscreteSpectrum) -> Result<Self> {
        let candidate = Self {
            name,
            dim,
            rho,
            spectrum,
        };
        let violations = candidate.violations();
        if violations.is_empty() {
            Ok(candidate)
        } else {
            Err(SpectraError::InvalidSpectrumFile { violations })
        }
    }

    /// Factor carrying only the constant eigenfunction; used for models
    /// whose spectrum is purely Gaussian.
    pub fn trivial(name: &str, dim: u32, rho: f64, complete_below: f64) -> Result<Self> {
        let zero = SpectralLine::new(ScalarValue::exact_int(0, rho.abs())?, 1)?;
        let spectrum = DiscreteSpectrum::merge_lines(vec![zero], complete_below)?;
        Self::new(name.to_string(), dim, rho, spectrum)
    }

    fn violations(&self) -> Vec<String> {
        let mut violations = Vec::new();
        if self.dim == 0 {
            violations.push("dim must be at least 1".into());
        }
        if !self.rho.is_finite() || self.rho == 0.0 {
            violations.push(format!("rho must be finite and nonzero, got {}", self.rho));
        }
        if !self.spectrum.complete_below().is_finite() {
            violations.push("complete_below must be finite".into());
        }
        let lines = self.spectrum.lines();
        match lines.first() {
            None => violations.push("spectrum must contain the zero eigenvalue".into()),
            Some(first) => {
                if first.value().value() != 0.0 {
                    violations.push(format!(
                        "first eigenvalue must be 0, got {}",
                        first.value().value()
                    ));
                } else if first.multiplicity() != 1 {
                    violations.push(format!(
                        "zero eigenvalue must be simple, got multiplicity {}",
                        first.multiplicity()
                    ));
                }
            }
        }
        if lines.iter().any(|l| l.value().value() < 0.0) {
            violations.push("eigenvalues must be nonnegative".into());
        }
        if self.rho > 0.0 && self.dim >= 2 {
            if let Some(second) = lines.get(1) {
                let bound = self.dim as f64 * self.rho / (self.dim as f64 - 1.0);
                if second.value().value() < bound - LICHNEROWICZ_SLACK {
                    violations.push(format!(
                        "Lichnerowicz violation: second eigenvalue {} below {bound}",
                        second.value().value()
                    ));
                }
            }
        }
        violations
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn spectrum(&self) -> &DiscreteSpectrum {
        &self.spectrum
    }

    pub fn complete_below(&self) -> f64 {
        self.spectrum.complete_below()
    }

    /// Smallest nonzero eigenvalue, when certified.
    pub fn second_line(&self) -> Option<&SpectralLine> {
        self.spectrum.lines().get(1)
    }
}

/// Analytic spectrum of the round sphere `S^k` normalized so that
/// `Ric = rho g`: eigenvalues `j (j + k - 1) rho / (k - 1)` with the
/// harmonic-polynomial multiplicities, exact rationals times `rho`.
pub fn sphere_spectrum(k: u32, rho: f64, cutoff: f64) -> Result<FactorSpectrum> {
    if k < 2 {
        return Err(SpectraError::InvalidInput(format!(
            "sphere factor needs dimension at least 2, got {k}"
        )));
    }
    if !(rho > 0.0) {
        return Err(SpectraError::InvalidInput(format!(
            "sphere factor needs rho > 0, got {rho}"
        )));
    }
    if !(cutoff > 0.0) || !cutoff.is_finite() {
        return Err(SpectraError::InvalidInput(format!(
            "cutoff must be positive and finite, got {cutoff}"
        )));
    }

    let mut lines = Vec::new();
    let mut j: u64 = 0;
    loop {
        let numer = i64::try_from(j * (j + k as u64 - 1))
            .map_err(|_| SpectraError::InvalidInput("sphere eigenvalue index overflow".into()))?;
        let value = ScalarValue::exact_ratio(numer, (k - 1) as i64, rho)?;
        if value.value() >= cutoff {
            break;
        }
        let mult = binomial(j + k as u64, k as u64)?
            .checked_sub(binomial(j + k as u64 - 2, k as u64)?)
            .expect("harmonic multiplicities are positive");
        lines.push(SpectralLine::with_provenance(
            value,
            mult,
            vec![crate::spectrum::Provenance {
                factor_index: j as u32,
                gaussian_degree: 0,
            }],
        )?);
        j += 1;
    }
    let spectrum = DiscreteSpectrum::merge_lines(lines, cutoff)?;
    FactorSpectrum::new(format!("sphere:k={k}"), k, rho, spectrum)
}

/// Bottom of the spectrum of `-Delta` on hyperbolic space `H^k` with
/// `Ric = rho g`, `rho < 0`: the nonnegative number `-(k - 1) rho / 4`.
pub fn hyperbolic_bottom(k: u32, rho: f64) -> Result<f64> {
    if k < 2 {
        return Err(SpectraError::InvalidInput(format!(
            "hyperbolic space needs dimension at least 2, got {k}"
        )));
    }
    if !(rho < 0.0) {
        return Err(SpectraError::InvalidInput(format!(
            "hyperbolic space needs rho < 0, got {rho}"
        )));
    }
    Ok(-(k as f64 - 1.0) * rho / 4.0)
}

/// On-disk spectrum document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumFile {
    pub name: String,
    pub dim: u32,
    pub rho: f64,
    pub eigenvalues: Vec<SpectrumFileLine>,
    pub complete_below: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumFileLine {
    pub value: f64,
    pub multiplicity: u64,
}

/// Parse and validate a factor-spectrum document. Rejection lists every
/// violated invariant, not just the first.
pub fn load_factor_spectrum(document: &str) -> Result<FactorSpectrum> {
    let file: SpectrumFile =
        serde_json::from_str(document).map_err(|e| SpectraError::Parse(e.to_string()))?;
    factor_from_file(&file)
}

fn factor_from_file(file: &SpectrumFile) -> Result<FactorSpectrum> {
    let mut violations = Vec::new();
    for (i, line) in file.eigenvalues.iter().enumerate() {
        if !line.value.is_finite() {
            violations.push(format!("eigenvalue {i} is not finite"));
        }
        if line.multiplicity == 0 {
            violations.push(format!("eigenvalue {i} has zero multiplicity"));
        }
        if i > 0 && line.value <= file.eigenvalues[i - 1].value {
            violations.push(format!(
                "eigenvalues must be strictly ascending: entry {i} ({}) after {}",
                line.value,
                file.eigenvalues[i - 1].value
            ));
        }
        if line.value >= file.complete_below {
            violations.push(format!(
                "eigenvalue {} is not below complete_below {}",
                line.value, file.complete_below
            ));
        }
    }
    if !violations.is_empty() {
        return Err(SpectraError::InvalidSpectrumFile { violations });
    }

    let unit = file.rho.abs();
    let mut lines = Vec::with_capacity(file.eigenvalues.len());
    for (i, entry) in file.eigenvalues.iter().enumerate() {
        lines.push(SpectralLine::with_provenance(
            ScalarValue::numeric(entry.value, unit)?,
            entry.multiplicity,
            vec![crate::spectrum::Provenance {
                factor_index: i as u32,
                gaussian_degree: 0,
            }],
        )?);
    }
    let spectrum = DiscreteSpectrum::merge_lines(lines, file.complete_below)?;
    FactorSpectrum::new(file.name.clone(), file.dim, file.rho, spectrum)
}

/// Serialize back to the document format; `load . write` is the identity
/// on valid documents.
pub fn write_factor_spectrum(factor: &FactorSpectrum) -> String {
    let file = SpectrumFile {
        name: factor.name().to_string(),
        dim: factor.dim(),
        rho: factor.rho(),
        eigenvalues: factor
            .spectrum()
            .lines()
            .iter()
            .map(|l| SpectrumFileLine {
                value: l.value().value(),
                multiplicity: l.multiplicity(),
            })
            .collect(),
        complete_below: factor.complete_below(),
    };
    serde_json::to_string_pretty(&file).expect("spectrum documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_s2_first_lines() {
        let s = sphere_spectrum(2, 1.0, 13.0).unwrap();
        let got: Vec<(f64, u64)> = s
            .spectrum()
            .lines()
            .iter()
            .map(|l| (l.value().value(), l.multiplicity()))
            .collect();
        assert_eq!(got, vec![(0.0, 1), (2.0, 3), (6.0, 5), (12.0, 7)]);
        assert!(s.spectrum().lines().iter().all(|l| l.value().is_exact()));
    }

    #[test]
    fn sphere_s3_multiplicities_are_squares() {
        let s = sphere_spectrum(3, 2.0, 50.0).unwrap();
        for (j, line) in s.spectrum().lines().iter().enumerate() {
            let j = j as u64;
            assert_eq!(line.multiplicity(), (j + 1) * (j + 1));
        }
    }

    #[test]
    fn sphere_lichnerowicz_equality_anchor() {
        // mu_1 = k rho / (k - 1) exactly, the round-sphere equality case.
        let s = sphere_spectrum(3, 2.0, 50.0).unwrap();
        assert_eq!(s.second_line().unwrap().value().value(), 3.0);
    }

    #[test]
    fn sphere_cutoff_excludes_boundary_line() {
        // For S^2 with rho = 1 the line at 6 must be excluded by cutoff 6.
        let s = sphere_spectrum(2, 1.0, 6.0).unwrap();
        assert_eq!(s.spectrum().lines().len(), 2);
        let s = sphere_spectrum(2, 1.0, 6.0 + 1e-9).unwrap();
        assert_eq!(s.spectrum().lines().len(), 3);
    }

    #[test]
    fn sphere_rejects_circles_and_bad_rho() {
        assert!(sphere_spectrum(1, 1.0, 5.0).is_err());
        assert!(sphere_spectrum(2, -1.0, 5.0).is_err());
        assert!(sphere_spectrum(2, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn bolza_like_file_accepted() {
        let doc = r#"{
            "name": "bolza",
            "dim": 2,
            "rho": -1.0,
            "eigenvalues": [
                {"value": 0.0, "multiplicity": 1},
                {"value": 3.8, "multiplicity": 3}
            ],
            "complete_below": 4.0
        }"#;
        let f = load_factor_spectrum(doc).unwrap();
        assert_eq!(f.dim(), 2);
        assert_eq!(f.second_line().unwrap().value().value(), 3.8);
        assert!(!f.second_line().unwrap().value().is_exact());
    }

    #[test]
    fn file_without_zero_mode_rejected() {
        let doc = r#"{
            "name": "bad",
            "dim": 2,
            "rho": -1.0,
            "eigenvalues": [{"value": 0.5, "multiplicity": 1}],
            "complete_below": 4.0
        }"#;
        match load_factor_spectrum(doc).unwrap_err() {
            SpectraError::InvalidSpectrumFile { violations } => {
                assert!(violations.iter().any(|v| v.contains("must be 0")));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn lichnerowicz_violation_rejected() {
        let doc = r#"{
            "name": "bad-sphere",
            "dim": 2,
            "rho": 1.0,
            "eigenvalues": [
                {"value": 0.0, "multiplicity": 1},
                {"value": 1.5, "multiplicity": 3}
            ],
            "complete_below": 4.0
        }"#;
        match load_factor_spectrum(doc).unwrap_err() {
            SpectraError::InvalidSpectrumFile { violations } => {
                assert!(violations.iter().any(|v| v.contains("Lichnerowicz")));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejection_lists_every_violation() {
        let doc = r#"{
            "name": "bad",
            "dim": 2,
            "rho": 1.0,
            "eigenvalues": [
                {"value": 0.5, "multiplicity": 1},
                {"value": 0.1, "multiplicity": 0}
            ],
            "complete_below": 4.0
        }"#;
        match load_factor_spectrum(doc).unwrap_err() {
            SpectraError::InvalidSpectrumFile { violations } => {
                assert!(violations.len() >= 2, "got {violations:?}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn missing_complete_below_rejected() {
        let doc = r#"{
            "name": "bad",
            "dim": 2,
            "rho": -1.0,
            "eigenvalues": [{"value": 0.0, "multiplicity": 1}]
        }"#;
        assert!(matches!(
            load_factor_spectrum(doc),
            Err(SpectraError::Parse(_))
        ));
    }

    #[test]
    fn write_then_load_round_trip() {
        let doc = r#"{
            "name": "bolza",
            "dim": 2,
            "rho": -1.0,
            "eigenvalues": [
                {"value": 0.0, "multiplicity": 1},
                {"value": 3.8, "multiplicity": 3}
            ],
            "complete_below": 4.0
        }"#;
        let first = load_factor_spectrum(doc).unwrap();
        let reloaded = load_factor_spectrum(&write_factor_spectrum(&first)).unwrap();
        assert_eq!(first.name(), reloaded.name());
        assert_eq!(first.dim(), reloaded.dim());
        assert_eq!(first.rho().to_bits(), reloaded.rho().to_bits());
        assert_eq!(
            first.complete_below().to_bits(),
            reloaded.complete_below().to_bits()
        );
        for (a, b) in first
            .spectrum()
            .lines()
            .iter()
            .zip(reloaded.spectrum().lines())
        {
            assert_eq!(a.value().value().to_bits(), b.value().value().to_bits());
            assert_eq!(a.multiplicity(), b.multiplicity());
        }
    }

    #[test]
    fn hyperbolic_bottom_values() {
        assert_eq!(hyperbolic_bottom(2, -1.0).unwrap(), 0.25);
        // Ric = -2 g on H^3 means curvature -1, bottom (k-1)^2/4 = 1.
        assert_eq!(hyperbolic_bottom(3, -2.0).unwrap(), 1.0);
        assert!(hyperbolic_bottom(2, 0.0).is_err());
        assert!(hyperbolic_bottom(2, 1.0).is_err());
        assert!(hyperbolic_bottom(1, -1.0).is_err());
    }

    #[test]
    fn trivial_factor_has_single_line() {
        let f = FactorSpectrum::trivial("point", 1, -1.0, 100.0).unwrap();
        assert_eq!(f.spectrum().lines().len(), 1);
        assert_eq!(f.spectrum().lines()[0].multiplicity(), 1);
    }
}
