//! Genus-dependent upper bounds on the first nonzero Laplace eigenvalue
//! of closed hyperbolic surfaces, normalized through Gauss-Bonnet, and the
//! genus threshold below which the sharper bound drops under `-rho`.

use crate::error::{Result, SpectraError};

/// Closed surface of constant negative curvature `rho` and genus
/// `gamma >= 2`; the area is forced by Gauss-Bonnet.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceData {
    genus: u32,
    rho: f64,
}

impl SurfaceData {
    pub fn new(genus: u32, rho: f64) -> Result<Self> {
        if genus < 2 {
            return Err(SpectraError::InvalidInput(format!(
                "hyperbolic surface needs genus at least 2, got {genus}"
            )));
        }
        if !(rho < 0.0) || !rho.is_finite() {
            return Err(SpectraError::InvalidInput(format!(
                "surface curvature must be negative and finite, got {rho}"
            )));
        }
        Ok(Self { genus, rho })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `4 pi (gamma - 1) / (-rho)`.
    pub fn area(&self) -> f64 {
        4.0 * std::f64::consts::PI * (self.genus as f64 - 1.0) / (-self.rho)
    }
}

/// Genus-to-eigenvalue bound `2 (-rho) floor((gamma + 3) / 2) / (gamma - 1)`.
pub fn yang_yau_bound(s: &SurfaceData) -> f64 {
    let floor_term = ((s.genus + 3) / 2) as f64;
    2.0 * (-s.rho) * floor_term / (s.genus as f64 - 1.0)
}

/// Sharper genus bound with exact integer ceiling `ceil(5 gamma / 6)`:
/// `(-rho) (gamma + (33 - 4 sqrt(15)) ceil(5 gamma / 6) + 4 (41 - 5 sqrt(15)))
///  / (2 (13 - sqrt(15)) (gamma - 1))`.
pub fn kv_bound(s: &SurfaceData) -> f64 {
    let sqrt15 = 15.0f64.sqrt();
    let gamma = s.genus as f64;
    let ceil_term = ceil_5g_over_6(s.genus) as f64;
    let numerator = gamma + (33.0 - 4.0 * sqrt15) * ceil_term + 4.0 * (41.0 - 5.0 * sqrt15);
    let denominator = 2.0 * (13.0 - sqrt15) * (gamma - 1.0);
    (-s.rho) * numerator / denominator
}

fn ceil_5g_over_6(genus: u32) -> u64 {
    (5u64 * genus as u64).div_ceil(6)
}

/// Comparisons against `-rho` flag any genus whose margin falls below this
/// times `|rho|`.
pub const GUARD_BAND: f64 = 1e-12;

/// One genus row of the threshold report.
#[derive(Debug, Clone, Copy)]
pub struct GenusRow {
    pub genus: u32,
    pub yang_yau: f64,
    pub kv: f64,
    /// The smaller of the two bounds at this genus.
    pub best: f64,
    pub kv_below_minus_rho: bool,
    /// Margin `|kv - (-rho)|` is inside the floating-point guard band.
    pub within_guard_band: bool,
}

/// Outcome of scanning every genus up to `gamma_max`.
#[derive(Debug, Clone)]
pub struct GenusThresholdReport {
    pub rho: f64,
    pub gamma_max: u32,
    pub rows: Vec<GenusRow>,
    /// Whether `kv < -rho` holds for every genus from 46 up.
    pub sufficient_threshold_holds: bool,
    /// Smallest genus from which `kv < -rho` holds through `gamma_max`.
    pub minimal_genus: Option<u32>,
    /// All genera below the minimal one where the inequality fails.
    pub failing_below_minimal: Vec<u32>,
    /// Whether the coarser bound stays above `-rho` everywhere, so it can
    /// never decide the question.
    pub yang_yau_always_above: bool,
}

pub fn genus_threshold(rho: f64, gamma_max: u32) -> Result<GenusThresholdReport> {
    if !(rho < 0.0) || !rho.is_finite() {
        return Err(SpectraError::InvalidInput(format!(
            "genus threshold needs rho < 0, got {rho}"
        )));
    }
    if gamma_max < 46 {
        return Err(SpectraError::InvalidInput(format!(
            "gamma_max must be at least 46, got {gamma_max}"
        )));
    }
    let minus_rho = -rho;
    let guard = GUARD_BAND * rho.abs();
    let mut rows = Vec::with_capacity((gamma_max - 1) as usize);
    for genus in 2..=gamma_max {
        let s = SurfaceData::new(genus, rho)?;
        let yy = yang_yau_bound(&s);
        let kv = kv_bound(&s);
        rows.push(GenusRow {
            genus,
            yang_yau: yy,
            kv,
            best: yy.min(kv),
            kv_below_minus_rho: kv < minus_rho,
            within_guard_band: (kv - minus_rho).abs() < guard,
        });
    }

    let sufficient_threshold_holds = rows
        .iter()
        .filter(|r| r.genus >= 46)
        .all(|r| r.kv_below_minus_rho);
    // Smallest genus from which the inequality holds without re-crossing.
    let minimal_genus = rows
        .iter()
        .rev()
        .take_while(|r| r.kv_below_minus_rho)
        .last()
        .map(|r| r.genus);
    let failing_below_minimal = match minimal_genus {
        Some(g) => rows
            .iter()
            .filter(|r| r.genus < g && !r.kv_below_minus_rho)
            .map(|r| r.genus)
            .collect(),
        None => rows.iter().map(|r| r.genus).collect(),
    };
    let yang_yau_always_above = rows.iter().all(|r| r.yang_yau > minus_rho);
    Ok(GenusThresholdReport {
        rho,
        gamma_max,
        rows,
        sufficient_threshold_holds,
        minimal_genus,
        failing_below_minimal,
        yang_yau_always_above,
    })
}
