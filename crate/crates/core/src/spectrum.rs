//! Sorted-multiset spectrum type and the product-spectrum enumerator.
//!
//! A `DiscreteSpectrum` stores strictly increasing spectral lines together
//! with a certified cutoff: the multiset is complete below `complete_below`
//! and says nothing above it. The Minkowski sum of two spectra is
//! enumerated lazily through a priority-queue frontier and re-certified
//! with the largest cutoff the inputs support.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Result, SpectraError};
use crate::scalar::ScalarValue;

/// Where a spectral line comes from: index of the factor eigenvalue and
/// total degree of the Gaussian-factor eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Provenance {
    pub factor_index: u32,
    pub gaussian_degree: u32,
}

/// One eigenvalue with multiplicity.
///
/// Lines that coincide under the scalar equality predicate are merged;
/// a merged line keeps every contributing provenance entry, so accidental
/// coincidences across distinct origins stay visible.
#[derive(Debug, Clone)]
pub struct SpectralLine {
    value: ScalarValue,
    multiplicity: u64,
    provenance: Vec<Provenance>,
}

impl SpectralLine {
    pub fn new(value: ScalarValue, multiplicity: u64) -> Result<Self> {
        Self::with_provenance(value, multiplicity, Vec::new())
    }

    pub fn with_provenance(
        value: ScalarValue,
        multiplicity: u64,
        provenance: Vec<Provenance>,
    ) -> Result<Self> {
        if multiplicity == 0 {
            return Err(SpectraError::InvalidInput(
                "multiplicity must be positive".into(),
            ));
        }
        Ok(Self {
            value,
            multiplicity,
            provenance,
        })
    }

    pub fn value(&self) -> &ScalarValue {
        &self.value
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn provenance(&self) -> &[Provenance] {
        &self.provenance
    }

    /// Sort key: value first, provenance as deterministic tie-break.
    fn order(&self, other: &Self) -> Ordering {
        self.value
            .order(&other.value)
            .then_with(|| self.first_provenance().cmp(&other.first_provenance()))
    }

    fn first_provenance(&self) -> (u32, u32) {
        self.provenance
            .first()
            .map(|p| (p.factor_index, p.gaussian_degree))
            .unwrap_or((u32::MAX, u32::MAX))
    }

    fn absorb(&mut self, other: SpectralLine) -> Result<()> {
        self.multiplicity = self.multiplicity.checked_add(other.multiplicity).ok_or(
            SpectraError::MultiplicityOverflow("merged multiplicity".into()),
        )?;
        self.provenance.extend(other.provenance);
        self.provenance.sort_unstable();
        self.provenance.dedup();
        Ok(())
    }
}

/// Sorted multiset of spectral lines, complete below a certified cutoff.
#[derive(Debug, Clone)]
pub struct DiscreteSpectrum {
    lines: Vec<SpectralLine>,
    complete_below: f64,
}

impl DiscreteSpectrum {
    /// Merge raw lines into a spectrum: coinciding values are combined by
    /// summing multiplicities, the result is sorted, and lines at or above
    /// `cutoff` are dropped.
    pub fn merge_lines(lines: Vec<SpectralLine>, cutoff: f64) -> Result<Self> {
        if !cutoff.is_finite() {
            return Err(SpectraError::InvalidInput("cutoff must be finite".into()));
        }
        let mut kept: Vec<SpectralLine> = lines
            .into_iter()
            .filter(|line| line.value.value() < cutoff)
            .collect();
        kept.sort_by(|a, b| a.order(b));

        let mut merged: Vec<SpectralLine> = Vec::with_capacity(kept.len());
        for line in kept {
            match merged.last_mut() {
                Some(head) if head.value.coincides_with(&line.value) => head.absorb(line)?,
                _ => merged.push(line),
            }
        }
        Ok(Self {
            lines: merged,
            complete_below: cutoff,
        })
    }

    pub fn lines(&self) -> &[SpectralLine] {
        &self.lines
    }

    pub fn complete_below(&self) -> f64 {
        self.complete_below
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Smallest line, if any.
    pub fn min_line(&self) -> Option<&SpectralLine> {
        self.lines.first()
    }

    /// First `k` distinct lines; refuses when the request reaches past the
    /// certified cutoff.
    pub fn enumerate_up_to(&self, k: usize) -> Result<&[SpectralLine]> {
        if k == 0 {
            return Err(SpectraError::InvalidInput("k must be positive".into()));
        }
        if k > self.lines.len() {
            return Err(SpectraError::IncompleteSpectrum {
                cutoff: self.complete_below,
                detail: format!(
                    "requested {k} distinct lines but only {} are certified",
                    self.lines.len()
                ),
            });
        }
        Ok(&self.lines[..k])
    }

    /// Minkowski sum: every pairwise sum of lines with product
    /// multiplicities, certified below
    /// `min(a.cutoff + min(b), b.cutoff + min(a))`.
    pub fn minkowski_sum(&self, other: &DiscreteSpectrum) -> Result<DiscreteSpectrum> {
        let min_a = self.min_line().ok_or(SpectraError::EmptySpectrum)?;
        let min_b = other.min_line().ok_or(SpectraError::EmptySpectrum)?;
        let cutoff = (self.complete_below + min_b.value.value())
            .min(other.complete_below + min_a.value.value());

        // Lattice frontier: seed (0,0); popping (i,j) pushes (i,j+1)
        // always and (i+1,j) only while j == 0, so each pair appears
        // exactly once.
        let mut heap: BinaryHeap<FrontierEntry> = BinaryHeap::new();
        heap.push(FrontierEntry::new(self, other, 0, 0)?);

        let mut out: Vec<SpectralLine> = Vec::new();
        while let Some(entry) = heap.pop() {
            if entry.value >= cutoff {
                break;
            }
            let (i, j) = (entry.i, entry.j);
            let line_a = &self.lines[i];
            let line_b = &other.lines[j];
            let mult = line_a
                .multiplicity
                .checked_mul(line_b.multiplicity)
                .ok_or(SpectraError::MultiplicityOverflow(
                    "product multiplicity".into(),
                ))?;
            let sum = line_a.value.add(&line_b.value)?;
            let line = SpectralLine::new(sum, mult)?;
            match out.last_mut() {
                Some(head) if head.value.coincides_with(&line.value) => head.absorb(line)?,
                _ => out.push(line),
            }

            if j + 1 < other.lines.len() {
                heap.push(FrontierEntry::new(self, other, i, j + 1)?);
            }
            if j == 0 && i + 1 < self.lines.len() {
                heap.push(FrontierEntry::new(self, other, i + 1, 0)?);
            }
        }
        Ok(DiscreteSpectrum {
            lines: out,
            complete_below: cutoff,
        })
    }

    /// Total multiplicity certified below the cutoff.
    pub fn total_multiplicity(&self) -> u64 {
        self.lines.iter().map(|l| l.multiplicity).sum()
    }
}

struct FrontierEntry {
    value: f64,
    i: usize,
    j: usize,
}

impl FrontierEntry {
    fn new(a: &DiscreteSpectrum, b: &DiscreteSpectrum, i: usize, j: usize) -> Result<Self> {
        let value = a.lines[i].value.add(&b.lines[j].value)?.value();
        Ok(Self { value, i, j })
    }
}

impl PartialEq for FrontierEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for FrontierEntry {}
impl PartialOrd for FrontierEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for FrontierEntry {
    // Reversed: BinaryHeap is a max-heap, we pop smallest sums first.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .value
            .total_cmp(&self.value)
            .then_with(|| other.i.cmp(&self.i))
            .then_with(|| other.j.cmp(&self.j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact_line(coeff: i64, mult: u64) -> SpectralLine {
        SpectralLine::new(ScalarValue::exact_int(coeff, 1.0).unwrap(), mult).unwrap()
    }

    fn spectrum(pairs: &[(i64, u64)], cutoff: f64) -> DiscreteSpectrum {
        let lines = pairs.iter().map(|&(v, m)| exact_line(v, m)).collect();
        DiscreteSpectrum::merge_lines(lines, cutoff).unwrap()
    }

    #[test]
    fn merge_collapses_duplicates() {
        let s = spectrum(&[(2, 1), (2, 3), (3, 1)], 10.0);
        let got: Vec<(f64, u64)> = s
            .lines()
            .iter()
            .map(|l| (l.value().value(), l.multiplicity()))
            .collect();
        assert_eq!(got, vec![(2.0, 4), (3.0, 1)]);
    }

    #[test]
    fn merge_empty_input() {
        let s = DiscreteSpectrum::merge_lines(Vec::new(), 5.0).unwrap();
        assert!(s.is_empty());
        assert_eq!(s.complete_below(), 5.0);
    }

    #[test]
    fn merge_drops_lines_at_cutoff() {
        let s = spectrum(&[(1, 1), (5, 2), (7, 1)], 5.0);
        assert_eq!(s.lines().len(), 1);
        assert_eq!(s.lines()[0].value().value(), 1.0);
    }

    #[test]
    fn zero_multiplicity_rejected() {
        let v = ScalarValue::exact_int(1, 1.0).unwrap();
        assert!(SpectralLine::new(v, 0).is_err());
    }

    #[test]
    fn merged_line_keeps_all_provenance() {
        let v = ScalarValue::exact_int(2, 1.0).unwrap();
        let a = SpectralLine::with_provenance(
            v.clone(),
            3,
            vec![Provenance {
                factor_index: 1,
                gaussian_degree: 0,
            }],
        )
        .unwrap();
        let b = SpectralLine::with_provenance(
            v,
            3,
            vec![Provenance {
                factor_index: 0,
                gaussian_degree: 2,
            }],
        )
        .unwrap();
        let s = DiscreteSpectrum::merge_lines(vec![a, b], 10.0).unwrap();
        assert_eq!(s.lines().len(), 1);
        assert_eq!(s.lines()[0].multiplicity(), 6);
        assert_eq!(s.lines()[0].provenance().len(), 2);
    }

    #[test]
    fn minkowski_identity_element() {
        let identity = spectrum(&[(0, 1)], 100.0);
        let b = spectrum(&[(0, 1), (2, 3), (6, 5)], 8.0);
        let sum = identity.minkowski_sum(&b).unwrap();
        let got: Vec<(f64, u64)> = sum
            .lines()
            .iter()
            .map(|l| (l.value().value(), l.multiplicity()))
            .collect();
        assert_eq!(got, vec![(0.0, 1), (2.0, 3), (6.0, 5)]);
        assert_eq!(sum.complete_below(), 8.0);
    }

    #[test]
    fn minkowski_matches_brute_force_pairwise_sums() {
        // Sphere factor times a one-dimensional Gaussian ladder.
        let a = spectrum(&[(0, 1), (2, 3), (6, 5)], 12.0);
        let b = spectrum(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)], 5.0);
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum.complete_below(), 5.0);

        // Independent brute force over all pairs.
        let mut brute: Vec<(i64, u64)> = Vec::new();
        for &(va, ma) in &[(0i64, 1u64), (2, 3), (6, 5)] {
            for &(vb, mb) in &[(0i64, 1u64), (1, 1), (2, 1), (3, 1), (4, 1)] {
                brute.push((va + vb, ma * mb));
            }
        }
        brute.sort();
        let mut expect: Vec<(i64, u64)> = Vec::new();
        for (v, m) in brute {
            if (v as f64) >= 5.0 {
                continue;
            }
            match expect.last_mut() {
                Some((v0, m0)) if *v0 == v => *m0 += m,
                _ => expect.push((v, m)),
            }
        }
        let got: Vec<(i64, u64)> = sum
            .lines()
            .iter()
            .map(|l| (l.value().value() as i64, l.multiplicity()))
            .collect();
        assert_eq!(got, expect);
        // First few lines explicitly: 0x1, 1x1, 2x4 (0+2 and 2+0), 3x4, 4x4.
        assert_eq!(got, vec![(0, 1), (1, 1), (2, 4), (3, 4), (4, 4)]);
    }

    #[test]
    fn minkowski_bottom_line_is_sum_of_bottoms() {
        let a = spectrum(&[(3, 1), (5, 2)], 9.0);
        let b = spectrum(&[(2, 1), (4, 1)], 7.0);
        let sum = a.minkowski_sum(&b).unwrap();
        assert_eq!(sum.min_line().unwrap().value().value(), 5.0);
        assert_eq!(sum.min_line().unwrap().multiplicity(), 1);
    }

    #[test]
    fn minkowski_rejects_empty() {
        let a = DiscreteSpectrum::merge_lines(Vec::new(), 4.0).unwrap();
        let b = spectrum(&[(0, 1)], 4.0);
        assert!(matches!(
            a.minkowski_sum(&b),
            Err(SpectraError::EmptySpectrum)
        ));
    }

    #[test]
    fn enumerate_up_to_contract() {
        let s = spectrum(&[(0, 1), (1, 2)], 2.0);
        let two = s.enumerate_up_to(2).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[1].value().value(), 1.0);
        assert_eq!(two[1].multiplicity(), 2);

        let err = s.enumerate_up_to(3).unwrap_err();
        match err {
            SpectraError::IncompleteSpectrum { cutoff, .. } => assert_eq!(cutoff, 2.0),
            other => panic!("expected incomplete-spectrum error, got {other:?}"),
        }
    }

    #[test]
    fn enumerate_returns_smallest_line() {
        let s = spectrum(&[(4, 2), (1, 1), (3, 1)], 6.0);
        let first = s.enumerate_up_to(1).unwrap();
        assert_eq!(first[0].value().value(), 1.0);
    }
}
