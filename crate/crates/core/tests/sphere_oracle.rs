//! Independent oracle for the round-sphere multiplicities: count the
//! dimension of harmonic homogeneous polynomials by exact integer rank
//! computation, with no binomial formulas involved.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use soliton_spectra::sphere_spectrum;

/// All exponent vectors of length `vars` summing to `degree`, in a fixed
/// lexicographic order.
fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars == 1 {
            let mut m = prefix.clone();
            m.push(degree);
            out.push(m);
            return;
        }
        for first in (0..=degree).rev() {
            prefix.push(first);
            rec(vars - 1, degree - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, degree, &mut Vec::new(), &mut out);
    out
}

/// Matrix of the flat Laplacian from degree-`j` to degree-`j-2`
/// homogeneous polynomials in `vars` variables.
fn laplacian_matrix(vars: usize, degree: u32) -> (usize, Vec<Vec<BigInt>>) {
    let sources = monomials(vars, degree);
    if degree < 2 {
        return (sources.len(), Vec::new());
    }
    let targets = monomials(vars, degree - 2);
    let index: std::collections::BTreeMap<Vec<u32>, usize> = targets
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();

    let mut matrix = vec![vec![BigInt::zero(); sources.len()]; targets.len()];
    for (col, alpha) in sources.iter().enumerate() {
        for i in 0..vars {
            if alpha[i] >= 2 {
                let mut beta = alpha.clone();
                beta[i] -= 2;
                let row = index[&beta];
                matrix[row][col] += BigInt::from(alpha[i] as i64 * (alpha[i] as i64 - 1));
            }
        }
    }
    (sources.len(), matrix)
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for r in (row + 1)..rows {
            let factor = m[r][col].clone();
            for c in col..cols {
                let num = &pivot * &m[r][c] - &factor * &m[row][c];
                m[r][c] = num / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

fn harmonic_dimension(vars: usize, degree: u32) -> u64 {
    let (source_dim, matrix) = laplacian_matrix(vars, degree);
    (source_dim - rank(matrix)) as u64
}

#[test]
fn sphere_multiplicities_match_harmonic_polynomial_count() {
    for k in [2u32, 3] {
        let factor = sphere_spectrum(k, 1.0, 1e6).unwrap();
        let lines = factor.spectrum().lines();
        for j in 0..=10u32 {
            let want = harmonic_dimension(k as usize + 1, j);
            let got = lines[j as usize].multiplicity();
            assert_eq!(
                got, want,
                "k = {k}, j = {j}: multiplicity {got}, harmonic dimension {want}"
            );
        }
    }
}

#[test]
fn harmonic_dimensions_small_cases() {
    // Classical values on the 2-sphere: 2j + 1.
    for j in 0..=6u32 {
        assert_eq!(harmonic_dimension(3, j), 2 * j as u64 + 1);
    }
    // And on the 3-sphere: (j + 1)^2.
    for j in 0..=6u64 {
        assert_eq!(harmonic_dimension(4, j as u32), (j + 1) * (j + 1));
    }
}

#[test]
fn laplacian_is_onto_for_tested_degrees() {
    // The rank equals the full target dimension, which is what makes the
    // kernel-dimension formula a genuine count.
    for vars in [3usize, 4] {
        for degree in 2..=8u32 {
            let (_, matrix) = laplacian_matrix(vars, degree);
            let rows = matrix.len();
            assert_eq!(rank(matrix), rows, "vars {vars}, degree {degree}");
        }
    }
}
