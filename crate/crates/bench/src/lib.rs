//! Fixed inputs shared by the benchmarks.

use gammavec::{Polynomial, Rational, SimplicialComplex};

/// Eulerian polynomial `A_{n+1}(t) / t` of formal degree `n`, reciprocal
/// with positive coefficients.
pub fn eulerian(n: usize) -> Polynomial {
    let mut row: Vec<u64> = vec![1];
    for m in 2..=n + 1 {
        let mut next = vec![0u64; m];
        for k in 0..m {
            let left = if k > 0 {
                (m - k) as u64 * row[k - 1]
            } else {
                0
            };
            let right = if k < row.len() {
                (k + 1) as u64 * row[k]
            } else {
                0
            };
            next[k] = left + right;
        }
        row = next;
    }
    let coeffs = row
        .into_iter()
        .map(|c| Rational::from_integer(c.into()))
        .collect();
    Polynomial::new(coeffs, n).expect("n + 1 coefficients")
}

/// A non-reciprocal polynomial with a fixed coefficient pattern.
pub fn skewed(n: usize) -> Polynomial {
    let coeffs = (0..=n as i64)
        .map(|k| Rational::from_integer(((k * 7 + 3) % 11 - 5).into()))
        .collect();
    Polynomial::new(coeffs, n).expect("n + 1 coefficients")
}

pub fn cross_polytope(d: usize) -> SimplicialComplex {
    SimplicialComplex::cross_polytope_boundary(d)
}
