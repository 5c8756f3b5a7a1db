//! Walk counts in exact integer arithmetic and their spectral expansion.
//!
//! `w_k` is the number of walks of length `k` (k edges, repetitions allowed)
//! and `w_k(i)` the number of those starting at vertex `i`. With `u_i` the
//! unit eigenvectors of the adjacency matrix, `w_k = Σ c_i λ_i^k` where
//! `c_i = (Σ_j u_i[j])²`.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_connected, neighborhood_degree_sums, Graph};
use crate::spectrum::{eigendecompose, Spectrum, SpectrumError, CLUSTER_EPS, DEFAULT_TOL};

/// Length used by the `a > b` ratio certificate (`w_{2K} / w_{2K-1}`).
pub const RATIO_HALF_LENGTH: usize = 30;
pub const EXPANSION_REL_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("operation requires at least one vertex")]
    EmptyGraph,
    #[error("spectral expansion gives {reconstructed} for w_{k}, exact count is {exact}")]
    ExpansionMismatch {
        k: usize,
        exact: f64,
        reconstructed: f64,
    },
    #[error("spectrum does not match the graph order")]
    SpectrumMismatch,
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTable {
    pub max_len: usize,
    /// `totals[k] = w_k`.
    pub totals: Vec<BigUint>,
    /// `per_vertex[k][i] = w_k(i)`.
    pub per_vertex: Vec<Vec<BigUint>>,
}

impl WalkTable {
    pub fn total(&self, k: usize) -> &BigUint {
        &self.totals[k]
    }

    pub fn total_f64(&self, k: usize) -> f64 {
        self.totals[k].to_f64().unwrap_or(f64::INFINITY)
    }

    /// Totals rendered as decimal strings, for reports.
    pub fn totals_decimal(&self) -> Vec<String> {
        self.totals.iter().map(|w| w.to_string()).collect()
    }
}

/// `w_0 … w_K` by repeated products with the adjacency matrix, starting
/// from the all-ones vector.
pub fn walk_counts(g: &Graph, max_len: usize) -> Result<WalkTable, WalkError> {
    let n = g.n();
    if n == 0 {
        return Err(WalkError::EmptyGraph);
    }
    let mut per_vertex: Vec<Vec<BigUint>> = Vec::with_capacity(max_len + 1);
    per_vertex.push(vec![BigUint::from(1u32); n]);
    for k in 1..=max_len {
        let prev = &per_vertex[k - 1];
        let next = (0..n)
            .map(|i| {
                g.neighbors(i)
                    .fold(BigUint::zero(), |acc, j| acc + &prev[j])
            })
            .collect();
        per_vertex.push(next);
    }
    let totals = per_vertex.iter().map(|row| row.iter().sum()).collect();
    Ok(WalkTable {
        max_len,
        totals,
        per_vertex,
    })
}

/// Checks `w_k = Σ_i w_{k-2}(i)·w_2(i)` for `2 ≤ k ≤ K` and
/// `w_2(i) = Σ_{j∈N(i)} d(j)` for every vertex.
pub fn decomposition_identity_check(g: &Graph, max_len: usize) -> Result<bool, WalkError> {
    let table = walk_counts(g, max_len.max(2))?;
    Ok(decomposition_identity_holds(g, &table))
}

pub fn decomposition_identity_holds(g: &Graph, table: &WalkTable) -> bool {
    if table.max_len < 2 {
        return true;
    }
    let w2 = &table.per_vertex[2];
    let sums = neighborhood_degree_sums(g);
    if w2
        .iter()
        .zip(&sums.open)
        .any(|(w, &s)| *w != BigUint::from(s))
    {
        return false;
    }
    (2..=table.max_len).all(|k| {
        let expected: BigUint = table.per_vertex[k - 2]
            .iter()
            .zip(w2)
            .map(|(a, b)| a * b)
            .sum();
        expected == table.totals[k]
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkResidual {
    pub k: usize,
    /// `w_k/w_{k-2} + w_{k-1}/w_{k-2} − maxclosed`, rounded for reporting.
    pub value: f64,
    /// Exact integer comparison `w_k + w_{k-1} ≤ maxclosed·w_{k-2}`.
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WalkInequalityReport {
    pub max_closed: u64,
    pub residuals: Vec<WalkResidual>,
    /// Lengths skipped because `w_{k-2} = 0`.
    pub skipped: Vec<usize>,
}

impl WalkInequalityReport {
    pub fn all_hold(&self) -> bool {
        self.residuals.iter().all(|r| r.holds)
    }
}

/// Residuals of `w_k/w_{k-2} + w_{k-1}/w_{k-2} ≤ max_v Σ_{u∈N[v]} d(u)` for
/// `2 ≤ k ≤ K`.
pub fn walk_ratio_inequality(g: &Graph, max_len: usize) -> Result<WalkInequalityReport, WalkError> {
    let table = walk_counts(g, max_len)?;
    Ok(walk_ratio_inequality_from(g, &table))
}

pub fn walk_ratio_inequality_from(g: &Graph, table: &WalkTable) -> WalkInequalityReport {
    let max_closed = neighborhood_degree_sums(g).max_closed;
    let mut residuals = Vec::new();
    let mut skipped = Vec::new();
    for k in 2..=table.max_len {
        let base = &table.totals[k - 2];
        if base.is_zero() {
            skipped.push(k);
            continue;
        }
        let lhs = BigInt::from(&table.totals[k] + &table.totals[k - 1]);
        let rhs = BigInt::from(base * max_closed);
        let numerator = lhs - &rhs;
        let value = numerator.to_f64().unwrap_or(f64::NAN) / base.to_f64().unwrap_or(f64::NAN);
        residuals.push(WalkResidual {
            k,
            value,
            holds: numerator <= BigInt::zero(),
        });
    }
    WalkInequalityReport {
        max_closed,
        residuals,
        skipped,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralWalkExpansion {
    /// Aligned with the spectrum's eigenvalues.
    pub coefficients: Vec<f64>,
    /// Σ c_i over eigenvalues equal to λ₁.
    pub a: f64,
    /// Σ c_i over eigenvalues equal to −λ₁ (0 when there are none).
    pub b: f64,
    /// Largest relative reconstruction error seen over `k ≤ K`.
    pub max_relative_error: f64,
}

impl SpectralWalkExpansion {
    pub fn reconstruct(&self, s: &Spectrum, k: i32) -> f64 {
        self.coefficients
            .iter()
            .zip(&s.eigenvalues)
            .map(|(c, l)| c * l.powi(k))
            .sum()
    }
}

/// Expansion coefficients, validated against the exact walk table for
/// every `k ≤ K`.
pub fn walk_expansion(
    g: &Graph,
    s: &Spectrum,
    max_len: usize,
) -> Result<SpectralWalkExpansion, WalkError> {
    if s.n() != g.n() || s.eigenvectors.len() != g.n() {
        return Err(WalkError::SpectrumMismatch);
    }
    let table = walk_counts(g, max_len)?;
    walk_expansion_from(s, &table)
}

pub fn walk_expansion_from(
    s: &Spectrum,
    table: &WalkTable,
) -> Result<SpectralWalkExpansion, WalkError> {
    let coefficients: Vec<f64> = s
        .eigenvectors
        .iter()
        .map(|u| u.iter().sum::<f64>().powi(2))
        .collect();
    let l1 = s.lambda1();
    let mut a = 0.0;
    let mut b = 0.0;
    for (c, l) in coefficients.iter().zip(&s.eigenvalues) {
        if (l - l1).abs() <= CLUSTER_EPS {
            a += c;
        } else if l1 > CLUSTER_EPS && (l + l1).abs() <= CLUSTER_EPS {
            b += c;
        }
    }
    let mut expansion = SpectralWalkExpansion {
        coefficients,
        a,
        b,
        max_relative_error: 0.0,
    };
    for k in 0..=table.max_len {
        let exact = table.total_f64(k);
        let reconstructed = expansion.reconstruct(s, k as i32);
        let rel = (reconstructed - exact).abs() / exact.max(1.0);
        if rel > EXPANSION_REL_TOL {
            return Err(WalkError::ExpansionMismatch {
                k,
                exact,
                reconstructed,
            });
        }
        expansion.max_relative_error = expansion.max_relative_error.max(rel);
    }
    Ok(expansion)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AGreaterB {
    pub a: f64,
    pub b: f64,
    /// The graph is not a connected graph with an edge and `λ_n = −λ₁`.
    pub vacuous: bool,
    /// `a > b + 10·tol`, and the ratio certificate agrees when present.
    pub holds: bool,
    /// `w_{2K} / w_{2K-1}` at `K = RATIO_HALF_LENGTH`.
    pub observed_ratio: Option<f64>,
    /// `λ₁ (a + b) / (a − b)`.
    pub predicted_ratio: Option<f64>,
}

/// In the bipartite Perron case the λ₁ cluster outweighs the −λ₁ cluster
/// in the walk expansion, and `w_{2K}/w_{2K-1}` approaches `λ₁(a+b)/(a−b)`.
pub fn a_greater_b_check(g: &Graph) -> Result<AGreaterB, WalkError> {
    let s = eigendecompose(g, DEFAULT_TOL)?;
    a_greater_b_with(g, &s)
}

pub fn a_greater_b_with(g: &Graph, s: &Spectrum) -> Result<AGreaterB, WalkError> {
    let len = 2 * RATIO_HALF_LENGTH;
    let table = walk_counts(g, len)?;
    let e = walk_expansion_from(s, &table)?;
    let l1 = s.lambda1();
    let bipartite_perron = (s.lambda_min() + l1).abs() <= CLUSTER_EPS;
    if !is_connected(g) || g.m() == 0 || !bipartite_perron {
        return Ok(AGreaterB {
            a: e.a,
            b: e.b,
            vacuous: true,
            holds: true,
            observed_ratio: None,
            predicted_ratio: None,
        });
    }
    let separated = e.a > e.b + 10.0 * s.tol;
    let observed = table.total_f64(len) / table.total_f64(len - 1);
    let predicted = l1 * (e.a + e.b) / (e.a - e.b);
    let ratio_ok = separated && ((observed - predicted) / predicted).abs() <= 1e-3;
    Ok(AGreaterB {
        a: e.a,
        b: e.b,
        vacuous: false,
        holds: separated && ratio_ok,
        observed_ratio: Some(observed),
        predicted_ratio: Some(predicted),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioConvergence {
    /// `w_K / w_{K-2}`.
    pub ratio: f64,
    pub lambda1_squared: f64,
    pub gap: f64,
}

pub fn ratio_convergence(g: &Graph, max_len: usize) -> Result<RatioConvergence, WalkError> {
    let table = walk_counts(g, max_len.max(2))?;
    let l1 = eigendecompose(g, DEFAULT_TOL)?.lambda1();
    let k = table.max_len;
    let ratio = exact_ratio(&table.totals[k], &table.totals[k - 2]);
    Ok(RatioConvergence {
        ratio,
        lambda1_squared: l1 * l1,
        gap: (ratio - l1 * l1).abs(),
    })
}

/// `num / den` for big integers without losing precision to overflow.
fn exact_ratio(num: &BigUint, den: &BigUint) -> f64 {
    if den.is_zero() {
        return f64::NAN;
    }
    let shift = den.bits().saturating_sub(60);
    let n = (num >> shift).to_f64().unwrap_or(f64::INFINITY);
    let d = (den >> shift).to_f64().unwrap_or(f64::INFINITY);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn totals(g: &Graph, k: usize) -> Vec<u64> {
        walk_counts(g, k)
            .unwrap()
            .totals
            .iter()
            .map(|w| w.to_u64().unwrap())
            .collect()
    }

    fn brute_walks(g: &Graph, k: usize) -> u64 {
        fn extend(g: &Graph, v: usize, left: usize) -> u64 {
            if left == 0 {
                return 1;
            }
            g.neighbors(v).map(|u| extend(g, u, left - 1)).sum()
        }
        (0..g.n()).map(|v| extend(g, v, k)).sum()
    }

    #[test]
    fn walk_count_examples() {
        assert_eq!(totals(&complete(3), 3), vec![3, 6, 12, 24]);
        assert_eq!(totals(&path(3), 3), vec![3, 4, 6, 8]);
        assert_eq!(totals(&Graph::empty(1), 3), vec![1, 0, 0, 0]);
        assert_eq!(walk_counts(&Graph::empty(0), 2), Err(WalkError::EmptyGraph));
    }

    #[test]
    fn walk_counts_match_enumeration() {
        for seed in 0..30 {
            let g = gnp(5, 0.5, seed).unwrap();
            let t = totals(&g, 6);
            for (k, &w) in t.iter().enumerate() {
                assert_eq!(w, brute_walks(&g, k));
            }
            let table = walk_counts(&g, 6).unwrap();
            assert_eq!(table.totals[0], BigUint::from(5u32));
            assert_eq!(table.totals[1], BigUint::from(2 * g.m()));
            let sq: usize = g.degrees().iter().map(|d| d * d).sum();
            assert_eq!(table.totals[2], BigUint::from(sq));
        }
    }

    #[test]
    fn decomposition_examples() {
        assert!(decomposition_identity_check(&complete(3), 10).unwrap());
        let t = walk_counts(&path(3), 2).unwrap();
        assert_eq!(t.per_vertex[2], vec![BigUint::from(2u32); 3]);
        assert!(decomposition_identity_holds(&path(3), &t));
        assert!(decomposition_identity_check(&petersen(), 12).unwrap());
    }

    #[test]
    fn inequality_examples() {
        let r = walk_ratio_inequality(&complete(3), 12).unwrap();
        assert!(r.residuals.iter().all(|x| x.value == 0.0 && x.holds));
        let r = walk_ratio_inequality(&path(3), 3).unwrap();
        let k3 = r.residuals.iter().find(|x| x.k == 3).unwrap();
        assert_eq!(k3.value, -0.5);
        let r = walk_ratio_inequality(&Graph::empty(3), 6).unwrap();
        assert!(r.residuals.iter().all(|x| x.k == 2));
        assert_eq!(r.skipped, vec![3, 4, 5, 6]);
    }

    #[test]
    fn expansion_examples() {
        let g = complete(3);
        let s = eigendecompose(&g, DEFAULT_TOL).unwrap();
        let e = walk_expansion(&g, &s, 20).unwrap();
        assert!((e.coefficients[0] - 3.0).abs() < 1e-10);
        assert!(e.coefficients[1..].iter().all(|c| c.abs() < 1e-10));

        let g = path(3);
        let s = eigendecompose(&g, DEFAULT_TOL).unwrap();
        let e = walk_expansion(&g, &s, 20).unwrap();
        let half = 2f64.sqrt() / 2.0;
        assert!((e.a - (1.0 + half).powi(2)).abs() < 1e-10);
        assert!((e.b - (1.0 - half).powi(2)).abs() < 1e-10);
        assert!((e.a - 2.9142).abs() < 1e-4 && (e.b - 0.0858).abs() < 1e-4);

        let g = Graph::empty(2);
        let s = eigendecompose(&g, DEFAULT_TOL).unwrap();
        let e = walk_expansion(&g, &s, 5).unwrap();
        assert_eq!(e.b, 0.0);
        assert!(s.eigenvalues.iter().all(|&l| l == 0.0));
    }

    #[test]
    fn a_greater_b_examples() {
        let r = a_greater_b_check(&path(3)).unwrap();
        assert!(!r.vacuous && r.holds && r.a > r.b);
        let r = a_greater_b_check(&complete_bipartite(2, 3)).unwrap();
        assert!(!r.vacuous && r.holds);
        // K_{2,3}: Perron vector sums squared, (√2+√3)²/2 against (√2−√3)²/2
        let (s2, s3) = (2f64.sqrt(), 3f64.sqrt());
        assert!((r.a - (s2 + s3).powi(2) / 2.0).abs() < 1e-9);
        assert!((r.b - (s2 - s3).powi(2) / 2.0).abs() < 1e-9);
        let r = a_greater_b_check(&complete(3)).unwrap();
        assert!(r.vacuous && r.holds && r.b == 0.0);
    }

    #[test]
    fn ratio_examples() {
        let r = ratio_convergence(&complete(3), 10).unwrap();
        assert!((r.ratio - 4.0).abs() < 1e-12);
        let r = ratio_convergence(&path(3), 11).unwrap();
        assert!((r.ratio - 2.0).abs() < 1e-12);
        let r = ratio_convergence(&star(5), 40).unwrap();
        assert!(r.gap < 1e-9);
    }

    #[test]
    fn walks_grow_from_length_one() {
        for seed in 0..20 {
            let g = gnp(8, 0.3, seed).unwrap();
            let t = walk_counts(&g, 15).unwrap();
            for k in 1..15 {
                assert!(t.totals[k + 1] >= t.totals[k]);
            }
        }
    }
}
