//! Adjacency eigendecomposition by cyclic Jacobi rotations, a shifted power
//! iteration for the spectral radius, and the trace identities built on the
//! spectrum.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_connected, Graph};

/// Off-diagonal Frobenius norm at which the Jacobi sweeps stop.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Eigenvalues closer than this are treated as one cluster.
pub const CLUSTER_EPS: f64 = 1e-8;
/// Equality and threshold comparisons between spectral quantities.
pub const EQ_EPS: f64 = 1e-9;
pub const MAX_SWEEPS: usize = 100;
const POWER_MAX_ITERATIONS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("operation requires at least one vertex")]
    EmptyGraph,
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NonConvergence { sweeps: usize, off_norm: f64 },
    #[error("spectral triangle count {value} is not within 1e-6 of an integer")]
    NonIntegral { value: f64 },
    #[error("graph is disconnected")]
    DisconnectedInput,
    #[error("Jacobi and power-iteration spectral radii disagree: {jacobi} vs {power}")]
    CrossCheckMismatch { jacobi: f64, power: f64 },
}

/// Full real eigendecomposition of an adjacency matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    /// Sorted descending.
    pub eigenvalues: Vec<f64>,
    /// `eigenvectors[i]` belongs to `eigenvalues[i]`; unit length, mutually orthogonal.
    pub eigenvectors: Vec<Vec<f64>>,
    /// Max over i of `|A v_i - λ_i v_i|`.
    pub residual: f64,
    pub tol: f64,
    pub sweeps: usize,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda1(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// `Σ λ_i^k`, the number of closed walks of length k.
    pub fn power_sum(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k)).sum()
    }
}

pub fn eigendecompose(g: &Graph, tol: f64) -> Result<Spectrum, SpectrumError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    let mut a = vec![0.0f64; n * n];
    for u in 0..n {
        for v in g.neighbors(u) {
            a[u * n + v] = 1.0;
        }
    }
    let (values, vectors, sweeps) = jacobi(&mut a, n, tol)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let eigenvectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&j| (0..n).map(|r| vectors[r * n + j]).collect())
        .collect();

    let residual = eigenvalues
        .iter()
        .zip(&eigenvectors)
        .map(|(&lambda, vec)| {
            (0..n)
                .map(|r| {
                    let av: f64 = g.neighbors(r).map(|c| vec[c]).sum();
                    (av - lambda * vec[r]).powi(2)
                })
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);

    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
        residual,
        tol,
        sweeps,
    })
}

/// Cyclic Jacobi on the row-major symmetric matrix `a`. Returns the
/// unsorted diagonal, the accumulated rotation matrix (eigenvectors in
/// columns) and the number of sweeps performed.
fn jacobi(a: &mut [f64], n: usize, tol: f64) -> Result<(Vec<f64>, Vec<f64>, usize), SpectrumError> {
    let mut v = vec![0.0f64; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[p * n + q] * a[p * n + q];
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(a);
        if off <= tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(SpectrumError::NonConvergence {
                sweeps,
                off_norm: off,
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    Ok((diag, v, sweeps))
}

/// Spectral radius by power iteration on `A + I`, starting from the
/// all-ones vector. The shift keeps `λ₁ + 1` strictly dominant even when
/// `-λ₁` is an eigenvalue. The returned Rayleigh quotient never exceeds
/// the true `λ₁`.
pub fn perron_root(g: &Graph, tol: f64) -> Result<f64, SpectrumError> {
    let n = g.n();
    if n == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    let stop = (tol * 1e4).max(1e-13);
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    for _ in 0..POWER_MAX_ITERATIONS {
        for (r, yr) in y.iter_mut().enumerate() {
            *yr = x[r] + g.neighbors(r).map(|c| x[c]).sum::<f64>();
        }
        let mu: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let res: f64 = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - mu * a).powi(2))
            .sum::<f64>()
            .sqrt();
        if res <= stop * mu.max(1.0) {
            return Ok(mu - 1.0);
        }
        let norm = y.iter().map(|b| b * b).sum::<f64>().sqrt();
        for (xr, yr) in x.iter_mut().zip(&y) {
            *xr = yr / norm;
        }
    }
    Err(SpectrumError::NonConvergence {
        sweeps: POWER_MAX_ITERATIONS,
        off_norm: f64::NAN,
    })
}

/// λ₁ from the Jacobi decomposition. On connected graphs the value is
/// cross-checked against [`perron_root`] and must agree within `100·tol`.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<f64, SpectrumError> {
    let jacobi = eigendecompose(g, tol)?.lambda1();
    if is_connected(g) {
        let power = perron_root(g, tol)?;
        if (jacobi - power).abs() > 100.0 * tol * jacobi.max(1.0) {
            return Err(SpectrumError::CrossCheckMismatch { jacobi, power });
        }
    }
    Ok(jacobi)
}

/// `Σ λ_i³ / 6`.
pub fn triangle_count_spectral(s: &Spectrum) -> f64 {
    s.power_sum(3) / 6.0
}

/// [`triangle_count_spectral`] rounded to the nearest integer.
pub fn triangle_count_spectral_rounded(s: &Spectrum) -> Result<u64, SpectrumError> {
    let value = triangle_count_spectral(s);
    let rounded = value.round();
    if (value - rounded).abs() > 1e-6 || rounded < 0.0 {
        return Err(SpectrumError::NonIntegral { value });
    }
    Ok(rounded as u64)
}

/// Number of eigenvalue clusters, splitting the sorted list wherever
/// consecutive values differ by more than `cluster_eps`.
pub fn distinct_eigenvalue_count(s: &Spectrum, cluster_eps: f64) -> usize {
    if s.eigenvalues.is_empty() {
        return 0;
    }
    1 + s
        .eigenvalues
        .windows(2)
        .filter(|w| (w[0] - w[1]).abs() > cluster_eps)
        .count()
}

/// Whether the multiset of eigenvalues equals its negation.
pub fn is_spectrum_symmetric(s: &Spectrum, cluster_eps: f64) -> bool {
    let ev = &s.eigenvalues;
    ev.iter()
        .zip(ev.iter().rev())
        .all(|(hi, lo)| (hi + lo).abs() <= cluster_eps)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerronReport {
    /// λ₁ ≥ |λ_i| − tol for every i.
    pub dominates: bool,
    /// λ_n = −λ₁ within the cluster tolerance.
    pub negative_partner: bool,
}

pub fn perron_check(g: &Graph, s: &Spectrum) -> Result<PerronReport, SpectrumError> {
    if !is_connected(g) {
        return Err(SpectrumError::DisconnectedInput);
    }
    let l1 = s.lambda1();
    Ok(PerronReport {
        dominates: s
            .eigenvalues
            .iter()
            .all(|l| l1 >= l.abs() - s.tol.max(EQ_EPS)),
        negative_partner: (s.lambda_min() + l1).abs() <= CLUSTER_EPS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use std::f64::consts::PI;

    fn spec(g: &Graph) -> Spectrum {
        eigendecompose(g, DEFAULT_TOL).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn closed_form_spectra() {
        assert_close(
            &spec(&complete(4)).eigenvalues,
            &[3.0, -1.0, -1.0, -1.0],
            1e-9,
        );
        let r6 = 6f64.sqrt();
        assert_close(
            &spec(&complete_bipartite(2, 3)).eigenvalues,
            &[r6, 0.0, 0.0, 0.0, -r6],
            1e-9,
        );
        let a = 2.0 * (2.0 * PI / 5.0).cos();
        let b = 2.0 * (4.0 * PI / 5.0).cos();
        assert_close(
            &spec(&cycle(5).unwrap()).eigenvalues,
            &[2.0, a, a, b, b],
            1e-9,
        );
        assert!((a - 0.618034).abs() < 1e-6 && (b + 1.618034).abs() < 1e-6);
    }

    #[test]
    fn closed_forms_for_larger_families() {
        for n in 2..=20 {
            let mut expected = vec![-1.0; n];
            expected[0] = (n - 1) as f64;
            assert_close(&spec(&complete(n)).eigenvalues, &expected, 1e-9);
        }
        for (a, b) in [(1, 1), (3, 5), (7, 7), (10, 20)] {
            let r = ((a * b) as f64).sqrt();
            let mut expected = vec![0.0; a + b];
            expected[0] = r;
            expected[a + b - 1] = -r;
            assert_close(
                &spec(&complete_bipartite(a, b)).eigenvalues,
                &expected,
                1e-9,
            );
        }
        for n in 3..=40 {
            let mut expected: Vec<f64> = (0..n)
                .map(|j| 2.0 * (2.0 * PI * j as f64 / n as f64).cos())
                .collect();
            expected.sort_by(|x, y| y.total_cmp(x));
            assert_close(&spec(&cycle(n).unwrap()).eigenvalues, &expected, 1e-9);
        }
    }

    #[test]
    fn invariants_hold_on_random_graphs() {
        for seed in 0..40 {
            let n = 2 + (seed as usize * 7) % 61;
            let g = gnp(n, 0.3 + (seed % 5) as f64 * 0.1, seed).unwrap();
            let s = spec(&g);
            let tol = s.tol;
            assert!(s.residual <= tol * n as f64, "residual {}", s.residual);
            assert!(s.power_sum(1).abs() <= 10.0 * tol * n as f64);
            assert!((s.power_sum(2) - 2.0 * g.m() as f64).abs() <= 10.0 * tol * n as f64);
            for i in 0..n {
                for j in 0..n {
                    let dot: f64 = s.eigenvectors[i]
                        .iter()
                        .zip(&s.eigenvectors[j])
                        .map(|(a, b)| a * b)
                        .sum();
                    let want = if i == j { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() <= 10.0 * tol, "orthonormality {dot}");
                }
            }
            assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn spectral_radius_examples() {
        for n in 1..10 {
            assert!(
                (spectral_radius(&complete(n), DEFAULT_TOL).unwrap() - (n - 1) as f64).abs()
                    < 1e-10
            );
        }
        assert!((spectral_radius(&star(5), DEFAULT_TOL).unwrap() - 2.0).abs() < 1e-10);
        assert!((spectral_radius(&cycle(5).unwrap(), DEFAULT_TOL).unwrap() - 2.0).abs() < 1e-10);
        assert_eq!(
            eigendecompose(&Graph::empty(0), DEFAULT_TOL),
            Err(SpectrumError::EmptyGraph)
        );
    }

    #[test]
    fn power_iteration_agrees_on_connected_graphs() {
        for seed in 0..30 {
            let g = gnp(25, 0.3, seed).unwrap();
            if !is_connected(&g) {
                continue;
            }
            let jacobi = spec(&g).lambda1();
            let power = perron_root(&g, DEFAULT_TOL).unwrap();
            assert!(
                (jacobi - power).abs() <= 100.0 * DEFAULT_TOL * jacobi,
                "{jacobi} {power}"
            );
        }
        let power = perron_root(&path(62), DEFAULT_TOL).unwrap();
        assert!((power - 2.0 * (PI / 63.0).cos()).abs() < 1e-10);
    }

    #[test]
    fn triangle_counts_from_spectrum() {
        assert_eq!(
            triangle_count_spectral_rounded(&spec(&complete(4))).unwrap(),
            4
        );
        assert_eq!(
            triangle_count_spectral_rounded(&spec(&cycle(5).unwrap())).unwrap(),
            0
        );
        assert_eq!(
            triangle_count_spectral_rounded(&spec(&complete(3))).unwrap(),
            1
        );
        let fake = Spectrum {
            eigenvalues: vec![1.5, 0.0],
            eigenvectors: vec![],
            residual: 0.0,
            tol: DEFAULT_TOL,
            sweeps: 0,
        };
        assert!(matches!(
            triangle_count_spectral_rounded(&fake),
            Err(SpectrumError::NonIntegral { .. })
        ));
    }

    #[test]
    fn distinct_counts() {
        assert_eq!(
            distinct_eigenvalue_count(&spec(&complete_bipartite(2, 3)), CLUSTER_EPS),
            3
        );
        assert_eq!(
            distinct_eigenvalue_count(&spec(&complete(4)), CLUSTER_EPS),
            2
        );
        assert_eq!(distinct_eigenvalue_count(&spec(&path(4)), CLUSTER_EPS), 4);
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_spectrum_symmetric(
            &spec(&cycle(6).unwrap()),
            CLUSTER_EPS
        ));
        assert!(!is_spectrum_symmetric(
            &spec(&cycle(5).unwrap()),
            CLUSTER_EPS
        ));
        assert!(is_spectrum_symmetric(
            &spec(&complete_bipartite(2, 3)),
            CLUSTER_EPS
        ));
    }

    #[test]
    fn perron_examples() {
        let g = cycle(6).unwrap();
        let r = perron_check(&g, &spec(&g)).unwrap();
        assert!(r.dominates && r.negative_partner);
        let g = complete(4);
        let r = perron_check(&g, &spec(&g)).unwrap();
        assert!(r.dominates && !r.negative_partner);
        let g = complete_bipartite(2, 3);
        assert!(perron_check(&g, &spec(&g)).unwrap().negative_partner);
        let g = Graph::empty(2);
        assert_eq!(
            perron_check(&g, &spec(&g)),
            Err(SpectrumError::DisconnectedInput)
        );
    }
}
