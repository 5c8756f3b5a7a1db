//! Upper bounds on the spectral radius, their equality cases, and the
//! spectral form of Mantel's theorem.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    complete_bipartite_plus_isolated, count_triangles_brute, find_triangle, is_bidegreed_with_full,
    is_bipartite_semiregular, is_connected, is_regular, neighborhood_degree_sums,
    CompleteBipartiteWitness, Graph,
};
use crate::spectrum::{eigendecompose, SpectrumError, DEFAULT_TOL, EQ_EPS};
use crate::verdict::{CounterexampleReport, TheoremId, Verdict};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error("operation requires at least one vertex")]
    EmptyGraph,
    #[error("precondition of {kind} violated: {reason}")]
    PreconditionViolated { kind: BoundKind, reason: String },
    #[error("{0} is an implication, not an upper bound on the spectral radius")]
    NoBoundValue(BoundKind),
    #[error("{kind} is not tight on this graph (slack {slack:e})")]
    NotTight { kind: BoundKind, slack: f64 },
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum BoundKind {
    /// λ₁ ≥ √m forces a triangle; carries no bound value.
    Nosal,
    /// λ₁ ≤ −1/2 + √(2m + 1/4).
    Stanley,
    /// λ₁ ≤ √(2m − n + 1) when there are no isolated vertices.
    Hong,
    /// λ₁ ≤ (δ−1)/2 + √(2m − nδ + (δ+1)²/4).
    HongShuFang,
    /// λ₁ ≤ √(max_v Σ_{u∈N(v)} d(u)).
    OpenNeighborhood,
    /// λ₁ ≤ (−1 + √(1 + 4 max_v Σ_{u∈N[v]} d(u))) / 2.
    ClosedNeighborhood,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::Nosal,
        BoundKind::Stanley,
        BoundKind::Hong,
        BoundKind::HongShuFang,
        BoundKind::OpenNeighborhood,
        BoundKind::ClosedNeighborhood,
    ];

    /// The kinds that are genuine inequalities on λ₁.
    pub const INEQUALITIES: [BoundKind; 5] = [
        BoundKind::Stanley,
        BoundKind::Hong,
        BoundKind::HongShuFang,
        BoundKind::OpenNeighborhood,
        BoundKind::ClosedNeighborhood,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BoundKind::Nosal => "nosal",
            BoundKind::Stanley => "stanley",
            BoundKind::Hong => "hong",
            BoundKind::HongShuFang => "hsf",
            BoundKind::OpenNeighborhood => "lemma3",
            BoundKind::ClosedNeighborhood => "thm11",
        }
    }

    pub fn theorem(self) -> TheoremId {
        match self {
            BoundKind::Nosal => TheoremId::Nosal,
            BoundKind::Stanley => TheoremId::Stanley,
            BoundKind::Hong => TheoremId::Hong,
            BoundKind::HongShuFang => TheoremId::HongShuFang,
            BoundKind::OpenNeighborhood => TheoremId::OpenNeighborhoodBound,
            BoundKind::ClosedNeighborhood => TheoremId::ClosedNeighborhoodBound,
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.id() == s)
            .ok_or_else(|| format!("unknown bound id {s:?}"))
    }
}

impl From<BoundKind> for String {
    fn from(k: BoundKind) -> String {
        k.id().to_string()
    }
}

impl TryFrom<String> for BoundKind {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// The value of the bound `kind` on `g`, exactly as the formula reads.
pub fn bound_value(g: &Graph, kind: BoundKind) -> Result<f64, BoundError> {
    let n = g.n();
    if n == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let m = g.m() as f64;
    let nf = n as f64;
    let value = match kind {
        BoundKind::Nosal => return Err(BoundError::NoBoundValue(kind)),
        BoundKind::Stanley => -0.5 + (2.0 * m + 0.25).sqrt(),
        BoundKind::Hong => {
            if g.min_degree() == 0 {
                return Err(BoundError::PreconditionViolated {
                    kind,
                    reason: "graph has an isolated vertex".into(),
                });
            }
            (2.0 * m - nf + 1.0).sqrt()
        }
        BoundKind::HongShuFang => {
            let delta = g.min_degree() as f64;
            (delta - 1.0) / 2.0 + (2.0 * m - nf * delta + (delta + 1.0).powi(2) / 4.0).sqrt()
        }
        BoundKind::OpenNeighborhood => (neighborhood_degree_sums(g).max_open as f64).sqrt(),
        BoundKind::ClosedNeighborhood => {
            let closed = neighborhood_degree_sums(g).max_closed as f64;
            (-1.0 + (1.0 + 4.0 * closed).sqrt()) / 2.0
        }
    };
    Ok(value)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub bound_value: Option<f64>,
    pub lambda1: f64,
    /// `bound_value − lambda1`.
    pub slack: Option<f64>,
    /// `slack ≥ −EQ_EPS`; absent for skipped kinds.
    pub holds: Option<bool>,
    /// `|slack| ≤ EQ_EPS`.
    pub tight: bool,
    /// Whether a tight graph lies in the known equality class; absent when
    /// not tight or when no characterization applies.
    pub extremal_class_consistent: Option<bool>,
    /// Why the kind was not evaluated.
    pub skipped: Option<String>,
}

impl BoundReport {
    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }
}

/// Reports for every kind, computing λ₁ with the Jacobi solver.
pub fn evaluate_all(g: &Graph) -> Result<Vec<BoundReport>, BoundError> {
    if g.n() == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let lambda1 = eigendecompose(g, DEFAULT_TOL)?.lambda1();
    Ok(evaluate_all_with(g, lambda1))
}

/// As [`evaluate_all`] with a precomputed λ₁.
pub fn evaluate_all_with(g: &Graph, lambda1: f64) -> Vec<BoundReport> {
    BoundKind::ALL
        .into_iter()
        .map(|kind| evaluate_with(g, kind, lambda1))
        .collect()
}

pub fn evaluate_with(g: &Graph, kind: BoundKind, lambda1: f64) -> BoundReport {
    match bound_value(g, kind) {
        Ok(value) => {
            let slack = value - lambda1;
            let tight = slack.abs() <= EQ_EPS;
            BoundReport {
                kind,
                bound_value: Some(value),
                lambda1,
                slack: Some(slack),
                holds: Some(slack >= -EQ_EPS),
                tight,
                extremal_class_consistent: if tight {
                    extremal_consistency(g, kind)
                } else {
                    None
                },
                skipped: None,
            }
        }
        Err(e) => BoundReport {
            kind,
            bound_value: None,
            lambda1,
            slack: None,
            holds: None,
            tight: false,
            extremal_class_consistent: None,
            skipped: Some(e.to_string()),
        },
    }
}

/// Membership in the equality class, for kinds with a characterization on
/// connected graphs.
fn extremal_consistency(g: &Graph, kind: BoundKind) -> Option<bool> {
    if !is_connected(g) {
        return None;
    }
    match kind {
        BoundKind::HongShuFang => Some(is_bidegreed_with_full(g)),
        BoundKind::OpenNeighborhood => Some(is_regular(g) || is_bipartite_semiregular(g)),
        _ => None,
    }
}

/// For a bound that is tight on `g`, whether `g` belongs to the class the
/// equality characterization predicts. `None` when no characterization
/// applies (other kinds, or a disconnected graph).
pub fn tightness_check(g: &Graph, kind: BoundKind) -> Result<Option<bool>, BoundError> {
    let lambda1 = eigendecompose(g, DEFAULT_TOL)?.lambda1();
    let report = evaluate_with(g, kind, lambda1);
    if let Some(reason) = report.skipped {
        return Err(BoundError::PreconditionViolated { kind, reason });
    }
    if !report.tight {
        return Err(BoundError::NotTight {
            kind,
            slack: report.slack.unwrap_or(f64::NAN),
        });
    }
    Ok(extremal_consistency(g, kind))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum MantelClass {
    /// λ₁ < √m.
    BelowThreshold {
        lambda1: f64,
        sqrt_m: f64,
    },
    HasTriangle {
        triangle: [usize; 3],
    },
    ExtremalCompleteBipartite {
        witness: CompleteBipartiteWitness,
    },
    /// m = 0: the statement presumes at least one edge.
    Edgeless,
    /// λ₁ ≥ √m, triangle-free, and not complete bipartite.
    TriangleFreeAboveThreshold {
        lambda1: f64,
        m: usize,
    },
}

pub fn spectral_mantel_classify(g: &Graph) -> Result<MantelClass, BoundError> {
    if g.n() == 0 {
        return Err(BoundError::EmptyGraph);
    }
    let lambda1 = eigendecompose(g, DEFAULT_TOL)?.lambda1();
    Ok(spectral_mantel_classify_with(g, lambda1))
}

pub fn spectral_mantel_classify_with(g: &Graph, lambda1: f64) -> MantelClass {
    let m = g.m();
    if m == 0 {
        return MantelClass::Edgeless;
    }
    let sqrt_m = (m as f64).sqrt();
    if lambda1 < sqrt_m - EQ_EPS {
        return MantelClass::BelowThreshold { lambda1, sqrt_m };
    }
    if let Some(triangle) = find_triangle(g) {
        return MantelClass::HasTriangle { triangle };
    }
    match complete_bipartite_plus_isolated(g) {
        Some(witness) => MantelClass::ExtremalCompleteBipartite { witness },
        None => MantelClass::TriangleFreeAboveThreshold { lambda1, m },
    }
}

/// More than n²/4 edges must force a triangle.
pub fn mantel_check(g: &Graph) -> Verdict {
    let (n, m) = (g.n(), g.m());
    if 4 * m <= n * n {
        return Verdict::vacuous(format!("m = {m} ≤ n²/4 = {}", n as f64 * n as f64 / 4.0));
    }
    if count_triangles_brute(g) > 0 {
        Verdict::Holds
    } else {
        Verdict::violated(CounterexampleReport::new(
            TheoremId::Mantel,
            g,
            "m > n²/4 but no triangle",
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::spectrum::spectral_radius;

    fn report(g: &Graph, kind: BoundKind) -> BoundReport {
        evaluate_all(g)
            .unwrap()
            .into_iter()
            .find(|r| r.kind == kind)
            .unwrap()
    }

    #[test]
    fn stanley_tight_on_complete_graphs() {
        for n in 3..=10 {
            let v = bound_value(&complete(n), BoundKind::Stanley).unwrap();
            assert!((v - (n - 1) as f64).abs() < 1e-12);
            assert!(report(&complete(n), BoundKind::Stanley).tight);
        }
    }

    #[test]
    fn hong_on_star() {
        let v = bound_value(&star(5), BoundKind::Hong).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let l1 = spectral_radius(&star(5), DEFAULT_TOL).unwrap();
        assert!((v - l1).abs() < EQ_EPS);
        assert!(matches!(
            bound_value(&Graph::empty(3), BoundKind::Hong),
            Err(BoundError::PreconditionViolated { .. })
        ));
    }

    #[test]
    fn closed_neighborhood_on_cycle() {
        let g = cycle(5).unwrap();
        let v = bound_value(&g, BoundKind::ClosedNeighborhood).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        assert!(report(&g, BoundKind::ClosedNeighborhood).tight);
    }

    #[test]
    fn nosal_has_no_value() {
        assert_eq!(
            bound_value(&complete(3), BoundKind::Nosal),
            Err(BoundError::NoBoundValue(BoundKind::Nosal))
        );
        assert_eq!(
            bound_value(&Graph::empty(0), BoundKind::Stanley),
            Err(BoundError::EmptyGraph)
        );
    }

    #[test]
    fn evaluate_all_examples() {
        let g = star(5);
        assert!(report(&g, BoundKind::Hong).tight);
        assert!(report(&g, BoundKind::HongShuFang).tight);
        let stanley = report(&g, BoundKind::Stanley);
        // -1/2 + sqrt(8.25) - 2
        assert!((stanley.slack.unwrap() - 0.3722813232690143).abs() < 1e-12);
        assert!(!stanley.tight);

        let reports = evaluate_all(&complete(4)).unwrap();
        for kind in [BoundKind::Stanley, BoundKind::Hong, BoundKind::HongShuFang] {
            let r = reports.iter().find(|r| r.kind == kind).unwrap();
            assert!(r.tight && (r.bound_value.unwrap() - 3.0).abs() < 1e-12);
        }

        let reports = evaluate_all(&Graph::empty(3)).unwrap();
        assert_eq!(reports.len(), BoundKind::ALL.len());
        assert!(reports
            .iter()
            .find(|r| r.kind == BoundKind::Hong)
            .unwrap()
            .is_skipped());
        assert!(reports
            .iter()
            .find(|r| r.kind == BoundKind::Nosal)
            .unwrap()
            .is_skipped());
    }

    #[test]
    fn tightness_examples() {
        assert_eq!(
            tightness_check(&complete(4), BoundKind::HongShuFang),
            Ok(Some(true))
        );
        assert_eq!(
            tightness_check(&star(5), BoundKind::HongShuFang),
            Ok(Some(true))
        );
        assert_eq!(
            tightness_check(&complete_bipartite(2, 3), BoundKind::OpenNeighborhood),
            Ok(Some(true))
        );
        assert_eq!(tightness_check(&complete(4), BoundKind::Stanley), Ok(None));
        assert!(matches!(
            tightness_check(&path(4), BoundKind::Stanley),
            Err(BoundError::NotTight { .. })
        ));
    }

    #[test]
    fn spectral_mantel_examples() {
        assert_eq!(
            spectral_mantel_classify(&complete(4)).unwrap(),
            MantelClass::HasTriangle {
                triangle: [0, 1, 2]
            }
        );
        assert_eq!(
            spectral_mantel_classify(&star(5)).unwrap(),
            MantelClass::ExtremalCompleteBipartite {
                witness: CompleteBipartiteWitness {
                    a: 1,
                    b: 4,
                    isolated: 0
                }
            }
        );
        assert!(matches!(
            spectral_mantel_classify(&cycle(5).unwrap()).unwrap(),
            MantelClass::BelowThreshold { .. }
        ));
        assert_eq!(
            spectral_mantel_classify(&Graph::empty(2)).unwrap(),
            MantelClass::Edgeless
        );
    }

    #[test]
    fn mantel_examples() {
        assert!(mantel_check(&complete_bipartite(3, 3)).is_vacuous());
        assert!(mantel_check(&complete(3)).is_holds());
        // every labeled graph on 4 vertices with 5 edges
        for mask in 0u64..64 {
            let g = Graph::from_pair_mask(4, mask);
            let v = mantel_check(&g);
            assert_eq!(v.is_vacuous(), g.m() < 5);
            assert!(!v.is_violated());
        }
    }
}
