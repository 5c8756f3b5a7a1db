//! Theorem identifiers and the per-graph verdicts produced by the checkers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::formats::{from_edge_list, from_graph6, to_edge_list, to_graph6, GRAPH6_MAX_ORDER};
use crate::graph::{Graph, GraphError};

/// Every statement the verification harness can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum TheoremId {
    /// m > n²/4 forces a triangle.
    Mantel,
    /// λ₁ > √m forces a triangle.
    Nosal,
    /// λ₁ ≥ √m forces a triangle unless K_{a,b} plus isolated vertices.
    SpectralMantel,
    /// Σλ³/6 equals the triangle count.
    TriangleTrace,
    Stanley,
    Hong,
    HongShuFang,
    ClosedNeighborhoodBound,
    OpenNeighborhoodBound,
    /// w_k + w_{k-1} ≤ maxclosed · w_{k-2}.
    WalkInequality,
    /// w_k = Σ_i w_{k-2}(i) w_2(i) and w_2(i) = Σ_{j∈N(i)} d(j).
    DecompositionIdentity,
    /// Nonnegative expansion coefficients and a > b in the bipartite case.
    WalkExpansion,
    DegreePeeling,
    BondyPancyclicity,
    ConsecutiveEvenCycles,
    SpectrumSymmetry,
    DiameterDistinct,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::Mantel,
        TheoremId::Nosal,
        TheoremId::SpectralMantel,
        TheoremId::TriangleTrace,
        TheoremId::Stanley,
        TheoremId::Hong,
        TheoremId::HongShuFang,
        TheoremId::ClosedNeighborhoodBound,
        TheoremId::OpenNeighborhoodBound,
        TheoremId::WalkInequality,
        TheoremId::DecompositionIdentity,
        TheoremId::WalkExpansion,
        TheoremId::DegreePeeling,
        TheoremId::BondyPancyclicity,
        TheoremId::ConsecutiveEvenCycles,
        TheoremId::SpectrumSymmetry,
        TheoremId::DiameterDistinct,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Mantel => "mantel",
            TheoremId::Nosal => "nosal",
            TheoremId::SpectralMantel => "spectral-mantel",
            TheoremId::TriangleTrace => "triangle-trace",
            TheoremId::Stanley => "stanley",
            TheoremId::Hong => "hong",
            TheoremId::HongShuFang => "hsf",
            TheoremId::ClosedNeighborhoodBound => "thm11",
            TheoremId::OpenNeighborhoodBound => "lemma3",
            TheoremId::WalkInequality => "walk-inequality",
            TheoremId::DecompositionIdentity => "decomposition-identity",
            TheoremId::WalkExpansion => "walk-expansion",
            TheoremId::DegreePeeling => "peel",
            TheoremId::BondyPancyclicity => "bondy",
            TheoremId::ConsecutiveEvenCycles => "even-cycles",
            TheoremId::SpectrumSymmetry => "spectrum-symmetry",
            TheoremId::DiameterDistinct => "diameter-distinct",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| format!("unknown theorem id {s:?}"))
    }
}

impl From<TheoremId> for String {
    fn from(t: TheoremId) -> String {
        t.id().to_string()
    }
}

impl TryFrom<String> for TheoremId {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// A graph on which a checked statement failed, with the quantities that
/// make the failure reproducible.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub theorem: TheoremId,
    /// Present when the order fits short-form graph6.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    /// Used for orders above the graph6 cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_list: Option<String>,
    pub n: usize,
    pub m: usize,
    pub quantities: BTreeMap<String, f64>,
    pub detail: String,
    /// Asymptotic statements below their safe order are reported, not asserted.
    #[serde(default)]
    pub report_only: bool,
}

impl CounterexampleReport {
    pub fn new(theorem: TheoremId, g: &Graph, detail: impl Into<String>) -> Self {
        let (graph6, edge_list) = if g.n() <= GRAPH6_MAX_ORDER {
            (to_graph6(g).ok(), None)
        } else {
            (None, Some(to_edge_list(g)))
        };
        Self {
            theorem,
            graph6,
            edge_list,
            n: g.n(),
            m: g.m(),
            quantities: BTreeMap::new(),
            detail: detail.into(),
            report_only: false,
        }
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.quantities.insert(name.to_string(), value);
        self
    }

    /// Rebuilds the embedded graph.
    pub fn graph(&self) -> Result<Graph, GraphError> {
        match (&self.graph6, &self.edge_list) {
            (Some(g6), _) => from_graph6(g6),
            (None, Some(el)) => from_edge_list(el),
            (None, None) => Err(GraphError::MalformedHeader),
        }
    }

    /// Ordering key used to keep report lists deterministic.
    pub fn sort_key(&self) -> (TheoremId, usize, String, String) {
        (
            self.theorem,
            self.n,
            self.graph6.clone().unwrap_or_default(),
            self.edge_list.clone().unwrap_or_default(),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    /// The hypothesis does not apply to this graph.
    Vacuous {
        reason: String,
    },
    Violated {
        report: Box<CounterexampleReport>,
    },
    /// A search budget ran out before a decision was reached.
    Inconclusive {
        reason: String,
    },
}

impl Verdict {
    pub fn vacuous(reason: impl Into<String>) -> Self {
        Verdict::Vacuous {
            reason: reason.into(),
        }
    }

    pub fn violated(report: CounterexampleReport) -> Self {
        Verdict::Violated {
            report: Box::new(report),
        }
    }

    pub fn is_holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_vacuous(&self) -> bool {
        matches!(self, Verdict::Vacuous { .. })
    }

    pub fn is_violated(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle};

    #[test]
    fn ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.id().parse::<TheoremId>().unwrap(), t);
        }
        assert!("nope".parse::<TheoremId>().is_err());
    }

    #[test]
    fn report_embeds_replayable_graph() {
        let g = complete(4);
        let r = CounterexampleReport::new(TheoremId::Mantel, &g, "x").with("lambda1", 3.0);
        assert_eq!(r.graph().unwrap(), g);
        let big = cycle(80).unwrap();
        let r = CounterexampleReport::new(TheoremId::Mantel, &big, "x");
        assert!(r.graph6.is_none());
        assert_eq!(r.graph().unwrap(), big);
    }
}
