//! Exhaustive enumeration and seeded fuzzing over every checkable
//! statement, aggregated into deterministic reports.
//!
//! Work is split into fixed shards of the enumeration order (or of the
//! sample index range when fuzzing). Each shard produces a partial report
//! and partial reports merge associatively, so the result does not depend
//! on the worker count.

use std::cell::OnceCell;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    evaluate_with, mantel_check, spectral_mantel_classify_with, BoundKind, MantelClass,
};
use crate::cycles::{
    bondy_pancyclicity_check, consecutive_even_cycles_check, erdos_peel, PipelineConfig,
};
use crate::formats::to_graph6;
use crate::generators::{
    complete_bipartite_plus_with, gnp_with, random_bipartite_with, random_regular_with,
};
use crate::graph::{
    bipartition, connectivity, count_triangles_brute, find_triangle, induced_subgraph,
    is_bidegreed_with_full, is_bipartite_semiregular, is_connected, is_regular, Graph,
};
use crate::spectrum::{
    distinct_eigenvalue_count, eigendecompose, is_spectrum_symmetric, triangle_count_spectral,
    triangle_count_spectral_rounded, Spectrum, SpectrumError, CLUSTER_EPS, DEFAULT_TOL, EQ_EPS,
};
use crate::verdict::{CounterexampleReport, TheoremId, Verdict};
use crate::walks::decomposition_identity_holds;
use crate::walks::{
    a_greater_b_with, walk_counts, walk_expansion_from, walk_ratio_inequality_from, WalkTable,
};

/// Largest order accepted by exhaustive enumeration.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;
/// Largest order for isomorphism-class enumeration.
pub const MAX_CANONICAL_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("order {0} is too large for exhaustive enumeration")]
    OrderTooLarge(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid distribution spec: {0}")]
    BadDistribution(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    #[default]
    Labeled,
    Canonical,
}

impl FromStr for Dedup {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "labeled" => Ok(Dedup::Labeled),
            "canonical" => Ok(Dedup::Canonical),
            _ => Err(format!("unknown dedup mode {s:?}")),
        }
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All graphs on `n` vertices.
///
/// Labeled mode yields all `2^(n(n-1)/2)` graphs in edge-bitmask order.
/// Canonical mode yields one representative per isomorphism class: the
/// graph whose adjacency bitstring `x(0,1) x(0,2) x(1,2) …` is
/// lexicographically smallest over all vertex permutations.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
    dedup: Dedup,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, VerifyError> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(VerifyError::OrderTooLarge(n));
    }
    let iter: Box<dyn Iterator<Item = Graph> + Send> = match dedup {
        Dedup::Labeled => Box::new(labeled_range(n, 0, 1u64 << pair_count(n))),
        Dedup::Canonical => Box::new(canonical_classes(n)?.iter().cloned()),
    };
    Ok(if connected_only {
        Box::new(iter.filter(is_connected))
    } else {
        iter
    })
}

fn labeled_range(n: usize, start: u64, end: u64) -> impl Iterator<Item = Graph> {
    (start..end).map(move |mask| Graph::from_pair_mask(n, mask))
}

/// Adjacency bitstring with `x(0,1)` as the most significant bit.
fn bitstring_key(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> u64 {
    let p = pair_count(n);
    edges.fold(0u64, |acc, (u, v)| {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        acc | 1 << (p - 1 - crate::graph::pair_index(i, j))
    })
}

fn graph_from_key(n: usize, key: u64) -> Graph {
    let p = pair_count(n);
    let mut mask = 0u64;
    for i in 0..p {
        if key >> (p - 1 - i) & 1 == 1 {
            mask |= 1 << i;
        }
    }
    Graph::from_pair_mask(n, mask)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        heap(k - 1, a, out);
        for i in 0..k - 1 {
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
            heap(k - 1, a, out);
        }
    }
    heap(n, &mut current, &mut out);
    out
}

/// Lexicographically smallest adjacency bitstring over all relabelings.
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= MAX_CANONICAL_ORDER + 1,
        "canonical form limited to small orders"
    );
    let edges = g.edges();
    permutations(n)
        .iter()
        .map(|perm| bitstring_key(n, edges.iter().map(|&(u, v)| (perm[u], perm[v]))))
        .min()
        .unwrap_or(0)
}

/// One canonical representative per isomorphism class on `n ≤ 7` vertices,
/// sorted by canonical key. Built by attaching a new vertex to every
/// class on `n − 1` vertices in every possible way.
pub fn canonical_classes(n: usize) -> Result<&'static [Graph], VerifyError> {
    static CACHE: [OnceLock<Vec<Graph>>; MAX_CANONICAL_ORDER + 1] =
        [const { OnceLock::new() }; MAX_CANONICAL_ORDER + 1];
    if n == 0 || n > MAX_CANONICAL_ORDER {
        return Err(VerifyError::OrderTooLarge(n));
    }
    Ok(CACHE[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1)];
        }
        let perms = permutations(n);
        let smaller = canonical_classes(n - 1).expect("smaller order is in range");
        let mut keys = HashSet::new();
        for base in smaller {
            let base_edges = base.edges();
            for subset in 0u64..1 << (n - 1) {
                let mut edges = base_edges.clone();
                edges.extend(
                    (0..n - 1)
                        .filter(|&v| subset >> v & 1 == 1)
                        .map(|v| (v, n - 1)),
                );
                let key = perms
                    .iter()
                    .map(|perm| bitstring_key(n, edges.iter().map(|&(u, v)| (perm[u], perm[v]))))
                    .min()
                    .unwrap_or(0);
                keys.insert(key);
            }
        }
        let mut keys: Vec<u64> = keys.into_iter().collect();
        keys.sort_unstable();
        keys.into_iter().map(|k| graph_from_key(n, k)).collect()
    }))
}

/// Tunables shared by every per-graph check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Largest walk length for the exact walk checks.
    pub walk_len: usize,
    pub pipeline: PipelineConfig,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            walk_len: 12,
            pipeline: PipelineConfig::default(),
        }
    }
}

/// Lazily computed per-graph quantities shared between checks.
pub struct CheckContext<'a> {
    g: &'a Graph,
    config: CheckConfig,
    spectrum: OnceCell<Result<Spectrum, SpectrumError>>,
    walks: OnceCell<WalkTable>,
    connected: OnceCell<bool>,
}

/// Verdict plus whether the graph attains equality in the checked bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Checked {
    pub verdict: Verdict,
    pub tight: bool,
}

impl From<Verdict> for Checked {
    fn from(verdict: Verdict) -> Self {
        Checked {
            verdict,
            tight: false,
        }
    }
}

impl<'a> CheckContext<'a> {
    pub fn new(g: &'a Graph, config: CheckConfig) -> Self {
        Self {
            g,
            config,
            spectrum: OnceCell::new(),
            walks: OnceCell::new(),
            connected: OnceCell::new(),
        }
    }

    fn spectrum(&self) -> Result<&Spectrum, Verdict> {
        self.spectrum
            .get_or_init(|| eigendecompose(self.g, DEFAULT_TOL))
            .as_ref()
            .map_err(|e| Verdict::Inconclusive {
                reason: e.to_string(),
            })
    }

    fn walks(&self) -> &WalkTable {
        self.walks
            .get_or_init(|| walk_counts(self.g, self.config.walk_len.max(2)).expect("n >= 1"))
    }

    fn connected(&self) -> bool {
        *self.connected.get_or_init(|| is_connected(self.g))
    }

    fn report(&self, id: TheoremId, detail: impl Into<String>) -> CounterexampleReport {
        CounterexampleReport::new(id, self.g, detail)
    }

    pub fn check(&self, id: TheoremId) -> Checked {
        if self.g.n() == 0 {
            return Verdict::vacuous("empty graph").into();
        }
        match self.check_inner(id) {
            Ok(c) => c,
            Err(v) => v.into(),
        }
    }

    fn check_inner(&self, id: TheoremId) -> Result<Checked, Verdict> {
        let g = self.g;
        let verdict = match id {
            TheoremId::Mantel => mantel_check(g),
            TheoremId::Nosal => return self.check_nosal(),
            TheoremId::SpectralMantel => {
                let l1 = self.spectrum()?.lambda1();
                match spectral_mantel_classify_with(g, l1) {
                    MantelClass::Edgeless => Verdict::vacuous("no edges"),
                    MantelClass::BelowThreshold { .. } => Verdict::vacuous("λ₁ < √m"),
                    MantelClass::HasTriangle { .. }
                    | MantelClass::ExtremalCompleteBipartite { .. } => Verdict::Holds,
                    MantelClass::TriangleFreeAboveThreshold { lambda1, m } => Verdict::violated(
                        self.report(id, "λ₁ ≥ √m, triangle-free, not complete bipartite")
                            .with("lambda1", lambda1)
                            .with("sqrt_m", (m as f64).sqrt()),
                    ),
                }
            }
            TheoremId::TriangleTrace => {
                let s = self.spectrum()?;
                let brute = count_triangles_brute(g);
                match triangle_count_spectral_rounded(s) {
                    Ok(t) if t == brute => Verdict::Holds,
                    _ => Verdict::violated(
                        self.report(id, "Σλ³/6 differs from the triangle count")
                            .with("spectral", triangle_count_spectral(s))
                            .with("brute", brute as f64),
                    ),
                }
            }
            TheoremId::Stanley => return self.check_bound(BoundKind::Stanley),
            TheoremId::Hong => return self.check_bound(BoundKind::Hong),
            TheoremId::HongShuFang => return self.check_bound(BoundKind::HongShuFang),
            TheoremId::ClosedNeighborhoodBound => {
                return self.check_bound(BoundKind::ClosedNeighborhood)
            }
            TheoremId::OpenNeighborhoodBound => {
                return self.check_bound(BoundKind::OpenNeighborhood)
            }
            TheoremId::WalkInequality => {
                let table = self.walks();
                let report = walk_ratio_inequality_from(g, table);
                let monotone = (1..table.max_len).all(|k| table.totals[k + 1] >= table.totals[k]);
                if let Some(bad) = report.residuals.iter().find(|r| !r.holds) {
                    Verdict::violated(
                        self.report(
                            id,
                            format!("w_k + w_(k-1) > maxclosed·w_(k-2) at k = {}", bad.k),
                        )
                        .with("residual", bad.value),
                    )
                } else if !monotone {
                    Verdict::violated(self.report(id, "w_(k+1) < w_k for some k ≥ 1"))
                } else {
                    Verdict::Holds
                }
            }
            TheoremId::DecompositionIdentity => {
                if decomposition_identity_holds(g, self.walks()) {
                    Verdict::Holds
                } else {
                    Verdict::violated(self.report(id, "w_k ≠ Σ w_(k-2)(i) w_2(i)"))
                }
            }
            TheoremId::WalkExpansion => self.check_walk_expansion()?,
            TheoremId::DegreePeeling => self.check_peeling(),
            TheoremId::BondyPancyclicity => bondy_pancyclicity_check(g),
            TheoremId::ConsecutiveEvenCycles => {
                consecutive_even_cycles_check(g, g.n().div_ceil(28), &self.config.pipeline)
            }
            TheoremId::SpectrumSymmetry => {
                let symmetric = is_spectrum_symmetric(self.spectrum()?, CLUSTER_EPS);
                let bipartite = bipartition(g).is_some();
                if symmetric == bipartite {
                    Verdict::Holds
                } else {
                    Verdict::violated(self.report(
                        id,
                        format!("spectrum symmetric = {symmetric}, bipartite = {bipartite}"),
                    ))
                }
            }
            TheoremId::DiameterDistinct => {
                if !self.connected() {
                    Verdict::vacuous("disconnected")
                } else {
                    let diameter = connectivity(g).expect("n >= 1").diameter.unwrap_or(0);
                    let distinct = distinct_eigenvalue_count(self.spectrum()?, CLUSTER_EPS);
                    if distinct > diameter {
                        Verdict::Holds
                    } else {
                        Verdict::violated(
                            self.report(id, "fewer distinct eigenvalues than diameter + 1")
                                .with("diameter", diameter as f64)
                                .with("distinct", distinct as f64),
                        )
                    }
                }
            }
        };
        Ok(verdict.into())
    }

    fn check_nosal(&self) -> Result<Checked, Verdict> {
        let m = self.g.m();
        if m == 0 {
            return Ok(Verdict::vacuous("no edges").into());
        }
        let l1 = self.spectrum()?.lambda1();
        let sqrt_m = (m as f64).sqrt();
        let tight = (l1 - sqrt_m).abs() <= EQ_EPS;
        let verdict = if l1 <= sqrt_m + EQ_EPS {
            Verdict::vacuous("λ₁ ≤ √m")
        } else if find_triangle(self.g).is_some() {
            Verdict::Holds
        } else {
            Verdict::violated(
                self.report(TheoremId::Nosal, "λ₁ > √m without a triangle")
                    .with("lambda1", l1)
                    .with("sqrt_m", sqrt_m),
            )
        };
        Ok(Checked { verdict, tight })
    }

    fn check_bound(&self, kind: BoundKind) -> Result<Checked, Verdict> {
        let id = kind.theorem();
        let l1 = self.spectrum()?.lambda1();
        let r = evaluate_with(self.g, kind, l1);
        if let Some(reason) = r.skipped {
            return Ok(Verdict::vacuous(reason).into());
        }
        let bound = r.bound_value.unwrap_or(f64::NAN);
        let report = |detail: &str| {
            Verdict::violated(
                self.report(id, detail)
                    .with("lambda1", l1)
                    .with("bound", bound)
                    .with("slack", r.slack.unwrap_or(f64::NAN)),
            )
        };
        if r.holds != Some(true) {
            return Ok(Checked {
                verdict: report("bound below the spectral radius"),
                tight: false,
            });
        }
        // equality characterizations on connected graphs
        let class_member = match kind {
            BoundKind::HongShuFang if self.connected() => Some(is_bidegreed_with_full(self.g)),
            BoundKind::OpenNeighborhood if self.connected() => {
                Some(is_regular(self.g) || is_bipartite_semiregular(self.g))
            }
            _ => None,
        };
        let verdict = match class_member {
            Some(member) if member != r.tight => report(if r.tight {
                "equality outside the extremal class"
            } else {
                "extremal-class graph without equality"
            }),
            _ => Verdict::Holds,
        };
        Ok(Checked {
            verdict,
            tight: r.tight,
        })
    }

    fn check_walk_expansion(&self) -> Result<Verdict, Verdict> {
        let id = TheoremId::WalkExpansion;
        let s = self.spectrum()?;
        let e = match walk_expansion_from(s, self.walks()) {
            Ok(e) => e,
            Err(err) => return Ok(Verdict::violated(self.report(id, err.to_string()))),
        };
        if let Some(c) = e.coefficients.iter().copied().find(|&c| c < -1e-10) {
            return Ok(Verdict::violated(
                self.report(id, "negative expansion coefficient")
                    .with("c", c),
            ));
        }
        let bipartite_perron =
            self.g.m() > 0 && (s.lambda_min() + s.lambda1()).abs() <= CLUSTER_EPS;
        if self.connected() && bipartite_perron {
            match a_greater_b_with(self.g, s) {
                Ok(r) if r.holds => {}
                Ok(r) => {
                    return Ok(Verdict::violated(
                        self.report(id, "a > b or the ratio certificate failed")
                            .with("a", r.a)
                            .with("b", r.b)
                            .with("observed_ratio", r.observed_ratio.unwrap_or(f64::NAN))
                            .with("predicted_ratio", r.predicted_ratio.unwrap_or(f64::NAN)),
                    ))
                }
                Err(err) => return Ok(Verdict::violated(self.report(id, err.to_string()))),
            }
        }
        Ok(Verdict::Holds)
    }

    fn check_peeling(&self) -> Verdict {
        let (n, m) = (self.g.n(), self.g.m());
        let mut applied = false;
        for k in 1..=3 {
            if m < k * n {
                continue;
            }
            applied = true;
            let r = erdos_peel(self.g, k);
            let ok = r.min_degree.is_some_and(|d| d > k)
                && induced_subgraph(self.g, &r.survivors)
                    .map(|(h, _)| h.min_degree() > k)
                    .unwrap_or(false);
            if !ok {
                return Verdict::violated(
                    self.report(
                        TheoremId::DegreePeeling,
                        format!("peeling at k = {k} failed"),
                    )
                    .with("k", k as f64)
                    .with("survivors", r.order() as f64),
                );
            }
        }
        if applied {
            Verdict::Holds
        } else {
            Verdict::vacuous("m < n")
        }
    }
}

/// Runs one checker on one graph with default settings.
pub fn check_theorem(g: &Graph, id: TheoremId) -> Verdict {
    CheckContext::new(g, CheckConfig::default())
        .check(id)
        .verdict
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Totals {
    pub holds: u64,
    pub vacuous: u64,
    pub violated: u64,
    pub inconclusive: u64,
}

impl Totals {
    fn add(&mut self, v: &Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Vacuous { .. } => self.vacuous += 1,
            Verdict::Violated { .. } => self.violated += 1,
            Verdict::Inconclusive { .. } => self.inconclusive += 1,
        }
    }

    fn merge(&mut self, o: &Totals) {
        self.holds += o.holds;
        self.vacuous += o.vacuous;
        self.violated += o.violated;
        self.inconclusive += o.inconclusive;
    }

    pub fn total(&self) -> u64 {
        self.holds + self.vacuous + self.violated + self.inconclusive
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub connected_only: bool,
    pub dedup: Dedup,
    /// Empty means every theorem.
    pub theorems: Vec<TheoremId>,
    /// Worker count; excluded from reports so they compare equal across runs.
    #[serde(skip)]
    pub jobs: usize,
    /// Required for order 8.
    pub long_run: bool,
    pub check: CheckConfig,
    /// Graphs kept per tight-census list (smallest graph6 strings first).
    pub tight_limit: usize,
    pub counterexample_limit: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            min_n: 1,
            max_n: 6,
            connected_only: false,
            dedup: Dedup::Labeled,
            theorems: Vec::new(),
            jobs: 1,
            long_run: false,
            check: CheckConfig::default(),
            tight_limit: 64,
            counterexample_limit: 256,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.min_n == 0 || self.min_n > self.max_n {
            return Err(VerifyError::InvalidConfig(format!(
                "order range {}..={} is empty or starts at 0",
                self.min_n, self.max_n
            )));
        }
        if self.max_n > MAX_EXHAUSTIVE_ORDER {
            return Err(VerifyError::OrderTooLarge(self.max_n));
        }
        if self.max_n == MAX_EXHAUSTIVE_ORDER && !self.long_run {
            return Err(VerifyError::InvalidConfig(
                "order 8 enumerates 2^28 graphs; pass the long-run flag".into(),
            ));
        }
        if self.dedup == Dedup::Canonical && self.max_n > MAX_CANONICAL_ORDER {
            return Err(VerifyError::OrderTooLarge(self.max_n));
        }
        if self.jobs == 0 {
            return Err(VerifyError::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }

    fn theorem_list(&self) -> Vec<TheoremId> {
        resolve_theorems(&self.theorems)
    }
}

fn resolve_theorems(ids: &[TheoremId]) -> Vec<TheoremId> {
    if ids.is_empty() {
        TheoremId::ALL.to_vec()
    } else {
        let mut v = ids.to_vec();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub distribution: Distribution,
    pub count: u64,
    pub seed: u64,
    pub theorems: Vec<TheoremId>,
    #[serde(skip)]
    pub jobs: usize,
    pub check: CheckConfig,
    pub tight_limit: usize,
    pub counterexample_limit: usize,
}

impl FuzzConfig {
    pub fn new(distribution: Distribution, count: u64, seed: u64) -> Self {
        Self {
            distribution,
            count,
            seed,
            theorems: Vec::new(),
            jobs: 1,
            check: CheckConfig::default(),
            tight_limit: 64,
            counterexample_limit: 256,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ReportConfig {
    Sweep(SweepConfig),
    Fuzz(FuzzConfig),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: ReportConfig,
    pub graphs: u64,
    pub totals: BTreeMap<TheoremId, Totals>,
    /// Graphs attaining equality, by bound id ("nosal" records λ₁ = √m).
    pub tight: BTreeMap<String, Vec<String>>,
    pub tight_counts: BTreeMap<String, u64>,
    pub counterexamples: Vec<CounterexampleReport>,
    pub runtime_ms: u64,
}

impl SweepReport {
    pub fn violated(&self) -> u64 {
        self.totals.values().map(|t| t.violated).sum()
    }

    pub fn totals_for(&self, id: TheoremId) -> Totals {
        self.totals.get(&id).copied().unwrap_or_default()
    }

    /// Equality ignoring wall-clock time.
    pub fn same_results(&self, other: &SweepReport) -> bool {
        let mut a = self.clone();
        a.runtime_ms = other.runtime_ms;
        match (&mut a.config, &other.config) {
            (ReportConfig::Sweep(x), ReportConfig::Sweep(y)) => x.jobs = y.jobs,
            (ReportConfig::Fuzz(x), ReportConfig::Fuzz(y)) => x.jobs = y.jobs,
            _ => return false,
        }
        &a == other
    }
}

/// Partial aggregate over one shard.
#[derive(Default)]
struct Partial {
    graphs: u64,
    totals: BTreeMap<TheoremId, Totals>,
    tight: BTreeMap<String, Vec<String>>,
    tight_counts: BTreeMap<String, u64>,
    counterexamples: Vec<CounterexampleReport>,
}

impl Partial {
    fn record(
        &mut self,
        g: &Graph,
        theorems: &[TheoremId],
        check: CheckConfig,
        limits: (usize, usize),
    ) {
        self.graphs += 1;
        let ctx = CheckContext::new(g, check);
        for &id in theorems {
            let Checked { verdict, tight } = ctx.check(id);
            self.totals.entry(id).or_default().add(&verdict);
            if tight {
                let key = tight_key(id).to_string();
                *self.tight_counts.entry(key.clone()).or_default() += 1;
                let list = self.tight.entry(key).or_default();
                list.push(graph_label(g));
                if list.len() > 2 * limits.0.max(1) {
                    list.sort();
                    list.truncate(limits.0);
                }
            }
            if let Verdict::Violated { report } = verdict {
                self.counterexamples.push(*report);
                if self.counterexamples.len() > 2 * limits.1.max(1) {
                    self.counterexamples.sort_by_key(|a| a.sort_key());
                    self.counterexamples.truncate(limits.1);
                }
            }
        }
    }

    fn merge(mut self, other: Partial, limits: (usize, usize)) -> Partial {
        self.graphs += other.graphs;
        for (id, t) in other.totals {
            self.totals.entry(id).or_default().merge(&t);
        }
        for (k, c) in other.tight_counts {
            *self.tight_counts.entry(k).or_default() += c;
        }
        for (k, list) in other.tight {
            let mine = self.tight.entry(k).or_default();
            mine.extend(list);
            mine.sort();
            mine.truncate(limits.0);
        }
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|a| a.sort_key());
        self.counterexamples.truncate(limits.1);
        self
    }
}

fn tight_key(id: TheoremId) -> &'static str {
    match id {
        TheoremId::Nosal => BoundKind::Nosal.id(),
        other => other.id(),
    }
}

fn graph_label(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("n={} m={}", g.n(), g.m()))
}

#[cfg(feature = "parallel")]
fn run_shards<S, F>(
    shards: Vec<S>,
    jobs: usize,
    work: F,
    limits: (usize, usize),
) -> Result<Partial, VerifyError>
where
    S: Send,
    F: Fn(S) -> Partial + Send + Sync,
{
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| VerifyError::InvalidConfig(e.to_string()))?;
    let parts: Vec<Partial> = pool.install(|| shards.into_par_iter().map(&work).collect());
    Ok(parts
        .into_iter()
        .fold(Partial::default(), |acc, p| acc.merge(p, limits)))
}

#[cfg(not(feature = "parallel"))]
fn run_shards<S, F>(
    shards: Vec<S>,
    _jobs: usize,
    work: F,
    limits: (usize, usize),
) -> Result<Partial, VerifyError>
where
    F: Fn(S) -> Partial,
{
    Ok(shards
        .into_iter()
        .map(work)
        .fold(Partial::default(), |acc, p| acc.merge(p, limits)))
}

enum Shard {
    Labeled { n: usize, start: u64, end: u64 },
    Classes { graphs: &'static [Graph] },
}

const SHARDS_PER_ORDER: u64 = 256;

/// Checks every selected theorem on every enumerated graph.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport, VerifyError> {
    config.validate()?;
    let started = Instant::now();
    let theorems = config.theorem_list();
    let limits = (config.tight_limit, config.counterexample_limit);
    let mut shards = Vec::new();
    for n in config.min_n..=config.max_n {
        match config.dedup {
            Dedup::Labeled => {
                let total = 1u64 << pair_count(n);
                let size = total.div_ceil(SHARDS_PER_ORDER).max(1);
                let mut start = 0;
                while start < total {
                    let end = (start + size).min(total);
                    shards.push(Shard::Labeled { n, start, end });
                    start = end;
                }
            }
            Dedup::Canonical => {
                let classes = canonical_classes(n)?;
                shards.extend(classes.chunks(64).map(|graphs| Shard::Classes { graphs }));
            }
        }
    }
    let connected_only = config.connected_only;
    let check = config.check;
    let work = |shard: Shard| {
        let mut part = Partial::default();
        let mut visit = |g: Graph| {
            if !connected_only || is_connected(&g) {
                part.record(&g, &theorems, check, limits);
            }
        };
        match shard {
            Shard::Labeled { n, start, end } => labeled_range(n, start, end).for_each(&mut visit),
            Shard::Classes { graphs } => graphs.iter().cloned().for_each(&mut visit),
        }
        part
    };
    let merged = run_shards(shards, config.jobs, work, limits)?;
    Ok(finish(ReportConfig::Sweep(config.clone()), merged, started))
}

fn finish(config: ReportConfig, p: Partial, started: Instant) -> SweepReport {
    let mut totals = p.totals;
    let ids: Vec<TheoremId> = match &config {
        ReportConfig::Sweep(c) => c.theorem_list(),
        ReportConfig::Fuzz(c) => resolve_theorems(&c.theorems),
    };
    for id in ids {
        totals.entry(id).or_default();
    }
    SweepReport {
        config,
        graphs: p.graphs,
        totals,
        tight: p.tight,
        tight_counts: p.tight_counts,
        counterexamples: p.counterexamples,
        runtime_ms: started.elapsed().as_millis() as u64,
    }
}

/// Inclusive integer range written `a` or `a-b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
}

/// Probability written `p` (fixed) or `p1-p2` (drawn from the 0.1 grid
/// inside the interval).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbRange {
    pub min: f64,
    pub max: f64,
}

/// Random graph models for fuzzing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Distribution {
    Gnp {
        n: OrderRange,
        p: ProbRange,
    },
    RandomRegular {
        n: usize,
        k: usize,
    },
    RandomBipartite {
        a: usize,
        b: usize,
        p: f64,
    },
    /// `K_{⌈n/2⌉,⌊n/2⌋}` plus random intra-part edges.
    BipartitePlus {
        n: OrderRange,
        q: f64,
    },
}

impl Distribution {
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Result<Graph, VerifyError> {
        let bad = |e: crate::graph::GraphError| VerifyError::BadDistribution(e.to_string());
        Ok(match *self {
            Distribution::Gnp { n, p } => {
                let order = rng.gen_range(n.min..=n.max);
                let prob = p.draw(rng);
                gnp_with(order, prob, rng)
            }
            Distribution::RandomRegular { n, k } => random_regular_with(n, k, rng).map_err(bad)?,
            Distribution::RandomBipartite { a, b, p } => random_bipartite_with(a, b, p, rng),
            Distribution::BipartitePlus { n, q } => {
                let order = rng.gen_range(n.min..=n.max);
                complete_bipartite_plus_with(order, q, rng)
            }
        })
    }

    fn validate(&self) -> Result<(), VerifyError> {
        let bad = |m: String| Err(VerifyError::BadDistribution(m));
        let prob_ok = |p: f64| (0.0..=1.0).contains(&p);
        match *self {
            Distribution::Gnp { n, p } => {
                if n.min > n.max || n.min == 0 {
                    return bad(format!("order range {}-{}", n.min, n.max));
                }
                if !(prob_ok(p.min) && prob_ok(p.max) && p.min <= p.max) {
                    return bad(format!("probability range {}-{}", p.min, p.max));
                }
            }
            Distribution::RandomRegular { n, k } => {
                if k >= n || (n * k) % 2 == 1 {
                    return bad(format!("no {k}-regular graph on {n} vertices"));
                }
            }
            Distribution::RandomBipartite { a, b, p } => {
                if a + b == 0 || !prob_ok(p) {
                    return bad(format!("bipartite:{a},{b},{p}"));
                }
            }
            Distribution::BipartitePlus { n, q } => {
                if n.min < 3 || n.min > n.max || !prob_ok(q) {
                    return bad(format!("bipartite-plus:{}-{},{q}", n.min, n.max));
                }
            }
        }
        Ok(())
    }
}

impl ProbRange {
    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        if self.min == self.max {
            return self.min;
        }
        let lo = (self.min * 10.0).ceil() as i64;
        let hi = (self.max * 10.0).floor() as i64;
        if lo > hi {
            return self.min;
        }
        rng.gen_range(lo..=hi) as f64 / 10.0
    }
}

fn parse_order(s: &str) -> Option<OrderRange> {
    match s.split_once('-') {
        Some((a, b)) => Some(OrderRange {
            min: a.trim().parse().ok()?,
            max: b.trim().parse().ok()?,
        }),
        None => {
            let n = s.trim().parse().ok()?;
            Some(OrderRange { min: n, max: n })
        }
    }
}

fn parse_prob(s: &str) -> Option<ProbRange> {
    match s.split_once('-') {
        Some((a, b)) => Some(ProbRange {
            min: a.trim().parse().ok()?,
            max: b.trim().parse().ok()?,
        }),
        None => {
            let p = s.trim().parse().ok()?;
            Some(ProbRange { min: p, max: p })
        }
    }
}

impl FromStr for Distribution {
    type Err = VerifyError;

    /// `gnp:N,P`, `regular:N,K`, `bipartite:A,B,P` or `bipartite-plus:N,Q`,
    /// where `N` may be a range `a-b` and `P` a range `p1-p2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VerifyError::BadDistribution(s.to_string());
        let (model, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let dist = match (model.trim(), args.as_slice()) {
            ("gnp", [n, p]) => Distribution::Gnp {
                n: parse_order(n).ok_or_else(bad)?,
                p: parse_prob(p).ok_or_else(bad)?,
            },
            ("regular", [n, k]) => Distribution::RandomRegular {
                n: n.parse().map_err(|_| bad())?,
                k: k.parse().map_err(|_| bad())?,
            },
            ("bipartite", [a, b, p]) => Distribution::RandomBipartite {
                a: a.parse().map_err(|_| bad())?,
                b: b.parse().map_err(|_| bad())?,
                p: p.parse().map_err(|_| bad())?,
            },
            ("bipartite-plus", [n, q]) => Distribution::BipartitePlus {
                n: parse_order(n).ok_or_else(bad)?,
                q: q.parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        dist.validate()?;
        Ok(dist)
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = |r: OrderRange| {
            if r.min == r.max {
                r.min.to_string()
            } else {
                format!("{}-{}", r.min, r.max)
            }
        };
        match *self {
            Distribution::Gnp { n, p } if p.min == p.max => write!(f, "gnp:{},{}", range(n), p.min),
            Distribution::Gnp { n, p } => write!(f, "gnp:{},{}-{}", range(n), p.min, p.max),
            Distribution::RandomRegular { n, k } => write!(f, "regular:{n},{k}"),
            Distribution::RandomBipartite { a, b, p } => write!(f, "bipartite:{a},{b},{p}"),
            Distribution::BipartitePlus { n, q } => write!(f, "bipartite-plus:{},{q}", range(n)),
        }
    }
}

/// The `i`-th sample of a fuzz run; independent of how samples are sharded.
pub fn fuzz_sample(
    distribution: &Distribution,
    seed: u64,
    index: u64,
) -> Result<Graph, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    distribution.sample(&mut rng)
}

const FUZZ_SHARD: u64 = 64;

/// Checks the selected theorems on `count` seeded samples.
pub fn fuzz(config: &FuzzConfig) -> Result<SweepReport, VerifyError> {
    config.distribution.validate()?;
    if config.jobs == 0 {
        return Err(VerifyError::InvalidConfig("jobs must be at least 1".into()));
    }
    let started = Instant::now();
    let theorems = resolve_theorems(&config.theorems);
    let limits = (config.tight_limit, config.counterexample_limit);
    let shards: Vec<(u64, u64)> = (0..config.count.div_ceil(FUZZ_SHARD))
        .map(|i| (i * FUZZ_SHARD, ((i + 1) * FUZZ_SHARD).min(config.count)))
        .collect();
    let dist = config.distribution;
    let (seed, check) = (config.seed, config.check);
    let work = |(start, end): (u64, u64)| {
        let mut part = Partial::default();
        for i in start..end {
            match fuzz_sample(&dist, seed, i) {
                Ok(g) => part.record(&g, &theorems, check, limits),
                Err(_) => {
                    part.graphs += 1;
                    for &id in &theorems {
                        part.totals.entry(id).or_default().inconclusive += 1;
                    }
                }
            }
        }
        part
    };
    let merged = run_shards(shards, config.jobs, work, limits)?;
    Ok(finish(ReportConfig::Fuzz(config.clone()), merged, started))
}
