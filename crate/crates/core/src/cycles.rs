//! Cycles of prescribed length, degree peeling, and the certificate chain
//! behind the consecutive-even-cycles statement.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bfs_distances, induced_subgraph, words_for, Bits, Graph};
use crate::spectrum::{perron_root, SpectrumError, DEFAULT_TOL, EQ_EPS};
use crate::verdict::{CounterexampleReport, TheoremId, Verdict};

/// Node expansions allowed per (graph, length) search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CycleError {
    #[error("spectral radius {lambda1} does not exceed sqrt(floor(n²/4)) = {threshold}")]
    HypothesisNotMet { lambda1: f64, threshold: f64 },
    #[error("the pipeline needs at least 4 vertices, got {0}")]
    OrderTooSmall(usize),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", content = "cycle", rename_all = "snake_case")]
pub enum CycleSearch {
    /// Vertex sequence of a simple cycle; the closing edge is implied.
    Found(Vec<usize>),
    /// Exhaustive search completed without finding a cycle.
    Absent,
    ExceededBudget,
}

impl CycleSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CycleSearch::Found(_))
    }
}

/// Consecutive vertices adjacent, all distinct, closing edge present.
pub fn validate_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    if l < 3 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..l).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % l]))
}

pub fn has_cycle_of_length(g: &Graph, l: usize) -> CycleSearch {
    find_cycle(g, l, DEFAULT_BUDGET)
}

/// Backtracking search for a cycle on exactly `l` vertices. Each cycle is
/// rooted at its lowest-index vertex and walked in the direction where the
/// second vertex is smaller than the last; a branch is cut when the BFS
/// distance back to the root exceeds the remaining edge budget. Lengths
/// outside `3..=n` are reported absent.
pub fn find_cycle(g: &Graph, l: usize, budget: u64) -> CycleSearch {
    let n = g.n();
    if l < 3 || l > n {
        return CycleSearch::Absent;
    }
    let stride = words_for(n);
    let mut search = Search {
        g,
        l,
        anchor: 0,
        allowed: vec![0; stride],
        used: vec![0; stride],
        dist: Vec::new(),
        path: Vec::with_capacity(l),
        budget,
        expansions: 0,
    };
    for anchor in 0..=n - l {
        if g.degree(anchor) < 2 {
            continue;
        }
        search.anchor = anchor;
        search.allowed.iter_mut().for_each(|w| *w = 0);
        for v in anchor..n {
            search.allowed[v / 64] |= 1 << (v % 64);
        }
        let (sub, map) = match induced_subgraph(g, &(anchor..n).collect::<Vec<_>>()) {
            Ok(x) => x,
            Err(_) => continue,
        };
        let local = bfs_distances(&sub, 0);
        search.dist = vec![usize::MAX; n];
        for (i, &v) in map.iter().enumerate() {
            search.dist[v] = local[i];
        }
        search.used.iter_mut().for_each(|w| *w = 0);
        search.path.clear();
        search.path.push(anchor);
        search.used[anchor / 64] |= 1 << (anchor % 64);
        match search.extend(anchor) {
            Some(true) => return CycleSearch::Found(search.path.clone()),
            Some(false) => {}
            None => return CycleSearch::ExceededBudget,
        }
    }
    CycleSearch::Absent
}

struct Search<'a> {
    g: &'a Graph,
    l: usize,
    anchor: usize,
    allowed: Vec<u64>,
    used: Vec<u64>,
    dist: Vec<usize>,
    path: Vec<usize>,
    budget: u64,
    expansions: u64,
}

impl Search<'_> {
    /// `Some(true)` leaves the cycle in `self.path`; `None` means the budget ran out.
    fn extend(&mut self, v: usize) -> Option<bool> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return None;
        }
        let t = self.path.len();
        if t == self.l {
            return Some(self.g.has_edge(v, self.anchor) && self.path[1] < v);
        }
        let candidates: Vec<u64> = self
            .g
            .row(v)
            .iter()
            .zip(&self.allowed)
            .zip(&self.used)
            .map(|((r, a), u)| r & a & !u)
            .collect();
        for u in Bits::new(&candidates) {
            // edges still needed from u back to the anchor
            if self.dist[u] > self.l - t {
                continue;
            }
            self.path.push(u);
            self.used[u / 64] |= 1 << (u % 64);
            match self.extend(u) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.used[u / 64] &= !(1 << (u % 64));
            self.path.pop();
        }
        Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    pub l_max: usize,
    /// Lengths with a witness, ascending.
    pub present: Vec<usize>,
    pub witnesses: BTreeMap<usize, Vec<usize>>,
    /// Lengths whose search hit the budget.
    pub inconclusive: Vec<usize>,
}

impl CycleSpectrum {
    pub fn contains(&self, l: usize) -> bool {
        self.witnesses.contains_key(&l)
    }

    /// Bit `l` set iff a cycle of length `l` is present.
    pub fn mask(&self) -> u128 {
        self.present
            .iter()
            .filter(|&&l| l < 128)
            .fold(0, |acc, &l| acc | 1 << l)
    }
}

pub fn cycle_spectrum(g: &Graph, l_max: usize) -> CycleSpectrum {
    cycle_spectrum_with_budget(g, l_max, DEFAULT_BUDGET)
}

pub fn cycle_spectrum_with_budget(g: &Graph, l_max: usize, budget: u64) -> CycleSpectrum {
    let l_max = l_max.min(g.n());
    let mut spectrum = CycleSpectrum {
        l_max,
        present: Vec::new(),
        witnesses: BTreeMap::new(),
        inconclusive: Vec::new(),
    };
    for l in 3..=l_max {
        match find_cycle(g, l, budget) {
            CycleSearch::Found(c) => {
                spectrum.present.push(l);
                spectrum.witnesses.insert(l, c);
            }
            CycleSearch::Absent => {}
            CycleSearch::ExceededBudget => spectrum.inconclusive.push(l),
        }
    }
    spectrum
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStep {
    pub vertex: usize,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingResult {
    pub k: usize,
    /// Surviving vertices, ascending.
    pub survivors: Vec<usize>,
    /// Minimum degree of the induced subgraph on the survivors.
    pub min_degree: Option<usize>,
    pub trace: Vec<PeelStep>,
}

impl PeelingResult {
    pub fn order(&self) -> usize {
        self.survivors.len()
    }
}

/// Repeatedly deletes the lowest-index vertex of current degree at most
/// `k`. When `m ≥ k·n` the survivors are nonempty and induce minimum
/// degree at least `k + 1`.
pub fn erdos_peel(g: &Graph, k: usize) -> PeelingResult {
    let n = g.n();
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let mut trace = Vec::new();
    loop {
        let next = (0..n).find(|&v| alive[v] && degree[v] <= k);
        let Some(v) = next else { break };
        trace.push(PeelStep {
            vertex: v,
            degree: degree[v],
        });
        alive[v] = false;
        for u in g.neighbors(v) {
            if alive[u] {
                degree[u] -= 1;
            }
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let min_degree = survivors.iter().map(|&v| degree[v]).min();
    PeelingResult {
        k,
        survivors,
        min_degree,
        trace,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PipelineConfig {
    /// Largest length searched when listing the cycle spectrum of the peeled subgraph.
    pub spectrum_cap: usize,
    /// Largest even length searched in the fallback step.
    pub even_cap: usize,
    /// Orders below this report missing cycles instead of asserting them.
    pub safe_n: usize,
    pub budget: u64,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            spectrum_cap: 10,
            even_cap: 64,
            safe_n: 1000,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum PeelBranch {
    /// `n' ≤ n/4`: the peeled subgraph is checked for pancyclicity directly.
    SmallSubgraph {
        /// δ(H) > n'/2.
        bondy_hypothesis: bool,
        /// Every length `3..=n'` was found in H.
        pancyclic: bool,
    },
    /// `n' > n/4`: the dense-minimum-degree step only holds for unspecified
    /// large orders, so explicit even-cycle search stands in for it.
    LargeSubgraph { asymptotic_step_verified: bool },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvenCycleCertificate {
    pub n: usize,
    pub m: usize,
    /// Power-iteration estimate (a lower bound on λ₁).
    pub lambda1: f64,
    /// √⌊n²/4⌋.
    pub threshold: f64,
    /// λ₁ > threshold.
    pub threshold_met: bool,
    /// 2m ≥ λ₁² + λ₁, the rearranged Stanley bound.
    pub stanley_consequence: bool,
    /// 2m ≥ n²/4 + √⌊n²/4⌋ − 1.
    pub derived_edge_inequality: bool,
    /// d = 2m/n > n/4, checked directly.
    pub average_degree_above_quarter: bool,
    pub peel: PeelingResult,
    /// Survivors nonempty with δ(H) ≥ k + 1.
    pub peel_ok: bool,
    pub branch: PeelBranch,
    /// Cycle spectrum of the peeled subgraph up to the configured cap.
    pub subgraph_cycles: CycleSpectrum,
    /// Even lengths in `4..=min(⌈n/28⌉, even_cap)`.
    pub even_lengths: Vec<usize>,
    /// Witness per even length; vertices use the original labels.
    pub even_witnesses: BTreeMap<usize, Vec<usize>>,
    pub even_missing: Vec<usize>,
    pub even_inconclusive: Vec<usize>,
}

impl EvenCycleCertificate {
    /// Every step of the chain validated and every required even cycle found.
    pub fn is_valid(&self) -> bool {
        let branch_ok = match self.branch {
            PeelBranch::SmallSubgraph {
                bondy_hypothesis,
                pancyclic,
            } => !bondy_hypothesis || pancyclic,
            PeelBranch::LargeSubgraph { .. } => true,
        };
        self.threshold_met
            && self.stanley_consequence
            && self.derived_edge_inequality
            && self.average_degree_above_quarter
            && self.peel_ok
            && branch_ok
            && self.even_missing.is_empty()
            && self.even_inconclusive.is_empty()
    }
}

/// √⌊n²/4⌋.
pub fn mantel_radius_threshold(n: usize) -> f64 {
    ((n * n / 4) as f64).sqrt()
}

/// Walks the proof steps for consecutive even cycles on a concrete graph and
/// records each as a checked certificate.
pub fn even_cycle_certificate(
    g: &Graph,
    config: &PipelineConfig,
) -> Result<EvenCycleCertificate, CycleError> {
    let n = g.n();
    if n < 4 {
        return Err(CycleError::OrderTooSmall(n));
    }
    let m = g.m();
    let lambda1 = perron_root(g, DEFAULT_TOL)?;
    let threshold = mantel_radius_threshold(n);
    if lambda1 <= threshold + EQ_EPS {
        return Err(CycleError::HypothesisNotMet { lambda1, threshold });
    }
    let two_m = 2.0 * m as f64;
    let stanley_consequence = two_m >= lambda1 * lambda1 + lambda1 - EQ_EPS * lambda1.max(1.0);
    let nf = n as f64;
    let derived_edge_inequality = two_m >= nf * nf / 4.0 + threshold - 1.0;
    let average_degree_above_quarter = 8 * m > n * n;

    let k = (n / 8).max(1);
    let peel = erdos_peel(g, k);
    let peel_ok = peel.min_degree.is_some_and(|d| d > k);
    let (h, map) = induced_subgraph(g, &peel.survivors).expect("survivors are in range");
    let n_sub = h.n();

    let subgraph_cycles = relabel(
        cycle_spectrum_with_budget(&h, config.spectrum_cap, config.budget),
        &map,
    );
    let branch = if 4 * n_sub <= n {
        let bondy_hypothesis = 2 * h.min_degree() > n_sub;
        let full = if n_sub <= config.spectrum_cap {
            subgraph_cycles.clone()
        } else {
            cycle_spectrum_with_budget(&h, n_sub, config.budget)
        };
        PeelBranch::SmallSubgraph {
            bondy_hypothesis,
            pancyclic: n_sub >= 3 && (3..=n_sub).all(|l| full.contains(l)),
        }
    } else {
        PeelBranch::LargeSubgraph {
            asymptotic_step_verified: false,
        }
    };

    let l_max = n.div_ceil(28).min(config.even_cap);
    let even_lengths: Vec<usize> = (4..=l_max).step_by(2).collect();
    let mut even_witnesses = BTreeMap::new();
    let mut even_missing = Vec::new();
    let mut even_inconclusive = Vec::new();
    for &l in &even_lengths {
        let in_sub = find_cycle(&h, l, config.budget);
        let found = match in_sub {
            CycleSearch::Found(c) => CycleSearch::Found(c.into_iter().map(|v| map[v]).collect()),
            _ => find_cycle(g, l, config.budget),
        };
        match found {
            CycleSearch::Found(c) => {
                even_witnesses.insert(l, c);
            }
            CycleSearch::Absent => even_missing.push(l),
            CycleSearch::ExceededBudget => even_inconclusive.push(l),
        }
    }

    Ok(EvenCycleCertificate {
        n,
        m,
        lambda1,
        threshold,
        threshold_met: true,
        stanley_consequence,
        derived_edge_inequality,
        average_degree_above_quarter,
        peel,
        peel_ok,
        branch,
        subgraph_cycles,
        even_lengths,
        even_witnesses,
        even_missing,
        even_inconclusive,
    })
}

fn relabel(mut s: CycleSpectrum, map: &[usize]) -> CycleSpectrum {
    for cycle in s.witnesses.values_mut() {
        cycle.iter_mut().for_each(|v| *v = map[*v]);
    }
    s
}

/// Even cycles of every length in `4..=l_max` whenever λ₁ > √⌊n²/4⌋.
pub fn consecutive_even_cycles_check(g: &Graph, l_max: usize, config: &PipelineConfig) -> Verdict {
    let n = g.n();
    if l_max < 4 || n < 4 {
        return Verdict::vacuous(format!("no even length in 4..={l_max}"));
    }
    let lambda1 = match perron_root(g, DEFAULT_TOL) {
        Ok(l) => l,
        Err(e) => {
            return Verdict::Inconclusive {
                reason: e.to_string(),
            }
        }
    };
    let threshold = mantel_radius_threshold(n);
    if lambda1 <= threshold + EQ_EPS {
        return Verdict::vacuous(format!("λ₁ = {lambda1:.6} ≤ √⌊n²/4⌋ = {threshold:.6}"));
    }
    let mut missing = Vec::new();
    for l in (4..=l_max.min(n)).step_by(2) {
        match find_cycle(g, l, config.budget) {
            CycleSearch::Found(_) => {}
            CycleSearch::Absent => missing.push(l),
            CycleSearch::ExceededBudget => {
                return Verdict::Inconclusive {
                    reason: format!("search budget exhausted at length {l}"),
                }
            }
        }
    }
    if missing.is_empty() {
        return Verdict::Holds;
    }
    let mut report = CounterexampleReport::new(
        TheoremId::ConsecutiveEvenCycles,
        g,
        format!("missing even cycle lengths {missing:?}"),
    )
    .with("lambda1", lambda1)
    .with("threshold", threshold)
    .with("l_max", l_max as f64);
    report.report_only = n < config.safe_n;
    Verdict::violated(report)
}

/// Minimum degree above n/2 forces cycles of every length 3..=n.
pub fn bondy_pancyclicity_check(g: &Graph) -> Verdict {
    let n = g.n();
    let delta = g.min_degree();
    if n == 0 || 2 * delta <= n {
        return Verdict::vacuous(format!("δ = {delta} ≤ n/2"));
    }
    let spectrum = cycle_spectrum(g, n);
    if !spectrum.inconclusive.is_empty() {
        return Verdict::Inconclusive {
            reason: format!(
                "search budget exhausted at lengths {:?}",
                spectrum.inconclusive
            ),
        };
    }
    let missing: Vec<usize> = (3..=n).filter(|&l| !spectrum.contains(l)).collect();
    if missing.is_empty() {
        Verdict::Holds
    } else {
        Verdict::violated(
            CounterexampleReport::new(
                TheoremId::BondyPancyclicity,
                g,
                format!("missing cycle lengths {missing:?}"),
            )
            .with("min_degree", delta as f64),
        )
    }
}
