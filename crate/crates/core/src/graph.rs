//! Simple undirected graphs stored as bitset adjacency rows, plus the purely
//! combinatorial classifiers used by the extremal characterizations.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 padding bits are not zero")]
    BadPadding,
    #[error("graph6 body is truncated: expected {expected} bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("order {0} is not supported by short-form graph6 (max 62)")]
    UnsupportedOrder(usize),
    #[error("invalid order {0} for this family")]
    InvalidOrder(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("operation requires at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// Iterator over the set bits of a multi-word bitset.
pub struct Bits<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Bits<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        let current = words.first().copied().unwrap_or(0);
        Self {
            words,
            index: 0,
            current,
        }
    }
}

impl Iterator for Bits<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Number of 64-bit words needed for a row of `n` bits.
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Position of the pair `{i, j}` (`i < j`) in the column-major upper
/// triangle: (0,1), (0,2), (1,2), (0,3), ...
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// An immutable simple undirected graph.
///
/// Row `v` has bit `u` set iff `{u, v}` is an edge. Rows are symmetric and
/// the diagonal is always clear.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRangeVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 11 vertices from a bitmask over the
    /// column-major upper triangle (bit `pair_index(i, j)` is the pair `{i, j}`).
    pub fn from_pair_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut g = Self::empty(n);
        let mut bits = mask;
        while bits != 0 {
            let idx = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (i, j) = pair_from_index(idx);
            g.set_edge(i, j);
        }
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.stride + v / 64] |= 1 << (v % 64);
        self.rows[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Bits<'_> {
        Bits::new(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Checks the representation invariants: symmetric rows, clear diagonal
    /// and no bits beyond column `n - 1`.
    pub fn is_well_formed(&self) -> bool {
        for v in 0..self.n {
            if self.has_edge(v, v) {
                return false;
            }
            for u in self.neighbors(v) {
                if u >= self.n || !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + shift, v + shift);
        }
        g
    }

    /// Returns a copy with the extra edges added.
    pub fn with_edges<I>(&self, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.n, self.edges().into_iter().chain(edges))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(idx: usize) -> (usize, usize) {
    // largest j with j(j-1)/2 <= idx
    let mut j = ((((8 * idx + 1) as f64).sqrt() + 1.0) / 2.0) as usize;
    while j * (j - 1) / 2 > idx {
        j -= 1;
    }
    while (j + 1) * j / 2 <= idx {
        j += 1;
    }
    (idx - j * (j - 1) / 2, j)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasicStats {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Average degree 2m/n.
    pub avg_degree: f64,
    pub degrees: Vec<usize>,
}

impl BasicStats {
    /// Average degree as a reduced fraction `(numerator, denominator)`.
    pub fn avg_degree_fraction(&self) -> (usize, usize) {
        let (num, den) = (2 * self.m, self.n);
        let g = gcd(num, den).max(1);
        (num / g, den / g)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn basic_stats(g: &Graph) -> Result<BasicStats, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let degrees = g.degrees();
    let m = degrees.iter().sum::<usize>() / 2;
    Ok(BasicStats {
        n: g.n(),
        m,
        min_degree: *degrees.iter().min().unwrap(),
        max_degree: *degrees.iter().max().unwrap(),
        avg_degree: 2.0 * m as f64 / g.n() as f64,
        degrees,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    pub connected: bool,
    pub components: usize,
    /// `None` stands for an infinite diameter (disconnected graph).
    pub diameter: Option<usize>,
}

/// Hop distances from `source`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        for u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    dist
}

/// Component label per vertex; labels are assigned in order of the
/// lowest-index vertex of each component.
pub fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; g.n()];
    let mut count = 0;
    for s in 0..g.n() {
        if label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = count;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if label[u] == usize::MAX {
                    label[u] = count;
                    stack.push(u);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && component_labels(g).1 == 1
}

pub fn connectivity(g: &Graph) -> Result<Connectivity, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let (_, components) = component_labels(g);
    let diameter = if components == 1 {
        Some(
            (0..g.n())
                .map(|s| bfs_distances(g, s).into_iter().max().unwrap_or(0))
                .max()
                .unwrap_or(0),
        )
    } else {
        None
    };
    Ok(Connectivity {
        connected: components == 1,
        components,
        diameter,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

/// Two-colors `g` if it has no odd cycle. The lowest-index vertex of every
/// component lands in `part_a`.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let side = two_coloring(g)?;
    let (mut part_a, mut part_b) = (Vec::new(), Vec::new());
    for (v, &s) in side.iter().enumerate() {
        if s == 0 {
            part_a.push(v);
        } else {
            part_b.push(v);
        }
    }
    Some(Bipartition { part_a, part_b })
}

fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for u in g.neighbors(v) {
                if side[u] == u8::MAX {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteBipartiteWitness {
    pub a: usize,
    pub b: usize,
    pub isolated: usize,
}

/// Is `g` a complete bipartite graph `K_{a,b}` (`a, b >= 1`) together with
/// some isolated vertices? `a` is the side holding the lowest-index
/// non-isolated vertex.
pub fn complete_bipartite_plus_isolated(g: &Graph) -> Option<CompleteBipartiteWitness> {
    let core: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if core.is_empty() {
        return None;
    }
    let isolated = g.n() - core.len();
    let (h, _) = induced_subgraph(g, &core).ok()?;
    let parts = bipartition(&h)?;
    let (a, b) = (parts.part_a.len(), parts.part_b.len());
    (h.m() == a * b).then_some(CompleteBipartiteWitness { a, b, isolated })
}

/// Degree-regularity class, most specific first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum RegularityClass {
    Regular {
        k: usize,
    },
    /// Bipartite with degree `r` on one side and `s` on the other, `r != s`.
    BipartiteSemiRegular {
        r: usize,
        s: usize,
    },
    /// Exactly two degrees: the minimum degree and `n - 1`.
    Bidegreed {
        low: usize,
        high: usize,
    },
    Other,
}

pub fn classify_regularity(g: &Graph) -> RegularityClass {
    let degrees = g.degrees();
    let (lo, hi) = match (degrees.iter().min(), degrees.iter().max()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => return RegularityClass::Regular { k: 0 },
    };
    if lo == hi {
        return RegularityClass::Regular { k: lo };
    }
    if let Some((r, s)) = semi_regular_degrees(g) {
        return RegularityClass::BipartiteSemiRegular { r, s };
    }
    if is_bidegreed_with_full(g) {
        return RegularityClass::Bidegreed { low: lo, high: hi };
    }
    RegularityClass::Other
}

pub fn is_regular(g: &Graph) -> bool {
    g.min_degree() == g.max_degree()
}

/// Every degree is either the minimum degree or `n - 1`. Regular graphs
/// qualify trivially.
pub fn is_bidegreed_with_full(g: &Graph) -> bool {
    let delta = g.min_degree();
    let full = g.n().saturating_sub(1);
    (0..g.n()).all(|v| {
        let d = g.degree(v);
        d == delta || d == full
    })
}

pub fn is_bipartite_semiregular(g: &Graph) -> bool {
    is_regular(g) && bipartition(g).is_some() || semi_regular_degrees(g).is_some()
}

/// Degrees `(r, s)` of some two-coloring whose sides are each of constant
/// degree. The lowest-index vertex's side reports `r`. Regular graphs are
/// not handled here.
fn semi_regular_degrees(g: &Graph) -> Option<(usize, usize)> {
    let side = two_coloring(g)?;
    let (label, components) = component_labels(g);
    // per component: the degree on the side of its seed vertex, and on the other side
    let mut sides: Vec<(Option<usize>, Option<usize>)> = vec![(None, None); components];
    for v in 0..g.n() {
        let d = g.degree(v);
        let slot = &mut sides[label[v]];
        let target = if side[v] == 0 {
            &mut slot.0
        } else {
            &mut slot.1
        };
        match *target {
            None => *target = Some(d),
            Some(e) if e != d => return None,
            _ => {}
        }
    }
    let (r, s) = match sides[0] {
        (Some(r), Some(s)) => (r, s),
        _ => return None,
    };
    if r == s {
        return None;
    }
    for &(x, y) in &sides[1..] {
        let ok = matches!((x, y), (Some(x), Some(y)) if (x, y) == (r, s) || (x, y) == (s, r));
        if !ok {
            return None;
        }
    }
    Some((r, s))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodSums {
    /// Sum of neighbor degrees over N(v).
    pub open: Vec<u64>,
    /// Sum of degrees over N[v] = N(v) plus v itself.
    pub closed: Vec<u64>,
    pub max_open: u64,
    pub max_closed: u64,
}

pub fn neighborhood_degree_sums(g: &Graph) -> NeighborhoodSums {
    let degrees = g.degrees();
    let open: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).map(|u| degrees[u] as u64).sum())
        .collect();
    let closed: Vec<u64> = open
        .iter()
        .zip(&degrees)
        .map(|(&o, &d)| o + d as u64)
        .collect();
    NeighborhoodSums {
        max_open: open.iter().copied().max().unwrap_or(0),
        max_closed: closed.iter().copied().max().unwrap_or(0),
        open,
        closed,
    }
}

/// Counts triangles by testing every unordered vertex triple.
pub fn count_triangles_brute(g: &Graph) -> u64 {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Lexicographically first triangle, if any.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for a in 0..g.n() {
        for b in g.neighbors(a).filter(|&b| b > a) {
            let common = g
                .row(a)
                .iter()
                .zip(g.row(b))
                .map(|(x, y)| x & y)
                .collect::<Vec<_>>();
            if let Some(c) = Bits::new(&common).find(|&c| c > b) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

/// The subgraph induced by `vertices`. Returns the graph together with the
/// relabeling map: entry `i` is the original index of new vertex `i`.
/// Duplicate entries are ignored; order follows first occurrence.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
    let mut map = Vec::with_capacity(vertices.len());
    let mut position = vec![usize::MAX; g.n()];
    for &v in vertices {
        if v >= g.n() {
            return Err(GraphError::OutOfRangeVertex {
                vertex: v,
                n: g.n(),
            });
        }
        if position[v] == usize::MAX {
            position[v] = map.len();
            map.push(v);
        }
    }
    let mut h = Graph::empty(map.len());
    for (i, &v) in map.iter().enumerate() {
        for u in g.neighbors(v) {
            let j = position[u];
            if j != usize::MAX && j > i {
                h.set_edge(i, j);
            }
        }
    }
    Ok((h, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn pair_index_round_trips() {
        for j in 1..70 {
            for i in 0..j {
                assert_eq!(pair_from_index(pair_index(i, j)), (i, j));
            }
        }
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(1, 2), 2);
        assert_eq!(pair_index(0, 3), 3);
    }

    #[test]
    fn stats_examples() {
        let s = basic_stats(&complete_bipartite(2, 3)).unwrap();
        assert_eq!((s.m, s.min_degree), (6, 2));
        assert_eq!(s.avg_degree_fraction(), (12, 5));
        assert_eq!(s.degrees, vec![3, 3, 2, 2, 2]);

        let s = basic_stats(&cycle(5).unwrap()).unwrap();
        assert_eq!((s.m, s.min_degree, s.avg_degree_fraction()), (5, 2, (2, 1)));

        let s = basic_stats(&star(5)).unwrap();
        assert_eq!((s.m, s.min_degree, s.avg_degree_fraction()), (4, 1, (8, 5)));

        assert_eq!(basic_stats(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn connectivity_examples() {
        let c = connectivity(&complete_bipartite(2, 3)).unwrap();
        assert_eq!((c.connected, c.diameter), (true, Some(2)));
        assert_eq!(connectivity(&path(4)).unwrap().diameter, Some(3));
        let two_k2 = complete(2).disjoint_union(&complete(2));
        let c = connectivity(&two_k2).unwrap();
        assert_eq!((c.connected, c.components, c.diameter), (false, 2, None));
        assert_eq!(connectivity(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn bipartition_examples() {
        let parts = bipartition(&cycle(6).unwrap()).unwrap();
        assert_eq!(parts.part_a, vec![0, 2, 4]);
        assert_eq!(parts.part_b, vec![1, 3, 5]);
        assert!(bipartition(&cycle(5).unwrap()).is_none());
        assert!(bipartition(&complete(3)).is_none());
    }

    #[test]
    fn complete_bipartite_detection() {
        let g = complete_bipartite(2, 3).disjoint_union(&Graph::empty(2));
        assert_eq!(
            complete_bipartite_plus_isolated(&g),
            Some(CompleteBipartiteWitness {
                a: 2,
                b: 3,
                isolated: 2
            })
        );
        assert_eq!(complete_bipartite_plus_isolated(&path(4)), None);
        assert_eq!(
            complete_bipartite_plus_isolated(&complete(2)),
            Some(CompleteBipartiteWitness {
                a: 1,
                b: 1,
                isolated: 0
            })
        );
        assert_eq!(complete_bipartite_plus_isolated(&Graph::empty(3)), None);
        // two disjoint stars are not one complete bipartite graph
        assert_eq!(
            complete_bipartite_plus_isolated(&star(3).disjoint_union(&star(3))),
            None
        );
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(
            classify_regularity(&cycle(5).unwrap()),
            RegularityClass::Regular { k: 2 }
        );
        assert_eq!(
            classify_regularity(&star(5)),
            RegularityClass::BipartiteSemiRegular { r: 4, s: 1 }
        );
        assert!(is_bidegreed_with_full(&star(5)));
        assert_eq!(classify_regularity(&path(4)), RegularityClass::Other);
        assert_eq!(
            classify_regularity(&complete_bipartite(3, 3)),
            RegularityClass::Regular { k: 3 }
        );
        assert_eq!(
            classify_regularity(&complete_bipartite(2, 4)),
            RegularityClass::BipartiteSemiRegular { r: 4, s: 2 }
        );
        // K4 minus an edge: degrees 3,3,2,2 with n-1 = 3
        let g = complete(4).edges().into_iter().filter(|&e| e != (0, 1));
        let g = Graph::from_edges(4, g).unwrap();
        assert_eq!(
            classify_regularity(&g),
            RegularityClass::Bidegreed { low: 2, high: 3 }
        );
    }

    #[test]
    fn semi_regular_handles_component_orientation() {
        // K_{1,2} twice, second copy seeded on its degree-1 side
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (3, 5), (4, 5)]).unwrap();
        assert_eq!(
            classify_regularity(&g),
            RegularityClass::BipartiteSemiRegular { r: 2, s: 1 }
        );
    }

    #[test]
    fn neighborhood_sum_examples() {
        let s = neighborhood_degree_sums(&star(5));
        assert_eq!((s.open[0], s.closed[0]), (4, 8));
        let s = neighborhood_degree_sums(&cycle(5).unwrap());
        assert!(s.open.iter().all(|&x| x == 4));
        assert!(s.closed.iter().all(|&x| x == 6));
        let s = neighborhood_degree_sums(&Graph::empty(1));
        assert_eq!((s.open[0], s.closed[0]), (0, 0));
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(count_triangles_brute(&complete(4)), 4);
        assert_eq!(count_triangles_brute(&complete_bipartite(2, 3)), 0);
        assert_eq!(count_triangles_brute(&cycle(3).unwrap()), 1);
        assert_eq!(find_triangle(&complete(4)), Some([0, 1, 2]));
        assert_eq!(find_triangle(&complete_bipartite(3, 3)), None);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (h, map) = induced_subgraph(&complete(4), &[0, 2, 3]).unwrap();
        assert_eq!(h, complete(3));
        assert_eq!(map, vec![0, 2, 3]);
        let g = gnp(9, 0.4, 3).unwrap();
        let all: Vec<usize> = (0..9).collect();
        assert_eq!(induced_subgraph(&g, &all).unwrap().0, g);
        let (h, _) = induced_subgraph(&cycle(5).unwrap(), &[0, 1, 2]).unwrap();
        assert_eq!(h, path(3));
        assert_eq!(
            induced_subgraph(&complete(3), &[5]),
            Err(GraphError::OutOfRangeVertex { vertex: 5, n: 3 })
        );
    }

    #[test]
    fn multiword_rows() {
        let g = cycle(130).unwrap();
        assert!(g.is_well_formed());
        assert_eq!(g.m(), 130);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::OutOfRangeVertex { vertex: 3, n: 3 })
        );
    }
}
