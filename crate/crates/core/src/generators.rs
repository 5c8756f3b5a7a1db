//! Named graph families and seeded random models.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            g.set_edge(i, j);
        }
    }
    g
}

/// `K_{a,b}` with side A = `0..a` and side B = `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for i in 0..a {
        for j in a..a + b {
            g.set_edge(i, j);
        }
    }
    g
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidOrder(n));
    }
    let mut g = path(n);
    g.set_edge(n - 1, 0);
    Ok(g)
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.set_edge(v - 1, v);
    }
    g
}

/// The star `K_{1,n-1}` centred at vertex 0.
pub fn star(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.set_edge(0, v);
    }
    g
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.set_edge(i, (i + 1) % 5);
        g.set_edge(5 + i, 5 + (i + 2) % 5);
        g.set_edge(i, i + 5);
    }
    g
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )))
    }
}

/// Erdős–Rényi `G(n, p)`; the same seed always yields the same graph.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(gnp_with(n, p, &mut rng))
}

pub(crate) fn gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.set_edge(i, j);
            }
        }
    }
    g
}

/// Random bipartite graph: sides `0..a` and `a..a+b`, each cross pair kept
/// with probability `p`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(random_bipartite_with(a, b, p, &mut rng))
}

pub(crate) fn random_bipartite_with<R: Rng>(a: usize, b: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(a + b);
    for i in 0..a {
        for j in a..a + b {
            if rng.gen_bool(p) {
                g.set_edge(i, j);
            }
        }
    }
    g
}

/// Uniform-ish random `k`-regular graph via the pairing model with
/// rejection of loops and multi-edges.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_regular_with(n, k, &mut rng)
}

pub(crate) fn random_regular_with<R: Rng>(
    n: usize,
    k: usize,
    rng: &mut R,
) -> Result<Graph, GraphError> {
    if (n > 0 && k >= n) || (n == 0 && k > 0) || (n * k) % 2 == 1 {
        return Err(GraphError::InvalidParameter(format!(
            "no {k}-regular graph on {n} vertices"
        )));
    }
    const ATTEMPTS: usize = 10_000;
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
    'attempt: for _ in 0..ATTEMPTS {
        points.shuffle(rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.set_edge(u, v);
        }
        return Ok(g);
    }
    Err(GraphError::InvalidParameter(format!(
        "pairing model did not produce a simple {k}-regular graph on {n} vertices"
    )))
}

/// `K_{⌈n/2⌉,⌊n/2⌋}` plus intra-part edges, each kept with probability `q`.
/// At least one intra-part edge is always present, which pushes the spectral
/// radius strictly above `sqrt(⌊n²/4⌋)`.
pub fn complete_bipartite_plus(n: usize, q: f64, seed: u64) -> Result<Graph, GraphError> {
    check_probability(q)?;
    if n < 3 {
        return Err(GraphError::InvalidOrder(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(complete_bipartite_plus_with(n, q, &mut rng))
}

pub(crate) fn complete_bipartite_plus_with<R: Rng>(n: usize, q: f64, rng: &mut R) -> Graph {
    let a = n.div_ceil(2);
    let mut g = complete_bipartite(a, n - a);
    let mut added = 0;
    for j in 1..n {
        for i in 0..j {
            let same_side = (i < a) == (j < a);
            if same_side && rng.gen_bool(q) {
                g.set_edge(i, j);
                added += 1;
            }
        }
    }
    if added == 0 {
        let i = rng.gen_range(0..a - 1);
        g.set_edge(i, i + 1);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::basic_stats;

    #[test]
    fn family_shapes() {
        let g = complete_bipartite(2, 3);
        assert_eq!(g.m(), 6);
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
        let g = complete(4);
        assert_eq!(g.m(), 6);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(cycle(2), Err(GraphError::InvalidOrder(2)));
        assert_eq!(star(5).degrees(), vec![4, 1, 1, 1, 1]);
        let p = petersen();
        assert_eq!(p.m(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(gnp(10, 0.5, 1).unwrap(), gnp(10, 0.5, 1).unwrap());
        assert_ne!(gnp(30, 0.5, 1).unwrap(), gnp(30, 0.5, 2).unwrap());
        assert!(gnp(5, 1.5, 0).is_err());
        assert_eq!(gnp(6, 1.0, 9).unwrap(), complete(6));
        assert_eq!(gnp(6, 0.0, 9).unwrap().m(), 0);
    }

    #[test]
    fn random_regular_is_regular() {
        for seed in 0..20 {
            let g = random_regular(12, 3, seed).unwrap();
            assert!(g.is_well_formed());
            assert!(g.degrees().iter().all(|&d| d == 3));
        }
        assert!(random_regular(5, 3, 0).is_err());
        assert!(random_regular(4, 4, 0).is_err());
    }

    #[test]
    fn bipartite_plus_has_intra_edge() {
        for seed in 0..10 {
            let g = complete_bipartite_plus(20, 0.0, seed).unwrap();
            let s = basic_stats(&g).unwrap();
            assert_eq!(s.m, 101);
        }
    }
}
