use proptest::prelude::*;
use spectral_extremal::bounds::{
    bound_value, spectral_mantel_classify_with, BoundKind, MantelClass,
};
use spectral_extremal::cycles::{bondy_pancyclicity_check, cycle_spectrum, validate_cycle};
use spectral_extremal::formats::{from_graph6, to_graph6};
use spectral_extremal::generators::{complete, complete_bipartite, cycle, gnp};
use spectral_extremal::graph::{
    bipartition, classify_regularity, is_connected, neighborhood_degree_sums, RegularityClass,
};
use spectral_extremal::spectrum::{
    eigendecompose, is_spectrum_symmetric, perron_root, CLUSTER_EPS, DEFAULT_TOL,
};
use spectral_extremal::verdict::TheoremId;
use spectral_extremal::verify::{canonical_classes, check_theorem, sweep, SweepConfig};
use spectral_extremal::walks::{a_greater_b_check, walk_counts};
use spectral_extremal::Graph;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..=1.0f64, any::<u64>()).prop_map(|(n, p, seed)| gnp(n, p, seed).unwrap())
}

fn sorted_close(a: &[f64], b: &[f64]) -> bool {
    let mut b = b.to_vec();
    b.sort_by(|x, y| y.total_cmp(x));
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= 1e-9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adjacency_is_symmetric_without_loops(g in arb_graph(40)) {
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.n() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert!(g.is_well_formed());
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(62)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(&from_graph6(&text).unwrap(), &g);
        prop_assert_eq!(to_graph6(&from_graph6(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn closed_minus_open_is_degree(g in arb_graph(30)) {
        let s = neighborhood_degree_sums(&g);
        for v in 0..g.n() {
            prop_assert_eq!(s.closed[v] - s.open[v], g.degree(v) as u64);
        }
    }

    #[test]
    fn trace_identities(g in arb_graph(30)) {
        let s = eigendecompose(&g, DEFAULT_TOL).unwrap();
        prop_assert!(s.power_sum(1).abs() <= 1e-8);
        prop_assert!((s.power_sum(2) - 2.0 * g.m() as f64).abs() <= 1e-8);
    }

    #[test]
    fn power_iteration_agrees_with_jacobi(g in arb_graph(30)) {
        prop_assume!(is_connected(&g));
        let jacobi = eigendecompose(&g, DEFAULT_TOL).unwrap().lambda1();
        let power = perron_root(&g, DEFAULT_TOL).unwrap();
        prop_assert!((jacobi - power).abs() <= 100.0 * DEFAULT_TOL * jacobi.max(1.0));
    }

    #[test]
    fn degree_bound_never_beats_edge_bound(g in arb_graph(30)) {
        prop_assume!(g.min_degree() >= 1);
        let hsf = bound_value(&g, BoundKind::HongShuFang).unwrap();
        let hong = bound_value(&g, BoundKind::Hong).unwrap();
        prop_assert!(hsf <= hong + 1e-9);
    }

    #[test]
    fn walk_totals_are_monotone(g in arb_graph(20)) {
        let t = walk_counts(&g, 12).unwrap();
        for k in 1..12 {
            prop_assert!(t.totals[k + 1] >= t.totals[k]);
        }
    }

    #[test]
    fn cycle_witnesses_validate(g in arb_graph(12)) {
        let s = cycle_spectrum(&g, g.n());
        for (&l, witness) in &s.witnesses {
            prop_assert_eq!(witness.len(), l);
            prop_assert!(validate_cycle(&g, witness));
        }
    }
}

#[test]
fn bipartite_iff_symmetric_spectrum_exhaustive() {
    for n in 1..=7usize {
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            let g = Graph::from_pair_mask(n, mask);
            let s = eigendecompose(&g, DEFAULT_TOL).unwrap();
            assert_eq!(
                is_spectrum_symmetric(&s, CLUSTER_EPS),
                bipartition(&g).is_some(),
                "{mask:#x}"
            );
            assert!(s.power_sum(1).abs() <= 1e-9);
            assert!((s.power_sum(2) - 2.0 * g.m() as f64).abs() <= 1e-9);
        }
    }
}

#[test]
fn generator_spectra_match_closed_forms() {
    for n in 2..=10 {
        let s = eigendecompose(&complete(n), DEFAULT_TOL).unwrap();
        let mut expected = vec![-1.0; n - 1];
        expected.push((n - 1) as f64);
        assert!(sorted_close(&s.eigenvalues, &expected), "K_{n}");
    }
    for a in 1..=5 {
        for b in 1..=5 {
            let s = eigendecompose(&complete_bipartite(a, b), DEFAULT_TOL).unwrap();
            let r = ((a * b) as f64).sqrt();
            let mut expected = vec![0.0; a + b - 2];
            expected.extend([r, -r]);
            assert!(sorted_close(&s.eigenvalues, &expected), "K_({a},{b})");
        }
    }
    for n in 3..=12 {
        let s = eigendecompose(&cycle(n).unwrap(), DEFAULT_TOL).unwrap();
        let expected: Vec<f64> = (0..n)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
            .collect();
        assert!(sorted_close(&s.eigenvalues, &expected), "C_{n}");
    }
}

#[test]
fn regularity_of_complete_bipartite() {
    for a in 1..=5 {
        assert_eq!(
            classify_regularity(&complete_bipartite(a, a)),
            RegularityClass::Regular { k: a }
        );
        for b in (1..=5).filter(|&b| b != a) {
            assert!(matches!(
                classify_regularity(&complete_bipartite(a, b)),
                RegularityClass::BipartiteSemiRegular { .. }
            ));
        }
    }
}

#[test]
fn a_greater_b_on_connected_bipartite_classes() {
    let mut checked = 0;
    for n in 2..=7 {
        for g in canonical_classes(n).unwrap() {
            if is_connected(g) && bipartition(g).is_some() {
                let r = a_greater_b_check(g).unwrap();
                assert!(!r.vacuous && r.holds, "{:?}", g.edges());
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn cycle_and_mantel_checks_hold_on_connected_classes() {
    for n in 1..=7 {
        for g in canonical_classes(n)
            .unwrap()
            .iter()
            .filter(|g| is_connected(g))
        {
            assert!(!bondy_pancyclicity_check(g).is_violated());
            for id in [
                TheoremId::Mantel,
                TheoremId::Nosal,
                TheoremId::SpectralMantel,
            ] {
                assert!(!check_theorem(g, id).is_violated(), "{id}");
            }
        }
    }
}

#[test]
#[ignore = "enumerates 2^28 labeled graphs"]
fn spectral_mantel_on_connected_order_eight() {
    for mask in 0u64..1 << 28 {
        let g = Graph::from_pair_mask(8, mask);
        if !is_connected(&g) {
            continue;
        }
        let l1 = perron_root(&g, DEFAULT_TOL).unwrap();
        assert!(!matches!(
            spectral_mantel_classify_with(&g, l1),
            MantelClass::TriangleFreeAboveThreshold { .. }
        ));
        assert!(!bondy_pancyclicity_check(&g).is_violated());
    }
}

#[test]
fn sweep_reports_match_across_worker_counts() {
    let base = SweepConfig {
        max_n: 5,
        ..SweepConfig::default()
    };
    let reports: Vec<_> = [1, 4, 16]
        .into_iter()
        .map(|jobs| {
            sweep(&SweepConfig {
                jobs,
                ..base.clone()
            })
            .unwrap()
        })
        .collect();
    assert!(reports[0].same_results(&reports[1]));
    assert!(reports[0].same_results(&reports[2]));
    let json = serde_json::to_value(&reports[0]).unwrap();
    for key in ["config", "totals", "tight", "counterexamples", "runtime_ms"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert!(json["totals"]["thm11"]["holds"].as_u64().unwrap() > 0);
}
