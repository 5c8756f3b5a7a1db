use std::fmt::Write as _;

use serde::Serialize;
use spectral_extremal::bounds::{
    evaluate_all_with, spectral_mantel_classify_with, BoundReport, MantelClass,
};
use spectral_extremal::cycles::{cycle_spectrum, CycleSpectrum};
use spectral_extremal::formats::to_graph6;
use spectral_extremal::graph::{
    basic_stats, bipartition, classify_regularity, connectivity, count_triangles_brute, BasicStats,
    Connectivity, RegularityClass,
};
use spectral_extremal::spectrum::{
    distinct_eigenvalue_count, eigendecompose, is_spectrum_symmetric, triangle_count_spectral,
    SpectrumError, CLUSTER_EPS, DEFAULT_TOL,
};
use spectral_extremal::walks::{
    decomposition_identity_holds, ratio_convergence, walk_counts, walk_ratio_inequality_from,
    RatioConvergence, WalkInequalityReport,
};
use spectral_extremal::Graph;

#[derive(Debug, Serialize)]
pub struct GraphReport {
    pub index: usize,
    pub graph6: String,
    pub stats: Option<BasicStats>,
    pub connectivity: Option<Connectivity>,
    pub regularity: Option<RegularityClass>,
    pub bipartite: bool,
    pub spectrum: Option<SpectrumSummary>,
    pub bounds: Vec<BoundReport>,
    pub spectral_mantel: Option<MantelClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walks: Option<WalkSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<CycleSection>,
}

#[derive(Debug, Serialize)]
pub struct SpectrumSummary {
    pub eigenvalues: Vec<f64>,
    pub lambda1: f64,
    pub lambda_min: f64,
    pub residual: f64,
    pub distinct_eigenvalues: usize,
    pub symmetric: bool,
    pub triangles_spectral: f64,
    pub triangles: u64,
}

#[derive(Debug, Serialize)]
pub struct WalkSection {
    pub max_len: usize,
    /// Decimal strings; counts overflow 64 bits quickly.
    pub totals: Vec<String>,
    pub decomposition_identity: bool,
    pub inequality: WalkInequalityReport,
    pub ratio: Option<RatioConvergence>,
}

#[derive(Debug, Serialize)]
pub struct CycleSection {
    #[serde(flatten)]
    pub spectrum: CycleSpectrum,
    /// Bit `l` set when a cycle of length `l` exists.
    pub mask: String,
}

pub fn analyze(
    index: usize,
    g: &Graph,
    walks: Option<usize>,
    cycles: Option<usize>,
) -> Result<GraphReport, SpectrumError> {
    let graph6 = to_graph6(g).unwrap_or_default();
    let mut report = GraphReport {
        index,
        graph6,
        stats: basic_stats(g).ok(),
        connectivity: connectivity(g).ok(),
        regularity: (g.n() > 0).then(|| classify_regularity(g)),
        bipartite: bipartition(g).is_some(),
        spectrum: None,
        bounds: Vec::new(),
        spectral_mantel: None,
        walks: None,
        cycles: None,
    };
    if g.n() == 0 {
        return Ok(report);
    }
    let s = eigendecompose(g, DEFAULT_TOL)?;
    let lambda1 = s.lambda1();
    report.spectrum = Some(SpectrumSummary {
        lambda1,
        lambda_min: s.lambda_min(),
        residual: s.residual,
        distinct_eigenvalues: distinct_eigenvalue_count(&s, CLUSTER_EPS),
        symmetric: is_spectrum_symmetric(&s, CLUSTER_EPS),
        triangles_spectral: triangle_count_spectral(&s),
        triangles: count_triangles_brute(g),
        eigenvalues: s.eigenvalues.clone(),
    });
    report.bounds = evaluate_all_with(g, lambda1);
    report.spectral_mantel = Some(spectral_mantel_classify_with(g, lambda1));
    if let Some(k) = walks {
        let table = walk_counts(g, k.max(2)).expect("nonempty graph");
        report.walks = Some(WalkSection {
            max_len: table.max_len,
            totals: table.totals_decimal(),
            decomposition_identity: decomposition_identity_holds(g, &table),
            inequality: walk_ratio_inequality_from(g, &table),
            ratio: if g.m() > 0 {
                ratio_convergence(g, table.max_len).ok()
            } else {
                None
            },
        });
    }
    if let Some(l_max) = cycles {
        let spectrum = cycle_spectrum(g, l_max);
        report.cycles = Some(CycleSection {
            mask: format!("{:#b}", spectrum.mask()),
            spectrum,
        });
    }
    Ok(report)
}

fn num(x: f64) -> String {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        format!("{}", r as i64)
    } else {
        format!("{x:.9}")
    }
}

pub fn render_table(r: &GraphReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {}: {}", r.index, r.graph6);
    let Some(stats) = &r.stats else {
        let _ = writeln!(out, "  empty graph");
        return out;
    };
    let conn = match &r.connectivity {
        Some(c) if c.connected => format!("connected, diameter {}", c.diameter.unwrap_or(0)),
        Some(c) => format!("{} components", c.components),
        None => String::new(),
    };
    let _ = writeln!(
        out,
        "  n = {}, m = {}, degrees {}..{} (avg {:.3}), {conn}{}",
        stats.n,
        stats.m,
        stats.min_degree,
        stats.max_degree,
        stats.avg_degree,
        if r.bipartite { ", bipartite" } else { "" }
    );
    if let Some(class) = &r.regularity {
        let _ = writeln!(out, "  regularity: {class:?}");
    }
    if let Some(s) = &r.spectrum {
        let _ = writeln!(
            out,
            "  λ₁ = {}, λ_min = {}, distinct eigenvalues {}, triangles {} (spectral {})",
            num(s.lambda1),
            num(s.lambda_min),
            s.distinct_eigenvalues,
            s.triangles,
            num(s.triangles_spectral)
        );
        let eig: Vec<String> = s.eigenvalues.iter().map(|&x| num(x)).collect();
        let _ = writeln!(out, "  eigenvalues: {}", eig.join(" "));
    }
    for b in &r.bounds {
        let line = match (&b.skipped, b.bound_value, b.slack) {
            (Some(reason), _, _) => format!("skipped ({reason})"),
            (None, Some(v), Some(slack)) => format!(
                "{} (slack {}{}{})",
                num(v),
                num(slack),
                if b.tight { ", tight" } else { "" },
                if b.holds == Some(false) {
                    ", VIOLATED"
                } else {
                    ""
                }
            ),
            _ => "implication only".to_string(),
        };
        let _ = writeln!(out, "  bound {:<7} {line}", b.kind.id());
    }
    if let Some(class) = &r.spectral_mantel {
        let text = match class {
            MantelClass::BelowThreshold { .. } => "below threshold (λ₁ < √m)".to_string(),
            MantelClass::HasTriangle { triangle } => format!("has triangle {triangle:?}"),
            MantelClass::ExtremalCompleteBipartite { witness } => format!(
                "complete bipartite K_({},{}) + {} isolated",
                witness.a, witness.b, witness.isolated
            ),
            MantelClass::Edgeless => "edgeless".to_string(),
            MantelClass::TriangleFreeAboveThreshold { .. } => "COUNTEREXAMPLE".to_string(),
        };
        let _ = writeln!(out, "  spectral mantel: {text}");
    }
    if let Some(w) = &r.walks {
        let _ = writeln!(out, "  walks w_0..w_{}: {}", w.max_len, w.totals.join(" "));
        let _ = writeln!(
            out,
            "  walk identity {}, inequality {}",
            if w.decomposition_identity {
                "holds"
            } else {
                "FAILS"
            },
            if w.inequality.all_hold() {
                "holds"
            } else {
                "FAILS"
            }
        );
        if let Some(ratio) = &w.ratio {
            let _ = writeln!(
                out,
                "  w_K/w_(K-2) = {} vs λ₁² = {}",
                num(ratio.ratio),
                num(ratio.lambda1_squared)
            );
        }
    }
    if let Some(c) = &r.cycles {
        let _ = writeln!(
            out,
            "  cycle lengths ≤ {}: {:?} (mask {})",
            c.spectrum.l_max, c.spectrum.present, c.mask
        );
        if !c.spectrum.inconclusive.is_empty() {
            let _ = writeln!(
                out,
                "  cycle search inconclusive at {:?}",
                c.spectrum.inconclusive
            );
        }
    }
    out
}
