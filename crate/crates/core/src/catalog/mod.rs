//! Group constructors, generator-file ingestion, the analysis pipeline and
//! the classification table.

mod analyze;
mod ingest;
mod linear;
mod spec;

use std::path::Path;

use serde::{Deserialize, Serialize};

pub use analyze::{
    analyze, combine_reports, AnalysisReport, AnalyzeOptions, Check, FieldDegree, ProductReport, ReflectionSummary,
};
pub use ingest::{ingest_generators, parse_generator_file, GeneratorFile};
pub use linear::{projective_group, LinearFamily, ProjectiveSpace, MAX_LINEAR_Q};
pub use spec::{fixture_path, GroupSpec, HallExtension};

use crate::error::Result;
use crate::semilinear::KPolicy;

/// Environment variable naming the fixture directory.
pub const DATA_DIR_ENV: &str = "REFLAUT_DATA_DIR";

/// One table row: `H̃, p, K = F_{p^m}, dim_K, W, [N:W], |Γ|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub spec: String,
    pub p: u64,
    pub m: u32,
    pub dim_k: usize,
    pub w: String,
    pub index_n_over_w: u64,
    pub order_gamma: u64,
}

fn row(spec: &str, p: u64, m: u32, dim_k: usize, w: &str, index: u64, gamma: u64) -> ExpectedRow {
    ExpectedRow {
        spec: spec.into(),
        p,
        m,
        dim_k,
        w: w.into(),
        index_n_over_w: index,
        order_gamma: gamma,
    }
}

/// The feasible rows: sporadic groups from fixtures, then the alternating and
/// `PSL₂` families.
pub fn table_rows() -> Vec<ExpectedRow> {
    vec![
        row("J1", 2, 3, 1, "cyclic-7", 1, 3),
        row("M11", 3, 1, 2, "B2", 2, 1),
        row("M23", 3, 1, 2, "B2", 2, 1),
        row("HS.2", 3, 1, 2, "B2", 2, 1),
        row("J2.2", 5, 1, 2, "G2", 2, 1),
        row("Sym:10", 5, 1, 2, "wreath(5,2)", 1, 1),
        row("PSL2:8", 2, 3, 1, "cyclic-7", 1, 3),
        row("PSL2:9", 3, 2, 1, "cyclic-8", 1, 2),
    ]
}

impl ExpectedRow {
    pub fn matches(&self, r: &AnalysisReport) -> bool {
        r.p == self.p
            && r.k.m == self.m
            && r.dim_k == self.dim_k
            && r.identification == self.w
            && r.index_n_over_w == self.index_n_over_w
            && r.order_gamma == self.order_gamma
            && r.irreducible_over_k
    }
}

/// Resolves a spec for analysis at `p` (Hall extension, field-degree hint)
/// and runs the pipeline.
pub fn analyze_spec(
    spec: &GroupSpec,
    p: u64,
    hall: HallExtension,
    data_dir: Option<&Path>,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let resolved = spec.for_prime(p, hall)?;
    let group = resolved.construct(data_dir)?;
    let mut opts = opts.clone();
    if opts.k_policy == KPolicy::Auto {
        if let Some(n) = resolved.field_degree_hint(p) {
            opts.k_policy = KPolicy::Degree(n);
        }
    }
    let name = if resolved == *spec {
        spec.to_string()
    } else {
        format!("{spec} (as {resolved})")
    };
    analyze(&name, &group, p, &opts)
}
