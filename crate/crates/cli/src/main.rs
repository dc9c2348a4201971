//! Command-line front end: `analyze`, `table`, `weyl` and `glsearch`.
//!
//! Exit status is 0 when every asserted invariant holds, 1 when one fails
//! (the failing assertion is named on stderr) and 2 for usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use reflaut::catalog::{
    analyze_spec, combine_reports, table_rows, AnalysisReport, AnalyzeOptions, GroupSpec, HallExtension, DATA_DIR_ENV,
};
use reflaut::ffmat::field;
use reflaut::reflect::find_reflection_subgroup;
use reflaut::semilinear::KPolicy;
use reflaut::weylmod::{check_refl_chevalley, fixed_dim_scan, CartanType, RootDatum, Twist};

#[derive(Parser)]
#[command(name = "reflaut", version, about = "Automizers of abelian Sylow subgroups as modular reflection groups")]
struct Cli {
    /// Directory holding `<name>.gens` generator files.
    #[arg(long, global = true, env = DATA_DIR_ENV)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum HallArg {
    Auto,
    Off,
    On,
}

impl From<HallArg> for HallExtension {
    fn from(h: HallArg) -> Self {
        match h {
            HallArg::Auto => HallExtension::Auto,
            HallArg::Off => HallExtension::Off,
            HallArg::On => HallExtension::On,
        }
    }
}

fn parse_policy(s: &str) -> Result<KPolicy, String> {
    match s {
        "auto" => Ok(KPolicy::Auto),
        "max" | "maximal" => Ok(KPolicy::Maximal),
        m => m
            .parse::<u32>()
            .ok()
            .filter(|&m| m > 0)
            .map(KPolicy::Degree)
            .ok_or_else(|| format!("expected 'auto', 'max' or a positive degree, got {m:?}")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one group (or a direct product `A*B`).
    Analyze {
        #[arg(long, value_parser = |s: &str| s.parse::<GroupSpec>().map_err(|e| e.to_string()))]
        group: GroupSpec,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        orbit_cap: Option<usize>,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Degree `m` of `K = F_{p^m}`: `auto`, `max`, or a number.
        #[arg(long, default_value = "auto", value_parser = parse_policy)]
        field_degree: KPolicy,
        #[arg(long, value_enum, default_value = "auto")]
        hall_extension: HallArg,
    },
    /// Analyze every row of the classification table and compare.
    Table {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        orbit_cap: Option<usize>,
    },
    /// Fixed-dimension scan and reflection check for a twisted Frobenius.
    Weyl {
        #[arg(long = "type", value_parser = |s: &str| s.parse::<CartanType>().map_err(|e| e.to_string()))]
        cartan_type: CartanType,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        prime: u64,
        /// `1`, `coxeter`, `longest`, or a word such as `s1.s2`.
        #[arg(long, default_value = "1", value_parser = |s: &str| s.parse::<Twist>().map_err(|e| e.to_string()))]
        twist: Twist,
        /// Apply the diagram automorphism (types A and D4).
        #[arg(long)]
        graph_automorphism: bool,
    },
    /// Exhaustive two-reflection search in `GL₂(F_p)`.
    Glsearch {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        target: u64,
    },
}

/// An asserted invariant that does not hold.
#[derive(Debug)]
struct InvariantFailure(String);

impl std::fmt::Display for InvariantFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invariant failed: {}", self.0)
    }
}

impl std::error::Error for InvariantFailure {}

fn fail(name: impl Into<String>) -> anyhow::Error {
    InvariantFailure(name.into()).into()
}

fn data_dir(cli: &Option<PathBuf>) -> Option<PathBuf> {
    cli.clone().or_else(|| Some(PathBuf::from("data")).filter(|d| d.is_dir()))
}

fn options(seed: u64, orbit_cap: Option<usize>, policy: KPolicy) -> AnalyzeOptions {
    let mut opts = AnalyzeOptions {
        seed,
        k_policy: policy,
        ..AnalyzeOptions::default()
    };
    if let Some(cap) = orbit_cap {
        opts.orbit_cap = cap;
    }
    opts
}

fn print_report(r: &AnalysisReport) {
    println!("group            {}", r.group);
    println!("p                {}", r.p);
    println!("|G|              {}", r.order_g);
    println!(
        "|P|              {} (invariants {:?}, {})",
        r.order_p,
        r.abelian_invariants,
        if r.homocyclic { "homocyclic" } else { "not homocyclic" }
    );
    println!("Sylow count      {}", r.sylow_count);
    println!("|N|, |C|, |E|    {}, {}, {}", r.order_n, r.order_c, r.order_e);
    println!("K                F_{}^{} ({} candidate structures)", r.k.p, r.k.m, r.k_candidates);
    println!("dim_K            {}", r.dim_k);
    println!("W                order {}, {}", r.order_w, r.identification);
    println!("[N:W], |Γ|       {}, {}", r.index_n_over_w, r.order_gamma);
    println!("irreducible/K    {}", r.irreducible_over_k);
    println!("fixed dim K, F_p {}, {}", r.fixed_dim_k, r.fixed_dim_fp);
    println!(
        "over F_p         |W| {}, {} reflections, {}",
        r.over_fp.order_w, r.over_fp.reflections, r.over_fp.identification
    );
    if let Some(o) = &r.obstruction {
        println!(
            "obstruction      rank {} (dim V_E {}, dim Λ²V_E {}), W fixed {}, consistent {}",
            o.total, o.dim_v_e, o.dim_wedge_e, o.fixed_w_dim, o.consistent
        );
    }
    if let Some(s) = &r.solomon {
        println!(
            "Solomon          dim Λ²(V)^W = {}, dim Λ²(V^W) = {}, holds {}",
            s.wedge_invariants,
            s.fixed_dim * s.fixed_dim.saturating_sub(1) / 2,
            s.holds
        );
    }
    let failed = r.failed_checks();
    if failed.is_empty() {
        println!("checks           all {} pass", r.checks.len());
    } else {
        println!("checks           FAILED: {}", failed.join(", "));
    }
    println!("elapsed          {} ms", r.elapsed_ms);
}

fn run_analyze(
    spec: &GroupSpec,
    p: u64,
    opts: &AnalyzeOptions,
    hall: HallExtension,
    dir: Option<&Path>,
    json: Option<&Path>,
) -> Result<()> {
    let factors = spec.factors();
    let mut reports = Vec::new();
    for (i, factor) in factors.iter().enumerate() {
        if i > 0 {
            println!();
        }
        let r = analyze_spec(factor, p, hall, dir, opts).with_context(|| format!("analyzing {factor}"))?;
        print_report(&r);
        reports.push(r);
    }
    let product = (factors.len() > 1).then(|| combine_reports(&reports)).transpose()?;
    if let Some(prod) = &product {
        println!();
        let ks: Vec<String> = prod.k.iter().map(|k| format!("F_{}^{}", k.p, k.m)).collect();
        println!("product          {}", prod.factors.join(" × "));
        println!("K                {}", ks.join(" × "));
        println!("fixed dim K, F_p {}, {} (trivial: {})", prod.fixed_dim_k, prod.fixed_dim_fp, prod.fixed_trivial);
    }
    if let Some(path) = json {
        let text = match (&product, reports.as_slice()) {
            (None, [r]) => r.to_json(),
            _ => serde_json::to_string_pretty(&serde_json::json!({ "factors": reports, "product": product }))?,
        };
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failed_checks().into_iter().map(move |c| format!("{}: {c}", r.group)))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(fail(failed.join("; ")))
    }
}

fn run_table(opts: &AnalyzeOptions, dir: Option<&Path>) -> Result<()> {
    let rows = table_rows();
    println!(
        "{:<24} {:>2} {:>6} {:>5} {:<12} {:>5} {:>3}  {:<5} {:>9}",
        "group", "p", "K", "dim_K", "W", "[N:W]", "Γ", "match", "time"
    );
    let mut failures = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        eprintln!("[{}/{}] {} at p={}", i + 1, rows.len(), row.spec, row.p);
        let t = Instant::now();
        let spec: GroupSpec = row.spec.parse()?;
        match analyze_spec(&spec, row.p, HallExtension::Auto, dir, opts) {
            Ok(r) => {
                let ok = row.matches(&r) && r.all_checks_pass();
                println!(
                    "{:<24} {:>2} {:>6} {:>5} {:<12} {:>5} {:>3}  {:<5} {:>8.1}s",
                    r.group,
                    r.p,
                    format!("F_{}", r.p.pow(r.k.m)),
                    r.dim_k,
                    r.identification,
                    r.index_n_over_w,
                    r.order_gamma,
                    if ok { "yes" } else { "NO" },
                    t.elapsed().as_secs_f64()
                );
                if !ok {
                    failures.push(row.spec.clone());
                }
            }
            Err(e) => {
                println!("{:<24} {:>2}  error: {e}", row.spec, row.p);
                failures.push(row.spec.clone());
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(fail(format!("table rows {}", failures.join(", "))))
    }
}

fn run_weyl(cartan_type: CartanType, q: u64, p: u64, twist: &Twist, graph: bool) -> Result<()> {
    let mut datum = RootDatum::new(cartan_type)?;
    if graph {
        datum = datum.with_graph_automorphism()?;
    }
    let scan = fixed_dim_scan(&datum, q, p)?;
    println!("{cartan_type}, q={q}, p={p}: {} twisted classes", scan.classes.len());
    println!("{:<16} {:>5} {:>9}", "class", "size", "dim V^wF");
    for c in &scan.classes {
        println!("{:<16} {:>5} {:>9}", c.representative, c.size, c.fixed_dim);
    }
    println!("max dim {} at {}", scan.max_dim, scan.argmax.join(", "));
    println!("dim V^F ≥ dim V^wF for all w: {}", scan.max_at_identity);
    if !scan.class_constant {
        return Err(fail("fixed dimension constant on twisted classes"));
    }
    let report = check_refl_chevalley(&datum, q, p, twist).map_err(|e| fail(format!("refl_chevalley: {e}")))?;
    println!(
        "twist {}: dim {}, automizer order {}, {} reflections, generated by reflections {}, irreducible {}, {}",
        report.twist,
        report.subspace_dim,
        report.order,
        report.reflections,
        report.generated_by_reflections,
        report.irreducible,
        report.identification
    );
    if report.pass {
        Ok(())
    } else {
        Err(fail("automizer on V^wF is an irreducible reflection group"))
    }
}

fn run_glsearch(p: u64, target: u64) -> Result<()> {
    let f = field(p, 1)?;
    match find_reflection_subgroup(&f, target)? {
        Some(found) => {
            println!("found: irreducible reflection group of order {target} in GL₂(F_{p})");
            println!(
                "identification {}, {} reflections",
                found.identification, found.fingerprint.reflections
            );
            Ok(())
        }
        None => Err(fail(format!("no irreducible reflection group of order {target} in GL₂(F_{p})"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let dir = data_dir(&cli.data_dir);
    let result = match cli.command {
        Command::Analyze {
            group,
            prime,
            seed,
            orbit_cap,
            json,
            field_degree,
            hall_extension,
        } => run_analyze(
            &group,
            prime,
            &options(seed, orbit_cap, field_degree),
            hall_extension.into(),
            dir.as_deref(),
            json.as_deref(),
        ),
        Command::Table { seed, orbit_cap } => run_table(&options(seed, orbit_cap, KPolicy::Auto), dir.as_deref()),
        Command::Weyl {
            cartan_type,
            q,
            prime,
            twist,
            graph_automorphism,
        } => run_weyl(cartan_type, q, prime, &twist, graph_automorphism),
        Command::Glsearch { p, target } => run_glsearch(p, target),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<InvariantFailure>() => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
        Err(e) => {
            // A library error's message already contains its own sources.
            let mut parts = Vec::new();
            for c in e.chain() {
                parts.push(c.to_string());
                if c.downcast_ref::<reflaut::Error>().is_some() {
                    break;
                }
            }
            eprintln!("error: {}", parts.join(": "));
            let usage = e.chain().any(|c| {
                matches!(
                    c.downcast_ref::<reflaut::Error>(),
                    Some(
                        reflaut::Error::UnknownGroupSpec(_)
                            | reflaut::Error::NotPrime(_)
                            | reflaut::Error::UnsupportedDatum(_)
                            | reflaut::Error::FieldTooLarge { .. }
                    )
                )
            });
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
