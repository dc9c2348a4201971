//! End-to-end acceptance run: one line per criterion with its verdict and
//! wall time. Exits nonzero if any criterion fails.
//!
//! Run with `cargo test -p reflaut --features acceptance --test acceptance`.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use reflaut::catalog::{analyze_spec, AnalysisReport, AnalyzeOptions, GroupSpec, HallExtension};
use reflaut::cohom::solomon_check;
use reflaut::ffmat::field;
use reflaut::reflect::{fingerprint, Identification, ReflectionPairSearch};
use reflaut::weylmod::{check_refl_chevalley, fixed_dim_scan, subspace_automizer, CartanType, RootDatum, Twist};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<u64>, fn(&mut Runs) -> Outcome);

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Reports computed so far, for the cross-cutting criteria 11, 13 and 14.
#[derive(Default)]
struct Runs {
    reports: Vec<AnalysisReport>,
    extra_solomon: Vec<(String, bool)>,
}

impl Runs {
    fn analyze(&mut self, spec: &str, p: u64) -> Result<AnalysisReport, String> {
        let opts = AnalyzeOptions {
            orbit_cap: 5_000_000,
            ..AnalyzeOptions::default()
        };
        let parsed: GroupSpec = spec.parse().map_err(|e| format!("{e}"))?;
        let r = analyze_spec(&parsed, p, HallExtension::Auto, Some(&data_dir()), &opts)
            .map_err(|e| format!("{spec} at p={p}: {e}"))?;
        self.reports.push(r.clone());
        Ok(r)
    }
}

fn expect(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn row_values(r: &AnalysisReport) -> String {
    format!(
        "|E|={} |W|={} {} [N:W]={} |Γ|={} irreducible={}",
        r.order_e, r.order_w, r.identification, r.index_n_over_w, r.order_gamma, r.irreducible_over_k
    )
}

fn sym10(runs: &mut Runs) -> Outcome {
    let r = runs.analyze("Sym:10", 5)?;
    expect(r.order_p == 25 && r.abelian_invariants == [1, 1], format!("|P|={} {:?}", r.order_p, r.abelian_invariants))?;
    expect(r.order_e == 32 && r.order_w == 32, row_values(&r))?;
    expect(r.identification == "wreath(5,2)" && r.k.m == 1, row_values(&r))?;
    expect(r.irreducible_over_k && r.fixed_dim_k == 0, row_values(&r))?;
    Ok(format!("{}, fixed 0", row_values(&r)))
}

fn alt10(runs: &mut Runs) -> Outcome {
    let r = runs.analyze("Alt:10", 5)?;
    let summary = format!(
        "|E|={} |W|={} irreducible={} fixed_dim={}",
        r.order_e, r.order_w, r.irreducible_over_k, r.fixed_dim_k
    );
    expect(r.order_w < r.order_e, format!("W = E: {summary}"))?;
    expect(r.fixed_dim_k >= 1, format!("fixed space of W is zero: {summary}"))?;
    Ok(summary)
}

fn b2_row(runs: &mut Runs, spec: &str) -> Result<String, String> {
    let r = runs.analyze(spec, 3)?;
    expect(
        r.order_e == 16
            && r.order_w == 8
            && r.identification == "B2"
            && r.index_n_over_w == 2
            && r.order_gamma == 1
            && r.irreducible_over_k,
        format!("{spec}: {}", row_values(&r)),
    )?;
    Ok(format!("{spec} {}ms", r.elapsed_ms))
}

fn mathieu(runs: &mut Runs) -> Outcome {
    let t = Instant::now();
    let a = b2_row(runs, "M11")?;
    expect(t.elapsed() < Duration::from_secs(10), "M11 slower than 10 s")?;
    let t = Instant::now();
    let b = b2_row(runs, "M23")?;
    expect(t.elapsed() < Duration::from_secs(120), "M23 slower than 2 min")?;
    Ok(format!("B2, [N:W]=2, |Γ|=1 for {a}, {b}"))
}

fn higman_sims(runs: &mut Runs) -> Outcome {
    b2_row(runs, "HS.2").map(|s| format!("B2, [N:W]=2, |Γ|=1 for {s}"))
}

fn janko2(runs: &mut Runs) -> Outcome {
    let r = runs.analyze("J2.2", 5)?;
    expect(
        r.order_w == 12 && r.identification == "G2" && r.index_n_over_w == 2 && r.irreducible_over_k,
        row_values(&r),
    )?;
    Ok(row_values(&r))
}

fn janko1(runs: &mut Runs) -> Outcome {
    let r = runs.analyze("J1", 2)?;
    expect(r.over_fp.reflections == 0, format!("{} reflections over F_2", r.over_fp.reflections))?;
    expect(r.k.m == 3 && r.dim_k == 1, format!("K=F_2^{}, dim_K={}", r.k.m, r.dim_k))?;
    expect(
        r.order_e == 21
            && r.order_w == 7
            && r.identification == "cyclic-7"
            && r.index_n_over_w == 1
            && r.order_gamma == 3,
        row_values(&r),
    )?;
    Ok(format!("no F_2-reflections; K=F_8, {}", row_values(&r)))
}

fn psl2(runs: &mut Runs) -> Outcome {
    let mut notes = Vec::new();
    for (spec, p, n) in [("PSL2:8", 2u64, 3u32), ("PSL2:9", 3, 2)] {
        let t = Instant::now();
        let r = runs.analyze(spec, p)?;
        let q = p.pow(n);
        expect(
            r.k.m == n
                && r.order_w == q - 1
                && r.identification == format!("cyclic-{}", q - 1)
                && r.index_n_over_w == 1
                && r.order_gamma == u64::from(n),
            format!("{}: K=F_{p}^{} {}", r.group, r.k.m, row_values(&r)),
        )?;
        expect(t.elapsed() < Duration::from_secs(10), format!("{spec} slower than 10 s"))?;
        notes.push(format!("{}: K=F_{q}, W=N=C_{}, |Γ|={n}", r.group, q - 1));
    }
    Ok(notes.join("; "))
}

fn chevalley(runs: &mut Runs) -> Outcome {
    let r = runs.analyze("PSL3:8", 7)?;
    expect(r.order_e == 6 && r.order_w == 6 && r.over_k.reflections == 3, row_values(&r))?;
    expect(r.dim_k == 2 && r.k.m == 1 && r.irreducible_over_k, row_values(&r))?;
    let datum = RootDatum::new(CartanType::A(2)).map_err(|e| e.to_string())?;
    let weyl = subspace_automizer(&datum, 8, 7, &Twist::Identity).map_err(|e| e.to_string())?;
    let fp = fingerprint(&weyl.group).map_err(|e| e.to_string())?;
    expect(fp == r.fingerprint_e, format!("fingerprints differ: {:?} vs {:?}", fp, r.fingerprint_e))?;
    let check = check_refl_chevalley(&datum, 8, 7, &Twist::Identity).map_err(|e| e.to_string())?;
    expect(check.pass, "Weyl-side automizer is not an irreducible reflection group")?;
    runs.extra_solomon.push((
        "A2 on V^F".into(),
        solomon_check(&weyl.group).map_err(|e| e.to_string())?.holds,
    ));
    Ok(format!("|E|=6 with 3 reflections on F_7^2, fingerprint equal to the A2 Weyl side ({})", check.identification))
}

fn gl2_search(runs: &mut Runs) -> Outcome {
    let mut notes = Vec::new();
    for (p, order, want) in [(5u64, 96u64, Identification::G8), (7, 72, Identification::G5), (11, 600, Identification::G16)] {
        let t = Instant::now();
        let f = field(p, 1).map_err(|e| e.to_string())?;
        let mut search = ReflectionPairSearch::new(&f, order).map_err(|e| e.to_string())?;
        let mut hit = None;
        while let Some(found) = search.next_found().map_err(|e| e.to_string())? {
            if found.identification == want {
                hit = Some(found);
                break;
            }
        }
        let found = hit.ok_or_else(|| format!("no {want} of order {order} in GL2(F_{p})"))?;
        let elapsed = t.elapsed();
        expect(elapsed < Duration::from_secs(300), format!("GL2(F_{p}) search slower than 5 min"))?;
        runs.extra_solomon.push((
            format!("{want} mod {p}"),
            solomon_check(&found.group).map_err(|e| e.to_string())?.holds,
        ));
        notes.push(format!("{want} ({order}) in GL2(F_{p}) {:.2}s", elapsed.as_secs_f64()));
    }
    Ok(notes.join("; "))
}

fn obstructions(runs: &mut Runs) -> Outcome {
    let t = Instant::now();
    let mut notes = Vec::new();
    for (spec, positive) in [("Alt:7", true), ("PSL3:4", true), ("Sym:10", false), ("M11", false)] {
        let p = if spec == "Sym:10" { 5 } else { 3 };
        let r = runs.analyze(spec, p)?;
        let o = r.obstruction.as_ref().ok_or("no obstruction report")?;
        if positive {
            expect(o.total > 0 && r.fixed_dim_k > 0, format!("{spec}: rank {} fixed {}", o.total, r.fixed_dim_k))?;
        } else {
            expect(o.total == 0, format!("{spec}: rank {}", o.total))?;
        }
        notes.push(format!("{spec} rank {} fixed {}", o.total, r.fixed_dim_k));
    }
    expect(t.elapsed() < Duration::from_secs(120), "slower than 2 min")?;
    Ok(notes.join(", "))
}

fn solomon(runs: &mut Runs) -> Outcome {
    let mut count = 0;
    for r in runs.reports.iter().filter(|r| r.p > 2) {
        let s = r.solomon.as_ref().ok_or_else(|| format!("{}: missing", r.group))?;
        expect(s.holds, format!("{}: Λ²(V)^W has dim {}, V^W has dim {}", r.group, s.wedge_invariants, s.fixed_dim))?;
        count += 1;
    }
    for (name, holds) in &runs.extra_solomon {
        expect(*holds, name.to_string())?;
        count += 1;
    }
    Ok(format!("holds for {count} reflection groups"))
}

fn lemma_scan(_: &mut Runs) -> Outcome {
    let datum = RootDatum::new(CartanType::A(2)).map_err(|e| e.to_string())?;
    let split = fixed_dim_scan(&datum, 8, 7).map_err(|e| e.to_string())?;
    expect(split.max_dim == 2 && split.identity_dim == 2, format!("(8,7): max {}", split.max_dim))?;
    expect(split.classes.iter().all(|c| c.fixed_dim <= split.identity_dim), "(8,7): dim V^F < dim V^wF for some w")?;
    let twisted = fixed_dim_scan(&datum, 2, 7).map_err(|e| e.to_string())?;
    let coxeter = twisted
        .classes
        .iter()
        .find(|c| c.representative == Twist::Coxeter.to_string() || c.representative == "s1.s2")
        .ok_or("no Coxeter class")?;
    expect(
        twisted.max_dim == 1 && twisted.argmax == [coxeter.representative.clone()],
        format!("(2,7): max {} at {:?}", twisted.max_dim, twisted.argmax),
    )?;
    Ok("(8,7) max 2 at w=1 with dim V^F ≥ dim V^wF for all w; (2,7) max 1 at the Coxeter class".into())
}

fn homocyclic(runs: &mut Runs) -> Outcome {
    let bad: Vec<&str> = runs.reports.iter().filter(|r| !r.homocyclic).map(|r| r.group.as_str()).collect();
    expect(bad.is_empty(), format!("not homocyclic: {}", bad.join(", ")))?;
    Ok(format!("{} cases", runs.reports.len()))
}

fn properties(runs: &mut Runs) -> Outcome {
    for r in &runs.reports {
        for name in ["sylow_count_mod_p", "p_prime_e", "w_normal_fp", "w_normal_k", "faithful"] {
            expect(r.check(name) == Some(true), format!("{}: {name}", r.group))?;
        }
        expect(r.all_checks_pass(), format!("{}: {}", r.group, r.failed_checks().join(", ")))?;
    }
    Ok(format!("{} analyzed groups", runs.reports.len()))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("S10 at p=5: W = E = wreath(5,2), irreducible, fixed 0", Some(10), sym10),
        ("A10 at p=5: W has fixed-space dimension ≥ 1", Some(10), alt10),
        ("M11 and M23 at p=3: table row B2", Some(130), mathieu),
        ("HS.2 at p=3: table row B2", Some(900), higman_sims),
        ("J2.2 at p=5: table row G2", Some(120), janko2),
        ("J1 at p=2: K = F8, W = N = C7, |Γ| = 3", Some(120), janko1),
        ("PSL2(8) at p=2 and PSL2(9) at p=3: W = N = K^×, Γ = Gal(K/F_p)", Some(20), psl2),
        ("PSL3(8) at p=7 against the A2 Weyl-side automizer", Some(180), chevalley),
        ("GL2 reflection-pair search: G8 mod 5, G5 mod 7, G16 mod 11", Some(900), gl2_search),
        ("Obstruction suite: A7, PSL3(4) positive; S10, M11 zero", Some(120), obstructions),
        ("Solomon identity on every W with p > 2", None, solomon),
        ("Lemma scan for A2", Some(1), lemma_scan),
        ("Homocyclic Sylow subgroups", None, homocyclic),
        ("Property suite on every analyzed group", None, properties),
    ];
    let mut runs = Runs::default();
    let mut failures = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run(&mut runs);
        let secs = t.elapsed().as_secs_f64();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if secs > *l as f64 => Err(format!("took {secs:.1}s, limit {l}s")),
            (o, _) => o,
        };
        let (verdict, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        if outcome.is_err() {
            failures += 1;
        }
        println!("[{verdict}] {:>2}. {title} ({secs:.2}s): {detail}", i + 1);
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
