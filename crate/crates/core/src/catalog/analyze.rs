//! The end-to-end pipeline from a permutation group and a prime to one row of
//! the classification table.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::automizer::automizer_action;
use crate::cohom::{obstruction_consistency, solomon_check, ObstructionReport, SolomonCheck};
use crate::error::{Error, Result, StageExt};
use crate::ffmat::{FieldDesc, Mat};
use crate::groupalgo::{
    abelian_structure, centralizer_of_subgroup, normalizer_of_subgroup, sylow_subgroup, DEFAULT_ORBIT_CAP,
    DEFAULT_SYLOW_RESTARTS,
};
use crate::numth::{is_prime, p_part};
use crate::perm::PermGroup;
use crate::reflect::{fingerprint, reflection_subgroup, Fingerprint, ReflectionAnalysis};
use crate::semilinear::{choose_k_structure, restrict_to_k, KPolicy};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub seed: u64,
    pub orbit_cap: usize,
    pub sylow_restarts: usize,
    pub k_policy: KPolicy,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            seed: 1,
            orbit_cap: DEFAULT_ORBIT_CAP,
            sylow_restarts: DEFAULT_SYLOW_RESTARTS,
            k_policy: KPolicy::Auto,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDegree {
    pub p: u64,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Reflection data of one field view (`F_p` or `K`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionSummary {
    pub field: FieldDesc,
    pub dim: usize,
    pub order_group: u64,
    pub reflections: usize,
    pub unipotent_reflections: usize,
    pub order_w: u64,
    pub identification: String,
    pub irreducible: bool,
    pub fixed_dim: usize,
    pub index_over_w: u64,
    pub conjugation_closed: bool,
}

impl ReflectionSummary {
    fn from_analysis(a: &ReflectionAnalysis) -> Self {
        ReflectionSummary {
            field: a.field.clone(),
            dim: a.w.dim(),
            order_group: a.order_n,
            reflections: a.reflections.len(),
            unipotent_reflections: a.unipotent_reflections,
            order_w: a.order_w,
            identification: a.identification.to_string(),
            irreducible: a.irreducible,
            fixed_dim: a.fixed_dim,
            index_over_w: a.index_n_over_w,
            conjugation_closed: a.conjugation_closed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group: String,
    pub p: u64,
    pub seed: u64,
    pub order_g: u64,
    pub order_p: u64,
    pub abelian_invariants: Vec<u32>,
    pub homocyclic: bool,
    pub sylow_count: u64,
    pub order_n: u64,
    pub order_c: u64,
    pub order_e: u64,
    /// Fingerprint of `E` acting on `Ω₁(P)` over `F_p`.
    pub fingerprint_e: Fingerprint,
    pub k: FieldDegree,
    pub k_candidates: usize,
    pub dim_k: usize,
    pub order_w: u64,
    pub identification: String,
    pub index_n_over_w: u64,
    pub order_gamma: u64,
    pub irreducible_over_k: bool,
    pub fixed_dim_k: usize,
    pub fixed_dim_fp: usize,
    pub over_fp: ReflectionSummary,
    pub over_k: ReflectionSummary,
    pub obstruction: Option<ObstructionReport>,
    pub solomon: Option<SolomonCheck>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl AnalysisReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.pass)
    }

    /// The report with run-dependent fields cleared.
    pub fn normalized(&self) -> AnalysisReport {
        AnalysisReport {
            seed: 0,
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<AnalysisReport> {
        serde_json::from_str(s)
    }
}

pub fn analyze(name: &str, g: &PermGroup, p: u64, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let start = Instant::now();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let order_g = g.order().stage("order")?;
    if order_g % p != 0 {
        return Err(Error::Precondition(format!("{p} does not divide |G| = {order_g}")));
    }

    let sylow = sylow_subgroup(g, p, opts.orbit_cap, opts.sylow_restarts, &mut rng).stage("sylow")?;
    if !sylow.is_abelian() {
        return Err(Error::NonAbelianSylow { p });
    }
    let structure = abelian_structure(&sylow, p).stage("abelian_structure")?;
    let normalizer = normalizer_of_subgroup(g, &sylow, opts.orbit_cap, &mut rng).stage("normalizer")?;
    let centralizer = centralizer_of_subgroup(g, &sylow, opts.orbit_cap, &mut rng).stage("centralizer")?;
    let order_n = normalizer.group.order()?;
    let order_c = centralizer.order()?;
    let aut = automizer_action(&structure, &normalizer.group, &centralizer).stage("automizer")?;
    let e = &aut.e;

    let fp_analysis = reflection_subgroup(e).stage("reflect_fp")?;
    let kstruct = choose_k_structure(e, opts.k_policy).stage("semilinear")?;
    let dec = &kstruct.decomposition;
    let restriction = restrict_to_k(dec).stage("restrict_to_k")?;
    let k_analysis = reflection_subgroup(&restriction.n_k).stage("reflect_k")?;

    let (obstruction, solomon) = if p > 2 {
        (
            Some(obstruction_consistency(e, &fp_analysis).stage("obstruction")?),
            Some(solomon_check(&fp_analysis.w).stage("solomon")?),
        )
    } else {
        (None, None)
    };

    let order_e = aut.order_e;
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool| checks.push(Check { name: name.to_string(), pass });
    check("sylow_order", sylow.order()? == p_part(order_g, p));
    check("sylow_count_mod_p", normalizer.conjugates % p == 1);
    check("sylow_count_index", normalizer.conjugates * order_n == order_g);
    check("faithful", order_e * order_c == order_n);
    check("p_prime_e", order_e % p != 0);
    check("w_normal_fp", fp_analysis.conjugation_closed);
    check("w_normal_k", k_analysis.conjugation_closed);
    check("no_unipotent_reflections", fp_analysis.unipotent_reflections == 0 && k_analysis.unipotent_reflections == 0);
    check(
        "order_identity",
        order_e == k_analysis.order_w * k_analysis.index_n_over_w * dec.gamma_order,
    );
    check("split", dec.n.order()? * dec.gamma_order == order_e);
    let w_k_in_e = k_analysis
        .w
        .elements()?
        .iter()
        .map(|x| restriction.to_prime_field(x))
        .collect::<Result<Vec<Mat>>>()?
        .iter()
        .map(|x| e.contains(x))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    check("w_k_inside_e", w_k_in_e);
    if let Some(o) = &obstruction {
        check("obstruction_consistent", o.consistent);
        check("natural_dual_fixed_dims", o.fixed_w_dim == o.dual_fixed_w_dim);
        if let Some(agree) = o.projector_agrees {
            check("projector_agrees", agree);
        }
    }
    if let Some(s) = &solomon {
        check("solomon", s.holds);
    }

    Ok(AnalysisReport {
        group: name.to_string(),
        p,
        seed: opts.seed,
        order_g,
        order_p: sylow.order()?,
        abelian_invariants: structure.exponents.clone(),
        homocyclic: structure.is_homocyclic(),
        sylow_count: normalizer.conjugates,
        order_n,
        order_c,
        order_e,
        fingerprint_e: fingerprint(e).stage("fingerprint")?,
        k: FieldDegree { p, m: dec.m },
        k_candidates: kstruct.candidates,
        dim_k: dec.dim_k(),
        order_w: k_analysis.order_w,
        identification: k_analysis.identification.to_string(),
        index_n_over_w: k_analysis.index_n_over_w,
        order_gamma: dec.gamma_order,
        irreducible_over_k: k_analysis.irreducible,
        fixed_dim_k: k_analysis.fixed_dim,
        fixed_dim_fp: fp_analysis.fixed_dim,
        over_fp: ReflectionSummary::from_analysis(&fp_analysis),
        over_k: ReflectionSummary::from_analysis(&k_analysis),
        obstruction,
        solomon,
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Componentwise combination over the direct factors of a product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub p: u64,
    pub factors: Vec<String>,
    pub k: Vec<FieldDegree>,
    pub dim_fp: usize,
    pub fixed_dim_k: usize,
    pub fixed_dim_fp: usize,
    pub fixed_trivial: bool,
}

pub fn combine_reports(reports: &[AnalysisReport]) -> Result<ProductReport> {
    let p = reports
        .first()
        .ok_or_else(|| Error::Precondition("no reports to combine".into()))?
        .p;
    if let Some(r) = reports.iter().find(|r| r.p != p) {
        return Err(Error::MismatchedPrimes(p, r.p));
    }
    let fixed_dim_k = reports.iter().map(|r| r.fixed_dim_k * r.k.m as usize).sum();
    Ok(ProductReport {
        p,
        factors: reports.iter().map(|r| r.group.clone()).collect(),
        k: reports.iter().map(|r| r.k.clone()).collect(),
        dim_fp: reports.iter().map(|r| r.over_fp.dim).sum(),
        fixed_dim_k,
        fixed_dim_fp: reports.iter().map(|r| r.fixed_dim_fp).sum(),
        fixed_trivial: fixed_dim_k == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupalgo::construct::{alternating, symmetric};

    #[test]
    fn alternating_five_at_two() {
        // A₅ at p = 2: P = 2², E = C₃, K = F₄, W = N = K^×.
        let r = analyze("Alt:5", &alternating(5), 2, &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.order_p, r.order_e, r.sylow_count), (4, 3, 5));
        assert_eq!(r.over_fp.reflections, 0);
        assert_eq!((r.k.m, r.dim_k, r.order_w, r.order_gamma), (2, 1, 3, 1));
        assert_eq!(r.identification, "cyclic-3");
        assert!(r.all_checks_pass(), "{:?}", r.failed_checks());
    }

    #[test]
    fn symmetric_six_at_three() {
        let r = analyze("Sym:6", &symmetric(6), 3, &AnalyzeOptions::default()).unwrap();
        assert_eq!((r.order_e, r.order_w, r.index_n_over_w), (8, 8, 1));
        assert_eq!(r.identification, "B2");
        assert!(r.all_checks_pass(), "{:?}", r.failed_checks());
        let json = r.to_json();
        assert_eq!(AnalysisReport::from_json(&json).unwrap().to_json(), json);
    }

    #[test]
    fn non_dividing_prime() {
        assert!(analyze("Sym:4", &symmetric(4), 5, &AnalyzeOptions::default()).is_err());
    }

    #[test]
    fn combine_checks_primes() {
        let a = analyze("Sym:6", &symmetric(6), 3, &AnalyzeOptions::default()).unwrap();
        let b = analyze("Alt:5", &alternating(5), 2, &AnalyzeOptions::default()).unwrap();
        assert!(matches!(combine_reports(&[a.clone(), b]), Err(Error::MismatchedPrimes(3, 2))));
        let two = combine_reports(&[a.clone(), a]).unwrap();
        assert_eq!(two.dim_fp, 4);
        assert!(two.fixed_trivial);
    }
}
