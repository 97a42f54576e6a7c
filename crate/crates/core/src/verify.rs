//! End-to-end verification of the closed-form generating sets.
//!
//! Two independent routes decide whether a set is a Gröbner basis:
//!
//! * the Buchberger criterion, run by the binomial engine;
//! * the standard-monomial test: a homogeneous set of binomials of the toric
//!   ideal is a Gröbner basis iff no two distinct monomials outside its
//!   initial ideal share an image `t^{η}`. The enumeration is bounded by a
//!   weighted degree `D`, so a passing result only says "consistent up to
//!   D" while a collision is a proof of failure.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::closedform::{self, BasisSet, ConditionReport, Variant};
use crate::error::{Error, Result};
use crate::groebner::{self, CriterionOutcome, SPairWitness};
use crate::poly::{is_homogeneous, weighted_degree, Binomial, Monomial, MonomialOrder, VariableOrder};
use crate::semigroup::{compute_params, validate_input, SemigroupParams, ValidatedSequence};

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for Binomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for VariableOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl Serialize for Variant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl Serialize for SPairWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SPairWitness", 4)?;
        st.serialize_field("f", &self.f)?;
        st.serialize_field("g", &self.g)?;
        st.serialize_field("spoly", &self.spoly)?;
        st.serialize_field("normal_form", &self.normal_form)?;
        st.end()
    }
}

/// Which verification route decides a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Buchberger,
    StandardMonomials,
    #[default]
    Both,
}

/// Buchberger criterion on a closed-form set. A failing witness is
/// re-checked: its normal form must be homogeneous and irreducible.
pub fn verify_buchberger(set: &BasisSet) -> Result<CriterionOutcome> {
    let binomials = set.binomials();
    let outcome = groebner::is_groebner(&binomials, &set.order)?;
    if let Some(w) = &outcome.witness {
        let nf = w
            .normal_form
            .as_ref()
            .ok_or_else(|| Error::InternalInconsistency("witness with zero normal form".into()))?;
        let reducible = binomials
            .iter()
            .any(|h| nf.monomials().iter().any(|m| h.lead().divides(m)));
        if reducible || !is_homogeneous(nf, set.order.weights()) {
            return Err(Error::InternalInconsistency(format!("invalid S-pair witness {nf}")));
        }
    }
    Ok(outcome)
}

/// All monomials of weighted degree at most `bound` divisible by none of
/// `leads`.
pub fn standard_monomials(leads: &[Monomial], weights: &[u64], bound: u64) -> Vec<Monomial> {
    fn walk(
        var: usize,
        exps: &mut Vec<u32>,
        degree: u64,
        leads: &[Monomial],
        weights: &[u64],
        bound: u64,
        out: &mut Vec<Monomial>,
    ) {
        if var == weights.len() {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        let mut e = 0u32;
        let mut deg = degree;
        loop {
            exps[var] = e;
            // Unassigned variables are zero, so a divisible prefix stays
            // divisible for every extension and every larger exponent.
            let partial = Monomial::from_exponents(exps.clone());
            if leads.iter().any(|l| l.divides(&partial)) {
                break;
            }
            walk(var + 1, exps, deg, leads, weights, bound, out);
            match deg.checked_add(weights[var]) {
                Some(d) if d <= bound && weights[var] > 0 => deg = d,
                _ => break,
            }
            e += 1;
        }
        exps[var] = 0;
    }
    let mut out = Vec::new();
    let mut exps = vec![0; weights.len()];
    walk(0, &mut exps, 0, leads, weights, bound, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMonomialOutcome {
    /// No two standard monomials up to the bound share a weighted degree.
    pub consistent: bool,
    /// The colliding pair of least weighted degree, larger monomial first.
    pub witness: Option<(Monomial, Monomial)>,
    pub degree_bound: u64,
}

pub fn verify_standard_monomials(set: &BasisSet, degree_bound: u64) -> StandardMonomialOutcome {
    let leads: Vec<Monomial> = set.elements.iter().map(|(_, b)| b.lead().clone()).collect();
    let weights = set.order.weights();
    let mut by_degree: BTreeMap<u64, Vec<Monomial>> = BTreeMap::new();
    for m in standard_monomials(&leads, weights, degree_bound) {
        let d = weighted_degree(&m, weights).expect("bounded degree");
        by_degree.entry(d).or_default().push(m);
    }
    let witness = by_degree.into_values().find(|ms| ms.len() > 1).map(|mut ms| {
        ms.sort_by(|a, b| set.order.compare(b, a));
        (ms[0].clone(), ms[1].clone())
    });
    StandardMonomialOutcome { consistent: witness.is_none(), witness, degree_bound }
}

/// Largest weighted degree of an element plus `2·mn`.
pub fn base_degree_bound(set: &BasisSet) -> u64 {
    let weights = set.order.weights();
    let max = set
        .elements
        .iter()
        .map(|(_, b)| weighted_degree(b.lead(), weights).unwrap_or(u64::MAX))
        .max()
        .unwrap_or(0);
    max.saturating_add(2 * weights[weights.len() - 1])
}

/// Largest weighted degree of `lcm(LM f, LM g)` over pairs with
/// non-coprime leads, or 0.
///
/// A failing S-pair leaves a fully reduced binomial of exactly this degree
/// whose two monomials are standard, so any bound at least this large
/// refutes every set that is not a Gröbner basis.
pub fn s_pair_degree_bound(set: &BasisSet) -> u64 {
    let weights = set.order.weights();
    let leads: Vec<&Monomial> = set.elements.iter().map(|(_, b)| b.lead()).collect();
    let mut max = 0;
    for (j, g) in leads.iter().enumerate() {
        for f in &leads[..j] {
            if !f.is_coprime(g) {
                max = max.max(weighted_degree(&f.lcm(g), weights).unwrap_or(u64::MAX));
            }
        }
    }
    max
}

/// The larger of [`base_degree_bound`] and [`s_pair_degree_bound`].
pub fn default_degree_bound(set: &BasisSet) -> u64 {
    base_degree_bound(set).max(s_pair_degree_bound(set))
}

/// Hypotheses of the two known failure patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FailureHypotheses {
    /// `r' ≥ r`, `mu = 0`, `W ≠ ∅`: Patil's set fails under ascending grevlex.
    pub patil_not_gb: bool,
    /// `r < r_z < p`, `lambda > 1`, `w > 0`: Patil–Singh fails under
    /// descending grevlex.
    pub ps_not_gb_desc: bool,
}

pub fn failure_hypotheses(params: &SemigroupParams) -> FailureHypotheses {
    let patil_not_gb = params.r_prime >= params.r && params.mu == 0 && params.w_nonempty;
    let ps_not_gb_desc = match params.r_z {
        Some(rz) => params.r < rz && rz < params.p && params.lambda > 1 && params.w > 0,
        None => false,
    };
    FailureHypotheses { patil_not_gb, ps_not_gb_desc }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub sequence: Vec<u64>,
    pub order_convention: VariableOrder,
    pub variant: Variant,
    pub is_gb: bool,
    pub gb_witness: Option<SPairWitness>,
    pub is_minimal: bool,
    pub is_reduced: bool,
    pub c1: bool,
    pub c2: bool,
    pub engine_match: bool,
    pub standard_monomial_ok: Option<bool>,
    pub standard_monomial_witness: Option<(Monomial, Monomial)>,
    pub degree_bound_used: u64,
}

impl VerificationReport {
    /// Whether the Gröbner verdict under `method` is positive. A
    /// standard-monomial pass only counts up to the bound used.
    pub fn passes(&self, method: Method) -> bool {
        match method {
            Method::Buchberger => self.is_gb,
            Method::StandardMonomials => self.standard_monomial_ok != Some(false),
            Method::Both => self.is_gb && self.standard_monomial_ok != Some(false),
        }
    }
}

/// Reduced basis of `G` equals the reduced basis computed from scratch
/// out of the Patil–Singh generators.
pub fn engine_match(g: &BasisSet, patil_singh: &BasisSet) -> Result<bool> {
    let order = &g.order;
    let from_closed_form = groebner::interreduce(&g.binomials(), order);
    let completed = groebner::buchberger(&patil_singh.binomials(), order)?;
    Ok(from_closed_form == groebner::interreduce(&completed.basis, order))
}

/// Runs the requested checks on one set.
pub fn verify_set(
    set: &BasisSet,
    seq: &ValidatedSequence,
    engine_match: bool,
    method: Method,
    degree_bound: Option<u64>,
) -> Result<VerificationReport> {
    let criterion = verify_buchberger(set)?;
    let conditions = closedform::check_conditions(&set.params);
    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(set));
    let standard = match method {
        Method::Buchberger => None,
        Method::StandardMonomials | Method::Both => Some(verify_standard_monomials(set, bound)),
    };
    Ok(VerificationReport {
        sequence: seq.m().to_vec(),
        order_convention: set.order.convention(),
        variant: set.variant,
        is_gb: criterion.is_groebner,
        gb_witness: criterion.witness,
        is_minimal: closedform::is_minimal_basis(set),
        is_reduced: closedform::is_reduced_basis(set),
        c1: conditions.c1,
        c2: conditions.c2,
        engine_match,
        standard_monomial_ok: standard.as_ref().map(|s| s.consistent),
        standard_monomial_witness: standard.and_then(|s| s.witness),
        degree_bound_used: bound,
    })
}

/// Everything known about one sequence under one variable convention.
#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub sequence: ValidatedSequence,
    pub convention: VariableOrder,
    pub params: SemigroupParams,
    pub conditions: ConditionReport,
    pub failures: FailureHypotheses,
    pub engine_match: bool,
    /// `Patil ⊆ G ⊆ Patil–Singh` element-wise.
    pub inclusions_hold: bool,
    /// The Patil–Singh set has an element outside `G`.
    pub patil_singh_exceeds_g: bool,
    /// Reports for `G`, Patil and Patil–Singh, in that order.
    pub reports: Vec<VerificationReport>,
    /// How many of the three sets are refuted only above
    /// [`base_degree_bound`].
    pub refuted_above_base_bound: usize,
}

impl CrossCheck {
    pub fn report(&self, variant: Variant) -> &VerificationReport {
        self.reports.iter().find(|r| r.variant == variant).expect("all variants present")
    }

    /// Claims that fail on this instance, as short descriptions.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut claim = |ok: bool, what: &str| {
            if !ok {
                out.push(what.to_string());
            }
        };
        let g = self.report(Variant::G);
        let patil = self.report(Variant::Patil);
        let ps = self.report(Variant::PatilSingh);
        claim(self.inclusions_hold, "Patil ⊆ G ⊆ Patil-Singh");
        for r in &self.reports {
            if r.is_gb {
                claim(r.standard_monomial_ok != Some(false), &format!("{}: Gröbner but η-collision", r.variant));
            } else {
                claim(
                    r.standard_monomial_ok == Some(false),
                    &format!("{}: not Gröbner but no η-collision up to {}", r.variant, r.degree_bound_used),
                );
            }
        }
        match self.convention {
            VariableOrder::Ascending => {
                claim(g.is_gb, "G is a Gröbner basis");
                claim(g.is_minimal, "G is minimal");
                claim(g.is_reduced == self.conditions.reduced_predicted, "G reduced iff neither C1 nor C2");
                claim(self.engine_match, "reduced basis matches engine");
                claim(ps.is_gb, "Patil-Singh is a Gröbner basis");
                claim(ps.is_minimal != self.patil_singh_exceeds_g, "Patil-Singh minimal iff equal to G");
                if self.failures.patil_not_gb {
                    claim(!patil.is_gb, "Patil set fails under its hypotheses");
                }
            }
            VariableOrder::Descending => {
                if self.failures.ps_not_gb_desc {
                    claim(!ps.is_gb, "Patil-Singh fails under descending order");
                }
            }
        }
        out
    }
}

pub fn cross_check(seq: &ValidatedSequence, convention: VariableOrder) -> Result<CrossCheck> {
    let params = compute_params(seq)?;
    let order = MonomialOrder::new(seq.m(), convention);
    let sets: Vec<BasisSet> = Variant::ALL
        .iter()
        .map(|&v| closedform::build_generators(seq, &params, v, &order))
        .collect::<Result<_>>()?;
    let (g, patil, ps) = (&sets[0], &sets[1], &sets[2]);
    let matched = engine_match(g, ps)?;
    let reports = sets
        .iter()
        .map(|s| verify_set(s, seq, matched, Method::Both, None))
        .collect::<Result<Vec<_>>>()?;
    let refuted_above_base_bound = sets
        .iter()
        .zip(&reports)
        .filter(|(s, r)| match &r.standard_monomial_witness {
            Some((a, _)) => weighted_degree(a, order.weights()).map_or(true, |d| d > base_degree_bound(s)),
            None => false,
        })
        .count();
    Ok(CrossCheck {
        sequence: seq.clone(),
        convention,
        conditions: closedform::check_conditions(&params),
        failures: failure_hypotheses(&params),
        engine_match: matched,
        inclusions_hold: patil.is_subset_of(g) && g.is_subset_of(ps),
        patil_singh_exceeds_g: !ps.is_subset_of(g),
        params,
        reports,
        refuted_above_base_bound,
    })
}

/// Every valid almost arithmetic sequence with `2 ≤ n ≤ max_n` and all
/// entries at most `max_m`, ordered by `(n, m0, step, mn)`.
pub fn valid_sequences(max_m: u64, max_n: usize) -> Vec<ValidatedSequence> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let p = (n - 1) as u64;
        for m0 in 1..=max_m {
            let mut d = 1;
            while m0 + p * d <= max_m {
                for mn in 1..=max_m {
                    let mut m: Vec<u64> = (0..=p).map(|i| m0 + i * d).collect();
                    m.push(mn);
                    if let Ok(seq) = validate_input(&m) {
                        out.push(seq);
                    }
                }
                d += 1;
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sequence: Vec<u64>,
    pub claim: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub max_m: u64,
    pub max_n: usize,
    pub order: VariableOrder,
    pub instances: usize,
    pub g_reduced: usize,
    pub patil_not_gb: usize,
    pub patil_singh_not_gb: usize,
    pub patil_singh_not_minimal: usize,
    /// Instances where reducedness of `G` disagrees with `¬C1 ∧ ¬C2`.
    pub reduced_mismatches: usize,
    /// Instances where it disagrees with `C1` taken without `lambda = 1`.
    pub reduced_mismatches_any_lambda: usize,
    /// Refuted sets whose least collision lies above [`base_degree_bound`].
    pub refuted_above_base_bound: usize,
    pub violations: Vec<Violation>,
}

/// Cross-checks every sequence in parallel; results keep input order.
pub fn cross_check_all(
    seqs: &[ValidatedSequence],
    convention: VariableOrder,
) -> Vec<(ValidatedSequence, Result<CrossCheck>)> {
    seqs.par_iter()
        .map(|s| (s.clone(), cross_check(s, convention)))
        .collect()
}

pub fn sweep(max_m: u64, max_n: usize, convention: VariableOrder) -> SweepSummary {
    let seqs = valid_sequences(max_m, max_n);
    let results = cross_check_all(&seqs, convention);
    let mut summary = SweepSummary {
        max_m,
        max_n,
        order: convention,
        instances: results.len(),
        g_reduced: 0,
        patil_not_gb: 0,
        patil_singh_not_gb: 0,
        patil_singh_not_minimal: 0,
        reduced_mismatches: 0,
        reduced_mismatches_any_lambda: 0,
        refuted_above_base_bound: 0,
        violations: Vec::new(),
    };
    for (seq, result) in results {
        match result {
            Ok(cc) => {
                summary.g_reduced += cc.report(Variant::G).is_reduced as usize;
                summary.patil_not_gb += !cc.report(Variant::Patil).is_gb as usize;
                summary.patil_singh_not_gb += !cc.report(Variant::PatilSingh).is_gb as usize;
                summary.patil_singh_not_minimal += !cc.report(Variant::PatilSingh).is_minimal as usize;
                let g = cc.report(Variant::G);
                let c = &cc.conditions;
                summary.reduced_mismatches += (g.is_reduced != c.reduced_predicted) as usize;
                summary.reduced_mismatches_any_lambda += (g.is_reduced != (!c.c1_any_lambda && !c.c2)) as usize;
                summary.refuted_above_base_bound += cc.refuted_above_base_bound;
                for claim in cc.violations() {
                    summary.violations.push(Violation { sequence: seq.m().to_vec(), claim });
                }
            }
            Err(e) => summary.violations.push(Violation { sequence: seq.m().to_vec(), claim: e.to_string() }),
        }
    }
    summary
}
