//! The `monocurve` command line.
//!
//! Exit codes: 0 when every claim checked by the command holds, 1 when a
//! claim fails (the witness is part of the output), 2 on invalid input.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::closedform::{self, BasisSet, GeneratorTag, Variant};
use crate::error::{Error, Result};
use crate::groebner::{self, SPairWitness};
use crate::poly::{make_binomial, Binomial, Monomial, MonomialOrder, VariableOrder};
use crate::semigroup::{compute_params, validate_input, SemigroupParams, ValidatedSequence};
use crate::verify::{self, Method, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "monocurve", version, about = "Gröbner bases of monomial curves from almost arithmetic sequences")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SetArg {
    G,
    Patil,
    PatilSingh,
}

impl From<SetArg> for Variant {
    fn from(s: SetArg) -> Variant {
        match s {
            SetArg::G => Variant::G,
            SetArg::Patil => Variant::Patil,
            SetArg::PatilSingh => Variant::PatilSingh,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Asc,
    Desc,
}

impl From<OrderArg> for VariableOrder {
    fn from(o: OrderArg) -> VariableOrder {
        match o {
            OrderArg::Asc => VariableOrder::Ascending,
            OrderArg::Desc => VariableOrder::Descending,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Buchberger,
    StandardMonomials,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Buchberger => Method::Buchberger,
            MethodArg::StandardMonomials => Method::StandardMonomials,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Semigroup parameters of M0 ... MN (MN is the non-arithmetic member).
    Params {
        #[arg(required = true, num_args = 1..)]
        m: Vec<u64>,
    },
    /// One of the closed-form generating sets.
    Basis {
        #[arg(required = true, num_args = 1..)]
        m: Vec<u64>,
        #[arg(long = "set", value_enum, default_value_t = SetArg::G)]
        set: SetArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Asc)]
        order: OrderArg,
    },
    /// Checks whether a generating set is a Gröbner basis.
    Verify {
        #[arg(required = true, num_args = 1..)]
        m: Vec<u64>,
        #[arg(long = "set", value_enum, default_value_t = SetArg::G)]
        set: SetArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Asc)]
        order: OrderArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// Weighted-degree bound for the standard-monomial enumeration.
        #[arg(long)]
        degree_bound: Option<u64>,
    },
    /// Cross-checks every valid sequence with entries up to --max-m and
    /// 2 <= n <= --max-n.
    Sweep {
        #[arg(long, default_value_t = 40)]
        max_m: u64,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Asc)]
        order: OrderArg,
    },
    /// Reproduces one of the known counterexamples.
    Repro {
        #[command(subcommand)]
        which: Repro,
    },
}

#[derive(Debug, Subcommand)]
enum Repro {
    /// Patil's generators of (K, K+1, K-1) are not a Gröbner basis.
    PatilCounterexample {
        #[arg(long = "m0")]
        m0: u64,
    },
    /// Patil–Singh generators of (20,...,24,29) fail under descending grevlex.
    PsDescCounterexample,
}

/// Parameter report with ASCII keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub m: Vec<u64>,
    pub n: usize,
    pub p: usize,
    pub u: u64,
    pub v: u64,
    pub w: u64,
    pub z: u64,
    pub lambda: u64,
    pub mu: u64,
    pub nu: u64,
    pub q: u64,
    pub r: usize,
    pub qprime: u64,
    pub rprime: usize,
    pub qz: Option<u64>,
    pub rz: Option<usize>,
    pub epsilon: Option<u64>,
    #[serde(rename = "I")]
    pub interval_i: Option<[i64; 2]>,
    #[serde(rename = "J")]
    pub interval_j: Option<[i64; 2]>,
}

impl ParamsDoc {
    pub fn new(seq: &ValidatedSequence, p: &SemigroupParams) -> ParamsDoc {
        ParamsDoc {
            m: seq.m().to_vec(),
            n: seq.n(),
            p: seq.p(),
            u: p.u,
            v: p.upsilon,
            w: p.w,
            z: p.z,
            lambda: p.lambda,
            mu: p.mu,
            nu: p.nu,
            q: p.q,
            r: p.r,
            qprime: p.q_prime,
            rprime: p.r_prime,
            qz: p.q_z,
            rz: p.r_z,
            epsilon: p.epsilon,
            interval_i: p.interval_i.bounds(),
            interval_j: p.interval_j.bounds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub tag: String,
    pub lead: String,
    pub trail: String,
    pub text: String,
}

/// A generating set as printed by `basis --format json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub m: Vec<u64>,
    pub variant: String,
    pub order: String,
    pub elements: Vec<ElementDoc>,
}

impl BasisDoc {
    pub fn new(set: &BasisSet, seq: &ValidatedSequence) -> BasisDoc {
        BasisDoc {
            m: seq.m().to_vec(),
            variant: set.variant.to_string(),
            order: set.order.convention().to_string(),
            elements: set
                .elements
                .iter()
                .map(|(tag, b)| ElementDoc {
                    tag: tag.to_string(),
                    lead: b.lead().to_string(),
                    trail: b.trail().to_string(),
                    text: b.to_string(),
                })
                .collect(),
        }
    }

    /// Rebuilds the set from its text form, re-deriving the parameters
    /// from `m`.
    pub fn to_basis_set(&self) -> Result<(ValidatedSequence, BasisSet)> {
        let seq = validate_input(&self.m)?;
        let params = compute_params(&seq)?;
        let bad = Error::InvalidArgument;
        let variant: Variant = self.variant.parse().map_err(bad)?;
        let convention = match self.order.as_str() {
            "asc" => VariableOrder::Ascending,
            "desc" => VariableOrder::Descending,
            other => return Err(bad(format!("unknown order {other:?}"))),
        };
        let order = MonomialOrder::new(seq.m(), convention);
        let mut elements = Vec::new();
        for e in &self.elements {
            let tag: GeneratorTag = e.tag.parse().map_err(bad)?;
            let parse = |s: &str| Monomial::parse(s, seq.m().len()).ok_or_else(|| bad(s.to_string()));
            let f = make_binomial(parse(&e.lead)?, parse(&e.trail)?, &order)
                .ok_or_else(|| bad(e.text.clone()))?;
            elements.push((tag, f));
        }
        Ok((seq, BasisSet { variant, elements, params, order }))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimDoc {
    pub claim: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReproDoc {
    pub name: String,
    pub sequence: Vec<u64>,
    pub params: ParamsDoc,
    pub claims: Vec<ClaimDoc>,
    pub witness: Option<SPairWitness>,
    pub standard_monomial_witness: Option<(Monomial, Monomial)>,
}

impl ReproDoc {
    pub fn reproduced(&self) -> bool {
        self.claims.iter().all(|c| c.holds)
    }
}

enum Outcome {
    Ok,
    ClaimFailed,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::ClaimFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error [{}]: {e}", e.kind());
            if e.is_input_error() {
                2
            } else {
                1
            }
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, doc: &T) -> Result<()> {
    let s = serde_json::to_string(doc).map_err(|e| Error::InternalInconsistency(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Error::InternalInconsistency(e.to_string()))
}

// Write failures on stdout are not reported separately.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {
        let _ = writeln!($out, $($arg)*);
    };
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Params { m } => {
            let seq = validate_input(m)?;
            let params = compute_params(&seq)?;
            let doc = ParamsDoc::new(&seq, &params);
            if json {
                emit(out, &doc)?;
            } else {
                write_params_text(out, &seq, &params);
            }
            Ok(Outcome::Ok)
        }
        Command::Basis { m, set, order } => {
            let seq = validate_input(m)?;
            let params = compute_params(&seq)?;
            let order = MonomialOrder::new(seq.m(), (*order).into());
            let basis = closedform::build_generators(&seq, &params, (*set).into(), &order)?;
            if json {
                emit(out, &BasisDoc::new(&basis, &seq))?;
            } else {
                say!(out, "{} generators of {} under {} grevlex:", basis.variant, seq, order.convention());
                for (tag, b) in &basis.elements {
                    say!(out, "  {tag:<10} {b}");
                }
            }
            Ok(Outcome::Ok)
        }
        Command::Verify { m, set, order, method, degree_bound } => {
            let seq = validate_input(m)?;
            let params = compute_params(&seq)?;
            let order = MonomialOrder::new(seq.m(), (*order).into());
            let build = |v| closedform::build_generators(&seq, &params, v, &order);
            let target = build((*set).into())?;
            let matched = verify::engine_match(&build(Variant::G)?, &build(Variant::PatilSingh)?)?;
            let method: Method = (*method).into();
            let report = verify::verify_set(&target, &seq, matched, method, *degree_bound)?;
            if json {
                emit(out, &report)?;
            } else {
                write_report_text(out, &report);
            }
            Ok(if verify_claims_hold(&report, method) { Outcome::Ok } else { Outcome::ClaimFailed })
        }
        Command::Sweep { max_m, max_n, order } => {
            if *max_n < 2 {
                return Err(Error::InvalidArgument(format!("--max-n must be at least 2, got {max_n}")));
            }
            let summary = verify::sweep(*max_m, *max_n, (*order).into());
            if json {
                emit(out, &summary)?;
            } else {
                say!(out, "sweep over n in [2,{}], entries <= {}, {} grevlex", max_n, max_m, summary.order);
                say!(out, "  instances:                {}", summary.instances);
                say!(out, "  G reduced:                {}", summary.g_reduced);
                say!(out, "  Patil not Gröbner:        {}", summary.patil_not_gb);
                say!(out, "  Patil-Singh not Gröbner:  {}", summary.patil_singh_not_gb);
                say!(out, "  Patil-Singh not minimal:  {}", summary.patil_singh_not_minimal);
                say!(out, "  G reduced vs C1/C2 mismatches:          {}", summary.reduced_mismatches);
                say!(out, "  same, C1 taken without lambda = 1:      {}", summary.reduced_mismatches_any_lambda);
                say!(out, "  refuted only above max degree + 2*mn:   {}", summary.refuted_above_base_bound);
                say!(out, "  violations:               {}", summary.violations.len());
                for v in &summary.violations {
                    say!(out, "    {:?}: {}", v.sequence, v.claim);
                }
            }
            Ok(if summary.violations.is_empty() { Outcome::Ok } else { Outcome::ClaimFailed })
        }
        Command::Repro { which } => {
            let doc = match which {
                Repro::PatilCounterexample { m0 } => patil_counterexample(*m0)?,
                Repro::PsDescCounterexample => ps_desc_counterexample()?,
            };
            if json {
                emit(out, &doc)?;
            } else {
                write_repro_text(out, &doc);
            }
            Ok(if doc.reproduced() { Outcome::Ok } else { Outcome::ClaimFailed })
        }
    }
}

/// The chosen set passes, and for `G` under ascending grevlex the
/// reducedness prediction and the engine comparison agree.
fn verify_claims_hold(report: &VerificationReport, method: Method) -> bool {
    let mut ok = report.passes(method);
    if report.variant == Variant::G && report.order_convention == VariableOrder::Ascending {
        ok &= report.is_reduced == (!report.c1 && !report.c2);
        ok &= report.engine_match;
    }
    ok
}

fn write_params_text(out: &mut dyn Write, seq: &ValidatedSequence, p: &SemigroupParams) {
    let opt = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
    say!(out, "sequence {} (n = {}, p = {})", seq, seq.n(), seq.p());
    say!(out, "  u = {}  (q = {}, r = {})", p.u, p.q, p.r);
    say!(out, "  v = {}  w = {}  lambda = {}", p.upsilon, p.w, p.lambda);
    say!(out, "  z = {}  mu = {}  (q_z = {}, r_z = {}, epsilon = {})", p.z, p.mu, opt(p.q_z), opt(p.r_z.map(|r| r as u64)), opt(p.epsilon));
    say!(out, "  nu = {}  q' = {}  r' = {}", p.nu, p.q_prime, p.r_prime);
    say!(out, "  W {}  I = {}  J = {}", if p.w_nonempty { "nonempty" } else { "empty" }, p.interval_i, p.interval_j);
}

fn write_witness(out: &mut dyn Write, w: &SPairWitness) {
    let show = |b: &Option<Binomial>| b.as_ref().map_or("0".to_string(), |b| b.to_string());
    say!(out, "  S-pair:         ({}) , ({})", w.f, w.g);
    say!(out, "  S-polynomial:   {}", show(&w.spoly));
    say!(out, "  normal form:    {}", show(&w.normal_form));
}

fn write_report_text(out: &mut dyn Write, r: &VerificationReport) {
    say!(out, "{} generators of {:?} under {} grevlex", r.variant, r.sequence, r.order_convention);
    say!(out, "  Buchberger criterion: {}", if r.is_gb { "holds" } else { "FAILS" });
    if let Some(w) = &r.gb_witness {
        write_witness(out, w);
    }
    match (r.standard_monomial_ok, &r.standard_monomial_witness) {
        (Some(true), _) => {
            say!(out, "  standard monomials: consistent up to bound {}", r.degree_bound_used);
        }
        (Some(false), Some((a, b))) => {
            say!(out, "  standard monomials: collision {a} , {b} (bound {})", r.degree_bound_used);
        }
        _ => {}
    }
    say!(out, "  minimal: {}  reduced: {}", r.is_minimal, r.is_reduced);
    say!(out, "  C1: {}  C2: {}  engine match: {}", r.c1, r.c2, r.engine_match);
}

fn write_repro_text(out: &mut dyn Write, doc: &ReproDoc) {
    say!(out, "{} on {:?}", doc.name, doc.sequence);
    for c in &doc.claims {
        say!(out, "  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.claim);
    }
    if let Some(w) = &doc.witness {
        write_witness(out, w);
    }
    if let Some((a, b)) = &doc.standard_monomial_witness {
        say!(out, "  η-collision:    {a} , {b}");
    }
    say!(out, "{}", if doc.reproduced() { "reproduced" } else { "NOT reproduced" });
}

fn claim(claims: &mut Vec<ClaimDoc>, holds: bool, text: impl Into<String>) {
    claims.push(ClaimDoc { claim: text.into(), holds });
}

/// Patil's generators of `(k, k+1, k-1)` for odd `k ≥ 5`.
pub fn patil_counterexample(k: u64) -> Result<ReproDoc> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("--m0 must be odd and at least 5, got {k}")));
    }
    let seq = validate_input(&[k, k + 1, k - 1])?;
    let params = compute_params(&seq)?;
    let order = MonomialOrder::ascending(&seq);
    let mut claims = Vec::new();
    let (h, l) = (k.div_ceil(2), (k - 1) / 2);
    claim(&mut claims, params.upsilon == h && params.u == h, format!("v = u = {h}"));
    claim(&mut claims, params.mu == 0 && params.lambda == 2, "mu = 0, lambda = 2");
    claim(&mut claims, params.z == l && params.w == l, format!("z = w = {l}"));
    claim(&mut claims, params.r == 1 && params.p == 1 && params.r_prime == 1, "r = p = r' = 1");
    claim(&mut claims, verify::failure_hypotheses(&params).patil_not_gb, "r' >= r, mu = 0, W nonempty");

    let omega = closedform::build_generators(&seq, &params, Variant::Patil, &order)?;
    let crit = verify::verify_buchberger(&omega)?;
    claim(&mut claims, !crit.is_groebner, "Patil generators are not a Gröbner basis");
    let sm = verify::verify_standard_monomials(&omega, verify::default_degree_bound(&omega));
    claim(&mut claims, !sm.consistent, "two standard monomials share an η-value");

    let g = closedform::build_generators(&seq, &params, Variant::G, &order)?;
    claim(&mut claims, verify::verify_buchberger(&g)?.is_groebner, "G is a Gröbner basis");
    claim(&mut claims, closedform::is_reduced_basis(&g), "G is reduced");
    let cond = closedform::check_conditions(&params);
    claim(&mut claims, !cond.c1 && !cond.c2, "neither C1 nor C2 holds");

    Ok(ReproDoc {
        name: "patil-counterexample".into(),
        sequence: seq.m().to_vec(),
        params: ParamsDoc::new(&seq, &params),
        claims,
        witness: crit.witness,
        standard_monomial_witness: sm.witness,
    })
}

/// Patil–Singh generators of `(20, 21, 22, 23, 24, 29)` under descending
/// grevlex, with the S-pair of `theta` and `xi(1,3)` as witness.
pub fn ps_desc_counterexample() -> Result<ReproDoc> {
    let seq = validate_input(&[20, 21, 22, 23, 24, 29])?;
    let p = compute_params(&seq)?;
    let mut claims = Vec::new();
    claim(
        &mut claims,
        (p.upsilon, p.mu, p.q_z, p.r_z, p.z) == (3, 2, Some(1), Some(3), 7),
        "v = 3, mu = 2, q_z = 1, r_z = 3, z = 7",
    );
    claim(
        &mut claims,
        (p.u, p.q, p.r, p.lambda, p.w, p.r_prime, p.q_prime) == (9, 2, 1, 2, 1, 2, 0),
        "u = 9, q = 2, r = 1, lambda = 2, w = 1, r' = 2, q' = 0",
    );
    claim(&mut claims, verify::failure_hypotheses(&p).ps_not_gb_desc, "r < r_z < p, lambda > 1, w > 0");

    let desc = MonomialOrder::descending(&seq);
    let ps = closedform::build_generators(&seq, &p, Variant::PatilSingh, &desc)?;
    let crit = verify::verify_buchberger(&ps)?;
    claim(&mut claims, !crit.is_groebner, "Patil-Singh generators fail under descending grevlex");

    let theta = ps.get(GeneratorTag::Theta).expect("theta present");
    let xi = ps.get(GeneratorTag::Xi(1, 3)).expect("xi(1,3) present");
    let s = groebner::s_polynomial(theta, xi, &desc);
    let expected = Binomial::parse("x1*x5^3 - x0^3*x4^2", &desc);
    claim(&mut claims, s.is_some() && s == expected, "S(theta, xi(1,3)) = x1*x5^3 - x0^3*x4^2");
    let nf = groebner::normal_form(s.clone(), &ps.binomials(), &desc);
    claim(&mut claims, nf.is_some() && nf == s, "neither term is divisible by a leading term");
    let sm = verify::verify_standard_monomials(&ps, verify::default_degree_bound(&ps));
    claim(&mut claims, !sm.consistent, "two standard monomials share an η-value");

    let asc = MonomialOrder::ascending(&seq);
    let ps_asc = closedform::build_generators(&seq, &p, Variant::PatilSingh, &asc)?;
    claim(&mut claims, verify::verify_buchberger(&ps_asc)?.is_groebner, "Patil-Singh is a Gröbner basis under ascending grevlex");

    let witness = s.map(|spoly| SPairWitness { f: theta.clone(), g: xi.clone(), spoly: Some(spoly), normal_form: nf });
    Ok(ReproDoc {
        name: "ps-desc-counterexample".into(),
        sequence: seq.m().to_vec(),
        params: ParamsDoc::new(&seq, &p),
        claims,
        witness,
        standard_monomial_witness: sm.witness,
    })
}
