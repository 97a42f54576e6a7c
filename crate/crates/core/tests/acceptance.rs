//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! cargo test -p monocurve --test acceptance

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monocurve::closedform::{build_generators, is_reduced_basis};
use monocurve::groebner::{failing_pairs, is_groebner, s_polynomial};
use monocurve::semigroup::{
    apery_set, compute_params, is_member, unique_representation, validate_input, Semigroup,
};
use monocurve::verify::{
    cross_check_all, valid_sequences, verify_standard_monomials, CrossCheck,
};
use monocurve::{Binomial, GeneratorTag, Monomial, MonomialOrder, SemigroupParams, VariableOrder, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_MAX_M: u64 = 40;
const SWEEP_MAX_N: usize = 5;
const PARAMS_BUDGET: Duration = Duration::from_secs(1);
const SWEEP_BUDGET: Duration = Duration::from_secs(180);
const REPRESENTATION_SEED: u64 = 0x5eed_0007;
const REPRESENTATION_SEQUENCES: usize = 20;
const REPRESENTATION_LIMIT: u64 = 5000;

struct Line {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn params(m: &[u64]) -> SemigroupParams {
    compute_params(&validate_input(m).expect("valid")).expect("params")
}

fn criterion_1() -> Line {
    let start = Instant::now();
    let mut bad = Vec::new();

    let p = params(&[5, 6, 7, 8, 9]);
    let got = (p.u, p.upsilon, p.lambda, p.w, p.z, p.q_prime, p.r_prime, p.mu);
    if got != (4, 2, 1, 1, 3, 0, 1, 2) {
        bad.push(format!("(5..9): {got:?}"));
    }
    // 6 + 9 = 3·5
    if !(p.nu == 3 && 6 + 9 == p.nu * 5) {
        bad.push("(5..9): nu".into());
    }

    let p = params(&[20, 21, 22, 23, 24, 29]);
    let got = (p.upsilon, p.mu, p.q_z, p.r_z, p.z, p.u, p.q, p.r, p.lambda, p.w, p.r_prime, p.q_prime);
    if got != (3, 2, Some(1), Some(3), 7, 9, 2, 1, 2, 1, 2, 0) {
        bad.push(format!("(20..29): {got:?}"));
    }
    let seq = validate_input(&[20, 21, 22, 23, 24, 29]).unwrap();
    let order = MonomialOrder::ascending(&seq);
    let ps = build_generators(&seq, &p, Variant::PatilSingh, &order).unwrap();
    let psi0 = ps.get(GeneratorTag::Psi(0)).unwrap().to_string();
    if psi0 != "x2*x5^2 - x0^4" {
        bad.push(format!("(20..29): psi(0) = {psi0}"));
    }

    for k in (5..=25u64).step_by(2) {
        let p = params(&[k, k + 1, k - 1]);
        let (h, l) = (k.div_ceil(2), (k - 1) / 2);
        let got = (p.upsilon, p.u, p.mu, p.z, p.w, p.lambda, p.r, p.p, p.r_prime);
        if got != (h, h, 0, l, l, 2, 1, 1, 1) {
            bad.push(format!("({k},{},{}): {got:?}", k + 1, k - 1));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= PARAMS_BUDGET {
        bad.push(format!("runtime {elapsed:?}"));
    }
    Line {
        id: 1,
        name: "parameter regression",
        pass: bad.is_empty(),
        detail: if bad.is_empty() { format!("13 sequences exact, {elapsed:.2?}") } else { bad.join("; ") },
    }
}

struct Sweep {
    checks: Vec<CrossCheck>,
    errors: Vec<String>,
    elapsed: Duration,
}

fn run_sweep(convention: VariableOrder) -> Sweep {
    let start = Instant::now();
    let seqs = valid_sequences(SWEEP_MAX_M, SWEEP_MAX_N);
    let mut checks = Vec::new();
    let mut errors = Vec::new();
    for (seq, r) in cross_check_all(&seqs, convention) {
        match r {
            Ok(c) => checks.push(c),
            Err(e) => errors.push(format!("{seq}: {e}")),
        }
    }
    Sweep { checks, errors, elapsed: start.elapsed() }
}

fn first(seqs: &[&CrossCheck]) -> String {
    seqs.first().map_or(String::new(), |c| format!(", first {}", c.sequence))
}

fn criterion_2(asc: &Sweep) -> Line {
    let all: Vec<&CrossCheck> = asc.checks.iter().collect();
    let not_gb: Vec<_> = all.iter().copied().filter(|c| !c.report(Variant::G).is_gb).collect();
    let not_min: Vec<_> = all.iter().copied().filter(|c| !c.report(Variant::G).is_minimal).collect();
    let mismatch: Vec<_> = all
        .iter()
        .copied()
        .filter(|c| c.report(Variant::G).is_reduced != c.conditions.reduced_predicted)
        .collect();
    let no_match: Vec<_> = all.iter().copied().filter(|c| !c.engine_match).collect();
    let any_lambda = all
        .iter()
        .filter(|c| c.report(Variant::G).is_reduced != (!c.conditions.c1_any_lambda && !c.conditions.c2))
        .count();
    let lambda_above_one = mismatch.iter().filter(|c| c.params.lambda > 1).count();
    let pass = asc.errors.is_empty()
        && not_gb.is_empty()
        && not_min.is_empty()
        && mismatch.is_empty()
        && no_match.is_empty()
        && asc.elapsed <= SWEEP_BUDGET;
    Line {
        id: 2,
        name: "G is a minimal Gröbner basis, reduced iff neither C1 nor C2",
        pass,
        detail: format!(
            "{} instances in {:.1?}, errors {}; (a) not Gröbner {}{}; (b) not minimal {}{}; \
             (c) reducedness mismatches {}{} [all with lambda > 1: {}; mismatches if C1 drops lambda = 1: {}]; \
             (d) engine mismatches {}{}",
            all.len(),
            asc.elapsed,
            asc.errors.len(),
            not_gb.len(),
            first(&not_gb),
            not_min.len(),
            first(&not_min),
            mismatch.len(),
            first(&mismatch),
            lambda_above_one == mismatch.len(),
            any_lambda,
            no_match.len(),
            first(&no_match),
        ),
    }
}

fn criterion_3() -> Line {
    let mut bad = Vec::new();
    for k in (5..=25u64).step_by(2) {
        let seq = validate_input(&[k, k + 1, k - 1]).unwrap();
        let p = compute_params(&seq).unwrap();
        let order = MonomialOrder::ascending(&seq);
        let omega = build_generators(&seq, &p, Variant::Patil, &order).unwrap();
        let g = build_generators(&seq, &p, Variant::G, &order).unwrap();
        let out = is_groebner(&omega.binomials(), &order).unwrap();
        let witness_ok = out.witness.as_ref().is_some_and(|w| {
            // S(theta, psi(0)) = x1^k' - x0^2 x2^(k'-1) with k' = (k+1)/2
            let h = k.div_ceil(2) as u32;
            let expected = Binomial::parse(&format!("x1^{h} - x0^2*x2^{}", h - 1), &order);
            w.normal_form.is_some() && w.spoly == expected
        });
        let g_ok = is_groebner(&g.binomials(), &order).unwrap().is_groebner && is_reduced_basis(&g);
        if out.is_groebner || !witness_ok || !g_ok {
            bad.push(format!("{seq}"));
        }
    }
    Line {
        id: 3,
        name: "Patil counterexample family",
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "11 sequences: Patil fails with S-pair witness, G Gröbner and reduced".into()
        } else {
            format!("exceptions: {}", bad.join(", "))
        },
    }
}

fn criterion_4(asc: &Sweep) -> Line {
    let all = &asc.checks;
    let not_gb: Vec<&CrossCheck> = all.iter().filter(|c| !c.report(Variant::PatilSingh).is_gb).collect();
    let wrong: Vec<&CrossCheck> = all
        .iter()
        .filter(|c| c.report(Variant::PatilSingh).is_minimal == c.patil_singh_exceeds_g)
        .collect();
    let exceeds = all.iter().filter(|c| c.patil_singh_exceeds_g).count();
    let paren = all
        .iter()
        .filter(|c| c.params.q_z == Some(0) && c.params.epsilon == Some(0) && c.params.w_nonempty)
        .count();
    let paren_agree = all
        .iter()
        .filter(|c| {
            c.patil_singh_exceeds_g
                == (c.params.q_z == Some(0) && c.params.epsilon == Some(0) && c.params.w_nonempty)
        })
        .count();
    Line {
        id: 4,
        name: "Patil-Singh is Gröbner, non-minimal exactly when larger than G",
        pass: asc.errors.is_empty() && not_gb.is_empty() && wrong.is_empty(),
        detail: format!(
            "not Gröbner {}{}; minimality mismatches {}{}; larger than G on {} \
             [q_z = 0, epsilon = 0, W nonempty on {}; agrees with 'larger than G' on {}/{}]",
            not_gb.len(),
            first(&not_gb),
            wrong.len(),
            first(&wrong),
            exceeds,
            paren,
            paren_agree,
            all.len()
        ),
    }
}

fn criterion_5(desc: &Sweep) -> Line {
    let seq = validate_input(&[20, 21, 22, 23, 24, 29]).unwrap();
    let p = compute_params(&seq).unwrap();
    let order = MonomialOrder::descending(&seq);
    let ps = build_generators(&seq, &p, Variant::PatilSingh, &order).unwrap();
    let theta = ps.get(GeneratorTag::Theta).unwrap();
    let xi = ps.get(GeneratorTag::Xi(1, 3)).unwrap();
    let expected = Binomial::parse("x1*x5^3 - x0^3*x4^2", &order).unwrap();
    let s_ok = s_polynomial(theta, xi, &order).as_ref() == Some(&expected);
    let failing = failing_pairs(&ps.binomials(), &order).unwrap();
    let witnessed = failing.iter().any(|w| {
        let pair = [&w.f, &w.g];
        pair.contains(&theta) && pair.contains(&xi) && w.spoly.as_ref() == Some(&expected)
    });

    let hyp: Vec<&CrossCheck> = desc.checks.iter().filter(|c| c.failures.ps_not_gb_desc).collect();
    let survivors: Vec<&CrossCheck> =
        hyp.iter().copied().filter(|c| c.report(Variant::PatilSingh).is_gb).collect();
    Line {
        id: 5,
        name: "Patil-Singh fails under descending grevlex",
        pass: s_ok && witnessed && !failing.is_empty() && desc.errors.is_empty() && survivors.is_empty(),
        detail: format!(
            "(20..29): S(theta, xi(1,3)) = {} [{}], among {} failing pair(s): {}; \
             sweep: {} instances meet the hypotheses, {} still Gröbner{}",
            expected,
            if s_ok { "exact" } else { "MISMATCH" },
            failing.len(),
            witnessed,
            hyp.len(),
            survivors.len(),
            first(&survivors),
        ),
    }
}

fn criterion_6(asc: &Sweep, desc: &Sweep) -> Line {
    let seq = validate_input(&[5, 6, 4]).unwrap();
    let p = compute_params(&seq).unwrap();
    let order = MonomialOrder::ascending(&seq);
    let omega = build_generators(&seq, &p, Variant::Patil, &order).unwrap();
    let g = build_generators(&seq, &p, Variant::G, &order).unwrap();
    let mono = |e: &[u32]| Monomial::from_exponents(e.to_vec());
    let at18 = verify_standard_monomials(&omega, 18);
    let omega_ok = !at18.consistent && at18.witness == Some((mono(&[0, 3, 0]), mono(&[2, 0, 2])));
    let g_ok = verify_standard_monomials(&g, 60).consistent;

    let (mut unsound, mut unrefuted, mut sets, mut above_base) = (0, 0, 0, 0);
    let mut first_bad = None;
    for c in asc.checks.iter().chain(&desc.checks) {
        for r in &c.reports {
            sets += 1;
            let bad = if r.is_gb {
                let b = r.standard_monomial_ok != Some(true);
                unsound += b as usize;
                b
            } else {
                let b = r.standard_monomial_ok != Some(false);
                unrefuted += b as usize;
                b
            };
            if bad && first_bad.is_none() {
                first_bad = Some(format!("{} {} {}", c.sequence, c.convention, r.variant));
            }
        }
        above_base += c.refuted_above_base_bound;
    }
    Line {
        id: 6,
        name: "standard-monomial method",
        pass: omega_ok && g_ok && unsound == 0 && unrefuted == 0 && asc.errors.is_empty() && desc.errors.is_empty(),
        detail: format!(
            "(5,6,4): Patil collision at 18 {}, G consistent at 60 {}; sweep (both orders, {} sets): \
             Gröbner with collision {}, refuted but no collision {}{} \
             [{} refutations need more than max degree + 2*mn]",
            omega_ok,
            g_ok,
            sets,
            unsound,
            unrefuted,
            first_bad.map_or(String::new(), |s| format!(", first {s}")),
            above_base,
        ),
    }
}

fn random_sequence(rng: &mut ChaCha8Rng) -> Vec<u64> {
    loop {
        let n = rng.gen_range(2..=5usize);
        let m0 = rng.gen_range(3..=30u64);
        let d = rng.gen_range(1..=12u64);
        let mn = rng.gen_range(1..=150u64);
        let mut m: Vec<u64> = (0..n as u64).map(|i| m0 + i * d).collect();
        m.push(mn);
        if validate_input(&m).is_ok() {
            return m;
        }
    }
}

fn criterion_7() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(REPRESENTATION_SEED);
    let mut seen = BTreeSet::new();
    let mut bad = Vec::new();
    let mut members = 0usize;
    while seen.len() < REPRESENTATION_SEQUENCES {
        let m = random_sequence(&mut rng);
        if !seen.insert(m.clone()) {
            continue;
        }
        let seq = validate_input(&m).unwrap();
        let p = compute_params(&seq).unwrap();
        let apery = apery_set(&seq);
        let residues: BTreeSet<u64> = apery.iter().map(|a| a % seq.m0()).collect();
        if apery.len() as u64 != seq.m0() || residues.len() as u64 != seq.m0() {
            bad.push(format!("{seq}: Apéry set has {} residues", residues.len()));
        }
        let semigroup = Semigroup::new(seq.m());
        for gamma in 0..=REPRESENTATION_LIMIT {
            let member = is_member(gamma, seq.m());
            if member != semigroup.contains(gamma) {
                bad.push(format!("{seq}: membership of {gamma}"));
                break;
            }
            match (member, unique_representation(gamma, &p, &seq)) {
                (true, Ok(_)) => members += 1,
                (false, Err(monocurve::Error::NotAMember(_))) => {}
                (_, r) => {
                    bad.push(format!("{seq}: {gamma} -> {r:?}"));
                    break;
                }
            }
        }
    }
    Line {
        id: 7,
        name: "unique representation and Apéry cardinality",
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            format!(
                "{} sequences (seed {:#x}), {} members <= {} each with exactly one representation",
                seen.len(),
                REPRESENTATION_SEED,
                members,
                REPRESENTATION_LIMIT
            )
        } else {
            bad.join("; ")
        },
    }
}

fn main() -> ExitCode {
    let asc = run_sweep(VariableOrder::Ascending);
    let desc = run_sweep(VariableOrder::Descending);
    let lines = [
        criterion_1(),
        criterion_2(&asc),
        criterion_3(),
        criterion_4(&asc),
        criterion_5(&desc),
        criterion_6(&asc, &desc),
        criterion_7(),
    ];
    let mut failed = 0;
    for l in &lines {
        println!("[{}] criterion {}: {} -- {}", if l.pass { "PASS" } else { "FAIL" }, l.id, l.name, l.detail);
        failed += !l.pass as usize;
    }
    println!("acceptance: {} passed, {} failed", lines.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
