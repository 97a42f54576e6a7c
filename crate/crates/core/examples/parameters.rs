//! Semigroup parameters, Apéry set and unique representations.
//!
//! cargo run --example parameters -- 20 21 22 23 24 29

use monocurve::semigroup::{apery_set, compute_params, unique_representation, validate_input};

fn main() -> monocurve::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let m = if args.is_empty() { vec![5, 6, 7, 8, 9] } else { args };

    let seq = validate_input(&m)?;
    let p = compute_params(&seq)?;
    println!("sequence {seq}  (n = {}, p = {})", seq.n(), seq.p());
    println!("u = {}  v = {}  w = {}  z = {}", p.u, p.upsilon, p.w, p.z);
    println!("lambda = {}  mu = {}  nu = {}", p.lambda, p.mu, p.nu);
    println!("q = {}  r = {}  q' = {}  r' = {}", p.q, p.r, p.q_prime, p.r_prime);
    println!("I = {}  J = {}", p.interval_i, p.interval_j);

    let g_u = seq.g(p.u)?;
    println!("g_u = {g_u} = {}*{} + {}*{}", p.lambda, seq.m0(), p.w, seq.mn());
    println!("v*mn = {} = {}*{} + g_z", p.upsilon * seq.mn(), p.mu, seq.m0());

    let apery = apery_set(&seq);
    println!("Apéry set modulo {}: {apery:?}", seq.m0());

    for gamma in apery.iter().copied().filter(|&g| g > 0).take(4) {
        let (a, s, b) = unique_representation(gamma, &p, &seq)?;
        println!("  {gamma} = {a}*m0 + g_{s} + {b}*mn");
    }
    Ok(())
}
