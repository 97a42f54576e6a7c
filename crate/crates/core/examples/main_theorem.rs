//! Builds `G` under ascending grevlex and checks it three ways: the
//! Buchberger criterion, a from-scratch completion of the Patil–Singh set,
//! and the bounded standard-monomial test.

use monocurve::closedform::{build_generators, check_conditions, is_minimal_basis, is_reduced_basis};
use monocurve::semigroup::{compute_params, validate_input};
use monocurve::verify::{default_degree_bound, engine_match, verify_buchberger, verify_standard_monomials};
use monocurve::{MonomialOrder, Variant};

fn main() -> monocurve::Result<()> {
    for m in [&[5, 6, 7, 8, 9][..], &[5, 6, 4], &[7, 8, 9, 6], &[20, 21, 22, 23, 24, 29]] {
        let seq = validate_input(m)?;
        let params = compute_params(&seq)?;
        let order = MonomialOrder::ascending(&seq);
        let g = build_generators(&seq, &params, Variant::G, &order)?;
        let ps = build_generators(&seq, &params, Variant::PatilSingh, &order)?;

        println!("{seq}: {} elements", g.len());
        for (tag, b) in &g.elements {
            println!("  {tag:<8} {b}");
        }
        let bound = default_degree_bound(&g);
        let cond = check_conditions(&params);
        println!("  Gröbner:            {}", verify_buchberger(&g)?.is_groebner);
        println!("  matches completion: {}", engine_match(&g, &ps)?);
        println!("  η-injective to {bound}: {}", verify_standard_monomials(&g, bound).consistent);
        println!("  minimal:            {}", is_minimal_basis(&g));
        println!(
            "  reduced:            {}  (C1 {}, C2 {}, C1 without lambda = 1 {})",
            is_reduced_basis(&g),
            cond.c1,
            cond.c2,
            cond.c1_any_lambda
        );
    }
    Ok(())
}
