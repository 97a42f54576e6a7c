//! The standard-monomial test: two monomials outside the initial ideal
//! with the same weighted degree prove that a set is not a Gröbner basis.

use monocurve::closedform::build_generators;
use monocurve::poly::weighted_degree;
use monocurve::semigroup::{compute_params, validate_input};
use monocurve::verify::{standard_monomials, verify_standard_monomials};
use monocurve::{MonomialOrder, Variant};

fn main() -> monocurve::Result<()> {
    let seq = validate_input(&[5, 6, 4])?;
    let params = compute_params(&seq)?;
    let order = MonomialOrder::ascending(&seq);

    for variant in [Variant::Patil, Variant::G] {
        let set = build_generators(&seq, &params, variant, &order)?;
        let leads: Vec<_> = set.binomials().iter().map(|b| b.lead().clone()).collect();
        let standard = standard_monomials(&leads, seq.m(), 18);
        print!("{variant}: standard monomials up to degree 18:");
        for m in &standard {
            print!(" {m}({})", weighted_degree(m, seq.m())?);
        }
        println!();
        for bound in [17, 18, 60] {
            let out = verify_standard_monomials(&set, bound);
            match out.witness {
                Some((a, b)) => println!("  bound {bound}: collision {a} , {b}"),
                None => println!("  bound {bound}: consistent"),
            }
        }
    }
    Ok(())
}
