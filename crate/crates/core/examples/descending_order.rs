//! The Patil–Singh set depends on the variable convention: it is a
//! Gröbner basis for `x0 < ... < xn` but not for `x0 > ... > xn`.

use monocurve::closedform::build_generators;
use monocurve::groebner::failing_pairs;
use monocurve::semigroup::{compute_params, validate_input};
use monocurve::{MonomialOrder, Variant};

fn main() -> monocurve::Result<()> {
    let seq = validate_input(&[20, 21, 22, 23, 24, 29])?;
    let params = compute_params(&seq)?;

    for order in [MonomialOrder::ascending(&seq), MonomialOrder::descending(&seq)] {
        let ps = build_generators(&seq, &params, Variant::PatilSingh, &order)?;
        let failing = failing_pairs(&ps.binomials(), &order)?;
        println!("{} grevlex: {} failing S-pairs", order.convention(), failing.len());
        for w in failing.iter().take(5) {
            let nf = w.normal_form.as_ref().expect("nonzero");
            println!("  S({}, {}) -> {}", w.f, w.g, nf);
        }
    }

    let doc = monocurve::cli::ps_desc_counterexample()?;
    for c in &doc.claims {
        println!("[{}] {}", if c.holds { "ok" } else { "FAIL" }, c.claim);
    }
    Ok(())
}
