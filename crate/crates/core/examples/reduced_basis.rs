//! Completes Patil's generators of `(7, 10, 4)` with the binomial
//! Buchberger engine, interreduces, and compares with the closed form `G`.

use monocurve::closedform::build_generators;
use monocurve::groebner::{buchberger, interreduce, is_reduced};
use monocurve::semigroup::{compute_params, validate_input};
use monocurve::{Binomial, MonomialOrder, Variant};

fn main() -> monocurve::Result<()> {
    let seq = validate_input(&[7, 10, 4])?;
    let params = compute_params(&seq)?;
    let order = MonomialOrder::ascending(&seq);
    let patil = build_generators(&seq, &params, Variant::Patil, &order)?;

    let done = buchberger(&patil.binomials(), &order)?;
    println!("{} input, {} added", patil.len(), done.added.len());
    for f in &done.added {
        println!("  + {f}");
    }
    let reduced = interreduce(&done.basis, &order);
    println!("reduced basis (reduced = {}):", is_reduced(&reduced));
    for f in &reduced {
        println!("  {f}");
    }

    let g = build_generators(&seq, &params, Variant::G, &order)?;
    let closed: Vec<Binomial> = interreduce(&g.binomials(), &order);
    println!("equals closed-form G: {}", closed == reduced);

    // A hand-written set is parsed with the lead chosen by the order.
    let f = Binomial::parse("x0^2 - x1*x2", &order).expect("homogeneous");
    println!("parsed {f}, lead {}", f.lead());
    Ok(())
}
