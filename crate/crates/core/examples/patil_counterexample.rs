//! Patil's minimal generators of `(k, k+1, k-1)` are not a Gröbner basis
//! for odd `k >= 5`, while `G` is a reduced one.

use monocurve::cli::patil_counterexample;

fn main() -> monocurve::Result<()> {
    for k in (5..=25).step_by(2) {
        let doc = patil_counterexample(k)?;
        let w = doc.witness.as_ref().expect("failing S-pair");
        let nf = w.normal_form.as_ref().expect("nonzero normal form");
        println!(
            "{:?}: S({}, {}) -> {}  [{}]",
            doc.sequence,
            w.f,
            w.g,
            nf,
            if doc.reproduced() { "ok" } else { "FAIL" }
        );
    }
    Ok(())
}
