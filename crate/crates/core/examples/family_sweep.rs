//! Cross-checks every valid sequence in a range under both conventions.
//!
//! cargo run --release --example family_sweep -- 30 4

use monocurve::verify::sweep;
use monocurve::VariableOrder;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer"));
    let max_m = args.next().unwrap_or(24);
    let max_n = args.next().unwrap_or(4) as usize;

    for order in [VariableOrder::Ascending, VariableOrder::Descending] {
        let s = sweep(max_m, max_n, order);
        println!("{order}: {} instances", s.instances);
        println!("  G reduced {}", s.g_reduced);
        println!("  Patil not Gröbner {}", s.patil_not_gb);
        println!("  Patil-Singh not Gröbner {}, not minimal {}", s.patil_singh_not_gb, s.patil_singh_not_minimal);
        println!("  reducedness vs C1/C2 mismatches {} ({} with C1 taken for any lambda)", s.reduced_mismatches, s.reduced_mismatches_any_lambda);
        let mut claims: Vec<&str> = s.violations.iter().map(|v| v.claim.as_str()).collect();
        claims.sort_unstable();
        claims.dedup();
        for c in claims {
            let hits: Vec<_> = s.violations.iter().filter(|v| v.claim == c).collect();
            println!("  violated: {c} ({}x, first {:?})", hits.len(), hits[0].sequence);
        }
    }
}
