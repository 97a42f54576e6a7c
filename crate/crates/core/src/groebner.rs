//! A Gröbner engine specialised to monic binomials.
//!
//! S-polynomials and reduction steps of monic binomials are again monic
//! binomials (up to sign) or zero, so no coefficient arithmetic is needed:
//! every operation is a rewrite of exponent vectors.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::poly::{is_homogeneous, make_binomial, Binomial, Monomial, MonomialOrder};

/// An S-pair together with its S-polynomial and that polynomial's normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPairWitness {
    pub f: Binomial,
    pub g: Binomial,
    pub spoly: Option<Binomial>,
    pub normal_form: Option<Binomial>,
}

#[derive(Debug, Clone)]
pub struct GroebnerResult {
    /// Input generators followed by everything Buchberger added.
    pub basis: Vec<Binomial>,
    pub added: Vec<Binomial>,
    pub is_input_gb: bool,
}

/// Outcome of the Buchberger criterion on a fixed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub is_groebner: bool,
    /// First S-pair (in queue order) whose normal form is nonzero.
    pub witness: Option<SPairWitness>,
}

pub fn s_polynomial(f: &Binomial, g: &Binomial, order: &MonomialOrder) -> Option<Binomial> {
    let l = f.lead().lcm(g.lead());
    let a = l.div(f.lead()).expect("lcm is a multiple").mul(f.trail());
    let b = l.div(g.lead()).expect("lcm is a multiple").mul(g.trail());
    make_binomial(a, b, order)
}

/// Rewrites a single monomial until no lead of `basis` divides it.
/// Returns the irreducible monomial and the number of rewrite steps.
fn reduce_monomial(mut m: Monomial, basis: &[Binomial]) -> (Monomial, usize) {
    let mut steps = 0;
    while let Some(h) = basis.iter().find(|h| h.lead().divides(&m)) {
        m = m.div(h.lead()).expect("lead divides").mul(h.trail());
        steps += 1;
    }
    (m, steps)
}

/// Normal form with full tail reduction, also reporting the number of
/// rewrite steps taken.
pub fn normal_form_counted(
    f: Option<Binomial>,
    basis: &[Binomial],
    order: &MonomialOrder,
) -> (Option<Binomial>, usize) {
    let Some(mut cur) = f else { return (None, 0) };
    let mut steps = 0;
    loop {
        match basis.iter().find(|h| h.lead().divides(cur.lead())) {
            Some(h) => {
                let rewritten = cur.lead().div(h.lead()).expect("lead divides").mul(h.trail());
                steps += 1;
                match make_binomial(rewritten, cur.trail().clone(), order) {
                    Some(next) => cur = next,
                    None => return (None, steps),
                }
            }
            None => {
                let (tail, tail_steps) = reduce_monomial(cur.trail().clone(), basis);
                steps += tail_steps;
                // The tail only ever decreases, so it stays below the lead.
                debug_assert_eq!(order.compare(cur.lead(), &tail), Ordering::Greater);
                return (make_binomial(cur.lead().clone(), tail, order), steps);
            }
        }
    }
}

/// Fully reduced remainder of `f` modulo `basis`. Among several applicable
/// reducers the one with the lowest index is used.
pub fn normal_form(f: Option<Binomial>, basis: &[Binomial], order: &MonomialOrder) -> Option<Binomial> {
    normal_form_counted(f, basis, order).0
}

fn check_homogeneous(set: &[Binomial], order: &MonomialOrder) -> Result<()> {
    for f in set {
        if f.nvars() != order.nvars() || !is_homogeneous(f, order.weights()) {
            return Err(Error::NonHomogeneousInput(f.to_string()));
        }
    }
    Ok(())
}

fn initial_pairs(len: usize) -> VecDeque<(usize, usize)> {
    (0..len).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Classical Buchberger completion with a FIFO pair queue, skipping pairs
/// with coprime leads.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> Result<GroebnerResult> {
    check_homogeneous(gens, order)?;
    let mut basis = gens.to_vec();
    let mut pairs = initial_pairs(basis.len());
    while let Some((i, j)) = pairs.pop_front() {
        if basis[i].lead().is_coprime(basis[j].lead()) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        if let Some(h) = normal_form(s, &basis, order) {
            debug_assert!(is_homogeneous(&h, order.weights()));
            let k = basis.len();
            basis.push(h);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let added = basis[gens.len()..].to_vec();
    Ok(GroebnerResult { is_input_gb: added.is_empty(), basis, added })
}

fn criterion_pairs<'a>(
    set: &'a [Binomial],
    order: &'a MonomialOrder,
) -> impl Iterator<Item = SPairWitness> + 'a {
    initial_pairs(set.len()).into_iter().filter_map(move |(i, j)| {
        let (f, g) = (&set[i], &set[j]);
        if f.lead().is_coprime(g.lead()) {
            return None;
        }
        let spoly = s_polynomial(f, g, order);
        let nf = normal_form(spoly.clone(), set, order);
        nf.is_some().then(|| SPairWitness { f: f.clone(), g: g.clone(), spoly, normal_form: nf })
    })
}

/// Buchberger criterion: every S-pair reduces to zero modulo `set`.
pub fn is_groebner(set: &[Binomial], order: &MonomialOrder) -> Result<CriterionOutcome> {
    check_homogeneous(set, order)?;
    let witness = criterion_pairs(set, order).next();
    Ok(CriterionOutcome { is_groebner: witness.is_none(), witness })
}

/// Every S-pair of `set` with a nonzero normal form, in queue order.
pub fn failing_pairs(set: &[Binomial], order: &MonomialOrder) -> Result<Vec<SPairWitness>> {
    check_homogeneous(set, order)?;
    Ok(criterion_pairs(set, order).collect())
}

/// Turns a Gröbner basis into the reduced one, sorted by decreasing lead.
pub fn interreduce(basis: &[Binomial], order: &MonomialOrder) -> Vec<Binomial> {
    let survivors: Vec<Binomial> = basis
        .iter()
        .enumerate()
        .filter(|&(i, f)| {
            !basis.iter().enumerate().any(|(j, h)| {
                j != i && h.lead().divides(f.lead()) && (h.lead() != f.lead() || j < i)
            })
        })
        .map(|(_, f)| f.clone())
        .collect();
    let mut reduced: Vec<Binomial> = survivors
        .iter()
        .filter_map(|f| {
            let (tail, _) = reduce_monomial(f.trail().clone(), &survivors);
            make_binomial(f.lead().clone(), tail, order)
        })
        .collect();
    reduced.sort_by(|a, b| {
        order
            .compare(b.lead(), a.lead())
            .then_with(|| order.compare(b.trail(), a.trail()))
    });
    reduced.dedup();
    reduced
}

/// No lead is divisible by the lead of another element.
pub fn is_minimal(set: &[Binomial]) -> bool {
    set.iter().enumerate().all(|(i, f)| {
        set.iter()
            .enumerate()
            .all(|(j, h)| j == i || !h.lead().divides(f.lead()))
    })
}

/// No monomial of any element is divisible by the lead of another element.
pub fn is_reduced(set: &[Binomial]) -> bool {
    set.iter().enumerate().all(|(i, f)| {
        set.iter().enumerate().all(|(j, h)| {
            j == i || f.monomials().iter().all(|m| !h.lead().divides(m))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableOrder;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn bin(a: &[u32], b: &[u32], order: &MonomialOrder) -> Binomial {
        make_binomial(mono(a), mono(b), order).unwrap()
    }

    // Patil generators for (5,6,4): psi0 = x1x2 - x0^2, theta = x2^3 - x1^2.
    fn omega() -> (MonomialOrder, Vec<Binomial>) {
        let order = MonomialOrder::new(&[5, 6, 4], VariableOrder::Ascending);
        let psi0 = bin(&[0, 1, 1], &[2, 0, 0], &order);
        let theta = bin(&[0, 0, 3], &[0, 2, 0], &order);
        (order, vec![psi0, theta])
    }

    #[test]
    fn s_polynomial_of_patil_pair() {
        let (order, set) = omega();
        let s = s_polynomial(&set[0], &set[1], &order).unwrap();
        assert_eq!(s, bin(&[0, 3, 0], &[2, 0, 2], &order));
        assert!(s_polynomial(&set[0], &set[0], &order).is_none());
    }

    #[test]
    fn normal_forms() {
        let (order, set) = omega();
        let f = bin(&[0, 3, 0], &[2, 0, 2], &order);
        assert_eq!(normal_form(Some(f.clone()), &set, &order), Some(f.clone()));
        assert_eq!(normal_form(Some(set[1].clone()), &set, &order), None);
        assert_eq!(normal_form(None, &set, &order), None);
    }

    #[test]
    fn completion_of_patil_set() {
        let (order, set) = omega();
        let res = buchberger(&set, &order).unwrap();
        assert!(!res.is_input_gb);
        assert_eq!(res.added, vec![bin(&[0, 3, 0], &[2, 0, 2], &order)]);
        assert!(is_groebner(&res.basis, &order).unwrap().is_groebner);

        let single = buchberger(&set[..1], &order).unwrap();
        assert!(single.is_input_gb);
    }

    #[test]
    fn criterion_witness() {
        let (order, set) = omega();
        let out = is_groebner(&set, &order).unwrap();
        assert!(!out.is_groebner);
        let w = out.witness.unwrap();
        assert_eq!(w.normal_form, Some(bin(&[0, 3, 0], &[2, 0, 2], &order)));
        assert_eq!(failing_pairs(&set, &order).unwrap().len(), 1);
    }

    #[test]
    fn non_homogeneous_input_is_rejected() {
        let order = MonomialOrder::new(&[5, 6, 4], VariableOrder::Ascending);
        let f = bin(&[0, 1, 0], &[1, 0, 0], &order);
        assert!(matches!(buchberger(std::slice::from_ref(&f), &order), Err(Error::NonHomogeneousInput(_))));
        assert!(matches!(is_groebner(&[f], &order), Err(Error::NonHomogeneousInput(_))));
    }

    #[test]
    fn minimal_and_reduced_predicates() {
        let (order, set) = omega();
        assert!(is_minimal(&set));
        assert!(is_reduced(&set));
        assert!(is_minimal(&set[..1]));
        // x1x2 - x0^2 together with x1^2x2 - x0^2x1 is not minimal
        let extra = bin(&[0, 2, 1], &[2, 1, 0], &order);
        assert!(!is_minimal(&[set[0].clone(), extra]));
    }

    #[test]
    fn interreduce_removes_redundant_and_is_idempotent() {
        let (order, set) = omega();
        let gb = buchberger(&set, &order).unwrap().basis;
        let mut padded = gb.clone();
        padded.push(bin(&[0, 2, 1], &[2, 1, 0], &order));
        let r = interreduce(&padded, &order);
        assert_eq!(r, interreduce(&gb, &order));
        assert_eq!(interreduce(&r, &order), r);
        assert!(is_reduced(&r));
        assert_eq!(r.len(), 3);
    }
}
