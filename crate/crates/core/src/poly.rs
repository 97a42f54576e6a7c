//! Exponent-vector monomials, monic binomials and weighted grevlex orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::ValidatedSequence;

/// A monomial `x0^a0 * ... * xn^an`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The constant monomial 1 in `nvars` variables.
    pub fn one(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Monomial {
        Monomial(exponents)
    }

    /// `x_index^exponent`.
    pub fn var(nvars: usize, index: usize, exponent: u32) -> Monomial {
        let mut e = vec![0; nvars];
        e[index] = exponent;
        Monomial(e)
    }

    /// Builds a monomial from `(index, exponent)` factors; repeated indices
    /// accumulate.
    pub fn from_factors(nvars: usize, factors: &[(usize, u32)]) -> Monomial {
        let mut e = vec![0u32; nvars];
        for &(i, k) in factors {
            e[i] = e[i].checked_add(k).expect("exponent overflow");
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Product of two monomials.
    ///
    /// # Panics
    /// On exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Parses the text form produced by `Display`, e.g. `x0^2*x2`.
    pub fn parse(text: &str, nvars: usize) -> Option<Monomial> {
        let text = text.trim();
        let mut e = vec![0u32; nvars];
        if text == "1" {
            return Some(Monomial(e));
        }
        for factor in text.split('*') {
            let rest = factor.trim().strip_prefix('x')?;
            let (index, exponent) = match rest.split_once('^') {
                Some((i, k)) => (i.parse::<usize>().ok()?, k.parse::<u32>().ok()?),
                None => (rest.parse::<usize>().ok()?, 1),
            };
            if index >= nvars {
                return None;
            }
            e[index] = e[index].checked_add(exponent)?;
        }
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `Σ a_i·m_i`, the exponent of `t` in the image of the monomial.
pub fn weighted_degree(mon: &Monomial, weights: &[u64]) -> Result<u64> {
    if mon.nvars() != weights.len() {
        return Err(Error::InternalInconsistency(format!(
            "monomial has {} variables but {} weights were given",
            mon.nvars(),
            weights.len()
        )));
    }
    mon.0.iter().zip(weights).try_fold(0u64, |acc, (&a, &m)| {
        (a as u64)
            .checked_mul(m)
            .and_then(|x| acc.checked_add(x))
            .ok_or(Error::Overflow("weighted degree"))
    })
}

/// Variable convention of the grevlex tie-break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VariableOrder {
    /// `x0 < x1 < ... < xn`
    Ascending,
    /// `x0 > x1 > ... > xn`
    Descending,
}

impl VariableOrder {
    pub fn name(&self) -> &'static str {
        match self {
            VariableOrder::Ascending => "asc",
            VariableOrder::Descending => "desc",
        }
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grevlex with respect to the grading `wt(x_i) = m_i`.
///
/// Weighted degree is compared first. Ties are broken at the smallest
/// variable under the convention: the first differing index scanning from
/// `x0` upward (ascending) or from `xn` downward (descending); the monomial
/// with the smaller exponent there is the larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Arc<[u64]>,
    convention: VariableOrder,
}

impl MonomialOrder {
    pub fn new(weights: &[u64], convention: VariableOrder) -> MonomialOrder {
        MonomialOrder { weights: weights.into(), convention }
    }

    pub fn ascending(seq: &ValidatedSequence) -> MonomialOrder {
        MonomialOrder::new(seq.m(), VariableOrder::Ascending)
    }

    pub fn descending(seq: &ValidatedSequence) -> MonomialOrder {
        MonomialOrder::new(seq.m(), VariableOrder::Descending)
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn convention(&self) -> VariableOrder {
        self.convention
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    // Wide accumulator so the comparison itself cannot overflow.
    fn degree_wide(&self, m: &Monomial) -> u128 {
        m.0.iter().zip(self.weights.iter()).map(|(&a, &w)| a as u128 * w as u128).sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        let by_degree = self.degree_wide(a).cmp(&self.degree_wide(b));
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let pairs = a.0.iter().zip(&b.0);
        let differing = match self.convention {
            VariableOrder::Ascending => pairs.clone().find(|(x, y)| x != y),
            VariableOrder::Descending => pairs.rev().find(|(x, y)| x != y),
        };
        match differing {
            Some((x, y)) => y.cmp(x),
            None => Ordering::Equal,
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// A monic binomial `lead - trail` with `lead > trail` under the order it
/// was built with. The zero binomial is represented as `None` by the
/// functions that can produce it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    /// Both monomials, lead first.
    pub fn monomials(&self) -> [&Monomial; 2] {
        [&self.lead, &self.trail]
    }

    /// Parses `"lead - trail"` and re-normalizes under `order`.
    pub fn parse(text: &str, order: &MonomialOrder) -> Option<Binomial> {
        let (a, b) = text.split_once(" - ")?;
        let a = Monomial::parse(a, order.nvars())?;
        let b = Monomial::parse(b, order.nvars())?;
        make_binomial(a, b, order)
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// `±(a - b)` normalized so the larger monomial leads; `None` when `a = b`.
pub fn make_binomial(a: Monomial, b: Monomial, order: &MonomialOrder) -> Option<Binomial> {
    match order.compare(&a, &b) {
        Ordering::Equal => None,
        Ordering::Greater => Some(Binomial { lead: a, trail: b }),
        Ordering::Less => Some(Binomial { lead: b, trail: a }),
    }
}

/// Whether both monomials have the same weighted degree, i.e. whether the
/// binomial lies in the toric ideal of `weights`.
pub fn is_homogeneous(f: &Binomial, weights: &[u64]) -> bool {
    match (weighted_degree(&f.lead, weights), weighted_degree(&f.trail, weights)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}
