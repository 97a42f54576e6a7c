//! Numerical-semigroup arithmetic for almost arithmetic sequences.
//!
//! Throughout, `Γ` is the semigroup generated by all of `m0..mn`, `Γ'` the
//! one generated by the arithmetic part `m0..mp`, and `g_t` the element
//! `q_t·mp + m_{r_t}` where `t = q_t·p + r_t` with `r_t` in `[1, p]`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the linear scans for `u` and `v`.
const SCAN_CAP: u64 = 1_000_000;

/// An input sequence `m0, ..., mn` that passed validation: `m0..mp` is a
/// strictly increasing arithmetic progression (`p = n - 1`), the gcd is 1 and
/// no generator is redundant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct ValidatedSequence {
    m: Vec<u64>,
}

impl TryFrom<Vec<u64>> for ValidatedSequence {
    type Error = Error;

    fn try_from(m: Vec<u64>) -> Result<Self> {
        validate_input(&m)
    }
}

impl From<ValidatedSequence> for Vec<u64> {
    fn from(seq: ValidatedSequence) -> Self {
        seq.m
    }
}

impl ValidatedSequence {
    pub fn m(&self) -> &[u64] {
        &self.m
    }

    /// Index of the last generator.
    pub fn n(&self) -> usize {
        self.m.len() - 1
    }

    /// Index of the last member of the arithmetic part.
    pub fn p(&self) -> usize {
        self.m.len() - 2
    }

    pub fn m0(&self) -> u64 {
        self.m[0]
    }

    pub fn mp(&self) -> u64 {
        self.m[self.p()]
    }

    pub fn mn(&self) -> u64 {
        self.m[self.n()]
    }

    /// Common difference of the arithmetic part.
    pub fn step(&self) -> u64 {
        self.m[1] - self.m[0]
    }

    /// The arithmetic part `m0..mp`.
    pub fn arithmetic_part(&self) -> &[u64] {
        &self.m[..=self.p()]
    }

    /// Shorthand for `decompose_index(t, self).g`.
    pub fn g(&self, t: u64) -> Result<u64> {
        Ok(decompose_index(t, self)?.g)
    }
}

impl std::fmt::Display for ValidatedSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Validates `m0, ..., mn` as an almost arithmetic sequence with `mn` last.
pub fn validate_input(m: &[u64]) -> Result<ValidatedSequence> {
    if m.len() < 3 {
        return Err(Error::TooShort(m.len()));
    }
    if m.contains(&0) {
        return Err(Error::NonPositive);
    }
    let p = m.len() - 2;
    let arithmetic = &m[..=p];
    if arithmetic[1] <= arithmetic[0] {
        return Err(Error::NotArithmetic { p });
    }
    let d = arithmetic[1] - arithmetic[0];
    if arithmetic.windows(2).any(|w| w[1] <= w[0] || w[1] - w[0] != d) {
        return Err(Error::NotArithmetic { p });
    }
    let g = m.iter().fold(0, |acc, &x| gcd(acc, x));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    for (index, &value) in m.iter().enumerate() {
        let others: Vec<u64> = m
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, &x)| x)
            .collect();
        if is_member(value, &others) {
            return Err(Error::NotMinimallyGenerated { index, value });
        }
    }
    Ok(ValidatedSequence { m: m.to_vec() })
}

/// Exact membership test by a boolean table over `0..=gamma`.
pub fn is_member(gamma: u64, gens: &[u64]) -> bool {
    let target = gamma as usize;
    let mut reachable = vec![false; target + 1];
    reachable[0] = true;
    for x in 1..=target {
        reachable[x] = gens
            .iter()
            .any(|&g| g > 0 && (g as usize) <= x && reachable[x - g as usize]);
    }
    reachable[target]
}

/// A numerical semigroup stored through its Apéry table with respect to the
/// first generator: `apery[k]` is the least element congruent to `k`.
#[derive(Debug, Clone)]
pub struct Semigroup {
    modulus: u64,
    apery: Vec<u64>,
}

impl Semigroup {
    /// Builds the table by a shortest-path sweep over residues.
    pub fn new(gens: &[u64]) -> Semigroup {
        assert!(!gens.is_empty() && gens[0] > 0, "first generator must be positive");
        let modulus = gens[0];
        let mut apery = vec![u64::MAX; modulus as usize];
        apery[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0u64)));
        while let Some(Reverse((dist, res))) = heap.pop() {
            if dist > apery[res as usize] {
                continue;
            }
            for &g in gens {
                let next = (res + g % modulus) % modulus;
                let Some(cand) = dist.checked_add(g) else { continue };
                if cand < apery[next as usize] {
                    apery[next as usize] = cand;
                    heap.push(Reverse((cand, next)));
                }
            }
        }
        Semigroup { modulus, apery }
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.apery[(x % self.modulus) as usize]
    }

    /// Least element in each residue class modulo the first generator;
    /// `u64::MAX` marks an unreachable class.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }
}

/// `t = q·p + r` with `r` in `[1, p]`, and `g = q·mp + m_r`.
///
/// `t = 0` follows the empty-sum convention `q = -1`, `r = p`, `g = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexDecomposition {
    pub q: i64,
    pub r: usize,
    pub g: u64,
}

pub fn decompose_index(t: u64, seq: &ValidatedSequence) -> Result<IndexDecomposition> {
    let p = seq.p() as u64;
    if t == 0 {
        return Ok(IndexDecomposition { q: -1, r: seq.p(), g: 0 });
    }
    let q = (t - 1) / p;
    let r = ((t - 1) % p + 1) as usize;
    let g = q
        .checked_mul(seq.mp())
        .and_then(|x| x.checked_add(seq.m()[r]))
        .ok_or(Error::Overflow("g_t"))?;
    Ok(IndexDecomposition { q: q as i64, r, g })
}

/// Closed integer interval; `lo > hi` encodes the empty interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub const EMPTY: Interval = Interval { lo: 0, hi: -1 };

    pub fn new(lo: i64, hi: i64) -> Interval {
        Interval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let lo = self.lo.max(0);
        (lo..=self.hi).map(|x| x as usize)
    }

    /// `[lo, hi]` or `None` when empty.
    pub fn bounds(&self) -> Option<[i64; 2]> {
        (!self.is_empty()).then_some([self.lo, self.hi])
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            write!(f, "empty")
        } else {
            write!(f, "[{},{}]", self.lo, self.hi)
        }
    }
}

/// The parameters attached to a valid sequence.
///
/// * `g_u = lambda·m0 + w·mn`
/// * `v·mn = mu·m0 + g_z`
/// * `g_{u-z} + (v - w)·mn = nu·m0`
///
/// with `u = q·p + r`, `u - z = q'·p + r'` and, when `z >= 1`,
/// `z = q_z·p + r_z`. `epsilon` is 0 if `r > r_z` and 1 otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupParams {
    pub p: usize,
    pub u: u64,
    pub upsilon: u64,
    pub w: u64,
    pub z: u64,
    pub lambda: u64,
    pub mu: u64,
    pub nu: u64,
    pub q: u64,
    pub r: usize,
    pub q_prime: u64,
    pub r_prime: usize,
    pub q_z: Option<u64>,
    pub r_z: Option<usize>,
    pub epsilon: Option<u64>,
    /// `W = [u-z, u-1] × [v-w, v-1]` is nonempty.
    pub w_nonempty: bool,
    pub interval_i: Interval,
    pub interval_j: Interval,
}

impl SemigroupParams {
    /// Membership of `(s, b)` in `V = [0, u-1] × [0, v-1]`.
    pub fn in_v(&self, s: u64, b: u64) -> bool {
        s < self.u && b < self.upsilon
    }

    /// Membership of `(s, b)` in `W = [u-z, u-1] × [v-w, v-1]`.
    pub fn in_w(&self, s: u64, b: u64) -> bool {
        s >= self.u - self.z && s < self.u && b >= self.upsilon - self.w && b < self.upsilon
    }
}

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::InternalInconsistency(msg.into())
}

/// Extracts every parameter and re-checks the three defining identities.
pub fn compute_params(seq: &ValidatedSequence) -> Result<SemigroupParams> {
    let p = seq.p();
    let m0 = seq.m0();
    let mn = seq.mn();
    let gamma = Semigroup::new(seq.m());
    let gamma_prime = Semigroup::new(seq.arithmetic_part());

    // u: least t with g_t - m0 in Γ (g_0 = 0 always lies in S).
    let mut u = None;
    for t in 1..=SCAN_CAP {
        let g = seq.g(t)?;
        if gamma.contains(g - m0) {
            u = Some(t);
            break;
        }
    }
    let u = u.ok_or_else(|| inconsistent("scan for u exceeded its cap"))?;

    let mut upsilon = None;
    for b in 1..=SCAN_CAP {
        let x = b.checked_mul(mn).ok_or(Error::Overflow("b·mn"))?;
        if gamma_prime.contains(x) {
            upsilon = Some(b);
            break;
        }
    }
    let upsilon = upsilon.ok_or_else(|| inconsistent("scan for v exceeded its cap"))?;

    let du = decompose_index(u, seq)?;
    let (q, r) = (du.q as u64, du.r);

    // (i) g_u = lambda·m0 + w·mn
    let mut hits = Vec::new();
    for w in 0..upsilon {
        let Some(rest) = w.checked_mul(mn).and_then(|x| du.g.checked_sub(x)) else { continue };
        if rest >= m0 && rest % m0 == 0 {
            hits.push((w, rest / m0));
        }
    }
    let [(w, lambda)] = hits[..] else {
        return Err(inconsistent(format!("g_u = lambda·m0 + w·mn has {} solutions", hits.len())));
    };

    // (ii) v·mn = mu·m0 + g_z
    let vmn = upsilon.checked_mul(mn).ok_or(Error::Overflow("v·mn"))?;
    let mut hits = Vec::new();
    for z in 0..u {
        let Some(rest) = vmn.checked_sub(seq.g(z)?) else { continue };
        if rest % m0 == 0 {
            hits.push((z, rest / m0));
        }
    }
    let [(z, mu)] = hits[..] else {
        return Err(inconsistent(format!("v·mn = mu·m0 + g_z has {} solutions", hits.len())));
    };

    // (iii) g_{u-z} + (v-w)·mn = nu·m0
    let duz = decompose_index(u - z, seq)?;
    let (q_prime, r_prime) = (duz.q as u64, duz.r);
    let lhs = (upsilon - w)
        .checked_mul(mn)
        .and_then(|x| x.checked_add(duz.g))
        .ok_or(Error::Overflow("g_(u-z) + (v-w)·mn"))?;
    if lhs % m0 != 0 {
        return Err(inconsistent("g_(u-z) + (v-w)·mn is not a multiple of m0"));
    }
    let nu = lhs / m0;
    let expected_nu = if r_prime < r { lambda + mu + 1 } else { lambda + mu };
    if nu != expected_nu || nu < 2 {
        return Err(inconsistent(format!("nu = {nu}, expected {expected_nu}")));
    }
    if u <= p as u64 || q == 0 {
        return Err(inconsistent(format!("u = {u} must exceed p = {p}")));
    }

    let (q_z, r_z, epsilon) = if z >= 1 {
        let dz = decompose_index(z, seq)?;
        let (q_z, r_z) = (dz.q as u64, dz.r);
        let epsilon = if r > r_z { 0 } else { 1 };
        let q_check = q as i64 - q_z as i64 - epsilon as i64;
        let r_check = epsilon as i64 * p as i64 + r as i64 - r_z as i64;
        if q_check != q_prime as i64 || r_check != r_prime as i64 {
            return Err(inconsistent("q' = q - q_z - epsilon or r' = epsilon·p + r - r_z fails"));
        }
        (Some(q_z), Some(r_z), Some(epsilon))
    } else {
        (None, None, None)
    };

    let w_nonempty = z >= 1 && w >= 1;
    let (p_i, r_i, rp_i) = (p as i64, r as i64, r_prime as i64);
    let interval_i = match r_z {
        Some(rz) if mu == 0 && w_nonempty => Interval::new((rz as i64 - r_i + 1).max(0), p_i - r_i),
        _ => Interval::new(0, p_i - r_i),
    };
    let interval_j = if w_nonempty {
        let hi = (z as i64 - 1).min(p_i - rp_i);
        let rz = r_z.expect("z >= 1") as i64;
        let predicted = if r_i > rz && z <= p as u64 { rz - 1 } else { p_i - rp_i };
        if hi != predicted {
            return Err(inconsistent("min(z-1, p-r') disagrees with its case split"));
        }
        Interval::new(0, hi)
    } else {
        Interval::EMPTY
    };

    Ok(SemigroupParams {
        p,
        u,
        upsilon,
        w,
        z,
        lambda,
        mu,
        nu,
        q,
        r,
        q_prime,
        r_prime,
        q_z,
        r_z,
        epsilon,
        w_nonempty,
        interval_i,
        interval_j,
    })
}

/// The Apéry set of `Γ` with respect to `m0`, indexed by residue mod `m0`.
pub fn apery_set(seq: &ValidatedSequence) -> Vec<u64> {
    Semigroup::new(seq.m()).apery().to_vec()
}

/// Writes `gamma = a·m0 + g_s + b·mn` with `(s, b)` in `V \ W`, checking by
/// exhaustive search that exactly one such triple exists.
pub fn unique_representation(
    gamma: u64,
    params: &SemigroupParams,
    seq: &ValidatedSequence,
) -> Result<(u64, u64, u64)> {
    let m0 = seq.m0();
    let mut found = Vec::new();
    for s in 0..params.u {
        let gs = seq.g(s)?;
        for b in 0..params.upsilon {
            if params.in_w(s, b) {
                continue;
            }
            let Some(rest) = b
                .checked_mul(seq.mn())
                .and_then(|x| x.checked_add(gs))
                .and_then(|x| gamma.checked_sub(x))
            else {
                continue;
            };
            if rest % m0 == 0 {
                found.push((rest / m0, s, b));
            }
        }
    }
    match found.len() {
        1 => Ok(found[0]),
        0 => Err(Error::NotAMember(gamma)),
        count => Err(Error::NonUniqueRepresentation { value: gamma, count }),
    }
}
