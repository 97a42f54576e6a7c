//! Closed-form generating sets of the toric ideal.
//!
//! All three sets are built from the same four families of binomials
//! (`xi`, `theta`, `phi`, `psi`); they differ only in which `phi` and `psi`
//! indices they keep:
//!
//! | set         | `phi_i`        | `psi_j`        |
//! |-------------|----------------|----------------|
//! | G           | `[0, p-r]`     | `J`            |
//! | Patil       | `I`            | `J`            |
//! | Patil–Singh | `[0, p-r]`     | `[0, p-r']`    |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::groebner;
use crate::poly::{is_homogeneous, make_binomial, Binomial, Monomial, MonomialOrder};
use crate::semigroup::{Interval, SemigroupParams, ValidatedSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorTag {
    Xi(usize, usize),
    Theta,
    Phi(usize),
    Psi(usize),
}

impl fmt::Display for GeneratorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorTag::Xi(i, j) => write!(f, "xi({i},{j})"),
            GeneratorTag::Theta => write!(f, "theta"),
            GeneratorTag::Phi(i) => write!(f, "phi({i})"),
            GeneratorTag::Psi(j) => write!(f, "psi({j})"),
        }
    }
}

impl FromStr for GeneratorTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bad = || format!("unknown generator tag {s:?}");
        if s == "theta" {
            return Ok(GeneratorTag::Theta);
        }
        let (name, rest) = s.split_once('(').ok_or_else(bad)?;
        let args = rest.strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        match (name, nums.as_slice()) {
            ("xi", &[i, j]) => Ok(GeneratorTag::Xi(i, j)),
            ("phi", &[i]) => Ok(GeneratorTag::Phi(i)),
            ("psi", &[j]) => Ok(GeneratorTag::Psi(j)),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The minimal Gröbner basis.
    G,
    /// Patil's minimal generating set.
    Patil,
    /// The Patil–Singh generating set.
    PatilSingh,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::G, Variant::Patil, Variant::PatilSingh];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::G => "g",
            Variant::Patil => "patil",
            Variant::PatilSingh => "patil-singh",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "g" => Ok(Variant::G),
            "patil" => Ok(Variant::Patil),
            "patil-singh" => Ok(Variant::PatilSingh),
            _ => Err(format!("unknown generator set {s:?}")),
        }
    }
}

/// A tagged generating set together with the data it was built from.
#[derive(Debug, Clone)]
pub struct BasisSet {
    pub variant: Variant,
    pub elements: Vec<(GeneratorTag, Binomial)>,
    pub params: SemigroupParams,
    pub order: MonomialOrder,
}

impl BasisSet {
    pub fn binomials(&self) -> Vec<Binomial> {
        self.elements.iter().map(|(_, b)| b.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, tag: GeneratorTag) -> Option<&Binomial> {
        self.elements.iter().find(|(t, _)| *t == tag).map(|(_, b)| b)
    }

    pub fn contains(&self, f: &Binomial) -> bool {
        self.elements.iter().any(|(_, b)| b == f)
    }

    /// Every element of `self` also lies in `other`.
    pub fn is_subset_of(&self, other: &BasisSet) -> bool {
        self.elements.iter().all(|(_, b)| other.contains(b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConditionReport {
    pub c1: bool,
    pub c2: bool,
    pub reduced_predicted: bool,
    /// `C1` without its `lambda = 1` part. The trail of `phi(r')` is
    /// divisible by the lead of `psi(0)` for any `lambda`, so this is the
    /// condition that actually matches reducedness.
    pub c1_any_lambda: bool,
}

/// The two monomials of a generator, the one displayed as leading first.
pub fn generator_monomials(
    seq: &ValidatedSequence,
    params: &SemigroupParams,
    tag: GeneratorTag,
) -> (Monomial, Monomial) {
    let nv = seq.m().len();
    let (p, n) = (seq.p(), seq.n());
    let exp = |x: u64| u32::try_from(x).expect("exponent exceeds u32");
    let mon = |factors: &[(usize, u32)]| Monomial::from_factors(nv, factors);
    match tag {
        GeneratorTag::Xi(i, j) => {
            let other = if i + j <= p { mon(&[(0, 1), (i + j, 1)]) } else { mon(&[(i + j - p, 1), (p, 1)]) };
            (mon(&[(i, 1), (j, 1)]), other)
        }
        GeneratorTag::Phi(i) => (
            mon(&[(params.r + i, 1), (p, exp(params.q))]),
            mon(&[(0, exp(params.lambda - 1)), (i, 1), (n, exp(params.w))]),
        ),
        GeneratorTag::Psi(j) => (
            mon(&[(params.r_prime + j, 1), (p, exp(params.q_prime)), (n, exp(params.upsilon - params.w))]),
            mon(&[(0, exp(params.nu - 1)), (j, 1)]),
        ),
        GeneratorTag::Theta => {
            let tail = match (params.q_z, params.r_z) {
                (Some(q_z), Some(r_z)) => mon(&[(0, exp(params.mu)), (r_z, 1), (p, exp(q_z))]),
                _ => mon(&[(0, exp(params.mu))]),
            };
            (mon(&[(n, exp(params.upsilon))]), tail)
        }
    }
}

/// `theta` in its original two-case form, expressed through `q'` and `r'`.
/// The `x_p` exponents are combined before conversion so that the `z = 0`
/// case (where `x_p · x_p^{-1} = 1`) stays well defined.
pub fn original_theta(seq: &ValidatedSequence, params: &SemigroupParams) -> Result<(Monomial, Monomial)> {
    let (p, n) = (seq.p(), seq.n());
    let (q, qp) = (params.q as i64, params.q_prime as i64);
    let (index, xp_exp) = if params.r_prime < params.r {
        (params.r - params.r_prime, q - qp)
    } else {
        (p + params.r - params.r_prime, q - qp - 1)
    };
    let mut e = vec![0i64; seq.m().len()];
    e[0] += params.mu as i64;
    e[index] += 1;
    e[p] += xp_exp;
    if e.iter().any(|&x| x < 0) {
        return Err(Error::InternalInconsistency("negative exponent in theta".into()));
    }
    let tail = Monomial::from_exponents(e.into_iter().map(|x| x as u32).collect());
    let lead = Monomial::var(seq.m().len(), n, params.upsilon as u32);
    Ok((lead, tail))
}

fn tags(seq: &ValidatedSequence, params: &SemigroupParams, variant: Variant) -> Vec<GeneratorTag> {
    let p = seq.p();
    let mut out: Vec<GeneratorTag> = (1..p)
        .flat_map(|i| (i..p).map(move |j| GeneratorTag::Xi(i, j)))
        .collect();
    out.push(GeneratorTag::Theta);
    let full_phi = Interval::new(0, (p - params.r) as i64);
    let phi = match variant {
        Variant::Patil => params.interval_i,
        Variant::G | Variant::PatilSingh => full_phi,
    };
    out.extend(phi.iter().map(GeneratorTag::Phi));
    let psi = match variant {
        Variant::G | Variant::Patil => params.interval_j,
        Variant::PatilSingh => Interval::new(0, (p - params.r_prime) as i64),
    };
    out.extend(psi.iter().map(GeneratorTag::Psi));
    out
}

/// Builds one of the three generating sets, listing `xi`, then `theta`,
/// then `phi`, then `psi`.
pub fn build_generators(
    seq: &ValidatedSequence,
    params: &SemigroupParams,
    variant: Variant,
    order: &MonomialOrder,
) -> Result<BasisSet> {
    let mut elements = Vec::new();
    for tag in tags(seq, params, variant) {
        let (a, b) = generator_monomials(seq, params, tag);
        let f = make_binomial(a, b, order)
            .ok_or_else(|| Error::InternalInconsistency(format!("{tag} collapses to zero")))?;
        if !is_homogeneous(&f, seq.m()) {
            return Err(Error::InternalInconsistency(format!("{tag} = {f} is not homogeneous")));
        }
        elements.push((tag, f));
    }
    Ok(BasisSet { variant, elements, params: params.clone(), order: order.clone() })
}

/// `C1: J ≠ ∅, q' = 0, v - w ≤ w, lambda = 1, r' ≤ p - r`;
/// `C2: q = 1, r ≤ p - 2`.
pub fn check_conditions(params: &SemigroupParams) -> ConditionReport {
    let p = params.p as i64;
    let c1_any_lambda = !params.interval_j.is_empty()
        && params.q_prime == 0
        && params.upsilon - params.w <= params.w
        && (params.r_prime as i64) <= p - params.r as i64;
    let c1 = c1_any_lambda && params.lambda == 1;
    let c2 = params.q == 1 && (params.r as i64) <= p - 2;
    ConditionReport { c1, c2, reduced_predicted: !c1 && !c2, c1_any_lambda }
}

pub fn is_minimal_basis(set: &BasisSet) -> bool {
    groebner::is_minimal(&set.binomials())
}

pub fn is_reduced_basis(set: &BasisSet) -> bool {
    groebner::is_reduced(&set.binomials())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{compute_params, validate_input};

    fn setup(m: &[u64]) -> (ValidatedSequence, SemigroupParams) {
        let seq = validate_input(m).unwrap();
        let params = compute_params(&seq).unwrap();
        (seq, params)
    }

    fn text(set: &BasisSet, tag: GeneratorTag) -> String {
        set.get(tag).unwrap().to_string()
    }

    #[test]
    fn g_for_5_to_9() {
        let (seq, params) = setup(&[5, 6, 7, 8, 9]);
        let order = MonomialOrder::ascending(&seq);
        let g = build_generators(&seq, &params, Variant::G, &order).unwrap();
        assert_eq!(g.len(), 10);
        use GeneratorTag::*;
        let expected = [
            (Phi(0), "x1*x3 - x0*x4"),
            (Phi(1), "x2*x3 - x1*x4"),
            (Phi(2), "x3^2 - x2*x4"),
            (Psi(0), "x1*x4 - x0^3"),
            (Psi(1), "x2*x4 - x0^2*x1"),
            (Psi(2), "x3*x4 - x0^2*x2"),
            (Theta, "x4^2 - x0^2*x3"),
            (Xi(1, 1), "x1^2 - x0*x2"),
            (Xi(1, 2), "x1*x2 - x0*x3"),
            (Xi(2, 2), "x2^2 - x1*x3"),
        ];
        for (tag, s) in expected {
            assert_eq!(text(&g, tag), s, "{tag}");
        }
        assert!(is_minimal_basis(&g));
        assert!(!is_reduced_basis(&g));
        let c = check_conditions(&params);
        assert!(c.c1 && c.c2 && !c.reduced_predicted);
    }

    #[test]
    fn patil_singh_for_20_to_29() {
        let (seq, params) = setup(&[20, 21, 22, 23, 24, 29]);
        let order = MonomialOrder::ascending(&seq);
        let ps = build_generators(&seq, &params, Variant::PatilSingh, &order).unwrap();
        for i in 0..=3 {
            let (a, b) = generator_monomials(&seq, &params, GeneratorTag::Phi(i));
            let expect_a = Monomial::from_factors(6, &[(i + 1, 1), (4, 2)]);
            let expect_b = Monomial::from_factors(6, &[(0, 1), (i, 1), (5, 1)]);
            assert_eq!((a, b), (expect_a, expect_b));
        }
        for j in 0..=2 {
            let (a, b) = generator_monomials(&seq, &params, GeneratorTag::Psi(j));
            assert_eq!(a, Monomial::from_factors(6, &[(j + 2, 1), (5, 2)]));
            assert_eq!(b, Monomial::from_factors(6, &[(0, 3), (j, 1)]));
        }
        assert_eq!(text(&ps, GeneratorTag::Theta), "x5^3 - x0^2*x3*x4");
        assert_eq!(ps.elements.iter().filter(|(t, _)| matches!(t, GeneratorTag::Xi(..))).count(), 6);
        assert_eq!(ps.len(), 6 + 1 + 4 + 3);
        let c = check_conditions(&params);
        assert!(!c.c1 && !c.c2);
    }

    #[test]
    fn patil_set_for_5_6_4() {
        let (seq, params) = setup(&[5, 6, 4]);
        assert!(params.interval_i.is_empty());
        let order = MonomialOrder::ascending(&seq);
        let omega = build_generators(&seq, &params, Variant::Patil, &order).unwrap();
        let texts: Vec<String> = omega.binomials().iter().map(|b| b.to_string()).collect();
        assert_eq!(texts, vec!["x2^3 - x1^2", "x1*x2 - x0^2"]);
        let g = build_generators(&seq, &params, Variant::G, &order).unwrap();
        assert_eq!(text(&g, GeneratorTag::Phi(0)), "x1^3 - x0^2*x2^2");
        assert!(is_reduced_basis(&g));
        assert!(check_conditions(&params).reduced_predicted);
    }

    #[test]
    fn theta_forms_agree() {
        for m in [&[5, 6, 7, 8, 9][..], &[20, 21, 22, 23, 24, 29], &[5, 6, 4]] {
            let (seq, params) = setup(m);
            let rewritten = generator_monomials(&seq, &params, GeneratorTag::Theta);
            assert_eq!(original_theta(&seq, &params).unwrap(), rewritten);
        }
    }

    #[test]
    fn conditions_for_family() {
        for m0 in (5..=25).step_by(2) {
            let (_, params) = setup(&[m0, m0 + 1, m0 - 1]);
            let c = check_conditions(&params);
            assert!(!c.c1 && !c.c2);
        }
    }

    #[test]
    fn singleton_is_minimal_and_reduced() {
        let (seq, params) = setup(&[5, 6, 4]);
        let order = MonomialOrder::ascending(&seq);
        let mut set = build_generators(&seq, &params, Variant::G, &order).unwrap();
        set.elements.truncate(1);
        assert!(is_minimal_basis(&set));
        assert!(is_reduced_basis(&set));
    }

    #[test]
    fn tag_and_variant_text() {
        for tag in [GeneratorTag::Xi(1, 3), GeneratorTag::Theta, GeneratorTag::Phi(2), GeneratorTag::Psi(0)] {
            assert_eq!(tag.to_string().parse::<GeneratorTag>().unwrap(), tag);
        }
        assert!("phi(1,2)".parse::<GeneratorTag>().is_err());
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
    }
}
