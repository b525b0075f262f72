//! Multiplicity-freeness of permutation representations, decided by the
//! character table, by a commutator criterion, and by the `f`-statistic.

use num_bigint::BigUint;

use crate::chartable::{CharacterTable, Cyclo};
use crate::config::Config;
use crate::enumerate::{check_work, enumerate_sum, repeat, work, Level};
use crate::error::{Error, Result};
use crate::frobenius::{signed_pow, to_natural};
use crate::group::{Element, FiniteGroup, GSet};
use crate::numeric::Rational;

/// Multiplicity vector of `C[X]` and whether every entry is at most one.
pub fn is_multiplicity_free(table: &CharacterTable, g: &FiniteGroup, x: &GSet) -> Result<(bool, Vec<u64>)> {
    let mults = table.multiplicities(g, x)?;
    Ok((mults.iter().all(|&m| m <= 1), mults))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorCriterion {
    /// `Σ_{g,h} #X^{[g,h]}`.
    pub lhs: u128,
    /// `Σ_{g,h} #X^g #X^h #X^{gh}`.
    pub rhs: u128,
    pub holds: bool,
}

/// Commutator criterion for `X = G/H`, `H` generated by `h_gens`.
pub fn commutator_criterion(g: &FiniteGroup, h_gens: &[Element], config: &Config) -> Result<CommutatorCriterion> {
    commutator_criterion_on(g, &GSet::cosets(g, h_gens), config)
}

/// Commutator criterion for an arbitrary G-set, aggregated over classes of
/// the first variable.
pub fn commutator_criterion_on(g: &FiniteGroup, x: &GSet, config: &Config) -> Result<CommutatorCriterion> {
    let n = g.order();
    check_work((n as u128) * (n as u128), config)?;
    let fix = x.fixed_point_counts();
    let cd = g.conjugacy();
    let (mut lhs, mut rhs) = (0u128, 0u128);
    for c in 0..cd.count() {
        let a = cd.representative(c);
        let size = cd.size(c) as u128;
        let (mut l, mut r) = (0u128, 0u128);
        for b in 0..n {
            l += fix[g.commutator(a, b)] as u128;
            r += fix[b] as u128 * fix[g.mul(a, b)] as u128;
        }
        lhs += size * l;
        rhs += size * fix[a] as u128 * r;
    }
    if n <= 24 {
        let (nl, nr) = commutator_criterion_naive(g, &fix);
        if (nl, nr) != (lhs, rhs) {
            return Err(Error::InternalInconsistency(format!(
                "class aggregation gives ({}, {}) but the double loop gives ({}, {})",
                lhs, rhs, nl, nr
            )));
        }
    }
    Ok(CommutatorCriterion { lhs, rhs, holds: lhs == rhs })
}

fn commutator_criterion_naive(g: &FiniteGroup, fix: &[u64]) -> (u128, u128) {
    let n = g.order();
    let (mut lhs, mut rhs) = (0u128, 0u128);
    for a in 0..n {
        for b in 0..n {
            lhs += fix[g.commutator(a, b)] as u128;
            rhs += (fix[a] * fix[b] * fix[g.mul(a, b)]) as u128;
        }
    }
    (lhs, rhs)
}

/// `f(k, m) = Σ_{h_1..h_m, a, b} #X^{h_1⋯h_m Π[a_j,b_j]} Π #X^{h_i}` by
/// enumeration. Empty products are the identity.
pub fn f_stat_brute(g: &FiniteGroup, x: &GSet, k: u32, m: u32, config: &Config) -> Result<u128> {
    let fix = x.fixed_point_counts();
    let levels: Vec<Level> = repeat(Level::Free(Some(&fix)), m).chain(repeat(Level::Commutator, k)).collect();
    enumerate_sum(g, 0, &levels, |p| fix[p], config)
}

/// `f(k, m) = |G|^{m+2k} Σ_π mult^{m+1} dim^{1−m−2k}`.
pub fn f_stat_chars(table: &CharacterTable, g: &FiniteGroup, x: &GSet, k: u32, m: u32) -> Result<BigUint> {
    let mults = table.multiplicities(g, x)?;
    let e = m as i64 + 2 * k as i64;
    let n = g.order() as u64;
    let mut total = Rational::from_integer(0.into());
    for (i, &mu) in mults.iter().enumerate() {
        total += signed_pow(n, e) * signed_pow(mu, m as i64 + 1) * signed_pow(table.dim(i), 1 - e);
    }
    to_natural(&Cyclo::from_scalar(total), "f-statistic")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FStat {
    pub k: u32,
    pub m: u32,
    pub value: BigUint,
    /// Enumerated value, present when the enumeration was within the oracle bound.
    pub enumerated: Option<u128>,
}

/// Character-formula value, cross-checked against enumeration when cheap.
pub fn f_stat(table: &CharacterTable, g: &FiniteGroup, x: &GSet, k: u32, m: u32, config: &Config) -> Result<FStat> {
    let value = f_stat_chars(table, g, x, k, m)?;
    let levels: Vec<Level> = repeat(Level::Free(None), m).chain(repeat(Level::Commutator, k)).collect();
    let enumerated = if work(g, &levels) <= config.oracle_bound.min(config.work_bound) {
        let a = f_stat_brute(g, x, k, m, config)?;
        if BigUint::from(a) != value {
            return Err(Error::InternalInconsistency(format!(
                "f({}, {}): enumeration gives {} but the character formula gives {}",
                k, m, a, value
            )));
        }
        Some(a)
    } else {
        None
    };
    Ok(FStat { k, m, value, enumerated })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FEquivalence {
    pub k: u32,
    pub m: u32,
    pub l: u32,
    /// `f(k − l, m + 2l)`.
    pub shifted: FStat,
    /// `f(k, m)`.
    pub base: FStat,
    /// `shifted == base`; holds for every admissible triple exactly when
    /// `X` is multiplicity-free.
    pub equal: bool,
    /// The pair `(f(k − l, m), f(k, m + 2l))`, reported for comparison.
    pub literal_pair: (BigUint, BigUint),
    pub literal_equal: bool,
}

/// Compares `f(k − l, m + 2l)` with `f(k, m)`, which share the power of `|G|`
/// and differ only in the power of the multiplicities.
pub fn f_equivalence_check(
    table: &CharacterTable,
    g: &FiniteGroup,
    x: &GSet,
    k: u32,
    m: u32,
    l: u32,
    config: &Config,
) -> Result<FEquivalence> {
    if l == 0 || l > k {
        return Err(Error::InvalidInput(format!("need 0 < l ≤ k, got k = {}, l = {}", k, l)));
    }
    let shifted = f_stat(table, g, x, k - l, m + 2 * l, config)?;
    let base = f_stat(table, g, x, k, m, config)?;
    let lit_a = f_stat_chars(table, g, x, k - l, m)?;
    let lit_b = f_stat_chars(table, g, x, k, m + 2 * l)?;
    Ok(FEquivalence {
        k,
        m,
        l,
        equal: shifted.value == base.value,
        shifted,
        base,
        literal_equal: lit_a == lit_b,
        literal_pair: (lit_a, lit_b),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GelfandReport {
    pub multiplicities: Vec<u64>,
    pub multiplicity_free: bool,
    pub commutator: CommutatorCriterion,
    pub f_checks: Vec<FEquivalence>,
    pub f_verdict: bool,
    pub agree: bool,
}

impl GelfandReport {
    pub fn verdict(&self) -> bool {
        self.multiplicity_free
    }
}

/// Runs all three routes on `X` with every admissible `(k, m, l)`, `k ≤ 2`,
/// `m ≤ 2`.
pub fn gelfand_report(table: &CharacterTable, g: &FiniteGroup, x: &GSet, config: &Config) -> Result<GelfandReport> {
    let (multiplicity_free, multiplicities) = is_multiplicity_free(table, g, x)?;
    let commutator = commutator_criterion_on(g, x, config)?;
    let mut f_checks = Vec::new();
    for k in 1..=2 {
        for l in 1..=k {
            for m in 0..=2 {
                f_checks.push(f_equivalence_check(table, g, x, k, m, l, config)?);
            }
        }
    }
    let f_verdict = f_checks.iter().all(|c| c.equal);
    let f_consistent = f_checks.iter().all(|c| c.equal == f_verdict);
    let agree = f_consistent && commutator.holds == multiplicity_free && f_verdict == multiplicity_free;
    Ok(GelfandReport { multiplicities, multiplicity_free, commutator, f_checks, f_verdict, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    #[test]
    fn s3_examples() {
        let s3 = symmetric(3);
        let g = &s3.group;
        let t = CharacterTable::compute(g).unwrap();
        let cfg = Config::default();
        let s2 = s3.element("(1 2)").unwrap();
        let c = commutator_criterion(g, &[s2], &cfg).unwrap();
        assert_eq!((c.lhs, c.rhs, c.holds), (54, 54, true));
        let c = commutator_criterion(g, &[], &cfg).unwrap();
        assert_eq!((c.lhs, c.rhs, c.holds), (108, 216, false));

        let x = GSet::cosets(g, &[s2]);
        assert_eq!(f_stat_brute(g, &x, 1, 0, &cfg).unwrap(), 54);
        assert_eq!(f_stat_brute(g, &x, 0, 1, &cfg).unwrap(), 12);
        assert_eq!(f_stat_brute(g, &x, 0, 0, &cfg).unwrap(), 3);
        for (k, m) in [(1, 0), (0, 1), (0, 0), (1, 1), (0, 2)] {
            let f = f_stat(&t, g, &x, k, m, &cfg).unwrap();
            assert!(f.enumerated.is_some());
        }

        let (free, mults) = is_multiplicity_free(&t, g, &s3.natural).unwrap();
        assert!(free);
        assert_eq!(mults, vec![0, 1, 1]);
        let (free, _) = is_multiplicity_free(&t, g, &GSet::regular(g)).unwrap();
        assert!(!free);
    }

    #[test]
    fn equivalence_pairs() {
        let s3 = symmetric(3);
        let g = &s3.group;
        let t = CharacterTable::compute(g).unwrap();
        let cfg = Config::default();
        let nat = &s3.natural;
        let e = f_equivalence_check(&t, g, nat, 1, 0, 1, &cfg).unwrap();
        assert!(e.equal);
        assert_eq!(e.base.value, BigUint::from(54u32));
        assert_eq!(e.literal_pair, (BigUint::from(3u32), BigUint::from(1458u32)));
        let reg = GSet::regular(g);
        assert!(!f_equivalence_check(&t, g, &reg, 1, 0, 1, &cfg).unwrap().equal);
        assert!(f_equivalence_check(&t, g, nat, 1, 0, 2, &cfg).is_err());
    }

    #[test]
    fn reports_agree() {
        let cfg = Config::default();
        let s3 = symmetric(3);
        let t = CharacterTable::compute(&s3.group).unwrap();
        for x in [s3.natural.clone(), GSet::regular(&s3.group), GSet::point(&s3.group)] {
            assert!(gelfand_report(&t, &s3.group, &x, &cfg).unwrap().agree);
        }
        let c6 = cyclic(6);
        let t = CharacterTable::compute(&c6.group).unwrap();
        let x = GSet::cosets(&c6.group, &[3]);
        let r = gelfand_report(&t, &c6.group, &x, &cfg).unwrap();
        assert!(r.agree && r.verdict());
    }
}
