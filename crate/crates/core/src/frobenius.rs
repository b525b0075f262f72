//! Classical and relative Frobenius counting formulas, evaluated on the
//! character side and by brute-force enumeration.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::chartable::{CharacterTable, Cyclo};
use crate::config::Config;
use crate::enumerate::{enumerate_sum, repeat, Level};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, GSet};
use crate::numeric::{as_nonnegative_integer, Rational};

/// `base^e` for a signed exponent.
pub(crate) fn signed_pow(base: u64, e: i64) -> Rational {
    let p = num_traits::pow(Rational::from_integer(BigInt::from(base)), e.unsigned_abs() as usize);
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// `Σ_i coeff(i) χ_i(class)`.
pub(crate) fn character_sum(table: &CharacterTable, class: usize, coeff: impl Fn(usize) -> Rational) -> Cyclo {
    let mut acc = Cyclo::zero();
    for i in 0..table.num_irreps() {
        let c = coeff(i);
        if !c.is_zero() {
            acc += &table.value(i, class).scale(&c);
        }
    }
    acc
}

/// Converts a character-side value to a natural number, or reports why not.
pub(crate) fn to_natural(value: &Cyclo, what: &str) -> Result<BigUint> {
    let r = value
        .to_rational()
        .map_err(|_| Error::InternalInconsistency(format!("{} is not rational: {}", what, value)))?;
    as_nonnegative_integer(&r)
        .and_then(|n| n.to_biguint())
        .ok_or_else(|| Error::InternalInconsistency(format!("{} = {} is not a nonnegative integer", what, r)))
}

/// The data of the relative counting problem: `G` acting on `X`, a target
/// `g`, genus `k` and `m ≥ 1` stabilizer factors.
#[derive(Debug, Clone, Copy)]
pub struct RelativeInstance<'a> {
    pub group: &'a FiniteGroup,
    pub gset: &'a GSet,
    pub g: Element,
    pub k: u32,
    pub m: u32,
}

impl<'a> RelativeInstance<'a> {
    pub fn new(group: &'a FiniteGroup, gset: &'a GSet, g: Element, k: u32, m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidInput("m must be at least 1".into()));
        }
        if gset.group_order() != group.order() {
            return Err(Error::InvalidInput("G-set belongs to a different group".into()));
        }
        if g >= group.order() {
            return Err(Error::InvalidInput(format!("element {} is out of range", g)));
        }
        Ok(RelativeInstance { group, gset, g, k, m })
    }
}

/// `|G|^{2k−1} Σ_π χ_π(g) / dim π^{2k−1}`: the number of `2k`-tuples whose
/// commutator product is `g`.
pub fn classic_commutator_count(table: &CharacterTable, group: &FiniteGroup, g: Element, k: u32) -> Result<BigUint> {
    let e = 2 * k as i64 - 1;
    let n = group.order() as u64;
    let sum = character_sum(table, group.class_of(g), |i| signed_pow(n, e) / signed_pow(table.dim(i), e));
    to_natural(&sum, "commutator count")
}

/// Counts `(a_1, b_1, …, a_k, b_k)` with `Π [a_j, b_j] = g` directly.
pub fn classic_commutator_brute(group: &FiniteGroup, g: Element, k: u32, config: &Config) -> Result<u128> {
    let levels: Vec<Level> = repeat(Level::Commutator, k).collect();
    enumerate_sum(group, 0, &levels, |p| u64::from(p == g), config)
}

/// `|Hom(π_1(Σ_k), G)|`.
pub fn hom_count_closed_surface(table: &CharacterTable, group: &FiniteGroup, k: u32) -> Result<BigUint> {
    classic_commutator_count(table, group, 0, k)
}

/// `|G|^{m+2k−1} Σ_π mult(π, X)^m χ_π(g) / dim π^{m+2k−1}`.
pub fn relative_count_chars(inst: &RelativeInstance, table: &CharacterTable) -> Result<BigUint> {
    let mults = table.multiplicities(inst.group, inst.gset)?;
    let e = inst.m as i64 + 2 * inst.k as i64 - 1;
    let n = inst.group.order() as u64;
    let sum = character_sum(table, inst.group.class_of(inst.g), |i| {
        signed_pow(mults[i], inst.m as i64) * signed_pow(n, e) / signed_pow(table.dim(i), e)
    });
    to_natural(&sum, "relative count")
}

/// Brute-force relative count through fixed-point weights,
/// `Σ_{h_2..h_m, a, b} #X^{g⁻¹ h_2⋯h_m Π[a_j,b_j]} Π_{i≥2} #X^{h_i}`.
///
/// When `|G|^{m+2k}·|X|^m` is within the tuple bound, the point-and-stabilizer
/// enumeration also runs and must agree.
pub fn relative_count_brute(inst: &RelativeInstance, config: &Config) -> Result<u128> {
    let fix = inst.gset.fixed_point_counts();
    let levels: Vec<Level> = repeat(Level::Free(Some(&fix)), inst.m - 1)
        .chain(repeat(Level::Commutator, inst.k))
        .collect();
    let total = enumerate_sum(inst.group, inst.group.inv(inst.g), &levels, |p| fix[p], config)?;
    if tuple_work(inst) <= config.tuple_bound {
        let tuples = relative_count_tuples(inst, config)?;
        if tuples != total {
            return Err(Error::InternalInconsistency(format!(
                "fixed-point form gives {} but tuple enumeration gives {}",
                total, tuples
            )));
        }
    }
    Ok(total)
}

fn tuple_work(inst: &RelativeInstance) -> u128 {
    let n = inst.group.order() as u128;
    let x = inst.gset.size() as u128;
    n.saturating_pow(inst.m + 2 * inst.k).saturating_mul(x.saturating_pow(inst.m))
}

/// `#{p_i ∈ X, h_i ∈ G_{p_i}, a_j, b_j ∈ G : Π h_i · Π [a_j, b_j] = g}` by
/// enumerating points and stabilizer elements.
pub fn relative_count_tuples(inst: &RelativeInstance, config: &Config) -> Result<u128> {
    let needed = tuple_work(inst);
    if needed > config.tuple_bound {
        return Err(Error::WorkBoundExceeded { needed, bound: config.tuple_bound });
    }
    let stabs: Vec<Vec<Element>> = (0..inst.gset.size()).map(|p| inst.gset.stabilizer(p)).collect();
    // number of ways to reach each element as h_1⋯h_m
    let g = inst.group;
    let mut ways = vec![0u128; g.order()];
    ways[0] = 1;
    for _ in 0..inst.m {
        let mut next = vec![0u128; g.order()];
        for (acc, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for stab in &stabs {
                for &h in stab {
                    next[g.mul(acc, h)] += w;
                }
            }
        }
        ways = next;
    }
    let mut total = 0u128;
    for (acc, &w) in ways.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let levels: Vec<Level> = repeat(Level::Commutator, inst.k).collect();
        total += w * enumerate_sum(g, acc, &levels, |p| u64::from(p == inst.g), &Config::default())?;
    }
    Ok(total)
}

/// Both sides of the relative formula for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainCheck {
    pub chars: BigUint,
    pub brute: u128,
    pub equal: bool,
}

pub fn main_check(inst: &RelativeInstance, table: &CharacterTable, config: &Config) -> Result<MainCheck> {
    let chars = relative_count_chars(inst, table)?;
    let brute = relative_count_brute(inst, config)?;
    Ok(MainCheck { equal: chars == BigUint::from(brute), chars, brute })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric};

    fn s3() -> (crate::group::PermutationGroup, CharacterTable) {
        let s3 = symmetric(3);
        let t = CharacterTable::compute(&s3.group).unwrap();
        (s3, t)
    }

    #[test]
    fn classic_examples() {
        let (s3, t) = s3();
        let g = &s3.group;
        assert_eq!(classic_commutator_count(&t, g, 0, 1).unwrap(), BigUint::from(18u32));
        assert_eq!(classic_commutator_count(&t, g, 0, 2).unwrap(), BigUint::from(486u32));
        assert_eq!(classic_commutator_brute(g, 0, 2, &Config::default()).unwrap(), 486);
        assert_eq!(hom_count_closed_surface(&t, g, 0).unwrap(), BigUint::from(1u32));
        assert_eq!(classic_commutator_count(&t, g, 1, 0).unwrap(), BigUint::zero());
        let c4 = cyclic(4).group;
        let t4 = CharacterTable::compute(&c4).unwrap();
        assert_eq!(hom_count_closed_surface(&t4, &c4, 1).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn relative_examples() {
        let (s3, t) = s3();
        let cfg = Config::default();
        for (k, m, want) in [(0, 2, 12u32), (0, 1, 3), (1, 1, 54)] {
            let inst = RelativeInstance::new(&s3.group, &s3.natural, 0, k, m).unwrap();
            assert_eq!(relative_count_chars(&inst, &t).unwrap(), BigUint::from(want));
            assert_eq!(relative_count_brute(&inst, &cfg).unwrap(), want as u128);
            assert_eq!(relative_count_tuples(&inst, &cfg).unwrap(), want as u128);
        }
    }

    #[test]
    fn one_point_and_regular_sets() {
        let (s3, t) = s3();
        let cfg = Config::default();
        let pt = GSet::point(&s3.group);
        let reg = GSet::regular(&s3.group);
        for g in 0..6 {
            let inst = RelativeInstance::new(&s3.group, &pt, g, 0, 1).unwrap();
            assert_eq!(relative_count_brute(&inst, &cfg).unwrap(), 1);
            let inst = RelativeInstance::new(&s3.group, &reg, g, 0, 1).unwrap();
            assert_eq!(relative_count_brute(&inst, &cfg).unwrap(), u128::from(g == 0) * 6);
            assert_eq!(relative_count_chars(&inst, &t).unwrap(), BigUint::from(u32::from(g == 0) * 6));
        }
    }

    #[test]
    fn m_zero_is_rejected() {
        let (s3, _) = s3();
        assert!(RelativeInstance::new(&s3.group, &s3.natural, 0, 1, 0).is_err());
    }
}
