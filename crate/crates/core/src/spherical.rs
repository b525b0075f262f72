//! Spherical characters `χ_π^X(x, y) = (1/|G|) Σ_{h : hx = y} χ_π(h)` and the
//! spherical refinement of the relative counting formula.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chartable::{CharacterTable, ClassFunction, Cyclo};
use crate::config::Config;
use crate::enumerate::{enumerate_sum, repeat, Level};
use crate::error::{Error, Result};
use crate::frobenius::{signed_pow, RelativeInstance};
use crate::group::{FiniteGroup, GSet};
use crate::numeric::Rational;

/// `|X| × |X|` matrix of a spherical function.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalCharacter {
    size: usize,
    values: Vec<Cyclo>,
}

impl SphericalCharacter {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn value(&self, x: usize, y: usize) -> &Cyclo {
        &self.values[x * self.size + y]
    }

    pub fn trace(&self) -> Cyclo {
        let mut acc = Cyclo::zero();
        for x in 0..self.size {
            acc += self.value(x, x);
        }
        acc
    }
}

/// Spherical function of an arbitrary function on elements.
pub fn spherical_from_elements(values: &[Cyclo], x: &GSet) -> SphericalCharacter {
    let n = x.size();
    let mut out = vec![Cyclo::zero(); n * n];
    for (h, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        for p in 0..n {
            out[p * n + x.act(h, p)] += v;
        }
    }
    let s = Rational::new(1.into(), BigInt::from(values.len()));
    SphericalCharacter { size: n, values: out.into_iter().map(|c| c.scale(&s)).collect() }
}

/// Spherical function of a class function.
pub fn spherical_of(f: &ClassFunction, g: &FiniteGroup, x: &GSet) -> SphericalCharacter {
    let values: Vec<Cyclo> = (0..g.order()).map(|h| f.value(g.class_of(h)).clone()).collect();
    spherical_from_elements(&values, x)
}

/// `χ_π^X` for irrep `i`.
pub fn spherical_character(table: &CharacterTable, i: usize, g: &FiniteGroup, x: &GSet) -> SphericalCharacter {
    spherical_of(&table.character(i), g, x)
}

/// `G × G` acting on `G` by `(h_1, h_2)·h = h_1 h h_2⁻¹`; pairs are indexed
/// as in [`FiniteGroup::direct_product`].
pub fn two_sided_action(g: &FiniteGroup, gg: &FiniteGroup) -> GSet {
    let n = g.order();
    let mut action = vec![0u32; n * n * n];
    for pair in 0..n * n {
        let (h1, h2) = (pair / n, pair % n);
        for h in 0..n {
            action[pair * n + h] = g.mul(g.mul(h1, h), g.inv(h2)) as u32;
        }
    }
    GSet::from_action_unchecked(gg, n, action, None)
}

/// For each irrep `π` and each `g`, compares `χ_{π⊠π*}^G(1, g)` computed on
/// `G × G` with `χ_π(g) / (|G| dim π)`. Returns one flag per irrep.
pub fn two_sided_lemma_check(table: &CharacterTable, g: &FiniteGroup) -> Vec<bool> {
    let n = g.order();
    let gg = g.direct_product(g);
    let x = two_sided_action(g, &gg);
    (0..table.num_irreps())
        .map(|i| {
            let values: Vec<Cyclo> = (0..n * n)
                .map(|pair| {
                    let (h1, h2) = (pair / n, pair % n);
                    table.value(i, g.class_of(h1)) * &table.value(i, g.class_of(h2)).conj()
                })
                .collect();
            let sph = spherical_from_elements(&values, &x);
            let denom = Rational::new(1.into(), BigInt::from(n as u64 * table.dim(i)));
            (0..n).all(|h| *sph.value(0, h) == table.value(i, g.class_of(h)).scale(&denom))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SphCheck {
    pub x1: usize,
    pub x2: usize,
    /// `Σ_π mult^m / dim^{m+2k−1} · χ_π^X(x_1, x_2)`.
    pub lhs: Cyclo,
    /// `|G|^{−(m+2k)} · #{tuples moving x_1 to x_2}`.
    pub rhs: Rational,
    pub tuple_count: u128,
    pub equal: bool,
    /// `rhs / lhs` when `lhs` is a nonzero rational.
    pub ratio: Option<Rational>,
}

/// Both sides of the spherical formula at `(x_1, x_2)`; the instance's
/// target element is ignored.
pub fn main_sph_check(
    inst: &RelativeInstance,
    table: &CharacterTable,
    x1: usize,
    x2: usize,
    config: &Config,
) -> Result<SphCheck> {
    let (g, x) = (inst.group, inst.gset);
    if x1 >= x.size() || x2 >= x.size() {
        return Err(Error::InvalidInput(format!("points must be below {}", x.size())));
    }
    let mults = table.multiplicities(g, x)?;
    let e = inst.m as i64 + 2 * inst.k as i64 - 1;
    let mut lhs = Cyclo::zero();
    for i in 0..table.num_irreps() {
        if mults[i] == 0 {
            continue;
        }
        let coeff = signed_pow(mults[i], inst.m as i64) / signed_pow(table.dim(i), e);
        let sph = spherical_character(table, i, g, x);
        lhs += &sph.value(x1, x2).scale(&coeff);
    }
    let fix = x.fixed_point_counts();
    let levels: Vec<Level> = repeat(Level::Free(Some(&fix)), inst.m)
        .chain(repeat(Level::Commutator, inst.k))
        .collect();
    let tuple_count = enumerate_sum(g, 0, &levels, |p| u64::from(x.act(p, x1) == x2), config)?;
    let rhs = Rational::from_integer(BigInt::from(tuple_count)) * signed_pow(g.order() as u64, -(e + 1));
    let equal = lhs == Cyclo::from_scalar(rhs.clone());
    let ratio = lhs.to_rational().ok().filter(|l| !l.is_zero()).map(|l| &rhs / l);
    Ok(SphCheck { x1, x2, lhs, rhs, tuple_count, equal, ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{dihedral, symmetric};
    use crate::numeric::{int, rat};

    #[test]
    fn trivial_spherical_character() {
        let s3 = symmetric(3);
        let t = CharacterTable::compute(&s3.group).unwrap();
        let sph = spherical_character(&t, t.trivial_index(), &s3.group, &s3.natural);
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(*sph.value(x, y), Cyclo::from_scalar(rat(1, 3)));
            }
        }
    }

    #[test]
    fn trace_is_multiplicity_over_order() {
        // Σ_x χ^X(x, x) = (1/|G|) Σ_h χ(h) #X^h = mult
        let s3 = symmetric(3);
        let t = CharacterTable::compute(&s3.group).unwrap();
        for i in 0..3 {
            let sph = spherical_character(&t, i, &s3.group, &s3.natural);
            let m = t.multiplicity(i, &s3.group, &s3.natural).unwrap();
            assert_eq!(sph.trace(), Cyclo::from_i64(m as i64));
        }
    }

    #[test]
    fn constant_on_diagonal_orbits() {
        let d4 = dihedral(4);
        let t = CharacterTable::compute(&d4.group).unwrap();
        let x = &d4.natural;
        for i in 0..t.num_irreps() {
            let sph = spherical_character(&t, i, &d4.group, x);
            for h in 0..d4.group.order() {
                for p in 0..4 {
                    for q in 0..4 {
                        assert_eq!(sph.value(p, q), sph.value(x.act(h, p), x.act(h, q)));
                    }
                }
            }
        }
    }

    #[test]
    fn two_sided_lemma_on_s3() {
        let s3 = symmetric(3);
        let t = CharacterTable::compute(&s3.group).unwrap();
        assert_eq!(two_sided_lemma_check(&t, &s3.group), vec![true; 3]);
    }

    #[test]
    fn sphere_with_one_puncture() {
        let s3 = symmetric(3);
        let t = CharacterTable::compute(&s3.group).unwrap();
        let inst = RelativeInstance::new(&s3.group, &s3.natural, 0, 0, 1).unwrap();
        let r = main_sph_check(&inst, &t, 0, 0, &Config::default()).unwrap();
        // (1/6) Σ_{h ∈ G_x} #X^h = (3 + 1)/6
        assert_eq!(r.rhs, rat(2, 3));
        assert!(r.equal);
        assert_eq!(r.ratio, Some(int(1)));
        let r = main_sph_check(&inst, &t, 0, 1, &Config::default()).unwrap();
        assert!(r.equal);
    }
}
