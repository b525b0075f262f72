//! Exact character tables and class-function calculus.

mod dixon;
mod modp;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GSet};
use crate::numeric::{as_nonnegative_integer, int, Cyclotomic, Rational};

pub use dixon::choose_prime as dixon_prime;
pub(crate) use modp::is_prime;

/// Cyclotomic numbers with rational coefficients.
pub type Cyclo = Cyclotomic<Rational>;

/// A function on the group that is constant on conjugacy classes,
/// stored as one value per class.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    values: Vec<Cyclo>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclo>) -> Self {
        ClassFunction { values }
    }

    /// Values of a function on elements, sampled at class representatives.
    pub fn from_element_fn(g: &FiniteGroup, f: impl Fn(usize) -> Cyclo) -> Self {
        ClassFunction { values: g.conjugacy().representatives().into_iter().map(f).collect() }
    }

    /// Indicator of the identity class.
    pub fn identity_delta(g: &FiniteGroup) -> Self {
        let r = g.conjugacy().count();
        ClassFunction {
            values: (0..r).map(|c| Cyclo::from_i64(i64::from(c == 0))).collect(),
        }
    }

    /// The permutation character `g ↦ #X^g`.
    pub fn permutation_character(g: &FiniteGroup, x: &GSet) -> Self {
        Self::from_element_fn(g, |h| Cyclo::from_i64(x.fixed_points(h) as i64))
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclo {
        &self.values[class]
    }

    pub fn scale(&self, s: &Rational) -> Self {
        ClassFunction { values: self.values.iter().map(|v| v.scale(s)).collect() }
    }

    /// `(1/|G|) Σ_c |c| f(c) conj(g(c))`.
    pub fn inner_product(&self, other: &ClassFunction, g: &FiniteGroup) -> Cyclo {
        let cd = g.conjugacy();
        let mut acc = Cyclo::zero();
        for c in 0..cd.count() {
            let term = (&self.values[c] * &other.values[c].conj()).scale(&int(cd.size(c) as i64));
            acc += &term;
        }
        acc.scale(&Rational::new(1.into(), BigInt::from(g.order())))
    }

    /// Convolution `(f ∗ g)(w) = Σ_u f(u) g(u⁻¹w)`, assembled from class
    /// multiplication constants.
    pub fn convolve(&self, other: &ClassFunction, g: &FiniteGroup) -> ClassFunction {
        let r = g.conjugacy().count();
        let consts = g.class_structure_constants();
        let values = (0..r)
            .map(|k| {
                let mut acc = Cyclo::zero();
                for j in 0..r {
                    if self.values[j].is_zero() {
                        continue;
                    }
                    for l in 0..r {
                        let n = consts[(j * r + l) * r + k];
                        if n == 0 || other.values[l].is_zero() {
                            continue;
                        }
                        let term = (&self.values[j] * &other.values[l]).scale(&int(n as i64));
                        acc += &term;
                    }
                }
                acc
            })
            .collect();
        ClassFunction { values }
    }

    /// Convolution by the defining double loop over `G`; quadratic in `|G|`.
    pub fn convolve_direct(&self, other: &ClassFunction, g: &FiniteGroup) -> ClassFunction {
        let cd = g.conjugacy();
        let values = (0..cd.count())
            .map(|k| {
                let w = cd.representative(k);
                let mut acc = Cyclo::zero();
                for u in 0..g.order() {
                    let v = g.mul(g.inv(u), w);
                    acc += &(&self.values[cd.class_of(u)] * &other.values[cd.class_of(v)]);
                }
                acc
            })
            .collect();
        ClassFunction { values }
    }
}

/// Exact irreducible characters of a finite group.
///
/// Rows are irreducible characters ordered by degree, then lexicographically
/// by their canonical coefficient sequences along the classes; columns follow
/// the group's class order. All values live in `Q(ζ_e)` with `e` the exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    order: usize,
    class_sizes: Vec<usize>,
    inverse_class: Vec<usize>,
    conductor: u32,
    values: Vec<Vec<Cyclo>>,
    dims: Vec<u64>,
}

impl CharacterTable {
    pub fn compute(g: &FiniteGroup) -> Result<Self> {
        Self::compute_with(g, &Config::default())
    }

    pub fn compute_with(g: &FiniteGroup, config: &Config) -> Result<Self> {
        if g.order() > config.group_cap {
            return Err(Error::TooLarge {
                what: "group for character table".into(),
                size: g.order() as u128,
                bound: config.group_cap as u128,
            });
        }
        let mut rows = dixon::irreducible_characters(g)?;
        let mut keyed: Vec<(u64, Vec<Rational>, Vec<Cyclo>)> = rows
            .drain(..)
            .map(|row| {
                let d = row[0].to_rational().ok().and_then(|d| d.to_integer().to_u64()).unwrap_or(0);
                let key = row.iter().flat_map(|v| v.coeffs().to_vec()).collect();
                (d, key, row)
            })
            .collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        let dims = keyed.iter().map(|k| k.0).collect();
        let values = keyed.into_iter().map(|k| k.2).collect();
        let table = Self::from_parts(g, g.exponent(), values, dims);
        table.validate()?;
        Ok(table)
    }

    /// Assembles a table from stored values (e.g. a cache file). Call
    /// [`CharacterTable::validate`] before trusting it.
    pub fn from_parts(g: &FiniteGroup, conductor: u32, values: Vec<Vec<Cyclo>>, dims: Vec<u64>) -> Self {
        let cd = g.conjugacy();
        CharacterTable {
            order: g.order(),
            class_sizes: cd.sizes(),
            inverse_class: (0..cd.count()).map(|c| cd.inverse_class(c)).collect(),
            conductor,
            values,
            dims,
        }
    }

    /// Checks both orthogonality relations, `Σ dim² = |G|`, squareness and
    /// the stored degrees, all exactly.
    pub fn validate(&self) -> Result<()> {
        let r = self.class_sizes.len();
        let fail = |m: String| Err(Error::InternalInconsistency(m));
        if self.values.len() != r || self.values.iter().any(|row| row.len() != r) || self.dims.len() != r {
            return fail(format!("table is not {} x {}", r, r));
        }
        for (i, row) in self.values.iter().enumerate() {
            if row[0] != Cyclo::from_i64(self.dims[i] as i64) {
                return fail(format!("row {} has degree {} but value {} at the identity", i, self.dims[i], row[0]));
            }
        }
        let sum_sq: u64 = self.dims.iter().map(|d| d * d).sum();
        if sum_sq != self.order as u64 {
            return fail(format!("sum of squared degrees is {}, group order {}", sum_sq, self.order));
        }
        for i in 0..r {
            for j in i..r {
                let mut acc = Cyclo::zero();
                for c in 0..r {
                    let t = (&self.values[i][c] * &self.values[j][c].conj()).scale(&int(self.class_sizes[c] as i64));
                    acc += &t;
                }
                let expected = if i == j { self.order as i64 } else { 0 };
                if acc != Cyclo::from_i64(expected) {
                    return fail(format!("row orthogonality fails for ({}, {})", i, j));
                }
            }
        }
        for c in 0..r {
            for c2 in c..r {
                let mut acc = Cyclo::zero();
                for row in &self.values {
                    acc += &(&row[c] * &row[c2].conj());
                }
                let expected = if c == c2 { (self.order / self.class_sizes[c]) as i64 } else { 0 };
                if acc != Cyclo::from_i64(expected) {
                    return fail(format!("column orthogonality fails for ({}, {})", c, c2));
                }
            }
        }
        Ok(())
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn num_irreps(&self) -> usize {
        self.values.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn dim(&self, i: usize) -> u64 {
        self.dims[i]
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn value(&self, i: usize, class: usize) -> &Cyclo {
        &self.values[i][class]
    }

    pub fn rows(&self) -> &[Vec<Cyclo>] {
        &self.values
    }

    pub fn character(&self, i: usize) -> ClassFunction {
        ClassFunction::new(self.values[i].clone())
    }

    /// Index of the trivial character (all ones).
    pub fn trivial_index(&self) -> usize {
        let one = Cyclo::from_i64(1);
        self.values
            .iter()
            .position(|row| row.iter().all(|v| *v == one))
            .expect("a character table contains the trivial character")
    }

    /// `dim Hom_G(π_i, C[X]) = (1/|G|) Σ_c |c| conj(χ_i(c)) #X^c`.
    pub fn multiplicity(&self, i: usize, g: &FiniteGroup, x: &GSet) -> Result<u64> {
        let perm = ClassFunction::permutation_character(g, x);
        self.multiplicity_in(i, &perm, g)
    }

    /// Multiplicity of irrep `i` in a character given as a class function.
    pub fn multiplicity_in(&self, i: usize, f: &ClassFunction, g: &FiniteGroup) -> Result<u64> {
        let ip = f.inner_product(&self.character(i), g);
        let r = ip.to_rational()?;
        as_nonnegative_integer(&r)
            .and_then(|n| n.to_u64())
            .ok_or_else(|| Error::InternalInconsistency(format!("multiplicity {} is not a nonnegative integer", r)))
    }

    /// Multiplicity of every irrep in `C[X]`.
    pub fn multiplicities(&self, g: &FiniteGroup, x: &GSet) -> Result<Vec<u64>> {
        let perm = ClassFunction::permutation_character(g, x);
        (0..self.num_irreps()).map(|i| self.multiplicity_in(i, &perm, g)).collect()
    }
}
