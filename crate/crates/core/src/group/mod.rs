//! Finite groups given by full multiplication tables, their conjugacy
//! structure, and finite G-sets.

mod builtin;
mod closure;
mod conjugacy;
mod gset;
mod perm;

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use builtin::{alternating, cyclic, dihedral, quaternion, symmetric};
pub use closure::{close_under, group_from_perm_generators, PermutationGroup};
pub use conjugacy::ConjugacyData;
pub use gset::GSet;
pub use perm::Permutation;

use crate::error::{Error, Result};

/// Element handle: an index into the multiplication table. `0` is the identity.
pub type Element = usize;

/// A finite group stored as an `n × n` multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    labels: Vec<String>,
    element_orders: Vec<u32>,
    exponent: u32,
    classes: ConjugacyData,
    structure: OnceLock<Vec<u64>>,
}

impl FiniteGroup {
    /// Builds a group from a table known to come from an actual group
    /// (e.g. a closure of permutations). Only the cheap checks run.
    pub(crate) fn from_trusted_table(order: usize, table: Vec<u32>, labels: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row.iter().position(|&x| x == 0).expect("every row contains the identity");
            inverse[a] = b as u32;
        }
        let mut element_orders = vec![0u32; order];
        for (a, slot) in element_orders.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table[x * order + a] as usize;
                k += 1;
            }
            *slot = k;
        }
        let exponent = element_orders
            .iter()
            .fold(1u32, |acc, &o| num_integer::lcm(acc, o));
        let mut g = FiniteGroup {
            order,
            table,
            inverse,
            labels,
            element_orders,
            exponent,
            classes: ConjugacyData::empty(),
            structure: OnceLock::new(),
        };
        g.classes = ConjugacyData::compute(&g);
        g
    }

    /// Builds a group from an arbitrary Cayley table, validating the group
    /// axioms. Elements are relabelled so that the identity becomes index 0.
    ///
    /// Associativity is checked exhaustively up to order 512 and by
    /// 10^6 seeded random triples above.
    pub fn from_cayley(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty Cayley table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!("row {} has length {}, expected {}", i, row.len(), n)));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || seen[x] {
                    return Err(Error::InvalidInput(format!("row {} is not a permutation of 0..{}", i, n)));
                }
                seen[x] = true;
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for row in rows {
                if seen[row[c]] {
                    return Err(Error::InvalidInput(format!("column {} repeats an entry", c)));
                }
                seen[row[c]] = true;
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::InvalidInput("Cayley table has no two-sided identity".into()))?;
        let assoc = |a: usize, b: usize, c: usize| rows[rows[a][b]][c] == rows[a][rows[b][c]];
        if n <= 512 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidInput(format!(
                                "associativity fails at ({}, {}, {})",
                                a, b, c
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..1_000_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidInput(format!("associativity fails at ({}, {}, {})", a, b, c)));
                }
            }
        }
        // swap the identity into slot 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]) as u32;
            }
        }
        let labels = (0..n).map(|i| relabel(i).to_string()).collect();
        Ok(Self::from_trusted_table(n, table, labels))
    }

    /// Direct product `self × other`; the pair `(a, b)` has index `a * |other| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.order, other.order);
        let n = n1 * n2;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            let (a1, b1) = (x / n2, x % n2);
            for y in 0..n {
                let (a2, b2) = (y / n2, y % n2);
                table[x * n + y] = (self.mul(a1, a2) * n2 + other.mul(b1, b2)) as u32;
            }
        }
        let labels = (0..n)
            .map(|x| format!("({}, {})", self.label(x / n2), other.label(x % n2)))
            .collect();
        FiniteGroup::from_trusted_table(n, table, labels)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a] as usize
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    #[inline]
    pub fn commutator(&self, a: Element, b: Element) -> Element {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(ab, self.inv(ba))
    }

    pub fn pow(&self, a: Element, k: i64) -> Element {
        let base = if k < 0 { self.inv(a) } else { a };
        let k = k.unsigned_abs() % self.element_orders[a] as u64;
        (0..k).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn conjugate(&self, g: Element, by: Element) -> Element {
        self.mul(self.mul(by, g), self.inv(by))
    }

    pub fn element_order(&self, a: Element) -> u32 {
        self.element_orders[a]
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn label(&self, a: Element) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.count() == self.order
    }

    pub fn conjugacy(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn class_of(&self, g: Element) -> usize {
        self.classes.class_of(g)
    }

    /// Class multiplication constants, flattened as `[j][l][k]`:
    /// the number of `x` in class `j` with `x⁻¹ z` in class `l`, for a fixed
    /// `z` in class `k`. Equivalently `#{(x, y) ∈ C_j × C_l : xy = z}`.
    pub fn class_structure_constants(&self) -> &[u64] {
        self.structure.get_or_init(|| {
            let cd = &self.classes;
            let r = cd.count();
            let mut out = vec![0u64; r * r * r];
            for k in 0..r {
                let z = cd.representative(k);
                for x in 0..self.order {
                    let j = cd.class_of(x);
                    let l = cd.class_of(self.mul(self.inv(x), z));
                    out[(j * r + l) * r + k] += 1;
                }
            }
            out
        })
    }

    pub fn structure_constant(&self, j: usize, l: usize, k: usize) -> u64 {
        let r = self.classes.count();
        self.class_structure_constants()[(j * r + l) * r + k]
    }

    /// Raw row-major table, used for content hashing.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Elements of the subgroup generated by `gens`, in BFS discovery order.
    pub fn subgroup(&self, gens: &[Element]) -> Vec<Element> {
        let mut members = vec![0];
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_table_of_c3_with_identity_elsewhere() {
        // identity is element 2 here
        let rows = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_cayley(&rows).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), g.inv(1));
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn non_groups_are_rejected() {
        let not_latin = vec![vec![0, 1], vec![1, 1]];
        assert!(FiniteGroup::from_cayley(&not_latin).is_err());
        // a Latin square without associativity (quasigroup of order 3 with identity is a group,
        // so use order 5 loop)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_cayley(&loop5).is_err());
    }

    #[test]
    fn commutators() {
        let s3 = symmetric(3);
        let g = &s3.group;
        for a in 0..6 {
            assert_eq!(g.commutator(a, a), 0);
        }
        let t = s3.element("(1 2)").unwrap();
        let c = s3.element("(1 2 3)").unwrap();
        let k = g.commutator(t, c);
        assert_eq!(g.element_order(k), 3);
        let c4 = cyclic(4);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(c4.group.commutator(a, b), 0);
            }
        }
    }

    #[test]
    fn direct_product_structure() {
        let s3 = symmetric(3).group;
        let c2 = cyclic(2).group;
        let p = s3.direct_product(&c2);
        assert_eq!(p.order(), 12);
        assert_eq!(p.conjugacy().count(), 6);
        assert_eq!(p.exponent(), 6);
    }
}
