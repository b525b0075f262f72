use crate::chartable::is_prime;
use crate::error::{Error, Result};

/// A small finite field with elements `0..q` and table arithmetic.
///
/// Prime fields use residues; `F_4` encodes `a + b·ω` as `a + 2b` with
/// `ω² = ω + 1`.
#[derive(Debug, Clone)]
pub struct SmallField {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl SmallField {
    pub fn new(q: usize) -> Result<Self> {
        let (add, mul): (Vec<u8>, Vec<u8>) = if q >= 2 && q < 256 && is_prime(q as u64) {
            let idx = (0..q * q).map(|i| (i / q, i % q));
            (
                idx.clone().map(|(a, b)| ((a + b) % q) as u8).collect(),
                idx.map(|(a, b)| ((a * b) % q) as u8).collect(),
            )
        } else if q == 4 {
            let mul4 = |a: usize, b: usize| {
                // (a0 + a1 ω)(b0 + b1 ω), ω² = ω + 1
                let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
                let hi = a1 & b1;
                let c0 = (a0 & b0) ^ hi;
                let c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
                (c0 | (c1 << 1)) as u8
            };
            let idx = (0..16).map(|i| (i / 4, i % 4));
            (idx.clone().map(|(a, b)| (a ^ b) as u8).collect(), idx.map(|(a, b)| mul4(a, b)).collect())
        } else {
            return Err(Error::InvalidInput(format!("unsupported field size q = {}", q)));
        };
        Ok(SmallField { q, add, mul })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q as u8).find(|&b| self.mul(a, b) == 1)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for q in [2, 3, 4, 5, 7] {
            let f = SmallField::new(q).unwrap();
            let els: Vec<u8> = (0..q as u8).collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn f4_has_cube_roots_of_unity() {
        let f = SmallField::new(4).unwrap();
        let w = 2;
        assert_eq!(f.mul(w, f.mul(w, w)), 1);
        assert_eq!(f.mul(w, w), 3);
        assert!(SmallField::new(6).is_err());
    }
}
