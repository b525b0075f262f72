use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::phi::{cyclotomic_polynomial, euler_phi};
use super::Scalar;
use crate::error::{Error, Result};

/// An element of `Q(ζ_N)` written in the power basis `1, ζ, …, ζ^(φ(N)-1)`.
///
/// The coefficient vector always has length `φ(N)` and is fully reduced
/// modulo the `N`-th cyclotomic polynomial, so two values of the same
/// conductor are equal exactly when their coefficient vectors are.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    conductor: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> Cyclotomic<T> {
    pub fn from_scalar(c: T) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![c] }
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_scalar(T::from_i64(c).expect("integer fits the scalar type"))
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1);
        let mut powers = vec![T::zero(); n as usize];
        powers[k.rem_euclid(n as i64) as usize] = T::one();
        Self::from_powers(n, powers)
    }

    /// Builds `Σ powers[i] ζ_n^i` for an arbitrary-length power vector.
    pub fn from_powers(n: u32, powers: Vec<T>) -> Self {
        Cyclotomic { conductor: n, coeffs: reduce(n, powers) }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical-basis coefficients, constant term first.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Re-expresses the value in `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(
            m % self.conductor == 0,
            "cannot embed conductor {} into {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut powers = vec![T::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            powers[i * step] = c.clone();
        }
        Self::from_powers(m, powers)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m))
    }

    /// Complex conjugation `ζ ↦ ζ^(-1)`.
    pub fn conj(&self) -> Self {
        let n = self.conductor as usize;
        let mut powers = vec![T::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            powers[(n - i) % n] = c.clone();
        }
        Self::from_powers(self.conductor, powers)
    }

    /// Galois action `ζ ↦ ζ^j`, `j` coprime to the conductor.
    pub fn galois(&self, j: i64) -> Self {
        let n = self.conductor as i64;
        let mut powers = vec![T::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as i64 * j).rem_euclid(n) as usize;
            powers[e] = powers[e].clone() + c.clone();
        }
        Self::from_powers(self.conductor, powers)
    }

    pub fn scale(&self, s: &T) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The value as a scalar, or `NotRational` if any irrational basis
    /// coefficient is nonzero.
    pub fn to_rational(&self) -> Result<T> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(format!("{:?}", self)))
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        Cyclotomic {
            conductor: a.conductor,
            coeffs: a
                .coeffs
                .into_iter()
                .zip(b.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let n = a.conductor as usize;
        let mut powers = vec![T::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let e = (i + j) % n;
                powers[e] = powers[e].clone() + x.clone() * y.clone();
            }
        }
        Self::from_powers(a.conductor, powers)
    }
}

impl<T: Scalar + ToPrimitive> Cyclotomic<T> {
    /// Image under the complex embedding `ζ_N ↦ exp(2πi j / N)`.
    pub fn embedding(&self, j: i64) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = 2.0 * std::f64::consts::PI * (i as f64) * (j as f64) / n;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }

    /// Principal complex value.
    pub fn to_complex(&self) -> (f64, f64) {
        self.embedding(1)
    }
}

/// Folds a power vector modulo `x^n - 1`, then reduces by `Φ_n`.
fn reduce<T: Scalar>(n: u32, powers: Vec<T>) -> Vec<T> {
    let n_us = n as usize;
    let mut v: Vec<T> = if powers.len() == n_us {
        powers
    } else {
        let mut v = vec![T::zero(); n_us];
        for (i, c) in powers.into_iter().enumerate() {
            let e = i % n_us;
            v[e] = v[e].clone() + c;
        }
        v
    };
    let phi = cyclotomic_polynomial(n);
    let deg = euler_phi(n) as usize;
    for top in (deg..n_us).rev() {
        let c = std::mem::replace(&mut v[top], T::zero());
        if c.is_zero() {
            continue;
        }
        // x^top = x^(top-deg) * (x^deg) and x^deg = -(Φ - x^deg)
        for (j, &pj) in phi[..deg].iter().enumerate() {
            if pj != 0 {
                let idx = top - deg + j;
                let coef = T::from_i64(pj).expect("small integer");
                v[idx] = v[idx].clone() - c.clone() * coef;
            }
        }
    }
    v.truncate(deg);
    v
}

impl<T: Scalar> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl<T: Scalar + Eq> Eq for Cyclotomic<T> {}

impl<'a, T: Scalar> Add<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self.add_ref(rhs)
    }
}

impl<T: Scalar> Add for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn add(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
        self.add_ref(&rhs)
    }
}

impl<T: Scalar> AddAssign<&Cyclotomic<T>> for Cyclotomic<T> {
    fn add_assign(&mut self, rhs: &Cyclotomic<T>) {
        *self = self.add_ref(rhs);
    }
}

impl<T: Scalar> Neg for &Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}

impl<'a, T: Scalar> Sub<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self.add_ref(&-rhs)
    }
}

impl<T: Scalar> Sub for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn sub(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
        &self - &rhs
    }
}

impl<'a, T: Scalar> Mul<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Scalar> Mul for Cyclotomic<T> {
    type Output = Cyclotomic<T>;
    fn mul(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
        self.mul_ref(&rhs)
    }
}

impl<T: Scalar> Zero for Cyclotomic<T> {
    fn zero() -> Self {
        Self::from_scalar(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<T: Scalar> One for Cyclotomic<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                _ if c.is_one() => write!(f, "z{}^{}", self.conductor, i)?,
                _ => write!(f, "({})*z{}^{}", c, self.conductor, i)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat, Rational};
    use proptest::prelude::*;

    type Q = Cyclotomic<Rational>;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    #[test]
    fn cube_roots_of_unity_sum_to_zero() {
        let s = &(&Q::one() + &Q::zeta(3, 1)) + &Q::zeta(3, 2);
        assert!(s.is_zero());
        assert_eq!(s.support(), 0);
    }

    #[test]
    fn conj_of_i_is_minus_i() {
        let i = Q::zeta(4, 1);
        assert_eq!(i.conj(), -&i);
        assert_eq!(i.conj(), Q::zeta(4, 3));
    }

    #[test]
    fn zeta6_squared_is_zeta3() {
        let z6 = Q::zeta(6, 1);
        let sq = &z6 * &z6;
        assert_eq!(sq.conductor(), 6);
        assert_eq!(sq, Q::zeta(3, 1));
        assert!(close(sq.to_complex(), Q::zeta(3, 1).to_complex()));
        let angle = 2.0 * std::f64::consts::PI / 3.0;
        assert!(close(sq.to_complex(), (angle.cos(), angle.sin())));
    }

    #[test]
    fn rational_conversion() {
        assert_eq!(Q::from_scalar(rat(3, 2)).to_rational().unwrap(), rat(3, 2));
        let s = &Q::zeta(3, 1) + &Q::zeta(3, 2);
        assert_eq!(s.to_rational().unwrap(), int(-1));
        assert!(matches!(Q::zeta(5, 1).to_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn embedding_preserves_value() {
        let a = &Q::zeta(3, 1) + &Q::from_scalar(rat(1, 2));
        let b = a.embed(12);
        assert_eq!(b.conductor(), 12);
        assert_eq!(a, b);
        assert!(close(a.to_complex(), b.to_complex()));
    }

    #[test]
    fn sum_of_primitive_fifth_roots() {
        let mut s = Q::zero();
        for k in 1..5 {
            s += &Q::zeta(5, k);
        }
        assert_eq!(s.to_rational().unwrap(), int(-1));
    }

    fn arb_cyclo() -> impl Strategy<Value = Q> {
        (
            prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12]),
            prop::collection::vec(-5i64..=5, 12),
        )
            .prop_map(|(n, cs)| {
                let powers = cs.into_iter().map(int).collect();
                Q::from_powers(n, powers)
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn conj_is_involution(a in arb_cyclo()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!((&a - &a).support(), 0);
        }

        #[test]
        fn norm_has_nonnegative_embeddings(a in arb_cyclo()) {
            let n = &a * &a.conj();
            let m = n.conductor() as i64;
            for j in 1..=m {
                if num_integer::gcd(j, m) == 1 {
                    let (re, im) = n.embedding(j);
                    prop_assert!(re > -1e-9);
                    prop_assert!(im.abs() < 1e-9);
                }
            }
        }

        #[test]
        fn product_matches_numeric(a in arb_cyclo(), b in arb_cyclo()) {
            let (ar, ai) = a.to_complex();
            let (br, bi) = b.to_complex();
            let p = (&a * &b).to_complex();
            prop_assert!((p.0 - (ar * br - ai * bi)).abs() < 1e-8);
            prop_assert!((p.1 - (ar * bi + ai * br)).abs() < 1e-8);
        }
    }

    #[test]
    fn f64_instantiation_tracks_exact_values() {
        let a = Cyclotomic::<f64>::zeta(6, 1);
        let b = &a * &a;
        let c = Cyclotomic::<f64>::zeta(3, 1).embed(6);
        for (x, y) in b.coeffs().iter().zip(c.coeffs()) {
            assert!((x - y).abs() < 1e-12);
        }
    }
}
