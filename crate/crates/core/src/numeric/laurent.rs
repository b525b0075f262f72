use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::Scalar;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in one variable.
///
/// Zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct LaurentPoly<T> {
    var: String,
    terms: BTreeMap<i64, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero_in(var: &str) -> Self {
        LaurentPoly { var: var.to_string(), terms: BTreeMap::new() }
    }

    pub fn constant(var: &str, c: T) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `c * var^e`.
    pub fn monomial(var: &str, c: T, e: i64) -> Self {
        let mut p = Self::zero_in(var);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable itself.
    pub fn var(var: &str) -> Self {
        Self::monomial(var, T::one(), 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(var: &str, terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut p = Self::zero_in(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn variable(&self) -> &str {
        &self.var
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> T {
        self.terms.get(&e).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative exponent occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    fn add_term(&mut self, e: i64, c: T) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_terms(&self.var, self.terms().map(|(e, c)| (e, c.clone() * s.clone())))
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.var, T::one());
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

    /// Evaluates at `x`; `ZeroBase` if `x = 0` meets a negative exponent.
    pub fn eval(&self, x: &T) -> Result<T> {
        if x.is_zero() {
            if !self.is_polynomial() {
                return Err(Error::ZeroBase);
            }
            return Ok(self.coeff(0));
        }
        let mut acc = T::zero();
        for (&e, c) in &self.terms {
            let p = num_traits::pow(x.clone(), e.unsigned_abs() as usize);
            let term = if e >= 0 { c.clone() * p } else { c.clone() / p };
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero_in(&self.var));
        }
        let dlo = divisor.min_exponent().unwrap();
        let dhi = divisor.max_exponent().unwrap();
        let lead = divisor.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero_in(&self.var);
        let lo = rem.min_exponent().unwrap();
        // Long division from the top; the remainder's support must stay above
        // `lo` for the quotient to be exact.
        while let Some(top) = rem.max_exponent() {
            if top - (dhi - dlo) < lo {
                return Err(Error::InternalInconsistency(format!(
                    "inexact polynomial division, remainder {}",
                    RenderDebug(&rem)
                )));
            }
            let c = rem.terms[&top].clone() / lead.clone();
            let shift = top - dhi;
            quot.add_term(shift, c.clone());
            for (&e, dc) in &divisor.terms {
                rem.add_term(e + shift, -(c.clone() * dc.clone()));
            }
        }
        Ok(quot)
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero_in(&self.var);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

struct RenderDebug<'a, T>(&'a LaurentPoly<T>);

impl<T: fmt::Debug> fmt::Display for RenderDebug<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.terms)
    }
}

impl<T: Scalar> PartialEq for LaurentPoly<T> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<T: Scalar> Add for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: Self) -> LaurentPoly<T> {
        self.add_ref(rhs)
    }
}

impl<T: Scalar> Add for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn add(self, rhs: Self) -> LaurentPoly<T> {
        self.add_ref(&rhs)
    }
}

impl<T: Scalar> Neg for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn neg(self) -> LaurentPoly<T> {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Sub for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        self.add_ref(&-rhs)
    }
}

impl<T: Scalar> Sub for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn sub(self, rhs: Self) -> LaurentPoly<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for &LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        self.mul_ref(rhs)
    }
}

impl<T: Scalar> Mul for LaurentPoly<T> {
    type Output = LaurentPoly<T>;
    fn mul(self, rhs: Self) -> LaurentPoly<T> {
        self.mul_ref(&rhs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for LaurentPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match *e {
                0 => write!(f, "{}", c)?,
                1 if c.is_one() => write!(f, "{}", self.var)?,
                1 => write!(f, "({})*{}", c, self.var)?,
                _ if c.is_one() => write!(f, "{}^{}", self.var, e)?,
                _ => write!(f, "({})*{}^{}", c, self.var, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{int, rat, Rational};
    use proptest::prelude::*;

    type P = LaurentPoly<Rational>;

    fn q() -> P {
        P::var("q")
    }

    fn one() -> P {
        P::constant("q", int(1))
    }

    #[test]
    fn evaluation_examples() {
        let p = &q().pow(2) - &one();
        assert_eq!(p.eval(&int(2)).unwrap(), int(3));
        let r = p.shift(-1);
        assert_eq!(r.eval(&int(2)).unwrap(), rat(3, 2));
        assert_eq!(r.eval(&int(0)), Err(Error::ZeroBase));
        assert_eq!(p.eval(&int(0)).unwrap(), int(-1));
    }

    #[test]
    fn gl2_order_at_three() {
        // |GL_2(F_3)| counted directly: nonzero first rows times rows off their span.
        let mut count = 0;
        for m in 0..81u32 {
            let (a, b, c, d) = (m % 3, (m / 3) % 3, (m / 9) % 3, m / 27);
            if (a * d + 3 * 3 - b * c) % 3 != 0 {
                count += 1;
            }
        }
        assert_eq!(count, 48);
        let order = &(&q().pow(2) - &one()) * &(&q().pow(2) - &q());
        assert_eq!(order.eval(&int(3)).unwrap(), int(count));
    }

    #[test]
    fn exact_division() {
        let a = &q().pow(3) - &one();
        let b = &q() - &one();
        let quot = a.div_exact(&b).unwrap();
        assert_eq!(quot, &(&q().pow(2) + &q()) + &one());
        let c = &q().pow(2) + &one();
        assert!(matches!(a.div_exact(&c), Err(Error::InternalInconsistency(_))));
        let shifted = a.shift(-4).div_exact(&b.shift(2)).unwrap();
        assert_eq!(shifted, quot.shift(-6));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = &q() - &q();
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
    }

    #[test]
    fn generic_over_f64() {
        let p = LaurentPoly::<f64>::from_terms("q", [(2, 1.0), (-1, 0.5)]);
        assert!((p.eval(&2.0).unwrap() - 4.25).abs() < 1e-12);
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-4i64..=6, -6i64..=6), 0..6)
            .prop_map(|ts| P::from_terms("q", ts.into_iter().map(|(e, c)| (e, int(c)))))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly(), x in 1i64..5) {
            let x = int(x);
            prop_assert_eq!((&a * &b).eval(&x).unwrap(), a.eval(&x).unwrap() * b.eval(&x).unwrap());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }
}
