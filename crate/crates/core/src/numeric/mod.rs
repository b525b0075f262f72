//! Exact arithmetic carriers.
//!
//! [`Cyclotomic`] and [`LaurentPoly`] are generic over their coefficient type.
//! Everything in the library instantiates them with [`Rational`]; the `f64`
//! instantiation is handy for numeric cross-checks.

mod cyclotomic;
mod laurent;
mod phi;

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num};

pub use cyclotomic::Cyclotomic;
pub use laurent::LaurentPoly;
pub use phi::{cyclotomic_polynomial, euler_phi};

/// Coefficient ring for the generic carriers.
///
/// Division is only ever used by a monic divisor's leading coefficient or by
/// nonzero values of an exact field, so any field-like `Num` qualifies.
pub trait Scalar: Num + Clone + Neg<Output = Self> + FromPrimitive + Debug {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + FromPrimitive + Debug {}

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

/// Returns the integer value of `r` if it is a nonnegative integer.
pub fn as_nonnegative_integer(r: &Rational) -> Option<BigInt> {
    if r.is_integer() && r.numer() >= &BigInt::from(0) {
        Some(r.to_integer())
    } else {
        None
    }
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
