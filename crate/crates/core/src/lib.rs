//! Exact computations around the relative Frobenius counting formula for a
//! finite group `G` acting on a finite set `X`.
//!
//! The crate evaluates character sums over `Irr G` with exact cyclotomic
//! arithmetic and checks them against brute-force enumeration of commutator
//! and stabilizer tuples. On top of that it decides the Gelfand property by
//! three independent routes, counts framed surface-group representations and
//! their groupoid volumes, and evaluates the closed hook-length formulas for
//! `GL_n(F_q)` acting on complete flags.
//!
//! Arithmetic carriers are generic over the coefficient type; the aliases
//! below fix them to exact rationals, which is what the rest of the crate
//! uses.

pub mod chartable;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod fock_goncharov;
pub mod frobenius;
pub mod gelfand;
pub mod gln;
pub mod group;
pub mod numeric;
pub mod spherical;
pub mod battery;

pub use chartable::{CharacterTable, ClassFunction};
pub use config::Config;
pub use error::{Error, Result};
pub use fock_goncharov::SurfaceType;
pub use frobenius::RelativeInstance;
pub use group::{Element, FiniteGroup, GSet, Permutation, PermutationGroup};
pub use numeric::{Cyclotomic, LaurentPoly, Rational, Scalar};

/// Cyclotomic number with exact rational coefficients.
pub type Cyclo = Cyclotomic<Rational>;

/// Laurent polynomial with exact rational coefficients.
pub type QPoly = LaurentPoly<Rational>;
