use num_traits::{One, Zero};

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};
use crate::fock_goncharov::SurfaceType;
use crate::numeric::{int, LaurentPoly, Rational};

type QPoly = LaurentPoly<Rational>;

/// Which normalization of the hook-length `q`-analog to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormConvention {
    /// Group-order factor read as the full `#GL_n(F_q)`; differs from the
    /// group-theoretic value by `q^{n(n−1)/2}` per unipotent dimension.
    Literal,
    /// Group-order factor `Π (q^c − 1)`; matches computed decompositions.
    Corrected,
}

impl ClosedFormConvention {
    pub fn name(self) -> &'static str {
        match self {
            ClosedFormConvention::Literal => "literal",
            ClosedFormConvention::Corrected => "corrected",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "literal" | "paper" | "paper_literal" => Some(ClosedFormConvention::Literal),
            "corrected" => Some(ClosedFormConvention::Corrected),
            _ => None,
        }
    }
}

fn shifted_one(var: &str, e: i64) -> QPoly {
    // var^e − 1
    &QPoly::monomial(var, int(1), e) - &QPoly::constant(var, int(1))
}

fn n_choose_2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// `#GL_n(F_t) = Π_{c=0}^{n−1} (t^n − t^c)` as a polynomial in `var`.
pub fn gl_order_poly(n: usize, var: &str) -> QPoly {
    (0..n).fold(QPoly::constant(var, int(1)), |acc, c| {
        let f = &QPoly::monomial(var, int(1), n as i64) - &QPoly::monomial(var, int(1), c as i64);
        &acc * &f
    })
}

/// Dimension of the unipotent representation `R_λ` as a polynomial in `q`.
pub fn unipotent_dim(lambda: &Partition, convention: ClosedFormConvention) -> Result<QPoly> {
    let n = lambda.size();
    let numer = (1..=n).fold(QPoly::monomial("q", int(1), lambda.n_statistic() as i64), |acc, c| {
        &acc * &shifted_one("q", c as i64)
    });
    let denom = lambda
        .hook_lengths()
        .iter()
        .fold(QPoly::constant("q", int(1)), |acc, &h| &acc * &shifted_one("q", h as i64));
    let dim = numer.div_exact(&denom)?;
    Ok(match convention {
        ClosedFormConvention::Corrected => dim,
        ClosedFormConvention::Literal => dim.shift(n_choose_2(n)),
    })
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k))
}

fn hook_product(lambda: &Partition) -> Rational {
    lambda.hook_lengths().iter().fold(Rational::one(), |acc, &h| acc * int(h as i64))
}

/// Closed-form groupoid volume for `GL_n(F_q)` on complete flags, as a
/// Laurent polynomial in `q`. Requires `χ(S) ≤ 0`.
pub fn fg_vol_closed(n: usize, s: &SurfaceType, convention: ClosedFormConvention) -> Result<QPoly> {
    fg_vol_in(n, s, convention, "q")
}

fn fg_vol_in(n: usize, s: &SurfaceType, convention: ClosedFormConvention, var: &str) -> Result<QPoly> {
    let chi = s.euler_char();
    if chi > 0 {
        return Err(Error::NonPolynomial(format!(
            "the closed-form volume has denominators when the Euler characteristic is {}",
            chi
        )));
    }
    let m = s.punctures() as i32;
    let prefactor = num_traits::pow(factorial(n), m as usize);
    let mut total = QPoly::zero_in(var);
    for lambda in partitions(n) {
        let coeff = &prefactor / num_traits::pow(hook_product(&lambda), m as usize);
        let mut term = QPoly::monomial(var, coeff, lambda.n_statistic() as i64 * chi);
        for &h in &lambda.hook_lengths() {
            term = &term * &shifted_one(var, h as i64).pow((-chi) as u32);
        }
        total = &total + &term;
    }
    Ok(match convention {
        ClosedFormConvention::Literal => total,
        ClosedFormConvention::Corrected => total.shift(-chi * n_choose_2(n)),
    })
}

/// Closed-form volume evaluated at a numeric `q`; works for every Euler
/// characteristic.
pub fn fg_vol_closed_at(n: usize, s: &SurfaceType, convention: ClosedFormConvention, q: &Rational) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::ZeroBase);
    }
    let chi = s.euler_char();
    let m = s.punctures();
    let prefactor = num_traits::pow(factorial(n), m as usize);
    let qpow = |e: i64| -> Rational {
        let p = num_traits::pow(q.clone(), e.unsigned_abs() as usize);
        if e >= 0 {
            p
        } else {
            p.recip()
        }
    };
    let mut total = Rational::zero();
    for lambda in partitions(n) {
        let mut term = &prefactor / num_traits::pow(hook_product(&lambda), m as usize);
        term *= qpow(lambda.n_statistic() as i64 * chi);
        for &h in &lambda.hook_lengths() {
            let base = qpow(h as i64) - Rational::one();
            if base.is_zero() {
                return Err(Error::InvalidInput(format!("q = {} makes a hook factor vanish", q)));
            }
            let p = num_traits::pow(base, chi.unsigned_abs() as usize);
            term = if chi <= 0 { term * p } else { term / p };
        }
        total += term;
    }
    Ok(match convention {
        ClosedFormConvention::Literal => total,
        ClosedFormConvention::Corrected => total * qpow(-chi * n_choose_2(n)),
    })
}

/// E-polynomial in `t`: `#GL_n(F_t)` times the closed-form volume.
///
/// For the disk the volume itself has denominators, but each hook product
/// `Π (t^h − 1)` divides `#GL_n(F_t)`, so the product is still polynomial.
pub fn fg_epoly(n: usize, s: &SurfaceType, convention: ClosedFormConvention) -> Result<QPoly> {
    let order = gl_order_poly(n, "t");
    if s.euler_char() <= 0 {
        return Ok(&order * &fg_vol_in(n, s, convention, "t")?);
    }
    // χ = 1: genus 0, one puncture
    let mut total = QPoly::zero_in("t");
    for lambda in partitions(n) {
        let coeff = factorial(n) / hook_product(&lambda);
        let hooks = lambda
            .hook_lengths()
            .iter()
            .fold(QPoly::constant("t", int(1)), |acc, &h| &acc * &shifted_one("t", h as i64));
        let term = (&order * &QPoly::monomial("t", coeff, lambda.n_statistic() as i64)).div_exact(&hooks)?;
        total = &total + &term;
    }
    Ok(match convention {
        ClosedFormConvention::Literal => total,
        ClosedFormConvention::Corrected => total.shift(-n_choose_2(n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use ClosedFormConvention::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn surf(k: u32, m: u32) -> SurfaceType {
        SurfaceType::new(k, m).unwrap()
    }

    fn q() -> QPoly {
        QPoly::var("q")
    }

    #[test]
    fn unipotent_dimensions() {
        let one = QPoly::constant("q", int(1));
        assert_eq!(unipotent_dim(&p(&[2]), Corrected).unwrap(), one);
        assert_eq!(unipotent_dim(&p(&[1, 1]), Corrected).unwrap(), q());
        assert_eq!(unipotent_dim(&p(&[1, 1, 1]), Corrected).unwrap(), q().pow(3));
        // q² + q for the middle unipotent of GL_3
        assert_eq!(unipotent_dim(&p(&[2, 1]), Corrected).unwrap(), &q().pow(2) + &q());
        assert_eq!(unipotent_dim(&p(&[1, 1]), Literal).unwrap().eval(&int(2)).unwrap(), int(4));
    }

    #[test]
    fn q_to_one_gives_specht_dimensions() {
        for n in 1..=8 {
            for lambda in partitions(n) {
                let d = unipotent_dim(&lambda, Corrected).unwrap();
                assert!(d.is_polynomial());
                assert!(d.terms().all(|(_, c)| c.is_integer() && *c > Rational::zero()));
                assert_eq!(d.eval(&int(1)).unwrap(), int(lambda.specht_dim().unwrap() as i64));
            }
        }
    }

    #[test]
    fn closed_volume_examples() {
        let torus = surf(1, 1);
        let v = fg_vol_closed(2, &torus, Corrected).unwrap();
        let expected = (&q().pow(2) - &QPoly::constant("q", int(1))).pow(2);
        assert_eq!(v, expected);
        assert_eq!(fg_vol_closed_at(2, &torus, Corrected, &int(2)).unwrap(), int(9));
        assert_eq!(fg_vol_closed_at(2, &torus, Literal, &int(2)).unwrap(), rat(9, 2));
        assert_eq!(fg_vol_closed_at(2, &surf(0, 1), Corrected, &int(2)).unwrap(), rat(1, 2));
        assert!(matches!(fg_vol_closed(2, &surf(0, 1), Corrected), Err(Error::NonPolynomial(_))));
        assert_eq!(fg_vol_closed_at(2, &torus, Corrected, &int(0)), Err(Error::ZeroBase));
    }

    #[test]
    fn numeric_and_symbolic_agree() {
        for n in 1..=4 {
            for (k, m) in [(0, 2), (1, 1), (0, 3), (1, 2), (2, 1)] {
                let s = surf(k, m);
                for conv in [Corrected, Literal] {
                    let poly = fg_vol_closed(n, &s, conv).unwrap();
                    for qv in [2, 3, 4, 5] {
                        assert_eq!(poly.eval(&int(qv)).unwrap(), fg_vol_closed_at(n, &s, conv, &int(qv)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn literal_over_corrected_is_a_monomial() {
        for n in 1..=4 {
            for (k, m) in [(0, 2), (1, 1), (0, 3), (2, 1)] {
                let s = surf(k, m);
                let lit = fg_vol_closed(n, &s, Literal).unwrap();
                let cor = fg_vol_closed(n, &s, Corrected).unwrap();
                assert_eq!(lit, cor.shift(s.euler_char() * n_choose_2(n)));
            }
        }
    }

    #[test]
    fn epoly_examples() {
        let t = QPoly::var("t");
        let one = QPoly::constant("t", int(1));
        let t2m1 = &t.pow(2) - &one;
        let glo = &t2m1 * &(&t.pow(2) - &t);
        assert_eq!(gl_order_poly(2, "t"), glo);
        let e = fg_epoly(2, &surf(1, 1), Corrected).unwrap();
        assert_eq!(e, &glo * &t2m1.pow(2));
        assert_eq!(e.eval(&int(2)).unwrap(), int(54));
        assert_eq!(e.eval(&int(3)).unwrap(), int(3072));
        let e = fg_epoly(2, &surf(0, 2), Corrected).unwrap();
        assert_eq!(e, glo.scale(&int(2)));
        // the disk counts flags: #Fl(F_t^2) = t + 1
        let e = fg_epoly(2, &surf(0, 1), Corrected).unwrap();
        assert_eq!(e, &t + &one);
        assert_eq!(fg_epoly(2, &surf(0, 1), Literal).unwrap(), e.shift(1));
        let e3 = fg_epoly(3, &surf(0, 1), Corrected).unwrap();
        assert_eq!(e3.eval(&int(2)).unwrap(), int(21));
    }
}
