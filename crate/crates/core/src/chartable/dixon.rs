//! Burnside–Dixon–Schneider: central characters as simultaneous eigenvectors
//! of the class matrices over `F_p`, lifted to cyclotomic integers.

use super::modp::{is_prime, Fp};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numeric::{int, Cyclotomic, Rational};

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > 2·sqrt(order)`.
pub fn choose_prime(exponent: u64, order: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if p * p > 4 * order && is_prime(p) {
            return p;
        }
        p += exponent;
    }
}

/// Character values (irrep × class), not yet sorted.
pub(crate) fn irreducible_characters(g: &FiniteGroup) -> Result<Vec<Vec<Cyclotomic<Rational>>>> {
    let cd = g.conjugacy();
    let r = cd.count();
    let n = g.order() as u64;
    let e = g.exponent();
    let p = choose_prime(e as u64, n);
    if p >= 1 << 31 {
        return Err(Error::TooLarge {
            what: "Dixon prime".into(),
            size: p as u128,
            bound: 1 << 31,
        });
    }
    let fp = Fp::new(p);

    let central = central_characters(g, &fp)?;
    if central.len() != r {
        return Err(Error::InternalInconsistency(format!(
            "found {} central characters for {} classes",
            central.len(),
            r
        )));
    }

    let z = fp.pow(fp.primitive_root(), (p - 1) / e as u64);
    let sizes_inv: Vec<u64> = (0..r).map(|c| fp.inv(cd.size(c) as u64 % p)).collect();
    let mut table = Vec::with_capacity(r);
    for omega in central {
        // Σ_c ω_c ω_{c*} / |c| = |G| / d²
        let s = (0..r).fold(0, |acc, c| {
            let t = fp.mul(fp.mul(omega[c], omega[cd.inverse_class(c)]), sizes_inv[c]);
            fp.add(acc, t)
        });
        if s == 0 {
            return Err(Error::InternalInconsistency("degenerate central character".into()));
        }
        let d_sq = fp.mul(n % p, fp.inv(s));
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|&d| (d * d) % p == d_sq)
            .ok_or_else(|| Error::InternalInconsistency("no integral degree for central character".into()))?;
        let chi_p: Vec<u64> = (0..r)
            .map(|c| fp.mul(fp.mul(omega[c], d % p), sizes_inv[c]))
            .collect();

        let mut row = Vec::with_capacity(r);
        for c in 0..r {
            let o = cd.element_order(c) as u64;
            let zo = fp.pow(z, e as u64 / o);
            let o_inv = fp.inv(o % p);
            let mut powers = vec![Rational::from_integer(0.into()); e as usize];
            let mut total = 0u64;
            for u in 0..o {
                let mut m = 0;
                for s in 0..o {
                    let w = fp.pow(zo, (o - (u * s) % o) % o);
                    m = fp.add(m, fp.mul(chi_p[cd.power_class(c, s as i64)], w));
                }
                let m = fp.mul(m, o_inv);
                if m > d {
                    return Err(Error::InternalInconsistency(format!(
                        "eigenvalue multiplicity {} exceeds degree {}",
                        m, d
                    )));
                }
                total += m;
                powers[(u * (e as u64 / o)) as usize] = int(m as i64);
            }
            if total != d {
                return Err(Error::InternalInconsistency("eigenvalue multiplicities do not sum to the degree".into()));
            }
            row.push(Cyclotomic::from_powers(e, powers));
        }
        table.push(row);
    }
    Ok(table)
}

/// Normalised (`ω(identity class) = 1`) central characters mod p, found by
/// splitting `F_p^r` into common eigenspaces of the class matrices taken in
/// class order.
fn central_characters(g: &FiniteGroup, fp: &Fp) -> Result<Vec<Vec<u64>>> {
    let r = g.conjugacy().count();
    let consts = g.class_structure_constants();
    // A_j[l][k] = c_{j l k}; acts on column vectors w with A_j w = ω_j w.
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        (0..r)
            .map(|l| (0..r).map(|k| consts[(j * r + l) * r + k] % fp.p).collect())
            .collect()
    };

    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for j in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let a = class_matrix(j);
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let pieces = split_space(fp, &a, basis)?;
            next.extend(pieces);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::InternalInconsistency("class matrices failed to separate all eigenspaces".into()));
    }
    spaces
        .into_iter()
        .map(|mut s| {
            let v = s.pop().unwrap();
            if v[0] == 0 {
                return Err(Error::InternalInconsistency("eigenvector vanishes on the identity class".into()));
            }
            let inv = fp.inv(v[0]);
            Ok(v.into_iter().map(|x| fp.mul(x, inv)).collect())
        })
        .collect()
}

/// Splits the invariant subspace spanned by `basis` (rows, RREF) into the
/// eigenspaces of `a`, in ascending eigenvalue order.
fn split_space(fp: &Fp, a: &[Vec<u64>], mut basis: Vec<Vec<u64>>) -> Result<Vec<Vec<Vec<u64>>>> {
    let pivots = fp.rref(&mut basis);
    let d = basis.len();
    let r = a.len();
    // images of the basis vectors under a, in coordinates
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..r)
                .map(|l| a[l].iter().zip(b).fold(0, |acc, (&x, &y)| fp.add(acc, fp.mul(x, y))))
                .collect()
        })
        .collect();
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
        .collect();
    let eigenvalues = fp.roots(&fp.charpoly(&restricted))?;
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Vec<Vec<u64>> = restricted
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { fp.sub(x, lambda) } else { x })
                    .collect()
            })
            .collect();
        let coords = fp.nullspace(&shifted);
        total += coords.len();
        let mut vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                (0..r)
                    .map(|i| {
                        c.iter()
                            .zip(&basis)
                            .fold(0, |acc, (&ct, b)| fp.add(acc, fp.mul(ct, b[i])))
                    })
                    .collect()
            })
            .collect();
        fp.rref(&mut vectors);
        out.push(vectors);
    }
    if total != d {
        return Err(Error::InternalInconsistency("class matrix is not diagonalisable over F_p".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        // S_3: exponent 6, order 6 -> p ≡ 1 mod 6, p > 4.9
        assert_eq!(choose_prime(6, 6), 7);
        // GL_3(F_2): exponent 84
        assert_eq!(choose_prime(84, 168), 337);
        // GL_2(F_4): exponent 30
        assert_eq!(choose_prime(30, 180), 31);
        assert_eq!(choose_prime(1, 1), 3);
    }
}
