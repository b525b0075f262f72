//! Prime-field arithmetic, polynomials and linear algebra over `F_p`.

use crate::error::{Error, Result};

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p) && p < (1 << 31));
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        let mut base = a % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Least generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .unwrap_or(1)
    }

    // ---- polynomials, constant term first, no trailing zeros ----

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn poly_sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        Self::trim(out)
    }

    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Self::trim(out)
    }

    /// Quotient and remainder; `b` must be nonzero.
    fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut rem = a.to_vec();
        if rem.len() < b.len() {
            return (Vec::new(), Self::trim(rem));
        }
        let lead_inv = self.inv(*b.last().unwrap());
        let mut quot = vec![0; rem.len() - b.len() + 1];
        for i in (0..quot.len()).rev() {
            let c = self.mul(rem[i + b.len() - 1], lead_inv);
            quot[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    rem[i + j] = self.sub(rem[i + j], self.mul(c, bj));
                }
            }
        }
        rem.truncate(b.len() - 1);
        (Self::trim(quot), Self::trim(rem))
    }

    fn monic(&self, a: Vec<u64>) -> Vec<u64> {
        match a.last() {
            None => a,
            Some(&l) => {
                let li = self.inv(l);
                a.into_iter().map(|c| self.mul(c, li)).collect()
            }
        }
    }

    fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut a = Self::trim(a.to_vec());
        let mut b = Self::trim(b.to_vec());
        while !b.is_empty() {
            let (_, r) = self.poly_divrem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(a)
    }

    fn poly_powmod(&self, base: &[u64], mut e: u64, modulus: &[u64]) -> Vec<u64> {
        let mut acc = vec![1];
        let mut b = self.poly_divrem(base, modulus).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_divrem(&self.poly_mul(&acc, &b), modulus).1;
            }
            b = self.poly_divrem(&self.poly_mul(&b, &b), modulus).1;
            e >>= 1;
        }
        acc
    }

    /// Distinct roots in `F_p` of `f`, ascending.
    pub fn roots(&self, f: &[u64]) -> Result<Vec<u64>> {
        let f = self.monic(Self::trim(f.to_vec()));
        if f.len() <= 1 {
            return Ok(Vec::new());
        }
        let xp = self.poly_powmod(&[0, 1], self.p, &f);
        let g = self.poly_gcd(&f, &self.poly_sub(&xp, &[0, 1]));
        let mut out = Vec::new();
        self.split(&g, &mut out)?;
        out.sort_unstable();
        Ok(out)
    }

    // Cantor–Zassenhaus splitting of a squarefree, fully split polynomial.
    fn split(&self, g: &[u64], out: &mut Vec<u64>) -> Result<()> {
        match g.len() {
            0 | 1 => return Ok(()),
            2 => {
                out.push(self.mul(self.neg(g[0]), self.inv(g[1])));
                return Ok(());
            }
            _ => {}
        }
        for a in 0..self.p {
            let t = self.poly_powmod(&[a, 1], (self.p - 1) / 2, g);
            let h = self.poly_gcd(g, &self.poly_sub(&t, &[1]));
            if h.len() > 1 && h.len() < g.len() {
                let (q, _) = self.poly_divrem(g, &h);
                let q = self.monic(q);
                self.split(&h, out)?;
                return self.split(&q, out);
            }
        }
        Err(Error::InternalInconsistency("root splitting over F_p did not terminate".into()))
    }

    // ---- linear algebra; matrices are row-major Vec<Vec<u64>> ----

    /// Characteristic polynomial `det(xI - m)` via Hessenberg reduction.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h: Vec<Vec<u64>> = m.to_vec();
        for col in 1..n.saturating_sub(1) {
            let Some(piv) = (col..n).find(|&i| h[i][col - 1] != 0) else {
                continue;
            };
            if piv != col {
                h.swap(piv, col);
                for row in h.iter_mut() {
                    row.swap(piv, col);
                }
            }
            let tinv = self.inv(h[col][col - 1]);
            for i in col + 1..n {
                let u = self.mul(h[i][col - 1], tinv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = self.mul(u, h[col][j]);
                    h[i][j] = self.sub(h[i][j], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(u, row[i]);
                    row[col] = self.add(row[col], v);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let lin = vec![self.neg(h[m - 1][m - 1]), 1];
            let mut pm = self.poly_mul(&lin, &polys[m - 1]);
            let mut t = 1;
            for i in 1..m {
                t = self.mul(t, h[m - i][m - i - 1]);
                let c = self.mul(t, h[m - i - 1][m - 1]);
                if c != 0 {
                    let scaled: Vec<u64> = polys[m - i - 1].iter().map(|&x| self.mul(x, c)).collect();
                    pm = self.poly_sub(&pm, &scaled);
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..ncols {
                        let v = self.mul(f, rows[r][j]);
                        rows[i][j] = self.sub(rows[i][j], v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : m v = 0}`.
    pub fn nullspace(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let ncols = m.first().map_or(0, Vec::len);
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; ncols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(rows[r][f]);
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(fp: &Fp, m: &[Vec<u64>]) -> u64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        let mut acc = 0;
        for c in 0..n {
            let minor: Vec<Vec<u64>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &x)| x).collect())
                .collect();
            let term = fp.mul(m[0][c], det(fp, &minor));
            acc = if c % 2 == 0 { fp.add(acc, term) } else { fp.sub(acc, term) };
        }
        acc
    }

    fn eval(fp: &Fp, f: &[u64], x: u64) -> u64 {
        f.iter().rev().fold(0, |acc, &c| fp.add(fp.mul(acc, x), c))
    }

    #[test]
    fn charpoly_matches_cofactor_determinant() {
        let fp = Fp::new(13);
        let mats = vec![
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]],
            vec![vec![0, 0, 1, 0], vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 5]],
            vec![vec![3, 0, 0, 1], vec![0, 0, 2, 0], vec![1, 0, 0, 0], vec![0, 4, 0, 9]],
        ];
        for m in mats {
            let cp = fp.charpoly(&m);
            assert_eq!(cp.len(), m.len() + 1);
            for lambda in 0..13 {
                let shifted: Vec<Vec<u64>> = m
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, &x)| if i == j { fp.sub(lambda, x) } else { fp.neg(x) })
                            .collect()
                    })
                    .collect();
                assert_eq!(eval(&fp, &cp, lambda), det(&fp, &shifted));
            }
        }
    }

    #[test]
    fn roots_of_split_polynomial() {
        let fp = Fp::new(31);
        // (x-0)(x-3)(x-3)(x-17)(x-30)
        let mut f = vec![1];
        for r in [0, 3, 3, 17, 30] {
            f = fp.poly_mul(&f, &[fp.neg(r), 1]);
        }
        assert_eq!(fp.roots(&f).unwrap(), vec![0, 3, 17, 30]);
        // x^2 + 1 has no roots mod 31
        assert!(fp.roots(&[1, 0, 1]).unwrap().is_empty());
    }

    #[test]
    fn nullspace_dimension() {
        let fp = Fp::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = fp.nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let dot = row.iter().zip(&v).fold(0, |acc, (&a, &b)| fp.add(acc, fp.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(Fp::new(7).primitive_root(), 3);
        assert_eq!(Fp::new(31).primitive_root(), 3);
        assert_eq!(Fp::new(337).primitive_root(), 10);
    }
}
