use std::collections::BTreeMap;

use super::field::SmallField;
use crate::error::{Error, Result};
use crate::group::{close_under, Element, FiniteGroup, GSet};

/// `GL_n(F_q)` as an abstract group of matrices, with its action on nonzero
/// vectors and on complete flags.
#[derive(Debug, Clone)]
pub struct GlGroup {
    pub n: usize,
    pub field: SmallField,
    pub group: FiniteGroup,
    /// Row-major `n × n` matrix of each element.
    pub matrices: Vec<Vec<u8>>,
    /// Element indices of the closure generators.
    pub generators: Vec<Element>,
    /// Left action `v ↦ g v` on `F_q^n ∖ {0}`, vectors in lexicographic order.
    pub natural: GSet,
    /// Left action on complete flags, ordered lexicographically by their
    /// reduced row-echelon bases.
    pub flags: GSet,
}

/// `Π_{i<n} (q^n − q^i)`.
pub fn gl_order(n: usize, q: usize) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (0..n).map(|i| qn - (q as u128).pow(i as u32)).product()
}

fn mat_mul(f: &SmallField, n: usize, a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0;
            for k in 0..n {
                acc = f.add(acc, f.mul(a[i * n + k], b[k * n + j]));
            }
            out[i * n + j] = acc;
        }
    }
    out
}

/// Row-reduces in place and drops zero rows.
fn rref(f: &SmallField, rows: &mut Vec<Vec<u8>>) {
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][col]).unwrap();
        for x in rows[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let c = f.neg(rows[r][col]);
                for k in 0..width {
                    rows[r][k] = f.add(rows[r][k], f.mul(c, rows[rank][k]));
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
}

/// Builds `GL_n(F_q)` by closing elementary transvections and
/// `diag(a, 1, …, 1)`; fails with `TooLarge` above `cap` elements.
pub fn build_gl_flag(n: usize, q: usize, cap: usize) -> Result<GlGroup> {
    if n < 1 {
        return Err(Error::InvalidInput("GL_n needs n ≥ 1".into()));
    }
    let field = SmallField::new(q)?;
    let order = gl_order(n, q);
    if order > cap as u128 {
        return Err(Error::TooLarge { what: format!("GL_{}(F_{})", n, q), size: order, bound: cap as u128 });
    }
    let identity: Vec<u8> = (0..n * n).map(|i| u8::from(i / n == i % n)).collect();
    let mut gens = Vec::new();
    for a in field.nonzero() {
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut m = identity.clone();
                    m[i * n + j] = a;
                    gens.push(m);
                }
            }
        }
        if a != 1 {
            let mut m = identity.clone();
            m[0] = a;
            gens.push(m);
        }
    }
    let (matrices, table) = close_under(identity, &gens, |a, b| mat_mul(&field, n, a, b), cap)?;
    if matrices.len() as u128 != order {
        return Err(Error::InternalInconsistency(format!(
            "closure produced {} matrices, expected {}",
            matrices.len(),
            order
        )));
    }
    let labels: Vec<String> = matrices
        .iter()
        .map(|m| {
            let rows: Vec<String> = m
                .chunks(n)
                .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    let group = FiniteGroup::from_trusted_table(matrices.len(), table, labels);
    let generators = gens
        .iter()
        .map(|g| matrices.iter().position(|m| m == g).unwrap())
        .collect();

    // nonzero vectors: code = Σ v_i q^{n-1-i}, index = code - 1
    let nvec = q.pow(n as u32) - 1;
    let decode = |code: usize| -> Vec<u8> {
        (0..n).map(|i| ((code / q.pow((n - 1 - i) as u32)) % q) as u8).collect()
    };
    let encode = |v: &[u8]| -> usize { v.iter().fold(0, |acc, &x| acc * q + x as usize) };
    let mut natural_action = vec![0u32; matrices.len() * nvec];
    for (g, m) in matrices.iter().enumerate() {
        for x in 0..nvec {
            let v = decode(x + 1);
            let w: Vec<u8> = (0..n)
                .map(|i| (0..n).fold(0, |acc, k| field.add(acc, field.mul(m[i * n + k], v[k]))))
                .collect();
            natural_action[g * nvec + x] = (encode(&w) - 1) as u32;
        }
    }
    let vec_labels = (1..=nvec)
        .map(|c| format!("({})", decode(c).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let natural = GSet::from_action_unchecked(&group, nvec, natural_action, Some(vec_labels));

    // the flag h·F_std has V_i spanned by the first i columns of h
    let flag_key = |m: &[u8]| -> Vec<u8> {
        let mut key = Vec::new();
        for i in 1..n {
            let mut rows: Vec<Vec<u8>> = (0..i).map(|c| (0..n).map(|r| m[r * n + c]).collect()).collect();
            rref(&field, &mut rows);
            key.extend(rows.into_iter().flatten());
        }
        key
    };
    let keys: Vec<Vec<u8>> = matrices.iter().map(|m| flag_key(m)).collect();
    let mut index: BTreeMap<&[u8], usize> = keys.iter().map(|k| (k.as_slice(), 0)).collect();
    let mut reps = Vec::with_capacity(index.len());
    for (i, (_, slot)) in index.iter_mut().enumerate() {
        *slot = i;
    }
    reps.resize(index.len(), usize::MAX);
    let flag_of: Vec<usize> = keys.iter().map(|k| index[k.as_slice()]).collect();
    for (h, &x) in flag_of.iter().enumerate() {
        if reps[x] == usize::MAX {
            reps[x] = h;
        }
    }
    let nflags = reps.len();
    let mut flag_action = vec![0u32; matrices.len() * nflags];
    for g in 0..matrices.len() {
        for (x, &h) in reps.iter().enumerate() {
            flag_action[g * nflags + x] = flag_of[group.mul(g, h)] as u32;
        }
    }
    let flag_labels = index
        .keys()
        .map(|k| format!("{:?}", k))
        .collect();
    let flags = GSet::from_action_unchecked(&group, nflags, flag_action, Some(flag_labels));

    Ok(GlGroup { n, field, group, matrices, generators, natural, flags })
}

impl GlGroup {
    pub fn q(&self) -> usize {
        self.field.q()
    }

    pub fn matrix(&self, g: Element) -> &[u8] {
        &self.matrices[g]
    }

    pub fn is_upper_triangular(&self, g: Element) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..i).all(|j| self.matrices[g][i * n + j] == 0))
    }

    /// Index of the standard flag `⟨e_1⟩ ⊂ ⟨e_1, e_2⟩ ⊂ …`.
    pub fn standard_flag(&self) -> usize {
        // the standard flag is the unique point fixed by the whole Borel subgroup
        let borel: Vec<Element> = (0..self.group.order()).filter(|&g| self.is_upper_triangular(g)).collect();
        (0..self.flags.size())
            .find(|&x| borel.iter().all(|&b| self.flags.act(b, x) == x))
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_binomial_flags(n: usize, q: usize) -> usize {
        // Π_{i=1}^n (1 + q + … + q^{i-1})
        (1..=n).map(|i| (0..i).map(|j| q.pow(j as u32)).sum::<usize>()).product()
    }

    #[test]
    fn orders_and_flag_counts() {
        for (n, q, order) in [(2, 2, 6), (2, 3, 48), (2, 4, 180), (3, 2, 168)] {
            let gl = build_gl_flag(n, q, 20_000).unwrap();
            assert_eq!(gl.group.order(), order);
            assert_eq!(gl.flags.size(), q_binomial_flags(n, q));
            assert_eq!(gl.natural.size(), q.pow(n as u32) - 1);
            assert!(gl.flags.is_transitive());
            assert!(gl.natural.is_transitive());
        }
    }

    #[test]
    fn actions_are_validated_by_the_checked_constructor() {
        for (n, q) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
            let gl = build_gl_flag(n, q, 20_000).unwrap();
            let act = |x: &GSet| {
                (0..gl.group.order())
                    .flat_map(|g| (0..x.size()).map(move |p| (g, p)))
                    .map(|(g, p)| x.act(g, p) as u32)
                    .collect::<Vec<u32>>()
            };
            GSet::from_action(&gl.group, gl.flags.size(), act(&gl.flags)).unwrap();
            GSet::from_action(&gl.group, gl.natural.size(), act(&gl.natural)).unwrap();
        }
    }

    #[test]
    fn borel_is_the_standard_flag_stabilizer() {
        let gl = build_gl_flag(3, 2, 20_000).unwrap();
        let x = gl.standard_flag();
        let stab = gl.flags.stabilizer(x);
        assert_eq!(stab.len(), 8);
        assert!(stab.iter().all(|&g| gl.is_upper_triangular(g)));
    }

    #[test]
    fn group_cap_is_enforced() {
        assert!(matches!(build_gl_flag(3, 4, 20_000), Err(Error::TooLarge { .. })));
        assert!(matches!(build_gl_flag(2, 3, 47), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn gl2_f2_is_s3() {
        let gl = build_gl_flag(2, 2, 100).unwrap();
        assert!(!gl.group.is_abelian());
        assert_eq!(gl.group.conjugacy().sizes(), vec![1, 2, 3]);
    }
}
