use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Element, FiniteGroup};
use crate::error::{Error, Result};

/// A finite set with a left action of a group, given as a full table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    size: usize,
    group_order: usize,
    action: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl GSet {
    pub(crate) fn from_action_unchecked(
        group: &FiniteGroup,
        size: usize,
        action: Vec<u32>,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(action.len(), group.order() * size);
        GSet { size, group_order: group.order(), action, labels }
    }

    /// Validates and wraps an action table (`action[g * size + x] = g·x`).
    ///
    /// Compatibility `a·(b·x) = (ab)·x` is checked exhaustively when
    /// `|G|²·|X| ≤ 10^8` and on 10^6 seeded random triples otherwise.
    pub fn from_action(group: &FiniteGroup, size: usize, action: Vec<u32>) -> Result<Self> {
        let n = group.order();
        if action.len() != n * size {
            return Err(Error::InvalidInput(format!(
                "action table has {} entries, expected {}",
                action.len(),
                n * size
            )));
        }
        for g in 0..n {
            let row = &action[g * size..(g + 1) * size];
            let mut seen = vec![false; size];
            for &x in row {
                let x = x as usize;
                if x >= size || seen[x] {
                    return Err(Error::InvalidInput(format!("action row {} is not a permutation", g)));
                }
                seen[x] = true;
            }
        }
        if action[..size].iter().enumerate().any(|(x, &y)| x != y as usize) {
            return Err(Error::InvalidInput("identity does not act trivially".into()));
        }
        let set = GSet { size, group_order: n, action, labels: None };
        let compatible = |a: usize, b: usize, x: usize| set.act(a, set.act(b, x)) == set.act(group.mul(a, b), x);
        if (n as u128) * (n as u128) * (size as u128) <= 100_000_000 {
            for a in 0..n {
                for b in 0..n {
                    for x in 0..size {
                        if !compatible(a, b, x) {
                            return Err(Error::InvalidInput(format!("action incompatible at ({}, {}, {})", a, b, x)));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xac7);
            for _ in 0..1_000_000 {
                let (a, b, x) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..size));
                if !compatible(a, b, x) {
                    return Err(Error::InvalidInput(format!("action incompatible at ({}, {}, {})", a, b, x)));
                }
            }
        }
        Ok(set)
    }

    /// Left cosets `gH` of the subgroup generated by `subgroup_generators`.
    ///
    /// Cosets are numbered by their least element, so the coset `H` is point 0.
    pub fn cosets(group: &FiniteGroup, subgroup_generators: &[Element]) -> Self {
        let n = group.order();
        let h = group.subgroup(subgroup_generators);
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            for &x in &h {
                coset_of[group.mul(g, x)] = id;
            }
            reps.push(g);
        }
        let size = reps.len();
        let mut action = vec![0u32; n * size];
        for a in 0..n {
            for (p, &r) in reps.iter().enumerate() {
                action[a * size + p] = coset_of[group.mul(a, r)];
            }
        }
        let labels = reps.iter().map(|&r| format!("{}H", group.label(r))).collect();
        GSet { size, group_order: n, action, labels: Some(labels) }
    }

    /// `G` acting on itself by left multiplication.
    pub fn regular(group: &FiniteGroup) -> Self {
        Self::cosets(group, &[])
    }

    /// The one-point set.
    pub fn point(group: &FiniteGroup) -> Self {
        GSet { size: 1, group_order: group.order(), action: vec![0; group.order()], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.size);
        self.labels = Some(labels);
        self
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => (x + 1).to_string(),
        }
    }

    #[inline]
    pub fn act(&self, g: Element, x: usize) -> usize {
        self.action[g * self.size + x] as usize
    }

    /// `#X^g`.
    pub fn fixed_points(&self, g: Element) -> usize {
        let row = &self.action[g * self.size..(g + 1) * self.size];
        row.iter().enumerate().filter(|(x, &y)| *x == y as usize).count()
    }

    /// `#X^g` for every element, indexed by element.
    pub fn fixed_point_counts(&self) -> Vec<u64> {
        (0..self.group_order).map(|g| self.fixed_points(g) as u64).collect()
    }

    /// Elements fixing `x`.
    pub fn stabilizer(&self, x: usize) -> Vec<Element> {
        (0..self.group_order).filter(|&g| self.act(g, x) == x).collect()
    }

    /// Orbit index of each point, numbered in order of least point.
    pub fn orbits(&self) -> Vec<usize> {
        let mut orbit = vec![usize::MAX; self.size];
        let mut next = 0;
        for x in 0..self.size {
            if orbit[x] != usize::MAX {
                continue;
            }
            for g in 0..self.group_order {
                orbit[self.act(g, x)] = next;
            }
            next += 1;
        }
        orbit
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits().iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_count() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{symmetric, alternating, dihedral, quaternion, cyclic};
    use crate::gln::build_gl_flag;

    fn all_gsets() -> Vec<(FiniteGroup, GSet)> {
        let mut out = Vec::new();
        for pg in [symmetric(3), symmetric(4), alternating(4), dihedral(4), quaternion(), cyclic(6)] {
            let g = pg.group.clone();
            out.push((g.clone(), pg.natural.clone()));
            out.push((g.clone(), GSet::regular(&g)));
            out.push((g.clone(), GSet::point(&g)));
            out.push((g.clone(), GSet::cosets(&g, &[pg.generators[0]])));
        }
        out
    }

    #[test]
    fn burnside_counts_orbits() {
        for (g, x) in all_gsets() {
            let total: usize = (0..g.order()).map(|h| x.fixed_points(h)).sum();
            assert_eq!(total % g.order(), 0);
            assert_eq!(total / g.order(), x.orbit_count());
        }
    }

    #[test]
    fn fixed_points_are_class_functions_and_inversion_invariant() {
        for (g, x) in all_gsets() {
            for a in 0..g.order() {
                assert_eq!(x.fixed_points(a), x.fixed_points(g.inv(a)));
                for h in 0..g.order() {
                    assert_eq!(x.fixed_points(a), x.fixed_points(g.conjugate(a, h)));
                }
            }
        }
    }

    #[test]
    fn coset_fixed_points_match_stabilizer_formula() {
        for (g, x) in all_gsets() {
            let h = x.stabilizer(0);
            let in_h = |y: Element| h.contains(&y);
            if x.stabilizer(0).len() * x.size() != g.order() {
                continue;
            }
            for a in 0..g.order() {
                // #{bH : b⁻¹ a b ∈ H} counted over elements b, divided by |H|
                let count = (0..g.order()).filter(|&b| in_h(g.mul(g.mul(g.inv(b), a), b))).count();
                assert_eq!(count / h.len(), x.fixed_points(a));
            }
        }
    }

    #[test]
    fn coset_sizes() {
        let s3 = symmetric(3);
        let t = s3.element("(1 2)").unwrap();
        let x = GSet::cosets(&s3.group, &[t]);
        assert_eq!(x.size(), 3);
        assert_eq!(x.stabilizer(0), vec![0, t]);
        assert_eq!(GSet::regular(&s3.group).size(), 6);

        let gl = build_gl_flag(2, 3, 20_000).unwrap();
        let borel: Vec<Element> = (0..gl.group.order()).filter(|&g| gl.is_upper_triangular(g)).collect();
        assert_eq!(borel.len(), 12);
        assert_eq!(GSet::cosets(&gl.group, &borel).size(), 4);
    }

    #[test]
    fn fixed_point_examples() {
        let s3 = symmetric(3);
        assert_eq!(s3.natural.fixed_points(0), 3);
        assert_eq!(s3.natural.fixed_points(s3.element("(1 2)").unwrap()), 1);
        let reg = GSet::regular(&s3.group);
        for g in 1..6 {
            assert_eq!(reg.fixed_points(g), 0);
        }
    }

    #[test]
    fn validated_action_rejects_garbage() {
        let s3 = symmetric(3);
        let mut bad = vec![0u32; 6 * 3];
        for g in 0..6 {
            for x in 0..3 {
                bad[g * 3 + x] = x as u32;
            }
        }
        // trivial action is fine
        assert!(GSet::from_action(&s3.group, 3, bad.clone()).is_ok());
        // a non-homomorphic assignment
        bad[3] = 1;
        bad[4] = 0;
        assert!(GSet::from_action(&s3.group, 3, bad).is_err());
    }
}
