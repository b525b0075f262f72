use std::collections::HashMap;
use std::hash::Hash;

use super::{Element, FiniteGroup, GSet, Permutation};
use crate::error::{Error, Result};

/// Closes `gens` under right multiplication, starting from `identity`.
///
/// Elements come out identity first, then in BFS discovery order with the
/// generator index as tie-break. Returns the elements and the full
/// multiplication table.
pub fn close_under<E, F>(identity: E, gens: &[E], mul: F, cap: usize) -> Result<(Vec<E>, Vec<u32>)>
where
    E: Clone + Eq + Hash,
    F: Fn(&E, &E) -> E,
{
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<E, usize> = HashMap::new();
    index.insert(identity, 0);
    let mut i = 0;
    while i < elements.len() {
        for s in gens {
            let y = mul(&elements[i], s);
            if !index.contains_key(&y) {
                if elements.len() >= cap {
                    return Err(Error::TooLarge {
                        what: "group closure".into(),
                        size: elements.len() as u128 + 1,
                        bound: cap as u128,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let mut table = vec![0u32; n * n];
    for (a, x) in elements.iter().enumerate() {
        for (b, y) in elements.iter().enumerate() {
            table[a * n + b] = index[&mul(x, y)] as u32;
        }
    }
    Ok((elements, table))
}

/// A group generated by permutations, together with its natural action.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    pub group: FiniteGroup,
    pub natural: GSet,
    pub elements: Vec<Permutation>,
    /// Element index of each generator, in input order.
    pub generators: Vec<Element>,
    index: HashMap<Permutation, Element>,
}

impl PermutationGroup {
    pub fn degree(&self) -> usize {
        self.natural.size()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<Element> {
        self.index.get(p).copied()
    }

    /// Looks up an element written in 1-based cycle notation.
    pub fn element(&self, cycles: &str) -> Result<Element> {
        let p = Permutation::parse_cycles(cycles, self.degree())?;
        self.index_of(&p)
            .ok_or_else(|| Error::InvalidInput(format!("{} is not in the group", cycles)))
    }
}

/// Generates the permutation group on `{1..degree}` spanned by `generators`.
pub fn group_from_perm_generators(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<PermutationGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::InvalidInput(format!(
                "generator {} has degree {}, expected {}",
                g,
                g.degree(),
                degree
            )));
        }
    }
    let (elements, table) =
        close_under(Permutation::identity(degree), generators, |a, b| a.compose(b), cap)?;
    let n = elements.len();
    let labels = elements.iter().map(|p| p.to_string()).collect();
    let group = FiniteGroup::from_trusted_table(n, table, labels);
    let index: HashMap<Permutation, Element> =
        elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut action = Vec::with_capacity(n * degree);
    for p in &elements {
        action.extend(p.images().iter().copied());
    }
    let natural = GSet::from_action_unchecked(&group, degree, action, None);
    let generators = generators.iter().map(|g| index[g]).collect();
    Ok(PermutationGroup { group, natural, elements, generators, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(degree: usize, cycles: &[&str]) -> Vec<Permutation> {
        cycles.iter().map(|c| Permutation::parse_cycles(c, degree).unwrap()).collect()
    }

    #[test]
    fn s3_from_generators() {
        let g = group_from_perm_generators(3, &perms(3, &["(1 2)", "(1 2 3)"]), 100).unwrap();
        assert_eq!(g.group.order(), 6);
        assert_eq!(g.natural.size(), 3);
        assert_eq!(g.group.label(0), "()");
        // BFS order: e, e*(1 2), e*(1 2 3), ...
        assert_eq!(g.group.label(1), "(1 2)");
        assert_eq!(g.group.label(2), "(1 2 3)");
    }

    #[test]
    fn cyclic_four() {
        let g = group_from_perm_generators(4, &perms(4, &["(1 2 3 4)"]), 100).unwrap();
        assert_eq!(g.group.order(), 4);
        assert!(g.group.is_abelian());
    }

    #[test]
    fn closure_respects_cap() {
        let err = group_from_perm_generators(5, &perms(5, &["(1 2)", "(1 2 3 4 5)"]), 50).unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }

    #[test]
    fn gl2_f2_on_nonzero_vectors() {
        // nonzero vectors of F_2^2: 1=(1,0), 2=(0,1), 3=(1,1)
        // [[1,1],[0,1]] swaps (0,1) and (1,1); [[0,1],[1,1]] cycles (1,0)->(0,1)->(1,1)
        let g = group_from_perm_generators(3, &perms(3, &["(2 3)", "(1 2 3)"]), 100).unwrap();
        // enumerate invertible 2x2 matrices over F_2
        let count = (0..16u32)
            .filter(|m| {
                let (a, b, c, d) = (m & 1, (m >> 1) & 1, (m >> 2) & 1, (m >> 3) & 1);
                (a * d + b * c) % 2 == 1
            })
            .count();
        assert_eq!(g.group.order(), count);
        assert_eq!(count, 6);
    }
}
