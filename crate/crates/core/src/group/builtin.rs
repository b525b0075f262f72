//! Standard small permutation groups.

use super::{group_from_perm_generators, Permutation, PermutationGroup};

fn build(degree: usize, gens: Vec<Vec<u32>>) -> PermutationGroup {
    let gens: Vec<Permutation> = gens
        .into_iter()
        .map(|g| Permutation::from_images(g).expect("builtin generator is a permutation"))
        .collect();
    group_from_perm_generators(degree, &gens, usize::MAX).expect("builtin groups are uncapped")
}

fn cycle(degree: usize, points: &[usize]) -> Vec<u32> {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p] = points[(i + 1) % points.len()] as u32;
    }
    images
}

/// `S_n` on `n` points, generated by `(1 2)` and `(1 2 … n)`.
pub fn symmetric(n: usize) -> PermutationGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, &[0, 1]));
    }
    if n >= 3 {
        gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
    }
    build(n, gens)
}

/// `A_n` on `n` points, generated by the 3-cycles `(1 2 i)`.
pub fn alternating(n: usize) -> PermutationGroup {
    let gens = (2..n).map(|i| cycle(n, &[0, 1, i])).collect();
    build(n, gens)
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> PermutationGroup {
    build(n, vec![cycle(n, &(0..n).collect::<Vec<_>>())])
}

/// Symmetries of the regular `n`-gon, of order `2n`.
pub fn dihedral(n: usize) -> PermutationGroup {
    let rotation = cycle(n, &(0..n).collect::<Vec<_>>());
    let reflection = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
    build(n, vec![rotation, reflection])
}

/// Quaternion group `Q_8` in its regular representation on 8 points.
///
/// Point `2u + s` stands for `(-1)^s · unit_u` with units `1, i, j, k`.
pub fn quaternion() -> PermutationGroup {
    // unit products: (sign, unit)
    const PRODUCT: [[(u32, u32); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left_mul = |unit: u32| -> Vec<u32> {
        (0..8u32)
            .map(|p| {
                let (u, s) = (p / 2, p % 2);
                let (ps, pu) = PRODUCT[unit as usize][u as usize];
                2 * pu + (s + ps) % 2
            })
            .collect()
    };
    build(8, vec![left_mul(1), left_mul(2)])
}
