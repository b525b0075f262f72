//! The fixed collection of small groups and G-sets used by the self-tests.

use crate::error::Result;
use crate::gln::build_gl_flag;
use crate::group::{alternating, cyclic, dihedral, quaternion, symmetric, Element, FiniteGroup, GSet, PermutationGroup};

#[derive(Debug, Clone)]
pub struct BatteryGroup {
    pub name: String,
    pub group: FiniteGroup,
    /// Named G-sets: natural, regular, point, then coset spaces.
    pub gsets: Vec<(String, GSet)>,
}

impl BatteryGroup {
    pub fn gset(&self, name: &str) -> Option<&GSet> {
        self.gsets.iter().find(|(n, _)| n == name).map(|(_, x)| x)
    }
}

fn from_perm(name: &str, pg: PermutationGroup, subgroups: &[(&str, &[&str])]) -> Result<BatteryGroup> {
    let mut cosets = Vec::new();
    for (label, gens) in subgroups {
        let elems = gens.iter().map(|c| pg.element(c)).collect::<Result<Vec<Element>>>()?;
        cosets.push((format!("cosets:{}", label), GSet::cosets(&pg.group, &elems)));
    }
    Ok(assemble(name, pg.group, pg.natural, cosets))
}

fn assemble(name: &str, group: FiniteGroup, natural: GSet, cosets: Vec<(String, GSet)>) -> BatteryGroup {
    let mut gsets = vec![
        ("natural".to_string(), natural),
        ("regular".to_string(), GSet::regular(&group)),
        ("point".to_string(), GSet::point(&group)),
    ];
    gsets.extend(cosets);
    BatteryGroup { name: name.to_string(), group, gsets }
}

fn gl(n: usize, q: usize) -> Result<BatteryGroup> {
    let gl = build_gl_flag(n, q, 20_000)?;
    let borel: Vec<Element> = (0..gl.group.order()).filter(|&g| gl.is_upper_triangular(g)).collect();
    let unipotent: Vec<Element> = borel
        .iter()
        .copied()
        .filter(|&g| (0..n).all(|i| gl.matrix(g)[i * n + i] == 1))
        .collect();
    let cosets = vec![
        ("cosets:B".to_string(), GSet::cosets(&gl.group, &borel)),
        ("cosets:U".to_string(), GSet::cosets(&gl.group, &unipotent)),
    ];
    Ok(assemble(&format!("GL{}(F{})", n, q), gl.group, gl.natural, cosets))
}

/// C2, C4, C6, S3, D4, Q8, A4, S4, GL2(F3), GL2(F2), GL3(F2), GL2(F4), each
/// with natural, regular, one-point and coset G-sets.
pub fn battery() -> Result<Vec<BatteryGroup>> {
    Ok(vec![
        from_perm("C2", cyclic(2), &[("1", &[])])?,
        from_perm("C4", cyclic(4), &[("C2", &["(1 3)(2 4)"])])?,
        from_perm("C6", cyclic(6), &[("C3", &["(1 3 5)(2 4 6)"]), ("C2", &["(1 4)(2 5)(3 6)"])])?,
        from_perm("S3", symmetric(3), &[("S2", &["(1 2)"]), ("C3", &["(1 2 3)"])])?,
        from_perm("D4", dihedral(4), &[("Z", &["(1 3)(2 4)"]), ("S", &["(2 4)"])])?,
        from_perm("Q8", quaternion(), &[("Z", &["(1 2)(3 4)(5 6)(7 8)"]), ("I", &["(1 3 2 4)(5 7 6 8)"])])?,
        from_perm("A4", alternating(4), &[("V4", &["(1 2)(3 4)", "(1 3)(2 4)"]), ("C3", &["(1 2 3)"])])?,
        from_perm("S4", symmetric(4), &[("S3", &["(1 2)", "(1 2 3)"]), ("D4", &["(1 2 3 4)", "(1 3)"])])?,
        gl(2, 3)?,
        gl(2, 2)?,
        gl(3, 2)?,
        gl(2, 4)?,
    ])
}
