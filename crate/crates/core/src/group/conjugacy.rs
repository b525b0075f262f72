use super::{Element, FiniteGroup};

/// Conjugacy classes with their sizes, centralizers and power maps.
///
/// Classes are ordered by size, ties broken by least member index, so
/// class 0 is always `{identity}`.
#[derive(Debug, Clone)]
pub struct ConjugacyData {
    class_of: Vec<u32>,
    members: Vec<Vec<Element>>,
    centralizer_orders: Vec<usize>,
    inverse_class: Vec<usize>,
    rep_orders: Vec<u32>,
    power_maps: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub(super) fn empty() -> Self {
        ConjugacyData {
            class_of: Vec::new(),
            members: Vec::new(),
            centralizer_orders: Vec::new(),
            inverse_class: Vec::new(),
            rep_orders: Vec::new(),
            power_maps: Vec::new(),
        }
    }

    pub(super) fn compute(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut assigned = vec![false; n];
        let mut classes: Vec<Vec<Element>> = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut members = Vec::new();
            for y in 0..n {
                let c = g.conjugate(x, y);
                if !assigned[c] {
                    assigned[c] = true;
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes.sort_by_key(|m| (m.len(), m[0]));

        let mut class_of = vec![0u32; n];
        for (c, members) in classes.iter().enumerate() {
            for &x in members {
                class_of[x] = c as u32;
            }
        }
        let centralizer_orders = classes.iter().map(|m| n / m.len()).collect();
        let inverse_class = classes.iter().map(|m| class_of[g.inv(m[0])] as usize).collect();
        let rep_orders: Vec<u32> = classes.iter().map(|m| g.element_order(m[0])).collect();
        let power_maps = classes
            .iter()
            .zip(&rep_orders)
            .map(|(m, &o)| {
                let mut x = 0;
                (0..o)
                    .map(|_| {
                        let c = class_of[x] as usize;
                        x = g.mul(x, m[0]);
                        c
                    })
                    .collect()
            })
            .collect();
        ConjugacyData {
            class_of,
            members: classes,
            centralizer_orders,
            inverse_class,
            rep_orders,
            power_maps,
        }
    }

    /// Number of classes.
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn class_of(&self, g: Element) -> usize {
        self.class_of[g] as usize
    }

    /// Least member of the class.
    pub fn representative(&self, c: usize) -> Element {
        self.members[c][0]
    }

    pub fn representatives(&self) -> Vec<Element> {
        self.members.iter().map(|m| m[0]).collect()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn members(&self, c: usize) -> &[Element] {
        &self.members[c]
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.centralizer_orders[c]
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Order of the elements of class `c`.
    pub fn element_order(&self, c: usize) -> u32 {
        self.rep_orders[c]
    }

    /// Class of `g^s` for `g` in class `c`; `s` is taken modulo the element order.
    pub fn power_class(&self, c: usize, s: i64) -> usize {
        let o = self.rep_orders[c] as i64;
        self.power_maps[c][s.rem_euclid(o) as usize]
    }
}
