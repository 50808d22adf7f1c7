//! The two-way correspondence between pre-special groups and pre-special
//! hyperfields, morphism checking and isomorphism search for groups.

use super::{FormEnv, PreSpecialGroup, SgLevel};
use crate::hyperfield::Multiring;
use crate::verdict::Witness;
use crate::{Error, Result};

/// `M(G) = G u {0}`: sums are `{a}` against zero, everything for `a + (-a)`,
/// and the representation set `D_G(a,b)` otherwise.
///
/// Requires the pre-special axioms; the result is then a pre-special
/// hyperfield.
pub fn to_hyperfield(g: &PreSpecialGroup) -> Result<Multiring> {
    let rep = g.check_sg_axioms(SgLevel::Pre);
    if !rep.pre {
        return Err(Error::NotSpecialGroup(format!(
            "{} fails the pre-special axioms",
            g.name()
        )));
    }
    let env = FormEnv::new(g);
    let n = g.size();
    let zero_label = ["0", "zero", "_0"]
        .iter()
        .find(|l| g.index_of(l).is_none())
        .expect("some zero label is free")
        .to_string();
    // Zero is element 0 of the hyperfield; group element i maps to i+1.
    let mut elements = vec![zero_label];
    elements.extend(g.labels().iter().cloned());
    let m = n + 1;
    let mut neg = vec![0usize];
    neg.extend((0..n).map(|a| g.neg(a) + 1));
    let mut mul = vec![0usize; m * m];
    let mut sum = vec![0u64; m * m];
    for i in 0..m {
        for j in 0..m {
            mul[i * m + j] = if i == 0 || j == 0 {
                0
            } else {
                g.mul(i - 1, j - 1) + 1
            };
            sum[i * m + j] = if i == 0 {
                1 << j
            } else if j == 0 {
                1 << i
            } else if j - 1 == g.neg(i - 1) {
                (1u64 << m) - 1
            } else {
                env.represents_slice_mask_shifted(&[i - 1, j - 1])
            };
        }
    }
    Multiring::new(format!("M({})", g.name()), elements, 0, g.one() + 1, neg, mul, sum)
}

impl FormEnv<'_> {
    /// `D_G(a, b)` as a mask over hyperfield indices (group index + 1).
    fn represents_slice_mask_shifted(&self, phi: &[usize]) -> u64 {
        let f = super::Form::new(self.group(), phi.to_vec()).unwrap();
        self.represents(&f) << 1
    }
}

/// The group of units of a pre-special hyperfield, with
/// `<a,b> ~ <c,d>  iff  ab = cd and a in c + d`.
pub fn from_hyperfield(f: &Multiring) -> Result<PreSpecialGroup> {
    let quad = f
        .check_quadratic_axioms()
        .map_err(|_| Error::NotPreSpecial(f.name().to_string()))?;
    if !quad.pre_special {
        return Err(Error::NotPreSpecial(f.name().to_string()));
    }
    let units = f.units();
    let n = units.len();
    let pos = |x: usize| units.iter().position(|&u| u == x).unwrap();
    let elements: Vec<String> = units.iter().map(|&u| f.label(u).to_string()).collect();
    let mut mul = vec![0usize; n * n];
    for (i, &a) in units.iter().enumerate() {
        for (j, &b) in units.iter().enumerate() {
            mul[i * n + j] = pos(f.mul(a, b));
        }
    }
    let mut pairs = Vec::new();
    for (ai, &a) in units.iter().enumerate() {
        for (bi, &b) in units.iter().enumerate() {
            for (ci, &c) in units.iter().enumerate() {
                for (di, &d) in units.iter().enumerate() {
                    if f.mul(a, b) == f.mul(c, d) && f.sum_contains(c, d, a) {
                        pairs.push((ai, bi, ci, di));
                    }
                }
            }
        }
    }
    PreSpecialGroup::new(
        format!("{}*", f.name()),
        elements,
        mul,
        pos(f.neg(f.one())),
        &pairs,
    )
}

/// Checks that an element map is a PSG-morphism: a group homomorphism fixing
/// -1 that preserves the isometry relation.
pub fn sg_morphism_check(
    f: &[usize],
    from: &PreSpecialGroup,
    to: &PreSpecialGroup,
) -> Result<Option<Witness>> {
    if f.len() != from.size() || f.iter().any(|&y| y >= to.size()) {
        return Err(Error::DimensionMismatch("morphism map must be total".into()));
    }
    let w = |axiom: &str, idx: &[usize]| {
        Some(Witness::new(
            axiom,
            idx.iter().map(|&i| from.label(i).to_string()).collect(),
        ))
    };
    if f[from.minus_one()] != to.minus_one() {
        return Ok(w("sg_morphism_minus_one", &[from.minus_one()]));
    }
    for a in 0..from.size() {
        for b in 0..from.size() {
            if f[from.mul(a, b)] != to.mul(f[a], f[b]) {
                return Ok(w("sg_morphism_mul", &[a, b]));
            }
        }
    }
    for (a, b, c, d) in from.iso2_entries() {
        if !to.iso2(f[a], f[b], f[c], f[d]) {
            return Ok(w("sg_morphism_iso", &[a, b, c, d]));
        }
    }
    Ok(None)
}

/// Searches for an isomorphism of pre-special groups (bijective, preserving
/// product, -1 and the relation in both directions).
pub fn find_sg_isomorphism(a: &PreSpecialGroup, b: &PreSpecialGroup) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.one()] = b.one();
    used[b.one()] = true;
    if a.minus_one() != a.one() {
        if b.minus_one() == b.one() {
            return None;
        }
        map[a.minus_one()] = b.minus_one();
        used[b.minus_one()] = true;
    } else if b.minus_one() != b.one() {
        return None;
    }
    let order: Vec<usize> = (0..n).filter(|&x| map[x] == usize::MAX).collect();

    fn consistent(a: &PreSpecialGroup, b: &PreSpecialGroup, map: &[usize]) -> bool {
        let assigned: Vec<usize> = (0..a.size()).filter(|&x| map[x] != usize::MAX).collect();
        for &x in &assigned {
            for &y in &assigned {
                let p = a.mul(x, y);
                if map[p] != usize::MAX && map[p] != b.mul(map[x], map[y]) {
                    return false;
                }
                for &z in &assigned {
                    for &w in &assigned {
                        if a.iso2(x, y, z, w) != b.iso2(map[x], map[y], map[z], map[w]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn rec(
        a: &PreSpecialGroup,
        b: &PreSpecialGroup,
        order: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return consistent(a, b, map);
        }
        let x = order[pos];
        for y in 0..b.size() {
            if used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map) && rec(a, b, order, pos + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if rec(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::{build_example, find_isomorphism, ExampleKind};
    use crate::sgroup::{trivial_group, z2_group};

    #[test]
    fn m_of_z2_is_q2() {
        let m = to_hyperfield(&z2_group()).unwrap();
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        assert_eq!(m.size(), 3);
        assert!(find_isomorphism(&m, &q2).is_some());
    }

    #[test]
    fn m_of_trivial_group_is_krasner() {
        let m = to_hyperfield(&trivial_group()).unwrap();
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        assert!(find_isomorphism(&m, &k).is_some());
        // a + 0 = {a}.
        for a in 0..m.size() {
            assert_eq!(m.sum_set(a, m.zero()), vec![a]);
        }
    }

    #[test]
    fn from_hyperfield_q2_is_z2() {
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        let g = from_hyperfield(&q2).unwrap();
        assert!(find_sg_isomorphism(&g, &z2_group()).is_some());
        assert_eq!(g.check_sg_axioms(SgLevel::Special).special, Some(true));
    }

    #[test]
    fn from_hyperfield_krasner_is_trivial() {
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        let g = from_hyperfield(&k).unwrap();
        assert_eq!(g.size(), 1);
        assert!(find_sg_isomorphism(&g, &trivial_group()).is_some());
    }

    #[test]
    fn round_trip_h3() {
        let h3 = build_example(ExampleKind::Hp, 3).unwrap();
        let g = from_hyperfield(&h3).unwrap();
        assert!(g.check_sg_axioms(SgLevel::Pre).pre);
        let back = to_hyperfield(&g).unwrap();
        assert!(find_isomorphism(&h3, &back).is_some());
    }

    #[test]
    fn from_hyperfield_rejects_h5() {
        let h5 = build_example(ExampleKind::Hp, 5).unwrap();
        assert!(matches!(from_hyperfield(&h5), Err(Error::NotPreSpecial(_))));
    }

    #[test]
    fn identity_is_an_sg_morphism() {
        let g = z2_group();
        let id: Vec<usize> = (0..g.size()).collect();
        assert!(sg_morphism_check(&id, &g, &g).unwrap().is_none());
    }
}
