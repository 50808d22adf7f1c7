//! Forms over a pre-special group: the inductively extended isometry
//! relation, representation sets, reality properties and orderings.

use super::{PreSpecialGroup, SgLevel};
use crate::{Error, Result};
use std::cell::RefCell;
use std::collections::HashMap;

/// A nonempty tuple of group elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Form(Vec<usize>);

impl Form {
    pub fn new(g: &PreSpecialGroup, entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidStructure("forms have dimension >= 1".into()));
        }
        if entries.iter().any(|&e| e >= g.size()) {
            return Err(Error::InvalidStructure("form entry out of range".into()));
        }
        Ok(Form(entries))
    }

    pub fn from_labels(g: &PreSpecialGroup, labels: &[&str]) -> Result<Self> {
        let entries = labels
            .iter()
            .map(|l| {
                g.index_of(l)
                    .ok_or_else(|| Error::InvalidStructure(format!("unknown element {l:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        Form::new(g, entries)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }
}

/// Evaluation context for the isometry recursion over one group.
///
/// When the proto axioms hold, forms are normalized to sorted element order
/// before evaluation and memoization; the existential recursion is
/// exponential without this. For structures whose proto axioms fail, the
/// recursion runs on raw tuples, faithful to the definition.
pub struct FormEnv<'g> {
    g: &'g PreSpecialGroup,
    normalize: bool,
    memo: RefCell<HashMap<(Vec<u8>, Vec<u8>), bool>>,
    rep_memo: RefCell<HashMap<Vec<u8>, u64>>,
}

impl<'g> FormEnv<'g> {
    pub fn new(g: &'g PreSpecialGroup) -> Self {
        // SG6 itself builds an env; the proto gate only uses the pair-level
        // checks, so there is no recursion here.
        let proto = g.check_sg_axioms(SgLevel::Proto).proto;
        FormEnv {
            g,
            normalize: proto,
            memo: RefCell::new(HashMap::new()),
            rep_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &'g PreSpecialGroup {
        self.g
    }

    /// The extended relation `phi ==_n psi`.
    pub fn isometric(&self, phi: &Form, psi: &Form) -> Result<bool> {
        if phi.dim() != psi.dim() {
            return Err(Error::DimensionMismatch(
                "isometry needs equal dimensions".into(),
            ));
        }
        Ok(self.isometric_slices(phi.entries(), psi.entries()))
    }

    pub(crate) fn isometric_slices(&self, phi: &[usize], psi: &[usize]) -> bool {
        debug_assert_eq!(phi.len(), psi.len());
        match phi.len() {
            1 => phi[0] == psi[0],
            2 => self.g.iso2(phi[0], phi[1], psi[0], psi[1]),
            _ => {
                let (a, b) = if self.normalize {
                    let mut a: Vec<u8> = phi.iter().map(|&x| x as u8).collect();
                    let mut b: Vec<u8> = psi.iter().map(|&x| x as u8).collect();
                    a.sort_unstable();
                    b.sort_unstable();
                    (a, b)
                } else {
                    (
                        phi.iter().map(|&x| x as u8).collect(),
                        psi.iter().map(|&x| x as u8).collect(),
                    )
                };
                if let Some(&hit) = self.memo.borrow().get(&(a.clone(), b.clone())) {
                    return hit;
                }
                let result = self.iso_rec(
                    &a.iter().map(|&x| x as usize).collect::<Vec<_>>(),
                    &b.iter().map(|&x| x as usize).collect::<Vec<_>>(),
                );
                self.memo.borrow_mut().insert((a, b), result);
                result
            }
        }
    }

    fn iso_rec(&self, phi: &[usize], psi: &[usize]) -> bool {
        let n = self.g.size();
        let d = phi.len();
        let mut tail_a = Vec::with_capacity(d - 1);
        let mut tail_b = Vec::with_capacity(d - 1);
        tail_a.extend_from_slice(&phi[1..]);
        tail_b.extend_from_slice(&psi[1..]);
        let mut z = vec![0usize; d - 2];
        for x in 0..n {
            for y in 0..n {
                if !self.g.iso2(phi[0], x, psi[0], y) {
                    continue;
                }
                if self.exists_z(&tail_a, &tail_b, x, y, &mut z, 0) {
                    return true;
                }
            }
        }
        false
    }

    fn exists_z(
        &self,
        tail_a: &[usize],
        tail_b: &[usize],
        x: usize,
        y: usize,
        z: &mut [usize],
        pos: usize,
    ) -> bool {
        if pos == z.len() {
            let mut xa = Vec::with_capacity(tail_a.len());
            xa.push(x);
            xa.extend_from_slice(z);
            if !self.isometric_slices(tail_a, &xa) {
                return false;
            }
            xa[0] = y;
            return self.isometric_slices(tail_b, &xa);
        }
        // Under normalization a sorted z-tuple is enough: permutations of z
        // produce the same memo keys.
        let start = if self.normalize && pos > 0 { z[pos - 1] } else { 0 };
        for v in start..self.g.size() {
            z[pos] = v;
            if self.exists_z(tail_a, tail_b, x, y, z, pos + 1) {
                return true;
            }
        }
        false
    }

    /// The representation set `D_G(phi)` as a bit mask over group elements.
    ///
    /// When the relation on pairs is reflexive and symmetric the recursion
    /// `D(a_1,...,a_n) = U_{y in D(a_2..a_n)} D(a_1, y)` is used; otherwise
    /// the definition is evaluated directly.
    pub fn represents(&self, phi: &Form) -> u64 {
        self.represents_slice(phi.entries())
    }

    pub(crate) fn represents_slice(&self, phi: &[usize]) -> u64 {
        let key: Vec<u8> = if self.normalize {
            let mut k: Vec<u8> = phi.iter().map(|&x| x as u8).collect();
            k.sort_unstable();
            k
        } else {
            phi.iter().map(|&x| x as u8).collect()
        };
        if let Some(&hit) = self.rep_memo.borrow().get(&key) {
            return hit;
        }
        let n = self.g.size();
        let result = match phi.len() {
            1 => 1u64 << phi[0],
            2 => {
                let mut m = 0u64;
                for c in 0..n {
                    for d in 0..n {
                        if self.g.iso2(c, d, phi[0], phi[1]) {
                            m |= 1 << c;
                        }
                    }
                }
                m
            }
            _ => {
                if self.pair_refl_sym() {
                    let tail = self.represents_slice(&phi[1..]);
                    let mut m = 0u64;
                    for y in 0..n {
                        if tail >> y & 1 == 1 {
                            m |= self.represents_slice(&[phi[0], y]);
                        }
                    }
                    m
                } else {
                    self.represents_bruteforce(phi)
                }
            }
        };
        self.rep_memo.borrow_mut().insert(key, result);
        result
    }

    fn pair_refl_sym(&self) -> bool {
        if self.normalize {
            return true;
        }
        let n = self.g.size();
        for a in 0..n {
            for b in 0..n {
                if !self.g.iso2(a, b, a, b) {
                    return false;
                }
                for c in 0..n {
                    for d in 0..n {
                        if self.g.iso2(a, b, c, d) != self.g.iso2(c, d, a, b) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `D_G(phi)` straight from the definition: b is represented iff some
    /// completion `<b, b_2, .., b_n>` is isometric to phi.
    pub fn represents_bruteforce(&self, phi: &[usize]) -> u64 {
        let n = self.g.size();
        let d = phi.len();
        let mut mask = 0u64;
        let mut tuple = vec![0usize; d];
        for b in 0..n {
            tuple[0] = b;
            if self.search_completion(phi, &mut tuple, 1) {
                mask |= 1 << b;
            }
        }
        mask
    }

    fn search_completion(&self, phi: &[usize], tuple: &mut [usize], pos: usize) -> bool {
        if pos == tuple.len() {
            return self.isometric_slices(tuple, phi);
        }
        for v in 0..self.g.size() {
            tuple[pos] = v;
            if self.search_completion(phi, tuple, pos + 1) {
                return true;
            }
        }
        false
    }
}

/// Reality properties of a pre-special group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealityReport {
    pub formally_real: bool,
    pub reduced: bool,
    /// The stabilized union of the chain `D(n<1>)`.
    pub totally_positive: Vec<usize>,
}

/// Computes the increasing chain `D(n<1>)` to its fixpoint and tests
/// membership of -1; reduced additionally needs `D(<1,1>) = {1}`.
pub fn reality_report(g: &PreSpecialGroup) -> RealityReport {
    let env = FormEnv::new(g);
    let one = g.one();
    let mut current: u64 = 1 << one;
    loop {
        let mut next = 0u64;
        for y in 0..g.size() {
            if current >> y & 1 == 1 {
                next |= env.represents_slice(&[one, y]);
            }
        }
        next |= current;
        if next == current {
            break;
        }
        current = next;
    }
    let formally_real = current >> g.minus_one() & 1 == 0;
    let d11 = env.represents_slice(&[one, one]);
    RealityReport {
        formally_real,
        reduced: formally_real && d11 == 1 << one,
        totally_positive: (0..g.size()).filter(|&i| current >> i & 1 == 1).collect(),
    }
}

/// All SG-characters of `g`: group homomorphisms into the builtin two-element
/// group sending -1 to -1 and preserving the isometry relation. Each is
/// returned as a sign vector (`true` = maps to -1), in lexicographic order.
pub fn enumerate_orderings(g: &PreSpecialGroup) -> Vec<Vec<bool>> {
    let n = g.size();
    // Greedy basis of the exponent-2 group, with expressions over it.
    let mut basis: Vec<usize> = Vec::new();
    let mut expr: HashMap<usize, Vec<usize>> = HashMap::new();
    expr.insert(g.one(), vec![]);
    for x in 0..n {
        if expr.contains_key(&x) {
            continue;
        }
        let snapshot: Vec<(usize, Vec<usize>)> =
            expr.iter().map(|(k, v)| (*k, v.clone())).collect();
        let b = basis.len();
        basis.push(x);
        for (y, e) in snapshot {
            let mut e2 = e.clone();
            e2.push(b);
            expr.insert(g.mul(x, y), e2);
        }
    }
    let k = basis.len();
    let mut out = Vec::new();
    for assign in 0u64..1 << k {
        let sign = |x: usize| -> bool {
            // true = -1
            expr[&x].iter().fold(false, |acc, &b| acc ^ (assign >> b & 1 == 1))
        };
        if !sign(g.minus_one()) {
            continue;
        }
        // Preserve iso2 into multiset equality over {1,-1}.
        let ok = g.iso2_entries().into_iter().all(|(a, b, c, d)| {
            let (sa, sb, sc, sd) = (sign(a), sign(b), sign(c), sign(d));
            (sa ^ sb) == (sc ^ sd) && (sa as u8 + sb as u8) == (sc as u8 + sd as u8)
        });
        if ok {
            out.push((0..n).map(sign).collect());
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgroup::{trivial_group, z2_group};

    #[test]
    fn isometry_base_cases_on_z2() {
        let g = z2_group();
        let env = FormEnv::new(&g);
        let f = |ls: &[&str]| Form::from_labels(&g, ls).unwrap();
        assert!(env.isometric(&f(&["1"]), &f(&["1"])).unwrap());
        assert!(!env.isometric(&f(&["1"]), &f(&["-1"])).unwrap());
        assert!(env.isometric(&f(&["1", "-1"]), &f(&["-1", "1"])).unwrap());
        assert!(!env.isometric(&f(&["1", "1"]), &f(&["1", "-1"])).unwrap());
        assert!(env
            .isometric(&f(&["1", "1", "-1"]), &f(&["1", "-1", "1"]))
            .unwrap());
        assert!(env
            .isometric(&f(&["1", "1"]), &f(&["1"]))
            .is_err());
    }

    #[test]
    fn representation_sets_on_z2() {
        let g = z2_group();
        let env = FormEnv::new(&g);
        let one = g.one();
        let m1 = g.minus_one();
        assert_eq!(env.represents_slice(&[one, one]), 1 << one);
        assert_eq!(env.represents_slice(&[one]), 1 << one);
        assert_eq!(env.represents_slice(&[m1]), 1 << m1);
        assert_eq!(env.represents_slice(&[one, m1]), 1 << one | 1 << m1);
        // Recursion agrees with the brute-force definition.
        for d in 1..=4usize {
            for code in 0..1u32 << d {
                let phi: Vec<usize> = (0..d).map(|i| (code >> i & 1) as usize).collect();
                assert_eq!(
                    env.represents_slice(&phi),
                    env.represents_bruteforce(&phi),
                    "mismatch at {phi:?}"
                );
            }
        }
    }

    #[test]
    fn z2_is_formally_real_and_reduced() {
        let rep = reality_report(&z2_group());
        assert!(rep.formally_real && rep.reduced);
        let rep = reality_report(&trivial_group());
        // -1 = 1 is represented by <1>.
        assert!(!rep.formally_real);
    }

    #[test]
    fn orderings_of_z2() {
        let g = z2_group();
        let ords = enumerate_orderings(&g);
        assert_eq!(ords.len(), 1);
        // The identity character: 1 -> 1, -1 -> -1.
        assert_eq!(ords[0], vec![false, true]);
        assert!(enumerate_orderings(&trivial_group()).is_empty());
    }
}
