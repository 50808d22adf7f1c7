//! Finite pre-special and special groups: exponent-2 groups with a
//! distinguished -1 and a binary isometry relation on pairs.
//!
//! The group laws are enforced at construction; the SG axioms are decided by
//! the exhaustive checker, so defective relations are representable and
//! produce witnesses.

mod convert;
mod forms;

pub use convert::{find_sg_isomorphism, from_hyperfield, sg_morphism_check, to_hyperfield};
pub use forms::{enumerate_orderings, reality_report, Form, FormEnv, RealityReport};

use crate::verdict::{Verdict, Witness};
use crate::{Error, Result, MAX_CARRIER};
use std::fmt;

/// A finite exponent-2 group with a distinguished element -1 and a relation
/// on pairs, the candidate isometry `<a,b> ~ <c,d>`.
#[derive(Clone, PartialEq, Eq)]
pub struct PreSpecialGroup {
    name: String,
    elements: Vec<String>,
    mul: Vec<usize>,
    one: usize,
    minus_one: usize,
    /// Bit-packed n^4 relation, index ((a*n+b)*n+c)*n+d.
    iso2: Vec<u64>,
}

impl PreSpecialGroup {
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        mul: Vec<usize>,
        minus_one: usize,
        related_pairs: &[(usize, usize, usize, usize)],
    ) -> Result<Self> {
        let name = name.into();
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidStructure("empty group".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].contains(a) {
                return Err(Error::InvalidStructure(format!("duplicate label {a:?}")));
            }
        }
        if mul.len() != n * n || mul.iter().any(|&x| x >= n) {
            return Err(Error::InvalidStructure(
                "multiplication table must be total".into(),
            ));
        }
        if minus_one >= n {
            return Err(Error::InvalidStructure("minus_one out of range".into()));
        }
        let mul_at = |a: usize, b: usize| mul[a * n + b];
        let Some(one) = (0..n).find(|&e| (0..n).all(|x| mul_at(e, x) == x)) else {
            return Err(Error::InvalidStructure("no identity element".into()));
        };
        for a in 0..n {
            if mul_at(a, a) != one {
                return Err(Error::InvalidStructure(format!(
                    "not of exponent 2: {}^2 != 1",
                    elements[a]
                )));
            }
            for b in 0..n {
                if mul_at(a, b) != mul_at(b, a) {
                    return Err(Error::InvalidStructure("not abelian".into()));
                }
                for c in 0..n {
                    if mul_at(mul_at(a, b), c) != mul_at(a, mul_at(b, c)) {
                        return Err(Error::InvalidStructure("not associative".into()));
                    }
                }
            }
        }
        let mut iso2 = vec![0u64; (n * n * n * n).div_ceil(64)];
        for &(a, b, c, d) in related_pairs {
            if a >= n || b >= n || c >= n || d >= n {
                return Err(Error::InvalidStructure("iso entry out of range".into()));
            }
            let idx = ((a * n + b) * n + c) * n + d;
            iso2[idx / 64] |= 1 << (idx % 64);
        }
        Ok(PreSpecialGroup {
            name,
            elements,
            mul,
            one,
            minus_one,
            iso2,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn minus_one(&self) -> usize {
        self.minus_one
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.mul(self.minus_one, a)
    }

    pub fn iso2(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let n = self.size();
        let idx = ((a * n + b) * n + c) * n + d;
        self.iso2[idx / 64] >> (idx % 64) & 1 == 1
    }

    /// All related 4-tuples, in index order.
    pub fn iso2_entries(&self) -> Vec<(usize, usize, usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if self.iso2(a, b, c, d) {
                            out.push((a, b, c, d));
                        }
                    }
                }
            }
        }
        out
    }

    fn w(&self, axiom: &str, idx: &[usize]) -> Witness {
        Witness::new(
            axiom,
            idx.iter().map(|&i| self.label(i).to_string()).collect(),
        )
    }
}

impl fmt::Debug for PreSpecialGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreSpecialGroup({}, order {})", self.name, self.size())
    }
}

/// The builtin two-element special group Z_2 = {1, -1}: isometry of pairs is
/// multiset equality.
pub fn z2_group() -> PreSpecialGroup {
    let pairs = [
        (0, 0, 0, 0),
        (1, 1, 1, 1),
        (0, 1, 0, 1),
        (0, 1, 1, 0),
        (1, 0, 0, 1),
        (1, 0, 1, 0),
    ];
    PreSpecialGroup::new(
        "Z2",
        vec!["1".into(), "-1".into()],
        vec![0, 1, 1, 0],
        1,
        &pairs,
    )
    .unwrap()
}

/// The one-element group with -1 = 1 (the special group of a quadratically
/// closed base).
pub fn trivial_group() -> PreSpecialGroup {
    PreSpecialGroup::new("1", vec!["1".into()], vec![0], 0, &[(0, 0, 0, 0)]).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SgLevel {
    Proto,
    Pre,
    Special,
}

/// Verdicts for the SG axiom ladder. `sg6` is only decided when the check
/// was run at level `Special`.
#[derive(Debug, Clone)]
pub struct SgReport {
    pub sg0: Verdict,
    pub sg1: Verdict,
    pub sg2: Verdict,
    pub sg3: Verdict,
    pub sg4: Verdict,
    pub sg5: Verdict,
    pub sg6: Option<Verdict>,
    pub proto: bool,
    pub pre: bool,
    pub special: Option<bool>,
}

impl SgReport {
    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        let mut v = vec![
            ("sg0", &self.sg0),
            ("sg1", &self.sg1),
            ("sg2", &self.sg2),
            ("sg3", &self.sg3),
            ("sg4", &self.sg4),
            ("sg5", &self.sg5),
        ];
        if let Some(sg6) = &self.sg6 {
            v.push(("sg6", sg6));
        }
        v
    }
}

impl PreSpecialGroup {
    /// Checks the SG axioms exhaustively. Proto is SG0-SG3 plus SG5, pre
    /// additionally needs SG4, and special verifies 3-transitivity of the
    /// extended relation on top of pre.
    pub fn check_sg_axioms(&self, level: SgLevel) -> SgReport {
        let n = self.size();
        let sg0 = self.check_sg0();
        let mut sg1 = Verdict::pass();
        'sg1: for a in 0..n {
            for b in 0..n {
                if !self.iso2(a, b, b, a) {
                    sg1 = Verdict::fail(self.w("sg1", &[a, b]));
                    break 'sg1;
                }
            }
        }
        let mut sg2 = Verdict::pass();
        for a in 0..n {
            if !self.iso2(a, self.neg(a), self.one, self.minus_one) {
                sg2 = Verdict::fail(self.w("sg2", &[a]));
                break;
            }
        }
        let mut sg3 = Verdict::pass();
        'sg3: for (a, b, c, d) in self.iso2_entries() {
            if self.mul(a, b) != self.mul(c, d) {
                sg3 = Verdict::fail(self.w("sg3", &[a, b, c, d]));
                break 'sg3;
            }
        }
        let mut sg4 = Verdict::pass();
        for (a, b, c, d) in self.iso2_entries() {
            if !self.iso2(a, self.neg(c), self.neg(b), d) {
                sg4 = Verdict::fail(self.w("sg4", &[a, b, c, d]));
                break;
            }
        }
        let mut sg5 = Verdict::pass();
        'sg5: for (a, b, c, d) in self.iso2_entries() {
            for g in 0..n {
                if !self.iso2(self.mul(g, a), self.mul(g, b), self.mul(g, c), self.mul(g, d)) {
                    sg5 = Verdict::fail(self.w("sg5", &[a, b, c, d, g]));
                    break 'sg5;
                }
            }
        }
        let proto = sg0.ok && sg1.ok && sg2.ok && sg3.ok && sg5.ok;
        let pre = proto && sg4.ok;
        let (sg6, special) = if level == SgLevel::Special {
            let v = self.check_sg6();
            let ok = pre && v.ok;
            (Some(v), Some(ok))
        } else {
            (None, None)
        };
        SgReport {
            sg0,
            sg1,
            sg2,
            sg3,
            sg4,
            sg5,
            sg6,
            proto,
            pre,
            special,
        }
    }

    fn check_sg0(&self) -> Verdict {
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                if !self.iso2(a, b, a, b) {
                    return Verdict::fail(self.w("sg0_reflexive", &[a, b]));
                }
            }
        }
        for (a, b, c, d) in self.iso2_entries() {
            if !self.iso2(c, d, a, b) {
                return Verdict::fail(self.w("sg0_symmetric", &[a, b, c, d]));
            }
        }
        // Transitivity on pairs.
        let entries = self.iso2_entries();
        for &(a, b, c, d) in &entries {
            for e in 0..n {
                for f in 0..n {
                    if self.iso2(c, d, e, f) && !self.iso2(a, b, e, f) {
                        return Verdict::fail(self.w("sg0_transitive", &[a, b, c, d, e, f]));
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// 3-transitivity of the inductively extended relation, checked over all
    /// pairs of related triples.
    fn check_sg6(&self) -> Verdict {
        let env = FormEnv::new(self);
        let n = self.size();
        let triples: Vec<[usize; 3]> = {
            let mut v = Vec::with_capacity(n * n * n);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        v.push([a, b, c]);
                    }
                }
            }
            v
        };
        let m = triples.len();
        // Related-triple bit rows.
        let mut rows: Vec<crate::gf2::BitVector> = Vec::with_capacity(m);
        for t in &triples {
            let mut row = crate::gf2::BitVector::zeros(m);
            for (j, u) in triples.iter().enumerate() {
                if env.isometric_slices(t, u) {
                    row.set(j, true);
                }
            }
            rows.push(row);
        }
        for (i, row) in rows.iter().enumerate() {
            for j in row.iter_ones() {
                // Everything related to j must be related to i.
                for k in rows[j].iter_ones() {
                    if !row.get(k) {
                        let (t, u, v) = (&triples[i], &triples[j], &triples[k]);
                        return Verdict::fail(self.w(
                            "sg6",
                            &[t[0], t[1], t[2], u[0], u[1], u[2], v[0], v[1], v[2]],
                        ));
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// Re-evaluates a single SG axiom instance; true when it indeed fails.
    pub fn replay_witness(&self, w: &Witness) -> bool {
        let Some(idx): Option<Vec<usize>> = w.elements.iter().map(|l| self.index_of(l)).collect()
        else {
            return false;
        };
        let e = |k: usize| idx[k];
        match w.axiom.as_str() {
            "sg0_reflexive" => !self.iso2(e(0), e(1), e(0), e(1)),
            "sg0_symmetric" => {
                self.iso2(e(0), e(1), e(2), e(3)) && !self.iso2(e(2), e(3), e(0), e(1))
            }
            "sg0_transitive" => {
                self.iso2(e(0), e(1), e(2), e(3))
                    && self.iso2(e(2), e(3), e(4), e(5))
                    && !self.iso2(e(0), e(1), e(4), e(5))
            }
            "sg1" => !self.iso2(e(0), e(1), e(1), e(0)),
            "sg2" => !self.iso2(e(0), self.neg(e(0)), self.one, self.minus_one),
            "sg3" => {
                self.iso2(e(0), e(1), e(2), e(3))
                    && self.mul(e(0), e(1)) != self.mul(e(2), e(3))
            }
            "sg4" => {
                self.iso2(e(0), e(1), e(2), e(3))
                    && !self.iso2(e(0), self.neg(e(2)), self.neg(e(1)), e(3))
            }
            "sg5" => {
                self.iso2(e(0), e(1), e(2), e(3))
                    && !self.iso2(
                        self.mul(e(4), e(0)),
                        self.mul(e(4), e(1)),
                        self.mul(e(4), e(2)),
                        self.mul(e(4), e(3)),
                    )
            }
            "sg6" => {
                let env = FormEnv::new(self);
                let t = [e(0), e(1), e(2)];
                let u = [e(3), e(4), e(5)];
                let v = [e(6), e(7), e(8)];
                env.isometric_slices(&t, &u)
                    && env.isometric_slices(&u, &v)
                    && !env.isometric_slices(&t, &v)
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_is_special() {
        let g = z2_group();
        let rep = g.check_sg_axioms(SgLevel::Special);
        assert!(rep.proto && rep.pre);
        assert_eq!(rep.special, Some(true));
    }

    #[test]
    fn trivial_group_is_special() {
        let g = trivial_group();
        let rep = g.check_sg_axioms(SgLevel::Special);
        assert_eq!(rep.special, Some(true));
    }

    #[test]
    fn total_relation_on_z2_fails_sg3() {
        // Everything isometric: <1,1> ~ <1,-1> violates ab = cd.
        let mut pairs = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        pairs.push((a, b, c, d));
                    }
                }
            }
        }
        let g = PreSpecialGroup::new(
            "bad",
            vec!["1".into(), "-1".into()],
            vec![0, 1, 1, 0],
            1,
            &pairs,
        )
        .unwrap();
        let rep = g.check_sg_axioms(SgLevel::Pre);
        assert!(!rep.sg3.ok);
        let w = rep.sg3.witness.unwrap();
        assert!(g.replay_witness(&w));
        assert!(!z2_group().replay_witness(&w));
    }

    #[test]
    fn group_laws_enforced_at_construction() {
        // Z/4 is not exponent 2.
        let mul: Vec<usize> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a + b) % 4))
            .collect();
        let r = PreSpecialGroup::new(
            "z4",
            (0..4).map(|i| i.to_string()).collect(),
            mul,
            0,
            &[],
        );
        assert!(r.is_err());
    }
}
