//! Finite multirings and hyperfields as explicit tables.
//!
//! A carrier of at most 64 elements lets every set-valued sum row live in one
//! `u64` mask, and every axiom of the multiring hierarchy is decided by
//! exhaustive enumeration. Failed verdicts carry a witness that can be
//! replayed through the defining condition.

mod examples;
mod ops;

pub use examples::{build_example, ExampleKind};
pub use ops::{find_isomorphism, hf_morphism_check, marshall_quotient, product_h, MorphismReport};

use crate::{Error, Result, MAX_CARRIER};
use std::fmt;

/// A finite multiring `(R, +, ·, −, 0, 1)` with set-valued addition.
///
/// Elements are indices into `elements`; sums are stored as bit masks over
/// element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Multiring {
    name: String,
    elements: Vec<String>,
    zero: usize,
    one: usize,
    neg: Vec<usize>,
    mul: Vec<usize>,
    sum: Vec<u64>,
}

impl Multiring {
    /// Builds a multiring from raw tables, enforcing the structural
    /// invariants: total tables, nonempty sums, involutive negation fixing
    /// zero, and distinct element labels.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        zero: usize,
        one: usize,
        neg: Vec<usize>,
        mul: Vec<usize>,
        sum: Vec<u64>,
    ) -> Result<Self> {
        let name = name.into();
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidStructure("empty carrier".into()));
        }
        if n > MAX_CARRIER {
            return Err(Error::CarrierTooLarge(n));
        }
        for (i, a) in elements.iter().enumerate() {
            if elements[..i].contains(a) {
                return Err(Error::InvalidStructure(format!("duplicate label {a:?}")));
            }
        }
        if zero >= n || one >= n {
            return Err(Error::InvalidStructure(
                "zero/one index out of range".into(),
            ));
        }
        if neg.len() != n || mul.len() != n * n || sum.len() != n * n {
            return Err(Error::InvalidStructure(format!(
                "table sizes must be {n}, {nn}, {nn} (neg, mul, sum)",
                nn = n * n
            )));
        }
        if neg.iter().any(|&x| x >= n) || mul.iter().any(|&x| x >= n) {
            return Err(Error::InvalidStructure("table entry out of range".into()));
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (k, &s) in sum.iter().enumerate() {
            if s == 0 {
                let (a, b) = (k / n, k % n);
                return Err(Error::InvalidStructure(format!(
                    "sum {} + {} is empty",
                    elements[a], elements[b]
                )));
            }
            if s & !mask != 0 {
                return Err(Error::InvalidStructure("sum mask out of range".into()));
            }
        }
        for a in 0..n {
            if neg[neg[a]] != a {
                return Err(Error::InvalidStructure(format!(
                    "negation is not involutive at {}",
                    elements[a]
                )));
            }
        }
        if neg[zero] != zero {
            return Err(Error::InvalidStructure("-0 must be 0".into()));
        }
        Ok(Multiring {
            name,
            elements,
            zero,
            one,
            neg,
            mul,
            sum,
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

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size() + b]
    }

    /// The sum `a + b` as a bit mask over element indices.
    pub fn sum_mask(&self, a: usize, b: usize) -> u64 {
        self.sum[a * self.size() + b]
    }

    pub fn sum_contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.sum_mask(a, b) >> c & 1 == 1
    }

    pub fn sum_set(&self, a: usize, b: usize) -> Vec<usize> {
        mask_elems(self.sum_mask(a, b))
    }

    /// Nonzero element indices in carrier order.
    pub fn units(&self) -> Vec<usize> {
        (0..self.size()).filter(|&i| i != self.zero).collect()
    }

    pub fn full_mask(&self) -> u64 {
        if self.size() == 64 {
            u64::MAX
        } else {
            (1u64 << self.size()) - 1
        }
    }

    /// Sum of a set and a single element, `S + b`.
    pub fn sum_mask_set(&self, s: u64, b: usize) -> u64 {
        let mut out = 0;
        for a in mask_elems(s) {
            out |= self.sum_mask(a, b);
        }
        out
    }

    /// Product of two sets, `{ab : a in S, b in T}` as a mask.
    pub fn mul_sets(&self, s: u64, t: u64) -> u64 {
        let mut out = 0;
        for a in mask_elems(s) {
            for b in mask_elems(t) {
                out |= 1 << self.mul(a, b);
            }
        }
        out
    }

    /// `1 - a` as a mask.
    pub fn one_minus(&self, a: usize) -> u64 {
        self.sum_mask(self.one, self.neg[a])
    }

    pub fn describe_mask(&self, mask: u64) -> String {
        let labels: Vec<&str> = mask_elems(mask).iter().map(|&i| self.label(i)).collect();
        format!("{{{}}}", labels.join(","))
    }

    pub fn is_hyperfield(&self) -> bool {
        self.check_multiring_axioms().multifield
    }

    pub fn is_hyperbolic_hyperfield(&self) -> bool {
        self.is_hyperfield() && self.sum_mask(self.one, self.neg[self.one]) == self.full_mask()
    }
}

impl fmt::Debug for Multiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multiring({}, {} elements)", self.name, self.size())
    }
}

pub(crate) fn mask_elems(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

pub use crate::verdict::{Verdict, Witness};

fn witness(axiom: &str, m: &Multiring, idx: &[usize]) -> Witness {
    Witness::new(axiom, idx.iter().map(|&i| m.label(i).to_string()).collect())
}

/// Verdicts for the multiring axioms, one per axiom group of the definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub multigroup_add: Verdict,
    pub monoid_mul: Verdict,
    pub zero_absorbs: Verdict,
    pub weak_distributive: Verdict,
    pub hyperring: Verdict,
    pub no_zero_divisors: Verdict,
    pub multifield: bool,
    pub multifield_witness: Option<Witness>,
    pub is_multiring: bool,
}

impl AxiomReport {
    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("multigroup_add", &self.multigroup_add),
            ("monoid_mul", &self.monoid_mul),
            ("zero_absorbs", &self.zero_absorbs),
            ("weak_distributive", &self.weak_distributive),
            ("hyperring", &self.hyperring),
            ("no_zero_divisors", &self.no_zero_divisors),
        ]
    }
}

/// Verdicts for the quadratic axioms on a hyperfield.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticReport {
    pub hyperbolic: Verdict,
    pub dm1: Verdict,
    pub dm2: Verdict,
    pub dm3: Verdict,
    pub pre_special: bool,
    pub special: bool,
}

impl Multiring {
    /// Checks every multiring axiom by exhaustive enumeration.
    pub fn check_multiring_axioms(&self) -> AxiomReport {
        let n = self.size();
        let multigroup_add = self.check_multigroup();
        let monoid_mul = self.check_monoid();

        let mut zero_absorbs = Verdict::pass();
        for a in 0..n {
            if self.mul(a, self.zero) != self.zero {
                zero_absorbs = Verdict::fail(witness("zero_absorbs", self, &[a]));
                break;
            }
        }

        // If c in a+b then cd in ad+bd.
        let mut weak_distributive = Verdict::pass();
        'weak: for a in 0..n {
            for b in 0..n {
                let s = self.sum_mask(a, b);
                for d in 0..n {
                    let rhs = self.sum_mask(self.mul(a, d), self.mul(b, d));
                    for c in mask_elems(s) {
                        if rhs >> self.mul(c, d) & 1 == 0 {
                            weak_distributive =
                                Verdict::fail(witness("weak_distributive", self, &[a, b, c, d]));
                            break 'weak;
                        }
                    }
                }
            }
        }

        // (a+b)d = ad+bd as sets.
        let mut hyperring = Verdict::pass();
        'hyper: for a in 0..n {
            for b in 0..n {
                let s = self.sum_mask(a, b);
                for d in 0..n {
                    let mut lhs = 0u64;
                    for c in mask_elems(s) {
                        lhs |= 1 << self.mul(c, d);
                    }
                    let rhs = self.sum_mask(self.mul(a, d), self.mul(b, d));
                    if lhs != rhs {
                        hyperring = Verdict::fail(witness("hyperring", self, &[a, b, d]));
                        break 'hyper;
                    }
                }
            }
        }

        let mut no_zero_divisors = Verdict::pass();
        'zd: for a in 0..n {
            for b in 0..n {
                if a != self.zero && b != self.zero && self.mul(a, b) == self.zero {
                    no_zero_divisors = Verdict::fail(witness("no_zero_divisors", self, &[a, b]));
                    break 'zd;
                }
            }
        }

        let mut multifield = self.one != self.zero;
        let mut multifield_witness = None;
        if !multifield {
            multifield_witness = Some(witness("multifield", self, &[self.one]));
        } else {
            for a in 0..n {
                if a == self.zero {
                    continue;
                }
                if !(0..n).any(|b| self.mul(a, b) == self.one) {
                    multifield = false;
                    multifield_witness = Some(witness("multifield", self, &[a]));
                    break;
                }
            }
        }

        let is_multiring = multigroup_add.ok
            && monoid_mul.ok
            && zero_absorbs.ok
            && weak_distributive.ok;
        AxiomReport {
            multigroup_add,
            monoid_mul,
            zero_absorbs,
            weak_distributive,
            hyperring,
            no_zero_divisors,
            multifield: multifield && is_multiring,
            multifield_witness,
            is_multiring,
        }
    }

    fn check_multigroup(&self) -> Verdict {
        let n = self.size();
        // Identity: y in 0+x iff x = y.
        for x in 0..n {
            if self.sum_mask(self.zero, x) != 1 << x {
                return Verdict::fail(witness("multigroup_identity", self, &[x]));
            }
        }
        // Commutativity.
        for a in 0..n {
            for b in 0..n {
                if self.sum_mask(a, b) != self.sum_mask(b, a) {
                    return Verdict::fail(witness("multigroup_commutative", self, &[a, b]));
                }
            }
        }
        // Reversibility: z in x+y implies x in z+(-y) and y in (-x)+z.
        for x in 0..n {
            for y in 0..n {
                for z in mask_elems(self.sum_mask(x, y)) {
                    if !self.sum_contains(z, self.neg[y], x) || !self.sum_contains(self.neg[x], z, y)
                    {
                        return Verdict::fail(witness("multigroup_reversible", self, &[x, y, z]));
                    }
                }
            }
        }
        // Associativity with set-union semantics.
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.sum_mask_set(self.sum_mask(x, y), z);
                    let mut rhs = 0u64;
                    for w in mask_elems(self.sum_mask(y, z)) {
                        rhs |= self.sum_mask(x, w);
                    }
                    if lhs != rhs {
                        return Verdict::fail(witness("multigroup_associative", self, &[x, y, z]));
                    }
                }
            }
        }
        Verdict::pass()
    }

    fn check_monoid(&self) -> Verdict {
        let n = self.size();
        for a in 0..n {
            if self.mul(self.one, a) != a {
                return Verdict::fail(witness("monoid_identity", self, &[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.mul(a, b) != self.mul(b, a) {
                    return Verdict::fail(witness("monoid_commutative", self, &[a, b]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Verdict::fail(witness("monoid_associative", self, &[a, b, c]));
                    }
                }
            }
        }
        Verdict::pass()
    }

    /// Checks the quadratic axiom ladder on a hyperfield: hyperbolic, DM1,
    /// DM2 and DM3. Pre-special is the conjunction of the first three,
    /// special additionally needs DM3.
    pub fn check_quadratic_axioms(&self) -> Result<QuadraticReport> {
        let ax = self.check_multiring_axioms();
        if !ax.multifield {
            return Err(Error::NotHyperfield(self.name.clone()));
        }
        let units = self.units();

        let hyperbolic = if self.sum_mask(self.one, self.neg[self.one]) == self.full_mask() {
            Verdict::pass()
        } else {
            Verdict::fail(witness("hyperbolic", self, &[self.one]))
        };

        let mut dm1 = Verdict::pass();
        for &a in &units {
            if self.mul(a, a) != self.one {
                dm1 = Verdict::fail(witness("dm1", self, &[a]));
                break;
            }
        }

        let mut dm2 = Verdict::pass();
        for &a in &units {
            let oma = self.one_minus(a);
            if self.mul_sets(oma, oma) & !oma != 0 {
                dm2 = Verdict::fail(witness("dm2", self, &[a]));
                break;
            }
        }

        // DM3 over all quintuples of nonzero elements, with the existential
        // element v also ranging over nonzero elements.
        let mut dm3 = Verdict::pass();
        'dm3: for &a in &units {
            for &b in &units {
                for &x in &units {
                    if !self.sum_contains(x, b, a) {
                        continue;
                    }
                    for &y in &units {
                        for &z in &units {
                            if !self.sum_contains(y, z, b) {
                                continue;
                            }
                            let found = mask_elems(self.sum_mask(x, z)).into_iter().any(|v| {
                                v != self.zero
                                    && self.sum_contains(y, v, a)
                                    && self.sum_contains(
                                        self.mul(x, y),
                                        self.mul(a, z),
                                        self.mul(v, b),
                                    )
                            });
                            if !found {
                                dm3 = Verdict::fail(witness("dm3", self, &[a, b, x, y, z]));
                                break 'dm3;
                            }
                        }
                    }
                }
            }
        }

        let pre_special = hyperbolic.ok && dm1.ok && dm2.ok;
        let special = pre_special && dm3.ok;
        Ok(QuadraticReport {
            hyperbolic,
            dm1,
            dm2,
            dm3,
            pre_special,
            special,
        })
    }

    pub fn is_pre_special(&self) -> bool {
        self.check_quadratic_axioms()
            .map(|q| q.pre_special)
            .unwrap_or(false)
    }

    /// Re-evaluates the single axiom instance named by a witness; returns
    /// true when the instance indeed fails.
    pub fn replay_witness(&self, w: &Witness) -> bool {
        let Some(idx): Option<Vec<usize>> = w
            .elements
            .iter()
            .map(|l| self.index_of(l))
            .collect()
        else {
            return false;
        };
        let el = |k: usize| idx[k];
        match w.axiom.as_str() {
            "multigroup_identity" => self.sum_mask(self.zero, el(0)) != 1 << el(0),
            "multigroup_commutative" => self.sum_mask(el(0), el(1)) != self.sum_mask(el(1), el(0)),
            "multigroup_reversible" => {
                let (x, y, z) = (el(0), el(1), el(2));
                self.sum_contains(x, y, z)
                    && (!self.sum_contains(z, self.neg[y], x)
                        || !self.sum_contains(self.neg[x], z, y))
            }
            "multigroup_associative" => {
                let (x, y, z) = (el(0), el(1), el(2));
                let lhs = self.sum_mask_set(self.sum_mask(x, y), z);
                let mut rhs = 0u64;
                for w in mask_elems(self.sum_mask(y, z)) {
                    rhs |= self.sum_mask(x, w);
                }
                lhs != rhs
            }
            "monoid_identity" => self.mul(self.one, el(0)) != el(0),
            "monoid_commutative" => self.mul(el(0), el(1)) != self.mul(el(1), el(0)),
            "monoid_associative" => {
                self.mul(self.mul(el(0), el(1)), el(2)) != self.mul(el(0), self.mul(el(1), el(2)))
            }
            "zero_absorbs" => self.mul(el(0), self.zero) != self.zero,
            "weak_distributive" => {
                let (a, b, c, d) = (el(0), el(1), el(2), el(3));
                self.sum_contains(a, b, c)
                    && !self.sum_contains(self.mul(a, d), self.mul(b, d), self.mul(c, d))
            }
            "hyperring" => {
                let (a, b, d) = (el(0), el(1), el(2));
                let mut lhs = 0u64;
                for c in mask_elems(self.sum_mask(a, b)) {
                    lhs |= 1 << self.mul(c, d);
                }
                lhs != self.sum_mask(self.mul(a, d), self.mul(b, d))
            }
            "no_zero_divisors" => {
                el(0) != self.zero && el(1) != self.zero && self.mul(el(0), el(1)) == self.zero
            }
            "multifield" => {
                el(0) == self.zero && el(0) == self.one
                    || el(0) != self.zero
                        && !(0..self.size()).any(|b| self.mul(el(0), b) == self.one)
            }
            "hyperbolic" => self.sum_mask(self.one, self.neg[self.one]) != self.full_mask(),
            "dm1" => el(0) != self.zero && self.mul(el(0), el(0)) != self.one,
            "dm2" => {
                let oma = self.one_minus(el(0));
                self.mul_sets(oma, oma) & !oma != 0
            }
            "dm3" => {
                let (a, b, x, y, z) = (el(0), el(1), el(2), el(3), el(4));
                self.sum_contains(x, b, a)
                    && self.sum_contains(y, z, b)
                    && !mask_elems(self.sum_mask(x, z)).into_iter().any(|v| {
                        v != self.zero
                            && self.sum_contains(y, v, a)
                            && self.sum_contains(self.mul(x, y), self.mul(a, z), self.mul(v, b))
                    })
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_passes_everything() {
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        let ax = q2.check_multiring_axioms();
        assert!(ax.is_multiring);
        assert!(ax.multifield);
        assert!(ax.hyperring.ok);
        let quad = q2.check_quadratic_axioms().unwrap();
        assert!(quad.hyperbolic.ok && quad.pre_special && quad.special);
    }

    #[test]
    fn kaleidoscope_two_is_multiring_but_not_multifield() {
        let x2 = build_example(ExampleKind::Kaleidoscope, 2).unwrap();
        let ax = x2.check_multiring_axioms();
        assert!(ax.is_multiring);
        // 2 has no inverse: 2*b has absolute value >= 2 for every nonzero b.
        assert!(!ax.multifield);
        assert!(x2.check_quadratic_axioms().is_err());
    }

    #[test]
    fn corrupted_q2_fails_with_replayable_witness() {
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        let n = q2.size();
        let one = q2.one();
        let minus_one = q2.neg(one);
        let mut sum = q2.sum.clone();
        // 1 + 1 = {-1} breaks reversibility through the identity axioms.
        sum[one * n + one] = 1 << minus_one;
        let bad = Multiring::new(
            "bad_q2",
            q2.labels().to_vec(),
            q2.zero(),
            q2.one(),
            q2.neg.clone(),
            q2.mul.clone(),
            sum,
        )
        .unwrap();
        let ax = bad.check_multiring_axioms();
        assert!(!ax.multigroup_add.ok);
        let w = ax.multigroup_add.witness.unwrap();
        assert!(bad.replay_witness(&w), "witness must replay to a failure");
        assert!(!q2.replay_witness(&w), "witness passes on the honest table");
    }

    #[test]
    fn h5_fails_dm1_with_witness_two() {
        let h5 = build_example(ExampleKind::Hp, 5).unwrap();
        let quad = h5.check_quadratic_axioms().unwrap();
        assert!(quad.hyperbolic.ok);
        assert!(!quad.dm1.ok);
        assert_eq!(quad.dm1.witness.as_ref().unwrap().elements, vec!["2"]);
        assert!(!quad.pre_special);
    }

    #[test]
    fn h3_is_pre_special_by_hand_tables() {
        let h3 = build_example(ExampleKind::Hp, 3).unwrap();
        // 2*2 = 1 and (1-2)(1-2) = {1,2}*{1,2} = {1,2} <= 1-2.
        let two = h3.index_of("2").unwrap();
        assert_eq!(h3.mul(two, two), h3.one());
        let om2 = h3.one_minus(two);
        assert_eq!(h3.describe_mask(om2), "{1,2}");
        assert_eq!(h3.mul_sets(om2, om2) & !om2, 0);
        let quad = h3.check_quadratic_axioms().unwrap();
        assert!(quad.pre_special);
    }
}
