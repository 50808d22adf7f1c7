//! Witt rings of finite special groups: canonical anisotropic
//! representatives, the fundamental-ideal filtration with a three-valued
//! membership oracle, the graded Witt ring, the signature side and the
//! conjecture suite.

mod conjectures;
mod graded;
mod signature;

pub use conjectures::{conjecture_suite, ConjectureParams, ConjectureReport};
pub use graded::{graded_witt, s_r_transformations, GradedWitt, SrReport};
pub use signature::{signature_ring, FilteredRing, ParityFunctions, SignatureReport};

use crate::sgroup::{enumerate_orderings, FormEnv, PreSpecialGroup, SgLevel};
use crate::{Error, Result};
use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

/// All non-decreasing tuples of the given length over `0..size`.
pub(crate) fn nondecreasing_tuples(len: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut t = vec![0usize; len];
    loop {
        out.push(t.clone());
        let mut pos = len;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if t[pos] + 1 < size {
                let v = t[pos] + 1;
                for x in t.iter_mut().skip(pos) {
                    *x = v;
                }
                break;
            }
        }
    }
}

/// The canonical anisotropic representative of a Witt class: entries in
/// non-decreasing representation order, empty for the zero class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WittClass {
    entries: Vec<usize>,
}

impl WittClass {
    pub fn zero() -> Self {
        WittClass { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn dim2(&self) -> usize {
        self.entries.len() % 2
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn labels(&self, g: &PreSpecialGroup) -> Vec<String> {
        self.entries.iter().map(|&e| g.label(e).to_string()).collect()
    }
}

/// Outcome of a bounded membership query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Unknown { bound: usize },
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes)
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Decision::Unknown { .. })
    }
}

#[derive(Debug, Clone)]
struct Reachable {
    cumulative: BTreeSet<Vec<usize>>,
    frontier: Vec<Vec<usize>>,
    expansions: usize,
    closed: bool,
}

/// Witt-ring arithmetic over one special group, with append-only caches for
/// isometry, representation sets and membership decisions.
pub struct WittContext<'g> {
    env: FormEnv<'g>,
    orderings: Vec<Vec<bool>>,
    bound: usize,
    membership: RefCell<HashMap<(Vec<usize>, usize), Decision>>,
    gens: RefCell<HashMap<usize, Vec<Vec<usize>>>>,
    reach: RefCell<HashMap<usize, Reachable>>,
}

impl<'g> WittContext<'g> {
    /// Requires a special group; `bound` caps the Pfister-sum searches.
    pub fn new(g: &'g PreSpecialGroup, bound: usize) -> Result<Self> {
        let rep = g.check_sg_axioms(SgLevel::Special);
        if rep.special != Some(true) {
            return Err(Error::NotSpecialGroup(g.name().to_string()));
        }
        Ok(WittContext {
            env: FormEnv::new(g),
            orderings: enumerate_orderings(g),
            bound,
            membership: RefCell::new(HashMap::new()),
            gens: RefCell::new(HashMap::new()),
            reach: RefCell::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &'g PreSpecialGroup {
        self.env.group()
    }

    pub fn orderings(&self) -> &[Vec<bool>] {
        &self.orderings
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn g(&self) -> &PreSpecialGroup {
        self.env.group()
    }

    fn rep_mask(&self, phi: &[usize]) -> u64 {
        self.env.represents_slice(phi)
    }

    /// Splits a represented element off a form: `psi = <b> + theta` up to
    /// isometry. Returns None when `b` is not represented.
    fn split_off(&self, psi: &[usize], b: usize) -> Option<Vec<usize>> {
        if let Some(pos) = psi.iter().position(|&e| e == b) {
            let mut rest = psi.to_vec();
            rest.remove(pos);
            return Some(rest);
        }
        if psi.len() <= 1 {
            return None;
        }
        let c = psi[0];
        let rest = &psi[1..];
        let rest_mask = self.rep_mask(rest);
        let g = self.g();
        for y in 0..g.size() {
            if rest_mask >> y & 1 == 0 {
                continue;
            }
            if self.rep_mask(&[c, y]) >> b & 1 == 0 {
                continue;
            }
            if let Some(theta) = self.split_off(rest, y) {
                let mut out = vec![g.mul(g.mul(b, c), y)];
                out.extend(theta);
                return Some(out);
            }
        }
        None
    }

    /// Witt reduction plus greedy canonicalization. `scan` permutes the
    /// order in which entries are examined for a hyperbolic split; the
    /// canonical output is independent of it.
    pub fn reduce_with_scan(&self, form: &[usize], scan: &[usize]) -> WittClass {
        let g = self.g();
        let mut cur = form.to_vec();
        'outer: loop {
            if cur.len() < 2 {
                break;
            }
            // The scan reorders the split attempts but stays exhaustive.
            let mut positions: Vec<usize> = Vec::with_capacity(cur.len());
            for &i in scan {
                if i < cur.len() && !positions.contains(&i) {
                    positions.push(i);
                }
            }
            for i in 0..cur.len() {
                if !positions.contains(&i) {
                    positions.push(i);
                }
            }
            for i in positions {
                let mut rest = cur.clone();
                let a = rest.remove(i);
                let target = g.neg(a);
                if self.rep_mask(&rest) >> target & 1 == 1 {
                    cur = self
                        .split_off(&rest, target)
                        .expect("represented elements split off");
                    continue 'outer;
                }
            }
            break;
        }
        // Greedy minimal-representative canonical form; with Witt
        // cancellation this equals the lexicographically least isometric
        // representative.
        let mut canon = Vec::with_capacity(cur.len());
        while !cur.is_empty() {
            let mask = self.rep_mask(&cur);
            let c = (0..g.size())
                .find(|&e| mask >> e & 1 == 1)
                .expect("anisotropic forms represent their entries");
            cur = self.split_off(&cur, c).expect("representative splits off");
            canon.push(c);
        }
        WittClass { entries: canon }
    }

    pub fn reduce(&self, form: &[usize]) -> WittClass {
        self.reduce_with_scan(form, &[])
    }

    /// Spec-literal reduction: search a hyperbolic pair via isometry over all
    /// complement multisets, then take the lexicographically least isometric
    /// anisotropic representative. Exponential; kept as the independent
    /// oracle for `reduce`.
    pub fn reduce_by_isometry_search(&self, form: &[usize]) -> WittClass {
        let g = self.g();
        let n = g.size();
        let mut cur: Vec<usize> = form.to_vec();
        cur.sort_unstable();
        'outer: loop {
            let d = cur.len();
            if d < 2 {
                break;
            }
            let mut split = None;
            'search: for a in 0..n {
                let mut psi = vec![0usize; d - 2];
                if self.search_split(&cur, a, &mut psi, 0) {
                    split = Some(psi);
                    break 'search;
                }
            }
            match split {
                Some(mut psi) => {
                    psi.sort_unstable();
                    cur = psi;
                    continue 'outer;
                }
                None => break,
            }
        }
        if cur.is_empty() {
            return WittClass::zero();
        }
        let d = cur.len();
        let mut candidate = vec![0usize; d];
        self.lex_min_isometric(&cur, &mut candidate, 0)
            .map(|c| WittClass { entries: c })
            .expect("a form is isometric to itself")
    }

    fn search_split(&self, cur: &[usize], a: usize, psi: &mut [usize], pos: usize) -> bool {
        if pos == psi.len() {
            let g = self.g();
            let mut target = vec![a, g.neg(a)];
            target.extend_from_slice(psi);
            return self.env.isometric_slices(cur, &target);
        }
        let start = if pos == 0 { 0 } else { psi[pos - 1] };
        for e in start..self.g().size() {
            psi[pos] = e;
            if self.search_split(cur, a, psi, pos + 1) {
                return true;
            }
        }
        false
    }

    fn lex_min_isometric(&self, cur: &[usize], cand: &mut Vec<usize>, pos: usize) -> Option<Vec<usize>> {
        if pos == cand.len() {
            if self.env.isometric_slices(cur, cand) {
                return Some(cand.clone());
            }
            return None;
        }
        let start = if pos == 0 { 0 } else { cand[pos - 1] };
        for e in start..self.g().size() {
            cand[pos] = e;
            if let Some(hit) = self.lex_min_isometric(cur, cand, pos + 1) {
                return Some(hit);
            }
        }
        None
    }

    pub fn class_of_form(&self, entries: &[usize]) -> WittClass {
        self.reduce(entries)
    }

    pub fn add(&self, x: &WittClass, y: &WittClass) -> WittClass {
        let mut form = x.entries.clone();
        form.extend_from_slice(&y.entries);
        self.reduce(&form)
    }

    pub fn mul(&self, x: &WittClass, y: &WittClass) -> WittClass {
        let g = self.g();
        let mut form = Vec::with_capacity(x.dim() * y.dim());
        for &a in &x.entries {
            for &b in &y.entries {
                form.push(g.mul(a, b));
            }
        }
        self.reduce(&form)
    }

    /// The class of `<a> tensor x`.
    pub fn scale(&self, a: usize, x: &WittClass) -> WittClass {
        let g = self.g();
        let form: Vec<usize> = x.entries.iter().map(|&e| g.mul(a, e)).collect();
        self.reduce(&form)
    }

    pub fn neg_class(&self, x: &WittClass) -> WittClass {
        self.scale(self.g().minus_one(), x)
    }

    pub fn one(&self) -> WittClass {
        WittClass {
            entries: vec![self.g().one()],
        }
    }

    /// The n-fold Pfister class `<1,-a_1> x .. x <1,-a_n>`.
    pub fn pfister(&self, gens: &[usize]) -> WittClass {
        assert!(!gens.is_empty(), "Pfister forms have at least one slot");
        let g = self.g();
        let mut acc = self.one();
        for &a in gens {
            let factor = WittClass {
                entries: vec![g.one(), g.neg(a)],
            };
            let factor = self.reduce(&factor.entries);
            acc = self.mul(&acc, &factor);
        }
        acc
    }

    pub fn signature(&self, x: &WittClass, ordering: &[bool]) -> i64 {
        x.entries
            .iter()
            .map(|&e| if ordering[e] { -1 } else { 1 })
            .sum()
    }

    pub fn signatures(&self, x: &WittClass) -> Vec<i64> {
        self.orderings
            .iter()
            .map(|o| self.signature(x, o))
            .collect()
    }

    /// Distinct nonzero n-fold Pfister classes and their negatives.
    fn pfister_generators(&self, n: usize) -> Vec<Vec<usize>> {
        if let Some(hit) = self.gens.borrow().get(&n) {
            return hit.clone();
        }
        let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for tuple in nondecreasing_tuples(n, self.g().size()) {
            if tuple.is_empty() {
                continue;
            }
            let p = self.pfister(&tuple);
            if !p.is_zero() {
                set.insert(self.neg_class(&p).entries.clone());
                set.insert(p.entries);
            }
        }
        let out: Vec<Vec<usize>> = set.into_iter().collect();
        self.gens.borrow_mut().insert(n, out.clone());
        out
    }

    fn extend_reachable(&self, n: usize, target_expansions: usize) -> Reachable {
        let mut cache = self.reach.borrow_mut();
        let entry = cache.entry(n).or_insert_with(|| {
            let mut cumulative = BTreeSet::new();
            cumulative.insert(Vec::new());
            Reachable {
                cumulative,
                frontier: vec![Vec::new()],
                expansions: 0,
                closed: false,
            }
        });
        let gens = if entry.closed || entry.expansions >= target_expansions {
            Vec::new()
        } else {
            self.pfister_generators(n)
        };
        while !entry.closed && entry.expansions < target_expansions {
            let mut next = Vec::new();
            for f in std::mem::take(&mut entry.frontier) {
                let x = WittClass { entries: f };
                for gen in &gens {
                    let sum = self.add(&x, &WittClass { entries: gen.clone() });
                    if entry.cumulative.insert(sum.entries.clone()) {
                        next.push(sum.entries);
                    }
                }
            }
            entry.expansions += 1;
            entry.closed = next.is_empty();
            entry.frontier = next;
        }
        entry.clone()
    }

    /// Bounded decision of membership in the n-th power of the fundamental
    /// ideal. Sound No certificates come from parity, the anisotropic
    /// dimension bound and signature divisibility; sound Yes certificates
    /// from an explicit bounded Pfister-sum search, which is also complete
    /// when the reachable set closes under the generators.
    pub fn in_fundamental_power(&self, x: &WittClass, n: usize) -> Decision {
        if n == 0 || x.is_zero() {
            return Decision::Yes;
        }
        let key = (x.entries.clone(), n);
        if let Some(&hit) = self.membership.borrow().get(&key) {
            return hit;
        }
        let d = self.decide_membership(x, n);
        self.membership.borrow_mut().insert(key, d);
        d
    }

    fn decide_membership(&self, x: &WittClass, n: usize) -> Decision {
        if x.dim2() == 1 {
            return Decision::No;
        }
        if n < usize::BITS as usize && x.dim() < 1usize << n {
            // Anisotropic dimension bound.
            return Decision::No;
        }
        // Signatures of n-fold Pfister multiples are divisible by 2^n.
        if n < 63 {
            let modulus = 1i64 << n;
            for o in &self.orderings {
                if self.signature(x, o) % modulus != 0 {
                    return Decision::No;
                }
            }
        }
        let reach = self.extend_reachable(n, self.bound);
        if reach.cumulative.contains(&x.entries) {
            return Decision::Yes;
        }
        if reach.closed {
            return Decision::No;
        }
        Decision::Unknown { bound: self.bound }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgroup::z2_group;

    #[test]
    fn reduction_over_z2() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let one = g.one();
        let m1 = g.minus_one();
        // <1,-1,1> reduces to <1>.
        assert_eq!(ctx.reduce(&[one, m1, one]).entries(), &[one]);
        // <1,-1> is the zero class.
        assert!(ctx.reduce(&[one, m1]).is_zero());
        // <1,1> is anisotropic over the reduced group.
        assert_eq!(ctx.reduce(&[one, one]).entries(), &[one, one]);
    }

    #[test]
    fn reduction_agrees_with_isometry_search_oracle() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        for code in 0u32..(1 << 5) {
            for d in 1..=5usize {
                let form: Vec<usize> = (0..d).map(|i| (code >> i & 1) as usize).collect();
                assert_eq!(
                    ctx.reduce(&form),
                    ctx.reduce_by_isometry_search(&form),
                    "mismatch at {form:?}"
                );
            }
        }
    }

    #[test]
    fn ring_laws_on_small_classes() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let one = ctx.one();
        let zero = WittClass::zero();
        let two = ctx.add(&one, &one);
        assert_eq!(two.dim(), 2);
        // x + 0 = x, x * 1 = x.
        assert_eq!(ctx.add(&two, &zero), two);
        assert_eq!(ctx.mul(&two, &one), two);
        // <1,1> x <1,1> = <1,1,1,1>.
        let four = ctx.mul(&two, &two);
        assert_eq!(four.dim(), 4);
        assert_eq!(ctx.add(&two, &ctx.neg_class(&two)), zero);
        // Iterating the sum walks through all even dimensions: W = Z here.
        let mut acc = zero.clone();
        for k in 1..=6 {
            acc = ctx.add(&acc, &one);
            assert_eq!(acc.dim(), k);
        }
    }

    #[test]
    fn pfister_examples_over_z2() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let one = g.one();
        let m1 = g.minus_one();
        // <<-1>> = <1,1>.
        assert_eq!(ctx.pfister(&[m1]).entries(), &[one, one]);
        // <<1>> = <1,-1> = 0.
        assert!(ctx.pfister(&[one]).is_zero());
        // <<-1,-1>> = <1,1,1,1>.
        assert_eq!(ctx.pfister(&[m1, m1]).dim(), 4);
    }

    #[test]
    fn fundamental_power_membership_over_z2() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let one = ctx.one();
        let two = ctx.add(&one, &one);
        assert_eq!(ctx.in_fundamental_power(&two, 1), Decision::Yes);
        assert_eq!(ctx.in_fundamental_power(&one, 1), Decision::No);
        // Anisotropic of dimension 2 < 4 cannot lie in I^2.
        assert_eq!(ctx.in_fundamental_power(&two, 2), Decision::No);
        let four = ctx.mul(&two, &two);
        assert_eq!(ctx.in_fundamental_power(&four, 2), Decision::Yes);
        assert_eq!(ctx.in_fundamental_power(&four, 3), Decision::No);
    }

    #[test]
    fn membership_closes_for_torsion_witt_rings() {
        // The trivial group has W = Z/2: the search closes instantly.
        let g = crate::sgroup::trivial_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let one = ctx.one();
        assert_eq!(ctx.in_fundamental_power(&one, 1), Decision::No);
        assert!(ctx.add(&one, &one).is_zero());
    }
}
