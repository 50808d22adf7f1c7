//! Truncated inductive graded rings: towers of pointed GF(2)-modules
//! `R_0, .., R_N` with transitions `h_n` and a bilinear graded product.
//!
//! Level 0 is the scalar line; its action on every level is definitional
//! (the unit acts as the identity), so product tables are stored only for
//! positive degrees. Everything else from the axiom list is decided
//! exhaustively over basis tuples within the truncation.

mod constructions;
mod functors;
mod gamma;

pub use constructions::{
    coequalizer, factor_through_kernel, ideal_closure, ideal_ops, igr_chain_colimit, igr_product,
    igr_tensor, kernel_subspaces, quotient_by_subspaces, IdealOps,
};
pub use functors::{
    algebra_a, hyperbolic_quotient_q, level1_subring, spectral_report, trivial_t, AlgebraA,
    F2Algebra, Level1Subring, QuotientQ, SpectralReport,
};
pub use gamma::{adjunction_ops, enumerate_igr_morphisms, gamma, AdjunctionReport};

use crate::gf2::{BilinearTable, BitMatrix, BitVector};
use crate::verdict::{Verdict, Witness};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A truncated inductive graded ring.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedIgr {
    name: String,
    truncation: usize,
    dims: Vec<usize>,
    tops: Vec<BitVector>,
    h: Vec<BitMatrix>,
    /// Product tables for degrees `n, m >= 1` with `n + m <= truncation`.
    star: BTreeMap<(usize, usize), BilinearTable>,
}

impl TruncatedIgr {
    pub fn new(
        name: impl Into<String>,
        dims: Vec<usize>,
        tops: Vec<BitVector>,
        h: Vec<BitMatrix>,
        star: BTreeMap<(usize, usize), BilinearTable>,
    ) -> Result<Self> {
        let name = name.into();
        if dims.is_empty() {
            return Err(Error::InvalidStructure("tower needs at least level 0".into()));
        }
        let n = dims.len() - 1;
        if tops.len() != n + 1 {
            return Err(Error::InvalidStructure("one top element per level".into()));
        }
        for (lvl, t) in tops.iter().enumerate() {
            if t.len() != dims[lvl] {
                return Err(Error::DimensionMismatch(format!(
                    "top at level {lvl} has length {}, dimension is {}",
                    t.len(),
                    dims[lvl]
                )));
            }
        }
        if h.len() != n {
            return Err(Error::InvalidStructure(
                "one transition per level below truncation".into(),
            ));
        }
        for (lvl, m) in h.iter().enumerate() {
            if m.rows() != dims[lvl + 1] || m.cols() != dims[lvl] {
                return Err(Error::DimensionMismatch(format!(
                    "transition at level {lvl} must be {}x{}",
                    dims[lvl + 1],
                    dims[lvl]
                )));
            }
        }
        for lvl_n in 1..=n {
            for lvl_m in 1..=n {
                if lvl_n + lvl_m > n {
                    continue;
                }
                let Some(t) = star.get(&(lvl_n, lvl_m)) else {
                    return Err(Error::InvalidStructure(format!(
                        "missing product table ({lvl_n}, {lvl_m})"
                    )));
                };
                if t.dims() != (dims[lvl_n], dims[lvl_m], dims[lvl_n + lvl_m]) {
                    return Err(Error::DimensionMismatch(format!(
                        "product table ({lvl_n}, {lvl_m}) has wrong shape"
                    )));
                }
            }
        }
        for &(a, b) in star.keys() {
            if a == 0 || b == 0 || a + b > n {
                return Err(Error::InvalidStructure(format!(
                    "product table ({a}, {b}) out of truncation"
                )));
            }
        }
        Ok(TruncatedIgr {
            name,
            truncation: n,
            dims,
            tops,
            h,
            star,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, level: usize) -> usize {
        self.dims[level]
    }

    pub fn top(&self, level: usize) -> &BitVector {
        &self.tops[level]
    }

    pub fn h(&self, level: usize) -> &BitMatrix {
        &self.h[level]
    }

    /// Composite transition `h^to_from`.
    pub fn h_composite(&self, from: usize, to: usize) -> BitMatrix {
        assert!(from <= to && to <= self.truncation);
        let mut m = BitMatrix::identity(self.dims[from]);
        for lvl in from..to {
            m = self.h[lvl].mul_mat(&m);
        }
        m
    }

    pub fn star_table(&self, n: usize, m: usize) -> &BilinearTable {
        &self.star[&(n, m)]
    }

    /// The graded product `x *_{n,m} y`, including the definitional scalar
    /// action of level 0.
    pub fn star_apply(&self, n: usize, m: usize, x: &BitVector, y: &BitVector) -> BitVector {
        assert!(n + m <= self.truncation, "product escapes the truncation");
        if n == 0 {
            let mut out = BitVector::zeros(self.dims[m]);
            if x.get(0) {
                out.xor_assign(y);
            }
            return out;
        }
        if m == 0 {
            let mut out = BitVector::zeros(self.dims[n]);
            if y.get(0) {
                out.xor_assign(x);
            }
            return out;
        }
        self.star_table(n, m).apply(x, y).expect("table shapes validated")
    }

    fn basis(&self, level: usize) -> impl Iterator<Item = BitVector> + '_ {
        (0..self.dims[level]).map(move |i| BitVector::unit(self.dims[level], i))
    }

    fn w(axiom: &str, parts: &[String]) -> Witness {
        Witness::new(axiom, parts.to_vec())
    }
}

impl fmt::Debug for TruncatedIgr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedIgr({}, dims {:?})", self.name, self.dims)
    }
}

/// Verdicts for the inductive graded ring axioms, grouped as in the
/// definition. Module laws and bilinearity hold by representation (levels are
/// literally `F_2^d` and products are stored as bilinear tables), so the
/// checked groups are the ones with content.
#[derive(Debug, Clone)]
pub struct IgrReport {
    /// Level 0 is the scalar line with top = 1.
    pub level0: Verdict,
    /// `h_n(top_n) = top_{n+1}`.
    pub top_transitions: Verdict,
    /// `h_n = top_1 *_{1,n} _` for `n >= 1`.
    pub h_is_top1_mult: Verdict,
    /// `x * y = y * x` on basis pairs.
    pub commutative: Verdict,
    /// `(x*y)*z = x*(y*z)` on basis triples within truncation.
    pub associative: Verdict,
    /// `h^p_n(x) * h^q_m(y) = h^{p+q}_{n+m}(x*y)` for all in-range `p, q`.
    pub h_compat: Verdict,
    pub ok: bool,
}

impl IgrReport {
    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        vec![
            ("level0", &self.level0),
            ("top_transitions", &self.top_transitions),
            ("h_is_top1_mult", &self.h_is_top1_mult),
            ("commutative", &self.commutative),
            ("associative", &self.associative),
            ("h_compat", &self.h_compat),
        ]
    }
}

impl TruncatedIgr {
    /// Checks every igr axiom exhaustively over basis tuples within the
    /// truncation.
    pub fn check_igr(&self) -> IgrReport {
        let n = self.truncation;
        let level0 = if self.dims[0] == 1 && self.tops[0].get(0) {
            Verdict::pass()
        } else {
            Verdict::fail(Self::w("igr_level0", &["level 0".into()]))
        };

        let mut top_transitions = Verdict::pass();
        for lvl in 0..n {
            if self.h[lvl].mul_vec(&self.tops[lvl]) != self.tops[lvl + 1] {
                top_transitions =
                    Verdict::fail(Self::w("igr_top_transition", &[lvl.to_string()]));
                break;
            }
        }

        let mut h_is_top1_mult = Verdict::pass();
        'hmul: for lvl in 1..n {
            for (i, e) in self.basis(lvl).enumerate() {
                let via_h = self.h[lvl].mul_vec(&e);
                let via_star = self.star_apply(1, lvl, &self.tops[1], &e);
                if via_h != via_star {
                    h_is_top1_mult = Verdict::fail(Self::w(
                        "igr_h_is_top1_mult",
                        &[lvl.to_string(), i.to_string()],
                    ));
                    break 'hmul;
                }
            }
        }

        let mut commutative = Verdict::pass();
        'comm: for a in 1..n {
            for b in 1..n {
                if a + b > n {
                    continue;
                }
                for (i, x) in self.basis(a).enumerate() {
                    for (j, y) in self.basis(b).enumerate() {
                        if self.star_apply(a, b, &x, &y) != self.star_apply(b, a, &y, &x) {
                            commutative = Verdict::fail(Self::w(
                                "igr_commutative",
                                &[a.to_string(), b.to_string(), i.to_string(), j.to_string()],
                            ));
                            break 'comm;
                        }
                    }
                }
            }
        }

        let mut associative = Verdict::pass();
        'assoc: for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    if a + b + c > n {
                        continue;
                    }
                    for (i, x) in self.basis(a).enumerate() {
                        for (j, y) in self.basis(b).enumerate() {
                            for (k, z) in self.basis(c).enumerate() {
                                let lhs =
                                    self.star_apply(a + b, c, &self.star_apply(a, b, &x, &y), &z);
                                let rhs =
                                    self.star_apply(a, b + c, &x, &self.star_apply(b, c, &y, &z));
                                if lhs != rhs {
                                    associative = Verdict::fail(Self::w(
                                        "igr_associative",
                                        &[
                                            a.to_string(),
                                            b.to_string(),
                                            c.to_string(),
                                            i.to_string(),
                                            j.to_string(),
                                            k.to_string(),
                                        ],
                                    ));
                                    break 'assoc;
                                }
                            }
                        }
                    }
                }
            }
        }

        let mut h_compat = Verdict::pass();
        'compat: for a in 1..n {
            for b in 1..n {
                if a + b > n {
                    continue;
                }
                for p in a..n {
                    for q in b..n {
                        if p + q > n {
                            continue;
                        }
                        let ha = self.h_composite(a, p);
                        let hb = self.h_composite(b, q);
                        let hab = self.h_composite(a + b, p + q);
                        for (i, x) in self.basis(a).enumerate() {
                            for (j, y) in self.basis(b).enumerate() {
                                let lhs = self.star_apply(
                                    p,
                                    q,
                                    &ha.mul_vec(&x),
                                    &hb.mul_vec(&y),
                                );
                                let rhs = hab.mul_vec(&self.star_apply(a, b, &x, &y));
                                if lhs != rhs {
                                    h_compat = Verdict::fail(Self::w(
                                        "igr_h_compat",
                                        &[
                                            a.to_string(),
                                            b.to_string(),
                                            p.to_string(),
                                            q.to_string(),
                                            i.to_string(),
                                            j.to_string(),
                                        ],
                                    ));
                                    break 'compat;
                                }
                            }
                        }
                    }
                }
            }
        }

        let ok = level0.ok
            && top_transitions.ok
            && h_is_top1_mult.ok
            && commutative.ok
            && associative.ok
            && h_compat.ok;
        IgrReport {
            level0,
            top_transitions,
            h_is_top1_mult,
            commutative,
            associative,
            h_compat,
            ok,
        }
    }

    /// Re-evaluates a single igr axiom instance; true when it indeed fails.
    pub fn replay_witness(&self, w: &Witness) -> bool {
        let ints: Vec<usize> = w
            .elements
            .iter()
            .filter_map(|s| s.parse().ok())
            .collect();
        let e = |lvl: usize, i: usize| BitVector::unit(self.dims[lvl], i);
        match (w.axiom.as_str(), ints.as_slice()) {
            ("igr_level0", _) => !(self.dims[0] == 1 && self.tops[0].get(0)),
            ("igr_top_transition", [lvl]) => {
                self.h[*lvl].mul_vec(&self.tops[*lvl]) != self.tops[*lvl + 1]
            }
            ("igr_h_is_top1_mult", [lvl, i]) => {
                self.h[*lvl].mul_vec(&e(*lvl, *i))
                    != self.star_apply(1, *lvl, &self.tops[1], &e(*lvl, *i))
            }
            ("igr_commutative", [a, b, i, j]) => {
                self.star_apply(*a, *b, &e(*a, *i), &e(*b, *j))
                    != self.star_apply(*b, *a, &e(*b, *j), &e(*a, *i))
            }
            ("igr_associative", [a, b, c, i, j, k]) => {
                let lhs = self.star_apply(
                    a + b,
                    *c,
                    &self.star_apply(*a, *b, &e(*a, *i), &e(*b, *j)),
                    &e(*c, *k),
                );
                let rhs = self.star_apply(
                    *a,
                    b + c,
                    &e(*a, *i),
                    &self.star_apply(*b, *c, &e(*b, *j), &e(*c, *k)),
                );
                lhs != rhs
            }
            ("igr_h_compat", [a, b, p, q, i, j]) => {
                let lhs = self.star_apply(
                    *p,
                    *q,
                    &self.h_composite(*a, *p).mul_vec(&e(*a, *i)),
                    &self.h_composite(*b, *q).mul_vec(&e(*b, *j)),
                );
                let rhs = self
                    .h_composite(a + b, p + q)
                    .mul_vec(&self.star_apply(*a, *b, &e(*a, *i), &e(*b, *j)));
                lhs != rhs
            }
            _ => false,
        }
    }
}

/// A morphism of truncated igrs: one matrix per level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IgrMorphism {
    pub maps: Vec<BitMatrix>,
}

impl IgrMorphism {
    pub fn identity(r: &TruncatedIgr) -> Self {
        IgrMorphism {
            maps: r.dims().iter().map(|&d| BitMatrix::identity(d)).collect(),
        }
    }

    pub fn level(&self, n: usize) -> &BitMatrix {
        &self.maps[n]
    }

    pub fn apply(&self, n: usize, v: &BitVector) -> BitVector {
        self.maps[n].mul_vec(v)
    }

    pub fn compose(&self, first: &IgrMorphism) -> IgrMorphism {
        IgrMorphism {
            maps: self
                .maps
                .iter()
                .zip(&first.maps)
                .map(|(g, f)| g.mul_mat(f))
                .collect(),
        }
    }

    pub fn is_levelwise_injective(&self) -> bool {
        self.maps.iter().all(|m| m.is_injective())
    }

    pub fn is_levelwise_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.is_surjective())
    }

    pub fn is_levelwise_bijective(&self) -> bool {
        self.maps.iter().all(|m| m.is_bijective())
    }
}

/// Verifies that per-level matrices form an igr morphism: tops are preserved,
/// the transition squares commute and products of basis vectors are
/// preserved. Returns the first violation.
pub fn check_igr_morphism(
    f: &IgrMorphism,
    source: &TruncatedIgr,
    target: &TruncatedIgr,
) -> Result<Option<Witness>> {
    let n = source.truncation();
    if target.truncation() != n {
        return Err(Error::TruncationMismatch {
            expected: n,
            got: target.truncation(),
        });
    }
    if f.maps.len() != n + 1 {
        return Err(Error::DimensionMismatch("one matrix per level".into()));
    }
    for lvl in 0..=n {
        if f.maps[lvl].rows() != target.dim(lvl) || f.maps[lvl].cols() != source.dim(lvl) {
            return Err(Error::DimensionMismatch(format!(
                "morphism level {lvl} must be {}x{}",
                target.dim(lvl),
                source.dim(lvl)
            )));
        }
    }
    for lvl in 0..=n {
        if f.apply(lvl, source.top(lvl)) != *target.top(lvl) {
            return Ok(Some(Witness::new(
                "igr_morphism_top",
                vec![lvl.to_string()],
            )));
        }
    }
    for lvl in 0..n {
        let lhs = target.h(lvl).mul_mat(&f.maps[lvl]);
        let rhs = f.maps[lvl + 1].mul_mat(source.h(lvl));
        if lhs != rhs {
            return Ok(Some(Witness::new(
                "igr_morphism_square",
                vec![lvl.to_string()],
            )));
        }
    }
    for a in 1..n {
        for b in 1..n {
            if a + b > n {
                continue;
            }
            for i in 0..source.dim(a) {
                for j in 0..source.dim(b) {
                    let x = BitVector::unit(source.dim(a), i);
                    let y = BitVector::unit(source.dim(b), j);
                    let lhs = f.apply(a + b, &source.star_apply(a, b, &x, &y));
                    let rhs =
                        target.star_apply(a, b, &f.apply(a, &x), &f.apply(b, &y));
                    if lhs != rhs {
                        return Ok(Some(Witness::new(
                            "igr_morphism_product",
                            vec![a.to_string(), b.to_string(), i.to_string(), j.to_string()],
                        )));
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A constant tower with all levels F_2 and identity transitions.
    pub(crate) fn constant_tower(n: usize) -> TruncatedIgr {
        let dims = vec![1; n + 1];
        let tops = vec![BitVector::ones(1); n + 1];
        let h = vec![BitMatrix::identity(1); n];
        let mut star = BTreeMap::new();
        for a in 1..n {
            for b in 1..n {
                if a + b <= n {
                    star.insert(
                        (a, b),
                        BilinearTable::from_fn(1, 1, 1, |_, _| BitVector::ones(1)),
                    );
                }
            }
        }
        TruncatedIgr::new("const", dims, tops, h, star).unwrap()
    }

    #[test]
    fn constant_tower_passes() {
        let t = constant_tower(4);
        let rep = t.check_igr();
        assert!(rep.ok, "{:?}", rep);
    }

    #[test]
    fn corrupted_top_fails_axiom_iii_with_witness() {
        let mut t = constant_tower(4);
        // Break h_1(top_1) = top_2 by zeroing the transition.
        t.h[1] = BitMatrix::zeros(1, 1);
        let rep = t.check_igr();
        assert!(!rep.top_transitions.ok);
        let w = rep.top_transitions.witness.unwrap();
        assert_eq!(w.elements, vec!["1"]);
        assert!(t.replay_witness(&w));
        assert!(!constant_tower(4).replay_witness(&w));
    }

    #[test]
    fn identity_is_a_morphism() {
        let t = constant_tower(3);
        let id = IgrMorphism::identity(&t);
        assert!(check_igr_morphism(&id, &t, &t).unwrap().is_none());
        assert!(id.is_levelwise_bijective());
    }
}
