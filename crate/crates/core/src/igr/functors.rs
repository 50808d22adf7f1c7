//! Functors between towers and plain GF(2)-algebras: the constant tower, the
//! colimit algebra, the level-1 generated subring, the hyperbolic quotient
//! and the spectral data (orderings, boolean hull, MC, nilradical).

use super::constructions::{ideal_ops, RowSpace};
use super::{IgrMorphism, TruncatedIgr};
use crate::gf2::{BilinearTable, BitMatrix, BitVector};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A finite commutative unital algebra over GF(2), given by a multiplication
/// table on a basis.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Algebra {
    name: String,
    dim: usize,
    one: BitVector,
    mul: BilinearTable,
}

impl F2Algebra {
    pub fn new(name: impl Into<String>, dim: usize, one: BitVector, mul: BilinearTable) -> Result<Self> {
        if one.len() != dim || mul.dims() != (dim, dim, dim) {
            return Err(Error::DimensionMismatch("algebra table shapes".into()));
        }
        let a = F2Algebra {
            name: name.into(),
            dim,
            one,
            mul,
        };
        for i in 0..dim {
            let e = BitVector::unit(dim, i);
            if a.mul(&a.one, &e) != e {
                return Err(Error::InvalidStructure("algebra unit law fails".into()));
            }
            for j in 0..dim {
                let f = BitVector::unit(dim, j);
                if a.mul(&e, &f) != a.mul(&f, &e) {
                    return Err(Error::InvalidStructure("algebra not commutative".into()));
                }
                for k in 0..dim {
                    let g = BitVector::unit(dim, k);
                    if a.mul(&a.mul(&e, &f), &g) != a.mul(&e, &a.mul(&f, &g)) {
                        return Err(Error::InvalidStructure("algebra not associative".into()));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn f2() -> Self {
        F2Algebra::new(
            "F2",
            1,
            BitVector::ones(1),
            BilinearTable::from_fn(1, 1, 1, |_, _| BitVector::ones(1)),
        )
        .unwrap()
    }

    /// The boolean ring F_2 x F_2 on idempotent basis vectors.
    pub fn f2xf2() -> Self {
        F2Algebra::new(
            "F2xF2",
            2,
            BitVector::ones(2),
            BilinearTable::from_fn(2, 2, 2, |i, j| {
                if i == j {
                    BitVector::unit(2, i)
                } else {
                    BitVector::zeros(2)
                }
            }),
        )
        .unwrap()
    }

    /// F_2[x]/(x^2), with basis {1, x}; not boolean since x^2 = 0.
    pub fn dual_numbers() -> Self {
        F2Algebra::new(
            "F2[x]/(x^2)",
            2,
            BitVector::unit(2, 0),
            BilinearTable::from_fn(2, 2, 2, |i, j| {
                if i == 0 && j == 0 {
                    BitVector::unit(2, 0)
                } else if i + j == 1 {
                    BitVector::unit(2, 1)
                } else {
                    BitVector::zeros(2)
                }
            }),
        )
        .unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &BitVector {
        &self.one
    }

    pub fn mul(&self, x: &BitVector, y: &BitVector) -> BitVector {
        self.mul.apply(x, y).expect("shapes validated")
    }

    pub fn mul_table(&self) -> &BilinearTable {
        &self.mul
    }

    /// Squaring is additive over GF(2), so booleanness reduces to the basis.
    pub fn is_boolean(&self) -> bool {
        (0..self.dim).all(|i| {
            let e = BitVector::unit(self.dim, i);
            self.mul(&e, &e) == e
        })
    }
}

impl std::fmt::Debug for F2Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "F2Algebra({}, dim {})", self.name, self.dim)
    }
}

/// The constant tower on an algebra: level 0 is the scalar line, every
/// positive level is `A` with identity transitions and top 1.
pub fn trivial_t(a: &F2Algebra, truncation: usize) -> TruncatedIgr {
    let d = a.dim();
    let mut dims = vec![1usize];
    let mut tops = vec![BitVector::ones(1)];
    for _ in 1..=truncation {
        dims.push(d);
        tops.push(a.one().clone());
    }
    let mut h = Vec::new();
    for lvl in 0..truncation {
        if lvl == 0 {
            let mut m = BitMatrix::zeros(d, 1);
            for i in a.one().iter_ones() {
                m.set(i, 0, true);
            }
            h.push(m);
        } else {
            h.push(BitMatrix::identity(d));
        }
    }
    let mut star = BTreeMap::new();
    for n in 1..truncation {
        for m in 1..truncation {
            if n + m <= truncation {
                star.insert((n, m), a.mul_table().clone());
            }
        }
    }
    TruncatedIgr::new(format!("T({})", a.name()), dims, tops, h, star)
        .expect("constant tower shapes are consistent")
}

/// Columns of all `d_1^n`-fold products of level-1 basis vectors at level
/// `n`, plus the tuples themselves.
pub(crate) fn products_matrix(r: &TruncatedIgr, n: usize) -> (BitMatrix, Vec<Vec<usize>>) {
    let d1 = r.dim(1);
    if n == 0 {
        // The empty product is the unit of the scalar line.
        let mut m = BitMatrix::zeros(r.dim(0), 1);
        for i in r.top(0).iter_ones() {
            m.set(i, 0, true);
        }
        return (m, vec![vec![]]);
    }
    let count = d1.pow(n as u32);
    let mut tuples = Vec::with_capacity(count);
    let mut cols = Vec::with_capacity(count);
    for idx in 0..count {
        let mut t = Vec::with_capacity(n);
        let mut rest = idx;
        for _ in 0..n {
            t.push(rest % d1);
            rest /= d1;
        }
        let mut prod = BitVector::unit(d1, t[0]);
        for (pos, &b) in t.iter().enumerate().skip(1) {
            prod = r.star_apply(pos, 1, &prod, &BitVector::unit(d1, b));
        }
        tuples.push(t);
        cols.push(prod);
    }
    let mut m = BitMatrix::zeros(r.dim(n), count);
    for (c, col) in cols.iter().enumerate() {
        for i in col.iter_ones() {
            m.set(i, c, true);
        }
    }
    (m, tuples)
}

/// The graded subring generated by level 1.
#[derive(Debug, Clone)]
pub struct Level1Subring {
    pub subring: TruncatedIgr,
    pub inclusion: IgrMorphism,
    pub in_igr1: bool,
    pub span_dims: Vec<usize>,
}

pub fn level1_subring(r: &TruncatedIgr) -> Result<Level1Subring> {
    let n = r.truncation();
    // Span of n-fold products of level-1 vectors, level by level.
    let mut spans: Vec<RowSpace> = Vec::new();
    for lvl in 0..=n {
        let mut s = RowSpace::new(r.dim(lvl));
        if lvl == 0 {
            s.add(&BitVector::ones(1));
        } else if lvl == 1 {
            for i in 0..r.dim(1) {
                s.add(&BitVector::unit(r.dim(1), i));
            }
        } else {
            let prev: Vec<BitVector> = spans[lvl - 1].rows().to_vec();
            for v in &prev {
                for i in 0..r.dim(1) {
                    s.add(&r.star_apply(lvl - 1, 1, v, &BitVector::unit(r.dim(1), i)));
                }
            }
        }
        spans.push(s);
    }
    let span_dims: Vec<usize> = spans.iter().map(|s| s.rank()).collect();
    // Inclusion matrices: columns are the span basis vectors.
    let inclusions: Vec<BitMatrix> = spans
        .iter()
        .enumerate()
        .map(|(lvl, s)| {
            let mut m = BitMatrix::zeros(r.dim(lvl), s.rank());
            for (c, v) in s.rows().iter().enumerate() {
                for i in v.iter_ones() {
                    m.set(i, c, true);
                }
            }
            m
        })
        .collect();
    let coords = |lvl: usize, v: &BitVector| -> Result<BitVector> {
        inclusions[lvl].solve(v).ok_or_else(|| {
            Error::InvalidStructure(format!(
                "vector at level {lvl} escapes the level-1 generated subring"
            ))
        })
    };
    let dims = span_dims.clone();
    let mut tops = Vec::new();
    for lvl in 0..=n {
        tops.push(coords(lvl, r.top(lvl))?);
    }
    let mut h = Vec::new();
    for lvl in 0..n {
        let mut m = BitMatrix::zeros(dims[lvl + 1], dims[lvl]);
        for c in 0..dims[lvl] {
            let img = r.h(lvl).mul_vec(&inclusions[lvl].column(c));
            let col = coords(lvl + 1, &img)?;
            for i in col.iter_ones() {
                m.set(i, c, true);
            }
        }
        h.push(m);
    }
    let mut star = BTreeMap::new();
    for a in 1..n {
        for b in 1..n {
            if a + b > n {
                continue;
            }
            let mut entries = Vec::with_capacity(dims[a] * dims[b]);
            for i in 0..dims[a] {
                for j in 0..dims[b] {
                    let prod = r.star_apply(
                        a,
                        b,
                        &inclusions[a].column(i),
                        &inclusions[b].column(j),
                    );
                    entries.push(coords(a + b, &prod)?);
                }
            }
            star.insert((a, b), BilinearTable::new(dims[a], dims[b], dims[a + b], entries)?);
        }
    }
    let in_igr1 = (0..=n).all(|lvl| span_dims[lvl] == r.dim(lvl));
    let subring = TruncatedIgr::new(format!("1({})", r.name()), dims, tops, h, star)?;
    let inclusion = IgrMorphism { maps: inclusions };
    Ok(Level1Subring {
        subring,
        inclusion,
        in_igr1,
        span_dims,
    })
}

/// The hyperbolic quotient `Q(R)` and the subcategory predicates.
#[derive(Debug, Clone)]
pub struct QuotientQ {
    pub quotient: TruncatedIgr,
    pub projection: IgrMorphism,
    pub in_igr_h: bool,
    pub in_igr1: bool,
    pub in_igr_plus: bool,
    /// Canonical comparison `Q(1(R)) = 1(Q(R))` is a levelwise bijection.
    pub can_iso: bool,
}

pub fn hyperbolic_quotient_q(r: &TruncatedIgr) -> Result<QuotientQ> {
    let n = r.truncation();
    let d1 = r.dim(1);
    if d1 > 16 {
        return Err(Error::CapExceeded {
            needed: 1 << d1,
            cap: 1 << 16,
        });
    }
    // Generators (top_1 + a) * a over all level-1 vectors a; the map is
    // quadratic in a, so the basis alone is not enough.
    let mut gens = vec![Vec::new(); n + 1];
    if n >= 2 {
        for code in 0u32..1 << d1 {
            let mut a = BitVector::zeros(d1);
            for i in 0..d1 {
                if code >> i & 1 == 1 {
                    a.set(i, true);
                }
            }
            let v = r
                .star_apply(1, 1, &r.top(1).xor(&a), &a);
            if !v.is_zero() {
                gens[2].push(v);
            }
        }
    }
    let ops = ideal_ops(r, &gens)?;
    let in_igr_h = ops.projection.is_levelwise_bijective();
    let sub = level1_subring(r)?;
    let in_igr1 = sub.in_igr1;
    let in_igr_plus = in_igr_h && in_igr1;

    // can: Q(1(R)) vs 1(Q(R)), compared through level-1 products.
    let q_of_sub = hyperbolic_quotient_inner(&sub.subring)?;
    let sub_of_q = level1_subring(&ops.quotient)?.subring;
    let can_iso = canonical_level1_comparison(&q_of_sub, &sub_of_q);

    Ok(QuotientQ {
        quotient: ops.quotient,
        projection: ops.projection,
        in_igr_h,
        in_igr1,
        in_igr_plus,
        can_iso,
    })
}

fn hyperbolic_quotient_inner(r: &TruncatedIgr) -> Result<TruncatedIgr> {
    let n = r.truncation();
    let d1 = r.dim(1);
    let mut gens = vec![Vec::new(); n + 1];
    if n >= 2 {
        for code in 0u32..1 << d1 {
            let mut a = BitVector::zeros(d1);
            for i in 0..d1 {
                if code >> i & 1 == 1 {
                    a.set(i, true);
                }
            }
            let v = r.star_apply(1, 1, &r.top(1).xor(&a), &a);
            if !v.is_zero() {
                gens[2].push(v);
            }
        }
    }
    Ok(ideal_ops(r, &gens)?.quotient)
}

/// Both sides are generated in level 1 by the same space; the canonical map
/// matches products of level-1 basis vectors. It is a levelwise bijection
/// iff the product columns have equal kernels and full span on both sides.
fn canonical_level1_comparison(a: &TruncatedIgr, b: &TruncatedIgr) -> bool {
    if a.truncation() != b.truncation() || a.dim(1) != b.dim(1) {
        return false;
    }
    for lvl in 1..=a.truncation() {
        if a.dim(lvl) != b.dim(lvl) {
            return false;
        }
        let (ma, _) = products_matrix(a, lvl);
        let (mb, _) = products_matrix(b, lvl);
        let ra = ma.rank();
        let rb = mb.rank();
        if ra != a.dim(lvl) || rb != b.dim(lvl) {
            return false;
        }
        // Equal column kernels: stacking must not change the rank.
        let mut stacked = BitMatrix::zeros(ma.rows() + mb.rows(), ma.cols());
        for rr in 0..ma.rows() {
            for c in 0..ma.cols() {
                if ma.get(rr, c) {
                    stacked.set(rr, c, true);
                }
            }
        }
        for rr in 0..mb.rows() {
            for c in 0..mb.cols() {
                if mb.get(rr, c) {
                    stacked.set(ma.rows() + rr, c, true);
                }
            }
        }
        let rs = stacked.rank();
        if rs != ra || rs != rb {
            return false;
        }
    }
    true
}

/// The colimit algebra of a stabilized tower.
#[derive(Debug, Clone)]
pub struct AlgebraA {
    pub algebra: F2Algebra,
    /// First level from which every transition is an isomorphism.
    pub stabilization_level: usize,
    /// True when the stable tail is zero.
    pub degenerate: bool,
}

/// Computes `A(R)` from a stabilization witness: every transition from some
/// level `s` on must be an isomorphism, and `2s <= N` so products of two
/// pulled-back elements stay within the truncation.
pub fn algebra_a(r: &TruncatedIgr) -> Result<AlgebraA> {
    let n = r.truncation();
    if n < 1 {
        return Err(Error::NoStabilization("truncation 0 has no tail".into()));
    }
    if !r.h(n - 1).is_bijective() {
        return Err(Error::NoStabilization(format!(
            "transition {} -> {} is not an isomorphism",
            n - 1,
            n
        )));
    }
    let mut s = n - 1;
    while s > 0 && r.h(s - 1).is_bijective() {
        s -= 1;
    }
    if r.dim(n) == 0 {
        return Ok(AlgebraA {
            algebra: F2Algebra::new(
                "0",
                0,
                BitVector::zeros(0),
                BilinearTable::zero(0, 0, 0),
            )?,
            stabilization_level: s,
            degenerate: true,
        });
    }
    if 2 * s > n {
        return Err(Error::NoStabilization(format!(
            "stabilizes at level {s}, too late to multiply within truncation {n}"
        )));
    }
    let pull = r
        .h_composite(s, n)
        .inverse()
        .expect("composite of isomorphisms");
    let push = r.h_composite(2 * s, n);
    let d = r.dim(n);
    let mul = BilinearTable::from_fn(d, d, d, |i, j| {
        let x = pull.mul_vec(&BitVector::unit(d, i));
        let y = pull.mul_vec(&BitVector::unit(d, j));
        push.mul_vec(&r.star_apply(s, s, &x, &y))
    });
    Ok(AlgebraA {
        algebra: F2Algebra::new(format!("A({})", r.name()), d, r.top(n).clone(), mul)?,
        stabilization_level: s,
        degenerate: false,
    })
}

/// Spectral data of a level-1 generated tower.
#[derive(Debug, Clone)]
pub struct SpectralReport {
    /// Morphisms into the constant F_2 tower, each determined by its level-1
    /// functional, in lexicographic order of that functional.
    pub orderings: Vec<IgrMorphism>,
    /// Dimension of the boolean hull = number of orderings.
    pub hull_dim: usize,
    /// All composite transitions are injective.
    pub mc: bool,
    /// (from, to, kernel dimension) for every composite transition.
    pub mc_kernels: Vec<(usize, usize, usize)>,
    /// Per positive level: a basis of the nilpotent part decided within the
    /// truncation, or None when no power stays in range.
    pub nil_levels: Vec<Option<Vec<BitVector>>>,
}

pub fn spectral_report(r: &TruncatedIgr) -> Result<SpectralReport> {
    let n = r.truncation();
    let sub = level1_subring(r)?;
    if !sub.in_igr1 {
        return Err(Error::NotLevelOneGenerated);
    }
    let d1 = r.dim(1);
    if d1 > 16 {
        return Err(Error::CapExceeded {
            needed: 1 << d1,
            cap: 1 << 16,
        });
    }
    let product_data: Vec<(BitMatrix, Vec<Vec<usize>>)> =
        (0..=n).map(|lvl| products_matrix(r, lvl)).collect();
    let mut orderings = Vec::new();
    'functional: for code in 0u32..1 << d1 {
        let f1 = {
            let mut m = BitMatrix::zeros(1, d1);
            for i in 0..d1 {
                if code >> i & 1 == 1 {
                    m.set(0, i, true);
                }
            }
            m
        };
        if !f1.mul_vec(r.top(1)).get(0) {
            continue;
        }
        let mut maps = vec![BitMatrix::identity(1), f1.clone()];
        for lvl in 2..=n {
            let (p, tuples) = &product_data[lvl];
            // Values on product columns: the product of the level-1 values.
            let mut target = BitVector::zeros(tuples.len());
            for (c, t) in tuples.iter().enumerate() {
                let val = t
                    .iter()
                    .all(|&b| f1.mul_vec(&BitVector::unit(d1, b)).get(0));
                target.set(c, val);
            }
            // Solve f * P = target for the level functional f.
            match p.transpose().solve(&target) {
                Some(sol) => {
                    let mut m = BitMatrix::zeros(1, r.dim(lvl));
                    for i in sol.iter_ones() {
                        m.set(0, i, true);
                    }
                    maps.push(m);
                }
                None => continue 'functional,
            }
        }
        orderings.push(IgrMorphism { maps });
    }
    let mut mc_kernels = Vec::new();
    let mut mc = true;
    for from in 0..=n {
        for to in from + 1..=n {
            let k = r.h_composite(from, to).kernel_basis().len();
            // The conjecture quantifies over positive degrees; the level-0
            // kernel only records whether the tops vanish.
            if k > 0 && from >= 1 {
                mc = false;
            }
            mc_kernels.push((from, to, k));
        }
    }
    let mut nil_levels = Vec::new();
    for lvl in 1..=n {
        let kmax = n / lvl - 1;
        if kmax < 1 {
            nil_levels.push(None);
            continue;
        }
        let mut space = RowSpace::new(r.dim(lvl));
        for k in 1..=kmax {
            let mut m = BitMatrix::zeros(r.dim((k + 1) * lvl), r.dim(lvl));
            for c in 0..r.dim(lvl) {
                let col = r.star_apply(k * lvl, lvl, r.top(k * lvl), &BitVector::unit(r.dim(lvl), c));
                for i in col.iter_ones() {
                    m.set(i, c, true);
                }
            }
            for v in m.kernel_basis() {
                space.add(&v);
            }
        }
        nil_levels.push(Some(space.rows().to_vec()));
    }
    Ok(SpectralReport {
        hull_dim: orderings.len(),
        orderings,
        mc,
        mc_kernels,
        nil_levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::igr::check_igr_morphism;

    #[test]
    fn trivial_tower_on_f2_passes() {
        let t = trivial_t(&F2Algebra::f2(), 4);
        assert!(t.check_igr().ok);
        assert_eq!(t.dims(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn boolean_algebra_tower_is_igr_plus() {
        let t = trivial_t(&F2Algebra::f2xf2(), 4);
        assert!(t.check_igr().ok);
        let q = hyperbolic_quotient_q(&t).unwrap();
        assert!(q.in_igr_h && q.in_igr1 && q.in_igr_plus);
        assert!(q.can_iso);
    }

    #[test]
    fn dual_numbers_tower_is_igr1_but_not_igr_h() {
        let t = trivial_t(&F2Algebra::dual_numbers(), 4);
        assert!(t.check_igr().ok);
        let q = hyperbolic_quotient_q(&t).unwrap();
        // (1 + x) * x = x + x^2 = x != 0, so the ideal collapses x.
        assert!(!q.in_igr_h);
        assert!(q.in_igr1);
        assert!(!q.in_igr_plus);
        assert!(q.quotient.check_igr().ok);
        assert!(q.can_iso);
    }

    #[test]
    fn algebra_of_constant_tower_recovers_the_algebra() {
        for a in [F2Algebra::f2(), F2Algebra::f2xf2(), F2Algebra::dual_numbers()] {
            let t = trivial_t(&a, 4);
            let out = algebra_a(&t).unwrap();
            assert_eq!(out.algebra.dim(), a.dim());
            assert_eq!(out.algebra.is_boolean(), a.is_boolean());
            assert!(!out.degenerate);
        }
    }

    #[test]
    fn level1_subring_of_constant_tower_is_everything() {
        let t = trivial_t(&F2Algebra::f2xf2(), 4);
        let sub = level1_subring(&t).unwrap();
        assert!(sub.in_igr1);
        assert!(sub.subring.check_igr().ok);
        assert!(check_igr_morphism(&sub.inclusion, &sub.subring, &t)
            .unwrap()
            .is_none());
    }

    #[test]
    fn orderings_of_boolean_towers() {
        let t = trivial_t(&F2Algebra::f2xf2(), 4);
        let spec = spectral_report(&t).unwrap();
        // Ring maps F2xF2 -> F2: two coordinate projections.
        assert_eq!(spec.hull_dim, 2);
        assert!(spec.mc);
        for o in &spec.orderings {
            let target = trivial_t(&F2Algebra::f2(), 4);
            assert!(check_igr_morphism(o, &t, &target).unwrap().is_none());
        }
        let one = trivial_t(&F2Algebra::f2(), 4);
        assert_eq!(spectral_report(&one).unwrap().hull_dim, 1);
    }

    #[test]
    fn spectral_data_of_dual_numbers_tower() {
        let t = trivial_t(&F2Algebra::dual_numbers(), 4);
        let spec = spectral_report(&t).unwrap();
        // The only ring map to F_2 kills the nilpotent x.
        assert_eq!(spec.hull_dim, 1);
        // Transitions are identities, so every composite is injective.
        assert!(spec.mc);
        // The top-power test sees 1 * x = x != 0, so nothing is flagged at
        // level 1 within the truncation.
        assert!(spec.nil_levels[0].as_ref().unwrap().is_empty());
    }
}
