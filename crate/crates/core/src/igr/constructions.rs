//! Categorical constructions on truncated igrs: products, tensor coproducts,
//! chain colimits, graded ideals, quotients and coequalizers.

use super::{check_igr_morphism, IgrMorphism, TruncatedIgr};
use crate::gf2::{quotient_structure, BilinearTable, BitMatrix, BitVector};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// An incrementally maintained row space in reduced form.
#[derive(Debug, Clone)]
pub(crate) struct RowSpace {
    dim: usize,
    rows: Vec<BitVector>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        RowSpace { dim, rows: Vec::new() }
    }

    /// Adds a vector; returns true when the rank grew.
    pub fn add(&mut self, v: &BitVector) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.clone();
        for r in &self.rows {
            let lead = r.leading().unwrap();
            if v.get(lead) {
                v.xor_assign(r);
            }
        }
        let Some(lead) = v.leading() else {
            return false;
        };
        for r in self.rows.iter_mut() {
            if r.get(lead) {
                r.xor_assign(&v);
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| r.leading().unwrap() > lead)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut v = v.clone();
        for r in &self.rows {
            let lead = r.leading().unwrap();
            if v.get(lead) {
                v.xor_assign(r);
            }
        }
        v.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }
}

fn check_same_truncation(rs: &[&TruncatedIgr]) -> Result<usize> {
    let n = rs
        .first()
        .ok_or_else(|| Error::BadParam("empty family".into()))?
        .truncation();
    for r in rs {
        if r.truncation() != n {
            return Err(Error::TruncationMismatch {
                expected: n,
                got: r.truncation(),
            });
        }
    }
    Ok(n)
}

/// The product tower: level 0 stays the scalar line, every positive level is
/// the direct sum with componentwise top, transitions and products.
/// Returns the product and the projections onto each factor.
pub fn igr_product(rs: &[&TruncatedIgr]) -> Result<(TruncatedIgr, Vec<IgrMorphism>)> {
    let n = check_same_truncation(rs)?;
    let k = rs.len();
    let mut dims = vec![1usize];
    let mut offsets: Vec<Vec<usize>> = vec![vec![0; k + 1]];
    for lvl in 1..=n {
        let mut offs = vec![0usize; k + 1];
        for (i, r) in rs.iter().enumerate() {
            offs[i + 1] = offs[i] + r.dim(lvl);
        }
        dims.push(offs[k]);
        offsets.push(offs);
    }
    let embed = |lvl: usize, block: usize, v: &BitVector| -> BitVector {
        let mut out = BitVector::zeros(dims[lvl]);
        for i in v.iter_ones() {
            out.set(offsets[lvl][block] + i, true);
        }
        out
    };
    let mut tops = vec![BitVector::ones(1)];
    for lvl in 1..=n {
        let mut t = BitVector::zeros(dims[lvl]);
        for (b, r) in rs.iter().enumerate() {
            t.xor_assign(&embed(lvl, b, r.top(lvl)));
        }
        tops.push(t);
    }
    let mut h = Vec::new();
    for lvl in 0..n {
        if lvl == 0 {
            let mut m = BitMatrix::zeros(dims[1], 1);
            for i in tops[1].iter_ones() {
                m.set(i, 0, true);
            }
            h.push(m);
        } else {
            let mut m = BitMatrix::zeros(dims[lvl + 1], dims[lvl]);
            for (b, r) in rs.iter().enumerate() {
                for c in 0..r.dim(lvl) {
                    let col = r.h(lvl).mul_vec(&BitVector::unit(r.dim(lvl), c));
                    for i in col.iter_ones() {
                        m.set(offsets[lvl + 1][b] + i, offsets[lvl][b] + c, true);
                    }
                }
            }
            h.push(m);
        }
    }
    let mut star = BTreeMap::new();
    for a in 1..n {
        for b in 1..n {
            if a + b > n {
                continue;
            }
            let table = BilinearTable::from_fn(dims[a], dims[b], dims[a + b], |i, j| {
                let bi = (0..k).find(|&t| i < offsets[a][t + 1]).unwrap();
                let bj = (0..k).find(|&t| j < offsets[b][t + 1]).unwrap();
                if bi != bj {
                    return BitVector::zeros(dims[a + b]);
                }
                let r = rs[bi];
                let x = BitVector::unit(r.dim(a), i - offsets[a][bi]);
                let y = BitVector::unit(r.dim(b), j - offsets[b][bi]);
                embed(a + b, bi, &r.star_apply(a, b, &x, &y))
            });
            star.insert((a, b), table);
        }
    }
    let names: Vec<&str> = rs.iter().map(|r| r.name()).collect();
    let product = TruncatedIgr::new(format!("prod({})", names.join(",")), dims, tops, h, star)?;
    let mut projections = Vec::new();
    for (b, r) in rs.iter().enumerate() {
        let mut maps = vec![BitMatrix::identity(1)];
        for lvl in 1..=n {
            let mut m = BitMatrix::zeros(r.dim(lvl), product.dim(lvl));
            for c in 0..r.dim(lvl) {
                m.set(c, offsets[lvl][b] + c, true);
            }
            maps.push(m);
        }
        projections.push(IgrMorphism { maps });
    }
    Ok((product, projections))
}

/// The tensor coproduct of a finite family. The empty family yields the
/// tower with zero positive levels.
pub fn igr_tensor(rs: &[&TruncatedIgr], truncation: usize) -> Result<TruncatedIgr> {
    if rs.is_empty() {
        let dims: Vec<usize> = std::iter::once(1)
            .chain(std::iter::repeat(0).take(truncation))
            .collect();
        let tops: Vec<BitVector> = dims.iter().map(|&d| {
            let mut v = BitVector::zeros(d);
            if d == 1 {
                v.set(0, true);
            }
            v
        }).collect();
        let h = (0..truncation)
            .map(|lvl| BitMatrix::zeros(dims[lvl + 1], dims[lvl]))
            .collect();
        let mut star = BTreeMap::new();
        for a in 1..truncation {
            for b in 1..truncation {
                if a + b <= truncation {
                    star.insert((a, b), BilinearTable::zero(0, 0, 0));
                }
            }
        }
        return TruncatedIgr::new("tensor()", dims, tops, h, star);
    }
    let n = check_same_truncation(rs)?;
    if n != truncation {
        return Err(Error::TruncationMismatch {
            expected: truncation,
            got: n,
        });
    }
    let k = rs.len();
    let mut dims = vec![1usize];
    for lvl in 1..=n {
        dims.push(rs.iter().map(|r| r.dim(lvl)).product());
    }
    // Basis of a tensor level: one index per factor, mixed radix, first
    // factor most significant.
    let decode = |lvl: usize, mut idx: usize| -> Vec<usize> {
        let mut out = vec![0usize; k];
        for t in (0..k).rev() {
            let d = rs[t].dim(lvl);
            out[t] = idx % d;
            idx /= d;
        }
        out
    };
    let pure = |lvl: usize, parts: &[BitVector]| -> BitVector {
        let mut out = BitVector::zeros(dims[lvl]);
        for idx in 0..dims[lvl] {
            let comps = decode(lvl, idx);
            if comps.iter().enumerate().all(|(t, &c)| parts[t].get(c)) {
                out.set(idx, true);
            }
        }
        out
    };
    let mut tops = vec![BitVector::ones(1)];
    for lvl in 1..=n {
        let parts: Vec<BitVector> = rs.iter().map(|r| r.top(lvl).clone()).collect();
        tops.push(pure(lvl, &parts));
    }
    let mut h = Vec::new();
    for lvl in 0..n {
        let mut m = BitMatrix::zeros(dims[lvl + 1], dims[lvl]);
        if lvl == 0 {
            for i in tops[1].iter_ones() {
                m.set(i, 0, true);
            }
        } else {
            for c in 0..dims[lvl] {
                let comps = decode(lvl, c);
                let parts: Vec<BitVector> = rs
                    .iter()
                    .enumerate()
                    .map(|(t, r)| r.h(lvl).mul_vec(&BitVector::unit(r.dim(lvl), comps[t])))
                    .collect();
                let col = pure(lvl + 1, &parts);
                for i in col.iter_ones() {
                    m.set(i, c, true);
                }
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
            let table = BilinearTable::from_fn(dims[a], dims[b], dims[a + b], |i, j| {
                let ci = decode(a, i);
                let cj = decode(b, j);
                let parts: Vec<BitVector> = rs
                    .iter()
                    .enumerate()
                    .map(|(t, r)| {
                        r.star_apply(
                            a,
                            b,
                            &BitVector::unit(r.dim(a), ci[t]),
                            &BitVector::unit(r.dim(b), cj[t]),
                        )
                    })
                    .collect();
                pure(a + b, &parts)
            });
            star.insert((a, b), table);
        }
    }
    let names: Vec<&str> = rs.iter().map(|r| r.name()).collect();
    TruncatedIgr::new(format!("tensor({})", names.join(",")), dims, tops, h, star)
}

/// Levelwise colimit of a finite chain `R_0 -> R_1 -> .. -> R_k`, computed as
/// the quotient of the levelwise direct sum by the difference relations
/// `x - f_i(x)`. Returns the colimit and the canonical map from each member.
pub fn igr_chain_colimit(
    chain: &[TruncatedIgr],
    maps: &[IgrMorphism],
) -> Result<(TruncatedIgr, Vec<IgrMorphism>)> {
    let refs: Vec<&TruncatedIgr> = chain.iter().collect();
    let n = check_same_truncation(&refs)?;
    if maps.len() + 1 != chain.len() {
        return Err(Error::BadParam(
            "a chain of k members needs k-1 connecting morphisms".into(),
        ));
    }
    for (i, f) in maps.iter().enumerate() {
        if let Some(w) = check_igr_morphism(f, &chain[i], &chain[i + 1])? {
            return Err(Error::NotMorphism(format!(
                "connecting map {i} is invalid: {w}"
            )));
        }
    }
    let k = chain.len();
    let mut offsets: Vec<Vec<usize>> = Vec::new();
    for lvl in 0..=n {
        let mut offs = vec![0usize; k + 1];
        for (i, r) in chain.iter().enumerate() {
            offs[i + 1] = offs[i] + r.dim(lvl);
        }
        offsets.push(offs);
    }
    let big_dim = |lvl: usize| offsets[lvl][k];
    let embed = |lvl: usize, member: usize, v: &BitVector| -> BitVector {
        let mut out = BitVector::zeros(big_dim(lvl));
        for i in v.iter_ones() {
            out.set(offsets[lvl][member] + i, true);
        }
        out
    };
    // Quotient each level by x + f_i(x) over all members and basis vectors.
    let mut quotients = Vec::new();
    for lvl in 0..=n {
        let mut rels = Vec::new();
        for (i, f) in maps.iter().enumerate() {
            for c in 0..chain[i].dim(lvl) {
                let e = BitVector::unit(chain[i].dim(lvl), c);
                let mut row = embed(lvl, i, &e);
                row.xor_assign(&embed(lvl, i + 1, &f.apply(lvl, &e)));
                rels.push(row);
            }
        }
        quotients.push(quotient_structure(big_dim(lvl), &rels));
    }
    let dims: Vec<usize> = quotients.iter().map(|q| q.dim).collect();
    let class_of = |lvl: usize, member: usize, v: &BitVector| -> BitVector {
        quotients[lvl].projection.mul_vec(&embed(lvl, member, v))
    };
    // A lift of a colimit basis vector: the member and vector it came from.
    let lift = |lvl: usize, basis: usize| -> (usize, BitVector) {
        let pos = quotients[lvl].lifts[basis];
        let member = (0..k).find(|&i| pos < offsets[lvl][i + 1]).unwrap();
        (
            member,
            BitVector::unit(chain[member].dim(lvl), pos - offsets[lvl][member]),
        )
    };
    let push = |lvl: usize, from: usize, to: usize, v: &BitVector| -> BitVector {
        let mut v = v.clone();
        for i in from..to {
            v = maps[i].apply(lvl, &v);
        }
        v
    };
    let tops: Vec<BitVector> = (0..=n).map(|lvl| class_of(lvl, 0, chain[0].top(lvl))).collect();
    let mut h = Vec::new();
    for lvl in 0..n {
        let mut m = BitMatrix::zeros(dims[lvl + 1], dims[lvl]);
        for c in 0..dims[lvl] {
            let (member, v) = lift(lvl, c);
            let col = class_of(lvl + 1, member, &chain[member].h(lvl).mul_vec(&v));
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
            let table = BilinearTable::from_fn(dims[a], dims[b], dims[a + b], |i, j| {
                let (mi, x) = lift(a, i);
                let (mj, y) = lift(b, j);
                let m = mi.max(mj);
                let prod = chain[m].star_apply(a, b, &push(a, mi, m, &x), &push(b, mj, m, &y));
                class_of(a + b, m, &prod)
            });
            star.insert((a, b), table);
        }
    }
    let colimit = TruncatedIgr::new(
        format!("colim({})", chain[0].name()),
        dims.clone(),
        tops,
        h,
        star,
    )?;
    let mut injections = Vec::new();
    for member in 0..k {
        let mut mats = Vec::new();
        for lvl in 0..=n {
            let mut m = BitMatrix::zeros(dims[lvl], chain[member].dim(lvl));
            for c in 0..chain[member].dim(lvl) {
                let col = class_of(lvl, member, &BitVector::unit(chain[member].dim(lvl), c));
                for i in col.iter_ones() {
                    m.set(i, c, true);
                }
            }
            mats.push(m);
        }
        injections.push(IgrMorphism { maps: mats });
    }
    Ok((colimit, injections))
}

/// The least graded ideal containing the given per-level vectors, as
/// per-level reduced row bases.
pub fn ideal_closure(r: &TruncatedIgr, generators: &[Vec<BitVector>]) -> Result<Vec<Vec<BitVector>>> {
    let n = r.truncation();
    if generators.len() != n + 1 {
        return Err(Error::BadParam("one generator list per level".into()));
    }
    let mut spaces: Vec<RowSpace> = (0..=n).map(|lvl| RowSpace::new(r.dim(lvl))).collect();
    for (lvl, gens) in generators.iter().enumerate() {
        for g in gens {
            if g.len() != r.dim(lvl) {
                return Err(Error::DimensionMismatch(format!(
                    "generator at level {lvl} has wrong length"
                )));
            }
            spaces[lvl].add(g);
        }
    }
    // A unit in degree 0 absorbs everything.
    if spaces[0].rank() > 0 {
        for lvl in 0..=n {
            for i in 0..r.dim(lvl) {
                spaces[lvl].add(&BitVector::unit(r.dim(lvl), i));
            }
        }
        return Ok(spaces.into_iter().map(|s| s.rows().to_vec()).collect());
    }
    loop {
        let mut grew = false;
        for m in 1..n {
            if spaces[m].rank() == 0 {
                continue;
            }
            for l in 1..n {
                if m + l > n {
                    continue;
                }
                let current: Vec<BitVector> = spaces[m].rows().to_vec();
                for v in &current {
                    for e in 0..r.dim(l) {
                        let prod = r.star_apply(m, l, v, &BitVector::unit(r.dim(l), e));
                        if spaces[m + l].add(&prod) {
                            grew = true;
                        }
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(spaces.into_iter().map(|s| s.rows().to_vec()).collect())
}

/// Quotients a tower by per-level subspaces, after verifying they form a
/// graded ideal. Returns the quotient and the levelwise projection.
pub fn quotient_by_subspaces(
    r: &TruncatedIgr,
    subspaces: &[Vec<BitVector>],
) -> Result<(TruncatedIgr, IgrMorphism)> {
    let n = r.truncation();
    if subspaces.len() != n + 1 {
        return Err(Error::BadParam("one subspace per level".into()));
    }
    // Graded ideal check: J_m * R_l lands in J_{m+l}.
    let mut spans: Vec<RowSpace> = Vec::new();
    for (lvl, rows) in subspaces.iter().enumerate() {
        let mut s = RowSpace::new(r.dim(lvl));
        for v in rows {
            s.add(v);
        }
        spans.push(s);
    }
    if spans[0].rank() > 0 {
        for lvl in 1..=n {
            if spans[lvl].rank() < r.dim(lvl) {
                return Err(Error::InvalidStructure(
                    "level-0 part of an ideal forces every level".into(),
                ));
            }
        }
    }
    for m in 1..n {
        for l in 1..n {
            if m + l > n {
                continue;
            }
            for v in spans[m].rows() {
                for e in 0..r.dim(l) {
                    let prod = r.star_apply(m, l, v, &BitVector::unit(r.dim(l), e));
                    if !spans[m + l].contains(&prod) {
                        return Err(Error::InvalidStructure(format!(
                            "not a graded ideal: J_{m} * R_{l} escapes J_{}",
                            m + l
                        )));
                    }
                }
            }
        }
    }
    let quotients: Vec<_> = (0..=n)
        .map(|lvl| quotient_structure(r.dim(lvl), spans[lvl].rows()))
        .collect();
    let dims: Vec<usize> = quotients.iter().map(|q| q.dim).collect();
    let tops: Vec<BitVector> = (0..=n)
        .map(|lvl| quotients[lvl].projection.mul_vec(r.top(lvl)))
        .collect();
    let lift = |lvl: usize, basis: usize| BitVector::unit(r.dim(lvl), quotients[lvl].lifts[basis]);
    let mut h = Vec::new();
    for lvl in 0..n {
        let mut m = BitMatrix::zeros(dims[lvl + 1], dims[lvl]);
        for c in 0..dims[lvl] {
            let col = quotients[lvl + 1]
                .projection
                .mul_vec(&r.h(lvl).mul_vec(&lift(lvl, c)));
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
            let table = BilinearTable::from_fn(dims[a], dims[b], dims[a + b], |i, j| {
                quotients[a + b]
                    .projection
                    .mul_vec(&r.star_apply(a, b, &lift(a, i), &lift(b, j)))
            });
            star.insert((a, b), table);
        }
    }
    let quotient = TruncatedIgr::new(format!("{}/J", r.name()), dims, tops, h, star)?;
    let projection = IgrMorphism {
        maps: quotients.into_iter().map(|q| q.projection).collect(),
    };
    Ok((quotient, projection))
}

/// Result of quotienting by the ideal generated by per-level vectors.
#[derive(Debug, Clone)]
pub struct IdealOps {
    pub ideal: Vec<Vec<BitVector>>,
    pub quotient: TruncatedIgr,
    pub projection: IgrMorphism,
}

pub fn ideal_ops(r: &TruncatedIgr, generators: &[Vec<BitVector>]) -> Result<IdealOps> {
    let ideal = ideal_closure(r, generators)?;
    let (quotient, projection) = quotient_by_subspaces(r, &ideal)?;
    Ok(IdealOps {
        ideal,
        quotient,
        projection,
    })
}

/// Per-level kernels of a morphism.
pub fn kernel_subspaces(f: &IgrMorphism) -> Vec<Vec<BitVector>> {
    f.maps.iter().map(|m| m.kernel_basis()).collect()
}

/// The homomorphism theorem: factors `f` through its kernel, returning the
/// quotient, the projection and the induced levelwise-injective morphism.
pub fn factor_through_kernel(
    f: &IgrMorphism,
    source: &TruncatedIgr,
    target: &TruncatedIgr,
) -> Result<(TruncatedIgr, IgrMorphism, IgrMorphism)> {
    if let Some(w) = check_igr_morphism(f, source, target)? {
        return Err(Error::NotMorphism(w.to_string()));
    }
    let ker = kernel_subspaces(f);
    let (quotient, projection) = quotient_by_subspaces(source, &ker)?;
    // Induced map on the quotient: evaluate f on the lifts.
    let mut maps = Vec::new();
    for lvl in 0..=source.truncation() {
        let mut m = BitMatrix::zeros(target.dim(lvl), quotient.dim(lvl));
        for c in 0..quotient.dim(lvl) {
            // The lift of quotient basis c is a unit vector of the source.
            let mut lifted = BitVector::zeros(source.dim(lvl));
            for i in 0..source.dim(lvl) {
                let e = BitVector::unit(source.dim(lvl), i);
                if projection.apply(lvl, &e) == BitVector::unit(quotient.dim(lvl), c) {
                    lifted = e;
                    break;
                }
            }
            let col = f.apply(lvl, &lifted);
            for i in col.iter_ones() {
                m.set(i, c, true);
            }
        }
        maps.push(m);
    }
    Ok((quotient, projection, IgrMorphism { maps }))
}

/// The coequalizer of a parallel pair: the quotient of the target by the
/// ideal generated by the levelwise differences.
pub fn coequalizer(
    f: &IgrMorphism,
    g: &IgrMorphism,
    source: &TruncatedIgr,
    target: &TruncatedIgr,
) -> Result<IdealOps> {
    for m in [f, g] {
        if let Some(w) = check_igr_morphism(m, source, target)? {
            return Err(Error::NotMorphism(w.to_string()));
        }
    }
    let mut generators = Vec::new();
    for lvl in 0..=source.truncation() {
        let mut gens = Vec::new();
        for c in 0..source.dim(lvl) {
            let e = BitVector::unit(source.dim(lvl), c);
            let diff = f.apply(lvl, &e).xor(&g.apply(lvl, &e));
            if !diff.is_zero() {
                gens.push(diff);
            }
        }
        generators.push(gens);
    }
    ideal_ops(target, &generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::igr::tests::constant_tower;

    #[test]
    fn unary_product_is_isomorphic_to_the_member() {
        let t = constant_tower(3);
        let (p, projs) = igr_product(&[&t]).unwrap();
        assert_eq!(p.dims(), t.dims());
        assert!(p.check_igr().ok);
        assert!(projs[0].is_levelwise_bijective());
    }

    #[test]
    fn binary_product_doubles_positive_levels() {
        let t = constant_tower(3);
        let (p, projs) = igr_product(&[&t, &t]).unwrap();
        assert_eq!(p.dims(), &[1, 2, 2, 2]);
        assert!(p.check_igr().ok);
        for proj in &projs {
            assert!(check_igr_morphism(proj, &p, &t).unwrap().is_none());
            assert!(proj.is_levelwise_surjective());
        }
    }

    #[test]
    fn tensor_of_constant_towers() {
        let t = constant_tower(3);
        let tens = igr_tensor(&[&t, &t], 3).unwrap();
        assert_eq!(tens.dims(), &[1, 1, 1, 1]);
        assert!(tens.check_igr().ok);
        let unary = igr_tensor(&[&t], 3).unwrap();
        assert_eq!(unary.dims(), t.dims());
        let empty = igr_tensor(&[], 3).unwrap();
        assert_eq!(empty.dims(), &[1, 0, 0, 0]);
        assert!(empty.check_igr().ok);
    }

    #[test]
    fn identity_chain_colimit_is_the_member() {
        let t = constant_tower(3);
        let id = IgrMorphism::identity(&t);
        let (colim, injs) = igr_chain_colimit(&[t.clone(), t.clone()], &[id]).unwrap();
        assert_eq!(colim.dims(), t.dims());
        assert!(colim.check_igr().ok);
        for inj in &injs {
            assert!(check_igr_morphism(inj, &t, &colim).unwrap().is_none());
        }
    }

    #[test]
    fn empty_ideal_gives_back_the_tower() {
        let t = constant_tower(3);
        let gens = vec![Vec::new(); 4];
        let ops = ideal_ops(&t, &gens).unwrap();
        assert_eq!(ops.quotient.dims(), t.dims());
        assert!(ops.quotient.check_igr().ok);
        assert!(ops.projection.is_levelwise_bijective());
    }

    #[test]
    fn full_level1_ideal_kills_higher_levels() {
        let t = constant_tower(4);
        let mut gens = vec![Vec::new(); 5];
        gens[1] = vec![crate::gf2::BitVector::ones(1)];
        let ops = ideal_ops(&t, &gens).unwrap();
        assert_eq!(ops.quotient.dims(), &[1, 0, 0, 0, 0]);
        assert!(ops.projection.is_levelwise_surjective());
    }
}
