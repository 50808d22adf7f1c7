//! Reduced K-theory of a finite hyperbolic hyperfield.
//!
//! Level n is the GF(2) quotient of the free space on all n-tuples of units
//! by slot multiplicativity and the degree-two vanishing relations
//! (consecutive entries `a, b` with `b in 1 - a` kill a tuple). Dimensions
//! fall out of rank computations on the relation rows; no normal-form theory
//! is involved, which keeps the spanning-set representation honest at the
//! cost of a configurable cap on tuples per level.

use crate::gf2::{quotient_structure, BilinearTable, BitMatrix, BitVector};
use crate::hyperfield::{hf_morphism_check, Multiring};
use crate::igr::{IgrMorphism, TruncatedIgr};
use crate::sgroup::{from_hyperfield, reality_report};
use crate::verdict::{Verdict, Witness};
use crate::{Error, Result, DEFAULT_TUPLE_CAP};
use std::collections::BTreeMap;

/// One graded component: the projection from the free space on unit tuples
/// and the tuples lifting the chosen basis.
#[derive(Debug, Clone)]
struct KLevel {
    projection: BitMatrix,
    basis_tuples: Vec<Vec<usize>>,
}

/// The reduced K-theory ring of a hyperbolic hyperfield, truncated at a
/// level, packaged as an inductive graded ring together with the symbol
/// decoding maps.
#[derive(Debug, Clone)]
pub struct KTheoryRing {
    base: Multiring,
    units: Vec<usize>,
    truncation: usize,
    levels: Vec<KLevel>,
    igr: TruncatedIgr,
}

impl KTheoryRing {
    pub fn base(&self) -> &Multiring {
        &self.base
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn igr(&self) -> &TruncatedIgr {
        &self.igr
    }

    pub fn dims(&self) -> Vec<usize> {
        self.igr.dims().to_vec()
    }

    pub fn dim(&self, level: usize) -> usize {
        self.igr.dim(level)
    }

    /// Unit element indices of the base, in carrier order.
    pub fn units(&self) -> &[usize] {
        &self.units
    }

    /// The class of the symbol `rho(a_1)...rho(a_n)` given by base element
    /// indices; entries must be units.
    pub fn decode(&self, tuple: &[usize]) -> Result<BitVector> {
        let n = tuple.len();
        if n > self.truncation {
            return Err(Error::DimensionMismatch(format!(
                "symbol of degree {n} exceeds truncation {}",
                self.truncation
            )));
        }
        let mut idx = 0usize;
        for &e in tuple {
            let u = self
                .units
                .iter()
                .position(|&x| x == e)
                .ok_or_else(|| Error::BadParam("symbol entries must be units".into()))?;
            idx = idx * self.units.len() + u;
        }
        Ok(self.levels[n].projection.column(idx))
    }

    /// The tuples (as base element indices) lifting the basis of a level.
    pub fn basis_tuples(&self, level: usize) -> &[Vec<usize>] {
        &self.levels[level].basis_tuples
    }
}

/// Computes the reduced K-theory of `f` up to level `truncation`.
pub fn compute_k(f: &Multiring, truncation: usize, cap: Option<usize>) -> Result<KTheoryRing> {
    if !f.is_hyperfield() {
        return Err(Error::NotHyperfield(f.name().to_string()));
    }
    let cap = cap.unwrap_or(DEFAULT_TUPLE_CAP);
    let units = f.units();
    let u = units.len();
    // Vanishing pairs: unit positions (a, b) with b in 1 - a.
    let mut steinberg = vec![false; u * u];
    for (ai, &a) in units.iter().enumerate() {
        let one_minus_a = f.one_minus(a);
        for (bi, &b) in units.iter().enumerate() {
            steinberg[ai * u + bi] = one_minus_a >> b & 1 == 1;
        }
    }
    let mut levels = Vec::with_capacity(truncation + 1);
    levels.push(KLevel {
        projection: BitMatrix::identity(1),
        basis_tuples: vec![vec![]],
    });
    for lvl in 1..=truncation {
        let count = u
            .checked_pow(lvl as u32)
            .filter(|&c| c <= cap)
            .ok_or(Error::CapExceeded {
                needed: usize::MAX,
                cap,
            })?;
        let mut rows: Vec<BitVector> = Vec::new();
        let ctx_count = u.pow(lvl as u32 - 1);
        // Slot multiplicativity: [.., ab, ..] + [.., a, ..] + [.., b, ..].
        for slot in 0..lvl {
            let hi = u.pow((lvl - 1 - slot) as u32);
            for ctx in 0..ctx_count {
                let high = ctx / hi;
                let low = ctx % hi;
                let base_idx = |val: usize| (high * u + val) * hi + low;
                for ai in 0..u {
                    for bi in 0..u {
                        let ab = f.mul(units[ai], units[bi]);
                        let abi = units.iter().position(|&x| x == ab).unwrap();
                        let mut row = BitVector::zeros(count);
                        // XOR handles coincidences like a = b = ab.
                        for v in [abi, ai, bi] {
                            let i = base_idx(v);
                            row.set(i, !row.get(i));
                        }
                        if !row.is_zero() {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        // Vanishing tuples: adjacent entries a, b with b in 1 - a.
        if lvl >= 2 {
            let pair_ctx = u.pow((lvl - 2) as u32);
            for slot in 0..lvl - 1 {
                let hi = u.pow((lvl - 2 - slot) as u32);
                for ctx in 0..pair_ctx {
                    let high = ctx / hi;
                    let low = ctx % hi;
                    for ai in 0..u {
                        for bi in 0..u {
                            if !steinberg[ai * u + bi] {
                                continue;
                            }
                            let idx = ((high * u + ai) * u + bi) * hi + low;
                            rows.push(BitVector::unit(count, idx));
                        }
                    }
                }
            }
        }
        let q = quotient_structure(count, &rows);
        let basis_tuples = q
            .lifts
            .iter()
            .map(|&idx| {
                let mut t = vec![0usize; lvl];
                let mut rest = idx;
                for slot in (0..lvl).rev() {
                    t[slot] = units[rest % u];
                    rest /= u;
                }
                t
            })
            .collect();
        levels.push(KLevel {
            projection: q.projection,
            basis_tuples,
        });
    }

    let dims: Vec<usize> = levels.iter().map(|l| l.projection.rows()).collect();
    let minus_one = f.neg(f.one());
    let decode_at = |lvl: usize, tuple: &[usize]| -> BitVector {
        let mut idx = 0usize;
        for &e in tuple {
            idx = idx * u + units.iter().position(|&x| x == e).unwrap();
        }
        levels[lvl].projection.column(idx)
    };
    let tops: Vec<BitVector> = (0..=truncation)
        .map(|lvl| decode_at(lvl, &vec![minus_one; lvl]))
        .collect();
    let mut h = Vec::new();
    for lvl in 0..truncation {
        let mut m = BitMatrix::zeros(dims[lvl + 1], dims[lvl]);
        for (c, t) in levels[lvl].basis_tuples.iter().enumerate() {
            let mut t2 = Vec::with_capacity(lvl + 1);
            t2.push(minus_one);
            t2.extend_from_slice(t);
            let col = decode_at(lvl + 1, &t2);
            for i in col.iter_ones() {
                m.set(i, c, true);
            }
        }
        h.push(m);
    }
    let mut star = BTreeMap::new();
    for a in 1..truncation {
        for b in 1..truncation {
            if a + b > truncation {
                continue;
            }
            let table = BilinearTable::from_fn(dims[a], dims[b], dims[a + b], |i, j| {
                let mut t = levels[a].basis_tuples[i].clone();
                t.extend_from_slice(&levels[b].basis_tuples[j]);
                decode_at(a + b, &t)
            });
            star.insert((a, b), table);
        }
    }
    let igr = TruncatedIgr::new(format!("k({})", f.name()), dims, tops, h, star)?;
    Ok(KTheoryRing {
        base: f.clone(),
        units,
        truncation,
        levels,
        igr,
    })
}

/// Verdicts of the symbol identity suite.
#[derive(Debug, Clone)]
pub struct KIdentityReport {
    /// `rho(a) rho(-a) = 0` for all units a.
    pub rho_neg: Verdict,
    /// `rho(a) rho(b) = rho(b) rho(a)` in degree 2.
    pub commute2: Verdict,
    /// `rho(a)^2 = rho(a) rho(-1)`.
    pub square: Verdict,
    /// Permutation invariance in degree 3 (only when the truncation allows).
    pub permute3: Option<Verdict>,
    /// For real reduced bases: `x in 1 + y` and a vanishing y-symbol force
    /// the corresponding x-symbol to vanish.
    pub real_reduced: Option<Verdict>,
}

impl KIdentityReport {
    pub fn all_ok(&self) -> bool {
        self.rho_neg.ok
            && self.commute2.ok
            && self.square.ok
            && self.permute3.as_ref().map_or(true, |v| v.ok)
            && self.real_reduced.as_ref().map_or(true, |v| v.ok)
    }

    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        let mut v = vec![
            ("rho_neg", &self.rho_neg),
            ("commute2", &self.commute2),
            ("square", &self.square),
        ];
        if let Some(p) = &self.permute3 {
            v.push(("permute3", p));
        }
        if let Some(r) = &self.real_reduced {
            v.push(("real_reduced", r));
        }
        v
    }
}

/// Exhaustively verifies the basic symbol identities.
pub fn k_identity_suite(kr: &KTheoryRing) -> Result<KIdentityReport> {
    if kr.truncation() < 2 {
        return Err(Error::BadParam(
            "identity suite needs truncation >= 2".into(),
        ));
    }
    let f = kr.base().clone();
    let units: Vec<usize> = kr.units().to_vec();
    let w = |axiom: &str, idx: &[usize]| {
        Witness::new(
            axiom,
            idx.iter().map(|&i| f.label(i).to_string()).collect(),
        )
    };
    let mut rho_neg = Verdict::pass();
    for &a in &units {
        if !kr.decode(&[a, f.neg(a)])?.is_zero() {
            rho_neg = Verdict::fail(w("rho_neg", &[a]));
            break;
        }
    }
    let mut commute2 = Verdict::pass();
    'c: for &a in &units {
        for &b in &units {
            if kr.decode(&[a, b])? != kr.decode(&[b, a])? {
                commute2 = Verdict::fail(w("commute2", &[a, b]));
                break 'c;
            }
        }
    }
    let minus_one = f.neg(f.one());
    let mut square = Verdict::pass();
    for &a in &units {
        if kr.decode(&[a, a])? != kr.decode(&[a, minus_one])? {
            square = Verdict::fail(w("square", &[a]));
            break;
        }
    }
    let permute3 = if kr.truncation() >= 3 {
        let mut v = Verdict::pass();
        'p: for &a in &units {
            for &b in &units {
                for &c in &units {
                    let base = kr.decode(&[a, b, c])?;
                    for t in [[a, c, b], [b, a, c], [c, b, a]] {
                        if kr.decode(&t)? != base {
                            v = Verdict::fail(w("permute3", &[a, b, c]));
                            break 'p;
                        }
                    }
                }
            }
        }
        Some(v)
    } else {
        None
    };
    // Lemma clause for real reduced bases.
    let real_reduced = match from_hyperfield(&f) {
        Ok(g) if reality_report(&g).reduced => {
            let mut v = Verdict::pass();
            'rr: for &y in &units {
                let one_plus_y = f.sum_mask(f.one(), y);
                for &x in &units {
                    if one_plus_y >> x & 1 == 0 {
                        continue;
                    }
                    for deg in 1..kr.truncation() {
                        let mut tuple = vec![0usize; deg];
                        if !check_real_reduced_rec(kr, &units, x, y, &mut tuple, 0)? {
                            v = Verdict::fail(w("real_reduced", &[x, y]));
                            break 'rr;
                        }
                    }
                }
            }
            Some(v)
        }
        _ => None,
    };
    Ok(KIdentityReport {
        rho_neg,
        commute2,
        square,
        permute3,
        real_reduced,
    })
}

fn check_real_reduced_rec(
    kr: &KTheoryRing,
    units: &[usize],
    x: usize,
    y: usize,
    tuple: &mut [usize],
    pos: usize,
) -> Result<bool> {
    if pos == tuple.len() {
        let mut with_y = vec![y];
        with_y.extend_from_slice(tuple);
        if kr.decode(&with_y)?.is_zero() {
            with_y[0] = x;
            return Ok(kr.decode(&with_y)?.is_zero());
        }
        return Ok(true);
    }
    for &a in units {
        tuple[pos] = a;
        if !check_real_reduced_rec(kr, units, x, y, tuple, pos + 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-level injectivity of multiplication by `rho(-1)`, plus the composite
/// transition kernels.
#[derive(Debug, Clone)]
pub struct SmcReport {
    /// (level, kernel dimension) for each single transition `1 <= n < N`.
    pub levels: Vec<(usize, usize)>,
    /// (from, to, kernel dimension) for composites.
    pub composites: Vec<(usize, usize, usize)>,
    pub all_injective: bool,
}

impl SmcReport {
    pub fn injective_at(&self, level: usize) -> Option<bool> {
        self.levels
            .iter()
            .find(|&&(n, _)| n == level)
            .map(|&(_, k)| k == 0)
    }
}

pub fn smc_check(kr: &KTheoryRing) -> SmcReport {
    let igr = kr.igr();
    let n = igr.truncation();
    let mut levels = Vec::new();
    let mut all = true;
    for lvl in 1..n {
        let k = igr.h(lvl).kernel_basis().len();
        if k > 0 {
            all = false;
        }
        levels.push((lvl, k));
    }
    let mut composites = Vec::new();
    for from in 1..=n {
        for to in from + 1..=n {
            composites.push((from, to, igr.h_composite(from, to).kernel_basis().len()));
        }
    }
    SmcReport {
        levels,
        composites,
        all_injective: all,
    }
}

/// The graded-ring morphism induced by a hyperfield morphism, defined on
/// symbol generators.
pub fn k_induced_morphism(
    f_map: &[usize],
    kr_f: &KTheoryRing,
    kr_l: &KTheoryRing,
) -> Result<IgrMorphism> {
    let rep = hf_morphism_check(f_map, kr_f.base(), kr_l.base(), false)?;
    if !rep.is_morphism {
        return Err(Error::NotMorphism(format!("{}", rep.witness.unwrap())));
    }
    if kr_f.truncation() != kr_l.truncation() {
        return Err(Error::TruncationMismatch {
            expected: kr_f.truncation(),
            got: kr_l.truncation(),
        });
    }
    let mut maps = vec![BitMatrix::identity(1)];
    for lvl in 1..=kr_f.truncation() {
        let mut m = BitMatrix::zeros(kr_l.dim(lvl), kr_f.dim(lvl));
        for (c, t) in kr_f.basis_tuples(lvl).iter().enumerate() {
            let image: Vec<usize> = t.iter().map(|&e| f_map[e]).collect();
            let col = kr_l.decode(&image)?;
            for i in col.iter_ones() {
                m.set(i, c, true);
            }
        }
        maps.push(m);
    }
    Ok(IgrMorphism { maps })
}

/// Integral structure of one level of the unreduced construction: the free
/// rank and the nontrivial invariant factors of `Z^tuples / relations`.
///
/// Relations are slot multiplicativity `[.., ab, ..] - [.., a, ..] - [.., b,
/// ..]` and the vanishing tuples; this is the same presentation as the mod-2
/// one but over the integers, decided by Smith normal form.
pub fn unreduced_level_structure(f: &Multiring, level: usize) -> Result<(usize, Vec<u64>)> {
    if !f.is_hyperfield() {
        return Err(Error::NotHyperfield(f.name().to_string()));
    }
    let units = f.units();
    let u = units.len();
    let count = u.pow(level as u32);
    if count > 4096 {
        return Err(Error::CapExceeded {
            needed: count,
            cap: 4096,
        });
    }
    if level == 0 {
        // K_0 = Z.
        return Ok((1, Vec::new()));
    }
    let mut rows: Vec<Vec<i128>> = Vec::new();
    let ctx_count = u.pow(level as u32 - 1);
    for slot in 0..level {
        let hi = u.pow((level - 1 - slot) as u32);
        for ctx in 0..ctx_count {
            let high = ctx / hi;
            let low = ctx % hi;
            let base_idx = |val: usize| (high * u + val) * hi + low;
            for ai in 0..u {
                for bi in 0..u {
                    let ab = f.mul(units[ai], units[bi]);
                    let abi = units.iter().position(|&x| x == ab).unwrap();
                    let mut row = vec![0i128; count];
                    row[base_idx(abi)] += 1;
                    row[base_idx(ai)] -= 1;
                    row[base_idx(bi)] -= 1;
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    if level >= 2 {
        let pair_ctx = u.pow((level - 2) as u32);
        for slot in 0..level - 1 {
            let hi = u.pow((level - 2 - slot) as u32);
            for ctx in 0..pair_ctx {
                let high = ctx / hi;
                let low = ctx % hi;
                for ai in 0..u {
                    for bi in 0..u {
                        if f.one_minus(units[ai]) >> units[bi] & 1 == 1 {
                            let idx = ((high * u + ai) * u + bi) * hi + low;
                            let mut row = vec![0i128; count];
                            row[idx] = 1;
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    let factors = smith_invariant_factors(rows, count);
    let free_rank = count - factors.len();
    let torsion: Vec<u64> = factors
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| d as u64)
        .collect();
    Ok((free_rank, torsion))
}

/// Invariant factors of the lattice spanned by the rows inside `Z^cols`
/// (the nonzero diagonal of the Smith normal form).
fn smith_invariant_factors(mut rows: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    rows.retain(|r| r.iter().any(|&x| x != 0));
    let mut factors = Vec::new();
    let mut col_used = vec![false; cols];
    while !rows.is_empty() {
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in rows.iter().enumerate() {
            for c in 0..cols {
                if col_used[c] || row[c] == 0 {
                    continue;
                }
                if best.map_or(true, |(br, bc)| row[c].abs() < rows[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        let pivot = rows[pr][pc];
        // Row reduction against the pivot.
        let mut dirty = false;
        let pivot_row = rows[pr].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr || row[pc] == 0 {
                continue;
            }
            let q = row[pc].div_euclid(pivot);
            for c in 0..cols {
                let sub = q.checked_mul(pivot_row[c]).expect("entries stay small");
                row[c] = row[c].checked_sub(sub).expect("entries stay small");
            }
            if row[pc] != 0 {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // Column reduction within the pivot row.
        let mut col_dirty = false;
        for c in 0..cols {
            if c == pc || col_used[c] || rows[pr][c] == 0 {
                continue;
            }
            let q = rows[pr][c].div_euclid(pivot);
            for row in rows.iter_mut() {
                let sub = q.checked_mul(row[pc]).expect("entries stay small");
                row[c] = row[c].checked_sub(sub).expect("entries stay small");
            }
            if rows[pr][c] != 0 {
                // Remainder left: fold the column into the pivot column so
                // the next pivot search finds a smaller entry.
                for row in rows.iter_mut() {
                    let add = row[c];
                    row[pc] = row[pc].checked_add(add).expect("entries stay small");
                }
                col_dirty = true;
            }
        }
        if col_dirty {
            continue;
        }
        factors.push(pivot.abs());
        col_used[pc] = true;
        rows.remove(pr);
        rows.retain(|r| r.iter().enumerate().any(|(c, &x)| !col_used[c] && x != 0));
    }
    factors.sort_unstable();
    factors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::{build_example, marshall_quotient, ExampleKind};

    fn q2() -> Multiring {
        build_example(ExampleKind::Q2, 0).unwrap()
    }

    #[test]
    fn k_dims_of_q2_are_all_one() {
        let kr = compute_k(&q2(), 5, None).unwrap();
        assert_eq!(kr.dims(), vec![1; 6]);
        // The generator of each level is rho(-1)^n.
        let m1 = q2().index_of("-1").unwrap();
        for n in 0..=5 {
            assert!(!kr.decode(&vec![m1; n]).unwrap().is_zero());
        }
        assert!(kr.igr().check_igr().ok);
    }

    #[test]
    fn k_dims_of_h3() {
        let h3 = build_example(ExampleKind::Hp, 3).unwrap();
        let kr = compute_k(&h3, 2, None).unwrap();
        // rho(2)rho(2) = 0 because 2 is in 1 - 2 = {1, 2}.
        assert_eq!(kr.dims(), vec![1, 1, 0]);
        assert!(kr.igr().check_igr().ok);
    }

    #[test]
    fn k_dims_of_krasner() {
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        let kr = compute_k(&k, 2, None).unwrap();
        assert_eq!(kr.dims(), vec![1, 0, 0]);
    }

    #[test]
    fn compute_k_rejects_non_hyperfields_and_caps() {
        let x2 = build_example(ExampleKind::Kaleidoscope, 2).unwrap();
        assert!(matches!(
            compute_k(&x2, 2, None),
            Err(Error::NotHyperfield(_))
        ));
        let h7 = build_example(ExampleKind::Hp, 7).unwrap();
        assert!(matches!(
            compute_k(&h7, 3, Some(100)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn milnor_k_of_prime_fields() {
        // Fields embed as hyperfields; k_1 is the square class group and
        // degree two vanishes for finite fields.
        let f7 = build_example(ExampleKind::PrimeField, 7).unwrap();
        let kr = compute_k(&f7, 3, None).unwrap();
        assert_eq!(kr.dims(), vec![1, 1, 0, 0]);
        assert!(kr.igr().check_igr().ok);
        let f5 = build_example(ExampleKind::PrimeField, 5).unwrap();
        let kr = compute_k(&f5, 2, None).unwrap();
        assert_eq!(kr.dims(), vec![1, 1, 0]);
    }

    #[test]
    fn identity_suite_passes_on_pool_bases() {
        for f in [
            q2(),
            build_example(ExampleKind::Krasner, 0).unwrap(),
            build_example(ExampleKind::Hp, 3).unwrap(),
        ] {
            let kr = compute_k(&f, 3, None).unwrap();
            let rep = k_identity_suite(&kr).unwrap();
            assert!(rep.all_ok(), "{} fails: {:?}", f.name(), rep.verdicts());
        }
    }

    #[test]
    fn smc_holds_for_q2_fails_for_h3() {
        let kr = compute_k(&q2(), 4, None).unwrap();
        assert!(smc_check(&kr).all_injective);
        let h3 = build_example(ExampleKind::Hp, 3).unwrap();
        let kr = compute_k(&h3, 2, None).unwrap();
        let rep = smc_check(&kr);
        assert!(!rep.all_injective);
        assert_eq!(rep.injective_at(1), Some(false));
    }

    #[test]
    fn induced_morphism_of_identity_is_identity() {
        let kr = compute_k(&q2(), 3, None).unwrap();
        let id: Vec<usize> = (0..3).collect();
        let m = k_induced_morphism(&id, &kr, &kr).unwrap();
        assert_eq!(m, IgrMorphism::identity(kr.igr()));
    }

    #[test]
    fn quotient_map_induces_levelwise_surjection() {
        let f7 = build_example(ExampleKind::PrimeField, 7).unwrap();
        let squares: Vec<usize> = [1, 2, 4]
            .iter()
            .map(|&x| f7.index_of(&x.to_string()).unwrap())
            .collect();
        let q = marshall_quotient(&f7, &squares).unwrap();
        // The quotient map sends a unit to its class representative.
        let f_map: Vec<usize> = (0..f7.size())
            .map(|a| {
                if a == f7.zero() {
                    return q.zero();
                }
                (0..q.size())
                    .find(|&c| {
                        c != q.zero() && {
                            let rep_idx = f7.index_of(q.label(c)).unwrap();
                            squares.iter().any(|&s| f7.mul(a, s) == rep_idx)
                        }
                    })
                    .unwrap()
            })
            .collect();
        let kf = compute_k(&f7, 3, None).unwrap();
        let kq = compute_k(&q, 3, None).unwrap();
        let m = k_induced_morphism(&f_map, &kf, &kq).unwrap();
        assert!(m.is_levelwise_surjective());
        assert!(crate::igr::check_igr_morphism(&m, kf.igr(), kq.igr())
            .unwrap()
            .is_none());
    }

    #[test]
    fn unreduced_structure_is_elementary_two_torsion_for_square_quotients() {
        let f7 = build_example(ExampleKind::PrimeField, 7).unwrap();
        let squares: Vec<usize> = [1, 2, 4]
            .iter()
            .map(|&x| f7.index_of(&x.to_string()).unwrap())
            .collect();
        let q = marshall_quotient(&f7, &squares).unwrap();
        let kq = compute_k(&q, 3, None).unwrap();
        for lvl in 1..=3 {
            let (free, torsion) = unreduced_level_structure(&q, lvl).unwrap();
            assert_eq!(free, 0, "level {lvl} has free part");
            assert!(torsion.iter().all(|&d| d == 2), "level {lvl}: {torsion:?}");
            assert_eq!(torsion.len(), kq.dim(lvl), "level {lvl} dimension");
        }
    }
}
