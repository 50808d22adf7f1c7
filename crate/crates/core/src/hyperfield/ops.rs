//! Constructions on hyperfields: the hyperbolic product, Marshall quotients,
//! morphism checking and isomorphism search.

use super::{mask_elems, Multiring};
use crate::verdict::Witness;
use crate::{Error, Result, MAX_CARRIER};

/// The product of two hyperbolic hyperfields. The carrier is
/// `(units x units) + {(0,0)}` and a sum contains exactly the componentwise
/// sums that stay inside that carrier.
///
/// With `verify_universal` set, the projections are checked to be morphisms
/// and, for every pair of morphisms out of each structure in a small bundled
/// pool, the pairing map is verified to be the unique morphism commuting with
/// the projections.
pub fn product_h(f1: &Multiring, f2: &Multiring, verify_universal: bool) -> Result<Multiring> {
    for f in [f1, f2] {
        if !f.is_hyperfield() {
            return Err(Error::NotHyperfield(f.name().to_string()));
        }
        if !f.is_hyperbolic_hyperfield() {
            return Err(Error::NotHyperbolic(f.name().to_string()));
        }
    }
    let mut pairs: Vec<(usize, usize)> = vec![(f1.zero(), f2.zero())];
    for &a in &f1.units() {
        for &b in &f2.units() {
            pairs.push((a, b));
        }
    }
    if pairs.len() > MAX_CARRIER {
        return Err(Error::CarrierTooLarge(pairs.len()));
    }
    let index = |a: usize, b: usize| -> Option<usize> { pairs.iter().position(|&p| p == (a, b)) };
    let elements: Vec<String> = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", f1.label(a), f2.label(b)))
        .collect();
    let n = pairs.len();
    let mut neg = vec![0; n];
    let mut mul = vec![0; n * n];
    let mut sum = vec![0u64; n * n];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        neg[i] = index(f1.neg(a), f2.neg(b)).expect("negation stays in the carrier");
        for (j, &(c, d)) in pairs.iter().enumerate() {
            let prod = (f1.mul(a, c), f2.mul(b, d));
            mul[i * n + j] = index(prod.0, prod.1).expect("products stay in the carrier");
            let mut mask = 0u64;
            for (k, &(e, f)) in pairs.iter().enumerate() {
                if f1.sum_contains(a, c, e) && f2.sum_contains(b, d, f) {
                    mask |= 1 << k;
                }
            }
            sum[i * n + j] = mask;
        }
    }
    let product = Multiring::new(
        format!("{}x{}", f1.name(), f2.name()),
        elements,
        0,
        index(f1.one(), f2.one()).unwrap(),
        neg,
        mul,
        sum,
    )?;

    if verify_universal {
        verify_product_universal(&product, f1, f2, &pairs)?;
    }
    Ok(product)
}

fn verify_product_universal(
    product: &Multiring,
    f1: &Multiring,
    f2: &Multiring,
    pairs: &[(usize, usize)],
) -> Result<()> {
    let proj1: Vec<usize> = pairs.iter().map(|&(a, _)| a).collect();
    let proj2: Vec<usize> = pairs.iter().map(|&(_, b)| b).collect();
    for (proj, target) in [(&proj1, f1), (&proj2, f2)] {
        let rep = hf_morphism_check(proj, product, target, false)?;
        if !rep.is_morphism {
            return Err(Error::NotMorphism(format!(
                "projection onto {} fails: {}",
                target.name(),
                rep.witness.unwrap()
            )));
        }
    }
    for source in morphism_pool() {
        for p1 in enumerate_morphisms(&source, f1) {
            for p2 in enumerate_morphisms(&source, f2) {
                let pairing: Vec<usize> = (0..source.size())
                    .map(|x| {
                        pairs
                            .iter()
                            .position(|&p| p == (p1[x], p2[x]))
                            .expect("componentwise images stay in the carrier")
                    })
                    .collect();
                let rep = hf_morphism_check(&pairing, &source, product, false)?;
                if !rep.is_morphism {
                    return Err(Error::NotMorphism(format!(
                        "pairing of morphisms from {} is not a morphism",
                        source.name()
                    )));
                }
                let commuting = enumerate_morphisms(&source, product)
                    .into_iter()
                    .filter(|f| {
                        (0..source.size())
                            .all(|x| proj1[f[x]] == p1[x] && proj2[f[x]] == p2[x])
                    })
                    .count();
                if commuting != 1 {
                    return Err(Error::NotMorphism(format!(
                        "universal property violated: {commuting} commuting morphisms from {}",
                        source.name()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// The pool used to exercise the universal property; kept small so the
/// enumeration over raw element maps stays cheap.
fn morphism_pool() -> Vec<Multiring> {
    use super::{build_example, ExampleKind};
    vec![
        build_example(ExampleKind::Q2, 0).unwrap(),
        build_example(ExampleKind::Krasner, 0).unwrap(),
        build_example(ExampleKind::Hp, 3).unwrap(),
    ]
}

/// All multiring morphisms `f: a -> b`, as element maps.
pub(crate) fn enumerate_morphisms(a: &Multiring, b: &Multiring) -> Vec<Vec<usize>> {
    // A morphism sends units to units (f(a)f(a^-1) = 1), fixes 0 and 1.
    let units_a = a.units();
    let units_b = b.units();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; a.size()];
    map[a.zero()] = b.zero();
    fn rec(
        a: &Multiring,
        b: &Multiring,
        units_a: &[usize],
        units_b: &[usize],
        pos: usize,
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == units_a.len() {
            if let Ok(rep) = hf_morphism_check(map, a, b, false) {
                if rep.is_morphism {
                    out.push(map.clone());
                }
            }
            return;
        }
        let x = units_a[pos];
        for &y in units_b {
            map[x] = y;
            rec(a, b, units_a, units_b, pos + 1, map, out);
        }
        map[x] = usize::MAX;
    }
    rec(a, b, &units_a, &units_b, 0, &mut map, &mut out);
    out
}

/// Report of a morphism check: either everything holds, or the first failing
/// condition with its witness.
#[derive(Debug, Clone)]
pub struct MorphismReport {
    pub is_morphism: bool,
    pub strong: Option<bool>,
    pub witness: Option<Witness>,
}

/// Verifies that the element map `f` is a multiring morphism `from -> to`:
/// `f(0)=0`, `f(1)=1`, `f(-a)=-f(a)`, `f(ab)=f(a)f(b)` and
/// `c in a+b  =>  f(c) in f(a)+f(b)`.
///
/// With `strong` set, also checks the reflection condition: whenever
/// `f(c) in f(a)+f(b)` there are preimages `a',b',c'` of the same images with
/// `c' in a'+b'`.
pub fn hf_morphism_check(
    f: &[usize],
    from: &Multiring,
    to: &Multiring,
    strong: bool,
) -> Result<MorphismReport> {
    if f.len() != from.size() {
        return Err(Error::DimensionMismatch(
            "morphism map must be total on the source".into(),
        ));
    }
    if f.iter().any(|&y| y >= to.size()) {
        return Err(Error::DimensionMismatch(
            "morphism map image out of range".into(),
        ));
    }
    let fail = |axiom: &str, idx: &[usize]| MorphismReport {
        is_morphism: false,
        strong: None,
        witness: Some(Witness::new(axiom, idx.iter().map(|&i| from.label(i).to_string()).collect())),
    };
    if f[from.zero()] != to.zero() {
        return Ok(fail("morphism_zero", &[from.zero()]));
    }
    if f[from.one()] != to.one() {
        return Ok(fail("morphism_one", &[from.one()]));
    }
    for a in 0..from.size() {
        if f[from.neg(a)] != to.neg(f[a]) {
            return Ok(fail("morphism_neg", &[a]));
        }
        for b in 0..from.size() {
            if f[from.mul(a, b)] != to.mul(f[a], f[b]) {
                return Ok(fail("morphism_mul", &[a, b]));
            }
        }
    }
    for a in 0..from.size() {
        for b in 0..from.size() {
            for c in mask_elems(from.sum_mask(a, b)) {
                if !to.sum_contains(f[a], f[b], f[c]) {
                    return Ok(fail("morphism_sum", &[a, b, c]));
                }
            }
        }
    }
    let strong_ok = if strong {
        Some(check_strong(f, from, to))
    } else {
        None
    };
    Ok(MorphismReport {
        is_morphism: true,
        strong: strong_ok,
        witness: None,
    })
}

fn check_strong(f: &[usize], from: &Multiring, to: &Multiring) -> bool {
    let n = from.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !to.sum_contains(f[a], f[b], f[c]) {
                    continue;
                }
                let mut found = false;
                'search: for ap in 0..n {
                    if f[ap] != f[a] {
                        continue;
                    }
                    for bp in 0..n {
                        if f[bp] != f[b] {
                            continue;
                        }
                        for cp in mask_elems(from.sum_mask(ap, bp)) {
                            if f[cp] == f[c] {
                                found = true;
                                break 'search;
                            }
                        }
                    }
                }
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// The Marshall quotient `F/_m T`: elements are `T`-orbits of units plus
/// zero, and a class `c̄` lies in `ā + b̄` iff `c ∈ as + bt` for some
/// `s, t ∈ T`.
///
/// `T` must contain 1, exclude 0 and be multiplicatively closed. The orbit
/// sum is checked to be independent of representatives after construction.
pub fn marshall_quotient(f: &Multiring, t: &[usize]) -> Result<Multiring> {
    if !t.contains(&f.one()) {
        return Err(Error::BadSubset("T must contain 1".into()));
    }
    if t.contains(&f.zero()) {
        return Err(Error::BadSubset("T must not contain 0".into()));
    }
    for &s in t {
        for &u in t {
            if !t.contains(&f.mul(s, u)) {
                return Err(Error::BadSubset(format!(
                    "T is not multiplicatively closed: {}*{} escapes",
                    f.label(s),
                    f.label(u)
                )));
            }
        }
    }
    // Orbit of a: { a*s : s in T }. Class representative: least index.
    let orbit = |a: usize| -> u64 {
        let mut m = 0u64;
        for &s in t {
            m |= 1 << f.mul(a, s);
        }
        m
    };
    let mut rep_of = vec![usize::MAX; f.size()];
    let mut reps: Vec<usize> = vec![f.zero()];
    rep_of[f.zero()] = f.zero();
    for a in 0..f.size() {
        if a == f.zero() || rep_of[a] != usize::MAX {
            continue;
        }
        let members = mask_elems(orbit(a));
        let rep = *members.iter().min().unwrap();
        if rep_of[rep] == usize::MAX {
            reps.push(rep);
        }
        for m in members {
            if m == f.zero() {
                return Err(Error::BadSubset("orbit of a unit contains 0".into()));
            }
            rep_of[m] = rep;
        }
    }
    let class_of = |a: usize| reps.iter().position(|&r| r == rep_of[a]).unwrap();
    let n = reps.len();
    let elements: Vec<String> = reps.iter().map(|&r| f.label(r).to_string()).collect();
    let neg: Vec<usize> = reps.iter().map(|&r| class_of(f.neg(r))).collect();
    let mut mul = vec![0; n * n];
    let mut sum = vec![0u64; n * n];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            mul[i * n + j] = class_of(f.mul(a, b));
            let mut mask = 0u64;
            for &s in t {
                for &u in t {
                    for c in mask_elems(f.sum_mask(f.mul(a, s), f.mul(b, u))) {
                        mask |= 1 << class_of(c);
                    }
                }
            }
            sum[i * n + j] = mask;
        }
    }
    let q = Multiring::new(
        format!("{}/T", f.name()),
        elements,
        0,
        class_of(f.one()),
        neg,
        mul,
        sum,
    )?;
    // Well-definedness: the orbit sum must not depend on the representative.
    for (i, &a) in reps.iter().enumerate() {
        for &s in t {
            let a2 = f.mul(a, s);
            for (j, &b) in reps.iter().enumerate() {
                let mut mask = 0u64;
                for &s2 in t {
                    for &u in t {
                        for c in mask_elems(f.sum_mask(f.mul(a2, s2), f.mul(b, u))) {
                            mask |= 1 << class_of(c);
                        }
                    }
                }
                if mask != q.sum_mask(i, j) {
                    return Err(Error::BadSubset(format!(
                        "orbit sum not well-defined at {} + {}",
                        f.label(a),
                        f.label(b)
                    )));
                }
            }
        }
    }
    Ok(q)
}

/// Searches for an isomorphism of multirings (a bijection preserving zero,
/// one, negation, multiplication and sums). Candidates are explored in
/// carrier order, so the first hit is canonical.
pub fn find_isomorphism(a: &Multiring, b: &Multiring) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    let n = a.size();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    used[b.zero()] = true;
    if a.one() != a.zero() {
        if b.one() == b.zero() {
            return None;
        }
        map[a.one()] = b.one();
        used[b.one()] = true;
    }
    let order: Vec<usize> = (0..n).filter(|&x| map[x] == usize::MAX).collect();

    fn consistent(a: &Multiring, b: &Multiring, map: &[usize]) -> bool {
        let assigned: Vec<usize> = (0..a.size()).filter(|&x| map[x] != usize::MAX).collect();
        for &x in &assigned {
            if map[a.neg(x)] != usize::MAX && map[a.neg(x)] != b.neg(map[x]) {
                return false;
            }
            for &y in &assigned {
                let p = a.mul(x, y);
                if map[p] != usize::MAX && map[p] != b.mul(map[x], map[y]) {
                    return false;
                }
                for &z in &assigned {
                    if a.sum_contains(x, y, z) != b.sum_contains(map[x], map[y], map[z]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn rec(
        a: &Multiring,
        b: &Multiring,
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
    use crate::hyperfield::{build_example, ExampleKind};

    fn q2() -> Multiring {
        build_example(ExampleKind::Q2, 0).unwrap()
    }

    #[test]
    fn product_q2_q2_has_five_elements_and_is_hyperbolic() {
        let p = product_h(&q2(), &q2(), false).unwrap();
        assert_eq!(p.size(), 5);
        let quad = p.check_quadratic_axioms().unwrap();
        assert!(quad.hyperbolic.ok);
        assert!(quad.pre_special);
    }

    #[test]
    fn product_universal_property_holds_on_the_pool() {
        product_h(&q2(), &q2(), true).unwrap();
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        product_h(&q2(), &k, true).unwrap();
    }

    #[test]
    fn product_rejects_non_hyperbolic_factor() {
        let f3 = build_example(ExampleKind::PrimeField, 3).unwrap();
        assert!(matches!(
            product_h(&f3, &q2(), false),
            Err(Error::NotHyperbolic(_))
        ));
    }

    #[test]
    fn identity_morphism_is_strong() {
        let q2 = q2();
        let id: Vec<usize> = (0..q2.size()).collect();
        let rep = hf_morphism_check(&id, &q2, &q2, true).unwrap();
        assert!(rep.is_morphism);
        assert_eq!(rep.strong, Some(true));
    }

    #[test]
    fn unit_swap_is_not_a_morphism() {
        let q2 = q2();
        // Swap 1 and -1.
        let m1 = q2.index_of("-1").unwrap();
        let one = q2.one();
        let mut f: Vec<usize> = (0..q2.size()).collect();
        f.swap(one, m1);
        let rep = hf_morphism_check(&f, &q2, &q2, false).unwrap();
        assert!(!rep.is_morphism);
        assert_eq!(rep.witness.unwrap().axiom, "morphism_one");
    }

    #[test]
    fn unital_map_h3_to_krasner_is_a_morphism() {
        let h3 = build_example(ExampleKind::Hp, 3).unwrap();
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        let f = vec![0, 1, 1]; // 0 -> 0, 1 -> 1, 2 -> 1
        let rep = hf_morphism_check(&f, &h3, &k, false).unwrap();
        assert!(rep.is_morphism);
    }

    #[test]
    fn marshall_quotient_by_squares_of_f7() {
        let f7 = build_example(ExampleKind::PrimeField, 7).unwrap();
        let squares: Vec<usize> = [1, 2, 4].iter().map(|&x| f7.index_of(&x.to_string()).unwrap()).collect();
        let q = marshall_quotient(&f7, &squares).unwrap();
        assert_eq!(q.size(), 3);
        let quad = q.check_quadratic_axioms().unwrap();
        // 1-1 covers all classes: 1+6, 2+5, 4+3 all reach 0.
        assert!(quad.hyperbolic.ok);
        assert!(quad.pre_special);
    }

    #[test]
    fn marshall_quotient_by_one_is_the_identity() {
        let q2 = q2();
        let q = marshall_quotient(&q2, &[q2.one()]).unwrap();
        assert!(find_isomorphism(&q2, &q).is_some());
        let f7 = build_example(ExampleKind::PrimeField, 7).unwrap();
        let q = marshall_quotient(&f7, &[f7.one()]).unwrap();
        assert!(find_isomorphism(&f7, &q).is_some());
    }

    #[test]
    fn marshall_quotient_rejects_bad_subsets() {
        let f7 = build_example(ExampleKind::PrimeField, 7).unwrap();
        let idx = |x: usize| f7.index_of(&x.to_string()).unwrap();
        assert!(marshall_quotient(&f7, &[idx(2)]).is_err()); // missing 1
        assert!(marshall_quotient(&f7, &[idx(1), idx(2)]).is_err()); // 2*2=4 escapes
    }

    #[test]
    fn h2_is_isomorphic_to_krasner() {
        let h2 = build_example(ExampleKind::Hp, 2).unwrap();
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        assert!(find_isomorphism(&h2, &k).is_some());
        assert!(find_isomorphism(&q2(), &k).is_none());
    }
}
