//! The fixed example pool shared by the property suites and the acceptance
//! tests: the hyperfield zoo, the special groups extracted from it and a
//! family of towers.

use crate::hyperfield::{build_example, marshall_quotient, product_h, ExampleKind, Multiring};
use crate::igr::{igr_product, trivial_t, F2Algebra, TruncatedIgr};
use crate::ktheory::compute_k;
use crate::sgroup::{from_hyperfield, trivial_group, z2_group, PreSpecialGroup};

pub fn q2() -> Multiring {
    build_example(ExampleKind::Q2, 0).unwrap()
}

pub fn krasner() -> Multiring {
    build_example(ExampleKind::Krasner, 0).unwrap()
}

pub fn h(p: usize) -> Multiring {
    build_example(ExampleKind::Hp, p).unwrap()
}

pub fn kaleidoscope(n: usize) -> Multiring {
    build_example(ExampleKind::Kaleidoscope, n).unwrap()
}

pub fn prime_field(p: usize) -> Multiring {
    build_example(ExampleKind::PrimeField, p).unwrap()
}

/// Square class indices of a prime field.
pub fn squares_of(f: &Multiring) -> Vec<usize> {
    let mut out: Vec<usize> = (0..f.size())
        .filter(|&a| a != f.zero())
        .map(|a| f.mul(a, a))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// F_7 modulo its squares: the three-class pre-special hyperfield.
pub fn f7_mod_squares() -> Multiring {
    let f7 = prime_field(7);
    marshall_quotient(&f7, &squares_of(&f7)).unwrap()
}

/// The hyperbolic product of two sign hyperfields.
pub fn q2xq2() -> Multiring {
    product_h(&q2(), &q2(), false).unwrap()
}

/// Every zoo structure, for classification runs.
pub fn zoo() -> Vec<Multiring> {
    let mut out = vec![q2(), krasner()];
    for p in [2, 3, 5, 7] {
        out.push(h(p));
    }
    for n in 1..=4 {
        out.push(kaleidoscope(n));
    }
    for p in [3, 5, 7, 11] {
        out.push(prime_field(p));
    }
    out
}

/// Hyperbolic hyperfields suitable for K-theory at modest truncations.
pub fn hyperbolic_pool() -> Vec<Multiring> {
    vec![
        q2(),
        krasner(),
        h(3),
        h(5),
        h(7),
        f7_mod_squares(),
        q2xq2(),
    ]
}

/// Pre-special hyperfields (sources for the adjunction).
pub fn pre_special_pool() -> Vec<Multiring> {
    vec![q2(), krasner(), h(3), f7_mod_squares(), q2xq2()]
}

pub fn z2_sg() -> PreSpecialGroup {
    z2_group()
}

pub fn trivial_sg() -> PreSpecialGroup {
    trivial_group()
}

/// The order-4 group of the product hyperfield; it carries two orderings.
pub fn product_sg() -> PreSpecialGroup {
    from_hyperfield(&q2xq2()).unwrap()
}

/// Special groups for the Witt-side suites.
pub fn special_group_pool() -> Vec<PreSpecialGroup> {
    vec![
        z2_sg(),
        trivial_sg(),
        from_hyperfield(&h(3)).unwrap(),
        from_hyperfield(&f7_mod_squares()).unwrap(),
        product_sg(),
    ]
}

/// Towers for the categorical construction suites.
pub fn igr_pool(truncation: usize) -> Vec<TruncatedIgr> {
    let kq2 = compute_k(&q2(), truncation, None).unwrap().igr().clone();
    let mut out = vec![
        kq2.clone(),
        compute_k(&krasner(), truncation, None).unwrap().igr().clone(),
        compute_k(&h(3), truncation, None).unwrap().igr().clone(),
        compute_k(&f7_mod_squares(), truncation, None)
            .unwrap()
            .igr()
            .clone(),
        compute_k(&q2xq2(), truncation, None).unwrap().igr().clone(),
        trivial_t(&F2Algebra::f2(), truncation),
        trivial_t(&F2Algebra::f2xf2(), truncation),
        trivial_t(&F2Algebra::dual_numbers(), truncation),
    ];
    out.push(igr_product(&[&kq2, &kq2]).unwrap().0);
    out
}

/// The subset of the tower pool inside the K-theoretic subcategory.
pub fn igr_plus_pool(truncation: usize) -> Vec<TruncatedIgr> {
    use crate::igr::hyperbolic_quotient_q;
    igr_pool(truncation)
        .into_iter()
        .filter(|r| {
            hyperbolic_quotient_q(r)
                .map(|q| q.in_igr_plus)
                .unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_members_are_distinctly_named() {
        let zoo = zoo();
        let mut names: Vec<&str> = zoo.iter().map(|m| m.name()).collect();
        names.sort_unstable();
        names.dedup();
        // Q2 = X1 and K = H2 coincide as tables but carry distinct names.
        assert_eq!(names.len(), zoo.len());
    }

    #[test]
    fn pool_groups_are_well_formed() {
        for g in special_group_pool() {
            assert!(g.size() <= 4);
        }
        assert_eq!(product_sg().size(), 4);
    }
}
