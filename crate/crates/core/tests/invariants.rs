//! Pool-driven structural invariants that cut across modules.

use aqf_core::gf2::{BitMatrix, BitVector};
use aqf_core::hyperfield::{find_isomorphism, hf_morphism_check, product_h};
use aqf_core::igr::{
    algebra_a, check_igr_morphism, coequalizer, factor_through_kernel, gamma,
    hyperbolic_quotient_q, igr_chain_colimit, igr_product, igr_tensor, ideal_ops, kernel_subspaces,
    level1_subring, spectral_report, trivial_t, IgrMorphism, TruncatedIgr,
};
use aqf_core::ktheory::{compute_k, k_induced_morphism, smc_check};
use aqf_core::pool;
use aqf_core::sgroup::{
    enumerate_orderings, from_hyperfield, reality_report, to_hyperfield, Form, FormEnv,
};
use aqf_core::witt::{Decision, WittContext};

#[test]
fn zero_is_additive_identity_on_every_zoo_member() {
    for m in pool::zoo() {
        if !m.check_multiring_axioms().multigroup_add.ok {
            continue;
        }
        for x in 0..m.size() {
            assert_eq!(m.sum_set(m.zero(), x), vec![x], "{}", m.name());
        }
    }
}

#[test]
fn negation_is_represented_in_one_minus_a_for_hyperbolic_members() {
    for m in pool::hyperbolic_pool() {
        for a in m.units() {
            assert!(
                m.one_minus(a) >> m.neg(a) & 1 == 1,
                "{}: -{} not in 1 - {}",
                m.name(),
                m.label(a),
                m.label(a)
            );
        }
    }
}

#[test]
fn product_projections_are_morphisms_on_pool_instances() {
    let pool_members = [pool::q2(), pool::krasner(), pool::h(3)];
    for f1 in &pool_members {
        for f2 in &pool_members {
            // verify_universal also checks the pairing property exhaustively.
            product_h(f1, f2, true).unwrap();
        }
    }
}

#[test]
fn extended_isometry_is_reflexive_and_symmetric_up_to_dim_4() {
    for g in pool::special_group_pool() {
        let env = FormEnv::new(&g);
        let n = g.size();
        for d in 1..=4usize {
            let count = n.pow(d as u32);
            for a in 0..count.min(64) {
                let phi: Vec<usize> = (0..d).map(|i| a / n.pow(i as u32) % n).collect();
                let f = Form::new(&g, phi.clone()).unwrap();
                assert!(env.isometric(&f, &f).unwrap(), "{} reflexivity", g.name());
                for b in 0..count.min(64) {
                    let psi: Vec<usize> = (0..d).map(|i| b / n.pow(i as u32) % n).collect();
                    let h = Form::new(&g, psi).unwrap();
                    assert_eq!(
                        env.isometric(&f, &h).unwrap(),
                        env.isometric(&h, &f).unwrap(),
                        "{} symmetry",
                        g.name()
                    );
                }
            }
        }
    }
}

#[test]
fn sg2_instances_hold_on_pool_groups() {
    for g in pool::special_group_pool() {
        for a in 0..g.size() {
            assert!(
                g.iso2(a, g.neg(a), g.one(), g.minus_one()),
                "{}: <a,-a> = <1,-1> fails at {}",
                g.name(),
                g.label(a)
            );
        }
    }
}

#[test]
fn hyperfield_group_correspondence_round_trips_on_the_pool() {
    for f in pool::pre_special_pool() {
        let g = from_hyperfield(&f).unwrap();
        let back = to_hyperfield(&g).unwrap();
        assert!(
            find_isomorphism(&f, &back).is_some(),
            "round trip fails for {}",
            f.name()
        );
    }
}

#[test]
fn formally_real_iff_orderings_nonempty() {
    for g in pool::special_group_pool() {
        let real = reality_report(&g).formally_real;
        let orderings = enumerate_orderings(&g);
        assert_eq!(real, !orderings.is_empty(), "{}", g.name());
    }
}

#[test]
fn packaged_k_towers_pass_the_igr_axioms() {
    for f in pool::hyperbolic_pool() {
        let kr = compute_k(&f, 3, None).unwrap();
        let rep = kr.igr().check_igr();
        assert!(rep.ok, "{}: {:?}", f.name(), rep.verdicts());
        // Basis symbols decode to unit vectors: the spanning set reconstructs
        // every component.
        for lvl in 0..=3 {
            for (i, t) in kr.basis_tuples(lvl).iter().enumerate() {
                assert_eq!(
                    kr.decode(t).unwrap(),
                    BitVector::unit(kr.dim(lvl), i)
                );
            }
        }
    }
}

#[test]
fn induced_morphisms_are_functorial_on_composable_pairs() {
    // F7 -> F7/squares -> Krasner.
    let f7 = pool::prime_field(7);
    let q = pool::f7_mod_squares();
    let k = pool::krasner();
    let squares = pool::squares_of(&f7);
    let first: Vec<usize> = (0..f7.size())
        .map(|a| {
            if a == f7.zero() {
                return q.zero();
            }
            (0..q.size())
                .find(|&c| {
                    c != q.zero() && {
                        let rep = f7.index_of(q.label(c)).unwrap();
                        squares.iter().any(|&s| f7.mul(a, s) == rep)
                    }
                })
                .unwrap()
        })
        .collect();
    let second: Vec<usize> = (0..q.size())
        .map(|c| if c == q.zero() { k.zero() } else { k.one() })
        .collect();
    assert!(hf_morphism_check(&first, &f7, &q, false).unwrap().is_morphism);
    assert!(hf_morphism_check(&second, &q, &k, false).unwrap().is_morphism);
    let composite: Vec<usize> = (0..f7.size()).map(|a| second[first[a]]).collect();

    let kf = compute_k(&f7, 3, None).unwrap();
    let kq = compute_k(&q, 3, None).unwrap();
    let kk = compute_k(&k, 3, None).unwrap();
    let m1 = k_induced_morphism(&first, &kf, &kq).unwrap();
    let m2 = k_induced_morphism(&second, &kq, &kk).unwrap();
    let mc = k_induced_morphism(&composite, &kf, &kk).unwrap();
    assert_eq!(m2.compose(&m1), mc);
}

#[test]
fn constructions_pass_axioms_and_produce_valid_morphisms() {
    let n = 3;
    let members = pool::igr_pool(n);
    for r in &members {
        assert!(r.check_igr().ok, "{} fails", r.name());
        let sub = level1_subring(r).unwrap();
        assert!(sub.subring.check_igr().ok);
        assert!(check_igr_morphism(&sub.inclusion, &sub.subring, r)
            .unwrap()
            .is_none());
        let q = hyperbolic_quotient_q(r).unwrap();
        assert!(q.quotient.check_igr().ok);
        assert!(check_igr_morphism(&q.projection, r, &q.quotient)
            .unwrap()
            .is_none());
        assert!(q.can_iso, "{}: Q1 and 1Q disagree", r.name());
        // The membership predicate agrees with the pointwise condition.
        let pointwise = {
            let d1 = r.dim(1);
            (0u32..1 << d1).all(|code| {
                let mut a = BitVector::zeros(d1);
                for i in 0..d1 {
                    if code >> i & 1 == 1 {
                        a.set(i, true);
                    }
                }
                r.star_apply(1, 1, &a, r.top(1)) == r.star_apply(1, 1, &a, &a)
            })
        };
        assert_eq!(q.in_igr_h, pointwise, "{}", r.name());
    }
    // Pairwise products and tensors.
    let a = &members[0];
    let b = &members[4];
    let (p, projs) = igr_product(&[a, b]).unwrap();
    assert!(p.check_igr().ok);
    assert!(check_igr_morphism(&projs[0], &p, a).unwrap().is_none());
    assert!(check_igr_morphism(&projs[1], &p, b).unwrap().is_none());
    let t = igr_tensor(&[a, b], n).unwrap();
    assert!(t.check_igr().ok);
    // Ideal quotient by the whole level 1 collapses everything above.
    let mut gens = vec![Vec::new(); n + 1];
    gens[1] = (0..a.dim(1)).map(|i| BitVector::unit(a.dim(1), i)).collect();
    let ops = ideal_ops(a, &gens).unwrap();
    assert!(ops.quotient.check_igr().ok);
    assert!(ops.projection.is_levelwise_surjective());
    for lvl in 1..=n {
        assert_eq!(ops.quotient.dim(lvl), 0);
    }
}

#[test]
fn chain_colimits_preserve_the_axioms_and_injectivity_clause() {
    let n = 3;
    let kq2 = compute_k(&pool::q2(), n, None).unwrap().igr().clone();
    let (p, projs) = igr_product(&[&kq2, &kq2]).unwrap();
    // Diagonal into the product.
    let diag = IgrMorphism {
        maps: (0..=n)
            .map(|lvl| {
                let mut m = BitMatrix::zeros(p.dim(lvl), kq2.dim(lvl));
                if lvl == 0 {
                    m.set(0, 0, true);
                } else {
                    for c in 0..kq2.dim(lvl) {
                        m.set(c, c, true);
                        m.set(kq2.dim(lvl) + c, c, true);
                    }
                }
                m
            })
            .collect(),
    };
    assert!(check_igr_morphism(&diag, &kq2, &p).unwrap().is_none());

    // Chains of towers whose positive-degree transitions are injective: the
    // colimit keeps that property.
    let chains: Vec<(Vec<TruncatedIgr>, Vec<IgrMorphism>)> = vec![
        (
            vec![kq2.clone(), kq2.clone()],
            vec![IgrMorphism::identity(&kq2)],
        ),
        (vec![kq2.clone(), p.clone()], vec![diag.clone()]),
        (
            vec![kq2.clone(), p.clone(), kq2.clone()],
            vec![diag, projs[0].clone()],
        ),
    ];
    for (chain, maps) in chains {
        for r in &chain {
            let spec = spectral_report(r).unwrap();
            assert!(spec.mc, "chain member {} must satisfy the clause", r.name());
        }
        let (colim, injs) = igr_chain_colimit(&chain, &maps).unwrap();
        assert!(colim.check_igr().ok);
        for (i, inj) in injs.iter().enumerate() {
            assert!(check_igr_morphism(inj, &chain[i], &colim).unwrap().is_none());
        }
        let spec = spectral_report(&colim).unwrap();
        assert!(spec.mc, "colimit loses the injectivity clause");
    }
}

#[test]
fn homomorphism_theorem_and_coequalizer_on_pool_morphisms() {
    let n = 3;
    let f7 = pool::prime_field(7);
    let q = pool::f7_mod_squares();
    let squares = pool::squares_of(&f7);
    let f_map: Vec<usize> = (0..f7.size())
        .map(|a| {
            if a == f7.zero() {
                return q.zero();
            }
            (0..q.size())
                .find(|&c| {
                    c != q.zero() && {
                        let rep = f7.index_of(q.label(c)).unwrap();
                        squares.iter().any(|&s| f7.mul(a, s) == rep)
                    }
                })
                .unwrap()
        })
        .collect();
    let kf = compute_k(&f7, n, None).unwrap();
    let kq = compute_k(&q, n, None).unwrap();
    let f = k_induced_morphism(&f_map, &kf, &kq).unwrap();
    let (quot, proj, mono) = factor_through_kernel(&f, kf.igr(), kq.igr()).unwrap();
    assert!(quot.check_igr().ok);
    assert!(proj.is_levelwise_surjective());
    assert!(mono.is_levelwise_injective());
    assert!(check_igr_morphism(&mono, &quot, kq.igr()).unwrap().is_none());
    // f factors: mono . proj = f.
    assert_eq!(mono.compose(&proj), f);
    // Kernel subspaces really are the kernels.
    for (lvl, ker) in kernel_subspaces(&f).iter().enumerate() {
        for v in ker {
            assert!(f.apply(lvl, v).is_zero());
        }
    }
    // Coequalizer of f with itself is an isomorphism onto the target.
    let ops = coequalizer(&f, &f, kf.igr(), kq.igr()).unwrap();
    assert!(ops.projection.is_levelwise_bijective());
    // Coequalizer of a projection pair collapses the difference.
    let kq2 = compute_k(&pool::q2(), n, None).unwrap().igr().clone();
    let (p, projs) = igr_product(&[&kq2, &kq2]).unwrap();
    let ops = coequalizer(&projs[0], &projs[1], &p, &kq2).unwrap();
    assert!(ops.quotient.check_igr().ok);
    assert!(check_igr_morphism(&ops.projection, &kq2, &ops.quotient)
        .unwrap()
        .is_none());
    // q . f = q . g.
    let qf = ops.projection.compose(&projs[0]);
    let qg = ops.projection.compose(&projs[1]);
    assert_eq!(qf, qg);
}

#[test]
fn logarithm_identities_on_igr_plus_pool() {
    // l(1) = 0, l(a)l(-a) = 0, l(a)l(a) = l(-1)l(a), commutativity and the
    // transition formula, instance-checked through the gamma element map.
    for r in pool::igr_plus_pool(3) {
        if r.truncation() < 2 {
            continue;
        }
        let g = gamma(&r).unwrap();
        let d1 = r.dim(1);
        let l = |elem: usize| -> BitVector {
            // Element 0 is zero; group element e has logarithm bits e-1.
            let mut v = BitVector::zeros(d1);
            for i in 0..d1 {
                if (elem - 1) >> i & 1 == 1 {
                    v.set(i, true);
                }
            }
            v
        };
        let one = g.one();
        assert!(l(one).is_zero(), "{}: l(1) != 0", r.name());
        let star = |x: &BitVector, y: &BitVector| r.star_apply(1, 1, x, y);
        for a in g.units() {
            let la = l(a);
            let lna = l(g.neg(a));
            assert!(star(&la, &lna).is_zero(), "{}: l(a)l(-a) != 0", r.name());
            let lm1 = l(g.neg(one));
            assert_eq!(star(&la, &la), star(&lm1, &la), "{}: squares", r.name());
            for b in g.units() {
                assert_eq!(star(&la, &l(b)), star(&l(b), &la), "{}: commute", r.name());
            }
            // h_1(l(a)) = l(-1) l(a).
            assert_eq!(
                r.h(1).mul_vec(&la),
                star(&lm1, &la),
                "{}: transition formula",
                r.name()
            );
        }
    }
}

#[test]
fn squares_match_top_multiples_on_igr_plus_pool() {
    for r in pool::igr_plus_pool(4) {
        let n = r.truncation();
        for lvl in 1..=n {
            if 2 * lvl > n {
                continue;
            }
            let d = r.dim(lvl);
            if d > 10 {
                continue;
            }
            for code in 0u32..1 << d {
                let mut x = BitVector::zeros(d);
                for i in 0..d {
                    if code >> i & 1 == 1 {
                        x.set(i, true);
                    }
                }
                assert_eq!(
                    r.star_apply(lvl, lvl, &x, &x),
                    r.star_apply(lvl, lvl, r.top(lvl), &x),
                    "{} level {lvl}",
                    r.name()
                );
            }
        }
    }
}

#[test]
fn injectivity_clause_matches_canonical_map_into_the_constant_tower() {
    for r in pool::igr_plus_pool(4) {
        let Ok(alg) = algebra_a(&r) else { continue };
        let n = r.truncation();
        let t = trivial_t(&alg.algebra, n);
        // Canonical map: identity at level 0, the composite transition into
        // the stable level elsewhere.
        let canonical = IgrMorphism {
            maps: (0..=n)
                .map(|lvl| {
                    if lvl == 0 {
                        BitMatrix::identity(1)
                    } else {
                        r.h_composite(lvl, n)
                    }
                })
                .collect(),
        };
        assert!(check_igr_morphism(&canonical, &r, &t).unwrap().is_none());
        let spec = spectral_report(&r).unwrap();
        let injective = (1..=n).all(|lvl| canonical.maps[lvl].is_injective());
        assert_eq!(spec.mc, injective, "{}", r.name());
    }
}

#[test]
fn k_stable_hull_iteration_reaches_a_k_stable_fixpoint() {
    for f in pool::pre_special_pool() {
        let mut current = f.clone();
        let mut steps = 0;
        loop {
            let kr = compute_k(&current, 2, None).unwrap();
            let next = gamma(kr.igr()).unwrap();
            let fixed = find_isomorphism(&current, &next).is_some();
            current = next;
            steps += 1;
            if fixed {
                break;
            }
            assert!(steps < 4, "{}: no fixpoint within the cap", f.name());
        }
        // The fixpoint is k-stable: its unit is a strong morphism.
        let kr = compute_k(&current, 2, None).unwrap();
        let gk = gamma(kr.igr()).unwrap();
        let phi: Vec<usize> = (0..current.size())
            .map(|a| {
                if a == current.zero() {
                    0
                } else {
                    let v = kr.decode(&[a]).unwrap();
                    v.iter_ones().fold(0usize, |acc, i| acc | 1 << i) + 1
                }
            })
            .collect();
        let rep = hf_morphism_check(&phi, &current, &gk, true).unwrap();
        assert!(rep.is_morphism, "{}", f.name());
        assert_eq!(rep.strong, Some(true), "{}: fixpoint not k-stable", f.name());
    }
}

#[test]
fn fundamental_ideal_filtration_laws_on_decided_queries() {
    for g in pool::special_group_pool() {
        let ctx = WittContext::new(&g, 4).unwrap();
        let minus_one = g.minus_one();
        // <1,1> tensor I^n lands in I^{n+1}, generator-wise.
        for n in 1..=2usize {
            for code in 0..g.size().pow(n as u32) {
                let tuple: Vec<usize> =
                    (0..n).map(|i| code / g.size().pow(i as u32) % g.size()).collect();
                let p = ctx.pfister(&tuple);
                assert_eq!(ctx.in_fundamental_power(&p, n), Decision::Yes);
                let doubled = ctx.mul(&ctx.pfister(&[minus_one]), &p);
                assert_eq!(
                    ctx.in_fundamental_power(&doubled, n + 1),
                    Decision::Yes,
                    "{}: <1,1> x I^{n} escapes",
                    g.name()
                );
                // Downward closure on decided queries.
                assert_eq!(ctx.in_fundamental_power(&doubled, n), Decision::Yes);
            }
        }
    }
}
