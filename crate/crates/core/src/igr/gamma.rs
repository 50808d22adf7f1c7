//! The hyperfield extracted from levels 1 and 2 of a K-theoretic tower, and
//! the adjunction between reduced K-theory and that extraction.

use super::functors::{hyperbolic_quotient_q, products_matrix};
use super::{check_igr_morphism, IgrMorphism, TruncatedIgr};
use crate::gf2::{BitMatrix, BitVector};
use crate::hyperfield::{hf_morphism_check, Multiring};
use crate::ktheory::{compute_k, KTheoryRing};
use crate::{Error, Result, MAX_CARRIER};

fn vector_of_code(dim: usize, code: usize) -> BitVector {
    let mut v = BitVector::zeros(dim);
    for i in 0..dim {
        if code >> i & 1 == 1 {
            v.set(i, true);
        }
    }
    v
}

fn code_of_vector(v: &BitVector) -> usize {
    v.iter_ones().fold(0usize, |acc, i| acc | 1 << i)
}

/// The multiplicatively written level-1 group plus zero, with the sum rule
/// decided in level 2: `c in a + b` iff `l(a)l(b) = l(c)l(abc)`.
///
/// Requires truncation >= 2 and membership in the K-theoretic subcategory.
pub fn gamma(r: &TruncatedIgr) -> Result<Multiring> {
    if r.truncation() < 2 {
        return Err(Error::BadParam(
            "gamma needs at least two positive levels".into(),
        ));
    }
    let q = hyperbolic_quotient_q(r)?;
    if !q.in_igr_plus {
        return Err(Error::NotIgrPlus);
    }
    let d1 = r.dim(1);
    let group_size = 1usize << d1;
    if group_size + 1 > MAX_CARRIER {
        return Err(Error::CarrierTooLarge(group_size + 1));
    }
    let top_code = code_of_vector(r.top(1));
    let mut elements = vec!["0".to_string()];
    for code in 0..group_size {
        elements.push(if code == 0 {
            "1".to_string()
        } else if code == top_code {
            "-1".to_string()
        } else {
            format!("g{code}")
        });
    }
    let n = group_size + 1;
    let mut neg = vec![0usize];
    neg.extend((0..group_size).map(|code| (code ^ top_code) + 1));
    let mut mul = vec![0usize; n * n];
    let mut sum = vec![0u64; n * n];
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let l = |idx: usize| vector_of_code(d1, idx - 1);
    for i in 0..n {
        for j in 0..n {
            mul[i * n + j] = if i == 0 || j == 0 {
                0
            } else {
                ((i - 1) ^ (j - 1)) + 1
            };
            sum[i * n + j] = if i == 0 {
                1 << j
            } else if j == 0 {
                1 << i
            } else if (i - 1) ^ (j - 1) == top_code {
                full
            } else {
                let lab = r.star_apply(1, 1, &l(i), &l(j));
                let mut mask = 0u64;
                for c in 1..n {
                    let d_code = (i - 1) ^ (j - 1) ^ (c - 1);
                    if r.star_apply(1, 1, &l(c), &vector_of_code(d1, d_code)) == lab {
                        mask |= 1 << c;
                    }
                }
                mask
            };
        }
    }
    Multiring::new(format!("Gamma({})", r.name()), elements, 0, 1, neg, mul, sum)
}

/// All igr morphisms from a level-1 generated tower into another tower,
/// enumerated through their level-1 matrices in ascending code order.
pub fn enumerate_igr_morphisms(
    source: &TruncatedIgr,
    target: &TruncatedIgr,
) -> Result<Vec<IgrMorphism>> {
    let n = source.truncation();
    if target.truncation() != n {
        return Err(Error::TruncationMismatch {
            expected: n,
            got: target.truncation(),
        });
    }
    let ds = source.dim(1);
    let dt = target.dim(1);
    if ds * dt > 16 {
        return Err(Error::CapExceeded {
            needed: 1usize << (ds * dt),
            cap: 1 << 16,
        });
    }
    let source_products: Vec<(BitMatrix, Vec<Vec<usize>>)> =
        (0..=n).map(|lvl| products_matrix(source, lvl)).collect();
    // Spanning is required for the extension to be determined by level 1.
    for lvl in 2..=n {
        if source_products[lvl].0.rank() != source.dim(lvl) {
            return Err(Error::NotLevelOneGenerated);
        }
    }
    let mut out = Vec::new();
    'candidate: for code in 0u64..1 << (ds * dt) {
        let mut m1 = BitMatrix::zeros(dt, ds);
        for r in 0..dt {
            for c in 0..ds {
                if code >> (r * ds + c) & 1 == 1 {
                    m1.set(r, c, true);
                }
            }
        }
        if m1.mul_vec(source.top(1)) != *target.top(1) {
            continue;
        }
        let mut maps = vec![BitMatrix::identity(1), m1.clone()];
        for lvl in 2..=n {
            let (p, tuples) = &source_products[lvl];
            // Image of each product column under the candidate.
            let mut q = BitMatrix::zeros(target.dim(lvl), tuples.len());
            for (c, t) in tuples.iter().enumerate() {
                let mut prod = m1.mul_vec(&BitVector::unit(ds, t[0]));
                for (pos, &b) in t.iter().enumerate().skip(1) {
                    prod = target.star_apply(pos, 1, &prod, &m1.mul_vec(&BitVector::unit(ds, b)));
                }
                for i in prod.iter_ones() {
                    q.set(i, c, true);
                }
            }
            // Solve f_lvl * P = Q row by row of the target.
            let pt = p.transpose();
            let mut f = BitMatrix::zeros(target.dim(lvl), source.dim(lvl));
            for r in 0..target.dim(lvl) {
                let mut rhs = BitVector::zeros(tuples.len());
                for c in 0..tuples.len() {
                    if q.get(r, c) {
                        rhs.set(c, true);
                    }
                }
                match pt.solve(&rhs) {
                    Some(sol) => {
                        for i in sol.iter_ones() {
                            f.set(r, i, true);
                        }
                    }
                    None => continue 'candidate,
                }
            }
            maps.push(f);
        }
        let candidate = IgrMorphism { maps };
        if check_igr_morphism(&candidate, source, target)?.is_none() {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Everything the adjunction produces for one morphism `f : F -> Gamma(R)`.
#[derive(Debug, Clone)]
pub struct AdjunctionReport {
    /// The K-theory of the source.
    pub k_of_f: KTheoryRing,
    /// The extraction of that K-theory.
    pub gamma_k: Multiring,
    /// The unit `phi_F: F -> Gamma(k(F))` as an element map.
    pub phi: Vec<usize>,
    pub phi_group_iso: bool,
    pub phi_is_morphism: bool,
    /// The unit passes the strong (reflecting) morphism check.
    pub k_stable: bool,
    /// The transpose `f#: k(F) -> R` of `f`.
    pub f_sharp: IgrMorphism,
    pub f_sharp_valid: bool,
    /// `Gamma(f#) . phi_F = f`.
    pub triangle_ok: bool,
    /// `f#` is the only morphism with that triangle.
    pub unique_ok: bool,
}

/// Builds the unit of the adjunction at `F`, the transpose of `f : F ->
/// Gamma(R)` on symbol generators, and verifies the triangle identity and
/// its uniqueness by exhausting all candidate morphisms.
pub fn adjunction_ops(
    f_base: &Multiring,
    r: &TruncatedIgr,
    f: &[usize],
    cap: Option<usize>,
) -> Result<AdjunctionReport> {
    let quad = f_base
        .check_quadratic_axioms()
        .map_err(|_| Error::NotPreSpecial(f_base.name().to_string()))?;
    if !quad.pre_special {
        return Err(Error::NotPreSpecial(f_base.name().to_string()));
    }
    let gamma_r = gamma(r)?;
    let rep = hf_morphism_check(f, f_base, &gamma_r, false)?;
    if !rep.is_morphism {
        return Err(Error::NotMorphism(format!(
            "f is not a morphism into Gamma({}): {}",
            r.name(),
            rep.witness.unwrap()
        )));
    }
    let kf = compute_k(f_base, r.truncation(), cap)?;
    let gamma_k = gamma(kf.igr())?;

    // The unit: a unit a of F goes to the group element with logarithm
    // rho(a); zero goes to zero.
    let phi: Vec<usize> = (0..f_base.size())
        .map(|a| {
            if a == f_base.zero() {
                0
            } else {
                code_of_vector(&kf.decode(&[a]).expect("units decode")) + 1
            }
        })
        .collect();
    let units: Vec<usize> = f_base.units();
    let phi_injective = {
        let mut seen = std::collections::BTreeSet::new();
        units.iter().all(|&a| seen.insert(phi[a]))
    };
    let phi_group_iso = phi_injective && units.len() == 1 << kf.dim(1);
    let phi_rep = hf_morphism_check(&phi, f_base, &gamma_k, true)?;
    let phi_is_morphism = phi_rep.is_morphism;
    let k_stable = phi_rep.strong.unwrap_or(false);

    // f# on symbol generators: a basis tuple [a_1, .., a_n] of k_n(F) goes
    // to l(f(a_1)) * ... * l(f(a_n)) in R_n.
    let l_of = |g_elem: usize| -> BitVector {
        assert!(g_elem > 0, "zero has no logarithm");
        vector_of_code(r.dim(1), g_elem - 1)
    };
    let n = r.truncation();
    let mut maps = vec![BitMatrix::identity(1)];
    for lvl in 1..=n {
        let mut m = BitMatrix::zeros(r.dim(lvl), kf.dim(lvl));
        for (c, t) in kf.basis_tuples(lvl).iter().enumerate() {
            let mut prod = l_of(f[t[0]]);
            for (pos, &e) in t.iter().enumerate().skip(1) {
                prod = r.star_apply(pos, 1, &prod, &l_of(f[e]));
            }
            for i in prod.iter_ones() {
                m.set(i, c, true);
            }
        }
        maps.push(m);
    }
    let f_sharp = IgrMorphism { maps };
    let f_sharp_valid = check_igr_morphism(&f_sharp, kf.igr(), r)?.is_none();

    let triangle = |g: &IgrMorphism| -> bool {
        (0..f_base.size()).all(|a| {
            if a == f_base.zero() {
                return f[a] == 0;
            }
            let image = g.apply(1, &kf.decode(&[a]).expect("units decode"));
            code_of_vector(&image) + 1 == f[a]
        })
    };
    let triangle_ok = triangle(&f_sharp);
    let candidates = enumerate_igr_morphisms(kf.igr(), r)?;
    let commuting: Vec<&IgrMorphism> = candidates.iter().filter(|g| triangle(g)).collect();
    let unique_ok = commuting.len() == 1 && *commuting[0] == f_sharp;

    Ok(AdjunctionReport {
        k_of_f: kf,
        gamma_k,
        phi,
        phi_group_iso,
        phi_is_morphism,
        k_stable,
        f_sharp,
        f_sharp_valid,
        triangle_ok,
        unique_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::{build_example, find_isomorphism, ExampleKind};

    #[test]
    fn gamma_of_k_q2_is_q2() {
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        let kr = compute_k(&q2, 3, None).unwrap();
        let g = gamma(kr.igr()).unwrap();
        assert_eq!(g.size(), 3);
        // 1 + 1 excludes -1 because rho(-1)^2 is nonzero.
        let one = g.one();
        let m1 = g.index_of("-1").unwrap();
        assert!(!g.sum_contains(one, one, m1));
        assert!(find_isomorphism(&g, &q2).is_some());
        let quad = g.check_quadratic_axioms().unwrap();
        assert!(quad.pre_special);
    }

    #[test]
    fn gamma_of_k_krasner_is_krasner() {
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        let kr = compute_k(&k, 2, None).unwrap();
        let g = gamma(kr.igr()).unwrap();
        assert!(find_isomorphism(&g, &k).is_some());
    }

    #[test]
    fn gamma_of_boolean_tower_is_pre_special() {
        let t = super::super::functors::trivial_t(
            &super::super::functors::F2Algebra::f2xf2(),
            3,
        );
        let g = gamma(&t).unwrap();
        assert_eq!(g.size(), 5);
        assert!(g.check_quadratic_axioms().unwrap().pre_special);
    }

    #[test]
    fn gamma_requires_igr_plus() {
        let t = super::super::functors::trivial_t(
            &super::super::functors::F2Algebra::dual_numbers(),
            3,
        );
        assert!(matches!(gamma(&t), Err(Error::NotIgrPlus)));
    }

    #[test]
    fn adjunction_unit_triangle_for_q2() {
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        let kr = compute_k(&q2, 3, None).unwrap();
        let r = kr.igr().clone();
        // f = phi_F itself.
        let gamma_k = gamma(&r).unwrap();
        let f: Vec<usize> = (0..q2.size())
            .map(|a| {
                if a == q2.zero() {
                    0
                } else {
                    code_of_vector(&kr.decode(&[a]).unwrap()) + 1
                }
            })
            .collect();
        let rep = adjunction_ops(&q2, &r, &f, None).unwrap();
        assert!(rep.phi_group_iso && rep.phi_is_morphism);
        assert!(rep.k_stable, "Q2 is k-stable");
        assert!(rep.f_sharp_valid && rep.triangle_ok && rep.unique_ok);
        // f# is the identity here.
        assert_eq!(rep.f_sharp, IgrMorphism::identity(&r));
        assert_eq!(gamma_k.size(), 3);
    }
}
