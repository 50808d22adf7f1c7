//! The graded Witt ring, materialized through the symbol map: level n is
//! the K-theory level modulo the kernel decided by fundamental-ideal
//! membership at level n+1, so the symbol map is surjective by construction
//! and its kernel is the only thing the Witt side has to decide.

use super::{Decision, WittClass, WittContext};
use crate::gf2::{BitMatrix, BitVector};
use crate::igr::{quotient_by_subspaces, IgrMorphism, TruncatedIgr};
use crate::ktheory::{compute_k, KTheoryRing};
use crate::sgroup::{to_hyperfield, PreSpecialGroup};
use crate::{Error, Result};

/// The graded Witt ring of a special group together with the symbol-map
/// data used to build it.
#[derive(Debug, Clone)]
pub struct GradedWitt {
    pub igr: TruncatedIgr,
    /// K-theory of the associated hyperfield.
    pub k: KTheoryRing,
    /// The levelwise symbol map (a surjection by construction).
    pub s: IgrMorphism,
    /// Per level: basis of the symbol-map kernel in K-theory coordinates.
    pub s_kernels: Vec<Vec<BitVector>>,
    /// Per level: the Witt classes of the K-theory basis symbols.
    pub basis_classes: Vec<Vec<WittClass>>,
}

impl GradedWitt {
    pub fn dims(&self) -> Vec<usize> {
        self.igr.dims().to_vec()
    }
}

/// The Witt class of the Pfister form attached to one K-theory basis tuple.
fn symbol_class(
    ctx: &WittContext,
    g: &PreSpecialGroup,
    m_labels: &KTheoryRing,
    tuple: &[usize],
) -> WittClass {
    if tuple.is_empty() {
        return ctx.one();
    }
    let gens: Vec<usize> = tuple
        .iter()
        .map(|&e| {
            g.index_of(m_labels.base().label(e))
                .expect("hyperfield units carry group labels")
        })
        .collect();
    ctx.pfister(&gens)
}

/// Builds the graded Witt ring at the given truncation. Every membership
/// query must be decided at the context's bound; an unknown aborts with the
/// query echoed.
pub fn graded_witt(ctx: &WittContext, truncation: usize, cap: Option<usize>) -> Result<GradedWitt> {
    let g = ctx.group();
    let m = to_hyperfield(g)?;
    let k = compute_k(&m, truncation, cap)?;
    let mut kernels: Vec<Vec<BitVector>> = Vec::new();
    let mut basis_classes: Vec<Vec<WittClass>> = Vec::new();
    for lvl in 0..=truncation {
        let d = k.dim(lvl);
        let classes: Vec<WittClass> = k
            .basis_tuples(lvl)
            .iter()
            .map(|t| symbol_class(ctx, g, &k, t))
            .collect();
        if d > 16 {
            return Err(Error::CapExceeded {
                needed: 1 << d,
                cap: 1 << 16,
            });
        }
        let mut kernel_combos: Vec<u32> = Vec::new();
        for combo in 1u32..1 << d {
            let mut acc = WittClass::zero();
            for (i, c) in classes.iter().enumerate() {
                if combo >> i & 1 == 1 {
                    acc = ctx.add(&acc, c);
                }
            }
            match ctx.in_fundamental_power(&acc, lvl + 1) {
                Decision::Yes => kernel_combos.push(combo),
                Decision::No => {}
                Decision::Unknown { bound } => {
                    return Err(Error::Undecided {
                        query: format!(
                            "level {lvl} combination {combo:#b} in I^{}",
                            lvl + 1
                        ),
                        bound,
                    })
                }
            }
        }
        // The decided kernel must be closed under addition.
        for &a in &kernel_combos {
            for &b in &kernel_combos {
                let c = a ^ b;
                if c != 0 && !kernel_combos.contains(&c) {
                    return Err(Error::InvalidStructure(
                        "membership decisions are not additively closed".into(),
                    ));
                }
            }
        }
        kernels.push(
            kernel_combos
                .iter()
                .map(|&combo| {
                    let mut v = BitVector::zeros(d);
                    for i in 0..d {
                        if combo >> i & 1 == 1 {
                            v.set(i, true);
                        }
                    }
                    v
                })
                .collect(),
        );
        basis_classes.push(classes);
    }
    let (igr, s) = quotient_by_subspaces(k.igr(), &kernels)?;
    let igr = igr.with_name(format!("GradW({})", g.name()));
    Ok(GradedWitt {
        igr,
        k,
        s,
        s_kernels: kernels,
        basis_classes,
    })
}

/// The s and r natural transformations between K-theory and the graded Witt
/// ring, with the composite and low-level isomorphism checks.
#[derive(Debug, Clone)]
pub struct SrReport {
    pub graded: GradedWitt,
    /// s_n is surjective for every level (true by construction, verified by
    /// rank).
    pub s_surjective: bool,
    /// s_1 and s_2 are bijective.
    pub iso12_ok: bool,
    /// Levels where r_n is defined within the truncation (2^(n-1) <= N).
    pub r_levels: Vec<usize>,
    /// r_n kills the kernel of s_n at each defined level.
    pub r_well_defined: Vec<(usize, bool)>,
    /// r_n . s_n equals multiplication by rho(-1)^(2^(n-1) - n).
    pub composite_ok: Vec<(usize, bool)>,
}

pub fn s_r_transformations(
    ctx: &WittContext,
    truncation: usize,
    cap: Option<usize>,
) -> Result<SrReport> {
    let graded = graded_witt(ctx, truncation, cap)?;
    let k = &graded.k;
    let minus_one = k.base().neg(k.base().one());
    let s_surjective = graded
        .s
        .maps
        .iter()
        .all(|m| m.is_surjective());
    let iso12_ok = truncation >= 2
        && graded.s.maps[1].is_bijective()
        && graded.s.maps[2].is_bijective();

    let mut r_levels = Vec::new();
    let mut r_well_defined = Vec::new();
    let mut composite_ok = Vec::new();
    for n in 1..=truncation {
        let target = 1usize << (n - 1);
        if target > truncation {
            continue;
        }
        r_levels.push(n);
        let exponent = target - n;
        // r on K-theory coordinates: a basis symbol goes to rho(-1)^e times
        // itself in degree 2^(n-1).
        let mut r_on_k = BitMatrix::zeros(k.dim(target), k.dim(n));
        for (c, t) in k.basis_tuples(n).iter().enumerate() {
            let mut tuple = vec![minus_one; exponent];
            tuple.extend_from_slice(t);
            let col = k.decode(&tuple)?;
            for i in col.iter_ones() {
                r_on_k.set(i, c, true);
            }
        }
        // Well-defined on the graded piece iff the kernel of s_n dies.
        let wd = graded.s_kernels[n]
            .iter()
            .all(|v| r_on_k.mul_vec(v).is_zero());
        r_well_defined.push((n, wd));
        if !wd {
            composite_ok.push((n, false));
            continue;
        }
        // The composite r_n . s_n against direct multiplication by
        // rho(-1)^e, as matrices on the K-theory level.
        let r_on_graded = {
            // Columns on quotient basis lifts.
            let mut m = BitMatrix::zeros(k.dim(target), graded.igr.dim(n));
            for c in 0..graded.igr.dim(n) {
                let mut lift = None;
                for i in 0..k.dim(n) {
                    let e = BitVector::unit(k.dim(n), i);
                    if graded.s.apply(n, &e) == BitVector::unit(graded.igr.dim(n), c) {
                        lift = Some(e);
                        break;
                    }
                }
                let lift = lift.expect("surjective projections lift unit vectors");
                let col = r_on_k.mul_vec(&lift);
                for i in col.iter_ones() {
                    m.set(i, c, true);
                }
            }
            m
        };
        let composite = r_on_graded.mul_mat(&graded.s.maps[n]);
        composite_ok.push((n, composite == r_on_k));
    }
    Ok(SrReport {
        graded,
        s_surjective,
        iso12_ok,
        r_levels,
        r_well_defined,
        composite_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgroup::{trivial_group, z2_group};

    #[test]
    fn graded_witt_of_z2_is_one_dimensional_at_every_level() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let gw = graded_witt(&ctx, 3, None).unwrap();
        assert_eq!(gw.dims(), vec![1, 1, 1, 1]);
        assert!(gw.igr.check_igr().ok);
        // t_n(top_n) = top_{n+1} is the transition square of the quotient.
        for lvl in 0..3 {
            assert_eq!(
                gw.igr.h(lvl).mul_vec(gw.igr.top(lvl)),
                *gw.igr.top(lvl + 1)
            );
        }
    }

    #[test]
    fn graded_witt_of_the_trivial_group_vanishes_in_positive_degrees() {
        // W = Z/2 with I = 0: levels [1, 0, 0, ..] decided by the oracle.
        let g = trivial_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let gw = graded_witt(&ctx, 3, None).unwrap();
        assert_eq!(gw.dims(), vec![1, 0, 0, 0]);
        assert!(gw.igr.check_igr().ok);
    }

    #[test]
    fn s_r_over_z2() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let rep = s_r_transformations(&ctx, 3, None).unwrap();
        assert!(rep.s_surjective);
        assert!(rep.iso12_ok);
        // r is defined at n = 1 (target k_1) and n = 2 (target k_2).
        assert_eq!(rep.r_levels, vec![1, 2]);
        assert!(rep.r_well_defined.iter().all(|&(_, ok)| ok));
        assert!(rep.composite_ok.iter().all(|&(_, ok)| ok));
    }
}
