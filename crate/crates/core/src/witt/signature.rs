//! The signature side: integer-valued functions on the ordering space, the
//! filtration by divisibility, its graded tower and the comparison
//! isomorphisms theta_n.

use super::{nondecreasing_tuples, Decision, WittClass, WittContext};
use crate::gf2::{BilinearTable, BitMatrix, BitVector};
use crate::igr::TruncatedIgr;
use crate::verdict::{Verdict, Witness};
use crate::Result;
use std::collections::BTreeMap;

/// A commutative ring with a descending filtration and a per-query
/// membership oracle. `J_0` is everything; queries may come back undecided
/// when the oracle is search-bounded.
pub trait FilteredRing {
    type Elem: Clone + Eq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn in_level(&self, x: &Self::Elem, n: usize) -> Decision;
}

impl<'g> FilteredRing for WittContext<'g> {
    type Elem = WittClass;

    fn zero(&self) -> WittClass {
        WittClass::zero()
    }

    fn one(&self) -> WittClass {
        WittContext::one(self)
    }

    fn add(&self, x: &WittClass, y: &WittClass) -> WittClass {
        WittContext::add(self, x, y)
    }

    fn mul(&self, x: &WittClass, y: &WittClass) -> WittClass {
        WittContext::mul(self, x, y)
    }

    fn in_level(&self, x: &WittClass, n: usize) -> Decision {
        self.in_fundamental_power(x, n)
    }
}

/// Integer-valued functions of constant parity on a finite ordering space,
/// filtered by divisibility: `J_n` is the functions into `2^n Z`.
#[derive(Debug, Clone)]
pub struct ParityFunctions {
    pub points: usize,
}

impl ParityFunctions {
    /// Constant-parity check; the ring is the subring where it holds.
    pub fn constant_parity(&self, f: &[i64]) -> bool {
        self.points == 0 || f.iter().all(|v| v.rem_euclid(2) == f[0].rem_euclid(2))
    }
}

impl FilteredRing for ParityFunctions {
    type Elem = Vec<i64>;

    fn zero(&self) -> Vec<i64> {
        vec![0; self.points]
    }

    fn one(&self) -> Vec<i64> {
        vec![1; self.points]
    }

    fn add(&self, x: &Vec<i64>, y: &Vec<i64>) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn mul(&self, x: &Vec<i64>, y: &Vec<i64>) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a * b).collect()
    }

    fn in_level(&self, x: &Vec<i64>, n: usize) -> Decision {
        if n == 0 {
            return Decision::Yes;
        }
        let modulus = 1i64 << n.min(62);
        if x.iter().all(|v| v % modulus == 0) {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

/// The class of `h` in `J_n/J_{n+1}`, read off as `h(sigma)/2^n mod 2`;
/// None when `h` is not in `J_n`.
pub fn theta(h: &[i64], n: usize) -> Option<Vec<bool>> {
    let modulus = 1i64 << n;
    if h.iter().any(|v| v % modulus != 0) {
        return None;
    }
    Some(h.iter().map(|v| (v / modulus).rem_euclid(2) == 1).collect())
}

/// Signature data of a special group.
#[derive(Debug, Clone)]
pub struct SignatureReport {
    pub orderings: Vec<Vec<bool>>,
    /// The filtered ring of constant-parity functions.
    pub c_filtered: ParityFunctions,
    /// The graded tower of that filtration: every positive level is the
    /// space of two-valued functions on the orderings.
    pub grad_c: TruncatedIgr,
    /// theta_n is bijective and commutes with the transitions.
    pub theta_ok: bool,
    /// sgn is additive and multiplicative on bounded samples.
    pub sgn_hom: Verdict,
    /// Signatures have the parity of the dimension.
    pub parity: Verdict,
    /// Hyperbolic planes have zero signature everywhere.
    pub hyperbolic_zero: Verdict,
}

/// Builds the signature ring data and verifies the comparison maps, with
/// ring-law checks on all forms of dimension at most `sample_dim`.
pub fn signature_ring(
    ctx: &WittContext,
    truncation: usize,
    sample_dim: usize,
) -> Result<SignatureReport> {
    let g = ctx.group();
    let orderings: Vec<Vec<bool>> = ctx.orderings().to_vec();
    let x = orderings.len();
    let c_filtered = ParityFunctions { points: x };

    // Tower: level 0 the scalar line, level n >= 1 the functions into F_2
    // with pointwise product, identity transitions and top = all ones.
    let mut dims = vec![1usize];
    let mut tops = vec![BitVector::ones(1)];
    for _ in 1..=truncation {
        dims.push(x);
        tops.push(BitVector::ones(x));
    }
    let mut h = Vec::new();
    for lvl in 0..truncation {
        if lvl == 0 {
            let mut m = BitMatrix::zeros(x, 1);
            for i in 0..x {
                m.set(i, 0, true);
            }
            h.push(m);
        } else {
            h.push(BitMatrix::identity(x));
        }
    }
    let mut star = BTreeMap::new();
    for a in 1..truncation {
        for b in 1..truncation {
            if a + b <= truncation {
                star.insert(
                    (a, b),
                    BilinearTable::from_fn(x, x, x, |i, j| {
                        if i == j {
                            BitVector::unit(x, i)
                        } else {
                            BitVector::zeros(x)
                        }
                    }),
                );
            }
        }
    }
    let grad_c = TruncatedIgr::new(format!("GradC({})", g.name()), dims, tops, h, star)?;

    // theta on representatives: the basis of J_n/J_{n+1} is 2^n times the
    // indicator functions. Check values, bijectivity and the triangles.
    let mut theta_ok = true;
    for n in 1..=truncation.min(20) {
        let scale = 1i64 << n;
        for i in 0..x {
            let mut rep = vec![0i64; x];
            rep[i] = scale;
            match theta(&rep, n) {
                Some(bits) => {
                    if bits != (0..x).map(|j| j == i).collect::<Vec<bool>>() {
                        theta_ok = false;
                    }
                }
                None => theta_ok = false,
            }
            // Triangle: multiplying by 2^(m-n) lands on the same class.
            for m in n + 1..=truncation.min(20) {
                let lifted: Vec<i64> = rep.iter().map(|v| v << (m - n)).collect();
                if theta(&lifted, m) != theta(&rep, n) {
                    theta_ok = false;
                }
            }
        }
        // Additivity of theta on a sum of two basis representatives.
        if x >= 2 {
            let mut rep = vec![0i64; x];
            rep[0] = scale;
            rep[1] = scale;
            if theta(&rep, n).map(|b| b.iter().filter(|&&v| v).count()) != Some(2) {
                theta_ok = false;
            }
        }
    }

    // Signature is a ring homomorphism into constant-parity functions.
    let size = g.size();
    let forms: Vec<Vec<usize>> = (1..=sample_dim)
        .flat_map(|d| nondecreasing_tuples(d, size))
        .collect();
    let mut sgn_hom = Verdict::pass();
    let mut parity = Verdict::pass();
    let w = |axiom: &str, form: &[usize]| {
        Witness::new(
            axiom,
            form.iter().map(|&e| g.label(e).to_string()).collect(),
        )
    };
    'hom: for phi in &forms {
        let cphi = ctx.reduce(phi);
        let sphi = ctx.signatures(&cphi);
        if !c_filtered.constant_parity(&sphi)
            || sphi.iter().any(|v| (v.rem_euclid(2) != 0) != (cphi.dim2() == 1))
        {
            parity = Verdict::fail(w("sgn_parity", phi));
            break;
        }
        for psi in &forms {
            if phi.len() + psi.len() > sample_dim {
                continue;
            }
            let cpsi = ctx.reduce(psi);
            let spsi = ctx.signatures(&cpsi);
            let sum = ctx.add(&cphi, &cpsi);
            let prod = ctx.mul(&cphi, &cpsi);
            let want_sum: Vec<i64> = sphi.iter().zip(&spsi).map(|(a, b)| a + b).collect();
            let want_prod: Vec<i64> = sphi.iter().zip(&spsi).map(|(a, b)| a * b).collect();
            if ctx.signatures(&sum) != want_sum || ctx.signatures(&prod) != want_prod {
                sgn_hom = Verdict::fail(w("sgn_hom", phi));
                break 'hom;
            }
        }
    }

    let mut hyperbolic_zero = Verdict::pass();
    for a in 0..size {
        let cls = ctx.reduce(&[a, g.neg(a)]);
        if !cls.is_zero() || ctx.signatures(&cls).iter().any(|&v| v != 0) {
            hyperbolic_zero = Verdict::fail(w("sgn_hyperbolic", &[a]));
            break;
        }
    }

    Ok(SignatureReport {
        orderings,
        c_filtered,
        grad_c,
        theta_ok,
        sgn_hom,
        parity,
        hyperbolic_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgroup::z2_group;

    #[test]
    fn signature_report_over_z2() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let rep = signature_ring(&ctx, 3, 5).unwrap();
        assert_eq!(rep.orderings.len(), 1);
        assert_eq!(rep.grad_c.dims(), &[1, 1, 1, 1]);
        assert!(rep.grad_c.check_igr().ok);
        assert!(rep.theta_ok);
        assert!(rep.sgn_hom.ok && rep.parity.ok && rep.hyperbolic_zero.ok);
        // sgn(<1,1>) = 2 at the unique ordering.
        let two = ctx.add(&ctx.one(), &ctx.one());
        assert_eq!(ctx.signatures(&two), vec![2]);
    }

    #[test]
    fn filtration_laws_on_decided_queries() {
        let g = z2_group();
        let ctx = WittContext::new(&g, 4).unwrap();
        let pf = ParityFunctions { points: 2 };
        // J_n * J_m <= J_{n+m} spot checks on both implementations.
        let f = vec![4i64, 8];
        let h = vec![2i64, 2];
        assert_eq!(pf.in_level(&f, 2), Decision::Yes);
        assert_eq!(pf.in_level(&h, 1), Decision::Yes);
        assert_eq!(pf.in_level(&pf.mul(&f, &h), 3), Decision::Yes);
        assert_eq!(pf.in_level(&h, 2), Decision::No);

        let two = FilteredRing::add(&ctx, &FilteredRing::one(&ctx), &FilteredRing::one(&ctx));
        let four = FilteredRing::mul(&ctx, &two, &two);
        assert_eq!(ctx.in_level(&two, 1), Decision::Yes);
        assert_eq!(ctx.in_level(&four, 2), Decision::Yes);
        assert_eq!(ctx.in_level(&four, 1), Decision::Yes);
    }

    #[test]
    fn theta_rejects_non_members() {
        assert_eq!(theta(&[2, 3], 1), None);
        assert_eq!(theta(&[2, 6], 1), Some(vec![true, true]));
        assert_eq!(theta(&[4, 8], 2), Some(vec![true, false]));
    }
}
