//! Randomized property checks for the linear algebra substrate and the
//! Witt reduction.

use aqf_core::gf2::{quotient_structure, BilinearTable, BitMatrix, BitVector};
use aqf_core::pool;
use aqf_core::witt::WittContext;
use proptest::prelude::*;

fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(any::<bool>(), r * c).prop_map(move |bits| {
            let bytes: Vec<u8> = bits.iter().map(|&b| b as u8).collect();
            BitMatrix::from_bits(r, c, &bytes)
        })
    })
}

fn arb_vector(len: usize) -> impl Strategy<Value = BitVector> {
    proptest::collection::vec(any::<bool>(), len).prop_map(|bits| {
        let bytes: Vec<u8> = bits.iter().map(|&b| b as u8).collect();
        BitVector::from_bits(&bytes)
    })
}

proptest! {
    #[test]
    fn rank_equals_rank_of_transpose(m in arb_matrix(7, 7)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in arb_matrix(7, 7)) {
        prop_assert_eq!(m.cols(), m.rank() + m.kernel_basis().len());
    }

    #[test]
    fn quotient_annihilates_exactly_the_span(m in arb_matrix(5, 5)) {
        let rows: Vec<BitVector> = (0..m.rows()).map(|r| m.row(r).clone()).collect();
        let q = quotient_structure(m.cols(), &rows);
        prop_assert_eq!(q.dim, m.cols() - m.rank());
        for code in 0u32..1 << m.cols() {
            let bits: Vec<u8> = (0..m.cols()).map(|i| (code >> i & 1) as u8).collect();
            let v = BitVector::from_bits(&bits);
            let killed = q.projection.mul_vec(&v).is_zero();
            prop_assert_eq!(killed, m.row_space_contains(&v));
        }
    }

    #[test]
    fn solve_is_sound_and_complete(m in arb_matrix(6, 6), code in any::<u64>()) {
        // rhs taken from the column space must be solvable; arbitrary rhs
        // must verify when a solution is claimed.
        let x = {
            let bits: Vec<u8> = (0..m.cols()).map(|i| (code >> i & 1) as u8).collect();
            BitVector::from_bits(&bits)
        };
        let rhs = m.mul_vec(&x);
        let sol = m.solve(&rhs);
        prop_assert!(sol.is_some());
        prop_assert_eq!(m.mul_vec(&sol.unwrap()), rhs);
    }

    #[test]
    fn bilinear_table_is_additive(
        entries in proptest::collection::vec(any::<u8>(), 9),
        u1 in arb_vector(3),
        u2 in arb_vector(3),
        v in arb_vector(3),
    ) {
        let table = BilinearTable::from_fn(3, 3, 4, |i, j| {
            let e = entries[i * 3 + j];
            BitVector::from_bits(&[e & 1, e >> 1 & 1, e >> 2 & 1, e >> 3 & 1])
        });
        let lhs = table.apply(&u1.xor(&u2), &v).unwrap();
        let rhs = table.apply(&u1, &v).unwrap().xor(&table.apply(&u2, &v).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Witt reduction is confluent: the scan order used to find hyperbolic
    /// splits does not change the canonical representative.
    #[test]
    fn witt_reduction_confluence(
        entries in proptest::collection::vec(0usize..4, 1..7),
        scan in proptest::collection::vec(0usize..8, 8),
    ) {
        let g = pool::product_sg();
        let ctx = WittContext::new(&g, 4).unwrap();
        let base = ctx.reduce(&entries);
        let shuffled = ctx.reduce_with_scan(&entries, &scan);
        prop_assert_eq!(base, shuffled);
    }

    /// The fast reduction agrees with the spec-literal isometry search.
    #[test]
    fn witt_reduction_matches_isometry_oracle(
        entries in proptest::collection::vec(0usize..4, 1..5),
    ) {
        let g = pool::product_sg();
        let ctx = WittContext::new(&g, 4).unwrap();
        prop_assert_eq!(ctx.reduce(&entries), ctx.reduce_by_isometry_search(&entries));
    }
}
