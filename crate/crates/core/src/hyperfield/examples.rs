//! The example zoo: Q_2, Krasner's hyperfield, the H_p family, the
//! n-kaleidoscopes and prime fields, built exactly from their case rules.

use super::Multiring;
use crate::{is_prime, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleKind {
    /// The sign hyperfield {-1, 0, 1}.
    Q2,
    /// Krasner's hyperfield {0, 1} with 1+1 = {0,1}.
    Krasner,
    /// H_p on {0, .., p-1}: a+b is everything when a = b != 0.
    Hp,
    /// The n-kaleidoscope on {-n, .., n}.
    Kaleidoscope,
    /// The prime field F_p as a multiring with singleton sums.
    PrimeField,
}

impl ExampleKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "Q2" | "q2" => Some(ExampleKind::Q2),
            "krasner" | "K" | "k" => Some(ExampleKind::Krasner),
            "Hp" | "hp" | "H" | "h" => Some(ExampleKind::Hp),
            "kaleidoscope" | "X" | "x" => Some(ExampleKind::Kaleidoscope),
            "prime_field" | "F" | "f" => Some(ExampleKind::PrimeField),
            _ => None,
        }
    }
}

/// Builds one of the bundled example structures. `param` is the prime for
/// `Hp`/`PrimeField` and the width for `Kaleidoscope`; it is ignored for the
/// fixed structures.
pub fn build_example(kind: ExampleKind, param: usize) -> Result<Multiring> {
    match kind {
        ExampleKind::Q2 => kaleidoscope(1).map(|m| m.with_name("Q2")),
        ExampleKind::Krasner => {
            // x+0 = {x}, 1+1 = {0,1}.
            Multiring::new(
                "K",
                vec!["0".into(), "1".into()],
                0,
                1,
                vec![0, 1],
                vec![0, 0, 0, 1],
                vec![0b01, 0b10, 0b10, 0b11],
            )
        }
        ExampleKind::Hp => {
            if !is_prime(param) {
                return Err(Error::NotPrime(param));
            }
            let p = param;
            let elements: Vec<String> = (0..p).map(|i| i.to_string()).collect();
            let neg: Vec<usize> = (0..p).collect();
            let mut mul = vec![0; p * p];
            let mut sum = vec![0u64; p * p];
            for a in 0..p {
                for b in 0..p {
                    mul[a * p + b] = a * b % p;
                    sum[a * p + b] = if a == 0 {
                        1 << b
                    } else if b == 0 {
                        1 << a
                    } else if a == b {
                        (1 << p) - 1
                    } else {
                        1 << a | 1 << b
                    };
                }
            }
            Multiring::new(format!("H{p}"), elements, 0, 1, neg, mul, sum)
        }
        ExampleKind::Kaleidoscope => kaleidoscope(param),
        ExampleKind::PrimeField => {
            if !is_prime(param) {
                return Err(Error::NotPrime(param));
            }
            let p = param;
            let elements: Vec<String> = (0..p).map(|i| i.to_string()).collect();
            let neg: Vec<usize> = (0..p).map(|a| (p - a) % p).collect();
            let mut mul = vec![0; p * p];
            let mut sum = vec![0u64; p * p];
            for a in 0..p {
                for b in 0..p {
                    mul[a * p + b] = a * b % p;
                    sum[a * p + b] = 1 << ((a + b) % p);
                }
            }
            Multiring::new(format!("F{p}"), elements, 0, 1, neg, mul, sum)
        }
    }
}

fn kaleidoscope(n: usize) -> Result<Multiring> {
    if n < 1 {
        return Err(Error::BadParam("kaleidoscope width must be >= 1".into()));
    }
    let size = 2 * n + 1;
    // Elements -n..n in ascending order; value v sits at index v + n.
    let val = |i: usize| i as i64 - n as i64;
    let idx = |v: i64| (v + n as i64) as usize;
    let elements: Vec<String> = (0..size).map(|i| val(i).to_string()).collect();
    let neg: Vec<usize> = (0..size).map(|i| idx(-val(i))).collect();
    let mut mul = vec![0; size * size];
    let mut sum = vec![0u64; size * size];
    for i in 0..size {
        for j in 0..size {
            let (a, b) = (val(i), val(j));
            mul[i * size + j] = if a == 0 || b == 0 {
                idx(0)
            } else {
                idx((a * b).signum() * a.abs().max(b.abs()))
            };
            sum[i * size + j] = if b == -a {
                let mut m = 0u64;
                for c in -a.abs()..=a.abs() {
                    m |= 1 << idx(c);
                }
                m
            } else if b.abs() <= a.abs() {
                1 << i
            } else {
                1 << j
            };
        }
    }
    Multiring::new(format!("X{n}"), elements, idx(0), idx(1), neg, mul, sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_matches_the_case_rules() {
        let q2 = build_example(ExampleKind::Q2, 0).unwrap();
        assert_eq!(q2.labels(), &["-1", "0", "1"]);
        let (m1, z, one) = (0, 1, 2);
        assert_eq!(q2.zero(), z);
        assert_eq!(q2.one(), one);
        // 1 + (-1) = {-1, 0, 1}.
        assert_eq!(q2.sum_set(one, m1), vec![m1, z, one]);
        assert_eq!(q2.sum_set(one, one), vec![one]);
        assert_eq!(q2.sum_set(m1, m1), vec![m1]);
        for x in 0..3 {
            assert_eq!(q2.sum_set(z, x), vec![x]);
        }
        assert_eq!(q2.mul(m1, m1), one);
    }

    #[test]
    fn q2_equals_the_one_kaleidoscope() {
        let q2 = build_example(ExampleKind::Q2, 7).unwrap();
        let x1 = build_example(ExampleKind::Kaleidoscope, 1).unwrap();
        assert_eq!(q2.with_name("X1"), x1);
    }

    #[test]
    fn kaleidoscope_two_sum_rules() {
        let x2 = build_example(ExampleKind::Kaleidoscope, 2).unwrap();
        assert_eq!(x2.size(), 5);
        let i = |l: &str| x2.index_of(l).unwrap();
        assert_eq!(x2.sum_set(i("1"), i("1")), vec![i("1")]);
        // 2 + (-2) = {-2,...,2}.
        assert_eq!(x2.sum_set(i("2"), i("-2")).len(), 5);
        assert_eq!(x2.sum_set(i("2"), i("1")), vec![i("2")]);
        assert_eq!(x2.mul(i("2"), i("-1")), i("-2"));
    }

    #[test]
    fn h2_equals_krasner() {
        let h2 = build_example(ExampleKind::Hp, 2).unwrap();
        let k = build_example(ExampleKind::Krasner, 0).unwrap();
        assert_eq!(h2.with_name("K"), k);
    }

    #[test]
    fn hp_requires_prime() {
        assert!(build_example(ExampleKind::Hp, 4).is_err());
        assert!(build_example(ExampleKind::PrimeField, 9).is_err());
        assert!(build_example(ExampleKind::Kaleidoscope, 0).is_err());
    }

    #[test]
    fn prime_field_is_a_field() {
        let f5 = build_example(ExampleKind::PrimeField, 5).unwrap();
        let ax = f5.check_multiring_axioms();
        assert!(ax.is_multiring && ax.multifield && ax.hyperring.ok);
        // Fields are not hyperbolic: 1 - 1 = {0}.
        assert!(!f5.is_hyperbolic_hyperfield());
    }
}
