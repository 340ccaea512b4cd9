//! Exact brute-force computation of `W(s, d^m)` by dynamic programming over
//! the generating function `prod_r 1/(1 - t^{d_r})`.
//!
//! This is the ground truth the quasi-polynomial builders are checked
//! against. Counts are arbitrary-precision: the values grow like
//! `s^{m-1} / ((m-1)! d_1...d_m)` and overflow fixed-width integers long
//! before the ranges exercised here.

use num::bigint::BigUint;
use num::traits::Zero;

use crate::exponents::ExponentTuple;

/// Number of solutions of `sum d_r x_r = s` in nonnegative integers.
///
/// Negative `s` returns 0 (the combinatorial count, not the quasi-polynomial
/// continuation). Runs in `O(m * s)` big-integer additions and `O(sum d_r)`
/// memory, so single evaluations at large `s` are cheap on memory.
pub fn count(tuple: &ExponentTuple, s: i64) -> BigUint {
    if s < 0 {
        return BigUint::zero();
    }
    let mut result = BigUint::zero();
    stream_counts(tuple, s as u64, |at, value| {
        if at == s as u64 {
            result = value.clone();
        }
    });
    result
}

/// All counts `W(0..=s_max)` in one `O(m * s_max)` sweep.
///
/// The sweep applies one exponent at a time as an in-place prefix pass:
/// after processing `d`, `w[s] += w[s - d]` has turned the table for the
/// shorter tuple into the table including `d`.
pub fn count_range(tuple: &ExponentTuple, s_max: u64) -> Vec<BigUint> {
    let n = (s_max + 1) as usize;
    let mut w = vec![BigUint::zero(); n];
    w[0] = BigUint::from(1u32);
    for &d in tuple.degrees() {
        let d = d as usize;
        for s in d..n {
            let (lo, hi) = w.split_at_mut(s);
            hi[0] += &lo[s - d];
        }
    }
    w
}

/// Streams `W(0), W(1), ..., W(s_max)` to `sink` using ring buffers.
///
/// Memory is `O(sum d_r)` values instead of `O(s_max)`, which matters when
/// sampling windows of large sweeps. The recurrence per level `j` is
/// `w_j(s) = w_{j-1}(s) + w_j(s - d_j)` with `w_0(s) = [s == 0]`.
pub fn stream_counts<F: FnMut(u64, &BigUint)>(tuple: &ExponentTuple, s_max: u64, mut sink: F) {
    let degrees = tuple.degrees();
    let mut rings: Vec<Vec<BigUint>> = degrees
        .iter()
        .map(|&d| vec![BigUint::zero(); d as usize])
        .collect();
    for s in 0..=s_max {
        let mut value = if s == 0 {
            BigUint::from(1u32)
        } else {
            BigUint::zero()
        };
        for (ring, &d) in rings.iter_mut().zip(degrees) {
            let slot = (s % d) as usize;
            value += &ring[slot];
            ring[slot] = value.clone();
        }
        sink(s, &value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::ExponentTuple;

    fn tuple(degrees: &[u64]) -> ExponentTuple {
        ExponentTuple::new(degrees.to_vec()).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(count(&ExponentTuple::consecutive(10), 10), BigUint::from(42u32));
        assert_eq!(
            count(&ExponentTuple::consecutive(7), 51),
            BigUint::from(19928u32)
        );
        assert_eq!(count(&tuple(&[1]), 0), BigUint::from(1u32));
        assert_eq!(count(&tuple(&[2]), 3), BigUint::zero());
        assert_eq!(count(&tuple(&[1, 2]), -1), BigUint::zero());
    }

    #[test]
    fn range_matches_hand_enumeration() {
        let w = count_range(&tuple(&[1, 2]), 4);
        let expected: Vec<BigUint> = [1u32, 1, 2, 2, 3].iter().map(|&x| x.into()).collect();
        assert_eq!(w, expected);
        assert_eq!(count_range(&tuple(&[5, 7]), 0), vec![BigUint::from(1u32)]);
    }

    #[test]
    fn streaming_agrees_with_in_place_sweep() {
        for degs in [&[1, 2, 3][..], &[2, 4][..], &[3, 5, 5, 7][..]] {
            let t = tuple(degs);
            let full = count_range(&t, 200);
            let mut streamed = Vec::new();
            stream_counts(&t, 200, |_, v| streamed.push(v.clone()));
            assert_eq!(full, streamed);
        }
    }

    #[test]
    fn recursion_in_last_exponent_holds() {
        // W(s, d^m) = W(s, d^{m-1}) + W(s - d_m, d^m), with W(negative) = 0.
        for degs in [&[1, 2, 3][..], &[2, 2, 5][..], &[3, 4, 6, 9][..]] {
            let t = tuple(degs);
            let shorter = t.without_index(t.len() - 1).unwrap();
            let d_last = *t.degrees().last().unwrap() as i64;
            for s in 0..=120i64 {
                let lhs = count(&t, s);
                let rhs = count(&shorter, s) + count(&t, s - d_last);
                assert_eq!(lhs, rhs, "tuple {t} at s={s}");
            }
        }
    }

    #[test]
    fn symmetric_columns_monotone_with_equality_iff_small() {
        for m in 1..=9u32 {
            let a = count_range(&ExponentTuple::consecutive(m), 40);
            let b = count_range(&ExponentTuple::consecutive(m + 1), 40);
            for s in 0..=40usize {
                assert!(a[s] <= b[s]);
                assert_eq!(a[s] == b[s], s as u32 <= m, "m={m} s={s}");
            }
        }
    }

    #[test]
    fn scaled_tuple_counts() {
        // W(s, p*t) = 0 unless p | s, in which case it equals W(s/p, t).
        for p in [2u64, 3, 5] {
            let t = tuple(&[1, 2, 3]);
            let scaled = t.scaled(p).unwrap();
            for s in 0..=60i64 {
                let direct = count(&scaled, s);
                let expected = if s % p as i64 == 0 {
                    count(&t, s / p as i64)
                } else {
                    BigUint::zero()
                };
                assert_eq!(direct, expected, "p={p} s={s}");
            }
        }
    }
}
