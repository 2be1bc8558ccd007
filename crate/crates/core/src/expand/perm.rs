//! Permutation ranking helpers.

use num_bigint::BigInt;

use crate::free::Sign;

/// `n!` for `n <= 20`.
pub fn factorial_u64(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::from(1u8), |acc, k| acc * k)
}

/// Writes the permutation of `0..out.len()` with lexicographic rank `rank`
/// into `out` and returns its sign. The sign is the parity of the Lehmer
/// digit sum. `rank` must be below `out.len()!`.
pub fn decode_lehmer(mut rank: u64, out: &mut [usize]) -> Sign {
    let n = out.len();
    let mut pool = [0usize; 20];
    assert!(n <= pool.len(), "permutations of more than 20 entries are not enumerable");
    for (i, p) in pool.iter_mut().enumerate().take(n) {
        *p = i;
    }
    let mut remaining = n;
    let mut digit_sum = 0u64;
    for (i, slot) in out.iter_mut().enumerate() {
        let radix = factorial_u64(n - 1 - i).unwrap();
        let digit = (rank / radix) as usize;
        rank %= radix;
        digit_sum += digit as u64;
        *slot = pool[digit];
        pool.copy_within(digit + 1..remaining, digit);
        remaining -= 1;
    }
    Sign::from_parity(digit_sum % 2 == 1)
}

/// Sign of an arbitrary permutation of `0..perm.len()`, by inversion count.
pub fn parity(perm: &[usize]) -> Sign {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    Sign::from_parity(inversions % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;
    use alloc::vec::Vec;

    #[test]
    fn factorials() {
        assert_eq!(factorial_u64(0), Some(1));
        assert_eq!(factorial_u64(7), Some(5040));
        assert_eq!(factorial_u64(20), Some(2_432_902_008_176_640_000));
        assert_eq!(factorial_u64(21), None);
        assert_eq!(factorial(21), BigInt::from(51_090_942_171_709_440_000u128));
    }

    #[test]
    fn lehmer_ranks_enumerate_in_lexicographic_order() {
        let mut seen = Vec::new();
        let mut out = [0usize; 4];
        for rank in 0..24 {
            let sign = decode_lehmer(rank, &mut out);
            assert_eq!(sign, parity(&out));
            seen.push(out.to_vec());
        }
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);
        assert_eq!(seen.iter().collect::<BTreeSet<_>>().len(), 24);
        assert_eq!(seen[0], vec![0, 1, 2, 3]);
        assert_eq!(seen[23], vec![3, 2, 1, 0]);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity(&[]), Sign::Plus);
        assert_eq!(parity(&[1, 0]), Sign::Minus);
        assert_eq!(parity(&[1, 2, 0]), Sign::Plus);
    }
}
