use alloc::vec::Vec;

use num_bigint::BigInt;

use super::IdentityError;
use crate::expand::perm::factorial;

fn check_range(n: usize, half_order: u32) -> Result<(), IdentityError> {
    if half_order == 0 {
        return Err(IdentityError::UnsupportedParameter("L must be at least 1"));
    }
    if n > 6 * half_order as usize {
        return Err(IdentityError::UnsupportedParameter("n must lie in 0..=6L"));
    }
    Ok(())
}

/// Intercalation count `c_n` for brackets of order `2L + 1`:
///
/// - `(n + 1)(4L - n) / 2` for `0 <= n <= 2L`,
/// - `10L^2 - 6Ln + L + n^2` for `2L + 1 <= n <= 3L`,
/// - `c_{6L - n}` above `3L`.
pub fn closed_form_c(n: usize, half_order: u32) -> Result<u128, IdentityError> {
    check_range(n, half_order)?;
    let l = i128::from(half_order);
    let n = n as i128;
    let value = if n <= 2 * l {
        // (n+1)(4L-n) is a product of two numbers of opposite parity
        (n + 1) * (4 * l - n) / 2
    } else if n <= 3 * l {
        10 * l * l - 6 * l * n + l + n * n
    } else {
        return closed_form_c((6 * l - n) as usize, half_order);
    };
    Ok(value as u128)
}

/// Common factorial prefactor `(2L+1)! (2L)! (2L-1)!`.
pub fn profile_prefactor(half_order: u32) -> BigInt {
    let l = half_order as usize;
    factorial(2 * l + 1) * factorial(2 * l) * factorial(2 * l - 1)
}

/// `m_n = (2L+1)! (2L)! (2L-1)! c_n`.
pub fn closed_form_m(n: usize, half_order: u32) -> Result<BigInt, IdentityError> {
    Ok(profile_prefactor(half_order) * closed_form_c(n, half_order)?)
}

/// The whole closed-form profile `m_0 ..= m_6L`.
pub fn closed_form_profile(half_order: u32) -> Result<Vec<BigInt>, IdentityError> {
    check_range(0, half_order)?;
    let k = profile_prefactor(half_order);
    (0..=6 * half_order as usize).map(|n| Ok(&k * closed_form_c(n, half_order)?)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l1_values() {
        let c: Vec<u128> = (0..=6).map(|n| closed_form_c(n, 1).unwrap()).collect();
        assert_eq!(c, [2, 3, 3, 2, 3, 3, 2]);
        assert_eq!(closed_form_m(0, 1).unwrap(), BigInt::from(24));
        assert_eq!(closed_form_m(1, 1).unwrap(), BigInt::from(36));
    }

    #[test]
    fn l2_values() {
        let c: Vec<u128> = (0..=12).map(|n| closed_form_c(n, 2).unwrap()).collect();
        assert_eq!(c, [4, 7, 9, 10, 10, 7, 6, 7, 10, 10, 9, 7, 4]);
        assert_eq!(profile_prefactor(2), BigInt::from(17280));
        assert_eq!(closed_form_m(0, 2).unwrap(), BigInt::from(69120));
    }

    #[test]
    fn out_of_range() {
        assert!(closed_form_c(7, 1).is_err());
        assert!(closed_form_c(0, 0).is_err());
        assert!(closed_form_m(13, 2).is_err());
    }

    #[test]
    fn sum_rule_and_reflection() {
        for l in 1..=50u32 {
            let c: Vec<u128> = (0..=6 * l as usize).map(|n| closed_form_c(n, l).unwrap()).collect();
            let l = u128::from(l);
            assert_eq!(c.iter().sum::<u128>(), 2 * l * (2 * l + 1) * (2 * l + 1));
            assert!(c.iter().eq(c.iter().rev()));
        }
    }
}
