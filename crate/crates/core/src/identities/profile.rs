use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::closed_form::closed_form_profile;
use super::IdentityError;
use crate::free::{AntisymElement, CanonicalWord, Coeff, Slot};

/// Class with `A` after `n` of the `total` antisymmetrized slots.
pub fn intercalation_class(n: usize, total: usize) -> CanonicalWord {
    let mut slots = alloc::vec![Slot::Anti; total + 1];
    slots[n] = Slot::Fixed('A');
    CanonicalWord::new(slots)
}

/// The magnitudes `m_0 ..= m_6L` of a `(6L+1)`-word profile with one `A`.
/// The class coefficient at intercalation `n` is `(-1)^n m_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientProfile {
    pub half_order: u32,
    pub m: Vec<BigInt>,
}

impl CoefficientProfile {
    pub fn closed_form(half_order: u32) -> Result<Self, IdentityError> {
        Ok(CoefficientProfile { half_order, m: closed_form_profile(half_order)? })
    }

    pub fn from_element(half_order: u32, element: &AntisymElement) -> Result<Self, IdentityError> {
        let total = 6 * half_order as usize;
        let mut m = alloc::vec![BigInt::zero(); total + 1];
        for (class, coeff) in element {
            let n = class.intercalation().ok_or(IdentityError::MalformedProfile("class without a single A"))?;
            if class.arity() != total {
                return Err(IdentityError::MalformedProfile("class of the wrong length"));
            }
            if !coeff.is_integer() {
                return Err(IdentityError::MalformedProfile("non-integer coefficient"));
            }
            let v = coeff.to_integer();
            m[n] = if n % 2 == 1 { -v } else { v };
        }
        Ok(CoefficientProfile { half_order, m })
    }

    pub fn class_coefficient(&self, n: usize) -> Coeff {
        let v = Coeff::from_integer(self.m[n].clone());
        if n % 2 == 1 {
            -v
        } else {
            v
        }
    }

    pub fn to_element(&self) -> AntisymElement {
        (0..self.m.len()).map(|n| (intercalation_class(n, self.m.len() - 1), self.class_coefficient(n))).collect()
    }

    pub fn is_reflection_symmetric(&self) -> bool {
        self.m.iter().eq(self.m.iter().rev())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.m.iter().all(|v| !v.is_negative())
    }

    pub fn sum(&self) -> BigInt {
        self.m.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::perm::factorial;

    #[test]
    fn round_trip_through_classes() {
        let p = CoefficientProfile::closed_form(1).unwrap();
        let e = p.to_element();
        assert_eq!(e.coeff(&intercalation_class(1, 6)), Coeff::from_integer(BigInt::from(-36)));
        assert_eq!(CoefficientProfile::from_element(1, &e).unwrap(), p);
    }

    #[test]
    fn closed_form_invariants() {
        for l in 1..=12u32 {
            let p = CoefficientProfile::closed_form(l).unwrap();
            assert!(p.is_nonnegative());
            assert!(p.is_reflection_symmetric());
            assert_eq!(p.sum(), factorial(2 * l as usize + 1).pow(3));
        }
    }

    #[test]
    fn rejects_foreign_classes() {
        let mut e = AntisymElement::zero();
        e.add_class(CanonicalWord::new(alloc::vec![Slot::Anti; 7]), Coeff::from_integer(1.into()));
        assert!(CoefficientProfile::from_element(1, &e).is_err());
        let mut e = AntisymElement::zero();
        e.add_class(intercalation_class(0, 6), Coeff::new(1.into(), 2.into()));
        assert!(CoefficientProfile::from_element(1, &e).is_err());
    }
}
