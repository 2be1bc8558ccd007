use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::element::{write_signed_sum, Coeff, FreeElement};
use super::symbol::AntiIndex;
use super::word::{canonical_reduce, CanonicalWord};

/// An element of the quotient of the free algebra by relabeling of the
/// antisymmetrized generators: a formal sum of canonical words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AntisymElement {
    classes: BTreeMap<CanonicalWord, Coeff>,
}

impl AntisymElement {
    pub fn zero() -> Self {
        AntisymElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, CanonicalWord, Coeff> {
        self.classes.iter()
    }

    pub fn classes(&self) -> impl Iterator<Item = &CanonicalWord> {
        self.classes.keys()
    }

    /// Coefficient of `class`, zero when absent.
    pub fn coeff(&self, class: &CanonicalWord) -> Coeff {
        self.classes.get(class).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_class(&mut self, class: CanonicalWord, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.classes.entry(class) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `other` into `self` classwise.
    pub fn merge(&mut self, other: &AntisymElement) {
        for (k, c) in &other.classes {
            self.add_class(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, factor: &Coeff) -> AntisymElement {
        if factor.is_zero() {
            return AntisymElement::zero();
        }
        AntisymElement {
            classes: self.classes.iter().map(|(k, c)| (k.clone(), c * factor)).collect(),
        }
    }

    pub fn sub(&self, other: &AntisymElement) -> AntisymElement {
        let mut out = self.clone();
        for (k, c) in &other.classes {
            out.add_class(k.clone(), -c);
        }
        out
    }

    /// Lifts back into the free algebra by filling every class with the
    /// ascending `indices`. The lift reduces to `self` again.
    pub fn fill(&self, indices: &[AntiIndex]) -> FreeElement {
        self.classes.iter().map(|(k, c)| (k.fill(indices), c.clone())).collect()
    }

    /// Union of the class keys of both elements, in canonical order.
    pub fn class_union<'a>(&'a self, other: &'a AntisymElement) -> Vec<&'a CanonicalWord> {
        let mut keys: Vec<&CanonicalWord> = self.classes.keys().chain(other.classes.keys()).collect();
        keys.sort();
        keys.dedup();
        keys
    }
}

impl FromIterator<(CanonicalWord, Coeff)> for AntisymElement {
    fn from_iter<I: IntoIterator<Item = (CanonicalWord, Coeff)>>(iter: I) -> Self {
        let mut e = AntisymElement::zero();
        for (k, c) in iter {
            e.add_class(k, c);
        }
        e
    }
}

impl<'a> IntoIterator for &'a AntisymElement {
    type Item = (&'a CanonicalWord, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, CanonicalWord, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.classes.iter()
    }
}

impl fmt::Display for AntisymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.classes.iter())
    }
}

/// Reduces every word of `element` to its canonical class, accumulating
/// signed coefficients. Words with a repeated antisymmetrized index drop out.
pub fn reduce_element(element: &FreeElement) -> AntisymElement {
    let mut out = AntisymElement::zero();
    for (word, c) in element {
        if let Some((sign, class)) = canonical_reduce(word) {
            out.add_class(class, if sign.is_minus() { -c } else { c.clone() });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::element::tests::arb_element;
    use super::super::{GeneratorSymbol, Slot, Word};
    use super::*;
    use alloc::vec;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(n: i64) -> Coeff {
        Coeff::from_integer(BigInt::from(n))
    }

    fn a() -> GeneratorSymbol {
        GeneratorSymbol::Fixed('A')
    }

    fn b(i: u32) -> GeneratorSymbol {
        GeneratorSymbol::anti(i)
    }

    #[test]
    fn canonical_terms_pass_through() {
        let e: FreeElement = [(Word::new(vec![a(), b(1)]), int(1)), (Word::new(vec![b(1), a()]), int(-1))]
            .into_iter()
            .collect();
        let r = reduce_element(&e);
        assert_eq!(r.len(), 2);
        assert_eq!(r.coeff(&CanonicalWord::new(vec![Slot::Fixed('A'), Slot::Anti])), int(1));
        assert_eq!(r.coeff(&CanonicalWord::new(vec![Slot::Anti, Slot::Fixed('A')])), int(-1));
    }

    #[test]
    fn symmetric_pair_cancels() {
        let e: FreeElement = [(Word::new(vec![b(2), b(1)]), int(1)), (Word::new(vec![b(1), b(2)]), int(1))]
            .into_iter()
            .collect();
        assert!(reduce_element(&e).is_zero());
    }

    #[test]
    fn fill_lifts_to_a_preimage() {
        let e: FreeElement = [(Word::new(vec![b(7), a(), b(3)]), int(5))].into_iter().collect();
        let r = reduce_element(&e);
        let idx = [AntiIndex::new(3).unwrap(), AntiIndex::new(7).unwrap()];
        let lifted = r.fill(&idx);
        assert_eq!(reduce_element(&lifted), r);
        assert_eq!(lifted.coeff(&Word::new(vec![b(3), a(), b(7)])), Some(&int(-5)));
    }

    proptest! {
        #[test]
        fn reduction_is_additive(x in arb_element(), y in arb_element()) {
            let mut sum = reduce_element(&x);
            sum.merge(&reduce_element(&y));
            prop_assert_eq!(reduce_element(&(&x + &y)), sum);
        }
    }
}
