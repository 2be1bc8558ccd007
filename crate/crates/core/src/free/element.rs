use alloc::collections::btree_map::{self, BTreeMap, Entry};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::symbol::GeneratorSymbol;
use super::word::Word;

/// Exact coefficient type used throughout the crate.
pub type Coeff = BigRational;

/// A finite formal sum of words with rational coefficients.
///
/// Terms are kept in word order and zero coefficients are never stored, so
/// two elements are equal iff their term maps are.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Word, Coeff>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    /// The empty word with coefficient one.
    pub fn one() -> Self {
        FreeElement::from_word(Word::empty())
    }

    pub fn from_word(word: Word) -> Self {
        FreeElement::term(word, Coeff::one())
    }

    pub fn from_symbol(symbol: GeneratorSymbol) -> Self {
        FreeElement::from_word(Word::new(alloc::vec![symbol]))
    }

    pub fn term(word: Word, coeff: Coeff) -> Self {
        let mut e = FreeElement::zero();
        e.add_term(word, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &Word) -> Option<&Coeff> {
        self.terms.get(word)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, Coeff> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, word: Word, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn scale(&self, factor: &Coeff) -> FreeElement {
        if factor.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect(),
        }
    }

    /// Concatenation product, extended bilinearly.
    pub fn multiply(&self, rhs: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (wl, cl) in &self.terms {
            for (wr, cr) in &rhs.terms {
                out.add_term(wl.concat(wr), cl * cr);
            }
        }
        out
    }

    /// Whether every coefficient has denominator one.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl FromIterator<(Word, Coeff)> for FreeElement {
    fn from_iter<I: IntoIterator<Item = (Word, Coeff)>>(iter: I) -> Self {
        let mut e = FreeElement::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

impl<'a> IntoIterator for &'a FreeElement {
    type Item = (&'a Word, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, Word, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;

    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;

    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;

    fn neg(self) -> FreeElement {
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &FreeElement {
    type Output = FreeElement;

    fn mul(self, rhs: &FreeElement) -> FreeElement {
        self.multiply(rhs)
    }
}

/// Writes `c1 w1 + c2 w2 - ...`, omitting unit coefficients.
pub(crate) fn write_signed_sum<'a, K: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Coeff)>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        let mag = c.abs();
        if !mag.is_one() {
            write!(f, "{mag} ")?;
        }
        write!(f, "{key}")?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_signed_sum(f, self.terms.iter())
    }
}
