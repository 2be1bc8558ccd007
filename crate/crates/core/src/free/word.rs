use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;
use core::ops::Neg;

use super::symbol::{AntiIndex, GeneratorSymbol, Slot};

/// A monomial of the free algebra. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<GeneratorSymbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<GeneratorSymbol>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.0);
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }

    pub fn anti_indices(&self) -> impl Iterator<Item = AntiIndex> + '_ {
        self.0.iter().filter_map(|s| s.anti_index())
    }

    pub fn into_symbols(self) -> Vec<GeneratorSymbol> {
        self.0
    }
}

impl From<Vec<GeneratorSymbol>> for Word {
    fn from(symbols: Vec<GeneratorSymbol>) -> Self {
        Word(symbols)
    }
}

impl FromIterator<GeneratorSymbol> for Word {
    fn from_iter<I: IntoIterator<Item = GeneratorSymbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl core::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

/// Representative of a word's class under relabeling of the `Anti`
/// generators: fixed symbols stay in place, and the antisymmetrized
/// generators are read as `1..=arity` from left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalWord(Vec<Slot>);

impl CanonicalWord {
    pub fn new(slots: Vec<Slot>) -> Self {
        CanonicalWord(slots)
    }

    pub fn slots(&self) -> &[Slot] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of antisymmetrized placeholders.
    pub fn arity(&self) -> usize {
        self.0.iter().filter(|s| **s == Slot::Anti).count()
    }

    /// Number of placeholders to the left of the fixed symbol, when the
    /// word contains exactly one fixed symbol.
    pub fn intercalation(&self) -> Option<usize> {
        let mut fixed = self.0.iter().enumerate().filter(|(_, s)| matches!(s, Slot::Fixed(_)));
        let (pos, _) = fixed.next()?;
        if fixed.next().is_some() {
            return None;
        }
        Some(pos)
    }

    /// Fills the placeholders with `indices` in order. `indices` must hold
    /// exactly `arity()` entries; pass them ascending to get the word whose
    /// reduction sign is `+1`.
    pub fn fill(&self, indices: &[AntiIndex]) -> Word {
        assert_eq!(indices.len(), self.arity(), "placeholder count mismatch");
        let mut next = indices.iter();
        self.0
            .iter()
            .map(|slot| match slot {
                Slot::Fixed(c) => GeneratorSymbol::Fixed(*c),
                Slot::Anti => GeneratorSymbol::Anti(*next.next().unwrap()),
            })
            .collect()
    }

    /// The representative with placeholders numbered `1..=arity`.
    pub fn representative(&self) -> Word {
        let mut i = 0;
        self.0
            .iter()
            .map(|slot| match slot {
                Slot::Fixed(c) => GeneratorSymbol::Fixed(*c),
                Slot::Anti => {
                    i += 1;
                    GeneratorSymbol::anti(i)
                }
            })
            .collect()
    }
}

impl Borrow<[Slot]> for CanonicalWord {
    fn borrow(&self) -> &[Slot] {
        &self.0
    }
}

impl fmt::Display for CanonicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative().fmt(f)
    }
}

/// Allocation-free core of [`canonical_reduce`].
///
/// Writes the slot pattern of `symbols` into `slots` and returns the sign of
/// the permutation sorting the antisymmetrized indices, or `None` when an
/// index repeats. `scratch` is working storage and is cleared first.
pub fn reduce_symbols(symbols: &[GeneratorSymbol], scratch: &mut Vec<u32>, slots: &mut Vec<Slot>) -> Option<Sign> {
    scratch.clear();
    slots.clear();
    let mut swaps = 0usize;
    for &s in symbols {
        slots.push(s.slot());
        let GeneratorSymbol::Anti(index) = s else {
            continue;
        };
        let v = index.get();
        // insertion sort; the number of shifts is the inversion count
        let mut pos = scratch.len();
        while pos > 0 && scratch[pos - 1] > v {
            pos -= 1;
        }
        if pos > 0 && scratch[pos - 1] == v {
            return None;
        }
        swaps += scratch.len() - pos;
        scratch.insert(pos, v);
    }
    Some(Sign::from_parity(swaps % 2 == 1))
}

/// Rewrites `word` as `sign * canonical` using antisymmetry of the `Anti`
/// generators. A repeated index makes the class vanish and gives `None`.
pub fn canonical_reduce(word: &Word) -> Option<(Sign, CanonicalWord)> {
    let mut scratch = Vec::with_capacity(word.len());
    let mut slots = Vec::with_capacity(word.len());
    let sign = reduce_symbols(word.symbols(), &mut scratch, &mut slots)?;
    Some((sign, CanonicalWord(slots)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn a() -> GeneratorSymbol {
        GeneratorSymbol::Fixed('A')
    }

    fn b(i: u32) -> GeneratorSymbol {
        GeneratorSymbol::anti(i)
    }

    #[test]
    fn single_transposition_is_odd() {
        let (sign, cw) = canonical_reduce(&Word::new(vec![b(2), b(1), a()])).unwrap();
        assert_eq!(sign, Sign::Minus);
        assert_eq!(cw.slots(), &[Slot::Anti, Slot::Anti, Slot::Fixed('A')]);
    }

    #[test]
    fn repeated_index_vanishes() {
        assert!(canonical_reduce(&Word::new(vec![b(1), b(1), a()])).is_none());
        assert!(canonical_reduce(&Word::new(vec![b(4), a(), b(2), b(4)])).is_none());
    }

    #[test]
    fn three_cycle_is_even() {
        let (sign, cw) = canonical_reduce(&Word::new(vec![b(3), a(), b(1), b(2)])).unwrap();
        assert_eq!(sign, Sign::Plus);
        assert_eq!(cw.slots(), &[Slot::Anti, Slot::Fixed('A'), Slot::Anti, Slot::Anti]);
        assert_eq!(cw.intercalation(), Some(1));
    }

    #[test]
    fn empty_word_is_canonical() {
        let (sign, cw) = canonical_reduce(&Word::empty()).unwrap();
        assert_eq!(sign, Sign::Plus);
        assert!(cw.is_empty());
        assert_eq!(cw.intercalation(), None);
    }

    #[test]
    fn fill_and_representative_agree() {
        let cw = CanonicalWord::new(vec![Slot::Anti, Slot::Fixed('A'), Slot::Anti]);
        assert_eq!(cw.representative(), Word::new(vec![b(1), a(), b(2)]));
        let idx = [AntiIndex::new(4).unwrap(), AntiIndex::new(9).unwrap()];
        assert_eq!(cw.fill(&idx), Word::new(vec![b(4), a(), b(9)]));
        assert_eq!(alloc::format!("{cw}"), "b1Ab2");
    }

    fn inversion_parity(indices: &[u32]) -> bool {
        let mut inv = 0;
        for i in 0..indices.len() {
            for j in i + 1..indices.len() {
                if indices[i] > indices[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<GeneratorSymbol>> {
        prop::collection::vec(
            prop_oneof![
                1 => prop::sample::select(vec!['A', 'Z']).prop_map(GeneratorSymbol::Fixed),
                4 => (1u32..16).prop_map(GeneratorSymbol::anti),
            ],
            0..=max_len,
        )
    }

    proptest! {
        #[test]
        fn sign_matches_pairwise_inversions(symbols in arb_word(12)) {
            let word = Word::new(symbols);
            let indices: Vec<u32> = word.anti_indices().map(|i| i.get()).collect();
            let mut sorted = indices.clone();
            sorted.sort_unstable();
            let repeated = sorted.windows(2).any(|w| w[0] == w[1]);
            match canonical_reduce(&word) {
                None => prop_assert!(repeated),
                Some((sign, cw)) => {
                    prop_assert!(!repeated);
                    prop_assert_eq!(sign.is_minus(), inversion_parity(&indices));
                    let expected: Vec<Slot> = word.symbols().iter().map(|s| s.slot()).collect();
                    prop_assert_eq!(cw.slots(), &expected[..]);
                }
            }
        }

        #[test]
        fn repeated_index_always_vanishes(mut symbols in arb_word(10), at in 0usize..11, pick in 0usize..11) {
            let anti: Vec<GeneratorSymbol> = symbols.iter().copied().filter(|s| s.is_anti()).collect();
            prop_assume!(!anti.is_empty());
            let dup = anti[pick % anti.len()];
            let at = at % (symbols.len() + 1);
            symbols.insert(at, dup);
            prop_assert!(canonical_reduce(&Word::new(symbols)).is_none());
        }
    }
}
