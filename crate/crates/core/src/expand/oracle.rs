use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Range;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::perm::{decode_lehmer, factorial_u64};
use super::{ExpandError, Expander};
use crate::free::{AntisymElement, CanonicalWord, Coeff, FreeElement, GeneratorSymbol, Slot, Word};
use crate::lang::BracketExpr;

impl Expander {
    /// `sum over sigma in S_N of sgn(sigma) entries[sigma_1] ... entries[sigma_N]`.
    pub fn expand_bracket(&self, entries: &[FreeElement]) -> Result<FreeElement, ExpandError> {
        let n = entries.len();
        let perms = factorial_u64(n).ok_or(ExpandError::BudgetExceeded { needed: u128::MAX, budget: self.term_budget })?;
        let needed = entries.iter().fold(u128::from(perms), |acc, e| acc.saturating_mul(e.len() as u128));
        self.check_budget(needed)?;

        let terms: Vec<Vec<(&Word, &Coeff)>> = entries.iter().map(|e| e.iter().collect()).collect();
        let mut out = FreeElement::zero();
        let mut order = alloc::vec![0usize; n];
        let mut choice = alloc::vec![0usize; n];
        for rank in 0..perms {
            let sign = decode_lehmer(rank, &mut order);
            if order.iter().any(|&i| terms[i].is_empty()) {
                continue;
            }
            choice.iter_mut().for_each(|c| *c = 0);
            loop {
                let mut symbols = Vec::new();
                let mut coeff = Coeff::from_integer(BigInt::from(sign.to_i64()));
                for (slot, &entry) in order.iter().enumerate() {
                    let (w, c) = terms[entry][choice[slot]];
                    symbols.extend_from_slice(w.symbols());
                    coeff *= c;
                }
                out.add_term(Word::new(symbols), coeff);
                if !advance(&mut choice, |slot| terms[order[slot]].len()) {
                    break;
                }
            }
        }
        Ok(out)
    }

    /// Recursive expansion: atoms are words, products concatenate, brackets
    /// go through [`Expander::expand_bracket`].
    pub fn expand_expr(&self, e: &BracketExpr) -> Result<FreeElement, ExpandError> {
        self.check_budget(e.naive_word_count())?;
        self.expand_unchecked(e)
    }

    fn expand_unchecked(&self, e: &BracketExpr) -> Result<FreeElement, ExpandError> {
        match e {
            BracketExpr::Atom(s) => Ok(FreeElement::from_symbol(*s)),
            BracketExpr::Product(c) => {
                let mut acc = FreeElement::one();
                for child in c {
                    acc = acc.multiply(&self.expand_unchecked(child)?);
                }
                Ok(acc)
            }
            BracketExpr::Bracket(c) => {
                let entries = c.iter().map(|child| self.expand_unchecked(child)).collect::<Result<Vec<_>, _>>()?;
                self.expand_bracket(&entries)
            }
        }
    }
}

/// Odometer step over `choice`; returns false after the last combination.
fn advance(choice: &mut [usize], len: impl Fn(usize) -> usize) -> bool {
    for slot in (0..choice.len()).rev() {
        choice[slot] += 1;
        if choice[slot] < len(slot) {
            return true;
        }
        choice[slot] = 0;
    }
    false
}

type IntTerm = (Vec<GeneratorSymbol>, i128);

/// The outermost bracket of an expression, with every entry expanded to an
/// integer term list, ready to be enumerated in blocks of permutation ranks.
///
/// Words are reduced as soon as they are formed, so memory is bounded by the
/// number of classes rather than the number of words.
#[derive(Clone, Debug)]
pub struct OraclePlan {
    entries: Vec<Vec<IntTerm>>,
    permutations: u64,
    word_len: usize,
    naive_words: u128,
}

impl OraclePlan {
    pub fn new(expander: &Expander, e: &BracketExpr) -> Result<Self, ExpandError> {
        let naive_words = e.naive_word_count();
        expander.check_budget(naive_words)?;
        let children: Vec<FreeElement> = match e {
            BracketExpr::Bracket(c) => c.iter().map(|child| expander.expand_expr(child)).collect::<Result<_, _>>()?,
            other => alloc::vec![expander.expand_expr(other)?],
        };
        let entries = children
            .iter()
            .map(|el| {
                el.iter()
                    .map(|(w, c)| {
                        // naive expansions only ever produce integer coefficients
                        let n = c.to_integer().to_i128().expect("coefficient exceeds i128");
                        (w.symbols().to_vec(), n)
                    })
                    .collect()
            })
            .collect();
        let permutations = factorial_u64(children.len()).expect("budget bounds the entry count");
        Ok(OraclePlan { entries, permutations, word_len: e.word_len(), naive_words })
    }

    /// Size of the rank space to partition.
    pub fn permutation_count(&self) -> u64 {
        self.permutations
    }

    /// Words the plan enumerates in total (after merging equal words inside
    /// each entry, so at most the naive count).
    pub fn enumerated_words(&self) -> u128 {
        self.entries.iter().fold(u128::from(self.permutations), |acc, e| acc.saturating_mul(e.len() as u128))
    }

    pub fn naive_words(&self) -> u128 {
        self.naive_words
    }

    /// Reduces every word generated by permutation ranks in `ranks`.
    pub fn run_block(&self, ranks: Range<u64>) -> ClassCounts {
        let n = self.entries.len();
        let mut counts = ClassCounts::default();
        if self.entries.iter().any(Vec::is_empty) {
            return counts;
        }
        let mut order = alloc::vec![0usize; n];
        let mut choice = alloc::vec![0usize; n];
        let mut word: Vec<GeneratorSymbol> = Vec::with_capacity(self.word_len);
        let mut scratch = Vec::with_capacity(self.word_len);
        let mut slots: Vec<Slot> = Vec::with_capacity(self.word_len);
        for rank in ranks {
            let sign = decode_lehmer(rank, &mut order).to_i64() as i128;
            choice.iter_mut().for_each(|c| *c = 0);
            loop {
                word.clear();
                let mut coeff = sign;
                for (slot, &entry) in order.iter().enumerate() {
                    let (w, c) = &self.entries[entry][choice[slot]];
                    word.extend_from_slice(w);
                    coeff *= c;
                }
                counts.words += 1;
                if let Some(s) = crate::free::reduce_symbols(&word, &mut scratch, &mut slots) {
                    counts.add(&slots, if s.is_minus() { -coeff } else { coeff });
                }
                if !advance(&mut choice, |slot| self.entries[order[slot]].len()) {
                    break;
                }
            }
        }
        counts
    }
}

/// Partial class map produced by one block of ranks. Merging is exact
/// integer addition, so any partition of the ranks gives the same total.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassCounts {
    classes: BTreeMap<CanonicalWord, i128>,
    words: u128,
}

impl ClassCounts {
    fn add(&mut self, slots: &[Slot], value: i128) {
        match self.classes.get_mut(slots) {
            Some(v) => *v += value,
            None => {
                self.classes.insert(CanonicalWord::new(slots.to_vec()), value);
            }
        }
    }

    pub fn merge(&mut self, other: ClassCounts) {
        for (k, v) in other.classes {
            *self.classes.entry(k).or_insert(0) += v;
        }
        self.words += other.words;
    }

    /// Classes touched so far, including ones that currently sum to zero.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn words(&self) -> u128 {
        self.words
    }

    pub fn into_element(self) -> AntisymElement {
        self.classes
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, Coeff::from_integer(BigInt::from(v))))
            .collect()
    }
}

/// Runs a plan; the std companion crate supplies a parallel implementation.
pub trait BlockRunner {
    fn run(&self, plan: &OraclePlan) -> ClassCounts;
}

/// Enumerates all ranks on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl BlockRunner for Sequential {
    fn run(&self, plan: &OraclePlan) -> ClassCounts {
        plan.run_block(0..plan.permutation_count())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::reduce_element;
    use crate::lang::parse;
    use alloc::string::ToString;
    use alloc::vec;
    use num_traits::Signed;

    fn fixed(c: char) -> FreeElement {
        FreeElement::from_symbol(GeneratorSymbol::Fixed(c))
    }

    fn int(n: i64) -> Coeff {
        Coeff::from_integer(BigInt::from(n))
    }

    fn word(s: &str) -> Word {
        s.chars().map(GeneratorSymbol::Fixed).collect()
    }

    #[test]
    fn three_bracket_of_generators() {
        let x = Expander::default().expand_bracket(&[fixed('A'), fixed('B'), fixed('C')]).unwrap();
        let expected: FreeElement = [("ABC", 1), ("ACB", -1), ("BCA", 1), ("BAC", -1), ("CAB", 1), ("CBA", -1)]
            .into_iter()
            .map(|(w, c)| (word(w), int(c)))
            .collect();
        assert_eq!(x, expected);
    }

    #[test]
    fn product_entry() {
        let x = Expander::default().expand_expr(&parse("[AD,B,C]").unwrap()).unwrap();
        let expected: FreeElement = [("ADBC", 1), ("ADCB", -1), ("BCAD", 1), ("BADC", -1), ("CADB", 1), ("CBAD", -1)]
            .into_iter()
            .map(|(w, c)| (word(w), int(c)))
            .collect();
        assert_eq!(x, expected);
    }

    #[test]
    fn equal_entries_cancel() {
        assert!(Expander::default().expand_bracket(&[fixed('A'), fixed('A')]).unwrap().is_zero());
    }

    #[test]
    fn single_entry_bracket_is_the_entry() {
        let e = Expander::default();
        assert_eq!(e.expand_expr(&parse("[A]").unwrap()).unwrap().to_string(), "A");
        assert_eq!(e.expand_bracket(&[]).unwrap(), FreeElement::one());
    }

    #[test]
    fn word_counts() {
        let e = Expander::default();
        assert_eq!(e.expand_expr(&parse("[[A b1] b2]").unwrap()).unwrap().len(), 4);
        let big = e.expand_expr(&parse("[[A[b1 b2 b3]b4]b5 b6]").unwrap()).unwrap();
        assert_eq!(big.len(), 216);
        assert!(big.iter().all(|(_, c)| c.abs() == int(1)));
    }

    #[test]
    fn budget_is_enforced() {
        let e = Expander::new(100);
        let expr = parse("[[A[bcd]e]fg]").unwrap();
        assert_eq!(e.expand_expr(&expr), Err(ExpandError::BudgetExceeded { needed: 216, budget: 100 }));
        assert!(matches!(e.oracle_profile(&expr), Err(ExpandError::BudgetExceeded { .. })));
        let entries = vec![fixed('A'); 6];
        assert!(matches!(e.expand_bracket(&entries), Err(ExpandError::BudgetExceeded { needed: 720, .. })));
    }

    #[test]
    fn eager_reduction_matches_materialized_reduction() {
        let e = Expander::default();
        for text in ["[[A[bcd]e]fg]", "[[Abc][def]g]", "[b1[b2 b3]]", "[A (b1 b2) [b3 A] b4]", "(A b2 b1)"] {
            let expr = parse(text).unwrap();
            assert_eq!(e.oracle_profile(&expr).unwrap(), reduce_element(&e.expand_expr(&expr).unwrap()), "{text}");
        }
    }

    #[test]
    fn blocks_merge_to_the_whole() {
        let e = Expander::default();
        let plan = OraclePlan::new(&e, &parse("[[A[bcd]e]fg]").unwrap()).unwrap();
        let whole = plan.run_block(0..plan.permutation_count());
        let mut merged = ClassCounts::default();
        for start in (0..plan.permutation_count()).step_by(4) {
            merged.merge(plan.run_block(start..(start + 4).min(plan.permutation_count())));
        }
        assert_eq!(merged, whole);
        assert_eq!(whole.words(), 216);
    }
}
