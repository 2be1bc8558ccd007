use alloc::vec::Vec;

use super::lemma::{factorial_coeff, lemma1_expand_with, lemma2_expand_with, placement_expand, placement_work, Entry};
use super::perm::parity;
use super::{ExpandError, Expander, Method, ProfileRun};
use crate::free::{canonical_reduce, reduce_element, AntisymElement, Coeff, FreeElement, Sign, Word};
use crate::lang::BracketExpr;

pub(super) fn fast_run(expander: &Expander, e: &BracketExpr) -> Result<ProfileRun, ExpandError> {
    e.validate_multilinear().map_err(ExpandError::NotMultilinear)?;
    let mut state = State { budget: expander.term_budget, words: 0, peak: 0 };
    let rep = state.eval(e)?;
    let profile = reduce_element(&rep);
    Ok(ProfileRun { profile, method: Method::Fast, words: state.words, peak_classes: state.peak })
}

struct State {
    budget: u64,
    words: u128,
    peak: usize,
}

fn apply_sign(e: AntisymElement, sign: Sign) -> AntisymElement {
    if sign.is_minus() {
        e.scale(&-Coeff::from_integer(1.into()))
    } else {
        e
    }
}

impl State {
    fn spend(&mut self, words: u128) -> Result<(), ExpandError> {
        self.words = self.words.saturating_add(words);
        if self.words > u128::from(self.budget) {
            return Err(ExpandError::BudgetExceeded { needed: self.words, budget: self.budget });
        }
        Ok(())
    }

    /// Value of `e` in reduced form: one word per class, its antisymmetrized
    /// indices ascending. Subtrees have disjoint index sets, so reducing a
    /// subtree before embedding it commutes with reducing the whole word.
    fn eval(&mut self, e: &BracketExpr) -> Result<FreeElement, ExpandError> {
        let reduced = match e {
            BracketExpr::Atom(s) => return Ok(FreeElement::from_symbol(*s)),
            BracketExpr::Product(children) => {
                let parts = children.iter().map(|c| self.eval(c)).collect::<Result<Vec<_>, _>>()?;
                self.spend(parts.iter().fold(1u128, |acc, p| acc.saturating_mul(p.len() as u128)))?;
                let product = parts.iter().fold(FreeElement::one(), |acc, p| acc.multiply(p));
                reduce_element(&product)
            }
            BracketExpr::Bracket(children) => self.bracket(children)?,
        };
        self.peak = self.peak.max(reduced.len());
        Ok(reduced.fill(&e.index_set()))
    }

    fn bracket(&mut self, children: &[BracketExpr]) -> Result<AntisymElement, ExpandError> {
        let nested = children.iter().filter(|c| !c.is_atom()).count();
        if nested > 2 {
            return Err(ExpandError::UnsupportedShape("more than two non-atomic entries in one bracket"));
        }
        let values: Vec<Option<FreeElement>> = children
            .iter()
            .map(|c| match c.as_anti_atom() {
                Some(_) => Ok(None),
                None => self.eval(c).map(Some),
            })
            .collect::<Result<_, _>>()?;
        let entries: Vec<Entry<'_>> = children
            .iter()
            .zip(&values)
            .map(|(c, v)| match v {
                Some(block) => Entry::Block(block),
                None => Entry::Atom(c.as_anti_atom().unwrap()),
            })
            .collect();
        self.spend(placement_work(&entries))?;

        let block_pos: Vec<usize> = (0..entries.len()).filter(|&i| matches!(entries[i], Entry::Block(_))).collect();
        let atom_pos: Vec<usize> = (0..entries.len()).filter(|&i| matches!(entries[i], Entry::Atom(_))).collect();
        let slots: Vec<_> = atom_pos.iter().map(|&i| children[i].as_anti_atom().unwrap()).collect();
        let block = |i: usize| values[i].as_ref().unwrap();

        let out = match block_pos[..] {
            [] => {
                // all atoms: N! times the ordered product
                let word: Word = children.iter().map(|c| match c {
                    BracketExpr::Atom(s) => *s,
                    _ => unreachable!(),
                }).collect();
                let mut out = AntisymElement::zero();
                if let Some((sign, class)) = canonical_reduce(&word) {
                    let n = factorial_coeff(children.len());
                    out.add_class(class, if sign.is_minus() { -n } else { n });
                }
                out
            }
            [p] => {
                let order: Vec<usize> = core::iter::once(p).chain(atom_pos.iter().copied()).collect();
                apply_sign(lemma1_expand_with(block(p), &slots), parity(&order))
            }
            [p, q] => {
                let order: Vec<usize> =
                    core::iter::once(p).chain(atom_pos.iter().copied()).chain(core::iter::once(q)).collect();
                apply_sign(lemma2_expand_with(block(p), block(q), &slots), parity(&order))
            }
            _ => placement_expand(&entries),
        };
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parse;
    use num_bigint::BigInt;

    fn check(text: &str) {
        let x = Expander::default();
        let e = parse(text).unwrap();
        assert_eq!(x.fast_profile(&e).unwrap(), x.oracle_profile(&e).unwrap(), "{text}");
    }

    #[test]
    fn agrees_with_oracle_on_paper_shapes() {
        check("[[A[bcd]e]fg]");
        check("[[Abc][def]g]");
        check("[b1[b2b3]]");
        check("[b1 b2 b3[b4b5b6b7]]");
        check("[A[bcd][efg]]");
        check("[Abcdefg]");
    }

    #[test]
    fn agrees_on_reordered_and_mixed_entries() {
        check("[b3 [A b5] b1 (b2 b4)]");
        check("[(b4 A) b2 [b1 b3 b5]]");
        check("[A B C]");
        check("[A, A]");
        check("[A]");
        check("A b2 b1");
        check("[[A b2] Z b1]");
        check("[Z [b3 b1 b2] A b4]");
    }

    #[test]
    fn bremner_l1_profile() {
        let p = Expander::default().fast_profile(&parse("[[A[bcd]e]fg]").unwrap()).unwrap();
        let expected = [24, -36, 36, -24, 36, -36, 24];
        assert_eq!(p.len(), 7);
        for (class, c) in &p {
            let n = class.intercalation().unwrap();
            assert_eq!(*c, Coeff::from_integer(BigInt::from(expected[n])));
        }
    }

    #[test]
    fn too_many_nested_entries() {
        let e = parse("[[A b1] [b2 b3] (b4 b5)]").unwrap();
        assert!(matches!(Expander::default().fast_profile(&e), Err(ExpandError::UnsupportedShape(_))));
    }

    #[test]
    fn repeated_indices_are_rejected() {
        let e = parse("[b1 [b1 b2]]").unwrap();
        assert!(matches!(Expander::default().fast_profile(&e), Err(ExpandError::NotMultilinear(_))));
    }

    #[test]
    fn fast_path_respects_budget() {
        let e = parse("[[A[bcd]e]fg]").unwrap();
        assert!(matches!(Expander::new(5).fast_profile(&e), Err(ExpandError::BudgetExceeded { .. })));
    }
}
