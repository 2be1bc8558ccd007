//! Closed-form expansions of a bracket whose entries are one or two
//! arbitrary elements plus `J` antisymmetrized atoms.
//!
//! With the atoms antisymmetrized, every ordering of them collapses onto the
//! ascending one, so only the placements of the non-atomic entries remain:
//!
//! ```text
//! [A B_1..B_J]   = J! sum_j (-1)^j B_1..B_j A B_j+1..B_J
//! [A B_1..B_J Z] = J! sum_j sum_k (-1)^(j+k) B_1..B_k A B_k+1..B_J-j Z B_J-j+1..B_J
//!                - J! sum_j sum_k (-1)^(j+k) B_1..B_k Z B_k+1..B_J-j A B_J-j+1..B_J
//! ```
//!
//! Inputs may themselves contain antisymmetrized generators as long as they
//! are disjoint from the atoms; every generated word is reduced in full.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::perm::{factorial, parity};
use crate::free::{canonical_reduce, AntiIndex, AntisymElement, Coeff, FreeElement, GeneratorSymbol, Sign, Word};

fn signed(c: &Coeff, sign: Sign) -> Coeff {
    if sign.is_minus() {
        -c
    } else {
        c.clone()
    }
}

fn atoms(slots: &[AntiIndex]) -> Vec<GeneratorSymbol> {
    slots.iter().map(|&i| GeneratorSymbol::Anti(i)).collect()
}

/// The `count` smallest positive indices not used by any word of `elements`.
fn fresh_indices(elements: &[&FreeElement], count: usize) -> Vec<AntiIndex> {
    let used: BTreeSet<AntiIndex> = elements
        .iter()
        .flat_map(|e| e.iter())
        .flat_map(|(w, _)| w.anti_indices().collect::<Vec<_>>())
        .collect();
    (1u32..)
        .filter_map(AntiIndex::new)
        .filter(|i| !used.contains(i))
        .take(count)
        .collect()
}

fn accumulate(out: &mut AntisymElement, parts: &[&[GeneratorSymbol]], coeff: Coeff) {
    let word: Word = parts.iter().flat_map(|p| p.iter().copied()).collect();
    if let Some((sign, class)) = canonical_reduce(&word) {
        out.add_class(class, signed(&coeff, sign));
    }
}

/// `[head B_1..B_J]` with fresh atoms numbered after the head's indices.
pub fn lemma1_expand(head: &FreeElement, j: usize) -> AntisymElement {
    lemma1_expand_with(head, &fresh_indices(&[head], j))
}

/// `[head B_1..B_J]` with `B_i = b_{slots[i]}`.
pub fn lemma1_expand_with(head: &FreeElement, slots: &[AntiIndex]) -> AntisymElement {
    let b = atoms(slots);
    let jf = Coeff::from_integer(factorial(b.len()));
    let mut out = AntisymElement::zero();
    for j in 0..=b.len() {
        let weight = signed(&jf, Sign::from_parity(j % 2 == 1));
        for (w, c) in head {
            accumulate(&mut out, &[&b[..j], w.symbols(), &b[j..]], &weight * c);
        }
    }
    out
}

/// `[head B_1..B_J tail]` with fresh atoms.
pub fn lemma2_expand(head: &FreeElement, tail: &FreeElement, j: usize) -> AntisymElement {
    lemma2_expand_with(head, tail, &fresh_indices(&[head, tail], j))
}

/// `[head B_1..B_J tail]` with `B_i = b_{slots[i]}`.
pub fn lemma2_expand_with(head: &FreeElement, tail: &FreeElement, slots: &[AntiIndex]) -> AntisymElement {
    let b = atoms(slots);
    let n = b.len();
    let jf = Coeff::from_integer(factorial(n));
    let mut out = AntisymElement::zero();
    for j in 0..=n {
        for k in 0..=n - j {
            let weight = signed(&jf, Sign::from_parity((j + k) % 2 == 1));
            let neg = -&weight;
            let (left, middle, right) = (&b[..k], &b[k..n - j], &b[n - j..]);
            for (wa, ca) in head {
                for (wz, cz) in tail {
                    let c = ca * cz;
                    accumulate(&mut out, &[left, wa.symbols(), middle, wz.symbols(), right], &weight * &c);
                    accumulate(&mut out, &[left, wz.symbols(), middle, wa.symbols(), right], &neg * &c);
                }
            }
        }
    }
    out
}

/// One entry of a bracket handed to [`placement_expand`].
pub(crate) enum Entry<'a> {
    Atom(AntiIndex),
    Block(&'a FreeElement),
}

/// Number of words [`placement_expand`] generates.
pub(crate) fn placement_work(entries: &[Entry<'_>]) -> u128 {
    let n = entries.len();
    let blocks: Vec<&FreeElement> = entries
        .iter()
        .filter_map(|e| match e {
            Entry::Block(b) => Some(*b),
            Entry::Atom(_) => None,
        })
        .collect();
    let placements = (n - blocks.len() + 1..=n).fold(1u128, |acc, k| acc.saturating_mul(k as u128));
    blocks.iter().fold(placements, |acc, b| acc.saturating_mul(b.len() as u128))
}

/// General form for any number of non-atomic entries: every placement of
/// the blocks among the `N` positions, atoms kept in their original
/// relative order, weighted by `J!` and the sign of the entry permutation.
pub(crate) fn placement_expand(entries: &[Entry<'_>]) -> AntisymElement {
    let n = entries.len();
    let block_ids: Vec<usize> = (0..n).filter(|&i| matches!(entries[i], Entry::Block(_))).collect();
    let atom_ids: Vec<usize> = (0..n).filter(|&i| matches!(entries[i], Entry::Atom(_))).collect();
    let jf = Coeff::from_integer(factorial(atom_ids.len()));
    let mut out = AntisymElement::zero();
    let mut positions = Vec::with_capacity(block_ids.len());
    let mut taken = alloc::vec![false; n];
    place(entries, &block_ids, &atom_ids, &mut positions, &mut taken, &jf, &mut out);
    out
}

fn place(
    entries: &[Entry<'_>],
    block_ids: &[usize],
    atom_ids: &[usize],
    positions: &mut Vec<usize>,
    taken: &mut [bool],
    jf: &Coeff,
    out: &mut AntisymElement,
) {
    if positions.len() < block_ids.len() {
        for p in 0..taken.len() {
            if !taken[p] {
                taken[p] = true;
                positions.push(p);
                place(entries, block_ids, atom_ids, positions, taken, jf, out);
                positions.pop();
                taken[p] = false;
            }
        }
        return;
    }
    // order[p] = original entry index at position p
    let mut order = alloc::vec![usize::MAX; taken.len()];
    for (b, &p) in positions.iter().enumerate() {
        order[p] = block_ids[b];
    }
    let mut next_atom = atom_ids.iter();
    for slot in order.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = *next_atom.next().unwrap();
    }
    let weight = signed(jf, parity(&order));
    let mut acc: Vec<(Vec<GeneratorSymbol>, Coeff)> = alloc::vec![(Vec::new(), weight)];
    for &i in &order {
        acc = match &entries[i] {
            Entry::Atom(a) => acc
                .into_iter()
                .map(|(mut w, c)| {
                    w.push(GeneratorSymbol::Anti(*a));
                    (w, c)
                })
                .collect(),
            Entry::Block(el) => acc
                .iter()
                .flat_map(|(w, c)| {
                    el.iter().map(move |(bw, bc)| {
                        let mut w = w.clone();
                        w.extend_from_slice(bw.symbols());
                        (w, c * bc)
                    })
                })
                .collect(),
        };
    }
    for (w, c) in acc {
        if let Some((sign, class)) = canonical_reduce(&Word::new(w)) {
            out.add_class(class, signed(&c, sign));
        }
    }
}

/// `J!` as a coefficient.
pub(crate) fn factorial_coeff(n: usize) -> Coeff {
    Coeff::from_integer(factorial(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::Expander;
    use crate::free::{CanonicalWord, Slot};
    use crate::lang::BracketExpr;
    use alloc::vec;
    use num_bigint::BigInt;

    fn int(n: i64) -> Coeff {
        Coeff::from_integer(BigInt::from(n))
    }

    fn fixed(c: char) -> FreeElement {
        FreeElement::from_symbol(GeneratorSymbol::Fixed(c))
    }

    fn class(pattern: &str) -> CanonicalWord {
        CanonicalWord::new(pattern.chars().map(|c| if c == '*' { Slot::Anti } else { Slot::Fixed(c) }).collect())
    }

    /// `[A b1..bJ]` or `[A b1..bJ Z]` as an expression, for the oracle.
    fn bracket(head: char, j: u32, tail: Option<char>) -> BracketExpr {
        let mut entries = vec![BracketExpr::fixed(head)];
        entries.extend((1..=j).map(BracketExpr::anti));
        entries.extend(tail.map(BracketExpr::fixed));
        BracketExpr::Bracket(entries)
    }

    #[test]
    fn lemma1_small_cases() {
        let one = lemma1_expand(&fixed('A'), 1);
        let expected: AntisymElement = [(class("A*"), int(1)), (class("*A"), int(-1))].into_iter().collect();
        assert_eq!(one, expected);

        let two = lemma1_expand(&fixed('A'), 2);
        let expected: AntisymElement =
            [(class("A**"), int(2)), (class("*A*"), int(-2)), (class("**A"), int(2))].into_iter().collect();
        assert_eq!(two, expected);
    }

    #[test]
    fn lemma2_without_atoms_is_a_commutator() {
        let r = lemma2_expand(&fixed('A'), &fixed('Z'), 0);
        let expected: AntisymElement = [(class("AZ"), int(1)), (class("ZA"), int(-1))].into_iter().collect();
        assert_eq!(r, expected);
    }

    #[test]
    fn lemma1_matches_oracle() {
        let x = Expander::default();
        for j in 0..=6 {
            assert_eq!(lemma1_expand(&fixed('A'), j as usize), x.oracle_profile(&bracket('A', j, None)).unwrap(), "J={j}");
        }
    }

    #[test]
    fn lemma2_matches_oracle() {
        let x = Expander::default();
        for j in 0..=5 {
            let lhs = lemma2_expand(&fixed('A'), &fixed('Z'), j as usize);
            assert_eq!(lhs, x.oracle_profile(&bracket('A', j, Some('Z'))).unwrap(), "J={j}");
        }
    }

    #[test]
    fn fresh_atoms_skip_used_indices() {
        let head = FreeElement::from_word(Word::new(vec![GeneratorSymbol::Fixed('A'), GeneratorSymbol::anti(1)]));
        let idx = fresh_indices(&[&head], 2);
        assert_eq!(idx, vec![AntiIndex::new(2).unwrap(), AntiIndex::new(3).unwrap()]);
    }

    #[test]
    fn general_placement_reduces_to_lemmas() {
        let a = fixed('A');
        let z = fixed('Z');
        let slots: Vec<AntiIndex> = (1..=3).filter_map(AntiIndex::new).collect();
        let mut entries = vec![Entry::Block(&a)];
        entries.extend(slots.iter().map(|&s| Entry::Atom(s)));
        assert_eq!(placement_expand(&entries), lemma1_expand_with(&a, &slots));
        entries.push(Entry::Block(&z));
        assert_eq!(placement_expand(&entries), lemma2_expand_with(&a, &z, &slots));
        assert_eq!(placement_work(&entries), 20);
    }
}
