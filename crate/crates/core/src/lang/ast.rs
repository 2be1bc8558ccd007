use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::free::{AntiIndex, GeneratorSymbol};

/// A nested bracket expression.
///
/// `Product` and `Bracket` hold at least one child; the parser never builds
/// empty ones. Whether each antisymmetrized index occurs once is a property
/// checked by [`BracketExpr::validate_multilinear`], not by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketExpr {
    Atom(GeneratorSymbol),
    Product(Vec<BracketExpr>),
    Bracket(Vec<BracketExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationError {
    RepeatedIndex(AntiIndex),
    EmptyNode,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationError::RepeatedIndex(i) => write!(f, "antisymmetrized index {i} appears more than once"),
            ValidationError::EmptyNode => f.write_str("empty bracket or product"),
        }
    }
}

impl BracketExpr {
    pub fn fixed(name: char) -> Self {
        BracketExpr::Atom(GeneratorSymbol::Fixed(name))
    }

    pub fn anti(index: u32) -> Self {
        BracketExpr::Atom(GeneratorSymbol::anti(index))
    }

    /// `[b_first .. b_last]` over consecutive indices.
    pub fn anti_bracket(first: u32, last: u32) -> Self {
        BracketExpr::Bracket((first..=last).map(BracketExpr::anti).collect())
    }

    pub fn as_anti_atom(&self) -> Option<AntiIndex> {
        match self {
            BracketExpr::Atom(s) => s.anti_index(),
            _ => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, BracketExpr::Atom(_))
    }

    pub fn children(&self) -> &[BracketExpr] {
        match self {
            BracketExpr::Atom(_) => &[],
            BracketExpr::Product(c) | BracketExpr::Bracket(c) => c,
        }
    }

    /// Every antisymmetrized index in left-to-right order, with repeats.
    pub fn anti_indices(&self) -> Vec<AntiIndex> {
        let mut out = Vec::new();
        self.collect_indices(&mut out);
        out
    }

    fn collect_indices(&self, out: &mut Vec<AntiIndex>) {
        match self {
            BracketExpr::Atom(s) => out.extend(s.anti_index()),
            BracketExpr::Product(c) | BracketExpr::Bracket(c) => c.iter().for_each(|e| e.collect_indices(out)),
        }
    }

    /// The antisymmetrized indices, sorted and deduplicated.
    pub fn index_set(&self) -> Vec<AntiIndex> {
        let mut v = self.anti_indices();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Checks that no node is empty and every antisymmetrized index occurs
    /// at most once, the shape every identity in this crate is stated for.
    pub fn validate_multilinear(&self) -> Result<(), ValidationError> {
        let mut seen = BTreeSet::new();
        self.validate_into(&mut seen)
    }

    fn validate_into(&self, seen: &mut BTreeSet<AntiIndex>) -> Result<(), ValidationError> {
        match self {
            BracketExpr::Atom(s) => {
                if let Some(i) = s.anti_index() {
                    if !seen.insert(i) {
                        return Err(ValidationError::RepeatedIndex(i));
                    }
                }
                Ok(())
            }
            BracketExpr::Product(c) | BracketExpr::Bracket(c) => {
                if c.is_empty() {
                    return Err(ValidationError::EmptyNode);
                }
                c.iter().try_for_each(|e| e.validate_into(seen))
            }
        }
    }

    /// Number of signed words the naive expansion generates, saturating.
    /// A bracket of `N` entries contributes `N!` times the product of its
    /// entries' counts.
    pub fn naive_word_count(&self) -> u128 {
        match self {
            BracketExpr::Atom(_) => 1,
            BracketExpr::Product(c) => c.iter().fold(1u128, |acc, e| acc.saturating_mul(e.naive_word_count())),
            BracketExpr::Bracket(c) => {
                let perms = (1..=c.len() as u128).fold(1u128, |acc, k| acc.saturating_mul(k));
                c.iter().fold(perms, |acc, e| acc.saturating_mul(e.naive_word_count()))
            }
        }
    }

    /// Length of every word in the expansion.
    pub fn word_len(&self) -> usize {
        match self {
            BracketExpr::Atom(_) => 1,
            BracketExpr::Product(c) | BracketExpr::Bracket(c) => c.iter().map(BracketExpr::word_len).sum(),
        }
    }

    /// Follows child positions from the root.
    pub fn at_path(&self, path: &[usize]) -> Option<&BracketExpr> {
        path.iter().try_fold(self, |node, &i| node.children().get(i))
    }

    pub(crate) fn at_path_mut(&mut self, path: &[usize]) -> Option<&mut BracketExpr> {
        let mut node = self;
        for &i in path {
            node = match node {
                BracketExpr::Atom(_) => return None,
                BracketExpr::Product(c) | BracketExpr::Bracket(c) => c.get_mut(i)?,
            };
        }
        Some(node)
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::render::write_ascii(f, self)
    }
}
