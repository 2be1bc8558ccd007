use core::fmt;
use core::num::NonZeroU32;

/// Index of a generator in the antisymmetrized family (`b3`, `B_3`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntiIndex(NonZeroU32);

impl AntiIndex {
    /// Returns `None` for zero; indices start at 1.
    pub fn new(index: u32) -> Option<Self> {
        NonZeroU32::new(index).map(AntiIndex)
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }
}

impl fmt::Display for AntiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A generator of the free algebra.
///
/// `Fixed` generators (the `A` of the bracket identities) are never
/// relabeled. `Anti` generators are the ones every identity is implicitly
/// antisymmetrized over; two of them are equal iff their indices are.
///
/// The derived order puts every `Fixed` before every `Anti`, then compares
/// by name or index. Word and term-map ordering is built on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorSymbol {
    Fixed(char),
    Anti(AntiIndex),
}

impl GeneratorSymbol {
    /// Shorthand for `Anti(index)`. Panics on zero.
    pub fn anti(index: u32) -> Self {
        GeneratorSymbol::Anti(AntiIndex::new(index).expect("anti indices are positive"))
    }

    pub fn anti_index(self) -> Option<AntiIndex> {
        match self {
            GeneratorSymbol::Anti(i) => Some(i),
            GeneratorSymbol::Fixed(_) => None,
        }
    }

    pub fn is_anti(self) -> bool {
        matches!(self, GeneratorSymbol::Anti(_))
    }

    /// The slot this symbol occupies in a canonical word.
    pub fn slot(self) -> Slot {
        match self {
            GeneratorSymbol::Fixed(c) => Slot::Fixed(c),
            GeneratorSymbol::Anti(_) => Slot::Anti,
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSymbol::Fixed(c) => write!(f, "{c}"),
            GeneratorSymbol::Anti(i) => write!(f, "b{i}"),
        }
    }
}

/// One position of a canonical word: a fixed generator, or a placeholder
/// for "the next antisymmetrized generator in ascending order".
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    Fixed(char),
    Anti,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slot::Fixed(c) => write!(f, "{c}"),
            Slot::Anti => f.write_str("b*"),
        }
    }
}
