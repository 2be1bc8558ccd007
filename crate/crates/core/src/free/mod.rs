//! Free associative algebra over fixed and antisymmetrized generators.

mod antisym;
mod element;
mod symbol;
mod word;

pub use antisym::{reduce_element, AntisymElement};
pub use element::{Coeff, FreeElement};
pub use symbol::{AntiIndex, GeneratorSymbol, Slot};
pub use word::{canonical_reduce, reduce_symbols, CanonicalWord, Sign, Word};
