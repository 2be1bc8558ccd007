//! Exact symbolic engine for Nambu N-brackets.
//!
//! An N-bracket `[A_1 ... A_N]` is the signed sum of all `N!` orderings of
//! its entries, taken in the free associative algebra. This crate expands
//! nested brackets into words, reduces the result modulo total
//! antisymmetrization of a distinguished family of generators, and checks
//! the identities those brackets satisfy.
//!
//! The crate is `no_std` and only needs `alloc`. Threading, timing and file
//! formats live in the `nbracket` companion crate.
//!
//! Layout:
//!
//! - [`free`]: generators, words, canonical reduction and formal sums with
//!   exact rational coefficients.
//! - [`lang`]: the bracket expression AST with its ASCII and LaTeX notation.
//! - [`expand`]: the brute-force oracle expansion and the lemma-based fast
//!   path that never materializes the factorial word list.
//! - [`identities`]: verifiers and closed forms for the bracket identities.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod expand;
pub mod free;
pub mod identities;
pub mod lang;

pub use expand::{ExpandError, Expander, Method};
pub use free::{AntiIndex, AntisymElement, CanonicalWord, Coeff, FreeElement, GeneratorSymbol, Sign, Slot, Word};
pub use lang::{BracketExpr, ParseError, ParseOptions};
