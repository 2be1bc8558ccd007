//! Bracket expressions and their textual notation.
//!
//! The ASCII grammar:
//!
//! ```text
//! expr  := atom | '[' entry (','? entry)* ']' | '(' entry+ ')'
//! atom  := UPPER            fixed generator
//!        | lower digits?    antisymmetrized generator
//! ```
//!
//! Inside a bracket, juxtaposed items are separate entries unless the
//! bracket uses commas; then each comma-separated group is one entry and a
//! group of several items is their product, so `[AD,B,C]` reads as
//! `[(AD) B C]`. Bare lowercase letters get indices in order of first
//! appearance, skipping indices written explicitly elsewhere.

mod ast;
mod parse;
mod render;

pub use ast::{BracketExpr, ValidationError};
pub use parse::{parse, parse_with, ParseError, ParseErrorKind, ParseOptions};
pub use render::{latex_element, latex_word, render_ascii, render_latex};
