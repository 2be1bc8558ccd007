use alloc::string::String;
use core::fmt::{self, Write};

use num_traits::{One, Signed};

use super::ast::BracketExpr;
use crate::free::{Coeff, GeneratorSymbol, Word};

pub(crate) fn write_ascii(f: &mut dyn Write, e: &BracketExpr) -> fmt::Result {
    match e {
        BracketExpr::Atom(s) => write!(f, "{s}"),
        BracketExpr::Product(c) => {
            f.write_char('(')?;
            for child in c {
                write_ascii(f, child)?;
            }
            f.write_char(')')
        }
        BracketExpr::Bracket(c) => {
            f.write_char('[')?;
            for (i, child) in c.iter().enumerate() {
                if i > 0 {
                    f.write_char(' ')?;
                }
                write_ascii(f, child)?;
            }
            f.write_char(']')
        }
    }
}

/// ASCII notation; parses back to the same tree.
pub fn render_ascii(e: &BracketExpr) -> String {
    let mut s = String::new();
    write_ascii(&mut s, e).unwrap();
    s
}

fn write_latex_symbol(f: &mut dyn Write, s: GeneratorSymbol) -> fmt::Result {
    match s {
        GeneratorSymbol::Fixed(c) => f.write_char(c),
        GeneratorSymbol::Anti(i) => write!(f, "b_{{{i}}}"),
    }
}

fn write_latex(f: &mut dyn Write, e: &BracketExpr) -> fmt::Result {
    match e {
        BracketExpr::Atom(s) => write_latex_symbol(f, *s),
        BracketExpr::Product(c) => {
            f.write_str("\\left(")?;
            for child in c {
                write_latex(f, child)?;
            }
            f.write_str("\\right)")
        }
        BracketExpr::Bracket(c) => {
            f.write_str("\\left[")?;
            for child in c {
                f.write_char(' ')?;
                write_latex(f, child)?;
            }
            f.write_str(" \\right]")
        }
    }
}

/// LaTeX with `\left[ ... \right]` brackets and subscripted indices.
pub fn render_latex(e: &BracketExpr) -> String {
    let mut s = String::new();
    write_latex(&mut s, e).unwrap();
    s
}

pub fn latex_word(w: &Word) -> String {
    let mut s = String::new();
    if w.is_empty() {
        s.push('1');
    }
    for &sym in w.symbols() {
        write_latex_symbol(&mut s, sym).unwrap();
    }
    s
}

/// `c_1 w_1 - c_2 w_2 + ...` with LaTeX fractions.
pub fn latex_element<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (Word, &'a Coeff)>,
{
    let mut s = String::new();
    for (i, (word, c)) in terms.into_iter().enumerate() {
        match (i == 0, c.is_negative()) {
            (true, true) => s.push('-'),
            (true, false) => {}
            (false, true) => s.push_str(" - "),
            (false, false) => s.push_str(" + "),
        }
        let mag = c.abs();
        if !mag.is_one() {
            if mag.is_integer() {
                write!(s, "{}~", mag.numer()).unwrap();
            } else {
                write!(s, "\\frac{{{}}}{{{}}}~", mag.numer(), mag.denom()).unwrap();
            }
        }
        s.push_str(&latex_word(&word));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
