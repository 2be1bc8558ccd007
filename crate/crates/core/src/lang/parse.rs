use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use super::ast::BracketExpr;
use crate::free::GeneratorSymbol;

/// Per-letter role overrides for the case convention.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Lowercase letters to read as fixed generators.
    pub fixed: BTreeSet<char>,
    /// Uppercase letters to read as antisymmetrized generators (`B1`, `B2`).
    pub anti: BTreeSet<char>,
}

impl ParseOptions {
    fn is_anti(&self, c: char) -> bool {
        if c.is_ascii_lowercase() {
            !self.fixed.contains(&c)
        } else {
            self.anti.contains(&c)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnbalancedClose(char),
    EmptyBracket,
    EmptyProduct,
    EmptyEntry,
    IndexOnFixed(char),
    ZeroIndex,
    IndexOverflow,
    TopLevelComma,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnbalancedClose(c) => write!(f, "unbalanced {c:?}"),
            ParseErrorKind::EmptyBracket => f.write_str("empty bracket"),
            ParseErrorKind::EmptyProduct => f.write_str("empty parentheses"),
            ParseErrorKind::EmptyEntry => f.write_str("empty entry between commas"),
            ParseErrorKind::IndexOnFixed(c) => write!(f, "fixed symbol {c:?} cannot carry an index"),
            ParseErrorKind::ZeroIndex => f.write_str("indices start at 1"),
            ParseErrorKind::IndexOverflow => f.write_str("index too large"),
            ParseErrorKind::TopLevelComma => f.write_str("commas are only allowed inside brackets"),
        }
    }
}

pub fn parse(text: &str) -> Result<BracketExpr, ParseError> {
    parse_with(text, &ParseOptions::default())
}

pub fn parse_with(text: &str, options: &ParseOptions) -> Result<BracketExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, options };
    let items = p.sequence(None)?;
    let raw = match items.len() {
        0 => return Err(p.error(ParseErrorKind::UnexpectedEnd)),
        1 => items.into_iter().next().unwrap(),
        _ => Raw::Product(items),
    };
    let mut explicit = BTreeSet::new();
    raw.explicit_indices(&mut explicit);
    let mut auto = AutoIndex { explicit, assigned: BTreeMap::new(), next: 1 };
    Ok(raw.resolve(&mut auto))
}

enum RawAtom {
    Fixed(char),
    Indexed(u32),
    Bare(char),
}

enum Raw {
    Atom(RawAtom),
    Product(Vec<Raw>),
    Bracket(Vec<Raw>),
}

struct AutoIndex {
    explicit: BTreeSet<u32>,
    assigned: BTreeMap<char, u32>,
    next: u32,
}

impl AutoIndex {
    fn index_for(&mut self, letter: char) -> u32 {
        if let Some(&i) = self.assigned.get(&letter) {
            return i;
        }
        while self.explicit.contains(&self.next) {
            self.next += 1;
        }
        let i = self.next;
        self.next += 1;
        self.assigned.insert(letter, i);
        i
    }
}

impl Raw {
    fn explicit_indices(&self, out: &mut BTreeSet<u32>) {
        match self {
            Raw::Atom(RawAtom::Indexed(i)) => {
                out.insert(*i);
            }
            Raw::Atom(_) => {}
            Raw::Product(c) | Raw::Bracket(c) => c.iter().for_each(|r| r.explicit_indices(out)),
        }
    }

    fn resolve(self, auto: &mut AutoIndex) -> BracketExpr {
        match self {
            Raw::Atom(RawAtom::Fixed(c)) => BracketExpr::Atom(GeneratorSymbol::Fixed(c)),
            Raw::Atom(RawAtom::Indexed(i)) => BracketExpr::anti(i),
            Raw::Atom(RawAtom::Bare(c)) => BracketExpr::anti(auto.index_for(c)),
            Raw::Product(c) => BracketExpr::Product(c.into_iter().map(|r| r.resolve(auto)).collect()),
            Raw::Bracket(c) => BracketExpr::Bracket(c.into_iter().map(|r| r.resolve(auto)).collect()),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    options: &'a ParseOptions,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { offset: self.pos, kind }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected_here(&self) -> ParseError {
        // report the full (possibly multi-byte) character at pos
        let rest = core::str::from_utf8(&self.src[self.pos..]).ok().and_then(|s| s.chars().next());
        match rest {
            Some(c) => self.error(ParseErrorKind::UnexpectedChar(c)),
            None => self.error(ParseErrorKind::UnexpectedChar(char::from(self.src[self.pos]))),
        }
    }

    /// Items up to `close` (or end of input when `None`), grouped by commas.
    /// Inside a bracket a comma-free list is one entry per item.
    fn sequence(&mut self, close: Option<u8>) -> Result<Vec<Raw>, ParseError> {
        let mut groups: Vec<Vec<Raw>> = alloc::vec![Vec::new()];
        let mut saw_comma = false;
        loop {
            match self.peek() {
                None => {
                    if close.is_some() {
                        return Err(self.error(ParseErrorKind::UnexpectedEnd));
                    }
                    break;
                }
                Some(c) if Some(c) == close => {
                    self.pos += 1;
                    break;
                }
                Some(b',') => {
                    if close.is_none() {
                        return Err(self.error(ParseErrorKind::TopLevelComma));
                    }
                    if groups.last().unwrap().is_empty() {
                        return Err(self.error(ParseErrorKind::EmptyEntry));
                    }
                    saw_comma = true;
                    self.pos += 1;
                    groups.push(Vec::new());
                }
                Some(c @ (b']' | b')')) => return Err(self.error(ParseErrorKind::UnbalancedClose(char::from(c)))),
                Some(_) => {
                    let item = self.item()?;
                    groups.last_mut().unwrap().push(item);
                }
            }
        }
        if saw_comma && groups.last().unwrap().is_empty() {
            self.pos -= 1;
            return Err(self.error(ParseErrorKind::EmptyEntry));
        }
        if close == Some(b']') && saw_comma {
            return Ok(groups
                .into_iter()
                .map(|mut g| if g.len() == 1 { g.pop().unwrap() } else { Raw::Product(g) })
                .collect());
        }
        Ok(groups.into_iter().flatten().collect())
    }

    fn item(&mut self) -> Result<Raw, ParseError> {
        let start = self.pos;
        let c = self.src[self.pos];
        match c {
            b'[' => {
                self.pos += 1;
                let entries = self.sequence(Some(b']'))?;
                if entries.is_empty() {
                    return Err(ParseError { offset: start, kind: ParseErrorKind::EmptyBracket });
                }
                Ok(Raw::Bracket(entries))
            }
            b'(' => {
                self.pos += 1;
                let items = self.sequence(Some(b')'))?;
                if items.is_empty() {
                    return Err(ParseError { offset: start, kind: ParseErrorKind::EmptyProduct });
                }
                Ok(Raw::Product(items))
            }
            c if c.is_ascii_alphabetic() => {
                self.pos += 1;
                self.atom(char::from(c))
            }
            _ => Err(self.unexpected_here()),
        }
    }

    fn atom(&mut self, letter: char) -> Result<Raw, ParseError> {
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = &self.src[digits_start..self.pos];
        let anti = self.options.is_anti(letter);
        if !anti {
            if !digits.is_empty() {
                return Err(ParseError { offset: digits_start, kind: ParseErrorKind::IndexOnFixed(letter) });
            }
            return Ok(Raw::Atom(RawAtom::Fixed(letter)));
        }
        if digits.is_empty() {
            return Ok(Raw::Atom(RawAtom::Bare(letter)));
        }
        let mut value: u32 = 0;
        for &d in digits {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u32::from(d - b'0')))
                .ok_or(ParseError { offset: digits_start, kind: ParseErrorKind::IndexOverflow })?;
        }
        if value == 0 {
            return Err(ParseError { offset: digits_start, kind: ParseErrorKind::ZeroIndex });
        }
        Ok(Raw::Atom(RawAtom::Indexed(value)))
    }
}
