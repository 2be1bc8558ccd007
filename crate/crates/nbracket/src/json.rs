//! JSON forms of reports, expansions and reductions.
//!
//! Integer coefficients are JSON numbers of arbitrary size; other rationals
//! are strings like `"3/10"`.

use nbracket_core::expand::ProfileRun;
use nbracket_core::identities::{IdentityReport, Value as Extra, Witness, WitnessLocation};
use nbracket_core::{AntisymElement, BracketExpr, CanonicalWord, Coeff, FreeElement, Slot};
use serde_json::{json, Map, Number, Value};

pub fn coeff(c: &Coeff) -> Value {
    if c.is_integer() {
        Value::Number(c.numer().to_string().parse::<Number>().expect("integer literal"))
    } else {
        Value::String(c.to_string())
    }
}

pub fn coeffs(list: &[Coeff]) -> Value {
    Value::Array(list.iter().map(coeff).collect())
}

fn class(c: &CanonicalWord) -> Value {
    let mut m = Map::new();
    m.insert("class".into(), c.to_string().into());
    m.insert("n".into(), c.intercalation().map_or(Value::Null, Value::from));
    Value::Object(m)
}

pub fn witness(w: &Witness) -> Value {
    let mut m = match &w.location {
        WitnessLocation::Class(c) => match class(c) {
            Value::Object(m) => m,
            _ => unreachable!(),
        },
        WitnessLocation::Quantity(q) => {
            let mut m = Map::new();
            m.insert("quantity".into(), (*q).into());
            m
        }
    };
    m.insert("expected".into(), coeff(&w.expected));
    m.insert("actual".into(), coeff(&w.actual));
    Value::Object(m)
}

fn extra(v: &Extra) -> Value {
    match v {
        Extra::Rational(c) => coeff(c),
        Extra::List(l) => coeffs(l),
        Extra::Text(s) => s.as_str().into(),
        Extra::Flag(b) => (*b).into(),
    }
}

/// Report in the stable key order; `elapsed_ms` is last.
pub fn report(r: &IdentityReport, elapsed_ms: u128) -> Value {
    let mut params = Map::new();
    params.insert(r.identity.param_name().into(), r.param.into());
    let mut m = Map::new();
    m.insert("identity".into(), r.identity.name().into());
    m.insert("params".into(), Value::Object(params));
    m.insert("status".into(), r.status.name().into());
    m.insert("profile".into(), coeffs(&r.profile));
    m.insert("sign_convention".into(), r.profile_convention.into());
    m.insert("witness".into(), r.witness.as_ref().map_or(Value::Null, witness));
    m.insert("method".into(), r.method.map_or(Value::Null, |m| m.name().into()));
    m.insert("words".into(), big(r.words));
    m.insert("peak_classes".into(), r.peak_classes.into());
    m.insert("extras".into(), Value::Object(r.extras.iter().map(|(k, v)| ((*k).into(), extra(v))).collect()));
    m.insert("elapsed_ms".into(), big(elapsed_ms));
    Value::Object(m)
}

fn big(v: u128) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integer literal"))
}

pub fn expansion(expr: &BracketExpr, e: &FreeElement) -> Value {
    let terms: Vec<Value> = e.iter().map(|(w, c)| json!({ "word": w.to_string(), "coeff": coeff(c) })).collect();
    json!({
        "expression": expr.to_string(),
        "words": terms.len(),
        "terms": terms,
    })
}

/// `m_n` with the `(-1)^n` sign folded out when every class is one fixed
/// generator among the same number of antisymmetrized slots, or the single
/// coefficient when every class is fully antisymmetrized.
pub fn folded_profile(e: &AntisymElement) -> Option<Vec<Coeff>> {
    let mut classes = e.classes();
    let Some(first) = classes.next() else {
        return Some(Vec::new());
    };
    let arity = first.arity();
    let fixed = first.slots().iter().find(|s| !matches!(s, Slot::Anti)).copied();
    if e.classes().any(|c| c.arity() != arity || c.len() != first.len()) {
        return None;
    }
    match fixed {
        None => Some(vec![e.coeff(first)]),
        Some(symbol) => {
            let mut m = vec![Coeff::from_integer(0.into()); arity + 1];
            for (c, v) in e {
                let n = c.intercalation()?;
                if c.slots()[n] != symbol {
                    return None;
                }
                m[n] = if n % 2 == 1 { -v.clone() } else { v.clone() };
            }
            Some(m)
        }
    }
}

pub fn reduction(expr: &BracketExpr, run: &ProfileRun) -> Value {
    let classes: Vec<Value> = run
        .profile
        .iter()
        .map(|(c, v)| {
            let mut m = match class(c) {
                Value::Object(m) => m,
                _ => unreachable!(),
            };
            m.insert("coeff".into(), coeff(v));
            Value::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("expression".into(), expr.to_string().into());
    m.insert("method".into(), run.method.name().into());
    m.insert("words".into(), big(run.words));
    m.insert("peak_classes".into(), run.peak_classes.into());
    m.insert("classes".into(), Value::Array(classes));
    if let Some(p) = folded_profile(&run.profile) {
        m.insert("profile".into(), coeffs(&p));
        m.insert("sign_convention".into(), "class coefficient (-1)^n m_n".into());
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nbracket_core::lang::parse;
    use nbracket_core::Expander;

    #[test]
    fn coefficients() {
        assert_eq!(coeff(&Coeff::from_integer((-36).into())).to_string(), "-36");
        assert_eq!(coeff(&Coeff::new(3.into(), 10.into())), Value::String("3/10".into()));
        let huge = Coeff::from_integer("123456789012345678901234567890".parse().unwrap());
        assert_eq!(coeff(&huge).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn folded_l1_profile() {
        let p = Expander::default().oracle_profile(&parse("[[A[bcd]e]fg]").unwrap()).unwrap();
        let m: Vec<String> = folded_profile(&p).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(m, ["24", "36", "36", "24", "36", "36", "24"]);
    }

    #[test]
    fn folded_anti_and_mixed() {
        let x = Expander::default();
        let p = x.oracle_profile(&parse("[b1 b2 b3]").unwrap()).unwrap();
        assert_eq!(folded_profile(&p).unwrap(), [Coeff::from_integer(6.into())]);
        let p = x.oracle_profile(&parse("[A B c]").unwrap()).unwrap();
        assert_eq!(folded_profile(&p), None);
    }
}
