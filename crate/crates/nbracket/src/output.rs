//! Text and LaTeX renderings.

use std::fmt::Write;

use nbracket_core::expand::ProfileRun;
use nbracket_core::identities::shapes::{bremner_side1, bremner_side2, decomposition_basis, double_bracket, flat_bracket};
use nbracket_core::identities::{CoefficientProfile, IdentityId, IdentityReport, Value};
use nbracket_core::lang::{latex_element, render_latex};
use nbracket_core::{AntisymElement, BracketExpr, Coeff, FreeElement};

fn list(values: &[Coeff]) -> String {
    values.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn expansion_text(e: &FreeElement) -> String {
    format!("{e}\n")
}

pub fn expansion_latex(expr: &BracketExpr, e: &FreeElement) -> String {
    format!("{} = {}\n", render_latex(expr), latex_element(e.iter().map(|(w, c)| (w.clone(), c))))
}

fn classes_latex(e: &AntisymElement) -> String {
    latex_element(e.iter().map(|(class, c)| (class.representative(), c)))
}

pub fn reduction_text(expr: &BracketExpr, run: &ProfileRun) -> String {
    let mut s = String::new();
    writeln!(s, "{expr}").unwrap();
    writeln!(s, "method: {}, {} words, {} classes", run.method.name(), run.words, run.profile.len()).unwrap();
    if run.profile.is_zero() {
        s.push_str("0\n");
        return s;
    }
    let width = run.profile.classes().map(|c| c.to_string().len()).max().unwrap_or(0).max(5);
    writeln!(s, "{:>3}  {:<width$}  coefficient", "n", "class").unwrap();
    for (class, c) in &run.profile {
        let n = class.intercalation().map_or("-".to_string(), |n| n.to_string());
        writeln!(s, "{n:>3}  {:<width$}  {c}", class.to_string()).unwrap();
    }
    s
}

pub fn reduction_latex(expr: &BracketExpr, run: &ProfileRun) -> String {
    format!("{} \\equiv {}\n", render_latex(expr), classes_latex(&run.profile))
}

pub fn report_text(r: &IdentityReport, elapsed_ms: u128) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}={}: {}", r.identity.name(), r.identity.param_name(), r.param, r.status.name()).unwrap();
    match r.identity {
        IdentityId::Sums => {
            if let Some(Value::Rational(c)) = r.extra("c_sum") {
                writeln!(s, "  sum of c_n = {c}").unwrap();
            }
            if let Some(Value::Rational(m)) = r.extra("m_sum") {
                writeln!(s, "  sum of m_n = {m}").unwrap();
            }
        }
        IdentityId::OddReduce => {
            if let Some(Value::Rational(k)) = r.extra("k") {
                writeln!(s, "  k = {k}").unwrap();
            }
        }
        _ => {}
    }
    writeln!(s, "  profile ({}): {}", r.profile_convention, list(&r.profile)).unwrap();
    if let Some(w) = &r.witness {
        writeln!(s, "  witness {w}").unwrap();
    }
    let method = r.method.map_or("closed form", |m| m.name());
    writeln!(s, "  method: {method}, {} words, {} peak classes, {elapsed_ms} ms", r.words, r.peak_classes).unwrap();
    s
}

fn is_negative(c: &Coeff) -> bool {
    *c < Coeff::from_integer(0.into())
}

/// `c~body` as a signed term, e.g. `-\frac{1}{6}~X`, with unit factors dropped.
fn signed(c: &Coeff, body: &str) -> (bool, String) {
    let mag = if is_negative(c) { -c.clone() } else { c.clone() };
    let factor = if mag == Coeff::from_integer(1.into()) {
        String::new()
    } else if mag.is_integer() {
        format!("{}~", mag.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}~", mag.numer(), mag.denom())
    };
    (is_negative(c), format!("{factor}{body}"))
}

fn join_signed(terms: &[(bool, String)]) -> String {
    let mut s = String::new();
    for (i, (neg, body)) in terms.iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn report_latex(r: &IdentityReport) -> String {
    let mut s = format!("% {} {}={}: {}\n", r.identity.name(), r.identity.param_name(), r.param, r.status.name());
    match r.identity {
        IdentityId::EvenGji => {
            writeln!(s, "{} = {}", render_latex(&double_bracket(r.param)), r.profile[0]).unwrap();
        }
        IdentityId::OddReduce => {
            if let Some(Value::Rational(k)) = r.extra("k") {
                let flat = render_latex(&flat_bracket(2 * r.param - 1));
                writeln!(s, "{} \\equiv {}", render_latex(&double_bracket(r.param)), join_signed(&[signed(k, &flat)])).unwrap();
            }
        }
        IdentityId::Bremner => {
            let side = |values: &[Coeff]| {
                let m = values.iter().map(|c| c.to_integer()).collect();
                classes_latex(&CoefficientProfile { half_order: r.param, m }.to_element())
            };
            writeln!(s, "{} \\equiv {}", render_latex(&bremner_side1(r.param)), side(&r.profile)).unwrap();
            if let Some(Value::List(side2)) = r.extra("side2") {
                writeln!(s, "{} \\equiv {}", render_latex(&bremner_side2(r.param)), side(side2)).unwrap();
            }
        }
        IdentityId::Sums => {
            if let Some(Value::Rational(c)) = r.extra("c_sum") {
                writeln!(s, "\\sum_{{n=0}}^{{{}}} c_n = {c}", 6 * r.param).unwrap();
            }
        }
        IdentityId::Decomp => {
            let basis = decomposition_basis(r.param);
            let terms: Vec<_> = r.profile.iter().zip(&basis).map(|(c, b)| signed(c, &render_latex(b))).collect();
            let rhs = if terms.is_empty() { "\\text{no exact decomposition}".to_string() } else { join_signed(&terms) };
            writeln!(s, "{} \\equiv {rhs}", render_latex(&bremner_side2(r.param))).unwrap();
        }
    }
    s
}
