use core::fmt;

use num_bigint::BigInt;

use super::perm::factorial;
use crate::lang::{BracketExpr, ValidationError};

/// An expression with an integer prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scaled {
    pub factor: BigInt,
    pub expr: BracketExpr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupplantError {
    NoSuchNode,
    NotABracket,
    ContainsFixed,
    ContainsNested,
    NotMultilinear(ValidationError),
}

impl fmt::Display for SupplantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupplantError::NoSuchNode => f.write_str("path does not address a node"),
            SupplantError::NotABracket => f.write_str("node is not a bracket"),
            SupplantError::ContainsFixed => f.write_str("bracket contains a fixed symbol"),
            SupplantError::ContainsNested => f.write_str("bracket contains a nested bracket or product"),
            SupplantError::NotMultilinear(e) => write!(f, "expression is not multilinear: {e}"),
        }
    }
}

fn check_eligible(node: &BracketExpr) -> Result<usize, SupplantError> {
    let BracketExpr::Bracket(entries) = node else {
        return Err(SupplantError::NotABracket);
    };
    for entry in entries {
        match entry {
            BracketExpr::Atom(s) if s.is_anti() => {}
            BracketExpr::Atom(_) => return Err(SupplantError::ContainsFixed),
            _ => return Err(SupplantError::ContainsNested),
        }
    }
    Ok(entries.len())
}

/// Replaces the bracket at `path` (child positions from the root) by the
/// ordered product of its entries, times `arity!`.
///
/// Under total antisymmetrization a bracket of distinct antisymmetrized
/// atoms that occur nowhere else equals `arity!` times their product, so the
/// profile of the result equals the profile of `e`.
pub fn supplant_inner(e: &BracketExpr, path: &[usize]) -> Result<Scaled, SupplantError> {
    e.validate_multilinear().map_err(SupplantError::NotMultilinear)?;
    let arity = check_eligible(e.at_path(path).ok_or(SupplantError::NoSuchNode)?)?;
    let mut expr = e.clone();
    let node = expr.at_path_mut(path).unwrap();
    *node = BracketExpr::Product(node.children().to_vec());
    Ok(Scaled { factor: factorial(arity), expr })
}

/// Supplants every eligible bracket, innermost first, accumulating the
/// factorial prefactors. Brackets that only become eligible after an inner
/// rewrite are left alone, since their entries are then products.
pub fn supplant_all(e: &BracketExpr) -> Result<Scaled, SupplantError> {
    e.validate_multilinear().map_err(SupplantError::NotMultilinear)?;
    let mut factor = BigInt::from(1u8);
    let expr = rewrite(e, &mut factor);
    Ok(Scaled { factor, expr })
}

fn rewrite(e: &BracketExpr, factor: &mut BigInt) -> BracketExpr {
    if let Ok(arity) = check_eligible(e) {
        *factor *= factorial(arity);
        return BracketExpr::Product(e.children().to_vec());
    }
    match e {
        BracketExpr::Atom(_) => e.clone(),
        BracketExpr::Product(c) => BracketExpr::Product(c.iter().map(|x| rewrite(x, factor)).collect()),
        BracketExpr::Bracket(c) => BracketExpr::Bracket(c.iter().map(|x| rewrite(x, factor)).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expand::Expander;
    use crate::lang::parse;

    #[test]
    fn three_anti_atoms() {
        let s = supplant_inner(&parse("[b1b2b3]").unwrap(), &[]).unwrap();
        assert_eq!(s.factor, BigInt::from(6));
        assert_eq!(s.expr, parse("(b1b2b3)").unwrap());
    }

    #[test]
    fn single_atom() {
        let s = supplant_inner(&parse("[b1]").unwrap(), &[]).unwrap();
        assert_eq!(s.factor, BigInt::from(1));
        assert_eq!(s.expr, parse("(b1)").unwrap());
    }

    #[test]
    fn profile_is_invariant() {
        let e = parse("[[A[bcd]e]fg]").unwrap();
        let s = supplant_inner(&e, &[0, 1]).unwrap();
        assert_eq!(s.expr, parse("[[A(bcd)e]fg]").unwrap());
        let x = Expander::default();
        let direct = x.oracle_profile(&e).unwrap();
        let supplanted = x.oracle_run_scaled(&s, &super::super::Sequential).unwrap().profile;
        assert_eq!(direct, supplanted);
    }

    #[test]
    fn rejections() {
        let e = parse("[[A b1] [b2 [b3 b4]] b5]").unwrap();
        assert_eq!(supplant_inner(&e, &[0]), Err(SupplantError::ContainsFixed));
        assert_eq!(supplant_inner(&e, &[1]), Err(SupplantError::ContainsNested));
        assert_eq!(supplant_inner(&e, &[2]), Err(SupplantError::NotABracket));
        assert_eq!(supplant_inner(&e, &[7]), Err(SupplantError::NoSuchNode));
        assert!(supplant_inner(&e, &[1, 1]).is_ok());
        assert!(matches!(supplant_inner(&parse("[b1 [b1 b2]]").unwrap(), &[1]), Err(SupplantError::NotMultilinear(_))));
    }

    #[test]
    fn supplant_all_collects_factors() {
        let s = supplant_all(&parse("[A[bcd][efg]]").unwrap()).unwrap();
        assert_eq!(s.factor, BigInt::from(36));
        assert_eq!(s.expr, parse("[A(bcd)(efg)]").unwrap());
    }
}
