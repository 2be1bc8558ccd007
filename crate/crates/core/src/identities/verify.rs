use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{self, Matrix};
use super::profile::{intercalation_class, CoefficientProfile};
use super::report::{IdentityId, IdentityReport, Status, Value, Witness, WitnessLocation};
use super::shapes::{bremner_side1, bremner_side2, decomposition_basis, double_bracket, flat_bracket};
use super::{closed_form_c, IdentityError};
use crate::expand::perm::factorial;
use crate::expand::{BlockRunner, Expander, Method, ProfileRun, Sequential};
use crate::free::{AntisymElement, CanonicalWord, Coeff, Slot};
use crate::lang::BracketExpr;

/// Runs identity checks with a fixed expansion configuration.
#[derive(Clone, Copy)]
pub struct Verifier<'a> {
    pub expander: Expander,
    pub method: Method,
    pub runner: &'a dyn BlockRunner,
}

impl Default for Verifier<'static> {
    fn default() -> Self {
        Verifier { expander: Expander::default(), method: Method::Auto, runner: &Sequential }
    }
}

/// Work done across the expansions behind one report.
#[derive(Default)]
struct Tally {
    words: u128,
    peak: usize,
    method: Option<Method>,
}

impl Tally {
    fn add(&mut self, run: &ProfileRun) {
        self.words = self.words.saturating_add(run.words);
        self.peak = self.peak.max(run.peak_classes);
        self.method = match self.method {
            None => Some(run.method),
            Some(m) if m == run.method => Some(m),
            Some(_) => Some(Method::Auto),
        };
    }

    fn report(self, identity: IdentityId, param: u32) -> IdentityReport {
        IdentityReport {
            identity,
            param,
            status: Status::Verified,
            profile: Vec::new(),
            profile_convention: "",
            witness: None,
            method: self.method,
            words: self.words,
            peak_classes: self.peak,
            extras: Vec::new(),
        }
    }
}

fn int(v: impl Into<BigInt>) -> Coeff {
    Coeff::from_integer(v.into())
}

fn all_anti(len: usize) -> CanonicalWord {
    CanonicalWord::new(alloc::vec![Slot::Anti; len])
}

/// Exact decomposition of a target profile over basis profiles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Minimal-norm exact coefficients, absent when none exist.
    pub solution: Option<Vec<Coeff>>,
    /// Minimal-norm least-squares coefficients; equal to `solution` when it exists.
    pub least_squares: Vec<Coeff>,
    /// First class the least-squares combination misses, when inconsistent.
    pub witness: Option<Witness>,
}

impl Verifier<'_> {
    fn run(&self, e: &BracketExpr, tally: &mut Tally) -> Result<AntisymElement, IdentityError> {
        let run = self.expander.profile(e, self.method, self.runner)?;
        tally.add(&run);
        Ok(run.profile)
    }

    /// `[b1 ... b_{N-1} [b_N ... b_{2N-1}]]` vanishes identically. True for even `N`.
    pub fn verify_even_gji(&self, n: u32) -> Result<IdentityReport, IdentityError> {
        if n == 0 {
            return Err(IdentityError::UnsupportedParameter("N must be at least 1"));
        }
        let mut tally = Tally::default();
        let profile = self.run(&double_bracket(n), &mut tally)?;
        let mut report = tally.report(IdentityId::EvenGji, n);
        report.witness = profile.iter().next().map(|(class, c)| Witness {
            location: WitnessLocation::Class(class.clone()),
            expected: Coeff::zero(),
            actual: c.clone(),
        });
        if report.witness.is_some() {
            report.status = Status::Violated;
        }
        report.profile = alloc::vec![profile.coeff(&all_anti(2 * n as usize - 1))];
        report.profile_convention = "coefficient of the class b1...b(2N-1)";
        Ok(report)
    }

    fn odd_reduction(&self, n: u32, tally: &mut Tally) -> Result<(Coeff, Coeff, Coeff), IdentityError> {
        if n.is_multiple_of(2) {
            return Err(IdentityError::UnsupportedParameter("N must be odd"));
        }
        let nested = self.run(&double_bracket(n), tally)?;
        let flat = self.run(&flat_bracket(2 * n - 1), tally)?;
        let class = all_anti(2 * n as usize - 1);
        let reference = flat.coeff(&class);
        if reference.is_zero() {
            return Err(IdentityError::MalformedProfile("flat bracket profile vanishes"));
        }
        let k = nested.coeff(&class) / &reference;
        for class in nested.class_union(&flat) {
            let expected = &k * flat.coeff(class);
            let actual = nested.coeff(class);
            if expected != actual {
                let location = WitnessLocation::Class(class.clone());
                return Err(IdentityError::NotProportional(Box::new(Witness { location, expected, actual })));
            }
        }
        Ok((k, nested.coeff(&class), reference))
    }

    /// The constant `k` with `[b1 ... b_{N-1} [b_N ... b_{2N-1}]] = k [b1 ... b_{2N-1}]`
    /// after reduction, for odd `N`.
    pub fn odd_reduction_constant(&self, n: u32) -> Result<Coeff, IdentityError> {
        Ok(self.odd_reduction(n, &mut Tally::default())?.0)
    }

    pub fn verify_odd_reduce(&self, n: u32) -> Result<IdentityReport, IdentityError> {
        let mut tally = Tally::default();
        let result = self.odd_reduction(n, &mut tally);
        let mut report = tally.report(IdentityId::OddReduce, n);
        report.profile_convention = "coefficient of the class b1...b(2N-1) in the nested bracket";
        match result {
            Ok((k, nested, flat)) => {
                if k.is_zero() {
                    report.status = Status::Violated;
                    report.witness = Some(Witness {
                        location: WitnessLocation::Quantity("k"),
                        expected: flat.clone(),
                        actual: k.clone(),
                    });
                }
                report.profile = alloc::vec![nested];
                report.extras.push(("k", Value::Rational(k)));
                report.extras.push(("flat_coefficient", Value::Rational(flat)));
            }
            Err(IdentityError::NotProportional(w)) => {
                report.status = Status::Violated;
                report.witness = Some(*w);
            }
            Err(e) => return Err(e),
        }
        Ok(report)
    }

    fn bremner_profiles_tallied(
        &self,
        l: u32,
        tally: &mut Tally,
    ) -> Result<(CoefficientProfile, CoefficientProfile), IdentityError> {
        if l == 0 {
            return Err(IdentityError::UnsupportedParameter("L must be at least 1"));
        }
        let side1 = self.run(&bremner_side1(l), tally)?;
        let side2 = self.run(&bremner_side2(l), tally)?;
        Ok((CoefficientProfile::from_element(l, &side1)?, CoefficientProfile::from_element(l, &side2)?))
    }

    /// Magnitude profiles of `[[A b...][b...] b...]` (side 1) and
    /// `[[A [b...] b...] b...]` (side 2).
    pub fn bremner_profiles(&self, l: u32) -> Result<(CoefficientProfile, CoefficientProfile), IdentityError> {
        self.bremner_profiles_tallied(l, &mut Tally::default())
    }

    pub fn verify_bremner(&self, l: u32) -> Result<IdentityReport, IdentityError> {
        let mut tally = Tally::default();
        let (side1, side2) = self.bremner_profiles_tallied(l, &mut tally)?;
        let checked = bremner_report(l, &side1, &side2)?;
        let mut report = tally.report(IdentityId::Bremner, l);
        report.status = checked.status;
        report.witness = checked.witness;
        report.profile = checked.profile;
        report.profile_convention = checked.profile_convention;
        report.extras = checked.extras;
        Ok(report)
    }

    /// Sum rules `sum c_n = 2L(2L+1)^2`, `sum m_n = ((2L+1)!)^3` and reflection.
    pub fn check_sums(&self, l: u32) -> Result<IdentityReport, IdentityError> {
        if l == 0 {
            return Err(IdentityError::UnsupportedParameter("L must be at least 1"));
        }
        let c = (0..=6 * l as usize).map(|n| closed_form_c(n, l)).collect::<Result<Vec<_>, _>>()?;
        let m = CoefficientProfile::closed_form(l)?;
        let c_sum: u128 = c.iter().sum();
        let big_l = u128::from(l);
        let c_expected = 2 * big_l * (2 * big_l + 1) * (2 * big_l + 1);
        let m_expected = factorial(2 * l as usize + 1).pow(3);
        let m_sum = m.sum();
        let reflection = c.iter().eq(c.iter().rev()) && m.is_reflection_symmetric();

        let mut report = Tally::default().report(IdentityId::Sums, l);
        report.profile = c.iter().map(|&v| int(v)).collect();
        report.profile_convention = "c_n, intercalation counts";
        report.witness = if c_sum != c_expected {
            Some(Witness {
                location: WitnessLocation::Quantity("sum of c_n"),
                expected: int(c_expected),
                actual: int(c_sum),
            })
        } else if m_sum != m_expected {
            Some(Witness {
                location: WitnessLocation::Quantity("sum of m_n"),
                expected: int(m_expected),
                actual: int(m_sum.clone()),
            })
        } else {
            let n = (0..c.len()).find(|&n| c[n] != c[c.len() - 1 - n]);
            n.map(|n| Witness {
                location: WitnessLocation::Class(intercalation_class(n, c.len() - 1)),
                expected: int(c[c.len() - 1 - n]),
                actual: int(c[n]),
            })
        };
        if report.witness.is_some() {
            report.status = Status::Violated;
        }
        report.extras.push(("c_sum", Value::Rational(int(c_sum))));
        report.extras.push(("m_sum", Value::Rational(int(m_sum))));
        report.extras.push(("reflection", Value::Flag(reflection)));
        Ok(report)
    }

    fn decompose_tallied(
        &self,
        target: &BracketExpr,
        basis: &[BracketExpr],
        tally: &mut Tally,
    ) -> Result<Decomposition, IdentityError> {
        let indices = target.index_set();
        if basis.iter().any(|b| b.index_set() != indices) {
            return Err(IdentityError::IndexMismatch);
        }
        let target = self.run(target, tally)?;
        let basis = basis.iter().map(|b| self.run(b, tally)).collect::<Result<Vec<_>, _>>()?;
        let classes: BTreeSet<&CanonicalWord> = target.classes().chain(basis.iter().flat_map(|b| b.classes())).collect();
        let a: Matrix = classes.iter().map(|c| basis.iter().map(|b| b.coeff(c)).collect()).collect();
        let rhs: Vec<Coeff> = classes.iter().map(|c| target.coeff(c)).collect();
        let solution = linalg::solve_min_norm(&a, &rhs, basis.len());
        let least_squares = match &solution {
            Some(x) => x.clone(),
            None => linalg::least_squares(&a, &rhs, basis.len()),
        };
        let fitted = linalg::apply(&a, &least_squares);
        let witness = classes.iter().zip(rhs.iter().zip(fitted)).find(|(_, (t, f))| *t != f).map(|(c, (t, f))| Witness {
            location: WitnessLocation::Class((*c).clone()),
            expected: t.clone(),
            actual: f,
        });
        Ok(Decomposition { solution, least_squares, witness })
    }

    /// Exact coefficients `a_i` with `profile(target) = sum a_i profile(basis_i)`,
    /// or `None` when no combination matches. Underdetermined systems yield
    /// the solution of least Euclidean norm.
    pub fn decompose(&self, target: &BracketExpr, basis: &[BracketExpr]) -> Result<Option<Vec<Coeff>>, IdentityError> {
        Ok(self.decompose_detailed(target, basis)?.solution)
    }

    pub fn decompose_detailed(
        &self,
        target: &BracketExpr,
        basis: &[BracketExpr],
    ) -> Result<Decomposition, IdentityError> {
        self.decompose_tallied(target, basis, &mut Tally::default())
    }

    /// Decomposes side 2 over `[A b1 ... b_6L]` and
    /// `[A [b1 ... b_{2L+1}] [b_{2L+2} ... b_{4L+2}] b_{4L+3} ... b_6L]`.
    pub fn verify_decomposition(&self, l: u32) -> Result<IdentityReport, IdentityError> {
        if l == 0 {
            return Err(IdentityError::UnsupportedParameter("L must be at least 1"));
        }
        let mut tally = Tally::default();
        let target = bremner_side2(l);
        let basis = decomposition_basis(l);
        let d = self.decompose_tallied(&target, &basis, &mut tally)?;
        let mut report = tally.report(IdentityId::Decomp, l);
        report.profile_convention = "coefficients of the basis expressions";
        report.extras.push(("target", Value::Text(crate::lang::render_ascii(&target))));
        let names: Vec<String> = basis.iter().map(crate::lang::render_ascii).collect();
        report.extras.push(("basis", Value::Text(names.join("; "))));
        match d.solution {
            Some(x) => report.profile = x,
            None => {
                report.status = Status::Violated;
                report.witness = d.witness;
                report.extras.push(("least_squares", Value::List(d.least_squares)));
            }
        }
        Ok(report)
    }

    pub fn verify(&self, identity: IdentityId, param: u32) -> Result<IdentityReport, IdentityError> {
        match identity {
            IdentityId::EvenGji => self.verify_even_gji(param),
            IdentityId::OddReduce => self.verify_odd_reduce(param),
            IdentityId::Bremner => self.verify_bremner(param),
            IdentityId::Sums => self.check_sums(param),
            IdentityId::Decomp => self.verify_decomposition(param),
        }
    }
}

/// Compares both sides against the closed form `m_n`. The report's profile
/// is side 1.
pub fn bremner_report(
    l: u32,
    side1: &CoefficientProfile,
    side2: &CoefficientProfile,
) -> Result<IdentityReport, IdentityError> {
    let closed = CoefficientProfile::closed_form(l)?;
    let mut report = Tally::default().report(IdentityId::Bremner, l);
    for side in [side1, side2] {
        if side.m.len() != closed.m.len() {
            return Err(IdentityError::MalformedProfile("profile length differs from 6L+1"));
        }
    }
    report.witness = (0..closed.m.len()).find_map(|n| {
        [side1, side2].into_iter().find(|s| s.m[n] != closed.m[n]).map(|s| Witness {
            location: WitnessLocation::Class(intercalation_class(n, closed.m.len() - 1)),
            expected: closed.class_coefficient(n),
            actual: s.class_coefficient(n),
        })
    });
    if report.witness.is_some() {
        report.status = Status::Violated;
    }
    report.profile = side1.m.iter().cloned().map(Coeff::from_integer).collect();
    report.profile_convention = "m_n, class coefficient (-1)^n m_n";
    report.extras.push(("side2", Value::List(side2.m.iter().cloned().map(Coeff::from_integer).collect())));
    report.extras.push(("reflection", Value::Flag(side1.is_reflection_symmetric() && side2.is_reflection_symmetric())));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parse;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn even_gji() {
        let v = Verifier::default();
        for n in [2, 4] {
            let r = v.verify_even_gji(n).unwrap();
            assert!(r.is_verified(), "{r}");
            assert_eq!(r.profile, [Coeff::zero()]);
        }
        for n in [1, 3, 5] {
            let r = v.verify_even_gji(n).unwrap();
            assert_eq!(r.status, Status::Violated);
            let w = r.witness.unwrap();
            assert!(!w.actual.is_zero());
            assert!(w.expected.is_zero());
        }
    }

    #[test]
    fn odd_reduction_constants() {
        let v = Verifier::default();
        assert_eq!(v.odd_reduction_constant(1).unwrap(), q(1, 1));
        assert_eq!(v.odd_reduction_constant(3).unwrap(), q(3, 10));
        assert_eq!(v.odd_reduction_constant(5).unwrap(), q(5, 126));
        assert!(v.odd_reduction_constant(4).is_err());
        let r = v.verify_odd_reduce(3).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.extra("k"), Some(&Value::Rational(q(3, 10))));
    }

    #[test]
    fn bremner_l1() {
        let v = Verifier::default();
        let (s1, s2) = v.bremner_profiles(1).unwrap();
        let m: Vec<BigInt> = [24, 36, 36, 24, 36, 36, 24].into_iter().map(BigInt::from).collect();
        assert_eq!(s1.m, m);
        assert_eq!(s2.m, m);
        let r = v.verify_bremner(1).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.method, Some(Method::Oracle));
    }

    #[test]
    fn bremner_fast_path_l2() {
        let v = Verifier { method: Method::Fast, ..Verifier::default() };
        assert!(v.verify_bremner(2).unwrap().is_verified());
    }

    #[test]
    fn mutated_profile_is_caught() {
        let good = CoefficientProfile::closed_form(1).unwrap();
        let mut bad = good.clone();
        bad.m[3] += 1;
        let r = bremner_report(1, &good, &bad).unwrap();
        assert_eq!(r.status, Status::Violated);
        let w = r.witness.unwrap();
        assert_eq!(w.location, WitnessLocation::Class(intercalation_class(3, 6)));
        assert_eq!(w.expected, q(-24, 1));
        assert_eq!(w.actual, q(-25, 1));
    }

    #[test]
    fn sums() {
        let v = Verifier::default();
        for (l, total) in [(1, 18), (2, 100), (10, 8820)] {
            let r = v.check_sums(l).unwrap();
            assert!(r.is_verified());
            assert_eq!(r.extra("c_sum"), Some(&Value::Rational(q(total, 1))));
        }
    }

    #[test]
    fn decomposition_l1() {
        let v = Verifier::default();
        let basis = decomposition_basis(1);
        let x = v.decompose(&bremner_side2(1), &basis).unwrap();
        assert_eq!(x, Some(alloc::vec![q(1, 20), q(-1, 6)]));
        let r = v.verify_decomposition(1).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.profile, [q(1, 20), q(-1, 6)]);
    }

    #[test]
    fn decomposition_trivial_and_inconsistent() {
        let v = Verifier::default();
        let e = parse("[A b1 b2]").unwrap();
        assert_eq!(v.decompose(&e, core::slice::from_ref(&e)).unwrap(), Some(alloc::vec![q(1, 1)]));
        // a single-class target cannot come from a basis that spans other classes only in a fixed ratio
        let target = parse("A b1 b2").unwrap();
        let d = v.decompose_detailed(&target, core::slice::from_ref(&e)).unwrap();
        assert_eq!(d.solution, None);
        assert!(d.witness.is_some());
        let other = parse("[A b3]").unwrap();
        assert_eq!(v.decompose(&e, &[other]), Err(IdentityError::IndexMismatch));
    }
}
