//! Expansion of bracket expressions.
//!
//! Two independent routes produce the antisymmetric profile of an
//! expression:
//!
//! - the **oracle** expands every bracket into all of its signed orderings
//!   and reduces each generated word as it is produced;
//! - the **fast path** replaces all-antisymmetrized inner brackets by
//!   ordered products, then resolves each remaining bracket by placing its
//!   non-atomic entries among the antisymmetrized atoms (the one- and
//!   two-insertion lemmas), reducing after every node.
//!
//! The oracle is ground truth; the fast path must agree with it wherever
//! both are computable.

mod fast;
mod lemma;
mod oracle;
pub mod perm;
mod supplant;

use core::fmt;

use crate::free::AntisymElement;
use crate::lang::{BracketExpr, ValidationError};

pub use lemma::{lemma1_expand, lemma1_expand_with, lemma2_expand, lemma2_expand_with};
pub use oracle::{BlockRunner, ClassCounts, OraclePlan, Sequential};
pub use supplant::{supplant_all, supplant_inner, Scaled, SupplantError};

/// Default cap on generated words.
pub const DEFAULT_TERM_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpandError {
    /// The expansion would generate more words than allowed.
    BudgetExceeded { needed: u128, budget: u64 },
    /// The fast path cannot resolve this shape.
    UnsupportedShape(&'static str),
    NotMultilinear(ValidationError),
}

impl fmt::Display for ExpandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpandError::BudgetExceeded { needed, budget } => {
                write!(f, "term budget exceeded: {needed} words needed, budget is {budget}")
            }
            ExpandError::UnsupportedShape(why) => {
                write!(f, "unsupported shape for the fast path ({why}); use the oracle path")
            }
            ExpandError::NotMultilinear(e) => write!(f, "expression is not multilinear: {e}"),
        }
    }
}

/// Which expansion route to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Oracle,
    Fast,
    /// Oracle when the naive word count fits the budget, fast path otherwise.
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Fast => "fast",
            Method::Auto => "auto",
        }
    }
}

/// A computed profile together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileRun {
    pub profile: AntisymElement,
    /// The route actually taken; never `Auto`.
    pub method: Method,
    /// Words generated and reduced along the way.
    pub words: u128,
    /// Largest class map held during the run.
    pub peak_classes: usize,
}

/// Expansion entry point carrying the word budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expander {
    pub term_budget: u64,
}

impl Default for Expander {
    fn default() -> Self {
        Expander { term_budget: DEFAULT_TERM_BUDGET }
    }
}

impl Expander {
    pub fn new(term_budget: u64) -> Self {
        Expander { term_budget }
    }

    pub(crate) fn check_budget(&self, needed: u128) -> Result<(), ExpandError> {
        if needed > u128::from(self.term_budget) {
            return Err(ExpandError::BudgetExceeded { needed, budget: self.term_budget });
        }
        Ok(())
    }

    /// Ground-truth profile, enumerated on the calling thread.
    pub fn oracle_profile(&self, e: &BracketExpr) -> Result<AntisymElement, ExpandError> {
        Ok(self.oracle_run(e, &Sequential)?.profile)
    }

    pub fn oracle_run(&self, e: &BracketExpr, runner: &dyn BlockRunner) -> Result<ProfileRun, ExpandError> {
        let plan = OraclePlan::new(self, e)?;
        let counts = runner.run(&plan);
        let words = counts.words();
        let peak_classes = counts.len();
        Ok(ProfileRun { profile: counts.into_element(), method: Method::Oracle, words, peak_classes })
    }

    /// Oracle profile of `factor * expr`.
    pub fn oracle_run_scaled(&self, s: &Scaled, runner: &dyn BlockRunner) -> Result<ProfileRun, ExpandError> {
        let mut run = self.oracle_run(&s.expr, runner)?;
        run.profile = run.profile.scale(&crate::free::Coeff::from_integer(s.factor.clone()));
        Ok(run)
    }

    pub fn fast_profile(&self, e: &BracketExpr) -> Result<AntisymElement, ExpandError> {
        Ok(self.fast_run(e)?.profile)
    }

    pub fn fast_run(&self, e: &BracketExpr) -> Result<ProfileRun, ExpandError> {
        fast::fast_run(self, e)
    }

    /// Profile by the requested route.
    pub fn profile(&self, e: &BracketExpr, method: Method, runner: &dyn BlockRunner) -> Result<ProfileRun, ExpandError> {
        match method {
            Method::Oracle => self.oracle_run(e, runner),
            Method::Fast => self.fast_run(e),
            Method::Auto => {
                if e.naive_word_count() <= u128::from(self.term_budget) {
                    self.oracle_run(e, runner)
                } else {
                    self.fast_run(e)
                }
            }
        }
    }
}
