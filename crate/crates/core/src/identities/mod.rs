//! Identity verifiers.
//!
//! Every verifier computes profiles through an [`Expander`](crate::Expander)
//! and compares them exactly; nothing here uses floating point. Verifiers are
//! pure, so callers may run several of them concurrently.

mod closed_form;
pub mod linalg;
mod profile;
mod report;
pub mod shapes;
mod verify;

use alloc::boxed::Box;
use core::fmt;

use crate::expand::ExpandError;

pub use closed_form::{closed_form_c, closed_form_m, closed_form_profile, profile_prefactor};
pub use profile::{intercalation_class, CoefficientProfile};
pub use report::{IdentityId, IdentityReport, Status, Value, Witness, WitnessLocation};
pub use verify::{bremner_report, Decomposition, Verifier};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityError {
    Expand(ExpandError),
    UnsupportedParameter(&'static str),
    /// A computed profile does not have the expected class structure.
    MalformedProfile(&'static str),
    /// No single constant relates the two profiles.
    NotProportional(Box<Witness>),
    /// Target and basis do not share their antisymmetrized indices.
    IndexMismatch,
}

impl From<ExpandError> for IdentityError {
    fn from(e: ExpandError) -> Self {
        IdentityError::Expand(e)
    }
}

impl fmt::Display for IdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityError::Expand(e) => e.fmt(f),
            IdentityError::UnsupportedParameter(why) => write!(f, "unsupported parameter: {why}"),
            IdentityError::MalformedProfile(why) => write!(f, "malformed profile: {why}"),
            IdentityError::NotProportional(w) => write!(f, "profiles are not proportional: {w}"),
            IdentityError::IndexMismatch => f.write_str("target and basis use different antisymmetrized indices"),
        }
    }
}
