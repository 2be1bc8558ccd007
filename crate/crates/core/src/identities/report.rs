use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::expand::Method;
use crate::free::{CanonicalWord, Coeff};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    EvenGji,
    OddReduce,
    Bremner,
    Sums,
    Decomp,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] =
        [IdentityId::EvenGji, IdentityId::OddReduce, IdentityId::Bremner, IdentityId::Sums, IdentityId::Decomp];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::EvenGji => "even",
            IdentityId::OddReduce => "odd-reduce",
            IdentityId::Bremner => "bremner",
            IdentityId::Sums => "sums",
            IdentityId::Decomp => "decomp",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }

    /// Name of the integer parameter: bracket order `N` or half-order `L`.
    pub fn param_name(self) -> &'static str {
        match self {
            IdentityId::EvenGji | IdentityId::OddReduce => "N",
            _ => "L",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Violated,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Violated => "violated",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessLocation {
    Class(CanonicalWord),
    /// A named scalar, e.g. a sum rule.
    Quantity(&'static str),
}

impl fmt::Display for WitnessLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessLocation::Class(c) => c.fmt(f),
            WitnessLocation::Quantity(q) => f.write_str(q),
        }
    }
}

/// First place where two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub location: WitnessLocation,
    pub expected: Coeff,
    pub actual: Coeff,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: expected {}, got {}", self.location, self.expected, self.actual)
    }
}

/// Extra report payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Coeff),
    List(Vec<Coeff>),
    Text(String),
    Flag(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub param: u32,
    pub status: Status,
    /// Main numeric result; see `profile_convention`.
    pub profile: Vec<Coeff>,
    pub profile_convention: &'static str,
    pub witness: Option<Witness>,
    /// Route used for the profile computations, if any were needed.
    pub method: Option<Method>,
    /// Words generated across all expansions.
    pub words: u128,
    pub peak_classes: usize,
    pub extras: Vec<(&'static str, Value)>,
}

impl IdentityReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn extra(&self, key: &str) -> Option<&Value> {
        self.extras.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}={}: {}", self.identity.name(), self.identity.param_name(), self.param, self.status.name())?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        Ok(())
    }
}
