use std::num::{NonZeroU64, NonZeroUsize};
use std::str::FromStr;

use clap::ValueEnum;
use nbracket_core::expand::DEFAULT_TERM_BUDGET;
use nbracket_core::{Expander, Method, ParseOptions};

use crate::error::CliError;
use crate::parallel::Parallel;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[default]
    Auto,
    Oracle,
    Fast,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Fast => Method::Fast,
        }
    }
}

/// Worker thread count for oracle enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Threads {
    #[default]
    Auto,
    Fixed(NonZeroUsize),
}

impl FromStr for Threads {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "auto" {
            return Ok(Threads::Auto);
        }
        s.parse::<NonZeroUsize>()
            .map(Threads::Fixed)
            .map_err(|_| format!("expected a positive integer or `auto`, got {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub term_budget: NonZeroU64,
    pub threads: Threads,
    pub format: Format,
    pub seed: u64,
    pub parse: ParseOptions,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            term_budget: NonZeroU64::new(DEFAULT_TERM_BUDGET).unwrap(),
            threads: Threads::Auto,
            format: Format::Text,
            seed: 0,
            parse: ParseOptions::default(),
        }
    }
}

impl RunConfig {
    pub fn expander(&self) -> Expander {
        Expander::new(self.term_budget.get())
    }

    pub fn runner(&self) -> Result<Parallel, CliError> {
        Parallel::new(self.threads).map_err(|e| CliError::Io(std::io::Error::other(e)))
    }
}
