//! File formats, reports and command implementations for the `hyperlie`
//! binary.

pub mod commands;
pub mod compute;
pub mod format;

use hyperlie_core::Error;

pub use format::{ParseError, Structure};

/// Errors raised by the front end itself rather than the core.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_PROPERTY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_INVARIANT: u8 = 4;

pub fn core_exit_code(e: &Error) -> u8 {
    match e {
        Error::AxiomFailure(_) | Error::NoSolvableQuotient => EXIT_PROPERTY,
        Error::CarrierTooLarge { .. }
        | Error::BoundsExceeded { .. }
        | Error::WorkLimit { .. }
        | Error::TooLarge { .. }
        | Error::NoStabilization(_) => EXIT_RESOURCE,
        Error::NotSymmetric(..) | Error::Invariant(_) | Error::NotWellDefined { .. } | Error::NotAVectorSpace { .. } => {
            EXIT_INVARIANT
        }
        Error::MalformedTable { .. }
        | Error::FieldMismatch { .. }
        | Error::DuplicateIdentifier(_)
        | Error::EmptyIdentifier(_)
        | Error::NotAGroup(_)
        | Error::NotASubgroup(_)
        | Error::NotLie(_)
        | Error::InvalidParameter(_)
        | Error::NotAField(_)
        | Error::CharTwoGate => EXIT_INPUT,
    }
}

/// Exit status for an error returned by a command.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<Error>() {
        return core_exit_code(e);
    }
    match err.downcast_ref::<ParseError>() {
        Some(ParseError::Core(e)) => core_exit_code(e),
        Some(_) => EXIT_INPUT,
        None if err.downcast_ref::<CliError>().is_some() => EXIT_INPUT,
        None => EXIT_INVARIANT,
    }
}

/// A finished command: both renderings, and whether the property it
/// tested held.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: String,
    pub ok: bool,
}

impl Output {
    pub fn render(&self, json: bool) -> &str {
        if json {
            &self.json
        } else {
            &self.text
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.ok {
            EXIT_OK
        } else {
            EXIT_PROPERTY
        }
    }
}
