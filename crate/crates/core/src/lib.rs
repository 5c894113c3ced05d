//! Exact arithmetic for rope-and-peg altar geometry, brick and day counting,
//! the rule of three, and early one-unknown algebra.
//!
//! Every quantity is an exact rational or a single surd unless a
//! construction explicitly falls back to floating point.

pub mod arith;
pub mod bija;
pub mod calendar;
pub mod notation;
pub mod proportion;
pub mod sulva;

use thiserror::Error;

/// Whether a failure came from reading input or from the mathematics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Domain,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] arith::ArithError),
    #[error(transparent)]
    Geometry(#[from] sulva::GeometryError),
    #[error(transparent)]
    Calendar(#[from] calendar::CalendarError),
    #[error(transparent)]
    Proportion(#[from] proportion::ProportionError),
    #[error(transparent)]
    Bija(#[from] bija::BijaError),
    #[error(transparent)]
    Notation(#[from] notation::NotationError),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use arith::ArithError;
        let parse = match self {
            Error::Arith(e) => matches!(e, ArithError::Parse(_)),
            Error::Geometry(e) => matches!(e, sulva::GeometryError::Scene(_) | sulva::GeometryError::Arith(ArithError::Parse(_))),
            Error::Calendar(e) => matches!(e, calendar::CalendarError::Config { .. }),
            Error::Proportion(e) => matches!(e, proportion::ProportionError::Parse(_)),
            Error::Bija(e) => matches!(e, bija::BijaError::Arith(ArithError::Parse(_))),
            Error::Notation(e) => e.kind != notation::NotationErrorKind::NonInteger,
        };
        if parse { ErrorClass::Parse } else { ErrorClass::Domain }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        let e: Error = notation::parse_text("yā 1 = 2\nrū 0", Default::default()).unwrap_err().into();
        assert_eq!(e.class(), ErrorClass::Parse);
        let e: Error = bija::BijaError::NoRealRoot.into();
        assert_eq!(e.class(), ErrorClass::Domain);
        let e: Error = "5:20:8".parse::<proportion::ProportionProblem>().unwrap_err().into();
        assert_eq!(e.class(), ErrorClass::Parse);
        let e: Error = "x=1".parse::<calendar::CalendarConfig>().unwrap_err().into();
        assert_eq!(e.class(), ErrorClass::Parse);
        let e: Error = calendar::CalendarError::TithiOutOfRange(0).into();
        assert_eq!(e.class(), ErrorClass::Domain);
    }
}
