use alloc::string::String;

/// Errors produced by the algebra core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("element does not belong to the field {0}")]
    DescriptorMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field {0} is infinite")]
    InfiniteField(String),
    #[error("operation is not available for the pair {0}")]
    UnsupportedPair(String),
    #[error("polynomial degree {degree} is not supported over {field}")]
    UnsupportedDegree { field: String, degree: usize },
    #[error("{0}")]
    NotSupported(String),
    #[error("constant term {0} does not lie in the subfield")]
    NotInComposite(String),
    #[error("the zero element has no factorization")]
    ZeroElement,
    #[error("{0} is a unit of the composite")]
    UnitElement(String),
    #[error("enumeration over the infinite pair {0} is not supported")]
    InfinitePairUnsupported(String),
    #[error("the larger field adds no element to the subfield")]
    NoSuchB,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error at byte {location}: {message}")]
    Parse { message: String, location: usize },
}

/// Coarse error classes, one per CLI exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Parse,
    Unsupported,
    Domain,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } | Error::InvalidField(_) | Error::DescriptorMismatch(_) => {
                ErrorClass::Parse
            }
            Error::UnsupportedPair(_)
            | Error::UnsupportedDegree { .. }
            | Error::NotSupported(_)
            | Error::InfiniteField(_)
            | Error::InfinitePairUnsupported(_) => ErrorClass::Unsupported,
            Error::DivisionByZero
            | Error::NotInComposite(_)
            | Error::ZeroElement
            | Error::UnitElement(_)
            | Error::NoSuchB => ErrorClass::Domain,
        }
    }

    /// Stable identifier used in machine-readable error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DescriptorMismatch(_) => "DescriptorMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::InfiniteField(_) => "InfiniteField",
            Error::UnsupportedPair(_) => "UnsupportedPair",
            Error::UnsupportedDegree { .. } => "UnsupportedDegree",
            Error::NotSupported(_) => "NotSupported",
            Error::NotInComposite(_) => "NotInComposite",
            Error::ZeroElement => "ZeroElement",
            Error::UnitElement(_) => "UnitElement",
            Error::InfinitePairUnsupported(_) => "InfinitePairUnsupported",
            Error::NoSuchB => "NoSuchB",
            Error::InvalidField(_) => "InvalidField",
            Error::Parse { .. } => "ParseError",
        }
    }

    pub fn location(&self) -> Option<usize> {
        match self {
            Error::Parse { location, .. } => Some(*location),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
