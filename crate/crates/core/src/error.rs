use alloc::string::String;
use core::fmt;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in different polynomial rings.
    RingMismatch,
    /// `normal_form` was called on an ideal without a cached basis.
    MissingBasis,
    /// A point has the wrong number of coordinates.
    DimensionMismatch { expected: usize, found: usize },
    /// A divisor variable does not vanish at the requested base point.
    PointOffDivisor { var: String },
    /// A candidate maximal contact has no linear part at the base point.
    NotStraightenable,
    /// The linear part of a candidate contact lives only on divisor variables.
    ContactCollidesWithDivisor,
    /// Restriction to a hyperplane cut out by a divisor variable.
    DivisorHyperplane { var: String },
    UnknownVariable(String),
    /// A contract precondition of an operation was not met.
    Precondition(String),
    /// A coefficient ideal was requested for an order above the configured cap.
    OrderCapExceeded { order: u32, cap: u32 },
    /// A generator of the total transform is not divisible by the expected
    /// exceptional power.
    CenterTooBig { generator: String },
    /// The weak transform is contained in the exceptional ideal.
    CenterTooSmall,
    /// A monomial ideal produced a non-monomial center parameter.
    MonomialityViolated(String),
    /// The invariant did not decrease along a blow-up.
    DescentViolated { node: String, parent: String, child: String },
    /// Polynomial expression parse failure at a byte offset.
    Parse { offset: usize, message: String },
    /// An internal consistency check failed; indicates an engine bug.
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => f.write_str("ring mismatch"),
            Error::MissingBasis => f.write_str("ideal has no cached Groebner basis"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "point has {found} coordinates, expected {expected}")
            }
            Error::PointOffDivisor { var } => {
                write!(f, "point off the divisor stratum: divisor variable {var} is nonzero")
            }
            Error::NotStraightenable => f.write_str("maximal contact not straightenable"),
            Error::ContactCollidesWithDivisor => f.write_str("contact collides with divisor"),
            Error::DivisorHyperplane { var } => {
                write!(f, "cannot restrict to the divisor hyperplane {var} = 0")
            }
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::OrderCapExceeded { order, cap } => {
                write!(f, "coefficient ideal of order {order} exceeds the cap {cap}")
            }
            Error::CenterTooBig { generator } => {
                write!(f, "center too big: {generator} is not divisible by the exceptional power")
            }
            Error::CenterTooSmall => f.write_str("center too small: weak transform is exceptional"),
            Error::MonomialityViolated(m) => write!(f, "monomiality violated: {m}"),
            Error::DescentViolated { node, parent, child } => {
                write!(f, "descent violated at {node}: {child} is not below {parent}")
            }
            Error::Parse { offset, message } => {
                write!(f, "syntax error at offset {offset}: {message}")
            }
            Error::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl core::error::Error for Error {}
