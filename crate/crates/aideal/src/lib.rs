//! Exact computation of noncommutative A-ideals and A-bases of knots.
//!
//! The ambient objects are the quantum torus `C_t[l,l^-1,m,m^-1]` with the
//! Rieffel product `e_{p,q} * e_{r,s} = t^{ps-qr} e_{p+r,q+s}` and its
//! polynomial subring, the quantum plane `C_t[l,m]` with `lm = t^2 ml`.
//! The Kauffman bracket skein algebra of the thickened torus sits inside the
//! quantum torus as the subalgebra of Θ-invariant elements, with the
//! `(p,q)`-curve mapped to `e_{p,q} + e_{-p,-q}`.
//!
//! Starting from generators of the peripheral ideal of a knot, the pipeline
//! clears denominators into the quantum plane, saturates by the monomial
//! units, and computes the unique minimal reduced monic left Gröbner basis
//! (the A-basis). Specializing at `t = -1` and swapping `l ↔ -m` recovers the
//! classical A-polynomial data.
//!
//! The crate also implements the action of the torus skein algebra on the
//! skein module of the solid torus by band matrices over `Q(t)`, colored
//! Kauffman bracket sequences, the orthogonality check between peripheral
//! generators and those sequences, and a bounded search for annihilators of a
//! given sequence.

pub mod action;
pub mod classical;
pub mod coeff;
pub mod format;
pub mod linalg;
pub mod parse;
pub mod pipeline;
pub mod plane;
pub mod skein;
pub mod torus;

pub use action::{annihilator_search, z_unknot, BandOperator, ZSeq, ZSource};
pub use coeff::{Rat, TPoly, TRat};
pub use pipeline::{ABasisResult, KnotData, OrthogonalityReport};
pub use plane::{GroebnerBasis, PlanePoly};
pub use skein::{CurveIndex, SkeinElement};
pub use torus::{QTElement, Shift};

use std::fmt;

/// Errors reported by the algebra and pipeline layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Specialization at `t = 0` is undefined for Laurent polynomials.
    ZeroEvaluationPoint,
    /// A denominator vanishes at the requested evaluation point.
    PoleAtEvaluationPoint,
    /// Division by the zero element of the coefficient field.
    DivisionByZero,
    /// The operation requires a nonzero element.
    ZeroElement(&'static str),
    /// An ideal computation was handed no nonzero generators.
    EmptyIdeal,
    /// A quantum-plane element was built with a negative exponent.
    NegativeExponent { p: i64, q: i64 },
    /// The curve index `(0,0)` does not name a curve.
    ZeroCurve,
    /// A band operator is not truncated deeply enough for the request.
    InsufficientTruncation { needed: usize, have: usize },
    /// The coefficient sequence is identically zero (or empty).
    DegenerateSequence,
    /// A colored bracket sequence does not start with 1 at color 0.
    BadKappaHead,
    /// The knot record carries no colored bracket sequence.
    MissingKappa,
    /// Expression parse failure, with 1-based position.
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    /// Structured-file validation failure, with a path into the document.
    Format(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroEvaluationPoint => write!(f, "cannot specialize at t = 0"),
            Error::PoleAtEvaluationPoint => {
                write!(f, "denominator vanishes at the evaluation point")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::ZeroElement(what) => write!(f, "{what} must be nonzero"),
            Error::EmptyIdeal => write!(f, "no nonzero generators given"),
            Error::NegativeExponent { p, q } => {
                write!(
                    f,
                    "quantum-plane exponents must be nonnegative, got l^{p} m^{q}"
                )
            }
            Error::ZeroCurve => write!(f, "(0,0) is not a curve index"),
            Error::InsufficientTruncation { needed, have } => {
                write!(f, "operator truncated at {have}, need at least {needed}")
            }
            Error::DegenerateSequence => write!(f, "coefficient sequence is degenerate"),
            Error::BadKappaHead => write!(f, "colored bracket sequence must have kappa(0) = 1"),
            Error::MissingKappa => write!(f, "knot record has no colored bracket sequence"),
            Error::Parse { line, col, msg } => write!(f, "{line}:{col}: {msg}"),
            Error::Format(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
