//! Negacyclic codes over Z4 and their algebraic Lee-metric decoder.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: the coefficient traits and Z4 itself
//! - [`field`] and [`ring`]: the residue field GF(2^m) and the Galois ring GR(4,m)
//! - [`poly`]: dense polynomials and truncated power series over any coefficient ring
//! - [`code`]: code construction, encoding, Lee metric, exhaustive minimum distance
//! - [`keyeq`]: syndromes and the series feeding the key equation
//! - [`solver`]: Gröbner bases of the key-equation solution module
//! - [`decoder`]: the two-pass decoder
//! - [`text`]: digit-string formats used by the command line

pub mod code;
pub mod decoder;
pub mod error;
pub mod field;
pub mod keyeq;
pub mod poly;
pub mod reference;
pub mod ring;
pub mod scalar;
pub mod simulate;
pub mod solver;
pub mod text;

pub use code::{Code, Word};
pub use decoder::{decode, DecodeOutcome, DecodeStatus, FailureReason};
pub use error::{Error, Result};
pub use field::{FieldDescriptor, FieldElement, Gf2Poly};
pub use poly::Poly;
pub use ring::{make_ring, ModulusTable, RingDescriptor, RingElement};
pub use scalar::{ChainRing, Coefficient, Z4};
pub use solver::{GroebnerBasis, ModuleTerm, PairVector, Side};

/// Polynomials over GR(4,m).
pub type RingPoly = Poly<RingElement>;
/// Polynomials over the residue field GF(2^m).
pub type FieldPoly = Poly<FieldElement>;
/// Polynomials over Z4.
pub type Z4Poly = Poly<Z4>;
/// Elements of GR(4,m)[z]^2.
pub type RingPair = PairVector<RingElement>;
/// Gröbner bases of solution modules over GR(4,m).
pub type RingBasis = GroebnerBasis<RingElement>;
