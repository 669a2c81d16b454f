//! Exact computer algebra for the quantum algebra U_t(sl(2)).
//!
//! The crate is layered bottom-up:
//!
//! * [`scalars`]: Laurent polynomials, rational functions in `t` and their
//!   square-root extension, q-integers and numeric evaluation.
//! * [`uqsl2`]: the algebra itself in PBW normal form `e^a f^b k^c`, with
//!   coproduct, counit, antipode, adjoint action and an expression parser.
//! * [`rep`]: the irreducible representations `π^l` and tensor products.
//! * [`clebsch`]: Clebsch-Gordan tables by highest-weight construction plus
//!   two closed forms for cross-validation.
//! * [`tensorops`]: adjoint-orbit tensor operators, tensor-operator checks,
//!   reduced matrix elements and central elements.

pub mod clebsch;
pub mod error;
pub mod rep;
pub mod scalars;
pub mod tensorops;
pub mod uqsl2;

pub use error::{Error, Result};
