//! Exact computation in free bicommutative superalgebras.
//!
//! A bicommutative superalgebra is a `Z/2`-graded algebra satisfying
//!
//! ```text
//! x1 (x2 x3) = (-1)^{|x1||x2|} x2 (x1 x3)
//! (x1 x2) x3 = (-1)^{|x2||x3|} (x1 x3) x2
//! ```
//!
//! The free object on even generators `y1..yp` and odd generators `z1..zq` is
//! realised here through its tensor model: the span of the generators plus
//! `w (x) w`, where `w` is the augmentation ideal of the free super-commutative
//! algebra. Every element has a unique canonical form in that model, which is
//! what [`SuperPolynomial`] stores.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, JSON and the
//! command-line front end live in the `bicomm` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod characters;
pub mod error;
pub mod field;
pub mod groebner;
pub mod identity;
pub mod intpoly;
pub mod monomial;
pub mod poly;
pub mod series;
pub mod signature;
pub mod term;
pub mod text;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use monomial::{enumerate_basis, mul_monomials, BasisMonomial, Factor, Multidegree, TensorMonomial};
pub use poly::{PolyParity, SuperPolynomial};
pub use signature::{Generator, Parity, Signature};
pub use term::{normalize, parse_term, Term};
