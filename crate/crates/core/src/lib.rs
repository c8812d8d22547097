//! Exact computations on the smooth model `X_n` of the Suzuki curve in `P^4`:
//! Weierstrass semigroup data, Riemann-Roch dimensions and monomial bases,
//! normal forms in the function field, rational points, and the dimension of
//! the space of degree-`t` forms vanishing on `X_n`.

pub mod cli;
pub mod curve;
pub mod dims;
pub mod error;
pub mod expr;
pub mod forms;
pub mod gf;
pub mod linalg;
pub mod params;
pub mod report;
pub mod rewrite;
pub mod semigroup;
pub mod tuples;
pub mod verify;

pub use error::{Error, Result};
pub use gf::{FieldElement, GfField};
pub use params::{make_params, SuzukiParams};
pub use rewrite::{FFPoly, Gf2, Reducer};
pub use semigroup::SemigroupTable;
pub use tuples::{CanonicalTuple, ExponentTuple};
