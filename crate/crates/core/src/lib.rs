//! Factor univariate integer polynomials and produce irreducibility
//! certificates that an independent checker can re-establish from scratch.

pub mod bounds;
pub mod certificate;
pub mod certify;
pub mod error;
pub mod hensel;
pub mod modfactor;
pub mod parse;
pub mod poly;
pub mod subsets;
pub mod verify;

pub use error::{Error, Result};
pub use parse::parse_poly;
pub use poly::{IntPoly, ModPoly, Modulus, RatPoly};
