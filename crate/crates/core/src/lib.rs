//! Exact symbolic engine for central polynomials built from braided Casimir
//! elements over U(gl_n): shifted determinants, characteristic polynomials,
//! and the identity suite that relates them to Yangians and Capelli elements.

pub mod capelli;
pub mod central;
pub mod error;
pub mod irreps;
pub mod ncla;
pub mod pbw;
pub mod poly;
pub mod qmatrix;
pub mod rational;
pub mod report;
pub mod ring;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use pbw::{parse_element, GeneratorIndex, PbwMonomial, UeaElement};
pub use poly::{MultiPoly, WeightPolynomial};
pub use rational::Q;
pub use ring::{Coefficient, Poly, QPoly};

/// Version stamp for serialized results; bumped with the crate version.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
