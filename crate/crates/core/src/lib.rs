//! Distance spectra of graphs at desk scale.
//!
//! Exact integer/rational linear algebra decides spectral membership questions
//! ("is -1 an eigenvalue of D(T)?") with no floating-point doubt, a cyclic
//! Jacobi eigensolver produces the numeric spectra, and exhaustive enumerators
//! over small trees and connected graphs drive the searches.

pub mod canon;
pub mod enumeration;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod quotient;
pub mod spectra;
pub mod theorems;

pub use error::{Error, Result};
pub use exact::{IntMatrix, Polynomial, RatMatrix, Rational};
pub use graph::Graph;
pub use spectra::Spectrum;
