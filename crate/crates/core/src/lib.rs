//! Exact computer algebra for enveloping algebras of finite-dimensional Lie
//! superalgebras: centre, anticentre, ghost centre, the element `T`, the
//! Harish-Chandra projection and Verma modules.

pub mod actions;
pub mod builtin;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod pbw;
pub mod rational;
pub mod roothc;
pub mod suite;
pub mod superalg;
pub mod verma;

pub use error::{Error, Result};
pub use pbw::{EnvElement, FiltrationDegree, Monomial, Ring};
pub use rational::Q;
pub use superalg::{load_algebra, LieSuperalgebra, Parity};
