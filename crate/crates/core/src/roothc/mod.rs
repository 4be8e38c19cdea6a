//! Root data, the Harish-Chandra projection, the polynomial `t`, and the translated
//! Weyl group action.

mod datum;
mod hc;
mod hpoly;
mod weyl;

pub use datum::{Root, RootDatum, Weight};
pub use hc::{compute_t, hc_projection, weight_of};
pub use hpoly::HPolynomial;
pub use weyl::{
    dot_action, reflection_matrix, weyl_dot_orbit_check, weyl_group, Symmetry, WeylReport,
};
