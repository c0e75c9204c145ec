//! Exact symbolic invariants of plane-curve and quasi-ordinary surface germs.
//!
//! Given the support of a Puiseux series (a set of rational exponents for a
//! curve branch, or a set of exponent pairs for a quasi-ordinary surface
//! branch), this crate computes the degree `d`, the Euler characteristic `χ`
//! of the (transverse) Milnor fiber, and the horizontal and vertical
//! monodromy zeta functions `H(t)` and `V(t)` as formal products of factors
//! `(t^k - 1)` with integer exponents.
//!
//! The computation is a recursion on characteristic data: at each level the
//! leading characteristic exponent (or pair) determines a truncated germ
//! with closed-form invariants, and an exponent transformation produces a
//! derived germ with one fewer characteristic level. All arithmetic is
//! arbitrary-precision and exact.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the command
//! line front end live in the companion `monozeta` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bigraph;
pub mod curve;
pub mod error;
pub mod exact;
pub mod model;
pub mod parse;
pub mod surface;
pub mod zeta;

pub use bigraph::{
    build_horizontal_permutation, build_vertical_permutation, permutation_zeta, BigraphError,
    CellPermutation,
};
pub use curve::{curve_derive, curve_invariants, curve_truncate, CurveInvariants, CurveTruncation};
pub use error::{EngineError, ModelError};
pub use exact::{lattice_contains, lattice_index, lcm_denominators, ExponentPair, Rational};
pub use model::{CurveCharacteristics, CurveSeries, SurfaceCharacteristics, SurfaceSeries};
pub use parse::{parse_curve, parse_surface, ParseError};
pub use surface::{
    surface_derive, surface_invariants, surface_truncation_params, SurfaceInvariants,
    SurfaceTruncationParams,
};
pub use zeta::{CycloForm, ZetaExpr};
