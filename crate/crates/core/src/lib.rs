//! Exact arithmetic for the twelve homogeneous Hilbert curves.
//!
//! The crate provides
//!
//! - exact dyadic coordinates ([`dyadic`]), the rotation group
//!   ([`rotation`], [`group`]) and the curve maps ([`affine`], [`curve`]);
//! - closed-form evaluation of every curve from the base-4 digits of its
//!   parameter, point transfer between curves and the recursion identities
//!   ([`map`]);
//! - an independent geometric construction by recursive subdivision, with
//!   checkers for the boundary conditions and geometric properties of each
//!   curve ([`geom`]);
//! - squared dilation estimates ([`metrics`]);
//! - the verification suites behind `hhc verify` ([`verify`]).
//!
//! No floating point is used outside of [`metrics`], and there only for the
//! final reported ratio.

pub mod affine;
pub mod curve;
pub mod dyadic;
pub mod error;
pub mod geom;
pub mod group;
pub mod map;
pub mod metrics;
pub mod quaternary;
pub mod rotation;
pub mod verify;

use serde::Serialize;

pub use affine::{affine_apply, affine_unapply, AffineMap, TranslationVec};
pub use curve::{curve_table, Curve, CurveKind, CurveTable};
pub use dyadic::{DyadicScalar, DyadicVec2};
pub use error::{HhcError, Result};
pub use quaternary::{quaternary_from_index, quaternary_parse, quaternary_value, QuaternaryFraction};
pub use rotation::{rot_inv, rot_mul, Rotation};

/// One named pass/fail assertion of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}
