//! Exact arithmetic for the discrete data behind elliptic configurations on
//! stable genus-2 curves.
//!
//! Everything here is computed over the integers or over a prime field; there
//! is no floating point anywhere in the crate. The main pieces are:
//!
//! * [`fp`] / [`geom`] — scalars mod p and the incidence geometry of points,
//!   lines and the symplectic form on a 4-dimensional space over F_p,
//! * [`alpha`] — isomorphisms E\[p\] → E′\[p\] as 2×2 matrices, the
//!   anti-symplectic condition and graphs-as-lines,
//! * [`configs`] — the three construction recipes at the level of torsion
//!   data (witness lines, admissible graph enumeration),
//! * [`classify`] — the twisting-number classification and its torsion-level
//!   realization,
//! * [`cmorders`] — degree-2 endomorphisms of elliptic curves via imaginary
//!   quadratic orders,
//! * [`surface`] — intersection numbers of curve classes on a product of
//!   elliptic curves and the exhaustive smoothness certificate.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and every operation is a pure function.

#![no_std]

extern crate alloc;

pub mod alpha;
pub mod classify;
pub mod cmorders;
pub mod configs;
mod error;
pub mod fp;
pub mod geom;
pub mod surface;

pub use alpha::{AlphaMap, GraphLine};
pub use classify::{ClassifyOutcome, InvalidReason, RealizeWitness, Recipe, RecipeKind};
pub use cmorders::{OrderLabel, QuadEndo};
pub use configs::{IsogenyDatum, Scenario, TPosition, Violation};
pub use error::Error;
pub use fp::FpScalar;
pub use geom::{
    IsotropicLineStats, LineRelation, ProjLine, ProjPoint, SymplecticForm, TorsionVector,
};
pub use surface::{
    CandidatePair, ConstraintFamily, DabClass, NsClass, ReferenceClass, SideTuple,
    SmoothnessReport, Verdict,
};
