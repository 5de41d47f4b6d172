//! Exact-arithmetic toolkit for root systems, Weyl groups, and the
//! `E6(-14) -> Sp(4)` theta-projection pipeline.
//!
//! Everything in this crate computes over exact rationals
//! ([`Rat`](rat::Rat), arbitrary precision) — there is no floating point on
//! any mathematical path, so every comparison is an exact equality and every
//! verdict is unambiguous.
//!
//! The crate is organised around the reduction pipeline it implements:
//!
//! - [`cartan`] — generalized Cartan matrices with compact/non-compact node
//!   labels, validation, Dynkin-diagram classification, and the bundled
//!   presets (`A1`, `A2`, `C2`, `G2`, and two `E6` variants).
//! - [`roots`] — root systems as the reflection closure of the simple roots,
//!   with the exact symmetrized bilinear form.
//! - [`weyl`] — Weyl groups as permutation groups on the root set, generated
//!   by breadth-first closure of the simple reflections.
//! - [`weights`] — weight lattices in fundamental-weight coordinates, the
//!   theta projection with its kernel certificate, compact-Weyl averaging,
//!   and the compact compensation term.
//! - [`embedding`] — the non-compact subsystem `{a1, a6, a1+a6, 2a1+a6}`,
//!   its tabulated map into the `C2` root system, and exact verification of
//!   the numeric assertions attached to that map.
//! - [`classify`] — finite parameter descriptors (series type + weight +
//!   continuous/deformation data), their restriction to the `Sp(4)` side,
//!   and the injectivity scan.
//! - [`ledger`] — the claim ledger: a fixed catalog of numeric assertions
//!   about this reduction, each recomputed from first principles and
//!   rendered with a PASS/FAIL verdict.
//!
//! The crate is `no_std`-compatible (with `alloc`); disable the default
//! `std` feature for embedded or sandboxed use. File formats, the command
//! line, and IO live in the companion `lietheta-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod cartan;
pub mod classify;
pub mod embedding;
pub mod kappa;
pub mod ledger;
pub mod linalg;
pub mod presets;
pub mod rat;
pub mod roots;
pub mod snf;
pub mod weights;
pub mod weyl;

pub use cartan::{CartanSpec, DynkinType, DynkinTypeReport, NodeLabel};
pub use classify::{
    injectivity_scan, restrict_descriptor, GroupId, InjectivityReport, ParameterDescriptor,
    RestrictionResult, RestrictionSetting, ScaleRecord, Series,
};
pub use ledger::{run_ledger, ClaimRecord, LedgerReport, Verdict};
pub use rat::Rat;
pub use roots::{RootSystem, RootVector};
pub use weights::{ThetaMap, Weight};
pub use weyl::WeylGroup;
