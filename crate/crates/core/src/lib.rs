//! Exact-arithmetic toolkit for two-party Bell experiments.
//!
//! The crate models an experiment as a [`Phenomenon`] — the table of outcome
//! frequencies `f(A,B|a,b)` for a fixed preparation — and asks which
//! hidden-variable accounts ([`OntologicalModel`]) can reproduce it. On top of
//! that it provides:
//!
//! - property checkers for locality, signal locality, determinism,
//!   predictability and factorisability, each returning a concrete witness on
//!   failure;
//! - exact local-polytope membership (rational simplex feasibility, no
//!   floating-point tolerance anywhere near a "no" answer) and local bounds of
//!   Bell functionals;
//! - a zoo of named fixtures (PR box, singlet correlations, the universal
//!   deterministic completion of any rational table);
//! - a theorem engine that replays the derivation "signal locality and
//!   predictability force Bell-inequality satisfaction" on concrete models and
//!   mints [`UnpredictabilityCertificate`]s from Bell-violating data;
//! - seeded Monte Carlo simulation of finite runs with a chi-square
//!   signalling test and a plug-in CHSH estimator.
//!
//! Exact rationals are the canonical number type; floats appear only on the
//! measurement-estimate path and in trigonometric fixtures, always paired
//! with an explicit [`Tolerance`].

pub mod error;
pub mod functional;
pub mod model;
pub mod monte_carlo;
pub mod phenomenon;
pub mod polytope;
pub mod scalar;
pub mod scenario;
mod simplex;
pub mod symmetry;
pub mod theorem;
pub mod zoo;

pub use error::Error;
pub use functional::BellFunctional;
pub use model::{OntologicalModel, PropertyReport};
pub use monte_carlo::{EmpiricalPhenomenon, SettingsPolicy};
pub use phenomenon::{Phenomenon, SignalLocalityReport, ValidationReport};
pub use polytope::{DeterministicStrategy, LocalDecomposition};
pub use scalar::{Scalar, Tolerance};
pub use scenario::{Party, Scenario};
pub use symmetry::Relabelling;
pub use theorem::{TheoremVerdict, UnpredictabilityCertificate};
