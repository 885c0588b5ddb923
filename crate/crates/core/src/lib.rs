//! Numerical laboratory for a scalar balance law with a nonlocal source.
//!
//! The equation is `u_t + A(u)_x = G(u)` with a strictly convex flux; the
//! flagship instance is the Burgers flux with the Hilbert transform as the
//! source. The crate provides:
//!
//! - the flux/entropy calculus and every pointwise relative quantity
//!   ([`calculus`]),
//! - the spectral Hilbert transform and its operator contracts ([`source`]),
//! - the shock-dissipation algebra, its interval rewrite and the quantified
//!   negativity scan ([`dissipation`]),
//! - a piecewise-smooth reference solution with a log-cusp profile riding a
//!   tracked shock ([`reference`]),
//! - a Godunov finite-volume solver with Strang-split source ([`solver`]),
//! - generalized characteristics in the Filippov sense and the shift built
//!   from them ([`filippov`]),
//! - the relative-entropy functional, the dissipation ledger and the
//!   stability/shift-control verdicts ([`stability`]),
//! - batch scenario configuration, orchestration and artifact output
//!   ([`scenario`], [`report`]), and the verification suites ([`checks`]).

pub mod calculus;
pub mod checks;
pub mod dissipation;
pub mod error;
pub mod filippov;
pub mod grid;
pub mod quad;
pub mod reference;
pub mod report;
pub mod rng;
pub mod scenario;
pub mod solver;
pub mod source;
pub mod stability;

pub use calculus::{ConvexFlux, EntropyFluxPair, ShockQuadruple};
pub use error::{Error, Result};
pub use grid::{Field, SpectralGrid};
pub use source::SourceOperator;
