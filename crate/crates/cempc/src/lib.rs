//! Certainty-equivalent MPC with computable stability and performance
//! certificates for input-constrained linear systems under bounded
//! parametric model mismatch.
//!
//! The crate builds receding-horizon controllers from an *estimated*
//! model `(Â, B̂)` that lies within known Frobenius-norm balls around the
//! true plant `(A, B)`, and computes the full ladder of constants that
//! certify closed-loop stability and bound the infinite-horizon cost of
//! the mismatched controller against the oracle optimum:
//!
//! * mismatch propagation bounds on matrix powers and the condensed
//!   prediction operators,
//! * quadratic-program sensitivity bounds on the optimal input deviation,
//! * value-gap constants `α_N`, `β_N` relating the nominal value function
//!   to the infinite-horizon optimum,
//! * relaxed-dynamic-programming decrease constants `ξ_N`, `η_N` and the
//!   stability margin `1 − ξ_N − η_N`,
//! * sufficient horizon and mismatch-size conditions, and the final
//!   closed-loop performance bound.
//!
//! Everything is validated against closed-loop simulation of the true
//! system: [`soundness`] implements the independent numerical oracles and
//! [`harness`] drives Monte Carlo sweeps over mismatch radii and
//! prediction horizons, emitting reproducible CSV/JSON artifacts.
//!
//! See the `examples/` directory for one runnable example per major
//! capability, and the `cempc` binary for the batch interface.

pub mod bounds;
pub mod error;
pub mod harness;
pub mod mpc;
pub mod numerics;
pub mod qp;
pub mod reference;
pub mod soundness;
pub mod system;

pub use error::{Error, Result};
pub use numerics::{Mat, Vector};
