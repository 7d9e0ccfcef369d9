//! Information-theoretic limits from black-hole physics.
//!
//! The crate evaluates entropy bounds for bounded systems and closed
//! universes, the one-channel (noiseless quantum channel) capacity, black-body
//! and black-hole emission laws, and the information envelope of signal
//! pulses. Every closed form is paired with an independent numerical route
//! (semi-infinite quadrature, Hermitian eigendecomposition, log-log fits) so
//! that the formulas can be checked against each other.
//!
//! All computations run in Planck units (`G = c = ħ = k_B = 1`) and entropy is
//! carried in nats. [`units`] converts at the boundary.
//!
//! ```
//! use holobound::channel::{pendry_rate, Statistics};
//! use holobound::units::{Dimension, Quantity};
//!
//! let power = Quantity::planck(3.0 / std::f64::consts::PI, Dimension::POWER);
//! let rate = pendry_rate(power, Statistics::Boson).unwrap();
//! assert!((rate.entropy_rate.value() - 1.0).abs() < 1e-12);
//! ```

// Guards like `!(x > 0.0)` are meant to reject NaN as well.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod blackhole;
pub mod bounds;
pub mod channel;
pub mod cli;
mod error;
pub mod gedanken;
pub mod numerics;
pub mod qinfo;
pub mod units;

pub use error::{Error, Result};
