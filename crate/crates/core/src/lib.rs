//! Deterministic resource estimator that turns Bitcoin-mining difficulty,
//! runtime caps, and success targets into fault-tolerant quantum hardware
//! bills: logical gate ledgers, surface-code footprints, machine fleets,
//! and wall-plug power.
//!
//! The crate is organized bottom-up:
//!
//! * [`lognum`]: log-domain nonnegative scalars (fleet sizes reach ~10^76)
//! * [`hash_ledger`]: closed-form gate ledgers for the reversible hash pipelines
//! * [`mining`]: difficulty to Grover search geometry and per-iteration costs
//! * [`surface_code`]: code-distance selection, factory sizing, machine footprints
//! * [`fleet`]: fleet sizing over (difficulty bits, runtime cap, success target) grids
//! * [`energy`]: classical mining baselines, fleet power, Kardashev classification
//! * [`hesc`]: high-energy surface-code ladder and rescaled sweeps
//! * [`oracles`]: independent ground truth: classical hashes, a dense Grover
//!   simulator, and Monte Carlo hit-rate estimation
//! * [`config`] / [`report`]: run configuration, CSV/JSON/SVG emission

// validation uses `!(x > 0.0)` on purpose: it rejects NaN along with
// nonpositive values, which `x <= 0.0` would let through
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// LogQuantity's mul/div/add are plain methods, not operator impls: div is
// fallible and the std traits would hide that
#![allow(clippy::should_implement_trait)]

pub mod config;
pub mod energy;
pub mod error;
pub mod fleet;
pub mod hash_ledger;
pub mod hesc;
pub mod lognum;
pub mod mining;
pub mod oracles;
pub mod report;
pub mod surface_code;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
