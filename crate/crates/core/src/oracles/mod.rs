//! Independent ground truth: classical hash implementations, a dense
//! state-vector Grover simulator, and Monte Carlo hit-rate estimation.
//! Nothing in here shares code with the closed-form cost models, so
//! agreement between the two routes is meaningful.

mod grover_sim;
mod monte_carlo;
mod ripemd160;
mod sha256;

pub use grover_sim::{grover_simulate, MarkedSet, MAX_SIM_BITS};
pub use monte_carlo::{monte_carlo_hit_rate, HitRateEstimate, MAX_MC_BITS};
pub use ripemd160::ripemd160_digest;
pub use sha256::sha256_digest;

/// double-SHA-256(m) = SHA-256(SHA-256(m)).
pub fn double_sha256(message: &[u8]) -> [u8; 32] {
    sha256_digest(&sha256_digest(message))
}

/// P2PKH address hash: RIPEMD-160(SHA-256(pk)).
pub fn p2pkh_hash(pubkey: &[u8]) -> [u8; 20] {
    ripemd160_digest(&sha256_digest(pubkey))
}
