//! Monte Carlo estimation of the proof-of-work hit rate at small
//! difficulty-bit settings.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::error::Error;
use crate::oracles::double_sha256;
use crate::Result;

pub const MAX_MC_BITS: u32 = 24;
pub const MIN_MC_SAMPLES: u64 = 10_000;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct HitRateEstimate {
    pub bits: u32,
    pub samples: u64,
    pub hits: u64,
    pub estimate: f64,
    pub standard_error: f64,
}

/// A digest counts as a hit when its big-endian integer value is below
/// 2^(256-b), i.e. when the leading b bits are zero.
fn is_hit(digest: &[u8; 32], bits: u32) -> bool {
    if bits == 0 {
        return true;
    }
    let full_bytes = (bits / 8) as usize;
    let rem = bits % 8;
    if digest[..full_bytes].iter().any(|&b| b != 0) {
        return false;
    }
    if rem == 0 {
        true
    } else {
        digest[full_bytes] >> (8 - rem) == 0
    }
}

/// Sample random 80-byte headers and count digests below the target.
pub fn monte_carlo_hit_rate(bits: u32, samples: u64, seed: u64) -> Result<HitRateEstimate> {
    if bits > MAX_MC_BITS {
        return Err(Error::invalid(format!(
            "sampling beyond b = {MAX_MC_BITS} is impractical (requested {bits})"
        )));
    }
    if samples < MIN_MC_SAMPLES {
        return Err(Error::invalid(format!(
            "at least {MIN_MC_SAMPLES} samples required, got {samples}"
        )));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut header = [0u8; 80];
    let mut hits = 0u64;
    for _ in 0..samples {
        rng.fill(&mut header[..]);
        if is_hit(&double_sha256(&header), bits) {
            hits += 1;
        }
    }
    let estimate = hits as f64 / samples as f64;
    let standard_error = (estimate * (1.0 - estimate) / samples as f64).sqrt();
    Ok(HitRateEstimate {
        bits,
        samples,
        hits,
        estimate,
        standard_error,
    })
}
