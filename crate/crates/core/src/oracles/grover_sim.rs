//! Dense real-valued state-vector simulation of Grover iterations.
//!
//! Amplitudes stay real throughout (phase oracle and inversion about the
//! mean preserve the real subspace), so a plain f64 vector suffices.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::Result;

pub const MAX_SIM_BITS: u32 = 14;

/// The oracle's marked set on an n-bit register.
#[derive(Debug, Clone)]
pub struct MarkedSet {
    n: u32,
    indices: BTreeSet<u64>,
}

impl MarkedSet {
    pub fn new(n: u32, indices: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 || n > MAX_SIM_BITS {
            return Err(Error::Capacity(format!(
                "simulator register must be 1..={MAX_SIM_BITS} bits, got {n}"
            )));
        }
        let size = 1u64 << n;
        let indices: BTreeSet<u64> = indices.into_iter().collect();
        if indices.is_empty() {
            return Err(Error::invalid("marked set must be nonempty"));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= size) {
            return Err(Error::invalid(format!(
                "marked index {bad} out of range for {n}-bit register"
            )));
        }
        Ok(MarkedSet { n, indices })
    }

    /// The first `m` computational-basis states marked.
    pub fn first_m(n: u32, m: u64) -> Result<Self> {
        Self::new(n, 0..m)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u64 {
        self.indices.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Run `iterations` rounds of (diffusion after phase oracle) on the uniform
/// superposition; returns the probability mass on the marked set.
pub fn grover_simulate(marked: &MarkedSet, iterations: u64) -> Result<f64> {
    let size = 1usize << marked.n;
    let mut amp = vec![1.0 / (size as f64).sqrt(); size];
    for _ in 0..iterations {
        for &i in &marked.indices {
            amp[i as usize] = -amp[i as usize];
        }
        let mean = amp.iter().sum::<f64>() / size as f64;
        for a in amp.iter_mut() {
            *a = 2.0 * mean - *a;
        }
    }
    let norm: f64 = amp.iter().map(|a| a * a).sum();
    debug_assert!((norm - 1.0).abs() < 1e-9 * (1 + iterations) as f64);
    Ok(marked.indices.iter().map(|&i| amp[i as usize].powi(2)).sum())
}
