//! Difficulty to Grover geometry, and per-iteration oracle costs.
//!
//! The chain is: difficulty D fixes the hit probability p and difficulty
//! bits b; the register size n and b fix the marked-state count M and the
//! Grover angle; the angle fixes the ideal iteration count; the runtime cap
//! and per-iteration depth fix the capped count and the single-machine
//! success probability.

use serde::Serialize;

use crate::error::Error;
use crate::hash_ledger::{
    pipeline_ledger, AdderModel, GateLedger, HashPipeline, ToffoliSynthesis,
};
use crate::lognum::LogQuantity;
use crate::Result;

/// Exact compact-target numerator: T1 = 2^208 (2^16 - 1). Carried as log2
/// since the integer does not fit in u64.
pub fn t1_log2() -> f64 {
    208.0 + (65535f64).log2()
}

/// Below this sine the angle is carried as sin itself (relative error below
/// 2^-80 in this regime).
const SMALL_ANGLE_SIN: f64 = 1.0 / (1u64 << 20) as f64;

/// Difficulty translated into hit probability and difficulty bits.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DifficultySpec {
    pub difficulty: f64,
    /// log2 of the hit probability p (always negative in practice).
    pub p_log2: f64,
    pub bits: f64,
}

pub fn difficulty_to_bits(difficulty: f64) -> Result<DifficultySpec> {
    if !(difficulty > 0.0) || !difficulty.is_finite() {
        return Err(Error::invalid(format!(
            "difficulty must be a positive finite real, got {difficulty}"
        )));
    }
    let p_log2 = t1_log2() - 256.0 - difficulty.log2();
    Ok(DifficultySpec {
        difficulty,
        p_log2,
        bits: -p_log2,
    })
}

/// Search geometry: register size, marked-state count, Grover angle.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SearchSpec {
    pub n: u32,
    /// log2 of the marked-state count M, clamped to [0, n].
    pub marked_log2: f64,
}

impl SearchSpec {
    /// From register size and difficulty bits: M = clamp(2^(n-b), 1, 2^n).
    pub fn from_bits(n: u32, bits: f64) -> Result<Self> {
        if !(1..=256).contains(&n) {
            return Err(Error::invalid(format!(
                "register size must be in 1..=256, got {n}"
            )));
        }
        if !bits.is_finite() {
            return Err(Error::invalid("difficulty bits must be finite"));
        }
        let marked_log2 = (f64::from(n) - bits).clamp(0.0, f64::from(n));
        Ok(SearchSpec { n, marked_log2 })
    }

    pub fn from_difficulty(n: u32, difficulty: f64) -> Result<Self> {
        Self::from_bits(n, difficulty_to_bits(difficulty)?.bits)
    }

    pub fn marked(&self) -> LogQuantity {
        LogQuantity::from_log2(self.marked_log2).expect("clamped exponent is finite")
    }

    /// log2 of sin(theta) = sqrt(M/N).
    pub fn sin_theta_log2(&self) -> f64 {
        (self.marked_log2 - f64::from(self.n)) / 2.0
    }

    fn sin_theta(&self) -> f64 {
        self.sin_theta_log2().exp2()
    }

    /// The Grover angle in radians; below the small-angle cutoff this equals
    /// sin(theta) to relative error under 2^-80.
    pub fn theta(&self) -> f64 {
        let s = self.sin_theta();
        if s < SMALL_ANGLE_SIN {
            s
        } else {
            s.asin()
        }
    }

    pub fn theta_log2(&self) -> f64 {
        let s = self.sin_theta();
        if s < SMALL_ANGLE_SIN {
            self.sin_theta_log2()
        } else {
            s.asin().log2()
        }
    }
}

/// Marked-state count M(n, D) = max(1, min(2^n, (T1/D) 2^(n-256))).
pub fn marked_states(n: u32, difficulty: f64) -> Result<LogQuantity> {
    Ok(SearchSpec::from_difficulty(n, difficulty)?.marked())
}

/// Hash-work multiplier k·beta with k = 1 + alpha (1 + ceil(log2 n_tx)).
pub fn hash_work_factor(alpha: u8, n_tx: u64, beta: f64) -> Result<f64> {
    if alpha > 1 {
        return Err(Error::invalid("alpha must be 0 or 1"));
    }
    if beta != 1.0 && beta != 0.5 {
        return Err(Error::invalid("beta must be 1 or 1/2"));
    }
    if alpha == 1 {
        if n_tx < 1 {
            return Err(Error::invalid("n_tx must be at least 1 when alpha = 1"));
        }
        if beta != 1.0 {
            return Err(Error::invalid("midstate reuse (beta = 1/2) requires alpha = 0"));
        }
        let k = 1 + 1 + (n_tx as f64).log2().ceil() as u64;
        Ok(k as f64)
    } else {
        Ok(beta)
    }
}

/// Ideal Grover iteration count r = max(1, round_half_even(pi/(4 theta) - 1/2));
/// small angles drop the rounding (a half-unit shift is invisible there).
pub fn grover_iterations(search: &SearchSpec) -> LogQuantity {
    let s = search.sin_theta();
    if s < SMALL_ANGLE_SIN {
        let r_log2 = (std::f64::consts::PI / 4.0).log2() - search.sin_theta_log2();
        return LogQuantity::from_log2(r_log2).expect("finite");
    }
    let raw = std::f64::consts::PI / (4.0 * s.asin()) - 0.5;
    let r = raw.round_ties_even().max(1.0);
    LogQuantity::from_value(r).expect("positive")
}

/// Oracle configuration for one Grover iteration.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct OracleSpec {
    pub pipeline: HashPipeline,
    pub alpha_merkle: u8,
    pub n_tx: u64,
    pub beta_midstate: f64,
    pub n: u32,
    pub adder: AdderModel,
    pub synthesis: ToffoliSynthesis,
    /// Include comparator and diffusion layers in the per-iteration T-depth.
    pub depth_extras: bool,
    /// Constant-factor multiplier for fixed-point amplitude amplification
    /// (1.0 = off).
    pub aa_factor: f64,
}

impl OracleSpec {
    pub fn header_default(n: u32) -> OracleSpec {
        OracleSpec {
            pipeline: HashPipeline::DoubleSha256Header,
            alpha_merkle: 0,
            n_tx: 1,
            beta_midstate: 1.0,
            n,
            adder: AdderModel::CdkmBaseline,
            synthesis: ToffoliSynthesis::RelativePhase,
            depth_extras: false,
            aa_factor: 1.0,
        }
    }

    pub fn k_beta(&self) -> Result<f64> {
        Ok(hash_work_factor(self.alpha_merkle, self.n_tx, self.beta_midstate)? * self.aa_factor)
    }

    pub fn forward_ledger(&self) -> Result<GateLedger> {
        pipeline_ledger(self.pipeline, self.adder, self.synthesis)
    }

    pub fn comparator_chunks(&self) -> u64 {
        self.pipeline.digest_bits().div_ceil(32)
    }

    /// T-count of one full Grover iteration: forward and inverse hash work,
    /// comparator both directions, and the diffusion operator.
    pub fn oracle_tcount(&self) -> Result<u64> {
        let hash = 2.0 * self.k_beta()? * self.forward_ledger()?.t_count as f64;
        Ok(hash.round() as u64 + self.comparator_tcount() + self.diffusion_tcount())
    }

    /// 128 T per 32-bit comparator chunk per direction.
    pub fn comparator_tcount(&self) -> u64 {
        2 * self.comparator_chunks() * 128
    }

    /// T_diff(n) = 8 (n - 2).
    pub fn diffusion_tcount(&self) -> u64 {
        8 * (u64::from(self.n) - 2)
    }

    /// Iteration T-count without the diffusion term; factory sizing is
    /// calibrated against this hash-plus-comparator subtotal.
    pub fn oracle_tcount_sans_diffusion(&self) -> Result<u64> {
        Ok(self.oracle_tcount()? - self.diffusion_tcount())
    }

    /// Per-iteration T-depth: twice the forward hash depth. Comparator and
    /// diffusion layers are excluded unless `depth_extras` is set; the
    /// sweep calibration holds only for the bare hash depth.
    pub fn oracle_tdepth(&self) -> Result<u64> {
        let ledger = self.forward_ledger()?;
        let hash = 2.0 * self.k_beta()? * ledger.t_depth as f64;
        let mut depth = hash.round() as u64;
        if self.depth_extras {
            let per_chunk = match self.adder {
                AdderModel::CdkmBaseline | AdderModel::CarrySave => 63,
                AdderModel::GidneyScheduled => 33,
            };
            depth += 2 * self.comparator_chunks() * per_chunk;
            depth += 2 * (u64::from(self.n) - 2);
        }
        Ok(depth)
    }
}

/// Time-capped iteration count: min(r_ideal, floor(t_cap/t_iter)); zero
/// marks an infeasible cell.
pub fn capped_iterations(
    r_ideal: LogQuantity,
    t_cap_seconds: f64,
    t_iter_seconds: f64,
) -> Result<LogQuantity> {
    if !(t_cap_seconds > 0.0) || !(t_iter_seconds > 0.0) {
        return Err(Error::invalid("runtime cap and iteration time must be positive"));
    }
    let budget = (t_cap_seconds / t_iter_seconds).floor();
    if budget < 1.0 {
        return Ok(LogQuantity::ZERO);
    }
    Ok(r_ideal.min(LogQuantity::from_value(budget)?))
}

/// Single-machine success P1 = sin^2((2 r_cap + 1) theta), with a quadratic
/// branch once the argument drops below 1e-4.
pub fn single_machine_success(r_cap: LogQuantity, search: &SearchSpec) -> Result<LogQuantity> {
    if r_cap.is_zero() {
        return Err(Error::Infeasible(
            "r_cap = 0: runtime cap below one Grover iteration".into(),
        ));
    }
    let theta_log10 = search.theta_log2() * std::f64::consts::LOG10_2;
    // log10 of (2 r_cap + 1); the +1 is applied exactly when r_cap is
    // linearly representable.
    let arg_log10 = match r_cap.value() {
        Some(r) if r < 1e15 => (2.0 * r + 1.0).log10() + theta_log10,
        _ => r_cap.log10().expect("nonzero") + 2f64.log10() + theta_log10,
    };
    if arg_log10 < -4.0 {
        return LogQuantity::from_log10(2.0 * arg_log10);
    }
    let x = 10f64.powf(arg_log10);
    LogQuantity::from_value(x.sin().powi(2))
}

/// A fully resolved Grover schedule for one machine.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GroverPlan {
    pub r_ideal: LogQuantity,
    pub r_cap: LogQuantity,
    pub t_iter_seconds: f64,
    pub t_oracle: u64,
    pub t_oracle_sans_diffusion: u64,
    pub t_depth_iter: u64,
    pub t_tot: LogQuantity,
    pub p1: LogQuantity,
    pub feasible: bool,
}

/// Build the full schedule for one machine under a runtime cap and a code
/// cycle time tau.
pub fn plan(
    search: &SearchSpec,
    oracle: &OracleSpec,
    t_cap_seconds: f64,
    tau_seconds: f64,
) -> Result<GroverPlan> {
    let t_oracle = oracle.oracle_tcount()?;
    let t_depth_iter = oracle.oracle_tdepth()?;
    let t_iter = t_depth_iter as f64 * tau_seconds;
    let r_ideal = grover_iterations(search);
    let r_cap = capped_iterations(r_ideal, t_cap_seconds, t_iter)?;
    if r_cap.is_zero() {
        return Ok(GroverPlan {
            r_ideal,
            r_cap,
            t_iter_seconds: t_iter,
            t_oracle,
            t_oracle_sans_diffusion: oracle.oracle_tcount_sans_diffusion()?,
            t_depth_iter,
            t_tot: LogQuantity::ZERO,
            p1: LogQuantity::ZERO,
            feasible: false,
        });
    }
    let t_tot = r_cap.mul(LogQuantity::from_value(t_oracle as f64)?);
    let p1 = single_machine_success(r_cap, search)?;
    Ok(GroverPlan {
        r_ideal,
        r_cap,
        t_iter_seconds: t_iter,
        t_oracle,
        t_oracle_sans_diffusion: oracle.oracle_tcount_sans_diffusion()?,
        t_depth_iter,
        t_tot,
        p1,
        feasible: true,
    })
}
