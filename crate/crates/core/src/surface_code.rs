//! Surface-code lift: logical error fit, code-distance selection, magic
//! state factory sizing, and per-machine footprints.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lognum::LogQuantity;
use crate::mining::GroverPlan;
use crate::Result;

/// Surface-code threshold used by the logical error fit.
pub const P_THRESHOLD: f64 = 0.01;
/// Hard ceiling on the distance search.
pub const MAX_DISTANCE: u64 = 9999;
/// One 15-to-1 distillation factory occupies 1.25 d^2 physical qubits and
/// emits one T state per 10 d code cycles.
pub const FACTORY_QUBIT_FACTOR: f64 = 1.25;
pub const FACTORY_CYCLES_PER_T: f64 = 10.0;
/// Comparator plus diffusion workspace on top of pipeline width and the
/// search register.
pub const CMP_DIFF_WIDTH: u64 = 33;

/// Hardware assumptions for one architecture.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArchitectureSpec {
    pub name: String,
    pub cycle_time_tau_s: f64,
    pub layout_factor_lambda: f64,
    pub p_phys: f64,
    pub watts_per_qubit: f64,
    pub wall_plug_efficiency: f64,
}

impl ArchitectureSpec {
    pub fn validate(&self) -> Result<()> {
        if self.p_phys >= P_THRESHOLD {
            return Err(Error::AboveThreshold(self.p_phys));
        }
        if !(self.p_phys > 0.0)
            || !(self.cycle_time_tau_s > 0.0)
            || !(self.layout_factor_lambda > 0.0)
            || !(self.watts_per_qubit > 0.0)
        {
            return Err(Error::invalid(format!(
                "architecture {} has nonpositive parameters",
                self.name
            )));
        }
        if !(self.wall_plug_efficiency > 0.0 && self.wall_plug_efficiency <= 1.0) {
            return Err(Error::invalid(format!(
                "architecture {}: wall-plug efficiency must be in (0, 1]",
                self.name
            )));
        }
        Ok(())
    }

    pub fn superconducting() -> ArchitectureSpec {
        ArchitectureSpec {
            name: "superconducting".into(),
            cycle_time_tau_s: 1e-6,
            layout_factor_lambda: 2.0,
            p_phys: 1e-3,
            watts_per_qubit: 12.0,
            wall_plug_efficiency: 0.18,
        }
    }

    pub fn neutral_atom() -> ArchitectureSpec {
        ArchitectureSpec {
            name: "neutral_atom".into(),
            cycle_time_tau_s: 2e-6,
            layout_factor_lambda: 2.5,
            p_phys: 5e-4,
            watts_per_qubit: 1e-3,
            wall_plug_efficiency: 0.30,
        }
    }

    pub fn ion_trap() -> ArchitectureSpec {
        ArchitectureSpec {
            name: "ion_trap".into(),
            cycle_time_tau_s: 1e-5,
            layout_factor_lambda: 3.0,
            p_phys: 1e-4,
            watts_per_qubit: 3.0,
            wall_plug_efficiency: 0.22,
        }
    }

    /// Superconducting assumptions with the optimistic ~1 mW cryogenic
    /// per-qubit power floor. The milliwatt figure is already wall-plug, so
    /// efficiency is 1.
    pub fn cryo_optimized() -> ArchitectureSpec {
        ArchitectureSpec {
            name: "cryo_optimized".into(),
            watts_per_qubit: 1e-3,
            wall_plug_efficiency: 1.0,
            ..ArchitectureSpec::superconducting()
        }
    }

    pub fn preset(name: &str) -> Option<ArchitectureSpec> {
        match name {
            "superconducting" => Some(Self::superconducting()),
            "neutral_atom" => Some(Self::neutral_atom()),
            "ion_trap" => Some(Self::ion_trap()),
            "cryo_optimized" => Some(Self::cryo_optimized()),
            _ => None,
        }
    }
}

/// Which proxy the run-level failure budget divides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureBudgetMode {
    /// Budget 0.01 spread over the total T-count.
    TCountProxy,
    /// Budget 0.01 spread over logical width x code cycles.
    VolumeProxy,
}

/// Logical width convention for data-patch sizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthMode {
    /// Pipeline width plus search register plus comparator/diffusion
    /// workspace (833 + n + 33 for the header oracle).
    FullWidth,
    /// Pipeline width alone.
    OracleOnly,
}

/// Logical error rate per patch per cycle: 0.1 (100 p)^((d+1)/2), returned
/// as log10 to survive distances where the rate underflows f64.
pub fn logical_error_rate_log10(p_phys: f64, d: u64) -> Result<f64> {
    if !(p_phys > 0.0) {
        return Err(Error::invalid("p_phys must be positive"));
    }
    if p_phys >= P_THRESHOLD {
        return Err(Error::AboveThreshold(p_phys));
    }
    if d < 3 || d.is_multiple_of(2) {
        return Err(Error::invalid(format!("distance must be odd and >= 3, got {d}")));
    }
    Ok(-1.0 + d.div_ceil(2) as f64 * (100.0 * p_phys).log10())
}

/// Smallest odd distance meeting the failure budget 0.01/denominator, where
/// the denominator is T_tot (t-count proxy) or width x cycles (volume proxy).
pub fn required_distance(budget_denominator: LogQuantity, p_phys: f64) -> Result<u64> {
    let denom_log10 = budget_denominator
        .log10()
        .ok_or_else(|| Error::invalid("failure-budget denominator must be positive"))?;
    if denom_log10 < 0.0 {
        return Err(Error::invalid("failure-budget denominator must be at least 1"));
    }
    let p_fail_log10 = -2.0 - denom_log10;
    let mut d = 3;
    while d <= MAX_DISTANCE {
        if logical_error_rate_log10(p_phys, d)? <= p_fail_log10 {
            return Ok(d);
        }
        d += 2;
    }
    Err(Error::Infeasible(format!(
        "no distance up to {MAX_DISTANCE} meets the failure budget"
    )))
}

/// Factories needed to keep pace with the T-state demand:
/// ceil(10 d T_tot / T_depth_total) (the cycle time cancels).
pub fn factory_count(t_tot: LogQuantity, t_depth_total: LogQuantity, d: u64) -> Result<LogQuantity> {
    if t_depth_total.is_zero() {
        return Err(Error::invalid("zero logical runtime in factory sizing"));
    }
    let demand = t_tot
        .mul(LogQuantity::from_value(FACTORY_CYCLES_PER_T * d as f64)?)
        .div(t_depth_total)?;
    Ok(demand.ceil())
}

/// Physical footprint and runtime of a single machine.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MachineFootprint {
    pub code_distance_d: u64,
    pub data_qubits: LogQuantity,
    pub factory_count: LogQuantity,
    pub factory_qubits: LogQuantity,
    pub total_qubits: LogQuantity,
    pub logical_runtime_seconds: f64,
    pub logical_width_used: u64,
}

/// Size one machine for a feasible Grover plan.
///
/// `pipeline_width` is the oracle's logical width (e.g. 833 for the header
/// pipeline); `n` the search register size. Factory demand is sized against
/// the iteration T-count without the diffusion term, while the failure
/// budget uses the full T-count.
pub fn machine_footprint(
    plan: &GroverPlan,
    pipeline_width: u64,
    n: u32,
    arch: &ArchitectureSpec,
    mode: FailureBudgetMode,
    width_mode: WidthMode,
) -> Result<MachineFootprint> {
    arch.validate()?;
    if !plan.feasible {
        return Err(Error::Infeasible("cannot size a machine for an infeasible plan".into()));
    }
    let width = match width_mode {
        WidthMode::FullWidth => pipeline_width + u64::from(n) + CMP_DIFF_WIDTH,
        WidthMode::OracleOnly => pipeline_width,
    };
    let t_depth_total = plan
        .r_cap
        .mul(LogQuantity::from_value(plan.t_depth_iter as f64)?);
    let budget_denominator = match mode {
        FailureBudgetMode::TCountProxy => plan.t_tot,
        FailureBudgetMode::VolumeProxy => {
            t_depth_total.mul(LogQuantity::from_value(width as f64)?)
        }
    };
    let d = required_distance(budget_denominator, arch.p_phys)?;
    let d_sq = LogQuantity::from_value((d * d) as f64)?;
    let data_qubits = d_sq
        .mul(LogQuantity::from_value(arch.layout_factor_lambda)?)
        .mul(LogQuantity::from_value(width as f64)?);
    let t_tot_factory = plan
        .r_cap
        .mul(LogQuantity::from_value(plan.t_oracle_sans_diffusion as f64)?);
    let n_fac = factory_count(t_tot_factory, t_depth_total, d)?;
    let factory_qubits = d_sq
        .mul(LogQuantity::from_value(FACTORY_QUBIT_FACTOR)?)
        .mul(n_fac);
    let logical_runtime_seconds = t_depth_total
        .value()
        .map(|c| c * arch.cycle_time_tau_s)
        .unwrap_or(f64::INFINITY);
    Ok(MachineFootprint {
        code_distance_d: d,
        data_qubits,
        factory_count: n_fac,
        factory_qubits,
        total_qubits: data_qubits.add(factory_qubits),
        logical_runtime_seconds,
        logical_width_used: width,
    })
}
