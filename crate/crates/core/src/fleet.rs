//! Fleet sizing over sweep grids of difficulty bits, runtime caps, success
//! targets, and architectures.

use serde::Serialize;

use crate::error::Error;
use crate::lognum::{ratio_of_logs, LogQuantity};
use crate::mining::{plan, GroverPlan, OracleSpec, SearchSpec};
use crate::surface_code::{
    machine_footprint, ArchitectureSpec, FailureBudgetMode, MachineFootprint, WidthMode,
};
use crate::Result;

/// Bitcoin mainnet difficulty bits on 2025-01-01 (D ~ 1.1e14).
pub const MAINNET_BITS_2025: f64 = 78.6;

/// Below this success probability ln(1 - P1) is replaced by -P1; the
/// substitution is exact to better than 1e-12 relative.
const TINY_P1: f64 = 1e-12;

/// One point of the sweep grid.
#[derive(Debug, Clone, Serialize)]
pub struct SweepCell {
    pub difficulty_bits_b: f64,
    pub t_cap_seconds: f64,
    pub target_success_pt: f64,
    pub architecture: ArchitectureSpec,
    pub oracle: OracleSpec,
    pub budget_mode: FailureBudgetMode,
    pub width_mode: WidthMode,
}

impl SweepCell {
    fn validate(&self) -> Result<()> {
        if !(self.target_success_pt > 0.0 && self.target_success_pt < 1.0) {
            return Err(Error::invalid(format!(
                "target success must be in (0, 1), got {}",
                self.target_success_pt
            )));
        }
        if !(self.t_cap_seconds > 0.0) {
            return Err(Error::invalid("runtime cap must be positive"));
        }
        self.architecture.validate()
    }
}

/// Everything known about one evaluated cell.
#[derive(Debug, Clone, Serialize)]
pub struct FleetReport {
    pub cell: SweepCell,
    pub plan: GroverPlan,
    pub machine: Option<MachineFootprint>,
    pub n_machines: Option<LogQuantity>,
    pub fleet_qubits: Option<LogQuantity>,
    pub feasible: bool,
    /// Set by ladder sweeps to name the energy rung a cell was run under.
    pub rung_tag: Option<String>,
}

/// Independent-machine fleet size: ceil(ln(1-Pt)/ln(1-P1)).
pub fn fleet_size(p1: LogQuantity, pt: f64) -> Result<LogQuantity> {
    if !(pt > 0.0 && pt < 1.0) {
        return Err(Error::invalid(format!("Pt must be in (0, 1), got {pt}")));
    }
    if p1.is_zero() {
        return Err(Error::invalid("P1 must be positive"));
    }
    let p1_log10 = p1.log10().expect("nonzero");
    if p1_log10 >= 0.0 {
        // P1 >= 1: a single machine meets any target
        return Ok(LogQuantity::ONE);
    }
    let target_ln = (1.0 - pt).ln();
    let raw = if p1_log10 > TINY_P1.log10() {
        let p1_lin = p1.value().expect("small exponent");
        if p1_lin >= 1.0 {
            // log-domain round-trip can land exactly on 1
            return Ok(LogQuantity::ONE);
        }
        ratio_of_logs(target_ln, (1.0 - p1_lin).ln())?
    } else {
        // ln(1 - P1) ~ -P1: ratio is (-ln(1-Pt)) / P1 in log domain
        LogQuantity::from_log10((-target_ln).log10() - p1_log10)?
    };
    Ok(raw.ceil())
}

/// Run the full chain for one cell: bits to marked states to Grover plan to
/// machine footprint to fleet. Infeasible cells come back flagged rather
/// than as errors.
pub fn evaluate_cell(cell: &SweepCell) -> Result<FleetReport> {
    cell.validate()?;
    let search = SearchSpec::from_bits(cell.oracle.n, cell.difficulty_bits_b)?;
    let grover = plan(
        &search,
        &cell.oracle,
        cell.t_cap_seconds,
        cell.architecture.cycle_time_tau_s,
    )?;
    if !grover.feasible {
        return Ok(FleetReport {
            cell: cell.clone(),
            plan: grover,
            machine: None,
            n_machines: None,
            fleet_qubits: None,
            feasible: false,
            rung_tag: None,
        });
    }
    let width = cell.oracle.forward_ledger()?.logical_width;
    let machine = machine_footprint(
        &grover,
        width,
        cell.oracle.n,
        &cell.architecture,
        cell.budget_mode,
        cell.width_mode,
    )?;
    let n_machines = fleet_size(grover.p1, cell.target_success_pt)?;
    let fleet_qubits = n_machines.mul(machine.total_qubits);
    Ok(FleetReport {
        cell: cell.clone(),
        plan: grover,
        machine: Some(machine),
        n_machines: Some(n_machines),
        fleet_qubits: Some(fleet_qubits),
        feasible: true,
        rung_tag: None,
    })
}

/// Evaluate the Cartesian grid in deterministic (b, t_cap, Pt, architecture)
/// order.
pub fn run_sweep(
    bits: &[f64],
    t_caps: &[f64],
    pts: &[f64],
    architectures: &[ArchitectureSpec],
    oracle: &OracleSpec,
    budget_mode: FailureBudgetMode,
    width_mode: WidthMode,
) -> Result<Vec<FleetReport>> {
    if bits.is_empty() || t_caps.is_empty() || pts.is_empty() || architectures.is_empty() {
        return Err(Error::invalid("sweep grid must be nonempty on every axis"));
    }
    let mut out = Vec::with_capacity(bits.len() * t_caps.len() * pts.len() * architectures.len());
    for &b in bits {
        for &t_cap in t_caps {
            for &pt in pts {
                for arch in architectures {
                    let cell = SweepCell {
                        difficulty_bits_b: b,
                        t_cap_seconds: t_cap,
                        target_success_pt: pt,
                        architecture: arch.clone(),
                        oracle: *oracle,
                        budget_mode,
                        width_mode,
                    };
                    out.push(evaluate_cell(&cell)?);
                }
            }
        }
    }
    Ok(out)
}
