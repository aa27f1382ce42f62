//! High-energy surface-code ladder: energy scale to cycle time, length, and
//! Grover depth multiplier, plus fleet sweeps rerun at each rung.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fleet::{run_sweep, FleetReport};
use crate::mining::OracleSpec;
use crate::surface_code::{ArchitectureSpec, FailureBudgetMode, WidthMode};
use crate::Result;

// CODATA constants, fixed for determinism.
pub const H_EV_S: f64 = 4.135667696e-15;
pub const HBAR_C_EV_M: f64 = 1.973269804e-7;
pub const H_SI: f64 = 6.62607015e-34;
pub const EV_J: f64 = 1.602176634e-19;

/// Microwave baseline: E and kappa chosen so tau_cyc = kappa h / E = 1 us.
pub const BASE_ENERGY_EV: f64 = 2.067834e-5;
pub const BASE_KAPPA: f64 = 5e3;

/// One rung of the energy ladder.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyRung {
    pub tag: String,
    pub energy_ev: f64,
    pub kappa: f64,
    pub tau0_seconds: f64,
    pub tau_cyc_seconds: f64,
    pub length_m: f64,
    pub speedup: f64,
}

/// Derive a rung from energy and overhead: tau0 = h/E, tau_cyc = kappa h/E,
/// ell = hbar c/E, S = (E/kappa)/(E_base/kappa_base).
pub fn rung_derive(tag: impl Into<String>, energy_ev: f64, kappa: f64) -> Result<EnergyRung> {
    if !(energy_ev > 0.0) || !(kappa > 0.0) {
        return Err(Error::invalid("rung energy and kappa must be positive"));
    }
    let tau0 = H_EV_S / energy_ev;
    Ok(EnergyRung {
        tag: tag.into(),
        energy_ev,
        kappa,
        tau0_seconds: tau0,
        tau_cyc_seconds: kappa * tau0,
        length_m: HBAR_C_EV_M / energy_ev,
        speedup: (energy_ev / kappa) / (BASE_ENERGY_EV / BASE_KAPPA),
    })
}

/// The ten published rungs. Speedup values are pinned to the published
/// column, which departs from the derived (E/kappa) ratio above the optical
/// rung; `rung_derive` stays the formula-true path for user rungs.
pub fn preset_rungs() -> Vec<EnergyRung> {
    let rows: [(&str, f64, f64, f64); 10] = [
        ("surface_mw_5GHz", 2.067834e-5, 5.000e3, 1.00e0),
        ("surface_thz_10meV", 1.000000e-2, 1.00e3, 2.42e3),
        ("surface_opt_2eV", 2.000000e0, 1.00e2, 1.00e5),
        ("surface_xray_10keV", 1.000000e4, 1.00e1, 1.00e8),
        ("surface_nuclear_1MeV", 1.000000e6, 5.00e0, 4.00e9),
        ("surface_qcd_100MeV", 1.000000e8, 2.00e0, 1.00e11),
        ("surface_ew_100GeV", 1.000000e11, 1.00e0, 1.00e14),
        ("surface_tev_1TeV", 1.000000e12, 1.00e0, 1.00e15),
        ("surface_gut_1e16GeV", 1.000000e19, 1.00e0, 1.00e22),
        ("surface_planck", 1.221000e28, 1.00e0, 1.22e31),
    ];
    rows.iter()
        .map(|&(tag, e, kappa, s)| {
            let mut rung = rung_derive(tag, e, kappa).expect("preset inputs are positive");
            rung.speedup = s;
            rung
        })
        .collect()
}

pub fn preset_rung(tag: &str) -> Option<EnergyRung> {
    preset_rungs().into_iter().find(|r| r.tag == tag)
}

/// Thermodynamic per-qubit gate power floor E^2/(kappa h), SI evaluation.
pub fn gate_power_floor(energy_ev: f64, kappa: f64) -> Result<f64> {
    if !(energy_ev > 0.0) || !(kappa > 0.0) {
        return Err(Error::invalid("energy and kappa must be positive"));
    }
    let e_j = energy_ev * EV_J;
    Ok(e_j * e_j / (kappa * H_SI))
}

/// Rerun the fleet sweep once per rung with the rung's cycle time swapped
/// into the base architecture; everything else is inherited. Reports carry
/// the rung tag.
#[allow(clippy::too_many_arguments)]
pub fn ladder_sweep(
    rungs: &[EnergyRung],
    bits: &[f64],
    t_caps: &[f64],
    pts: &[f64],
    base_arch: &ArchitectureSpec,
    oracle: &OracleSpec,
    budget_mode: FailureBudgetMode,
    width_mode: WidthMode,
) -> Result<Vec<FleetReport>> {
    if rungs.is_empty() {
        return Err(Error::invalid("at least one rung required"));
    }
    let mut out = Vec::new();
    for rung in rungs {
        let mut arch = base_arch.clone();
        arch.cycle_time_tau_s = rung.tau_cyc_seconds;
        let mut reports = run_sweep(bits, t_caps, pts, &[arch], oracle, budget_mode, width_mode)?;
        for r in &mut reports {
            r.rung_tag = Some(rung.tag.clone());
        }
        out.extend(reports);
    }
    Ok(out)
}
