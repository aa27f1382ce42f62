//! Classical mining baselines, quantum fleet power, and Kardashev
//! classification.

use serde::Serialize;

use crate::error::Error;
use crate::lognum::LogQuantity;
use crate::surface_code::ArchitectureSpec;
use crate::Result;

/// Kardashev band thresholds in watts (boundary belongs to the higher band).
pub const KARDASHEV_I_W: f64 = 1e16;
pub const KARDASHEV_II_W: f64 = 1e26;
pub const KARDASHEV_III_W: f64 = 1e36;

/// Miner efficiency in joules per terahash.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EfficiencyTrack {
    pub name: String,
    pub joules_per_terahash: f64,
}

impl EfficiencyTrack {
    pub fn new(name: impl Into<String>, joules_per_terahash: f64) -> Result<Self> {
        if !(joules_per_terahash > 0.0) {
            return Err(Error::invalid("efficiency must be positive J/TH"));
        }
        Ok(EfficiencyTrack {
            name: name.into(),
            joules_per_terahash,
        })
    }

    pub fn s9() -> Self {
        Self::new("s9", 80.0).expect("positive")
    }

    pub fn s19() -> Self {
        Self::new("s19", 29.5).expect("positive")
    }

    pub fn s21() -> Self {
        Self::new("s21", 17.5).expect("positive")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "s9" => Some(Self::s9()),
            "s19" => Some(Self::s19()),
            "s21" => Some(Self::s21()),
            _ => None,
        }
    }
}

/// Kardashev band with a continuous index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KardashevClass {
    pub band: KardashevBand,
    /// Continuous index (log10 W - 6) / 10.
    pub index: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KardashevBand {
    SubI,
    I,
    II,
    III,
    Beyond,
}

impl std::fmt::Display for KardashevBand {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            KardashevBand::SubI => "sub_I",
            KardashevBand::I => "I",
            KardashevBand::II => "II",
            KardashevBand::III => "III",
            KardashevBand::Beyond => "beyond",
        };
        f.write_str(s)
    }
}

/// Combined power picture for one sweep cell.
#[derive(Debug, Clone, Serialize)]
pub struct PowerReport {
    pub fleet_watts: LogQuantity,
    pub classical_watts: f64,
    pub ratio_q_over_c: LogQuantity,
    pub kardashev: KardashevClass,
}

/// Network hashrate H = D 2^32 / 600 in hashes per second.
pub fn network_hashrate(difficulty: f64) -> Result<f64> {
    if !(difficulty > 0.0) {
        return Err(Error::invalid("difficulty must be positive"));
    }
    Ok(difficulty * 2f64.powi(32) / 600.0)
}

/// Network electrical power in watts under an efficiency track.
pub fn network_power(difficulty: f64, track: &EfficiencyTrack) -> Result<f64> {
    Ok(track.joules_per_terahash * network_hashrate(difficulty)? / 1e12)
}

/// Fleet wall-plug power: qubits x per-qubit watts / efficiency.
pub fn fleet_power(fleet_qubits: LogQuantity, arch: &ArchitectureSpec) -> Result<LogQuantity> {
    arch.validate()?;
    if fleet_qubits.is_zero() {
        return Err(Error::Infeasible("no fleet to power".into()));
    }
    fleet_qubits.div(LogQuantity::from_value(
        arch.wall_plug_efficiency / arch.watts_per_qubit,
    )?)
}

pub fn kardashev_classify(watts: LogQuantity) -> KardashevClass {
    let log10_w = watts.log10_or_neg_inf();
    let band = if log10_w >= KARDASHEV_III_W.log10() + 10.0 {
        KardashevBand::Beyond
    } else if log10_w >= KARDASHEV_III_W.log10() {
        KardashevBand::III
    } else if log10_w >= KARDASHEV_II_W.log10() {
        KardashevBand::II
    } else if log10_w >= KARDASHEV_I_W.log10() {
        KardashevBand::I
    } else {
        KardashevBand::SubI
    };
    KardashevClass {
        band,
        index: (log10_w - 6.0) / 10.0,
    }
}

/// Log-domain quantum/classical power ratio.
pub fn quantum_classical_ratio(
    fleet_watts: LogQuantity,
    classical_watts: f64,
) -> Result<LogQuantity> {
    if !(classical_watts > 0.0) {
        return Err(Error::invalid("classical power must be positive"));
    }
    fleet_watts.div(LogQuantity::from_value(classical_watts)?)
}

pub fn power_report(
    fleet_qubits: LogQuantity,
    arch: &ArchitectureSpec,
    difficulty: f64,
    track: &EfficiencyTrack,
) -> Result<PowerReport> {
    let fleet_watts = fleet_power(fleet_qubits, arch)?;
    let classical_watts = network_power(difficulty, track)?;
    Ok(PowerReport {
        fleet_watts,
        classical_watts,
        ratio_q_over_c: quantum_classical_ratio(fleet_watts, classical_watts)?,
        kardashev: kardashev_classify(fleet_watts),
    })
}
