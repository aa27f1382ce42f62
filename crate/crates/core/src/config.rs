//! Run configuration: TOML document plus defaults, resolved into the value
//! types the estimator modules consume.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hash_ledger::{AdderModel, HashPipeline, ToffoliSynthesis};
use crate::hesc::{preset_rung, rung_derive, EnergyRung};
use crate::mining::OracleSpec;
use crate::surface_code::{ArchitectureSpec, FailureBudgetMode, WidthMode};
use crate::Result;

fn default_n() -> u32 {
    256
}
fn default_beta() -> f64 {
    1.0
}
fn default_n_tx() -> u64 {
    1
}
fn default_aa() -> f64 {
    1.0
}
fn default_bits() -> Vec<f64> {
    vec![32.0, 64.0, 96.0, 128.0, 160.0, 192.0, 224.0, 256.0]
}
fn default_t_caps() -> Vec<f64> {
    vec![600.0]
}
fn default_pts() -> Vec<f64> {
    vec![0.5, 0.99]
}
fn default_arch_names() -> Vec<String> {
    vec!["superconducting".into()]
}
fn default_seed() -> u64 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleConfig {
    pub pipeline: HashPipeline,
    pub n: u32,
    pub alpha_merkle: u8,
    pub n_tx: u64,
    pub beta_midstate: f64,
    pub adder: AdderModel,
    pub synthesis: ToffoliSynthesis,
    pub depth_extras: bool,
    pub aa_factor: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            pipeline: HashPipeline::DoubleSha256Header,
            n: default_n(),
            alpha_merkle: 0,
            n_tx: default_n_tx(),
            beta_midstate: default_beta(),
            adder: AdderModel::CdkmBaseline,
            synthesis: ToffoliSynthesis::RelativePhase,
            depth_extras: false,
            aa_factor: default_aa(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArchOverride {
    pub tau_s: f64,
    pub lambda: f64,
    pub p_phys: f64,
    pub watts_per_qubit: f64,
    pub efficiency: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RungConfig {
    pub tag: String,
    pub energy_ev: f64,
    pub kappa: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub oracle: OracleConfig,
    pub sweep: SweepConfig,
    pub budget_mode: BudgetModeConfig,
    pub width_mode: WidthModeConfig,
    pub seed: u64,
    /// User-defined architectures, usable anywhere a preset name is.
    pub architectures: BTreeMap<String, ArchOverride>,
    /// Extra energy rungs for ladder sweeps.
    pub rungs: Vec<RungConfig>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            oracle: OracleConfig::default(),
            sweep: SweepConfig::default(),
            budget_mode: BudgetModeConfig::default(),
            width_mode: WidthModeConfig::default(),
            seed: default_seed(),
            architectures: BTreeMap::new(),
            rungs: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub bits: Vec<f64>,
    pub t_caps: Vec<f64>,
    pub pts: Vec<f64>,
    pub architectures: Vec<String>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            bits: default_bits(),
            t_caps: default_t_caps(),
            pts: default_pts(),
            architectures: default_arch_names(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetModeConfig {
    #[default]
    TCount,
    Volume,
}

impl From<BudgetModeConfig> for FailureBudgetMode {
    fn from(c: BudgetModeConfig) -> Self {
        match c {
            BudgetModeConfig::TCount => FailureBudgetMode::TCountProxy,
            BudgetModeConfig::Volume => FailureBudgetMode::VolumeProxy,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WidthModeConfig {
    #[default]
    Full,
    OracleOnly,
}

impl From<WidthModeConfig> for WidthMode {
    fn from(c: WidthModeConfig) -> Self {
        match c {
            WidthModeConfig::Full => WidthMode::FullWidth,
            WidthModeConfig::OracleOnly => WidthMode::OracleOnly,
        }
    }
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<RunConfig> {
        let config: RunConfig =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, &pt) in self.sweep.pts.iter().enumerate() {
            if !(pt > 0.0 && pt < 1.0) {
                return Err(Error::Config(format!(
                    "sweep.pts[{i}]: target success must be in (0, 1), got {pt}"
                )));
            }
        }
        for (i, &t) in self.sweep.t_caps.iter().enumerate() {
            if !(t > 0.0) {
                return Err(Error::Config(format!(
                    "sweep.t_caps[{i}]: runtime cap must be positive, got {t}"
                )));
            }
        }
        if self.oracle.n < 1 || self.oracle.n > 256 {
            return Err(Error::Config(format!(
                "oracle.n: register size must be in 1..=256, got {}",
                self.oracle.n
            )));
        }
        for name in &self.sweep.architectures {
            self.architecture(name)?.validate().map_err(|e| {
                Error::Config(format!("architectures.{name}: {e}"))
            })?;
        }
        Ok(())
    }

    pub fn oracle_spec(&self) -> OracleSpec {
        OracleSpec {
            pipeline: self.oracle.pipeline,
            alpha_merkle: self.oracle.alpha_merkle,
            n_tx: self.oracle.n_tx,
            beta_midstate: self.oracle.beta_midstate,
            n: self.oracle.n,
            adder: self.oracle.adder,
            synthesis: self.oracle.synthesis,
            depth_extras: self.oracle.depth_extras,
            aa_factor: self.oracle.aa_factor,
        }
    }

    /// Resolve an architecture name: config-defined specs shadow presets.
    pub fn architecture(&self, name: &str) -> Result<ArchitectureSpec> {
        if let Some(o) = self.architectures.get(name) {
            return Ok(ArchitectureSpec {
                name: name.to_string(),
                cycle_time_tau_s: o.tau_s,
                layout_factor_lambda: o.lambda,
                p_phys: o.p_phys,
                watts_per_qubit: o.watts_per_qubit,
                wall_plug_efficiency: o.efficiency,
            });
        }
        ArchitectureSpec::preset(name).ok_or_else(|| {
            Error::Config(format!("sweep.architectures: unknown architecture '{name}'"))
        })
    }

    pub fn sweep_architectures(&self) -> Result<Vec<ArchitectureSpec>> {
        self.sweep.architectures.iter().map(|n| self.architecture(n)).collect()
    }

    /// Preset rungs plus any user rungs from the config.
    pub fn ladder_rungs(&self) -> Result<Vec<EnergyRung>> {
        let mut rungs = crate::hesc::preset_rungs();
        for rc in &self.rungs {
            if preset_rung(&rc.tag).is_some() || rungs.iter().any(|r| r.tag == rc.tag) {
                return Err(Error::Config(format!("rungs: duplicate tag '{}'", rc.tag)));
            }
            rungs.push(rung_derive(rc.tag.clone(), rc.energy_ev, rc.kappa)?);
        }
        Ok(rungs)
    }
}
