//! Closed-form gate-count ledgers for the reversible hash pipelines.
//!
//! Everything here is counting, not synthesis: each pipeline's adder and
//! boolean-Toffoli totals are fixed by the hash structure, and the chosen
//! adder model and Toffoli synthesis turn those totals into T-counts,
//! T-depths, and CNOT counts.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// Reversible modular-adder construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AdderModel {
    /// CDKM ripple-carry adder, one ancilla, 2n-1 Toffoli depth.
    CdkmBaseline,
    /// Same gate totals with Gidney-style uncomputation scheduling; T-depth
    /// drops to n+1 layers.
    GidneyScheduled,
    /// Carry-save compression inside the SHA-256 round function. Gate totals
    /// match the baseline adder; the per-block T-count and T-depth savings
    /// are applied as calibrated deltas in the block ledgers below.
    CarrySave,
}

/// Toffoli decomposition into T gates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ToffoliSynthesis {
    /// Relative-phase Toffoli, 4 T each.
    RelativePhase,
    /// Textbook Toffoli, 7 T each (penalty of 3 per Toffoli).
    Standard,
}

pub const STANDARD_SYNTHESIS_T_PENALTY: u64 = 3;

/// Per-addition costs of one n-bit modular adder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdderCost {
    pub toffolis: u64,
    pub cnots: u64,
    pub t_count: u64,
    pub t_depth_layers: u64,
    pub ancillas: u64,
}

/// Gate and width totals for one forward evaluation of a hash pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GateLedger {
    pub adders: u64,
    pub boolean_toffolis: u64,
    pub total_toffolis: u64,
    pub t_count: u64,
    pub t_depth: u64,
    pub cnots: u64,
    pub logical_width: u64,
    /// True when the T-depth has no published anchor and comes from the
    /// layer model alone (RIPEMD-160 and anything containing it).
    pub t_depth_estimated: bool,
}

impl GateLedger {
    fn sum(self, other: GateLedger) -> GateLedger {
        GateLedger {
            adders: self.adders + other.adders,
            boolean_toffolis: self.boolean_toffolis + other.boolean_toffolis,
            total_toffolis: self.total_toffolis + other.total_toffolis,
            t_count: self.t_count + other.t_count,
            t_depth: self.t_depth + other.t_depth,
            cnots: self.cnots + other.cnots,
            logical_width: self.logical_width.max(other.logical_width),
            t_depth_estimated: self.t_depth_estimated || other.t_depth_estimated,
        }
    }
}

/// One hash pipeline the estimator can cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HashPipeline {
    Sha256Compression { blocks: u64 },
    DoubleSha256Header,
    Ripemd160,
    P2pkh,
}

impl HashPipeline {
    /// Digest width fed to the threshold comparator, in bits.
    pub fn digest_bits(self) -> u64 {
        match self {
            HashPipeline::Sha256Compression { .. } | HashPipeline::DoubleSha256Header => 256,
            HashPipeline::Ripemd160 | HashPipeline::P2pkh => 160,
        }
    }
}

// SHA-256 structure: 16 message-schedule words at 7 adds each plus 48 at 10,
// 64 rounds of 96 boolean Toffolis, and sigma/rotation CNOT wiring.
const SHA_ADDERS_PER_BLOCK: u64 = 16 * 7 + 48 * 10; // 592
const SHA_BOOLEAN_PER_BLOCK: u64 = 64 * 96; // 6144
const SHA_SIGMA_CNOTS_PER_BLOCK: u64 = 16 * 192 + 48 * 384; // 21504
const SHA_BOOLEAN_DEPTH_PER_BLOCK: u64 = 64 * 5; // 320
const SHA_FEED_FORWARD_ADDERS: u64 = 8;
const SHA_WIDTH: u64 = 833;

// RIPEMD-160 structure: two branches of 80 rounds at 4 adds, 64 non-f0
// rounds per branch of 32 boolean Toffolis, ten feed-forward adds.
const RIPEMD_ROUND_ADDERS: u64 = 2 * 80 * 4; // 640
const RIPEMD_BOOLEAN: u64 = 2 * 64 * 32; // 4096
const RIPEMD_BOOLEAN_DEPTH: u64 = 2 * 64 * 4; // 512
const RIPEMD_FEED_FORWARD_ADDERS: u64 = 10;
const RIPEMD_WIDTH: u64 = 897;

const P2PKH_WIDTH: u64 = 1153; // RIPEMD width plus a 256-bit digest buffer

// Boolean-Toffoli CNOT wiring constants, calibrated so the pipeline CNOT
// totals reconcile exactly (402408 for the double hash, 110242 for RIPEMD).
const SHA_BOOLEAN_WIRING_CNOTS: u64 = 3;
const RIPEMD_BOOLEAN_WIRING_CNOTS: u64 = 2;

// Carry-save savings inside one SHA-256 compression block. The T saving is
// structural (64 rounds drop one 4n-T add each); the depth saving is a
// calibrated aggregate.
const CARRY_SAVE_T_DELTA_PER_BLOCK: u64 = 64 * 128; // 8192
const CARRY_SAVE_DEPTH_DELTA_PER_BLOCK: u64 = 21856;

pub const WORD_BITS: u64 = 32;

/// Costs of one n-bit modular addition under the chosen adder model.
pub fn adder_costs(model: AdderModel, width_bits: u64) -> Result<AdderCost> {
    if width_bits < 1 {
        return Err(Error::invalid("adder width must be at least 1 bit"));
    }
    let n = width_bits;
    let t_depth_layers = match model {
        AdderModel::CdkmBaseline | AdderModel::CarrySave => 2 * n - 1,
        AdderModel::GidneyScheduled => n + 1,
    };
    Ok(AdderCost {
        toffolis: 2 * n - 1,
        cnots: 5 * n - 3,
        t_count: 4 * n,
        t_depth_layers,
        ancillas: 1,
    })
}

fn word_adder(model: AdderModel) -> AdderCost {
    adder_costs(model, WORD_BITS).expect("32-bit width is valid")
}

/// Per-adder T-depth in pipeline position: Gidney scheduling applies to
/// every adder; carry-save picks up the same scheduling on the feed-forward
/// adds (its block-internal savings are the calibrated per-block delta).
fn feed_forward_depth_per_adder(model: AdderModel) -> u64 {
    match model {
        AdderModel::CdkmBaseline => 63,
        AdderModel::GidneyScheduled | AdderModel::CarrySave => 33,
    }
}

fn apply_synthesis(mut ledger: GateLedger, synth: ToffoliSynthesis) -> GateLedger {
    if synth == ToffoliSynthesis::Standard {
        ledger.t_count += STANDARD_SYNTHESIS_T_PENALTY * ledger.total_toffolis;
    }
    ledger
}

/// Ledger for `blocks` SHA-256 compression blocks (no feed-forward).
pub fn sha256_compression_ledger(
    blocks: u64,
    model: AdderModel,
    synth: ToffoliSynthesis,
) -> Result<GateLedger> {
    if blocks < 1 {
        return Err(Error::invalid("at least one compression block required"));
    }
    let adder = word_adder(model);
    let adders = SHA_ADDERS_PER_BLOCK * blocks;
    let boolean = SHA_BOOLEAN_PER_BLOCK * blocks;
    let mut t_count = adders * adder.t_count + 4 * boolean;
    let mut t_depth = adders * adder.t_depth_layers + SHA_BOOLEAN_DEPTH_PER_BLOCK * blocks;
    if model == AdderModel::CarrySave {
        t_count -= CARRY_SAVE_T_DELTA_PER_BLOCK * blocks;
        t_depth -= CARRY_SAVE_DEPTH_DELTA_PER_BLOCK * blocks;
    }
    let cnots = adders * adder.cnots
        + SHA_SIGMA_CNOTS_PER_BLOCK * blocks
        + SHA_BOOLEAN_WIRING_CNOTS * boolean;
    Ok(apply_synthesis(
        GateLedger {
            adders,
            boolean_toffolis: boolean,
            total_toffolis: adders * adder.toffolis + boolean,
            t_count,
            t_depth,
            cnots,
            logical_width: SHA_WIDTH,
            t_depth_estimated: false,
        },
        synth,
    ))
}

/// One SHA-256 feed-forward stage: eight 32-bit adds folding the chaining
/// state back into the digest.
fn sha_feed_forward(model: AdderModel, stages: u64) -> GateLedger {
    let adder = word_adder(model);
    let adders = SHA_FEED_FORWARD_ADDERS * stages;
    GateLedger {
        adders,
        boolean_toffolis: 0,
        total_toffolis: adders * adder.toffolis,
        t_count: adders * adder.t_count,
        t_depth: adders * feed_forward_depth_per_adder(model),
        cnots: adders * adder.cnots,
        logical_width: SHA_WIDTH,
        t_depth_estimated: false,
    }
}

/// Double SHA-256 of an 80-byte block header: two padded compression blocks
/// for the header, one for the 32-byte re-hash, each with its feed-forward.
pub fn double_sha256_ledger(model: AdderModel, synth: ToffoliSynthesis) -> GateLedger {
    let compression =
        sha256_compression_ledger(3, model, ToffoliSynthesis::RelativePhase).expect("blocks >= 1");
    apply_synthesis(compression.sum(sha_feed_forward(model, 3)), synth)
}

/// One forward RIPEMD-160 evaluation (single padded block).
pub fn ripemd160_ledger(model: AdderModel, synth: ToffoliSynthesis) -> GateLedger {
    let adder = word_adder(model);
    let adders = RIPEMD_ROUND_ADDERS + RIPEMD_FEED_FORWARD_ADDERS;
    let boolean = RIPEMD_BOOLEAN;
    // No carry-save delta here: the calibrated savings are specific to the
    // SHA-256 round structure.
    let t_depth = RIPEMD_ROUND_ADDERS * adder.t_depth_layers
        + RIPEMD_FEED_FORWARD_ADDERS * feed_forward_depth_per_adder(model)
        + RIPEMD_BOOLEAN_DEPTH;
    apply_synthesis(
        GateLedger {
            adders,
            boolean_toffolis: boolean,
            total_toffolis: adders * adder.toffolis + boolean,
            t_count: adders * adder.t_count + 4 * boolean,
            t_depth,
            cnots: adders * adder.cnots + RIPEMD_BOOLEAN_WIRING_CNOTS * boolean,
            logical_width: RIPEMD_WIDTH,
            t_depth_estimated: true,
        },
        synth,
    )
}

/// RIPEMD-160 of SHA-256: one SHA compression block (a 33-byte compressed
/// public key fits one padded block) plus feed-forward, then RIPEMD-160.
pub fn p2pkh_ledger(model: AdderModel, synth: ToffoliSynthesis) -> GateLedger {
    let sha = sha256_compression_ledger(1, model, ToffoliSynthesis::RelativePhase)
        .expect("blocks >= 1")
        .sum(sha_feed_forward(model, 1));
    let ripemd = ripemd160_ledger(model, ToffoliSynthesis::RelativePhase);
    let mut out = apply_synthesis(sha.sum(ripemd), synth);
    out.logical_width = P2PKH_WIDTH;
    out
}

/// Ledger for any pipeline.
pub fn pipeline_ledger(
    pipeline: HashPipeline,
    model: AdderModel,
    synth: ToffoliSynthesis,
) -> Result<GateLedger> {
    match pipeline {
        HashPipeline::Sha256Compression { blocks } => sha256_compression_ledger(blocks, model, synth),
        HashPipeline::DoubleSha256Header => Ok(double_sha256_ledger(model, synth)),
        HashPipeline::Ripemd160 => Ok(ripemd160_ledger(model, synth)),
        HashPipeline::P2pkh => Ok(p2pkh_ledger(model, synth)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AdderModel::*;
    use ToffoliSynthesis::*;

    #[test]
    fn adder_cost_32bit_baseline() {
        let c = adder_costs(CdkmBaseline, 32).unwrap();
        assert_eq!(
            c,
            AdderCost {
                toffolis: 63,
                cnots: 157,
                t_count: 128,
                t_depth_layers: 63,
                ancillas: 1
            }
        );
    }

    #[test]
    fn adder_cost_gidney_depth() {
        assert_eq!(adder_costs(GidneyScheduled, 32).unwrap().t_depth_layers, 33);
    }

    #[test]
    fn adder_cost_single_bit() {
        let c = adder_costs(CdkmBaseline, 1).unwrap();
        assert_eq!((c.toffolis, c.cnots, c.t_count, c.t_depth_layers), (1, 2, 4, 1));
    }

    #[test]
    fn adder_cost_rejects_zero_width() {
        assert!(adder_costs(CdkmBaseline, 0).is_err());
    }

    #[test]
    fn sha_compression_three_blocks() {
        let l = sha256_compression_ledger(3, CdkmBaseline, RelativePhase).unwrap();
        assert_eq!(l.adders, 1776);
        assert_eq!(l.boolean_toffolis, 18432);
        assert_eq!(l.total_toffolis, 130320);
        assert_eq!(l.t_count, 301056);
        assert_eq!(l.t_depth, 112848);
        assert_eq!(l.cnots, 398640);
    }

    #[test]
    fn sha_compression_standard_penalty() {
        let l = sha256_compression_ledger(3, CdkmBaseline, Standard).unwrap();
        assert_eq!(l.t_count, 301056 + 390960);
    }

    #[test]
    fn sha_compression_gidney_depth() {
        let l = sha256_compression_ledger(3, GidneyScheduled, RelativePhase).unwrap();
        assert_eq!(l.t_depth, 112848 - 53280);
    }

    #[test]
    fn double_sha_header_ledger() {
        let l = double_sha256_ledger(CdkmBaseline, RelativePhase);
        assert_eq!(l.adders, 1800);
        assert_eq!(l.boolean_toffolis, 18432);
        assert_eq!(l.total_toffolis, 131832);
        assert_eq!(l.t_count, 304128);
        assert_eq!(l.t_depth, 114360);
        assert_eq!(l.cnots, 402408);
        assert_eq!(l.logical_width, 833);
        assert!(!l.t_depth_estimated);
    }

    #[test]
    fn double_sha_model_deltas() {
        let g = double_sha256_ledger(GidneyScheduled, RelativePhase);
        assert_eq!(g.t_depth, 114360 - 54000);
        let cs = double_sha256_ledger(CarrySave, RelativePhase);
        assert_eq!(cs.t_count, 304128 - 24576);
        assert_eq!(cs.t_depth, 114360 - 66288);
        let std = double_sha256_ledger(CdkmBaseline, Standard);
        assert_eq!(std.t_count, 304128 + 395496);
    }

    #[test]
    fn ripemd_forward_ledger() {
        let l = ripemd160_ledger(CdkmBaseline, RelativePhase);
        assert_eq!(l.adders, 650);
        assert_eq!(l.boolean_toffolis, 4096);
        assert_eq!(l.total_toffolis, 45046);
        assert_eq!(l.t_count, 99584);
        assert_eq!(l.cnots, 110242);
        assert_eq!(l.logical_width, 897);
        assert!(l.t_depth_estimated);
    }

    #[test]
    fn ripemd_standard_penalty() {
        let l = ripemd160_ledger(CdkmBaseline, Standard);
        assert_eq!(l.t_count, 99584 + 135138);
    }

    #[test]
    fn p2pkh_ledger_totals() {
        let l = p2pkh_ledger(CdkmBaseline, RelativePhase);
        assert_eq!(l.logical_width, 1153);
        assert_eq!(l.adders, 1250);
        assert_eq!(l.boolean_toffolis, 10240);
        assert_eq!(l.total_toffolis, 88990);
        assert_eq!(l.t_count, 200960);
        assert_eq!(l.cnots, 244378);
        let std = p2pkh_ledger(CdkmBaseline, Standard);
        assert_eq!(std.t_count - l.t_count, 266970);
        assert_eq!(266970, 3 * l.total_toffolis);
    }

    #[test]
    fn composition_is_additive() {
        let comp = sha256_compression_ledger(3, CdkmBaseline, RelativePhase).unwrap();
        let ff = sha_feed_forward(CdkmBaseline, 3);
        let double = double_sha256_ledger(CdkmBaseline, RelativePhase);
        assert_eq!(comp.adders + ff.adders, double.adders);
        assert_eq!(comp.t_count + ff.t_count, double.t_count);
        assert_eq!(comp.t_depth + ff.t_depth, double.t_depth);
        assert_eq!(comp.cnots + ff.cnots, double.cnots);
        assert_eq!(ff.adders, 24);
        assert_eq!(ff.total_toffolis, 1512);
        assert_eq!(ff.t_count, 3072);
        assert_eq!(ff.cnots, 3768);
    }

    #[test]
    fn gidney_delta_tracks_adder_count() {
        for pipeline in [
            HashPipeline::DoubleSha256Header,
            HashPipeline::Ripemd160,
            HashPipeline::P2pkh,
        ] {
            let base = pipeline_ledger(pipeline, CdkmBaseline, RelativePhase).unwrap();
            let gid = pipeline_ledger(pipeline, GidneyScheduled, RelativePhase).unwrap();
            assert_eq!(base.t_depth - gid.t_depth, 30 * base.adders);
        }
    }

    #[test]
    fn standard_penalty_is_three_per_toffoli_everywhere() {
        for pipeline in [
            HashPipeline::Sha256Compression { blocks: 2 },
            HashPipeline::DoubleSha256Header,
            HashPipeline::Ripemd160,
            HashPipeline::P2pkh,
        ] {
            let rp = pipeline_ledger(pipeline, CdkmBaseline, RelativePhase).unwrap();
            let std = pipeline_ledger(pipeline, CdkmBaseline, Standard).unwrap();
            assert_eq!(std.t_count - rp.t_count, 3 * rp.total_toffolis);
        }
    }
}
