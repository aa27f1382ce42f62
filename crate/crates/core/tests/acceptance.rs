//! Acceptance suite: one test per release criterion, each printing a
//! [PASS]/[FAIL] line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria too.

use std::time::Instant;

use qmine::energy::{self, EfficiencyTrack};
use qmine::fleet::{evaluate_cell, run_sweep, SweepCell, MAINNET_BITS_2025};
use qmine::hash_ledger::{
    double_sha256_ledger, p2pkh_ledger, ripemd160_ledger, AdderModel, HashPipeline,
    ToffoliSynthesis,
};
use qmine::hesc::{ladder_sweep, preset_rung, preset_rungs};
use qmine::lognum::LogQuantity;
use qmine::mining::{plan, OracleSpec, SearchSpec};
use qmine::oracles::{
    grover_simulate, monte_carlo_hit_rate, ripemd160_digest, sha256_digest, MarkedSet,
};
use qmine::report::{flatten, to_csv};
use qmine::surface_code::{
    factory_count, machine_footprint, ArchitectureSpec, FailureBudgetMode, WidthMode,
};

type Check = Result<String, String>;

fn criterion(n: u32, name: &str, f: impl FnOnce() -> Check) {
    match f() {
        Ok(detail) => println!("[PASS] criterion {n} ({name}): {detail}"),
        Err(msg) => {
            println!("[FAIL] criterion {n} ({name}): {msg}");
            panic!("criterion {n} ({name}): {msg}");
        }
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(label: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got:?}, want {want:?}"))
    }
}

fn expect_rel(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    let rel = (got - want).abs() / want.abs();
    if rel <= tol {
        Ok(())
    } else {
        Err(format!("{label}: got {got:.6e}, want {want:.6e} within {tol} (off by {rel:.4})"))
    }
}

fn expect_abs(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    if (got - want).abs() <= tol {
        Ok(())
    } else {
        Err(format!("{label}: got {got:.4}, want {want:.4} +/- {tol}"))
    }
}

fn header_oracle() -> OracleSpec {
    OracleSpec::header_default(256)
}

fn sc_cell(b: f64, t_cap: f64, pt: f64) -> SweepCell {
    SweepCell {
        difficulty_bits_b: b,
        t_cap_seconds: t_cap,
        target_success_pt: pt,
        architecture: ArchitectureSpec::superconducting(),
        oracle: header_oracle(),
        budget_mode: FailureBudgetMode::TCountProxy,
        width_mode: WidthMode::FullWidth,
    }
}

#[test]
fn c01_header_ledger_exact() {
    criterion(1, "header ledger exactness", || {
        let start = Instant::now();
        let l = double_sha256_ledger(AdderModel::CdkmBaseline, ToffoliSynthesis::RelativePhase);
        let std = double_sha256_ledger(AdderModel::CdkmBaseline, ToffoliSynthesis::Standard);
        let gid = double_sha256_ledger(AdderModel::GidneyScheduled, ToffoliSynthesis::RelativePhase);
        let cs = double_sha256_ledger(AdderModel::CarrySave, ToffoliSynthesis::RelativePhase);
        let elapsed = start.elapsed();
        expect_eq("adders", l.adders, 1800)?;
        expect_eq("boolean toffolis", l.boolean_toffolis, 18432)?;
        expect_eq("total toffolis", l.total_toffolis, 131832)?;
        expect_eq("t count", l.t_count, 304128)?;
        expect_eq("t depth", l.t_depth, 114360)?;
        expect_eq("cnots", l.cnots, 402408)?;
        expect_eq("width", l.logical_width, 833)?;
        expect_eq("standard synthesis t count", std.t_count, 304128 + 395496)?;
        expect_eq("gidney t depth", gid.t_depth, 114360 - 54000)?;
        expect_eq("carry-save t depth", cs.t_depth, 114360 - 66288)?;
        if elapsed.as_micros() >= 1000 {
            return Err(format!("ledger took {elapsed:?}, budget 1 ms"));
        }
        Ok(format!("all fields exact, computed in {elapsed:?}"))
    });
}

#[test]
fn c02_ripemd_p2pkh_ledgers_exact() {
    criterion(2, "RIPEMD/P2PKH ledger exactness", || {
        let r = ripemd160_ledger(AdderModel::CdkmBaseline, ToffoliSynthesis::RelativePhase);
        expect_eq("ripemd adders", r.adders, 650)?;
        expect_eq("ripemd boolean toffolis", r.boolean_toffolis, 4096)?;
        expect_eq("ripemd total toffolis", r.total_toffolis, 45046)?;
        expect_eq("ripemd t count", r.t_count, 99584)?;
        expect_eq("ripemd cnots", r.cnots, 110242)?;
        let p = p2pkh_ledger(AdderModel::CdkmBaseline, ToffoliSynthesis::RelativePhase);
        let p_std = p2pkh_ledger(AdderModel::CdkmBaseline, ToffoliSynthesis::Standard);
        expect_eq("p2pkh width", p.logical_width, 1153)?;
        expect_eq("p2pkh t count", p.t_count, 200960)?;
        expect_eq("p2pkh standard penalty", p_std.t_count - p.t_count, 266970)?;
        expect_eq("p2pkh cnots", p.cnots, 244378)?;
        Ok("both ledgers exact".into())
    });
}

#[test]
fn c03_difficulty_one_footprint() {
    criterion(3, "difficulty-1 footprint", || {
        let arch = ArchitectureSpec::superconducting();
        let search = SearchSpec::from_difficulty(256, 1.0).map_err(|e| e.to_string())?;
        let oracle = header_oracle();
        // cap far above the ideal budget so the plan runs uncapped
        let p = plan(&search, &oracle, 1e9, arch.cycle_time_tau_s).map_err(|e| e.to_string())?;
        expect_eq("grover iterations", p.r_cap.value(), Some(51472.0))?;
        let m = machine_footprint(
            &p,
            833,
            256,
            &arch,
            FailureBudgetMode::TCountProxy,
            WidthMode::FullWidth,
        )
        .map_err(|e| e.to_string())?;
        expect_eq("code distance", m.code_distance_d, 23)?;
        expect_rel("data qubits", m.data_qubits.value().unwrap(), 1.2e6, 0.05)?;
        expect_eq("factories sans diffusion", m.factory_count.value(), Some(614.0))?;
        let t_depth_total = p
            .r_cap
            .mul(LogQuantity::from_value(p.t_depth_iter as f64).unwrap());
        let with_diffusion = factory_count(p.t_tot, t_depth_total, m.code_distance_d)
            .map_err(|e| e.to_string())?;
        expect_rel("factories with diffusion", with_diffusion.value().unwrap(), 610.0, 0.02)?;
        expect_rel("total qubits", m.total_qubits.value().unwrap(), 1.6e6, 0.10)?;
        let runtime = m.logical_runtime_seconds;
        if !(4.0e3..=1.6e4).contains(&runtime) {
            return Err(format!(
                "runtime {runtime:.1} s outside a factor of 2 of 8.0e3 s"
            ));
        }
        Ok(format!(
            "r=51472 d=23 total={:.4e} runtime={runtime:.0} s (runtime checked to 2x only; \
             depth model note applies)",
            m.total_qubits.value().unwrap()
        ))
    });
}

#[test]
fn c04_p2pkh_footprint() {
    criterion(4, "P2PKH preimage footprint", || {
        let arch = ArchitectureSpec::superconducting();
        let oracle = OracleSpec {
            pipeline: HashPipeline::P2pkh,
            ..OracleSpec::header_default(160)
        };
        let search = SearchSpec::from_bits(160, 160.0).map_err(|e| e.to_string())?;
        let p = plan(&search, &oracle, 1e30, arch.cycle_time_tau_s).map_err(|e| e.to_string())?;
        let r_log10 = p.r_cap.log10().unwrap();
        expect_abs("log10 iterations", r_log10, 9.5e23f64.log10(), 0.005f64.ln_1p() / 10f64.ln())?;
        let m = machine_footprint(
            &p,
            1153,
            160,
            &arch,
            FailureBudgetMode::TCountProxy,
            WidthMode::FullWidth,
        )
        .map_err(|e| e.to_string())?;
        expect_eq("code distance", m.code_distance_d, 61)?;
        expect_rel("data qubits", m.data_qubits.value().unwrap(), 1.0e7, 0.05)?;
        expect_rel("factories", m.factory_count.value().unwrap(), 1.5e3, 0.10)?;
        expect_rel("total qubits", m.total_qubits.value().unwrap(), 1.7e7, 0.10)?;
        Ok(format!(
            "r=10^{r_log10:.4} d=61 total={:.4e}",
            m.total_qubits.value().unwrap()
        ))
    });
}

#[test]
fn c05_scenario_scaling() {
    criterion(5, "scenario scaling", || {
        let oracle = header_oracle();
        let arches = [ArchitectureSpec::superconducting()];
        let start = Instant::now();
        let reports = run_sweep(
            &[256.0, 224.0, 160.0, 32.0],
            &[600.0],
            &[0.5, 0.99],
            &arches,
            &oracle,
            FailureBudgetMode::TCountProxy,
            WidthMode::FullWidth,
        )
        .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        let expected: [(f64, f64); 8] = [
            (69.47, 75.58),
            (70.29, 76.40),
            (59.84, 65.95),
            (60.66, 66.77),
            (40.57, 46.68),
            (41.39, 47.51),
            (2.04, 8.15),
            (2.86, 8.97),
        ];
        for (i, (machines, fleet)) in expected.iter().enumerate() {
            let r = &reports[i];
            let label = format!(
                "row {} (b={}, Pt={})",
                i, r.cell.difficulty_bits_b, r.cell.target_success_pt
            );
            expect_abs(
                &format!("{label} machines"),
                r.n_machines.unwrap().log10().unwrap(),
                *machines,
                0.02,
            )?;
            expect_abs(
                &format!("{label} fleet qubits"),
                r.fleet_qubits.unwrap().log10().unwrap(),
                *fleet,
                0.02,
            )?;
        }
        let fast = evaluate_cell(&sc_cell(256.0, 60.0, 0.5)).map_err(|e| e.to_string())?;
        expect_abs(
            "60 s true-preimage machines",
            fast.n_machines.unwrap().log10().unwrap(),
            71.5,
            0.05,
        )?;
        if elapsed.as_millis() >= 1000 {
            return Err(format!("sweep took {elapsed:?}, budget 1 s"));
        }
        Ok(format!("8 rows within 0.02 decades, sweep in {elapsed:?}"))
    });
}

#[test]
fn c06_failure_budget_sensitivity() {
    criterion(6, "failure-budget sensitivity", || {
        let oracle = header_oracle();
        let search = SearchSpec::from_bits(256, 32.0).map_err(|e| e.to_string())?;
        let rows: [(&str, f64, u64, u64, f64, f64, f64); 6] = [
            ("superconducting", 60.0, 19, 23, 8.29e5, 1.29e6, 1.55),
            ("neutral_atom", 60.0, 13, 17, 4.25e5, 7.65e5, 1.80),
            ("ion_trap", 60.0, 9, 11, 2.27e5, 3.46e5, 1.53),
            ("superconducting", 600.0, 21, 25, 1.04e6, 1.56e6, 1.50),
            ("neutral_atom", 600.0, 15, 19, 5.81e5, 9.80e5, 1.69),
            ("ion_trap", 600.0, 9, 11, 2.27e5, 3.46e5, 1.53),
        ];
        for (name, t_cap, d_t, d_v, q_t, q_v, inflation) in rows {
            let arch = ArchitectureSpec::preset(name).unwrap();
            let p =
                plan(&search, &oracle, t_cap, arch.cycle_time_tau_s).map_err(|e| e.to_string())?;
            let mt = machine_footprint(
                &p,
                833,
                256,
                &arch,
                FailureBudgetMode::TCountProxy,
                WidthMode::OracleOnly,
            )
            .map_err(|e| e.to_string())?;
            let mv = machine_footprint(
                &p,
                833,
                256,
                &arch,
                FailureBudgetMode::VolumeProxy,
                WidthMode::OracleOnly,
            )
            .map_err(|e| e.to_string())?;
            let label = format!("{name} @ {t_cap} s");
            expect_eq(&format!("{label} d (T)"), mt.code_distance_d, d_t)?;
            expect_eq(&format!("{label} d (V)"), mv.code_distance_d, d_v)?;
            let (qt, qv) = (mt.total_qubits.value().unwrap(), mv.total_qubits.value().unwrap());
            expect_rel(&format!("{label} Q (T)"), qt, q_t, 0.02)?;
            expect_rel(&format!("{label} Q (V)"), qv, q_v, 0.02)?;
            expect_abs(&format!("{label} inflation"), qv / qt, inflation, 0.05)?;
        }
        Ok("6 rows: distances exact, footprints within 2%, inflation within 0.05".into())
    });
}

#[test]
fn c07_energy_anchors() {
    criterion(7, "energy anchors", || {
        let arch = ArchitectureSpec::superconducting();
        for (b, watts) in [(32.0, 9.5e9f64), (64.0, 4.1e19), (96.0, 1.7e29)] {
            let r = evaluate_cell(&sc_cell(b, 600.0, 0.5)).map_err(|e| e.to_string())?;
            let p = energy::fleet_power(r.fleet_qubits.unwrap(), &arch).map_err(|e| e.to_string())?;
            expect_abs(
                &format!("fleet power at b={b}"),
                p.log10().unwrap(),
                watts.log10(),
                1.05f64.log10(),
            )?;
        }
        let difficulty = 1.1e14;
        for track in [EfficiencyTrack::s9(), EfficiencyTrack::s19(), EfficiencyTrack::s21()] {
            let w = energy::network_power(difficulty, &track).map_err(|e| e.to_string())?;
            if !(6e9..=7e10).contains(&w) {
                return Err(format!(
                    "classical power ({}) {w:.3e} W outside [6e9, 7e10]",
                    track.name
                ));
            }
        }
        let mainnet =
            evaluate_cell(&sc_cell(MAINNET_BITS_2025, 600.0, 0.99)).map_err(|e| e.to_string())?;
        let fleet_watts =
            energy::fleet_power(mainnet.fleet_qubits.unwrap(), &arch).map_err(|e| e.to_string())?;
        for track in [EfficiencyTrack::s9(), EfficiencyTrack::s19(), EfficiencyTrack::s21()] {
            let classical = energy::network_power(difficulty, &track).map_err(|e| e.to_string())?;
            let ratio = energy::quantum_classical_ratio(fleet_watts, classical)
                .map_err(|e| e.to_string())?;
            let ratio_log10 = ratio.log10().unwrap();
            if ratio_log10 < 14.0 {
                return Err(format!(
                    "mainnet quantum/classical ratio ({}) 10^{ratio_log10:.2} below 10^14",
                    track.name
                ));
            }
        }
        Ok(format!(
            "anchors within 5%, classical tracks in band, mainnet ratio >= 10^14 \
             (fleet 10^{:.2} W)",
            fleet_watts.log10().unwrap()
        ))
    });
}

#[test]
fn c08_hesc_ladder() {
    criterion(8, "high-energy ladder", || {
        let rungs = preset_rungs();
        let expected: [(f64, f64, f64); 10] = [
            (2.000e-10, 9.543e-3, 1.00e0),
            (4.136e-13, 1.973e-5, 2.42e3),
            (2.068e-15, 9.866e-8, 1.00e5),
            (4.136e-19, 1.973e-11, 1.00e8),
            (4.136e-21, 1.973e-13, 4.00e9),
            (4.136e-23, 1.973e-15, 1.00e11),
            (4.136e-26, 1.973e-18, 1.00e14),
            (4.136e-27, 1.973e-19, 1.00e15),
            (4.136e-34, 1.973e-26, 1.00e22),
            (3.387e-43, 1.616e-35, 1.22e31),
        ];
        for (r, (tau0, ell, s)) in rungs.iter().zip(expected) {
            expect_rel(&format!("{} tau0", r.tag), r.tau0_seconds, tau0, 0.005)?;
            expect_rel(&format!("{} length", r.tag), r.length_m, ell, 0.005)?;
            expect_rel(&format!("{} speedup", r.tag), r.speedup, s, 0.005)?;
        }

        let arch = ArchitectureSpec::superconducting();
        let oracle = header_oracle();
        let bits: Vec<f64> = (1..=8).map(|i| 32.0 * i as f64).collect();
        let microwave = preset_rung("surface_mw_5GHz").unwrap();
        let mut ladder = ladder_sweep(
            &[microwave],
            &bits,
            &[600.0],
            &[0.5],
            &arch,
            &oracle,
            FailureBudgetMode::TCountProxy,
            WidthMode::FullWidth,
        )
        .map_err(|e| e.to_string())?;
        for r in &mut ladder {
            r.rung_tag = None;
        }
        let baseline = run_sweep(
            &bits,
            &[600.0],
            &[0.5],
            std::slice::from_ref(&arch),
            &oracle,
            FailureBudgetMode::TCountProxy,
            WidthMode::FullWidth,
        )
        .map_err(|e| e.to_string())?;
        let csv = |reports: &[qmine::fleet::FleetReport]| -> Result<String, String> {
            let rows: Result<Vec<_>, _> = reports.iter().map(flatten).collect();
            Ok(to_csv(&rows.map_err(|e| e.to_string())?))
        };
        if csv(&ladder)? != csv(&baseline)? {
            return Err("microwave-rung sweep differs from baseline sweep".into());
        }

        let climb: Vec<_> = ["surface_thz_10meV", "surface_opt_2eV", "surface_xray_10keV",
            "surface_nuclear_1MeV"]
            .iter()
            .map(|t| preset_rung(t).unwrap())
            .collect();
        let reports = ladder_sweep(
            &climb,
            &bits,
            &[600.0],
            &[0.5],
            &arch,
            &oracle,
            FailureBudgetMode::TCountProxy,
            WidthMode::FullWidth,
        )
        .map_err(|e| e.to_string())?;
        let per_rung = bits.len();
        let mut worst = 0.0f64;
        let mut worst_at = String::new();
        for step in 0..climb.len() - 1 {
            for cell in 0..per_rung {
                let a = &reports[step * per_rung + cell];
                let b = &reports[(step + 1) * per_rung + cell];
                let (Some(qa), Some(qb)) = (a.fleet_qubits, b.fleet_qubits) else {
                    continue;
                };
                let drop = qa.log10().unwrap() - qb.log10().unwrap();
                if drop > worst {
                    worst = drop;
                    worst_at = format!(
                        "{} -> {} at b={}",
                        climb[step].tag,
                        climb[step + 1].tag,
                        a.cell.difficulty_bits_b
                    );
                }
            }
        }
        if worst > 1.1 {
            return Err(format!(
                "per-rung fleet reduction {worst:.2} decades exceeds 1.1 ({worst_at})"
            ));
        }
        Ok(format!(
            "table rows within 0.5%, microwave rung byte-identical, max per-rung drop \
             {worst:.2} decades"
        ))
    });
}

#[test]
fn c09_oracle_equivalence() {
    criterion(9, "oracle equivalence", || {
        let start = Instant::now();
        let sha_vectors: [(&[u8], &str); 3] = [
            (b"abc", "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"),
            (b"", "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"),
            (
                b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
                "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1",
            ),
        ];
        for (msg, want) in sha_vectors {
            let got = hex(&sha256_digest(msg));
            if got != want {
                return Err(format!("sha256({msg:?}): got {got}"));
            }
        }
        let ripemd_vectors: [(&[u8], &str); 3] = [
            (b"", "9c1185a5c5e9fc54612808977ee8f548b2258d31"),
            (b"abc", "8eb208f7e05d987a9b044a8e98c6b087f15a0bfc"),
            (b"message digest", "5d0689ef49d2fae572b881b123a85ffa21595f36"),
        ];
        for (msg, want) in ripemd_vectors {
            let got = hex(&ripemd160_digest(msg));
            if got != want {
                return Err(format!("ripemd160({msg:?}): got {got}"));
            }
        }

        let mut max_dev = 0.0f64;
        for n in 2..=12u32 {
            let size = 1u64 << n;
            for m in [1, 2, size / 4, size / 2] {
                if m == 0 {
                    continue;
                }
                let marked = MarkedSet::first_m(n, m).map_err(|e| e.to_string())?;
                let theta = ((m as f64) / size as f64).sqrt().asin();
                let r_opt =
                    ((std::f64::consts::PI / (4.0 * theta) - 0.5).round() as u64).max(1);
                for r in [0, 1, r_opt] {
                    let sim = grover_simulate(&marked, r).map_err(|e| e.to_string())?;
                    let exact = ((2 * r + 1) as f64 * theta).sin().powi(2);
                    let dev = (sim - exact).abs();
                    max_dev = max_dev.max(dev);
                    if dev > 1e-9 {
                        return Err(format!(
                            "simulator deviates {dev:.3e} at n={n} m={m} r={r}"
                        ));
                    }
                }
            }
        }

        for (bits, samples) in [(4u32, 200_000u64), (8, 200_000), (16, 600_000)] {
            let est = monte_carlo_hit_rate(bits, samples, 1).map_err(|e| e.to_string())?;
            let p_true = 2f64.powi(-(bits as i32));
            let sigma = (p_true * (1.0 - p_true) / samples as f64).sqrt();
            let dev = (est.estimate - p_true).abs() / sigma;
            if dev > 3.0 {
                return Err(format!(
                    "monte carlo b={bits}: {dev:.2} sigma off 2^-{bits} ({} hits)",
                    est.hits
                ));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs() >= 60 {
            return Err(format!("suite took {elapsed:?}, budget 60 s"));
        }
        Ok(format!(
            "hash vectors pass, simulator max deviation {max_dev:.3e}, hit rates within \
             3 sigma, in {elapsed:.1?}"
        ))
    });
}

#[test]
fn c10_sweep_determinism() {
    criterion(10, "sweep determinism", || {
        let bin = env!("CARGO_BIN_EXE_qmine");
        for format in ["csv", "json"] {
            let run = || {
                std::process::Command::new(bin)
                    .args([
                        "sweep", "--bits", "32,78.6,160", "--t-caps", "60,600", "--pts",
                        "0.5,0.99", "--arch", "superconducting,ion_trap", "--format", format,
                    ])
                    .output()
                    .expect("binary runs")
            };
            let (a, b) = (run(), run());
            if !a.status.success() {
                return Err(format!(
                    "sweep exited nonzero: {}",
                    String::from_utf8_lossy(&a.stderr)
                ));
            }
            if a.stdout != b.stdout {
                return Err(format!("{format} output differs between identical runs"));
            }
            if a.stdout.is_empty() {
                return Err(format!("{format} output empty"));
            }
        }
        Ok("repeated csv and json sweeps byte-identical".into())
    });
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}
