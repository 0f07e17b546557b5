//! Hardware scenario catalog, scenario-file ingestion, and roadmap lookup.
//!
//! The catalog carries the superconducting near-term scenarios (two flat-rate
//! sets plus reference, reduced-error-rate and fast-measurement variants),
//! trapped-ion and Majorana parameter sets, three high-fidelity flat sets, and
//! a perfect-qubit entry. Majorana scenarios are cataloged but cannot be
//! estimated: their measurement-based cycle time has no model here.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::qec::{PhysicalParams, QecParams};

/// Floor applied to non-perfect T-gate error rates. Factories distill toward
/// targets derived from the budget; inputs cleaner than this floor are
/// clamped so the chain search stays in its supported regime.
pub const T_GATE_ERROR_FLOOR: f64 = 5e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Modality {
    #[default]
    Superconducting,
    TrappedIon,
    Majorana,
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Modality::Superconducting => "superconducting",
            Modality::TrappedIon => "trapped-ion",
            Modality::Majorana => "majorana",
        };
        f.write_str(s)
    }
}

/// A named hardware parameter set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    pub modality: Modality,
    pub params: PhysicalParams,
    /// Error-free qubits: estimation bypasses the surface code entirely.
    pub perfect: bool,
    /// Logical clock period used by the perfect-qubit bypass.
    pub perfect_clock_ns: f64,
    /// Set when loading clamped `t_gate_error` up to [`T_GATE_ERROR_FLOOR`].
    pub t_gate_error_clamped: bool,
}

fn flat(name: &str, rate: f64, t_gate_error: f64, gate_ns: f64, meas_ns: f64) -> Scenario {
    Scenario {
        name: name.to_string(),
        modality: Modality::Superconducting,
        params: PhysicalParams {
            one_q_gate_error: rate,
            two_q_gate_error: rate,
            idle_error: rate,
            meas_error: rate,
            t_gate_error,
            meas_time_ns: meas_ns,
            one_q_gate_time_ns: gate_ns,
            two_q_gate_time_ns: gate_ns,
            t_gate_time_ns: gate_ns,
        },
        perfect: false,
        perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
        t_gate_error_clamped: false,
    }
}

pub const DEFAULT_PERFECT_CLOCK_NS: f64 = 0.2;

fn catalog() -> Vec<Scenario> {
    // Flat-rate superconducting sets.
    let mut v = vec![
        flat("flat-1e-3", 1e-3, 1e-3, 50.0, 100.0),
        flat("flat-1e-4", 1e-4, 1e-4, 50.0, 100.0),
    ];

    // State-of-the-art reference and its two directed improvements. T-gate
    // error defaults to the one-qubit gate error, T-gate time to the
    // one-qubit gate time.
    v.push(Scenario {
        name: "ref".into(),
        modality: Modality::Superconducting,
        params: PhysicalParams {
            one_q_gate_error: 1.09e-3,
            two_q_gate_error: 6.05e-3,
            idle_error: 2.46e-2,
            meas_error: 1.96e-2,
            t_gate_error: 1.09e-3,
            meas_time_ns: 500.0,
            one_q_gate_time_ns: 25.0,
            two_q_gate_time_ns: 34.0,
            t_gate_time_ns: 25.0,
        },
        perfect: false,
        perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
        t_gate_error_clamped: false,
    });
    v.push(Scenario {
        name: "rer".into(),
        modality: Modality::Superconducting,
        params: PhysicalParams {
            one_q_gate_error: 1.09e-4,
            two_q_gate_error: 6.05e-4,
            idle_error: 2.46e-3,
            meas_error: 1.96e-3,
            t_gate_error: 1.09e-4,
            meas_time_ns: 500.0,
            one_q_gate_time_ns: 25.0,
            two_q_gate_time_ns: 34.0,
            t_gate_time_ns: 25.0,
        },
        perfect: false,
        perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
        t_gate_error_clamped: false,
    });
    v.push(Scenario {
        name: "fm".into(),
        modality: Modality::Superconducting,
        params: PhysicalParams {
            one_q_gate_error: 1.09e-3,
            two_q_gate_error: 4.90e-3,
            idle_error: 1.63e-3,
            meas_error: 5.00e-3,
            t_gate_error: 1.09e-3,
            meas_time_ns: 140.0,
            one_q_gate_time_ns: 25.0,
            two_q_gate_time_ns: 34.0,
            t_gate_time_ns: 25.0,
        },
        perfect: false,
        perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
        t_gate_error_clamped: false,
    });

    // Trapped-ion sets: 100 us operations, T-gate error 1e-6, idle error
    // mirrors the measurement error.
    for (name, rate) in [("trapped-ion-1e-3", 1e-3), ("trapped-ion-1e-4", 1e-4)] {
        v.push(Scenario {
            name: name.into(),
            modality: Modality::TrappedIon,
            params: PhysicalParams {
                one_q_gate_error: rate,
                two_q_gate_error: rate,
                idle_error: rate,
                meas_error: rate,
                t_gate_error: 1e-6,
                meas_time_ns: 100_000.0,
                one_q_gate_time_ns: 100_000.0,
                two_q_gate_time_ns: 100_000.0,
                t_gate_time_ns: 100_000.0,
            },
            perfect: false,
            perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
            t_gate_error_clamped: false,
        });
    }

    // High-fidelity flat sets; operation times shrink with the error rate and
    // the two cleanest sets carry the floored T-gate error.
    v.push(flat("flat-1e-6", 1e-6, 1e-6, 5.0, 10.0));
    v.push(flat("flat-1e-8", 1e-8, T_GATE_ERROR_FLOOR, 5.0, 10.0));
    v.push(flat("flat-1e-9", 1e-9, T_GATE_ERROR_FLOOR, 0.5, 1.0));

    // Majorana sets: two-qubit joint measurements stand in for gates.
    for (name, rate) in [("majorana-1e-4", 1e-4), ("majorana-1e-6", 1e-6)] {
        v.push(Scenario {
            name: name.into(),
            modality: Modality::Majorana,
            params: PhysicalParams {
                one_q_gate_error: rate,
                two_q_gate_error: rate,
                idle_error: rate,
                meas_error: rate,
                t_gate_error: 1e-2,
                meas_time_ns: 100.0,
                one_q_gate_time_ns: 100.0,
                two_q_gate_time_ns: 100.0,
                t_gate_time_ns: 100.0,
            },
            perfect: false,
            perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
            t_gate_error_clamped: false,
        });
    }

    v.push(Scenario {
        name: "perfect".into(),
        modality: Modality::Superconducting,
        params: PhysicalParams {
            one_q_gate_error: 0.0,
            two_q_gate_error: 0.0,
            idle_error: 0.0,
            meas_error: 0.0,
            t_gate_error: 0.0,
            meas_time_ns: DEFAULT_PERFECT_CLOCK_NS,
            one_q_gate_time_ns: DEFAULT_PERFECT_CLOCK_NS,
            two_q_gate_time_ns: DEFAULT_PERFECT_CLOCK_NS,
            t_gate_time_ns: DEFAULT_PERFECT_CLOCK_NS,
        },
        perfect: true,
        perfect_clock_ns: DEFAULT_PERFECT_CLOCK_NS,
        t_gate_error_clamped: false,
    });

    v
}

/// The built-in scenario catalog.
pub fn builtin_scenarios() -> &'static [Scenario] {
    static CATALOG: OnceLock<Vec<Scenario>> = OnceLock::new();
    CATALOG.get_or_init(catalog)
}

/// Case-insensitive catalog lookup.
pub fn find_scenario(name: &str) -> Option<Scenario> {
    builtin_scenarios()
        .iter()
        .find(|s| s.name.eq_ignore_ascii_case(name))
        .cloned()
}

/// On-disk scenario format: flat JSON keys, optional `perfect`, `modality`
/// and `perfect_clock_ns`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    name: String,
    one_q_gate_error: f64,
    two_q_gate_error: f64,
    idle_error: f64,
    meas_error: f64,
    t_gate_error: f64,
    meas_time_ns: f64,
    one_q_gate_time_ns: f64,
    two_q_gate_time_ns: f64,
    t_gate_time_ns: f64,
    #[serde(default, skip_serializing_if = "is_false")]
    perfect: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modality: Option<Modality>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    perfect_clock_ns: Option<f64>,
}

fn is_false(b: &bool) -> bool {
    !b
}

/// Parse and validate a scenario file. Non-perfect scenarios must sit below
/// the surface-code threshold; T-gate errors below the floor are clamped and
/// flagged.
pub fn load_scenario(text: &str, qec: &QecParams) -> Result<Scenario> {
    qec.validate()?;
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: ScenarioFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        if path == "." {
            Error::Parse(format!("scenario file: {}", e.inner()))
        } else {
            Error::Parse(format!("scenario file, field `{path}`: {}", e.inner()))
        }
    })?;

    let mut params = PhysicalParams {
        one_q_gate_error: file.one_q_gate_error,
        two_q_gate_error: file.two_q_gate_error,
        idle_error: file.idle_error,
        meas_error: file.meas_error,
        t_gate_error: file.t_gate_error,
        meas_time_ns: file.meas_time_ns,
        one_q_gate_time_ns: file.one_q_gate_time_ns,
        two_q_gate_time_ns: file.two_q_gate_time_ns,
        t_gate_time_ns: file.t_gate_time_ns,
    };
    params.validate()?;

    let mut clamped = false;
    if file.perfect {
        let rates = [
            ("one_q_gate_error", params.one_q_gate_error),
            ("two_q_gate_error", params.two_q_gate_error),
            ("idle_error", params.idle_error),
            ("meas_error", params.meas_error),
            ("t_gate_error", params.t_gate_error),
        ];
        for (name, r) in rates {
            if r != 0.0 {
                return Err(Error::invalid(
                    name,
                    format!("perfect scenarios require zero error rates, got {r}"),
                ));
            }
        }
    } else {
        let p_eff = params.effective_clifford_error();
        if p_eff >= qec.threshold {
            return Err(Error::AboveThreshold {
                rate_name: params.effective_clifford_error_name().into(),
                rate: p_eff,
                threshold: qec.threshold,
            });
        }
        if params.t_gate_error < T_GATE_ERROR_FLOOR {
            params.t_gate_error = T_GATE_ERROR_FLOOR;
            clamped = true;
        }
    }

    Ok(Scenario {
        name: file.name,
        modality: file.modality.unwrap_or_default(),
        params,
        perfect: file.perfect,
        perfect_clock_ns: file.perfect_clock_ns.unwrap_or(DEFAULT_PERFECT_CLOCK_NS),
        t_gate_error_clamped: clamped,
    })
}

/// Serialize a scenario to the on-disk format.
pub fn scenario_to_json(s: &Scenario) -> String {
    let file = ScenarioFile {
        name: s.name.clone(),
        one_q_gate_error: s.params.one_q_gate_error,
        two_q_gate_error: s.params.two_q_gate_error,
        idle_error: s.params.idle_error,
        meas_error: s.params.meas_error,
        t_gate_error: s.params.t_gate_error,
        meas_time_ns: s.params.meas_time_ns,
        one_q_gate_time_ns: s.params.one_q_gate_time_ns,
        two_q_gate_time_ns: s.params.two_q_gate_time_ns,
        t_gate_time_ns: s.params.t_gate_time_ns,
        perfect: s.perfect,
        modality: (s.modality != Modality::Superconducting).then_some(s.modality),
        perfect_clock_ns: (s.perfect_clock_ns != DEFAULT_PERFECT_CLOCK_NS)
            .then_some(s.perfect_clock_ns),
    };
    serde_json::to_string_pretty(&file).expect("scenario serialization cannot fail")
}

/// One row of the qubit-count roadmap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoadmapEntry {
    pub company: String,
    pub modality: String,
    pub designation: String,
    /// Announced year; absent for devices without a committed date.
    pub year: Option<u32>,
    pub qubits: u64,
    pub released: bool,
    /// The public figure was a lower bound ("more than N qubits").
    pub lower_bound: bool,
}

macro_rules! roadmap_rows {
    ($(($company:expr, $modality:expr, $designation:expr, $year:expr, $qubits:expr, $released:expr, $lower:expr)),* $(,)?) => {
        vec![$(RoadmapEntry {
            company: $company.into(),
            modality: $modality.into(),
            designation: $designation.into(),
            year: $year,
            qubits: $qubits,
            released: $released,
            lower_bound: $lower,
        }),*]
    };
}

#[rustfmt::skip]
fn roadmap_data() -> Vec<RoadmapEntry> {
    roadmap_rows![
        ("IBM", "superconducting", "Canary", Some(2017), 5, true, false),
        ("IBM", "superconducting", "Albatross", Some(2018), 16, true, false),
        ("IBM", "superconducting", "Penguin", Some(2019), 20, true, false),
        ("IBM", "superconducting", "Falcon", Some(2020), 27, true, false),
        ("IBM", "superconducting", "Eagle", Some(2021), 127, true, false),
        ("IBM", "superconducting", "Osprey", Some(2022), 433, true, false),
        ("IBM", "superconducting", "Condor", Some(2023), 1121, true, false),
        ("IBM", "superconducting", "Kookaburra", Some(2025), 4158, false, false),
        ("IBM", "superconducting", "Blue Jay", Some(2033), 100_000, false, false),
        ("IBM modular", "superconducting", "Heron", Some(2023), 133, true, false),
        ("IBM modular", "superconducting", "Flamingo", Some(2024), 156, false, false),
        ("IBM modular", "superconducting", "Crossbill", Some(2024), 408, false, false),
        ("IBM modular", "superconducting", "Heron x3", Some(2024), 399, false, false),
        ("IBM modular", "superconducting", "Flamingo x7", Some(2025), 1092, false, false),
        ("IBM modular", "superconducting", "Starling", Some(2029), 200, false, false),
        ("IBM modular", "superconducting", "Blue Jay", Some(2033), 100_000, false, false),
        ("Google", "superconducting", "Foxtail", Some(2017), 22, true, false),
        ("Google", "superconducting", "Bristlecone", Some(2018), 72, true, false),
        ("Google", "superconducting", "Sycamore", Some(2019), 53, true, false),
        ("Google", "superconducting", "M3", Some(2025), 1000, false, false),
        ("Google", "superconducting", "M4", None, 10_000, false, false),
        ("Google", "superconducting", "M5", None, 100_000, false, false),
        ("Google", "superconducting", "M6", None, 1_000_000, false, false),
        ("Rigetti", "superconducting", "Agave", Some(2017), 8, true, false),
        ("Rigetti", "superconducting", "Acorn", Some(2017), 19, true, false),
        ("Rigetti", "superconducting", "Aspen-1", Some(2018), 16, true, false),
        ("Rigetti", "superconducting", "Aspen-4", Some(2019), 13, true, false),
        ("Rigetti", "superconducting", "Aspen-7", Some(2019), 28, true, false),
        ("Rigetti", "superconducting", "Aspen-9", Some(2021), 32, true, false),
        ("Rigetti", "superconducting", "Aspen-11", Some(2021), 40, true, false),
        ("Rigetti", "superconducting", "Aspen-M-1", Some(2022), 80, true, false),
        ("Rigetti", "superconducting", "Ankaa-2", Some(2024), 84, true, false),
        ("Rigetti", "superconducting", "Lyra", Some(2025), 336, false, false),
        ("Rigetti", "superconducting", "-", Some(2026), 1000, false, false),
        ("Rigetti", "superconducting", "-", Some(2028), 4000, false, false),
        ("Oxford Quantum Circuits", "superconducting", "Lucy", Some(2022), 8, true, false),
        ("Oxford Quantum Circuits", "superconducting", "OQC Toshiko", Some(2023), 32, true, false),
        ("Intel", "superconducting", "-", Some(2017), 17, true, false),
        ("Intel", "superconducting", "Tangle Lake", Some(2018), 49, true, false),
        ("Intel", "quantum dots", "Tunnel Falls", Some(2023), 12, true, false),
        ("IonQ", "trapped ions", "Harmony", Some(2019), 11, true, false),
        ("IonQ", "trapped ions", "Aria", Some(2022), 21, true, false),
        ("IonQ", "trapped ions", "Forte", Some(2023), 32, true, false),
        ("IonQ", "trapped ions", "Forte Enterprise", Some(2024), 35, false, false),
        ("IonQ", "trapped ions", "Tempo", Some(2025), 64, false, false),
        ("IonQ", "trapped ions", "-", Some(2026), 256, false, false),
        ("IonQ", "trapped ions", "-", Some(2027), 384, false, false),
        ("IonQ", "trapped ions", "-", Some(2028), 1024, false, false),
        ("Quantinuum", "trapped ions", "H1", Some(2020), 20, true, false),
        ("Quantinuum", "trapped ions", "H2-1", Some(2023), 32, true, false),
        ("Quantinuum", "trapped ions", "H2-2", Some(2024), 56, true, false),
        ("Xanadu", "photonic", "X2", Some(2018), 2, true, false),
        ("Xanadu", "photonic", "X4", Some(2019), 4, true, false),
        ("Xanadu", "photonic", "X8", Some(2020), 8, true, false),
        ("Xanadu", "photonic", "X12", Some(2020), 12, true, false),
        ("Xanadu", "photonic", "Borealis", Some(2022), 216, true, false),
        ("Atom Computing", "neutral atoms", "Phoenix", Some(2021), 100, true, false),
        ("Atom Computing", "neutral atoms", "-", Some(2024), 1180, false, false),
        ("QuEra", "neutral atoms", "Aquila", Some(2023), 256, true, false),
        ("QuEra", "neutral atoms", "-", Some(2025), 3000, false, true),
        ("QuEra", "neutral atoms", "-", Some(2026), 10_000, false, true),
    ]
}

/// The embedded qubit-count roadmap.
pub fn builtin_roadmap() -> &'static [RoadmapEntry] {
    static ROADMAP: OnceLock<Vec<RoadmapEntry>> = OnceLock::new();
    ROADMAP.get_or_init(roadmap_data)
}

/// Parse a roadmap CSV with header
/// `company,modality,designation,year,qubits,released,lower_bound`.
/// Empty `year` means no committed date.
pub fn parse_roadmap_csv(text: &str) -> Result<Vec<RoadmapEntry>> {
    #[derive(Deserialize)]
    struct Row {
        company: String,
        modality: String,
        designation: String,
        year: Option<u32>,
        qubits: u64,
        released: bool,
        lower_bound: bool,
    }

    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, row) in rdr.deserialize::<Row>().enumerate() {
        let row = row.map_err(|e| Error::Parse(format!("roadmap row {}: {e}", i + 1)))?;
        if row.qubits == 0 {
            return Err(Error::invalid(
                "qubits",
                format!("roadmap row {} ({}): must be >= 1", i + 1, row.designation),
            ));
        }
        if let Some(y) = row.year {
            if y < 2017 {
                return Err(Error::invalid(
                    "year",
                    format!(
                        "roadmap row {} ({}): must be >= 2017",
                        i + 1,
                        row.designation
                    ),
                ));
            }
        }
        out.push(RoadmapEntry {
            company: row.company,
            modality: row.modality,
            designation: row.designation,
            year: row.year,
            qubits: row.qubits,
            released: row.released,
            lower_bound: row.lower_bound,
        });
    }
    if out.is_empty() {
        return Err(Error::Parse("roadmap file has no data rows".into()));
    }
    Ok(out)
}

/// Earliest entry with at least `required_qubits` qubits; entries without a
/// committed year are considered last. `None` if no entry is large enough.
pub fn feasibility_year(required_qubits: u64, roadmap: &[RoadmapEntry]) -> Option<&RoadmapEntry> {
    roadmap
        .iter()
        .filter(|e| e.qubits >= required_qubits)
        .min_by_key(|e| (e.year.is_none(), e.year, e.qubits, &e.company))
}
