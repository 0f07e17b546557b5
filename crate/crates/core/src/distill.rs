//! 15-to-1 T-state distillation factories.
//!
//! A factory is a chain of distillation rounds. Round requirements are derived
//! backwards from the target output error: each round's Clifford bound is
//! `target / 7.1`, its distance comes from the surface-code curve, and the
//! maximum tolerable input T error follows from inverting the output-error
//! formula `35 p_T^3 + 7.1 P`. The chain stops once physical T states are
//! clean enough to feed the first round.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{ceil_snapped, normal_cdf};
use crate::qec::{
    logical_cycle_time_ns, logical_error_rate, physical_qubits_per_logical, required_distance,
    CodeDistance, PhysicalParams, QecParams,
};

/// The four 15-to-1 distillation unit designs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistillationUnit {
    SpaceEfficientPhysical,
    SpaceEfficientLogical,
    RmPrepPhysical,
    RmPrepLogical,
}

impl DistillationUnit {
    pub fn name(self) -> &'static str {
        match self {
            DistillationUnit::SpaceEfficientPhysical => "15-to-1 space-efficient physical",
            DistillationUnit::SpaceEfficientLogical => "15-to-1 space-efficient logical",
            DistillationUnit::RmPrepPhysical => "15-to-1 RM-prep physical",
            DistillationUnit::RmPrepLogical => "15-to-1 RM-prep logical",
        }
    }

    /// Qubits per unit: constants for the physical variants, multiples of the
    /// encoding overhead `n(d)` for the logical ones.
    pub fn qubit_cost(self, d: CodeDistance) -> u64 {
        match self {
            DistillationUnit::SpaceEfficientPhysical => 12,
            DistillationUnit::SpaceEfficientLogical => 20 * physical_qubits_per_logical(d),
            DistillationUnit::RmPrepPhysical => 31,
            DistillationUnit::RmPrepLogical => 31 * physical_qubits_per_logical(d),
        }
    }

    /// Runtime per unit in nanoseconds.
    pub fn runtime_ns(self, d: CodeDistance, params: &PhysicalParams) -> f64 {
        match self {
            DistillationUnit::SpaceEfficientPhysical => 46.0 * params.meas_time_ns,
            DistillationUnit::SpaceEfficientLogical => 13.0 * logical_cycle_time_ns(d, params),
            DistillationUnit::RmPrepPhysical => 23.0 * params.meas_time_ns,
            DistillationUnit::RmPrepLogical => 11.0 * logical_cycle_time_ns(d, params),
        }
    }
}

/// Output error of one 15-to-1 unit: `35 p_T^3 + 7.1 P`.
pub fn distilled_output_error(t_error_in: f64, clifford_error: f64) -> f64 {
    35.0 * t_error_in.powi(3) + 7.1 * clifford_error
}

/// Acceptance probability of one 15-to-1 unit: `max(0, 1 - 15 p_T - 356 P)`.
pub fn acceptance_probability(t_error_in: f64, clifford_bound: f64) -> f64 {
    (1.0 - 15.0 * t_error_in - 356.0 * clifford_bound).clamp(0.0, 1.0)
}

/// One round of a factory chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistillationRound {
    pub distance: CodeDistance,
    pub unit: DistillationUnit,
    pub unit_count: u64,
    /// T error entering this round (physical T error for the first round, the
    /// previous round's guaranteed output bound otherwise).
    pub input_t_error: f64,
    /// Output error achieved from `input_t_error` at this round's distance.
    pub output_t_error: f64,
    /// Clifford error bound `target / 7.1` the round was sized against.
    pub clifford_error_bound: f64,
    pub acceptance_prob: f64,
}

/// A complete multi-round factory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactoryDesign {
    /// Rounds in execution order (first-executed first).
    pub rounds: Vec<DistillationRound>,
    /// Sum of per-round unit runtimes, nanoseconds.
    pub total_runtime_ns: f64,
    /// Max over rounds of `unit_count * qubit cost`.
    pub qubits: u64,
    /// T states produced per factory run.
    pub outputs_per_run: u64,
}

impl FactoryDesign {
    /// The no-op design used when physical T states already meet the target.
    pub fn no_distillation() -> Self {
        FactoryDesign {
            rounds: Vec::new(),
            total_runtime_ns: 0.0,
            qubits: 0,
            outputs_per_run: 1,
        }
    }

    pub fn is_no_distillation(&self) -> bool {
        self.rounds.is_empty()
    }
}

/// Required logical T-state error rate: the distillation budget spread over
/// every consumed T state, `eps_dis / m`.
pub fn required_t_state_error(m: u64, eps_dis: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::invalid(
            "t-state count",
            "no T states consumed; no distillation target exists",
        ));
    }
    if !(eps_dis > 0.0 && eps_dis < 1.0) {
        return Err(Error::invalid(
            "eps_dis",
            format!("must be in (0, 1), got {eps_dis}"),
        ));
    }
    Ok(eps_dis / m as f64)
}

/// Which rule sizes the number of parallel units in a round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitCountRule {
    /// Normal approximation with continuity correction (default).
    #[default]
    NormalApprox,
    /// Exact binomial tail.
    ExactBinomial,
}

const MAX_UNITS_SCAN: u64 = 1_000_000;

/// Smallest unit count `u >= required_outputs` whose probability of at least
/// `required_outputs` accepted outputs reaches `confidence`.
pub fn units_for_round(
    acceptance_prob: f64,
    required_outputs: u64,
    confidence: f64,
    rule: UnitCountRule,
) -> Result<u64> {
    if !(acceptance_prob > 0.0 && acceptance_prob <= 1.0) {
        return Err(Error::invalid(
            "acceptance_prob",
            format!("must be in (0, 1], got {acceptance_prob}"),
        ));
    }
    if required_outputs == 0 {
        return Err(Error::invalid("required_outputs", "must be >= 1"));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::invalid(
            "confidence",
            format!("must be in (0, 1), got {confidence}"),
        ));
    }
    let q = acceptance_prob;
    if q >= 1.0 {
        return Ok(required_outputs);
    }
    let r = required_outputs;
    let mut u = r;
    loop {
        let ok = match rule {
            UnitCountRule::NormalApprox => {
                let uf = u as f64;
                let z = (uf * q - (r as f64 - 0.5)) / (uf * q * (1.0 - q)).sqrt();
                normal_cdf(z) >= confidence
            }
            UnitCountRule::ExactBinomial => binomial_tail_at_least(u, r, q) >= confidence,
        };
        if ok {
            return Ok(u);
        }
        u += 1;
        if u > MAX_UNITS_SCAN {
            return Err(Error::Infeasible(format!(
                "unit count exceeds {MAX_UNITS_SCAN} at acceptance {q}"
            )));
        }
    }
}

/// P(X >= r) for X ~ Binomial(u, q), summed over the failure tail.
fn binomial_tail_at_least(u: u64, r: u64, q: f64) -> f64 {
    let f = 1.0 - q;
    let mut term = q.powi(u as i32); // k failures = 0
    let mut tail = term;
    for k in 0..(u - r) {
        term *= (u - k) as f64 / (k + 1) as f64 * (f / q);
        tail += term;
    }
    tail
}

/// Tuning knobs for factory synthesis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FactoryConfig {
    /// Abort if the backward recursion needs more rounds than this.
    pub max_rounds: u32,
    /// Confidence that a round delivers the outputs its successor consumes.
    pub confidence: f64,
    pub unit_count_rule: UnitCountRule,
}

impl Default for FactoryConfig {
    fn default() -> Self {
        FactoryConfig {
            max_rounds: 10,
            confidence: 0.999,
            unit_count_rule: UnitCountRule::NormalApprox,
        }
    }
}

struct SpineRound {
    target: f64,
    clifford_bound: f64,
    distance: CodeDistance,
    clifford_actual: f64,
}

/// Build a factory chain delivering T states at error `target` from physical
/// T states at error `p_t`, on a machine with Clifford error `p`.
///
/// Returns the zero-round design when `p_t <= target`. The final round uses a
/// single RM-prep logical unit; earlier rounds use space-efficient logical
/// units, each sized to supply `15 * unit_count(next round)` outputs with the
/// configured confidence.
pub fn design_factory(
    p_t: f64,
    p: f64,
    qec: &QecParams,
    params: &PhysicalParams,
    target: f64,
    cfg: &FactoryConfig,
) -> Result<FactoryDesign> {
    if !(0.0..1.0).contains(&p_t) {
        return Err(Error::invalid(
            "p_t",
            format!("physical T error must be in [0, 1), got {p_t}"),
        ));
    }
    if !(target > 0.0 && target < 1.0) {
        return Err(Error::invalid(
            "target",
            format!("must be in (0, 1), got {target}"),
        ));
    }
    if p_t <= target {
        return Ok(FactoryDesign::no_distillation());
    }

    // Backward pass, last round first: pick each round's distance from its
    // Clifford bound, then invert the output-error formula for the largest
    // input T error the round tolerates.
    let mut spine: Vec<SpineRound> = Vec::new();
    let mut round_target = target;
    loop {
        if spine.len() as u32 == cfg.max_rounds {
            return Err(Error::Infeasible(format!(
                "cannot construct factory chain: no chain of at most {} rounds reaches \
                 T-state error {target:e} from physical T error {p_t:e}",
                cfg.max_rounds
            )));
        }
        let clifford_bound = round_target / 7.1;
        let distance = required_distance(clifford_bound, p, qec)?;
        let clifford_actual = logical_error_rate(distance, p, qec)?;
        let headroom = round_target - 7.1 * clifford_actual;
        if headroom <= 0.0 {
            return Err(Error::Infeasible(format!(
                "cannot construct factory chain: Clifford error {clifford_actual:e} at \
                 distance {distance} consumes the whole round target {round_target:e}"
            )));
        }
        let max_input = (headroom / 35.0).cbrt();
        spine.push(SpineRound {
            target: round_target,
            clifford_bound,
            distance,
            clifford_actual,
        });
        if max_input >= p_t {
            break;
        }
        round_target = max_input;
    }
    spine.reverse(); // execution order

    let n_rounds = spine.len();
    let mut unit_counts = vec![1u64; n_rounds];
    // The last round is a single unit; each earlier round feeds 15 inputs per
    // downstream unit with the configured confidence.
    for i in (0..n_rounds - 1).rev() {
        // A round's input is bounded by what the previous round guarantees,
        // which is exactly this round's max tolerable input.
        let input = if i == 0 { p_t } else { spine[i - 1].target };
        let acc = acceptance_probability(input, spine[i].clifford_bound);
        if acc <= 0.0 {
            return Err(Error::Infeasible(format!(
                "cannot construct factory chain: round {} acceptance probability is zero",
                i + 1
            )));
        }
        let needed = 15 * unit_counts[i + 1];
        unit_counts[i] = units_for_round(acc, needed, cfg.confidence, cfg.unit_count_rule)?;
    }

    let mut rounds = Vec::with_capacity(n_rounds);
    let mut total_runtime_ns = 0.0;
    let mut qubits = 0u64;
    for (i, s) in spine.iter().enumerate() {
        let unit = if i == n_rounds - 1 {
            DistillationUnit::RmPrepLogical
        } else {
            DistillationUnit::SpaceEfficientLogical
        };
        let input_t_error = if i == 0 { p_t } else { spine[i - 1].target };
        let round = DistillationRound {
            distance: s.distance,
            unit,
            unit_count: unit_counts[i],
            input_t_error,
            output_t_error: distilled_output_error(input_t_error, s.clifford_actual),
            clifford_error_bound: s.clifford_bound,
            acceptance_prob: acceptance_probability(input_t_error, s.clifford_bound),
        };
        total_runtime_ns += unit.runtime_ns(s.distance, params);
        qubits = qubits.max(unit_counts[i] * unit.qubit_cost(s.distance));
        rounds.push(round);
    }

    debug_assert!(spine.last().map(|s| s.target) == Some(target));
    Ok(FactoryDesign {
        rounds,
        total_runtime_ns,
        qubits,
        outputs_per_run: unit_counts[n_rounds - 1],
    })
}

/// Number of factories needed to produce `m` T states within the algorithm
/// runtime: `ceil(m * factory_runtime / (outputs_per_run * algorithm_runtime))`.
pub fn factory_count(m: u64, design: &FactoryDesign, algorithm_runtime_ns: f64) -> u64 {
    if m == 0 || design.is_no_distillation() {
        return 0;
    }
    let per_run = design.outputs_per_run.max(1) as f64;
    let ratio = m as f64 * design.total_runtime_ns / (per_run * algorithm_runtime_ns);
    ceil_snapped(ratio) as u64
}
