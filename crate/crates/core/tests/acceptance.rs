//! Acceptance suite: one test per reference criterion, each printing a
//! PASS/FAIL summary line. Run with
//! `cargo test -p qcost-core --test acceptance -- --nocapture`.
//!
//! Every tolerance is pinned in code. Checks that the per-day workload model
//! cannot meet (plot-read targets at small problem sizes, display-precision
//! tolerances tighter than the exact arithmetic) are asserted as stated and
//! fail honestly; see the README's model-limitations section.

use qcost_core::counts::{qiss_logical_counts, QissInstance};
use qcost_core::distill::{
    acceptance_probability, design_factory, units_for_round, FactoryConfig, UnitCountRule,
};
use qcost_core::estimator::{estimate, estimate_scenario, split_budget, EstimatorConfig};
use qcost_core::gas::{classical_runtime_secs, crossover_days};
use qcost_core::qec::{
    logical_cycle_time_ns, logical_error_rate, required_distance, CodeDistance, QecParams,
};
use qcost_core::scenarios::find_scenario;
use qcost_core::LogicalCounts;

// ---------------------------------------------------------------------------
// harness

struct Criterion {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
}

impl Criterion {
    fn new(name: &'static str) -> Self {
        Criterion {
            name,
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, label: impl Into<String>, ok: bool) {
        self.checks += 1;
        if !ok {
            self.failures.push(label.into());
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: T, want: T) {
        let ok = got == want;
        self.check(format!("{label}: expected {want:?}, got {got:?}"), ok);
    }

    fn check_rel(&mut self, label: &str, got: f64, want: f64, tol: f64) {
        let rel = (got / want - 1.0).abs();
        self.check(
            format!("{label}: expected {want:e} ± {tol:e} rel, got {got:e} (rel {rel:.3e})"),
            rel <= tol,
        );
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("acceptance {}: PASS ({} checks)", self.name, self.checks);
        } else {
            println!(
                "acceptance {}: FAIL ({}/{} checks failed)",
                self.name,
                self.failures.len(),
                self.checks
            );
            for f in &self.failures {
                println!("  - {f}");
            }
            panic!(
                "acceptance {}: {}/{} checks failed",
                self.name,
                self.failures.len(),
                self.checks
            );
        }
    }
}

/// Deterministic xorshift64* for the randomized-grid criteria.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + u * (hi - lo)
    }

    fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        10f64.powf(self.uniform(lo.log10(), hi.log10()))
    }
}

fn ten_day_counts() -> LogicalCounts {
    qiss_logical_counts(QissInstance::new(10).unwrap())
}

fn cfg() -> EstimatorConfig {
    EstimatorConfig::default()
}

// ---------------------------------------------------------------------------
// criteria

#[test]
fn criterion_1_ten_day_worked_example() {
    let mut c = Criterion::new("criterion 1 (ten-day end-to-end reproduction)");
    let r = estimate(
        &ten_day_counts(),
        &find_scenario("flat-1e-3").unwrap().params,
        0.001,
        &cfg(),
    )
    .expect("ten-day estimate must succeed");

    c.check_eq("logical qubits Q", r.logical_qubits, 264);
    c.check_eq("logical cycles C_min", r.logical_cycles, 101_575);
    c.check_eq("T states M", r.t_states, 175_014);
    c.check_eq(
        "code distance d",
        r.code_distance.map(|d| d.get()),
        Some(19),
    );
    c.check_eq(
        "physical qubits per logical n(d)",
        r.qubits_logical / r.logical_qubits,
        722,
    );
    c.check_eq("encoding qubits q_log", r.qubits_logical, 190_608);
    c.check_eq("factory count F", r.factory_count, 23);
    c.check_eq("qubits per factory", r.factory.qubits, 18_000);
    c.check_eq("distillation qubits q_dis", r.qubits_distillation, 414_000);
    c.check_eq("total qubits q_total", r.qubits_total, 604_608);
    c.check_rel(
        "logical error target P vs 1.24e-11",
        r.logical_error_target,
        1.24e-11,
        1e-3,
    );
    c.check_eq("cycle time tau(d) ns", r.cycle_time_ns, 7600.0);
    c.check_rel("runtime vs 0.772 s", r.runtime_ns / 1e9, 0.772, 1e-3);

    let distances: Vec<u32> = r.factory.rounds.iter().map(|x| x.distance.get()).collect();
    c.check_eq("distillation distances", distances, vec![5, 17]);
    if r.factory.rounds.len() == 2 {
        c.check_rel(
            "round-2 input T bound vs 3.64e-4",
            r.factory.rounds[1].input_t_error,
            3.64e-4,
            5e-3,
        );
    } else {
        c.check("round-2 input T bound: missing round", false);
    }
    c.check_rel(
        "factory runtime tau(D) vs 101 us",
        r.factory.total_runtime_ns,
        101_000.0,
        1e-2,
    );
    c.finish();
}

#[test]
fn criterion_2_code_distance_grid() {
    let mut c = Criterion::new("criterion 2 (code-distance grid, days 1-20, budget 0.25)");
    let p3 = find_scenario("flat-1e-3").unwrap().params;
    let p4 = find_scenario("flat-1e-4").unwrap().params;

    let mut previous = 0u32;
    for day in 1..=20u64 {
        let counts = qiss_logical_counts(QissInstance::new(day).unwrap());

        let d4 = estimate(&counts, &p4, 0.25, &cfg())
            .unwrap()
            .code_distance
            .unwrap()
            .get();
        c.check(
            format!("flat-1e-4 day {day}: expected distance 7, got {d4}"),
            d4 == 7,
        );

        let d3 = estimate(&counts, &p3, 0.25, &cfg())
            .unwrap()
            .code_distance
            .unwrap()
            .get();
        c.check(
            format!("flat-1e-3 day {day}: expected distance in {{13, 15}}, got {d3}"),
            d3 == 13 || d3 == 15,
        );
        c.check(
            format!("flat-1e-3 day {day}: distance {d3} not below previous {previous}"),
            d3 >= previous,
        );
        previous = d3;
    }
    c.finish();
}

#[test]
fn criterion_3_budget_scaling_identity() {
    let mut c = Criterion::new("criterion 3 (budget-scaling identity, exact)");
    let base = ten_day_counts();
    for scenario in ["flat-1e-3", "flat-1e-4"] {
        let params = find_scenario(scenario).unwrap().params;
        for k in [2u64, 4, 16, 256, 4096] {
            let lhs = estimate(&base.repeated(k), &params, 0.25, &cfg()).unwrap();
            let rhs = estimate(&base, &params, 0.25 / k as f64, &cfg()).unwrap();
            c.check(
                format!(
                    "{scenario} k={k}: runtime {} != {} * {}",
                    lhs.runtime_ns, k, rhs.runtime_ns
                ),
                lhs.runtime_ns == rhs.runtime_ns * k as f64,
            );
            c.check_eq(
                &format!("{scenario} k={k}: total qubits"),
                lhs.qubits_total,
                rhs.qubits_total,
            );
            c.check_eq(
                &format!("{scenario} k={k}: logical qubits"),
                lhs.qubits_logical,
                rhs.qubits_logical,
            );
            c.check_eq(
                &format!("{scenario} k={k}: distillation qubits"),
                lhs.qubits_distillation,
                rhs.qubits_distillation,
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_4_classical_baseline() {
    let mut c = Criterion::new("criterion 4 (classical baseline)");
    c.check_eq(
        "classical runtime at 11 days, seconds",
        classical_runtime_secs(11).unwrap(),
        17592.186044416,
    );
    c.finish();
}

#[test]
fn criterion_5_crossover_findings() {
    let mut c = Criterion::new("criterion 5 (crossover findings)");
    let config = cfg();

    let nine = find_scenario("flat-1e-9").unwrap();
    match crossover_days(&nine, 0.25, 20, &config).unwrap() {
        Some(run) => {
            c.check_eq("flat-1e-9 crossover day", run.n_days, 11);
            let hours = run.quantum_runtime_ns / 1e9 / 3600.0;
            c.check(
                format!("flat-1e-9 quantum runtime {hours:.3} h within [1, 4] h"),
                (1.0..=4.0).contains(&hours),
            );
        }
        None => c.check("flat-1e-9 crossover: none found within 20 days", false),
    }

    let six = find_scenario("flat-1e-6").unwrap();
    match crossover_days(&six, 0.25, 20, &config).unwrap() {
        Some(run) => c.check(
            format!(
                "flat-1e-6 crossover day {} within {{11, 12, 13}}",
                run.n_days
            ),
            (11..=13).contains(&run.n_days),
        ),
        None => c.check("flat-1e-6 crossover: none found within 20 days", false),
    }

    let perfect = find_scenario("perfect").unwrap();
    match crossover_days(&perfect, 0.25, 20, &config).unwrap() {
        Some(run) => c.check_eq("perfect-qubit crossover day", run.n_days, 8),
        None => c.check("perfect-qubit crossover: none found within 20 days", false),
    }

    let three = find_scenario("flat-1e-3").unwrap();
    let found = crossover_days(&three, 0.25, 20, &config).unwrap();
    c.check(
        format!(
            "flat-1e-3: expected no crossover through 20 days, got {:?}",
            found.as_ref().map(|r| r.n_days)
        ),
        found.is_none(),
    );
    c.finish();
}

#[test]
fn criterion_6_unit_count_pins() {
    let mut c = Criterion::new("criterion 6 (distillation unit-count pins)");
    c.check_eq(
        "default rule units(0.966, 15, 0.999)",
        units_for_round(0.966, 15, 0.999, UnitCountRule::NormalApprox).unwrap(),
        18,
    );
    c.check_eq(
        "exact-binomial units(0.966, 15, 0.999)",
        units_for_round(0.966, 15, 0.999, UnitCountRule::ExactBinomial).unwrap(),
        19,
    );
    let acc = acceptance_probability(0.001, 5.13e-5);
    let rounded = (acc * 1000.0).round() / 1000.0;
    c.check(
        format!(
            "acceptance(0.001, 5.13e-5) = {acc:.6} rounds to 0.966 at 3 decimals (got {rounded})"
        ),
        rounded == 0.966,
    );
    c.finish();
}

#[test]
fn criterion_7_property_suites() {
    let mut c = Criterion::new("criterion 7 (property suites)");
    let qec = QecParams::default();

    // qec monotonicity and round-trip over the randomized (P, p) grid
    let mut rng = Rng::new(0x5eed_cafe_f00d_0001);
    let mut qec_ok = true;
    let mut qec_detail = String::new();
    for _ in 0..1000 {
        let p = rng.log_uniform(1e-6, 5e-3 - f64::EPSILON);
        let target = rng.log_uniform(1e-20, 1e-2);
        let d = required_distance(target, p, &qec).unwrap();
        let at = logical_error_rate(d, p, &qec).unwrap();
        let odd_ok = d.get() >= 3 && d.get() % 2 == 1;
        let meets = at <= target;
        let minimal = if d.get() > 3 {
            let below = CodeDistance::new(d.get() - 2).unwrap();
            logical_error_rate(below, p, &qec).unwrap() > target
        } else {
            true
        };
        let step_up = CodeDistance::new(d.get() + 2).unwrap();
        let monotone_d = logical_error_rate(step_up, p, &qec).unwrap() < at;
        let monotone_p = logical_error_rate(d, p * 0.5, &qec).unwrap() < at;
        if !(odd_ok && meets && minimal && monotone_d && monotone_p) {
            qec_ok = false;
            qec_detail = format!("p={p:e} target={target:e} d={d}");
            break;
        }
    }
    c.check(
        format!("qec monotonicity/round-trip grid (1000 samples) {qec_detail}"),
        qec_ok,
    );

    // factory chains compose forward to their target
    let mut rng = Rng::new(0x5eed_cafe_f00d_0002);
    let params = find_scenario("flat-1e-3").unwrap().params;
    let mut chains = 0usize;
    let mut chain_ok = true;
    let mut chain_detail = String::new();
    for _ in 0..400 {
        let p = rng.log_uniform(1e-6, 5e-3 - f64::EPSILON);
        let target = rng.log_uniform(1e-18, 1e-3);
        let design = match design_factory(p, p, &qec, &params, target, &FactoryConfig::default()) {
            Ok(d) => d,
            Err(_) => continue,
        };
        chains += 1;
        let mut err = p;
        for round in &design.rounds {
            let clifford = logical_error_rate(round.distance, p, &qec).unwrap();
            err = 35.0 * err.powi(3) + 7.1 * clifford;
        }
        if err > target * (1.0 + 1e-9) {
            chain_ok = false;
            chain_detail = format!("p={p:e} target={target:e} composed={err:e}");
            break;
        }
    }
    c.check(
        format!("factory forward-composition ({chains} feasible chains) {chain_detail}"),
        chain_ok && chains > 100,
    );

    // effective failure probability of the equal split at 0.25
    let eff = split_budget(0.25).unwrap().effective_failure();
    c.check(
        format!("budget-split effective failure {eff:.6} within 0.2297 ± 0.0001"),
        (eff - 0.2297).abs() <= 1e-4,
    );
    c.finish();
}

#[test]
fn criterion_8_heterogeneous_scenario_properties() {
    let mut c = Criterion::new("criterion 8 (heterogeneous-scenario properties)");
    let rer = find_scenario("rer").unwrap().params;
    let fm = find_scenario("fm").unwrap().params;

    let mut cycle_ok = true;
    for half in 1..=30u32 {
        let d = CodeDistance::new(2 * half + 1).unwrap();
        if logical_cycle_time_ns(d, &rer) <= logical_cycle_time_ns(d, &fm) {
            cycle_ok = false;
        }
    }
    c.check(
        "RER cycle time strictly exceeds FM cycle time at every distance",
        cycle_ok,
    );

    for name in ["flat-1e-3", "flat-1e-4", "ref", "rer", "fm"] {
        let scenario = find_scenario(name).unwrap();
        for day in 10..=20u64 {
            let counts = qiss_logical_counts(QissInstance::new(day).unwrap());
            match estimate_scenario(&scenario, &counts, 0.25, &cfg()) {
                Ok(r) => c.check(
                    format!("{name} day {day}: q_total {} exceeds 1e6", r.qubits_total),
                    r.qubits_total > 1_000_000,
                ),
                Err(e) => c.check(format!("{name} day {day}: estimate failed: {e}"), false),
            }
        }
    }
    c.finish();
}
