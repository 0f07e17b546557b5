//! Human-readable rendering helpers.

use crate::report::{EstimateReport, SweepRow};

/// Render a duration with an automatic unit (ns/µs/ms/s/h/days).
pub fn human_duration(ns: f64) -> String {
    let s = ns / 1e9;
    if ns == 0.0 {
        "0 s".to_string()
    } else if s >= 172_800.0 {
        format!("{:.3} days", s / 86_400.0)
    } else if s >= 3_600.0 {
        format!("{:.3} h", s / 3_600.0)
    } else if s >= 0.1 {
        format!("{s:.3} s")
    } else if s >= 1e-3 {
        format!("{:.3} ms", s * 1e3)
    } else if s >= 1e-7 {
        format!("{:.3} µs", s * 1e6)
    } else {
        format!("{ns:.3} ns")
    }
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    out.push_str(&format!("{key:<22} {value}\n"));
}

pub fn render_estimate(r: &EstimateReport) -> String {
    let mut out = String::new();
    line(&mut out, "scenario", &r.scenario);
    if let Some(d) = r.n_days {
        line(&mut out, "days", d);
    }
    line(&mut out, "error budget", r.error_budget);
    if let Some(it) = &r.iterations {
        line(&mut out, "grover rotations", it);
    }
    line(&mut out, "logical qubits", r.logical_qubits);
    line(&mut out, "logical cycles", r.logical_cycles);
    line(&mut out, "t-states", r.t_states);
    match r.code_distance {
        Some(d) => {
            line(
                &mut out,
                "logical error target",
                format!("{:.3e}", r.logical_error_target),
            );
            line(&mut out, "code distance", d);
            line(&mut out, "cycle time", human_duration(r.cycle_time_s * 1e9));
        }
        None => line(&mut out, "code distance", "- (no error correction)"),
    }
    line(&mut out, "runtime", human_duration(r.runtime_s * 1e9));
    if r.factory.rounds.is_empty() {
        line(&mut out, "distillation", "none required");
    } else {
        let rounds: Vec<String> = r
            .factory
            .rounds
            .iter()
            .map(|x| format!("d={} ×{} {}", x.distance, x.unit_count, x.unit))
            .collect();
        line(&mut out, "distillation rounds", rounds.join(", "));
        line(
            &mut out,
            "factory",
            format!(
                "{} qubits, {} per run, {} factories",
                r.factory.qubits,
                human_duration(r.factory.total_runtime_s * 1e9),
                r.factory_count
            ),
        );
    }
    line(
        &mut out,
        "physical qubits",
        format!(
            "{} total = {} encoding + {} distillation",
            r.qubits_total, r.qubits_logical, r.qubits_distillation
        ),
    );
    if let Some(classical) = r.classical_runtime_s {
        line(
            &mut out,
            "classical runtime",
            human_duration(classical * 1e9),
        );
        line(
            &mut out,
            "speedup",
            if r.speedup == Some(true) { "yes" } else { "no" },
        );
    }
    if let Some(f) = &r.feasibility {
        let year = f
            .year
            .map(|y| y.to_string())
            .unwrap_or_else(|| "unscheduled".to_string());
        let bound = if f.lower_bound { ">" } else { "" };
        line(
            &mut out,
            "first large enough",
            format!(
                "{} {} ({bound}{} qubits, {year})",
                f.company, f.designation, f.qubits
            ),
        );
    } else {
        line(&mut out, "first large enough", "nothing on the roadmap");
    }
    out
}

pub fn render_sweep_table(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<18} {:>6} {:>9} {:>14} {:>13} {:>10} {:>11} {}\n",
        "scenario", "days", "distance", "runtime", "qubits", "factories", "speedup", "reason"
    ));
    for r in rows {
        let dist = r
            .code_distance
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".into());
        let runtime = r
            .runtime_s
            .map(|s| human_duration(s * 1e9))
            .unwrap_or_else(|| "-".into());
        let qubits = r
            .qubits_total
            .map(|q| q.to_string())
            .unwrap_or_else(|| "-".into());
        let factories = r
            .factories
            .map(|f| f.to_string())
            .unwrap_or_else(|| "-".into());
        let speedup = match r.speedup {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let days = r
            .n_days
            .map(|d| d.to_string())
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{:<18} {:>6} {:>9} {:>14} {:>13} {:>10} {:>11} {}\n",
            r.scenario, days, dist, runtime, qubits, factories, speedup, r.reason
        ));
    }
    out
}
