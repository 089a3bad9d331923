//! Report structure shared by all subcommands.
//!
//! JSON reports carry the tool version, a config echo with a normalized
//! argv (so any report can be re-run exactly), the dimension table of
//! every algebra involved, and a truncation banner whenever a verdict is
//! degree-truncated evidence rather than a complete statement. Verdict
//! fields are deterministic for a fixed seed; only `timings` varies
//! between runs.

use serde::Serialize;
use serde_json::{Map, Value};

use starpi_core::StarAlgebra;

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub config: Map<String, Value>,
    pub algebras: Vec<AlgebraInfo>,
    pub verdict: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subspace_dims: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated_at: Option<usize>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probabilistic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Map<String, Value>>,
}

#[derive(Serialize)]
pub struct AlgebraInfo {
    pub descriptor: String,
    pub dim: usize,
    pub y_dim: usize,
    pub z_dim: usize,
}

impl Report {
    pub fn new(command: &str, config: Map<String, Value>, algebras: &[&StarAlgebra], seed: u64) -> Self {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            algebras: algebras
                .iter()
                .map(|a| AlgebraInfo {
                    descriptor: a.descriptor(),
                    dim: a.dim(),
                    y_dim: a.y_dim(),
                    z_dim: a.z_dim(),
                })
                .collect(),
            verdict: Value::Null,
            witness: None,
            subspace_dims: None,
            plan: None,
            truncated_at: None,
            seed,
            probabilistic: None,
            details: None,
            timings: None,
        }
    }

    pub fn print_human(&self) {
        println!("starpi {} — {}", self.version, self.command);
        for a in &self.algebras {
            println!(
                "  algebra {:<6} dim {:>3}   dim Y {:>3}   dim Z {:>3}",
                a.descriptor, a.dim, a.y_dim, a.z_dim
            );
        }
        if let Some(d) = self.truncated_at {
            println!("  note: verdicts truncated at degree {d}; evidence, not proof, beyond it");
        }
        println!("  verdict: {}", render_value(&self.verdict));
        if self.probabilistic == Some(true) {
            println!("  note: randomized identity verdict; probabilistic, no completeness claim");
        }
        if let Some(w) = &self.witness {
            print_witness(w, "  ");
        }
        match self.command.as_str() {
            "min-degree" => self.print_min_degree(),
            "containment" => self.print_containment(),
            "subspace" => self.print_subspace(),
            "embed" => self.print_embed(),
            "bench" => self.print_bench(),
            _ => {}
        }
        if let Some(t) = &self.timings {
            let parts: Vec<String> = t.iter().map(|(k, v)| format!("{k} {}", render_value(v))).collect();
            println!("  timings: {}", parts.join(", "));
        }
    }

    fn print_min_degree(&self) {
        let Some(details) = &self.details else { return };
        if let Some(entries) = details["per_degree"].as_array() {
            for e in entries {
                let degree = &e["degree"];
                let verdict = e["verdict"].as_str().unwrap_or("?");
                let tuples = &e["tuples_checked"];
                println!(
                    "  degree {:>2}: {:<12} ({} tuple(s) checked{})",
                    render_value(degree),
                    verdict,
                    render_value(tuples),
                    if e.get("witness").is_none_or(Value::is_null) {
                        ""
                    } else {
                        ", witness stored"
                    }
                );
            }
        }
    }

    fn print_containment(&self) {
        let Some(details) = &self.details else { return };
        if let Some(entries) = details["signatures"].as_array() {
            for e in entries {
                let sig = e["signature"].as_str().unwrap_or("?");
                let ok = e["contained"].as_bool().unwrap_or(false);
                print!(
                    "  signature {:<12} dim_a {:>2}  dim_b {:>2}  {}",
                    sig,
                    render_value(&e["dim_a"]),
                    render_value(&e["dim_b"]),
                    if ok { "contained" } else { "NOT contained" }
                );
                if let Some(sep) = e.get("separating").filter(|s| !s.is_null()) {
                    print!("  separating: {}", sep["polynomial"].as_str().unwrap_or("?"));
                }
                println!();
            }
        }
    }

    fn print_subspace(&self) {
        let Some(details) = &self.details else { return };
        if let Some(entries) = details["subspaces"].as_array() {
            for e in entries {
                println!(
                    "  signature {:<12} dim {}",
                    e["signature"].as_str().unwrap_or("?"),
                    render_value(&e["dim"])
                );
                if let Some(basis) = e["basis"].as_array() {
                    for p in basis {
                        println!("      {}", p.as_str().unwrap_or("?"));
                    }
                }
            }
        }
    }

    fn print_embed(&self) {
        if let Some(plan) = &self.plan {
            println!(
                "  plan: {} -> {}  (preserves involution: {}, unital: {})",
                plan["source"].as_str().unwrap_or("?"),
                plan["target"].as_str().unwrap_or("?"),
                render_value(&plan["preserves_involution"]),
                render_value(&plan["unital"]),
            );
            if let Some(steps) = plan["steps"].as_array() {
                for s in steps {
                    println!(
                        "    step: {:<24} {} -> {}",
                        s["kind"].as_str().unwrap_or("?"),
                        s["from"].as_str().unwrap_or("?"),
                        s["to"].as_str().unwrap_or("?")
                    );
                }
            }
        }
        let Some(details) = &self.details else { return };
        if let Some(reason) = details["decision"]["outcome"]["reason"].as_str() {
            println!("  reason: {reason}");
        }
        if let Some(note) = details["decision"]["note"].as_str() {
            println!("  note: {note}");
        }
        println!(
            "  premise Id(target) <= Id(source), truncated: {}",
            render_value(&details["decision"]["premise_holds_truncated"])
        );
        if let Some(checks) = details["verification"]["checks"].as_array() {
            for c in checks {
                let status = c["status"].as_str().unwrap_or("?");
                print!("  verify {:<24} {}", c["name"].as_str().unwrap_or("?"), status);
                if let Some(detail) = c["detail"].as_str() {
                    print!("  ({detail})");
                }
                println!();
            }
        }
    }

    fn print_bench(&self) {
        let Some(details) = &self.details else { return };
        println!(
            "  {} random instance(s), standard degree {}",
            render_value(&details["instances"]),
            render_value(&details["standard_degree"])
        );
        println!(
            "  combinations verdict: {} (full-scan cross-validated: {})",
            render_value(&details["combinations_verdict"]),
            render_value(&details["full_scan_cross_validated"])
        );
    }
}

fn print_witness(w: &Value, indent: &str) {
    println!("{indent}witness:");
    if let Some(entries) = w["assignment"].as_array() {
        for e in entries {
            let var = e["var"].as_str().unwrap_or("?");
            let idx = match &e["basis_index"] {
                Value::Null => String::from("sampled"),
                v => format!("basis index {}", render_value(v)),
            };
            println!("{indent}  {var} = {} ({idx})", render_value(&e["element"]));
        }
    }
    println!("{indent}  value = {}", render_value(&w["value"]));
}

/// Compact single-line rendering for human output (JSON matrices become
/// `[[..], [..]]` rows without quotes).
fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(render_value).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", render_value(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}
