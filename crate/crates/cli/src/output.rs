use homology_engine::{AbelianGroupInvariants, VerificationReport};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// One rack's homology results: integral groups and mod-p dimensions per
/// (variant, degree), plus any verification verdicts.
pub struct HomologyReport {
    pub rack: String,
    pub size: usize,
    pub m: usize,
    pub homogeneous: bool,
    /// (variant letter, degree, group), in output order.
    pub groups: Vec<(char, usize, AbelianGroupInvariants)>,
    /// (variant letter, degree, prime, dimension), in output order.
    pub modp: Vec<(char, usize, u64, usize)>,
    /// (name, verdict), in output order.
    pub verdicts: Vec<(String, String)>,
}

impl HomologyReport {
    pub fn to_json(&self) -> Value {
        let mut groups = Map::new();
        for (w, n, g) in &self.groups {
            let by_degree = groups
                .entry(w.to_string())
                .or_insert_with(|| Value::Object(Map::new()));
            by_degree.as_object_mut().unwrap().insert(
                n.to_string(),
                json!({
                    "rank": g.free_rank(),
                    "factors": g.torsion().iter().map(|&d| d as u64).collect::<Vec<_>>(),
                }),
            );
        }
        let mut modp = Map::new();
        for (w, n, p, dim) in &self.modp {
            let by_degree = modp
                .entry(w.to_string())
                .or_insert_with(|| Value::Object(Map::new()));
            let by_prime = by_degree
                .as_object_mut()
                .unwrap()
                .entry(n.to_string())
                .or_insert_with(|| Value::Object(Map::new()));
            by_prime
                .as_object_mut()
                .unwrap()
                .insert(p.to_string(), json!(dim));
        }
        let mut verdicts = Map::new();
        for (name, verdict) in &self.verdicts {
            verdicts.insert(name.clone(), json!(verdict));
        }
        json!({
            "rack": self.rack,
            "m": self.m,
            "homogeneous": self.homogeneous,
            "groups": groups,
            "modp": modp,
            "verdicts": verdicts,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "rack {} (size {}, orbits {}, {})\n",
            self.rack,
            self.size,
            self.m,
            if self.homogeneous {
                "homogeneous"
            } else {
                "not homogeneous"
            }
        );
        for (w, n, g) in &self.groups {
            out.push_str(&format!("H^{w}_{n} = {g}\n"));
        }
        for (w, n, p, dim) in &self.modp {
            out.push_str(&format!("dim H^{w}_{n}(-; Z_{p}) = {dim}\n"));
        }
        for (name, verdict) in &self.verdicts {
            out.push_str(&format!("{name}: {verdict}\n"));
        }
        out
    }
}

pub fn verification_to_json(report: &VerificationReport) -> Value {
    let mut verdicts = Map::new();
    for item in &report.items {
        verdicts.insert(
            item.label.clone(),
            json!(if item.passed { "PASS" } else { "FAIL" }),
        );
    }
    json!({
        "rack": report.subject,
        "applicable": report.applicable,
        "pass": report.all_passed(),
        "verdicts": verdicts,
    })
}

pub fn verification_to_text(report: &VerificationReport) -> String {
    if !report.applicable {
        return format!("{}: NOT-APPLICABLE (orbits are not homogeneous)\n", report.subject);
    }
    let mut out = String::new();
    for item in &report.items {
        if item.passed {
            out.push_str(&format!("PASS {}\n", item.label));
        } else {
            out.push_str(&format!("FAIL {} ({})\n", item.label, item.detail));
        }
    }
    let total = report.items.len();
    let passed = report.items.iter().filter(|i| i.passed).count();
    out.push_str(&format!("{passed}/{total} checks passed\n"));
    out
}
