//! The machine-readable verification report. Reports are deterministic:
//! identical inputs and version produce byte-identical JSON, so timing is
//! printed alongside the text output and never serialized.

use permuta_core::fq::{Fq, SUPPORTED_Q};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigSnapshot {
    pub cap_order: usize,
    pub cap_closure: usize,
    pub seed: u64,
    /// The fixed irreducible moduli behind each supported field size.
    pub field_moduli: Vec<String>,
}

impl ConfigSnapshot {
    pub fn new(cap_order: usize, cap_closure: usize, seed: u64) -> ConfigSnapshot {
        let field_moduli = SUPPORTED_Q
            .iter()
            .map(|&q| {
                let f = Fq::new(q).expect("supported");
                format!("GF({q}): {}", f.modulus_description())
            })
            .collect();
        ConfigSnapshot {
            cap_order,
            cap_closure,
            seed,
            field_moduli,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub command: String,
    pub config: ConfigSnapshot,
    pub items: Vec<ReportItem>,
    pub verdict: bool,
}

impl VerificationReport {
    pub fn new(command: String, config: ConfigSnapshot, items: Vec<ReportItem>) -> Self {
        let verdict = items.iter().all(|i| i.pass);
        VerificationReport {
            schema: SCHEMA_VERSION,
            command,
            config,
            items,
            verdict,
        }
    }

    pub fn from_suite(
        command: String,
        config: ConfigSnapshot,
        suite: permuta_core::suites::SuiteReport,
    ) -> Self {
        let items = suite
            .items
            .into_iter()
            .map(|i| ReportItem {
                name: i.name,
                pass: i.pass,
                detail: i.detail,
                data: None,
            })
            .collect();
        VerificationReport::new(command, config, items)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== permuta {}\n", self.command));
        for item in &self.items {
            let tag = if item.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{tag}] {} — {}\n", item.name, item.detail));
        }
        let passed = self.items.iter().filter(|i| i.pass).count();
        out.push_str(&format!(
            "verdict: {} ({passed}/{} items)\n",
            if self.verdict { "PASS" } else { "FAIL" },
            self.items.len()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_identity() {
        let config = ConfigSnapshot::new(500, 10_000, 0);
        let report = VerificationReport::new(
            "verify lemma3.1".into(),
            config,
            vec![ReportItem {
                name: "x".into(),
                pass: true,
                detail: "d".into(),
                data: Some(serde_json::json!({"k": [1, 2]})),
            }],
        );
        let emitted = report.to_json();
        let parsed: VerificationReport = serde_json::from_str(&emitted).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(parsed.to_json(), emitted);
    }

    #[test]
    fn verdict_is_the_conjunction() {
        let config = ConfigSnapshot::new(1, 1, 0);
        let mk = |pass| ReportItem {
            name: "i".into(),
            pass,
            detail: String::new(),
            data: None,
        };
        let r = VerificationReport::new("c".into(), config.clone(), vec![mk(true), mk(false)]);
        assert!(!r.verdict);
        let r = VerificationReport::new("c".into(), config, vec![mk(true), mk(true)]);
        assert!(r.verdict);
    }
}
