//! Machine-readable verification reports.
//!
//! The JSON schema is fixed: `command`, `inputs`, `verdict`, `verdicts`,
//! `witness_count`, `witnesses`, `erratum_flags`, `notes`, `timing_ms`, and
//! (for sweeps) `entries`. Witnesses are emitted in the same set grammar the
//! CLI parses, so reports round-trip. CSV output is a flat projection of the
//! same data.

use std::collections::BTreeMap;

use serde::Serialize;

/// One line of a sweep: the duality verdicts for a single cube.
#[derive(Clone, Debug, Serialize)]
pub struct SweepEntry {
    pub group: String,
    pub cube: String,
    pub divisibility: bool,
    pub tiling_complements: usize,
    pub spectra: usize,
    pub agrees: bool,
}

/// Structured outcome of one CLI command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    /// The command's overall boolean outcome.
    pub verdict: bool,
    /// Named boolean/count results, keyed deterministically.
    pub verdicts: BTreeMap<String, serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    /// Detected discrepancies between closed-form shortcuts and the exact
    /// transform computations.
    pub erratum_flags: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<SweepEntry>>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            verdict: false,
            verdicts: BTreeMap::new(),
            witness_count: None,
            witnesses: None,
            erratum_flags: Vec::new(),
            notes: Vec::new(),
            timing_ms: None,
            entries: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn flag(&mut self, key: &str, value: bool) -> &mut Self {
        self.verdicts
            .insert(key.to_string(), serde_json::Value::Bool(value));
        self
    }

    pub fn count(&mut self, key: &str, value: usize) -> &mut Self {
        self.verdicts
            .insert(key.to_string(), serde_json::Value::from(value));
        self
    }

    pub fn text(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.verdicts
            .insert(key.to_string(), serde_json::Value::String(value.to_string()));
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        if let Some(entries) = &self.entries {
            let mut out = String::from(
                "group,cube,divisibility,tiling_complements,spectra,agrees\n",
            );
            for e in entries {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    csv_escape(&e.group),
                    csv_escape(&e.cube),
                    e.divisibility,
                    e.tiling_complements,
                    e.spectra,
                    e.agrees
                ));
            }
            return out;
        }
        let mut header: Vec<String> = vec!["command".into()];
        let mut row: Vec<String> = vec![csv_escape(&self.command)];
        for (k, v) in &self.inputs {
            header.push(format!("input_{k}"));
            row.push(csv_escape(v));
        }
        header.push("verdict".into());
        row.push(self.verdict.to_string());
        for (k, v) in &self.verdicts {
            header.push(k.clone());
            let flat = match v {
                serde_json::Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            row.push(csv_escape(&flat));
        }
        if let Some(n) = self.witness_count {
            header.push("witness_count".into());
            row.push(n.to_string());
        }
        if let Some(w) = &self.witnesses {
            header.push("witnesses".into());
            row.push(csv_escape(&w.join("|")));
        }
        header.push("erratum_flags".into());
        row.push(csv_escape(&self.erratum_flags.join("|")));
        if !self.notes.is_empty() {
            header.push("notes".into());
            row.push(csv_escape(&self.notes.join("|")));
        }
        if let Some(t) = self.timing_ms {
            header.push("timing_ms".into());
            row.push(t.to_string());
        }
        format!("{}\n{}\n", header.join(","), row.join(","))
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
