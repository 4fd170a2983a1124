//! Rendering of per-graph analysis documents.
//!
//! The machine format is one flat JSON object per graph with a fixed key
//! order, so identical inputs produce byte-identical documents; timings
//! are the only unstable values and are dropped under `--no-timing`.

use kegraph_core::graph::Graph;
use kegraph_core::ke::KeDiagnosis;
use kegraph_core::report::TheoremReport;
use kegraph_core::set::VertexSet;
use std::fmt::Write;

pub struct AnalysisDocument {
    pub name: Option<String>,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub diagnosis: KeDiagnosis,
    pub d: i64,
    pub core: VertexSet,
    pub corona: VertexSet,
    pub ker: VertexSet,
    pub diadem: VertexSet,
    pub nucleus: VertexSet,
    pub reports: Vec<TheoremReport>,
    pub invariants_ms: u128,
    pub theorems_ms: u128,
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn set_json(s: VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

impl AnalysisDocument {
    /// One flat JSON object, keys in fixed order.
    pub fn machine(&self, timing: bool) -> String {
        let mut pairs: Vec<(String, String)> = vec![
            ("graph6".into(), format!("\"{}\"", json_escape(&self.graph6))),
            ("n".into(), self.n.to_string()),
            ("m".into(), self.m.to_string()),
            ("alpha".into(), self.diagnosis.alpha.to_string()),
            ("mu".into(), self.diagnosis.mu.to_string()),
            ("d".into(), self.d.to_string()),
            ("core".into(), set_json(self.core)),
            ("corona".into(), set_json(self.corona)),
            ("ker".into(), set_json(self.ker)),
            ("diadem".into(), set_json(self.diadem)),
            ("nucleus".into(), set_json(self.nucleus)),
            ("is_ke".into(), self.diagnosis.is_ke.to_string()),
            (
                "bounds".into(),
                format!(
                    "[{},{},{}]",
                    self.diagnosis.bounds.0, self.diagnosis.bounds.1, self.diagnosis.bounds.2
                ),
            ),
        ];
        for r in &self.reports {
            pairs.push((format!("theorem:{}", r.id), format!("\"{}\"", r.verdict)));
            pairs.push((
                format!("witness:{}", r.id),
                format!("\"{}\"", json_escape(&r.witness_summary())),
            ));
        }
        if timing {
            pairs.push(("timing-ms:invariants".into(), self.invariants_ms.to_string()));
            pairs.push(("timing-ms:theorems".into(), self.theorems_ms.to_string()));
        }
        let body: Vec<String> = pairs
            .into_iter()
            .map(|(k, v)| format!("\"{k}\":{v}"))
            .collect();
        format!("{{{}}}", body.join(","))
    }

    /// Human-readable block, using vertex labels when the graph has them.
    pub fn text(&self, g: &Graph, timing: bool) -> String {
        let mut out = String::new();
        let title = match &self.name {
            Some(name) => format!("{name} ({})", self.graph6),
            None => self.graph6.clone(),
        };
        let _ = writeln!(out, "graph {title}: n={} m={}", self.n, self.m);
        let _ = writeln!(out, "  alpha   = {}", self.diagnosis.alpha);
        let _ = writeln!(out, "  mu      = {}", self.diagnosis.mu);
        let _ = writeln!(out, "  d       = {}", self.d);
        let _ = writeln!(out, "  core    = {}", g.set_to_string(self.core));
        let _ = writeln!(out, "  corona  = {}", g.set_to_string(self.corona));
        let _ = writeln!(out, "  ker     = {}", g.set_to_string(self.ker));
        let _ = writeln!(out, "  diadem  = {}", g.set_to_string(self.diadem));
        let _ = writeln!(out, "  nucleus = {}", g.set_to_string(self.nucleus));
        let _ = writeln!(out, "  is_ke   = {}", self.diagnosis.is_ke);
        let _ = writeln!(
            out,
            "  bounds  = 2a={} <= corona+core={} <= 2(n-mu)={}",
            self.diagnosis.bounds.0, self.diagnosis.bounds.1, self.diagnosis.bounds.2
        );
        let _ = writeln!(out, "  theorems:");
        for r in &self.reports {
            let witness = r.witness_summary();
            if witness.is_empty() {
                let _ = writeln!(out, "    {:<24} {}", r.id, r.verdict);
            } else {
                let _ = writeln!(out, "    {:<24} {:<18} {witness}", r.id, r.verdict.to_string());
            }
        }
        if timing {
            let _ = writeln!(
                out,
                "  timing: invariants={}ms theorems={}ms",
                self.invariants_ms, self.theorems_ms
            );
        }
        out
    }
}
