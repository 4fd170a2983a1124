//! Per-theorem verdicts with witnesses. A conditional statement whose
//! hypothesis is not met reports that explicitly instead of passing as
//! vacuously true.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    HypothesisNotMet,
    SkippedBudget,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::SkippedBudget => "skipped-budget",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of running one checker on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: &'static str,
    pub verdict: Verdict,
    /// Witness and violation summaries, in deterministic order.
    pub details: Vec<String>,
}

impl TheoremReport {
    pub fn new(id: &'static str, verdict: Verdict) -> Self {
        TheoremReport {
            id,
            verdict,
            details: Vec::new(),
        }
    }

    pub fn holds(id: &'static str) -> Self {
        Self::new(id, Verdict::Holds)
    }

    pub fn fails(id: &'static str, detail: impl Into<String>) -> Self {
        Self::new(id, Verdict::Fails).with_detail(detail)
    }

    pub fn hypothesis_not_met(id: &'static str, detail: impl Into<String>) -> Self {
        Self::new(id, Verdict::HypothesisNotMet).with_detail(detail)
    }

    pub fn skipped(id: &'static str, detail: impl Into<String>) -> Self {
        Self::new(id, Verdict::SkippedBudget).with_detail(detail)
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.details.push(detail.into());
        self
    }

    pub fn push(&mut self, detail: impl Into<String>) {
        self.details.push(detail.into());
    }

    /// Marks the report failed and records why.
    pub fn fail(&mut self, detail: impl Into<String>) {
        self.verdict = Verdict::Fails;
        self.details.push(detail.into());
    }

    /// Single-line witness summary for flat machine output.
    pub fn witness_summary(&self) -> String {
        self.details.join("; ")
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.verdict)?;
        if !self.details.is_empty() {
            write!(f, " ({})", self.witness_summary())?;
        }
        Ok(())
    }
}
