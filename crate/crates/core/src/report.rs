//! Machine-readable pass/fail records for every checked equation.

/// Outcome of one check; failures always carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail { witness: String },
}

/// One checked equation or invariant instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Stable identifier of what is being checked, e.g. `axiom.compose.assoc`.
    pub anchor: String,
    /// Which instance, e.g. `X=delta1 Y=delta0 n=2`.
    pub instance: String,
    pub outcome: Outcome,
}

impl Check {
    pub fn pass(anchor: impl Into<String>, instance: impl Into<String>) -> Self {
        Self { anchor: anchor.into(), instance: instance.into(), outcome: Outcome::Pass }
    }

    pub fn fail(
        anchor: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Self {
            anchor: anchor.into(),
            instance: instance.into(),
            outcome: Outcome::Fail { witness: witness.into() },
        }
    }

    pub fn of(
        anchor: impl Into<String>,
        instance: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(anchor, instance)
        } else {
            Self::fail(anchor, instance, witness())
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self.outcome, Outcome::Pass)
    }
}

/// An ordered list of checks belonging to one suite (or one aggregate run).
#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn is_pass(&self) -> bool {
        self.checks.iter().all(Check::is_pass)
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.is_pass()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.is_pass())
    }

    /// Structured text rendering: one line per check plus a summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => {
                    out.push_str(&format!("[PASS] {}  {}\n", c.anchor, c.instance));
                }
                Outcome::Fail { witness } => {
                    out.push_str(&format!("[FAIL] {}  {}  witness: {}\n", c.anchor, c.instance, witness));
                }
            }
        }
        out.push_str(&format!(
            "suite {}: {} checks, {} passed, {} failed\n",
            self.suite,
            self.checks.len(),
            self.passed(),
            self.failed()
        ));
        out
    }

    /// Line-oriented machine format: `anchor<TAB>instance<TAB>PASS|FAIL[<TAB>witness]`.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => out.push_str(&format!("{}\t{}\tPASS\n", c.anchor, c.instance)),
                Outcome::Fail { witness } => {
                    out.push_str(&format!("{}\t{}\tFAIL\t{}\n", c.anchor, c.instance, witness));
                }
            }
        }
        out
    }
}
