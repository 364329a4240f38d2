use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    TrivialAut,
    UnitsConnected,
    MConnected,
    TypeFormulas,
    Involution,
    FieldExt,
    ResidueRemark,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::TrivialAut,
        TheoremId::UnitsConnected,
        TheoremId::MConnected,
        TheoremId::TypeFormulas,
        TheoremId::Involution,
        TheoremId::FieldExt,
        TheoremId::ResidueRemark,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::TrivialAut => "trivial-aut",
            TheoremId::UnitsConnected => "units-connected",
            TheoremId::MConnected => "m-connected",
            TheoremId::TypeFormulas => "type-formulas",
            TheoremId::Involution => "involution",
            TheoremId::FieldExt => "field-ext",
            TheoremId::ResidueRemark => "residue-remark",
        }
    }

    /// Whether the check runs over a catalog (as opposed to fixed samples).
    pub fn uses_catalog(self) -> bool {
        !matches!(self, TheoremId::TypeFormulas | TheoremId::FieldExt)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem id `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub expr: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub universe: String,
    pub checked: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
    /// Observations outside the claim (recorded, not asserted).
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub(crate) fn new(theorem: impl Into<String>, universe: impl Into<String>) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            universe: universe.into(),
            checked: 0,
            passed: true,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, ok: bool, expr: impl fmt::Display, detail: impl Into<String>) {
        self.checked += 1;
        if !ok {
            self.counterexamples.push(Counterexample {
                expr: expr.to_string(),
                detail: detail.into(),
            });
            self.passed = false;
        }
    }

    /// Folds another report's counts and findings into this one.
    pub(crate) fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.passed &= other.passed;
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] over {}: {} checked",
            self.theorem,
            if self.passed { "PASS" } else { "FAIL" },
            self.universe,
            self.checked
        )?;
        for c in &self.counterexamples {
            write!(f, "\n  counterexample {}: {}", c.expr, c.detail)?;
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}
