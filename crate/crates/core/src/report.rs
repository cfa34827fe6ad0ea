//! Identity identifiers and verification reports.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Laurent};

/// Every identity the verifier knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum IdentityId {
    /// `(2,2)`: matching polynomial of `G_n` equals `x_n * m_n`.
    Main22,
    /// `(2,2)`: `p_n p_{n-2} = p_{n-1}^2 + x1^(2n-6) x2^(2n-8)`.
    PRecur22,
    /// `(2,2)`: `p_{n+1} = (x1^2+x2^2+1) p_n - x1^2 x2^2 p_{n-1}`.
    Linear22,
    /// `(2,2)`: `q_{2n-3} q_{2n-7} = q_{2n-5}^2 - x1^(2n-6) x2^(2n-8)` on the grids.
    OddQ22,
    /// `(2,2)`: `G_n` disjoint union `H_3` against `p_{n+1} + x1^2 x2^2 p_{n-1}`.
    Disjoint22,
    /// `(1,4)`: matching polynomial of `G_n` equals `x_n * m_n`.
    Main14,
    Step1_14,
    Step2_14,
    TildeLinear,
    Mixed,
    Tildes,
    Keystep,
    ProdDiff,
    ThreeTerm,
    /// `(1,4)`: three-term recurrence of the tilde polynomials.
    Semi14,
    Reciprocity,
    Positivity,
    Periodicity,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::Main22,
        IdentityId::PRecur22,
        IdentityId::Linear22,
        IdentityId::OddQ22,
        IdentityId::Disjoint22,
        IdentityId::Main14,
        IdentityId::Step1_14,
        IdentityId::Step2_14,
        IdentityId::TildeLinear,
        IdentityId::Mixed,
        IdentityId::Tildes,
        IdentityId::Keystep,
        IdentityId::ProdDiff,
        IdentityId::ThreeTerm,
        IdentityId::Semi14,
        IdentityId::Reciprocity,
        IdentityId::Positivity,
        IdentityId::Periodicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Main22 => "MAIN_22",
            IdentityId::PRecur22 => "P_RECUR_22",
            IdentityId::Linear22 => "LINEAR_22",
            IdentityId::OddQ22 => "ODD_Q_22",
            IdentityId::Disjoint22 => "DISJOINT_22",
            IdentityId::Main14 => "MAIN_14",
            IdentityId::Step1_14 => "STEP1_14",
            IdentityId::Step2_14 => "STEP2_14",
            IdentityId::TildeLinear => "TILDE_LINEAR",
            IdentityId::Mixed => "MIXED",
            IdentityId::Tildes => "TILDES",
            IdentityId::Keystep => "KEYSTEP",
            IdentityId::ProdDiff => "PROD_DIFF",
            IdentityId::ThreeTerm => "THREE_TERM",
            IdentityId::Semi14 => "SEMI_14",
            IdentityId::Reciprocity => "RECIPROCITY",
            IdentityId::Positivity => "POSITIVITY",
            IdentityId::Periodicity => "PERIODICITY",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl From<IdentityId> for String {
    fn from(id: IdentityId) -> String {
        id.name().to_string()
    }
}

impl TryFrom<String> for IdentityId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Inclusive integer interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexRange {
    pub from: i64,
    pub to: i64,
}

impl IndexRange {
    pub const fn new(from: i64, to: i64) -> Self {
        IndexRange { from, to }
    }

    pub fn contains(self, n: i64) -> bool {
        self.from <= n && n <= self.to
    }

    pub fn iter(self) -> std::ops::RangeInclusive<i64> {
        self.from..=self.to
    }

    pub fn is_empty(self) -> bool {
        self.from > self.to
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.from, self.to)
    }
}

/// One failing index with both sides in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(n: i64, lhs: &Laurent, rhs: &Laurent) -> Self {
        Failure {
            n,
            case: None,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn with_case(mut self, case: impl Into<String>) -> Self {
        self.case = Some(case.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub range: IndexRange,
    /// Number of individual equations that were evaluated.
    pub checked: usize,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn new(identity: IdentityId, range: IndexRange) -> Self {
        VerificationReport {
            identity,
            case: None,
            range,
            checked: 0,
            passed: true,
            failures: Vec::new(),
        }
    }

    pub fn with_case(mut self, case: impl Into<String>) -> Self {
        self.case = Some(case.into());
        self
    }

    /// Records one checked equation `lhs == rhs` at index `n`.
    pub fn record(&mut self, n: i64, lhs: &Laurent, rhs: &Laurent) {
        self.checked += 1;
        if lhs != rhs {
            self.push_failure(Failure::new(n, lhs, rhs));
        }
    }

    pub fn push_failure(&mut self, failure: Failure) {
        self.failures.push(failure);
        self.passed = false;
    }

    /// `PASS`/`FAIL` line used by the CLI.
    pub fn summary_line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let case = self.case.as_deref().map(|c| format!(" {c}")).unwrap_or_default();
        format!(
            "{status} {}{case} n in {} ({} checked, {} failures)",
            self.identity,
            self.range,
            self.checked,
            self.failures.len()
        )
    }
}
