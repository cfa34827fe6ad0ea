//! Exact verification of the matching-model identities over index ranges.
//!
//! Matching polynomials come from the graph builders and the matching engine;
//! cluster variables come from the recurrence. The main theorems compare the
//! two pipelines against each other.

use std::collections::BTreeMap;

use crate::closed_forms::{m14, m22};
use crate::graph::{build_g14, build_g22, build_h, build_tilde_g14, disjoint_union};
use crate::matching::match_polynomial;
use crate::recurrence::{check_reciprocity, detect_period};
use crate::report::{Failure, IdentityId, IndexRange, VerificationReport};
use crate::{CanonicalForm, CaseParams, Error, Laurent, Result, SequenceCache};

/// Horizon used by the periodicity check.
pub const PERIOD_HORIZON: u32 = 30;

/// Expected periods of the finite-type cases and the two affine cases.
pub const EXPECTED_PERIODS: [((u32, u32), Option<u32>); 7] = [
    ((1, 1), Some(5)),
    ((1, 2), Some(6)),
    ((2, 1), Some(6)),
    ((1, 3), Some(8)),
    ((3, 1), Some(8)),
    ((2, 2), None),
    ((1, 4), None),
];

/// Parameter pairs checked by the reciprocity identity.
pub const RECIPROCITY_CASES: [(u32, u32); 3] = [(2, 2), (1, 4), (4, 1)];

/// Caches shared by all identity checks.
pub struct Workbench {
    seq22: SequenceCache,
    seq14: SequenceCache,
    p22: BTreeMap<i64, Laurent>,
    grid: BTreeMap<u32, Laurent>,
    p14: BTreeMap<i64, Laurent>,
    tilde14: BTreeMap<i64, Laurent>,
}

impl Default for Workbench {
    fn default() -> Self {
        Workbench::new()
    }
}

fn cached(map: &mut BTreeMap<i64, Laurent>, n: i64, build: impl FnOnce() -> Result<Laurent>) -> Result<Laurent> {
    if let Some(v) = map.get(&n) {
        return Ok(v.clone());
    }
    let v = build()?;
    map.insert(n, v.clone());
    Ok(v)
}

fn mono(e1: i64, e2: i64) -> Laurent {
    Laurent::monomial(e1, e2)
}

/// `x1^4 + (x2 + 1)^2`.
fn key_factor() -> Laurent {
    Laurent::from_terms([
        (crate::ExponentVector::new(4, 0), 1),
        (crate::ExponentVector::new(0, 2), 1),
        (crate::ExponentVector::new(0, 1), 2),
        (crate::ExponentVector::new(0, 0), 1),
    ])
}

/// `x1^2 + x2^2 + 1`.
fn grid_factor() -> Laurent {
    Laurent::from_terms([
        (crate::ExponentVector::new(2, 0), 1),
        (crate::ExponentVector::new(0, 2), 1),
        (crate::ExponentVector::new(0, 0), 1),
    ])
}

impl Workbench {
    pub fn new() -> Self {
        Workbench {
            seq22: SequenceCache::new(CaseParams::AFFINE_22),
            seq14: SequenceCache::new(CaseParams::AFFINE_14),
            p22: BTreeMap::new(),
            grid: BTreeMap::new(),
            p14: BTreeMap::new(),
            tilde14: BTreeMap::new(),
        }
    }

    /// `(2,2)` cluster variable from the recurrence.
    pub fn x22(&mut self, n: i64) -> Result<Laurent> {
        Ok(self.seq22.x_at(n)?.clone())
    }

    /// `(1,4)` cluster variable from the recurrence.
    pub fn x14(&mut self, n: i64) -> Result<Laurent> {
        Ok(self.seq14.x_at(n)?.clone())
    }

    /// Matching polynomial of the `(2,2)` graph `G_n`.
    pub fn p22(&mut self, n: i64) -> Result<Laurent> {
        cached(&mut self.p22, n, || match_polynomial(&build_g22(n)?))
    }

    /// Matching polynomial of the grid `H_m`.
    pub fn q(&mut self, m: u32) -> Result<Laurent> {
        if let Some(v) = self.grid.get(&m) {
            return Ok(v.clone());
        }
        let v = match_polynomial(&build_h(m)?)?;
        self.grid.insert(m, v.clone());
        Ok(v)
    }

    /// Matching polynomial of the `(1,4)` graph `G_n`.
    pub fn p14(&mut self, n: i64) -> Result<Laurent> {
        cached(&mut self.p14, n, || match_polynomial(&build_g14(n)?))
    }

    /// Matching polynomial of the `(1,4)` tilde graph for odd `m`.
    pub fn tilde(&mut self, m: i64) -> Result<Laurent> {
        cached(&mut self.tilde14, m, || match_polynomial(&build_tilde_g14(m)?))
    }

    /// Checks `p_n = x_n * m_n` for every valid `n` in `range`.
    pub fn verify_main_theorem(&mut self, case: CaseParams, range: IndexRange) -> Result<VerificationReport> {
        let id = match (case.b(), case.c()) {
            (2, 2) => IdentityId::Main22,
            (1, 4) => IdentityId::Main14,
            (b, c) => return Err(Error::UnsupportedCase { b, c }),
        };
        self.verify_identity(id, range)
    }

    /// Both sides of identity `id` at index `n`, or `None` when `n` lies
    /// outside the identity's domain.
    pub fn sides(&mut self, id: IdentityId, n: i64) -> Result<Option<(Laurent, Laurent)>> {
        if !in_domain(id, n) {
            return Ok(None);
        }
        let s = key_factor();
        let pair = match id {
            IdentityId::Main22 => {
                let m = m22(n)?;
                (self.p22(n)?, self.x22(n)?.shift(m.e1(), m.e2()))
            }
            IdentityId::PRecur22 => (
                self.p22(n)? * self.p22(n - 2)?,
                self.p22(n - 1)?.pow(2) + mono(2 * n - 6, 2 * n - 8),
            ),
            IdentityId::Linear22 => (
                self.p22(n + 1)?,
                grid_factor() * self.p22(n)? - mono(2, 2) * self.p22(n - 1)?,
            ),
            IdentityId::OddQ22 => {
                let m = (2 * n - 7) as u32;
                (
                    self.q(m + 4)? * self.q(m)?,
                    self.q(m + 2)?.pow(2) - mono(2 * n - 6, 2 * n - 6),
                )
            }
            IdentityId::Disjoint22 => {
                let union = disjoint_union(&build_g22(n)?, &build_h(3)?);
                (
                    match_polynomial(&union)?,
                    self.p22(n + 1)? + mono(2, 2) * self.p22(n - 1)?,
                )
            }
            IdentityId::Main14 => {
                let m = m14(n)?;
                (self.p14(n)?, self.x14(n)?.shift(m.e1(), m.e2()))
            }
            IdentityId::Step1_14 => (
                self.p14(2 * n + 1)? * self.p14(2 * n + 3)?,
                self.p14(2 * n + 2)? + mono((4 * n + 2).abs() - 2, (2 * n).abs() - 1),
            ),
            IdentityId::Step2_14 => (
                self.p14(2 * n)? * self.p14(2 * n + 2)?,
                self.p14(2 * n + 1)?.pow(4) + mono((8 * n).abs() - 4, (4 * n - 2).abs() - 2),
            ),
            IdentityId::TildeLinear if n > 0 => (
                self.p14(2 * n + 1)?,
                Laurent::from_terms([(crate::ExponentVector::new(0, 1), 1), (crate::ExponentVector::ZERO, 1)])
                    * self.tilde(2 * n + 1)?
                    - mono(4, 1) * self.tilde(2 * n - 1)?,
            ),
            IdentityId::TildeLinear => (
                self.p14(2 * n + 1)?,
                "x1^4 + x2 + 1".parse::<Laurent>()? * self.tilde(2 * n + 3)? - mono(4, 2) * self.tilde(2 * n + 5)?,
            ),
            IdentityId::Mixed => {
                let lhs =
                    self.p14(2 * n - 1)? * self.tilde(2 * n + 1)? - self.p14(2 * n + 1)? * self.tilde(2 * n - 1)?;
                let rhs = if n > 0 {
                    mono(4 * n - 4, 2 * n - 3)
                } else {
                    -(mono(-4 * n, -2 * n + 1) * "x2 + 1".parse::<Laurent>()?)
                };
                (lhs, rhs)
            }
            IdentityId::Tildes => {
                let lhs = self.tilde(2 * n + 1)?.pow(2) - self.tilde(2 * n - 1)? * self.tilde(2 * n + 3)?;
                let rhs = if n > 0 {
                    mono(4 * n - 4, 2 * n - 2)
                } else {
                    mono(-4 * n, -2 * n)
                };
                (lhs, rhs)
            }
            IdentityId::Keystep => {
                let lhs =
                    self.tilde(2 * n + 1)? * self.tilde(2 * n - 1)? - self.tilde(2 * n - 3)? * self.tilde(2 * n + 3)?;
                let m = if n > 0 {
                    mono(4 * n - 8, 2 * n - 4)
                } else {
                    mono(-4 * n, -2 * n)
                };
                (lhs, m * s)
            }
            IdentityId::ProdDiff => {
                let lhs = self.p14(2 * n - 1)? * self.p14(2 * n + 3)? - self.p14(2 * n + 1)?.pow(2);
                let m = if n > 0 {
                    mono(4 * n - 4, 2 * n - 3)
                } else {
                    mono(-4 * n - 4, -2 * n - 1)
                };
                (lhs, m * s)
            }
            IdentityId::ThreeTerm if n > 0 => (
                self.p14(2 * n + 3)?,
                &s * &self.p14(2 * n + 1)? - mono(4, 2) * self.p14(2 * n - 1)?,
            ),
            IdentityId::ThreeTerm => (
                self.p14(2 * n - 1)?,
                &s * &self.p14(2 * n + 1)? - mono(4, 2) * self.p14(2 * n + 3)?,
            ),
            IdentityId::Semi14 => (
                self.tilde(2 * n + 3)?,
                self.tilde(2 * n + 1)? * self.tilde(5)? - mono(4, 2) * self.tilde(2 * n - 1)?,
            ),
            IdentityId::Reciprocity | IdentityId::Positivity | IdentityId::Periodicity => {
                return Err(Error::UnknownIdentity(format!("{id} has no single-index form")))
            }
        };
        Ok(Some(pair))
    }

    /// Runs `id` at every index of `range` inside its domain.
    pub fn verify_identity(&mut self, id: IdentityId, range: IndexRange) -> Result<VerificationReport> {
        match id {
            IdentityId::Reciprocity => return verify_reciprocity(range),
            IdentityId::Periodicity => return verify_periodicity(),
            IdentityId::Positivity => return self.verify_positivity(range),
            _ => {}
        }
        let mut report = VerificationReport::new(id, range);
        if let Some(case) = case_label(id) {
            report = report.with_case(case);
        }
        for n in range.iter() {
            if let Some((lhs, rhs)) = self.sides(id, n)? {
                report.record(n, &lhs, &rhs);
            }
        }
        Ok(report)
    }

    fn verify_positivity(&mut self, range: IndexRange) -> Result<VerificationReport> {
        let mut report = VerificationReport::new(IdentityId::Positivity, range);
        for n in range.iter() {
            for (label, x) in [("(2,2)", self.x22(n)?), ("(1,4)", self.x14(n)?)] {
                let num = CanonicalForm::from_laurent(&x).numerator;
                report.checked += 1;
                if !num.is_strictly_positive() {
                    report.push_failure(Failure {
                        n,
                        case: Some(label.into()),
                        lhs: num.to_string(),
                        rhs: "numerator with positive coefficients".into(),
                    });
                }
            }
        }
        Ok(report)
    }

    /// Every identity over its largest valid range inside `[-max, max]`.
    pub fn run_full_suite(&mut self, max_index: i64) -> Result<Vec<VerificationReport>> {
        if max_index < 5 {
            return Err(Error::InvalidParams(format!(
                "max index must be at least 5, got {max_index}"
            )));
        }
        let mut reports = Vec::new();
        for id in IdentityId::ALL {
            match id {
                IdentityId::Reciprocity => {
                    for (b, c) in RECIPROCITY_CASES {
                        reports.push(check_reciprocity(
                            CaseParams::new(b, c)?,
                            IndexRange::new(0, max_index),
                        )?);
                    }
                }
                IdentityId::Positivity => {
                    reports.push(self.verify_positivity(IndexRange::new(-max_index, max_index))?);
                }
                IdentityId::Periodicity => reports.push(verify_periodicity()?),
                _ => {
                    let range = suite_range(id, max_index);
                    let mut report = VerificationReport::new(id, range);
                    if let Some(case) = case_label(id) {
                        report = report.with_case(case);
                    }
                    for n in range.iter() {
                        if !fits(id, n, max_index) {
                            continue;
                        }
                        if let Some((lhs, rhs)) = self.sides(id, n)? {
                            report.record(n, &lhs, &rhs);
                        }
                    }
                    reports.push(report);
                }
            }
        }
        Ok(reports)
    }
}

fn case_label(id: IdentityId) -> Option<&'static str> {
    match id {
        IdentityId::Main22
        | IdentityId::PRecur22
        | IdentityId::Linear22
        | IdentityId::OddQ22
        | IdentityId::Disjoint22 => Some("(2,2)"),
        IdentityId::Reciprocity | IdentityId::Positivity | IdentityId::Periodicity => None,
        _ => Some("(1,4)"),
    }
}

/// Indices `n` at which identity `id` is stated and every polynomial it
/// mentions is defined.
pub fn in_domain(id: IdentityId, n: i64) -> bool {
    match id {
        IdentityId::Main22 => n >= 3,
        IdentityId::PRecur22 => n >= 5,
        IdentityId::Linear22 | IdentityId::OddQ22 | IdentityId::Disjoint22 => n >= 4,
        IdentityId::Main14 => !matches!(n, 1 | 2),
        IdentityId::Step1_14 => n >= 1 || n <= -2,
        IdentityId::Step2_14 => n >= 2 || n <= -1,
        IdentityId::TildeLinear => n >= 2 || n <= -3,
        IdentityId::Mixed | IdentityId::Tildes | IdentityId::ProdDiff | IdentityId::ThreeTerm => n >= 2 || n <= -2,
        IdentityId::Keystep => n >= 3 || n <= -2,
        IdentityId::Semi14 => n >= 2,
        IdentityId::Reciprocity | IdentityId::Positivity | IdentityId::Periodicity => true,
    }
}

/// Sequence indices mentioned by `id` at `n`: `(lowest, highest)`.
fn referenced_span(id: IdentityId, n: i64) -> (i64, i64) {
    match id {
        IdentityId::Main22 | IdentityId::Main14 | IdentityId::OddQ22 => (n, n),
        IdentityId::PRecur22 => (n - 2, n),
        IdentityId::Linear22 | IdentityId::Disjoint22 => (n - 1, n + 1),
        IdentityId::Step1_14 => (2 * n + 1, 2 * n + 3),
        IdentityId::Step2_14 => (2 * n, 2 * n + 2),
        IdentityId::TildeLinear if n > 0 => (2 * n - 1, 2 * n + 1),
        IdentityId::TildeLinear => (2 * n + 1, 2 * n + 5),
        IdentityId::Mixed => (2 * n - 1, 2 * n + 1),
        IdentityId::Tildes | IdentityId::ProdDiff | IdentityId::ThreeTerm => (2 * n - 1, 2 * n + 3),
        IdentityId::Keystep => (2 * n - 3, 2 * n + 3),
        IdentityId::Semi14 => (2 * n - 1, 2 * n + 3),
        IdentityId::Reciprocity | IdentityId::Positivity | IdentityId::Periodicity => (n, n),
    }
}

fn fits(id: IdentityId, n: i64, max_index: i64) -> bool {
    let (lo, hi) = referenced_span(id, n);
    in_domain(id, n) && lo >= -max_index && hi <= max_index
}

/// Smallest interval holding every `n` that fits in `[-max, max]`.
pub fn suite_range(id: IdentityId, max_index: i64) -> IndexRange {
    let valid: Vec<i64> = (-max_index..=max_index).filter(|&n| fits(id, n, max_index)).collect();
    match (valid.first(), valid.last()) {
        (Some(&lo), Some(&hi)) => IndexRange::new(lo, hi),
        _ => IndexRange::new(1, 0),
    }
}

fn verify_reciprocity(range: IndexRange) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(IdentityId::Reciprocity, range);
    for (b, c) in RECIPROCITY_CASES {
        let part = check_reciprocity(CaseParams::new(b, c)?, range)?;
        report.checked += part.checked;
        for f in part.failures {
            report.push_failure(f);
        }
    }
    Ok(report)
}

fn verify_periodicity() -> Result<VerificationReport> {
    let mut report = VerificationReport::new(IdentityId::Periodicity, IndexRange::new(1, i64::from(PERIOD_HORIZON)));
    for ((b, c), expected) in EXPECTED_PERIODS {
        let params = CaseParams::new(b, c)?;
        let found = detect_period(params, PERIOD_HORIZON)?;
        report.checked += 1;
        if found != expected {
            let show = |p: Option<u32>| p.map_or("none".to_string(), |p| p.to_string());
            report.push_failure(Failure {
                n: 0,
                case: Some(params.to_string()),
                lhs: show(found),
                rhs: show(expected),
            });
        }
    }
    Ok(report)
}

/// Convenience wrapper with a fresh workbench.
pub fn verify_identity(id: IdentityId, range: IndexRange) -> Result<VerificationReport> {
    Workbench::new().verify_identity(id, range)
}

/// Convenience wrapper with a fresh workbench.
pub fn verify_main_theorem(case: CaseParams, range: IndexRange) -> Result<VerificationReport> {
    Workbench::new().verify_main_theorem(case, range)
}

/// Convenience wrapper with a fresh workbench.
pub fn run_full_suite(max_index: i64) -> Result<Vec<VerificationReport>> {
    Workbench::new().run_full_suite(max_index)
}
