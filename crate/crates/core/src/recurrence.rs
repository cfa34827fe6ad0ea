//! The `(b,c)` exchange recurrence `x_n x_{n-2} = x_{n-1}^e + 1`, where
//! `e = b` for odd `n` and `e = c` for even `n`, extended to every integer.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::report::{Failure, IdentityId, IndexRange, VerificationReport};
use crate::{Error, Laurent, Result};

/// The pair of positive exchange exponents `(b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseParams {
    b: u32,
    c: u32,
}

impl CaseParams {
    pub const AFFINE_22: CaseParams = CaseParams { b: 2, c: 2 };
    pub const AFFINE_14: CaseParams = CaseParams { b: 1, c: 4 };

    pub fn new(b: u32, c: u32) -> Result<Self> {
        if b == 0 || c == 0 {
            return Err(Error::InvalidParams(format!(
                "exponents must be positive, got ({b},{c})"
            )));
        }
        Ok(CaseParams { b, c })
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn c(self) -> u32 {
        self.c
    }

    /// Exponent used by the relation whose largest index is `n`.
    pub fn exponent_at(self, n: i64) -> u32 {
        if n.rem_euclid(2) == 1 {
            self.b
        } else {
            self.c
        }
    }

    /// `(c, b)`.
    pub fn swapped(self) -> Self {
        CaseParams { b: self.c, c: self.b }
    }
}

impl fmt::Display for CaseParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.b, self.c)
    }
}

/// Memoized values `x_n` for one parameter pair. Values are filled
/// contiguously outward from the generators `x_1 = x1`, `x_2 = x2`.
#[derive(Clone, Debug)]
pub struct SequenceCache {
    params: CaseParams,
    values: BTreeMap<i64, Laurent>,
    lo: i64,
    hi: i64,
}

impl SequenceCache {
    pub fn new(params: CaseParams) -> Self {
        let mut values = BTreeMap::new();
        values.insert(1, Laurent::x1());
        values.insert(2, Laurent::x2());
        SequenceCache {
            params,
            values,
            lo: 1,
            hi: 2,
        }
    }

    pub fn params(&self) -> CaseParams {
        self.params
    }

    /// `x_n`, computing forward for `n >= 3` and backward for `n <= 0`.
    pub fn x_at(&mut self, n: i64) -> Result<&Laurent> {
        while self.hi < n {
            let m = self.hi + 1;
            let e = self.params.exponent_at(m);
            let next = (self.values[&(m - 1)].pow(e) + Laurent::one()).div_exact(&self.values[&(m - 2)])?;
            self.values.insert(m, next);
            self.hi = m;
        }
        while self.lo > n {
            // x_{m-2} = (x_{m-1}^e + 1) / x_m with m = lo + 1
            let m = self.lo + 1;
            let e = self.params.exponent_at(m);
            let next = (self.values[&(m - 1)].pow(e) + Laurent::one()).div_exact(&self.values[&m])?;
            self.values.insert(m - 2, next);
            self.lo = m - 2;
        }
        Ok(&self.values[&n])
    }

    pub fn eval_at_ones(&mut self, n: i64) -> Result<BigInt> {
        Ok(self.x_at(n)?.eval_at_ones())
    }

    /// Cached indices, ascending.
    pub fn cached_range(&self) -> IndexRange {
        IndexRange::new(self.lo, self.hi)
    }
}

/// Smallest `p <= horizon` with `x_{n+p} = x_n` for every `n`, compared as
/// Laurent polynomials. Two consecutive equal values force periodicity, so
/// the check covers `n` in `1..=p+2`.
pub fn detect_period(params: CaseParams, horizon: u32) -> Result<Option<u32>> {
    if horizon == 0 {
        return Err(Error::InvalidParams("horizon must be positive".into()));
    }
    let mut cache = SequenceCache::new(params);
    for p in 1..=horizon {
        let p64 = i64::from(p);
        if cache.x_at(1 + p64)? != &Laurent::x1() {
            continue;
        }
        let mut periodic = true;
        for n in 1..=p64 + 2 {
            if cache.x_at(n + p64)?.clone() != *cache.x_at(n)? {
                periodic = false;
                break;
            }
        }
        if periodic {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Checks `x_{-n}^{(b,c)}(x1,x2) = x_{n+3}^{(c,b)}(x2,x1)` for each `n`.
pub fn check_reciprocity(params: CaseParams, range: IndexRange) -> Result<VerificationReport> {
    let mut direct = SequenceCache::new(params);
    let mut mirrored = SequenceCache::new(params.swapped());
    let mut report = VerificationReport::new(IdentityId::Reciprocity, range).with_case(params.to_string());
    for n in range.iter() {
        let lhs = direct.x_at(-n)?.clone();
        let rhs = mirrored.x_at(n + 3)?.swap_vars();
        report.checked += 1;
        if lhs != rhs {
            report.push_failure(Failure::new(n, &lhs, &rhs).with_case(params.to_string()));
        }
    }
    Ok(report)
}
