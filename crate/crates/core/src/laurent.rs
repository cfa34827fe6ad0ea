//! Two-variable Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! A [`Laurent`] is a sparse map from exponent vectors `(e1, e2)` to nonzero
//! [`BigInt`] coefficients. Zero coefficients are never stored, so structural
//! equality is mathematical equality.
//!
//! Text form: terms `c*x1^a*x2^b` in graded-lexicographic descending order
//! (total degree first, then the `x1` exponent), joined by ` + ` / ` - `.
//! JSON form: an array of `[e1, e2, "coefficient"]` triples in the same order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Exponents of `x1` and `x2` in a Laurent monomial; either may be negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct ExponentVector {
    pub e1: i64,
    pub e2: i64,
}

impl ExponentVector {
    pub const ZERO: ExponentVector = ExponentVector { e1: 0, e2: 0 };

    pub const fn new(e1: i64, e2: i64) -> Self {
        ExponentVector { e1, e2 }
    }

    pub fn degree(self) -> i64 {
        self.e1 + self.e2
    }

    /// Graded-lex descending: larger total degree first, ties broken by the
    /// larger `x1` exponent.
    pub fn graded_desc(a: &Self, b: &Self) -> Ordering {
        b.degree().cmp(&a.degree()).then(b.e1.cmp(&a.e1))
    }
}

impl Add for ExponentVector {
    type Output = ExponentVector;
    fn add(self, rhs: Self) -> Self {
        ExponentVector::new(self.e1 + rhs.e1, self.e2 + rhs.e2)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Laurent::term(c, 0, 0)
    }

    pub fn x1() -> Self {
        Laurent::monomial(1, 0)
    }

    pub fn x2() -> Self {
        Laurent::monomial(0, 1)
    }

    /// `x1^e1 * x2^e2`.
    pub fn monomial(e1: i64, e2: i64) -> Self {
        Laurent::term(1, e1, e2)
    }

    /// `c * x1^e1 * x2^e2`.
    pub fn term(c: impl Into<BigInt>, e1: i64, e2: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ExponentVector::new(e1, e2), c);
        }
        Laurent { terms }
    }

    /// Sums the given terms; repeated exponents are combined.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
        C: Into<BigInt>,
    {
        let mut out = Laurent::zero();
        for (e, c) in iter {
            out.add_term(e, &c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ExponentVector::ZERO).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> BigInt {
        self.terms
            .get(&ExponentVector::new(e1, e2))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in storage (lexicographic ascending) order.
    pub fn terms(&self) -> impl Iterator<Item = (ExponentVector, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Terms in canonical (graded-lex descending) order.
    pub fn canonical_terms(&self) -> Vec<(ExponentVector, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| ExponentVector::graded_desc(&a.0, &b.0));
        v
    }

    /// Componentwise minimum exponent over all terms, `None` for zero.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        self.terms
            .keys()
            .copied()
            .reduce(|a, b| ExponentVector::new(a.e1.min(b.e1), a.e2.min(b.e2)))
    }

    pub fn max_exponents(&self) -> Option<ExponentVector> {
        self.terms
            .keys()
            .copied()
            .reduce(|a, b| ExponentVector::new(a.e1.max(b.e1), a.e2.max(b.e2)))
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.e1 >= 0 && e.e2 >= 0)
    }

    fn add_term(&mut self, e: ExponentVector, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += other * x1^e1 * x2^e2`, in place.
    pub fn add_shifted(&mut self, other: &Laurent, e1: i64, e2: i64) {
        let shift = ExponentVector::new(e1, e2);
        for (e, c) in &other.terms {
            self.add_term(*e + shift, c);
        }
    }

    /// Multiplies by the monomial `x1^e1 * x2^e2`.
    pub fn shift(&self, e1: i64, e2: i64) -> Laurent {
        let shift = ExponentVector::new(e1, e2);
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Laurent {
        if k.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Laurent {
        let mut result = Laurent::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted by monomials to ordinary polynomials with no
    /// monomial content, then divided as polynomials in `x1` over `Z[x2]`.
    /// Any nonzero remainder is reported as [`Error::NotDivisible`].
    pub fn div_exact(&self, divisor: &Laurent) -> Result<Laurent> {
        let (Some(dmin), Some(_)) = (divisor.min_exponents(), divisor.max_exponents()) else {
            return Err(Error::DivisionByZero);
        };
        let Some(nmin) = self.min_exponents() else {
            return Ok(Laurent::zero());
        };
        let num = to_dense(&self.shift(-nmin.e1, -nmin.e2));
        let den = to_dense(&divisor.shift(-dmin.e1, -dmin.e2));
        let q = dense_div(num, &den)?;
        Ok(from_dense(&q).shift(nmin.e1 - dmin.e1, nmin.e2 - dmin.e2))
    }

    /// Evaluates at integer values. A negative exponent is only allowed on a
    /// variable whose value is a unit (`1` or `-1`).
    pub fn eval(&self, v1: &BigInt, v2: &BigInt) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let f1 = power_at(1, v1, e.e1)?;
            let f2 = power_at(2, v2, e.e2)?;
            acc += c * f1 * f2;
        }
        Ok(acc)
    }

    /// Value at `x1 = x2 = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exchanges the roles of `x1` and `x2`.
    pub fn swap_vars(&self) -> Laurent {
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (ExponentVector::new(e.e2, e.e1), c.clone()))
                .collect(),
        }
    }

    /// Nonzero with every coefficient positive.
    pub fn is_strictly_positive(&self) -> bool {
        !self.is_zero() && self.terms.values().all(|c| c.is_positive())
    }

    /// JSON triples `[e1, e2, "coefficient"]` in canonical order.
    pub fn to_json_triples(&self) -> Vec<(i64, i64, String)> {
        self.canonical_terms()
            .into_iter()
            .map(|(e, c)| (e.e1, e.e2, c.to_string()))
            .collect()
    }

    pub fn from_json_triples(triples: &[(i64, i64, String)]) -> Result<Laurent> {
        let mut out = Laurent::zero();
        for (e1, e2, c) in triples {
            let c: BigInt = c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))?;
            out.add_term(ExponentVector::new(*e1, *e2), &c);
        }
        Ok(out)
    }
}

fn power_at(var: u8, v: &BigInt, e: i64) -> Result<BigInt> {
    if e >= 0 {
        return Ok(num_traits::pow(v.clone(), e as usize));
    }
    if v.abs().is_one() {
        return Ok(num_traits::pow(v.clone(), e.unsigned_abs() as usize));
    }
    Err(Error::NonUnitAtNegativeExponent {
        var,
        exponent: e,
        value: v.to_string(),
    })
}

// Dense representation used by exact division: rows indexed by the x1 exponent,
// each row a dense coefficient vector in x2. Inputs have nonnegative exponents.
type Dense = Vec<Vec<BigInt>>;

fn to_dense(p: &Laurent) -> Dense {
    let Some(max) = p.max_exponents() else {
        return Vec::new();
    };
    let mut rows = vec![vec![BigInt::zero(); max.e2 as usize + 1]; max.e1 as usize + 1];
    for (e, c) in p.terms() {
        rows[e.e1 as usize][e.e2 as usize] = c.clone();
    }
    rows.iter_mut().for_each(trim);
    rows
}

fn from_dense(rows: &Dense) -> Laurent {
    let mut out = Laurent::zero();
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            out.add_term(ExponentVector::new(i as i64, j as i64), c);
        }
    }
    out
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// `target -= a * b` for dense univariate polynomials.
fn mul_sub_assign(target: &mut Vec<BigInt>, a: &[BigInt], b: &[BigInt]) {
    if a.is_empty() || b.is_empty() {
        return;
    }
    let need = a.len() + b.len() - 1;
    if target.len() < need {
        target.resize(need, BigInt::zero());
    }
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            target[i + j] -= ai * bj;
        }
    }
    trim(target);
}

/// Exact division of dense univariate integer polynomials.
fn uni_div(a: &[BigInt], b: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Ok(Vec::new());
    }
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Err(Error::NotDivisible);
    }
    let lead = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let top = &r[i + db];
        if top.is_zero() {
            continue;
        }
        let (qq, rr) = top.div_rem(lead);
        if !rr.is_zero() {
            return Err(Error::NotDivisible);
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &qq * bj;
        }
        q[i] = qq;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return Err(Error::NotDivisible);
    }
    trim(&mut q);
    Ok(q)
}

/// Exact division in `Z[x2][x1]`.
fn dense_div(mut rem: Dense, den: &Dense) -> Result<Dense> {
    if rem.is_empty() {
        return Ok(Vec::new());
    }
    let db = den.len() - 1;
    if rem.len() < den.len() {
        return Err(Error::NotDivisible);
    }
    let lead = &den[db];
    let mut q: Dense = vec![Vec::new(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        trim(&mut rem[i]);
        if rem[i].is_empty() {
            continue;
        }
        let c = uni_div(&rem[i], lead)?;
        for (j, dj) in den.iter().enumerate() {
            mul_sub_assign(&mut rem[i - db + j], &c, dj);
        }
        q[i - db] = c;
    }
    if rem.iter().any(|row| row.iter().any(|c| !c.is_zero())) {
        return Err(Error::NotDivisible);
    }
    Ok(q)
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea + *eb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        -&self
    }
}

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, rhs: &Laurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, rhs: &Laurent) -> Laurent {
                (&self).$m(rhs)
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $m(self, rhs: Laurent) -> Laurent {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::constant(c)
    }
}

impl From<Monomial> for Laurent {
    fn from(m: Monomial) -> Self {
        m.to_laurent()
    }
}

fn write_vars(f: &mut impl fmt::Write, e: ExponentVector) -> fmt::Result {
    let mut first = true;
    for (name, k) in [("x1", e.e1), ("x2", e.e2)] {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if k == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{k}")?;
        }
    }
    Ok(())
}

/// Writes `|c|*x1^a*x2^b` with unit coefficients suppressed.
fn write_unsigned_term(f: &mut impl fmt::Write, e: ExponentVector, c: &BigInt) -> fmt::Result {
    let mag = c.abs();
    if e == ExponentVector::ZERO {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write_vars(f, e)
    } else {
        write!(f, "{mag}*")?;
        write_vars(f, e)
    }
}

/// Joins terms in the given order with ` + ` / ` - `.
fn write_terms<'a>(
    f: &mut impl fmt::Write,
    terms: impl IntoIterator<Item = (ExponentVector, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        match (first, c.is_negative()) {
            (true, true) => f.write_char('-')?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        write_unsigned_term(f, e, c)?;
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.canonical_terms())
    }
}

impl FromStr for Laurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn parse(mut self) -> Result<Laurent> {
        let mut out = Laurent::zero();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            Some(_) => 1,
            None => return Err(self.err("empty input")),
        };
        loop {
            let (e, c) = self.term()?;
            out.add_term(e, &(c * sign));
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.pos += 1;
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(ExponentVector, BigInt)> {
        let mut coeff = BigInt::one();
        let mut e = ExponentVector::ZERO;
        let mut expect_factor = true;
        let mut seen_any = false;
        while expect_factor {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let d = self.digits().expect("digit present");
                    coeff *= d.parse::<BigInt>().map_err(|_| self.err("bad integer"))?;
                }
                Some(b'x') => {
                    self.pos += 1;
                    let var = match self.bytes.get(self.pos) {
                        Some(b'1') => 1,
                        Some(b'2') => 2,
                        _ => return Err(self.err("expected x1 or x2")),
                    };
                    self.pos += 1;
                    let mut k = 1i64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let neg = self.peek() == Some(b'-');
                        if neg {
                            self.pos += 1;
                        }
                        self.skip_ws();
                        let d = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                        k = d.parse().map_err(|_| self.err("exponent out of range"))?;
                        if neg {
                            k = -k;
                        }
                    }
                    if var == 1 {
                        e.e1 += k;
                    } else {
                        e.e2 += k;
                    }
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            seen_any = true;
            expect_factor = self.peek() == Some(b'*');
            if expect_factor {
                self.pos += 1;
            }
        }
        debug_assert!(seen_any);
        Ok((e, coeff))
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_triples().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<(i64, i64, String)>::deserialize(deserializer)?;
        Laurent::from_json_triples(&triples).map_err(D::Error::custom)
    }
}

/// A unit-coefficient single-term Laurent polynomial `x1^e1 * x2^e2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Monomial(pub ExponentVector);

impl Monomial {
    pub const ONE: Monomial = Monomial(ExponentVector::ZERO);

    pub const fn new(e1: i64, e2: i64) -> Self {
        Monomial(ExponentVector::new(e1, e2))
    }

    pub fn e1(self) -> i64 {
        self.0.e1
    }

    pub fn e2(self) -> i64 {
        self.0.e2
    }

    pub fn to_laurent(self) -> Laurent {
        Laurent::monomial(self.0.e1, self.0.e2)
    }

    /// Recovers a monomial from a polynomial that is exactly one unit term.
    pub fn from_laurent(p: &Laurent) -> Option<Monomial> {
        match p.canonical_terms().as_slice() {
            [(e, c)] if c.is_one() => Some(Monomial(*e)),
            _ => None,
        }
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial(self.0 + rhs.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == ExponentVector::ZERO {
            f.write_char('1')
        } else {
            write_vars(f, self.0)
        }
    }
}

/// A Laurent polynomial written as a polynomial numerator over the smallest
/// monomial denominator that clears every negative exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub numerator: Laurent,
    pub denominator: Monomial,
}

impl CanonicalForm {
    pub fn from_laurent(p: &Laurent) -> Self {
        let min = p.min_exponents().unwrap_or_default();
        let d = Monomial::new((-min.e1).max(0), (-min.e2).max(0));
        CanonicalForm {
            numerator: p.shift(d.e1(), d.e2()),
            denominator: d,
        }
    }

    pub fn to_laurent(&self) -> Laurent {
        self.numerator.shift(-self.denominator.e1(), -self.denominator.e2())
    }

    /// Table-style numerator text.
    ///
    /// When the `x1`-free part of the numerator is `(x2^e+1)^k` it is written
    /// as that power, followed by the remaining terms ordered by ascending
    /// `x1` exponent and then ascending `x2` exponent.
    pub fn numerator_text(&self) -> String {
        let num = &self.numerator;
        let x1_free = Laurent::from_terms(num.terms().filter(|(e, _)| e.e1 == 0).map(|(e, c)| (e, c.clone())));
        let mut out = String::new();
        let mut rest: Vec<(ExponentVector, &BigInt)> = num.terms().collect();
        if let Some((e, k)) = binomial_block(&x1_free) {
            let base = if e == 1 {
                "x2+1".to_string()
            } else {
                format!("x2^{e}+1")
            };
            if k == 1 {
                write!(out, "({base})").unwrap();
            } else {
                write!(out, "({base})^{k}").unwrap();
            }
            rest.retain(|(t, _)| t.e1 != 0);
            rest.sort_by_key(|(t, _)| (t.e1, t.e2));
            for (t, c) in rest {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                write_unsigned_term(&mut out, t, c).unwrap();
            }
            return out;
        }
        rest.sort_by_key(|(t, _)| (t.e1, t.e2));
        write_terms(&mut out, rest).unwrap();
        out
    }
}

/// Detects `p == (x2^e + 1)^k` with `e, k >= 1`.
fn binomial_block(p: &Laurent) -> Option<(i64, u32)> {
    if !p.is_polynomial() || p.len() < 2 {
        return None;
    }
    let e = p.terms().map(|(t, _)| t.e2).filter(|&d| d > 0).min()?;
    let deg = p.max_exponents()?.e2;
    if deg % e != 0 {
        return None;
    }
    let k = u32::try_from(deg / e).ok()?;
    (Laurent::from_terms([(ExponentVector::new(0, e), 1), (ExponentVector::ZERO, 1)]).pow(k) == *p).then_some((e, k))
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator_text();
        let compound = num.contains(" + ") || num.contains(" - ");
        if self.denominator == Monomial::ONE {
            return f.write_str(&num);
        }
        if compound {
            write!(f, "({num})")?;
        } else {
            f.write_str(&num)?;
        }
        let den = self.denominator.to_string();
        if den.contains('*') {
            write!(f, " / ({den})")
        } else {
            write!(f, " / {den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn binomial_square() {
        let a = p("x2 + 1");
        assert_eq!(&a * &a, p("x2^2 + 2*x2 + 1"));
    }

    #[test]
    fn additive_identity() {
        let a = p("3*x1^2*x2^-1 - x2 + 7");
        assert_eq!(&a + &Laurent::zero(), a);
    }

    #[test]
    fn monomial_cancellation() {
        let a = p("x2^2*x1^-1 + x1^-1");
        assert_eq!(&a * &Laurent::x1(), p("x2^2 + 1"));
    }

    #[test]
    fn powers() {
        assert_eq!(p("x2 + 1").pow(4), p("x2^4 + 4*x2^3 + 6*x2^2 + 4*x2 + 1"));
        assert_eq!(p("5*x1^3 - x2").pow(0), Laurent::one());
        assert_eq!(p("x1^-1").pow(3), p("x1^-3"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x1^2*x2 + x1^2").div_exact(&p("x1^2")).unwrap(), p("x2 + 1"));
        let b = p("x2 + 1");
        let a = &b.pow(4) + &(&Laurent::monomial(4, 0) * &b);
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, &b.pow(3) + &Laurent::monomial(4, 0));
        assert_eq!(&q * &b, a);
        // monomials are units, so this is exact
        assert_eq!(p("x2 + 1").div_exact(&Laurent::x2()).unwrap(), p("1 + x2^-1"));
        assert_eq!(p("x2 + 1").div_exact(&p("x2 + 2")), Err(Error::NotDivisible));
        assert_eq!(p("x1^2 + 1").div_exact(&p("x1 + 1")), Err(Error::NotDivisible));
        assert_eq!(Laurent::one().div_exact(&Laurent::zero()), Err(Error::DivisionByZero));
        assert_eq!(Laurent::zero().div_exact(&b).unwrap(), Laurent::zero());
    }

    #[test]
    fn division_with_negative_exponents() {
        let b = p("x1^-1*x2 + x2^-2");
        let q = p("3*x1^2 - x1*x2^-1 + 1");
        assert_eq!((&q * &b).div_exact(&b).unwrap(), q);
        // content-only divisor with nothing in common
        assert_eq!(p("x2").div_exact(&p("x1*x2")).unwrap(), p("x1^-1"));
    }

    #[test]
    fn non_monic_leading_coefficient() {
        let b = p("2*x1 + 3*x2");
        let q = p("x1^2 - 5*x2 + 4");
        assert_eq!((&q * &b).div_exact(&b).unwrap(), q);
        assert_eq!(p("x1 + 1").div_exact(&p("2*x1 + 2")), Err(Error::NotDivisible));
    }

    #[test]
    fn evaluation() {
        let one = BigInt::one();
        assert_eq!(p("x2^4 + 2*x2^2 + 1 + x1^2").eval(&one, &one).unwrap(), BigInt::from(5));
        assert_eq!(Laurent::one().eval(&one, &one).unwrap(), one);
        assert_eq!(p("x1^4 + 1").eval_at_ones(), BigInt::from(2));
        let two = BigInt::from(2);
        assert_eq!(p("x1^3 + x2").eval(&two, &BigInt::from(-1)).unwrap(), BigInt::from(7));
        assert_eq!(
            p("x1^-1*x2^-3").eval(&BigInt::from(-1), &BigInt::from(-1)).unwrap(),
            one
        );
        assert!(matches!(
            p("x1^-1").eval(&two, &one),
            Err(Error::NonUnitAtNegativeExponent { var: 1, .. })
        ));
    }

    #[test]
    fn swapping() {
        assert_eq!(p("x1^2*x2^-1").swap_vars(), p("x2^2*x1^-1"));
        assert_eq!(p("x1 + x2").swap_vars(), p("x1 + x2"));
        let a = p("3*x1^5*x2 - x2^-4 + 2");
        assert_eq!(a.swap_vars().swap_vars(), a);
    }

    #[test]
    fn positivity() {
        assert!(p("x2^4 + 2*x2^2 + 1 + x1^2").is_strictly_positive());
        assert!(!p("x1 - x2").is_strictly_positive());
        assert!(!Laurent::zero().is_strictly_positive());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p("1 + x2 + x1").to_string(), "x1 + x2 + 1");
        assert_eq!(p("x1^-1*x2^3 - 4*x1^2").to_string(), "-4*x1^2 + x1^-1*x2^3");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("x1 * x1 * 2 * x2^-2").to_string(), "2*x1^2*x2^-2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("".parse::<Laurent>(), Err(Error::Parse(_))));
        assert!(matches!("x3".parse::<Laurent>(), Err(Error::Parse(_))));
        assert!(matches!("x1 +".parse::<Laurent>(), Err(Error::Parse(_))));
        assert!(matches!("x1 x2".parse::<Laurent>(), Err(Error::Parse(_))));
        assert!(matches!("x1^".parse::<Laurent>(), Err(Error::Parse(_))));
    }

    #[test]
    fn json_triples() {
        let a = p("x1^2 - 3*x2^-1 + 12345678901234567890123");
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(
            v,
            serde_json::json!([[2, 0, "1"], [0, 0, "12345678901234567890123"], [0, -1, "-3"]])
        );
        let back: Laurent = serde_json::from_value(v).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn canonical_form_text() {
        let x7 = p("x1^-5*x2^-2") * (p("x2 + 1").pow(5) + p("2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8"));
        let cf = CanonicalForm::from_laurent(&x7);
        assert_eq!(cf.denominator, Monomial::new(5, 2));
        assert_eq!(
            cf.to_string(),
            "((x2+1)^5 + 2*x1^4 + 5*x1^4*x2 + 3*x1^4*x2^2 + x1^8) / (x1^5*x2^2)"
        );
        assert_eq!(cf.to_laurent(), x7);
        assert_eq!(
            CanonicalForm::from_laurent(&p("x2*x1^-1 + x1^-1")).to_string(),
            "(x2+1) / x1"
        );
        assert_eq!(
            CanonicalForm::from_laurent(&p("x2^3*x1^-2 + 2*x2*x1^-2 + x1^-2*x2^-1 + x2^-1")).to_string(),
            "((x2^2+1)^2 + x1^2) / (x1^2*x2)"
        );
        assert_eq!(CanonicalForm::from_laurent(&Laurent::x1()).to_string(), "x1");
        assert_eq!(
            CanonicalForm::from_laurent(&p("x1^4*x2^-1 + x2^-1")).to_string(),
            "(1 + x1^4) / x2"
        );
    }
}
