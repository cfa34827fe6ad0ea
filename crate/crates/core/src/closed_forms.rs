//! Denominators, the explicit `(2,2)` binomial formula, subset counts and the
//! Chebyshev-type elements `s_n`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{CaseParams, Error, ExponentVector, Laurent, Monomial, Result};

/// `C(n, k)`, zero whenever `k < 0`, `n < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(2,2)` denominator `x1^(n-2) x2^(n-3)`, `n >= 3`.
pub fn m22(n: i64) -> Result<Monomial> {
    if n < 3 {
        return Err(Error::IndexOutOfFamily {
            family: "(2,2)",
            index: n,
        });
    }
    Ok(Monomial::new(n - 2, n - 3))
}

/// Square and octagon counts of the `(1,4)` graph `G_n`, which are also the
/// exponents of `x1` and `x2` in its denominator.
pub fn sq_oct(n: i64) -> Result<(i64, i64)> {
    if matches!(n, 1 | 2) {
        return Err(Error::IndexOutOfFamily {
            family: "(1,4)",
            index: n,
        });
    }
    if n % 2 != 0 {
        // |n/2 - 1| - 1/2 = (|n - 2| - 1) / 2, exact for odd n
        Ok(((n - 1).abs() - 1, ((n - 2).abs() - 1) / 2))
    } else {
        Ok(((2 * n - 2).abs() - 2, (n - 2).abs() - 1))
    }
}

/// `(1,4)` denominator monomial `x1^sq(n) x2^oct(n)`.
pub fn m14(n: i64) -> Result<Monomial> {
    let (sq, oct) = sq_oct(n)?;
    Ok(Monomial::new(sq, oct))
}

/// `(2,2)` cluster variable `x_index` from the binomial closed form.
///
/// For `index = n + 3 >= 3`:
/// `(x2^(2n+2) + sum_{q+r<=n} C(n-r,q) C(n+1-q,r) x1^(2q) x2^(2r)) / (x1^(n+1) x2^n)`;
/// for `index = -n <= 0`:
/// `(x1^(2n+2) + sum_{q+r<=n} C(n+1-r,q) C(n-q,r) x1^(2q) x2^(2r)) / (x1^n x2^(n+1))`.
pub fn explicit_x22(index: i64) -> Result<Laurent> {
    let (n, positive) = match index {
        1 | 2 => return Err(Error::IndexOutOfFamily { family: "(2,2)", index }),
        i if i >= 3 => (i - 3, true),
        i => (-i, false),
    };
    let mut terms = Vec::new();
    for q in 0..=n {
        for r in 0..=n - q {
            let c = if positive {
                binomial(n - r, q) * binomial(n + 1 - q, r)
            } else {
                binomial(n + 1 - r, q) * binomial(n - q, r)
            };
            terms.push((ExponentVector::new(2 * q, 2 * r), c));
        }
    }
    let (lead, den) = if positive {
        (ExponentVector::new(0, 2 * n + 2), (n + 1, n))
    } else {
        (ExponentVector::new(2 * n + 2, 0), (n, n + 1))
    };
    terms.push((lead, BigInt::one()));
    Ok(Laurent::from_terms(terms).shift(-den.0, -den.1))
}

/// Subsets of `{1..ground}` with `odd` odd elements, `even` even elements and
/// no two consecutive elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubsetCountQuery {
    pub ground: u32,
    pub odd: u32,
    pub even: u32,
}

impl SubsetCountQuery {
    pub fn new(ground: u32, odd: u32, even: u32) -> Self {
        SubsetCountQuery { ground, odd, even }
    }
}

/// `C(n+1-r, q) C(n-q, r)` for `N = 2n+1`, `C(n-r, q) C(n-q, r)` for `N = 2n`.
///
/// The binomial product covers `q + r <= n`. For odd `N` the set of all odd
/// elements (`q = n + 1`, `r = 0`) lies outside that range and counts once.
pub fn subset_count_formula(qy: SubsetCountQuery) -> BigInt {
    let n = i64::from(qy.ground / 2);
    let (q, r) = (i64::from(qy.odd), i64::from(qy.even));
    if qy.ground % 2 == 1 && q == n + 1 && r == 0 {
        return BigInt::one();
    }
    if qy.ground % 2 == 1 {
        binomial(n + 1 - r, q) * binomial(n - q, r)
    } else {
        binomial(n - r, q) * binomial(n - q, r)
    }
}

/// Largest ground set accepted by the exhaustive counters.
pub const MAX_BRUTEFORCE_GROUND: u32 = 24;

/// Counts for every `(odd, even)` pair by enumerating all `2^N` subsets;
/// entry `[q][r]` holds the number of qualifying subsets.
pub fn subset_count_table(ground: u32) -> Result<Vec<Vec<u64>>> {
    if ground > MAX_BRUTEFORCE_GROUND {
        return Err(Error::GroundSetTooLarge(ground));
    }
    let size = ground as usize + 1;
    let mut table = vec![vec![0u64; size]; size];
    // bit i stands for element i + 1, so even bit positions are odd elements
    let odd_bits: u32 = (0..ground).step_by(2).fold(0, |m, i| m | 1 << i);
    for mask in 0u32..(1u32 << ground) {
        if mask & (mask >> 1) != 0 {
            continue;
        }
        let q = (mask & odd_bits).count_ones() as usize;
        let r = (mask & !odd_bits).count_ones() as usize;
        table[q][r] += 1;
    }
    Ok(table)
}

pub fn subset_count_bruteforce(qy: SubsetCountQuery) -> Result<BigInt> {
    let table = subset_count_table(qy.ground)?;
    let get = |q: u32, r: u32| table.get(q as usize).and_then(|row| row.get(r as usize)).copied();
    Ok(BigInt::from(get(qy.odd, qy.even).unwrap_or(0)))
}

/// `s_n` with `s_0 = 1`, `s_1 = z` and `s_n = z s_{n-1} - s_{n-2}`, where
/// `z = (x1^2 + x2^2 + 1) / (x1 x2)` for `(2,2)` and
/// `z = (x1^4 + (x2 + 1)^2) / (x1^2 x2)` for `(1,4)`.
pub fn chebyshev_s(case: CaseParams, n: u32) -> Result<Laurent> {
    let z: Laurent = match (case.b(), case.c()) {
        (2, 2) => "x1 * x2^-1 + x1^-1 * x2 + x1^-1 * x2^-1".parse()?,
        (1, 4) => "x1^2 * x2^-1 + x1^-2 * x2 + 2 * x1^-2 + x1^-2 * x2^-1".parse()?,
        (b, c) => return Err(Error::UnsupportedCase { b, c }),
    };
    let (mut prev, mut cur) = (Laurent::one(), z.clone());
    if n == 0 {
        return Ok(prev);
    }
    for _ in 1..n {
        let next = &z * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Laurent {
        s.parse().unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn denominators() {
        assert_eq!(m22(4).unwrap(), Monomial::new(2, 1));
        assert_eq!(m22(3).unwrap(), Monomial::new(1, 0));
        assert_eq!(m22(5).unwrap(), Monomial::new(3, 2));
        assert!(m22(2).is_err());
        assert_eq!(sq_oct(7).unwrap(), (5, 2));
        assert_eq!(sq_oct(-2).unwrap(), (4, 3));
        assert_eq!(sq_oct(6).unwrap(), (8, 3));
        assert_eq!(sq_oct(0).unwrap(), (0, 1));
        assert_eq!(sq_oct(3).unwrap(), (1, 0));
        assert!(sq_oct(1).is_err() && sq_oct(2).is_err());
    }

    #[test]
    fn explicit_small_indices() {
        assert_eq!(explicit_x22(3).unwrap(), p("x2^2 + 1").shift(-1, 0));
        assert_eq!(explicit_x22(0).unwrap(), p("x1^2 + 1").shift(0, -1));
        assert_eq!(explicit_x22(4).unwrap(), p("x2^4 + 2*x2^2 + 1 + x1^2").shift(-2, -1));
        assert!(explicit_x22(2).is_err());
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subset_count_formula(SubsetCountQuery::new(5, 1, 1)), BigInt::from(2));
        assert_eq!(
            subset_count_bruteforce(SubsetCountQuery::new(5, 1, 1)).unwrap(),
            BigInt::from(2)
        );
        assert_eq!(
            subset_count_bruteforce(SubsetCountQuery::new(3, 2, 0)).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            subset_count_bruteforce(SubsetCountQuery::new(2, 1, 1)).unwrap(),
            BigInt::zero()
        );
        for n in 0..6u32 {
            assert_eq!(subset_count_formula(SubsetCountQuery::new(2 * n, 0, 0)), BigInt::one());
            assert_eq!(
                subset_count_formula(SubsetCountQuery::new(2 * n + 1, n + 1, 0)),
                BigInt::one()
            );
        }
        assert_eq!(
            subset_count_bruteforce(SubsetCountQuery::new(25, 0, 0)),
            Err(Error::GroundSetTooLarge(25))
        );
    }

    #[test]
    fn chebyshev_first_terms() {
        let z14 = chebyshev_s(CaseParams::AFFINE_14, 1).unwrap();
        assert_eq!(z14, (p("x1^4") + p("x2 + 1").pow(2)).shift(-2, -1));
        let z22 = chebyshev_s(CaseParams::AFFINE_22, 1).unwrap();
        assert_eq!(z22, p("x1^2 + x2^2 + 1").shift(-1, -1));
        assert_eq!(
            chebyshev_s(CaseParams::AFFINE_14, 2).unwrap(),
            &z14 * &z14 - Laurent::one()
        );
        assert_eq!(chebyshev_s(CaseParams::AFFINE_22, 0).unwrap(), Laurent::one());
        assert_eq!(
            chebyshev_s(CaseParams::new(1, 1).unwrap(), 1),
            Err(Error::UnsupportedCase { b: 1, c: 1 })
        );
    }
}
