use affine_cluster::closed_forms::{
    chebyshev_s, explicit_x22, m14, m22, subset_count_bruteforce, subset_count_formula, subset_count_table,
    SubsetCountQuery,
};
use affine_cluster::verify::Workbench;
use affine_cluster::{CaseParams, Laurent, SequenceCache};
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn explicit_formula_matches_recurrence() {
    let mut seq = SequenceCache::new(CaseParams::AFFINE_22);
    for n in -12..=15 {
        if matches!(n, 1 | 2) {
            assert!(explicit_x22(n).is_err());
            continue;
        }
        assert_eq!(&explicit_x22(n).unwrap(), seq.x_at(n).unwrap(), "n = {n}");
    }
}

#[test]
fn subset_formula_matches_bruteforce() {
    for ground in 0..=18u32 {
        let table = subset_count_table(ground).unwrap();
        for q in 0..=ground {
            for r in 0..=ground {
                let formula = subset_count_formula(SubsetCountQuery::new(ground, q, r));
                assert_eq!(
                    formula,
                    BigInt::from(table[q as usize][r as usize]),
                    "N={ground} q={q} r={r}"
                );
            }
        }
    }
}

#[test]
fn grid_coefficients_count_subsets() {
    // a matching of H_m is determined by its horizontal pairs, which sit on
    // non-adjacent columns 1..m-1
    let mut bench = Workbench::new();
    for m in 1..=12u32 {
        let q = bench.q(m).unwrap();
        for odd in 0..=m {
            for even in 0..=m {
                let expected = subset_count_bruteforce(SubsetCountQuery::new(m - 1, odd, even)).unwrap();
                assert_eq!(
                    q.coeff(2 * even as i64, 2 * odd as i64),
                    expected,
                    "m={m} odd={odd} even={even}"
                );
            }
        }
    }
}

#[test]
fn chebyshev_elements_are_grid_polynomials() {
    let mut bench = Workbench::new();
    for n in 0..=8u32 {
        let s = chebyshev_s(CaseParams::AFFINE_22, n).unwrap();
        let k = i64::from(n);
        assert_eq!(s.shift(k, k), bench.q(2 * n + 1).unwrap(), "n = {n}");
    }
}

#[test]
fn chebyshev_elements_are_tilde_polynomials() {
    let mut bench = Workbench::new();
    for n in 0..=6u32 {
        let s = chebyshev_s(CaseParams::AFFINE_14, n).unwrap();
        let k = i64::from(n);
        assert_eq!(s.shift(2 * k, k), bench.tilde(2 * k + 3).unwrap(), "n = {n}");
    }
}

#[test]
fn denominators_clear_the_sequences() {
    let mut s22 = SequenceCache::new(CaseParams::AFFINE_22);
    for n in 3..=14 {
        let d = m22(n).unwrap();
        let p = s22.x_at(n).unwrap().shift(d.e1(), d.e2());
        assert!(p.is_polynomial() && p.coeff(0, 0) == BigInt::from(1), "n = {n}");
    }
    let mut s14 = SequenceCache::new(CaseParams::AFFINE_14);
    for n in -12..=14 {
        let Ok(d) = m14(n) else { continue };
        let p = s14.x_at(n).unwrap().shift(d.e1(), d.e2());
        assert!(p.is_polynomial(), "n = {n}");
        assert_eq!(p.coeff(0, 0), BigInt::from(1), "n = {n}");
    }
}

proptest! {
    #[test]
    fn subset_counts_agree(ground in 0u32..=16, q in 0u32..=9, r in 0u32..=9) {
        let qy = SubsetCountQuery::new(ground, q, r);
        prop_assert_eq!(subset_count_formula(qy), subset_count_bruteforce(qy).unwrap());
    }

    #[test]
    fn chebyshev_recurrence(n in 2u32..10) {
        for case in [CaseParams::AFFINE_22, CaseParams::AFFINE_14] {
            let z = chebyshev_s(case, 1).unwrap();
            let lhs = chebyshev_s(case, n).unwrap();
            let rhs = &z * &chebyshev_s(case, n - 1).unwrap() - chebyshev_s(case, n - 2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn constant_term_of_chebyshev_product() {
    // s_1^2 - s_2 = 1
    let z = chebyshev_s(CaseParams::AFFINE_22, 1).unwrap();
    assert_eq!(&z * &z - chebyshev_s(CaseParams::AFFINE_22, 2).unwrap(), Laurent::one());
}
