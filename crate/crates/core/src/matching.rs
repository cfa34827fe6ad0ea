//! Perfect-matching generating polynomials.
//!
//! The main routine branches on the lowest unmatched vertex and memoizes on
//! the set of unmatched vertices, stored as a `u128` bitset. On chain-shaped
//! graphs numbered left to right only a narrow frontier is ever live, so the
//! number of distinct subproblems stays small.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graph::{EdgeWeight, WeightedGraph};
use crate::{Error, Laurent, Result};

/// Largest vertex count the bitset memo can represent.
pub const MAX_VERTICES: usize = 128;

fn adjacency(g: &WeightedGraph) -> Result<Vec<Vec<(usize, EdgeWeight, usize)>>> {
    if g.vertex_count > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            vertices: g.vertex_count,
            max: MAX_VERTICES,
        });
    }
    let mut adj = vec![Vec::new(); g.vertex_count];
    for (i, e) in g.edges.iter().enumerate() {
        if e.u >= g.vertex_count || e.v >= g.vertex_count || e.u == e.v {
            return Err(Error::MalformedGraph(format!("edge {i} is invalid")));
        }
        adj[e.u].push((e.v, e.weight, i));
        adj[e.v].push((e.u, e.weight, i));
    }
    Ok(adj)
}

fn full_mask(n: usize) -> u128 {
    if n == MAX_VERTICES {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Sum over perfect matchings, generic in the accumulated value.
struct Dp<'a, T> {
    adj: &'a [Vec<(usize, EdgeWeight, usize)>],
    memo: HashMap<u128, T>,
    one: T,
    zero: T,
    combine: &'a dyn Fn(&mut T, &T, EdgeWeight),
}

impl<T: Clone> Dp<'_, T> {
    fn solve(&mut self, unmatched: u128) -> T {
        if unmatched == 0 {
            return self.one.clone();
        }
        if let Some(v) = self.memo.get(&unmatched) {
            return v.clone();
        }
        let v = unmatched.trailing_zeros() as usize;
        let rest = unmatched & !(1u128 << v);
        let mut acc = self.zero.clone();
        for &(u, w, _) in &self.adj[v] {
            if rest >> u & 1 == 1 {
                let sub = self.solve(rest & !(1u128 << u));
                (self.combine)(&mut acc, &sub, w);
            }
        }
        self.memo.insert(unmatched, acc.clone());
        acc
    }
}

fn run_dp<T: Clone>(g: &WeightedGraph, one: T, zero: T, combine: &dyn Fn(&mut T, &T, EdgeWeight)) -> Result<T> {
    let adj = adjacency(g)?;
    if g.vertex_count % 2 == 1 {
        return Ok(zero);
    }
    let mut dp = Dp {
        adj: &adj,
        memo: HashMap::new(),
        one,
        zero,
        combine,
    };
    Ok(dp.solve(full_mask(g.vertex_count)))
}

/// `sum over perfect matchings M of prod_{e in M} weight(e)`. The empty
/// graph gives `1`, an odd vertex count gives `0`.
pub fn match_polynomial(g: &WeightedGraph) -> Result<Laurent> {
    run_dp(g, Laurent::one(), Laurent::zero(), &|acc, sub, w| {
        let m = w.monomial();
        acc.add_shifted(sub, m.e1(), m.e2());
    })
}

/// Number of perfect matchings.
pub fn match_count(g: &WeightedGraph) -> Result<BigInt> {
    run_dp(g, BigInt::one(), BigInt::zero(), &|acc, sub, _| *acc += sub)
}

/// Every perfect matching as a sorted list of edge indices, by plain
/// backtracking. Fails with [`Error::LimitExceeded`] once more than `limit`
/// matchings are found.
pub fn enumerate_matchings(g: &WeightedGraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let adj = adjacency(g)?;
    let mut out = Vec::new();
    if g.vertex_count % 2 == 1 {
        return Ok(out);
    }
    let mut chosen = Vec::with_capacity(g.vertex_count / 2);
    backtrack(&adj, full_mask(g.vertex_count), &mut chosen, &mut out, limit)?;
    Ok(out)
}

fn backtrack(
    adj: &[Vec<(usize, EdgeWeight, usize)>],
    unmatched: u128,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if unmatched == 0 {
        if out.len() == limit {
            return Err(Error::LimitExceeded { limit });
        }
        let mut m = chosen.clone();
        m.sort_unstable();
        out.push(m);
        return Ok(());
    }
    let v = unmatched.trailing_zeros() as usize;
    let rest = unmatched & !(1u128 << v);
    for &(u, _, e) in &adj[v] {
        if rest >> u & 1 == 1 {
            chosen.push(e);
            backtrack(adj, rest & !(1u128 << u), chosen, out, limit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Weight of a matching given as edge indices.
pub fn matching_weight(g: &WeightedGraph, matching: &[usize]) -> Laurent {
    let (e1, e2) = matching.iter().fold((0, 0), |(a, b), &i| {
        let m = g.edges[i].weight.monomial();
        (a + m.e1(), b + m.e2())
    });
    Laurent::monomial(e1, e2)
}
