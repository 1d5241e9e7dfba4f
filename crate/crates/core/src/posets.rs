//! The dominance (majorization) order with its unit transformations, and a
//! brute-force check of Rao's induced-subgraph order.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::realize::for_each_realization_mask;
use crate::sequence::{delta_unchecked, modified_durfee, DegreeSequence};

/// `d ⪰ e`: every prefix sum of `d` is at least the matching prefix sum of
/// `e`. The shorter sequence is zero-padded; the sums must agree.
pub fn dominates(d: &DegreeSequence, e: &DegreeSequence) -> Result<bool> {
    let (left, right) = (d.sum(), e.sum());
    if left != right {
        return Err(Error::UnequalSums { left, right });
    }
    let len = d.len().max(e.len());
    let mut gap = 0i64;
    for i in 1..=len {
        gap += i64::from(d.term(i)) - i64::from(e.term(i));
        if gap < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Moves one unit of degree from position `r` to a later position `t`.
///
/// Only the moves that cannot be split into smaller moves are represented:
/// `t` is the first position after `r` with `d_t ≤ d_r − 2`, and `r` is the
/// last position before `t` with `d_r ≥ d_t + 2`. Position `t = n + 1`
/// stands for an implicit trailing zero. `j_r` and `j_t` are the columns of
/// `F(d)` whose entries the move flips, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct UnitTransformation {
    pub r: usize,
    pub t: usize,
    pub j_r: usize,
    pub j_t: usize,
}

impl UnitTransformation {
    /// Validates `(r, t)` against `d` and fills in the flipped columns.
    pub fn new(d: &DegreeSequence, r: usize, t: usize) -> Result<Self> {
        let n = d.len();
        let invalid = Error::InvalidTransformation { r, t };
        if r == 0 || r >= t || t > n + 1 {
            return Err(invalid);
        }
        let (dr, dt) = (d.term(r), d.term(t));
        if dr < dt + 2 {
            return Err(invalid);
        }
        // first position after r that is at least two below d_r
        if (r + 1..t).any(|i| d.term(i) + 2 <= dr) {
            return Err(invalid);
        }
        // last position before t that is at least two above d_t
        if (r + 1..t).any(|i| d.term(i) >= dt + 2) {
            return Err(invalid);
        }
        let (dr, dt) = (dr as usize, dt as usize);
        let j_r = if dr >= r { dr + 1 } else { dr };
        let j_t = if dt + 1 >= t { dt + 2 } else { dt + 1 };
        Ok(UnitTransformation { r, t, j_r, j_t })
    }

    /// Whether the move lands on the implicit zero past the end of `d`.
    pub fn extends(&self, d: &DegreeSequence) -> bool {
        self.t == d.len() + 1
    }
}

/// Every unit transformation of `d`, ordered by `r`.
pub fn canonical_unit_transformations(d: &DegreeSequence) -> Vec<UnitTransformation> {
    let n = d.len();
    (1..=n)
        .filter_map(|r| {
            let dr = d.term(r);
            if dr < 2 {
                return None;
            }
            let t = (r + 1..=n + 1).find(|&i| d.term(i) + 2 <= dr)?;
            UnitTransformation::new(d, r, t).ok()
        })
        .collect()
}

pub fn apply_unit_transformation(d: &DegreeSequence, u: &UnitTransformation) -> Result<DegreeSequence> {
    if UnitTransformation::new(d, u.r, u.t)? != *u {
        return Err(Error::InvalidTransformation { r: u.r, t: u.t });
    }
    let mut terms = d.padded(u.t.max(d.len())).into_terms();
    terms[u.r - 1] -= 1;
    terms[u.t - 1] += 1;
    debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
    Ok(DegreeSequence::from_degrees(terms))
}

/// Predicts `Δ_k(e)` for `e = apply_unit_transformation(d, u)` from `Δ(d)`
/// and the positions `r, t, j_r, j_t` alone:
///
/// * for `k ≤ min{m(d), m(e)}`: `Δ_k(d) + c₊ − c₋`, where `c₊` counts the
///   members of `{r, j_t}` and `c₋` those of `{t, j_r}` that are `≤ k`;
/// * for `k = m(e) > m(d)`: `Δ_{m(d)}(d) + 2`.
///
/// Other `k` are outside the rule and rejected.
pub fn delta_update(d: &DegreeSequence, u: &UnitTransformation, k: usize) -> Result<i64> {
    let e = apply_unit_transformation(d, u)?;
    let (md, me) = (modified_durfee(d), modified_durfee(&e));
    if k >= 1 && k <= md.min(me) {
        let below = |x: usize| i64::from(x <= k);
        let gained = below(u.r) + below(u.j_t);
        let lost = below(u.t) + below(u.j_r);
        Ok(delta_unchecked(d.terms(), k) + gained - lost)
    } else if k == me && me > md {
        Ok(delta_unchecked(d.terms(), md) + 2)
    } else {
        Err(Error::UpdateOutOfRange { k })
    }
}

/// A chain `d = π⁰ ⪰ π¹ ⪰ … ⪰ πᵖ = e` of single unit transformations.
///
/// Both ends are zero-padded to a common length first. Each step takes the
/// unit transformation with the smallest `r` whose result still dominates
/// `e`; every step strictly lowers the total prefix-sum excess over `e`,
/// so the walk ends at `e`.
pub fn muirhead_chain(d: &DegreeSequence, e: &DegreeSequence) -> Result<Vec<DegreeSequence>> {
    if !dominates(d, e)? {
        return Err(Error::NotComparable);
    }
    let len = d.len().max(e.len());
    let target = e.padded(len);
    let mut current = d.padded(len);
    let mut chain = vec![current.clone()];
    while current != target {
        let next = canonical_unit_transformations(&current)
            .iter()
            .filter(|u| u.t <= len)
            .map(|u| apply_unit_transformation(&current, u))
            .find(|next| matches!(next, Ok(seq) if dominates(seq, &target) == Ok(true)))
            .ok_or(Error::NotComparable)??;
        chain.push(next.clone());
        current = next;
    }
    Ok(chain)
}

fn induced_sequence(masks: &[u64], subset: u64) -> DegreeSequence {
    let mut degrees = Vec::with_capacity(subset.count_ones() as usize);
    let mut rest = subset;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        degrees.push((masks[v] & subset).count_ones());
        rest &= rest - 1;
    }
    DegreeSequence::from_degrees(degrees)
}

fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let full = 1u64 << n;
    (0..full).filter(move |s| s.count_ones() as usize == size)
}

/// `e ⪯ d` in Rao's order: some labeled realization of `d` has an induced
/// subgraph whose degree sequence is `e`.
pub fn rao_leq(e: &DegreeSequence, d: &DegreeSequence, vertex_limit: usize) -> Result<bool> {
    e.require_graphical()?;
    d.require_graphical()?;
    if e.len() > d.len() {
        // the cap applies regardless of the answer
        for_each_realization_mask(d, vertex_limit, |_| ControlFlow::Break(()))?;
        return Ok(false);
    }
    let mut found = false;
    for_each_realization_mask(d, vertex_limit, |masks| {
        if subsets_of_size(masks.len(), e.len()).any(|s| induced_sequence(masks, s) == *e) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Every `e` with `e ⪯ d`: the degree sequences of all induced subgraphs
/// of all labeled realizations of `d`, the empty sequence included.
pub fn rao_down_set(d: &DegreeSequence, vertex_limit: usize) -> Result<BTreeSet<DegreeSequence>> {
    d.require_graphical()?;
    let mut out = BTreeSet::new();
    for_each_realization_mask(d, vertex_limit, |masks| {
        for s in 0..(1u64 << masks.len()) {
            out.insert(induced_sequence(masks, s));
        }
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
