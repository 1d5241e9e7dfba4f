//! Complementary degree sequences and the differences they share.

use serde::Serialize;

use crate::error::Result;
use crate::sequence::{principal_differences, DegreeSequence};

/// `d̄ = (n−1−d_n, …, n−1−d_1)`, the degree sequence of any complement of a
/// realization of `d`.
pub fn complement_sequence(d: &DegreeSequence) -> Result<DegreeSequence> {
    d.require_fits()?;
    let Some(top) = (d.len() as u32).checked_sub(1) else {
        return Ok(DegreeSequence::empty());
    };
    Ok(DegreeSequence::from_degrees(
        d.terms().iter().rev().map(|&t| top - t).collect(),
    ))
}

/// Which hypothesis made `Δ_k(d)` a guaranteed principal difference of `d̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShareCondition {
    /// `k = m(d)`.
    Last,
    /// `k = 1` and `Δ_1 > Δ_2`.
    FirstDescent,
    /// `1 < k < m(d)` and `Δ_{k−1}, Δ_k, Δ_{k+1}` is not strictly monotone.
    NotStrictlyMonotone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SharedDifference {
    pub k: usize,
    pub value: i64,
    pub condition: ShareCondition,
}

/// Every `k` in `1..=m(d)` meeting one of the three share conditions. When
/// several hold for one `k`, the first in declaration order is reported.
///
/// The value `Δ_k(d)` then reappears among the principal differences of
/// `d̄`, with one exception: if `Δ_1 = … = Δ_k = 0` under
/// [`ShareCondition::NotStrictlyMonotone`], the 0 may survive only as
/// `Δ_0(d̄)`. `(5,5,3,3,3,3)` is the smallest case: `Δ = (0,0,2,2)` while
/// `Δ(d̄) = (1,2,2)`.
pub fn shared_differences(d: &DegreeSequence) -> Result<Vec<SharedDifference>> {
    d.require_graphical()?;
    let delta = principal_differences(d);
    let m = delta.len();
    let at = |k: usize| delta.get(k).expect("k within 1..=m");
    let mut out = Vec::new();
    for k in 1..=m {
        let condition = if k == m {
            Some(ShareCondition::Last)
        } else if k == 1 {
            (at(1) > at(2)).then_some(ShareCondition::FirstDescent)
        } else {
            let (prev, cur, next) = (at(k - 1), at(k), at(k + 1));
            let rising = prev < cur && cur < next;
            let falling = prev > cur && cur > next;
            (!rising && !falling).then_some(ShareCondition::NotStrictlyMonotone)
        };
        if let Some(condition) = condition {
            out.push(SharedDifference { k, value: at(k), condition });
        }
    }
    Ok(out)
}
