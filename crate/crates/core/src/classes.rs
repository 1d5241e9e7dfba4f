//! Split, threshold and weakly threshold recognition, splittance, and the
//! Q/R/S split-off of a sequence with a vanishing difference.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::{delta_unchecked, modified_durfee, principal_differences, DegreeSequence};

fn last_difference(d: &DegreeSequence) -> Result<i64> {
    d.require_graphical()?;
    Ok(principal_differences(d).last().unwrap_or(0))
}

/// Minimum number of edge edits turning any realization of `d` into a
/// split graph, read off as `Δ_m(d) / 2`.
pub fn splittance(d: &DegreeSequence) -> Result<u64> {
    let last = last_difference(d)?;
    if last % 2 != 0 || last < 0 {
        return Err(Error::OddLastDifference(last));
    }
    Ok((last / 2) as u64)
}

pub fn is_split(d: &DegreeSequence) -> Result<bool> {
    Ok(last_difference(d)? == 0)
}

pub fn is_threshold(d: &DegreeSequence) -> Result<bool> {
    d.require_graphical()?;
    Ok(principal_differences(d).values().iter().all(|&v| v == 0))
}

pub fn is_weakly_threshold(d: &DegreeSequence) -> Result<bool> {
    d.require_graphical()?;
    Ok(principal_differences(d).values().iter().all(|&v| v <= 1))
}

/// True when some realization (hence every one) has an isolated vertex.
pub fn has_isolated_vertex(d: &DegreeSequence) -> bool {
    d.terms().last() == Some(&0)
}

/// Clique side `Q`, joined middle `R`, and independent side `S`, as 1-based
/// positions into the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitPartition {
    pub k: usize,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

/// Splits `d` at a vanishing difference `Δ_k(d) = 0`.
///
/// `Q` is the first `k` positions and `S` the later positions with degree
/// below `k`. In every realization `Q` is a clique, `S` is independent, and
/// each member of `R` is adjacent to all of `Q` and none of `S`.
pub fn split_off_partition(d: &DegreeSequence, k: usize) -> Result<SplitPartition> {
    d.require_graphical()?;
    let n = d.len();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    let value = delta_unchecked(d.terms(), k);
    if value != 0 {
        return Err(Error::NonzeroDifference { k, value });
    }
    let (s, r): (Vec<usize>, Vec<usize>) =
        (k + 1..=n).partition(|&i| (d.term(i) as usize) < k);
    Ok(SplitPartition { k, q: (1..=k).collect(), r, s })
}

/// Every `k` with `Δ_k(d) = 0`, in increasing order.
pub fn vanishing_differences(d: &DegreeSequence) -> Vec<usize> {
    // Beyond m(d) the differences of a graphical sequence strictly increase
    // from a nonnegative start, so only principal indices can vanish there;
    // scanning all of 1..=n keeps the helper honest for any input.
    (1..=d.len()).filter(|&k| delta_unchecked(d.terms(), k) == 0).collect()
}

/// Degree sequences of `G[Q ∪ S]` and `G[R]`.
///
/// `Q` members lose their `|R|` neighbours in `R`; `R` members lose their
/// `k` neighbours in `Q`; `S` members keep everything.
pub fn decomposed_sequences(
    d: &DegreeSequence,
    p: &SplitPartition,
) -> Result<(DegreeSequence, DegreeSequence)> {
    let expected = split_off_partition(d, p.k)?;
    if &expected != p {
        return Err(Error::InconsistentPartition(format!(
            "expected Q={:?} R={:?} S={:?}",
            expected.q, expected.r, expected.s
        )));
    }
    let joined = p.r.len() as u32;
    let k = p.k as u32;
    let outer = p
        .q
        .iter()
        .map(|&i| d.term(i) - joined)
        .chain(p.s.iter().map(|&i| d.term(i)))
        .collect();
    let inner = p.r.iter().map(|&i| d.term(i) - k).collect();
    Ok((DegreeSequence::from_degrees(outer), DegreeSequence::from_degrees(inner)))
}

/// `½(m(m−1) + Σ_{i>m} d_i − Σ_{i≤m} d_i)`, written out independently of
/// [`crate::eg_difference`].
pub fn hammer_simeone_splittance(d: &DegreeSequence) -> i64 {
    let m = modified_durfee(d);
    let t = d.terms();
    let head: i64 = t[..m].iter().map(|&x| i64::from(x)).sum();
    let tail: i64 = t[m..].iter().map(|&x| i64::from(x)).sum();
    let m = m as i64;
    (m * (m - 1) + tail - head) / 2
}
