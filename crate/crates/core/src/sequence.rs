use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// A list of vertex degrees, always held in nonincreasing order.
///
/// Construction sorts. Nothing forces the terms to be at most `n − 1`:
/// non-graphical lists are valid inputs to the graphicality criteria.
/// Trailing zeros are kept, so `(2,2,1,1,0)` and `(2,2,1,1)` differ.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Sorts `values` into a degree sequence, rejecting negative entries.
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let terms = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                u32::try_from(v)
                    .ok()
                    .filter(|&t| t <= i32::MAX as u32)
                    .ok_or(Error::InvalidDegree { position: i + 1, value: v })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_degrees(terms))
    }

    pub fn from_degrees(mut terms: Vec<u32>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(terms)
    }

    pub fn empty() -> Self {
        DegreeSequence(Vec::new())
    }

    pub fn terms(&self) -> &[u32] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_i` for a 1-based position; positions past the end read as 0.
    pub fn term(&self, i: usize) -> u32 {
        debug_assert!(i >= 1);
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&t| i64::from(t)).sum()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// True when every term is at most `n − 1`.
    pub fn fits(&self) -> bool {
        match self.max_degree() {
            None => true,
            Some(top) => (top as usize) < self.len(),
        }
    }

    pub(crate) fn require_fits(&self) -> Result<()> {
        match self.max_degree() {
            Some(top) if top as usize >= self.len() => Err(Error::DegreeTooLarge {
                degree: top,
                len: self.len(),
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn require_graphical(&self) -> Result<()> {
        if is_graphical_li(self) {
            Ok(())
        } else {
            Err(Error::NotGraphical(self.to_string()))
        }
    }

    /// Appends zeros until the sequence has `len` terms. Shorter targets are a no-op.
    pub fn padded(&self, len: usize) -> Self {
        let mut terms = self.0.clone();
        if terms.len() < len {
            terms.resize(len, 0);
        }
        DegreeSequence(terms)
    }

    /// Drops every zero term.
    pub fn trimmed(&self) -> Self {
        DegreeSequence(self.0.iter().copied().filter(|&t| t > 0).collect())
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Parses integers separated by commas and/or whitespace; surrounding
/// parentheses or brackets are ignored. An empty string is the empty sequence.
impl FromStr for DegreeSequence {
    type Err = ParseSequenceError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let values = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| ParseSequenceError::BadToken(tok.to_string()))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        DegreeSequence::new(values).map_err(ParseSequenceError::Invalid)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseSequenceError {
    #[error("not an integer: {0:?}")]
    BadToken(String),
    #[error(transparent)]
    Invalid(Error),
}

/// The principal Erdős–Gallai differences `(Δ_1, …, Δ_m)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DifferenceList(Vec<i64>);

impl DifferenceList {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Δ_k` for `1 ≤ k ≤ m`.
    pub fn get(&self, k: usize) -> Option<i64> {
        k.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn last(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }
}

impl fmt::Display for DifferenceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `max{i : d_i ≥ i − 1}`, or 0 for the empty sequence.
pub fn modified_durfee(d: &DegreeSequence) -> usize {
    // Terms decrease while i − 1 increases, so the satisfying indices form a prefix.
    d.terms()
        .iter()
        .enumerate()
        .take_while(|&(i, &t)| t as usize >= i)
        .count()
}

pub(crate) fn delta_unchecked(terms: &[u32], k: usize) -> i64 {
    let k64 = k as i64;
    let head: i64 = terms[..k].iter().map(|&t| i64::from(t)).sum();
    let tail: i64 = terms[k..].iter().map(|&t| i64::from(t).min(k64)).sum();
    k64 * (k64 - 1) + tail - head
}

/// `Δ_k(d)` for `0 ≤ k ≤ n`.
pub fn eg_difference(d: &DegreeSequence, k: usize) -> Result<i64> {
    if k > d.len() {
        return Err(Error::IndexOutOfRange { index: k, max: d.len() });
    }
    Ok(delta_unchecked(d.terms(), k))
}

pub fn principal_differences(d: &DegreeSequence) -> DifferenceList {
    let m = modified_durfee(d);
    DifferenceList((1..=m).map(|k| delta_unchecked(d.terms(), k)).collect())
}

/// `Δ*(d)`, the largest principal difference.
pub fn max_difference(d: &DegreeSequence) -> Result<i64> {
    principal_differences(d).max().ok_or(Error::EmptySequence)
}

/// Erdős–Gallai: even sum and `Δ_k ≥ 0` for every `k` in `1..=n`.
pub fn is_graphical_full(d: &DegreeSequence) -> bool {
    d.sum() % 2 == 0 && (1..=d.len()).all(|k| delta_unchecked(d.terms(), k) >= 0)
}

/// The same test restricted to `1 ≤ k ≤ m(d)`.
pub fn is_graphical_li(d: &DegreeSequence) -> bool {
    d.sum() % 2 == 0 && (1..=modified_durfee(d)).all(|k| delta_unchecked(d.terms(), k) >= 0)
}
