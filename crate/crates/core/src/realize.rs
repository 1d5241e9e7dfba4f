//! Small-graph machinery: Havel–Hakimi realization, exhaustive labeled
//! enumeration, brute-force splittance and forcible pairs.
//!
//! A *labeled* realization of `d` is a graph on vertices `0..n` in which
//! vertex `v` has degree `d_{v+1}`. Everything here except
//! [`havel_hakimi`] is exponential and capped.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::{is_graphical_li, DegreeSequence};

/// Default vertex cap for enumeration-based operations.
pub const DEFAULT_LIMIT: usize = 9;
/// Absolute ceiling; no override may exceed it.
pub const MAX_LIMIT: usize = 12;

/// A simple graph on vertices `0..n`; edges are stored once as `(u, v)`
/// with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges: set.into_iter().collect() })
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let mut edges = Vec::new();
        for (u, &mask) in masks.iter().enumerate() {
            let mut rest = mask >> (u + 1);
            while rest != 0 {
                let v = u + 1 + rest.trailing_zeros() as usize;
                edges.push((u, v));
                rest &= rest - 1;
            }
        }
        Graph { n, edges }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_degrees(self.degrees())
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2 - self.edges.len());
        let mut present = self.edges.iter().peekable();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if present.peek() == Some(&&(u, v)) {
                    present.next();
                } else {
                    edges.push((u, v));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Neighbourhood bitmasks; `None` above 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Some(masks)
    }
}

/// Edge-list text: the vertex count on the first line, then one `u v` line
/// per edge with 1-based endpoints, sorted.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for &(u, v) in &self.edges {
            writeln!(f, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty());
        let n = lines
            .next()
            .and_then(|l| l.parse::<usize>().ok())
            .ok_or_else(|| Error::InvalidGraph("missing vertex count".into()))?;
        let mut edges = Vec::new();
        for (lineno, line) in lines.enumerate() {
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidGraph(format!("edge line {}: {line:?}", lineno + 2)))?;
            match ends[..] {
                [u, v] if u >= 1 && v >= 1 => edges.push((u - 1, v - 1)),
                _ => {
                    return Err(Error::InvalidGraph(format!("edge line {}: {line:?}", lineno + 2)))
                }
            }
        }
        Graph::new(n, edges)
    }
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_LIMIT);
    if n > limit {
        Err(Error::LimitExceeded { size: n, limit })
    } else {
        Ok(())
    }
}

/// Deterministic Havel–Hakimi realization: the vertex with the most
/// remaining demand (lowest index on ties) is joined to the next-highest
/// demands (lowest indices on ties). Vertex `v` receives degree `d_{v+1}`.
pub fn havel_hakimi(d: &DegreeSequence) -> Result<Graph> {
    d.require_graphical()?;
    let n = d.len();
    let mut remaining: Vec<u32> = d.terms().to_vec();
    let mut order: Vec<usize> = (0..n).collect();
    let mut edges = Vec::with_capacity((d.sum() / 2) as usize);
    loop {
        order.sort_by(|&a, &b| remaining[b].cmp(&remaining[a]).then(a.cmp(&b)));
        let Some(&hub) = order.first() else { break };
        let need = remaining[hub] as usize;
        if need == 0 {
            break;
        }
        remaining[hub] = 0;
        for &v in &order[1..=need] {
            debug_assert!(remaining[v] > 0);
            remaining[v] -= 1;
            edges.push((hub.min(v), hub.max(v)));
        }
    }
    Graph::new(n, edges)
}

struct Enumerator<'a, F> {
    n: usize,
    remaining: Vec<u32>,
    masks: Vec<u64>,
    visit: &'a mut F,
}

impl<F> Enumerator<'_, F>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    fn residual_is_graphical(&self, from: usize) -> bool {
        let rest = DegreeSequence::from_degrees(self.remaining[from..].to_vec());
        is_graphical_li(&rest)
    }

    fn vertex(&mut self, u: usize) -> ControlFlow<()> {
        if u == self.n {
            return (self.visit)(&self.masks);
        }
        let need = self.remaining[u] as usize;
        let candidates: Vec<usize> = (u + 1..self.n).filter(|&v| self.remaining[v] > 0).collect();
        if candidates.len() < need {
            return ControlFlow::Continue(());
        }
        let mut chosen = Vec::with_capacity(need);
        self.choose(u, &candidates, 0, need, &mut chosen)
    }

    fn choose(
        &mut self,
        u: usize,
        candidates: &[usize],
        start: usize,
        need: usize,
        chosen: &mut Vec<usize>,
    ) -> ControlFlow<()> {
        if chosen.len() == need {
            for &v in chosen.iter() {
                self.remaining[v] -= 1;
                self.masks[u] |= 1 << v;
                self.masks[v] |= 1 << u;
            }
            let saved = self.remaining[u];
            self.remaining[u] = 0;
            let flow = if self.residual_is_graphical(u + 1) {
                self.vertex(u + 1)
            } else {
                ControlFlow::Continue(())
            };
            self.remaining[u] = saved;
            for &v in chosen.iter() {
                self.remaining[v] += 1;
                self.masks[u] &= !(1 << v);
                self.masks[v] &= !(1 << u);
            }
            return flow;
        }
        let left = need - chosen.len();
        for idx in start..=candidates.len() - left {
            chosen.push(candidates[idx]);
            let flow = self.choose(u, candidates, idx + 1, need, chosen);
            chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Walks every labeled realization of `d` in lexicographic edge-list order,
/// handing `visit` the neighbourhood bitmasks. Stops early on `Break`.
pub fn for_each_realization_mask<F>(d: &DegreeSequence, limit: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> ControlFlow<()>,
{
    check_limit(d.len(), limit)?;
    if !is_graphical_li(d) {
        return Ok(());
    }
    let mut walk = Enumerator {
        n: d.len(),
        remaining: d.terms().to_vec(),
        masks: vec![0; d.len()],
        visit: &mut visit,
    };
    let _ = walk.vertex(0);
    Ok(())
}

/// Every simple graph on `0..n` in which vertex `v` has degree `d_{v+1}`,
/// sorted by edge list.
pub fn enumerate_labeled_realizations(d: &DegreeSequence, limit: usize) -> Result<Vec<Graph>> {
    d.require_graphical()?;
    let mut out = Vec::new();
    for_each_realization_mask(d, limit, |masks| {
        out.push(Graph::from_masks(masks));
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// Whether exhaustive search finds any labeled realization. Never consults
/// the Erdős–Gallai inequalities.
pub fn has_realization_by_search(d: &DegreeSequence) -> bool {
    let n = d.len();
    if d.max_degree().is_some_and(|top| top as usize >= n) || d.sum() % 2 != 0 {
        return false;
    }
    fn go(remaining: &mut [u32], u: usize) -> bool {
        let n = remaining.len();
        if u == n {
            return true;
        }
        let need = remaining[u] as usize;
        let candidates: Vec<usize> = (u + 1..n).filter(|&v| remaining[v] > 0).collect();
        if candidates.len() < need {
            return false;
        }
        let mut pick: Vec<usize> = (0..need).collect();
        loop {
            for &i in &pick {
                remaining[candidates[i]] -= 1;
            }
            let saved = remaining[u];
            remaining[u] = 0;
            let found = go(remaining, u + 1);
            remaining[u] = saved;
            for &i in &pick {
                remaining[candidates[i]] += 1;
            }
            if found {
                return true;
            }
            // next combination of `need` out of `candidates.len()`
            let c = candidates.len();
            let Some(pos) = (0..need).rev().find(|&p| pick[p] < c - need + p) else {
                return false;
            };
            pick[pos] += 1;
            for q in pos + 1..need {
                pick[q] = pick[q - 1] + 1;
            }
        }
    }
    go(&mut d.terms().to_vec(), 0)
}

pub const SPLITTANCE_LIMIT: usize = 12;

/// Minimum over all clique/independent-set candidate splits `(A, B)` of the
/// missing edges inside `A` plus the edges inside `B`.
pub fn splittance_bruteforce(g: &Graph) -> Result<u64> {
    check_limit(g.order(), SPLITTANCE_LIMIT)?;
    let masks = g.adjacency_masks().expect("order within cap");
    Ok(splittance_of_masks(&masks))
}

pub(crate) fn splittance_of_masks(masks: &[u64]) -> u64 {
    let n = masks.len();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let inside = |set: u64| -> u64 {
        let mut twice = 0u64;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            twice += u64::from((masks[v] & set).count_ones());
            rest &= rest - 1;
        }
        twice / 2
    };
    (0..=full)
        .map(|a| {
            let size = u64::from(a.count_ones());
            size * size.saturating_sub(1) / 2 - inside(a) + inside(full & !a)
        })
        .min()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ForcedKind {
    Adjacent,
    Nonadjacent,
}

/// A pair of 1-based positions related the same way in every labeled
/// realization. `trivial` marks pairs explained by a degree-0 or
/// degree-`(n−1)` endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ForcedPair {
    pub i: usize,
    pub j: usize,
    pub kind: ForcedKind,
    pub trivial: bool,
}

pub fn forcible_pairs(d: &DegreeSequence, limit: usize) -> Result<Vec<ForcedPair>> {
    d.require_graphical()?;
    let n = d.len();
    let mut always = vec![u64::MAX; n];
    let mut ever = vec![0u64; n];
    for_each_realization_mask(d, limit, |masks| {
        for (v, &mask) in masks.iter().enumerate() {
            always[v] &= mask;
            ever[v] |= mask;
        }
        ControlFlow::Continue(())
    })?;
    let extreme = |v: usize| {
        let deg = d.terms()[v] as usize;
        deg == 0 || deg + 1 == n
    };
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let kind = if always[u] >> v & 1 == 1 {
                ForcedKind::Adjacent
            } else if ever[u] >> v & 1 == 0 {
                ForcedKind::Nonadjacent
            } else {
                continue;
            };
            out.push(ForcedPair { i: u + 1, j: v + 1, kind, trivial: extreme(u) || extreme(v) });
        }
    }
    Ok(out)
}

/// All nonincreasing lists of length `n` with terms in `0..n`.
pub fn fitting_sequences(n: usize) -> Vec<DegreeSequence> {
    fn go(n: usize, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<DegreeSequence>) {
        if prefix.len() == n {
            out.push(DegreeSequence::from_degrees(prefix.clone()));
            return;
        }
        for t in (0..=cap).rev() {
            prefix.push(t);
            go(n, t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.saturating_sub(1) as u32, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Every graphical sequence with at most `max_len` terms, shortest first.
pub fn graphical_sequences(max_len: usize) -> Vec<DegreeSequence> {
    (0..=max_len)
        .flat_map(fitting_sequences)
        .filter(is_graphical_li)
        .collect()
}
