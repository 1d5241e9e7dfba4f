//! Checks shared by the integration suites and the acceptance target.
//!
//! Every check returns `Err` with a message naming the failing sequence
//! instead of panicking, so callers can either assert or tally.

#![allow(dead_code)]

use std::ops::ControlFlow;

use egdiff_core::classes::{
    decomposed_sequences, hammer_simeone_splittance, is_split, is_threshold, is_weakly_threshold,
    split_off_partition, splittance, vanishing_differences,
};
use egdiff_core::complement::{complement_sequence, shared_differences};
use egdiff_core::matrix::{
    antitranspose, check_islands, difference_matrix, has_block_form, sigma_all, Matrix,
};
use egdiff_core::posets::{
    apply_unit_transformation, canonical_unit_transformations, delta_update, dominates,
    UnitTransformation,
};
use egdiff_core::realize::{for_each_realization_mask, splittance_bruteforce, Graph};
use egdiff_core::{
    eg_difference, is_graphical_full, is_graphical_li, max_difference, modified_durfee,
    principal_differences, DegreeSequence,
};
use rand::Rng;

pub type Check<T = ()> = Result<T, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub fn seq(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.iter().copied()).unwrap()
}

fn delta(d: &DegreeSequence, k: usize) -> i64 {
    eg_difference(d, k).unwrap()
}

/// Degree sequence of a G(n, p) sample with `p` itself drawn at random,
/// so sparse and dense sequences both show up.
pub fn random_graphical<R: Rng>(rng: &mut R, n: usize) -> DegreeSequence {
    let p: f64 = rng.gen_range(0.05..0.95);
    let mut deg = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    DegreeSequence::from_degrees(deg)
}

/// Arbitrary nonnegative list of length `n` with terms at most `max`.
pub fn random_list<R: Rng>(rng: &mut R, n: usize, max: u32) -> DegreeSequence {
    DegreeSequence::from_degrees((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

/// Facts that hold for every nonincreasing list with terms at most `n − 1`,
/// graphical or not.
pub fn check_fitting(d: &DegreeSequence) -> Check {
    let n = d.len();
    let m = modified_durfee(d);
    let bar = complement_sequence(d).map_err(|e| format!("{d}: {e}"))?;
    let mbar = modified_durfee(&bar);

    ensure!(is_graphical_li(d) == is_graphical_full(d), "{d}: Li and EG criteria disagree");

    // strictly increasing from m to n
    for k in m.max(1)..n {
        ensure!(delta(d, k) < delta(d, k + 1), "{d}: Δ not increasing past m at k={k}");
    }
    // constant on h..=m, the run starting at the Durfee number h = max{i : d_i ≥ i}:
    // Δ_{k+1} − Δ_k vanishes exactly when d_{k+1} = k
    let h = durfee(d);
    for k in h..m {
        ensure!(delta(d, k) == delta(d, k + 1), "{d}: Δ not constant on h={h}..m={m}");
    }
    // Δ_q ≥ 0 at the last maximum degree forces Δ_i ≥ 0 before it
    if let Some(top) = d.max_degree() {
        let q = d.terms().iter().rposition(|&t| t == top).unwrap() + 1;
        if delta(d, q) >= 0 {
            for i in 1..=q.min(m) {
                ensure!(delta(d, i) >= 0, "{d}: Δ_q ≥ 0 but Δ_{i} < 0 (q={q})");
            }
        }
    }
    if m >= 1 && d.term(m) as usize + 1 == m {
        ensure!(delta(d, m) == delta(d, m - 1), "{d}: d_m = m−1 but Δ_m ≠ Δ_(m−1)");
    }

    // m + m̄ bounds
    ensure!(n <= m + mbar && m + mbar <= n + 1, "{d}: m + m̄ = {} out of [n, n+1]", m + mbar);
    if n >= 1 {
        let tight = m + mbar == n + 1;
        ensure!(tight == (d.term(m) as usize + 1 == m), "{d}: m + m̄ = n+1 iff d_m = m−1 fails");
    }

    let dm = difference_matrix(d).unwrap();
    let a = dm.as_matrix();
    ensure!(a.is_skew_symmetric(), "{d}: M(d) not skew-symmetric");
    ensure!(
        (0..n).all(|i| (0..n).all(|j| (-1..=1).contains(&a.get(i, j)))),
        "{d}: M(d) entry outside -1..=1"
    );
    ensure!(a.total() == 0, "{d}: M(d) does not sum to 0");
    ensure!(has_block_form(&dm, m), "{d}: M(d) lacks block form at m={m}");
    ensure!(check_islands(a), "{d}: islands lemma fails");
    let mbar_matrix = difference_matrix(&bar).unwrap();
    ensure!(
        mbar_matrix.as_matrix() == &antitranspose(a),
        "{d}: M(d̄) ≠ antitranspose of M(d)"
    );

    let sigma = sigma_all(d).unwrap();
    for (i, &s) in sigma.iter().enumerate() {
        if i <= m {
            ensure!(s == delta(d, i), "{d}: σ({i}) = {s} ≠ Δ_{i}");
        }
        if i + mbar >= n {
            ensure!(s == delta(&bar, n - i), "{d}: σ({i}) = {s} ≠ Δ̄_(n−i)");
        }
    }

    // complement-index lemma
    for k in 1..=m {
        if let Some(j) = complement_column(a, k) {
            let idx = n + 1 - j;
            ensure!(idx >= 1 && idx <= mbar, "{d}: complement index {idx} outside 1..=m̄ (k={k})");
            ensure!(delta(&bar, idx) == delta(d, k), "{d}: Δ̄_{idx} ≠ Δ_{k}");
        }
    }

    ensure!(delta(&bar, mbar) == delta(d, m), "{d}: Δ_m̄(d̄) ≠ Δ_m(d)");
    Ok(())
}

/// `max{i : d_i ≥ i}`, 0 when `d_1 = 0` or `d` is empty.
pub fn durfee(d: &DegreeSequence) -> usize {
    d.terms().iter().enumerate().take_while(|&(i, &t)| t as usize > i).count()
}

/// `p = max{i : d_i ≥ m(d)}`, or `None` when no term reaches `m(d)`.
pub fn li_p(d: &DegreeSequence) -> Option<usize> {
    let m = modified_durfee(d);
    (1..=d.len()).filter(|&i| d.term(i) as usize >= m).max()
}

/// 1-based column of the leftmost nonzero entry in the first `k` rows,
/// provided rows `k` and `k + 1` share no nonzero column.
fn complement_column(a: &Matrix, k: usize) -> Option<usize> {
    let n = a.rows();
    if k < n && (0..n).any(|j| a.get(k - 1, j) != 0 && a.get(k, j) != 0) {
        return None;
    }
    (0..n).find(|&j| (0..k).any(|i| a.get(i, j) != 0)).map(|j| j + 1)
}

/// Facts about graphical sequences that need no realization.
pub fn check_graphical(d: &DegreeSequence) -> Check {
    ensure!(is_graphical_full(d), "{d}: expected graphical");
    let diffs = principal_differences(d);
    ensure!(diffs.values().iter().all(|&v| v >= 0), "{d}: negative principal difference");
    let last = diffs.last().unwrap_or(0);
    ensure!(last % 2 == 0, "{d}: last difference {last} is odd");

    let s = splittance(d).map_err(|e| format!("{d}: {e}"))?;
    ensure!(
        s as i64 == hammer_simeone_splittance(d),
        "{d}: splittance {s} ≠ closed form {}",
        hammer_simeone_splittance(d)
    );

    let bar = complement_sequence(d).unwrap();
    ensure!(is_graphical_full(&bar), "{d}: complement not graphical");
    if !d.is_empty() {
        ensure!(max_difference(&bar) == max_difference(d), "{d}: Δ*(d̄) ≠ Δ*(d)");
    }
    for s in shared_differences(d).unwrap() {
        if zero_prefix(d, s.k) {
            continue;
        }
        ensure!(
            principal_differences(&bar).values().contains(&s.value),
            "{d}: shared Δ_{} = {} missing from Δ(d̄) ({:?})",
            s.k,
            s.value,
            s.condition
        );
    }
    let (split, thr, weak) = (
        is_split(d).unwrap(),
        is_threshold(d).unwrap(),
        is_weakly_threshold(d).unwrap(),
    );
    ensure!(split == is_split(&bar).unwrap(), "{d}: split not closed under complement");
    ensure!(thr == is_threshold(&bar).unwrap(), "{d}: threshold not closed under complement");
    ensure!(weak == is_weakly_threshold(&bar).unwrap(), "{d}: weakly threshold not closed");
    ensure!(!thr || weak, "{d}: threshold but not weakly threshold");
    ensure!(!thr || split, "{d}: threshold but not split");

    let zero_matrix = difference_matrix(d).unwrap().as_matrix() == &Matrix::zeros(d.len(), d.len());
    ensure!(zero_matrix == thr, "{d}: M(d) = 0 should match threshold");

    for k in vanishing_differences(d) {
        let p = split_off_partition(d, k).map_err(|e| format!("{d} k={k}: {e}"))?;
        let (outer, inner) = decomposed_sequences(d, &p).map_err(|e| format!("{d}: {e}"))?;
        ensure!(is_graphical_full(&outer), "{d} k={k}: G[Q∪S] sequence {outer} not graphical");
        ensure!(is_graphical_full(&inner), "{d} k={k}: G[R] sequence {inner} not graphical");
        let mut joined = principal_differences(&outer).values().to_vec();
        joined.extend_from_slice(principal_differences(&inner).values());
        ensure!(
            joined == diffs.values(),
            "{d} k={k}: Δ(d) = {diffs} but Δ({outer}) ++ Δ({inner}) = {joined:?}"
        );
    }
    Ok(())
}

/// `Δ_1 = … = Δ_k = 0`: the one case where a shared value may surface in
/// `d̄` only as `Δ_0`.
pub fn zero_prefix(d: &DegreeSequence, k: usize) -> bool {
    (1..=k).all(|i| delta(d, i) == 0)
}

/// Shared differences that are missing from `Δ(d̄)`, read literally.
pub fn literal_share_misses(d: &DegreeSequence) -> Vec<usize> {
    let bar = principal_differences(&complement_sequence(d).unwrap());
    shared_differences(d)
        .unwrap()
        .into_iter()
        .filter(|s| !bar.values().contains(&s.value))
        .map(|s| s.k)
        .collect()
}

/// Minimum edits to a split graph, straight from adjacency bitmasks.
pub fn splittance_oracle(masks: &[u64]) -> u64 {
    let n = masks.len();
    let mut best = u64::MAX;
    for clique in 0u64..(1 << n) {
        let mut cost = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                let adjacent = masks[u] >> v & 1 == 1;
                let in_a = (clique >> u & 1 == 1, clique >> v & 1 == 1);
                cost += match in_a {
                    (true, true) => u64::from(!adjacent),
                    (false, false) => u64::from(adjacent),
                    _ => 0,
                };
            }
        }
        best = best.min(cost);
    }
    if n == 0 {
        0
    } else {
        best
    }
}

fn masks_to_graph(masks: &[u64]) -> Graph {
    let n = masks.len();
    let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| masks[u] >> v & 1 == 1).map(move |v| (u, v)));
    Graph::new(n, edges).unwrap()
}

/// Statistics gathered while walking the realizations of one sequence.
#[derive(Debug, Default, Clone, Copy)]
pub struct RealizationStats {
    pub realizations: usize,
    pub nontrivial_forced: usize,
}

/// Walks every labeled realization of graphical `d` and checks the facts
/// that are stated per realization.
pub fn check_realizations(d: &DegreeSequence, limit: usize) -> Check<RealizationStats> {
    let n = d.len();
    let target = principal_differences(d).last().unwrap_or(0);
    let bar = complement_sequence(d).unwrap();
    let split = is_split(d).unwrap();
    let partitions: Vec<_> = vanishing_differences(d)
        .into_iter()
        .map(|k| split_off_partition(d, k).unwrap())
        .collect();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };

    let mut stats = RealizationStats::default();
    let mut always = vec![u64::MAX; n];
    let mut ever = vec![0u64; n];
    let mut failure: Option<String> = None;
    let mut first = true;

    for_each_realization_mask(d, limit, |masks| {
        stats.realizations += 1;
        let outcome = (|| -> Check {
            for (v, &mask) in masks.iter().enumerate() {
                ensure!(mask >> v & 1 == 0, "{d}: loop at {v}");
                ensure!(mask.count_ones() == d.terms()[v], "{d}: vertex {v} has wrong degree");
            }
            let s = splittance_oracle(masks);
            ensure!(2 * s as i64 == target, "{d}: realization splittance {s}, Δ_m = {target}");
            ensure!((s == 0) == split, "{d}: split recognition disagrees with structure");

            let comp: Vec<u64> = masks.iter().enumerate().map(|(v, &m)| !m & full & !(1 << v)).collect();
            let comp_seq = DegreeSequence::from_degrees(comp.iter().map(|m| m.count_ones()).collect());
            ensure!(comp_seq == bar, "{d}: complement graph has sequence {comp_seq}, expected {bar}");
            ensure!(splittance_oracle(&comp) == s, "{d}: complement changes splittance");

            if first {
                let g = masks_to_graph(masks);
                ensure!(splittance_bruteforce(&g) == Ok(s), "{d}: library splittance disagrees");
                ensure!(g.complement().degree_sequence() == bar, "{d}: Graph::complement disagrees");
            }

            for p in &partitions {
                let adjacent = |i: usize, j: usize| masks[i - 1] >> (j - 1) & 1 == 1;
                for (a, &i) in p.q.iter().enumerate() {
                    for &j in &p.q[a + 1..] {
                        ensure!(adjacent(i, j), "{d} k={}: Q not a clique", p.k);
                    }
                    for &j in &p.r {
                        ensure!(adjacent(i, j), "{d} k={}: Q–R pair missing", p.k);
                    }
                }
                for (a, &i) in p.s.iter().enumerate() {
                    for &j in &p.s[a + 1..] {
                        ensure!(!adjacent(i, j), "{d} k={}: S not independent", p.k);
                    }
                    for &j in &p.r {
                        ensure!(!adjacent(i, j), "{d} k={}: R–S edge present", p.k);
                    }
                }
            }
            Ok(())
        })();
        first = false;
        for (v, &mask) in masks.iter().enumerate() {
            always[v] &= mask;
            ever[v] |= mask;
        }
        match outcome {
            Ok(()) => ControlFlow::Continue(()),
            Err(msg) => {
                failure = Some(msg);
                ControlFlow::Break(())
            }
        }
    })
    .map_err(|e| format!("{d}: {e}"))?;
    if let Some(msg) = failure {
        return Err(msg);
    }
    ensure!(stats.realizations > 0 || n == 0, "{d}: graphical but no realization found");

    let extreme = |v: usize| d.terms()[v] == 0 || d.terms()[v] as usize + 1 == n;
    for u in 0..n {
        for v in u + 1..n {
            let forced = always[u] >> v & 1 == 1 || ever[u] >> v & 1 == 0;
            if forced && !extreme(u) && !extreme(v) {
                stats.nontrivial_forced += 1;
            }
        }
    }
    let has_extreme = (0..n).any(extreme);
    if stats.nontrivial_forced > 0 && !has_extreme {
        let small = principal_differences(d).values().iter().any(|&v| (0..=1).contains(&v));
        ensure!(small, "{d}: forced pair without any Δ_k in 0..=1");
    }
    Ok(stats)
}

/// Applies `u` to `d` and checks the update rule and its corollaries at
/// every admissible `k`. Returns the new sequence.
pub fn check_unit_step(d: &DegreeSequence, u: &UnitTransformation) -> Check<DegreeSequence> {
    let e = apply_unit_transformation(d, u).map_err(|err| format!("{d} {u:?}: {err}"))?;
    ensure!(dominates(d, &e) == Ok(true), "{d} → {e}: step does not go down");
    ensure!(u.j_t < u.j_r, "{d} {u:?}: j_t ≥ j_r");
    let (md, me) = (modified_durfee(d), modified_durfee(&e));
    ensure!(md.abs_diff(me) <= 1, "{d} → {e}: m jumped by more than 1");
    for k in 1..=md.min(me) {
        let predicted = delta_update(d, u, k).map_err(|err| format!("{d} {u:?} k={k}: {err}"))?;
        let actual = delta(&e, k);
        ensure!(predicted == actual, "{d} → {e} k={k}: predicted {predicted}, actual {actual}");
        ensure!(delta(d, k) <= actual, "{d} → {e} k={k}: Δ_k decreased");
    }
    if me > md {
        let predicted = delta_update(d, u, me).map_err(|err| format!("{d} {u:?}: {err}"))?;
        ensure!(predicted == delta(&e, me), "{d} → {e}: growth case mispredicted");
        ensure!(predicted == delta(d, md) + 2, "{d} → {e}: growth case not Δ_m + 2");
    }
    ensure!(delta(d, md) <= delta(&e, me), "{d} → {e}: last difference decreased");
    if is_graphical_full(d) {
        ensure!(is_graphical_full(&e), "{d} → {e}: graphicality lost going down");
    }
    Ok(e)
}

/// Monotonicity facts for a dominating pair `d ⪰ e` of graphical sequences.
pub fn check_dominating_pair(d: &DegreeSequence, e: &DegreeSequence) -> Check {
    ensure!(dominates(d, e) == Ok(true), "{d} does not dominate {e}");
    ensure!(is_graphical_full(e), "{d} ⪰ {e}: lower sequence not graphical");
    let (md, me) = (modified_durfee(d), modified_durfee(e));
    for k in 1..=md.min(me) {
        ensure!(delta(d, k) <= delta(e, k), "{d} ⪰ {e}: Δ_{k} not monotone");
    }
    ensure!(delta(d, md) <= delta(e, me), "{d} ⪰ {e}: last difference not monotone");
    if let (Ok(a), Ok(b)) = (max_difference(d), max_difference(e)) {
        ensure!(a <= b, "{d} ⪰ {e}: Δ* not monotone");
    }
    let up = |f: fn(&DegreeSequence) -> egdiff_core::Result<bool>| !f(e).unwrap() || f(d).unwrap();
    ensure!(up(is_split), "{d} ⪰ {e}: split not inherited upward");
    ensure!(up(is_threshold), "{d} ⪰ {e}: threshold not inherited upward");
    ensure!(up(is_weakly_threshold), "{d} ⪰ {e}: weakly threshold not inherited upward");
    Ok(())
}

/// Checks that consecutive members of `chain` differ by one unit
/// transformation and go down in dominance.
pub fn check_chain(chain: &[DegreeSequence]) -> Check {
    for w in chain.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let step = canonical_unit_transformations(a)
            .into_iter()
            .any(|u| apply_unit_transformation(a, &u).is_ok_and(|x| x.padded(b.len()) == *b));
        ensure!(step, "{a} → {b} is not a single unit transformation");
        ensure!(dominates(a, b) == Ok(true), "{a} → {b} goes up");
    }
    Ok(())
}

/// Random walk of `steps` unit transformations down from `d`, checking
/// each step. Moves onto an implicit trailing zero are allowed.
pub fn random_walk<R: Rng>(rng: &mut R, d: &DegreeSequence, steps: usize) -> Check<Vec<DegreeSequence>> {
    let mut path = vec![d.clone()];
    let mut current = d.clone();
    for _ in 0..steps {
        let moves = canonical_unit_transformations(&current);
        if moves.is_empty() {
            break;
        }
        let u = moves[rng.gen_range(0..moves.len())];
        current = check_unit_step(&current, &u)?;
        path.push(current.clone());
    }
    Ok(path)
}
