//! Combinatorics of hyperbolic-time sets over finite real sequences.
//!
//! A time `p` in `[1, N)` is a `δ`-hyperbolic time of the sequence
//! `a = (a_0, …, a_{N-1})` when every backward partial sum ending at `p`
//! averages at least `δ`, i.e. `Σ_{k≤l<p} a_l ≥ (p−k)δ` for all `k < p`.
//! Weakening the window to the last `M` steps gives the `(δ,M)`-weakly
//! hyperbolic times; re-running the `δ/2` condition inside each connected
//! component of the `M`-dilated weak set gives the mildly hyperbolic times.
//! All operations here are pure functions on immutable values.
//!
//! Inequalities are evaluated with plain `>=` in double precision. The
//! property-suite generators keep window sums at least `1e-9` away from
//! their thresholds so rounding cannot flip an outcome.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite real sequence (dimensionless log-derivative units).
#[derive(Debug, Clone, PartialEq)]
pub struct RealSequence {
    values: Vec<f64>,
}

impl RealSequence {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("sequence must be nonempty".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "sequence entries must be finite".into(),
            ));
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // length >= 1 by construction
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn negated(&self) -> RealSequence {
        RealSequence {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Prefix sums `S_0 = 0, S_j = a_0 + … + a_{j-1}`, length `N + 1`.
    pub fn prefix_sums(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.values.len() + 1);
        let mut acc = 0.0;
        out.push(0.0);
        for v in &self.values {
            acc += v;
            out.push(acc);
        }
        out
    }

    /// Parses comma-separated decimal reals; rows of a CSV file are
    /// concatenated in order.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            for field in line.split(',') {
                let field = field.trim();
                if field.is_empty() {
                    continue;
                }
                let v: f64 = field
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad real value `{field}`")))?;
                values.push(v);
            }
        }
        Self::new(values)
    }
}

/// A strictly increasing set of times inside `[0, horizon)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimeSet {
    horizon: usize,
    times: Vec<usize>,
}

impl TimeSet {
    pub fn new(horizon: usize, times: Vec<usize>) -> Result<Self> {
        if !times.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(
                "times must be strictly increasing".into(),
            ));
        }
        if let Some(&last) = times.last() {
            if last >= horizon {
                return Err(Error::InvalidParameter(format!(
                    "time {last} outside horizon {horizon}"
                )));
            }
        }
        Ok(Self { horizon, times })
    }

    pub fn empty(horizon: usize) -> Self {
        Self {
            horizon,
            times: Vec::new(),
        }
    }

    /// The interval `[lo, hi)` clipped to the horizon.
    pub fn range(horizon: usize, lo: usize, hi: usize) -> Self {
        let hi = hi.min(horizon);
        Self {
            horizon,
            times: (lo..hi).collect(),
        }
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn times(&self) -> &[usize] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn contains(&self, k: usize) -> bool {
        self.times.binary_search(&k).is_ok()
    }

    /// Frequency in `[1, n]`: `#(E ∩ [1,n]) / n`.
    pub fn density(&self, n: usize) -> f64 {
        assert!(n >= 1, "density horizon must be positive");
        let lo = self.times.partition_point(|&t| t < 1);
        let hi = self.times.partition_point(|&t| t <= n);
        (hi - lo) as f64 / n as f64
    }

    /// Intersection; keeps the smaller horizon.
    pub fn intersect(&self, other: &TimeSet) -> TimeSet {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.times.len() && j < other.times.len() {
            match self.times[i].cmp(&other.times[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.times[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        TimeSet {
            horizon: self.horizon.min(other.horizon),
            times: out,
        }
    }

    /// Difference `self \ other` (horizons untouched).
    pub fn difference(&self, other: &TimeSet) -> TimeSet {
        let times = self
            .times
            .iter()
            .copied()
            .filter(|&t| !other.contains(t))
            .collect();
        TimeSet {
            horizon: self.horizon,
            times,
        }
    }

    /// Complement within `[0, horizon)`.
    pub fn complement(&self) -> TimeSet {
        let mut times = Vec::with_capacity(self.horizon - self.times.len());
        let mut it = self.times.iter().peekable();
        for k in 0..self.horizon {
            if it.peek() == Some(&&k) {
                it.next();
            } else {
                times.push(k);
            }
        }
        TimeSet {
            horizon: self.horizon,
            times,
        }
    }

    pub fn is_subset_of(&self, other: &TimeSet) -> bool {
        self.times.iter().all(|&t| other.contains(t))
    }
}

/// Serialized as ascending comma-separated integers, e.g. `1,3,7`.
impl fmt::Display for TimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for t in &self.times {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for TimeSet {
    type Err = Error;

    /// Parses `1,3,7`; the horizon is one past the largest element.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(TimeSet::empty(0));
        }
        let mut times = Vec::new();
        for field in s.split(',') {
            let t: usize = field
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad time `{field}`")))?;
            times.push(t);
        }
        let horizon = times.last().map_or(0, |&t| t + 1);
        TimeSet::new(horizon, times)
    }
}

/// Maximal integer intervals `[s, t]` (inclusive) of a time set, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalDecomposition {
    intervals: Vec<(usize, usize)>,
}

impl IntervalDecomposition {
    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must be a positive real, got {delta}"
        )));
    }
    Ok(())
}

fn check_window(m: usize, name: &str) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be >= 1")));
    }
    Ok(())
}

/// δ-hyperbolic times of `a`: all `p` in `[1, N)` with
/// `Σ_{k≤l<p} a_l ≥ (p−k)δ` for every `k < p`. Index 0 never qualifies.
///
/// Runs in `O(N)`: with `b_k = S_k − kδ` the condition reads
/// `b_p ≥ max_{k<p} b_k`.
pub fn hyperbolic_times(a: &RealSequence, delta: f64) -> Result<TimeSet> {
    check_delta(delta)?;
    let n = a.len();
    let s = a.prefix_sums();
    let b: Vec<f64> = s.iter().enumerate().map(|(k, v)| v - k as f64 * delta).collect();
    let mut times = Vec::new();
    let mut run_max = b[0];
    for p in 1..n {
        if b[p] >= run_max {
            times.push(p);
        }
        run_max = run_max.max(b[p]);
    }
    Ok(TimeSet { horizon: n, times })
}

/// (δ,M)-weakly hyperbolic times: the same condition restricted to
/// `k = max(p−M, 0), …, p−1`. Superset of [`hyperbolic_times`]; equal to it
/// once `M ≥ N`.
pub fn weakly_hyperbolic_times(a: &RealSequence, delta: f64, m: usize) -> Result<TimeSet> {
    check_delta(delta)?;
    check_window(m, "M")?;
    let n = a.len();
    let s = a.prefix_sums();
    let b: Vec<f64> = s.iter().enumerate().map(|(k, v)| v - k as f64 * delta).collect();
    // Sliding-window maximum of b over k in [p-M, p).
    let mut deque: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    let mut times = Vec::new();
    for p in 1..n {
        let k_new = p - 1;
        while deque.back().is_some_and(|&i| b[i] <= b[k_new]) {
            deque.pop_back();
        }
        deque.push_back(k_new);
        let lo = p.saturating_sub(m);
        while deque.front().is_some_and(|&i| i < lo) {
            deque.pop_front();
        }
        if b[p] >= b[*deque.front().expect("window nonempty")] {
            times.push(p);
        }
    }
    Ok(TimeSet { horizon: n, times })
}

/// The dilation `E(M) = {k ≥ 0 : k+m ∈ E for some 1 ≤ m ≤ M}`.
pub fn dilate(e: &TimeSet, m: usize) -> Result<TimeSet> {
    check_window(m, "M")?;
    // Union of the intervals [e-M, e-1] over e in E, merged left to right.
    let mut times = Vec::new();
    let mut next_free = 0usize; // smallest index not yet emitted
    for &t in &e.times {
        if t == 0 {
            continue;
        }
        let lo = t.saturating_sub(m).max(next_free);
        let hi = t - 1;
        if lo <= hi {
            times.extend(lo..=hi);
            next_free = hi + 1;
        }
    }
    Ok(TimeSet {
        horizon: e.horizon,
        times,
    })
}

/// The chained set `E⟨M⟩ = {k : ∃ l,m ∈ E with l ≤ k < m and m−l ≤ M}`.
/// Always a subset of `E(M)`.
pub fn chain(e: &TimeSet, m: usize) -> Result<TimeSet> {
    check_window(m, "M")?;
    // The minimal covering pair of k is the consecutive pair around it, so
    // chaining over consecutive pairs is equivalent to the definition.
    let mut times = Vec::new();
    for w in e.times.windows(2) {
        let (l, r) = (w[0], w[1]);
        if r - l <= m {
            let lo = l.max(times.last().map_or(0, |&t: &usize| t + 1));
            times.extend(lo..r);
        }
    }
    Ok(TimeSet {
        horizon: e.horizon,
        times,
    })
}

/// Maximal integer intervals contained in the set.
pub fn connected_components(e: &TimeSet) -> IntervalDecomposition {
    let mut intervals = Vec::new();
    let mut iter = e.times.iter().copied();
    if let Some(first) = iter.next() {
        let (mut s, mut t) = (first, first);
        for k in iter {
            if k == t + 1 {
                t = k;
            } else {
                intervals.push((s, t));
                s = k;
                t = k;
            }
        }
        intervals.push((s, t));
    }
    IntervalDecomposition { intervals }
}

/// (δ,M)-mildly hyperbolic times: the union over connected components
/// `I = [s, t]` of `F^{δ,M}(M)` of the `δ/2`-hyperbolic times of the
/// restriction `a|_I`, in absolute indices. Within a component, `p` ranges
/// over `(s, t]` (the left endpoint plays the role of index 0 and never
/// qualifies) and the condition is `Σ_{k≤l<p} a_l ≥ (p−k)·δ/2` for all
/// `s ≤ k < p`.
pub fn mildly_hyperbolic_times(a: &RealSequence, delta: f64, m: usize) -> Result<TimeSet> {
    check_delta(delta)?;
    check_window(m, "M")?;
    let f = weakly_hyperbolic_times(a, delta, m)?;
    let fm = dilate(&f, m)?;
    let half = delta / 2.0;
    let s = a.prefix_sums();
    let b: Vec<f64> = s.iter().enumerate().map(|(k, v)| v - k as f64 * half).collect();
    let mut times = Vec::new();
    for &(lo, hi) in connected_components(&fm).intervals() {
        let mut run_max = b[lo];
        for p in lo + 1..=hi {
            if b[p] >= run_max {
                times.push(p);
            }
            run_max = run_max.max(b[p]);
        }
    }
    Ok(TimeSet {
        horizon: a.len(),
        times,
    })
}

/// `G^{δ,M}((N)) = G^{δ,M}(N) ∩ F^{δ,M}(M)` where `G` is the mildly
/// hyperbolic set and `F` the weakly hyperbolic set of `a`.
pub fn g_double(a: &RealSequence, delta: f64, m: usize, n_dilate: usize) -> Result<TimeSet> {
    check_window(n_dilate, "N")?;
    let g = mildly_hyperbolic_times(a, delta, m)?;
    let f = weakly_hyperbolic_times(a, delta, m)?;
    Ok(dilate(&g, n_dilate)?.intersect(&dilate(&f, m)?))
}

/// The boundary `∂F = F Δ (F+1)`; the horizon grows by one so `max(F)+1`
/// stays representable.
pub fn boundary(f: &TimeSet) -> TimeSet {
    let mut times = Vec::new();
    let (mut i, mut j) = (0usize, 0usize); // i walks F, j walks F+1
    while i < f.times.len() || j < f.times.len() {
        let x = f.times.get(i).copied();
        let y = f.times.get(j).map(|&t| t + 1);
        match (x, y) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                times.push(x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                times.push(y);
                j += 1;
            }
            (Some(x), None) => {
                times.push(x);
                i += 1;
            }
            (None, Some(y)) => {
                times.push(y);
                j += 1;
            }
            (None, None) => break,
        }
    }
    TimeSet {
        horizon: f.horizon + 1,
        times,
    }
}

/// Union of the half-open integer intervals `(k, l]` over consecutive pairs
/// `k < l` of `anchors` with `(k, l] ⊆ s`. By transitivity this equals the
/// union over arbitrary anchor pairs.
pub fn interval_refine(s: &TimeSet, anchors: &TimeSet) -> TimeSet {
    let horizon = s.horizon;
    let mut member = vec![false; horizon];
    for &t in &s.times {
        member[t] = true;
    }
    // prefix[i] = #(s ∩ [0, i))
    let mut prefix = vec![0usize; horizon + 1];
    for i in 0..horizon {
        prefix[i + 1] = prefix[i] + usize::from(member[i]);
    }
    let mut keep = vec![false; horizon];
    for w in anchors.times.windows(2) {
        let (k, l) = (w[0], w[1]);
        if l >= horizon {
            continue;
        }
        if prefix[l + 1] - prefix[k + 1] == l - k {
            for slot in keep.iter_mut().take(l + 1).skip(k + 1) {
                *slot = true;
            }
        }
    }
    let times = (0..horizon).filter(|&i| keep[i]).collect();
    TimeSet { horizon, times }
}

/// One connected component of a dilated weak set together with its sum check.
#[derive(Debug, Clone)]
pub struct ComponentSumReport {
    pub interval: (usize, usize),
    pub sum: f64,
    pub required: f64,
}

impl ComponentSumReport {
    pub fn holds(&self) -> bool {
        self.sum >= self.required - 1e-12
    }
}

/// Checks `Σ_{k∈I} a_k ≥ δ·#I` on every connected component `I` of
/// `F^{δ,M}(M)`, the structural fact the mildly hyperbolic construction
/// rests on. Returns one report per component.
pub fn component_sum_reports(
    a: &RealSequence,
    delta: f64,
    m: usize,
) -> Result<Vec<ComponentSumReport>> {
    let fm = dilate(&weakly_hyperbolic_times(a, delta, m)?, m)?;
    let s = a.prefix_sums();
    Ok(connected_components(&fm)
        .intervals()
        .iter()
        .map(|&(lo, hi)| ComponentSumReport {
            interval: (lo, hi),
            sum: s[hi + 1] - s[lo],
            required: delta * (hi - lo + 1) as f64,
        })
        .collect())
}

/// Diagnostic for the two-sided neutral-block estimate: over consecutive
/// hyperbolic times `k < l`, the lower bound `Σ_{k≤l'<l} a_{l'} ≥ (l−k)δ`
/// is definitional, while the upper bound `Σ − (l−k)δ ≤ ‖a‖∞` is only
/// expected. Returns the fraction of consecutive pairs violating the upper
/// half, or `None` when fewer than two hyperbolic times exist.
pub fn neutral_block_excess_rate(a: &RealSequence, delta: f64) -> Result<Option<f64>> {
    let e = hyperbolic_times(a, delta)?;
    if e.len() < 2 {
        return Ok(None);
    }
    let s = a.prefix_sums();
    let sup = a.sup_norm();
    let mut violations = 0usize;
    let mut pairs = 0usize;
    for w in e.times.windows(2) {
        let (k, l) = (w[0], w[1]);
        let excess = (s[l] - s[k]) - (l - k) as f64 * delta;
        pairs += 1;
        if excess > sup + 1e-12 {
            violations += 1;
        }
    }
    Ok(Some(violations as f64 / pairs as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[f64]) -> RealSequence {
        RealSequence::new(values.to_vec()).unwrap()
    }

    fn ts(horizon: usize, times: &[usize]) -> TimeSet {
        TimeSet::new(horizon, times.to_vec()).unwrap()
    }

    #[test]
    fn hyperbolic_constant_sequence() {
        let e = hyperbolic_times(&seq(&[1.0, 1.0, 1.0, 1.0]), 1.0).unwrap();
        assert_eq!(e.times(), &[1, 2, 3]);
    }

    #[test]
    fn hyperbolic_all_negative_is_empty() {
        let e = hyperbolic_times(&seq(&[-1.0, -1.0, -1.0]), 0.5).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn hyperbolic_alternating() {
        let e = hyperbolic_times(&seq(&[2.0, -1.0, 2.0, -1.0, 2.0]), 0.5).unwrap();
        assert_eq!(e.times(), &[1, 3]);
    }

    #[test]
    fn hyperbolic_rejects_bad_delta() {
        assert!(hyperbolic_times(&seq(&[1.0]), 0.0).is_err());
        assert!(hyperbolic_times(&seq(&[1.0]), -1.0).is_err());
    }

    #[test]
    fn weakly_strictly_larger_than_strict_set() {
        let a = seq(&[-1.0, 2.0, 2.0]);
        let f = weakly_hyperbolic_times(&a, 1.0, 1).unwrap();
        assert_eq!(f.times(), &[2]);
        let e = hyperbolic_times(&a, 1.0).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn weakly_equals_hyperbolic_for_large_window() {
        let a = seq(&[0.7, -0.3, 1.4, 0.2, -0.9, 1.1]);
        let e = hyperbolic_times(&a, 0.25).unwrap();
        let f = weakly_hyperbolic_times(&a, 0.25, a.len()).unwrap();
        assert_eq!(e, f);
    }

    #[test]
    fn weakly_window_one_reads_last_entry() {
        let f = weakly_hyperbolic_times(&seq(&[2.0, -1.0, 2.0, -1.0, 2.0]), 0.5, 1).unwrap();
        assert_eq!(f.times(), &[1, 3]);
    }

    #[test]
    fn dilate_enumerated() {
        let e = ts(8, &[1, 3]);
        assert_eq!(dilate(&e, 2).unwrap().times(), &[0, 1, 2]);
        assert_eq!(dilate(&e, 1).unwrap().times(), &[0, 2]);
        assert!(dilate(&TimeSet::empty(8), 3).unwrap().is_empty());
    }

    #[test]
    fn chain_enumerated() {
        let e = ts(10, &[1, 3, 7]);
        assert_eq!(chain(&e, 2).unwrap().times(), &[1, 2]);
        assert!(chain(&ts(10, &[4]), 3).unwrap().is_empty());
        assert_eq!(chain(&ts(8, &[1, 3]), 2).unwrap().times(), &[1, 2]);
    }

    #[test]
    fn components_enumerated() {
        let d = connected_components(&ts(10, &[1, 2, 3, 7, 8]));
        assert_eq!(d.intervals(), &[(1, 3), (7, 8)]);
        assert!(connected_components(&TimeSet::empty(4)).is_empty());
        assert_eq!(connected_components(&ts(6, &[4])).intervals(), &[(4, 4)]);
    }

    #[test]
    fn mildly_constant_sequence() {
        let g = mildly_hyperbolic_times(&seq(&[1.0; 5]), 1.0, 2).unwrap();
        assert_eq!(g.times(), &[1, 2, 3]);
    }

    #[test]
    fn mildly_nonpositive_sequence_is_empty() {
        let g = mildly_hyperbolic_times(&seq(&[-0.5, 0.0, -1.0]), 0.3, 2).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn mildly_alternating_window_one() {
        // F = {1,3}, F(1) = {0,2}: singleton components admit no candidate.
        let g = mildly_hyperbolic_times(&seq(&[2.0, -1.0, 2.0, -1.0, 2.0]), 0.5, 1).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn g_double_constant_sequence() {
        let a = seq(&[1.0; 5]);
        let gg = g_double(&a, 1.0, 2, 1).unwrap();
        assert_eq!(gg.times(), &[0, 1, 2]);
        let f_m = dilate(&weakly_hyperbolic_times(&a, 1.0, 2).unwrap(), 2).unwrap();
        assert!(gg.is_subset_of(&f_m));
    }

    #[test]
    fn g_double_empty_when_no_mild_times() {
        let gg = g_double(&seq(&[-1.0, -1.0]), 0.5, 1, 1).unwrap();
        assert!(gg.is_empty());
    }

    #[test]
    fn density_examples() {
        assert_eq!(ts(6, &[1, 3]).density(4), 0.5);
        assert_eq!(TimeSet::empty(6).density(17), 0.0);
        let full = TimeSet::range(9, 1, 9);
        assert_eq!(full.density(8), 1.0);
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(boundary(&ts(4, &[0, 1, 2])).times(), &[0, 3]);
        assert!(boundary(&TimeSet::empty(4)).is_empty());
        assert_eq!(boundary(&ts(5, &[1, 3])).times(), &[1, 2, 3, 4]);
        assert_eq!(boundary(&ts(4, &[1, 3])).horizon(), 5);
    }

    #[test]
    fn interval_refine_examples() {
        let s = TimeSet::range(11, 1, 11);
        let e = ts(11, &[2, 5, 9]);
        assert_eq!(
            interval_refine(&s, &e).times(),
            &[3, 4, 5, 6, 7, 8, 9]
        );
        assert!(interval_refine(&s, &ts(11, &[4])).is_empty());
        assert!(interval_refine(&TimeSet::empty(11), &e).is_empty());
    }

    #[test]
    fn component_sums_hold_on_alternating_sequence() {
        let reports = component_sum_reports(&seq(&[2.0, -1.0, 2.0, -1.0, 2.0]), 0.5, 1).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.holds()));
    }

    #[test]
    fn neutral_block_rate_zero_for_constant() {
        let rate = neutral_block_excess_rate(&seq(&[1.0; 8]), 0.5).unwrap();
        assert_eq!(rate, Some(0.0));
        let none = neutral_block_excess_rate(&seq(&[-1.0; 4]), 0.5).unwrap();
        assert_eq!(none, None);
    }

    #[test]
    fn timeset_round_trips_through_display() {
        let e = ts(9, &[1, 3, 8]);
        assert_eq!(e.to_string(), "1,3,8");
        let back: TimeSet = "1,3,8".parse().unwrap();
        assert_eq!(back.times(), e.times());
        let empty: TimeSet = "".parse().unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn complement_and_difference() {
        let e = ts(5, &[1, 3]);
        assert_eq!(e.complement().times(), &[0, 2, 4]);
        let f = ts(5, &[1, 2]);
        assert_eq!(e.difference(&f).times(), &[3]);
    }

    #[test]
    fn sequence_csv_parses_rows() {
        let a = RealSequence::from_csv("2,-1,2\n-1,2\n").unwrap();
        assert_eq!(a.values(), &[2.0, -1.0, 2.0, -1.0, 2.0]);
        assert!(RealSequence::from_csv("1,zzz").is_err());
        assert!(RealSequence::from_csv("").is_err());
    }
}
