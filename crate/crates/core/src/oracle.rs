//! Definitional reference implementations of the time-set operations.
//!
//! Every function here evaluates its definition by direct enumeration over
//! raw slices, sharing no code with the fast paths in [`crate::timesets`].
//! The property suites compare the two implementations for exact equality.

/// δ-hyperbolic times by triple loop over `(p, k, l)`.
pub fn hyperbolic_times(values: &[f64], delta: f64) -> Vec<usize> {
    let n = values.len();
    let mut out = Vec::new();
    for p in 1..n {
        let mut ok = true;
        for k in 0..p {
            let mut sum = 0.0;
            for v in &values[k..p] {
                sum += v;
            }
            if sum < (p - k) as f64 * delta {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(p);
        }
    }
    out
}

/// (δ,M)-weakly hyperbolic times, window restricted to the last `m` steps.
pub fn weakly_hyperbolic_times(values: &[f64], delta: f64, m: usize) -> Vec<usize> {
    let n = values.len();
    let mut out = Vec::new();
    for p in 1..n {
        let mut ok = true;
        for k in p.saturating_sub(m)..p {
            let mut sum = 0.0;
            for v in &values[k..p] {
                sum += v;
            }
            if sum < (p - k) as f64 * delta {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(p);
        }
    }
    out
}

/// `E(M)` by scanning every `k` in `[0, horizon)` against every offset.
pub fn dilate(set: &[usize], m: usize, horizon: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 0..horizon {
        let mut hit = false;
        for offset in 1..=m {
            if set.contains(&(k + offset)) {
                hit = true;
                break;
            }
        }
        if hit {
            out.push(k);
        }
    }
    out
}

/// `E⟨M⟩` by scanning every `k` against every pair `(l, m)` of set elements.
pub fn chain(set: &[usize], m: usize, horizon: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for k in 0..horizon {
        let mut hit = false;
        'pairs: for &l in set {
            for &r in set {
                if l <= k && k < r && r - l <= m {
                    hit = true;
                    break 'pairs;
                }
            }
        }
        if hit {
            out.push(k);
        }
    }
    out
}

/// Maximal integer intervals by membership scanning.
pub fn connected_components(set: &[usize], horizon: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut k = 0usize;
    while k < horizon {
        if set.contains(&k) {
            let s = k;
            while k + 1 < horizon && set.contains(&(k + 1)) {
                k += 1;
            }
            out.push((s, k));
        }
        k += 1;
    }
    out
}

/// (δ,M)-mildly hyperbolic times by the two-stage definition.
pub fn mildly_hyperbolic_times(values: &[f64], delta: f64, m: usize) -> Vec<usize> {
    let n = values.len();
    let f = weakly_hyperbolic_times(values, delta, m);
    let fm = dilate(&f, m, n);
    let half = delta / 2.0;
    let mut out = Vec::new();
    for (s, t) in connected_components(&fm, n) {
        for p in s + 1..=t {
            let mut ok = true;
            for k in s..p {
                let mut sum = 0.0;
                for v in &values[k..p] {
                    sum += v;
                }
                if sum < (p - k) as f64 * half {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push(p);
            }
        }
    }
    out
}

/// `G((N)) = G(N) ∩ F(M)` assembled from the definitional pieces.
pub fn g_double(values: &[f64], delta: f64, m: usize, n_dilate: usize) -> Vec<usize> {
    let n = values.len();
    let g = mildly_hyperbolic_times(values, delta, m);
    let f = weakly_hyperbolic_times(values, delta, m);
    let gn = dilate(&g, n_dilate, n);
    let fm = dilate(&f, m, n);
    gn.into_iter().filter(|k| fm.contains(k)).collect()
}

/// `F Δ (F+1)` by membership tests over `[0, horizon]`.
pub fn boundary(set: &[usize], horizon: usize) -> Vec<usize> {
    let shifted: Vec<usize> = set.iter().map(|&t| t + 1).collect();
    let mut out = Vec::new();
    for k in 0..=horizon {
        let in_f = set.contains(&k);
        let in_shift = shifted.contains(&k);
        if in_f != in_shift {
            out.push(k);
        }
    }
    out
}

/// Union of `(k, l]` over arbitrary pairs `k < l` of anchors with
/// `(k, l] ⊆ s` — the raw definition, before the consecutive-pair reduction.
pub fn interval_refine(s: &[usize], horizon: usize, anchors: &[usize]) -> Vec<usize> {
    let mut keep = vec![false; horizon];
    for (i, &k) in anchors.iter().enumerate() {
        for &l in &anchors[i + 1..] {
            if l >= horizon {
                continue;
            }
            if (k + 1..=l).all(|j| s.contains(&j)) {
                for slot in keep.iter_mut().take(l + 1).skip(k + 1) {
                    *slot = true;
                }
            }
        }
    }
    (0..horizon).filter(|&i| keep[i]).collect()
}

/// `#(E ∩ [1, n]) / n` by counting.
pub fn density(set: &[usize], n: usize) -> f64 {
    let count = set.iter().filter(|&&t| t >= 1 && t <= n).count();
    count as f64 / n as f64
}
