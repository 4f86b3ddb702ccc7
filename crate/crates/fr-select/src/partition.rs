//! In-place binary, ternary and quintary partition schemes, vector swaps,
//! and the arrangement steps that precede quintary partitioning.
//!
//! All indices are 1-based and segments `x[l:r]` are inclusive. Each scheme
//! counts element comparisons through [`RunCounters::compare`]: one count
//! per three-way comparison, with orderings established by a scan carried
//! into the exchange steps instead of being re-derived (index comparisons
//! are never counted). In debug builds every scheme re-scans its output and
//! asserts the block predicates; `set_debug_verify(false)` turns that off
//! for instrumentation-sensitive tests.

use std::cmp::Ordering::{Equal, Greater, Less};

use crate::counters::RunCounters;

/// Block boundaries produced by a partition, delimiting
/// `< u | = u | between | = v | > v` as `[l,a) [a,b) [b,c] (c,d] (d,r]`.
///
/// Ternary and binary schemes use the compatible encoding `b = d + 1`,
/// `c = a - 1`, which makes the segment-update rules uniform across schemes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionBounds {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl PartitionBounds {
    /// Ternary encoding of a two-pivot-free result: blocks `<v | =v | >v`
    /// at `[l,a) [a,d] (d,r]`.
    pub fn ternary(a: usize, d: usize) -> Self {
        PartitionBounds {
            a,
            b: d + 1,
            c: a - 1,
            d,
        }
    }
}

/// Vector swap `x[a:b] <-> x[b+1:c]`: the first `d = min(b+1-a, c-b)`
/// elements of `x[a:c]` exchange with its last `d` elements, in the fixed
/// order `x_{a+i} <-> x_{c-d+1+i}` for `0 <= i < d`. Empty or reversed
/// ranges (`d <= 0`) are a no-op.
pub fn vector_swap<T>(x: &mut [T], a: usize, b: usize, c: usize) {
    let left = b as i64 + 1 - a as i64;
    let right = c as i64 - b as i64;
    let d = left.min(right);
    if d <= 0 {
        return;
    }
    let d = d as usize;
    debug_assert!(a >= 1 && c <= x.len());
    for i in 0..d {
        x.swap(a - 1 + i, c - d + i);
    }
}

// ---------------------------------------------------------------------------
// Debug-build block verification.

#[cfg(debug_assertions)]
thread_local! {
    static VERIFY_BLOCKS: std::cell::Cell<bool> = const { std::cell::Cell::new(true) };
}

/// Enable or disable the debug-build post-partition block verification on
/// this thread. On by default; release builds never verify.
pub fn set_debug_verify(enabled: bool) {
    #[cfg(debug_assertions)]
    VERIFY_BLOCKS.with(|v| v.set(enabled));
    #[cfg(not(debug_assertions))]
    let _ = enabled;
}

#[cfg(debug_assertions)]
fn debug_verify<T: PartialOrd + Copy>(
    x: &[T],
    l: usize,
    r: usize,
    bounds: &PartitionBounds,
    u: T,
    v: T,
    strict: bool,
) {
    if !VERIFY_BLOCKS.with(|f| f.get()) {
        return;
    }
    let &PartitionBounds { a, b, c, d } = bounds;
    assert!(l <= a && a <= d && d <= r, "bounds out of order: {bounds:?}");
    for m in l..=r {
        let e = x[m - 1];
        let ok = if m < a {
            if strict { e < u } else { e <= u }
        } else if m < b {
            e == u
        } else if m <= c {
            if strict { u < e && e < v } else { u <= e && e <= v }
        } else if m <= d {
            e == v
        } else {
            if strict { e > v } else { e >= v }
        };
        assert!(
            ok,
            "block predicate failed at position {m} (bounds {bounds:?}, strict={strict})"
        );
    }
}

#[cfg(not(debug_assertions))]
#[inline]
fn debug_verify<T: PartialOrd + Copy>(
    _x: &[T],
    _l: usize,
    _r: usize,
    _bounds: &PartitionBounds,
    _u: T,
    _v: T,
    _strict: bool,
) {
}

// ---------------------------------------------------------------------------
// Scheme A: ternary partition with sentinels.

/// Ternary partition of `x[l:r]` around the pivot `v = x_k`: afterwards
/// `x_m < v` on `[l,a)`, `x_m = v` on `[a,d]`, `x_m > v` on `(d,r]`.
///
/// The initialization step places pivot copies so that `x_l <= v <= x_r`;
/// the inner scans then need no index-bounds tests.
pub fn ternary_a<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    debug_assert!(1 <= l && l <= k && k <= r && r <= x.len());
    debug_assert!(l < r, "ternary_a needs a segment of at least 2 elements");
    // A1: pivot to the left end, sentinel at the right end.
    let v = x[k - 1];
    x.swap(l - 1, k - 1);
    let mut lbar = l;
    let mut rbar = r;
    match ctr.compare(&v, &x[r - 1]) {
        Less => rbar = r - 1,
        Greater => {
            x.swap(l - 1, r - 1);
            lbar = l + 1;
        }
        Equal => {}
    }
    let bounds = a_core(x, lbar, l + 1, r - 1, rbar, v, ctr);
    debug_verify(x, l, r, &bounds, v, v, true);
    bounds
}

/// Scan/exchange/cleanup core of the ternary scheme (steps A2-A5), shared
/// with the single-pivot path of the main selection loop where the
/// initialization step is skipped. Equal-to-pivot elements are parked in
/// `[lbar, p)` and `(q, rbar]` and swapped into the middle by the cleanup.
pub(crate) fn a_core<T: PartialOrd + Copy>(
    x: &mut [T],
    lbar: usize,
    p0: usize,
    q0: usize,
    rbar: usize,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    let (mut p, mut q) = (p0, q0);
    let (mut i, mut j) = (p0 - 1, q0 + 1);
    loop {
        // A2: advance i to the next element >= v.
        let ord_i = loop {
            i += 1;
            let o = ctr.compare(&x[i - 1], &v);
            if o != Less {
                break o;
            }
        };
        // A3: retreat j to the next element <= v.
        let ord_j = loop {
            j -= 1;
            let o = ctr.compare(&x[j - 1], &v);
            if o != Greater {
                break o;
            }
        };
        if i < j {
            // A4: exchange; park pivot copies using the scan orderings.
            x.swap(i - 1, j - 1);
            if ord_j == Equal {
                x.swap(i - 1, p - 1);
                p += 1;
            }
            if ord_i == Equal {
                x.swap(j - 1, q - 1);
                q -= 1;
            }
        } else {
            if i == j {
                i += 1;
                j -= 1;
            }
            break;
        }
    }
    debug_assert!(i <= rbar + 1 && j + 1 >= lbar, "scan overran its sentinels");
    // A5: swap the parked pivot blocks into the middle.
    let a = (lbar + j + 1) - p;
    let d = (rbar + i - 1) - q;
    vector_swap(x, lbar, p - 1, j);
    vector_swap(x, i, q, rbar);
    PartitionBounds::ternary(a, d)
}

// ---------------------------------------------------------------------------
// Preparing for quintary partitions.

/// Boundaries of the arrangement produced by [`prepare_quintary`]:
/// `<u` on `[l, lbar)`, `=u` on `[lbar, pbar)`, `u<x<v` on `[pbar, p)`,
/// unexamined on `[p, qbar]`, `=v` on `(qbar, rbar]`, `>v` on `(rbar, r]`.
#[derive(Clone, Copy, Debug)]
pub struct QuintaryPrep {
    pub l: usize,
    pub r: usize,
    pub lbar: usize,
    pub pbar: usize,
    pub p: usize,
    pub qbar: usize,
    pub rbar: usize,
}

/// Rearrange `x[l:r]` whose sample prefix `x[l:r_s]` is already partitioned
/// into `<u | =u | u<x<v | =v | >v` blocks (bounded by the two equal-ranges
/// `[ku_minus, ku_plus]` and `[kv_minus, kv_plus]`) so that the unexamined
/// elements sit between the `u<x<v` block and the `=v` block.
pub fn prepare_quintary<T>(
    x: &mut [T],
    l: usize,
    r: usize,
    r_s: usize,
    ku_minus: usize,
    ku_plus: usize,
    kv_minus: usize,
    kv_plus: usize,
) -> QuintaryPrep {
    debug_assert!(l <= ku_minus && ku_minus <= ku_plus + 1);
    debug_assert!(ku_plus < kv_minus && kv_minus <= kv_plus && kv_plus <= r_s && r_s <= r);
    let lbar = ku_minus;
    let pbar = ku_plus + 1;
    let rbar = r - r_s + kv_plus;
    let qbar = (rbar + kv_minus - 1) - kv_plus;
    vector_swap(x, kv_plus + 1, r_s, r);
    vector_swap(x, kv_minus, kv_plus, rbar);
    QuintaryPrep {
        l,
        r,
        lbar,
        pbar,
        p: kv_minus,
        qbar,
        rbar,
    }
}

// ---------------------------------------------------------------------------
// Scheme B: quintary partition comparing against v first (k left of middle).

/// Quintary partition of the prepared arrangement around `u < v`, comparing
/// each unexamined element to `v` first and to `u` only when it is smaller.
pub fn quintary_b<T: PartialOrd + Copy>(
    x: &mut [T],
    prep: &QuintaryPrep,
    u: T,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    let mut pbar = prep.pbar;
    let mut p = prep.p;
    let mut q = prep.qbar;
    let mut i = p - 1;
    let mut j = q + 1;
    loop {
        // B2: advance i to the next element >= v; smaller elements equal to
        // u chain-park into the =u block, ones between u and v park at p.
        let ord_i = loop {
            i += 1;
            let o = ctr.compare(&x[i - 1], &v);
            if o != Less {
                break o;
            }
            match ctr.compare(&x[i - 1], &u) {
                Less => {}
                Equal => {
                    x.swap(i - 1, p - 1);
                    x.swap(p - 1, pbar - 1);
                    pbar += 1;
                    p += 1;
                }
                Greater => {
                    x.swap(i - 1, p - 1);
                    p += 1;
                }
            }
        };
        // B3: retreat j to the next element < v, parking =v elements at q.
        loop {
            j -= 1;
            match ctr.compare(&x[j - 1], &v) {
                Greater => {}
                Equal => {
                    x.swap(j - 1, q - 1);
                    q -= 1;
                }
                Less => break,
            }
        }
        // B4: exchange and re-park; the swapped-in right element keeps the
        // ordering from B2, the left one still needs its u-comparison.
        if i >= j {
            break;
        }
        x.swap(i - 1, j - 1);
        match ctr.compare(&x[i - 1], &u) {
            Less => {}
            Equal => {
                x.swap(i - 1, p - 1);
                x.swap(p - 1, pbar - 1);
                pbar += 1;
                p += 1;
            }
            Greater => {
                x.swap(i - 1, p - 1);
                p += 1;
            }
        }
        if ord_i == Equal {
            x.swap(j - 1, q - 1);
            q -= 1;
        }
    }
    let bounds = b_cleanup(x, prep, pbar, p, q, i, j);
    debug_verify(x, prep.l, prep.r, &bounds, u, v, true);
    bounds
}

/// Step B5/D5: shared cleanup of schemes B and D.
fn b_cleanup<T>(
    x: &mut [T],
    prep: &QuintaryPrep,
    pbar: usize,
    p: usize,
    q: usize,
    i: usize,
    j: usize,
) -> PartitionBounds {
    let a = (prep.lbar + j + 1) - p;
    let b = (pbar + i) - p;
    let c = j;
    let d = (prep.rbar + i - 1) - q;
    vector_swap(x, pbar, p - 1, j);
    vector_swap(x, prep.lbar, pbar - 1, b - 1);
    vector_swap(x, i, q, prep.rbar);
    PartitionBounds { a, b, c, d }
}

// ---------------------------------------------------------------------------
// Scheme C: symmetric quintary partition comparing against u first.

/// Quintary partition of the prepared arrangement around `u < v`, comparing
/// each unexamined element to `u` first and to `v` only when it is larger.
pub fn quintary_c<T: PartialOrd + Copy>(
    x: &mut [T],
    prep: &QuintaryPrep,
    u: T,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    // C1: move the u<x<v block next to the =v block.
    let mut p = prep.pbar;
    let mut qbar = prep.qbar;
    let mut q = (qbar + prep.pbar) - prep.p;
    vector_swap(x, prep.pbar, prep.p - 1, prep.qbar);
    let mut i = p - 1;
    let mut j = q + 1;
    loop {
        // C2: advance i to the next element > u, parking =u elements at p.
        loop {
            i += 1;
            match ctr.compare(&x[i - 1], &u) {
                Less => {}
                Equal => {
                    x.swap(i - 1, p - 1);
                    p += 1;
                }
                Greater => break,
            }
        }
        // C3: retreat j to the next element <= u; larger elements equal to v
        // chain-park into the =v block, ones between u and v park at q.
        let ord_j = loop {
            j -= 1;
            let o = ctr.compare(&x[j - 1], &u);
            if o != Greater {
                break o;
            }
            match ctr.compare(&x[j - 1], &v) {
                Greater => {}
                Equal => {
                    x.swap(j - 1, q - 1);
                    x.swap(q - 1, qbar - 1);
                    qbar -= 1;
                    q -= 1;
                }
                Less => {
                    x.swap(j - 1, q - 1);
                    q -= 1;
                }
            }
        };
        // C4: exchange and re-park; the swapped-in left element keeps the
        // ordering from C3, the right one still needs its v-comparison.
        if i >= j {
            break;
        }
        x.swap(i - 1, j - 1);
        if ord_j == Equal {
            x.swap(i - 1, p - 1);
            p += 1;
        }
        match ctr.compare(&x[j - 1], &v) {
            Greater => {}
            Equal => {
                x.swap(j - 1, q - 1);
                x.swap(q - 1, qbar - 1);
                qbar -= 1;
                q -= 1;
            }
            Less => {
                x.swap(j - 1, q - 1);
                q -= 1;
            }
        }
    }
    // C5.
    let a = (prep.lbar + j + 1) - p;
    let b = i;
    let c = (qbar + j) - q;
    let d = (prep.rbar + i - 1) - q;
    vector_swap(x, i, q, qbar);
    vector_swap(x, c + 1, qbar, prep.rbar);
    vector_swap(x, prep.lbar, p - 1, j);
    let bounds = PartitionBounds { a, b, c, d };
    debug_verify(x, prep.l, prep.r, &bounds, u, v, true);
    bounds
}

// ---------------------------------------------------------------------------
// Scheme D: alternative to B that trades sentinel comparisons for index
// tests. Used for cross-validation; the selection driver prefers B/C.

/// Same contract as [`quintary_b`]; saves the two sentinel v-comparisons at
/// the cost of `i`-vs-`j` index tests.
pub fn quintary_d<T: PartialOrd + Copy>(
    x: &mut [T],
    prep: &QuintaryPrep,
    u: T,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    let mut pbar = prep.pbar;
    let mut p = prep.p;
    let mut q = prep.qbar;
    let mut i = p;
    let mut j = q;
    loop {
        // D2.
        let mut ord_i = None;
        while i <= j {
            let o = ctr.compare(&x[i - 1], &v);
            if o != Less {
                ord_i = Some(o);
                break;
            }
            match ctr.compare(&x[i - 1], &u) {
                Less => {}
                Equal => {
                    x.swap(i - 1, p - 1);
                    x.swap(p - 1, pbar - 1);
                    pbar += 1;
                    p += 1;
                }
                Greater => {
                    x.swap(i - 1, p - 1);
                    p += 1;
                }
            }
            i += 1;
        }
        // D3.
        while i <= j {
            let o = ctr.compare(&x[j - 1], &v);
            if o == Less {
                break;
            }
            if o == Equal {
                x.swap(j - 1, q - 1);
                q -= 1;
            }
            j -= 1;
        }
        // D4.
        if i >= j {
            break;
        }
        x.swap(i - 1, j - 1);
        match ctr.compare(&x[i - 1], &u) {
            Less => {}
            Equal => {
                x.swap(i - 1, p - 1);
                x.swap(p - 1, pbar - 1);
                pbar += 1;
                p += 1;
            }
            Greater => {
                x.swap(i - 1, p - 1);
                p += 1;
            }
        }
        if ord_i == Some(Equal) {
            x.swap(j - 1, q - 1);
            q -= 1;
        }
        i += 1;
        j -= 1;
    }
    let bounds = b_cleanup(x, prep, pbar, p, q, i, j);
    debug_verify(x, prep.l, prep.r, &bounds, u, v, true);
    bounds
}

// ---------------------------------------------------------------------------
// Scheme E: binary partition with weak inequalities.

/// Binary partition of `x[l:r]` around `v = x_k`: afterwards `x_m <= v` on
/// `[l,a)`, `x_m = v` on `[a,d]`, `v <= x_m` on `(d,r]`; usually `a = d`.
pub fn binary_e<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    debug_assert!(1 <= l && l <= k && k <= r && r <= x.len());
    debug_assert!(l < r, "binary_e needs a segment of at least 2 elements");
    // E1.
    let v = x[k - 1];
    x.swap(l - 1, k - 1);
    let mut phat = l;
    if ctr.compare(&v, &x[r - 1]) == Greater {
        x.swap(l - 1, r - 1);
        phat = r;
    }
    let (i, j) = e_scan(x, l, r, v, ctr);
    // E5.
    let (a, d) = if phat != r {
        x.swap(phat - 1, j - 1);
        (j, i - 1)
    } else {
        x.swap(i - 1, phat - 1);
        (j + 1, i)
    };
    let bounds = PartitionBounds::ternary(a, d);
    debug_verify(x, l, r, &bounds, v, v, false);
    bounds
}

/// Steps E2-E4: Hoare scans with sentinels assumed at both ends.
fn e_scan<T: PartialOrd + Copy>(
    x: &mut [T],
    i0: usize,
    j0: usize,
    v: T,
    ctr: &mut RunCounters,
) -> (usize, usize) {
    let mut i = i0;
    let mut j = j0;
    loop {
        loop {
            i += 1;
            if ctr.compare(&x[i - 1], &v) != Less {
                break;
            }
        }
        loop {
            j -= 1;
            if ctr.compare(&x[j - 1], &v) != Greater {
                break;
            }
        }
        if i < j {
            x.swap(i - 1, j - 1);
        } else {
            if i == j {
                i += 1;
                j -= 1;
            }
            return (i, j);
        }
    }
}

/// Scheme E with the initialization omitted, running on the poor man's
/// prepared arrangement (`u = v` case): the pivot already sits at `rbar`
/// and the `[lbar, p)` block holds only pivot-equal elements.
pub(crate) fn pm_binary_core<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    lbar: usize,
    p: usize,
    rbar: usize,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    let (i, j) = e_scan(x, p - 1, rbar, v, ctr);
    // Modified E5: cleanup as in A5 with q = rbar - 1.
    let a = (lbar + j + 1) - p;
    let d = i;
    vector_swap(x, lbar, p - 1, j);
    x.swap(d - 1, rbar - 1);
    let bounds = PartitionBounds::ternary(a, d);
    debug_verify(x, l, r, &bounds, v, v, false);
    bounds
}

// ---------------------------------------------------------------------------
// Schemes F and G: poor man's quintary partitions.

/// Poor man's quintary partition (v-first direction) of the arrangement
/// `x<=u .. u | u<=x<=v | ? | v | x>=v ..` bounded by `(lbar, p, rbar)`.
/// Weak block inequalities; the `=u`/`=v` blocks of the result are the
/// singletons `{a}` and `{d}`.
pub fn pm_quintary_f<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    lbar: usize,
    p0: usize,
    rbar: usize,
    u: T,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    let mut p = p0;
    let mut i = p - 1;
    let mut j = rbar;
    loop {
        // F2: advance i to the next element >= v, parking u<x<v at p.
        loop {
            i += 1;
            if ctr.compare(&x[i - 1], &v) != Less {
                break;
            }
            if ctr.compare(&x[i - 1], &u) == Greater {
                x.swap(i - 1, p - 1);
                p += 1;
            }
        }
        // F3: retreat j to the next element < v.
        loop {
            j -= 1;
            if ctr.compare(&x[j - 1], &v) == Less {
                break;
            }
        }
        // F4.
        if i >= j {
            break;
        }
        x.swap(i - 1, j - 1);
        if ctr.compare(&x[i - 1], &u) == Greater {
            x.swap(i - 1, p - 1);
            p += 1;
        }
    }
    // F5.
    let a = (lbar + i) - p;
    let b = a + 1;
    let c = j;
    let d = j + 1;
    vector_swap(x, lbar + 1, p - 1, j);
    x.swap(lbar - 1, a - 1);
    x.swap(d - 1, rbar - 1);
    let bounds = PartitionBounds { a, b, c, d };
    debug_verify(x, l, r, &bounds, u, v, false);
    bounds
}

/// Symmetric version of [`pm_quintary_f`] (u-first direction).
pub fn pm_quintary_g<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    lbar: usize,
    p0: usize,
    rbar: usize,
    u: T,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    // G1: move the u<=x<=v block next to the pivot copy at rbar.
    let mut q = (lbar + rbar) - p0;
    let mut i = lbar;
    let mut j = q + 1;
    vector_swap(x, lbar + 1, p0 - 1, rbar - 1);
    loop {
        // G2: advance i to the next element > u.
        loop {
            i += 1;
            if ctr.compare(&x[i - 1], &u) == Greater {
                break;
            }
        }
        // G3: retreat j to the next element <= u, parking u<x<v at q.
        loop {
            j -= 1;
            if ctr.compare(&x[j - 1], &u) != Greater {
                break;
            }
            if ctr.compare(&x[j - 1], &v) == Less {
                x.swap(j - 1, q - 1);
                q -= 1;
            }
        }
        // G4.
        if i >= j {
            break;
        }
        x.swap(i - 1, j - 1);
        if ctr.compare(&x[j - 1], &v) == Less {
            x.swap(j - 1, q - 1);
            q -= 1;
        }
    }
    // G5.
    let a = j;
    let b = a + 1;
    let d = (rbar + j) - q;
    let c = d - 1;
    x.swap(lbar - 1, a - 1);
    vector_swap(x, i, q, rbar - 1);
    x.swap(d - 1, rbar - 1);
    let bounds = PartitionBounds { a, b, c, d };
    debug_verify(x, l, r, &bounds, u, v, false);
    bounds
}
