//! The sampling-based selection driver, its small-segment routine, and the
//! poor man's (binary-partition) variant.
//!
//! `select` finds the k-th smallest element of `x[l:r]` (1-based, inclusive)
//! and returns the equal range certifying it. Tail recursion is replaced by
//! a loop; the two sample-selection calls remain genuine recursive calls on
//! disjoint subsegments.

use crate::counters::RunCounters;
use crate::partition::{
    a_core, binary_e, pm_binary_core, pm_quintary_f, pm_quintary_g, prepare_quintary, quintary_b,
    quintary_c, ternary_a, PartitionBounds, QuintaryPrep,
};
use crate::rng::SplitMix64;
use crate::sampling::{pivot_ranks, place_sample, SampleStrategy};

/// Equal range `[k_minus, k_plus]` certifying the k-th order statistic:
/// after a call, `x_i < x_k` for `l <= i < k_minus`, `x_i = x_k` on
/// `[k_minus, k_plus]`, and `x_i > x_k` for `k_plus < i <= r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelectionResult {
    pub k_minus: usize,
    pub k_plus: usize,
}

/// Configuration for [`select`] and [`pmselect`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelectConfig {
    pub strategy: SampleStrategy,
    /// Collapse to a single pivot when a rank clamp fires (on by default;
    /// disable for ablation runs).
    pub single_pivot_reset: bool,
}

impl Default for SelectConfig {
    fn default() -> Self {
        SelectConfig {
            strategy: SampleStrategy::default(),
            single_pivot_reset: true,
        }
    }
}

/// Segment-update rules shared by every driver: given partition blocks
/// `[l,a) [a,b) [b,c] (c,d] (d,r]`, shrink `[l, r]` around rank `k`.
/// Afterwards `l > r` encodes "k landed in a pivot block" with the block
/// being `[r+1, l-1]`, and `l = r` means a single candidate remains.
#[inline]
fn apply_bounds(bounds: &PartitionBounds, k: usize, l: &mut usize, r: &mut usize) {
    if bounds.a <= k {
        *l = bounds.b;
    }
    if bounds.c < k {
        *l = bounds.d + 1;
    }
    if k <= bounds.d {
        *r = bounds.c;
    }
    if k < bounds.b {
        *r = bounds.a - 1;
    }
}

#[inline]
fn finished(l: usize, r: usize, k: usize) -> Option<SelectionResult> {
    if l == r {
        debug_assert_eq!(l, k);
        Some(SelectionResult {
            k_minus: k,
            k_plus: k,
        })
    } else if l > r {
        Some(SelectionResult {
            k_minus: r + 1,
            k_plus: l - 1,
        })
    } else {
        None
    }
}

/// Find the k-th smallest element of `x[l:r]` and return its equal range.
///
/// Panics on invalid ranks. With a fixed seed the permutation performed and
/// every counter are deterministic.
pub fn select<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    cfg: &SelectConfig,
    ctr: &mut RunCounters,
    rng: &mut SplitMix64,
) -> SelectionResult {
    let (res, _) = select_with_stages(x, l, r, k, cfg, ctr, rng);
    res
}

/// Like [`select`], additionally reporting how many sample-and-partition
/// stages the outermost loop performed.
pub fn select_with_stages<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    cfg: &SelectConfig,
    ctr: &mut RunCounters,
    rng: &mut SplitMix64,
) -> (SelectionResult, usize) {
    assert!(
        1 <= l && l <= k && k <= r && r <= x.len(),
        "select needs 1 <= l <= k <= r <= n (got l={l}, k={k}, r={r}, n={})",
        x.len()
    );
    select_loop(x, l, r, k, cfg, ctr, rng)
}

fn select_loop<T: PartialOrd + Copy>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    cfg: &SelectConfig,
    ctr: &mut RunCounters,
    rng: &mut SplitMix64,
) -> (SelectionResult, usize) {
    let mut stages = 0usize;
    loop {
        debug_assert!(l <= k && k <= r);
        let m = r - l + 1;
        // Step 0: small segments go to the ternary small-select routine.
        if m <= cfg.strategy.n_cut {
            return (sselect(x, l, r, k, ctr), stages);
        }
        stages += 1;
        // Steps 1-2: choose the sample size and gap, sample in place.
        let (s, g) = cfg.strategy.sample_and_gap(m);
        ctr.sample_size_sum += s as u64;
        place_sample(x, l, r, s, rng);
        let r_s = l + s - 1;
        // Step 3: select the pivots inside the sample prefix.
        let (k_u, k_v) = pivot_ranks(k, l, r, s, g, cfg.single_pivot_reset);
        let u_res = select_loop(x, l, r_s, k_u, cfg, ctr, rng).0;
        let (ku_minus, mut ku_plus) = (u_res.k_minus, u_res.k_plus);
        let u = x[ku_minus - 1];
        let (kv_minus, kv_plus, single_pivot);
        if ku_plus >= k_v {
            // v = u: split u's equal range at k_v instead of recursing again.
            kv_minus = k_v;
            kv_plus = ku_plus;
            ku_plus = k_v - 1;
            single_pivot = true;
        } else {
            let v_res = select_loop(x, ku_plus + 1, r_s, k_v, cfg, ctr, rng).0;
            kv_minus = v_res.k_minus;
            kv_plus = v_res.k_plus;
            single_pivot = false;
        }
        let v = x[kv_minus - 1];
        // Step 4: arrange and partition. Only elements outside the sample
        // are compared to the pivots; the sample is already in place.
        let prep = prepare_quintary(x, l, r, r_s, ku_minus, ku_plus, kv_minus, kv_plus);
        ctr.select_partitions += 1;
        ctr.partition_size_sum += m as u64;
        let bounds = if single_pivot {
            single_pivot_partition(x, &prep, v, ctr)
        } else if k < (r + l) / 2 {
            quintary_b(x, &prep, u, v, ctr)
        } else {
            quintary_c(x, &prep, u, v, ctr)
        };
        // Steps 5-6: shrink the segment around k.
        apply_bounds(&bounds, k, &mut l, &mut r);
        if let Some(res) = finished(l, r, k) {
            return (res, stages);
        }
        // Step 7: loop.
    }
}

/// Ternary partition of a prepared arrangement whose two pivots coincide:
/// scheme A with the initialization omitted, the `=u` block serving as the
/// left pivot park and the `=v` block as the right one.
fn single_pivot_partition<T: PartialOrd + Copy>(
    x: &mut [T],
    prep: &QuintaryPrep,
    v: T,
    ctr: &mut RunCounters,
) -> PartitionBounds {
    debug_assert_eq!(prep.pbar, prep.p, "no strictly-between block when u = v");
    if prep.p > prep.l {
        // Elements left of the unexamined block are <= v, so the backward
        // scan has a sentinel and the forward scan stops in the =v block.
        a_core(x, prep.lbar, prep.p, prep.qbar, prep.rbar, v, ctr)
    } else {
        // Degenerate case (possible only with tiny gaps, e.g. stress
        // configurations with n_cut = 1): nothing lies left of the
        // unexamined block, so no sentinel exists. Fall back to the full
        // ternary scheme on [l, rbar] with a pivot copy from the =v block.
        ternary_a(x, prep.l, prep.rbar, prep.qbar + 1, ctr)
    }
}

/// Small-segment selection: a loop of ternary partitions with the pivot
/// taken from position k, sharing `select`'s segment-update rules.
pub fn sselect<T: PartialOrd + Copy>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    ctr: &mut RunCounters,
) -> SelectionResult {
    assert!(
        1 <= l && l <= k && k <= r && r <= x.len(),
        "sselect needs 1 <= l <= k <= r <= n"
    );
    ctr.sselect_calls += 1;
    loop {
        if let Some(res) = finished(l, r, k) {
            return res;
        }
        ctr.sselect_partitions += 1;
        ctr.partition_size_sum += (r - l + 1) as u64;
        let bounds = ternary_a(x, l, r, k, ctr);
        apply_bounds(&bounds, k, &mut l, &mut r);
    }
}

/// Small-segment routine of the poor man's variant: binary partitions with
/// the pivot taken from position k. Standard (weak) contract only.
fn pm_sselect<T: PartialOrd + Copy>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    ctr: &mut RunCounters,
) {
    ctr.sselect_calls += 1;
    loop {
        if l >= r {
            return;
        }
        ctr.sselect_partitions += 1;
        ctr.partition_size_sum += (r - l + 1) as u64;
        let bounds = binary_e(x, l, r, k, ctr);
        apply_bounds(&bounds, k, &mut l, &mut r);
    }
}

/// Poor man's selection: same sampling plan as [`select`] but with binary
/// and weak quintary partitions and no equal-range bookkeeping. Afterwards
/// `x_i <= x_k` for `l <= i < k` and `x_k <= x_i` for `k < i <= r`.
pub fn pmselect<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    cfg: &SelectConfig,
    ctr: &mut RunCounters,
    rng: &mut SplitMix64,
) {
    assert!(
        1 <= l && l <= k && k <= r && r <= x.len(),
        "pmselect needs 1 <= l <= k <= r <= n (got l={l}, k={k}, r={r}, n={})",
        x.len()
    );
    pm_loop(x, l, r, k, cfg, ctr, rng);
}

fn pm_loop<T: PartialOrd + Copy>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    cfg: &SelectConfig,
    ctr: &mut RunCounters,
    rng: &mut SplitMix64,
) {
    // Weak partitions shrink the segment by at least one element per stage,
    // but duplicate-heavy inputs get no contraction guarantee from the
    // sample bounds; the iteration cap is termination insurance that hands
    // degenerate segments to the small-segment routine.
    let n0 = r - l + 1;
    let cap = 4 * (usize::BITS - (n0 - 1).leading_zeros()).max(1) as usize;
    let mut iters = 0usize;
    loop {
        if l >= r {
            return;
        }
        let m = r - l + 1;
        if m <= cfg.strategy.n_cut {
            return pm_sselect(x, l, r, k, ctr);
        }
        iters += 1;
        if iters > cap {
            return pm_sselect(x, l, r, k, ctr);
        }
        let (s, g) = cfg.strategy.sample_and_gap(m);
        ctr.sample_size_sum += s as u64;
        place_sample(x, l, r, s, rng);
        let r_s = l + s - 1;
        let (k_u, k_v) = pivot_ranks(k, l, r, s, g, cfg.single_pivot_reset);
        pm_loop(x, l, r_s, k_u, cfg, ctr, rng);
        let u = x[k_u - 1];
        let v = if k_u < k_v {
            pm_loop(x, k_u + 1, r_s, k_v, cfg, ctr, rng);
            x[k_v - 1]
        } else {
            u
        };
        ctr.select_partitions += 1;
        ctr.partition_size_sum += m as u64;
        // Rearrange: unexamined elements move between the sample's upper
        // part and the pivot copy of v, which lands at rbar.
        let lbar = k_u;
        let p = k_v;
        let rbar = r - r_s + p;
        crate::partition::vector_swap(x, p + 1, r_s, r);
        x.swap(p - 1, rbar - 1);
        let single_pivot = k_u == k_v || ctr.compare(&u, &v) == std::cmp::Ordering::Equal;
        let bounds = if single_pivot {
            if p > l {
                pm_binary_core(x, l, r, lbar, p, rbar, v, ctr)
            } else {
                // Nothing lies left of the scan region (possible only with
                // tiny gaps, e.g. n_cut = 1), so the backward scan has no
                // sentinel; run the full binary scheme with the pivot copy
                // that the preparation step parked at rbar.
                binary_e(x, l, rbar, rbar, ctr)
            }
        } else if k < (r + l) / 2 {
            pm_quintary_f(x, l, r, lbar, p, rbar, u, v, ctr)
        } else {
            pm_quintary_g(x, l, r, lbar, p, rbar, u, v, ctr)
        };
        apply_bounds(&bounds, k, &mut l, &mut r);
    }
}
