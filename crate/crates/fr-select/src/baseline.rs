//! Quickselect baseline: median-of-3 pivots with the sorted-median
//! partitioning variant, falling back to random pivot candidates only when
//! the segment stops shrinking fast enough.

use crate::counters::RunCounters;
use crate::partition::binary_e;
use crate::rng::SplitMix64;

/// Configuration for [`riselect`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RiConfig {
    /// A partition must shrink the segment below this fraction of its
    /// previous size, or the next round exchanges the three pivot
    /// candidates with randomly chosen elements.
    pub shrink_factor: f64,
}

impl Default for RiConfig {
    fn default() -> Self {
        // Chosen so median-of-3-friendly inputs never randomize while
        // adversarial stalls trigger within a few rounds.
        RiConfig {
            shrink_factor: 15.0 / 16.0,
        }
    }
}

/// Sort the three candidate positions in place so the partition scans have
/// sentinels on both ends and the pivot sits in the middle.
fn sort3<T: PartialOrd + Copy>(
    x: &mut [T],
    a: usize,
    b: usize,
    c: usize,
    ctr: &mut RunCounters,
) {
    use std::cmp::Ordering::Less;
    if ctr.compare(&x[b - 1], &x[a - 1]) == Less {
        x.swap(a - 1, b - 1);
    }
    if ctr.compare(&x[c - 1], &x[b - 1]) == Less {
        x.swap(b - 1, c - 1);
        if ctr.compare(&x[b - 1], &x[a - 1]) == Less {
            x.swap(a - 1, b - 1);
        }
    }
}

/// Quickselect with median-of-first/middle/last pivots: afterwards
/// `x_i <= x_k` for `l <= i < k` and `x_k <= x_i` for `k < i <= r`.
pub fn riselect<T: PartialOrd + Copy>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    cfg: &RiConfig,
    ctr: &mut RunCounters,
    rng: &mut SplitMix64,
) {
    assert!(
        1 <= l && l <= k && k <= r && r <= x.len(),
        "riselect needs 1 <= l <= k <= r <= n (got l={l}, k={k}, r={r}, n={})",
        x.len()
    );
    assert!(
        cfg.shrink_factor > 0.0 && cfg.shrink_factor < 1.0,
        "shrink_factor must lie in (0, 1)"
    );
    let (mut l, mut r) = (l, r);
    let mut pending_randomize = false;
    loop {
        if l >= r {
            return;
        }
        let m = r - l + 1;
        if m == 2 {
            if ctr.compare(&x[l - 1], &x[r - 1]) == std::cmp::Ordering::Greater {
                x.swap(l - 1, r - 1);
            }
            return;
        }
        let mid = l + (r - l) / 2;
        if pending_randomize {
            for pos in [l, mid, r] {
                let t = l + rng.below_inclusive((r - l) as u64) as usize;
                x.swap(pos - 1, t - 1);
            }
            ctr.randomizations += 1;
            pending_randomize = false;
        }
        sort3(x, l, mid, r, ctr);
        ctr.select_partitions += 1;
        ctr.partition_size_sum += m as u64;
        let bounds = binary_e(x, l, r, mid, ctr);
        if k < bounds.a {
            r = bounds.a - 1;
        } else if k > bounds.d {
            l = bounds.d + 1;
        } else {
            return;
        }
        let new_m = r - l + 1;
        if new_m as f64 > cfg.shrink_factor * m as f64 {
            pending_randomize = true;
        }
    }
}
