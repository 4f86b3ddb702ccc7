//! Instrumentation counters shared by all selection algorithms.
//!
//! Comparison counting is done through an explicit hook
//! ([`RunCounters::compare`]) at every element-versus-element comparison
//! site. Each call resolves a full three-way ordering and costs exactly one
//! comparison; index-versus-index tests are never counted.

use std::cmp::Ordering;

/// Per-run instrumentation counters. All fields are monotonically
/// nondecreasing during a run; two counter sets merge by fieldwise addition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunCounters {
    /// Element-vs-element comparisons (C).
    pub comparisons: u64,
    /// Sum of sizes of partitioned segments (L).
    pub partition_size_sum: u64,
    /// Partitions performed by the main select/pmselect/riselect loops (P).
    pub select_partitions: u64,
    /// Calls to the small-segment routine (N).
    pub sselect_calls: u64,
    /// Partitions performed inside the small-segment routine.
    pub sselect_partitions: u64,
    /// Sum of drawn sample sizes.
    pub sample_size_sum: u64,
    /// Randomization steps taken by the quickselect baseline (N_rnd).
    pub randomizations: u64,
}

impl RunCounters {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counted three-way comparison of two elements.
    ///
    /// Panics if the values are not totally ordered (e.g. NaN).
    #[inline]
    pub fn compare<T: PartialOrd>(&mut self, a: &T, b: &T) -> Ordering {
        self.comparisons += 1;
        a.partial_cmp(b).expect("elements must be totally ordered")
    }

    /// Fieldwise sum; commutative and associative.
    pub fn merge(self, other: RunCounters) -> RunCounters {
        RunCounters {
            comparisons: self.comparisons + other.comparisons,
            partition_size_sum: self.partition_size_sum + other.partition_size_sum,
            select_partitions: self.select_partitions + other.select_partitions,
            sselect_calls: self.sselect_calls + other.sselect_calls,
            sselect_partitions: self.sselect_partitions + other.sselect_partitions,
            sample_size_sum: self.sample_size_sum + other.sample_size_sum,
            randomizations: self.randomizations + other.randomizations,
        }
    }
}

/// Counters scaled to the row format used by the benchmark reports:
/// comparison counts in multiples of n, partition/call counts in multiples
/// of ln n, sample mass as a percentage of n.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedCounters {
    pub comparisons_per_n: f64,
    pub partition_sum_per_n: f64,
    /// (C - 1.5 n) / f_n, the empirical estimate of the lower-order constant.
    pub gamma_estimate: f64,
    pub select_partitions_per_ln_n: f64,
    pub sselect_calls_per_ln_n: f64,
    /// Average partitions per small-segment call (0 when no calls occurred).
    pub sselect_partitions_per_call: f64,
    pub sample_pct_of_n: f64,
}

/// Scale raw counters by the input size `n` and the normalizer `f_n`
/// (usually [`crate::sampling::fr_f`]`(n)`).
pub fn normalize(c: &RunCounters, n: usize, f_n: f64) -> NormalizedCounters {
    assert!(n >= 1, "normalize needs n >= 1");
    assert!(f_n > 0.0, "normalize needs f_n > 0");
    let nf = n as f64;
    let ln_n = nf.ln();
    NormalizedCounters {
        comparisons_per_n: c.comparisons as f64 / nf,
        partition_sum_per_n: c.partition_size_sum as f64 / nf,
        gamma_estimate: (c.comparisons as f64 - 1.5 * nf) / f_n,
        select_partitions_per_ln_n: c.select_partitions as f64 / ln_n,
        sselect_calls_per_ln_n: c.sselect_calls as f64 / ln_n,
        sselect_partitions_per_call: if c.sselect_calls == 0 {
            0.0
        } else {
            c.sselect_partitions as f64 / c.sselect_calls as f64
        },
        sample_pct_of_n: 100.0 * c.sample_size_sum as f64 / nf,
    }
}
