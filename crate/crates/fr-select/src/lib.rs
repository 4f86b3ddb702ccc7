//! In-place selection (order statistics) with instrumented comparison
//! counting.
//!
//! Three algorithms share one set of partition primitives:
//!
//! * [`select`] — sampling-based selection in the Floyd-Rivest style, with
//!   ternary and quintary partitioning and an equal-range result,
//! * [`pmselect`] — a "poor man's" variant using binary/weak partitions and
//!   the standard contract,
//! * [`riselect`] — a quickselect baseline with median-of-3 pivots that
//!   randomizes the candidates when the segment stops shrinking.
//!
//! All public entry points take 1-based segment bounds `l <= k <= r` over a
//! mutable slice, an explicit [`RunCounters`] that records every
//! element-vs-element comparison, and a seedable [`SplitMix64`] generator so
//! runs are reproducible bit for bit.

pub mod baseline;
pub mod check;
pub mod counters;
pub mod generators;
pub mod partition;
pub mod rng;
pub mod sampling;
pub mod select;

pub use baseline::{riselect, RiConfig};
pub use counters::{normalize, NormalizedCounters, RunCounters};
pub use generators::{generate, InputError, InputKind, InputSpec};
pub use rng::SplitMix64;
pub use sampling::{fr_f, pivot_ranks, place_sample, SampleKind, SampleStrategy};
pub use select::{pmselect, select, select_with_stages, sselect, SelectConfig, SelectionResult};
