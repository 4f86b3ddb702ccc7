//! Benchmark input sequences, seeded and reproducible.
//!
//! Values are small nonnegative integers (`u64`); the benchmark harness
//! widens them to `f64` before running the double-precision experiments.

use crate::rng::SplitMix64;

/// The seven input families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InputKind {
    /// Random permutation of 1..=n.
    Random,
    /// Random permutation of ceil(n/2) ones and floor(n/2) zeroes.
    Onezero,
    /// 1..=n ascending.
    Sorted,
    /// Sorted rotated left once: (2, 3, ..., n, 1).
    Rotated,
    /// 1..n/2 ascending then n/2..1 descending.
    Organpipe,
    /// Musser's median-of-3 killer, arranged to be hard when the middle
    /// pivot candidate comes from position k = n/2.
    M3killer,
    /// M3killer with two interior windows randomly permuted.
    Twofaced,
}

impl InputKind {
    pub const ALL: [InputKind; 7] = [
        InputKind::Random,
        InputKind::Onezero,
        InputKind::Sorted,
        InputKind::Rotated,
        InputKind::Organpipe,
        InputKind::M3killer,
        InputKind::Twofaced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InputKind::Random => "random",
            InputKind::Onezero => "onezero",
            InputKind::Sorted => "sorted",
            InputKind::Rotated => "rotated",
            InputKind::Organpipe => "organpipe",
            InputKind::M3killer => "m3killer",
            InputKind::Twofaced => "twofaced",
        }
    }

    /// Does this family consume the seed? Deterministic kinds ignore it.
    pub fn is_randomized(self) -> bool {
        matches!(
            self,
            InputKind::Random | InputKind::Onezero | InputKind::Twofaced
        )
    }
}

impl std::str::FromStr for InputKind {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, InputError> {
        InputKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| InputError::UnknownKind(s.to_string()))
    }
}

/// A fully specified input: family, size, and seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub kind: InputKind,
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InputError {
    #[error("input size must be at least 1")]
    EmptyInput,
    #[error("{0} requires n divisible by 4, got {1}")]
    NotDivisibleBy4(&'static str, usize),
    #[error("organpipe requires even n, got {0}")]
    OddOrganpipe(usize),
    #[error("unknown input kind `{0}`")]
    UnknownKind(String),
}

/// Generate the sequence described by `spec`.
pub fn generate(spec: &InputSpec) -> Result<Vec<u64>, InputError> {
    let n = spec.n;
    if n == 0 {
        return Err(InputError::EmptyInput);
    }
    let mut rng = SplitMix64::with_stream(spec.seed, 0x6E57);
    match spec.kind {
        InputKind::Random => {
            let mut x: Vec<u64> = (1..=n as u64).collect();
            shuffle(&mut x, 0, n, &mut rng);
            Ok(x)
        }
        InputKind::Onezero => {
            let ones = n.div_ceil(2);
            let mut x = vec![1u64; ones];
            x.resize(n, 0);
            shuffle(&mut x, 0, n, &mut rng);
            Ok(x)
        }
        InputKind::Sorted => Ok((1..=n as u64).collect()),
        InputKind::Rotated => Ok((2..=n as u64).chain(std::iter::once(1)).collect()),
        InputKind::Organpipe => {
            if n % 2 != 0 {
                return Err(InputError::OddOrganpipe(n));
            }
            let half = (n / 2) as u64;
            Ok((1..=half).chain((1..=half).rev()).collect())
        }
        InputKind::M3killer => m3killer(n),
        InputKind::Twofaced => {
            let mut x = m3killer(n)?;
            // Permute the two interior windows (1-based, inclusive):
            // [4 floor(log2 n), n/2 - 1] and [n/2 + 4 floor(log2 n) - 1, n - 2].
            let log2 = (usize::BITS - 1 - n.leading_zeros()) as usize;
            let w = 4 * log2;
            shuffle_window(&mut x, w, n / 2 - 1, &mut rng);
            shuffle_window(&mut x, n / 2 + w - 1, n - 2, &mut rng);
            Ok(x)
        }
    }
}

/// Median-of-3 killer permutation for n = 4j with k = n/2: odd positions
/// below k keep their index, even positions below k hold k+i-1, position k
/// holds 2, positions k+1..2k-2 hold the missing even values, and the last
/// two positions hold themselves.
fn m3killer(n: usize) -> Result<Vec<u64>, InputError> {
    if n % 4 != 0 {
        return Err(InputError::NotDivisibleBy4("m3killer", n));
    }
    let k = n / 2;
    let mut x = vec![0u64; n];
    for i in 1..k {
        x[i - 1] = if i % 2 == 1 { i as u64 } else { (k + i - 1) as u64 };
    }
    x[k - 1] = 2;
    for i in 1..=k - 2 {
        x[k + i - 1] = 2 * (i + 1) as u64;
    }
    x[n - 2] = (n - 1) as u64;
    x[n - 1] = n as u64;
    Ok(x)
}

/// Fisher-Yates shuffle of `x[lo..hi]` (0-based, exclusive hi).
fn shuffle(x: &mut [u64], lo: usize, hi: usize, rng: &mut SplitMix64) {
    for i in lo..hi.saturating_sub(1) {
        let j = i + rng.below((hi - i) as u64) as usize;
        x.swap(i, j);
    }
}

/// Shuffle the 1-based inclusive window `[lo, hi]`; windows that are empty
/// or out of order (possible for tiny n) are left alone.
fn shuffle_window(x: &mut [u64], lo: usize, hi: usize, rng: &mut SplitMix64) {
    if lo >= 1 && lo < hi && hi <= x.len() {
        shuffle(x, lo - 1, hi, rng);
    }
}
