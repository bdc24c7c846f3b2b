//! Seeded random frameworks and permutations for the axiom suites and the
//! falsifier.
//!
//! Everything here is a pure function of its seed. The generator algorithm
//! is pinned: ChaCha8 streams keyed by (seed, purpose), edge decisions by
//! comparing a raw 64-bit draw against `floor(p · 2^64)`, and Fisher-Yates
//! with rejection-sampled indices. Fixtures produced from a seed therefore
//! stay valid across platforms and releases.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::af::ArgumentationFramework;

/// Stream id for edge generation draws.
const STREAM_EDGES: u64 = 0;
/// Stream id for permutation draws.
const STREAM_PERMUTATION: u64 = 1;

/// Specification of one random framework draw.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    /// Probability of each ordered pair being an attack, in `[0, 1]`.
    pub edge_prob: f64,
    /// Whether pairs `(i, i)` are eligible. Defaults to true: self-attacks
    /// are ordinary attacks.
    pub allow_self_attacks: bool,
    pub seed: u64,
}

impl Default for GenSpec {
    fn default() -> Self {
        Self {
            n: 0,
            edge_prob: 0.25,
            allow_self_attacks: true,
            seed: 0,
        }
    }
}

/// A ChaCha8 generator on the given (seed, stream) pair. Distinct streams
/// of the same seed are independent; callers derive per-purpose and
/// per-trial generators from here.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draw uniformly from `0..bound` by rejection on raw 64-bit words.
fn uniform_below(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let zone = u64::MAX - (u64::MAX - bound + 1) % bound;
    loop {
        let v = rng.next_u64();
        if v <= zone {
            return v % bound;
        }
    }
}

/// Sample a framework: each eligible ordered pair `(i, j)` is an attack
/// independently with probability `edge_prob`. Argument names are
/// `a0..a(n-1)`. Identical specs produce identical frameworks.
///
/// Panics if `edge_prob` is outside `[0, 1]`; callers validate user input.
pub fn random_af(spec: &GenSpec) -> ArgumentationFramework {
    assert!(
        (0.0..=1.0).contains(&spec.edge_prob),
        "edge_prob must lie in [0, 1], got {}",
        spec.edge_prob
    );
    // floor(p * 2^64) as an exact u128 cutoff: p = 0 never draws an edge,
    // p = 1 always does.
    let cutoff = (spec.edge_prob * 18_446_744_073_709_551_616.0) as u128;
    let mut rng = stream_rng(spec.seed, STREAM_EDGES);
    let names: Vec<String> = (0..spec.n).map(|i| format!("a{i}")).collect();
    let mut attacks = Vec::new();
    for i in 0..spec.n {
        for j in 0..spec.n {
            if i == j && !spec.allow_self_attacks {
                continue;
            }
            if (rng.next_u64() as u128) < cutoff {
                attacks.push((i, j));
            }
        }
    }
    ArgumentationFramework::from_index_pairs(names, attacks)
        .expect("generated names are distinct and indices in range")
}

/// A uniform permutation of `0..n`, deterministic per seed.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = stream_rng(seed, STREAM_PERMUTATION);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = uniform_below(&mut rng, (i + 1) as u64) as usize;
        perm.swap(i, j);
    }
    perm
}
