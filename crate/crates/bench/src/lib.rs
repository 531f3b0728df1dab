//! Shared inputs for the benchmarks.

use afsa::generate::{random_framework, GenConfig};
use afsa::{Framework, FrameworkKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` seeded random frameworks of `kind` with the given size bounds.
pub fn sample_frames(kind: FrameworkKind, count: usize, config: &GenConfig, seed: u64) -> Vec<Framework> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_framework(&mut rng, kind, config)).collect()
}

/// A chain of `n` arguments a0 → a1 → … with one attack per link.
pub fn chain(kind: FrameworkKind, n: usize) -> Framework {
    let args: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
    let mut text = format!("frame {kind}\n");
    for a in &args {
        text.push_str(&format!("arg {a}\n"));
    }
    for (i, pair) in args.windows(2).enumerate() {
        text.push_str(&format!("atk r{i} = {{{}}} -> {}\n", pair[0], pair[1]));
    }
    afsa::parse_frame(&text).expect("chains are valid for every kind")
}
