//! Shared helpers for the integration tests: seeded randomness, a random
//! finite-tree corpus, and random symbolic points.

#![allow(dead_code)]

use num::BigRational;
use qctree::gluing::FiniteGeodesicTree;
use qctree::{parse_ratio, Letter, PointCode, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Parses a rational literal, panicking on malformed input.
pub fn r(s: &str) -> BigRational {
    parse_ratio(s).expect("ratio literal parses")
}

/// Deterministic generator so corpus tests are reproducible.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random tree on `n >= 2` vertices named `n0..`, grown by joining each new
/// vertex to a uniformly random earlier one with an edge length in
/// `{1/8, 2/8, ..., 16/8}`.
pub fn random_tree(g: &mut ChaCha8Rng, n: usize) -> FiniteGeodesicTree {
    assert!(n >= 2, "a tree needs at least one edge");
    let mut edges = Vec::with_capacity(n - 1);
    for k in 1..n {
        let parent = g.random_range(0..k);
        let eighths = g.random_range(1..=16u32);
        edges.push((
            format!("n{parent}"),
            format!("n{k}"),
            BigRational::new(eighths.into(), 8.into()),
        ));
    }
    FiniteGeodesicTree::from_edges(edges).expect("randomly grown tree is valid")
}

/// Random word over `{1..m}` of the given length.
pub fn random_word(g: &mut ChaCha8Rng, m: Letter, len: usize) -> Word {
    let letters: Vec<Letter> = (0..len).map(|_| g.random_range(1..=m)).collect();
    Word::new(letters).expect("letters are 1-based")
}

/// Random point in normal form with prefix length at most `max_prefix` and a
/// nonempty period of length at most `max_period`, canonicalized so gate
/// classes have a unique representative.
pub fn random_code(
    g: &mut ChaCha8Rng,
    m: Letter,
    max_prefix: usize,
    max_period: usize,
) -> PointCode {
    let prefix_len = g.random_range(0..=max_prefix);
    let prefix = random_word(g, m, prefix_len);
    let period_len = g.random_range(1..=max_period);
    let period = random_word(g, m, period_len);
    PointCode::new(prefix, period)
        .expect("nonempty period")
        .canonical()
}
