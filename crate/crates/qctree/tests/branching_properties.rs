//! Branch points, tile boundaries, and neighbor structure, each checked
//! against an independent route:
//!
//! 1. **Counts and heights**: the branch points with stems up to level n
//!    number `(m^(n+1) - 1)/(m - 1)`, are pairwise distinct points, and the
//!    third branch diameter is exactly `a(3) * delta(stem)`.
//! 2. **Tile boundaries, two oracles**: a corner ray of a tile is a
//!    boundary point exactly when point equality matches it to a corner of
//!    some other same-level tile, and neighbor tiles are exactly the graph
//!    neighbors of the word. Both routes must reproduce `tile_boundary`
//!    and `neighbor_tiles`.
//! 3. **Gate classes**: every spoke representative of a gate denotes the
//!    same point as the canonical gate code.
//! 4. **Verified constants**: the packaged separation and uniform-branching
//!    checks pass on finite profiles.

use num::Zero;
use qctree::branching::{
    branch_height, branch_points, gate_code, neighbor_tiles, tile_boundary, verify_separation,
    verify_uniform_branching,
};
use qctree::graphs::{adjacent, level_words};
use qctree::metric::distance_exact;
use qctree::{delta, parse_ratio, point_equals, Letter, PointCode, Weight, Word};
use std::collections::BTreeSet;

fn profiles(m: Letter) -> Vec<Weight> {
    let mut values = vec![parse_ratio("1/2").unwrap(), parse_ratio("1/2").unwrap()];
    for i in 3..=m {
        values.push(parse_ratio(&format!("1/{}", i + 1)).unwrap());
    }
    vec![
        Weight::uniform(m),
        Weight::new(values).expect("nonincreasing weight"),
    ]
}

#[test]
fn branch_point_counts_and_distinctness() {
    for m in 3..=5 {
        let a = Weight::uniform(m);
        for level in 0..=3usize {
            let points = branch_points(level, &a).expect("enumeration");
            let expected = ((m as usize).pow(level as u32 + 1) - 1) / (m as usize - 1);
            assert_eq!(
                points.len(),
                expected,
                "stems up to level {level} over {m} letters"
            );
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    assert!(
                        !point_equals(&points[i].code, &points[j].code),
                        "branch points at stems {:?} and {:?} must be distinct points",
                        points[i].stem,
                        points[j].stem
                    );
                }
            }
        }
    }
}

#[test]
fn branch_heights_follow_the_weight_of_the_third_child() {
    for m in 3..=4 {
        for a in profiles(m) {
            let a3 = a.value(3).expect("letter 3");
            for p in branch_points(3, &a).expect("enumeration") {
                let want = &a3 * delta(&p.stem, &a).expect("stem within alphabet");
                assert_eq!(
                    p.height_diam, want,
                    "third branch diameter at stem {:?} is a(3) * delta(stem)",
                    p.stem
                );
                assert_eq!(
                    branch_height(&p.stem, &a).expect("stem within alphabet"),
                    want,
                    "the height helper agrees with the enumerated value"
                );
                assert!(
                    p.height_reach >= p.height_diam.clone() / parse_ratio("2").unwrap()
                        && p.height_reach <= p.height_diam,
                    "reach and diameter heights are 2-comparable at {:?}",
                    p.stem
                );
            }
        }
    }
}

/// Corner rays of a level-`k` word: the only points a tile can share with a
/// different tile of the same level.
fn corners(w: &Word) -> [PointCode; 2] {
    [
        PointCode::constant(1).prepend_word(w),
        PointCode::constant(2).prepend_word(w),
    ]
}

#[test]
fn tile_boundary_matches_the_corner_matching_oracle() {
    for m in 3..=4 {
        for k in 1..=3usize {
            let words = level_words(k, m).expect("level enumeration");
            for w in &words {
                // Oracle: a corner of w lies on the boundary exactly when it
                // equals a corner of some other level-k word.
                let mut oracle: Vec<PointCode> = Vec::new();
                for c in corners(w) {
                    let shared = words.iter().any(|u| {
                        u != w && corners(u).iter().any(|cu| point_equals(&c, cu))
                    });
                    if shared {
                        oracle.push(c.canonical());
                    }
                }
                let mut stated: Vec<PointCode> =
                    tile_boundary(w).into_iter().map(|c| c.canonical()).collect();
                oracle.sort();
                stated.sort();
                assert_eq!(
                    stated, oracle,
                    "boundary of the tile at {w:?} over {m} letters, level {k}"
                );
            }
        }
    }
}

#[test]
fn neighbor_tiles_match_corner_matching_and_cover_graph_edges() {
    // Two relations are checked. Sharing a point is decided independently
    // by matching corner rays with point equality; that must reproduce
    // `neighbor_tiles` exactly. Graph adjacency is strictly finer: every
    // edge of the level graph joins touching tiles, but all children
    // meeting at one gate touch pairwise while the graph, being a tree,
    // keeps only a star there.
    for m in 3..=4 {
        let a = Weight::uniform(m);
        for k in 1..=3usize {
            let words = level_words(k, m).expect("level enumeration");
            for w in &words {
                let report = neighbor_tiles(w, &a).expect("neighbor enumeration");
                let stated: BTreeSet<Word> =
                    report.neighbors.iter().map(|n| n.word.clone()).collect();
                let touching: BTreeSet<Word> = words
                    .iter()
                    .filter(|u| {
                        *u != w
                            && corners(w)
                                .iter()
                                .any(|c| corners(u).iter().any(|cu| point_equals(c, cu)))
                    })
                    .cloned()
                    .collect();
                assert_eq!(
                    stated, touching,
                    "tiles touching the tile at {w:?} per corner matching"
                );
                let graph_neighbors: BTreeSet<Word> = words
                    .iter()
                    .filter(|u| *u != w && adjacent(w, u).expect("same length"))
                    .cloned()
                    .collect();
                assert!(
                    graph_neighbors.is_subset(&stated),
                    "every graph neighbor of {w:?} is a touching tile"
                );
                assert!(
                    report.all_within_bounds,
                    "neighbor diameter ratios stay within the two-sided bound at {w:?}"
                );
            }
        }
    }
}

#[test]
fn gate_spokes_all_denote_the_same_point() {
    let m: Letter = 4;
    let a = Weight::uniform(m);
    for k in 0..=2usize {
        for u in level_words(k, m).expect("level enumeration") {
            let gate = gate_code(&u);
            for j in 2..=m {
                let spoke = PointCode::constant(1).prepend(j).prepend_word(&u);
                assert!(
                    point_equals(&gate, &spoke),
                    "the spoke through child {j} of {u:?} is the gate point"
                );
                assert!(
                    distance_exact(&gate, &spoke, &a)
                        .expect("valid codes")
                        .is_zero(),
                    "the metric agrees that the spoke through {j} is the gate"
                );
            }
        }
    }
}

#[test]
fn packaged_branching_checks_pass() {
    for m in 3..=4 {
        for a in profiles(m) {
            let separation = verify_separation(2, &a).expect("separation sweep");
            assert!(
                separation.pass,
                "separation constant {} at {}",
                separation.constant, separation.witness
            );
            for report in verify_uniform_branching(2, &a).expect("uniform branching sweep") {
                assert!(
                    report.pass,
                    "{} should pass, constant {} at {}",
                    report.check, report.constant, report.witness
                );
            }
        }
    }
}
