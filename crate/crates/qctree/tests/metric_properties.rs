//! Metric-space properties of the exact distance and its finite chain
//! approximations:
//!
//! 1. **Axioms**: non-negativity, identity of indiscernibles, symmetry, and
//!    the triangle inequality, all in exact rational arithmetic.
//! 2. **Self-similar scaling**: `d(ix, iy) = a(i) d(x, y)`.
//! 3. **Chain sums**: finite chain sums dominate the distance, decrease as
//!    the level grows, and respect their own same-tile bound.
//! 4. **Tiles**: the tile of a word has diameter exactly `delta(w)`, and
//!    any two points in it are at most that far apart.
//! 5. **Gate additivity**: distances across different child subtrees split
//!    exactly at the connecting gate point.

use num::Signed;
use num::Zero;
use proptest::prelude::*;
use qctree::branching::gate_code;
use qctree::graphs::level_words;
use qctree::metric::{chain_length, distance_exact};
use qctree::{delta, parse_ratio, point_equals, Letter, PointCode, Weight, Word};

fn profiles(m: Letter) -> Vec<Weight> {
    let mut out = vec![Weight::uniform(m)];
    if m >= 3 {
        let mut values = vec![parse_ratio("1/2").unwrap(), parse_ratio("1/2").unwrap()];
        for i in 3..=m {
            values.push(parse_ratio(&format!("1/{}", i + 1)).unwrap());
        }
        out.push(Weight::new(values).expect("nonincreasing weight"));
    }
    out
}

fn arb_word(m: Letter, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=m, 0..=max_len)
        .prop_map(|letters| Word::new(letters).expect("letters are 1-based"))
}

fn arb_code(m: Letter) -> impl Strategy<Value = PointCode> {
    (arb_word(m, 3), prop::collection::vec(1..=m, 1..=3)).prop_map(|(prefix, period)| {
        PointCode::new(prefix, Word::new(period).expect("letters are 1-based"))
            .expect("period is nonempty")
    })
}

fn arb_codes(n: usize) -> impl Strategy<Value = (Letter, Vec<PointCode>)> {
    (2 as Letter..=4).prop_flat_map(move |m| (Just(m), prop::collection::vec(arb_code(m), n..=n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn distance_satisfies_the_metric_axioms((m, codes) in arb_codes(3)) {
        for a in profiles(m) {
            let (x, y, z) = (&codes[0], &codes[1], &codes[2]);
            let dxy = distance_exact(x, y, &a).expect("valid codes");
            let dyx = distance_exact(y, x, &a).expect("valid codes");
            let dxz = distance_exact(x, z, &a).expect("valid codes");
            let dyz = distance_exact(y, z, &a).expect("valid codes");
            prop_assert!(!dxy.is_negative(), "distances are non-negative");
            prop_assert_eq!(&dxy, &dyx, "distance is symmetric");
            prop_assert_eq!(
                dxy.is_zero(),
                point_equals(x, y),
                "distance vanishes exactly on equal points"
            );
            prop_assert!(
                dxz <= &dxy + &dyz,
                "triangle inequality: d({}, {}) <= d(.., {}) + d({}, ..)",
                x, z, y, y
            );
            prop_assert!(
                distance_exact(x, x, &a).expect("valid codes").is_zero(),
                "every point is at distance zero from itself"
            );
        }
    }

    #[test]
    fn distance_scales_by_the_letter_weight(
        (m, codes, i) in (2 as Letter..=4).prop_flat_map(|m| {
            (Just(m), prop::collection::vec(arb_code(m), 2..=2), 1..=m)
        })
    ) {
        for a in profiles(m) {
            let (x, y) = (&codes[0], &codes[1]);
            let scaled = distance_exact(&x.prepend(i), &y.prepend(i), &a).expect("valid codes");
            let base = distance_exact(x, y, &a).expect("valid codes");
            prop_assert_eq!(
                &scaled,
                &(a.value(i).expect("letter in range") * &base),
                "prepending letter {} scales distance by a({})",
                i, i
            );
        }
    }

    #[test]
    fn chain_sums_dominate_and_converge((m, codes) in arb_codes(2)) {
        // Chain sums need not fall monotonically (a refined arc can cross
        // up to three child tiles whose diameters outweigh the parent), but
        // they always dominate the limit and squeeze under the same-tile
        // bound, which itself decays to the distance.
        for a in profiles(m) {
            let (x, y) = (&codes[0], &codes[1]);
            let exact = distance_exact(x, y, &a).expect("valid codes");
            for n in 1..=10usize {
                let chain = chain_length(x, y, n, &a).expect("chain level");
                prop_assert!(
                    chain.value >= exact,
                    "level-{} chain sum must dominate the limit distance",
                    n
                );
                prop_assert!(
                    chain.value <= chain.same_tile_bound,
                    "chain sum respects its same-tile bound at level {}",
                    n
                );
            }
            let late = chain_length(x, y, 30, &a).expect("chain level");
            prop_assert!(
                &late.value - &exact < parse_ratio("1/1048576").unwrap(),
                "by level 30 the chain sum sits within 2^-20 of the distance"
            );
        }
    }

    #[test]
    fn points_in_one_tile_stay_within_its_diameter(
        (m, codes, w) in (2 as Letter..=4).prop_flat_map(|m| {
            (Just(m), prop::collection::vec(arb_code(m), 2..=2), arb_word(m, 4))
        })
    ) {
        for a in profiles(m) {
            let x = codes[0].prepend_word(&w);
            let y = codes[1].prepend_word(&w);
            let d = distance_exact(&x, &y, &a).expect("valid codes");
            let diam = delta(&w, &a).expect("letters within alphabet");
            prop_assert!(
                d <= diam,
                "two points of the tile at {:?} stay within its diameter",
                w
            );
        }
    }

    #[test]
    fn distances_across_children_split_at_the_gate(
        (m, codes, u, i, j) in (3 as Letter..=4).prop_flat_map(|m| {
            (
                Just(m),
                prop::collection::vec(arb_code(m), 2..=2),
                arb_word(m, 3),
                1..=m,
                1..=m,
            )
        })
    ) {
        prop_assume!(i != j);
        for a in profiles(m) {
            let x = codes[0].prepend(i).prepend_word(&u);
            let y = codes[1].prepend(j).prepend_word(&u);
            let gate = gate_code(&u);
            let direct = distance_exact(&x, &y, &a).expect("valid codes");
            let through = distance_exact(&x, &gate, &a).expect("valid codes")
                + distance_exact(&gate, &y, &a).expect("valid codes");
            prop_assert_eq!(
                direct, through,
                "the unique path between different children of {:?} passes the gate",
                u
            );
        }
    }
}

#[test]
fn tile_diameter_is_attained_by_the_corner_rays() {
    for m in 2..=4 {
        for a in profiles(m) {
            for k in 0..=3usize {
                for w in level_words(k, m).expect("level enumeration") {
                    let x = PointCode::constant(1).prepend_word(&w);
                    let y = PointCode::constant(2).prepend_word(&w);
                    assert_eq!(
                        distance_exact(&x, &y, &a).expect("valid codes"),
                        delta(&w, &a).expect("letters within alphabet"),
                        "the two corner rays of the tile at {w:?} realize delta(w)"
                    );
                }
            }
        }
    }
}

#[test]
fn chain_gap_shrinks_like_the_level() {
    let a = Weight::uniform(3);
    let x: PointCode = "1,2,(3)".parse().expect("code parses");
    let y: PointCode = "3,(1,2)".parse().expect("code parses");
    let exact = distance_exact(&x, &y, &a).expect("valid codes");
    let gap_at = |n: usize| {
        let chain = chain_length(&x, &y, n, &a).expect("chain level");
        chain.value - &exact
    };
    assert!(
        gap_at(24) < parse_ratio("1/65536").unwrap(),
        "by level 24 the chain sum is within 2^-16"
    );
    assert!(
        gap_at(40) < parse_ratio("1/4294967296").unwrap(),
        "by level 40 the chain sum is within 2^-32"
    );
}
