//! Geometry of the planar realizations:
//!
//! 1. **Composition bookkeeping**: composing similarities agrees with
//!    applying them in sequence, and the composed scale is the product of
//!    the per-letter scales (the planar counterpart of cylinder diameters).
//! 2. **Vicsek identifications**: the four corner gluings persist at depth
//!    two under arbitrary outer words.
//! 3. **Separation**: distinct-family tiles at a shared level keep a
//!    definite gap, scaled by the angle of the family.
//! 4. **Exports**: SVG and CSV renderings are well formed and lossless
//!    enough to replot.

use num::complex::Complex64;
use proptest::prelude::*;
use qctree::planar::{
    csv_string, directed_hausdorff, family_ifs, family_scales, family_separation_check,
    hausdorff_distance, sample_points, skeleton, svg_string, vicsek_corners, vicsek_generators,
    vicsek_ifs, PlanarSimilarity, Segment,
};
use qctree::Letter;

fn compose_word(ifs: &[PlanarSimilarity], word: &[usize]) -> PlanarSimilarity {
    let mut sim = PlanarSimilarity::identity();
    for &l in word {
        sim = sim.compose(&ifs[l]);
    }
    sim
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn composed_maps_agree_with_sequential_application(
        (m, word) in (3 as Letter..=6).prop_flat_map(|m| {
            (Just(m), prop::collection::vec(0usize..(m as usize), 0..=6))
        }),
        re in -1.0f64..1.0,
        im in -1.0f64..1.0,
    ) {
        let ifs = family_ifs(m).expect("family maps");
        let sim = compose_word(&ifs, &word);
        let mut z = Complex64::new(re, im);
        for &l in word.iter().rev() {
            z = ifs[l].apply(z);
        }
        let w = sim.apply(Complex64::new(re, im));
        prop_assert!(
            (w - z).norm() < 1e-12,
            "composition must equal right-to-left application, got {} vs {}",
            w, z
        );
    }

    #[test]
    fn composed_scale_is_the_product_of_letter_scales(
        (m, word) in (3 as Letter..=6).prop_flat_map(|m| {
            (Just(m), prop::collection::vec(0usize..(m as usize), 0..=8))
        })
    ) {
        let ifs = family_ifs(m).expect("family maps");
        let scales = family_scales(m).expect("family scales");
        let sim = compose_word(&ifs, &word);
        let product: f64 = word.iter().map(|&l| scales[l]).product();
        prop_assert!(
            (sim.scale - product).abs() < 1e-12,
            "the composed contraction factor tracks the per-letter product"
        );
    }
}

#[test]
fn vicsek_corner_identifications_persist_one_level_deeper() {
    let ifs = vicsek_ifs();
    let corners = vicsek_corners();
    // Tile i is glued to the central tile 5 along the corner opposite to i:
    // the ray into letter opposite(i) inside tile i meets the ray into
    // letter i inside tile 5.
    let opposite = [2usize, 3, 0, 1];
    for outer in 0..5usize {
        for i in 0..4usize {
            let left = compose_word(&ifs, &[outer, i]).apply(corners[opposite[i]]);
            let right = compose_word(&ifs, &[outer, 4]).apply(corners[i]);
            assert!(
                (left - right).norm() < 1e-12,
                "corner gluing of tile {} to the center survives under outer map {}",
                i + 1,
                outer + 1
            );
        }
    }
}

#[test]
fn family_tiles_at_level_two_keep_their_gap() {
    for m in 3..=5 {
        let outcome = family_separation_check(m, 2).expect("separation sweep");
        assert!(
            outcome.pass,
            "m = {m}: away from the shared point, distinct tiles keep a gap of at \
             least {}, sampled minimum {}",
            outcome.threshold, outcome.min_distance
        );
    }
}

#[test]
fn hausdorff_distance_is_symmetric_and_detects_refinement() {
    let ifs = family_ifs(3).expect("family maps");
    let generators = qctree::planar::family_generator();
    let coarse = sample_points(&skeleton(&ifs, &generators, 0).expect("skeleton"), 64);
    let fine = sample_points(&skeleton(&ifs, &generators, 2).expect("skeleton"), 64);
    assert_eq!(
        directed_hausdorff(&coarse, &coarse),
        0.0,
        "a point set is at directed distance zero from itself"
    );
    let ab = hausdorff_distance(&coarse, &fine);
    let ba = hausdorff_distance(&fine, &coarse);
    assert!((ab - ba).abs() < 1e-15, "symmetrized distance is symmetric");
    assert!(
        directed_hausdorff(&coarse, &fine) < 0.02,
        "the coarse skeleton lies close to the refined one (it is covered by it)"
    );
    assert!(
        directed_hausdorff(&fine, &coarse) > 0.1,
        "the refined skeleton grows genuinely new branches away from depth 0"
    );
}

#[test]
fn svg_and_csv_exports_are_well_formed() {
    let segments = skeleton(&vicsek_ifs(), &vicsek_generators(), 2).expect("skeleton");
    let svg = svg_string(&segments);
    assert!(svg.starts_with("<svg"), "SVG opens with its root element");
    assert!(svg.ends_with("</svg>\n"), "SVG closes its root element");
    assert_eq!(
        svg.matches("<line").count(),
        segments.len(),
        "one line element per segment"
    );

    let csv = csv_string(&segments);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), segments.len(), "one CSV row per segment");
    for (row, segment) in rows.iter().zip(&segments) {
        let fields: Vec<f64> = row
            .split(',')
            .map(|f| f.parse().expect("numeric field"))
            .collect();
        assert_eq!(fields.len(), 4, "rows carry both endpoints");
        let a = Complex64::new(fields[0], fields[1]);
        let b = Complex64::new(fields[2], fields[3]);
        assert!(
            (a - segment.a).norm() < 1e-9 && (b - segment.b).norm() < 1e-9,
            "12-digit rows replot the segment"
        );
    }
}

#[test]
fn skeleton_counts_scale_with_the_alphabet() {
    for m in 3..=5 {
        let ifs = family_ifs(m).expect("family maps");
        let generators = qctree::planar::family_generator();
        for depth in 0..=3usize {
            let segments = skeleton(&ifs, &generators, depth).expect("skeleton");
            assert_eq!(
                segments.len(),
                (m as usize).pow(depth as u32),
                "one segment per length-{depth} word over {m} letters"
            );
            let total: f64 = segments.iter().map(Segment::len).sum();
            assert!(
                total >= 1.0 - 1e-12,
                "the skeleton always contains a unit-length geodesic"
            );
        }
    }
}
