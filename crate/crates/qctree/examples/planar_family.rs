//! Planar tree attractors: skeletons, geodesics, and SVG export.
//!
//! For each `m >= 3` a family of `m` planar similarities contracts the unit
//! horizontal segment into a tree-shaped attractor: two maps halve the
//! segment onto itself, the rest fold scaled copies upward at equally
//! spaced angles. Deeper skeletons refine shallower ones, and the segment
//! from -1/2 to 1/2 stays a geodesic of length exactly 1 at every depth.
//! This example builds a few skeletons, measures that geodesic, checks the
//! nesting, and writes an SVG.
//!
//! Run with: `cargo run --example planar_family`

use num::complex::Complex64;
use qctree::planar::{
    family_generator, family_ifs, nesting_check, path_length, skeleton, svg_string, Segment,
};

fn main() -> qctree::Result<()> {
    let m = 4;
    let ifs = family_ifs(m)?;
    let generators = family_generator();
    let left = Complex64::new(-0.5, 0.0);
    let right = Complex64::new(0.5, 0.0);

    println!("skeletons of the {m}-map family:");
    let mut previous: Option<Vec<Segment>> = None;
    for depth in 0..=6 {
        let segments = skeleton(&ifs, &generators, depth)?;
        let geodesic = path_length(&segments, left, right, 1e-9)?;
        let nested = match &previous {
            Some(coarse) => nesting_check(coarse, &segments, 1e-12),
            None => true,
        };
        println!(
            "  depth {depth}: {:>5} segments, geodesic length {:.12}, refines previous: {nested}",
            segments.len(),
            geodesic
        );
        previous = Some(segments);
    }

    let out = std::env::temp_dir().join("family_depth5.svg");
    let segments = skeleton(&ifs, &generators, 5)?;
    std::fs::write(&out, svg_string(&segments))?;
    println!("\nwrote the depth-5 skeleton to {}", out.display());
    Ok(())
}
