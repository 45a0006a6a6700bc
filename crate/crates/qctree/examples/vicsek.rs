//! The Vicsek cross: skeleton, corner gluings, and CSV export.
//!
//! Five maps contract the square `[-1, 1]^2` by a third: four into the
//! corners and one into the center. The attractor deformation retracts onto
//! a tree whose skeleton is built from the four half-diagonals. Each corner
//! tile touches the central tile at a single corner point, and the branch
//! point at the center of the tile at `u` has height `3^-|u| / sqrt(2)` in
//! the unit-diagonal normalization. This example verifies both facts at
//! small depth and writes the segments to CSV.
//!
//! Run with: `cargo run --example vicsek`

use num::complex::Complex64;
use qctree::planar::{
    csv_string, skeleton, vicsek_branch_height, vicsek_corners, vicsek_generators, vicsek_ifs,
};
use qctree::Word;

fn main() -> qctree::Result<()> {
    let ifs = vicsek_ifs();
    let corners = vicsek_corners();

    println!("corner gluings of the outer tiles to the central one:");
    let opposite = [2usize, 3, 0, 1];
    for i in 0..4 {
        let outer = ifs[i].apply(corners[opposite[i]]);
        let center = ifs[4].apply(corners[i]);
        println!(
            "  tile {} corner {} = center tile corner {}: {:.6} + {:.6}i (difference {:.2e})",
            i + 1,
            opposite[i] + 1,
            i + 1,
            outer.re,
            outer.im,
            (outer - center).norm()
        );
    }

    println!("\nbranch heights at tile centers (unit-diagonal normalization):");
    for u in ["", "5", "1,5", "3,2,5"] {
        let word: Word = u.parse()?;
        let h = vicsek_branch_height(&word)?;
        println!("  stem {:<6} height {h:.9}", if u.is_empty() { "(root)" } else { u });
    }

    let segments = skeleton(&ifs, &vicsek_generators(), 4)?;
    let total: f64 = segments.iter().map(|s| (s.b - s.a).norm()).sum();
    println!(
        "\ndepth-4 skeleton: {} segments, total length {total:.6}",
        segments.len()
    );
    let out = std::env::temp_dir().join("vicsek_depth4.csv");
    std::fs::write(&out, csv_string(&segments))?;
    println!("wrote segment endpoints to {}", out.display());

    // A quick spot check that the skeleton stays inside the square.
    let inside = segments
        .iter()
        .flat_map(|s| [s.a, s.b])
        .all(|p: Complex64| p.re.abs() <= 1.0 + 1e-12 && p.im.abs() <= 1.0 + 1e-12);
    println!("all endpoints inside [-1, 1]^2: {inside}");
    Ok(())
}
