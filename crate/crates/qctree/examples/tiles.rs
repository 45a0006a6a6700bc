//! Tile boundaries and neighbor ratios.
//!
//! The tile of a word `w` is the set of points whose codes start with `w`;
//! it has diameter exactly `delta(w)`. A tile meets other same-level tiles
//! only at gate points on its boundary, and the diameters of touching tiles
//! stay within a two-sided ratio bound. This example inspects a few tiles
//! and their neighborhoods.
//!
//! Run with: `cargo run --example tiles`

use qctree::branching::{neighbor_tiles, tile_boundary};
use qctree::{delta, ratio_string, Weight, Word};

fn main() -> qctree::Result<()> {
    let a = Weight::uniform(3);

    for w in ["1", "2,1", "3,1,2", "2,2,2"] {
        let word: Word = w.parse()?;
        println!(
            "tile at {w} (diameter {}):",
            ratio_string(&delta(&word, &a)?)
        );

        let boundary = tile_boundary(&word);
        let codes: Vec<String> = boundary.iter().map(|c| c.to_string()).collect();
        println!("  boundary gates: {}", codes.join("  "));

        let report = neighbor_tiles(&word, &a)?;
        for n in &report.neighbors {
            println!(
                "  touches {:<8} diameter ratio {}",
                n.word.to_string(),
                ratio_string(&n.ratio)
            );
        }
        match (&report.low, &report.high) {
            (Some(low), Some(high)) => println!(
                "  all ratios within [{}, {}]: {}\n",
                ratio_string(low),
                ratio_string(high),
                report.all_within_bounds
            ),
            _ => println!(),
        }
    }
    Ok(())
}
