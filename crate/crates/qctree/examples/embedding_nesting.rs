//! Branch-point nesting across alphabets.
//!
//! Shrinking the alphabet from `m` letters to the first three embeds the
//! small tree isometrically in the big one, and every branch point of the
//! small tree is a branch point of the big tree. The big tree has extra
//! branch points, but never far from the small set: the one-sided excess at
//! level `n` is controlled by the largest weight of a dropped letter. This
//! example measures both one-sided distances at several levels.
//!
//! Run with: `cargo run --example embedding_nesting`

use qctree::branching::branch_point_nesting;
use qctree::{decimal_string, parse_ratio, ratio_string, Weight};

fn main() -> qctree::Result<()> {
    let a = Weight::new(vec![
        parse_ratio("1/2")?,
        parse_ratio("1/2")?,
        parse_ratio("1/4")?,
        parse_ratio("1/8")?,
        parse_ratio("1/16")?,
    ])?;
    println!("three-letter branch points inside the five-letter tree");
    println!("weights: 1/2, 1/2, 1/4, 1/8, 1/16\n");
    println!(
        "{:>5} {:>8} {:>8} {:>12} {:>12}",
        "level", "small", "big", "excess", "reverse"
    );
    for level in 0..=4 {
        let report = branch_point_nesting(3, level, &a)?;
        println!(
            "{:>5} {:>8} {:>8} {:>12} {:>12}",
            report.level,
            report.small_count,
            report.big_count,
            decimal_string(&report.excess, 8),
            ratio_string(&report.reverse_excess),
        );
    }
    println!(
        "\nreverse excess 0 means containment; the forward excess stays below \
         max(a(4), a(5)) + 2^-level = {} + 2^-level",
        ratio_string(&parse_ratio("1/8")?)
    );
    Ok(())
}
