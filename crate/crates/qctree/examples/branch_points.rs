//! Branch points, their heights, and the separation between them.
//!
//! Every finite word `u` sits over one branch point: the gate where all the
//! children of the tile at `u` meet. Its canonical code is `u,1,(2)`, and
//! the third-largest branch hanging there has diameter `a(3) * delta(u)`.
//! This example enumerates the first levels, then runs the packaged
//! separation and uniform-branching checks that bound how evenly those
//! points spread through the tree.
//!
//! Run with: `cargo run --example branch_points`

use qctree::branching::{branch_points, verify_separation, verify_uniform_branching};
use qctree::{parse_ratio, ratio_string, Weight};

fn main() -> qctree::Result<()> {
    let a = Weight::new(vec![
        parse_ratio("1/2")?,
        parse_ratio("1/2")?,
        parse_ratio("1/4")?,
    ])?;

    println!("branch points with stems up to level 2 (a = 1/2, 1/2, 1/4):");
    println!("{:<10} {:<12} {:>10} {:>10}", "stem", "code", "diam h", "reach h");
    for p in branch_points(2, &a)? {
        println!(
            "{:<10} {:<12} {:>10} {:>10}",
            if p.stem.is_empty() {
                "(empty)".to_string()
            } else {
                p.stem.to_string()
            },
            p.code.to_string(),
            ratio_string(&p.height_diam),
            ratio_string(&p.height_reach),
        );
    }

    println!("\npackaged checks at level 3:");
    let separation = verify_separation(3, &a)?;
    println!(
        "  {:<28} constant {:>6}  witness {:<24} pass = {}",
        separation.check, separation.constant, separation.witness, separation.pass
    );
    for report in verify_uniform_branching(3, &a)? {
        println!(
            "  {:<28} constant {:>6}  witness {:<24} pass = {}",
            report.check, report.constant, report.witness, report.pass
        );
    }
    Ok(())
}
