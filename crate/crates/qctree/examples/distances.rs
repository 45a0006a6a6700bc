//! Exact distances between symbolic points.
//!
//! Points of the tree are eventually periodic letter sequences like
//! `1,2,(3)` (prefix `1,2`, then `3` forever). Distances come out as exact
//! rationals for any admissible weight vector. This example measures a few
//! pairs under the uniform weight on three letters and under a lighter
//! third letter, showing how the weight reshapes the tree.
//!
//! Run with: `cargo run --example distances`

use qctree::metric::distance_exact;
use qctree::{decimal_string, parse_ratio, ratio_string, PointCode, Weight};

fn main() -> qctree::Result<()> {
    let uniform = Weight::uniform(3);
    let skewed = Weight::new(vec![
        parse_ratio("1/2")?,
        parse_ratio("1/2")?,
        parse_ratio("1/8")?,
    ])?;

    let pairs = [
        ("(1)", "(2)"),
        ("(1)", "1,(2)"),
        ("(3)", "(1)"),
        ("3,(1)", "3,(2)"),
        ("1,2,(3)", "2,1,(3)"),
        ("1,(2)", "2,(1)"),
    ];

    println!("pair                    uniform a(3)=1/2     skewed a(3)=1/8");
    for (x, y) in pairs {
        let px: PointCode = x.parse()?;
        let py: PointCode = y.parse()?;
        let du = distance_exact(&px, &py, &uniform)?;
        let ds = distance_exact(&px, &py, &skewed)?;
        println!(
            "{:<10} to {:<10} {:>8} = {}   {:>8} = {}",
            x,
            y,
            ratio_string(&du),
            decimal_string(&du, 6),
            ratio_string(&ds),
            decimal_string(&ds, 6),
        );
    }

    // The last pair above is the same point written two ways: the gate
    // where the three first-level tiles meet.
    let gate_a: PointCode = "1,(2)".parse()?;
    let gate_b: PointCode = "2,(1)".parse()?;
    println!(
        "\n1,(2) and 2,(1) denote one point: canonical forms {} and {}",
        gate_a.canonical(),
        gate_b.canonical()
    );
    Ok(())
}
