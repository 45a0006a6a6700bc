//! Moran exponents and the infinite-alphabet tail certificate.
//!
//! For a finite weight vector the Hausdorff dimension of the tree solves
//! `sum a(i)^s = 1`; bisection pins it to any tolerance. For a weight with
//! a geometric tail the sum has a closed form, and showing it drops below 1
//! at some exponent certifies the dimension is finite. This example sweeps
//! the uniform alphabets and certifies one tail weight.
//!
//! Run with: `cargo run --example dimensions`

use qctree::dimension::{alphabet_sum, dimension_bound_infinity, moran_dimension};
use qctree::{parse_ratio, Weight};

fn main() -> qctree::Result<()> {
    println!("uniform weights: m letters of weight 1/2 give exponent log m / log 2");
    println!("{:>3} {:>16} {:>16} {:>12}", "m", "exponent", "log m / log 2", "residual");
    for m in 2..=8 {
        let solution = moran_dimension(m, &Weight::uniform(m), 1e-12)?;
        println!(
            "{m:>3} {:>16.12} {:>16.12} {:>12.2e}",
            solution.exponent,
            (m as f64).log2(),
            solution.residual
        );
    }

    let skewed = Weight::new(vec![
        parse_ratio("1/2")?,
        parse_ratio("1/2")?,
        parse_ratio("1/4")?,
        parse_ratio("1/8")?,
    ])?;
    let solution = moran_dimension(4, &skewed, 1e-12)?;
    println!(
        "\nskewed weight 1/2, 1/2, 1/4, 1/8: exponent {:.12} in bracket [{:.12}, {:.12}]",
        solution.exponent, solution.bracket.0, solution.bracket.1
    );

    // Infinitely many letters, weights 1/2, 1/2, 1/4, 1/8, ... halving on.
    let tail = Weight::with_geometric_tail(
        vec![parse_ratio("1/2")?, parse_ratio("1/2")?],
        parse_ratio("1/2")?,
    )?;
    println!("\ngeometric tail weight, sum of a(n)^s:");
    for s in [1.0, 1.25, 1.5, 2.0] {
        let sum = alphabet_sum(&tail, s)?;
        let certified = dimension_bound_infinity(&tail, s)?;
        println!("  s = {s:<5} sum = {sum:.6}   certifies dimension <= s: {certified}");
    }
    Ok(())
}
