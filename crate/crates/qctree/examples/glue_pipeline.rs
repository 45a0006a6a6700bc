//! Uniform-branching gluing transforms on a finite metric tree.
//!
//! An arbitrary finite geodesic tree rarely branches evenly. Three gluing
//! steps repair that: step 1 extends short branches so that, at every
//! branch point, all branches beyond the top two reach equally far; step 2
//! pads every branch point with fresh spokes up to a target valence; step 3
//! attaches scaled copies of a reference skeleton at chosen double points,
//! making branch points dense at a controlled rate. Each step is verified
//! by the packaged separation, growth, and density checks.
//!
//! Run with: `cargo run --example glue_pipeline`

use qctree::gluing::{
    step1_uniform_growth, step2_uniform_valence, step3_attach, subdivision_points,
    truncated_tree_skeleton, verify_tree_properties, FiniteGeodesicTree, HeightMode,
};
use qctree::{parse_ratio, ratio_string, Weight};

fn report(tag: &str, t: &FiniteGeodesicTree) -> qctree::Result<()> {
    let properties = verify_tree_properties(t, HeightMode::Reach, None)?;
    print!(
        "{tag}: {} vertices, {} edges, {} branch points",
        t.vertex_count(),
        t.edge_count(),
        properties.branch_points
    );
    if let Some(growth) = &properties.growth {
        print!(", growth constant {}", ratio_string(&growth.constant));
    }
    if let Some(density) = &properties.density {
        print!(", density constant {}", ratio_string(&density.constant));
    }
    println!();
    Ok(())
}

fn main() -> qctree::Result<()> {
    // A lopsided tree: one long arm, one medium, two stubby ones.
    let tree = FiniteGeodesicTree::from_edges(vec![
        ("hub".into(), "a".into(), parse_ratio("2")?),
        ("hub".into(), "b".into(), parse_ratio("1")?),
        ("hub".into(), "c".into(), parse_ratio("1/4")?),
        ("hub".into(), "d".into(), parse_ratio("1/16")?),
        ("a".into(), "a2".into(), parse_ratio("1/2")?),
    ])?;
    report("input      ", &tree)?;
    println!(
        "  branch heights at hub: {}",
        tree.branch_heights("hub")?
            .iter()
            .map(ratio_string)
            .collect::<Vec<_>>()
            .join(", ")
    );

    let grown = step1_uniform_growth(&tree)?;
    report("after step1", &grown)?;
    println!(
        "  branch heights at hub: {}",
        grown
            .branch_heights("hub")?
            .iter()
            .map(ratio_string)
            .collect::<Vec<_>>()
            .join(", ")
    );

    let padded = step2_uniform_valence(&grown, 5)?;
    report("after step2", &padded)?;
    println!("  hub valence is now {}", padded.valence("hub")?);

    // Step 3 on a clean carrier: subdivide the symbolic skeleton and hang
    // scaled copies of it at every inserted double point.
    let a = Weight::uniform(3);
    let carrier = truncated_tree_skeleton(&a, 3, 1)?;
    let delta = parse_ratio("1/4")?;
    let (subdivided, levels) = subdivision_points(&carrier, &delta, 2)?;
    let attached = step3_attach(&subdivided, &levels, 3, &a, &delta, &parse_ratio("1/2")?, 1)?;
    println!(
        "\nstep3 carrier: {} double points at spacing 1/16, each now a branch point",
        levels.len()
    );
    report("after step3", &attached)?;
    Ok(())
}
