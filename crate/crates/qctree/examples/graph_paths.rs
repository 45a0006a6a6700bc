//! Level graphs, neighbor stars, and unique arcs.
//!
//! The words of length `k` over `m` letters form a combinatorial tree: the
//! level-`k` graph. Adjacency has a closed form (two words are neighbors
//! when their difference is one of two stereotyped remainder patterns), and
//! between any two words there is exactly one arc. This example prints a
//! small graph, walks an arc, and confirms the closed form against the
//! inductive construction.
//!
//! Run with: `cargo run --example graph_paths`

use qctree::graphs::{arc, brute_force_edges, neighbors, verify_tree_structure};
use qctree::{Alphabet, Word};

fn main() -> qctree::Result<()> {
    let m = 3;

    println!("neighbor stars in the level-2 graph over {m} letters:");
    for w in ["1,1", "1,2", "2,1", "3,3"] {
        let word: Word = w.parse()?;
        let star = neighbors(&word, Alphabet::Finite(m))?;
        let names: Vec<String> = star.iter().map(Word::to_string).collect();
        println!("  {w}  ->  {}", names.join("  "));
    }

    let from: Word = "1,1,1".parse()?;
    let to: Word = "3,2,1".parse()?;
    let path = arc(&from, &to)?;
    println!("\nunique arc from {from} to {to} ({} vertices):", path.len());
    for w in &path {
        println!("  {w}");
    }

    println!("\nstructure checks (vertices, edges, connected):");
    for k in 1..=4 {
        let report = verify_tree_structure(k, m)?;
        println!(
            "  level {k}: {} vertices, {} edges, connected = {}, matches inductive = {}",
            report.vertices,
            report.edges,
            report.connected,
            report.passed && brute_force_edges(k, m)?.len() as u64 == report.edges,
        );
    }
    Ok(())
}
