//! Block decomposition, bipartiteness witnesses, and induced odd cycle
//! enumeration.
//!
//! Run with: cargo run --example blocks

use unigraph::decompose::{
    bipartite_check, block_decomposition, enumerate_induced_odd_cycles,
};
use unigraph::Graph;

fn main() {
    // dumbbell: two triangles joined by a bridge
    let g = Graph::new(
        &["a1", "a2", "a3", "b1", "b2", "b3"],
        &[
            ("a1", "a2"),
            ("a2", "a3"),
            ("a3", "a1"),
            ("a3", "b1"),
            ("b1", "b2"),
            ("b2", "b3"),
            ("b3", "b1"),
        ],
    )
    .unwrap();

    let dec = block_decomposition(&g);
    for (i, b) in dec.blocks.iter().enumerate() {
        let edges: Vec<String> = b
            .edges
            .iter()
            .map(|&e| {
                let [u, v] = g.endpoints(e);
                format!("{}-{}", g.label(u), g.label(v))
            })
            .collect();
        println!(
            "block {i}: [{}] bipartite={}",
            edges.join(", "),
            b.bipartite
        );
    }
    let cuts: Vec<&str> = dec.cut_vertices.iter().map(|&v| g.label(v)).collect();
    println!("cut vertices: {cuts:?}");
    println!("non-bipartite blocks: {}", dec.non_bipartite_count());

    match bipartite_check(&g) {
        Ok(_) => println!("bipartite"),
        Err(w) => {
            let labels: Vec<&str> = w.vertices().iter().map(|&v| g.label(v)).collect();
            println!("not bipartite; odd cycle witness: {labels:?}");
        }
    }

    let odd = enumerate_induced_odd_cycles(&g, 1000);
    println!(
        "induced odd cycles ({}{}):",
        odd.cycles.len(),
        if odd.truncated { ", truncated" } else { "" }
    );
    for c in &odd.cycles {
        let labels: Vec<&str> = c.vertices().iter().map(|&v| g.label(v)).collect();
        println!("  {labels:?}");
    }
}
