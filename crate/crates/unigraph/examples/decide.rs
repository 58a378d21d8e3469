//! Decide unimodularity for a few characteristic graphs and print the
//! certificates.
//!
//! Run with: cargo run --example decide

use unigraph::io::certificate_to_json;
use unigraph::soc::decide_unimodular;
use unigraph::Graph;

fn main() {
    let samples: Vec<(&str, Graph)> = vec![
        (
            "4-cycle (bipartite)",
            Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ),
        ("K5 (single non-bipartite block)", complete(5)),
        (
            "bowtie (two odd blocks sharing a link vertex)",
            Graph::new(
                &["v", "a", "b", "c", "d"],
                &[
                    ("v", "a"),
                    ("a", "b"),
                    ("b", "v"),
                    ("v", "c"),
                    ("c", "d"),
                    ("d", "v"),
                ],
            )
            .unwrap(),
        ),
        (
            "dumbbell (two disjoint triangles joined by a bridge)",
            Graph::new(
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
            .unwrap(),
        ),
        ("K6 (two disjoint triangles inside)", complete(6)),
    ];

    for (name, g) in &samples {
        let cert = decide_unimodular(g);
        println!("== {name} ==");
        println!("{}", certificate_to_json(g, &cert));
        println!();
    }
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_indices(n, &edges).unwrap()
}
