//! Exact linear-algebra oracle: rank, minor scans, the definitional
//! unimodularity test, and brute-force total unimodularity.
//!
//! Run with: cargo run --example oracle

use unigraph::linalg::{
    exact_rank, is_totally_unimodular_bruteforce, is_unimodular_matrix, minor_scan,
};
use unigraph::Graph;

fn main() {
    let triangle = Graph::from_indices(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    let c4 = Graph::from_indices(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let dumbbell = Graph::from_indices(
        7,
        &[(0, 1), (1, 2), (2, 0), (2, 4), (4, 5), (5, 6), (6, 4)],
    )
    .unwrap();

    for (name, g) in [("triangle", &triangle), ("C4", &c4), ("dumbbell", &dumbbell)] {
        let m = g.incidence_matrix();
        let report = minor_scan(&m, None, None);
        println!("== {name} ==");
        println!("rank: {}", exact_rank(&m));
        println!(
            "distinct |d x d minors|: {:?} ({} evaluated)",
            report.distinct_abs_values, report.minors_evaluated
        );
        println!("unimodular: {}", is_unimodular_matrix(&m).unwrap());
        let order = m.rows().min(m.cols());
        println!(
            "totally unimodular (orders 1..={order}): {}",
            is_totally_unimodular_bruteforce(&m, order).unwrap()
        );
        println!();
    }

    // sampled scans can refute but never confirm
    let k6 = {
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                edges.push((i, j));
            }
        }
        Graph::from_indices(6, &edges).unwrap()
    };
    let sampled = minor_scan(&k6.incidence_matrix(), Some(500), Some(42));
    println!("== K6, 500 sampled minors (seed 42) ==");
    println!("distinct |values|: {:?}", sampled.distinct_abs_values);
    match sampled.unimodular_verdict() {
        Ok(ans) => println!("verdict: {ans}"),
        Err(e) => println!("verdict refused: {e}"),
    }
}
