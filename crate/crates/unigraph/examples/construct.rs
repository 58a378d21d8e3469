//! Build certified-unimodular graphs: flowers, validated ears, scripts,
//! and the seeded random generator.
//!
//! Run with: cargo run --example construct

use unigraph::construct::{
    add_ear, flower_graph, random_unimodular, run_script, Base, ConstructionScript, Ear, EarCase,
    GeneratorParams, CARPEL_LABEL,
};
use unigraph::io::{graph_to_json, script_to_json};
use unigraph::soc::decide_unimodular;

fn main() {
    // a flower: odd cycles sharing exactly the carpel vertex
    let flower = flower_graph(&[3, 5, 7]).unwrap();
    println!(
        "flower [3,5,7]: {} vertices, {} edges, verdict {:?}",
        flower.vertex_count(),
        flower.edge_count(),
        decide_unimodular(&flower).verdict
    );

    // ears are validated by case: touching the carpel is unrestricted...
    let (g, case) = add_ear(&flower, "v", "p2.2", 3, Some(CARPEL_LABEL)).unwrap();
    println!("ear v..p2.2 length 3 accepted as {case:?}");
    // ...while an ear between two petal vertices must match path parity
    let err = add_ear(&g, "p1.1", "p1.2", 2, Some(CARPEL_LABEL)).unwrap_err();
    println!("ear p1.1..p1.2 length 2 rejected: {err}");

    // a replayable script
    let script = ConstructionScript {
        base: Base::Flower(vec![3, 3]),
        ears: vec![Ear {
            v1: "v".into(),
            v2: "p1.1".into(),
            length: 2,
            case: EarCase::Alpha,
        }],
    };
    let built = run_script(&script).unwrap();
    println!("\nscript:\n{}", script_to_json(&script));
    println!(
        "replays to {} vertices, verdict {:?}",
        built.vertex_count(),
        decide_unimodular(&built).verdict
    );

    // seeded generation: deterministic, always unimodular
    let (g, script) = random_unimodular(7, &GeneratorParams::default());
    println!("\nseed 7 generates ({} ears):", script.ears.len());
    println!("{}", graph_to_json(&g));
    println!("verdict: {:?}", decide_unimodular(&g).verdict);
}
