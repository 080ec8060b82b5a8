//! Property tests for the contraction calculus on seeded random graphs.

use heightcalc_core::calculus::{
    evaluate, height_coefficients, LoopLabel, LoopLabelledGraph,
};
use heightcalc_core::ratio::rat_i;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut ChaCha8Rng) -> LoopLabelledGraph {
    let n = rng.gen_range(1..=4u32);
    let mut graph = LoopLabelledGraph::new(1..=n);
    let labels = [LoopLabel::OMEGA, LoopLabel::OMEGA_NEG, LoopLabel::BETA];
    for v in 1..=n {
        for _ in 0..rng.gen_range(0..=2) {
            if rng.gen_bool(0.5) {
                graph.add_loop(v, labels[rng.gen_range(0..3)]);
            }
        }
    }
    for _ in 0..rng.gen_range(0..=4) {
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        if u != v {
            graph.add_edge(u, v);
        }
    }
    graph
}

#[test]
fn contractions_preserve_value_and_characteristic() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1715);
    let mut evaluable = 0usize;
    let mut steps = 0usize;
    while evaluable < 200 || steps < 200 {
        let graph = random_graph(&mut rng);
        let g = rng.gen_range(2..=6u32);
        let Ok(value) = evaluate(&graph, g) else { continue };
        evaluable += 1;
        for step in graph.applicable_contractions() {
            let contracted = graph.apply_contraction(step);
            assert_eq!(
                contracted.euler_characteristic(),
                graph.euler_characteristic()
            );
            assert_eq!(
                evaluate(&contracted, g).unwrap(),
                value,
                "contraction changed the value of {graph:?}"
            );
            steps += 1;
        }
        // full reduction agrees as well
        assert_eq!(evaluate(&graph.reduce(), g).unwrap(), value);
    }
    assert!(evaluable >= 200 && steps >= 200);
}

#[test]
fn union_with_scalar_component_multiplies() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2B7E);
    let labels = [LoopLabel::OMEGA, LoopLabel::OMEGA_NEG, LoopLabel::BETA];
    let mut checked = 0usize;
    while checked < 200 {
        let graph = random_graph(&mut rng);
        let g = rng.gen_range(2..=6u32);
        let Ok(value) = evaluate(&graph, g) else { continue };
        let label = labels[rng.gen_range(0..3)];
        let extra = graph.vertices().max().unwrap_or(0) + 1;
        let mut scalar = LoopLabelledGraph::new([extra]);
        scalar.add_loop(extra, label);
        let union = graph.disjoint_union(&scalar);
        let expected = value.scaled(&rat_i(label.degree(g)));
        assert_eq!(evaluate(&union, g).unwrap(), expected);
        checked += 1;
    }
}

#[test]
fn minimal_forms_stay_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5CA1);
    for _ in 0..200 {
        let reduced = random_graph(&mut rng).reduce();
        assert!(reduced.is_minimal());
        assert!(reduced.applicable_contractions().is_empty());
    }
}

#[test]
fn coefficients_scale_quadratically() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x90DE);
    let mut done = 0usize;
    while done < 20 {
        let r = rng.gen_range(1..=3usize);
        let g = rng.gen_range(r.max(2) as u32..=5u32);
        let m: Vec<i64> = (0..r)
            .map(|_| {
                let v = rng.gen_range(1..=3i64);
                if rng.gen_bool(0.5) {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let k = if rng.gen_bool(0.5) { 2i64 } else { 3 };
        let scaled: Vec<i64> = m.iter().map(|x| k * x).collect();
        let base = height_coefficients(&m, g).unwrap();
        let big = height_coefficients(&scaled, g).unwrap();
        let k2 = rat_i(k * k);
        assert_eq!(big.a, &base.a * &k2, "m={m:?} g={g} k={k}");
        assert_eq!(big.b, &base.b * &k2);
        assert_eq!(big.c, &base.c * &k2);
        done += 1;
    }
}

#[test]
fn reduction_of_chi_minus_one_yields_named_minimal_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xF00D);
    let mut seen = 0usize;
    while seen < 50 {
        let graph = random_graph(&mut rng);
        let reduced = graph.reduce();
        for part in reduced.components() {
            if part.euler_characteristic() != -1 {
                continue;
            }
            let (v, l, e) = (part.vertex_count(), part.loops().len(), part.edges().len());
            let shape_ok = matches!((v, l, e), (1, 2, 0) | (2, 2, 1) | (2, 0, 3));
            assert!(shape_ok, "unexpected minimal shape {part:?}");
            seen += 1;
        }
    }
}

#[test]
fn contraction_steps_commute_with_evaluation_order() {
    // applying contractions in any admissible order reaches value parity
    let mut graph = LoopLabelledGraph::new(1..=4);
    graph.add_loop(1, LoopLabel::OMEGA);
    graph.add_edge(1, 2);
    graph.add_edge(2, 3);
    graph.add_edge(3, 4);
    graph.add_edge(3, 4);
    let g = 3;
    let base = evaluate(&graph, g).unwrap();
    for first in graph.applicable_contractions() {
        let one = graph.apply_contraction(first);
        for second in one.applicable_contractions() {
            let two = one.apply_contraction(second);
            assert_eq!(evaluate(&two, g).unwrap(), base);
        }
    }
}
