//! Certificate guarantees checked against the exact oracles.

use clique_bounds::io::{generate, Generator};
use clique_bounds::{
    build_alpha_sequence, build_beta_sequence, certify_alpha_bound, certify_beta_sequence,
    clique_number_exact, extend_to_delta_terminal, is_delta_set, phi_exact, wei_bound, Graph,
    Justification, OracleLimits, SequenceKind, TieBreak, VertexSequence,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0f64..=1.0, any::<u64>())
        .prop_map(|(n, p, seed)| generate(&Generator::Gnp { n, p, seed }).unwrap())
}

fn arb_tie() -> impl Strategy<Value = TieBreak> {
    prop_oneof![
        Just(TieBreak::LowestId),
        any::<u64>().prop_map(TieBreak::Seeded)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn alpha_certificates_sit_between_phi_and_omega(g in arb_graph(9), tie in arb_tie()) {
        let lim = OracleLimits::default();
        let c = certify_alpha_bound(&g, tie).unwrap();
        let omega = clique_number_exact(&g, &lim).unwrap();
        let (phi, _) = phi_exact(&g, &lim).unwrap();
        prop_assert!(c.r() <= omega);
        if c.justification() == Justification::Theorem1 {
            prop_assert!(phi <= c.r());
            prop_assert!(wei_bound(&g).unwrap().le_int(c.r()));
        }
    }

    #[test]
    fn shortest_delta_terminal_prefix_also_bounds_phi(g in arb_graph(9), tie in arb_tie()) {
        let lim = OracleLimits::default();
        let full = build_alpha_sequence(&g, tie).unwrap();
        if let Ok(short) = extend_to_delta_terminal(&g, &full.prefix(1)) {
            let (phi, _) = phi_exact(&g, &lim).unwrap();
            prop_assert!(phi <= short.len());
            prop_assert!(wei_bound(&g).unwrap().le_int(short.len()));
        }
    }

    #[test]
    fn maximal_beta_sequences_meet_the_degree_sum_condition(g in arb_graph(9), tie in arb_tie()) {
        let seq = build_beta_sequence(&g, tie).unwrap();
        prop_assert!(seq.is_maximal(&g));
        prop_assert!(seq.degree_sum(&g) <= (seq.len() - 1) * g.n());
    }

    #[test]
    fn beta_prefixes_with_delta_terminal_bound_wei(g in arb_graph(9), tie in arb_tie()) {
        let w = wei_bound(&g).unwrap();
        let full = build_beta_sequence(&g, tie).unwrap();
        for k in 2..=full.len() {
            let p = full.prefix(k);
            if is_delta_set(&g, p.terminal().unwrap()).unwrap() {
                let c = certify_beta_sequence(&g, &p).unwrap();
                prop_assert!(w.le_int(k));
                prop_assert!(matches!(c.justification(), Justification::Theorem2 | Justification::Theorem3));
                if c.justification() == Justification::Theorem2 {
                    prop_assert!(c.also_applies().contains(&Justification::Theorem3));
                }
            }
        }
    }

    #[test]
    fn guarantees_hold_for_every_tie_break(g in arb_graph(8), seeds in prop::collection::vec(any::<u64>(), 4)) {
        let omega = clique_number_exact(&g, &OracleLimits::default()).unwrap();
        let w = wei_bound(&g).unwrap();
        for s in seeds {
            for kind in [SequenceKind::Alpha, SequenceKind::Beta] {
                let seq = match kind {
                    SequenceKind::Alpha => build_alpha_sequence(&g, TieBreak::Seeded(s)),
                    SequenceKind::Beta => build_beta_sequence(&g, TieBreak::Seeded(s)),
                }
                .unwrap();
                prop_assert!(seq.len() <= omega);
                prop_assert!(w.le_int(seq.len()));
            }
        }
    }
}

#[test]
fn delta_terminal_need_not_be_independent() {
    // Triangle plus three isolated vertices: after v1 = 0 the terminal
    // N(0) = {1, 2} is a δ-set (d = 2 <= 6 - 2) yet contains the edge 1-2.
    let g = generate(&Generator::Complete(3))
        .unwrap()
        .disjoint_union(&Graph::empty(3));
    let start =
        VertexSequence::from_vertices(&g, SequenceKind::Alpha, TieBreak::LowestId, &[0]).unwrap();
    let short = extend_to_delta_terminal(&g, &start).unwrap();
    assert_eq!(short.vertices(), &[0, 1]);
    let t = short.terminal().unwrap();
    assert!(is_delta_set(&g, t).unwrap());
    assert!(!g.is_independent(t).unwrap());
    assert_eq!(
        build_alpha_sequence(&g, TieBreak::LowestId).unwrap().len(),
        3
    );
}

#[test]
fn early_delta_terminals_occur_in_random_graphs() {
    let mut found = 0;
    for seed in 0..200 {
        let g = generate(&Generator::Gnp {
            n: 10,
            p: 0.5,
            seed,
        })
        .unwrap();
        let full = build_alpha_sequence(&g, TieBreak::LowestId).unwrap();
        if let Ok(short) = extend_to_delta_terminal(&g, &full.prefix(1)) {
            if short.len() < full.len() && !g.is_independent(short.terminal().unwrap()).unwrap() {
                found += 1;
            }
        }
    }
    assert!(found > 0);
}
