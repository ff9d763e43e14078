mod common;

use common::*;
use evidnet::belief::{
    conjunctive_combine, dempster_combine, vacuous_extend, MassFunction, TransportStrategy,
};
use evidnet::fusion::{
    decide, fuse_at_node, gamma_passage, global_fusion, network_belief, FusionError, FusionOptions,
    RuleSet,
};
use evidnet::graph::{validate_graph, EvidentialGraph};
use evidnet::io::{load_graph, parse_graph, GraphDocument};
use evidnet::oracle::random_bba;

fn section5_graph(with_second: bool) -> EvidentialGraph {
    let s = social();
    let mut g = EvidentialGraph::new(gamma_table(&s)).unwrap();
    g.add_node("n1", person(&s)).unwrap();
    g.add_node("n2", person(&s)).unwrap();
    g.add_node("n3", MassFunction::vacuous(&s.nodes)).unwrap();
    g.add_edge("n1", "n3", friendly(&s)).unwrap();
    g.add_edge("n2", "n3", friendly(&s)).unwrap();
    g.attach_message("m1", "n1", "n3", message(&s, "PNC"))
        .unwrap();
    if with_second {
        g.attach_message("m2", "n2", "n3", message(&s, "PC"))
            .unwrap();
    }
    assert!(validate_graph(&g).is_empty());
    g
}

#[test]
fn gamma_table_matches_printed_cells() {
    let s = social();
    let table = gamma_table(&s);
    assert!(table.missing_cells().is_empty());
    let loaded = load_graph(example_path("paper_section5.json")).unwrap();
    let mut cells = 0;
    for (link, row) in GAMMA_PRINTED {
        for (node, image) in row {
            let want = s.messages.set_of(image).unwrap();
            assert_eq!(table.get(node, link), Some(want), "{node}/{link}");
            assert_eq!(
                loaded.gamma().get(node, link),
                Some(want),
                "{node}/{link} from file"
            );
            cells += 1;
        }
    }
    assert_eq!(cells, 12);
}

#[test]
fn bundled_file_matches_api_graph() {
    let g = load_graph(example_path("paper_section5.json")).unwrap();
    assert_eq!(g.nodes().count(), 3);
    assert_eq!(g.edges().count(), 2);
    assert_eq!(g.messages().count(), 2);
    assert_eq!(g, section5_graph(true));
}

#[test]
fn two_senders_reproduce_fusion_table() {
    let report = fuse_at_node(&section5_graph(true), "n3", FusionOptions::default()).unwrap();
    let s = social();
    assert_eq!(report.sources.len(), 2);
    assert_eq!(report.sources[0].message, "m1");
    assert!(close(report.conflict, 0.5541, GOLDEN_TOL));
    assert!(close(
        report.global.mass(s.messages.singleton(1)),
        0.3694,
        GOLDEN_TOL
    ));
    assert_eq!(report.decision.label, "PNC");
    assert!(close(report.decision.probability(), 0.8455, GOLDEN_TOL));
    assert!(!report.decision.ambiguous);
}

#[test]
fn single_sender_first_case() {
    let report = fuse_at_node(&section5_graph(false), "n3", FusionOptions::default()).unwrap();
    assert!(close(
        report.decision.betp.get("PNC").unwrap(),
        0.8687,
        GOLDEN_TOL
    ));
    // network fusion reinforces the message-only 0.7
    let alone = decide(&message(&social(), "PNC")).unwrap();
    assert!(report.decision.probability() > alone.probability());
}

#[test]
fn all_vacuous_gives_uniform_decision() {
    let s = social();
    let mut g = EvidentialGraph::new(gamma_table(&s)).unwrap();
    g.add_node("a", MassFunction::vacuous(&s.nodes)).unwrap();
    g.add_node("b", MassFunction::vacuous(&s.nodes)).unwrap();
    g.add_edge("a", "b", MassFunction::vacuous(&s.links))
        .unwrap();
    g.attach_message("m", "a", "b", MassFunction::vacuous(&s.messages))
        .unwrap();
    for strategy in [TransportStrategy::Ignorance, TransportStrategy::Union] {
        let r = fuse_at_node(
            &g,
            "b",
            FusionOptions {
                strategy,
                rules: RuleSet::Mixed,
            },
        )
        .unwrap();
        assert_eq!(r.global, MassFunction::vacuous(&s.messages));
        assert!(r
            .decision
            .betp
            .probabilities()
            .iter()
            .all(|&p| close(p, 0.25, 1e-15)));
        assert!(r.decision.ambiguous);
    }
}

#[test]
fn fusion_errors() {
    let g = section5_graph(true);
    assert_eq!(
        fuse_at_node(&g, "nobody", FusionOptions::default()),
        Err(FusionError::UnknownTarget("nobody".into()))
    );
    assert_eq!(
        fuse_at_node(&g, "n1", FusionOptions::default()),
        Err(FusionError::NoIncomingMessages("n1".into()))
    );
}

#[test]
fn union_strategy_changes_gamma_passage_only_on_wide_focals() {
    let s = social();
    let net = network_belief(&person(&s), &friendly(&s), &s.product).unwrap();
    let m = gamma_passage(&net, &gamma_table(&s), TransportStrategy::Union).unwrap();
    assert!(close(m.mass(s.messages.singleton(1)), 0.5625, 1e-12));
    assert!(close(
        m.mass(s.messages.set_of(&["PNC", "INC", "IC"]).unwrap()),
        0.1875,
        1e-12
    ));
    assert!(close(m.mass(s.messages.full_set()), 0.25, 1e-12));
    let vac = MassFunction::vacuous(&s.product);
    for strategy in [TransportStrategy::Ignorance, TransportStrategy::Union] {
        let out = gamma_passage(&vac, &gamma_table(&s), strategy).unwrap();
        assert_eq!(out, MassFunction::vacuous(&s.messages));
    }
}

#[test]
fn network_belief_never_conflicts() {
    let s = social();
    for seed in 0..200 {
        let node = seeded_bba(&s.nodes, seed);
        let edge = seeded_bba(&s.links, seed + 31);
        let (xn, xe) = (
            vacuous_extend(&node, &s.product).unwrap(),
            vacuous_extend(&edge, &s.product).unwrap(),
        );
        let conj = conjunctive_combine(&xn, &xe).unwrap();
        assert_eq!(conj.conflict(), 0.0);
        assert_eq!(conj, dempster_combine(&xn, &xe).unwrap());
        assert_eq!(conj, network_belief(&node, &edge, &s.product).unwrap());
    }
}

#[test]
fn global_fusion_is_permutation_invariant() {
    let s = social();
    for seed in 0..50 {
        let ms: Vec<MassFunction> = (0..3)
            .map(|k| seeded_bba(&s.messages, seed * 3 + k))
            .collect();
        let base = global_fusion(&ms).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let shuffled: Vec<MassFunction> = perm.iter().map(|&i| ms[i].clone()).collect();
            assert!(global_fusion(&shuffled).unwrap().max_abs_diff(&base) <= ORACLE_TOL);
        }
    }
}

#[test]
fn decision_ignores_dempster_normalization() {
    let s = social();
    for seed in 0..200 {
        let a = random_bba(&s.messages, seed, 3).unwrap();
        let b = random_bba(&s.messages, seed + 500, 2).unwrap();
        let conj = conjunctive_combine(&a, &b).unwrap();
        let Ok(norm) = conj.normalized() else {
            continue;
        };
        let (d1, d2) = (decide(&conj).unwrap(), decide(&norm).unwrap());
        assert_eq!(d1.label, d2.label);
        for (x, y) in d1.betp.probabilities().iter().zip(d2.betp.probabilities()) {
            assert!(close(*x, *y, ORACLE_TOL));
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let g = section5_graph(true);
    let a = fuse_at_node(&g, "n3", FusionOptions::default()).unwrap();
    let b = fuse_at_node(&g.clone(), "n3", FusionOptions::default()).unwrap();
    assert_eq!(a, b);
    let bits = |r: &evidnet::FusionReport| {
        r.global
            .focals()
            .map(|(s, m)| (s, m.to_bits()))
            .collect::<Vec<_>>()
    };
    assert_eq!(bits(&a), bits(&b));
}

#[test]
fn save_load_round_trip_preserves_reports() {
    let doc = evidnet::io::generate_graph(&evidnet::io::GenerateOptions {
        nodes: 8,
        density: 0.4,
        seed: 11,
    });
    let g = doc.to_graph().unwrap();
    let again = parse_graph(&GraphDocument::from_graph(&g).to_json()).unwrap();
    assert_eq!(again, g);
    for node in g.nodes() {
        if g.incoming_messages(&node.id).next().is_none() {
            continue;
        }
        for rules in [RuleSet::Mixed, RuleSet::Conjunctive] {
            let opts = FusionOptions {
                strategy: TransportStrategy::Union,
                rules,
            };
            // random graphs can end in total conflict; both sides must agree either way
            let r1 = fuse_at_node(&g, &node.id, opts);
            let r2 = fuse_at_node(&again, &node.id, opts);
            assert_eq!(r1, r2);
        }
    }
}

#[test]
fn rule_override_dempster_removes_conflict() {
    let g = section5_graph(true);
    let opts = FusionOptions {
        strategy: TransportStrategy::Ignorance,
        rules: RuleSet::Dempster,
    };
    let r = fuse_at_node(&g, "n3", opts).unwrap();
    assert_eq!(r.conflict, 0.0);
    assert!(r.sources.iter().all(|s| s.fused.is_normal()));
    // pignistic already renormalizes, so the decision is unchanged
    let mixed = fuse_at_node(&g, "n3", FusionOptions::default()).unwrap();
    assert_eq!(r.decision.label, mixed.decision.label);
    assert!(close(
        r.decision.probability(),
        mixed.decision.probability(),
        1e-12
    ));
}
