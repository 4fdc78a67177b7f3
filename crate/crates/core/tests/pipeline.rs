mod common;

use srgswitch::analysis::{srg_spectrum, DEFAULT_PRIMES};
use srgswitch::prelude::*;

use common::{build, random_perm};

#[test]
fn switched_graphs_keep_parameters() {
    for (h, m) in [(2, 1), (3, 1), (3, 2)] {
        let b = build(h, m);
        let gp = apply_switch(&b.gamma, &b.partition).unwrap();
        assert_ne!(gp, b.gamma);
        assert_eq!(srg_check(&b.gamma).unwrap(), b.expected());
        assert_eq!(srg_check(&gp).unwrap(), b.expected());
        assert!(gp.is_connected());
        assert_eq!(apply_switch(&gp, &b.partition).unwrap(), b.gamma);
    }
}

#[test]
fn expected_parameters_match_geometry_formula() {
    for (h, m) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let b = (1usize << h, 1usize << m);
        let (q, n) = b;
        let dual = srg_to_geometry_params((q + 1) * (n - 1), q - 1, n - 1).unwrap();
        assert_eq!(dual, srgswitch::analysis::denniston_line_graph_params(h, m));
    }
}

#[test]
fn geometricity_flips() {
    let b = build(2, 1);
    let t = b.t();
    let gp = apply_switch(&b.gamma, &b.partition).unwrap();
    let before = geometricity_report(&b.gamma, t);
    assert!(before.geometric());
    assert_eq!(before.pencil_count, 64);
    assert_eq!(before.edges_checked, 960);
    let after = geometricity_report(&gp, t);
    assert!(!after.geometric());
    assert!(after.pencil_count < 64);
}

#[test]
fn witness_small_cases() {
    for (h, m) in [(2, 1), (3, 1)] {
        let b = build(h, m);
        let gp = apply_switch(&b.gamma, &b.partition).unwrap();
        let w = proposition_witness(&b.config, &b.lines, &b.gamma, &gp);
        for c in &w.checks {
            assert!(c.passed, "({h},{m}) {}: {}", c.name, c.detail);
        }
        assert_eq!(w.max_clique_original, b.t() + 1);
        assert_eq!(w.pencils_original, 1);
        assert!(w.max_clique_switched <= b.t());
    }
}

#[test]
fn witness_fails_on_unswitched_graph() {
    let b = build(2, 1);
    let w = proposition_witness(&b.config, &b.lines, &b.gamma, &b.gamma);
    assert!(!w.passed());
    let failed: Vec<&str> = w
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name)
        .collect();
    assert!(failed.contains(&"clique_bound_switched"));
}

#[test]
fn charpoly_agrees_with_spectrum() {
    let b = build(2, 1);
    let gp = apply_switch(&b.gamma, &b.partition).unwrap();
    let spectrum = srg_spectrum(&b.expected()).unwrap();
    assert_eq!(
        (spectrum.k, spectrum.r, spectrum.s, spectrum.f, spectrum.g),
        (20, 4, -4, 45, 50)
    );
    let a = char_poly_mod(&b.gamma, &DEFAULT_PRIMES).unwrap();
    let c = char_poly_mod(&gp, &DEFAULT_PRIMES).unwrap();
    assert_eq!(a, c);
    for cp in &a {
        assert_eq!(cp.coefficients, spectrum.char_poly_mod(cp.prime));
    }
    // relabelling leaves the polynomial alone
    let relabelled = b.gamma.permuted(&random_perm(96, 5));
    assert_eq!(char_poly_mod(&relabelled, &DEFAULT_PRIMES).unwrap(), a);
}

#[test]
fn graph6_round_trips_built_graphs() {
    for (h, m) in [(2, 1), (3, 1)] {
        let b = build(h, m);
        let gp = apply_switch(&b.gamma, &b.partition).unwrap();
        for g in [&b.gamma, &gp] {
            assert_eq!(&graph6_decode(&graph6_encode(g)).unwrap(), g);
        }
    }
}

#[test]
fn config_overrides_still_switch() {
    let f = Field::new(3).unwrap();
    let arc = denniston_arc(&f, 1).unwrap();
    let lines = LineSet::new(&f, &arc);
    let gamma = build_line_graph(&lines);
    let expected = srg_check(&gamma).unwrap();
    for (secant, planes) in [(0, (0, 1)), (3, (2, 7)), (10, (5, 4))] {
        let choices = SwitchingChoices {
            secant: Some(secant),
            planes: Some(planes),
            ..Default::default()
        };
        let cfg = find_switching_config(&f, &arc, 1, &choices).unwrap();
        let ps = build_partition(&cfg, &lines);
        let gp = apply_switch(&gamma, &ps).unwrap();
        assert_eq!(srg_check(&gp).unwrap(), expected);
        assert!(!geometricity_report(&gp, arc.len() - 1).geometric());
    }
}
