use isozono::catalog::{basis_index, builtin_graph, builtin_names, d4_basis, GraphSpec};
use isozono::graph::{edge_boundary_direct, LatticeSet, PLGraph};
use isozono::linalg::is_primitive;
use isozono::search::{convergence_experiment, exhaustive_min_boundary, local_search_min_boundary};
use isozono::zonotope::Zonotope;
use isozono::{Rational, Scalar};
use num_traits::{One, Signed};
use proptest::prelude::*;

fn graph(name: &str) -> PLGraph {
    builtin_graph(name).unwrap().graph().unwrap()
}

#[test]
fn heuristic_matches_exhaustive_in_the_plane() {
    for name in ["l1:2", "linf:2", "tri"] {
        let g = graph(name);
        for m in 1..=10 {
            let exact = exhaustive_min_boundary(&g, m, 3).unwrap();
            let heuristic = local_search_min_boundary(&g, m, 30_000, 1).unwrap();
            assert_eq!(heuristic.min_boundary, exact.min_boundary, "{name} m = {m}");
            for w in exact.witnesses.iter().chain(&heuristic.witnesses) {
                assert_eq!(w.len(), m);
                assert_eq!(edge_boundary_direct(&g, w).unwrap(), exact.min_boundary, "{name} m = {m}");
            }
        }
    }
}

#[test]
fn seeds_are_deterministic() {
    let g = graph("linf:2");
    for seed in [0, 9, 1234] {
        assert_eq!(
            local_search_min_boundary(&g, 15, 5000, seed).unwrap(),
            local_search_min_boundary(&g, 15, 5000, seed).unwrap()
        );
    }
}

#[test]
fn l1_ratios_improve_with_scale() {
    let alphas: Vec<Rational> = (1..=30).map(Rational::from_i64).collect();
    let rows = convergence_experiment(&graph("l1:2"), &alphas).unwrap();
    for pair in rows.windows(2) {
        let dev = |x: &Rational| (x.clone() - Rational::one()).abs();
        assert!(dev(&pair[1].vol_ratio) <= dev(&pair[0].vol_ratio));
        assert!(dev(&pair[1].boundary_ratio) <= dev(&pair[0].boundary_ratio));
    }
}

#[test]
fn d4_basis_sanity() {
    assert_eq!(basis_index(&d4_basis()), 2);
    let spec = builtin_graph("d4cross").unwrap();
    assert_eq!(spec.generators.len(), 12);
    assert!(spec.generators.iter().all(|v| is_primitive(v)));
}

#[test]
fn text_round_trips() {
    for name in builtin_names() {
        let spec = builtin_graph(&name).unwrap();
        assert_eq!(GraphSpec::from_text(&spec.to_text()).unwrap(), spec, "{name}");
        let z = Zonotope::from_graph(&spec.graph().unwrap());
        assert_eq!(Zonotope::from_text(&z.to_text()).unwrap(), z, "{name}");
    }
}

proptest! {
    #[test]
    fn lattice_set_text_round_trips(pts in prop::collection::vec(prop::collection::vec(-50i64..=50, 3), 0..30)) {
        let s = LatticeSet::new(3, pts).unwrap();
        prop_assert_eq!(LatticeSet::from_text(3, &s.to_text()).unwrap(), s);
    }
}
