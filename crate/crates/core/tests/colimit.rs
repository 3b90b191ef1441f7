mod common;

use std::collections::BTreeMap;

use ainerve::ainf::catalog;
use ainerve::colimit::{build_colimit, constant_diagram, Diagram, DiagramJson, GlobalComplexJson};
use ainerve::simplicial::{standard_simplex, FaceJson, SimplicialMap, SimplicialSetJson};

fn check_pairs(d: &Diagram, cap: usize) {
    let g = build_colimit(d, cap).unwrap();
    for n in 0..=cap.min(2) {
        assert_eq!(g.total.simplices(n).len(), common::pair_count(d, n), "dimension {n}");
    }
}

#[test]
fn constant_edge_counts_match_pairs() {
    let base = standard_simplex(1).with_cap(2).unwrap();
    for a in [catalog::discrete(1), catalog::poset(1), catalog::iso_pair()] {
        let d = constant_diagram(&base, &a).unwrap();
        let g = build_colimit(&d, 2).unwrap();
        assert_eq!(g.total.count(0), 2 * a.object_count());
        check_pairs(&d, 2);
    }
}

#[test]
fn glued_edges_counts_match_pairs() {
    let d = common::glued_edges(2);
    let g = build_colimit(&d, 2).unwrap();
    assert_eq!(g.total.count(0), 3);
    check_pairs(&d, 2);
}

#[test]
fn arrow_diagrams_counts_match_pairs() {
    check_pairs(&common::iso_arrow(2), 2);
    check_pairs(&common::broken_arrow(2), 2);
}

#[test]
fn loop_base_counts_match_pairs() {
    let d = constant_diagram(&common::loop_base(2), &catalog::poset(1)).unwrap();
    check_pairs(&d, 2);
}

#[test]
fn universal_property_against_independent_cocones() {
    let a = catalog::poset(1);
    let base = standard_simplex(1).with_cap(2).unwrap();
    let g = build_colimit(&constant_diagram(&base, &a).unwrap(), 2).unwrap();
    for c in [
        common::point_cocone(&g),
        common::base_cocone(&g),
        common::fold_cocone(&g, &a),
    ] {
        assert!(g.verify_universal_property(&c, None).unwrap());
    }
    let to_base = g.mediating_map(&common::base_cocone(&g)).unwrap();
    assert_eq!(to_base, g.projection);
}

#[test]
fn canonical_cocone_mediates_by_the_identity() {
    let a = catalog::discrete(1);
    let base = standard_simplex(1).with_cap(2).unwrap();
    let g = build_colimit(&constant_diagram(&base, &a).unwrap(), 2).unwrap();
    let c = g.canonical_cocone();
    let id = SimplicialMap::identity(&g.total);
    assert_eq!(g.mediating_map(&c).unwrap(), id);
    assert!(g.verify_universal_property(&c, Some(&id)).unwrap());
}

#[test]
fn non_commuting_cocone_is_an_error() {
    let a = catalog::discrete(2);
    let base = standard_simplex(1).with_cap(2).unwrap();
    let g = build_colimit(&constant_diagram(&base, &a).unwrap(), 2).unwrap();
    let mut c = g.canonical_cocone();
    c.legs[0].swap(0, 1);
    assert!(g.verify_universal_property(&c, None).is_err());
}

#[test]
fn global_json_round_trip() {
    let g = build_colimit(&common::iso_arrow(2), 2).unwrap();
    let json = g.to_json();
    let text = serde_json::to_string(&json).unwrap();
    let back: GlobalComplexJson = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    let (total, base, p) = back.projection_map().unwrap();
    assert_eq!(total.counts(), g.total.counts());
    p.check(&total, &base).unwrap();
}

#[test]
fn non_regular_base_is_rejected() {
    let face = |b: &str, w: Vec<usize>| FaceJson {
        base: b.into(),
        degeneracy_word: w,
    };
    let base = SimplicialSetJson {
        cap: 2,
        cells: vec![vec!["v".into()], vec!["l".into()], vec!["t".into()]],
        faces: BTreeMap::from([
            ("l".to_string(), vec![face("v", vec![]), face("v", vec![])]),
            (
                "t".to_string(),
                vec![face("l", vec![]), face("l", vec![]), face("v", vec![0])],
            ),
        ]),
    };
    let json = DiagramJson {
        base,
        f: BTreeMap::new(),
        categories: BTreeMap::new(),
        embeddings: BTreeMap::new(),
        tags: BTreeMap::new(),
    };
    assert!(Diagram::from_json(&json).is_err());
}
