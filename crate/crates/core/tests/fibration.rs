mod common;

use ainerve::ainf::catalog;
use ainerve::colimit::{build_colimit, constant_diagram};
use ainerve::fibration::{
    check_fibration, check_global_fibration, cocartesian_edge_witness, equivalence_lift_witness, has_cocartesian_lifts,
    is_cocartesian_edge, is_inner_fibration, Direction,
};
use ainerve::homotopy::{is_equivalence_edge, tau, tau0};
use ainerve::nerve::{nerve_truncation, NerveSimplex};
use ainerve::simplicial::{standard_simplex, SimplexRef, SimplicialMap, SimplicialSet};

fn to_point(x: &SimplicialSet, point: &SimplicialSet) -> SimplicialMap {
    SimplicialMap::from_fn(x, |d, _| point.degenerate_vertex(0, d))
}

#[test]
fn identity_of_a_nerve_is_an_inner_fibration() {
    let a = catalog::iso_pair();
    let n = nerve_truncation(&a, 3).unwrap().set;
    let r = is_inner_fibration(&n, &n, &SimplicialMap::identity(&n), 3).unwrap();
    assert!(r.pass() && r.agree);
}

#[test]
fn nerve_over_a_point() {
    let a = catalog::poset(1);
    let n = nerve_truncation(&a, 3).unwrap().set;
    let point = standard_simplex(0).with_cap(3).unwrap();
    let p = to_point(&n, &point);
    let r = check_fibration("p", &n, &point, &p, 3, Direction::Co).unwrap();
    assert!(r.pass, "{}", r.summary());
    // the only non-identity edge a_0_1 is not an equivalence
    let t = forward_edge(&n, &a);
    assert!(!is_cocartesian_edge(&n, &point, &p, &t, 3).unwrap());
    let w = cocartesian_edge_witness(&n, &point, &p, &t, 3).unwrap().unwrap();
    assert_eq!(w.k, 0);
    let degenerate = n.degenerate_vertex(0, 1);
    assert!(is_cocartesian_edge(&n, &point, &p, &degenerate, 3).unwrap());
}

fn forward_edge(n: &SimplicialSet, a: &ainerve::ainf::AInfCategory) -> SimplexRef {
    let t = nerve_truncation(a, 1).unwrap();
    let mut e = NerveSimplex::zero(a, vec![0, 1]);
    e.set(&[0, 1], a.basis_vector(a.basis_id("a_0_1").unwrap())).unwrap();
    let r = t.lookup(a, &e).unwrap();
    assert_eq!(n.cell(1, r.base).id, t.set.cell(1, r.base).id);
    r
}

#[test]
fn removing_a_triangle_breaks_inner_lifting() {
    let a = catalog::poset(2);
    let n = nerve_truncation(&a, 2).unwrap().set;
    let (sub, _) = n.subcomplex(|d, _| d < 2).unwrap();
    let point = standard_simplex(0).with_cap(2).unwrap();
    let p = to_point(&sub, &point);
    let r = is_inner_fibration(&sub, &point, &p, 2).unwrap();
    assert!(!r.horn_lifting && !r.fibers_quasi_categories && r.agree);
    let w = r.lifting_witness.unwrap();
    assert_eq!((w.n, w.k), (2, 1));
    assert!(has_cocartesian_lifts(&sub, &point, &p, 2).is_err());
}

#[test]
fn cap_below_two_is_rejected() {
    let n = nerve_truncation(&catalog::discrete(1), 1).unwrap().set;
    let point = standard_simplex(0).with_cap(1).unwrap();
    let p = to_point(&n, &point);
    assert!(has_cocartesian_lifts(&n, &point, &p, 1).is_err());
}

#[test]
fn constant_diagrams_pass_both_directions() {
    let base = standard_simplex(1).with_cap(3).unwrap();
    for a in [catalog::discrete(1), catalog::poset(1)] {
        let g = build_colimit(&constant_diagram(&base, &a).unwrap(), 3).unwrap();
        for direction in [Direction::Co, Direction::Contra] {
            let r = check_global_fibration(&g, 3, direction).unwrap();
            assert!(r.pass, "{}", r.summary());
            assert!(r.inner_fibration.agree);
            assert_eq!(r.cocartesian.unwrap().equivalence_lifts, Some(true));
        }
    }
}

#[test]
fn iso_arrow_passes() {
    let g = build_colimit(&common::iso_arrow(3), 3).unwrap();
    let r = check_global_fibration(&g, 3, Direction::Co).unwrap();
    assert!(r.pass, "{}", r.summary());
    assert_eq!(r.summary(), "inner_fibration: pass, cocartesian: pass");
}

#[test]
fn broken_arrow_fails_the_equivalence_criterion() {
    let d = common::broken_arrow(3);
    let g = build_colimit(&d, 3).unwrap();
    let r = check_global_fibration(&g, 3, Direction::Co).unwrap();
    assert!(r.inner_fibration.pass());
    assert!(!r.pass);
    let c = r.cocartesian.as_ref().unwrap();
    assert_eq!(c.equivalence_lifts, Some(false));
    let w = c.equivalence_witness.clone().unwrap();
    assert_eq!(w.edge.base, "0,1");
    assert_eq!(Some(w), equivalence_lift_witness(&g, Direction::Co).unwrap());
    // directly: X and Y are not isomorphic in τ N(F(0,1))
    let cat = d.category(1, 0);
    let n = nerve_truncation(cat, 3).unwrap().set;
    let classes = tau0(&n, 3).unwrap();
    assert_eq!(classes.len(), 2);
    let h = tau(&n, 3).unwrap();
    let (x, y) = (cat.object("X").unwrap(), cat.object("Y").unwrap());
    assert!(h.hom(x, y).iter().all(|&c| !h.is_iso(c)));
}

#[test]
fn iso_edges_are_equivalences_in_the_nerve() {
    let a = catalog::iso_pair();
    let t = nerve_truncation(&a, 2).unwrap();
    let mut e = NerveSimplex::zero(&a, vec![0, 1]);
    e.set(&[0, 1], a.basis_vector(a.basis_id("u").unwrap())).unwrap();
    let r = t.lookup(&a, &e).unwrap();
    assert!(is_equivalence_edge(&t.set, &r, 2).unwrap());
}

#[test]
fn certification_is_monotone_in_the_cap() {
    let g = build_colimit(&common::iso_arrow(3), 3).unwrap();
    for cap in 2..=3 {
        assert!(check_global_fibration(&g, cap, Direction::Co).unwrap().pass);
    }
    let b = build_colimit(&common::broken_arrow(3), 3).unwrap();
    for cap in 2..=3 {
        assert!(!check_global_fibration(&b, cap, Direction::Co).unwrap().pass);
    }
}
