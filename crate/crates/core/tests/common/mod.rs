#![allow(dead_code)]

pub mod properties;

use std::collections::BTreeMap;

use ainerve::ainf::{catalog, AInfCategory, CategoryJson, FunctorJson, StrictFunctor};
use ainerve::colimit::{Cocone, Diagram, DiagramJson, GlobalComplex};
use ainerve::nerve::{nerve_of_strict_functor, nerve_truncation, Enumerator};
use ainerve::simplicial::{standard_simplex, FaceJson, SimplicialMap, SimplicialSet, SimplicialSetJson};

/// One object `x` with its unit `e_x`.
pub fn point_category(x: &str) -> CategoryJson {
    let mut j = CategoryJson::default();
    let e = format!("e_{x}");
    j.object(x).hom(x, x, &[&e]).unit(x, &e).with_unit_laws();
    j
}

/// Objects `x`, `y` and a single morphism `g : x → y`.
pub fn arrow_category(x: &str, y: &str, g: &str) -> CategoryJson {
    let mut j = CategoryJson::default();
    let (ex, ey) = (format!("e_{x}"), format!("e_{y}"));
    j.object(x)
        .object(y)
        .hom(x, x, &[&ex])
        .hom(y, y, &[&ey])
        .hom(x, y, &[g])
        .unit(x, &ex)
        .unit(y, &ey)
        .with_unit_laws();
    j
}

/// Objects `x`, `y` with units only.
pub fn pair_category(x: &str, y: &str) -> CategoryJson {
    let mut j = CategoryJson::default();
    let (ex, ey) = (format!("e_{x}"), format!("e_{y}"));
    j.object(x)
        .object(y)
        .hom(x, x, &[&ex])
        .hom(y, y, &[&ey])
        .unit(x, &ex)
        .unit(y, &ey)
        .with_unit_laws();
    j
}

/// The inclusion of the one-object category on `x` sending `e_x` to itself.
pub fn include_point(x: &str) -> FunctorJson {
    FunctorJson {
        objects: BTreeMap::from([(x.to_string(), x.to_string())]),
        hom: BTreeMap::from([(format!("e_{x}"), vec![format!("e_{x}")])]),
    }
}

fn vertex_face(v: &str) -> FaceJson {
    FaceJson {
        base: v.to_string(),
        degeneracy_word: vec![],
    }
}

/// `Δ¹` with vertices `0`, `1`, an edge `0,1` carrying `middle`, and the
/// vertices carrying the one-object categories on `X` and `Y`.
pub fn arrow_diagram(middle: CategoryJson, cap: usize) -> DiagramJson {
    DiagramJson {
        base: standard_simplex(1).with_cap(cap).unwrap().to_json(),
        f: BTreeMap::from([
            ("0".into(), "X".into()),
            ("1".into(), "Y".into()),
            ("0,1".into(), "XY".into()),
        ]),
        categories: BTreeMap::from([
            ("X".into(), point_category("X")),
            ("Y".into(), point_category("Y")),
            ("XY".into(), middle),
        ]),
        embeddings: BTreeMap::from([
            ("0,1:0".into(), include_point("Y")),
            ("0,1:1".into(), include_point("X")),
        ]),
        tags: BTreeMap::new(),
    }
}

/// Both vertex inclusions are quasi-equivalences: `X ≅ Y` over the edge.
pub fn iso_arrow(cap: usize) -> Diagram {
    Diagram::from_json(&arrow_diagram(catalog::iso_pair().to_json(), cap)).unwrap()
}

/// The edge category has no morphisms between `X` and `Y`, so neither
/// vertex inclusion is essentially surjective.
pub fn broken_arrow(cap: usize) -> Diagram {
    Diagram::from_json(&arrow_diagram(pair_category("X", "Y"), cap)).unwrap()
}

/// Two edges `a → b ← c`, with `F(ab) = {W → X}` and `F(cb) = {Z → X}`.
pub fn glued_edges(cap: usize) -> Diagram {
    let mut faces = BTreeMap::new();
    faces.insert("ab".to_string(), vec![vertex_face("b"), vertex_face("a")]);
    faces.insert("cb".to_string(), vec![vertex_face("b"), vertex_face("c")]);
    let base = SimplicialSetJson {
        cap,
        cells: vec![vec!["a".into(), "b".into(), "c".into()], vec!["ab".into(), "cb".into()]],
        faces,
    };
    let json = DiagramJson {
        base,
        f: BTreeMap::from([
            ("a".into(), "W".into()),
            ("b".into(), "X".into()),
            ("c".into(), "Z".into()),
            ("ab".into(), "WX".into()),
            ("cb".into(), "ZX".into()),
        ]),
        categories: BTreeMap::from([
            ("W".into(), point_category("W")),
            ("X".into(), point_category("X")),
            ("Z".into(), point_category("Z")),
            ("WX".into(), arrow_category("W", "X", "g")),
            ("ZX".into(), arrow_category("Z", "X", "h")),
        ]),
        embeddings: BTreeMap::from([
            ("ab:0".into(), include_point("X")),
            ("ab:1".into(), include_point("W")),
            ("cb:0".into(), include_point("X")),
            ("cb:1".into(), include_point("Z")),
        ]),
        tags: BTreeMap::new(),
    };
    Diagram::from_json(&json).unwrap()
}

/// A loop: one vertex and one edge whose faces are both that vertex.
pub fn loop_base(cap: usize) -> SimplicialSet {
    let mut faces = BTreeMap::new();
    faces.insert("l".to_string(), vec![vertex_face("v"), vertex_face("v")]);
    SimplicialSet::from_json(&SimplicialSetJson {
        cap,
        cells: vec![vec!["v".into()], vec!["l".into()]],
        faces,
    })
    .unwrap()
}

/// The categories used by the nerve and τ suites.
pub fn test_categories() -> Vec<(&'static str, AInfCategory)> {
    vec![
        ("poset1", catalog::poset(1)),
        ("poset2", catalog::poset(2)),
        ("discrete2", catalog::discrete(2)),
        ("iso_pair", catalog::iso_pair()),
        ("acyclic_pair", catalog::acyclic_pair()),
        ("linear_mu3", catalog::linear_mu3()),
    ]
}

/// Number of `n`-simplices of `L` counted as pairs `(f, Σ)`: `Σ` any
/// `n`-simplex of the base and `f` an `n`-simplex of `N(F(Σ))` whose `i`-th
/// vertex lies over the `i`-th vertex of `Σ`.
pub fn pair_count(d: &Diagram, n: usize) -> usize {
    let mut total = 0;
    for sigma in d.base().simplices(n) {
        let value = d.extend_to_degenerate(&sigma).unwrap();
        let cat = &value.category;
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for i in 0..=n {
            let over: Vec<usize> = (0..cat.object_count()).filter(|&x| value.tags[x] == i).collect();
            tuples = tuples
                .into_iter()
                .flat_map(|t| over.iter().map(move |&x| [t.clone(), vec![x]].concat()))
                .collect();
        }
        if n == 0 {
            total += tuples.len();
            continue;
        }
        let e = Enumerator::new(cat, n);
        let mut out = Vec::new();
        for t in &tuples {
            e.run_vertices(t, &BTreeMap::new(), &mut out);
        }
        total += out.len();
    }
    total
}

/// Legs to the base built from `p_σ` alone.
pub fn base_cocone(g: &GlobalComplex) -> Cocone {
    let d = g.diagram();
    let base = d.base().clone().with_cap(g.cap()).unwrap();
    let legs = (0..=g.cap())
        .map(|k| {
            (0..base.count(k))
                .map(|s| {
                    let local = g.local(k, s);
                    SimplicialMap::from_fn(&local.set, |j, i| d.p_sigma(k, s, local.cell(j, i)).unwrap())
                })
                .collect()
        })
        .collect();
    Cocone { target: base, legs }
}

pub fn point_cocone(g: &GlobalComplex) -> Cocone {
    let point = standard_simplex(0).with_cap(g.cap()).unwrap();
    let d = g.diagram();
    let legs = (0..=g.cap())
        .map(|k| {
            (0..d.base().count(k))
                .map(|s| SimplicialMap::from_fn(&g.local(k, s).set, |j, _| point.degenerate_vertex(0, j)))
                .collect()
        })
        .collect();
    Cocone { target: point, legs }
}

/// For a constant diagram: forget which vertex a copy lies over.
pub fn fold(copies: &AInfCategory, a: &AInfCategory) -> StrictFunctor {
    let strip = |s: &str| s.rsplit_once('@').unwrap().0.to_string();
    let mut json = FunctorJson::default();
    for x in copies.objects() {
        json.objects.insert(x.clone(), strip(x));
        for y in copies.objects() {
            let (i, j) = (copies.object(x).unwrap(), copies.object(y).unwrap());
            for &b in copies.hom_basis(i, j) {
                json.hom
                    .insert(copies.label(b).to_string(), vec![strip(copies.label(b))]);
            }
        }
    }
    StrictFunctor::from_json(&json, copies, a).unwrap()
}

pub fn fold_cocone(g: &GlobalComplex, a: &AInfCategory) -> Cocone {
    let target = nerve_truncation(a, g.cap()).unwrap();
    let d = g.diagram();
    let legs = (0..=g.cap())
        .map(|k| {
            (0..d.base().count(k))
                .map(|s| {
                    let (local, cat) = (g.local(k, s), d.category(k, s));
                    let f = fold(cat, a);
                    SimplicialMap::from_fn(&local.set, |j, i| {
                        let c = nerve_of_strict_functor(&f, a, local.cell(j, i)).unwrap();
                        target.lookup(a, &c).unwrap()
                    })
                })
                .collect()
        })
        .collect();
    Cocone {
        target: target.set,
        legs,
    }
}
