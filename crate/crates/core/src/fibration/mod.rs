//! Bounded-dimension checks that a simplicial map is an inner fibration and
//! a co-Cartesian fibration. Every outcome holds only up to the stated cap.

mod lifting;

use serde::{Deserialize, Serialize};

use crate::ainf::cohomology;
use crate::colimit::GlobalComplex;
use crate::error::{Error, Result};
use crate::homotopy::{face_json, is_quasi_category, HornWitness};
use crate::nerve::NerveSimplex;
use crate::simplicial::{pullback_along_simplex, FaceJson, SimplexRef, SimplicialMap, SimplicialSet};
use lifting::Lifting;

/// A horn `Λⁿ_k → A` over an `n`-simplex of `B` with no lift.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftingWitness {
    pub n: usize,
    pub k: usize,
    /// Faces `d_i`, `i ≠ k`, in the domain.
    pub faces: Vec<FaceJson>,
    pub base: FaceJson,
}

/// A base simplex whose preimage has an unfillable inner horn.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberWitness {
    pub simplex: FaceJson,
    pub horn: HornWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerFibrationReport {
    pub cap: usize,
    pub horn_lifting: bool,
    pub fibers_quasi_categories: bool,
    pub agree: bool,
    pub lifting_witness: Option<LiftingWitness>,
    pub fiber_witness: Option<FiberWitness>,
}

impl InnerFibrationReport {
    pub fn pass(&self) -> bool {
        self.horn_lifting && self.fibers_quasi_categories
    }
}

/// A base edge and a vertex over its codomain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeLiftWitness {
    pub edge: FaceJson,
    pub vertex: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocartesianReport {
    pub cap: usize,
    pub base_edges: usize,
    /// A co-Cartesian lift (checked on `Λⁿ_0` horns) with each codomain exists.
    pub lifts: bool,
    /// The equivalence-lift criterion, when a diagram is available.
    pub equivalence_lifts: Option<bool>,
    pub lift_witness: Option<EdgeLiftWitness>,
    pub equivalence_witness: Option<EdgeLiftWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Co,
    Contra,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationReport {
    pub map: String,
    pub direction: Direction,
    pub cap: usize,
    pub inner_fibration: InnerFibrationReport,
    pub cocartesian: Option<CocartesianReport>,
    pub pass: bool,
}

impl CocartesianReport {
    pub fn pass(&self) -> bool {
        self.lifts && self.equivalence_lifts != Some(false)
    }
}

impl FibrationReport {
    fn computed_pass(&self) -> bool {
        self.inner_fibration.pass() && self.inner_fibration.agree && self.cocartesian.as_ref().is_some_and(|c| c.pass())
    }

    pub fn summary(&self) -> String {
        let word = |b: bool| if b { "pass" } else { "fail" };
        let name = match self.direction {
            Direction::Co => "cocartesian",
            Direction::Contra => "cartesian",
        };
        format!(
            "inner_fibration: {}, {name}: {}",
            word(self.inner_fibration.pass()),
            word(self.cocartesian.as_ref().is_some_and(|c| c.pass()))
        )
    }
}

/// Checks inner horn lifting directly and through the preimages of all base
/// simplices of dimension `≤ cap`, reporting both.
pub fn is_inner_fibration(
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    cap: usize,
) -> Result<InnerFibrationReport> {
    let l = Lifting::new(domain, codomain, p, cap)?;
    let lifting_witness = l.inner_witness(cap);
    let mut fiber_witness = None;
    'outer: for n in 0..=cap {
        for xi in codomain.simplices(n) {
            let pb = pullback_along_simplex(domain, codomain, p, &xi, cap)?;
            if let Some(horn) = is_quasi_category(&pb.set, cap)?.witness {
                fiber_witness = Some(FiberWitness {
                    simplex: face_json(codomain, &xi),
                    horn,
                });
                break 'outer;
            }
        }
    }
    let (horn_lifting, fibers_quasi_categories) = (lifting_witness.is_none(), fiber_witness.is_none());
    Ok(InnerFibrationReport {
        cap,
        horn_lifting,
        fibers_quasi_categories,
        agree: horn_lifting == fibers_quasi_categories,
        lifting_witness,
        fiber_witness,
    })
}

/// Whether every `Λⁿ_0` lifting problem with initial edge `e`, `n ≤ cap`,
/// has a solution.
pub fn is_cocartesian_edge(
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    e: &SimplexRef,
    cap: usize,
) -> Result<bool> {
    Ok(cocartesian_edge_witness(domain, codomain, p, e, cap)?.is_none())
}

/// The first unliftable `Λⁿ_0` problem with initial edge `e`, if any.
pub fn cocartesian_edge_witness(
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    e: &SimplexRef,
    cap: usize,
) -> Result<Option<LiftingWitness>> {
    let l = Lifting::new(domain, codomain, p, cap)?;
    let id = *l.a[1]
        .index
        .get(e)
        .ok_or_else(|| Error::Invalid("not an edge of the domain".into()))?;
    Ok(l.cocartesian_witness(id, cap))
}

/// For every base edge `m` and every vertex `a` over its codomain, looks
/// for a co-Cartesian lift of `m` ending at `a`.
pub fn has_cocartesian_lifts(
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    cap: usize,
) -> Result<CocartesianReport> {
    if cap < 2 {
        return Err(Error::Invalid("co-Cartesian checks need cap ≥ 2".into()));
    }
    if !is_inner_fibration(domain, codomain, p, cap)?.pass() {
        return Err(Error::Invalid("the map is not an inner fibration up to the cap".into()));
    }
    cocartesian_lifts(domain, codomain, p, cap)
}

fn cocartesian_lifts(
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    cap: usize,
) -> Result<CocartesianReport> {
    let l = Lifting::new(domain, codomain, p, cap)?;
    let edges = codomain.simplices(1);
    let mut lift_witness = None;
    'edges: for m in &edges {
        let m_id = l.b[1].index[m];
        let end = codomain.face(m, 0)?;
        for a in (0..domain.count(0)).filter(|&a| p.image_of_cell(0, a) == &end) {
            let a_id = l.a[0].index[&SimplexRef::nondegenerate(0, a)];
            let found = (0..l.a[1].all.len())
                .filter(|&x| l.p[1][x] == m_id && l.a[1].faces[x][0] == a_id)
                .any(|x| l.cocartesian_witness(x, cap).is_none());
            if !found {
                lift_witness = Some(EdgeLiftWitness {
                    edge: face_json(codomain, m),
                    vertex: domain.cell(0, a).id.clone(),
                });
                break 'edges;
            }
        }
    }
    Ok(CocartesianReport {
        cap,
        base_edges: edges.len(),
        lifts: lift_witness.is_none(),
        equivalence_lifts: None,
        lift_witness,
        equivalence_witness: None,
    })
}

/// The sufficient criterion for the projection of a colimit: for every base
/// edge `m` and every object `a` of `F(m)` over its codomain (its domain for
/// `Contra`), some object over the other end is isomorphic to `a` in the
/// cohomology category of `F(m)`. Returns the first failure.
pub fn equivalence_lift_witness(g: &GlobalComplex, direction: Direction) -> Result<Option<EdgeLiftWitness>> {
    let diagram = g.diagram();
    let base = diagram.base();
    let (end, start) = match direction {
        Direction::Co => (1, 0),
        Direction::Contra => (0, 1),
    };
    for m in base.simplices(1) {
        let value = diagram.extend_to_degenerate(&m)?;
        let h = cohomology(&value.category)?;
        let objects = 0..value.category.object_count();
        for a in objects.clone().filter(|&a| value.tags[a] == end) {
            if objects.clone().any(|b| value.tags[b] == start && h.is_isomorphic(b, a)) {
                continue;
            }
            let (d, s) = (m.base_dim(), m.base);
            let x = value.projection.map_object(a);
            let vertex = g.locate(d, s, &NerveSimplex::vertex(diagram.category(d, s), x))?;
            return Ok(Some(EdgeLiftWitness {
                edge: face_json(base, &m),
                vertex: g.total.cell(0, vertex.base).id.clone(),
            }));
        }
    }
    Ok(None)
}

/// Full report; `Contra` checks the Cartesian property, i.e. the
/// co-Cartesian property of the opposite map.
pub fn check_fibration(
    map: &str,
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    cap: usize,
    direction: Direction,
) -> Result<FibrationReport> {
    let (dom_op, cod_op, p_op);
    let (domain, codomain, p) = match direction {
        Direction::Co => (domain, codomain, p),
        Direction::Contra => {
            dom_op = domain.opposite();
            cod_op = codomain.opposite();
            p_op = p.opposite();
            (&dom_op, &cod_op, &p_op)
        }
    };
    let inner = is_inner_fibration(domain, codomain, p, cap)?;
    let cocartesian = if inner.pass() && cap >= 2 {
        Some(cocartesian_lifts(domain, codomain, p, cap)?)
    } else {
        None
    };
    let mut report = FibrationReport {
        map: map.to_string(),
        direction,
        cap,
        inner_fibration: inner,
        cocartesian,
        pass: false,
    };
    report.pass = report.computed_pass();
    Ok(report)
}

/// [`check_fibration`] for the projection of a colimit, with the
/// equivalence-lift criterion evaluated as well.
pub fn check_global_fibration(g: &GlobalComplex, cap: usize, direction: Direction) -> Result<FibrationReport> {
    let mut report = check_fibration("p", &g.total, g.diagram().base(), &g.projection, cap, direction)?;
    if let Some(c) = report.cocartesian.as_mut() {
        let w = equivalence_lift_witness(g, direction)?;
        c.equivalence_lifts = Some(w.is_none());
        c.equivalence_witness = w;
    }
    report.pass = report.computed_pass();
    Ok(report)
}
