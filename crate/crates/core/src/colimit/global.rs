use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::diagram::{Diagram, DiagramJson};
use crate::ainf::AInfCategory;
use crate::error::{Error, Result};
use crate::homotopy::{face_json, from_face_json};
use crate::nerve::{
    nerve_from_cells, nerve_of_strict_functor, Enumerator, NerveSimplex, NerveSimplexJson, NerveTruncation,
};
use crate::simplicial::{
    build_from_model, FaceJson, OrdinalMap, SimplexRef, SimplicialMap, SimplicialSet, SimplicialSetJson,
};

/// A cell of `L`: a nondegenerate base cell `σ` (dimension, index) and a
/// nerve simplex of `F(σ)` whose vertex tags are monotone and hit every
/// vertex of `σ`. The tag sequence is the degeneracy of the base simplex it
/// lies over.
type Key = (usize, usize, NerveSimplex);

/// The colimit `L` of the nerves of a diagram, truncated at `cap`, with its
/// projection to the base and the cocone legs `φ_σ`.
#[derive(Clone, Debug)]
pub struct GlobalComplex {
    diagram: Diagram,
    cap: usize,
    pub total: SimplicialSet,
    pub projection: SimplicialMap,
    cells: Vec<Vec<Key>>,
    index: HashMap<Key, (usize, usize)>,
    locals: Vec<Vec<NerveTruncation>>,
    legs: Vec<Vec<SimplicialMap>>,
}

/// Maps `φ'_σ : N(F(σ)) → target` for every nondegenerate base cell, each
/// defined on the simplices with monotone tags.
#[derive(Clone, Debug)]
pub struct Cocone {
    pub target: SimplicialSet,
    pub legs: Vec<Vec<SimplicialMap>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalCellJson {
    pub over: String,
    pub simplex: NerveSimplexJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobalComplexJson {
    pub cap: usize,
    pub diagram: DiagramJson,
    pub total: SimplicialSetJson,
    pub projection: BTreeMap<String, FaceJson>,
    pub cells: BTreeMap<String, GlobalCellJson>,
}

impl GlobalComplexJson {
    /// The total space, the base and the projection, without rebuilding.
    pub fn projection_map(&self) -> Result<(SimplicialSet, SimplicialSet, SimplicialMap)> {
        let total = SimplicialSet::from_json(&self.total)?;
        let base = SimplicialSet::from_json(&self.diagram.base)?.with_cap(self.cap.max(self.diagram.base.cap))?;
        let map = (0..=total.cap())
            .map(|d| {
                total
                    .cells(d)
                    .iter()
                    .map(|c| {
                        let f = self
                            .projection
                            .get(&c.id)
                            .ok_or_else(|| Error::MissingData(format!("projection of `{}`", c.id)))?;
                        from_face_json(&base, f, d)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let map = SimplicialMap::new(map);
        map.check(&total, &base)?;
        Ok((total, base, map))
    }
}

fn tag_sequence(diagram: &Diagram, d: usize, s: usize, f: &NerveSimplex) -> Vec<usize> {
    let tags = diagram.tags(d, s);
    f.vertices().iter().map(|&x| tags[x]).collect()
}

/// Moves `f` down to the face of `σ` spanned by its tags.
fn reduce(diagram: &Diagram, mut d: usize, mut s: usize, mut f: NerveSimplex) -> Key {
    loop {
        let seq = tag_sequence(diagram, d, s, &f);
        match (0..=d).find(|v| !seq.contains(v)) {
            None => return (d, s, f),
            Some(v) => {
                f = diagram.restrict_to_face(d, s, v, &f);
                s = diagram.face_cell(d, s, v);
                d -= 1;
            }
        }
    }
}

/// Nondegenerate `k`-simplices of `N(F(σ))` with monotone tags, listed by
/// tag sequence, then vertex tuple, then enumeration order.
fn monotone_simplices(cat: &AInfCategory, tags: &[usize], d: usize, k: usize) -> Vec<NerveSimplex> {
    let fibers: Vec<Vec<usize>> = (0..=d)
        .map(|v| (0..cat.object_count()).filter(|&x| tags[x] == v).collect())
        .collect();
    let e = Enumerator::new(cat, k);
    let fixed = BTreeMap::new();
    let mut out = Vec::new();
    for tau in OrdinalMap::all(k, d) {
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for i in 0..=k {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    fibers[tau.apply(i)].iter().map(move |&x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        for t in tuples {
            e.for_each(&t, &fixed, &mut |c| {
                if c.degenerate_positions(cat).is_empty() {
                    out.push(c.clone());
                }
            });
        }
    }
    out
}

/// Builds `L` and `p : L → base` up to `cap`.
pub fn build_colimit(diagram: &Diagram, cap: usize) -> Result<GlobalComplex> {
    let base = diagram.base();
    if cap > base.cap() {
        return Err(Error::CapExceeded {
            dim: cap,
            cap: base.cap(),
        });
    }
    let mut locals = Vec::with_capacity(cap + 1);
    for d in 0..=cap {
        let mut row = Vec::new();
        for s in 0..base.count(d) {
            let cat = diagram.category(d, s);
            let cells = (0..=cap)
                .map(|k| monotone_simplices(cat, diagram.tags(d, s), d, k))
                .collect();
            row.push(nerve_from_cells(cat, cap, cells)?);
        }
        locals.push(row);
    }

    let mut named: Vec<Vec<(String, Key)>> = vec![Vec::new(); cap + 1];
    for (d, row) in locals.iter().enumerate() {
        for (s, local) in row.iter().enumerate() {
            for k in d..=cap {
                for i in 0..local.set.count(k) {
                    let f = local.cell(k, i);
                    let seq = tag_sequence(diagram, d, s, f);
                    if (0..=d).all(|v| seq.contains(&v)) {
                        let id = format!("{}/{}", base.cell(d, s).id, local.set.cell(k, i).id);
                        named[k].push((id, (d, s, f.clone())));
                    }
                }
            }
        }
    }
    let (total, index) = build_from_model(
        cap,
        named,
        |(d, s, f): &Key, i| reduce(diagram, *d, *s, f.face(diagram.category(*d, *s), i)),
        |(d, s, f): &Key| {
            let (b, surj) = f.normalize(diagram.category(*d, *s));
            ((*d, *s, b), surj)
        },
    )?;
    let mut cells: Vec<Vec<Key>> = (0..=cap).map(|k| Vec::with_capacity(total.count(k))).collect();
    let mut by_position: Vec<(&Key, (usize, usize))> = index.iter().map(|(k, &v)| (k, v)).collect();
    by_position.sort_by_key(|(_, v)| *v);
    for (key, (k, _)) in by_position {
        cells[k].push(key.clone());
    }
    let projection = SimplicialMap::new(
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(d, s, f)| SimplexRef {
                        base: *s,
                        degeneracy: OrdinalMap::new(tag_sequence(diagram, *d, *s, f), *d).expect("monotone tags"),
                    })
                    .collect()
            })
            .collect(),
    );

    let mut g = GlobalComplex {
        diagram: diagram.clone(),
        cap,
        total,
        projection,
        cells,
        index,
        locals,
        legs: Vec::new(),
    };
    g.legs = (0..=cap)
        .map(|d| (0..base.count(d)).map(|s| g.phi(d, s)).collect())
        .collect();
    Ok(g)
}

impl GlobalComplex {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// The base cell and nerve simplex of a nondegenerate cell of `L`.
    pub fn cell(&self, k: usize, i: usize) -> (usize, usize, &NerveSimplex) {
        let (d, s, f) = &self.cells[k][i];
        (*d, *s, f)
    }

    /// The cell of `L` holding `(σ, f)`, `f` having monotone tags in `F(σ)`.
    pub fn locate(&self, d: usize, s: usize, f: &NerveSimplex) -> Result<SimplexRef> {
        if tag_sequence(&self.diagram, d, s, f).windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid("simplex tags are not monotone".into()));
        }
        let (d, s, f) = reduce(&self.diagram, d, s, f.clone());
        let (b, degeneracy) = f.normalize(self.diagram.category(d, s));
        let &(_, base) = self.index.get(&(d, s, b)).ok_or(Error::CapExceeded {
            dim: f.dim(),
            cap: self.cap,
        })?;
        Ok(SimplexRef { base, degeneracy })
    }

    /// The monotone part of `N(F(σ))` as a simplicial set.
    pub fn local(&self, d: usize, s: usize) -> &NerveTruncation {
        &self.locals[d][s]
    }

    /// The cocone leg `φ_σ : N(F(σ)) → L`.
    pub fn leg(&self, d: usize, s: usize) -> &SimplicialMap {
        &self.legs[d][s]
    }

    fn phi(&self, d: usize, s: usize) -> SimplicialMap {
        let local = &self.locals[d][s];
        SimplicialMap::from_fn(&local.set, |k, i| {
            self.locate(d, s, local.cell(k, i)).expect("local simplices lie in L")
        })
    }

    /// `L` with its own legs.
    pub fn canonical_cocone(&self) -> Cocone {
        Cocone {
            target: self.total.clone(),
            legs: self.legs.clone(),
        }
    }

    /// `N(F(face)) → N(F(σ))` induced by the embedding along `mono`.
    pub fn induced(&self, d: usize, s: usize, mono: &OrdinalMap) -> Result<SimplicialMap> {
        let (fd, fs) = self.diagram.cell_along(d, s, mono)?;
        let e = self.diagram.embedding(d, s, mono)?;
        let cat = self.diagram.category(d, s);
        let (source, target) = (&self.locals[fd][fs], &self.locals[d][s]);
        let images = (0..=self.cap)
            .map(|k| {
                (0..source.set.count(k))
                    .map(|i| {
                        let c = nerve_of_strict_functor(&e, cat, source.cell(k, i))?;
                        target
                            .lookup(cat, &c)
                            .ok_or(Error::CapExceeded { dim: k, cap: self.cap })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialMap::new(images))
    }

    /// Checks that every leg is simplicial and that the legs commute with
    /// every face embedding.
    pub fn check_cocone(&self, c: &Cocone) -> Result<()> {
        let base = self.diagram.base();
        if c.legs.len() != self.cap + 1 || (0..=self.cap).any(|d| c.legs[d].len() != base.count(d)) {
            return Err(Error::NonCommutingCocone("one leg per base cell is required".into()));
        }
        for d in 0..=self.cap {
            for s in 0..base.count(d) {
                c.legs[d][s].check(&self.locals[d][s].set, &c.target)?;
                for i in (0..=d).filter(|_| d > 0) {
                    let via = self
                        .induced(d, s, &OrdinalMap::coface(d, i))?
                        .then(&self.locals[d][s].set, &c.legs[d][s])?;
                    if via != c.legs[d - 1][self.diagram.face_cell(d, s, i)] {
                        return Err(Error::NonCommutingCocone(format!(
                            "leg of `{}` disagrees with its face {i}",
                            base.cell(d, s).id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `U(σ, f) = φ'_σ(f)`.
    pub fn mediating_map(&self, c: &Cocone) -> Result<SimplicialMap> {
        let images = self
            .cells
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(d, s, f)| {
                        let local = &self.locals[*d][*s];
                        let r = local
                            .lookup(self.diagram.category(*d, *s), f)
                            .expect("cells of L are local simplices");
                        c.legs[*d][*s].apply(&c.target, &r)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SimplicialMap::new(images))
    }

    fn factors(&self, u: &SimplicialMap, c: &Cocone) -> Result<bool> {
        if !u.is_simplicial(&self.total, &c.target) {
            return Ok(false);
        }
        for (d, row) in self.legs.iter().enumerate() {
            for (s, leg) in row.iter().enumerate() {
                if leg.then(&self.total, u)? != c.legs[d][s] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The mediating map is simplicial and satisfies `U ∘ φ_σ = φ'_σ`; an
    /// alternative map satisfying the same equations must equal it.
    pub fn verify_universal_property(&self, c: &Cocone, alternative: Option<&SimplicialMap>) -> Result<bool> {
        self.check_cocone(c)?;
        let u = self.mediating_map(c)?;
        if !self.factors(&u, c)? {
            return Ok(false);
        }
        if let Some(alt) = alternative {
            if self.factors(alt, c)? && *alt != u {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn to_json(&self) -> GlobalComplexJson {
        let base = self.diagram.base();
        let mut projection = BTreeMap::new();
        let mut cells = BTreeMap::new();
        for (k, row) in self.cells.iter().enumerate() {
            for (i, (d, s, f)) in row.iter().enumerate() {
                let id = self.total.cell(k, i).id.clone();
                projection.insert(id.clone(), face_json(base, self.projection.image_of_cell(k, i)));
                cells.insert(
                    id,
                    GlobalCellJson {
                        over: base.cell(*d, *s).id.clone(),
                        simplex: f.to_json(self.diagram.category(*d, *s)),
                    },
                );
            }
        }
        GlobalComplexJson {
            cap: self.cap,
            diagram: self.diagram.to_json(),
            total: self.total.to_json(),
            projection,
            cells,
        }
    }
}
