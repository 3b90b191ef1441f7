use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::ainf::{
    check_ainf_relations, check_strict_units, degenerate_extension, full_subcategory, is_fully_faithful_embedding,
    sufficient_dmax, AInfCategory, CategoryJson, FunctorJson, StrictFunctor,
};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::nerve::NerveSimplex;
use crate::simplicial::{OrdinalMap, SimplexRef, SimplicialSet, SimplicialSetJson};

/// Wire form of a diagram. `embeddings` is keyed by `"<cell>:<i>"`, the
/// embedding of the category of the `i`-th face into that of the cell.
/// `tags` is optional: vertex tags are determined by the embeddings and, if
/// given, are checked against them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub base: SimplicialSetJson,
    #[serde(rename = "F")]
    pub f: BTreeMap<String, String>,
    pub categories: BTreeMap<String, CategoryJson>,
    #[serde(default)]
    pub embeddings: BTreeMap<String, FunctorJson>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub tags: BTreeMap<String, BTreeMap<String, usize>>,
}

/// A diagram of A∞-categories over the nondegenerate simplices and face
/// inclusions of a base whose nondegenerate cells have nondegenerate faces.
#[derive(Clone, Debug)]
pub struct Diagram {
    base: SimplicialSet,
    categories: BTreeMap<String, AInfCategory>,
    category_of: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<StrictFunctor>>>,
    face_inverses: Vec<Vec<Vec<Vec<Vec<Gf2Matrix>>>>>,
    tags: Vec<Vec<Vec<usize>>>,
}

/// `F(Σ)` for a possibly degenerate simplex, with vertex tags and the
/// projection onto the category of its nondegenerate base.
#[derive(Clone, Debug)]
pub struct DegenerateValue {
    pub category: AInfCategory,
    pub tags: Vec<usize>,
    pub projection: StrictFunctor,
}

fn embedding_key(cell: &str, i: usize) -> String {
    format!("{cell}:{i}")
}

impl Diagram {
    pub fn from_json(json: &DiagramJson) -> Result<Self> {
        let base = SimplicialSet::from_json(&json.base)?;
        if !base.faces_nondegenerate() {
            return Err(Error::Invalid(
                "every face of a nondegenerate base cell must be nondegenerate".into(),
            ));
        }
        let mut categories = BTreeMap::new();
        for (name, cj) in &json.categories {
            let c = AInfCategory::from_json(cj)?;
            if let Some(v) = check_strict_units(&c) {
                return Err(Error::Invalid(format!(
                    "category `{name}` violates the {} unit law",
                    v.law
                )));
            }
            if let Some(v) = check_ainf_relations(&c, sufficient_dmax(&c)) {
                return Err(Error::Invalid(format!(
                    "category `{name}` violates the A∞ relation of arity {}",
                    v.d
                )));
            }
            categories.insert(name.clone(), c);
        }
        let mut category_of = Vec::with_capacity(base.cap() + 1);
        for d in 0..=base.cap() {
            let row = base
                .cells(d)
                .iter()
                .map(|c| {
                    let name = json
                        .f
                        .get(&c.id)
                        .ok_or_else(|| Error::MissingData(format!("category of `{}`", c.id)))?;
                    if !categories.contains_key(name) {
                        return Err(Error::Unknown {
                            kind: "category",
                            name: name.clone(),
                        });
                    }
                    Ok(name.clone())
                })
                .collect::<Result<Vec<_>>>()?;
            category_of.push(row);
        }
        if let Some(extra) = json.f.keys().find(|k| base.lookup(k).is_none()) {
            return Err(Error::Unknown {
                kind: "simplex",
                name: extra.clone(),
            });
        }

        let mut expected = BTreeSet::new();
        let mut faces = vec![Vec::new(); base.cap() + 1];
        let mut face_inverses = vec![Vec::new(); base.cap() + 1];
        for d in 0..=base.cap() {
            for (idx, cell) in base.cells(d).iter().enumerate() {
                let target = &categories[&category_of[d][idx]];
                let mut row = Vec::new();
                let mut inverses = Vec::new();
                for i in (0..=d).filter(|_| d > 0) {
                    let key = embedding_key(&cell.id, i);
                    let fj = json
                        .embeddings
                        .get(&key)
                        .ok_or_else(|| Error::MissingData(format!("embedding `{key}`")))?;
                    let face = cell.faces[i].base;
                    let source = &categories[&category_of[d - 1][face]];
                    let e = StrictFunctor::from_json(fj, source, target)?;
                    if !is_fully_faithful_embedding(&e, source, target) {
                        return Err(Error::NotFullyFaithful(format!("embedding `{key}`")));
                    }
                    let n = source.object_count();
                    inverses.push(
                        (0..n)
                            .map(|x| {
                                (0..n)
                                    .map(|y| e.component(x, y).inverse().expect("fully faithful"))
                                    .collect()
                            })
                            .collect(),
                    );
                    row.push(e);
                    expected.insert(key);
                }
                faces[d].push(row);
                face_inverses[d].push(inverses);
            }
        }
        if let Some(extra) = json.embeddings.keys().find(|k| !expected.contains(*k)) {
            return Err(Error::Unknown {
                kind: "embedding",
                name: extra.clone(),
            });
        }

        let mut diagram = Self {
            base,
            categories,
            category_of,
            faces,
            face_inverses,
            tags: Vec::new(),
        };
        diagram.check_functoriality()?;
        diagram.tags = diagram.infer_tags()?;
        for (id, given) in &json.tags {
            let (d, idx) = diagram.base.lookup(id).ok_or_else(|| Error::Unknown {
                kind: "simplex",
                name: id.clone(),
            })?;
            let cat = diagram.category(d, idx);
            for (obj, &t) in given {
                if diagram.tags[d][idx][cat.object(obj)?] != t {
                    return Err(Error::Invalid(format!(
                        "tag of `{obj}` in F(`{id}`) disagrees with the embeddings"
                    )));
                }
            }
        }
        Ok(diagram)
    }

    pub fn to_json(&self) -> DiagramJson {
        let mut json = DiagramJson {
            base: self.base.to_json(),
            f: BTreeMap::new(),
            categories: self.categories.iter().map(|(k, c)| (k.clone(), c.to_json())).collect(),
            embeddings: BTreeMap::new(),
            tags: BTreeMap::new(),
        };
        for d in 0..=self.base.cap() {
            for (idx, cell) in self.base.cells(d).iter().enumerate() {
                json.f.insert(cell.id.clone(), self.category_of[d][idx].clone());
                for (i, e) in self.faces[d][idx].iter().enumerate() {
                    let source = self.category(d - 1, cell.faces[i].base);
                    json.embeddings
                        .insert(embedding_key(&cell.id, i), e.to_json(source, self.category(d, idx)));
                }
                if d > 0 {
                    let cat = self.category(d, idx);
                    json.tags.insert(
                        cell.id.clone(),
                        (0..cat.object_count())
                            .map(|x| (cat.object_name(x).to_string(), self.tags[d][idx][x]))
                            .collect(),
                    );
                }
            }
        }
        json
    }

    pub fn base(&self) -> &SimplicialSet {
        &self.base
    }

    pub fn category(&self, dim: usize, idx: usize) -> &AInfCategory {
        &self.categories[&self.category_of[dim][idx]]
    }

    pub fn category_name(&self, dim: usize, idx: usize) -> &str {
        &self.category_of[dim][idx]
    }

    /// The base vertex index (within the cell) over which each object lies.
    pub fn tags(&self, dim: usize, idx: usize) -> &[usize] {
        &self.tags[dim][idx]
    }

    /// The embedding `F(d_i σ) → F(σ)`.
    pub fn face_embedding(&self, dim: usize, idx: usize, i: usize) -> &StrictFunctor {
        &self.faces[dim][idx][i]
    }

    /// Index of the nondegenerate cell `d_i σ`.
    pub fn face_cell(&self, dim: usize, idx: usize, i: usize) -> usize {
        self.base.cell(dim, idx).faces[i].base
    }

    /// The face of `σ` along a mono into `[dim]`.
    pub fn cell_along(&self, dim: usize, idx: usize, mono: &OrdinalMap) -> Result<(usize, usize)> {
        let s = self.base.act(&SimplexRef::nondegenerate(dim, idx), mono)?;
        Ok((s.base_dim(), s.base))
    }

    /// The composite embedding `F(face) → F(σ)` for the face along `mono`.
    pub fn embedding(&self, dim: usize, idx: usize, mono: &OrdinalMap) -> Result<StrictFunctor> {
        if mono.target_dim() != dim || !mono.is_mono() {
            return Err(Error::Invalid("embeddings are indexed by monomorphisms".into()));
        }
        match (0..=dim).find(|v| !mono.values().contains(v)) {
            None => Ok(StrictFunctor::identity(self.category(dim, idx))),
            Some(i) => {
                let rest: Vec<usize> = mono.values().iter().map(|&v| if v > i { v - 1 } else { v }).collect();
                let rest = OrdinalMap::new(rest, dim - 1)?;
                self.embedding(dim - 1, self.face_cell(dim, idx, i), &rest)?
                    .then(&self.faces[dim][idx][i])
            }
        }
    }

    fn check_functoriality(&self) -> Result<()> {
        for d in 2..=self.base.cap() {
            for (idx, cell) in self.base.cells(d).iter().enumerate() {
                for j in 0..=d {
                    for i in 0..j {
                        let via_j = self.faces[d - 1][self.face_cell(d, idx, j)][i].then(&self.faces[d][idx][j])?;
                        let via_i = self.faces[d - 1][self.face_cell(d, idx, i)][j - 1].then(&self.faces[d][idx][i])?;
                        if via_i != via_j {
                            return Err(Error::NotFunctorial(format!(
                                "the two routes onto the face of `{}` without vertices {i} and {j} differ",
                                cell.id
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn infer_tags(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let mut out = Vec::with_capacity(self.base.cap() + 1);
        for d in 0..=self.base.cap() {
            let mut row = Vec::new();
            for (idx, cell) in self.base.cells(d).iter().enumerate() {
                let cat = self.category(d, idx);
                let mut tags: Vec<Option<usize>> = vec![None; cat.object_count()];
                for v in 0..=d {
                    let e = self.embedding(d, idx, &OrdinalMap::constant(0, d, v))?;
                    for &x in e.object_map() {
                        if tags[x].replace(v).is_some() {
                            return Err(Error::Invalid(format!(
                                "object `{}` of F(`{}`) lies over two vertices",
                                cat.object_name(x),
                                cell.id
                            )));
                        }
                    }
                }
                let tags = tags
                    .iter()
                    .enumerate()
                    .map(|(x, t)| {
                        t.ok_or_else(|| {
                            Error::Invalid(format!(
                                "object `{}` of F(`{}`) lies over no vertex",
                                cat.object_name(x),
                                cell.id
                            ))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                row.push(tags);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// The base simplex through the vertices over which `f` lies.
    pub fn p_sigma(&self, dim: usize, idx: usize, f: &NerveSimplex) -> Result<SimplexRef> {
        let tags = &self.tags[dim][idx];
        let seq = f
            .vertices()
            .iter()
            .map(|&x| {
                tags.get(x).copied().ok_or_else(|| Error::Unknown {
                    kind: "tagged object",
                    name: x.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if seq.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(
                "vertex tags decrease along the simplex; no linear simplex passes through them".into(),
            ));
        }
        self.base
            .act(&SimplexRef::nondegenerate(dim, idx), &OrdinalMap::new(seq, dim)?)
    }

    /// `f` pulled back along the embedding of the `v`-th face; all vertices
    /// of `f` must lie in its image.
    pub(crate) fn restrict_to_face(&self, dim: usize, idx: usize, v: usize, f: &NerveSimplex) -> NerveSimplex {
        let e = &self.faces[dim][idx][v];
        let source = self.category(dim - 1, self.face_cell(dim, idx, v));
        let preimage = |x: usize| {
            e.object_map()
                .iter()
                .position(|&y| y == x)
                .expect("vertex lies in the face")
        };
        let vertices: Vec<usize> = f.vertices().iter().map(|&x| preimage(x)).collect();
        let mut out = NerveSimplex::zero(source, vertices.clone());
        for mask in 0u32..1 << (f.dim() + 1) {
            if mask.count_ones() < 2 {
                continue;
            }
            let (a, b) = (mask.trailing_zeros() as usize, 31 - mask.leading_zeros() as usize);
            let inv = &self.face_inverses[dim][idx][v][vertices[a]][vertices[b]];
            out.set_mask(mask, inv.mul_vec(f.get_mask(mask)).expect("component shape"))
                .expect("component shape");
        }
        out
    }

    /// `F(Σ)` for any simplex, by iterating the degenerate extension along
    /// the degeneracy word. Copies adjoined by `s_j` lie over vertex `j+1`.
    pub fn extend_to_degenerate(&self, s: &SimplexRef) -> Result<DegenerateValue> {
        let d = s.base_dim();
        if s.base >= self.base.count(d) {
            return Err(Error::OutOfRange {
                index: s.base,
                bound: self.base.count(d),
            });
        }
        let mut category = self.category(d, s.base).clone();
        let mut tags = self.tags[d][s.base].clone();
        let mut projection = StrictFunctor::identity(&category);
        for &j in s.degeneracy.degeneracy_word().iter().rev() {
            let fiber: Vec<usize> = (0..category.object_count()).filter(|&x| tags[x] == j).collect();
            let (sub, inclusion) = full_subcategory(&category, &fiber)?;
            let ext = degenerate_extension(&category, &sub, &inclusion)?;
            tags = tags.iter().map(|&t| if t <= j { t } else { t + 1 }).collect();
            tags.extend(std::iter::repeat(j + 1).take(fiber.len()));
            projection = ext.projection.then(&projection)?;
            category = ext.category;
        }
        Ok(DegenerateValue {
            category,
            tags,
            projection,
        })
    }
}
