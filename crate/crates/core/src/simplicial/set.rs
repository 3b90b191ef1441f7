use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use super::ordinal::OrdinalMap;
use crate::error::{Error, Result};

/// A simplex in Eilenberg–Zilber form: `degeneracy^* base` where `base` is a
/// nondegenerate cell of dimension `degeneracy.target_dim()` and `degeneracy`
/// is a surjection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexRef {
    pub base: usize,
    pub degeneracy: OrdinalMap,
}

impl SimplexRef {
    pub fn nondegenerate(dim: usize, base: usize) -> Self {
        Self {
            base,
            degeneracy: OrdinalMap::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.degeneracy.source_dim()
    }

    pub fn base_dim(&self) -> usize {
        self.degeneracy.target_dim()
    }

    pub fn is_degenerate(&self) -> bool {
        self.dim() != self.base_dim()
    }

    /// The same simplex read in the opposite simplicial set.
    pub fn opposite(&self) -> Self {
        reverse_ref(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: String,
    pub faces: Vec<SimplexRef>,
}

/// A finitely presented simplicial set truncated at `cap`: the nondegenerate
/// cells of each dimension `≤ cap`, with their faces in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    cap: usize,
    cells: Vec<Vec<Cell>>,
    index: HashMap<String, (usize, usize)>,
}

impl SimplicialSet {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            cells: vec![Vec::new(); cap + 1],
            index: HashMap::new(),
        }
    }

    /// Adds a nondegenerate cell; faces must already be present.
    pub fn add_cell(&mut self, id: impl Into<String>, dim: usize, faces: Vec<SimplexRef>) -> Result<usize> {
        let id = id.into();
        if dim > self.cap {
            return Err(Error::CapExceeded { dim, cap: self.cap });
        }
        let expected_faces = if dim == 0 { 0 } else { dim + 1 };
        if faces.len() != expected_faces {
            return Err(Error::Invalid(format!(
                "cell `{id}` of dimension {dim} needs {expected_faces} faces, got {}",
                faces.len()
            )));
        }
        for f in &faces {
            if f.dim() + 1 != dim || !f.degeneracy.is_epi() {
                return Err(Error::Invalid(format!("cell `{id}` has a malformed face {f:?}")));
            }
            if f.base >= self.cells[f.base_dim()].len() {
                return Err(Error::OutOfRange {
                    index: f.base,
                    bound: self.cells[f.base_dim()].len(),
                });
            }
        }
        if self.index.contains_key(&id) {
            return Err(Error::Duplicate { kind: "cell", name: id });
        }
        let idx = self.cells[dim].len();
        self.index.insert(id.clone(), (dim, idx));
        self.cells[dim].push(Cell { id, faces });
        Ok(idx)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Raises (or keeps) the truncation cap. Valid only when the complex has no
    /// nondegenerate cells between the old and the new cap, which is the
    /// caller's claim.
    pub fn with_cap(mut self, cap: usize) -> Result<Self> {
        if cap < self.cap && self.cells[cap + 1..].iter().any(|c| !c.is_empty()) {
            return Err(Error::CapExceeded { dim: self.cap, cap });
        }
        self.cells.resize(cap + 1, Vec::new());
        self.cap = cap;
        Ok(self)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    /// Nondegenerate cell counts per dimension `0..=cap`.
    pub fn counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Total number of simplices (degenerate included) in dimension `dim`.
    pub fn total_count(&self, dim: usize) -> usize {
        (0..=dim.min(self.cap)).map(|r| self.count(r) * binomial(dim, r)).sum()
    }

    pub fn cell(&self, dim: usize, idx: usize) -> &Cell {
        &self.cells[dim][idx]
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn lookup(&self, id: &str) -> Option<(usize, usize)> {
        self.index.get(id).copied()
    }

    pub fn id_of(&self, s: &SimplexRef) -> &str {
        &self.cells[s.base_dim()][s.base].id
    }

    /// Acts by an ordinal map: returns `m^* s` in normal form.
    pub fn act(&self, s: &SimplexRef, m: &OrdinalMap) -> Result<SimplexRef> {
        let g = s.degeneracy.compose(m)?;
        Ok(self.resolve(s.base_dim(), s.base, g))
    }

    // g^* x for a nondegenerate x and arbitrary g; peels off one missed vertex at a time.
    fn resolve(&self, dim: usize, base: usize, g: OrdinalMap) -> SimplexRef {
        if g.is_epi() {
            return SimplexRef { base, degeneracy: g };
        }
        let image = g.values();
        let i = (0..=dim).rev().find(|v| !image.contains(v)).unwrap();
        let face = &self.cells[dim][base].faces[i];
        let lowered =
            OrdinalMap::new_unchecked(image.iter().map(|&v| if v > i { v - 1 } else { v }).collect(), dim - 1);
        let g2 = face.degeneracy.compose(&lowered).expect("face dimensions agree");
        self.resolve(face.base_dim(), face.base, g2)
    }

    pub fn face(&self, s: &SimplexRef, i: usize) -> Result<SimplexRef> {
        let n = s.dim();
        if n == 0 || i > n {
            return Err(Error::OutOfRange { index: i, bound: n });
        }
        self.act(s, &OrdinalMap::coface(n, i))
    }

    pub fn degeneracy(&self, s: &SimplexRef, i: usize) -> Result<SimplexRef> {
        let n = s.dim();
        if i > n {
            return Err(Error::OutOfRange { index: i, bound: n });
        }
        if n + 1 > self.cap {
            return Err(Error::CapExceeded {
                dim: n + 1,
                cap: self.cap,
            });
        }
        self.act(s, &OrdinalMap::codegeneracy(n, i))
    }

    /// All simplices of dimension `dim`, degenerate ones included, ordered by
    /// base dimension, base index, then surjection.
    pub fn simplices(&self, dim: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for r in (0..=dim.min(self.cap)).rev() {
            let surj = OrdinalMap::surjections(dim, r);
            for base in 0..self.count(r) {
                for s in &surj {
                    out.push(SimplexRef {
                        base,
                        degeneracy: s.clone(),
                    });
                }
            }
        }
        out
    }

    /// Vertex indices of a simplex.
    pub fn vertices(&self, s: &SimplexRef) -> Vec<usize> {
        (0..=s.dim())
            .map(|v| {
                self.act(s, &OrdinalMap::constant(0, s.dim(), v))
                    .expect("vertex inclusion")
                    .base
            })
            .collect()
    }

    /// The degenerate `dim`-simplex on vertex `v`.
    pub fn degenerate_vertex(&self, v: usize, dim: usize) -> SimplexRef {
        SimplexRef {
            base: v,
            degeneracy: OrdinalMap::constant(dim, 0, 0),
        }
    }

    /// Checks that faces resolve and that `d_i d_j = d_{j-1} d_i` (`i < j`)
    /// holds on every nondegenerate generator.
    pub fn validate(&self) -> Result<()> {
        for dim in 2..=self.cap {
            for (idx, cell) in self.cells[dim].iter().enumerate() {
                let x = SimplexRef::nondegenerate(dim, idx);
                for j in 0..=dim {
                    for i in 0..j {
                        let lhs = self.face(&self.face(&x, j)?, i)?;
                        let rhs = self.face(&self.face(&x, i)?, j - 1)?;
                        if lhs != rhs {
                            return Err(Error::Invalid(format!(
                                "simplicial identity d_{i} d_{j} = d_{} d_{i} fails on `{}`",
                                j - 1,
                                cell.id
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether every nondegenerate cell has only nondegenerate faces.
    pub fn faces_nondegenerate(&self) -> bool {
        self.cells
            .iter()
            .flatten()
            .all(|c| c.faces.iter().all(|f| !f.is_degenerate()))
    }

    /// Sub-simplicial set on the cells selected by `keep`, which must be
    /// closed under faces. Cell ids are preserved; returns the new set and,
    /// per dimension, the old index of each new cell.
    pub fn subcomplex(&self, keep: impl Fn(usize, usize) -> bool) -> Result<(Self, Vec<Vec<usize>>)> {
        let mut out = Self::new(self.cap);
        let mut renumber: Vec<HashMap<usize, usize>> = vec![HashMap::new(); self.cap + 1];
        let mut old_of_new = vec![Vec::new(); self.cap + 1];
        for dim in 0..=self.cap {
            for (idx, cell) in self.cells[dim].iter().enumerate() {
                if !keep(dim, idx) {
                    continue;
                }
                let faces = cell
                    .faces
                    .iter()
                    .map(|f| {
                        renumber[f.base_dim()]
                            .get(&f.base)
                            .map(|&b| SimplexRef {
                                base: b,
                                degeneracy: f.degeneracy.clone(),
                            })
                            .ok_or_else(|| {
                                Error::Invalid(format!("selection is not closed under faces at `{}`", cell.id))
                            })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let new = out.add_cell(cell.id.clone(), dim, faces)?;
                renumber[dim].insert(idx, new);
                old_of_new[dim].push(idx);
            }
        }
        Ok((out, old_of_new))
    }

    /// The opposite simplicial set (vertex order reversed in every simplex).
    pub fn opposite(&self) -> Self {
        let mut out = Self::new(self.cap);
        for dim in 0..=self.cap {
            for cell in &self.cells[dim] {
                let faces = (0..cell.faces.len())
                    .map(|i| reverse_ref(&cell.faces[dim - i]))
                    .collect();
                out.add_cell(cell.id.clone(), dim, faces).expect("same shape");
            }
        }
        out
    }

    pub fn to_json(&self) -> SimplicialSetJson {
        let cells = self
            .cells
            .iter()
            .map(|cs| cs.iter().map(|c| c.id.clone()).collect())
            .collect();
        let mut faces = BTreeMap::new();
        for cs in &self.cells {
            for c in cs {
                if c.faces.is_empty() {
                    continue;
                }
                faces.insert(
                    c.id.clone(),
                    c.faces
                        .iter()
                        .map(|f| FaceJson {
                            base: self.id_of(f).to_string(),
                            degeneracy_word: f.degeneracy.degeneracy_word(),
                        })
                        .collect(),
                );
            }
        }
        SimplicialSetJson {
            cap: self.cap,
            cells,
            faces,
        }
    }

    pub fn from_json(json: &SimplicialSetJson) -> Result<Self> {
        if json.cells.len() > json.cap + 1 {
            return Err(Error::CapExceeded {
                dim: json.cells.len() - 1,
                cap: json.cap,
            });
        }
        let mut out = Self::new(json.cap);
        for (dim, ids) in json.cells.iter().enumerate() {
            for id in ids {
                let faces = match json.faces.get(id) {
                    None if dim == 0 => Vec::new(),
                    Some(_) if dim == 0 => return Err(Error::Invalid(format!("vertex `{id}` cannot have faces"))),
                    None => return Err(Error::MissingData(format!("faces of `{id}`"))),
                    Some(fs) => fs
                        .iter()
                        .map(|f| {
                            let (bd, b) = out.lookup(&f.base).ok_or_else(|| Error::Unknown {
                                kind: "cell",
                                name: f.base.clone(),
                            })?;
                            let deg = OrdinalMap::from_degeneracy_word(dim - 1, &f.degeneracy_word)?;
                            if deg.target_dim() != bd {
                                return Err(Error::Invalid(format!(
                                    "face `{}` of `{id}` has the wrong dimension",
                                    f.base
                                )));
                            }
                            Ok(SimplexRef {
                                base: b,
                                degeneracy: deg,
                            })
                        })
                        .collect::<Result<Vec<_>>>()?,
                };
                out.add_cell(id.clone(), dim, faces)?;
            }
        }
        out.validate()?;
        Ok(out)
    }
}

fn reverse_ref(s: &SimplexRef) -> SimplexRef {
    let d = &s.degeneracy;
    let (n, m) = (d.source_dim(), d.target_dim());
    SimplexRef {
        base: s.base,
        degeneracy: OrdinalMap::new_unchecked((0..=n).map(|t| m - d.apply(n - t)).collect(), m),
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceJson {
    pub base: String,
    pub degeneracy_word: Vec<usize>,
}

/// Wire form of a simplicial set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialSetJson {
    pub cap: usize,
    pub cells: Vec<Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<FaceJson>>,
}

/// Builds a simplicial set from an abstract model whose simplices are keys of
/// type `K`. `nondegenerate[d]` lists the nondegenerate `d`-simplices with
/// their ids; `face` computes `d_i`; `normalize` returns the Eilenberg–Zilber
/// decomposition `(base key, surjection)` of any simplex.
pub fn build_from_model<K, F, N>(
    cap: usize,
    nondegenerate: Vec<Vec<(String, K)>>,
    face: F,
    normalize: N,
) -> Result<(SimplicialSet, HashMap<K, (usize, usize)>)>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, usize) -> K,
    N: Fn(&K) -> (K, OrdinalMap),
{
    let mut set = SimplicialSet::new(cap);
    let mut index: HashMap<K, (usize, usize)> = HashMap::new();
    for (dim, cells) in nondegenerate.into_iter().enumerate() {
        for (id, key) in cells {
            let faces = if dim == 0 {
                Vec::new()
            } else {
                (0..=dim)
                    .map(|i| {
                        let (base, surj) = normalize(&face(&key, i));
                        let &(bd, b) = index
                            .get(&base)
                            .ok_or_else(|| Error::MissingData(format!("face {i} of `{id}`")))?;
                        debug_assert_eq!(bd, surj.target_dim());
                        Ok(SimplexRef {
                            base: b,
                            degeneracy: surj,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let idx = set.add_cell(id, dim, faces)?;
            if index.insert(key, (dim, idx)).is_some() {
                return Err(Error::Invalid("model lists a simplex twice".into()));
            }
        }
    }
    Ok((set, index))
}
