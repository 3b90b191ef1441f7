use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::simplicial::{FaceJson, SimplexRef, SimplicialSet};

/// All simplices of one dimension (degenerate ones included) with integer
/// ids and the ids of their faces.
pub(crate) struct SimplexTable {
    pub all: Vec<SimplexRef>,
    pub index: HashMap<SimplexRef, usize>,
    pub faces: Vec<Vec<usize>>,
}

pub(crate) fn tables(x: &SimplicialSet, top: usize) -> Vec<SimplexTable> {
    let mut out: Vec<SimplexTable> = Vec::with_capacity(top + 1);
    for d in 0..=top {
        let all = x.simplices(d);
        let index = all.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let faces = if d == 0 {
            vec![Vec::new(); all.len()]
        } else {
            let below = &out[d - 1].index;
            all.iter()
                .map(|s| {
                    (0..=d)
                        .map(|i| below[&x.face(s, i).expect("positive dimension")])
                        .collect()
                })
                .collect()
        };
        out.push(SimplexTable { all, index, faces });
    }
    out
}

/// A horn `Λⁿ_k → X` without a filler.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornWitness {
    pub n: usize,
    pub k: usize,
    /// Faces `d_i` for `i ≠ k`, in increasing `i`.
    pub faces: Vec<FaceJson>,
}

/// Outcome of a horn-filling check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub cap: usize,
    pub pass: bool,
    pub witness: Option<HornWitness>,
}

pub(crate) fn face_json(x: &SimplicialSet, s: &SimplexRef) -> FaceJson {
    FaceJson {
        base: x.id_of(s).to_string(),
        degeneracy_word: s.degeneracy.degeneracy_word(),
    }
}

pub(crate) fn from_face_json(x: &SimplicialSet, f: &FaceJson, dim: usize) -> Result<SimplexRef> {
    let (d, idx) = x.lookup(&f.base).ok_or_else(|| Error::Unknown {
        kind: "simplex",
        name: f.base.clone(),
    })?;
    if d + f.degeneracy_word.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: d + f.degeneracy_word.len(),
        });
    }
    Ok(SimplexRef {
        base: idx,
        degeneracy: crate::simplicial::OrdinalMap::from_degeneracy_word(dim, &f.degeneracy_word)?,
    })
}

/// Searches all horns `Λⁿ_k → X` for the given `(n, k)` and returns the
/// first one (in lexicographic order of face ids) without a filler.
pub(crate) fn unfilled_horn(t: &[SimplexTable], n: usize, k: usize) -> Option<Vec<usize>> {
    let positions: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    let filled: HashSet<Vec<usize>> = t[n]
        .faces
        .iter()
        .map(|f| positions.iter().map(|&i| f[i]).collect())
        .collect();
    find_horn(t, n, k, &|_, _| true, &mut |h| !filled.contains(h))
}

/// Depth-first search over compatible horns `Λⁿ_k → X` (faces in increasing
/// position, candidates restricted by `allow(position, simplex)`), returning
/// the first one for which `reject` holds.
pub(crate) fn find_horn(
    t: &[SimplexTable],
    n: usize,
    k: usize,
    allow: &dyn Fn(usize, usize) -> bool,
    reject: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let positions: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
    // by_face[i][face] = (n-1)-simplices whose i-th face is `face`
    let mut by_face: Vec<HashMap<usize, Vec<usize>>> = vec![HashMap::new(); n];
    for (s, f) in t[n - 1].faces.iter().enumerate() {
        for (i, &fi) in f.iter().enumerate() {
            by_face[i].entry(fi).or_default().push(s);
        }
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let search = Search {
        t,
        n,
        positions: &positions,
        by_face: &by_face,
        allow,
    };
    search.run(&mut chosen, reject)
}

struct Search<'a> {
    t: &'a [SimplexTable],
    n: usize,
    positions: &'a [usize],
    by_face: &'a [HashMap<usize, Vec<usize>>],
    allow: &'a dyn Fn(usize, usize) -> bool,
}

impl Search<'_> {
    fn run(&self, chosen: &mut Vec<usize>, reject: &mut dyn FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
        let level = chosen.len();
        if level == self.positions.len() {
            return reject(chosen).then(|| chosen.clone());
        }
        let j = self.positions[level];
        let faces = &self.t[self.n - 1].faces;
        // compatibility: for earlier i < j, d_i x_j = d_{j-1} x_i
        let candidates: Vec<usize> = if level == 0 {
            (0..self.t[self.n - 1].all.len()).collect()
        } else {
            let i = self.positions[0];
            let (pos, want) = if i < j {
                (i, faces[chosen[0]][j - 1])
            } else {
                (i - 1, faces[chosen[0]][j])
            };
            self.by_face[pos].get(&want).cloned().unwrap_or_default()
        };
        'next: for c in candidates {
            if !(self.allow)(j, c) {
                continue;
            }
            for (l, &i) in self.positions[..level].iter().enumerate() {
                let xi = chosen[l];
                let ok = if i < j {
                    faces[c][i] == faces[xi][j - 1]
                } else {
                    faces[c][i - 1] == faces[xi][j]
                };
                if !ok {
                    continue 'next;
                }
            }
            chosen.push(c);
            if let Some(w) = self.run(chosen, reject) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }
}

fn horn_check(x: &SimplicialSet, cap: usize, inner_only: bool, name: &str) -> Result<CheckReport> {
    if cap > x.cap() {
        return Err(Error::CapExceeded { dim: cap, cap: x.cap() });
    }
    let t = tables(x, cap);
    for n in 1..=cap {
        let ks: Vec<usize> = if inner_only {
            (1..n).collect()
        } else {
            (0..=n).collect()
        };
        for k in ks {
            if let Some(w) = unfilled_horn(&t, n, k) {
                let positions = (0..=n).filter(|&i| i != k);
                let faces = positions
                    .zip(&w)
                    .map(|(_, &s)| face_json(x, &t[n - 1].all[s]))
                    .collect();
                return Ok(CheckReport {
                    check: name.into(),
                    cap,
                    pass: false,
                    witness: Some(HornWitness { n, k, faces }),
                });
            }
        }
    }
    Ok(CheckReport {
        check: name.into(),
        cap,
        pass: true,
        witness: None,
    })
}

/// Every inner horn `Λⁿ_k → X` with `n ≤ cap` extends to `Δⁿ`.
pub fn is_quasi_category(x: &SimplicialSet, cap: usize) -> Result<CheckReport> {
    horn_check(x, cap, true, "quasi_category")
}

/// Every horn `Λⁿ_k → X` with `n ≤ cap` extends to `Δⁿ`.
pub fn is_kan(x: &SimplicialSet, cap: usize) -> Result<CheckReport> {
    horn_check(x, cap, false, "kan")
}

/// Whether the horn described by a witness has a filler in `x`.
pub fn horn_has_filler(x: &SimplicialSet, w: &HornWitness) -> Result<bool> {
    let n = w.n;
    if n == 0 || w.k > n || w.faces.len() != n || n > x.cap() {
        return Err(Error::Invalid("malformed horn".into()));
    }
    let given = w
        .faces
        .iter()
        .map(|f| from_face_json(x, f, n - 1))
        .collect::<Result<Vec<_>>>()?;
    for (a, &i) in (0..=n).filter(|&i| i != w.k).collect::<Vec<_>>().iter().enumerate() {
        for (b, &j) in (0..=n).filter(|&i| i != w.k).collect::<Vec<_>>().iter().enumerate() {
            if i < j && x.face(&given[b], i)? != x.face(&given[a], j - 1)? {
                return Err(Error::Invalid("horn faces are not compatible".into()));
            }
        }
    }
    for s in x.simplices(n) {
        let ok = (0..=n)
            .filter(|&i| i != w.k)
            .zip(&given)
            .all(|(i, g)| x.face(&s, i).map(|f| f == *g).unwrap_or(false));
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}
