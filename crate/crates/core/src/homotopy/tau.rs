use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::horn::{face_json, is_quasi_category, tables};
use crate::error::{Error, Result};
use crate::simplicial::{FaceJson, OrdinalMap, SimplexRef, SimplicialSet};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// The homotopy category of a quasi-category truncation: edges modulo
/// homotopy, composition by filling `Λ²₁`.
#[derive(Clone, Debug)]
pub struct HoCategory {
    /// Vertex cell indices.
    pub objects: Vec<usize>,
    edges: Vec<SimplexRef>,
    edge_index: HashMap<SimplexRef, usize>,
    class_of_edge: Vec<usize>,
    classes: Vec<MorphismClass>,
    compose: HashMap<(usize, usize), usize>,
    identities: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct MorphismClass {
    pub source: usize,
    pub target: usize,
    /// Edge indices, the first one being the representative.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HoCategoryJson {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismJson>,
    pub composition: Vec<[usize; 3]>,
    pub identities: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: String,
    pub target: String,
    pub members: Vec<FaceJson>,
}

/// Builds `τ X`; requires `X` to pass the inner horn check up to `cap ≥ 2`.
pub fn tau(x: &SimplicialSet, cap: usize) -> Result<HoCategory> {
    if cap < 2 {
        return Err(Error::Invalid("τ needs cap ≥ 2".into()));
    }
    let qc = is_quasi_category(x, cap)?;
    if !qc.pass {
        let w = qc.witness.expect("failing reports carry a witness");
        return Err(Error::NotQuasiCategory(format!("Λ{}_{} has no filler", w.n, w.k)));
    }
    let t = tables(x, 2);
    let edges = t[1].all.clone();
    let edge_index = t[1].index.clone();
    let degenerate_at: Vec<usize> = (0..x.count(0))
        .map(|v| edge_index[&x.degenerate_vertex(v, 1)])
        .collect();
    let vertex_of = |id: usize| t[0].all[id].base;
    let mut uf = UnionFind::new(edges.len());
    for f in &t[2].faces {
        // faces are (d0, d1, d2) = (g, composite, f)
        let (d0, d1, d2) = (f[0], f[1], f[2]);
        if t[1].all[d0].is_degenerate() {
            uf.union(d2, d1);
        }
        if t[1].all[d2].is_degenerate() {
            uf.union(d0, d1);
        }
    }
    let mut classes: Vec<MorphismClass> = Vec::new();
    let mut class_by_root: HashMap<usize, usize> = HashMap::new();
    let mut class_of_edge = vec![0; edges.len()];
    for e in 0..edges.len() {
        let r = uf.find(e);
        let c = *class_by_root.entry(r).or_insert_with(|| {
            let f = &t[1].faces[e];
            classes.push(MorphismClass {
                source: vertex_of(f[1]),
                target: vertex_of(f[0]),
                members: Vec::new(),
            });
            classes.len() - 1
        });
        classes[c].members.push(e);
        class_of_edge[e] = c;
    }
    let mut compose = HashMap::new();
    for f in &t[2].faces {
        let key = (class_of_edge[f[2]], class_of_edge[f[0]]);
        let value = class_of_edge[f[1]];
        if let Some(&old) = compose.get(&key) {
            if old != value {
                return Err(Error::NotQuasiCategory(
                    "composition depends on the choice of filler".into(),
                ));
            }
        } else {
            compose.insert(key, value);
        }
    }
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate() {
            if ca.target == cb.source && !compose.contains_key(&(a, b)) {
                return Err(Error::NotQuasiCategory("a composable pair has no 2-simplex".into()));
            }
        }
    }
    let identities = degenerate_at.iter().map(|&e| class_of_edge[e]).collect();
    Ok(HoCategory {
        objects: (0..x.count(0)).collect(),
        edges,
        edge_index,
        class_of_edge,
        classes,
        compose,
        identities,
    })
}

impl HoCategory {
    pub fn classes(&self) -> &[MorphismClass] {
        &self.classes
    }

    pub fn class_of(&self, edge: &SimplexRef) -> Option<usize> {
        self.edge_index.get(edge).map(|&e| self.class_of_edge[e])
    }

    pub fn representative(&self, class: usize) -> &SimplexRef {
        &self.edges[self.classes[class].members[0]]
    }

    pub fn identity(&self, vertex: usize) -> usize {
        self.identities[vertex]
    }

    /// `a` then `b`.
    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose.get(&(a, b)).copied()
    }

    /// Classes from `x` to `y`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.classes[c].source == x && self.classes[c].target == y)
            .collect()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        let c = &self.classes[a];
        self.hom(c.target, c.source).into_iter().find(|&b| {
            self.compose(a, b) == Some(self.identities[c.source])
                && self.compose(b, a) == Some(self.identities[c.target])
        })
    }

    pub fn is_iso(&self, a: usize) -> bool {
        self.inverse(a).is_some()
    }

    /// Checks associativity and unit laws of the composition table.
    pub fn check_category_laws(&self) -> Result<()> {
        for (a, ca) in self.classes.iter().enumerate() {
            if self.compose(self.identities[ca.source], a) != Some(a)
                || self.compose(a, self.identities[ca.target]) != Some(a)
            {
                return Err(Error::Invalid("τ violates a unit law".into()));
            }
            for b in (0..self.classes.len()).filter(|&b| self.classes[b].source == ca.target) {
                for c in (0..self.classes.len()).filter(|&c| self.classes[c].source == self.classes[b].target) {
                    let l = self.compose(a, b).and_then(|ab| self.compose(ab, c));
                    let r = self.compose(b, c).and_then(|bc| self.compose(a, bc));
                    if l != r {
                        return Err(Error::Invalid("τ composition is not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, x: &SimplicialSet) -> HoCategoryJson {
        let name = |v: usize| x.cell(0, v).id.clone();
        let mut composition: Vec<[usize; 3]> = self.compose.iter().map(|(&(a, b), &c)| [a, b, c]).collect();
        composition.sort();
        HoCategoryJson {
            objects: self.objects.iter().map(|&v| name(v)).collect(),
            morphisms: self
                .classes
                .iter()
                .map(|c| MorphismJson {
                    source: name(c.source),
                    target: name(c.target),
                    members: c.members.iter().map(|&e| face_json(x, &self.edges[e])).collect(),
                })
                .collect(),
            composition,
            identities: self.objects.iter().map(|&v| (name(v), self.identities[v])).collect(),
        }
    }
}

/// Vertices modulo isomorphism in `τ X`, each class sorted, classes ordered
/// by their least vertex.
pub fn tau0(x: &SimplicialSet, cap: usize) -> Result<Vec<Vec<usize>>> {
    let h = tau(x, cap)?;
    let mut uf = UnionFind::new(h.objects.len());
    for (a, c) in h.classes.iter().enumerate() {
        if h.is_iso(a) {
            uf.union(c.source, c.target);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..h.objects.len() {
        let r = uf.find(v);
        groups.entry(r).or_default().push(v);
    }
    Ok(groups.into_values().collect())
}

/// Whether the class of `e` is invertible in `τ X`.
pub fn is_equivalence_edge(x: &SimplicialSet, e: &SimplexRef, cap: usize) -> Result<bool> {
    let h = tau(x, cap)?;
    let c = h
        .class_of(e)
        .ok_or_else(|| Error::Invalid("not an edge of the simplicial set".into()))?;
    Ok(h.is_iso(c))
}

/// The simplicial subset of simplices all of whose edges are equivalences,
/// with the index map back into `x`.
pub fn maximal_kan_subcomplex(x: &SimplicialSet, cap: usize) -> Result<(SimplicialSet, Vec<Vec<usize>>)> {
    let h = tau(x, cap)?;
    let equivalence: Vec<bool> = (0..x.count(1))
        .map(|i| {
            h.is_iso(
                h.class_of(&SimplexRef::nondegenerate(1, i))
                    .expect("edges are classified"),
            )
        })
        .collect();
    x.subcomplex(|d, i| {
        if d < 2 {
            return d == 0 || equivalence[i];
        }
        let s = SimplexRef::nondegenerate(d, i);
        (0..d).all(|a| {
            (a + 1..=d).all(|b| {
                let m = OrdinalMap::from_image(&[a, b], d).expect("increasing");
                let e = x.act(&s, &m).expect("dimensions agree");
                e.base_dim() != 1 || equivalence[e.base]
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard_simplex;

    #[test]
    fn point_is_terminal() {
        let p = standard_simplex(0).with_cap(2).unwrap();
        let h = tau(&p, 2).unwrap();
        assert_eq!(h.classes().len(), 1);
        assert_eq!(tau0(&p, 2).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn simplex_one_is_arrow_category() {
        let d1 = standard_simplex(1).with_cap(2).unwrap();
        let h = tau(&d1, 2).unwrap();
        assert_eq!(h.classes().len(), 3);
        h.check_category_laws().unwrap();
        assert!(!is_equivalence_edge(&d1, &SimplexRef::nondegenerate(1, 0), 2).unwrap());
        assert_eq!(tau0(&d1, 2).unwrap().len(), 2);
        let (core, _) = maximal_kan_subcomplex(&d1, 2).unwrap();
        assert_eq!(core.counts(), vec![2, 0, 0]);
    }

    #[test]
    fn two_points() {
        let mut x = SimplicialSet::new(2);
        x.add_cell("a", 0, vec![]).unwrap();
        x.add_cell("b", 0, vec![]).unwrap();
        assert_eq!(tau0(&x, 2).unwrap().len(), 2);
    }

    #[test]
    fn horn_rejected() {
        let h = crate::simplicial::horn(2, 1);
        assert!(matches!(tau(&h, 2), Err(Error::NotQuasiCategory(_))));
    }
}
