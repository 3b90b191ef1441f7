use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::category::AInfCategory;
use super::cohomology::cohomology;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// A strict A∞-functor: an object map and linear hom components, with all
/// higher components zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictFunctor {
    object_map: Vec<usize>,
    // components[x][y] : hom(x, y) → hom(Fx, Fy), columns are images of the basis
    components: Vec<Vec<Gf2Matrix>>,
}

/// Wire form: object names and, per source basis label, the target labels
/// summing to its image. Absent labels map to zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorJson {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub hom: BTreeMap<String, Vec<String>>,
}

impl StrictFunctor {
    pub fn new(object_map: Vec<usize>, components: Vec<Vec<Gf2Matrix>>) -> Self {
        Self { object_map, components }
    }

    pub fn identity(cat: &AInfCategory) -> Self {
        let n = cat.object_count();
        Self {
            object_map: (0..n).collect(),
            components: (0..n)
                .map(|x| (0..n).map(|y| Gf2Matrix::identity(cat.hom_dim(x, y))).collect())
                .collect(),
        }
    }

    /// The functor matching objects by name and basis elements by label.
    pub fn by_labels(source: &AInfCategory, target: &AInfCategory) -> Result<Self> {
        let mut json = FunctorJson::default();
        for o in source.objects() {
            json.objects.insert(o.clone(), o.clone());
        }
        for x in 0..source.object_count() {
            for y in 0..source.object_count() {
                for &b in source.hom_basis(x, y) {
                    let l = source.label(b).to_string();
                    json.hom.insert(l.clone(), vec![l]);
                }
            }
        }
        Self::from_json(&json, source, target)
    }

    pub fn from_json(json: &FunctorJson, source: &AInfCategory, target: &AInfCategory) -> Result<Self> {
        let mut object_map = Vec::with_capacity(source.object_count());
        for o in source.objects() {
            let image = json
                .objects
                .get(o)
                .ok_or_else(|| Error::MissingData(format!("image of object `{o}`")))?;
            object_map.push(target.object(image)?);
        }
        if let Some(extra) = json.objects.keys().find(|k| source.object(k).is_err()) {
            return Err(Error::Unknown {
                kind: "object",
                name: extra.clone(),
            });
        }
        let n = source.object_count();
        let mut components = Vec::with_capacity(n);
        for x in 0..n {
            let mut row = Vec::with_capacity(n);
            for y in 0..n {
                let (fx, fy) = (object_map[x], object_map[y]);
                let cols = source
                    .hom_basis(x, y)
                    .iter()
                    .map(|&b| match json.hom.get(source.label(b)) {
                        Some(labels) => target.vector_from_labels(fx, fy, labels),
                        None => Ok(Gf2Vector::zero(target.hom_dim(fx, fy))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                row.push(Gf2Matrix::from_columns(target.hom_dim(fx, fy), &cols)?);
            }
            components.push(row);
        }
        for l in json.hom.keys() {
            source.basis_id(l)?;
        }
        Ok(Self { object_map, components })
    }

    pub fn to_json(&self, source: &AInfCategory, target: &AInfCategory) -> FunctorJson {
        let mut json = FunctorJson::default();
        for (x, &fx) in self.object_map.iter().enumerate() {
            json.objects
                .insert(source.object_name(x).to_string(), target.object_name(fx).to_string());
        }
        for x in 0..source.object_count() {
            for y in 0..source.object_count() {
                let (fx, fy) = (self.object_map[x], self.object_map[y]);
                for (i, &b) in source.hom_basis(x, y).iter().enumerate() {
                    let image = self.components[x][y].column(i);
                    if !image.is_zero() {
                        json.hom
                            .insert(source.label(b).to_string(), target.labels_of(fx, fy, &image));
                    }
                }
            }
        }
        json
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn map_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn component(&self, x: usize, y: usize) -> &Gf2Matrix {
        &self.components[x][y]
    }

    /// Image of `v ∈ hom(x, y)`.
    pub fn apply(&self, x: usize, y: usize, v: &Gf2Vector) -> Gf2Vector {
        self.components[x][y].mul_vec(v).expect("component dimensions")
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &StrictFunctor) -> Result<StrictFunctor> {
        let n = self.object_map.len();
        let mut components = Vec::with_capacity(n);
        for x in 0..n {
            let mut row = Vec::with_capacity(n);
            for y in 0..n {
                let (fx, fy) = (self.object_map[x], self.object_map[y]);
                row.push(other.components[fx][fy].mul(&self.components[x][y])?);
            }
            components.push(row);
        }
        Ok(StrictFunctor {
            object_map: self.object_map.iter().map(|&x| other.object_map[x]).collect(),
            components,
        })
    }

    /// Checks shapes, preservation of units and commutation with every `μ^d`
    /// up to the larger of the two maximal arities.
    pub fn validate(&self, source: &AInfCategory, target: &AInfCategory) -> Result<()> {
        let n = source.object_count();
        if self.object_map.len() != n || self.object_map.iter().any(|&x| x >= target.object_count()) {
            return Err(Error::NotFunctorial("object map does not match the categories".into()));
        }
        for x in 0..n {
            for y in 0..n {
                let m = &self.components[x][y];
                let (fx, fy) = (self.object_map[x], self.object_map[y]);
                if m.cols() != source.hom_dim(x, y) || m.rows() != target.hom_dim(fx, fy) {
                    return Err(Error::NotFunctorial(format!(
                        "component on hom({}, {}) has the wrong shape",
                        source.object_name(x),
                        source.object_name(y)
                    )));
                }
            }
            if self.apply(x, x, &source.unit(x)) != target.unit(self.object_map[x]) {
                return Err(Error::NotFunctorial(format!(
                    "unit of `{}` is not preserved",
                    source.object_name(x)
                )));
            }
        }
        let top = source.max_arity().max(target.max_arity());
        for d in 1..=top {
            for (chain, tuple) in source.composable_tuples(d) {
                let basis: Vec<Gf2Vector> = tuple.iter().map(|&b| source.basis_vector(b)).collect();
                let args: Vec<&Gf2Vector> = basis.iter().collect();
                let lhs = self.apply(chain[0], chain[d], &source.mu(&chain, &args));
                let images: Vec<Gf2Vector> = (0..d).map(|k| self.apply(chain[k], chain[k + 1], &basis[k])).collect();
                let image_args: Vec<&Gf2Vector> = images.iter().collect();
                let fchain: Vec<usize> = chain.iter().map(|&x| self.object_map[x]).collect();
                if lhs != target.mu(&fchain, &image_args) {
                    return Err(Error::NotFunctorial(format!(
                        "does not commute with μ^{d} on ({})",
                        tuple.iter().map(|&b| source.label(b)).collect::<Vec<_>>().join(", ")
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Injective on objects with every hom component a chain isomorphism.
pub fn is_fully_faithful_embedding(f: &StrictFunctor, source: &AInfCategory, target: &AInfCategory) -> bool {
    if f.validate(source, target).is_err() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !f.object_map.iter().all(|x| seen.insert(*x)) {
        return false;
    }
    f.components
        .iter()
        .flatten()
        .all(|m| m.rows() == m.cols() && m.rank() == m.cols())
}

/// Isomorphism on cohomology homs and essentially surjective on the
/// cohomology category.
pub fn is_quasi_equivalence(f: &StrictFunctor, source: &AInfCategory, target: &AInfCategory) -> bool {
    if f.validate(source, target).is_err() {
        return false;
    }
    let (Ok(hs), Ok(ht)) = (cohomology(source), cohomology(target)) else {
        return false;
    };
    let n = source.object_count();
    for x in 0..n {
        for y in 0..n {
            let (fx, fy) = (f.object_map[x], f.object_map[y]);
            if hs.hom_dim(x, y) != ht.hom_dim(fx, fy) {
                return false;
            }
            let cols: Option<Vec<Gf2Vector>> = hs
                .hom(x, y)
                .representatives()
                .iter()
                .map(|r| ht.hom(fx, fy).class_of(&f.apply(x, y, r)))
                .collect();
            let Some(cols) = cols else { return false };
            let Ok(m) = Gf2Matrix::from_columns(ht.hom_dim(fx, fy), &cols) else {
                return false;
            };
            if m.rank() != m.cols() {
                return false;
            }
        }
    }
    (0..target.object_count()).all(|t| f.object_map.iter().any(|&fx| ht.is_isomorphic(fx, t)))
}
