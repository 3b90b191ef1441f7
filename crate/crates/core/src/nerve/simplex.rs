use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::wedge::{elements, mask_of, SubsetTerms};
use crate::ainf::AInfCategory;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::simplicial::{subset_id, OrdinalMap};

/// An `n`-simplex of the A∞-nerve: objects `X₀, …, X_n` and, for every
/// subset `j ⊆ [n]` with `|j| ≥ 2`, an element `f_j ∈ hom(X_{min j}, X_{max j})`.
///
/// `f` is indexed by subset bitmask; entries for subsets of size below two
/// are empty vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveSimplex {
    vertices: Vec<usize>,
    f: Vec<Gf2Vector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NerveSimplexJson {
    pub vertices: Vec<String>,
    pub f: BTreeMap<String, Vec<String>>,
}

impl NerveSimplex {
    /// The simplex with the given vertices and every `f_j = 0`.
    pub fn zero(cat: &AInfCategory, vertices: Vec<usize>) -> Self {
        let n = vertices.len() - 1;
        let f = (0u32..1 << (n + 1))
            .map(|m| {
                if m.count_ones() < 2 {
                    Gf2Vector::zero(0)
                } else {
                    let p = elements(m);
                    Gf2Vector::zero(cat.hom_dim(vertices[p[0]], vertices[*p.last().unwrap()]))
                }
            })
            .collect();
        Self { vertices, f }
    }

    /// The 0-simplex at an object.
    pub fn vertex(cat: &AInfCategory, x: usize) -> Self {
        Self::zero(cat, vec![x])
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn get(&self, j: &[usize]) -> &Gf2Vector {
        &self.f[mask_of(j) as usize]
    }

    pub fn get_mask(&self, mask: u32) -> &Gf2Vector {
        &self.f[mask as usize]
    }

    pub fn set(&mut self, j: &[usize], v: Gf2Vector) -> Result<()> {
        self.set_mask(mask_of(j), v)
    }

    pub fn set_mask(&mut self, mask: u32, v: Gf2Vector) -> Result<()> {
        let slot = self
            .f
            .get_mut(mask as usize)
            .filter(|_| mask.count_ones() >= 2)
            .ok_or(Error::OutOfRange {
                index: mask as usize,
                bound: 1 << 31,
            })?;
        if slot.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: slot.len(),
                found: v.len(),
            });
        }
        *slot = v;
        Ok(())
    }

    pub(crate) fn data(&self) -> &[Gf2Vector] {
        &self.f
    }

    /// The simplex `m*(self)` for a monotone map `m : [k] → [n]`:
    /// `f'_j = f_{m(j)}` where `m` is injective on `j`, the unit on collapsed
    /// pairs, and zero otherwise.
    pub fn act(&self, cat: &AInfCategory, m: &OrdinalMap) -> Self {
        debug_assert_eq!(m.target_dim(), self.dim());
        let vertices: Vec<usize> = m.values().iter().map(|&i| self.vertices[i]).collect();
        let mut out = Self::zero(cat, vertices);
        for mask in 0u32..1 << (m.source_dim() + 1) {
            let size = mask.count_ones();
            if size < 2 {
                continue;
            }
            let image = elements(mask).iter().fold(0u32, |acc, &i| acc | 1 << m.apply(i));
            if image.count_ones() == size {
                out.f[mask as usize] = self.f[image as usize].clone();
            } else if size == 2 {
                out.f[mask as usize] = cat.unit(out.vertices[elements(mask)[0]]);
            }
        }
        out
    }

    pub fn face(&self, cat: &AInfCategory, i: usize) -> Self {
        self.act(cat, &OrdinalMap::coface(self.dim(), i))
    }

    pub fn degeneracy(&self, cat: &AInfCategory, i: usize) -> Self {
        self.act(cat, &OrdinalMap::codegeneracy(self.dim(), i))
    }

    /// Positions `i` with `self = s_i d_i self`.
    pub fn degenerate_positions(&self, cat: &AInfCategory) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| {
                self.vertices[i] == self.vertices[i + 1]
                    && self.f[(3u32 << i) as usize] == cat.unit(self.vertices[i])
                    && self.face(cat, i).degeneracy(cat, i) == *self
            })
            .collect()
    }

    /// Eilenberg–Zilber decomposition `self = σ*(base)`.
    pub fn normalize(&self, cat: &AInfCategory) -> (Self, OrdinalMap) {
        let repeats = self.degenerate_positions(cat);
        let sigma = OrdinalMap::surjection_with_repeats(self.dim(), &repeats);
        let base = self.act(cat, &sigma.first_section());
        debug_assert_eq!(base.act(cat, &sigma), *self);
        (base, sigma)
    }

    pub fn to_json(&self, cat: &AInfCategory) -> NerveSimplexJson {
        let mut f = BTreeMap::new();
        for mask in 0u32..self.f.len() as u32 {
            if mask.count_ones() >= 2 {
                let p = elements(mask);
                let (x, y) = (self.vertices[p[0]], self.vertices[*p.last().unwrap()]);
                f.insert(subset_id(&p), cat.labels_of(x, y, &self.f[mask as usize]));
            }
        }
        NerveSimplexJson {
            vertices: self.vertices.iter().map(|&x| cat.object_name(x).to_string()).collect(),
            f,
        }
    }

    /// Parses a simplex; every subset of size at least two must be present
    /// except those listed in `may_omit` (left zero).
    pub fn from_json(cat: &AInfCategory, json: &NerveSimplexJson, may_omit: &[u32]) -> Result<Self> {
        if json.vertices.is_empty() {
            return Err(Error::Invalid("a simplex needs at least one vertex".into()));
        }
        let vertices = json
            .vertices
            .iter()
            .map(|v| cat.object(v))
            .collect::<Result<Vec<_>>>()?;
        let n = vertices.len() - 1;
        let mut out = Self::zero(cat, vertices);
        let mut seen = std::collections::HashSet::new();
        for (key, labels) in &json.f {
            let p = parse_subset(key, n)?;
            let mask = mask_of(&p);
            let (x, y) = (out.vertices[p[0]], out.vertices[*p.last().unwrap()]);
            out.f[mask as usize] = cat.vector_from_labels(x, y, labels)?;
            seen.insert(mask);
        }
        for mask in 0u32..1 << (n + 1) {
            if mask.count_ones() >= 2 && !seen.contains(&mask) && !may_omit.contains(&mask) {
                return Err(Error::MissingData(subset_id(&elements(mask))));
            }
        }
        Ok(out)
    }
}

fn parse_subset(key: &str, n: usize) -> Result<Vec<usize>> {
    let p = key
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Invalid(format!("subset key `{key}`")))?;
    if p.len() < 2 || p.windows(2).any(|w| w[0] >= w[1]) || *p.last().unwrap() > n {
        return Err(Error::Invalid(format!(
            "subset key `{key}` is not an increasing subset of [{n}]"
        )));
    }
    Ok(p)
}

pub(crate) fn mu1(cat: &AInfCategory, x: usize, y: usize, v: &Gf2Vector) -> Gf2Vector {
    cat.mu(&[x, y], &[v])
}

/// Sum of the right-hand side terms at `t.mask` (deletions and wedge products).
pub(crate) fn rhs(cat: &AInfCategory, vertices: &[usize], f: &[Gf2Vector], t: &SubsetTerms) -> Gf2Vector {
    let mut out = Gf2Vector::zero(cat.hom_dim(vertices[t.first], vertices[t.last]));
    for &d in &t.deletions {
        out.xor_in(&f[d as usize]);
    }
    let top = cat.max_arity();
    for (blocks, chain) in &t.wedges {
        if blocks.len() > top || blocks.iter().any(|&b| f[b as usize].is_zero()) {
            continue;
        }
        let objs: SmallVec<[usize; 8]> = chain.iter().map(|&p| vertices[p]).collect();
        let args: SmallVec<[&Gf2Vector; 8]> = blocks.iter().map(|&b| &f[b as usize]).collect();
        out.xor_in(&cat.mu(&objs, &args));
    }
    out
}

/// `μ¹(f_j)` plus the right-hand side of the nerve equation at `j`; zero
/// exactly when the equation holds.
pub fn simplex_residual(cat: &AInfCategory, c: &NerveSimplex, j: &[usize]) -> Result<Gf2Vector> {
    let mask = mask_of(j);
    if j.len() < 2 || j.windows(2).any(|w| w[0] >= w[1]) || *j.last().unwrap() > c.dim() {
        return Err(Error::Invalid(format!(
            "`{}` is not a subset of size ≥ 2",
            subset_id(j)
        )));
    }
    Ok(residual_mask(cat, c, mask))
}

pub(crate) fn residual_mask(cat: &AInfCategory, c: &NerveSimplex, mask: u32) -> Gf2Vector {
    let t = SubsetTerms::new(mask, false);
    let (x, y) = (c.vertices[t.first], c.vertices[t.last]);
    let mut r = rhs(cat, &c.vertices, &c.f, &t);
    r.xor_in(&mu1(cat, x, y, &c.f[mask as usize]));
    r
}

/// The first subset (by size, then mask) where the nerve equation fails.
pub fn nerve_violation(cat: &AInfCategory, c: &NerveSimplex) -> Option<Vec<usize>> {
    super::wedge::ordered_subsets(c.dim())
        .into_iter()
        .find(|&m| !residual_mask(cat, c, m).is_zero())
        .map(elements)
}

pub fn is_nerve_simplex(cat: &AInfCategory, c: &NerveSimplex) -> bool {
    nerve_violation(cat, c).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::{catalog, CategoryJson};

    fn triangle_category() -> AInfCategory {
        // X → Y → Z with f, g, h : X → Z, and an extra e : X → Z with μ¹e = h + fg
        let mut j = CategoryJson::default();
        for o in ["X", "Y", "Z"] {
            let e = format!("1{o}");
            j.object(o).hom(o, o, &[&e]).unit(o, &e);
        }
        j.hom("X", "Y", &["f"])
            .hom("Y", "Z", &["g"])
            .hom("X", "Z", &["h", "fg", "e"])
            .mu(&["f", "g"], &["fg"])
            .mu(&["e"], &["h", "fg"])
            .with_unit_laws();
        j.build().unwrap()
    }

    fn triangle(cat: &AInfCategory, e: &[&str]) -> NerveSimplex {
        let mut c = NerveSimplex::zero(cat, vec![0, 1, 2]);
        let v = |x, y, l: &[&str]| {
            cat.vector_from_labels(x, y, &l.iter().map(|s| s.to_string()).collect::<Vec<_>>())
                .unwrap()
        };
        c.set(&[0, 1], v(0, 1, &["f"])).unwrap();
        c.set(&[1, 2], v(1, 2, &["g"])).unwrap();
        c.set(&[0, 2], v(0, 2, &["h"])).unwrap();
        c.set(&[0, 1, 2], v(0, 2, e)).unwrap();
        c
    }

    #[test]
    fn two_simplex_with_homotopy() {
        let cat = triangle_category();
        assert!(is_nerve_simplex(&cat, &triangle(&cat, &["e"])));
        let bad = triangle(&cat, &[]);
        assert_eq!(nerve_violation(&cat, &bad), Some(vec![0, 1, 2]));
        let r = simplex_residual(&cat, &bad, &[0, 1, 2]).unwrap();
        assert_eq!(cat.labels_of(0, 2, &r), vec!["h".to_string(), "fg".to_string()]);
    }

    #[test]
    fn perturbing_long_edge_shows_in_residual() {
        let cat = triangle_category();
        let mut c = triangle(&cat, &["e"]);
        let mut h = c.get(&[0, 2]).clone();
        h.flip(1);
        c.set(&[0, 2], h).unwrap();
        let r = simplex_residual(&cat, &c, &[0, 1, 2]).unwrap();
        assert_eq!(r, Gf2Vector::unit(3, 1));
    }

    #[test]
    fn units_only_all_units_is_valid() {
        let cat = catalog::discrete(1);
        for n in 1..5 {
            let mut c = NerveSimplex::zero(&cat, vec![0; n + 1]);
            for m in 0u32..1 << (n + 1) {
                if m.count_ones() >= 2 {
                    c.set_mask(m, cat.unit(0)).unwrap();
                }
            }
            assert!(is_nerve_simplex(&cat, &c), "n = {n}");
        }
    }

    #[test]
    fn faces_and_degeneracies() {
        let cat = triangle_category();
        let c = triangle(&cat, &["e"]);
        let edge = c.act(&cat, &OrdinalMap::from_image(&[0, 2], 2).unwrap());
        assert_eq!(edge.get(&[0, 1]), c.get(&[0, 2]));
        let v = NerveSimplex::vertex(&cat, 1);
        let s = v.degeneracy(&cat, 0);
        assert_eq!(*s.get(&[0, 1]), cat.unit(1));
        for i in 0..=2 {
            let d = c.degeneracy(&cat, i);
            assert!(is_nerve_simplex(&cat, &d));
            assert_eq!(d.face(&cat, i), c);
            assert_eq!(d.face(&cat, i + 1), c);
            assert_eq!(d.normalize(&cat), (c.clone(), OrdinalMap::codegeneracy(2, i)));
        }
    }

    #[test]
    fn json_round_trip() {
        let cat = triangle_category();
        let c = triangle(&cat, &["e"]);
        let j = c.to_json(&cat);
        assert_eq!(NerveSimplex::from_json(&cat, &j, &[]).unwrap(), c);
        let mut partial = j.clone();
        partial.f.remove("0,1,2");
        assert!(matches!(
            NerveSimplex::from_json(&cat, &partial, &[]),
            Err(Error::MissingData(_))
        ));
    }
}
