use super::ordinal::OrdinalMap;
use super::set::{SimplexRef, SimplicialSet};
use crate::error::{Error, Result};

/// A simplicial map given by the images of nondegenerate cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    images: Vec<Vec<SimplexRef>>,
}

impl SimplicialMap {
    /// `images[d][i]` is the image of the `i`-th nondegenerate `d`-cell.
    pub fn new(images: Vec<Vec<SimplexRef>>) -> Self {
        Self { images }
    }

    /// Builds a map by evaluating `f` on every nondegenerate cell of `source`.
    pub fn from_fn(source: &SimplicialSet, mut f: impl FnMut(usize, usize) -> SimplexRef) -> Self {
        Self {
            images: (0..=source.cap())
                .map(|d| (0..source.count(d)).map(|i| f(d, i)).collect())
                .collect(),
        }
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        Self::from_fn(x, SimplexRef::nondegenerate)
    }

    pub fn image_of_cell(&self, dim: usize, idx: usize) -> &SimplexRef {
        &self.images[dim][idx]
    }

    pub fn images(&self) -> &[Vec<SimplexRef>] {
        &self.images
    }

    /// Image of an arbitrary simplex: `F(σ^* x) = σ^* F(x)`.
    pub fn apply(&self, target: &SimplicialSet, s: &SimplexRef) -> Result<SimplexRef> {
        let img = self
            .images
            .get(s.base_dim())
            .and_then(|v| v.get(s.base))
            .ok_or(Error::OutOfRange {
                index: s.base,
                bound: self.images.get(s.base_dim()).map_or(0, Vec::len),
            })?;
        target.act(img, &s.degeneracy)
    }

    /// Checks dimensions and commutation with every face operator on the
    /// nondegenerate generators; degeneracies then commute automatically.
    pub fn check(&self, source: &SimplicialSet, target: &SimplicialSet) -> Result<()> {
        if self.images.len() != source.cap() + 1 {
            return Err(Error::NotSimplicial("map does not cover every dimension".into()));
        }
        for d in 0..=source.cap() {
            if self.images[d].len() != source.count(d) {
                return Err(Error::NotSimplicial(format!("wrong number of images in dimension {d}")));
            }
            for (i, img) in self.images[d].iter().enumerate() {
                if img.dim() != d || img.base_dim() > target.cap() || img.base >= target.count(img.base_dim()) {
                    return Err(Error::NotSimplicial(format!(
                        "image of `{}` is not a {d}-simplex of the target",
                        source.cell(d, i).id
                    )));
                }
                if d == 0 {
                    continue;
                }
                let x = SimplexRef::nondegenerate(d, i);
                for k in 0..=d {
                    let lhs = self.apply(target, &source.face(&x, k)?)?;
                    let rhs = target.face(img, k)?;
                    if lhs != rhs {
                        return Err(Error::NotSimplicial(format!(
                            "d_{k} does not commute on `{}`",
                            source.cell(d, i).id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_simplicial(&self, source: &SimplicialSet, target: &SimplicialSet) -> bool {
        self.check(source, target).is_ok()
    }

    /// The induced map between opposite simplicial sets.
    pub fn opposite(&self) -> Self {
        Self {
            images: self
                .images
                .iter()
                .map(|row| row.iter().map(SimplexRef::opposite).collect())
                .collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, middle: &SimplicialSet, other: &SimplicialMap) -> Result<SimplicialMap> {
        Ok(Self {
            images: self
                .images
                .iter()
                .map(|row| row.iter().map(|s| other.apply(middle, s)).collect())
                .collect::<Result<Vec<_>>>()?,
        })
    }
}

/// The map `Δⁿ → X` classifying an `n`-simplex `s`: the face of `Δⁿ` on a
/// subset `v` goes to the corresponding face of `s`.
pub fn classifying_map(delta: &SimplicialSet, x: &SimplicialSet, s: &SimplexRef) -> Result<SimplicialMap> {
    let n = s.dim();
    let mut images = Vec::with_capacity(delta.cap() + 1);
    for d in 0..=delta.cap() {
        let row = delta
            .cells(d)
            .iter()
            .map(|c| {
                let verts: Vec<usize> = c.id.split(',').map(|t| t.parse().unwrap()).collect();
                x.act(s, &OrdinalMap::from_image(&verts, n)?)
            })
            .collect::<Result<Vec<_>>>()?;
        images.push(row);
    }
    Ok(SimplicialMap::new(images))
}
