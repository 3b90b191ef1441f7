use super::ordinal::OrdinalMap;
use super::set::{SimplexRef, SimplicialSet};

/// A morphism `source → target` of the category of simplices: an ordinal map
/// `m` with `m^* target = source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplexMorphism {
    pub source: usize,
    pub target: usize,
    pub map: OrdinalMap,
}

/// The category of simplices `Δ/X` of a truncated simplicial set, up to its
/// cap. Objects are all simplices, degenerate ones included.
#[derive(Clone, Debug)]
pub struct SimplexCategory {
    pub objects: Vec<SimplexRef>,
    pub morphisms: Vec<SimplexMorphism>,
}

impl SimplexCategory {
    pub fn new(x: &SimplicialSet, cap: usize) -> Self {
        let cap = cap.min(x.cap());
        let objects: Vec<SimplexRef> = (0..=cap).flat_map(|d| x.simplices(d)).collect();
        let mut morphisms = Vec::new();
        for (t, target) in objects.iter().enumerate() {
            for (s, source) in objects.iter().enumerate() {
                for m in OrdinalMap::all(source.dim(), target.dim()) {
                    if &x.act(target, &m).expect("dimensions agree") == source {
                        morphisms.push(SimplexMorphism {
                            source: s,
                            target: t,
                            map: m,
                        });
                    }
                }
            }
        }
        Self { objects, morphisms }
    }

    pub fn find(&self, source: usize, target: usize, map: &OrdinalMap) -> Option<usize> {
        self.morphisms
            .iter()
            .position(|m| m.source == source && m.target == target && &m.map == map)
    }

    /// Composite of `first: a → b` and `second: b → c`.
    pub fn compose(&self, first: usize, second: usize) -> Option<usize> {
        let (f, g) = (&self.morphisms[first], &self.morphisms[second]);
        if f.target != g.source {
            return None;
        }
        let map = g.map.compose(&f.map).ok()?;
        self.find(f.source, g.target, &map)
    }

    /// `Simp(X)`: nondegenerate objects and monomorphisms only.
    pub fn nondegenerate_mono(&self) -> SimplexCategory {
        let keep: Vec<usize> = (0..self.objects.len())
            .filter(|&i| !self.objects[i].is_degenerate())
            .collect();
        let renumber = |i: usize| keep.iter().position(|&k| k == i);
        let morphisms = self
            .morphisms
            .iter()
            .filter(|m| m.map.is_mono())
            .filter_map(|m| {
                Some(SimplexMorphism {
                    source: renumber(m.source)?,
                    target: renumber(m.target)?,
                    map: m.map.clone(),
                })
            })
            .collect();
        SimplexCategory {
            objects: keep.iter().map(|&i| self.objects[i].clone()).collect(),
            morphisms,
        }
    }

    pub fn non_identity_count(&self) -> usize {
        self.morphisms
            .iter()
            .filter(|m| !(m.source == m.target && m.map.is_identity()))
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::standard_simplex;

    #[test]
    fn simplices_of_interval() {
        let c = SimplexCategory::new(&standard_simplex(1), 1);
        assert_eq!(c.objects.len(), 5);
        let simp = c.nondegenerate_mono();
        assert_eq!(simp.objects.len(), 3);
        assert_eq!(simp.non_identity_count(), 2);
    }

    #[test]
    fn point_is_terminal_category() {
        let simp = SimplexCategory::new(&standard_simplex(0), 0).nondegenerate_mono();
        assert_eq!(simp.objects.len(), 1);
        assert_eq!(simp.morphisms.len(), 1);
    }

    #[test]
    fn composition_closed_with_identities() {
        let x = standard_simplex(2);
        for c in [
            SimplexCategory::new(&x, 2),
            SimplexCategory::new(&x, 2).nondegenerate_mono(),
        ] {
            for o in 0..c.objects.len() {
                let id = OrdinalMap::identity(c.objects[o].dim());
                assert!(c.find(o, o, &id).is_some());
            }
            for f in 0..c.morphisms.len() {
                for g in 0..c.morphisms.len() {
                    if c.morphisms[f].target == c.morphisms[g].source {
                        assert!(c.compose(f, g).is_some());
                    }
                }
            }
        }
    }
}
