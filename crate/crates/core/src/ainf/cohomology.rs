use super::category::AInfCategory;
use crate::error::{Error, Result};
use crate::gf2::{complement_in, Gf2Matrix, Gf2Vector, Reducer};

/// `H(hom(x, y))` with chosen cocycle representatives.
#[derive(Clone, Debug)]
pub struct HomCohomology {
    ambient: usize,
    differential: Gf2Matrix,
    boundaries: Vec<Gf2Vector>,
    representatives: Vec<Gf2Vector>,
    reducer: Reducer,
}

impl HomCohomology {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[Gf2Vector] {
        &self.representatives
    }

    pub fn is_cocycle(&self, v: &Gf2Vector) -> bool {
        self.differential.mul_vec(v).map(|w| w.is_zero()).unwrap_or(false)
    }

    pub fn is_coboundary(&self, v: &Gf2Vector) -> bool {
        v.len() == self.ambient
            && self
                .reducer
                .coords(v)
                .is_some_and(|c| c.slice(self.boundaries.len(), self.dim()).is_zero())
    }

    /// Class of a cocycle in the representative basis, `None` if not closed.
    pub fn class_of(&self, v: &Gf2Vector) -> Option<Gf2Vector> {
        if v.len() != self.ambient || !self.is_cocycle(v) {
            return None;
        }
        self.reducer.quotient_coords(v, self.boundaries.len())
    }

    /// A cocycle representing the class with coordinates `c`.
    pub fn lift(&self, c: &Gf2Vector) -> Gf2Vector {
        let mut out = Gf2Vector::zero(self.ambient);
        for i in c.ones() {
            out.xor_in(&self.representatives[i]);
        }
        out
    }
}

/// The ordinary category `H(A)` induced by `μ²` on cohomology.
#[derive(Clone, Debug)]
pub struct CohomologyCategory {
    objects: Vec<String>,
    hom: Vec<Vec<HomCohomology>>,
    // compose[x][y][z][i * dim(y,z) + j] = [r_i] · [r_j]
    compose: Vec<Vec<Vec<Vec<Gf2Vector>>>>,
    units: Vec<Gf2Vector>,
}

/// Computes the cohomology category, failing if some `μ¹` does not square to
/// zero.
pub fn cohomology(cat: &AInfCategory) -> Result<CohomologyCategory> {
    let n = cat.object_count();
    let mut hom = Vec::with_capacity(n);
    for x in 0..n {
        let mut row = Vec::with_capacity(n);
        for y in 0..n {
            let dim = cat.hom_dim(x, y);
            let d = cat.differential(x, y);
            if d.mul(&d)?.rank() != 0 {
                return Err(Error::DifferentialNotSquareZero {
                    from: cat.object_name(x).to_string(),
                    to: cat.object_name(y).to_string(),
                });
            }
            let boundaries = d.image();
            let cycles = d.kernel();
            let representatives = complement_in(dim, &boundaries, &cycles)?;
            let mut all = boundaries.clone();
            all.extend(representatives.iter().cloned());
            let reducer = Reducer::new(dim, &all)?;
            row.push(HomCohomology {
                ambient: dim,
                differential: d,
                boundaries,
                representatives,
                reducer,
            });
        }
        hom.push(row);
    }
    let mut compose = vec![vec![vec![Vec::new(); n]; n]; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut table = Vec::new();
                for a in &hom[x][y].representatives {
                    for b in &hom[y][z].representatives {
                        let c = cat.mu(&[x, y, z], &[a, b]);
                        let class = hom[x][z].class_of(&c).ok_or_else(|| {
                            Error::Invalid(format!(
                                "product of cocycles in hom({}, {}) is not closed",
                                cat.object_name(x),
                                cat.object_name(z)
                            ))
                        })?;
                        table.push(class);
                    }
                }
                compose[x][y][z] = table;
            }
        }
    }
    let units = (0..n)
        .map(|x| {
            hom[x][x]
                .class_of(&cat.unit(x))
                .ok_or_else(|| Error::Invalid(format!("unit of `{}` is not closed", cat.object_name(x))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyCategory {
        objects: cat.objects().to_vec(),
        hom,
        compose,
        units,
    })
}

impl CohomologyCategory {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn hom(&self, x: usize, y: usize) -> &HomCohomology {
        &self.hom[x][y]
    }

    pub fn hom_dim(&self, x: usize, y: usize) -> usize {
        self.hom[x][y].dim()
    }

    pub fn unit(&self, x: usize) -> &Gf2Vector {
        &self.units[x]
    }

    /// `[a] · [b]` in diagrammatic order, for classes `a ∈ H(x,y)`, `b ∈ H(y,z)`.
    pub fn compose(&self, x: usize, y: usize, z: usize, a: &Gf2Vector, b: &Gf2Vector) -> Gf2Vector {
        let dz = self.hom_dim(y, z);
        let table = &self.compose[x][y][z];
        let mut out = Gf2Vector::zero(self.hom_dim(x, z));
        for i in a.ones() {
            for j in b.ones() {
                out.xor_in(&table[i * dz + j]);
            }
        }
        out
    }

    /// A two-sided inverse of the class `a ∈ H(x, y)`, if one exists.
    pub fn inverse(&self, x: usize, y: usize, a: &Gf2Vector) -> Option<Gf2Vector> {
        Gf2Vector::all(self.hom_dim(y, x))
            .find(|b| self.compose(x, y, x, a, b) == self.units[x] && self.compose(y, x, y, b, a) == self.units[y])
    }

    /// Some isomorphism class `x → y`, if the objects are isomorphic.
    pub fn isomorphism(&self, x: usize, y: usize) -> Option<Gf2Vector> {
        Gf2Vector::all(self.hom_dim(x, y)).find(|a| self.inverse(x, y, a).is_some())
    }

    pub fn is_isomorphic(&self, x: usize, y: usize) -> bool {
        x == y || self.isomorphism(x, y).is_some()
    }

    /// Checks associativity and unitality of the composition table.
    pub fn check_category_laws(&self) -> Result<()> {
        let n = self.object_count();
        for x in 0..n {
            for y in 0..n {
                for a in Gf2Vector::all(self.hom_dim(x, y)) {
                    if self.compose(x, x, y, &self.units[x], &a) != a || self.compose(x, y, y, &a, &self.units[y]) != a
                    {
                        return Err(Error::Invalid(format!(
                            "unit law fails in H({}, {})",
                            self.objects[x], self.objects[y]
                        )));
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        for i in 0..self.hom_dim(x, y) {
                            for j in 0..self.hom_dim(y, z) {
                                for k in 0..self.hom_dim(z, w) {
                                    let a = Gf2Vector::unit(self.hom_dim(x, y), i);
                                    let b = Gf2Vector::unit(self.hom_dim(y, z), j);
                                    let c = Gf2Vector::unit(self.hom_dim(z, w), k);
                                    let l = self.compose(x, z, w, &self.compose(x, y, z, &a, &b), &c);
                                    let r = self.compose(x, y, w, &a, &self.compose(y, z, w, &b, &c));
                                    if l != r {
                                        return Err(Error::Invalid(format!(
                                            "composition is not associative on {} → {} → {} → {}",
                                            self.objects[x], self.objects[y], self.objects[z], self.objects[w]
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::catalog;
    use crate::ainf::category::CategoryJson;

    #[test]
    fn trivial_differential_keeps_homs() {
        let c = catalog::poset(2);
        let h = cohomology(&c).unwrap();
        assert_eq!(h.hom_dim(0, 2), 1);
        assert_eq!(h.hom_dim(2, 0), 0);
        h.check_category_laws().unwrap();
        let a = Gf2Vector::unit(1, 0);
        assert_eq!(h.compose(0, 1, 2, &a, &a), a);
    }

    #[test]
    fn acyclic_two_term_complex() {
        let c = catalog::acyclic_pair();
        let h = cohomology(&c).unwrap();
        assert_eq!(h.hom_dim(0, 1), 0);
        assert_eq!(h.hom_dim(0, 0), 1);
    }

    #[test]
    fn non_square_zero_rejected() {
        let mut j = CategoryJson::default();
        j.object("X")
            .hom("X", "X", &["e", "a", "b"])
            .unit("X", "e")
            .mu(&["a"], &["b"])
            .mu(&["b"], &["a"])
            .with_unit_laws();
        let c = j.build().unwrap();
        assert!(matches!(cohomology(&c), Err(Error::DifferentialNotSquareZero { .. })));
    }

    #[test]
    fn iso_pair_objects_are_isomorphic() {
        let h = cohomology(&catalog::iso_pair()).unwrap();
        assert!(h.is_isomorphic(0, 1));
        let p = cohomology(&catalog::poset(1)).unwrap();
        assert!(!p.is_isomorphic(0, 1));
    }

    #[test]
    fn linear_mu3_cohomology() {
        let h = cohomology(&catalog::linear_mu3()).unwrap();
        assert_eq!(h.hom_dim(0, 3), 0);
        assert_eq!(h.hom_dim(0, 1), 1);
        h.check_category_laws().unwrap();
    }
}
