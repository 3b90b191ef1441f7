use std::collections::{BTreeMap, HashMap};

use super::simplex::{mu1, rhs, NerveSimplex};
use super::wedge::{ordered_subsets, SubsetTerms};
use crate::ainf::AInfCategory;
use crate::gf2::{Gf2Vector, Reducer};

/// Restrictions on enumerated simplices.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Fixed vertex objects; all tuples if absent.
    pub vertices: Option<Vec<usize>>,
    /// Prescribed values `f_j`, keyed by subset mask.
    pub fixed: BTreeMap<u32, Gf2Vector>,
}

/// Solves `μ¹ x = r` on one hom space.
#[derive(Clone, Debug)]
struct HomSolver {
    image: Reducer,
    preimages: Vec<Gf2Vector>,
    kernel: Vec<Gf2Vector>,
    dim: usize,
}

impl HomSolver {
    fn new(cat: &AInfCategory, x: usize, y: usize) -> Self {
        let d = cat.differential(x, y);
        let dim = cat.hom_dim(x, y);
        let mut cols = Vec::new();
        let mut preimages = Vec::new();
        for i in 0..dim {
            let c = d.column(i);
            let r = Reducer::new(dim, &cols).expect("independent by construction");
            if !r.contains(&c) {
                cols.push(c);
                preimages.push(Gf2Vector::unit(dim, i));
            }
        }
        Self {
            image: Reducer::new(dim, &cols).expect("independent by construction"),
            preimages,
            kernel: d.kernel(),
            dim,
        }
    }

    fn particular(&self, r: &Gf2Vector) -> Option<Gf2Vector> {
        let c = self.image.coords(r)?;
        let mut x = Gf2Vector::zero(self.dim);
        for i in c.ones() {
            x.xor_in(&self.preimages[i]);
        }
        Some(x)
    }
}

/// Level-by-level solver for the nerve equations over a down-closed family
/// of subsets of `[n]`.
pub struct Enumerator<'a> {
    cat: &'a AInfCategory,
    n: usize,
    order: Vec<SubsetTerms>,
    solvers: HashMap<(usize, usize), HomSolver>,
}

impl<'a> Enumerator<'a> {
    /// All subsets of `[n]` of size at least two.
    pub fn new(cat: &'a AInfCategory, n: usize) -> Self {
        Self::with_family(cat, n, &ordered_subsets(n))
    }

    /// Only the listed subsets; the family must be closed under taking
    /// subsets of size at least two.
    pub fn with_family(cat: &'a AInfCategory, n: usize, family: &[u32]) -> Self {
        let mut family = family.to_vec();
        family.sort_by_key(|m| (m.count_ones(), *m));
        let order = family.into_iter().map(|m| SubsetTerms::new(m, false)).collect();
        let mut solvers = HashMap::new();
        for x in 0..cat.object_count() {
            for y in 0..cat.object_count() {
                solvers.insert((x, y), HomSolver::new(cat, x, y));
            }
        }
        Self { cat, n, order, solvers }
    }

    /// Every assignment on the family satisfying the nerve equation at each
    /// of its subsets; values outside the family are zero.
    pub fn run(&self, constraints: &Constraints) -> Vec<NerveSimplex> {
        let mut out = Vec::new();
        match &constraints.vertices {
            Some(v) => self.run_vertices(v, &constraints.fixed, &mut out),
            None => {
                let k = self.cat.object_count();
                let mut v = vec![0; self.n + 1];
                if k == 0 {
                    return out;
                }
                loop {
                    self.run_vertices(&v, &constraints.fixed, &mut out);
                    let mut i = self.n + 1;
                    loop {
                        if i == 0 {
                            return out;
                        }
                        i -= 1;
                        v[i] += 1;
                        if v[i] < k {
                            break;
                        }
                        v[i] = 0;
                    }
                }
            }
        }
        out
    }

    /// As [`Enumerator::run`] for one vertex tuple, appending to `out`.
    pub fn run_vertices(&self, vertices: &[usize], fixed: &BTreeMap<u32, Gf2Vector>, out: &mut Vec<NerveSimplex>) {
        let mut c = NerveSimplex::zero(self.cat, vertices.to_vec());
        self.visit(0, &mut c, fixed, &mut |s| out.push(s.clone()));
    }

    /// Calls `visit` on every solution for one vertex tuple without collecting.
    pub fn for_each(&self, vertices: &[usize], fixed: &BTreeMap<u32, Gf2Vector>, visit: &mut dyn FnMut(&NerveSimplex)) {
        let mut c = NerveSimplex::zero(self.cat, vertices.to_vec());
        self.visit(0, &mut c, fixed, visit);
    }

    fn visit(
        &self,
        level: usize,
        c: &mut NerveSimplex,
        fixed: &BTreeMap<u32, Gf2Vector>,
        emit: &mut dyn FnMut(&NerveSimplex),
    ) {
        let Some(t) = self.order.get(level) else {
            emit(c);
            return;
        };
        let (x, y) = (c.vertices()[t.first], c.vertices()[t.last]);
        let r = rhs(self.cat, c.vertices(), c.data(), t);
        if let Some(v) = fixed.get(&t.mask) {
            if v.len() == r.len() && mu1(self.cat, x, y, v) == r {
                c.set_mask(t.mask, v.clone()).expect("dimensions checked");
                self.visit(level + 1, c, fixed, emit);
            }
            return;
        }
        let solver = &self.solvers[&(x, y)];
        let Some(p) = solver.particular(&r) else { return };
        let k = solver.kernel.len();
        for bits in 0u64..1 << k {
            let mut v = p.clone();
            for i in 0..k {
                if bits >> i & 1 == 1 {
                    v.xor_in(&solver.kernel[i]);
                }
            }
            c.set_mask(t.mask, v).expect("dimensions agree");
            self.visit(level + 1, c, fixed, emit);
        }
        c.set_mask(t.mask, Gf2Vector::zero(solver.dim))
            .expect("dimensions agree");
    }
}

/// Every `n`-simplex of the nerve meeting the constraints, in a
/// deterministic order.
pub fn enumerate_simplices(cat: &AInfCategory, n: usize, constraints: &Constraints) -> Vec<NerveSimplex> {
    Enumerator::new(cat, n).run(constraints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::catalog;
    use crate::nerve::simplex::is_nerve_simplex;

    #[test]
    fn discrete_category_simplices() {
        // zero edges between distinct objects are nerve simplices too, and
        // with μ¹ = 0 the top component f_[n] is unconstrained
        let cat = catalog::discrete(2);
        for n in 1..4 {
            let all = enumerate_simplices(&cat, n, &Constraints::default());
            assert!(all.iter().any(|c| c.vertices()[0] != c.vertices()[n]));
            assert!(all.iter().all(|c| is_nerve_simplex(&cat, c)));
        }
        let units = catalog::discrete(1);
        let tri = enumerate_simplices(&units, 2, &Constraints::default());
        let all_units = tri
            .iter()
            .filter(|c| c.get(&[0, 1]) == &units.unit(0) && c.get(&[1, 2]) == &units.unit(0))
            .count();
        assert_eq!(all_units, 2);
    }

    #[test]
    fn acyclic_hom_triangles() {
        // fixed boundary: the residual at {0,1,2} is a boundary, ker μ¹ on
        // hom(X, Y) is one-dimensional, so two fillers
        let cat = catalog::acyclic_pair();
        let (x, y) = (0, 1);
        let mut fixed = BTreeMap::new();
        fixed.insert(0b011, cat.unit(x));
        fixed.insert(0b110, Gf2Vector::unit(2, 1));
        fixed.insert(0b101, Gf2Vector::zero(2));
        let c = Constraints {
            vertices: Some(vec![x, x, y]),
            fixed,
        };
        assert_eq!(enumerate_simplices(&cat, 2, &c).len(), 2);
        // f_02 = a is not closed: nothing
        let mut fixed = c.fixed.clone();
        fixed.insert(0b101, Gf2Vector::unit(2, 0));
        let c = Constraints { fixed, ..c };
        assert!(enumerate_simplices(&cat, 2, &c).is_empty());
    }
}
