use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::homotopy::{face_json, find_horn, tables, SimplexTable};
use crate::simplicial::{SimplicialMap, SimplicialSet};

use super::LiftingWitness;

/// Simplex tables of both sides of `p : A → B` and `p` on simplex ids.
pub(crate) struct Lifting<'a> {
    pub domain: &'a SimplicialSet,
    pub codomain: &'a SimplicialSet,
    pub a: Vec<SimplexTable>,
    pub b: Vec<SimplexTable>,
    pub p: Vec<Vec<usize>>,
    // edge01[d][s]: the edge of a d-simplex on its first two vertices
    edge01: Vec<Vec<usize>>,
    problems: RefCell<HashMap<(usize, usize), Rc<Problems>>>,
}

/// For a horn shape: the filled (horn, base simplex) pairs and the base
/// simplices over each horn image.
struct Problems {
    filled: HashSet<(Vec<usize>, usize)>,
    over: HashMap<Vec<usize>, Vec<usize>>,
}

impl<'a> Lifting<'a> {
    pub fn new(domain: &'a SimplicialSet, codomain: &'a SimplicialSet, p: &SimplicialMap, cap: usize) -> Result<Self> {
        if cap > domain.cap() || cap > codomain.cap() {
            return Err(Error::CapExceeded {
                dim: cap,
                cap: domain.cap().min(codomain.cap()),
            });
        }
        p.check(domain, codomain)?;
        let a = tables(domain, cap);
        let b = tables(codomain, cap);
        let p_ids = (0..=cap)
            .map(|d| {
                a[d].all
                    .iter()
                    .map(|s| b[d].index[&p.apply(codomain, s).expect("checked map")])
                    .collect()
            })
            .collect();
        let mut edge01: Vec<Vec<usize>> = vec![Vec::new(), (0..a[1].all.len()).collect()];
        for d in 2..=cap {
            let row = a[d].faces.iter().map(|f| edge01[d - 1][f[d]]).collect();
            edge01.push(row);
        }
        Ok(Self {
            domain,
            codomain,
            a,
            b,
            p: p_ids,
            edge01,
            problems: RefCell::new(HashMap::new()),
        })
    }

    fn problems(&self, n: usize, k: usize) -> Rc<Problems> {
        let mut cache = self.problems.borrow_mut();
        cache
            .entry((n, k))
            .or_insert_with(|| {
                let positions: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
                let filled = self.a[n]
                    .faces
                    .iter()
                    .enumerate()
                    .map(|(x, f)| (positions.iter().map(|&i| f[i]).collect(), self.p[n][x]))
                    .collect();
                let mut over: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
                for (beta, f) in self.b[n].faces.iter().enumerate() {
                    over.entry(positions.iter().map(|&i| f[i]).collect())
                        .or_default()
                        .push(beta);
                }
                Rc::new(Problems { filled, over })
            })
            .clone()
    }

    /// The first lifting problem `Λⁿ_k → A` over an `n`-simplex of `B` without
    /// a solution, among horns accepted by `allow`.
    fn unliftable(&self, n: usize, k: usize, allow: &dyn Fn(usize, usize) -> bool) -> Option<LiftingWitness> {
        let problems = self.problems(n, k);
        let (filled, over) = (&problems.filled, &problems.over);
        let mut failed_over = None;
        let horn = find_horn(&self.a, n, k, allow, &mut |h| {
            let image: Vec<usize> = h.iter().map(|&s| self.p[n - 1][s]).collect();
            let Some(betas) = over.get(&image) else {
                return false;
            };
            let key = h.to_vec();
            match betas.iter().find(|&&beta| !filled.contains(&(key.clone(), beta))) {
                Some(&beta) => {
                    failed_over = Some(beta);
                    true
                }
                None => false,
            }
        })?;
        let beta = failed_over.expect("set together with the horn");
        Some(LiftingWitness {
            n,
            k,
            faces: horn
                .iter()
                .map(|&s| face_json(self.domain, &self.a[n - 1].all[s]))
                .collect(),
            base: face_json(self.codomain, &self.b[n].all[beta]),
        })
    }

    /// Inner horn lifting up to `cap`.
    pub fn inner_witness(&self, cap: usize) -> Option<LiftingWitness> {
        (2..=cap).find_map(|n| (1..n).find_map(|k| self.unliftable(n, k, &|_, _| true)))
    }

    /// `Λⁿ_0` lifting with initial edge `e` (a domain edge id) up to `cap`.
    pub fn cocartesian_witness(&self, e: usize, cap: usize) -> Option<LiftingWitness> {
        (2..=cap).find_map(|n| {
            // faces d_j with j ≥ 2 contain the vertices 0 and 1
            self.unliftable(n, 0, &|j, s| j < 2 || self.edge01[n - 1][s] == e)
        })
    }
}
