use std::collections::HashMap;

use super::map::SimplicialMap;
use super::ordinal::OrdinalMap;
use super::set::{build_from_model, SimplexRef, SimplicialSet};
use crate::error::Result;

/// `A ×_B Δⁿ` for a map `p : A → B` and an `n`-simplex `ξ` of `B`, with its
/// two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub set: SimplicialSet,
    pub to_domain: SimplicialMap,
    pub to_simplex: SimplicialMap,
}

/// Builds the pullback of `p : domain → codomain` along the simplex `xi`,
/// truncated at `cap` (at most the domain's cap).
pub fn pullback_along_simplex(
    domain: &SimplicialSet,
    codomain: &SimplicialSet,
    p: &SimplicialMap,
    xi: &SimplexRef,
    cap: usize,
) -> Result<Pullback> {
    let n = xi.dim();
    let cap = cap.min(domain.cap());
    type Key = (SimplexRef, OrdinalMap);
    let mut nondegenerate: Vec<Vec<(String, Key)>> = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        let alphas = OrdinalMap::all(k, n);
        let mut images: HashMap<OrdinalMap, SimplexRef> = HashMap::new();
        for a in &alphas {
            images.insert(a.clone(), codomain.act(xi, a)?);
        }
        let mut row = Vec::new();
        for c in domain.simplices(k) {
            let pc = p.apply(codomain, &c)?;
            let c_rep = c.degeneracy.repeats();
            for a in &alphas {
                if images[a] != pc {
                    continue;
                }
                let a_rep = a.repeats();
                if c_rep.iter().any(|i| a_rep.contains(i)) {
                    continue;
                }
                let id = format!("({}|{:?}|{:?})", domain.id_of(&c), c.degeneracy.values(), a.values());
                row.push((id, (c.clone(), a.clone())));
            }
        }
        nondegenerate.push(row);
    }
    let face = |key: &Key, i: usize| -> Key {
        let (c, a) = key;
        let delta = OrdinalMap::coface(c.dim(), i);
        (
            domain.face(c, i).expect("positive dimension"),
            a.compose(&delta).expect("dimensions agree"),
        )
    };
    let normalize = |key: &Key| -> (Key, OrdinalMap) {
        let (c, a) = key;
        let a_rep = a.repeats();
        let common: Vec<usize> = c
            .degeneracy
            .repeats()
            .into_iter()
            .filter(|i| a_rep.contains(i))
            .collect();
        let rho = OrdinalMap::surjection_with_repeats(c.dim(), &common);
        let section = rho.first_section();
        (
            (
                domain.act(c, &section).expect("dimensions agree"),
                a.compose(&section).expect("dimensions agree"),
            ),
            rho,
        )
    };
    let (set, index) = build_from_model(cap, nondegenerate, face, normalize)?;
    let mut by_cell: Vec<Vec<Option<Key>>> = (0..=cap).map(|d| vec![None; set.count(d)]).collect();
    for (key, (d, i)) in index {
        by_cell[d][i] = Some(key);
    }
    let delta = super::standard::standard_simplex(n).with_cap(cap.max(n))?;
    let to_domain = SimplicialMap::from_fn(&set, |d, i| by_cell[d][i].as_ref().unwrap().0.clone());
    let to_simplex = SimplicialMap::from_fn(&set, |d, i| {
        let a = &by_cell[d][i].as_ref().unwrap().1;
        let (epi, mono) = a.epi_mono();
        let face = subset_id_of(mono.values());
        let (_, idx) = delta.lookup(&face).expect("faces of the simplex exist");
        SimplexRef {
            base: idx,
            degeneracy: epi,
        }
    });
    Ok(Pullback {
        set,
        to_domain,
        to_simplex,
    })
}

fn subset_id_of(v: &[usize]) -> String {
    super::standard::subset_id(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::standard_simplex;

    #[test]
    fn pullback_of_identity_along_top_simplex_is_simplex() {
        let d2 = standard_simplex(2);
        let id = SimplicialMap::identity(&d2);
        let top = SimplexRef::nondegenerate(2, 0);
        let pb = pullback_along_simplex(&d2, &d2, &id, &top, 2).unwrap();
        assert_eq!(pb.set.counts(), vec![3, 3, 1]);
        pb.set.validate().unwrap();
        let delta = standard_simplex(2);
        pb.to_simplex.check(&pb.set, &delta).unwrap();
        pb.to_domain.check(&pb.set, &d2).unwrap();
    }

    #[test]
    fn pullback_along_vertex_is_fiber() {
        let d1 = standard_simplex(1);
        let id = SimplicialMap::identity(&d1);
        let v = SimplexRef::nondegenerate(0, 1);
        let pb = pullback_along_simplex(&d1, &d1, &id, &v, 1).unwrap();
        assert_eq!(pb.set.counts(), vec![1, 0]);
    }
}
