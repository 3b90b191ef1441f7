use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::enumerate::{Constraints, Enumerator};
use super::simplex::{NerveSimplex, NerveSimplexJson};
use crate::ainf::AInfCategory;
use crate::error::Result;
use crate::simplicial::{build_from_model, OrdinalMap, SimplexRef, SimplicialSet, SimplicialSetJson};

/// The nerve of a category up to a dimension cap, with the nerve data of
/// every nondegenerate cell.
#[derive(Clone, Debug)]
pub struct NerveTruncation {
    pub set: SimplicialSet,
    cells: Vec<Vec<NerveSimplex>>,
    index: HashMap<NerveSimplex, (usize, usize)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NerveTruncationJson {
    pub set: SimplicialSetJson,
    pub simplices: std::collections::BTreeMap<String, NerveSimplexJson>,
}

impl NerveTruncation {
    pub fn cell(&self, dim: usize, idx: usize) -> &NerveSimplex {
        &self.cells[dim][idx]
    }

    /// The nerve data of any simplex of the set.
    pub fn simplex(&self, cat: &AInfCategory, s: &SimplexRef) -> NerveSimplex {
        self.cells[s.base_dim()][s.base].act(cat, &s.degeneracy)
    }

    /// The simplex of the set with the given nerve data, if it is within the cap.
    pub fn lookup(&self, cat: &AInfCategory, c: &NerveSimplex) -> Option<SimplexRef> {
        let (base, degeneracy) = c.normalize(cat);
        self.index.get(&base).map(|&(_, b)| SimplexRef { base: b, degeneracy })
    }

    pub fn to_json(&self, cat: &AInfCategory) -> NerveTruncationJson {
        let mut simplices = std::collections::BTreeMap::new();
        for (d, row) in self.cells.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                simplices.insert(self.set.cell(d, i).id.clone(), c.to_json(cat));
            }
        }
        NerveTruncationJson {
            set: self.set.to_json(),
            simplices,
        }
    }
}

/// Builds a simplicial set from explicitly listed nondegenerate nerve
/// simplices (closed under faces up to degeneracy).
pub fn nerve_from_cells(cat: &AInfCategory, cap: usize, cells: Vec<Vec<NerveSimplex>>) -> Result<NerveTruncation> {
    let named: Vec<Vec<(String, NerveSimplex)>> = cells
        .iter()
        .enumerate()
        .map(|(d, row)| {
            row.iter()
                .enumerate()
                .map(|(i, c)| (format!("{d}:{i}"), c.clone()))
                .collect()
        })
        .collect();
    let (set, index) = build_from_model(
        cap,
        named,
        |c: &NerveSimplex, i| c.act(cat, &OrdinalMap::coface(c.dim(), i)),
        |c: &NerveSimplex| c.normalize(cat),
    )?;
    Ok(NerveTruncation { set, cells, index })
}

/// The nerve `N(A)` truncated at `cap`.
pub fn nerve_truncation(cat: &AInfCategory, cap: usize) -> Result<NerveTruncation> {
    let mut cells = Vec::with_capacity(cap + 1);
    for d in 0..=cap {
        let e = Enumerator::new(cat, d);
        let row: Vec<NerveSimplex> = e
            .run(&Constraints::default())
            .into_iter()
            .filter(|c| c.degenerate_positions(cat).is_empty())
            .collect();
        cells.push(row);
    }
    nerve_from_cells(cat, cap, cells)
}
