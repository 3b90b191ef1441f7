use serde::{Deserialize, Serialize};

use super::category::{AInfCategory, BasisId};
use crate::error::Result;
use crate::gf2::Gf2Vector;

/// One coefficient of one `μ` value: coordinate `coefficient` of
/// `μ^d(inputs)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MutationSite {
    pub inputs: Vec<BasisId>,
    pub coefficient: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MutationJson {
    pub inputs: Vec<String>,
    pub coefficient: String,
}

/// Every coefficient of every `μ^d`, `1 ≤ d ≤ max_arity`, on composable
/// basis tuples, in a fixed order.
pub fn mutation_sites(cat: &AInfCategory, max_arity: usize) -> Vec<MutationSite> {
    let mut out = Vec::new();
    for d in 1..=max_arity {
        for (chain, inputs) in cat.composable_tuples(d) {
            for coefficient in 0..cat.hom_dim(chain[0], chain[d]) {
                out.push(MutationSite {
                    inputs: inputs.clone(),
                    coefficient,
                });
            }
        }
    }
    out
}

impl MutationSite {
    /// `cat` with this coefficient flipped.
    pub fn apply(&self, cat: &AInfCategory) -> Result<AInfCategory> {
        let chain = cat.chain_of(&self.inputs).expect("sites are composable");
        let dim = cat.hom_dim(chain[0], *chain.last().unwrap());
        let mut value = cat
            .mu_basis(&self.inputs)
            .cloned()
            .unwrap_or_else(|| Gf2Vector::zero(dim));
        value.flip(self.coefficient);
        cat.with_mu_value(&self.inputs, value)
    }

    pub fn to_json(&self, cat: &AInfCategory) -> MutationJson {
        let chain = cat.chain_of(&self.inputs).expect("sites are composable");
        let (x, y) = (chain[0], *chain.last().unwrap());
        MutationJson {
            inputs: self.inputs.iter().map(|&b| cat.label(b).to_string()).collect(),
            coefficient: cat.label(cat.hom_basis(x, y)[self.coefficient]).to_string(),
        }
    }
}
