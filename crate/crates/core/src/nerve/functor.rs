use smallvec::SmallVec;

use super::simplex::{nerve_violation, NerveSimplex};
use super::wedge::SubsetTerms;
use crate::ainf::{AInfCategory, StrictFunctor};
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::simplicial::subset_id;

/// Components `F^s` of an A∞-functor, as seen by the nerve.
pub trait FunctorComponents {
    fn map_object(&self, x: usize) -> usize;
    /// `F^s(args)` for `args[i] ∈ hom(chain[i], chain[i+1])`.
    fn component(&self, chain: &[usize], args: &[&Gf2Vector]) -> Gf2Vector;
}

/// A strict functor paired with its target, so that higher components can
/// be reported as zero vectors of the right length.
pub struct Strict<'a> {
    pub functor: &'a StrictFunctor,
    pub target: &'a AInfCategory,
}

impl FunctorComponents for Strict<'_> {
    fn map_object(&self, x: usize) -> usize {
        self.functor.map_object(x)
    }

    fn component(&self, chain: &[usize], args: &[&Gf2Vector]) -> Gf2Vector {
        if args.len() == 1 {
            self.functor.apply(chain[0], chain[1], args[0])
        } else {
            let (x, y) = (self.map_object(chain[0]), self.map_object(chain[args.len()]));
            Gf2Vector::zero(self.target.hom_dim(x, y))
        }
    }
}

/// `f_j ↦ Σ F^s(f_{j₁}, …, f_{j_s})` over all decompositions of `j`,
/// including the one with a single block. The image is checked against the
/// nerve equation in `target`.
pub fn nerve_of_functor(f: &dyn FunctorComponents, target: &AInfCategory, c: &NerveSimplex) -> Result<NerveSimplex> {
    let vertices: Vec<usize> = c.vertices().iter().map(|&x| f.map_object(x)).collect();
    let mut out = NerveSimplex::zero(target, vertices);
    for mask in super::wedge::ordered_subsets(c.dim()) {
        let t = SubsetTerms::new(mask, true);
        let mut v = Gf2Vector::zero(target.hom_dim(out.vertices()[t.first], out.vertices()[t.last]));
        for (blocks, chain) in &t.wedges {
            if blocks.iter().any(|&b| c.get_mask(b).is_zero()) {
                continue;
            }
            let objs: SmallVec<[usize; 8]> = chain.iter().map(|&p| c.vertices()[p]).collect();
            let args: SmallVec<[&Gf2Vector; 8]> = blocks.iter().map(|&b| c.get_mask(b)).collect();
            v.xor_in(&f.component(&objs, &args));
        }
        out.set_mask(mask, v)?;
    }
    if let Some(j) = nerve_violation(target, &out) {
        return Err(Error::Invalid(format!(
            "image is not a nerve simplex: equation fails at {}",
            subset_id(&j)
        )));
    }
    Ok(out)
}

/// Shorthand for strict functors.
pub fn nerve_of_strict_functor(f: &StrictFunctor, target: &AInfCategory, c: &NerveSimplex) -> Result<NerveSimplex> {
    nerve_of_functor(&Strict { functor: f, target }, target, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::catalog;
    use crate::nerve::enumerate::{enumerate_simplices, Constraints};

    #[test]
    fn identity_acts_trivially() {
        let cat = catalog::linear_mu3();
        let id = StrictFunctor::identity(&cat);
        let c = Constraints {
            vertices: Some(vec![0, 1, 2, 3]),
            ..Default::default()
        };
        for s in enumerate_simplices(&cat, 3, &c) {
            assert_eq!(nerve_of_strict_functor(&id, &cat, &s).unwrap(), s);
        }
    }
}
