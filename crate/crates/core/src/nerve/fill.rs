use super::simplex::{nerve_violation, residual_mask, rhs, NerveSimplex};
use super::wedge::{elements, ordered_subsets, SubsetTerms};
use crate::ainf::AInfCategory;
use crate::error::{Error, Result};
use crate::gf2::Gf2Vector;
use crate::simplicial::subset_id;

/// Masks of the two subsets an inner horn `Λⁿ_k` leaves undetermined:
/// `[n]` and `[n] − {k}`.
pub fn horn_missing(n: usize, k: usize) -> [u32; 2] {
    let top = (1u32 << (n + 1)) - 1;
    [top, top & !(1 << k)]
}

/// Fills an inner horn: `f_{[n]} = 0` and `f_{[n]−{k}}` is the sum of the
/// other inner deletions and all wedge products over `[n]`. Entries of
/// `horn` at the two missing subsets are ignored.
pub fn fill_inner_horn(cat: &AInfCategory, horn: &NerveSimplex, k: usize) -> Result<NerveSimplex> {
    let n = horn.dim();
    if k == 0 || k >= n {
        return Err(Error::OuterHorn { n, k });
    }
    let [top, missing] = horn_missing(n, k);
    for m in ordered_subsets(n) {
        if m != top && m != missing && !residual_mask(cat, horn, m).is_zero() {
            return Err(Error::Invalid(format!(
                "horn data violates the nerve equation at {}",
                subset_id(&elements(m))
            )));
        }
    }
    let mut out = horn.clone();
    let x = horn.vertices()[0];
    let y = horn.vertices()[n];
    out.set_mask(top, Gf2Vector::zero(cat.hom_dim(x, y)))?;
    out.set_mask(missing, Gf2Vector::zero(cat.hom_dim(x, y)))?;
    // the missing deletion enters the top equation once, so the remaining
    // terms are exactly its value
    let terms = SubsetTerms::new(top, false);
    let value = rhs(cat, out.vertices(), out.data(), &terms);
    out.set_mask(missing, value)?;
    if let Some(j) = nerve_violation(cat, &out) {
        return Err(Error::Invalid(format!(
            "filler fails the nerve equation at {}",
            subset_id(&j)
        )));
    }
    Ok(out)
}
