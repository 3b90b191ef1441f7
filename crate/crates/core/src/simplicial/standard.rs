use super::ordinal::OrdinalMap;
use super::set::{SimplexRef, SimplicialSet};
use crate::error::{Error, Result};

/// Id of the face of a standard simplex spanned by `vertices`.
pub fn subset_id(vertices: &[usize]) -> String {
    vertices.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Sub-simplicial set of `Δⁿ` generated by the subsets accepted by `keep`,
/// truncated at `n`. `keep` must be closed under taking nonempty subsets.
fn from_subsets(n: usize, keep: impl Fn(&[usize]) -> bool) -> SimplicialSet {
    let mut x = SimplicialSet::new(n);
    for dim in 0..=n {
        for image in OrdinalMap::monos(dim, n) {
            let verts = image.values();
            if !keep(verts) {
                continue;
            }
            let faces = if dim == 0 {
                Vec::new()
            } else {
                (0..=dim)
                    .map(|i| {
                        let mut f = verts.to_vec();
                        f.remove(i);
                        let (_, idx) = x.lookup(&subset_id(&f)).expect("faces come first");
                        SimplexRef::nondegenerate(dim - 1, idx)
                    })
                    .collect()
            };
            x.add_cell(subset_id(verts), dim, faces).expect("fresh ids");
        }
    }
    x
}

/// The standard simplex `Δⁿ`; its cells are the nonempty subsets of `[n]`.
pub fn standard_simplex(n: usize) -> SimplicialSet {
    from_subsets(n, |_| true)
}

/// `∂Δⁿ`: every proper face.
pub fn boundary(n: usize) -> SimplicialSet {
    from_subsets(n, |v| v.len() <= n)
}

/// The horn `Λⁿ_k`: `∂Δⁿ` without the face opposite vertex `k`.
pub fn horn(n: usize, k: usize) -> SimplicialSet {
    assert!(k <= n, "horn index out of range");
    from_subsets(n, |v| v.len() <= n && !(v.len() == n && !v.contains(&k)))
}

/// Fallible form of [`horn`].
pub fn try_horn(n: usize, k: usize) -> Result<SimplicialSet> {
    if k > n {
        return Err(Error::OutOfRange { index: k, bound: n });
    }
    Ok(horn(n, k))
}
