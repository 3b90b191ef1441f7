use serde::{Deserialize, Serialize};

/// A decomposition of `[n]` into `s ≥ 2` consecutive blocks, each of size at
/// least two, adjacent blocks sharing one endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedgeDecomposition {
    pub n: usize,
    /// Interior cut points `0 < a₁ < … < a_{s−1} < n`.
    pub cuts: Vec<usize>,
}

impl WedgeDecomposition {
    pub fn length(&self) -> usize {
        self.cuts.len() + 1
    }

    /// The blocks `[0, a₁], [a₁, a₂], …, [a_{s−1}, n]` as `(start, end)`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut points = vec![0];
        points.extend(&self.cuts);
        points.push(self.n);
        points.windows(2).map(|w| (w[0], w[1])).collect()
    }
}

/// All wedge decompositions of `[n]`, ordered by cut bitmask.
pub fn wedge_decompositions(n: usize) -> Vec<WedgeDecomposition> {
    if n < 2 {
        return Vec::new();
    }
    (1u64..1 << (n - 1))
        .map(|bits| WedgeDecomposition {
            n,
            cuts: (1..n).filter(|&i| bits >> (i - 1) & 1 == 1).collect(),
        })
        .collect()
}

/// Positions of the set bits of a subset mask, ascending.
pub(crate) fn elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask >> i & 1 == 1).collect()
}

pub(crate) fn mask_of(elements: &[usize]) -> u32 {
    elements.iter().fold(0, |m, &i| m | 1 << i)
}

/// Structure of the equation at one subset `j`: its endpoints, the inner
/// deletions `j − {i}` and the wedge decompositions re-indexed through `j`.
#[derive(Clone, Debug)]
pub(crate) struct SubsetTerms {
    pub mask: u32,
    pub first: usize,
    pub last: usize,
    pub deletions: Vec<u32>,
    /// `(block masks, chain of vertex positions)` per decomposition.
    pub wedges: Vec<(Vec<u32>, Vec<usize>)>,
}

impl SubsetTerms {
    pub fn new(mask: u32, include_trivial: bool) -> Self {
        let p = elements(mask);
        let m = p.len() - 1;
        let deletions = p[1..m].iter().map(|&i| mask & !(1 << i)).collect();
        let interior = m.saturating_sub(1);
        let start = if include_trivial { 0 } else { 1 };
        let wedges = (start..1u64 << interior)
            .map(|bits| {
                let mut cuts = vec![0];
                cuts.extend((1..m).filter(|&i| bits >> (i - 1) & 1 == 1));
                cuts.push(m);
                let blocks = cuts.windows(2).map(|w| mask_of(&p[w[0]..=w[1]])).collect();
                let chain = cuts.iter().map(|&c| p[c]).collect();
                (blocks, chain)
            })
            .collect();
        Self {
            mask,
            first: p[0],
            last: p[m],
            deletions,
            wedges,
        }
    }
}

/// All subsets of `[n]` of size at least two, ordered by size then mask.
pub(crate) fn ordered_subsets(n: usize) -> Vec<u32> {
    let mut v: Vec<u32> = (0u32..1 << (n + 1)).filter(|m| m.count_ones() >= 2).collect();
    v.sort_by_key(|m| (m.count_ones(), *m));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert!(wedge_decompositions(1).is_empty());
        assert_eq!(
            wedge_decompositions(2),
            vec![WedgeDecomposition { n: 2, cuts: vec![1] }]
        );
        assert_eq!(wedge_decompositions(3).len(), 3);
        for n in 1..8 {
            assert_eq!(wedge_decompositions(n).len(), (1 << (n - 1)) - 1);
        }
    }

    #[test]
    fn blocks_cover_and_share_endpoints() {
        for d in wedge_decompositions(5) {
            let b = d.blocks();
            assert_eq!(b[0].0, 0);
            assert_eq!(b.last().unwrap().1, 5);
            for w in b.windows(2) {
                assert_eq!(w[0].1, w[1].0);
            }
            assert!(b.iter().all(|(s, e)| e > s));
        }
    }

    #[test]
    fn terms_reindex_through_subset() {
        let t = SubsetTerms::new(mask_of(&[0, 2, 3]), false);
        assert_eq!(t.deletions, vec![mask_of(&[0, 3])]);
        assert_eq!(
            t.wedges,
            vec![(vec![mask_of(&[0, 2]), mask_of(&[2, 3])], vec![0, 2, 3])]
        );
        let with_trivial = SubsetTerms::new(mask_of(&[0, 2, 3]), true);
        assert_eq!(with_trivial.wedges.len(), 2);
    }
}
