use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A non-strictly increasing map `[n] → [m]` between finite ordinals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrdinalMap {
    values: Vec<usize>,
    target_dim: usize,
}

impl fmt::Debug for OrdinalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->[{}]", self.values, self.target_dim)
    }
}

impl OrdinalMap {
    pub fn new(values: Vec<usize>, target_dim: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("ordinal maps need a nonempty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!("{values:?} is not monotone")));
        }
        if let Some(&bad) = values.iter().find(|&&v| v > target_dim) {
            return Err(Error::OutOfRange {
                index: bad,
                bound: target_dim,
            });
        }
        Ok(Self { values, target_dim })
    }

    pub(crate) fn new_unchecked(values: Vec<usize>, target_dim: usize) -> Self {
        debug_assert!(Self::new(values.clone(), target_dim).is_ok());
        Self { values, target_dim }
    }

    pub fn identity(n: usize) -> Self {
        Self::new_unchecked((0..=n).collect(), n)
    }

    /// The coface `δ_i : [n-1] → [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        Self::new_unchecked((0..=n).filter(|&v| v != i).collect(), n)
    }

    /// The codegeneracy `σ_i : [n+1] → [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        Self::new_unchecked((0..=n + 1).map(|v| if v <= i { v } else { v - 1 }).collect(), n)
    }

    /// The constant map `[n] → [m]` with value `v`.
    pub fn constant(n: usize, m: usize, v: usize) -> Self {
        assert!(v <= m);
        Self::new_unchecked(vec![v; n + 1], m)
    }

    /// The mono `[k] → [n]` with the given strictly increasing image.
    pub fn from_image(image: &[usize], n: usize) -> Result<Self> {
        if image.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Invalid(format!("{image:?} is not strictly increasing")));
        }
        Self::new(image.to_vec(), n)
    }

    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim && self.is_mono()
    }

    pub fn is_mono(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_epi(&self) -> bool {
        self.values[0] == 0
            && *self.values.last().unwrap() == self.target_dim
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.target_dim != self.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim(),
                found: other.target_dim,
            });
        }
        Ok(Self::new_unchecked(
            other.values.iter().map(|&v| self.values[v]).collect(),
            self.target_dim,
        ))
    }

    /// Factors `self = mono ∘ epi`.
    pub fn epi_mono(&self) -> (Self, Self) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let epi = self.values.iter().map(|v| image.binary_search(v).unwrap()).collect();
        let r = image.len() - 1;
        (Self::new_unchecked(epi, r), Self::new_unchecked(image, self.target_dim))
    }

    /// Positions `i` with `self(i) == self(i+1)`.
    pub fn repeats(&self) -> Vec<usize> {
        (0..self.source_dim())
            .filter(|&i| self.values[i] == self.values[i + 1])
            .collect()
    }

    /// The surjection `[n] → [n - |r|]` collapsing each `i ∈ r` onto `i+1`.
    pub fn surjection_with_repeats(n: usize, repeats: &[usize]) -> Self {
        let mut values = Vec::with_capacity(n + 1);
        let mut cur = 0;
        values.push(0);
        for i in 0..n {
            if !repeats.contains(&i) {
                cur += 1;
            }
            values.push(cur);
        }
        Self::new_unchecked(values, cur)
    }

    /// A section of a surjection: the mono picking the first preimage of each value.
    pub fn first_section(&self) -> Self {
        debug_assert!(self.is_epi());
        let mut image = Vec::with_capacity(self.target_dim + 1);
        for (i, &v) in self.values.iter().enumerate() {
            if image.len() == v {
                image.push(i);
            }
        }
        Self::new_unchecked(image, self.source_dim())
    }

    /// Normal-form degeneracy word `s_{i₁} ⋯ s_{i_k}` with `i₁ > ⋯ > i_k` for
    /// a surjection.
    pub fn degeneracy_word(&self) -> Vec<usize> {
        let mut w = self.repeats();
        w.reverse();
        w
    }

    /// Inverse of [`OrdinalMap::degeneracy_word`]: the surjection out of `[n]`
    /// presented by a word of degeneracies, in any order.
    pub fn from_degeneracy_word(n: usize, word: &[usize]) -> Result<Self> {
        // Apply s_{w[0]} ∘ s_{w[1]} ∘ ⋯ : normalize via the simplicial
        // identity s_i s_j = s_{j+1} s_i (i ≤ j) by composing codegeneracies.
        let k = word.len();
        if k > n {
            return Err(Error::Invalid(format!(
                "degeneracy word {word:?} too long for dimension {n}"
            )));
        }
        let mut map = Self::identity(n - k);
        // The innermost operator is the last letter.
        for (step, &i) in word.iter().rev().enumerate() {
            let dim = n - k + step;
            if i > dim {
                return Err(Error::OutOfRange { index: i, bound: dim });
            }
            map = map.compose(&Self::codegeneracy(dim, i))?;
        }
        Ok(map)
    }

    /// All monotone maps `[n] → [m]`.
    pub fn all(n: usize, m: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; n + 1];
        fn rec(pos: usize, lo: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<OrdinalMap>) {
            if pos == cur.len() {
                out.push(OrdinalMap::new_unchecked(cur.clone(), m));
                return;
            }
            for v in lo..=m {
                cur[pos] = v;
                rec(pos + 1, v, m, cur, out);
            }
        }
        rec(0, 0, m, &mut cur, &mut out);
        out
    }

    /// All surjections `[n] ↠ [m]`.
    pub fn surjections(n: usize, m: usize) -> Vec<Self> {
        if m > n {
            return Vec::new();
        }
        Self::all(n, m).into_iter().filter(|f| f.is_epi()).collect()
    }

    /// All monos `[k] ↪ [n]`.
    pub fn monos(k: usize, n: usize) -> Vec<Self> {
        Self::all(k, n).into_iter().filter(|f| f.is_mono()).collect()
    }
}
