//! Bit-packed vectors and matrices over the two-element field.
//!
//! Every hom space in this crate is a finite-dimensional vector space over
//! F₂ with a chosen basis, so all linear algebra reduces to XOR on packed
//! machine words. Elimination pivots on the leftmost column and, within a
//! column, on the lowest remaining row index; results are deterministic.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

fn tail_mask(len: usize) -> u64 {
    match len % WORD {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A vector over F₂ of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vector {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

impl Gf2Vector {
    pub fn zero(len: usize) -> Self {
        Self {
            len,
            words: SmallVec::from_elem(0, word_count(len)),
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector from the low `len` bits of `word`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= WORD, "from_word needs len <= 64");
        let mut v = Self::zero(len);
        if len > 0 {
            v.words[0] = word & tail_mask(len);
        }
        v
    }

    /// Vector with ones exactly at `indices`.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zero(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the nonzero coefficients, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// The packed word holding bits `0..64`; only meaningful for `len <= 64`.
    pub fn low_word(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        self.xor_in(other);
        Ok(())
    }

    /// XOR without the length check; callers guarantee equal lengths.
    pub(crate) fn xor_in(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a ^= *b;
        }
    }

    pub fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u32;
        for (a, b) in self.words.iter().zip(other.words.iter()) {
            acc ^= (a & b).count_ones();
        }
        acc & 1 == 1
    }

    /// Appends the bits of `other` after the bits of `self`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// Bits `start..start+len`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        assert!(start + len <= self.len);
        let mut out = Self::zero(len);
        for i in self.ones() {
            if i >= start && i < start + len {
                out.set(i - start, true);
            }
        }
        out
    }

    /// All 2^len vectors of this length, in counting order.
    pub fn all(len: usize) -> impl Iterator<Item = Self> {
        assert!(len < 32, "refusing to enumerate 2^{len} vectors");
        (0u64..(1u64 << len)).map(move |w| Self::from_word(len, w))
    }
}

impl fmt::Debug for Gf2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix over F₂.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    cols: usize,
    rows: Vec<Gf2Vector>,
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows.len(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}

/// Output of [`Gf2Matrix::solve_affine`] for a consistent system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Gf2Vector,
    pub kernel_basis: Vec<Gf2Vector>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![Gf2Vector::zero(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| Gf2Vector::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Gf2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Builds the matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Gf2Vector]) -> Result<Self> {
        let mut m = Self::zero(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for i in c.ones() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &Gf2Vector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn column(&self, j: usize) -> Gf2Vector {
        Gf2Vector::from_bits(&self.rows.iter().map(|r| r.get(j)).collect::<Vec<_>>())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &Gf2Vector) -> Result<Gf2Vector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(Gf2Vector::from_bits(
            &self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>(),
        ))
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if other.rows() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows(),
            });
        }
        let mut out = Self::zero(self.rows(), other.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for k in r.ones() {
                out.rows[i].xor_in(&other.rows[k]);
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(self.cols).len()
    }

    /// Reduced row echelon form restricted to the first `pivot_cols` columns.
    /// Returns `(row, col)` for each pivot, in column order.
    fn eliminate(&mut self, pivot_cols: usize) -> Vec<(usize, usize)> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..pivot_cols {
            if next_row == self.rows.len() {
                break;
            }
            let Some(p) = (next_row..self.rows.len()).find(|&r| self.rows[r].get(col)) else {
                continue;
            };
            self.rows.swap(next_row, p);
            let pivot = self.rows[next_row].clone();
            for (r, row) in self.rows.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.xor_in(&pivot);
                }
            }
            pivots.push((next_row, col));
            next_row += 1;
        }
        pivots
    }

    /// Solves `self · x = b`. Returns `None` when the system is inconsistent;
    /// otherwise one solution plus a basis of the kernel, so that the full
    /// solution set is `particular + span(kernel_basis)`.
    pub fn solve_affine(&self, b: &Gf2Vector) -> Result<Option<AffineSolution>> {
        if b.len() != self.rows() {
            return Err(Error::DimensionMismatch {
                expected: self.rows(),
                found: b.len(),
            });
        }
        let n = self.cols;
        let augmented: Vec<Gf2Vector> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| r.concat(&Gf2Vector::from_bits(&[b.get(i)])))
            .collect();
        let mut m = Self {
            cols: n + 1,
            rows: augmented,
        };
        let pivots = m.eliminate(n);
        let rank = pivots.len();
        if m.rows[rank..].iter().any(|r| r.get(n)) {
            return Ok(None);
        }
        let mut particular = Gf2Vector::zero(n);
        for &(r, c) in &pivots {
            if m.rows[r].get(n) {
                particular.set(c, true);
            }
        }
        let mut is_pivot = vec![false; n];
        for &(_, c) in &pivots {
            is_pivot[c] = true;
        }
        let kernel_basis = (0..n)
            .filter(|&free| !is_pivot[free])
            .map(|free| {
                let mut k = Gf2Vector::unit(n, free);
                for &(r, c) in &pivots {
                    if m.rows[r].get(free) {
                        k.set(c, true);
                    }
                }
                k
            })
            .collect();
        Ok(Some(AffineSolution {
            particular,
            kernel_basis,
        }))
    }

    /// The inverse of a square matrix, if it is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.rows();
        if n != self.cols {
            return None;
        }
        let mut m = Self {
            cols: 2 * n,
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(i, r)| r.concat(&Gf2Vector::unit(n, i)))
                .collect(),
        };
        if m.eliminate(n).len() < n {
            return None;
        }
        Some(Self {
            cols: n,
            rows: m
                .rows
                .iter()
                .map(|r| Gf2Vector::from_bits(&(0..n).map(|j| r.get(n + j)).collect::<Vec<_>>()))
                .collect(),
        })
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<Gf2Vector> {
        self.solve_affine(&Gf2Vector::zero(self.rows()))
            .expect("dimensions agree by construction")
            .expect("homogeneous systems are consistent")
            .kernel_basis
    }

    /// A basis of the column space, chosen among the columns themselves.
    pub fn image(&self) -> Vec<Gf2Vector> {
        let mut m = self.clone();
        m.eliminate(self.cols)
            .into_iter()
            .map(|(_, c)| self.column(c))
            .collect()
    }
}

/// Coordinates relative to a subspace and a chosen complement.
///
/// Given a basis `sub` of a subspace `B` and vectors `reps` completing it to a
/// basis of a larger space `Z`, [`Reducer::quotient_coords`] expresses any
/// `z ∈ Z` modulo `B` in terms of `reps`. Used for cohomology classes.
#[derive(Clone, Debug)]
pub struct Reducer {
    len: usize,
    // Echelon rows, each tagged with the combination of inputs producing it.
    rows: Vec<(usize, Gf2Vector, Gf2Vector)>,
    inputs: usize,
}

impl Reducer {
    /// Builds a reducer from independent vectors `basis` (all of length `len`).
    pub fn new(len: usize, basis: &[Gf2Vector]) -> Result<Self> {
        let mut rows: Vec<(usize, Gf2Vector, Gf2Vector)> = Vec::new();
        let inputs = basis.len();
        for (i, v) in basis.iter().enumerate() {
            if v.len() != len {
                return Err(Error::DimensionMismatch {
                    expected: len,
                    found: v.len(),
                });
            }
            let mut v = v.clone();
            let mut tag = Gf2Vector::unit(inputs, i);
            for (p, r, t) in &rows {
                if v.get(*p) {
                    v.xor_in(r);
                    tag.xor_in(t);
                }
            }
            let Some(p) = v.first_one() else {
                return Err(Error::Invalid(format!(
                    "reducer basis vector {i} is linearly dependent on earlier ones"
                )));
            };
            for (_, r, t) in rows.iter_mut() {
                if r.get(p) {
                    r.xor_in(&v);
                    t.xor_in(&tag);
                }
            }
            rows.push((p, v, tag));
        }
        Ok(Self { len, rows, inputs })
    }

    /// Coefficients of `v` in the basis, or `None` if `v` is not in its span.
    pub fn coords(&self, v: &Gf2Vector) -> Option<Gf2Vector> {
        debug_assert_eq!(v.len(), self.len);
        let mut v = v.clone();
        let mut out = Gf2Vector::zero(self.inputs);
        for (p, r, t) in &self.rows {
            if v.get(*p) {
                v.xor_in(r);
                out.xor_in(t);
            }
        }
        v.is_zero().then_some(out)
    }

    pub fn contains(&self, v: &Gf2Vector) -> bool {
        self.coords(v).is_some()
    }

    /// Coordinates of `v` on the trailing `self.inputs - skip` basis vectors,
    /// discarding the leading `skip` (the subspace being quotiented out).
    pub fn quotient_coords(&self, v: &Gf2Vector, skip: usize) -> Option<Gf2Vector> {
        self.coords(v).map(|c| c.slice(skip, self.inputs - skip))
    }
}

/// Extends an independent set `sub` inside the span of `space` to a basis of
/// that span; returns only the added vectors.
pub fn complement_in(len: usize, sub: &[Gf2Vector], space: &[Gf2Vector]) -> Result<Vec<Gf2Vector>> {
    let mut current: Vec<Gf2Vector> = sub.to_vec();
    let mut added = Vec::new();
    for v in space {
        let r = Reducer::new(len, &current)?;
        if !r.contains(v) {
            current.push(v.clone());
            added.push(v.clone());
        }
    }
    Ok(added)
}
