//! Brute-force homology over GF(2).
//!
//! Boundary matrices are stored densely with bit-packed rows and reduced by
//! Gaussian elimination. This is the independent oracle that the Morse-theoretic
//! computations are checked against, so it knows nothing about cube labels.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Gf2Matrix {
        let words = cols.div_ceil(WORD);
        Gf2Matrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn identity(size: usize) -> Gf2Matrix {
        let mut m = Gf2Matrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from the row indices of the set entries of each column.
    /// Repeated row indices cancel mod 2.
    pub fn from_columns<I, R>(rows: usize, columns: I) -> Result<Gf2Matrix>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = usize>,
    {
        let columns: Vec<Vec<usize>> =
            columns.into_iter().map(|c| c.into_iter().collect()).collect();
        let mut m = Gf2Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for &i in col {
                if i >= rows {
                    return Err(Error::Shape(format!("row index {i} out of range for {rows} rows")));
                }
                m.toggle(i, j);
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Gf2Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Gf2Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for (j, &bit) in row.iter().enumerate() {
                m.set(i, j, bit);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        let w = &mut self.data[i * self.words + j / WORD];
        let bit = 1u64 << (j % WORD);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i * self.words + j / WORD] ^= 1u64 << (j % WORD);
    }

    /// Column indices of the set entries in row `i`.
    pub fn row_support(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row_words(i).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let j = w * WORD + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(j)
            })
        })
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row_support(i) {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product; cost scales with the number of set entries of `self`.
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Gf2Matrix::zeros(self.rows, rhs.cols);
        let words = out.words;
        out.data.par_chunks_mut(words.max(1)).enumerate().for_each(|(i, dst)| {
            if words == 0 {
                return;
            }
            for k in self.row_support(i) {
                xor_into(dst, rhs.row_words(k));
            }
        });
        Ok(out)
    }

    /// Permutes rows: row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> Gf2Matrix {
        assert_eq!(perm.len(), self.rows);
        let mut out = Gf2Matrix::zeros(self.rows, self.cols);
        for (i, &src) in perm.iter().enumerate() {
            out.data[i * self.words..(i + 1) * self.words].copy_from_slice(self.row_words(src));
        }
        out
    }

    /// If this is a permutation matrix, returns `p` with `self[i][p[i]] = 1`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if self.rows != self.cols {
            return None;
        }
        let mut used = vec![false; self.cols];
        let mut perm = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut support = self.row_support(i);
            let j = support.next()?;
            if support.next().is_some() || used[j] {
                return None;
            }
            used[j] = true;
            perm.push(j);
        }
        Some(perm)
    }

    /// Rank over GF(2). The matrix itself is left untouched.
    ///
    /// Rows are inserted one at a time into an echelon table keyed by leading
    /// column; each incoming row is reduced by the stored pivot rows until it
    /// either vanishes or acquires a fresh leading column.
    pub fn rank(&self) -> usize {
        let words = self.words;
        if words == 0 {
            return 0;
        }
        let mut pivot_of_col: Vec<u32> = vec![u32::MAX; self.cols];
        let mut pivots: Vec<u64> = Vec::new();
        let mut scratch = vec![0u64; words];
        let mut rank = 0usize;
        for i in 0..self.rows {
            scratch.copy_from_slice(self.row_words(i));
            let mut w = 0;
            loop {
                while w < words && scratch[w] == 0 {
                    w += 1;
                }
                if w == words {
                    break;
                }
                let lead = w * WORD + scratch[w].trailing_zeros() as usize;
                let p = pivot_of_col[lead];
                if p == u32::MAX {
                    pivot_of_col[lead] = rank as u32;
                    pivots.extend_from_slice(&scratch);
                    rank += 1;
                    break;
                }
                let base = p as usize * words;
                xor_into(&mut scratch[w..], &pivots[base + w..base + words]);
            }
        }
        rank
    }
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows.min(32) {
            let row: String =
                (0..self.cols.min(64)).map(|j| if self.get(i, j) { '1' } else { '.' }).collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

pub fn rank(m: &Gf2Matrix) -> usize {
    m.rank()
}

/// A finite chain complex over GF(2) with a chosen basis of cells.
///
/// `boundary_by_dim[d]` maps `d`-chains to `(d-1)`-chains: one column per
/// `d`-cell and one row per `(d-1)`-cell (no rows for `d = 0`).
#[derive(Clone, Debug)]
pub struct BasedComplex<C> {
    cells_by_dim: Vec<Vec<C>>,
    boundary_by_dim: Vec<Gf2Matrix>,
}

impl<C> BasedComplex<C> {
    /// Validates matrix shapes and `∂∘∂ = 0`.
    pub fn new(cells_by_dim: Vec<Vec<C>>, boundary_by_dim: Vec<Gf2Matrix>) -> Result<Self> {
        if cells_by_dim.len() != boundary_by_dim.len() {
            return Err(Error::Shape(format!(
                "{} cell lists but {} boundary matrices",
                cells_by_dim.len(),
                boundary_by_dim.len()
            )));
        }
        for (d, m) in boundary_by_dim.iter().enumerate() {
            let rows = if d == 0 { 0 } else { cells_by_dim[d - 1].len() };
            if m.cols() != cells_by_dim[d].len() || m.rows() != rows {
                return Err(Error::Shape(format!(
                    "boundary in dimension {d} is {}x{}, expected {rows}x{}",
                    m.rows(),
                    m.cols(),
                    cells_by_dim[d].len()
                )));
            }
        }
        for d in 1..boundary_by_dim.len().saturating_sub(1) {
            if !boundary_by_dim[d].mul(&boundary_by_dim[d + 1])?.is_zero() {
                return Err(Error::Shape(format!(
                    "boundary matrices in dimensions {d} and {} do not compose to zero",
                    d + 1
                )));
            }
        }
        Ok(BasedComplex { cells_by_dim, boundary_by_dim })
    }

    pub fn cells_by_dim(&self) -> &[Vec<C>] {
        &self.cells_by_dim
    }

    pub fn boundary(&self, d: usize) -> &Gf2Matrix {
        &self.boundary_by_dim[d]
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.cells_by_dim.len().checked_sub(1)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.cells_by_dim.iter().map(Vec::len).collect()
    }

    /// Rank of every boundary matrix, indexed by dimension.
    pub fn ranks(&self) -> Vec<usize>
    where
        C: Sync,
    {
        self.boundary_by_dim.par_iter().map(Gf2Matrix::rank).collect()
    }

    /// `β_d = dim C_d - rank ∂_d - rank ∂_{d+1}`.
    pub fn betti_numbers(&self) -> Vec<usize>
    where
        C: Sync,
    {
        let ranks = self.ranks();
        (0..self.cells_by_dim.len())
            .map(|d| {
                let next = ranks.get(d + 1).copied().unwrap_or(0);
                self.cells_by_dim[d].len() - ranks[d] - next
            })
            .collect()
    }
}

impl<C: Clone + Eq + Hash> BasedComplex<C> {
    /// Builds boundary matrices from a facet function. Facets listed twice cancel;
    /// a facet outside the complex is a shape error.
    pub fn from_facets<F>(cells_by_dim: Vec<Vec<C>>, facets: F) -> Result<Self>
    where
        F: Fn(&C) -> Vec<C>,
    {
        let mut boundaries = Vec::with_capacity(cells_by_dim.len());
        for d in 0..cells_by_dim.len() {
            if d == 0 {
                boundaries.push(Gf2Matrix::zeros(0, cells_by_dim[0].len()));
                continue;
            }
            let index: HashMap<&C, usize> =
                cells_by_dim[d - 1].iter().enumerate().map(|(i, c)| (c, i)).collect();
            let mut columns = Vec::with_capacity(cells_by_dim[d].len());
            for cell in &cells_by_dim[d] {
                let col = facets(cell)
                    .iter()
                    .map(|f| {
                        index.get(f).copied().ok_or_else(|| {
                            Error::Shape(format!("facet of a {d}-cell missing from the complex"))
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                columns.push(col);
            }
            boundaries.push(Gf2Matrix::from_columns(cells_by_dim[d - 1].len(), columns)?);
        }
        BasedComplex::new(cells_by_dim, boundaries)
    }
}

pub fn betti_numbers<C: Sync>(cx: &BasedComplex<C>) -> Vec<usize> {
    cx.betti_numbers()
}
