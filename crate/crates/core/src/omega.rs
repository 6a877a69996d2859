//! The cubical complex `Ω_n`.
//!
//! A cube is an ordered set partition `(A, B, C, D)` of `[n]` with `A` and `C`
//! non-empty. Points in `A` and `C` sit on the two anchors, points in `B` and
//! `D` move along the two open arcs between them, so the dimension of the cube
//! is `|B| + |D|`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::BasedComplex;
use crate::subset::{Subset, MAX_N};

/// A cube of `Ω_n`.
///
/// The derived ordering is lexicographic on the bit encodings of
/// `(a, b, c, d)`, which is the canonical order used for enumeration and
/// matrix indexing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeLabel {
    a: Subset,
    b: Subset,
    c: Subset,
    d: Subset,
    n: u8,
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (2..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidN(n))
    }
}

impl CubeLabel {
    pub fn new(a: Subset, b: Subset, c: Subset, d: Subset, n: usize) -> Result<CubeLabel> {
        check_n(n)?;
        let parts = [a, b, c, d];
        let mut seen = Subset::EMPTY;
        for p in parts {
            if !p.is_disjoint(seen) {
                return Err(Error::InvalidCube(format!("parts of {a}|{b}|{c}|{d} overlap")));
            }
            seen = seen.union(p);
        }
        if seen != Subset::full(n) {
            return Err(Error::InvalidCube(format!(
                "parts of {a}|{b}|{c}|{d} do not cover [{n}]"
            )));
        }
        if a.is_empty() || c.is_empty() {
            return Err(Error::InvalidCube(format!("A and C must be non-empty in {a}|{b}|{c}|{d}")));
        }
        Ok(CubeLabel::from_parts(a, b, c, d, n))
    }

    /// Convenience constructor from element lists; panics on an invalid label.
    pub fn from_lists(a: &[usize], b: &[usize], c: &[usize], d: &[usize], n: usize) -> CubeLabel {
        let s = |xs: &[usize]| Subset::from_elems(xs.iter().copied());
        CubeLabel::new(s(a), s(b), s(c), s(d), n).expect("valid cube label")
    }

    #[inline]
    pub(crate) fn from_parts(a: Subset, b: Subset, c: Subset, d: Subset, n: usize) -> CubeLabel {
        debug_assert!(!a.is_empty() && !c.is_empty());
        CubeLabel { a, b, c, d, n: n as u8 }
    }

    #[inline]
    pub fn a(&self) -> Subset {
        self.a
    }
    #[inline]
    pub fn b(&self) -> Subset {
        self.b
    }
    #[inline]
    pub fn c(&self) -> Subset {
        self.c
    }
    #[inline]
    pub fn d(&self) -> Subset {
        self.d
    }
    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.b.len() + self.d.len()
    }

    /// The facets of the cube: each point of `B` or `D` pushed onto either anchor.
    pub fn facets(&self) -> Vec<CubeLabel> {
        let n = self.n();
        let mut out = Vec::with_capacity(2 * self.dimension());
        for x in self.b.iter() {
            out.push(CubeLabel::from_parts(self.a.with(x), self.b.without(x), self.c, self.d, n));
            out.push(CubeLabel::from_parts(self.a, self.b.without(x), self.c.with(x), self.d, n));
        }
        for x in self.d.iter() {
            out.push(CubeLabel::from_parts(self.a.with(x), self.b, self.c, self.d.without(x), n));
            out.push(CubeLabel::from_parts(self.a, self.b, self.c.with(x), self.d.without(x), n));
        }
        out
    }
}

impl fmt::Display for CubeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for CubeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for CubeLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A Z2 chain: a finite set of cubes of one dimension in one `Ω_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Chain {
    n: usize,
    dim: usize,
    cells: BTreeSet<CubeLabel>,
}

impl Chain {
    pub fn empty(n: usize, dim: usize) -> Chain {
        Chain { n, dim, cells: BTreeSet::new() }
    }

    /// Builds a chain from cells, cancelling repeated cells mod 2.
    pub fn from_cells<I>(n: usize, dim: usize, cells: I) -> Result<Chain>
    where
        I: IntoIterator<Item = CubeLabel>,
    {
        let mut ch = Chain::empty(n, dim);
        for cell in cells {
            ch.add_cell(cell)?;
        }
        Ok(ch)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self) -> &BTreeSet<CubeLabel> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: &CubeLabel) -> bool {
        self.cells.contains(cell)
    }

    /// Adds a cell with Z2 coefficients (toggles membership).
    pub fn add_cell(&mut self, cell: CubeLabel) -> Result<()> {
        if cell.n() != self.n || cell.dimension() != self.dim {
            return Err(Error::MixedChain);
        }
        if !self.cells.remove(&cell) {
            self.cells.insert(cell);
        }
        Ok(())
    }

    /// Sum mod 2 (symmetric difference).
    pub fn add(&mut self, other: &Chain) -> Result<()> {
        if other.n != self.n || other.dim != self.dim {
            return Err(Error::MixedChain);
        }
        for cell in &other.cells {
            if !self.cells.remove(cell) {
                self.cells.insert(*cell);
            }
        }
        Ok(())
    }
}

/// All `d`-cubes of `Ω_n` in canonical order; empty when `d > n - 2`.
pub fn enumerate_cubes(n: usize, d: usize) -> Result<Vec<CubeLabel>> {
    check_n(n)?;
    if d + 2 > n {
        return Ok(Vec::new());
    }
    let full = Subset::full(n);
    let mut out = Vec::new();
    for moving in Subset::k_subsets(n, d) {
        let rest = full.difference(moving);
        for b in moving.subsets() {
            let dd = moving.difference(b);
            for a in rest.subsets() {
                let c = rest.difference(a);
                if !a.is_empty() && !c.is_empty() {
                    out.push(CubeLabel::from_parts(a, b, c, dd, n));
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The Z2 boundary of a single cube. Zero-dimensional cubes have empty boundary.
pub fn boundary_cube(sigma: &CubeLabel) -> Chain {
    let dim = sigma.dimension().saturating_sub(1);
    Chain {
        n: sigma.n(),
        dim,
        // facets of a cube are pairwise distinct
        cells: sigma.facets().into_iter().collect(),
    }
}

/// Linear extension of [`boundary_cube`].
pub fn boundary_chain(ch: &Chain) -> Chain {
    let mut out = Chain::empty(ch.n, ch.dim.saturating_sub(1));
    if ch.dim == 0 {
        return out;
    }
    for sigma in &ch.cells {
        for facet in sigma.facets() {
            if !out.cells.remove(&facet) {
                out.cells.insert(facet);
            }
        }
    }
    out
}

/// `Ω_n` as a based chain complex, cells in canonical order.
pub fn omega_complex(n: usize) -> Result<BasedComplex<CubeLabel>> {
    check_n(n)?;
    let cells = (0..=n - 2).map(|d| enumerate_cubes(n, d)).collect::<Result<Vec<_>>>()?;
    BasedComplex::from_facets(cells, CubeLabel::facets)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in u64 for n <= 63")
}

fn pow2(e: usize) -> Result<u64> {
    if e < 64 {
        Ok(1 << e)
    } else {
        Err(Error::Overflow("power of two"))
    }
}

/// Cube counts per dimension, `binom(n, d) * (2^n - 2^(d+1))`.
pub fn f_vector(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    (0..=n - 2)
        .map(|d| {
            let width = pow2(n)? - pow2(d + 1)?;
            binomial(n, d).checked_mul(width).ok_or(Error::Overflow("f-vector"))
        })
        .collect()
}

/// `(-1)^n (2^n - 2)`.
pub fn euler_characteristic(n: usize) -> Result<i64> {
    check_n(n)?;
    let magnitude = i64::try_from(pow2(n)? - 2).map_err(|_| Error::Overflow("euler characteristic"))?;
    Ok(if n.is_multiple_of(2) { magnitude } else { -magnitude })
}

/// Closed-form Betti numbers: `binom(n, d)` below the top dimension and
/// `2^n + binom(n-1, 2) - 2` in dimension `n - 2`.
pub fn betti_formula(n: usize) -> Result<Vec<u64>> {
    check_n(n)?;
    let mut out: Vec<u64> = (0..n - 2).map(|d| binomial(n, d)).collect();
    let top = pow2(n)?
        .checked_add(binomial(n - 1, 2))
        .ok_or(Error::Overflow("top betti number"))?
        - 2;
    out.push(top);
    Ok(out)
}

/// Alternating sum `Σ (-1)^d v[d]`.
pub fn alternating_sum(v: &[u64]) -> i128 {
    v.iter()
        .enumerate()
        .map(|(d, &x)| if d % 2 == 0 { x as i128 } else { -(x as i128) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(a: &[usize], b: &[usize], c: &[usize], d: &[usize], n: usize) -> CubeLabel {
        CubeLabel::from_lists(a, b, c, d, n)
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_cubes(3, 0).unwrap().len(), 6);
        assert_eq!(enumerate_cubes(3, 1).unwrap().len(), 12);
        assert_eq!(
            enumerate_cubes(2, 0).unwrap(),
            vec![cube(&[1], &[], &[2], &[], 2), cube(&[2], &[], &[1], &[], 2)]
        );
        assert!(enumerate_cubes(3, 2).unwrap().is_empty());
        assert_eq!(enumerate_cubes(1, 0), Err(Error::InvalidN(1)));
    }

    #[test]
    fn boundary_examples() {
        let s = cube(&[1], &[2], &[3], &[], 3);
        let expected: BTreeSet<_> =
            [cube(&[1, 2], &[], &[3], &[], 3), cube(&[1], &[], &[2, 3], &[], 3)].into();
        assert_eq!(boundary_cube(&s).cells(), &expected);

        let s = cube(&[2], &[], &[1], &[3], 3);
        let expected: BTreeSet<_> =
            [cube(&[2, 3], &[], &[1], &[], 3), cube(&[2], &[], &[1, 3], &[], 3)].into();
        assert_eq!(boundary_cube(&s).cells(), &expected);

        assert!(boundary_cube(&cube(&[3], &[], &[1, 2], &[], 3)).is_empty());
    }

    #[test]
    fn boundary_chain_examples() {
        assert!(boundary_chain(&Chain::empty(4, 2)).is_empty());
        let s = cube(&[2], &[1, 4], &[3], &[], 4);
        let single = Chain::from_cells(4, 2, [s]).unwrap();
        assert_eq!(boundary_chain(&single), boundary_cube(&s));

        // rho_{{2},{1}} at n = 3: both boundaries are {({2,3},∅,{1},∅), ({2},∅,{1,3},∅)}
        let rho = Chain::from_cells(
            3,
            1,
            [cube(&[2], &[3], &[1], &[], 3), cube(&[2], &[], &[1], &[3], 3)],
        )
        .unwrap();
        assert!(boundary_chain(&rho).is_empty());
    }

    #[test]
    fn mixed_chain_rejected() {
        let a = cube(&[1], &[], &[2, 3], &[], 3);
        let b = cube(&[1], &[2], &[3], &[], 3);
        assert_eq!(Chain::from_cells(3, 0, [a, b]), Err(Error::MixedChain));
        assert_eq!(Chain::from_cells(3, 0, [cube(&[1], &[], &[2, 3, 4], &[], 4)]), Err(Error::MixedChain));
    }

    #[test]
    fn invalid_labels() {
        let s = |xs: &[usize]| Subset::from_elems(xs.iter().copied());
        assert!(CubeLabel::new(s(&[]), s(&[1]), s(&[2, 3]), s(&[]), 3).is_err());
        assert!(CubeLabel::new(s(&[1]), s(&[1]), s(&[2, 3]), s(&[]), 3).is_err());
        assert!(CubeLabel::new(s(&[1]), s(&[]), s(&[2]), s(&[]), 3).is_err());
        assert!(CubeLabel::new(s(&[1]), s(&[]), s(&[2]), s(&[]), 1).is_err());
    }

    #[test]
    fn f_vector_and_euler() {
        assert_eq!(f_vector(3).unwrap(), vec![6, 12]);
        assert_eq!(f_vector(4).unwrap(), vec![14, 48, 48]);
        assert_eq!(f_vector(2).unwrap(), vec![2]);
        assert_eq!(euler_characteristic(3).unwrap(), -6);
        assert_eq!(euler_characteristic(4).unwrap(), 14);
        assert_eq!(euler_characteristic(2).unwrap(), 2);
    }

    #[test]
    fn betti_formula_values() {
        assert_eq!(betti_formula(3).unwrap(), vec![1, 7]);
        assert_eq!(betti_formula(4).unwrap(), vec![1, 4, 17]);
        assert_eq!(betti_formula(5).unwrap(), vec![1, 5, 10, 36]);
        assert_eq!(betti_formula(2).unwrap(), vec![2]);
    }

    #[test]
    fn partition_property_and_counts() {
        for n in 2..=8 {
            let fv = f_vector(n).unwrap();
            for d in 0..=n - 2 {
                let cells = enumerate_cubes(n, d).unwrap();
                assert_eq!(cells.len() as u64, fv[d], "n={n} d={d}");
                for c in &cells {
                    assert!(c.a().is_disjoint(c.b()) && c.a().is_disjoint(c.c()));
                    assert!(c.a().is_disjoint(c.d()) && c.b().is_disjoint(c.c()));
                    assert!(c.b().is_disjoint(c.d()) && c.c().is_disjoint(c.d()));
                    assert_eq!(c.a().union(c.b()).union(c.c()).union(c.d()), Subset::full(n));
                    assert_eq!(c.dimension(), d);
                }
                assert!(cells.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero_and_facet_count() {
        for n in 2..=7 {
            for d in 0..=n - 2 {
                for s in enumerate_cubes(n, d).unwrap() {
                    let bd = boundary_cube(&s);
                    assert_eq!(bd.len(), 2 * d);
                    assert!(bd.cells().iter().all(|f| f.dimension() + 1 == d));
                    assert!(boundary_chain(&bd).is_empty(), "{s}");
                }
            }
        }
    }

    #[test]
    fn euler_consistency() {
        for n in 2..=12 {
            let chi = euler_characteristic(n).unwrap() as i128;
            assert_eq!(alternating_sum(&f_vector(n).unwrap()), chi);
            assert_eq!(alternating_sum(&betti_formula(n).unwrap()), chi);
        }
    }
}
