//! The acyclic matching on `Ω_n` and its Morse complex.
//!
//! Two pivots drive the matching: `α(σ) = min(A ∪ B)` and `β(σ) = max(B ∪ C)`.
//! The first family pairs cubes by moving `α` between `A` and `B`; among the
//! remaining cubes (those with `A = {α}`) the second family moves `β` between
//! `C` and `B`. Whatever is left over is critical, and splits into three
//! types `CRIT1..CRIT3`.
//!
//! Alternating paths are counted with a memoized dynamic program over the
//! matched cells rather than enumerated, so the Morse boundary of a critical
//! cell costs time proportional to the cells reachable from it.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::omega::{check_n, enumerate_cubes, Chain, CubeLabel};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MorseClass {
    Up1,
    Down1,
    Up2,
    Down2,
    Crit1,
    Crit2,
    Crit3,
}

impl MorseClass {
    pub const ALL: [MorseClass; 7] = [
        MorseClass::Up1,
        MorseClass::Down1,
        MorseClass::Up2,
        MorseClass::Down2,
        MorseClass::Crit1,
        MorseClass::Crit2,
        MorseClass::Crit3,
    ];

    pub fn is_up(self) -> bool {
        matches!(self, MorseClass::Up1 | MorseClass::Up2)
    }

    pub fn is_down(self) -> bool {
        matches!(self, MorseClass::Down1 | MorseClass::Down2)
    }

    pub fn is_critical(self) -> bool {
        matches!(self, MorseClass::Crit1 | MorseClass::Crit2 | MorseClass::Crit3)
    }

    /// The class of the matched partner, for matched classes.
    pub fn partner(self) -> Option<MorseClass> {
        match self {
            MorseClass::Up1 => Some(MorseClass::Down1),
            MorseClass::Down1 => Some(MorseClass::Up1),
            MorseClass::Up2 => Some(MorseClass::Down2),
            MorseClass::Down2 => Some(MorseClass::Up2),
            _ => None,
        }
    }
}

impl fmt::Display for MorseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MorseClass::Up1 => "UP1",
            MorseClass::Down1 => "DOWN1",
            MorseClass::Up2 => "UP2",
            MorseClass::Down2 => "DOWN2",
            MorseClass::Crit1 => "CRIT1",
            MorseClass::Crit2 => "CRIT2",
            MorseClass::Crit3 => "CRIT3",
        };
        f.write_str(s)
    }
}

/// `min(A ∪ B)`.
pub fn pivot_alpha(sigma: &CubeLabel) -> usize {
    sigma.a().union(sigma.b()).min().expect("A is non-empty")
}

/// `max(B ∪ C)`.
pub fn pivot_beta(sigma: &CubeLabel) -> usize {
    sigma.b().union(sigma.c()).max().expect("C is non-empty")
}

/// Assigns the matching class. The cases are checked in a fixed order: first
/// family, then second family, then the three critical types.
///
/// # Panics
///
/// Panics if no case applies; the classes cover every valid cube, so a
/// fall-through means a defect in this function.
pub fn classify(sigma: &CubeLabel) -> MorseClass {
    let (a, b, c) = (sigma.a(), sigma.b(), sigma.c());
    let alpha = pivot_alpha(sigma);
    if b.contains(alpha) {
        return MorseClass::Up1;
    }
    if a.len() >= 2 {
        return MorseClass::Down1;
    }
    let beta = pivot_beta(sigma);
    if b.contains(beta) {
        return MorseClass::Up2;
    }
    if c.len() >= 2 && beta > alpha {
        return MorseClass::Down2;
    }
    if b.is_empty() && c.len() >= 2 && beta < alpha {
        return MorseClass::Crit1;
    }
    if b.is_empty() && c.len() == 1 {
        return MorseClass::Crit2;
    }
    if !b.is_empty() && c.len() == 1 && b.iter().all(|x| alpha < x && x < beta) {
        return MorseClass::Crit3;
    }
    panic!("classification fell through for {sigma}");
}

/// The matching involution.
pub fn mu(sigma: &CubeLabel) -> Result<CubeLabel> {
    let (a, b, c, d, n) = (sigma.a(), sigma.b(), sigma.c(), sigma.d(), sigma.n());
    let out = match classify(sigma) {
        MorseClass::Down1 => {
            let x = pivot_alpha(sigma);
            CubeLabel::from_parts(a.without(x), b.with(x), c, d, n)
        }
        MorseClass::Up1 => {
            let x = pivot_alpha(sigma);
            CubeLabel::from_parts(a.with(x), b.without(x), c, d, n)
        }
        MorseClass::Down2 => {
            let y = pivot_beta(sigma);
            CubeLabel::from_parts(a, b.with(y), c.without(y), d, n)
        }
        MorseClass::Up2 => {
            let y = pivot_beta(sigma);
            CubeLabel::from_parts(a, b.without(y), c.with(y), d, n)
        }
        _ => return Err(Error::Unmatched(*sigma)),
    };
    Ok(out)
}

/// Critical `d`-cubes, built directly from their description rather than by
/// classifying every cube. Canonical order.
pub fn critical_cells(n: usize, d: usize) -> Result<Vec<CubeLabel>> {
    check_n(n)?;
    let full = Subset::full(n);
    let mut out = Vec::new();
    if d + 3 <= n {
        // CRIT1: A = {max R}, B = ∅, C = R - max R, where R = [n] - D
        for dset in Subset::k_subsets(n, d) {
            let rest = full.difference(dset);
            let top = rest.max().expect("|R| >= 3");
            out.push(CubeLabel::from_parts(Subset::singleton(top), Subset::EMPTY, rest.without(top), dset, n));
        }
    } else if d + 2 == n {
        // CRIT2: ({a}, ∅, {c}, rest) for a != c
        for a in 1..=n {
            for c in (1..=n).filter(|&c| c != a) {
                let d_part = full.without(a).without(c);
                out.push(CubeLabel::from_parts(
                    Subset::singleton(a),
                    Subset::EMPTY,
                    Subset::singleton(c),
                    d_part,
                    n,
                ));
            }
        }
        // CRIT3: (min R, R - min - max, max R, D) for |R| >= 3
        for dsize in 0..n - 2 {
            for dset in Subset::k_subsets(n, dsize) {
                let rest = full.difference(dset);
                let (lo, hi) = (rest.min().unwrap(), rest.max().unwrap());
                out.push(CubeLabel::from_parts(
                    Subset::singleton(lo),
                    rest.without(lo).without(hi),
                    Subset::singleton(hi),
                    dset,
                    n,
                ));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Result of the acyclicity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum AcyclicityCertificate {
    /// `orders[d]` lists the down-matched `d`-cubes so that every edge of the
    /// layer digraph points forward.
    Acyclic { n: usize, orders: Vec<Vec<CubeLabel>> },
    /// A directed cycle `σ_1 → σ_2 → ... → σ_1` in dimension `dim`.
    Cycle { n: usize, dim: usize, cycle: Vec<CubeLabel> },
}

impl AcyclicityCertificate {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, AcyclicityCertificate::Acyclic { .. })
    }
}

/// Topological order of a digraph given by adjacency lists, or a directed
/// cycle (as a node sequence, without repeating the first node) if none exists.
pub fn topological_order(adj: &[Vec<usize>]) -> std::result::Result<Vec<usize>, Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark = vec![Mark::New; adj.len()];
    let mut post = Vec::with_capacity(adj.len());
    for root in 0..adj.len() {
        if mark[root] != Mark::New {
            continue;
        }
        // (node, next child position)
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Open;
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            if let Some(&w) = adj[v].get(top.1) {
                top.1 += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Open;
                        stack.push((w, 0));
                    }
                    Mark::Open => {
                        let start = stack.iter().position(|&(u, _)| u == w).unwrap();
                        return Err(stack[start..].iter().map(|&(u, _)| u).collect());
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                post.push(v);
                stack.pop();
            }
        }
    }
    post.reverse();
    Ok(post)
}

/// Builds, for each dimension `d`, the digraph on down-matched `d`-cubes with
/// an edge `σ → σ'` whenever `σ' ≠ σ` is a facet of `μ(σ)`, and sorts it
/// topologically.
pub fn check_acyclic(n: usize) -> Result<AcyclicityCertificate> {
    check_n(n)?;
    let mut orders = Vec::new();
    for dim in 0..n.saturating_sub(2) {
        let down: Vec<CubeLabel> =
            enumerate_cubes(n, dim)?.into_iter().filter(|s| classify(s).is_down()).collect();
        let index: HashMap<CubeLabel, usize> =
            down.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut adj = vec![Vec::new(); down.len()];
        for (i, sigma) in down.iter().enumerate() {
            for facet in mu(sigma)?.facets() {
                if facet == *sigma {
                    continue;
                }
                if let Some(&j) = index.get(&facet) {
                    adj[i].push(j);
                }
            }
        }
        match topological_order(&adj) {
            Ok(order) => orders.push(order.into_iter().map(|i| down[i]).collect()),
            Err(cycle) => {
                return Ok(AcyclicityCertificate::Cycle {
                    n,
                    dim,
                    cycle: cycle.into_iter().map(|i| down[i]).collect(),
                })
            }
        }
    }
    Ok(AcyclicityCertificate::Acyclic { n, orders })
}

/// Number of Λ-paths from a cube to each critical endpoint.
pub type EndpointCounts = BTreeMap<CubeLabel, u64>;

/// Memoized Λ-path counting.
///
/// For a down-matched cube `τ`, the Λ-paths from `τ` continue through
/// `μ(τ)` to a facet `φ ≠ τ`; a critical `φ` ends the path, a down-matched
/// `φ` continues it, an up-matched `φ` is a dead end.
#[derive(Default)]
pub struct PathCounter {
    memo: HashMap<CubeLabel, EndpointCounts>,
    active: HashSet<CubeLabel>,
}

impl PathCounter {
    pub fn new() -> PathCounter {
        PathCounter::default()
    }

    /// Λ-path counts from any cube (a critical cube is its own single path).
    pub fn endpoint_counts(&mut self, sigma: &CubeLabel) -> Result<EndpointCounts> {
        let class = classify(sigma);
        if class.is_critical() {
            return Ok(BTreeMap::from([(*sigma, 1)]));
        }
        if class.is_up() {
            return Ok(BTreeMap::new());
        }
        if let Some(c) = self.memo.get(sigma) {
            return Ok(c.clone());
        }
        if !self.active.insert(*sigma) {
            return Err(Error::Defect(format!("matching has a cycle through {sigma}")));
        }
        let mut counts = EndpointCounts::new();
        for facet in mu(sigma)?.facets() {
            if facet == *sigma {
                continue;
            }
            for (end, k) in self.endpoint_counts(&facet)? {
                let slot = counts.entry(end).or_insert(0);
                *slot = slot.checked_add(k).ok_or(Error::Overflow("path count"))?;
            }
        }
        self.active.remove(sigma);
        self.memo.insert(*sigma, counts.clone());
        Ok(counts)
    }

    fn total(&mut self, sigma: &CubeLabel) -> Result<u64> {
        Ok(self.endpoint_counts(sigma)?.values().sum())
    }

    /// Every Λ-path from `sigma`, each listed as the full cube sequence
    /// `σ, μ(σ), τ_2, μ(τ_2), ..., end`.
    pub fn lambda_paths(&mut self, sigma: &CubeLabel) -> Result<Vec<Vec<CubeLabel>>> {
        if classify(sigma).is_critical() {
            return Ok(vec![vec![*sigma]]);
        }
        if self.total(sigma)? == 0 {
            return Ok(Vec::new());
        }
        let up = mu(sigma)?;
        let mut out = Vec::new();
        for facet in up.facets() {
            if facet == *sigma || self.total(&facet)? == 0 {
                continue;
            }
            for tail in self.lambda_paths(&facet)? {
                let mut path = Vec::with_capacity(tail.len() + 2);
                path.push(*sigma);
                path.push(up);
                path.extend(tail);
                out.push(path);
            }
        }
        Ok(out)
    }

    /// The unique Λ-path from a cube with empty `B` that is not up-matched.
    ///
    /// Below the top dimension it ends at `(x, ∅, A ∪ C - x, D)` with
    /// `x = max(A ∪ C)`. A critical top cube `(a, ∅, c, S)` with `a < c` is its
    /// own Λ-path and so ends elsewhere.
    pub fn lambda_path(&mut self, sigma: &CubeLabel) -> Result<LambdaPath> {
        if !sigma.b().is_empty() {
            return Err(Error::Precondition(format!("{sigma} has non-empty B")));
        }
        if classify(sigma).is_up() {
            return Err(Error::Precondition(format!("{sigma} is up-matched")));
        }
        let total = self.total(sigma)?;
        if total != 1 {
            return Err(Error::Defect(format!("{sigma} has {total} Λ-paths, expected exactly one")));
        }
        let mut path = vec![*sigma];
        let mut cur = *sigma;
        while !classify(&cur).is_critical() {
            let up = mu(&cur)?;
            path.push(up);
            let mut next = None;
            for facet in up.facets() {
                if facet != cur && self.total(&facet)? > 0 {
                    next = Some(facet);
                    break;
                }
            }
            cur = next.ok_or_else(|| Error::Defect(format!("Λ-path from {sigma} stalls at {up}")))?;
            path.push(cur);
        }
        Ok(LambdaPath { path, end: cur })
    }

    /// Morse boundary of a critical cube, with full path accounting.
    pub fn morse_boundary(&mut self, sigma: &CubeLabel) -> Result<MorseBoundary> {
        if !classify(sigma).is_critical() {
            return Err(Error::Precondition(format!("{sigma} is not critical")));
        }
        let dim = sigma.dimension();
        let mut endpoints = EndpointCounts::new();
        if dim > 0 {
            for facet in sigma.facets() {
                for (end, k) in self.endpoint_counts(&facet)? {
                    let slot = endpoints.entry(end).or_insert(0);
                    *slot = slot.checked_add(k).ok_or(Error::Overflow("path count"))?;
                }
            }
        }
        let n = sigma.n();
        let boundary = Chain::from_cells(
            n,
            dim.saturating_sub(1),
            endpoints.iter().filter(|(_, &k)| k % 2 == 1).map(|(c, _)| *c),
        )?;
        Ok(MorseBoundary {
            cell: *sigma,
            path_count: endpoints.values().sum(),
            endpoints: endpoints.into_iter().collect(),
            boundary,
        })
    }

    /// Every alternating path starting at a critical cube.
    pub fn alternating_paths(&mut self, sigma: &CubeLabel) -> Result<Vec<AlternatingPath>> {
        if !classify(sigma).is_critical() {
            return Err(Error::Precondition(format!("{sigma} is not critical")));
        }
        let mut out = Vec::new();
        if sigma.dimension() == 0 {
            return Ok(out);
        }
        for facet in sigma.facets() {
            for tail in self.lambda_paths(&facet)? {
                let end = *tail.last().expect("non-empty path");
                let steps = tail[..tail.len() - 1].chunks(2).map(|p| (p[0], p[1])).collect();
                out.push(AlternatingPath { start: *sigma, steps, end });
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaPath {
    /// `σ, μ(σ), τ_2, μ(τ_2), ..., end`; just `[σ]` for a critical `σ`.
    pub path: Vec<CubeLabel>,
    pub end: CubeLabel,
}

/// `start ≻ τ_1 ≺ μ(τ_1) ≻ ... ≻ τ_q ≺ μ(τ_q) ≻ end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlternatingPath {
    pub start: CubeLabel,
    pub steps: Vec<(CubeLabel, CubeLabel)>,
    pub end: CubeLabel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorseBoundary {
    pub cell: CubeLabel,
    /// Critical cubes reached by an odd number of alternating paths.
    #[serde(serialize_with = "serialize_chain")]
    pub boundary: Chain,
    pub path_count: u64,
    pub endpoints: Vec<(CubeLabel, u64)>,
}

fn serialize_chain<S: serde::Serializer>(ch: &Chain, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ch.cells())
}

pub fn lambda_path(sigma: &CubeLabel) -> Result<LambdaPath> {
    PathCounter::new().lambda_path(sigma)
}

pub fn morse_boundary(sigma: &CubeLabel) -> Result<MorseBoundary> {
    PathCounter::new().morse_boundary(sigma)
}

pub fn alternating_paths(sigma: &CubeLabel) -> Result<Vec<AlternatingPath>> {
    PathCounter::new().alternating_paths(sigma)
}

/// Class counts in one dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayerCensus {
    pub dim: usize,
    pub up1: usize,
    pub down1: usize,
    pub up2: usize,
    pub down2: usize,
    pub crit1: usize,
    pub crit2: usize,
    pub crit3: usize,
}

impl LayerCensus {
    pub fn up(&self) -> usize {
        self.up1 + self.up2
    }
    pub fn down(&self) -> usize {
        self.down1 + self.down2
    }
    pub fn critical(&self) -> usize {
        self.crit1 + self.crit2 + self.crit3
    }
    pub fn total(&self) -> usize {
        self.up() + self.down() + self.critical()
    }
}

pub fn census(n: usize) -> Result<Vec<LayerCensus>> {
    check_n(n)?;
    (0..=n - 2)
        .map(|dim| {
            let mut row = LayerCensus { dim, ..Default::default() };
            for s in enumerate_cubes(n, dim)? {
                let slot = match classify(&s) {
                    MorseClass::Up1 => &mut row.up1,
                    MorseClass::Down1 => &mut row.down1,
                    MorseClass::Up2 => &mut row.up2,
                    MorseClass::Down2 => &mut row.down2,
                    MorseClass::Crit1 => &mut row.crit1,
                    MorseClass::Crit2 => &mut row.crit2,
                    MorseClass::Crit3 => &mut row.crit3,
                };
                *slot += 1;
            }
            Ok(row)
        })
        .collect()
}

/// Checks that the Morse boundary vanishes on every critical cube and returns
/// the number of critical cubes per dimension, which are then the Betti numbers.
pub fn betti_morse(n: usize) -> Result<Vec<usize>> {
    check_n(n)?;
    let mut counter = PathCounter::new();
    let mut out = Vec::with_capacity(n - 1);
    for dim in 0..=n - 2 {
        let mut count = 0;
        for s in enumerate_cubes(n, dim)? {
            if !classify(&s).is_critical() {
                continue;
            }
            count += 1;
            let mb = counter.morse_boundary(&s)?;
            if !mb.boundary.is_empty() {
                return Err(Error::Defect(format!(
                    "Morse boundary of {s} is non-zero: {:?}",
                    mb.boundary.cells()
                )));
            }
        }
        out.push(count);
    }
    Ok(out)
}
