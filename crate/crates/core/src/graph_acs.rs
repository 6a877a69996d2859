//! Anchored configuration spaces of finite graphs.
//!
//! For a loop-free multigraph `X`, a set of anchor vertices `S` and a point
//! count `n`, the space consists of the `n`-tuples of points of `X` whose
//! coordinate set contains `S`. It is a cubical complex: a cell assigns each
//! labelled point to a vertex or to an open edge of `X`, and its dimension is
//! the number of points sitting on edges.
//!
//! For the circle with two vertices and two parallel edges, anchored at both
//! vertices, the cells correspond to the cube labels of [`crate::omega`]:
//! points on the first vertex form `A`, on the second `C`, on the first edge
//! `B` and on the second edge `D`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use petgraph::algo::connected_components;
use petgraph::graph::{NodeIndex, UnGraph};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BasedComplex;
use crate::omega::binomial;

/// Default guard on the number of cells a graph complex may have.
pub const DEFAULT_MAX_CELLS: u128 = 5_000_000;

/// A loop-free multigraph with anchor vertices. Vertices are addressed by
/// index; `ids` are kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchoredGraph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
    anchors: Vec<usize>,
}

impl AnchoredGraph {
    /// Builds a graph from string ids. Repeated edge pairs are parallel edges;
    /// repeated anchors collapse.
    pub fn new<V, E, A>(vertices: V, edges: E, anchors: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String)>,
        A: IntoIterator,
        A::Item: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |id: &str| index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.to_string()));
        let edges = edges
            .into_iter()
            .map(|(u, v)| Ok((lookup(&u)?, lookup(&v)?)))
            .collect::<Result<Vec<_>>>()?;
        let anchors = anchors.into_iter().map(|a| lookup(a.as_ref())).collect::<Result<BTreeSet<_>>>()?;
        AnchoredGraph::from_indices(vertices, edges, anchors.into_iter().collect())
    }

    /// Builds a graph from vertex indices.
    pub fn from_indices(vertices: Vec<String>, edges: Vec<(usize, usize)>, anchors: Vec<usize>) -> Result<Self> {
        let v = vertices.len();
        for &(a, b) in &edges {
            for x in [a, b] {
                if x >= v {
                    return Err(Error::UnknownVertex(format!("#{x}")));
                }
            }
            if a == b {
                return Err(Error::LoopEdge(vertices[a].clone()));
            }
        }
        let mut anchors = anchors;
        anchors.sort_unstable();
        anchors.dedup();
        if let Some(&x) = anchors.iter().find(|&&x| x >= v) {
            return Err(Error::UnknownVertex(format!("#{x}")));
        }
        Ok(AnchoredGraph { vertices, edges, anchors })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    /// `m = |S|`.
    pub fn anchor_count(&self) -> usize {
        self.anchors.len()
    }

    fn symbol_count(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn components(&self) -> usize {
        let mut g = UnGraph::<(), ()>::with_capacity(self.vertices.len(), self.edges.len());
        for _ in &self.vertices {
            g.add_node(());
        }
        for &(a, b) in &self.edges {
            g.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
        }
        connected_components(&g)
    }

    pub fn is_connected(&self) -> bool {
        self.components() == 1
    }

    /// `β_1(X) = |E| - |V| + #components`.
    pub fn first_betti(&self) -> usize {
        self.edges.len() + self.components() - self.vertices.len()
    }

    /// Number of cells of the anchored complex with `n` points, by inclusion
    /// and exclusion over uncovered anchors. `None` on overflow.
    pub fn cell_count(&self, n: usize) -> Option<u128> {
        let (v, e, m) = (self.vertices.len() as u128, self.edges.len() as u128, self.anchors.len());
        let n32 = u32::try_from(n).ok()?;
        let mut total: i128 = 0;
        for k in 0..=m {
            // maps [n] -> V ∪ E avoiding k fixed anchors
            let term = (v + e - k as u128).checked_pow(n32)?;
            let term = term.checked_mul(u128::from(binomial(m, k)))?;
            let term = i128::try_from(term).ok()?;
            total = if k % 2 == 0 { total.checked_add(term)? } else { total.checked_sub(term)? };
        }
        u128::try_from(total).ok()
    }
}

/// The JSON form of a graph with its point count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInput {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub anchors: Vec<String>,
    pub n: usize,
}

impl GraphInput {
    pub fn into_graph(self) -> Result<(AnchoredGraph, usize)> {
        let g = AnchoredGraph::new(
            self.vertices,
            self.edges.into_iter().map(|[a, b]| (a, b)),
            self.anchors,
        )?;
        Ok((g, self.n))
    }
}

/// A cell of the graph complex: `symbols[i]` is the cell holding point `i + 1`,
/// a vertex index below `|V|` or `|V| + edge index` otherwise.
///
/// The derived order is the mixed-radix order with point 1 most significant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCube {
    pub symbols: Vec<u32>,
}

impl GraphCube {
    pub fn dimension(&self, g: &AnchoredGraph) -> usize {
        let v = g.vertices.len() as u32;
        self.symbols.iter().filter(|&&s| s >= v).count()
    }

    /// Each point on an edge is pushed to either endpoint.
    pub fn facets(&self, g: &AnchoredGraph) -> Vec<GraphCube> {
        let v = g.vertices.len() as u32;
        let mut out = Vec::new();
        for (i, &s) in self.symbols.iter().enumerate() {
            if s >= v {
                let (a, b) = g.edges[(s - v) as usize];
                for end in [a, b] {
                    let mut symbols = self.symbols.clone();
                    symbols[i] = end as u32;
                    out.push(GraphCube { symbols });
                }
            }
        }
        out
    }

    pub fn display<'a>(&'a self, g: &'a AnchoredGraph) -> impl fmt::Display + 'a {
        CubeDisplay { cube: self, graph: g }
    }
}

struct CubeDisplay<'a> {
    cube: &'a GraphCube,
    graph: &'a AnchoredGraph,
}

impl fmt::Display for CubeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.graph.vertices.len() as u32;
        f.write_str("(")?;
        for (i, &s) in self.cube.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if s < v {
                f.write_str(&self.graph.vertices[s as usize])?;
            } else {
                let (a, b) = self.graph.edges[(s - v) as usize];
                write!(f, "e{}[{}-{}]", s - v, self.graph.vertices[a], self.graph.vertices[b])?;
            }
        }
        f.write_str(")")
    }
}

fn enumerate(g: &AnchoredGraph, n: usize) -> Vec<Vec<GraphCube>> {
    let v = g.vertices.len();
    let symbols = g.symbol_count() as u32;
    let mut is_anchor = vec![false; v];
    for &a in &g.anchors {
        is_anchor[a] = true;
    }
    let mut hits = vec![0usize; v];
    let mut by_dim: Vec<Vec<GraphCube>> = Vec::new();
    let mut current = Vec::with_capacity(n);

    struct Walk<'a> {
        n: usize,
        v: usize,
        symbols: u32,
        is_anchor: &'a [bool],
        hits: &'a mut [usize],
        current: &'a mut Vec<u32>,
        by_dim: &'a mut Vec<Vec<GraphCube>>,
    }

    fn walk(w: &mut Walk<'_>, uncovered: usize, dim: usize) {
        let remaining = w.n - w.current.len();
        if remaining < uncovered {
            return;
        }
        if remaining == 0 {
            if w.by_dim.len() <= dim {
                w.by_dim.resize_with(dim + 1, Vec::new);
            }
            w.by_dim[dim].push(GraphCube { symbols: w.current.clone() });
            return;
        }
        for s in 0..w.symbols {
            let su = s as usize;
            w.current.push(s);
            if su < w.v {
                let fresh = w.is_anchor[su] && w.hits[su] == 0;
                w.hits[su] += 1;
                walk(w, uncovered - usize::from(fresh), dim);
                w.hits[su] -= 1;
            } else {
                walk(w, uncovered, dim + 1);
            }
            w.current.pop();
        }
    }

    let mut w = Walk {
        n,
        v,
        symbols,
        is_anchor: &is_anchor,
        hits: &mut hits,
        current: &mut current,
        by_dim: &mut by_dim,
    };
    walk(&mut w, g.anchors.len(), 0);
    by_dim
}

/// The anchored complex of `n` points on `g`, graded by dimension. Empty when
/// `n < |S|`. Fails with [`Error::TooLarge`] before enumerating more than
/// `max_cells` cells.
pub fn build_complex(g: &AnchoredGraph, n: usize, max_cells: u128) -> Result<BasedComplex<GraphCube>> {
    if n < g.anchor_count() {
        return BasedComplex::new(Vec::new(), Vec::new());
    }
    let cells = g.cell_count(n).unwrap_or(u128::MAX);
    if cells > max_cells {
        return Err(Error::TooLarge { cells, limit: max_cells });
    }
    let by_dim = enumerate(g, n);
    BasedComplex::from_facets(by_dim, |c| c.facets(g))
}

/// `Z2` Betti numbers of the anchored complex.
pub fn betti_graph(g: &AnchoredGraph, n: usize, max_cells: u128) -> Result<Vec<usize>> {
    Ok(build_complex(g, n, max_cells)?.betti_numbers())
}

/// `f(m, n) = Σ_{k=0}^{m-2} (-1)^k C(m, k) (m-1-k)^n`, the number of
/// `(n-m)`-spheres in the anchored space of a tree with `m` anchors.
pub fn tree_sphere_count(m: usize, n: usize) -> Result<i128> {
    if m < 2 {
        return Err(Error::Precondition(format!("tree sphere count needs m >= 2, got {m}")));
    }
    let n32 = u32::try_from(n).map_err(|_| Error::Overflow("tree_sphere_count"))?;
    let mut total: i128 = 0;
    for k in 0..=m - 2 {
        let term = ((m - 1 - k) as i128)
            .checked_pow(n32)
            .and_then(|p| p.checked_mul(i128::from(binomial(m, k))))
            .ok_or(Error::Overflow("tree_sphere_count"))?;
        total = if k % 2 == 0 { total.checked_add(term) } else { total.checked_sub(term) }
            .ok_or(Error::Overflow("tree_sphere_count"))?;
    }
    Ok(total)
}

/// `ζ_m = (m+1)! (m-2) / 2 + 1`.
pub fn zeta(m: usize) -> i128 {
    let fact: i128 = (1..=m as i128 + 1).product();
    fact * (m as i128 - 2) / 2 + 1
}

/// Summary of `Hom(K_m, K_{m+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomGraphSummary {
    pub m: usize,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub regular: bool,
    pub components: usize,
    pub connected: bool,
    pub beta1: usize,
    pub zeta: i128,
    /// `m`-regular, connected and `β_1 = ζ_m`.
    pub ok: bool,
}

/// Builds the graph on injections `[m] → [m+1]`, adjacent when they differ in
/// exactly one argument, and checks its cycle rank against `ζ_m`.
pub fn hom_graph(m: usize) -> Result<HomGraphSummary> {
    if m == 0 {
        return Err(Error::Precondition("hom graph needs m >= 1".into()));
    }
    if m > 10 {
        return Err(Error::Precondition(format!("hom graph with m = {m} is too large")));
    }
    // an injection is stored as a permutation of [m+1]; its last entry is the missing value
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut current: Vec<u8> = (0..=m as u8).collect();
    permutations(&mut current, 0, &mut perms);
    perms.sort_unstable();
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();

    let mut g = UnGraph::<(), ()>::with_capacity(perms.len(), perms.len() * m / 2);
    for _ in &perms {
        g.add_node(());
    }
    let mut degree = vec![0usize; perms.len()];
    for (i, p) in perms.iter().enumerate() {
        for arg in 0..m {
            let mut q = p.clone();
            q.swap(arg, m);
            let j = index[q.as_slice()];
            degree[i] += 1;
            if i < j {
                g.add_edge(NodeIndex::new(i), NodeIndex::new(j), ());
            }
        }
    }
    let components = connected_components(&g);
    let (vertices, edges) = (g.node_count(), g.edge_count());
    let min_degree = degree.iter().copied().min().unwrap_or(0);
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let beta1 = edges + components - vertices;
    let zeta = zeta(m);
    let regular = min_degree == m && max_degree == m;
    Ok(HomGraphSummary {
        m,
        vertices,
        edges,
        min_degree,
        max_degree,
        regular,
        components,
        connected: components == 1,
        beta1,
        zeta,
        ok: regular && components == 1 && beta1 as i128 == zeta,
    })
}

fn permutations(xs: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == xs.len() {
        out.push(xs.clone());
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permutations(xs, k + 1, out);
        xs.swap(k, i);
    }
}

/// Disjoint union, with vertex ids prefixed by the component index.
pub fn disjoint_union(components: &[AnchoredGraph]) -> AnchoredGraph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut anchors = Vec::new();
    for (i, g) in components.iter().enumerate() {
        let offset = vertices.len();
        vertices.extend(g.vertices.iter().map(|v| format!("{i}:{v}")));
        edges.extend(g.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        anchors.extend(g.anchors.iter().map(|&a| a + offset));
    }
    AnchoredGraph { vertices, edges, anchors }
}

/// Betti numbers of the anchored space of a disjoint union, predicted from
/// its connected components.
///
/// A configuration splits by which points land in which component, so the
/// space is a disjoint union over label assignments of products of component
/// spaces. Assignments with the same count vector `φ` give homeomorphic
/// pieces, hence each `φ` contributes `multinomial(n; φ)` copies of the
/// Künneth product of the component Betti vectors.
pub fn partition_betti(components: &[AnchoredGraph], n: usize, max_cells: u128) -> Result<Vec<usize>> {
    if let Some(i) = components.iter().position(|g| !g.is_connected()) {
        return Err(Error::Precondition(format!("component {i} is not connected")));
    }
    let mut cache: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut total: Vec<usize> = Vec::new();
    let mut counts = vec![0usize; components.len()];
    partition_walk(components, n, 0, n, &mut counts, &mut cache, &mut total, max_cells)?;
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn partition_walk(
    comps: &[AnchoredGraph],
    n: usize,
    i: usize,
    left: usize,
    counts: &mut Vec<usize>,
    cache: &mut HashMap<(usize, usize), Vec<usize>>,
    total: &mut Vec<usize>,
    max_cells: u128,
) -> Result<()> {
    if i == comps.len() {
        if left > 0 {
            return Ok(());
        }
        let mut product = vec![1usize];
        for (j, &k) in counts.iter().enumerate() {
            let betti = match cache.entry((j, k)) {
                std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
                std::collections::hash_map::Entry::Vacant(e) => e.insert(betti_graph(&comps[j], k, max_cells)?),
            };
            product = convolve(&product, betti)?;
        }
        let weight = multinomial(n, counts)?;
        if total.len() < product.len() {
            total.resize(product.len(), 0);
        }
        for (t, p) in total.iter_mut().zip(&product) {
            *t = p
                .checked_mul(weight)
                .and_then(|x| t.checked_add(x))
                .ok_or(Error::Overflow("partition_betti"))?;
        }
        return Ok(());
    }
    for k in comps[i].anchor_count()..=left {
        counts[i] = k;
        partition_walk(comps, n, i + 1, left - k, counts, cache, total, max_cells)?;
    }
    counts[i] = 0;
    Ok(())
}

/// Künneth product of Betti vectors over a field.
pub fn convolve(x: &[usize], y: &[usize]) -> Result<Vec<usize>> {
    if x.is_empty() || y.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0usize; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            out[i + j] = a
                .checked_mul(b)
                .and_then(|p| out[i + j].checked_add(p))
                .ok_or(Error::Overflow("convolve"))?;
        }
    }
    Ok(out)
}

fn multinomial(n: usize, parts: &[usize]) -> Result<usize> {
    let mut left = n;
    let mut out: usize = 1;
    for &k in parts {
        let c = usize::try_from(binomial(left, k)).map_err(|_| Error::Overflow("multinomial"))?;
        out = out.checked_mul(c).ok_or(Error::Overflow("multinomial"))?;
        left -= k;
    }
    Ok(out)
}

/// Small graphs used in examples and tests.
pub mod examples {
    use super::AnchoredGraph;

    fn ids(k: usize) -> Vec<String> {
        (0..k).map(|i| i.to_string()).collect()
    }

    /// Two vertices joined by two parallel edges; anchors at the listed vertices.
    pub fn circle2(anchors: &[usize]) -> AnchoredGraph {
        AnchoredGraph::from_indices(ids(2), vec![(0, 1), (0, 1)], anchors.to_vec()).unwrap()
    }

    /// Two vertices joined by `k` parallel edges, anchored at vertex 0.
    pub fn theta(k: usize) -> AnchoredGraph {
        AnchoredGraph::from_indices(ids(2), vec![(0, 1); k], vec![0]).unwrap()
    }

    /// Path on `k` vertices anchored at both ends.
    pub fn path(k: usize) -> AnchoredGraph {
        let edges = (1..k).map(|i| (i - 1, i)).collect();
        AnchoredGraph::from_indices(ids(k), edges, vec![0, k - 1]).unwrap()
    }

    /// A single edge anchored at one endpoint.
    pub fn interval() -> AnchoredGraph {
        AnchoredGraph::from_indices(ids(2), vec![(0, 1)], vec![0]).unwrap()
    }

    /// A centre with `legs` paths of `length` edges, anchored at the tips.
    pub fn spider(legs: usize, length: usize) -> AnchoredGraph {
        let mut edges = Vec::new();
        let mut anchors = Vec::new();
        let mut next = 1;
        for _ in 0..legs {
            let mut prev = 0;
            for _ in 0..length {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            anchors.push(prev);
        }
        AnchoredGraph::from_indices(ids(next), edges, anchors).unwrap()
    }

    /// Star with `legs` leaves anchored at the leaves.
    pub fn star(legs: usize) -> AnchoredGraph {
        spider(legs, 1)
    }

    /// A single vertex anchored at itself.
    pub fn point() -> AnchoredGraph {
        AnchoredGraph::from_indices(ids(1), Vec::new(), vec![0]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;
    use crate::omega::{betti_formula, enumerate_cubes, CubeLabel};
    use crate::subset::Subset;

    const MAX: u128 = DEFAULT_MAX_CELLS;

    fn to_label(c: &GraphCube, n: usize) -> CubeLabel {
        let mut parts = [Subset::EMPTY; 4];
        for (i, &s) in c.symbols.iter().enumerate() {
            // vertex 0, vertex 1, edge 0, edge 1 map to A, C, B, D
            let slot = [0, 2, 1, 3][s as usize];
            parts[slot] = parts[slot].with(i + 1);
        }
        CubeLabel::new(parts[0], parts[1], parts[2], parts[3], n).unwrap()
    }

    #[test]
    fn circle_matches_omega_cells() {
        let g = circle2(&[0, 1]);
        for n in 2..=6 {
            let cx = build_complex(&g, n, MAX).unwrap();
            assert_eq!(cx.top_dim(), Some(n - 2));
            for (d, cells) in cx.cells_by_dim().iter().enumerate() {
                let mut labels: Vec<CubeLabel> = cells.iter().map(|c| to_label(c, n)).collect();
                labels.sort();
                assert_eq!(labels, enumerate_cubes(n, d).unwrap(), "n={n} d={d}");
                for c in cells {
                    let mut faces: Vec<CubeLabel> = c.facets(&g).iter().map(|f| to_label(f, n)).collect();
                    faces.sort();
                    let mut expected = to_label(c, n).facets();
                    expected.sort();
                    assert_eq!(faces, expected);
                }
            }
        }
        assert_eq!(build_complex(&g, 3, MAX).unwrap().f_vector(), vec![6, 12]);
    }

    #[test]
    fn small_examples() {
        assert_eq!(build_complex(&interval(), 2, MAX).unwrap().f_vector(), vec![3, 2]);
        assert_eq!(build_complex(&path(3), 2, MAX).unwrap().f_vector(), vec![2]);
        assert_eq!(betti_graph(&circle2(&[0, 1]), 3, MAX).unwrap(), vec![1, 7]);
        assert_eq!(betti_graph(&circle2(&[0]), 3, MAX).unwrap(), vec![1, 3, 3]);
        assert_eq!(betti_graph(&path(3), 3, MAX).unwrap(), vec![1, 1]);
        assert_eq!(betti_graph(&interval(), 2, MAX).unwrap(), vec![1, 0]);
    }

    #[test]
    fn degenerate_complexes() {
        assert!(build_complex(&path(3), 1, MAX).unwrap().cells_by_dim().is_empty());
        assert_eq!(betti_graph(&path(3), 1, MAX).unwrap(), Vec::<usize>::new());
        let free = AnchoredGraph::from_indices(vec!["x".into()], Vec::new(), Vec::new()).unwrap();
        assert_eq!(betti_graph(&free, 0, MAX).unwrap(), vec![1]);
    }

    #[test]
    fn input_errors() {
        let e = |v: &[&str], es: &[(&str, &str)], a: &[&str]| {
            AnchoredGraph::new(
                v.iter().map(|s| s.to_string()),
                es.iter().map(|&(x, y)| (x.to_string(), y.to_string())),
                a.iter().copied(),
            )
        };
        assert!(matches!(e(&["a"], &[("a", "a")], &["a"]), Err(Error::LoopEdge(_))));
        assert!(matches!(e(&["a"], &[("a", "b")], &["a"]), Err(Error::UnknownVertex(_))));
        assert!(matches!(e(&["a"], &[], &["z"]), Err(Error::UnknownVertex(_))));
        assert!(matches!(e(&["a", "a"], &[], &["a"]), Err(Error::DuplicateVertex(_))));
        let g = e(&["a", "b"], &[("a", "b"), ("b", "a")], &["b", "a", "a"]).unwrap();
        assert_eq!(g.anchors(), &[0, 1]);
        assert_eq!(g.edges().len(), 2);
    }

    #[test]
    fn json_input() {
        let text = r#"{"vertices":["a","m","b"],"edges":[["a","m"],["m","b"]],"anchors":["a","b"],"n":3}"#;
        let input: GraphInput = serde_json::from_str(text).unwrap();
        let (g, n) = input.into_graph().unwrap();
        assert_eq!(n, 3);
        assert_eq!(betti_graph(&g, n, MAX).unwrap(), vec![1, 1]);
    }

    #[test]
    fn size_guard() {
        let g = circle2(&[0, 1]);
        assert_eq!(g.cell_count(3), Some(18));
        assert!(matches!(build_complex(&g, 3, 17), Err(Error::TooLarge { cells: 18, limit: 17 })));
        for n in 0..=6 {
            let total: usize = build_complex(&spider(3, 2), n, MAX).unwrap().f_vector().iter().sum();
            assert_eq!(spider(3, 2).cell_count(n), Some(total as u128));
        }
    }

    #[test]
    fn omega_consistency() {
        for n in 2..=6 {
            let expected: Vec<usize> = betti_formula(n).unwrap().into_iter().map(|b| b as usize).collect();
            assert_eq!(betti_graph(&circle2(&[0, 1]), n, MAX).unwrap(), expected);
        }
    }

    #[test]
    fn punctured_torus() {
        for n in 1..=5 {
            let expected: Vec<usize> = (0..n).map(|d| binomial(n, d) as usize).collect();
            assert_eq!(betti_graph(&circle2(&[0]), n, MAX).unwrap(), expected);
        }
    }

    #[test]
    fn sphere_counts() {
        assert_eq!(tree_sphere_count(2, 4).unwrap(), 1);
        assert_eq!(tree_sphere_count(3, 4).unwrap(), 13);
        assert_eq!(tree_sphere_count(4, 5).unwrap(), 121);
        assert!(tree_sphere_count(1, 4).is_err());
        // n = m: the m! points form a wedge of m! - 1 zero-spheres
        for m in 2..=6 {
            let fact: i128 = (1..=m as i128).product();
            assert_eq!(tree_sphere_count(m, m).unwrap(), fact - 1);
        }
    }

    fn tree_prediction(m: usize, n: usize) -> Vec<usize> {
        let f = tree_sphere_count(m, n).unwrap() as usize;
        let mut v = vec![0; n - m + 1];
        v[0] = 1;
        v[n - m] += f;
        if n == m {
            v[0] = f + 1;
        }
        v
    }

    #[test]
    fn tree_theorem() {
        for n in 2..=5 {
            assert_eq!(betti_graph(&path(3), n, MAX).unwrap(), tree_prediction(2, n), "path n={n}");
        }
        for n in 3..=5 {
            assert_eq!(betti_graph(&star(3), n, MAX).unwrap(), tree_prediction(3, n), "star n={n}");
        }
        // the count only depends on |S|, not on where the anchors sit
        let inner = AnchoredGraph::from_indices(
            (0..4).map(|i| i.to_string()).collect(),
            vec![(0, 1), (1, 2), (2, 3)],
            vec![1, 2],
        )
        .unwrap();
        assert_eq!(betti_graph(&inner, 4, MAX).unwrap(), tree_prediction(2, 4));
    }

    #[test]
    fn one_extra_point() {
        // m = 2 on the circle and m = 1 on a theta graph with β_1(X) = 2
        let circle = circle2(&[0, 1]);
        assert_eq!(betti_graph(&circle, 3, MAX).unwrap(), vec![1, (zeta(2) + 6) as usize]);
        let th = theta(3);
        assert_eq!(th.first_betti(), 2);
        assert_eq!(betti_graph(&th, 2, MAX).unwrap(), vec![1, 4]);
    }

    #[test]
    fn hom_graphs() {
        let expect = [(1, 2, 1, 0), (2, 6, 6, 1), (3, 24, 36, 13), (4, 120, 240, 121)];
        for (m, v, e, b) in expect {
            let s = hom_graph(m).unwrap();
            assert_eq!((s.vertices, s.edges, s.beta1), (v, e, b), "m={m}");
            assert!(s.ok && s.regular && s.connected);
            assert_eq!(s.zeta, b as i128);
        }
        assert!(hom_graph(0).is_err());
    }

    #[test]
    fn partitions() {
        let pts = [point(), point()];
        assert_eq!(partition_betti(&pts, 2, MAX).unwrap(), vec![2]);
        assert_eq!(betti_graph(&disjoint_union(&pts), 2, MAX).unwrap(), vec![2]);

        assert_eq!(partition_betti(&[path(3)], 4, MAX).unwrap(), betti_graph(&path(3), 4, MAX).unwrap());

        let two = [interval(), interval()];
        for n in 2..=4 {
            assert_eq!(
                partition_betti(&two, n, MAX).unwrap(),
                betti_graph(&disjoint_union(&two), n, MAX).unwrap(),
                "n={n}"
            );
        }
        assert_eq!(partition_betti(&two, 1, MAX).unwrap(), Vec::<usize>::new());

        let mixed = [circle2(&[0]), path(3), point()];
        for n in 4..=5 {
            assert_eq!(
                partition_betti(&mixed, n, MAX).unwrap(),
                betti_graph(&disjoint_union(&mixed), n, MAX).unwrap(),
                "n={n}"
            );
        }
        assert!(partition_betti(&[disjoint_union(&two)], 2, MAX).is_err());
    }

    #[test]
    fn display() {
        let g = interval();
        let c = GraphCube { symbols: vec![0, 2] };
        assert_eq!(c.display(&g).to_string(), "(0,e0[0-1])");
        assert_eq!(c.dimension(&g), 1);
    }
}
