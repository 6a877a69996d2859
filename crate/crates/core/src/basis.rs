//! Explicit homology generators of `Ω_n`.
//!
//! Two families of cycles span the homology:
//!
//! * `ρ(A, C)`: fix `A` and `C` and let every remaining point choose an arc,
//!   i.e. the sum of `(A, B, C, D)` over all splits `B ⊔ D = [n] - (A ∪ C)`.
//! * `γ(G)` for `|G| ≥ 2`: with `a = min G`, `c = max G`, `I = [a, c] - G`
//!   and `E = [n] - [a, c]`, the sum of all top cubes `({i}, B, {j}, D)` with
//!   `i, j ∈ [a, c]`, `D ⊆ I ∪ E` and `B ⊆ G ∪ E`.
//!
//! [`certify_basis`] checks the strong form: every generator is a cycle whose
//! support meets the critical cells of the matching in exactly one cube, and
//! these cubes are distinct and exhaust the critical cells. This holds below
//! the top dimension. In dimension `n - 2` it fails for `|G| = 2`: `γ({a, c})`
//! contains both `(a, ∅, c, S)` and `(c, ∅, a, S)`, and the second one is
//! critical as well (it is also the unique critical cube of `ρ({c}, {a})`).
//! The pairing matrix is then unitriangular rather than a permutation, which
//! still certifies a basis; [`certify_pairing`] and [`homology_independence`]
//! check that weaker, sufficient condition.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::morse::{classify, critical_cells};
use crate::omega::{boundary_chain, check_n, enumerate_cubes, Chain, CubeLabel};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorSpec {
    Rho { a: Subset, c: Subset },
    Gamma { g: Subset },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Rho { a, c } => write!(f, "rho({a},{c})"),
            GeneratorSpec::Gamma { g } => write!(f, "gamma({g})"),
        }
    }
}

impl Serialize for GeneratorSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub spec: GeneratorSpec,
    pub chain: Chain,
}

fn check_subset(s: Subset, n: usize, what: &str) -> Result<()> {
    if s.is_subset(Subset::full(n)) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} = {s} is not a subset of [{n}]")))
    }
}

/// `ρ(A, C) = Σ_{B ⊔ D = S} (A, B, C, D)` with `S = [n] - (A ∪ C)`.
pub fn rho(a: Subset, c: Subset, n: usize) -> Result<Chain> {
    check_n(n)?;
    check_subset(a, n, "A")?;
    check_subset(c, n, "C")?;
    if a.is_empty() || c.is_empty() {
        return Err(Error::Precondition("rho needs non-empty A and C".into()));
    }
    if !a.is_disjoint(c) {
        return Err(Error::Precondition(format!("rho needs disjoint A and C, got {a} and {c}")));
    }
    let free = Subset::full(n).difference(a.union(c));
    let cells = free.subsets().map(|b| CubeLabel::from_parts(a, b, c, free.difference(b), n));
    Chain::from_cells(n, free.len(), cells)
}

/// `γ(G)`, a cycle of dimension `n - 2`.
pub fn gamma(g: Subset, n: usize) -> Result<Chain> {
    check_n(n)?;
    check_subset(g, n, "G")?;
    if g.len() < 2 {
        return Err(Error::Precondition(format!("gamma needs |G| >= 2, got {g}")));
    }
    let (lo, hi) = (g.min().unwrap(), g.max().unwrap());
    let span = Subset::interval(lo, hi);
    let outside = Subset::full(n).difference(span);
    let inner = span.difference(g);
    let mut cells = Vec::new();
    for i in span.iter() {
        for j in span.iter().filter(|&j| j != i) {
            let rest = Subset::full(n).without(i).without(j);
            // points of G must ride in B, points of I in D, points of E are free
            let forced_b = rest.intersection(g);
            let forced_d = rest.intersection(inner);
            let free = rest.intersection(outside);
            for t in free.subsets() {
                cells.push(CubeLabel::from_parts(
                    Subset::singleton(i),
                    forced_b.union(t),
                    Subset::singleton(j),
                    forced_d.union(free.difference(t)),
                    n,
                ));
            }
        }
    }
    Chain::from_cells(n, n - 2, cells)
}

pub fn build(spec: GeneratorSpec, n: usize) -> Result<Chain> {
    match spec {
        GeneratorSpec::Rho { a, c } => rho(a, c, n),
        GeneratorSpec::Gamma { g } => gamma(g, n),
    }
}

/// Critical cubes in the support of a chain, canonical order.
pub fn critical_support(ch: &Chain) -> Vec<CubeLabel> {
    ch.cells().iter().filter(|s| classify(s).is_critical()).copied().collect()
}

/// Critical cubes that the case analysis of `ρ(A, C)` predicts in its support:
///
/// 1. `|A| ≥ 2`: none;
/// 2. `A = {a}`, `|C| ≥ 2`: `(a, ∅, C, S)` if `a > C`, otherwise none;
/// 3. `A = {a}`, `C = {c}`, `c - a ≤ 1`: `(a, ∅, c, S)`;
/// 4. `A = {a}`, `C = {c}`, `c - a ≥ 2`: `(a, T, c, S - T)` for `T = ∅` or `a < T < c`.
///
/// Worked out from the shape of the critical cubes, independently of [`classify`].
pub fn rho_support_prediction(a: Subset, c: Subset, n: usize) -> Result<Vec<CubeLabel>> {
    rho(a, c, n)?;
    let free = Subset::full(n).difference(a.union(c));
    let mut out = Vec::new();
    if a.len() >= 2 {
        return Ok(out);
    }
    let a0 = a.min().unwrap();
    if c.len() >= 2 {
        if a0 > c.max().unwrap() {
            out.push(CubeLabel::from_parts(a, Subset::EMPTY, c, free, n));
        }
        return Ok(out);
    }
    let c0 = c.min().unwrap();
    if c0 < a0 + 2 {
        out.push(CubeLabel::from_parts(a, Subset::EMPTY, c, free, n));
        return Ok(out);
    }
    let between = free.intersection(Subset::interval(a0 + 1, c0 - 1));
    for t in between.subsets() {
        out.push(CubeLabel::from_parts(a, t, c, free.difference(t), n));
    }
    out.sort_unstable();
    Ok(out)
}

/// Generator specs of dimension `d`, in canonical order: `γ`'s by the bit
/// encoding of `G`, then `ρ`'s by `(a, C)`.
pub fn generator_specs(n: usize, d: usize) -> Result<Vec<GeneratorSpec>> {
    check_n(n)?;
    let full = Subset::full(n);
    let mut out = Vec::new();
    if d + 3 <= n {
        let mut rhos = Vec::new();
        for c in Subset::k_subsets(n, n - 1 - d) {
            let top = c.max().unwrap();
            for a in full.difference(c).iter().filter(|&a| a > top) {
                rhos.push((a, c));
            }
        }
        rhos.sort_unstable();
        out.extend(rhos.into_iter().map(|(a, c)| GeneratorSpec::Rho { a: Subset::singleton(a), c }));
    } else if d + 2 == n {
        for g in full.subsets().filter(|g| g.len() >= 2) {
            out.push(GeneratorSpec::Gamma { g });
        }
        for a in 1..=n {
            for c in 1..a {
                out.push(GeneratorSpec::Rho { a: Subset::singleton(a), c: Subset::singleton(c) });
            }
        }
    }
    Ok(out)
}

pub fn generator_set(n: usize, d: usize) -> Result<Vec<Generator>> {
    generator_specs(n, d)?
        .into_iter()
        .map(|spec| Ok(Generator { spec, chain: build(spec, n)? }))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

/// Machine-readable outcome of [`certify_basis`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCertificate {
    pub n: usize,
    pub dim: usize,
    pub status: Status,
    /// `[generator-id, critical-cell-id]` pairs.
    pub bijection: Vec<[String; 2]>,
    pub failures: Vec<String>,
}

impl BasisCertificate {
    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }
}

/// Checks that every generator of dimension `d` is a cycle with exactly one
/// critical cube in its support, and that generator ↦ critical cube is a
/// bijection onto the critical `d`-cubes.
pub fn certify_basis(n: usize, d: usize) -> Result<BasisCertificate> {
    let generators = generator_set(n, d)?;
    let critical = critical_cells(n, d)?;
    Ok(certify(n, d, &generators, &critical))
}

/// Certification of an arbitrary family against a list of critical cubes.
pub fn certify(n: usize, d: usize, generators: &[Generator], critical: &[CubeLabel]) -> BasisCertificate {
    let mut failures = Vec::new();
    let mut bijection = Vec::new();
    let mut hits: BTreeMap<CubeLabel, Vec<GeneratorSpec>> =
        critical.iter().map(|c| (*c, Vec::new())).collect();
    for gen in generators {
        if gen.chain.dim() != d {
            failures.push(format!("{} has dimension {}, expected {d}", gen.spec, gen.chain.dim()));
            continue;
        }
        let bd = boundary_chain(&gen.chain);
        if !bd.is_empty() {
            failures.push(format!("{} is not a cycle ({} boundary cells)", gen.spec, bd.len()));
        }
        match critical_support(&gen.chain).as_slice() {
            [cell] => match hits.get_mut(cell) {
                Some(owners) => {
                    owners.push(gen.spec);
                    bijection.push([gen.spec.to_string(), cell.to_string()]);
                }
                None => failures.push(format!("{} meets {cell}, which is not a listed critical cell", gen.spec)),
            },
            support => failures.push(format!(
                "{} has {} critical cells in its support, expected 1",
                gen.spec,
                support.len()
            )),
        }
    }
    for (cell, owners) in &hits {
        match owners.len() {
            1 => {}
            0 => failures.push(format!("critical cell {cell} is not hit by any generator")),
            k => failures.push(format!("critical cell {cell} is hit by {k} generators")),
        }
    }
    BasisCertificate {
        n,
        dim: d,
        status: if failures.is_empty() { Status::Ok } else { Status::Fail },
        bijection,
        failures,
    }
}

/// Dual cochains of the critical `d`-cubes evaluated on the generators:
/// entry `(i, j)` is 1 iff critical cube `i` lies in the support of generator `j`.
pub fn pairing_matrix(n: usize, d: usize) -> Result<Gf2Matrix> {
    let critical = critical_cells(n, d)?;
    let generators = generator_set(n, d)?;
    Ok(pairing_from(&critical, &generators))
}

/// Outcome of [`certify_pairing`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingCertificate {
    pub n: usize,
    pub dim: usize,
    pub critical_cells: usize,
    pub generators: usize,
    pub rank: usize,
    /// Square and of full rank over GF(2).
    pub invertible: bool,
    pub permutation: bool,
    /// Every generator is a cycle.
    pub cycles: bool,
    /// `[generator-id, critical-cell-id]` for generators meeting more than one
    /// critical cube.
    pub extra_entries: Vec<[String; 2]>,
    pub status: Status,
}

/// Certifies the generators of dimension `d` as a homology basis through the
/// pairing with dual cochains of critical cubes.
///
/// The Morse boundary vanishes, so those cochains form a cohomology basis and
/// evaluation against them is an isomorphism `H_d → Z2^{Crit_d}`. A family of
/// cycles is therefore a basis exactly when its pairing matrix is invertible.
pub fn certify_pairing(n: usize, d: usize) -> Result<PairingCertificate> {
    let critical = critical_cells(n, d)?;
    let generators = generator_set(n, d)?;
    let m = pairing_from(&critical, &generators);
    let rank = m.rank();
    let cycles = generators.iter().all(|g| boundary_chain(&g.chain).is_empty());
    let extra_entries = generators
        .iter()
        .filter_map(|g| {
            let support = critical_support(&g.chain);
            (support.len() > 1).then(|| {
                support.into_iter().map(move |c| [g.spec.to_string(), c.to_string()])
            })
        })
        .flatten()
        .collect();
    let invertible = m.rows() == m.cols() && rank == m.rows();
    Ok(PairingCertificate {
        n,
        dim: d,
        critical_cells: m.rows(),
        generators: m.cols(),
        rank,
        invertible,
        permutation: m.as_permutation().is_some(),
        cycles,
        extra_entries,
        status: if invertible && cycles { Status::Ok } else { Status::Fail },
    })
}

/// Result of [`homology_independence`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCheck {
    pub n: usize,
    pub dim: usize,
    pub generators: usize,
    pub boundary_rank: usize,
    /// `rank [∂_{d+1} | generators] - rank ∂_{d+1}`: the dimension of the span
    /// of the generators in homology.
    pub homology_rank: usize,
}

impl IndependenceCheck {
    /// The generators are linearly independent in homology.
    pub fn independent(&self) -> bool {
        self.homology_rank == self.generators
    }
}

/// Brute-force GF(2) check that the generators are independent in homology,
/// without reference to the matching.
pub fn homology_independence(n: usize, d: usize) -> Result<IndependenceCheck> {
    let cells = enumerate_cubes(n, d)?;
    let index: std::collections::HashMap<CubeLabel, usize> =
        cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let column = |ch: &Chain| -> Vec<usize> { ch.cells().iter().map(|c| index[c]).collect() };
    let higher = enumerate_cubes(n, d + 1)?;
    let boundary_cols: Vec<Vec<usize>> =
        higher.iter().map(|s| s.facets().iter().map(|f| index[f]).collect()).collect();
    let generators = generator_set(n, d)?;
    let boundary = Gf2Matrix::from_columns(cells.len(), boundary_cols.iter().cloned())?;
    let stacked = Gf2Matrix::from_columns(
        cells.len(),
        boundary_cols.into_iter().chain(generators.iter().map(|g| column(&g.chain))),
    )?;
    let boundary_rank = boundary.rank();
    Ok(IndependenceCheck {
        n,
        dim: d,
        generators: generators.len(),
        boundary_rank,
        homology_rank: stacked.rank() - boundary_rank,
    })
}

fn pairing_from(critical: &[CubeLabel], generators: &[Generator]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(critical.len(), generators.len());
    for (j, gen) in generators.iter().enumerate() {
        for (i, cell) in critical.iter().enumerate() {
            if gen.chain.contains(cell) {
                m.set(i, j, true);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega::betti_formula;

    fn s(xs: &[usize]) -> Subset {
        Subset::from_elems(xs.iter().copied())
    }

    fn cube(a: &[usize], b: &[usize], c: &[usize], d: &[usize], n: usize) -> CubeLabel {
        CubeLabel::from_lists(a, b, c, d, n)
    }

    #[test]
    fn rho_examples() {
        let r = rho(s(&[3]), s(&[1, 2]), 3).unwrap();
        assert_eq!(r.cells().iter().copied().collect::<Vec<_>>(), vec![cube(&[3], &[], &[1, 2], &[], 3)]);

        let r = rho(s(&[2]), s(&[1]), 3).unwrap();
        let mut expected = vec![cube(&[2], &[3], &[1], &[], 3), cube(&[2], &[], &[1], &[3], 3)];
        expected.sort();
        assert_eq!(r.cells().iter().copied().collect::<Vec<_>>(), expected);
        assert!(boundary_chain(&r).is_empty());

        let r = rho(s(&[1]), s(&[3]), 3).unwrap();
        assert_eq!((r.len(), r.dim()), (2, 1));

        assert!(rho(s(&[1]), s(&[1, 2]), 3).is_err());
        assert!(rho(s(&[]), s(&[1, 2]), 3).is_err());
        assert!(rho(s(&[1]), s(&[4]), 3).is_err());
    }

    #[test]
    fn gamma_examples() {
        let g = gamma(s(&[1, 3]), 3).unwrap();
        let mut expected = vec![
            cube(&[1], &[], &[3], &[2], 3),
            cube(&[3], &[], &[1], &[2], 3),
            cube(&[2], &[1], &[3], &[], 3),
            cube(&[2], &[3], &[1], &[], 3),
            cube(&[1], &[3], &[2], &[], 3),
            cube(&[3], &[1], &[2], &[], 3),
        ];
        expected.sort();
        assert_eq!(g.cells().iter().copied().collect::<Vec<_>>(), expected);
        assert!(boundary_chain(&g).is_empty());

        let g = gamma(s(&[1, 2]), 2).unwrap();
        assert_eq!(
            g.cells().iter().copied().collect::<Vec<_>>(),
            vec![cube(&[1], &[], &[2], &[], 2), cube(&[2], &[], &[1], &[], 2)]
        );
        assert_eq!(gamma(s(&[1, 2, 3]), 3).unwrap().len(), 6);
        assert!(gamma(s(&[2]), 3).is_err());
    }

    #[test]
    fn critical_support_examples() {
        assert_eq!(
            critical_support(&rho(s(&[2]), s(&[1]), 3).unwrap()),
            vec![cube(&[2], &[], &[1], &[3], 3)]
        );
        assert_eq!(
            critical_support(&rho(s(&[1]), s(&[3]), 3).unwrap()),
            vec![cube(&[1], &[], &[3], &[2], 3), cube(&[1], &[2], &[3], &[], 3)]
        );
        // (3,∅,1,{2}) is a summand of γ({1,3}) and is critical as well
        assert_eq!(
            critical_support(&gamma(s(&[1, 3]), 3).unwrap()),
            vec![cube(&[1], &[], &[3], &[2], 3), cube(&[3], &[], &[1], &[2], 3)]
        );
        assert_eq!(
            critical_support(&gamma(s(&[1, 2, 3]), 3).unwrap()),
            vec![cube(&[1], &[2], &[3], &[], 3)]
        );
    }

    #[test]
    fn gamma_critical_support_law() {
        for n in 2..=7 {
            let full = Subset::full(n);
            for g in full.subsets().filter(|g| g.len() >= 2) {
                let (lo, hi) = (g.min().unwrap(), g.max().unwrap());
                let rest = full.difference(Subset::interval(lo, hi)).union(Subset::interval(lo, hi).difference(g));
                let sigma_g = CubeLabel::from_parts(
                    Subset::singleton(lo),
                    g.without(lo).without(hi),
                    Subset::singleton(hi),
                    rest,
                    n,
                );
                let mut expected = vec![sigma_g];
                if g.len() == 2 {
                    expected.push(CubeLabel::from_parts(
                        Subset::singleton(hi),
                        Subset::EMPTY,
                        Subset::singleton(lo),
                        rest,
                        n,
                    ));
                }
                expected.sort();
                let ch = gamma(g, n).unwrap();
                assert!(boundary_chain(&ch).is_empty());
                assert_eq!(critical_support(&ch), expected, "n={n} G={g}");
            }
        }
    }

    #[test]
    fn generator_set_examples() {
        let g = generator_specs(3, 0).unwrap();
        assert_eq!(g, vec![GeneratorSpec::Rho { a: s(&[3]), c: s(&[1, 2]) }]);
        let g = generator_specs(3, 1).unwrap();
        let ids: Vec<String> = g.iter().map(ToString::to_string).collect();
        assert_eq!(
            ids,
            [
                "gamma({1,2})",
                "gamma({1,3})",
                "gamma({2,3})",
                "gamma({1,2,3})",
                "rho({2},{1})",
                "rho({3},{1})",
                "rho({3},{2})"
            ]
        );
        assert_eq!(generator_specs(4, 1).unwrap().len(), 4);
        assert!(generator_specs(4, 3).unwrap().is_empty());
    }

    #[test]
    fn generator_counts_match_betti() {
        for n in 2..=10 {
            let betti = betti_formula(n).unwrap();
            for d in 0..=n - 2 {
                assert_eq!(generator_specs(n, d).unwrap().len() as u64, betti[d], "n={n} d={d}");
            }
        }
    }

    #[test]
    fn certification_examples() {
        let cert = certify_basis(3, 0).unwrap();
        assert!(cert.is_ok());
        assert_eq!(cert.bijection, vec![["rho({3},{1,2})".to_string(), "({3},{},{1,2},{})".to_string()]]);

        for n in 3..=6 {
            for d in 0..n - 2 {
                assert!(certify_basis(n, d).unwrap().is_ok(), "n={n} d={d}");
            }
        }

        // top dimension: the three pair-gammas meet two critical cubes each
        let cert = certify_basis(3, 1).unwrap();
        assert_eq!(cert.status, Status::Fail);
        assert_eq!(cert.bijection.len(), 4);
        let pair_failures = cert.failures.iter().filter(|f| f.contains("has 2 critical cells")).count();
        assert_eq!(pair_failures, 3);

        let cert = certify_basis(4, 2).unwrap();
        assert_eq!(cert.bijection.len(), 17 - 6);
    }

    #[test]
    fn pairing_certificates() {
        for n in 2..=7 {
            for d in 0..=n - 2 {
                let cert = certify_pairing(n, d).unwrap();
                assert_eq!(cert.status, Status::Ok, "n={n} d={d}");
                assert_eq!(cert.permutation, d + 2 < n);
                let pairs = (n * (n - 1) / 2) * 2;
                assert_eq!(cert.extra_entries.len(), if d + 2 == n { pairs } else { 0 });
            }
        }
    }

    #[test]
    fn generators_are_independent_in_homology() {
        for n in 2..=6 {
            let betti = betti_formula(n).unwrap();
            for d in 0..=n - 2 {
                let check = homology_independence(n, d).unwrap();
                assert!(check.independent(), "n={n} d={d}: {check:?}");
                assert_eq!(check.generators as u64, betti[d]);
            }
        }
    }

    #[test]
    fn certification_reports_failures() {
        // rho({1},{3}) has two critical cubes in its support
        let gens = vec![Generator {
            spec: GeneratorSpec::Rho { a: s(&[1]), c: s(&[3]) },
            chain: rho(s(&[1]), s(&[3]), 3).unwrap(),
        }];
        let cert = certify(3, 1, &gens, &critical_cells(3, 1).unwrap());
        assert_eq!(cert.status, Status::Fail);
        assert!(cert.failures.iter().any(|f| f.contains("rho({1},{3}) has 2 critical cells")));
        assert!(cert.failures.iter().any(|f| f.contains("not hit")));

        // a non-cycle
        let lone = Chain::from_cells(3, 1, [cube(&[1], &[2], &[3], &[], 3)]).unwrap();
        let gens = vec![Generator { spec: GeneratorSpec::Gamma { g: s(&[1, 2, 3]) }, chain: lone }];
        let cert = certify(3, 1, &gens, &critical_cells(3, 1).unwrap());
        assert!(cert.failures.iter().any(|f| f.contains("is not a cycle")));
    }

    #[test]
    fn pairing_matrix_shapes() {
        assert_eq!(pairing_matrix(3, 0).unwrap(), Gf2Matrix::identity(1));
        let m = pairing_matrix(3, 1).unwrap();
        assert_eq!((m.rows(), m.cols()), (7, 7));
        assert_eq!(m.rank(), 7);
        // 7 diagonal hits plus the second critical cube of each pair-gamma
        assert_eq!(m.count_ones(), 10);
        let m = pairing_matrix(4, 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (17, 17));
        assert_eq!(m.rank(), 17);
        assert!(pairing_matrix(5, 1).unwrap().as_permutation().is_some());
    }

    #[test]
    fn rho_support_law_small() {
        for n in 2..=5 {
            let full = Subset::full(n);
            for a in full.subsets().filter(|x| !x.is_empty()) {
                for c in full.difference(a).subsets().filter(|x| !x.is_empty()) {
                    let ch = rho(a, c, n).unwrap();
                    assert!(boundary_chain(&ch).is_empty());
                    assert_eq!(critical_support(&ch), rho_support_prediction(a, c, n).unwrap(), "{a} {c}");
                }
            }
        }
    }
}
