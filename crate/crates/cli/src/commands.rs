use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use acs_core::basis::{certify_basis, certify_pairing, homology_independence, Status};
use acs_core::graph_acs::{build_complex, hom_graph, GraphInput};
use acs_core::morse::{betti_morse, census, check_acyclic, critical_cells, PathCounter};
use acs_core::omega::{enumerate_cubes, euler_characteristic, f_vector, omega_complex, alternating_sum};
use acs_core::{omega, Error};
use serde_json::{json, Value};

use crate::args::{expand_checks, Check, Method};

/// A failure that stops a command before it produces results.
#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input; exit code 2.
    Usage(String),
    /// An internal error while computing; reported as a failed run.
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidN(_)
            | Error::LoopEdge(_)
            | Error::UnknownVertex(_)
            | Error::DuplicateVertex(_)
            | Error::TooLarge { .. }
            | Error::Precondition(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

pub type CmdResult = Result<Outcome, CliError>;

/// What a command computed, before timing and rendering.
pub struct Outcome {
    pub command: &'static str,
    pub parameters: Value,
    pub results: Value,
    pub ok: bool,
    pub human: String,
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "✓"
    } else {
        "✗"
    }
}

fn check_n(n: usize, cap: usize, what: &str) -> Result<(), CliError> {
    if n < 2 {
        return Err(CliError::Usage(format!("--n must be at least 2, got {n}")));
    }
    if n > cap {
        return Err(CliError::Usage(format!("--n {n} exceeds the cap of {cap} for {what}")));
    }
    Ok(())
}

fn guard_omega(n: usize, max_cells: u128) -> Result<(), CliError> {
    let cells: u128 = f_vector(n)?.iter().map(|&c| c as u128).sum();
    if cells > max_cells {
        return Err(CliError::Usage(format!("Ω_{n} has {cells} cells, more than --max-cells {max_cells}")));
    }
    Ok(())
}

fn gf2_betti(n: usize, max_cells: u128) -> Result<Vec<u64>, CliError> {
    guard_omega(n, max_cells)?;
    Ok(omega_complex(n)?.betti_numbers().into_iter().map(|b| b as u64).collect())
}

pub fn fvector(n: usize, max_cells: u128) -> CmdResult {
    check_n(n, Method::Formula.cap(), "fvector")?;
    let formula = f_vector(n)?;
    // cell enumeration is only feasible where the complex itself is
    let enumerated = if n <= Method::Gf2.cap() {
        guard_omega(n, max_cells)?;
        Some((0..=n - 2).map(|d| enumerate_cubes(n, d).map(|c| c.len() as u64)).collect::<Result<Vec<_>, _>>()?)
    } else {
        None
    };
    let euler = alternating_sum(&formula);
    let expected_euler = i128::from(euler_characteristic(n)?);
    let counts_ok = enumerated.as_ref().is_none_or(|e| *e == formula);
    let ok = counts_ok && euler == expected_euler;

    let mut human = format!("f-vector of Ω_{n}\n{:>4} {:>14} {:>14}  match\n", "dim", "formula", "enumerated");
    for (d, f) in formula.iter().enumerate() {
        let e = enumerated.as_ref().map(|e| e[d]);
        let shown = e.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(human, "{d:>4} {f:>14} {shown:>14}  {}", mark(e.is_none_or(|x| x == *f)));
    }
    let _ = writeln!(human, "Euler characteristic {euler} (expected {expected_euler}) {}", mark(euler == expected_euler));

    Ok(Outcome {
        command: "fvector",
        parameters: json!({ "n": n }),
        results: json!({
            "f_vector": formula,
            "enumerated": enumerated,
            "euler_characteristic": euler as i64,
            "expected_euler_characteristic": expected_euler as i64,
        }),
        ok,
        human,
    })
}

pub fn betti(n: usize, method: Method, max_cells: u128) -> CmdResult {
    check_n(n, method.cap(), &format!("--method {}", method.name()))?;
    let formula = omega::betti_formula(n)?;
    let computed: Vec<u64> = match method {
        Method::Formula => formula.clone(),
        Method::Morse => {
            guard_omega(n, max_cells)?;
            betti_morse(n)?.into_iter().map(|b| b as u64).collect()
        }
        Method::Gf2 => gf2_betti(n, max_cells)?,
    };
    let ok = computed == formula;
    let mut human = format!("Betti numbers of Ω_{n}\n{:>4} {:>10} {:>10}  match\n", "dim", "formula", method.name());
    for d in 0..formula.len().max(computed.len()) {
        let f = formula.get(d).copied();
        let c = computed.get(d).copied();
        let show = |x: Option<u64>| x.map_or("-".to_string(), |x| x.to_string());
        let _ = writeln!(human, "{d:>4} {:>10} {:>10}  {}", show(f), show(c), mark(f == c));
    }
    Ok(Outcome {
        command: "betti",
        parameters: json!({ "n": n, "method": method.name() }),
        results: json!({ "betti": computed, "formula": formula, "matches_formula": ok }),
        ok,
        human,
    })
}

struct CheckReport {
    check: Check,
    ok: bool,
    summary: String,
    details: Value,
}

fn run_check(check: Check, n: usize, max_cells: u128) -> Result<CheckReport, CliError> {
    let report = match check {
        Check::Acyclicity => {
            let cert = check_acyclic(n)?;
            let ok = cert.is_acyclic();
            let details = match &cert {
                acs_core::morse::AcyclicityCertificate::Acyclic { orders, .. } => {
                    json!({ "status": "acyclic", "down_cells_by_dim": orders.iter().map(Vec::len).collect::<Vec<_>>() })
                }
                other => serde_json::to_value(other).map_err(|e| CliError::Internal(e.to_string()))?,
            };
            let summary = if ok { "no cycles in any dimension".into() } else { "cycle found".into() };
            CheckReport { check, ok, summary, details }
        }
        Check::MorseBoundary => {
            let mut counter = PathCounter::new();
            let mut cells = 0usize;
            let mut paths = 0u64;
            let mut nonzero = Vec::new();
            for d in 0..=n - 2 {
                for s in critical_cells(n, d)? {
                    let mb = counter.morse_boundary(&s)?;
                    cells += 1;
                    paths += mb.path_count;
                    if !mb.boundary.is_empty() {
                        nonzero.push(s.to_string());
                    }
                }
            }
            let critical: Vec<usize> = census(n)?.iter().map(|r| r.critical()).collect();
            let formula = omega::betti_formula(n)?;
            let counts_ok = critical.iter().map(|&c| c as u64).eq(formula.iter().copied());
            let ok = nonzero.is_empty() && counts_ok;
            CheckReport {
                check,
                ok,
                summary: format!("{cells} critical cells, {paths} alternating paths, {} non-zero", nonzero.len()),
                details: json!({
                    "critical_cells": cells,
                    "alternating_paths": paths,
                    "nonzero_boundaries": nonzero,
                    "critical_by_dim": critical,
                    "critical_counts_match_formula": counts_ok,
                }),
            }
        }
        Check::Pairing => {
            let certs = (0..=n - 2).map(|d| certify_pairing(n, d)).collect::<Result<Vec<_>, _>>()?;
            let ok = certs.iter().all(|c| c.status == Status::Ok);
            let perms = certs.iter().filter(|c| c.permutation).count();
            CheckReport {
                check,
                ok,
                summary: format!(
                    "{} of {} pairing matrices invertible, permutations: {perms}",
                    certs.iter().filter(|c| c.invertible).count(),
                    certs.len()
                ),
                details: json!({ "pairings": certs }),
            }
        }
        Check::Basis => {
            guard_omega(n, max_cells)?;
            let mut dims = Vec::new();
            let mut ok = true;
            let mut strict_failures = 0;
            for d in 0..=n - 2 {
                let pairing = certify_pairing(n, d)?;
                let independence = homology_independence(n, d)?;
                let strict = certify_basis(n, d)?;
                let betti = omega::betti_formula(n)?[d] as usize;
                let dim_ok = pairing.status == Status::Ok && independence.independent() && independence.generators == betti;
                ok &= dim_ok;
                if !strict.is_ok() {
                    strict_failures += 1;
                }
                dims.push(json!({
                    "dim": d,
                    "ok": dim_ok,
                    "generators": independence.generators,
                    "betti": betti,
                    "cycles": pairing.cycles,
                    "pairing_invertible": pairing.invertible,
                    "homology_rank": independence.homology_rank,
                    "unique_critical_support": strict.is_ok(),
                    "support_anomalies": pairing.extra_entries,
                }));
            }
            CheckReport {
                check,
                ok,
                summary: format!(
                    "generators form a basis in {} of {} dimensions; unique critical support fails in {strict_failures}",
                    dims.iter().filter(|v| v["ok"] == json!(true)).count(),
                    dims.len()
                ),
                details: json!({ "dims": dims }),
            }
        }
        Check::Oracle => {
            let formula = omega::betti_formula(n)?;
            let gf2 = gf2_betti(n, max_cells)?;
            let ok = formula == gf2;
            CheckReport {
                check,
                ok,
                summary: format!("gf2 {gf2:?} vs formula {formula:?}"),
                details: json!({ "formula": formula, "gf2": gf2 }),
            }
        }
        Check::All => unreachable!("expanded before running"),
    };
    Ok(report)
}

pub fn verify(n: usize, checks: &[Check], max_cells: u128) -> CmdResult {
    let checks = expand_checks(checks);
    let cap = checks.iter().map(|c| c.cap()).min().unwrap_or(Method::Morse.cap());
    check_n(n, cap, &format!("--checks {}", checks.iter().map(|c| c.name()).collect::<Vec<_>>().join(",")))?;
    let reports = checks.iter().map(|&c| run_check(c, n, max_cells)).collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r.ok);
    let mut human = format!("verification of Ω_{n}\n");
    for r in &reports {
        let _ = writeln!(human, "{:<16} {:<4} {}", r.check.name(), if r.ok { "ok" } else { "FAIL" }, r.summary);
    }
    let results: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "check": r.check.name(), "status": status(r.ok), "summary": r.summary, "details": r.details }))
        .collect();
    Ok(Outcome {
        command: "verify",
        parameters: json!({ "n": n, "checks": checks.iter().map(|c| c.name()).collect::<Vec<_>>() }),
        results: json!({ "checks": results }),
        ok,
        human,
    })
}

pub fn basis(n: usize, dim: Option<usize>, max_cells: u128) -> CmdResult {
    check_n(n, Method::Gf2.cap(), "basis")?;
    guard_omega(n, max_cells)?;
    let dims: Vec<usize> = match dim {
        Some(d) if d > n - 2 => return Err(CliError::Usage(format!("--dim {d} is above the top dimension {}", n - 2))),
        Some(d) => vec![d],
        None => (0..=n - 2).collect(),
    };
    let mut certificates = Vec::new();
    let mut pairings = Vec::new();
    let mut ok = true;
    let mut human = format!("homology generators of Ω_{n}\n{:>4} {:>10} {:>8} {:>10} {:>8}  basis\n", "dim", "generators", "unique", "invertible", "perm");
    for &d in &dims {
        let cert = certify_basis(n, d)?;
        let pairing = certify_pairing(n, d)?;
        let independence = homology_independence(n, d)?;
        let dim_ok = pairing.status == Status::Ok && independence.independent();
        ok &= dim_ok;
        let _ = writeln!(
            human,
            "{d:>4} {:>10} {:>8} {:>10} {:>8}  {}",
            pairing.generators,
            cert.is_ok(),
            pairing.invertible,
            pairing.permutation,
            mark(dim_ok)
        );
        for f in &cert.failures {
            let _ = writeln!(human, "       note: {f}");
        }
        certificates.push(cert);
        pairings.push(json!({ "certificate": pairing, "homology_rank": independence.homology_rank }));
    }
    Ok(Outcome {
        command: "basis",
        parameters: json!({ "n": n, "dim": dim }),
        results: json!({ "certificates": certificates, "pairings": pairings, "basis_certified": ok }),
        ok,
        human,
    })
}

pub fn graph(input: &Path, n_override: Option<usize>, max_cells: u128) -> CmdResult {
    let text = fs::read_to_string(input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", input.display())))?;
    let parsed: GraphInput =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed graph JSON: {e}")))?;
    let (g, file_n) = parsed.into_graph()?;
    let n = n_override.unwrap_or(file_n);
    let cx = build_complex(&g, n, max_cells)?;
    let f = cx.f_vector();
    let betti = cx.betti_numbers();
    let euler: i128 = f.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i128 } else { -(c as i128) }).sum();
    let betti_euler: i128 =
        betti.iter().enumerate().map(|(d, &c)| if d % 2 == 0 { c as i128 } else { -(c as i128) }).sum();
    let ok = euler == betti_euler;

    let mut human = format!(
        "anchored configuration space: {} vertices, {} edges, {} anchors, n = {n}\n",
        g.vertices().len(),
        g.edges().len(),
        g.anchor_count()
    );
    if f.is_empty() {
        human.push_str("empty complex (fewer points than anchors)\n");
    } else {
        let _ = writeln!(human, "{:>4} {:>10} {:>10}", "dim", "cells", "betti");
        for d in 0..f.len() {
            let _ = writeln!(human, "{d:>4} {:>10} {:>10}", f[d], betti[d]);
        }
        let _ = writeln!(human, "Euler characteristic {euler} {}", mark(ok));
    }
    Ok(Outcome {
        command: "graph",
        parameters: json!({ "input": input.display().to_string(), "n": n, "method": "gf2" }),
        results: json!({
            "vertices": g.vertices().len(),
            "edges": g.edges().len(),
            "anchors": g.anchor_count(),
            "n": n,
            "f_vector": f,
            "betti": betti,
            "euler_characteristic": euler as i64,
        }),
        ok,
        human,
    })
}

pub fn hom(m: usize, max_cells: u128) -> CmdResult {
    if !(1..=7).contains(&m) {
        return Err(CliError::Usage(format!("--m must be in 1..=7, got {m}")));
    }
    let vertices: u128 = (1..=m as u128 + 1).product();
    if vertices > max_cells {
        return Err(CliError::Usage(format!("{vertices} vertices exceed --max-cells {max_cells}")));
    }
    let s = hom_graph(m)?;
    let human = format!(
        "Hom(K_{m}, K_{}): {} vertices, {} edges, degree {}..{}, {} component(s)\nbeta1 = {}, zeta = {} {}\n",
        m + 1,
        s.vertices,
        s.edges,
        s.min_degree,
        s.max_degree,
        s.components,
        s.beta1,
        s.zeta,
        mark(s.ok)
    );
    let results = serde_json::to_value(&s).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Outcome { command: "hom-graph", parameters: json!({ "m": m }), results, ok: s.ok, human })
}

pub fn status(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "fail"
    }
}
