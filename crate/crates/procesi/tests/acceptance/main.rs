//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Runs without the libtest harness.

mod oracles;

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use serde_json::Value;

use procesi::cache::DiskCache;
use procesi_core::characters::{character_table, character_value};
use procesi_core::macdonald::WeightSign;
use procesi_core::partitions::{factorial, partitions_of};
use procesi_core::rootlattice::{
    bd_rootvector, enumerate_components, partition_to_rootvector, Group, McKayGraph, RootVector,
};
use procesi_core::verify::{
    cycle_count_parity, fake_degree_identity_sides, fiber_checks, specialization_sides,
    verify_edge_cases, verify_type_d, EdgeFamily, FiberSource,
};
use procesi_core::{Partition, SymFunc};

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    summary: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>) -> Self {
        Self {
            pass,
            summary: summary.into(),
            notes: Vec::new(),
        }
    }

    fn from_failures(checked: usize, what: &str, failures: Vec<String>) -> Self {
        let mut out = Self::new(
            failures.is_empty(),
            format!("{checked} {what}, {} failed", failures.len()),
        );
        out.notes = failures.into_iter().take(10).collect();
        out
    }
}

fn criterion_1() -> Outcome {
    let dir = tempfile::tempdir().expect("tempdir");
    let report = dir.path().join("type_a.json");
    let status = Command::new(env!("CARGO_BIN_EXE_procesi"))
        .args([
            "verify-type-a",
            "--n",
            "8",
            "--ell",
            "2,3,4,5,6,7",
            "--output",
        ])
        .arg(&report)
        .arg("--cache-dir")
        .arg(dir.path().join("cache"))
        .status()
        .expect("running procesi");
    let text = match std::fs::read_to_string(&report) {
        Ok(t) => t,
        Err(e) => return Outcome::new(false, format!("no report written: {e}")),
    };
    let json: Value = serde_json::from_str(&text).expect("report is JSON");
    let entries = json["per_lambda"].as_array().cloned().unwrap_or_default();
    let mut per_ell: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for e in &entries {
        let slot = per_ell.entry(e["ell"].as_u64().unwrap_or(0)).or_default();
        slot.0 += 1;
        if e["pass"] == Value::Bool(true) {
            slot.1 += 1;
        }
    }
    let expected: Vec<u64> = (2..=7).collect();
    let complete = per_ell.keys().copied().collect::<Vec<_>>() == expected
        && per_ell
            .values()
            .all(|&(total, passed)| total == 22 && passed == 22);
    let conventions_ok = json["conventions"]
        .as_array()
        .is_some_and(|c| c.len() == 6 && c.iter().all(|x| x["pass"] == Value::Bool(true)));
    let pass = status.success()
        && complete
        && conventions_ok
        && json["summary"]["pass"] == Value::Bool(true);
    let mut out = Outcome::new(
        pass,
        format!(
            "exit {:?}, {} (λ, ℓ) entries, passes per ℓ {:?}",
            status.code(),
            entries.len(),
            per_ell.iter().map(|(k, v)| (*k, v.1)).collect::<Vec<_>>()
        ),
    );
    if !conventions_ok {
        out.notes
            .push("weight-convention check did not pass for every ℓ".into());
    }
    out
}

fn criterion_2(src: &DiskCache) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            let checks = fiber_checks(&lambda, src).expect("fiber");
            checked += checks.len();
            failures.extend(
                checks
                    .iter()
                    .filter(|c| !c.pass)
                    .map(|c| format!("{lambda} {}: {}", c.name, c.detail)),
            );
        }
    }
    Outcome::from_failures(checked, "fiber checks for n ≤ 8", failures)
}

fn criterion_3(src: &DiskCache) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let (lhs, rhs) = specialization_sides(&lambda, src).expect("specialization");
            checked += 1;
            if lhs != rhs {
                failures.push(lambda.to_string());
            }
        }
    }
    Outcome::from_failures(checked, "partitions with n ≤ 6", failures)
}

fn criterion_4(src: &DiskCache) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            let (lhs, rhs) = fake_degree_identity_sides(&lambda, src).expect("fake degrees");
            checked += 1;
            if lhs != rhs {
                failures.push(lambda.to_string());
            }
        }
    }
    Outcome::from_failures(checked, "partitions with n ≤ 6", failures)
}

/// Runs the edge families and keeps the reports of one family.
fn edge_sweep(src: &DiskCache, ells: &[usize], family: EdgeFamily) -> (usize, usize, Vec<String>) {
    let mut lambdas = 0;
    let mut checks = 0;
    let mut failures = Vec::new();
    for &ell in ells {
        for n in 0..=8 {
            let rep = verify_edge_cases(n, ell, WeightSign::default(), src).expect("edge");
            for c in rep.global.iter().filter(|c| !c.pass) {
                failures.push(format!("n={n} ℓ={ell} {}: {}", c.name, c.detail));
            }
            for lr in rep.per_lambda.iter().filter(|r| r.family == family) {
                lambdas += 1;
                checks += lr.checks.len();
                for c in lr.checks.iter().filter(|c| !c.pass) {
                    failures.push(format!("ℓ={ell} {} {}: {}", lr.lambda, c.name, c.detail));
                }
            }
        }
    }
    (lambdas, checks, failures)
}

fn check_names(src: &DiskCache, ell: usize, n: usize, family: EdgeFamily) -> Vec<String> {
    let rep = verify_edge_cases(n, ell, WeightSign::default(), src).expect("edge");
    let mut names: Vec<String> = rep
        .per_lambda
        .iter()
        .filter(|r| r.family == family)
        .flat_map(|r| r.checks.iter().map(|c| c.name.clone()))
        .collect();
    names.extend(rep.global.iter().map(|c| c.name.clone()));
    names.sort();
    names.dedup();
    names
}

fn criterion_5(src: &DiskCache) -> Outcome {
    let (lambdas, checks, failures) = edge_sweep(src, &[2, 3, 4, 5, 6], EdgeFamily::SmallCore);
    let mut out = Outcome::from_failures(checks, "checks", failures);
    out.summary = format!(
        "{lambdas} partitions with core ∅ or (1), ℓ ≤ 6, n ≤ 8; {}",
        out.summary
    );
    out.notes.insert(
        0,
        format!(
            "checks run: {}",
            check_names(src, 3, 7, EdgeFamily::SmallCore).join(", ")
        ),
    );
    out
}

fn criterion_6(src: &DiskCache) -> Outcome {
    let (lambdas, checks, failures) = edge_sweep(src, &[2, 3, 5, 7], EdgeFamily::BelowEll);
    let mut out = Outcome::from_failures(checks, "checks", failures);
    out.summary = format!(
        "{lambdas} partitions with g < ℓ, ℓ ∈ {{2,3,5,7}}, n ≤ 8; {}",
        out.summary
    );
    out.notes.insert(
        0,
        format!(
            "checks run: {}",
            check_names(src, 5, 8, EdgeFamily::BelowEll).join(", ")
        ),
    );
    out
}

fn criterion_7(src: &DiskCache) -> Outcome {
    let mut failures = Vec::new();
    let mut lambdas = 0;
    let mut checks = 0;
    for l in [1, 2] {
        for n in 0..=8 {
            let rep = verify_type_d(n, l, WeightSign::default(), src).expect("type D");
            for lr in &rep.per_lambda {
                lambdas += 1;
                checks += lr.checks.len();
                for c in lr.checks.iter().filter(|c| !c.pass) {
                    failures.push(format!("l={l} {} {}: {}", lr.lambda, c.name, c.detail));
                }
            }
        }
        for n in 0..=12 {
            let c = cycle_count_parity(n, l);
            checks += 1;
            if !c.pass {
                failures.push(format!("parity l={l} n={n}: {}", c.detail));
            }
        }
    }
    let mut out = Outcome::from_failures(checks, "checks", failures);
    out.summary = format!(
        "{lambdas} symmetric (λ, l) pairs with n ≤ 8, parity to n = 12; {}",
        out.summary
    );
    out
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut weights = 0;
    for ell in 1..=6 {
        let graph = McKayGraph::new(Group::Cyclic(ell)).expect("graph");
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                let d = partition_to_rootvector(&lambda, ell);
                let (_, r) = oracles::core_by_rim_hooks(lambda.parts(), ell);
                weights += 1;
                match graph.weight(&d) {
                    Ok(w) if w == r as i64 => {}
                    other => failures.push(format!("wt {lambda} ℓ={ell}: {other:?}, want {r}")),
                }
            }
            let count = enumerate_components(&graph, n).expect("components").len();
            let cores = oracles::cores_up_to(n, ell);
            if count != cores {
                failures.push(format!("|A^{n}| for ℓ={ell}: {count}, want {cores}"));
            }
        }
    }

    // Reflections on every entry of A^n and on every partition vector. The
    // trivial group has no real simple root, so ℓ starts at 2 here.
    let mut vectors = 0;
    let mut moved_dimension = 0;
    let mut graphs: Vec<(McKayGraph, Vec<RootVector>)> = Vec::new();
    for ell in 2..=6 {
        let graph = McKayGraph::new(Group::Cyclic(ell)).unwrap();
        let mut ds: Vec<RootVector> = (0..=8)
            .flat_map(|n| enumerate_components(&graph, n).unwrap())
            .map(|(d, _)| d)
            .collect();
        ds.extend(
            partitions_of(8)
                .iter()
                .map(|p| partition_to_rootvector(p, ell)),
        );
        graphs.push((graph, ds));
    }
    for l in [1, 2, 3] {
        let graph = McKayGraph::new(Group::BinaryDihedral(l)).unwrap();
        let ds: Vec<RootVector> = (0..=10)
            .flat_map(partitions_of)
            .filter(Partition::is_symmetric)
            .map(|p| bd_rootvector(&p, l).unwrap())
            .collect();
        graphs.push((graph, ds));
    }
    for (graph, ds) in &graphs {
        for d in ds {
            let w = graph.weight(d).expect("weight");
            for chi in 0..graph.len() {
                vectors += 1;
                let e = graph.reflect(d, chi);
                if graph.reflect(&e, chi) != *d {
                    failures.push(format!(
                        "{} s_{chi} not an involution at {d}",
                        graph.group()
                    ));
                }
                if graph.coroot_pairing(&e) != graph.coroot_pairing(d) {
                    failures.push(format!("{} s_{chi} moves ⟨d, δ^∨⟩ at {d}", graph.group()));
                }
                if graph.weight(&e).ok() != Some(w) {
                    failures.push(format!("{} s_{chi} moves the weight at {d}", graph.group()));
                }
                if graph.dimension(&e) != graph.dimension(d) {
                    moved_dimension += 1;
                }
            }
        }
    }
    let mut out = Outcome::from_failures(
        weights + vectors,
        "weight/count/reflection checks",
        failures,
    );
    out.notes.push("reflections checked for cyclic ℓ = 2..6 and binary dihedral l = 1..3; cyclic:1 has no real simple root".into());
    out.notes.push(format!(
        "|d|_Γ taken as ⟨d, δ^∨⟩: preserved by all {vectors} reflections (it is 0 on the whole root lattice)"
    ));
    out.notes.push(format!(
        "the alternative reading Σ dim(χ)·d_χ is NOT reflection-invariant: it changed in {moved_dimension} of {vectors} reflections"
    ));
    out
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;

    for n in 0..=10 {
        for lambda in partitions_of(n) {
            for ell in 1..=6 {
                checked += 1;
                let (core, r) = oracles::core_by_rim_hooks(lambda.parts(), ell);
                let cq = lambda.core_quotient(ell);
                if cq.core.parts() != core.as_slice() || cq.r != r {
                    failures.push(format!(
                        "core {lambda} ℓ={ell}: {} r={} vs {core:?} r={r}",
                        cq.core, cq.r
                    ));
                }
            }
        }
    }

    for n in 0..=9 {
        for lambda in partitions_of(n) {
            checked += 1;
            let s = SymFunc::<BigInt>::schur(&lambda);
            let back = s.to_rational().to_powersum().to_schur().to_integral();
            if back.as_ref() != Ok(&s) {
                failures.push(format!("round trip s{lambda}"));
            }
        }
    }

    for n in 0..=9 {
        let table = character_table(n);
        let parts = table.partitions();
        let order = factorial(n);
        for a in 0..parts.len() {
            for b in a..parts.len() {
                checked += 1;
                let mut rows = BigInt::from(0);
                let mut cols = BigInt::from(0);
                for m in 0..parts.len() {
                    let class = &order / table.z(m);
                    rows += &class * table.value_at(a, m) * table.value_at(b, m);
                    cols += table.value_at(m, a) * table.value_at(m, b);
                }
                let want_rows = if a == b {
                    order.clone()
                } else {
                    BigInt::from(0)
                };
                let want_cols = if a == b {
                    table.z(a).clone()
                } else {
                    BigInt::from(0)
                };
                if rows != want_rows || cols != want_cols {
                    failures.push(format!("orthogonality n={n} ({}, {})", parts[a], parts[b]));
                }
            }
        }
    }

    for n in 0..=5 {
        let brute = oracles::characters_from_traces(n);
        for (lambda, row) in &brute {
            for (mu, &v) in row {
                checked += 1;
                let l = Partition::new(lambda.clone()).unwrap();
                let m = Partition::new(mu.clone()).unwrap();
                if character_value(&l, &m) != Ok(v) {
                    failures.push(format!("χ^{l}({m}) = {v} by traces"));
                }
            }
        }
    }
    Outcome::from_failures(checked, "oracle comparisons", failures)
}

fn main() -> ExitCode {
    let src = DiskCache::new(None, 12);
    // Warm the shared fiber memo so timings below reflect the checks.
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            src.fiber(&lambda).expect("fiber");
        }
    }
    let criteria: Vec<Criterion> = vec![
        (
            "type A decomposition, n = 8, ℓ = 2..7 (CLI)",
            Box::new(criterion_1),
        ),
        ("fiber sanity, n ≤ 8", Box::new(|| criterion_2(&src))),
        (
            "H̃(q, 1/q) specialization identity, n ≤ 6",
            Box::new(|| criterion_3(&src)),
        ),
        (
            "fake degree identity, n ≤ 6",
            Box::new(|| criterion_4(&src)),
        ),
        ("edge family: core ∅ or (1)", Box::new(|| criterion_5(&src))),
        (
            "edge family: prime ℓ, g < ℓ",
            Box::new(|| criterion_6(&src)),
        ),
        (
            "type D routes, halving, dimension sum, parity",
            Box::new(|| criterion_7(&src)),
        ),
        (
            "root lattice weights, component counts, reflections",
            Box::new(criterion_8),
        ),
        ("oracle equivalences", Box::new(criterion_9)),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        all &= out.pass;
        println!(
            "criterion {}: {} {name}: {} [{:.1}s]",
            i + 1,
            if out.pass { "PASS" } else { "FAIL" },
            out.summary,
            start.elapsed().as_secs_f64()
        );
        for note in &out.notes {
            println!("    {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
