//! JSON and TSV renderings of verification runs.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use procesi_core::macdonald::WeightSign;
use procesi_core::rootlattice::{McKayGraph, RootVector};
use procesi_core::verify::{
    Check, Diff, EdgeReport, SnMuModule, TypeAReport, TypeDDecomposition, TypeDReport,
};
use procesi_core::{Partition, SymFunc};

use crate::cache::int_value;

/// One TSV line: a single check on a single partition (or `-` for checks not
/// tied to one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub context: String,
    pub lambda: String,
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub params: Map<String, Value>,
    pub body: Map<String, Value>,
    pub rows: Vec<Row>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failed(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }

    fn push(&mut self, context: String, lambda: &str, check: &Check) {
        self.rows.push(Row {
            context,
            lambda: lambda.to_string(),
            check: check.name.clone(),
            pass: check.pass,
            detail: check.detail.clone(),
        });
    }

    fn push_list(&mut self, key: &str, value: Value) {
        self.body
            .entry(key.to_string())
            .or_insert_with(|| Value::Array(Vec::new()))
            .as_array_mut()
            .expect("list entry")
            .push(value);
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), json!(self.command));
        out.insert("params".into(), Value::Object(self.params.clone()));
        for (k, v) in &self.body {
            out.insert(k.clone(), v.clone());
        }
        out.insert(
            "summary".into(),
            json!({
                "checks": self.rows.len(),
                "failed": self.failed(),
                "pass": self.all_pass(),
            }),
        );
        Value::Object(out)
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("context\tlambda\tcheck\tpass\tdetail\n");
        for r in &self.rows {
            let detail = r.detail.replace(['\t', '\n'], " ");
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}",
                r.context, r.lambda, r.check, r.pass, detail
            );
        }
        s
    }
}

pub fn partition_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn symfunc_json(f: &SymFunc<BigInt>) -> Value {
    Value::Array(
        f.terms()
            .rev()
            .map(|(mu, c)| json!({ "mu": mu.parts(), "c": int_value(c) }))
            .collect(),
    )
}

pub fn module_json(m: &SnMuModule) -> Value {
    Value::Array(m.components.iter().map(symfunc_json).collect())
}

fn diff_json(d: &Diff) -> Value {
    json!({
        "component": d.component,
        "mu": d.mu.parts(),
        "lhs": int_value(&d.lhs),
        "rhs": int_value(&d.rhs),
    })
}

fn checks_json(checks: &[Check]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| json!({ "name": c.name, "pass": c.pass, "detail": c.detail }))
            .collect(),
    )
}

pub fn type_a(n: usize, ells: &[usize], sign: WeightSign, runs: &[TypeAReport]) -> RunReport {
    let mut rep = RunReport::new("verify-type-a");
    rep.params.insert("n".into(), json!(n));
    rep.params.insert("ell".into(), json!(ells));
    rep.params.insert("sign".into(), json!(sign.name()));
    for run in runs {
        let ctx = format!("ell={}", run.ell);
        rep.push(ctx.clone(), "-", &run.convention);
        rep.push_list(
            "conventions",
            json!({ "ell": run.ell, "pass": run.convention.pass, "detail": run.convention.detail }),
        );
        for lr in &run.per_lambda {
            let lambda = lr.lambda.to_string();
            let detail = lr.diff.as_ref().map(Diff::to_string).unwrap_or_default();
            rep.push(
                ctx.clone(),
                &lambda,
                &Check::new("corollary", lr.pass, detail),
            );
            let mut entry = json!({
                "ell": run.ell,
                "lambda": partition_json(&lr.lambda),
                "core": partition_json(&lr.core),
                "g": lr.g,
                "r": lr.r,
                "pass": lr.pass,
            });
            if let Some(d) = &lr.diff {
                entry["diff"] = diff_json(d);
            }
            if let Some((lhs, rhs)) = &lr.sides {
                entry["lhs"] = module_json(lhs);
                entry["rhs"] = module_json(rhs);
            }
            rep.push_list("per_lambda", entry);
        }
    }
    rep
}

fn decomposition_json(d: &TypeDDecomposition) -> Value {
    json!({
        "zero_sum": symfunc_json(&d.zero_sum),
        "two": d.two.iter().map(symfunc_json).collect::<Vec<_>>(),
        "l_plus": symfunc_json(&d.l_plus),
        "l_minus": symfunc_json(&d.l_minus),
    })
}

pub fn type_d(n: usize, ls: &[usize], sign: WeightSign, runs: &[TypeDReport]) -> RunReport {
    let mut rep = RunReport::new("verify-type-d");
    rep.params.insert("n".into(), json!(n));
    rep.params.insert("l".into(), json!(ls));
    rep.params.insert("sign".into(), json!(sign.name()));
    for run in runs {
        let ctx = format!("l={}", run.l);
        rep.push(ctx.clone(), "-", &run.parity);
        for lr in &run.per_lambda {
            let lambda = lr.lambda.to_string();
            for c in &lr.checks {
                rep.push(ctx.clone(), &lambda, c);
            }
            let mut entry = json!({
                "l": run.l,
                "lambda": partition_json(&lr.lambda),
                "core": partition_json(&lr.core),
                "g": lr.g,
                "r": lr.r,
                "pass": lr.pass(),
                "checks": checks_json(&lr.checks),
            });
            if let Some(d) = &lr.decomposition {
                entry["decomposition"] = decomposition_json(d);
            }
            rep.push_list("per_lambda", entry);
        }
    }
    rep
}

pub fn edge(n: usize, ells: &[usize], sign: WeightSign, runs: &[EdgeReport]) -> RunReport {
    let mut rep = RunReport::new("verify-edge");
    rep.params.insert("n".into(), json!(n));
    rep.params.insert("ell".into(), json!(ells));
    rep.params.insert("sign".into(), json!(sign.name()));
    for run in runs {
        let ctx = format!("ell={}", run.ell);
        for c in &run.global {
            rep.push(ctx.clone(), "-", c);
        }
        rep.push_list(
            "global",
            json!({ "ell": run.ell, "checks": checks_json(&run.global) }),
        );
        for lr in &run.per_lambda {
            let lambda = lr.lambda.to_string();
            let fctx = format!("{ctx} {}", lr.family.name());
            for c in &lr.checks {
                rep.push(fctx.clone(), &lambda, c);
            }
            rep.push_list(
                "per_lambda",
                json!({
                    "ell": run.ell,
                    "family": lr.family.name(),
                    "lambda": partition_json(&lr.lambda),
                    "core": partition_json(&lr.core),
                    "g": lr.g,
                    "pass": lr.pass(),
                    "checks": checks_json(&lr.checks),
                }),
            );
        }
    }
    rep
}

/// Fiber sanity plus the two single-fiber identities, one entry per `λ`.
pub fn fibers(n: usize, per_lambda: &[(Partition, Vec<Check>)]) -> RunReport {
    let mut rep = RunReport::new("verify-fibers");
    rep.params.insert("n".into(), json!(n));
    for (lambda, checks) in per_lambda {
        let name = lambda.to_string();
        for c in checks {
            rep.push(String::from("-"), &name, c);
        }
        rep.push_list(
            "per_lambda",
            json!({
                "lambda": partition_json(lambda),
                "pass": checks.iter().all(|c| c.pass),
                "checks": checks_json(checks),
            }),
        );
    }
    rep
}

pub fn rootvector_json(graph: &McKayGraph, d: &RootVector) -> Value {
    let mut m = Map::new();
    for (label, x) in graph.labels().iter().zip(d.coords()) {
        m.insert(label.clone(), json!(x));
    }
    Value::Object(m)
}

/// Lists every entry of `A^n_Γ` with its weight; checks attached by the
/// caller go to the TSV rows.
pub fn components(
    graph: &McKayGraph,
    n: usize,
    entries: &[(RootVector, i64)],
    checks: &[Check],
) -> RunReport {
    let mut rep = RunReport::new("components");
    rep.params
        .insert("group".into(), json!(graph.group().to_string()));
    rep.params.insert("n".into(), json!(n));
    rep.body
        .insert("group".into(), json!(graph.group().to_string()));
    rep.body.insert("n".into(), json!(n));
    rep.body.insert(
        "components".into(),
        Value::Array(
            entries
                .iter()
                .map(|(d, w)| json!({ "d": rootvector_json(graph, d), "wt": w }))
                .collect(),
        ),
    );
    rep.body.insert("checks".into(), checks_json(checks));
    for c in checks {
        rep.push(graph.group().to_string(), "-", c);
    }
    rep
}
