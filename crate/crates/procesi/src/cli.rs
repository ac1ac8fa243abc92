//! Command-line surface.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use procesi_core::macdonald::{macdonald_bounded, WeightSign, DEFAULT_MAX_N};
use procesi_core::partitions::{cores_congruent, partitions_of};
use procesi_core::rootlattice::{
    bd_rootvector, enumerate_components, weight_census, Group, McKayGraph, RootVector,
};
use procesi_core::verify::{
    convention_check, cycle_count_parity, fake_degree_identity_sides, fiber_checks,
    specialization_sides, verify_edge_cases, verify_type_a_lambda, verify_type_d_lambda, Check,
    FiberSource, TypeAReport, TypeDReport,
};
use procesi_core::Partition;

use crate::cache::{resolve_cache_dir, DiskCache};
use crate::report::{self, RunReport};

#[derive(Parser, Debug)]
#[command(
    name = "procesi",
    version,
    about = "Exact checks of Procesi fiber decompositions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the ℓ-core, ℓ-quotient, core size g and number r of removed hooks.
    Core {
        /// Partition such as "[2,2,1]".
        lambda: String,
        ell: usize,
    },
    /// Print the Schur expansion of H̃_λ(z; q, t).
    Macdonald {
        lambda: String,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Compare each fiber's μ_ℓ decomposition with the induced-from-core side.
    VerifyTypeA {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        ell: Vec<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Compare the two constructions of the binary dihedral decomposition.
    VerifyTypeD {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        l: Vec<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Rederive the decomposition through fake degrees where cores are small.
    VerifyEdge {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        ell: Vec<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Fiber sanity, the t = 1/q specialization and the fake-degree relation.
    VerifyFibers {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List the root vectors of total dimension n with nonnegative weight.
    Components {
        /// `cyclic:ℓ` or `binary_dihedral:l`.
        #[arg(long)]
        group: Group,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    /// q^a t^b has weight a − b.
    #[value(name = "q-t")]
    QMinusT,
    /// q^a t^b has weight b − a.
    #[value(name = "t-q")]
    TMinusQ,
}

impl From<SignArg> for WeightSign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::QMinusT => WeightSign::QMinusT,
            SignArg::TMinusQ => WeightSign::TMinusQ,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Report file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[command(flatten)]
    pub out: OutputArgs,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Fiber cache directory; overrides $PROCESI_CACHE.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Recompute every fiber and write nothing to disk.
    #[arg(long)]
    pub no_cache: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = SignArg::QMinusT)]
    pub sign: SignArg,
}

impl RunArgs {
    fn cache(&self) -> DiskCache {
        let dir = resolve_cache_dir(
            self.cache_dir.as_deref(),
            self.no_cache,
            self.out.output.as_deref(),
        );
        DiskCache::new(dir, self.max_n)
    }

    fn pool(&self) -> anyhow::Result<rayon::ThreadPool> {
        Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.unwrap_or(0))
            .build()?)
    }
}

fn parse_partition(text: &str) -> anyhow::Result<Partition> {
    text.parse::<Partition>()
        .with_context(|| format!("invalid partition {text:?}"))
}

fn emit(rep: &RunReport, out: &OutputArgs) -> anyhow::Result<()> {
    let text = match out.format {
        Format::Json => serde_json::to_string_pretty(&rep.to_json())? + "\n",
        Format::Tsv => rep.to_tsv(),
    };
    match &out.output {
        Some(path) => write_file(path, &text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    eprintln!(
        "{}: {} checks, {} failed",
        rep.command,
        rep.rows.len(),
        rep.failed()
    );
    Ok(())
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Runs one type A sweep at a single `ℓ` with the per-partition work spread
/// over the current thread pool.
pub fn type_a_run(
    n: usize,
    ell: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> anyhow::Result<TypeAReport> {
    if ell == 0 {
        bail!("ℓ must be at least 1");
    }
    let convention = convention_check(n, ell, sign, source)?;
    if !convention.pass {
        bail!(
            "weight convention check failed, refusing to verify: {}",
            convention.detail
        );
    }
    let per_lambda = partitions_of(n)
        .par_iter()
        .map(|lambda| verify_type_a_lambda(lambda, ell, sign, source))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TypeAReport {
        n,
        ell,
        sign,
        convention,
        per_lambda,
    })
}

pub fn type_d_run(
    n: usize,
    l: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> anyhow::Result<TypeDReport> {
    if l == 0 {
        bail!("l must be at least 1");
    }
    let parity = cycle_count_parity(n, l);
    let per_lambda = partitions_of(n)
        .into_par_iter()
        .filter(|p| p.is_symmetric() && p.core_quotient(2 * l).r % 2 == 0)
        .map(|p| verify_type_d_lambda(&p, l, sign, source))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TypeDReport {
        n,
        l,
        sign,
        parity,
        per_lambda,
    })
}

/// Sanity checks for `H̃_λ` together with the `t = q^{−1}` and fake-degree
/// identities.
pub fn fiber_run(lambda: &Partition, source: &dyn FiberSource) -> anyhow::Result<Vec<Check>> {
    let mut checks = fiber_checks(lambda, source)?;
    let (a, b) = specialization_sides(lambda, source)?;
    checks.push(Check::new(
        "specialization",
        a == b,
        if a == b {
            String::new()
        } else {
            format!("{a} vs {b}")
        },
    ));
    let (a, b) = fake_degree_identity_sides(lambda, source)?;
    checks.push(Check::new(
        "fake_degree_identity",
        a == b,
        if a == b {
            String::new()
        } else {
            format!("{a} vs {b}")
        },
    ));
    Ok(checks)
}

/// Entries of `A^n_Γ` with consistency checks on the weights.
pub fn components_run(group: Group, n: usize) -> anyhow::Result<RunReport> {
    let graph = McKayGraph::new(group)?;
    let entries = enumerate_components(&graph, n)?;
    let mut checks = Vec::new();
    let bad: Vec<String> = entries
        .iter()
        .filter(|(d, w)| graph.quadratic_weight(d) != *w)
        .map(|(d, w)| format!("{d}: {w} vs {}", graph.quadratic_weight(d)))
        .collect();
    checks.push(Check::new(
        "quadratic_weight",
        bad.is_empty(),
        bad.join("; "),
    ));
    let census = weight_census(&entries);
    let census_text = census
        .iter()
        .map(|(w, c)| format!("wt {w}: {c}"))
        .collect::<Vec<_>>()
        .join(", ");
    match group {
        Group::Cyclic(ell) => {
            let cores = cores_congruent(n, ell).len();
            checks.push(Check::new(
                "core_count",
                cores == entries.len(),
                format!("{} entries, {cores} cores; {census_text}", entries.len()),
            ));
        }
        Group::BinaryDihedral(l) => {
            // Only entries containing a monomial ideal come from partitions;
            // the rest are recorded, not judged.
            let realized: BTreeSet<RootVector> = partitions_of(n)
                .iter()
                .filter(|p| p.is_symmetric())
                .map(|p| bd_rootvector(p, l))
                .collect::<Result<_, _>>()?;
            let hit: Vec<&(RootVector, i64)> = entries
                .iter()
                .filter(|(d, _)| realized.contains(d))
                .collect();
            let sym_cores = partitions_of(n)
                .iter()
                .filter(|p| p.is_symmetric() && p.is_core(2 * l))
                .count();
            checks.push(Check::new(
                "census",
                hit.len() == realized.len(),
                format!(
                    "{} entries ({census_text}); {} realized by symmetric partitions of {n}, {} of weight 0; {sym_cores} symmetric {}-cores of size {n}",
                    entries.len(),
                    hit.len(),
                    hit.iter().filter(|(_, w)| *w == 0).count(),
                    2 * l
                ),
            ));
        }
    }
    Ok(report::components(&graph, n, &entries, &checks))
}

/// Executes a parsed command line. `Ok(false)` means some check failed.
pub fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Core { lambda, ell } => {
            if ell == 0 {
                bail!("ℓ must be at least 1");
            }
            let lambda = parse_partition(&lambda)?;
            let cq = lambda.core_quotient(ell);
            let quotient = cq
                .quotient
                .iter()
                .map(Partition::to_string)
                .collect::<Vec<_>>()
                .join(",");
            println!(
                "core={} quotient=({quotient}) g={} r={}",
                cq.core, cq.g, cq.r
            );
            Ok(true)
        }
        Command::Macdonald { lambda, max_n } => {
            let lambda = parse_partition(&lambda)?;
            let f = macdonald_bounded(&lambda, max_n)?;
            println!("{}", f.schur_expansion());
            Ok(true)
        }
        Command::VerifyTypeA { n, ell, run } => {
            let cache = run.cache();
            let sign = run.sign.into();
            let runs = run.pool()?.install(|| {
                ell.iter()
                    .map(|&e| type_a_run(n, e, sign, &cache))
                    .collect::<anyhow::Result<Vec<_>>>()
            })?;
            let rep = report::type_a(n, &ell, sign, &runs);
            emit(&rep, &run.out)?;
            Ok(rep.all_pass())
        }
        Command::VerifyTypeD { n, l, run } => {
            let cache = run.cache();
            let sign = run.sign.into();
            let runs = run.pool()?.install(|| {
                l.iter()
                    .map(|&x| type_d_run(n, x, sign, &cache))
                    .collect::<anyhow::Result<Vec<_>>>()
            })?;
            let rep = report::type_d(n, &l, sign, &runs);
            emit(&rep, &run.out)?;
            Ok(rep.all_pass())
        }
        Command::VerifyEdge { n, ell, run } => {
            let cache = run.cache();
            let sign = run.sign.into();
            let runs = run.pool()?.install(|| {
                ell.par_iter()
                    .map(|&e| verify_edge_cases(n, e, sign, &cache).map_err(anyhow::Error::from))
                    .collect::<anyhow::Result<Vec<_>>>()
            })?;
            let rep = report::edge(n, &ell, sign, &runs);
            emit(&rep, &run.out)?;
            Ok(rep.all_pass())
        }
        Command::VerifyFibers { n, run } => {
            let cache = run.cache();
            let per_lambda = run.pool()?.install(|| {
                partitions_of(n)
                    .into_par_iter()
                    .map(|p| fiber_run(&p, &cache).map(|c| (p, c)))
                    .collect::<anyhow::Result<Vec<_>>>()
            })?;
            let rep = report::fibers(n, &per_lambda);
            emit(&rep, &run.out)?;
            Ok(rep.all_pass())
        }
        Command::Components { group, n, out } => {
            let rep = components_run(group, n)?;
            emit(&rep, &out)?;
            Ok(rep.all_pass())
        }
    }
}
