//! Both sides of the decomposition identities for Procesi fibers, assembled
//! independently and compared exactly.

mod edge;
mod fiber;
mod type_a;
mod type_d;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactnum::IntPoly;
use crate::macdonald::{macdonald_bounded, ProcesiFiber, DEFAULT_MAX_N};
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::Error;

pub use edge::{
    circulant_inverse, coinvariant_components, fake_degree_module, verify_edge_cases, EdgeFamily,
    EdgeLambdaReport, EdgeReport,
};
pub use fiber::{fake_degree_identity_sides, fiber_checks, specialization_sides};
pub use type_a::{
    convention_check, type_a_lhs, type_a_rhs, type_a_rhs_from, verify_type_a, verify_type_a_lambda,
    LambdaReport, TypeAReport,
};
pub use type_d::{
    cycle_count_parity, type_d_decomposition, type_d_induced, verify_type_d, verify_type_d_lambda,
    TypeDDecomposition, TypeDLambdaReport, TypeDReport,
};

/// Where fibers come from. Implementations must be safe to share across
/// worker threads.
pub trait FiberSource: Sync {
    fn fiber(&self, lambda: &Partition) -> Result<Arc<ProcesiFiber>, Error>;
}

/// Computes every fiber from scratch.
#[derive(Clone, Copy, Debug)]
pub struct DirectFibers {
    pub max_n: usize,
}

impl Default for DirectFibers {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl FiberSource for DirectFibers {
    fn fiber(&self, lambda: &Partition) -> Result<Arc<ProcesiFiber>, Error> {
        macdonald_bounded(lambda, self.max_n).map(Arc::new)
    }
}

/// The class `Σ_i [M_i ⊠ τ^i]` of an `𝔖_n × μ_ℓ`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnMuModule {
    pub n: usize,
    pub ell: usize,
    pub components: Vec<SymFunc<BigInt>>,
}

impl SnMuModule {
    pub fn zero(n: usize, ell: usize) -> Self {
        Self {
            n,
            ell,
            components: alloc::vec![SymFunc::zero(n, Basis::Schur); ell],
        }
    }

    pub fn component(&self, i: i64) -> &SymFunc<BigInt> {
        &self.components[i.rem_euclid(self.ell as i64) as usize]
    }

    /// `Σ_i M_i`, the underlying `𝔖_n`-module.
    pub fn total(&self) -> SymFunc<BigInt> {
        self.components
            .iter()
            .fold(SymFunc::zero(self.n, Basis::Schur), |acc, c| &acc + c)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.components.iter().all(SymFunc::is_nonnegative)
    }

    /// Multiplication by `Σ_k f_k τ^k`: component `i` becomes
    /// `Σ_k f_k M_{i−k}`.
    pub fn twist(&self, f: &[BigInt]) -> Self {
        assert_eq!(
            f.len(),
            self.ell,
            "twist by an element of the wrong group ring"
        );
        let mut out = Self::zero(self.n, self.ell);
        for (i, slot) in out.components.iter_mut().enumerate() {
            for (k, fk) in f.iter().enumerate() {
                if !fk.is_zero() {
                    let src = self.component(i as i64 - k as i64);
                    *slot = &*slot + &src.scale_int(fk);
                }
            }
        }
        out
    }
}

/// The first Schur coefficient where two modules disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff {
    pub component: usize,
    pub mu: Partition,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl fmt::Display for Diff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "component {} at s{}: lhs {} vs rhs {}",
            self.component, self.mu, self.lhs, self.rhs
        )
    }
}

/// Scans components in order and, within one, partitions in decreasing
/// lexicographic order.
pub fn first_diff(lhs: &SnMuModule, rhs: &SnMuModule) -> Option<Diff> {
    let ell = lhs.ell.max(rhs.ell);
    for i in 0..ell {
        let zero = SymFunc::zero(lhs.n, Basis::Schur);
        let a = lhs.components.get(i).unwrap_or(&zero);
        let b = rhs.components.get(i).unwrap_or(&zero);
        if let Some(d) = first_diff_symfunc(a, b) {
            return Some(Diff {
                component: i,
                mu: d.0,
                lhs: d.1,
                rhs: d.2,
            });
        }
    }
    None
}

fn first_diff_symfunc(
    a: &SymFunc<BigInt>,
    b: &SymFunc<BigInt>,
) -> Option<(Partition, BigInt, BigInt)> {
    let mut keys: Vec<&Partition> = a
        .terms()
        .map(|(p, _)| p)
        .chain(b.terms().map(|(p, _)| p))
        .collect();
    keys.sort_unstable_by(|x, y| y.cmp(x));
    keys.dedup();
    keys.into_iter().find_map(|mu| {
        let (x, y) = (a.coeff(mu), b.coeff(mu));
        (x != y).then(|| (mu.clone(), x, y))
    })
}

/// A named yes/no finding with a short explanation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Coefficient sums `f_j = Σ_{a ≡ j (mod ℓ)} [q^a] f`.
pub fn residues(f: &IntPoly, ell: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); ell];
    for (a, c) in f.terms() {
        out[a % ell] += c;
    }
    out
}
