//! `𝔖_n × μ_ℓ` decomposition of a fiber against the induced-from-core side.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{first_diff, Check, Diff, FiberSource, SnMuModule};
use crate::characters::cyclic_induced_powersum;
use crate::macdonald::{coinvariant_graded_frobenius, mod_l_components, ProcesiFiber, WeightSign};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::Error;

/// Weight components of `H̃_λ`.
pub fn type_a_lhs(
    lambda: &Partition,
    ell: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<SnMuModule, Error> {
    let fiber = source.fiber(lambda)?;
    Ok(module_of(&fiber, ell, sign))
}

fn module_of(fiber: &ProcesiFiber, ell: usize, sign: WeightSign) -> SnMuModule {
    SnMuModule {
        n: fiber.lambda().size(),
        ell,
        components: mod_l_components(fiber, ell, sign).components,
    }
}

/// `Σ_j Ind_{𝔖_g × C}(P_j ⊠ θ^{i−j})` where `P_j` are the weight components
/// of the fiber at the `ℓ`-core.
pub fn type_a_rhs(
    lambda: &Partition,
    ell: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<SnMuModule, Error> {
    let cq = lambda.core_quotient(ell);
    let core = source.fiber(&cq.core)?;
    let parts = mod_l_components(&core, ell, sign).components;
    type_a_rhs_from(&parts, ell, cq.r)
}

/// The induced side for arbitrary degree-`g` components `parts[j]`, with `r`
/// cycles of length `ℓ`. Products are taken in the power-sum basis, where
/// they are unions of cycle types.
pub fn type_a_rhs_from(
    parts: &[SymFunc<BigInt>],
    ell: usize,
    r: usize,
) -> Result<SnMuModule, Error> {
    if parts.len() != ell {
        return Err(Error::SizeMismatch(parts.len(), ell));
    }
    let g = parts[0].degree();
    let n = g + r * ell;
    let induced: Vec<SymFunc<BigRational>> = (0..ell as i64)
        .map(|k| cyclic_induced_powersum(ell, r, k))
        .collect();
    let parts_p: Vec<SymFunc<BigRational>> = parts
        .iter()
        .map(|p| p.to_rational().to_powersum())
        .collect();
    let mut components = Vec::with_capacity(ell);
    for i in 0..ell {
        let mut acc = SymFunc::zero(n, Basis::PowerSum);
        for (j, pj) in parts_p.iter().enumerate() {
            if pj.is_zero() {
                continue;
            }
            let k = (i + ell - j) % ell;
            acc = &acc + &pj.product(&induced[k]);
        }
        components.push(acc.to_schur().to_integral()?);
    }
    Ok(SnMuModule { n, ell, components })
}

/// Outcome for one partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaReport {
    pub lambda: Partition,
    pub core: Partition,
    pub g: usize,
    pub r: usize,
    pub pass: bool,
    pub diff: Option<Diff>,
    /// Both sides, kept only when they differ.
    pub sides: Option<(SnMuModule, SnMuModule)>,
}

pub fn verify_type_a_lambda(
    lambda: &Partition,
    ell: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<LambdaReport, Error> {
    let cq = lambda.core_quotient(ell);
    let lhs = type_a_lhs(lambda, ell, sign, source)?;
    let rhs = type_a_rhs(lambda, ell, sign, source)?;
    let diff = first_diff(&lhs, &rhs);
    let pass = diff.is_none() && lhs.is_nonnegative() && rhs.is_nonnegative();
    Ok(LambdaReport {
        lambda: lambda.clone(),
        core: cq.core,
        g: cq.g,
        r: cq.r,
        pass,
        sides: (!pass).then_some((lhs, rhs)),
        diff,
    })
}

/// All partitions of `n` at one `ℓ`. The weight-convention check runs first
/// and a failure there aborts the run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAReport {
    pub n: usize,
    pub ell: usize,
    pub sign: WeightSign,
    pub convention: Check,
    pub per_lambda: Vec<LambdaReport>,
}

impl TypeAReport {
    pub fn all_pass(&self) -> bool {
        self.convention.pass && self.per_lambda.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LambdaReport> {
        self.per_lambda.iter().filter(|r| !r.pass)
    }
}

/// Checks the weight convention on the coinvariant algebra: the components
/// of `H̃_(n)` must match the induced side built from the coinvariants of
/// `𝔖_g`, `g = n mod ℓ`, computed from fake degrees alone.
pub fn convention_check(
    n: usize,
    ell: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<Check, Error> {
    let g = n % ell;
    let lhs = type_a_lhs(&Partition::row(n), ell, sign, source)?;
    let coinv_g = ProcesiFiber::from_parts(Partition::row(g), coinvariant_graded_frobenius(g))?;
    let rhs = type_a_rhs_from(
        &mod_l_components(&coinv_g, ell, sign).components,
        ell,
        n / ell,
    )?;
    let diff = first_diff(&lhs, &rhs);
    let detail = match &diff {
        None => format!(
            "weights {} agree on coinvariants of degree {n}",
            sign.name()
        ),
        Some(d) => format!("weights {}: {d}", sign.name()),
    };
    Ok(Check::new("weight_convention", diff.is_none(), detail))
}

pub fn verify_type_a(
    n: usize,
    ell: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<TypeAReport, Error> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
    }
    let convention = convention_check(n, ell, sign, source)?;
    if !convention.pass {
        return Err(Error::InvalidParameter(format!(
            "weight convention check failed, refusing to verify: {}",
            convention.detail
        )));
    }
    let per_lambda = partitions_of(n)
        .iter()
        .map(|lambda| verify_type_a_lambda(lambda, ell, sign, source))
        .collect::<Result<_, _>>()?;
    Ok(TypeAReport {
        n,
        ell,
        sign,
        convention,
        per_lambda,
    })
}
