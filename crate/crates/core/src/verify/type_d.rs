//! `𝔖_n × BD` decomposition of the fiber at a symmetric partition, computed
//! by grouping `μ_{2l}` weight components and, independently, by inducing
//! from `𝔖_g × N` where `N ≅ BD` sits inside `𝔖_{n−g}`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{first_diff, type_a_lhs, Check, FiberSource, SnMuModule};
use crate::characters::{build_dihedral_embedding, chi_i, dihedral_induced_powersum, BdChar};
use crate::macdonald::{mod_l_components, WeightSign};
use crate::partitions::{partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::Error;

/// `D_χ` for every irreducible `χ` of the binary dihedral group of order
/// `4l`, with `D_{0+}` and `D_{0−}` kept only as their sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDDecomposition {
    pub l: usize,
    pub n: usize,
    pub lambda: Partition,
    pub zero_sum: SymFunc<BigInt>,
    /// `D_{χ_i}` for `i = 1, …, l − 1`.
    pub two: Vec<SymFunc<BigInt>>,
    pub l_plus: SymFunc<BigInt>,
    pub l_minus: SymFunc<BigInt>,
}

impl TypeDDecomposition {
    /// `None` for the two characters that are not separated.
    pub fn get(&self, chi: BdChar) -> Option<&SymFunc<BigInt>> {
        match chi {
            BdChar::ZeroPlus | BdChar::ZeroMinus => None,
            BdChar::Two(k) => self.two.get(k.checked_sub(1)?),
            BdChar::LPlus => Some(&self.l_plus),
            BdChar::LMinus => Some(&self.l_minus),
        }
    }

    /// `Σ_χ dim(χ) D_χ`.
    pub fn dimension_sum(&self) -> SymFunc<BigInt> {
        let two = BigInt::from(2);
        let mut acc = &self.zero_sum + &self.l_plus;
        acc = &acc + &self.l_minus;
        for d in &self.two {
            acc = &acc + &d.scale_int(&two);
        }
        acc
    }

    pub fn is_nonnegative(&self) -> bool {
        self.zero_sum.is_nonnegative()
            && self.l_plus.is_nonnegative()
            && self.l_minus.is_nonnegative()
            && self.two.iter().all(SymFunc::is_nonnegative)
    }
}

/// Core data for the `2l` decomposition, after the symmetry and parity
/// preconditions.
fn preconditions(lambda: &Partition, l: usize) -> Result<(Partition, usize, usize), Error> {
    if l == 0 {
        return Err(Error::InvalidParameter(
            "binary dihedral needs l ≥ 1".into(),
        ));
    }
    if !lambda.is_symmetric() {
        return Err(Error::NotSymmetric(lambda.clone()));
    }
    let cq = lambda.core_quotient(2 * l);
    if !cq.r.is_multiple_of(2) {
        return Err(Error::OddCycleCount(2 * l, cq.r));
    }
    Ok((cq.core, cq.g, cq.r))
}

fn halve(f: &SymFunc<BigInt>) -> Result<SymFunc<BigInt>, Error> {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    f.to_rational()
        .scale(&half)
        .to_integral()
        .map_err(|_| Error::NotIntegral("half of the χ_l component"))
}

/// Grouping of the `μ_{2l}` weight components: `D_{χ_i}` is component `i`,
/// `D_{l±}` is half of component `l`, and `D_{0+} + D_{0−}` is component 0.
pub fn type_d_decomposition(
    lambda: &Partition,
    l: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<TypeDDecomposition, Error> {
    preconditions(lambda, l)?;
    let comps = type_a_lhs(lambda, 2 * l, sign, source)?;
    from_components(lambda, l, &comps)
}

fn from_components(
    lambda: &Partition,
    l: usize,
    comps: &SnMuModule,
) -> Result<TypeDDecomposition, Error> {
    let half = halve(&comps.components[l])?;
    Ok(TypeDDecomposition {
        l,
        n: lambda.size(),
        lambda: lambda.clone(),
        zero_sum: comps.components[0].clone(),
        two: (1..l).map(|i| comps.components[i].clone()).collect(),
        l_plus: half.clone(),
        l_minus: half,
    })
}

/// `D_{χ_i} = Σ_j Ind(P_j ⊠ χ_{i−j})` and
/// `D_{l+} = ½ Σ_j Ind(P_j ⊠ χ_{l−j})`, where `P_j` are the weight components
/// of the fiber at the `2l`-core and `χ_k` is induced from `τ^k` on `μ_{2l}`.
/// `D_{l−}` is set equal to `D_{l+}`.
pub fn type_d_induced(
    lambda: &Partition,
    l: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<TypeDDecomposition, Error> {
    let (core, _, r) = preconditions(lambda, l)?;
    let n = lambda.size();
    let two_l = 2 * l;
    let core_fiber = source.fiber(&core)?;
    let parts: Vec<SymFunc<BigRational>> = mod_l_components(&core_fiber, two_l, sign)
        .components
        .iter()
        .map(|p| p.to_rational().to_powersum())
        .collect();
    let emb = build_dihedral_embedding(l, r)?;
    let chars = emb.table().chars().to_vec();
    let ind: Vec<(BdChar, SymFunc<BigRational>)> = chars
        .iter()
        .map(|&c| (c, dihedral_induced_powersum(&emb, c)))
        .collect();
    let ind_of = |k: i64| -> SymFunc<BigRational> {
        let mut acc = SymFunc::zero(r * two_l, Basis::PowerSum);
        for c in chi_i(l, k) {
            let (_, f) = ind
                .iter()
                .find(|(d, _)| *d == c)
                .expect("character of the table");
            acc = &acc + f;
        }
        acc
    };
    let assemble = |i: i64| -> SymFunc<BigRational> {
        let mut acc = SymFunc::zero(n, Basis::PowerSum);
        for (j, pj) in parts.iter().enumerate() {
            if !pj.is_zero() {
                acc = &acc + &pj.product(&ind_of(i - j as i64));
            }
        }
        acc.to_schur()
    };
    let zero_sum = assemble(0).to_integral()?;
    let two = (1..l as i64)
        .map(|i| assemble(i).to_integral())
        .collect::<Result<Vec<_>, _>>()?;
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let l_plus = assemble(l as i64)
        .scale(&half)
        .to_integral()
        .map_err(|_| Error::NotIntegral("half of the induced χ_l sum"))?;
    Ok(TypeDDecomposition {
        l,
        n,
        lambda: lambda.clone(),
        zero_sum,
        two,
        l_minus: l_plus.clone(),
        l_plus,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDLambdaReport {
    pub lambda: Partition,
    pub core: Partition,
    pub g: usize,
    pub r: usize,
    pub checks: Vec<Check>,
    pub decomposition: Option<TypeDDecomposition>,
}

impl TypeDLambdaReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn diff_text(a: &SymFunc<BigInt>, b: &SymFunc<BigInt>, n: usize) -> Option<alloc::string::String> {
    let wrap = |f: &SymFunc<BigInt>| SnMuModule {
        n,
        ell: 1,
        components: alloc::vec![f.clone()],
    };
    first_diff(&wrap(a), &wrap(b)).map(|d| format!("s{}: {} vs {}", d.mu, d.lhs, d.rhs))
}

pub fn verify_type_d_lambda(
    lambda: &Partition,
    l: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<TypeDLambdaReport, Error> {
    let (core, g, r) = preconditions(lambda, l)?;
    let n = lambda.size();
    let mut checks = Vec::new();
    let comps = type_a_lhs(lambda, 2 * l, sign, source)?;

    let asym: Vec<usize> = (1..l)
        .filter(|&i| comps.components[i] != comps.components[2 * l - i])
        .collect();
    checks.push(Check::new(
        "components_symmetric",
        asym.is_empty(),
        if asym.is_empty() {
            alloc::string::String::new()
        } else {
            format!("component i differs from 2l − i for i in {asym:?}")
        },
    ));

    let grouped = from_components(lambda, l, &comps);
    checks.push(Check::new(
        "halving_exact",
        grouped.is_ok(),
        grouped
            .as_ref()
            .err()
            .map(|e| format!("{e}"))
            .unwrap_or_default(),
    ));
    let induced = type_d_induced(lambda, l, sign, source);
    let decomposition = match (grouped, induced) {
        (Ok(a), Ok(b)) => {
            let mut mismatches = Vec::new();
            if let Some(d) = diff_text(&a.zero_sum, &b.zero_sum, n) {
                mismatches.push(format!("D0 sum {d}"));
            }
            for (i, (x, y)) in a.two.iter().zip(&b.two).enumerate() {
                if let Some(d) = diff_text(x, y, n) {
                    mismatches.push(format!("D{} {d}", i + 1));
                }
            }
            if let Some(d) = diff_text(&a.l_plus, &b.l_plus, n) {
                mismatches.push(format!("D{}+ {d}", l));
            }
            checks.push(Check::new(
                "routes_agree",
                mismatches.is_empty(),
                mismatches.join("; "),
            ));
            let regular = SymFunc::<BigInt>::regular(n).to_schur();
            checks.push(Check::new(
                "dimension_sum_regular",
                a.dimension_sum() == regular,
                diff_text(&a.dimension_sum(), &regular, n).unwrap_or_default(),
            ));
            checks.push(Check::new("nonnegative", a.is_nonnegative(), ""));
            Some(a)
        }
        (_, Err(e)) => {
            checks.push(Check::new(
                "routes_agree",
                false,
                format!("induction failed: {e}"),
            ));
            None
        }
        (Err(_), _) => None,
    };
    Ok(TypeDLambdaReport {
        lambda: lambda.clone(),
        core,
        g,
        r,
        checks,
        decomposition,
    })
}

/// `r_{2l}(λ)` is even for every symmetric `λ ⊢ n`.
pub fn cycle_count_parity(n: usize, l: usize) -> Check {
    let odd: Vec<Partition> = partitions_of(n)
        .into_iter()
        .filter(|p| p.is_symmetric() && p.core_quotient(2 * l).r % 2 != 0)
        .collect();
    let detail = odd
        .iter()
        .map(|p| format!("{p}"))
        .collect::<Vec<_>>()
        .join(" ");
    Check::new("r_2l_even", odd.is_empty(), detail)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeDReport {
    pub n: usize,
    pub l: usize,
    pub sign: WeightSign,
    pub parity: Check,
    pub per_lambda: Vec<TypeDLambdaReport>,
}

impl TypeDReport {
    pub fn all_pass(&self) -> bool {
        self.parity.pass && self.per_lambda.iter().all(TypeDLambdaReport::pass)
    }
}

/// Every symmetric partition of `n`.
pub fn verify_type_d(
    n: usize,
    l: usize,
    sign: WeightSign,
    source: &dyn FiberSource,
) -> Result<TypeDReport, Error> {
    let parity = cycle_count_parity(n, l);
    let per_lambda = partitions_of(n)
        .iter()
        .filter(|p| p.is_symmetric() && p.core_quotient(2 * l).r % 2 == 0)
        .map(|p| verify_type_d_lambda(p, l, sign, source))
        .collect::<Result<_, _>>()?;
    Ok(TypeDReport {
        n,
        l,
        sign,
        parity,
        per_lambda,
    })
}
