//! The subgroup `W = 𝔖_g × ⟨w⟩` of `𝔖_n`, where `w` is a product of `r`
//! disjoint `ℓ`-cycles on the last `rℓ` points.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::perm::Permutation;
use super::table::{character_table, character_value, ClassFunction};
use crate::exactnum::{gcd_u64, CycInt};
use crate::partitions::{factorial, partitions_of, Partition};
use crate::symfunc::{Basis, Coefficient, SymFunc};
use crate::Error;

/// `n = g + rℓ`, with `w` acting on `g+1 ..= n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroupSpec {
    n: usize,
    ell: usize,
    g: usize,
    r: usize,
}

impl CyclicSubgroupSpec {
    pub fn new(n: usize, ell: usize, g: usize) -> Result<Self, Error> {
        if ell == 0 {
            return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
        }
        if g > n || !(n - g).is_multiple_of(ell) {
            return Err(Error::InvalidParameter(format!(
                "n − g = {n} − {g} is not a nonnegative multiple of ℓ = {ell}"
            )));
        }
        Ok(Self {
            n,
            ell,
            g,
            r: (n - g) / ell,
        })
    }

    /// The spec attached to the `ℓ`-core decomposition of `λ`.
    pub fn for_partition(lambda: &Partition, ell: usize) -> Result<Self, Error> {
        if ell == 0 {
            return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
        }
        let cq = lambda.core_quotient(ell);
        Self::new(lambda.size(), ell, cq.g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `w` as a permutation of `n` points.
    pub fn generator(&self) -> Permutation {
        let mut images: Vec<usize> = (0..self.n).collect();
        for c in 0..self.r {
            let base = self.g + c * self.ell;
            for k in 0..self.ell {
                images[base + k] = base + (k + 1) % self.ell;
            }
        }
        Permutation::from_images(images).expect("cycle blocks are disjoint")
    }

    /// Cycle type of `w^i` on all `n` points.
    pub fn power_cycle_type(&self, i: i64) -> Partition {
        self.moved_cycle_type(i).union(&Partition::column(self.g))
    }

    /// Cycle type of `w^i` restricted to the `rℓ` points it moves.
    pub fn moved_cycle_type(&self, i: i64) -> Partition {
        cyclic_power_type(self.ell, self.r, i)
    }
}

pub(crate) fn cyclic_power_type(ell: usize, r: usize, i: i64) -> Partition {
    let e = i.rem_euclid(ell as i64) as u64;
    let d = if e == 0 {
        ell
    } else {
        gcd_u64(e, ell as u64) as usize
    };
    Partition::from_unsorted(alloc::vec![ell / d; r * d])
}

/// `Fr(Ind_{⟨w⟩}^{𝔖_{rℓ}} θ^k) = (1/ℓ) Σ_i ζ^{ki} p_{type(w^i)}`.
///
/// With `r = 0` the cyclic group maps trivially into `𝔖_0`, so the result is
/// `1` when `ℓ | k` and `0` otherwise.
pub fn cyclic_induced_powersum(ell: usize, r: usize, k: i64) -> SymFunc<BigRational> {
    assert!(ell >= 1, "ℓ must be at least 1");
    let order = ell as u32;
    let mut by_type: BTreeMap<Partition, CycInt> = BTreeMap::new();
    for i in 0..ell as i64 {
        let slot = by_type
            .entry(cyclic_power_type(ell, r, i))
            .or_insert_with(|| CycInt::zero(order));
        *slot = &*slot + &CycInt::zeta_pow(order, k * i);
    }
    let mut out = SymFunc::zero(r * ell, Basis::PowerSum);
    let denom = BigInt::from(ell);
    for (mu, v) in by_type {
        let v = v
            .to_integer()
            .expect("Ramanujan sums over a full divisor class are rational integers");
        if !v.is_zero() {
            out.add_term(&mu, BigRational::new(v, denom.clone()));
        }
    }
    out
}

/// Schur expansion of [`cyclic_induced_powersum`].
pub fn cyclic_induced_schur(ell: usize, r: usize, k: i64) -> SymFunc<BigInt> {
    cyclic_induced_powersum(ell, r, k)
        .to_schur()
        .to_integral()
        .expect("an induced character has integral Schur coefficients")
}

/// The character of `Ind_{⟨w⟩}^{𝔖_{rℓ}}(θ^k)`; the spec must have `g = 0`.
pub fn induce_from_cyclic(spec: &CyclicSubgroupSpec, k: i64) -> Result<ClassFunction, Error> {
    if spec.g != 0 {
        return Err(Error::InvalidParameter(format!(
            "induction from ⟨w⟩ alone needs g = 0, got g = {}",
            spec.g
        )));
    }
    ClassFunction::from_frobenius(&cyclic_induced_powersum(spec.ell, spec.r, k))
}

/// `Fr(Ind_{𝔖_g × ⟨w⟩}^{𝔖_n}(V ⊠ θ^k)) = Fr(V) · Fr(Ind_{⟨w⟩} θ^k)`.
pub fn induce_product_with_cyclic<C: Coefficient>(
    v: &SymFunc<C>,
    k: i64,
    spec: &CyclicSubgroupSpec,
) -> Result<SymFunc<C>, Error> {
    if v.degree() != spec.g {
        return Err(Error::SizeMismatch(v.degree(), spec.g));
    }
    let ind = cyclic_induced_schur(spec.ell, spec.r, k).map_coeffs(C::from_int);
    Ok(v.to_schur().product(&ind))
}

/// Multiplicities `a_{μ,j} = ⟨Res_W V_λ, V_μ ⊠ θ^j⟩` for `μ ⊢ g`, `0 ≤ j < ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionCoeffs {
    pub ell: usize,
    pub g: usize,
    /// Row labels, in the order of [`partitions_of`].
    pub mus: Vec<Partition>,
    /// `a[row][j]`.
    pub a: Vec<Vec<BigInt>>,
}

impl RestrictionCoeffs {
    pub fn get(&self, mu: &Partition, j: i64) -> &BigInt {
        let row = self
            .mus
            .iter()
            .position(|m| m == mu)
            .unwrap_or_else(|| panic!("{mu} is not a partition of {}", self.g));
        &self.a[row][j.rem_euclid(self.ell as i64) as usize]
    }

    /// `Σ_μ a_{μ,j} · dim V_μ`: the multiplicity of `θ^j` in `Res_{⟨w⟩} V_λ`.
    pub fn theta_multiplicities(&self) -> Vec<BigInt> {
        (0..self.ell)
            .map(|j| {
                self.mus
                    .iter()
                    .zip(&self.a)
                    .map(|(mu, row)| &row[j] * mu.dimension())
                    .sum()
            })
            .collect()
    }
}

/// Restriction multiplicities of `V_λ` to `𝔖_g × ⟨w⟩`, computed as
/// `(1/(g!·ℓ)) Σ_i Σ_{ν ⊢ g} (g!/z_ν) χ_μ(ν) χ_λ(ν ∪ type(w^i)) ζ^{−ij}`.
pub fn restriction_coeffs(
    lambda: &Partition,
    ell: usize,
    g: usize,
) -> Result<RestrictionCoeffs, Error> {
    let spec = CyclicSubgroupSpec::new(lambda.size(), ell, g)?;
    let table_g = character_table(g);
    let gfact = factorial(g);
    let nus = partitions_of(g);
    let order = ell as u32;
    let denom = &gfact * BigInt::from(ell);
    let lambda_vals: Vec<Vec<i64>> = (0..ell as i64)
        .map(|i| {
            let t = spec.moved_cycle_type(i);
            nus.iter()
                .map(|nu| character_value(lambda, &nu.union(&t)))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut a = Vec::with_capacity(nus.len());
    for mu in &nus {
        let xs: Vec<BigInt> = lambda_vals
            .iter()
            .map(|vals| {
                nus.iter()
                    .zip(vals)
                    .map(|(nu, &lv)| (&gfact / nu.z()) * BigInt::from(table_g.value(mu, nu) * lv))
                    .sum()
            })
            .collect();
        let mut row = Vec::with_capacity(ell);
        for j in 0..ell as i64 {
            let total = CycInt::from_exponent_sum(
                order,
                xs.iter().enumerate().map(|(i, x)| (-(i as i64) * j, x)),
            )
            .to_integer()
            .ok_or(Error::NotIntegral("restriction multiplicity"))?;
            let (q, rem) = total.div_rem(&denom);
            if !rem.is_zero() {
                return Err(Error::NotIntegral("restriction multiplicity"));
            }
            row.push(q);
        }
        a.push(row);
    }
    Ok(RestrictionCoeffs {
        ell,
        g,
        mus: nus,
        a,
    })
}
