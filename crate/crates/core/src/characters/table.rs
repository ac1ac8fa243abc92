//! Irreducible characters of `𝔖_n` via Murnaghan–Nakayama, and class functions.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use once_cell::race::OnceBox;

use crate::exactnum::CycInt;
use crate::partitions::{factorial, partitions_of, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::Error;

/// Largest `n` whose table is kept in the process-wide cache.
pub const MAX_CACHED_N: usize = 16;

static TABLES: [OnceBox<CharacterTable>; MAX_CACHED_N + 1] =
    [const { OnceBox::new() }; MAX_CACHED_N + 1];

type Memo = BTreeMap<(Vec<usize>, Vec<usize>), i64>;

/// `χ_λ` on the class of cycle type `μ`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64, Error> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    if lambda.size() <= MAX_CACHED_N {
        return Ok(character_table(lambda.size()).value(lambda, mu));
    }
    let beads = lambda.beta_set().beads().to_vec();
    Ok(mn(&beads, mu.parts(), &mut Memo::new()))
}

/// Rim-hook recursion on a β-set: removing a hook of length `m` moves one bead
/// from `b` to `b − m`, with sign given by the beads jumped over.
fn mn(beads: &[usize], mu: &[usize], memo: &mut Memo) -> i64 {
    let Some((&m, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beads.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (idx, &b) in beads.iter().enumerate() {
        if b < m || beads.contains(&(b - m)) {
            continue;
        }
        let between = beads.iter().filter(|&&c| c > b - m && c < b).count();
        let mut moved = beads.to_vec();
        moved[idx] = b - m;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&moved, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Character table of `𝔖_n`; rows and columns both follow
/// [`partitions_of`] (decreasing lexicographic order).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    z: Vec<BigInt>,
}

impl CharacterTable {
    pub fn build(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = Memo::new();
        let values = partitions
            .iter()
            .map(|lambda| {
                let beads = lambda.beta_set().beads().to_vec();
                partitions
                    .iter()
                    .map(|mu| mn(&beads, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let z = partitions.iter().map(Partition::z).collect();
        Self {
            n,
            partitions,
            index,
            values,
            z,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> usize {
        *self
            .index
            .get(p)
            .unwrap_or_else(|| panic!("{p} is not a partition of {}", self.n))
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index_of(lambda)][self.index_of(mu)]
    }

    pub fn value_at(&self, lambda: usize, mu: usize) -> i64 {
        self.values[lambda][mu]
    }

    pub fn z(&self, mu: usize) -> &BigInt {
        &self.z[mu]
    }
}

/// The cached table for `n ≤ MAX_CACHED_N`. Larger tables must be built with
/// [`CharacterTable::build`] and held by the caller.
pub fn character_table(n: usize) -> &'static CharacterTable {
    assert!(
        n <= MAX_CACHED_N,
        "character tables are cached up to n = {MAX_CACHED_N}; build larger ones explicitly"
    );
    TABLES[n].get_or_init(|| Box::new(CharacterTable::build(n)))
}

/// A class function on `𝔖_n` with values in `ℤ[ζ_m]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    order: u32,
    values: BTreeMap<Partition, CycInt>,
}

impl ClassFunction {
    /// Zero on every class.
    pub fn zero(n: usize, order: u32) -> Self {
        Self {
            n,
            order,
            values: partitions_of(n)
                .into_iter()
                .map(|p| (p, CycInt::zero(order)))
                .collect(),
        }
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        let table = character_table(lambda.size());
        Self::from_integers(
            lambda.size(),
            table
                .partitions()
                .iter()
                .map(|mu| (mu.clone(), BigInt::from(table.value(lambda, mu)))),
        )
    }

    pub fn from_integers(n: usize, values: impl IntoIterator<Item = (Partition, BigInt)>) -> Self {
        let mut f = Self::zero(n, 1);
        for (mu, v) in values {
            f.set(&mu, CycInt::from_int(1, v));
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn value(&self, mu: &Partition) -> &CycInt {
        &self.values[mu]
    }

    pub fn set(&mut self, mu: &Partition, v: CycInt) {
        assert_eq!(v.order(), self.order, "cyclotomic order mismatch");
        let slot = self
            .values
            .get_mut(mu)
            .unwrap_or_else(|| panic!("{mu} is not a class of 𝔖_{}", self.n));
        *slot = v;
    }

    pub fn values(&self) -> impl Iterator<Item = (&Partition, &CycInt)> {
        self.values.iter()
    }

    /// Integer values, when every value is a rational integer.
    pub fn integer_values(&self) -> Option<BTreeMap<Partition, BigInt>> {
        self.values
            .iter()
            .map(|(mu, v)| v.to_integer().map(|c| (mu.clone(), c)))
            .collect()
    }

    /// `⟨f, g⟩ = Σ_μ f(μ) conj(g(μ)) / z_μ`, when it is rational.
    pub fn inner(&self, other: &ClassFunction) -> Option<BigRational> {
        assert_eq!(self.n, other.n, "class functions on different groups");
        let m = lcm(self.order, other.order);
        let nfact = factorial(self.n);
        let mut acc = CycInt::zero(m);
        for (mu, v) in &self.values {
            let w = other.values[mu].lift(m).conj();
            let weight = &nfact / mu.z();
            acc = &acc + &(&v.lift(m) * &w).scale(&weight);
        }
        acc.to_integer().map(|c| BigRational::new(c, nfact))
    }

    /// Frobenius characteristic `Σ_μ f(μ) p_μ / z_μ`, for integer-valued `f`.
    pub fn frobenius(&self) -> Result<SymFunc<BigRational>, Error> {
        let values = self
            .integer_values()
            .ok_or(Error::NotIntegral("class function"))?;
        let mut out = SymFunc::zero(self.n, Basis::PowerSum);
        for (mu, v) in values {
            if !v.is_zero() {
                out.add_term(&mu, BigRational::new(v, mu.z()));
            }
        }
        Ok(out)
    }

    /// Reads a class function off a power-sum expansion: `χ(μ) = z_μ · [p_μ] f`.
    pub fn from_frobenius(f: &SymFunc<BigRational>) -> Result<Self, Error> {
        let f = f.to_powersum();
        let mut out = Self::zero(f.degree(), 1);
        for (mu, c) in f.terms() {
            let v = c * BigRational::from_integer(mu.z());
            if !v.is_integer() {
                return Err(Error::NotIntegral("character value"));
            }
            out.set(mu, CycInt::from_int(1, v.to_integer()));
        }
        Ok(out)
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / crate::exactnum::gcd_u64(a as u64, b as u64) as u32 * b
}
