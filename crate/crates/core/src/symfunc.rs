//! Homogeneous symmetric functions in the Schur and power-sum bases.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::{character_table, character_value, ClassFunction};
use crate::exactnum::{IntPoly, LaurentQT, RationalQ};
use crate::partitions::{factorial, partitions_of, Partition};
use crate::Error;

/// Coefficient rings a [`SymFunc`] can carry.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_int(c: &BigInt) -> Self;

    fn scale_int(&self, c: &BigInt) -> Self {
        self.clone() * Self::from_int(c)
    }
}

/// Coefficient rings containing `ℚ`, needed to reach the power-sum basis.
pub trait FieldCoefficient: Coefficient {
    fn div_int(&self, c: &BigInt) -> Self;
}

impl Coefficient for BigInt {
    fn from_int(c: &BigInt) -> Self {
        c.clone()
    }
}

impl Coefficient for BigRational {
    fn from_int(c: &BigInt) -> Self {
        BigRational::from_integer(c.clone())
    }
}

impl FieldCoefficient for BigRational {
    fn div_int(&self, c: &BigInt) -> Self {
        self / BigRational::from_integer(c.clone())
    }
}

impl Coefficient for LaurentQT {
    fn from_int(c: &BigInt) -> Self {
        LaurentQT::constant(c.clone())
    }

    fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(c)
    }
}

impl Coefficient for RationalQ {
    fn from_int(c: &BigInt) -> Self {
        RationalQ::from_int(c.clone())
    }

    fn scale_int(&self, c: &BigInt) -> Self {
        RationalQ::scale_int(self, c)
    }
}

impl FieldCoefficient for RationalQ {
    fn div_int(&self, c: &BigInt) -> Self {
        RationalQ::div_int(self, c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    Schur,
    PowerSum,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Schur => "schur",
            Basis::PowerSum => "powersum",
        })
    }
}

/// `Σ_λ c_λ b_λ` over partitions `λ ⊢ degree`, with `b = s` or `b = p`.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc<C> {
    degree: usize,
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> SymFunc<C> {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        Self {
            degree,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn schur(lambda: &Partition) -> Self {
        let mut f = Self::zero(lambda.size(), Basis::Schur);
        f.add_term(lambda, C::from_int(&BigInt::one()));
        f
    }

    pub fn powersum(mu: &Partition) -> Self {
        let mut f = Self::zero(mu.size(), Basis::PowerSum);
        f.add_term(mu, C::from_int(&BigInt::one()));
        f
    }

    /// `p_1^n`, the Frobenius image of the regular representation.
    pub fn regular(n: usize) -> Self {
        Self::powersum(&Partition::column(n))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, lambda: &Partition, c: C) {
        assert_eq!(
            lambda.size(),
            self.degree,
            "term {lambda} does not have degree {}",
            self.degree
        );
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(lambda) {
            Some(slot) => {
                let sum = slot.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(lambda);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(lambda.clone(), c);
            }
        }
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SymFunc<D> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lambda, c) in &self.terms {
            out.add_term(lambda, f(c));
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.clone() * c.clone())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.map_coeffs(|x| x.scale_int(c))
    }

    /// Schur expansion, using `p_μ = Σ_λ χ_λ(μ) s_λ`.
    pub fn to_schur(&self) -> Self {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let mut out = Self::zero(self.degree, Basis::Schur);
        for_each_character(self.degree, |lambdas, mu, chi| {
            if let Some(c) = self.terms.get(mu) {
                for (lambda, &v) in lambdas.iter().zip(chi) {
                    if v != 0 {
                        out.add_term(lambda, c.scale_int(&BigInt::from(v)));
                    }
                }
            }
        });
        out
    }

    /// Product of symmetric functions, i.e. the induced product of modules.
    /// Power sums multiply by union; Schur functions via Littlewood–Richardson
    /// coefficients obtained from characters.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "product of mixed bases");
        let mut out = Self::zero(self.degree + other.degree, self.basis);
        match self.basis {
            Basis::PowerSum => {
                for (a, x) in &self.terms {
                    for (b, y) in &other.terms {
                        out.add_term(&a.union(b), x.clone() * y.clone());
                    }
                }
            }
            Basis::Schur => {
                for (a, x) in &self.terms {
                    for (b, y) in &other.terms {
                        let xy = x.clone() * y.clone();
                        for (nu, c) in littlewood_richardson(a, b) {
                            out.add_term(&nu, xy.scale_int(&c));
                        }
                    }
                }
            }
        }
        out
    }

    /// Kronecker (inner tensor) product, returned in the Schur basis.
    pub fn kronecker(&self, other: &Self) -> Result<Self, Error> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch(self.degree, other.degree));
        }
        let a = self.to_schur();
        let b = other.to_schur();
        let mut out = Self::zero(self.degree, Basis::Schur);
        for (lambda, x) in &a.terms {
            for (mu, y) in &b.terms {
                let xy = x.clone() * y.clone();
                for (nu, g) in kronecker_coefficients(lambda, mu) {
                    out.add_term(&nu, xy.scale_int(&g));
                }
            }
        }
        Ok(out)
    }
}

impl<C: FieldCoefficient> SymFunc<C> {
    /// Power-sum expansion, using `s_λ = Σ_μ χ_λ(μ) p_μ / z_μ`.
    pub fn to_powersum(&self) -> Self {
        if self.basis == Basis::PowerSum {
            return self.clone();
        }
        let mut out = Self::zero(self.degree, Basis::PowerSum);
        let present: Vec<(usize, &C)> = {
            let lambdas = partitions_of(self.degree);
            lambdas
                .iter()
                .enumerate()
                .filter_map(|(i, l)| self.terms.get(l).map(|c| (i, c)))
                .collect()
        };
        for_each_character(self.degree, |_, mu, chi| {
            let mut acc = C::zero();
            for &(i, c) in &present {
                if chi[i] != 0 {
                    acc = acc + c.scale_int(&BigInt::from(chi[i]));
                }
            }
            out.add_term(mu, acc.div_int(&mu.z()));
        });
        out
    }
}

impl SymFunc<BigRational> {
    /// The same function with integer coefficients, when every coefficient is
    /// an integer.
    pub fn to_integral(&self) -> Result<SymFunc<BigInt>, Error> {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (lambda, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NotIntegral("symmetric function coefficient"));
            }
            out.add_term(lambda, c.to_integer());
        }
        Ok(out)
    }
}

impl SymFunc<BigInt> {
    pub fn to_rational(&self) -> SymFunc<BigRational> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c >= &BigInt::zero())
    }
}

/// Calls `f(partitions, μ, column)` for every `μ ⊢ n`, where `column[i]` is
/// `χ_{partitions[i]}(μ)`.
fn for_each_character(n: usize, mut f: impl FnMut(&[Partition], &Partition, &[i64])) {
    if n <= crate::characters::MAX_CACHED_N {
        let table = character_table(n);
        let lambdas = table.partitions();
        let mut column = alloc::vec![0i64; lambdas.len()];
        for (j, mu) in lambdas.iter().enumerate() {
            for (i, slot) in column.iter_mut().enumerate() {
                *slot = table.value_at(i, j);
            }
            f(lambdas, mu, &column);
        }
    } else {
        let table = crate::characters::CharacterTable::build(n);
        let lambdas = table.partitions();
        for (j, mu) in lambdas.iter().enumerate() {
            let column: Vec<i64> = (0..lambdas.len()).map(|i| table.value_at(i, j)).collect();
            f(lambdas, mu, &column);
        }
    }
}

/// `c^ν_{λμ} = Σ_{α ⊢ |λ|, β ⊢ |μ|} χ_λ(α) χ_μ(β) χ_ν(α ∪ β) / (z_α z_β)`.
pub fn littlewood_richardson(lambda: &Partition, mu: &Partition) -> Vec<(Partition, BigInt)> {
    let (a, b) = (lambda.size(), mu.size());
    let ta = character_table(a);
    let tb = character_table(b);
    let fa = factorial(a);
    let fb = factorial(b);
    let mut pairs: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for alpha in ta.partitions() {
        let xa = ta.value(lambda, alpha);
        if xa == 0 {
            continue;
        }
        let wa = &fa / alpha.z() * BigInt::from(xa);
        for beta in tb.partitions() {
            let xb = tb.value(mu, beta);
            if xb == 0 {
                continue;
            }
            let w = &wa * (&fb / beta.z()) * BigInt::from(xb);
            *pairs.entry(alpha.union(beta)).or_insert_with(BigInt::zero) += w;
        }
    }
    let denom = fa * fb;
    partitions_of(a + b)
        .into_iter()
        .filter_map(|nu| {
            let total: BigInt = pairs
                .iter()
                .map(|(gamma, w)| {
                    w * BigInt::from(character_value(&nu, gamma).expect("sizes agree"))
                })
                .sum();
            let c = total / &denom;
            (!c.is_zero()).then_some((nu, c))
        })
        .collect()
}

/// `g_{λμν} = Σ_α χ_λ(α) χ_μ(α) χ_ν(α) / z_α`, as `(ν, g)` pairs.
pub fn kronecker_coefficients(lambda: &Partition, mu: &Partition) -> Vec<(Partition, BigInt)> {
    let n = lambda.size();
    let table = character_table(n);
    let nfact = factorial(n);
    let weights: Vec<BigInt> = table
        .partitions()
        .iter()
        .map(|alpha| {
            &nfact / alpha.z() * BigInt::from(table.value(lambda, alpha) * table.value(mu, alpha))
        })
        .collect();
    table
        .partitions()
        .iter()
        .enumerate()
        .filter_map(|(i, nu)| {
            let total: BigInt = weights
                .iter()
                .enumerate()
                .map(|(j, w)| w * BigInt::from(table.value_at(i, j)))
                .sum();
            let g = total / &nfact;
            (!g.is_zero()).then(|| (nu.clone(), g))
        })
        .collect()
}

/// Frobenius characteristic of an integer-valued class function.
pub fn frobenius(chi: &ClassFunction) -> Result<SymFunc<BigRational>, Error> {
    chi.frobenius()
}

/// Class function with the given Frobenius characteristic.
pub fn frobenius_inverse(f: &SymFunc<BigRational>) -> Result<ClassFunction, Error> {
    ClassFunction::from_frobenius(f)
}

/// `s_λ[Z/(1−q)]`: each `p_k` in the power-sum expansion of `s_λ` becomes
/// `p_k/(1−q^k)`.
pub fn plethysm_onemq(lambda: &Partition) -> SymFunc<RationalQ> {
    let n = lambda.size();
    let mut out = SymFunc::zero(n, Basis::PowerSum);
    for mu in partitions_of(n) {
        let chi = character_value(lambda, &mu).expect("sizes agree");
        if chi == 0 {
            continue;
        }
        let den = mu.parts().iter().fold(IntPoly::one(), |acc, &k| {
            &acc * &IntPoly::one_minus_x_pow(k)
        });
        let c = RationalQ::new(
            IntPoly::constant(BigInt::from(chi)).to_qpoly(),
            den.scale(&mu.z()).to_qpoly(),
        );
        out.add_term(&mu, c);
    }
    out
}

impl<C: Coefficient> Add for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn add(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        assert_eq!(self.basis, rhs.basis, "sum of mixed bases");
        assert_eq!(self.degree, rhs.degree, "sum of mixed degrees");
        let mut out = self.clone();
        for (lambda, c) in &rhs.terms {
            out.add_term(lambda, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn sub(self, rhs: &SymFunc<C>) -> SymFunc<C> {
        assert_eq!(self.basis, rhs.basis, "difference of mixed bases");
        assert_eq!(self.degree, rhs.degree, "difference of mixed degrees");
        let mut out = self.clone();
        for (lambda, c) in &rhs.terms {
            out.add_term(lambda, -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Neg for &SymFunc<C> {
    type Output = SymFunc<C>;
    fn neg(self) -> SymFunc<C> {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.basis {
            Basis::Schur => "s",
            Basis::PowerSum => "p",
        };
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (lambda, c) in self.terms.iter().rev() {
            let text = c.to_string();
            let (negative, body) = match text.strip_prefix('-') {
                Some(rest) if !is_compound(rest) => (true, rest.to_string()),
                _ => (false, text),
            };
            let coeff = if body == "1" {
                String::new()
            } else if is_compound(&body) {
                format!("({body})·")
            } else {
                format!("{body}·")
            };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write!(f, "{coeff}{letter}{lambda}")?;
        }
        Ok(())
    }
}

fn is_compound(s: &str) -> bool {
    s.contains(" + ") || s.contains(" - ") || s.contains('/')
}

impl<C: Coefficient + fmt::Display> fmt::Debug for SymFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} deg {}] {self}", self.basis, self.degree)
    }
}
