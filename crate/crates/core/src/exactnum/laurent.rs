//! Sparse Laurent polynomials in `q` and in `(q, t)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CycInt;
use super::poly::IntPoly;

/// `Σ c_{a,b} q^a t^b` with integer exponents of either sign.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentQT {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c.into())
    }

    pub fn monomial(a: i64, b: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    /// Collects `(a, b, c)` triples, summing repeated exponents.
    pub fn from_terms(items: impl IntoIterator<Item = (i64, i64, BigInt)>) -> Self {
        let mut f = Self::zero();
        for (a, b, c) in items {
            f.add_term(a, b, &c);
        }
        f
    }

    pub fn from_q_poly(p: &IntPoly) -> Self {
        Self::from_terms(p.terms().map(|(k, c)| (k as i64, 0, c.clone())))
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((a, b)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Value at `q = t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn swap_qt(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((b, a), c.clone()))
                .collect(),
        }
    }

    /// True when every exponent is nonnegative and every coefficient positive.
    pub fn is_positive_polynomial(&self) -> bool {
        self.terms
            .iter()
            .all(|(&(a, b), c)| a >= 0 && b >= 0 && c.is_positive())
    }

    /// Specialization `t = q^{-1}`.
    pub fn t_to_q_inverse(&self) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a - b, c);
        }
        out
    }

    /// Sends each monomial `q^a t^b` to `q^{f(a, b)}`.
    pub fn collapse(&self, f: impl Fn(i64, i64) -> i64) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(f(a, b), c);
        }
        out
    }

    /// Exact evaluation at `q = ζ_ℓ^a`, `t = ζ_ℓ^b`.
    pub fn eval_at_roots(&self, ell: u32, a: i64, b: i64) -> CycInt {
        CycInt::from_exponent_sum(
            ell,
            self.terms.iter().map(|(&(i, j), c)| (i * a + j * b, c)),
        )
    }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, &-c);
        }
        out
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term(a + x, b + y, &(c * d));
            }
        }
        out
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

macro_rules! owned_ops {
    ($ty:ty; $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(LaurentQT; Add add, Sub sub, Mul mul);

impl Zero for LaurentQT {
    fn zero() -> Self {
        LaurentQT::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

fn write_monomial(out: &mut String, vars: &[(&str, i64)]) {
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => out.push_str(name),
            _ => {
                out.push_str(name);
                out.push('^');
                out.push_str(&alloc::format!("{e}"));
            }
        }
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<(&'a str, i64)>, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (vars, c) in terms {
        let mut mono = String::new();
        write_monomial(&mut mono, &vars);
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{mag}{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .map(|(&(a, b), c)| (alloc::vec![("q", a), ("t", b)], c)),
        )
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Σ c_k q^k` with integer exponents of either sign.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            out.add_term(k as i64, c);
        }
        out
    }

    pub fn add_term(&mut self, k: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Splits as `q^e · p(q)` with `p` a polynomial not divisible by `q`.
    pub fn to_shifted_poly(&self) -> (i64, IntPoly) {
        let Some(lo) = self.min_exponent() else {
            return (0, IntPoly::zero());
        };
        let hi = *self.terms.keys().next_back().expect("nonempty");
        let mut coeffs = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&k, c) in &self.terms {
            coeffs[(k - lo) as usize] = c.clone();
        }
        (lo, IntPoly::new(coeffs))
    }

    /// Coefficient sums over exponent classes modulo `ell`.
    pub fn residues(&self, ell: u32) -> Vec<BigInt> {
        let mut out = alloc::vec![BigInt::zero(); ell as usize];
        for (&k, c) in &self.terms {
            out[k.rem_euclid(ell as i64) as usize] += c;
        }
        out
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = LaurentQ::zero();
        for (&a, c) in &self.terms {
            for (&b, d) in &rhs.terms {
                out.add_term(a + b, &(c * d));
            }
        }
        out
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|(&k, c)| (alloc::vec![("q", k)], c)),
        )
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::poly::int_poly;

    #[test]
    fn display() {
        let f = &(&LaurentQT::q() + &LaurentQT::t()) * &LaurentQT::q();
        assert_eq!(alloc::format!("{f}"), "qt + q^2");
        let g = LaurentQT::monomial(-1, 2, BigInt::from(-3));
        assert_eq!(alloc::format!("{g}"), "-3q^-1t^2");
        assert_eq!(alloc::format!("{}", LaurentQT::zero()), "0");
    }

    #[test]
    fn eval_examples() {
        let f = LaurentQT::from_q_poly(&int_poly(&[0, 1, 1]));
        assert!(f.eval_at_roots(2, 1, 0).is_zero());
        assert_eq!(LaurentQT::one().eval_at_roots(5, 2, 3), CycInt::one(5));
        let qt = &LaurentQT::q() * &LaurentQT::t();
        assert_eq!(qt.eval_at_roots(3, 1, -1), CycInt::one(3));
    }

    #[test]
    fn specialization_to_q_inverse() {
        let f = LaurentQT::from_terms([(2, 1, BigInt::from(1)), (0, 3, BigInt::from(2))]);
        let g = f.t_to_q_inverse();
        let (shift, p) = g.to_shifted_poly();
        assert_eq!(shift, -3);
        assert_eq!(p, int_poly(&[2, 0, 0, 0, 1]));
    }
}
