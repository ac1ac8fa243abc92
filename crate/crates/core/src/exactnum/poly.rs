//! Dense univariate polynomials with nonnegative exponents.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::Error;

/// Polynomial `Σ coeffs[k] x^k`. Trailing zero coefficients are never stored,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<R> {
    coeffs: Vec<R>,
}

pub type IntPoly = DensePoly<BigInt>;
pub type QPoly = DensePoly<BigRational>;

impl<R: Clone + Num + Neg<Output = R>> DensePoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `1 − x^k`.
    pub fn one_minus_x_pow(k: usize) -> Self {
        Self::one() - Self::monomial(R::one(), k)
    }

    /// `x^k − 1`.
    pub fn x_pow_minus_one(k: usize) -> Self {
        Self::monomial(R::one(), k) - Self::one()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Iterator over `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &R)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl IntPoly {
    /// The quotient `h` with `divisor · h = self`.
    pub fn exact_divide(&self, divisor: &IntPoly) -> Result<IntPoly, Error> {
        let lead = divisor.lead().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return if self.is_zero() {
                Ok(IntPoly::zero())
            } else {
                Err(Error::NotDivisible)
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        debug_assert!(modulus.lead().is_some_and(|c| c.is_one()));
        let dd = modulus.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        while rem.len() > dd {
            let top = rem.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let base = rem.len() - dd;
            for (i, c) in modulus.coeffs[..dd].iter().enumerate() {
                rem[base + i] -= &top * c;
            }
        }
        IntPoly::new(rem)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Greatest common divisor of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }
}

impl QPoly {
    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let lead = divisor.lead().expect("division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn monic(&self) -> QPoly {
        match self.lead() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer polynomial when every coefficient is integral.
    pub fn to_intpoly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }
}

macro_rules! impl_ring_ops {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<R: Clone + Num + Neg<Output = R>> $tr<&DensePoly<R>> for &DensePoly<R> {
            type Output = DensePoly<R>;
            fn $method(self, rhs: &DensePoly<R>) -> DensePoly<R> {
                let f: fn(&DensePoly<R>, &DensePoly<R>) -> DensePoly<R> = $body;
                f(self, rhs)
            }
        }
        impl<R: Clone + Num + Neg<Output = R>> $tr<DensePoly<R>> for DensePoly<R> {
            type Output = DensePoly<R>;
            fn $method(self, rhs: DensePoly<R>) -> DensePoly<R> {
                $tr::$method(&self, &rhs)
            }
        }
    };
}

impl_ring_ops!(Add, add, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    DensePoly::new((0..n).map(|k| a.coeff(k) + b.coeff(k)).collect())
});

impl_ring_ops!(Sub, sub, |a, b| {
    let n = a.coeffs.len().max(b.coeffs.len());
    DensePoly::new((0..n).map(|k| a.coeff(k) - b.coeff(k)).collect())
});

impl_ring_ops!(Mul, mul, |a, b| {
    if a.is_zero() || b.is_zero() {
        return DensePoly::zero();
    }
    let mut out = vec![R::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    DensePoly::new(out)
});

impl<R: Clone + Num + Neg<Output = R>> Neg for DensePoly<R> {
    type Output = DensePoly<R>;
    fn neg(self) -> DensePoly<R> {
        DensePoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Clone + Num + Neg<Output = R> + fmt::Display> fmt::Display for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let s = alloc::format!("{c}");
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, s.as_str()),
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => f.write_str(mag)?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<R: Clone + Num + Neg<Output = R> + fmt::Display> fmt::Debug for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds an integer polynomial from small coefficients, lowest degree first.
pub fn int_poly(coeffs: &[i64]) -> IntPoly {
    IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_factor_divides() {
        let f = IntPoly::one_minus_x_pow(2);
        let g = IntPoly::one_minus_x_pow(1);
        assert_eq!(f.exact_divide(&g).unwrap(), int_poly(&[1, 1]));
    }

    #[test]
    fn shifted_divides() {
        let f = int_poly(&[0, 1, 1]);
        assert_eq!(f.exact_divide(&IntPoly::x()).unwrap(), int_poly(&[1, 1]));
    }

    #[test]
    fn not_divisible() {
        let f = int_poly(&[1, 1]);
        let g = int_poly(&[1, -1]);
        assert_eq!(f.exact_divide(&g), Err(Error::NotDivisible));
        assert_eq!(
            int_poly(&[1]).exact_divide(&int_poly(&[0, 2])),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            int_poly(&[1, 2]).exact_divide(&int_poly(&[2])),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn rational_gcd_is_monic() {
        let a = (int_poly(&[1, 1]) * int_poly(&[2, 3])).to_qpoly();
        let b = (int_poly(&[1, 1]) * int_poly(&[5, 0, 1])).to_qpoly();
        assert_eq!(a.gcd(&b), int_poly(&[1, 1]).to_qpoly());
    }

    #[test]
    fn display() {
        assert_eq!(
            alloc::format!("{}", int_poly(&[0, 1, -2, 1])),
            "x - 2x^2 + x^3"
        );
    }
}
