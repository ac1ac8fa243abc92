//! The field `ℚ(q)` of rational functions.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentQ;
use super::poly::{IntPoly, QPoly};

/// A reduced fraction `num / den`.
///
/// Canonical form: `gcd(num, den) = 1`, and `den` has integer coefficients
/// with content 1 and a positive leading coefficient. Equality of values is
/// therefore equality of the stored polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: QPoly,
    den: IntPoly,
}

impl RationalQ {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = denoms_of(&den);
        let cleared = den
            .scale(&BigRational::from_integer(l.clone()))
            .to_intpoly()
            .expect("denominators cleared");
        let mut c = cleared.content();
        if cleared.lead().is_some_and(Signed::is_negative) {
            c = -c;
        }
        let k = BigRational::new(l, c);
        Self {
            num: num.scale(&k),
            den: den
                .scale(&k)
                .to_intpoly()
                .expect("primitive integral denominator"),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(BigInt::one())
    }

    pub fn from_int(c: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(c))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self {
            num: QPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        Self {
            num: p.to_qpoly(),
            den: IntPoly::one(),
        }
    }

    pub fn from_laurent(f: &LaurentQ) -> Self {
        let (shift, p) = f.to_shifted_poly();
        if shift >= 0 {
            Self::from_poly(&p.shift(shift as usize))
        } else {
            Self::new(
                p.to_qpoly(),
                IntPoly::monomial(BigInt::one(), (-shift) as usize).to_qpoly(),
            )
        }
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let mut f = LaurentQ::zero();
        f.add_term(k, &BigInt::one());
        Self::from_laurent(&f)
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this function equals, when its denominator is 1 and its
    /// coefficients are integers.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.den != IntPoly::one() {
            return None;
        }
        self.num.to_intpoly()
    }

    /// The Laurent polynomial this function equals, when the denominator is a
    /// power of `q` and the numerator is integral.
    pub fn to_laurent(&self) -> Option<LaurentQ> {
        let k = self.den.degree()?;
        if self.den != IntPoly::monomial(BigInt::one(), k) {
            return None;
        }
        let p = self.num.to_intpoly()?;
        let mut out = LaurentQ::zero();
        for (e, c) in p.terms() {
            out.add_term(e as i64 - k as i64, c);
        }
        Some(out)
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.to_qpoly(), self.num.clone())
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(&BigRational::from_integer(c.clone())),
            den: self.den.clone(),
        }
    }

    pub fn div_int(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero(), "division by zero");
        Self {
            num: self.num.scale(&BigRational::new(BigInt::one(), c.clone())),
            den: self.den.clone(),
        }
    }
}

fn denoms_of(p: &QPoly) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

impl Add for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &RationalQ) -> RationalQ {
        if self.den == rhs.den {
            return RationalQ::new(&self.num + &rhs.num, self.den.to_qpoly());
        }
        let a = self.den.to_qpoly();
        let b = rhs.den.to_qpoly();
        RationalQ::new(&(&self.num * &b) + &(&rhs.num * &a), &a * &b)
    }
}

impl Sub for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl Mul for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &RationalQ) -> RationalQ {
        RationalQ::new(&self.num * &rhs.num, (&self.den * &rhs.den).to_qpoly())
    }
}

impl Div for &RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: &RationalQ) -> RationalQ {
        self * &rhs.recip()
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: RationalQ) -> RationalQ {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Zero for RationalQ {
    fn zero() -> Self {
        RationalQ::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = alloc::format!("{}", self.num).replace('x', "q");
        if self.den == IntPoly::one() {
            return f.write_str(&num);
        }
        let den = alloc::format!("{}", self.den).replace('x', "q");
        write!(f, "({num})/({den})")
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::poly::int_poly;

    fn rq(num: &[i64], den: &[i64]) -> RationalQ {
        RationalQ::new(int_poly(num).to_qpoly(), int_poly(den).to_qpoly())
    }

    #[test]
    fn canonical_form() {
        let a = rq(&[1, 1], &[1, -1]);
        let b = rq(&[-2, -2], &[-2, 2]);
        assert_eq!(a, b);
        assert_eq!(a.denominator(), &int_poly(&[-1, 1]));
        let c = rq(&[1, 0, -1], &[1, -1]);
        assert_eq!(c.to_int_poly(), Some(int_poly(&[1, 1])));
    }

    #[test]
    fn field_operations() {
        let a = rq(&[1], &[1, -1]);
        let b = rq(&[0, 1], &[1, -1]);
        assert_eq!(&a - &b, RationalQ::one());
        assert_eq!(&(&a * &b) / &b, a);
        let half = RationalQ::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(alloc::format!("{}", &half * &a), "(-1/2)/(-1 + q)");
    }

    #[test]
    fn laurent_round_trip() {
        let mut f = LaurentQ::zero();
        f.add_term(-2, &BigInt::from(3));
        f.add_term(1, &BigInt::from(-1));
        let r = RationalQ::from_laurent(&f);
        assert_eq!(r.to_laurent(), Some(f));
        assert_eq!(
            &RationalQ::q_pow(-1) * &RationalQ::q_pow(1),
            RationalQ::one()
        );
    }
}
