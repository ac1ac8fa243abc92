//! Cyclotomic polynomials and the rings `ℤ[ζ_m]`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use super::poly::IntPoly;

const CACHED_ORDERS: usize = 128;

static PHI_CACHE: [OnceBox<IntPoly>; CACHED_ORDERS] = [const { OnceBox::new() }; CACHED_ORDERS];

/// The `m`-th cyclotomic polynomial, by dividing `x^m − 1` by `Φ_d` for every
/// proper divisor `d` of `m`.
pub fn cyclotomic_poly(m: u32) -> IntPoly {
    assert!(m >= 1, "cyclotomic polynomial of order 0");
    if (m as usize) < CACHED_ORDERS {
        PHI_CACHE[m as usize]
            .get_or_init(|| Box::new(compute_cyclotomic(m)))
            .clone()
    } else {
        compute_cyclotomic(m)
    }
}

fn compute_cyclotomic(m: u32) -> IntPoly {
    let mut f = IntPoly::x_pow_minus_one(m as usize);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        f = f
            .exact_divide(&cyclotomic_poly(d))
            .expect("Φ_d divides x^m − 1 for d | m");
    }
    f
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m)
        .filter(|&k| super::gcd_u64(k as u64, m as u64) == 1)
        .count() as u32
}

/// Element of `ℤ[ζ_m]` stored as its residue modulo `Φ_m`: a coefficient
/// vector of length `φ(m)` in the power basis `1, ζ, …, ζ^{φ(m)−1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(order: u32) -> Self {
        Self {
            order,
            coeffs: vec![BigInt::zero(); euler_phi(order) as usize],
        }
    }

    pub fn from_int(order: u32, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c.into();
        z
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(order, 1)
    }

    /// `ζ_m^k` for any integer `k`.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        Self::from_poly(order, &IntPoly::monomial(BigInt::one(), e))
    }

    /// Residue of an integer polynomial evaluated at `ζ_m`.
    pub fn from_poly(order: u32, f: &IntPoly) -> Self {
        let r = f.rem_monic(&cyclotomic_poly(order));
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(euler_phi(order) as usize, BigInt::zero());
        Self { order, coeffs }
    }

    /// Residue of `Σ c_k ζ^k` where exponents are arbitrary integers.
    pub fn from_exponent_sum<'a>(
        order: u32,
        terms: impl IntoIterator<Item = (i64, &'a BigInt)>,
    ) -> Self {
        let mut dense = vec![BigInt::zero(); order as usize];
        for (k, c) in terms {
            dense[k.rem_euclid(order as i64) as usize] += c;
        }
        Self::from_poly(order, &IntPoly::new(dense))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational integer this element equals, if any.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coordinate by `c`, if each division is exact.
    pub fn div_exact(&self, c: &BigInt) -> Option<Self> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Self {
            order: self.order,
            coeffs,
        })
    }

    /// Image under `ζ ↦ ζ^{-1}` (complex conjugation).
    pub fn conj(&self) -> Self {
        let m = self.order as i64;
        Self::from_exponent_sum(
            self.order,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| ((m - k as i64) % m, c)),
        )
    }

    /// The same number viewed in `ℤ[ζ_m]` for a multiple `m` of the order.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m.is_multiple_of(self.order),
            "cannot lift order {} to {m}",
            self.order
        );
        let step = (m / self.order) as i64;
        Self::from_exponent_sum(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 * step, c)),
        )
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
    }

    fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.check_order(rhs);
        CycInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.check_order(rhs);
        CycInt {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.check_order(rhs);
        CycInt::from_poly(self.order, &(&self.as_poly() * &rhs.as_poly()))
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for CycInt {
            type Output = CycInt;
            fn $m(self, rhs: CycInt) -> CycInt {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.as_poly();
        let s = alloc::format!("{p}");
        f.write_str(&s.replace('x', "ζ"))?;
        write!(f, " [ζ^{}=1]", self.order)
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::poly::int_poly;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_relations() {
        for m in 1..=12u32 {
            assert_eq!(CycInt::zeta_pow(m, m as i64), CycInt::one(m));
            let total =
                (0..m as i64).fold(CycInt::zero(m), |acc, k| &acc + &CycInt::zeta_pow(m, k));
            if m >= 2 {
                assert!(total.is_zero(), "sum of powers for m = {m}");
            }
            let z = CycInt::zeta_pow(m, 1);
            assert_eq!(&z * &z.conj(), CycInt::one(m));
        }
    }

    #[test]
    fn lift_is_a_ring_map() {
        let a = &CycInt::zeta_pow(4, 1) + &CycInt::from_int(4, 3);
        let b = CycInt::zeta_pow(4, 3);
        assert_eq!((&a * &b).lift(12), &a.lift(12) * &b.lift(12));
        assert_eq!(CycInt::zeta_pow(4, 1).lift(12), CycInt::zeta_pow(12, 3));
    }

    #[test]
    fn two_cos_is_rational_for_small_orders() {
        let v = &CycInt::zeta_pow(6, 1) + &CycInt::zeta_pow(6, -1);
        assert_eq!(v.to_integer(), Some(BigInt::from(1)));
        let v = &CycInt::zeta_pow(4, 1) + &CycInt::zeta_pow(4, -1);
        assert_eq!(v.to_integer(), Some(BigInt::from(0)));
    }
}
