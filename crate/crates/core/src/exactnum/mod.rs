//! Exact coefficient arithmetic.

mod cyclotomic;
mod laurent;
mod poly;
mod rational;

pub use cyclotomic::{cyclotomic_poly, euler_phi, CycInt};
pub use laurent::{LaurentQ, LaurentQT};
pub use poly::{int_poly, DensePoly, IntPoly, QPoly};
pub use rational::RationalQ;

/// Evaluates `f(q, t)` at `q = ζ_ℓ^a`, `t = ζ_ℓ^b`.
pub fn eval_at_roots(f: &LaurentQT, ell: u32, a: i64, b: i64) -> CycInt {
    f.eval_at_roots(ell, a, b)
}

/// Exact polynomial division; fails with [`crate::Error::NotDivisible`].
pub fn exact_divide(f: &IntPoly, g: &IntPoly) -> crate::Result<IntPoly> {
    f.exact_divide(g)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
