//! Single-fiber identities: sanity of `H̃_λ`, the `t = q^{−1}` specialization,
//! and the fake-degree relation.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::{Check, FiberSource};
use crate::exactnum::{LaurentQT, RationalQ};
use crate::macdonald::{hook_plethysm, specialize_tq_inverse};
use crate::partitions::{fake_degree, partitions_of, Partition};
use crate::symfunc::{kronecker_coefficients, Basis, SymFunc};
use crate::Error;

/// Positivity, `q = t = 1` specialization, the two extreme Schur
/// coefficients, and `H̃_{λ*}(q, t) = H̃_λ(t, q)`.
pub fn fiber_checks(lambda: &Partition, source: &dyn FiberSource) -> Result<Vec<Check>, Error> {
    let n = lambda.size();
    let f = source.fiber(lambda)?;
    let conj = lambda.conjugate();
    let g = source.fiber(&conj)?;
    let mut out = Vec::new();

    let inv = f.check_invariants();
    out.push(Check::new(
        "positive_polynomials",
        inv.is_ok(),
        inv.err().map(|e| format!("{e}")).unwrap_or_default(),
    ));
    let regular = SymFunc::<BigInt>::regular(n).to_schur();
    out.push(Check::new(
        "regular_at_one",
        f.specialize_one() == regular,
        format!("H̃{lambda}(1,1) = {}", f.specialize_one()),
    ));
    let top = f.coefficient(&Partition::row(n));
    out.push(Check::new(
        "coefficient_of_row",
        top == LaurentQT::one(),
        format!("{top}"),
    ));
    let bottom = f.coefficient(&Partition::column(n));
    let expect = LaurentQT::monomial(
        conj.n_statistic() as i64,
        lambda.n_statistic() as i64,
        BigInt::one(),
    );
    out.push(Check::new(
        "coefficient_of_column",
        bottom == expect,
        format!("{bottom}, expected {expect}"),
    ));
    let swapped = f.schur_expansion().map_coeffs(LaurentQT::swap_qt);
    out.push(Check::new(
        "conjugation_symmetry",
        &swapped == g.schur_expansion(),
        format!("H̃{conj} against H̃{lambda} with q and t swapped"),
    ));
    Ok(out)
}

/// `H̃_λ(z; q, q^{−1})` from the fiber, and the hook-product times plethysm
/// side.
pub fn specialization_sides(
    lambda: &Partition,
    source: &dyn FiberSource,
) -> Result<(SymFunc<RationalQ>, SymFunc<RationalQ>), Error> {
    let f = source.fiber(lambda)?;
    Ok((specialize_tq_inverse(&f), hook_plethysm(lambda)))
}

/// `F_λ(q) · H̃_λ(z; q, q^{−1})` and `Σ_μ F_μ(q) (s_μ ⊗ s_λ)`.
pub fn fake_degree_identity_sides(
    lambda: &Partition,
    source: &dyn FiberSource,
) -> Result<(SymFunc<RationalQ>, SymFunc<RationalQ>), Error> {
    let n = lambda.size();
    let f = source.fiber(lambda)?;
    let fl = RationalQ::from_poly(&fake_degree(lambda));
    let lhs = specialize_tq_inverse(&f).scale(&fl);
    let mut rhs = SymFunc::zero(n, Basis::Schur);
    for mu in partitions_of(n) {
        let fm = RationalQ::from_poly(&fake_degree(&mu));
        for (nu, c) in kronecker_coefficients(&mu, lambda) {
            rhs.add_term(&nu, fm.scale_int(&c));
        }
    }
    Ok((lhs, rhs))
}
