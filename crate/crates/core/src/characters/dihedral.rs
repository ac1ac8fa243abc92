//! The binary dihedral group `BD` of order `4l`, its character table, and its
//! realization `N = ⟨w, s⟩` inside `𝔖_{2lr}`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::perm::Permutation;
use super::table::{lcm, ClassFunction};
use crate::exactnum::CycInt;
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};
use crate::Error;

/// Conjugacy classes. `Omega(p)` stands for `ω^p` with `0 < p < l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BdClass {
    Identity,
    MinusIdentity,
    Omega(usize),
    S,
    SOmega,
}

/// Irreducible characters. `Two(k)` is the 2-dimensional `χ_k`, `0 < k < l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BdChar {
    ZeroPlus,
    ZeroMinus,
    Two(usize),
    LPlus,
    LMinus,
}

impl BdChar {
    pub fn dimension(self) -> usize {
        match self {
            BdChar::Two(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for BdChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BdChar::ZeroPlus => f.write_str("chi_0+"),
            BdChar::ZeroMinus => f.write_str("chi_0-"),
            BdChar::Two(k) => write!(f, "chi_{k}"),
            BdChar::LPlus => f.write_str("chi_l+"),
            BdChar::LMinus => f.write_str("chi_l-"),
        }
    }
}

impl fmt::Display for BdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BdClass::Identity => f.write_str("1"),
            BdClass::MinusIdentity => f.write_str("-1"),
            BdClass::Omega(p) => write!(f, "w^{p}"),
            BdClass::S => f.write_str("s"),
            BdClass::SOmega => f.write_str("sw"),
        }
    }
}

/// Character table of `BD` with `ℓ = 4l`; values live in `ℤ[ζ_m]`,
/// `m = lcm(2l, 4)`.
#[derive(Clone, Debug)]
pub struct BinaryDihedralTable {
    l: usize,
    order: u32,
    classes: Vec<BdClass>,
    chars: Vec<BdChar>,
    values: BTreeMap<(BdChar, BdClass), CycInt>,
}

impl BinaryDihedralTable {
    pub fn new(l: usize) -> Result<Self, Error> {
        if l == 0 {
            return Err(Error::InvalidParameter(
                "binary dihedral needs l ≥ 1".into(),
            ));
        }
        let order = lcm(2 * l as u32, 4);
        let mut classes = vec![BdClass::Identity, BdClass::MinusIdentity];
        classes.extend((1..l).map(BdClass::Omega));
        classes.extend([BdClass::S, BdClass::SOmega]);
        let mut chars = vec![BdChar::ZeroPlus, BdChar::ZeroMinus];
        chars.extend((1..l).map(BdChar::Two));
        chars.extend([BdChar::LPlus, BdChar::LMinus]);

        // ζ_{2l}^e and ζ_4^e inside ℤ[ζ_m].
        let z2l = |e: i64| CycInt::zeta_pow(order, e * (order as i64 / (2 * l as i64)));
        let z4 = |e: i64| CycInt::zeta_pow(order, e * (order as i64 / 4));
        let int = |v: i64| CycInt::from_int(order, v);
        let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };

        let mut values = BTreeMap::new();
        for &chi in &chars {
            for &class in &classes {
                let v = match (chi, class) {
                    (BdChar::ZeroPlus, _) => int(1),
                    (BdChar::ZeroMinus, BdClass::S | BdClass::SOmega) => int(-1),
                    (BdChar::ZeroMinus, _) => int(1),
                    (BdChar::Two(_), BdClass::Identity) => int(2),
                    (BdChar::Two(k), BdClass::MinusIdentity) => int(2 * sign(k)),
                    (BdChar::Two(k), BdClass::Omega(p)) => {
                        let e = (k * p) as i64;
                        &z2l(e) + &z2l(-e)
                    }
                    (BdChar::Two(_), BdClass::S | BdClass::SOmega) => int(0),
                    (BdChar::LPlus | BdChar::LMinus, BdClass::Identity) => int(1),
                    (BdChar::LPlus | BdChar::LMinus, BdClass::MinusIdentity) => int(sign(l)),
                    (BdChar::LPlus | BdChar::LMinus, BdClass::Omega(p)) => int(sign(p)),
                    (BdChar::LPlus, BdClass::S) | (BdChar::LMinus, BdClass::SOmega) => {
                        if l.is_multiple_of(2) {
                            int(-1)
                        } else {
                            z4(1)
                        }
                    }
                    (BdChar::LPlus, BdClass::SOmega) | (BdChar::LMinus, BdClass::S) => {
                        if l.is_multiple_of(2) {
                            int(1)
                        } else {
                            -z4(1)
                        }
                    }
                };
                values.insert((chi, class), v);
            }
        }
        Ok(Self {
            l,
            order,
            classes,
            chars,
            values,
        })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn group_order(&self) -> usize {
        4 * self.l
    }

    /// Order `m` of the cyclotomic ring holding the values.
    pub fn value_order(&self) -> u32 {
        self.order
    }

    pub fn classes(&self) -> &[BdClass] {
        &self.classes
    }

    pub fn chars(&self) -> &[BdChar] {
        &self.chars
    }

    pub fn class_size(&self, class: BdClass) -> usize {
        match class {
            BdClass::Identity | BdClass::MinusIdentity => 1,
            BdClass::Omega(_) => 2,
            BdClass::S | BdClass::SOmega => self.l,
        }
    }

    pub fn value(&self, chi: BdChar, class: BdClass) -> &CycInt {
        self.values
            .get(&(chi, class))
            .unwrap_or_else(|| panic!("{chi} or {class} is not part of BD with l = {}", self.l))
    }

    /// `⟨f, g⟩` for two class functions given by their values on [`Self::classes`].
    pub fn inner(&self, f: &[CycInt], g: &[CycInt]) -> Option<BigRational> {
        let mut acc = CycInt::zero(self.order);
        for ((class, a), b) in self.classes.iter().zip(f).zip(g) {
            let size = BigInt::from(self.class_size(*class));
            acc = &acc + &(a * &b.conj()).scale(&size);
        }
        acc.to_integer()
            .map(|c| BigRational::new(c, BigInt::from(self.group_order())))
    }

    pub fn row(&self, chi: BdChar) -> Vec<CycInt> {
        self.classes
            .iter()
            .map(|&c| self.value(chi, c).clone())
            .collect()
    }

    /// Class of the abstract element `s^e ω^a`, `e ∈ {0, 1}`.
    pub fn class_of(&self, e: u8, a: i64) -> BdClass {
        let two_l = 2 * self.l as i64;
        let a = a.rem_euclid(two_l);
        if e % 2 == 1 {
            return if a % 2 == 0 {
                BdClass::S
            } else {
                BdClass::SOmega
            };
        }
        if a == 0 {
            BdClass::Identity
        } else if a == self.l as i64 {
            BdClass::MinusIdentity
        } else {
            BdClass::Omega(a.min(two_l - a) as usize)
        }
    }
}

/// `χ_i = Ind_{μ_{2l}}^{BD}(τ^i)` as a list of irreducibles: `χ_{0+} + χ_{0−}`
/// when `i ≡ 0`, `χ_{l+} + χ_{l−}` when `i ≡ l`, and `χ_k` with
/// `k = min(i, 2l − i) mod 2l` otherwise.
pub fn chi_i(l: usize, i: i64) -> Vec<BdChar> {
    assert!(l >= 1, "binary dihedral needs l ≥ 1");
    let two_l = 2 * l as i64;
    let m = i.rem_euclid(two_l);
    if m == 0 {
        vec![BdChar::ZeroPlus, BdChar::ZeroMinus]
    } else if m == l as i64 {
        vec![BdChar::LPlus, BdChar::LMinus]
    } else {
        vec![BdChar::Two(m.min(two_l - m) as usize)]
    }
}

/// `N = ⟨w, s⟩ ⊂ 𝔖_{2lr}` with the labeling of its `4l` elements by
/// conjugacy classes of `BD`.
#[derive(Clone, Debug)]
pub struct DihedralEmbedding {
    l: usize,
    r: usize,
    w: Permutation,
    s: Permutation,
    /// `s^e ∘ w^a` for `e ∈ {0,1}`, `a ∈ 0..2l`, with its class.
    elements: Vec<(Permutation, BdClass)>,
    table: BinaryDihedralTable,
}

impl DihedralEmbedding {
    /// Checks the defining relations of an arbitrary candidate pair `(w, s)`:
    /// `s⁴ = 1`, `s² = w^l`, `s w s⁻¹ = w⁻¹`, `|⟨w, s⟩| = 4l`.
    pub fn check_relations(l: usize, w: &Permutation, s: &Permutation) -> Result<(), Error> {
        let fail = |what: &str| Err(Error::InvalidParameter(format!("relation {what} fails")));
        if w.order() != 2 * l {
            return fail("ord(w) = 2l");
        }
        if !s.pow(4).is_identity() {
            return fail("s^4 = 1");
        }
        if s.pow(2) != w.pow(l as i64) {
            return fail("s^2 = w^l");
        }
        if s.compose(w).compose(&s.inverse()) != w.inverse() {
            return fail("s w s^-1 = w^-1");
        }
        if closure_size(&[w.clone(), s.clone()]) != 4 * l {
            return fail("|<w, s>| = 4l");
        }
        Ok(())
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn degree(&self) -> usize {
        2 * self.l * self.r
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn s(&self) -> &Permutation {
        &self.s
    }

    pub fn elements(&self) -> &[(Permutation, BdClass)] {
        &self.elements
    }

    pub fn table(&self) -> &BinaryDihedralTable {
        &self.table
    }
}

/// Pairs the `r` cycles of `w` into blocks `(u, v)` and sets
/// `s(u_i) = v_{−i}`, `s(v_i) = u_{l−i}` (indices mod `2l`).
///
/// `r = 0` gives the abstract group acting on no points, which is what the
/// induction formulas need when the partition is its own `2l`-core.
pub fn build_dihedral_embedding(l: usize, r: usize) -> Result<DihedralEmbedding, Error> {
    if l == 0 {
        return Err(Error::InvalidParameter(
            "binary dihedral needs l ≥ 1".into(),
        ));
    }
    if !r.is_multiple_of(2) {
        return Err(Error::OddCycleCount(2 * l, r));
    }
    let two_l = 2 * l;
    let m = two_l * r;
    let mut w_img: Vec<usize> = (0..m).collect();
    let mut s_img: Vec<usize> = (0..m).collect();
    for c in 0..r {
        let base = c * two_l;
        for k in 0..two_l {
            w_img[base + k] = base + (k + 1) % two_l;
        }
    }
    for pair in 0..r / 2 {
        let u = pair * 2 * two_l;
        let v = u + two_l;
        for i in 0..two_l {
            s_img[u + i] = v + (two_l - i) % two_l;
            s_img[v + i] = u + (l + two_l - i) % two_l;
        }
    }
    let w = Permutation::from_images(w_img).expect("w is a permutation");
    let s = Permutation::from_images(s_img).expect("s is a permutation");
    if r > 0 {
        DihedralEmbedding::check_relations(l, &w, &s)?;
    }
    let table = BinaryDihedralTable::new(l)?;
    let mut elements = Vec::with_capacity(2 * two_l);
    for e in 0..2u8 {
        for a in 0..two_l as i64 {
            let wa = w.pow(a);
            let perm = if e == 0 { wa } else { s.compose(&wa) };
            elements.push((perm, table.class_of(e, a)));
        }
    }
    if r > 0 {
        let distinct: BTreeSet<&Permutation> = elements.iter().map(|(p, _)| p).collect();
        assert_eq!(
            distinct.len(),
            4 * l,
            "listed elements of N are not distinct"
        );
    }
    Ok(DihedralEmbedding {
        l,
        r,
        w,
        s,
        elements,
        table,
    })
}

fn closure_size(gens: &[Permutation]) -> usize {
    let Some(first) = gens.first() else {
        return 1;
    };
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(first.degree())];
    seen.insert(frontier[0].clone());
    while let Some(x) = frontier.pop() {
        for gen in gens {
            let y = gen.compose(&x);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

/// `Fr(Ind_N^{𝔖_{2lr}} χ) = (1/4l) Σ_{h ∈ N} χ(h) p_{type(h)}`.
pub fn dihedral_induced_powersum(emb: &DihedralEmbedding, chi: BdChar) -> SymFunc<BigRational> {
    let order = emb.table.value_order();
    let mut by_type: BTreeMap<Partition, CycInt> = BTreeMap::new();
    for (perm, class) in &emb.elements {
        let slot = by_type
            .entry(perm.cycle_type())
            .or_insert_with(|| CycInt::zero(order));
        *slot = &*slot + emb.table.value(chi, *class);
    }
    let denom = BigInt::from(emb.table.group_order());
    let mut out = SymFunc::zero(emb.degree(), Basis::PowerSum);
    for (mu, v) in by_type {
        let v = v
            .to_integer()
            .unwrap_or_else(|| panic!("class labeling of N leaves {chi} non-rational on {mu}"));
        if !v.is_zero() {
            out.add_term(&mu, BigRational::new(v, denom.clone()));
        }
    }
    out
}

/// Schur expansion of [`dihedral_induced_powersum`].
pub fn dihedral_induced_schur(emb: &DihedralEmbedding, chi: BdChar) -> SymFunc<BigInt> {
    dihedral_induced_powersum(emb, chi)
        .to_schur()
        .to_integral()
        .expect("an induced character has integral Schur coefficients")
}

/// The character of `Ind_N^{𝔖_{2lr}} χ` by class intersection.
pub fn induce_from_dihedral(emb: &DihedralEmbedding, chi: BdChar) -> Result<ClassFunction, Error> {
    ClassFunction::from_frobenius(&dihedral_induced_powersum(emb, chi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::factorial;
    use num_traits::One;

    fn orthogonality(l: usize) {
        let t = BinaryDihedralTable::new(l).unwrap();
        let chars = t.chars().to_vec();
        let mut dim_sq = 0;
        for &a in &chars {
            dim_sq += a.dimension() * a.dimension();
            for &b in &chars {
                let want = if a == b {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(t.inner(&t.row(a), &t.row(b)), Some(want), "l={l} {a} {b}");
            }
        }
        assert_eq!(dim_sq, 4 * l);
        // Column orthogonality: Σ_χ χ(c) conj χ(c') = δ · |BD| / |c|.
        for &c in t.classes() {
            for &d in t.classes() {
                let mut acc = CycInt::zero(t.value_order());
                for &chi in &chars {
                    acc = &acc + &(t.value(chi, c) * &t.value(chi, d).conj());
                }
                let want = if c == d {
                    (4 * l / t.class_size(c)) as i64
                } else {
                    0
                };
                assert_eq!(
                    acc,
                    CycInt::from_int(t.value_order(), want),
                    "l={l} {c} {d}"
                );
            }
        }
    }

    #[test]
    fn table_orthogonality() {
        for l in 1..=6 {
            orthogonality(l);
        }
    }

    #[test]
    fn printed_tables() {
        let t = BinaryDihedralTable::new(2).unwrap();
        let m = t.value_order();
        let int = |v| CycInt::from_int(m, v);
        assert_eq!(t.value(BdChar::LPlus, BdClass::S), &int(-1));
        assert_eq!(t.value(BdChar::LPlus, BdClass::SOmega), &int(1));
        assert_eq!(t.value(BdChar::LMinus, BdClass::MinusIdentity), &int(1));
        assert_eq!(t.value(BdChar::Two(1), BdClass::Omega(1)), &int(0));
        assert_eq!(t.value(BdChar::Two(1), BdClass::MinusIdentity), &int(-2));

        let t = BinaryDihedralTable::new(3).unwrap();
        let m = t.value_order();
        assert_eq!(m, 12);
        let i = CycInt::zeta_pow(m, 3);
        assert_eq!(t.value(BdChar::LPlus, BdClass::S), &i);
        assert_eq!(t.value(BdChar::LPlus, BdClass::SOmega), &-&i);
        assert_eq!(
            t.value(BdChar::LMinus, BdClass::MinusIdentity),
            &CycInt::from_int(m, -1)
        );
        // 2cos(π/3) = 1, 2cos(2π/3) = −1.
        assert_eq!(
            t.value(BdChar::Two(1), BdClass::Omega(1)),
            &CycInt::from_int(m, 1)
        );
        assert_eq!(
            t.value(BdChar::Two(1), BdClass::Omega(2)),
            &CycInt::from_int(m, -1)
        );
        assert_eq!(
            t.value(BdChar::Two(2), BdClass::Omega(1)),
            &CycInt::from_int(m, -1)
        );
    }

    #[test]
    fn restriction_to_rotations() {
        // χ_{0±} ↦ τ^0, χ_k ↦ τ^k + τ^{−k}, χ_{l±} ↦ τ^l on ⟨ω⟩ ≅ μ_{2l}.
        for l in 1..=5 {
            let t = BinaryDihedralTable::new(l).unwrap();
            let m = t.value_order();
            let step = (m as usize / (2 * l)) as i64;
            for &chi in t.chars() {
                let exps: Vec<i64> = match chi {
                    BdChar::ZeroPlus | BdChar::ZeroMinus => vec![0],
                    BdChar::Two(k) => vec![k as i64, -(k as i64)],
                    BdChar::LPlus | BdChar::LMinus => vec![l as i64],
                };
                for p in 0..=l {
                    let class = match p {
                        0 => BdClass::Identity,
                        p if p == l => BdClass::MinusIdentity,
                        p => BdClass::Omega(p),
                    };
                    let mut want = CycInt::zero(m);
                    for &k in &exps {
                        want = &want + &CycInt::zeta_pow(m, step * k * p as i64);
                    }
                    assert_eq!(t.value(chi, class), &want, "l={l} {chi} at {class}");
                }
            }
        }
    }

    #[test]
    fn chi_i_expansion() {
        assert_eq!(chi_i(2, 0), vec![BdChar::ZeroPlus, BdChar::ZeroMinus]);
        assert_eq!(chi_i(2, -2), vec![BdChar::LPlus, BdChar::LMinus]);
        assert_eq!(chi_i(3, 5), vec![BdChar::Two(1)]);
        assert_eq!(chi_i(3, -2), vec![BdChar::Two(2)]);
    }

    #[test]
    fn embeddings() {
        for l in 1..=3 {
            for r in [2, 4] {
                let emb = build_dihedral_embedding(l, r).unwrap();
                assert_eq!(emb.elements().len(), 4 * l);
            }
        }
        assert_eq!(
            build_dihedral_embedding(2, 1).unwrap_err(),
            Error::OddCycleCount(4, 1)
        );
        let w = Permutation::from_cycles(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]).unwrap();
        let s = Permutation::from_cycles(8, &[&[1, 8, 3, 6], &[2, 7, 4, 5]]).unwrap();
        DihedralEmbedding::check_relations(2, &w, &s).unwrap();
        let bad = Permutation::from_cycles(8, &[&[1, 5]]).unwrap();
        assert!(DihedralEmbedding::check_relations(2, &w, &bad).is_err());
    }

    #[test]
    fn labeling_is_a_homomorphism() {
        // χ(gh) = χ(g)χ(h) for the 1-dimensional characters over all pairs.
        for l in 1..=3 {
            let emb = build_dihedral_embedding(l, 2).unwrap();
            let t = emb.table();
            let index: BTreeMap<&Permutation, BdClass> =
                emb.elements().iter().map(|(p, c)| (p, *c)).collect();
            for chi in [BdChar::ZeroMinus, BdChar::LPlus, BdChar::LMinus] {
                for (g, cg) in emb.elements() {
                    for (h, ch) in emb.elements() {
                        let gh = g.compose(h);
                        let cgh = index[&gh];
                        assert_eq!(
                            t.value(chi, cgh),
                            &(t.value(chi, *cg) * t.value(chi, *ch)),
                            "l={l} {chi}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn induced_dimensions() {
        let emb = build_dihedral_embedding(2, 2).unwrap();
        for &chi in emb.table().chars() {
            let ind = induce_from_dihedral(&emb, chi).unwrap();
            let want = factorial(8) / BigInt::from(8) * BigInt::from(chi.dimension());
            assert_eq!(ind.value(&Partition::column(8)).to_integer(), Some(want));
        }
        // r = 0: the abstract group maps trivially, leaving ⟨χ, 1⟩.
        let emb = build_dihedral_embedding(3, 0).unwrap();
        assert_eq!(
            dihedral_induced_schur(&emb, BdChar::ZeroPlus),
            SymFunc::schur(&Partition::empty())
        );
        assert!(dihedral_induced_schur(&emb, BdChar::Two(1)).is_zero());
    }
}
