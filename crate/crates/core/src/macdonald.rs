//! Transformed Macdonald polynomials `H̃_λ(z; q, t)` and their mod-`ℓ`
//! weight components.
//!
//! `H̃_λ` is evaluated with the Haglund–Haiman–Loehr filling formula in French
//! notation (row 1 at the bottom):
//!
//! - a descent is a cell `u` in row `≥ 2` with `σ(u) > σ(cell below u)`,
//!   contributing `leg(u) + 1` to `maj`;
//! - two cells attack when they share a row, or when one sits in the row
//!   directly above the other and strictly to its right;
//! - the reading order runs through rows top to bottom, left to right within
//!   a row, and `inv` counts attacking pairs read in decreasing order, minus
//!   `Σ_{u descent} arm(u)`.
//!
//! The monomial coefficient of `x^ν` for a partition `ν` is the sum of
//! `q^inv t^maj` over fillings with content `ν`; the Schur expansion follows by
//! inverting the unitriangular Kostka matrix.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{IntPoly, LaurentQT, RationalQ};
use crate::partitions::{fake_degree, partitions_of, Partition};
use crate::symfunc::{plethysm_onemq, Basis, SymFunc};
use crate::Error;

/// Largest `n` accepted by [`macdonald`].
pub const DEFAULT_MAX_N: usize = 10;

/// The bigraded Frobenius characteristic of a Procesi fiber: `H̃_λ` in the
/// Schur basis, with coefficients `K̃_{μλ}(q, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProcesiFiber {
    lambda: Partition,
    schur: SymFunc<LaurentQT>,
}

impl ProcesiFiber {
    /// Wraps a precomputed expansion (for instance one read back from a
    /// cache) after checking it against the fiber invariants.
    pub fn from_parts(lambda: Partition, schur: SymFunc<LaurentQT>) -> Result<Self, Error> {
        let fiber = Self { lambda, schur };
        fiber.check_invariants()?;
        Ok(fiber)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn schur_expansion(&self) -> &SymFunc<LaurentQT> {
        &self.schur
    }

    pub fn coefficient(&self, mu: &Partition) -> LaurentQT {
        self.schur.coeff(mu)
    }

    /// Polynomial coefficients with nonnegative integer entries, and
    /// `H̃_λ(z; 1, 1) = p_1^n`.
    pub fn check_invariants(&self) -> Result<(), Error> {
        let n = self.lambda.size();
        if self.schur.degree() != n || self.schur.basis() != Basis::Schur {
            return Err(Error::SizeMismatch(self.schur.degree(), n));
        }
        for (mu, c) in self.schur.terms() {
            if !c.is_positive_polynomial() {
                return Err(Error::InvalidParameter(alloc::format!(
                    "coefficient of s{mu} in H̃{} is not a positive polynomial",
                    self.lambda
                )));
            }
        }
        let at_one = self.specialize_one();
        let regular = SymFunc::<BigInt>::regular(n).to_schur();
        if at_one != regular {
            return Err(Error::InvalidParameter(alloc::format!(
                "H̃{} at q = t = 1 is not the regular representation",
                self.lambda
            )));
        }
        Ok(())
    }

    /// `H̃_λ(z; 1, 1)`.
    pub fn specialize_one(&self) -> SymFunc<BigInt> {
        self.schur.map_coeffs(LaurentQT::at_one)
    }
}

/// `H̃_λ` for `|λ| ≤ DEFAULT_MAX_N`.
pub fn macdonald(lambda: &Partition) -> Result<ProcesiFiber, Error> {
    macdonald_bounded(lambda, DEFAULT_MAX_N)
}

/// `H̃_λ` for `|λ| ≤ max_n`.
pub fn macdonald_bounded(lambda: &Partition, max_n: usize) -> Result<ProcesiFiber, Error> {
    let n = lambda.size();
    if n > max_n {
        return Err(Error::TooLarge {
            what: "n",
            value: n,
            bound: max_n,
        });
    }
    let monomial = hhl_monomial(lambda);
    let schur = monomial_to_schur(n, &monomial);
    let fiber = ProcesiFiber {
        lambda: lambda.clone(),
        schur,
    };
    fiber
        .check_invariants()
        .unwrap_or_else(|e| panic!("filling formula broke a fiber invariant: {e}"));
    Ok(fiber)
}

struct Shape {
    n: usize,
    /// Pairs `(u, v)` of reading-order indices, `u < v`, that attack.
    attacking: Vec<(usize, usize)>,
    /// `(u, below u, leg(u) + 1, arm(u))`.
    descents: Vec<(usize, usize, usize, usize)>,
}

impl Shape {
    fn new(lambda: &Partition) -> Self {
        let parts = lambda.parts();
        let conj = lambda.conjugate();
        // Reading-order index of cell (row, col), both 1-based.
        let mut index = BTreeMap::new();
        let mut next = 0;
        for row in (1..=parts.len()).rev() {
            for col in 1..=parts[row - 1] {
                index.insert((row, col), next);
                next += 1;
            }
        }
        let mut attacking = Vec::new();
        let mut descents = Vec::new();
        for (&(row, col), &u) in &index {
            for c2 in col + 1..=parts[row - 1] {
                attacking.push((u, index[&(row, c2)]));
            }
            if row >= 2 {
                for c2 in 1..col {
                    attacking.push((u, index[&(row - 1, c2)]));
                }
                let leg = conj.part(col) - row;
                let arm = parts[row - 1] - col;
                descents.push((u, index[&(row - 1, col)], leg + 1, arm));
            }
        }
        Self {
            n: next,
            attacking,
            descents,
        }
    }

    fn stats(&self, sigma: &[usize]) -> (i64, i64) {
        let mut inv = self
            .attacking
            .iter()
            .filter(|&&(u, v)| sigma[u] > sigma[v])
            .count() as i64;
        let mut maj = 0i64;
        for &(u, below, leg1, arm) in &self.descents {
            if sigma[u] > sigma[below] {
                maj += leg1 as i64;
                inv -= arm as i64;
            }
        }
        (inv, maj)
    }
}

/// Coefficient of `x^ν` in `H̃_λ`, for every partition `ν ⊢ |λ|`.
pub fn hhl_monomial(lambda: &Partition) -> BTreeMap<Partition, LaurentQT> {
    let shape = Shape::new(lambda);
    let n = shape.n;
    let side = n * n + 1;
    let mut out = BTreeMap::new();
    for nu in partitions_of(n) {
        let mut word: Vec<usize> = nu
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| core::iter::repeat_n(i, m))
            .collect();
        let mut counts = vec![0u64; side * side];
        let mut negative = BTreeMap::new();
        loop {
            let (inv, maj) = shape.stats(&word);
            if inv >= 0 && (inv as usize) < side && (maj as usize) < side {
                counts[inv as usize * side + maj as usize] += 1;
            } else {
                *negative.entry((inv, maj)).or_insert(0u64) += 1;
            }
            if !next_permutation(&mut word) {
                break;
            }
        }
        let mut f = LaurentQT::zero();
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                f.add_term((k / side) as i64, (k % side) as i64, &BigInt::from(c));
            }
        }
        for ((a, b), c) in negative {
            f.add_term(a, b, &BigInt::from(c));
        }
        out.insert(nu, f);
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("a larger element exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Kostka number `K_{λν}`: semistandard tableaux of shape `λ` and content `ν`
/// (any composition), counted by peeling horizontal strips.
pub fn kostka(lambda: &Partition, nu: &[usize]) -> BigInt {
    let mut memo = BTreeMap::new();
    kostka_rec(lambda.parts(), nu, &mut memo)
}

fn kostka_rec(
    lambda: &[usize],
    nu: &[usize],
    memo: &mut BTreeMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let size: usize = lambda.iter().sum();
    let Some((&last, rest)) = nu.split_last() else {
        return if size == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    };
    if size != nu.iter().sum::<usize>() {
        return BigInt::zero();
    }
    let key = (lambda.to_vec(), nu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    let mut kappa = lambda.to_vec();
    strips(lambda, 0, last, &mut kappa, &mut |k| {
        let trimmed: Vec<usize> = k.iter().copied().filter(|&x| x > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Enumerates `κ ⊆ λ` with `λ/κ` a horizontal strip of `m` cells.
fn strips(
    lambda: &[usize],
    i: usize,
    m: usize,
    kappa: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if i == lambda.len() {
        if m == 0 {
            f(kappa);
        }
        return;
    }
    let floor = lambda.get(i + 1).copied().unwrap_or(0);
    let most = (lambda[i] - floor).min(m);
    for take in 0..=most {
        kappa[i] = lambda[i] - take;
        strips(lambda, i + 1, m - take, kappa, f);
    }
    kappa[i] = lambda[i];
}

fn monomial_to_schur(n: usize, monomial: &BTreeMap<Partition, LaurentQT>) -> SymFunc<LaurentQT> {
    // partitions_of lists ν in decreasing lexicographic order, a linear
    // extension of dominance, so K̃_ν is known once all earlier λ are.
    let order = partitions_of(n);
    let mut solved: Vec<(Partition, LaurentQT)> = Vec::new();
    for nu in &order {
        let mut c = monomial.get(nu).cloned().unwrap_or_default();
        for (lambda, k) in &solved {
            let kk = kostka(lambda, nu.parts());
            if !kk.is_zero() {
                c = &c - &k.scale(&kk);
            }
        }
        solved.push((nu.clone(), c));
    }
    let mut out = SymFunc::zero(n, Basis::Schur);
    for (lambda, c) in solved {
        out.add_term(&lambda, c);
    }
    out
}

/// `H̃_λ(z; q, q^{−1})`.
pub fn specialize_tq_inverse(f: &ProcesiFiber) -> SymFunc<RationalQ> {
    f.schur
        .map_coeffs(|c| RationalQ::from_laurent(&c.t_to_q_inverse()))
}

/// `(∏_c (1 − q^{h_c}) / q^{n(λ)}) · s_λ[Z/(1−q)]` in the Schur basis.
pub fn hook_plethysm(lambda: &Partition) -> SymFunc<RationalQ> {
    let hooks = lambda
        .hook_multiset()
        .into_iter()
        .fold(IntPoly::one(), |acc, h| &acc * &IntPoly::one_minus_x_pow(h));
    let prefactor = RationalQ::new(
        hooks.to_qpoly(),
        IntPoly::monomial(BigInt::one(), lambda.n_statistic()).to_qpoly(),
    );
    plethysm_onemq(lambda).to_schur().scale(&prefactor)
}

/// How the generator of `μ_ℓ` weighs the `q^a t^b` piece.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum WeightSign {
    /// Weight `a − b`.
    #[default]
    QMinusT,
    /// Weight `b − a`.
    TMinusQ,
}

impl WeightSign {
    pub fn weight(self, a: i64, b: i64, ell: usize) -> usize {
        let w = match self {
            WeightSign::QMinusT => a - b,
            WeightSign::TMinusQ => b - a,
        };
        w.rem_euclid(ell as i64) as usize
    }

    /// Residue of a pure `q^a` term.
    pub fn q_residue(self, a: i64, ell: usize) -> usize {
        self.weight(a, 0, ell)
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightSign::QMinusT => "q-t",
            WeightSign::TMinusQ => "t-q",
        }
    }
}

/// The `ℓ` weight components of a fiber, each an honest `𝔖_n`-character.
#[derive(Clone, Debug, PartialEq)]
pub struct ModLComponents {
    pub ell: usize,
    pub components: Vec<SymFunc<BigInt>>,
}

impl ModLComponents {
    pub fn total(&self) -> SymFunc<BigInt> {
        let n = self.components[0].degree();
        self.components
            .iter()
            .fold(SymFunc::zero(n, Basis::Schur), |acc, c| &acc + c)
    }
}

/// Collects `q^a t^b` into component `weight(a, b) mod ℓ`.
pub fn mod_l_components(f: &ProcesiFiber, ell: usize, sign: WeightSign) -> ModLComponents {
    assert!(ell >= 1, "ℓ must be at least 1");
    let n = f.lambda.size();
    let mut components = vec![SymFunc::zero(n, Basis::Schur); ell];
    for (mu, c) in f.schur.terms() {
        for ((a, b), v) in c.terms() {
            components[sign.weight(a, b, ell)].add_term(mu, v.clone());
        }
    }
    ModLComponents { ell, components }
}

/// `Σ_μ F_μ(q) s_μ`, the graded Frobenius characteristic of the coinvariant
/// algebra.
pub fn coinvariant_graded_frobenius(n: usize) -> SymFunc<LaurentQT> {
    let mut out = SymFunc::zero(n, Basis::Schur);
    for mu in partitions_of(n) {
        out.add_term(&mu, LaurentQT::from_q_poly(&fake_degree(&mu)));
    }
    out
}
