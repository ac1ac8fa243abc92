//! Integer partitions, hooks, β-sets, cores and quotients, fake degrees.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::exactnum::IntPoly;
use crate::Error;

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on the parts, so `[1,1,1] < [2,1] < [3]`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Self { parts })
        } else {
            Err(Error::ParsePartition(alloc::format!("{parts:?}")))
        }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty when `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Self {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.conjugate()
    }

    /// Cells `(row, column)`, 1-based, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn arm(&self, row: usize, col: usize) -> usize {
        self.part(row) - col
    }

    pub fn leg(&self, row: usize, col: usize) -> usize {
        self.parts[row..].iter().take_while(|&&p| p >= col).count()
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        self.arm(row, col) + self.leg(row, col) + 1
    }

    /// Hook lengths of all cells, largest first.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let mut hooks: Vec<usize> = self.cells().map(|(i, j)| self.hook(i, j)).collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// `n(λ) = Σ (i − 1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Content `column − row` of a cell.
    pub fn content(row: usize, col: usize) -> i64 {
        col as i64 - row as i64
    }

    /// Dimension of the irreducible `𝔖_n`-module, by the hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let hooks: BigInt = self.hook_multiset().into_iter().map(BigInt::from).product();
        factorial(self.size()) / hooks
    }

    /// Multiplicities `m_i` of each part size `i ≥ 1`, indexed by `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Centralizer order `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &m)| BigInt::from(i).pow(m as u32) * factorial(m))
            .product()
    }

    /// Union of the multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_unsorted(parts)
    }

    /// True when no hook has length divisible by `ell`.
    pub fn is_core(&self, ell: usize) -> bool {
        self.hook_multiset().iter().all(|h| h % ell != 0)
    }

    pub fn beta_set(&self) -> BetaSet {
        BetaSet::of(self, self.len())
    }

    pub fn core_quotient(&self, ell: usize) -> CoreQuotient {
        core_quotient(self, ell)
    }

    pub fn fake_degree(&self) -> IntPoly {
        fake_degree(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[2,2,1]"`; `"[]"` is the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParsePartition(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts).map_err(|_| bad())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A strictly decreasing list of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaSet {
    beads: Vec<usize>,
}

impl BetaSet {
    /// The β-set `λ_i + k − i`, `i = 1..k`, of `λ` with `k ≥ len(λ)` beads.
    pub fn of(lambda: &Partition, k: usize) -> Self {
        assert!(k >= lambda.len(), "too few beads for {lambda}");
        Self {
            beads: (1..=k).map(|i| lambda.part(i) + k - i).collect(),
        }
    }

    pub fn new(mut beads: Vec<usize>) -> Result<Self, Error> {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("repeated bead".to_string()));
        }
        Ok(Self { beads })
    }

    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    /// Shifts every bead up by `k` and adds beads at `0..k`.
    pub fn pad(&self, k: usize) -> Self {
        let mut beads: Vec<usize> = self.beads.iter().map(|b| b + k).collect();
        beads.extend((0..k).rev());
        Self { beads }
    }

    pub fn to_partition(&self) -> Partition {
        let k = self.beads.len();
        Partition::from_unsorted(
            self.beads
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (k - 1 - i))
                .collect(),
        )
    }
}

/// The `ℓ`-core `γ`, the `ℓ`-quotient, `r = Σ|quotient|`, `g = |γ|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoreQuotient {
    pub ell: usize,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub r: usize,
    pub g: usize,
}

/// Core and quotient from the `ℓ`-abacus: beads on each runner are pushed as
/// high as possible. The bead count is padded to a multiple of `ℓ`, and the
/// quotient is listed by runner `0..ℓ`.
pub fn core_quotient(lambda: &Partition, ell: usize) -> CoreQuotient {
    assert!(ell >= 1, "ℓ must be positive");
    let k = lambda.len().div_ceil(ell) * ell;
    let beta = BetaSet::of(lambda, k);
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); ell];
    for &b in beta.beads() {
        runners[b % ell].push(b / ell);
    }
    let mut core_beads = Vec::with_capacity(k);
    let mut quotient = Vec::with_capacity(ell);
    for (rho, levels) in runners.iter().enumerate() {
        core_beads.extend((0..levels.len()).map(|lev| rho + ell * lev));
        quotient.push(
            BetaSet {
                beads: levels.clone(),
            }
            .to_partition(),
        );
    }
    let core = BetaSet::new(core_beads)
        .expect("distinct runner positions")
        .to_partition();
    let r = quotient.iter().map(Partition::size).sum();
    let g = core.size();
    debug_assert_eq!(lambda.size(), g + ell * r);
    CoreQuotient {
        ell,
        core,
        quotient,
        r,
        g,
    }
}

/// `F_λ(q) = q^{n(λ)} ∏_{i≤n}(1 − q^i) / ∏_c (1 − q^{h_c})`.
pub fn fake_degree(lambda: &Partition) -> IntPoly {
    let n = lambda.size();
    let num = (1..=n).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::one_minus_x_pow(i));
    let den = lambda
        .hook_multiset()
        .into_iter()
        .fold(IntPoly::one(), |acc, h| &acc * &IntPoly::one_minus_x_pow(h));
    num.exact_divide(&den)
        .expect("hook product divides the q-factorial")
        .shift(lambda.n_statistic())
}

/// `Φ_j`-adic valuation of `F_λ`, read off the hook lengths.
pub fn phi_valuation(lambda: &Partition, j: usize) -> i64 {
    assert!(j >= 2, "valuation needs j ≥ 2");
    let n = lambda.size();
    let multiples = (n / j) as i64;
    let hooks = lambda
        .hook_multiset()
        .iter()
        .filter(|&&h| h % j == 0)
        .count() as i64;
    multiples - hooks
}

/// Partitions of size at most `n` that are `ℓ`-cores, with size `≡ n (mod ℓ)`.
pub fn cores_congruent(n: usize, ell: usize) -> Vec<Partition> {
    (0..=n)
        .filter(|k| k % ell == n % ell)
        .flat_map(partitions_of)
        .filter(|p| p.is_core(ell))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int_poly;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("[2,2,1]").conjugate(), p("[3,2]"));
        assert_eq!(p("[]").conjugate(), p("[]"));
        assert_eq!(p("[5]").conjugate(), p("[1,1,1,1,1]"));
    }

    #[test]
    fn hook_and_n_examples() {
        assert_eq!(p("[2,2,1]").hook_multiset(), vec![4, 3, 2, 1, 1]);
        assert_eq!(p("[1]").hook_multiset(), vec![1]);
        assert_eq!(p("[4]").hook_multiset(), vec![4, 3, 2, 1]);
        assert_eq!(p("[2,2,1]").n_statistic(), 4);
        assert_eq!(p("[1,1,1]").n_statistic(), 3);
        assert_eq!(p("[6]").n_statistic(), 0);
    }

    #[test]
    fn core_examples() {
        let cq = p("[2,2,1]").core_quotient(2);
        assert_eq!((cq.core, cq.r), (p("[1]"), 2));
        let cq = p("[3,1]").core_quotient(2);
        assert_eq!((cq.core, cq.r), (p("[]"), 2));
        let cq = p("[4,2,1]").core_quotient(1);
        assert_eq!((cq.core, cq.r), (p("[]"), 7));
        let cq = p("[]").core_quotient(5);
        assert_eq!((cq.core, cq.r, cq.g), (p("[]"), 0, 0));
    }

    #[test]
    fn symmetric_examples() {
        assert!(p("[2,1]").is_symmetric());
        assert!(!p("[3,1]").is_symmetric());
        assert!(p("[4,2,1,1]").is_symmetric());
    }

    #[test]
    fn fake_degree_examples() {
        assert_eq!(fake_degree(&p("[4]")), int_poly(&[1]));
        assert_eq!(fake_degree(&p("[2,1]")), int_poly(&[0, 1, 1]));
        assert_eq!(fake_degree(&p("[1,1,1]")), int_poly(&[0, 0, 0, 1]));
        assert_eq!(fake_degree(&p("[]")), int_poly(&[1]));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(phi_valuation(&p("[2,1]"), 3), 0);
        assert_eq!(phi_valuation(&p("[2,2,1]"), 2), 0);
        for j in 2..7 {
            assert_eq!(phi_valuation(&p("[5]"), j), 0);
        }
    }

    #[test]
    fn parse_errors() {
        assert!("[2,1,3]".parse::<Partition>().is_err());
        assert!("2,1".parse::<Partition>().is_err());
        assert!("[2,0]".parse::<Partition>().is_err());
        assert_eq!(" [ 3 , 1 ] ".parse::<Partition>().unwrap(), p("[3,1]"));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_of(3), vec![p("[3]"), p("[2,1]"), p("[1,1,1]")]);
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p("[1,1,1]").z(), BigInt::from(6));
        assert_eq!(p("[2,2]").z(), BigInt::from(8));
        assert_eq!(p("[]").z(), BigInt::from(1));
        assert_eq!(p("[3,2,1]").dimension(), BigInt::from(16));
    }
}
