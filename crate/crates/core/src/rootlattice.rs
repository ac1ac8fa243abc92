//! McKay graphs of cyclic and binary dihedral subgroups of `SL_2`, the affine
//! Weyl group action on the root lattice, and the weight of a root vector.
//!
//! The generator at vertex `χ` acts by
//! `s_χ.d = d − ((C d)_χ − [χ = χ_0]) α_χ` with `C = 2 Id − A`, which on
//! coordinates reads `(s_χ.d)_χ = Σ_{edges χ–h} d_h − d_χ + [χ = χ_0]`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::characters::{BdChar, BdClass, BinaryDihedralTable};
use crate::exactnum::CycInt;
use crate::partitions::Partition;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    /// `μ_ℓ`, of order `ℓ`.
    Cyclic(usize),
    /// The binary dihedral group of order `4l`.
    BinaryDihedral(usize),
}

impl Group {
    pub fn order(self) -> usize {
        match self {
            Group::Cyclic(ell) => ell,
            Group::BinaryDihedral(l) => 4 * l,
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Cyclic(ell) => write!(f, "cyclic:{ell}"),
            Group::BinaryDihedral(l) => write!(f, "binary_dihedral:{l}"),
        }
    }
}

impl core::str::FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidParameter(format!("unknown group {s:?}"));
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = arg.trim().parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match kind.trim() {
            "cyclic" => Ok(Group::Cyclic(k)),
            "binary_dihedral" | "bd" => Ok(Group::BinaryDihedral(k)),
            _ => Err(bad()),
        }
    }
}

/// Vertices are the irreducible characters; vertex 0 is the trivial one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McKayGraph {
    group: Group,
    labels: Vec<String>,
    dims: Vec<i64>,
    adjacency: Vec<Vec<i64>>,
}

impl McKayGraph {
    pub fn new(group: Group) -> Result<Self, Error> {
        match group {
            Group::Cyclic(ell) => Self::cyclic(ell),
            Group::BinaryDihedral(l) => Self::binary_dihedral(l),
        }
    }

    /// Characters `τ^i`, `0 ≤ i < ℓ`, with `χ_std = τ + τ^{−1}`.
    fn cyclic(ell: usize) -> Result<Self, Error> {
        if ell == 0 {
            return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
        }
        let order = ell as u32;
        let chi = |i: usize, a: usize| CycInt::zeta_pow(order, (i * a) as i64);
        let std = |a: usize| &chi(1, a) + &CycInt::zeta_pow(order, -(a as i64));
        let mut adjacency = vec![vec![0i64; ell]; ell];
        for (i, row) in adjacency.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = CycInt::zero(order);
                for a in 0..ell {
                    acc = &acc + &(&(&chi(i, a) * &std(a)) * &chi(j, a).conj());
                }
                *slot = exact_small(&acc, ell)?;
            }
        }
        Ok(Self {
            group: Group::Cyclic(ell),
            labels: (0..ell).map(|i| format!("tau^{i}")).collect(),
            dims: vec![1; ell],
            adjacency,
        })
    }

    /// Vertices `[χ_{0+}, χ_{0−}, χ_1, …, χ_{l−1}, χ_{l+}, χ_{l−}]`.
    fn binary_dihedral(l: usize) -> Result<Self, Error> {
        let table = BinaryDihedralTable::new(l)?;
        let std_row = bd_standard(&table);
        let chars = table.chars().to_vec();
        let mut adjacency = vec![vec![0i64; chars.len()]; chars.len()];
        for (i, &a) in chars.iter().enumerate() {
            let prod: Vec<CycInt> = table
                .row(a)
                .iter()
                .zip(&std_row)
                .map(|(x, y)| x * y)
                .collect();
            for (j, &b) in chars.iter().enumerate() {
                let m = table
                    .inner(&prod, &table.row(b))
                    .ok_or(Error::NotIntegral("McKay multiplicity"))?;
                adjacency[i][j] = rational_to_i64(&m)?;
            }
        }
        Ok(Self {
            group: Group::BinaryDihedral(l),
            labels: chars.iter().map(|c| format!("{c}")).collect(),
            dims: chars.iter().map(|c| c.dimension() as i64).collect(),
            adjacency,
        })
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `δ^Γ`, the dimension vector.
    pub fn dims(&self) -> &[i64] {
        &self.dims
    }

    pub fn adjacency(&self) -> &[Vec<i64>] {
        &self.adjacency
    }

    /// `C = 2 Id − A`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| 2 * i64::from(i == j) - self.adjacency[i][j])
                    .collect()
            })
            .collect()
    }

    pub fn delta(&self) -> RootVector {
        RootVector(self.dims.clone())
    }

    fn cd(&self, d: &RootVector, chi: usize) -> i64 {
        let a = &self.adjacency[chi];
        2 * d.0[chi] - a.iter().zip(&d.0).map(|(x, y)| x * y).sum::<i64>()
    }

    /// The generator `s_χ` applied to `d`.
    ///
    /// For the trivial group the only vertex carries a double loop, its root
    /// is imaginary and this map is the translation `d ↦ d + 1` rather than
    /// an involution.
    pub fn reflect(&self, d: &RootVector, chi: usize) -> RootVector {
        assert_eq!(d.0.len(), self.len(), "root vector of the wrong length");
        let c = self.cd(d, chi) - i64::from(chi == 0);
        let mut out = d.clone();
        out.0[chi] -= c;
        out
    }

    /// `⟨d, δ^∨⟩ = Σ_χ dim(χ) (C d)_χ`.
    pub fn coroot_pairing(&self, d: &RootVector) -> i64 {
        (0..self.len()).map(|i| self.dims[i] * self.cd(d, i)).sum()
    }

    /// `Σ_χ dim(χ) d_χ`, the dimension of a module with character `Σ d_χ χ`.
    pub fn dimension(&self, d: &RootVector) -> i64 {
        self.dims.iter().zip(&d.0).map(|(a, b)| a * b).sum()
    }

    /// Reduces `d` by applying, at the smallest vertex available, any
    /// generator that lowers its own coordinate, until none does; the end
    /// point must be `r δ`, and `r` is returned.
    pub fn weight(&self, d: &RootVector) -> Result<i64, Error> {
        let size: i64 = self.dims.iter().zip(&d.0).map(|(a, b)| a * b.abs()).sum();
        let verts = self.len() as i64;
        let cap = 10 * (size + 1) * verts * verts;
        let mut cur = d.clone();
        let mut steps = 0i64;
        loop {
            let next = (0..self.len()).find(|&chi| self.cd(&cur, chi) - i64::from(chi == 0) > 0);
            let Some(chi) = next else { break };
            cur = self.reflect(&cur, chi);
            steps += 1;
            if steps > cap {
                return Err(Error::WeightReduction(format!(
                    "no fixed point after {cap} steps from {d}"
                )));
            }
        }
        let r = cur.0[0];
        if cur.0.iter().zip(&self.dims).any(|(x, dim)| *x != r * dim) {
            return Err(Error::WeightReduction(format!(
                "{d} reduces to {cur}, which is not a multiple of δ"
            )));
        }
        Ok(r)
    }

    /// `d_{χ_0} − ½ dᵀ C d`, an invariant of the action that equals `r` on `r δ`.
    pub fn quadratic_weight(&self, d: &RootVector) -> i64 {
        let quad: i64 = (0..self.len()).map(|i| d.0[i] * self.cd(d, i)).sum();
        debug_assert!(quad % 2 == 0, "the Cartan form is even");
        d.0[0] - quad / 2
    }
}

fn bd_standard(table: &BinaryDihedralTable) -> Vec<CycInt> {
    let m = table.value_order();
    let l = table.l() as i64;
    table
        .classes()
        .iter()
        .map(|class| match class {
            BdClass::Identity => CycInt::from_int(m, 2),
            BdClass::MinusIdentity => CycInt::from_int(m, -2),
            BdClass::Omega(p) => {
                let e = *p as i64 * (m as i64 / (2 * l));
                &CycInt::zeta_pow(m, e) + &CycInt::zeta_pow(m, -e)
            }
            BdClass::S | BdClass::SOmega => CycInt::zero(m),
        })
        .collect()
}

fn exact_small(v: &CycInt, denom: usize) -> Result<i64, Error> {
    let c = v
        .to_integer()
        .ok_or(Error::NotIntegral("McKay multiplicity"))?;
    let (q, r) = c.div_rem(&BigInt::from(denom));
    if !r.is_zero() {
        return Err(Error::NotIntegral("McKay multiplicity"));
    }
    q.to_i64().ok_or(Error::NotIntegral("McKay multiplicity"))
}

fn rational_to_i64(v: &BigRational) -> Result<i64, Error> {
    if !v.is_integer() {
        return Err(Error::NotIntegral("McKay multiplicity"));
    }
    v.to_integer()
        .to_i64()
        .ok_or(Error::NotIntegral("McKay multiplicity"))
}

/// Integer coordinates `d_χ`, in the vertex order of the McKay graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn zero(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.0[i] = 1;
        v
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Character of `ℂ[x,y]/I_λ` under `μ_ℓ`: `d_i` counts cells whose content
/// `col − row` is `≡ i (mod ℓ)`.
pub fn partition_to_rootvector(lambda: &Partition, ell: usize) -> RootVector {
    assert!(ell >= 1, "ℓ must be at least 1");
    let mut d = RootVector::zero(ell);
    for (row, col) in lambda.cells() {
        let c = Partition::content(row, col);
        d.0[c.rem_euclid(ell as i64) as usize] += 1;
    }
    d
}

/// Character of `ℂ[x,y]/I_λ` under the binary dihedral group of order `4l`,
/// for symmetric `λ`, in the vertex order of [`McKayGraph`].
///
/// The trace at `ω^p` is `Σ_cells ζ_{2l}^{p·content}`; at both `s`-classes only
/// diagonal monomials `(xy)^a` are fixed up to the sign `(−1)^a`.
pub fn bd_rootvector(lambda: &Partition, l: usize) -> Result<RootVector, Error> {
    if !lambda.is_symmetric() {
        return Err(Error::NotSymmetric(lambda.clone()));
    }
    let table = BinaryDihedralTable::new(l)?;
    let m = table.value_order();
    let step = m as i64 / (2 * l as i64);
    let contents: Vec<i64> = lambda
        .cells()
        .map(|(r, c)| Partition::content(r, c))
        .collect();
    let diagonal: i64 = lambda
        .cells()
        .filter(|(r, c)| r == c)
        .map(|(r, _)| if (r - 1) % 2 == 0 { 1 } else { -1 })
        .sum();
    let trace: Vec<CycInt> = table
        .classes()
        .iter()
        .map(|class| {
            let p = match class {
                BdClass::Identity => 0,
                BdClass::MinusIdentity => l as i64,
                BdClass::Omega(p) => *p as i64,
                BdClass::S | BdClass::SOmega => return CycInt::from_int(m, diagonal),
            };
            let one = BigInt::from(1);
            CycInt::from_exponent_sum(m, contents.iter().map(|&c| (p * c * step, &one)))
        })
        .collect();
    let mut d = RootVector::zero(table.chars().len());
    for (i, &chi) in table.chars().iter().enumerate() {
        let v = table
            .inner(&trace, &table.row(chi))
            .ok_or(Error::NotIntegral("BD multiplicity"))?;
        d.0[i] = rational_to_i64(&v)?;
    }
    Ok(d)
}

/// Entries of `A^n_Γ`: every `d ≥ 0` with `Σ dim(χ) d_χ = n` and `wt(d) ≥ 0`,
/// with its weight.
pub fn enumerate_components(graph: &McKayGraph, n: usize) -> Result<Vec<(RootVector, i64)>, Error> {
    let mut out = Vec::new();
    let mut cur = RootVector::zero(graph.len());
    let mut failure = None;
    fill(graph, 0, n as i64, &mut cur, &mut |d| {
        if failure.is_some() {
            return;
        }
        match graph.weight(d) {
            Ok(w) if w >= 0 => out.push((d.clone(), w)),
            Ok(_) => {}
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn fill(
    graph: &McKayGraph,
    i: usize,
    left: i64,
    cur: &mut RootVector,
    f: &mut dyn FnMut(&RootVector),
) {
    if i == graph.len() {
        if left == 0 {
            f(cur);
        }
        return;
    }
    let dim = graph.dims[i];
    for k in 0..=left / dim {
        cur.0[i] = k;
        fill(graph, i + 1, left - k * dim, cur, f);
    }
    cur.0[i] = 0;
}

/// Counts entries of `A^n_Γ` by weight.
pub fn weight_census(entries: &[(RootVector, i64)]) -> BTreeMap<i64, usize> {
    let mut census = BTreeMap::new();
    for (_, w) in entries {
        *census.entry(*w).or_insert(0) += 1;
    }
    census
}

/// `χ_std` of the binary dihedral group in the vertex order of its McKay graph.
pub fn bd_standard_vertices(l: usize) -> Result<Vec<BdChar>, Error> {
    Ok(BinaryDihedralTable::new(l)?.chars().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{cores_congruent, partitions_of};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn graphs() {
        let g = McKayGraph::new(Group::Cyclic(2)).unwrap();
        assert_eq!(g.adjacency(), &[vec![0, 2], vec![2, 0]]);
        let g = McKayGraph::new(Group::Cyclic(4)).unwrap();
        for i in 0..4 {
            let row: i64 = g.adjacency()[i].iter().sum();
            assert_eq!(row, 2);
            assert_eq!(g.adjacency()[i][(i + 1) % 4], 1);
        }
        let g = McKayGraph::new(Group::Cyclic(1)).unwrap();
        assert_eq!(g.adjacency(), &[vec![2]]);

        let g = McKayGraph::new(Group::BinaryDihedral(2)).unwrap();
        assert_eq!(g.dims(), &[1, 1, 2, 1, 1]);
        // Affine D4: the 2-dimensional vertex joins all four others.
        assert_eq!(g.adjacency()[2], vec![1, 1, 0, 1, 1]);
        for l in 1..=5 {
            let g = McKayGraph::new(Group::BinaryDihedral(l)).unwrap();
            for (i, row) in g.cartan().iter().enumerate() {
                let kernel: i64 = row.iter().zip(g.dims()).map(|(c, d)| c * d).sum();
                assert_eq!(kernel, 0, "l={l} vertex {i}");
                for j in 0..g.len() {
                    assert_eq!(g.adjacency()[i][j], g.adjacency()[j][i]);
                }
            }
        }
    }

    #[test]
    fn reflections() {
        let g = McKayGraph::new(Group::Cyclic(2)).unwrap();
        let delta = g.delta();
        assert_eq!(g.reflect(&delta, 1), delta);
        assert_eq!(g.reflect(&delta, 0), RootVector(vec![2, 1]));
        let zero = RootVector::zero(2);
        assert_eq!(g.reflect(&zero, 1), zero);
        assert_eq!(g.reflect(&zero, 0), RootVector(vec![1, 0]));
    }

    #[test]
    fn dimension_sum_is_not_preserved() {
        // Σ dim·d moves under s_{χ0}; the pairing ⟨d, δ^∨⟩ is what stays fixed.
        let g = McKayGraph::new(Group::Cyclic(3)).unwrap();
        let zero = RootVector::zero(3);
        let moved = g.reflect(&zero, 0);
        assert_ne!(g.dimension(&moved), g.dimension(&zero));
        assert_eq!(g.coroot_pairing(&moved), 0);
    }

    #[test]
    fn weights() {
        let g = McKayGraph::new(Group::Cyclic(2)).unwrap();
        assert_eq!(g.weight(&RootVector(vec![3, 3])), Ok(3));
        assert_eq!(g.weight(&RootVector(vec![1, 0])), Ok(0));
        let d = partition_to_rootvector(&p("[2,2,1]"), 2);
        assert_eq!(d, RootVector(vec![3, 2]));
        assert_eq!(g.weight(&d), Ok(2));
    }

    #[test]
    fn rootvector_examples() {
        for ell in 1..6 {
            assert_eq!(
                partition_to_rootvector(&p("[1]"), ell),
                RootVector::unit(ell, 0)
            );
        }
        assert_eq!(
            partition_to_rootvector(&p("[4]"), 6),
            RootVector(vec![1, 1, 1, 1, 0, 0])
        );
    }

    #[test]
    fn type_a_weights_match_cores() {
        for n in 0..=8 {
            for lambda in partitions_of(n) {
                for ell in 1..=5 {
                    let g = McKayGraph::new(Group::Cyclic(ell)).unwrap();
                    let d = partition_to_rootvector(&lambda, ell);
                    let r = lambda.core_quotient(ell).r as i64;
                    assert_eq!(g.weight(&d), Ok(r), "{lambda} ℓ={ell}");
                    assert_eq!(g.quadratic_weight(&d), r);
                }
            }
        }
    }

    #[test]
    fn component_counts() {
        for ell in 1..=4 {
            let g = McKayGraph::new(Group::Cyclic(ell)).unwrap();
            for n in 0..=7 {
                let entries = enumerate_components(&g, n).unwrap();
                assert_eq!(
                    entries.len(),
                    cores_congruent(n, ell).len(),
                    "ℓ={ell} n={n}"
                );
            }
        }
        let g = McKayGraph::new(Group::Cyclic(3)).unwrap();
        assert_eq!(
            enumerate_components(&g, 0).unwrap(),
            vec![(RootVector::zero(3), 0)]
        );
    }

    #[test]
    fn bd_vectors() {
        let d = bd_rootvector(&p("[2,1]"), 1).unwrap();
        let g = McKayGraph::new(Group::BinaryDihedral(1)).unwrap();
        assert_eq!(g.dimension(&d), 3);
        assert!(bd_rootvector(&p("[3,1]"), 2).is_err());
        let d = bd_rootvector(&p("[1]"), 2).unwrap();
        assert_eq!(d, RootVector::unit(5, 0));
    }

    #[test]
    fn group_parsing() {
        assert_eq!("cyclic:3".parse::<Group>(), Ok(Group::Cyclic(3)));
        assert_eq!(
            "binary_dihedral:2".parse::<Group>(),
            Ok(Group::BinaryDihedral(2))
        );
        assert!("cyclic:0".parse::<Group>().is_err());
        assert!("e8:1".parse::<Group>().is_err());
    }
}
