//! Permutations of `{0, …, n−1}`.

use alloc::vec::Vec;
use core::fmt;

use crate::partitions::Partition;

/// A permutation stored by its images: `self.apply(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Self { images })
    }

    /// Builds a permutation of `n` points from disjoint cycles written with
    /// 1-based points, as in `(1 2 3 4)(5 6 7 8)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = alloc::vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || b == 0 || a > n || b > n || core::mem::replace(&mut moved[a - 1], true)
                {
                    return None;
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = alloc::vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(self.degree()), |acc, _| acc.compose(&base))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    pub fn order(&self) -> usize {
        self.cycle_type().parts().iter().fold(1, |acc, &p| {
            acc / crate::exactnum::gcd_u64(acc as u64, p as u64) as usize * p
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}", i + 1)?;
                i = self.images[i];
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_and_powers() {
        let w = Permutation::from_cycles(8, &[&[1, 2, 3, 4], &[5, 6, 7, 8]]).unwrap();
        assert_eq!(alloc::format!("{w}"), "(1 2 3 4)(5 6 7 8)");
        assert_eq!(w.order(), 4);
        assert_eq!(w.pow(2).cycle_type().parts(), &[2, 2, 2, 2]);
        assert!(w.pow(4).is_identity());
        assert_eq!(w.pow(-1), w.inverse());
        assert!(Permutation::from_cycles(3, &[&[1, 2], &[2, 3]]).is_none());
    }

    #[test]
    fn composition_order() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // a ∘ b sends 2 ↦ 3 ↦ 3, 3 ↦ 2 ↦ 1, 1 ↦ 1 ↦ 2.
        assert_eq!(
            a.compose(&b),
            Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()
        );
    }
}
