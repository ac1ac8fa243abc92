//! Brute-force references that share no code with the library.

use std::collections::{BTreeMap, BTreeSet, HashMap};

fn hooks(parts: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = parts[i + 1..].iter().filter(|&&p| p > j).count();
            out.push((i, j, arm + leg + 1));
        }
    }
    out
}

/// Removes the rim hook whose corner cell is `(i, j)`.
fn remove_rim_hook(parts: &[usize], i: usize, j: usize) -> Vec<usize> {
    let leg = parts[i + 1..].iter().filter(|&&p| p > j).count();
    let mut out = parts.to_vec();
    for k in i..i + leg {
        out[k] = parts[k + 1] - 1;
    }
    out[i + leg] = j;
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn all_cores(
    parts: &[usize],
    ell: usize,
    memo: &mut HashMap<Vec<usize>, BTreeSet<(Vec<usize>, usize)>>,
) -> BTreeSet<(Vec<usize>, usize)> {
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut found = BTreeSet::new();
    for (i, j, h) in hooks(parts) {
        if h == ell {
            let smaller = remove_rim_hook(parts, i, j);
            for (core, r) in all_cores(&smaller, ell, memo) {
                found.insert((core, r + 1));
            }
        }
    }
    if found.is_empty() {
        found.insert((parts.to_vec(), 0));
    }
    memo.insert(parts.to_vec(), found.clone());
    found
}

/// Core and hook count reached by every removal order; panics if two orders
/// disagree.
pub fn core_by_rim_hooks(parts: &[usize], ell: usize) -> (Vec<usize>, usize) {
    let found = all_cores(parts, ell, &mut HashMap::new());
    assert_eq!(
        found.len(),
        1,
        "removal order matters for {parts:?}, ℓ={ell}: {found:?}"
    );
    found.into_iter().next().unwrap()
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of `ℓ`-cores of size `m ≤ n` with `m ≡ n (mod ℓ)`.
pub fn cores_up_to(n: usize, ell: usize) -> usize {
    (0..=n)
        .filter(|m| (n - m).is_multiple_of(ell))
        .flat_map(|m| partitions(m, m))
        .filter(|p| hooks(p).iter().all(|&(_, _, h)| h != ell))
        .count()
}

/// Assignments of `0..n` to rows with the given row sizes.
fn tabloids(shape: &[usize]) -> Vec<Vec<usize>> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut left = shape.to_vec();
    fn go(n: usize, cur: &mut Vec<usize>, left: &mut [usize], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                cur.push(r);
                go(n, cur, left, out);
                cur.pop();
                left[r] += 1;
            }
        }
    }
    go(n, &mut cur, &mut left, &mut out);
    out
}

/// A permutation of cycle type `mu` built from consecutive cycles.
fn permutation_of_type(mu: &[usize]) -> Vec<usize> {
    let mut sigma = Vec::new();
    let mut start = 0;
    for &len in mu {
        for k in 0..len {
            sigma.push(start + (k + 1) % len);
        }
        start += len;
    }
    sigma
}

/// Semistandard tableaux of shape `shape` and content `content`, by filling
/// cells in reading order.
fn kostka(shape: &[usize], content: &[usize]) -> i64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&r| vec![0; r]).collect();
    let mut left = content.to_vec();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        left: &mut [usize],
    ) -> i64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (j > 0 && grid[i][j - 1] > v) || (i > 0 && grid[i - 1][j] >= v) {
                continue;
            }
            left[v] -= 1;
            grid[i][j] = v;
            total += go(k + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    go(0, &cells, &mut grid, &mut left)
}

/// Irreducible characters of `𝔖_n` from traces on permutation modules of
/// tabloids, unwound with Kostka numbers.
pub fn characters_from_traces(n: usize) -> BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, i64>> {
    // Decreasing lexicographic order refines dominance.
    let shapes = partitions(n, n);
    let perm_char = |lambda: &[usize], mu: &[usize]| -> i64 {
        let sigma = permutation_of_type(mu);
        tabloids(lambda)
            .iter()
            .filter(|t| (0..n).all(|i| t[sigma[i]] == t[i]))
            .count() as i64
    };
    let mut chars: BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, i64>> = BTreeMap::new();
    for (idx, lambda) in shapes.iter().enumerate() {
        let mut row = BTreeMap::new();
        for mu in &shapes {
            let mut v = perm_char(lambda, mu);
            for nu in &shapes[..idx] {
                v -= kostka(nu, lambda) * chars[nu][mu];
            }
            row.insert(mu.clone(), v);
        }
        chars.insert(lambda.clone(), row);
    }
    chars
}
