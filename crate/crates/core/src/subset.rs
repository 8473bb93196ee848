//! Colexicographic ranking of k-subsets and lexicographic ranking of
//! permutations. Arc ids are colex ranks of their vertex sets.

use std::sync::OnceLock;

use crate::error::{HyperError, Result};

/// Largest vertex count the binomial table covers.
pub const MAX_VERTICES: usize = 64;

fn table() -> &'static [[u64; MAX_VERTICES + 1]; MAX_VERTICES + 1] {
    static TABLE: OnceLock<[[u64; MAX_VERTICES + 1]; MAX_VERTICES + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0u64; MAX_VERTICES + 1]; MAX_VERTICES + 1];
        for n in 0..=MAX_VERTICES {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

/// C(n, k), zero when k > n. Panics if n > 64.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        0
    } else {
        table()[n][k]
    }
}

/// Colex rank of a strictly increasing vertex list: sum of C(s_i, i+1).
pub fn colex_rank(sorted: &[usize]) -> u64 {
    sorted
        .iter()
        .enumerate()
        .map(|(i, &s)| binomial(s, i + 1))
        .sum()
}

/// Checked rank of an arbitrary k-subset of `[0, n)`, in any order.
pub fn subset_rank(n: usize, k: usize, vertices: &[usize]) -> Result<u64> {
    if vertices.len() != k {
        return Err(HyperError::BadSubsetSize {
            got: vertices.len(),
            k,
        });
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    if let Some(&v) = sorted.iter().find(|&&v| v >= n) {
        return Err(HyperError::VertexOutOfRange {
            label: v as i64 + 1,
            n,
        });
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(HyperError::BadSubsetSize {
            got: dedup_len(&sorted),
            k,
        });
    }
    Ok(colex_rank(&sorted))
}

fn dedup_len(sorted: &[usize]) -> usize {
    let mut v = sorted.to_vec();
    v.dedup();
    v.len()
}

/// Inverse of [`subset_rank`]; returns the subset in increasing order.
pub fn subset_unrank(n: usize, k: usize, rank: u64) -> Result<Vec<usize>> {
    let count = binomial(n, k);
    if rank >= count {
        return Err(HyperError::RankOutOfRange { rank, count });
    }
    let mut out = vec![0; k];
    unrank_into(k, rank, &mut out);
    Ok(out)
}

/// Unchecked colex unrank into `out[..k]`.
pub(crate) fn unrank_into(k: usize, mut rank: u64, out: &mut [usize]) {
    let mut top = MAX_VERTICES;
    for i in (1..=k).rev() {
        // largest c < top with C(c, i) <= rank
        let mut c = top - 1;
        while binomial(c, i) > rank {
            c -= 1;
        }
        out[i - 1] = c;
        rank -= binomial(c, i);
        top = c;
    }
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// All permutations of `0..k` in lexicographic order. Only sensible for small k.
pub fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut current: Vec<u8> = (0..k as u8).collect();
    let mut out = Vec::with_capacity(factorial(k) as usize);
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Lexicographic rank of a permutation of `0..k`.
pub fn permutation_rank(perm: &[u8]) -> u64 {
    let k = perm.len();
    let mut rank = 0;
    for i in 0..k {
        let smaller_later = perm[i + 1..].iter().filter(|&&p| p < perm[i]).count() as u64;
        rank += smaller_later * factorial(k - 1 - i);
    }
    rank
}
