//! Instance generators: transitive hypertournaments, the three strong
//! constructions with prescribed (1,2)-step competition graphs, seeded random
//! instances, and exhaustive enumeration.

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{HyperError, Result};
use crate::hypercore::{Hypertournament, MAX_ARCS};
use crate::subset::{binomial, factorial, permutations, unrank_into, MAX_VERTICES};

/// Name of the random generator, part of the reproducibility contract: a
/// given `(n, k, seed)` maps to the same instance as long as this is unchanged.
pub const RANDOM_GENERATOR: &str = "chacha8/rand-0.8-shuffle/colex/v1";

/// Default cap on the number of instances [`enumerate_all`] will agree to produce.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

fn check(n: usize, k: usize, min_k: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(HyperError::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    if k < min_k || k + 1 > n {
        return Err(HyperError::ArityOutOfRange { n, k, min: min_k });
    }
    if binomial(n, k) > MAX_ARCS {
        return Err(HyperError::InstanceTooLarge {
            arcs: binomial(n, k),
            max: MAX_ARCS,
        });
    }
    Ok(())
}

/// Builds an instance by ordering each subset (given sorted) with `order`.
fn from_rule(n: usize, k: usize, mut order: impl FnMut(&mut [usize])) -> Hypertournament {
    let m = binomial(n, k) as usize;
    let mut entries = Vec::with_capacity(m * k);
    let mut subset = vec![0; k];
    for r in 0..m {
        unrank_into(k, r as u64, &mut subset);
        order(&mut subset);
        entries.extend(subset.iter().map(|&v| v as u8));
    }
    Hypertournament::from_entries(n, k, entries)
}

/// Every arc lists its vertices in increasing index order. Accepts k = 2.
pub fn transitive(n: usize, k: usize) -> Result<Hypertournament> {
    check(n, k, 2)?;
    Ok(from_rule(n, k, |_| {}))
}

/// Orientation of the replaced arcs in [`t1`] and [`t2`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum FigureVariant {
    /// Full reversal: `(v_n, ..., v_2, v_1)`.
    #[default]
    Text,
    /// High vertices descending, then `v_1, v_2`, as drawn for n = 5.
    Figure,
}

/// Sorted subset `{v1, v2} ∪ high` reoriented as high-descending followed by
/// the two low vertices in the variant's order.
fn reversed_arc(subset: &mut [usize], variant: FigureVariant) {
    subset.reverse();
    if variant == FigureVariant::Figure {
        let k = subset.len();
        subset.swap(k - 2, k - 1);
    }
}

/// The 0-based vertex set `{0, 1} ∪ {lo, ..., lo + k - 3}`.
fn low_pair_with_run(lo: usize, k: usize) -> Vec<usize> {
    let mut s = vec![0, 1];
    s.extend(lo..lo + k - 2);
    s
}

fn replace_arcs(
    n: usize,
    k: usize,
    replaced: &[Vec<usize>],
    variant: FigureVariant,
) -> Hypertournament {
    from_rule(n, k, |subset| {
        if replaced.iter().any(|r| r == subset) {
            reversed_arc(subset, variant);
        }
    })
}

/// Transitive instance with the arc on `{v1, v2, v_{n-k+3}, ..., v_n}`
/// reversed. Strong, with (1,2)-step competition graph `K_n` minus `v_{n-1}v_n`.
pub fn t1(n: usize, k: usize, variant: FigureVariant) -> Result<Hypertournament> {
    check(n, k, 3)?;
    Ok(replace_arcs(
        n,
        k,
        &[low_pair_with_run(n + 2 - k, k)],
        variant,
    ))
}

/// [`t1`] with the arc on `{v1, v2, v_{n-k+2}, ..., v_{n-1}}` also reversed.
/// Strong, with (1,2)-step competition graph `K_n`.
pub fn t2(n: usize, k: usize, variant: FigureVariant) -> Result<Hypertournament> {
    check(n, k, 3)?;
    let replaced = [
        low_pair_with_run(n + 2 - k, k),
        low_pair_with_run(n + 1 - k, k),
    ];
    Ok(replace_arcs(n, k, &replaced, variant))
}

/// Strong instance whose (1,2)-step competition graph is `K_n` minus the
/// edges `v1v2` and `v2v3`. Arcs keep increasing order except:
/// - with v1 and v2: v1 second last, v2 last;
/// - with v1 but not v2: v1 last;
/// - with v2 but neither v1 nor v3: v2 last;
/// - with v2 and v3 but not v1: v2 second last, v3 last.
pub fn t3(n: usize, k: usize) -> Result<Hypertournament> {
    check(n, k, 3)?;
    Ok(from_rule(n, k, |s| {
        let has = |v: usize| s.contains(&v);
        let tail: &[usize] = match (has(0), has(1), has(2)) {
            (true, true, _) => &[0, 1],
            (true, false, _) => &[0],
            (false, true, false) => &[1],
            (false, true, true) => &[1, 2],
            (false, false, _) => &[],
        };
        let mut ordered: Vec<usize> = s.iter().copied().filter(|v| !tail.contains(v)).collect();
        ordered.extend_from_slice(tail);
        s.copy_from_slice(&ordered);
    }))
}

/// Each subset gets an independent uniform ordering. Deterministic in
/// `(n, k, seed)`; see [`RANDOM_GENERATOR`]. Accepts k = 2.
pub fn random_hypertournament(n: usize, k: usize, seed: u64) -> Result<Hypertournament> {
    check(n, k, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(from_rule(n, k, |s| s.shuffle(&mut rng)))
}

/// `(k!)^C(n,k)`, saturating at `u128::MAX`.
pub fn instance_count(n: usize, k: usize) -> u128 {
    let radix = factorial(k) as u128;
    let mut total: u128 = 1;
    for _ in 0..binomial(n, k) {
        total = total.saturating_mul(radix);
    }
    total
}

/// All labelled k-hypertournaments on n vertices, addressable by index.
///
/// Index `i` is read as a mixed-radix number whose digit for subset rank `r`
/// (least significant first) is the lexicographic rank of the permutation
/// applied to that sorted subset. Index 0 is the transitive instance.
#[derive(Clone, Debug)]
pub struct Enumeration {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
    perms: Vec<Vec<u8>>,
    total: u64,
}

/// Prepares exhaustive enumeration, refusing when the instance count exceeds
/// `budget`.
pub fn enumerate_all(n: usize, k: usize, budget: u128) -> Result<Enumeration> {
    check(n, k, 2)?;
    let count = instance_count(n, k);
    if count > budget || count > u64::MAX as u128 {
        return Err(HyperError::BudgetExceeded { count, budget });
    }
    let m = binomial(n, k) as usize;
    let mut subsets = Vec::with_capacity(m);
    for r in 0..m {
        let mut s = vec![0; k];
        unrank_into(k, r as u64, &mut s);
        subsets.push(s);
    }
    Ok(Enumeration {
        n,
        k,
        subsets,
        perms: permutations(k),
        total: count as u64,
    })
}

impl Enumeration {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    fn digits_of(&self, mut index: u64) -> Vec<usize> {
        let radix = self.perms.len() as u64;
        (0..self.subsets.len())
            .map(|_| {
                let d = (index % radix) as usize;
                index /= radix;
                d
            })
            .collect()
    }

    fn write_subset(&self, r: usize, digit: usize, entries: &mut [u8]) {
        let k = self.k;
        let perm = &self.perms[digit];
        let subset = &self.subsets[r];
        for (slot, &p) in entries[r * k..(r + 1) * k].iter_mut().zip(perm) {
            *slot = subset[p as usize] as u8;
        }
    }

    /// The instance at `index`, or `RankOutOfRange` past the end.
    pub fn instance(&self, index: u64) -> Result<Hypertournament> {
        if index >= self.total {
            return Err(HyperError::RankOutOfRange {
                rank: index,
                count: self.total,
            });
        }
        let mut entries = vec![0u8; self.subsets.len() * self.k];
        for (r, d) in self.digits_of(index).into_iter().enumerate() {
            self.write_subset(r, d, &mut entries);
        }
        Ok(Hypertournament::from_entries(self.n, self.k, entries))
    }

    /// Instances with indices in `range` (clamped to the end), in order.
    pub fn iter_range(&self, range: Range<u64>) -> EnumerationIter<'_> {
        let start = range.start.min(self.total);
        let end = range.end.min(self.total);
        let digits = self.digits_of(start);
        let mut entries = vec![0u8; self.subsets.len() * self.k];
        for (r, &d) in digits.iter().enumerate() {
            self.write_subset(r, d, &mut entries);
        }
        EnumerationIter {
            e: self,
            next: start,
            end,
            digits,
            entries,
        }
    }

    pub fn iter(&self) -> EnumerationIter<'_> {
        self.iter_range(0..self.total)
    }
}

/// Odometer over an [`Enumeration`] range. Yields `(index, instance)`.
pub struct EnumerationIter<'a> {
    e: &'a Enumeration,
    next: u64,
    end: u64,
    digits: Vec<usize>,
    entries: Vec<u8>,
}

impl Iterator for EnumerationIter<'_> {
    type Item = (u64, Hypertournament);

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let index = self.next;
        let t = Hypertournament::from_entries(self.e.n, self.e.k, self.entries.clone());
        self.next += 1;
        if self.next < self.end {
            let radix = self.e.perms.len();
            for r in 0..self.digits.len() {
                self.digits[r] += 1;
                let carry = self.digits[r] == radix;
                if carry {
                    self.digits[r] = 0;
                }
                self.e.write_subset(r, self.digits[r], &mut self.entries);
                if !carry {
                    break;
                }
            }
        }
        Some((index, t))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Transitive,
    T1(FigureVariant),
    T2(FigureVariant),
    T3,
    Random(u64),
    Enumerate(u64),
}

/// A named single-instance generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub k: usize,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Hypertournament> {
        let (n, k) = (self.n, self.k);
        match self.kind {
            GeneratorKind::Transitive => transitive(n, k),
            GeneratorKind::T1(v) => t1(n, k, v),
            GeneratorKind::T2(v) => t2(n, k, v),
            GeneratorKind::T3 => t3(n, k),
            GeneratorKind::Random(seed) => random_hypertournament(n, k, seed),
            GeneratorKind::Enumerate(index) => enumerate_all(n, k, u128::MAX)?.instance(index),
        }
    }
}
