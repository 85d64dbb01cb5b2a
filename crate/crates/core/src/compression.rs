//! Colex order, shifting, and the densest layered graphs on `t` vertices.
//!
//! Sets are bitmasks over `[n]` (element `i` in bit `i - 1`), so colex order
//! is plain numeric order of the masks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cube::{bit, mask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompressionError {
    #[error("k = {k} is out of range for n = {n}")]
    BadUniformity { n: usize, k: usize },
    #[error("rank {rank} is not below C({n}, {k})")]
    RankOutOfRange { rank: u128, n: usize, k: usize },
    #[error("{m} sets requested but only C({n}, {k}) exist")]
    TooMany { m: u128, n: usize, k: usize },
    #[error("set {0:#b} does not have the family's size or lies outside [n]")]
    BadMember(u128),
    #[error("set {0:#b} appears twice")]
    Duplicate(u128),
    #[error("shift needs 1 <= i < j <= n, got i = {i}, j = {j}")]
    BadShift { i: usize, j: usize },
}

/// Binomial coefficient, exact for `n <= 128`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        let num = (n - i) as u128;
        let den = (i + 1) as u128;
        let g = gcd(c, den);
        c = (c / g) * (num / (den / g));
    }
    c
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Position of `set` in the colex order of sets of its size.
pub fn colex_rank(set: u128) -> u128 {
    let mut rank = 0;
    let mut rest = set;
    let mut i = 1;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize + 1;
        rank += binomial(s - 1, i);
        rest &= rest - 1;
        i += 1;
    }
    rank
}

/// The `rank`-th `k`-subset of `[n]` in colex order.
pub fn colex_unrank(rank: u128, n: usize, k: usize) -> Result<u128, CompressionError> {
    if k > n || n > 128 {
        return Err(CompressionError::BadUniformity { n, k });
    }
    if rank >= binomial(n, k) {
        return Err(CompressionError::RankOutOfRange { rank, n, k });
    }
    let mut r = rank;
    let mut set = 0u128;
    let mut top = n;
    for i in (1..=k).rev() {
        let mut s = top;
        while binomial(s - 1, i) > r {
            s -= 1;
        }
        set |= bit(s as u8);
        r -= binomial(s - 1, i);
        top = s - 1;
    }
    Ok(set)
}

/// The `m` colex-least `k`-subsets of `[n]`.
pub fn first_colex(n: usize, k: usize, m: u128) -> Result<Vec<u128>, CompressionError> {
    if k > n || n > 128 {
        return Err(CompressionError::BadUniformity { n, k });
    }
    if m > binomial(n, k) {
        return Err(CompressionError::TooMany { m, n, k });
    }
    let mut out = Vec::with_capacity(m as usize);
    if m == 0 {
        return Ok(out);
    }
    let mut cur = if k == 0 { 0 } else { mask(k as u8) };
    out.push(cur);
    while (out.len() as u128) < m {
        cur = next_same_weight(cur);
        out.push(cur);
    }
    Ok(out)
}

/// Next larger integer with the same number of ones.
fn next_same_weight(x: u128) -> u128 {
    let low = x & x.wrapping_neg();
    let ripple = x + low;
    ripple | (((x ^ ripple) >> 2) >> low.trailing_zeros())
}

/// A family `A` of `k`-sets and a family `B` of `(k-1)`-sets over `[n]`,
/// viewed as the bipartite graph of inclusions `B ⊂ A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamilyPair {
    n: usize,
    k: usize,
    upper: Vec<u128>,
    lower: Vec<u128>,
}

impl SetFamilyPair {
    pub fn new(
        n: usize,
        k: usize,
        upper: Vec<u128>,
        lower: Vec<u128>,
    ) -> Result<Self, CompressionError> {
        if k == 0 || k > n || n > 128 {
            return Err(CompressionError::BadUniformity { n, k });
        }
        check_family(n, k, &upper)?;
        check_family(n, k - 1, &lower)?;
        Ok(SetFamilyPair { n, k, upper, lower })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn upper(&self) -> &[u128] {
        &self.upper
    }

    pub fn lower(&self) -> &[u128] {
        &self.lower
    }

    /// Number of pairs `(A, B)` with `B ⊂ A`.
    pub fn edge_count(&self) -> u64 {
        let lower: BTreeSet<u128> = self.lower.iter().copied().collect();
        let mut count = 0;
        for &a in &self.upper {
            let mut rest = a;
            while rest != 0 {
                let low = rest & rest.wrapping_neg();
                if lower.contains(&(a ^ low)) {
                    count += 1;
                }
                rest ^= low;
            }
        }
        count
    }

    /// Applies the shift `R_ij` to each family separately.
    pub fn shift(&self, i: usize, j: usize) -> Result<Self, CompressionError> {
        if i == 0 || i >= j || j > self.n {
            return Err(CompressionError::BadShift { i, j });
        }
        Ok(SetFamilyPair {
            n: self.n,
            k: self.k,
            upper: shift_family(&self.upper, i, j),
            lower: shift_family(&self.lower, i, j),
        })
    }

    /// Whether every shift leaves both families unchanged.
    pub fn is_left_compressed(&self) -> bool {
        self.pairs()
            .all(|(i, j)| self.shift(i, j).map(|s| s.same_sets(self)).unwrap_or(false))
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
    }

    fn same_sets(&self, other: &Self) -> bool {
        sorted(&self.upper) == sorted(&other.upper) && sorted(&self.lower) == sorted(&other.lower)
    }
}

fn sorted(v: &[u128]) -> Vec<u128> {
    let mut s = v.to_vec();
    s.sort_unstable();
    s
}

fn check_family(n: usize, size: usize, family: &[u128]) -> Result<(), CompressionError> {
    let mut seen = BTreeSet::new();
    for &s in family {
        if s & !mask(n as u8) != 0 || s.count_ones() as usize != size {
            return Err(CompressionError::BadMember(s));
        }
        if !seen.insert(s) {
            return Err(CompressionError::Duplicate(s));
        }
    }
    Ok(())
}

fn shift_family(family: &[u128], i: usize, j: usize) -> Vec<u128> {
    let (bi, bj) = (bit(i as u8), bit(j as u8));
    let members: BTreeSet<u128> = family.iter().copied().collect();
    family
        .iter()
        .map(|&x| {
            if x & bj != 0 && x & bi == 0 {
                let y = x ^ bj ^ bi;
                if !members.contains(&y) {
                    return y;
                }
            }
            x
        })
        .collect()
}

/// Shifts to a fixpoint, sweeping `(i, j)` lexicographically and starting
/// over after every change.
pub fn compress(pair: &SetFamilyPair) -> SetFamilyPair {
    let mut cur = pair.clone();
    'outer: loop {
        for (i, j) in cur.pairs() {
            let next = cur.shift(i, j).expect("valid shift pair");
            if !next.same_sets(&cur) {
                cur = next;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Sizes of two colex-initial families in layer `k` of `Q_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CompressedSpec {
    pub n: usize,
    pub k: usize,
    pub n_a: u64,
    pub n_b: u64,
}

impl CompressedSpec {
    pub fn pair(&self) -> Result<SetFamilyPair, CompressionError> {
        let upper = first_colex(self.n, self.k, self.n_a as u128)?;
        let lower = first_colex(self.n, self.k - 1, self.n_b as u128)?;
        SetFamilyPair::new(self.n, self.k, upper, lower)
    }

    /// Whether the families sit between `[a-1]` and `[a]` for some `a`.
    pub fn is_super_compressed(&self) -> bool {
        if self.n_a == 0 {
            return false;
        }
        let a = spanning_ground(self.k, self.n_a);
        let (na, nb) = (self.n_a as u128, self.n_b as u128);
        binomial(a - 1, self.k) < na
            && na <= binomial(a, self.k)
            && binomial(a - 1, self.k - 1) <= nb
            && nb <= binomial(a, self.k - 1)
    }
}

pub fn compressed_edge_count(spec: &CompressedSpec) -> Result<u64, CompressionError> {
    Ok(spec.pair()?.edge_count())
}

/// Smallest `a` with `C(a, k) >= m`.
fn spanning_ground(k: usize, m: u64) -> usize {
    let mut a = k;
    while binomial(a, k) < m as u128 {
        a += 1;
    }
    a
}

/// Maximum edge count over compressed layered graphs on `t` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EValue {
    pub t: u64,
    pub edges: u64,
    pub witness: CompressedSpec,
    /// Best value over super-compressed splits alone, if any exists.
    pub super_compressed: Option<(u64, CompressedSpec)>,
}

impl EValue {
    /// The optimum is attained by a super-compressed graph or is at most `2t`.
    pub fn dichotomy_holds(&self) -> bool {
        self.edges <= 2 * self.t || matches!(self.super_compressed, Some((e, _)) if e == self.edges)
    }
}

/// Default upper end of the layer range searched for `t`.
pub fn default_k_max(t: u64) -> usize {
    let mut log = 0;
    while (1u64 << log) < t {
        log += 1;
    }
    log + 2
}

/// The largest number of edges of a layered graph on `t` vertices, over
/// layers `k <= k_max` and all splits `t = N_A + N_B` into colex-initial
/// families.
pub fn e_exact(t: u64, k_max: usize) -> EValue {
    let mut best = EValue {
        t,
        edges: 0,
        witness: CompressedSpec {
            n: 1,
            k: 1,
            n_a: t.min(1),
            n_b: t.saturating_sub(1).min(1),
        },
        super_compressed: None,
    };
    for k in 1..=k_max.max(1) {
        let n = 128.min(k + t as usize + 1);
        let uppers = first_colex(n, k, binomial(n, k).min(t as u128)).expect("k <= n");
        let lowers = first_colex(n, k - 1, binomial(n, k - 1).min(t as u128)).expect("k <= n");
        // Colex ranks of the (k-1)-subsets of each upper set.
        let sub_ranks: Vec<Vec<u128>> = uppers
            .iter()
            .map(|&a| {
                let mut r = Vec::with_capacity(k);
                let mut rest = a;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    r.push(colex_rank(a ^ low));
                    rest ^= low;
                }
                r
            })
            .collect();
        for n_a in 0..=t.min(uppers.len() as u64) {
            let n_b = t - n_a;
            if n_b > lowers.len() as u64 {
                continue;
            }
            let edges: u64 = sub_ranks[..n_a as usize]
                .iter()
                .map(|r| r.iter().filter(|&&x| x < n_b as u128).count() as u64)
                .sum();
            let n = ground_size(&uppers[..n_a as usize], &lowers[..n_b as usize], k);
            let spec = CompressedSpec { n, k, n_a, n_b };
            if edges > best.edges {
                best.edges = edges;
                best.witness = spec;
            }
            if spec.is_super_compressed() && best.super_compressed.is_none_or(|(e, _)| edges > e) {
                best.super_compressed = Some((edges, spec));
            }
        }
    }
    best
}

fn ground_size(upper: &[u128], lower: &[u128], k: usize) -> usize {
    let union = upper.iter().chain(lower).fold(0u128, |acc, &s| acc | s);
    (128 - union.leading_zeros() as usize).max(k)
}
