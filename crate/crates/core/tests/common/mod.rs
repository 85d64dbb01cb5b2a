//! Reference data shared by the integration tests.

#![allow(dead_code)]

/// Indicator rows of the odd-family tables, one row per path vertex.
pub const ODD_K1: &[&[u8]] = &[&[0, 1, 0], &[1, 1, 0], &[1, 0, 0], &[1, 0, 1], &[0, 0, 1]];

pub const ODD_K2: &[&[u8]] = &[
    &[0, 1, 1, 0, 0],
    &[1, 1, 1, 0, 0],
    &[1, 0, 1, 0, 0],
    &[1, 0, 1, 1, 0],
    &[1, 0, 0, 1, 0],
    &[1, 0, 0, 1, 1],
    &[0, 0, 0, 1, 1],
];

pub const ODD_K3: &[&[u8]] = &[
    &[0, 1, 1, 1, 0, 0, 0],
    &[1, 1, 1, 1, 0, 0, 0],
    &[1, 0, 1, 1, 0, 0, 0],
    &[1, 0, 1, 1, 1, 0, 0],
    &[1, 0, 0, 1, 1, 0, 0],
    &[1, 0, 0, 1, 1, 1, 0],
    &[1, 0, 0, 0, 1, 1, 0],
    &[1, 0, 0, 0, 1, 1, 1],
    &[0, 0, 0, 0, 1, 1, 1],
];

/// Indicator rows of the even-family tables.
pub const EVEN_K3: &[&[u8]] = &[
    &[1, 0, 1, 1, 0],
    &[1, 0, 1, 0, 0],
    &[1, 0, 1, 0, 1],
    &[0, 0, 1, 0, 1],
    &[0, 1, 1, 0, 1],
    &[0, 1, 0, 0, 1],
    &[0, 1, 0, 1, 1],
    &[0, 1, 0, 1, 0],
];

pub const EVEN_K4: &[&[u8]] = &[
    &[1, 0, 1, 1, 0, 0],
    &[1, 0, 1, 0, 0, 0],
    &[1, 0, 1, 0, 1, 0],
    &[0, 0, 1, 0, 1, 0],
    &[0, 1, 1, 0, 1, 0],
    &[0, 1, 0, 0, 1, 0],
    &[0, 1, 0, 0, 1, 1],
    &[0, 1, 0, 0, 0, 1],
    &[0, 1, 0, 1, 0, 1],
    &[0, 1, 0, 1, 0, 0],
];

pub const EVEN_K5: &[&[u8]] = &[
    &[1, 0, 1, 1, 0, 0, 0],
    &[1, 0, 1, 0, 0, 0, 0],
    &[1, 0, 1, 0, 1, 0, 0],
    &[0, 0, 1, 0, 1, 0, 0],
    &[0, 1, 1, 0, 1, 0, 0],
    &[0, 1, 0, 0, 1, 0, 0],
    &[0, 1, 0, 0, 1, 1, 0],
    &[0, 1, 0, 0, 0, 1, 0],
    &[0, 1, 0, 0, 0, 1, 1],
    &[0, 1, 0, 0, 0, 0, 1],
    &[0, 1, 0, 1, 0, 0, 1],
    &[0, 1, 0, 1, 0, 0, 0],
];

/// Densest vertex subsets of size `t` inside an edge layer of `Q_n`,
/// found by enumerating every subset of the two vertex layers.
pub fn brute_force_e(max_n: u32, max_t: usize) -> Vec<u64> {
    let mut best = vec![0u64; max_t + 1];
    for n in 1..=max_n {
        for k in 1..=n {
            let upper: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() == k).collect();
            let lower: Vec<u32> = (0u32..1 << n).filter(|s| s.count_ones() == k - 1).collect();
            let nu = upper.len();
            let adj: Vec<u32> = upper
                .iter()
                .map(|&a| {
                    lower
                        .iter()
                        .enumerate()
                        .filter(|&(_, &b)| b & a == b)
                        .fold(0u32, |m, (j, _)| m | 1 << j)
                })
                .collect();
            let total = nu + lower.len();
            for subset in 0u64..1 << total {
                let t = subset.count_ones() as usize;
                if t > max_t {
                    continue;
                }
                let low = (subset >> nu) as u32;
                let edges: u64 = (0..nu)
                    .filter(|&i| subset >> i & 1 == 1)
                    .map(|i| (adj[i] & low).count_ones() as u64)
                    .sum();
                best[t] = best[t].max(edges);
            }
        }
    }
    best
}
