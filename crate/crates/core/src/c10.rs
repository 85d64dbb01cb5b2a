//! A coloring of `E(Q_n)` with no monochromatic 10-cycle, built from prefix
//! colorings under a family of permutations, and the classification of
//! 10-cycles that lie in one edge layer.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cube::{hypercube_graph, CubeError, CubeGraph, Permutation, StarEdge, Vertex};
use crate::graph::{cycles_of_length, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum C10Error {
    #[error("a permutation cover needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("permutation {index} has length {len}, expected {n}")]
    WrongLength { index: usize, len: usize, n: usize },
    #[error("no permutation puts {first} before {second} and {third}")]
    Uncovered {
        first: usize,
        second: usize,
        third: usize,
    },
    #[error("a 10-cycle needs 10 distinct vertices, each adjacent to the next")]
    NotACycle,
    #[error("exhaustive minimum cover search supports n <= 5, got {0}")]
    SearchTooLarge(usize),
    #[error(transparent)]
    Cube(#[from] CubeError),
}

/// Permutations of `[n]` such that for every ordered triple of distinct
/// `a, b, c` one of them puts `a` before both `b` and `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationCover {
    n: usize,
    perms: Vec<Permutation>,
}

/// Constraint `(a, {b, c})` indexed densely.
fn constraints(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in b + 1..=n {
                if a != b && a != c {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn satisfies(p: &Permutation, (a, b, c): (usize, usize, usize)) -> bool {
    let pa = p.position_of(a);
    pa < p.position_of(b) && pa < p.position_of(c)
}

impl PermutationCover {
    pub fn new(n: usize, perms: Vec<Permutation>) -> Result<Self, C10Error> {
        if n < 3 {
            return Err(C10Error::TooSmall(n));
        }
        for (index, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(C10Error::WrongLength {
                    index,
                    len: p.len(),
                    n,
                });
            }
        }
        let cover = PermutationCover { n, perms };
        cover.verify()?;
        Ok(cover)
    }

    /// Checks every constraint; reports the first uncovered triple.
    pub fn verify(&self) -> Result<(), C10Error> {
        for con in constraints(self.n) {
            if !self.perms.iter().any(|p| satisfies(p, con)) {
                let (first, second, third) = con;
                return Err(C10Error::Uncovered {
                    first,
                    second,
                    third,
                });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }
}

/// Candidates drawn per greedy round.
pub const CANDIDATES_PER_ROUND: usize = 64;

/// Greedy cover: each round adds the candidate covering the most open
/// constraints. Round one also offers the identity and the reversal.
pub fn build_cover(n: usize, seed: u64) -> Result<PermutationCover, C10Error> {
    if n < 3 {
        return Err(C10Error::TooSmall(n));
    }
    let cons = constraints(n);
    let mut open = vec![true; cons.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perms = Vec::new();
    let mut round = 0;
    while open.iter().any(|&o| o) {
        let mut pool = Vec::with_capacity(CANDIDATES_PER_ROUND + 2);
        if round == 0 {
            pool.push(Permutation::identity(n));
            pool.push(Permutation::reversal(n));
        }
        for _ in 0..CANDIDATES_PER_ROUND {
            let mut order: Vec<u8> = (1..=n as u8).collect();
            order.shuffle(&mut rng);
            pool.push(Permutation::new(order)?);
        }
        let gain = |p: &Permutation| {
            (0..cons.len())
                .filter(|&i| open[i] && satisfies(p, cons[i]))
                .count()
        };
        let mut best = 0;
        let mut best_gain = gain(&pool[0]);
        for (i, p) in pool.iter().enumerate().skip(1) {
            let g = gain(p);
            if g > best_gain {
                best = i;
                best_gain = g;
            }
        }
        if best_gain == 0 {
            round += 1;
            continue;
        }
        let chosen = pool.swap_remove(best);
        for i in 0..cons.len() {
            if open[i] && satisfies(&chosen, cons[i]) {
                open[i] = false;
            }
        }
        perms.push(chosen);
        round += 1;
    }
    PermutationCover::new(n, perms)
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    extend_orders(&mut Vec::with_capacity(n), n, &mut out);
    out
}

fn extend_orders(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        out.push(Permutation::new(prefix.clone()).expect("permutation"));
        return;
    }
    for x in 1..=n as u8 {
        if !prefix.contains(&x) {
            prefix.push(x);
            extend_orders(prefix, n, out);
            prefix.pop();
        }
    }
}

/// Smallest cover size, by exhaustive search over sets of permutations.
pub fn min_cover_size(n: usize) -> Result<usize, C10Error> {
    if n < 3 {
        return Err(C10Error::TooSmall(n));
    }
    if n > 5 {
        return Err(C10Error::SearchTooLarge(n));
    }
    let cons = constraints(n);
    let full: u64 = (1u64 << cons.len()) - 1;
    let mut masks: Vec<u64> = all_permutations(n)
        .iter()
        .map(|p| {
            (0..cons.len())
                .filter(|&i| satisfies(p, cons[i]))
                .fold(0u64, |m, i| m | 1 << i)
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    let mut size = 1;
    loop {
        if union_reaches(&masks, 0, size, 0, full) {
            return Ok(size);
        }
        size += 1;
    }
}

fn union_reaches(masks: &[u64], from: usize, left: usize, acc: u64, full: u64) -> bool {
    if acc == full {
        return true;
    }
    if left == 0 {
        return false;
    }
    (from..masks.len()).any(|i| union_reaches(masks, i + 1, left - 1, acc | masks[i], full))
}

/// The color `g(e)`: layer parity and one prefix color per permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinedColor {
    /// Parity of the lower endpoint's layer.
    pub g0: u8,
    pub prefix: Vec<u8>,
}

impl CombinedColor {
    pub fn of(edge: &StarEdge, cover: &PermutationCover) -> Result<Self, CubeError> {
        let prefix = cover
            .permutations()
            .iter()
            .map(|p| edge.prefix_color_permuted(p).map(|c| c.value()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CombinedColor {
            g0: (edge.lower().layer() % 2) as u8,
            prefix,
        })
    }

    /// `g0 * 3^|Π| + Σ g_{π_i} * 3^i`, a dense code below `2 * 3^|Π|`.
    pub fn code(&self) -> u64 {
        let mut code = self.g0 as u64;
        for &c in self.prefix.iter().rev() {
            code = code * 3 + c as u64;
        }
        code
    }
}

/// Number of colors available to `g`.
pub fn palette_size(cover: &PermutationCover) -> u64 {
    2 * 3u64.pow(cover.len() as u32)
}

/// `g` on every edge of [`hypercube_graph`]`(n)`, as color codes.
pub fn combined_coloring(cover: &PermutationCover) -> Result<Vec<u64>, CubeError> {
    let q = hypercube_graph(cover.n())?;
    q.star_edges()
        .map(|e| CombinedColor::of(&e, cover).map(|c| c.code()))
        .collect()
}

/// One color class of `Q_n`.
#[derive(Clone, Debug)]
pub struct ColorClass {
    pub code: u64,
    pub graph: CubeGraph,
}

/// Edge counts per color code that occurs, in increasing code order.
pub fn class_sizes(codes: &[u64]) -> Vec<(u64, usize)> {
    let mut sorted = codes.to_vec();
    sorted.sort_unstable();
    let mut out: Vec<(u64, usize)> = Vec::new();
    for c in sorted {
        match out.last_mut() {
            Some((code, count)) if *code == c => *count += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

/// The largest class (smallest code on ties).
pub fn largest_class(n: usize, codes: &[u64]) -> Result<ColorClass, CubeError> {
    let q = hypercube_graph(n)?;
    let (code, _) = class_sizes(codes)
        .into_iter()
        .max_by_key(|&(code, count)| (count, core::cmp::Reverse(code)))
        .unwrap_or((0, 0));
    let edges: Vec<usize> = (0..codes.len()).filter(|&e| codes[e] == code).collect();
    Ok(ColorClass {
        code,
        graph: q.edge_subgraph(&edges),
    })
}

/// Every class as a subgraph of `Q_n`.
pub fn all_classes(n: usize, codes: &[u64]) -> Result<Vec<ColorClass>, CubeError> {
    let q = hypercube_graph(n)?;
    Ok(class_sizes(codes)
        .into_iter()
        .map(|(code, _)| {
            let edges: Vec<usize> = (0..codes.len()).filter(|&e| codes[e] == code).collect();
            ColorClass {
                code,
                graph: q.edge_subgraph(&edges),
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TenCycleKind {
    H1,
    H2,
    H3,
    H4,
    H5,
    /// In one edge layer but not five directions used twice each, or no
    /// template matches.
    Unmatched,
    NotSingleLayer,
}

impl TenCycleKind {
    pub const TEMPLATES: [TenCycleKind; 5] = [
        TenCycleKind::H1,
        TenCycleKind::H2,
        TenCycleKind::H3,
        TenCycleKind::H4,
        TenCycleKind::H5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TenCycleKind::H1 => "H1",
            TenCycleKind::H2 => "H2",
            TenCycleKind::H3 => "H3",
            TenCycleKind::H4 => "H4",
            TenCycleKind::H5 => "H5",
            TenCycleKind::Unmatched => "unmatched",
            TenCycleKind::NotSingleLayer => "not single layer",
        }
    }

    /// Hyperedges over `a = bit 0, ..., e = bit 4`.
    pub fn template(self) -> Option<[u8; 5]> {
        const A: u8 = 1;
        const B: u8 = 2;
        const C: u8 = 4;
        const D: u8 = 8;
        const E: u8 = 16;
        Some(match self {
            TenCycleKind::H1 => [A | B, B | C, C | D, D | E, E | A],
            TenCycleKind::H2 => [A | B | C, B | C | D, C | D | E, D | E | A, E | A | B],
            TenCycleKind::H3 => [C | D | E, D | E | A, A | E | B, E | B | C, B | C | D],
            TenCycleKind::H4 => [A | B | C, B | C | D, C | D | E, B | D | E, B | D | A],
            TenCycleKind::H5 => [31 ^ E, 31 ^ A, 31 ^ B, 31 ^ C, 31 ^ D],
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TenCycleClass {
    pub kind: TenCycleKind,
    /// Direction of each edge in walking order.
    pub directions: Vec<usize>,
    /// Coordinate playing the role of `a, b, c, d, e`.
    pub relabeling: Option<[usize; 5]>,
}

/// Edges of a closed walk given by its vertices.
pub fn cycle_star_edges(cycle: &[Vertex]) -> Result<Vec<StarEdge>, C10Error> {
    let n = cycle.len();
    let mut sorted = cycle.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != n || n < 3 {
        return Err(C10Error::NotACycle);
    }
    (0..n)
        .map(|i| StarEdge::between(&cycle[i], &cycle[(i + 1) % n]).map_err(|_| C10Error::NotACycle))
        .collect()
}

/// Vertex sequence of a cycle given as a list of its edges in walking order.
pub fn cycle_from_star_edges(edges: &[StarEdge]) -> Result<Vec<Vertex>, C10Error> {
    let m = edges.len();
    if m < 3 {
        return Err(C10Error::NotACycle);
    }
    let ends = |e: &StarEdge| [e.lower(), e.upper()];
    let first = ends(&edges[0]);
    let second = ends(&edges[1]);
    let start = if second.contains(&first[1]) {
        first[0]
    } else {
        first[1]
    };
    let mut out = Vec::with_capacity(m);
    let mut cur = start;
    for e in edges {
        let [lo, hi] = ends(e);
        out.push(cur);
        cur = if cur == lo {
            hi
        } else if cur == hi {
            lo
        } else {
            return Err(C10Error::NotACycle);
        };
    }
    if cur != start {
        return Err(C10Error::NotACycle);
    }
    cycle_star_edges(&out)?;
    Ok(out)
}

/// Classifies a 10-cycle of `Q_n` given by its vertices in order.
pub fn classify_10cycle(cycle: &[Vertex]) -> Result<TenCycleClass, C10Error> {
    if cycle.len() != 10 {
        return Err(C10Error::NotACycle);
    }
    let edges = cycle_star_edges(cycle)?;
    let directions: Vec<usize> = edges.iter().map(StarEdge::direction).collect();
    let low = cycle.iter().map(Vertex::layer).min().unwrap();
    let high = cycle.iter().map(Vertex::layer).max().unwrap();
    if high > low + 1 {
        return Ok(TenCycleClass {
            kind: TenCycleKind::NotSingleLayer,
            directions,
            relabeling: None,
        });
    }
    let mut dirs = directions.clone();
    dirs.sort_unstable();
    let twice = dirs.len() == 10
        && dirs.chunks(2).all(|w| w[0] == w[1])
        && dirs.windows(3).all(|w| w[0] != w[2]);
    if !twice {
        return Ok(TenCycleClass {
            kind: TenCycleKind::Unmatched,
            directions,
            relabeling: None,
        });
    }
    let stars: Vec<usize> = dirs.iter().step_by(2).copied().collect();
    let mut hyper: Vec<u8> = Vec::with_capacity(5);
    for e in &edges {
        let up = e.upper();
        let h = stars
            .iter()
            .enumerate()
            .filter(|&(_, &p)| up.contains(p))
            .fold(0u8, |m, (i, _)| m | 1 << i);
        if !hyper.contains(&h) {
            hyper.push(h);
        }
    }
    hyper.sort_unstable();
    for kind in TenCycleKind::TEMPLATES {
        let template = kind.template().unwrap();
        for sigma in all_permutations(5) {
            // Letter i of the template is coordinate stars[sigma(i) - 1].
            let mut image: Vec<u8> = template
                .iter()
                .map(|&t| {
                    (0..5)
                        .filter(|&i| t >> i & 1 == 1)
                        .fold(0u8, |m, i| m | 1 << (sigma.at(i + 1) - 1))
                })
                .collect();
            image.sort_unstable();
            if image == hyper {
                let mut relabel = [0usize; 5];
                for (i, r) in relabel.iter_mut().enumerate() {
                    *r = stars[sigma.at(i + 1) - 1];
                }
                return Ok(TenCycleClass {
                    kind,
                    directions,
                    relabeling: Some(relabel),
                });
            }
        }
    }
    Ok(TenCycleClass {
        kind: TenCycleKind::Unmatched,
        directions,
        relabeling: None,
    })
}

/// `+1` when `x` comes before `y` in `π`, `-1` otherwise.
pub fn indicator(pi: &Permutation, x: usize, y: usize) -> i8 {
    if pi.position_of(x) < pi.position_of(y) {
        1
    } else {
        -1
    }
}

/// Whether every edge of the cycle has the same prefix color under `π`.
pub fn constant_under(edges: &[StarEdge], pi: &Permutation) -> Result<bool, CubeError> {
    let first = edges[0].prefix_color_permuted(pi)?;
    for e in &edges[1..] {
        if e.prefix_color_permuted(pi)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the exhaustive check of the construction.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct C10Report {
    pub n: usize,
    pub cover_size: usize,
    pub palette: u64,
    pub colors_used: usize,
    pub largest_class: usize,
    /// `n 2^(n-1) / (2 * 3^|Π|)`, rounded up.
    pub pigeonhole_bound: u64,
    /// Monochromatic 10-cycles found, as vertex sequences (should be empty).
    pub monochromatic: Vec<Vec<Vertex>>,
    /// 10-cycles inside edge layers, counted by kind `H1..H5` then unmatched.
    pub single_layer: [usize; 6],
    /// Cycles of kind `H1..H3` on which some single `g_π` is constant.
    pub h1_h3_constant: usize,
    /// Cycles of kind `H4` on which some single `g_π` is constant.
    pub h4_constant_somewhere: usize,
    /// Cycles of kind `H4` where the permutation putting `c` first among
    /// `b, c, e` fails to separate them.
    pub h4_unbroken: usize,
    /// Cycles of kind `H5` on which some single `g_π` is constant.
    pub h5_constant_somewhere: usize,
}

impl C10Report {
    pub fn passed(&self) -> bool {
        self.monochromatic.is_empty()
            && self.single_layer[5] == 0
            && self.h1_h3_constant == 0
            && self.h4_unbroken == 0
            && self.largest_class as u64 >= self.pigeonhole_bound
    }
}

/// Exhaustive verification with the built-in cycle enumerator.
pub fn verify_no_mono_c10(cover: &PermutationCover) -> Result<C10Report, C10Error> {
    verify_no_mono_c10_with(cover, |g| cycles_of_length(g, 10))
}

/// Exhaustive verification with a caller-supplied 10-cycle enumerator (for
/// example a parallel one). A 10-cycle is monochromatic exactly when it
/// lies inside one color class, so classes are searched separately; the
/// edge layers are searched for classification.
pub fn verify_no_mono_c10_with<F>(
    cover: &PermutationCover,
    enumerate: F,
) -> Result<C10Report, C10Error>
where
    F: Fn(&Graph) -> Vec<Vec<usize>>,
{
    let n = cover.n();
    let codes = combined_coloring(cover)?;
    let classes = all_classes(n, &codes)?;
    let mut report = C10Report {
        n,
        cover_size: cover.len(),
        palette: palette_size(cover),
        colors_used: classes.len(),
        largest_class: classes
            .iter()
            .map(|c| c.graph.graph().size())
            .max()
            .unwrap_or(0),
        pigeonhole_bound: ((n as u64) << (n - 1)).div_ceil(palette_size(cover)),
        ..Default::default()
    };
    for class in &classes {
        for cyc in enumerate(class.graph.graph()) {
            report
                .monochromatic
                .push(cyc.iter().map(|&v| class.graph.point(v)).collect());
        }
    }
    let q = hypercube_graph(n)?;
    for k in 1..=n {
        let layer: Vec<usize> = q
            .star_edges()
            .enumerate()
            .filter(|(_, e)| e.edge_layer() as usize == k)
            .map(|(i, _)| i)
            .collect();
        let sub = q.edge_subgraph(&layer);
        for cyc in enumerate(sub.graph()) {
            let verts: Vec<Vertex> = cyc.iter().map(|&v| sub.point(v)).collect();
            let class = classify_10cycle(&verts)?;
            let edges = cycle_star_edges(&verts)?;
            let constant: Vec<bool> = cover
                .permutations()
                .iter()
                .map(|p| constant_under(&edges, p))
                .collect::<Result<_, _>>()?;
            let any_constant = constant.iter().any(|&c| c);
            match class.kind {
                TenCycleKind::H1 | TenCycleKind::H2 | TenCycleKind::H3 => {
                    report.single_layer[class.kind as usize] += 1;
                    if any_constant {
                        report.h1_h3_constant += 1;
                    }
                }
                TenCycleKind::H4 => {
                    report.single_layer[3] += 1;
                    if any_constant {
                        report.h4_constant_somewhere += 1;
                    }
                    let [_, b, c, _, e] = class.relabeling.unwrap();
                    let broken =
                        cover.permutations().iter().zip(&constant).any(|(p, &k)| {
                            indicator(p, c, b) == 1 && indicator(p, c, e) == 1 && !k
                        });
                    if !broken {
                        report.h4_unbroken += 1;
                    }
                }
                TenCycleKind::H5 => {
                    report.single_layer[4] += 1;
                    if any_constant {
                        report.h5_constant_somewhere += 1;
                    }
                }
                TenCycleKind::Unmatched | TenCycleKind::NotSingleLayer => {
                    report.single_layer[5] += 1
                }
            }
        }
    }
    Ok(report)
}

/// Edges of the `H4` example cycle over columns `a, e, c, d, b`.
pub const H4_TABLE_ROWS: [&str; 10] = [
    "10*01", "*0101", "001*1", "0011*", "0*110", "01*10", "0101*", "0*011", "*0011", "100*1",
];

/// The `H4` example cycle in `Q_9`, with coordinates ordered
/// `a, e, 1, 1, c, d, 1, 1, b` (the `1`s are fixed padding). The plain prefix
/// coloring is constant on it, since `c` sits between `e` and `b`.
pub fn h4_padded_example() -> Vec<StarEdge> {
    const SLOTS: [usize; 5] = [0, 1, 4, 5, 8];
    H4_TABLE_ROWS
        .iter()
        .map(|row| {
            let mut out = [b'1'; 9];
            for (i, ch) in row.bytes().enumerate() {
                out[SLOTS[i]] = ch;
            }
            StarEdge::parse(core::str::from_utf8(&out).expect("ascii")).expect("star edge")
        })
        .collect()
}

/// Whether the combined coloring gives every edge the same color.
pub fn monochromatic_under(
    edges: &[StarEdge],
    cover: &PermutationCover,
) -> Result<bool, CubeError> {
    let first = CombinedColor::of(&edges[0], cover)?;
    for e in &edges[1..] {
        if CombinedColor::of(e, cover)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(rows: &[&str]) -> Vec<StarEdge> {
        rows.iter().map(|s| StarEdge::parse(s).unwrap()).collect()
    }

    #[test]
    fn covers() {
        let c3 = build_cover(3, 0).unwrap();
        assert_eq!(c3.len(), 3);
        assert_eq!(min_cover_size(3).unwrap(), 3);
        for n in 3..=8 {
            build_cover(n, 7).unwrap().verify().unwrap();
        }
        let two = vec![Permutation::identity(3), Permutation::reversal(3)];
        assert_eq!(
            PermutationCover::new(3, two),
            Err(C10Error::Uncovered {
                first: 2,
                second: 1,
                third: 3
            })
        );
        assert!(build_cover(2, 0).is_err());
    }

    #[test]
    fn combined_color_example() {
        let e = StarEdge::parse("01001*01").unwrap();
        let cover = build_cover(8, 0).unwrap();
        assert_eq!(cover.permutations()[0], Permutation::identity(8));
        let g = CombinedColor::of(&e, &cover).unwrap();
        assert_eq!(g.g0, 1);
        assert_eq!(g.prefix[0], 1);
        assert!(g.code() < palette_size(&cover));
    }

    #[test]
    fn table_edge_lists_classify() {
        let h1 = edges(&[
            "1*000", "*1000", "01*00", "0*100", "001*0", "00*10", "0001*", "000*1", "*0001",
            "1000*",
        ]);
        let h2 = edges(&[
            "11*00", "*1100", "011*0", "0*110", "0011*", "00*11", "*0011", "100*1", "1*001",
            "1100*",
        ]);
        let h3 = edges(&[
            "0011*", "00*11", "*0011", "100*1", "1*001", "*1001", "01*01", "0110*", "011*0",
            "0*110",
        ]);
        let h4 = edges(&[
            "10*01", "*0101", "001*1", "0011*", "0*110", "01*10", "0101*", "0*011", "*0011",
            "100*1",
        ]);
        for (rows, kind) in [
            (h1, TenCycleKind::H1),
            (h2, TenCycleKind::H2),
            (h3, TenCycleKind::H3),
            (h4, TenCycleKind::H4),
        ] {
            let cycle = cycle_from_star_edges(&rows).unwrap();
            assert_eq!(classify_10cycle(&cycle).unwrap().kind, kind);
        }
    }

    #[test]
    fn non_layer_cycle() {
        let q = hypercube_graph(5).unwrap();
        let cyc = cycles_of_length(q.graph(), 10)
            .into_iter()
            .map(|c| c.into_iter().map(|v| q.point(v)).collect::<Vec<_>>())
            .find(|c| {
                let l: Vec<u32> = c.iter().map(Vertex::layer).collect();
                l.iter().max().unwrap() - l.iter().min().unwrap() >= 2
            })
            .unwrap();
        assert_eq!(
            classify_10cycle(&cyc).unwrap().kind,
            TenCycleKind::NotSingleLayer
        );
    }

    #[test]
    fn indicator_antisymmetry() {
        let p = Permutation::new(vec![3, 1, 2]).unwrap();
        for x in 1..=3 {
            for y in 1..=3 {
                if x != y {
                    assert_eq!(indicator(&p, x, y), -indicator(&p, y, x));
                }
            }
        }
    }

    #[test]
    fn q5_has_no_monochromatic_c10() {
        let cover = build_cover(5, 0).unwrap();
        let report = verify_no_mono_c10(&cover).unwrap();
        assert!(report.passed(), "{report:?}");
        assert!(report.single_layer[..5].iter().sum::<usize>() > 0);
    }

    #[test]
    fn h4_single_order_fails_but_g_does_not() {
        let table: Vec<StarEdge> = H4_TABLE_ROWS
            .iter()
            .map(|r| StarEdge::parse(r).unwrap())
            .collect();
        assert!(all_permutations(5)
            .iter()
            .all(|p| !constant_under(&table, p).unwrap()));
        let padded = h4_padded_example();
        let cycle = cycle_from_star_edges(&padded).unwrap();
        let class = classify_10cycle(&cycle).unwrap();
        assert_eq!(class.kind, TenCycleKind::H4);
        assert_eq!(class.relabeling, Some([1, 9, 5, 6, 2]));
        assert!(constant_under(&padded, &Permutation::identity(9)).unwrap());
        let cover = build_cover(9, 0).unwrap();
        assert!(!monochromatic_under(&padded, &cover).unwrap());
    }
}
