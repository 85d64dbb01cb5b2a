//! Small extremal numbers in the hypercube.
//!
//! A forbidden pattern is turned into the list of its copies in `Q_n`, each
//! an edge bitmask. A subgraph is pattern-free when it contains no copy, so
//! `ex` is the edge count minus a minimum hitting set of the copies.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cube::{hypercube_graph, CubeError, CubeGraph, StarEdge, Vertex};
use crate::graph::cycles_of_length;
use crate::search::{Budget, Meter};

/// Largest dimension handled by the exact search (edges fit in a `u128`).
pub const MAX_EXACT_DIM: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TuranError {
    #[error("dimension {0} is above the supported maximum of 5")]
    TooLarge(usize),
    #[error("cycle length {0} must be even and at least 4")]
    BadCycle(usize),
    #[error("edge {0} of an explicit pattern is not an edge of the cube")]
    ForeignEdge(StarEdge),
    #[error("the subgraph contains a copy of the 6-cycle minus an edge")]
    ContainsC6Minus,
    #[error(transparent)]
    Cube(#[from] CubeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenPattern {
    Cycle(usize),
    /// Five edges of a 6-cycle of the cube.
    C6Minus,
    /// An explicit list of copies, each a set of cube edges.
    Explicit(Vec<Vec<StarEdge>>),
}

impl ForbiddenPattern {
    /// Whether the copy list is closed under cube automorphisms.
    fn symmetric(&self) -> bool {
        !matches!(self, ForbiddenPattern::Explicit(_))
    }
}

/// The 16 six-cycles of `Q_3` as vertex bitmask sequences.
fn q3_six_cycles() -> Vec<Vec<u8>> {
    let q3 = hypercube_graph(3).expect("Q_3");
    cycles_of_length(q3.graph(), 6)
        .into_iter()
        .map(|c| c.into_iter().map(|v| q3.point(v).bits() as u8).collect())
        .collect()
}

/// Every 6-cycle of `Q_n` as a list of its six edges. Each lies in the
/// subcube spanned by its three directions.
pub fn six_cycles(n: usize) -> Result<Vec<[StarEdge; 6]>, CubeError> {
    Vertex::empty(n)?;
    let local = q3_six_cycles();
    let mut out = Vec::new();
    for d1 in 1..=n {
        for d2 in d1 + 1..=n {
            for d3 in d2 + 1..=n {
                let dirs = [d1, d2, d3];
                let free: Vec<usize> = (1..=n).filter(|d| !dirs.contains(d)).collect();
                for base in 0u64..1 << free.len() {
                    let base_set = free
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| base >> i & 1 == 1)
                        .map(|(_, &d)| d);
                    let base_v = Vertex::from_positions(n, base_set)?;
                    let lift = |bits: u8| -> Result<Vertex, CubeError> {
                        let mut v = base_v;
                        for (i, &d) in dirs.iter().enumerate() {
                            if bits >> i & 1 == 1 {
                                v = v.toggled(d)?;
                            }
                        }
                        Ok(v)
                    };
                    for cyc in &local {
                        let mut edges = Vec::with_capacity(6);
                        for i in 0..6 {
                            edges
                                .push(StarEdge::between(&lift(cyc[i])?, &lift(cyc[(i + 1) % 6])?)?);
                        }
                        out.push(edges.try_into().expect("six edges"));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Copies of `pattern` in `Q_n` as edge bitmasks over the edge ids of
/// [`hypercube_graph`], without duplicates.
pub fn pattern_instances(n: usize, pattern: &ForbiddenPattern) -> Result<Vec<u128>, TuranError> {
    if n > MAX_EXACT_DIM {
        return Err(TuranError::TooLarge(n));
    }
    let q = hypercube_graph(n)?;
    let index = |e: &StarEdge| q.edge_index(e).ok_or(TuranError::ForeignEdge(*e));
    let mut out: Vec<u128> = match pattern {
        ForbiddenPattern::Cycle(len) => {
            if *len < 4 || len % 2 == 1 {
                return Err(TuranError::BadCycle(*len));
            }
            cycles_of_length(q.graph(), *len)
                .iter()
                .map(|c| {
                    let ids = q.graph().cycle_edges(c).expect("enumerated cycle");
                    ids.iter().fold(0u128, |m, &e| m | 1 << e)
                })
                .collect()
        }
        ForbiddenPattern::C6Minus => {
            let mut v = Vec::new();
            for cyc in six_cycles(n)? {
                let ids = cyc.iter().map(index).collect::<Result<Vec<_>, _>>()?;
                let full = ids.iter().fold(0u128, |m, &e| m | 1 << e);
                for &e in &ids {
                    v.push(full & !(1 << e));
                }
            }
            v
        }
        ForbiddenPattern::Explicit(copies) => copies
            .iter()
            .map(|c| {
                c.iter()
                    .try_fold(0u128, |m, e| Ok::<_, TuranError>(m | 1 << index(e)?))
            })
            .collect::<Result<_, _>>()?,
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Whether the edge set `kept` (ids of [`hypercube_graph`]) avoids every copy.
pub fn is_pattern_free(kept: u128, instances: &[u128]) -> bool {
    instances.iter().all(|&i| i & !kept != 0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExValue {
    Exact(usize),
    /// The search ran out of budget; the true value lies in `lower..=upper`.
    Bounded {
        lower: usize,
        upper: usize,
    },
}

#[derive(Clone, Debug)]
pub struct ExResult {
    pub value: ExValue,
    /// A pattern-free subgraph with `lower` (or the exact number of) edges.
    pub witness: CubeGraph,
    pub nodes: u64,
}

/// Exact `ex(Q_n, pattern)` by branch and bound over minimum hitting sets.
pub fn ex_exact(
    n: usize,
    pattern: &ForbiddenPattern,
    budget: Budget,
) -> Result<ExResult, TuranError> {
    let instances = pattern_instances(n, pattern)?;
    let q = hypercube_graph(n)?;
    let m = q.graph().size();
    let mut search = HittingSet::new(instances, m, budget);
    let forced = if pattern.symmetric() && !search.instances.is_empty() {
        1u128
    } else {
        0
    };
    let root_lb = search
        .packing_bound(forced, 0)
        .max(usize::from(forced != 0));
    search.run(forced, 0);
    let removed = search.best_set;
    let kept: Vec<usize> = (0..m).filter(|&e| removed >> e & 1 == 0).collect();
    let witness = q.edge_subgraph(&kept);
    let value = if search.meter.exhausted() {
        ExValue::Bounded {
            lower: m - search.best,
            upper: m - root_lb.min(search.best),
        }
    } else {
        ExValue::Exact(m - search.best)
    };
    Ok(ExResult {
        value,
        witness,
        nodes: search.nodes,
    })
}

struct HittingSet {
    instances: Vec<u128>,
    best: usize,
    best_set: u128,
    meter: Meter,
    nodes: u64,
}

impl HittingSet {
    fn new(instances: Vec<u128>, m: usize, budget: Budget) -> Self {
        // Greedy start: repeatedly take the edge in most unhit copies.
        let mut set = 0u128;
        loop {
            let unhit: Vec<u128> = instances
                .iter()
                .copied()
                .filter(|&i| i & set == 0)
                .collect();
            if unhit.is_empty() {
                break;
            }
            let e = (0..m)
                .max_by_key(|&e| {
                    (
                        unhit.iter().filter(|&&i| i >> e & 1 == 1).count(),
                        core::cmp::Reverse(e),
                    )
                })
                .unwrap();
            set |= 1 << e;
        }
        HittingSet {
            instances,
            best: set.count_ones() as usize,
            best_set: set,
            meter: Meter::new(budget),
            nodes: 0,
        }
    }

    /// Size of a greedy family of unhit copies that are pairwise disjoint on
    /// the edges still allowed to be removed.
    fn packing_bound(&self, removed: u128, kept: u128) -> usize {
        let mut used = 0u128;
        let mut count = 0;
        for &i in &self.instances {
            if i & removed != 0 {
                continue;
            }
            let avail = i & !kept;
            if avail & used == 0 {
                used |= avail;
                count += 1;
            }
        }
        count
    }

    fn run(&mut self, removed: u128, kept: u128) {
        if !self.meter.tick() {
            return;
        }
        self.nodes += 1;
        let size = removed.count_ones() as usize;
        let mut pick: Option<u128> = None;
        for &i in &self.instances {
            if i & removed != 0 {
                continue;
            }
            let avail = i & !kept;
            if avail == 0 {
                return;
            }
            if pick.is_none_or(|p| avail.count_ones() < p.count_ones()) {
                pick = Some(avail);
            }
        }
        let Some(mut choices) = pick else {
            if size < self.best {
                self.best = size;
                self.best_set = removed;
            }
            return;
        };
        if size + self.packing_bound(removed, kept).max(1) >= self.best {
            return;
        }
        let mut kept = kept;
        while choices != 0 {
            let e = choices & choices.wrapping_neg();
            choices ^= e;
            self.run(removed | e, kept);
            if self.meter.exhausted() {
                return;
            }
            kept |= e;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// All edges of the edge layers `k` of the given parity.
pub fn alternating_layers(n: usize, parity: Parity) -> Result<CubeGraph, CubeError> {
    let want = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let mut points = Vec::new();
    for k in 1..=n {
        if k % 2 != want {
            continue;
        }
        for layer in [k - 1, k] {
            for bits in 0u128..1 << n {
                if bits.count_ones() as usize == layer {
                    points.push(Vertex::from_bits(n, bits)?);
                }
            }
        }
    }
    points.sort();
    points.dedup();
    let all = CubeGraph::induced(n, points)?;
    let keep: Vec<usize> = all
        .star_edges()
        .enumerate()
        .filter(|(_, e)| e.edge_layer() as usize % 2 == want)
        .map(|(i, _)| i)
        .collect();
    Ok(all.edge_subgraph(&keep))
}

/// Whether `g` contains five edges of some 6-cycle of its cube.
pub fn contains_c6_minus(g: &CubeGraph) -> Result<bool, CubeError> {
    for cyc in six_cycles(g.dim())? {
        if cyc.iter().filter(|e| g.edge_index(e).is_some()).count() >= 5 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The largest prefix-color class of a subgraph with no 6-cycle minus an
/// edge; it keeps at least a third of the edges.
pub fn c6minus_to_c10(g: &CubeGraph) -> Result<CubeGraph, TuranError> {
    if contains_c6_minus(g)? {
        return Err(TuranError::ContainsC6Minus);
    }
    let mut classes: [Vec<usize>; 3] = Default::default();
    for (i, e) in g.star_edges().enumerate() {
        classes[e.prefix_color().value() as usize].push(i);
    }
    let best = (0..3)
        .max_by_key(|&c| (classes[c].len(), core::cmp::Reverse(c)))
        .unwrap();
    Ok(g.edge_subgraph(&classes[best]))
}

/// Removes edges until no copy of the 6-cycle minus an edge remains,
/// scanning copies in order and dropping the last edge of each one found.
pub fn greedy_c6minus_free(g: &CubeGraph) -> Result<CubeGraph, CubeError> {
    let mut keep = vec![true; g.graph().size()];
    for cyc in six_cycles(g.dim())? {
        let ids: Vec<usize> = cyc
            .iter()
            .filter_map(|e| g.edge_index(e))
            .filter(|&i| keep[i])
            .collect();
        if ids.len() >= 5 {
            for &i in &ids[4..] {
                keep[i] = false;
            }
        }
    }
    let kept: Vec<usize> = (0..keep.len()).filter(|&i| keep[i]).collect();
    Ok(g.edge_subgraph(&kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_counts() {
        assert_eq!(six_cycles(3).unwrap().len(), 16);
        assert_eq!(six_cycles(4).unwrap().len(), 4 * 2 * 16);
        assert_eq!(
            pattern_instances(3, &ForbiddenPattern::C6Minus)
                .unwrap()
                .len(),
            96
        );
        assert_eq!(
            pattern_instances(3, &ForbiddenPattern::Cycle(4))
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            pattern_instances(4, &ForbiddenPattern::Cycle(4))
                .unwrap()
                .len(),
            24
        );
        assert!(pattern_instances(6, &ForbiddenPattern::Cycle(4)).is_err());
        assert!(pattern_instances(3, &ForbiddenPattern::Cycle(5)).is_err());
    }

    #[test]
    fn monotone_path_is_not_a_copy() {
        let path: Vec<StarEdge> = ["*0000", "1*000", "11*00", "111*0", "1111*"]
            .iter()
            .map(|s| StarEdge::parse(s).unwrap())
            .collect();
        let q = hypercube_graph(5).unwrap();
        let mask = path
            .iter()
            .fold(0u128, |m, e| m | 1 << q.edge_index(e).unwrap());
        let copies = pattern_instances(5, &ForbiddenPattern::C6Minus).unwrap();
        assert!(!copies.contains(&mask));
        assert!(copies.iter().all(|c| c.count_ones() == 5));
    }

    #[test]
    fn small_values() {
        let r = ex_exact(2, &ForbiddenPattern::Cycle(4), Budget::UNLIMITED).unwrap();
        assert_eq!(r.value, ExValue::Exact(3));
        let r = ex_exact(3, &ForbiddenPattern::C6Minus, Budget::UNLIMITED).unwrap();
        assert_eq!(r.value, ExValue::Exact(8));
        assert!(!contains_c6_minus(&r.witness).unwrap());
        let r = ex_exact(3, &ForbiddenPattern::Cycle(6), Budget::UNLIMITED).unwrap();
        assert!(matches!(r.value, ExValue::Exact(v) if v <= 9));
    }

    #[test]
    fn budget_gives_bounds() {
        let r = ex_exact(4, &ForbiddenPattern::Cycle(6), Budget::nodes(3)).unwrap();
        match r.value {
            ExValue::Bounded { lower, upper } => assert!(lower <= upper && upper <= 32),
            other => panic!("expected bounds, got {other:?}"),
        }
    }

    #[test]
    fn alternating() {
        let g = alternating_layers(3, Parity::Even).unwrap();
        assert_eq!(g.graph().size(), 6);
        let even = alternating_layers(4, Parity::Even).unwrap().graph().size();
        let odd = alternating_layers(4, Parity::Odd).unwrap().graph().size();
        assert_eq!(even + odd, 32);
        assert!(even.max(odd) >= 16);
        for n in 2..=4 {
            for p in [Parity::Even, Parity::Odd] {
                let g = alternating_layers(n, p).unwrap();
                assert!(cycles_of_length(g.graph(), 4).is_empty());
            }
        }
    }

    #[test]
    fn reduction_on_two_squares() {
        let pts: Vec<Vertex> = (0u128..8)
            .map(|b| Vertex::from_bits(3, b).unwrap())
            .collect();
        let q3 = CubeGraph::induced(3, pts).unwrap();
        let squares: Vec<usize> = q3
            .star_edges()
            .enumerate()
            .filter(|(_, e)| e.direction() != 3)
            .map(|(i, _)| i)
            .collect();
        let g = q3.edge_subgraph(&squares);
        assert_eq!(g.graph().size(), 8);
        let h = c6minus_to_c10(&g).unwrap();
        assert!(h.graph().size() >= 3);
        assert!(c6minus_to_c10(&q3).is_err());
    }
}
