//! Vertices, edges and layers of the hypercube `Q_n`.
//!
//! A vertex of `Q_n` is a subset of `[n] = {1, ..., n}` stored as a fixed
//! width bit vector (position `i` lives in bit `i - 1`). Strings are written
//! with coordinate 1 leftmost, so `{1, 2, 4}` in `Q_5` prints as `11010`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::graph::Graph;

/// Largest supported dimension.
pub const MAX_DIM: u8 = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("dimension {0} exceeds the supported maximum of 128")]
    DimensionTooLarge(usize),
    #[error("position {position} is outside [1, {dim}]")]
    PositionOutOfRange { position: usize, dim: u8 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u8, right: u8 },
    #[error("bits set outside the first {0} positions")]
    StrayBits(u8),
    #[error("invalid character {found:?} at position {position}")]
    BadChar { position: usize, found: char },
    #[error("star string has no '*'")]
    NoStar,
    #[error("star string has a second '*' at position {position}")]
    ExtraStar { position: usize },
    #[error("direction {direction} is already in the lower endpoint")]
    DirectionInLower { direction: u8 },
    #[error("vertices at Hamming distance {0} do not form an edge")]
    NotAnEdge(u32),
    #[error("not a permutation of [{0}]")]
    NotAPermutation(usize),
    #[error("layer {k} is out of range for Q_{n}")]
    LayerOutOfRange { n: u8, k: u8 },
}

#[inline]
pub(crate) const fn mask(dim: u8) -> u128 {
    if dim >= 128 {
        u128::MAX
    } else {
        (1u128 << dim) - 1
    }
}

#[inline]
pub(crate) const fn bit(position: u8) -> u128 {
    1u128 << (position - 1)
}

fn check_dim(dim: usize) -> Result<u8, CubeError> {
    if dim > MAX_DIM as usize {
        Err(CubeError::DimensionTooLarge(dim))
    } else {
        Ok(dim as u8)
    }
}

/// A vertex of `Q_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Vertex {
    dim: u8,
    bits: u128,
}

impl Vertex {
    pub fn empty(dim: usize) -> Result<Self, CubeError> {
        Ok(Vertex {
            dim: check_dim(dim)?,
            bits: 0,
        })
    }

    pub fn full(dim: usize) -> Result<Self, CubeError> {
        let dim = check_dim(dim)?;
        Ok(Vertex {
            dim,
            bits: mask(dim),
        })
    }

    pub fn from_bits(dim: usize, bits: u128) -> Result<Self, CubeError> {
        let dim = check_dim(dim)?;
        if bits & !mask(dim) != 0 {
            return Err(CubeError::StrayBits(dim));
        }
        Ok(Vertex { dim, bits })
    }

    pub fn from_positions<I>(dim: usize, positions: I) -> Result<Self, CubeError>
    where
        I: IntoIterator<Item = usize>,
    {
        let dim = check_dim(dim)?;
        let mut bits = 0u128;
        for p in positions {
            if p == 0 || p > dim as usize {
                return Err(CubeError::PositionOutOfRange { position: p, dim });
            }
            bits |= 1u128 << (p - 1);
        }
        Ok(Vertex { dim, bits })
    }

    /// Parses a `{0,1}` string, leftmost character = coordinate 1.
    pub fn parse(s: &str) -> Result<Self, CubeError> {
        let dim = check_dim(s.chars().count())?;
        let mut bits = 0u128;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1u128 << i,
                other => {
                    return Err(CubeError::BadChar {
                        position: i + 1,
                        found: other,
                    });
                }
            }
        }
        Ok(Vertex { dim, bits })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The vertex layer, i.e. the size of the subset.
    pub fn layer(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn contains(&self, position: usize) -> bool {
        position >= 1 && position <= self.dim as usize && self.bits & (1u128 << (position - 1)) != 0
    }

    pub fn toggled(&self, position: usize) -> Result<Self, CubeError> {
        if position == 0 || position > self.dim as usize {
            return Err(CubeError::PositionOutOfRange {
                position,
                dim: self.dim,
            });
        }
        Ok(Vertex {
            dim: self.dim,
            bits: self.bits ^ (1u128 << (position - 1)),
        })
    }

    pub fn complement(&self) -> Self {
        Vertex {
            dim: self.dim,
            bits: !self.bits & mask(self.dim),
        }
    }

    /// Positions in increasing order.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.dim as usize).filter(move |&p| self.bits & (1u128 << (p - 1)) != 0)
    }

    pub fn hamming(&self, other: &Vertex) -> Result<u32, CubeError> {
        if self.dim != other.dim {
            return Err(CubeError::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// Subset notation, e.g. `{1,2,4}`.
    pub fn subset_string(&self) -> String {
        let mut out = String::from("{");
        for (i, p) in self.positions().enumerate() {
            if i > 0 {
                out.push(',');
            }
            push_usize(&mut out, p);
        }
        out.push('}');
        out
    }
}

fn push_usize(out: &mut String, value: usize) {
    use core::fmt::Write;
    let _ = write!(out, "{value}");
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 1..=self.dim as usize {
            let c = if self.bits & (1u128 << (p - 1)) != 0 {
                '1'
            } else {
                '0'
            };
            fmt::Write::write_char(f, c)?;
        }
        Ok(())
    }
}

/// Residue of the prefix coloring, always in `{0, 1, 2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PrefixColor(u8);

impl PrefixColor {
    pub fn from_difference(diff: i64) -> Self {
        PrefixColor(diff.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

/// An edge of `Q_n` in star representation: the lower endpoint plus the
/// coordinate (`direction`) that the upper endpoint adds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StarEdge {
    lower: Vertex,
    direction: u8,
}

impl StarEdge {
    pub fn new(lower: Vertex, direction: usize) -> Result<Self, CubeError> {
        if direction == 0 || direction > lower.dim() {
            return Err(CubeError::PositionOutOfRange {
                position: direction,
                dim: lower.dim,
            });
        }
        if lower.contains(direction) {
            return Err(CubeError::DirectionInLower {
                direction: direction as u8,
            });
        }
        Ok(StarEdge {
            lower,
            direction: direction as u8,
        })
    }

    /// The edge joining two adjacent vertices, in either order.
    pub fn between(u: &Vertex, v: &Vertex) -> Result<Self, CubeError> {
        let d = u.hamming(v)?;
        if d != 1 {
            return Err(CubeError::NotAnEdge(d));
        }
        let diff = u.bits ^ v.bits;
        let direction = diff.trailing_zeros() as u8 + 1;
        let lower = if u.bits & diff == 0 { *u } else { *v };
        Ok(StarEdge { lower, direction })
    }

    pub fn dim(&self) -> usize {
        self.lower.dim()
    }

    pub fn lower(&self) -> Vertex {
        self.lower
    }

    pub fn upper(&self) -> Vertex {
        Vertex {
            dim: self.lower.dim,
            bits: self.lower.bits | bit(self.direction),
        }
    }

    pub fn direction(&self) -> usize {
        self.direction as usize
    }

    /// Index of the edge layer containing this edge (size of the upper endpoint).
    pub fn edge_layer(&self) -> u32 {
        self.lower.layer() + 1
    }

    pub fn star_string(&self) -> String {
        let mut s = String::with_capacity(self.dim());
        for p in 1..=self.dim() {
            s.push(if p == self.direction() {
                '*'
            } else if self.lower.contains(p) {
                '1'
            } else {
                '0'
            });
        }
        s
    }

    pub fn parse(s: &str) -> Result<Self, CubeError> {
        let dim = check_dim(s.chars().count())?;
        let mut bits = 0u128;
        let mut star = None;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1u128 << i,
                '*' => {
                    if star.is_some() {
                        return Err(CubeError::ExtraStar { position: i + 1 });
                    }
                    star = Some(i as u8 + 1);
                }
                other => {
                    return Err(CubeError::BadChar {
                        position: i + 1,
                        found: other,
                    })
                }
            }
        }
        let direction = star.ok_or(CubeError::NoStar)?;
        Ok(StarEdge {
            lower: Vertex { dim, bits },
            direction,
        })
    }

    /// `(#1s before the star - #1s after the star) mod 3`.
    pub fn prefix_color(&self) -> PrefixColor {
        let before = self.lower.bits & (bit(self.direction) - 1);
        let after = self.lower.bits & !before;
        PrefixColor::from_difference(before.count_ones() as i64 - after.count_ones() as i64)
    }

    /// Prefix color of the string `(x_{π(1)}, ..., x_{π(n)})`.
    pub fn prefix_color_permuted(&self, perm: &Permutation) -> Result<PrefixColor, CubeError> {
        if perm.len() != self.dim() {
            return Err(CubeError::DimensionMismatch {
                left: perm.len() as u8,
                right: self.lower.dim,
            });
        }
        let star_at = perm.position_of(self.direction());
        let mut diff = 0i64;
        for p in self.lower.positions() {
            if perm.position_of(p) < star_at {
                diff += 1;
            } else {
                diff -= 1;
            }
        }
        Ok(PrefixColor::from_difference(diff))
    }
}

impl fmt::Display for StarEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.star_string())
    }
}

/// A permutation of `[n]`, stored as the sequence `π(1), ..., π(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    order: Vec<u8>,
    inverse: Vec<u8>,
}

impl Permutation {
    pub fn new(order: Vec<u8>) -> Result<Self, CubeError> {
        let n = order.len();
        if n > MAX_DIM as usize {
            return Err(CubeError::DimensionTooLarge(n));
        }
        let mut inverse = alloc::vec![0u8; n];
        for (i, &x) in order.iter().enumerate() {
            let x = x as usize;
            if x == 0 || x > n || inverse[x - 1] != 0 {
                return Err(CubeError::NotAPermutation(n));
            }
            inverse[x - 1] = i as u8 + 1;
        }
        Ok(Permutation { order, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let order: Vec<u8> = (1..=n as u8).collect();
        Permutation {
            inverse: order.clone(),
            order,
        }
    }

    pub fn reversal(n: usize) -> Self {
        let order: Vec<u8> = (1..=n as u8).rev().collect();
        Permutation {
            inverse: order.clone(),
            order,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `π(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.order[i - 1] as usize
    }

    /// `π⁻¹(x)`: the 1-based slot holding element `x`.
    pub fn position_of(&self, x: usize) -> usize {
        self.inverse[x - 1] as usize
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.order
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A subgraph of `Q_n` together with the cube vertex behind each graph vertex.
#[derive(Clone, Debug)]
pub struct CubeGraph {
    dim: u8,
    graph: Graph,
    points: Vec<Vertex>,
}

impl CubeGraph {
    /// Builds the subgraph of `Q_n` on `points` (sorted, deduplicated) with
    /// every cube edge between them.
    pub fn induced(dim: usize, mut points: Vec<Vertex>) -> Result<Self, CubeError> {
        let dim = check_dim(dim)?;
        for p in &points {
            if p.dim != dim {
                return Err(CubeError::DimensionMismatch {
                    left: dim,
                    right: p.dim,
                });
            }
        }
        points.sort();
        points.dedup();
        let mut edges = Vec::new();
        for (i, p) in points.iter().enumerate() {
            for d in 1..=dim {
                if p.bits & bit(d) == 0 {
                    let up = Vertex {
                        dim,
                        bits: p.bits | bit(d),
                    };
                    if let Ok(j) = points.binary_search(&up) {
                        edges.push((i, j));
                    }
                }
            }
        }
        let graph = Graph::new(points.len(), edges).expect("cube edges are simple");
        Ok(CubeGraph { dim, graph, points })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[Vertex] {
        &self.points
    }

    pub fn point(&self, v: usize) -> Vertex {
        self.points[v]
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.points.binary_search(v).ok()
    }

    pub fn star_edge(&self, e: usize) -> StarEdge {
        let (u, v) = self.graph.edge(e);
        StarEdge::between(&self.points[u], &self.points[v]).expect("cube graph edge")
    }

    pub fn star_edges(&self) -> impl Iterator<Item = StarEdge> + '_ {
        (0..self.graph.size()).map(move |e| self.star_edge(e))
    }

    /// Graph id of the edge, if both endpoints are present and adjacent.
    pub fn edge_index(&self, e: &StarEdge) -> Option<usize> {
        let u = self.index_of(&e.lower())?;
        let v = self.index_of(&e.upper())?;
        self.graph.edge_id(u, v)
    }

    /// Same vertex set, keeping only the listed edges.
    pub fn edge_subgraph(&self, edges: &[usize]) -> CubeGraph {
        CubeGraph {
            dim: self.dim,
            graph: self.graph.edge_subgraph(edges),
            points: self.points.clone(),
        }
    }
}

/// The full hypercube `Q_n`; graph vertex `i` is the subset with bit pattern `i`.
pub fn hypercube_graph(n: usize) -> Result<CubeGraph, CubeError> {
    if n > 24 {
        return Err(CubeError::DimensionTooLarge(n));
    }
    let points = (0..1u128 << n)
        .map(|bits| Vertex { dim: n as u8, bits })
        .collect();
    CubeGraph::induced(n, points)
}

/// Edge layer `k` of `Q_n`: the subgraph induced by vertex layers `k - 1` and `k`.
pub fn edge_layer_graph(n: usize, k: usize) -> Result<CubeGraph, CubeError> {
    if n > 24 {
        return Err(CubeError::DimensionTooLarge(n));
    }
    if k == 0 || k > n {
        return Err(CubeError::LayerOutOfRange {
            n: n as u8,
            k: k as u8,
        });
    }
    let points = (0..1u128 << n)
        .filter(|b| {
            let l = b.count_ones() as usize;
            l == k || l + 1 == k
        })
        .map(|bits| Vertex { dim: n as u8, bits })
        .collect();
    CubeGraph::induced(n, points)
}
