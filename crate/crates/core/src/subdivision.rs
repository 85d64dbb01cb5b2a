//! Subdivisions and explicit layer embeddings of subdivided complete and
//! complete bipartite graphs.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cube::{bit, Vertex};
use crate::embed::LayerEmbedding;
use crate::graph::{complete_bipartite, complete_graph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivisionError {
    #[error("t must be at least 1")]
    EmptyBase,
    #[error("k must be at least 1 for the even family")]
    ZeroEven,
    #[error("construction needs {0} coordinates, more than 128")]
    TooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// A vertex of the base graph.
    Branch(usize),
    /// The `index`-th inserted vertex (from 1) on base edge `edge`, counted
    /// from the smaller endpoint.
    Subdivision { edge: usize, index: usize },
}

/// `T_k(G)`: branch vertices keep their ids, then the inserted vertices
/// follow edge by edge in path order.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub k: usize,
}

impl Subdivision {
    /// Vertex id of the `index`-th inserted vertex on base edge `edge`.
    pub fn inner(&self, base_order: usize, edge: usize, index: usize) -> usize {
        base_order + edge * self.k + index - 1
    }
}

pub fn subdivide(g: &Graph, k: usize) -> Subdivision {
    let n = g.order();
    let mut roles: Vec<VertexRole> = (0..n).map(VertexRole::Branch).collect();
    let mut edges = Vec::with_capacity(g.size() * (k + 1));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let mut prev = u;
        for index in 1..=k {
            let z = roles.len();
            roles.push(VertexRole::Subdivision { edge: e, index });
            edges.push((prev, z));
            prev = z;
        }
        edges.push((prev, v));
    }
    let mut graph = Graph::new(roles.len(), edges).expect("subdivision of a simple graph");
    if let Some(labels) = g.labels() {
        let mut all = labels.to_vec();
        for r in &roles[n..] {
            if let VertexRole::Subdivision { edge, index } = r {
                all.push(alloc::format!("z{}_{}", edge, index));
            }
        }
        graph = graph.with_labels(all).expect("one label per vertex");
    }
    Subdivision { graph, roles, k }
}

/// A subdivided graph with its layer embedding and, where the construction
/// provides one, a partition of the coordinates into transversal parts.
#[derive(Clone, Debug)]
pub struct SubdivisionEmbedding {
    pub subdivision: Subdivision,
    pub embedding: LayerEmbedding,
    pub partition: Option<Vec<Vec<usize>>>,
}

/// Coordinates of the odd construction: blocks `A_x` of size `k` (one
/// coordinate when `k = 0`) in vertex order, then one `b_e` per edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OddLayout {
    pub t: usize,
    pub k: usize,
}

impl OddLayout {
    fn block(&self) -> usize {
        self.k.max(1)
    }

    pub fn dimension(&self) -> usize {
        if self.k == 0 {
            self.t
        } else {
            self.t * self.k + self.t * (self.t - 1) / 2
        }
    }

    /// Coordinate `x_j` of branch vertex `x`, `j` from 1.
    pub fn x(&self, x: usize, j: usize) -> usize {
        x * self.block() + j
    }

    /// Coordinate `b_e`; only for `k >= 1`.
    pub fn b(&self, e: usize) -> usize {
        self.t * self.k + e + 1
    }
}

fn set(coords: impl IntoIterator<Item = usize>) -> u128 {
    coords.into_iter().fold(0u128, |acc, c| acc | bit(c as u8))
}

fn finish(
    subdivision: Subdivision,
    n: usize,
    layer: u32,
    images: Vec<u128>,
    partition: Option<Vec<Vec<usize>>>,
) -> SubdivisionEmbedding {
    let images = images
        .into_iter()
        .map(|b| Vertex::from_bits(n, b).expect("coordinates within range"))
        .collect();
    let embedding = LayerEmbedding::new(n, layer, images).expect("dimension checked by caller");
    SubdivisionEmbedding {
        subdivision,
        embedding,
        partition,
    }
}

/// Layer embedding of `T_{2k+1}(K_t)`: branch vertex `x` goes to `A_x`, and
/// the path `x, z_1, ..., z_{2k+1}, y` walks from `{b_e} ∪ A_x` to
/// `{b_e} ∪ A_y` trading `x_i` for `y_i` one coordinate at a time.
pub fn embed_odd_subdivision_complete(
    t: usize,
    k: usize,
) -> Result<SubdivisionEmbedding, SubdivisionError> {
    if t == 0 {
        return Err(SubdivisionError::EmptyBase);
    }
    let lay = OddLayout { t, k };
    let n = lay.dimension();
    if n > 128 {
        return Err(SubdivisionError::TooLarge(n));
    }
    let base = complete_graph(t);
    let sub = subdivide(&base, 2 * k + 1);
    let mut images = vec![0u128; sub.graph.order()];
    for (x, image) in images.iter_mut().enumerate().take(t) {
        *image = set((1..=lay.block()).map(|j| lay.x(x, j)));
    }
    for (e, &(x, y)) in base.edges().iter().enumerate() {
        let z = |i: usize| sub.inner(t, e, i);
        if k == 0 {
            images[z(1)] = set([lay.x(x, 1), lay.x(y, 1)]);
            continue;
        }
        let be = bit(lay.b(e) as u8);
        let mut odd = images[x] | be;
        images[z(1)] = odd;
        for i in 1..=k {
            images[z(2 * i)] = odd & !bit(lay.x(x, i) as u8);
            if i < k {
                odd = images[z(2 * i)] | bit(lay.x(y, i) as u8);
                images[z(2 * i + 1)] = odd;
            }
        }
        images[z(2 * k + 1)] = images[y] | be;
    }
    let partition = (k >= 1).then(|| {
        let mut parts: Vec<Vec<usize>> = (1..=k)
            .map(|j| (0..t).map(|x| lay.x(x, j)).collect())
            .collect();
        parts.push((0..base.size()).map(|e| lay.b(e)).collect());
        parts
    });
    Ok(finish(sub, n, lay.block() as u32 + 1, images, partition))
}

/// Coordinates of the even construction for `k >= 3`: `A`, `B`, `c`, then a
/// block `S_e = {s_e^1, ..., s_e^{k-1}}` per edge of `K_{t,t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvenLayout {
    pub t: usize,
    pub k: usize,
}

impl EvenLayout {
    pub fn dimension(&self) -> usize {
        match self.k {
            1 => 2 * self.t + 1,
            2 => 2 * self.t + 3,
            k => 2 * self.t + 1 + self.t * self.t * (k - 1),
        }
    }

    /// For `k <= 2` this is `x_i`, otherwise the coordinate of `a_i`.
    pub fn a(&self, i: usize) -> usize {
        i + 1
    }

    /// For `k <= 2` this is `y_j`, otherwise the coordinate of `b_j`.
    pub fn b(&self, j: usize) -> usize {
        self.t + j + 1
    }

    /// `q` for `k = 1`, `q_1` for `k = 2`, `c` for `k >= 3`.
    pub fn c(&self) -> usize {
        2 * self.t + 1
    }

    /// `q_m` for `k = 2`.
    pub fn q(&self, m: usize) -> usize {
        2 * self.t + m
    }

    /// `s_e^m` for `k >= 3`.
    pub fn s(&self, e: usize, m: usize) -> usize {
        2 * self.t + 1 + e * (self.k - 1) + m
    }
}

/// Layer embedding of `T_{2k}(K_{t,t})`, with separate constructions for
/// `k = 1`, `k = 2` and `k >= 3`. For even `k >= 4` a partition is returned.
pub fn embed_even_subdivision_bipartite(
    t: usize,
    k: usize,
) -> Result<SubdivisionEmbedding, SubdivisionError> {
    if t == 0 {
        return Err(SubdivisionError::EmptyBase);
    }
    if k == 0 {
        return Err(SubdivisionError::ZeroEven);
    }
    let lay = EvenLayout { t, k };
    let n = lay.dimension();
    if n > 128 {
        return Err(SubdivisionError::TooLarge(n));
    }
    let base = complete_bipartite(t, t);
    let sub = subdivide(&base, 2 * k);
    let mut images = vec![0u128; sub.graph.order()];
    let b = |c: usize| bit(c as u8);
    let all_y = (0..t).fold(0u128, |acc, j| acc | b(lay.b(j)));
    let layer;
    match k {
        1 => {
            for i in 0..t {
                images[i] = b(lay.a(i)) | all_y;
                images[t + i] = (all_y & !b(lay.b(i))) | b(lay.c());
            }
            for (e, &(ai, bj)) in base.edges().iter().enumerate() {
                let j = bj - t;
                let z1 = images[ai] & !b(lay.b(j));
                images[sub.inner(2 * t, e, 1)] = z1;
                images[sub.inner(2 * t, e, 2)] = z1 | b(lay.c());
            }
            layer = t as u32 + 1;
        }
        2 => {
            for i in 0..t {
                images[i] = b(lay.a(i)) | all_y | b(lay.q(3));
                images[t + i] = (all_y & !b(lay.b(i))) | b(lay.q(1)) | b(lay.q(2));
            }
            for (e, &(ai, bj)) in base.edges().iter().enumerate() {
                let j = bj - t;
                let z1 = images[ai] & !b(lay.b(j));
                let z2 = z1 | b(lay.q(1));
                let z3 = z2 & !b(lay.q(3));
                let z4 = z3 | b(lay.q(2));
                for (idx, z) in [z1, z2, z3, z4].into_iter().enumerate() {
                    images[sub.inner(2 * t, e, idx + 1)] = z;
                }
            }
            layer = t as u32 + 2;
        }
        _ => {
            let s_all = (0..base.size()).fold(0u128, |acc, e| acc | b(lay.s(e, 1)));
            for i in 0..t {
                images[i] = b(lay.a(i)) | b(lay.c()) | s_all;
                images[t + i] = b(lay.b(i)) | s_all;
            }
            for (e, &(ai, bj)) in base.edges().iter().enumerate() {
                let j = bj - t;
                let s = |m: usize| b(lay.s(e, m));
                let rest = s_all & !s(1);
                let (ba, bb, bc) = (b(lay.a(ai)), b(lay.b(j)), b(lay.c()));
                let mut path = vec![
                    ba | bc | rest,
                    ba | bc | s(2) | rest,
                    bc | s(2) | rest,
                    bb | bc | s(2) | rest,
                    bb | s(2) | rest,
                ];
                for i in 1..=k - 3 {
                    let even = path[path.len() - 1] | s(2 + i);
                    path.push(even);
                    path.push(even & !s(1 + i));
                }
                path.push(path[path.len() - 1] | s(1));
                for (idx, z) in path.into_iter().enumerate() {
                    images[sub.inner(2 * t, e, idx + 1)] = z;
                }
            }
            layer = (t * t) as u32 + 2;
        }
    }
    let partition = (k >= 4 && k.is_multiple_of(2)).then(|| {
        let mut parts = vec![(0..2 * t).map(|i| i + 1).collect::<Vec<_>>()];
        let mut odd_part = vec![lay.c()];
        for e in 0..base.size() {
            let mut part = vec![lay.s(e, 1)];
            for m in 2..k {
                if m % 2 == 0 {
                    part.push(lay.s(e, m));
                } else {
                    odd_part.push(lay.s(e, m));
                }
            }
            parts.push(part);
        }
        parts.push(odd_part);
        parts
    });
    Ok(finish(sub, n, layer, images, partition))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{check_partite, verify_layer_embedding};
    use crate::graph::cycle_graph;

    #[test]
    fn subdivide_counts() {
        let c8 = subdivide(&cycle_graph(4), 1);
        assert_eq!((c8.graph.order(), c8.graph.size()), (8, 8));
        assert!(c8.graph.is_connected());
        assert!(c8
            .graph
            .edges()
            .iter()
            .all(|&(u, v)| c8.graph.degree(u) == 2 && c8.graph.degree(v) == 2));
        let c6 = subdivide(&complete_graph(3), 1);
        assert_eq!((c6.graph.order(), c6.graph.size()), (6, 6));
        let k4 = subdivide(&complete_graph(4), 2);
        assert_eq!((k4.graph.order(), k4.graph.size()), (16, 18));
        assert_eq!(k4.roles[4], VertexRole::Subdivision { edge: 0, index: 1 });
        let same = subdivide(&complete_graph(4), 0);
        assert_eq!(same.graph.edges(), complete_graph(4).edges());
    }

    #[test]
    fn odd_family_small() {
        for t in 1..=4 {
            for k in 0..=3 {
                let s = embed_odd_subdivision_complete(t, k).unwrap();
                verify_layer_embedding(&s.subdivision.graph, &s.embedding).unwrap();
                if let Some(p) = &s.partition {
                    let cert = check_partite(&s.embedding, p).unwrap();
                    let mut sizes = vec![t; k];
                    sizes.push(t * (t - 1) / 2);
                    assert_eq!(cert.part_sizes, sizes);
                }
            }
        }
        let t1 = embed_odd_subdivision_complete(4, 0).unwrap();
        assert_eq!(t1.embedding.dimension(), 4);
        assert_eq!(
            t1.embedding.image(4).positions().collect::<Vec<_>>(),
            vec![1, 2]
        );
    }

    #[test]
    fn even_family_small() {
        for t in 1..=3 {
            for k in 1..=5 {
                let s = embed_even_subdivision_bipartite(t, k).unwrap();
                verify_layer_embedding(&s.subdivision.graph, &s.embedding).unwrap();
                assert_eq!(s.partition.is_some(), k == 4);
                if let Some(p) = &s.partition {
                    check_partite(&s.embedding, p).unwrap();
                }
            }
        }
        let s = embed_even_subdivision_bipartite(2, 1).unwrap();
        assert_eq!(s.embedding.dimension(), 5);
        assert_eq!(s.embedding.layer(), 3);
    }
}
