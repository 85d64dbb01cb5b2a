//! Layer embeddings: construction from a coloring, verification, direct
//! exhaustive search, and partite certificates.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::coloring::EdgeColoring;
use crate::compression::{binomial, first_colex};
use crate::cube::{bit, CubeError, Vertex};
use crate::graph::Graph;
use crate::search::{Budget, Meter, Outcome};

/// An injective map from graph vertices into vertex layers `layer - 1` and
/// `layer` of `Q_dim` (a witness that the graph lies in edge layer `layer`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerEmbedding {
    dim: u8,
    layer: u32,
    images: Vec<Vertex>,
}

impl LayerEmbedding {
    pub fn new(dim: usize, layer: u32, images: Vec<Vertex>) -> Result<Self, EmbedError> {
        let probe = Vertex::empty(dim)?;
        if let Some(bad) = images.iter().position(|v| v.dim() != dim) {
            return Err(EmbedError::Cube(CubeError::DimensionMismatch {
                left: probe.dim() as u8,
                right: images[bad].dim() as u8,
            }));
        }
        Ok(LayerEmbedding {
            dim: dim as u8,
            layer,
            images,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dim as usize
    }

    /// Edge layer index `k`; images sit in vertex layers `k - 1` and `k`.
    pub fn layer(&self) -> u32 {
        self.layer
    }

    pub fn image(&self, v: usize) -> Vertex {
        self.images[v]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.images
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("root {0} is not a vertex")]
    BadRoot(usize),
    #[error("coloring is not nice: {0}")]
    NotNice(NotNice),
    #[error("coloring does not match the graph: {0}")]
    Coloring(#[from] crate::coloring::ColoringError),
    #[error(transparent)]
    Cube(#[from] CubeError),
    #[error("embedding needs {0} coordinates, more than 128")]
    TooManyCoordinates(usize),
}

/// Why the coloring-driven map of a component is not an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NotNice {
    #[error("edge {edge} closes a cycle with an odd color count")]
    IllDefined { edge: usize },
    #[error("vertices {u} and {v} receive the same image")]
    Collision { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingViolation {
    #[error("{got} images for {expected} vertices")]
    VertexCount { expected: usize, got: usize },
    #[error("image of vertex {vertex} has the wrong dimension")]
    Dimension { vertex: usize },
    #[error("edge ({u}, {v}) maps to Hamming distance {distance}")]
    NotAdjacent { u: usize, v: usize, distance: u32 },
    #[error("vertices {u} and {v} share an image")]
    NotInjective { u: usize, v: usize },
    #[error("vertex {vertex} lies in layer {layer}, outside {allowed_low}..={allowed_high}")]
    OutsideLayers {
        vertex: usize,
        layer: u32,
        allowed_low: u32,
        allowed_high: u32,
    },
}

/// Checks that `images` is an injective, adjacency-preserving map into a cube.
pub fn verify_cube_embedding(g: &Graph, images: &[Vertex]) -> Result<(), EmbeddingViolation> {
    if images.len() != g.order() {
        return Err(EmbeddingViolation::VertexCount {
            expected: g.order(),
            got: images.len(),
        });
    }
    if let Some(first) = images.first() {
        if let Some(vertex) = images.iter().position(|v| v.dim() != first.dim()) {
            return Err(EmbeddingViolation::Dimension { vertex });
        }
    }
    for &(u, v) in g.edges() {
        let distance = (images[u].bits() ^ images[v].bits()).count_ones();
        if distance != 1 {
            return Err(EmbeddingViolation::NotAdjacent { u, v, distance });
        }
    }
    let mut sorted: Vec<(Vertex, usize)> = images.iter().copied().zip(0..).collect();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(EmbeddingViolation::NotInjective {
                u: w[0].1.min(w[1].1),
                v: w[0].1.max(w[1].1),
            });
        }
    }
    Ok(())
}

/// Injectivity, distance-one edges, and containment in layers `k - 1, k`.
pub fn verify_layer_embedding(g: &Graph, emb: &LayerEmbedding) -> Result<(), EmbeddingViolation> {
    verify_cube_embedding(g, &emb.images)?;
    let high = emb.layer;
    let low = high.saturating_sub(1);
    for (vertex, img) in emb.images.iter().enumerate() {
        let layer = img.layer();
        if layer < low || layer > high {
            return Err(EmbeddingViolation::OutsideLayers {
                vertex,
                layer,
                allowed_low: low,
                allowed_high: high,
            });
        }
    }
    Ok(())
}

/// The map of a component driven by a coloring: the root goes to the set of
/// colors whose class lies at odd distance from it, and each edge flips the
/// coordinate named by its color. Returns images of the root's component
/// (`None` elsewhere) and the root image.
pub(crate) fn map_component(
    g: &Graph,
    colors: &[u32],
    root: usize,
) -> Result<(Vec<Option<u128>>, u128), NotNice> {
    let dist = g.distances_from(root);
    let mut class_dist: Vec<Option<usize>> = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (Some(du), Some(dv)) = (dist[u], dist[v]) else {
            continue;
        };
        let c = colors[e] as usize;
        if class_dist.len() < c {
            class_dist.resize(c, None);
        }
        let d = du.min(dv);
        class_dist[c - 1] = Some(class_dist[c - 1].map_or(d, |old| old.min(d)));
    }
    let mut root_image = 0u128;
    for (i, d) in class_dist.iter().enumerate() {
        if matches!(d, Some(d) if d % 2 == 1) {
            root_image |= 1u128 << i;
        }
    }
    let mut image = vec![None; g.order()];
    image[root] = Some(root_image);
    let mut queue = VecDeque::from([root]);
    let mut reached = vec![root];
    while let Some(u) = queue.pop_front() {
        let fu = image[u].unwrap();
        for &(w, e) in g.neighbors(u) {
            let fw = fu ^ bit(colors[e] as u8);
            match image[w] {
                None => {
                    image[w] = Some(fw);
                    reached.push(w);
                    queue.push_back(w);
                }
                Some(existing) if existing != fw => return Err(NotNice::IllDefined { edge: e }),
                Some(_) => {}
            }
        }
    }
    let mut seen: Vec<(u128, usize)> = reached.iter().map(|&v| (image[v].unwrap(), v)).collect();
    seen.sort_unstable();
    for w in seen.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(NotNice::Collision {
                u: w[0].1.min(w[1].1),
                v: w[0].1.max(w[1].1),
            });
        }
    }
    Ok((image, root_image))
}

/// Embedding of a connected graph built from a coloring as in the
/// characterization of layered graphs. The result is an embedding into
/// `Q_N` (`N` = number of colors) whenever the coloring is nice; it lies in
/// two consecutive layers exactly when the coloring is very nice, which the
/// caller checks with [`verify_layer_embedding`].
pub fn embed_from_very_nice(
    g: &Graph,
    c: &EdgeColoring,
    root: usize,
) -> Result<LayerEmbedding, EmbedError> {
    c.check_matches(g)?;
    if root >= g.order() {
        return Err(EmbedError::BadRoot(root));
    }
    if !g.is_connected() {
        return Err(EmbedError::NotConnected);
    }
    let (image, root_image) = map_component(g, c.as_slice(), root).map_err(EmbedError::NotNice)?;
    let dim = c.count() as usize;
    let images = image
        .into_iter()
        .map(|b| Vertex::from_bits(dim, b.unwrap()))
        .collect::<Result<Vec<_>, _>>()?;
    LayerEmbedding::new(dim, root_image.count_ones() + 1, images)
}

/// Embedding of a connected graph into `Q_N` (`N` = number of colors) from
/// a nice coloring; the root goes to the empty set.
pub fn embed_from_nice(
    g: &Graph,
    c: &EdgeColoring,
    root: usize,
) -> Result<Vec<Vertex>, EmbedError> {
    c.check_matches(g)?;
    if root >= g.order() {
        return Err(EmbedError::BadRoot(root));
    }
    if !g.is_connected() {
        return Err(EmbedError::NotConnected);
    }
    let (image, root_image) = map_component(g, c.as_slice(), root).map_err(EmbedError::NotNice)?;
    let dim = c.count() as usize;
    image
        .into_iter()
        .map(|b| Vertex::from_bits(dim, b.unwrap() ^ root_image).map_err(EmbedError::from))
        .collect()
}

/// Decides whether `g` lies in an edge layer. Leaves are peeled off first;
/// the remaining core is searched by backtracking over edge directions and
/// the leaves are put back afterwards. New directions are introduced in
/// increasing order, the root is pinned to the lower of the two layers, and
/// partial maps are pruned on layer membership and on Hamming distance
/// exceeding graph distance. Components are decided separately and then
/// combined. Needing more than 128 coordinates is reported as
/// [`Outcome::BudgetExhausted`].
pub fn decide_layered(g: &Graph, budget: Budget) -> Outcome<LayerEmbedding> {
    let mut meter = Meter::new(budget);
    let mut parts = Vec::new();
    for comp in g.component_subgraphs() {
        match layered_component(&comp.graph, &mut meter) {
            Outcome::Found(images) => parts.push((comp.vertices, images)),
            Outcome::NoneExists => return Outcome::NoneExists,
            Outcome::BudgetExhausted => return Outcome::BudgetExhausted,
        }
    }
    match combine_components(g.order(), parts) {
        Some(emb) => Outcome::Found(emb),
        None => Outcome::BudgetExhausted,
    }
}

/// Components embedded as `(sets, dimension, root layer)`.
type ComponentImages = (Vec<u128>, u8, u32);

fn layered_component(g: &Graph, meter: &mut Meter) -> Outcome<ComponentImages> {
    if g.bipartition().is_none() {
        return Outcome::NoneExists;
    }
    if g.order() == 0 {
        return Outcome::Found((Vec::new(), 0, 0));
    }
    let (core, peeled) = peel_leaves(g);
    let mut local = vec![usize::MAX; g.order()];
    for (i, &v) in core.iter().enumerate() {
        local[v] = i;
    }
    let core_edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
        .map(|&(u, v)| (local[u], local[v]));
    let core_graph = Graph::new(core.len(), core_edges).expect("subgraph of a simple graph");
    let (core_images, dim, low) = match layered_core(&core_graph, meter) {
        Outcome::Found(found) => found,
        Outcome::NoneExists => return Outcome::NoneExists,
        Outcome::BudgetExhausted => return Outcome::BudgetExhausted,
    };
    let mut images = vec![None; g.order()];
    for (&v, &img) in core.iter().zip(&core_images) {
        images[v] = Some(img);
    }
    match reattach_leaves(images, &peeled, dim, low) {
        Some(found) => Outcome::Found(found),
        None => Outcome::BudgetExhausted,
    }
}

/// Repeatedly removes degree-one vertices, keeping at least one vertex.
/// Returns the remaining core and the removed `(leaf, neighbor)` pairs in
/// removal order.
fn peel_leaves(g: &Graph) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = g.order();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut todo: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    let mut peeled = Vec::new();
    while let Some(v) = todo.pop() {
        if gone[v] || deg[v] != 1 || left == 1 {
            continue;
        }
        let &(p, _) = g
            .neighbors(v)
            .iter()
            .find(|&&(w, _)| !gone[w])
            .expect("degree one");
        gone[v] = true;
        left -= 1;
        deg[p] -= 1;
        peeled.push((v, p));
        if deg[p] == 1 {
            todo.push(p);
        }
    }
    ((0..n).filter(|&v| !gone[v]).collect(), peeled)
}

/// Puts peeled leaves back in reverse order. A leaf takes a free neighbor of
/// its parent's image if there is one. Otherwise a fresh coordinate is added,
/// either to the leaf (going up) or to every image placed so far (going down).
fn reattach_leaves(
    mut images: Vec<Option<u128>>,
    peeled: &[(usize, usize)],
    dim: u8,
    low: u32,
) -> Option<ComponentImages> {
    let (mut dim, mut low) = (dim, low);
    let mut taken: BTreeSet<u128> = images.iter().flatten().copied().collect();
    for &(leaf, parent) in peeled.iter().rev() {
        let pv = images[parent].expect("parent placed before its leaf");
        let up = pv.count_ones() == low;
        let free = (1..=dim)
            .map(bit)
            .find(|&b| (pv & b == 0) == up && !taken.contains(&(pv ^ b)));
        let img = match free {
            Some(b) => pv ^ b,
            None if dim == 128 => return None,
            None => {
                dim += 1;
                if up {
                    pv | bit(dim)
                } else {
                    for img in images.iter_mut().flatten() {
                        *img |= bit(dim);
                    }
                    taken = images.iter().flatten().copied().collect();
                    low += 1;
                    pv
                }
            }
        };
        taken.insert(img);
        images[leaf] = Some(img);
    }
    let mut images: Vec<u128> = images
        .into_iter()
        .map(|i| i.expect("every vertex placed"))
        .collect();
    if images[0].count_ones() != low {
        let all = u128::MAX >> (128 - dim as u32);
        images.iter_mut().for_each(|img| *img ^= all);
        low = dim as u32 - low - 1;
    }
    Some((images, dim, low))
}

type Candidate = ((usize, usize), usize, usize, Vec<u8>);

fn layered_core(g: &Graph, meter: &mut Meter) -> Outcome<ComponentImages> {
    let Some(mut side) = g.bipartition() else {
        return Outcome::NoneExists;
    };
    if side[0] == 1 {
        side.iter_mut().for_each(|s| *s ^= 1);
    }
    let n = g.order();
    let mut dist = vec![u8::MAX; n * n];
    for v in 0..n {
        for (w, d) in g.distances_from(v).into_iter().enumerate() {
            if let Some(d) = d {
                dist[v * n + w] = d.min(u8::MAX as usize) as u8;
            }
        }
    }
    let mut search = LayerSearch {
        g,
        dist,
        side,
        placed: vec![false; n],
        stack: vec![0],
        sig: vec![0; n],
        reflect: 0,
        used: 0,
        cap: g.size().min(128) as u8,
        capped: false,
        meter,
    };
    search.placed[0] = true;
    match search.place() {
        Some(true) => {
            let images = search.sig.iter().map(|s| s ^ search.reflect).collect();
            Outcome::Found((images, search.used, search.reflect.count_ones()))
        }
        Some(false) if search.capped => Outcome::BudgetExhausted,
        Some(false) => Outcome::NoneExists,
        None => Outcome::BudgetExhausted,
    }
}

/// Backtracking over images relative to vertex 0, which sits in the lower
/// layer. Each step extends the most constrained frontier vertex.
struct LayerSearch<'a, 'm> {
    g: &'a Graph,
    /// Graph distances, row-major and capped at 255. Images of two vertices
    /// can be no further apart than the vertices themselves.
    dist: Vec<u8>,
    side: Vec<u8>,
    placed: Vec<bool>,
    /// Placed vertices in placement order.
    stack: Vec<usize>,
    /// Image relative to the root; the actual image is `sig ^ reflect`.
    sig: Vec<u128>,
    /// Coordinates where the root image has a 1.
    reflect: u128,
    used: u8,
    cap: u8,
    /// Set once the coordinate limit has withheld a fresh direction.
    capped: bool,
    meter: &'m mut Meter,
}

impl LayerSearch<'_, '_> {
    /// `Some(true)` on success, `Some(false)` if the subtree is empty,
    /// `None` when the budget runs out.
    fn place(&mut self) -> Option<bool> {
        if self.stack.len() == self.g.order() {
            return Some(true);
        }
        if !self.meter.tick() {
            return None;
        }
        // (options, -placed neighbors) decides; the rest is the payload.
        let mut best: Option<Candidate> = None;
        for v in 0..self.g.order() {
            if self.placed[v] {
                continue;
            }
            let mut placed_nbrs = self.g.neighbors(v).iter().filter(|&&(w, _)| self.placed[w]);
            let Some(&(p, _)) = placed_nbrs.next() else {
                continue;
            };
            let dirs = self.directions(v, p);
            if dirs.is_empty() {
                return Some(false);
            }
            let key = (dirs.len(), usize::MAX - 1 - placed_nbrs.count());
            if best.as_ref().is_none_or(|b| key < b.0) {
                best = Some((key, v, p, dirs));
            }
        }
        let (_, v, p, dirs) = best.expect("a connected graph has a frontier");
        for d in dirs {
            let saved = (self.used, self.reflect);
            if d > self.used {
                self.used = d;
                if self.side[p] == 1 {
                    self.reflect |= bit(d);
                }
            }
            self.sig[v] = self.sig[p] ^ bit(d);
            self.placed[v] = true;
            self.stack.push(v);
            match self.place() {
                Some(false) => {}
                other => return other,
            }
            self.stack.pop();
            self.placed[v] = false;
            (self.used, self.reflect) = saved;
        }
        Some(false)
    }

    /// Directions `d` for which `sig[p] ^ d` is a valid image of `v`; at most
    /// one unused direction is offered.
    fn directions(&self, v: usize, p: usize) -> Vec<u8> {
        let top = if self.used < self.cap {
            self.used + 1
        } else {
            self.used
        };
        (1..=top)
            .filter(|&d| {
                let reflect = if d > self.used && self.side[p] == 1 {
                    self.reflect | bit(d)
                } else {
                    self.reflect
                };
                self.admissible(v, self.sig[p] ^ bit(d), reflect)
            })
            .collect()
    }

    fn admissible(&self, v: usize, sig: u128, reflect: u128) -> bool {
        if (sig ^ reflect).count_ones() != reflect.count_ones() + self.side[v] as u32 {
            return false;
        }
        let row = &self.dist[v * self.g.order()..];
        self.stack.iter().all(|&w| {
            let h = (self.sig[w] ^ sig).count_ones();
            h > 0 && h <= row[w] as u32
        })
    }
}

/// Combines component embeddings. All components share the first block of
/// coordinates; a marker block gives each component its own pattern of the
/// same weight, and a block of ones lifts components to a common pair of
/// layers. `None` if that needs more than 128 coordinates.
fn combine_components(
    order: usize,
    parts: Vec<(Vec<usize>, ComponentImages)>,
) -> Option<LayerEmbedding> {
    let width = parts
        .iter()
        .map(|(_, (_, dim, _))| *dim as usize)
        .max()
        .unwrap_or(0);
    let top = parts.iter().map(|(_, (_, _, low))| *low).max().unwrap_or(0);
    let bottom = parts.iter().map(|(_, (_, _, low))| *low).min().unwrap_or(0);
    let (m, markers) = if parts.len() <= 1 {
        (0, vec![0u128])
    } else {
        let mut m = 2;
        while binomial(m, m / 2) < parts.len() as u128 {
            m += 1;
        }
        (m, first_colex(m, m / 2, parts.len() as u128).ok()?)
    };
    let total = width + m + (top - bottom) as usize;
    if total > 128 {
        return None;
    }
    let mut out = vec![0u128; order];
    for ((vertices, (images, _, low)), marker) in parts.iter().zip(&markers) {
        let pad = (1u128 << (top - low)) - 1;
        let extra = (marker << width) | (pad << (width + m));
        for (local, &v) in vertices.iter().enumerate() {
            out[v] = images[local] | extra;
        }
    }
    let images = out
        .into_iter()
        .map(|b| Vertex::from_bits(total, b).ok())
        .collect::<Option<Vec<_>>>()?;
    LayerEmbedding::new(total, top + (m / 2) as u32 + 1, images).ok()
}

/// A partite representation: every upper-layer image meets each part in
/// exactly one coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartiteCertificate {
    pub parts: Vec<Vec<usize>>,
    pub part_sizes: Vec<usize>,
    /// For each upper-layer vertex, the coordinate it uses in each part.
    pub transversals: Vec<(usize, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartiteFailure {
    #[error("coordinate {0} is outside the embedding dimension")]
    CoordinateOutOfRange(usize),
    #[error("coordinate {0} appears in two parts")]
    Overlap(usize),
    #[error("coordinate {0} is in no part")]
    Uncovered(usize),
    #[error("vertex {vertex} meets part {part} in {count} coordinates")]
    NotTransversal {
        vertex: usize,
        part: usize,
        count: usize,
    },
}

pub fn check_partite(
    emb: &LayerEmbedding,
    partition: &[Vec<usize>],
) -> Result<PartiteCertificate, PartiteFailure> {
    let n = emb.dimension();
    let mut owner = vec![usize::MAX; n + 1];
    for (i, part) in partition.iter().enumerate() {
        for &x in part {
            if x == 0 || x > n {
                return Err(PartiteFailure::CoordinateOutOfRange(x));
            }
            if owner[x] != usize::MAX {
                return Err(PartiteFailure::Overlap(x));
            }
            owner[x] = i;
        }
    }
    if let Some(x) = (1..=n).find(|&x| owner[x] == usize::MAX) {
        return Err(PartiteFailure::Uncovered(x));
    }
    let mut transversals = Vec::new();
    for (vertex, img) in emb.images().iter().enumerate() {
        if img.layer() != emb.layer() {
            continue;
        }
        let mut picks = vec![Vec::new(); partition.len()];
        for x in img.positions() {
            picks[owner[x]].push(x);
        }
        let mut row = Vec::with_capacity(partition.len());
        for (part, pick) in picks.iter().enumerate() {
            if pick.len() != 1 {
                return Err(PartiteFailure::NotTransversal {
                    vertex,
                    part,
                    count: pick.len(),
                });
            }
            row.push(pick[0]);
        }
        transversals.push((vertex, row));
    }
    Ok(PartiteCertificate {
        parts: partition.to_vec(),
        part_sizes: partition.iter().map(Vec::len).collect(),
        transversals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, cycle_graph, path_graph};

    fn set(n: usize, ps: &[usize]) -> Vertex {
        Vertex::from_positions(n, ps.iter().copied()).unwrap()
    }

    #[test]
    fn c6_from_direction_coloring() {
        let g = cycle_graph(6);
        let c = EdgeColoring::new(&g, vec![1, 2, 3, 1, 2, 3]).unwrap();
        for root in 0..6 {
            let emb = embed_from_very_nice(&g, &c, root).unwrap();
            assert_eq!(emb.dimension(), 3);
            verify_layer_embedding(&g, &emb).unwrap();
            let layers: Vec<u32> = emb.images().iter().map(Vertex::layer).collect();
            assert!(layers
                .iter()
                .all(|&l| l == emb.layer() || l + 1 == emb.layer()));
        }
    }

    #[test]
    fn single_edge() {
        let g = path_graph(2);
        let c = EdgeColoring::new(&g, vec![1]).unwrap();
        let emb = embed_from_very_nice(&g, &c, 0).unwrap();
        assert_eq!(emb.image(0), set(1, &[]));
        assert_eq!(emb.image(1), set(1, &[1]));
    }

    #[test]
    fn c4_spans_three_layers() {
        let g = cycle_graph(4);
        let c = EdgeColoring::new(&g, vec![1, 2, 1, 2]).unwrap();
        let emb = embed_from_very_nice(&g, &c, 0).unwrap();
        verify_cube_embedding(&g, emb.images()).unwrap();
        assert!(matches!(
            verify_layer_embedding(&g, &emb),
            Err(EmbeddingViolation::OutsideLayers { .. })
        ));
    }

    #[test]
    fn not_nice_is_an_error() {
        let g = cycle_graph(4);
        let c = EdgeColoring::new(&g, vec![1, 2, 3, 4]).unwrap();
        assert!(matches!(
            embed_from_very_nice(&g, &c, 0),
            Err(EmbedError::NotNice(NotNice::IllDefined { .. }))
        ));
        let p = path_graph(3);
        let c = EdgeColoring::new(&p, vec![1, 1]).unwrap();
        assert_eq!(
            embed_from_very_nice(&p, &c, 0),
            Err(EmbedError::NotNice(NotNice::Collision { u: 0, v: 2 }))
        );
    }

    #[test]
    fn verifier_reports() {
        let g = path_graph(2);
        let dup = LayerEmbedding::new(2, 1, vec![set(2, &[1]), set(2, &[1])]).unwrap();
        assert!(matches!(
            verify_layer_embedding(&g, &dup),
            Err(EmbeddingViolation::NotAdjacent { .. })
        ));
        let g0 = Graph::new(2, []).unwrap();
        assert_eq!(
            verify_layer_embedding(&g0, &dup),
            Err(EmbeddingViolation::NotInjective { u: 0, v: 1 })
        );
        let q2 = crate::cube::hypercube_graph(2).unwrap();
        for k in 1..=2 {
            let id = LayerEmbedding::new(2, k, q2.points().to_vec()).unwrap();
            assert!(matches!(
                verify_layer_embedding(q2.graph(), &id),
                Err(EmbeddingViolation::OutsideLayers { .. })
            ));
        }
    }

    #[test]
    fn direct_search() {
        let c6 = decide_layered(&cycle_graph(6), Budget::UNLIMITED)
            .found()
            .unwrap();
        verify_layer_embedding(&cycle_graph(6), &c6).unwrap();
        assert_eq!(
            decide_layered(&cycle_graph(4), Budget::UNLIMITED),
            Outcome::NoneExists
        );
        let star = complete_bipartite(1, 3);
        let emb = decide_layered(&star, Budget::UNLIMITED).found().unwrap();
        verify_layer_embedding(&star, &emb).unwrap();
        assert_eq!(emb.image(0).layer(), 0);
        assert_eq!(emb.dimension(), 3);
        assert_eq!(
            decide_layered(&cycle_graph(5), Budget::UNLIMITED),
            Outcome::NoneExists
        );
        assert_eq!(
            decide_layered(&cycle_graph(8), Budget::nodes(1)),
            Outcome::BudgetExhausted
        );
    }

    #[test]
    fn many_components_fit() {
        let mut edges: Vec<(usize, usize)> = (0..60).map(|i| (2 * i, 2 * i + 1)).collect();
        edges.extend((0..6).map(|i| (120 + i, 120 + (i + 1) % 6)));
        edges.extend([(126, 127), (126, 128), (126, 129)]);
        let g = Graph::new(130, edges).unwrap();
        let emb = decide_layered(&g, Budget::UNLIMITED).found().unwrap();
        verify_layer_embedding(&g, &emb).unwrap();
        assert!(emb.dimension() < 20);
    }

    #[test]
    fn disconnected_components_share_layers() {
        let g = Graph::new(9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7)]).unwrap();
        let emb = decide_layered(&g, Budget::UNLIMITED).found().unwrap();
        verify_layer_embedding(&g, &emb).unwrap();
        let with_c4 = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5)]).unwrap();
        assert_eq!(
            decide_layered(&with_c4, Budget::UNLIMITED),
            Outcome::NoneExists
        );
    }

    #[test]
    fn partite_c8() {
        // 1, 12, 2, 23, 3, 34, 4, 14
        let g = cycle_graph(8);
        let sets: [&[usize]; 8] = [&[1], &[1, 2], &[2], &[2, 3], &[3], &[3, 4], &[4], &[1, 4]];
        let emb = LayerEmbedding::new(4, 2, sets.iter().map(|s| set(4, s)).collect()).unwrap();
        verify_layer_embedding(&g, &emb).unwrap();
        let cert = check_partite(&emb, &[vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(cert.part_sizes, vec![2, 2]);
        assert_eq!(cert.transversals.len(), 4);
        assert_eq!(
            check_partite(&emb, &[vec![1, 2], vec![3, 4]]),
            Err(PartiteFailure::NotTransversal {
                vertex: 1,
                part: 0,
                count: 2
            })
        );
        assert_eq!(
            check_partite(&emb, &[vec![1, 3], vec![2]]),
            Err(PartiteFailure::Uncovered(4))
        );
        assert_eq!(
            check_partite(&emb, &[vec![1, 3], vec![2, 4, 3]]),
            Err(PartiteFailure::Overlap(3))
        );
    }
}
