//! Simple undirected graphs with the cycle utilities the verifiers need.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge #{index} ({u}, {v}) refers to a vertex outside 0..{order}")]
    VertexOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        order: usize,
    },
    #[error("edge #{index} ({u}, {u}) is a loop")]
    Loop { index: usize, u: usize },
    #[error("edge #{index} ({u}, {v}) duplicates an earlier edge")]
    DuplicateEdge { index: usize, u: usize, v: usize },
    #[error("{got} labels given for {order} vertices")]
    LabelCount { order: usize, got: usize },
}

/// An immutable simple graph on vertices `0..order`.
///
/// Edges keep the order they were given in, normalised so that `u < v`;
/// edge ids are positions in that list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    pub fn new<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); order];
        let mut list = Vec::new();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange { index, u, v, order });
            }
            if u == v {
                return Err(GraphError::Loop { index, u });
            }
            if adj[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge { index, u, v });
            }
            let id = list.len();
            list.push((u.min(v), u.max(v)));
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
        Ok(Graph {
            edges: list,
            adj,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount {
                order: self.order(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Number of vertices, `|G|`.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, `||G||`.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// `(neighbor, edge id)` pairs.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.adj
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_id(u, v).is_some()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// The other endpoint of edge `e` seen from `v`.
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Component id per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.order()];
        let mut count = 0;
        for s in 0..self.order() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &(w, _) in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Vertex sets of the components, each sorted, ordered by smallest vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let (comp, count) = self.components();
        let mut sets = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            sets[c].push(v);
        }
        sets
    }

    /// Each component as a standalone graph, with maps from its vertex and
    /// edge ids back to ids of `self`.
    pub fn component_subgraphs(&self) -> Vec<ComponentView> {
        let sets = self.component_vertex_sets();
        let mut local = vec![0usize; self.order()];
        sets.into_iter()
            .map(|vertices| {
                for (i, &v) in vertices.iter().enumerate() {
                    local[v] = i;
                }
                let mut edges = Vec::new();
                for e in 0..self.size() {
                    let (u, _) = self.edges[e];
                    if vertices.binary_search(&u).is_ok() {
                        edges.push(e);
                    }
                }
                let graph = Graph::new(
                    vertices.len(),
                    edges.iter().map(|&e| {
                        let (u, v) = self.edges[e];
                        (local[u], local[v])
                    }),
                )
                .expect("component of a simple graph");
                ComponentView {
                    graph,
                    vertices,
                    edges,
                }
            })
            .collect()
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Proper 2-coloring of every component, or `None` if some cycle is odd.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.order()];
        for s in 0..self.order() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Same vertex set with only the listed edges (ids refer to `self`).
    pub fn edge_subgraph(&self, ids: &[usize]) -> Graph {
        let mut g = Graph::new(self.order(), ids.iter().map(|&e| self.edges[e]))
            .expect("subset of a simple graph");
        g.labels = self.labels.clone();
        g
    }

    /// Renames vertex `v` to `perm[v]`; edge ids are preserved.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::new(
            self.order(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabeling a simple graph");
        if let Some(labels) = &self.labels {
            let mut moved = vec![String::new(); labels.len()];
            for (v, l) in labels.iter().enumerate() {
                moved[perm[v]] = l.clone();
            }
            g.labels = Some(moved);
        }
        g
    }

    /// Edge ids along a closed vertex sequence, or `None` if it is not a cycle
    /// of this graph (repeated vertices, missing edges, fewer than 3 vertices).
    pub fn cycle_edges(&self, cycle: &[usize]) -> Option<Vec<usize>> {
        if cycle.len() < 3 || !all_distinct(cycle) {
            return None;
        }
        (0..cycle.len())
            .map(|i| self.edge_id(cycle[i], cycle[(i + 1) % cycle.len()]))
            .collect()
    }

    /// Edge ids along an open vertex sequence, or `None` if it is not a path.
    pub fn path_edges(&self, path: &[usize]) -> Option<Vec<usize>> {
        if path.is_empty() || !all_distinct(path) {
            return None;
        }
        path.windows(2).map(|w| self.edge_id(w[0], w[1])).collect()
    }
}

/// One connected component, renumbered from zero.
#[derive(Clone, Debug)]
pub struct ComponentView {
    pub graph: Graph,
    /// Original id of each local vertex (increasing).
    pub vertices: Vec<usize>,
    /// Original id of each local edge.
    pub edges: Vec<usize>,
}

fn all_distinct(seq: &[usize]) -> bool {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

/// Length of a shortest cycle.
pub fn girth(g: &Graph) -> Girth {
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; g.order()];
    let mut via = vec![usize::MAX; g.order()];
    for s in 0..g.order() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &(w, e) in g.neighbors(u) {
                if e == via[u] && u != s {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub non_tree_edge: usize,
    /// Closed vertex sequence starting at one endpoint of the non-tree edge.
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A BFS spanning forest and its fundamental cycles.
#[derive(Clone, Debug)]
pub struct CycleBasis {
    /// Parent vertex and tree edge; `None` at roots.
    pub parent: Vec<Option<(usize, usize)>>,
    pub depth: Vec<usize>,
    /// Vertices in BFS order, component after component.
    pub order: Vec<usize>,
    pub roots: Vec<usize>,
    pub tree_edge: Vec<bool>,
    pub cycles: Vec<FundamentalCycle>,
}

impl CycleBasis {
    /// Vertex sequence of the tree path from `u` to `v` (same component).
    pub fn tree_path(&self, u: usize, v: usize) -> Vec<usize> {
        let (mut a, mut b) = (u, v);
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.depth[a] > self.depth[b] {
            left.push(a);
            a = self.parent[a].unwrap().0;
        }
        while self.depth[b] > self.depth[a] {
            right.push(b);
            b = self.parent[b].unwrap().0;
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = self.parent[a].unwrap().0;
            b = self.parent[b].unwrap().0;
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }
}

pub fn cycle_basis(g: &Graph) -> CycleBasis {
    let n = g.order();
    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut roots = Vec::new();
    let mut tree_edge = vec![false; g.size()];
    for s in 0..n {
        if depth[s] != usize::MAX {
            continue;
        }
        roots.push(s);
        depth[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &(w, e) in g.neighbors(u) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some((u, e));
                    tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = CycleBasis {
        parent,
        depth,
        order,
        roots,
        tree_edge,
        cycles: Vec::new(),
    };
    for e in 0..g.size() {
        if basis.tree_edge[e] {
            continue;
        }
        let (u, v) = g.edge(e);
        let vertices = basis.tree_path(u, v);
        let edges = g
            .cycle_edges(&vertices)
            .expect("tree path closed by a non-tree edge");
        basis.cycles.push(FundamentalCycle {
            non_tree_edge: e,
            vertices,
            edges,
        });
    }
    basis
}

/// Every simple cycle with exactly `len` vertices, each reported once as a
/// vertex sequence that starts at its smallest vertex and continues to the
/// smaller of that vertex's two cycle neighbors. Sorted lexicographically.
pub fn cycles_of_length(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.order() {
        out.extend(cycles_of_length_from(g, len, s));
    }
    out.sort();
    out
}

/// The cycles of [`cycles_of_length`] whose smallest vertex is `start`.
pub fn cycles_of_length_from(g: &Graph, len: usize, start: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len < 3 {
        return out;
    }
    // distances back to `start` inside the subgraph on vertices >= start
    let mut dist = vec![usize::MAX; g.order()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &(w, _) in g.neighbors(u) {
            if w > start && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![start];
    let mut on_path = vec![false; g.order()];
    on_path[start] = true;
    extend_cycle(g, len, start, &dist, &mut path, &mut on_path, &mut out);
    out.sort();
    out
}

fn extend_cycle(
    g: &Graph,
    len: usize,
    start: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() == len {
        if path[1] < last && g.has_edge(last, start) {
            out.push(path.clone());
        }
        return;
    }
    let remaining_after = len - path.len(); // edges still needed after stepping to w, minus the closing one
    for &(w, _) in g.neighbors(last) {
        if w <= start || on_path[w] || dist[w] == usize::MAX {
            continue;
        }
        if dist[w] > remaining_after {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        extend_cycle(g, len, start, dist, path, on_path, out);
        on_path[w] = false;
        path.pop();
    }
}

/// Graphviz rendering; vertices carry their labels when present.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match g.label(v) {
            Some(l) => {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// `C_n` on vertices `0..n` in order.
pub fn cycle_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
}

pub fn complete_graph(t: usize) -> Graph {
    let edges = (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v)));
    Graph::new(t, edges).expect("complete graph")
}

/// `K_{t,t}` with parts `0..t` and `t..2t`; edges in lexicographic order.
pub fn complete_bipartite(s: usize, t: usize) -> Graph {
    let edges = (0..s).flat_map(|u| (0..t).map(move |v| (u, s + v)));
    Graph::new(s + t, edges).expect("complete bipartite graph")
}
