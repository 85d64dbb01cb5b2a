//! Nice and very nice edge-colorings.
//!
//! A coloring is nice when every cycle meets every color an even number of
//! times and every path between distinct vertices meets some color an odd
//! number of times. It is very nice when, in addition, any path joining two
//! edges of the same color and avoiding that color has even length.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::cube::bit;
use crate::embed::{map_component, verify_layer_embedding, EmbeddingViolation, LayerEmbedding};
use crate::graph::{cycle_basis, Graph};
use crate::search::{Budget, Meter, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{got} colors given for {expected} edges")]
    LengthMismatch { expected: usize, got: usize },
    #[error("edge {edge} has color 0; colors start at 1")]
    ZeroColor { edge: usize },
    #[error("color {missing} is unused although larger colors appear")]
    Gap { missing: u32 },
    #[error("{0} colors exceed the supported maximum of 128")]
    TooManyColors(u32),
}

/// A total edge-coloring with colors `1..=count`, each used at least once.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    count: u32,
}

impl EdgeColoring {
    pub fn new(g: &Graph, colors: Vec<u32>) -> Result<Self, ColoringError> {
        if colors.len() != g.size() {
            return Err(ColoringError::LengthMismatch {
                expected: g.size(),
                got: colors.len(),
            });
        }
        Self::from_vec(colors)
    }

    fn from_vec(colors: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some(edge) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor { edge });
        }
        let count = colors.iter().copied().max().unwrap_or(0);
        if count > 128 {
            return Err(ColoringError::TooManyColors(count));
        }
        let mut seen = vec![false; count as usize];
        for &c in &colors {
            seen[c as usize - 1] = true;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(ColoringError::Gap {
                missing: i as u32 + 1,
            });
        }
        Ok(EdgeColoring { colors, count })
    }

    /// Renames arbitrary positive labels to `1..` by order of first use.
    pub fn normalized(g: &Graph, labels: &[u64]) -> Result<Self, ColoringError> {
        if labels.len() != g.size() {
            return Err(ColoringError::LengthMismatch {
                expected: g.size(),
                got: labels.len(),
            });
        }
        let mut names: Vec<u64> = Vec::new();
        let colors = labels
            .iter()
            .map(|l| match names.iter().position(|n| n == l) {
                Some(i) => i as u32 + 1,
                None => {
                    names.push(*l);
                    names.len() as u32
                }
            })
            .collect();
        Self::from_vec(colors)
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Edge ids of color `color`.
    pub fn class(&self, color: u32) -> Vec<usize> {
        (0..self.colors.len())
            .filter(|&e| self.colors[e] == color)
            .collect()
    }

    pub(crate) fn check_matches(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.colors.len() == g.size() {
            Ok(())
        } else {
            Err(ColoringError::LengthMismatch {
                expected: g.size(),
                got: self.colors.len(),
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Nice,
    VeryNice,
    NotNice,
    NiceNotVeryNice,
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Nice | Verdict::VeryNice)
    }
}

/// A concrete violation. Vertex sequences are given in walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A cycle on which `color` appears an odd number of times.
    OddCycle { cycle: Vec<usize>, color: u32 },
    /// A path between distinct vertices on which every color appears an even
    /// number of times.
    EvenPath { path: Vec<usize> },
    /// An odd-length path avoiding `color` from an endpoint of edge `first`
    /// to an endpoint of edge `second`, both of that color.
    OddAvoidingPath {
        path: Vec<usize>,
        color: u32,
        first: usize,
        second: usize,
    },
}

impl Witness {
    /// Re-checks the violation directly against `g` and `c`.
    pub fn confirms(&self, g: &Graph, c: &EdgeColoring) -> bool {
        if c.check_matches(g).is_err() {
            return false;
        }
        let parity = |edges: &[usize]| {
            edges
                .iter()
                .fold(0u128, |acc, &e| acc ^ bit(c.color(e) as u8))
        };
        match self {
            Witness::OddCycle { cycle, color } => match g.cycle_edges(cycle) {
                Some(edges) => {
                    *color >= 1 && *color <= c.count() && parity(&edges) & bit(*color as u8) != 0
                }
                None => false,
            },
            Witness::EvenPath { path } => match g.path_edges(path) {
                Some(edges) => path.len() >= 2 && parity(&edges) == 0,
                None => false,
            },
            Witness::OddAvoidingPath {
                path,
                color,
                first,
                second,
            } => {
                let Some(edges) = g.path_edges(path) else {
                    return false;
                };
                if *first >= g.size() || *second >= g.size() || first == second {
                    return false;
                }
                if c.color(*first) != *color || c.color(*second) != *color {
                    return false;
                }
                let touches = |e: usize, v: usize| {
                    let (a, b) = g.edge(e);
                    a == v || b == v
                };
                edges.len() % 2 == 1
                    && edges.iter().all(|&e| c.color(e) != *color)
                    && touches(*first, path[0])
                    && touches(*second, path[path.len() - 1])
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicenessReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

pub fn check_nice(g: &Graph, c: &EdgeColoring) -> Result<NicenessReport, ColoringError> {
    c.check_matches(g)?;
    let basis = cycle_basis(g);
    for cycle in &basis.cycles {
        let parity = cycle
            .edges
            .iter()
            .fold(0u128, |acc, &e| acc ^ bit(c.color(e) as u8));
        if parity != 0 {
            return Ok(NicenessReport {
                verdict: Verdict::NotNice,
                witness: Some(Witness::OddCycle {
                    cycle: cycle.vertices.clone(),
                    color: parity.trailing_zeros() + 1,
                }),
            });
        }
    }
    let (comp, _) = g.components();
    let mut sig = vec![0u128; g.order()];
    for &v in &basis.order {
        if let Some((p, e)) = basis.parent[v] {
            sig[v] = sig[p] ^ bit(c.color(e) as u8);
        }
    }
    let mut keyed: Vec<(usize, u128, usize)> =
        (0..g.order()).map(|v| (comp[v], sig[v], v)).collect();
    keyed.sort_unstable();
    for w in keyed.windows(2) {
        if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
            return Ok(NicenessReport {
                verdict: Verdict::NotNice,
                witness: Some(Witness::EvenPath {
                    path: basis.tree_path(w[0].2, w[1].2),
                }),
            });
        }
    }
    Ok(NicenessReport {
        verdict: Verdict::Nice,
        witness: None,
    })
}

/// Decides very niceness by building the coloring-driven embedding of each
/// component and checking that it spans at most two consecutive layers.
pub fn check_very_nice(g: &Graph, c: &EdgeColoring) -> Result<NicenessReport, ColoringError> {
    let nice = check_nice(g, c)?;
    if !nice.verdict.passed() {
        return Ok(nice);
    }
    if !components_in_two_layers(g, c.as_slice()) {
        let witness = (1..=c.count())
            .find_map(|j| odd_avoiding_path(g, c.as_slice(), j))
            .expect("an embedding spanning three layers has an odd color-avoiding path");
        return Ok(NicenessReport {
            verdict: Verdict::NiceNotVeryNice,
            witness: Some(witness),
        });
    }
    Ok(NicenessReport {
        verdict: Verdict::VeryNice,
        witness: None,
    })
}

fn components_in_two_layers(g: &Graph, colors: &[u32]) -> bool {
    let mut done = vec![false; g.order()];
    for root in 0..g.order() {
        if done[root] {
            continue;
        }
        let Ok((image, _)) = map_component(g, colors, root) else {
            return false;
        };
        let mut low = u32::MAX;
        let mut high = 0;
        for (v, img) in image.iter().enumerate() {
            if let Some(b) = img {
                done[v] = true;
                low = low.min(b.count_ones());
                high = high.max(b.count_ones());
            }
        }
        if high > low + 1 {
            return false;
        }
    }
    true
}

/// Union-find over the edges with a nonzero color other than `skip`.
fn avoiding_components(g: &Graph, colors: &[u32], skip: u32) -> Vec<usize> {
    let mut root: Vec<usize> = (0..g.order()).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if colors[e] != 0 && colors[e] != skip {
            let (a, b) = (find(&mut root, u), find(&mut root, v));
            root[a] = b;
        }
    }
    (0..g.order()).map(|v| find(&mut root, v)).collect()
}

/// Two endpoints of `color` edges joined by a path avoiding that color with
/// endpoints on different bipartition sides: `(x, e1, y, e2)`.
fn odd_avoiding_pair(
    g: &Graph,
    colors: &[u32],
    side: &[u8],
    color: u32,
) -> Option<(usize, usize, usize, usize)> {
    let comp = avoiding_components(g, colors, color);
    let mut first: Vec<Option<(usize, usize)>> = vec![None; g.order()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if colors[e] != color {
            continue;
        }
        for x in [u, v] {
            match first[comp[x]] {
                None => first[comp[x]] = Some((x, e)),
                Some((y, f)) if side[y] != side[x] => return Some((y, f, x, e)),
                Some(_) => {}
            }
        }
    }
    None
}

fn odd_avoiding_path(g: &Graph, colors: &[u32], color: u32) -> Option<Witness> {
    let side = g.bipartition()?;
    let (x, first, y, second) = odd_avoiding_pair(g, colors, &side, color)?;
    let mut prev = vec![usize::MAX; g.order()];
    prev[x] = x;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.neighbors(u) {
            if colors[e] != color && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![y];
    while *path.last().unwrap() != x {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    Some(Witness::OddAvoidingPath {
        path,
        color,
        first,
        second,
    })
}

/// Searches for a nice coloring with at most `max_colors` colors.
pub fn find_nice_coloring(g: &Graph, max_colors: usize, budget: Budget) -> Outcome<EdgeColoring> {
    search_components(g, max_colors, false, budget)
}

/// Searches for a very nice coloring; equivalent to deciding whether `g`
/// lies in an edge layer.
pub fn find_very_nice_coloring(g: &Graph, budget: Budget) -> Outcome<EdgeColoring> {
    search_components(g, g.size(), true, budget)
}

fn search_components(
    g: &Graph,
    max_colors: usize,
    very: bool,
    budget: Budget,
) -> Outcome<EdgeColoring> {
    let mut meter = Meter::new(budget);
    let mut colors = vec![0u32; g.size()];
    for comp in g.component_subgraphs() {
        match search_component(&comp.graph, max_colors.min(128) as u8, very, &mut meter) {
            Outcome::Found(local) => {
                for (i, &e) in comp.edges.iter().enumerate() {
                    colors[e] = local[i];
                }
            }
            Outcome::NoneExists => return Outcome::NoneExists,
            Outcome::BudgetExhausted => return Outcome::BudgetExhausted,
        }
    }
    match EdgeColoring::new(g, colors) {
        Ok(c) => Outcome::Found(c),
        Err(_) => unreachable!("component colorings use 1..k without gaps"),
    }
}

fn search_component(g: &Graph, max_colors: u8, very: bool, meter: &mut Meter) -> Outcome<Vec<u32>> {
    if g.size() == 0 {
        return Outcome::Found(Vec::new());
    }
    let Some(side) = g.bipartition() else {
        return Outcome::NoneExists;
    };
    let basis = cycle_basis(g);
    let mut s = ColorSearch {
        g,
        order: basis.order.clone(),
        parent: basis.parent.clone(),
        side,
        placed: vec![false; g.order()],
        sig: vec![0; g.order()],
        colors: vec![0; g.size()],
        used: 0,
        max_colors,
        very,
        meter,
    };
    s.placed[s.order[0]] = true;
    match s.place(1) {
        Some(true) => Outcome::Found(s.colors),
        Some(false) => Outcome::NoneExists,
        None => Outcome::BudgetExhausted,
    }
}

struct ColorSearch<'a, 'm> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<Option<(usize, usize)>>,
    side: Vec<u8>,
    placed: Vec<bool>,
    /// Color parity of the tree path from the root.
    sig: Vec<u128>,
    colors: Vec<u32>,
    used: u8,
    max_colors: u8,
    very: bool,
    meter: &'m mut Meter,
}

impl ColorSearch<'_, '_> {
    fn place(&mut self, i: usize) -> Option<bool> {
        if i == self.order.len() {
            return Some(!self.very || components_in_two_layers(self.g, &self.colors));
        }
        if !self.meter.tick() {
            return None;
        }
        let v = self.order[i];
        let (p, tree) = self.parent[v].expect("non-root vertex has a BFS parent");
        let top = if self.used < self.max_colors {
            self.used + 1
        } else {
            self.used
        };
        for d in 1..=top {
            let sig = self.sig[p] ^ bit(d);
            if self.order[..i].iter().any(|&w| self.sig[w] == sig) {
                continue;
            }
            let mut forced = Vec::new();
            let mut ok = true;
            for &(w, e) in self.g.neighbors(v) {
                if e == tree || !self.placed[w] {
                    continue;
                }
                let diff = self.sig[w] ^ sig;
                if diff.count_ones() != 1 {
                    ok = false;
                    break;
                }
                forced.push((e, diff.trailing_zeros() + 1));
            }
            if !ok {
                continue;
            }
            let fresh = d > self.used;
            if fresh {
                self.used += 1;
            }
            self.colors[tree] = d as u32;
            for &(e, c) in &forced {
                self.colors[e] = c;
            }
            if !self.very || self.partial_very_nice() {
                self.sig[v] = sig;
                self.placed[v] = true;
                let r = self.place(i + 1);
                self.placed[v] = false;
                match r {
                    Some(false) => {}
                    other => return other,
                }
            }
            self.colors[tree] = 0;
            for &(e, _) in &forced {
                self.colors[e] = 0;
            }
            if fresh {
                self.used -= 1;
            }
        }
        Some(false)
    }

    fn partial_very_nice(&self) -> bool {
        (1..=self.used as u32)
            .all(|j| odd_avoiding_pair(self.g, &self.colors, &self.side, j).is_none())
    }
}

/// Colors each edge by the direction of its image, renumbering the
/// directions that occur to `1..` in increasing order.
pub fn direction_coloring(
    g: &Graph,
    emb: &LayerEmbedding,
) -> Result<EdgeColoring, EmbeddingViolation> {
    verify_layer_embedding(g, emb)?;
    let dirs: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| (emb.image(u).bits() ^ emb.image(v).bits()).trailing_zeros() + 1)
        .collect();
    let used = dirs.iter().fold(0u128, |acc, &d| acc | bit(d as u8));
    let colors = dirs
        .iter()
        .map(|&d| (used & (bit(d as u8) - 1)).count_ones() + 1)
        .collect();
    Ok(EdgeColoring::new(g, colors).expect("directions renumbered without gaps"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassCut {
    pub color: u32,
    /// Deleting the class increases the number of components.
    pub is_cut: bool,
    /// The class is a matching with no graph edge between two of its edges.
    pub induced_matching: bool,
}

pub fn color_class_cut_check(g: &Graph, c: &EdgeColoring) -> Result<Vec<ClassCut>, ColoringError> {
    c.check_matches(g)?;
    let (_, before) = g.components();
    let mut out = Vec::new();
    for color in 1..=c.count() {
        let keep: Vec<usize> = (0..g.size()).filter(|&e| c.color(e) != color).collect();
        let (_, after) = g.edge_subgraph(&keep).components();
        let class = c.class(color);
        let mut owner = vec![usize::MAX; g.order()];
        let mut matching = true;
        for (i, &e) in class.iter().enumerate() {
            let (u, v) = g.edge(e);
            for x in [u, v] {
                if owner[x] != usize::MAX {
                    matching = false;
                }
                owner[x] = i;
            }
        }
        let induced = matching
            && g.edges().iter().all(|&(u, v)| {
                owner[u] == usize::MAX || owner[v] == usize::MAX || owner[u] == owner[v]
            });
        out.push(ClassCut {
            color,
            is_cut: after > before,
            induced_matching: induced,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{decide_layered, embed_from_very_nice};
    use crate::graph::{complete_bipartite, cycle_graph, path_graph};

    fn col(g: &Graph, c: &[u32]) -> EdgeColoring {
        EdgeColoring::new(g, c.to_vec()).unwrap()
    }

    #[test]
    fn coloring_validation() {
        let g = path_graph(3);
        assert_eq!(
            EdgeColoring::new(&g, vec![1]),
            Err(ColoringError::LengthMismatch {
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            EdgeColoring::new(&g, vec![0, 1]),
            Err(ColoringError::ZeroColor { edge: 0 })
        );
        assert_eq!(
            EdgeColoring::new(&g, vec![1, 3]),
            Err(ColoringError::Gap { missing: 2 })
        );
        let n = EdgeColoring::normalized(&g, &[7, 3]).unwrap();
        assert_eq!(n.as_slice(), &[1, 2]);
        assert_eq!(n.class(2), vec![1]);
    }

    #[test]
    fn nice_examples() {
        let c4 = cycle_graph(4);
        assert_eq!(
            check_nice(&c4, &col(&c4, &[1, 2, 1, 2])).unwrap().verdict,
            Verdict::Nice
        );
        let bad = col(&c4, &[1, 2, 3, 4]);
        let r = check_nice(&c4, &bad).unwrap();
        assert_eq!(r.verdict, Verdict::NotNice);
        let w = r.witness.unwrap();
        assert!(matches!(&w, Witness::OddCycle { cycle, .. } if cycle.len() == 4));
        assert!(w.confirms(&c4, &bad));
        let p = path_graph(3);
        let same = col(&p, &[1, 1]);
        let r = check_nice(&p, &same).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::EvenPath {
                path: vec![0, 1, 2]
            })
        );
        assert!(r.witness.unwrap().confirms(&p, &same));
    }

    #[test]
    fn very_nice_examples() {
        let c6 = cycle_graph(6);
        assert_eq!(
            check_very_nice(&c6, &col(&c6, &[1, 2, 3, 1, 2, 3]))
                .unwrap()
                .verdict,
            Verdict::VeryNice
        );
        let c8 = cycle_graph(8);
        assert_eq!(
            check_very_nice(&c8, &col(&c8, &[2, 1, 3, 2, 4, 3, 1, 4]))
                .unwrap()
                .verdict,
            Verdict::VeryNice
        );
        let cyclic = col(&c8, &[1, 2, 3, 4, 1, 2, 3, 4]);
        let r = check_very_nice(&c8, &cyclic).unwrap();
        assert_eq!(r.verdict, Verdict::NiceNotVeryNice);
        assert!(r.witness.unwrap().confirms(&c8, &cyclic));
        let c4 = cycle_graph(4);
        let c = col(&c4, &[1, 2, 1, 2]);
        let r = check_very_nice(&c4, &c).unwrap();
        assert_eq!(r.verdict, Verdict::NiceNotVeryNice);
        assert!(r.witness.unwrap().confirms(&c4, &c));
    }

    #[test]
    fn searches() {
        assert_eq!(
            find_nice_coloring(&complete_bipartite(2, 3), 6, Budget::UNLIMITED),
            Outcome::NoneExists
        );
        let edge = path_graph(2);
        assert_eq!(
            find_nice_coloring(&edge, 1, Budget::UNLIMITED)
                .found()
                .unwrap()
                .count(),
            1
        );
        assert_eq!(
            find_very_nice_coloring(&cycle_graph(4), Budget::UNLIMITED),
            Outcome::NoneExists
        );
        let c6 = cycle_graph(6);
        let c = find_very_nice_coloring(&c6, Budget::UNLIMITED)
            .found()
            .unwrap();
        assert_eq!(c.count(), 3);
        assert_eq!(check_very_nice(&c6, &c).unwrap().verdict, Verdict::VeryNice);
        assert_eq!(
            find_nice_coloring(&cycle_graph(8), 12, Budget::nodes(1)),
            Outcome::BudgetExhausted
        );
        assert_eq!(
            find_nice_coloring(&cycle_graph(5), 5, Budget::UNLIMITED),
            Outcome::NoneExists
        );
    }

    #[test]
    fn disconnected_colors_reuse_ids() {
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let c = find_nice_coloring(&g, 3, Budget::UNLIMITED)
            .found()
            .unwrap();
        assert_eq!(c.count(), 2);
        assert_eq!(check_nice(&g, &c).unwrap().verdict, Verdict::Nice);
    }

    #[test]
    fn direction_coloring_round_trip() {
        let c6 = cycle_graph(6);
        let sets: [&[usize]; 6] = [&[2], &[1, 2], &[1], &[1, 3], &[3], &[2, 3]];
        let images = sets
            .iter()
            .map(|s| crate::cube::Vertex::from_positions(3, s.iter().copied()).unwrap())
            .collect();
        let emb = LayerEmbedding::new(3, 2, images).unwrap();
        let c = direction_coloring(&c6, &emb).unwrap();
        assert_eq!(c.as_slice(), &[1, 2, 3, 1, 2, 3]);
        let found = decide_layered(&c6, Budget::UNLIMITED).found().unwrap();
        let c = direction_coloring(&c6, &found).unwrap();
        assert_eq!(check_very_nice(&c6, &c).unwrap().verdict, Verdict::VeryNice);
        let back = embed_from_very_nice(&c6, &c, 0).unwrap();
        verify_layer_embedding(&c6, &back).unwrap();
    }

    #[test]
    fn cuts() {
        let c6 = cycle_graph(6);
        let cuts = color_class_cut_check(&c6, &col(&c6, &[1, 2, 3, 1, 2, 3])).unwrap();
        assert!(cuts.iter().all(|k| k.is_cut && k.induced_matching));
        let tree = Graph::new(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let cuts = color_class_cut_check(&tree, &col(&tree, &[1, 2, 3])).unwrap();
        assert!(cuts.iter().all(|k| k.is_cut && k.induced_matching));
        let p4 = path_graph(4);
        let cuts = color_class_cut_check(&p4, &col(&p4, &[1, 2, 1])).unwrap();
        assert!(cuts[0].is_cut && !cuts[0].induced_matching);
    }
}
