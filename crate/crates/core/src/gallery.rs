//! Named graphs: theta graphs, `K_{2,3}`, even cycles and the girth 8 graph
//! `G_8` that is cubical but not layered.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::cube::{hypercube_graph, CubeError, Vertex};
use crate::embed::decide_layered;
use crate::graph::{complete_bipartite, complete_graph, cycle_graph, path_graph, Graph};
use crate::search::{Budget, Outcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalleryError {
    #[error("a theta graph needs at least 2 legs, got {0}")]
    TooFewLegs(usize),
    #[error("leg {leg} has length {length}; legs need length >= 2")]
    ShortLeg { leg: usize, length: usize },
    #[error("the leg-index coloring needs legs of one length >= 3")]
    RecipeShape,
    #[error("unknown gallery graph `{0}`")]
    UnknownName(String),
    #[error("bad parameters in `{0}`")]
    BadParameters(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Cube(#[from] CubeError),
}

/// A theta graph with its poles and legs.
///
/// Vertex 0 is the first pole, vertex 1 the second; the inner vertices of
/// each leg follow, leg by leg, in order from the first pole. Edges are
/// listed leg by leg in walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theta {
    pub graph: Graph,
    pub lengths: Vec<usize>,
    /// Each leg as its full vertex sequence from pole 0 to pole 1.
    pub legs: Vec<Vec<usize>>,
}

impl Theta {
    pub const POLES: (usize, usize) = (0, 1);

    /// Edge ids of leg `i` in walking order.
    pub fn leg_edges(&self, i: usize) -> Vec<usize> {
        self.graph.path_edges(&self.legs[i]).expect("leg is a path")
    }
}

pub fn theta(lengths: &[usize]) -> Result<Theta, GalleryError> {
    if lengths.len() < 2 {
        return Err(GalleryError::TooFewLegs(lengths.len()));
    }
    if let Some((leg, &length)) = lengths.iter().enumerate().find(|&(_, &l)| l < 2) {
        return Err(GalleryError::ShortLeg { leg, length });
    }
    let mut next = 2;
    let mut legs = Vec::with_capacity(lengths.len());
    let mut edges = Vec::new();
    for &l in lengths {
        let mut leg = vec![0];
        leg.extend(next..next + l - 1);
        next += l - 1;
        leg.push(1);
        edges.extend(leg.windows(2).map(|w| (w[0], w[1])));
        legs.push(leg);
    }
    let graph = Graph::new(next, edges).expect("theta graph");
    Ok(Theta {
        graph,
        lengths: lengths.to_vec(),
        legs,
    })
}

/// The coloring that shows a theta graph with `t` legs of length `m >= 3`
/// is cubical: both pole edges of leg `i` get color `i`, and the inner edges
/// at distance `k` from pole 0 share color `t + k`.
pub fn theta_leg_coloring(th: &Theta) -> Result<EdgeColoring, GalleryError> {
    let t = th.lengths.len();
    let m = th.lengths[0];
    if m < 3 || th.lengths.iter().any(|&l| l != m) {
        return Err(GalleryError::RecipeShape);
    }
    let mut colors = vec![0u32; th.graph.size()];
    for i in 0..t {
        let edges = th.leg_edges(i);
        for (k, &e) in edges.iter().enumerate() {
            colors[e] = if k == 0 || k == m - 1 {
                i as u32 + 1
            } else {
                (t + k) as u32
            };
        }
    }
    Ok(EdgeColoring::new(&th.graph, colors)?)
}

/// `G_8`, with its distinguished vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G8 {
    pub graph: Graph,
    pub a: usize,
    pub a_prime: usize,
    pub u: usize,
    pub u_prime: usize,
}

/// Theta graph with three legs of length 4 on poles `a, a'`, plus a path of
/// length 4 joining the neighbor `u` of `a` on leg 1 to the neighbor `u'`
/// of `a'` on leg 2.
pub fn g8() -> G8 {
    let th = theta(&[4, 4, 4]).expect("theta");
    let u = th.legs[0][1];
    let u_prime = th.legs[1][3];
    let n = th.graph.order();
    let mut edges = th.graph.edges().to_vec();
    edges.extend([(u, n), (n, n + 1), (n + 1, n + 2), (n + 2, u_prime)]);
    let graph = Graph::new(n + 3, edges).expect("g8");
    G8 {
        graph,
        a: 0,
        a_prime: 1,
        u,
        u_prime,
    }
}

/// A fixed embedding of [`g8`] into `Q_5`, as bit masks (bit 0 is
/// coordinate 1). Coordinate 5 is unused: the graph already fits in `Q_4`.
pub const G8_Q5: [u8; 14] = [0, 10, 1, 3, 11, 2, 6, 14, 4, 12, 8, 5, 7, 15];

pub fn g8_q5_images() -> Vec<Vertex> {
    G8_Q5
        .iter()
        .map(|&b| Vertex::from_bits(5, b as u128).expect("5-bit vertex"))
        .collect()
}

pub fn k23() -> Graph {
    complete_bipartite(2, 3)
}

/// Looks up a graph by name: `g8`, `k23`, `theta:l1,l2,...`, `cycle:n`,
/// `path:n`, `complete:n`, `bipartite:s,t`, `cube:n`, `star:n`.
pub fn by_name(name: &str) -> Result<Graph, GalleryError> {
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let bad = || GalleryError::BadParameters(String::from(name));
    let nums = || -> Result<Vec<usize>, GalleryError> {
        args.ok_or_else(bad)?
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect()
    };
    let one = || -> Result<usize, GalleryError> {
        match nums()?.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad()),
        }
    };
    match head {
        "g8" if args.is_none() => Ok(g8().graph),
        "k23" if args.is_none() => Ok(k23()),
        "theta" => Ok(theta(&nums()?)?.graph),
        "cycle" => match one()? {
            n if n >= 3 => Ok(cycle_graph(n)),
            _ => Err(bad()),
        },
        "path" => match one()? {
            n if n >= 1 => Ok(path_graph(n)),
            _ => Err(bad()),
        },
        "complete" => Ok(complete_graph(one()?)),
        "bipartite" => match nums()?.as_slice() {
            [s, t] => Ok(complete_bipartite(*s, *t)),
            _ => Err(bad()),
        },
        "star" => Ok(complete_bipartite(1, one()?)),
        "cube" => match one()? {
            n if n <= 12 => Ok(hypercube_graph(n)?.graph().clone()),
            _ => Err(bad()),
        },
        _ => Err(GalleryError::UnknownName(String::from(name))),
    }
}

/// Names used by the round trip and recognition tests.
pub fn standard_names() -> Vec<String> {
    let mut out: Vec<String> = [
        "g8", "k23", "cycle:4", "cycle:6", "cycle:8", "cycle:10", "cycle:12", "path:5", "star:3",
    ]
    .iter()
    .map(|s| String::from(*s))
    .collect();
    for spec in [
        "2,2", "3,3,3", "4,4,4", "3,3", "3,5", "4,4", "2,4,4", "3,3,3,3", "5,5,5",
    ] {
        out.push(format!("theta:{spec}"));
    }
    out.push(String::from("cube:3"));
    out.push(String::from("bipartite:2,2"));
    out
}

/// Outcome of the pole distance check for a theta graph with `t` legs of
/// length `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PoleAudit {
    /// Not layered, so there is nothing to check.
    NotLayered,
    /// Layered, with the Hamming distance between the pole images.
    Layered {
        distance: u32,
        below_m: bool,
    },
    BudgetExhausted,
}

impl PoleAudit {
    pub fn holds(&self) -> bool {
        match self {
            PoleAudit::NotLayered => true,
            PoleAudit::Layered { below_m, .. } => *below_m,
            PoleAudit::BudgetExhausted => false,
        }
    }
}

/// If the theta graph with `t` legs of length `m` lies in a layer, the
/// images of its poles are at distance less than `m` (for `t > ⌈m/2⌉`).
pub fn theta_pole_distance_audit(
    t: usize,
    m: usize,
    budget: Budget,
) -> Result<PoleAudit, GalleryError> {
    if t <= m.div_ceil(2) {
        return Err(GalleryError::BadParameters(format!(
            "t = {t} must exceed ceil({m}/2)"
        )));
    }
    let th = theta(&vec![m; t])?;
    Ok(match decide_layered(&th.graph, budget) {
        Outcome::Found(emb) => {
            let (a, b) = Theta::POLES;
            let distance = emb.image(a).hamming(&emb.image(b))?;
            PoleAudit::Layered {
                distance,
                below_m: (distance as usize) < m,
            }
        }
        Outcome::NoneExists => PoleAudit::NotLayered,
        Outcome::BudgetExhausted => PoleAudit::BudgetExhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{check_nice, find_nice_coloring, Verdict};
    use crate::embed::{embed_from_nice, verify_cube_embedding};
    use crate::graph::{girth, Girth};

    #[test]
    fn theta_counts() {
        let c4 = theta(&[2, 2]).unwrap();
        assert_eq!((c4.graph.order(), c4.graph.size()), (4, 4));
        let k = theta(&[2, 2, 2]).unwrap();
        assert_eq!((k.graph.order(), k.graph.size()), (5, 6));
        assert!(k.graph.edges().iter().all(|&(u, v)| (u < 2) != (v < 2)));
        let t3 = theta(&[3, 3, 3]).unwrap();
        assert_eq!((t3.graph.order(), t3.graph.size()), (8, 9));
        assert_eq!(theta(&[3]), Err(GalleryError::TooFewLegs(1)));
        assert_eq!(
            theta(&[3, 1]),
            Err(GalleryError::ShortLeg { leg: 1, length: 1 })
        );
    }

    #[test]
    fn leg_coloring_is_nice() {
        for t in 2..=5 {
            for m in 3..=5 {
                let th = theta(&vec![m; t]).unwrap();
                let c = theta_leg_coloring(&th).unwrap();
                assert_eq!(
                    check_nice(&th.graph, &c).unwrap().verdict,
                    Verdict::Nice,
                    "t={t} m={m}"
                );
            }
        }
        assert_eq!(
            theta_leg_coloring(&theta(&[2, 2]).unwrap()),
            Err(GalleryError::RecipeShape)
        );
    }

    #[test]
    fn g8_shape() {
        let g = g8();
        assert_eq!((g.graph.order(), g.graph.size()), (14, 16));
        assert_eq!(girth(&g.graph), Girth::Finite(8));
        assert!(g.graph.has_edge(g.a, g.u) && g.graph.has_edge(g.a_prime, g.u_prime));
        verify_cube_embedding(&g.graph, &g8_q5_images()).unwrap();
    }

    #[test]
    fn g8_fixture_from_search() {
        let g = g8().graph;
        let c = find_nice_coloring(&g, 5, Budget::default())
            .found()
            .unwrap();
        let images = embed_from_nice(&g, &c, 0).unwrap();
        verify_cube_embedding(&g, &images).unwrap();
        assert!(images[0].dim() <= 5);
    }

    #[test]
    fn names() {
        let k = by_name("theta:2,2,2").unwrap();
        assert_eq!((k.order(), k.size()), (k23().order(), k23().size()));
        assert_eq!(by_name("cycle:6").unwrap().size(), 6);
        assert!(matches!(
            by_name("bogus"),
            Err(GalleryError::UnknownName(_))
        ));
        assert!(matches!(
            by_name("cycle:x"),
            Err(GalleryError::BadParameters(_))
        ));
        for n in standard_names() {
            by_name(&n).unwrap();
        }
    }

    #[test]
    fn pole_audits() {
        assert_eq!(
            theta_pole_distance_audit(3, 3, Budget::default()).unwrap(),
            PoleAudit::NotLayered
        );
        let a = theta_pole_distance_audit(3, 4, Budget::default()).unwrap();
        assert!(a.holds(), "{a:?}");
        assert!(theta_pole_distance_audit(2, 4, Budget::default()).is_err());
    }
}
