use layercube_core::coloring::{
    check_nice, check_very_nice, direction_coloring, find_very_nice_coloring, EdgeColoring, Verdict,
};
use layercube_core::compression::{compress, SetFamilyPair};
use layercube_core::cube::{edge_layer_graph, Permutation, StarEdge, Vertex};
use layercube_core::embed::{
    decide_layered, embed_from_nice, embed_from_very_nice, verify_cube_embedding,
    verify_layer_embedding,
};
use layercube_core::graph::{cycles_of_length, Graph};
use layercube_core::search::{Budget, Outcome};
use proptest::prelude::*;

fn small_graph(max_order: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order).prop_flat_map(move |n| {
        prop::collection::btree_set((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            let mut edges: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| (u.min(v), u.max(v)))
                .collect();
            edges.sort();
            edges.dedup();
            Graph::new(n, edges).unwrap()
        })
    })
}

fn colored_graph(
    max_order: usize,
    max_edges: usize,
    colors: u64,
) -> impl Strategy<Value = (Graph, EdgeColoring)> {
    small_graph(max_order, max_edges).prop_flat_map(move |g| {
        let m = g.size();
        prop::collection::vec(1..=colors, m).prop_map(move |labels| {
            let c = EdgeColoring::normalized(&g, &labels).unwrap();
            (g.clone(), c)
        })
    })
}

/// Every simple path as a vertex sequence, from every start vertex, with at
/// least one edge. Closed walks back to the start are reported separately.
fn walk_all(
    g: &Graph,
    mut on_path: impl FnMut(&[usize], &[usize]),
    mut on_cycle: impl FnMut(&[usize]),
) {
    fn go(
        g: &Graph,
        path: &mut Vec<usize>,
        edges: &mut Vec<usize>,
        on_path: &mut dyn FnMut(&[usize], &[usize]),
        on_cycle: &mut dyn FnMut(&[usize]),
    ) {
        let last = *path.last().unwrap();
        for &(w, e) in g.neighbors(last) {
            if w == path[0] && path.len() >= 3 && edges.last() != Some(&e) {
                edges.push(e);
                on_cycle(edges);
                edges.pop();
            }
            if path.contains(&w) {
                continue;
            }
            path.push(w);
            edges.push(e);
            on_path(path, edges);
            go(g, path, edges, on_path, on_cycle);
            path.pop();
            edges.pop();
        }
    }
    for s in 0..g.order() {
        go(
            g,
            &mut vec![s],
            &mut Vec::new(),
            &mut on_path,
            &mut on_cycle,
        );
    }
}

fn color_parity(c: &EdgeColoring, edges: &[usize]) -> u128 {
    edges
        .iter()
        .fold(0, |acc, &e| acc ^ (1u128 << (c.color(e) - 1)))
}

fn oracle_nice(g: &Graph, c: &EdgeColoring) -> bool {
    let (mut paths_ok, mut cycles_ok) = (true, true);
    walk_all(
        g,
        |_, edges| paths_ok &= color_parity(c, edges) != 0,
        |edges| cycles_ok &= color_parity(c, edges) == 0,
    );
    paths_ok && cycles_ok
}

fn oracle_very_nice(g: &Graph, c: &EdgeColoring) -> bool {
    if !oracle_nice(g, c) {
        return false;
    }
    let mut ok = true;
    walk_all(
        g,
        |path, edges| {
            let (x, y) = (path[0], path[path.len() - 1]);
            for j in 1..=c.count() {
                if edges.iter().any(|&e| c.color(e) == j) || edges.len() % 2 == 0 {
                    continue;
                }
                let at = |v: usize| {
                    g.neighbors(v)
                        .iter()
                        .filter(|&&(_, e)| c.color(e) == j)
                        .map(|&(_, e)| e)
                        .collect::<Vec<_>>()
                };
                let (ex, ey) = (at(x), at(y));
                if ex.iter().any(|a| ey.iter().any(|b| a != b)) {
                    ok = false;
                }
            }
        },
        |_| {},
    );
    ok
}

/// Layered iff some partition of the edges is a very nice coloring.
fn oracle_layered(g: &Graph) -> bool {
    fn go(g: &Graph, labels: &mut Vec<u64>, used: u64) -> bool {
        if labels.len() == g.size() {
            return oracle_very_nice(g, &EdgeColoring::normalized(g, labels).unwrap());
        }
        for l in 1..=used + 1 {
            labels.push(l);
            let hit = go(g, labels, used.max(l));
            labels.pop();
            if hit {
                return true;
            }
        }
        false
    }
    go(g, &mut Vec::new(), 0)
}

fn random_layered(n: usize, k: usize, keep: &[bool]) -> Graph {
    let layer = edge_layer_graph(n, k).unwrap();
    let ids: Vec<usize> = (0..layer.graph().size())
        .filter(|&e| keep[e % keep.len()])
        .collect();
    layer.edge_subgraph(&ids).graph().clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hamming_is_a_metric(dim in 1usize..=128, a: u128, b: u128, c: u128) {
        let m = if dim == 128 { u128::MAX } else { (1u128 << dim) - 1 };
        let [x, y, z] = [a, b, c].map(|bits| Vertex::from_bits(dim, bits & m).unwrap());
        prop_assert_eq!(x.hamming(&y).unwrap(), (x.bits() ^ y.bits()).count_ones());
        prop_assert_eq!(x.hamming(&y).unwrap(), y.hamming(&x).unwrap());
        prop_assert_eq!(x.hamming(&x).unwrap(), 0);
        prop_assert!(x.hamming(&z).unwrap() <= x.hamming(&y).unwrap() + y.hamming(&z).unwrap());
        prop_assert_eq!(Vertex::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn star_edges_join_adjacent_layers(dim in 1usize..=40, bits: u64, pos in 1usize..=40) {
        let pos = 1 + (pos - 1) % dim;
        let v = Vertex::from_bits(dim, bits as u128 & ((1u128 << dim) - 1)).unwrap();
        let w = v.toggled(pos).unwrap();
        let e = StarEdge::between(&v, &w).unwrap();
        prop_assert_eq!(e.upper().layer(), e.lower().layer() + 1);
        prop_assert_eq!(e.edge_layer(), e.upper().layer());
        prop_assert_eq!(e.direction(), pos);
        prop_assert_eq!(StarEdge::parse(&e.star_string()).unwrap(), e);
    }

    #[test]
    fn prefix_color_ignores_trailing_zeros(dim in 1usize..=60, pad in 0usize..=60, bits: u64, pos in 1usize..=60) {
        let pos = 1 + (pos - 1) % dim;
        let lower = (bits as u128 & ((1u128 << dim) - 1)) & !(1u128 << (pos - 1));
        let short = StarEdge::new(Vertex::from_bits(dim, lower).unwrap(), pos).unwrap();
        let long = StarEdge::new(Vertex::from_bits(dim + pad, lower).unwrap(), pos).unwrap();
        prop_assert_eq!(short.prefix_color(), long.prefix_color());
        prop_assert_eq!(short.prefix_color_permuted(&Permutation::identity(dim)).unwrap(), short.prefix_color());
        let before = (lower & ((1u128 << (pos - 1)) - 1)).count_ones() as i64;
        let after = (lower >> pos).count_ones() as i64;
        prop_assert_eq!(short.prefix_color().value() as i64, (before - after).rem_euclid(3));
    }

    #[test]
    fn nice_check_matches_path_enumeration((g, c) in colored_graph(7, 10, 5)) {
        let report = check_nice(&g, &c).unwrap();
        prop_assert_eq!(report.verdict.passed(), oracle_nice(&g, &c));
        if let Some(w) = report.witness {
            prop_assert!(w.confirms(&g, &c));
        }
    }

    #[test]
    fn very_nice_check_matches_path_enumeration((g, c) in colored_graph(7, 10, 4)) {
        let report = check_very_nice(&g, &c).unwrap();
        let want = match (oracle_nice(&g, &c), oracle_very_nice(&g, &c)) {
            (false, _) => Verdict::NotNice,
            (true, false) => Verdict::NiceNotVeryNice,
            (true, true) => Verdict::VeryNice,
        };
        prop_assert_eq!(report.verdict, want);
        if let Some(w) = report.witness {
            prop_assert!(w.confirms(&g, &c));
        }
    }

    #[test]
    fn nice_colorings_give_cube_embeddings((g, c) in colored_graph(7, 9, 4)) {
        prop_assume!(g.is_connected());
        let nice = check_nice(&g, &c).unwrap().verdict.passed();
        let embedded = embed_from_nice(&g, &c, 0).map(|images| verify_cube_embedding(&g, &images).is_ok());
        prop_assert_eq!(nice, embedded == Ok(true));
        if let Ok(images) = embed_from_nice(&g, &c, 0) {
            prop_assert_eq!(images[0].layer(), 0);
        }
    }

    #[test]
    fn very_nice_search_agrees_with_layer_search(g in small_graph(7, 8)) {
        let by_coloring = find_very_nice_coloring(&g, Budget::UNLIMITED);
        let by_layers = decide_layered(&g, Budget::UNLIMITED);
        prop_assert_eq!(by_coloring.is_found(), by_layers.is_found());
        prop_assert!(!matches!(by_coloring, Outcome::BudgetExhausted));
        prop_assert!(!matches!(by_layers, Outcome::BudgetExhausted));
        prop_assert_eq!(by_layers.is_found(), oracle_layered(&g));
        if let Outcome::Found(c) = by_coloring {
            prop_assert_eq!(check_very_nice(&g, &c).unwrap().verdict, Verdict::VeryNice);
        }
        if let Outcome::Found(emb) = by_layers {
            prop_assert!(verify_layer_embedding(&g, &emb).is_ok());
        }
    }

    #[test]
    fn layeredness_ignores_vertex_names(
        (g, perm) in small_graph(8, 11).prop_flat_map(|g| {
            let ids: Vec<usize> = (0..g.order()).collect();
            (Just(g), Just(ids).prop_shuffle())
        })
    ) {
        let a = decide_layered(&g, Budget::UNLIMITED);
        let b = decide_layered(&g.relabeled(&perm), Budget::UNLIMITED);
        prop_assert_eq!(a.is_found(), b.is_found());
        prop_assert!(!matches!(a, Outcome::BudgetExhausted));
    }

    #[test]
    fn cycles_are_listed_once_in_canonical_form(g in small_graph(8, 12), len in 3usize..=8) {
        let cycles = cycles_of_length(&g, len);
        let mut seen = std::collections::BTreeSet::new();
        for cyc in &cycles {
            prop_assert_eq!(cyc.len(), len);
            prop_assert!(g.cycle_edges(cyc).is_some());
            prop_assert_eq!(cyc[0], *cyc.iter().min().unwrap());
            prop_assert!(cyc[1] < cyc[len - 1]);
            let mut edges = g.cycle_edges(cyc).unwrap();
            edges.sort();
            prop_assert!(seen.insert(edges));
        }
        prop_assert!(cycles.windows(2).all(|w| w[0] < w[1]));
        let mut brute = 0usize;
        walk_all(&g, |_, _| {}, |edges| brute += usize::from(edges.len() == len));
        prop_assert_eq!(brute, 2 * len * cycles.len());
    }

    #[test]
    fn shifting_never_loses_edges(n in 2usize..=6, k in 1usize..=6, up: u64, down: u64, i in 1usize..=6, j in 1usize..=6) {
        let k = 1 + (k - 1) % n;
        let (i, j) = (1 + (i - 1) % n, 1 + (j - 1) % n);
        prop_assume!(i < j);
        let pick = |size: usize, mask: u64| -> Vec<u128> {
            (0u128..1 << n).filter(|s| s.count_ones() as usize == size).enumerate()
                .filter(|(idx, _)| mask >> (idx % 64) & 1 == 1).map(|(_, s)| s).collect()
        };
        let pair = SetFamilyPair::new(n, k, pick(k, up), pick(k - 1, down)).unwrap();
        let shifted = pair.shift(i, j).unwrap();
        prop_assert!(shifted.edge_count() >= pair.edge_count());
        prop_assert_eq!(shifted.upper().len(), pair.upper().len());
        let done = compress(&pair);
        prop_assert!(done.is_left_compressed());
        prop_assert!(done.edge_count() >= pair.edge_count());
    }

    #[test]
    fn layered_round_trip(n in 3usize..=6, k in 1usize..=6, keep in prop::collection::vec(any::<bool>(), 1..40)) {
        let k = 1 + (k - 1) % n;
        let g = random_layered(n, k, &keep);
        let emb = match decide_layered(&g, Budget::UNLIMITED) {
            Outcome::Found(emb) => emb,
            other => return Err(TestCaseError::fail(format!("layer subgraph not recognized: {other:?}"))),
        };
        verify_layer_embedding(&g, &emb).unwrap();
        let c = direction_coloring(&g, &emb).unwrap();
        prop_assert_eq!(check_very_nice(&g, &c).unwrap().verdict, Verdict::VeryNice);
        for part in g.component_subgraphs() {
            let local = EdgeColoring::normalized(&part.graph, &part.edges.iter().map(|&e| c.color(e) as u64).collect::<Vec<_>>()).unwrap();
            let back = embed_from_very_nice(&part.graph, &local, 0).unwrap();
            verify_layer_embedding(&part.graph, &back).unwrap();
            let again = direction_coloring(&part.graph, &back).unwrap();
            prop_assert_eq!(check_very_nice(&part.graph, &again).unwrap().verdict, Verdict::VeryNice);
        }
    }
}
