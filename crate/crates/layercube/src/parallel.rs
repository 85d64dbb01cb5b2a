//! Rayon drivers for the exhaustive checks.

use layercube_core::c10::{verify_no_mono_c10_with, C10Error, C10Report, PermutationCover};
use layercube_core::graph::{cycles_of_length_from, Graph};
use rayon::prelude::*;

/// Same output as `cycles_of_length`, sharded over start vertices.
pub fn cycles_of_length_par(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.order())
        .into_par_iter()
        .flat_map_iter(|s| cycles_of_length_from(g, len, s))
        .collect();
    out.sort();
    out
}

/// [`verify_no_mono_c10_with`] using the parallel enumerator.
pub fn verify_no_mono_c10_par(cover: &PermutationCover) -> Result<C10Report, C10Error> {
    verify_no_mono_c10_with(cover, |g| cycles_of_length_par(g, 10))
}

/// Runs `f` on a pool of `threads` workers (0 = rayon's default).
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use layercube_core::c10::{build_cover, verify_no_mono_c10};
    use layercube_core::cube::hypercube_graph;
    use layercube_core::graph::cycles_of_length;

    #[test]
    fn matches_sequential() {
        let q = hypercube_graph(4).unwrap();
        for len in [4, 6, 8] {
            assert_eq!(
                cycles_of_length_par(q.graph(), len),
                cycles_of_length(q.graph(), len)
            );
        }
        let cover = build_cover(5, 0).unwrap();
        assert_eq!(
            verify_no_mono_c10_par(&cover).unwrap(),
            verify_no_mono_c10(&cover).unwrap()
        );
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let q = hypercube_graph(4).unwrap();
        let one = with_threads(1, || cycles_of_length_par(q.graph(), 6));
        let four = with_threads(4, || cycles_of_length_par(q.graph(), 6));
        assert_eq!(one, four);
    }
}
