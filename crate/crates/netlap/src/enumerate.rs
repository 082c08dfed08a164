//! Exhaustive and random generation of small test graphs.
//!
//! Labeled enumeration over all `2^(n(n-1)/2)` adjacency masks, filtered down
//! to connected simple graphs with minimum degree two. Exhaustive up to
//! `n = 7` (about 1.5 million surviving graphs); used by the verification
//! suites, not meant for larger `n`.

use crate::graph::MetricGraph;
use rand::Rng;

/// Bit index of the vertex pair `(i, j)`, `i < j`, in an adjacency mask.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Edge list encoded by an adjacency mask.
pub fn mask_to_edges(n: usize, mask: u64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if mask & (1 << pair_bit(n, i, j)) != 0 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Fast check on the raw mask: every degree at least two and connected.
pub fn mask_is_valid(n: usize, mask: u64) -> bool {
    let mut rows = [0u8; 8];
    for i in 0..n {
        for j in (i + 1)..n {
            if mask & (1 << pair_bit(n, i, j)) != 0 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    if rows[..n].iter().any(|r| r.count_ones() < 2) {
        return false;
    }
    // Bitmask BFS from vertex 0.
    let all = ((1u16 << n) - 1) as u8;
    let mut seen: u8 = 1;
    loop {
        let mut next = seen;
        for i in 0..n {
            if seen & (1 << i) != 0 {
                next |= rows[i];
            }
        }
        if next == seen {
            return seen == all;
        }
        seen = next;
    }
}

/// All connected simple graphs with minimum degree two on `n` labeled
/// vertices, with unit weights. Exhaustive over labeled graphs.
pub fn connected_min_degree_two(n: usize) -> impl Iterator<Item = MetricGraph> {
    assert!((3..=7).contains(&n), "enumeration supports 3 <= n <= 7");
    let bits = n * (n - 1) / 2;
    (0u64..(1 << bits)).filter_map(move |mask| {
        if !mask_is_valid(n, mask) {
            return None;
        }
        Some(
            MetricGraph::from_edge_list(n, &mask_to_edges(n, mask))
                .expect("mask pre-filter guarantees validity"),
        )
    })
}

/// Raw masks of valid graphs; cheaper than building `MetricGraph`s when the
/// caller only needs a count or wants its own construction.
pub fn valid_masks(n: usize) -> impl Iterator<Item = u64> {
    assert!((3..=7).contains(&n));
    let bits = n * (n - 1) / 2;
    (0u64..(1 << bits)).filter(move |&mask| mask_is_valid(n, mask))
}

/// Random connected graph with minimum degree two: a Hamilton cycle on the
/// `n` vertices plus a random set of chords.
pub fn random_connected_min_deg2<R: Rng>(n: usize, rng: &mut R) -> MetricGraph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            let on_cycle = j == i + 1 || (i == 0 && j == n - 1);
            if !on_cycle && rng.random_bool(0.35) {
                edges.push((i, j));
            }
        }
    }
    MetricGraph::from_edge_list(n, &edges).expect("cycle plus chords is valid")
}

/// Random weighted variant: same topology generator, `c` and `mu` drawn from
/// the given ranges.
pub fn random_weighted<R: Rng>(
    n: usize,
    c_range: (f64, f64),
    mu_range: (f64, f64),
    rng: &mut R,
) -> MetricGraph {
    let g = random_connected_min_deg2(n, rng);
    let edges: Vec<(usize, usize, f64, f64)> = g
        .edges()
        .iter()
        .map(|e| {
            (
                e.tail,
                e.head,
                rng.random_range(c_range.0..c_range.1),
                rng.random_range(mu_range.0..mu_range.1),
            )
        })
        .collect();
    MetricGraph::from_weighted_edge_list(n, &edges).expect("weights positive")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_n() {
        // n = 3: only K3. n = 4: C4 (3 labelings), diamond (6), K4 (1).
        assert_eq!(connected_min_degree_two(3).count(), 1);
        assert_eq!(connected_min_degree_two(4).count(), 10);
    }

    #[test]
    fn enumerated_graphs_are_valid() {
        for g in connected_min_degree_two(5) {
            assert!(g.degrees().iter().all(|&d| d >= 2));
            assert_eq!(g.vertex_count(), 5);
        }
    }

    #[test]
    fn random_generator_yields_valid_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_connected_min_deg2(6, &mut rng);
            assert!(g.degrees().iter().all(|&d| d >= 2));
        }
    }
}
