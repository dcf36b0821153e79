//! Independent oracles for the integration and acceptance suites. Nothing
//! here reuses the library's analysis or search paths: graphs are plain
//! neighbour lists, counts are triple loops, and isomorphism is a direct
//! backtracking search.

// Each test target compiles its own copy and uses a subset.
#![allow(dead_code)]

use deza::Graph;

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Backtracking graph isomorphism for small graphs.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut gs: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut hs: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return false;
    }

    fn extend(g: &Graph, h: &Graph, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
        let v = match map.iter().position(|m| m.is_none()) {
            Some(v) => v,
            None => return true,
        };
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            let consistent = (0..g.order()).all(|u| match map[u] {
                Some(x) => g.adjacent(u, v) == h.adjacent(x, w),
                None => true,
            });
            if !consistent {
                continue;
            }
            map[v] = Some(w);
            used[w] = true;
            if extend(g, h, map, used) {
                return true;
            }
            map[v] = None;
            used[w] = false;
        }
        false
    }

    let mut map = vec![None; n];
    let mut used = vec![false; n];
    extend(g, h, &mut map, &mut used)
}

/// A labeled graph on up to 8 vertices, stored as one adjacency byte per
/// vertex, built from the upper-triangle bit index of `mask`.
#[derive(Clone, Copy)]
pub struct TinyGraph {
    pub n: usize,
    pub rows: [u8; 8],
}

impl TinyGraph {
    pub fn from_mask(n: usize, mask: u32) -> TinyGraph {
        let mut rows = [0u8; 8];
        let mut idx = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> idx & 1 == 1 {
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        TinyGraph { n, rows }
    }
}

/// The strictly-Deza predicate from its definition alone: nonempty regular,
/// common-neighbour counts take at most two values, diameter exactly 2, and
/// the counts do not split along adjacency (not strongly regular; complete
/// graphs count as strongly regular).
pub fn naive_strictly_deza(g: &TinyGraph) -> bool {
    let n = g.n;
    let k = g.rows[0].count_ones();
    if k == 0 || (1..n).any(|v| g.rows[v].count_ones() != k) {
        return false;
    }

    let mut values = [usize::MAX; 3];
    let mut lambda = [usize::MAX; 2];
    let mut mu = [usize::MAX; 2];
    let note = |slots: &mut [usize], c: usize| {
        if !slots.contains(&c) {
            if let Some(free) = slots.iter().position(|&x| x == usize::MAX) {
                slots[free] = c;
            }
        }
    };
    for u in 0..n {
        for v in u + 1..n {
            let c = (g.rows[u] & g.rows[v]).count_ones() as usize;
            note(&mut values, c);
            if g.rows[u] >> v & 1 == 1 {
                note(&mut lambda, c);
            } else {
                note(&mut mu, c);
            }
        }
    }
    if values[2] != usize::MAX {
        return false; // three distinct counts
    }

    // Diameter exactly 2 by BFS from every vertex.
    let full: u16 = (1u16 << n) - 1;
    let mut any_at_two = false;
    for start in 0..n {
        let mut reached: u16 = 1 << start;
        for _ in 0..2 {
            let mut next = reached;
            for v in 0..n {
                if reached >> v & 1 == 1 {
                    next |= g.rows[v] as u16;
                }
            }
            reached = next;
        }
        if reached != full {
            return false; // eccentricity above 2 or disconnected
        }
        if (1 << start | g.rows[start] as u16) != full {
            any_at_two = true;
        }
    }
    if !any_at_two {
        return false; // diameter at most 1
    }

    // Strongly regular iff each of lambda/mu is single-valued (complete
    // graphs have no nonadjacent pair and fall out here as well).
    let single = |slots: &[usize]| slots[1] == usize::MAX;
    !(single(&lambda) && single(&mu))
}

/// Number of labeled graphs on `n <= 7` vertices satisfying the naive
/// strictly-Deza predicate, by exhausting all 2^(n(n-1)/2) edge masks.
pub fn count_strictly_deza_all_labeled(n: usize) -> usize {
    assert!(n <= 7, "the all-labeled sweep is for the small range only");
    let pairs = n * (n - 1) / 2;
    let mut count = 0usize;
    for mask in 0u32..1 << pairs {
        if naive_strictly_deza(&TinyGraph::from_mask(n, mask)) {
            count += 1;
        }
    }
    count
}
