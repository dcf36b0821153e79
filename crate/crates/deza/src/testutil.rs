//! Small helpers shared by the unit tests. Everything here is deliberately
//! naive so it can serve as an independent cross-check.

use crate::graph::Graph;

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
        edges.push((i, 5 + i)); // spokes
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Common-neighbour counts over all unordered pairs, computed from plain
/// neighbour lists.
pub fn brute_force_pair_counts(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| u != v && g.adjacent(u, v)).collect())
        .collect();
    let mut counts = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            counts.push(nbrs[u].iter().filter(|w| nbrs[v].contains(w)).count());
        }
    }
    counts
}

/// Backtracking graph isomorphism for small graphs: degree-compatible
/// assignment with full adjacency consistency at every step.
pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut gd: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    {
        let mut gs = gd.clone();
        let mut hs = hd.clone();
        gs.sort_unstable();
        hs.sort_unstable();
        if gs != hs {
            return false;
        }
    }
    gd.truncate(n);
    hd.truncate(n);

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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iso_oracle_sanity() {
        let c5 = Graph::cycle(5).unwrap();
        let relabeled = c5.permute(&[3, 1, 4, 0, 2]).unwrap();
        assert!(isomorphic(&c5, &relabeled));
        assert!(isomorphic(&c5, &c5.complement()));
        assert!(!isomorphic(&c5, &Graph::path(5).unwrap()));
    }
}
