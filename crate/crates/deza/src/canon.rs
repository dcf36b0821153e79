//! Exact canonical labeling by individualization and refinement.
//!
//! The canonical form of a graph is the lexicographically largest
//! upper-triangle adjacency bit string over the leaf orderings of a search
//! tree: vertices are first partitioned by degree, the partition is refined
//! to equitability (splitting cells by neighbour counts against every cell,
//! sub-cells ordered by their count signature), and the first remaining
//! non-singleton cell is branched on by individualizing each of its
//! members. Discovered automorphisms prune sibling branches. Every ordering
//! decision depends only on label-invariant data, so two graphs get equal
//! forms exactly when they are isomorphic; this exactness is what makes the
//! form usable as an isomorphism-class key.

use std::fmt;

use crate::graph::Graph;

/// Label-invariant key for an isomorphism class: the graph6 record of the
/// canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_graph6(&self) -> &str {
        &self.0
    }

    pub fn into_graph6(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(canonical_graph(g).to_graph6())
}

/// The canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut relabeling = vec![0usize; g.order()];
    for (pos, &v) in order.iter().enumerate() {
        relabeling[v] = pos;
    }
    g.permute(&relabeling)
        .expect("canonical order is a permutation")
}

/// Position-to-vertex ordering realizing the canonical form.
fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 1 {
        return vec![0];
    }
    let mut searcher = Searcher {
        g,
        best_key: Vec::new(),
        best_order: Vec::new(),
        automorphisms: Vec::new(),
        orbit: (0..n).collect(),
        path: Vec::new(),
    };
    let mut initial = initial_partition(g);
    refine(g, &mut initial);
    searcher.search(initial);
    searcher.best_order
}

/// Cells grouped by degree, ascending.
fn initial_partition(g: &Graph) -> Vec<Vec<usize>> {
    let mut by_degree: Vec<(usize, usize)> = g.vertices().map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(cell) if g.degree(cell[0]) == d => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

/// Refines to an equitable ordered partition: repeatedly splits any cell
/// whose members see different cell-count signatures, ordering the
/// sub-cells by signature so the result is label-invariant.
fn refine(g: &Graph, partition: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u64> = partition
            .iter()
            .map(|cell| cell.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let signature =
            |v: usize| -> Vec<u32> { masks.iter().map(|&m| (g.row(v) & m).count_ones()).collect() };

        let mut split: Option<(usize, Vec<Vec<usize>>)> = None;
        for (idx, cell) in partition.iter().enumerate() {
            if cell.len() == 1 {
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                cell.iter().map(|&v| (signature(v), v)).collect();
            if keyed.iter().skip(1).all(|(s, _)| *s == keyed[0].0) {
                continue;
            }
            keyed.sort();
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for (sig, v) in keyed {
                match groups.last_mut() {
                    Some(group) if signature(group[0]) == sig => group.push(v),
                    _ => groups.push(vec![v]),
                }
            }
            split = Some((idx, groups));
            break;
        }
        match split {
            Some((idx, groups)) => {
                partition.splice(idx..=idx, groups);
            }
            None => return,
        }
    }
}

struct Searcher<'g> {
    g: &'g Graph,
    best_key: Vec<u64>,
    best_order: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
    /// Union-find over vertices, merged along discovered automorphisms;
    /// valid for pruning where the individualization path is empty.
    orbit: Vec<usize>,
    path: Vec<usize>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

impl Searcher<'_> {
    fn search(&mut self, partition: Vec<Vec<usize>>) {
        let target = partition.iter().position(|cell| cell.len() > 1);
        let Some(idx) = target else {
            let order: Vec<usize> = partition.iter().map(|cell| cell[0]).collect();
            self.leaf(order);
            return;
        };

        let candidates = partition[idx].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if self.redundant(&tried, v) {
                tried.push(v);
                continue;
            }
            let mut child = partition.clone();
            let rest: Vec<usize> = child[idx].iter().copied().filter(|&u| u != v).collect();
            child[idx] = vec![v];
            child.insert(idx + 1, rest);
            refine(self.g, &mut child);
            self.path.push(v);
            self.search(child);
            self.path.pop();
            tried.push(v);
        }
    }

    /// Whether exploring `v` is provably redundant given already-tried
    /// siblings: some recorded automorphism fixing the current path maps a
    /// tried sibling to `v`. At the root the orbit closure is used instead.
    fn redundant(&mut self, tried: &[usize], v: usize) -> bool {
        if tried.is_empty() {
            return false;
        }
        if self.path.is_empty() {
            let root = self.find(v);
            return tried.iter().any(|&u| self.find(u) == root);
        }
        self.automorphisms.iter().any(|gamma| {
            self.path.iter().all(|&p| gamma[p] == p) && tried.iter().any(|&u| gamma[u] == v)
        })
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let key = self.key_of(&order);
        if self.best_key.is_empty() || key > self.best_key {
            self.best_key = key;
            self.best_order = order;
        } else if key == self.best_key {
            let n = self.g.order();
            let mut gamma = vec![0usize; n];
            let mut inverse = vec![0usize; n];
            for p in 0..n {
                gamma[order[p]] = self.best_order[p];
                inverse[self.best_order[p]] = order[p];
            }
            self.record(gamma);
            self.record(inverse);
        }
    }

    fn record(&mut self, gamma: Vec<usize>) {
        for (v, &image) in gamma.iter().enumerate() {
            self.union(v, image);
        }
        if self.automorphisms.len() < MAX_STORED_AUTOMORPHISMS {
            self.automorphisms.push(gamma);
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.orbit[v] != v {
            let root = self.find(self.orbit[v]);
            self.orbit[v] = root;
        }
        self.orbit[v]
    }

    fn union(&mut self, u: usize, v: usize) {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru != rv {
            self.orbit[ru.max(rv)] = ru.min(rv);
        }
    }

    /// Upper-triangle bit columns of the relabeled adjacency matrix: column
    /// `j` holds the bits towards positions `i < j`, most significant first.
    fn key_of(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let mut key = Vec::with_capacity(n - 1);
        for j in 1..n {
            let mut column = 0u64;
            for (i, &vi) in order[..j].iter().enumerate() {
                if self.g.adjacent(vi, order[j]) {
                    column |= 1 << (63 - i);
                }
            }
            key.push(column);
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::deza_family;
    use crate::testutil::petersen;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 1 {
            return vec![vec![0]];
        }
        let mut out = Vec::new();
        for tail in all_permutations(n - 1) {
            for pos in 0..n {
                let mut perm: Vec<usize> = tail.clone();
                perm.insert(pos, n - 1);
                out.push(perm);
            }
        }
        out
    }

    #[test]
    fn c4_has_one_form_under_all_labelings() {
        let c4 = Graph::cycle(4).unwrap();
        let form = canonical_form(&c4);
        for perm in all_permutations(4) {
            assert_eq!(canonical_form(&c4.permute(&perm).unwrap()), form);
        }
    }

    #[test]
    fn k33_and_prism_are_distinguished() {
        let k33 = Graph::from_edges(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let prism = Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_ne!(canonical_form(&k33), canonical_form(&prism));
    }

    #[test]
    fn complement_involution_has_equal_form() {
        let g = petersen();
        assert_eq!(
            canonical_form(&g),
            canonical_form(&g.complement().complement())
        );
    }

    #[test]
    fn family_graphs_canonicalize_consistently() {
        let g = deza_family(2, 3).unwrap();
        let form = canonical_form(&g);
        let n = g.order();
        // A couple of deterministic relabelings.
        let rotate: Vec<usize> = (0..n).map(|v| (v + 5) % n).collect();
        let reverse: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
        assert_eq!(canonical_form(&g.permute(&rotate).unwrap()), form);
        assert_eq!(canonical_form(&g.permute(&reverse).unwrap()), form);

        let canon = canonical_graph(&g);
        assert_eq!(canonical_form(&canon), form);
        assert_eq!(canon.to_graph6(), form.as_graph6());
    }

    #[test]
    fn singleton_graph() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(canonical_form(&g).as_graph6(), g.to_graph6());
    }
}
