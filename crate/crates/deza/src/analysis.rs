//! Deza / strictly-Deza / strongly-regular recognition, the alpha and beta
//! invariants, vertex typing, and the class partition with its quotient.
//!
//! A nonempty k-regular graph is a Deza graph when the number of common
//! neighbours of any two distinct vertices takes at most two values b >= a.
//! For a vertex `v`, `A(v)` and `B(v)` collect the vertices sharing `a`
//! (respectively `b`) common neighbours with `v`, and `B[v] = B(v) ∪ {v}`.
//! Much of this module only makes sense under the standing hypothesis
//! "strictly Deza, k = b + 1, beta > 1", which is where the vertex types
//! A1/A2/B/C and the B[.]-class partition live.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("parameters ({n},{k},{b},{a}) violate n > k >= 1, b >= a, b <= k")]
    InvalidParameters {
        n: usize,
        k: usize,
        b: usize,
        a: usize,
    },
    #[error("common-neighbour count is uniform (b = a = {value}); vertex classes are undefined, use the strongly-regular analysis instead")]
    UniformCounts { value: usize },
    #[error("beta formula divides by zero: b = a = {value}")]
    DegenerateBetaFormula { value: usize },
    #[error("pair ({u},{v}) has {found} common neighbours, expected {a} or {b}; the supplied parameters do not fit the graph")]
    CountMismatch {
        u: usize,
        v: usize,
        found: usize,
        a: usize,
        b: usize,
    },
    #[error("parameters describe a graph on {expected} vertices, got one on {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("supplied parameters {supplied} differ from the graph's parameters {found}")]
    WrongParameters {
        supplied: DezaParameters,
        found: DezaParameters,
    },
    #[error("hypothesis failed: the graph is not a Deza graph")]
    NotDeza,
    #[error("hypothesis failed: diameter is {diameter:?}, need exactly 2")]
    DiameterNotTwo { diameter: Option<usize> },
    #[error("hypothesis failed: the graph is strongly regular")]
    StronglyRegular,
    #[error("hypothesis failed: parameters have k = {k} and b = {b}, need k = b + 1")]
    DegreeNotBPlusOne { k: usize, b: usize },
    #[error("hypothesis failed: beta = {beta} does not exceed 1")]
    BetaNotAboveOne { beta: usize },
    #[error("structural contradiction: {0}")]
    Contradiction(String),
}

/// The quadruple (n, k, b, a) of a Deza graph: order, degree, and the two
/// admissible common-neighbour counts with b >= a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DezaParameters {
    pub n: usize,
    pub k: usize,
    pub b: usize,
    pub a: usize,
}

impl DezaParameters {
    pub fn new(n: usize, k: usize, b: usize, a: usize) -> Result<Self, AnalysisError> {
        if n > k && k >= 1 && b >= a && b <= k {
            Ok(DezaParameters { n, k, b, a })
        } else {
            Err(AnalysisError::InvalidParameters { n, k, b, a })
        }
    }
}

impl fmt::Display for DezaParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.b, self.a)
    }
}

/// Strongly-regular parameters (n, k, lambda, mu): lambda common neighbours
/// for adjacent pairs, mu for distinct nonadjacent pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Recognizes a Deza graph: nonempty, regular, and at most two distinct
/// common-neighbour counts over all unordered vertex pairs. A single
/// realized count `c` is reported as b = a = c.
pub fn deza_parameters(g: &Graph) -> Option<DezaParameters> {
    let k = g.regular_degree()?;
    let n = g.order();
    let mut low: Option<usize> = None;
    let mut high: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = (g.row(u) & g.row(v)).count_ones() as usize;
            match (low, high) {
                (None, _) => low = Some(c),
                (Some(x), None) if c != x => {
                    low = Some(x.min(c));
                    high = Some(x.max(c));
                }
                (Some(_), None) => {}
                (Some(x), Some(y)) if c != x && c != y => return None,
                _ => {}
            }
        }
    }
    let (a, b) = match (low, high) {
        (Some(a), Some(b)) => (a, b),
        (Some(c), None) => (c, c),
        _ => return None,
    };
    Some(DezaParameters { n, k, b, a })
}

/// Recognizes a strongly regular graph. Complete graphs are strongly regular
/// by convention; having no nonadjacent pair, their mu is recorded as 0.
pub fn is_strongly_regular(g: &Graph) -> Option<SrgParameters> {
    let k = g.regular_degree()?;
    let n = g.order();
    let mut lambda: Option<usize> = None;
    let mut mu: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = (g.row(u) & g.row(v)).count_ones() as usize;
            let slot = if g.adjacent(u, v) {
                &mut lambda
            } else {
                &mut mu
            };
            match slot {
                None => *slot = Some(c),
                Some(x) if *x != c => return None,
                _ => {}
            }
        }
    }
    lambda.map(|lambda| SrgParameters {
        n,
        k,
        lambda,
        mu: mu.unwrap_or(0),
    })
}

/// A strictly Deza graph is a Deza graph of diameter 2 that is not strongly
/// regular.
pub fn is_strictly_deza(g: &Graph) -> bool {
    deza_parameters(g).is_some() && g.diameter() == Some(2) && is_strongly_regular(g).is_none()
}

/// Per-vertex split of the other vertices by common-neighbour count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexProfile {
    pub vertex: usize,
    pub a_set: VertexSet,
    pub b_set: VertexSet,
}

impl VertexProfile {
    pub fn alpha(&self) -> usize {
        self.a_set.len()
    }

    pub fn beta(&self) -> usize {
        self.b_set.len()
    }

    /// `B[v] = B(v) ∪ {v}`.
    pub fn b_closed(&self) -> VertexSet {
        self.b_set.with(self.vertex)
    }
}

/// Splits `V \ {v}` into `A(v)` and `B(v)`. Requires b > a: with b = a the
/// split is degenerate and the strongly-regular analysis applies instead.
pub fn vertex_profile(
    g: &Graph,
    params: &DezaParameters,
    v: usize,
) -> Result<VertexProfile, AnalysisError> {
    if params.b == params.a {
        return Err(AnalysisError::UniformCounts { value: params.b });
    }
    if params.n != g.order() {
        return Err(AnalysisError::OrderMismatch {
            expected: params.n,
            found: g.order(),
        });
    }
    g.neighborhood(v)?; // range check
    let mut a_set = VertexSet::EMPTY;
    let mut b_set = VertexSet::EMPTY;
    for u in g.vertices() {
        if u == v {
            continue;
        }
        let c = (g.row(u) & g.row(v)).count_ones() as usize;
        if c == params.b {
            b_set = b_set.with(u);
        } else if c == params.a {
            a_set = a_set.with(u);
        } else {
            return Err(AnalysisError::CountMismatch {
                u: v,
                v: u,
                found: c,
                a: params.a,
                b: params.b,
            });
        }
    }
    Ok(VertexProfile {
        vertex: v,
        a_set,
        b_set,
    })
}

/// beta from the parameters alone, as an exact rational:
/// `(k(k-1) - a(n-1)) / (b-a)`. A non-integer value already proves that no
/// Deza graph with these parameters exists.
pub fn beta_by_formula(params: &DezaParameters) -> Result<Ratio<i64>, AnalysisError> {
    if params.b == params.a {
        return Err(AnalysisError::DegenerateBetaFormula { value: params.b });
    }
    let n = params.n as i64;
    let k = params.k as i64;
    let numerator = k * (k - 1) - params.a as i64 * (n - 1);
    let denominator = (params.b - params.a) as i64;
    Ok(Ratio::new(numerator, denominator))
}

/// The four vertex types under the standing hypothesis, by how `B(v)` meets
/// `N(v)`: disjoint (A, refined into A1/A2), contained (B), or meeting in a
/// single vertex (C).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    A1,
    A2,
    B,
    C,
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexKind::A1 => "A1",
            VertexKind::A2 => "A2",
            VertexKind::B => "B",
            VertexKind::C => "C",
        };
        f.write_str(s)
    }
}

/// A classified vertex. The distinguished `star` vertex is: for C the unique
/// member of `N(v) ∩ B(v)` (the twin of `v`); for A1 the unique `y` with
/// `N(v) \ N(x_i) = {y}` for every `x_i` in `B(v)`; for A2 the unique `z`
/// with `N(x_i) \ N(v) = {z}` for every `x_i`. Type B has no star.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexType {
    pub kind: VertexKind,
    pub star: Option<usize>,
}

/// Counts of vertex types over a whole graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeCensus {
    #[serde(rename = "A1")]
    pub a1: usize,
    #[serde(rename = "A2")]
    pub a2: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "C")]
    pub c: usize,
}

impl TypeCensus {
    pub fn from_types(types: &[VertexType]) -> TypeCensus {
        let mut census = TypeCensus::default();
        for t in types {
            match t.kind {
                VertexKind::A1 => census.a1 += 1,
                VertexKind::A2 => census.a2 += 1,
                VertexKind::B => census.b += 1,
                VertexKind::C => census.c += 1,
            }
        }
        census
    }
}

/// The standing hypothesis of the structure theory: strictly Deza with
/// k = b + 1 and beta > 1. `beta` is the counted value, which the theory
/// guarantees is constant over the vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Standing {
    pub params: DezaParameters,
    pub beta: usize,
}

/// Checks the standing hypothesis, reporting exactly which part failed.
pub fn standing_hypothesis(g: &Graph) -> Result<Standing, AnalysisError> {
    let params = deza_parameters(g).ok_or(AnalysisError::NotDeza)?;
    let diameter = g.diameter();
    if diameter != Some(2) {
        return Err(AnalysisError::DiameterNotTwo { diameter });
    }
    if is_strongly_regular(g).is_some() {
        return Err(AnalysisError::StronglyRegular);
    }
    if params.k != params.b + 1 {
        return Err(AnalysisError::DegreeNotBPlusOne {
            k: params.k,
            b: params.b,
        });
    }
    // Strictly Deza graphs have b > a: a uniform count would make the graph
    // strongly regular, which was excluded above.
    let beta = vertex_profile(g, &params, 0)?.beta();
    if beta <= 1 {
        return Err(AnalysisError::BetaNotAboveOne { beta });
    }
    Ok(Standing { params, beta })
}

/// Classifies one vertex under the standing hypothesis. A vertex that fits
/// none of the admissible patterns is a structural contradiction and is
/// surfaced loudly, never coerced.
pub fn classify_vertex(
    g: &Graph,
    params: &DezaParameters,
    v: usize,
) -> Result<VertexType, AnalysisError> {
    let standing = standing_hypothesis(g)?;
    if standing.params != *params {
        return Err(AnalysisError::WrongParameters {
            supplied: *params,
            found: standing.params,
        });
    }
    g.neighborhood(v)?; // range check
    classify_unchecked(g, &standing, v)
}

/// Classifies every vertex, checking the standing hypothesis once.
pub fn classify_all(g: &Graph, params: &DezaParameters) -> Result<Vec<VertexType>, AnalysisError> {
    let standing = standing_hypothesis(g)?;
    if standing.params != *params {
        return Err(AnalysisError::WrongParameters {
            supplied: *params,
            found: standing.params,
        });
    }
    g.vertices()
        .map(|v| classify_unchecked(g, &standing, v))
        .collect()
}

fn classify_unchecked(
    g: &Graph,
    standing: &Standing,
    v: usize,
) -> Result<VertexType, AnalysisError> {
    let profile = vertex_profile(g, &standing.params, v)?;
    let nv = VertexSet::from_bits(g.row(v));
    let meet = profile.b_set & nv;

    if meet == profile.b_set {
        return Ok(VertexType {
            kind: VertexKind::B,
            star: None,
        });
    }
    if meet.len() == 1 {
        return Ok(VertexType {
            kind: VertexKind::C,
            star: meet.first(),
        });
    }
    if !meet.is_empty() {
        return Err(AnalysisError::Contradiction(format!(
            "vertex {v}: B(v) meets N(v) in {} vertices yet is not contained in it",
            meet.len()
        )));
    }

    // Type A: B(v) is disjoint from N(v). With k = b + 1 each x_i in B(v)
    // misses exactly one neighbour of v and brings exactly one vertex of its
    // own; collect both singletons.
    let mut outs = Vec::new(); // the vertex of N(v) \ N(x_i)
    let mut ins = Vec::new(); // the vertex of N(x_i) \ N(v)
    for xi in profile.b_set {
        let out = nv - VertexSet::from_bits(g.row(xi));
        let inn = VertexSet::from_bits(g.row(xi)) - nv;
        debug_assert_eq!(out.len(), 1);
        debug_assert_eq!(inn.len(), 1);
        outs.push(
            out.first()
                .expect("k = b + 1 forces a singleton difference"),
        );
        ins.push(
            inn.first()
                .expect("k = b + 1 forces a singleton difference"),
        );
    }

    let all_equal = |xs: &[usize]| xs.windows(2).all(|w| w[0] == w[1]);
    let pairwise_distinct = |xs: &[usize]| {
        let set: VertexSet = xs.iter().collect();
        set.len() == xs.len()
    };

    if all_equal(&outs) {
        if !pairwise_distinct(&ins) {
            return Err(AnalysisError::Contradiction(format!(
                "vertex {v}: the missing neighbour is shared but the union of private neighbours is smaller than beta"
            )));
        }
        return Ok(VertexType {
            kind: VertexKind::A1,
            star: Some(outs[0]),
        });
    }
    if all_equal(&ins) {
        if !pairwise_distinct(&outs) {
            return Err(AnalysisError::Contradiction(format!(
                "vertex {v}: the private neighbour is shared but the missing-neighbour differences are not pairwise distinct"
            )));
        }
        return Ok(VertexType {
            kind: VertexKind::A2,
            star: Some(ins[0]),
        });
    }
    Err(AnalysisError::Contradiction(format!(
        "vertex {v} has B(v) disjoint from N(v) but matches neither disjoint-type pattern"
    )))
}

/// The partition of the vertex set into `B[.]`-classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoPartition {
    classes: Vec<VertexSet>,
    class_of: Vec<usize>,
}

impl RhoPartition {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Common size of all classes.
    pub fn class_size(&self) -> usize {
        self.classes[0].len()
    }
}

/// Computes `B[v]` for every vertex and groups the vertex set into classes,
/// verifying that the closures pairwise coincide or are disjoint and that
/// every class has size beta + 1. Overlapping-but-unequal closures are a
/// contradiction: they falsify the partition property for this input, which
/// under the standing hypothesis can only mean a bug upstream.
pub fn rho_partition(g: &Graph, params: &DezaParameters) -> Result<RhoPartition, AnalysisError> {
    let standing = standing_hypothesis(g)?;
    if standing.params != *params {
        return Err(AnalysisError::WrongParameters {
            supplied: *params,
            found: standing.params,
        });
    }
    let n = g.order();
    let closures: Vec<VertexSet> = g
        .vertices()
        .map(|v| vertex_profile(g, params, v).map(|p| p.b_closed()))
        .collect::<Result<_, _>>()?;

    let unassigned = usize::MAX;
    let mut class_of = vec![unassigned; n];
    let mut classes = Vec::new();
    for v in 0..n {
        if class_of[v] != unassigned {
            continue;
        }
        let class = closures[v];
        if class.len() != standing.beta + 1 {
            return Err(AnalysisError::Contradiction(format!(
                "B[{v}] has {} vertices, expected beta + 1 = {}",
                class.len(),
                standing.beta + 1
            )));
        }
        for u in class {
            if class_of[u] != unassigned || closures[u] != class {
                return Err(AnalysisError::Contradiction(format!(
                    "B[{u}] and B[{v}] overlap without being equal"
                )));
            }
            class_of[u] = classes.len();
        }
        classes.push(class);
    }
    Ok(RhoPartition { classes, class_of })
}

/// The quotient graph on the classes of `rho`. Adjacency is decided by class
/// representatives and then audited against every cross pair; any
/// inconsistency means the quotient is ill-defined for this input.
pub fn quotient_graph(g: &Graph, rho: &RhoPartition) -> Result<Graph, AnalysisError> {
    let n = g.order();
    let covered: VertexSet = rho.classes.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c);
    let total: usize = rho.classes.iter().map(|c| c.len()).sum();
    if rho.class_of.len() != n || covered != VertexSet::from_bits(g.vertex_mask()) || total != n {
        return Err(AnalysisError::Contradiction(
            "partition does not cover the vertex set exactly".to_string(),
        ));
    }

    let reps: Vec<usize> = rho
        .classes
        .iter()
        .map(|c| c.first().expect("classes are nonempty"))
        .collect();
    let m = rho.class_count();
    let mut adj = vec![0u64; m];
    for x in 0..m {
        for y in x + 1..m {
            let linked = g.adjacent(reps[x], reps[y]);
            for u in rho.classes[x] {
                for v in rho.classes[y] {
                    if g.adjacent(u, v) != linked {
                        return Err(AnalysisError::Contradiction(format!(
                            "quotient adjacency between classes {x} and {y} is ill-defined: \
                             pair ({u},{v}) disagrees with representatives ({},{})",
                            reps[x], reps[y]
                        )));
                    }
                }
            }
            if linked {
                adj[x] |= 1 << y;
                adj[y] |= 1 << x;
            }
        }
    }
    Ok(Graph::from_rows(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::deza_family;
    use crate::testutil::{brute_force_pair_counts, petersen};

    #[test]
    fn deza_parameters_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let params = deza_parameters(&c5).unwrap();
        assert_eq!(
            params,
            DezaParameters {
                n: 5,
                k: 2,
                b: 1,
                a: 0
            }
        );
        // Cross-check against an independent pair count.
        let counts = brute_force_pair_counts(&c5);
        assert!(counts.iter().all(|&c| c == 0 || c == 1));
    }

    #[test]
    fn deza_parameters_k33() {
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
        assert_eq!(
            deza_parameters(&k33),
            Some(DezaParameters {
                n: 6,
                k: 3,
                b: 3,
                a: 0
            })
        );
    }

    #[test]
    fn deza_parameters_p4_absent() {
        assert_eq!(deza_parameters(&Graph::path(4).unwrap()), None);
    }

    #[test]
    fn srg_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            is_strongly_regular(&c5),
            Some(SrgParameters {
                n: 5,
                k: 2,
                lambda: 0,
                mu: 1
            })
        );
        assert_eq!(
            is_strongly_regular(&petersen()),
            Some(SrgParameters {
                n: 10,
                k: 3,
                lambda: 0,
                mu: 1
            })
        );
        // Adjacent pairs in the family graph realize both counts.
        assert_eq!(is_strongly_regular(&deza_family(2, 2).unwrap()), None);
        // Complete graphs are strongly regular by convention with mu 0.
        assert_eq!(
            is_strongly_regular(&Graph::complete(4).unwrap()),
            Some(SrgParameters {
                n: 4,
                k: 3,
                lambda: 2,
                mu: 0
            })
        );
    }

    #[test]
    fn strictly_deza_examples() {
        assert!(!is_strictly_deza(&Graph::cycle(5).unwrap()));
        assert!(is_strictly_deza(&deza_family(2, 2).unwrap()));
        assert!(!is_strictly_deza(&petersen()));
    }

    #[test]
    fn no_strictly_deza_graph_on_up_to_five_vertices() {
        // Exhaustive over all labeled graphs on <= 5 vertices; the larger
        // sweep up to 7 lives in the acceptance suite.
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for mask in 0u32..1 << pairs {
                let mut edges = Vec::new();
                let mut idx = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask >> idx & 1 == 1 {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                assert!(
                    !is_strictly_deza(&g),
                    "unexpected strictly Deza graph: {g:?}"
                );
            }
        }
    }

    #[test]
    fn profiles_on_the_family_graph() {
        let g = deza_family(2, 2).unwrap();
        let params = deza_parameters(&g).unwrap();
        for v in g.vertices() {
            let p = vertex_profile(&g, &params, v).unwrap();
            assert_eq!(p.beta(), 3);
            assert_eq!(p.alpha() + p.beta() + 1, g.order());
            assert!((p.a_set & p.b_set).is_empty());
            assert_eq!(
                p.a_set | p.b_set | VertexSet::singleton(v),
                VertexSet::from_bits(g.vertex_mask())
            );
        }
        let beta = beta_by_formula(&params).unwrap();
        assert!(beta.is_integer());
        assert_eq!(beta.to_integer(), 3);
    }

    #[test]
    fn profiles_on_c5() {
        let c5 = Graph::cycle(5).unwrap();
        let params = deza_parameters(&c5).unwrap();
        for v in 0..5 {
            let p = vertex_profile(&c5, &params, v).unwrap();
            assert_eq!(p.alpha(), 2);
            assert_eq!(p.beta(), 2);
        }
    }

    #[test]
    fn beta_formula_values() {
        let p = DezaParameters::new(8, 5, 4, 2).unwrap();
        assert_eq!(beta_by_formula(&p).unwrap(), Ratio::from_integer(3));
        let p = DezaParameters::new(5, 2, 1, 0).unwrap();
        assert_eq!(beta_by_formula(&p).unwrap(), Ratio::from_integer(2));
        let p = DezaParameters::new(6, 3, 2, 2).unwrap();
        assert_eq!(
            beta_by_formula(&p),
            Err(AnalysisError::DegenerateBetaFormula { value: 2 })
        );
    }

    #[test]
    fn uniform_counts_refuse_profiles() {
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
        let uniform = DezaParameters::new(6, 3, 2, 2).unwrap();
        assert_eq!(
            vertex_profile(&k33, &uniform, 0),
            Err(AnalysisError::UniformCounts { value: 2 })
        );
    }

    #[test]
    fn classification_on_family_graphs() {
        for (s, t) in [(2, 2), (3, 2), (2, 3)] {
            let g = deza_family(s, t).unwrap();
            let params = deza_parameters(&g).unwrap();
            let types = classify_all(&g, &params).unwrap();
            for (v, ty) in types.iter().enumerate() {
                assert_eq!(ty.kind, VertexKind::C);
                // Twin layout in the builder: copies of a base vertex are
                // consecutive, so the partner flips the low bit.
                assert_eq!(ty.star, Some(v ^ 1));
                let star = ty.star.unwrap();
                assert_eq!(
                    g.closed_neighborhood(v).unwrap(),
                    g.closed_neighborhood(star).unwrap()
                );
            }
        }
    }

    #[test]
    fn classification_refuses_bad_hypotheses() {
        let c5 = Graph::cycle(5).unwrap();
        let params = deza_parameters(&c5).unwrap();
        assert_eq!(
            classify_vertex(&c5, &params, 0),
            Err(AnalysisError::StronglyRegular)
        );

        let g = deza_family(2, 2).unwrap();
        let wrong = DezaParameters::new(8, 5, 4, 1).unwrap();
        assert!(matches!(
            classify_vertex(&g, &wrong, 0),
            Err(AnalysisError::WrongParameters { .. })
        ));
    }

    #[test]
    fn rho_partition_on_family_graphs() {
        let g = deza_family(3, 2).unwrap();
        let params = deza_parameters(&g).unwrap();
        let rho = rho_partition(&g, &params).unwrap();
        assert_eq!(rho.class_count(), 3);
        assert_eq!(rho.class_size(), 4);
        for v in g.vertices() {
            let p = vertex_profile(&g, &params, v).unwrap();
            assert_eq!(p.b_closed(), rho.classes()[rho.class_of(v)]);
        }

        let g = deza_family(2, 2).unwrap();
        let params = deza_parameters(&g).unwrap();
        let rho = rho_partition(&g, &params).unwrap();
        assert_eq!(rho.class_count(), 2);
        assert_eq!(rho.class_size(), 4);
    }

    #[test]
    fn quotients_of_family_graphs_are_complete() {
        let g = deza_family(2, 2).unwrap();
        let params = deza_parameters(&g).unwrap();
        let q = quotient_graph(&g, &rho_partition(&g, &params).unwrap()).unwrap();
        assert_eq!(q, Graph::complete(2).unwrap());

        let g = deza_family(3, 2).unwrap();
        let params = deza_parameters(&g).unwrap();
        let q = quotient_graph(&g, &rho_partition(&g, &params).unwrap()).unwrap();
        assert_eq!(q, Graph::complete(3).unwrap());
    }
}
