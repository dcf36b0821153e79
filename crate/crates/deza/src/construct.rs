//! Builders for the graph families of the structure theory: complete
//! multipartite graphs, extensions by an arbitrary fiber graph with the
//! m-clique and m-coclique specializations, and the family of strictly Deza
//! graphs with k = b + 1 (2-clique extensions of complete multipartite
//! graphs with equal parts), including construction directly from a
//! parameter quadruple.
//!
//! All builders use a deterministic vertex order (part-major, then copy
//! index) so serialized outputs are stable across runs and platforms.

use thiserror::Error;

use crate::analysis::DezaParameters;
use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("a multipartite shape needs at least one part")]
    EmptyShape,
    #[error("part sizes must be positive")]
    ZeroPart,
    #[error("extension multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("requested graph on {0} vertices exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("family needs at least 2 parts (s = {0} gives a disconnected extension)")]
    TooFewParts(usize),
    #[error("family needs part size at least 2 (t = {0} collapses beta to 1)")]
    PartTooSmall(usize),
    #[error(transparent)]
    Infeasible(#[from] Infeasibility),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Why a parameter quadruple admits no strictly Deza graph with k = b + 1:
/// the first violated arithmetic identity, in check order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Infeasibility {
    #[error("b = {b} must equal k - 1 = {expected}")]
    DegreeGap { b: usize, expected: usize },
    #[error("a = k - 2 admits no strictly Deza graph")]
    ConsecutiveValues,
    #[error("b = a = {0} leaves beta undefined")]
    UniformValues(usize),
    #[error("beta = {numerator}/{denominator} from (k(k-1) - a(n-1))/(b-a) is not an integer")]
    BetaNotIntegral { numerator: i64, denominator: i64 },
    #[error("beta = {0} must exceed 1")]
    BetaNotAboveOne(i64),
    #[error("a = {a} must equal 2k - n = {expected}")]
    WrongSmallValue { a: usize, expected: i64 },
    #[error("class size n - k + 1 = {0} must be even")]
    OddClassSize(usize),
    #[error("part size (n - k + 1)/2 = {0} must be at least 2")]
    PartSizeTooSmall(usize),
    #[error("n = {n} must be divisible by the class size n - k + 1 = {class_size}")]
    IndivisibleOrder { n: usize, class_size: usize },
}

/// Part sizes of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteShape {
    part_sizes: Vec<usize>,
}

impl MultipartiteShape {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self, ConstructError> {
        if part_sizes.is_empty() {
            return Err(ConstructError::EmptyShape);
        }
        if part_sizes.contains(&0) {
            return Err(ConstructError::ZeroPart);
        }
        Ok(MultipartiteShape { part_sizes })
    }

    /// `parts` equal parts of size `size`.
    pub fn uniform(parts: usize, size: usize) -> Result<Self, ConstructError> {
        Self::new(vec![size; parts])
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn total(&self) -> usize {
        self.part_sizes.iter().sum()
    }
}

/// Complete multipartite graph: vertices grouped part-major, edge exactly
/// between distinct parts.
pub fn complete_multipartite(shape: &MultipartiteShape) -> Result<Graph, ConstructError> {
    let n = shape.total();
    if n > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge(n));
    }
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in shape.part_sizes().iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let adj = (0..n)
        .map(|u| {
            let mut row = 0u64;
            for v in 0..n {
                if part_of[u] != part_of[v] {
                    row |= 1 << v;
                }
            }
            row
        })
        .collect();
    Ok(Graph::from_rows(adj))
}

/// Extension of `base` by `fiber`: vertices are pairs `(v, i)` laid out
/// base-major, and `(v, i) ~ (u, j)` iff `v ~ u` in the base, or `v = u`
/// and `i ~ j` in the fiber.
pub fn extension(base: &Graph, fiber: &Graph) -> Result<Graph, ConstructError> {
    let m = fiber.order();
    let n = base.order() * m;
    if n > MAX_ORDER {
        return Err(ConstructError::OrderTooLarge(n));
    }
    let mut adj = vec![0u64; n];
    for v in base.vertices() {
        for i in fiber.vertices() {
            let x = v * m + i;
            for u in base.vertices() {
                for j in fiber.vertices() {
                    let y = u * m + j;
                    if x != y && (base.adjacent(v, u) || (v == u && fiber.adjacent(i, j))) {
                        adj[x] |= 1 << y;
                    }
                }
            }
        }
    }
    Ok(Graph::from_rows(adj))
}

/// Extension by the complete graph on `m` vertices; each base vertex blows
/// up into an m-clique. With m = 1 this is the identity.
pub fn clique_extension(base: &Graph, m: usize) -> Result<Graph, ConstructError> {
    if m == 0 {
        return Err(ConstructError::ZeroMultiplicity);
    }
    extension(base, &Graph::complete(m)?)
}

/// Extension by the edgeless graph on `m` vertices; each base vertex blows
/// up into an m-coclique.
pub fn coclique_extension(base: &Graph, m: usize) -> Result<Graph, ConstructError> {
    if m == 0 {
        return Err(ConstructError::ZeroMultiplicity);
    }
    extension(base, &Graph::empty(m)?)
}

/// The 2-clique extension of the complete multipartite graph with `s` parts
/// of size `t`. For s, t >= 2 the result is strictly Deza with parameters
/// `(2st, 2(s-1)t + 1, 2(s-1)t, 2(s-2)t + 2)`, so k = b + 1, a = 2k - n and
/// beta = n - k > 1.
pub fn deza_family(s: usize, t: usize) -> Result<Graph, ConstructError> {
    if s < 2 {
        return Err(ConstructError::TooFewParts(s));
    }
    if t < 2 {
        return Err(ConstructError::PartTooSmall(t));
    }
    clique_extension(
        &complete_multipartite(&MultipartiteShape::uniform(s, t)?)?,
        2,
    )
}

/// Checks every arithmetic identity a quadruple must satisfy to be realized
/// by a family member, in order, and returns the indices (s, t) on success.
pub fn feasibility(params: &DezaParameters) -> Result<(usize, usize), Infeasibility> {
    let DezaParameters { n, k, b, a } = *params;
    if b + 1 != k {
        return Err(Infeasibility::DegreeGap { b, expected: k - 1 });
    }
    if a + 2 == k {
        return Err(Infeasibility::ConsecutiveValues);
    }
    if b == a {
        return Err(Infeasibility::UniformValues(b));
    }
    let beta = crate::analysis::beta_by_formula(params).expect("b > a was just checked");
    if !beta.is_integer() {
        return Err(Infeasibility::BetaNotIntegral {
            numerator: *beta.numer(),
            denominator: *beta.denom(),
        });
    }
    let beta = beta.to_integer();
    if beta <= 1 {
        return Err(Infeasibility::BetaNotAboveOne(beta));
    }
    let expected_a = 2 * k as i64 - n as i64;
    if a as i64 != expected_a {
        return Err(Infeasibility::WrongSmallValue {
            a,
            expected: expected_a,
        });
    }
    let class_size = n - k + 1;
    if class_size % 2 != 0 {
        return Err(Infeasibility::OddClassSize(class_size));
    }
    let t = class_size / 2;
    if t < 2 {
        return Err(Infeasibility::PartSizeTooSmall(t));
    }
    if n % class_size != 0 {
        return Err(Infeasibility::IndivisibleOrder { n, class_size });
    }
    Ok((n / class_size, t))
}

/// Builds the unique (up to isomorphism) strictly Deza graph with the given
/// parameters when they satisfy k = b + 1 and beta > 1; otherwise reports
/// the first violated identity. The CLI uses this as its feasibility oracle.
pub fn from_parameters(params: &DezaParameters) -> Result<Graph, ConstructError> {
    let (s, t) = feasibility(params)?;
    deza_family(s, t)
}
