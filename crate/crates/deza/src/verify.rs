//! Executable verdicts for the structural characterization of strictly Deza
//! graphs with k = b + 1 and beta > 1, and a per-property check suite.
//!
//! The characterization: such a graph is exactly a 2-clique extension of a
//! complete multipartite graph with parts of size (n - k + 1)/2, and it is
//! recognizable from its parameter quadruple alone. Verification recovers
//! the structure explicitly (twin pairing, class partition, quotient, and a
//! relabeling onto the constructed family member) instead of running a
//! generic isomorphism search, so a holding verdict always carries a
//! witness mapping.

use std::fmt;

use crate::analysis::{
    classify_all, quotient_graph, rho_partition, standing_hypothesis, vertex_profile,
    AnalysisError, DezaParameters, TypeCensus, VertexKind,
};
use crate::construct::{deza_family, feasibility, Infeasibility};
use crate::graph::{Graph, VertexSet};

/// The checks of [`verify_structure`], in the order they run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureCheck {
    StrictlyDeza,
    DegreeIsBPlusOne,
    BetaAboveOne,
    AllVerticesTypeC,
    TwinPerfectMatching,
    ClassStructure,
    CompleteQuotient,
    RelabelingReproducesFamily,
}

impl fmt::Display for StructureCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructureCheck::StrictlyDeza => "strictly_deza",
            StructureCheck::DegreeIsBPlusOne => "degree_is_b_plus_one",
            StructureCheck::BetaAboveOne => "beta_above_one",
            StructureCheck::AllVerticesTypeC => "all_vertices_type_c",
            StructureCheck::TwinPerfectMatching => "twin_perfect_matching",
            StructureCheck::ClassStructure => "class_structure",
            StructureCheck::CompleteQuotient => "complete_quotient",
            StructureCheck::RelabelingReproducesFamily => "relabeling_reproduces_family",
        };
        f.write_str(s)
    }
}

/// Recovered structure of a holding verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureWitness {
    /// Number of parts of the underlying complete multipartite graph.
    pub s: usize,
    /// Part size of the underlying complete multipartite graph.
    pub t: usize,
    /// The parameters of the verified graph.
    pub parameters: DezaParameters,
    /// Twin pairs (v, v*), each listed once with v < v*.
    pub twins: Vec<(usize, usize)>,
    /// The B[.]-classes, ordered by smallest member; these are the blown-up
    /// parts of the multipartite base.
    pub classes: Vec<VertexSet>,
    /// Quotient graph on the classes (complete).
    pub quotient: Graph,
    /// `relabeling[v]` is the index of `v` in the constructed family
    /// member; applying it reproduces that graph edge for edge.
    pub relabeling: Vec<usize>,
}

/// The specific violated condition, with the offending vertices named.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFailure {
    pub check: StructureCheck,
    pub details: String,
}

/// Outcome of [`verify_structure`]: exactly a witness or a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureVerdict {
    Holds(Box<StructureWitness>),
    Fails(StructureFailure),
}

impl StructureVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, StructureVerdict::Holds(_))
    }

    pub fn witness(&self) -> Option<&StructureWitness> {
        match self {
            StructureVerdict::Holds(w) => Some(w),
            StructureVerdict::Fails(_) => None,
        }
    }

    pub fn failure(&self) -> Option<&StructureFailure> {
        match self {
            StructureVerdict::Holds(_) => None,
            StructureVerdict::Fails(f) => Some(f),
        }
    }
}

fn fails(check: StructureCheck, details: impl Into<String>) -> StructureVerdict {
    StructureVerdict::Fails(StructureFailure {
        check,
        details: details.into(),
    })
}

/// Decides whether `g` is a 2-clique extension of a complete multipartite
/// graph with equal parts, by running the full structural recovery. All
/// failures are verdicts, never errors, so batch runs do not abort on
/// negative instances.
pub fn verify_structure(g: &Graph) -> StructureVerdict {
    let standing = match standing_hypothesis(g) {
        Ok(standing) => standing,
        Err(AnalysisError::DegreeNotBPlusOne { k, b }) => {
            return fails(
                StructureCheck::DegreeIsBPlusOne,
                format!("k = {k}, b = {b}: the degree does not exceed the large count by one"),
            )
        }
        Err(AnalysisError::BetaNotAboveOne { beta }) => {
            return fails(StructureCheck::BetaAboveOne, format!("beta = {beta}"))
        }
        Err(e) => return fails(StructureCheck::StrictlyDeza, e.to_string()),
    };
    let params = standing.params;
    let beta = standing.beta;
    let n = g.order();

    let types = match classify_all(g, &params) {
        Ok(types) => types,
        Err(e) => return fails(StructureCheck::AllVerticesTypeC, e.to_string()),
    };
    for (v, ty) in types.iter().enumerate() {
        if ty.kind != VertexKind::C {
            return fails(
                StructureCheck::AllVerticesTypeC,
                format!("vertex {v} has type {}", ty.kind),
            );
        }
    }

    // The star of a type-C vertex is its twin: same closed neighbourhood.
    let star: Vec<usize> = types
        .iter()
        .map(|t| t.star.expect("type C has a star"))
        .collect();
    let mut twins = Vec::new();
    for v in 0..n {
        let w = star[v];
        if star[w] != v {
            return fails(
                StructureCheck::TwinPerfectMatching,
                format!("star of {v} is {w} but star of {w} is {}", star[w]),
            );
        }
        if g.closed_neighborhood(v) != g.closed_neighborhood(w) {
            return fails(
                StructureCheck::TwinPerfectMatching,
                format!("vertices {v} and {w} are paired but have different closed neighbourhoods"),
            );
        }
        if v < w {
            twins.push((v, w));
        }
    }
    if twins.len() * 2 != n {
        return fails(
            StructureCheck::TwinPerfectMatching,
            format!("{} twin pairs do not cover {n} vertices", twins.len()),
        );
    }

    let rho = match rho_partition(g, &params) {
        Ok(rho) => rho,
        Err(e) => return fails(StructureCheck::ClassStructure, e.to_string()),
    };
    let class_size = beta + 1;
    if class_size != n - params.k + 1 {
        return fails(
            StructureCheck::ClassStructure,
            format!(
                "class size {class_size} differs from n - k + 1 = {}",
                n - params.k + 1
            ),
        );
    }
    if class_size % 2 != 0 {
        return fails(
            StructureCheck::ClassStructure,
            format!("class size {class_size} is odd, so classes cannot split into twin pairs"),
        );
    }
    for (idx, &class) in rho.classes().iter().enumerate() {
        for v in class {
            if !class.contains(star[v]) {
                return fails(
                    StructureCheck::ClassStructure,
                    format!("class {idx} contains {v} but not its twin {}", star[v]),
                );
            }
        }
    }

    let quotient = match quotient_graph(g, &rho) {
        Ok(q) => q,
        Err(e) => return fails(StructureCheck::CompleteQuotient, e.to_string()),
    };
    let s = rho.class_count();
    if quotient.edge_count() != s * (s - 1) / 2 {
        return fails(
            StructureCheck::CompleteQuotient,
            format!(
                "quotient on {s} classes has {} edges, not complete",
                quotient.edge_count()
            ),
        );
    }

    // Explicit relabeling onto the constructed family member: class c
    // becomes part c, its twin pairs (ordered by smaller member) become the
    // base vertices, and the two twins become the two copies.
    let t = class_size / 2;
    let mut relabeling = vec![0usize; n];
    for (c, &class) in rho.classes().iter().enumerate() {
        let mut pairs: Vec<(usize, usize)> = class
            .iter()
            .filter(|&v| v < star[v])
            .map(|v| (v, star[v]))
            .collect();
        pairs.sort_unstable();
        for (p, (x, y)) in pairs.into_iter().enumerate() {
            relabeling[x] = (c * t + p) * 2;
            relabeling[y] = (c * t + p) * 2 + 1;
        }
    }
    let family = match deza_family(s, t) {
        Ok(family) => family,
        Err(e) => return fails(StructureCheck::RelabelingReproducesFamily, e.to_string()),
    };
    let relabeled = match g.permute(&relabeling) {
        Ok(relabeled) => relabeled,
        Err(e) => return fails(StructureCheck::RelabelingReproducesFamily, e.to_string()),
    };
    if relabeled != family {
        return fails(
            StructureCheck::RelabelingReproducesFamily,
            "recovered labeling does not reproduce the family member edge for edge".to_string(),
        );
    }

    StructureVerdict::Holds(Box::new(StructureWitness {
        s,
        t,
        parameters: params,
        twins,
        classes: rho.classes().to_vec(),
        quotient,
        relabeling,
    }))
}

/// Outcome of [`verify_parameters`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParameterVerdict {
    /// The quadruple is outside the theory's scope (b != k - 1, uniform
    /// counts, or beta <= 1).
    Inapplicable { reason: String },
    /// The quadruple is realized by exactly the family member with these
    /// indices: a = 2k - n holds along with every feasibility identity.
    Realizable { s: usize, t: usize },
    /// An identity fails; no graph with this quadruple exists in the class.
    Infeasible(Infeasibility),
}

impl ParameterVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, ParameterVerdict::Realizable { .. })
    }
}

/// Checks that a quadruple with b = k - 1 and beta > 1 satisfies a = 2k - n
/// and all feasibility identities, reporting the unique realizing family
/// indices (s, t) when it does.
pub fn verify_parameters(params: &DezaParameters) -> ParameterVerdict {
    let DezaParameters { n, k, b, a } = *params;
    if b + 1 != k {
        return ParameterVerdict::Inapplicable {
            reason: format!("b = {b} does not equal k - 1 = {}", k - 1),
        };
    }
    if b == a {
        return ParameterVerdict::Inapplicable {
            reason: format!("b = a = {b} leaves beta undefined"),
        };
    }
    let beta = crate::analysis::beta_by_formula(params).expect("b > a was just checked");
    if beta <= num_rational::Ratio::from_integer(1) {
        return ParameterVerdict::Inapplicable {
            reason: format!("beta = {beta} does not exceed 1"),
        };
    }
    let expected_a = 2 * k as i64 - n as i64;
    if a as i64 != expected_a {
        return ParameterVerdict::Infeasible(Infeasibility::WrongSmallValue {
            a,
            expected: expected_a,
        });
    }
    match feasibility(params) {
        Ok((s, t)) => ParameterVerdict::Realizable { s, t },
        Err(infeasibility) => ParameterVerdict::Infeasible(infeasibility),
    }
}

/// One entry of the property suite. `applicable` is false only when the
/// property's own precondition has no subject on this graph (for example a
/// statement about disjoint-type vertices when none exist); such entries
/// pass vacuously and carry the unmet precondition in `details`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub id: &'static str,
    pub applicable: bool,
    pub passed: bool,
    pub details: String,
}

/// Report of the per-property suite; inapplicable reports carry the failed
/// hypothesis instead of entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub applicable: bool,
    pub precondition_failure: Option<String>,
    pub entries: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn all_passed(&self) -> bool {
        self.applicable && self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, id: &str) -> Option<&PropertyCheck> {
        self.entries.iter().find(|e| e.id == id)
    }
}

/// Evaluates the structure theory's assertions directly on `g` under the
/// standing hypothesis: positivity of the parameters, closure and partition
/// behaviour of the B[.]-classes, the divisibility constraint, type
/// homogeneity, the type census, and the quotient shape. A hypothesis
/// failure yields an inapplicable report; a structural contradiction inside
/// classification is an error, as it can only mean a bug upstream.
pub fn check_properties(g: &Graph) -> Result<PropertyReport, AnalysisError> {
    let standing = match standing_hypothesis(g) {
        Ok(standing) => standing,
        Err(e) => {
            return Ok(PropertyReport {
                applicable: false,
                precondition_failure: Some(e.to_string()),
                entries: Vec::new(),
            })
        }
    };
    let params = standing.params;
    let beta = standing.beta;
    let n = g.order();

    let types = classify_all(g, &params)?;
    let census = TypeCensus::from_types(&types);
    let profiles: Vec<_> = g
        .vertices()
        .map(|v| vertex_profile(g, &params, v))
        .collect::<Result<_, _>>()?;
    let closures: Vec<VertexSet> = profiles.iter().map(|p| p.b_closed()).collect();
    let is_disjoint_type = |v: usize| matches!(types[v].kind, VertexKind::A1 | VertexKind::A2);

    let mut entries = Vec::new();
    let mut push = |id: &'static str, applicable: bool, passed: bool, details: String| {
        entries.push(PropertyCheck {
            id,
            applicable,
            passed,
            details,
        });
    };

    // alpha > 0 and b > a > 0.
    {
        let alpha = n - 1 - beta;
        let passed = alpha > 0 && params.a > 0;
        push(
            "parameter_positivity",
            true,
            passed,
            format!("alpha = {alpha}, a = {}, b = {}", params.a, params.b),
        );
    }

    // Every vertex fits the trichotomy (classification succeeded).
    push(
        "vertex_trichotomy",
        true,
        true,
        format!(
            "census A1={} A2={} B={} C={}",
            census.a1, census.a2, census.b, census.c
        ),
    );

    // For disjoint-type vertices, B[v] induces a coclique of size beta + 1.
    {
        let subjects: Vec<usize> = g.vertices().filter(|&v| is_disjoint_type(v)).collect();
        let mut passed = true;
        let mut details = String::from("no disjoint-type vertices; vacuous");
        for &v in &subjects {
            for u in closures[v] {
                if !(VertexSet::from_bits(g.row(u)) & closures[v]).is_empty() {
                    passed = false;
                    details = format!("B[{v}] contains an edge at vertex {u}");
                }
            }
        }
        if !subjects.is_empty() && passed {
            details = format!("checked {} vertices", subjects.len());
        }
        push(
            "disjoint_class_coclique",
            !subjects.is_empty(),
            passed,
            details,
        );
    }

    // For disjoint-type vertices, B[x] = B[x_i] and x_i is disjoint-type.
    {
        let subjects: Vec<usize> = g.vertices().filter(|&v| is_disjoint_type(v)).collect();
        let mut passed = true;
        let mut details = String::from("no disjoint-type vertices; vacuous");
        for &v in &subjects {
            for u in profiles[v].b_set {
                if closures[u] != closures[v] || !is_disjoint_type(u) {
                    passed = false;
                    details = format!("vertex {u} in B({v}) breaks the closure");
                }
            }
        }
        if !subjects.is_empty() && passed {
            details = format!("checked {} vertices", subjects.len());
        }
        push(
            "disjoint_class_closure",
            !subjects.is_empty(),
            passed,
            details,
        );
    }

    // For type B and C vertices, B[u] = B[v] and the type repeats on B(v).
    {
        let mut passed = true;
        let mut details = String::new();
        for v in g.vertices() {
            if !matches!(types[v].kind, VertexKind::B | VertexKind::C) {
                continue;
            }
            for u in profiles[v].b_set {
                if closures[u] != closures[v] || types[u].kind != types[v].kind {
                    passed = false;
                    details = format!("vertex {u} in B({v}) breaks closure or type");
                }
            }
        }
        if passed {
            details = "B-classes are closed with a constant type".to_string();
        }
        push("class_closure", true, passed, details);
    }

    // Any two closures coincide or are disjoint.
    {
        let mut passed = true;
        let mut details = String::new();
        'outer: for u in 0..n {
            for v in u + 1..n {
                if !(closures[u] & closures[v]).is_empty() && closures[u] != closures[v] {
                    passed = false;
                    details = format!("B[{u}] and B[{v}] overlap without being equal");
                    break 'outer;
                }
            }
        }
        if passed {
            details = "closures form a partition".to_string();
        }
        push("class_partition", true, passed, details);
    }

    // For type B/C vertices v and u in N(v) \ B(v): B[u] stays inside.
    {
        let mut passed = true;
        let mut details = String::new();
        for v in g.vertices() {
            if !matches!(types[v].kind, VertexKind::B | VertexKind::C) {
                continue;
            }
            let outside = VertexSet::from_bits(g.row(v)) - profiles[v].b_set;
            for u in outside {
                if !closures[u].is_subset_of(outside) {
                    passed = false;
                    details = format!("B[{u}] escapes N({v}) \\ B({v})");
                }
            }
        }
        if passed {
            details = "neighbour closures nest".to_string();
        }
        push("neighbor_class_nesting", true, passed, details);
    }

    // Divisibility: beta + 1 divides k - 1 for realized types A1/C, and
    // k - beta for realized types A2/B.
    {
        let class_size = (beta + 1) as i64;
        let mut passed = true;
        let mut details = Vec::new();
        if census.a1 + census.c > 0 {
            let value = params.k as i64 - 1;
            if value % class_size != 0 {
                passed = false;
            }
            details.push(format!("k - 1 = {value} vs class size {class_size}"));
        }
        if census.a2 + census.b > 0 {
            let value = params.k as i64 - beta as i64;
            if value.rem_euclid(class_size) != 0 {
                passed = false;
            }
            details.push(format!("k - beta = {value} vs class size {class_size}"));
        }
        push(
            "class_size_divides_degree",
            true,
            passed,
            details.join("; "),
        );
    }

    // Realized types all satisfy one divisibility branch, never both.
    {
        let branch_one = census.a1 + census.c;
        let branch_two = census.a2 + census.b;
        let passed = branch_one == 0 || branch_two == 0;
        push(
            "type_homogeneity",
            true,
            passed,
            format!("branch A1/C has {branch_one} vertices, branch A2/B has {branch_two}"),
        );
    }

    push(
        "no_all_type_b",
        true,
        census.b < n,
        format!("{} of {n} vertices have type B", census.b),
    );
    push(
        "no_type_a1",
        true,
        census.a1 == 0,
        format!("{} vertices have type A1", census.a1),
    );
    push(
        "no_type_a2",
        true,
        census.a2 == 0,
        format!("{} vertices have type A2", census.a2),
    );
    push(
        "all_type_c",
        true,
        census.c == n,
        format!("{} of {n} vertices have type C", census.c),
    );

    // Classes of size beta + 1 with a complete quotient.
    {
        let (passed, details) = match rho_partition(g, &params).and_then(|rho| {
            let q = quotient_graph(g, &rho)?;
            Ok((rho.class_count(), q))
        }) {
            Ok((count, q)) => {
                let complete = q.edge_count() == count * (count - 1) / 2;
                (
                    complete && count == n / (beta + 1),
                    format!(
                        "{count} classes of size {}, quotient has {} edges",
                        beta + 1,
                        q.edge_count()
                    ),
                )
            }
            Err(e) => (false, e.to_string()),
        };
        push("complete_quotient", true, passed, details);
    }

    Ok(PropertyReport {
        applicable: true,
        precondition_failure: None,
        entries,
    })
}
