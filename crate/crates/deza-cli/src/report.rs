//! JSON and table rendering for the analyze and verify subcommands. The
//! JSON field names are a public contract documented in docs/formats.md;
//! the table output is for humans and unversioned.

use deza::{
    check_properties, deza_parameters, is_strictly_deza, is_strongly_regular, quotient_graph,
    rho_partition, standing_hypothesis, verify_structure, vertex_profile, Graph, PropertyReport,
    StructureVerdict, VertexSet,
};
use serde_json::{json, Value};

fn sets_to_lists(sets: &[VertexSet]) -> Value {
    json!(sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>())
}

pub fn analyze_json(g: &Graph) -> Value {
    let params = deza_parameters(g);
    let profile = params
        .filter(|p| p.b > p.a)
        .map(|p| vertex_profile(g, &p, 0).expect("recognized parameters fit their graph"));
    let standing = standing_hypothesis(g).ok();

    let (vertex_types, rho_classes, quotient) = match (&standing, &params) {
        (Some(_), Some(p)) => {
            let types = deza::classify_all(g, p).expect("standing hypothesis verified");
            let census = deza::TypeCensus::from_types(&types);
            let rho = rho_partition(g, p).expect("standing hypothesis verified");
            let q = quotient_graph(g, &rho).expect("standing hypothesis verified");
            let complete = q.edge_count() == q.order() * (q.order() - 1) / 2;
            (
                json!(census),
                sets_to_lists(rho.classes()),
                json!({ "order": q.order(), "graph6": q.to_graph6(), "complete": complete }),
            )
        }
        _ => (Value::Null, Value::Null, Value::Null),
    };

    json!({
        "graph6": g.to_graph6(),
        "n": g.order(),
        "regular_degree": g.regular_degree(),
        "diameter": g.diameter(),
        "deza_parameters": params,
        "strongly_regular": is_strongly_regular(g),
        "strictly_deza": is_strictly_deza(g),
        "alpha": profile.as_ref().map(|p| p.alpha()),
        "beta": profile.as_ref().map(|p| p.beta()),
        "vertex_types": vertex_types,
        "rho_classes": rho_classes,
        "quotient": quotient,
    })
}

pub fn verify_json(g: &Graph) -> Result<Value, deza::AnalysisError> {
    let verdict = verify_structure(g);
    let structure = match &verdict {
        StructureVerdict::Holds(w) => json!({
            "holds": true,
            "witness": {
                "s": w.s,
                "t": w.t,
                "parameters": w.parameters,
                "twins": w.twins,
                "classes": w.classes.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
                "quotient_graph6": w.quotient.to_graph6(),
                "relabeling": w.relabeling,
            },
            "failure": Value::Null,
        }),
        StructureVerdict::Fails(f) => json!({
            "holds": false,
            "witness": Value::Null,
            "failure": { "check": f.check.to_string(), "details": f.details },
        }),
    };
    let checks = checks_json(&check_properties(g)?);
    Ok(json!({ "graph6": g.to_graph6(), "structure": structure, "checks": checks }))
}

fn checks_json(report: &PropertyReport) -> Value {
    json!({
        "applicable": report.applicable,
        "precondition_failure": report.precondition_failure,
        "entries": report.entries.iter().map(|e| json!({
            "id": e.id,
            "applicable": e.applicable,
            "passed": e.passed,
            "details": e.details,
        })).collect::<Vec<_>>(),
    })
}

/// Renders a JSON object as an indented key/value table.
pub fn table(value: &Value) -> String {
    let mut out = String::new();
    fn walk(out: &mut String, key: &str, value: &Value, indent: usize) {
        let pad = "  ".repeat(indent);
        match value {
            Value::Object(map) => {
                if !key.is_empty() {
                    out.push_str(&format!("{pad}{key}:\n"));
                }
                for (k, v) in map {
                    walk(out, k, v, indent + usize::from(!key.is_empty()));
                }
            }
            Value::Array(items) if items.iter().all(|i| i.is_object()) && !items.is_empty() => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    walk(out, "-", item, indent + 1);
                }
            }
            _ => {
                out.push_str(&format!("{pad}{key}: {value}\n"));
            }
        }
    }
    walk(&mut out, "", value, 0);
    out
}
