use serde_json::{json, Value};

use totdom::graph::{girth, min_degree, Girth};
use totdom::{Edge, Error, Graph};

/// Everything one invocation prints, in both output modes.
#[derive(Debug)]
pub struct Outcome {
    pub input: Option<Value>,
    pub result: Value,
    pub text: String,
    pub status: u8,
    pub error: Option<String>,
}

impl Outcome {
    pub fn ok(input: Option<Value>, result: Value, text: String, status: u8) -> Self {
        Outcome {
            input,
            result,
            text,
            status,
            error: None,
        }
    }

    pub fn failed(message: String) -> Self {
        Outcome {
            input: None,
            result: Value::Null,
            text: String::new(),
            status: 2,
            error: Some(message),
        }
    }

    pub fn render(&self, as_json: bool) -> String {
        if !as_json {
            return self.text.clone();
        }
        let args: Vec<String> = std::env::args().skip(1).collect();
        let mut doc = json!({
            "command": args,
            "exit_status": self.status,
        });
        if let Some(input) = &self.input {
            doc["input"] = input.clone();
        }
        if let Some(e) = &self.error {
            doc["error"] = json!(e);
        } else {
            doc["result"] = self.result.clone();
        }
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }
}

pub fn fingerprint(g: &Graph) -> Value {
    json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "min_degree": min_degree(g).ok(),
        "girth": match girth(g) {
            Girth::Finite(k) => json!(k),
            Girth::Infinite => json!("infinite"),
        },
    })
}

pub fn labels(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.label(v)).collect()
}

pub fn edge_pairs<'a>(g: &Graph, es: impl IntoIterator<Item = &'a Edge>) -> Vec<[String; 2]> {
    es.into_iter()
        .map(|e| [g.label(e.u), g.label(e.v)])
        .collect()
}

pub fn edge_text<'a>(g: &Graph, es: impl IntoIterator<Item = &'a Edge>) -> String {
    let parts: Vec<String> = es.into_iter().map(|e| g.edge_label(e)).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Error message with vertex ids replaced by labels where the graph is known.
pub fn describe_error(g: Option<&Graph>, e: &Error) -> String {
    let Some(g) = g else {
        return e.to_string();
    };
    match e {
        Error::IsolatedVertex(v) => {
            format!(
                "isolated vertex: gamma_t undefined (vertex {})",
                g.label(*v)
            )
        }
        Error::NotAMatching(a, b) => format!(
            "edges {} and {} share an endpoint, not a matching",
            g.edge_label(a),
            g.edge_label(b)
        ),
        Error::NotMaximal(a) => format!(
            "matching is not maximal: edge {} is not dominated",
            g.edge_label(a)
        ),
        Error::EdgeNotInGraph(a) => format!("edge {} is not in the graph", g.edge_label(a)),
        other => other.to_string(),
    }
}
