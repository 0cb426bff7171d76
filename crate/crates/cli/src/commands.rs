use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use serde_json::{json, Value};

use totdom::characterization::{
    check_theorem1_conditions, partition_matching, ConditionReport, ConditionSet,
};
use totdom::generators::{
    cycle, family_f_from_recipe, family_f_random, k_family, path, prop2_extremal, spider,
    subdivided_grid, FParams, FRecipe,
};
use totdom::graph::{min_degree, parse_edge_list, parse_edge_set, serialize_edge_list};
use totdom::oracles::{
    check_proposition1_with, minimum_maximal_matching_with, oracle_values_with,
    total_domination_number_with, SolverConfig,
};
use totdom::recognizer::{check_corollary2_conditions, recognize};
use totdom::{Edge, Error, Graph, Matching};

use crate::render::{describe_error, edge_pairs, edge_text, fingerprint, labels, Outcome};
use crate::{Command, Family};

type Run = std::result::Result<Outcome, String>;

pub fn run(cmd: &Command) -> Outcome {
    let result = match cmd {
        Command::GammaT { input } => gamma_t(input),
        Command::MuStar { input } => mu_star(input),
        Command::Recognize {
            input,
            oracle,
            certificate_out,
        } => recognize_cmd(input, *oracle, certificate_out.as_deref()),
        Command::Verify { input, matching } => verify(input, matching),
        Command::Generate {
            family,
            params,
            seed,
            recipe,
            unmarked,
            max_vertices,
            matching_out,
        } => generate(
            *family,
            params,
            *seed,
            recipe.as_deref(),
            *unmarked,
            *max_vertices,
            matching_out.as_deref(),
        ),
        Command::Bounds { input } => bounds(input),
    };
    result.unwrap_or_else(Outcome::failed)
}

fn read_text(path: &Path) -> std::result::Result<String, String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> std::result::Result<Graph, String> {
    let text = read_text(path)?;
    parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_edges(path: &Path, g: &Graph, m: &Matching) -> std::result::Result<(), String> {
    let mut s = String::new();
    for e in m.edges() {
        let _ = writeln!(s, "{}", g.edge_label(e));
    }
    std::fs::write(path, s).map_err(|e| format!("{}: {e}", path.display()))
}

fn solver_config() -> std::result::Result<SolverConfig, String> {
    SolverConfig::from_env().map_err(|e| e.to_string())
}

fn gamma_t(input: &Path) -> Run {
    let g = load(input)?;
    let r = total_domination_number_with(&g, &solver_config()?)
        .map_err(|e| describe_error(Some(&g), &e))?;
    let witness = labels(&g, r.witness.iter().copied());
    let text = format!("gamma_t = {}\nwitness: {}\n", r.value, witness.join(" "));
    let result = json!({
        "gamma_t": r.value,
        "witness": witness,
        "search_nodes": r.stats.nodes,
    });
    Ok(Outcome::ok(Some(fingerprint(&g)), result, text, 0))
}

fn mu_star(input: &Path) -> Run {
    let g = load(input)?;
    let r = minimum_maximal_matching_with(&g, &solver_config()?)
        .map_err(|e| describe_error(Some(&g), &e))?;
    let text = format!(
        "mu_star = {}\nwitness: {}\n",
        r.value,
        edge_text(&g, r.witness.edges())
    );
    let result = json!({
        "mu_star": r.value,
        "witness": edge_pairs(&g, r.witness.edges()),
        "search_nodes": r.stats.nodes,
    });
    Ok(Outcome::ok(Some(fingerprint(&g)), result, text, 0))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn degree_hint(delta: usize) -> String {
    let mut msg = format!("recognize needs minimum degree 2, found {delta}; ");
    if delta >= 3 {
        msg.push_str(
            "no graph with minimum degree 3 or more has gamma_t = 2 mu*, because gamma_t <= 2 mu* - delta + 2",
        );
    } else {
        msg.push_str("use `totdom verify` with a candidate matching, or `gamma-t` and `mu-star` for exact values");
    }
    msg
}

fn recognize_cmd(input: &Path, oracle: bool, certificate_out: Option<&Path>) -> Run {
    let g = load(input)?;
    let delta = min_degree(&g).map_err(|e| e.to_string())?;
    if delta != 2 {
        return Err(degree_hint(delta));
    }
    let out = recognize(&g).map_err(|e| describe_error(Some(&g), &e))?;
    let full = out.full_matching(&g);

    let mut text = format!("verdict: {}\n", yes_no(out.verdict));
    let mut components = Vec::new();
    for (i, c) in out.components.iter().enumerate() {
        let description = c.certificate.describe(&g);
        let _ = writeln!(
            text,
            "component {}: {}, {}",
            i + 1,
            yes_no(c.verdict),
            description
        );
        let mut cert = serde_json::to_value(&c.certificate).expect("certificates serialize");
        relabel(&g, &mut cert);
        components.push(json!({
            "vertices": labels(&g, c.vertices.iter().copied()),
            "verdict": yes_no(c.verdict),
            "description": description,
            "certificate": cert,
        }));
    }
    if let Some(m) = &full {
        let _ = writeln!(text, "certificate: {}", edge_text(&g, m.edges()));
    }
    let mut result = json!({
        "verdict": yes_no(out.verdict),
        "components": components,
        "certificate_matching": full.as_ref().map(|m| edge_pairs(&g, m.edges())),
    });

    let mut status = if out.verdict { 0 } else { 1 };
    if oracle {
        let cfg = solver_config()?;
        if g.vertex_count() > cfg.vertex_limit {
            let _ = writeln!(
                text,
                "oracle: skipped ({} vertices exceeds the solver limit {})",
                g.vertex_count(),
                cfg.vertex_limit
            );
            result["oracle"] = json!({ "skipped": true });
        } else {
            let v = oracle_values_with(&g, &cfg).map_err(|e| describe_error(Some(&g), &e))?;
            let agrees = v.is_extremal() == out.verdict;
            let _ = writeln!(
                text,
                "oracle: gamma_t = {}, mu_star = {}, {}",
                v.gamma_t,
                v.mu_star,
                if agrees { "agrees" } else { "DISAGREES" }
            );
            result["oracle"] = json!({
                "gamma_t": v.gamma_t,
                "mu_star": v.mu_star,
                "agrees": agrees,
            });
            if !agrees {
                let mut o = Outcome::ok(Some(fingerprint(&g)), result, text, 2);
                o.error = Some("recognizer and oracle disagree".into());
                return Ok(o);
            }
        }
    }
    if let (Some(path), Some(m)) = (certificate_out, &full) {
        write_edges(path, &g, m)?;
    }
    if status == 0 && full.is_none() {
        status = 2;
    }
    Ok(Outcome::ok(Some(fingerprint(&g)), result, text, status))
}

/// Replace vertex ids in a serialized certificate with labels.
fn relabel(g: &Graph, v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map.iter_mut() {
                match (k.as_str(), x.as_u64()) {
                    ("u" | "v", Some(id)) => *x = json!(g.label(id as usize)),
                    _ => relabel(g, x),
                }
            }
        }
        Value::Array(xs) => xs.iter_mut().for_each(|x| relabel(g, x)),
        _ => {}
    }
}

fn report_lines(g: &Graph, report: &ConditionReport, text: &mut String) -> Vec<Value> {
    let mut out = Vec::new();
    for (id, holds) in &report.verdicts {
        let violations: Vec<_> = report
            .violations
            .iter()
            .filter(|v| v.condition == *id)
            .collect();
        match violations.first() {
            None => {
                let _ = writeln!(text, "{id}: holds");
            }
            Some(first) => {
                let _ = writeln!(
                    text,
                    "{id}: fails: {} at {}",
                    first.explanation,
                    labels(g, first.vertices.iter().copied()).join(" ")
                );
            }
        }
        out.push(json!({
            "condition": id.to_string(),
            "holds": holds,
            "violations": violations.iter().map(|v| json!({
                "vertices": labels(g, v.vertices.iter().copied()),
                "edges": edge_pairs(g, v.edges.iter()),
                "explanation": v.explanation,
            })).collect::<Vec<_>>(),
        }));
    }
    out
}

fn verify(input: &Path, matching: &Path) -> Run {
    let g = load(input)?;
    let text_m = read_text(matching)?;
    let edges = parse_edge_set(&g, &text_m)
        .map_err(|e| format!("{}: {}", matching.display(), describe_error(Some(&g), &e)))?;
    let delta = min_degree(&g).map_err(|e| e.to_string())?;
    if !(1..=2).contains(&delta) {
        return Err(format!("verify needs minimum degree 1 or 2, found {delta}"));
    }
    let set = if delta == 2 {
        ConditionSet::MinDegreeTwo
    } else {
        ConditionSet::Theorem1
    };
    let set_name = match set {
        ConditionSet::MinDegreeTwo => "degree-two",
        ConditionSet::Theorem1 => "theorem-1",
    };
    let mut text = format!("conditions: {set_name}\n");
    let _ = writeln!(text, "matching: {}", edge_text(&g, edges.iter()));
    let mut result = json!({
        "conditions": set_name,
        "matching": edge_pairs(&g, edges.iter()),
    });
    let fail_early = |mut text: String, mut result: Value, what: &str, msg: String| {
        let _ = writeln!(text, "{what}: fails: {msg}\nverdict: conditions fail");
        result["checks"] = json!([{ "condition": what, "holds": false, "explanation": msg }]);
        result["holds"] = json!(false);
        Ok(Outcome::ok(Some(fingerprint(&g)), result, text, 1))
    };

    let m = match Matching::new(edges.iter().copied()) {
        Ok(m) => m,
        Err(e @ Error::NotAMatching(..)) => {
            return fail_early(text, result, "matching", describe_error(Some(&g), &e));
        }
        Err(e) => return Err(e.to_string()),
    };

    let report = match set {
        ConditionSet::MinDegreeTwo => {
            check_corollary2_conditions(&g, &m).map_err(|e| describe_error(Some(&g), &e))?
        }
        ConditionSet::Theorem1 => {
            if let Some(e) = m.undominated_edge(&g) {
                let msg = describe_error(Some(&g), &Error::NotMaximal(e));
                return fail_early(text, result, "maximal", msg);
            }
            match partition_matching(&g, &m) {
                Ok(p) => {
                    let show = |es: &std::collections::BTreeSet<Edge>| edge_text(&g, es.iter());
                    let _ = writeln!(text, "M+ = {}", show(&p.m_plus));
                    let _ = writeln!(text, "M- = {}", show(&p.m_minus));
                    let _ = writeln!(text, "M* = {}", show(&p.m_star));
                    result["partition"] = json!({
                        "m_plus": edge_pairs(&g, p.m_plus.iter()),
                        "m_minus": edge_pairs(&g, p.m_minus.iter()),
                        "m_star": edge_pairs(&g, p.m_star.iter()),
                    });
                }
                Err(e @ Error::Classification(_)) => {
                    let msg = match e {
                        Error::Classification(edge) => format!(
                            "edge {} joins a vertex of S- to another support vertex",
                            g.edge_label(&edge)
                        ),
                        _ => unreachable!(),
                    };
                    return fail_early(text, result, "partition", msg);
                }
                Err(e) => return Err(describe_error(Some(&g), &e)),
            }
            check_theorem1_conditions(&g, &m).map_err(|e| describe_error(Some(&g), &e))?
        }
    };
    let checks = report_lines(&g, &report, &mut text);
    let holds = report.holds();
    let _ = writeln!(
        text,
        "verdict: {}",
        if holds {
            "all conditions hold"
        } else {
            "conditions fail"
        }
    );
    result["checks"] = json!(checks);
    result["holds"] = json!(holds);
    Ok(Outcome::ok(
        Some(fingerprint(&g)),
        result,
        text,
        if holds { 0 } else { 1 },
    ))
}

fn arity(family: Family, params: &[usize], n: usize) -> std::result::Result<(), String> {
    if params.len() != n {
        let name = family_name(family);
        return Err(format!(
            "generate {name} takes {n} parameter(s), got {}",
            params.len()
        ));
    }
    Ok(())
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Spider => "spider",
        Family::SubdividedGrid => "subdivided-grid",
        Family::KFamily => "k-family",
        Family::Cycle => "cycle",
        Family::Path => "path",
        Family::Prop2 => "prop2",
        Family::FamilyF => "family-f",
    }
}

fn labeled_matching(
    g: &Graph,
    pairs: &[(String, String)],
) -> std::result::Result<Matching, String> {
    let edges = pairs.iter().map(|(a, b)| {
        let (u, v) = (g.vertex_by_label(a), g.vertex_by_label(b));
        Edge::new(u.expect("generator label"), v.expect("generator label"))
    });
    Matching::in_graph(g, edges).map_err(|e| e.to_string())
}

fn generate(
    family: Family,
    params: &[usize],
    seed: u64,
    recipe: Option<&Path>,
    unmarked: bool,
    max_vertices: usize,
    matching_out: Option<&Path>,
) -> Run {
    let err = |e: Error| e.to_string();
    let (g, m, recipe_text) = match family {
        Family::Spider => {
            arity(family, params, 1)?;
            let g = spider(params[0]).map_err(err)?;
            let legs: Vec<_> = (1..=params[0])
                .map(|i| (format!("x{i}"), format!("y{i}")))
                .collect();
            let m = labeled_matching(&g, &legs)?;
            (g, Some(m), None)
        }
        Family::SubdividedGrid => {
            arity(family, params, 1)?;
            let g = subdivided_grid(params[0]).map_err(err)?;
            let rungs: Vec<_> = (1..=params[0] + 1)
                .map(|i| (format!("u{i}"), format!("v{i}")))
                .collect();
            let m = labeled_matching(&g, &rungs)?;
            (g, Some(m), None)
        }
        Family::KFamily => {
            arity(family, params, 1)?;
            let g = k_family(params[0]).map_err(err)?;
            let m = labeled_matching(&g, &[("u".into(), "v".into())])?;
            (g, Some(m), None)
        }
        Family::Cycle => {
            arity(family, params, 1)?;
            (cycle(params[0]).map_err(err)?, None, None)
        }
        Family::Path => {
            arity(family, params, 1)?;
            (path(params[0]).map_err(err)?, None, None)
        }
        Family::Prop2 => {
            arity(family, params, 2)?;
            (
                prop2_extremal(params[0], params[1]).map_err(err)?,
                None,
                None,
            )
        }
        Family::FamilyF => {
            arity(family, params, 0)?;
            let r = match recipe {
                Some(path) => {
                    let r: FRecipe = read_text(path)?
                        .parse()
                        .map_err(|e: Error| format!("{}: {e}", path.display()))?;
                    r
                }
                None => {
                    let base = if unmarked {
                        FParams::unmarked()
                    } else {
                        FParams::default()
                    };
                    let p = FParams {
                        max_vertices,
                        ..base
                    };
                    family_f_random(seed, &p).map_err(err)?.recipe
                }
            };
            let (g, m) = family_f_from_recipe(&r).map_err(err)?;
            (g, Some(m), Some(r.to_text()))
        }
    };

    let mut text = String::new();
    let _ = write!(text, "# {}", family_name(family));
    for p in params {
        let _ = write!(text, " {p}");
    }
    if family == Family::FamilyF && recipe.is_none() {
        let _ = write!(text, " --seed {seed}");
    }
    text.push('\n');
    if let Some(r) = &recipe_text {
        text.push_str("# recipe\n");
        for line in r.lines() {
            let _ = writeln!(text, "#   {line}");
        }
    }
    if let Some(m) = &m {
        let _ = writeln!(text, "# matching: {}", edge_text(&g, m.edges()));
    }
    text.push_str(&serialize_edge_list(&g));

    if let (Some(path), Some(m)) = (matching_out, &m) {
        write_edges(path, &g, m)?;
    }
    let result = json!({
        "family": family_name(family),
        "params": params,
        "seed": (family == Family::FamilyF && recipe.is_none()).then_some(seed),
        "recipe": recipe_text,
        "vertices": labels(&g, g.vertices()),
        "edges": edge_pairs(&g, g.edges().iter()),
        "matching": m.as_ref().map(|m| edge_pairs(&g, m.edges())),
    });
    Ok(Outcome::ok(Some(fingerprint(&g)), result, text, 0))
}

fn bounds(input: &Path) -> Run {
    let g = load(input)?;
    let r =
        check_proposition1_with(&g, &solver_config()?).map_err(|e| describe_error(Some(&g), &e))?;
    let text = format!(
        "min_degree = {}\ngamma_t = {}\nmu_star = {}\nbound = {}\nslack = {}\n",
        r.min_degree, r.gamma_t, r.mu_star, r.bound, r.slack
    );
    let result = serde_json::to_value(r).expect("bound report serializes");
    Ok(Outcome::ok(
        Some(fingerprint(&g)),
        result,
        text,
        if r.holds { 0 } else { 1 },
    ))
}
