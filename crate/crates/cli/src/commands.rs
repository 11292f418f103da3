use std::io::Read;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use f5_core::algebra::{
    fmt_rational, rat, rational_to_f64, verify_conjugation, verify_gamma_inverse, verify_pentagon_identity,
    ExactScalar, Rational,
};
use f5_core::construct::{
    balanced_turan, complete_three_partite, gamma_graph, gamma_offsets, tightness_witness, uniform_blowup,
    wheel_blowup, wheel_edge_count, wheel_min_degree_formula,
};
use f5_core::detect::{
    audit_link_facts, find_f5, find_k4_minus, find_k4_shadow, is_cancellative, EDGE_LINKS_DISJOINT,
    EDGE_LINKS_TRIANGLE_SPLIT,
};
use f5_core::feasibility::{
    aes_parameter_check, gamma_scan, gamma_system, numeric_claim_audit, opt1_certificate, opt2_certificate,
    weakened_threshold, wheel_scan, wheel_system, ExtendabilityParams, ScanConfig, SlackScan,
};
use f5_core::graph::{independence_number, three_partition, DEFAULT_COLORING_CAP};
use f5_core::io::{read_three_graph, write_graph, write_three_graph, EdgeList};
use f5_core::par::Execution;
use f5_core::search::{
    check_main_theorem, fuzz_main_theorem, run_search, Family, Mode, SearchSpec, Verdict,
};
use f5_core::{CertificateReport, Check, Graph, ThreeGraph, Witness};

use crate::render::render;
use crate::{
    AuditArgs, CheckArgs, Cli, Command, ConstructArgs, Emit, LemmaArgs, LemmaName, ModeArg, Outcome, SearchArgs,
    ValidateArgs,
};

fn arity(flag: &str, values: &Option<Vec<usize>>, k: usize) -> Result<()> {
    match values {
        Some(v) if v.len() != k => bail!("{flag} expects {k} comma-separated values, got {}", v.len()),
        _ => Ok(()),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    if let Command::Construct(a) = &cli.command {
        arity("--three-partite", &a.three_partite, 3)?;
        arity("--wheel", &a.wheel, 6)?;
        arity("--parts", &a.parts, 6)?;
    }
    let allows_3g = matches!(cli.command, Command::Construct(_) | Command::Search(_));
    if g.emit == Emit::ThreeG && !allows_3g {
        bail!("--emit 3g only applies to `construct` and `search`");
    }
    let scan = ScanConfig::new(g.resolution).with_seed(g.seed);
    let (value, pass, text3g) = match &cli.command {
        Command::Construct(a) => construct(a)?,
        Command::Check(a) => no_3g(check(a)?),
        Command::Lemma(a) => no_3g(lemma(a, &scan)?),
        Command::Audit(a) => no_3g(audit(a, &scan)?),
        Command::Search(a) => search(a, g.budget, g.seed)?,
        Command::Validate(a) => no_3g(validate(a)?),
    };
    let output = match g.emit {
        Emit::Json => serde_json::to_string(&value)?,
        Emit::Text => render(&value),
        Emit::ThreeG => text3g.ok_or_else(|| anyhow!("this result has no graph to emit"))?,
    };
    Ok(Outcome { output, pass })
}

type Produced = (Value, bool, Option<String>);

fn no_3g((v, pass): (Value, bool)) -> Produced {
    (v, pass, None)
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph_file(path: &Path) -> Result<ThreeGraph> {
    read_three_graph(&read_input(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn edge_list(h: &ThreeGraph) -> Value {
    serde_json::to_value(EdgeList::from(h)).expect("edge list")
}

fn exact(q: &Rational) -> Value {
    json!({ "exact": fmt_rational(q), "approx": rational_to_f64(q) })
}

/// Degree data and the forbidden-configuration profile of `h`.
pub fn properties(h: &ThreeGraph) -> Result<Value> {
    let n = h.n();
    let delta = h.min_degree();
    let lhs = 45 * delta as u128;
    let rhs = 4 * (n as u128) * (n as u128);
    let relation = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => "above",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Less => "below",
    };
    let ratio = if n == 0 { None } else { Some(rat(delta as i64, (n * n) as i64)) };
    let three_partite = if n <= DEFAULT_COLORING_CAP {
        Value::Bool(three_partition(h)?.is_some())
    } else {
        Value::Null
    };
    Ok(json!({
        "n": n,
        "edges": h.edge_count(),
        "min_degree": delta,
        "max_degree": h.degree_profile().max,
        "min_degree_over_n2": ratio.as_ref().map(exact),
        "threshold_4n2_over_45": relation,
        "f5_free": find_f5(h).is_none(),
        "k4_minus_free": find_k4_minus(h).is_none(),
        "cancellative": is_cancellative(h),
        "k4_in_shadow": find_k4_shadow(h).is_some(),
        "three_partite": three_partite,
    }))
}

fn graph_properties(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "regular_degree": g.regular_degree(),
        "min_degree": g.min_degree(),
    })
}

fn construct(a: &ConstructArgs) -> Result<Produced> {
    if let Some(d) = a.gamma {
        let mut g = gamma_graph(d)?;
        if let Some(m) = a.blowup {
            g = g.blowup(&vec![m; g.n()])?;
        }
        let value = json!({
            "kind": "gamma",
            "d": d,
            "offsets": gamma_offsets(d),
            "blowup": a.blowup,
            "properties": graph_properties(&g),
            "graph": serde_json::to_value(EdgeList::from(&g))?,
        });
        return Ok((value, true, Some(write_graph(&g))));
    }

    let mut extra = serde_json::Map::new();
    let mut pass = true;
    let (kind, h) = if let Some(n) = a.turan {
        ("turan", balanced_turan(n))
    } else if let Some(p) = &a.three_partite {
        ("three-partite", complete_three_partite([p[0], p[1], p[2]]))
    } else if a.wheel.is_some() || a.wheel_tight.is_some() {
        let (x, y) = match (&a.wheel, a.wheel_tight) {
            (Some(w), _) => (w[0], [w[1], w[2], w[3], w[4], w[5]]),
            (None, Some(n)) => {
                if n == 0 || n % 15 != 0 {
                    bail!("--wheel-tight needs a positive multiple of 15, got {n}");
                }
                (n / 3, [2 * n / 15; 5])
            }
            _ => unreachable!(),
        };
        let h = wheel_blowup(x, y);
        let formula_delta = wheel_min_degree_formula(x, y);
        let formula_edges = wheel_edge_count(x, y);
        pass &= a.blowup.is_some() || (formula_delta == h.min_degree() && formula_edges == h.edge_count());
        extra.insert("hub".into(), json!(x));
        extra.insert("rim".into(), json!(y));
        extra.insert("min_degree_formula".into(), json!(formula_delta));
        extra.insert("edge_count_formula".into(), json!(formula_edges));
        ("wheel-blowup", h)
    } else if let Some(n) = a.witness {
        let parts = a.parts.as_ref().map(|p| [p[0], p[1], p[2], p[3], p[4], p[5]]);
        let w = tightness_witness(n, parts)?;
        let sizes = |r: &[std::ops::Range<usize>; 3]| r.iter().map(|x| x.len()).collect::<Vec<_>>();
        extra.insert("y_parts".into(), json!(sizes(&w.layout.y)));
        extra.insert("z_parts".into(), json!(sizes(&w.layout.z)));
        extra.insert("clique".into(), json!([0, 1, 2, 3]));
        let target = rat(((n - 10) * (n - 10)) as i64, 12);
        extra.insert("asymptotic_min_degree_target".into(), exact(&target));
        extra.insert("f5_witness".into(), serde_json::to_value(find_f5(&w.graph))?);
        ("tightness-witness", w.graph)
    } else {
        unreachable!("clap enforces one construction")
    };
    let h = match a.blowup {
        Some(m) => uniform_blowup(&h, m)?,
        None => h,
    };
    extra.insert("kind".into(), json!(kind));
    extra.insert("blowup".into(), json!(a.blowup));
    extra.insert("properties".into(), properties(&h)?);
    extra.insert("graph".into(), edge_list(&h));
    let text = write_three_graph(&h);
    Ok((Value::Object(extra), pass, Some(text)))
}

fn check(a: &CheckArgs) -> Result<(Value, bool)> {
    let h = read_graph_file(&a.file)?;
    let all = !(a.f5 || a.k4minus || a.k4shadow || a.cancellative || a.three_partite || a.alpha || a.links || a.theorem);
    let mut checks = serde_json::Map::new();
    let mut pass = true;
    let f5 = find_f5(&h);
    let k4m = find_k4_minus(&h);
    if all || a.f5 {
        checks.insert("f5".into(), json!({ "free": f5.is_none(), "witness": f5 }));
    }
    if all || a.k4minus {
        checks.insert("k4minus".into(), json!({ "free": k4m.is_none(), "witness": k4m }));
    }
    if all || a.k4shadow {
        let w = find_k4_shadow(&h);
        checks.insert("k4shadow".into(), json!({ "present": w.is_some(), "witness": w }));
    }
    if all || a.cancellative {
        checks.insert("cancellative".into(), json!(is_cancellative(&h)));
    }
    if all || a.three_partite {
        let p: Option<Witness> = three_partition(&h)?;
        checks.insert(
            "3partite".into(),
            json!({ "three_partite": p.is_some(), "partition": p.map(|w| w.mapping) }),
        );
    }
    if all || a.alpha {
        let ah = independence_number(&h)?;
        let ag = f5_core::graph::max_independent_set(&h.shadow(), f5_core::graph::DEFAULT_INDEPENDENCE_CAP)?.len();
        pass &= ah == ag;
        checks.insert("alpha".into(), json!({ "alpha": ah, "alpha_shadow": ag, "equal": ah == ag }));
    }
    if all || a.links {
        // each fact is implied by cancellativity or by F5-freeness
        let audit = audit_link_facts(&h);
        let cancellative = f5.is_none() && k4m.is_none();
        let mut facts = Vec::new();
        for f in &audit.facts {
            let f5_fact = f.fact == EDGE_LINKS_DISJOINT || f.fact == EDGE_LINKS_TRIANGLE_SPLIT;
            let applies = if f5_fact { f5.is_none() } else { cancellative };
            pass &= !applies || f.holds;
            facts.push(json!({
                "fact": f.fact,
                "holds": f.holds,
                "implied": applies,
                "violations": f.violations.len(),
                "first_violation": f.violations.first(),
            }));
        }
        checks.insert("links".into(), Value::Array(facts));
    }
    if all || a.theorem {
        let t = check_main_theorem(&h)?;
        pass &= t.verdict != Verdict::Counterexample;
        checks.insert("theorem".into(), serde_json::to_value(t)?);
    }
    let value = json!({
        "n": h.n(),
        "edges": h.edge_count(),
        "min_degree": h.min_degree(),
        "checks": checks,
        "pass": pass,
    });
    Ok((value, pass))
}

/// Parses `A:B` as `A + B√5`, or a plain rational `A`.
fn parse_scalar(s: &str) -> Result<ExactScalar> {
    let q = |t: &str| t.trim().parse::<Rational>().map_err(|_| anyhow!("bad rational {t:?}"));
    Ok(match s.split_once(':') {
        Some((a, b)) => ExactScalar::new(q(a)?, q(b)?),
        None => ExactScalar::rational(q(s)?),
    })
}

fn weakened_report(name: &str, parameter: Option<i64>, scan: SlackScan, strict: bool) -> CertificateReport {
    let details = vec![
        Check::new("scan-strictly-feasible", strict)
            .exact(scan.best_slack.to_string())
            .approx(scan.best_slack.to_f64())
            .note(format!("threshold 3/45; {} coarse points", scan.coarse_points)),
        Check::new("witness-point", strict).exact(
            scan.best_point.iter().map(fmt_rational).collect::<Vec<_>>().join(", "),
        ),
    ];
    CertificateReport::new(name, parameter, details)
}

fn need_d(a: &LemmaArgs) -> Result<usize> {
    a.d.ok_or_else(|| anyhow!("--d is required for this lemma"))
}

fn lemma(a: &LemmaArgs, scan: &ScanConfig) -> Result<(Value, bool)> {
    let report = match a.name {
        LemmaName::GammaInverse => verify_gamma_inverse(need_d(a)?)?,
        LemmaName::Conjugation => verify_conjugation(need_d(a)?)?,
        LemmaName::Pentagon => verify_pentagon_identity()?,
        LemmaName::Opt1 => opt1_certificate(scan)?,
        LemmaName::Opt2 => opt2_certificate(need_d(a)?, scan)?,
        LemmaName::Parameters => {
            let mut p = ExtendabilityParams::stability_choice();
            let set = |slot: &mut ExactScalar, v: &Option<String>| -> Result<()> {
                if let Some(s) = v {
                    *slot = parse_scalar(s)?;
                }
                Ok(())
            };
            set(&mut p.alpha, &a.alpha)?;
            set(&mut p.beta, &a.beta)?;
            set(&mut p.delta, &a.delta)?;
            set(&mut p.gamma, &a.gamma)?;
            aes_parameter_check(&p)
        }
        LemmaName::WeakenedOpt1 => {
            let t = weakened_threshold();
            let s = wheel_scan(&t, scan)?;
            let strict = s.strictly_feasible(&wheel_system(&t));
            weakened_report("weakened-opt1", None, s, strict)
        }
        LemmaName::WeakenedOpt2 => {
            let d = need_d(a)?;
            let t = weakened_threshold();
            let s = gamma_scan(d, &t, scan)?;
            let strict = s.strictly_feasible(&gamma_system(d, &t)?);
            weakened_report("weakened-opt2", Some(d as i64), s, strict)
        }
    };
    let pass = report.pass;
    Ok((serde_json::to_value(report)?, pass))
}

fn audit(a: &AuditArgs, scan: &ScanConfig) -> Result<(Value, bool)> {
    let all = a.all || !(a.claims || a.parameters || a.matrices || a.systems);
    let mut reports: Vec<CertificateReport> = Vec::new();
    if all || a.claims {
        reports.push(numeric_claim_audit());
    }
    if all || a.parameters {
        reports.push(aes_parameter_check(&ExtendabilityParams::stability_choice()));
    }
    if all || a.matrices {
        for d in 2..=20 {
            reports.push(verify_gamma_inverse(d)?);
        }
        for d in 2..=12 {
            reports.push(verify_conjugation(d)?);
        }
        reports.push(verify_pentagon_identity()?);
    }
    if all || a.systems {
        reports.push(opt1_certificate(scan)?);
        for d in 2..=12 {
            reports.push(opt2_certificate(d, scan)?);
        }
    }
    let pass = reports.iter().all(|r| r.pass);
    let summary: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "lemma": r.lemma, "parameter": r.parameter, "pass": r.pass }))
        .collect();
    Ok((json!({ "pass": pass, "summary": summary, "reports": reports }), pass))
}

fn search(a: &SearchArgs, budget: Option<u64>, seed: u64) -> Result<Produced> {
    if let Some(count) = a.fuzz {
        if a.min_n > a.max_n || a.max_n > f5_core::search::SEARCH_CAP + 1 {
            bail!("--min-n/--max-n must satisfy min <= max <= 8");
        }
        let s = fuzz_main_theorem(count, a.min_n..=a.max_n, seed, Execution::Parallel)?;
        let pass = s.counterexamples == 0;
        let value = json!({ "fuzz": s, "seed": seed, "orders": [a.min_n, a.max_n], "pass": pass });
        return Ok((value, pass, None));
    }
    let n = a.n.expect("clap requires --n without --fuzz");
    let family: Family = a.forbid.parse().map_err(|e: String| anyhow!("--forbid: {e}"))?;
    let mode = match a.mode {
        ModeArg::MaxEdges => Mode::MaxEdges,
        ModeArg::MaxMinDegree => Mode::MaxMinDegree,
    };
    let mut spec = SearchSpec::new(n, family, mode).reduced(a.reduced).with_budget(budget);
    spec.require_non_3partite = a.non_3partite;
    let r = run_search(&spec)?;
    let valid = r.validate(&spec);
    let pass = valid && r.exhaustive;
    let value = json!({
        "n": n,
        "forbid": family.to_string(),
        "mode": mode,
        "non_3partite": a.non_3partite,
        "reduced": a.reduced,
        "budget": budget,
        "optimum": r.optimum,
        "exhaustive": r.exhaustive,
        "nodes": r.nodes,
        "witness": r.witness.as_ref().map(edge_list),
        "witness_3g": r.witness.as_ref().map(write_three_graph),
        "witness_valid": valid,
        "pass": pass,
    });
    Ok((value, pass, r.witness.as_ref().map(write_three_graph)))
}

fn validate(a: &ValidateArgs) -> Result<(Value, bool)> {
    if let Some(wpath) = &a.witness {
        let h = read_graph_file(&a.file)?;
        let w: Witness = serde_json::from_str(&read_input(wpath)?).context("parsing witness")?;
        let ok = w.validate_three(&h);
        return Ok((json!({ "kind": "witness", "witness_kind": w.kind, "pass": ok }), ok));
    }
    let v: Value = serde_json::from_str(&read_input(&a.file)?).context("parsing result JSON")?;
    let mut mismatches = Vec::new();
    let kind;
    if v.get("forbid").is_some() {
        kind = "search";
        let n = v["n"].as_u64().ok_or_else(|| anyhow!("missing n"))? as usize;
        let family: Family = v["forbid"].as_str().unwrap_or("").parse().map_err(|e: String| anyhow!(e))?;
        let mode: Mode = serde_json::from_value(v["mode"].clone()).context("mode")?;
        let mut spec = SearchSpec::new(n, family, mode);
        spec.require_non_3partite = v["non_3partite"].as_bool().unwrap_or(false);
        match (&v["witness"], v["optimum"].as_u64()) {
            (Value::Null, None) => {}
            (w, Some(opt)) if !w.is_null() => {
                let h: EdgeList = serde_json::from_value(w.clone()).context("witness")?;
                let h = h.to_three_graph()?;
                if !spec.admits(&h) {
                    mismatches.push("witness violates the search constraints".to_string());
                }
                if spec.value(&h) != opt as usize {
                    mismatches.push(format!("witness value {} != optimum {opt}", spec.value(&h)));
                }
            }
            _ => mismatches.push("optimum and witness disagree on existence".to_string()),
        }
    } else if let Some(g) = v.get("graph").filter(|_| v["kind"] != "gamma") {
        kind = "construct";
        let h = serde_json::from_value::<EdgeList>(g.clone())?.to_three_graph()?;
        let recomputed = properties(&h)?;
        if let (Some(claimed), Some(actual)) = (v["properties"].as_object(), recomputed.as_object()) {
            for (k, val) in claimed {
                if actual.get(k) != Some(val) {
                    mismatches.push(format!("{k}: recorded {val}, recomputed {}", actual.get(k).unwrap_or(&Value::Null)));
                }
            }
        } else {
            mismatches.push("missing properties".to_string());
        }
    } else if let Some(g) = v.get("graph") {
        kind = "construct";
        let g = serde_json::from_value::<EdgeList>(g.clone())?.to_graph()?;
        if v["properties"] != graph_properties(&g) {
            mismatches.push("graph properties differ".to_string());
        }
    } else {
        bail!("unrecognised result JSON (expected output of `construct` or `search`)");
    }
    let pass = mismatches.is_empty();
    Ok((json!({ "kind": kind, "pass": pass, "mismatches": mismatches }), pass))
}
