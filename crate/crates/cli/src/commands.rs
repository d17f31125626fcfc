//! Subcommand implementations.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, bail, ensure, Context, Result};
use num_integer::Integer;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use sigdom::constructions::{
    construct_igraph, construct_pn1_tight, upper_bound, ConstructionResult,
};
use sigdom::domination::{
    cubic_lower_bound, is_signed_k_tuple, min_signed_dds, min_signed_k_tuple, SolveResult,
};
use sigdom::families::{format_vertex_set, igraph, parse_vertex, parse_vertex_set, vertex_label};
use sigdom::io::{
    parse_edge_list, parse_signed_edge_list, write_edge_list, write_signed_edge_list, ParsedGraph,
    ParsedSigned,
};
use sigdom::report::{ConstructionRecord, SolveRecord, VerdictRecord};
use sigdom::{BalanceCertificate, Budget, Family, SignedGraph, SolveOptions, VertexSet};

use crate::output::{render, Reporter, Status};
use crate::{
    Cli, Command, ConstructArgs, GenArgs, InputArgs, SetArgs, SignArgs, SolveArgs, SweepArgs,
    SwitchArgs, VerifyArgs,
};

/// Data a command produces besides its report, e.g. an edge list.
struct Payload {
    text: String,
    out: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Result<Status> {
    let mut rep = Reporter::new(cli.seed);
    let (status, payload) = match &cli.command {
        Command::Gen(a) => gen(&mut rep, a)?,
        Command::Sign(a) => sign(&mut rep, a, cli.seed)?,
        Command::Verify(a) => (verify(&mut rep, a)?, None),
        Command::Construct(a) => (construct(&mut rep, a, cli.seed)?, None),
        Command::Solve(a) => (solve(&mut rep, a)?, None),
        Command::Sweep(a) => sweep(&mut rep, a, cli.seed)?,
        Command::Balance(a) => (balance(&mut rep, a)?, None),
        Command::Switch(a) => switch(&mut rep, a)?,
        Command::DecomposeCut(a) => (decompose_cut(&mut rep, a)?, None),
    };
    let (report, lines) = rep.finish();
    let text = render(&report, &lines, cli.json);
    match payload {
        // Data on stdout keeps pipes clean; the report moves to stderr.
        Some(Payload {
            text: data,
            out: None,
        }) => {
            print!("{data}");
            eprint!("{text}");
        }
        Some(Payload {
            text: data,
            out: Some(path),
        }) => {
            fs::write(&path, data).with_context(|| format!("writing {}", path.display()))?;
            print!("{text}");
        }
        None => print!("{text}"),
    }
    std::io::stdout().flush()?;
    Ok(status)
}

fn family_from(words: &[String]) -> Result<Family> {
    let words: Vec<&str> = words.iter().map(String::as_str).collect();
    Ok(Family::from_words(&words)?)
}

/// Reads a graph from a plain or signed edge list.
fn load_graph(rep: &mut Reporter, path: &Path) -> Result<ParsedGraph> {
    let text = rep.read_input(path)?;
    match parse_edge_list(&text) {
        Ok(g) => Ok(g),
        Err(plain_err) => match parse_signed_edge_list(&text) {
            Ok(s) => Ok(ParsedGraph {
                graph: s.signed.into_parts().0,
                family: s.family,
            }),
            Err(_) => {
                Err(anyhow!(plain_err)).with_context(|| format!("parsing {}", path.display()))
            }
        },
    }
}

fn load_signed(rep: &mut Reporter, path: &Path) -> Result<ParsedSigned> {
    let text = rep.read_input(path)?;
    parse_signed_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn labels(vertices: &[usize], rim: Option<usize>) -> Vec<String> {
    vertices
        .iter()
        .map(|&v| rim.map_or_else(|| v.to_string(), |n| vertex_label(n, v)))
        .collect()
}

fn gen(rep: &mut Reporter, a: &GenArgs) -> Result<(Status, Option<Payload>)> {
    let family = family_from(&a.family)?;
    let graph = family.build()?;
    rep.value("family", family.to_string());
    rep.value("vertices", graph.vertex_count());
    rep.value("edges", graph.edge_count());
    let text = write_edge_list(&graph, Some(&family));
    Ok((
        Status::Ok,
        Some(Payload {
            text,
            out: a.out.clone(),
        }),
    ))
}

fn sign(rep: &mut Reporter, a: &SignArgs, seed: u64) -> Result<(Status, Option<Payload>)> {
    let parsed = load_graph(rep, &a.graph)?;
    let rim = parsed.rim_size();
    let (signed, mode) = if a.all_positive {
        (
            SignedGraph::all_positive(parsed.graph),
            "all-positive".to_string(),
        )
    } else if let Some(p) = a.random {
        (
            SignedGraph::random(parsed.graph, seed, p)?,
            format!("random p={p}"),
        )
    } else if let Some(path) = &a.negative {
        let text = rep.read_input(path)?;
        let n = parsed.graph.vertex_count();
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            ensure!(
                tokens.len() == 2,
                "{}:{}: expected \"a b\"",
                path.display(),
                i + 1
            );
            let end = |t: &str| {
                parse_vertex(t, rim, n).with_context(|| format!("{}:{}", path.display(), i + 1))
            };
            pairs.push((end(tokens[0])?, end(tokens[1])?));
        }
        (
            SignedGraph::with_negative_edges(parsed.graph, pairs)?,
            "explicit".to_string(),
        )
    } else {
        unreachable!("clap requires a signing mode")
    };
    rep.value("mode", mode);
    rep.value("negative_edges", signed.negative_edges().len());
    let text = write_signed_edge_list(&signed, parsed.family.as_ref());
    Ok((
        Status::Ok,
        Some(Payload {
            text,
            out: a.out.clone(),
        }),
    ))
}

fn verify(rep: &mut Reporter, a: &VerifyArgs) -> Result<Status> {
    let parsed = load_signed(rep, &a.signed)?;
    let rim = parsed.rim_size();
    let n = parsed.signed.graph().vertex_count();
    let set = parse_vertex_set(&a.set, rim, n)?;
    let verdict = is_signed_k_tuple(&parsed.signed, &set, a.k)?;
    rep.value("size", set.len());
    rep.record(&VerdictRecord::new(&verdict, rim));
    Ok(if verdict.ok() {
        Status::Ok
    } else {
        Status::Negative
    })
}

fn construct(rep: &mut Reporter, a: &ConstructArgs, seed: u64) -> Result<Status> {
    let family = family_from(&a.family)?;
    let (n, j, k) = match family {
        Family::Petersen { n, k } => (n, 1, k),
        Family::IGraph { n, j, k } => (n, j, k),
        Family::K4Union { .. } => bail!("constructions exist for P and I families only"),
    };
    let graph = igraph(n, j, k)?.graph;

    let (result, fixed): (ConstructionResult, Option<SignedGraph>) = if a.tight {
        ensure!(j == 1 && k == 1, "--tight applies to P(2m,1) only");
        let (c, s) = construct_pn1_tight(n)?;
        (c, Some(s))
    } else {
        (construct_igraph(n, j, k)?, None)
    };
    rep.record(&ConstructionRecord::new(&family, &result));
    let bound = upper_bound(n, j, k)?;
    rep.value("closed_form_bound", bound.value);
    rep.put(
        "relaxed_bound",
        bound
            .relaxed
            .map_or_else(|| "-".to_string(), |r| r.to_string()),
        bound.relaxed.map(|r| r.to_string()),
    );

    let mut failures = Vec::new();
    if result.set.len() != result.claimed_size {
        failures.push(format!(
            "size {} != claimed {}",
            result.set.len(),
            result.claimed_size
        ));
    }
    let forest = graph.cut_subgraph(&result.set)?.is_forest();
    rep.value("cut_is_forest", forest);
    if result.cut_forest_expected && !forest {
        failures.push("cut subgraph has a cycle".to_string());
    }
    let signatures: Vec<SignedGraph> = match fixed {
        Some(s) => vec![s],
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..a.signatures)
                .map(|_| SignedGraph::random_with(graph.clone(), &mut rng, 0.5))
                .collect::<Result<_, _>>()?
        }
    };
    for (i, s) in signatures.iter().enumerate() {
        let verdict = is_signed_k_tuple(s, &result.set, 2)?;
        if let Some(f) = verdict.failure {
            failures.push(format!("signature {i}: {f:?}"));
            break;
        }
    }
    rep.value(
        "signatures_checked",
        if a.tight {
            "all-positive".to_string()
        } else {
            signatures.len().to_string()
        },
    );
    let ok = failures.is_empty();
    rep.value("self_check", if ok { "pass" } else { "fail" });
    if !ok {
        rep.put("self_check_failures", failures.join("; "), &failures);
    }
    Ok(if ok { Status::Ok } else { Status::Negative })
}

fn solve_options(
    max_n: usize,
    max_nodes: Option<u64>,
    secs: Option<f64>,
    threads: usize,
) -> Result<SolveOptions> {
    let time_limit = secs
        .map(|s| Duration::try_from_secs_f64(s).map_err(|_| anyhow!("bad time limit {s}")))
        .transpose()?;
    Ok(SolveOptions {
        max_vertices: max_n,
        budget: Budget {
            max_nodes,
            time_limit,
        },
        threads: threads.max(1),
    })
}

fn solve_signed(s: &SignedGraph, k: usize, opts: &SolveOptions) -> Result<SolveResult> {
    Ok(if k == 2 {
        min_signed_dds(s, opts)?
    } else {
        min_signed_k_tuple(s, k, opts)?
    })
}

fn solve(rep: &mut Reporter, a: &SolveArgs) -> Result<Status> {
    let parsed = load_signed(rep, &a.signed)?;
    let opts = solve_options(a.max_n, a.max_nodes, a.time_limit, a.threads)?;
    let result = solve_signed(&parsed.signed, a.k, &opts)?;
    rep.record(&SolveRecord::new(&result, parsed.rim_size()));
    Ok(if result.limits_hit {
        Status::BudgetExhausted
    } else {
        Status::Ok
    })
}

/// `a..b` (inclusive), `a..=b`, or a single number.
fn parse_range(spec: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .with_context(|| format!("bad range {spec:?}"))
    };
    match spec.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let v = num(spec)?;
            Ok(v..=v)
        }
    }
}

#[derive(Serialize)]
struct SweepRow {
    n: usize,
    j: usize,
    k: usize,
    d: usize,
    case_tag: String,
    construction_size: usize,
    closed_form_bound: usize,
    lower_bound: usize,
    solver_value: Option<usize>,
    sandwich_ok: bool,
}

fn sweep(rep: &mut Reporter, a: &SweepArgs, seed: u64) -> Result<(Status, Option<Payload>)> {
    let ns = parse_range(&a.n)?;
    let ks = parse_range(&a.k)?;
    let mut params = Vec::new();
    for n in ns {
        for k in ks.clone() {
            match a.family.as_str() {
                "P" => params.push((n, 1, k)),
                "I" => {
                    let js = a.j.as_deref().map_or(Ok(2..=k), parse_range)?;
                    params.extend(js.filter(|&j| j <= k).map(|j| (n, j, k)));
                }
                other => bail!("sweep supports families P and I, not {other:?}"),
            }
        }
    }

    let opts = solve_options(a.cap, a.max_nodes, None, 1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut csv = csv::Writer::from_writer(Vec::new());
    let (mut rows, mut skipped, mut solved, mut failures, mut exhausted) = (0, 0, 0, 0, 0);
    for (n, j, k) in params {
        let Ok(c) = construct_igraph(n, j, k) else {
            skipped += 1;
            continue;
        };
        let graph = igraph(n, j, k)?.graph;
        let lower = cubic_lower_bound(&graph)?;
        let bound = upper_bound(n, j, k)?.value;
        let mut value = None;
        let mut hit = false;
        if graph.vertex_count() <= a.cap {
            for _ in 0..a.signatures {
                let s = SignedGraph::random_with(graph.clone(), &mut rng, 0.5)?;
                let r = min_signed_dds(&s, &opts)?;
                hit |= r.limits_hit;
                value = value.max(Some(r.value));
            }
        }
        let value = if hit { None } else { value };
        exhausted += usize::from(hit);
        solved += usize::from(value.is_some());
        let sandwich_ok = lower <= c.set.len()
            && c.set.len() == bound
            && value.is_none_or(|v| lower <= v && v <= c.set.len());
        failures += usize::from(!sandwich_ok);
        rows += 1;
        csv.serialize(SweepRow {
            n,
            j,
            k,
            d: n.gcd(&k),
            case_tag: c.case_tag.to_string(),
            construction_size: c.set.len(),
            closed_form_bound: bound,
            lower_bound: lower,
            solver_value: value,
            sandwich_ok,
        })?;
    }
    let text = String::from_utf8(csv.into_inner().map_err(|e| anyhow!("{e}"))?)?;
    rep.value("rows", rows);
    rep.value("skipped", skipped);
    rep.value("solved", solved);
    rep.value("budget_exhausted", exhausted);
    rep.value("sandwich_failures", failures);
    let status = if failures > 0 {
        Status::Negative
    } else if exhausted > 0 {
        Status::BudgetExhausted
    } else {
        Status::Ok
    };
    Ok((
        status,
        Some(Payload {
            text,
            out: a.out.clone(),
        }),
    ))
}

fn balance(rep: &mut Reporter, a: &InputArgs) -> Result<Status> {
    let parsed = load_signed(rep, &a.signed)?;
    let rim = parsed.rim_size();
    match parsed.signed.is_balanced() {
        BalanceCertificate::Balanced { marking } => {
            let minus: Vec<usize> = (0..marking.len())
                .filter(|&v| marking[v].is_negative())
                .collect();
            let minus = labels(&minus, rim);
            rep.value("balanced", true);
            rep.put("negative_marked", minus.join(","), &minus);
            Ok(Status::Ok)
        }
        BalanceCertificate::Unbalanced { witness_cycle } => {
            let cycle = labels(&witness_cycle, rim);
            rep.value("balanced", false);
            rep.put("witness_cycle", cycle.join(","), &cycle);
            Ok(Status::Negative)
        }
    }
}

fn switch(rep: &mut Reporter, a: &SwitchArgs) -> Result<(Status, Option<Payload>)> {
    let parsed = load_signed(rep, &a.signed)?;
    let rim = parsed.rim_size();
    let set = parse_vertex_set(&a.set, rim, parsed.signed.graph().vertex_count())?;
    let switched = parsed.signed.switch(&set)?;
    rep.value("switched_at", format_vertex_set(&set, rim));
    rep.value("negative_edges", switched.negative_edges().len());
    let text = write_signed_edge_list(&switched, parsed.family.as_ref());
    Ok((
        Status::Ok,
        Some(Payload {
            text,
            out: a.out.clone(),
        }),
    ))
}

fn decompose_cut(rep: &mut Reporter, a: &SetArgs) -> Result<Status> {
    let parsed = load_graph(rep, &a.graph)?;
    let rim = parsed.rim_size();
    let set: VertexSet = parse_vertex_set(&a.set, rim, parsed.graph.vertex_count())?;
    let cut = parsed.graph.cut_subgraph(&set)?;
    rep.value("cut_edges", cut.edge_count());
    let mut profile = std::collections::BTreeMap::new();
    for d in cut.degrees() {
        *profile.entry(d).or_insert(0usize) += 1;
    }
    let profile_text = profile
        .iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect::<Vec<_>>()
        .join(",");
    rep.put("degree_profile", profile_text, &profile);
    rep.value("two_regular", cut.is_regular(2));
    if !cut.is_even() {
        rep.value("even", false);
        return Ok(Status::Negative);
    }
    rep.value("even", true);
    let cycles: Vec<Vec<String>> = cut
        .cycle_decomposition()?
        .cycles
        .iter()
        .map(|c| labels(c, rim))
        .collect();
    let text = cycles
        .iter()
        .map(|c| c.join("-"))
        .collect::<Vec<_>>()
        .join(";");
    rep.value("cycle_count", cycles.len());
    rep.put("cycles", text, &cycles);
    Ok(Status::Ok)
}
