use std::path::Path;

use anyhow::{bail, Context};
use serde_json::{json, Value};

use removal_core::convexity::{convex_span_search, verify_convex_equation, ConvexOptions};
use removal_core::cycle_space::{
    certify_strongly_genus_one, count_proper_colorings, cycle_space_system, falsify_strongly_genus_one,
    increasing_cycle_unavoidable, roles_of, CertifyOptions, IncreasingCycleVerdict, Labeling, SgoOutcome,
};
use removal_core::equations::{
    behrend_set, falsify_genus_one, is_genus_one, max_solution_free_subset, EquationSystem, GenusVerdict, SubsetSearch,
};
use removal_core::graph::{
    blowup, complete_graph, cycle_graph, greedy_edge_disjoint_packing, grotzsch_graph, parse_graph, path_graph,
    serialize_general, serialize_tripartite, shortest_odd_cycle, shortest_odd_cycle_peel, triangles,
    tripartite_triangles, CyclePacking, GeneralGraph, PeelOutcome, TripartiteGraph,
};
use removal_core::par::Exec;
use removal_core::pseudorandom::{
    default_density, property_check, run_pipeline, CheckMode, DeletionRule, Property, PropertyVerdict,
};
use removal_core::rng::seeded;
use removal_core::rs_graphs::{build_rs_graph, canonical_triangle_family, RsParameters};
use removal_core::sampler::{
    blowup_cycle_packing, estimate_success_probability, family_test, parse_epsilon, Growth, Sampler, SamplerConfig,
    SamplerMode,
};

use crate::args::*;
use crate::report::Verdict;
use crate::witness::WitnessFile;

/// What a command hands back to the dispatcher.
pub struct Outcome {
    pub parameters: Value,
    pub verdict: Verdict,
    pub summary: String,
    pub result: Value,
    pub witnesses: Vec<WitnessFile>,
    /// Primary output for artifact-producing commands.
    pub artifact: Option<String>,
}

impl Outcome {
    fn new(parameters: Value, verdict: Verdict, summary: impl Into<String>, result: Value) -> Self {
        Outcome {
            parameters,
            verdict,
            summary: summary.into(),
            result,
            witnesses: Vec::new(),
            artifact: None,
        }
    }

    fn with_witness(mut self, w: WitnessFile) -> Self {
        self.witnesses.push(w);
        self
    }

    fn with_artifact(mut self, a: String) -> Self {
        self.artifact = Some(a);
        self
    }
}

pub struct Ctx {
    pub seed: u64,
    pub exec: Exec,
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_general(path: &Path) -> anyhow::Result<GeneralGraph> {
    let g = parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(g.graph().clone())
}

fn load_tripartite(path: &Path) -> anyhow::Result<TripartiteGraph> {
    let g = parse_graph(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    g.into_tripartite().with_context(|| format!("{} is not a tripartite graph", path.display()))
}

fn load_system(path: &Path) -> anyhow::Result<EquationSystem> {
    EquationSystem::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn system_of_graph(h: &TripartiteGraph, perm: &str) -> anyhow::Result<EquationSystem> {
    let labeling: Labeling = perm.parse()?;
    Ok(cycle_space_system(h.graph(), &roles_of(h, labeling), &h.oriented_edges())?)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

pub fn run(command: &Command, ctx: &Ctx) -> anyhow::Result<Outcome> {
    match command {
        Command::Rs(RsCommand::Build { m, r, r_file }) => rs_build(*m, r, r_file.as_deref()),
        Command::Eqs(c) => eqs(c, ctx),
        Command::Sgo(c) => sgo(c, ctx),
        Command::Pseudo(PseudoCommand::Run { n, p, check, rule, trials, graph_out }) => {
            pseudo_run(*n, *p, check, *rule, *trials, graph_out.as_deref(), ctx)
        }
        Command::Convex(ConvexCommand::Search { system, graph, perm, all, dual }) => {
            convex_search(system.as_deref(), graph.as_deref(), perm, *all, *dual, ctx)
        }
        Command::Sampler(c) => sampler(c, ctx),
        Command::Oracle(c) => oracle(c),
        Command::Graph(c) => graph(c),
        Command::Verify { witness } => verify(witness),
    }
}

fn rs_build(m: usize, r: &[i64], r_file: Option<&Path>) -> anyhow::Result<Outcome> {
    let params = match r_file {
        Some(f) => RsParameters::parse_r_file(m, &read(f)?)?,
        None => RsParameters::new(m, r.to_vec())?,
    };
    let g = build_rs_graph(&params);
    let family = canonical_triangle_family(&params);
    let expected = params.m * params.r.len();
    let valid = family.validate(g.graph()).is_ok();
    let triangle_count = tripartite_triangles(&g).len();
    let pass = valid && family.len() == expected;
    Ok(Outcome::new(
        to_value(&params),
        Verdict::from_bool(pass),
        format!("RS graph with {} edges, {triangle_count} triangles, packing of {}", g.edge_count(), family.len()),
        json!({
            "part_size": params.part_size(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "triangle_count": triangle_count,
            "packing_size": family.len(),
            "expected_packing_size": expected,
            "packing_valid": valid,
        }),
    )
    .with_artifact(serialize_tripartite(&g)))
}

fn eqs(c: &EqsCommand, ctx: &Ctx) -> anyhow::Result<Outcome> {
    match c {
        EqsCommand::Extract { graph, perm } => {
            let h = load_tripartite(graph)?;
            let s = system_of_graph(&h, perm)?;
            Ok(Outcome::new(
                json!({ "graph": graph, "perm": perm }),
                Verdict::Pass,
                format!("{} cycle equations in {} variables", s.s(), s.k()),
                json!({ "variables": s.k(), "rows": s.s(), "translation_invariant": s.is_translation_invariant() }),
            )
            .with_artifact(s.to_text()))
        }
        EqsCommand::Genus { system, cap, falsify } => {
            let s = load_system(system)?;
            let verdict = match falsify {
                Some(t) => falsify_genus_one(&s, *t, &mut seeded(ctx.seed))?,
                None => is_genus_one(&s, *cap)?,
            };
            let params = json!({ "system": system, "cap": cap, "falsify": falsify });
            Ok(genus_outcome(params, &s, verdict))
        }
        EqsCommand::Behrend { m } => {
            let set = behrend_set(*m);
            let ok = set.verify();
            Ok(Outcome::new(
                json!({ "m": m }),
                Verdict::from_bool(ok),
                format!("3-AP-free subset of [{m}] with {} elements", set.len()),
                json!({ "size": set.len(), "elements": set.elements, "verified": ok }),
            ))
        }
    }
}

fn genus_outcome(params: Value, s: &EquationSystem, verdict: GenusVerdict) -> Outcome {
    match verdict {
        GenusVerdict::GenusOne => Outcome::new(params, Verdict::Pass, "genus one", json!({ "genus_one": true })),
        GenusVerdict::NotGenusOne { witness } => Outcome::new(
            params,
            Verdict::Fail,
            format!("not genus one: rows vanish on variables {witness:?}"),
            json!({ "genus_one": false, "subset": witness }),
        )
        .with_witness(WitnessFile::NotGenusOne { system: s.to_text(), subset: witness }),
        GenusVerdict::Inconclusive { reason } => {
            Outcome::new(params, Verdict::Inconclusive, reason.clone(), json!({ "genus_one": null, "reason": reason }))
        }
    }
}

fn sgo(c: &SgoCommand, ctx: &Ctx) -> anyhow::Result<Outcome> {
    let (h, outcome, params) = match c {
        SgoCommand::Certify { graph, budget } => {
            let h = load_tripartite(graph)?;
            let o = certify_strongly_genus_one(&h, CertifyOptions { budget: *budget, exec: ctx.exec });
            (h, o, json!({ "graph": graph, "budget": budget }))
        }
        SgoCommand::Falsify { graph, trials } => {
            let h = load_tripartite(graph)?;
            let o = falsify_strongly_genus_one(&h, *trials, &mut seeded(ctx.seed));
            (h, o, json!({ "graph": graph, "trials": trials }))
        }
    };
    let result = to_value(&outcome);
    Ok(match outcome {
        SgoOutcome::Certified { colorings_checked } => Outcome::new(
            params,
            Verdict::Pass,
            format!("strongly genus one ({colorings_checked} colourings checked)"),
            result,
        ),
        SgoOutcome::Counterexample { coloring } => {
            Outcome::new(params, Verdict::Fail, "a two-colouring has no tagged cycle", result).with_witness(
                WitnessFile::SgoCounterexample { graph: serialize_tripartite(&h), black_edges: coloring.black_edges() },
            )
        }
        SgoOutcome::NotUniquely3Colorable => Outcome::new(params, Verdict::Fail, "not uniquely 3-colourable", result),
        SgoOutcome::Inconclusive { reason, .. } => Outcome::new(params, Verdict::Inconclusive, reason, result),
    })
}

fn parse_checks(check: &str) -> anyhow::Result<Vec<Property>> {
    Ok(match check.trim() {
        "all" => {
            let mut v = Property::after_deletion();
            for p in Property::before_deletion() {
                if !v.contains(&p) {
                    v.push(p);
                }
            }
            v
        }
        "none" | "" => Vec::new(),
        list => list.split(',').map(|s| s.trim().parse::<Property>()).collect::<Result<_, _>>()?,
    })
}

fn pseudo_run(
    n: usize,
    p: Option<f64>,
    check: &str,
    rule: RuleArg,
    trials: u64,
    graph_out: Option<&Path>,
    ctx: &Ctx,
) -> anyhow::Result<Outcome> {
    if n == 0 {
        bail!("--n must be positive");
    }
    let p = p.unwrap_or_else(|| default_density(n));
    if !(0.0..=1.0).contains(&p) {
        bail!("--p must lie in [0, 1]");
    }
    let rule = match rule {
        RuleArg::Lex => DeletionRule::Lexicographic,
        RuleArg::CaFirst => DeletionRule::CaFirst,
    };
    let properties = parse_checks(check)?;
    let (h0, h, record) = run_pipeline(n, p, ctx.seed, rule);
    if let Some(path) = graph_out {
        std::fs::write(path, serialize_tripartite(&h)).with_context(|| format!("writing {}", path.display()))?;
    }
    let after = Property::after_deletion();
    let before = Property::before_deletion();
    let mut checks = Vec::new();
    let mut witnesses = Vec::new();
    let (mut any_fail, mut all_pass) = (false, true);
    for prop in properties {
        let mut targets = Vec::new();
        if after.contains(&prop) {
            targets.push(("output", &h));
        }
        if before.contains(&prop) {
            targets.push(("sample", &h0));
        }
        for (name, g) in targets {
            let mode = if prop.supports_exact() {
                CheckMode::Exact
            } else {
                CheckMode::Falsify { trials, seed: ctx.seed }
            };
            let verdict = property_check(g, prop, mode, ctx.exec)?;
            if let PropertyVerdict::Fail { witness } = &verdict {
                witnesses.push(WitnessFile::Property {
                    graph: serialize_tripartite(g),
                    property: prop.to_string(),
                    witness: witness.clone(),
                });
            }
            any_fail |= verdict.is_fail();
            all_pass &= verdict.is_pass();
            checks.push(json!({ "property": prop.to_string(), "graph": name, "verdict": verdict }));
        }
    }
    let verdict = if any_fail {
        Verdict::Fail
    } else if all_pass {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };
    let failed = checks.iter().filter(|c| c["verdict"].get("Fail").is_some()).count();
    let mut out = Outcome::new(
        json!({ "n": n, "p": p, "rule": rule, "check": check, "trials": trials }),
        verdict,
        format!(
            "{} triangles deleted, {} of {} checks failed (sampled checks mean not falsified)",
            record.deleted_edges.len(),
            failed,
            checks.len()
        ),
        json!({ "record": record, "checks": checks }),
    );
    out.witnesses = witnesses;
    Ok(out)
}

fn convex_search(
    system: Option<&Path>,
    graph: Option<&Path>,
    perm: &str,
    all: bool,
    dual: bool,
    ctx: &Ctx,
) -> anyhow::Result<Outcome> {
    let s = match (system, graph) {
        (Some(f), _) => load_system(f)?,
        (None, Some(g)) => system_of_graph(&load_tripartite(g)?, perm)?,
        (None, None) => bail!("give --system or --graph"),
    };
    let report = convex_span_search(&s, ConvexOptions { exec: ctx.exec, dual_certificates: dual, stop_at_first: !all })?;
    let reverified = report.found.as_ref().map(|f| verify_convex_equation(&s, &f.equation));
    let pass = report.disagreements() == 0 && reverified != Some(false);
    let summary = match &report.found {
        Some(f) => format!("convex equation {} in the span", f.equation),
        None => format!("no convex equation among {} candidates", report.candidates.len()),
    };
    let params = json!({ "system": system, "graph": graph, "perm": perm, "all": all, "dual": dual });
    let mut out = Outcome::new(
        params,
        Verdict::from_bool(pass),
        summary,
        json!({ "search": report, "disagreements": report.disagreements(), "reverified": reverified }),
    );
    if let Some(f) = &report.found {
        out = out.with_witness(WitnessFile::ConvexEquation { system: s.to_text(), equation: f.equation.coeffs().to_vec() });
    }
    Ok(out)
}

fn sampler_setup(a: &SamplerArgs) -> anyhow::Result<(GeneralGraph, SamplerConfig, Option<CyclePacking>)> {
    let g = load_general(&a.graph)?;
    let eps = parse_epsilon(&a.eps)?;
    let mode = match a.mode {
        ModeArg::Structured => SamplerMode::Structured,
        ModeArg::Oblivious => SamplerMode::Oblivious,
    };
    let mut config = SamplerConfig::new(a.k, a.ell, eps, mode)?;
    config.q = a.q;
    config.cap_at_n = !a.no_cap;
    config.node_cap = a.node_cap;
    let packing = match mode {
        SamplerMode::Oblivious => None,
        SamplerMode::Structured => Some(match a.packing.as_str() {
            "greedy" => greedy_edge_disjoint_packing(&g, 2 * a.k + 1),
            other => match other.strip_prefix("blowup:").map(str::parse::<usize>) {
                Some(Ok(t)) => blowup_cycle_packing(2 * a.k + 1, t)?,
                _ => bail!("--packing must be `greedy` or `blowup:T`"),
            },
        }),
    };
    Ok((g, config, packing))
}

fn sampler_parameters(a: &SamplerArgs, sampler: &Sampler<'_>, g: &GeneralGraph, packing: Option<&CyclePacking>) -> Value {
    json!({
        "graph": a.graph,
        "config": sampler.config(),
        "sample_size": sampler.sample_size(),
        "precondition_met": sampler.config().precondition_met(g.vertex_count()),
        "packing": a.packing,
        "packing_size": packing.map(|p| p.len()),
        "refined": sampler.refined().map(|r| json!({
            "cycles": r.c0.len(),
            "v0_size": r.v0.len(),
            "removed_cycles": r.removed_cycles,
            "removal_events": r.removal_events,
        })),
    })
}

fn sampler(c: &SamplerCommand, ctx: &Ctx) -> anyhow::Result<Outcome> {
    match c {
        SamplerCommand::Trial { args } => {
            let (g, config, packing) = sampler_setup(args)?;
            let sampler = Sampler::new(&g, config, packing.as_ref())?;
            let params = sampler_parameters(args, &sampler, &g, packing.as_ref());
            let record = sampler.trial(0, ctx.seed)?;
            let len = sampler.config().set_count();
            let mut out = Outcome::new(
                params,
                Verdict::from_bool(record.cycle.is_some()),
                format!("trial stage {:?}", record.stage),
                to_value(&record),
            );
            if let Some(cycle) = record.cycle {
                out = out.with_witness(WitnessFile::Cycle { graph: serialize_general(&g), length: len, cycle });
            }
            Ok(out)
        }
        SamplerCommand::Estimate { args, trials } => {
            let (g, config, packing) = sampler_setup(args)?;
            let sampler = Sampler::new(&g, config, packing.as_ref())?;
            let mut params = sampler_parameters(args, &sampler, &g, packing.as_ref());
            params["trials"] = json!(trials);
            let e = estimate_success_probability(&sampler, *trials, ctx.seed, ctx.exec)?;
            let len = sampler.config().set_count();
            let pass = 3 * e.successes >= 2 * e.trials;
            let mut out = Outcome::new(
                params,
                Verdict::from_bool(pass),
                format!(
                    "{} of {} trials found a {len}-cycle (frequency {:.4}, 95% interval [{:.4}, {:.4}])",
                    e.successes, e.trials, e.frequency, e.interval.0, e.interval.1
                ),
                to_value(&e),
            );
            if let Some(cycle) = e.witness {
                out = out.with_witness(WitnessFile::Cycle { graph: serialize_general(&g), length: len, cycle });
            }
            Ok(out)
        }
        SamplerCommand::Family { graph, eps, growth, ell1, trials } => {
            let g = load_general(graph)?;
            let eps_value = parse_epsilon(eps)?;
            let growth_rule = Growth::parse(growth)?;
            let report = family_test(&g, &growth_rule, *ell1, eps_value, *trials, ctx.seed, ctx.exec)?;
            let params = json!({ "graph": graph, "eps": eps_value, "growth": growth_rule, "ell1": ell1, "trials": trials });
            let (verdict, summary) = match (&report.detection, &report.peeling, &report.note) {
                (Some(d), _, _) => (
                    Verdict::from_bool(3 * d.estimate.successes >= 2 * d.estimate.trials),
                    format!(
                        "certified {}-cycles; {}-cycle found in {} of {} trials",
                        2 * d.k + 1,
                        d.target_length,
                        d.estimate.successes,
                        d.estimate.trials
                    ),
                ),
                (None, Some(p), _) => (
                    Verdict::Pass,
                    match p {
                        PeelOutcome::OddCycle { cycle, .. } => {
                            format!("no level certified; peeling left an odd cycle of length {}", cycle.len())
                        }
                        PeelOutcome::RemainderBipartite { .. } => "no level certified; peeled remainder is bipartite".into(),
                    },
                ),
                (None, None, note) => (Verdict::Inconclusive, note.clone().unwrap_or_default()),
            };
            let mut out = Outcome::new(params, verdict, summary, to_value(&report));
            if let Some(d) = &report.detection {
                if let Some(cycle) = &d.estimate.witness {
                    out = out.with_witness(WitnessFile::Cycle {
                        graph: serialize_general(&g),
                        length: d.target_length,
                        cycle: cycle.clone(),
                    });
                }
            }
            Ok(out)
        }
    }
}

fn oracle(c: &OracleCommand) -> anyhow::Result<Outcome> {
    match c {
        OracleCommand::Genus { system } => {
            let s = load_system(system)?;
            let k = s.k();
            if !s.is_translation_invariant() {
                bail!("the genus-one oracle needs translation-invariant rows");
            }
            if k > 24 {
                bail!("{k} variables are too many to enumerate");
            }
            let rows = s.row_vectors();
            let full = (1u32 << k) - 1;
            let bad = (1..full).find(|&mask| rows.iter().all(|r| (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| r[i]).sum::<i64>() == 0));
            let search = is_genus_one(&s, k)?;
            let agree = search.is_genus_one() == bad.is_none();
            let subset: Option<Vec<usize>> = bad.map(|mask| (0..k).filter(|&i| mask >> i & 1 == 1).collect());
            let mut out = Outcome::new(
                json!({ "system": system }),
                Verdict::from_bool(agree),
                format!(
                    "enumeration says {}genus one; the search {}",
                    if bad.is_none() { "" } else { "not " },
                    if agree { "agrees" } else { "disagrees" }
                ),
                json!({ "variables": k, "subsets": full - 1, "enumeration_subset": subset, "search": search }),
            );
            if let Some(subset) = subset {
                out = out.with_witness(WitnessFile::NotGenusOne { system: s.to_text(), subset });
            }
            Ok(out)
        }
        OracleCommand::Colorings { graph, colors } => {
            let g = load_general(graph)?;
            let count = count_proper_colorings(&g, *colors, None);
            Ok(Outcome::new(
                json!({ "graph": graph, "colors": colors }),
                Verdict::Pass,
                format!("{count} proper {colors}-colourings"),
                json!({ "count": count }),
            ))
        }
        OracleCommand::Increasing { graph, t } => {
            let g = load_general(graph)?;
            let v = increasing_cycle_unavoidable(&g, *t)?;
            let params = json!({ "graph": graph, "t": t });
            Ok(match &v {
                IncreasingCycleVerdict::Unavoidable { colorings_checked } => Outcome::new(
                    params,
                    Verdict::Pass,
                    format!("every proper {t}-colouring has an increasing cycle ({colorings_checked} checked)"),
                    to_value(&v),
                ),
                IncreasingCycleVerdict::Avoidable { coloring } => {
                    Outcome::new(params, Verdict::Fail, "a proper colouring avoids increasing cycles", to_value(&v))
                        .with_witness(WitnessFile::IncreasingCycleFree {
                            graph: serialize_general(&g),
                            t: *t,
                            coloring: coloring.clone(),
                        })
                }
            })
        }
        OracleCommand::Peel { graph, eps } => {
            if !(*eps > 0.0 && *eps <= 1.0) {
                bail!("--eps must lie in (0, 1]");
            }
            let g = load_general(graph)?;
            let outcome = shortest_odd_cycle_peel(&g, *eps);
            let bound = 2.0 / eps;
            let params = json!({ "graph": graph, "eps": eps });
            Ok(match outcome.cycle() {
                Some(c) => {
                    let within = c.len() as f64 <= bound;
                    let len = c.len();
                    let cycle = c.to_vec();
                    Outcome::new(
                        params,
                        Verdict::from_bool(within),
                        format!("odd cycle of length {len} (bound {bound:.2})"),
                        json!({ "outcome": outcome, "within_bound": within }),
                    )
                    .with_witness(WitnessFile::Cycle { graph: serialize_general(&g), length: len, cycle })
                }
                None => Outcome::new(params, Verdict::Pass, "peeled remainder is bipartite", json!({ "outcome": outcome })),
            })
        }
        OracleCommand::SolutionFree { m, system, cap } => {
            let s = load_system(system)?;
            let search = max_solution_free_subset(*m, &s, *cap)?;
            let params = json!({ "m": m, "system": system, "cap": cap });
            Ok(match &search {
                SubsetSearch::Exact { size, .. } => Outcome::new(
                    params,
                    Verdict::Pass,
                    format!("largest solution-free subset of [{m}] has {size} elements"),
                    to_value(&search),
                ),
                SubsetSearch::Inconclusive { reason } => {
                    Outcome::new(params, Verdict::Inconclusive, reason.clone(), to_value(&search))
                }
            })
        }
    }
}

fn graph(c: &GraphCommand) -> anyhow::Result<Outcome> {
    match c {
        GraphCommand::Gen { kind, n, t } => {
            if *t == 0 {
                bail!("--t must be positive");
            }
            let params = json!({ "kind": format!("{kind:?}").to_lowercase(), "n": n, "t": t });
            let (text, vertices, edges) = match kind {
                GraphKind::Tripartite => {
                    let h = TripartiteGraph::complete([*n; 3]).blowup(*t);
                    (serialize_tripartite(&h), h.vertex_count(), h.edge_count())
                }
                _ => {
                    let base = match kind {
                        GraphKind::Cycle if *n >= 3 => cycle_graph(*n),
                        GraphKind::Cycle => bail!("a cycle needs --n >= 3"),
                        GraphKind::Complete => complete_graph(*n),
                        GraphKind::Path => path_graph(*n),
                        _ => grotzsch_graph(),
                    };
                    let g = if *t > 1 { blowup(&base, *t) } else { base };
                    (serialize_general(&g), g.vertex_count(), g.edge_count())
                }
            };
            Ok(Outcome::new(
                params,
                Verdict::Pass,
                format!("{vertices} vertices, {edges} edges"),
                json!({ "vertices": vertices, "edges": edges }),
            )
            .with_artifact(text))
        }
        GraphCommand::Info { graph } => {
            let g = load_general(graph)?;
            let odd = shortest_odd_cycle(&g);
            Ok(Outcome::new(
                json!({ "graph": graph }),
                Verdict::Pass,
                format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
                json!({
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "components": g.components().len(),
                    "bipartite": odd.is_none(),
                    "triangles": triangles(&g).len(),
                    "shortest_odd_cycle": odd.map(|c| c.len()),
                    "tripartite": g.parts().is_some(),
                }),
            ))
        }
    }
}

fn verify(path: &Path) -> anyhow::Result<Outcome> {
    let w: WitnessFile =
        serde_json::from_str(&read(path)?).with_context(|| format!("{} is not a witness file", path.display()))?;
    let checked = w.verify()?;
    let params = json!({ "witness": path, "kind": w.kind() });
    Ok(match checked {
        Ok(()) => Outcome::new(params, Verdict::Pass, format!("{} witness re-verified", w.kind()), json!({ "valid": true })),
        Err(reason) => Outcome::new(params, Verdict::Fail, reason.clone(), json!({ "valid": false, "reason": reason })),
    })
}
