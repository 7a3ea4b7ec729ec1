//! End-to-end acceptance run. Prints one line per criterion and exits with
//! status 1 if any criterion fails.

mod oracle;

use std::collections::{HashMap, HashSet};
use std::hash::{DefaultHasher, Hash, Hasher};
use std::time::{Duration, Instant};

use rand::seq::index::sample;
use rand::Rng;

use removal_core::convexity::{convex_span_search, verify_convex_equation, ConvexOptions};
use removal_core::cycle_space::{
    all_six_systems, certify_strongly_genus_one, count_proper_colorings, cycle_equation_system, cycle_space_system,
    find_tagged_cycle, for_each_proper_coloring, increasing_cycle_unavoidable, roles_of, CertifyOptions, EdgeColoring,
    IncreasingCycleVerdict, Labeling, SgoOutcome,
};
use removal_core::equations::{is_genus_one, EquationSystem, GenusVerdict, DEFAULT_GENUS_CAP};
use removal_core::graph::{
    blowup, complete_graph, cycle_graph, grotzsch_graph, path_graph, shortest_odd_cycle_peel, GeneralGraph, HomSearch,
    PeelOutcome, TripartiteGraph,
};
use removal_core::par::Exec;
use removal_core::pseudorandom::{default_density, run_pipeline, DeletionRule};
use removal_core::rng::seeded;
use removal_core::rs_graphs::{assignment_for_edges, build_rs_graph, canonical_triangle_family, RsParameters};
use removal_core::sampler::{blowup_cycle_packing, Epsilon, Sampler, SamplerConfig, SamplerMode};

use oracle::*;

struct Outcome {
    pass: bool,
    detail: String,
    /// Fingerprints of everything a randomised run produced, compared on
    /// re-runs.
    digest: Vec<u64>,
}

impl Outcome {
    fn new(pass: bool, detail: String, digest: Vec<u64>) -> Self {
        Outcome { pass, detail, digest }
    }
}

fn fingerprint<T: Hash>(value: &T) -> u64 {
    let mut h = DefaultHasher::new();
    value.hash(&mut h);
    h.finish()
}

fn rs_exactness(seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    let mut good = 0;
    let mut digest = Vec::new();
    for _ in 0..50 {
        let m = rng.gen_range(1..=50usize);
        let size = rng.gen_range(1..=m.min(8));
        let r: Vec<i64> = sample(&mut rng, m, size).into_iter().map(|x| x as i64 + 1).collect();
        let params = RsParameters::new(m, r.clone()).expect("R inside [1, m]");
        let g = build_rs_graph(&params);
        let family = canonical_triangle_family(&params);
        let mut seen = HashSet::new();
        let mut ok = family.cycles.len() == m * r.len();
        for t in &family.cycles {
            ok &= t.len() == 3;
            for i in 0..t.len() {
                let (x, y) = (t[i], t[(i + 1) % t.len()]);
                ok &= g.graph().has_edge(x, y) && seen.insert((x.min(y), x.max(y)));
            }
        }
        good += ok as usize;
        digest.push(fingerprint(&(m, r, family.cycles)));
    }
    Outcome::new(good == 50, format!("{good}/50 instances exact"), digest)
}

fn random_system(rng: &mut impl Rng) -> Vec<Vec<i64>> {
    let k = rng.gen_range(2..=16usize);
    let s = rng.gen_range(1..=5usize);
    let spread = if rng.gen_bool(0.5) { 2 } else { 9 };
    (0..s)
        .map(|_| loop {
            let mut row: Vec<i64> = (0..k - 1).map(|_| rng.gen_range(-spread..=spread)).collect();
            row.push(-row.iter().sum::<i64>());
            if row.iter().any(|&c| c != 0) {
                break row;
            }
        })
        .collect()
}

fn genus_equivalence(seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    let (mut agree, mut genus_one) = (0, 0);
    let mut digest = Vec::new();
    for _ in 0..500 {
        let rows = random_system(&mut rng);
        let k = rows[0].len();
        let system = EquationSystem::from_rows(&rows).expect("well-formed rows");
        let expected = vanishing_subset(&rows, k);
        let verdict = is_genus_one(&system, DEFAULT_GENUS_CAP).expect("translation-invariant");
        let ok = match (&verdict, expected) {
            (GenusVerdict::GenusOne, None) => true,
            (GenusVerdict::NotGenusOne { witness }, Some(_)) => {
                let mask: u32 = witness.iter().map(|&v| 1 << v).sum();
                witness.len() < k && mask != 0 && vanishing_mask(&rows, mask)
            }
            _ => false,
        };
        agree += ok as usize;
        genus_one += expected.is_none() as usize;
        digest.push(fingerprint(&(rows, format!("{verdict:?}"))));
    }
    Outcome::new(
        agree == 500,
        format!("{agree}/500 agree with subset enumeration ({genus_one} genus one)"),
        digest,
    )
}

fn vanishing_mask(rows: &[Vec<i64>], mask: u32) -> bool {
    rows.iter()
        .all(|r| r.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, c)| c).sum::<i64>() == 0)
}

fn fixed_verdicts() -> Outcome {
    let cases: [(&[Vec<i64>], bool); 3] = [
        (&[vec![1, -2, 1]], true),
        (&[vec![1, 1, -1, -1]], false),
        (&[vec![1, 1, -1, -1], vec![1, -1, 0, 0]], true),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (rows, want) in cases {
        let k = rows[0].len();
        let system = EquationSystem::from_rows(rows).unwrap();
        let verdict = is_genus_one(&system, DEFAULT_GENUS_CAP).unwrap();
        let ok = verdict.is_genus_one() == want
            && vanishing_subset(rows, k).is_none() == want
            && verdict
                .witness()
                .is_none_or(|w| !w.is_empty() && w.len() < k && vanishing_mask(rows, w.iter().map(|&v| 1 << v).sum()));
        pass &= ok && (want || verdict.witness().is_some());
        notes.push(match verdict.witness() {
            Some(w) => format!("{} rows: witness {w:?}", rows.len()),
            None => format!("{} rows: genus one", rows.len()),
        });
    }
    Outcome::new(pass, notes.join("; "), vec![])
}

/// Every cross-part vertex pair of a tripartite graph with the given sizes.
fn cross_pairs(sizes: [usize; 3]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (pair, (p, q)) in [(0, 1), (1, 2), (2, 0)].into_iter().enumerate() {
        for i in 0..sizes[p] {
            for j in 0..sizes[q] {
                out.push((pair, i, j));
            }
        }
    }
    out
}

fn connected_mask(sizes: [usize; 3], pairs: &[(usize, usize, usize)], mask: u32) -> bool {
    let n: usize = sizes.iter().sum();
    let offset = [0, sizes[0], sizes[0] + sizes[1]];
    let ends = |(pair, i, j): (usize, usize, usize)| {
        let (p, q) = [(0, 1), (1, 2), (2, 0)][pair];
        (offset[p] + i, offset[q] + j)
    };
    let mut reach = 1u32;
    loop {
        let before = reach;
        for (e, &pq) in pairs.iter().enumerate() {
            if mask >> e & 1 == 1 {
                let (u, v) = ends(pq);
                if reach >> u & 1 == 1 || reach >> v & 1 == 1 {
                    reach |= 1 << u | 1 << v;
                }
            }
        }
        if reach == before {
            return reach == (1 << n) - 1;
        }
    }
}

struct BridgeTally {
    examined: usize,
    certified: usize,
    exceptions: Vec<String>,
    digest: Vec<u64>,
}

/// Certifies `h`; a certified graph must have six genus-one systems, and
/// its certificate is re-derived by walking every colouring.
fn bridge_check(h: &TripartiteGraph, tally: &mut BridgeTally) {
    tally.examined += 1;
    let outcome = certify_strongly_genus_one(h, CertifyOptions { budget: 1 << 24, exec: Exec::Sequential });
    if !outcome.is_certified() {
        if let SgoOutcome::Inconclusive { reason, .. } = &outcome {
            tally.exceptions.push(format!("inconclusive: {reason}"));
        }
        return;
    }
    tally.certified += 1;
    tally.digest.push(fingerprint(&h.oriented_edges()));
    let e = h.edge_count();
    let ids = edge_ids(h);
    let parts = parts_of(h);
    let cycles: Vec<CycleMasks> = all_cycles(h.graph()).iter().map(|c| cycle_masks(c, &ids, &parts)).collect();
    let all = (1u64 << e) - 1;
    let rederived = count_colorings(h.graph(), 3) == 6
        && (1..all).all(|black| cycles.iter().any(|c| c.tagged_either(black, all)));
    if !rederived {
        tally.exceptions.push(format!("certificate not re-derived for {:?}", h.oriented_edges()));
    }
    for (labeling, system) in all_six_systems(h).expect("connected") {
        let verdict = is_genus_one(&system, DEFAULT_GENUS_CAP).expect("translation-invariant");
        let brute = vanishing_subset(&system.row_vectors(), system.k()).is_none();
        if !verdict.is_genus_one() || !brute {
            tally.exceptions.push(format!("{labeling} system of {:?} is not genus one", h.oriented_edges()));
        }
    }
}

/// Pipeline candidates above this size are skipped: their colouring space
/// exceeds what the certifier walks exhaustively within its budget.
const PIPELINE_EDGE_CAP: usize = 22;

fn lemma_bridge() -> Outcome {
    let mut tally = BridgeTally { examined: 0, certified: 0, exceptions: vec![], digest: vec![] };
    for a in 1..=5usize {
        for b in 1..=a {
            for c in 1..=b {
                if a + b + c > 7 {
                    continue;
                }
                let sizes = [a, b, c];
                let pairs = cross_pairs(sizes);
                for mask in 1u32..(1 << pairs.len()) {
                    if mask.count_ones() > 12 || !connected_mask(sizes, &pairs, mask) {
                        continue;
                    }
                    let mut lists: [Vec<(usize, usize)>; 3] = Default::default();
                    for (e, &(pair, i, j)) in pairs.iter().enumerate() {
                        if mask >> e & 1 == 1 {
                            lists[pair].push((i, j));
                        }
                    }
                    let [ab, bc, ca] = lists;
                    bridge_check(&TripartiteGraph::new(sizes, ab, bc, ca).unwrap(), &mut tally);
                }
            }
        }
    }
    let small = tally.examined;
    for (n, p) in [(2, 0.7), (3, 0.7), (3, 0.5), (4, 0.5), (4, 0.4)] {
        for seed in 0..25 {
            let (h0, h, _) = run_pipeline(n, p, seed, DeletionRule::Lexicographic);
            for g in [h0, h] {
                if g.edge_count() <= PIPELINE_EDGE_CAP {
                    bridge_check(&g, &mut tally);
                }
            }
        }
    }
    let detail = format!(
        "{} graphs ({small} connected with <= 12 edges, {} pipeline), {} certified, {} exceptions{}",
        tally.examined,
        tally.examined - small,
        tally.certified,
        tally.exceptions.len(),
        tally.exceptions.first().map(|e| format!(", first: {e}")).unwrap_or_default()
    );
    Outcome::new(tally.exceptions.is_empty() && tally.certified > 0, detail, tally.digest)
}

fn first_3_coloring(g: &GeneralGraph) -> Option<Vec<u8>> {
    let mut found = None;
    for_each_proper_coloring(g, 3, |c| {
        found = Some(c.iter().map(|&x| x as u8).collect());
        false
    });
    found
}

fn tagged_oracle(seed: u64, exec: Exec) -> Outcome {
    const KNOWN: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    let levels = graphs_up_to(8);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    let graphs: Vec<&GeneralGraph> = levels.iter().flatten().filter(|g| g.edge_count() > 0).collect();
    let results = exec.map_slice(&graphs, |g| {
        let parts = first_3_coloring(g)?;
        let h = TripartiteGraph::from_general(&(*g).clone().with_parts(parts).unwrap()).unwrap();
        let e = h.edge_count();
        let all = if e == 64 { u64::MAX } else { (1u64 << e) - 1 };
        let ids = edge_ids(&h);
        let part = parts_of(&h);
        let cycles: Vec<CycleMasks> = all_cycles(h.graph()).iter().map(|c| cycle_masks(c, &ids, &part)).collect();
        let mut rng = seeded(seed ^ fingerprint(&h.oriented_edges()));
        let mut agree = 0u32;
        let mut found = Vec::with_capacity(200);
        for _ in 0..200 {
            let black = rng.gen::<u64>() & all;
            let coloring = EdgeColoring::from_mask(e, black);
            let brute = cycles.iter().any(|c| c.tagged_either(black, all));
            let lib = find_tagged_cycle(&h, &coloring);
            let witness_ok = lib.as_ref().is_none_or(|w| {
                let m = cycle_masks(&w.cycle, &ids, &part);
                h.graph().is_cycle(&w.cycle) && m.tagged_either(black, all)
            });
            agree += (brute == lib.is_some() && witness_ok) as u32;
            found.push(lib.is_some());
        }
        Some((agree, found))
    });
    let tested: Vec<_> = results.into_iter().flatten().collect();
    let checks = tested.len() * 200;
    let agree: usize = tested.iter().map(|(a, _)| *a as usize).sum();
    let with_tagged: usize = tested.iter().map(|(_, f)| f.iter().filter(|&&x| x).count()).sum();
    let complete = counts == KNOWN;
    Outcome::new(
        complete && agree == checks,
        format!(
            "{} 3-colourable graphs on <= 8 vertices, {agree}/{checks} colourings agree ({with_tagged} tagged); class counts {}",
            tested.len(),
            if complete { "match the known totals" } else { "DO NOT match the known totals" }
        ),
        tested.iter().map(|(_, f)| fingerprint(f)).collect(),
    )
}

fn unique_colorability() -> Outcome {
    let cases = [("triangle", complete_graph(3), 6), ("C5", cycle_graph(5), 30), ("P3", path_graph(3), 12)];
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, g, want) in cases {
        let lib = count_proper_colorings(&g, 3, None);
        pass &= lib == want && count_colorings(&g, 3) == want;
        notes.push(format!("{name} {lib}"));
    }
    Outcome::new(pass, notes.join(", "), vec![])
}

fn increasing_cycles() -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, g, t, want) in [
        ("K3", complete_graph(3), 3, true),
        ("C5", cycle_graph(5), 3, false),
        ("Grotzsch", grotzsch_graph(), 4, true),
    ] {
        let verdict = increasing_cycle_unavoidable(&g, t).expect("chromatic number matches");
        let brute = each_coloring(&g, t, &mut |c| has_increasing_cycle(&g, c));
        let ok = match &verdict {
            IncreasingCycleVerdict::Unavoidable { .. } => want && brute,
            IncreasingCycleVerdict::Avoidable { coloring } => {
                let proper = g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v])
                    && coloring.iter().all(|&c| (1..=t).contains(&c));
                !want && !brute && proper && !has_increasing_cycle(&g, coloring)
            }
        };
        pass &= ok;
        notes.push(format!("{name} {}", if want { "unavoidable" } else { "avoidable" }));
    }
    Outcome::new(pass, notes.join(", "), vec![])
}

fn pipeline_soundness(exec: Exec) -> Outcome {
    let mut pass = true;
    let mut notes = Vec::new();
    let mut digest = Vec::new();
    for n in [50usize, 100, 200] {
        let runs = exec.map_range(50, |seed| {
            let (h0, h, record) = run_pipeline(n, default_density(n), seed as u64, DeletionRule::Lexicographic);
            let free = triangles_per_vertex(h.graph()).iter().all(|&t| t == 0);
            let loads = triangles_per_vertex(h0.graph());
            let max_load = loads.iter().copied().max().unwrap_or(0);
            let consistent = max_load == record.max_vertex_triangles && loads == record.per_vertex_triangles;
            (free, consistent, record.deleted_edges.len(), max_load, fingerprint(&record.deleted_edges))
        });
        let bound = (n as f64).powf(0.8);
        let free = runs.iter().filter(|r| r.0 && r.1).count();
        let few = runs.iter().filter(|r| r.2 as f64 <= bound).count();
        let light = runs.iter().filter(|r| r.3 <= 4).count();
        let mean = runs.iter().map(|r| r.2).sum::<usize>() as f64 / 50.0;
        pass &= free == 50 && light * 100 >= 85 * 50;
        if n == 200 {
            pass &= few * 100 >= 80 * 50;
        }
        notes.push(format!(
            "n={n}: triangle-free {free}/50, deletions <= {bound:.0} in {few}/50 (mean {mean:.1}), max load <= 4 in {light}/50"
        ));
        digest.extend(runs.iter().map(|r| r.4));
    }
    Outcome::new(pass, notes.join("; "), digest)
}

fn tripartite_cycle(sizes: [usize; 3], ab: &[(usize, usize)], bc: &[(usize, usize)], ca: &[(usize, usize)]) -> TripartiteGraph {
    TripartiteGraph::new(sizes, ab.to_vec(), bc.to_vec(), ca.to_vec()).unwrap()
}

fn convex_span(graphs: usize, exec: Exec) -> Outcome {
    let all_candidates = ConvexOptions { exec, dual_certificates: false, stop_at_first: false };
    let triangle = TripartiteGraph::complete([1, 1, 1]);
    let system = cycle_equation_system(&triangle, Labeling::IDENTITY).unwrap();
    let report = convex_span_search(&system, all_candidates).unwrap();
    let triangle_ok = report.disagreements() == 0
        && report.found.as_ref().is_some_and(|f| {
            let mut c = f.equation.coeffs().to_vec();
            c.sort_unstable();
            c == [-2, 1, 1] && verify_convex_equation(&system, &f.equation)
        });

    let squares = [
        tripartite_cycle([2, 2, 0], &[(0, 0), (0, 1), (1, 0), (1, 1)], &[], &[]),
        tripartite_cycle([1, 2, 1], &[(0, 0), (0, 1)], &[(0, 0), (1, 0)], &[]),
        tripartite_cycle([2, 1, 1], &[(0, 0), (1, 0)], &[], &[(0, 0), (0, 1)]),
    ];
    let mut square_ok = true;
    for h in &squares {
        for (_, s) in all_six_systems(h).unwrap() {
            let r = convex_span_search(&s, all_candidates).unwrap();
            square_ok &= r.found.is_none() && r.disagreements() == 0;
        }
    }

    let mut disagreements = 0;
    let mut found = 0;
    let mut reverified = true;
    let mut variables = 0;
    let mut digest = Vec::new();
    for seed in 0..graphs as u64 {
        let (_, h, _) = run_pipeline(40, default_density(40), seed, DeletionRule::Lexicographic);
        let s = cycle_space_system(h.graph(), &roles_of(&h, Labeling::IDENTITY), &h.oriented_edges()).unwrap();
        let r = convex_span_search(&s, all_candidates).unwrap();
        disagreements += r.disagreements();
        variables += s.k();
        if let Some(f) = &r.found {
            found += 1;
            reverified &= verify_convex_equation(&s, &f.equation);
        }
        digest.push(fingerprint(&format!("{:?}", (s.row_vectors(), &r.candidates, &r.found))));
    }
    Outcome::new(
        triangle_ok && square_ok && disagreements == 0 && reverified,
        format!(
            "triangle {}, 4-cycles {}, {graphs} pipeline graphs ({variables} variables): {disagreements} exact/float disagreements, {found} convex equations found",
            if triangle_ok { "(1,1,-2)" } else { "WRONG" },
            if square_ok { "none" } else { "WRONG" }
        ),
        digest,
    )
}

fn random_3_colourable(rng: &mut impl Rng) -> GeneralGraph {
    loop {
        let n = rng.gen_range(3..=8usize);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.55) {
                    edges.push((u, v));
                }
            }
        }
        let g = GeneralGraph::from_edges(n, edges).unwrap();
        if (0..n).all(|v| g.degree(v) >= 2) && count_proper_colorings(&g, 3, Some(1)) > 0 {
            return g;
        }
    }
}

fn hom_correspondence(seed: u64, exec: Exec) -> Outcome {
    let mut rng = seeded(seed);
    let cases: Vec<(RsParameters, GeneralGraph)> = (0..60)
        .map(|_| {
            let m = rng.gen_range(1..=8usize);
            let size = rng.gen_range(1..=m.min(3));
            let r = sample(&mut rng, m, size).into_iter().map(|x| x as i64 + 1).collect();
            (RsParameters::new(m, r).unwrap(), random_3_colourable(&mut rng))
        })
        .collect();
    let results = exec.map_slice(&cases, |(params, h)| {
        let rs = build_rs_graph(params);
        let edges = h.edges();
        let mut systems: HashMap<Vec<u8>, EquationSystem> = HashMap::new();
        let (mut homs, mut good) = (0u64, 0u64);
        HomSearch::new(h, rs.graph())
            .for_each(|hom| {
                homs += 1;
                let a = assignment_for_edges(h, &edges, &rs, hom).expect("homomorphism");
                let key: Vec<u8> = a.roles.iter().map(|p| p.index() as u8).collect();
                let system = systems
                    .entry(key)
                    .or_insert_with(|| cycle_space_system(h, &a.roles, &edges).expect("valid roles"));
                let values_in_r = a.values.iter().all(|v| params.r.contains(v));
                good += (values_in_r && system.is_satisfied_by(&a.values)) as u64;
                true
            })
            .expect("uncapped search");
        (homs, good, systems.len())
    });
    let homs: u64 = results.iter().map(|r| r.0).sum();
    let good: u64 = results.iter().map(|r| r.1).sum();
    let partitions: usize = results.iter().map(|r| r.2).sum();
    let nonempty = results.iter().filter(|r| r.0 > 0).count();
    Outcome::new(
        homs > 0 && good == homs,
        format!("{good}/{homs} homomorphisms over 60 (RS, H) pairs ({nonempty} with homomorphisms, {partitions} induced partitions) satisfy every cycle equation"),
        results.iter().map(fingerprint).collect(),
    )
}

fn sampler_run(seed: u64, exec: Exec) -> Outcome {
    let g = blowup(&cycle_graph(5), 20);
    let packing = blowup_cycle_packing(5, 20).unwrap();
    let config = SamplerConfig::new(2, 3, Epsilon::new(1, 25), SamplerMode::Structured).unwrap();
    let sampler = Sampler::new(&g, config, Some(&packing)).unwrap();
    let size = sampler.sample_size();
    let records = exec.map_range(300, |i| sampler.trial(i as u64, seed).unwrap());
    let cycles: Vec<&Vec<usize>> = records.iter().filter_map(|r| r.cycle.as_ref()).collect();
    let valid = cycles.iter().filter(|c| c.len() == 7 && is_odd_cycle(&g, c)).count();
    let freq = cycles.len() as f64 / 300.0;
    Outcome::new(
        freq >= 0.66 && valid == cycles.len(),
        format!(
            "blowup(C5,20), k=2, l=3: {}/300 = {freq:.3} found C7, {valid}/{} witnesses re-verify; q formula {} used {} ({})",
            cycles.len(),
            cycles.len(),
            size.formula,
            size.used,
            if size.capped { "capped at |V|" } else { "uncapped" }
        ),
        records.iter().map(|r| fingerprint(&format!("{r:?}"))).collect(),
    )
}

fn random_bipartite(rng: &mut impl Rng) -> GeneralGraph {
    let (a, b) = (rng.gen_range(1..=30usize), rng.gen_range(1..=30usize));
    let p = rng.gen_range(0.05..0.9);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            if rng.gen_bool(p) {
                edges.push((u, a + v));
            }
        }
    }
    GeneralGraph::from_edges(a + b, edges).unwrap()
}

fn peeling(seed: u64) -> Outcome {
    let k40 = complete_graph(40);
    let dense = match shortest_odd_cycle_peel(&k40, 0.2) {
        PeelOutcome::OddCycle { cycle, .. } => (cycle.len() as f64 <= 2.0 / 0.2 && is_odd_cycle(&k40, &cycle)).then_some(cycle.len()),
        PeelOutcome::RemainderBipartite { .. } => None,
    };
    let mut rng = seeded(seed);
    let mut digest = Vec::new();
    let bipartite = (0..20)
        .filter(|_| {
            let g = random_bipartite(&mut rng);
            let eps = rng.gen_range(0.01..0.3);
            let out = shortest_odd_cycle_peel(&g, eps);
            digest.push(fingerprint(&(g.edges(), format!("{out:?}"))));
            matches!(out, PeelOutcome::RemainderBipartite { .. })
        })
        .count();
    Outcome::new(
        dense == Some(3) && bipartite == 20,
        format!(
            "K40 at eps 0.2 -> {}, {bipartite}/20 bipartite graphs report a bipartite remainder",
            dense.map(|l| format!("odd cycle of length {l}")).unwrap_or("no valid odd cycle".into())
        ),
        digest,
    )
}

const SEED: u64 = 20_240_601;

fn main() {
    let exec = Exec::default();
    let mut failures = 0;
    let mut report = |id: u32, name: &str, limit: Option<Duration>, run: &dyn Fn() -> Outcome| -> Outcome {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|l| took <= l);
        let pass = out.pass && in_time;
        failures += !pass as u32;
        let budget = limit.map(|l| format!(", limit {}s", l.as_secs())).unwrap_or_default();
        println!(
            "[{}] {id:>2} {name}: {} ({:.1}s{budget}{})",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            took.as_secs_f64(),
            if in_time { "" } else { ", OVER TIME" }
        );
        out
    };

    let secs = Duration::from_secs;
    let c1 = report(1, "RS construction exactness", Some(secs(5)), &|| rs_exactness(SEED));
    let c2 = report(2, "genus-one oracle equivalence", Some(secs(30)), &|| genus_equivalence(SEED));
    report(3, "fixed genus verdicts", None, &fixed_verdicts);
    let c4 = report(4, "certified graphs have genus-one systems", None, &lemma_bridge);
    let c5 = report(5, "tagged-cycle oracle", None, &|| tagged_oracle(SEED, exec));
    report(6, "3-colouring counts", None, &unique_colorability);
    report(7, "increasing-cycle unavoidability", Some(secs(60)), &increasing_cycles);
    let c8 = report(8, "pipeline soundness", None, &|| pipeline_soundness(exec));
    let c9 = report(9, "convex equations in the cycle span", Some(secs(600)), &|| convex_span(10, exec));
    let c10 = report(10, "homomorphisms solve the cycle equations", None, &|| hom_correspondence(SEED, exec));
    let c11 = report(11, "structured sampler success rate", None, &|| sampler_run(SEED, exec));
    let c12 = report(12, "odd-cycle peeling", None, &|| peeling(SEED));

    report(13, "determinism under re-runs", None, &|| {
        let seq = Exec::Sequential;
        let again: [(&str, &Outcome, Outcome); 9] = [
            ("1", &c1, rs_exactness(SEED)),
            ("2", &c2, genus_equivalence(SEED)),
            ("4", &c4, lemma_bridge()),
            ("5", &c5, tagged_oracle(SEED, seq)),
            ("8", &c8, pipeline_soundness(seq)),
            ("9", &c9, convex_span(2, seq)),
            ("10", &c10, hom_correspondence(SEED, seq)),
            ("11", &c11, sampler_run(SEED, seq)),
            ("12", &c12, peeling(SEED)),
        ];
        let differing: Vec<&str> = again
            .iter()
            .filter(|(_, first, second)| {
                first.pass != second.pass || !first.digest.starts_with(&second.digest) || second.digest.is_empty()
            })
            .map(|(id, _, _)| *id)
            .collect();
        Outcome::new(
            differing.is_empty(),
            if differing.is_empty() {
                format!("{} randomised criteria reproduced sequentially with identical verdicts and witnesses", again.len())
            } else {
                format!("criteria {} changed on re-run", differing.join(", "))
            },
            vec![],
        )
    });

    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
