use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use removal_core::convexity::{convex_span_search, ConvexOptions};
use removal_core::cycle_space::{certify_strongly_genus_one, cycle_space_system, roles_of, CertifyOptions, Labeling};
use removal_core::graph::{blowup, cycle_graph, TripartiteGraph};
use removal_core::par::Exec;
use removal_core::pseudorandom::{default_density, property_check, run_pipeline, CheckMode, DeletionRule, Property};
use removal_core::sampler::{blowup_cycle_packing, estimate_success_probability, Epsilon, Sampler, SamplerConfig, SamplerMode};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn sampler_estimate(c: &mut Criterion) {
    let g = blowup(&cycle_graph(5), 20);
    let packing = blowup_cycle_packing(5, 20).unwrap();
    let config = SamplerConfig::new(2, 3, Epsilon::new(1, 25), SamplerMode::Structured).unwrap();
    let sampler = Sampler::new(&g, config, Some(&packing)).unwrap();
    let mut group = c.benchmark_group("sampler_estimate_200");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| estimate_success_probability(&sampler, 200, black_box(7), exec).unwrap())
        });
    }
    group.finish();
}

fn convex_search(c: &mut Criterion) {
    let (_, h, _) = run_pipeline(20, default_density(20), 3, DeletionRule::Lexicographic);
    let system = cycle_space_system(h.graph(), &roles_of(&h, Labeling::IDENTITY), &h.oriented_edges()).unwrap();
    let mut group = c.benchmark_group("convex_search_n20");
    group.sample_size(10);
    for (name, exec) in MODES {
        let options = ConvexOptions { exec, dual_certificates: false, stop_at_first: false };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| convex_span_search(black_box(&system), options).unwrap())
        });
    }
    group.finish();
}

fn certify(c: &mut Criterion) {
    // K_{2,2,2}: uniquely 3-colourable, so the certifier walks colourings.
    let h = TripartiteGraph::complete([2, 2, 2]);
    let mut group = c.benchmark_group("certify_k222");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| certify_strongly_genus_one(black_box(&h), CertifyOptions { budget: 1 << 24, exec }))
        });
    }
    group.finish();
}

fn property_falsify(c: &mut Criterion) {
    let (h0, _, _) = run_pipeline(60, default_density(60), 1, DeletionRule::Lexicographic);
    let mode = CheckMode::Falsify { trials: 400, seed: 5 };
    let mut group = c.benchmark_group("common_neighborhood_falsify_400");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| property_check(black_box(&h0), Property::CommonNeighborhood, mode, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sampler_estimate, convex_search, certify, property_falsify);
criterion_main!(benches);
