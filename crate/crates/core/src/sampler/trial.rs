use std::sync::OnceLock;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::search::find_cycle_of_length;
use super::structure::{build_cleaning_structure, refine_packing, Cleaning, Epsilon, RefinedPacking};
use crate::graph::{CyclePacking, GeneralGraph};
use crate::par::Exec;
use crate::rng::trial_stream;
use crate::{Error, Result};

/// Default limit on path extensions per cycle search.
pub const DEFAULT_NODE_CAP: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SamplerMode {
    /// Search the sampled vertices for a cycle, knowing nothing else.
    Oblivious,
    /// Follow the proof: pick `v0` and walk through the sets `U_j`.
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SamplerConfig {
    /// Packed cycles have length `2k + 1`.
    pub k: usize,
    /// The target cycle has length `2ℓ + 1`.
    pub ell: usize,
    pub epsilon: Epsilon,
    /// Per-set sample size; `None` uses the formula.
    pub q: Option<u64>,
    /// Cap the per-set sample size at the number of vertices.
    pub cap_at_n: bool,
    pub mode: SamplerMode,
    pub node_cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSize {
    /// `⌈100 k² ln(10ℓ) / ε²⌉`.
    pub formula: u64,
    pub used: u64,
    pub capped: bool,
    pub set_count: usize,
}

impl SamplerConfig {
    pub fn new(k: usize, ell: usize, epsilon: Epsilon, mode: SamplerMode) -> Result<Self> {
        if k == 0 || k >= ell {
            return Err(Error::invalid(format!("need 1 <= k < l, got k={k}, l={ell}")));
        }
        if epsilon <= Epsilon::from_integer(0) {
            return Err(Error::invalid("epsilon must be positive"));
        }
        Ok(SamplerConfig {
            k,
            ell,
            epsilon,
            q: None,
            cap_at_n: true,
            mode,
            node_cap: DEFAULT_NODE_CAP,
        })
    }

    pub fn set_count(&self) -> usize {
        2 * self.ell + 1
    }

    pub fn formula_q(&self) -> u64 {
        let e = *self.epsilon.numer() as f64 / *self.epsilon.denom() as f64;
        let k = self.k as f64;
        (100.0 * k * k * (10.0 * self.ell as f64).ln() / (e * e)).ceil() as u64
    }

    pub fn sample_size(&self, n: usize) -> SampleSize {
        let formula = self.formula_q();
        let wanted = self.q.unwrap_or(formula).max(1);
        let capped = self.cap_at_n && wanted > n as u64;
        SampleSize {
            formula,
            used: if capped { n as u64 } else { wanted },
            capped,
            set_count: self.set_count(),
        }
    }

    /// Whether `n >= 200 ℓ k² / ε²`.
    pub fn precondition_met(&self, n: usize) -> bool {
        let (p, q) = (*self.epsilon.numer() as i128, *self.epsilon.denom() as i128);
        n as i128 * p * p >= 200 * (self.ell * self.k * self.k) as i128 * q * q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrialStage {
    Found,
    /// Oblivious search finished without a cycle.
    NotFound,
    /// Oblivious search hit its node cap.
    SearchCapReached,
    /// `S_0` missed `V0`.
    NoStartVertex,
    /// Cleaning left nothing for the chosen `v0`.
    Degenerate,
    /// No usable vertex for path position `step` (1-based).
    MissingStep { step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub index: u64,
    pub stage: TrialStage,
    pub cycle: Option<Vec<usize>>,
    /// Structured successes only: whether an oblivious search over the same
    /// samples also finds a cycle.
    pub oblivious_confirms: Option<bool>,
}

/// A graph, a configuration and the packing data shared by all trials.
pub struct Sampler<'g> {
    g: &'g GeneralGraph,
    config: SamplerConfig,
    size: SampleSize,
    refined: Option<RefinedPacking>,
    cleaning: Vec<OnceLock<Cleaning>>,
}

impl<'g> Sampler<'g> {
    /// Structured mode needs a packing of `(2k+1)`-cycles; oblivious mode
    /// ignores it.
    pub fn new(g: &'g GeneralGraph, config: SamplerConfig, packing: Option<&CyclePacking>) -> Result<Self> {
        let n = g.vertex_count();
        if n == 0 {
            return Err(Error::invalid("graph has no vertices"));
        }
        let refined = match (config.mode, packing) {
            (SamplerMode::Structured, None) => {
                return Err(Error::invalid("structured mode needs a cycle packing"));
            }
            (SamplerMode::Structured, Some(p)) => {
                if p.cycle_length != 2 * config.k + 1 {
                    return Err(Error::invalid(format!(
                        "packing has {}-cycles but k = {} needs {}-cycles",
                        p.cycle_length,
                        config.k,
                        2 * config.k + 1
                    )));
                }
                Some(refine_packing(g, p, config.epsilon)?)
            }
            (SamplerMode::Oblivious, _) => None,
        };
        Ok(Sampler {
            g,
            size: config.sample_size(n),
            config,
            refined,
            cleaning: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.config
    }

    pub fn sample_size(&self) -> SampleSize {
        self.size
    }

    pub fn refined(&self) -> Option<&RefinedPacking> {
        self.refined.as_ref()
    }

    /// Cleaning structure for `v0`, built on first use.
    pub fn cleaning(&self, v0: usize) -> Result<&Cleaning> {
        let refined = self.refined.as_ref().ok_or_else(|| Error::invalid("no packing in oblivious mode"))?;
        if let Some(c) = self.cleaning[v0].get() {
            return Ok(c);
        }
        let c = build_cleaning_structure(self.g, refined, v0, self.config.k, self.config.ell, self.config.epsilon)?;
        Ok(self.cleaning[v0].get_or_init(|| c))
    }

    fn draw(&self, index: u64, seed: u64) -> Vec<Vec<usize>> {
        let mut rng = trial_stream(seed, index);
        let n = self.g.vertex_count();
        (0..self.config.set_count())
            .map(|_| (0..self.size.used).map(|_| rng.gen_range(0..n)).collect())
            .collect()
    }

    fn oblivious(&self, sets: &[Vec<usize>]) -> (TrialStage, Option<Vec<usize>>) {
        let mut union: Vec<usize> = sets.iter().flatten().copied().collect();
        union.sort_unstable();
        union.dedup();
        let r = find_cycle_of_length(self.g, self.config.set_count(), Some(&union), self.config.node_cap);
        match (r.cycle, r.exhausted) {
            (Some(c), _) => (TrialStage::Found, Some(c)),
            (None, true) => (TrialStage::NotFound, None),
            (None, false) => (TrialStage::SearchCapReached, None),
        }
    }

    fn structured(&self, sets: &[Vec<usize>]) -> Result<(TrialStage, Option<Vec<usize>>)> {
        let refined = self.refined.as_ref().expect("structured mode has a packing");
        let Some(&v0) = sets[0].iter().find(|v| refined.v0.binary_search(v).is_ok()) else {
            return Ok((TrialStage::NoStartVertex, None));
        };
        let Some(s) = self.cleaning(v0)?.ready() else {
            return Ok((TrialStage::Degenerate, None));
        };
        let mut path: Vec<usize> = Vec::with_capacity(2 * self.config.ell);
        for (i, &image) in s.phi.iter().enumerate() {
            let u_set = &s.u[image - 1];
            let pick = sets[i + 1].iter().copied().find(|&u| {
                u_set.binary_search(&u).is_ok()
                    && !path.contains(&u)
                    && path.last().is_none_or(|&prev| self.g.has_edge(prev, u))
            });
            match pick {
                Some(u) => path.push(u),
                None => return Ok((TrialStage::MissingStep { step: i + 1 }, None)),
            }
        }
        let mut cycle = vec![v0];
        cycle.extend(path);
        Ok((TrialStage::Found, Some(cycle)))
    }

    /// Runs trial `index` under `seed`. Every returned cycle has been
    /// re-checked against the graph.
    pub fn trial(&self, index: u64, seed: u64) -> Result<TrialRecord> {
        let sets = self.draw(index, seed);
        let (stage, cycle) = match self.config.mode {
            SamplerMode::Oblivious => self.oblivious(&sets),
            SamplerMode::Structured => self.structured(&sets)?,
        };
        if let Some(c) = &cycle {
            assert!(
                c.len() == self.config.set_count() && self.g.is_cycle(c),
                "sampler produced an invalid cycle {c:?}"
            );
        }
        let oblivious_confirms = match (self.config.mode, &cycle) {
            (SamplerMode::Structured, Some(_)) => Some(self.oblivious(&sets).1.is_some()),
            _ => None,
        };
        Ok(TrialRecord { index, stage, cycle, oblivious_confirms })
    }
}

/// One trial of `config` on `g`.
pub fn run_sampler_trial(g: &GeneralGraph, config: &SamplerConfig, packing: Option<&CyclePacking>, seed: u64) -> Result<TrialRecord> {
    Sampler::new(g, config.clone(), packing)?.trial(0, seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Estimate {
    pub trials: u64,
    pub successes: u64,
    pub frequency: f64,
    /// Wilson score interval at 95%.
    pub interval: (f64, f64),
    pub sample_size: SampleSize,
    /// Cycle from the lowest-numbered successful trial.
    pub witness: Option<Vec<usize>>,
    pub capped_searches: u64,
    /// Structured successes whose samples an oblivious search could not
    /// confirm.
    pub unconfirmed: u64,
    pub stages: Vec<(TrialStage, u64)>,
}

pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let z = 1.959_963_984_540_054_f64;
    let n = trials as f64;
    let p = successes as f64 / n;
    let denom = 1.0 + z * z / n;
    let centre = (p + z * z / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Runs trials `0..trials` under `seed` and summarises them.
pub fn estimate_success_probability(sampler: &Sampler<'_>, trials: u64, seed: u64, exec: Exec) -> Result<Estimate> {
    if trials == 0 {
        return Err(Error::invalid("need at least one trial"));
    }
    let records = exec
        .map_range(trials as usize, |i| sampler.trial(i as u64, seed))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let successes = records.iter().filter(|r| r.cycle.is_some()).count() as u64;
    let mut stages: Vec<(TrialStage, u64)> = Vec::new();
    for r in &records {
        match stages.iter_mut().find(|(s, _)| *s == r.stage) {
            Some((_, c)) => *c += 1,
            None => stages.push((r.stage, 1)),
        }
    }
    Ok(Estimate {
        trials,
        successes,
        frequency: successes as f64 / trials as f64,
        interval: wilson_interval(successes, trials),
        sample_size: sampler.sample_size(),
        witness: records.iter().find_map(|r| r.cycle.clone()),
        capped_searches: records.iter().filter(|r| r.stage == TrialStage::SearchCapReached).count() as u64,
        unconfirmed: records.iter().filter(|r| r.oblivious_confirms == Some(false)).count() as u64,
        stages,
    })
}
