use serde::{Deserialize, Serialize};

use super::structure::Epsilon;
use super::trial::{estimate_success_probability, Estimate, Sampler, SamplerConfig, SamplerMode};
use crate::graph::{greedy_edge_disjoint_packing, shortest_odd_cycle_peel, GeneralGraph, PeelOutcome};
use crate::par::Exec;
use crate::{Error, Result};

/// Growth rule producing the next member of a family of odd cycle lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Growth {
    /// `next = mul * current + add`.
    Affine { mul: usize, add: usize },
    /// Explicit `(current, next)` pairs.
    Table(Vec<(usize, usize)>),
}

impl Growth {
    pub fn next(&self, x: usize) -> Option<usize> {
        match self {
            Growth::Affine { mul, add } => mul.checked_mul(x)?.checked_add(*add),
            Growth::Table(t) => t.iter().find(|(a, _)| *a == x).map(|&(_, b)| b),
        }
    }

    /// Parses `affine:MUL:ADD` or a table `3:5,5:9,...`.
    pub fn parse(text: &str) -> Result<Growth> {
        let bad = || Error::invalid(format!("bad growth rule '{text}'"));
        if let Some(rest) = text.strip_prefix("affine:") {
            let (m, a) = rest.split_once(':').ok_or_else(bad)?;
            return Ok(Growth::Affine {
                mul: m.trim().parse().map_err(|_| bad())?,
                add: a.trim().parse().map_err(|_| bad())?,
            });
        }
        let pairs = text
            .split(',')
            .map(|p| {
                let (a, b) = p.split_once(':').ok_or_else(bad)?;
                Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Growth::Table(pairs))
    }

    /// Members `ℓ_1, ℓ_2, ...` up to and including the first one above
    /// `bound`. Stops early if the rule is undefined or fails to grow.
    pub fn members(&self, first: usize, bound: usize) -> Vec<usize> {
        let mut out = vec![first];
        let mut cur = first;
        while cur <= bound {
            match self.next(cur) {
                Some(nx) if nx > cur => {
                    out.push(nx);
                    cur = nx;
                }
                _ => break,
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCertificate {
    pub cycle_length: usize,
    pub k: usize,
    /// `⌈ε² n² / (20k)⌉`.
    pub required: u64,
    /// Size of a maximal greedy packing.
    pub packed: u64,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyDetection {
    pub k: usize,
    /// Odd cycle length being detected, `2ℓ + 1`.
    pub target_length: usize,
    pub config: SamplerConfig,
    pub precondition_met: bool,
    pub estimate: Estimate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub n: usize,
    pub epsilon: Epsilon,
    pub growth: Growth,
    pub members: Vec<usize>,
    pub levels: Vec<LevelCertificate>,
    pub detection: Option<FamilyDetection>,
    /// Why no detection ran although a level was certified.
    pub note: Option<String>,
    /// Set when no level is certified.
    pub peeling: Option<PeelOutcome>,
}

fn required_cycles(eps: Epsilon, n: usize, k: usize) -> u64 {
    let (p, q) = (*eps.numer() as u128, *eps.denom() as u128);
    let num = p * p * (n * n) as u128;
    let den = 20 * k as u128 * q * q;
    num.div_ceil(den) as u64
}

/// Certifies packings of `C_{2k+1}` for each odd `2k+1 ≤ 4/ε`, then for the
/// first certified `k` estimates how often a structured sampler finds a
/// cycle whose length is the least family member above `2k+1`.
pub fn family_test(
    g: &GeneralGraph,
    growth: &Growth,
    ell1: usize,
    eps: Epsilon,
    trials: u64,
    seed: u64,
    exec: Exec,
) -> Result<FamilyReport> {
    if eps <= Epsilon::from_integer(0) || eps > Epsilon::new(1, 2) {
        return Err(Error::invalid(format!("epsilon {eps} is outside (0, 1/2]")));
    }
    if ell1 < 3 || ell1.is_multiple_of(2) {
        return Err(Error::invalid("the first family member must be an odd length >= 3"));
    }
    let n = g.vertex_count();
    let (p, q) = (*eps.numer() as u128, *eps.denom() as u128);
    let mut levels = Vec::new();
    let mut certified = None;
    let mut len = 3usize;
    while len as u128 * p <= 4 * q {
        let k = (len - 1) / 2;
        let required = required_cycles(eps, n, k);
        let packing = greedy_edge_disjoint_packing(g, len);
        let ok = packing.len() as u64 >= required;
        levels.push(LevelCertificate {
            cycle_length: len,
            k,
            required,
            packed: packing.len() as u64,
            certified: ok,
        });
        if ok {
            certified = Some((k, packing));
            break;
        }
        len += 2;
    }
    let mut report = FamilyReport {
        n,
        epsilon: eps,
        growth: growth.clone(),
        members: Vec::new(),
        levels,
        detection: None,
        note: None,
        peeling: None,
    };
    let Some((k, packing)) = certified else {
        report.peeling = Some(shortest_odd_cycle_peel(g, *eps.numer() as f64 / *eps.denom() as f64));
        return Ok(report);
    };
    report.members = growth.members(ell1, 2 * k + 1);
    let Some(&target) = report.members.iter().find(|&&m| m > 2 * k + 1) else {
        report.note = Some(format!("the family has no member above {}", 2 * k + 1));
        return Ok(report);
    };
    if target % 2 == 0 {
        report.note = Some(format!("family member {target} is even"));
        return Ok(report);
    }
    let eps_prime = eps * eps / Epsilon::from_integer(20 * k as i64);
    let config = SamplerConfig::new(k, (target - 1) / 2, eps_prime, SamplerMode::Structured)?;
    let sampler = Sampler::new(g, config.clone(), Some(&packing))?;
    let estimate = estimate_success_probability(&sampler, trials, seed, exec)?;
    report.detection = Some(FamilyDetection {
        k,
        target_length: target,
        precondition_met: config.precondition_met(n),
        config,
        estimate,
    });
    Ok(report)
}
