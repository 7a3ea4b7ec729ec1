use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::{is_genus_one, EquationSystem, GenusVerdict, LinearEquation, SolutionFreeSet, DEFAULT_GENUS_CAP};
use crate::rng::Rng;
use crate::{Error, Result};

pub const DEFAULT_RETRY_CAP: usize = 64;

/// `Σ b_j E_j` with checked arithmetic.
pub fn combine(system: &EquationSystem, multipliers: &[i64]) -> Result<LinearEquation> {
    if multipliers.len() != system.s() {
        return Err(Error::invalid(format!(
            "{} multipliers for {} rows",
            multipliers.len(),
            system.s()
        )));
    }
    let mut coeffs = vec![0i64; system.k()];
    for (row, &b) in system.rows().iter().zip(multipliers) {
        for (c, &a) in coeffs.iter_mut().zip(row.coeffs()) {
            *c = a
                .checked_mul(b)
                .and_then(|t| c.checked_add(t))
                .ok_or(Error::Overflow("combining rows"))?;
        }
    }
    Ok(LinearEquation::new(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Combination {
    pub equation: LinearEquation,
    pub multipliers: Vec<i64>,
    /// Draws made, including the accepted one.
    pub attempts: usize,
}

/// Draws `b_j` uniformly from `[1, 2^k]` until `Σ b_j E_j` has genus one.
pub fn random_genus_one_combination(system: &EquationSystem, rng: &mut Rng, retry_cap: usize) -> Result<Combination> {
    let k = system.k();
    if k > 62 {
        return Err(Error::Overflow("drawing multipliers from [1, 2^k]"));
    }
    if system.s() == 0 {
        return Err(Error::invalid("cannot combine an empty system"));
    }
    let top = 1i64 << k;
    for attempt in 1..=retry_cap {
        let multipliers: Vec<i64> = (0..system.s()).map(|_| rng.gen_range(1..=top)).collect();
        let equation = combine(system, &multipliers)?;
        match is_genus_one(&EquationSystem::single(equation.clone()), DEFAULT_GENUS_CAP)? {
            GenusVerdict::GenusOne => {
                return Ok(Combination {
                    equation,
                    multipliers,
                    attempts: attempt,
                })
            }
            GenusVerdict::NotGenusOne { .. } => {}
            GenusVerdict::Inconclusive { reason } => return Err(Error::Inconclusive(reason)),
        }
    }
    Err(Error::RetryCapExceeded { cap: retry_cap })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftIntersection {
    pub set: SolutionFreeSet,
    /// `0` for the first set, then `a_2, ..., a_t`.
    pub shifts: Vec<u64>,
    pub modulus: u64,
    /// `|R_1| · Π_{i≥2} |R_i| / M`.
    pub expected_size: f64,
}

/// `M = 2sm` with `s` the total absolute coefficient mass of all systems
/// (taken as at least 1).
pub fn shift_modulus(sets: &[SolutionFreeSet], m: usize) -> u64 {
    let s: i64 = sets
        .iter()
        .flat_map(|r| &r.avoided)
        .map(EquationSystem::abs_coefficient_sum)
        .sum();
    2 * (s.max(1) as u64) * m as u64
}

/// `R_1 ∩ (R_2 + a_2) ∩ ... ∩ (R_t + a_t)` in `Z/MZ` for given shifts.
pub fn shift_intersection(sets: &[SolutionFreeSet], m: usize, shifts: &[u64]) -> Result<ShiftIntersection> {
    let Some(first) = sets.first() else {
        return Err(Error::invalid("need at least one set"));
    };
    if shifts.len() + 1 != sets.len() {
        return Err(Error::invalid("need one shift per set after the first"));
    }
    for s in sets.iter().flat_map(|r| &r.avoided) {
        if !s.is_translation_invariant() {
            return Err(Error::invalid("shifted intersections need translation-invariant systems"));
        }
    }
    let modulus = shift_modulus(sets, m);
    let md = modulus as i64;
    let members: Vec<std::collections::HashSet<i64>> = sets
        .iter()
        .map(|r| r.elements.iter().map(|x| x.rem_euclid(md)).collect())
        .collect();
    let elements: Vec<i64> = first
        .elements
        .iter()
        .copied()
        .filter(|&x| {
            shifts
                .iter()
                .zip(&members[1..])
                .all(|(&a, set)| set.contains(&(x - a as i64).rem_euclid(md)))
        })
        .collect();
    let expected_size = sets[1..]
        .iter()
        .fold(first.len() as f64, |acc, r| acc * r.len() as f64 / modulus as f64);
    let avoided: Vec<EquationSystem> = sets.iter().flat_map(|r| r.avoided.clone()).collect();
    let set = SolutionFreeSet::new(m.max(first.m), elements, avoided)?;
    let mut all_shifts = vec![0];
    all_shifts.extend_from_slice(shifts);
    Ok(ShiftIntersection {
        set,
        shifts: all_shifts,
        modulus,
        expected_size,
    })
}

/// Random shifts drawn uniformly from `Z/MZ`.
pub fn random_shift_intersection(sets: &[SolutionFreeSet], m: usize, rng: &mut Rng) -> Result<ShiftIntersection> {
    let modulus = shift_modulus(sets, m);
    let shifts: Vec<u64> = (1..sets.len()).map(|_| rng.gen_range(0..modulus)).collect();
    shift_intersection(sets, m, &shifts)
}
