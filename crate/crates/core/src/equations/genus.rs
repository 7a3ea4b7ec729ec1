use rand::Rng as _;
use serde::{Deserialize, Serialize};

use super::EquationSystem;
use crate::rng::Rng;
use crate::{Error, Result};

/// Default largest variable count decided exactly.
pub const DEFAULT_GENUS_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenusVerdict {
    GenusOne,
    /// A proper non-empty variable subset (0-based) on which every row's
    /// coefficients sum to zero.
    NotGenusOne { witness: Vec<usize> },
    /// Exact search was not attempted or falsification found nothing.
    Inconclusive { reason: String },
}

impl GenusVerdict {
    pub fn is_genus_one(&self) -> bool {
        matches!(self, GenusVerdict::GenusOne)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            GenusVerdict::NotGenusOne { witness } => Some(witness),
            _ => None,
        }
    }
}

/// True iff every row has zero coefficient sum on `subset`.
pub fn subset_vanishes(system: &EquationSystem, subset: &[usize]) -> bool {
    system.rows().iter().all(|r| r.subset_sum(subset) == 0)
}

fn require_translation_invariant(system: &EquationSystem) -> Result<()> {
    if system.is_translation_invariant() {
        Ok(())
    } else {
        Err(Error::invalid("genus checks need translation-invariant rows"))
    }
}

/// Decides whether `system` has genus one, exactly, for `k <= cap`.
///
/// A bad subset `T` and its complement are both bad, so the search fixes
/// variable 0 inside `T` and excludes the full set. Variables are decided in
/// index order (include first); a branch is cut as soon as some row's
/// partial sum can no longer return to zero using the undecided variables.
pub fn is_genus_one(system: &EquationSystem, cap: usize) -> Result<GenusVerdict> {
    require_translation_invariant(system)?;
    let k = system.k();
    if k > cap {
        return Ok(GenusVerdict::Inconclusive {
            reason: format!("{k} variables exceed the exact cap {cap}; raise the cap or use falsification"),
        });
    }
    if k < 2 {
        return Ok(GenusVerdict::GenusOne);
    }
    let rows = system.row_vectors();
    // suffix bounds: reachable range of Σ_{i>=j} a_i x_i over x_i ∈ {0,1}
    let mut lo = vec![vec![0i64; k + 1]; rows.len()];
    let mut hi = vec![vec![0i64; k + 1]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for j in (0..k).rev() {
            lo[r][j] = lo[r][j + 1] + row[j].min(0);
            hi[r][j] = hi[r][j + 1] + row[j].max(0);
        }
    }
    let mut partial: Vec<i64> = rows.iter().map(|row| row[0]).collect();
    let mut chosen = vec![0usize];
    let found = search(&rows, &lo, &hi, 1, &mut partial, &mut chosen, k);
    Ok(match found {
        true => GenusVerdict::NotGenusOne { witness: chosen },
        false => GenusVerdict::GenusOne,
    })
}

fn search(
    rows: &[Vec<i64>],
    lo: &[Vec<i64>],
    hi: &[Vec<i64>],
    j: usize,
    partial: &mut [i64],
    chosen: &mut Vec<usize>,
    k: usize,
) -> bool {
    for r in 0..rows.len() {
        let need = -partial[r];
        if need < lo[r][j] || need > hi[r][j] {
            return false;
        }
    }
    if j == k {
        return chosen.len() < k && partial.iter().all(|&p| p == 0);
    }
    // include variable j
    for (r, row) in rows.iter().enumerate() {
        partial[r] += row[j];
    }
    chosen.push(j);
    if search(rows, lo, hi, j + 1, partial, chosen, k) {
        return true;
    }
    chosen.pop();
    for (r, row) in rows.iter().enumerate() {
        partial[r] -= row[j];
    }
    search(rows, lo, hi, j + 1, partial, chosen, k)
}

/// Randomised falsification: samples `trials` uniform proper subsets and
/// returns the first bad one, or `Inconclusive` if none vanished.
pub fn falsify_genus_one(system: &EquationSystem, trials: u64, rng: &mut Rng) -> Result<GenusVerdict> {
    require_translation_invariant(system)?;
    let k = system.k();
    if k < 2 {
        return Ok(GenusVerdict::GenusOne);
    }
    for _ in 0..trials {
        let subset: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.5)).collect();
        if subset.is_empty() || subset.len() == k {
            continue;
        }
        if subset_vanishes(system, &subset) {
            return Ok(GenusVerdict::NotGenusOne { witness: subset });
        }
    }
    Ok(GenusVerdict::Inconclusive {
        reason: format!("no vanishing subset among {trials} random samples"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::{three_ap, EquationSystem};

    #[test]
    fn three_ap_has_genus_one() {
        assert_eq!(is_genus_one(&three_ap(), DEFAULT_GENUS_CAP).unwrap(), GenusVerdict::GenusOne);
    }

    #[test]
    fn additive_energy_equation_fails_with_witness() {
        let s = EquationSystem::from_rows(&[vec![1, 1, -1, -1]]).unwrap();
        let v = is_genus_one(&s, DEFAULT_GENUS_CAP).unwrap();
        assert_eq!(v.witness(), Some(&[0, 2][..]));
    }

    #[test]
    fn system_has_genus_one_while_rows_do_not() {
        let s = EquationSystem::from_rows(&[vec![1, 1, -1, -1], vec![1, -1, 0, 0]]).unwrap();
        assert!(is_genus_one(&s, DEFAULT_GENUS_CAP).unwrap().is_genus_one());
        let second = EquationSystem::from_rows(&[vec![1, -1, 0, 0]]).unwrap();
        assert!(!is_genus_one(&second, DEFAULT_GENUS_CAP).unwrap().is_genus_one());
    }

    #[test]
    fn cap_gives_inconclusive() {
        let s = EquationSystem::from_rows(&[vec![1, -1, 0, 0, 0]]).unwrap();
        assert!(matches!(is_genus_one(&s, 4).unwrap(), GenusVerdict::Inconclusive { .. }));
    }

    #[test]
    fn rejects_non_invariant_rows() {
        let s = EquationSystem::from_rows(&[vec![1, 1]]).unwrap();
        assert!(is_genus_one(&s, DEFAULT_GENUS_CAP).is_err());
    }

    #[test]
    fn falsification_finds_obvious_witness() {
        let s = EquationSystem::from_rows(&[vec![1, -1, 1, -1, 0, 0]]).unwrap();
        let mut rng = crate::rng::seeded(1);
        let v = falsify_genus_one(&s, 1000, &mut rng).unwrap();
        assert!(subset_vanishes(&s, v.witness().unwrap()));
    }
}
