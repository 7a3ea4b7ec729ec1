use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::EquationSystem;
use crate::{Error, Result};

/// Default largest `m` for the exact maximum solution-free subset search.
pub const DEFAULT_SUBSET_CAP: usize = 30;

/// Largest variable count handled by the meet-in-the-middle search.
const MITM_MAX_VARS: usize = 8;

/// A subset of `[m]` with no non-trivial solution to any of `avoided`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionFreeSet {
    pub m: usize,
    pub elements: Vec<i64>,
    pub avoided: Vec<EquationSystem>,
}

impl SolutionFreeSet {
    /// Validates `elements ⊆ [m]` and re-checks every avoided system.
    pub fn new(m: usize, mut elements: Vec<i64>, avoided: Vec<EquationSystem>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x < 1 || x > m as i64) {
            return Err(Error::invalid(format!("element {x} outside [1, {m}]")));
        }
        for s in &avoided {
            if let Some(sol) = find_nontrivial_solution(s, &elements) {
                return Err(Error::invalid(format!("set contains the non-trivial solution {sol:?}")));
            }
        }
        Ok(SolutionFreeSet { m, elements, avoided })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Re-runs the solution search for every avoided system.
    pub fn verify(&self) -> bool {
        self.avoided
            .iter()
            .all(|s| find_nontrivial_solution(s, &self.elements).is_none())
    }
}

/// A solution of `system` with values drawn from `values` (repetition
/// allowed) whose entries are not all equal, if one exists.
pub fn find_nontrivial_solution(system: &EquationSystem, values: &[i64]) -> Option<Vec<i64>> {
    let k = system.k();
    if k == 0 || values.is_empty() {
        return None;
    }
    let mut vals = values.to_vec();
    vals.sort_unstable();
    vals.dedup();
    if vals.len() < 2 {
        return None;
    }
    if k <= MITM_MAX_VARS {
        meet_in_the_middle(system, &vals)
    } else {
        depth_first(system, &vals)
    }
}

pub fn has_nontrivial_solution(system: &EquationSystem, values: &[i64]) -> bool {
    find_nontrivial_solution(system, values).is_some()
}

fn tuples(len: usize, vals: &[i64], mut visit: impl FnMut(&[i64])) {
    let mut idx = vec![0usize; len];
    let mut cur: Vec<i64> = vec![vals[0]; len];
    loop {
        visit(&cur);
        let mut p = 0;
        loop {
            if p == len {
                return;
            }
            idx[p] += 1;
            if idx[p] < vals.len() {
                cur[p] = vals[idx[p]];
                break;
            }
            idx[p] = 0;
            cur[p] = vals[0];
            p += 1;
        }
    }
}

/// Splits the variables in two halves and matches partial row-sum vectors.
/// Each key keeps up to two left tuples: a full tuple can only be constant
/// for one of them.
fn meet_in_the_middle(system: &EquationSystem, vals: &[i64]) -> Option<Vec<i64>> {
    let k = system.k();
    let rows = system.row_vectors();
    let h = k / 2;
    let mut left: HashMap<Vec<i64>, Vec<Vec<i64>>> = HashMap::new();
    let partial = |xs: &[i64], offset: usize| -> Vec<i64> {
        rows.iter()
            .map(|r| xs.iter().enumerate().map(|(i, x)| r[offset + i] * x).sum())
            .collect()
    };
    if h == 0 {
        left.insert(vec![0; rows.len()], vec![vec![]]);
    } else {
        tuples(h, vals, |xs| {
            let entry = left.entry(partial(xs, 0)).or_default();
            if entry.len() < 2 {
                entry.push(xs.to_vec());
            }
        });
    }
    let mut found = None;
    tuples(k - h, vals, |ys| {
        if found.is_some() {
            return;
        }
        let key: Vec<i64> = partial(ys, h).into_iter().map(|x| -x).collect();
        if let Some(lefts) = left.get(&key) {
            for xs in lefts {
                let mut full = xs.clone();
                full.extend_from_slice(ys);
                if full.iter().any(|&v| v != full[0]) {
                    found = Some(full);
                    return;
                }
            }
        }
    });
    found
}

/// Assigns variables in order, cutting a branch when some row's partial sum
/// cannot be cancelled by the remaining variables.
fn depth_first(system: &EquationSystem, vals: &[i64]) -> Option<Vec<i64>> {
    let k = system.k();
    let rows = system.row_vectors();
    let (vmin, vmax) = (vals[0], *vals.last().unwrap());
    let mut lo = vec![vec![0i64; k + 1]; rows.len()];
    let mut hi = vec![vec![0i64; k + 1]; rows.len()];
    for (r, row) in rows.iter().enumerate() {
        for j in (0..k).rev() {
            let (a, b) = (row[j] * vmin, row[j] * vmax);
            lo[r][j] = lo[r][j + 1] + a.min(b);
            hi[r][j] = hi[r][j + 1] + a.max(b);
        }
    }
    let mut partial = vec![0i64; rows.len()];
    let mut assignment = Vec::with_capacity(k);
    fn go(
        j: usize,
        rows: &[Vec<i64>],
        lo: &[Vec<i64>],
        hi: &[Vec<i64>],
        vals: &[i64],
        partial: &mut [i64],
        assignment: &mut Vec<i64>,
    ) -> bool {
        for r in 0..rows.len() {
            let need = -partial[r];
            if need < lo[r][j] || need > hi[r][j] {
                return false;
            }
        }
        if j == rows.first().map_or(0, |r| r.len()) {
            return assignment.iter().any(|&v| v != assignment[0]);
        }
        for &v in vals {
            for (r, row) in rows.iter().enumerate() {
                partial[r] += row[j] * v;
            }
            assignment.push(v);
            if go(j + 1, rows, lo, hi, vals, partial, assignment) {
                return true;
            }
            assignment.pop();
            for (r, row) in rows.iter().enumerate() {
                partial[r] -= row[j] * v;
            }
        }
        false
    }
    if rows.is_empty() {
        // no constraints: any non-constant tuple is a solution
        let mut t = vec![vals[0]; k];
        t[k - 1] = vals[1];
        return (k >= 2).then_some(t);
    }
    go(0, &rows, &lo, &hi, vals, &mut partial, &mut assignment).then_some(assignment)
}

/// Outcome of the exact maximum search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubsetSearch {
    Exact {
        size: usize,
        set: SolutionFreeSet,
        /// `r(n)` for `n = 1..=m` (only for translation-invariant systems).
        profile: Vec<usize>,
    },
    Inconclusive { reason: String },
}

impl SubsetSearch {
    pub fn size(&self) -> Option<usize> {
        match self {
            SubsetSearch::Exact { size, .. } => Some(*size),
            SubsetSearch::Inconclusive { .. } => None,
        }
    }

    pub fn set(&self) -> Option<&SolutionFreeSet> {
        match self {
            SubsetSearch::Exact { set, .. } => Some(set),
            SubsetSearch::Inconclusive { .. } => None,
        }
    }
}

/// Exact `r_S(m)`: the size of a largest subset of `[m]` with no
/// non-trivial solution to `system`, with one maximiser.
///
/// For translation-invariant systems, `r(n)` is built up for `n = 1..m`. A
/// set beating `r(n-1)` must contain both `1` and `n`, and the undecided
/// tail `{x..n}` is a translate of `[n-x+1]`, which bounds what it can add.
pub fn max_solution_free_subset(m: usize, system: &EquationSystem, cap: usize) -> Result<SubsetSearch> {
    if m > cap {
        return Ok(SubsetSearch::Inconclusive {
            reason: format!("m = {m} exceeds the exact cap {cap}"),
        });
    }
    if m == 0 {
        let set = SolutionFreeSet::new(0, vec![], vec![system.clone()])?;
        return Ok(SubsetSearch::Exact { size: 0, set, profile: vec![] });
    }
    let (best, profile) = if system.is_translation_invariant() {
        incremental(m, system)
    } else {
        let mut best = Vec::new();
        let mut cur = Vec::new();
        plain_search(1, m as i64, system, &mut cur, &mut best);
        (best, vec![])
    };
    let set = SolutionFreeSet::new(m, best, vec![system.clone()])?;
    Ok(SubsetSearch::Exact {
        size: set.len(),
        set,
        profile,
    })
}

fn incremental(m: usize, system: &EquationSystem) -> (Vec<i64>, Vec<usize>) {
    // r[n] for n = 0..=m
    let mut r = vec![0usize; m + 1];
    let mut best: Vec<i64> = Vec::new();
    for n in 1..=m {
        let target = r[n - 1] + 1;
        let mut cur = vec![1i64];
        let found = if n == 1 {
            Some(vec![1])
        } else {
            extend_to(2, n as i64, target, system, &r, &mut cur)
        };
        match found {
            Some(set) => {
                r[n] = target;
                best = set;
            }
            None => r[n] = r[n - 1],
        }
    }
    (best, r[1..].to_vec())
}

/// Finds a solution-free set of size `target` in `[1, n]` containing the
/// current prefix and `n`, deciding elements `x..n-1` first.
fn extend_to(x: i64, n: i64, target: usize, system: &EquationSystem, r: &[usize], cur: &mut Vec<i64>) -> Option<Vec<i64>> {
    if x == n {
        cur.push(n);
        let ok = cur.len() == target && !has_nontrivial_solution(system, cur);
        let out = ok.then(|| cur.clone());
        cur.pop();
        return out;
    }
    // elements x..=n form a translate of [n-x+1]
    if cur.len() + r[(n - x + 1) as usize] < target {
        return None;
    }
    cur.push(x);
    if !has_nontrivial_solution(system, cur) {
        if let Some(s) = extend_to(x + 1, n, target, system, r, cur) {
            return Some(s);
        }
    }
    cur.pop();
    extend_to(x + 1, n, target, system, r, cur)
}

fn plain_search(x: i64, m: i64, system: &EquationSystem, cur: &mut Vec<i64>, best: &mut Vec<i64>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if x > m || cur.len() + ((m - x + 1) as usize) <= best.len() {
        return;
    }
    cur.push(x);
    if !has_nontrivial_solution(system, cur) {
        plain_search(x + 1, m, system, cur, best);
    }
    cur.pop();
    plain_search(x + 1, m, system, cur, best);
}
