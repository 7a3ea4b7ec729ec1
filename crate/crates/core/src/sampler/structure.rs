use std::collections::{HashMap, HashSet};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::graph::{CyclePacking, GeneralGraph};
use crate::{Error, Result};

/// Density parameter, kept exact so threshold comparisons never round.
pub type Epsilon = Rational64;

/// Parses `p/q`, an integer, or a decimal such as `0.04`; the value must lie
/// in `(0, 1]`.
pub fn parse_epsilon(text: &str) -> Result<Epsilon> {
    let t = text.trim();
    let value = if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::invalid(format!("bad decimal '{t}'")));
        }
        let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| Error::invalid(format!("bad decimal '{t}'")))? };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| Error::invalid(format!("bad decimal '{t}'")))?;
        Rational64::new(int * scale + frac, scale)
    } else {
        t.parse::<Rational64>().map_err(|_| Error::invalid(format!("bad rational '{t}'")))?
    };
    if value <= Rational64::from_integer(0) || value > Rational64::from_integer(1) {
        return Err(Error::invalid(format!("epsilon {value} is outside (0, 1]")));
    }
    Ok(value)
}

/// `count < eps * n / div`, evaluated exactly.
fn below(count: usize, eps: Epsilon, n: usize, div: i128) -> bool {
    (count as i128) * div * (*eps.denom() as i128) < (*eps.numer() as i128) * n as i128
}

/// `count < eps² n / (50 k²)`, evaluated exactly.
fn below_cleaning(count: usize, eps: Epsilon, n: usize, k: usize) -> bool {
    let (p, q) = (*eps.numer() as i128, *eps.denom() as i128);
    50 * (k * k) as i128 * count as i128 * q * q < p * p * n as i128
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedPacking {
    /// Surviving cycles, in their original order.
    pub c0: CyclePacking,
    /// Vertices on at least one surviving cycle, sorted.
    pub v0: Vec<usize>,
    pub removed_cycles: usize,
    /// Vertices whose low load triggered a removal.
    pub removal_events: usize,
}

impl RefinedPacking {
    /// Every vertex lies in no surviving cycle or in at least `eps n / 2`.
    pub fn verify(&self, n: usize, eps: Epsilon) -> bool {
        let loads = self.c0.vertex_loads(n);
        loads.iter().all(|&l| l == 0 || !below(l, eps, n, 2))
            && self.v0 == (0..n).filter(|&v| loads[v] > 0).collect::<Vec<_>>()
    }
}

/// Removes every cycle through a vertex that lies in fewer than `eps n / 2`
/// remaining cycles, until no such vertex is left.
pub fn refine_packing(g: &GeneralGraph, packing: &CyclePacking, eps: Epsilon) -> Result<RefinedPacking> {
    packing.validate(g)?;
    let n = g.vertex_count();
    let mut through = vec![Vec::new(); n];
    for (i, c) in packing.cycles.iter().enumerate() {
        for &v in c {
            through[v].push(i);
        }
    }
    let mut load: Vec<usize> = through.iter().map(Vec::len).collect();
    let mut alive = vec![true; packing.len()];
    let low = |l: usize| l > 0 && below(l, eps, n, 2);
    let mut stack: Vec<usize> = (0..n).rev().filter(|&v| low(load[v])).collect();
    let (mut removed, mut events) = (0, 0);
    while let Some(v) = stack.pop() {
        if !low(load[v]) {
            continue;
        }
        events += 1;
        for &c in &through[v] {
            if !alive[c] {
                continue;
            }
            alive[c] = false;
            removed += 1;
            for &w in &packing.cycles[c] {
                load[w] -= 1;
                if low(load[w]) {
                    stack.push(w);
                }
            }
        }
    }
    let c0 = CyclePacking {
        cycle_length: packing.cycle_length,
        cycles: packing.cycles.iter().zip(&alive).filter(|(_, &a)| a).map(|(c, _)| c.clone()).collect(),
    };
    let v0 = (0..n).filter(|&v| load[v] > 0).collect();
    Ok(RefinedPacking { c0, v0, removed_cycles: removed, removal_events: events })
}

/// Path-to-cycle map `1..=2ℓ → 1..=2k+1`: one lap of the cycle ending back
/// at 1, then alternating 2, 1. Starts and ends at 1.
pub fn path_homomorphism(k: usize, ell: usize) -> Result<Vec<usize>> {
    if k == 0 || k >= ell {
        return Err(Error::invalid(format!("need 1 <= k < l, got k={k}, l={ell}")));
    }
    let mut phi: Vec<usize> = (1..=2 * k + 1).collect();
    phi.push(1);
    for _ in 0..ell - k - 1 {
        phi.extend([2, 1]);
    }
    Ok(phi)
}

fn is_path_homomorphism(phi: &[usize], cycle_len: usize) -> bool {
    let adjacent = |a: usize, b: usize| (a % cycle_len + 1 == b) || (b % cycle_len + 1 == a);
    phi.first() == Some(&1)
        && phi.last() == Some(&1)
        && phi.iter().all(|&x| (1..=cycle_len).contains(&x))
        && phi.windows(2).all(|w| adjacent(w[0], w[1]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleaningStructure {
    pub v0: usize,
    /// Vertices joined to `v0` by an edge of a surviving cycle, sorted.
    pub n_set: Vec<usize>,
    /// Number of cycles meeting `n_set` and avoiding `v0`, before cleaning.
    pub initial_cycles: usize,
    /// Cycles left after cleaning, each listed as `f_C(1), ..., f_C(2k+1)`.
    pub c_star: CyclePacking,
    /// `u[j - 1]` is `U_j`, sorted.
    pub u: Vec<Vec<usize>>,
    /// `phi[i - 1]` is the image of path vertex `i`.
    pub phi: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cleaning {
    Ready(CleaningStructure),
    /// Nothing survives cleaning: the instance is too small for the
    /// constants.
    Degenerate { v0: usize, initial_cycles: usize },
}

impl Cleaning {
    pub fn ready(&self) -> Option<&CleaningStructure> {
        match self {
            Cleaning::Ready(s) => Some(s),
            Cleaning::Degenerate { .. } => None,
        }
    }
}

/// Builds `N`, `𝒞(v0)`, the cleaned family and the sets `U_j` for one
/// choice of `v0 ∈ V0`.
///
/// `f_C(1)` is the least vertex of `C` in `N`, and `f_C(2)` is whichever of
/// its two cycle neighbours is smaller.
pub fn build_cleaning_structure(g: &GeneralGraph, refined: &RefinedPacking, v0: usize, k: usize, ell: usize, eps: Epsilon) -> Result<Cleaning> {
    let len = 2 * k + 1;
    if refined.c0.cycle_length != len {
        return Err(Error::invalid(format!("packing has {}-cycles, expected {len}", refined.c0.cycle_length)));
    }
    if refined.v0.binary_search(&v0).is_err() {
        return Err(Error::invalid(format!("vertex {v0} is not in V0")));
    }
    let phi = path_homomorphism(k, ell)?;
    let n = g.vertex_count();
    let mut n_set = HashSet::new();
    for c in refined.c0.cycles.iter().filter(|c| c.contains(&v0)) {
        let i = c.iter().position(|&x| x == v0).expect("contains v0");
        n_set.insert(c[(i + 1) % len]);
        n_set.insert(c[(i + len - 1) % len]);
    }
    let mut oriented: Vec<Vec<usize>> = Vec::new();
    for c in &refined.c0.cycles {
        if c.contains(&v0) {
            continue;
        }
        let Some(start) = (0..len).filter(|&i| n_set.contains(&c[i])).min_by_key(|&i| c[i]) else {
            continue;
        };
        let (fwd, back) = (c[(start + 1) % len], c[(start + len - 1) % len]);
        let seq: Vec<usize> = if fwd < back {
            (0..len).map(|j| c[(start + j) % len]).collect()
        } else {
            (0..len).map(|j| c[(start + len - j) % len]).collect()
        };
        oriented.push(seq);
    }
    let initial_cycles = oriented.len();
    // d_j(u) as lists of cycle ids
    let mut holders: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (id, seq) in oriented.iter().enumerate() {
        for (j, &u) in seq.iter().enumerate() {
            holders.entry((j, u)).or_default().push(id);
        }
    }
    let mut alive = vec![true; oriented.len()];
    let mut d: HashMap<(usize, usize), usize> = holders.iter().map(|(&key, ids)| (key, ids.len())).collect();
    let low = |c: usize| c > 0 && below_cleaning(c, eps, n, k);
    let mut keys: Vec<(usize, usize)> = d.keys().copied().filter(|key| low(d[key])).collect();
    keys.sort_unstable();
    keys.reverse();
    while let Some(key) = keys.pop() {
        if !low(d[&key]) {
            continue;
        }
        for &id in &holders[&key] {
            if !alive[id] {
                continue;
            }
            alive[id] = false;
            for (j, &u) in oriented[id].iter().enumerate() {
                let e = d.get_mut(&(j, u)).expect("counted");
                *e -= 1;
                if low(*e) {
                    keys.push((j, u));
                }
            }
        }
    }
    let c_star: Vec<Vec<usize>> = oriented.into_iter().zip(&alive).filter(|(_, &a)| a).map(|(c, _)| c).collect();
    if c_star.is_empty() {
        return Ok(Cleaning::Degenerate { v0, initial_cycles });
    }
    let mut u = vec![Vec::new(); len];
    for (&(j, vertex), &count) in &d {
        if count > 0 {
            u[j].push(vertex);
        }
    }
    for set in &mut u {
        set.sort_unstable();
    }
    let mut n_set: Vec<usize> = n_set.into_iter().collect();
    n_set.sort_unstable();
    Ok(Cleaning::Ready(CleaningStructure {
        v0,
        n_set,
        initial_cycles,
        c_star: CyclePacking { cycle_length: len, cycles: c_star },
        u,
        phi,
    }))
}

impl CleaningStructure {
    /// Re-checks every structural guarantee against `g`; returns the first
    /// violation.
    pub fn verify(&self, g: &GeneralGraph, k: usize, eps: Epsilon) -> std::result::Result<(), String> {
        let len = 2 * k + 1;
        let n = g.vertex_count();
        if self.u.len() != len {
            return Err(format!("expected {len} sets U_j"));
        }
        if !self.n_set.iter().all(|&x| g.has_edge(self.v0, x)) {
            return Err("N is not inside the neighbourhood of v0".into());
        }
        if !self.u[0].iter().all(|x| self.n_set.binary_search(x).is_ok()) {
            return Err("U_1 is not inside N".into());
        }
        for j in 0..len {
            for &x in &self.u[j] {
                for nb in [(j + len - 1) % len, (j + 1) % len] {
                    let count = self.u[nb].iter().filter(|&&y| g.has_edge(x, y)).count();
                    if below_cleaning(count, eps, n, k) {
                        return Err(format!("vertex {x} of U_{} has {count} neighbours in U_{}", j + 1, nb + 1));
                    }
                }
            }
        }
        if !is_path_homomorphism(&self.phi, len) {
            return Err("phi is not a closed path homomorphism".into());
        }
        Ok(())
    }
}

/// The `t²` edge-disjoint `len`-cycles of `blowup(C_len, t)` (clone `c` of
/// class `i` has id `i t + c`): for each `x, y < t`, class 0 takes `x`,
/// class 1 takes `y` and class `i >= 2` takes `x + (i - 1) y mod t`. Needs
/// `gcd(len - 2, t) = 1` for the closing edges to be distinct.
pub fn blowup_cycle_packing(len: usize, t: usize) -> Result<CyclePacking> {
    if len < 3 || len.is_multiple_of(2) || t == 0 {
        return Err(Error::invalid("need an odd length >= 3 and t >= 1"));
    }
    if num_integer::gcd(len - 2, t) != 1 {
        return Err(Error::invalid(format!("gcd({}, {t}) must be 1", len - 2)));
    }
    let mut cycles = Vec::with_capacity(t * t);
    for x in 0..t {
        for y in 0..t {
            cycles.push(
                (0..len)
                    .map(|i| {
                        let c = match i {
                            0 => x,
                            1 => y,
                            _ => (x + (i - 1) * y) % t,
                        };
                        i * t + c
                    })
                    .collect(),
            );
        }
    }
    Ok(CyclePacking { cycle_length: len, cycles })
}
