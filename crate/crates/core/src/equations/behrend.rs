use std::collections::BTreeMap;

use super::{three_ap, SolutionFreeSet};

/// A 3-AP-free subset of `[m]`, deterministic in `m`.
///
/// Candidates are spheres in a digit grid: numbers in `[0, m)` whose `d`
/// digits in base `2D - 1` all lie below `D`, grouped by the sum of squared
/// digits. Digit-wise addition of two such numbers never carries, so a
/// progression `x + z = 2y` inside one sphere would put three points of a
/// sphere on a line, which is impossible. The numbers with base-3 digits in
/// `{0, 1}` are added as one more candidate (they are 3-AP-free for the same
/// no-carry reason). The largest candidate is shifted into `[1, m]`.
pub fn behrend_set(m: usize) -> SolutionFreeSet {
    let mut best: Vec<i64> = if m >= 1 { vec![0] } else { vec![] };
    let ln = (m.max(2) as f64).ln();
    let max_dims = (ln.sqrt().ceil() as u32) + 2;
    for dims in 2..=max_dims {
        let mut digit_bound = 2u64;
        loop {
            let base = 2 * digit_bound - 1;
            // the top digit must be able to be non-zero
            match base.checked_pow(dims - 1) {
                Some(p) if p < m as u64 => {}
                _ => break,
            }
            let sphere = largest_sphere(m as u64, dims, digit_bound);
            if sphere.len() > best.len() {
                best = sphere;
            }
            digit_bound += 1;
        }
    }
    let binary_ternary = ternary_zero_one(m as u64);
    if binary_ternary.len() > best.len() {
        best = binary_ternary;
    }
    let elements: Vec<i64> = best.into_iter().map(|x| x + 1).collect();
    SolutionFreeSet::new(m, elements, vec![three_ap()]).expect("digit-sphere sets are 3-AP-free")
}

fn largest_sphere(m: u64, dims: u32, digit_bound: u64) -> Vec<i64> {
    let base = 2 * digit_bound - 1;
    let mut spheres: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    let mut stack: Vec<(u32, u64, u64, u64)> = vec![(0, 0, 1, 0)];
    // (digits placed, value, place value, squared norm)
    while let Some((placed, value, place, norm)) = stack.pop() {
        if placed == dims {
            spheres.entry(norm).or_default().push(value as i64);
            continue;
        }
        for digit in 0..digit_bound {
            let v = value + digit * place;
            if v >= m {
                break;
            }
            stack.push((placed + 1, v, place.saturating_mul(base), norm + digit * digit));
        }
    }
    let mut best: Vec<i64> = Vec::new();
    for (_, mut pts) in spheres {
        if pts.len() > best.len() {
            pts.sort_unstable();
            best = pts;
        }
    }
    best
}

fn ternary_zero_one(m: u64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut bits = 0u64;
    loop {
        // interpret the binary digits of `bits` as base-3 digits
        let (mut v, mut place, mut b) = (0u64, 1u64, bits);
        while b > 0 {
            v += (b & 1) * place;
            place *= 3;
            b >>= 1;
        }
        if v >= m {
            break;
        }
        out.push(v as i64);
        bits += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has_3ap(set: &[i64]) -> bool {
        let s: std::collections::HashSet<i64> = set.iter().copied().collect();
        set.iter()
            .any(|&x| set.iter().any(|&z| z > x && (x + z) % 2 == 0 && s.contains(&((x + z) / 2))))
    }

    #[test]
    fn small_cases() {
        assert_eq!(behrend_set(1).elements, vec![1]);
        assert_eq!(behrend_set(4).elements, vec![1, 2, 4]);
        assert!(behrend_set(0).is_empty());
    }

    #[test]
    fn sets_are_progression_free() {
        for m in [2, 3, 10, 50, 100, 1000, 5000] {
            let s = behrend_set(m);
            assert!(!has_3ap(&s.elements), "m = {m}");
            assert!(s.elements.iter().all(|&x| x >= 1 && x <= m as i64));
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(behrend_set(777), behrend_set(777));
    }
}
