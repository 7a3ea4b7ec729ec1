use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::lp::{lp_feasible, LpOutcome, RationalLP, Relation};
use crate::equations::{EquationSystem, LinearEquation};
use crate::linalg::{common_denominator, null_space, q, row_span_coefficients, to_rational_rows, Rational};
use crate::par::Exec;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexOptions {
    pub exec: Exec,
    /// Also look for an exact dual certificate for each infeasible
    /// candidate.
    pub dual_certificates: bool,
    /// Stop at the first feasible candidate.
    pub stop_at_first: bool,
}

impl Default for ConvexOptions {
    fn default() -> Self {
        ConvexOptions {
            exec: Exec::default(),
            dual_certificates: false,
            stop_at_first: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub position: usize,
    /// Exact verdict of the phase-one simplex.
    pub feasible: bool,
    /// Verdict of the independent floating-point solver.
    pub float_feasible: bool,
    /// For infeasible candidates, when requested: whether a rational
    /// solution of the system was found whose candidate coordinate lies
    /// strictly below all others. No convex equation negative at that
    /// coordinate can vanish on it.
    pub dual_certificate: Option<bool>,
}

impl CandidateReport {
    pub fn float_agrees(&self) -> bool {
        self.float_feasible == self.feasible
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexEquation {
    /// The variable with the negative coefficient.
    pub position: usize,
    pub equation: LinearEquation,
    /// Rational multipliers of the system rows, as `p/q` strings.
    pub multipliers: Vec<String>,
    pub support: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexSearchReport {
    pub variables: usize,
    pub rows: usize,
    pub candidates: Vec<CandidateReport>,
    pub found: Option<ConvexEquation>,
}

impl ConvexSearchReport {
    pub fn disagreements(&self) -> usize {
        self.candidates.iter().filter(|c| !c.float_agrees()).count()
    }
}

/// Annihilator of the row span, shared by every candidate.
struct Problem {
    k: usize,
    rows: Vec<Vec<Rational>>,
    null: Vec<Vec<Rational>>,
}

impl Problem {
    /// `a` in the row span, `a_i >= 0` off `e`, `Σ_{i≠e} a_i = 1`; the sum
    /// condition forces `a_e = -1` because every row sums to zero.
    fn candidate_lp(&self, e: usize) -> RationalLP {
        let mut lp = RationalLP::new(self.k);
        for i in (0..self.k).filter(|&i| i != e) {
            lp.set_nonnegative(i);
        }
        for z in &self.null {
            lp.add(z.clone(), Relation::Eq, Rational::zero()).expect("k coefficients");
        }
        let ones = (0..self.k).map(|i| q((i != e) as i64)).collect();
        lp.add(ones, Relation::Eq, q(1)).expect("k coefficients");
        lp
    }

    /// Looks for `t` with `x = Σ t_j z_j` satisfying `x_i - x_e >= 1` for
    /// all `i ≠ e`, solves it in floating point, then re-checks the exact
    /// rational value of the float solution.
    fn dual_certificate(&self, e: usize) -> Option<Vec<Rational>> {
        let d = self.null.len();
        let mut lp = RationalLP::new(d);
        for i in (0..self.k).filter(|&i| i != e) {
            let coeffs = self.null.iter().map(|z| &z[i] - &z[e]).collect();
            lp.add(coeffs, Relation::Ge, q(1)).expect("d coefficients");
        }
        let t = lp.float_feasible()?;
        let t: Vec<Rational> = t.iter().map(|&v| Rational::from_float(v)).collect::<Option<_>>()?;
        let x: Vec<Rational> = (0..self.k)
            .map(|i| self.null.iter().zip(&t).fold(Rational::zero(), |acc, (z, tj)| acc + &z[i] * tj))
            .collect();
        let ok = (0..self.k).all(|i| i == e || x[i] > x[e])
            && self.rows.iter().all(|r| r.iter().zip(&x).fold(Rational::zero(), |acc, (a, b)| acc + a * b).is_zero());
        ok.then_some(x)
    }

    fn solve(&self, e: usize, dual: bool) -> (CandidateReport, Option<Vec<Rational>>) {
        let lp = self.candidate_lp(e);
        let float_feasible = lp.float_feasible().is_some();
        let outcome = lp_feasible(&lp);
        let feasible = outcome.is_feasible();
        let report = CandidateReport {
            position: e,
            feasible,
            float_feasible,
            dual_certificate: (dual && !feasible).then(|| self.dual_certificate(e).is_some()),
        };
        match outcome {
            LpOutcome::Feasible(a) => (report, Some(a)),
            LpOutcome::Infeasible => (report, None),
        }
    }
}

fn integer_equation(a: &[Rational]) -> Result<LinearEquation> {
    let l = common_denominator(a);
    let coeffs = a
        .iter()
        .map(|x| {
            let v: BigInt = (x * Rational::from_integer(l.clone())).to_integer();
            v.to_i64().ok_or(Error::Overflow("convex equation coefficient"))
        })
        .collect::<Result<Vec<i64>>>()?;
    Ok(LinearEquation::new(coeffs))
}

/// Searches the row span of `s` for a translation-invariant equation with
/// exactly one negative coefficient, trying each variable as the negative
/// position in order.
pub fn convex_span_search(s: &EquationSystem, options: ConvexOptions) -> Result<ConvexSearchReport> {
    if !s.is_translation_invariant() {
        return Err(Error::invalid("convex span search needs translation-invariant rows"));
    }
    let k = s.k();
    let rows = to_rational_rows(&s.row_vectors());
    let null = null_space(&rows, k);
    let problem = Problem { k, rows, null };
    let mut candidates = Vec::with_capacity(k);
    let mut found = None;
    // candidates are independent; batches keep early stopping cheap
    let batch = if options.stop_at_first { 8 } else { k.max(1) };
    let mut start = 0;
    while start < k && found.is_none() {
        let end = (start + batch).min(k);
        let results = options.exec.map_range(end - start, |i| problem.solve(start + i, options.dual_certificates));
        for (report, point) in results {
            let e = report.position;
            candidates.push(report);
            if let (Some(a), None) = (point, &found) {
                let equation = integer_equation(&a)?;
                let lambda = row_span_coefficients(&problem.rows, &a)
                    .expect("a feasible point lies in the row span");
                debug_assert!(equation.is_translation_invariant() && equation.negative_count() == 1);
                found = Some(ConvexEquation {
                    position: e,
                    support: equation.support().len(),
                    equation,
                    multipliers: lambda.iter().map(|x| x.to_string()).collect(),
                });
                if options.stop_at_first {
                    break;
                }
            }
        }
        start = end;
    }
    Ok(ConvexSearchReport {
        variables: k,
        rows: s.s(),
        candidates,
        found,
    })
}

/// Exact re-check of a reported convex equation against `s`: translation
/// invariant, exactly one negative coefficient, and in the rational row
/// span.
pub fn verify_convex_equation(s: &EquationSystem, eq: &LinearEquation) -> bool {
    if eq.k() != s.k() || !eq.is_translation_invariant() || eq.negative_count() != 1 {
        return false;
    }
    let target: Vec<Rational> = eq.coeffs().iter().map(|&c| q(c)).collect();
    let rows = to_rational_rows(&s.row_vectors());
    row_span_coefficients(&rows, &target).is_some()
        && eq.coeffs().iter().filter(|c| c.is_negative()).count() == 1
}
