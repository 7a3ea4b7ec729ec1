use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{dot, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn holds(&self, point: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, point);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Feasibility problem over exact rationals. Variables are free unless
/// marked non-negative.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RationalLP {
    nonneg: Vec<bool>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible(_))
    }
}

impl RationalLP {
    pub fn new(variables: usize) -> Self {
        RationalLP {
            nonneg: vec![false; variables],
            constraints: Vec::new(),
        }
    }

    pub fn variables(&self) -> usize {
        self.nonneg.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonneg[var] = true;
    }

    pub fn is_nonnegative(&self, var: usize) -> bool {
        self.nonneg[var]
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.variables() {
            return Err(Error::invalid(format!(
                "constraint has {} coefficients for {} variables",
                coeffs.len(),
                self.variables()
            )));
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(())
    }

    /// Exact check of every constraint and sign condition.
    pub fn is_satisfied_by(&self, point: &[Rational]) -> bool {
        point.len() == self.variables()
            && point.iter().zip(&self.nonneg).all(|(x, &nn)| !nn || !x.is_negative())
            && self.constraints.iter().all(|c| c.holds(point))
    }

    /// Floating-point feasibility via an independent simplex implementation;
    /// `None` means infeasible.
    pub fn float_feasible(&self) -> Option<Vec<f64>> {
        use minilp::{ComparisonOp, OptimizationDirection, Problem};
        let mut p = Problem::new(OptimizationDirection::Minimize);
        let vars: Vec<_> = self
            .nonneg
            .iter()
            .map(|&nn| p.add_var(0.0, if nn { (0.0, f64::INFINITY) } else { (f64::NEG_INFINITY, f64::INFINITY) }))
            .collect();
        for c in &self.constraints {
            let expr: Vec<_> = c
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (vars[i], a.to_f64().unwrap_or(f64::NAN)))
                .collect();
            let op = match c.relation {
                Relation::Le => ComparisonOp::Le,
                Relation::Ge => ComparisonOp::Ge,
                Relation::Eq => ComparisonOp::Eq,
            };
            p.add_constraint(expr, op, c.rhs.to_f64().unwrap_or(f64::NAN));
        }
        let sol = p.solve().ok()?;
        Some(vars.iter().map(|v| *sol.var_value(*v)).collect())
    }
}

/// Phase one of the simplex method on `A x = b, x >= 0` with Bland's rule.
/// Returns a feasible point or `None`.
fn phase_one(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, n: usize) -> Option<Vec<Rational>> {
    let m = a.len();
    for i in 0..m {
        if b[i].is_negative() {
            b[i] = -b[i].clone();
            for x in a[i].iter_mut() {
                *x = -x.clone();
            }
        }
        // artificial column n + i
        a[i].resize(n + m, Rational::zero());
        a[i][n + i] = Rational::from_integer(1.into());
    }
    let cols = n + m;
    let mut basis: Vec<usize> = (n..cols).collect();
    // reduced costs of the auxiliary objective (sum of artificials)
    let mut cost = vec![Rational::zero(); cols];
    let mut value = Rational::zero();
    for i in 0..m {
        for j in 0..n {
            if !a[i][j].is_zero() {
                cost[j] -= &a[i][j];
            }
        }
        value -= &b[i];
    }
    while let Some(enter) = (0..cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if a[i][enter].is_positive() {
                let ratio = &b[i] / &a[i][enter];
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // the auxiliary objective is bounded below by zero
        let (r, _) = leave.expect("phase one is never unbounded");
        let inv = a[r][enter].recip();
        for x in a[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        b[r] *= &inv;
        let (pivot_row, pivot_b) = (a[r].clone(), b[r].clone());
        let nz: Vec<usize> = (0..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..m {
            if i == r || a[i][enter].is_zero() {
                continue;
            }
            let f = a[i][enter].clone();
            for &j in &nz {
                let d = &f * &pivot_row[j];
                a[i][j] -= d;
            }
            b[i] -= &f * &pivot_b;
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for &j in &nz {
                let d = &f * &pivot_row[j];
                cost[j] -= d;
            }
            value -= &f * &pivot_b;
        }
        basis[r] = enter;
    }
    if !value.is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = b[i].clone();
        }
    }
    Some(x)
}

/// Exact feasibility. A returned point has been re-checked against every
/// constraint.
pub fn lp_feasible(lp: &RationalLP) -> LpOutcome {
    // columns: one per non-negative variable, two per free variable, then
    // one slack per inequality
    let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(lp.variables());
    let mut n = 0;
    for &nn in &lp.nonneg {
        if nn {
            col_of.push((n, None));
            n += 1;
        } else {
            col_of.push((n, Some(n + 1)));
            n += 2;
        }
    }
    let slack_start = n;
    n += lp.constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let mut a = Vec::with_capacity(lp.constraints.len());
    let mut b = Vec::with_capacity(lp.constraints.len());
    let mut slack = slack_start;
    for c in &lp.constraints {
        let mut row = vec![Rational::zero(); n];
        for (v, coef) in c.coeffs.iter().enumerate() {
            let (pos, neg) = col_of[v];
            row[pos] = coef.clone();
            if let Some(neg) = neg {
                row[neg] = -coef.clone();
            }
        }
        match c.relation {
            Relation::Le => {
                row[slack] = Rational::from_integer(1.into());
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = Rational::from_integer((-1).into());
                slack += 1;
            }
            Relation::Eq => {}
        }
        a.push(row);
        b.push(c.rhs.clone());
    }
    match phase_one(a, b, n) {
        None => LpOutcome::Infeasible,
        Some(x) => {
            let point: Vec<Rational> = col_of
                .iter()
                .map(|&(pos, neg)| match neg {
                    Some(neg) => &x[pos] - &x[neg],
                    None => x[pos].clone(),
                })
                .collect();
            assert!(lp.is_satisfied_by(&point), "simplex returned a point that fails substitution");
            LpOutcome::Feasible(point)
        }
    }
}
