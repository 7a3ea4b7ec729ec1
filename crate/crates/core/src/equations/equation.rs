use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// `Σ a_i x_i = 0` over a universe of `k` variables (absent = 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearEquation {
    coeffs: Vec<i64>,
}

impl LinearEquation {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LinearEquation { coeffs }
    }

    pub fn zero(k: usize) -> Self {
        LinearEquation { coeffs: vec![0; k] }
    }

    /// Equation with the given `(variable, coefficient)` terms.
    pub fn from_terms(k: usize, terms: &[(usize, i64)]) -> Self {
        let mut e = LinearEquation::zero(k);
        for &(v, a) in terms {
            e.coeffs[v] += a;
        }
        e
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, var: usize) -> i64 {
        self.coeffs[var]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&a| a == 0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_translation_invariant(&self) -> bool {
        self.coefficient_sum() == 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.coeffs[i] != 0).collect()
    }

    pub fn negative_count(&self) -> usize {
        self.coeffs.iter().filter(|&&a| a < 0).count()
    }

    pub fn negated(&self) -> Self {
        LinearEquation::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn evaluate(&self, values: &[i64]) -> i64 {
        self.coeffs.iter().zip(values).map(|(a, x)| a * x).sum()
    }

    pub fn abs_sum(&self) -> i64 {
        self.coeffs.iter().map(|a| a.abs()).sum()
    }

    /// `Σ_{i∈T} a_i` for a variable subset `T`.
    pub fn subset_sum(&self, subset: &[usize]) -> i64 {
        subset.iter().map(|&i| self.coeffs[i]).sum()
    }

    /// Terms as `coeff*e<var>` separated by spaces; zero coefficients are
    /// omitted.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a != 0 {
                if !out.is_empty() {
                    out.push(' ');
                }
                let _ = write!(out, "{a}*e{i}");
            }
        }
        out
    }
}

impl std::fmt::Display for LinearEquation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            write!(f, "0 = 0")
        } else {
            write!(f, "{} = 0", self.to_text())
        }
    }
}

/// Equations over one shared set of `k` variables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationSystem {
    k: usize,
    rows: Vec<LinearEquation>,
}

impl EquationSystem {
    pub fn new(k: usize, rows: Vec<LinearEquation>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.k() != k) {
            return Err(Error::invalid(format!("row over {} variables in a system over {k}", r.k())));
        }
        Ok(EquationSystem { k, rows })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let k = rows.first().map_or(0, |r| r.len());
        EquationSystem::new(k, rows.iter().map(|r| LinearEquation::new(r.clone())).collect())
    }

    pub fn single(eq: LinearEquation) -> Self {
        EquationSystem {
            k: eq.k(),
            rows: vec![eq],
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn s(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LinearEquation] {
        &self.rows
    }

    pub fn row_vectors(&self) -> Vec<Vec<i64>> {
        self.rows.iter().map(|r| r.coeffs.clone()).collect()
    }

    pub fn is_translation_invariant(&self) -> bool {
        self.rows.iter().all(LinearEquation::is_translation_invariant)
    }

    pub fn is_satisfied_by(&self, values: &[i64]) -> bool {
        self.rows.iter().all(|r| r.evaluate(values) == 0)
    }

    /// Sum of the absolute values of every coefficient.
    pub fn abs_coefficient_sum(&self) -> i64 {
        self.rows.iter().map(LinearEquation::abs_sum).sum()
    }

    /// Parses one row per line (`1*e0 1*e1 -2*e2`). A `vars <k>` line fixes
    /// the universe size; otherwise it is one more than the largest variable
    /// seen. `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared: Option<usize> = None;
        let mut terms: Vec<Vec<(usize, i64)>> = Vec::new();
        let mut max_var: Option<usize> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            if let Some(rest) = content.strip_prefix("vars") {
                if declared.is_some() || !terms.is_empty() {
                    return Err(Error::parse(line, "`vars` must come first and only once"));
                }
                declared = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| Error::parse(line, "expected `vars <k>`"))?,
                );
                continue;
            }
            let mut row = Vec::new();
            for tok in content.split_whitespace() {
                let (c, v) = tok
                    .split_once('*')
                    .ok_or_else(|| Error::parse(line, format!("term {tok:?} is not coeff*var")))?;
                let coeff: i64 = c
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad coefficient in {tok:?}")))?;
                let var: usize = v
                    .strip_prefix('e')
                    .or_else(|| v.strip_prefix('x'))
                    .unwrap_or(v)
                    .parse()
                    .map_err(|_| Error::parse(line, format!("bad variable in {tok:?}")))?;
                if let Some(k) = declared {
                    if var >= k {
                        return Err(Error::parse(line, format!("variable {var} outside declared universe {k}")));
                    }
                }
                max_var = Some(max_var.map_or(var, |m: usize| m.max(var)));
                row.push((var, coeff));
            }
            terms.push(row);
        }
        let k = declared.unwrap_or(max_var.map_or(0, |m| m + 1));
        let rows = terms.iter().map(|t| LinearEquation::from_terms(k, t)).collect();
        EquationSystem::new(k, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vars {}\n", self.k);
        for r in &self.rows {
            out.push_str(&r.to_text());
            out.push('\n');
        }
        out
    }
}

/// The 3-term progression equation `x1 - 2 x2 + x3 = 0`.
pub fn three_ap() -> EquationSystem {
    EquationSystem::single(LinearEquation::new(vec![1, -2, 1]))
}
