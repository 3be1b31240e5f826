//! Exact linear feasibility by Fourier–Motzkin elimination.
//!
//! Used by the interval-preservation classifier to decide whether a box
//! section `{h : m·h = target, 0 <= h <= upper}` is nonempty. Equalities
//! are removed first by an exact solve, so elimination only runs on the
//! kernel coordinates.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::matrix::{solve_linear, LinearSolution, RatMatrix};
use crate::rational::Rational;

/// `coeffs · y <= bound`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Inequality {
    coeffs: Vec<Rational>,
    bound: Rational,
}

impl Inequality {
    /// Scales by a positive factor so the first nonzero coefficient has
    /// absolute value one; used only to deduplicate equivalent rows.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(Signed::abs) {
            for c in &mut self.coeffs {
                *c = &*c / &lead;
            }
            self.bound = &self.bound / &lead;
        }
        self
    }
}

/// Decides whether some `h` with `0 <= h <= upper` satisfies `m·h = target`.
pub fn box_section_feasible(
    m: &RatMatrix,
    target: &[Rational],
    upper: &[Rational],
) -> Result<bool> {
    match solve_linear(m, target)? {
        LinearSolution::NoSolution => Ok(false),
        LinearSolution::Unique(x) => Ok(in_box(&x, upper)),
        LinearSolution::Affine { particular, basis } => {
            // h = particular + K·y with K columns from the kernel basis;
            // each box face becomes one inequality over y
            let k = basis.len();
            let mut ineqs = Vec::with_capacity(2 * particular.len());
            for i in 0..particular.len() {
                let row: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
                // h_i <= upper_i
                ineqs.push(Inequality {
                    coeffs: row.clone(),
                    bound: &upper[i] - &particular[i],
                });
                // -h_i <= 0
                ineqs.push(Inequality {
                    coeffs: row.iter().map(|c| -c).collect(),
                    bound: particular[i].clone(),
                });
            }
            Ok(fourier_motzkin_feasible(ineqs, k))
        }
    }
}

fn in_box(x: &[Rational], upper: &[Rational]) -> bool {
    x.iter().zip(upper).all(|(v, u)| !v.is_negative() && v <= u)
}

/// Exact satisfiability of a system `coeffs · y <= bound` over the
/// rationals. Variables are eliminated in index order; what survives is a
/// set of constant constraints whose consistency decides the system.
fn fourier_motzkin_feasible(ineqs: Vec<Inequality>, nvars: usize) -> bool {
    let mut current = ineqs;
    for var in 0..nvars {
        let mut kept = BTreeSet::new();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for ineq in current {
            let c = &ineq.coeffs[var];
            if c.is_zero() {
                kept.insert(ineq.normalized());
            } else if c.is_positive() {
                pos.push(ineq);
            } else {
                neg.push(ineq);
            }
        }
        for p in &pos {
            let pc = &p.coeffs[var];
            for n in &neg {
                let nc = n.coeffs[var].abs();
                // (p / pc + n / |nc|) eliminates `var`
                let coeffs: Vec<Rational> = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(a, b)| a / pc + b / &nc)
                    .collect();
                let bound = &p.bound / pc + &n.bound / &nc;
                kept.insert(Inequality { coeffs, bound }.normalized());
            }
        }
        current = kept.into_iter().collect();
    }
    current.iter().all(|i| !i.bound.is_negative())
}
