//! Strict feasibility of linear equality systems by exact phase-1 simplex.
//!
//! The question "is there `x` with `A x = b` and `x_j > 0` for `j` in `S`" is
//! homogenized with an extra variable `t > 0` (`A x = b t`), which makes the
//! feasible set a cone. On a cone, `x_j > 0` can be replaced by `x_j >= 1`
//! without losing solutions, so the problem becomes an ordinary phase-1 LP.

use super::ExactField;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearEquation<F> {
    pub coeffs: Vec<F>,
    pub rhs: F,
}

impl<F: ExactField> LinearEquation<F> {
    pub fn new(coeffs: Vec<F>, rhs: F) -> Self {
        LinearEquation { coeffs, rhs }
    }

    pub fn holds_at(&self, x: &[F]) -> bool {
        let lhs = self.coeffs.iter().zip(x).fold(F::zero(), |acc, (a, v)| acc + a.clone() * v.clone());
        lhs == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility<F> {
    Feasible { witness: Vec<F> },
    Infeasible,
}

impl<F> Feasibility<F> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }

    pub fn witness(&self) -> Option<&[F]> {
        match self {
            Feasibility::Feasible { witness } => Some(witness),
            Feasibility::Infeasible => None,
        }
    }
}

enum Column {
    /// original variable `j` is `1 + s`
    Shifted(usize),
    /// original variable `j` is `p - q`; this is the `p` or `q` part
    Positive(usize),
    Negative(usize),
}

/// Decides whether some `x` satisfies every equation with `x_j > 0` for all
/// `j` in `strict_positive`; other variables are free. Returns a witness when
/// feasible.
pub fn strict_feasibility<F: ExactField>(
    equations: &[LinearEquation<F>],
    num_vars: usize,
    strict_positive: &[usize],
) -> Feasibility<F> {
    assert!(equations.iter().all(|e| e.coeffs.len() == num_vars), "equation width must equal num_vars");
    // Homogenizing variable gets index `num_vars`.
    let tau = num_vars;
    let mut strict = vec![false; num_vars + 1];
    for &j in strict_positive {
        strict[j] = true;
    }
    strict[tau] = true;

    let coeff = |eq: &LinearEquation<F>, j: usize| -> F {
        if j == tau {
            -eq.rhs.clone()
        } else {
            eq.coeffs[j].clone()
        }
    };

    let mut columns = Vec::new();
    for (j, &is_strict) in strict.iter().enumerate() {
        if is_strict {
            columns.push(Column::Shifted(j));
        } else {
            columns.push(Column::Positive(j));
            columns.push(Column::Negative(j));
        }
    }

    let rows: Vec<(Vec<F>, F)> = equations
        .iter()
        .map(|eq| {
            let a: Vec<F> = columns
                .iter()
                .map(|c| match *c {
                    Column::Shifted(j) | Column::Positive(j) => coeff(eq, j),
                    Column::Negative(j) => -coeff(eq, j),
                })
                .collect();
            let b = (0..=num_vars).filter(|&j| strict[j]).fold(F::zero(), |acc, j| acc - coeff(eq, j));
            (a, b)
        })
        .collect();

    let Some(z) = phase_one(&rows, columns.len()) else {
        return Feasibility::Infeasible;
    };

    let mut values = vec![F::zero(); num_vars + 1];
    for (c, v) in columns.iter().zip(&z) {
        match *c {
            Column::Shifted(j) => values[j] = F::one() + v.clone(),
            Column::Positive(j) => values[j] = values[j].clone() + v.clone(),
            Column::Negative(j) => values[j] = values[j].clone() - v.clone(),
        }
    }
    let t = values.pop().expect("homogenizing variable");
    let witness = values.into_iter().map(|v| v / t.clone()).collect();
    Feasibility::Feasible { witness }
}

/// Finds `z >= 0` with `A z = b` or proves none exists. Bland's rule.
fn phase_one<F: ExactField>(rows: &[(Vec<F>, F)], n: usize) -> Option<Vec<F>> {
    let m = rows.len();
    let width = n + m + 1;
    let mut tab: Vec<Vec<F>> = Vec::with_capacity(m);
    for (i, (a, b)) in rows.iter().enumerate() {
        let flip = b.sign() == super::Sign::Negative;
        let mut row = Vec::with_capacity(width);
        for v in a {
            row.push(if flip { -v.clone() } else { v.clone() });
        }
        for k in 0..m {
            row.push(if k == i { F::one() } else { F::zero() });
        }
        row.push(if flip { -b.clone() } else { b.clone() });
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs for minimizing the sum of artificials.
    let mut cost = vec![F::zero(); width];
    for row in &tab {
        for j in 0..n {
            cost[j] = cost[j].clone() - row[j].clone();
        }
        cost[width - 1] = cost[width - 1].clone() - row[width - 1].clone();
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].sign() == super::Sign::Negative) {
        let mut leave: Option<(usize, F)> = None;
        for i in 0..m {
            if tab[i][enter].gt_zero() {
                let ratio = tab[i][width - 1].clone() / tab[i][enter].clone();
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        let d = (ratio.clone() - lr.clone()).sign();
                        d == super::Sign::Negative || (d == super::Sign::Zero && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.expect("phase one objective is bounded below");
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut z = vec![F::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            z[b] = tab[i][width - 1].clone();
        }
    }
    Some(z)
}

fn pivot<F: ExactField>(tab: &mut [Vec<F>], cost: &mut [F], r: usize, c: usize) {
    let inv = F::one() / tab[r][c].clone();
    for x in tab[r].iter_mut() {
        *x = x.clone() * inv.clone();
    }
    let pivot_row = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            *x = x.clone() - f.clone() * p.clone();
        }
    }
}
