//! Linear systems over GF(2), packed into `u64` words.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Equation {
    /// Variables with coefficient 1 (sorted, 0-based).
    pub support: Vec<usize>,
    pub rhs: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2System {
    pub num_vars: usize,
    pub equations: Vec<Gf2Equation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gf2Outcome {
    /// One solution (free variables set to 0) and the dimension of the solution space.
    Solvable { solution: Vec<bool>, dimension: usize },
    /// Indices of equations whose sum reads `0 = 1`.
    Infeasible { certificate: Vec<usize> },
}

impl Gf2Outcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Gf2Outcome::Solvable { .. })
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn xor(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn ones(&self, len: usize) -> Vec<usize> {
        (0..len).filter(|&i| self.get(i)).collect()
    }
}

#[derive(Clone)]
struct Row {
    vars: Bits,
    rhs: bool,
    origin: Bits,
}

impl Gf2System {
    pub fn new(num_vars: usize) -> Self {
        Gf2System { num_vars, equations: Vec::new() }
    }

    pub fn push(&mut self, support: impl IntoIterator<Item = usize>, rhs: bool) {
        let mut support: Vec<usize> = support.into_iter().collect();
        support.sort_unstable();
        self.equations.push(Gf2Equation { support, rhs });
    }

    /// Whether `x` satisfies every equation.
    pub fn satisfied_by(&self, x: &[bool]) -> bool {
        self.equations.iter().all(|eq| eq.support.iter().filter(|&&i| x[i]).count() % 2 == eq.rhs as usize)
    }
}

/// Gauss-Jordan elimination over GF(2), pivoting on the lowest variable index
/// and, within a column, on the earliest remaining row.
pub fn gf2_solve(system: &Gf2System) -> Gf2Outcome {
    let n = system.num_vars;
    let m = system.equations.len();
    let mut rows: Vec<Row> = system
        .equations
        .iter()
        .enumerate()
        .map(|(idx, eq)| {
            let mut vars = Bits::zeros(n);
            for &v in &eq.support {
                // repeated indices cancel
                vars.flip(v);
            }
            let mut origin = Bits::zeros(m);
            origin.flip(idx);
            Row { vars, rhs: eq.rhs, origin }
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut next = 0;
    for col in 0..n {
        let Some(p) = (next..rows.len()).find(|&r| rows[r].vars.get(col)) else {
            continue;
        };
        rows.swap(next, p);
        let pivot = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && row.vars.get(col) {
                row.vars.xor(&pivot.vars);
                row.rhs ^= pivot.rhs;
                row.origin.xor(&pivot.origin);
            }
        }
        pivot_cols.push(col);
        next += 1;
    }

    if let Some(bad) = rows[next..].iter().find(|r| r.rhs && r.vars.is_zero()) {
        return Gf2Outcome::Infeasible { certificate: bad.origin.ones(m) };
    }

    let mut solution = vec![false; n];
    for (r, &col) in pivot_cols.iter().enumerate() {
        solution[col] = rows[r].rhs;
    }
    Gf2Outcome::Solvable { solution, dimension: n - pivot_cols.len() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn back_substitution() {
        let mut s = Gf2System::new(2);
        s.push([0, 1], true);
        s.push([1], true);
        assert_eq!(gf2_solve(&s), Gf2Outcome::Solvable { solution: vec![false, true], dimension: 0 });
    }

    #[test]
    fn homogeneous_has_zero_solution() {
        let mut s = Gf2System::new(5);
        for i in 0..5 {
            s.push([i, (i + 1) % 5], false);
        }
        match gf2_solve(&s) {
            Gf2Outcome::Solvable { solution, dimension } => {
                assert!(solution.iter().all(|&b| !b));
                assert_eq!(dimension, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn certificate_sums_to_contradiction() {
        let mut s = Gf2System::new(3);
        s.push([0, 1], false);
        s.push([1, 2], false);
        s.push([0, 2], true);
        s.push([2], false);
        let Gf2Outcome::Infeasible { certificate } = gf2_solve(&s) else {
            panic!("expected infeasible");
        };
        let mut vars = [false; 3];
        let mut rhs = false;
        for &e in &certificate {
            for &v in &s.equations[e].support {
                vars[v] ^= true;
            }
            rhs ^= s.equations[e].rhs;
        }
        assert!(vars.iter().all(|&b| !b));
        assert!(rhs);
    }

    fn system_strategy() -> impl Strategy<Value = Gf2System> {
        (1usize..=12).prop_flat_map(|n| {
            prop::collection::vec((prop::collection::vec(0..n, 0..=n), any::<bool>()), 0..=16).prop_map(move |eqs| {
                let mut s = Gf2System::new(n);
                for (support, rhs) in eqs {
                    let mut support = support;
                    support.sort_unstable();
                    support.dedup();
                    s.push(support, rhs);
                }
                s
            })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(s in system_strategy()) {
            let n = s.num_vars;
            let count = (0u32..1 << n)
                .filter(|mask| {
                    let x: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
                    s.satisfied_by(&x)
                })
                .count();
            match gf2_solve(&s) {
                Gf2Outcome::Solvable { solution, dimension } => {
                    prop_assert!(s.satisfied_by(&solution));
                    prop_assert_eq!(count, 1usize << dimension);
                }
                Gf2Outcome::Infeasible { .. } => prop_assert_eq!(count, 0),
            }
        }
    }
}
