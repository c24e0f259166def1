//! Bounded search for characteristic maps.
//!
//! The torus basis is fixed by sending the base vertex's positively ordered
//! facets to the standard basis, which quotients out the GL(n, Z) action.
//! Remaining facets receive primitive vectors with entries in `[-B, B]`,
//! assigned depth-first; every cell whose facets are all assigned is checked
//! immediately and failures prune the subtree.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::charmap::{Base, CharacteristicMap, CharacteristicPair};
use crate::complexes::OrientationData;
use crate::error::{Error, Result};
use crate::exactnum::det_int;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Goal {
    /// `|det| = 1` at every cell.
    Unimodular,
    /// `det = +1` at every cell in positively ordered columns.
    AllPositive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub bound: i64,
    /// Facets of the base vertex, in any order.
    pub base_vertex: Vec<usize>,
    pub goal: Goal,
    pub facet_order: Option<Vec<usize>>,
    pub solution_cap: Option<usize>,
    pub node_budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl SearchConfig {
    pub fn new(bound: i64, base_vertex: Vec<usize>, goal: Goal) -> Self {
        SearchConfig {
            bound,
            base_vertex,
            goal,
            facet_order: None,
            solution_cap: None,
            node_budget: DEFAULT_NODE_BUDGET,
            jobs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub solutions: Vec<CharacteristicMap>,
    /// Candidate assignments examined.
    pub nodes: u64,
    /// The whole normalized bounded space was covered.
    pub exhaustive: bool,
    pub budget_exceeded: bool,
    /// Order in which free facets were assigned.
    pub facet_order: Vec<usize>,
    /// Positively ordered base tuple that was sent to the standard basis.
    pub base_tuple: Vec<usize>,
}

fn base_cell(base: &Base, orientation: &OrientationData, vertex: &[usize]) -> Result<usize> {
    let mut key = vertex.to_vec();
    key.sort_unstable();
    let idx = base.cells().iter().position(|c| *c == key).ok_or_else(|| {
        Error::Normalization(format!("{:?} is not a vertex", vertex.iter().map(|v| v + 1).collect::<Vec<_>>()))
    })?;
    orientation.validate(base.cells())?;
    Ok(idx)
}

/// Sends the base vertex's positively ordered columns to the identity. When
/// the base sign is +1 the applied transform has determinant +1 and every
/// sign is preserved.
pub fn normalize_map(
    pair: &CharacteristicPair,
    base_vertex: &[usize],
    orientation: &OrientationData,
) -> Result<CharacteristicMap> {
    let idx = base_cell(pair.base(), orientation, base_vertex)?;
    let minor = pair.map().minor(&orientation.tuples[idx]);
    let inverse = minor.unimodular_inverse().map_err(|e| Error::Normalization(e.to_string()))?;
    pair.map().transform(&inverse)
}

/// Every primitive vector in `[-bound, bound]^n`, lexicographic.
pub fn candidate_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let side = (2 * bound + 1) as u64;
    let total = side.pow(n as u32);
    (0..total)
        .map(|code| {
            let mut rest = code;
            let mut v = vec![0i64; n];
            for slot in v.iter_mut().rev() {
                *slot = (rest % side) as i64 - bound;
                rest /= side;
            }
            v
        })
        .filter(|v| v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1)
        .collect()
}

/// Fraction-free determinant of small integer columns.
pub(crate) fn det_small(columns: &[&[i64]]) -> i128 {
    let n = columns.len();
    let mut a: Vec<Vec<i128>> = (0..n).map(|r| columns.iter().map(|c| c[r] as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n.saturating_sub(1) {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

/// Greedy order: repeatedly take the unassigned facet lying on the most cells
/// that already meet an assigned facet; ties go to the lowest index.
fn greedy_order(cells: &[Vec<usize>], num_labels: usize, assigned: &[bool]) -> Vec<usize> {
    let mut assigned = assigned.to_vec();
    let mut order = Vec::new();
    while let Some(next) = (0..num_labels).filter(|&f| !assigned[f]).max_by_key(|&f| {
        let score = cells.iter().filter(|c| c.contains(&f) && c.iter().any(|&g| assigned[g])).count();
        (score, std::cmp::Reverse(f))
    }) {
        assigned[next] = true;
        order.push(next);
    }
    order
}

struct Plan<'a> {
    goal: Goal,
    tuples: &'a [Vec<usize>],
    order: Vec<usize>,
    /// checks[d]: cells completed when `order[d]` is assigned
    checks: Vec<Vec<usize>>,
    candidates: Vec<Vec<i64>>,
    cap: Option<usize>,
    budget: u64,
}

struct Shared {
    nodes: AtomicU64,
    exceeded: AtomicBool,
}

struct Branch {
    solutions: Vec<Vec<Vec<i64>>>,
    capped: bool,
}

impl Plan<'_> {
    fn cell_ok(&self, lambda: &[Vec<i64>], cell: usize) -> bool {
        let cols: Vec<&[i64]> = self.tuples[cell].iter().map(|&f| lambda[f].as_slice()).collect();
        let d = det_small(&cols);
        match self.goal {
            Goal::Unimodular => d == 1 || d == -1,
            Goal::AllPositive => d == 1,
        }
    }

    fn dfs(&self, depth: usize, lambda: &mut Vec<Vec<i64>>, shared: &Shared, out: &mut Branch) {
        if depth == self.order.len() {
            out.solutions.push(lambda.clone());
            if self.cap.is_some_and(|c| out.solutions.len() >= c) {
                out.capped = true;
            }
            return;
        }
        let facet = self.order[depth];
        for cand in &self.candidates {
            if out.capped || shared.exceeded.load(Ordering::Relaxed) {
                return;
            }
            if shared.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                shared.exceeded.store(true, Ordering::Relaxed);
                return;
            }
            lambda[facet].clone_from(cand);
            if self.checks[depth].iter().all(|&c| self.cell_ok(lambda, c)) {
                self.dfs(depth + 1, lambda, shared, out);
            }
        }
    }
}

pub fn search(base: &Base, orientation: &OrientationData, config: &SearchConfig) -> Result<SearchResult> {
    if config.bound < 1 {
        return Err(Error::Validation("entry bound must be at least 1".into()));
    }
    let n = base.rank();
    let m = base.num_labels();
    let cells = base.cells();
    let base_idx = base_cell(base, orientation, &config.base_vertex)?;
    let base_tuple = orientation.tuples[base_idx].clone();

    let mut lambda = vec![vec![0i64; n]; m];
    let mut assigned = vec![false; m];
    for (k, &f) in base_tuple.iter().enumerate() {
        lambda[f][k] = 1;
        assigned[f] = true;
    }

    let order = match &config.facet_order {
        Some(o) => {
            let mut seen = assigned.clone();
            let free: Vec<usize> = o.iter().copied().filter(|&f| f < m && !assigned[f]).collect();
            for &f in &free {
                if seen[f] {
                    return Err(Error::Validation(format!("facet {} repeated in order", f + 1)));
                }
                seen[f] = true;
            }
            if let Some(f) = seen.iter().position(|&s| !s) {
                return Err(Error::Validation(format!("facet order omits facet {}", f + 1)));
            }
            free
        }
        None => greedy_order(cells, m, &assigned),
    };

    let mut depth_of = vec![None; m];
    for (d, &f) in order.iter().enumerate() {
        depth_of[f] = Some(d);
    }
    let mut checks = vec![Vec::new(); order.len()];
    let mut base_checks = Vec::new();
    for (ci, cell) in cells.iter().enumerate() {
        match cell.iter().filter_map(|&f| depth_of[f]).max() {
            Some(d) => checks[d].push(ci),
            None if ci != base_idx => base_checks.push(ci),
            None => {}
        }
    }

    let plan = Plan {
        goal: config.goal,
        tuples: &orientation.tuples,
        order: order.clone(),
        checks,
        candidates: candidate_vectors(n, config.bound),
        cap: config.solution_cap,
        budget: config.node_budget,
    };
    let shared = Shared { nodes: AtomicU64::new(0), exceeded: AtomicBool::new(false) };

    let raw: Vec<Branch> = if !base_checks.iter().all(|&c| plan.cell_ok(&lambda, c)) {
        Vec::new()
    } else if order.is_empty() {
        vec![Branch { solutions: vec![lambda.clone()], capped: false }]
    } else {
        let run = || {
            plan.candidates
                .par_iter()
                .map(|cand| {
                    let mut out = Branch { solutions: Vec::new(), capped: false };
                    if shared.nodes.fetch_add(1, Ordering::Relaxed) >= plan.budget {
                        shared.exceeded.store(true, Ordering::Relaxed);
                        return out;
                    }
                    let mut local = lambda.clone();
                    local[order[0]].clone_from(cand);
                    if plan.checks[0].iter().all(|&c| plan.cell_ok(&local, c)) {
                        plan.dfs(1, &mut local, &shared, &mut out);
                    }
                    out
                })
                .collect()
        };
        match config.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Validation(format!("thread pool: {e}")))?
                .install(run),
            None => run(),
        }
    };

    let mut capped = raw.iter().any(|b| b.capped);
    let mut solutions = Vec::new();
    for b in raw {
        solutions.extend(b.solutions);
    }
    if let Some(cap) = config.solution_cap {
        if solutions.len() > cap {
            solutions.truncate(cap);
            capped = true;
        }
    }
    let budget_exceeded = shared.exceeded.load(Ordering::Relaxed);
    let solutions = solutions
        .into_iter()
        .map(|l| CharacteristicMap::new(n, l.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect()))
        .collect::<Result<Vec<_>>>()?;
    let nodes = shared.nodes.load(Ordering::Relaxed).min(config.node_budget);
    Ok(SearchResult {
        solutions,
        nodes,
        exhaustive: !budget_exceeded && !capped,
        budget_exceeded,
        facet_order: order,
        base_tuple,
    })
}

/// Re-verifies a search solution with the exact determinant kernel.
pub fn verify_solution(
    base: &Base,
    orientation: &OrientationData,
    goal: Goal,
    map: &CharacteristicMap,
) -> Result<bool> {
    let pair = CharacteristicPair::new(base.clone(), map.clone())?;
    for t in &orientation.tuples {
        let d = det_int(&pair.map().minor(t))?;
        let ok = match goal {
            Goal::Unimodular => d == BigInt::from(1) || d == BigInt::from(-1),
            Goal::AllPositive => d == BigInt::from(1),
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
