//! Independent oracles and reusable property checks. Nothing here calls the
//! library's own determinant, elimination or LP code when computing an
//! expected value.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qtoric::charmap::{apply_flip, sign_pattern, Base, CharacteristicMap, CharacteristicPair, FlipVector};
use qtoric::charsearch::{search, Goal, SearchConfig};
use qtoric::cli::Inputs;
use qtoric::complexes::{coherent_orientation, f_vector, h_vector, Orientability, OrientationData, SimplicialComplex};
use qtoric::cyclic::{build_cyclic_polar, vertex_orientation_tuples, CaratheodoryRealization};
use qtoric::exactnum::{gf2_solve, Gf2Outcome, Gf2System, IntMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    let mut total = 0i128;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
            .collect();
        let term = m[0][c] as i128 * cofactor_det(&minor);
        total += if c % 2 == 0 { term } else { -term };
    }
    total
}

/// Determinant of the matrix whose columns are `vectors[t]` for `t` in `tuple`.
pub fn column_det(vectors: &[Vec<i64>], tuple: &[usize]) -> i128 {
    let n = tuple.len();
    let rows: Vec<Vec<i64>> = (0..n).map(|r| tuple.iter().map(|&t| vectors[t][r]).collect()).collect();
    cofactor_det(&rows)
}

pub fn small_vectors(map: &CharacteristicMap) -> Vec<Vec<i64>> {
    map.vectors().iter().map(|v| v.iter().map(|x| x.to_i64().expect("small entries")).collect()).collect()
}

/// d-subsets of `0..n` where every pair of omitted indices is separated by an
/// even number of chosen ones, by enumeration of all subsets.
pub fn gale_brute(n: usize, d: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let chosen = |i: usize| mask >> i & 1 == 1;
        let omitted: Vec<usize> = (0..n).filter(|&i| !chosen(i)).collect();
        let ok = omitted
            .iter()
            .enumerate()
            .all(|(a, &i)| omitted[a + 1..].iter().all(|&j| (i + 1..j).filter(|&k| chosen(k)).count() % 2 == 0));
        if ok {
            out.insert((0..n).filter(|&i| chosen(i)).collect());
        }
    }
    out
}

/// Facets of the convex hull of points on the trigonometric curve at angles
/// `k π / 4`, computed in floating point from cofactor normals. Adequate for
/// these well-separated points; used only as a cross-check.
pub fn float_hull_facets(turns: &[u8]) -> BTreeSet<Vec<usize>> {
    let pts: Vec<[f64; 4]> = turns
        .iter()
        .map(|&k| {
            let u = k as f64 * std::f64::consts::FRAC_PI_4;
            [u.cos(), u.sin(), (2.0 * u).cos(), (2.0 * u).sin()]
        })
        .collect();
    let det3 = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let mut out = BTreeSet::new();
    let n = pts.len();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != 4 {
            continue;
        }
        let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let base = pts[s[0]];
        let diffs: Vec<[f64; 4]> = s[1..].iter().map(|&i| std::array::from_fn(|c| pts[i][c] - base[c])).collect();
        // normal by generalized cross product
        let normal: Vec<f64> = (0..4)
            .map(|c| {
                let cols: Vec<usize> = (0..4).filter(|&x| x != c).collect();
                let m: [[f64; 3]; 3] = std::array::from_fn(|r| std::array::from_fn(|k| diffs[r][cols[k]]));
                if c % 2 == 0 {
                    det3(m)
                } else {
                    -det3(m)
                }
            })
            .collect();
        let side = |p: &[f64; 4]| (0..4).map(|c| normal[c] * (p[c] - base[c])).sum::<f64>();
        let others: Vec<f64> = (0..n).filter(|i| !s.contains(i)).map(|i| side(&pts[i])).collect();
        if others.iter().all(|&x| x > 1e-9) || others.iter().all(|&x| x < -1e-9) {
            out.insert(s);
        }
    }
    out
}

/// `h` from `f` through `sum h_i t^(d-i) = sum f_(i-1) (t-1)^(d-i)`.
pub fn h_polynomial(f: &[u64], d: usize) -> Vec<i64> {
    // coefficients indexed by power of t
    let mut total = vec![0i64; d + 1];
    for i in 0..=d {
        let fi = if i == 0 { 1 } else { f[i - 1] as i64 };
        let mut poly = vec![1i64];
        for _ in 0..d - i {
            let mut next = vec![0i64; poly.len() + 1];
            for (k, &c) in poly.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c;
            }
            poly = next;
        }
        for (k, &c) in poly.iter().enumerate() {
            total[k] += fi * c;
        }
    }
    (0..=d).map(|i| total[d - i]).collect()
}

/// Flip vectors (as bit masks) making every cell's determinant +1.
pub fn enumerate_good_flips(vectors: &[Vec<i64>], tuples: &[Vec<usize>]) -> Vec<u32> {
    let m = vectors.len();
    (0u32..1 << m)
        .filter(|&mask| {
            let flipped: Vec<Vec<i64>> = vectors
                .iter()
                .enumerate()
                .map(|(i, v)| if mask >> i & 1 == 1 { v.iter().map(|x| -x).collect() } else { v.clone() })
                .collect();
            tuples.iter().all(|t| column_det(&flipped, t) == 1)
        })
        .collect()
}

/// Every primitive nonzero vector in `[-b, b]^n`.
pub fn primitive_box(n: usize, b: i64) -> Vec<Vec<i64>> {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let side = 2 * b + 1;
    (0..side.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let x = code % side - b;
                    code /= side;
                    x
                })
                .collect::<Vec<i64>>()
        })
        .filter(|v| v.iter().fold(0, |g, &x| gcd(g, x)) == 1)
        .collect()
}

/// All normalized maps meeting `goal` with entries in `[-b, b]`, by plain
/// enumeration with no pruning.
pub fn brute_force_search(
    num_labels: usize,
    rank: usize,
    tuples: &[Vec<usize>],
    base_tuple: &[usize],
    goal: Goal,
    b: i64,
) -> BTreeSet<Vec<Vec<i64>>> {
    let free: Vec<usize> = (0..num_labels).filter(|f| !base_tuple.contains(f)).collect();
    let cands = primitive_box(rank, b);
    let mut out = BTreeSet::new();
    let total = cands.len().pow(free.len() as u32);
    for mut code in 0..total {
        let mut lambda = vec![vec![0i64; rank]; num_labels];
        for (k, &f) in base_tuple.iter().enumerate() {
            lambda[f][k] = 1;
        }
        for &f in &free {
            lambda[f] = cands[code % cands.len()].clone();
            code /= cands.len();
        }
        let ok = tuples.iter().all(|t| {
            let d = column_det(&lambda, t);
            match goal {
                Goal::Unimodular => d.abs() == 1,
                Goal::AllPositive => d == 1,
            }
        });
        if ok {
            out.insert(lambda);
        }
    }
    out
}

/// Equivalence of the GF(2) solver with exhaustive enumeration on random
/// systems with up to `max_vars` variables.
pub fn check_gf2_against_enumeration(seed: u64, trials: usize, max_vars: usize) -> Result<(), String> {
    let mut r = rng(seed);
    for trial in 0..trials {
        let m = r.gen_range(1..=max_vars);
        let rows = r.gen_range(1..=m + 3);
        let mut sys = Gf2System::new(m);
        let mut dense = Vec::new();
        for _ in 0..rows {
            let mask: u32 = r.gen_range(0..1u32 << m);
            let rhs: bool = r.gen();
            sys.push((0..m).filter(|&i| mask >> i & 1 == 1), rhs);
            dense.push((mask, rhs));
        }
        let count = (0u32..1 << m)
            .filter(|&x| dense.iter().all(|&(mask, rhs)| ((mask & x).count_ones() % 2 == 1) == rhs))
            .count();
        match gf2_solve(&sys) {
            Gf2Outcome::Solvable { solution, dimension } => {
                if count == 0 || count != 1 << dimension {
                    return Err(format!("trial {trial}: {count} solutions, solver says dimension {dimension}"));
                }
                let x: u32 = solution.iter().enumerate().map(|(i, &b)| (b as u32) << i).sum();
                if !dense.iter().all(|&(mask, rhs)| ((mask & x).count_ones() % 2 == 1) == rhs) {
                    return Err(format!("trial {trial}: returned solution fails"));
                }
            }
            Gf2Outcome::Infeasible { certificate } => {
                if count != 0 {
                    return Err(format!("trial {trial}: solver infeasible but {count} solutions exist"));
                }
                let (mask, rhs) =
                    certificate.iter().fold((0u32, false), |(m0, r0), &i| (m0 ^ dense[i].0, r0 ^ dense[i].1));
                if mask != 0 || !rhs {
                    return Err(format!("trial {trial}: certificate does not sum to 0 = 1"));
                }
            }
        }
    }
    Ok(())
}

/// Base, orientation and map for every fixture that has a map.
pub fn fixture_pairs() -> Vec<(String, CharacteristicPair, OrientationData)> {
    let mut out = Vec::new();
    for name in qtoric::cli::fixtures::NAMES {
        let inputs = Inputs::load(&format!("fixtures:{name}")).unwrap();
        let Some(map) = inputs.map.clone() else { continue };
        let (base, orientation) = if let Some(angles) = inputs.angles.clone() {
            let polar = build_cyclic_polar(&CaratheodoryRealization::new(angles)).unwrap();
            let o = vertex_orientation_tuples(&polar).unwrap();
            (Base::Polytope(polar.combinatorics), o)
        } else if let Some(p) = inputs.polytope.clone() {
            let supplied = inputs.orientation.clone().unwrap();
            let tuples = p
                .vertices()
                .iter()
                .map(|cell| {
                    supplied
                        .tuples
                        .iter()
                        .find(|t| {
                            let mut s = (*t).clone();
                            s.sort_unstable();
                            s == *cell
                        })
                        .unwrap()
                        .clone()
                })
                .collect();
            (Base::Polytope(p), OrientationData::new(tuples))
        } else {
            let k = inputs.complex.clone().unwrap();
            let Orientability::Orientable(o) = coherent_orientation(&k).unwrap() else {
                panic!("{name} is orientable")
            };
            (Base::Sphere(k), o)
        };
        out.push((name.to_string(), CharacteristicPair::new(base, map).unwrap(), orientation));
    }
    out
}

/// The flip-sign law on every fixture: flipping facet vectors multiplies
/// each cell's sign by the product of its facets' flips.
pub fn check_flip_law(seed: u64, flips_per_fixture: usize) -> Result<(), String> {
    let mut r = rng(seed);
    for (name, pair, o) in fixture_pairs() {
        let before = sign_pattern(&pair, &o).map_err(|e| e.to_string())?;
        for _ in 0..flips_per_fixture {
            let bits: Vec<bool> = (0..pair.map().len()).map(|_| r.gen()).collect();
            let flip = FlipVector::from_bits(&bits);
            let flipped = pair.with_map(apply_flip(&pair, &flip).unwrap()).unwrap();
            let after = sign_pattern(&flipped, &o).map_err(|e| e.to_string())?;
            // independent recomputation of the flipped signs
            let vectors = small_vectors(flipped.map());
            let direct: Vec<i8> = o.tuples.iter().map(|t| column_det(&vectors, t) as i8).collect();
            let predicted: Vec<i8> = before
                .0
                .iter()
                .zip(o.tuples.iter())
                .map(|(&s, t)| s * t.iter().map(|&f| flip.0[f]).product::<i8>())
                .collect();
            if after.0 != predicted || direct != predicted {
                return Err(format!("{name}: flip law fails for {:?}", flip.0));
            }
        }
    }
    Ok(())
}

/// A random determinant +1 integer matrix: product of elementary shears.
pub fn random_sl(r: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..6 {
        let i = r.gen_range(0..n);
        let mut j = r.gen_range(0..n);
        while n > 1 && j == i {
            j = r.gen_range(0..n);
        }
        if i == j {
            continue;
        }
        let c: i64 = if r.gen() { 1 } else { -1 };
        // row_i += c * row_j
        let rj = m[j].clone();
        for (x, y) in m[i].iter_mut().zip(rj) {
            *x += c * y;
        }
    }
    let flat: Vec<i64> = m.into_iter().flatten().collect();
    IntMatrix::from_i64(n, n, &flat).unwrap()
}

/// Sign patterns survive left multiplication by determinant +1 matrices.
pub fn check_transform_invariance(seed: u64, transforms: usize) -> Result<(), String> {
    let mut r = rng(seed);
    for (name, pair, o) in fixture_pairs() {
        let before = sign_pattern(&pair, &o).map_err(|e| e.to_string())?;
        for _ in 0..transforms {
            let m = random_sl(&mut r, pair.map().rank());
            let rows: Vec<Vec<i64>> =
                (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_i64().unwrap()).collect()).collect();
            if cofactor_det(&rows) != 1 {
                return Err("generated transform has determinant != 1".into());
            }
            let moved = pair.with_map(pair.map().transform(&m).unwrap()).unwrap();
            let after = sign_pattern(&moved, &o).map_err(|e| e.to_string())?;
            if after != before {
                return Err(format!("{name}: sign pattern changed under a determinant +1 transform"));
            }
        }
    }
    Ok(())
}

/// Every simplicial sphere used anywhere in the suite.
pub fn sphere_fixtures() -> Vec<(String, SimplicialComplex)> {
    let mut out = Vec::new();
    for name in ["barnette", "cross4", "simplex4"] {
        let inputs = Inputs::load(&format!("fixtures:{name}")).unwrap();
        out.push((name.to_string(), inputs.complex.unwrap()));
    }
    for n in 3..=7 {
        out.push((format!("simplex boundary {n}"), SimplicialComplex::simplex_boundary(n)));
    }
    for d in 2..=5 {
        out.push((format!("cross-polytope {d}"), SimplicialComplex::cross_polytope_boundary(d)));
    }
    for n in 5..=12 {
        out.push((format!("cyclic boundary {n}"), qtoric::cyclic::cyclic_boundary(n).unwrap()));
    }
    out
}

pub fn check_dehn_sommerville() -> Result<(), String> {
    for (name, k) in sphere_fixtures() {
        let f = f_vector(&k);
        let d = k.dimension() + 1;
        let h = h_vector(&f, d).map_err(|e| e.to_string())?;
        if h != h_polynomial(&f.0, d) {
            return Err(format!("{name}: h-vector differs from the polynomial oracle"));
        }
        if !h.iter().eq(h.iter().rev()) {
            return Err(format!("{name}: h = {h:?} is not symmetric"));
        }
        if d % 2 == 0 && f.euler_characteristic() != 0 {
            return Err(format!("{name}: odd-dimensional sphere with nonzero Euler characteristic"));
        }
    }
    Ok(())
}

pub fn small_polygon(name: &str) -> (Base, OrientationData) {
    let inputs = Inputs::load(&format!("fixtures:{name}")).unwrap();
    let p = inputs.polytope.unwrap();
    let o = inputs.orientation.unwrap();
    (Base::Polytope(p), o)
}

/// Pruned search agrees with unpruned enumeration on the triangle and the
/// square at entry bound 1, for both goals.
pub fn check_search_against_brute_force() -> Result<(), String> {
    for name in ["triangle", "square"] {
        let (base, o) = small_polygon(name);
        for goal in [Goal::Unimodular, Goal::AllPositive] {
            let cfg = SearchConfig::new(1, vec![0, 1], goal);
            let result = search(&base, &o, &cfg).map_err(|e| e.to_string())?;
            if !result.exhaustive {
                return Err(format!("{name}: search not exhaustive"));
            }
            let found: BTreeSet<Vec<Vec<i64>>> = result.solutions.iter().map(small_vectors).collect();
            let expected = brute_force_search(base.num_labels(), base.rank(), &o.tuples, &result.base_tuple, goal, 1);
            if found.len() != result.solutions.len() {
                return Err(format!("{name}: duplicate solutions"));
            }
            if found != expected {
                return Err(format!("{name} {goal:?}: search found {}, brute force {}", found.len(), expected.len()));
            }
        }
    }
    Ok(())
}

pub fn bigints(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}
