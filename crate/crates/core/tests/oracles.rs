mod common;

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use common::*;
use qtoric::complexes::{f_vector, h_vector};
use qtoric::cyclic::{
    build_cyclic_polar, contains_origin_interior, geometric_facets, vertex_orientation_tuples, AngleSpec,
    CaratheodoryRealization,
};
use qtoric::exactnum::{strict_feasibility, LinearEquation};
use qtoric::fanchk::{cone_membership, cones_overlap_interior, SimplicialCone};

#[test]
fn geometric_facets_match_float_hull() {
    // every subset of the eight available angles with at least six points
    for mask in 0u32..256 {
        if mask.count_ones() < 6 {
            continue;
        }
        let turns: Vec<u8> = (0..8).filter(|&k| mask >> k & 1 == 1).collect();
        let r = CaratheodoryRealization::new(AngleSpec::new(turns.clone()).unwrap());
        let exact: BTreeSet<Vec<usize>> = geometric_facets(r.config()).unwrap().into_iter().collect();
        assert_eq!(exact, float_hull_facets(&turns), "angles {turns:?}");
        assert_eq!(exact, gale_brute(turns.len(), 4), "angles {turns:?}");
    }
}

#[test]
fn polar_tuples_are_coherent_for_every_angle_subset() {
    let mut checked = 0;
    for mask in 0u32..256 {
        if mask.count_ones() < 6 {
            continue;
        }
        let turns: Vec<u8> = (0..8).filter(|&k| mask >> k & 1 == 1).collect();
        let r = CaratheodoryRealization::new(AngleSpec::new(turns).unwrap());
        if !contains_origin_interior(r.config()).unwrap() {
            assert!(matches!(build_cyclic_polar(&r), Err(qtoric::Error::Polarity)));
            continue;
        }
        let polar = build_cyclic_polar(&r).unwrap();
        let o = vertex_orientation_tuples(&polar).unwrap();
        assert!(qtoric::complexes::incoherent_pairs(polar.combinatorics.vertices(), &o.tuples).is_empty());
        checked += 1;
    }
    assert!(checked >= 8, "{checked} polars built");
}

#[test]
fn h_vector_matches_polynomial() {
    for (name, k) in sphere_fixtures() {
        let f = f_vector(&k);
        let d = k.dimension() + 1;
        assert_eq!(h_vector(&f, d).unwrap(), h_polynomial(&f.0, d), "{name}");
    }
}

fn random_cone(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> Option<(SimplicialCone, Vec<Vec<i64>>)> {
    let cols: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| r.gen_range(-3..=3)).collect()).collect();
    let refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
    SimplicialCone::from_columns(&refs).ok().map(|c| (c, cols))
}

/// Strict overlap claims are checked against sampled interior points: any
/// sample interior to both cones refutes an infeasibility claim, and every
/// feasibility claim must come with a verified witness.
#[test]
fn overlap_agrees_with_sampling() {
    let mut r = rng(7);
    let mut infeasible_claims = 0;
    for _ in 0..300 {
        let n = r.gen_range(2..=3);
        let (Some((a, ca)), Some((b, _))) = (random_cone(&mut r, n), random_cone(&mut r, n)) else { continue };
        match cones_overlap_interior(&a, &b) {
            Some(w) => {
                assert!(cone_membership(&a, &w).unwrap().interior());
                assert!(cone_membership(&b, &w).unwrap().interior());
            }
            None => {
                infeasible_claims += 1;
                for _ in 0..400 {
                    let weights: Vec<i64> = (0..n).map(|_| r.gen_range(1..=25)).collect();
                    let p: Vec<BigRational> = (0..n)
                        .map(|row| {
                            BigRational::from_integer((0..n).map(|k| weights[k] * ca[k][row]).sum::<i64>().into())
                        })
                        .collect();
                    assert!(!cone_membership(&b, &p).unwrap().interior(), "sampled point in both interiors");
                }
            }
        }
    }
    assert!(infeasible_claims > 10);
}

#[test]
fn strict_feasibility_witnesses_hold() {
    let mut r = rng(8);
    for _ in 0..200 {
        let vars = r.gen_range(1..=4);
        let rows = r.gen_range(0..=3);
        let equations: Vec<LinearEquation<BigRational>> = (0..rows)
            .map(|_| {
                LinearEquation::new(
                    (0..vars).map(|_| BigRational::from_integer(r.gen_range(-3i64..=3).into())).collect(),
                    BigRational::from_integer(r.gen_range(-2i64..=2).into()),
                )
            })
            .collect();
        let strict: Vec<usize> = (0..vars).filter(|_| r.gen_bool(0.6)).collect();
        let result = strict_feasibility(&equations, vars, &strict);
        if let Some(x) = result.witness() {
            assert!(equations.iter().all(|e| e.holds_at(x)));
            assert!(strict.iter().all(|&i| x[i] > BigRational::zero()));
        } else {
            // small grid search for a counterexample
            let grid: Vec<BigRational> = (-6..=6).map(|k| BigRational::new(k.into(), 2.into())).collect();
            let mut idx = vec![0usize; vars];
            loop {
                let x: Vec<BigRational> = idx.iter().map(|&i| grid[i].clone()).collect();
                let ok = equations.iter().all(|e| e.holds_at(&x)) && strict.iter().all(|&i| x[i] > BigRational::zero());
                assert!(!ok, "grid point {x:?} is feasible");
                let mut k = 0;
                while k < vars {
                    idx[k] += 1;
                    if idx[k] < grid.len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == vars {
                    break;
                }
            }
        }
    }
}
