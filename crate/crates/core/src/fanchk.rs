//! Simplicial cones spanned by characteristic vectors and fan properness.
//!
//! Two full-dimensional cones of a fan never share interior points. The
//! overlap test asks for `A x = B y` with `x, y > 0`, an exact strict
//! feasibility problem. Completeness is not certified; see
//! [`sample_coverage`] for a labelled heuristic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::charmap::CharacteristicPair;
use crate::error::{Error, Result};
use crate::exactnum::{det_int, solve_linear, strict_feasibility, IntMatrix, LinearEquation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    generators: IntMatrix,
}

impl SimplicialCone {
    /// Cone over the columns of `generators`, which must be invertible.
    pub fn new(generators: IntMatrix) -> Result<Self> {
        if !generators.is_square() || det_int(&generators)?.is_zero() {
            return Err(Error::Degenerate("cone generators are linearly dependent".into()));
        }
        Ok(SimplicialCone { generators })
    }

    pub fn from_columns(columns: &[&[i64]]) -> Result<Self> {
        let big: Vec<Vec<BigInt>> = columns.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let refs: Vec<&[BigInt]> = big.iter().map(|c| c.as_slice()).collect();
        SimplicialCone::new(IntMatrix::from_columns(&refs)?)
    }

    pub fn dim(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn generator(&self, k: usize) -> Vec<BigInt> {
        self.generators.column(k)
    }

    pub fn is_smooth(&self) -> bool {
        det_int(&self.generators).map(|d| d.abs().is_one()).unwrap_or(false)
    }

    pub fn transformed(&self, m: &IntMatrix) -> Result<SimplicialCone> {
        SimplicialCone::new(m.mul(&self.generators)?)
    }

    fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        let n = self.dim();
        (0..n).map(|r| (0..n).map(|c| BigRational::from_integer(self.generators.get(r, c).clone())).collect()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    /// `x` with `G x = p`.
    pub coefficients: Vec<BigRational>,
}

impl Membership {
    pub fn inside(&self) -> bool {
        self.coefficients.iter().all(|c| !c.is_negative())
    }

    pub fn interior(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_positive())
    }
}

pub fn cone_membership(cone: &SimplicialCone, p: &[BigRational]) -> Result<Membership> {
    let coefficients = solve_linear(&cone.rational_rows(), p)?;
    Ok(Membership { coefficients })
}

/// A ray interior to both cones, if their interiors meet.
pub fn cones_overlap_interior(a: &SimplicialCone, b: &SimplicialCone) -> Option<Vec<BigRational>> {
    let n = a.dim();
    assert_eq!(n, b.dim(), "cones live in the same space");
    // a x - b y = 0
    let equations: Vec<LinearEquation<BigRational>> = (0..n)
        .map(|r| {
            let coeffs = (0..n)
                .map(|c| BigRational::from_integer(a.generators.get(r, c).clone()))
                .chain((0..n).map(|c| BigRational::from_integer(-b.generators.get(r, c))))
                .collect();
            LinearEquation::new(coeffs, BigRational::zero())
        })
        .collect();
    let strict: Vec<usize> = (0..2 * n).collect();
    let result = strict_feasibility(&equations, 2 * n, &strict);
    let x = &result.witness()?[..n];
    Some(
        (0..n)
            .map(|r| {
                (0..n).fold(BigRational::zero(), |acc, c| {
                    acc + BigRational::from_integer(a.generators.get(r, c).clone()) * &x[c]
                })
            })
            .collect(),
    )
}

/// A cone tagged with the labels (facet or sphere-vertex indices) of its
/// generators, in column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledCone {
    pub labels: Vec<usize>,
    pub cone: SimplicialCone,
}

/// One cone per cell of the pair, generated by the cell's vectors.
pub fn cones_from_pair(pair: &CharacteristicPair) -> Result<Vec<LabeledCone>> {
    pair.cells()
        .iter()
        .map(|cell| Ok(LabeledCone { labels: cell.clone(), cone: SimplicialCone::new(pair.map().minor(cell))? }))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub first: usize,
    pub second: usize,
    /// Number of generator labels the two cones share.
    pub shared_labels: usize,
    pub witness: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanReport {
    pub pairs_checked: usize,
    pub overlaps: Vec<Overlap>,
    /// Ridge-adjacent pairs whose shared labels carry different generators.
    pub ridge_mismatches: Vec<(usize, usize)>,
    pub non_smooth: Vec<usize>,
}

impl FanReport {
    pub fn proper(&self) -> bool {
        self.overlaps.is_empty() && self.ridge_mismatches.is_empty()
    }
}

/// Pairwise properness test over all cone pairs, in pair-index order.
pub fn fan_properness(cones: &[LabeledCone]) -> FanReport {
    let pairs: Vec<(usize, usize)> = (0..cones.len()).flat_map(|i| (i + 1..cones.len()).map(move |j| (i, j))).collect();
    let results: Vec<(Option<Overlap>, bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&cones[i], &cones[j]);
            let shared: Vec<usize> = a.labels.iter().copied().filter(|l| b.labels.contains(l)).collect();
            let mismatch = shared.len() + 1 == a.labels.len()
                && shared.iter().any(|l| {
                    let ka = a.labels.iter().position(|x| x == l).unwrap();
                    let kb = b.labels.iter().position(|x| x == l).unwrap();
                    a.cone.generator(ka) != b.cone.generator(kb)
                });
            let overlap = cones_overlap_interior(&a.cone, &b.cone).map(|witness| Overlap {
                first: i,
                second: j,
                shared_labels: shared.len(),
                witness,
            });
            (overlap, mismatch)
        })
        .collect();
    let mut report = FanReport {
        pairs_checked: pairs.len(),
        overlaps: Vec::new(),
        ridge_mismatches: Vec::new(),
        non_smooth: cones.iter().enumerate().filter(|(_, c)| !c.cone.is_smooth()).map(|(i, _)| i).collect(),
    };
    for (&(i, j), (overlap, mismatch)) in pairs.iter().zip(results) {
        if let Some(o) = overlap {
            report.overlaps.push(o);
        }
        if mismatch {
            report.ridge_mismatches.push((i, j));
        }
    }
    report
}

/// Heuristic only: for a deterministic grid of integer directions, counts how
/// many cones contain each one in their interior. A complete proper fan
/// covers every generic direction exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageSample {
    pub directions: usize,
    pub uncovered: usize,
    pub multiply_covered: usize,
    /// Directions on some cone boundary, skipped.
    pub boundary: usize,
}

pub fn sample_coverage(cones: &[LabeledCone], radius: i64) -> Result<CoverageSample> {
    let n = cones.first().map_or(0, |c| c.cone.dim());
    let mut sample = CoverageSample { directions: 0, uncovered: 0, multiply_covered: 0, boundary: 0 };
    let side = 2 * radius + 1;
    let total = (side as u64).pow(n as u32);
    for code in 0..total {
        let mut rest = code;
        let dir: Vec<BigRational> = (0..n)
            .map(|_| {
                let v = (rest % side as u64) as i64 - radius;
                rest /= side as u64;
                BigRational::from_integer(v.into())
            })
            .collect();
        if dir.iter().all(|x| x.is_zero()) {
            continue;
        }
        sample.directions += 1;
        let mut interior = 0;
        let mut on_boundary = false;
        for c in cones {
            let m = cone_membership(&c.cone, &dir)?;
            if m.interior() {
                interior += 1;
            } else if m.inside() {
                on_boundary = true;
            }
        }
        if on_boundary {
            sample.boundary += 1;
        } else if interior == 0 {
            sample.uncovered += 1;
        } else if interior > 1 {
            sample.multiply_covered += 1;
        }
    }
    Ok(sample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn v(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn membership_examples() {
        let c = SimplicialCone::from_columns(&[&[1, 0], &[0, 1]]).unwrap();
        let m = cone_membership(&c, &v(&[1, 1])).unwrap();
        assert_eq!(m.coefficients, v(&[1, 1]));
        assert!(m.interior());
        assert!(!cone_membership(&c, &v(&[-1, 0])).unwrap().inside());
        assert!(SimplicialCone::from_columns(&[&[1, 2], &[2, 4]]).is_err());
    }

    #[test]
    fn overlap_examples() {
        let a = SimplicialCone::from_columns(&[&[1, 0], &[0, 1]]).unwrap();
        let b = SimplicialCone::from_columns(&[&[0, 1], &[-1, 0]]).unwrap();
        assert!(cones_overlap_interior(&a, &b).is_none());
        assert!(cones_overlap_interior(&b, &a).is_none());

        let c = SimplicialCone::from_columns(&[&[2, 1], &[1, 2]]).unwrap();
        let w = cones_overlap_interior(&a, &c).unwrap();
        assert!(cone_membership(&a, &w).unwrap().interior());
        assert!(cone_membership(&c, &w).unwrap().interior());
        assert!(cones_overlap_interior(&c, &a).is_some());
    }

    #[test]
    fn projective_plane_fan_is_proper() {
        let rays: [&[i64]; 3] = [&[1, 0], &[0, 1], &[-1, -1]];
        let cones: Vec<LabeledCone> = (0..3)
            .map(|i| LabeledCone {
                labels: vec![i, (i + 1) % 3],
                cone: SimplicialCone::from_columns(&[rays[i], rays[(i + 1) % 3]]).unwrap(),
            })
            .collect();
        let r = fan_properness(&cones);
        assert!(r.proper());
        assert_eq!(r.pairs_checked, 3);
        assert!(r.non_smooth.is_empty());
        let s = sample_coverage(&cones, 2).unwrap();
        assert_eq!((s.uncovered, s.multiply_covered), (0, 0));
    }
}
