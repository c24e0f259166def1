//! Trigonometric cyclic 4-polytopes, Gale's evenness condition and polar duals.
//!
//! Points lie on the curve `u -> (cos u, sin u, cos 2u, sin 2u)`. Only angles
//! that are multiples of π/4 are accepted, so every coordinate lies in Q(√2)
//! and all geometry below is exact.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complexes::{dualize, OrientationData, SimplePolytope, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactnum::{
    determinant, nullspace, rank, solve_linear, strict_feasibility, ExactField, LinearEquation, Sign, Sqrt2Number,
};

/// Cosine of `k·π/4`.
pub fn cos_eighth(k: u8) -> Sqrt2Number {
    let half = Sqrt2Number::new(BigRational::zero(), BigRational::new(1.into(), 2.into()));
    match k % 8 {
        0 => Sqrt2Number::one(),
        1 | 7 => half,
        2 | 6 => Sqrt2Number::zero(),
        3 | 5 => -half,
        _ => -Sqrt2Number::one(),
    }
}

/// Sine of `k·π/4`.
pub fn sin_eighth(k: u8) -> Sqrt2Number {
    cos_eighth((k + 6) % 8)
}

/// Converts an angle given as a rational multiple of π into eighth turns.
pub fn eighth_turns(angle_over_pi: &BigRational) -> Result<u8> {
    let scaled = angle_over_pi * BigRational::from_integer(4.into());
    if !scaled.is_integer() {
        return Err(Error::UnsupportedAngle(format!("{angle_over_pi}·pi")));
    }
    let k = scaled.to_integer() % 8;
    let k = if k < 0.into() { k + 8 } else { k };
    Ok(u8::try_from(k).expect("reduced mod 8"))
}

/// Strictly increasing angles `k·π/4` with `0 <= k < 8`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AngleSpec {
    turns: Vec<u8>,
}

impl AngleSpec {
    pub fn new(turns: Vec<u8>) -> Result<Self> {
        if let Some(&k) = turns.iter().find(|&&k| k >= 8) {
            return Err(Error::UnsupportedAngle(format!("{k}·pi/4 lies outside [0, 2pi)")));
        }
        if turns.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation("angles must be strictly increasing".into()));
        }
        Ok(AngleSpec { turns })
    }

    pub fn turns(&self) -> &[u8] {
        &self.turns
    }

    pub fn len(&self) -> usize {
        self.turns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.turns.is_empty()
    }
}

/// `(cos u, sin u, cos 2u, sin 2u)` at `u = k·π/4`.
pub fn caratheodory_point(k: u8) -> Vec<Sqrt2Number> {
    vec![cos_eighth(k), sin_eighth(k), cos_eighth(2 * k % 8), sin_eighth(2 * k % 8)]
}

/// A finite point set in `Q(√2)^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<Sqrt2Number>>,
}

impl PointConfiguration {
    pub fn new(dim: usize, points: Vec<Vec<Sqrt2Number>>) -> Result<Self> {
        if let Some(i) = points.iter().position(|p| p.len() != dim) {
            return Err(Error::Dimension(format!(
                "point {} has {} coordinates, expected {dim}",
                i + 1,
                points[i].len()
            )));
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn from_ints(dim: usize, points: &[&[i64]]) -> Result<Self> {
        PointConfiguration::new(
            dim,
            points.iter().map(|p| p.iter().map(|&x| Sqrt2Number::from_ints(x, 0)).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<Sqrt2Number>] {
        &self.points
    }

    /// Mirror image in the first coordinate hyperplane.
    pub fn reflect_first_axis(&self) -> PointConfiguration {
        PointConfiguration {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q[0] = -q[0].clone();
                    q
                })
                .collect(),
        }
    }
}

/// Points `p(t_1), ..., p(t_n)` on the trigonometric moment curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaratheodoryRealization {
    angles: AngleSpec,
    config: PointConfiguration,
}

impl CaratheodoryRealization {
    pub fn new(angles: AngleSpec) -> Self {
        let points = angles.turns().iter().map(|&k| caratheodory_point(k)).collect();
        CaratheodoryRealization { angles, config: PointConfiguration { dim: 4, points } }
    }

    pub fn angles(&self) -> &AngleSpec {
        &self.angles
    }

    pub fn config(&self) -> &PointConfiguration {
        &self.config
    }
}

/// All `d`-subsets of `{0..n}` satisfying Gale's evenness condition, in
/// lexicographic order.
pub fn gale_facets(n: usize, d: usize) -> Result<Vec<Vec<usize>>> {
    if n <= d {
        return Err(Error::Degenerate(format!("a cyclic {d}-polytope needs at least {} vertices, got {n}", d + 1)));
    }
    Ok((0..n).combinations(d).filter(|subset| satisfies_evenness(subset, n)).collect())
}

fn satisfies_evenness(subset: &[usize], n: usize) -> bool {
    let outside: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
    outside.iter().tuple_combinations().all(|(&i, &j)| subset.iter().filter(|&&y| i < y && y < j).count() % 2 == 0)
}

/// Affine hyperplane `normal · x = offset` through the points in `subset`.
pub fn supporting_hyperplane(config: &PointConfiguration, subset: &[usize]) -> Result<(Vec<Sqrt2Number>, Sqrt2Number)> {
    let d = config.dim;
    if subset.len() != d {
        return Err(Error::Dimension(format!("a hyperplane in dimension {d} needs {d} points, got {}", subset.len())));
    }
    // rows [p_i, -1] · (normal, offset) = 0
    let rows: Vec<Vec<Sqrt2Number>> = subset
        .iter()
        .map(|&i| {
            let mut r = config.points[i].clone();
            r.push(-Sqrt2Number::one());
            r
        })
        .collect();
    let mut basis = nullspace(&rows, d + 1);
    if basis.len() != 1 {
        return Err(Error::Degenerate(format!(
            "points {:?} are affinely dependent",
            subset.iter().map(|i| i + 1).collect::<Vec<_>>()
        )));
    }
    let mut v = basis.pop().unwrap();
    let offset = v.pop().unwrap();
    Ok((v, offset))
}

fn side(normal: &[Sqrt2Number], offset: &Sqrt2Number, p: &[Sqrt2Number]) -> Sign {
    let value = normal.iter().zip(p).fold(Sqrt2Number::zero(), |acc, (a, x)| acc + a * x);
    (value - offset.clone()).sign()
}

/// Whether `candidate` spans a facet: every other point lies strictly on one
/// side of the hyperplane through the candidate points.
pub fn verify_facets_geometric(config: &PointConfiguration, candidate: &[usize]) -> Result<bool> {
    let (normal, offset) = supporting_hyperplane(config, candidate)?;
    let mut seen: Option<Sign> = None;
    for (i, p) in config.points.iter().enumerate() {
        if candidate.contains(&i) {
            continue;
        }
        match side(&normal, &offset, p) {
            Sign::Zero => return Ok(false),
            s => match seen {
                None => seen = Some(s),
                Some(t) if t != s => return Ok(false),
                Some(_) => {}
            },
        }
    }
    Ok(true)
}

/// Facets of the convex hull of a simplicial configuration, found by testing
/// every `dim`-subset. Affinely dependent subsets are skipped; a hyperplane
/// that supports more than `dim` points is reported as non-simplicial.
pub fn geometric_facets(config: &PointConfiguration) -> Result<Vec<Vec<usize>>> {
    let d = config.dim;
    let mut out = Vec::new();
    for subset in (0..config.points.len()).combinations(d) {
        let Ok((normal, offset)) = supporting_hyperplane(config, &subset) else {
            continue;
        };
        let sides: Vec<Sign> = (0..config.points.len())
            .filter(|i| !subset.contains(i))
            .map(|i| side(&normal, &offset, &config.points[i]))
            .collect();
        let pos = sides.contains(&Sign::Positive);
        let neg = sides.contains(&Sign::Negative);
        let on = sides.contains(&Sign::Zero);
        if pos && neg {
            continue;
        }
        if on {
            return Err(Error::Degenerate(format!(
                "hyperplane through points {:?} supports more than {d} points (not simplicial)",
                subset.iter().map(|i| i + 1).collect::<Vec<_>>()
            )));
        }
        out.push(subset);
    }
    Ok(out)
}

/// Whether the origin lies in the interior of the convex hull, decided as
/// strict feasibility of `sum mu_i p_i = 0` with every `mu_i > 0`.
pub fn contains_origin_interior(config: &PointConfiguration) -> Result<bool> {
    let d = config.dim;
    let r = rank(&config.points);
    if r < d {
        return Err(Error::RankDeficient { rank: r, dim: d });
    }
    let n = config.points.len();
    let equations: Vec<LinearEquation<Sqrt2Number>> = (0..d)
        .map(|c| LinearEquation::new(config.points.iter().map(|p| p[c].clone()).collect(), Sqrt2Number::zero()))
        .collect();
    let strict: Vec<usize> = (0..n).collect();
    Ok(strict_feasibility(&equations, n, &strict).is_feasible())
}

/// The polar `{y : <y, x> <= 1 for all x}` of a simplicial configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarPolytope {
    pub combinatorics: SimplePolytope,
    /// One point per vertex of `combinatorics`, in the same order.
    pub vertex_coords: Vec<Vec<Sqrt2Number>>,
    /// Facet `i` is `{y : <facet_functionals[i], y> <= 1}`.
    pub facet_functionals: Vec<Vec<Sqrt2Number>>,
}

pub fn build_polar(config: &PointConfiguration) -> Result<PolarPolytope> {
    if !contains_origin_interior(config)? {
        return Err(Error::Polarity);
    }
    let facets = geometric_facets(config)?;
    let ones = vec![Sqrt2Number::one(); config.dim];
    let vertex_coords = facets
        .iter()
        .map(|s| {
            let a: Vec<Vec<Sqrt2Number>> = s.iter().map(|&i| config.points[i].clone()).collect();
            solve_linear(&a, &ones)
        })
        .collect::<Result<Vec<_>>>()?;
    let boundary = SimplicialComplex::new(config.points.len(), facets)?;
    let combinatorics = dualize(&boundary)?;
    Ok(PolarPolytope { combinatorics, vertex_coords, facet_functionals: config.points.clone() })
}

/// Polar of a cyclic polytope, cross-checked against Gale's evenness condition.
pub fn build_cyclic_polar(r: &CaratheodoryRealization) -> Result<PolarPolytope> {
    let polar = build_polar(r.config())?;
    let gale = gale_facets(r.angles().len(), 4)?;
    if polar.combinatorics.vertices() != gale.as_slice() {
        return Err(Error::RealizationMismatch(format!(
            "{} geometric facets against {} Gale facets",
            polar.combinatorics.vertices().len(),
            gale.len()
        )));
    }
    Ok(polar)
}

/// Boundary complex of the cyclic polytope on `n` vertices in dimension 4.
pub fn cyclic_boundary(n: usize) -> Result<SimplicialComplex> {
    SimplicialComplex::new(n, gale_facets(n, 4)?)
}

/// Determinant of the edge vectors at a vertex, taken in `tuple` order: the
/// k-th vector runs along the edge that leaves facet `tuple[k]`.
pub fn edge_determinant(p: &PolarPolytope, tuple: &[usize]) -> Result<Sqrt2Number> {
    let comb = &p.combinatorics;
    let v = comb.vertex_index(tuple).ok_or_else(|| Error::Incidence(format!("no vertex on facets {tuple:?}")))?;
    let n = comb.dimension();
    let mut columns = Vec::with_capacity(n);
    for &f in tuple {
        let w = comb
            .neighbor(v, f)
            .ok_or_else(|| Error::Incidence(format!("vertex {} has no neighbour off facet {}", v + 1, f + 1)))?;
        let e: Vec<Sqrt2Number> = p.vertex_coords[w].iter().zip(&p.vertex_coords[v]).map(|(a, b)| a - b).collect();
        columns.push(e);
    }
    let matrix: Vec<Vec<Sqrt2Number>> = (0..n).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    determinant(&matrix)
}

/// Positively ordered facet tuple at every vertex: the sorted tuple, with its
/// first two entries transposed when the edge determinant is negative.
pub fn vertex_orientation_tuples(p: &PolarPolytope) -> Result<OrientationData> {
    let tuples = p
        .combinatorics
        .vertices()
        .iter()
        .map(|v| {
            let mut t = v.clone();
            match edge_determinant(p, &t)?.sign() {
                Sign::Positive => {}
                Sign::Negative => t.swap(0, 1),
                Sign::Zero => return Err(Error::Degenerate(format!("edge vectors at vertex {t:?} are dependent"))),
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrientationData::new(tuples))
}
