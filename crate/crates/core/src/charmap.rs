//! Characteristic maps, vertex signs and the omniorientation flip problem.
//!
//! A [`CharacteristicPair`] couples a base (a simple polytope, or a simplicial
//! sphere whose vertices play the role of facets) with a primitive integer
//! vector per facet. The same determinant machinery serves both bases: a
//! "cell" is a vertex of the polytope or a maximal simplex of the sphere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::complexes::{OrientationData, SimplePolytope, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactnum::{det_int, gf2_solve, Gf2Outcome, Gf2System, IntMatrix};

/// 1-based label of a cell, e.g. `"4567"` or `"2137"`; multi-digit indices are
/// separated by commas.
pub fn cell_label(tuple: &[usize]) -> String {
    if tuple.iter().all(|&i| i < 9) {
        tuple.iter().map(|i| (i + 1).to_string()).collect()
    } else {
        tuple.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
    }
}

/// A primitive integer vector per facet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacteristicMap {
    rank: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl CharacteristicMap {
    pub fn new(rank: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != rank {
                return Err(Error::Dimension(format!(
                    "facet {}: vector has {} entries, expected {rank}",
                    i + 1,
                    v.len()
                )));
            }
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_one() {
                return Err(Error::NonPrimitive { facet: i + 1 });
            }
        }
        Ok(CharacteristicMap { rank, vectors })
    }

    pub fn from_i64(rank: usize, vectors: &[&[i64]]) -> Result<Self> {
        CharacteristicMap::new(rank, vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    /// Matrix whose k-th column is the vector of `facets[k]`.
    pub fn minor(&self, facets: &[usize]) -> IntMatrix {
        let cols: Vec<&[BigInt]> = facets.iter().map(|&f| self.vectors[f].as_slice()).collect();
        IntMatrix::from_columns(&cols).expect("vectors share the same rank")
    }

    /// Applies `m` to every vector. `m` must be unimodular to keep vectors
    /// primitive.
    pub fn transform(&self, m: &IntMatrix) -> Result<CharacteristicMap> {
        let vectors = self.vectors.iter().map(|v| m.mul_vec(v)).collect::<Result<Vec<_>>>()?;
        CharacteristicMap::new(self.rank, vectors)
    }
}

/// The space a characteristic map lives on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Base {
    Polytope(SimplePolytope),
    /// Sphere vertices act as facets and maximal simplices as vertices.
    Sphere(SimplicialComplex),
}

impl Base {
    /// Vertices of the polytope, or maximal simplices of the sphere, as
    /// sorted sets of facet labels.
    pub fn cells(&self) -> &[Vec<usize>] {
        match self {
            Base::Polytope(p) => p.vertices(),
            Base::Sphere(k) => k.facets(),
        }
    }

    pub fn num_labels(&self) -> usize {
        match self {
            Base::Polytope(p) => p.num_facets(),
            Base::Sphere(k) => k.num_vertices(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Base::Polytope(p) => p.dimension(),
            Base::Sphere(k) => k.dimension() + 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPair {
    base: Base,
    map: CharacteristicMap,
}

impl CharacteristicPair {
    pub fn new(base: Base, map: CharacteristicMap) -> Result<Self> {
        if map.len() < base.num_labels() {
            return Err(Error::Coverage(map.len() + 1));
        }
        if map.len() > base.num_labels() {
            return Err(Error::Validation(format!("{} vectors for {} facets", map.len(), base.num_labels())));
        }
        if map.rank() != base.rank() {
            return Err(Error::Dimension(format!(
                "vectors of rank {} on a base of dimension {}",
                map.rank(),
                base.rank()
            )));
        }
        Ok(CharacteristicPair { base, map })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn map(&self) -> &CharacteristicMap {
        &self.map
    }

    pub fn with_map(&self, map: CharacteristicMap) -> Result<Self> {
        CharacteristicPair::new(self.base.clone(), map)
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        self.base.cells()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularityReport {
    /// Determinant of each cell's minor in sorted column order.
    pub determinants: Vec<BigInt>,
    /// Cells whose determinant is not ±1.
    pub offending: Vec<usize>,
}

impl UnimodularityReport {
    pub fn passed(&self) -> bool {
        self.offending.is_empty()
    }
}

pub fn unimodularity_check(pair: &CharacteristicPair) -> UnimodularityReport {
    let determinants: Vec<BigInt> =
        pair.cells().par_iter().map(|cell| det_int(&pair.map.minor(cell)).expect("square minor")).collect();
    let offending = determinants.iter().enumerate().filter(|(_, d)| !d.abs().is_one()).map(|(i, _)| i).collect();
    UnimodularityReport { determinants, offending }
}

/// `det` of the minor with columns in `tuple` order; must be ±1.
pub fn vertex_sign(pair: &CharacteristicPair, tuple: &[usize]) -> Result<i8> {
    let det = det_int(&pair.map.minor(tuple))?;
    if det.is_one() {
        Ok(1)
    } else if (-&det).is_one() {
        Ok(-1)
    } else {
        Err(Error::Unimodularity { vertex: cell_label(tuple), det: det.to_string() })
    }
}

/// Per-cell signs in `{-1, +1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignPattern(pub Vec<i8>);

impl SignPattern {
    pub fn negative_cells(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &s)| s < 0).map(|(i, _)| i).collect()
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(|&s| s > 0)
    }

    /// Pattern after flipping: each cell picks up the product of the flips of
    /// its facets.
    pub fn predicted_after(&self, cells: &[Vec<usize>], flip: &FlipVector) -> SignPattern {
        SignPattern(
            self.0.iter().zip(cells).map(|(&s, cell)| s * cell.iter().map(|&f| flip.0[f]).product::<i8>()).collect(),
        )
    }

    pub fn negated(&self) -> SignPattern {
        SignPattern(self.0.iter().map(|s| -s).collect())
    }
}

pub fn sign_pattern(pair: &CharacteristicPair, orientation: &OrientationData) -> Result<SignPattern> {
    orientation.validate(pair.cells())?;
    let signs: Vec<Result<i8>> = orientation.tuples.par_iter().map(|t| vertex_sign(pair, t)).collect();
    signs.into_iter().collect::<Result<Vec<_>>>().map(SignPattern)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostComplexReport {
    pub pattern: SignPattern,
    /// Cells with sign -1.
    pub offending: Vec<usize>,
}

impl AlmostComplexReport {
    pub fn holds(&self) -> bool {
        self.offending.is_empty()
    }
}

/// The combinatorial almost-complex criterion: every sign is +1.
pub fn almost_complex_check(pair: &CharacteristicPair, orientation: &OrientationData) -> Result<AlmostComplexReport> {
    let pattern = sign_pattern(pair, orientation)?;
    let offending = pattern.negative_cells();
    Ok(AlmostComplexReport { pattern, offending })
}

/// Per-facet signs; `-1` replaces the facet's vector by its negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlipVector(pub Vec<i8>);

impl FlipVector {
    pub fn identity(m: usize) -> Self {
        FlipVector(vec![1; m])
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        FlipVector(bits.iter().map(|&b| if b { -1 } else { 1 }).collect())
    }

    pub fn compose(&self, other: &FlipVector) -> FlipVector {
        FlipVector(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }
}

pub fn apply_flip(pair: &CharacteristicPair, flip: &FlipVector) -> Result<CharacteristicMap> {
    if flip.0.len() != pair.map.len() {
        return Err(Error::Dimension(format!("flip of length {} for {} facets", flip.0.len(), pair.map.len())));
    }
    let vectors = pair
        .map
        .vectors()
        .iter()
        .zip(&flip.0)
        .map(|(v, &x)| if x < 0 { v.iter().map(|e| -e).collect() } else { v.clone() })
        .collect();
    CharacteristicMap::new(pair.map.rank(), vectors)
}

/// One equation per cell: the flips of its facets must sum (mod 2) to 1
/// exactly when its current sign is -1.
pub fn flip_system(pair: &CharacteristicPair, orientation: &OrientationData) -> Result<Gf2System> {
    let pattern = sign_pattern(pair, orientation)?;
    let mut system = Gf2System::new(pair.map.len());
    for (cell, &s) in pair.cells().iter().zip(&pattern.0) {
        system.push(cell.iter().copied(), s < 0);
    }
    Ok(system)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlipSolution {
    /// A flip making every sign +1, and the GF(2) dimension of all such flips.
    Feasible { flip: FlipVector, dimension: usize },
    /// Cells whose equations sum to a contradiction.
    Infeasible { contradictory_cells: Vec<usize> },
}

pub fn solve_flips(pair: &CharacteristicPair, orientation: &OrientationData) -> Result<FlipSolution> {
    let system = flip_system(pair, orientation)?;
    Ok(match gf2_solve(&system) {
        Gf2Outcome::Solvable { solution, dimension } => {
            FlipSolution::Feasible { flip: FlipVector::from_bits(&solution), dimension }
        }
        Gf2Outcome::Infeasible { certificate } => FlipSolution::Infeasible { contradictory_cells: certificate },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplePolytope {
        SimplePolytope::new(4, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap()
    }

    fn square_orientation() -> OrientationData {
        OrientationData::new(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]])
    }

    fn pentagon() -> (CharacteristicPair, OrientationData) {
        let p = SimplePolytope::new(5, 2, (0..5).map(|i| vec![i, (i + 1) % 5]).collect()).unwrap();
        let map = CharacteristicMap::from_i64(2, &[&[0, -1], &[1, 1], &[1, 2], &[-2, -3], &[-1, -2]]).unwrap();
        let o = OrientationData::new((0..5).map(|i| vec![i, (i + 1) % 5]).collect());
        (CharacteristicPair::new(Base::Polytope(p), map).unwrap(), o)
    }

    #[test]
    fn labels() {
        assert_eq!(cell_label(&[1, 0, 2, 6]), "2137");
        assert_eq!(cell_label(&[0, 9]), "1,10");
    }

    #[test]
    fn map_validation() {
        assert!(matches!(CharacteristicMap::from_i64(2, &[&[2, 4]]), Err(Error::NonPrimitive { facet: 1 })));
        assert!(matches!(CharacteristicMap::from_i64(2, &[&[0, 0]]), Err(Error::NonPrimitive { facet: 1 })));
        assert!(matches!(CharacteristicMap::from_i64(2, &[&[1, 0], &[1, 0, 0]]), Err(Error::Dimension(_))));
        let short = CharacteristicMap::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(CharacteristicPair::new(Base::Polytope(square()), short), Err(Error::Coverage(3)));
    }

    #[test]
    fn pentagon_signs_all_positive() {
        let (pair, o) = pentagon();
        assert!(unimodularity_check(&pair).passed());
        assert_eq!(vertex_sign(&pair, &[0, 1]).unwrap(), 1);
        let r = almost_complex_check(&pair, &o).unwrap();
        assert_eq!(r.pattern, SignPattern(vec![1; 5]));
        assert!(r.holds());
        let sys = flip_system(&pair, &o).unwrap();
        assert!(sys.equations.iter().all(|e| !e.rhs));
    }

    #[test]
    fn square_standard_map() {
        let map = CharacteristicMap::from_i64(2, &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]).unwrap();
        let pair = CharacteristicPair::new(Base::Polytope(square()), map).unwrap();
        let o = square_orientation();
        assert!(almost_complex_check(&pair, &o).unwrap().holds());

        let flip = FlipVector(vec![1, 1, -1, 1]);
        let flipped = pair.with_map(apply_flip(&pair, &flip).unwrap()).unwrap();
        let after = sign_pattern(&flipped, &o).unwrap();
        assert_eq!(after, SignPattern(vec![1, -1, -1, 1]));
    }

    #[test]
    fn degenerate_square_fails_unimodularity() {
        let map = CharacteristicMap::from_i64(2, &[&[1, 0], &[1, 0], &[0, 1], &[0, -1]]).unwrap();
        let pair = CharacteristicPair::new(Base::Polytope(square()), map).unwrap();
        let r = unimodularity_check(&pair);
        assert_eq!(r.offending, vec![0, 2]);
        assert_eq!(r.determinants[0], BigInt::zero());
        assert!(matches!(vertex_sign(&pair, &[0, 1]), Err(Error::Unimodularity { .. })));
    }

    #[test]
    fn flip_identity_is_noop() {
        let (pair, o) = pentagon();
        let same = apply_flip(&pair, &FlipVector::identity(5)).unwrap();
        assert_eq!(&same, pair.map());
        let p = sign_pattern(&pair, &o).unwrap();
        assert_eq!(p.predicted_after(pair.cells(), &FlipVector::identity(5)), p);
    }

    #[test]
    fn orientation_must_match_cells() {
        let (pair, _) = pentagon();
        let bad = OrientationData::new(vec![vec![0, 2]; 5]);
        assert!(sign_pattern(&pair, &bad).is_err());
    }
}
