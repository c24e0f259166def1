//! Pure simplicial complexes, simple polytopes and their orientations.
//!
//! Indices are 0-based here; conversion to the 1-based labels used in
//! reports happens in [`crate::cli`].

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

/// A pure simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Validates purity, index range and distinctness. Each facet is stored
    /// sorted; the facet order is kept as given.
    pub fn new(num_vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::Validation("complex has no facets".into()));
        }
        let size = facets[0].len();
        if size == 0 {
            return Err(Error::Validation("empty facet".into()));
        }
        let mut seen = HashSet::new();
        let mut sorted = Vec::with_capacity(facets.len());
        for (idx, facet) in facets.into_iter().enumerate() {
            if facet.len() != size {
                return Err(Error::Validation(format!(
                    "facet {} has {} vertices, expected {size} (complex must be pure)",
                    idx + 1,
                    facet.len()
                )));
            }
            let mut f = facet;
            f.sort_unstable();
            if f.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Validation(format!("facet {} repeats a vertex", idx + 1)));
            }
            if let Some(&v) = f.iter().find(|&&v| v >= num_vertices) {
                return Err(Error::Validation(format!(
                    "facet {} uses vertex {} but only {num_vertices} vertices exist",
                    idx + 1,
                    v + 1
                )));
            }
            if !seen.insert(f.clone()) {
                return Err(Error::Validation(format!("facet {} is a duplicate", idx + 1)));
            }
            sorted.push(f);
        }
        Ok(SimplicialComplex { num_vertices, facets: sorted })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension of the complex (facet size minus one).
    pub fn dimension(&self) -> usize {
        self.facets[0].len() - 1
    }

    /// Every codimension-one face with the facets containing it.
    pub fn ridges(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (fi, facet) in self.facets.iter().enumerate() {
            for skip in 0..facet.len() {
                let ridge: Vec<usize> = facet.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                map.entry(ridge).or_default().push(fi);
            }
        }
        map
    }

    /// Boundary of the simplex on `n` vertices.
    pub fn simplex_boundary(n: usize) -> Self {
        let facets = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
        SimplicialComplex::new(n, facets).expect("simplex boundary is valid")
    }

    /// Boundary of the `d`-dimensional cross-polytope; vertex `2i` is `+e_i`
    /// and `2i + 1` is `-e_i`.
    pub fn cross_polytope_boundary(d: usize) -> Self {
        let facets = (0..1usize << d).map(|mask| (0..d).map(|i| 2 * i + (mask >> i & 1)).collect()).collect();
        SimplicialComplex::new(2 * d, facets).expect("cross-polytope boundary is valid")
    }
}

/// A simple polytope described combinatorially: every vertex is the
/// intersection of exactly `dimension` facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplePolytope {
    num_facets: usize,
    dimension: usize,
    vertices: Vec<Vec<usize>>,
}

impl SimplePolytope {
    pub fn new(num_facets: usize, dimension: usize, vertices: Vec<Vec<usize>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Validation("polytope has no vertices".into()));
        }
        let mut seen = HashSet::new();
        let mut used = vec![false; num_facets];
        let mut sorted = Vec::with_capacity(vertices.len());
        for (idx, v) in vertices.into_iter().enumerate() {
            let mut v = v;
            v.sort_unstable();
            v.dedup();
            if v.len() != dimension {
                return Err(Error::Validation(format!(
                    "vertex {} lies on {} distinct facets, expected {dimension}",
                    idx + 1,
                    v.len()
                )));
            }
            for &f in &v {
                if f >= num_facets {
                    return Err(Error::Validation(format!(
                        "vertex {} names facet {} but only {num_facets} facets exist",
                        idx + 1,
                        f + 1
                    )));
                }
                used[f] = true;
            }
            if !seen.insert(v.clone()) {
                return Err(Error::Validation(format!("vertex {} is a duplicate", idx + 1)));
            }
            sorted.push(v);
        }
        if let Some(f) = used.iter().position(|&u| !u) {
            return Err(Error::Validation(format!("facet {} contains no vertex", f + 1)));
        }
        Ok(SimplePolytope { num_facets, dimension, vertices: sorted })
    }

    pub fn num_facets(&self) -> usize {
        self.num_facets
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vertices(&self) -> &[Vec<usize>] {
        &self.vertices
    }

    pub fn vertex_index(&self, facets: &[usize]) -> Option<usize> {
        let mut key = facets.to_vec();
        key.sort_unstable();
        self.vertices.iter().position(|v| *v == key)
    }

    /// The vertex joined to `vertex` by the edge that lies on every facet of
    /// `vertex` except `dropped`.
    pub fn neighbor(&self, vertex: usize, dropped: usize) -> Option<usize> {
        let base = &self.vertices[vertex];
        let edge: Vec<usize> = base.iter().copied().filter(|&f| f != dropped).collect();
        if edge.len() == base.len() {
            return None;
        }
        self.vertices
            .iter()
            .enumerate()
            .find(|&(i, v)| i != vertex && edge.iter().all(|f| v.contains(f)))
            .map(|(i, _)| i)
    }

    /// Vertex pairs sharing `dimension - 1` facets, i.e. the edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.dimension;
        let mut out = Vec::new();
        for a in 0..self.vertices.len() {
            for b in a + 1..self.vertices.len() {
                let shared = self.vertices[a].iter().filter(|f| self.vertices[b].contains(f)).count();
                if shared + 1 == n {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Ordered tuples, one per vertex of a simple polytope (facet indices) or per
/// facet of a simplicial sphere (vertex indices), in the same order as the
/// underlying incidence list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientationData {
    pub tuples: Vec<Vec<usize>>,
    /// Set when this is the global reversal of the orientation that was
    /// originally computed or supplied.
    pub reversed: bool,
}

impl OrientationData {
    pub fn new(tuples: Vec<Vec<usize>>) -> Self {
        OrientationData { tuples, reversed: false }
    }

    /// Global reversal: transposes the first two entries of every tuple.
    pub fn reverse(&self) -> OrientationData {
        OrientationData {
            tuples: self
                .tuples
                .iter()
                .map(|t| {
                    let mut t = t.clone();
                    if t.len() >= 2 {
                        t.swap(0, 1);
                    }
                    t
                })
                .collect(),
            reversed: !self.reversed,
        }
    }

    /// Checks each tuple is a permutation of the matching incidence set.
    pub fn validate(&self, incidences: &[Vec<usize>]) -> Result<()> {
        if self.tuples.len() != incidences.len() {
            return Err(Error::Validation(format!(
                "{} orientation tuples for {} cells",
                self.tuples.len(),
                incidences.len()
            )));
        }
        for (i, (t, set)) in self.tuples.iter().zip(incidences).enumerate() {
            let mut sorted = t.clone();
            sorted.sort_unstable();
            if sorted != *set {
                return Err(Error::Validation(format!(
                    "orientation tuple {} is not a permutation of its incidence set",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// Parity of the permutation that sorts `tuple`: `1` for even, `-1` for odd.
pub fn permutation_sign(tuple: &[usize]) -> i8 {
    let mut sign = 1;
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] > tuple[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Orientation that the ordered simplex `tuple` induces on the ridge obtained
/// by dropping `dropped`, relative to the ridge's sorted order.
pub fn induced_ridge_sign(tuple: &[usize], dropped: usize) -> i8 {
    let pos = tuple.iter().position(|&v| v == dropped).expect("dropped vertex belongs to the tuple");
    let rest: Vec<usize> = tuple.iter().copied().filter(|&v| v != dropped).collect();
    let sign = if pos % 2 == 0 { 1 } else { -1 };
    sign * permutation_sign(&rest)
}

/// Pairs of cells whose tuples induce the same orientation on a shared ridge.
/// An empty result means the tuples form a coherent orientation.
pub fn incoherent_pairs(cells: &[Vec<usize>], tuples: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut ridges: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
    for (ci, cell) in cells.iter().enumerate() {
        for &dropped in cell {
            let ridge: Vec<usize> = cell.iter().copied().filter(|&v| v != dropped).collect();
            ridges.entry(ridge).or_default().push((ci, dropped));
        }
    }
    let mut bad = Vec::new();
    for sharing in ridges.values() {
        for (i, &(a, da)) in sharing.iter().enumerate() {
            for &(b, db) in &sharing[i + 1..] {
                if induced_ridge_sign(&tuples[a], da) == induced_ridge_sign(&tuples[b], db) {
                    bad.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    bad.sort_unstable();
    bad
}

/// How a computed orientation relates to a reference list of ordered tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationComparison {
    /// Per reference tuple: agrees with the computed tuple up to an even permutation.
    pub direct: Vec<bool>,
    /// Per reference tuple: agrees after globally reversing the computed orientation.
    pub reversed: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrientationAgreement {
    Direct,
    Reversed,
    /// Neither class matches every tuple.
    Partial,
}

impl OrientationComparison {
    pub fn agreement(&self) -> OrientationAgreement {
        if self.direct.iter().all(|&m| m) {
            OrientationAgreement::Direct
        } else if self.reversed.iter().all(|&m| m) {
            OrientationAgreement::Reversed
        } else {
            OrientationAgreement::Partial
        }
    }

    /// Matches in whichever global class agrees more often.
    pub fn best_count(&self) -> usize {
        let d = self.direct.iter().filter(|&&m| m).count();
        let r = self.reversed.iter().filter(|&&m| m).count();
        d.max(r)
    }
}

fn same_orientation(a: &[usize], b: &[usize]) -> bool {
    let mut sa = a.to_vec();
    let mut sb = b.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    sa == sb && permutation_sign(a) == permutation_sign(b)
}

/// Compares each reference tuple with the computed tuple on the same cell.
/// A reference tuple naming a cell absent from `computed` counts as a mismatch.
pub fn compare_orientations(computed: &OrientationData, reference: &[Vec<usize>]) -> OrientationComparison {
    let reversed = computed.reverse();
    let lookup = |o: &OrientationData, r: &Vec<usize>| o.tuples.iter().any(|t| same_orientation(t, r));
    OrientationComparison {
        direct: reference.iter().map(|r| lookup(computed, r)).collect(),
        reversed: reference.iter().map(|r| lookup(&reversed, r)).collect(),
    }
}

/// Face counts `f_0, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// `f_0 - f_1 + f_2 - ...`
    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }
}

pub fn f_vector(k: &SimplicialComplex) -> FVector {
    let size = k.dimension() + 1;
    let mut faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); size];
    for facet in k.facets() {
        for mask in 1u32..1 << size {
            let face: Vec<usize> = (0..size).filter(|&i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
            faces[face.len() - 1].insert(face);
        }
    }
    FVector(faces.iter().map(|s| s.len() as u64).collect())
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h_k = sum_{i=0..k} (-1)^(k-i) C(d-i, k-i) f_{i-1}` with `f_{-1} = 1`.
pub fn h_vector(f: &FVector, d: usize) -> Result<Vec<i64>> {
    if f.0.len() != d {
        return Err(Error::Validation(format!("f-vector has {} entries, expected {d}", f.0.len())));
    }
    let d = d as i64;
    let f_shift = |i: i64| if i == 0 { 1 } else { f.0[(i - 1) as usize] as i64 };
    Ok((0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f_shift(i)
                })
                .sum()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudomanifoldReport {
    /// Ridges not contained in exactly two facets, with their facet counts.
    pub offending: Vec<(Vec<usize>, usize)>,
}

impl PseudomanifoldReport {
    pub fn passed(&self) -> bool {
        self.offending.is_empty()
    }
}

pub fn pseudomanifold_check(k: &SimplicialComplex) -> PseudomanifoldReport {
    PseudomanifoldReport {
        offending: k.ridges().into_iter().filter(|(_, fs)| fs.len() != 2).map(|(r, fs)| (r, fs.len())).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientability {
    Orientable(OrientationData),
    /// A closed walk of facets (by index) along which orientation propagation
    /// returns to its start with the opposite sign.
    NonOrientable {
        cycle: Vec<usize>,
    },
}

/// Breadth-first propagation of orientation from facet 0, which keeps its
/// listed (sorted) vertex order. Neighbours take their sorted order or its
/// transposition of the first two entries.
pub fn coherent_orientation(k: &SimplicialComplex) -> Result<Orientability> {
    let report = pseudomanifold_check(k);
    if !report.passed() {
        return Err(Error::NotPseudomanifold { ridges: report.offending.into_iter().map(|(r, _)| r).collect() });
    }
    let facets = k.facets();
    let ridges = k.ridges();
    // neighbours[f] = (other facet, vertex dropped from f, vertex dropped from other)
    let mut neighbours: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); facets.len()];
    for (ridge, fs) in &ridges {
        let (a, b) = (fs[0], fs[1]);
        let da = *facets[a].iter().find(|v| !ridge.contains(v)).unwrap();
        let db = *facets[b].iter().find(|v| !ridge.contains(v)).unwrap();
        neighbours[a].push((b, da, db));
        neighbours[b].push((a, db, da));
    }
    for list in &mut neighbours {
        list.sort_unstable();
    }

    let mut tuples: Vec<Option<Vec<usize>>> = vec![None; facets.len()];
    let mut parent: Vec<Option<usize>> = vec![None; facets.len()];
    tuples[0] = Some(facets[0].clone());
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        let ta = tuples[a].clone().unwrap();
        for &(b, da, db) in &neighbours[a] {
            let want = -induced_ridge_sign(&ta, da);
            match &tuples[b] {
                None => {
                    let mut tb = facets[b].clone();
                    if induced_ridge_sign(&tb, db) != want {
                        tb.swap(0, 1);
                    }
                    tuples[b] = Some(tb);
                    parent[b] = Some(a);
                    queue.push_back(b);
                }
                Some(tb) => {
                    if induced_ridge_sign(tb, db) != want {
                        return Ok(Orientability::NonOrientable { cycle: conflict_cycle(&parent, a, b) });
                    }
                }
            }
        }
    }
    if let Some(f) = tuples.iter().position(|t| t.is_none()) {
        return Err(Error::Validation(format!("complex is not connected (facet {} unreachable from facet 1)", f + 1)));
    }
    Ok(Orientability::Orientable(OrientationData::new(tuples.into_iter().map(Option::unwrap).collect())))
}

fn conflict_cycle(parent: &[Option<usize>], a: usize, b: usize) -> Vec<usize> {
    let path = |mut x: usize| {
        let mut p = vec![x];
        while let Some(up) = parent[x] {
            p.push(up);
            x = up;
        }
        p
    };
    let pa = path(a);
    let pb = path(b);
    let common = pa.iter().find(|x| pb.contains(x)).copied().unwrap();
    let mut cycle: Vec<usize> = pa.iter().copied().take_while(|&x| x != common).collect();
    cycle.push(common);
    let down: Vec<usize> = pb.iter().copied().take_while(|&x| x != common).collect();
    cycle.extend(down.into_iter().rev());
    cycle
}

/// Dual simple polytope of a simplicial sphere: facet `i` of the result is
/// vertex `i` of `k`, and each facet of `k` becomes a vertex.
pub fn dualize(k: &SimplicialComplex) -> Result<SimplePolytope> {
    SimplePolytope::new(k.num_vertices(), k.dimension() + 1, k.facets().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp2_6() -> SimplicialComplex {
        let tri = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [3, 4, 6],
            [2, 4, 5],
            [3, 5, 6],
            [2, 4, 6],
        ];
        SimplicialComplex::new(6, tri.iter().map(|t| t.iter().map(|v| v - 1).collect()).collect()).unwrap()
    }

    #[test]
    fn simplex_boundary_counts() {
        let k = SimplicialComplex::simplex_boundary(5);
        let f = f_vector(&k);
        assert_eq!(f.0, vec![5, 10, 10, 5]);
        assert_eq!(h_vector(&f, 4).unwrap(), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn cross_polytope_counts() {
        let k = SimplicialComplex::cross_polytope_boundary(4);
        let f = f_vector(&k);
        assert_eq!(f.0, vec![8, 24, 32, 16]);
        assert_eq!(h_vector(&f, 4).unwrap(), vec![1, 4, 6, 4, 1]);
        assert_eq!(f.euler_characteristic(), 0);
    }

    #[test]
    fn h_vector_length_mismatch() {
        assert!(h_vector(&FVector(vec![5, 10, 10]), 4).is_err());
    }

    #[test]
    fn rejects_impure_and_duplicates() {
        assert!(SimplicialComplex::new(4, vec![vec![0, 1, 2], vec![1, 2]]).is_err());
        assert!(SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(SimplicialComplex::new(2, vec![vec![0, 5]]).is_err());
        assert!(SimplicialComplex::new(2, vec![]).is_err());
    }

    #[test]
    fn single_simplex_is_not_pseudomanifold() {
        let k = SimplicialComplex::new(4, vec![vec![0, 1, 2, 3]]).unwrap();
        let r = pseudomanifold_check(&k);
        assert_eq!(r.offending.len(), 4);
        assert!(pseudomanifold_check(&SimplicialComplex::simplex_boundary(4)).passed());
        assert!(matches!(coherent_orientation(&k), Err(Error::NotPseudomanifold { .. })));
    }

    #[test]
    fn tetrahedron_boundary_orients() {
        let k = SimplicialComplex::simplex_boundary(4);
        let Orientability::Orientable(o) = coherent_orientation(&k).unwrap() else {
            panic!("sphere must be orientable");
        };
        assert!(incoherent_pairs(k.facets(), &o.tuples).is_empty());
        assert_eq!(o.tuples[0], k.facets()[0]);
        let rev = o.reverse();
        assert!(rev.reversed);
        assert!(incoherent_pairs(k.facets(), &rev.tuples).is_empty());
    }

    #[test]
    fn projective_plane_is_non_orientable() {
        let k = rp2_6();
        assert!(pseudomanifold_check(&k).passed());
        let f = f_vector(&k);
        assert_eq!(f.euler_characteristic(), 1);
        let Orientability::NonOrientable { cycle } = coherent_orientation(&k).unwrap() else {
            panic!("RP^2 is not orientable");
        };
        // consecutive facets in the certificate share an edge
        for w in cycle.windows(2) {
            let shared = k.facets()[w[0]].iter().filter(|v| k.facets()[w[1]].contains(v)).count();
            assert_eq!(shared, 2);
        }
        let (first, last) = (cycle[0], *cycle.last().unwrap());
        let shared = k.facets()[first].iter().filter(|v| k.facets()[last].contains(v)).count();
        assert_eq!(shared, 2);
    }

    #[test]
    fn dualize_tetrahedron_and_square() {
        let p = dualize(&SimplicialComplex::simplex_boundary(4)).unwrap();
        assert_eq!(p.num_facets(), 4);
        assert_eq!(p.vertices().len(), 4);
        assert!(p.vertices().iter().all(|v| v.len() == 3));

        let square = SimplicialComplex::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]]).unwrap();
        let q = dualize(&square).unwrap();
        assert_eq!((q.num_facets(), q.vertices().len(), q.dimension()), (4, 4, 2));
        assert_eq!(q.edges().len(), 4);
        assert_eq!(q.neighbor(0, 0), Some(1));
    }

    #[test]
    fn simple_polytope_validation() {
        assert!(SimplePolytope::new(3, 2, vec![vec![0, 1], vec![1, 2]]).is_ok());
        assert!(SimplePolytope::new(3, 2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(SimplePolytope::new(4, 2, vec![vec![0, 1], vec![1, 2]]).is_err());
    }

    #[test]
    fn permutation_parity() {
        assert_eq!(permutation_sign(&[0, 1, 2, 3]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2, 6]), -1);
        assert_eq!(permutation_sign(&[3, 0, 1, 2]), -1);
    }
}
