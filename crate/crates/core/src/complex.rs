//! Abstract simplicial complexes stored through their facets.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::transforms::{h_from_f, CountVector, Role};

/// A face: a strictly increasing list of vertex ids. The empty face is allowed.
///
/// Faces order by cardinality first and lexicographically second; this is the
/// order used to number the vertices of a barycentric subdivision.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Face> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedFace { vertex: w[0] });
        }
        Ok(Face(v))
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Face {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn empty() -> Face {
        Face(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Faces obtained by deleting one vertex.
    pub fn boundary(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// All subsets, including the empty face and the face itself.
    pub fn subsets(&self) -> impl Iterator<Item = Face> + '_ {
        self.0.iter().copied().powerset().map(Face)
    }

    pub(crate) fn union_disjoint(&self, other: &Face) -> Face {
        let mut v: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        Face(v)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite abstract simplicial complex, kept as its antichain of facets.
///
/// The complex `{∅}` has the single facet `∅`. The f-vector is computed on
/// first use and cached.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    f_vector: OnceLock<CountVector>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from generating faces. Dominated faces are dropped.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let faces = facets
            .into_iter()
            .map(Face::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_generators(faces))
    }

    /// Same as [`from_facets`](Self::from_facets) for already validated faces.
    pub fn from_generators(mut faces: Vec<Face>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        // Larger faces come last, so only later entries can dominate.
        let mut keep = vec![true; faces.len()];
        for i in 0..faces.len() {
            for j in (i + 1)..faces.len() {
                if faces[j].len() > faces[i].len() && faces[i].is_subset_of(&faces[j]) {
                    keep[i] = false;
                    break;
                }
            }
        }
        let facets: Vec<Face> = faces
            .into_iter()
            .zip(keep)
            .filter_map(|(f, k)| k.then_some(f))
            .collect();
        Self::from_antichain(facets)
    }

    /// Builds a complex from a complete, downward-closed family of faces.
    ///
    /// Closure is checked; the f-vector is read off the family directly.
    pub fn from_faces<I: IntoIterator<Item = Face>>(faces: I) -> Result<Self> {
        let mut all: Vec<Face> = faces.into_iter().collect();
        all.sort_unstable();
        all.dedup();
        if all.is_empty() {
            return Ok(Self::void_free_empty());
        }
        let index: HashSet<&Face> = all.iter().collect();
        let mut maximal: HashSet<&Face> = index.clone();
        for face in &all {
            for sub in face.boundary() {
                match index.get(&sub) {
                    Some(s) => {
                        maximal.remove(s);
                    }
                    None => {
                        return Err(Error::NotClosed {
                            face: face.0.clone(),
                            missing: sub.0,
                        })
                    }
                }
            }
        }
        let top = all.last().map_or(0, Face::len);
        let mut counts = vec![BigInt::zero(); top + 1];
        for face in &all {
            counts[face.len()] += 1;
        }
        let mut facets: Vec<Face> = maximal.into_iter().cloned().collect();
        facets.sort_unstable();
        let complex = Self::from_antichain(facets);
        let _ = complex.f_vector.set(CountVector::new(Role::F, counts));
        Ok(complex)
    }

    pub(crate) fn from_antichain(mut facets: Vec<Face>) -> Self {
        if facets.is_empty() {
            facets.push(Face::empty());
        }
        facets.sort_unstable();
        Self {
            facets,
            f_vector: OnceLock::new(),
        }
    }

    fn void_free_empty() -> Self {
        Self::from_antichain(Vec::new())
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::void_free_empty()
    }

    /// The full simplex on the given vertices.
    pub fn simplex<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        Ok(Self::from_antichain(vec![Face::new(vertices)?]))
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.facets.iter().flat_map(|f| f.0.iter().copied()).collect()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.facets.iter().filter_map(|f| f.0.last().copied()).max()
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().map(Face::len).all_equal()
    }

    pub fn contains_face(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// All faces (the empty face included) in (cardinality, lex) order.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_limited(usize::MAX)
            .expect("unbounded face enumeration cannot hit its limit")
    }

    /// Like [`faces`](Self::faces) but fails once more than `limit` faces are found.
    pub fn faces_limited(&self, limit: usize) -> Result<Vec<Face>> {
        let mut seen: HashSet<Face> = HashSet::new();
        for facet in &self.facets {
            for sub in facet.subsets() {
                seen.insert(sub);
                if seen.len() > limit {
                    return Err(Error::FaceLimitExceeded { limit });
                }
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().collect();
        faces.sort_unstable();
        Ok(faces)
    }

    /// `(f_0, ..., f_d)`: `f_i` counts faces with `i` vertices, so `f_0 = 1`.
    pub fn f_vector(&self) -> CountVector {
        self.f_vector
            .get_or_init(|| {
                let faces = self.faces();
                let top = faces.last().map_or(0, Face::len);
                let mut counts = vec![BigInt::zero(); top + 1];
                for face in &faces {
                    counts[face.len()] += 1;
                }
                CountVector::new(Role::F, counts)
            })
            .clone()
    }

    pub fn h_vector(&self) -> CountVector {
        let f = self.f_vector();
        let d = f.len() - 1;
        h_from_f(&f, d).expect("f-vector length is d + 1 by construction")
    }

    /// `f_1 - f_2 + f_3 - ...`
    pub fn euler_characteristic(&self) -> BigInt {
        self.f_vector()
            .entries()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| if i % 2 == 1 { c.clone() } else { -c })
            .sum()
    }

    /// Applies `map` to every vertex. `map` must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut v: Vec<usize> = f.0.iter().map(|&x| map(x)).collect();
                v.sort_unstable();
                Face(v)
            })
            .collect();
        let out = Self::from_antichain(facets);
        if let Some(f) = self.f_vector.get() {
            let _ = out.f_vector.set(f.clone());
        }
        out
    }

    pub fn shift_vertices(&self, offset: usize) -> Self {
        self.relabel(|v| v + offset)
    }
}

/// Vertex labels of [`barycentric_subdivision`]: entry `k` is the face of the
/// input that became vertex `k`. Nonempty faces in (cardinality, lex) order.
pub fn subdivision_vertices(c: &SimplicialComplex) -> Vec<Face> {
    c.faces().into_iter().filter(|f| !f.is_empty()).collect()
}

/// Order complex of the poset of nonempty faces.
///
/// Vertex `k` of the output is the `k`-th nonempty face of `c` in
/// (cardinality, lex) order (see [`subdivision_vertices`]). Facets are the
/// maximal flags, one per ordering of the vertices of each facet of `c`.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> SimplicialComplex {
    let labels = subdivision_vertices(c);
    let ids: HashMap<&Face, usize> = labels.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut facets = Vec::new();
    for facet in c.facets().iter().filter(|f| !f.is_empty()) {
        for order in facet.vertices().iter().copied().permutations(facet.len()) {
            let mut prefix = Vec::with_capacity(order.len());
            let mut flag = Vec::with_capacity(order.len());
            for v in order {
                prefix.push(v);
                let mut sorted = prefix.clone();
                sorted.sort_unstable();
                flag.push(ids[&Face(sorted)]);
            }
            flag.sort_unstable();
            facets.push(Face(flag));
        }
    }
    SimplicialComplex::from_antichain(facets)
}

/// `{F ∪ G : F ∈ a, G ∈ b}` for vertex-disjoint complexes.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex> {
    let va = a.vertices();
    if let Some(&vertex) = b.vertices().iter().find(|v| va.contains(v)) {
        return Err(Error::NotDisjoint { vertex });
    }
    let facets = a
        .facets()
        .iter()
        .cartesian_product(b.facets())
        .map(|(f, g)| f.union_disjoint(g))
        .collect();
    Ok(SimplicialComplex::from_antichain(facets))
}

fn fresh_vertex(c: &SimplicialComplex) -> usize {
    c.max_vertex().map_or(0, |m| m + 1)
}

/// Cone with a fresh apex numbered one past the largest vertex (0 for `{∅}`).
pub fn cone(c: &SimplicialComplex) -> SimplicialComplex {
    let apex = SimplicialComplex::from_antichain(vec![Face(vec![fresh_vertex(c)])]);
    join(c, &apex).expect("apex is fresh")
}

/// Join with two fresh isolated points.
pub fn suspension(c: &SimplicialComplex) -> SimplicialComplex {
    let v = fresh_vertex(c);
    let sphere = SimplicialComplex::from_antichain(vec![Face(vec![v]), Face(vec![v + 1])]);
    join(c, &sphere).expect("suspension points are fresh")
}

/// A simplicial complex together with a vertex coloring into `1..=colors`.
///
/// Construction does not check properness; use [`ColoredComplex::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredComplex {
    complex: SimplicialComplex,
    coloring: BTreeMap<usize, usize>,
    colors: usize,
}

/// Outcome of checking a coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringReport {
    /// Every face has pairwise distinct colors, all inside `1..=colors`.
    pub proper: bool,
    /// Proper, and the number of colors equals `dim + 1`.
    pub balanced: bool,
    /// A facet and the color it repeats (or the out-of-range color), when improper.
    pub violation: Option<(Face, usize)>,
}

impl ColoredComplex {
    pub fn new(complex: SimplicialComplex, coloring: BTreeMap<usize, usize>, colors: usize) -> Self {
        Self {
            complex,
            coloring,
            colors,
        }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn coloring(&self) -> &BTreeMap<usize, usize> {
        &self.coloring
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn color(&self, v: usize) -> Option<usize> {
        self.coloring.get(&v).copied()
    }

    /// Colors used by a face; errors when a vertex is uncolored.
    pub fn face_colors(&self, face: &Face) -> Result<Vec<usize>> {
        face.vertices()
            .iter()
            .map(|&v| self.color(v).ok_or(Error::IncompleteColoring { vertex: v }))
            .collect()
    }

    pub fn verify(&self) -> Result<ColoringReport> {
        verify_coloring(self)
    }

    pub fn shift_vertices(&self, offset: usize) -> Self {
        Self {
            complex: self.complex.shift_vertices(offset),
            coloring: self.coloring.iter().map(|(&v, &c)| (v + offset, c)).collect(),
            colors: self.colors,
        }
    }

    /// Cone over the whole complex with a fresh apex of color `apex_color`.
    pub fn cone(&self, apex_color: usize) -> Result<ColoredComplex> {
        self.check_apex(&self.complex, apex_color)?;
        let apex = fresh_vertex(&self.complex);
        let complex = cone(&self.complex);
        let mut coloring = self.coloring.clone();
        coloring.insert(apex, apex_color);
        Ok(Self::new(complex, coloring, self.colors.max(apex_color)))
    }

    /// `self ∪ sub^c`: cones over a subcomplex with a fresh apex of color
    /// `apex_color`, which must be absent from every face of `sub`.
    pub fn cone_over(&self, sub: &SimplicialComplex, apex_color: usize) -> Result<ColoredComplex> {
        if let Some(f) = sub.facets().iter().find(|f| !self.complex.contains_face(f)) {
            return Err(Error::HypothesisViolation(format!(
                "{:?} is not a face of the complex being extended",
                f.vertices()
            )));
        }
        self.check_apex(sub, apex_color)?;
        let apex = fresh_vertex(&self.complex);
        let mut generators = self.complex.facets().to_vec();
        generators.extend(sub.facets().iter().map(|f| f.union_disjoint(&Face(vec![apex]))));
        let mut coloring = self.coloring.clone();
        coloring.insert(apex, apex_color);
        Ok(Self::new(
            SimplicialComplex::from_generators(generators),
            coloring,
            self.colors.max(apex_color),
        ))
    }

    fn check_apex(&self, sub: &SimplicialComplex, apex_color: usize) -> Result<()> {
        for facet in sub.facets() {
            if self.face_colors(facet)?.contains(&apex_color) {
                return Err(Error::ColoringViolation {
                    face: facet.vertices().to_vec(),
                    color: apex_color,
                });
            }
        }
        Ok(())
    }
}

/// Checks that every facet (hence every face) has distinctly colored vertices.
pub fn verify_coloring(cc: &ColoredComplex) -> Result<ColoringReport> {
    let mut violation = None;
    for facet in cc.complex.facets() {
        let colors = cc.face_colors(facet)?;
        if violation.is_some() {
            continue;
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > cc.colors) {
            violation = Some((facet.clone(), c));
            continue;
        }
        if let Some(c) = colors.iter().duplicates().next() {
            violation = Some((facet.clone(), *c));
        }
    }
    let proper = violation.is_none();
    Ok(ColoringReport {
        proper,
        balanced: proper && cc.complex.dim() + 1 == cc.colors as isize,
        violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    fn polygon(n: usize, offset: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets((0..n).map(|i| vec![offset + i, offset + (i + 1) % n])).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        suspension(&polygon(4, 0))
    }

    /// Oracle: count all subsets of the vertex set that lie in some facet.
    fn brute_f_vector(c: &SimplicialComplex) -> Vec<i64> {
        let verts: Vec<usize> = c.vertices().into_iter().collect();
        let mut counts = vec![0i64; verts.len() + 1];
        for s in verts.iter().copied().powerset() {
            if c.contains_face(&Face(s.clone())) {
                counts[s.len()] += 1;
            }
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
        }
        counts
    }

    #[test]
    fn from_facets_examples() {
        let tri = sc(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(tri.facets().len(), 3);
        let simplex = sc(&[&[1, 2], &[1, 2, 3]]);
        assert_eq!(simplex.facets(), &[Face(vec![1, 2, 3])]);
        let empty = SimplicialComplex::from_facets(Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(empty.facets(), &[Face::empty()]);
        assert_eq!(empty.f_vector(), CountVector::f([1]));
        assert_eq!(empty.dim(), -1);
        assert_eq!(
            SimplicialComplex::from_facets(vec![vec![1, 2, 1]]).unwrap_err(),
            Error::MalformedFace { vertex: 1 }
        );
    }

    #[test]
    fn f_vector_examples() {
        let tri = sc(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(tri.f_vector(), CountVector::f([1, 3, 3]));
        let oct = octahedron();
        assert_eq!(brute_f_vector(&oct), vec![1, 6, 12, 8]);
        assert_eq!(oct.f_vector(), CountVector::f([1, 6, 12, 8]));
        assert_eq!(oct.h_vector(), CountVector::h([1, 3, 3, 1]));
    }

    #[test]
    fn from_faces_checks_closure() {
        let faces = vec![Face::empty(), Face(vec![1]), Face(vec![1, 2])];
        let err = SimplicialComplex::from_faces(faces).unwrap_err();
        assert_eq!(err, Error::NotClosed { face: vec![1, 2], missing: vec![2] });
        let tri = sc(&[&[1, 2], &[2, 3], &[1, 3]]);
        let rebuilt = SimplicialComplex::from_faces(tri.faces()).unwrap();
        assert_eq!(rebuilt, tri);
        assert_eq!(rebuilt.f_vector(), tri.f_vector());
    }

    #[test]
    fn face_limit_guards_enumeration() {
        let big = SimplicialComplex::simplex(0..12).unwrap();
        assert_eq!(
            big.faces_limited(100).unwrap_err(),
            Error::FaceLimitExceeded { limit: 100 }
        );
        assert_eq!(big.faces_limited(1 << 12).unwrap().len(), 1 << 12);
    }

    #[test]
    fn subdivision_examples() {
        let point = sc(&[&[7]]);
        assert_eq!(barycentric_subdivision(&point).f_vector(), CountVector::f([1, 1]));

        let edge = sc(&[&[1, 2]]);
        let sd = barycentric_subdivision(&edge);
        assert_eq!(sd.f_vector(), CountVector::f([1, 3, 2]));
        // vertices: {1}, {2}, {1,2} -> 0, 1, 2
        assert_eq!(sd.facets(), &[Face(vec![0, 2]), Face(vec![1, 2])]);

        let tri = sc(&[&[1, 2], &[2, 3], &[1, 3]]);
        let sd = barycentric_subdivision(&tri);
        assert_eq!(sd.f_vector(), CountVector::f([1, 6, 6]));
        assert_eq!(sd.h_vector(), CountVector::h([1, 4, 1]));
        assert_eq!(barycentric_subdivision(&SimplicialComplex::empty()), SimplicialComplex::empty());
    }

    #[test]
    fn subdivision_preserves_dimension_and_euler_characteristic() {
        let fixtures = [
            octahedron(),
            sc(&[&[1, 2, 3], &[3, 4], &[5]]),
            SimplicialComplex::simplex(0..4).unwrap(),
            polygon(5, 10),
        ];
        for c in &fixtures {
            let sd = barycentric_subdivision(c);
            assert_eq!(sd.dim(), c.dim());
            assert_eq!(sd.euler_characteristic(), c.euler_characteristic());
        }
    }

    #[test]
    fn join_cone_suspension() {
        let tri = sc(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(join(&tri, &SimplicialComplex::empty()).unwrap(), tri);
        assert_eq!(
            join(&tri, &sc(&[&[3, 4]])).unwrap_err(),
            Error::NotDisjoint { vertex: 3 }
        );
        assert_eq!(cone(&SimplicialComplex::empty()).f_vector(), CountVector::f([1, 1]));

        let hexagon = polygon(6, 0);
        let wheel = cone(&hexagon);
        assert_eq!(wheel.f_vector(), CountVector::f([1, 7, 12, 6]));

        let zero_sphere = sc(&[&[0], &[1]]);
        assert_eq!(suspension(&zero_sphere).f_vector(), CountVector::f([1, 4, 4]));
        assert_eq!(suspension(&zero_sphere).facets().len(), 4);
        assert_eq!(octahedron().f_vector(), CountVector::f([1, 6, 12, 8]));
    }

    #[test]
    fn cone_rule_on_fixtures() {
        let fixtures = [octahedron(), polygon(7, 3), sc(&[&[1, 2, 3], &[3, 4], &[5]])];
        for c in &fixtures {
            let f = c.f_vector();
            let fc = cone(c).f_vector();
            for k in 1..fc.len() {
                assert_eq!(fc.get(k), f.get(k) + f.get(k - 1));
            }
        }
    }

    #[test]
    fn suspension_of_join_of_squares() {
        let d = suspension(&join(&polygon(4, 0), &polygon(4, 4)).unwrap());
        assert_eq!(d.facets().len(), 32);
        let h = d.h_vector();
        assert_eq!(h, CountVector::h([1, 5, 10, 10, 5, 1]));
        assert_eq!(crate::transforms::g_from_h(&h), CountVector::g([1, 4, 5]));
        let gamma = crate::transforms::gamma_from_symmetric(&h.to_polynomial(), 5).unwrap();
        assert_eq!(gamma, CountVector::gamma([1, 0, 0]));
    }

    #[test]
    fn pure_sum_rule() {
        for c in [octahedron(), polygon(9, 0), cone(&polygon(5, 0))] {
            assert!(c.is_pure());
            let f = c.f_vector();
            let total: BigInt = c.h_vector().entries().iter().sum();
            assert_eq!(total, f.get(f.len() - 1));
        }
    }

    #[test]
    fn coloring_checks() {
        let point = ColoredComplex::new(sc(&[&[5]]), BTreeMap::from([(5, 1)]), 1);
        let r = point.verify().unwrap();
        assert!(r.proper && r.balanced);

        let bad = ColoredComplex::new(sc(&[&[1, 2]]), BTreeMap::from([(1, 1), (2, 1)]), 2);
        let r = bad.verify().unwrap();
        assert!(!r.proper && !r.balanced);
        assert_eq!(r.violation, Some((Face(vec![1, 2]), 1)));

        let missing = ColoredComplex::new(sc(&[&[1, 2]]), BTreeMap::from([(1, 1)]), 2);
        assert_eq!(missing.verify().unwrap_err(), Error::IncompleteColoring { vertex: 2 });

        let out_of_range = ColoredComplex::new(sc(&[&[1, 2]]), BTreeMap::from([(1, 1), (2, 3)]), 2);
        assert!(!out_of_range.verify().unwrap().proper);
    }

    #[test]
    fn coloring_preserved_by_coning_over_subcomplex() {
        let hexagon = polygon(6, 0);
        let coloring: BTreeMap<usize, usize> = (0..6).map(|v| (v, v % 2 + 1)).collect();
        let cc = ColoredComplex::new(hexagon, coloring, 2);
        assert!(cc.verify().unwrap().balanced);

        // the sub-path 0-1-2 uses both colors; a single vertex uses one
        let path = sc(&[&[0, 1], &[1, 2]]);
        assert!(matches!(cc.cone_over(&path, 2), Err(Error::ColoringViolation { .. })));
        let sub = sc(&[&[0], &[2], &[4]]); // color set {1}
        let coned = cc.cone_over(&sub, 2).unwrap();
        let report = coned.verify().unwrap();
        assert!(report.proper && report.balanced);
        assert_eq!(coned.complex().f_vector(), CountVector::f([1, 7, 9]));

        let not_sub = sc(&[&[0, 3]]);
        assert!(matches!(cc.cone_over(&not_sub, 2), Err(Error::HypothesisViolation(_))));

        let wheel = cc.cone(3).unwrap();
        assert!(wheel.verify().unwrap().balanced);
        assert!(cc.cone(1).is_err());
    }
}
