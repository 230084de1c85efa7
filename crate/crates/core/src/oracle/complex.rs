//! Simplicial complexes, graphs, and the ideals they define.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

use super::linalg::{rank, SparseVec};

/// A simplicial complex on vertices `1..=vertices`, stored by its facets
/// (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets` (1-based vertex labels);
    /// non-maximal sets are discarded.
    pub fn new(vertices: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            let mut s: Vec<usize> = Vec::with_capacity(f.len());
            for &v in f {
                if v == 0 || v > vertices {
                    return Err(Error::OutOfRange(format!("vertex {v} not in 1..={vertices}")));
                }
                s.push(v - 1);
            }
            s.sort_unstable();
            s.dedup();
            sets.push(s);
        }
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Vec<usize>> = Vec::new();
        for s in sets {
            if !kept.iter().any(|k| s.iter().all(|v| k.contains(v))) {
                kept.push(s);
            }
        }
        kept.sort();
        Ok(SimplicialComplex { vertices, facets: kept })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Facets with 1-based labels.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.iter().map(|v| v + 1).collect()).collect()
    }

    /// Dimension of the largest face; `-1` for the complex `{∅}`.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// All faces (0-based), grouped by size: `faces()[k]` holds the faces
    /// with `k` vertices, each sorted, in lexicographic order.
    pub fn faces(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut by_size: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); top + 1];
        by_size[0].insert(Vec::new());
        for f in &self.facets {
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
                by_size[face.len()].insert(face);
            }
        }
        by_size.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    fn is_face(&self, s: &[usize]) -> bool {
        self.facets.iter().any(|f| s.iter().all(|v| f.contains(v)))
    }

    /// Minimal non-faces, 0-based and sorted.
    pub fn minimal_nonfaces(&self) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for level in self.faces() {
            for face in level {
                for x in 0..self.vertices {
                    if face.contains(&x) {
                        continue;
                    }
                    let mut s = face.clone();
                    s.push(x);
                    s.sort_unstable();
                    if self.is_face(&s) {
                        continue;
                    }
                    let minimal = (0..s.len()).all(|k| {
                        let mut t = s.clone();
                        t.remove(k);
                        self.is_face(&t)
                    });
                    if minimal {
                        out.insert(s);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Ring `F_p[x1..xv]` matching the vertex labels.
    pub fn ring(&self, p: u64) -> Result<PolyRing> {
        PolyRing::standard(p, self.vertices)
    }

    /// The Stanley–Reisner ideal: generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self, ring: &PolyRing) -> Result<Ideal> {
        if ring.nvars() != self.vertices {
            return Err(Error::InvalidRing(format!(
                "{} variables for {} vertices",
                ring.nvars(),
                self.vertices
            )));
        }
        let mons = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| {
                let mut e = vec![0u32; self.vertices];
                for v in s {
                    e[v] = 1;
                }
                Monomial::from_exponents(&e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_monomials(ring, mons))
    }

    /// `dim H̃^k(Δ; F_p)` for `k = -1..=dim Δ`, as a vector indexed by `k + 1`.
    pub fn reduced_cohomology(&self, field: PrimeField) -> Vec<u64> {
        let faces = self.faces();
        let index: Vec<HashMap<&[usize], usize>> = faces
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect())
            .collect();
        // rank of the boundary from faces of size k+1 to faces of size k
        let boundary_rank = |k: usize| -> usize {
            if k + 1 >= faces.len() {
                return 0;
            }
            let rows = faces[k + 1].iter().map(|f| {
                let mut row: SparseVec = (0..f.len())
                    .map(|drop| {
                        let mut t = f.clone();
                        t.remove(drop);
                        let sign = if drop % 2 == 0 { 1 } else { field.neg(1) };
                        (index[k][t.as_slice()], sign)
                    })
                    .collect();
                row.sort_unstable();
                row
            });
            rank(field, rows)
        };
        let ranks: Vec<usize> = (0..faces.len()).map(boundary_rank).collect();
        (0..faces.len())
            .map(|k| {
                let into = if k == 0 { 0 } else { ranks[k - 1] };
                (faces[k].len() - ranks[k] - into) as u64
            })
            .collect()
    }

    /// Connected components of the 1-skeleton among vertices that are faces.
    pub fn connected_components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut used = vec![false; self.vertices];
        for f in &self.facets {
            for &v in f {
                used[v] = true;
            }
            for w in f.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        (0..self.vertices)
            .filter(|&v| used[v] && find(&mut parent, v) == v)
            .count()
    }

    /// `dim_k H^i_m(k[Δ])_0 = dim H̃^{i-1}(Δ; F_p)`.
    pub fn hochster_degree_zero(&self, i: i64, field: PrimeField) -> u64 {
        let h = self.reduced_cohomology(field);
        usize::try_from(i).ok().and_then(|k| h.get(k)).copied().unwrap_or(0)
    }
}

/// A simple graph on vertices `1..=vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges use 1-based labels; loops and repeated edges are rejected.
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::OutOfRange(format!("loop at vertex {a}")));
            }
            if a == 0 || b == 0 || a > vertices || b > vertices {
                return Err(Error::OutOfRange(format!("edge {a} {b} outside 1..={vertices}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::OutOfRange(format!("repeated edge {a} {b}")));
            }
            out.push(e);
        }
        Ok(Graph { vertices, edges: out })
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=a).flat_map(|i| (a + 1..=a + b).map(move |j| (i, j))).collect();
        Graph::new(a + b, &edges).expect("bipartite edges are valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `F_p[x1..xv, y1..yv]`.
    pub fn ring(&self, p: u64) -> Result<PolyRing> {
        let names: Vec<String> = (1..=self.vertices)
            .map(|i| format!("x{i}"))
            .chain((1..=self.vertices).map(|i| format!("y{i}")))
            .collect();
        PolyRing::new(PrimeField::new(p)?, names)
    }

    /// `(x_i y_j - x_j y_i : {i, j} an edge)` in a ring from [`Graph::ring`].
    pub fn binomial_edge_ideal(&self, ring: &PolyRing) -> Result<Ideal> {
        let v = self.vertices;
        if ring.nvars() != 2 * v {
            return Err(Error::InvalidRing(format!(
                "{} variables for {} vertices",
                ring.nvars(),
                v
            )));
        }
        let gens: Vec<Polynomial> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (xi, xj, yi, yj) = (
                    ring.var(i - 1),
                    ring.var(j - 1),
                    ring.var(v + i - 1),
                    ring.var(v + j - 1),
                );
                &(&xi * &yj) - &(&xj * &yi)
            })
            .collect();
        Ideal::new(ring, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn stanley_reisner_examples() {
        let two_edges = SimplicialComplex::new(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let r = two_edges.ring(5).unwrap();
        let i = two_edges.stanley_reisner_ideal(&r).unwrap();
        let expect: Vec<Polynomial> = ["x1*x3", "x1*x4", "x2*x3", "x2*x4"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        assert!(i.same_as(&Ideal::new(&r, expect).unwrap()).unwrap());

        let simplex = SimplicialComplex::new(3, &[vec![1, 2, 3]]).unwrap();
        assert!(simplex
            .stanley_reisner_ideal(&simplex.ring(5).unwrap())
            .unwrap()
            .is_zero());

        let hollow = SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        let r = hollow.ring(5).unwrap();
        let i = hollow.stanley_reisner_ideal(&r).unwrap();
        assert_eq!(i.generators(), &[parse_polynomial(&r, "x1*x2*x3").unwrap()]);
    }

    #[test]
    fn reduced_cohomology_examples() {
        let points = SimplicialComplex::new(2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(points.reduced_cohomology(f2()), vec![0, 1]);
        let hollow = SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(hollow.reduced_cohomology(f2()), vec![0, 0, 1]);
        let simplex = SimplicialComplex::new(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(simplex.reduced_cohomology(f2()), vec![0, 0, 0, 0]);
    }

    #[test]
    fn projective_plane_sees_the_characteristic() {
        let rp2 = super::super::fixtures::projective_plane();
        assert_eq!(rp2.reduced_cohomology(f2()), vec![0, 0, 1, 1]);
        assert_eq!(rp2.reduced_cohomology(PrimeField::new(3).unwrap()), vec![0, 0, 0, 0]);
    }

    #[test]
    fn components() {
        let two_edges = SimplicialComplex::new(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(two_edges.connected_components(), 2);
        let hollow = SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(hollow.connected_components(), 1);
        let isolated = SimplicialComplex::new(3, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(isolated.connected_components(), 3);
    }

    #[test]
    fn hochster_examples() {
        let two_edges = SimplicialComplex::new(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(two_edges.hochster_degree_zero(1, f2()), 1);
        let hollow = SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(hollow.hochster_degree_zero(2, f2()), 1);
        let simplex = SimplicialComplex::new(3, &[vec![1, 2, 3]]).unwrap();
        assert!((1..5).all(|i| simplex.hochster_degree_zero(i, f2()) == 0));
    }

    #[test]
    fn binomial_edge_ideals() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        let r = g.ring(5).unwrap();
        let i = g.binomial_edge_ideal(&r).unwrap();
        assert_eq!(i.generators(), &[parse_polynomial(&r, "x1*y2 - x2*y1").unwrap()]);
        let c5 = Graph::cycle(5);
        let r = c5.ring(3).unwrap();
        assert_eq!(
            (c5.binomial_edge_ideal(&r).unwrap().generators().len(), r.nvars()),
            (5, 10)
        );
        let k35 = Graph::complete_bipartite(3, 5);
        let r = k35.ring(101).unwrap();
        assert_eq!(
            (k35.binomial_edge_ideal(&r).unwrap().generators().len(), r.nvars()),
            (15, 16)
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(3, &[(1, 1)]).is_err());
        assert!(Graph::new(3, &[(1, 2), (2, 1)]).is_err());
        assert!(SimplicialComplex::new(2, &[vec![3]]).is_err());
    }
}
