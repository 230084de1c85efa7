//! Named complexes and graphs used across tests, benchmarks and the CLI.

use super::complex::{Graph, SimplicialComplex};

/// Two disjoint edges: the cone is `(x1,x2) ∩ (x3,x4)`.
pub fn two_disjoint_edges() -> SimplicialComplex {
    SimplicialComplex::new(4, &[vec![1, 2], vec![3, 4]]).expect("valid complex")
}

/// Boundary of a triangle.
pub fn hollow_triangle() -> SimplicialComplex {
    SimplicialComplex::new(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).expect("valid complex")
}

/// The six-vertex real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let facets = [
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
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::new(6, &facets).expect("valid complex")
}

/// The seven-vertex torus.
pub fn torus() -> SimplicialComplex {
    let wrap = |v: usize| v % 7 + 1;
    let facets: Vec<Vec<usize>> = (0..7)
        .flat_map(|i| {
            [
                vec![wrap(i), wrap(i + 1), wrap(i + 3)],
                vec![wrap(i), wrap(i + 2), wrap(i + 3)],
            ]
        })
        .collect();
    SimplicialComplex::new(7, &facets).expect("valid complex")
}

/// A triangle and a disjoint edge.
pub fn triangle_and_edge() -> SimplicialComplex {
    SimplicialComplex::new(5, &[vec![1, 2, 3], vec![4, 5]]).expect("valid complex")
}

pub fn five_cycle() -> Graph {
    Graph::cycle(5)
}

pub fn k35() -> Graph {
    Graph::complete_bipartite(3, 5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn surfaces_have_expected_homology() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(torus().reduced_cohomology(f3), vec![0, 0, 2, 1]);
        assert_eq!(torus().facets().len(), 14);
        assert_eq!(projective_plane().facets().len(), 10);
    }
}
