//! Ideals shared by the benchmarks.

use lyubeznik_core::oracle::fixtures;
use lyubeznik_core::{Ideal, PolyRing};

/// Binomial edge ideal of the 5-cycle over `F_p`.
pub fn five_cycle(p: u64) -> Ideal {
    let g = fixtures::five_cycle();
    g.binomial_edge_ideal(&g.ring(p).expect("prime")).expect("valid graph")
}

/// Stanley-Reisner ideal of the seven-vertex torus over `F_p`.
pub fn torus(p: u64) -> Ideal {
    let c = fixtures::torus();
    c.stanley_reisner_ideal(&c.ring(p).expect("prime"))
        .expect("valid complex")
}

/// `(x1, x2) ∩ (x3, x4)` over `F_p`.
pub fn two_planes(p: u64) -> Ideal {
    let c = fixtures::two_disjoint_edges();
    c.stanley_reisner_ideal(&c.ring(p).expect("prime"))
        .expect("valid complex")
}

/// A fresh copy of `ideal` whose ring has no cached Gröbner data.
pub fn fresh(ideal: &Ideal) -> Ideal {
    let ring: PolyRing = ideal.ring().with_fresh_settings();
    ideal.map_to(&ring).expect("same variables")
}
