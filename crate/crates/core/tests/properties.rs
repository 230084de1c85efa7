use lyubeznik_core::fsing::{fedder_is_fpure, is_compatible, sdim, splitting_ideal, splitting_prime};
use lyubeznik_core::homological::{ext_degree_zero_dim, ext_module};
use lyubeznik_core::lyubeznik::{lyubeznik_table, raw_double_ext, standard_checks, CheckStatus, NoStore, TableOptions};
use lyubeznik_core::modules::{graded_piece_dim, syzygies};
use lyubeznik_core::oracle::{strand_double_ext, strand_ext_degree_zero, strand_piece_dim};
use lyubeznik_core::{
    FreeModule, FreeResolution, GradedMatrix, Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, PresentedModule,
    SimplicialComplex,
};
use proptest::prelude::*;

fn ring(p: u64, n: usize) -> PolyRing {
    PolyRing::standard(p, n).unwrap()
}

fn poly_from(r: &PolyRing, terms: &[(u32, Vec<u32>)]) -> Polynomial {
    r.from_terms(terms.iter().map(|(c, e)| (*c, Monomial::from_exponents(e).unwrap())))
}

fn arb_terms(n: usize, max_deg: u32) -> impl Strategy<Value = Vec<(u32, Vec<u32>)>> {
    prop::collection::vec((any::<u32>(), prop::collection::vec(0..=max_deg, n)), 0..5)
}

/// Homogeneous polynomial of degree `d`: random terms with exponents forced
/// to sum to `d` by dumping the remainder on a chosen variable.
fn homogeneous(r: &PolyRing, d: u32, raw: &[(u32, Vec<u32>)]) -> Polynomial {
    let n = r.nvars();
    let terms: Vec<(u32, Monomial)> = raw
        .iter()
        .map(|(c, e)| {
            let mut exps = vec![0u32; n];
            let mut left = d;
            for (k, x) in e.iter().enumerate().take(n - 1) {
                let take = (*x).min(left);
                exps[k] = take;
                left -= take;
            }
            exps[n - 1] += left;
            (*c, Monomial::from_exponents(&exps).unwrap())
        })
        .collect();
    r.from_terms(terms)
}

fn arb_complex(max_v: usize) -> impl Strategy<Value = SimplicialComplex> {
    (3..=max_v).prop_flat_map(|v| {
        prop::collection::vec(prop::collection::btree_set(1..=v, 1..=v.min(4)), 1..7).prop_map(move |fs| {
            let facets: Vec<Vec<usize>> = fs.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::new(v, &facets).unwrap()
        })
    })
}

fn sr_ideal(c: &SimplicialComplex, p: u64) -> Ideal {
    c.stanley_reisner_ideal(&c.ring(p).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(p in prop::sample::select(vec![2u64, 3, 5, 101]), a in arb_terms(3, 3), b in arb_terms(3, 3), c in arb_terms(3, 3)) {
        let r = ring(p, 3);
        let (a, b, c) = (poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a + &a.neg()).is_zero());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn monomial_order_is_multiplicative(a in prop::collection::vec(0u32..4, 4), b in prop::collection::vec(0u32..4, 4), c in prop::collection::vec(0u32..4, 4)) {
        let (a, b, c) = (Monomial::from_exponents(&a).unwrap(), Monomial::from_exponents(&b).unwrap(), Monomial::from_exponents(&c).unwrap());
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let ab = a.cmp_in(&b, order);
            prop_assert_eq!(a.mul(&c).cmp_in(&b.mul(&c), order), ab);
            prop_assert_eq!(b.cmp_in(&a, order), ab.reverse());
            prop_assert!(Monomial::one(4).cmp_in(&a, order) != std::cmp::Ordering::Greater);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_is_repeated_power(p in prop::sample::select(vec![2u64, 3, 5]), e in 1u32..3, a in arb_terms(4, 3), b in arb_terms(4, 3)) {
        let r = ring(p, 4);
        let (a, b) = (poly_from(&r, &a), poly_from(&r, &b));
        let q = p.pow(e);
        prop_assert_eq!(a.frobenius_pow(e).unwrap(), a.pow(q).unwrap());
        prop_assert_eq!((&a + &b).frobenius_pow(e).unwrap(), &a.frobenius_pow(e).unwrap() + &b.frobenius_pow(e).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colon_and_intersection_routes_agree(
        p in prop::sample::select(vec![2u64, 3, 5]),
        raw_i in prop::collection::vec(arb_terms(3, 2), 1..3),
        raw_j in prop::collection::vec(arb_terms(3, 2), 1..3),
    ) {
        let r = ring(p, 3);
        let gens = |raw: &[Vec<(u32, Vec<u32>)>]| -> Vec<Polynomial> {
            raw.iter().map(|t| homogeneous(&r, 2, t)).filter(|f| !f.is_zero()).collect()
        };
        let (gi, gj) = (gens(&raw_i), gens(&raw_j));
        prop_assume!(!gi.is_empty() && !gj.is_empty());
        let i = Ideal::new(&r, gi).unwrap();
        let j = Ideal::new(&r, gj.clone()).unwrap();
        i.groebner_basis().unwrap().verify().unwrap();
        let meet = i.intersect(&j).unwrap();
        prop_assert!(meet.same_as(&i.intersect_by_elimination(&j).unwrap()).unwrap());
        prop_assert!(i.contains_ideal(&meet).unwrap() && j.contains_ideal(&meet).unwrap());
        prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()).unwrap());
        let col = i.colon_element(&gj[0]).unwrap();
        prop_assert!(col.same_as(&i.colon_by_elimination(&gj[0]).unwrap()).unwrap());
        let full = i.colon(&j).unwrap();
        for f in full.generators() {
            for g in &gj {
                prop_assert!(i.contains(&(f * g)).unwrap());
            }
        }
        let fi = i.frobenius_power(1).unwrap();
        let regen = Ideal::new(&r, i.groebner_basis().unwrap().elements().to_vec()).unwrap();
        prop_assert!(fi.same_as(&regen.frobenius_power(1).unwrap()).unwrap());
        prop_assert_eq!(i.krull_dimension().unwrap(), i.initial_ideal().unwrap().krull_dimension().unwrap());
    }

    #[test]
    fn syzygies_are_exact(
        p in prop::sample::select(vec![2u64, 3, 5]),
        target in prop::collection::vec(0i64..2, 1..=3),
        cols in prop::collection::vec((0u32..3, prop::collection::vec(arb_terms(3, 2), 3)), 1..=3),
        weights in prop::collection::vec(arb_terms(3, 1), 3),
    ) {
        let r = ring(p, 3);
        let f = FreeModule::new(&r, target.clone());
        let columns: Vec<_> = cols
            .iter()
            .map(|(d, entries)| {
                let polys: Vec<Polynomial> = target
                    .iter()
                    .zip(entries)
                    .map(|(a, t)| homogeneous(&r, *d + 2 - *a as u32, t))
                    .collect();
                f.element(&polys).unwrap()
            })
            .collect();
        let m = GradedMatrix::from_columns(&f, columns).unwrap();
        prop_assume!(m.ncols() > 0);
        let syz = syzygies(&m, None).unwrap();
        let src = m.source().clone();
        let mut combo = lyubeznik_core::ModuleElement::zero();
        for (s, w) in syz.iter().zip(&weights) {
            prop_assert!(m.apply(s).is_zero());
            let deg = src.degree_of(s).unwrap();
            let c = homogeneous(&r, 1, w);
            prop_assert!(src.is_homogeneous(s) && deg >= 0);
            combo = src.add(&combo, &src.mul_poly(&c, s));
        }
        prop_assert!(m.apply(&combo).is_zero());
        let pm = PresentedModule::new(m);
        for d in 0..4 {
            prop_assert_eq!(graded_piece_dim(&pm, d).unwrap(), strand_piece_dim(&pm, d));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn resolution_choice_does_not_matter(c in arb_complex(4), p in prop::sample::select(vec![2u64, 3])) {
        let i = sr_ideal(&c, p);
        prop_assume!(!i.is_unit().unwrap());
        let m = PresentedModule::quotient_ring(&i).unwrap();
        let (min, raw) = (FreeResolution::minimal(&m).unwrap(), FreeResolution::schreyer(&m).unwrap());
        min.verify().unwrap();
        prop_assert!(min.betti().iter().zip(raw.betti()).all(|(a, b)| *a <= b));
        let n = i.ring().nvars();
        for k in 0..=n {
            let e = ext_degree_zero_dim(&min, k).unwrap();
            prop_assert_eq!(e, ext_degree_zero_dim(&raw, k).unwrap());
            prop_assert_eq!(e, strand_ext_degree_zero(&min, k));
            if (k as i64) < i.height().unwrap() {
                prop_assert_eq!(ext_module(&min, k, None).unwrap().num_generators(), 0);
            }
        }
        let d = i.krull_dimension().unwrap() as usize;
        for j in 0..=d {
            prop_assert_eq!(raw_double_ext(&i, j, d, false).unwrap(), raw_double_ext(&i, j, d, true).unwrap());
        }
    }

    #[test]
    fn stanley_reisner_rings_are_fpure(c in arb_complex(5), p in prop::sample::select(vec![2u64, 3, 5])) {
        let i = sr_ideal(&c, p);
        prop_assert!(fedder_is_fpure(&i).unwrap());
    }

    #[test]
    fn splitting_chain_descends(c in arb_complex(4), p in prop::sample::select(vec![2u64, 3])) {
        let i = sr_ideal(&c, p);
        let m = Ideal::maximal(i.ring());
        let mut prev = m.clone();
        for e in 1..=3 {
            let ie = splitting_ideal(&i, e).unwrap();
            prop_assert!(prev.contains_ideal(&ie).unwrap());
            prop_assert!(ie.contains_ideal(&i).unwrap());
            prev = ie;
        }
        let data = splitting_prime(&i, 3).unwrap();
        prop_assert!(data.certified());
        prop_assert!(is_compatible(&i, &data.candidate, 3).unwrap().holds);
    }

    #[test]
    fn homology_matches_face_counts(c in arb_complex(6), p in prop::sample::select(vec![2u64, 3, 5])) {
        let field = lyubeznik_core::PrimeField::new(p).unwrap();
        let h = c.reduced_cohomology(field);
        let alt: i64 = h.iter().enumerate().map(|(k, v)| if k % 2 == 0 { -(*v as i64) } else { *v as i64 }).sum();
        let faces: i64 = c
            .faces()
            .iter()
            .enumerate()
            .map(|(size, fs)| if size % 2 == 0 { -(fs.len() as i64) } else { fs.len() as i64 })
            .sum();
        prop_assert_eq!(alt, faces);
        prop_assert_eq!(c.connected_components() as u64, 1 + c.hochster_degree_zero(1, field));
    }

    #[test]
    fn local_cohomology_matches_hochster(c in arb_complex(6), p in prop::sample::select(vec![2u64, 3])) {
        // graded local duality: H^i_m(S/I)_0 is dual to Ext^{n-i}(S/I, S)_{-n}
        let i = sr_ideal(&c, p);
        let n = i.ring().nvars();
        let res = FreeResolution::minimal(&PresentedModule::quotient_ring(&i).unwrap()).unwrap();
        for k in 0..=n {
            let ext = ext_module(&res, n - k, None).unwrap();
            let dim = graded_piece_dim(&ext, -(n as i64)).unwrap();
            prop_assert_eq!(dim, c.hochster_degree_zero(k as i64, i.ring().field()), "H^{}", k);
        }
    }

    #[test]
    fn vanishing_theorem_holds(c in arb_complex(5), p in prop::sample::select(vec![2u64, 3, 5])) {
        let i = sr_ideal(&c, p);
        let s = sdim(&i, 4).unwrap();
        prop_assert!(s.certified);
        let opts = TableOptions { strict: true, ..Default::default() };
        let t = lyubeznik_table(&i, &opts, &NoStore).unwrap();
        let report = standard_checks(&t, Some(s));
        prop_assert!(!report.any_failed(), "{:?}", report);
        prop_assert_eq!(report.status("sdim-vanishing"), Some(CheckStatus::Pass));
    }

    #[test]
    fn monomial_tables_ignore_the_characteristic(c in arb_complex(5)) {
        let tables: Vec<_> = [2u64, 3, 5]
            .iter()
            .map(|&p| lyubeznik_table(&sr_ideal(&c, p), &TableOptions::default(), &NoStore).unwrap())
            .collect();
        for t in &tables[1..] {
            prop_assert_eq!(t.nonzero(), tables[0].nonzero());
        }
        let report = standard_checks(&tables[0], None);
        prop_assert_eq!(report.status("highest-nonzero"), Some(CheckStatus::Pass));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strand_oracle_agrees(c in arb_complex(5), p in prop::sample::select(vec![2u64, 3])) {
        let i = sr_ideal(&c, p);
        let d = i.krull_dimension().unwrap() as usize;
        for j in 0..=d {
            for k in 0..=j {
                prop_assert_eq!(raw_double_ext(&i, k, j, false).unwrap(), strand_double_ext(&i, k, j).unwrap(), "({}, {})", k, j);
            }
        }
    }
}
