use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

use super::engine::{self, GbConfig, Reducers};
use super::monideal::{hilbert_numerator, monomial_dimension};
use super::vector::{ModOrder, Term, Vector};
use super::{minimalize_monomials, poly_to_vector, vector_to_poly};

/// A reduced Gröbner basis of an ideal: monic, sorted ascending by leading
/// monomial.
pub struct GroebnerBasis {
    ring: PolyRing,
    elements: Vec<Polynomial>,
    vectors: Vec<Vector>,
    reducers: Reducers,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl GroebnerBasis {
    pub(crate) fn from_vectors(ring: &PolyRing, vectors: Vec<Vector>) -> Self {
        let elements = vectors.iter().map(|v| vector_to_poly(ring, v)).collect();
        let reducers = Reducers::from_basis(&vectors);
        GroebnerBasis {
            ring: ring.clone(),
            elements,
            vectors,
            reducers,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.vectors.iter().map(|v| v[0].mon.clone()).collect()
    }

    fn order(&self) -> ModOrder {
        ModOrder::Pot(self.ring.order())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let v = poly_to_vector(f, 0);
        let r = engine::normal_form(&self.order(), self.ring.field(), &self.vectors, &self.reducers, &v);
        Ok(vector_to_poly(&self.ring, &r))
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn verify(&self) -> Result<()> {
        let twists = [0i64];
        let cfg = GbConfig {
            order: self.order(),
            field: self.ring.field(),
            twists: &twists,
            degree_bound: None,
            settings: self.ring.settings(),
        };
        engine::verify_closure(&self.vectors, &cfg)
    }
}

/// An ideal of a polynomial ring, given by generators, with a lazily
/// computed and cached reduced Gröbner basis.
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Ideal generated by `gens`; zero and duplicate generators are dropped.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    fn with_gb(ring: &PolyRing, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(gb));
        Ideal {
            ring: ring.clone(),
            gens,
            gb: cell,
        }
    }

    /// An ideal whose generators are already a reduced Gröbner basis.
    fn from_reduced_basis(ring: &PolyRing, vectors: Vec<Vector>) -> Ideal {
        let gb = GroebnerBasis::from_vectors(ring, vectors);
        let gens = gb.elements.clone();
        Ideal::with_gb(ring, gens, gb)
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal::from_reduced_basis(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal::from_monomials(ring, vec![Monomial::one(ring.nvars())])
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &PolyRing) -> Ideal {
        let n = ring.nvars();
        Ideal::from_monomials(ring, (0..n).map(|i| Monomial::var(n, i)).collect())
    }

    /// Monomial ideal; its minimal generators are its reduced Gröbner basis.
    pub fn from_monomials(ring: &PolyRing, mons: Vec<Monomial>) -> Ideal {
        let mut mins = minimalize_monomials(mons);
        let order = ModOrder::Pot(ring.order());
        mins.sort_by(|a, b| order.cmp(a, 0, b, 0));
        let vectors = mins
            .into_iter()
            .map(|m| {
                vec![Term {
                    coef: 1,
                    comp: 0,
                    mon: m,
                }]
            })
            .collect();
        Ideal::from_reduced_basis(ring, vectors)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// Generators as monomials, when every generator is a monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        self.gens
            .iter()
            .map(|g| g.leading_monomial().cloned().filter(|_| g.is_monomial()))
            .collect()
    }

    /// The radical, when the ideal is monomial (its reduced Gröbner basis
    /// consists of monomials).
    pub fn monomial_radical(&self) -> Result<Option<Ideal>> {
        let gb = self.groebner_basis()?;
        if !gb.elements().iter().all(|g| g.is_monomial()) {
            return Ok(None);
        }
        let n = self.ring.nvars();
        let mons = gb
            .elements()
            .iter()
            .map(|g| {
                let e: Vec<u32> = g
                    .leading_monomial()
                    .unwrap()
                    .exponents()
                    .iter()
                    .map(|&x| x.min(1))
                    .collect();
                Monomial::from_exponents(&e)
            })
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(mons.iter().all(|m| m.nvars() == n));
        Ok(Some(Ideal::from_monomials(&self.ring, mons)))
    }

    pub fn groebner_basis(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(g) = self.gb.get() {
            return Ok(g.clone());
        }
        let gb = if let Some(mons) = self.monomial_generators() {
            Ideal::from_monomials(&self.ring, mons).groebner_basis()?
        } else {
            let vecs = self.gens.iter().map(|g| poly_to_vector(g, 0)).collect();
            let twists = [0i64];
            let cfg = GbConfig {
                order: ModOrder::Pot(self.ring.order()),
                field: self.ring.field(),
                twists: &twists,
                degree_bound: None,
                settings: self.ring.settings(),
            };
            Arc::new(GroebnerBasis::from_vectors(&self.ring, engine::groebner(vecs, &cfg)?))
        };
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap().clone())
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis()?.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let gb = self.groebner_basis()?;
        for g in &other.gens {
            if !gb.normal_form(g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (membership both ways).
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.is_unit())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.gens.iter().chain(&other.gens).any(|g| g.is_constant()) {
            return Ok(Ideal::unit(&self.ring));
        }
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            return Ok(Ideal::from_monomials(&self.ring, a.into_iter().chain(b).collect()));
        }
        Ideal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            let prods = a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect();
            return Ok(Ideal::from_monomials(&self.ring, prods));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J`, as the zero-first-coordinate part of the module generated by
    /// `(f, f)` for `f` in `I` and `(g, 0)` for `g` in `J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            let lcms = a.iter().flat_map(|x| b.iter().map(move |y| x.lcm(y))).collect();
            return Ok(Ideal::from_monomials(&self.ring, lcms));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let gb_j = other.groebner_basis()?;
        let mut gens: Vec<Vector> = gb_j.vectors.clone();
        for f in &self.gens {
            let mut v = poly_to_vector(f, 0);
            v.extend(poly_to_vector(f, 1));
            gens.push(v);
        }
        self.second_coordinate_part(gens, [0, 0])
    }

    /// Runs the augmented computation in `S^2` and returns the ideal formed by
    /// elements supported in the second coordinate.
    fn second_coordinate_part(&self, gens: Vec<Vector>, twists: [i64; 2]) -> Result<Ideal> {
        let cfg = GbConfig {
            order: ModOrder::Pot(self.ring.order()),
            field: self.ring.field(),
            twists: &twists,
            degree_bound: None,
            settings: self.ring.settings(),
        };
        let gb = engine::groebner(gens, &cfg)?;
        let part: Vec<Vector> = gb
            .into_iter()
            .filter(|v| v[0].comp == 1)
            .map(|v| v.into_iter().map(|t| Term { comp: 0, ..t }).collect::<Vector>())
            .collect();
        Ok(Ideal::from_reduced_basis(&self.ring, part))
    }

    /// `I ∩ J` by eliminating `t` from `tI + (1-t)J` in `S[t]`. Slower than
    /// [`Ideal::intersect`]; kept as an independent route.
    pub fn intersect_by_elimination(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let n = self.ring.nvars();
        let ext = self.ring.elimination_extension(1);
        let t = ext.var(n);
        let one_minus_t = ext.one().try_sub(&t)?;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(f.embed(&ext).try_mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.embed(&ext).try_mul(&one_minus_t)?);
        }
        let gb = Ideal::new(&ext, gens)?.groebner_basis()?;
        let mut out = Vec::new();
        for g in gb.elements() {
            if !g.involves_vars_from(n) {
                let r = g.restrict(&self.ring);
                debug_assert!(r.ring().nvars() == n);
                out.push(r);
            }
        }
        Ideal::new(&self.ring, out)
    }

    /// `I : (g) = {f : fg ∈ I}`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Err(Error::ZeroColon);
        }
        if let (Some(a), true) = (self.monomial_generators(), g.is_monomial()) {
            let m = g.leading_monomial().unwrap();
            let quots = a.iter().map(|x| x.div(&x.gcd(m))).collect();
            return Ok(Ideal::from_monomials(&self.ring, quots));
        }
        let gb = self.groebner_basis()?;
        if gb.normal_form(g)?.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut gens: Vec<Vector> = gb.vectors.clone();
        let mut v = poly_to_vector(g, 0);
        v.extend(poly_to_vector(&self.ring.one(), 1));
        gens.push(v);
        let d = g.degree().unwrap_or(0) as i64;
        self.second_coordinate_part(gens, [0, d])
    }

    /// `I : (g)` as `(I ∩ (g)) / g`, using the elimination intersection.
    pub fn colon_by_elimination(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroColon);
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let inter = self.intersect_by_elimination(&principal)?;
        let mut quots = Vec::new();
        for h in inter.generators() {
            quots.push(
                h.exact_div(g)
                    .ok_or_else(|| Error::Internal("intersection element not divisible".into()))?,
            );
        }
        Ideal::new(&self.ring, quots)
    }

    /// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroColon);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => {
                    if a.is_unit()? {
                        c
                    } else if c.is_unit()? {
                        a
                    } else {
                        a.intersect(&c)?
                    }
                }
            });
        }
        Ok(acc.unwrap())
    }

    /// `I^[p^e]`, generated by `g^(p^e)`. Its reduced Gröbner basis is the
    /// set of `p^e`-th powers of the reduced basis of `I`: the Frobenius
    /// preserves the order, leading terms and standard representations.
    pub fn frobenius_power(&self, e: u32) -> Result<Ideal> {
        if e == 0 {
            return Err(Error::OutOfRange("Frobenius exponent must be positive".into()));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.frobenius_pow(e))
            .collect::<Result<Vec<_>>>()?;
        let gb = self.groebner_basis()?;
        let q = (self.ring.characteristic() as u64).pow(e);
        let vectors = gb
            .vectors
            .iter()
            .map(|v| {
                v.iter()
                    .map(|t| {
                        Ok(Term {
                            coef: t.coef,
                            comp: 0,
                            mon: t.mon.checked_pow(q)?,
                        })
                    })
                    .collect::<Result<Vector>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let fgb = GroebnerBasis::from_vectors(&self.ring, vectors);
        if self.ring.settings().verify() {
            fgb.verify()?;
        }
        Ok(Ideal::with_gb(&self.ring, gens, fgb))
    }

    /// Krull dimension of `S/I`; `-1` for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        let leads = self.groebner_basis()?.leading_monomials();
        Ok(monomial_dimension(self.ring.nvars(), &leads))
    }

    /// Dimension read off the Hilbert series instead: the order of the pole
    /// at `t = 1`. Independent of [`Ideal::krull_dimension`].
    pub fn dimension_from_hilbert_series(&self) -> Result<i64> {
        let leads = self.groebner_basis()?.leading_monomials();
        let mut k = hilbert_numerator(&leads);
        if k.iter().all(|&c| c == 0) {
            return Ok(-1);
        }
        let mut n = self.ring.nvars() as i64;
        // divide by (1 - t) while K(1) = 0
        while k.iter().sum::<i64>() == 0 {
            let mut q = Vec::with_capacity(k.len());
            let mut acc = 0i64;
            for &c in &k[..k.len() - 1] {
                acc += c;
                q.push(acc);
            }
            k = q;
            n -= 1;
        }
        Ok(n)
    }

    /// Codimension `n - dim(S/I)`.
    pub fn height(&self) -> Result<i64> {
        Ok(self.ring.nvars() as i64 - self.krull_dimension()?)
    }

    pub fn initial_ideal(&self) -> Result<Ideal> {
        let leads = self.groebner_basis()?.leading_monomials();
        Ok(Ideal::from_monomials(&self.ring, leads))
    }

    /// Same ideal in another ring with identical variables and field.
    pub fn map_to(&self, ring: &PolyRing) -> Result<Ideal> {
        if ring.names() != self.ring.names() || ring.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        Ideal::new(ring, self.gens.iter().map(|g| g.reorder(ring)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn ring(p: u64, names: &[&str]) -> PolyRing {
        PolyRing::with_names(p, names).unwrap()
    }

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(r, g).unwrap()).collect()).unwrap()
    }

    fn poly(r: &PolyRing, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(5, &["x", "y"]);
        let gb = ideal(&r, &["x", "y"]).groebner_basis().unwrap();
        assert_eq!(gb.len(), 2);
        let i = ideal(&r, &["x^2", "x*y"]);
        let gb = i.groebner_basis().unwrap();
        assert_eq!(gb.len(), 2);
        gb.verify().unwrap();
    }

    #[test]
    fn confluence_on_inhomogeneous_input() {
        let r = ring(7, &["x", "y"]);
        let i = ideal(&r, &["y - x^2", "x*y - 1"]);
        let gb = i.groebner_basis().unwrap();
        gb.verify().unwrap();
        for g in i.generators() {
            assert!(gb.normal_form(g).unwrap().is_zero());
        }
        let back = Ideal::new(&r, gb.elements().to_vec()).unwrap();
        assert!(back.same_as(&i).unwrap());
        // x^3 = 1 in the quotient
        assert!(i.contains(&poly(&r, "x^3 - 1")).unwrap());
    }

    #[test]
    fn normal_forms() {
        let r = ring(5, &["x", "y"]);
        let gb = ideal(&r, &["x"]).groebner_basis().unwrap();
        assert_eq!(gb.normal_form(&poly(&r, "x^2 + y")).unwrap(), poly(&r, "y"));
    }

    #[test]
    fn membership() {
        let r = ring(3, &["x", "y"]);
        assert!(ideal(&r, &["x"]).contains(&poly(&r, "x*y")).unwrap());
        assert!(!ideal(&r, &["x^2", "y^2"]).contains(&poly(&r, "x + y")).unwrap());
        let cube = poly(&r, "(x+y)^3");
        assert!(ideal(&r, &["x^3", "y^3"]).contains(&cube).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring(2, &["x", "y"]);
        let c = ideal(&r, &["x^2*y"]).colon(&ideal(&r, &["y"])).unwrap();
        assert!(c.same_as(&ideal(&r, &["x^2"])).unwrap());
        let c = ideal(&r, &["x^2*y^2"]).colon(&ideal(&r, &["x*y"])).unwrap();
        assert!(c.same_as(&ideal(&r, &["x*y"])).unwrap());
        let c = ideal(&r, &["x^2+y^2"]).colon(&ideal(&r, &["x+y"])).unwrap();
        assert!(c.same_as(&ideal(&r, &["x+y"])).unwrap());
        let e = ideal(&r, &["x^2+y^2"]).colon_by_elimination(&poly(&r, "x+y")).unwrap();
        assert!(e.same_as(&c).unwrap());
        assert_eq!(ideal(&r, &["x"]).colon(&Ideal::zero(&r)).unwrap_err(), Error::ZeroColon);
    }

    #[test]
    fn intersection_examples() {
        let r = ring(5, &["x", "y"]);
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.same_as(&ideal(&r, &["x*y"])).unwrap());
        let m = ideal(&r, &["x", "y"]);
        assert!(m.intersect(&m).unwrap().same_as(&m).unwrap());

        let r4 = ring(5, &["x1", "x2", "x3", "x4"]);
        let p = ideal(&r4, &["x1", "x2"]).intersect(&ideal(&r4, &["x3", "x4"])).unwrap();
        assert!(p.same_as(&ideal(&r4, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"])).unwrap());

        // non-monomial inputs through both routes
        let a = ideal(&r, &["x + y"]);
        let b = ideal(&r, &["x^2 - y^2", "x*y"]);
        let via_module = a.intersect(&b).unwrap();
        let via_elim = a.intersect_by_elimination(&b).unwrap();
        assert!(via_module.same_as(&via_elim).unwrap());
    }

    #[test]
    fn frobenius_power_examples() {
        let r = ring(2, &["x", "y"]);
        let f = ideal(&r, &["x", "y"]).frobenius_power(2).unwrap();
        assert!(f.same_as(&ideal(&r, &["x^4", "y^4"])).unwrap());
        let r3 = ring(3, &["x", "y", "z"]);
        let f = ideal(&r3, &["x+y", "z"]).frobenius_power(2).unwrap();
        assert!(f.same_as(&ideal(&r3, &["x^9+y^9", "z^9"])).unwrap());
        let a = ideal(&r3, &["x", "x+y"]).frobenius_power(1).unwrap();
        let b = ideal(&r3, &["x", "y"]).frobenius_power(1).unwrap();
        assert!(a.same_as(&b).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring(5, &["x", "y"]);
        assert_eq!(ideal(&r, &["x*y"]).krull_dimension().unwrap(), 1);
        let r4 = ring(5, &["x1", "x2", "x3", "x4"]);
        let i = ideal(&r4, &["x1*x3", "x1*x4", "x2*x3", "x2*x4"]);
        assert_eq!(i.krull_dimension().unwrap(), 2);
        assert_eq!(Ideal::zero(&r4).krull_dimension().unwrap(), 4);
        assert_eq!(Ideal::unit(&r4).krull_dimension().unwrap(), -1);
        let twisted = ideal(&r4, &["x1*x2 - x3*x4", "x1^2 - x3^2"]);
        assert_eq!(
            twisted.krull_dimension().unwrap(),
            twisted.dimension_from_hilbert_series().unwrap()
        );
    }

    #[test]
    fn sums_and_products() {
        let r = ring(5, &["x", "y"]);
        assert!(ideal(&r, &["x"])
            .sum(&ideal(&r, &["y"]))
            .unwrap()
            .same_as(&ideal(&r, &["x", "y"]))
            .unwrap());
        assert!(ideal(&r, &["x"])
            .product(&ideal(&r, &["y"]))
            .unwrap()
            .same_as(&ideal(&r, &["x*y"]))
            .unwrap());
        assert!(ideal(&r, &["x+y"]).sum(&Ideal::unit(&r)).unwrap().is_unit().unwrap());
    }

    #[test]
    fn monomial_radicals() {
        let r = ring(3, &["x", "y", "z"]);
        let rad = ideal(&r, &["x^2*y", "x*z^3", "x*y - y*x"])
            .monomial_radical()
            .unwrap()
            .unwrap();
        assert!(rad.same_as(&ideal(&r, &["x*y", "x*z"])).unwrap());
        assert!(ideal(&r, &["x + y"]).monomial_radical().unwrap().is_none());
    }
}
