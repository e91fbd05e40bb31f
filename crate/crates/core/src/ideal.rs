//! Ideals of the ambient polynomial ring and the operations the closure
//! calculus is built from: membership, colon, intersection, elimination,
//! minimal primes of squarefree monomial ideals, and zero-dimensional
//! quotient bases.
//!
//! Quotient-ring questions are always phrased in the ambient ring by
//! adjoining the defining ideal to the ideal arguments; see
//! [`crate::ring::RingSpec`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form, GbBudget, GroebnerBasis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingSpec};

/// A finitely generated ideal with a write-once cache of reduced Groebner
/// bases, one per monomial order. Clones share the cache.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Arc<Vec<Polynomial>>,
    cache: Arc<Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl Ideal {
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch(ring.describe(), g.ring().describe()));
            }
        }
        let gens = if gens.is_empty() { vec![Polynomial::zero(ring)] } else { gens };
        Ok(Ideal {
            ring: ring.clone(),
            gens: Arc::new(gens),
            cache: Arc::new(Mutex::new(BTreeMap::new())),
        })
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, vec![]).expect("same ring")
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|t| Polynomial::parse(ring, t))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> Result<bool> {
        Ok(self.groebner_basis(MonomialOrder::GrevLex)?.elements().is_empty())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.groebner_basis(MonomialOrder::GrevLex)?.is_unit_ideal())
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.describe(), other.ring.describe()));
        }
        Ok(())
    }

    /// The reduced monic Groebner basis under `order`, cached write-once.
    pub fn groebner_basis(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        self.groebner_basis_with(order, GbBudget::from_config())
    }

    pub fn groebner_basis_with(&self, order: MonomialOrder, budget: GbBudget) -> Result<Arc<GroebnerBasis>> {
        if let Some(b) = self.cache.lock().expect("gb cache").get(&order) {
            return Ok(b.clone());
        }
        let elements = buchberger(&self.ring, &self.gens, order, budget)?;
        let basis = Arc::new(GroebnerBasis::new(self.ring.clone(), order, elements));
        // generators must reduce to zero against the basis they produced
        for g in self.gens.iter() {
            if !normal_form(g, &basis)?.is_zero() {
                return Err(Error::Internal("generator fails to reduce modulo its own basis".into()));
            }
        }
        let mut cache = self.cache.lock().expect("gb cache");
        let entry = cache.entry(order).or_insert_with(|| basis.clone());
        Ok(entry.clone())
    }

    /// Membership test: true iff the normal form of `f` vanishes.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch(self.ring.describe(), f.ring().describe()));
        }
        if f.is_zero() {
            return Ok(true);
        }
        let basis = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(normal_form(f, &basis)?.is_zero())
    }

    /// Generator-wise containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in self.gens.iter() {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the reduced grevlex bases coincide.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        let a = self.groebner_basis(MonomialOrder::GrevLex)?;
        let b = other.groebner_basis(MonomialOrder::GrevLex)?;
        Ok(a.elements() == b.elements())
    }

    /// Ideal sum: concatenated generators.
    pub fn plus(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.as_ref().clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn plus_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.as_ref().clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Product ideal from pairwise generator products.
    pub fn times(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in self.gens.iter() {
            for b in other.gens.iter() {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Ordinary ideal power I^k, generated by the degree-k multiset products
    /// of the generators.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        if k == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        fn multisets(
            gens: &[Polynomial],
            start: usize,
            remaining: u32,
            acc: &Polynomial,
            out: &mut Vec<Polynomial>,
        ) -> Result<()> {
            if remaining == 0 {
                out.push(acc.clone());
                return Ok(());
            }
            for idx in start..gens.len() {
                let next = acc.mul(&gens[idx])?;
                multisets(gens, idx, remaining - 1, &next, out)?;
            }
            Ok(())
        }
        let mut gens = Vec::new();
        multisets(&self.gens, 0, k, &Polynomial::one(&self.ring), &mut gens)?;
        Ideal::new(&self.ring, gens)
    }

    /// Multiply every generator by `f`.
    pub fn scale_by(&self, f: &Polynomial) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Replace the generators by the reduced grevlex basis. Derived ideals
    /// are returned in this canonical form.
    pub fn canonicalize(&self) -> Result<Ideal> {
        let basis = self.groebner_basis(MonomialOrder::GrevLex)?;
        Ideal::new(&self.ring, basis.elements().to_vec())
    }

    /// `I ∩ (subring omitting the first k variables)` via an elimination
    /// basis, returned inside the same ambient ring.
    pub fn eliminate(&self, k: usize) -> Result<Ideal> {
        if k >= self.ring.nvars() {
            return Err(Error::UnsupportedInput(format!(
                "cannot eliminate {k} of {} variables",
                self.ring.nvars()
            )));
        }
        let basis = self.groebner_basis(MonomialOrder::Elimination(k))?;
        let kept: Vec<Polynomial> = basis
            .elements()
            .iter()
            .filter(|g| {
                g.terms().all(|(m, _)| m.exps()[..k].iter().all(|&e| e == 0))
            })
            .cloned()
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// Intersection via the auxiliary-variable construction: adjoin t,
    /// eliminate t from t*I + (1-t)*J.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut vars = vec![fresh_var_name(&self.ring)];
        vars.extend(self.ring.vars().iter().cloned());
        let ext = PolyRing::new(self.ring.prime(), vars)?;
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for g in self.gens.iter() {
            gens.push(lift_poly(g, &ext, 1)?.mul(&t)?);
        }
        for g in other.gens.iter() {
            gens.push(lift_poly(g, &ext, 1)?.mul(&one_minus_t)?);
        }
        let extended = Ideal::new(&ext, gens)?;
        let eliminated = extended.eliminate(1)?;
        let dropped: Vec<Polynomial> = eliminated
            .gens()
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.project_to(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        let result = Ideal::new(&self.ring, dropped)?.canonicalize()?;
        // membership both ways on generators
        for g in result.gens() {
            if !self.contains(g)? || !other.contains(g)? {
                return Err(Error::Internal("intersection generator escapes a factor".into()));
            }
        }
        Ok(result)
    }

    /// The colon ideal (I : J) = { f : f*J ⊆ I }, computed per generator of
    /// J and intersected. A zero `J` yields the unit ideal (the caller is
    /// expected to surface the degenerate-input warning).
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter() {
            if g.is_zero() {
                continue;
            }
            let single = self.colon_single(g)?;
            acc = Some(match acc {
                None => single,
                Some(prev) => prev.intersect(&single)?,
            });
        }
        match acc {
            Some(ideal) => ideal.canonicalize(),
            None => Ok(Ideal::unit(&self.ring)),
        }
    }

    /// (I : g) = (I ∩ (g)) / g for a single nonzero g.
    fn colon_single(&self, g: &Polynomial) -> Result<Ideal> {
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::new();
        for h in meet.gens() {
            if h.is_zero() {
                continue;
            }
            match h.div_exact(g)? {
                Some(q) => gens.push(q),
                None => {
                    return Err(Error::Internal(
                        "element of I ∩ (g) is not a multiple of g".into(),
                    ))
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Minimal primes of an ideal generated by squarefree monomials, each
    /// returned as a variable-generated ideal. Computed as the minimal
    /// transversals of the generators' support hypergraph; the intersection
    /// of the result is checked to reproduce the input.
    pub fn minimal_primes_squarefree(&self) -> Result<Vec<Ideal>> {
        let mut edges: Vec<Vec<usize>> = Vec::new();
        let mut all_zero = true;
        for g in self.gens.iter() {
            if g.is_zero() {
                continue;
            }
            all_zero = false;
            let m = g.as_monomial().ok_or_else(|| {
                Error::UnsupportedInput(format!("generator {g} is not a monomial"))
            })?;
            if !m.is_squarefree() {
                return Err(Error::UnsupportedInput(format!(
                    "generator {g} is not squarefree"
                )));
            }
            edges.push(m.support());
        }
        if all_zero {
            return Ok(vec![Ideal::zero(&self.ring)]);
        }
        // drop edges containing another edge; transversals are unchanged
        edges.sort_by_key(|e| e.len());
        let mut minimal_edges: Vec<Vec<usize>> = Vec::new();
        'edge: for e in edges {
            for kept in &minimal_edges {
                if kept.iter().all(|v| e.contains(v)) {
                    continue 'edge;
                }
            }
            minimal_edges.push(e);
        }
        if minimal_edges.iter().any(|e| e.is_empty()) {
            // a unit generator: the unit ideal has no minimal primes
            return Ok(vec![]);
        }
        let mut covers: Vec<Vec<usize>> = Vec::new();
        let mut chosen: Vec<usize> = Vec::new();
        fn search(edges: &[Vec<usize>], chosen: &mut Vec<usize>, covers: &mut Vec<Vec<usize>>) {
            match edges.iter().find(|e| !e.iter().any(|v| chosen.contains(v))) {
                None => {
                    let mut c = chosen.clone();
                    c.sort_unstable();
                    if !covers.contains(&c) {
                        covers.push(c);
                    }
                }
                Some(edge) => {
                    for &v in edge {
                        chosen.push(v);
                        search(edges, chosen, covers);
                        chosen.pop();
                    }
                }
            }
        }
        search(&minimal_edges, &mut chosen, &mut covers);
        let all = covers.clone();
        covers.retain(|c| {
            !all.iter().any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
        });
        covers.sort();
        let primes = covers
            .into_iter()
            .map(|c| {
                let gens = c.iter().map(|&v| Polynomial::var(&self.ring, v)).collect();
                Ideal::new(&self.ring, gens)
            })
            .collect::<Result<Vec<_>>>()?;
        // the intersection of the minimal primes must reproduce the ideal
        let mut meet = Ideal::unit(&self.ring);
        for prime in &primes {
            meet = meet.intersect(prime)?;
        }
        if !meet.equals(self)? {
            return Err(Error::Internal(
                "minimal primes do not intersect back to the input".into(),
            ));
        }
        Ok(primes)
    }
}

/// Standard monomials of a zero-dimensional quotient: the monomials not
/// divisible by any leading term of the combined basis of `I` plus the
/// defining ideal of `ring`. Errors with the name of a free variable when
/// the quotient is not finite over F_p.
pub fn quotient_vector_basis(ring: &RingSpec, ideal: &Ideal) -> Result<Vec<Monomial>> {
    let combined = ideal.plus_gens(ring.defining())?;
    let basis = combined.groebner_basis(MonomialOrder::GrevLex)?;
    let lts = basis.leading_monomials();
    let n = ring.ambient().nvars();
    if basis.is_unit_ideal() {
        return Ok(vec![]);
    }
    // zero-dimensionality: every variable has a pure power among the leads
    let mut bounds = vec![0u32; n];
    for v in 0..n {
        let mut bound = None;
        for m in &lts {
            let e = m.exps()[v];
            if e > 0 && m.exps().iter().enumerate().all(|(i, &x)| i == v || x == 0) {
                bound = Some(bound.map_or(e, |b: u32| b.min(e)));
            }
        }
        match bound {
            Some(b) => bounds[v] = b,
            None => {
                return Err(Error::NotZeroDimensional {
                    free_variable: ring.ambient().var_name(v).to_string(),
                })
            }
        }
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::from_exps(exps.clone());
        if !lts.iter().any(|lt| lt.divides(&m)) {
            out.push(m);
        }
        // odometer over the box cut out by the pure-power bounds
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by(|a, b| MonomialOrder::GrevLex.cmp(a, b));
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// True iff the quotient by `ideal` plus the defining ideal is
/// zero-dimensional (finite over F_p).
pub fn is_zero_dimensional(ring: &RingSpec, ideal: &Ideal) -> Result<bool> {
    match quotient_vector_basis(ring, ideal) {
        Ok(_) => Ok(true),
        Err(Error::NotZeroDimensional { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

fn fresh_var_name(ring: &PolyRing) -> String {
    let mut candidate = "t".to_string();
    let mut k = 0;
    while ring.var_index(&candidate).is_some() {
        candidate = format!("t{k}");
        k += 1;
    }
    candidate
}

/// Re-express `f` in `target`, whose variables contain `f`'s ring's
/// variables shifted right by `offset` fresh ones at the front.
fn lift_poly(f: &Polynomial, target: &PolyRing, offset: usize) -> Result<Polynomial> {
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let mut exps = vec![0u32; target.nvars()];
        for (i, &e) in m.exps().iter().enumerate() {
            exps[i + offset] = e;
        }
        terms.push((Monomial::from_exps(exps), c));
    }
    Ok(Polynomial::from_terms(target, terms))
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(p, vars.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
        Ideal::parse(r, gens).unwrap()
    }

    fn poly(r: &PolyRing, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = ring(3, &["x", "y", "z", "w"]);
        let i = ideal(&r, &["x*y", "y*z", "z*w"]);
        assert!(i.contains(&poly(&r, "x*y*z")).unwrap());
        assert!(!i.contains(&poly(&r, "x*w")).unwrap());
        assert!(i.contains(&Polynomial::zero(&r)).unwrap());
    }

    #[test]
    fn bracket_membership_small_primes() {
        // (x*w)^p lies in (x^p - w^p, x^p - y^p - z^p, x*y, y*z, z*w)
        for p in [2u64, 3, 5, 7] {
            let r = ring(p, &["x", "y", "z", "w"]);
            let gens = [
                format!("x^{p}-w^{p}"),
                format!("x^{p}-y^{p}-z^{p}"),
                "x*y".to_string(),
                "y*z".to_string(),
                "z*w".to_string(),
            ];
            let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
            let i = ideal(&r, &refs);
            let f = poly(&r, "x*w").pow(p).unwrap();
            assert!(i.contains(&f).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn frobenius_image_escapes_the_bracket() {
        // x*w*(x*w)^(p(p-1)) is outside the q = p^2 bracket ideal
        for p in [2u64, 3] {
            let q = p * p;
            let r = ring(p, &["x", "y", "z", "w"]);
            let gens = [
                format!("x^{q}-w^{q}"),
                format!("x^{q}-y^{q}-z^{q}"),
                "x*y".to_string(),
                "y*z".to_string(),
                "z*w".to_string(),
            ];
            let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
            let i = ideal(&r, &refs);
            let f = poly(&r, "x*w").pow(p * (p - 1) + 1).unwrap();
            assert!(!i.contains(&f).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn colon_examples() {
        let r = ring(5, &["x", "y"]);
        let c = ideal(&r, &["x^2", "x*y"]).colon(&ideal(&r, &["x"])).unwrap();
        assert!(c.equals(&ideal(&r, &["x", "y"])).unwrap());

        let c = ideal(&r, &["x"]).colon(&ideal(&r, &["1"])).unwrap();
        assert!(c.equals(&ideal(&r, &["x"])).unwrap());

        // colon by the zero ideal is the unit ideal
        let c = ideal(&r, &["x"]).colon(&Ideal::zero(&r)).unwrap();
        assert!(c.is_unit_ideal().unwrap());
    }

    #[test]
    fn intersection_identities() {
        let r = ring(3, &["x", "y", "z", "w"]);
        let p1 = ideal(&r, &["x", "z"]);
        let p2 = ideal(&r, &["y", "z"]);
        let p3 = ideal(&r, &["y", "w"]);
        assert!(p1.intersect(&p2).unwrap().equals(&ideal(&r, &["x*y", "z"])).unwrap());
        assert!(p2.intersect(&p3).unwrap().equals(&ideal(&r, &["y", "z*w"])).unwrap());
        assert!(p1
            .intersect(&p3)
            .unwrap()
            .equals(&ideal(&r, &["x*y", "x*w", "z*y", "z*w"]))
            .unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(5, &["t", "x", "y"]);
        let i = ideal(&r, &["t*x", "y-t*y"]);
        let e = i.eliminate(1).unwrap();
        assert!(e.equals(&ideal(&r, &["x*y"])).unwrap());

        let r2 = ring(5, &["x", "y"]);
        let e = ideal(&r2, &["x-y"]).eliminate(1).unwrap();
        assert!(e.is_zero_ideal().unwrap());

        let r3 = ring(5, &["t", "u"]);
        let e = ideal(&r3, &["t^2", "t*u-1"]).eliminate(1).unwrap();
        assert!(e.is_unit_ideal().unwrap());
    }

    #[test]
    fn minimal_primes_of_the_three_plane_ideal() {
        let r = ring(3, &["x", "y", "z", "w"]);
        let primes = ideal(&r, &["x*y", "y*z", "z*w"]).minimal_primes_squarefree().unwrap();
        assert_eq!(primes.len(), 3);
        let expect = [ideal(&r, &["x", "z"]), ideal(&r, &["y", "z"]), ideal(&r, &["y", "w"])];
        for e in &expect {
            assert!(primes.iter().any(|p| p.equals(e).unwrap()));
        }
    }

    #[test]
    fn minimal_primes_simple_cases() {
        let r = ring(5, &["x", "y"]);
        let p = ideal(&r, &["x"]).minimal_primes_squarefree().unwrap();
        assert_eq!(p.len(), 1);
        assert!(p[0].equals(&ideal(&r, &["x"])).unwrap());

        let p = ideal(&r, &["x*y"]).minimal_primes_squarefree().unwrap();
        assert_eq!(p.len(), 2);

        assert!(ideal(&r, &["x^2"]).minimal_primes_squarefree().is_err());
        assert!(ideal(&r, &["x+y"]).minimal_primes_squarefree().is_err());
    }

    #[test]
    fn quotient_bases() {
        let r = ring(5, &["x"]);
        let spec = RingSpec::regular(r.clone());
        let basis = quotient_vector_basis(&spec, &ideal(&r, &["x^2"])).unwrap();
        assert_eq!(basis, vec![Monomial::one(1), Monomial::var(1, 0)]);

        let basis = quotient_vector_basis(&spec, &ideal(&r, &["1"])).unwrap();
        assert!(basis.is_empty());

        let r2 = ring(5, &["x", "y"]);
        let spec2 = RingSpec::regular(r2.clone());
        let err = quotient_vector_basis(&spec2, &ideal(&r2, &["x"])).unwrap_err();
        assert!(matches!(err, Error::NotZeroDimensional { free_variable } if free_variable == "y"));
    }

    #[test]
    fn quotient_basis_of_the_example_parameter_ideal() {
        // modulo (x-w, x-y-z) + (xy, yz, zw) the quotient is 3-dimensional,
        // spanned by {1, z, w} under grevlex; the presentation
        // K[y,z]/(y^2, yz, z^2) matches it via y = w - z.
        let r = ring(3, &["x", "y", "z", "w"]);
        let spec = RingSpec::new(
            r.clone(),
            vec![poly(&r, "x*y"), poly(&r, "y*z"), poly(&r, "z*w")],
        )
        .unwrap();
        let i = ideal(&r, &["x-w", "x-y-z"]);
        let basis = quotient_vector_basis(&spec, &i).unwrap();
        assert_eq!(basis.len(), 3);
        assert!(basis.contains(&Monomial::one(4)));
        // the relation y - (w - z) falls into the combined ideal
        let combined = i.plus_gens(spec.defining()).unwrap();
        assert!(combined.contains(&poly(&r, "y-w+z")).unwrap());
        for quad in ["y^2", "y*z", "z^2"] {
            assert!(combined.contains(&poly(&r, quad)).unwrap());
        }
    }

    #[test]
    fn ideal_equality() {
        let r = ring(5, &["x", "y"]);
        assert!(ideal(&r, &["x", "y"]).equals(&ideal(&r, &["y", "x+y"])).unwrap());
        assert!(!ideal(&r, &["x"]).equals(&ideal(&r, &["x^2"])).unwrap());
    }

    #[test]
    fn colon_respects_adjunction_identities() {
        let r = ring(7, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2*y", "y*z^2"]);
        let j = ideal(&r, &["x*y", "z"]);
        let c = i.colon(&j).unwrap();
        // I ⊆ (I : J) and (I : J) * J ⊆ I
        assert!(i.contained_in(&c).unwrap());
        assert!(c.times(&j).unwrap().contained_in(&i).unwrap());
    }
}
