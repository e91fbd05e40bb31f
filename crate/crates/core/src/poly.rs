//! Sparse multivariate polynomials over F_p.
//!
//! Terms live in a map from exponent vectors to nonzero canonical residues,
//! so every value is in canonical sparse form by construction and arithmetic
//! is independent of insertion order. The Frobenius endomorphism r -> r^(p^e)
//! is computed term-wise (freshman's dream) and cross-checked against plain
//! repeated multiplication on small inputs.

use std::collections::BTreeMap;
use std::fmt;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fp;
use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &PolyRing) -> Polynomial {
        Polynomial::constant(ring, 1)
    }

    pub fn constant(ring: &PolyRing, c: u64) -> Polynomial {
        let c = c % ring.prime();
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(ring.monomial_one(), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &PolyRing, idx: usize) -> Polynomial {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), idx), 1);
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: u64) -> Polynomial {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let c = c % ring.prime();
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Build from a term list, merging duplicates and dropping zeros.
    pub fn from_terms(ring: &PolyRing, list: Vec<(Monomial, u64)>) -> Polynomial {
        let p = ring.prime();
        let mut terms: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (m, c) in list {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let c = c % p;
            if c == 0 {
                continue;
            }
            let entry = terms.entry(m).or_insert(0);
            *entry = fp::add(*entry, c, p);
            if *entry == 0 {
                // remove cancelled term lazily below
            }
        }
        terms.retain(|_, c| *c != 0);
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn parse(ring: &PolyRing, text: &str) -> Result<Polynomial> {
        crate::dsl::parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// The underlying monomial when the polynomial is a single term with unit
    /// coefficient up to scaling, i.e. c*m. Returns `None` otherwise.
    pub fn as_monomial(&self) -> Option<Monomial> {
        if self.terms.len() == 1 {
            Some(self.terms.keys().next().unwrap().clone())
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.describe(),
                other.ring.describe(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let p = self.ring.prime();
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert(0);
            *entry = fp::add(*entry, c, p);
        }
        terms.retain(|_, c| *c != 0);
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let p = self.ring.prime();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), fp::neg(c, p))).collect(),
        }
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let p = self.ring.prime();
        let c = c % p;
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), fp::mul(a, c, p))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u64) -> Result<Polynomial> {
        let p = self.ring.prime();
        let c = c % p;
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut terms = BTreeMap::new();
        for (t, &a) in &self.terms {
            terms.insert(t.mul(m)?, fp::mul(a, c, p));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let p = self.ring.prime();
        let mut terms: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let m = ma.mul(mb)?;
                let entry = terms.entry(m).or_insert(0);
                *entry = fp::add(*entry, fp::mul(ca, cb, p), p);
            }
        }
        terms.retain(|_, c| *c != 0);
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, n: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// q = p^e checked against the configured cap.
    pub fn frobenius_q(prime: u64, e: u32) -> Result<u64> {
        let cap = Config::global().q_cap;
        let q = (prime as u128).checked_pow(e).ok_or(Error::ExponentOverflow)?;
        if q > cap as u128 {
            return Err(Error::QCapExceeded { q, cap });
        }
        Ok(q as u64)
    }

    /// The iterated Frobenius image f^(p^e).
    ///
    /// Computed term-wise: c * m maps to c * m^(p^e) because coefficients are
    /// fixed by Frobenius (Fermat) and mixed terms vanish in characteristic p.
    /// On small inputs the result is cross-checked against plain repeated
    /// multiplication.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let p = self.ring.prime();
        let q = Self::frobenius_q(p, e)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| Ok((m.pow(q)?, c)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let result = Polynomial { ring: self.ring.clone(), terms };
        if p <= 13 && self.terms.len() <= 16 && e <= 3 {
            let mut check = self.clone();
            for _ in 0..e {
                let mut acc = Polynomial::one(&self.ring);
                for _ in 0..p {
                    acc = acc.mul(&check)?;
                }
                check = acc;
            }
            if check != result {
                return Err(Error::Internal(
                    "frobenius term-wise image disagrees with repeated multiplication".into(),
                ));
            }
        }
        Ok(result)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, &c)| (m, c))
    }

    /// Exact division by a nonzero polynomial; `None` when not a multiple.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::Internal("division by zero polynomial".into()));
        }
        let p = self.ring.prime();
        let order = MonomialOrder::GrevLex;
        let (dlm, dlc) = divisor.leading_term(order).unwrap();
        let dlm = dlm.clone();
        let dinv = fp::inv(dlc, p);
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, u64)> = Vec::new();
        while let Some((lm, lc)) = rem.leading_term(order) {
            let Some(shift) = dlm.div(lm) else {
                return Ok(None);
            };
            let c = fp::mul(lc, dinv, p);
            quot.push((shift.clone(), c));
            rem = rem.sub(&divisor.mul_term(&shift, c)?)?;
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quot)))
    }

    /// Set the listed variables to zero, dropping every term they divide.
    pub fn substitute_zero(&self, vars: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| vars.iter().all(|&v| m.exps()[v] == 0))
            .map(|(m, &c)| (m.clone(), c))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Re-express in a ring over the same prime whose variables (matched by
    /// name) include the support of this polynomial.
    pub fn project_to(&self, target: &PolyRing) -> Result<Polynomial> {
        if target.prime() != self.ring.prime() {
            return Err(Error::RingMismatch(self.ring.describe(), target.describe()));
        }
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.vars() {
            map.push(target.var_index(name));
        }
        let mut terms = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => exps[j] = e,
                    None => {
                        return Err(Error::UnsupportedInput(format!(
                            "variable {} does not exist in {}",
                            self.ring.var_name(i),
                            target.describe()
                        )))
                    }
                }
            }
            terms.insert(Monomial::from_exps(exps), c);
        }
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Terms sorted descending under grevlex: the canonical display order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, u64)> {
        let mut v: Vec<(Monomial, u64)> = self.terms.iter().map(|(m, &c)| (m.clone(), c)).collect();
        v.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        v
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: grevlex-descending terms, balanced signed
    /// coefficients, `^1` and unit coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let p = self.ring.prime();
        for (i, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            // balanced representative: residues above p/2 print negatively
            let (neg, mag) = if p > 2 && c > p / 2 { (true, p - c) } else { (false, c) };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(self.ring.var_name(v).to_string());
                } else {
                    factors.push(format!("{}^{}", self.ring.var_name(v), e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(p, vars.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn parse(r: &PolyRing, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn difference_of_squares_mod_5() {
        let r = ring(5, &["x", "y"]);
        let prod = parse(&r, "x+y").mul(&parse(&r, "x-y")).unwrap();
        assert_eq!(prod, parse(&r, "x^2-y^2"));
    }

    #[test]
    fn zero_is_absorbing() {
        let r = ring(5, &["x", "y"]);
        let f = parse(&r, "x^2+3*x*y-1");
        assert!(f.mul(&Polynomial::zero(&r)).unwrap().is_zero());
    }

    #[test]
    fn transition_multiplier_expansion_mod_3() {
        // (x-w)*(x-y-z) expanded by hand over F_3:
        //   x^2 - xy - xz - wx + wy + wz
        let r = ring(3, &["x", "y", "z", "w"]);
        let expected = Polynomial::from_terms(
            &r,
            vec![
                (Monomial::from_exps(vec![2, 0, 0, 0]), 1),
                (Monomial::from_exps(vec![1, 1, 0, 0]), 2),
                (Monomial::from_exps(vec![1, 0, 1, 0]), 2),
                (Monomial::from_exps(vec![1, 0, 0, 1]), 2),
                (Monomial::from_exps(vec![0, 1, 0, 1]), 1),
                (Monomial::from_exps(vec![0, 0, 1, 1]), 1),
            ],
        );
        let got = parse(&r, "x-w").mul(&parse(&r, "x-y-z")).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring(5, &["x", "y"]);
        let s = ring(5, &["x", "z"]);
        assert!(parse(&r, "x").mul(&parse(&s, "x")).is_err());
        assert!(parse(&r, "x").add(&parse(&s, "z")).is_err());
    }

    #[test]
    fn frobenius_linear_form_mod_3() {
        let r = ring(3, &["x", "y", "z", "w"]);
        let f = parse(&r, "x-w");
        assert_eq!(f.frobenius_power(1).unwrap(), parse(&r, "x^3-w^3"));
    }

    #[test]
    fn frobenius_fixes_constants() {
        let r = ring(5, &["x"]);
        let two = Polynomial::constant(&r, 2);
        // 2^25 = 2 mod 5
        assert_eq!(two.frobenius_power(2).unwrap(), two);
    }

    #[test]
    fn freshmans_dream_mod_2() {
        let r = ring(2, &["x", "y"]);
        assert_eq!(parse(&r, "x+y").frobenius_power(1).unwrap(), parse(&r, "x^2+y^2"));
    }

    #[test]
    fn frobenius_identity_at_e0() {
        let r = ring(7, &["x", "y"]);
        let f = parse(&r, "3*x^2-y+1");
        assert_eq!(f.frobenius_power(0).unwrap(), f);
    }

    #[test]
    fn frobenius_q_cap() {
        // default cap is 343 = 7^3
        assert!(Polynomial::frobenius_q(7, 3).is_ok());
        assert!(matches!(
            Polynomial::frobenius_q(7, 4),
            Err(Error::QCapExceeded { .. })
        ));
    }

    #[test]
    fn exact_division() {
        let r = ring(7, &["x", "y"]);
        let f = parse(&r, "x^2-y^2");
        let g = parse(&r, "x-y");
        assert_eq!(f.div_exact(&g).unwrap().unwrap(), parse(&r, "x+y"));
        assert!(parse(&r, "x^2+y").div_exact(&g).unwrap().is_none());
    }

    #[test]
    fn substitution_and_projection() {
        let r = ring(3, &["x", "y", "z", "w"]);
        let f = parse(&r, "x*w+y+z");
        let cut = f.substitute_zero(&[1, 2]);
        assert_eq!(cut, parse(&r, "x*w"));
        let small = ring(3, &["x", "w"]);
        assert_eq!(cut.project_to(&small).unwrap(), parse(&small, "x*w"));
        // projection of something supported on y must fail
        assert!(f.project_to(&small).is_err());
    }

    #[test]
    fn canonical_printing() {
        let r = ring(5, &["x", "y"]);
        assert_eq!(parse(&r, "y + x^2 - 4*x*y").to_string(), "x^2+x*y+y");
        assert_eq!(parse(&r, "3*x").to_string(), "-2*x");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        assert_eq!(Polynomial::constant(&r, 4).to_string(), "-1");
    }
}
