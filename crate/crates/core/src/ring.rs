//! Ambient polynomial rings over F_p and quotient presentations.

use std::fmt;
use std::sync::Arc;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fp;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

#[derive(Debug)]
struct RingInner {
    prime: u64,
    vars: Vec<String>,
}

/// The ambient polynomial ring F_p[x_1, ..., x_n].
///
/// Cheap to clone and share; equality is structural (same prime, same
/// variable list) with a pointer fast path.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<RingInner>);

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new(prime: u64, vars: Vec<String>) -> Result<PolyRing> {
        if !fp::is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        let cap = Config::global().prime_cap.min(fp::MAX_PRIME);
        if prime > cap {
            return Err(Error::InvalidRing(format!(
                "prime {prime} exceeds the configured cap {cap}"
            )));
        }
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for v in &vars {
            if !valid_var_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name {v:?}")));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable name {v:?}")));
            }
        }
        Ok(PolyRing(Arc::new(RingInner { prime, vars })))
    }

    pub fn prime(&self) -> u64 {
        self.0.prime
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.0.vars[idx]
    }

    pub fn monomial_one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn describe(&self) -> String {
        format!("Fp({})[{}]", self.prime(), self.vars().join(","))
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.prime == other.0.prime && self.0.vars == other.0.vars)
    }
}
impl Eq for PolyRing {}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// A polynomial ring together with an optional defining ideal, presenting the
/// quotient R = F_p[x_1..x_n] / (g_1..g_m).
///
/// All computation happens in the ambient ring; quotient semantics are
/// obtained by adjoining the defining generators to ideal arguments. The
/// engine works with polynomial (not power series) data: every membership and
/// colon computed here involves ideals primary to the irrelevant maximal
/// ideal or generated by monomial data, for which completion is irrelevant.
#[derive(Debug, Clone, PartialEq)]
pub struct RingSpec {
    ambient: PolyRing,
    defining: Vec<Polynomial>,
}

impl RingSpec {
    pub fn new(ambient: PolyRing, defining: Vec<Polynomial>) -> Result<RingSpec> {
        for g in &defining {
            if g.ring() != &ambient {
                return Err(Error::RingMismatch(
                    ambient.describe(),
                    g.ring().describe(),
                ));
            }
            if g.is_zero() {
                return Err(Error::InvalidRing(
                    "defining ideal generators must be nonzero".into(),
                ));
            }
        }
        Ok(RingSpec { ambient, defining })
    }

    pub fn regular(ambient: PolyRing) -> RingSpec {
        RingSpec { ambient, defining: Vec::new() }
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn prime(&self) -> u64 {
        self.ambient.prime()
    }

    pub fn defining(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn is_regular_presentation(&self) -> bool {
        self.defining.is_empty()
    }

    /// The defining monomials when the presentation is Stanley-Reisner
    /// (every generator a squarefree monomial, up to a unit), else `None`.
    /// A regular presentation returns an empty list.
    pub fn stanley_reisner_monomials(&self) -> Option<Vec<Monomial>> {
        let mut out = Vec::with_capacity(self.defining.len());
        for g in &self.defining {
            let m = g.as_monomial()?;
            if !m.is_squarefree() {
                return None;
            }
            out.push(m);
        }
        Some(out)
    }

    pub fn describe(&self) -> String {
        if self.defining.is_empty() {
            self.ambient.describe()
        } else {
            let gens: Vec<String> = self.defining.iter().map(|g| g.to_string()).collect();
            format!("{} / ({})", self.ambient.describe(), gens.join(", "))
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}
