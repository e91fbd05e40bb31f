//! The characteristic-p calculus: Frobenius bracket powers, certified tight
//! closure membership, exact tight closure in Stanley-Reisner quotients, test
//! ideals, parameter test ideals, and determinant-trick certificates.
//!
//! Exact tight closure is computed only where a finite formula exists: in a
//! quotient by a squarefree monomial ideal, reduction modulo each minimal
//! prime lands in a polynomial ring, where every ideal is tightly closed, so
//! I* = ∩_i (I + P_i). Everywhere else the engine verifies Frobenius
//! memberships up to a bound and says so: the bounded route never certifies
//! membership, it only certifies non-membership or reports the bound reached.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{express_in_terms, GbBudget};
use crate::ideal::{is_zero_dimensional, Ideal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    /// Exact routes only (regular ring or Stanley-Reisner reduction).
    Member,
    /// A required Frobenius membership failed at `witness_q`.
    NonMember,
    /// Every check up to the bound passed; nothing more is claimed.
    UnknownUpToBound,
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerdictStatus::Member => write!(f, "MEMBER"),
            VerdictStatus::NonMember => write!(f, "NON_MEMBER"),
            VerdictStatus::UnknownUpToBound => write!(f, "UNKNOWN_UP_TO_BOUND"),
        }
    }
}

/// Certified outcome of a tight-closure membership question.
#[derive(Debug, Clone)]
pub struct ClosureVerdict {
    pub status: VerdictStatus,
    /// The q at which a required membership failed (NON_MEMBER only).
    pub witness_q: Option<u64>,
    /// The largest q that was checked (bounded route).
    pub checked_up_to: Option<u64>,
    /// The multiplier c that was used.
    pub multiplier: Polynomial,
}

impl fmt::Display for ClosureVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.status)?;
        if let Some(q) = self.witness_q {
            write!(f, " (witness q = {q})")?;
        }
        if let Some(q) = self.checked_up_to {
            write!(f, " (checked up to q = {q})")?;
        }
        write!(f, " (multiplier {})", self.multiplier)
    }
}

/// The Frobenius bracket power I^[q]: the ideal generated by g^q over the
/// generators g of I. Only defined at powers q = p^e of the characteristic.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let p = ideal.ring().prime();
    let e = power_exponent(p, q)?;
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.frobenius_power(e))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ideal.ring(), gens)
}

fn power_exponent(p: u64, q: u64) -> Result<u32> {
    let mut e = 0u32;
    let mut acc = 1u64;
    while acc < q {
        acc = acc.checked_mul(p).ok_or(Error::ExponentOverflow)?;
        e += 1;
    }
    if acc != q {
        return Err(Error::NotPowerOfP { q, p });
    }
    // re-run the cap check through the shared path
    Polynomial::frobenius_q(p, e)?;
    Ok(e)
}

/// Check c * x^q ∈ I^[q] (plus the defining ideal) for q = p, p^2, ..,
/// p^e_max. With a genuine test multiplier c any failure certifies
/// non-membership in the tight closure; full success only certifies the
/// bound, so MEMBER is never returned here.
pub fn tc_membership_bounded(
    x: &Polynomial,
    ideal: &Ideal,
    ring: &RingSpec,
    c: &Polynomial,
    e_max: u32,
) -> Result<ClosureVerdict> {
    if c.is_zero() {
        return Err(Error::InvalidMultiplier("the multiplier must be nonzero".into()));
    }
    if e_max < 1 {
        return Err(Error::Range("e_max must be at least 1".into()));
    }
    let p = ring.prime();
    let mut checked = 0u64;
    for e in 1..=e_max {
        let q = Polynomial::frobenius_q(p, e)?;
        let lhs = c.mul(&x.frobenius_power(e)?)?;
        let target = bracket_power(ideal, q)?.plus_gens(ring.defining())?;
        if !target.contains(&lhs)? {
            return Ok(ClosureVerdict {
                status: VerdictStatus::NonMember,
                witness_q: Some(q),
                checked_up_to: Some(checked.max(q)),
                multiplier: c.clone(),
            });
        }
        checked = q;
    }
    Ok(ClosureVerdict {
        status: VerdictStatus::UnknownUpToBound,
        witness_q: None,
        checked_up_to: Some(checked),
        multiplier: c.clone(),
    })
}

/// Replay a NON_MEMBER verdict: rerun the failing membership at its witness.
pub fn replay_non_membership(
    x: &Polynomial,
    ideal: &Ideal,
    ring: &RingSpec,
    verdict: &ClosureVerdict,
) -> Result<bool> {
    let Some(q) = verdict.witness_q else {
        return Err(Error::UnsupportedInput("verdict carries no witness".into()));
    };
    let p = ring.prime();
    let e = power_exponent(p, q)?;
    let lhs = verdict.multiplier.mul(&x.frobenius_power(e)?)?;
    let target = bracket_power(ideal, q)?.plus_gens(ring.defining())?;
    Ok(!target.contains(&lhs)?)
}

fn require_stanley_reisner(ring: &RingSpec) -> Result<()> {
    if ring.stanley_reisner_monomials().is_none() {
        return Err(Error::UnsupportedInput(format!(
            "{} is not a Stanley-Reisner presentation; use the bounded membership route",
            ring.describe()
        )));
    }
    Ok(())
}

/// Minimal primes of the quotient presentation: the minimal primes of the
/// defining ideal, or the zero ideal for a regular presentation.
pub fn minimal_primes(ring: &RingSpec) -> Result<Vec<Ideal>> {
    require_stanley_reisner(ring)?;
    if ring.is_regular_presentation() {
        return Ok(vec![Ideal::zero(ring.ambient())]);
    }
    Ideal::new(ring.ambient(), ring.defining().to_vec())?.minimal_primes_squarefree()
}

/// Exact tight closure in a Stanley-Reisner quotient:
/// I* = ∩_i (I + P_i) over the minimal primes P_i, computed in the ambient
/// ring (the result contains the defining ideal).
pub fn tight_closure_sr(ideal: &Ideal, ring: &RingSpec) -> Result<Ideal> {
    require_stanley_reisner(ring)?;
    let primes = minimal_primes(ring)?;
    let mut acc: Option<Ideal> = None;
    for prime in &primes {
        let layer = ideal.plus(prime)?;
        acc = Some(match acc {
            None => layer.canonicalize()?,
            Some(prev) => prev.intersect(&layer)?,
        });
    }
    match acc {
        Some(result) => Ok(result),
        // no minimal primes: the unit-ideal presentation
        None => Ok(Ideal::unit(ideal.ring())),
    }
}

/// Exact membership verdict for x ∈ I* via the Stanley-Reisner route.
pub fn tc_membership_sr(x: &Polynomial, ideal: &Ideal, ring: &RingSpec) -> Result<ClosureVerdict> {
    let closure = tight_closure_sr(ideal, ring)?;
    let status = if closure.contains(x)? { VerdictStatus::Member } else { VerdictStatus::NonMember };
    Ok(ClosureVerdict {
        status,
        witness_q: None,
        checked_up_to: None,
        multiplier: Polynomial::one(ideal.ring()),
    })
}

/// The test ideal of a Stanley-Reisner quotient with minimal primes P_i:
/// the sum over i of ∩_{j≠i} P_j. A domain presentation (single minimal
/// prime) yields the unit ideal. Returned with canonical generators.
pub fn test_ideal_sr(ring: &RingSpec) -> Result<Ideal> {
    let primes = minimal_primes(ring)?;
    let ambient = ring.ambient();
    let mut total = Ideal::zero(ambient);
    for i in 0..primes.len() {
        let mut meet = Ideal::unit(ambient);
        for (j, prime) in primes.iter().enumerate() {
            if j != i {
                meet = meet.intersect(prime)?;
            }
        }
        total = total.plus(&meet)?;
    }
    total.canonicalize()
}

/// How tight closures are produced for the colon route of
/// [`parameter_test_ideal`].
pub trait ClosureOracle {
    fn tight_closure(&self, ideal: &Ideal, ring: &RingSpec) -> Result<Ideal>;
    fn describe(&self) -> String;
}

/// The exact Stanley-Reisner closure.
pub struct SrClosure;

impl ClosureOracle for SrClosure {
    fn tight_closure(&self, ideal: &Ideal, ring: &RingSpec) -> Result<Ideal> {
        tight_closure_sr(ideal, ring)
    }
    fn describe(&self) -> String {
        "exact Stanley-Reisner closure".into()
    }
}

/// Evidence-only closure search for rings without an exact route: the input
/// ideal enlarged by every standard monomial of the (zero-dimensional)
/// quotient whose bounded Frobenius memberships all pass with the given
/// multiplier. An under-approximation of I* in general; callers must treat
/// the result as desk-scale evidence, not proof.
pub struct BoundedSearchClosure {
    pub multiplier: Polynomial,
    pub e_max: u32,
}

impl ClosureOracle for BoundedSearchClosure {
    fn tight_closure(&self, ideal: &Ideal, ring: &RingSpec) -> Result<Ideal> {
        let candidates = crate::ideal::quotient_vector_basis(ring, ideal)?;
        let mut gens = ideal.gens().to_vec();
        for m in candidates {
            if m.is_one() {
                continue;
            }
            let g = Polynomial::monomial(ideal.ring(), m, 1);
            let verdict = tc_membership_bounded(&g, ideal, ring, &self.multiplier, self.e_max)?;
            if verdict.status == VerdictStatus::UnknownUpToBound {
                gens.push(g);
            }
        }
        Ideal::new(ideal.ring(), gens)?.canonicalize()
    }
    fn describe(&self) -> String {
        format!(
            "bounded Frobenius search (multiplier {}, e_max {})",
            self.multiplier, self.e_max
        )
    }
}

/// A generator of the truncated colon intersection that was certified to lie
/// outside the parameter test ideal by a deeper-level colon.
#[derive(Debug, Clone)]
pub struct TransientWitness {
    pub element: Polynomial,
    /// A level t with element ∉ (I_t : I_t*). Since the parameter test ideal
    /// is contained in every such colon, this is a finite non-membership
    /// certificate.
    pub excluded_at_t: u32,
}

#[derive(Debug, Clone)]
pub struct ParameterTestIdeal {
    /// The estimate: generators of the truncated intersection that survive
    /// every probed deeper level.
    pub ideal: Ideal,
    /// The literal truncated intersection ∩_{t ≤ t_max} (I_t : I_t*).
    pub raw_intersection: Ideal,
    /// Generators of the raw intersection certified transient.
    pub eliminated: Vec<TransientWitness>,
    /// True when the same procedure run with t_max − 1 levels already yields
    /// the same estimate. The infinite intersection is never claimed; this
    /// flag reports what was verified.
    pub stabilized: bool,
    pub t_max: u32,
}

/// The colon route to the parameter test ideal.
///
/// Computes J_t = (I_t : I_t*) for I_t = (f_1^t, .., f_d^t) modulo the
/// defining ideal, t = 1..t_max, and intersects. The truncated intersection
/// can retain transient generators that deeper colons would remove (they
/// drift upward with t), so every generator is probed a few levels past
/// t_max and dropped exactly when some deeper colon excludes it — each such
/// drop is a finite certificate of non-membership, recorded in `eliminated`.
pub fn parameter_test_ideal(
    ring: &RingSpec,
    sop: &[Polynomial],
    t_max: u32,
) -> Result<ParameterTestIdeal> {
    parameter_test_ideal_with(ring, sop, t_max, &SrClosure)
}

const TRANSIENT_PROBE_LEVELS: u32 = 3;

fn colon_at(
    ring: &RingSpec,
    sop: &[Polynomial],
    t: u32,
    oracle: &dyn ClosureOracle,
) -> Result<Ideal> {
    let gens = sop
        .iter()
        .map(|f| f.pow(t as u64))
        .collect::<Result<Vec<_>>>()?;
    let i_t = Ideal::new(ring.ambient(), gens)?;
    let closure = oracle.tight_closure(&i_t, ring)?;
    i_t.plus_gens(ring.defining())?.colon(&closure)
}

fn refine_transients(
    raw: &Ideal,
    ring: &RingSpec,
    sop: &[Polynomial],
    t_max: u32,
    oracle: &dyn ClosureOracle,
    probes: &mut Vec<(u32, Ideal)>,
) -> Result<(Ideal, Vec<TransientWitness>)> {
    let mut survivors = Vec::new();
    let mut eliminated = Vec::new();
    'gen: for g in raw.gens() {
        for probe in 1..=TRANSIENT_PROBE_LEVELS {
            let t = t_max + probe;
            if !probes.iter().any(|(pt, _)| *pt == t) {
                let colon = colon_at(ring, sop, t, oracle)?;
                probes.push((t, colon));
            }
            let colon = &probes.iter().find(|(pt, _)| *pt == t).unwrap().1;
            if !colon.contains(g)? {
                eliminated.push(TransientWitness { element: g.clone(), excluded_at_t: t });
                continue 'gen;
            }
        }
        survivors.push(g.clone());
    }
    let refined = Ideal::new(ring.ambient(), survivors)?.canonicalize()?;
    Ok((refined, eliminated))
}

pub fn parameter_test_ideal_with(
    ring: &RingSpec,
    sop: &[Polynomial],
    t_max: u32,
    oracle: &dyn ClosureOracle,
) -> Result<ParameterTestIdeal> {
    if t_max < 1 {
        return Err(Error::Range("t_max must be at least 1".into()));
    }
    let base = Ideal::new(ring.ambient(), sop.to_vec())?;
    if !is_zero_dimensional(ring, &base)? {
        return Err(Error::NotSystemOfParameters(format!(
            "the quotient modulo ({}) is not zero-dimensional",
            sop.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    let mut running: Option<Ideal> = None;
    let mut previous_raw: Option<Ideal> = None;
    for t in 1..=t_max {
        let colon = colon_at(ring, sop, t, oracle)?;
        running = Some(match &running {
            None => colon,
            Some(prev) => prev.intersect(&colon)?,
        });
        if t + 1 == t_max {
            previous_raw = running.clone();
        }
    }
    let raw = running.expect("t_max >= 1").canonicalize()?;
    let mut probes: Vec<(u32, Ideal)> = Vec::new();
    let (refined, eliminated) = refine_transients(&raw, ring, sop, t_max, oracle, &mut probes)?;
    let stabilized = match previous_raw {
        None => false,
        Some(prev) => {
            let prev = prev.canonicalize()?;
            let mut prev_probes: Vec<(u32, Ideal)> = Vec::new();
            let (prev_refined, _) =
                refine_transients(&prev, ring, sop, t_max - 1, oracle, &mut prev_probes)?;
            prev_refined.equals(&refined)?
        }
    };
    Ok(ParameterTestIdeal { ideal: refined, raw_intersection: raw, eliminated, stabilized, t_max })
}

/// A monic integral-dependence equation for x over I, produced by the
/// determinant trick from x*T ⊆ I*T. The degree equals the number of
/// generators of T, which is the uniform bound the multiplier module gives.
#[derive(Debug, Clone)]
pub struct IntegralDependenceCertificate {
    pub degree: usize,
    /// a_ij ∈ I with x * t_i = sum_j a_ij * t_j in the quotient ring.
    pub matrix: Vec<Vec<Polynomial>>,
    /// det(λ·Id − A) as a polynomial in the fresh variable λ, living in the
    /// ambient ring extended by that variable.
    pub char_poly: Polynomial,
    pub lambda_ring: PolyRing,
    pub lambda_var: String,
}

impl IntegralDependenceCertificate {
    /// Coefficient of λ^(degree−k) mapped back to the base ring.
    pub fn coefficient(&self, k: usize, base: &PolyRing) -> Result<Polynomial> {
        let lambda_idx = self.lambda_ring.nvars() - 1;
        let want = (self.degree - k) as u32;
        let mut terms = Vec::new();
        for (m, c) in self.char_poly.terms() {
            if m.exps()[lambda_idx] == want {
                let mut exps = m.exps().to_vec();
                exps.truncate(lambda_idx);
                terms.push((Monomial::from_exps(exps), c));
            }
        }
        Ok(Polynomial::from_terms(base, terms))
    }
}

/// Run the determinant trick: check x*T ⊆ I*T (modulo the defining ideal),
/// express each x*t_i over {u*t_j : u ∈ gens(I)} by cofactor lifting, and
/// return det(λ−A) after verifying that it annihilates x in the quotient
/// ring and that the coefficient of λ^(n−k) lies in I^k.
pub fn integral_dependence_certificate(
    x: &Polynomial,
    ideal: &Ideal,
    t_module: &Ideal,
    ring: &RingSpec,
) -> Result<IntegralDependenceCertificate> {
    let ambient = ring.ambient();
    let t_gens = t_module.gens();
    let n = t_gens.len();
    let it = ideal.times(t_module)?.plus_gens(ring.defining())?;
    for t in t_gens {
        let lhs = x.mul(t)?;
        if !it.contains(&lhs)? {
            return Err(Error::PreconditionFailed {
                element: x.to_string(),
                check: format!("x*{t} does not lie in I*T modulo the defining ideal"),
            });
        }
    }

    // lifting targets: u * t_j for u in gens(I), then the defining ideal
    let mut targets: Vec<Polynomial> = Vec::new();
    for t in t_gens {
        for u in ideal.gens() {
            targets.push(u.mul(t)?);
        }
    }
    let o = targets.len();
    targets.extend(ring.defining().iter().cloned());

    let mut matrix = vec![vec![Polynomial::zero(ambient); n]; n];
    for (i, t) in t_gens.iter().enumerate() {
        let lhs = x.mul(t)?;
        let cof = express_in_terms(&lhs, &targets, MonomialOrder::GrevLex, GbBudget::from_config())?
            .ok_or_else(|| {
                Error::Internal("lifting failed although the precondition held".into())
            })?;
        for j in 0..n {
            // entry (i, j): sum over generators u of I of cof * u
            let mut a = Polynomial::zero(ambient);
            for (k, u) in ideal.gens().iter().enumerate() {
                let idx = j * ideal.gens().len() + k;
                if idx < o {
                    a = a.add(&cof[idx].mul(u)?)?;
                }
            }
            matrix[i][j] = a;
        }
    }

    // char poly in an extended ring with a fresh last variable
    let lambda = fresh_lambda_name(ambient);
    let mut vars = ambient.vars().to_vec();
    vars.push(lambda.clone());
    let ext = PolyRing::new(ambient.prime(), vars)?;
    let lambda_poly = Polynomial::var(&ext, ext.nvars() - 1);
    let mut m_ext = vec![vec![Polynomial::zero(&ext); n]; n];
    for i in 0..n {
        for j in 0..n {
            let lifted = lift_to(&matrix[i][j], &ext)?;
            m_ext[i][j] = if i == j { lambda_poly.sub(&lifted)? } else { lifted.neg() };
        }
    }
    let char_poly = determinant(&m_ext, &ext)?;

    // the characteristic polynomial evaluated at x must vanish in R
    let mut value = Polynomial::zero(ambient);
    let lambda_idx = ext.nvars() - 1;
    for (m, c) in char_poly.terms() {
        let deg = m.exps()[lambda_idx];
        let mut exps = m.exps().to_vec();
        exps.truncate(lambda_idx);
        let base_term = Polynomial::monomial(ambient, Monomial::from_exps(exps), c);
        value = value.add(&base_term.mul(&x.pow(deg as u64)?)?)?;
    }
    let defining = Ideal::new(ambient, ring.defining().to_vec())?;
    if !defining.contains(&value)? {
        return Err(Error::PreconditionFailed {
            element: x.to_string(),
            check: "characteristic polynomial does not annihilate x (is T faithful?)".into(),
        });
    }

    let cert = IntegralDependenceCertificate {
        degree: n,
        matrix,
        char_poly,
        lambda_ring: ext,
        lambda_var: lambda,
    };
    // coefficient of λ^(n−k) lies in I^k
    for k in 1..=n {
        let coeff = cert.coefficient(k, ambient)?;
        if !ideal.power(k as u32)?.contains(&coeff)? {
            return Err(Error::Internal(format!(
                "characteristic coefficient of index {k} escapes I^{k}"
            )));
        }
    }
    Ok(cert)
}

/// Human-readable certificate summary for the command layer.
pub fn integral_cert_summary(
    x: &Polynomial,
    ideal: &Ideal,
    t_module: &Ideal,
    ring: &RingSpec,
) -> Result<String> {
    let cert = integral_dependence_certificate(x, ideal, t_module, ring)?;
    let mut out = String::new();
    out.push_str(&format!(
        "integral dependence certificate for {x} over {ideal} (T = {t_module})\n"
    ));
    out.push_str(&format!("  degree {}\n", cert.degree));
    out.push_str(&format!(
        "  char poly in {}: {}\n",
        cert.lambda_var, cert.char_poly
    ));
    out.push_str(&format!(
        "  verified: annihilates {x} in the quotient ring; coefficient of index k lies in I^k"
    ));
    Ok(out)
}

fn fresh_lambda_name(ring: &PolyRing) -> String {
    for cand in ["lam", "lam0", "lam1", "lam2"] {
        if ring.var_index(cand).is_none() {
            return cand.to_string();
        }
    }
    let mut k = 3;
    loop {
        let cand = format!("lam{k}");
        if ring.var_index(&cand).is_none() {
            return cand;
        }
        k += 1;
    }
}

fn lift_to(f: &Polynomial, ext: &PolyRing) -> Result<Polynomial> {
    let mut terms = Vec::new();
    for (m, c) in f.terms() {
        let mut exps = m.exps().to_vec();
        exps.resize(ext.nvars(), 0);
        terms.push((Monomial::from_exps(exps), c));
    }
    Ok(Polynomial::from_terms(ext, terms))
}

/// Laplace expansion along the first row; the matrices here are at most 4x4.
fn determinant(m: &[Vec<Polynomial>], ring: &PolyRing) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Ok(Polynomial::one(ring));
    }
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut det = Polynomial::zero(ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let sub = determinant(&minor, ring)?;
        let term = m[0][j].mul(&sub)?;
        det = if j % 2 == 0 { det.add(&term)? } else { det.sub(&term)? };
    }
    Ok(det)
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

    fn three_plane_ring(p: u64) -> RingSpec {
        let r = ring(p, &["x", "y", "z", "w"]);
        RingSpec::new(
            r.clone(),
            vec![poly(&r, "x*y"), poly(&r, "y*z"), poly(&r, "z*w")],
        )
        .unwrap()
    }

    #[test]
    fn bracket_power_basics() {
        let r = ring(3, &["x", "y"]);
        let b = bracket_power(&ideal(&r, &["x", "y"]), 3).unwrap();
        assert!(b.equals(&ideal(&r, &["x^3", "y^3"])).unwrap());

        let unit = bracket_power(&Ideal::unit(&r), 9).unwrap();
        assert!(unit.is_unit_ideal().unwrap());

        assert!(matches!(
            bracket_power(&ideal(&r, &["x"]), 4),
            Err(Error::NotPowerOfP { q: 4, p: 3 })
        ));
    }

    #[test]
    fn bracket_power_of_the_example_sop() {
        for p in [2u64, 3, 5] {
            let r = ring(p, &["x", "y", "z", "w"]);
            let i = ideal(&r, &["x-w", "x-y-z"]);
            let b = bracket_power(&i, p).unwrap();
            let want = Ideal::parse(
                &r,
                &[&format!("x^{p}-w^{p}"), &format!("x^{p}-y^{p}-z^{p}")],
            )
            .unwrap();
            assert!(b.equals(&want).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn bounded_route_in_a_regular_ring() {
        // in F_p[x,y] the ideal (x) is tightly closed, so y fails at q = p
        let r = ring(5, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let v = tc_membership_bounded(&poly(&r, "y"), &ideal(&r, &["x"]), &spec, &Polynomial::one(&r), 3)
            .unwrap();
        assert_eq!(v.status, VerdictStatus::NonMember);
        assert_eq!(v.witness_q, Some(5));
        assert!(replay_non_membership(&poly(&r, "y"), &ideal(&r, &["x"]), &spec, &v).unwrap());
    }

    #[test]
    fn bounded_route_on_a_literal_member() {
        let r = ring(3, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let i = ideal(&r, &["x", "y^2"]);
        let v = tc_membership_bounded(&poly(&r, "x"), &i, &spec, &poly(&r, "y"), 3).unwrap();
        assert_eq!(v.status, VerdictStatus::UnknownUpToBound);
        assert_eq!(v.checked_up_to, Some(27));
    }

    #[test]
    fn bounded_route_on_the_cubical_cone() {
        // z^2 ∈ (x, y)* in F_7[x,y,z]/(x^3+y^3+z^3): the oracle is the raw
        // membership z * z^(2q) ∈ (x^q, y^q, x^3+y^3+z^3) for q = 7, 49, 343
        let r = ring(7, &["x", "y", "z"]);
        let spec = RingSpec::new(r.clone(), vec![poly(&r, "x^3+y^3+z^3")]).unwrap();
        for e in 1..=3u32 {
            let q = 7u64.pow(e);
            let target = Ideal::parse(
                &r,
                &[&format!("x^{q}"), &format!("y^{q}"), "x^3+y^3+z^3"],
            )
            .unwrap();
            let lhs = poly(&r, "z").mul(&poly(&r, "z^2").pow(q as u64).unwrap()).unwrap();
            assert!(target.contains(&lhs).unwrap(), "q = {q}");
        }
        let v = tc_membership_bounded(
            &poly(&r, "z^2"),
            &ideal(&r, &["x", "y"]),
            &spec,
            &poly(&r, "z"),
            3,
        )
        .unwrap();
        assert_eq!(v.status, VerdictStatus::UnknownUpToBound);
    }

    #[test]
    fn invalid_multiplier() {
        let r = ring(3, &["x"]);
        let spec = RingSpec::regular(r.clone());
        let z = Polynomial::zero(&r);
        assert!(matches!(
            tc_membership_bounded(&poly(&r, "x"), &ideal(&r, &["x"]), &spec, &z, 2),
            Err(Error::InvalidMultiplier(_))
        ));
    }

    #[test]
    fn closure_in_a_regular_presentation_is_identity() {
        let r = ring(5, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let i = ideal(&r, &["x^2", "y"]);
        let star = tight_closure_sr(&i, &spec).unwrap();
        assert!(star.equals(&i).unwrap());
    }

    #[test]
    fn maximal_ideal_is_tightly_closed() {
        let spec = three_plane_ring(3);
        let r = spec.ambient();
        let m = ideal(r, &["x", "y", "z", "w"]);
        let star = tight_closure_sr(&m, &spec).unwrap();
        assert!(star.equals(&m).unwrap());
    }

    #[test]
    fn closure_of_the_example_parameter_ideal() {
        // the oracle for this value is the multiplier property
        // τ * I* ⊆ I + defining, checked generator-wise
        for p in [2u64, 3] {
            let spec = three_plane_ring(p);
            let r = spec.ambient();
            let i = ideal(r, &["x-w", "x-y-z"]);
            let star = tight_closure_sr(&i, &spec).unwrap();
            let tau = test_ideal_sr(&spec).unwrap();
            let target = i.plus_gens(spec.defining()).unwrap();
            for g in star.gens() {
                for t in tau.gens() {
                    assert!(target.contains(&t.mul(g).unwrap()).unwrap(), "p = {p}");
                }
            }
            assert!(i.contained_in(&star).unwrap());
            let star2 = tight_closure_sr(&star, &spec).unwrap();
            assert!(star2.equals(&star).unwrap());
        }
    }

    #[test]
    fn test_ideal_of_the_three_plane_ring() {
        for p in [2u64, 3, 5] {
            let spec = three_plane_ring(p);
            let tau = test_ideal_sr(&spec).unwrap();
            let want = ideal(spec.ambient(), &["y", "z", "x*w"]);
            assert!(tau.equals(&want).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn test_ideal_of_a_domain_presentation_is_unit() {
        let r = ring(5, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        assert!(test_ideal_sr(&spec).unwrap().is_unit_ideal().unwrap());
    }

    #[test]
    fn test_ideal_of_the_two_line_ring() {
        // F_p[x,y]/(xy): the formula gives (y) + (x) = (x, y); the colon
        // route with the parameter x + y is the cross-check
        for p in [2u64, 3, 5] {
            let r = ring(p, &["x", "y"]);
            let spec = RingSpec::new(r.clone(), vec![poly(&r, "x*y")]).unwrap();
            let tau = test_ideal_sr(&spec).unwrap();
            let want = ideal(&r, &["x", "y"]);
            assert!(tau.equals(&want).unwrap(), "formula route, p = {p}");

            let colon = parameter_test_ideal(&spec, &[poly(&r, "x+y")], 4).unwrap();
            assert!(colon.ideal.equals(&want).unwrap(), "colon route, p = {p}");
            assert!(colon.stabilized, "p = {p}");
        }
    }

    #[test]
    fn parameter_test_ideal_of_the_three_plane_ring() {
        for p in [2u64, 3] {
            let spec = three_plane_ring(p);
            let r = spec.ambient();
            let sop = vec![poly(r, "x-w"), poly(r, "x-y-z")];
            let result = parameter_test_ideal(&spec, &sop, 4).unwrap();
            let want = ideal(r, &["y", "z", "x*w"]);
            assert!(
                result.ideal.equals(&want).unwrap(),
                "p = {p}: got {}",
                result.ideal
            );
            assert!(result.stabilized, "p = {p}");
        }
    }

    #[test]
    fn parameter_test_ideal_in_a_regular_ring_is_unit() {
        let r = ring(3, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let result = parameter_test_ideal(&spec, &[poly(&r, "x"), poly(&r, "y")], 3).unwrap();
        assert!(result.ideal.is_unit_ideal().unwrap());
    }

    #[test]
    fn parameter_test_ideal_rejects_non_sop() {
        let r = ring(3, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        assert!(matches!(
            parameter_test_ideal(&spec, &[poly(&r, "x")], 3),
            Err(Error::NotSystemOfParameters(_))
        ));
    }

    #[test]
    fn certificate_for_a_literal_member() {
        let r = ring(5, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let i = ideal(&r, &["x"]);
        let t = Ideal::unit(&r);
        let cert = integral_dependence_certificate(&poly(&r, "x"), &i, &t, &spec).unwrap();
        assert_eq!(cert.degree, 1);
        // degree-1 certificate: lambda - a with a = x ∈ I
        let a = cert.coefficient(1, &r).unwrap();
        assert!(i.contains(&a).unwrap());
    }

    #[test]
    fn certificate_for_zero() {
        let r = ring(3, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let i = ideal(&r, &["x", "y"]);
        let t = ideal(&r, &["x", "y"]);
        let z = Polynomial::zero(&r);
        let cert = integral_dependence_certificate(&z, &i, &t, &spec).unwrap();
        assert_eq!(cert.degree, 2);
        for row in &cert.matrix {
            for entry in row {
                assert!(entry.is_zero());
            }
        }
        // char poly is exactly λ^n
        let lam = Polynomial::var(&cert.lambda_ring, cert.lambda_ring.nvars() - 1);
        assert_eq!(cert.char_poly, lam.pow(2).unwrap());
    }

    #[test]
    fn certificate_in_the_three_plane_ring() {
        // sampled closure elements against T = τ: degree is μ(T) = 3
        let spec = three_plane_ring(3);
        let r = spec.ambient();
        let i = ideal(r, &["x-w", "x-y-z"]);
        let star = tight_closure_sr(&i, &spec).unwrap();
        let tau = test_ideal_sr(&spec).unwrap();
        let outside: Vec<&Polynomial> = star
            .gens()
            .iter()
            .filter(|g| !i.plus_gens(spec.defining()).unwrap().contains(g).unwrap())
            .collect();
        assert!(!outside.is_empty());
        for x in outside {
            let cert = integral_dependence_certificate(x, &i, &tau, &spec).unwrap();
            assert_eq!(cert.degree, 3);
        }
    }

    #[test]
    fn certificate_precondition_failure() {
        let r = ring(3, &["x", "y"]);
        let spec = RingSpec::regular(r.clone());
        let i = ideal(&r, &["x"]);
        let t = Ideal::unit(&r);
        let err = integral_dependence_certificate(&poly(&r, "y"), &i, &t, &spec).unwrap_err();
        assert!(matches!(err, Error::PreconditionFailed { .. }));
    }
}
