//! Top local cohomology as a direct limit, with its Frobenius action.
//!
//! For a Cohen-Macaulay quotient with a system of parameters f_1, .., f_d,
//! H^d_m is modeled as the limit of R/I_t over I_t = (f_1^t, .., f_d^t), the
//! transition maps being multiplication by f_1 * .. * f_d. When the s.o.p.
//! is a regular sequence the transition maps are injective, so a class is
//! zero iff its representative already lies in I_t plus the defining ideal.
//! The constructor verifies regularity operationally (colon checks) and the
//! equality tests refuse to run without it.

use std::fmt;
use std::sync::Arc;

use crate::closure::test_ideal_sr;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::groebner::normal_form;
use crate::ideal::{is_zero_dimensional, Ideal};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingSpec};

/// A verified system of parameters for a quotient presentation.
#[derive(Debug, Clone)]
pub struct SopData {
    ring: RingSpec,
    sop: Vec<Polynomial>,
    regularity_checked: bool,
}

impl SopData {
    /// Verify and wrap a system of parameters:
    /// 1. the quotient modulo all of (f_1..f_d) is zero-dimensional,
    /// 2. no (d−1)-element subset already achieves that (so d matches the
    ///    dimension of the quotient ring),
    /// 3. the sequence is regular: ((f_1..f_{i−1}) + defining) : f_i equals
    ///    (f_1..f_{i−1}) + defining for each i.
    pub fn new(ring: RingSpec, sop: Vec<Polynomial>) -> Result<SopData> {
        if sop.is_empty() {
            return Err(Error::NotSystemOfParameters("empty parameter list".into()));
        }
        for f in &sop {
            if f.ring() != ring.ambient() {
                return Err(Error::RingMismatch(
                    ring.ambient().describe(),
                    f.ring().describe(),
                ));
            }
        }
        let ambient = ring.ambient();
        let full = Ideal::new(ambient, sop.to_vec())?;
        if !is_zero_dimensional(&ring, &full)? {
            return Err(Error::NotSystemOfParameters(
                "the quotient modulo the full parameter list is not zero-dimensional".into(),
            ));
        }
        let d = sop.len();
        for skip in 0..d {
            let subset: Vec<Polynomial> = sop
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, f)| f.clone())
                .collect();
            let part = Ideal::new(ambient, subset)?;
            if is_zero_dimensional(&ring, &part)? {
                return Err(Error::NotSystemOfParameters(format!(
                    "dropping {} still leaves a zero-dimensional quotient; \
                     the list is longer than the dimension",
                    sop[skip]
                )));
            }
        }
        for i in 0..d {
            let mut prefix = sop[..i].to_vec();
            prefix.extend(ring.defining().iter().cloned());
            let prefix_ideal = Ideal::new(ambient, prefix)?;
            let single = Ideal::new(ambient, vec![sop[i].clone()])?;
            let colon = prefix_ideal.colon(&single)?;
            if !colon.equals(&prefix_ideal)? {
                return Err(Error::NotSystemOfParameters(format!(
                    "{} is a zerodivisor modulo its predecessors; \
                     the sequence is not regular",
                    sop[i]
                )));
            }
        }
        Ok(SopData { ring, sop, regularity_checked: true })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn sop(&self) -> &[Polynomial] {
        &self.sop
    }

    pub fn dimension(&self) -> usize {
        self.sop.len()
    }

    pub fn regularity_checked(&self) -> bool {
        self.regularity_checked
    }

    /// The level ideal I_t = (f_1^t, .., f_d^t) plus the defining ideal.
    pub fn level_ideal(&self, t: u32) -> Result<Ideal> {
        let gens = self
            .sop
            .iter()
            .map(|f| f.pow(t as u64))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ring.ambient(), gens)?.plus_gens(self.ring.defining())
    }

    /// The transition multiplier f_1 * .. * f_d.
    pub fn transition_multiplier(&self) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.ring.ambient());
        for f in &self.sop {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }
}

/// An element of H^d_m presented as a representative at a level of the
/// direct system: the class of `representative` in R/I_level.
#[derive(Debug, Clone)]
pub struct LocalCohomClass {
    representative: Polynomial,
    level: u32,
    sop: Arc<SopData>,
}

impl LocalCohomClass {
    pub fn representative(&self) -> &Polynomial {
        &self.representative
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn sop(&self) -> &Arc<SopData> {
        &self.sop
    }
}

impl fmt::Display for LocalCohomClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} at level {}]", self.representative, self.level)
    }
}

fn check_level(level: u32) -> Result<()> {
    let cap = Config::global().level_cap;
    if (level as u64) > cap {
        return Err(Error::LevelCapExceeded { level: level as u64, cap });
    }
    Ok(())
}

/// The class of `r` in R/I_t, stored in normal form modulo I_t plus the
/// defining ideal.
pub fn make_class(r: &Polynomial, t: u32, sop: &Arc<SopData>) -> Result<LocalCohomClass> {
    if t < 1 {
        return Err(Error::Range("levels start at 1".into()));
    }
    check_level(t)?;
    let basis = sop.level_ideal(t)?.groebner_basis(MonomialOrder::GrevLex)?;
    let representative = normal_form(r, &basis)?;
    Ok(LocalCohomClass { representative, level: t, sop: sop.clone() })
}

/// A class vanishes iff its representative lies in the level ideal; with a
/// regular s.o.p. the transition maps are injective, so no level-raising is
/// needed.
pub fn class_is_zero(class: &LocalCohomClass) -> Result<bool> {
    if !class.sop.regularity_checked() {
        return Err(Error::UnsupportedInput(
            "equality tests need a verified regular sequence".into(),
        ));
    }
    Ok(class.representative.is_zero())
}

/// Equality through the direct system: (r, t) equals (r', t') with t ≤ t'
/// iff (f_1..f_d)^(t'−t) * r − r' vanishes in R/I_t'.
pub fn classes_equal(a: &LocalCohomClass, b: &LocalCohomClass) -> Result<bool> {
    if !Arc::ptr_eq(&a.sop, &b.sop) && a.sop.sop() != b.sop.sop() {
        return Err(Error::UnsupportedInput(
            "classes live in different direct systems".into(),
        ));
    }
    let (lo, hi) = if a.level <= b.level { (a, b) } else { (b, a) };
    let shift = lo
        .sop
        .transition_multiplier()?
        .pow((hi.level - lo.level) as u64)?;
    let moved = shift.mul(&lo.representative)?;
    let diff = moved.sub(&hi.representative)?;
    hi.sop.level_ideal(hi.level)?.contains(&diff)
}

/// The Frobenius action: representative to its p-th power, level times p.
pub fn frobenius_class(class: &LocalCohomClass) -> Result<LocalCohomClass> {
    let p = class.sop.ring().prime();
    let new_level = class
        .level
        .checked_mul(u32::try_from(p).map_err(|_| Error::ExponentOverflow)?)
        .ok_or(Error::ExponentOverflow)?;
    check_level(new_level)?;
    let rep = class.representative.frobenius_power(1)?;
    make_class(&rep, new_level, &class.sop)
}

/// True iff g * r lies in I_t plus the defining ideal for every generator g.
pub fn annihilates(ideal: &Ideal, class: &LocalCohomClass) -> Result<bool> {
    let level = class.sop.level_ideal(class.level)?;
    for g in ideal.gens() {
        if !level.contains(&g.mul(&class.representative)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One audit line: a named assertion, the data it was run on, the verdict.
#[derive(Debug, Clone)]
pub struct AuditRecord {
    pub assertion: String,
    pub inputs: String,
    pub verdict: bool,
    pub anchor: String,
}

impl AuditRecord {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "assertion": self.assertion,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "paper_anchor": self.anchor,
        })
    }
}

/// Everything the F-stability demonstration asserts, with one audit record
/// per underlying membership.
#[derive(Debug, Clone)]
pub struct FStabilityReport {
    pub prime: u64,
    pub ring: RingSpec,
    pub tau: Ideal,
    pub minimal_primes: Vec<Ideal>,
    pub eta: LocalCohomClass,
    pub frobenius_eta: LocalCohomClass,
    pub records: Vec<AuditRecord>,
}

impl FStabilityReport {
    pub fn all_hold(&self) -> bool {
        self.records.iter().all(|r| r.verdict)
    }
}

/// The quotient of F_p[x,y,z,w] by (xy, yz, zw): three planes glued along
/// lines, the running counterexample ring.
pub fn three_plane_ring(p: u64) -> Result<RingSpec> {
    let ambient = PolyRing::new(p, vec!["x".into(), "y".into(), "z".into(), "w".into()])?;
    let gens = vec![
        Polynomial::parse(&ambient, "x*y")?,
        Polynomial::parse(&ambient, "y*z")?,
        Polynomial::parse(&ambient, "z*w")?,
    ];
    RingSpec::new(ambient, gens)
}

/// Build the three-plane ring at the given prime and verify the failure of
/// F-stability for the annihilator of the parameter test ideal:
///
/// with τ = (y, z, xw) and η the class of (xw)^(p−1) at level p,
/// τ·η = 0 and η ≠ 0, yet τ·F(η) ≠ 0.
///
/// Every underlying ideal membership lands in the report; any assertion
/// failing is an error naming the step.
pub fn fstability_counterexample(p: u64) -> Result<FStabilityReport> {
    let ring = three_plane_ring(p)?;
    let ambient = ring.ambient().clone();
    let mut records = Vec::new();

    macro_rules! assert_step {
        ($name:expr, $inputs:expr, $anchor:expr, $value:expr, $expect:expr) => {{
            let got: bool = $value;
            records.push(AuditRecord {
                assertion: $name.to_string(),
                inputs: $inputs,
                verdict: got == $expect,
                anchor: $anchor.to_string(),
            });
            if got != $expect {
                return Err(Error::CounterexampleFailed { step: $name.to_string() });
            }
        }};
    }

    // minimal primes
    let primes = crate::closure::minimal_primes(&ring)?;
    let expected_primes = [
        Ideal::parse(&ambient, &["x", "z"])?,
        Ideal::parse(&ambient, &["y", "z"])?,
        Ideal::parse(&ambient, &["y", "w"])?,
    ];
    let primes_match = primes.len() == expected_primes.len()
        && expected_primes.iter().all(|e| {
            primes.iter().any(|p| p.equals(e).unwrap_or(false))
        });
    assert_step!(
        "minimal-primes",
        format!("defining ideal {}", Ideal::new(&ambient, ring.defining().to_vec())?),
        "minimal-primes-of-three-planes",
        primes_match,
        true
    );

    // test ideal by the intersection formula
    let tau = test_ideal_sr(&ring)?;
    let tau_expected = Ideal::parse(&ambient, &["y", "z", "x*w"])?;
    assert_step!(
        "test-ideal-formula",
        format!("computed {tau}"),
        "test-ideal-value",
        tau.equals(&tau_expected)?,
        true
    );

    // the parameter setup
    let sop = vec![
        Polynomial::parse(&ambient, "x-w")?,
        Polynomial::parse(&ambient, "x-y-z")?,
    ];
    let sop_data = Arc::new(SopData::new(ring.clone(), sop)?);
    let level_p = u32::try_from(p).map_err(|_| Error::ExponentOverflow)?;
    let eta_rep = Polynomial::parse(&ambient, "x*w")?.pow(p - 1)?;
    let eta = make_class(&eta_rep, level_p, &sop_data)?;

    // τ annihilates η; the irreducible part is (xw)^p ∈ I_p + defining
    assert_step!(
        "tau-annihilates-eta",
        format!("tau {tau}, eta {eta}"),
        "tau-kills-eta",
        annihilates(&tau, &eta)?,
        true
    );
    let bracket_p = sop_data.level_ideal(level_p)?;
    assert_step!(
        "xw-power-membership",
        format!("(x*w)^{p} against {bracket_p}"),
        "bracket-membership",
        bracket_p.contains(&Polynomial::parse(&ambient, "x*w")?.pow(p)?)?,
        true
    );

    // η itself does not vanish
    assert_step!(
        "eta-nonzero",
        format!("eta {eta}"),
        "eta-does-not-vanish",
        class_is_zero(&eta)?,
        false
    );

    // F(η) escapes: τ·F(η) ≠ 0
    let feta = frobenius_class(&eta)?;
    let expected_rep = Polynomial::parse(&ambient, "x*w")?.pow(p * (p - 1))?;
    let expected_feta = make_class(&expected_rep, level_p * level_p, &sop_data)?;
    assert_step!(
        "frobenius-eta-form",
        format!("F(eta) {feta}"),
        "frobenius-image-form",
        classes_equal(&feta, &expected_feta)?,
        true
    );
    assert_step!(
        "tau-misses-frobenius-eta",
        format!("tau {tau}, F(eta) {feta}"),
        "tau-does-not-kill-frobenius-image",
        annihilates(&tau, &feta)?,
        false
    );

    // the failing multiplication, explicitly: xw * (xw)^(p(p−1)) outside
    // the level-p^2 ideal
    let q2 = p * p;
    let level_q2 = sop_data.level_ideal(level_p * level_p)?;
    let big = Polynomial::parse(&ambient, "x*w")?.pow(p * (p - 1) + 1)?;
    assert_step!(
        "frobenius-escape-membership",
        format!("(x*w)^{} against {level_q2}", p * (p - 1) + 1),
        "escape-non-membership",
        level_q2.contains(&big)?,
        false
    );

    // independent oracle: set y = z = 0 and ask the two-variable question
    // (xw)^(p(p−1)+1) ∈ (x^(p^2) − w^(p^2), x^(p^2)) = (x^(p^2), w^(p^2))
    let plane = PolyRing::new(p, vec!["x".into(), "w".into()])?;
    let cut = big.substitute_zero(&[1, 2]).project_to(&plane)?;
    let plane_ideal = Ideal::parse(
        &plane,
        &[&format!("x^{q2}-w^{q2}"), &format!("x^{q2}")],
    )?;
    assert_step!(
        "substitution-oracle",
        format!("{cut} against {plane_ideal} in {plane}"),
        "two-variable-substitution-check",
        plane_ideal.contains(&cut)?,
        false
    );

    Ok(FStabilityReport {
        prime: p,
        ring,
        tau,
        minimal_primes: primes,
        eta,
        frobenius_eta: feta,
        records,
    })
}
