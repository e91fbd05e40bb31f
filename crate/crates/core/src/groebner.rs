//! Buchberger's algorithm over F_p, normal forms, and cofactor lifting.
//!
//! The instance sizes this crate targets are tiny (a handful of variables,
//! degrees up to a few hundred), so the engine favors auditability over
//! asymptotics: plain Buchberger with the coprime-lcm and chain criteria and
//! normal pair selection, followed by minimalization and inter-reduction to
//! the unique reduced monic basis. Every run is metered: exceeding the
//! configured budget is an explicit error, never a wrong answer.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::fp;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

#[derive(Debug, Clone, Copy)]
pub struct GbBudget {
    pub max_basis: usize,
    pub max_reductions: u64,
}

impl GbBudget {
    pub fn from_config() -> GbBudget {
        let cfg = Config::global();
        GbBudget { max_basis: cfg.gb_max_basis, max_reductions: cfg.gb_max_reductions }
    }
}

struct Meter {
    budget: GbBudget,
    reductions: u64,
}

impl Meter {
    fn new(budget: GbBudget) -> Meter {
        Meter { budget, reductions: 0 }
    }

    fn step(&mut self, basis_len: usize) -> Result<()> {
        self.reductions += 1;
        if self.reductions > self.budget.max_reductions {
            return Err(Error::BudgetExceeded {
                phase: "groebner-basis reduction".into(),
                detail: format!(
                    "{} reduction steps performed, basis size {} at interruption",
                    self.reductions, basis_len
                ),
            });
        }
        Ok(())
    }

    fn check_basis(&self, basis_len: usize) -> Result<()> {
        if basis_len > self.budget.max_basis {
            return Err(Error::BudgetExceeded {
                phase: "groebner-basis growth".into(),
                detail: format!(
                    "basis reached {} elements (cap {}), {} reduction steps performed",
                    basis_len, self.budget.max_basis, self.reductions
                ),
            });
        }
        Ok(())
    }
}

/// Term vector sorted strictly descending under the active order.
#[derive(Debug, Clone, PartialEq, Eq)]
struct OrdPoly {
    terms: Vec<(Monomial, u64)>,
}

impl OrdPoly {
    fn from_poly(f: &Polynomial, order: MonomialOrder) -> OrdPoly {
        let mut terms: Vec<(Monomial, u64)> = f.terms().map(|(m, c)| (m.clone(), c)).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        OrdPoly { terms }
    }

    fn to_poly(&self, ring: &PolyRing) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lt(&self) -> &(Monomial, u64) {
        &self.terms[0]
    }

    fn make_monic(&mut self, p: u64) {
        if let Some(&(_, lc)) = self.terms.first() {
            if lc != 1 {
                let inv = fp::inv(lc, p);
                for (_, c) in &mut self.terms {
                    *c = fp::mul(*c, inv, p);
                }
            }
        }
    }

    /// `self - c * m * other`, merged under `order`.
    fn sub_scaled(&self, other: &OrdPoly, m: &Monomial, c: u64, order: MonomialOrder, p: u64) -> Result<OrdPoly> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let om = other.terms[j].0.mul(m)?;
            match order.cmp(&self.terms[i].0, &om) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let oc = fp::neg(fp::mul(other.terms[j].1, c, p), p);
                    out.push((om, oc));
                    j += 1;
                }
                Ordering::Equal => {
                    let oc = fp::sub(self.terms[i].1, fp::mul(other.terms[j].1, c, p), p);
                    if oc != 0 {
                        out.push((om, oc));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let om = other.terms[j].0.mul(m)?;
            let oc = fp::neg(fp::mul(other.terms[j].1, c, p), p);
            out.push((om, oc));
            j += 1;
        }
        Ok(OrdPoly { terms: out })
    }
}

/// Full reduction: no term of the result is divisible by any basis leading
/// term. Terminates unconditionally (the leading term strictly decreases).
fn reduce_full(
    f: OrdPoly,
    basis: &[OrdPoly],
    order: MonomialOrder,
    p: u64,
    meter: Option<&mut Meter>,
    basis_len: usize,
) -> Result<OrdPoly> {
    let mut meter = meter;
    let mut work = f;
    let mut out: Vec<(Monomial, u64)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = work.lt().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (glm, glc) = g.lt();
            if let Some(shift) = glm.div(&lm) {
                let c = fp::mul(lc, fp::inv(*glc, p), p);
                work = work.sub_scaled(g, &shift, c, order, p)?;
                if let Some(m) = meter.as_deref_mut() {
                    m.step(basis_len)?;
                }
                continue 'outer;
            }
        }
        out.push((lm, lc));
        work.terms.remove(0);
    }
    Ok(OrdPoly { terms: out })
}

/// Same as [`reduce_full`] but records, per basis element, the quotient used.
fn reduce_tracked(
    f: OrdPoly,
    basis: &[OrdPoly],
    order: MonomialOrder,
    p: u64,
    ring: &PolyRing,
) -> Result<(OrdPoly, Vec<Polynomial>)> {
    let mut work = f;
    let mut quotients = vec![Polynomial::zero(ring); basis.len()];
    let mut out: Vec<(Monomial, u64)> = Vec::new();
    'outer: while !work.is_zero() {
        let (lm, lc) = work.lt().clone();
        for (k, g) in basis.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let (glm, glc) = g.lt();
            if let Some(shift) = glm.div(&lm) {
                let c = fp::mul(lc, fp::inv(*glc, p), p);
                work = work.sub_scaled(g, &shift, c, order, p)?;
                quotients[k] = quotients[k].add(&Polynomial::monomial(ring, shift, c))?;
                continue 'outer;
            }
        }
        out.push((lm, lc));
        work.terms.remove(0);
    }
    Ok((OrdPoly { terms: out }, quotients))
}

fn spoly(f: &OrdPoly, g: &OrdPoly, order: MonomialOrder, p: u64) -> Result<OrdPoly> {
    let (flm, flc) = f.lt();
    let (glm, glc) = g.lt();
    let lcm = flm.lcm(glm);
    let fshift = flm.div(&lcm).unwrap();
    let gshift = glm.div(&lcm).unwrap();
    // lcm/lt(f) * f / lc(f) - lcm/lt(g) * g / lc(g)
    let lhs = OrdPoly { terms: vec![(fshift, fp::inv(*flc, p))] };
    let mut prod = Vec::with_capacity(f.terms.len());
    for (m, c) in &f.terms {
        prod.push((m.mul(&lhs.terms[0].0)?, fp::mul(*c, lhs.terms[0].1, p)));
    }
    let scaled_f = OrdPoly { terms: prod };
    scaled_f.sub_scaled(g, &gshift, fp::inv(*glc, p), order, p)
}

struct PendingPair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

#[derive(Default)]
struct PairQueue {
    pending: Vec<PendingPair>,
    members: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn push_pairs(&mut self, basis: &[OrdPoly], new_idx: usize) {
        for i in 0..new_idx {
            if basis[i].is_zero() {
                continue;
            }
            let lcm = basis[i].lt().0.lcm(&basis[new_idx].lt().0);
            let degree = lcm.total_degree();
            self.pending.push(PendingPair { i, j: new_idx, lcm, degree });
            self.members.insert((i, new_idx));
        }
    }

    fn contains(&self, i: usize, j: usize) -> bool {
        self.members.contains(&(i.min(j), i.max(j)))
    }

    fn pop(&mut self, order: MonomialOrder) -> Option<PendingPair> {
        if self.pending.is_empty() {
            return None;
        }
        let pair = pick_pair(&mut self.pending, order);
        self.members.remove(&(pair.i, pair.j));
        Some(pair)
    }
}

fn pick_pair(pending: &mut Vec<PendingPair>, order: MonomialOrder) -> PendingPair {
    let mut best = 0;
    for k in 1..pending.len() {
        let a = &pending[k];
        let b = &pending[best];
        let better = match a.degree.cmp(&b.degree) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match order.cmp(&a.lcm, &b.lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (a.i, a.j) < (b.i, b.j),
            },
        };
        if better {
            best = k;
        }
    }
    pending.swap_remove(best)
}

fn buchberger_inner(
    ring: &PolyRing,
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: GbBudget,
    track: bool,
) -> Result<(Vec<OrdPoly>, Option<Vec<Vec<Polynomial>>>)> {
    let p = ring.prime();
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut cofactors: Vec<Vec<Polynomial>> = Vec::new();
    let mut meter = Meter::new(budget);

    for (idx, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut og = OrdPoly::from_poly(g, order);
        let mut cof = vec![Polynomial::zero(ring); gens.len()];
        if track {
            // record g = 1 * gens[idx] before normalization
            let lc = og.lt().1;
            og.make_monic(p);
            cof[idx] = Polynomial::constant(ring, fp::inv(lc, p));
        } else {
            og.make_monic(p);
        }
        basis.push(og);
        cofactors.push(cof);
    }

    let mut queue = PairQueue::default();
    for j in 1..basis.len() {
        queue.push_pairs(&basis, j);
    }

    while let Some(pair) = queue.pop(order) {
        let (fi, fj) = (&basis[pair.i], &basis[pair.j]);
        // Buchberger's first criterion: coprime leading monomials
        if fi.lt().0.coprime(&fj.lt().0) {
            continue;
        }
        // chain criterion: some k with lt_k | lcm(i,j) and both mixed pairs gone
        let chained = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && !basis[k].is_zero()
                && basis[k].lt().0.divides(&pair.lcm)
                && !queue.contains(k, pair.i)
                && !queue.contains(k, pair.j)
        });
        if chained {
            continue;
        }
        let s = spoly(fi, fj, order, p)?;
        let (mut rem, quot) = if track {
            let (r, q) = reduce_tracked(s, &basis, order, p, ring)?;
            meter.step(basis.len())?;
            (r, Some(q))
        } else {
            let r = reduce_full(s, &basis, order, p, Some(&mut meter), basis.len())?;
            (r, None)
        };
        if rem.is_zero() {
            continue;
        }
        if track {
            // cofactor of the s-polynomial, then subtract the reduction quotients
            let (flm, flc) = basis[pair.i].lt();
            let (glm, glc) = basis[pair.j].lt();
            let fshift = flm.div(&pair.lcm).unwrap();
            let gshift = glm.div(&pair.lcm).unwrap();
            let fterm = Polynomial::monomial(ring, fshift, fp::inv(*flc, p));
            let gterm = Polynomial::monomial(ring, gshift, fp::inv(*glc, p));
            let mut cof = vec![Polynomial::zero(ring); gens.len()];
            for l in 0..gens.len() {
                let mut v = fterm.mul(&cofactors[pair.i][l])?;
                v = v.sub(&gterm.mul(&cofactors[pair.j][l])?)?;
                cof[l] = v;
            }
            if let Some(quot) = quot {
                for (k, q) in quot.into_iter().enumerate() {
                    if q.is_zero() {
                        continue;
                    }
                    for l in 0..gens.len() {
                        cof[l] = cof[l].sub(&q.mul(&cofactors[k][l])?)?;
                    }
                }
            }
            // keep the stored cofactor consistent with the monic remainder
            let lc = rem.lt().1;
            if lc != 1 {
                let inv = fp::inv(lc, p);
                for c in &mut cof {
                    *c = c.scale(inv);
                }
            }
            rem.make_monic(p);
            cofactors.push(cof);
        } else {
            rem.make_monic(p);
        }
        basis.push(rem);
        meter.check_basis(basis.len())?;
        queue.push_pairs(&basis, basis.len() - 1);
    }

    Ok((basis, if track { Some(cofactors) } else { None }))
}

/// Canonical sort for reduced bases: total degree of the leading monomial
/// ascending, then plain lexicographic descending. This is the display order
/// used everywhere a derived ideal is printed.
fn canonical_sort(elements: &mut [Polynomial], order: MonomialOrder) {
    elements.sort_by(|a, b| {
        let la = a.leading_term(order).expect("nonzero").0;
        let lb = b.leading_term(order).expect("nonzero").0;
        la.total_degree()
            .cmp(&lb.total_degree())
            .then_with(|| MonomialOrder::Lex.cmp(lb, la))
    });
}

/// The unique reduced monic Groebner basis of the ideal generated by `gens`.
///
/// Empty output means the zero ideal. Resource exhaustion raises
/// [`Error::BudgetExceeded`] carrying the progress made.
pub fn buchberger(
    ring: &PolyRing,
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: GbBudget,
) -> Result<Vec<Polynomial>> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch(ring.describe(), g.ring().describe()));
        }
    }
    let p = ring.prime();
    let (basis, _) = buchberger_inner(ring, gens, order, budget, false)?;

    // minimalize: drop elements whose leading term another one divides
    let mut keep: Vec<OrdPoly> = Vec::new();
    'cand: for (i, g) in basis.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        for (j, h) in basis.iter().enumerate() {
            if i == j || h.is_zero() {
                continue;
            }
            let divides = h.lt().0.divides(&g.lt().0);
            let strict = h.lt().0 != g.lt().0;
            if divides && (strict || j < i) {
                continue 'cand;
            }
        }
        keep.push(g.clone());
    }

    // inter-reduce tails until stable
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<OrdPoly> =
                keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let mut r = reduce_full(keep[i].clone(), &others, order, p, None, keep.len())?;
            r.make_monic(p);
            if r != keep[i] {
                keep[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    keep.retain(|g| !g.is_zero());

    let mut out: Vec<Polynomial> = keep.iter().map(|g| g.to_poly(ring)).collect();
    canonical_sort(&mut out, order);
    Ok(out)
}

/// A reduced monic Groebner basis under a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub(crate) fn new(ring: PolyRing, order: MonomialOrder, elements: Vec<Polynomial>) -> GroebnerBasis {
        GroebnerBasis { ring, order, elements }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_term(self.order).expect("basis elements are nonzero").0.clone())
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }
}

/// The unique remainder of `f` modulo `basis`: no term of the result is
/// divisible by any leading term of the basis.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring() != basis.ring() {
        return Err(Error::RingMismatch(f.ring().describe(), basis.ring().describe()));
    }
    let order = basis.order;
    let p = basis.ring.prime();
    let ob: Vec<OrdPoly> = basis.elements.iter().map(|g| OrdPoly::from_poly(g, order)).collect();
    let r = reduce_full(OrdPoly::from_poly(f, order), &ob, order, p, None, ob.len())?;
    Ok(r.to_poly(&basis.ring))
}

/// Write `f` as a combination of `gens`, or `None` when `f` is not in the
/// ideal they generate. The returned cofactors satisfy
/// `f = sum_k cof[k] * gens[k]` exactly (asserted before returning).
pub fn express_in_terms(
    f: &Polynomial,
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: GbBudget,
) -> Result<Option<Vec<Polynomial>>> {
    let ring = f.ring().clone();
    for g in gens {
        if g.ring() != &ring {
            return Err(Error::RingMismatch(ring.describe(), g.ring().describe()));
        }
    }
    let p = ring.prime();
    let (basis, cof) = buchberger_inner(&ring, gens, order, budget, true)?;
    let cof = cof.expect("tracking enabled");
    let (rem, quot) = reduce_tracked(OrdPoly::from_poly(f, order), &basis, order, p, &ring)?;
    if !rem.is_zero() {
        return Ok(None);
    }
    let mut out = vec![Polynomial::zero(&ring); gens.len()];
    for (k, q) in quot.into_iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        for l in 0..gens.len() {
            out[l] = out[l].add(&q.mul(&cof[k][l])?)?;
        }
    }
    let mut check = Polynomial::zero(&ring);
    for (c, g) in out.iter().zip(gens) {
        check = check.add(&c.mul(g)?)?;
    }
    if &check != f {
        return Err(Error::Internal("cofactor lifting failed to reproduce the input".into()));
    }
    Ok(Some(out))
}
