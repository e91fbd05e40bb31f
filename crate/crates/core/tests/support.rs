//! Shared helpers for the integration suites: ring construction and
//! seeded random generators for polynomials and ideals.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use charp_closure_lab::{Ideal, Monomial, PolyRing, Polynomial, RingSpec};

pub fn ring(p: u64, vars: &[&str]) -> PolyRing {
    PolyRing::new(p, vars.iter().map(|s| s.to_string()).collect()).unwrap()
}

pub fn poly(r: &PolyRing, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

pub fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
    Ideal::parse(r, gens).unwrap()
}

pub fn three_plane_ring(p: u64) -> RingSpec {
    charp_closure_lab::three_plane_ring(p).unwrap()
}

/// A random monomial of total degree exactly `deg`.
pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, deg: u32) -> Monomial {
    let mut exps = vec![0u32; nvars];
    for _ in 0..deg {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exps(exps)
}

/// A random nonzero polynomial with up to `max_terms` terms of total degree
/// at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, r: &PolyRing, max_terms: usize, max_deg: u32) -> Polynomial {
    loop {
        let nterms = rng.gen_range(1..=max_terms);
        let terms: Vec<(Monomial, u64)> = (0..nterms)
            .map(|_| {
                let deg = rng.gen_range(0..=max_deg);
                let coeff = rng.gen_range(1..r.prime());
                (random_monomial(rng, r.nvars(), deg), coeff)
            })
            .collect();
        let f = Polynomial::from_terms(r, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random ideal with 1..=`max_gens` generators.
pub fn random_ideal(rng: &mut ChaCha8Rng, r: &PolyRing, max_gens: usize, max_terms: usize, max_deg: u32) -> Ideal {
    let ngens = rng.gen_range(1..=max_gens);
    let gens: Vec<Polynomial> = (0..ngens).map(|_| random_poly(rng, r, max_terms, max_deg)).collect();
    Ideal::new(r, gens).unwrap()
}

/// A random Stanley-Reisner presentation: a quotient by 1..=`max_gens`
/// squarefree monomials, none of them constant.
pub fn random_sr_ring(rng: &mut ChaCha8Rng, p: u64, nvars: usize, max_gens: usize) -> RingSpec {
    let names: Vec<String> = (0..nvars).map(|i| format!("v{i}")).collect();
    let r = PolyRing::new(p, names).unwrap();
    let ngens = rng.gen_range(1..=max_gens);
    let mut gens = Vec::new();
    for _ in 0..ngens {
        let mut exps = vec![0u32; nvars];
        let size = rng.gen_range(1..=nvars.min(3));
        while exps.iter().sum::<u32>() < size as u32 {
            exps[rng.gen_range(0..nvars)] = 1;
        }
        gens.push(Polynomial::monomial(&r, Monomial::from_exps(exps), 1));
    }
    RingSpec::new(r, gens).unwrap()
}
