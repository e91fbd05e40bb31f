//! Property tests for the algebraic laws the engine rests on.

mod support;

use proptest::prelude::*;

use charp_closure_lab::dsl::parse_polynomial;
use charp_closure_lab::{bracket_power, Ideal, Monomial, PolyRing, Polynomial};

fn ring_strategy() -> impl Strategy<Value = PolyRing> {
    (prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], 1usize..=3).prop_map(|(p, nvars)| {
        let names: Vec<String> = ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect();
        PolyRing::new(p, names).unwrap()
    })
}

fn poly_strategy(ring: PolyRing) -> impl Strategy<Value = Polynomial> {
    let nvars = ring.nvars();
    let p = ring.prime();
    proptest::collection::vec(
        (proptest::collection::vec(0u32..4, nvars), 0..p),
        0..5,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|(exps, c)| (Monomial::from_exps(exps), c))
                .collect(),
        )
    })
}

fn ring_and_polys(n: usize) -> impl Strategy<Value = (PolyRing, Vec<Polynomial>)> {
    ring_strategy().prop_flat_map(move |r| {
        let polys = proptest::collection::vec(poly_strategy(r.clone()), n);
        (Just(r), polys)
    })
}

proptest! {
    #[test]
    fn ring_laws((_r, ps) in ring_and_polys(3)) {
        let (f, g, h) = (&ps[0], &ps[1], &ps[2]);
        prop_assert_eq!(f.add(g).unwrap(), g.add(f).unwrap());
        prop_assert_eq!(f.mul(g).unwrap(), g.mul(f).unwrap());
        prop_assert_eq!(f.add(&g.add(h).unwrap()).unwrap(), f.add(g).unwrap().add(h).unwrap());
        prop_assert_eq!(f.mul(&g.mul(h).unwrap()).unwrap(), f.mul(g).unwrap().mul(h).unwrap());
        prop_assert_eq!(
            f.mul(&g.add(h).unwrap()).unwrap(),
            f.mul(g).unwrap().add(&f.mul(h).unwrap()).unwrap()
        );
    }

    #[test]
    fn frobenius_is_a_ring_map((_r, ps) in ring_and_polys(2), e in 0u32..=2) {
        let (f, g) = (&ps[0], &ps[1]);
        let fe = f.frobenius_power(e).unwrap();
        let ge = g.frobenius_power(e).unwrap();
        prop_assert_eq!(f.mul(g).unwrap().frobenius_power(e).unwrap(), fe.mul(&ge).unwrap());
        prop_assert_eq!(f.add(g).unwrap().frobenius_power(e).unwrap(), fe.add(&ge).unwrap());
    }

    #[test]
    fn canonical_form_round_trips((r, ps) in ring_and_polys(1)) {
        let f = &ps[0];
        let text = f.to_string();
        let back = parse_polynomial(&r, &text).unwrap();
        prop_assert_eq!(&back, f);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn bracket_power_is_well_defined((r, ps) in ring_and_polys(3), e in 1u32..=2) {
        // regenerate the same ideal with a redundant combination adjoined;
        // the bracket powers must agree as ideals
        let gens: Vec<Polynomial> = ps.iter().filter(|f| !f.is_zero()).cloned().collect();
        prop_assume!(!gens.is_empty());
        let q = r.prime().pow(e);
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let combo = gens[0].mul(&ps[1]).unwrap().add(&gens[gens.len() - 1]).unwrap();
        let mut regenerated = gens.clone();
        regenerated.push(combo);
        let j = Ideal::new(&r, regenerated).unwrap();
        prop_assert!(i.equals(&j).unwrap());
        let bi = bracket_power(&i, q).unwrap();
        let bj = bracket_power(&j, q).unwrap();
        prop_assert!(bi.equals(&bj).unwrap());
    }

    #[test]
    fn parsing_is_total(source in "[ -~]{0,60}") {
        // arbitrary printable junk either parses or produces a located
        // diagnostic; it never panics
        match charp_closure_lab::dsl::parse_program(&source) {
            Ok(_) => {}
            Err(charp_closure_lab::Error::Parse(d)) => {
                prop_assert!(d.line >= 1);
                prop_assert!(d.col >= 1);
            }
            Err(other) => prop_assert!(false, "non-diagnostic failure: {other}"),
        }
    }

    #[test]
    fn groebner_bases_are_canonical((r, ps) in ring_and_polys(3)) {
        let gens: Vec<Polynomial> = ps.iter().filter(|f| !f.is_zero()).cloned().collect();
        prop_assume!(!gens.is_empty());
        let mut permuted = gens.clone();
        permuted.reverse();
        let a = Ideal::new(&r, gens).unwrap();
        let b = Ideal::new(&r, permuted).unwrap();
        let ba = a.groebner_basis(charp_closure_lab::MonomialOrder::GrevLex).unwrap();
        let bb = b.groebner_basis(charp_closure_lab::MonomialOrder::GrevLex).unwrap();
        prop_assert_eq!(ba.elements(), bb.elements());
    }
}
