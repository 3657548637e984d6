//! Property tests for the algebra kernel: ring and order axioms, text
//! round-trips, division invariants, basis correctness, and the
//! consistency of membership with certificate lifting.

use mmcalc::groebner::{reduce, Config};
use mmcalc::ideal::{Ideal, Primality};
use mmcalc::ring::{
    parse_poly, Field, Monomial, MonomialOrder, Polynomial, RingContext,
};
use proptest::prelude::*;
use std::cmp::Ordering;
use std::sync::Arc;

const NVARS: usize = 4;

fn ring_q() -> Arc<RingContext> {
    RingContext::new(
        vec!["x".into(), "y".into(), "z".into(), "w".into()],
        Field::Rationals,
    )
    .unwrap()
}

fn ring_gf() -> Arc<RingContext> {
    RingContext::new(
        vec!["x".into(), "y".into(), "z".into(), "w".into()],
        Field::Prime(13),
    )
    .unwrap()
}

prop_compose! {
    fn arb_monomial()(exps in proptest::collection::vec(0u32..4, NVARS)) -> Monomial {
        Monomial::new(exps)
    }
}

prop_compose! {
    fn arb_terms()(terms in proptest::collection::vec(
        ((-6i64..=6), proptest::collection::vec(0u32..3, NVARS)),
        0..5,
    )) -> Vec<(i64, Vec<u32>)> {
        terms
    }
}

fn poly_from(ring: &Arc<RingContext>, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(c, e)| (ring.field().scalar_from_i64(*c), Monomial::new(e.clone())))
            .collect(),
    )
}

prop_compose! {
    fn arb_rational_poly()(
        terms in proptest::collection::vec(
            ((-6i64..=6), (1i64..=4), proptest::collection::vec(0u32..3, NVARS)),
            0..5,
        )
    ) -> Vec<(i64, i64, Vec<u32>)> {
        terms
    }
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::Grevlex,
        MonomialOrder::Lex,
        MonomialOrder::Block { split: 1 },
        MonomialOrder::Block { split: 2 },
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in arb_terms(), b in arb_terms(), c in arb_terms()) {
        for ring in [ring_q(), ring_gf()] {
            let p = poly_from(&ring, &a);
            let q = poly_from(&ring, &b);
            let r = poly_from(&ring, &c);
            prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
            prop_assert_eq!(p.add(&q), q.add(&p));
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            prop_assert!(p.add(&p.neg()).is_zero());
        }
    }

    #[test]
    fn order_axioms(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
        for order in orders() {
            // Antisymmetry of the comparison.
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&b, &a).reverse());
            prop_assert_eq!(order.cmp(&a, &a), Ordering::Equal);
            // Transitivity.
            if order.cmp(&a, &b) != Ordering::Greater && order.cmp(&b, &c) != Ordering::Greater {
                prop_assert_ne!(order.cmp(&a, &c), Ordering::Greater);
            }
            // Multiplicativity.
            prop_assert_eq!(order.cmp(&a, &b), order.cmp(&a.mul(&c), &b.mul(&c)));
            // 1 is minimal.
            let one = Monomial::one(NVARS);
            prop_assert_ne!(order.cmp(&one, &a), Ordering::Greater);
        }
    }

    #[test]
    fn block_order_eliminates(
        mut e1 in proptest::collection::vec(0u32..4, NVARS),
        e2 in proptest::collection::vec(0u32..4, NVARS),
        t_exp in 1u32..4,
    ) {
        // m1 touches the eliminated first variable, m2 does not.
        e1[0] = t_exp;
        let m1 = Monomial::new(e1);
        let mut e2 = e2;
        e2[0] = 0;
        let m2 = Monomial::new(e2);
        let order = MonomialOrder::Block { split: 1 };
        prop_assert_eq!(order.cmp(&m1, &m2), Ordering::Greater);
    }

    #[test]
    fn render_parse_round_trip(terms in arb_rational_poly()) {
        let ring = ring_q();
        let p = Polynomial::from_terms(
            &ring,
            terms
                .iter()
                .map(|(n, d, e)| {
                    let c = ring.field().scalar_from_i64(*n)
                        .div(&ring.field().scalar_from_i64(*d));
                    (c, Monomial::new(e.clone()))
                })
                .collect(),
        );
        let back = parse_poly(&p.to_string(), &ring).unwrap();
        prop_assert_eq!(back, p);
        let gf = ring_gf();
        let q = poly_from(&gf, &terms.iter().map(|(n, _, e)| (*n, e.clone())).collect::<Vec<_>>());
        let back = parse_poly(&q.to_string(), &gf).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn division_invariants(
        f in arb_terms(),
        divs in proptest::collection::vec(arb_terms(), 1..4,),
    ) {
        let ring = ring_q();
        let f = poly_from(&ring, &f);
        let divisors: Vec<Polynomial> = divs
            .iter()
            .map(|d| poly_from(&ring, d))
            .filter(|d| !d.is_zero())
            .collect();
        prop_assume!(!divisors.is_empty());
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let res = reduce(&f, &divisors, order);
            let mut acc = res.remainder.clone();
            for (q, d) in res.cofactors.iter().zip(divisors.iter()) {
                acc = acc.add(&q.mul(d));
            }
            prop_assert_eq!(&acc, &f, "re-expansion identity");
            for (_, m) in res.remainder.terms() {
                for d in &divisors {
                    prop_assert!(!d.leading_term(order).unwrap().1.divides(m));
                }
            }
            // Cofactor leads stay below the dividend's lead.
            if let Some((_, flm)) = f.leading_term(order) {
                for (q, d) in res.cofactors.iter().zip(divisors.iter()) {
                    if let Some((_, qlm)) = q.leading_term(order) {
                        let prod = qlm.mul(d.leading_term(order).unwrap().1);
                        prop_assert_ne!(order.cmp(&prod, flm), Ordering::Greater);
                    }
                }
            }
            let again = reduce(&res.remainder, &divisors, order);
            prop_assert_eq!(again.remainder, res.remainder, "idempotence");
        }
    }

    #[test]
    fn groebner_basis_definition(gens in proptest::collection::vec(arb_terms(), 1..4)) {
        let ring = ring_q();
        let cfg = Config::default();
        let gens: Vec<Polynomial> = gens
            .iter()
            .map(|g| poly_from(&ring, g))
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&ring, gens.clone());
        let gb = ideal.reduced_gb(MonomialOrder::Grevlex, &cfg, false).unwrap();
        // Every generator reduces to zero.
        for g in &gens {
            prop_assert!(ideal.member(g, &cfg).unwrap());
        }
        // Every S-polynomial of basis pairs reduces to zero.
        let elems = &gb.elements;
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let (ci, mi) = elems[i].leading_term(gb.order).unwrap();
                let (cj, mj) = elems[j].leading_term(gb.order).unwrap();
                let lcm = mi.lcm(mj);
                let ui = lcm.div(mi).unwrap();
                let uj = lcm.div(mj).unwrap();
                let s = elems[i]
                    .mul_term(&ci.inv(), &ui)
                    .sub(&elems[j].mul_term(&cj.inv(), &uj));
                let nf = reduce(&s, elems, gb.order).remainder;
                prop_assert!(nf.is_zero(), "S-pair ({i},{j}) does not vanish");
            }
        }
    }

    #[test]
    fn membership_matches_certification(
        gens in proptest::collection::vec(arb_terms(), 1..3),
        cofs in proptest::collection::vec(arb_terms(), 1..3),
        probe in arb_terms(),
    ) {
        let ring = ring_q();
        let cfg = Config::default();
        let gens: Vec<Polynomial> = gens
            .iter()
            .map(|g| poly_from(&ring, g))
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let ideal = Ideal::new(&ring, gens.clone());
        // A guaranteed member from random cofactors.
        let mut member = Polynomial::zero(&ring);
        for (q, g) in cofs.iter().zip(gens.iter()) {
            member = member.add(&poly_from(&ring, q).mul(g));
        }
        prop_assert!(ideal.member(&member, &cfg).unwrap());
        let cert = ideal.lift_certificate(&member, &cfg).unwrap();
        let mut acc = Polynomial::zero(&ring);
        for (q, g) in cert.cofactors.iter().zip(gens.iter()) {
            acc = acc.add(&q.mul(g));
        }
        prop_assert_eq!(acc, member);
        // An arbitrary probe: certification succeeds exactly on members.
        let probe = poly_from(&ring, &probe);
        let is_member = ideal.member(&probe, &cfg).unwrap();
        prop_assert_eq!(ideal.lift_certificate(&probe, &cfg).is_ok(), is_member);
    }

    #[test]
    fn dimension_is_antitone(
        a in proptest::collection::vec(arb_terms(), 1..3),
        b in proptest::collection::vec(arb_terms(), 1..3),
    ) {
        let ring = ring_q();
        let cfg = Config::default();
        let small = Ideal::new(&ring, a.iter().map(|g| poly_from(&ring, g)).collect());
        let large = small.sum(&Ideal::new(&ring, b.iter().map(|g| poly_from(&ring, g)).collect()));
        let dim_small = small.dimension(&cfg);
        let dim_large = large.dimension(&cfg);
        match (dim_small, dim_large) {
            (Ok(ds), Ok(dl)) => prop_assert!(dl <= ds),
            (Err(_), _) => {} // unit ideal: containment gives nothing to compare
            (Ok(_), Err(_)) => {} // large became the unit ideal
        }
    }

    #[test]
    fn reducible_products_are_never_proven_prime(
        f in arb_terms(),
        g in arb_terms(),
    ) {
        let ring = ring_q();
        let f = poly_from(&ring, &f);
        let g = poly_from(&ring, &g);
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assume!(!f.is_constant() && !g.is_constant());
        let product = Ideal::new(&ring, vec![f.mul(&g)]);
        prop_assert_eq!(product.structural_primality(), Primality::Unknown);
    }
}
