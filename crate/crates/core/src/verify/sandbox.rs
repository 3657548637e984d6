//! Randomized law checking on small ideals. Everything is driven by a
//! seeded generator, so a given (law, seed, case count) always replays the
//! same instances.

use crate::groebner::{reduce, Config};
use crate::ideal::Ideal;
use crate::ring::{Field, Monomial, MonomialOrder, Polynomial, RingContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// The laws the sandbox can exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// sum(cofactor_i * divisor_i) + remainder = dividend, remainder fully
    /// reduced, and reduction of the remainder is the identity.
    DivisionReexpansion,
    /// The reduced basis is invariant under permuting and duplicating the
    /// generator list.
    ReducedGbUniqueness,
    /// Membership in an intersection is the conjunction of memberships.
    IntersectMemberCoherence,
    /// (f) * (I : f) lies inside I and I : f contains I.
    QuotientLaws,
    /// The saturation is stable under one more quotient.
    SaturationStability,
    /// (I + I') cap I'' = I + (I' cap I'') whenever I lies inside I''.
    ModularLaw,
    /// (x) cap I = x (I : x).
    PrincipalColon,
    /// I = (I : x^k) cap (I + (x^k)) at the stabilization exponent.
    ColonSplit,
}

pub const ALL_LAWS: [Law; 8] = [
    Law::DivisionReexpansion,
    Law::ReducedGbUniqueness,
    Law::IntersectMemberCoherence,
    Law::QuotientLaws,
    Law::SaturationStability,
    Law::ModularLaw,
    Law::PrincipalColon,
    Law::ColonSplit,
];

impl Law {
    pub fn name(&self) -> &'static str {
        match self {
            Law::DivisionReexpansion => "division-reexpansion",
            Law::ReducedGbUniqueness => "reduced-gb-uniqueness",
            Law::IntersectMemberCoherence => "intersect-member-coherence",
            Law::QuotientLaws => "quotient-laws",
            Law::SaturationStability => "saturation-stability",
            Law::ModularLaw => "modular-law",
            Law::PrincipalColon => "principal-colon",
            Law::ColonSplit => "colon-split",
        }
    }
}

fn sandbox_ring() -> Arc<RingContext> {
    RingContext::new(
        vec!["x".into(), "y".into(), "z".into()],
        Field::Rationals,
    )
    .expect("fixed ring")
}

fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
        let m = Monomial::new(exps);
        if m.degree() <= max_deg + 1 {
            return m;
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<RingContext>, max_terms: usize) -> Polynomial {
    let nterms = rng.gen_range(1..=max_terms);
    let terms: Vec<(crate::ring::Scalar, Monomial)> = (0..nterms)
        .map(|_| {
            let c = loop {
                let v = rng.gen_range(-3i64..=3);
                if v != 0 {
                    break v;
                }
            };
            (
                ring.field().scalar_from_i64(c),
                random_monomial(rng, ring.nvars(), 2),
            )
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

fn random_nonzero_poly(rng: &mut ChaCha8Rng, ring: &Arc<RingContext>, max_terms: usize) -> Polynomial {
    loop {
        let p = random_poly(rng, ring, max_terms);
        if !p.is_zero() {
            return p;
        }
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &Arc<RingContext>) -> Ideal {
    let ngens = rng.gen_range(1..=3);
    let gens = (0..ngens)
        .map(|_| random_nonzero_poly(rng, ring, 2))
        .collect();
    Ideal::new(ring, gens)
}

/// Runs `cases` random instances of `law`; returns the number of cases run
/// or a textual witness of the first violated instance.
pub fn run_law(law: Law, cases: u32, seed: u64, cfg: &Config) -> Result<u32, String> {
    let ring = sandbox_ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ law.name().len() as u64);
    for case in 0..cases {
        run_case(law, &ring, &mut rng, cfg)
            .map_err(|w| format!("{} case {case}: {w}", law.name()))?;
    }
    Ok(cases)
}

fn err<T>(msg: String) -> Result<T, String> {
    Err(msg)
}

fn run_case(
    law: Law,
    ring: &Arc<RingContext>,
    rng: &mut ChaCha8Rng,
    cfg: &Config,
) -> Result<(), String> {
    match law {
        Law::DivisionReexpansion => {
            let f = random_poly(rng, ring, 4);
            let ndiv = rng.gen_range(1..=3);
            let divs: Vec<Polynomial> =
                (0..ndiv).map(|_| random_nonzero_poly(rng, ring, 3)).collect();
            let order = if rng.gen_bool(0.5) {
                MonomialOrder::Grevlex
            } else {
                MonomialOrder::Lex
            };
            let res = reduce(&f, &divs, order);
            let mut acc = res.remainder.clone();
            for (q, d) in res.cofactors.iter().zip(divs.iter()) {
                acc = acc.add(&q.mul(d));
            }
            if acc != f {
                return err(format!("re-expansion differs for {f}"));
            }
            for (_, m) in res.remainder.terms() {
                for d in &divs {
                    let (_, lm) = d.leading_term(order).unwrap();
                    if lm.divides(m) {
                        return err(format!("remainder term {m:?} divisible by a lead"));
                    }
                }
            }
            let again = reduce(&res.remainder, &divs, order);
            if again.remainder != res.remainder {
                return err("reduction of a remainder is not the identity".into());
            }
            Ok(())
        }
        Law::ReducedGbUniqueness => {
            let i = random_ideal(rng, ring);
            let gb = i
                .reduced_gb(MonomialOrder::Grevlex, cfg, false)
                .map_err(|e| e.to_string())?;
            let mut shuffled: Vec<Polynomial> = i.gens().to_vec();
            shuffled.reverse();
            let rot = rng.gen_range(0..shuffled.len().max(1));
            shuffled.rotate_left(rot);
            if let Some(first) = shuffled.first().cloned() {
                shuffled.push(first.scale(&ring.field().scalar_from_i64(2)));
            }
            let j = Ideal::new(ring, shuffled);
            let gb2 = j
                .reduced_gb(MonomialOrder::Grevlex, cfg, false)
                .map_err(|e| e.to_string())?;
            if gb.elements != gb2.elements {
                return err("reduced bases differ after permutation".into());
            }
            Ok(())
        }
        Law::IntersectMemberCoherence => {
            let a = random_ideal(rng, ring);
            let b = random_ideal(rng, ring);
            let meet = a.intersect(&b, cfg).map_err(|e| e.to_string())?;
            let mut probes = vec![random_poly(rng, ring, 3)];
            if let (Some(ga), Some(gb)) = (a.gens().first(), b.gens().first()) {
                probes.push(ga.mul(gb));
            }
            for f in probes {
                let lhs = meet.member(&f, cfg).map_err(|e| e.to_string())?;
                let rhs = a.member(&f, cfg).map_err(|e| e.to_string())?
                    && b.member(&f, cfg).map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return err(format!("membership mismatch for {f}"));
                }
            }
            Ok(())
        }
        Law::QuotientLaws => {
            let i = random_ideal(rng, ring);
            let f = random_nonzero_poly(rng, ring, 2);
            let q = i.quotient(&f, cfg).map_err(|e| e.to_string())?;
            let fq = Ideal::new(ring, vec![f.clone()]).product(&q);
            if !i.contains(&fq, cfg).map_err(|e| e.to_string())? {
                return err(format!("(f)(I:f) escapes I for f = {f}"));
            }
            if !q.contains(&i, cfg).map_err(|e| e.to_string())? {
                return err("I : f fails to contain I".into());
            }
            Ok(())
        }
        Law::SaturationStability => {
            let i = random_ideal(rng, ring);
            let f = random_nonzero_poly(rng, ring, 2);
            let (sat, _) = i.saturate(&f, cfg).map_err(|e| e.to_string())?;
            let again = sat.quotient(&f, cfg).map_err(|e| e.to_string())?;
            if !sat.equal(&again, cfg).map_err(|e| e.to_string())? {
                return err(format!("saturation not stable for f = {f}"));
            }
            Ok(())
        }
        Law::ModularLaw => {
            let i = random_ideal(rng, ring);
            let iprime = random_ideal(rng, ring);
            // I'' contains I by construction.
            let isecond = i.sum(&random_ideal(rng, ring));
            let lhs = i
                .sum(&iprime)
                .intersect(&isecond, cfg)
                .map_err(|e| e.to_string())?;
            let rhs = i.sum(
                &iprime
                    .intersect(&isecond, cfg)
                    .map_err(|e| e.to_string())?,
            );
            if !lhs.equal(&rhs, cfg).map_err(|e| e.to_string())? {
                return err("modular law instance failed".into());
            }
            Ok(())
        }
        Law::PrincipalColon => {
            let i = random_ideal(rng, ring);
            let x = random_nonzero_poly(rng, ring, 2);
            let principal = Ideal::new(ring, vec![x.clone()]);
            let lhs = principal.intersect(&i, cfg).map_err(|e| e.to_string())?;
            let rhs = principal.product(&i.quotient(&x, cfg).map_err(|e| e.to_string())?);
            if !lhs.equal(&rhs, cfg).map_err(|e| e.to_string())? {
                return err(format!("(x) cap I != x (I : x) for x = {x}"));
            }
            Ok(())
        }
        Law::ColonSplit => {
            let i = random_ideal(rng, ring);
            let x = random_nonzero_poly(rng, ring, 2);
            let (sat, k) = i.saturate(&x, cfg).map_err(|e| e.to_string())?;
            let added = i.sum(&Ideal::new(ring, vec![x.pow(k)]));
            let back = sat.intersect(&added, cfg).map_err(|e| e.to_string())?;
            if !back.equal(&i, cfg).map_err(|e| e.to_string())? {
                return err(format!("colon split fails to reassemble at x = {x}, k = {k}"));
            }
            Ok(())
        }
    }
}
