//! Multivariate division with cofactor tracking, Buchberger's algorithm with
//! the product and chain criteria, and reduced (canonical) bases.
//!
//! All computation is exact. Runs are deterministic: pair selection uses the
//! normal strategy (minimal lcm degree) with ties broken by pair-creation
//! index, and there is no randomization anywhere in the engine.

use crate::error::{AlgebraError, Result};
use crate::ring::{Monomial, MonomialOrder, Polynomial, RingContext, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

/// Budgets applied to every basis computation.
#[derive(Debug, Clone)]
pub struct Config {
    /// Maximum number of division steps across one Buchberger run.
    pub step_budget: u64,
    /// Abort when any coefficient outgrows this bit size (rationals only).
    pub coeff_bit_limit: u64,
    /// Maximum iterated-quotient depth accepted by saturation.
    pub saturation_cap: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            step_budget: 10_000_000,
            coeff_bit_limit: 1 << 16,
            saturation_cap: 50,
        }
    }
}

/// Result of dividing a polynomial by an ordered list of divisors:
/// `dividend = sum(cofactor_i * divisor_i) + remainder`, no remainder
/// monomial divisible by any divisor's leading monomial, and every
/// `cofactor_i * divisor_i` has leading monomial bounded by the dividend's.
#[derive(Debug, Clone)]
pub struct DivisionResult {
    pub remainder: Polynomial,
    pub cofactors: Vec<Polynomial>,
}

/// A Groebner basis for some ideal under a fixed order, optionally with a
/// lift matrix expressing each element over the original generators.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    lift: Option<Vec<Vec<Polynomial>>>,
}

impl GroebnerBasis {
    /// Wraps an externally known reduced basis (e.g. the eliminated slice
    /// of a block-order basis) without recomputation.
    pub fn from_reduced_elements(order: MonomialOrder, elements: Vec<Polynomial>) -> Self {
        GroebnerBasis {
            order,
            elements,
            lift: None,
        }
    }

    pub fn lift_rows(&self) -> Option<&[Vec<Polynomial>]> {
        self.lift.as_deref()
    }

    /// True when the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }
}

type TermList = Vec<(Scalar, Monomial)>;

fn sorted_terms(p: &Polynomial, order: MonomialOrder) -> TermList {
    let mut t: TermList = p.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.1, &a.1));
    }
    t
}

fn terms_to_poly(ring: &Arc<RingContext>, mut terms: TermList, order: MonomialOrder) -> Polynomial {
    if order != MonomialOrder::Grevlex {
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.1, &a.1));
    }
    Polynomial::from_sorted_terms(ring, terms)
}

/// `a + c * m * b` for sorted term lists, merging under `order`.
fn add_scaled(a: &[(Scalar, Monomial)], b: &[(Scalar, Monomial)], c: &Scalar, m: &Monomial, order: MonomialOrder) -> TermList {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        let mb = b[j].1.mul(m);
        match order.cmp(&a[i].1, &mb) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0.mul(c), mb));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = a[i].0.add(&b[j].0.mul(c));
                if !s.is_zero() {
                    out.push((s, mb));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push((b[j].0.mul(c), b[j].1.mul(m)));
        j += 1;
    }
    out
}

struct Divisor {
    terms: TermList,
    lead_mono: Monomial,
    lead_coeff: Scalar,
}

impl Divisor {
    fn new(terms: TermList) -> Self {
        let (lc, lm) = terms[0].clone();
        Divisor {
            terms,
            lead_mono: lm,
            lead_coeff: lc,
        }
    }
}

struct Reduction {
    remainder: TermList,
    cofactors: Option<Vec<TermList>>,
}

/// Core division loop over sorted term lists. `budget` is decremented per
/// reduction step and exhaustion aborts the computation.
fn reduce_terms(
    mut p: TermList,
    divisors: &[Divisor],
    order: MonomialOrder,
    budget: &mut u64,
    track_cofactors: bool,
) -> Result<Reduction> {
    let mut remainder: TermList = Vec::new();
    let mut cofactors: Option<Vec<TermList>> =
        track_cofactors.then(|| vec![Vec::new(); divisors.len()]);
    let mut cursor = 0usize;
    while cursor < p.len() {
        let (lc, lm) = p[cursor].clone();
        let hit = divisors
            .iter()
            .position(|d| d.lead_mono.divides(&lm));
        match hit {
            Some(k) => {
                if *budget == 0 {
                    return Err(AlgebraError::StepBudgetExceeded { budget: 0 });
                }
                *budget -= 1;
                let q_mono = lm.div(&divisors[k].lead_mono).unwrap();
                let q_coeff = lc.div(&divisors[k].lead_coeff);
                if let Some(cofs) = cofactors.as_mut() {
                    cofs[k].push((q_coeff.clone(), q_mono.clone()));
                }
                let neg = q_coeff.neg();
                p = add_scaled(&p[cursor..], &divisors[k].terms, &neg, &q_mono, order);
                cursor = 0;
                debug_assert!(p.first().map(|(_, m)| order.cmp(m, &lm).is_lt()).unwrap_or(true));
            }
            None => {
                remainder.push((lc, lm));
                cursor += 1;
            }
        }
    }
    Ok(Reduction {
        remainder,
        cofactors,
    })
}

/// Divides `f` by the divisor list under `order`, tracking cofactors.
/// An empty divisor list simply returns `f` as the remainder.
pub fn reduce(f: &Polynomial, divisors: &[Polynomial], order: MonomialOrder) -> DivisionResult {
    let ring = f.ring();
    let divs: Vec<Divisor> = divisors
        .iter()
        .map(|d| {
            assert!(!d.is_zero(), "zero divisor in division");
            Divisor::new(sorted_terms(d, order))
        })
        .collect();
    let mut budget = u64::MAX;
    let red = reduce_terms(sorted_terms(f, order), &divs, order, &mut budget, true)
        .expect("unbounded division cannot exhaust its budget");
    DivisionResult {
        remainder: terms_to_poly(ring, red.remainder, order),
        cofactors: red
            .cofactors
            .unwrap()
            .into_iter()
            .map(|t| terms_to_poly(ring, t, order))
            .collect(),
    }
}

/// Normal form of `f` against a basis (no cofactors, budgeted).
pub fn normal_form(
    f: &Polynomial,
    basis: &GroebnerBasis,
    cfg: &Config,
) -> Result<Polynomial> {
    let ring = f.ring();
    let divs: Vec<Divisor> = basis
        .elements
        .iter()
        .map(|d| Divisor::new(sorted_terms(d, basis.order)))
        .collect();
    let mut budget = cfg.step_budget;
    let red = reduce_terms(sorted_terms(f, basis.order), &divs, basis.order, &mut budget, false)
        .map_err(|_| AlgebraError::StepBudgetExceeded {
            budget: cfg.step_budget,
        })?;
    Ok(terms_to_poly(ring, red.remainder, basis.order))
}

/// Normalization factor making a rational polynomial integer, primitive,
/// with positive leading coefficient; over GF(p) it makes the element monic.
fn normalizing_factor(terms: &TermList) -> Scalar {
    match &terms[0].0 {
        Scalar::Mod { .. } => terms[0].0.inv(),
        Scalar::Rat(lead) => {
            let mut num_gcd = BigInt::zero();
            let mut den_lcm = BigInt::one();
            for (c, _) in terms {
                if let Scalar::Rat(r) = c {
                    num_gcd = num_gcd.gcd(r.numer());
                    den_lcm = den_lcm.lcm(r.denom());
                }
            }
            let mut factor = BigRational::new(den_lcm, num_gcd);
            if (lead * &factor).is_negative() {
                factor = -factor;
            }
            Scalar::Rat(factor)
        }
    }
}

fn scale_terms(terms: &mut TermList, c: &Scalar) {
    for (a, _) in terms.iter_mut() {
        *a = a.mul(c);
    }
}

fn max_bits(terms: &TermList) -> u64 {
    terms.iter().map(|(c, _)| c.bit_size()).max().unwrap_or(0)
}

#[derive(PartialEq, Eq)]
struct PendingPair {
    lcm_deg: u32,
    created: u64,
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Ord for PendingPair {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.lcm_deg
            .cmp(&other.lcm_deg)
            .then(self.created.cmp(&other.created))
    }
}
impl PartialOrd for PendingPair {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Buchberger's algorithm. Returns a (non-reduced) basis whose S-pairs all
/// reduce to zero; run [`reduce_basis`] for the canonical form.
///
/// With `with_lift`, every basis element also carries cofactors over the
/// original generator list.
pub fn buchberger(
    ring: &Arc<RingContext>,
    gens: &[Polynomial],
    order: MonomialOrder,
    cfg: &Config,
    with_lift: bool,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Divisor> = Vec::new();
    let mut rows: Vec<Vec<TermList>> = Vec::new();
    let mut pairs: BinaryHeap<Reverse<PendingPair>> = BinaryHeap::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let mut created = 0u64;
    let mut budget = cfg.step_budget;

    let push_element = |terms: TermList,
                            row: Vec<TermList>,
                            basis: &mut Vec<Divisor>,
                            rows: &mut Vec<Vec<TermList>>,
                            pairs: &mut BinaryHeap<Reverse<PendingPair>>,
                            created: &mut u64|
     -> Result<()> {
        let mut terms = terms;
        let factor = normalizing_factor(&terms);
        scale_terms(&mut terms, &factor);
        if max_bits(&terms) > cfg.coeff_bit_limit {
            return Err(AlgebraError::CoefficientBlowup {
                limit_bits: cfg.coeff_bit_limit,
            });
        }
        let mut row = row;
        if with_lift {
            for r in row.iter_mut() {
                scale_terms(r, &factor);
            }
        }
        let m = basis.len();
        let lead = terms[0].1.clone();
        for (i, d) in basis.iter().enumerate() {
            let lcm = d.lead_mono.lcm(&lead);
            pairs.push(Reverse(PendingPair {
                lcm_deg: lcm.degree(),
                created: *created,
                i,
                j: m,
                lcm,
            }));
            *created += 1;
        }
        basis.push(Divisor::new(terms));
        rows.push(row);
        Ok(())
    };

    let ngens = gens.len();
    for (idx, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut row = vec![Vec::new(); if with_lift { ngens } else { 0 }];
        if with_lift {
            row[idx] = vec![(ring.field().one(), Monomial::one(ring.nvars()))];
        }
        push_element(
            sorted_terms(g, order),
            row,
            &mut basis,
            &mut rows,
            &mut pairs,
            &mut created,
        )?;
    }

    while let Some(Reverse(pair)) = pairs.pop() {
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));
        // Product criterion: coprime leading monomials reduce to zero.
        if basis[i].lead_mono.is_coprime(&basis[j].lead_mono) {
            continue;
        }
        // Chain criterion: some k with lt(k) | lcm(i,j) and both
        // sub-pairs already treated.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead_mono.divides(&pair.lcm)
                && done.contains(&(i.min(k), i.max(k)))
                && done.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }

        let ui = pair.lcm.div(&basis[i].lead_mono).unwrap();
        let uj = pair.lcm.div(&basis[j].lead_mono).unwrap();
        let ci = basis[i].lead_coeff.inv();
        let cj = basis[j].lead_coeff.inv().neg();
        let spoly = add_scaled(
            &scaled_copy(&basis[i].terms, &ci, &ui),
            &basis[j].terms,
            &cj,
            &uj,
            order,
        );
        if spoly.is_empty() {
            continue;
        }
        let red = reduce_terms(spoly, &basis, order, &mut budget, with_lift).map_err(|_| {
            AlgebraError::StepBudgetExceeded {
                budget: cfg.step_budget,
            }
        })?;
        if red.remainder.is_empty() {
            continue;
        }
        let row = if with_lift {
            let mut row = combine_rows(&rows[i], &ci, &ui, &rows[j], &cj, &uj, order);
            if let Some(cofs) = red.cofactors {
                for (k, q) in cofs.iter().enumerate() {
                    for (qc, qm) in q {
                        let neg = qc.neg();
                        for (slot, rk) in row.iter_mut().zip(rows[k].iter()) {
                            *slot = add_scaled(slot, rk, &neg, qm, order);
                        }
                    }
                }
            }
            row
        } else {
            Vec::new()
        };
        push_element(
            red.remainder,
            row,
            &mut basis,
            &mut rows,
            &mut pairs,
            &mut created,
        )?;
    }

    let elements: Vec<Polynomial> = basis
        .iter()
        .map(|d| terms_to_poly(ring, d.terms.clone(), order))
        .collect();
    let lift = with_lift.then(|| {
        rows.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| terms_to_poly(ring, t, order))
                    .collect()
            })
            .collect()
    });
    Ok(GroebnerBasis {
        order,
        elements,
        lift,
    })
}

fn scaled_copy(terms: &TermList, c: &Scalar, m: &Monomial) -> TermList {
    terms
        .iter()
        .map(|(a, ma)| (a.mul(c), ma.mul(m)))
        .collect()
}

fn combine_rows(
    ra: &[TermList],
    ca: &Scalar,
    ma: &Monomial,
    rb: &[TermList],
    cb: &Scalar,
    mb: &Monomial,
    order: MonomialOrder,
) -> Vec<TermList> {
    ra.iter()
        .zip(rb.iter())
        .map(|(a, b)| add_scaled(&scaled_copy(a, ca, ma), b, cb, mb, order))
        .collect()
}

/// Canonicalizes a Groebner basis: monic, autoreduced, sorted by leading
/// monomial. The result is unique for the (ideal, order) pair, so equality
/// of reduced bases decides equality of ideals.
pub fn reduce_basis(gb: GroebnerBasis, cfg: &Config) -> Result<GroebnerBasis> {
    let order = gb.order;
    let ring = match gb.elements.first() {
        Some(e) => e.ring().clone(),
        None => {
            return Ok(gb);
        }
    };
    let mut elems: Vec<TermList> = gb
        .elements
        .iter()
        .filter(|e| !e.is_zero())
        .map(|e| sorted_terms(e, order))
        .collect();
    let mut rows: Option<Vec<Vec<TermList>>> = gb.lift.as_ref().map(|lift| {
        gb.elements
            .iter()
            .zip(lift.iter())
            .filter(|(e, _)| !e.is_zero())
            .map(|(_, row)| row.iter().map(|p| sorted_terms(p, order)).collect())
            .collect()
    });

    // Monic.
    for (k, e) in elems.iter_mut().enumerate() {
        let inv = e[0].0.inv();
        scale_terms(e, &inv);
        if let Some(rows) = rows.as_mut() {
            for r in rows[k].iter_mut() {
                scale_terms(r, &inv);
            }
        }
    }

    // Minimal: drop elements whose lead is divisible by another kept lead.
    let mut keep = vec![true; elems.len()];
    for i in 0..elems.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..elems.len() {
            if i == j || !keep[j] {
                continue;
            }
            if elems[j][0].1.divides(&elems[i][0].1) {
                // Tie on equal leads: keep the earlier element.
                if elems[j][0].1 == elems[i][0].1 && j > i {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut kept: Vec<TermList> = Vec::new();
    let mut kept_rows: Vec<Vec<TermList>> = Vec::new();
    for (k, e) in elems.into_iter().enumerate() {
        if keep[k] {
            kept.push(e);
            if let Some(rows) = rows.as_mut() {
                kept_rows.push(std::mem::take(&mut rows[k]));
            }
        }
    }

    // Tail-reduce each element against the rest.
    let mut budget = cfg.step_budget;
    for i in 0..kept.len() {
        let others: Vec<Divisor> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, t)| Divisor::new(t.clone()))
            .collect();
        let track = rows.is_some();
        let red = reduce_terms(kept[i].clone(), &others, order, &mut budget, track).map_err(
            |_| AlgebraError::StepBudgetExceeded {
                budget: cfg.step_budget,
            },
        )?;
        debug_assert_eq!(red.remainder[0].1, kept[i][0].1);
        kept[i] = red.remainder;
        if let Some(cofs) = red.cofactors {
            // Map cofactor slots (which skip index i) back to global rows.
            let others_idx: Vec<usize> =
                (0..kept_rows.len()).filter(|j| *j != i).collect();
            let mut new_row = kept_rows[i].clone();
            for (slot, q) in cofs.iter().enumerate() {
                let k = others_idx[slot];
                for (qc, qm) in q {
                    let neg = qc.neg();
                    for (dst, src) in new_row.iter_mut().zip(kept_rows[k].iter()) {
                        *dst = add_scaled(dst, src, &neg, qm, order);
                    }
                }
            }
            kept_rows[i] = new_row;
        }
    }

    // Canonical ordering by leading monomial.
    let mut idx: Vec<usize> = (0..kept.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(&kept[a][0].1, &kept[b][0].1));
    let elements: Vec<Polynomial> = idx
        .iter()
        .map(|&k| terms_to_poly(&ring, kept[k].clone(), order))
        .collect();
    let lift = rows.map(|_| {
        idx.iter()
            .map(|&k| {
                kept_rows[k]
                    .iter()
                    .map(|t| terms_to_poly(&ring, t.clone(), order))
                    .collect()
            })
            .collect()
    });
    Ok(GroebnerBasis {
        order,
        elements,
        lift,
    })
}

/// Convenience: Buchberger followed by reduction.
pub fn reduced_groebner_basis(
    ring: &Arc<RingContext>,
    gens: &[Polynomial],
    order: MonomialOrder,
    cfg: &Config,
    with_lift: bool,
) -> Result<GroebnerBasis> {
    let gb = buchberger(ring, gens, order, cfg, with_lift)?;
    reduce_basis(gb, cfg)
}
