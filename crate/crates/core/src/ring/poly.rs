//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept strictly decreasing under the ring's canonical grevlex
//! order; the zero polynomial is the empty term list.

use super::monomial::{Monomial, MonomialOrder};
use super::scalar::Scalar;
use super::{same_ring, RingContext};
use crate::error::{AlgebraError, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<RingContext>,
    terms: Vec<(Scalar, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<RingContext>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingContext>, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, Monomial::one(ring.nvars()))],
        }
    }

    pub fn one(ring: &Arc<RingContext>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn from_int(ring: &Arc<RingContext>, v: i64) -> Self {
        Self::constant(ring, ring.field().scalar_from_i64(v))
    }

    pub fn var(ring: &Arc<RingContext>, idx: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field().one(), Monomial::var(ring.nvars(), idx))],
        }
    }

    pub fn var_pow(ring: &Arc<RingContext>, idx: usize, exp: u32) -> Self {
        if exp == 0 {
            return Self::one(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.field().one(), Monomial::var_pow(ring.nvars(), idx, exp))],
        }
    }

    pub fn term(ring: &Arc<RingContext>, c: Scalar, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        debug_assert_eq!(m.nvars(), ring.nvars());
        Polynomial {
            ring: ring.clone(),
            terms: vec![(c, m)],
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs:
    /// merges duplicates, drops zeros, sorts canonically.
    pub fn from_terms(ring: &Arc<RingContext>, terms: Vec<(Scalar, Monomial)>) -> Self {
        let mut map: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Scalar, Monomial)> = map.into_iter().map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.1, &a.1));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms known to be normalized already (no zeros, strictly decreasing
    /// under canonical grevlex).
    pub(crate) fn from_sorted_terms(
        ring: &Arc<RingContext>,
        terms: Vec<(Scalar, Monomial)>,
    ) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(_, m)| m.is_one())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomial arithmetic across different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match MonomialOrder::Grevlex.cmp(ma, mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let s = ca.add(cb);
                    if !s.is_zero() {
                        out.push((s, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a.mul(c), m.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &Scalar, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, ma)| (a.mul(c), ma.mul(m)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut map: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Scalar, Monomial)> = map.into_iter().map(|(m, c)| (c, m)).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.1, &a.1));
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Scalar, &Monomial)> {
        match order {
            MonomialOrder::Grevlex => self.terms.first().map(|(c, m)| (c, m)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| order.cmp(&a.1, &b.1))
                .map(|(c, m)| (c, m)),
        }
    }

    /// Ring homomorphism determined by `map` (variable index -> image in
    /// `target`). Every variable occurring in `self` must be mapped.
    pub fn substitute(
        &self,
        map: &HashMap<usize, Polynomial>,
        target: &Arc<RingContext>,
    ) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(target);
        for (c, m) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (idx, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = map.get(&idx).ok_or_else(|| AlgebraError::UnmappedVariable {
                    name: self.ring.var_name(idx).to_string(),
                })?;
                assert!(
                    same_ring(image.ring(), target),
                    "substitution image lives outside the target ring"
                );
                t = t.mul(&image.pow(e));
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Injects into an aux-extended ring of `self.ring` (shift exponents
    /// right past the auxiliary block).
    pub fn inject_aux(&self, ext: &Arc<RingContext>) -> Polynomial {
        let k = ext.aux_count();
        debug_assert_eq!(ext.nvars(), self.ring.nvars() + k);
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut exps = vec![0u32; k];
                exps.extend_from_slice(m.exps());
                (c.clone(), Monomial::new(exps))
            })
            .collect();
        // Prepending zero coordinates preserves grevlex comparisons, so the
        // term list stays sorted.
        Polynomial {
            ring: ext.clone(),
            terms,
        }
    }

    /// Restriction from an aux-extended ring back to `base`; the polynomial
    /// must be free of the auxiliary variables.
    pub fn restrict_aux(&self, base: &Arc<RingContext>) -> Polynomial {
        let k = self.ring.aux_count();
        debug_assert_eq!(base.nvars() + k, self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                debug_assert!(m.free_of_first(k), "restriction of a non-free polynomial");
                (c.clone(), Monomial::new(m.exps()[k..].to_vec()))
            })
            .collect();
        Polynomial {
            ring: base.clone(),
            terms,
        }
    }

    /// True when every variable of the leading auxiliary block is absent.
    pub fn free_of_aux(&self) -> bool {
        self.free_of_first_vars(self.ring.aux_count())
    }

    /// True when the first `k` ring variables are absent.
    pub fn free_of_first_vars(&self, k: usize) -> bool {
        self.terms.iter().all(|(_, m)| m.free_of_first(k))
    }

    /// Applies a variable permutation into `target` (`perm[i]` = index in
    /// `target` of variable `i` of `self.ring`).
    pub fn permute_vars(&self, perm: &[usize], target: &Arc<RingContext>) -> Polynomial {
        let terms: Vec<(Scalar, Monomial)> = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut exps = vec![0u32; target.nvars()];
                for (i, &e) in m.exps().iter().enumerate() {
                    exps[perm[i]] = e;
                }
                (c.clone(), Monomial::new(exps))
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Largest coefficient bit size, for the growth guard.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms.iter().map(|(c, _)| c.bit_size()).max().unwrap_or(0)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let (sign, mag) = {
                let s = c.to_string();
                match s.strip_prefix('-') {
                    Some(rest) => ("-", rest.to_string()),
                    None => ("+", s),
                }
            };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e == 1 {
                    factors.push(self.ring.var_name(i).to_string());
                } else {
                    factors.push(format!("{}^{}", self.ring.var_name(i), e));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
