//! Exponent vectors and the monomial orders used by the basis engine.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A monomial as an exponent vector with a cached total degree. The vector
/// length always matches the ambient ring's variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            deg,
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial::new(e)
    }

    pub fn var_pow(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Monomial::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            deg: self.deg + other.deg,
        }
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial {
            exps: exps.into_boxed_slice(),
            deg: self.deg - other.deg,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// True when every variable in `supported` range has exponent zero.
    pub fn free_of_first(&self, k: usize) -> bool {
        self.exps[..k].iter().all(|&e| e == 0)
    }
}

/// Graded reverse lexicographic comparison of raw exponent slices:
/// higher total degree wins; on ties the monomial with the *smaller*
/// exponent at the last differing position is the larger one.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for i in 0..a.len() {
        if a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

/// A total multiplicative monomial order. `Block { split }` eliminates the
/// first `split` variables: it compares that leading block first (by
/// grevlex), so any monomial touching an eliminated variable dominates
/// every monomial free of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Block { split: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len(), "monomial length mismatch");
        match self {
            MonomialOrder::Grevlex => {
                match a.deg.cmp(&b.deg) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for i in (0..a.exps.len()).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => lex_cmp(&a.exps, &b.exps),
            MonomialOrder::Block { split } => {
                let s = *split;
                match grevlex_cmp(&a.exps[..s], &b.exps[..s]) {
                    Ordering::Equal => grevlex_cmp(&a.exps[s..], &b.exps[s..]),
                    ord => ord,
                }
            }
        }
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { split } => write!(f, "block:{split}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_prefers_earlier_variables() {
        // x^2 y vs x y^2 with x before y: same degree, last difference is at
        // y where x^2 y has the smaller exponent, so x^2 y is larger.
        let a = Monomial::new(vec![2, 1]);
        let b = Monomial::new(vec![1, 2]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &a), Ordering::Equal);
    }

    #[test]
    fn lex_ignores_degree() {
        let x = Monomial::new(vec![1, 0]);
        let y3 = Monomial::new(vec![0, 3]);
        assert_eq!(MonomialOrder::Lex.cmp(&x, &y3), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_leading_variables() {
        // Ring (t, x): t beats x^100 under the elimination block.
        let t = Monomial::new(vec![1, 0]);
        let x100 = Monomial::new(vec![0, 100]);
        let ord = MonomialOrder::Block { split: 1 };
        assert_eq!(ord.cmp(&t, &x100), Ordering::Greater);
        assert_eq!(ord.cmp(&x100, &t), Ordering::Less);
    }

    #[test]
    fn monomial_quotients() {
        let a = Monomial::new(vec![2, 1]);
        let b = Monomial::new(vec![1, 1]);
        assert_eq!(a.div(&b), Some(Monomial::new(vec![1, 0])));
        assert_eq!(b.div(&a), None);
        assert!(b.divides(&a));
        assert_eq!(a.lcm(&Monomial::new(vec![0, 4])), Monomial::new(vec![2, 4]));
    }
}
