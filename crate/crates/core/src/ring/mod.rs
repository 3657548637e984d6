//! Polynomial rings: variables, coefficient field, and construction of the
//! Mayr-Meyer rings (short form in 8n+2 variables, long form in 10n+2).

mod monomial;
mod parse;
mod poly;
mod scalar;

pub use monomial::{grevlex_cmp, Monomial, MonomialOrder};
pub use parse::{parse_poly, render_poly};
pub use poly::Polynomial;
pub use scalar::{is_prime_u32, Field, Scalar, MAX_PRIME};

use crate::error::{AlgebraError, Result};
use std::collections::HashMap;
use std::sync::Arc;

/// Shape data recorded when a ring is one of the Mayr-Meyer rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MMShape {
    pub n: u32,
    pub d: u32,
    pub long: bool,
}

/// An ordered list of named variables over an exact field. Auxiliary
/// variables introduced for elimination (t, u) are prepended, and their
/// count is recorded so block orders and restriction know where the base
/// ring starts.
#[derive(Debug)]
pub struct RingContext {
    vars: Vec<String>,
    index: HashMap<String, usize>,
    field: Field,
    mm: Option<MMShape>,
    aux: usize,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.field == other.field
    }
}
impl Eq for RingContext {}

impl RingContext {
    pub fn new(vars: Vec<String>, field: Field) -> Result<Arc<RingContext>> {
        field.validate()?;
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(AlgebraError::InvalidParams(format!(
                    "duplicate variable name `{v}`"
                )));
            }
        }
        Ok(Arc::new(RingContext {
            vars,
            index,
            field,
            mm: None,
            aux: 0,
        }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mm_shape(&self) -> Option<MMShape> {
        self.mm
    }

    pub fn aux_count(&self) -> usize {
        self.aux
    }

    pub fn var_name(&self, idx: usize) -> &str {
        &self.vars[idx]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// A new ring with `names` prepended as auxiliary variables.
    pub fn extend_aux(self: &Arc<Self>, names: &[&str]) -> Arc<RingContext> {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        for v in names {
            assert!(
                !self.index.contains_key(*v),
                "auxiliary variable `{v}` shadows a ring variable"
            );
        }
        vars.extend(self.vars.iter().cloned());
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            index.insert(v.clone(), i);
        }
        Arc::new(RingContext {
            vars,
            index,
            field: self.field,
            mm: None,
            aux: names.len(),
        })
    }

    /// A new ring with the variables permuted by `perm` (`perm[i]` is the
    /// index in `self` of the i-th variable of the new ring).
    pub fn permuted(self: &Arc<Self>, perm: &[usize]) -> Arc<RingContext> {
        assert_eq!(perm.len(), self.vars.len());
        let vars: Vec<String> = perm.iter().map(|&i| self.vars[i].clone()).collect();
        let mut index = HashMap::new();
        for (i, v) in vars.iter().enumerate() {
            index.insert(v.clone(), i);
        }
        Arc::new(RingContext {
            vars,
            index,
            field: self.field,
            mm: None,
            aux: 0,
        })
    }
}

pub fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Builds the Mayr-Meyer ring for parameters (n, d). The short ring carries
/// s, f and the blocks b_{r1..r4}, c_{r1..r4} for r = 0..n-1; the long ring
/// appends s_1..s_n and f_1..f_n.
pub fn make_mm_ring(n: u32, d: u32, field: Field, long: bool) -> Result<Arc<RingContext>> {
    if n < 2 {
        return Err(AlgebraError::InvalidParams(format!(
            "n must be at least 2 (got {n})"
        )));
    }
    if d < 2 {
        return Err(AlgebraError::InvalidParams(format!(
            "d must be at least 2 (got {d})"
        )));
    }
    field.validate()?;
    let mut vars = Vec::with_capacity(if long { 10 * n + 2 } else { 8 * n + 2 } as usize);
    vars.push("s".to_string());
    vars.push("f".to_string());
    for r in 0..n {
        for i in 1..=4 {
            vars.push(format!("b{r}_{i}"));
        }
        for i in 1..=4 {
            vars.push(format!("c{r}_{i}"));
        }
    }
    if long {
        for r in 1..=n {
            vars.push(format!("s{r}"));
        }
        for r in 1..=n {
            vars.push(format!("f{r}"));
        }
    }
    let mut index = HashMap::new();
    for (i, v) in vars.iter().enumerate() {
        index.insert(v.clone(), i);
    }
    Ok(Arc::new(RingContext {
        vars,
        index,
        field,
        mm: Some(MMShape { n, d, long }),
        aux: 0,
    }))
}

/// Variable indices of a Mayr-Meyer ring. The layout is fixed by
/// `make_mm_ring`, so these are pure arithmetic.
pub mod mm_vars {
    pub const S: usize = 0;
    pub const F: usize = 1;

    pub fn b(r: u32, i: u32) -> usize {
        debug_assert!((1..=4).contains(&i));
        2 + 8 * r as usize + (i as usize - 1)
    }

    pub fn c(r: u32, i: u32) -> usize {
        debug_assert!((1..=4).contains(&i));
        2 + 8 * r as usize + 4 + (i as usize - 1)
    }

    /// Long-ring s_r, r = 1..=n.
    pub fn s_level(n: u32, r: u32) -> usize {
        debug_assert!((1..=n).contains(&r));
        (8 * n + 2) as usize + (r as usize - 1)
    }

    /// Long-ring f_r, r = 1..=n.
    pub fn f_level(n: u32, r: u32) -> usize {
        debug_assert!((1..=n).contains(&r));
        (9 * n + 2) as usize + (r as usize - 1)
    }
}
