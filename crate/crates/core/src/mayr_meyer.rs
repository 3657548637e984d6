//! Factories for the Mayr-Meyer ideal families and the named ideals of
//! their minimal-prime analysis: the long family J_l(n,d) in 10n+2
//! variables, the shortened family J(n,d) in 8n+2 variables, the rewriting
//! map between them, the building-block ideals, all minimal primes and
//! their primary components, the closed intersection formulas, and the
//! explicit low-degree membership certificate for the witness element.
//!
//! Index conventions follow one empty-product rule throughout: a prefix
//! like c0_1 * c1_1 * ... * c(r-3)_1 is 1 whenever its index range is
//! empty, which is what specializes the level-2 generators correctly.

use crate::error::{AlgebraError, Result};
use crate::ideal::{intersect_all, product_of, Ideal};
use crate::ring::{
    is_prime_u32, make_mm_ring, mm_vars, Field, Polynomial, RingContext, Scalar,
};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Parameters of one family instance, with both rings prebuilt and the
/// root-of-unity data the prime enumeration needs.
#[derive(Debug, Clone)]
pub struct MMParams {
    pub n: u32,
    pub d: u32,
    pub field: Field,
    /// Largest divisor of d coprime to the field characteristic.
    pub dprime: u32,
    /// The d'-th roots of unity when the field realizes all of them.
    roots: Option<Vec<Scalar>>,
    ring: Arc<RingContext>,
    long_ring: Arc<RingContext>,
}

impl MMParams {
    pub fn new(n: u32, d: u32, field: Field) -> Result<MMParams> {
        let ring = make_mm_ring(n, d, field, false)?;
        let long_ring = make_mm_ring(n, d, field, true)?;
        let dp = dprime(d, field.characteristic());
        let roots = roots_of_unity(field, dp);
        Ok(MMParams {
            n,
            d,
            field,
            dprime: dp,
            roots,
            ring,
            long_ring,
        })
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn long_ring(&self) -> &Arc<RingContext> {
        &self.long_ring
    }

    pub fn roots(&self) -> Result<&[Scalar]> {
        self.roots
            .as_deref()
            .ok_or(AlgebraError::RootsUnavailable {
                dprime: self.dprime,
            })
    }

    pub fn roots_available(&self) -> bool {
        self.roots.is_some()
    }

    fn s(&self) -> Polynomial {
        Polynomial::var(&self.ring, mm_vars::S)
    }

    fn f(&self) -> Polynomial {
        Polynomial::var(&self.ring, mm_vars::F)
    }

    fn b(&self, r: u32, i: u32) -> Polynomial {
        Polynomial::var(&self.ring, mm_vars::b(r, i))
    }

    fn c(&self, r: u32, i: u32) -> Polynomial {
        Polynomial::var(&self.ring, mm_vars::c(r, i))
    }

    fn int(&self, v: i64) -> Polynomial {
        Polynomial::from_int(&self.ring, v)
    }

    /// Product c_{lo,1} c_{lo+1,1} ... c_{hi,1}; 1 for an empty range.
    fn c1_run(&self, lo: i64, hi: i64) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut j = lo;
        while j <= hi {
            acc = acc.mul(&self.c(j as u32, 1));
            j += 1;
        }
        acc
    }
}

/// Largest divisor of d relatively prime to the characteristic.
pub fn dprime(d: u32, characteristic: u32) -> u32 {
    if characteristic == 0 {
        return d;
    }
    let mut d = d;
    while d.is_multiple_of(characteristic) {
        d /= characteristic;
    }
    d
}

/// All k-th roots of unity in the field, or `None` when fewer than k exist.
/// Over the rationals only k <= 2 is realizable; over GF(p) the roots are
/// generated by a power of the smallest primitive root.
pub fn roots_of_unity(field: Field, k: u32) -> Option<Vec<Scalar>> {
    match field {
        Field::Rationals => match k {
            1 => Some(vec![field.one()]),
            2 => Some(vec![field.one(), field.scalar_from_i64(-1)]),
            _ => None,
        },
        Field::Prime(p) => {
            if !(p - 1).is_multiple_of(k) {
                return None;
            }
            let g = smallest_primitive_root(p);
            let step = (p as u64 - 1) / k as u64;
            let z = mod_pow_u64(g as u64, step, p as u64);
            let mut roots = Vec::with_capacity(k as usize);
            let mut cur = 1u64;
            for _ in 0..k {
                roots.push(Scalar::Mod { val: cur as u32, p });
                cur = cur * z % p as u64;
            }
            Some(roots)
        }
    }
}

fn mod_pow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn smallest_primitive_root(p: u32) -> u32 {
    let phi = (p - 1) as u64;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut q = 2u64;
    while q * q <= m {
        if m.is_multiple_of(q) {
            factors.push(q);
            while m.is_multiple_of(q) {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'cand: for g in 2..p as u64 {
        for &q in &factors {
            if mod_pow_u64(g, phi / q, p as u64) == 1 {
                continue 'cand;
            }
        }
        return g as u32;
    }
    unreachable!("every prime field has a primitive root")
}

/// Picks the field the harness uses when the caller does not pin one:
/// the rationals while they realize the needed roots, otherwise the
/// smallest prime p > 1000 with p = 1 mod d' and p not dividing d.
pub fn auto_field(d: u32) -> Field {
    let dp = dprime(d, 0);
    if dp <= 2 {
        return Field::Rationals;
    }
    let mut p = 1001u32;
    loop {
        if is_prime_u32(p) && (p - 1).is_multiple_of(dp) && !d.is_multiple_of(p) {
            return Field::Prime(p);
        }
        p += 1;
    }
}

/// Identifies one generator of either family: `h{r}_{i}` / `H{r}_{i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenLabel {
    pub r: u32,
    pub i: u32,
}

impl GenLabel {
    pub fn short_name(&self) -> String {
        format!("h{}_{}", self.r, self.i)
    }

    pub fn long_name(&self) -> String {
        format!("H{}_{}", self.r, self.i)
    }
}

/// The shortened family J(n,d), with labeled generators.
pub fn build_j_labeled(params: &MMParams) -> Vec<(GenLabel, Polynomial)> {
    let n = params.n;
    let d = params.d;
    let s = params.s();
    let f = params.f();
    let mut gens = Vec::new();
    let mut push = |r: u32, i: u32, p: Polynomial| gens.push((GenLabel { r, i }, p));

    // Level 0: c_{0i} (s - f b_{0i}^d).
    for i in 1..=4 {
        let g = params.c(0, i).mul(&s.sub(&f.mul(&params.b(0, i).pow(d))));
        push(0, i, g);
    }
    // Level 1.
    push(1, 3, f.mul(&params.c(0, 1)).sub(&s.mul(&params.c(0, 2))));
    push(1, 4, f.mul(&params.c(0, 4)).sub(&s.mul(&params.c(0, 3))));
    push(1, 5, s.mul(&params.c(0, 3).sub(&params.c(0, 2))));
    push(
        1,
        6,
        f.mul(
            &params
                .c(0, 2)
                .mul(&params.b(0, 1))
                .sub(&params.c(0, 3).mul(&params.b(0, 4))),
        ),
    );
    for i in 1..=4 {
        let g = f
            .mul(&params.c(0, 2))
            .mul(&params.c(1, i))
            .mul(&params.b(0, 2).sub(&params.b(1, i).mul(&params.b(0, 3))));
        push(1, 6 + i, g);
    }
    // Levels r = 2..n, first four generators.
    for r in 2..=n {
        let r_ = r as i64;
        let pre = s.mul(&params.c1_run(0, r_ - 3));
        push(
            r,
            3,
            pre.mul(
                &params
                    .c(r - 2, 4)
                    .mul(&params.c(r - 1, 1))
                    .sub(&params.c(r - 2, 1).mul(&params.c(r - 1, 2))),
            ),
        );
        push(
            r,
            4,
            pre.mul(
                &params
                    .c(r - 2, 4)
                    .mul(&params.c(r - 1, 4))
                    .sub(&params.c(r - 2, 1).mul(&params.c(r - 1, 3))),
            ),
        );
        push(
            r,
            5,
            s.mul(&params.c1_run(0, r_ - 2))
                .mul(&params.c(r - 1, 3).sub(&params.c(r - 1, 2))),
        );
        push(
            r,
            6,
            pre.mul(&params.c(r - 2, 4)).mul(
                &params
                    .c(r - 1, 2)
                    .mul(&params.b(r - 1, 1))
                    .sub(&params.c(r - 1, 3).mul(&params.b(r - 1, 4))),
            ),
        );
    }
    // Levels r = 2..n-1, last four generators.
    for r in 2..n {
        let r_ = r as i64;
        let pre = s
            .mul(&params.c1_run(0, r_ - 3))
            .mul(&params.c(r - 2, 4))
            .mul(&params.c(r - 1, 2));
        for i in 1..=4 {
            let g = pre
                .mul(&params.c(r, i))
                .mul(&params.b(r - 1, 2).sub(&params.b(r, i).mul(&params.b(r - 1, 3))));
            push(r, 6 + i, g);
        }
    }
    // Last level-n generator.
    let n_ = n as i64;
    let hn7 = s
        .mul(&params.c1_run(0, n_ - 3))
        .mul(&params.c(n - 2, 4))
        .mul(&params.c(n - 1, 2))
        .mul(&params.b(n - 1, 2).sub(&params.b(n - 1, 3)));
    push(n, 7, hn7);
    gens
}

pub fn build_j(params: &MMParams) -> Ideal {
    Ideal::new(
        params.ring(),
        build_j_labeled(params)
            .into_iter()
            .map(|(_, g)| g)
            .collect(),
    )
}

/// The long family J_l(n,d) in the 10n+2-variable ring.
pub fn build_j_long_labeled(params: &MMParams) -> Vec<(GenLabel, Polynomial)> {
    let n = params.n;
    let d = params.d;
    let ring = params.long_ring();
    let s0 = Polynomial::var(ring, mm_vars::S);
    let f0 = Polynomial::var(ring, mm_vars::F);
    let b = |r: u32, i: u32| Polynomial::var(ring, mm_vars::b(r, i));
    let c = |r: u32, i: u32| Polynomial::var(ring, mm_vars::c(r, i));
    // s_r and f_r with the level-0 aliases s, f.
    let sl = |r: u32| {
        if r == 0 {
            s0.clone()
        } else {
            Polynomial::var(ring, mm_vars::s_level(n, r))
        }
    };
    let fl = |r: u32| {
        if r == 0 {
            f0.clone()
        } else {
            Polynomial::var(ring, mm_vars::f_level(n, r))
        }
    };

    let mut gens = Vec::new();
    let mut push = |r: u32, i: u32, p: Polynomial| gens.push((GenLabel { r, i }, p));

    for i in 1..=4 {
        push(0, i, c(0, i).mul(&s0.sub(&f0.mul(&b(0, i).pow(d)))));
    }
    for r in 1..=n {
        push(r, 1, sl(r).sub(&sl(r - 1).mul(&c(r - 1, 1))));
        push(r, 2, fl(r).sub(&sl(r - 1).mul(&c(r - 1, 4))));
        push(
            r,
            3,
            fl(r - 1)
                .mul(&c(r - 1, 1))
                .sub(&sl(r - 1).mul(&c(r - 1, 2))),
        );
        push(
            r,
            4,
            fl(r - 1)
                .mul(&c(r - 1, 4))
                .sub(&sl(r - 1).mul(&c(r - 1, 3))),
        );
        push(r, 5, sl(r - 1).mul(&c(r - 1, 3).sub(&c(r - 1, 2))));
        push(
            r,
            6,
            fl(r - 1).mul(
                &c(r - 1, 2)
                    .mul(&b(r - 1, 1))
                    .sub(&c(r - 1, 3).mul(&b(r - 1, 4))),
            ),
        );
    }
    for r in 2..n {
        for i in 1..=4 {
            let g = fl(r - 1)
                .mul(&c(r - 1, 2))
                .mul(&c(r, i))
                .mul(&b(r - 1, 2).sub(&b(r, i).mul(&b(r - 1, 3))));
            push(r, 6 + i, g);
        }
    }
    push(
        n,
        7,
        fl(n - 1)
            .mul(&c(n - 1, 2))
            .mul(&b(n - 1, 2).sub(&b(n - 1, 3))),
    );
    gens
}

pub fn build_j_long(params: &MMParams) -> Ideal {
    Ideal::new(
        params.long_ring(),
        build_j_long_labeled(params)
            .into_iter()
            .map(|(_, g)| g)
            .collect(),
    )
}

/// The rewriting map taking the long ring onto the short one: s_r and f_r
/// become the products forced by the generators s_r - s_{r-1} c_{r-1,1}
/// and f_r - s_{r-1} c_{r-1,4}; every other variable maps to itself.
pub fn substitution_sigma(params: &MMParams) -> HashMap<usize, Polynomial> {
    let n = params.n;
    let long = params.long_ring();
    let mut map: HashMap<usize, Polynomial> = HashMap::new();
    map.insert(mm_vars::S, params.s());
    map.insert(mm_vars::F, params.f());
    for r in 0..n {
        for i in 1..=4 {
            map.insert(mm_vars::b(r, i), params.b(r, i));
            map.insert(mm_vars::c(r, i), params.c(r, i));
        }
    }
    for r in 1..=n {
        let r_ = r as i64;
        map.insert(
            mm_vars::s_level(n, r),
            params.s().mul(&params.c1_run(0, r_ - 1)),
        );
        map.insert(
            mm_vars::f_level(n, r),
            params
                .s()
                .mul(&params.c1_run(0, r_ - 2))
                .mul(&params.c(r - 1, 4)),
        );
    }
    debug_assert_eq!(map.len(), long.nvars());
    map
}

/// The building-block ideals of the minimal-prime analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    C(u32),
    D(u32),
    B(u32),
    E,
    F,
    /// The variant of E with b03^d - b02^d in place of the two-step chain.
    E3,
}

pub fn block_ideal(kind: Block, params: &MMParams) -> Result<Ideal> {
    let n = params.n;
    let d = params.d;
    let gens: Vec<Polynomial> = match kind {
        Block::C(r) => {
            if r > n {
                return Err(AlgebraError::InvalidParams(format!("C({r}) with n={n}")));
            }
            if r == n {
                Vec::new()
            } else {
                (1..=4).map(|i| params.c(r, i)).collect()
            }
        }
        Block::D(r) => {
            if r > n {
                return Err(AlgebraError::InvalidParams(format!("D({r}) with n={n}")));
            }
            if r == n {
                Vec::new()
            } else if r == 0 {
                vec![
                    params.c(0, 4).sub(&params.c(0, 1)),
                    params.c(0, 3).sub(&params.c(0, 2)),
                    params
                        .c(0, 1)
                        .sub(&params.c(0, 2).mul(&params.b(0, 1).pow(d))),
                ]
            } else {
                vec![
                    params.c(r, 4).sub(&params.c(r, 1)),
                    params.c(r, 3).sub(&params.c(r, 2)),
                    params.c(r, 2).sub(&params.c(r, 1)),
                ]
            }
        }
        Block::B(r) => {
            if r + 1 > n {
                return Err(AlgebraError::InvalidParams(format!("B({r}) with n={n}")));
            }
            let mut gens = Vec::new();
            if r >= 2 {
                for j in 2..=r {
                    for i in 1..=4 {
                        gens.push(params.int(1).sub(&params.b(j, i)));
                    }
                }
            }
            gens
        }
        Block::E => vec![
            params.s().sub(&params.f().mul(&params.b(0, 1).pow(d))),
            params.b(0, 1).sub(&params.b(0, 4)),
            params.b(0, 2).pow(d).sub(&params.b(0, 3).pow(d)),
            params.b(0, 1).pow(d).sub(&params.b(0, 2).pow(d)),
        ],
        Block::F => vec![
            params.b(0, 2).sub(&params.b(1, 1).mul(&params.b(0, 3))),
            params.b(1, 4).sub(&params.b(1, 1)),
            params.b(1, 3).sub(&params.b(1, 1)),
            params.b(1, 2).sub(&params.b(1, 1)),
            params.b(1, 2).pow(d).sub(&params.int(1)),
        ],
        Block::E3 => vec![
            params.s().sub(&params.f().mul(&params.b(0, 1).pow(d))),
            params.b(0, 1).sub(&params.b(0, 4)),
            params.b(0, 3).pow(d).sub(&params.b(0, 2).pow(d)),
        ],
    };
    Ok(Ideal::new(params.ring(), gens))
}

/// p_r: the common core of the level-r primes not containing s*f.
pub fn build_p(r: u32, params: &MMParams) -> Result<Ideal> {
    let n = params.n;
    if r < 1 || r > n {
        return Err(AlgebraError::InvalidParams(format!("p_{r} with n={n}")));
    }
    let mut acc = block_ideal(Block::C(r), params)?
        .sum(&block_ideal(Block::E, params)?)
        .sum(&block_ideal(Block::D(0), params)?);
    if r > 1 {
        acc = acc
            .sum(&block_ideal(Block::F, params)?)
            .sum(&block_ideal(Block::B(r - 1), params)?);
        for j in 1..r {
            acc = acc.sum(&block_ideal(Block::D(j), params)?);
        }
    }
    Ok(acc)
}

/// Labels for the n(d')^2 + 20 minimal primes. Root indices refer to the
/// deterministic root list of the parameters; Lambda is a 4-bit mask with
/// bit i-1 recording membership of i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PrimeLabel {
    P0,
    Pr { r: u32, alpha: usize, beta: usize },
    Pm1,
    Pm2,
    Pm3,
    Pm4 { mask: u8 },
}

impl fmt::Display for PrimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeLabel::P0 => write!(f, "P0"),
            PrimeLabel::Pr { r, alpha, beta } => write!(f, "P{r}[a{alpha},b{beta}]"),
            PrimeLabel::Pm1 => write!(f, "Pm1"),
            PrimeLabel::Pm2 => write!(f, "Pm2"),
            PrimeLabel::Pm3 => write!(f, "Pm3"),
            PrimeLabel::Pm4 { mask } => {
                let members: String = (1..=4)
                    .filter(|i| mask & (1 << (i - 1)) != 0)
                    .map(|i| i.to_string())
                    .collect();
                write!(f, "Pm4{{{members}}}")
            }
        }
    }
}

/// Enumerates all prime labels in deterministic report order.
pub fn enumerate_labels(params: &MMParams) -> Result<Vec<PrimeLabel>> {
    let dp = params.roots()?.len();
    let mut labels = vec![PrimeLabel::P0];
    for r in 1..=params.n {
        for alpha in 0..dp {
            for beta in 0..dp {
                labels.push(PrimeLabel::Pr { r, alpha, beta });
            }
        }
    }
    labels.push(PrimeLabel::Pm1);
    labels.push(PrimeLabel::Pm2);
    labels.push(PrimeLabel::Pm3);
    for mask in 0..16u8 {
        labels.push(PrimeLabel::Pm4 { mask });
    }
    Ok(labels)
}

/// The minimal prime with the given label.
pub fn build_prime(label: PrimeLabel, params: &MMParams) -> Result<Ideal> {
    let ring = params.ring();
    match label {
        PrimeLabel::P0 => block_ideal(Block::C(0), params),
        PrimeLabel::Pr { r, alpha, beta } => {
            let roots = params.roots()?;
            let a = roots
                .get(alpha)
                .ok_or_else(|| AlgebraError::InvalidLabel(format!("root index {alpha}")))?
                .clone();
            let bt = roots
                .get(beta)
                .ok_or_else(|| AlgebraError::InvalidLabel(format!("root index {beta}")))?
                .clone();
            let mut gens = vec![
                params.b(0, 1).sub(&params.b(0, 2).scale(&a)),
                params.b(0, 2).sub(&params.b(0, 3).scale(&bt)),
            ];
            if r >= 2 {
                for i in 1..=4 {
                    gens.push(Polynomial::constant(ring, bt.clone()).sub(&params.b(1, i)));
                }
            }
            Ok(build_p(r, params)?.sum(&Ideal::new(ring, gens)))
        }
        PrimeLabel::Pm1 => Ok(Ideal::new(ring, vec![params.s(), params.f()])),
        PrimeLabel::Pm2 => Ok(Ideal::new(
            ring,
            vec![
                params.s(),
                params.c(0, 1),
                params.c(0, 2),
                params.c(0, 4),
                params.b(0, 3),
                params.b(0, 4),
            ],
        )),
        PrimeLabel::Pm3 => Ok(Ideal::new(
            ring,
            vec![
                params.s(),
                params.c(0, 1),
                params.c(0, 4),
                params.b(0, 2),
                params.b(0, 3),
                params
                    .c(0, 2)
                    .mul(&params.b(0, 1))
                    .sub(&params.c(0, 3).mul(&params.b(0, 4))),
            ],
        )),
        PrimeLabel::Pm4 { mask } => {
            let mut gens = Vec::new();
            for i in 1..=4u32 {
                if mask & (1 << (i - 1)) == 0 {
                    gens.push(params.c(1, i));
                } else {
                    gens.push(params.b(1, i));
                }
            }
            gens.extend([
                params.s(),
                params.c(0, 1),
                params.c(0, 3),
                params.c(0, 4),
                params.b(0, 1),
                params.b(0, 2),
            ]);
            Ok(Ideal::new(ring, gens))
        }
    }
}

/// The primary component of J belonging to the labeled minimal prime.
/// Only Pm2 and the Pm4 family differ from their primes.
pub fn build_component(label: PrimeLabel, params: &MMParams) -> Result<Ideal> {
    let ring = params.ring();
    let d = params.d;
    match label {
        PrimeLabel::Pm2 => Ok(Ideal::new(
            ring,
            vec![
                params.s(),
                params.c(0, 1),
                params.c(0, 2),
                params.c(0, 4),
                params.b(0, 3).pow(d),
                params.b(0, 4),
            ],
        )),
        PrimeLabel::Pm4 { mask } => {
            let mut gens = Vec::new();
            let members: Vec<u32> = (1..=4).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            for i in 1..=4u32 {
                if !members.contains(&i) {
                    gens.push(params.c(1, i));
                }
            }
            for &i in &members {
                gens.push(params.b(1, i).pow(d));
                gens.push(params.b(0, 2).sub(&params.b(1, i).mul(&params.b(0, 3))));
            }
            for (k, &i) in members.iter().enumerate() {
                for &j in &members[k + 1..] {
                    gens.push(params.b(1, i).sub(&params.b(1, j)));
                }
            }
            gens.extend([
                params.s(),
                params.c(0, 1),
                params.c(0, 3),
                params.c(0, 4),
                params.b(0, 1),
                params.b(0, 2).pow(d),
            ]);
            Ok(Ideal::new(ring, gens))
        }
        other => build_prime(other, params),
    }
}

/// The undecomposed level-1 component core p_{-4}; the colon splits along
/// c_{11}..c_{14} decompose it into the sixteen p_{-4,Lambda}.
pub fn build_p_minus4(params: &MMParams) -> Ideal {
    let d = params.d;
    let mut gens = vec![
        params.s(),
        params.c(0, 1),
        params.c(0, 3),
        params.c(0, 4),
        params.b(0, 1),
        params.b(0, 2).pow(d),
    ];
    for i in 1..=4 {
        gens.push(
            params
                .c(1, i)
                .mul(&params.b(0, 2).sub(&params.b(1, i).mul(&params.b(0, 3)))),
        );
        gens.push(params.c(1, i).mul(&params.b(1, i).pow(d)));
    }
    for i in 1..=4u32 {
        for j in i + 1..=4 {
            gens.push(
                params
                    .c(1, i)
                    .mul(&params.c(1, j))
                    .mul(&params.b(1, i).sub(&params.b(1, j))),
            );
        }
    }
    Ideal::new(params.ring(), gens)
}

/// h * I, generator by generator.
fn scale_by(h: &Polynomial, i: &Ideal) -> Ideal {
    Ideal::new(i.ring(), i.gens().iter().map(|g| h.mul(g)).collect())
}

/// sum over i = 0..n-1 of (prod_{j=start..=i} c_{j1}) * (D_{i+1} + B_i),
/// the monomial-prefixed tail shared by the closed intersection formulas.
fn monomial_tail(params: &MMParams, start: u32) -> Result<Ideal> {
    let n = params.n;
    let mut acc = Ideal::zero(params.ring());
    for i in 0..n {
        let run = params.c1_run(start as i64, i as i64);
        let body =
            block_ideal(Block::D(i + 1), params)?.sum(&block_ideal(Block::B(i), params)?);
        acc = acc.sum(&scale_by(&run, &body));
    }
    Ok(acc)
}

/// The L-series ideals of the minimal-component intersection computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LVariant {
    /// L': L'' plus c11-multiples of the level-1 differences and the
    /// monomial-prefixed tail.
    LPrime,
    /// L'': the short core (s - f b01^d, b01 - b04, b01^d - b03^d) + D0 + D1.
    LDoublePrime,
    /// L''': the full intersection's generators except b01^d - b03^d.
    LTriplePrime,
}

pub fn build_l(variant: LVariant, params: &MMParams) -> Result<Ideal> {
    let ring = params.ring();
    let d = params.d;
    let l2 = Ideal::new(
        ring,
        vec![
            params.s().sub(&params.f().mul(&params.b(0, 1).pow(d))),
            params.b(0, 1).sub(&params.b(0, 4)),
            params.b(0, 1).pow(d).sub(&params.b(0, 3).pow(d)),
        ],
    )
    .sum(&block_ideal(Block::D(0), params)?)
    .sum(&block_ideal(Block::D(1), params)?);
    match variant {
        LVariant::LDoublePrime => Ok(l2),
        LVariant::LPrime => {
            let c11 = params.c(1, 1);
            let mut extra = Vec::new();
            for i in 1..=4u32 {
                for j in i + 1..=4 {
                    extra.push(c11.mul(&params.b(1, i).sub(&params.b(1, j))));
                }
            }
            extra.push(c11.mul(&params.b(1, 2).pow(d).sub(&params.int(1))));
            Ok(l2
                .sum(&Ideal::new(ring, extra))
                .sum(&monomial_tail(params, 1)?))
        }
        LVariant::LTriplePrime => {
            let base = Ideal::new(
                ring,
                vec![
                    params.s().sub(&params.f().mul(&params.b(0, 1).pow(d))),
                    params.b(0, 1).sub(&params.b(0, 4)),
                    params.b(0, 2).pow(d).sub(&params.b(0, 3).pow(d)),
                ],
            );
            Ok(base
                .sum(&block_ideal(Block::D(0), params)?)
                .sum(&c1f_and_block_tail(params, params.n)?))
        }
    }
}

/// C_1 F + sum_{i=0..r-1} C_1...C_i (D_{i+1} + B_i) + C_1...C_r, the
/// block-product tail of the closed formula for p_1 cap ... cap p_r.
fn c1f_and_block_tail(params: &MMParams, r: u32) -> Result<Ideal> {
    let ring = params.ring();
    let c_blocks: Vec<Ideal> = (0..=r)
        .map(|j| block_ideal(Block::C(j), params))
        .collect::<Result<Vec<_>>>()?;
    let mut acc = c_blocks[1].product(&block_ideal(Block::F, params)?);
    for i in 0..r {
        let prefix = product_of(ring, &c_blocks[1..=i as usize]);
        let body =
            block_ideal(Block::D(i + 1), params)?.sum(&block_ideal(Block::B(i), params)?);
        acc = acc.sum(&prefix.product(&body));
    }
    acc = acc.sum(&product_of(ring, &c_blocks[1..=r as usize]));
    Ok(acc)
}

/// Closed formula for p_1 cap p_2 cap ... cap p_r (2 <= r <= n):
/// E + D_0 + C_1 F + sum C_1..C_i (D_{i+1} + B_i) + C_1..C_r.
pub fn build_pr_intersection_formula(r: u32, params: &MMParams) -> Result<Ideal> {
    if r < 2 || r > params.n {
        return Err(AlgebraError::InvalidParams(format!(
            "intersection formula needs 2 <= r <= n, got {r}"
        )));
    }
    Ok(block_ideal(Block::E, params)?
        .sum(&block_ideal(Block::D(0), params)?)
        .sum(&c1f_and_block_tail(params, r)?))
}

/// The closed form of the intersection of all minimal components of J(n,d):
/// J + s D_0 plus nine f c02-prefixed summands.
pub fn build_min_intersection(params: &MMParams) -> Result<Ideal> {
    let ring = params.ring();
    let d = params.d;
    let s = params.s();
    let f = params.f();
    let c02 = params.c(0, 2);
    let c03 = params.c(0, 3);
    let b01 = params.b(0, 1);
    let b02 = params.b(0, 2);
    let b03 = params.b(0, 3);
    let b04 = params.b(0, 4);
    let c11 = params.c(1, 1);
    let b11 = params.b(1, 1);
    let fc02 = f.mul(&c02);

    let e = block_ideal(Block::E, params)?;
    let e3 = block_ideal(Block::E3, params)?;
    let d0 = block_ideal(Block::D(0), params)?;
    let d1 = block_ideal(Block::D(1), params)?;
    let c1 = block_ideal(Block::C(1), params)?;
    let fblk = block_ideal(Block::F, params)?;
    let c1f = c1.product(&fblk);
    let tail1 = monomial_tail(params, 1)?;
    let tail2 = monomial_tail(params, 2)?;

    let c03_b01 = Ideal::new(ring, vec![c03.clone(), b01.clone()]);
    let sfb = Ideal::new(ring, vec![s.sub(&f.mul(&b01.pow(d))), b01.sub(&b04)]);

    let mut acc = build_j(params);
    // s D_0
    acc = acc.sum(&scale_by(&s, &d0));
    // f c02 b02 (c03, b01)(s - f b01^d, b01 - b04)
    let fc02b02 = fc02.mul(&b02);
    acc = acc.sum(&scale_by(&fc02b02, &c03_b01.product(&sfb)));
    // f c02 b02 (c03, b01)(D_0 + D_1)
    acc = acc.sum(&scale_by(&fc02b02, &c03_b01.product(&d0.sum(&d1))));
    // f c02 c03 (b02^d - b03^d, b02 (b01^d - b03^d))
    let fc02c03 = fc02.mul(&c03);
    acc = acc.sum(&scale_by(
        &fc02c03,
        &Ideal::new(
            ring,
            vec![
                b02.pow(d).sub(&b03.pow(d)),
                b02.mul(&b01.pow(d).sub(&b03.pow(d))),
            ],
        ),
    ));
    // f c02 c03 b03 (E + D_0 + C_1 F + tail)
    acc = acc.sum(&scale_by(
        &fc02c03.mul(&b03),
        &e.sum(&d0).sum(&c1f).sum(&tail1),
    ));
    // f c02 (b02(b01^d - b02^d), b03(c_{1i} b_{1i}^d - c11 b11^d), b03(b01^d - b02^d))
    let mut mid = vec![
        b02.mul(&b01.pow(d).sub(&b02.pow(d))),
        b03.mul(&b01.pow(d).sub(&b02.pow(d))),
    ];
    for i in 1..=4 {
        mid.push(
            b03.mul(
                &params
                    .c(1, i)
                    .mul(&params.b(1, i).pow(d))
                    .sub(&c11.mul(&b11.pow(d))),
            ),
        );
    }
    acc = acc.sum(&scale_by(&fc02, &Ideal::new(ring, mid)));
    // f c02 (b01(b03^d - b02^d), c11 b11^d (b03^d - b02^d))
    acc = acc.sum(&scale_by(
        &fc02,
        &Ideal::new(
            ring,
            vec![
                b01.mul(&b03.pow(d).sub(&b02.pow(d))),
                c11.mul(&b11.pow(d)).mul(&b03.pow(d).sub(&b02.pow(d))),
            ],
        ),
    ));
    // f c02 b03 b01 (E''' + D_0 + C_1 F + tail)
    acc = acc.sum(&scale_by(
        &fc02.mul(&b03).mul(&b01),
        &e3.sum(&d0).sum(&c1f).sum(&tail1),
    ));
    // f c02 b03 b11^d c11 (E''' + D_0 + F + tail started at level 2)
    acc = acc.sum(&scale_by(
        &fc02.mul(&b03).mul(&b11.pow(d)).mul(&c11),
        &e3.sum(&d0).sum(&fblk).sum(&tail2),
    ));
    // f c02 b02^d (E + D_0 + C_1 F + tail)
    acc = acc.sum(&scale_by(
        &fc02.mul(&b02.pow(d)),
        &e.sum(&d0).sum(&c1f).sum(&tail1),
    ));
    Ok(acc)
}

/// The witness s c01 c11 ... c_{n-2,1} (c_{n-1,1} - c_{n-1,4}): the image
/// of s_n - f_n, degree n+1, inside J by construction.
pub fn witness(params: &MMParams) -> Polynomial {
    let n = params.n as i64;
    params
        .s()
        .mul(&params.c1_run(0, n - 2))
        .mul(&params.c(params.n - 1, 1).sub(&params.c(params.n - 1, 4)))
}

/// c' = c11 c21 ... c_{n-2,1} (c_{n-1,1} - c_{n-1,4}).
pub fn cprime(params: &MMParams) -> Polynomial {
    let n = params.n as i64;
    params
        .c1_run(1, n - 2)
        .mul(&params.c(params.n - 1, 1).sub(&params.c(params.n - 1, 4)))
}

/// The four-term certificate expressing the witness over three generators
/// of J and one generator of the minimal-component intersection:
/// pairs (coefficient, element) summing exactly to the witness.
pub fn certificate_terms(params: &MMParams) -> Vec<(Polynomial, Polynomial)> {
    let d = params.d;
    let s = params.s();
    let f = params.f();
    let cp = cprime(params);
    let b01d = params.b(0, 1).pow(d);
    let h01 = params.c(0, 1).mul(&s.sub(&f.mul(&b01d)));
    let h13 = f.mul(&params.c(0, 1)).sub(&s.mul(&params.c(0, 2)));
    let h02 = params.c(0, 2).mul(&s.sub(&f.mul(&params.b(0, 2).pow(d))));
    let last = f.mul(&params.c(0, 2)).mul(&params.b(0, 2).pow(d)).mul(&cp);
    vec![
        (cp.clone(), h01),
        (b01d.mul(&cp), h13),
        (b01d.mul(&cp), h02),
        (b01d, last),
    ]
}

/// Intersection of the labeled components (or primes), folded smallest
/// first; the harness uses this as the independent side of the formulas.
pub fn intersect_labeled(
    params: &MMParams,
    labels: &[PrimeLabel],
    components: bool,
    cfg: &crate::groebner::Config,
) -> Result<Ideal> {
    let ideals: Vec<Ideal> = labels
        .iter()
        .map(|&l| {
            if components {
                build_component(l, params)
            } else {
                build_prime(l, params)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    intersect_all(params.ring(), &ideals, cfg)
}

/// Expected height of each labeled prime.
pub fn expected_height(label: PrimeLabel, n: u32) -> u32 {
    match label {
        PrimeLabel::P0 => 4,
        PrimeLabel::Pr { r, .. } => {
            if r < n {
                7 * r + 4
            } else {
                7 * n
            }
        }
        PrimeLabel::Pm1 => 2,
        PrimeLabel::Pm2 | PrimeLabel::Pm3 => 6,
        PrimeLabel::Pm4 { .. } => 10,
    }
}
