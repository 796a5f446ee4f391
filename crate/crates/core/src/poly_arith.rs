//! Dense univariate polynomials over a [`FieldDesc`], with gcd, Rabin's
//! irreducibility test and complete factorization (squarefree, distinct-degree
//! and Cantor–Zassenhaus equal-degree splitting).
//!
//! Instantiated over `F_q` with variable `T` this is the ring `A = F_q[T]`.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::finite_field::{prime_divisors, FieldDesc, FieldElement};

/// A polynomial with coefficients in a finite field, lowest degree first.
///
/// The zero polynomial has an empty coefficient vector and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldDesc,
    coeffs: Vec<FieldElement>,
}

/// `A = F_q[T]`.
pub type TPoly = Poly;

impl Poly {
    pub fn zero(field: &FieldDesc) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldDesc) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Poly {
        let field = c.field().clone();
        Poly::from_coeffs(&field, vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Poly {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::from_coeffs(&field, coeffs)
    }

    /// The variable `X`.
    pub fn x(field: &FieldDesc) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    /// Panics if a coefficient lives in another field.
    pub fn from_coeffs(field: &FieldDesc, coeffs: Vec<FieldElement>) -> Poly {
        assert!(
            coeffs.iter().all(|c| c.field() == field),
            "coefficient from a different field"
        );
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// Integer coefficients (reduced mod `p`), lowest degree first.
    pub fn from_ints(field: &FieldDesc, coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(field, coeffs.iter().map(|c| field.from_int(*c)).collect())
    }

    /// The monic polynomial of degree `d` whose lower coefficients are the
    /// base-`q` digits of `index`. Index order is the canonical lex order.
    pub fn monic_from_index(field: &FieldDesc, d: usize, mut index: u64) -> Poly {
        let q = field.order();
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(field.from_index(index % q));
            index /= q;
        }
        coeffs.push(field.one());
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Inverse of [`Poly::monic_from_index`] (the leading coefficient is ignored).
    pub fn monic_index(&self) -> u64 {
        let q = self.field.order();
        let n = self.coeffs.len().saturating_sub(1);
        self.coeffs[..n]
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * q + c.index())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Poly::from_coeffs(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                c * &self
                    .field
                    .from_int((i as u64 % self.field.characteristic()) as i64)
            })
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Poly::from_coeffs(&self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Poly::from_coeffs(&self.field, coeffs))
    }

    /// Quotient and remainder with `deg r < deg divisor`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(n) = self.degree().filter(|n| *n >= d) else {
            return Ok((Poly::zero(&self.field), self.clone()));
        };
        let inv_lc = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); n - d + 1];
        for k in (d..=n).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] * &inv_lc;
            for (t, b) in divisor.coeffs.iter().enumerate() {
                rem[k - d + t] = &rem[k - d + t] - &(&c * b);
            }
            quot[k - d] = c;
        }
        rem.truncate(d);
        Ok((
            Poly::from_coeffs(&self.field, quot),
            Poly::from_coeffs(&self.field, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub(crate) fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divmod(divisor).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut result = Poly::one(&self.field).rem(m).expect("nonzero modulus");
        let mut base = self.rem(m).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem(m).unwrap();
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(m).unwrap();
            }
        }
        result
    }

    /// Monic greatest common divisor; `gcd(a, 0) = monic(a)`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidInput("gcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Rabin's test: `f | X^(q^n) - X` and `gcd(f, X^(q^(n/l)) - X) = 1` for
    /// every prime `l | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => {
                return Err(Error::InvalidInput(
                    "irreducibility of a constant is undefined".into(),
                ))
            }
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let q = self.field.order();
        let x = Poly::x(&self.field);
        let divisors = prime_divisors(n as u64);
        let mut h = x.clone();
        for i in 1..=n {
            h = h.pow_mod(q, &f);
            if i < n && divisors.iter().any(|l| (n as u64 / l) as usize == i) {
                let g = f.gcd(&(&h - &x))?;
                if !g.is_one() {
                    return Ok(false);
                }
            }
        }
        Ok((&h - &x).rem(&f)?.is_zero())
    }

    /// Complete factorization into monic irreducibles. Equal-degree splitting
    /// draws from a generator seeded with `seed`; the result itself is unique.
    pub fn factor(&self, seed: u64) -> Result<Factorization> {
        let unit = match self.degree() {
            Some(n) if n >= 1 => self.coeffs[n].clone(),
            _ => {
                return Err(Error::InvalidInput(
                    "cannot factor a constant polynomial".into(),
                ))
            }
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut factors = Vec::new();
        for (part, mult) in squarefree_decomposition(&self.monic()) {
            for (block, d) in distinct_degree(&part) {
                for g in equal_degree(&block, d, &mut rng) {
                    factors.push((g, mult));
                }
            }
        }
        factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        let mut merged: Vec<(Poly, usize)> = Vec::with_capacity(factors.len());
        for (g, m) in factors {
            match merged.last_mut() {
                Some((h, k)) if *h == g => *k += m,
                _ => merged.push((g, m)),
            }
        }
        Ok(Factorization {
            unit,
            factors: merged,
        })
    }

    /// Degree first, then coefficients from the top down.
    pub fn cmp_canonical(&self, other: &Poly) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Descending-degree rendering in the variable `var`, e.g. `T^2 + 2*T + 1`.
    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.to_string(), c.is_one())),
            var,
        )
    }

    /// Every coefficient raised to the `1/p` power, exponents divided by `p`.
    /// Requires `self' = 0`.
    fn pth_root(&self) -> Poly {
        let p = self.field.characteristic() as usize;
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .map(|c| c.pth_root())
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

/// Joins `(exponent, coefficient text, coefficient is one)` terms, highest
/// exponent first. Multi-term coefficients are parenthesized.
pub(crate) fn render_terms(
    terms: impl Iterator<Item = (usize, String, bool)>,
    var: &str,
) -> String {
    let mut out = String::new();
    for (i, c, is_one) in terms {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if i == 0 {
            out.push_str(&c);
            continue;
        }
        if !is_one {
            if c.contains(" + ") {
                let _ = write!(out, "({c})*");
            } else {
                let _ = write!(out, "{c}*");
            }
        }
        out.push_str(var);
        if i > 1 {
            let _ = write!(out, "^{i}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render("X"))
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// `unit * prod(factor^multiplicity)`, factors monic, irreducible, distinct
/// and sorted by [`Poly::cmp_canonical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn reassemble(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (g, m)| {
                &acc * &g.pow(*m as u64)
            })
    }

    /// Degrees of the factors, repeated by multiplicity, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.degree().unwrap(), *m))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }
}

/// Squarefree parts `(g_i, i)` with `f = prod g_i^i`, for monic `f`.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let p = f.field.characteristic() as usize;
    let mut out = Vec::new();
    let df = f.derivative();
    let mut c = if df.is_zero() {
        f.clone()
    } else {
        f.gcd(&df).unwrap()
    };
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c).unwrap();
        let fac = w.exact_div(&y);
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_constant() {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic squarefree `f` into blocks `(g, d)` where `g` is the
/// product of all irreducible factors of degree `d`.
fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let q = f.field.order();
    let x = Poly::x(&f.field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &rest);
        let g = rest.gcd(&(&h - &x)).unwrap();
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest).unwrap();
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(n) = rest.degree().filter(|n| *n > 0) {
        out.push((rest, n));
    }
    out
}

/// Cantor–Zassenhaus splitting of a monic squarefree `f` whose irreducible
/// factors all have degree `d`. Odd `q` uses `a^((q^d - 1)/2)`, even `q` the
/// absolute trace `a + a^2 + ... + a^(2^(kd-1))`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field.clone();
    let q = field.order();
    let one = Poly::one(&field);
    loop {
        let coeffs = (0..n)
            .map(|_| field.from_index(rng.random_range(0..q)))
            .collect();
        let a = Poly::from_coeffs(&field, coeffs);
        if a.is_constant() {
            continue;
        }
        let probe = if q % 2 == 1 {
            // a^(1 + q + ... + q^(d-1)) is the norm down to F_q.
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = t.pow_mod(q, f);
                norm = (&norm * &t).rem(f).unwrap();
            }
            &norm.pow_mod((q - 1) / 2, f) - &one
        } else {
            let mut t = a.rem(f).unwrap();
            let mut trace = t.clone();
            for _ in 1..field.degree() * d {
                t = (&t * &t).rem(f).unwrap();
                trace = &trace + &t;
            }
            trace
        };
        if probe.is_zero() {
            continue;
        }
        let g = f.gcd(&probe).unwrap();
        let k = g.degree().unwrap();
        if k > 0 && k < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.exact_div(&g), d, rng));
            return out;
        }
    }
}

const SIEVE_LIMIT: u64 = 1 << 24;

/// All monic irreducibles of degree `d`, in canonical lex order.
pub fn monic_irreducibles(field: &FieldDesc, d: usize) -> Vec<Poly> {
    if d == 0 {
        return Vec::new();
    }
    let q = field.order();
    let total = (q as u128).pow(d as u32);
    if d == 1 {
        return (0..q)
            .map(|i| Poly::monic_from_index(field, 1, i))
            .collect();
    }
    if total > SIEVE_LIMIT as u128 {
        return (0..total as u64)
            .map(|i| Poly::monic_from_index(field, d, i))
            .filter(|f| f.is_irreducible().unwrap())
            .collect();
    }
    // Sieve: every reducible monic of degree d is an irreducible of degree
    // e <= d/2 times a monic of degree d - e.
    let mut reducible = vec![false; total as usize];
    for e in 1..=d / 2 {
        let rest = q.pow((d - e) as u32);
        for a in monic_irreducibles(field, e) {
            for i in 0..rest {
                let prod = &a * &Poly::monic_from_index(field, d - e, i);
                reducible[prod.monic_index() as usize] = true;
            }
        }
    }
    reducible
        .iter()
        .enumerate()
        .filter(|(_, r)| !**r)
        .map(|(i, _)| Poly::monic_from_index(field, d, i as u64))
        .collect()
}

pub(crate) fn first_monic_irreducible(field: &FieldDesc, d: usize) -> Poly {
    (0..)
        .map(|i| Poly::monic_from_index(field, d, i))
        .find(|f| f.is_irreducible().unwrap())
        .expect("irreducibles exist in every degree")
}

/// A monic irreducible of degree `d` found by seeded rejection sampling.
pub fn random_irreducible(field: &FieldDesc, d: usize, seed: u64) -> Result<Poly> {
    if d == 0 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let total = (field.order() as u128).pow(d as u32);
    if total > u64::MAX as u128 {
        return Err(Error::InvalidInput(format!("degree {d} is too large")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let f = Poly::monic_from_index(field, d, rng.random_range(0..total as u64));
        if f.is_irreducible()? {
            return Ok(f);
        }
    }
}

/// Number of monic irreducibles of degree `d` over `F_q`:
/// `(1/d) * sum_{e | d} mu(e) q^(d/e)`.
pub fn necklace_count(q: u64, d: usize) -> u64 {
    let mut sum: i128 = 0;
    for e in 1..=d {
        if !d.is_multiple_of(e) {
            continue;
        }
        let primes = prime_divisors(e as u64);
        if primes.iter().product::<u64>() != e as u64 {
            continue;
        }
        let term = (q as i128).pow((d / e) as u32);
        if primes.len().is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    (sum / d as i128) as u64
}
