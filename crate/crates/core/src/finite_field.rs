//! Exact arithmetic in prime fields `F_p` and in extension towers
//! `base[x]/(M(x))` for a monic irreducible `M` over the base.
//!
//! An element is stored as its reduced coefficient vector over `F_p`
//! (length = absolute degree `m`). For a tower the vector is the
//! concatenation of the base-field coordinates of each power of the
//! generator, lowest power first.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::poly_arith::Poly;

/// Coordinates of a field element over `F_p`.
pub type Rep = SmallVec<[u32; 8]>;

/// Descriptor of a finite field. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct FieldDesc(Arc<FieldInner>);

struct FieldInner {
    p: u64,
    degree: usize,
    order: u64,
    ext: Option<Extension>,
    symbol: String,
}

struct Extension {
    base: FieldDesc,
    /// Monic modulus over the base, lowest degree first.
    modulus: Vec<Rep>,
}

impl Extension {
    fn rel_degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldDesc {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 31 {
            return Err(Error::FieldTooLarge { p, m: 1 });
        }
        Ok(FieldDesc(Arc::new(FieldInner {
            p,
            degree: 1,
            order: p,
            ext: None,
            symbol: String::new(),
        })))
    }

    /// `base[symbol]/(modulus)`. The modulus must be monic and irreducible
    /// over `base`; this is checked here.
    pub fn extension(modulus: &Poly, symbol: &str) -> Result<Self> {
        let base = modulus.field().clone();
        let d = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::InvalidModulus(
                    "modulus must have degree at least 1".into(),
                ))
            }
        };
        if !modulus.is_monic() {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if !modulus.is_irreducible()? {
            return Err(Error::InvalidModulus(format!(
                "{} is reducible",
                modulus.render(symbol)
            )));
        }
        let degree = base.degree() * d;
        let order = base
            .order()
            .checked_pow(d as u32)
            .filter(|o| *o < 1 << 63)
            .ok_or(Error::FieldTooLarge {
                p: base.characteristic(),
                m: degree,
            })?;
        Ok(FieldDesc(Arc::new(FieldInner {
            p: base.characteristic(),
            degree,
            order,
            ext: Some(Extension {
                base,
                modulus: modulus.coeffs().iter().map(|c| c.rep.clone()).collect(),
            }),
            symbol: symbol.to_string(),
        })))
    }

    /// `F_p[x]/(modulus)` for a modulus given over `F_p`.
    pub fn prime_extension(p: u64, modulus_coeffs: &[i64]) -> Result<Self> {
        let base = FieldDesc::prime(p)?;
        let m = Poly::from_ints(&base, modulus_coeffs);
        FieldDesc::extension(&m, "x")
    }

    /// `F_{p^m}` with the lexicographically smallest monic irreducible modulus
    /// of degree `m`.
    pub fn galois(p: u64, m: usize) -> Result<Self> {
        let base = FieldDesc::prime(p)?;
        if m == 0 {
            return Err(Error::InvalidInput("extension degree must be >= 1".into()));
        }
        if m == 1 {
            return Ok(base);
        }
        if (p as f64).powi(m as i32) >= 9.2e18 {
            return Err(Error::FieldTooLarge { p, m });
        }
        let modulus = crate::poly_arith::first_monic_irreducible(&base, m);
        FieldDesc::extension(&modulus, "x")
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Absolute degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Number of elements `q = p^m`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.ext.is_none()
    }

    /// Name of the adjoined generator (empty for a prime field).
    pub fn symbol(&self) -> &str {
        &self.0.symbol
    }

    /// Immediate subfield of an extension.
    pub fn base(&self) -> Option<&FieldDesc> {
        self.0.ext.as_ref().map(|e| &e.base)
    }

    /// Defining polynomial of an extension over its base.
    pub fn modulus(&self) -> Option<Poly> {
        self.0.ext.as_ref().map(|e| {
            Poly::from_coeffs(
                &e.base,
                e.modulus
                    .iter()
                    .map(|r| FieldElement {
                        field: e.base.clone(),
                        rep: r.clone(),
                    })
                    .collect(),
            )
        })
    }

    pub fn ptr_eq(&self, other: &FieldDesc) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            rep: smallvec![0; self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut rep: Rep = smallvec![0; self.degree()];
        rep[0] = 1;
        FieldElement {
            field: self.clone(),
            rep,
        }
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        let mut e = self.zero();
        e.rep[0] = n.rem_euclid(p) as u32;
        e
    }

    /// The adjoined generator of an extension; `None` for a prime field.
    pub fn generator(&self) -> Option<FieldElement> {
        let ext = self.0.ext.as_ref()?;
        let w = ext.base.degree();
        let mut e = self.zero();
        if ext.rel_degree() == 1 {
            // base[x]/(x + c): the generator is -c
            let c = &ext.modulus[0];
            for (i, v) in c.iter().enumerate() {
                e.rep[i] = ((self.0.p - *v as u64) % self.0.p) as u32;
            }
        } else {
            e.rep[w] = 1;
        }
        Some(e)
    }

    /// Element with integer encoding `index` (`sum rep[i] * p^i`).
    pub fn from_index(&self, mut index: u64) -> FieldElement {
        let mut e = self.zero();
        for c in e.rep.iter_mut() {
            *c = (index % self.0.p) as u32;
            index /= self.0.p;
        }
        e
    }

    /// Every element, in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    /// The smallest (by index) generator of the cyclic group `F_q^*`.
    pub fn primitive_element(&self) -> FieldElement {
        let n = self.order() - 1;
        self.elements()
            .skip(1)
            .find(|e| e.multiplicative_order() == n)
            .expect("F_q^* is cyclic")
    }

    pub(crate) fn add_rep(&self, a: &[u32], b: &[u32]) -> Rep {
        let p = self.0.p as u32;
        a.iter()
            .zip(b)
            .map(|(x, y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect()
    }

    pub(crate) fn sub_rep(&self, a: &[u32], b: &[u32]) -> Rep {
        let p = self.0.p as u32;
        a.iter()
            .zip(b)
            .map(|(x, y)| if x >= y { x - y } else { x + p - y })
            .collect()
    }

    pub(crate) fn neg_rep(&self, a: &[u32]) -> Rep {
        let p = self.0.p as u32;
        a.iter().map(|x| if *x == 0 { 0 } else { p - x }).collect()
    }

    pub(crate) fn mul_rep(&self, a: &[u32], b: &[u32]) -> Rep {
        let p = self.0.p;
        let ext = match &self.0.ext {
            None => return smallvec![((a[0] as u64 * b[0] as u64) % p) as u32],
            Some(ext) => ext,
        };
        let d = ext.rel_degree();
        if ext.base.is_prime_field() {
            let mut prod = vec![0u64; 2 * d - 1];
            for (i, x) in a.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + *x as u64 * *y as u64) % p;
                }
            }
            for k in (d..2 * d - 1).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                let neg = p - c;
                for t in 0..d {
                    prod[k - d + t] = (prod[k - d + t] + neg * ext.modulus[t][0] as u64) % p;
                }
            }
            return prod[..d].iter().map(|v| *v as u32).collect();
        }
        let base = &ext.base;
        let w = base.degree();
        let zero: Rep = smallvec![0; w];
        let mut prod: Vec<Rep> = vec![zero; 2 * d - 1];
        for i in 0..d {
            let x = &a[i * w..(i + 1) * w];
            if x.iter().all(|v| *v == 0) {
                continue;
            }
            for j in 0..d {
                let y = &b[j * w..(j + 1) * w];
                let t = base.mul_rep(x, y);
                prod[i + j] = base.add_rep(&prod[i + j], &t);
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = std::mem::replace(&mut prod[k], smallvec![0; w]);
            if c.iter().all(|v| *v == 0) {
                continue;
            }
            for t in 0..d {
                let s = base.mul_rep(&c, &ext.modulus[t]);
                prod[k - d + t] = base.sub_rep(&prod[k - d + t], &s);
            }
        }
        prod.into_iter().take(d).flatten().collect()
    }

    fn pow_rep(&self, a: &[u32], mut e: u64) -> Rep {
        let mut result = self.one().rep;
        let mut base: Rep = a.iter().copied().collect();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_rep(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_rep(&base, &base);
            }
        }
        result
    }

    fn write_rep(&self, rep: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ext = match &self.0.ext {
            None => return write!(f, "{}", rep[0]),
            Some(ext) => ext,
        };
        let w = ext.base.degree();
        let mut first = true;
        for i in (0..ext.rel_degree()).rev() {
            let c = &rep[i * w..(i + 1) * w];
            if c.iter().all(|v| *v == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeff = FieldElement {
                field: ext.base.clone(),
                rep: c.iter().copied().collect(),
            };
            let is_one = coeff.is_one();
            if i == 0 {
                write!(f, "{coeff}")?;
                continue;
            }
            if !is_one {
                if coeff.is_compound() {
                    write!(f, "({coeff})*")?;
                } else {
                    write!(f, "{coeff}*")?;
                }
            }
            write!(f, "{}", self.0.symbol)?;
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        if self.ptr_eq(other) {
            return true;
        }
        if self.0.p != other.0.p || self.0.degree != other.0.degree {
            return false;
        }
        match (&self.0.ext, &other.0.ext) {
            (None, None) => true,
            (Some(a), Some(b)) => a.base == b.base && a.modulus == b.modulus,
            _ => false,
        }
    }
}

impl Eq for FieldDesc {}

impl Hash for FieldDesc {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.order.hash(state);
    }
}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "F_{}", self.0.p),
            Some(m) => write!(
                f,
                "F_{}[{}]/({})",
                self.base().unwrap().order(),
                self.0.symbol,
                m.render(&self.0.symbol)
            ),
        }
    }
}

/// An element of a [`FieldDesc`].
#[derive(Clone)]
pub struct FieldElement {
    field: FieldDesc,
    pub(crate) rep: Rep,
}

impl FieldElement {
    /// Builds an element from raw coordinates, reducing each mod `p`.
    pub fn from_rep(field: &FieldDesc, coords: &[u64]) -> Result<Self> {
        if coords.len() != field.degree() {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates, got {}",
                field.degree(),
                coords.len()
            )));
        }
        let p = field.characteristic();
        Ok(FieldElement {
            field: field.clone(),
            rep: coords.iter().map(|c| (c % p) as u32).collect(),
        })
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(|c| *c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.rep[0] == 1 && self.rep[1..].iter().all(|c| *c == 0)
    }

    /// Integer encoding `sum rep[i] * p^i`; the inverse of [`FieldDesc::from_index`].
    pub fn index(&self) -> u64 {
        let p = self.field.characteristic();
        self.rep
            .iter()
            .rev()
            .fold(0u64, |acc, c| acc * p + *c as u64)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with_rep(self.field.add_rep(&self.rep, &other.rep)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with_rep(self.field.sub_rep(&self.rep, &other.rep)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.with_rep(self.field.mul_rep(&self.rep, &other.rep)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        let inv = other.inv()?;
        Ok(self.with_rep(self.field.mul_rep(&self.rep, &inv.rep)))
    }

    /// Multiplicative inverse, computed as `a^(q-2)`.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// `a^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(&self, e: u64) -> FieldElement {
        self.with_rep(self.field.pow_rep(&self.rep, e))
    }

    /// The unique `b` with `b^p = a` (Frobenius is bijective on a finite field).
    pub fn pth_root(&self) -> FieldElement {
        self.pow(self.field.order() / self.field.characteristic())
    }

    /// Order in `F_q^*`. Panics on zero.
    pub fn multiplicative_order(&self) -> u64 {
        assert!(!self.is_zero(), "zero has no multiplicative order");
        let mut n = self.field.order() - 1;
        for l in prime_divisors(n) {
            while n.is_multiple_of(l) && self.pow(n / l).is_one() {
                n /= l;
            }
        }
        n
    }

    /// True when the rendering has more than one term.
    pub(crate) fn is_compound(&self) -> bool {
        self.to_string().contains(" + ")
    }

    fn with_rep(&self, rep: Rep) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            rep,
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by [`FieldElement::index`].
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rep.iter().rev().cmp(other.rep.iter().rev())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.field.write_rep(&self.rep, f)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// Operator impls treat cross-field arithmetic as a bug and panic; use the
// `checked_*` methods when the fields are not known to agree.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with_rep(self.field.neg_rep(&self.rep))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FieldDesc {
        FieldDesc::prime_extension(3, &[1, 0, 1]).unwrap()
    }

    fn f4() -> FieldDesc {
        FieldDesc::prime_extension(2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn prime_field_construction() {
        assert_eq!(FieldDesc::prime(3).unwrap().order(), 3);
        assert_eq!(FieldDesc::prime(2).unwrap().order(), 2);
        assert_eq!(FieldDesc::prime(4).unwrap_err(), Error::NotPrime(4));
        assert!(FieldDesc::prime(1).is_err());
    }

    #[test]
    fn extension_construction() {
        assert_eq!(f9().order(), 9);
        assert_eq!(f4().order(), 4);
        // x^2 + 2 = (x - 1)(x + 1) over F_3
        let err = FieldDesc::prime_extension(3, &[2, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::InvalidModulus(_)));
        // non-monic
        assert!(FieldDesc::prime_extension(3, &[1, 0, 2]).is_err());
    }

    #[test]
    fn small_products() {
        let f3 = FieldDesc::prime(3).unwrap();
        assert_eq!(f3.from_int(2) * f3.from_int(2), f3.from_int(1));

        let f9 = f9();
        let x = f9.generator().unwrap();
        assert_eq!(&x * &x, f9.from_int(2));

        let f4 = f4();
        let x = f4.generator().unwrap();
        assert!((&x * &(&x + &f4.one())).is_one());
    }

    #[test]
    fn small_powers() {
        let f3 = FieldDesc::prime(3).unwrap();
        assert_eq!(f3.from_int(2).pow(3), f3.from_int(2));
        assert!(f3.zero().pow(0).is_one());

        let f9 = f9();
        let x = f9.generator().unwrap();
        assert_eq!(x.pow(9), x);

        let f4 = f4();
        let x = f4.generator().unwrap();
        assert_eq!(x.pow(2), &x + &f4.one());
        assert_eq!(x.pow(2).to_string(), "x + 1");
    }

    #[test]
    fn cross_field_is_an_error() {
        let a = f9().one();
        let b = f4().one();
        assert_eq!(a.checked_add(&b).unwrap_err(), Error::FieldMismatch);
        let f3 = FieldDesc::prime(3).unwrap();
        assert_eq!(
            f3.one().checked_div(&f3.zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    #[should_panic]
    fn operator_panics_on_mismatch() {
        let _ = f9().one() + f4().one();
    }

    #[test]
    fn separately_built_fields_compare_equal() {
        assert_eq!(f9(), f9());
        assert_ne!(f9(), FieldDesc::prime_extension(3, &[2, 1, 1]).unwrap());
        assert_eq!(f9().one() + f9().one(), f9().from_int(2));
    }

    fn small_fields() -> Vec<FieldDesc> {
        let mut v: Vec<FieldDesc> = [2, 3, 5, 7]
            .iter()
            .map(|p| FieldDesc::prime(*p).unwrap())
            .collect();
        for (p, m) in [
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 6),
            (3, 2),
            (3, 3),
            (3, 4),
            (5, 2),
        ] {
            v.push(FieldDesc::galois(p, m).unwrap());
        }
        // tower F_4[y]/(y^2 + y + x) = F_16
        let f4 = f4();
        let x = f4.generator().unwrap();
        let m = Poly::from_coeffs(&f4, vec![x, f4.one(), f4.one()]);
        v.push(FieldDesc::extension(&m, "y").unwrap());
        v
    }

    #[test]
    fn frobenius_fixes_every_element() {
        for f in small_fields() {
            assert!(f.order() <= 81);
            for a in f.elements() {
                assert_eq!(a.pow(f.order()), a, "{f:?}");
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for f in small_fields() {
            let g = f.primitive_element();
            let mut seen = std::collections::HashSet::new();
            let mut acc = f.one();
            for _ in 0..f.order() - 1 {
                seen.insert(acc.index());
                acc = &acc * &g;
            }
            assert_eq!(seen.len() as u64, f.order() - 1, "{f:?}");
        }
    }

    #[test]
    fn division_inverts_multiplication() {
        for f in small_fields() {
            for a in f.elements() {
                for b in f.elements().skip(1) {
                    assert_eq!(&(&a / &b) * &b, a);
                }
            }
        }
    }

    #[test]
    fn index_round_trip_and_order() {
        let f = FieldDesc::galois(3, 2).unwrap();
        let els: Vec<_> = f.elements().collect();
        for (i, e) in els.iter().enumerate() {
            assert_eq!(e.index(), i as u64);
        }
        assert!(els.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn canonical_modulus_is_smallest_irreducible() {
        // x^2 + 1 is the first monic irreducible quadratic over F_3
        let f = FieldDesc::galois(3, 2).unwrap();
        assert_eq!(f, f9());
        let f = FieldDesc::galois(2, 2).unwrap();
        assert_eq!(f, f4());
    }

    #[test]
    fn pth_root_inverts_frobenius() {
        for f in small_fields() {
            for a in f.elements() {
                assert_eq!(a.pth_root().pow(f.characteristic()), a);
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn ring_axioms(fi in 0usize..13, a in 0u64..1 << 20, b in 0u64..1 << 20, c in 0u64..1 << 20) {
                let f = &small_fields()[fi];
                let (a, b, c) = (f.from_index(a % f.order()), f.from_index(b % f.order()), f.from_index(c % f.order()));
                prop_assert_eq!(&a + &b, &b + &a);
                prop_assert_eq!(&a * &b, &b * &a);
                prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert!((&a - &a).is_zero());
                prop_assert!((&a + &(-&a)).is_zero());
            }
        }
    }
}
