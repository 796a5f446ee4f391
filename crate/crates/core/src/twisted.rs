//! The twisted polynomial ring `F_q[T]<tau>` with `tau * a = a^q * tau`,
//! Drinfeld modules `rho: F_q[T] -> F_q[T]<tau>`, and the torsion
//! polynomials obtained from `rho_a` by `tau^i -> y^(q^i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::finite_field::FieldDesc;
use crate::poly_arith::{render_terms, Poly, TPoly};

/// `sum a_i tau^i` with `a_i` in `F_q[T]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TwistedPoly {
    field: FieldDesc,
    coeffs: Vec<TPoly>,
}

/// `b(T)^(q^i)`. Coefficients lie in `F_q` and are fixed by the q-power
/// Frobenius, so only exponents move.
fn frobenius_twist(b: &TPoly, i: usize) -> TPoly {
    if i == 0 || b.is_zero() {
        return b.clone();
    }
    let field = b.field();
    let stride = (field.order() as usize).pow(i as u32);
    let mut coeffs = vec![field.zero(); b.degree().unwrap() * stride + 1];
    for (k, c) in b.coeffs().iter().enumerate() {
        coeffs[k * stride] = c.clone();
    }
    Poly::from_coeffs(field, coeffs)
}

impl TwistedPoly {
    pub fn zero(field: &FieldDesc) -> Self {
        TwistedPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldDesc) -> Self {
        TwistedPoly::scalar(Poly::one(field))
    }

    /// The element `tau`.
    pub fn tau(field: &FieldDesc) -> Self {
        TwistedPoly::from_coeffs(field, vec![Poly::zero(field), Poly::one(field)])
    }

    /// `a * tau^0`.
    pub fn scalar(a: TPoly) -> Self {
        let field = a.field().clone();
        TwistedPoly::from_coeffs(&field, vec![a])
    }

    /// Coefficients indexed by tau-degree. Panics on a field mismatch.
    pub fn from_coeffs(field: &FieldDesc, mut coeffs: Vec<TPoly>) -> Self {
        assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        TwistedPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> TPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.field))
    }

    /// Tau-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &TwistedPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(TwistedPoly::from_coeffs(&self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        self.checked_add(&-other)
    }

    /// `(a tau^i)(b tau^j) = a * b^(q^i) * tau^(i+j)`, extended bilinearly.
    pub fn checked_mul(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(TwistedPoly::zero(&self.field));
        }
        let mut coeffs = vec![Poly::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * &frobenius_twist(b, i));
            }
        }
        Ok(TwistedPoly::from_coeffs(&self.field, coeffs))
    }

    /// The F_q-linear operator `x -> sum a_i x^(q^i)` applied to `x` in `F_q[T]`.
    pub fn apply(&self, x: &TPoly) -> Result<TPoly> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let mut acc = Poly::zero(&self.field);
        for (i, a) in self.coeffs.iter().enumerate() {
            acc = &acc + &(a * &frobenius_twist(x, i));
        }
        Ok(acc)
    }
}

impl fmt::Display for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.render("T"), c.is_one()));
        f.write_str(&render_terms(terms, "tau"))
    }
}

impl fmt::Debug for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A polynomial in `y` with coefficients in `F_q[T]`.
#[derive(Clone, PartialEq, Eq)]
pub struct YPoly {
    field: FieldDesc,
    coeffs: Vec<TPoly>,
}

impl YPoly {
    pub fn zero(field: &FieldDesc) -> Self {
        YPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(a: TPoly) -> Self {
        let field = a.field().clone();
        YPoly::from_coeffs(&field, vec![a])
    }

    /// The variable `y`.
    pub fn y(field: &FieldDesc) -> Self {
        YPoly::from_coeffs(field, vec![Poly::zero(field), Poly::one(field)])
    }

    /// Coefficients indexed by y-degree. Panics on a field mismatch.
    pub fn from_coeffs(field: &FieldDesc, mut coeffs: Vec<TPoly>) -> Self {
        assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> TPoly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.field))
    }

    /// y-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&TPoly> {
        self.coeffs.last()
    }

    fn check(&self, other: &YPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &YPoly) -> Result<YPoly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(YPoly::from_coeffs(&self.field, coeffs))
    }

    pub fn checked_sub(&self, other: &YPoly) -> Result<YPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &YPoly) -> Result<YPoly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(YPoly::zero(&self.field));
        }
        let mut coeffs = vec![Poly::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(YPoly::from_coeffs(&self.field, coeffs))
    }

    pub fn pow(&self, mut e: u64) -> YPoly {
        let mut result = YPoly::constant(Poly::one(&self.field));
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

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.render("T"), c.is_one()));
        f.write_str(&render_terms(terms, "y"))
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! ring_ops {
    ($ty:ident) => {
        impl Add<&$ty> for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl Sub<&$ty> for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl Mul<&$ty> for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    field: self.field.clone(),
                    coeffs: self.coeffs.iter().map(|c| -c).collect(),
                }
            }
        }
    };
}

ring_ops!(TwistedPoly);
ring_ops!(YPoly);

/// A Drinfeld module `rho` for `A = F_q[T]` over `F_q[T]` of general
/// characteristic: `rho_T = T + a_1 tau + ... + a_r tau^r` with `a_r != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldModule {
    image_of_t: TwistedPoly,
}

impl DrinfeldModule {
    pub fn new(image_of_t: TwistedPoly) -> Result<Self> {
        let field = image_of_t.field().clone();
        match image_of_t.degree() {
            Some(r) if r >= 1 => {}
            _ => {
                return Err(Error::InvalidModule(
                    "rank must be positive (rho_T needs a tau term)".into(),
                ))
            }
        }
        if image_of_t.coeff(0) != Poly::x(&field) {
            return Err(Error::InvalidModule("a_0 must equal T".into()));
        }
        Ok(DrinfeldModule { image_of_t })
    }

    /// The Carlitz module `rho_T = tau + T`.
    pub fn carlitz(field: &FieldDesc) -> Self {
        DrinfeldModule {
            image_of_t: TwistedPoly::from_coeffs(field, vec![Poly::x(field), Poly::one(field)]),
        }
    }

    pub fn field(&self) -> &FieldDesc {
        self.image_of_t.field()
    }

    pub fn rank(&self) -> usize {
        self.image_of_t.degree().unwrap()
    }

    pub fn image_of_t(&self) -> &TwistedPoly {
        &self.image_of_t
    }

    /// `rho_u`, by Horner's rule over the coefficients of `u`.
    pub fn rho_eval(&self, u: &TPoly) -> Result<TwistedPoly> {
        if u.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        let mut acc = TwistedPoly::zero(self.field());
        for c in u.coeffs().iter().rev() {
            acc = &(&acc * &self.image_of_t) + &TwistedPoly::scalar(Poly::constant(c.clone()));
        }
        Ok(acc)
    }

    /// The additive polynomial `sum b_i y^(q^i)` for `rho_a = sum b_i tau^i`.
    /// With `strip_trivial_root` the result is divided by `y`, removing the
    /// root `0`.
    pub fn torsion_polynomial(&self, a: &TPoly, strip_trivial_root: bool) -> Result<YPoly> {
        if a.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidInput("torsion needs a non-constant a".into()));
        }
        let rho_a = self.rho_eval(a)?;
        let q = self.field().order() as usize;
        let top = q.pow(rho_a.degree().unwrap() as u32);
        let mut coeffs = vec![Poly::zero(self.field()); top + 1];
        for (i, b) in rho_a.coeffs().iter().enumerate() {
            coeffs[q.pow(i as u32)] = b.clone();
        }
        if strip_trivial_root {
            assert!(
                coeffs[0].is_zero(),
                "additive polynomial has no constant term"
            );
            coeffs.remove(0);
        }
        Ok(YPoly::from_coeffs(self.field(), coeffs))
    }
}
