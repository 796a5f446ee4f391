//! Recursive-descent parser for polynomial expressions in `T`, `y` and `tau`
//! with integer coefficients.
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := factor ("*" factor)* ;
//! factor := atom ("^" nat)? ;
//! atom   := nat | "T" | "y" | "tau" | "(" expr ")" | "-" atom ;
//! ```
//!
//! Whitespace is ignored and `*` is mandatory. Unary minus binds looser than
//! `^`, so `-T^2` is `-(T^2)`. The extra symbol `x` is accepted only in
//! [`ParseMode::Ext`], which reads polynomials over `F_p` used as extension
//! moduli and field elements.

use crate::error::{Error, Result};
use crate::finite_field::{FieldDesc, FieldElement};
use crate::poly_arith::{Poly, TPoly};
use crate::twisted::{TwistedPoly, YPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    T,
    Y,
    Tau,
    X,
}

impl Symbol {
    fn name(self) -> &'static str {
        match self {
            Symbol::T => "T",
            Symbol::Y => "y",
            Symbol::Tau => "tau",
            Symbol::X => "x",
        }
    }
}

/// Parsed expression; `pos` is the byte offset where the node starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    pub kind: ExprKind,
    pub pos: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Nat(u128),
    Sym(Symbol),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
    Neg(Box<ExprAst>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseMode {
    /// Polynomials in `T` (the ring `F_q[T]`).
    TPoly,
    /// Polynomials in `y` with coefficients in `F_q[T]`.
    YPoly,
    /// `sum a_i(T) * tau^i`, written as a sum of coefficient-times-tau-power terms.
    Twisted,
    /// Polynomials in `x` over `F_p`.
    Ext,
}

impl ParseMode {
    fn allows(self, s: Symbol) -> bool {
        matches!(
            (self, s),
            (ParseMode::TPoly, Symbol::T)
                | (ParseMode::YPoly, Symbol::T | Symbol::Y)
                | (ParseMode::Twisted, Symbol::T | Symbol::Tau)
                | (ParseMode::Ext, Symbol::X)
        )
    }

    fn name(self) -> &'static str {
        match self {
            ParseMode::TPoly => "t_poly",
            ParseMode::YPoly => "y_poly",
            ParseMode::Twisted => "twisted",
            ParseMode::Ext => "ext",
        }
    }
}

/// The value produced by [`parse`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    T(TPoly),
    Y(YPoly),
    Twisted(TwistedPoly),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Nat(u128),
    Sym(Symbol),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let mut n: u128 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add((bytes[i] - b'0') as u128))
                        .ok_or(Error::Parse {
                            pos: start,
                            msg: "integer literal too large".into(),
                        })?;
                    i += 1;
                }
                out.push((Tok::Nat(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let sym = match &text[start..i] {
                    "T" => Symbol::T,
                    "y" => Symbol::Y,
                    "tau" => Symbol::Tau,
                    "x" => Symbol::X,
                    other => return err(start, format!("unknown symbol '{other}'")),
                };
                out.push((Tok::Sym(sym), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return err(start, format!("unexpected character '{ch}'"));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|t| t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        while let Some(op @ (Tok::Plus | Tok::Minus)) = self.peek() {
            self.at += 1;
            let rhs = self.term()?;
            let pos = lhs.pos;
            let kind = if op == Tok::Plus {
                ExprKind::Add(Box::new(lhs), Box::new(rhs))
            } else {
                ExprKind::Sub(Box::new(lhs), Box::new(rhs))
            };
            lhs = ExprAst { kind, pos };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(Tok::Star) {
            self.at += 1;
            let rhs = self.factor()?;
            let pos = lhs.pos;
            lhs = ExprAst {
                kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ExprAst> {
        let pos = self.pos();
        if self.peek() == Some(Tok::Minus) {
            self.at += 1;
            let inner = self.factor()?;
            return Ok(ExprAst {
                kind: ExprKind::Neg(Box::new(inner)),
                pos,
            });
        }
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let epos = self.pos();
        match self.peek() {
            Some(Tok::Nat(n)) => {
                self.at += 1;
                let e = u32::try_from(n).or_else(|_| err(epos, "exponent too large"))?;
                Ok(ExprAst {
                    kind: ExprKind::Pow(Box::new(base), e),
                    pos,
                })
            }
            Some(Tok::Minus) => err(epos, "negative exponents are not allowed"),
            _ => err(epos, "expected a non-negative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let pos = self.pos();
        let kind = match self.peek() {
            Some(Tok::Nat(n)) => ExprKind::Nat(n),
            Some(Tok::Sym(s)) => ExprKind::Sym(s),
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return err(self.pos(), "expected ')'");
                }
                self.at += 1;
                return Ok(inner);
            }
            Some(_) => return err(pos, "expected a number, symbol or '('"),
            None => return err(pos, "unexpected end of input"),
        };
        self.at += 1;
        Ok(ExprAst { kind, pos })
    }
}

/// Parses `text` into an expression tree without interpreting it.
pub fn parse_ast(text: &str) -> Result<ExprAst> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(e)
}

fn check_symbols(e: &ExprAst, mode: ParseMode) -> Result<()> {
    match &e.kind {
        ExprKind::Nat(_) => Ok(()),
        ExprKind::Sym(s) if mode.allows(*s) => Ok(()),
        ExprKind::Sym(s) => err(
            e.pos,
            format!(
                "symbol '{}' is not allowed in {} mode",
                s.name(),
                mode.name()
            ),
        ),
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => {
            check_symbols(a, mode)?;
            check_symbols(b, mode)
        }
        ExprKind::Pow(a, _) | ExprKind::Neg(a) => check_symbols(a, mode),
    }
}

fn nat(field: &FieldDesc, n: u128) -> FieldElement {
    field.from_int((n % field.characteristic() as u128) as i64)
}

fn eval_poly(e: &ExprAst, field: &FieldDesc) -> Poly {
    match &e.kind {
        ExprKind::Nat(n) => Poly::constant(nat(field, *n)),
        ExprKind::Sym(_) => Poly::x(field),
        ExprKind::Add(a, b) => &eval_poly(a, field) + &eval_poly(b, field),
        ExprKind::Sub(a, b) => &eval_poly(a, field) - &eval_poly(b, field),
        ExprKind::Mul(a, b) => &eval_poly(a, field) * &eval_poly(b, field),
        ExprKind::Pow(a, k) => eval_poly(a, field).pow(*k as u64),
        ExprKind::Neg(a) => -&eval_poly(a, field),
    }
}

fn eval_y(e: &ExprAst, field: &FieldDesc) -> YPoly {
    match &e.kind {
        ExprKind::Nat(n) => YPoly::constant(Poly::constant(nat(field, *n))),
        ExprKind::Sym(Symbol::Y) => YPoly::y(field),
        ExprKind::Sym(_) => YPoly::constant(Poly::x(field)),
        ExprKind::Add(a, b) => &eval_y(a, field) + &eval_y(b, field),
        ExprKind::Sub(a, b) => &eval_y(a, field) - &eval_y(b, field),
        ExprKind::Mul(a, b) => &eval_y(a, field) * &eval_y(b, field),
        ExprKind::Pow(a, k) => eval_y(a, field).pow(*k as u64),
        ExprKind::Neg(a) => -&eval_y(a, field),
    }
}

fn has_tau(e: &ExprAst) -> bool {
    match &e.kind {
        ExprKind::Nat(_) => false,
        ExprKind::Sym(s) => *s == Symbol::Tau,
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => has_tau(a) || has_tau(b),
        ExprKind::Pow(a, _) | ExprKind::Neg(a) => has_tau(a),
    }
}

/// Exponent of a bare `tau` or `tau^k`.
fn tau_power(e: &ExprAst) -> Option<usize> {
    match &e.kind {
        ExprKind::Sym(Symbol::Tau) => Some(1),
        ExprKind::Pow(a, k) if a.kind == ExprKind::Sym(Symbol::Tau) => Some(*k as usize),
        _ => None,
    }
}

fn eval_twisted(e: &ExprAst, field: &FieldDesc) -> Result<TwistedPoly> {
    if !has_tau(e) {
        return Ok(TwistedPoly::scalar(eval_poly(e, field)));
    }
    match &e.kind {
        ExprKind::Add(a, b) => Ok(&eval_twisted(a, field)? + &eval_twisted(b, field)?),
        ExprKind::Sub(a, b) => Ok(&eval_twisted(a, field)? - &eval_twisted(b, field)?),
        ExprKind::Neg(a) => Ok(-&eval_twisted(a, field)?),
        ExprKind::Mul(coeff, last) => {
            if has_tau(coeff) {
                return err(
                    coeff.pos,
                    "each twisted term must be coefficient*tau^i with tau last",
                );
            }
            let c = eval_poly(coeff, field);
            let (negate, power) = match &last.kind {
                ExprKind::Neg(inner) => (true, tau_power(inner)),
                _ => (false, tau_power(last)),
            };
            let Some(k) = power else {
                return err(last.pos, "expected tau or tau^i after the coefficient");
            };
            let c = if negate { -&c } else { c };
            Ok(monomial(field, c, k))
        }
        _ => match tau_power(e) {
            Some(k) => Ok(monomial(field, Poly::one(field), k)),
            None => err(
                e.pos,
                "products and powers of twisted expressions are not supported; write coefficient*tau^i",
            ),
        },
    }
}

fn monomial(field: &FieldDesc, c: TPoly, k: usize) -> TwistedPoly {
    let mut coeffs = vec![Poly::zero(field); k];
    coeffs.push(c);
    TwistedPoly::from_coeffs(field, coeffs)
}

/// Parses `text` in the given mode. Integer literals are reduced mod `p`.
pub fn parse(text: &str, mode: ParseMode, field: &FieldDesc) -> Result<Parsed> {
    let ast = parse_ast(text)?;
    check_symbols(&ast, mode)?;
    Ok(match mode {
        ParseMode::TPoly | ParseMode::Ext => Parsed::T(eval_poly(&ast, field)),
        ParseMode::YPoly => Parsed::Y(eval_y(&ast, field)),
        ParseMode::Twisted => Parsed::Twisted(eval_twisted(&ast, field)?),
    })
}

pub fn parse_t_poly(text: &str, field: &FieldDesc) -> Result<TPoly> {
    match parse(text, ParseMode::TPoly, field)? {
        Parsed::T(p) => Ok(p),
        _ => unreachable!(),
    }
}

pub fn parse_y_poly(text: &str, field: &FieldDesc) -> Result<YPoly> {
    match parse(text, ParseMode::YPoly, field)? {
        Parsed::Y(p) => Ok(p),
        _ => unreachable!(),
    }
}

pub fn parse_twisted(text: &str, field: &FieldDesc) -> Result<TwistedPoly> {
    match parse(text, ParseMode::Twisted, field)? {
        Parsed::Twisted(p) => Ok(p),
        _ => unreachable!(),
    }
}

/// A polynomial in `x` over the prime field `F_p`.
pub fn parse_ext_poly(text: &str, prime_field: &FieldDesc) -> Result<Poly> {
    match parse(text, ParseMode::Ext, prime_field)? {
        Parsed::T(p) => Ok(p),
        _ => unreachable!(),
    }
}

/// Canonical descending-degree rendering; re-parses to an equal value over
/// a prime field.
pub fn render(value: &Parsed) -> String {
    match value {
        Parsed::T(p) => p.render("T"),
        Parsed::Y(p) => p.to_string(),
        Parsed::Twisted(p) => p.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldDesc {
        FieldDesc::prime(p).unwrap()
    }

    #[test]
    fn torsion_polynomial_text() {
        let y = parse_y_poly("y^8 + T*y^2 + T", &f(3)).unwrap();
        assert_eq!(y.degree(), Some(8));
        assert_eq!(y.coeff(2), Poly::x(&f(3)));
        assert_eq!(y.coeff(0), Poly::x(&f(3)));
        assert_eq!(y.to_string(), "y^8 + T*y^2 + T");
    }

    #[test]
    fn twisted_text() {
        let r = parse_twisted("tau^2 + T*tau + T", &f(3)).unwrap();
        let x = Poly::x(&f(3));
        assert_eq!(r.coeffs(), &[x.clone(), x, Poly::one(&f(3))]);
        assert_eq!(r.to_string(), "tau^2 + T*tau + T");
        let r = parse_twisted("(T^4 + T)*tau^2 - tau + 2", &f(3)).unwrap();
        assert_eq!(r.to_string(), "(T^4 + T)*tau^2 + 2*tau + 2");
    }

    #[test]
    fn twisted_rejects_products() {
        for bad in [
            "tau*T",
            "tau*tau",
            "(tau + 1)*T",
            "(tau + T)^2",
            "T*(tau + 1)",
        ] {
            assert!(
                matches!(parse_twisted(bad, &f(3)), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
    }

    #[test]
    fn factor_text() {
        let q = parse_y_poly("y^2 + (2*T+1)*y + 2*T+2", &f(3)).unwrap();
        assert_eq!(q.coeff(1), Poly::from_ints(&f(3), &[1, 2]));
        assert_eq!(q.coeff(0), Poly::from_ints(&f(3), &[2, 2]));
    }

    #[test]
    fn literals_reduce_mod_p() {
        assert!(parse_t_poly("3*T", &f(3)).unwrap().is_zero());
        assert!(parse_t_poly("4", &f(3)).unwrap().is_one());
        assert_eq!(
            parse_t_poly("-T", &f(3)).unwrap(),
            Poly::from_ints(&f(3), &[0, 2])
        );
        assert_eq!(
            parse_t_poly("-T^2", &f(5)).unwrap(),
            Poly::from_ints(&f(5), &[0, 0, 4])
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_t_poly("T + 2T", &f(3)).unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                pos: 5,
                msg: "unexpected trailing input".into()
            }
        );
        let e = parse_t_poly("T + z", &f(3)).unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 4, .. }));
        let e = parse_t_poly("T + y", &f(3)).unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 4, .. }));
        assert!(parse_y_poly("y + tau", &f(3)).is_err());
        assert!(parse_t_poly("T^-1", &f(3)).is_err());
        assert!(parse_t_poly("T^1.5", &f(3)).is_err());
        assert!(parse_t_poly("(T + 1", &f(3)).is_err());
        assert!(parse_t_poly("", &f(3)).is_err());
        assert!(parse_t_poly("T^2^3", &f(3)).is_err());
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(render(&Parsed::Y(YPoly::zero(&f(3)))), "0");
        assert_eq!(render(&Parsed::T(Poly::zero(&f(3)))), "0");
    }

    #[test]
    fn ext_mode() {
        let m = parse_ext_poly("x^2+x+1", &f(2)).unwrap();
        assert_eq!(m, Poly::from_ints(&f(2), &[1, 1, 1]));
        assert!(parse_ext_poly("T", &f(2)).is_err());
        assert!(parse_t_poly("x", &f(2)).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn tpoly(p: u64, c: &[u8]) -> TPoly {
            Poly::from_ints(&f(p), &c.iter().map(|v| *v as i64).collect::<Vec<_>>())
        }

        fn coeffs() -> impl Strategy<Value = Vec<Vec<u8>>> {
            prop::collection::vec(prop::collection::vec(0u8..7, 0..5), 0..6)
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(500))]

            #[test]
            fn t_round_trip(p in prop::sample::select(vec![2u64, 3, 5, 7]), c in prop::collection::vec(0u8..7, 0..8)) {
                let v = Parsed::T(tpoly(p, &c));
                prop_assert_eq!(parse(&render(&v), ParseMode::TPoly, &f(p)).unwrap(), v);
            }

            #[test]
            fn y_round_trip(p in prop::sample::select(vec![2u64, 3, 5]), cs in coeffs()) {
                let v = Parsed::Y(YPoly::from_coeffs(&f(p), cs.iter().map(|c| tpoly(p, c)).collect()));
                prop_assert_eq!(parse(&render(&v), ParseMode::YPoly, &f(p)).unwrap(), v);
            }

            #[test]
            fn twisted_round_trip(p in prop::sample::select(vec![2u64, 3, 5]), cs in coeffs()) {
                let v = Parsed::Twisted(TwistedPoly::from_coeffs(&f(p), cs.iter().map(|c| tpoly(p, c)).collect()));
                prop_assert_eq!(parse(&render(&v), ParseMode::Twisted, &f(p)).unwrap(), v);
            }
        }
    }
}
