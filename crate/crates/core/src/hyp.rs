//! The hyperbolic number ring.
//!
//! A hyperbolic number `a1 + a2*k` (with `k*k = 1`) is stored in idempotent
//! coordinates `(u, v)` where `u = a1 + a2` and `v = a1 - a2`, i.e. as
//! `u*e1 + v*e2` for the idempotent basis `e1 = (1+k)/2`, `e2 = (1-k)/2`.
//! Sums, products, modulus, the partial order and the lattice join/meet are
//! all componentwise in these coordinates; the standard form is a view.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fmt::format_sig;

/// A hyperbolic number in idempotent coordinates. Both components are finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hyp {
    u: f64,
    v: f64,
}

/// Coarse position of a number relative to the zero divisors and the
/// positive cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HypClass {
    Zero,
    /// Nonzero with exactly one idempotent component equal to zero.
    ZeroDivisor,
    /// Both idempotent components strictly positive (equivalently
    /// `a1 > |a2|` in standard form).
    Positive,
    Other,
}

/// How `max_d`/`min_d` treat incomparable pairs.
///
/// `Strict` refuses them, which is the textbook definition of the hyperbolic
/// max/min. `Lattice` extends to the componentwise join/meet; the two modes
/// agree exactly on every comparable pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OrderMode {
    Strict,
    #[default]
    Lattice,
}

impl Hyp {
    pub const ZERO: Hyp = Hyp { u: 0.0, v: 0.0 };
    pub const ONE: Hyp = Hyp { u: 1.0, v: 1.0 };
    /// `e1 = (1+k)/2`, the first idempotent.
    pub const E1: Hyp = Hyp { u: 1.0, v: 0.0 };
    /// `e2 = (1-k)/2`, the second idempotent.
    pub const E2: Hyp = Hyp { u: 0.0, v: 1.0 };
    /// The hyperbolic unit `k = e1 - e2`.
    pub const K: Hyp = Hyp { u: 1.0, v: -1.0 };

    /// Build from idempotent coordinates. Rejects NaN and infinities.
    pub fn new(u: f64, v: f64) -> Result<Hyp> {
        if !u.is_finite() {
            return Err(Error::NonFinite {
                place: "e1 component",
                value: u,
            });
        }
        if !v.is_finite() {
            return Err(Error::NonFinite {
                place: "e2 component",
                value: v,
            });
        }
        Ok(Hyp { u, v })
    }

    /// Build from the standard form `a1 + a2*k`.
    pub fn from_standard(a1: f64, a2: f64) -> Result<Hyp> {
        if !a1.is_finite() {
            return Err(Error::NonFinite {
                place: "standard component a1",
                value: a1,
            });
        }
        if !a2.is_finite() {
            return Err(Error::NonFinite {
                place: "standard component a2",
                value: a2,
            });
        }
        Ok(Hyp {
            u: a1 + a2,
            v: a1 - a2,
        })
    }

    /// Embed a real number on the diagonal.
    pub fn real(x: f64) -> Result<Hyp> {
        Hyp::new(x, x)
    }

    pub(crate) const fn raw(u: f64, v: f64) -> Hyp {
        Hyp { u, v }
    }

    pub fn u(self) -> f64 {
        self.u
    }

    pub fn v(self) -> f64 {
        self.v
    }

    /// The standard-form pair `(a1, a2)` with `a1 + a2*k = u*e1 + v*e2`.
    pub fn to_standard(self) -> (f64, f64) {
        ((self.u + self.v) / 2.0, (self.u - self.v) / 2.0)
    }

    pub fn is_zero(self) -> bool {
        self.u == 0.0 && self.v == 0.0
    }

    pub fn is_zero_divisor(self) -> bool {
        !self.is_zero() && (self.u == 0.0 || self.v == 0.0)
    }

    /// Member of the positive cone (both components strictly positive).
    pub fn is_positive(self) -> bool {
        self.u > 0.0 && self.v > 0.0
    }

    pub fn classify(self) -> HypClass {
        if self.is_zero() {
            HypClass::Zero
        } else if self.is_zero_divisor() {
            HypClass::ZeroDivisor
        } else if self.is_positive() {
            HypClass::Positive
        } else {
            HypClass::Other
        }
    }

    /// Both components inside `[0, 1]`, i.e. an admissible membership grade.
    pub fn in_unit_interval(self) -> bool {
        (0.0..=1.0).contains(&self.u) && (0.0..=1.0).contains(&self.v)
    }

    /// The partial order: `self <= rhs` componentwise.
    pub fn leq(self, rhs: Hyp) -> bool {
        self.u <= rhs.u && self.v <= rhs.v
    }

    /// Strict precedence: `self < rhs` in both components.
    pub fn strict_lt(self, rhs: Hyp) -> bool {
        self.u < rhs.u && self.v < rhs.v
    }

    /// Componentwise join (lattice max).
    pub fn join(self, rhs: Hyp) -> Hyp {
        Hyp {
            u: self.u.max(rhs.u),
            v: self.v.max(rhs.v),
        }
    }

    /// Componentwise meet (lattice min).
    pub fn meet(self, rhs: Hyp) -> Hyp {
        Hyp {
            u: self.u.min(rhs.u),
            v: self.v.min(rhs.v),
        }
    }

    /// Componentwise absolute value `|a1|e1 + |a2|e2` (in idempotent
    /// coordinates the modulus acts on each component).
    pub fn modulus_k(self) -> Hyp {
        Hyp {
            u: self.u.abs(),
            v: self.v.abs(),
        }
    }

    /// Componentwise clamp into `[lo, hi]` (used to keep arithmetic results
    /// inside bounds the exact real value provably satisfies).
    pub(crate) fn clamp(self, lo: Hyp, hi: Hyp) -> Hyp {
        Hyp {
            u: self.u.clamp(lo.u, hi.u),
            v: self.v.clamp(lo.v, hi.v),
        }
    }

    /// Equality within an absolute tolerance per component.
    pub fn approx_eq(self, rhs: Hyp, tol: f64) -> bool {
        (self.u - rhs.u).abs() <= tol && (self.v - rhs.v).abs() <= tol
    }

    /// Render in standard form, e.g. `0.5+(-0.2)k`.
    pub fn to_standard_string(self) -> String {
        let (a1, a2) = self.to_standard();
        if a2 < 0.0 {
            format!("{}+({})k", format_sig(a1, 12), format_sig(a2, 12))
        } else {
            format!("{}+{}k", format_sig(a1, 12), format_sig(a2, 12))
        }
    }
}

impl PartialOrd for Hyp {
    /// `None` when the components disagree in direction; the order is
    /// partial. `<`/`<=` therefore follow the componentwise order, with `<`
    /// meaning "dominated and not equal" (use [`Hyp::strict_lt`] for strict
    /// dominance in both components).
    fn partial_cmp(&self, other: &Hyp) -> Option<Ordering> {
        let le = self.leq(*other);
        let ge = other.leq(*self);
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl Add for Hyp {
    type Output = Hyp;
    fn add(self, rhs: Hyp) -> Hyp {
        Hyp {
            u: self.u + rhs.u,
            v: self.v + rhs.v,
        }
    }
}

impl Sub for Hyp {
    type Output = Hyp;
    fn sub(self, rhs: Hyp) -> Hyp {
        Hyp {
            u: self.u - rhs.u,
            v: self.v - rhs.v,
        }
    }
}

impl Mul for Hyp {
    type Output = Hyp;
    fn mul(self, rhs: Hyp) -> Hyp {
        Hyp {
            u: self.u * rhs.u,
            v: self.v * rhs.v,
        }
    }
}

impl Neg for Hyp {
    type Output = Hyp;
    fn neg(self) -> Hyp {
        Hyp {
            u: -self.u,
            v: -self.v,
        }
    }
}

/// Hyperbolic max of two numbers in the given mode.
pub fn max_d(x: Hyp, y: Hyp, mode: OrderMode) -> Result<Hyp> {
    match mode {
        OrderMode::Lattice => Ok(x.join(y)),
        OrderMode::Strict => match x.partial_cmp(&y) {
            Some(Ordering::Less) | Some(Ordering::Equal) => Ok(y),
            Some(Ordering::Greater) => Ok(x),
            None => Err(Error::Incomparable { left: x, right: y }),
        },
    }
}

/// Hyperbolic min of two numbers in the given mode.
pub fn min_d(x: Hyp, y: Hyp, mode: OrderMode) -> Result<Hyp> {
    match mode {
        OrderMode::Lattice => Ok(x.meet(y)),
        OrderMode::Strict => match x.partial_cmp(&y) {
            Some(Ordering::Less) | Some(Ordering::Equal) => Ok(x),
            Some(Ordering::Greater) => Ok(y),
            None => Err(Error::Incomparable { left: x, right: y }),
        },
    }
}

/// The hyperbolic-valued metric `|x - y|_k`.
pub fn d_metric(x: Hyp, y: Hyp) -> Hyp {
    (x - y).modulus_k()
}

/// Euclidean norm of a real point embedded on the diagonal of the ring, a
/// hyperbolic-valued norm for real-scalar universes.
pub fn point_norm(coords: &[f64]) -> Hyp {
    let n = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
    Hyp { u: n, v: n }
}

impl fmt::Display for Hyp {
    /// Idempotent form with up to 12 significant digits, e.g. `0.3e1+0.7e2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v < 0.0 {
            write!(f, "{}e1-{}e2", format_sig(self.u, 12), format_sig(-self.v, 12))
        } else {
            write!(f, "{}e1+{}e2", format_sig(self.u, 12), format_sig(self.v, 12))
        }
    }
}

impl serde::Serialize for Hyp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Hyp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Hyp, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for Hyp {
    type Err = Error;

    /// Accepts the idempotent form (`0.3e1+0.7e2`), the standard form
    /// (`0.5+(-0.2)k` or `0.5-0.2k`), bare reals, and any signed sum of
    /// `e1`/`e2`/`k`/scalar terms. Coefficients are plain decimals; `e`
    /// always starts a basis marker, never an exponent.
    fn from_str(s: &str) -> Result<Hyp> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input,
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn fail(&self, reason: &str) -> Error {
        Error::ParseNumber {
            input: self.input.to_string(),
            reason: reason.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.bump();
        }
    }

    fn parse(&mut self) -> Result<Hyp> {
        let mut acc = Hyp::ZERO;
        let mut first = true;
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                if first {
                    return Err(self.fail("empty input"));
                }
                return Ok(acc);
            }
            let sign = match self.peek() {
                Some(b'+') => {
                    self.bump();
                    1.0
                }
                Some(b'-') => {
                    self.bump();
                    -1.0
                }
                _ if first => 1.0,
                _ => return Err(self.fail("expected '+' or '-' between terms")),
            };
            self.skip_ws();
            let term = self.parse_term()?;
            acc = acc + Hyp::raw(sign * term.u, sign * term.v);
            if !acc.u.is_finite() || !acc.v.is_finite() {
                return Err(self.fail("value overflows"));
            }
            first = false;
        }
    }

    fn parse_term(&mut self) -> Result<Hyp> {
        let coeff = match self.peek() {
            Some(b'(') => {
                self.bump();
                self.skip_ws();
                let c = self.parse_number()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.fail("expected ')'"));
                }
                self.bump();
                Some(c)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => Some(self.parse_number()?),
            _ => None,
        };
        self.skip_ws();
        let basis = self.parse_basis()?;
        match (coeff, basis) {
            (Some(c), Some(b)) => Ok(Hyp::raw(c * b.u, c * b.v)),
            (Some(c), None) => Ok(Hyp::raw(c, c)),
            (None, Some(b)) => Ok(b),
            (None, None) => Err(self.fail("expected a coefficient or basis marker")),
        }
    }

    fn parse_basis(&mut self) -> Result<Option<Hyp>> {
        match self.peek() {
            Some(b'e') => {
                self.bump();
                match self.peek() {
                    Some(b'1') => {
                        self.bump();
                        Ok(Some(Hyp::E1))
                    }
                    Some(b'2') => {
                        self.bump();
                        Ok(Some(Hyp::E2))
                    }
                    _ => Err(self.fail("expected 'e1' or 'e2'")),
                }
            }
            Some(b'k') => {
                self.bump();
                Ok(Some(Hyp::K))
            }
            _ => Ok(None),
        }
    }

    fn parse_number(&mut self) -> Result<f64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'+') | Some(b'-')) {
            self.bump();
        }
        let mut digits = 0;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                digits += 1;
                self.bump();
            } else {
                break;
            }
        }
        if self.peek() == Some(b'.') {
            self.bump();
            while let Some(c) = self.peek() {
                if c.is_ascii_digit() {
                    digits += 1;
                    self.bump();
                } else {
                    break;
                }
            }
        }
        if digits == 0 {
            return Err(self.fail("expected digits"));
        }
        let text = &self.input[start..self.pos];
        let value: f64 = text
            .parse()
            .map_err(|_| self.fail("bad numeric literal"))?;
        if !value.is_finite() {
            return Err(self.fail("coefficient overflows"));
        }
        Ok(value)
    }
}
