//! Exact field arithmetic over the rationals and a single quadratic extension Q(√k).
//!
//! A [`Scalar`] is either a canonical big rational or an element `a + b√k` with
//! `b ≠ 0`. Results whose irrational part cancels collapse back to the rational
//! variant, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use regex::Regex;
use thiserror::Error;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields: sqrt({0}) vs sqrt({1})")]
    MixedRadicand(u64, u64),
    #[error("square root of a negative value")]
    NegativeSqrt,
    #[error("radicand {0} must be a square-free integer greater than 1")]
    BadRadicand(u64),
    #[error("malformed scalar literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in literal {0:?}")]
    ZeroDenominator(String),
}

/// Square-free radicand `k > 1` of a quadratic extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Radicand(u64);

impl Radicand {
    pub fn new(k: u64) -> Result<Self, FieldError> {
        if k < 2 || !is_square_free(k) {
            return Err(FieldError::BadRadicand(k));
        }
        Ok(Radicand(k))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    fn as_rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self.0))
    }
}

impl fmt::Display for Radicand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_square_free(k: u64) -> bool {
    let mut n = k;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Splits `n > 0` as `s² · f` with `f` square-free. Trial division; `n` must fit in u64.
pub fn square_free_decomposition(n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    (square, free * rest)
}

/// The arithmetic context a computation runs in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Quadratic(Radicand),
}

impl Field {
    pub fn radicand(self) -> Option<Radicand> {
        match self {
            Field::Rational => None,
            Field::Quadratic(k) => Some(k),
        }
    }

    /// Smallest field containing both, or an error when two different radicands meet.
    pub fn join(self, other: Field) -> Result<Field, FieldError> {
        match (self, other) {
            (Field::Rational, f) | (f, Field::Rational) => Ok(f),
            (Field::Quadratic(a), Field::Quadratic(b)) if a == b => Ok(self),
            (Field::Quadratic(a), Field::Quadratic(b)) => Err(FieldError::MixedRadicand(a.0, b.0)),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Quadratic(k) => write!(f, "quadext {k}"),
        }
    }
}

/// `a + b√k`. Inside a [`Scalar`] the irrational part is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub k: Radicand,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Quad(QuadExt),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

/// Square root of a nonnegative rational when it is itself rational.
pub fn exact_sqrt(s: &Rational) -> Result<Option<Rational>, FieldError> {
    if s.is_negative() {
        return Err(FieldError::NegativeSqrt);
    }
    let n = s.numer();
    let d = s.denom();
    let rn = n.sqrt();
    if &(&rn * &rn) != n {
        return Ok(None);
    }
    let rd = d.sqrt();
    if &(&rd * &rd) != d {
        return Ok(None);
    }
    Ok(Some(Rational::new(rn, rd)))
}

fn sign_of(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Sign of `a + b√s` for `s ≥ 0`, decided from squares only.
pub fn sign_with_root(a: &Scalar, b: &Scalar, s: &Scalar) -> i8 {
    let sa = a.sign();
    let sb = if s.is_zero() { 0 } else { b.sign() };
    if sa >= 0 && sb >= 0 {
        return if sa == 0 && sb == 0 { 0 } else { 1 };
    }
    if sa <= 0 && sb <= 0 {
        return -1;
    }
    // Opposite signs: compare a² with b²·s.
    let diff = a.square() - b.square() * s;
    if sa > 0 {
        diff.sign()
    } else {
        -diff.sign()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `n / d`; panics on `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// `a + b√k`, collapsing to a rational when `b = 0`.
    pub fn quad(a: Rational, b: Rational, k: Radicand) -> Self {
        if b.is_zero() {
            Scalar::Rational(a)
        } else {
            Scalar::Quad(QuadExt { a, b, k })
        }
    }

    /// `√k` for a square-free `k`.
    pub fn sqrt_of(k: Radicand) -> Self {
        Scalar::quad(Rational::zero(), Rational::one(), k)
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Quad(q) => Field::Quadratic(q.k),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Quad(_) => None,
        }
    }

    /// Rational part and irrational coefficient.
    pub fn parts(&self) -> (Rational, Rational) {
        match self {
            Scalar::Rational(r) => (r.clone(), Rational::zero()),
            Scalar::Quad(q) => (q.a.clone(), q.b.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Quad(_) => false,
        }
    }

    pub fn sign(&self) -> i8 {
        match self {
            Scalar::Rational(r) => sign_of(r),
            Scalar::Quad(q) => {
                let sa = sign_of(&q.a);
                let sb = sign_of(&q.b);
                if sa >= 0 && sb >= 0 {
                    1
                } else if sa <= 0 && sb <= 0 {
                    -1
                } else {
                    let diff = &q.a * &q.a - &q.b * &q.b * q.k.as_rational();
                    if sa > 0 {
                        sign_of(&diff)
                    } else {
                        -sign_of(&diff)
                    }
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Conjugate `a − b√k`.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => self.clone(),
            Scalar::Quad(q) => Scalar::quad(q.a.clone(), -q.b.clone(), q.k),
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        combine(self, rhs, |a1, a2| a1 + a2, |a1, b1, a2, b2, _| (a1 + a2, b1 + b2))
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        combine(self, rhs, |a1, a2| a1 - a2, |a1, b1, a2, b2, _| (a1 - a2, b1 - b2))
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        combine(self, rhs, |a1, a2| a1 * a2, |a1, b1, a2, b2, k| (a1 * a2 + b1 * b2 * k, a1 * b2 + b1 * a2))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        if rhs.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match rhs {
            Scalar::Rational(d) => match self {
                Scalar::Rational(n) => Ok(Scalar::Rational(n / d)),
                Scalar::Quad(q) => Ok(Scalar::quad(&q.a / d, &q.b / d, q.k)),
            },
            Scalar::Quad(q) => {
                self.field().join(rhs.field())?;
                let norm = &q.a * &q.a - &q.b * &q.b * q.k.as_rational();
                let num = self.checked_mul(&rhs.conjugate())?;
                let (a, b) = num.parts();
                Ok(Scalar::quad(a / &norm, b / &norm, q.k))
            }
        }
    }

    pub fn recip(&self) -> Result<Scalar, FieldError> {
        Scalar::one().checked_div(self)
    }

    /// Square root inside `field`, if it exists there. The result is nonnegative.
    pub fn sqrt_in(&self, field: Field) -> Result<Option<Scalar>, FieldError> {
        if self.is_negative() {
            return Err(FieldError::NegativeSqrt);
        }
        let field = field.join(self.field())?;
        match (self, field) {
            (Scalar::Rational(s), Field::Rational) => Ok(exact_sqrt(s)?.map(Scalar::Rational)),
            (Scalar::Rational(s), Field::Quadratic(k)) => {
                if let Some(t) = exact_sqrt(s)? {
                    return Ok(Some(Scalar::Rational(t)));
                }
                Ok(exact_sqrt(&(s / k.as_rational()))?.map(|t| Scalar::quad(Rational::zero(), t, k)))
            }
            (Scalar::Quad(q), _) => {
                // (p + t√k)² = a + b√k  ⇒  p² = (a ± √(a² − k b²)) / 2, t = b / (2p).
                let kr = q.k.as_rational();
                let norm = &q.a * &q.a - &q.b * &q.b * &kr;
                if norm.is_negative() {
                    return Ok(None);
                }
                let Some(m) = exact_sqrt(&norm)? else {
                    return Ok(None);
                };
                let two = Rational::from_integer(BigInt::from(2));
                for cand in [(&q.a + &m) / &two, (&q.a - &m) / &two] {
                    if cand.is_negative() || cand.is_zero() {
                        continue;
                    }
                    if let Some(p) = exact_sqrt(&cand)? {
                        let t = &q.b / (&two * &p);
                        let root = Scalar::quad(p, t, q.k);
                        if &root.square() == self {
                            return Ok(Some(root.abs()));
                        }
                    }
                }
                Ok(None)
            }
        }
    }

    /// Diagnostic floating value; never used for decisions.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            Scalar::Quad(q) => {
                q.a.to_f64().unwrap_or(f64::NAN) + q.b.to_f64().unwrap_or(f64::NAN) * (q.k.0 as f64).sqrt()
            }
        }
    }

    /// `~`-prefixed rendering with 12 significant digits.
    pub fn approx(&self) -> String {
        let v = self.to_f64();
        if v == 0.0 {
            return "~0".to_string();
        }
        let mag = v.abs().log10().floor() as i32;
        if (-4..12).contains(&mag) {
            let decimals = (11 - mag).max(0) as usize;
            format!("~{v:.decimals$}")
        } else {
            format!("~{v:.11e}")
        }
    }
}

fn combine(
    lhs: &Scalar,
    rhs: &Scalar,
    rat: impl Fn(&Rational, &Rational) -> Rational,
    quad: impl Fn(&Rational, &Rational, &Rational, &Rational, &Rational) -> (Rational, Rational),
) -> Result<Scalar, FieldError> {
    match (lhs, rhs) {
        (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(rat(a, b))),
        _ => {
            let k = lhs.field().join(rhs.field())?.radicand().expect("one operand is irrational");
            let (a1, b1) = lhs.parts();
            let (a2, b2) = rhs.parts();
            let (a, b) = quad(&a1, &b1, &a2, &b2, &k.as_rational());
            Ok(Scalar::quad(a, b, k))
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar {}: {e}", stringify!($method)),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Quad(q) => Scalar::Quad(QuadExt { a: -q.a.clone(), b: -q.b.clone(), k: q.k }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = self.checked_sub(other).ok()?;
        Some(d.sign().cmp(&0))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl From<QuadExt> for Scalar {
    fn from(q: QuadExt) -> Self {
        Scalar::quad(q.a, q.b, q.k)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => f.write_str(&fmt_rational(r)),
            Scalar::Quad(q) => {
                if q.a.is_zero() {
                    write!(f, "{}*sqrt({})", fmt_rational(&q.b), q.k)
                } else {
                    let sign = if q.b.is_negative() { '-' } else { '+' };
                    write!(f, "{}{}{}*sqrt({})", fmt_rational(&q.a), sign, fmt_rational(&q.b.abs()), q.k)
                }
            }
        }
    }
}

fn literal_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"^(?P<a>[+-]?\d+(?:/\d+)?)?(?:(?P<sign>[+-])?(?:(?P<b>\d+(?:/\d+)?)\*)?sqrt\((?P<k>\d+)\))?$")
            .expect("valid literal regex")
    })
}

fn parse_rational(text: &str, whole: &str) -> Result<Rational, FieldError> {
    let malformed = || FieldError::Malformed(whole.to_string());
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| malformed())?;
    let d: BigInt = d.parse().map_err(|_| malformed())?;
    if d.is_zero() {
        return Err(FieldError::ZeroDenominator(whole.to_string()));
    }
    Ok(Rational::new(n, d))
}

impl FromStr for Scalar {
    type Err = FieldError;

    /// Accepts `p`, `p/q`, `p/q+r/s*sqrt(k)`, `r/s*sqrt(k)` and `sqrt(k)`; whitespace is ignored.
    fn from_str(text: &str) -> Result<Self, FieldError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let malformed = || FieldError::Malformed(text.to_string());
        if compact.is_empty() {
            return Err(malformed());
        }
        let caps = literal_regex().captures(&compact).ok_or_else(malformed)?;
        let a = match caps.name("a") {
            Some(m) => parse_rational(m.as_str(), text)?,
            None => Rational::zero(),
        };
        let Some(k) = caps.name("k") else {
            if caps.name("a").is_none() {
                return Err(malformed());
            }
            return Ok(Scalar::Rational(a));
        };
        if caps.name("a").is_some() && caps.name("sign").is_none() {
            return Err(malformed());
        }
        let k: u64 = k.as_str().parse().map_err(|_| malformed())?;
        let k = Radicand::new(k)?;
        let mut b = match caps.name("b") {
            Some(m) => parse_rational(m.as_str(), text)?,
            None => Rational::one(),
        };
        if caps.name("sign").map(|m| m.as_str()) == Some("-") {
            b = -b;
        }
        Ok(Scalar::quad(a, b, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(s("1/2") + s("1/3"), s("5/6"));
    }

    #[test]
    fn conjugate_product() {
        assert_eq!(s("1+1*sqrt(3)") * s("1-1*sqrt(3)"), Scalar::int(-2));
        assert_eq!(s("sqrt(2)").square(), Scalar::int(2));
        assert!(matches!(s("sqrt(2)").square(), Scalar::Rational(_)));
    }

    #[test]
    fn division_and_errors() {
        let x = s("3+2*sqrt(5)");
        let q = &x / &x;
        assert_eq!(q, Scalar::one());
        assert_eq!(x.checked_div(&Scalar::zero()), Err(FieldError::DivisionByZero));
        assert_eq!(s("sqrt(2)").checked_add(&s("sqrt(3)")), Err(FieldError::MixedRadicand(2, 3)));
    }

    #[test]
    fn exact_sqrt_cases() {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(exact_sqrt(&r(6, 25)).unwrap(), None);
        assert_eq!(exact_sqrt(&r(49, 4)).unwrap(), Some(r(7, 2)));
        assert_eq!(exact_sqrt(&r(0, 1)).unwrap(), Some(r(0, 1)));
        assert_eq!(exact_sqrt(&r(-1, 4)), Err(FieldError::NegativeSqrt));
    }

    #[test]
    fn sqrt_in_quadratic_field() {
        let k3 = Field::Quadratic(Radicand::new(3).unwrap());
        assert_eq!(Scalar::int(12).sqrt_in(k3).unwrap(), Some(s("2*sqrt(3)")));
        assert_eq!(Scalar::int(12).sqrt_in(Field::Rational).unwrap(), None);
        // (2 + √3)² = 7 + 4√3
        assert_eq!(s("7+4*sqrt(3)").sqrt_in(k3).unwrap(), Some(s("2+1*sqrt(3)")));
        // (1 − √3)² = 4 − 2√3, root chosen nonnegative: √3 − 1
        assert_eq!(s("4-2*sqrt(3)").sqrt_in(k3).unwrap(), Some(s("-1+1*sqrt(3)")));
        assert_eq!(s("1+1*sqrt(3)").sqrt_in(k3).unwrap(), None);
    }

    #[test]
    fn signs() {
        assert_eq!(s("-3/7").sign(), -1);
        assert_eq!(s("1-1*sqrt(3)").sign(), -1);
        assert_eq!(s("-1+1*sqrt(3)").sign(), 1);
        assert_eq!(s("2-1*sqrt(3)").sign(), 1);
        assert_eq!(Scalar::zero().sign(), 0);
        assert!(s("sqrt(2)") > s("7/5"));
        assert!(s("sqrt(2)") < s("3/2"));
    }

    #[test]
    fn sign_with_irrational_root() {
        // 3 − 2·√2 > 0, 3 − 2·√3 < 0
        assert_eq!(sign_with_root(&Scalar::int(3), &Scalar::int(-2), &Scalar::int(2)), 1);
        assert_eq!(sign_with_root(&Scalar::int(3), &Scalar::int(-2), &Scalar::int(3)), -1);
        assert_eq!(sign_with_root(&Scalar::int(-2), &Scalar::int(1), &Scalar::int(4)), 0);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(s("339416/6927"), Scalar::ratio(339416, 6927));
        let q = s("-1/2+1*sqrt(2)");
        assert_eq!(q.parts(), (Rational::new((-1).into(), 2.into()), Rational::one()));
        assert_eq!(q.to_string(), "-1/2+1*sqrt(2)");
        assert_eq!(s(" 1 / 3 * sqrt( 3 )").to_string(), "1/3*sqrt(3)");
        assert_eq!(s("-sqrt(2)").to_string(), "-1*sqrt(2)");
        assert_eq!(s("4/6").to_string(), "2/3");
        assert_eq!(s("5+0*sqrt(3)"), Scalar::int(5));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("3/0".parse::<Scalar>(), Err(FieldError::ZeroDenominator(_))));
        assert!(matches!("1+sqrt(4)".parse::<Scalar>(), Err(FieldError::BadRadicand(4))));
        assert!(matches!("sqrt(0)".parse::<Scalar>(), Err(FieldError::BadRadicand(0))));
        assert!(matches!("sqrt(8)".parse::<Scalar>(), Err(FieldError::BadRadicand(8))));
        for bad in ["", "abc", "1/2sqrt(2)", "1.5", "1//2", "sqrt(-3)"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn approx_rendering() {
        assert_eq!(Scalar::ratio(1, 3).approx(), "~0.333333333333");
        assert_eq!(Scalar::int(20328).approx(), "~20328.0000000");
        assert!(s("sqrt(2)").approx().starts_with("~1.41421356237"));
    }

    #[test]
    fn square_free_split() {
        assert_eq!(square_free_decomposition(150), (5, 6));
        assert_eq!(square_free_decomposition(1), (1, 1));
        assert_eq!(square_free_decomposition(49), (7, 1));
    }
}
