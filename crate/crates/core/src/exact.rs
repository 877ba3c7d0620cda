//! Exact integers and rationals.
//!
//! `Int` is an unbounded signed integer. `Rat` is always stored in lowest
//! terms with a positive denominator, so structural equality is numeric
//! equality.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;

/// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// Floor of the `k`-th root of a nonnegative integer, by integer Newton iteration.
fn floor_root(n: &Int, k: u32) -> Int {
    debug_assert!(!n.is_negative() && k >= 1);
    if n.is_zero() || k == 1 {
        return n.clone();
    }
    let bits = n.bits();
    if bits <= u64::from(k) {
        // 1 <= n < 2^k, so the root is 1
        return Int::one();
    }
    let k_big = Int::from(k);
    let km1 = k - 1;
    // initial guess 2^ceil(bits/k) is >= the root
    let mut x: Int = Int::one() << bits.div_ceil(u64::from(k));
    loop {
        let y = (&x * (k - 1) + n / Pow::pow(&x, km1)) / &k_big;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Integer k-th root for odd `k`, returning `(root, exact)`.
///
/// For `n >= 0` the root is `floor(n^(1/k))`. For negative `n` the result is
/// `-int_nth_root(-n, k)`.
pub fn int_nth_root(n: &Int, k: u32) -> Result<(Int, bool)> {
    if k < 1 || k.is_multiple_of(2) {
        return Err(Error::invalid(alloc::format!(
            "root index must be a positive odd integer, got {k}"
        )));
    }
    if n.is_negative() {
        let (r, e) = int_nth_root(&-n, k)?;
        return Ok((-r, e));
    }
    let r = floor_root(n, k);
    let exact = &Pow::pow(&r, k) == n;
    Ok((r, exact))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn int_sqrt_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = floor_root(n, 2);
    (&r * &r == *n).then_some(r)
}

/// Arbitrary-precision rational number in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat {
    num: Int,
    den: Int,
}

impl Rat {
    /// Builds `num/den` in lowest terms. Fails on a zero denominator.
    pub fn new(num: Int, den: Int) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(mut num: Int, mut den: Int) -> Self {
        if num.is_zero() {
            return Rat::zero();
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num /= &g;
                den /= &g;
            }
        }
        Rat { num, den }
    }

    pub fn from_int(n: impl Into<Int>) -> Self {
        Rat {
            num: n.into(),
            den: Int::one(),
        }
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Rat::new(Int::from(n), Int::from(d)).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Rat {
            num: Int::zero(),
            den: Int::one(),
        }
    }

    pub fn one() -> Self {
        Rat::from_int(1)
    }

    pub fn numer(&self) -> &Int {
        &self.num
    }

    pub fn denom(&self) -> &Int {
        &self.den
    }

    pub fn into_parts(self) -> (Int, Int) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.num.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Rat {
        Rat {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::invalid("reciprocal of zero"));
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert (and fail on zero).
    pub fn pow(&self, e: i32) -> Result<Rat> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        let e = e as u32;
        Ok(Rat {
            num: Pow::pow(&self.num, e),
            den: Pow::pow(&self.den, e),
        })
    }

    pub fn square(&self) -> Rat {
        Rat {
            num: &self.num * &self.num,
            den: &self.den * &self.den,
        }
    }

    /// Checked division.
    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::invalid("division by zero"));
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.num.to_i64()
        } else {
            None
        }
    }
}

/// Nonnegative square root of `q` when `q >= 0` and both numerator and
/// denominator (in lowest terms) are perfect squares.
pub fn is_square_rat(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(&q.num)?;
    let d = int_sqrt_exact(&q.den)?;
    Some(Rat { num: n, den: d })
}

/// Least common multiple of the denominators, and the gcd of the numerators,
/// over a list of rationals. Used to clear a vector to coprime integers.
pub fn common_scale(values: &[Rat]) -> (Int, Int) {
    let mut l = Int::one();
    let mut g = Int::zero();
    for v in values {
        l = l.lcm(&v.den);
        g = g.gcd(&v.num);
    }
    (l, g)
}

/// Scales a vector of rationals to coprime integers (the content is removed).
/// Returns the integer vector and the factor `c` with `ints = c * values`.
/// An all-zero vector is returned unchanged with factor 1.
pub fn primitive_ints(values: &[Rat]) -> (Vec<Int>, Rat) {
    let (l, g) = common_scale(values);
    if g.is_zero() {
        return (values.iter().map(|_| Int::zero()).collect(), Rat::one());
    }
    let ints = values
        .iter()
        .map(|v| (&v.num * (&l / &v.den)) / &g)
        .collect();
    (ints, Rat::reduce(l, g))
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Self {
        Rat::from_int(v)
    }
}

impl From<i32> for Rat {
    fn from(v: i32) -> Self {
        Rat::from_int(v)
    }
}

impl From<Int> for Rat {
    fn from(v: Int) -> Self {
        Rat::from_int(v)
    }
}

impl From<&Int> for Rat {
    fn from(v: &Int) -> Self {
        Rat::from_int(v.clone())
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(token: &str) -> Result<Int> {
    let t = token.trim();
    let (neg, digits) = if let Some(rest) = t.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = t.strip_prefix('+') {
        (false, rest)
    } else {
        (false, t)
    };
    let digits = digits.trim_start();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            token: token.to_string(),
        });
    }
    let v = Int::parse_bytes(digits.as_bytes(), 10).ok_or_else(|| Error::Parse {
        token: token.to_string(),
    })?;
    Ok(if neg { -v } else { v })
}

impl FromStr for Rat {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"`, base 10, with an optional leading sign.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            token: String::from(s),
        };
        match s.split_once('/') {
            None => Ok(Rat::from_int(parse_int(s).map_err(|_| bad())?)),
            Some((n, d)) => {
                let n = parse_int(n).map_err(|_| bad())?;
                let d = parse_int(d).map_err(|_| bad())?;
                Rat::new(n, d).map_err(|_| bad())
            }
        }
    }
}

fn add_impl(a: &Rat, b: &Rat, negate_b: bool) -> Rat {
    let bn = if negate_b { -&b.num } else { b.num.clone() };
    if a.den.is_one() && b.den.is_one() {
        return Rat {
            num: &a.num + bn,
            den: Int::one(),
        };
    }
    if a.den == b.den {
        return Rat::reduce(&a.num + bn, a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        // already in lowest terms
        let num = &a.num * &b.den + bn * &a.den;
        let den = &a.den * &b.den;
        if num.is_zero() {
            return Rat::zero();
        }
        return Rat { num, den };
    }
    let ad = &a.den / &g;
    let bd = &b.den / &g;
    let t = &a.num * &bd + bn * &ad;
    if t.is_zero() {
        return Rat::zero();
    }
    let g2 = t.gcd(&g);
    let num = &t / &g2;
    let den = ad * (&b.den / &g2);
    Rat { num, den }
}

fn mul_impl(a: &Rat, b: &Rat) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return Rat {
            num: &a.num * &b.num,
            den: Int::one(),
        };
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let num = (&a.num / &g1) * (&b.num / &g2);
    let den = (&a.den / &g2) * (&b.den / &g1);
    Rat { num, den }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                $body(self, rhs)
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $body(&self, &rhs)
            }
        }
        impl<'b> $trait<&'b Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                $body(&self, rhs)
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_impl(a, b, false));
forward_binop!(Sub, sub, |a, b| add_impl(a, b, true));
forward_binop!(Mul, mul, mul_impl);
// Panics on division by zero, like integer division.
forward_binop!(Div, div, |a: &Rat, b: &Rat| a
    .checked_div(b)
    .expect("rational division by zero"));

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl core::iter::Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> core::iter::Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for an integer rational.
pub fn rat(v: i64) -> Rat {
    Rat::from_int(v)
}
