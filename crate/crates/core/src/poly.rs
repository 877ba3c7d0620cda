//! Dense univariate polynomials over `Rat` and reduced rational functions.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{primitive_ints, Int, Rat};

/// Name of the indeterminate a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var(pub char);

impl Var {
    pub const M: Var = Var('m');
    pub const U: Var = Var('u');
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Coefficients are stored constant term first; there is never a trailing zero,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Poly::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rat::one())
    }

    /// The monomial `c * var^e`.
    pub fn monomial(var: Var, c: Rat, e: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = c;
        Poly::new(var, coeffs)
    }

    /// The polynomial `var`.
    pub fn x(var: Var) -> Self {
        Poly::monomial(var, Rat::one(), 1)
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Poly::new(var, coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// Builds a polynomial from `(coefficient, exponent)` terms in any order.
    pub fn from_terms(var: Var, terms: &[(i64, u32)]) -> Self {
        let deg = terms.iter().map(|t| t.1 as usize).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for &(c, e) in terms {
            coeffs[e as usize] += &Rat::from_int(c);
        }
        Poly::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `var^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &Poly) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::invalid(alloc::format!(
                "polynomials in different variables: {} and {}",
                self.var,
                other.var
            )))
        }
    }

    pub fn arith(a: &Poly, b: &Poly, op: PolyOp) -> Result<Poly> {
        a.check_var(b)?;
        Ok(match op {
            PolyOp::Add => add_coeffs(a, b, false),
            PolyOp::Sub => add_coeffs(a, b, true),
            PolyOp::Mul => mul_coeffs(a, b),
        })
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one(self.var);
        let mut base = self.clone();
        let mut e = e;
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

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(-var)`: odd-degree coefficients negated.
    pub fn compose_neg(&self) -> Poly {
        Poly {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Euclidean division over `Rat`: returns `(q, r)` with `self = q*d + r`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check_var(d)?;
        let dd = d
            .degree()
            .ok_or_else(|| Error::invalid("polynomial division by zero"))?;
        let lead_inv = d.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(self.var), Poly::zero(self.var)));
        };
        if nd < dd {
            return Ok((Poly::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                rem[i + j] -= &t;
            }
            quot[i] = c;
        }
        Ok((Poly::new(self.var, quot), Poly::new(self.var, rem)))
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::invalid("polynomial division is not exact"))
        }
    }

    /// Splits `self = c * prim` where `prim` has coprime integer coefficients and a
    /// positive leading coefficient. The zero polynomial gives `(0, 0)`.
    pub fn primitive_part(&self) -> (Rat, Poly) {
        if self.is_zero() {
            return (Rat::zero(), self.clone());
        }
        let (ints, scale) = primitive_ints(&self.coeffs);
        let mut c = scale.recip().expect("nonzero content");
        let mut coeffs: Vec<Rat> = ints.into_iter().map(Rat::from_int).collect();
        if coeffs.last().is_some_and(Rat::is_negative) {
            c = -c;
            for x in coeffs.iter_mut() {
                *x = -&*x;
            }
        }
        (c, Poly::new(self.var, coeffs))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Greatest common divisor, monic (zero if both are zero).
    ///
    /// Runs the primitive remainder sequence over the integers: each pseudo-remainder
    /// has its content removed, so coefficient growth stays bounded.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_var(other)?;
        let (_, mut a) = self.primitive_part();
        let (_, mut b) = other.primitive_part();
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = r.primitive_part().1;
        }
        Ok(a.monic())
    }

    /// Human-readable monomial sum, highest degree first, e.g. `5*m^14 + 7*m^13 - 1`.
    pub fn to_pretty(&self) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let unit = mag == Rat::one();
            match i {
                0 => {
                    let _ = write!(s, "{mag}");
                }
                _ => {
                    if !unit {
                        let _ = write!(s, "{mag}*");
                    }
                    let _ = write!(s, "{}", self.var);
                    if i > 1 {
                        let _ = write!(s, "^{i}");
                    }
                }
            }
        }
        s
    }
}

/// Pseudo-remainder of primitive integer polynomials: `lc(b)^k * a mod b`, computed
/// without leaving the integers.
fn pseudo_rem(a: &Poly, b: &Poly) -> Poly {
    let var = a.var;
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return a.clone();
    };
    if da < db {
        return a.clone();
    }
    let to_int = |p: &Poly| -> Vec<Int> { p.coeffs.iter().map(|c| c.numer().clone()).collect() };
    let mut r = to_int(a);
    let bi = to_int(b);
    let lb = bi[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        let shift = dr - db;
        for (j, bc) in bi.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    Poly::new(var, r.into_iter().map(Rat::from_int).collect())
}

fn add_coeffs(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.coeffs.get(i);
        let y = b.coeffs.get(i);
        out.push(match (x, y, negate_b) {
            (Some(x), Some(y), false) => x + y,
            (Some(x), Some(y), true) => x - y,
            (Some(x), None, _) => x.clone(),
            (None, Some(y), false) => y.clone(),
            (None, Some(y), true) => -y,
            (None, None, _) => unreachable!(),
        });
    }
    Poly::new(a.var, out)
}

fn mul_coeffs(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero(a.var);
    }
    // integer fast path: every family polynomial has integer coefficients
    if a.coeffs.iter().chain(&b.coeffs).all(Rat::is_integer) {
        let mut out = vec![Int::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x.numer() * y.numer();
            }
        }
        return Poly::new(a.var, out.into_iter().map(Rat::from_int).collect());
    }
    let mut out = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    Poly::new(a.var, out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_pretty())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $op:expr) => {
        impl<'a, 'b> $trait<&'b Poly> for &'a Poly {
            type Output = Poly;
            /// Panics if the operands are in different variables; use
            /// [`Poly::arith`] for a checked version.
            fn $method(self, rhs: &'b Poly) -> Poly {
                Poly::arith(self, rhs, $op).expect("polynomial variable mismatch")
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                Poly::arith(&self, &rhs, $op).expect("polynomial variable mismatch")
            }
        }
        impl<'b> $trait<&'b Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'b Poly) -> Poly {
                Poly::arith(&self, rhs, $op).expect("polynomial variable mismatch")
            }
        }
    };
}

poly_binop!(Add, add, PolyOp::Add);
poly_binop!(Sub, sub, PolyOp::Sub);
poly_binop!(Mul, mul, PolyOp::Mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            var: self.var,
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

/// Reduced quotient `num/den` of two polynomials in the same variable.
///
/// Canonical form: `gcd(num, den) = 1`, and `den` has coprime integer
/// coefficients with a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        num.check_var(&den)?;
        if den.is_zero() {
            return Err(Error::invalid("rational function with zero denominator"));
        }
        let var = num.var;
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: Poly::one(var),
            });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let (c, den) = den.primitive_part();
        let num = num.scale(&c.recip()?);
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var;
        RatFunc {
            num: p,
            den: Poly::one(var),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.num.var
    }

    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { at: x.clone() });
        }
        Ok(&self.num.eval(x) / &d)
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc> {
        let n = Poly::arith(&self.num, &other.den, PolyOp::Mul)?
            + Poly::arith(&other.num, &self.den, PolyOp::Mul)?;
        RatFunc::new(n, &self.den * &other.den)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc> {
        let n = Poly::arith(&self.num, &other.num, PolyOp::Mul)?;
        RatFunc::new(n, &self.den * &other.den)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.num.is_zero() {
            return Err(Error::invalid("rational function division by zero"));
        }
        let n = Poly::arith(&self.num, &other.den, PolyOp::Mul)?;
        RatFunc::new(n, &self.den * &other.num)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0) == Rat::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn m(coeffs: &[i64]) -> Poly {
        Poly::from_ints(Var::M, coeffs)
    }

    #[test]
    fn difference_of_squares() {
        let p = &m(&[1, 1]) * &m(&[-1, 1]);
        assert_eq!(p, m(&[-1, 0, 1]));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn self_subtraction_is_zero() {
        let p = m(&[3, -2, 7]);
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(z.to_pretty(), "0");
    }

    #[test]
    fn variable_mismatch() {
        let a = m(&[1, 1]);
        let b = Poly::from_ints(Var::U, &[1, 1]);
        assert!(matches!(
            Poly::arith(&a, &b, PolyOp::Add),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn compose_neg_involution() {
        let p = m(&[1, 1]);
        assert_eq!(p.compose_neg(), m(&[1, -1]));
        let q = m(&[5, -3, 2, 9]);
        assert_eq!(q.compose_neg().compose_neg(), q);
        assert_eq!(q.compose_neg().eval(&rat(3)), q.eval(&rat(-3)));
    }

    #[test]
    fn pretty_print() {
        assert_eq!(m(&[25, 15, 0, 1]).to_pretty(), "m^3 + 15*m + 25");
        assert_eq!(m(&[-1, 0, -1]).to_pretty(), "-m^2 - 1");
        let p = Poly::new(Var::M, alloc::vec![Rat::frac(1, 2), Rat::frac(-3, 4)]);
        assert_eq!(p.to_pretty(), "-3/4*m + 1/2");
    }

    #[test]
    fn division_and_gcd() {
        let a = &m(&[-1, 1]) * &m(&[2, 0, 1]);
        let b = &m(&[-1, 1]) * &m(&[3, 1]);
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, m(&[-1, 1]));
        let (q, r) = a.div_rem(&m(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, m(&[2, 0, 1]));
        assert!(a.div_rem(&Poly::zero(Var::M)).is_err());
    }

    #[test]
    fn ratfunc_pole_and_identity() {
        let f = RatFunc::new(m(&[1]), m(&[-1, 1])).unwrap();
        assert!(matches!(f.eval(&rat(1)), Err(Error::Pole { .. })));
        assert_eq!(f.eval(&rat(3)).unwrap(), Rat::frac(1, 2));
        let g = RatFunc::new(m(&[2, 3, 1]), m(&[5, 0, 7])).unwrap();
        let one = g.div(&g).unwrap();
        assert_eq!(one, RatFunc::from_poly(m(&[1])));
    }

    #[test]
    fn ratfunc_reduces() {
        // (m^2-1)/(2m-2) = (m+1)/2
        let f = RatFunc::new(m(&[-1, 0, 1]), m(&[-2, 2])).unwrap();
        assert_eq!(f.denom(), &m(&[1]));
        assert_eq!(
            f.numer(),
            &Poly::new(Var::M, alloc::vec![Rat::frac(1, 2), Rat::frac(1, 2)])
        );
        // negative leading denominator gets flipped
        let g = RatFunc::new(m(&[1]), m(&[1, -2])).unwrap();
        assert_eq!(g.denom(), &m(&[-1, 2]));
        assert_eq!(g.numer(), &m(&[-1]));
    }
}
