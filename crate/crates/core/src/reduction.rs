//! Solutions of the two-product equation, the equivalent product system, and
//! the freedoms (scaling, swaps) under which solutions are compared.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result, Stage};
use crate::exact::{primitive_ints, Int, Rat};
use crate::poly::Poly;

/// The operations the identity checks need, so they run unchanged on numbers
/// and on polynomials in `m`.
pub trait Ring: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;

    fn pow5(&self) -> Self {
        let sq = self.mul(self);
        sq.mul(&sq).mul(self)
    }
}

impl Ring for Rat {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl Ring for Poly {
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

fn sum5<T: Ring>(a: &T, b: &T) -> T {
    a.pow5().add(&b.pow5())
}

/// `(x1^5+x2^5)(x3^5+x4^5) - (y1^5+y2^5)(y3^5+y4^5)`.
pub fn eq5_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    let l = sum5(&x[0], &x[1]).mul(&sum5(&x[2], &x[3]));
    let r = sum5(&y[0], &y[1]).mul(&sum5(&y[2], &y[3]));
    l.sub(&r)
}

/// `(x1+x2)(x3+x4) - (y1+y2)(y3+y4)`.
pub fn eq1xy_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    let l = x[0].add(&x[1]).mul(&x[2].add(&x[3]));
    let r = y[0].add(&y[1]).mul(&y[2].add(&y[3]));
    l.sub(&r)
}

/// `x1 + x2 - y1 - y2`.
pub fn cond12_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    x[0].add(&x[1]).sub(&y[0].add(&y[1]))
}

/// `x3 + x4 - y3 - y4`.
pub fn cond34_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    x[2].add(&x[3]).sub(&y[2].add(&y[3]))
}

/// `sum X_i^5 - sum Y_i^5`.
pub fn eq5xy_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    let l = sum5(&x[0], &x[1]).add(&sum5(&x[2], &x[3]));
    let r = sum5(&y[0], &y[1]).add(&sum5(&y[2], &y[3]));
    l.sub(&r)
}

/// `X1 X2 - Y1 Y2`.
pub fn eq1x_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    x[0].mul(&x[1]).sub(&y[0].mul(&y[1]))
}

/// `X3 X4 - Y3 Y4`.
pub fn eq1y_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    x[2].mul(&x[3]).sub(&y[2].mul(&y[3]))
}

/// `sum X_i - sum Y_i`.
pub fn eq1xy_sys_residual<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    let l = x[0].add(&x[1]).add(&x[2]).add(&x[3]);
    let r = y[0].add(&y[1]).add(&y[2]).add(&y[3]);
    l.sub(&r)
}

/// An octuple `(x1..x4; y1..y4)`, never with all x or all y zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SolutionE5 {
    pub x: [Rat; 4],
    pub y: [Rat; 4],
}

impl SolutionE5 {
    pub fn new(x: [Rat; 4], y: [Rat; 4]) -> Result<Self> {
        if x.iter().all(Rat::is_zero) || y.iter().all(Rat::is_zero) {
            return Err(Error::invalid("octuple with an all-zero side"));
        }
        Ok(SolutionE5 { x, y })
    }

    pub fn from_ints(x: [i64; 4], y: [i64; 4]) -> Result<Self> {
        SolutionE5::new(x.map(Rat::from_int), y.map(Rat::from_int))
    }

    pub fn entries(&self) -> [&Rat; 8] {
        let (x, y) = (&self.x, &self.y);
        [&x[0], &x[1], &x[2], &x[3], &y[0], &y[1], &y[2], &y[3]]
    }
}

fn write_octuple(f: &mut fmt::Formatter<'_>, x: &[Rat; 4], y: &[Rat; 4]) -> fmt::Result {
    write!(
        f,
        "{},{},{},{};{},{},{},{}",
        x[0], x[1], x[2], x[3], y[0], y[1], y[2], y[3]
    )
}

impl fmt::Display for SolutionE5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_octuple(f, &self.x, &self.y)
    }
}

impl fmt::Debug for SolutionE5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SolutionE5(")?;
        write_octuple(f, &self.x, &self.y)?;
        write!(f, ")")
    }
}

/// Parses `"a,b,c,d;e,f,g,h"`; whitespace is ignored, entries are integers or `p/q`.
pub fn parse_octuple(text: &str) -> Result<([Rat; 4], [Rat; 4])> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let halves: Vec<&str> = cleaned.split(';').collect();
    if halves.len() != 2 {
        return Err(Error::Parse { token: text.into() });
    }
    let side = |s: &str| -> Result<[Rat; 4]> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse { token: s.into() });
        }
        let mut out: [Rat; 4] = Default::default();
        for (slot, p) in out.iter_mut().zip(parts) {
            *slot = p.parse()?;
        }
        Ok(out)
    };
    Ok((side(halves[0])?, side(halves[1])?))
}

impl FromStr for SolutionE5 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = parse_octuple(s)?;
        SolutionE5::new(x, y)
    }
}

/// `(X1..X4; Y1..Y4)` of the product system.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SystemSolution {
    pub x: [Rat; 4],
    pub y: [Rat; 4],
}

impl SystemSolution {
    pub fn new(x: [Rat; 4], y: [Rat; 4]) -> Self {
        SystemSolution { x, y }
    }
}

impl fmt::Display for SystemSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_octuple(f, &self.x, &self.y)
    }
}

impl fmt::Debug for SystemSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SystemSolution(")?;
        write_octuple(f, &self.x, &self.y)?;
        write!(f, ")")
    }
}

impl FromStr for SystemSolution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (x, y) = parse_octuple(s)?;
        Ok(SystemSolution { x, y })
    }
}

/// Sums and products of the four pairs.
#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymData {
    pub s1: Rat,
    pub s2: Rat,
    pub t1: Rat,
    pub t2: Rat,
    pub S1: Rat,
    pub S2: Rat,
    pub T1: Rat,
    pub T2: Rat,
}

pub fn verify_eq5(s: &SolutionE5) -> bool {
    eq5_residual(&s.x, &s.y).is_zero()
}

pub fn verify_eq1xy(s: &SolutionE5) -> bool {
    eq1xy_residual(&s.x, &s.y).is_zero()
}

pub fn verify_cond12(s: &SolutionE5) -> bool {
    cond12_residual(&s.x, &s.y).is_zero()
}

pub fn verify_cond34(s: &SolutionE5) -> bool {
    cond34_residual(&s.x, &s.y).is_zero()
}

/// `sum X^5 = sum Y^5`, `X1 X2 = Y1 Y2` and `X3 X4 = Y3 Y4` all hold.
pub fn verify_system(s: &SystemSolution) -> bool {
    eq5xy_residual(&s.x, &s.y).is_zero()
        && eq1x_residual(&s.x, &s.y).is_zero()
        && eq1y_residual(&s.x, &s.y).is_zero()
}

pub fn verify_eq1xy_system(s: &SystemSolution) -> bool {
    eq1xy_sys_residual(&s.x, &s.y).is_zero()
}

/// Whether `(x1^n+x2^n)(x3^n+x4^n) = (y1^n+y2^n)(y3^n+y4^n)`.
pub fn satisfies_power(s: &SolutionE5, n: i32) -> bool {
    let p = |v: &Rat| v.pow(n).expect("nonnegative exponent");
    let l = (p(&s.x[0]) + p(&s.x[1])) * (p(&s.x[2]) + p(&s.x[3]));
    let r = (p(&s.y[0]) + p(&s.y[1])) * (p(&s.y[2]) + p(&s.y[3]));
    l == r
}

fn cross_products(a: &[Rat; 4]) -> [Rat; 4] {
    [&a[0] * &a[2], &a[0] * &a[3], &a[1] * &a[2], &a[1] * &a[3]]
}

/// Signed multiplicity of each absolute value: `+1` for `v`, `-1` for `-v`.
/// Deleting `{a, -a}` pairs from a multiset leaves exactly this information.
fn reduced_multiset(values: &[Rat; 4]) -> BTreeMap<Rat, i32> {
    let mut counts = BTreeMap::new();
    for v in values.iter().filter(|v| !v.is_zero()) {
        *counts.entry(v.abs()).or_insert(0) += v.signum();
    }
    counts.retain(|_, c| *c != 0);
    counts
}

/// True when the solution holds for every odd exponent, which happens exactly
/// when the two product multisets agree after cancelling zeros and `{a, -a}` pairs.
pub fn is_trivial(s: &SolutionE5) -> Result<bool> {
    if !verify_eq5(s) {
        return Err(Error::invalid("triviality is only defined for solutions"));
    }
    Ok(reduced_products_equal(s))
}

/// The multiset comparison behind [`is_trivial`], without the solution check.
pub fn reduced_products_equal(s: &SolutionE5) -> bool {
    reduced_multiset(&cross_products(&s.x)) == reduced_multiset(&cross_products(&s.y))
}

/// `(k1 x1, k1 x2, k2 x3, k2 x4; k2 y1, k2 y2, k1 y3, k1 y4)`.
pub fn rescale(s: &SolutionE5, k1: &Rat, k2: &Rat) -> Result<SolutionE5> {
    if k1.is_zero() || k2.is_zero() {
        return Err(Error::invalid("scaling factors must be nonzero"));
    }
    let (x, y) = (&s.x, &s.y);
    Ok(SolutionE5 {
        x: [k1 * &x[0], k1 * &x[1], k2 * &x[2], k2 * &x[3]],
        y: [k2 * &y[0], k2 * &y[1], k1 * &y[2], k1 * &y[3]],
    })
}

/// Scales each block `{x1, x2, y3, y4}` and `{x3, x4, y1, y2}` to coprime
/// integers whose first nonzero entry is positive.
pub fn normalize_blocks(s: &SolutionE5) -> SolutionE5 {
    let (x, y) = (&s.x, &s.y);
    let b1 = primitive_signed(&[x[0].clone(), x[1].clone(), y[2].clone(), y[3].clone()]);
    let b2 = primitive_signed(&[x[2].clone(), x[3].clone(), y[0].clone(), y[1].clone()]);
    let [a0, a1, a2, a3] = b1;
    let [c0, c1, c2, c3] = b2;
    SolutionE5 {
        x: [a0, a1, c0, c1],
        y: [c2, c3, a2, a3],
    }
}

/// Coprime integers proportional to `v`, first nonzero entry positive.
pub fn primitive_signed<const N: usize>(v: &[Rat; N]) -> [Rat; N] {
    let (ints, _) = primitive_ints(v);
    let flip = ints
        .iter()
        .find(|i| !i.is_zero())
        .is_some_and(|i| i.is_negative());
    let mut out: [Rat; N] = core::array::from_fn(|_| Rat::zero());
    for (slot, i) in out.iter_mut().zip(ints) {
        *slot = Rat::from_int(if flip { -i } else { i });
    }
    out
}

/// Orbit invariant used by [`equivalent`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub pairs: [[Int; 2]; 4],
    /// `g1 g2 / (g3 g4)` where `g` is each pair's scale; `None` if a pair is zero.
    pub ratio: Option<Rat>,
}

/// The pair as `g * prim` with `prim` sorted, coprime, and the smaller of itself
/// and its negation. `antisym` is set when the negation is the same pair.
fn pair_form(a: &Rat, b: &Rat) -> ([Int; 2], Rat, bool) {
    let (ints, c) = primitive_ints(&[a.clone(), b.clone()]);
    if ints.iter().all(|i| i.is_zero()) {
        return ([Int::zero(), Int::zero()], Rat::zero(), false);
    }
    let mut p = [ints[0].clone(), ints[1].clone()];
    p.sort();
    let mut n = [-&p[0], -&p[1]];
    n.sort();
    let g = c.recip().expect("nonzero content");
    let antisym = p == n;
    if n < p {
        (n, -g, antisym)
    } else {
        (p, g, antisym)
    }
}

/// Canonical form under within-pair swaps, the joint swap
/// `(x1,x2)<->(x3,x4)`, `(y1,y2)<->(y3,y4)`, and independent scaling of the
/// four pairs by `l1..l4` with `l1 l2 = l3 l4` (which contains the `(k1, k2)`
/// rescaling).
pub fn canonical(s: &SolutionE5) -> CanonicalForm {
    let (x, y) = (&s.x, &s.y);
    let forms = [
        pair_form(&x[0], &x[1]),
        pair_form(&x[2], &x[3]),
        pair_form(&y[0], &y[1]),
        pair_form(&y[2], &y[3]),
    ];
    let any_zero = forms.iter().any(|f| f.1.is_zero());
    let any_antisym = forms.iter().any(|f| f.2);
    let ratio = if any_zero {
        None
    } else {
        let r = &(&forms[0].1 * &forms[1].1) / &(&forms[2].1 * &forms[3].1);
        // an antisymmetric pair can absorb -1 by a swap, so only |ratio| is invariant
        Some(if any_antisym { r.abs() } else { r })
    };
    let pairs = forms.map(|f| f.0);
    let swapped = CanonicalForm {
        pairs: [
            pairs[1].clone(),
            pairs[0].clone(),
            pairs[3].clone(),
            pairs[2].clone(),
        ],
        ratio: ratio.clone(),
    };
    let direct = CanonicalForm { pairs, ratio };
    core::cmp::min(direct, swapped)
}

pub fn equivalent(a: &SolutionE5, b: &SolutionE5) -> bool {
    canonical(a) == canonical(b)
}

pub fn to_system(s: &SolutionE5) -> SystemSolution {
    let (x, y) = (&s.x, &s.y);
    SystemSolution {
        x: [
            &x[0] * &x[2],
            &x[1] * &x[3],
            -(&y[0] * &y[2]),
            -(&y[1] * &y[3]),
        ],
        y: [
            -(&x[0] * &x[3]),
            -(&x[1] * &x[2]),
            &y[0] * &y[3],
            &y[1] * &y[2],
        ],
    }
}

/// Solves the `X`/`Y` relations for an octuple, pivoting on the first usable
/// product in each block, then reduces to a primitive integer solution.
pub fn from_system(sys: &SystemSolution) -> Result<SolutionE5> {
    if !eq1x_residual(&sys.x, &sys.y).is_zero() || !eq1y_residual(&sys.x, &sys.y).is_zero() {
        return Err(Error::invalid(
            "X1 X2 = Y1 Y2 and X3 X4 = Y3 Y4 are required",
        ));
    }
    let [x1v, x2v, x3v, x4v] = &sys.x;
    let [y1v, y2v, y3v, y4v] = &sys.y;
    let (zero, one) = (Rat::zero(), Rat::one());

    let xs: [Rat; 4] = if !x1v.is_zero() {
        [one.clone(), -&(y2v / x1v), x1v.clone(), -y1v]
    } else if !x2v.is_zero() {
        [-&(y1v / x2v), one.clone(), -y2v, x2v.clone()]
    } else if !y1v.is_zero() {
        [one.clone(), zero.clone(), zero.clone(), -y1v]
    } else if !y2v.is_zero() {
        [zero.clone(), one.clone(), -y2v, zero.clone()]
    } else {
        return Err(Error::Unsolvable("X1, X2, Y1, Y2 all vanish".into()));
    };

    let ys: [Rat; 4] = if !x3v.is_zero() {
        [one.clone(), -&(y4v / x3v), -x3v, y3v.clone()]
    } else if !x4v.is_zero() {
        [-&(y3v / x4v), one.clone(), y4v.clone(), -x4v]
    } else if !y3v.is_zero() {
        [one.clone(), zero.clone(), zero.clone(), y3v.clone()]
    } else if !y4v.is_zero() {
        [zero.clone(), one.clone(), y4v.clone(), zero.clone()]
    } else {
        return Err(Error::Unsolvable("X3, X4, Y3, Y4 all vanish".into()));
    };

    let s = SolutionE5::new(xs, ys)
        .map_err(|e| Error::construction(Stage::FromSystem, alloc::format!("{e}")))?;
    Ok(normalize_blocks(&s))
}

pub fn symmetric_data(sys: &SystemSolution) -> SymData {
    let (x, y) = (&sys.x, &sys.y);
    SymData {
        s1: &x[0] + &x[1],
        s2: &x[0] * &x[1],
        t1: &x[2] + &x[3],
        t2: &x[2] * &x[3],
        S1: &y[0] + &y[1],
        S2: &y[0] * &y[1],
        T1: &y[2] + &y[3],
        T2: &y[2] * &y[3],
    }
}

/// Power sum `a^5 + b^5` of the roots of `z^2 - e1 z + e2`.
fn p5(e1: &Rat, e2: &Rat) -> Rat {
    let five = Rat::from_int(5);
    let e1_3 = &e1.square() * e1;
    let e1_5 = &e1_3 * &e1.square();
    &(&e1_5 - &(&(&five * &e1_3) * e2)) + &(&(&five * e1) * &e2.square())
}

/// `sum X^5 = sum Y^5` written in the pair sums and products.
pub fn verify_eq5st(d: &SymData) -> bool {
    let l = &p5(&d.s1, &d.s2) + &p5(&d.t1, &d.t2);
    let r = &p5(&d.S1, &d.S2) + &p5(&d.T1, &d.T2);
    l == r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use alloc::string::ToString;

    fn first_example() -> SolutionE5 {
        SolutionE5::from_ints([35330, 25801, 2407, -1492], [-19814, 32807, 1672, 2633]).unwrap()
    }

    fn second_example() -> SolutionE5 {
        SolutionE5::from_ints(
            [129005, 176650, 105932, -170897],
            [186943, 118712, -164035, 99070],
        )
        .unwrap()
    }

    #[test]
    fn reference_octuples_verify() {
        let a = first_example();
        assert!(verify_eq5(&a));
        assert!(verify_eq1xy(&a));
        let b = second_example();
        assert!(verify_eq5(&b));
        assert!(verify_cond12(&b));
        assert!(verify_cond34(&b));
        let bad = SolutionE5::from_ints([1, 1, 1, 1], [1, 1, 1, 2]).unwrap();
        assert!(!verify_eq5(&bad));
    }

    #[test]
    fn triviality() {
        let (a1, a2, a3, a4, u, v) = (1, 2, 3, 4, 5, 7);
        let t = SolutionE5::from_ints(
            [a1 * u, a2 * u, a3 * v, a4 * v],
            [a1 * v, a2 * v, a3 * u, a4 * u],
        )
        .unwrap();
        assert_eq!(is_trivial(&t), Ok(true));
        let z = SolutionE5::from_ints([1, -1, 5, 7], [2, -2, 3, 4]).unwrap();
        assert_eq!(is_trivial(&z), Ok(true));
        assert_eq!(is_trivial(&first_example()), Ok(false));
        let bad = SolutionE5::from_ints([1, 1, 1, 1], [1, 1, 1, 2]).unwrap();
        assert!(matches!(is_trivial(&bad), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn rescaling() {
        let a = first_example();
        assert_eq!(rescale(&a, &rat(1), &rat(1)).unwrap(), a);
        let b = rescale(&a, &rat(2), &rat(3)).unwrap();
        assert!(verify_eq5(&b));
        assert!(equivalent(&a, &rescale(&a, &rat(5), &rat(-7)).unwrap()));
        assert!(rescale(&a, &rat(0), &rat(1)).is_err());
    }

    #[test]
    fn distinct_examples_are_not_equivalent() {
        assert!(!equivalent(&first_example(), &second_example()));
    }

    #[test]
    fn within_pair_and_block_swaps() {
        let a = first_example();
        let [x1, x2, x3, x4] = a.x.clone();
        let [y1, y2, y3, y4] = a.y.clone();
        let swapped = SolutionE5::new(
            [x2.clone(), x1.clone(), x4.clone(), x3.clone()],
            [y2.clone(), y1.clone(), y3.clone(), y4.clone()],
        )
        .unwrap();
        assert!(equivalent(&a, &swapped));
        let blocks = SolutionE5::new([x3, x4, x1, x2], [y3, y4, y1, y2]).unwrap();
        assert!(verify_eq5(&blocks));
        assert!(equivalent(&a, &blocks));
    }

    #[test]
    fn system_roundtrip() {
        let a = first_example();
        let sys = to_system(&a);
        assert!(verify_system(&sys));
        assert!(verify_eq1xy_system(&sys));
        let d = symmetric_data(&sys);
        assert!(verify_eq5st(&d));
        let back = from_system(&sys).unwrap();
        assert!(verify_eq5(&back));
        assert!(equivalent(&a, &back));
    }

    #[test]
    fn degenerate_system_images() {
        let s = SolutionE5::from_ints([1, 0, 1, 0], [1, 0, 1, 0]).unwrap();
        let sys = to_system(&s);
        assert!(verify_system(&sys));

        let all_zero = SystemSolution::default();
        let d = symmetric_data(&all_zero);
        assert!(verify_eq5st(&d));
        assert!(matches!(from_system(&all_zero), Err(Error::Unsolvable(_))));

        let d = SymData {
            s1: rat(1),
            ..SymData::default()
        };
        assert!(!verify_eq5st(&d));
    }

    #[test]
    fn pivot_fallback() {
        // X1 = 0 but Y2 != 0 forces X2 or Y1 as pivot
        let s = SolutionE5::from_ints([0, 2, 3, 1], [1, 2, 3, 4]).unwrap();
        let sys = to_system(&s);
        assert!(sys.x[0].is_zero());
        let back = from_system(&sys).unwrap();
        assert_eq!(to_system(&back).x[0], rat(0));
    }

    #[test]
    fn parse_octuple_text() {
        let s: SolutionE5 = "1,2,3,4;5,6,7,8".parse().unwrap();
        assert_eq!(s.y[3], rat(8));
        assert!(matches!(
            "1,2,3;4".parse::<SolutionE5>(),
            Err(Error::Parse { .. })
        ));
        let p: SolutionE5 = "35330, 25801, 2407, -1492; -19814, 32807, 1672, 2633"
            .parse()
            .unwrap();
        assert_eq!(p, first_example());
        assert_eq!(p.to_string().parse::<SolutionE5>().unwrap(), p);
    }
}
