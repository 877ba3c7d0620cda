//! The Weierstrass curve attached to `v^2 = phi(u)` at a fixed rational `m`:
//! group law, the two birational maps, the point `P'`, and the generator that
//! turns multiples of `P'` into new solutions.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::Signed;

use crate::constants;
use crate::construct::{phi_quartic, pipeline, PipelineTrace, Quartic};
use crate::error::{Error, Result, Stage};
use crate::exact::{is_square_rat, Int, Rat};
use crate::reduction::equivalent;

/// `y^2 = x^3 + a x + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub a: Rat,
    pub b: Rat,
}

#[derive(Clone, PartialEq, Eq)]
pub enum ECPoint {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl ECPoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn coords(&self) -> Option<(&Rat, &Rat)> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { x, y } => Some((x, y)),
        }
    }
}

impl fmt::Debug for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// A point of `v^2 = phi(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticPoint {
    pub u: Rat,
    pub v: Rat,
}

impl Curve {
    pub fn new(a: Rat, b: Rat) -> Result<Self> {
        let c = Curve { a, b };
        if c.discriminant().is_zero() {
            return Err(Error::degenerate(Stage::Curve, "4A^3 + 27B^2 = 0"));
        }
        Ok(c)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Curve::new(Rat::from_int(a), Rat::from_int(b))
    }

    /// `4A^3 + 27B^2`.
    pub fn discriminant(&self) -> Rat {
        &(&Rat::from_int(4) * &(&self.a.square() * &self.a))
            + &(&Rat::from_int(27) * &self.b.square())
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    fn rhs(&self, x: &Rat) -> Rat {
        &(&(&x.square() * x) + &(&self.a * x)) + &self.b
    }

    fn require(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::invalid(format!("point {p:?} is not on the curve")))
        }
    }
}

pub fn ec_neg(p: &ECPoint) -> ECPoint {
    match p {
        ECPoint::Infinity => ECPoint::Infinity,
        ECPoint::Affine { x, y } => ECPoint::affine(x.clone(), -y),
    }
}

fn add_unchecked(c: &Curve, p: &ECPoint, q: &ECPoint) -> ECPoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (ECPoint::Infinity, _) => return q.clone(),
        (_, ECPoint::Infinity) => return p.clone(),
        (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
    };
    let slope = if x1 == x2 {
        if y1 != y2 || y1.is_zero() {
            return ECPoint::Infinity;
        }
        &(&(&Rat::from_int(3) * &x1.square()) + &c.a) / &(y1 + y1)
    } else {
        &(y2 - y1) / &(x2 - x1)
    };
    let x3 = &(&slope.square() - x1) - x2;
    let y3 = &(&slope * &(x1 - &x3)) - y1;
    ECPoint::affine(x3, y3)
}

/// Chord-and-tangent addition; both points must lie on `c`.
pub fn ec_add(c: &Curve, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
    c.require(p)?;
    c.require(q)?;
    Ok(add_unchecked(c, p, q))
}

/// `n p` by double-and-add; negative `n` multiplies `-p`.
pub fn ec_mul(c: &Curve, p: &ECPoint, n: &Int) -> Result<ECPoint> {
    c.require(p)?;
    let base = if n.is_negative() {
        ec_neg(p)
    } else {
        p.clone()
    };
    let k = n.abs();
    let mut acc = ECPoint::Infinity;
    for i in (0..k.bits()).rev() {
        acc = add_unchecked(c, &acc, &acc);
        if k.bit(i) {
            acc = add_unchecked(c, &acc, &base);
        }
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderScreen {
    CertainlyInfinite,
    Undetermined,
}

/// Torsion points of a curve with integral coefficients have integral
/// coordinates, and a rational torsion point has order at most 12. So a
/// non-integral multiple among `P..12P`, or no return to the identity, proves
/// infinite order.
pub fn nagell_lutz_screen(c: &Curve, p: &ECPoint) -> OrderScreen {
    if !c.contains(p) || p.is_infinity() {
        return OrderScreen::Undetermined;
    }
    // (x, y) -> (mu^2 x, mu^3 y) makes A, B integral
    let mu = Rat::from_int(c.a.denom().lcm(c.b.denom()));
    let mu2 = mu.square();
    let mu3 = &mu2 * &mu;
    let ci = Curve {
        a: &c.a * &mu2.square(),
        b: &c.b * &(&mu3 * &mu3),
    };
    let scaled = match p {
        ECPoint::Affine { x, y } => ECPoint::affine(x * &mu2, y * &mu3),
        ECPoint::Infinity => unreachable!(),
    };
    let mut q = scaled.clone();
    for _ in 1..=12 {
        match &q {
            ECPoint::Infinity => return OrderScreen::Undetermined,
            ECPoint::Affine { x, y } => {
                if !x.is_integer() || !y.is_integer() {
                    return OrderScreen::CertainlyInfinite;
                }
            }
        }
        q = add_unchecked(&ci, &q, &scaled);
    }
    OrderScreen::CertainlyInfinite
}

fn check_m(m: &Rat) -> Result<()> {
    if matches!(m.to_i64(), Some(-1..=1)) {
        return Err(Error::degenerate(
            Stage::Parameters,
            format!("m = {m} is excluded"),
        ));
    }
    Ok(())
}

pub fn curve_at(m: &Rat) -> Result<Curve> {
    check_m(m)?;
    Curve::new(constants::curve_a().eval(m), constants::curve_b().eval(m))
}

/// The point corresponding to the tangent-method abscissa.
///
/// The `V` coordinate is the negative of the general reference numerator over
/// `d(m)^3`: that is the sign whose image under the map to the quartic is the
/// tangent abscissa, and it agrees with the reference `m = 2` point.
pub fn p_prime(m: &Rat) -> Result<ECPoint> {
    let c = curve_at(m)?;
    if constants::d().eval(m).is_zero() {
        return Err(Error::degenerate(Stage::Point, format!("d({m}) = 0")));
    }
    let x = constants::u0().eval(m)?;
    let y = -constants::v0_reference().eval(m)?;
    let p = ECPoint::affine(x, y);
    if !c.contains(&p) {
        return Err(Error::alarm(format!("P' at m = {m} is off the curve")));
    }
    Ok(p)
}

pub fn weierstrass_to_quartic(m: &Rat, p: &ECPoint) -> Result<QuarticPoint> {
    let c = curve_at(m)?;
    c.require(p)?;
    let (x, y) = p
        .coords()
        .ok_or_else(|| Error::MapUndefined("point at infinity".into()))?;
    let k = constants::to_quartic_map();
    let e = |p: &crate::poly::Poly| p.eval(m);
    let psi = &(&(&e(&k.psi_u) * x) + &(&e(&k.psi_v) * y)) + &e(&k.psi_c);
    if psi.is_zero() {
        return Err(Error::MapUndefined(format!("psi vanishes at {p:?}")));
    }
    let u = &(&e(&k.u_pre) * &(&(&e(&k.u_u) * x) + &e(&k.u_c))) / &psi;
    let x2 = x.square();
    let poly_part = [
        &e(&k.v_u3) * &(&x2 * x),
        &e(&k.v_u2) * &x2,
        &e(&k.v_v2) * &y.square(),
        &e(&k.v_v) * y,
        e(&k.v_c),
    ]
    .into_iter()
    .fold(Rat::zero(), |a, t| &a + &t);
    let v = &(&e(&k.v_pre) * &poly_part) / &psi.square();
    let q = phi_quartic(m)?;
    if v.square() != q.eval(&u) {
        return Err(Error::alarm(format!(
            "image ({u}, {v}) is off v^2 = phi(u)"
        )));
    }
    Ok(QuarticPoint { u, v })
}

pub fn quartic_to_weierstrass(m: &Rat, q: &QuarticPoint) -> Result<ECPoint> {
    let phi = phi_quartic(m)?;
    if q.v.square() != phi.eval(&q.u) {
        return Err(Error::invalid(format!(
            "({}, {}) is off v^2 = phi(u)",
            q.u, q.v
        )));
    }
    if q.u.is_zero() {
        return Err(Error::MapUndefined("u = 0".into()));
    }
    let k = constants::to_weierstrass_map();
    let e = |p: &crate::poly::Poly| p.eval(m);
    let (u, v) = (&q.u, &q.v);
    let u2 = u.square();
    let u3 = &u2 * u;
    let xn = [
        &e(&k.cu_u2) * &u2,
        &e(&k.cu_u) * u,
        &e(&k.cu_v) * v,
        e(&k.cu_c),
    ]
    .into_iter()
    .fold(Rat::zero(), |a, t| &a + &t);
    let yn = [
        &e(&k.cv_u3) * &u3,
        &e(&k.cv_u2) * &u2,
        &e(&k.cv_uv) * &(u * v),
        &e(&k.cv_u) * u,
        &e(&k.cv_v) * v,
        e(&k.cv_c),
    ]
    .into_iter()
    .fold(Rat::zero(), |a, t| &a + &t);
    let p = ECPoint::affine(&xn / &u2, &(&e(&k.cv_pre) * &yn) / &u3);
    let c = curve_at(m)?;
    if !c.contains(&p) {
        return Err(Error::alarm(format!("image {p:?} is off the curve")));
    }
    Ok(p)
}

/// The textbook reduction of `v^2 = a4 u^4 + ... + q^2` to short Weierstrass
/// form through the rational point `(0, q)`, independent of the reference maps.
#[derive(Clone, Debug)]
pub struct ClassicalModel {
    pub curve: Curve,
    q: Rat,
    c: Rat,
    d: Rat,
    a1: Rat,
    a3: Rat,
    b2: Rat,
}

pub fn classical_model(quartic: &Quartic, q: &Rat) -> Result<ClassicalModel> {
    if q.is_zero() || q.square() != quartic.a[0] {
        return Err(Error::MethodInapplicable(
            "q^2 must equal a nonzero constant term".into(),
        ));
    }
    let [_, d, c, b, a] = &quartic.a;
    let two = Rat::from_int(2);
    let four = Rat::from_int(4);
    let q2 = q.square();
    let a1 = d / q;
    let a2 = c - &(&d.square() / &(&four * &q2));
    let a3 = &(&two * q) * b;
    let a4 = -&(&(&four * &q2) * a);
    let a6 = &a2 * &a4;
    let b2 = &a1.square() + &(&four * &a2);
    let b4 = &(&two * &a4) + &(&a1 * &a3);
    let b6 = &a3.square() + &(&four * &a6);
    let c4 = &b2.square() - &(&Rat::from_int(24) * &b4);
    let c6 = &(&-(&(&b2.square() * &b2)) + &(&(&Rat::from_int(36) * &b2) * &b4))
        - &(&Rat::from_int(216) * &b6);
    let curve = Curve::new(&Rat::from_int(-27) * &c4, &Rat::from_int(-54) * &c6)?;
    Ok(ClassicalModel {
        curve,
        q: q.clone(),
        c: c.clone(),
        d: d.clone(),
        a1,
        a3,
        b2,
    })
}

impl ClassicalModel {
    pub fn image(&self, p: &QuarticPoint) -> Result<ECPoint> {
        let (u, v) = (&p.u, &p.v);
        if u.is_zero() {
            return Err(Error::MapUndefined("u = 0".into()));
        }
        let two = Rat::from_int(2);
        let q = &self.q;
        let q2 = q.square();
        let u2 = u.square();
        let x = &(&(&(&two * q) * &(v + q)) + &(&self.d * u)) / &u2;
        let y = &(&(&(&(&Rat::from_int(4) * &q2) * &(v + q))
            + &(&(&two * q) * &(&(&self.d * u) + &(&self.c * &u2))))
            - &(&(&self.d.square() * &u2) / &(&two * q)))
            / &(&u2 * u);
        let big_x = &(&Rat::from_int(36) * &x) + &(&Rat::from_int(3) * &self.b2);
        let big_y = &Rat::from_int(108) * &(&(&(&two * &y) + &(&self.a1 * &x)) + &self.a3);
        let pt = ECPoint::affine(big_x, big_y);
        if !self.curve.contains(&pt) {
            return Err(Error::alarm("classical image is off its curve"));
        }
        Ok(pt)
    }
}

/// `l` with `to = (l^4 A, l^6 B)` of `from`, if such a rational `l` exists.
pub fn isomorphism_scale(from: &Curve, to: &Curve) -> Option<Rat> {
    let l2 = if !from.a.is_zero() && !from.b.is_zero() {
        if to.a.is_zero() || to.b.is_zero() {
            return None;
        }
        &(&to.b / &from.b) / &(&to.a / &from.a)
    } else {
        return None;
    };
    if &l2.square() * &from.a != to.a || &(&l2.square() * &l2) * &from.b != to.b {
        return None;
    }
    is_square_rat(&l2)
}

pub fn scale_point(p: &ECPoint, l: &Rat) -> ECPoint {
    match p {
        ECPoint::Infinity => ECPoint::Infinity,
        ECPoint::Affine { x, y } => {
            let l2 = l.square();
            ECPoint::affine(x * &l2, &(y * &l2) * l)
        }
    }
}

/// Checks that the reference map to the quartic and the classical reduction
/// agree on `points`, up to one curve isomorphism `l` (sign included).
/// Returns the `l` that matched.
pub fn classical_cross_check(m: &Rat, points: &[ECPoint]) -> Result<Rat> {
    let curve = curve_at(m)?;
    let phi = phi_quartic(m)?;
    let one = Rat::one();
    let q = &(m * &(m + &one)) * &(m - &one).square();
    let model = classical_model(&phi, &q)?;
    let l = isomorphism_scale(&curve, &model.curve)
        .ok_or_else(|| Error::alarm("reference and classical curves are not isomorphic"))?;
    let mut images = Vec::new();
    for p in points {
        let qp = weierstrass_to_quartic(m, p)?;
        images.push((p, model.image(&qp)?));
    }
    for cand in [l.clone(), -&l] {
        if images.iter().all(|(p, img)| &scale_point(p, &cand) == img) {
            return Ok(cand);
        }
    }
    Err(Error::alarm(
        "point correspondences differ between the two models",
    ))
}

/// One solution obtained from the multiple `n P'`.
#[derive(Clone, Debug)]
pub struct Generated {
    pub n: u32,
    pub point: ECPoint,
    pub quartic: QuarticPoint,
    pub trace: PipelineTrace,
}

#[derive(Clone, Debug)]
pub struct GenerationReport {
    pub curve: Curve,
    pub p_prime: ECPoint,
    pub solutions: Vec<Generated>,
    /// Multiples that produced nothing new, with the reason.
    pub skipped: Vec<(u32, Error)>,
}

/// Walks `P', 2P', 3P', ...` (up to `max_n`) and runs the construction at each
/// image on the quartic until `count` pairwise inequivalent nontrivial
/// solutions are collected.
pub fn generate_solutions(m: &Rat, count: usize, max_n: u32) -> Result<GenerationReport> {
    if count == 0 {
        return Err(Error::invalid("count must be positive"));
    }
    let curve = curve_at(m)?;
    let p = p_prime(m)?;
    let mut report = GenerationReport {
        curve: curve.clone(),
        p_prime: p.clone(),
        solutions: Vec::new(),
        skipped: Vec::new(),
    };
    let mut q = ECPoint::Infinity;
    for n in 1..=max_n {
        q = add_unchecked(&curve, &q, &p);
        let qp = match weierstrass_to_quartic(m, &q) {
            Ok(qp) => qp,
            Err(e) => {
                report.skipped.push((n, e));
                continue;
            }
        };
        let trace = match pipeline(m, &qp.u, &Rat::one(), Some(&qp.v)) {
            Ok(t) => t,
            Err(e) => {
                report.skipped.push((n, e));
                continue;
            }
        };
        if trace.trivial {
            report
                .skipped
                .push((n, Error::degenerate(Stage::Verify, "trivial solution")));
            continue;
        }
        if report
            .solutions
            .iter()
            .any(|g| equivalent(&g.trace.solution, &trace.solution))
        {
            report.skipped.push((
                n,
                Error::degenerate(Stage::Verify, "equivalent to an earlier solution"),
            ));
            continue;
        }
        report.solutions.push(Generated {
            n,
            point: q.clone(),
            quartic: qp,
            trace,
        });
        if report.solutions.len() == count {
            break;
        }
    }
    Ok(report)
}
