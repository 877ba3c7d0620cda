//! Every reference coefficient the construction relies on, entered once.
//!
//! Tables are `(coefficient, exponent of m)` in the order of the reference formulas, so a
//! reader can compare them line by line against the source formulas. Factored
//! expressions are rebuilt from their factors by the functions below.

use crate::error::{Error, Result, Stage};
use crate::exact::Rat;
use crate::poly::{Poly, RatFunc, Var};

pub type Terms = &'static [(i64, u32)];

pub const F1: Terms = &[
    (5, 14),
    (7, 13),
    (71, 12),
    (30, 11),
    (345, 10),
    (17, 9),
    (907, 8),
    (-60, 7),
    (1311, 6),
    (-71, 5),
    (1109, 4),
    (62, 3),
    (323, 2),
    (15, 1),
    (25, 0),
];

pub const F2: Terms = &[
    (1, 10),
    (7, 9),
    (29, 8),
    (44, 7),
    (122, 6),
    (98, 5),
    (202, 4),
    (92, 3),
    (133, 2),
    (15, 1),
    (25, 0),
];

pub const F3: Terms = &[
    (5, 14),
    (21, 13),
    (29, 12),
    (202, 11),
    (109, 10),
    (755, 9),
    (173, 8),
    (1388, 7),
    (23, 6),
    (1259, 5),
    (-177, 4),
    (426, 3),
    (-137, 2),
    (45, 1),
    (-25, 0),
];

pub const F4: Terms = &[
    (1, 11),
    (6, 10),
    (8, 9),
    (57, 8),
    (46, 7),
    (184, 6),
    (92, 5),
    (294, 4),
    (89, 3),
    (202, 2),
    (20, 1),
    (25, 0),
];

pub const F5: Terms = &[(5, 8), (-12, 6), (-90, 4), (-124, 2), (-35, 0)];
pub const F6: Terms = &[(5, 8), (44, 6), (94, 4), (108, 2), (5, 0)];
pub const F7: Terms = &[(-1, 2), (-1, 0)];
pub const F8: Terms = &[(1, 6), (4, 4), (9, 2), (2, 0)];

/// `7m^6 + 23m^4 + 29m^2 + 5`, shared by the u-value numerator, d(m) and the v-map.
pub const SEXTIC_7: Terms = &[(7, 6), (23, 4), (29, 2), (5, 0)];

pub const VALU_DEN: Terms = &[
    (2, 14),
    (-41, 12),
    (-328, 10),
    (-967, 8),
    (-1382, 6),
    (-1047, 4),
    (-308, 2),
    (-25, 0),
];

pub const PHI_A4: Terms = &[(1, 6), (-26, 4), (-31, 2), (-8, 0)];
pub const PHI_A3: Terms = &[(1, 4), (-6, 2), (-3, 0)];
pub const PHI_A2: Terms = &[(3, 6), (28, 4), (31, 2), (2, 0)];
pub const PHI_A1: Terms = &[(1, 4), (6, 2), (1, 0)];

pub const CURVE_A: Terms = &[(325, 10), (955, 8), (1266, 6), (470, 4), (57, 2), (-1, 0)];
pub const CURVE_B_QUARTIC: Terms = &[(5, 4), (2, 2), (1, 0)];
pub const CURVE_B_DECIC: Terms = &[(875, 10), (2885, 8), (3822, 6), (1450, 4), (183, 2), (1, 0)];

pub const U0_NUM: Terms = &[
    (75, 28),
    (1010, 26),
    (11944, 24),
    (103096, 22),
    (585657, 20),
    (2202226, 18),
    (5635746, 16),
    (10027936, 14),
    (12482909, 12),
    (10709526, 10),
    (6063588, 8),
    (2067944, 6),
    (398591, 4),
    (39750, 2),
    (1650, 0),
];

pub const V0_NUM: Terms = &[
    (125, 42),
    (2525, 40),
    (12350, 38),
    (-138015, 36),
    (-2822345, 34),
    (-24701264, 32),
    (-140086792, 30),
    (-573149148, 28),
    (-1776227438, 26),
    (-4275792154, 24),
    (-8087224924, 22),
    (-12040781858, 20),
    (-14031203010, 18),
    (-12641030116, 16),
    (-8645319848, 14),
    (-4384538092, 12),
    (-1605427583, 10),
    (-411694779, 8),
    (-71091250, 6),
    (-7771895, 4),
    (-478725, 2),
    (-12500, 0),
];

pub const PSI_OCTIC: Terms = &[(35, 8), (86, 6), (108, 4), (26, 2), (1, 0)];
pub const UMAP_DECIC: Terms = &[
    (420, 10),
    (4812, 8),
    (12648, 6),
    (14232, 4),
    (4404, 2),
    (348, 0),
];
pub const VMAP_U2_DECIC: Terms = &[(35, 10), (401, 8), (1054, 6), (1186, 4), (367, 2), (29, 0)];
pub const VMAP_V_QUARTIC: Terms = &[(5, 4), (10, 2), (1, 0)];
pub const VMAP_CONST: Terms = &[
    (42875, 20),
    (497350, 18),
    (2290155, 16),
    (5717736, 14),
    (8360982, 12),
    (7151748, 10),
    (3327950, 8),
    (821800, 6),
    (97551, 4),
    (3494, 2),
    (-89, 0),
];

pub fn poly(terms: Terms) -> Poly {
    Poly::from_terms(Var::M, terms)
}

/// `m + k`.
pub fn lin(k: i64) -> Poly {
    Poly::from_ints(Var::M, &[k, 1])
}

pub fn int(c: i64) -> Poly {
    Poly::from_ints(Var::M, &[c])
}

pub fn m() -> Poly {
    Poly::x(Var::M)
}

/// `m^2 + k`.
pub fn sq_plus(k: i64) -> Poly {
    Poly::from_ints(Var::M, &[k, 0, 1])
}

pub fn product(factors: &[Poly]) -> Poly {
    factors.iter().fold(int(1), |acc, f| &acc * f)
}

/// `f_i(m)` for `i` in `1..=8`.
pub fn f(i: usize) -> Poly {
    let t = match i {
        1 => F1,
        2 => F2,
        3 => F3,
        4 => F4,
        5 => F5,
        6 => F6,
        7 => F7,
        8 => F8,
        _ => panic!("f_{i} is not defined"),
    };
    poly(t)
}

/// The tangent-method abscissa `u(m)`.
pub fn valu() -> RatFunc {
    let num = product(&[
        m(),
        lin(1).pow(2),
        lin(-1).pow(3),
        sq_plus(3),
        poly(SEXTIC_7),
    ]);
    RatFunc::new(num, poly(VALU_DEN)).expect("nonzero denominator")
}

/// Coefficients `a0..a4` of `phi(u)` as polynomials in m.
pub fn phi_coeffs() -> [Poly; 5] {
    let a0 = product(&[m().pow(2), lin(1).pow(2), lin(-1).pow(4)]);
    let a1 = product(&[int(-4), m(), lin(-1), sq_plus(3), poly(PHI_A1)]);
    let a2 = product(&[int(2), lin(-1), lin(1), poly(PHI_A2)]);
    let a3 = product(&[int(-4), m(), lin(1), sq_plus(3), poly(PHI_A3)]);
    let a4 = product(&[poly(PHI_A4), lin(1).pow(2)]);
    [a0, a1, a2, a3, a4]
}

pub fn curve_a() -> Poly {
    product(&[int(-432), lin(-1), lin(1), poly(CURVE_A)])
}

pub fn curve_b() -> Poly {
    product(&[
        int(-3456),
        poly(CURVE_B_QUARTIC),
        poly(CURVE_B_DECIC),
        lin(-1).pow(2),
        lin(1).pow(2),
    ])
}

/// `d(m) = (m^2+3)(m-1)(m+1)(7m^6+23m^4+29m^2+5)`.
pub fn d() -> Poly {
    product(&[sq_plus(3), lin(-1), lin(1), poly(SEXTIC_7)])
}

pub fn u0() -> RatFunc {
    let num = &int(12) * &poly(U0_NUM);
    RatFunc::new(num, d().pow(2)).expect("nonzero denominator")
}

/// `V0` exactly as in the reference formula. See [`crate::ecurve::p_prime`] for the sign used.
pub fn v0_reference() -> RatFunc {
    let num = &int(216) * &poly(V0_NUM);
    RatFunc::new(num, d().pow(3)).expect("nonzero denominator")
}

/// Coefficients of the Weierstrass-to-quartic map, as polynomials in m.
///
/// `psi = psi_u U + psi_v V + psi_c`,
/// `u = u_pre (u_u U + u_c) / psi`,
/// `v = v_pre (v_u3 U^3 + v_u2 U^2 + v_v2 V^2 + v_v V + v_c) / psi^2`.
pub struct ToQuarticMap {
    pub psi_u: Poly,
    pub psi_v: Poly,
    pub psi_c: Poly,
    pub u_pre: Poly,
    pub u_u: Poly,
    pub u_c: Poly,
    pub v_pre: Poly,
    pub v_u3: Poly,
    pub v_u2: Poly,
    pub v_v2: Poly,
    pub v_v: Poly,
    pub v_c: Poly,
}

pub fn to_quartic_map() -> ToQuarticMap {
    let m2m1 = sq_plus(-1);
    ToQuarticMap {
        psi_u: product(&[int(6), sq_plus(3), poly(PHI_A1)]),
        psi_v: m2m1.clone(),
        psi_c: product(&[int(-72), m2m1.clone(), sq_plus(3), poly(PSI_OCTIC)]),
        u_pre: product(&[int(6), m(), lin(-1)]),
        u_u: product(&[lin(1).pow(2), lin(-1).pow(2)]),
        u_c: -poly(UMAP_DECIC),
        v_pre: product(&[m(), lin(-1)]),
        v_u3: product(&[int(2), lin(1).pow(3), lin(-1).pow(3)]),
        v_u2: product(&[int(-36), lin(-1), lin(1), poly(VMAP_U2_DECIC)]),
        v_v2: -m2m1.pow(3),
        v_v: product(&[
            int(-864),
            Poly::from_ints(Var::M, &[1, 0, 3]),
            sq_plus(3),
            poly(VMAP_V_QUARTIC),
            poly(SEXTIC_7),
        ]),
        v_c: product(&[int(1728), m2m1.pow(2), poly(VMAP_CONST)]),
    }
}

/// Coefficients of the quartic-to-Weierstrass map, as polynomials in m.
///
/// `U = (cu_u2 u^2 + cu_u u + cu_v v + cu_c) / u^2`,
/// `V = cv_pre (cv_u3 u^3 + cv_u2 u^2 + cv_uv u v + cv_u u + cv_v v + cv_c) / u^3`.
pub struct ToWeierstrassMap {
    pub cu_u2: Poly,
    pub cu_u: Poly,
    pub cu_v: Poly,
    pub cu_c: Poly,
    pub cv_pre: Poly,
    pub cv_u3: Poly,
    pub cv_u2: Poly,
    pub cv_uv: Poly,
    pub cv_u: Poly,
    pub cv_v: Poly,
    pub cv_c: Poly,
}

pub fn to_weierstrass_map() -> ToWeierstrassMap {
    ToWeierstrassMap {
        cu_u2: product(&[int(6), lin(-1), lin(1), poly(PHI_A2)]),
        cu_u: product(&[int(-36), m(), lin(-1), sq_plus(3), poly(PHI_A1)]),
        cu_v: product(&[int(18), m(), lin(1), lin(-1).pow(2)]),
        cu_c: product(&[int(18), m().pow(2), lin(1).pow(2), lin(-1).pow(4)]),
        cv_pre: product(&[int(-108), m()]),
        cv_u3: product(&[m(), sq_plus(3), poly(PHI_A3), lin(-1).pow(2), lin(1).pow(2)]),
        cv_u2: -product(&[poly(PHI_A2), lin(1).pow(2), lin(-1).pow(3)]),
        cv_uv: product(&[lin(-1), sq_plus(3), poly(PHI_A1)]),
        cv_u: product(&[
            int(3),
            m(),
            lin(1),
            sq_plus(3),
            poly(PHI_A1),
            lin(-1).pow(3),
        ]),
        cv_v: -product(&[m(), lin(1).pow(2), lin(-1).pow(4)]),
        cv_c: -product(&[m().pow(2), lin(1).pow(3), lin(-1).pow(6)]),
    }
}

fn nonzero(x: Rat, stage: Stage, what: &str) -> Result<Rat> {
    if x.is_zero() {
        Err(Error::degenerate(stage, alloc::format!("{what} vanishes")))
    } else {
        Ok(x)
    }
}

/// `h(m, u, S1)`.
pub fn valh(m: &Rat, u: &Rat, s1_big: &Rat) -> Result<Rat> {
    let one = Rat::one();
    let m2 = m.square();
    let d1 = &(&(m + &one) * &u.square()) - m + &one;
    let d1 = nonzero(d1, Stage::H, "(m+1)u^2 - m + 1")?;
    let den = &(&(&m2 * &Rat::from_int(3)) + &one) * &d1;
    let inner = &(&(&(m + &one) * &(&m2 + &one)) * u) - &(m * &(&m2 + &Rat::from_int(3)));
    let num = &(&(&Rat::from_int(-2) * &s1_big.square()) * u) * &inner;
    Ok(&num / &den)
}

/// `s1(m, h, S1)`.
pub fn vals1(m: &Rat, h: &Rat, s1_big: &Rat) -> Result<Rat> {
    let m2 = m.square();
    let k = &(&m2 * &Rat::from_int(3)) + &Rat::one();
    let num = &(&k * h) - &(&(&m2 - &Rat::one()) * &s1_big.square());
    let den = nonzero(&k * s1_big, Stage::S1, "(3m^2+1)S1")?;
    Ok(&num / &den)
}

/// `t1(h, S1)`.
pub fn valt1(h: &Rat, s1_big: &Rat) -> Result<Rat> {
    let den = nonzero(s1_big.clone(), Stage::S1, "S1")?;
    Ok(&(&s1_big.square() - h) / &den)
}

/// `(s2, t2)` solving the resolvent with `s2 = t2 + h`.
pub fn vals2t2(s1: &Rat, t1: &Rat, s1_big: &Rat, h: &Rat) -> Result<(Rat, Rat)> {
    let three = Rat::from_int(3);
    let sum = s1 + t1;
    let diff = t1 - s1_big;
    let den = &(h + h) + &(&(&three * &sum) * &diff);
    let den = nonzero(den, Stage::S2T2, "2h + 3(s1+t1)(t1-S1)")?;
    let cubic =
        &(&(&(&s1.square() + &(&diff * s1)) + &t1.square()) - &(t1 * s1_big)) + &s1_big.square();
    let tail = &(&sum * &diff) * &cubic;
    let hs = &(&(&(&s1.square() + &(&(&(&three * t1) - &(s1_big + s1_big)) * s1))
        + &(&three * &t1.square()))
        - &(&(&three * t1) * s1_big))
        + &s1_big.square();
    let s2 = &(&(&h.square() + &(&hs * h)) + &tail) / &den;
    let ht = &(&s1.square() + &(s1 * s1_big)) + &s1_big.square();
    let t2 = &(&(&(-&h.square()) + &(&ht * h)) + &tail) / &den;
    Ok((s2, t2))
}

/// Closed form of `s1^2 - 4 s2`; `None` at a pole.
pub fn conds12(s1: &Rat, s1_big: &Rat, h: &Rat) -> Option<Rat> {
    let (a, den) = disc_common(s1, s1_big, h)?;
    let b = &(s1_big * s1) - &(h + h);
    Some(&(&a * &b.square()) / &den)
}

/// Closed form of `t1^2 - 4 t2`; `None` at a pole.
pub fn condt12(s1: &Rat, s1_big: &Rat, h: &Rat) -> Option<Rat> {
    let (a, den) = disc_common(s1, s1_big, h)?;
    let b = &(&s1_big.square() + &(&(s1_big * s1) * &Rat::from_int(2))) - h;
    Some(&(&a * &b.square()) / &den)
}

fn disc_common(s1: &Rat, s1_big: &Rat, h: &Rat) -> Option<(Rat, Rat)> {
    let p = s1_big * s1;
    let a = &(&s1_big.square() - &p) + h;
    let three = Rat::from_int(3);
    let den = &s1_big.square() * &(&(&s1_big.square() + &(&three * &p)) - &(&three * h));
    if den.is_zero() {
        None
    } else {
        Some((a, den))
    }
}

/// Closed form of `S1^2 - 4 S2`; `None` at a pole.
pub fn conds_big12(m: &Rat, s1_big: &Rat, h: &Rat) -> Option<Rat> {
    let one = Rat::one();
    let m2 = m.square();
    let k = &(&m2 * &Rat::from_int(3)) + &one;
    let s2 = s1_big.square();
    let c2 = &(&m2 - &one) * &k.square();
    let c1 = &(&(&s2 * &Rat::from_int(2)) * &(&m2.square() - &one)) * &k;
    let c0 = &(&s2.square() * &m2) * &(&m2 + &Rat::from_int(3)).square();
    let num = &(&(&c2 * &h.square()) + &(&c1 * h)) + &c0;
    let den = (&k * s1_big).square();
    if den.is_zero() {
        None
    } else {
        Some(&num / &den)
    }
}

/// Closed form of `T1^2 - 4 T2` given `phi(u)`; `None` at a pole.
pub fn condt_big12(m: &Rat, u: &Rat, s1_big: &Rat, phi_u: &Rat) -> Option<Rat> {
    let one = Rat::one();
    let k = &(&m.square() * &Rat::from_int(3)) + &one;
    let d1 = &(&(m + &one) * &u.square()) - &(m - &one);
    let den = (&k * &d1).square();
    if den.is_zero() {
        None
    } else {
        Some(&(&s1_big.square() * phi_u) / &den)
    }
}
