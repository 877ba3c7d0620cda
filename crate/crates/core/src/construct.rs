//! From parameters `(m, u)` to an explicit solution: the auxiliary condition,
//! the choices of `h`, `s1`, `t1`, the four square discriminants, and Fermat's
//! method for making `phi(u)` a square.

use alloc::format;
use alloc::vec::Vec;

use crate::constants;
use crate::error::{Error, Result, Stage};
use crate::exact::{is_square_rat, Rat};
use crate::reduction::{
    from_system, is_trivial, verify_eq1xy, verify_eq5, SolutionE5, SystemSolution,
};

/// `phi(u) = a0 + a1 u + a2 u^2 + a3 u^3 + a4 u^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quartic {
    pub a: [Rat; 5],
}

impl Quartic {
    pub fn new(a: [Rat; 5]) -> Self {
        Quartic { a }
    }

    pub fn from_ints(a: [i64; 5]) -> Self {
        Quartic {
            a: a.map(Rat::from_int),
        }
    }

    pub fn eval(&self, u: &Rat) -> Rat {
        self.a
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| &(&acc * u) + c)
    }
}

fn check_m(m: &Rat) -> Result<()> {
    if matches!(m.to_i64(), Some(-1..=1)) {
        return Err(Error::degenerate(
            Stage::Parameters,
            format!("m = {m} makes a factor m, m-1 or m+1 vanish"),
        ));
    }
    Ok(())
}

pub fn phi_quartic(m: &Rat) -> Result<Quartic> {
    check_m(m)?;
    Ok(Quartic {
        a: constants::phi_coeffs().map(|p| p.eval(m)),
    })
}

/// A point of `v^2 = phi(u)` found by the tangent method, with the constant
/// `c0` (a square root of `a0`) whose branch produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FermatPoint {
    pub u: Rat,
    pub v: Rat,
    pub c0: Rat,
}

/// Matches `phi` against `(c0 + c1 u + c2 u^2)^2` through `u^2`; the cubic and
/// quartic remainder then vanish at one more `u`. Both signs of `c0` are tried,
/// and each candidate is checked before it is returned.
pub fn fermat_points(q: &Quartic) -> Result<Vec<FermatPoint>> {
    let [a0, a1, a2, a3, a4] = &q.a;
    let root = is_square_rat(a0)
        .ok_or_else(|| Error::MethodInapplicable("constant term is not a square".into()))?;
    if root.is_zero() {
        return Err(Error::MethodInapplicable("constant term is zero".into()));
    }
    let two = Rat::from_int(2);
    let mut out = Vec::new();
    for c0 in [root.clone(), -&root] {
        let c1 = a1 / &(&two * &c0);
        let c2 = &(a2 - &c1.square()) / &(&two * &c0);
        let den = a4 - &c2.square();
        if den.is_zero() {
            continue;
        }
        let u = -&(&(a3 - &(&(&two * &c1) * &c2)) / &den);
        if u.is_zero() {
            continue;
        }
        let v = &(&c0 + &(&c1 * &u)) + &(&c2 * &u.square());
        if v.square() != q.eval(&u) {
            continue;
        }
        out.push(FermatPoint { u, v, c0 });
    }
    Ok(out)
}

/// Distinct abscissae from [`fermat_points`].
pub fn fermat_square_point(q: &Quartic) -> Result<Vec<Rat>> {
    let mut us: Vec<Rat> = Vec::new();
    for p in fermat_points(q)? {
        if !us.contains(&p.u) {
            us.push(p.u);
        }
    }
    Ok(us)
}

/// The two roots of `z^2 - sum z + prod`, larger first.
pub fn quad_roots(sum: &Rat, prod: &Rat) -> Result<(Rat, Rat)> {
    let disc = &sum.square() - &(&Rat::from_int(4) * prod);
    let r = is_square_rat(&disc).ok_or(Error::NotRational)?;
    let two = Rat::from_int(2);
    Ok((&(sum + &r) / &two, &(sum - &r) / &two))
}

/// Closed forms of `s1^2-4s2`, `t1^2-4t2`, `S1^2-4S2`, `T1^2-4T2`.
pub fn discriminant_forms(m: &Rat, u: &Rat, s1_big: &Rat) -> Result<[Rat; 4]> {
    let st = stages(m, u, s1_big)?;
    closed_forms(m, u, &st)
}

#[allow(non_snake_case)]
struct Stages {
    S1: Rat,
    h: Rat,
    s1: Rat,
    t1: Rat,
    T1: Rat,
    phi: Rat,
}

#[allow(non_snake_case)]
fn stages(m: &Rat, u: &Rat, S1: &Rat) -> Result<Stages> {
    check_m(m)?;
    if S1.is_zero() {
        return Err(Error::invalid("S1 must be nonzero"));
    }
    let h = constants::valh(m, u, S1)?;
    let s1 = constants::vals1(m, &h, S1)?;
    let t1 = constants::valt1(&h, S1)?;
    let T1 = &(&s1 + &t1) - S1;
    let phi = phi_quartic(m)?.eval(u);
    Ok(Stages {
        S1: S1.clone(),
        h,
        s1,
        t1,
        T1,
        phi,
    })
}

fn closed_forms(m: &Rat, u: &Rat, st: &Stages) -> Result<[Rat; 4]> {
    let pole = |stage| Error::degenerate(stage, "closed form has a pole");
    Ok([
        constants::conds12(&st.s1, &st.S1, &st.h).ok_or_else(|| pole(Stage::DiscS))?,
        constants::condt12(&st.s1, &st.S1, &st.h).ok_or_else(|| pole(Stage::DiscT))?,
        constants::conds_big12(m, &st.S1, &st.h).ok_or_else(|| pole(Stage::DiscBigS))?,
        constants::condt_big12(m, u, &st.S1, &st.phi).ok_or_else(|| pole(Stage::DiscBigT))?,
    ])
}

/// Every intermediate value of one run of the construction.
#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineTrace {
    pub m: Rat,
    pub u: Rat,
    /// Square root of `phi(u)` used for the `Y3, Y4` branch.
    pub v: Rat,
    pub S1: Rat,
    pub h: Rat,
    pub s1: Rat,
    pub t1: Rat,
    pub T1: Rat,
    pub s2: Rat,
    pub t2: Rat,
    pub S2: Rat,
    pub T2: Rat,
    /// `s1^2-4s2`, `t1^2-4t2`, `S1^2-4S2`, `T1^2-4T2`.
    pub discriminants: [Rat; 4],
    /// Square roots of the discriminants, on the branches that keep the
    /// labelling of the closed-form families.
    pub roots: [Rat; 4],
    pub system: SystemSolution,
    pub solution: SolutionE5,
    pub trivial: bool,
}

/// Runs the construction at `(m, u, S1)`. `v` chooses the square root of
/// `phi(u)`; without it the nonnegative root is used.
#[allow(non_snake_case)]
pub fn pipeline(m: &Rat, u: &Rat, S1: &Rat, v: Option<&Rat>) -> Result<PipelineTrace> {
    let st = stages(m, u, S1)?;
    let (h, s1, t1, T1) = (&st.h, &st.s1, &st.t1, &st.T1);
    let (s2, t2) = &constants::vals2t2(s1, t1, S1, h)?;
    let (S2, T2) = (s2.clone(), t2.clone());
    let four = Rat::from_int(4);
    let disc = |a: &Rat, b: &Rat| &a.square() - &(&four * b);
    let direct = [disc(s1, s2), disc(t1, t2), disc(S1, &S2), disc(T1, &T2)];

    let closed = closed_forms(m, u, &st)?;
    let names = [Stage::DiscS, Stage::DiscT, Stage::DiscBigS, Stage::DiscBigT];
    for i in 0..4 {
        if closed[i] != direct[i] {
            return Err(Error::alarm(format!(
                "{} closed form {} differs from direct value {}",
                names[i].name(),
                closed[i],
                direct[i]
            )));
        }
    }
    for i in 0..3 {
        if is_square_rat(&direct[i]).is_none() {
            return Err(Error::construction(
                names[i],
                format!("{} is not a square", direct[i]),
            ));
        }
    }
    let v = match v {
        Some(v) => {
            if v.square() != st.phi {
                return Err(Error::invalid(format!("v^2 != phi(u) at u = {u}")));
            }
            v.clone()
        }
        None => is_square_rat(&st.phi).ok_or_else(|| {
            Error::construction(
                Stage::DiscBigT,
                format!("phi({u}) = {} is not a square", st.phi),
            )
        })?,
    };

    let one = Rat::one();
    let k = &(&m.square() * &Rat::from_int(3)) + &one;
    let d1 = &(&(m + &one) * &u.square()) - &(m - &one);
    let kd = &k * &d1;
    let two = Rat::from_int(2);
    let m2p3 = &m.square() + &Rat::from_int(3);
    // W = m(m+1)(m^2+3)u^2 - 2(m^4-1)u + m(m-1)(m^2+3)
    let w2 = &(&(m * &(m + &one)) * &m2p3) * &u.square();
    let w1 = &(&two * &(&m.square().square() - &one)) * u;
    let w0 = &(m * &(m - &one)) * &m2p3;
    let w = &(&w2 - &w1) + &w0;
    let roots = [
        &(m * &(&(S1 * s1) - &(h + h))) / S1,
        &(m * &(&(&S1.square() + &(&two * &(S1 * s1))) - h)) / S1,
        &(S1 * &w) / &kd,
        -&(&(S1 * &v) / &kd),
    ];
    for i in 0..4 {
        if roots[i].square() != direct[i] {
            return Err(Error::alarm(format!(
                "{} root branch does not square back",
                names[i].name()
            )));
        }
    }

    let pair = |sum: &Rat, r: &Rat| [&(sum + r) / &two, &(sum - r) / &two];
    let [X1, X2] = pair(s1, &roots[0]);
    let [X3, X4] = pair(t1, &roots[1]);
    let [Y1, Y2] = pair(S1, &roots[2]);
    let [Y3, Y4] = pair(T1, &roots[3]);
    let system = SystemSolution::new([X1, X2, X3, X4], [Y1, Y2, Y3, Y4]);
    let solution = from_system(&system)?;
    if !verify_eq5(&solution) || !verify_eq1xy(&solution) {
        return Err(Error::construction(
            Stage::Verify,
            format!("result {solution} fails verification"),
        ));
    }
    let trivial = is_trivial(&solution)?;

    Ok(PipelineTrace {
        m: m.clone(),
        u: u.clone(),
        v,
        S1: S1.clone(),
        h: h.clone(),
        s1: s1.clone(),
        t1: t1.clone(),
        T1: T1.clone(),
        s2: s2.clone(),
        t2: t2.clone(),
        S2,
        T2,
        discriminants: direct,
        roots,
        system,
        solution,
        trivial,
    })
}

/// The Fermat point on the `+m(m+1)(m-1)^2` branch, the one that reproduces
/// the closed-form families.
pub fn default_fermat_point(m: &Rat) -> Result<FermatPoint> {
    let q = phi_quartic(m)?;
    let one = Rat::one();
    let c0 = &(m * &(m + &one)) * &(m - &one).square();
    fermat_points(&q)?
        .into_iter()
        .find(|p| p.c0 == c0)
        .ok_or_else(|| {
            Error::construction(Stage::Parameters, format!("no tangent point at m = {m}"))
        })
}

/// [`pipeline`] at the Fermat point for `m`.
pub fn construct_default(m: &Rat, s1_big: &Rat) -> Result<PipelineTrace> {
    let p = default_fermat_point(m)?;
    pipeline(m, &p.u, s1_big, Some(&p.v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::families::{family_eval, FamilyId};
    use crate::reduction::equivalent;

    #[test]
    fn phi_at_two() {
        let q = phi_quartic(&rat(2)).unwrap();
        assert_eq!(q.a[0], rat(36));
        assert_eq!(q.a[4], rat(-4356));
        assert_eq!(q.eval(&rat(1)), rat(-172));
        assert!(phi_quartic(&rat(1)).is_err());
    }

    #[test]
    fn fermat_reproduces_tangent_abscissa() {
        let q = phi_quartic(&rat(2)).unwrap();
        let us = fermat_square_point(&q).unwrap();
        assert!(us.contains(&Rat::frac(-118062, 825049)));
    }

    #[test]
    fn fermat_edge_cases() {
        let q = Quartic::from_ints([1, 0, 2, 0, 1]);
        for u in fermat_square_point(&q).unwrap() {
            assert!(is_square_rat(&q.eval(&u)).is_some());
        }
        let flat = Quartic::from_ints([1, 0, 0, 0, 2]);
        assert!(fermat_square_point(&flat).unwrap().is_empty());
        let zero = Quartic::from_ints([0, 1, 0, 0, 1]);
        assert!(matches!(
            fermat_square_point(&zero),
            Err(Error::MethodInapplicable(_))
        ));
    }

    #[test]
    fn quadratic_roots() {
        assert_eq!(quad_roots(&rat(5), &rat(6)).unwrap(), (rat(3), rat(2)));
        assert_eq!(quad_roots(&rat(0), &rat(-1)).unwrap(), (rat(1), rat(-1)));
        assert_eq!(quad_roots(&rat(0), &rat(1)), Err(Error::NotRational));
    }

    #[test]
    fn pipeline_matches_family_at_three() {
        let t = construct_default(&rat(3), &rat(1)).unwrap();
        let fam = family_eval(FamilyId::ParmSol1E5, &rat(3)).unwrap();
        assert!(equivalent(&t.solution, fam.as_e5().unwrap()));
        assert!(!t.trivial);
    }

    #[test]
    fn non_square_phi_fails_at_last_stage() {
        let e = pipeline(&rat(2), &rat(1), &rat(1), None).unwrap_err();
        assert!(
            matches!(
                e,
                Error::ConstructionFailure {
                    stage: Stage::DiscBigT,
                    ..
                }
            ),
            "{e:?}"
        );
    }
}
