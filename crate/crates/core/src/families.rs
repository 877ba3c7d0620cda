//! The closed-form parametric solutions in `m`, their symbolic verification,
//! and evaluation at rational `m`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::constants::{f, int, lin, product};
use crate::error::{Error, Result, Stage};
use crate::exact::Rat;
use crate::poly::Poly;
use crate::reduction::{
    cond12_residual, cond34_residual, eq1x_residual, eq1xy_residual, eq1xy_sys_residual,
    eq1y_residual, eq5_residual, eq5xy_residual, from_system, is_trivial, normalize_blocks,
    primitive_signed, verify_system, SolutionE5, SystemSolution,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// Solution of the product system, entries `X1..X4; Y1..Y4`.
    ParmSol1,
    ParmSol1E5,
    /// Rescaled so that `x1+x2 = y1+y2` and `x3+x4 = y3+y4`.
    ParmSol2E5,
    /// Rescaled for `x1+x2 = y3+y4`, then the y-pairs renamed.
    ParmSol3E5,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [
        FamilyId::ParmSol1,
        FamilyId::ParmSol1E5,
        FamilyId::ParmSol2E5,
        FamilyId::ParmSol3E5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::ParmSol1 => "parmsol1",
            FamilyId::ParmSol1E5 => "parmsol1eq5",
            FamilyId::ParmSol2E5 => "parmsol2eq5",
            FamilyId::ParmSol3E5 => "parmsol3eq5",
        }
    }

    pub fn is_system(self) -> bool {
        self == FamilyId::ParmSol1
    }

    pub fn identities(self) -> &'static [Identity] {
        match self {
            FamilyId::ParmSol1 => &[
                Identity::Eq5XY,
                Identity::Eq1X,
                Identity::Eq1Y,
                Identity::Eq1XY,
            ],
            FamilyId::ParmSol1E5 => &[Identity::Eq5, Identity::Eq1xy],
            FamilyId::ParmSol2E5 | FamilyId::ParmSol3E5 => {
                &[Identity::Eq5, Identity::Cond12, Identity::Cond34]
            }
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name() == key || (key.len() == 1 && id_digit(*id) == key))
            .ok_or(Error::Parse { token: s.into() })
    }
}

fn id_digit(id: FamilyId) -> &'static str {
    match id {
        FamilyId::ParmSol1 => "0",
        FamilyId::ParmSol1E5 => "1",
        FamilyId::ParmSol2E5 => "2",
        FamilyId::ParmSol3E5 => "3",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `(x1^5+x2^5)(x3^5+x4^5) = (y1^5+y2^5)(y3^5+y4^5)`
    Eq5,
    /// `(x1+x2)(x3+x4) = (y1+y2)(y3+y4)`
    Eq1xy,
    /// `x1+x2 = y1+y2`
    Cond12,
    /// `x3+x4 = y3+y4`
    Cond34,
    /// `sum X^5 = sum Y^5`
    Eq5XY,
    /// `X1 X2 = Y1 Y2`
    Eq1X,
    /// `X3 X4 = Y3 Y4`
    Eq1Y,
    /// `sum X = sum Y`
    Eq1XY,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Eq5 => "eq5",
            Identity::Eq1xy => "eq1xy",
            Identity::Cond12 => "condxy12",
            Identity::Cond34 => "condxy34",
            Identity::Eq5XY => "eq5XY",
            Identity::Eq1X => "eq1X",
            Identity::Eq1Y => "eq1Y",
            Identity::Eq1XY => "eq1XY",
        }
    }

    /// Left minus right side.
    pub fn residual(self, x: &[Poly; 4], y: &[Poly; 4]) -> Poly {
        match self {
            Identity::Eq5 => eq5_residual(x, y),
            Identity::Eq1xy => eq1xy_residual(x, y),
            Identity::Cond12 => cond12_residual(x, y),
            Identity::Cond34 => cond34_residual(x, y),
            Identity::Eq5XY => eq5xy_residual(x, y),
            Identity::Eq1X => eq1x_residual(x, y),
            Identity::Eq1Y => eq1y_residual(x, y),
            Identity::Eq1XY => eq1xy_sys_residual(x, y),
        }
    }
}

/// Eight expanded polynomials in `m`, in the order `x1..x4, y1..y4`
/// (or `X1..X4, Y1..Y4` for the system family).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicOctuple {
    pub id: FamilyId,
    pub x: [Poly; 4],
    pub y: [Poly; 4],
}

pub fn family_symbolic(id: FamilyId) -> SymbolicOctuple {
    let fm: Vec<Poly> = (0..=8)
        .map(|i| if i == 0 { int(0) } else { f(i) })
        .collect();
    let fneg: Vec<Poly> = fm.iter().map(Poly::compose_neg).collect();
    let (mm, mp) = (lin(-1), lin(1));
    let neg = |p: Poly| -p;

    let base_x = |g12: &Poly, g34: &Poly| {
        [
            product(&[mm.clone(), fm[1].clone(), g12.clone()]),
            product(&[mp.clone(), fneg[1].clone(), g12.clone()]),
            product(&[mp.pow(2), fneg[2].clone(), g34.clone()]),
            neg(product(&[mm.pow(2), fm[2].clone(), g34.clone()])),
        ]
    };
    let y12 = |g: &Poly| {
        [
            product(&[mm.clone(), fm[3].clone(), g.clone()]),
            product(&[mp.clone(), fneg[3].clone(), g.clone()]),
        ]
    };
    let y34 = |g: &Poly| {
        [
            neg(product(&[mm.clone(), fm[4].clone(), g.clone()])),
            neg(product(&[mp.clone(), fneg[4].clone(), g.clone()])),
        ]
    };

    let (x, y) = match id {
        FamilyId::ParmSol1E5 => {
            let one = int(1);
            let [a, b] = y12(&one);
            let [c, d] = y34(&one);
            (base_x(&one, &one), [a, b, c, d])
        }
        FamilyId::ParmSol2E5 => {
            let [a, b] = y12(&fm[6]);
            let [c, d] = y34(&fm[5]);
            (base_x(&fm[5], &fm[6]), [a, b, c, d])
        }
        FamilyId::ParmSol3E5 => {
            let [a, b] = y34(&fm[8]);
            let [c, d] = y12(&fm[7]);
            (base_x(&fm[7], &fm[8]), [a, b, c, d])
        }
        FamilyId::ParmSol1 => {
            let x = [
                product(&[mm.clone(), mp.pow(2), fm[1].clone(), fneg[2].clone()]),
                neg(product(&[
                    mp.clone(),
                    mm.pow(2),
                    fneg[1].clone(),
                    fm[2].clone(),
                ])),
                product(&[mm.pow(2), fm[3].clone(), fm[4].clone()]),
                product(&[mp.pow(2), fneg[3].clone(), fneg[4].clone()]),
            ];
            let y = [
                product(&[mm.pow(3), fm[1].clone(), fm[2].clone()]),
                neg(product(&[mp.pow(3), fneg[1].clone(), fneg[2].clone()])),
                neg(product(&[
                    mm.clone(),
                    mp.clone(),
                    fm[3].clone(),
                    fneg[4].clone(),
                ])),
                neg(product(&[
                    mm.clone(),
                    mp.clone(),
                    fneg[3].clone(),
                    fm[4].clone(),
                ])),
            ];
            (x, y)
        }
    };
    SymbolicOctuple { id, x, y }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub holds: bool,
    /// Degree of the nonzero residual, for diagnostics.
    pub residual_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub id: FamilyId,
    pub checks: Vec<IdentityCheck>,
}

impl FamilyReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Checks the identities claimed for `oct.id` against the given entries,
/// which need not be the stock ones.
pub fn verify_symbolic(oct: &SymbolicOctuple) -> FamilyReport {
    let checks = oct
        .id
        .identities()
        .iter()
        .map(|&identity| {
            let r = identity.residual(&oct.x, &oct.y);
            IdentityCheck {
                identity,
                holds: r.is_zero(),
                residual_degree: r.degree(),
            }
        })
        .collect();
    FamilyReport { id: oct.id, checks }
}

pub fn verify_family_symbolic(id: FamilyId) -> FamilyReport {
    verify_symbolic(&family_symbolic(id))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyValue {
    E5(SolutionE5),
    System(SystemSolution),
}

impl FamilyValue {
    pub fn entries(&self) -> ([Rat; 4], [Rat; 4]) {
        match self {
            FamilyValue::E5(s) => (s.x.clone(), s.y.clone()),
            FamilyValue::System(s) => (s.x.clone(), s.y.clone()),
        }
    }

    pub fn as_e5(&self) -> Option<&SolutionE5> {
        match self {
            FamilyValue::E5(s) => Some(s),
            FamilyValue::System(_) => None,
        }
    }
}

/// Evaluates a family at `m`, reduced to a primitive integer solution.
pub fn family_eval(id: FamilyId, m: &Rat) -> Result<FamilyValue> {
    let small = m.to_i64();
    if matches!(small, Some(-1..=1)) {
        return Err(Error::degenerate(
            Stage::Family,
            format!("m = {m} annihilates the (m-1), (m+1) or m factors"),
        ));
    }
    let oct = family_symbolic(id);
    let x = oct.x.each_ref().map(|p| p.eval(m));
    let y = oct.y.each_ref().map(|p| p.eval(m));
    let pairs = [
        (&x[0], &x[1]),
        (&x[2], &x[3]),
        (&y[0], &y[1]),
        (&y[2], &y[3]),
    ];
    if let Some(i) = pairs.iter().position(|(a, b)| a.is_zero() && b.is_zero()) {
        return Err(Error::degenerate(
            Stage::Family,
            format!("pair {} vanishes at m = {m}", i + 1),
        ));
    }

    if id.is_system() {
        let all: [Rat; 8] = core::array::from_fn(|i| {
            if i < 4 {
                x[i].clone()
            } else {
                y[i - 4].clone()
            }
        });
        let p = primitive_signed(&all);
        let sys = SystemSolution::new(
            [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()],
            [p[4].clone(), p[5].clone(), p[6].clone(), p[7].clone()],
        );
        if !verify_system(&sys) {
            return Err(Error::construction(
                Stage::Verify,
                format!("system fails at m = {m}"),
            ));
        }
        if let Ok(s) = from_system(&sys) {
            if is_trivial(&s)? {
                return Err(Error::degenerate(
                    Stage::Family,
                    format!("trivial at m = {m}"),
                ));
            }
        }
        return Ok(FamilyValue::System(sys));
    }

    let s = normalize_blocks(&SolutionE5::new(x, y)?);
    if is_trivial(&s)? {
        return Err(Error::degenerate(
            Stage::Family,
            format!("trivial at m = {m}"),
        ));
    }
    Ok(FamilyValue::E5(s))
}
