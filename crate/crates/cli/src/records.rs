//! JSON-lines records. Every number is a decimal string so large values survive
//! tools that read JSON numbers as doubles.

use pentaprod_core::construct::PipelineTrace;
use pentaprod_core::ecurve::{Curve, ECPoint, OrderScreen, QuarticPoint};
use pentaprod_core::families::{FamilyReport, SymbolicOctuple};
use pentaprod_core::poly::Poly;
use pentaprod_core::search::{check_additional_condition, Sextuple};
use pentaprod_core::{Rat, SolutionE5, SystemSolution};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// `{"x": [...], "y": [...]}` with rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Octuple {
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl Octuple {
    pub fn new(x: &[Rat; 4], y: &[Rat; 4]) -> Self {
        Octuple {
            x: strings(x),
            y: strings(y),
        }
    }

    pub fn parse(&self) -> Option<([Rat; 4], [Rat; 4])> {
        let conv = |v: &[String]| -> Option<[Rat; 4]> {
            let r: Vec<Rat> = v.iter().map(|s| s.parse().ok()).collect::<Option<_>>()?;
            r.try_into().ok()
        };
        Some((conv(&self.x)?, conv(&self.y)?))
    }
}

impl From<&SolutionE5> for Octuple {
    fn from(s: &SolutionE5) -> Self {
        Octuple::new(&s.x, &s.y)
    }
}

impl From<&SystemSolution> for Octuple {
    fn from(s: &SystemSolution) -> Self {
        Octuple::new(&s.x, &s.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SextupleRecord {
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub extra_condition: bool,
}

impl SextupleRecord {
    pub fn new(s: &Sextuple) -> Self {
        SextupleRecord {
            x: strings(&s.x),
            y: strings(&s.y),
            extra_condition: check_additional_condition(s),
        }
    }

    pub fn parse(&self) -> Option<Sextuple> {
        let text = format!("{},{}", self.x.join(","), self.y.join(","));
        text.parse().ok()
    }
}

pub fn point(p: &ECPoint) -> Value {
    match p.coords() {
        None => json!("O"),
        Some((x, y)) => json!([x.to_string(), y.to_string()]),
    }
}

pub fn quartic_point(q: &QuarticPoint) -> Value {
    json!([q.u.to_string(), q.v.to_string()])
}

pub fn curve(c: &Curve) -> Value {
    json!({"A": c.a.to_string(), "B": c.b.to_string()})
}

pub fn screen(s: OrderScreen) -> &'static str {
    match s {
        OrderScreen::CertainlyInfinite => "certainly-infinite",
        OrderScreen::Undetermined => "undetermined",
    }
}

fn polys(v: &[Poly; 4]) -> Vec<String> {
    v.iter().map(Poly::to_pretty).collect()
}

pub fn symbolic(oct: &SymbolicOctuple) -> Value {
    json!({"id": oct.id.name(), "x": polys(&oct.x), "y": polys(&oct.y)})
}

pub fn report(r: &FamilyReport) -> Vec<Value> {
    r.checks
        .iter()
        .map(|c| json!({"family": r.id.name(), "identity": c.identity.name(), "holds": c.holds}))
        .collect()
}

pub fn trace(t: &PipelineTrace, full: bool) -> Value {
    let mut v = json!({
        "m": t.m.to_string(),
        "u": t.u.to_string(),
        "v": t.v.to_string(),
        "solution": Octuple::from(&t.solution),
        "trivial": t.trivial,
    });
    if full {
        let extra = json!({
            "S1": t.S1.to_string(),
            "h": t.h.to_string(),
            "s1": t.s1.to_string(),
            "t1": t.t1.to_string(),
            "T1": t.T1.to_string(),
            "s2": t.s2.to_string(),
            "t2": t.t2.to_string(),
            "S2": t.S2.to_string(),
            "T2": t.T2.to_string(),
            "discriminants": strings(&t.discriminants),
            "roots": strings(&t.roots),
            "system": Octuple::from(&t.system),
        });
        let (Value::Object(base), Value::Object(more)) = (&mut v, extra) else {
            unreachable!()
        };
        base.extend(more);
    }
    v
}
