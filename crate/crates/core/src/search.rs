//! Bounded search for `(x1^5+x2^5)(x3^5+x4^5) = y1^5 + y2^5`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{int_nth_root, Int, Rat};
use crate::reduction::{reduced_products_equal, SolutionE5};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sextuple {
    pub x: [Int; 4],
    pub y: [Int; 2],
}

impl Sextuple {
    pub fn new(x: [Int; 4], y: [Int; 2]) -> Self {
        Sextuple { x, y }
    }

    pub fn from_i64(v: [i64; 6]) -> Self {
        Sextuple {
            x: [v[0].into(), v[1].into(), v[2].into(), v[3].into()],
            y: [v[4].into(), v[5].into()],
        }
    }

    /// The octuple `(x1, x2, x3, x4; y1, y2, 1, 0)` it embeds as.
    pub fn to_octuple(&self) -> Result<SolutionE5> {
        let r = |i: &Int| Rat::from_int(i.clone());
        SolutionE5::new(
            self.x.each_ref().map(r),
            [
                r(&self.y[0]),
                r(&self.y[1]),
                Rat::from_int(1),
                Rat::from_int(0),
            ],
        )
    }
}

impl fmt::Display for Sextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.x;
        let [e, g] = &self.y;
        write!(f, "{a},{b},{c},{d},{e},{g}")
    }
}

impl fmt::Debug for Sextuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sextuple({self})")
    }
}

impl FromStr for Sextuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parts: Vec<&str> = cleaned.split(',').collect();
        if parts.len() != 6 {
            return Err(Error::Parse { token: s.into() });
        }
        let mut v: Vec<Int> = Vec::with_capacity(6);
        for p in parts {
            v.push(p.parse().map_err(|_| Error::Parse { token: p.into() })?);
        }
        let [a, b, c, d, e, g]: [Int; 6] = v.try_into().expect("six entries");
        Ok(Sextuple::new([a, b, c, d], [e, g]))
    }
}

fn p5(v: &Int) -> Int {
    let sq = v * v;
    &(&sq * &sq) * v
}

fn factor(a: &Int, b: &Int) -> Int {
    p5(a) + p5(b)
}

pub fn verify_sextuple(s: &Sextuple) -> bool {
    let [x1, x2, x3, x4] = &s.x;
    factor(x1, x2) * factor(x3, x4) == factor(&s.y[0], &s.y[1])
}

/// `(x1+x2)(x3+x4) = y1+y2`.
pub fn check_additional_condition(s: &Sextuple) -> bool {
    let [x1, x2, x3, x4] = &s.x;
    (x1 + x2) * (x3 + x4) == &s.y[0] + &s.y[1]
}

/// Verified, both factors nonzero, and nontrivial as the octuple
/// `(x1, x2, x3, x4; y1, y2, 1, 0)`.
pub fn is_admissible(s: &Sextuple) -> bool {
    if !verify_sextuple(s) {
        return false;
    }
    let [x1, x2, x3, x4] = &s.x;
    if factor(x1, x2).is_zero() || factor(x3, x4).is_zero() {
        return false;
    }
    match s.to_octuple() {
        Ok(o) => !reduced_products_equal(&o),
        Err(_) => false,
    }
}

fn orient(x: [Int; 4], mut y: [Int; 2]) -> Sextuple {
    let [x1, x2, x3, x4] = x;
    let mut pairs = [[x1, x2], [x3, x4]];
    for p in pairs.iter_mut() {
        if factor(&p[0], &p[1]).is_negative() {
            *p = [-&p[0], -&p[1]];
            y = [-&y[0], -&y[1]];
        }
        p.sort_by(|a, b| b.cmp(a));
    }
    pairs.sort_by(|a, b| {
        factor(&a[0], &a[1])
            .cmp(&factor(&b[0], &b[1]))
            .then_with(|| a.cmp(b))
    });
    y.sort_by(|a, b| b.cmp(a));
    let [[a, b], [c, d]] = pairs;
    Sextuple::new([a, b, c, d], y)
}

/// `gcd(g1 g2, y1, y2)` with `g1`, `g2` the contents of the x-pairs. Scaling
/// the pairs by `k`, `l` and the y's by `k l` maps solutions to solutions, so
/// a content above one means a smaller solution in the same class.
pub fn sextuple_content(s: &Sextuple) -> Int {
    let [x1, x2, x3, x4] = &s.x;
    let g = x1.gcd(x2) * x3.gcd(x4);
    g.gcd(&s.y[0]).gcd(&s.y[1])
}

pub fn is_primitive_sextuple(s: &Sextuple) -> bool {
    sextuple_content(s) == Int::from(1)
}

/// Representative under within-pair swaps, swapping the x-pairs, the sign
/// change of one x-pair together with the y's, and pair scalings `k`, `l` with
/// `k l = 1`: both x-factors positive, each pair descending, pairs ordered by
/// factor, `y1 >= y2`, and the common content of the pairs moved to one pair.
pub fn canonical_sextuple(s: &Sextuple) -> Sextuple {
    let [x1, x2, x3, x4] = &s.x;
    let (g1, g2) = (x1.gcd(x2), x3.gcd(x4));
    if g1.is_zero() || g2.is_zero() {
        return orient(s.x.clone(), s.y.clone());
    }
    let g = &g1 * &g2;
    let p = [x1 / &g1, x2 / &g1, x3 / &g2, x4 / &g2];
    let first = [&p[0] * &g, &p[1] * &g, p[2].clone(), p[3].clone()];
    let second = [p[0].clone(), p[1].clone(), &p[2] * &g, &p[3] * &g];
    let a = orient(first, s.y.clone());
    let b = orient(second, s.y.clone());
    a.min(b)
}

/// All `(y1, y2)` with `y1 >= y2`, `|y1|, |y2| <= cap` and `y1^5 + y2^5 = n`,
/// `y1` descending. Probes `n - y1^5` for an exact fifth root.
pub fn decompose_two_fifth_powers(n: &Int, cap: &Int) -> Vec<(Int, Int)> {
    let mut out = Vec::new();
    if !cap.is_positive() {
        return out;
    }
    // y1 >= y2 forces 2 y1^5 >= n
    let half = n / Int::from(2);
    let (mut lo, _) = int_nth_root(&half, 5).expect("odd index");
    while &p5(&lo) * Int::from(2) < *n {
        lo += 1;
    }
    while &p5(&(&lo - 1)) * Int::from(2) >= *n {
        lo -= 1;
    }
    let lo = lo.max(-cap.clone());
    let mut y1 = cap.clone();
    while y1 >= lo {
        let rest = n - p5(&y1);
        let (r, exact) = int_nth_root(&rest, 5).expect("odd index");
        if exact && r <= y1 && r.abs() <= *cap {
            out.push((y1.clone(), r));
        }
        y1 -= 1;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Bound on `|x1|, |x2|`.
    pub b1: i64,
    /// Bound on `|x3|, |x4|`.
    pub b2: i64,
    /// Bound on `|y1|, |y2|`.
    pub cap: i64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            b1: 20,
            b2: 90,
            cap: 500,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.b1 <= 0 || self.b2 <= 0 || self.cap <= 0 {
            return Err(Error::invalid("search bounds must be positive"));
        }
        // keeps every x-factor and table entry inside i128
        if self.b1.max(self.b2) > 1 << 20 || self.cap > 1 << 20 {
            return Err(Error::invalid(format!(
                "bounds above {} are not supported",
                1 << 20
            )));
        }
        Ok(())
    }
}

fn p5_i128(v: i64) -> i128 {
    let v = v as i128;
    v * v * v * v * v
}

/// `y1^5 + y2^5 > 0` for all `cap >= y1 >= y2 >= -cap`, sorted by value.
pub struct FifthPowerTable {
    entries: Vec<(i128, i64, i64)>,
}

impl FifthPowerTable {
    pub fn new(cap: i64) -> Self {
        let mut entries = Vec::new();
        for y1 in 1..=cap {
            let a = p5_i128(y1);
            for y2 in -y1 + 1..=y1 {
                entries.push((a + p5_i128(y2), y1, y2));
            }
        }
        entries.sort_unstable();
        FifthPowerTable { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_value(&self) -> i128 {
        self.entries.last().map_or(0, |e| e.0)
    }

    /// Every `(y1, y2)` in the table with `y1^5 + y2^5 = n`.
    pub fn lookup(&self, n: i128) -> impl Iterator<Item = (i64, i64)> + '_ {
        let start = self.entries.partition_point(|e| e.0 < n);
        self.entries[start..]
            .iter()
            .take_while(move |e| e.0 == n)
            .map(|e| (e.1, e.2))
    }
}

/// Pairs `x1 >= x2` with `|x| <= bound` and `x1 + x2 > 0`, so `x1^5 + x2^5 > 0`.
pub fn x_pairs(bound: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=a {
            if a + b > 0 {
                v.push((a, b));
            }
        }
    }
    v
}

/// One unit of work: a fixed first pair against every second pair.
pub fn search_unit(
    table: &FifthPowerTable,
    first: (i64, i64),
    second: &[(i64, i64)],
) -> Vec<Sextuple> {
    let f1 = p5_i128(first.0) + p5_i128(first.1);
    let max = table.max_value();
    let mut out = Vec::new();
    for &(c, d) in second {
        let Some(n) = f1.checked_mul(p5_i128(c) + p5_i128(d)) else {
            continue;
        };
        if n > max {
            continue;
        }
        for (y1, y2) in table.lookup(n) {
            let s = Sextuple::from_i64([first.0, first.1, c, d, y1, y2]);
            if is_primitive_sextuple(&s) && is_admissible(&s) {
                out.push(canonical_sextuple(&s));
            }
        }
    }
    out
}

/// Merges unit results into the sorted, duplicate-free output.
pub fn merge_results(parts: impl IntoIterator<Item = Vec<Sextuple>>) -> Vec<Sextuple> {
    let mut all: Vec<Sextuple> = parts.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    all
}

/// Sequential search; `progress(done, total)` is called after every unit.
pub fn run_search_with(
    cfg: &SearchConfig,
    mut progress: impl FnMut(usize, usize),
) -> Result<Vec<Sextuple>> {
    cfg.validate()?;
    let table = FifthPowerTable::new(cfg.cap);
    let firsts = x_pairs(cfg.b1);
    let seconds = x_pairs(cfg.b2);
    let total = firsts.len();
    let mut parts = Vec::with_capacity(total);
    for (i, &p) in firsts.iter().enumerate() {
        parts.push(search_unit(&table, p, &seconds));
        progress(i + 1, total);
    }
    Ok(merge_results(parts))
}

pub fn run_search(cfg: &SearchConfig) -> Result<Vec<Sextuple>> {
    run_search_with(cfg, |_, _| {})
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn reference_sextuples() {
        assert!(verify_sextuple(&Sextuple::from_i64([
            8, -1, 25, 21, 109, 213
        ])));
        assert!(!verify_sextuple(&Sextuple::from_i64([
            8, -1, 25, 21, 109, 214
        ])));
        let big: Sextuple = "67575, 56763, 21624, -2703, 1556222517, 796376781"
            .parse()
            .unwrap();
        assert!(verify_sextuple(&big));
        assert!(check_additional_condition(&big));
        assert!(check_additional_condition(&Sextuple::from_i64([
            8, -1, 25, 21, 109, 213
        ])));
        assert!(!check_additional_condition(&Sextuple::from_i64([
            19, 12, 6, 4, 41, 119
        ])));
    }

    #[test]
    fn decompositions() {
        let n = p5(&int(109)) + p5(&int(213));
        assert!(decompose_two_fifth_powers(&n, &int(500)).contains(&(int(213), int(109))));
        assert_eq!(
            decompose_two_fifth_powers(&int(33), &int(10)),
            [(int(2), int(1))]
        );
        let n = int(2) * p5(&int(7));
        assert!(decompose_two_fifth_powers(&n, &int(10)).contains(&(int(7), int(7))));
    }

    #[test]
    fn trivial_embeddings_are_rejected() {
        // (x1^5 + x2^5) x3^5 = (x1 x3)^5 + (x2 x3)^5
        let s = Sextuple::from_i64([2, 1, 3, 0, 6, 3]);
        assert!(verify_sextuple(&s));
        assert!(!is_admissible(&s));
    }

    #[test]
    fn canonical_form_is_stable() {
        let s = Sextuple::from_i64([25, 21, -1, 8, 213, 109]);
        let c = canonical_sextuple(&s);
        assert_eq!(c, Sextuple::from_i64([8, -1, 25, 21, 213, 109]));
        let moved = canonical_sextuple(&Sextuple::from_i64([19, 12, 6, 4, 41, 119]));
        assert_eq!(
            moved,
            canonical_sextuple(&Sextuple::from_i64([38, 24, 3, 2, 119, 41]))
        );
        let neg = Sextuple::from_i64([-8, 1, 25, 21, -109, -213]);
        assert_eq!(canonical_sextuple(&neg), c);
    }

    #[test]
    fn content_of_scaled_copies() {
        let s = Sextuple::from_i64([19, 12, 6, 4, 41, 119]);
        assert!(is_primitive_sextuple(&s));
        assert_eq!(
            sextuple_content(&Sextuple::from_i64([38, 24, 6, 4, 82, 238])),
            int(2)
        );
    }

    #[test]
    fn table_agrees_with_root_probing() {
        let cap = 30;
        let table = FifthPowerTable::new(cap);
        assert_eq!(table.len(), (cap * (cap + 1)) as usize);
        for n in (1..2_000).chain(table.entries.iter().map(|e| e.0 as i64).filter(|&n| n > 0)) {
            let mut got: Vec<(Int, Int)> = table
                .lookup(n as i128)
                .map(|(a, b)| (int(a), int(b)))
                .collect();
            got.sort_by(|a, b| b.cmp(a));
            assert_eq!(
                got,
                decompose_two_fifth_powers(&int(n), &int(cap)),
                "n = {n}"
            );
        }
    }

    #[test]
    fn tiny_box_is_sound() {
        let cfg = SearchConfig {
            b1: 2,
            b2: 2,
            cap: 10,
        };
        for s in run_search(&cfg).unwrap() {
            assert!(is_admissible(&s));
        }
    }
}
