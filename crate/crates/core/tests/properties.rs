use proptest::prelude::*;

use pentaprod_core::ecurve::{
    ec_add, ec_mul, ec_neg, p_prime, quartic_to_weierstrass, weierstrass_to_quartic, Curve, ECPoint,
};
use pentaprod_core::exact::{int_nth_root, is_square_rat, Int};
use pentaprod_core::families::{family_eval, FamilyId};
use pentaprod_core::poly::{Poly, RatFunc, Var};
use pentaprod_core::reduction::{
    equivalent, from_system, reduced_products_equal, rescale, satisfies_power, to_system,
    verify_eq5, verify_system, SolutionE5,
};
use pentaprod_core::search::decompose_two_fifth_powers;
use pentaprod_core::{rat, Rat};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-60i64..60, 1i64..20).prop_map(|(n, d)| Rat::frac(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    small_rat().prop_filter("nonzero", |q| !q.is_zero())
}

fn family_m() -> impl Strategy<Value = Rat> {
    (-12i64..12, 1i64..6)
        .prop_map(|(n, d)| Rat::frac(n, d))
        .prop_filter("non-degenerate", |m| !matches!(m.to_i64(), Some(-1..=1)))
}

fn e5_family() -> impl Strategy<Value = FamilyId> {
    prop_oneof![
        Just(FamilyId::ParmSol1E5),
        Just(FamilyId::ParmSol2E5),
        Just(FamilyId::ParmSol3E5)
    ]
}

fn poly_m() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(small_rat(), 0..7).prop_map(|c| Poly::new(Var::M, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn system_roundtrip_on_family_solutions(id in e5_family(), m in family_m()) {
        let v = family_eval(id, &m);
        prop_assume!(v.is_ok());
        let s = v.unwrap().as_e5().unwrap().clone();
        let sys = to_system(&s);
        prop_assert!(verify_system(&sys));
        let back = from_system(&sys).unwrap();
        prop_assert!(verify_eq5(&back));
        prop_assert!(equivalent(&back, &s));
    }

    #[test]
    fn scaling_preserves_solutions(id in e5_family(), m in family_m(), k1 in nonzero_rat(), k2 in nonzero_rat()) {
        let v = family_eval(id, &m);
        prop_assume!(v.is_ok());
        let s = v.unwrap().as_e5().unwrap().clone();
        let r = rescale(&s, &k1, &k2).unwrap();
        prop_assert!(verify_eq5(&r));
        prop_assert!(equivalent(&r, &s));
    }

    #[test]
    fn minus_m_is_equivalent(m in family_m()) {
        let a = family_eval(FamilyId::ParmSol1E5, &m);
        let b = family_eval(FamilyId::ParmSol1E5, &-&m);
        prop_assume!(a.is_ok() && b.is_ok());
        prop_assert!(equivalent(a.unwrap().as_e5().unwrap(), b.unwrap().as_e5().unwrap()));
    }

    #[test]
    fn square_root_of_square(q in small_rat()) {
        prop_assert_eq!(is_square_rat(&q.square()), Some(q.abs()));
    }

    #[test]
    fn fifth_root_brackets(n in 0u128..u128::MAX) {
        let n = Int::from(n);
        let (r, exact) = int_nth_root(&n, 5).unwrap();
        let p = |v: &Int| v.pow(5u32);
        prop_assert!(p(&r) <= n);
        prop_assert!(p(&(&r + 1)) > n);
        prop_assert_eq!(exact, p(&r) == n);
    }

    #[test]
    fn rational_arithmetic_inverts(a in small_rat(), b in nonzero_rat()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in poly_m(), q in poly_m(), x in small_rat()) {
        prop_assert_eq!((&p * &q).eval(&x), &p.eval(&x) * &q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), &p.eval(&x) + &q.eval(&x));
        prop_assert_eq!(p.compose_neg().compose_neg(), p);
    }

    #[test]
    fn reduction_keeps_values(p in poly_m(), q in poly_m(), x in small_rat()) {
        prop_assume!(!q.is_zero());
        let f = RatFunc::new(p.clone(), q.clone()).unwrap();
        let again = RatFunc::new(f.numer().clone(), f.denom().clone()).unwrap();
        prop_assert_eq!(&again, &f);
        let d = q.eval(&x);
        if !d.is_zero() {
            prop_assert_eq!(f.eval(&x).unwrap(), &p.eval(&x) / &d);
        }
    }
}

/// Octuples that often have coinciding products: tiny entries, or the
/// `(a1 u, a2 u, a3 v, a4 v; a1 v, a2 v, a3 u, a4 u)` pattern with perturbations.
fn octuple() -> impl Strategy<Value = SolutionE5> {
    let tiny = proptest::array::uniform8(-3i64..=3);
    let patterned = (proptest::array::uniform6(-5i64..=5), 0usize..8, -1i64..=1).prop_map(
        |([a1, a2, a3, a4, u, v], slot, bump)| {
            let mut e = [
                a1 * u,
                a2 * u,
                a3 * v,
                a4 * v,
                a1 * v,
                a2 * v,
                a3 * u,
                a4 * u,
            ];
            e[slot] += bump;
            e
        },
    );
    prop_oneof![tiny, patterned]
        .prop_map(|e| SolutionE5::from_ints([e[0], e[1], e[2], e[3]], [e[4], e[5], e[6], e[7]]))
        .prop_filter_map("nonzero sides", |s| s.ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn multiset_test_matches_odd_power_sums(s in octuple()) {
        let by_powers = (1..=15).step_by(2).all(|n| satisfies_power(&s, n));
        prop_assert_eq!(reduced_products_equal(&s), by_powers, "{}", s);
    }
}

/// A curve through two random integer points, with both points.
fn curve_with_points() -> impl Strategy<Value = (Curve, ECPoint, ECPoint)> {
    (-9i64..9, -9i64..9, -9i64..9, -9i64..9)
        .prop_filter("distinct x", |(x1, _, x2, _)| x1 != x2)
        .prop_filter_map("nonsingular", |(x1, y1, x2, y2)| {
            let (x1, y1, x2, y2) = (rat(x1), rat(y1), rat(x2), rat(y2));
            let g = |x: &Rat, y: &Rat| &y.square() - &(&x.square() * x);
            let a = &(&g(&x1, &y1) - &g(&x2, &y2)) / &(&x1 - &x2);
            let b = &g(&x1, &y1) - &(&a * &x1);
            let c = Curve::new(a, b).ok()?;
            Some((c, ECPoint::affine(x1, y1), ECPoint::affine(x2, y2)))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn group_law_axioms((c, p, q) in curve_with_points()) {
        let add = |a: &ECPoint, b: &ECPoint| ec_add(&c, a, b).unwrap();
        let r = add(&add(&p, &p), &q);
        prop_assert!(c.contains(&add(&p, &q)));
        prop_assert_eq!(add(&p, &q), add(&q, &p));
        prop_assert_eq!(add(&add(&p, &q), &r), add(&p, &add(&q, &r)));
        prop_assert_eq!(add(&p, &ec_neg(&p)), ECPoint::Infinity);
        let mut acc = ECPoint::Infinity;
        for n in 1..=8 {
            acc = add(&acc, &p);
            prop_assert_eq!(ec_mul(&c, &p, &Int::from(n)).unwrap(), acc.clone());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn birational_roundtrip(m in family_m(), n in 1u32..4) {
        let p = p_prime(&m);
        prop_assume!(p.is_ok());
        let p = p.unwrap();
        let c = pentaprod_core::ecurve::curve_at(&m).unwrap();
        let pt = ec_mul(&c, &p, &Int::from(n)).unwrap();
        let q = weierstrass_to_quartic(&m, &pt);
        prop_assume!(q.is_ok());
        let q = q.unwrap();
        let back = quartic_to_weierstrass(&m, &q);
        prop_assume!(back.is_ok());
        prop_assert_eq!(&back.unwrap(), &pt);
        let back_q = weierstrass_to_quartic(&m, &quartic_to_weierstrass(&m, &q).unwrap()).unwrap();
        prop_assert_eq!(back_q, q);
    }
}

fn double_loop(n: i64, cap: i64) -> Vec<(Int, Int)> {
    let mut v = Vec::new();
    for y1 in (-cap..=cap).rev() {
        for y2 in -cap..=y1 {
            if (y1 as i128).pow(5) + (y2 as i128).pow(5) == n as i128 {
                v.push((Int::from(y1), Int::from(y2)));
            }
        }
    }
    v
}

#[test]
fn decomposition_matches_double_loop_on_small_range() {
    let cap = 40;
    let mut table = std::collections::BTreeMap::<i64, Vec<(Int, Int)>>::new();
    for y1 in (-cap..=cap).rev() {
        for y2 in -cap..=y1 {
            let n = (y1 as i128).pow(5) + (y2 as i128).pow(5);
            if n.abs() <= 10_000_000 {
                table
                    .entry(n as i64)
                    .or_default()
                    .push((Int::from(y1), Int::from(y2)));
            }
        }
    }
    for n in -200_000i64..=200_000 {
        let got = decompose_two_fifth_powers(&Int::from(n), &Int::from(cap));
        let want = table.get(&n).cloned().unwrap_or_default();
        assert_eq!(got, want, "N = {n}");
    }
    for (n, want) in &table {
        let got = decompose_two_fifth_powers(&Int::from(*n), &Int::from(cap));
        assert_eq!(&got, want, "N = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_matches_double_loop_at_random(n in -10_000_000i64..=10_000_000) {
        let got = decompose_two_fifth_powers(&Int::from(n), &Int::from(40));
        prop_assert_eq!(got, double_loop(n, 40));
    }
}
