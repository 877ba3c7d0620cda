use pentaprod_core::constants::valu;
use pentaprod_core::construct::{
    construct_default, default_fermat_point, discriminant_forms, fermat_square_point, phi_quartic,
    pipeline, quad_roots,
};
use pentaprod_core::ecurve::{generate_solutions, p_prime, weierstrass_to_quartic};
use pentaprod_core::exact::is_square_rat;
use pentaprod_core::families::{family_eval, FamilyId, FamilyValue};
use pentaprod_core::reduction::{equivalent, is_trivial, verify_eq1xy, verify_eq5};
use pentaprod_core::{rat, Error, Rat, Stage};

fn sample() -> Vec<Rat> {
    vec![rat(2), rat(3), rat(5), Rat::frac(7, 2), rat(-4)]
}

#[test]
fn fermat_point_is_the_reference_abscissa() {
    for m in sample() {
        let us = fermat_square_point(&phi_quartic(&m).unwrap()).unwrap();
        assert!(us.contains(&valu().eval(&m).unwrap()), "m = {m}");
    }
}

#[test]
fn pipeline_reproduces_family() {
    for m in sample() {
        let t = construct_default(&m, &rat(1)).unwrap();
        for d in &t.discriminants {
            assert!(is_square_rat(d).is_some());
        }
        assert!(verify_eq5(&t.solution) && verify_eq1xy(&t.solution));
        assert!(!is_trivial(&t.solution).unwrap());
        let fam = family_eval(FamilyId::ParmSol1E5, &m).unwrap();
        assert!(equivalent(&t.solution, fam.as_e5().unwrap()), "m = {m}");
    }
}

#[test]
fn pipeline_pair_sums_match_system_family() {
    let m = rat(3);
    let t = construct_default(&m, &rat(1)).unwrap();
    let FamilyValue::System(sys) = family_eval(FamilyId::ParmSol1, &m).unwrap() else {
        panic!("system family");
    };
    let (a, b) = quad_roots(&t.s1, &t.s2).unwrap();
    let ratio = &a / &b;
    let fam_ratio = &sys.x[0] / &sys.x[1];
    assert!(ratio == fam_ratio || ratio == fam_ratio.recip().unwrap());
}

#[test]
fn closed_forms_agree_with_direct_values() {
    for m in sample() {
        let u = valu().eval(&m).unwrap();
        let t = pipeline(&m, &u, &rat(1), None).unwrap();
        assert_eq!(
            discriminant_forms(&m, &u, &rat(1)).unwrap(),
            t.discriminants
        );
    }
    // u = 0 gives h = 0 and a zero denominator in the resolvent solution
    let forms = discriminant_forms(&rat(2), &rat(0), &rat(1));
    let run = pipeline(&rat(2), &rat(0), &rat(1), None);
    assert!(forms.is_ok());
    assert!(matches!(
        run,
        Err(Error::DegenerateParameter {
            stage: Stage::S2T2,
            ..
        })
    ));
}

#[test]
fn s1_is_a_pure_scale() {
    let m = rat(5);
    let p = default_fermat_point(&m).unwrap();
    let one = pipeline(&m, &p.u, &rat(1), Some(&p.v)).unwrap();
    let two = pipeline(&m, &p.u, &rat(2), Some(&p.v)).unwrap();
    assert!(equivalent(&one.solution, &two.solution));
    for (a, b) in one.discriminants.iter().zip(&two.discriminants) {
        assert_eq!(&(a * &rat(4)), b);
    }
}

#[test]
fn weierstrass_point_gives_the_same_solution() {
    for m in [rat(2), rat(3)] {
        let q = weierstrass_to_quartic(&m, &p_prime(&m).unwrap()).unwrap();
        let t = pipeline(&m, &q.u, &rat(1), Some(&q.v)).unwrap();
        let fam = family_eval(FamilyId::ParmSol1E5, &m).unwrap();
        assert!(equivalent(&t.solution, fam.as_e5().unwrap()));
    }
}

#[test]
fn second_multiple_gives_a_new_solution() {
    for m in [rat(2), rat(3)] {
        let r = generate_solutions(&m, 2, 6).unwrap();
        assert_eq!(r.solutions.len(), 2, "m = {m}: skipped {:?}", r.skipped);
        assert_eq!(r.solutions[0].n, 1);
        assert_eq!(r.solutions[1].n, 2);
        let (a, b) = (
            &r.solutions[0].trace.solution,
            &r.solutions[1].trace.solution,
        );
        assert!(verify_eq5(a) && verify_eq5(b));
        assert!(!equivalent(a, b));
        let fam = family_eval(FamilyId::ParmSol1E5, &m).unwrap();
        assert!(equivalent(a, fam.as_e5().unwrap()));
    }
}
