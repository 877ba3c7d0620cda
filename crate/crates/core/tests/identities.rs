use pentaprod_core::families::{family_symbolic, verify_family_symbolic, FamilyId, Identity};

#[test]
fn every_family_identity_is_the_zero_polynomial() {
    for id in FamilyId::ALL {
        let report = verify_family_symbolic(id);
        for c in &report.checks {
            assert!(
                c.holds,
                "{id}: {} leaves degree {:?}",
                c.identity.name(),
                c.residual_degree
            );
        }
        assert_eq!(report.checks.len(), id.identities().len());
    }
}

#[test]
fn identity_lists() {
    assert_eq!(
        FamilyId::ParmSol1E5.identities(),
        &[Identity::Eq5, Identity::Eq1xy]
    );
    assert_eq!(
        FamilyId::ParmSol1.identities(),
        &[
            Identity::Eq5XY,
            Identity::Eq1X,
            Identity::Eq1Y,
            Identity::Eq1XY
        ]
    );
}

#[test]
fn system_family_products() {
    let o = family_symbolic(FamilyId::ParmSol1);
    assert_eq!(&o.x[0] * &o.x[1], &o.y[0] * &o.y[1]);
    assert_eq!(&o.x[2] * &o.x[3], &o.y[2] * &o.y[3]);
}

#[test]
fn sign_flip_breaks_eq5() {
    for id in [
        FamilyId::ParmSol1E5,
        FamilyId::ParmSol2E5,
        FamilyId::ParmSol3E5,
    ] {
        let mut o = family_symbolic(id);
        o.x[3] = -o.x[3].clone();
        let r = pentaprod_core::families::verify_symbolic(&o);
        let eq5 = r
            .checks
            .iter()
            .find(|c| c.identity == Identity::Eq5)
            .unwrap();
        assert!(!eq5.holds);
    }
}
