use chern_seifert::dedekind::{dedekind_sum_direct, dedekind_sum_fast, DedekindArgs};
use chern_seifert::invariants::{
    eta0, framing_twist, k_normalization, m_exponent, seifert_framing_phase,
};
use chern_seifert::partition::{partition_sum, trivial_phases, ExactMagnitude};
use chern_seifert::rational::{int, ratio, render};
use chern_seifert::seifert::{chern_number, normalize};
use chern_seifert::torsion::homology_report;
use chern_seifert::{Error, SeifertData, SqrtRational, TorusRank};

fn rank(n: u32) -> TorusRank {
    TorusRank::new(n).unwrap()
}

fn parse(s: &str) -> SeifertData {
    s.parse().unwrap()
}

#[test]
fn poincare_sphere_invariants() {
    let d = parse("[0,-1;(2,1),(3,1),(5,1)]");
    assert_eq!(chern_number(&d), ratio(1, 30));
    assert_eq!(render(eta0(&d, rank(1)).value()), "-91/180");
    assert_eq!(m_exponent(&d, rank(1)).unwrap(), int(-1));
    assert_eq!(k_normalization(&d, rank(1)).unwrap(), SqrtRational::one());
    let report = homology_report(&d, rank(1)).unwrap();
    assert_eq!(report.render_group(), "0");
    assert_eq!(report.betti, 0);
}

#[test]
fn normalized_data_share_every_invariant() {
    let d = parse("[1,2;(1,3),(3,5),(4,-1)]");
    let n = normalize(&d);
    assert_eq!(n.to_string(), "[1, 5; (3,5), (4,-1)]");
    for r in 1..=3 {
        assert_eq!(eta0(&d, rank(r)), eta0(&n, rank(r)));
        assert_eq!(
            homology_report(&d, rank(r)).unwrap().order(),
            homology_report(&n, rank(r)).unwrap().order()
        );
    }
}

#[test]
fn lens_space_magnitude_and_phase() {
    let d = parse("[0,4;]");
    let report = homology_report(&d, rank(1)).unwrap();
    assert_eq!(report.render_group(), "Z/4");
    let phases = trivial_phases(&report).unwrap();
    let z = partition_sum(&d, rank(1), 5, &phases, 0, 40).unwrap();
    assert_eq!(
        z.magnitude_exact,
        Some(ExactMagnitude::Sqrt(
            SqrtRational::new(ratio(4, 25)).unwrap()
        ))
    );
    assert_eq!(
        z.magnitude_decimal(),
        "0.4000000000000000000000000000000000000000"
    );
    // eta0 = 2/3, so the common phase is -1/3 pi.
    assert_eq!(z.common_phase.render(), "5/3*pi");
    let framed = partition_sum(&d, rank(1), 5, &phases, 6, 40).unwrap();
    assert_eq!(
        framed.common_phase,
        &z.common_phase * &framing_twist(rank(1), 6)
    );
}

#[test]
fn circle_bundle_framing_phase() {
    for e in -5..=5i64 {
        let d = SeifertData::from_pairs(0, e, &[]).unwrap();
        let eta = eta0(&d, rank(2));
        assert_eq!(*eta.value(), ratio(2 * e, 6));
        // The degree of the bundle is -e.
        assert_eq!(
            seifert_framing_phase(rank(2), &eta),
            framing_twist(rank(2), 3 + e)
        );
    }
}

#[test]
fn dedekind_terms_agree_on_catalog_cones() {
    for (a, b) in [(2, 1), (3, 2), (5, 4), (7, 3), (11, 5), (997, 123)] {
        let args = DedekindArgs::new(a, b).unwrap();
        assert_eq!(dedekind_sum_fast(args), dedekind_sum_direct(args));
    }
}

#[test]
fn zero_chern_number_is_rejected() {
    let d = parse("[2,-1;(2,1),(2,1)]");
    assert_eq!(chern_number(&d), int(0));
    assert!(matches!(
        m_exponent(&d, rank(1)),
        Err(Error::ZeroChernNumber)
    ));
    assert!(matches!(
        homology_report(&d, rank(1)),
        Err(Error::ZeroChernNumber)
    ));
}
