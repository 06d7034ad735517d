//! Worked examples through the public API.

use gammavec::rational::{int, ints};
use gammavec::*;
use num_bigint::BigInt;

fn poly(c: &[i64], n: usize) -> Polynomial {
    Polynomial::new(ints(c), n).unwrap()
}

fn series(c: &[i64], order: usize) -> TruncatedSeries {
    TruncatedSeries::from_ints(c, order)
}

#[test]
fn polynomial_transforms() {
    assert_eq!(poly(&[1, 4, 1], 2).reciprocal().coeffs(), ints(&[1, 4, 1]));
    assert_eq!(poly(&[1, 2, 0], 2).reciprocal().coeffs(), ints(&[0, 2, 1]));
    assert_eq!(
        poly(&[1, 1, 1], 2).translate(&int(1)).coeffs(),
        ints(&[3, 3, 1])
    );
    assert_eq!(
        poly(&[1, 2, 1], 2).translate(&int(1)).coeffs(),
        ints(&[4, 4, 1])
    );
    let p = poly(&[2, -7, 5], 2);
    assert_eq!(p.translate(&int(0)), p);
    assert_eq!(poly(&[1, 4, 1], 2).derivative().coeffs(), ints(&[4, 2]));
    assert_eq!(poly(&[5], 0).derivative().coeffs(), ints(&[0]));
    assert_eq!(
        poly(&[0, 0, 0, 1], 3).derivative().coeffs(),
        ints(&[0, 0, 3])
    );
}

#[test]
fn series_operations() {
    assert_eq!(expand_binomial_power(-2, 3).coeffs(), ints(&[1, -2, 3, -4]));
    assert_eq!(expand_binomial_power(2, 3).coeffs(), ints(&[1, 2, 1, 0]));
    assert_eq!(expand_binomial_power(0, 2).coeffs(), ints(&[1, 0, 0]));
    assert_eq!(
        series_divide(&poly(&[1, 4, 1], 2), 2, 1).coeffs(),
        ints(&[1, 2])
    );
    assert_eq!(
        series_divide(&poly(&[1], 0), 1, 2).coeffs(),
        ints(&[1, -1, 1])
    );
    assert_eq!(
        series_divide(&poly(&[3, 3, 1], 2), 2, 1).coeffs(),
        ints(&[3, -3])
    );

    let geometric = series(&[1, 1, 1], 2);
    assert_eq!(
        series_compose(&geometric, &series(&[0, 1, 1], 2))
            .unwrap()
            .coeffs(),
        ints(&[1, 1, 2])
    );
    assert_eq!(
        series_compose(&geometric, &series(&[0, 1, 0], 2)).unwrap(),
        geometric
    );
    assert_eq!(
        series_compose(&series(&[7], 2), &series(&[0, 3, -1], 2))
            .unwrap()
            .coeffs(),
        ints(&[7, 0, 0])
    );
    assert!(series_compose(&geometric, &series(&[1, 1], 2)).is_err());
}

#[test]
fn catalan_values() {
    assert_eq!(catalan(0), BigInt::from(1));
    assert_eq!(catalan(3), BigInt::from(5));
    assert_eq!(catalan(5), BigInt::from(42));
    assert_eq!(catalan_power_coeff(1, 1), BigInt::from(1));
    assert_eq!(catalan_power_coeff(2, 3), BigInt::from(4));
    assert_eq!(catalan_power_coeff(2, 2), BigInt::from(1));
    assert_eq!(catalan_convolution_shifted(2, 3).unwrap(), BigInt::from(2));
    // compositions of 4 into one part: C_3
    assert_eq!(catalan_convolution_shifted(1, 4).unwrap(), BigInt::from(5));
    assert_eq!(catalan_convolution_shifted(6, 6).unwrap(), BigInt::from(1));
    assert_eq!(
        catalan_convolution_unshifted(2, 2).unwrap(),
        BigInt::from(5)
    );
    assert_eq!(catalan_convolution_unshifted(1, 4).unwrap(), catalan(4));
    assert_eq!(
        catalan_convolution_unshifted(3, 1).unwrap(),
        BigInt::from(3)
    );
    let g = poly(&[1, 2, 1], 2);
    assert_eq!(lagrange_coefficient(&g, 2, 3).unwrap(), int(4));
    assert_eq!(lagrange_coefficient(&g, 5, 5).unwrap(), int(1));
    assert_eq!(lagrange_coefficient(&g, 1, 4).unwrap(), int(14));
}

#[test]
fn gamma_routes() {
    let g = gamma_by_basis(&poly(&[1, 4, 1], 2)).unwrap();
    assert_eq!(g.entries, ints(&[1, 2]));
    assert_eq!(
        gamma_by_basis(&poly(&[1, 4, 6, 4, 1], 4)).unwrap().entries,
        ints(&[1, 0, 0])
    );
    assert_eq!(
        gamma_by_basis(&poly(&[1, 1, 1], 2)).unwrap().entries,
        ints(&[1, -1])
    );
    assert!(gamma_by_basis(&poly(&[1, 2, 0], 2)).is_err());

    assert_eq!(
        gamma_extended(&poly(&[3, 3, 1], 2), 1).entries,
        ints(&[3, -3])
    );
    assert_eq!(
        gamma_extended(&poly(&[1, 1, 1], 2), 4).entries,
        ints(&[1, -1, 0, 0, 0])
    );
    assert_eq!(gamma_extended(&poly(&[1], 0), 2).entries, ints(&[1, 0, 0]));

    assert_eq!(gamma_catalan_formula(&poly(&[1, 4, 1], 2), 1), int(2));
    assert_eq!(gamma_catalan_formula(&poly(&[1, 1, 1], 2), 2), int(0));
    assert_eq!(gamma_catalan_formula(&poly(&[9, 1, 5], 2), 0), int(9));

    assert_eq!(
        gamma_derivative_formula(&poly(&[1, 4, 1], 2), 1).unwrap(),
        int(2)
    );
    assert_eq!(
        gamma_derivative_formula(&poly(&[3, 3, 1], 2), 1).unwrap(),
        int(-3)
    );
    assert_eq!(
        gamma_derivative_formula(&poly(&[1, 11, 11, 1], 3), 1).unwrap(),
        int(8)
    );

    let m = gamma_matrix(2, 1);
    assert_eq!(m.rows, vec![ints(&[1, 0, 0]), ints(&[-2, 1, 0])]);
    assert_eq!(m.apply(&poly(&[1, 4, 1], 2)).unwrap(), ints(&[1, 2]));

    let back = |e: &[i64], n: usize| {
        h_from_gamma(&GammaVector {
            entries: ints(e),
            formal_degree: n,
            extended: false,
        })
        .unwrap()
    };
    assert_eq!(back(&[1, 2], 2).coeffs(), ints(&[1, 4, 1]));
    assert_eq!(back(&[1, 0, 0], 4).coeffs(), ints(&[1, 4, 6, 4, 1]));
    assert_eq!(back(&[1, -1], 2).coeffs(), ints(&[1, 1, 1]));
}

fn triangle() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[vec!["1", "2"], vec!["1", "3"], vec!["2", "3"]]).unwrap()
}

fn tetrahedron() -> SimplicialComplex {
    SimplicialComplex::simplex_boundary(4)
}

#[test]
fn face_vectors_and_links() {
    let fh = f_vector(&triangle());
    assert_eq!((fh.f, fh.h), (ints(&[1, 3, 3]), ints(&[1, 1, 1])));
    let vertex = SimplicialComplex::from_facets(&[vec!["v"]]).unwrap();
    let fh = f_vector(&vertex);
    assert_eq!((fh.f, fh.h), (ints(&[1, 1]), ints(&[1, 0])));
    let fh = f_vector(&tetrahedron());
    assert_eq!((fh.f, fh.h), (ints(&[1, 4, 6, 4]), ints(&[1, 1, 1, 1])));

    let facets = |k: &SimplicialComplex| k.to_json().facets;
    let strings = |f: &[&[&str]]| -> Vec<Vec<String>> {
        f.iter()
            .map(|v| v.iter().map(|s| s.to_string()).collect())
            .collect()
    };
    let lk = link(&triangle(), &["1"]).unwrap();
    assert_eq!(facets(&lk), strings(&[&["2"], &["3"]]));
    assert_eq!(
        facets(&link(&triangle(), &[] as &[&str]).unwrap()),
        facets(&triangle())
    );
    let lk = link(&tetrahedron(), &["1"]).unwrap();
    assert_eq!(
        facets(&lk),
        strings(&[&["2", "3"], &["2", "4"], &["3", "4"]])
    );
}

#[test]
fn link_identities() {
    let edge = SimplicialComplex::from_facets(&[vec!["1", "2"]]).unwrap();
    for k in [triangle(), tetrahedron(), edge] {
        assert!(verify_link_f_identity(&k).holds);
        assert!(verify_h_link_identity(&k).holds);
    }
}

#[test]
fn realizability_and_decomposition() {
    assert!(fhex_realizable(&FHVectors::from_f(ints(&[1, 3, 3])).unwrap()).unwrap());
    assert!(!fhex_realizable(&FHVectors::from_f(ints(&[1, 1, 0])).unwrap()).unwrap());
    for n in 2..=7 {
        assert!(fhex_realizable(&f_vector(&SimplicialComplex::simplex_boundary(n))).unwrap());
    }

    for variant in [AuxVariant::Part1, AuxVariant::Part2] {
        let dec = gamauxpo_decompose(&ints(&[3, 3, 1]), 2, 1, variant).unwrap();
        assert_eq!(dec.r_gamma_r, int(-3));
        assert_eq!(dec.recombine(), int(-3));
        let dec = gamauxpo_decompose(&ints(&[0; 9]), 8, 3, variant).unwrap();
        assert_eq!(dec.recombine(), int(0));
    }
}

#[test]
fn sign_classifiers() {
    assert_eq!(shiftgam_gamma(&ints(&[1, 1, 1]), 2, 1).unwrap(), int(-3));
    assert_eq!(shiftgam_gamma(&ints(&[1, 2, 1]), 2, 1).unwrap(), int(-4));
    assert_eq!(
        shiftgam_gamma(&ints(&[1, 0, 0, 0, 0, 0]), 5, 2).unwrap(),
        int(0)
    );

    let c = shiftgam_classify(&ints(&[1, 1, 1]), 2, 1).unwrap();
    assert_eq!((c.claimed_sign, c.witness), (Sign::Nonpositive, int(-3)));
    let c = shiftgam_classify(&ints(&[1, 5, 5, 1]), 3, 1).unwrap();
    assert!(matches!(
        c.claimed_sign,
        Sign::Negative | Sign::Nonpositive | Sign::Zero
    ));

    assert_eq!(ftypesum_gamma(&ints(&[3, 3, 1]), 2, 1).unwrap(), int(-3));
    assert_eq!(
        ftypesum_gamma(&ints(&[0, 0, 0, 0, 0]), 4, 2).unwrap(),
        int(0)
    );

    let r = alternating_sum_sign(&ints(&[1, 2, 3]), Monotonicity::Increasing, 0).unwrap();
    assert_eq!((r.claimed, r.sum), (Sign::Positive, int(2)));
    let r = alternating_sum_sign(&ints(&[3, 2, 1]), Monotonicity::Decreasing, 0).unwrap();
    assert_eq!((r.claimed, r.sum), (Sign::Positive, int(2)));
    let r = alternating_sum_sign(&ints(&[1, 1]), Monotonicity::Increasing, 0).unwrap();
    assert_eq!((r.guaranteed, r.sum), (Sign::Nonpositive, int(0)));

    let c = boundgam_classify(&ints(&[1, -1, 1, -1, 1]), 4, 1).unwrap();
    assert_eq!((c.claimed_sign, c.witness), (Sign::Negative, int(-5)));
}

#[test]
fn volume_examples() {
    let s = |a: &[i64]| IntersectionSequence::new(ints(a)).unwrap();
    assert_eq!(volume_polynomial(&s(&[1, 2, 4])).coeffs(), ints(&[1, 4, 4]));
    assert_eq!(
        volume_polynomial(&s(&[1, 1, 1, 1])).coeffs(),
        ints(&[1, 3, 3, 1])
    );
    assert_eq!(volume_q(&s(&[1, 2, 4])).q(), ints(&[2, 4]));
    assert_eq!(volume_q(&s(&[-1, 1, -1])).q(), ints(&[4, -4]));
    assert_eq!(volume_q(&s(&[7, 7, 7, 7])).q(), ints(&[0, 0, 0]));
    assert_eq!(volume_gamma(&s(&[1, 2, 4]), 1).unwrap(), int(2));
    assert_eq!(volume_gamma(&s(&[-1, 1, -1]), 1).unwrap(), int(4));
    assert_eq!(
        volume_gamma(&s(&[1, 5, 25, 125, 625]), 2).unwrap(),
        int(112)
    );

    let c = constant_ratio_classify(&int(5), &int(1), 4, 2).unwrap();
    assert_eq!((c.claimed_sign, c.witness), (Sign::Positive, int(112)));
    let c = constant_ratio_classify(&int(-1), &int(-1), 2, 1).unwrap();
    assert_eq!((c.claimed_sign, c.witness), (Sign::Positive, int(4)));
    let c = constant_ratio_classify(&int(0), &int(1), 4, 2).unwrap();
    assert_eq!(c.witness, volume_gamma(&s(&[1, 0, 0, 0, 0]), 2).unwrap());
    assert!(c.is_consistent() && !c.is_unknown());

    let r = log_concave_check(&ints(&[1, 2, 4]), None);
    assert!(r.log_concave && r.equality);
    let r = log_concave_check(&ints(&[1, 3, 4, 3, 1]), None);
    assert!(r.log_concave && !r.equality);
    let r = log_concave_check(&ints(&[1, 1, 3]), None);
    assert_eq!((r.log_concave, r.first_violation), (false, Some(1)));
}
