mod common;

use common::{adaptive_simpson, midpoint_f64, niven_sin_integral, rel_err, to_f64};
use irratio::numbers::{int, rat};
use irratio::pi_engine::pi_by_cos_root;
use irratio::polynomials::{niven_poly, Poly};
use irratio::trigpoly::{antiderivative_p_sin, definite_01, lift, pirat_eval_interval, PiRat};
use irratio::witness::{pi_witness, Limits};

#[test]
fn oracle_sanity() {
    let f = |x: f64| (std::f64::consts::PI * x).sin();
    assert!((adaptive_simpson(&f, 0.0, 1.0, 1e-14) - 2.0 / std::f64::consts::PI).abs() < 1e-12);
    let g = |x: f64| x * x * x;
    assert!((adaptive_simpson(&g, 0.0, 2.0, 1e-14) - 4.0).abs() < 1e-12);
}

#[test]
fn niven_integrals_match_quadrature() {
    let pi = pi_by_cos_root(30).unwrap().value;
    for n in 1..=6 {
        let exact = definite_01(&antiderivative_p_sin(&lift(&niven_poly(n))));
        let enc = pirat_eval_interval(&exact, &pi).unwrap();
        assert!(to_f64(&enc.width()) < 1e-20);
        let quad = niven_sin_integral(n);
        let diff = (midpoint_f64(&enc) - quad).abs();
        assert!(diff < 1e-10, "n={n}: exact {} vs quadrature {quad}", midpoint_f64(&enc));
    }
}

#[test]
fn simple_integrals_match_quadrature() {
    let pi = pi_by_cos_root(30).unwrap().value;
    let x = Poly::monomial(PiRat::from_rational(rat(1, 1)), 1);
    let exact = definite_01(&antiderivative_p_sin(&x));
    assert_eq!(exact, PiRat::pi_pow(-1));
    let quad = adaptive_simpson(&|t: f64| t * (std::f64::consts::PI * t).sin(), 0.0, 1.0, 1e-15);
    let enc = pirat_eval_interval(&exact, &pi).unwrap();
    assert!((midpoint_f64(&enc) - quad).abs() < 1e-10);
}

#[test]
fn ten_over_one_witness_matches_quadrature() {
    let r = pi_witness(&int(10), &int(1), None, &Limits::default()).unwrap();
    assert_eq!(r.n, 26);
    let quad = std::f64::consts::PI * 1e26 * niven_sin_integral(26);
    let mid = midpoint_f64(&r.i_enclosure);
    assert!(rel_err(mid, quad) < 1e-8, "I midpoint {mid} vs quadrature {quad}");
}
