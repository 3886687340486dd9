//! Series whose coefficients are graded polynomials, exercised through the
//! public API only.

use chern_inversion::chern::cpn_normal_gf;
use chern_inversion::graded::int_poly;
use chern_inversion::inversion::{generic_unit_series, mult_inversion_polynomial, Route};
use chern_inversion::partition::partitions_of;
use chern_inversion::{ExactRational, IntPoly, Partition, TruncatedSeries};
use num_bigint::BigInt;

fn rat(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p.into(), q.into())
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn product_of_polynomial_series() {
    // (1 + t1 x)(1 - t1 x + t1^2 x^2) = 1 + t1^3 x^3 ≡ 1 mod x^3
    let t1 = IntPoly::var(1);
    let f = TruncatedSeries::from_coeffs(2, [IntPoly::one(), t1.clone()]).unwrap();
    let g = TruncatedSeries::from_coeffs(2, [IntPoly::one(), t1.neg_poly(), t1.mul_poly(&t1)]).unwrap();
    assert_eq!(f.mul(&g).unwrap(), TruncatedSeries::one(2));
}

#[test]
fn reciprocal_gives_truncated_m3() {
    let z = |k| IntPoly::var(k);
    let a = TruncatedSeries::from_coeffs(3, [IntPoly::one(), z(1), z(2)]).unwrap();
    let c3 = a.recip().unwrap().coeff(3).unwrap().clone();
    assert_eq!(c3, int_poly(&[(2, &[2, 1]), (-1, &[1, 1, 1])]));
    let m3 = mult_inversion_polynomial(3, Route::Recursive).unwrap().polynomial;
    assert_eq!(c3, m3.add_poly(&IntPoly::var(3)));
}

#[test]
fn tangent_numbers_of_the_projective_plane() {
    let cube = generic_unit_series(2, 2).pow(3).unwrap();
    assert_eq!(*cube.coeff(2).unwrap(), int_poly(&[(3, &[2]), (3, &[1, 1])]));
}

#[test]
fn lagrange_formula_at_a_point() {
    // f = x + x^2: [x^2] (x/f)^3 = 6 and b_2 = 2
    let x_over_f = TruncatedSeries::from_coeffs(2, [BigInt::from(1), BigInt::from(1)]).unwrap().recip().unwrap();
    assert_eq!(*x_over_f.pow(3).unwrap().coeff(2).unwrap(), BigInt::from(6));
    let f = TruncatedSeries::from_coeffs(3, [0, 1, 1].map(BigInt::from)).unwrap();
    assert_eq!(*f.comp_inverse().unwrap().coeff(3).unwrap(), BigInt::from(2));
}

#[test]
fn exponential_rescaling() {
    let m3 = mult_inversion_polynomial(3, Route::Determinant).unwrap().polynomial;
    let hat = m3
        .to_rational()
        .substitute_scaled(|k| rat(1, 1) / ExactRational::from_integer(factorial(k)))
        .scale(&rat(6, 1))
        .to_integral()
        .unwrap();
    assert_eq!(hat, int_poly(&[(-1, &[3]), (6, &[2, 1]), (-6, &[1, 1, 1])]));
    assert_eq!(m3.to_rational().substitute_scaled(|_| rat(1, 1)), m3.to_rational());
    // t_k ↦ c^k t_k multiplies a weight-n polynomial by c^n
    let m4 = mult_inversion_polynomial(4, Route::Recursive).unwrap().polynomial.to_rational();
    for c in 1..=4i64 {
        let scaled = m4.substitute_scaled(|k| rat(c.pow(k), 1));
        assert_eq!(scaled, m4.scale(&rat(c.pow(4), 1)));
    }
}

#[test]
fn normal_numbers_of_cp4() {
    let gf = cpn_normal_gf(4).unwrap();
    assert_eq!(gf.gcd_coefficients().unwrap(), BigInt::from(5));
    assert_eq!(gf.to_string(), "-5*t4 + 30*t1*t3 + 15*t2^2 - 105*t1^2*t2 + 70*t1^4");
    assert_eq!(IntPoly::zero().gcd_coefficients().unwrap(), BigInt::from(0));
}

#[test]
fn partition_order_matches_polynomial_order() {
    let order: Vec<Partition> = partitions_of(4);
    let gf = cpn_normal_gf(4).unwrap();
    let keys: Vec<&Partition> = gf.terms().map(|(p, _)| p).collect();
    assert!(keys.iter().copied().eq(order.iter()));
    assert_eq!(
        order.iter().map(ToString::to_string).collect::<Vec<_>>(),
        ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]
    );
}
