//! Logarithm and exponential of the formal group of complex cobordism,
//! written in the theta generators `θ_j = [Θ^j]`.
//!
//! The exponential is `β(z) = z + Σ θ_n z^(n+1) / (n+1)!`. Its compositional
//! inverse is the logarithm `α(u) = u + Σ [CP^n] u^(n+1) / (n+1)`, which gives
//! the class of every projective space as a rational combination of products
//! of theta divisors. Any complex manifold decomposes the same way from its
//! normal Chern numbers: `[M^n] = Σ_λ c^ν_λ(M) θ_λ / (λ+1)!`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::chern::{cpn_record, ChernRecord, Convention};
use crate::graded::{RatPoly, ThetaExpression};
use crate::inversion::{lagrange_polynomial, Route};
use crate::partition::Partition;
use crate::ring::factorial;
use crate::series::TruncatedSeries;
use crate::{Error, Result};

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("order must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn inverse_factorial(n: u32) -> BigRational {
    BigRational::new(BigInt::from(1), factorial(n))
}

/// `β(z) = z + Σ_{n<=N} θ_n z^(n+1) / (n+1)!`, truncated at `z^(N+2)`.
pub fn theta_exponential(max_n: usize) -> Result<TruncatedSeries<ThetaExpression>> {
    require_positive(max_n)?;
    let coeffs = [ThetaExpression::zero(), ThetaExpression::one()]
        .into_iter()
        .chain((1..=max_n as u32).map(|n| ThetaExpression::var(n).scale(&inverse_factorial(n + 1))));
    TruncatedSeries::from_coeffs(max_n + 1, coeffs)
}

/// The logarithm `α = β^(-1)` as a series, truncated at `u^(N+2)`.
pub fn mischenko_series(max_n: usize) -> Result<TruncatedSeries<ThetaExpression>> {
    theta_exponential(max_n)?.comp_inverse()
}

/// `[CP^1], ..., [CP^N]` in theta generators: entry `n - 1` is `(n+1)` times
/// the coefficient of `u^(n+1)` in the logarithm.
pub fn mischenko_logarithm(max_n: usize) -> Result<Vec<ThetaExpression>> {
    let alpha = mischenko_series(max_n)?;
    (1..=max_n)
        .map(|n| {
            let c = alpha.coeff(n + 1)?;
            Ok(c.scale(&BigRational::from_integer(BigInt::from(n + 1))))
        })
        .collect()
}

/// `(n+1)·L_n(τ_1, ..., τ_n)` with `τ_k = θ_k / (k+1)!`.
pub fn lagrange_in_theta(n: usize) -> Result<ThetaExpression> {
    let l = lagrange_polynomial(n, Route::Recursive)?.polynomial;
    let expr: RatPoly = l
        .to_rational()
        .substitute_scaled(|k| inverse_factorial(k + 1))
        .scale(&BigRational::from_integer(BigInt::from(n + 1)));
    Ok(expr.into_namespace())
}

/// `Σ_λ c^ν_λ θ_λ / (λ+1)!` for a complete normal-convention record.
pub fn decompose_in_theta(record: &ChernRecord) -> Result<ThetaExpression> {
    if !record.complete {
        return Err(Error::Incomplete(record.name.clone()));
    }
    if record.convention != Convention::Normal {
        return Err(Error::ConventionMismatch(format!(
            "decomposition needs normal numbers, {} has {} numbers",
            record.name, record.convention
        )));
    }
    Ok(ThetaExpression::from_terms(
        record
            .numbers
            .iter()
            .map(|(lambda, c)| (lambda.clone(), BigRational::new(c.clone(), factorial_of_shifted(lambda)))),
    ))
}

/// `(λ+1)! = ∏ (λ_i + 1)!`.
pub fn factorial_of_shifted(lambda: &Partition) -> BigInt {
    lambda.parts().iter().map(|&k| factorial(k + 1)).product()
}

/// For every `n <= N`, the logarithm's `[CP^n]` agrees with the normal-number
/// decomposition of `CP^n` and with `(n+1) L_n(τ)`.
pub fn consistency_check(max_n: usize) -> Result<bool> {
    let log = mischenko_logarithm(max_n)?;
    for (i, from_log) in log.iter().enumerate() {
        let n = i + 1;
        let decomposed = decompose_in_theta(&cpn_record(n, Convention::Normal)?)?;
        if *from_log != decomposed || *from_log != lagrange_in_theta(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::theta_record;
    use crate::ring::rational;
    use num_integer::Integer;

    fn theta(terms: &[((i64, i64), &[u32])]) -> ThetaExpression {
        ThetaExpression::from_terms(
            terms.iter().map(|&((p, q), parts)| (Partition::new(parts.to_vec()).unwrap(), rational(p, q))),
        )
    }

    #[test]
    fn exponential_coefficients() {
        let beta = theta_exponential(2).unwrap();
        assert_eq!(beta.order(), 3);
        assert_eq!(beta.coeff(1).unwrap(), &ThetaExpression::one());
        assert_eq!(beta.coeff(2).unwrap(), &theta(&[((1, 2), &[1])]));
        assert_eq!(beta.coeff(3).unwrap(), &theta(&[((1, 6), &[2])]));
        assert_eq!(theta_exponential(4).unwrap().coeff(5).unwrap(), &theta(&[((1, 120), &[4])]));
    }

    #[test]
    fn projective_line_and_plane() {
        let log = mischenko_logarithm(2).unwrap();
        assert_eq!(log[0], theta(&[((-1, 1), &[1])]));
        assert_eq!(log[1], theta(&[((-1, 2), &[2]), ((3, 2), &[1, 1])]));
    }

    #[test]
    fn log_and_exp_are_inverse() {
        let beta = theta_exponential(10).unwrap();
        let alpha = mischenko_series(10).unwrap();
        let z = TruncatedSeries::x(11);
        assert_eq!(alpha.compose(&beta).unwrap(), z);
        assert_eq!(beta.compose(&alpha).unwrap(), z);
    }

    #[test]
    fn decompositions() {
        let cp2 = cpn_record(2, Convention::Normal).unwrap();
        assert_eq!(decompose_in_theta(&cp2).unwrap(), theta(&[((-1, 2), &[2]), ((3, 2), &[1, 1])]));
        for n in 1..=5 {
            let rec = theta_record(n, 1, Convention::Normal).unwrap();
            assert_eq!(decompose_in_theta(&rec).unwrap(), ThetaExpression::var(n as u32));
        }
        let theta2_2 = theta_record(2, 2, Convention::Normal).unwrap();
        assert_eq!(decompose_in_theta(&theta2_2).unwrap(), theta(&[((8, 1), &[2])]));
        let tangent = cpn_record(2, Convention::Tangent).unwrap();
        assert!(matches!(decompose_in_theta(&tangent), Err(Error::ConventionMismatch(_))));
    }

    #[test]
    fn consistency() {
        for n in [1, 4, 8] {
            assert!(consistency_check(n).unwrap(), "N={n}");
        }
    }

    #[test]
    fn grading_and_denominators() {
        let beta = theta_exponential(8).unwrap();
        let alpha = mischenko_series(8).unwrap();
        for n in 1..=8 {
            assert_eq!(beta.coeff(n + 1).unwrap().homogeneous_weight(), Some(n));
            assert_eq!(alpha.coeff(n + 1).unwrap().homogeneous_weight(), Some(n));
        }
        for (i, expr) in mischenko_logarithm(8).unwrap().iter().enumerate() {
            let lcm = crate::partition::partitions_of(i + 1)
                .iter()
                .map(factorial_of_shifted)
                .fold(BigInt::from(1), |acc, f| acc.lcm(&f));
            for (_, c) in expr.terms() {
                assert!(lcm.is_multiple_of(c.denom()), "n={} c={c}", i + 1);
            }
        }
    }
}
