//! Lagrange and multiplicative inversion polynomials, Hessenberg
//! determinants and partial ordinary Bell polynomials.
//!
//! All families live in the single variable family `t_1, t_2, ...`:
//!
//! * `L_n` is the coefficient of `y^(n+1)` in the compositional inverse of
//!   `f(x) = x + Σ t_k x^(k+1)`;
//! * `M_n` is the coefficient of `x^n` in `1 / (1 + Σ t_k x^k)`;
//! * `ĥM_n = n!·M_n(t_k ↦ t_k / k!)` is the exponential variant, the
//!   coefficient of `x^n/n!` in `1 / (1 + Σ t_k x^k / k!)`;
//! * `ĥB_{n,k}` is the coefficient of `x^n` in `(Σ t_m x^m)^k`.
//!
//! `L_n` and `M_n` can each be computed along two routes that share no code
//! beyond the series engine, and are memoized per process.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::graded::{IntPoly, RatPoly};
use crate::ring::{factorial, Ring};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Route {
    /// Series inversion: compositional inverse for `L_n`, reciprocal for `M_n`.
    Recursive,
    /// `(n+1) L_n = [x^n] (x/f(x))^(n+1)`.
    DirectFormula,
    /// `M_n = (-1)^n det H_n` with `H_n` the lower Hessenberg matrix.
    Determinant,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Recursive => "recursive",
            Route::DirectFormula => "direct-formula",
            Route::Determinant => "determinant",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InversionResult {
    pub n: usize,
    pub polynomial: IntPoly,
    pub route: Route,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Family {
    Lagrange,
    Multiplicative,
}

type Memo = RwLock<HashMap<(Family, usize, Route), IntPoly>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn memoized(family: Family, n: usize, route: Route, compute: impl FnOnce() -> Result<IntPoly>) -> Result<IntPoly> {
    let key = (family, n, route);
    if let Some(p) = memo().read().expect("memo lock poisoned").get(&key) {
        return Ok(p.clone());
    }
    let p = compute()?;
    memo().write().expect("memo lock poisoned").insert(key, p.clone());
    Ok(p)
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("weight must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `1 + t_1 x + ... + t_n x^n` truncated at `order`.
pub fn generic_unit_series(n: usize, order: usize) -> TruncatedSeries<IntPoly> {
    let coeffs = std::iter::once(IntPoly::one()).chain((1..=n.min(order)).map(|k| IntPoly::var(k as u32)));
    TruncatedSeries::from_coeffs(order, coeffs).expect("fits by construction")
}

/// `f(x) = x + t_1 x^2 + ... + t_n x^(n+1)` truncated at `x^(n+2)`.
pub fn generic_normalized_series(n: usize) -> TruncatedSeries<IntPoly> {
    let coeffs = [IntPoly::zero(), IntPoly::one()].into_iter().chain((1..=n).map(|k| IntPoly::var(k as u32)));
    TruncatedSeries::from_coeffs(n + 1, coeffs).expect("fits by construction")
}

/// The Lagrange inversion polynomial `L_n`.
pub fn lagrange_polynomial(n: usize, route: Route) -> Result<InversionResult> {
    require_positive(n)?;
    let polynomial = match route {
        Route::Recursive => memoized(Family::Lagrange, n, route, || {
            let g = generic_normalized_series(n).comp_inverse()?;
            Ok(g.coeff(n + 1)?.clone())
        })?,
        Route::DirectFormula => memoized(Family::Lagrange, n, route, || {
            let x_over_f = generic_normalized_series(n).div_x()?.recip()?;
            let scaled = x_over_f.pow(n as i64 + 1)?.coeff(n)?.clone();
            scaled.div_exact(&BigInt::from(n + 1))
        })?,
        Route::Determinant => {
            return Err(Error::InvalidArgument("L_n has no determinant route".into()));
        }
    };
    Ok(InversionResult { n, polynomial, route })
}

/// The multiplicative inversion polynomial `M_n`.
pub fn mult_inversion_polynomial(n: usize, route: Route) -> Result<InversionResult> {
    require_positive(n)?;
    let polynomial = match route {
        Route::Recursive => {
            memoized(Family::Multiplicative, n, route, || Ok(generic_unit_series(n, n).recip()?.coeff(n)?.clone()))?
        }
        Route::Determinant => memoized(Family::Multiplicative, n, route, || {
            let z: Vec<IntPoly> = (1..=n as u32).map(IntPoly::var).collect();
            let det = hessenberg_determinant(&z)?;
            Ok(if n % 2 == 0 { det } else { det.neg() })
        })?,
        Route::DirectFormula => {
            return Err(Error::InvalidArgument("M_n has no direct-formula route".into()));
        }
    };
    Ok(InversionResult { n, polynomial, route })
}

/// Determinant of the `n×n` lower Hessenberg matrix with `z_1` on the
/// diagonal, `z_{i-j+1}` below it and `1` on the superdiagonal.
///
/// Expanding along the last row gives `D_n = Σ_{i=1..n} (-1)^(i-1) z_i D_{n-i}`
/// with `D_0 = 1`.
pub fn hessenberg_determinant<R: Ring>(z: &[R]) -> Result<R> {
    if z.is_empty() {
        return Err(Error::InvalidArgument("empty Hessenberg matrix".into()));
    }
    let mut d: Vec<R> = vec![R::one()];
    for m in 1..=z.len() {
        let mut acc = R::zero();
        for i in 1..=m {
            let term = z[i - 1].mul(&d[m - i]);
            acc = if i % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        d.push(acc);
    }
    Ok(d.pop().expect("non-empty"))
}

/// The partial ordinary Bell polynomial `ĥB_{n,k}`.
pub fn bell_partial(n: usize, k: usize) -> Result<IntPoly> {
    if k == 0 || n < k {
        return Err(Error::InvalidArgument(format!("need n >= k >= 1, got n={n}, k={k}")));
    }
    let coeffs = std::iter::once(IntPoly::zero()).chain((1..=n - k + 1).map(|m| IntPoly::var(m as u32)));
    let base = TruncatedSeries::from_coeffs(n, coeffs)?;
    Ok(base.pow(k as i64)?.coeff(n)?.clone())
}

/// Greatest common divisor of the coefficients of `ĥB_{n,k}`.
pub fn bell_gcd(n: usize, k: usize) -> Result<BigInt> {
    bell_partial(n, k)?.gcd_coefficients()
}

/// `k / gcd(n, k)`, the closed form for [`bell_gcd`].
pub fn bell_gcd_closed_form(n: usize, k: usize) -> usize {
    k / n.gcd(&k)
}

/// The exponential multiplicative inversion polynomial
/// `ĥM_n = n!·M_n(t_k ↦ t_k / k!)`, checked against the reciprocal of
/// `1 + Σ t_k x^k / k!`.
pub fn hat_mult_inversion(n: usize) -> Result<IntPoly> {
    let m = mult_inversion_polynomial(n, Route::Recursive)?.polynomial;
    let n_fact = BigRational::from_integer(factorial(n as u32));
    let scaled =
        m.to_rational().substitute_scaled(|k| BigRational::new(1.into(), factorial(k))).scale(&n_fact).to_integral()?;
    let by_series = hat_mult_inversion_by_series(n)?;
    if scaled != by_series {
        return Err(Error::RoutesDisagree(format!("hat M_{n}: {scaled} vs {by_series}")));
    }
    Ok(scaled)
}

/// `n!·[x^n] 1 / (1 + Σ t_k x^k / k!)`.
pub fn hat_mult_inversion_by_series(n: usize) -> Result<IntPoly> {
    require_positive(n)?;
    let coeffs = std::iter::once(RatPoly::one())
        .chain((1..=n as u32).map(|k| RatPoly::var(k).scale(&BigRational::new(1.into(), factorial(k)))));
    let p = TruncatedSeries::from_coeffs(n, coeffs)?;
    let q = p.recip()?.coeff(n)?.clone();
    q.scale(&BigRational::from_integer(factorial(n as u32))).to_integral()
}
