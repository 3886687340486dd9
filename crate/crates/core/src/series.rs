//! Truncated power series in one variable.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients `c_0..=c_N` of a
//! power series modulo `x^(N+1)`. Binary operations require both operands to
//! carry the same order; there is no implicit re-truncation.

use std::fmt;

use crate::ring::Ring;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series of the given order from leading coefficients, padding
    /// with zeros. Fails if more than `order + 1` coefficients are supplied.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = R>) -> Result<Self> {
        let mut coeffs: Vec<R> = coeffs.into_iter().collect();
        if coeffs.len() > order + 1 {
            return Err(Error::IndexOutOfRange { index: coeffs.len() - 1, order });
        }
        coeffs.resize(order + 1, R::zero());
        Ok(TruncatedSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, R::one())
    }

    /// The series variable `x` (which is `0` at order 0).
    pub fn x(order: usize) -> Self {
        Self::monomial(order, 1, R::one())
    }

    /// `c * x^degree`, or zero when `degree` exceeds the order.
    pub fn monomial(order: usize, degree: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `[x^n]` of the series.
    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange { index: n, order: self.order() })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &R) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Cauchy product modulo `x^(N+1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let order = self.order();
        let mut out = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse of a series with constant term 1, via
    /// `q_0 = 1`, `q_n = -sum_{k=1..n} a_k q_{n-k}`.
    pub fn recip(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotUnit);
        }
        let order = self.order();
        let mut q: Vec<R> = Vec::with_capacity(order + 1);
        q.push(R::one());
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc = acc.add(&a.mul(&q[n - k]));
                }
            }
            q.push(acc.neg());
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// `self(inner(x))` modulo `x^(N+1)`, by Horner evaluation.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        let order = self.order();
        let mut acc = Self::monomial(order, 0, self.coeffs[order].clone());
        for c in self.coeffs[..order].iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Compositional inverse `g` of `f = x + O(x^2)`: `g(f(x)) = x` modulo
    /// `x^(N+1)`.
    ///
    /// With `g = sum b_k x^k` and `b_1 = 1`, the coefficient of `x^m` in
    /// `g(f(x))` is `sum_{k<=m} b_k [x^m] f^k` and `[x^m] f^m = 1`, so each
    /// `b_m` is fixed by the lower ones.
    pub fn comp_inverse(&self) -> Result<Self> {
        let order = self.order();
        if order == 0 {
            return if self.coeffs[0].is_zero() { Ok(self.clone()) } else { Err(Error::NotNormalized) };
        }
        if !self.coeffs[0].is_zero() || !self.coeffs[1].is_one() {
            return Err(Error::NotNormalized);
        }
        // powers[k] = f^k
        let mut powers: Vec<Self> = Vec::with_capacity(order + 1);
        powers.push(Self::one(order));
        for k in 1..=order {
            let next = powers[k - 1].mul_unchecked(self);
            powers.push(next);
        }
        let mut b = vec![R::zero(); order + 1];
        b[1] = R::one();
        for m in 2..=order {
            let mut acc = R::zero();
            for (k, bk) in b.iter().enumerate().take(m).skip(1) {
                let c = &powers[k].coeffs[m];
                if !bk.is_zero() && !c.is_zero() {
                    acc = acc.add(&bk.mul(c));
                }
            }
            b[m] = acc.neg();
        }
        Ok(TruncatedSeries { coeffs: b })
    }

    /// `self^k`. Negative exponents go through [`recip`](Self::recip) and
    /// require a unit constant term.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul_unchecked(&square);
            }
        }
        Ok(result)
    }

    /// Divides by `x`, lowering the order by one. The constant term must vanish.
    pub fn div_x(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant);
        }
        if self.order() == 0 {
            return Err(Error::InvalidArgument("cannot divide an order-0 series by x".into()));
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[1..].to_vec() })
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::IndexOutOfRange { index: order, order: self.order() });
        }
        Ok(TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Ring + fmt::Display> fmt::Display for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int(order: usize, cs: &[i64]) -> TruncatedSeries<BigInt> {
        TruncatedSeries::from_coeffs(order, cs.iter().map(|&c| BigInt::from(c))).unwrap()
    }

    #[test]
    fn add_cancels_and_has_identity() {
        assert_eq!(int(2, &[1, 1]).add(&int(2, &[1, -1])).unwrap(), int(2, &[2]));
        let a = int(3, &[4, 0, -2, 7]);
        assert_eq!(a.add(&TruncatedSeries::zero(3)).unwrap(), a);
        assert_eq!(int(2, &[0, 1, 1]).add(&int(2, &[0, 1, -1])).unwrap(), int(2, &[0, 2]));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = int(2, &[1]).add(&int(3, &[1])).unwrap_err();
        assert!(matches!(err, Error::OrderMismatch { left: 2, right: 3 }));
        assert!(int(2, &[1]).mul(&int(3, &[1])).is_err());
        assert!(int(2, &[0, 1]).compose(&int(3, &[0, 1])).is_err());
    }

    #[test]
    fn products() {
        assert_eq!(int(2, &[1, 1]).mul(&int(2, &[1, -1])).unwrap(), int(2, &[1, 0, -1]));
        assert_eq!(int(2, &[1, 1]).pow(2).unwrap(), int(2, &[1, 2, 1]));
    }

    #[test]
    fn reciprocals() {
        assert_eq!(int(4, &[1, 1]).recip().unwrap(), int(4, &[1, -1, 1, -1, 1]));
        let a = int(5, &[1, 2, 3]);
        assert_eq!(a.recip().unwrap().recip().unwrap(), a);
        assert!(matches!(int(3, &[2, 1]).recip(), Err(Error::NotUnit)));
        assert!(matches!(int(3, &[0, 1]).pow(-1), Err(Error::NotUnit)));
    }

    #[test]
    fn composition() {
        let sq = int(4, &[0, 0, 1]);
        assert_eq!(sq.compose(&int(4, &[0, 1, 0, 1])).unwrap(), int(4, &[0, 0, 1, 0, 2]));
        let a = int(4, &[3, -1, 4, 1, -5]);
        assert_eq!(a.compose(&TruncatedSeries::x(4)).unwrap(), a);
        assert!(matches!(a.compose(&int(4, &[1, 1])), Err(Error::NonZeroConstant)));
    }

    #[test]
    fn inverse_of_x_plus_x_squared_is_signed_catalan() {
        let f = int(5, &[0, 1, 1]);
        let g = f.comp_inverse().unwrap();
        assert_eq!(g, int(5, &[0, 1, -1, 2, -5, 14]));
        assert_eq!(g.compose(&f).unwrap(), TruncatedSeries::x(5));
        assert_eq!(TruncatedSeries::<BigInt>::x(5).comp_inverse().unwrap(), TruncatedSeries::x(5));
    }

    #[test]
    fn inverse_of_x_plus_x_cubed_matches_fixed_point_oracle() {
        // g = x - g^3 iterated from g = x settles one degree pair per step.
        let order = 7;
        let mut g = vec![0i64; order + 1];
        g[1] = 1;
        for _ in 0..order {
            let mut cube = vec![0i64; order + 1];
            let mut sq = vec![0i64; order + 1];
            for i in 0..=order {
                for j in 0..=order - i {
                    sq[i + j] += g[i] * g[j];
                }
            }
            for i in 0..=order {
                for j in 0..=order - i {
                    cube[i + j] += sq[i] * g[j];
                }
            }
            let mut next = vec![0i64; order + 1];
            next[1] = 1;
            for k in 0..=order {
                next[k] -= cube[k];
            }
            g = next;
        }
        assert_eq!(g[5], 3);
        let inverse = int(order, &[0, 1, 0, 1]).comp_inverse().unwrap();
        assert_eq!(inverse, int(order, &g));
        assert_eq!(inverse.coeff(5).unwrap(), &BigInt::from(3));
    }

    #[test]
    fn comp_inverse_preconditions() {
        assert!(matches!(int(3, &[1, 1]).comp_inverse(), Err(Error::NotNormalized)));
        assert!(matches!(int(3, &[0, 2]).comp_inverse(), Err(Error::NotNormalized)));
    }

    #[test]
    fn coefficient_extraction() {
        let binom = int(4, &[1, 1]).pow(4).unwrap();
        assert_eq!(binom.coeff(2).unwrap(), &BigInt::from(6));
        assert!(matches!(binom.coeff(5), Err(Error::IndexOutOfRange { index: 5, order: 4 })));
        // (x / (x + x^2))^3 = (1 + x)^-3
        let f = int(3, &[0, 1, 1]);
        let h = f.div_x().unwrap().pow(-3).unwrap();
        assert_eq!(h.coeff(2).unwrap(), &BigInt::from(6));
        assert_eq!(int(3, &[1, 9, 9]).recip().unwrap().coeff(0).unwrap(), &BigInt::from(1));
    }

    #[test]
    fn powers() {
        assert_eq!(int(3, &[1, 1]).pow(-1).unwrap(), int(3, &[1, -1, 1, -1]));
        let a = int(4, &[2, 3, 0, 1]);
        assert_eq!(a.pow(1).unwrap(), a);
        assert_eq!(a.pow(0).unwrap(), TruncatedSeries::one(4));
    }

    #[test]
    fn truncate_and_display() {
        let a = int(3, &[1, -2, 0, 5]);
        assert_eq!(a.truncate(1).unwrap(), int(1, &[1, -2]));
        assert!(a.truncate(4).is_err());
        assert_eq!(a.to_string(), "1 + (-2)*x + (5)*x^3 + O(x^4)");
    }

    fn series_strategy(unit: bool) -> impl Strategy<Value = TruncatedSeries<BigInt>> {
        (1usize..=10).prop_flat_map(move |order| {
            prop::collection::vec(-4i64..=4, order + 1).prop_map(move |mut cs| {
                if unit {
                    cs[0] = 1;
                }
                int(order, &cs)
            })
        })
    }

    fn same_order_triple() -> impl Strategy<Value = [TruncatedSeries<BigInt>; 3]> {
        (0usize..=8).prop_flat_map(|order| {
            prop::collection::vec(prop::collection::vec(-5i64..=5, order + 1), 3)
                .prop_map(move |v| [int(order, &v[0]), int(order, &v[1]), int(order, &v[2])])
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn unit_series_times_reciprocal_is_one(a in series_strategy(true)) {
            let one = TruncatedSeries::one(a.order());
            prop_assert_eq!(a.mul(&a.recip().unwrap()).unwrap(), one);
        }

        #[test]
        fn composition_inverse_is_two_sided(mut f in series_strategy(false)) {
            f.coeffs[0] = BigInt::from(0);
            f.coeffs[1] = BigInt::from(1);
            let g = f.comp_inverse().unwrap();
            let x = TruncatedSeries::x(f.order());
            prop_assert_eq!(g.compose(&f).unwrap(), x.clone());
            prop_assert_eq!(f.compose(&g).unwrap(), x);
        }

        #[test]
        fn powers_add_exponents(a in series_strategy(true), j in -3i64..=3, k in -3i64..=3) {
            let lhs = a.pow(j).unwrap().mul(&a.pow(k).unwrap()).unwrap();
            prop_assert_eq!(lhs, a.pow(j + k).unwrap());
        }

        #[test]
        fn ring_axioms([a, b, c] in same_order_triple()) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            let left = a.mul(&b.add(&c).unwrap()).unwrap();
            let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        }
    }
}
