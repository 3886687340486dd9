//! Polynomials in weighted variables `t_1, t_2, ...` (`t_k` has weight `k`).
//!
//! A monomial `t_{λ_1}···t_{λ_k}` is identified with the partition `λ`, so a
//! polynomial is a finite map from partitions to coefficients with no zero
//! entries. The variable family is a type parameter: [`TVars`] for the
//! `t`-variables of generating functions and [`ThetaVars`] for the cobordism
//! generators `θ_j`, which keeps the two from being mixed by accident.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use crate::partition::Partition;
use crate::ring::{Ring, Scalar};
use crate::{Error, Result};

/// A family of weighted variables.
pub trait Namespace: Copy + Eq + Ord + fmt::Debug + Default + 'static {
    /// Tag used in serialized output.
    const NAME: &'static str;
    /// Prefix used when printing a variable, e.g. `t` in `t3`.
    const SYMBOL: &'static str;
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct TVars;

impl Namespace for TVars {
    const NAME: &'static str = "t";
    const SYMBOL: &'static str = "t";
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ThetaVars;

impl Namespace for ThetaVars {
    const NAME: &'static str = "theta";
    const SYMBOL: &'static str = "theta";
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedPoly<C, N = TVars> {
    terms: BTreeMap<Partition, C>,
    namespace: PhantomData<N>,
}

/// Integer polynomial in the `t`-variables; the default coefficient type.
pub type IntPoly = GradedPoly<BigInt, TVars>;
/// Rational polynomial in the `t`-variables.
pub type RatPoly = GradedPoly<BigRational, TVars>;
/// Rational combination of products `θ_λ = θ_{λ_1}···θ_{λ_k}`.
pub type ThetaExpression = GradedPoly<BigRational, ThetaVars>;

impl<C: Ring, N: Namespace> GradedPoly<C, N> {
    pub fn zero() -> Self {
        GradedPoly { terms: BTreeMap::new(), namespace: PhantomData }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The variable of weight `k`.
    pub fn var(k: u32) -> Self {
        Self::monomial(Partition::single(k), C::one())
    }

    pub fn monomial(partition: Partition, c: C) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(partition, c);
        }
        p
    }

    /// Sums the given terms; repeated partitions accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut p = Self::zero();
        for (lambda, c) in terms {
            p.add_term(lambda, &c);
        }
        p
    }

    fn add_term(&mut self, lambda: Partition, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in canonical order: weight ascending, reverse-lexicographic
    /// within a weight.
    pub fn terms(&self) -> btree_map::Iter<'_, Partition, C> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common weight of all terms; `Some(0)` for the zero polynomial and
    /// `None` when weights are mixed.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Partition::weight);
        match weights.next() {
            None => Some(0),
            Some(w) => weights.all(|v| v == w).then_some(w),
        }
    }

    /// The terms of weight exactly `w`.
    pub fn homogeneous_part(&self, w: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(lambda, _)| lambda.weight() == w)
            .map(|(lambda, c)| (lambda.clone(), c.clone()))
            .collect();
        GradedPoly { terms, namespace: PhantomData }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(l, a)| (l.clone(), a.mul(c))).collect();
        GradedPoly { terms, namespace: PhantomData }
    }

    /// Replaces every `t_k` by `scale(k)·t_k`, i.e. multiplies the term `t_λ`
    /// by `∏ scale(λ_i)`.
    pub fn substitute_scaled(&self, scale: impl Fn(u32) -> C) -> Self {
        Self::from_terms(self.terms.iter().map(|(lambda, c)| {
            let factor = lambda.parts().iter().fold(C::one(), |acc, &k| acc.mul(&scale(k)));
            (lambda.clone(), c.mul(&factor))
        }))
    }

    /// Evaluates the polynomial in a ring `R`, sending `t_k` to `var(k)` and
    /// each coefficient through `coeff`.
    pub fn eval<R: Ring>(&self, var: impl Fn(u32) -> R, coeff: impl Fn(&C) -> R) -> R {
        let mut total = R::zero();
        for (lambda, c) in &self.terms {
            let term = lambda.parts().iter().fold(coeff(c), |acc, &k| acc.mul(&var(k)));
            total = total.add(&term);
        }
        total
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> GradedPoly<D, N> {
        GradedPoly::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), f(c))))
    }

    /// The same terms read in another variable family.
    pub fn into_namespace<M: Namespace>(self) -> GradedPoly<C, M> {
        GradedPoly { terms: self.terms, namespace: PhantomData }
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c);
        }
        out
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.union(b), &ca.mul(cb));
            }
        }
        out
    }

    pub fn neg_poly(&self) -> Self {
        let terms = self.terms.iter().map(|(l, c)| (l.clone(), c.neg())).collect();
        GradedPoly { terms, namespace: PhantomData }
    }
}

impl<C: Scalar, N: Namespace> GradedPoly<C, N> {
    /// Greatest common divisor of the absolute values of all coefficients,
    /// `0` for the zero polynomial. Fails on a non-integral coefficient.
    pub fn gcd_coefficients(&self) -> Result<BigInt> {
        let mut g = <BigInt as Ring>::zero();
        for c in self.terms.values() {
            let n = c.to_integer().ok_or_else(|| Error::NonIntegral(c.to_string()))?;
            g = g.gcd(&n);
        }
        Ok(g.abs())
    }

    /// Prints with `symbol` in place of the namespace's variable prefix.
    pub fn display_with(&self, symbol: &str) -> String {
        let mut out = String::new();
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let vars = monomial_text(lambda, symbol);
            if vars.is_empty() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&vars);
            } else {
                out.push_str(&magnitude);
                out.push('*');
                out.push_str(&vars);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn monomial_text(lambda: &Partition, symbol: &str) -> String {
    let mut mults = lambda.multiplicities();
    mults.reverse();
    mults
        .iter()
        .map(|&(k, m)| if m == 1 { format!("{symbol}{k}") } else { format!("{symbol}{k}^{m}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl<N: Namespace> GradedPoly<BigInt, N> {
    /// Divides every coefficient by `d`, failing if any division is inexact.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        let inexact = || Error::InexactDivision { divisor: d.to_string() };
        if d.is_zero() {
            return Err(inexact());
        }
        let mut terms = BTreeMap::new();
        for (lambda, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(inexact());
            }
            terms.insert(lambda.clone(), q);
        }
        Ok(GradedPoly { terms, namespace: PhantomData })
    }

    pub fn to_rational(&self) -> GradedPoly<BigRational, N> {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl<N: Namespace> GradedPoly<BigRational, N> {
    /// The integer polynomial with the same coefficients, if they are all
    /// integral.
    pub fn to_integral(&self) -> Result<GradedPoly<BigInt, N>> {
        let mut terms = BTreeMap::new();
        for (lambda, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegral(c.to_string()));
            }
            terms.insert(lambda.clone(), c.to_integer());
        }
        Ok(GradedPoly { terms, namespace: PhantomData })
    }
}

impl<C: Scalar, N: Namespace> Ring for GradedPoly<C, N> {
    fn zero() -> Self {
        GradedPoly::zero()
    }
    fn one() -> Self {
        GradedPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_poly(other)
    }
    fn neg(&self) -> Self {
        self.neg_poly()
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_poly(other)
    }
    fn from_integer(n: &BigInt) -> Self {
        GradedPoly::constant(C::from_integer(n))
    }
}

impl<C: Scalar, N: Namespace> fmt::Display for GradedPoly<C, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(N::SYMBOL))
    }
}

impl<C: Scalar, N: Namespace> fmt::Debug for GradedPoly<C, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedPoly[{}]({})", N::NAME, self)
    }
}

/// Shorthand for building integer `t`-polynomials in tests and examples:
/// `int_poly(&[(-1, &[4]), (6, &[3, 1])])` is `-t4 + 6*t1*t3`.
pub fn int_poly(terms: &[(i64, &[u32])]) -> IntPoly {
    IntPoly::from_terms(
        terms.iter().map(|&(c, parts)| (Partition::new(parts.to_vec()).expect("positive parts"), BigInt::from(c))),
    )
}
