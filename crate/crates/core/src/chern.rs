//! Generating functions of monomial Chern numbers.
//!
//! For a complex manifold `M^n` the tangent generating function is
//! `C^τ(M, t) = Σ_{|λ|=n} c_λ(M) t_λ` and the normal one `C^ν` is defined the
//! same way from the stable normal bundle. Everything here is computed with
//! truncated series in one variable `x` whose coefficients are polynomials in
//! the `t`-variables: the cohomology ring of `CP^n` is `Z[x]/x^(n+1)`, and the
//! universal monomial class of a line bundle with first Chern class `a·x` is
//! `1 + Σ t_j a^j x^j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::graded::IntPoly;
use crate::inversion::{bell_partial, generic_unit_series, mult_inversion_polynomial, Route};
use crate::partition::{partitions_of, Partition};
use crate::ring::{factorial, Ring};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Convention {
    Tangent,
    Normal,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Tangent => "tangent",
            Convention::Normal => "normal",
        }
    }

    pub fn other(self) -> Convention {
        match self {
            Convention::Tangent => Convention::Normal,
            Convention::Normal => Convention::Tangent,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tangent" => Ok(Convention::Tangent),
            "normal" => Ok(Convention::Normal),
            other => Err(Error::InvalidArgument(format!("unknown convention {other:?}"))),
        }
    }
}

/// The monomial Chern numbers of one variety, possibly only some of them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernRecord {
    pub name: String,
    pub dimension: usize,
    pub convention: Convention,
    pub numbers: BTreeMap<Partition, BigInt>,
    pub complete: bool,
}

impl ChernRecord {
    /// Validates that every partition has weight `dimension`; the record is
    /// complete when every partition of `dimension` is present.
    pub fn new(
        name: impl Into<String>,
        dimension: usize,
        convention: Convention,
        numbers: BTreeMap<Partition, BigInt>,
    ) -> Result<Self> {
        if let Some(bad) = numbers.keys().find(|p| p.weight() != dimension) {
            return Err(Error::WeightMismatch { expected: dimension, found: bad.weight() });
        }
        let complete = partitions_of(dimension).iter().all(|p| numbers.contains_key(p));
        Ok(ChernRecord { name: name.into(), dimension, convention, numbers, complete })
    }

    /// A complete record read off a homogeneous generating function; absent
    /// monomials are zero Chern numbers.
    pub fn from_gf(name: impl Into<String>, dimension: usize, convention: Convention, gf: &IntPoly) -> Result<Self> {
        let numbers = partitions_of(dimension).into_iter().map(|p| {
            let c = gf.coeff(&p);
            (p, c)
        });
        let record = ChernRecord::new(name, dimension, convention, numbers.collect())?;
        match gf.terms().find(|(p, _)| p.weight() != dimension) {
            Some((p, _)) => Err(Error::WeightMismatch { expected: dimension, found: p.weight() }),
            None => Ok(record),
        }
    }

    pub fn generating_function(&self) -> IntPoly {
        IntPoly::from_terms(self.numbers.iter().map(|(p, c)| (p.clone(), c.clone())))
    }

    pub fn number(&self, lambda: &Partition) -> Option<&BigInt> {
        self.numbers.get(lambda)
    }

    fn require_complete(&self) -> Result<()> {
        if self.complete {
            Ok(())
        } else {
            Err(Error::Incomplete(self.name.clone()))
        }
    }

    /// The same variety in the other convention.
    ///
    /// With `M_μ = ∏ M_{μ_i}` the multiplicative inversion polynomials,
    /// `C^ν(M, t) = Σ_μ c_μ(M) M_μ(t)` and symmetrically for `C^τ` in terms
    /// of the normal numbers, because `∏_i (1 + Σ_j x_i^j t_j)^(-1)` expands
    /// as `Σ_μ M_μ(t) m_μ(x)`.
    pub fn dual(&self) -> Result<ChernRecord> {
        self.require_complete()?;
        let n = self.dimension;
        let m: Vec<IntPoly> = std::iter::once(Ok(IntPoly::one()))
            .chain((1..=n).map(|j| mult_inversion_polynomial(j, Route::Recursive).map(|r| r.polynomial)))
            .collect::<Result<_>>()?;
        let mut gf = IntPoly::zero();
        for (mu, c) in &self.numbers {
            if c.is_zero() {
                continue;
            }
            let product = mu.parts().iter().fold(IntPoly::one(), |acc, &k| acc.mul(&m[k as usize]));
            gf = gf.add(&product.scale(c));
        }
        ChernRecord::from_gf(self.name.clone(), n, self.convention.other(), &gf)
    }

    /// The record in the requested convention, converting if needed.
    pub fn in_convention(&self, convention: Convention) -> Result<ChernRecord> {
        if self.convention == convention {
            Ok(self.clone())
        } else {
            self.dual()
        }
    }

    /// Signed Euler characteristic, the tangent number `c_{(1,...,1)}`.
    pub fn euler_characteristic(&self) -> Result<BigInt> {
        let top = Partition::ones(self.dimension);
        match self.convention {
            Convention::Tangent => self.number(&top).cloned().ok_or_else(|| Error::Incomplete(self.name.clone())),
            Convention::Normal => self.dual()?.euler_characteristic(),
        }
    }
}

/// The coefficient of `t_1^n`, i.e. the signed Euler characteristic when
/// `gf` is a tangent generating function of dimension `n`.
pub fn euler_characteristic(gf: &IntPoly, n: usize) -> BigInt {
    gf.coeff(&Partition::ones(n))
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("dimension must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `1 + Σ_{j<=n} t_j (a x)^j` truncated at `x^(order+1)`: the universal
/// monomial class of a line bundle with first Chern class `a·x`.
fn line_bundle_class(n: usize, order: usize, a: &BigInt) -> TruncatedSeries<IntPoly> {
    let mut power = BigInt::from(1);
    let coeffs = std::iter::once(IntPoly::one()).chain((1..=n.min(order)).map(|j| {
        power = &power * a;
        IntPoly::var(j as u32).scale(&power)
    }));
    TruncatedSeries::from_coeffs(order, coeffs).expect("fits by construction")
}

/// `C^τ(CP^n) = [x^n] (1 + Σ x^k t_k)^(n+1)`.
pub fn cpn_tangent_gf(n: usize) -> Result<IntPoly> {
    require_positive(n)?;
    Ok(generic_unit_series(n, n).pow(n as i64 + 1)?.coeff(n)?.clone())
}

/// `ĥB_{2n+1,n+1}` evaluated at `z_1 = 1`, `z_{j+1} = t_j`.
pub fn cpn_tangent_gf_via_bell(n: usize) -> Result<IntPoly> {
    require_positive(n)?;
    let bell = bell_partial(2 * n + 1, n + 1)?;
    Ok(bell.eval(|k| if k == 1 { IntPoly::one() } else { IntPoly::var(k - 1) }, |c| IntPoly::constant(c.clone())))
}

/// `C^ν(CP^n) = [x^n] (1 + Σ x^k t_k)^(-(n+1))`.
pub fn cpn_normal_gf(n: usize) -> Result<IntPoly> {
    require_positive(n)?;
    Ok(generic_unit_series(n, n).pow(-(n as i64 + 1))?.coeff(n)?.clone())
}

pub fn cpn_record(n: usize, convention: Convention) -> Result<ChernRecord> {
    let gf = match convention {
        Convention::Tangent => cpn_tangent_gf(n)?,
        Convention::Normal => cpn_normal_gf(n)?,
    };
    ChernRecord::from_gf(format!("CP{n}"), n, convention, &gf)
}

/// Checks `C(τ CP^n)·C(ν CP^n) ≡ 1` as computed series and that their
/// top coefficients reproduce the tangent and normal generating functions.
pub fn duality_check(n: usize) -> Result<bool> {
    require_positive(n)?;
    let base = generic_unit_series(n, n);
    let tangent = base.pow(n as i64 + 1)?;
    let normal = base.pow(-(n as i64 + 1))?;
    let product_is_one = tangent.mul(&normal)? == TruncatedSeries::one(n);
    let tangent_matches = *tangent.coeff(n)? == cpn_tangent_gf(n)?;
    let normal_matches = *normal.coeff(n)? == cpn_normal_gf(n)?;
    Ok(product_is_one && tangent_matches && normal_matches)
}

/// `C^τ(Θ^n) = (n+1)!·[x^n] 1 / (1 + Σ t_k x^k)`.
pub fn theta_tangent_gf(n: usize) -> Result<IntPoly> {
    Ok(theta_power_gf(n, 1)?.0)
}

/// `C^ν(Θ^n) = (n+1)!·t_n`.
pub fn theta_normal_gf(n: usize) -> Result<IntPoly> {
    require_positive(n)?;
    Ok(IntPoly::monomial(Partition::single(n as u32), factorial(n as u32 + 1)))
}

/// Tangent and normal generating functions of `Θ^n(k)`, the zero locus of
/// a section of the `k`-th power of the polarization.
///
/// The normal bundle has Chern root `k·x` and the fundamental class pairs
/// with `x^n` to `k·(n+1)!`.
pub fn theta_power_gf(n: usize, k: u32) -> Result<(IntPoly, IntPoly)> {
    require_positive(n)?;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let k = BigInt::from(k);
    let pairing = &k * factorial(n as u32 + 1);
    let normal_class = line_bundle_class(n, n, &k);
    let tangent = normal_class.recip()?.coeff(n)?.scale(&pairing);
    let normal = normal_class.coeff(n)?.scale(&pairing);
    Ok((tangent, normal))
}

pub fn theta_record(n: usize, k: u32, convention: Convention) -> Result<ChernRecord> {
    let (tangent, normal) = theta_power_gf(n, k)?;
    let name = if k == 1 { format!("Theta{n}") } else { format!("Theta{n}({k})") };
    let gf = match convention {
        Convention::Tangent => tangent,
        Convention::Normal => normal,
    };
    ChernRecord::from_gf(name, n, convention, &gf)
}

/// Tangent generating function of a smooth degree-`d` hypersurface
/// `V_d ⊂ CP^m`: `d·[x^(m-1)] (1 + Σ x^j t_j)^(m+1) (1 + Σ (d x)^j t_j)^(-1)`.
pub fn hypersurface_gf(m: usize, d: u32) -> Result<IntPoly> {
    if m < 2 || d == 0 {
        return Err(Error::InvalidArgument(format!("need m >= 2 and d >= 1, got m={m}, d={d}")));
    }
    let dim = m - 1;
    let d = BigInt::from(d);
    let ambient = generic_unit_series(dim, dim).pow(m as i64 + 1)?;
    let normal = line_bundle_class(dim, dim, &d).recip()?;
    Ok(ambient.mul(&normal)?.coeff(dim)?.scale(&d))
}

pub fn hypersurface_record(m: usize, d: u32) -> Result<ChernRecord> {
    let gf = hypersurface_gf(m, d)?;
    ChernRecord::from_gf(format!("V{d} in CP{m}"), m - 1, Convention::Tangent, &gf)
}
