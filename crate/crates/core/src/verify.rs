//! A self-check suite that recomputes every identity along independent
//! routes.
//!
//! Checks are independent and pure, so [`run`] executes them on scoped
//! threads and reports them in a fixed order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::chern::{
    cpn_normal_gf, cpn_record, cpn_tangent_gf, cpn_tangent_gf_via_bell, duality_check, theta_power_gf, theta_record,
    theta_tangent_gf, Convention,
};
use crate::cobordism::consistency_check;
use crate::divisibility::{
    builtin_catalog, del_pezzo_scan, gcd_chern_numbers, hypersurface_scan, proportionality_check, toric_surface_scan,
    ScanEntry,
};
use crate::inversion::{
    bell_gcd, bell_gcd_closed_form, hat_mult_inversion, lagrange_polynomial, mult_inversion_polynomial, Route,
};
use crate::polytope::{
    dissection_census, dissection_census_counted, match_coefficients, ordered_partition_census,
    ordered_partition_census_enumerated, EXPLICIT_DISSECTION_LIMIT, ORDERED_PARTITION_ENUMERATION_LIMIT,
};
use crate::ring::factorial;
use crate::symmetric::{chern_basis_convert, BasisDirection};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Suite {
    #[default]
    All,
    /// Caps the weight at [`FAST_MAX_N`] and skips brute-force enumerations.
    Fast,
}

pub const FAST_MAX_N: usize = 6;

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "fast" => Ok(Suite::Fast),
            other => Err(Error::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Fast => "fast",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    /// What was checked on success, the first discrepancy on failure.
    pub detail: String,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub suite: Suite,
    pub max_n: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

struct Ctx {
    max_n: usize,
    suite: Suite,
}

type Check = fn(&Ctx) -> Result<String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::RoutesDisagree(what()))
    }
}

fn range(n: usize) -> String {
    format!("n = 1..{n}")
}

fn lagrange_routes(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let a = lagrange_polynomial(n, Route::Recursive)?.polynomial;
        let b = lagrange_polynomial(n, Route::DirectFormula)?.polynomial;
        ensure(a == b, || format!("L_{n}: recursive {a} vs direct {b}"))?;
    }
    Ok(range(ctx.max_n))
}

fn mult_routes(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let a = mult_inversion_polynomial(n, Route::Recursive)?.polynomial;
        let b = mult_inversion_polynomial(n, Route::Determinant)?.polynomial;
        ensure(a == b, || format!("M_{n}: reciprocal {a} vs determinant {b}"))?;
        hat_mult_inversion(n)?;
    }
    Ok(range(ctx.max_n))
}

fn cpn_normal_is_lagrange(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let l = lagrange_polynomial(n, Route::Recursive)?.polynomial;
        let gf = cpn_normal_gf(n)?;
        ensure(gf == l.scale(&BigInt::from(n + 1)), || format!("C^nu(CP^{n}) != {}·L_{n}", n + 1))?;
    }
    Ok(range(ctx.max_n))
}

fn theta_is_mult(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let m = mult_inversion_polynomial(n, Route::Determinant)?.polynomial;
        let gf = theta_tangent_gf(n)?;
        ensure(gf == m.scale(&factorial(n as u32 + 1)), || format!("C^tau(Theta^{n}) != {}!·M_{n}", n + 1))?;
    }
    Ok(range(ctx.max_n))
}

fn cpn_bell(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        ensure(cpn_tangent_gf(n)? == cpn_tangent_gf_via_bell(n)?, || format!("Bell route for CP^{n}"))?;
    }
    Ok(range(ctx.max_n))
}

fn bell_gcds(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        for k in 1..=n {
            let g = bell_gcd(n, k)?;
            let expected = bell_gcd_closed_form(n, k);
            ensure(g == BigInt::from(expected), || format!("gcd of B_({n},{k}) is {g}, expected {expected}"))?;
        }
    }
    Ok(format!("1 <= k <= n <= {}", ctx.max_n))
}

fn cpn_duality(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        ensure(duality_check(n)?, || format!("C(tau)·C(nu) != 1 for CP^{n}"))?;
        let tangent = cpn_record(n, Convention::Tangent)?;
        let normal = cpn_record(n, Convention::Normal)?;
        ensure(tangent.dual()? == normal, || format!("tangent-to-normal conversion for CP^{n}"))?;
        ensure(normal.dual()? == tangent, || format!("normal-to-tangent conversion for CP^{n}"))?;
    }
    Ok(range(ctx.max_n))
}

fn divisibility(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        for conv in [Convention::Tangent, Convention::Normal] {
            let v = gcd_chern_numbers(&cpn_record(n, conv)?)?;
            ensure(v.d == BigInt::from(n + 1) && v.extremely_divisible, || format!("d({conv} CP^{n}) = {}", v.d))?;
            let t = gcd_chern_numbers(&theta_record(n, 1, conv)?)?;
            let f = factorial(n as u32 + 1);
            ensure(t.d == f && t.extremely_divisible, || format!("d({conv} Theta^{n}) = {}", t.d))?;
        }
    }
    Ok(range(ctx.max_n))
}

fn basis_round_trip(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let record = cpn_record(n, Convention::Tangent)?;
        let mono = record.numbers.iter().map(|(p, c)| (p.clone(), BigRational::from_integer(c.clone()))).collect();
        let products = chern_basis_convert(&mono, BasisDirection::MonomialToProduct)?;
        let back = chern_basis_convert(&products, BasisDirection::ProductToMonomial)?;
        ensure(back == mono, || format!("basis round trip for CP^{n}"))?;
    }
    Ok(range(ctx.max_n))
}

fn associahedra(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let census = dissection_census(n)?;
        let l = lagrange_polynomial(n, Route::Recursive)?.polynomial;
        ensure(match_coefficients(&census, &l)?, || format!("dissections of the {}-gon vs L_{n}", n + 2))?;
        if ctx.suite == Suite::All && n <= EXPLICIT_DISSECTION_LIMIT {
            ensure(census == dissection_census_counted(n)?, || format!("listed vs counted dissections, n = {n}"))?;
        }
    }
    Ok(range(ctx.max_n))
}

fn permutohedra(ctx: &Ctx) -> Result<String> {
    for n in 1..=ctx.max_n {
        let census = ordered_partition_census(n)?;
        let m = hat_mult_inversion(n)?;
        ensure(match_coefficients(&census, &m)?, || format!("ordered set partitions of {n} vs hat M_{n}"))?;
        if ctx.suite == Suite::All && n <= ORDERED_PARTITION_ENUMERATION_LIMIT {
            let listed = ordered_partition_census_enumerated(n)?;
            ensure(census == listed, || format!("closed form vs enumeration, n = {n}"))?;
        }
    }
    Ok(range(ctx.max_n))
}

fn cobordism(ctx: &Ctx) -> Result<String> {
    ensure(consistency_check(ctx.max_n)?, || "logarithm, decomposition and L_n(tau) disagree".into())?;
    Ok(range(ctx.max_n))
}

fn theta_scaling(ctx: &Ctx) -> Result<String> {
    let top = ctx.max_n.min(4);
    for n in 1..=top {
        let (t1, n1) = theta_power_gf(n, 1)?;
        let base = theta_record(n, 1, Convention::Tangent)?;
        for k in 1..=3u32 {
            let mu = BigInt::from(k).pow(n as u32 + 1);
            let (tk, nk) = theta_power_gf(n, k)?;
            ensure(tk == t1.scale(&mu) && nk == n1.scale(&mu), || format!("Theta^{n}({k}) scaling"))?;
            let ratio = proportionality_check(&theta_record(n, k, Convention::Tangent)?, &base)?;
            ensure(ratio == Some(BigRational::from_integer(mu)), || format!("proportionality of Theta^{n}({k})"))?;
        }
    }
    Ok(format!("n = 1..{top}, k = 1..3"))
}

fn divisible_set(scan: &std::collections::BTreeMap<u32, ScanEntry>) -> Vec<u32> {
    scan.iter().filter(|(_, e)| e.verdict.extremely_divisible).map(|(&k, _)| k).collect()
}

fn surface_scans(_: &Ctx) -> Result<String> {
    let dp = divisible_set(&del_pezzo_scan());
    ensure(dp == [6, 8, 9], || format!("del Pezzo divisible set {dp:?}"))?;
    let toric = toric_surface_scan(12)?;
    let set = divisible_set(&toric);
    ensure(set == [3, 4, 6, 12], || format!("toric divisible set {set:?}"))?;
    let one = BigRational::from_integer(BigInt::from(1));
    ensure(toric.values().all(|e| e.todd == one), || "toric Todd genus differs from 1".into())?;
    let hyp = divisible_set(&hypersurface_scan(6)?);
    ensure(hyp == [1, 2, 4], || format!("hypersurface divisible set {hyp:?}"))?;
    Ok("del Pezzo, toric N <= 12, hypersurfaces d <= 6".into())
}

fn catalog(_: &Ctx) -> Result<String> {
    let cat = builtin_catalog()?;
    for entry in &cat.entries {
        let v = gcd_chern_numbers(&entry.record)?;
        if entry.record.dimension == 2 {
            let expected = entry.record.numbers.values().all(|c| c.is_multiple_of(&v.chi));
            ensure(v.extremely_divisible == expected, || format!("verdict for {}", entry.record.name))?;
        }
    }
    let f3 = gcd_chern_numbers(&cat.get("F3").ok_or_else(|| Error::Schema("catalog lacks F3".into()))?.record)?;
    ensure(f3.d == BigInt::from(6) && f3.extremely_divisible, || format!("d(F3) = {}", f3.d))?;
    Ok(format!("{} entries", cat.entries.len()))
}

const CHECKS: &[(&str, Check)] = &[
    ("lagrange-routes", lagrange_routes),
    ("multiplicative-routes", mult_routes),
    ("cpn-normal-lagrange", cpn_normal_is_lagrange),
    ("theta-tangent-multiplicative", theta_is_mult),
    ("cpn-tangent-bell", cpn_bell),
    ("bell-gcd", bell_gcds),
    ("cpn-duality", cpn_duality),
    ("cpn-theta-divisibility", divisibility),
    ("basis-round-trip", basis_round_trip),
    ("associahedron-census", associahedra),
    ("permutohedron-census", permutohedra),
    ("cobordism-logarithm", cobordism),
    ("theta-scaling", theta_scaling),
    ("surface-scans", surface_scans),
    ("catalog", catalog),
];

/// Names of the checks in report order.
pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(name, _)| *name)
}

/// Runs every check for weights `1..=max_n` concurrently.
pub fn run(suite: Suite, max_n: usize) -> Result<Report> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max-n must be at least 1".into()));
    }
    let ctx = Ctx { max_n: if suite == Suite::Fast { max_n.min(FAST_MAX_N) } else { max_n }, suite };
    let ctx = &ctx;
    let outcomes = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS.iter().map(|&(name, check)| (name, s.spawn(move || check(ctx)))).collect();
        handles
            .into_iter()
            .map(|(name, h)| {
                let result = h.join().unwrap_or_else(|_| Err(Error::RoutesDisagree("check panicked".into())));
                match result {
                    Ok(detail) => CheckOutcome { name, passed: true, detail },
                    Err(e) => CheckOutcome { name, passed: false, detail: e.to_string() },
                }
            })
            .collect()
    });
    Ok(Report { suite, max_n: ctx.max_n, outcomes })
}
