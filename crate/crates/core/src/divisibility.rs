//! Divisibility of Chern numbers by the Euler characteristic.
//!
//! `d(M)` is the gcd of all Chern numbers of `M`; `M` is *numerically
//! extremely divisible* when `χ(M) ≠ 0` and `d(M) = |χ(M)|`. The gcd is the
//! same in the tangent and normal conventions and in the product and
//! monomial bases, since the changes of basis are integral and unimodular.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::chern::{hypersurface_record, ChernRecord, Convention};
use crate::json::TermJson;
use crate::partition::Partition;
use crate::symmetric::{chern_basis_convert, BasisDirection};
use crate::{Error, Result};

/// A compact complex surface given by `c_1^2` and `c_2 = χ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceRecord {
    pub name: String,
    pub c1sq: BigInt,
    pub c2: BigInt,
}

impl SurfaceRecord {
    pub fn new(name: impl Into<String>, c1sq: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        SurfaceRecord { name: name.into(), c1sq: c1sq.into(), c2: c2.into() }
    }

    /// Monomial tangent numbers: `c_(2) = c_1^2 - 2 c_2`, `c_(1,1) = c_2`.
    pub fn to_chern_record(&self) -> ChernRecord {
        let mut products = BTreeMap::new();
        products.insert(Partition::ones(2), BigRational::from_integer(self.c1sq.clone()));
        products.insert(Partition::single(2), BigRational::from_integer(self.c2.clone()));
        let mono =
            chern_basis_convert(&products, BasisDirection::ProductToMonomial).expect("weight-2 conversion is total");
        let numbers = mono.into_iter().map(|(p, v)| (p, v.to_integer())).collect();
        ChernRecord::new(self.name.clone(), 2, Convention::Tangent, numbers).expect("weight 2")
    }

    /// Reads `c_1^2, c_2` off a complete two-dimensional record.
    pub fn from_chern_record(record: &ChernRecord) -> Result<SurfaceRecord> {
        if record.dimension != 2 {
            return Err(Error::WeightMismatch { expected: 2, found: record.dimension });
        }
        let tangent = record.in_convention(Convention::Tangent)?;
        let mono: BTreeMap<_, _> =
            tangent.numbers.iter().map(|(p, c)| (p.clone(), BigRational::from_integer(c.clone()))).collect();
        let products = chern_basis_convert(&mono, BasisDirection::MonomialToProduct)?;
        Ok(SurfaceRecord {
            name: record.name.clone(),
            c1sq: products[&Partition::ones(2)].to_integer(),
            c2: products[&Partition::single(2)].to_integer(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Qualifier {
    /// Every Chern number was available.
    Complete,
    /// Some numbers are unknown; a known number not divisible by `χ` settles
    /// the negative verdict.
    Witnessed,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisibilityVerdict {
    /// gcd of the (known) Chern numbers.
    pub d: BigInt,
    /// Signed Euler characteristic.
    pub chi: BigInt,
    pub extremely_divisible: bool,
    pub qualifier: Qualifier,
}

impl DivisibilityVerdict {
    fn complete(d: BigInt, chi: BigInt) -> Self {
        let extremely_divisible = !chi.is_zero() && d == chi.abs();
        DivisibilityVerdict { d, chi, extremely_divisible, qualifier: Qualifier::Complete }
    }

    /// False when `χ = 0`, where the predicate is not defined.
    pub fn is_defined(&self) -> bool {
        !self.chi.is_zero()
    }
}

fn gcd_all<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |g, v| g.gcd(v))
}

/// `d(M)` and `χ(M)` for a record. Partial records only yield a verdict when
/// a known number is not a multiple of a known `χ`.
pub fn gcd_chern_numbers(record: &ChernRecord) -> Result<DivisibilityVerdict> {
    let d = gcd_all(record.numbers.values());
    if record.complete {
        return Ok(DivisibilityVerdict::complete(d, record.euler_characteristic()?));
    }
    let top = Partition::ones(record.dimension);
    let chi = match (record.convention, record.number(&top)) {
        (Convention::Tangent, Some(chi)) if !chi.is_zero() => chi.clone(),
        _ => return Err(Error::Incomplete(record.name.clone())),
    };
    if record.numbers.values().any(|c| !c.is_multiple_of(&chi)) {
        Ok(DivisibilityVerdict { d, chi, extremely_divisible: false, qualifier: Qualifier::Witnessed })
    } else {
        Err(Error::Incomplete(record.name.clone()))
    }
}

/// Surface verdict: `d = gcd(c_1^2, c_2)`, extremely divisible iff `c_2`
/// divides `c_1^2`.
pub fn surface_verdict(s: &SurfaceRecord) -> Result<DivisibilityVerdict> {
    if s.c2.is_zero() {
        return Err(Error::ZeroEuler);
    }
    Ok(DivisibilityVerdict::complete(s.c1sq.gcd(&s.c2), s.c2.clone()))
}

/// Signature from `c_1^2 = 2χ + 3τ`. Non-integral values mean inconsistent
/// input.
pub fn surface_signature(s: &SurfaceRecord) -> BigRational {
    BigRational::new(&s.c1sq - BigInt::from(2) * &s.c2, BigInt::from(3))
}

/// `Td = (c_1^2 + c_2) / 12`.
pub fn surface_todd(s: &SurfaceRecord) -> BigRational {
    BigRational::new(&s.c1sq + &s.c2, BigInt::from(12))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChernSlope {
    pub slope: BigRational,
    /// Whether the slope respects the Bogomolov–Miyaoka–Yau bound `s <= 3`.
    pub bmy_ok: bool,
}

pub fn chern_slope(s: &SurfaceRecord) -> Result<ChernSlope> {
    if s.c2.is_zero() {
        return Err(Error::ZeroEuler);
    }
    let slope = BigRational::new(s.c1sq.clone(), s.c2.clone());
    let bmy_ok = slope <= BigRational::from_integer(BigInt::from(3));
    Ok(ChernSlope { slope, bmy_ok })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanEntry {
    pub surface: SurfaceRecord,
    pub verdict: DivisibilityVerdict,
    pub todd: BigRational,
}

fn scan_entry(surface: SurfaceRecord) -> Result<ScanEntry> {
    let verdict = surface_verdict(&surface)?;
    let todd = surface_todd(&surface);
    Ok(ScanEntry { surface, verdict, todd })
}

/// Del Pezzo surfaces `S_d`, `d = 1..9`, with `c_1^2 = d` and `c_2 = 12 - d`.
pub fn del_pezzo_scan() -> BTreeMap<u32, ScanEntry> {
    (1..=9u32)
        .map(|d| {
            let s = SurfaceRecord::new(format!("S{d}"), d, 12 - d);
            (d, scan_entry(s).expect("c2 > 0"))
        })
        .collect()
}

/// Smooth toric surfaces of `N`-gons, `N = 3..=max_n`: `c_2 = N`, and
/// `c_1^2 = 12 - N` because the Todd genus is 1.
pub fn toric_surface_scan(max_n: u32) -> Result<BTreeMap<u32, ScanEntry>> {
    if max_n < 3 {
        return Err(Error::InvalidArgument("toric scan needs maxN >= 3".into()));
    }
    (3..=max_n)
        .map(|n| {
            let s = SurfaceRecord::new(format!("X{n}"), 12 - i64::from(n), n);
            Ok((n, scan_entry(s)?))
        })
        .collect()
}

/// Degree-`d` surfaces in `CP^3`, `d = 1..=max_d`, from the hypersurface
/// generating functions. The surface verdict is cross-checked against the
/// gcd of the monomial numbers.
pub fn hypersurface_scan(max_d: u32) -> Result<BTreeMap<u32, ScanEntry>> {
    if max_d == 0 {
        return Err(Error::InvalidArgument("hypersurface scan needs maxd >= 1".into()));
    }
    (1..=max_d)
        .map(|d| {
            let record = hypersurface_record(3, d)?;
            let entry = scan_entry(SurfaceRecord::from_chern_record(&record)?)?;
            let direct = gcd_chern_numbers(&record)?;
            if direct.d != entry.verdict.d.abs() || direct.extremely_divisible != entry.verdict.extremely_divisible {
                return Err(Error::RoutesDisagree(format!("verdicts for V{d} differ")));
            }
            Ok((d, entry))
        })
        .collect()
}

/// The ratio `μ` with `c_λ(a) = μ·c_λ(b)` for all `λ`, if one exists.
///
/// Pairs `0/0` carry no information; `x/0` with `x ≠ 0` rules out any ratio.
/// Returns `None` when no single ratio fits, including when every pair is
/// `0/0`.
pub fn proportionality_check(a: &ChernRecord, b: &ChernRecord) -> Result<Option<BigRational>> {
    if a.dimension != b.dimension {
        return Err(Error::WeightMismatch { expected: a.dimension, found: b.dimension });
    }
    for r in [a, b] {
        if !r.complete {
            return Err(Error::Incomplete(r.name.clone()));
        }
    }
    let b = b.in_convention(a.convention)?;
    let mut mu: Option<BigRational> = None;
    for (lambda, x) in &a.numbers {
        let y = &b.numbers[lambda];
        let ratio = match (x.is_zero(), y.is_zero()) {
            (true, true) => continue,
            (false, true) => return Ok(None),
            _ => BigRational::new(x.clone(), y.clone()),
        };
        match &mu {
            None => mu = Some(ratio),
            Some(m) if *m == ratio => {}
            Some(_) => return Ok(None),
        }
    }
    Ok(mu)
}

/// One variety of the built-in catalog.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogEntry {
    /// Monomial tangent numbers (possibly partial).
    pub record: ChernRecord,
    pub description: String,
    pub provenance: String,
    pub flags: Vec<String>,
}

impl CatalogEntry {
    pub fn has_flag(&self, flag: &str) -> bool {
        self.flags.iter().any(|f| f == flag)
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub version: u32,
    /// Flag name to its explanation.
    pub flags: BTreeMap<String, String>,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.record.name == name)
    }
}

#[derive(Deserialize)]
struct CatalogFile {
    version: u32,
    #[serde(default)]
    flags: BTreeMap<String, String>,
    entries: Vec<CatalogEntryFile>,
}

#[derive(Deserialize)]
struct CatalogEntryFile {
    name: String,
    description: String,
    provenance: String,
    dimension: usize,
    convention: String,
    /// `"monomial"` or `"product"`.
    basis: String,
    numbers: Vec<TermJson>,
    #[serde(default)]
    flags: Vec<String>,
}

pub const CATALOG_VERSION: u32 = 1;

const BUILTIN_CATALOG: &str = include_str!("../data/catalog.json");

/// Parses a catalog document; product-basis entries are converted to
/// monomial numbers.
pub fn load_catalog(text: &str) -> Result<Catalog> {
    let file: CatalogFile = serde_json::from_str(text)?;
    if file.version != CATALOG_VERSION {
        return Err(Error::Schema(format!("unsupported catalog version {}", file.version)));
    }
    let mut entries = Vec::with_capacity(file.entries.len());
    for e in file.entries {
        let raw = crate::json::RecordJson {
            name: e.name.clone(),
            dimension: e.dimension,
            convention: e.convention,
            numbers: e.numbers,
            complete: false,
        };
        let parsed = crate::json::record_from_json(&raw)?;
        let record = match e.basis.as_str() {
            "monomial" => parsed,
            "product" => {
                let products =
                    parsed.numbers.iter().map(|(p, c)| (p.clone(), BigRational::from_integer(c.clone()))).collect();
                let mono = chern_basis_convert(&products, BasisDirection::ProductToMonomial)?;
                let mut numbers = BTreeMap::new();
                for (p, v) in mono {
                    if !v.is_integer() {
                        return Err(Error::NonIntegral(format!("{} c_{p} = {v}", e.name)));
                    }
                    numbers.insert(p, v.to_integer());
                }
                ChernRecord::new(e.name, e.dimension, parsed.convention, numbers)?
            }
            other => return Err(Error::Schema(format!("unknown basis {other:?}"))),
        };
        if let Some(unknown) = e.flags.iter().find(|f| !file.flags.contains_key(*f)) {
            return Err(Error::Schema(format!("undeclared flag {unknown:?}")));
        }
        entries.push(CatalogEntry { record, description: e.description, provenance: e.provenance, flags: e.flags });
    }
    Ok(Catalog { version: file.version, flags: file.flags, entries })
}

pub fn builtin_catalog() -> Result<Catalog> {
    load_catalog(BUILTIN_CATALOG)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::{cpn_record, theta_record};

    fn divisible_set(scan: &BTreeMap<u32, ScanEntry>) -> Vec<u32> {
        scan.iter().filter(|(_, e)| e.verdict.extremely_divisible).map(|(&k, _)| k).collect()
    }

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn projective_spaces_and_theta_divisors() {
        for n in 1..=10 {
            for conv in [Convention::Tangent, Convention::Normal] {
                let v = gcd_chern_numbers(&cpn_record(n, conv).unwrap()).unwrap();
                assert_eq!(v.d, BigInt::from(n + 1));
                assert_eq!(v.chi, BigInt::from(n + 1));
                assert!(v.extremely_divisible);
            }
        }
        let v = gcd_chern_numbers(&theta_record(3, 1, Convention::Tangent).unwrap()).unwrap();
        assert_eq!((v.d, v.chi, v.extremely_divisible), (BigInt::from(24), BigInt::from(-24), true));
    }

    #[test]
    fn witnessed_negative_verdicts() {
        let mut numbers = BTreeMap::new();
        numbers.insert(Partition::single(3), BigInt::from(20));
        numbers.insert(Partition::ones(3), BigInt::from(24));
        let x = ChernRecord::new("X3_Pi", 3, Convention::Tangent, numbers.clone()).unwrap();
        let v = gcd_chern_numbers(&x).unwrap();
        assert_eq!(v.qualifier, Qualifier::Witnessed);
        assert!(!v.extremely_divisible);
        numbers.insert(Partition::single(3), BigInt::from(48));
        let undecided = ChernRecord::new("y", 3, Convention::Tangent, numbers).unwrap();
        assert!(matches!(gcd_chern_numbers(&undecided), Err(Error::Incomplete(_))));
    }

    #[test]
    fn zero_euler_characteristic() {
        let torus_like = SurfaceRecord::new("abelian", 0, 0);
        assert!(matches!(surface_verdict(&torus_like), Err(Error::ZeroEuler)));
        assert!(matches!(chern_slope(&torus_like), Err(Error::ZeroEuler)));
        let v = gcd_chern_numbers(&torus_like.to_chern_record()).unwrap();
        assert!(!v.is_defined() && !v.extremely_divisible);
    }

    #[test]
    fn surfaces() {
        let k3 = SurfaceRecord::new("K3", 0, 24);
        let v = surface_verdict(&k3).unwrap();
        assert_eq!(v.d, BigInt::from(24));
        assert!(v.extremely_divisible);
        assert!(surface_verdict(&SurfaceRecord::new("Theta2", 6, 6)).unwrap().extremely_divisible);
        assert!(surface_verdict(&SurfaceRecord::new("Enriques", 0, 12)).unwrap().extremely_divisible);
        assert_eq!(chern_slope(&SurfaceRecord::new("Theta2", 6, 6)).unwrap().slope, rat(1, 1));
        let ball = chern_slope(&SurfaceRecord::new("ball", 75, 25)).unwrap();
        assert_eq!(ball, ChernSlope { slope: rat(3, 1), bmy_ok: true });
        assert_eq!(chern_slope(&k3).unwrap().slope, rat(0, 1));
        assert!(!chern_slope(&SurfaceRecord::new("beyond", 10, 3)).unwrap().bmy_ok);
    }

    #[test]
    fn signature_and_todd() {
        let cp2 = SurfaceRecord::new("CP2", 9, 3);
        let k3 = SurfaceRecord::new("K3", 0, 24);
        assert_eq!(surface_signature(&cp2), rat(1, 1));
        assert_eq!(surface_signature(&k3), rat(-16, 1));
        assert_eq!(surface_signature(&SurfaceRecord::new("Theta2", 6, 6)), rat(-2, 1));
        assert_eq!(surface_todd(&k3), rat(2, 1));
        assert_eq!(surface_todd(&cp2), rat(1, 1));
        assert!(!surface_signature(&SurfaceRecord::new("odd", 1, 0)).is_integer());
    }

    #[test]
    fn classical_scans() {
        let dp = del_pezzo_scan();
        assert_eq!(divisible_set(&dp), vec![6, 8, 9]);
        assert_eq!(dp[&9].surface, SurfaceRecord::new("S9", 9, 3));
        assert!(!dp[&7].verdict.extremely_divisible);
        let toric = toric_surface_scan(12).unwrap();
        assert_eq!(divisible_set(&toric), vec![3, 4, 6, 12]);
        assert!(toric.values().all(|e| e.todd == rat(1, 1)));
        assert_eq!(toric[&5].surface.c1sq, BigInt::from(7));
        assert!(toric_surface_scan(2).is_err());
        let hyp = hypersurface_scan(6).unwrap();
        assert_eq!(divisible_set(&hyp), vec![1, 2, 4]);
        assert_eq!((hyp[&4].surface.c1sq.clone(), hyp[&4].surface.c2.clone()), (BigInt::from(0), BigInt::from(24)));
        assert_eq!((hyp[&3].surface.c1sq.clone(), hyp[&3].surface.c2.clone()), (BigInt::from(3), BigInt::from(9)));
    }

    #[test]
    fn hypersurface_numbers_match_adjunction() {
        // c1 = (4 - d) h, c2 = (d^2 - 4d + 6) h^2, h^2 = d
        for d in 1..=8i64 {
            let s = SurfaceRecord::from_chern_record(&hypersurface_record(3, d as u32).unwrap()).unwrap();
            assert_eq!(s.c1sq, BigInt::from((4 - d) * (4 - d) * d), "d={d}");
            assert_eq!(s.c2, BigInt::from((d * d - 4 * d + 6) * d), "d={d}");
        }
    }

    #[test]
    fn proportional_pairs() {
        let k3 = SurfaceRecord::new("K3", 0, 24).to_chern_record();
        let enriques = SurfaceRecord::new("Enriques", 0, 12).to_chern_record();
        assert_eq!(proportionality_check(&k3, &enriques).unwrap(), Some(rat(2, 1)));
        let cp2 = cpn_record(2, Convention::Tangent).unwrap();
        assert_eq!(proportionality_check(&cp2, &cp2).unwrap(), Some(rat(1, 1)));
        assert_eq!(proportionality_check(&cp2, &k3).unwrap(), None);
        for n in 1..=4 {
            let base = theta_record(n, 1, Convention::Tangent).unwrap();
            for k in 1..=3u32 {
                let scaled = theta_record(n, k, Convention::Tangent).unwrap();
                let mu = BigInt::from(k).pow(n as u32 + 1);
                assert_eq!(proportionality_check(&scaled, &base).unwrap(), Some(BigRational::from_integer(mu)));
            }
        }
        assert!(proportionality_check(&cp2, &cpn_record(3, Convention::Tangent).unwrap()).is_err());
        let zero = SurfaceRecord::new("zero", 0, 0).to_chern_record();
        assert_eq!(proportionality_check(&zero, &k3).unwrap(), Some(rat(0, 1)));
        assert_eq!(proportionality_check(&k3, &zero).unwrap(), None);
    }

    #[test]
    fn catalog() {
        let cat = builtin_catalog().unwrap();
        let f3 = cat.get("F3").unwrap();
        assert_eq!(
            f3.record.numbers,
            [(vec![3], -6), (vec![2, 1], 6), (vec![1, 1, 1], 6)]
                .into_iter()
                .map(|(p, c)| (Partition::new(p).unwrap(), BigInt::from(c)))
                .collect()
        );
        let v = gcd_chern_numbers(&f3.record).unwrap();
        assert_eq!((v.d.clone(), v.chi.clone()), (BigInt::from(6), BigInt::from(6)));
        assert!(v.extremely_divisible);
        let x = cat.get("X3_Pi").unwrap();
        assert!(!x.record.complete);
        assert!(!gcd_chern_numbers(&x.record).unwrap().extremely_divisible);
        assert!(cat.get("CP2").unwrap().has_flag("numbers-divisible-class-not-divisible"));
        for e in &cat.entries {
            if e.record.dimension == 2 {
                let s = SurfaceRecord::from_chern_record(&e.record).unwrap();
                let tau = surface_signature(&s);
                assert!(tau.is_integer(), "{}", e.record.name);
                let c1sq = BigRational::from_integer(s.c1sq.clone());
                let two_chi = BigRational::from_integer(BigInt::from(2) * &s.c2);
                assert_eq!(c1sq - two_chi - tau * BigRational::from_integer(3.into()), BigRational::zero());
            }
        }
    }

    #[test]
    fn catalog_schema_errors() {
        assert!(load_catalog(r#"{"version": 2, "entries": []}"#).is_err());
        let bad_basis = r#"{"version": 1, "entries": [{"name": "x", "description": "", "provenance": "",
            "dimension": 1, "convention": "tangent", "basis": "power", "numbers": []}]}"#;
        assert!(matches!(load_catalog(bad_basis), Err(Error::Schema(_))));
        let bad_flag = r#"{"version": 1, "entries": [{"name": "x", "description": "", "provenance": "",
            "dimension": 1, "convention": "tangent", "basis": "monomial",
            "numbers": [{"partition": [1], "coeff": "2"}], "flags": ["nope"]}]}"#;
        assert!(matches!(load_catalog(bad_flag), Err(Error::Schema(_))));
    }
}
