//! JSON forms of polynomials, Chern records and face censuses.
//!
//! Coefficients are decimal strings (`"-21"`, or `"3/2"` for rationals) so no
//! precision is lost. Terms are listed in reverse-lexicographic partition
//! order.
//!
//! ```json
//! {"weight": 2, "terms": [{"partition": [2], "coeff": "-1"}, {"partition": [1, 1], "coeff": "2"}]}
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::chern::{ChernRecord, Convention};
use crate::graded::{GradedPoly, Namespace, TVars};
use crate::partition::Partition;
use crate::polytope::FaceCensus;
use crate::ring::Scalar;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub weight: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub namespace: Option<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub name: String,
    pub dimension: usize,
    pub convention: String,
    pub numbers: Vec<TermJson>,
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub weight: usize,
    pub polytope: String,
    pub terms: Vec<TermJson>,
}

fn term<C: Scalar>(lambda: &Partition, c: &C) -> TermJson {
    TermJson { partition: lambda.parts().to_vec(), coeff: c.to_string() }
}

fn parse_term<C: Scalar>(t: &TermJson, weight: usize) -> Result<(Partition, C)> {
    if t.partition.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Schema(format!("partition {:?} is not weakly decreasing", t.partition)));
    }
    let lambda = Partition::new(t.partition.clone()).map_err(|e| Error::Schema(e.to_string()))?;
    if lambda.weight() != weight {
        return Err(Error::Schema(format!("partition {lambda} does not have weight {weight}")));
    }
    let c = C::parse(&t.coeff).ok_or_else(|| Error::Schema(format!("bad coefficient {:?}", t.coeff)))?;
    Ok((lambda, c))
}

fn parse_terms<C: Scalar>(terms: &[TermJson], weight: usize) -> Result<BTreeMap<Partition, C>> {
    let mut out = BTreeMap::new();
    for t in terms {
        let (lambda, c) = parse_term::<C>(t, weight)?;
        if out.insert(lambda.clone(), c).is_some() {
            return Err(Error::Schema(format!("partition {lambda} listed twice")));
        }
    }
    Ok(out)
}

pub fn poly_to_json<C: Scalar, N: Namespace>(p: &GradedPoly<C, N>) -> Result<PolyJson> {
    let weight = p
        .homogeneous_weight()
        .ok_or_else(|| Error::InvalidArgument("only homogeneous polynomials are serialized".into()))?;
    let namespace = (N::NAME != TVars::NAME).then(|| N::NAME.to_string());
    let terms = p.terms().map(|(l, c)| term(l, c)).collect();
    Ok(PolyJson { weight, namespace, terms })
}

pub fn poly_from_json<C: Scalar, N: Namespace>(j: &PolyJson) -> Result<GradedPoly<C, N>> {
    let ns = j.namespace.as_deref().unwrap_or(TVars::NAME);
    if ns != N::NAME {
        return Err(Error::Schema(format!("expected namespace {:?}, found {ns:?}", N::NAME)));
    }
    Ok(GradedPoly::from_terms(parse_terms::<C>(&j.terms, j.weight)?))
}

pub fn record_to_json(r: &ChernRecord) -> RecordJson {
    RecordJson {
        name: r.name.clone(),
        dimension: r.dimension,
        convention: r.convention.to_string(),
        numbers: r.numbers.iter().map(|(l, c)| term(l, c)).collect(),
        complete: r.complete,
    }
}

pub fn record_from_json(j: &RecordJson) -> Result<ChernRecord> {
    let convention: Convention = j.convention.parse().map_err(|e: Error| Error::Schema(e.to_string()))?;
    let numbers = parse_terms::<BigInt>(&j.numbers, j.dimension)?;
    let record = ChernRecord::new(j.name.clone(), j.dimension, convention, numbers)?;
    if j.complete && !record.complete {
        return Err(Error::Schema(format!("record {:?} is marked complete but lacks numbers", j.name)));
    }
    Ok(record)
}

pub fn census_to_json(c: &FaceCensus) -> CensusJson {
    CensusJson {
        weight: c.n,
        polytope: c.polytope.to_string(),
        terms: c.counts.iter().map(|(l, v)| term(l, v)).collect(),
    }
}

pub fn parse_record(text: &str) -> Result<ChernRecord> {
    record_from_json(&serde_json::from_str(text)?)
}
