//! Face censuses of associahedra and permutohedra.
//!
//! Faces of the associahedron are non-crossing dissections of a convex
//! `(n+2)`-gon; a dissection whose cells have `s_1, ..., s_k` vertices is
//! recorded under the partition `(s_1 - 2, ..., s_k - 2)` of `n`. Faces of the
//! permutohedron of `{1..n}` are ordered set partitions, recorded under their
//! block sizes. In both cases a partition with `k` parts indexes faces of
//! dimension `n - k`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::graded::IntPoly;
use crate::partition::{partitions_of, Partition};
use crate::ring::factorial;
use crate::{Error, Result};

/// Largest weight for which dissections are listed explicitly; above it the
/// census is counted without materializing faces.
pub const EXPLICIT_DISSECTION_LIMIT: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Polytope {
    Associahedron,
    Permutohedron,
}

impl Polytope {
    pub fn as_str(self) -> &'static str {
        match self {
            Polytope::Associahedron => "associahedron",
            Polytope::Permutohedron => "permutohedron",
        }
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceCensus {
    pub n: usize,
    pub polytope: Polytope,
    pub counts: BTreeMap<Partition, BigInt>,
}

impl FaceCensus {
    pub fn count(&self, lambda: &Partition) -> BigInt {
        self.counts.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of faces of each dimension, from the vertices (dimension 0) up
    /// to the polytope itself (dimension `n - 1`).
    pub fn f_vector(&self) -> Vec<BigInt> {
        let mut f = vec![BigInt::zero(); self.n];
        for (lambda, c) in &self.counts {
            f[self.n - lambda.len()] += c;
        }
        f
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    /// The census as a polynomial with coefficient `(-1)^k·count` on `t_λ`,
    /// `k` the number of parts.
    pub fn signed_polynomial(&self) -> IntPoly {
        IntPoly::from_terms(self.counts.iter().map(|(lambda, c)| {
            let signed = if lambda.len() % 2 == 0 { c.clone() } else { -c };
            (lambda.clone(), signed)
        }))
    }
}

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("weight must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Dissection census of the `(n+2)`-gon: explicit enumeration up to
/// [`EXPLICIT_DISSECTION_LIMIT`], counting beyond.
pub fn dissection_census(n: usize) -> Result<FaceCensus> {
    if n <= EXPLICIT_DISSECTION_LIMIT {
        dissection_census_enumerated(n)
    } else {
        dissection_census_counted(n)
    }
}

#[derive(Clone, Debug)]
struct Dissection {
    diagonals: Vec<(u8, u8)>,
    cells: Vec<u32>,
}

/// Lists every dissection of the `(n+2)`-gon with vertices `0..=n+1` as a
/// sorted set of diagonals and tallies cell sizes.
pub fn dissection_census_enumerated(n: usize) -> Result<FaceCensus> {
    require_positive(n)?;
    if n + 1 > u8::MAX as usize {
        return Err(Error::InvalidArgument(format!("polygon with {} vertices is too large to list", n + 2)));
    }
    let mut memo = HashMap::new();
    let all = dissections(0, (n + 1) as u8, &mut memo);
    let mut seen = BTreeSet::new();
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for d in all.iter() {
        let mut diagonals = d.diagonals.clone();
        diagonals.sort_unstable();
        if !seen.insert(diagonals) {
            return Err(Error::RoutesDisagree("a dissection was generated twice".into()));
        }
        let lambda = Partition::new(d.cells.iter().map(|&s| s - 2).collect())?;
        *counts.entry(lambda).or_insert_with(BigInt::zero) += 1;
    }
    Ok(FaceCensus { n, polytope: Polytope::Associahedron, counts })
}

/// Dissections of the sub-polygon on vertices `lo..=hi` (with `hi - lo >= 2`),
/// split by the cell that contains the edge `(lo, hi)`.
fn dissections(lo: u8, hi: u8, memo: &mut HashMap<(u8, u8), Vec<Dissection>>) -> Vec<Dissection> {
    if let Some(cached) = memo.get(&(lo, hi)) {
        return cached.clone();
    }
    let inner: Vec<u8> = (lo + 1..hi).collect();
    let mut out = Vec::new();
    // Each nonempty subset of the interior vertices, together with lo and hi,
    // forms the cell on the base edge.
    for mask in 1u32..(1u32 << inner.len()) {
        let mut cell = vec![lo];
        cell.extend(inner.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v));
        cell.push(hi);
        let mut partial = vec![Dissection { diagonals: Vec::new(), cells: vec![cell.len() as u32] }];
        for w in cell.windows(2) {
            let (a, b) = (w[0], w[1]);
            if b - a < 2 {
                continue;
            }
            let subs = dissections(a, b, memo);
            let mut next = Vec::with_capacity(partial.len() * subs.len());
            for p in &partial {
                for s in &subs {
                    let mut diagonals = p.diagonals.clone();
                    diagonals.push((a, b));
                    diagonals.extend_from_slice(&s.diagonals);
                    let mut cells = p.cells.clone();
                    cells.extend_from_slice(&s.cells);
                    next.push(Dissection { diagonals, cells });
                }
            }
            partial = next;
        }
        out.extend(partial);
    }
    memo.insert((lo, hi), out.clone());
    out
}

/// Count-only census. With `P(L)` the census polynomial of a polygon whose
/// base edge spans `L` boundary steps (`P(1) = 1` for a bare edge), the cell
/// on the base edge has `r + 1` vertices for a composition
/// `L = g_1 + ... + g_r`, `r >= 2`, contributing `t_{r-1}·∏ P(g_i)`.
pub fn dissection_census_counted(n: usize) -> Result<FaceCensus> {
    require_positive(n)?;
    let steps = n + 1;
    // by_len[L] = P(L)
    let mut by_len: Vec<IntPoly> = vec![IntPoly::zero(), IntPoly::one()];
    for len in 2..=steps {
        // compositions[r][m]: sum over compositions of m into r parts of ∏ P(g_i)
        let mut compositions: Vec<Vec<IntPoly>> = vec![vec![IntPoly::zero(); len + 1]; len + 1];
        compositions[0][0] = IntPoly::one();
        for r in 1..=len {
            for m in r..=len {
                let mut acc = IntPoly::zero();
                for g in 1..=m - (r - 1) {
                    if g == len {
                        continue;
                    }
                    let prev = &compositions[r - 1][m - g];
                    if !prev.is_empty() {
                        acc = acc.add_poly(&prev.mul_poly(&by_len[g]));
                    }
                }
                compositions[r][m] = acc;
            }
        }
        let mut total = IntPoly::zero();
        for (r, row) in compositions.iter().enumerate().skip(2) {
            total = total.add_poly(&row[len].mul_poly(&IntPoly::var(r as u32 - 1)));
        }
        by_len.push(total);
    }
    let counts = by_len[steps].terms().map(|(l, c)| (l.clone(), c.clone())).collect();
    Ok(FaceCensus { n, polytope: Polytope::Associahedron, counts })
}

/// Ordered set partitions of `{1..n}` by block sizes, from the closed form
/// `n!/∏λ_i! · k!/∏m_j!` (`m_j` the multiplicities of the block sizes).
pub fn ordered_partition_census(n: usize) -> Result<FaceCensus> {
    require_positive(n)?;
    let n_fact = factorial(n as u32);
    let counts = partitions_of(n)
        .into_iter()
        .map(|lambda| {
            let blocks: BigInt = lambda.parts().iter().map(|&p| factorial(p)).product();
            let arrangements = factorial(lambda.len() as u32)
                / lambda.multiplicities().iter().map(|&(_, m)| factorial(m as u32)).product::<BigInt>();
            let count = &n_fact / blocks * arrangements;
            (lambda, count)
        })
        .collect();
    Ok(FaceCensus { n, polytope: Polytope::Permutohedron, counts })
}

/// Largest `n` accepted by [`ordered_partition_census_enumerated`].
pub const ORDERED_PARTITION_ENUMERATION_LIMIT: usize = 8;

/// Brute-force enumeration of ordered set partitions: peel off the first
/// block as any nonempty subset of what remains.
pub fn ordered_partition_census_enumerated(n: usize) -> Result<FaceCensus> {
    require_positive(n)?;
    if n > ORDERED_PARTITION_ENUMERATION_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "enumeration is limited to n <= {ORDERED_PARTITION_ENUMERATION_LIMIT}"
        )));
    }
    fn peel(remaining: u32, sizes: &mut Vec<u32>, counts: &mut BTreeMap<Partition, BigInt>) {
        if remaining == 0 {
            let lambda = Partition::new(sizes.clone()).expect("positive block sizes");
            *counts.entry(lambda).or_insert_with(BigInt::zero) += BigInt::one();
            return;
        }
        // iterate over nonempty submasks of `remaining`
        let mut block = remaining;
        while block != 0 {
            sizes.push(block.count_ones());
            peel(remaining & !block, sizes, counts);
            sizes.pop();
            block = (block - 1) & remaining;
        }
    }
    let mut counts = BTreeMap::new();
    peel((1u32 << n) - 1, &mut Vec::new(), &mut counts);
    Ok(FaceCensus { n, polytope: Polytope::Permutohedron, counts })
}

/// True iff every coefficient of `poly` on `t_λ` equals `(-1)^k` times the
/// census count of `λ`, `k` the number of parts.
pub fn match_coefficients(census: &FaceCensus, poly: &IntPoly) -> Result<bool> {
    match poly.homogeneous_weight() {
        Some(w) if w == census.n || poly.is_empty() => {}
        Some(w) => return Err(Error::WeightMismatch { expected: census.n, found: w }),
        None => return Err(Error::InvalidArgument("polynomial is not homogeneous".into())),
    }
    Ok(census.signed_polynomial() == *poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inversion::{hat_mult_inversion, lagrange_polynomial, Route};

    fn census(entries: &[(&[u32], i64)]) -> BTreeMap<Partition, BigInt> {
        entries.iter().map(|&(l, c)| (Partition::new(l.to_vec()).unwrap(), BigInt::from(c))).collect()
    }

    fn catalan(n: usize) -> BigInt {
        let mut c = vec![BigInt::one()];
        for m in 1..=n {
            let next = (0..m).map(|i| &c[i] * &c[m - 1 - i]).sum();
            c.push(next);
        }
        c[n].clone()
    }

    fn fubini(n: usize) -> BigInt {
        // a(m) = Σ_{k=1..m} C(m,k) a(m-k)
        let mut a = vec![BigInt::one()];
        for m in 1..=n {
            let mut binom = BigInt::one();
            let mut sum = BigInt::zero();
            for k in 1..=m {
                binom = binom * (m - k + 1) / k;
                sum += &binom * &a[m - k];
            }
            a.push(sum);
        }
        a[n].clone()
    }

    #[test]
    fn stasheff_three_dimensional() {
        let c = dissection_census(4).unwrap();
        assert_eq!(c.counts, census(&[(&[4], 1), (&[3, 1], 6), (&[2, 2], 3), (&[2, 1, 1], 21), (&[1, 1, 1, 1], 14)]));
        assert_eq!(c.f_vector(), vec![14, 21, 9, 1].into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(dissection_census(3).unwrap().counts, census(&[(&[3], 1), (&[2, 1], 5), (&[1, 1, 1], 5)]));
        assert_eq!(dissection_census(1).unwrap().counts, census(&[(&[1], 1)]));
    }

    #[test]
    fn permutohedron_three_dimensional() {
        let c = ordered_partition_census(4).unwrap();
        assert_eq!(c.counts, census(&[(&[4], 1), (&[3, 1], 8), (&[2, 2], 6), (&[2, 1, 1], 36), (&[1, 1, 1, 1], 24)]));
        assert_eq!(ordered_partition_census(2).unwrap().counts, census(&[(&[2], 1), (&[1, 1], 2)]));
        assert_eq!(ordered_partition_census(1).unwrap().counts, census(&[(&[1], 1)]));
    }

    #[test]
    fn enumeration_and_counting_agree() {
        for n in 1..=EXPLICIT_DISSECTION_LIMIT {
            assert_eq!(dissection_census_enumerated(n).unwrap(), dissection_census_counted(n).unwrap(), "n={n}");
        }
        for n in 1..=7 {
            assert_eq!(ordered_partition_census(n).unwrap(), ordered_partition_census_enumerated(n).unwrap());
        }
        assert!(ordered_partition_census_enumerated(ORDERED_PARTITION_ENUMERATION_LIMIT + 1).is_err());
    }

    #[test]
    fn vertices_are_triangulations() {
        for n in 1..=8 {
            let c = dissection_census(n).unwrap();
            assert_eq!(c.count(&Partition::ones(n)), catalan(n), "n={n}");
        }
    }

    #[test]
    fn permutohedron_face_total_is_fubini() {
        for n in 1..=8 {
            assert_eq!(ordered_partition_census(n).unwrap().total(), fubini(n), "n={n}");
        }
    }

    #[test]
    fn signed_counts_are_inversion_coefficients() {
        for n in 1..=8 {
            let l = lagrange_polynomial(n, Route::Recursive).unwrap().polynomial;
            assert!(match_coefficients(&dissection_census(n).unwrap(), &l).unwrap(), "L_{n}");
            let h = hat_mult_inversion(n).unwrap();
            assert!(match_coefficients(&ordered_partition_census(n).unwrap(), &h).unwrap(), "hat M_{n}");
        }
    }

    #[test]
    fn match_rejects_other_weights() {
        let l3 = lagrange_polynomial(3, Route::Recursive).unwrap().polynomial;
        assert!(matches!(
            match_coefficients(&dissection_census(4).unwrap(), &l3),
            Err(Error::WeightMismatch { expected: 4, found: 3 })
        ));
        let l4 = lagrange_polynomial(4, Route::Recursive).unwrap().polynomial;
        assert!(!match_coefficients(&ordered_partition_census(4).unwrap(), &l4).unwrap());
    }
}
