//! Elementary ↔ monomial symmetric function change of basis.
//!
//! Chern numbers come in two common bases: products `c_{μ_1}···c_{μ_k}` of
//! Chern classes (elementary symmetric functions `e_μ` of the Chern roots)
//! and monomial Chern numbers `c_λ` (monomial symmetric functions `m_λ`).
//! The transition matrix entry for `(μ, λ)` counts 0-1 matrices with row
//! sums `μ` and column sums `λ`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graded::IntPoly;
use crate::partition::{partitions_of, Partition};
use crate::{Error, Result};

/// `e_{μ_1}···e_{μ_k}` in the monomial basis, in `nvars >= |μ|` variables:
/// the coefficient of `t_λ` in the result is the coefficient of `m_λ`.
///
/// That coefficient is the number of 0-1 matrices with row sums `μ` and
/// column sums `λ`, counted row by row.
pub fn elementary_to_monomial(mu: &Partition, nvars: usize) -> Result<IntPoly> {
    let n = mu.weight();
    if nvars < n {
        return Err(Error::TooFewVariables { needed: n, given: nvars });
    }
    let terms = partitions_of(n).into_iter().map(|lambda| {
        let mut memo = HashMap::new();
        let c = count_01_matrices(mu.parts(), lambda.parts().to_vec(), &mut memo);
        (lambda, c)
    });
    Ok(IntPoly::from_terms(terms))
}

/// 0-1 matrices with the given row sums and remaining column sums; the
/// columns are kept sorted in decreasing order since only their multiset
/// matters.
fn count_01_matrices(rows: &[u32], cols: Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), BigInt>) -> BigInt {
    let Some((&r, rest)) = rows.split_first() else {
        return if cols.is_empty() { BigInt::one() } else { BigInt::zero() };
    };
    let key = (rest.len(), cols);
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let cols = &key.1;
    // groups of equal remaining column sums: (value, how many)
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &v in cols {
        match groups.last_mut() {
            Some((w, g)) if *w == v => *g += 1,
            _ => groups.push((v, 1)),
        }
    }
    let mut total = BigInt::zero();
    let mut take = vec![0u32; groups.len()];
    choose(&groups, 0, r, &mut take, &mut |take| {
        let mut ways = BigInt::one();
        let mut next = Vec::with_capacity(cols.len());
        for (&(v, g), &j) in groups.iter().zip(take.iter()) {
            ways *= binomial(g, j);
            next.extend(std::iter::repeat(v).take((g - j) as usize));
            next.extend(std::iter::repeat(v - 1).take(j as usize).filter(|&w| w > 0));
        }
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += ways * count_01_matrices(rest, next, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Calls `f` with every way of taking `left` columns, at most `g` from each
/// group.
fn choose(groups: &[(u32, u32)], i: usize, left: u32, take: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if i == groups.len() {
        if left == 0 {
            f(take);
        }
        return;
    }
    for j in 0..=groups[i].1.min(left) {
        take[i] = j;
        choose(groups, i + 1, left - j, take, f);
    }
    take[i] = 0;
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Rows indexed by `e_μ`, columns by `m_λ`, both over the partitions of `n`
/// in reverse-lexicographic order.
pub fn transition_matrix(n: usize) -> Result<Vec<Vec<BigInt>>> {
    let parts = partitions_of(n);
    parts
        .iter()
        .map(|mu| {
            let row = elementary_to_monomial(mu, n)?;
            Ok(parts.iter().map(|lambda| row.coeff(lambda)).collect())
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisDirection {
    /// Products of Chern classes `c_μ = ∏ c_{μ_i}` to monomial numbers `c_λ`.
    ProductToMonomial,
    /// Monomial numbers `c_λ` to products of Chern classes.
    MonomialToProduct,
}

/// Converts a complete set of Chern numbers of one weight between the
/// product basis and the monomial basis.
pub fn chern_basis_convert(
    values: &BTreeMap<Partition, BigRational>,
    direction: BasisDirection,
) -> Result<BTreeMap<Partition, BigRational>> {
    let n = values
        .keys()
        .next()
        .map(Partition::weight)
        .ok_or_else(|| Error::InvalidArgument("no Chern numbers given".into()))?;
    if let Some(bad) = values.keys().find(|p| p.weight() != n) {
        return Err(Error::WeightMismatch { expected: n, found: bad.weight() });
    }
    let parts = partitions_of(n);
    if let Some(missing) = parts.iter().find(|p| !values.contains_key(p)) {
        return Err(Error::Incomplete(format!("missing the number indexed by {missing}")));
    }
    let matrix: Vec<Vec<BigRational>> =
        transition_matrix(n)?.into_iter().map(|row| row.into_iter().map(BigRational::from_integer).collect()).collect();
    let input: Vec<BigRational> = parts.iter().map(|p| values[p].clone()).collect();
    let output = match direction {
        BasisDirection::MonomialToProduct => {
            matrix.iter().map(|row| row.iter().zip(&input).map(|(a, b)| a * b).sum()).collect()
        }
        BasisDirection::ProductToMonomial => solve(matrix, input)?,
    };
    Ok(parts.into_iter().zip(output).collect())
}

/// Solves `a·x = b` exactly by Gauss–Jordan elimination.
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Result<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::InvalidArgument("singular transition matrix".into()))?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        let pivot_row = a[col].clone();
        let pivot_b = b[col].clone();
        for (r, (row, br)) in a.iter_mut().zip(b.iter_mut()).enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * y;
                }
                *br -= &factor * &pivot_b;
            }
        }
    }
    Ok(b)
}
