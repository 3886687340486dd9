//! Integer partitions.
//!
//! Partitions index both the monomials `t_λ = t_{λ_1}···t_{λ_k}` of a graded
//! polynomial and the monomial Chern numbers `c_λ`.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The ordering sorts by weight first and then reverse-lexicographically, so
/// the partitions of 4 come out as `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Sorts `parts` into weakly decreasing order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("partition with a zero part: {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The one-part partition `(k)`.
    pub fn single(k: u32) -> Self {
        assert!(k > 0, "parts are positive");
        Partition { parts: vec![k] }
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiset union of the parts; this is the product of monomials.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Multiplicities `(part, count)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let largest = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=largest).map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32).collect();
        Partition { parts }
    }

    /// Dominance order: `self >= other` iff every prefix sum of `self` is at
    /// least the matching prefix sum of `other`. Only meaningful at equal
    /// weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(other.len()) {
            a += u64::from(self.parts.get(i).copied().unwrap_or(0));
            b += u64::from(other.parts.get(i).copied().unwrap_or(0));
            if a < b {
                return false;
            }
        }
        true
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part as u32);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_has_the_empty_partition() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let expected = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(partitions_of(4), expected);
        let mut sorted = expected.clone();
        sorted.reverse();
        sorted.sort();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn counts_match_euler_pentagonal_recurrence() {
        // p(n) = sum_{k != 0} (-1)^(k+1) p(n - k(3k-1)/2)
        let mut table = vec![1i64];
        for n in 1..=12i64 {
            let mut sum = 0;
            for k in 1i64.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                sum += sign * table[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    sum += sign * table[(n - g2) as usize];
                }
            }
            table.push(sum);
        }
        for (n, &expected) in table.iter().enumerate() {
            assert_eq!(partitions_of(n).len() as i64, expected, "p({n})");
        }
        assert_eq!(partitions_of(7).len(), 15);
    }

    #[test]
    fn new_sorts_and_rejects_zero() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn conjugates_and_multiplicities() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2, 1]).multiplicities(), vec![(2, 2), (1, 1)]);
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
    }

    proptest! {
        #[test]
        fn union_is_sorted_concatenation(a in prop::collection::vec(1u32..6, 0..5), b in prop::collection::vec(1u32..6, 0..5)) {
            let mut all = a.clone();
            all.extend(&b);
            prop_assert_eq!(p(&a).union(&p(&b)), p(&all));
        }

        #[test]
        fn conjugation_is_an_involution(a in prop::collection::vec(1u32..7, 0..6)) {
            let q = p(&a);
            prop_assert_eq!(q.conjugate().conjugate(), q.clone());
            prop_assert_eq!(q.conjugate().weight(), q.weight());
        }
    }
}
