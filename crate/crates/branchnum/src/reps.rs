//! Streaming enumeration of scalar-class representatives.
//!
//! A weight-k vector over GF(q) is equivalent to every non-zero scalar
//! multiple of itself, and each class has exactly one member whose first
//! non-zero coordinate is 1. This module streams those representatives:
//! supports advance in lexicographic order and, within a support, the k-1
//! free values run through the non-zero elements in ascending encoding
//! order, odometer style with the last coordinate fastest. The order is
//! fixed so that work counters and shard splits are reproducible.
//!
//! Representatives are produced by in-place mutation; a full weight-4 scan
//! over GF(2^8)^8 visits more than 10^9 vectors, so nothing is materialized.

use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;

use crate::field::{Field, FieldElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    /// k outside 1..=n.
    OutOfRange { n: usize, k: usize },
    /// Requested index range does not fit the enumeration space.
    RangeOutOfBounds,
    /// Shard count must be at least 1.
    InvalidShards(usize),
    /// The enumeration space cannot be indexed in 128 bits.
    IndexOverflow,
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::OutOfRange { n, k } => {
                write!(f, "weight {k} out of range for dimension {n}")
            }
            RepError::RangeOutOfBounds => write!(f, "index range exceeds the enumeration space"),
            RepError::InvalidShards(s) => write!(f, "shard count {s} must be at least 1"),
            RepError::IndexOverflow => {
                write!(f, "enumeration space does not fit 128-bit indexing")
            }
        }
    }
}

impl std::error::Error for RepError {}

/// An owned weight-k representative: strictly increasing support positions
/// and the matching non-zero values, the first of which is always 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepVector {
    pub support: Vec<usize>,
    pub values: Vec<FieldElement>,
}

impl RepVector {
    /// Expands into a dense length-n coordinate list.
    pub fn to_dense(&self, n: usize) -> Vec<FieldElement> {
        let mut out = vec![FieldElement::ZERO; n];
        for (&pos, &val) in self.support.iter().zip(&self.values) {
            out[pos] = val;
        }
        out
    }
}

/// Number of weight-k representatives: C(n, k) * (q-1)^(k-1), exactly.
pub fn rep_count(n: usize, k: usize, q: u64) -> Result<BigUint, RepError> {
    if k < 1 || k > n {
        return Err(RepError::OutOfRange { n, k });
    }
    let choose = binomial(BigUint::from(n), BigUint::from(k));
    Ok(choose * BigUint::from(q - 1).pow(k as u32 - 1))
}

fn rep_count_u128(n: usize, k: usize, q: u64) -> Result<u128, RepError> {
    let choose = binom_u128(n, k).ok_or(RepError::IndexOverflow)?;
    let values = checked_pow_u128(q as u128 - 1, k - 1).ok_or(RepError::IndexOverflow)?;
    choose.checked_mul(values).ok_or(RepError::IndexOverflow)
}

fn binom_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - k + 1 + i) as u128)?;
        acc /= (i + 1) as u128;
    }
    Some(acc)
}

fn checked_pow_u128(base: u128, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

/// Streaming generator over a contiguous slice of the representative order.
pub struct RepIter<'f> {
    field: &'f Field,
    n: usize,
    k: usize,
    nonzero: u64,
    support: Vec<usize>,
    values: Vec<FieldElement>,
    digits: Vec<u64>,
    remaining: u128,
    fresh: bool,
}

impl<'f> RepIter<'f> {
    /// The full stream of S_k for vectors of length n.
    pub fn new(field: &'f Field, n: usize, k: usize) -> Result<Self, RepError> {
        let total = rep_count_u128(n, k, field.order())?;
        Self::with_range(field, n, k, 0, total)
    }

    /// The sub-stream covering positions `start .. start + len` of the
    /// full enumeration order.
    pub fn with_range(
        field: &'f Field,
        n: usize,
        k: usize,
        start: u128,
        len: u128,
    ) -> Result<Self, RepError> {
        if k < 1 || k > n {
            return Err(RepError::OutOfRange { n, k });
        }
        let q = field.order();
        let v_total = checked_pow_u128(q as u128 - 1, k - 1).ok_or(RepError::IndexOverflow)?;
        let total = rep_count_u128(n, k, q)?;
        if start.checked_add(len).ok_or(RepError::RangeOutOfBounds)? > total {
            return Err(RepError::RangeOutOfBounds);
        }

        let (support, digits) = if len == 0 {
            ((0..k).collect(), vec![0u64; k - 1])
        } else {
            let support = unrank_combination(n, k, start / v_total);
            let mut digits = vec![0u64; k - 1];
            let mut v_idx = start % v_total;
            for slot in digits.iter_mut().rev() {
                *slot = (v_idx % (q as u128 - 1)) as u64;
                v_idx /= q as u128 - 1;
            }
            (support, digits)
        };

        let mut values = vec![field.one(); k];
        for (i, &d) in digits.iter().enumerate() {
            values[i + 1] = FieldElement(d + 1);
        }

        Ok(RepIter {
            field,
            n,
            k,
            nonzero: q - 1,
            support,
            values,
            digits,
            remaining: len,
            fresh: true,
        })
    }

    pub fn weight(&self) -> usize {
        self.k
    }

    /// Representatives left to come, including the current one before the
    /// first `advance`.
    pub fn remaining(&self) -> u128 {
        self.remaining
    }

    /// Steps to the next representative; returns false when exhausted.
    /// The current representative is visible through [`Self::support`] and
    /// [`Self::values`] without copying.
    #[inline]
    pub fn advance(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        if self.fresh {
            self.fresh = false;
        } else {
            self.step();
        }
        self.remaining -= 1;
        true
    }

    #[inline]
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    #[inline]
    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn current(&self) -> RepVector {
        RepVector { support: self.support.clone(), values: self.values.clone() }
    }

    #[inline]
    fn step(&mut self) {
        // Odometer over the k-1 free values, last coordinate fastest.
        for i in (0..self.digits.len()).rev() {
            if self.digits[i] + 1 < self.nonzero {
                self.digits[i] += 1;
                self.values[i + 1] = FieldElement(self.digits[i] + 1);
                return;
            }
            self.digits[i] = 0;
            self.values[i + 1] = self.field.one();
        }
        next_combination(&mut self.support, self.n);
    }
}

impl Iterator for RepIter<'_> {
    type Item = RepVector;

    fn next(&mut self) -> Option<RepVector> {
        if self.advance() {
            Some(self.current())
        } else {
            None
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).ok();
        (n.unwrap_or(usize::MAX), n)
    }
}

/// Splits the full stream into `shards` disjoint sub-streams whose in-order
/// concatenation reproduces it. Shard boundaries are plain index ranges, so
/// the shards can be consumed on different threads with no shared state.
pub fn rep_split<'f>(
    field: &'f Field,
    n: usize,
    k: usize,
    shards: usize,
) -> Result<Vec<RepIter<'f>>, RepError> {
    if shards == 0 {
        return Err(RepError::InvalidShards(shards));
    }
    let total = rep_count_u128(n, k, field.order())?;
    let base = total / shards as u128;
    let extra = total % shards as u128;
    let mut out = Vec::with_capacity(shards);
    let mut start = 0u128;
    for i in 0..shards {
        let len = base + u128::from((i as u128) < extra);
        out.push(RepIter::with_range(field, n, k, start, len)?);
        start += len;
    }
    Ok(out)
}

/// Advances a strictly increasing k-subset of 0..n to its lexicographic
/// successor. The caller never steps past the last combination.
fn next_combination(support: &mut [usize], n: usize) {
    let k = support.len();
    for i in (0..k).rev() {
        if support[i] < n - k + i {
            support[i] += 1;
            for j in i + 1..k {
                support[j] = support[j - 1] + 1;
            }
            return;
        }
    }
    debug_assert!(false, "combination stream over-advanced");
}

/// Lexicographic unranking of a k-combination of 0..n.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut support = Vec::with_capacity(k);
    let mut cand = 0usize;
    for slot in 0..k {
        loop {
            let block = binom_u128(n - 1 - cand, k - 1 - slot).unwrap_or(0);
            if rank < block {
                support.push(cand);
                cand += 1;
                break;
            }
            rank -= block;
            cand += 1;
        }
    }
    support
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    use num_traits::ToPrimitive;

    fn gf(q: u64) -> Field {
        crate::field::tests::gf(q)
    }

    /// Independent oracle: filter all q^n vectors down to weight k with
    /// first non-zero coordinate 1.
    fn brute_reps(field: &Field, n: usize, k: usize) -> Vec<Vec<FieldElement>> {
        let q = field.order();
        let mut out = Vec::new();
        let mut x = vec![0u64; n];
        loop {
            // odometer over all vectors, first coordinate fastest
            let mut i = 0;
            while i < n {
                x[i] += 1;
                if x[i] < q {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            let w = x.iter().filter(|&&v| v != 0).count();
            if w != k {
                continue;
            }
            let first = x.iter().find(|&&v| v != 0).copied().unwrap();
            if first == 1 {
                out.push(x.iter().map(|&v| FieldElement(v)).collect());
            }
        }
        out
    }

    #[test]
    fn counts_match_formula() {
        assert_eq!(rep_count(8, 1, 256).unwrap(), BigUint::from(8u32));
        assert_eq!(rep_count(8, 2, 256).unwrap(), BigUint::from(7140u32));
        assert_eq!(rep_count(4, 1, 2).unwrap(), BigUint::from(4u32));
        // 70 * 255^3
        assert_eq!(rep_count(8, 4, 256).unwrap(), BigUint::from(1_160_696_250u64));
        assert_eq!(rep_count(2, 2, 4).unwrap(), BigUint::from(3u32));
        assert!(rep_count(4, 5, 2).is_err());
        assert!(rep_count(4, 0, 2).is_err());
    }

    #[test]
    fn gf2_weight2_order() {
        let f = gf(2);
        let dense: Vec<Vec<u64>> = RepIter::new(&f, 3, 2)
            .unwrap()
            .map(|r| r.to_dense(3).iter().map(|e| e.encoding()).collect())
            .collect();
        assert_eq!(dense, vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn gf4_full_weight_values_ascend() {
        let f = gf(4);
        let got: Vec<Vec<u64>> = RepIter::new(&f, 2, 2)
            .unwrap()
            .map(|r| r.values.iter().map(|e| e.encoding()).collect())
            .collect();
        assert_eq!(got, vec![vec![1, 1], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn stream_matches_brute_force_set() {
        for (n, q) in [(3usize, 2u64), (4, 3), (3, 4), (4, 5), (3, 8), (2, 16)] {
            let f = gf(q);
            for k in 1..=n {
                let expected = brute_reps(&f, n, k);
                let got: Vec<Vec<FieldElement>> =
                    RepIter::new(&f, n, k).unwrap().map(|r| r.to_dense(n)).collect();
                assert_eq!(
                    got.len(),
                    rep_count(n, k, q).unwrap().to_usize().unwrap(),
                    "stream length ({n}, {k}, {q})"
                );
                let got_set: HashSet<_> = got.iter().cloned().collect();
                let expected_set: HashSet<_> = expected.into_iter().collect();
                assert_eq!(got_set, expected_set, "set mismatch ({n}, {k}, {q})");
                assert_eq!(got_set.len(), got.len(), "duplicates ({n}, {k}, {q})");
            }
        }
    }

    #[test]
    fn every_weight_k_vector_has_unique_representative() {
        // Lemma-style check: u = c * r for exactly one stream element r and
        // non-zero scalar c.
        for (n, q) in [(3usize, 4u64), (4, 3), (3, 8), (4, 4)] {
            let f = gf(q);
            for k in 1..=n {
                let reps: Vec<Vec<FieldElement>> =
                    RepIter::new(&f, n, k).unwrap().map(|r| r.to_dense(n)).collect();
                let mut x = vec![0u64; n];
                loop {
                    let mut i = 0;
                    while i < n {
                        x[i] += 1;
                        if x[i] < q {
                            break;
                        }
                        x[i] = 0;
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                    if x.iter().filter(|&&v| v != 0).count() != k {
                        continue;
                    }
                    let u: Vec<FieldElement> = x.iter().map(|&v| FieldElement(v)).collect();
                    let mut matches = 0;
                    for r in &reps {
                        for c in 1..q {
                            let c = FieldElement(c);
                            if r.iter().map(|&e| f.mul(e, c)).eq(u.iter().copied()) {
                                matches += 1;
                            }
                        }
                    }
                    assert_eq!(matches, 1, "vector {x:?} over q={q}");
                }
            }
        }
    }

    #[test]
    fn yielded_vectors_are_canonical() {
        let f = gf(16);
        for k in 1..=4 {
            let mut it = RepIter::new(&f, 5, k).unwrap();
            while it.advance() {
                assert_eq!(it.support().len(), k);
                assert_eq!(it.values().len(), k);
                assert!(it.support().windows(2).all(|w| w[0] < w[1]));
                assert_eq!(it.values()[0], f.one());
                assert!(it.values().iter().all(|v| !v.is_zero()));
            }
        }
    }

    #[test]
    fn single_shard_is_identity() {
        let f = gf(8);
        let whole: Vec<RepVector> = RepIter::new(&f, 5, 3).unwrap().collect();
        let shards = rep_split(&f, 5, 3, 1).unwrap();
        assert_eq!(shards.len(), 1);
        let got: Vec<RepVector> = shards.into_iter().flatten().collect();
        assert_eq!(got, whole);
    }

    #[test]
    fn shards_partition_the_stream() {
        let f = gf(256);
        let whole: Vec<RepVector> = RepIter::new(&f, 8, 2).unwrap().collect();
        assert_eq!(whole.len(), 7140);
        let got: Vec<RepVector> = rep_split(&f, 8, 2, 7).unwrap().into_iter().flatten().collect();
        assert_eq!(got, whole);

        // More shards than elements: empty tails are fine.
        let f2 = gf(2);
        let whole2: Vec<RepVector> = RepIter::new(&f2, 3, 2).unwrap().collect();
        let got2: Vec<RepVector> =
            rep_split(&f2, 3, 2, 5).unwrap().into_iter().flatten().collect();
        assert_eq!(got2, whole2);

        assert!(matches!(rep_split(&f2, 3, 2, 0), Err(RepError::InvalidShards(0))));
    }

    #[test]
    fn with_range_unranks_correctly() {
        let f = gf(9);
        let whole: Vec<RepVector> = RepIter::new(&f, 5, 3).unwrap().collect();
        let total = whole.len() as u128;
        for start in 0..total {
            let one: Vec<RepVector> =
                RepIter::with_range(&f, 5, 3, start, 1).unwrap().collect();
            assert_eq!(one.len(), 1);
            assert_eq!(one[0], whole[start as usize], "rank {start}");
        }
        assert!(RepIter::with_range(&f, 5, 3, total, 1).is_err());
    }
}
