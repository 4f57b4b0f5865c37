//! Word-level helpers over `&[u64]` bitsets.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i / 64] |= 1 << (i % 64);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i / 64] &= !(1 << (i % 64));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn is_empty(row: &[u64]) -> bool {
    row.iter().all(|&w| w == 0)
}

/// A set with the bits `0..n` on.
pub(crate) fn full(n: usize) -> Vec<u64> {
    let mut out = vec![u64::MAX; words_for(n)];
    if n % 64 != 0 {
        if let Some(last) = out.last_mut() {
            *last = (1u64 << (n % 64)) - 1;
        }
    }
    out
}

/// Bits strictly above `i`, restricted to `0..n`.
pub(crate) fn above(n: usize, i: usize) -> Vec<u64> {
    let mut out = full(n);
    for w in 0..=(i / 64).min(out.len().saturating_sub(1)) {
        if w < i / 64 {
            out[w] = 0;
        } else {
            let keep = if i % 64 == 63 { 0 } else { u64::MAX << (i % 64 + 1) };
            out[w] &= keep;
        }
    }
    out
}

pub(crate) fn and_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= s;
    }
}

pub(crate) fn and_not_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= !s;
    }
}

pub(crate) fn first(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Iterates the set bits in increasing order.
pub(crate) fn iter(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}
