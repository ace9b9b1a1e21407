//! Word-level helpers shared by the adjacency rows and vertex sets.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn get(row: &[u64], i: usize) -> bool {
    row[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn set(row: &mut [u64], i: usize) {
    row[i >> 6] |= 1u64 << (i & 63);
}

#[inline]
pub(crate) fn clear(row: &mut [u64], i: usize) {
    row[i >> 6] &= !(1u64 << (i & 63));
}

#[inline]
pub(crate) fn count(row: &[u64]) -> usize {
    row.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
pub(crate) fn count_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Iterator over set bit positions, ascending.
#[derive(Clone)]
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let cur = words.first().copied().unwrap_or(0);
        Ones { words, idx: 0, cur }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Calls `f` on every index set in both `a` and `b` that is strictly greater than `floor`.
#[inline]
pub(crate) fn for_each_and_above(a: &[u64], b: &[u64], floor: usize, mut f: impl FnMut(usize)) {
    let start = (floor + 1) >> 6;
    for wi in start..a.len() {
        let mut w = a[wi] & b[wi];
        if wi == start {
            let shift = (floor + 1) & 63;
            w &= u64::MAX.checked_shl(shift as u32).unwrap_or(0);
        }
        while w != 0 {
            let tz = w.trailing_zeros() as usize;
            w &= w - 1;
            f(wi * 64 + tz);
        }
    }
}
