//! Word-level helpers for fixed-width bitset rows.

#[inline]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub fn test(row: &[u64], k: usize) -> bool {
    row[k >> 6] >> (k & 63) & 1 == 1
}

#[inline]
pub fn set(row: &mut [u64], k: usize) {
    row[k >> 6] |= 1u64 << (k & 63);
}

#[inline]
pub fn clear(row: &mut [u64], k: usize) {
    row[k >> 6] &= !(1u64 << (k & 63));
}

#[inline]
pub fn popcount(row: &[u64]) -> u32 {
    row.iter().map(|w| w.count_ones()).sum()
}

/// `|a ∩ b|`
#[inline]
pub fn popcount_and(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

#[inline]
pub fn and_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

#[inline]
pub fn is_disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

/// Iterate the set bit positions of a row in increasing order.
pub fn ones(row: &[u64]) -> Ones<'_> {
    Ones {
        row,
        word: 0,
        cur: row.first().copied().unwrap_or(0),
    }
}

pub struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_walks_across_words() {
        let mut row = vec![0u64; 3];
        for k in [0, 5, 63, 64, 100, 191] {
            set(&mut row, k);
        }
        assert_eq!(ones(&row).collect::<Vec<_>>(), vec![0, 5, 63, 64, 100, 191]);
        clear(&mut row, 64);
        assert!(!test(&row, 64));
        assert_eq!(popcount(&row), 5);
    }

    #[test]
    fn empty_row() {
        assert_eq!(ones(&[]).count(), 0);
        assert_eq!(words_for(0), 0);
        assert_eq!(words_for(64), 1);
        assert_eq!(words_for(65), 2);
    }
}
