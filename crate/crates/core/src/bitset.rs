//! Packed bit rows and square bit matrices.

/// Fixed-capacity bitset over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut row = Self {
            words: vec![u64::MAX; len.div_ceil(64)],
            len,
        };
        row.trim();
        row
    }

    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn and(&self, other: &BitRow) -> BitRow {
        let mut out = self.clone();
        out.and_assign(other);
        out
    }

    pub fn and_not(&self, other: &BitRow) -> BitRow {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn intersection_count(&self, other: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Set bits in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

/// Square boolean matrix stored as packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitRow>,
}

impl BitMatrix {
    pub fn filled(n: usize, value: bool) -> Self {
        let row = if value {
            BitRow::ones(n)
        } else {
            BitRow::zeros(n)
        };
        Self { rows: vec![row; n] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows[x].get(y)
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        if value {
            self.rows[x].set(y)
        } else {
            self.rows[x].clear(y)
        }
    }

    pub fn row(&self, x: usize) -> &BitRow {
        &self.rows[x]
    }

    pub fn row_mut(&mut self, x: usize) -> &mut BitRow {
        &mut self.rows[x]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) == self.get(y, x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_ops() {
        let mut r = BitRow::zeros(130);
        for i in [0, 63, 64, 129] {
            r.set(i);
        }
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(r.count(), 4);
        r.clear(63);
        assert!(!r.get(63));
        let ones = BitRow::ones(130);
        assert_eq!(ones.count(), 130);
        assert_eq!(ones.and_not(&r).count(), 127);
        assert_eq!(ones.intersection_count(&r), 3);
    }

    #[test]
    fn matrix_symmetry() {
        let mut m = BitMatrix::filled(3, true);
        assert!(m.is_symmetric());
        m.set(0, 2, false);
        assert!(!m.is_symmetric());
        m.set(2, 0, false);
        assert!(m.is_symmetric());
    }
}
