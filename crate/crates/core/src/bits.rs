//! Fixed-length bit vectors backing semigroup and ideal windows.

use smallvec::SmallVec;
use std::fmt;

const WORD: usize = 64;

/// A bit vector of fixed length. Bits at positions `>= len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits {
    len: usize,
    words: SmallVec<[u64; 2]>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        let n = len.div_ceil(WORD);
        Bits {
            len,
            words: SmallVec::from_elem(0, n),
        }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut bits = Bits::zeros(len);
        for i in 0..len {
            if f(i) {
                bits.set(i);
            }
        }
        bits
    }

    pub fn clone_prefix(&self, len: usize) -> Bits {
        Bits::from_fn(len, |i| self.get(i))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        i < self.len && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// `self |= other << shift`, truncated to `self.len()`.
    pub fn or_shifted(&mut self, other: &Bits, shift: usize) {
        if shift >= self.len {
            return;
        }
        let ws = shift / WORD;
        let bs = shift % WORD;
        let n = self.words.len();
        for (i, &w) in other.words.iter().enumerate() {
            let j = i + ws;
            if j >= n {
                break;
            }
            self.words[j] |= w << bs;
            if bs > 0 && j + 1 < n {
                self.words[j + 1] |= w >> (WORD - bs);
            }
        }
        self.trim();
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Renders the bits as a `0`/`1` string, position 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({})", self.to_bit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_or_crosses_word_boundaries() {
        let a = Bits::from_fn(70, |i| i == 0 || i == 5);
        let mut acc = Bits::zeros(130);
        acc.or_shifted(&a, 62);
        assert_eq!(acc.ones().collect::<Vec<_>>(), vec![62, 67]);
        acc.or_shifted(&a, 128);
        assert_eq!(acc.ones().collect::<Vec<_>>(), vec![62, 67, 128]);
    }

    #[test]
    fn truncation_keeps_tail_clear() {
        let a = Bits::from_fn(10, |_| true);
        let mut acc = Bits::zeros(12);
        acc.or_shifted(&a, 5);
        assert_eq!(acc.ones().count(), 7);
        assert!(!acc.get(12));
    }

    #[test]
    fn zero_length() {
        let z = Bits::zeros(0);
        assert_eq!(z.ones().count(), 0);
        assert_eq!(z.ones().count(), 0);
        assert_eq!(z.to_bit_string(), "");
    }
}
