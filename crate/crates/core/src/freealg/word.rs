use std::cmp::Ordering;
use std::fmt;

/// Two-letter alphabets. Letter 0 is `x` (or `a`), letter 1 is `y` (or `b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Alphabet {
    #[serde(rename = "xy")]
    XY,
    #[serde(rename = "ab")]
    AB,
}

impl Alphabet {
    pub fn chars(self) -> [char; 2] {
        match self {
            Alphabet::XY => ['x', 'y'],
            Alphabet::AB => ['a', 'b'],
        }
    }

    pub fn letter_of(self, c: char) -> Option<u8> {
        let [l0, l1] = self.chars();
        if c == l0 {
            Some(0)
        } else if c == l1 {
            Some(1)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::XY => "xy",
            Alphabet::AB => "ab",
        }
    }
}

/// A word of length ≤ 64, packed with the first letter in the most
/// significant of the `len` low bits, so that for equal lengths numeric order
/// is lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Word {
    bits: u64,
    len: u8,
}

pub const X: u8 = 0;
pub const Y: u8 = 1;

impl Word {
    pub const EMPTY: Word = Word { bits: 0, len: 0 };

    pub fn from_bits(bits: u64, len: usize) -> Word {
        assert!(len <= 64);
        debug_assert!(len == 64 || bits >> len == 0);
        Word { bits, len: len as u8 }
    }

    pub fn letter(l: u8) -> Word {
        Word { bits: l as u64, len: 1 }
    }

    pub fn from_letters(ls: &[u8]) -> Word {
        assert!(ls.len() <= 64);
        let mut bits = 0u64;
        for &l in ls {
            bits = (bits << 1) | (l as u64 & 1);
        }
        Word { bits, len: ls.len() as u8 }
    }

    /// Parse over either alphabet; the alphabet is inferred from the letters.
    pub fn parse(s: &str) -> Option<(Word, Option<Alphabet>)> {
        let mut ls = Vec::new();
        let mut alpha = None;
        for c in s.chars() {
            let (a, l) = match c {
                'x' => (Alphabet::XY, 0),
                'y' => (Alphabet::XY, 1),
                'a' => (Alphabet::AB, 0),
                'b' => (Alphabet::AB, 1),
                _ => return None,
            };
            if alpha.is_some_and(|b| b != a) {
                return None;
            }
            alpha = Some(a);
            ls.push(l);
        }
        if ls.len() > 64 {
            return None;
        }
        Some((Word::from_letters(&ls), alpha))
    }

    /// `x^a y` style builders: x^n.
    pub fn power(l: u8, n: usize) -> Word {
        Word::from_letters(&vec![l; n])
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Letter at position `i` from the left.
    pub fn get(self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn first(self) -> Option<u8> {
        (self.len > 0).then(|| self.get(0))
    }

    pub fn last(self) -> Option<u8> {
        (self.len > 0).then(|| (self.bits & 1) as u8)
    }

    pub fn letters(self) -> impl DoubleEndedIterator<Item = u8> + ExactSizeIterator {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn to_vec(self) -> Vec<u8> {
        self.letters().collect()
    }

    pub fn concat(self, o: Word) -> Word {
        assert!(self.len() + o.len() <= 64, "word too long");
        if o.len == 64 {
            return o;
        }
        Word { bits: (self.bits << o.len) | o.bits, len: self.len + o.len }
    }

    pub fn prepend(self, l: u8) -> Word {
        assert!(self.len < 64);
        Word { bits: self.bits | ((l as u64) << self.len), len: self.len + 1 }
    }

    pub fn append(self, l: u8) -> Word {
        assert!(self.len < 64);
        Word { bits: (self.bits << 1) | l as u64, len: self.len + 1 }
    }

    /// Letters `i..j`.
    pub fn slice(self, i: usize, j: usize) -> Word {
        assert!(i <= j && j <= self.len());
        let n = j - i;
        if n == 0 {
            return Word::EMPTY;
        }
        let shifted = self.bits >> (self.len() - j);
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Word { bits: shifted & mask, len: n as u8 }
    }

    pub fn tail(self) -> Word {
        self.slice(1, self.len())
    }

    pub fn init(self) -> Word {
        self.slice(0, self.len() - 1)
    }

    pub fn count(self, l: u8) -> usize {
        let ones = self.bits.count_ones() as usize;
        if l == 1 {
            ones
        } else {
            self.len() - ones
        }
    }

    pub fn reversed(self) -> Word {
        if self.len == 0 {
            return self;
        }
        Word { bits: self.bits.reverse_bits() >> (64 - self.len()), len: self.len }
    }

    pub fn switched(self) -> Word {
        let mask = if self.len == 64 { u64::MAX } else { (1u64 << self.len) - 1 };
        Word { bits: !self.bits & mask, len: self.len }
    }

    /// Starts with letter 0 and ends with letter 1.
    pub fn is_convergent(self) -> bool {
        self.len >= 2 && self.first() == Some(X) && self.last() == Some(Y)
    }

    /// Rotate the letter-0 blocks: x^{a1} y x^{a2} … y x^{ar} ↦ x^{ar} y x^{a1} … y x^{a(r-1)}.
    pub fn push(self) -> Word {
        let blocks = self.blocks();
        let r = blocks.len();
        let mut rot = Vec::with_capacity(r);
        rot.push(blocks[r - 1]);
        rot.extend_from_slice(&blocks[..r - 1]);
        Word::from_blocks(&rot)
    }

    /// Exponents of letter 0 between consecutive letter-1s (count of 1s plus one entries).
    pub fn blocks(self) -> Vec<usize> {
        let mut out = vec![0];
        for l in self.letters() {
            if l == X {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(0);
            }
        }
        out
    }

    pub fn from_blocks(bl: &[usize]) -> Word {
        let mut w = Word::EMPTY;
        for (i, &a) in bl.iter().enumerate() {
            if i > 0 {
                w = w.append(Y);
            }
            for _ in 0..a {
                w = w.append(X);
            }
        }
        w
    }

    /// For a word ending in letter 1: the composition (k1,…,kr) with
    /// w = x^{k1-1} y … x^{kr-1} y.
    pub fn to_composition(self) -> Option<Vec<usize>> {
        if self.last() != Some(Y) {
            return if self.is_empty() { Some(Vec::new()) } else { None };
        }
        let mut out = Vec::new();
        let mut k = 1;
        for l in self.letters() {
            if l == X {
                k += 1;
            } else {
                out.push(k);
                k = 1;
            }
        }
        Some(out)
    }

    pub fn from_composition(ks: &[usize]) -> Word {
        let mut w = Word::EMPTY;
        for &k in ks {
            assert!(k >= 1);
            for _ in 1..k {
                w = w.append(X);
            }
            w = w.append(Y);
        }
        w
    }

    /// Word of the multiple zeta value ζ_{k1,…,kr}: x^{kr-1}y … x^{k1-1}y.
    pub fn of_mzv(ks: &[usize]) -> Word {
        let rev: Vec<usize> = ks.iter().rev().copied().collect();
        Word::from_composition(&rev)
    }

    pub fn spell(self, a: Alphabet) -> String {
        let cs = a.chars();
        self.letters().map(|l| cs[l as usize]).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Word) -> Ordering {
        self.len.cmp(&o.len).then(self.bits.cmp(&o.bits))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Word) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.spell(Alphabet::XY))
        }
    }
}

/// All words of length `n` in increasing order.
pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    assert!(n < 64);
    (0..(1u64 << n)).map(move |b| Word::from_bits(b, n))
}

/// Convergent words x v y of length `n` in increasing order; index = bits of v.
pub fn convergent_words(n: usize) -> impl Iterator<Item = Word> {
    assert!(n >= 2);
    (0..(1u64 << (n - 2))).map(move |v| Word::from_bits((v << 1) | 1, n))
}

pub fn convergent_index(w: Word) -> usize {
    debug_assert!(w.is_convergent());
    ((w.bits() >> 1) & ((1u64 << (w.len() - 2)) - 1)) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap().0
    }

    #[test]
    fn basic_ops() {
        assert_eq!(w("xy").concat(w("yx")), w("xyyx"));
        assert_eq!(w("xxyxy").slice(1, 4), w("xyx"));
        assert_eq!(w("xxy").reversed(), w("yxx"));
        assert_eq!(w("xy").switched(), w("yx"));
        assert_eq!(w("yxy").prepend(X), w("xyxy"));
        assert!(w("xxy") < w("xyy"));
        assert!(w("yy") < w("xxx"));
    }

    #[test]
    fn push_example() {
        assert_eq!(w("xyxx").push(), w("xxyx"));
        let v = w("xxyxyyx");
        let mut u = v;
        for _ in 0..=v.count(Y) {
            u = u.push();
        }
        assert_eq!(u, v);
    }

    #[test]
    fn mzv_words() {
        assert_eq!(Word::of_mzv(&[3, 5]), w("xxxxyxxy"));
        assert_eq!(Word::of_mzv(&[3]), w("xxy"));
        assert_eq!(w("xyyxy").to_composition(), Some(vec![2, 1, 2]));
        assert_eq!(convergent_index(w("xyxy")), 0b10);
    }
}
