//! Braid words on n strands and their strand-level invariants.
//!
//! A word is a sequence of nonzero letters, letter i standing for the
//! elementary half-twist of strands at positions i, i+1 and -i for its
//! inverse. Words compose like functions: in `u.compose(&v)` the word `v`
//! acts first, and within a single word the last letter acts first. All
//! strand and position indices in the public interface are 1-based.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 1 {
            return Err(Error::TooFewStrands { n, min: 1 });
        }
        for &l in &letters {
            if l == 0 || (l.unsigned_abs() as usize) > n - 1 {
                return Err(Error::LetterOutOfRange { letter: l, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    /// The elementary positive letter as a word.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        BraidWord::new(n, vec![i as i32])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Functional composition: `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandCountMismatch(self.n, other.n));
        }
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k >= 0 { self.clone() } else { self.inverse() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// Cancel adjacent mutually-inverse letters until none remain.
    pub fn freely_reduced(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Letters in the order they act on the disk (reverse of word order).
    pub(crate) fn application_order(&self) -> impl Iterator<Item = i32> + '_ {
        self.letters.iter().rev().copied()
    }

    /// Where each strand ends up: strand s ends at position `perm.image_of(s)`.
    pub fn permutation(&self) -> Permutation {
        // positions[p] = strand currently at position p+1.
        let mut positions: Vec<usize> = (0..self.n).collect();
        for l in self.application_order() {
            let m = l.unsigned_abs() as usize;
            positions.swap(m - 1, m);
        }
        let mut images = vec![0usize; self.n];
        for (pos, &strand) in positions.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Half the signed crossing count of each strand pair. Defined only for
    /// pure words, where every pair crosses an even number of times.
    pub fn linking_matrix(&self) -> Result<LinkingMatrix> {
        let perm = self.permutation();
        if let Some(strand) = (1..=self.n).find(|&s| perm.image_of(s) != s) {
            return Err(Error::NotPure { strand, ends_at: perm.image_of(strand) });
        }
        let mut crossings = vec![0i64; self.n * self.n];
        let mut positions: Vec<usize> = (0..self.n).collect();
        for l in self.application_order() {
            let m = l.unsigned_abs() as usize;
            let (s, t) = (positions[m - 1], positions[m]);
            let (lo, hi) = if s < t { (s, t) } else { (t, s) };
            crossings[lo * self.n + hi] += l.signum() as i64;
            positions.swap(m - 1, m);
        }
        let mut entries = vec![0i64; self.n * self.n];
        for lo in 0..self.n {
            for hi in lo + 1..self.n {
                let c = crossings[lo * self.n + hi];
                debug_assert!(c % 2 == 0, "pure word with odd pair crossing count");
                entries[lo * self.n + hi] = c / 2;
                entries[hi * self.n + lo] = c / 2;
            }
        }
        Ok(LinkingMatrix { n: self.n, entries })
    }

    /// Remove one strand. The surviving strands renumber by closing the gap.
    pub fn forget_strand(&self, strand: usize) -> Result<BraidWord> {
        if strand < 1 || strand > self.n {
            return Err(Error::StrandOutOfRange { strand, n: self.n });
        }
        if self.n < 2 {
            return Err(Error::TooFewStrands { n: self.n, min: 2 });
        }
        let mut p = strand; // current position of the removed strand
        let mut kept: Vec<i32> = Vec::with_capacity(self.letters.len());
        for l in self.application_order() {
            let m = l.unsigned_abs() as usize;
            if m == p {
                p = m + 1;
            } else if m + 1 == p {
                p = m;
            } else if m + 1 < p {
                kept.push(l);
            } else {
                kept.push(l.signum() * (m as i32 - 1));
            }
        }
        kept.reverse();
        BraidWord::new(self.n - 1, kept)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for &l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord({self})")
    }
}

/// Parse the body of a braid word, without the `n=..;` header.
pub fn parse_letters(n: usize, body: &str) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in body.split_whitespace() {
        let l: i32 = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
        letters.push(l);
    }
    BraidWord::new(n, letters)
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Accepts the canonical form `n=4; 1 -2 3`, with arbitrary whitespace
    /// after the semicolon and an empty body for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix("n=")
            .ok_or_else(|| Error::Parse("missing n= header".into()))?;
        let (num, body) = rest
            .split_once(';')
            .ok_or_else(|| Error::Parse("missing ; after strand count".into()))?;
        let n: usize = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand count {num:?}")))?;
        parse_letters(n, body)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    // images[s] = 0-based final position of 0-based strand s.
    images: Vec<usize>,
}

impl Permutation {
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Final position of a strand, 1-based on both sides.
    pub fn image_of(&self, strand: usize) -> usize {
        self.images[strand - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// 1-based images listed per strand.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&p| p + 1).collect()
    }
}

/// Symmetric matrix of pairwise strand linking numbers with zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based strand pair.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Entries above the diagonal as (i, j, lk) with i < j, 1-based.
    pub fn upper_entries(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push((i, j, self.get(i, j)));
            }
        }
        out
    }

    /// Total linking of one strand with all others.
    pub fn row_sum(&self, strand: usize) -> i64 {
        (1..=self.n)
            .filter(|&j| j != strand)
            .map(|j| self.get(strand, j))
            .sum()
    }
}
