//! Piecewise-linear coordinates for curves on the punctured disk and the
//! braid-group action on them.
//!
//! Punctures sit at positions 1..n on a horizontal line. An essential
//! simple closed curve (or integral multicurve), put in minimal position
//! with respect to the vertical lines through and between the punctures,
//! is recorded by 2n-4 integers, interleaved as (a_1, b_1, ..., a_{n-2},
//! b_{n-2}):
//!
//! * `a_i` is half the difference between the curve's crossing counts with
//!   the upward and the downward vertical ray at puncture i+1;
//! * `b_i` is half the difference between its crossing counts with wall i
//!   and wall i+1, where wall i is the vertical line separating punctures
//!   i and i+1.
//!
//! Both differences are always even, and the resulting vector classifies
//! the multicurve up to isotopy. Curves around a single puncture and the
//! boundary-parallel curve carry no information here: their coordinates
//! are zero, the same as the empty multicurve.
//!
//! An elementary braid letter acts on these coordinates piecewise
//! linearly, touching only the window (a_{i-1}, b_{i-1}, a_i, b_i) around
//! the swapped punctures; each updated coordinate is the minimum or
//! maximum of a handful of linear forms in the old window. The action is
//! faithful on the span of the round curves, which is what makes these
//! vectors usable as a word-problem certificate.

use crate::error::{Error, Result};
use crate::word::BraidWord;
use num_bigint::BigInt;
use num_traits::Zero;

/// Coordinate vector of a multicurve on the disk with `n` punctures.
///
/// Values are arbitrary-precision: coordinate entries grow exponentially
/// in the length of an applied word, and the growth is genuine (it encodes
/// the curve's complexity), so fixed-width integers are not an option.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopCoords {
    n: usize,
    coords: Vec<BigInt>,
}

impl LoopCoords {
    /// Wraps an interleaved coordinate vector (a_1, b_1, ..., a_{n-2},
    /// b_{n-2}). Requires n >= 3; smaller disks carry no essential curves.
    pub fn new(n: usize, coords: Vec<BigInt>) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewStrands { n, min: 3 });
        }
        if coords.len() != 2 * n - 4 {
            return Err(Error::CoordinateLength {
                got: coords.len(),
                expected: 2 * n - 4,
            });
        }
        Ok(LoopCoords { n, coords })
    }

    pub fn from_i64(n: usize, coords: &[i64]) -> Result<Self> {
        Self::new(n, coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, vec![BigInt::zero(); 2 * n - 4])
    }

    pub fn punctures(&self) -> usize {
        self.n
    }

    /// Interleaved entries (a_1, b_1, a_2, b_2, ...).
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    /// Ray coordinate at puncture i+1, for 1 <= i <= n-2.
    pub fn a(&self, i: usize) -> &BigInt {
        &self.coords[2 * i - 2]
    }

    /// Wall-difference coordinate between walls i and i+1, for
    /// 1 <= i <= n-2.
    pub fn b(&self, i: usize) -> &BigInt {
        &self.coords[2 * i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coordinates of the image curve under a braid word. The last letter
    /// of the word acts first, matching [`BraidWord::compose`].
    pub fn apply(&self, u: &BraidWord) -> Result<Self> {
        if u.n() != self.n {
            return Err(Error::StrandCountMismatch(u.n(), self.n));
        }
        let mut out = self.clone();
        for letter in u.application_order() {
            out.step(letter);
        }
        Ok(out)
    }

    /// One elementary half-twist of punctures i, i+1 (negative letter for
    /// its inverse). Only the coordinate pairs at i-1 and i change; the
    /// pair at index 0 or n-1 does not exist and the update degenerates to
    /// the shorter form fitted for that edge.
    fn step(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize;
        debug_assert!(i >= 1 && i < self.n, "letter {letter} on {} strands", self.n);
        let left = i >= 2;
        let right = i <= self.n - 2;
        let zero = BigInt::zero();
        let p = if left { &self.coords[2 * i - 4] } else { &zero };
        let q = if left { &self.coords[2 * i - 3] } else { &zero };
        let r = if right { &self.coords[2 * i - 2] } else { &zero };
        let s = if right { &self.coords[2 * i - 1] } else { &zero };

        let (p2, q2, r2, s2) = match (left, right, letter > 0) {
            (true, true, true) => (
                vmax([p.clone(), q + r, p + q]),
                vmin([q + r - p, q + r + s - p, s.clone(), r - p, r + s - p]),
                vmin([r.clone(), p + s, r + s]),
                vmax([p - r + s, p - r, q.clone(), p + q - r + s, p + q - r]),
            ),
            (true, true, false) => (
                vmin([p.clone(), p - q, r - q]),
                vmin([p + q - r, p + q - r + s, p - r + s, p - r, s.clone()]),
                vmax([r.clone(), r - s, p - s]),
                vmax([r + s - p, r - p, q + r - p, q + r + s - p, q.clone()]),
            ),
            (false, true, true) => (
                zero.clone(),
                zero.clone(),
                vmin([r + s, r.clone(), s.clone()]),
                vmax([-r, s - r]),
            ),
            (false, true, false) => (
                zero.clone(),
                zero.clone(),
                vmax([-s, r.clone(), r - s]),
                vmax([r.clone(), r + s]),
            ),
            (true, false, true) => (
                vmax([q.clone(), p.clone(), p + q]),
                vmin([q - p, -p]),
                zero.clone(),
                zero.clone(),
            ),
            (true, false, false) => (
                vmin([p.clone(), p - q, -q]),
                vmin([p + q, p.clone()]),
                zero.clone(),
                zero.clone(),
            ),
            (false, false, _) => unreachable!("window cannot be empty for n >= 3"),
        };

        if left {
            self.coords[2 * i - 4] = p2;
            self.coords[2 * i - 3] = q2;
        }
        if right {
            self.coords[2 * i - 2] = r2;
            self.coords[2 * i - 1] = s2;
        }
    }
}

impl std::fmt::Debug for LoopCoords {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LoopCoords(n={}; ", self.n)?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn vmin<const K: usize>(cands: [BigInt; K]) -> BigInt {
    cands.into_iter().min().unwrap()
}

fn vmax<const K: usize>(cands: [BigInt; K]) -> BigInt {
    cands.into_iter().max().unwrap()
}

/// Coordinates of the round curve enclosing the punctures of `subset`
/// (sorted, at least 2, not all of them): the boundary of a neighborhood
/// of the horizontal segment spanning the subset, pushed below the
/// punctures, with a stalk rising to each enclosed puncture.
///
/// Reading the crossing counts off that picture: below every skipped
/// puncture inside the span the curve's two horizontal strands pass, so
/// the downward ray is crossed twice and `a` is -1 there; the walls just
/// inside the two ends of the span are crossed twice while all other
/// walls under the span are crossed twice as well, making the wall
/// differences +-1 exactly at the ends.
pub(crate) fn round_subset_coords(n: usize, subset: &[usize]) -> Vec<BigInt> {
    debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
    debug_assert!(subset.len() >= 2 && subset.len() < n);
    let lo = subset[0];
    let hi = *subset.last().unwrap();
    let mut coords = vec![BigInt::zero(); 2 * n - 4];
    for i in 1..=n - 2 {
        let p = i + 1; // puncture governing a_i
        if lo < p && p < hi && !subset.contains(&p) {
            coords[2 * i - 2] = BigInt::from(-1);
        }
    }
    if lo >= 2 {
        coords[2 * lo - 3] = BigInt::from(-1);
    }
    if hi < n {
        coords[2 * hi - 3] = BigInt::from(1);
    }
    coords
}

#[cfg(test)]
mod tests {
    use super::*;
    use confsec_oracles::{diagram, freegroup};
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn lc(n: usize, coords: &[i64]) -> LoopCoords {
        LoopCoords::from_i64(n, coords).unwrap()
    }

    /// Independent route: rebuild the curve as a word in the free group of
    /// loops around punctures, act there, and read coordinates back off the
    /// image word.
    fn oracle_apply(n: usize, coords: &[i64], word: &[i32]) -> Vec<i64> {
        let a: Vec<i64> = coords.iter().step_by(2).copied().collect();
        let b: Vec<i64> = coords.iter().skip(1).step_by(2).copied().collect();
        let comps = diagram::reconstruct_words(n, &a, &b);
        let imgs: Vec<Vec<i32>> = comps.iter().map(|c| freegroup::artin_word(word, c)).collect();
        freegroup::dynnikov_of_words(n, &imgs).interleaved()
    }

    fn to_i64(c: &LoopCoords) -> Vec<i64> {
        c.coords().iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn round_pair_coordinates() {
        assert_eq!(round_subset_coords(3, &[1, 2]), lc(3, &[0, 1]).coords);
        assert_eq!(round_subset_coords(3, &[2, 3]), lc(3, &[0, -1]).coords);
        assert_eq!(round_subset_coords(3, &[1, 3]), lc(3, &[-1, 0]).coords);
        assert_eq!(round_subset_coords(4, &[2, 3]), lc(4, &[0, -1, 0, 1]).coords);
        assert_eq!(round_subset_coords(4, &[1, 2, 3]), lc(4, &[0, 0, 0, 1]).coords);
        assert_eq!(round_subset_coords(4, &[2, 4]), lc(4, &[0, -1, -1, 0]).coords);
        assert_eq!(round_subset_coords(4, &[1, 4]), lc(4, &[-1, 0, -1, 0]).coords);
        assert_eq!(
            round_subset_coords(6, &[2, 3, 5]),
            lc(6, &[0, -1, 0, 0, -1, 0, 0, 1]).coords
        );
    }

    #[test]
    fn round_subsets_match_curve_tracing() {
        for n in 3..=6 {
            for mask in 0u32..(1 << n) {
                let subset: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                if subset.len() < 2 || subset.len() == n {
                    continue;
                }
                let word = freegroup::round_word(&subset);
                let expected = freegroup::dynnikov_of_words(n, &[word]).interleaved();
                let got = round_subset_coords(n, &subset);
                let got: Vec<i64> = got.iter().map(|b| i64::try_from(b).unwrap()).collect();
                assert_eq!(got, expected, "n={n} subset={subset:?}");
            }
        }
    }

    #[test]
    fn single_letters_match_oracle_on_small_box() {
        let r = 5i64;
        for a in -r..=r {
            for b in -r..=r {
                for letter in [1i32, -1, 2, -2] {
                    let mut got = lc(3, &[a, b]);
                    got.step(letter);
                    let want = oracle_apply(3, &[a, b], &[letter]);
                    assert_eq!(to_i64(&got), want, "letter {letter} on ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn single_letters_match_oracle_on_four_punctures() {
        let r = 2i64;
        for a1 in -r..=r {
            for b1 in -r..=r {
                for a2 in -r..=r {
                    for b2 in -r..=r {
                        let v = [a1, b1, a2, b2];
                        for i in 1..=3i32 {
                            for letter in [i, -i] {
                                let mut got = lc(4, &v);
                                got.step(letter);
                                assert_eq!(
                                    to_i64(&got),
                                    oracle_apply(4, &v, &[letter]),
                                    "letter {letter} on {v:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn random_words_match_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.random_range(3..=6);
            let dim = 2 * n - 4;
            let coords: Vec<i64> = (0..dim).map(|_| rng.random_range(-7..=7)).collect();
            let len = rng.random_range(0..=10);
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let i = rng.random_range(1..n as i32);
                    if rng.random_bool(0.5) { i } else { -i }
                })
                .collect();
            let word = BraidWord::new(n, letters.clone()).unwrap();
            let got = lc(n, &coords).apply(&word).unwrap();
            // The oracle applies letters in the same functional order.
            let img = letters
                .iter()
                .rev()
                .fold(coords.clone(), |acc, &l| oracle_apply(n, &acc, &[l]));
            assert_eq!(to_i64(&got), img, "n={n} coords={coords:?} word={letters:?}");
        }
    }

    #[test]
    fn inverse_letters_cancel_on_large_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..400 {
            let n = rng.random_range(3..=8);
            let dim = 2 * n - 4;
            let coords: Vec<i64> = (0..dim).map(|_| rng.random_range(-1_000_000..=1_000_000)).collect();
            let i = rng.random_range(1..n as i32);
            let v = lc(n, &coords);
            let back = v
                .apply(&BraidWord::new(n, vec![i, -i]).unwrap())
                .unwrap();
            assert_eq!(back, v);
            let back = v
                .apply(&BraidWord::new(n, vec![-i, i]).unwrap())
                .unwrap();
            assert_eq!(back, v);
        }
    }

    #[test]
    fn braid_relations_hold_on_random_vectors() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.random_range(4..=8);
            let dim = 2 * n - 4;
            let coords: Vec<i64> = (0..dim).map(|_| rng.random_range(-100_000..=100_000)).collect();
            let v = lc(n, &coords);
            for i in 1..n - 1 {
                let lhs = BraidWord::new(n, vec![i as i32, i as i32 + 1, i as i32]).unwrap();
                let rhs = BraidWord::new(n, vec![i as i32 + 1, i as i32, i as i32 + 1]).unwrap();
                assert_eq!(v.apply(&lhs).unwrap(), v.apply(&rhs).unwrap(), "braid rel at {i}");
            }
            for i in 1..n - 1 {
                for j in i + 2..n {
                    let lhs = BraidWord::new(n, vec![i as i32, j as i32]).unwrap();
                    let rhs = BraidWord::new(n, vec![j as i32, i as i32]).unwrap();
                    assert_eq!(v.apply(&lhs).unwrap(), v.apply(&rhs).unwrap(), "far comm {i},{j}");
                }
            }
        }
    }

    #[test]
    fn coordinates_grow_beyond_machine_integers() {
        // sigma_1 sigma_2^{-1} stretches curves by a fixed factor > 1 per
        // iteration; powers of sigma_1 sigma_2 would not do (its cube is
        // the central full twist, which fixes every curve class).
        let twist = w("n=3; 1 -2");
        let mut c = lc(3, &[0, 1]);
        for _ in 0..120 {
            c = c.apply(&twist).unwrap();
        }
        let huge = c.coords().iter().map(|x| x.bits()).max().unwrap();
        assert!(huge > 64, "expected exponential growth, got {huge} bits");
    }

    #[test]
    fn round_trip_through_word_action_is_exact() {
        // A long conjugation returns exactly, even across huge intermediates.
        let u = w("n=4; 1 2 3 1 2 1 -3 2 2 3 1 -2");
        let conj = u.compose(&u).unwrap().compose(&u).unwrap();
        let v = lc(4, &[0, -1, -1, 0]);
        let there = v.apply(&conj).unwrap();
        let back = there.apply(&conj.inverse()).unwrap();
        assert_eq!(back, v);
        assert_ne!(there, v);
    }
}
