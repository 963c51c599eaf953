//! Curves on the n-punctured disk, modeled algebraically.
//!
//! Punctures sit on a horizontal axis, numbered 1..n left to right. The
//! fundamental group is free on x_1..x_n, where x_k is a loop from a
//! basepoint in the lower left that runs below punctures 1..k-1, circles
//! puncture k once counterclockwise, and returns the same way. An unoriented
//! closed curve is the conjugacy class of a cyclically reduced word, up to
//! inversion. A multicurve is a list of such classes.
//!
//! Every quantity below is a minimal geometric crossing count recovered from
//! the cyclic word, so this module computes exact normal-form data without
//! ever drawing anything:
//!
//! - crossings with the vertical chord between punctures i and i+1 equal the
//!   syllable length of the class in the free splitting
//!   F = <x_1..x_i> * <x_{i+1}..x_n>;
//! - crossings with the ray rising from puncture j equal the number of
//!   letters x_j^{+-1}, because cutting the disk along that ray realizes F as
//!   an HNN extension with stable letter x_j;
//! - crossings with the ray falling from puncture j are the same count after
//!   rewriting into the basis of lassos approaching from above,
//!   y_m = (x_1..x_{m-1}) x_m (x_1..x_{m-1})^{-1}.
//!
//! Words compose functionally, like the braid words acting on them: in a
//! product the rightmost letter is traversed first. Under this convention
//! the boundary of the disk is the class x_1 x_2 .. x_n, which the Artin
//! action fixes, and the above-basis conjugators are the increasing
//! prefix products; both facts fail with the opposite reading.

/// Nonzero integer: +k stands for x_k, -k for its inverse.
pub type Letter = i32;

/// Free reduction (cancel adjacent inverse pairs).
pub fn reduce(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word {
        debug_assert!(l != 0);
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by trimming conjugation at the ends, yielding the
/// canonical-length representative of the conjugacy class.
pub fn cyclic_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut v = reduce(word);
    while v.len() >= 2 && v[0] == -v[v.len() - 1] {
        v.pop();
        v.remove(0);
    }
    v
}

pub fn inverse(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|&l| -l).collect()
}

/// One Artin generator acting on the free group. The positive braid letter i
/// substitutes x_i -> x_i x_{i+1} x_i^{-1} and x_{i+1} -> x_i; the negative
/// letter -i is its inverse, x_i -> x_{i+1} and x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}.
pub fn artin_letter(braid_letter: i32, word: &[Letter]) -> Vec<Letter> {
    assert!(braid_letter != 0);
    let i = braid_letter.abs();
    let mut out: Vec<Letter> = Vec::with_capacity(word.len() * 3);
    for &l in word {
        let k = l.abs();
        if braid_letter > 0 {
            if k == i {
                if l > 0 {
                    out.extend([i, i + 1, -i]);
                } else {
                    out.extend([i, -(i + 1), -i]);
                }
            } else if k == i + 1 {
                out.push(l.signum() * i);
            } else {
                out.push(l);
            }
        } else if k == i {
            out.push(l.signum() * (i + 1));
        } else if k == i + 1 {
            if l > 0 {
                out.extend([-(i + 1), i, i + 1]);
            } else {
                out.extend([-(i + 1), -i, i + 1]);
            }
        } else {
            out.push(l);
        }
    }
    reduce(&out)
}

/// A braid word acts functionally: the last letter acts first.
pub fn artin_word(braid: &[i32], word: &[Letter]) -> Vec<Letter> {
    let mut cur = word.to_vec();
    for &bl in braid.iter().rev() {
        cur = artin_letter(bl, &cur);
    }
    cur
}

/// Minimal crossing numbers with the n-1 vertical chords; chord i separates
/// punctures {1..i} from {i+1..n}. Computed as the cyclic alternation count
/// between the two letter classes, summed over components.
pub fn wall_counts(n: usize, words: &[Vec<Letter>]) -> Vec<i64> {
    assert!(n >= 2);
    let mut walls = vec![0i64; n - 1];
    for raw in words {
        let word = cyclic_reduce(raw);
        if word.is_empty() {
            continue;
        }
        for i in 1..n {
            let side = |l: Letter| (l.unsigned_abs() as usize) > i;
            let mut count = 0i64;
            for k in 0..word.len() {
                if side(word[k]) != side(word[(k + 1) % word.len()]) {
                    count += 1;
                }
            }
            walls[i - 1] += count;
        }
    }
    walls
}

fn letter_counts(n: usize, word: &[Letter]) -> Vec<i64> {
    let mut counts = vec![0i64; n];
    for &l in word {
        counts[(l.unsigned_abs() as usize) - 1] += 1;
    }
    counts
}

/// x_m written in the above-lasso alphabet: from y_m = P x_m P^{-1} with
/// P = x_1..x_{m-1} one gets x_1 = y_1 and recursively
/// x_m = (X_1..X_{m-1})^{-1} y_m (X_1..X_{m-1}).
fn below_in_above_basis(n: usize) -> Vec<Vec<Letter>> {
    let mut xs: Vec<Vec<Letter>> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut w: Vec<Letter> = Vec::new();
        for k in (1..m).rev() {
            w.extend(inverse(&xs[k - 1]));
        }
        w.push(m as Letter);
        for k in 1..m {
            w.extend_from_slice(&xs[k - 1]);
        }
        xs.push(reduce(&w));
    }
    xs
}

/// Rewrite a word over the below-lasso basis into the above-lasso alphabet.
pub fn rewrite_above(n: usize, word: &[Letter]) -> Vec<Letter> {
    let xs = below_in_above_basis(n);
    let mut out: Vec<Letter> = Vec::new();
    for &l in word {
        let m = (l.unsigned_abs() as usize) - 1;
        if l > 0 {
            out.extend_from_slice(&xs[m]);
        } else {
            out.extend(inverse(&xs[m]));
        }
    }
    reduce(&out)
}

/// Minimal crossing counts with the upward and downward rays at each
/// puncture, summed over components.
pub fn ray_counts(n: usize, words: &[Vec<Letter>]) -> (Vec<i64>, Vec<i64>) {
    let mut upper = vec![0i64; n];
    let mut lower = vec![0i64; n];
    for raw in words {
        let word = cyclic_reduce(raw);
        for (u, c) in upper.iter_mut().zip(letter_counts(n, &word)) {
            *u += c;
        }
        let above = cyclic_reduce(&rewrite_above(n, &word));
        for (d, c) in lower.iter_mut().zip(letter_counts(n, &above)) {
            *d += c;
        }
    }
    (upper, lower)
}

/// Normal coordinates of a multicurve: for each middle puncture j = 2..n-1,
/// a_{j-1} is half the difference between upward and downward ray crossings
/// at j; for each chord, b_i is half the difference of consecutive wall
/// counts. Zero for the empty multicurve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coords {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

impl Coords {
    pub fn zero(n: usize) -> Self {
        Coords {
            a: vec![0; n - 2],
            b: vec![0; n - 2],
        }
    }

    /// Interleaved (a_1, b_1, ..., a_{n-2}, b_{n-2}).
    pub fn interleaved(&self) -> Vec<i64> {
        self.a
            .iter()
            .zip(&self.b)
            .flat_map(|(&x, &y)| [x, y])
            .collect()
    }
}

pub fn dynnikov_of_words(n: usize, words: &[Vec<Letter>]) -> Coords {
    assert!(n >= 3);
    let walls = wall_counts(n, words);
    let (upper, lower) = ray_counts(n, words);
    let mut a = Vec::with_capacity(n - 2);
    let mut b = Vec::with_capacity(n - 2);
    for idx in 0..n - 2 {
        let diff = upper[idx + 1] - lower[idx + 1];
        assert!(diff % 2 == 0, "ray count parity violated");
        a.push(diff / 2);
        let wdiff = walls[idx] - walls[idx + 1];
        assert!(wdiff % 2 == 0, "wall count parity violated");
        b.push(wdiff / 2);
    }
    Coords { a, b }
}

/// The curve around a set of punctures, approaching every gap from below:
/// the increasing product of the member lassos.
pub fn round_word(subset: &[usize]) -> Vec<Letter> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    s.iter().map(|&k| k as Letter).collect()
}
