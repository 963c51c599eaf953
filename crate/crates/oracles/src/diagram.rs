//! Unary reconstruction of the normal-form diagram of a coordinate vector.
//!
//! The disk is cut by the n-1 vertical chords into n slabs, one puncture per
//! slab. A multicurve in normal position meets chord i in an even number w_i
//! of points, ordered top to bottom, and inside each middle slab decomposes
//! into four strand families: arcs passing above the puncture, arcs passing
//! below, and hooks attached to the left or right chord wrapping the
//! puncture (never both sides at once, or the curves would intersect). The
//! end slabs contain only hooks. Reconstructing these counts from the
//! coordinate vector and tracing the resulting matching recovers each
//! component as a free-group word, which is how the tests turn coordinate
//! vectors back into the algebraic model of [`crate::freegroup`].

use crate::freegroup::{cyclic_reduce, Letter};

/// Per-slab strand counts for a coordinate vector, using the smallest wall
/// counts that admit the vector; larger (equivalent) choices differ by
/// parallel copies of the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlabData {
    pub n: usize,
    /// Chord crossing counts w_1..w_{n-1}, all even.
    pub walls: Vec<i64>,
    /// For middle puncture j = 2..n-1 (index j-2): arcs passing above.
    pub above: Vec<i64>,
    /// Arcs passing below.
    pub below: Vec<i64>,
    /// Hooks attached to the chord left of the puncture.
    pub lhooks: Vec<i64>,
    /// Hooks attached to the chord on the right.
    pub rhooks: Vec<i64>,
}

pub fn slab_data(n: usize, a: &[i64], b: &[i64]) -> SlabData {
    assert!(n >= 3);
    assert_eq!(a.len(), n - 2);
    assert_eq!(b.len(), n - 2);
    let nw = n - 1;
    // Wall counts are determined up to a common even constant c:
    // w_i = c + s_i with s_{n-1} = 0 and s_i - s_{i+1} = 2 b_i.
    let mut s = vec![0i64; nw];
    for i in (0..nw - 1).rev() {
        s[i] = s[i + 1] + 2 * b[i];
    }
    let mut c = 0i64;
    for &si in &s {
        c = c.max(-si);
    }
    // Each middle slab needs min(w_left, w_right) >= 2|a|, so that the
    // above and below counts min/2 +- a are nonnegative.
    for j in 2..n {
        let m = s[j - 2].min(s[j - 1]);
        c = c.max(2 * a[j - 2].abs() - m);
    }
    if c % 2 != 0 {
        c += 1;
    }
    let walls: Vec<i64> = s.iter().map(|&x| x + c).collect();
    let mut above = Vec::with_capacity(n - 2);
    let mut below = Vec::with_capacity(n - 2);
    let mut lhooks = Vec::with_capacity(n - 2);
    let mut rhooks = Vec::with_capacity(n - 2);
    for j in 2..n {
        let wl = walls[j - 2];
        let wr = walls[j - 1];
        let m = wl.min(wr);
        assert!((m + 2 * a[j - 2]) % 2 == 0);
        above.push(m / 2 + a[j - 2]);
        below.push(m / 2 - a[j - 2]);
        lhooks.push(((wl - wr) / 2).max(0));
        rhooks.push(((wr - wl) / 2).max(0));
    }
    SlabData { n, walls, above, below, lhooks, rhooks }
}

/// A passage through a slab connecting two chord crossings. Letters are
/// recorded for the canonical traversal direction (left to right for arcs,
/// top to bottom for hooks); the reverse traversal contributes the inverted
/// reversed sequence. Only crossings of the upward rays are recorded:
/// crossing the ray above puncture j right to left reads x_j, left to right
/// reads its inverse, and downward-ray crossings read nothing.
struct Passage {
    a: (usize, i64),
    b: (usize, i64),
    letters: Vec<Letter>,
}

fn trace(data: &SlabData) -> Vec<Vec<Letter>> {
    let n = data.n;
    let nw = n - 1;
    let mut passages: Vec<Passage> = Vec::new();
    // passage_at[wall][slot] = (left-side passage idx, right-side passage idx)
    let mut left_of: Vec<Vec<usize>> = data
        .walls
        .iter()
        .map(|&w| vec![usize::MAX; w as usize])
        .collect();
    let mut right_of: Vec<Vec<usize>> = left_of.clone();

    // End slab around puncture 1: hooks fill the left side of wall 0,
    // pairing slot s with w-1-s, nested; each reads x_1 traversed downward
    // (the strand passes over puncture 1 moving right to left). A hook
    // occupies the same side of both its slots.
    let w = data.walls[0];
    for s in 0..w / 2 {
        let idx = passages.len();
        passages.push(Passage { a: (0, s), b: (0, w - 1 - s), letters: vec![1] });
        left_of[0][s as usize] = idx;
        left_of[0][(w - 1 - s) as usize] = idx;
    }
    // End slab around puncture n: hooks on the right of the last wall.
    let w = data.walls[nw - 1];
    for s in 0..w / 2 {
        let idx = passages.len();
        passages.push(Passage {
            a: (nw - 1, s),
            b: (nw - 1, w - 1 - s),
            letters: vec![-(n as Letter)],
        });
        right_of[nw - 1][s as usize] = idx;
        right_of[nw - 1][(w - 1 - s) as usize] = idx;
    }

    // Middle slabs.
    for j in 2..n {
        let lw = j - 2; // left wall index
        let rw = j - 1;
        let wl = data.walls[lw];
        let wr = data.walls[rw];
        let a = data.above[j - 2];
        let bl = data.below[j - 2];
        let lh = data.lhooks[j - 2];
        let rh = data.rhooks[j - 2];
        let lj = j as Letter;
        // Above arcs occupy the top slots on both walls, in order.
        for t in 0..a {
            let idx = passages.len();
            passages.push(Passage { a: (lw, t), b: (rw, t), letters: vec![-lj] });
            right_of[lw][t as usize] = idx;
            left_of[rw][t as usize] = idx;
        }
        // Below arcs occupy the bottom slots, in order from the bottom.
        for t in 0..bl {
            let idx = passages.len();
            passages.push(Passage {
                a: (lw, wl - 1 - t),
                b: (rw, wr - 1 - t),
                letters: vec![],
            });
            right_of[lw][(wl - 1 - t) as usize] = idx;
            left_of[rw][(wr - 1 - t) as usize] = idx;
        }
        // Hooks pair the remaining middle slots of one wall, nested.
        for s in 0..lh {
            let top = a + s;
            let bot = a + 2 * lh - 1 - s;
            let idx = passages.len();
            passages.push(Passage { a: (lw, top), b: (lw, bot), letters: vec![-lj] });
            right_of[lw][top as usize] = idx;
            right_of[lw][bot as usize] = idx;
        }
        for s in 0..rh {
            let top = a + s;
            let bot = a + 2 * rh - 1 - s;
            let idx = passages.len();
            passages.push(Passage { a: (rw, top), b: (rw, bot), letters: vec![lj] });
            left_of[rw][top as usize] = idx;
            left_of[rw][bot as usize] = idx;
        }
    }

    for (wall, tab) in left_of.iter().enumerate() {
        for (slot, &p) in tab.iter().enumerate() {
            assert!(p != usize::MAX, "unmatched left side at wall {wall} slot {slot}");
        }
    }
    for tab in &right_of {
        for &p in tab {
            assert!(p != usize::MAX, "unmatched right side");
        }
    }

    // Trace components: each crossing has one passage on each side, and a
    // component alternates sides as it walks through them.
    let mut seen = vec![false; passages.len()];
    let mut words = Vec::new();
    for start in 0..passages.len() {
        if seen[start] {
            continue;
        }
        let mut word: Vec<Letter> = Vec::new();
        let mut pidx = start;
        let mut from = passages[start].a;
        loop {
            seen[pidx] = true;
            let p = &passages[pidx];
            let to = if from == p.a {
                word.extend_from_slice(&p.letters);
                p.b
            } else {
                word.extend(p.letters.iter().rev().map(|&l| -l));
                p.a
            };
            // Continue through the passage on the other side of `to`.
            let next = if left_of[to.0][to.1 as usize] == pidx {
                right_of[to.0][to.1 as usize]
            } else {
                left_of[to.0][to.1 as usize]
            };
            if next == start && to == passages[start].a {
                break;
            }
            pidx = next;
            from = to;
        }
        // Letters were collected in traversal order; words compose
        // functionally, so the first crossing is the rightmost letter.
        word.reverse();
        words.push(cyclic_reduce(&word));
    }
    words
}

/// Component words of the normal multicurve with the given coordinates.
/// Components wind counterclockwise or clockwise depending on where the
/// trace happens to start; callers must treat words up to inversion.
pub fn reconstruct_words(n: usize, a: &[i64], b: &[i64]) -> Vec<Vec<Letter>> {
    trace(&slab_data(n, a, b))
}
