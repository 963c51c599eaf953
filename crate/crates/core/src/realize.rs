//! Exact polyline realization of a coordinate vector.
//!
//! The disk is sliced by vertical walls at half-integer positions into one
//! slab per puncture. A coordinate vector determines how many times a
//! normal-position curve crosses each wall and how the crossings match up
//! inside each slab: strands passing above the puncture, strands passing
//! below, and hooks attached to one wall wrapping around the puncture
//! (never both walls at once). The end slabs contain nothing but nested
//! hooks. This module rebuilds that picture with explicit rational
//! vertices, producing one closed polyline per curve component.
//!
//! All free geometric choices (slot heights on a wall, the heights of the
//! horizontal runs, the turning abscissas of hooks) take the form
//! (16k + tweak)/m. Realizing one curve with an even `tweak` and another
//! with an odd one keeps coordinates from the same structural family
//! distinct between the two curves, so their realizations meet only in
//! honest transverse crossings; remaining accidental degeneracies are
//! detected downstream and retried with a different tweak pair.

use crate::error::{Error, Result};
use crate::loops::LoopCoords;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Pt {
    pub x: BigRational,
    pub y: BigRational,
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn pt(x: BigRational, y: BigRational) -> Pt {
    Pt { x, y }
}

/// Wall crossing counts and per-slab strand counts, all small enough to
/// enumerate. Wall i (0-based) separates punctures i+1 and i+2.
struct SlabCounts {
    n: usize,
    walls: Vec<i64>,
    above: Vec<i64>,
    below: Vec<i64>,
    lhooks: Vec<i64>,
    rhooks: Vec<i64>,
}

/// Smallest admissible wall counts for the vector: w is determined only up
/// to a common even constant, and each slab needs room for the strands its
/// ray coordinate demands.
fn slab_counts(c: &LoopCoords) -> Result<SlabCounts> {
    let n = c.punctures();
    let nw = n - 1;
    let mut s = vec![BigInt::zero(); nw];
    for i in (0..nw - 1).rev() {
        s[i] = &s[i + 1] + 2 * c.b(i + 1);
    }
    let mut base = BigInt::zero();
    for si in &s {
        base = base.max(-si);
    }
    for j in 2..n {
        let m = (&s[j - 2]).min(&s[j - 1]);
        base = base.max(2 * c.a(j - 1).abs() - m);
    }
    if (&base % 2u8) != BigInt::zero() {
        base += 1;
    }
    let too_big = || Error::Unsupported("curve too complex to realize geometrically".into());
    let walls: Vec<i64> = s
        .iter()
        .map(|si| (si + &base).to_i64().filter(|&w| w <= 1_000_000).ok_or_else(too_big))
        .collect::<Result<_>>()?;
    let mut counts = SlabCounts {
        n,
        walls,
        above: Vec::new(),
        below: Vec::new(),
        lhooks: Vec::new(),
        rhooks: Vec::new(),
    };
    for j in 2..n {
        let wl = counts.walls[j - 2];
        let wr = counts.walls[j - 1];
        let m = wl.min(wr);
        let a = c.a(j - 1).to_i64().ok_or_else(too_big)?;
        counts.above.push(m / 2 + a);
        counts.below.push(m / 2 - a);
        counts.lhooks.push(((wl - wr) / 2).max(0));
        counts.rhooks.push(((wr - wl) / 2).max(0));
    }
    Ok(counts)
}

/// Height of crossing slot t (top to bottom) on a wall with w slots.
fn slot_y(w: i64, t: i64, tweak: i64) -> BigRational {
    rat(16 * (w - 1 - 2 * t) + tweak, 32 * (w + 1))
}

/// Height of the horizontal run of above-arc t out of `total`.
fn above_y(total: i64, t: i64, tweak: i64) -> BigRational {
    rat(8 * (total + 1) + 16 * (total - t) + tweak, 16 * (total + 1))
}

/// Height of the upper run of hook s out of `total` around one puncture.
fn hook_y(total: i64, s: i64, tweak: i64) -> BigRational {
    rat(16 * (total - s) + tweak, 32 * (total + 1))
}

/// Turning offset of hook s from its puncture, strictly within (0, 1/4).
fn hook_dx(total: i64, s: i64, tweak: i64) -> BigRational {
    rat(16 * (total - s) + tweak, 64 * (total + 1))
}

struct Passage {
    a: (usize, i64),
    b: (usize, i64),
    /// Vertices from the `a` endpoint to the `b` endpoint.
    path: Vec<Pt>,
}

/// Arc over (sign +1) or under (sign -1) puncture j, joining the walls.
fn arc_path(j: usize, sy_l: BigRational, sy_r: BigRational, run_y: BigRational) -> Vec<Pt> {
    let j = j as i64;
    vec![
        pt(rat(2 * j - 1, 2), sy_l),
        pt(rat(4 * j - 1, 4), run_y.clone()),
        pt(rat(4 * j + 1, 4), run_y),
        pt(rat(2 * j + 1, 2), sy_r),
    ]
}

/// Hook around puncture j attached to the wall on the given side of it.
/// The turn sits on the far side of the puncture from the wall, past its
/// vertical rays but clear of the opposite wall's connector region.
fn hook_path(
    j: usize,
    wall_is_left: bool,
    sy_top: BigRational,
    sy_bot: BigRational,
    run_y: BigRational,
    dx: BigRational,
) -> Vec<Pt> {
    let ji = j as i64;
    let (xw, xc, xt) = if wall_is_left {
        (rat(2 * ji - 1, 2), rat(4 * ji - 1, 4), rat(ji, 1) + dx)
    } else {
        (rat(2 * ji + 1, 2), rat(4 * ji + 1, 4), rat(ji, 1) - dx)
    };
    vec![
        pt(xw.clone(), sy_top),
        pt(xc.clone(), run_y.clone()),
        pt(xt.clone(), run_y.clone()),
        pt(xt, -run_y.clone()),
        pt(xc, -run_y),
        pt(xw, sy_bot),
    ]
}

fn build_passages(counts: &SlabCounts, tweak: i64) -> (Vec<Passage>, Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let n = counts.n;
    let nw = n - 1;
    let mut passages: Vec<Passage> = Vec::new();
    let mut left_of: Vec<Vec<usize>> = counts
        .walls
        .iter()
        .map(|&w| vec![usize::MAX; w as usize])
        .collect();
    let mut right_of = left_of.clone();

    // End slab around puncture 1: nested hooks on the left of wall 0.
    let w = counts.walls[0];
    for s in 0..w / 2 {
        let idx = passages.len();
        passages.push(Passage {
            a: (0, s),
            b: (0, w - 1 - s),
            path: hook_path(
                1,
                false,
                slot_y(w, s, tweak),
                slot_y(w, w - 1 - s, tweak),
                hook_y(w / 2, s, tweak),
                hook_dx(w / 2, s, tweak),
            ),
        });
        left_of[0][s as usize] = idx;
        left_of[0][(w - 1 - s) as usize] = idx;
    }
    // End slab around puncture n.
    let w = counts.walls[nw - 1];
    for s in 0..w / 2 {
        let idx = passages.len();
        passages.push(Passage {
            a: (nw - 1, s),
            b: (nw - 1, w - 1 - s),
            path: hook_path(
                n,
                true,
                slot_y(w, s, tweak),
                slot_y(w, w - 1 - s, tweak),
                hook_y(w / 2, s, tweak),
                hook_dx(w / 2, s, tweak),
            ),
        });
        right_of[nw - 1][s as usize] = idx;
        right_of[nw - 1][(w - 1 - s) as usize] = idx;
    }

    for j in 2..n {
        let lw = j - 2;
        let rw = j - 1;
        let wl = counts.walls[lw];
        let wr = counts.walls[rw];
        let a = counts.above[j - 2];
        let bl = counts.below[j - 2];
        let lh = counts.lhooks[j - 2];
        let rh = counts.rhooks[j - 2];
        for t in 0..a {
            let idx = passages.len();
            passages.push(Passage {
                a: (lw, t),
                b: (rw, t),
                path: arc_path(j, slot_y(wl, t, tweak), slot_y(wr, t, tweak), above_y(a, t, tweak)),
            });
            right_of[lw][t as usize] = idx;
            left_of[rw][t as usize] = idx;
        }
        for t in 0..bl {
            let idx = passages.len();
            passages.push(Passage {
                a: (lw, wl - 1 - t),
                b: (rw, wr - 1 - t),
                path: arc_path(
                    j,
                    slot_y(wl, wl - 1 - t, tweak),
                    slot_y(wr, wr - 1 - t, tweak),
                    -above_y(bl, t, tweak),
                ),
            });
            right_of[lw][(wl - 1 - t) as usize] = idx;
            left_of[rw][(wr - 1 - t) as usize] = idx;
        }
        for s in 0..lh {
            let (top, bot) = (a + s, a + 2 * lh - 1 - s);
            let idx = passages.len();
            passages.push(Passage {
                a: (lw, top),
                b: (lw, bot),
                path: hook_path(
                    j,
                    true,
                    slot_y(wl, top, tweak),
                    slot_y(wl, bot, tweak),
                    hook_y(lh, s, tweak),
                    hook_dx(lh, s, tweak),
                ),
            });
            right_of[lw][top as usize] = idx;
            right_of[lw][bot as usize] = idx;
        }
        for s in 0..rh {
            let (top, bot) = (a + s, a + 2 * rh - 1 - s);
            let idx = passages.len();
            passages.push(Passage {
                a: (rw, top),
                b: (rw, bot),
                path: hook_path(
                    j,
                    false,
                    slot_y(wr, top, tweak),
                    slot_y(wr, bot, tweak),
                    hook_y(rh, s, tweak),
                    hook_dx(rh, s, tweak),
                ),
            });
            left_of[rw][top as usize] = idx;
            left_of[rw][bot as usize] = idx;
        }
    }

    debug_assert!(left_of.iter().flatten().all(|&p| p != usize::MAX));
    debug_assert!(right_of.iter().flatten().all(|&p| p != usize::MAX));
    (passages, left_of, right_of)
}

/// Closed polylines of the multicurve, one per component. Vertices are
/// exact; the closing edge from the last vertex back to the first is
/// implicit. Realizations with different tweak parities are in general
/// position with respect to each other.
pub(crate) fn realize(c: &LoopCoords, tweak: i64) -> Result<Vec<Vec<Pt>>> {
    let counts = slab_counts(c)?;
    let (passages, left_of, right_of) = build_passages(&counts, tweak);
    let mut seen = vec![false; passages.len()];
    let mut components = Vec::new();
    for start in 0..passages.len() {
        if seen[start] {
            continue;
        }
        let mut poly: Vec<Pt> = Vec::new();
        let mut pidx = start;
        let mut from = passages[start].a;
        loop {
            seen[pidx] = true;
            let p = &passages[pidx];
            let (to, path_iter): (_, Box<dyn Iterator<Item = &Pt>>) = if from == p.a {
                (p.b, Box::new(p.path.iter()))
            } else {
                (p.a, Box::new(p.path.iter().rev()))
            };
            for v in path_iter {
                if poly.last() != Some(v) {
                    poly.push(v.clone());
                }
            }
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
        // The trace re-enters the starting passage at its first vertex.
        if poly.last() == poly.first() {
            poly.pop();
        }
        components.push(poly);
    }
    Ok(components)
}

/// How many disjoint closed curves the vector describes.
pub(crate) fn component_count(c: &LoopCoords) -> Result<usize> {
    Ok(realize(c, 0)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::round_subset_coords;

    fn coords(n: usize, v: &[i64]) -> LoopCoords {
        LoopCoords::from_i64(n, v).unwrap()
    }

    fn round(n: usize, subset: &[usize]) -> LoopCoords {
        LoopCoords::new(n, round_subset_coords(n, subset)).unwrap()
    }

    #[test]
    fn round_curves_are_connected() {
        for (n, subset) in [
            (3, vec![1, 2]),
            (3, vec![1, 3]),
            (4, vec![2, 4]),
            (4, vec![1, 2, 3]),
            (5, vec![1, 3, 5]),
            (6, vec![2, 3, 5]),
        ] {
            assert_eq!(component_count(&round(n, &subset)).unwrap(), 1, "{subset:?}");
        }
    }

    #[test]
    fn scalar_multiples_are_parallel_copies() {
        let c = round(4, &[1, 3]);
        let doubled = coords(
            4,
            &c.coords().iter().map(|x| 2 * x.to_i64().unwrap()).collect::<Vec<_>>(),
        );
        assert_eq!(component_count(&doubled).unwrap(), 2);
        let c = round(5, &[2, 3]);
        let tripled = coords(
            5,
            &c.coords().iter().map(|x| 3 * x.to_i64().unwrap()).collect::<Vec<_>>(),
        );
        assert_eq!(component_count(&tripled).unwrap(), 3);
    }

    #[test]
    fn disjoint_union_coordinates_add() {
        // Round curves on {1,2} and {3,4} are disjoint, so the sum of their
        // vectors describes the two-component multicurve.
        let a = round(4, &[1, 2]);
        let b = round(4, &[3, 4]);
        let sum: Vec<i64> = a
            .coords()
            .iter()
            .zip(b.coords())
            .map(|(x, y)| (x + y).to_i64().unwrap())
            .collect();
        assert_eq!(component_count(&coords(4, &sum)).unwrap(), 2);
    }

    #[test]
    fn realized_polylines_close_up() {
        let c = round(5, &[2, 4]);
        let polys = realize(&c, 1).unwrap();
        assert_eq!(polys.len(), 1);
        let poly = &polys[0];
        assert!(poly.len() >= 8);
        // All vertices distinct from their successors.
        for k in 0..poly.len() {
            assert_ne!(poly[k], poly[(k + 1) % poly.len()]);
        }
    }
}
