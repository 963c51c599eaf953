//! Geometric intersection numbers via bigon reduction.
//!
//! Both curves are realized as exact polylines in general position, and
//! their transverse crossings are collected in order along each curve.
//! A pair of crossings that are consecutive along both curves bounds a
//! disk; if that disk contains no puncture the two crossings cancel under
//! isotopy, so the pair is discarded and the scan restarts. Consecutiveness
//! along both curves guarantees no other arc enters the disk, which is what
//! makes discarding exactly this pair sound. When no such pair remains the
//! curves are in minimal position and the count is the intersection number.

use crate::error::Result;
use crate::loops::LoopCoords;
use crate::realize::{realize, Pt};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Orientation sign of the triangle p, q, r.
fn orient(p: &Pt, q: &Pt, r: &Pt) -> i32 {
    let v = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    match v.cmp(&BigRational::zero()) {
        std::cmp::Ordering::Less => -1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Greater => 1,
    }
}

enum Meeting {
    Disjoint,
    /// Transverse crossing interior to both segments, with the parameter
    /// along each segment.
    Proper(BigRational, BigRational),
    /// Touching, collinear, or endpoint contact: retry with another tweak.
    Degenerate,
}

fn meet(p1: &Pt, q1: &Pt, p2: &Pt, q2: &Pt) -> Meeting {
    let d1 = orient(p1, q1, p2);
    let d2 = orient(p1, q1, q2);
    let d3 = orient(p2, q2, p1);
    let d4 = orient(p2, q2, q1);
    if d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0 {
        if d1 != d2 && d3 != d4 {
            // Solve p1 + t (q1 - p1) = p2 + s (q2 - p2) by Cramer's rule.
            let rx = &q1.x - &p1.x;
            let ry = &q1.y - &p1.y;
            let sx = &q2.x - &p2.x;
            let sy = &q2.y - &p2.y;
            let den = &rx * &sy - &ry * &sx;
            let dx = &p2.x - &p1.x;
            let dy = &p2.y - &p1.y;
            let t = (&dx * &sy - &dy * &sx) / &den;
            let s = (&dx * &ry - &dy * &rx) / &den;
            return Meeting::Proper(t, s);
        }
        return Meeting::Disjoint;
    }
    // Some triple is collinear. That is only harmless when the segments'
    // bounding boxes are disjoint.
    let (min1x, max1x) = minmax(&p1.x, &q1.x);
    let (min2x, max2x) = minmax(&p2.x, &q2.x);
    let (min1y, max1y) = minmax(&p1.y, &q1.y);
    let (min2y, max2y) = minmax(&p2.y, &q2.y);
    if max1x < min2x || max2x < min1x || max1y < min2y || max2y < min1y {
        return Meeting::Disjoint;
    }
    Meeting::Degenerate
}

fn minmax<'a>(a: &'a BigRational, b: &'a BigRational) -> (&'a BigRational, &'a BigRational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Position of a crossing along one multicurve: component, segment within
/// the component, parameter within the segment.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Place {
    comp: usize,
    seg: usize,
    t: BigRational,
}

struct Crossing {
    on_a: Place,
    on_b: Place,
    at: Pt,
}

fn segments(poly: &[Pt]) -> impl Iterator<Item = (usize, &Pt, &Pt)> {
    (0..poly.len()).map(move |k| (k, &poly[k], &poly[(k + 1) % poly.len()]))
}

fn boxes_touch(p1: &Pt, q1: &Pt, p2: &Pt, q2: &Pt) -> bool {
    let (min1, max1) = minmax(&p1.x, &q1.x);
    let (min2, max2) = minmax(&p2.x, &q2.x);
    if max1 < min2 || max2 < min1 {
        return false;
    }
    let (min1, max1) = minmax(&p1.y, &q1.y);
    let (min2, max2) = minmax(&p2.y, &q2.y);
    !(max1 < min2 || max2 < min1)
}

fn collect_crossings(a: &[Vec<Pt>], b: &[Vec<Pt>]) -> Option<Vec<Crossing>> {
    let mut out = Vec::new();
    for (ca, pa) in a.iter().enumerate() {
        for (cb, pb) in b.iter().enumerate() {
            for (ka, u1, v1) in segments(pa) {
                for (kb, u2, v2) in segments(pb) {
                    if !boxes_touch(u1, v1, u2, v2) {
                        continue;
                    }
                    match meet(u1, v1, u2, v2) {
                        Meeting::Disjoint => {}
                        Meeting::Degenerate => return None,
                        Meeting::Proper(t, s) => {
                            let at = Pt {
                                x: &u1.x + (&v1.x - &u1.x) * &t,
                                y: &u1.y + (&v1.y - &u1.y) * &t,
                            };
                            out.push(Crossing {
                                on_a: Place { comp: ca, seg: ka, t },
                                on_b: Place { comp: cb, seg: kb, t: s },
                                at,
                            });
                        }
                    }
                }
            }
        }
    }
    Some(out)
}

/// Vertices of the arc of `poly` from crossing `from` forward to crossing
/// `to` (both interior points of segments of the same component).
fn arc_between(poly: &[Pt], from: &Place, from_pt: &Pt, to: &Place, to_pt: &Pt) -> Vec<Pt> {
    let mut arc = vec![from_pt.clone()];
    if !(from.seg == to.seg && from.t < to.t) {
        let len = poly.len();
        let mut seg = from.seg;
        loop {
            seg = (seg + 1) % len;
            arc.push(poly[seg].clone());
            if seg == to.seg {
                break;
            }
        }
    }
    arc.push(to_pt.clone());
    arc
}

/// Signed crossings of the closed loop with the upward ray from (px, 0).
/// A leftward crossing above the puncture contributes +1.
fn winding(loop_pts: &[Pt], px: &BigRational) -> BigInt {
    let mut w = BigInt::zero();
    for k in 0..loop_pts.len() {
        let u = &loop_pts[k];
        let v = &loop_pts[(k + 1) % loop_pts.len()];
        let (lo, hi, sign) = if u.x < v.x {
            (&u.x, &v.x, -1)
        } else if v.x < u.x {
            (&v.x, &u.x, 1)
        } else {
            continue;
        };
        if lo < px && px < hi {
            let y_at = &u.y + (&v.y - &u.y) * (px - &u.x) / (&v.x - &u.x);
            debug_assert!(!y_at.is_zero(), "loop passes through a puncture");
            if y_at.is_positive() {
                w += sign;
            }
        }
    }
    w
}

/// Run bigon reduction on the crossing set and return how many survive.
fn reduce(a: &[Vec<Pt>], b: &[Vec<Pt>], crossings: Vec<Crossing>, n: usize) -> usize {
    let mut items: Vec<(Place, Place, Pt)> =
        crossings.into_iter().map(|c| (c.on_a, c.on_b, c.at)).collect();
    let punctures: Vec<BigRational> =
        (1..=n).map(|j| BigRational::from(BigInt::from(j as i64))).collect();
    'restart: loop {
        // Successor of each crossing in the cyclic order along its
        // component, separately for the two curves.
        let successors = |key: fn(&(Place, Place, Pt)) -> &Place, comps: usize| {
            let mut order: Vec<Vec<usize>> = vec![Vec::new(); comps];
            let mut idx: Vec<usize> = (0..items.len()).collect();
            idx.sort_by(|&x, &y| key(&items[x]).cmp(key(&items[y])));
            for i in idx {
                order[key(&items[i]).comp].push(i);
            }
            let mut succ = vec![usize::MAX; items.len()];
            for comp in &order {
                for (pos, &i) in comp.iter().enumerate() {
                    succ[i] = comp[(pos + 1) % comp.len()];
                }
            }
            succ
        };
        let succ_a = successors(|it| &it.0, a.len());
        let succ_b = successors(|it| &it.1, b.len());
        for i in 0..items.len() {
            let j = succ_a[i];
            if i == j {
                continue;
            }
            // i -> j is an empty gap along a. The pair bounds a bigon only
            // if some empty gap along b also joins them directly; when the
            // component carries just these two crossings, both of its gaps
            // are candidates.
            let mut b_arcs = Vec::new();
            if succ_b[j] == i {
                b_arcs.push(arc_between(
                    &b[items[j].1.comp],
                    &items[j].1,
                    &items[j].2,
                    &items[i].1,
                    &items[i].2,
                ));
            }
            if succ_b[i] == j {
                let mut arc = arc_between(
                    &b[items[i].1.comp],
                    &items[i].1,
                    &items[i].2,
                    &items[j].1,
                    &items[j].2,
                );
                arc.reverse();
                b_arcs.push(arc);
            }
            let a_arc = arc_between(
                &a[items[i].0.comp],
                &items[i].0,
                &items[i].2,
                &items[j].0,
                &items[j].2,
            );
            for b_arc in b_arcs {
                let mut loop_pts = a_arc.clone();
                loop_pts.extend(b_arc.into_iter().skip(1));
                loop_pts.pop();
                if punctures.iter().all(|px| winding(&loop_pts, px).is_zero()) {
                    let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                    items.swap_remove(hi);
                    items.swap_remove(lo);
                    continue 'restart;
                }
            }
        }
        return items.len();
    }
}

/// Geometric intersection number of the multicurves described by the two
/// vectors. Realizes both with exact coordinates, counts transverse
/// crossings, and removes all inessential pairs.
pub(crate) fn intersection_number(a: &LoopCoords, b: &LoopCoords) -> Result<usize> {
    assert_eq!(a.punctures(), b.punctures());
    if a.is_zero() || b.is_zero() {
        return Ok(0);
    }
    let n = a.punctures();
    for round in 0..8i64 {
        let pa = realize(a, 2 * round)?;
        let pb = realize(b, 2 * round + 1)?;
        if let Some(crossings) = collect_crossings(&pa, &pb) {
            debug_assert!(crossings.len() % 2 == 0);
            return Ok(reduce(&pa, &pb, crossings, n));
        }
    }
    unreachable!("no tweak produced a general-position realization");
}
